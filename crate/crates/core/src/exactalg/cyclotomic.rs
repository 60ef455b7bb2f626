use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Coefficients of the `m`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: usize) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Phi_d with d | m, d < m
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m + 1];
    num[0] = -BigInt::one();
    num[m] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(m, p.clone());
    p
}

/// Exact quotient of `a` by the monic polynomial `b`.
fn divide_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for i in (0..quo.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

/// An element of `Q(ς)` for a primitive `m`-th root of unity `ς`.
///
/// Stored as the coefficients of the unique representative of degree below
/// `deg Phi_m`, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(m: usize) -> Self {
        let deg = cyclotomic_polynomial(m).len() - 1;
        Cyclotomic {
            m,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    pub fn from_rational(m: usize, c: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = c;
        z
    }

    pub fn one(m: usize) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    /// `ς^e`, for any integer `e`.
    pub fn root_power(m: usize, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(m, raw)
    }

    /// Reduces an arbitrary polynomial in `ς` modulo `Phi_m`.
    pub fn reduce(m: usize, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        for i in (deg..raw.len()).rev() {
            let c = std::mem::take(&mut raw[i]);
            if c.is_zero() {
                continue;
            }
            // ς^i = ς^{i-deg} * (ς^deg) and ς^deg = -Σ_{j<deg} phi_j ς^j
            for j in 0..deg {
                if !phi[j].is_zero() {
                    raw[i - deg + j] -= &c * BigRational::from_integer(phi[j].clone());
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        Cyclotomic { m, coeffs: raw }
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// Coefficients of `1, ς, ς^2, …` in the reduced representative.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, when it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Complex conjugation `ς ↦ ς^{-1}`.
    pub fn conj(&self) -> Self {
        let mut raw = vec![BigRational::zero(); self.m];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(self.m - j) % self.m] += c;
        }
        Self::reduce(self.m, raw)
    }

    /// `|z|^2 = z * conj(z)`.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.m, other.m,
            "cyclotomic numbers of different orders {} and {}",
            self.m, other.m
        );
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let n = self.coeffs.len();
        let mut raw = vec![BigRational::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(self.m, raw)
    }
}

/// GAP notation: `E(m)` is `ς`, e.g. `1 - 2*E(3)^2`; rational values print as rationals.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let root = match j {
                0 => String::new(),
                1 => format!("E({})", self.m),
                _ => format!("E({})^{j}", self.m),
            };
            if root.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{a}*{root}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}
