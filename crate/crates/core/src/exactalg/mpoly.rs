use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cycpoly::CycPoly;
use super::cyclotomic::Cyclotomic;
use crate::combinatorics::{HookParams, Symbol};
use crate::error::{param_err, Error, Result};

/// Exponent vector laid out as `[q, Q_1..Q_m, z_1..z_N]`.
///
/// Only the `q` slot may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<i32>);

impl Monomial {
    pub fn q_exp(&self) -> i32 {
        self.0[0]
    }

    pub fn big_q_exps(&self, m: usize) -> &[i32] {
        &self.0[1..=m]
    }

    pub fn z_exps(&self, m: usize) -> &[i32] {
        &self.0[1 + m..]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Exact sparse polynomial over the rationals in `q^{±1}`, `Q_1..Q_m` and the
/// alphabet variables `z_1..z_N` of a [`HookParams`].
///
/// Operands must share the same parameters; the operator impls panic on a
/// mismatch, the `try_*` methods return a parameter error instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    params: HookParams,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MPoly {
    pub fn zero(params: &HookParams) -> Self {
        MPoly {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn width(params: &HookParams) -> usize {
        1 + params.m() + params.n_symbols()
    }

    fn unit_monomial(params: &HookParams) -> Monomial {
        Monomial(vec![0; Self::width(params)])
    }

    pub fn constant(params: &HookParams, c: BigRational) -> Self {
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(Self::unit_monomial(params), c);
        }
        p
    }

    pub fn one(params: &HookParams) -> Self {
        Self::constant(params, BigRational::one())
    }

    pub fn integer(params: &HookParams, n: i64) -> Self {
        Self::constant(params, rat(n))
    }

    /// `q^e`.
    pub fn q_pow(params: &HookParams, e: i32) -> Self {
        let mut mono = Self::unit_monomial(params);
        mono.0[0] = e;
        Self::from_term(params, mono, BigRational::one())
    }

    pub fn q(params: &HookParams) -> Self {
        Self::q_pow(params, 1)
    }

    /// `Q_a^e`, `a` 1-based.
    pub fn big_q_pow(params: &HookParams, a: usize, e: u32) -> Self {
        assert!((1..=params.m()).contains(&a), "Q index {a} outside 1..={}", params.m());
        let mut mono = Self::unit_monomial(params);
        mono.0[a] = e as i32;
        Self::from_term(params, mono, BigRational::one())
    }

    /// The variable `z_s`.
    pub fn var(params: &HookParams, s: Symbol) -> Self {
        assert!(params.contains(s), "symbol {} outside the alphabet", s.0);
        let mut mono = Self::unit_monomial(params);
        mono.0[1 + params.m() + s.index()] = 1;
        Self::from_term(params, mono, BigRational::one())
    }

    /// `c · q^{e_q} · Q^{e_Q} · z^{e_z}`.
    pub fn monomial(
        params: &HookParams,
        c: BigRational,
        q: i32,
        big_q: &[u32],
        z: &[u32],
    ) -> Result<Self> {
        if big_q.len() != params.m() || z.len() != params.n_symbols() {
            return param_err(format!(
                "exponent vector lengths ({}, {}) do not match m = {} and {} symbols",
                big_q.len(),
                z.len(),
                params.m(),
                params.n_symbols()
            ));
        }
        let mut e = vec![q];
        e.extend(big_q.iter().map(|&x| x as i32));
        e.extend(z.iter().map(|&x| x as i32));
        Ok(Self::from_term(params, Monomial(e), c))
    }

    pub(crate) fn from_term(params: &HookParams, mono: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn params(&self) -> &HookParams {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// True when no alphabet variable occurs.
    pub fn is_scalar(&self) -> bool {
        let m = self.params.m();
        self.terms.keys().all(|k| k.z_exps(m).iter().all(|&e| e == 0))
    }

    /// The rational value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                k.0.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn same_universe(&self, other: &MPoly) -> Result<()> {
        if self.params != other.params {
            return param_err(format!(
                "polynomials over different parameters ({} vs {})",
                self.params, other.params
            ));
        }
        Ok(())
    }

    fn add_term(&mut self, mono: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.same_universe(other)?;
        let mut out = MPoly::zero(&self.params);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.mul(kb), ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &MPoly) {
        self.same_universe(other).expect("MPoly add");
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.params);
        }
        MPoly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(&self.params);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Total degree in the alphabet variables of each term, if all agree.
    pub fn z_degree(&self) -> Option<i32> {
        let m = self.params.m();
        let mut degs = self.terms.keys().map(|k| k.z_exps(m).iter().sum::<i32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// The coefficient (a polynomial in `q`, `Q`) of the alphabet monomial `z^e`.
    pub fn coefficient_of(&self, z: &[u32]) -> Result<MPoly> {
        let m = self.params.m();
        if z.len() != self.params.n_symbols() {
            return param_err(format!(
                "monomial has {} exponents, expected {}",
                z.len(),
                self.params.n_symbols()
            ));
        }
        let mut out = MPoly::zero(&self.params);
        for (k, c) in &self.terms {
            if k.z_exps(m).iter().zip(z).all(|(&a, &b)| a == b as i32) {
                let mut kk = k.clone();
                kk.0[1 + m..].iter_mut().for_each(|e| *e = 0);
                out.add_term(kk, c.clone());
            }
        }
        Ok(out)
    }

    /// Groups the terms by alphabet monomial: `z^e ↦ coefficient in q, Q`.
    pub fn by_z_monomial(&self) -> BTreeMap<Vec<u32>, MPoly> {
        let m = self.params.m();
        let mut out: BTreeMap<Vec<u32>, MPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let z: Vec<u32> = k.z_exps(m).iter().map(|&e| e as u32).collect();
            let mut kk = k.clone();
            kk.0[1 + m..].iter_mut().for_each(|e| *e = 0);
            out.entry(z)
                .or_insert_with(|| MPoly::zero(&self.params))
                .add_term(kk, c.clone());
        }
        out
    }

    /// Multiplies by the alphabet monomial `z^e`.
    pub fn mul_z_monomial(&self, z: &[u32]) -> MPoly {
        let m = self.params.m();
        MPoly {
            params: self.params.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut kk = k.clone();
                    for (e, &d) in kk.0[1 + m..].iter_mut().zip(z) {
                        *e += d as i32;
                    }
                    (kk, c.clone())
                })
                .collect(),
        }
    }

    /// Image under `q ↦ 1`, `Q_a ↦ ς^a` with `ς` a primitive `m`-th root of unity.
    pub fn specialize(&self) -> CycPoly {
        let m = self.params.m();
        let mut out = CycPoly::zero(&self.params);
        for (k, c) in &self.terms {
            let e: i64 = k
                .big_q_exps(m)
                .iter()
                .enumerate()
                .map(|(a, &x)| (a as i64 + 1) * x as i64)
                .sum();
            let z: Vec<u32> = k.z_exps(m).iter().map(|&e| e as u32).collect();
            out.add_term(z, Cyclotomic::root_power(m, e).scale(c));
        }
        out
    }

    /// Moves the polynomial to another parameter set with the same `m` and alphabet size.
    pub fn with_params(&self, params: &HookParams) -> Result<MPoly> {
        if params.m() != self.params.m() || params.n_symbols() != self.params.n_symbols() {
            return param_err("parameter sets have different variable universes");
        }
        Ok(MPoly {
            params: params.clone(),
            terms: self.terms.clone(),
        })
    }

    /// The first monomial (in canonical print order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &MPoly) -> Option<String> {
        let diff = self.try_sub(other).ok()?;
        let first = diff.sorted_terms().into_iter().next()?;
        let (k, _) = first;
        let lhs = self.terms.get(k).cloned().unwrap_or_else(BigRational::zero);
        let rhs = other.terms.get(k).cloned().unwrap_or_else(BigRational::zero);
        Some(format!(
            "{}: {lhs} vs {rhs}",
            self.monomial_string(k).unwrap_or_else(|| "1".into())
        ))
    }

    /// Terms in canonical order: alphabet part graded-lex descending, then `Q`
    /// part likewise, then `q` exponent descending.
    pub(crate) fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let m = self.params.m();
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| canonical_cmp(a, b, m));
        v
    }

    fn factor_strings(&self, k: &Monomial, with_z: bool, with_qq: bool) -> Vec<String> {
        let m = self.params.m();
        let mut out = Vec::new();
        let power = |name: String, e: i32| {
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        };
        if with_qq {
            if k.q_exp() != 0 {
                out.push(power("q".into(), k.q_exp()));
            }
            for (a, &e) in k.big_q_exps(m).iter().enumerate() {
                if e != 0 {
                    out.push(power(format!("Q{}", a + 1), e));
                }
            }
        }
        if with_z {
            for (i, &e) in k.z_exps(m).iter().enumerate() {
                if e != 0 {
                    out.push(power(self.params.symbol_name(Symbol::from_index(i)), e));
                }
            }
        }
        out
    }

    fn monomial_string(&self, k: &Monomial) -> Option<String> {
        let f = self.factor_strings(k, true, true);
        (!f.is_empty()).then(|| f.join("*"))
    }

    /// JSON term-list form.
    pub fn to_json(&self) -> MPolyJson {
        let m = self.params.m();
        MPolyJson {
            params: self.params.to_string(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(k, c)| TermJson {
                    coeff: c.to_string(),
                    q: k.q_exp(),
                    big_q: k.big_q_exps(m).iter().map(|&e| e as u32).collect(),
                    z: k.z_exps(m).iter().map(|&e| e as u32).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &MPolyJson) -> Result<MPoly> {
        let params: HookParams = json.params.parse()?;
        let mut out = MPoly::zero(&params);
        for t in &json.terms {
            let c: BigRational = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_assign_ref(&MPoly::monomial(&params, c, t.q, &t.big_q, &t.z)?);
        }
        Ok(out)
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial, m: usize) -> Ordering {
    let graded = |x: &[i32], y: &[i32]| {
        let (dx, dy): (i32, i32) = (x.iter().sum(), y.iter().sum());
        dy.cmp(&dx).then_with(|| y.cmp(x))
    };
    graded(a.z_exps(m), b.z_exps(m))
        .then_with(|| graded(a.big_q_exps(m), b.big_q_exps(m)))
        .then_with(|| b.q_exp().cmp(&a.q_exp()))
}

/// Serialized form: parameters plus a list of terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPolyJson {
    pub params: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// Rational coefficient, `"3"` or `"-1/2"`.
    pub coeff: String,
    pub q: i32,
    #[serde(rename = "Q")]
    pub big_q: Vec<u32>,
    pub z: Vec<u32>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Canonical text: terms grouped by alphabet monomial, e.g.
/// `q*x1^2 - (q - q^-1)*x1*y1 - q^-1*y1^2`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.params.m();
        let sorted = self.sorted_terms();
        // consecutive runs with equal alphabet part
        let mut groups: Vec<Vec<(&Monomial, &BigRational)>> = Vec::new();
        for t in sorted {
            match groups.last_mut() {
                Some(g) if g[0].0.z_exps(m) == t.0.z_exps(m) => g.push(t),
                _ => groups.push(vec![t]),
            }
        }
        let mut first = true;
        for g in groups {
            let zpart = self.factor_strings(g[0].0, true, false);
            if g.len() == 1 || zpart.is_empty() {
                for (k, c) in g {
                    let mut factors = self.factor_strings(k, false, true);
                    factors.extend(zpart.iter().cloned());
                    write_signed(f, &mut first, c, factors)?;
                }
                continue;
            }
            // several coefficients on one alphabet monomial: parenthesize
            let neg = g[0].1.is_negative();
            let mut inner = String::new();
            let mut inner_first = true;
            for (k, c) in &g {
                let c = if neg { -(*c).clone() } else { (*c).clone() };
                let factors = self.factor_strings(k, false, true);
                let mut buf = String::new();
                write_signed(&mut buf, &mut inner_first, &c, factors)?;
                inner.push_str(&buf);
            }
            if first {
                write!(f, "{}", if neg { "-" } else { "" })?;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            write!(f, "({inner})*{}", zpart.join("*"))?;
        }
        Ok(())
    }
}

fn write_signed(
    f: &mut impl fmt::Write,
    first: &mut bool,
    c: &BigRational,
    factors: Vec<String>,
) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    match (*first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    *first = false;
    if factors.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{}", factors.join("*"))
    } else {
        write!(f, "{a}*{}", factors.join("*"))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("MPoly add")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_sub(rhs).expect("MPoly sub")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("MPoly mul")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&rat(-1))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p11() -> HookParams {
        "1|1".parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let p = p11();
        let q = MPoly::q(&p);
        let qi = MPoly::q_pow(&p, -1);
        assert_eq!(&(&q - &qi) * &(&q + &qi), &MPoly::q_pow(&p, 2) - &MPoly::q_pow(&p, -2));
        let x = MPoly::var(&p, Symbol(1));
        let y = MPoly::var(&p, Symbol(2));
        assert_eq!(&(&x - &y) * &(&x + &y), &x.pow(2) - &y.pow(2));
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn mismatched_universe_is_an_error() {
        let a = MPoly::q(&p11());
        let b = MPoly::q(&"2|1".parse().unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::Parameter(_))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let p = p11();
        let q = MPoly::q(&p);
        let x = MPoly::var(&p, Symbol(1));
        let y = MPoly::var(&p, Symbol(2));
        let f = &(&q * &x.pow(2)) - &(&MPoly::q_pow(&p, -1) * &y.pow(2));
        assert_eq!(f.coefficient_of(&[2, 0]).unwrap(), q);
        let g = &MPoly::big_q_pow(&p, 1, 1) * &(&x - &y);
        assert_eq!(g.coefficient_of(&[0, 1]).unwrap(), -&MPoly::big_q_pow(&p, 1, 1));
        assert!(g.coefficient_of(&[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn canonical_strings() {
        let p = p11();
        let q = MPoly::q(&p);
        let qi = MPoly::q_pow(&p, -1);
        let x = MPoly::var(&p, Symbol(1));
        let y = MPoly::var(&p, Symbol(2));
        let f = &(&(&q * &x.pow(2)) - &(&(&q - &qi) * &(&x * &y))) - &(&qi * &y.pow(2));
        assert_eq!(f.to_string(), "q*x1^2 - (q - q^-1)*x1*y1 - q^-1*y1^2");
        let big: HookParams = "1|1,1|2,1|3".parse().unwrap();
        let w = &(&MPoly::q_pow(&big, -2) * &MPoly::big_q_pow(&big, 1, 3))
            * &(&MPoly::big_q_pow(&big, 2, 4) * &MPoly::big_q_pow(&big, 3, 13));
        assert_eq!(w.to_string(), "q^-2*Q1^3*Q2^4*Q3^13");
        assert_eq!(MPoly::zero(&p).to_string(), "0");
        assert_eq!((&q - &qi).to_string(), "q - q^-1");
        assert_eq!(MPoly::integer(&p, -3).to_string(), "-3");
    }

    #[test]
    fn specialization_examples() {
        let p = p11();
        assert!((&MPoly::q(&p) - &MPoly::q_pow(&p, -1)).specialize().is_zero());
        let p2: HookParams = "1|0,1|0".parse().unwrap();
        let s = &MPoly::big_q_pow(&p2, 1, 1) + &MPoly::big_q_pow(&p2, 2, 1);
        assert!(s.specialize().is_zero());
        let p3: HookParams = "1|0,1|0,1|0".parse().unwrap();
        let prod = &(&MPoly::big_q_pow(&p3, 1, 1) * &MPoly::big_q_pow(&p3, 2, 1)) * &MPoly::big_q_pow(&p3, 3, 1);
        assert_eq!(prod.specialize(), CycPoly::constant(&p3, Cyclotomic::one(3)));
    }

    #[test]
    fn json_round_trip() {
        let p: HookParams = "1|1,0|2".parse().unwrap();
        let f = &(&MPoly::q_pow(&p, -3) * &MPoly::var(&p, Symbol(3))) + &MPoly::big_q_pow(&p, 2, 2).scale(&BigRational::new(3.into(), 2.into()));
        let json = serde_json::to_string(&f.to_json()).unwrap();
        let back: MPolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(MPoly::from_json(&back).unwrap(), f);
    }
}
