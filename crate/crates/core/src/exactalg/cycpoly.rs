use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::cyclotomic::Cyclotomic;
use crate::combinatorics::{HookParams, Symbol};

/// Polynomial in the alphabet variables with coefficients in `Q(ς)`, `ς` a primitive `m`-th root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    params: HookParams,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl CycPoly {
    pub fn zero(params: &HookParams) -> Self {
        CycPoly {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &HookParams, c: Cyclotomic) -> Self {
        let mut p = Self::zero(params);
        p.add_term(vec![0; params.n_symbols()], c);
        p
    }

    pub fn var(params: &HookParams, s: Symbol) -> Self {
        let mut z = vec![0; params.n_symbols()];
        z[s.index()] = 1;
        let mut p = Self::zero(params);
        p.add_term(z, Cyclotomic::one(params.m()));
        p
    }

    pub fn params(&self) -> &HookParams {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, z: &[u32]) -> Cyclotomic {
        self.terms
            .get(z)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.params.m()))
    }

    pub(crate) fn add_term(&mut self, z: Vec<u32>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let m = self.params.m();
        let slot = self.terms.entry(z.clone()).or_insert_with(|| Cyclotomic::zero(m));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&z);
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> CycPoly {
        let mut out = CycPoly::zero(&self.params);
        for (z, v) in &self.terms {
            out.add_term(z.clone(), v * c);
        }
        out
    }

    fn check(&self, other: &CycPoly) {
        assert!(
            self.params == other.params,
            "cyclotomic polynomials over different parameters"
        );
    }
}

impl Add for &CycPoly {
    type Output = CycPoly;
    fn add(self, rhs: &CycPoly) -> CycPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (z, c) in &rhs.terms {
            out.add_term(z.clone(), c.clone());
        }
        out
    }
}

impl Neg for &CycPoly {
    type Output = CycPoly;
    fn neg(self) -> CycPoly {
        CycPoly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(z, c)| (z.clone(), -c)).collect(),
        }
    }
}

impl Sub for &CycPoly {
    type Output = CycPoly;
    fn sub(self, rhs: &CycPoly) -> CycPoly {
        self + &(-rhs)
    }
}

impl Mul for &CycPoly {
    type Output = CycPoly;
    fn mul(self, rhs: &CycPoly) -> CycPoly {
        self.check(rhs);
        let mut out = CycPoly::zero(&self.params);
        for (za, ca) in &self.terms {
            for (zb, cb) in &rhs.terms {
                let z = za.iter().zip(zb).map(|(a, b)| a + b).collect();
                out.add_term(z, ca * cb);
            }
        }
        out
    }
}

/// `(E(3))*x1.1^2 + (-1)*y1.2`; coefficients always parenthesized.
impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (z, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = z
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(j, &e)| {
                    let name = self.params.symbol_name(Symbol::from_index(j));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
