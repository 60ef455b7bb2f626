use serde::Serialize;

use super::{row_weight, ParitySequence};
use crate::combinatorics::{HookParams, Parity, Symbol};
use crate::error::{param_err, Result};
use crate::exactalg::{rat, MPoly};

/// A weakly increasing word, stored as its exponent vector `(α;β)` over the alphabet.
///
/// `α` collects the exponents of the even letters and `β` those of the odd letters,
/// colour by colour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SortedComposition {
    params: HookParams,
    exps: Vec<u32>,
}

impl SortedComposition {
    pub fn new(params: &HookParams, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != params.n_symbols() {
            return param_err(format!(
                "exponent vector of length {} for {} symbols",
                exps.len(),
                params.n_symbols()
            ));
        }
        Ok(SortedComposition {
            params: params.clone(),
            exps,
        })
    }

    pub fn from_sequence(i: &ParitySequence) -> Self {
        let mut exps = vec![0; i.params().n_symbols()];
        for s in i.symbols() {
            exps[s.index()] += 1;
        }
        SortedComposition {
            params: i.params().clone(),
            exps,
        }
    }

    /// Every exponent vector of total `t`, i.e. `C(t; k+l)`.
    pub fn all(params: &HookParams, t: u32) -> Vec<SortedComposition> {
        fn rec(rest: u32, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if slot + 1 == cur.len() {
                cur[slot] = rest;
                out.push(cur.clone());
                return;
            }
            for e in (0..=rest).rev() {
                cur[slot] = e;
                rec(rest - e, slot + 1, cur, out);
            }
        }
        let n = params.n_symbols();
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(t, 0, &mut vec![0; n], &mut out);
        out.into_iter()
            .map(|exps| SortedComposition {
                params: params.clone(),
                exps,
            })
            .collect()
    }

    pub fn params(&self) -> &HookParams {
        &self.params
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn of_parity(&self, parity: Parity) -> impl Iterator<Item = u32> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(move |(i, _)| self.params.parity(Symbol::from_index(*i)) == parity)
            .map(|(_, &e)| e)
    }

    /// `|α|`.
    pub fn alpha_size(&self) -> u32 {
        self.of_parity(Parity::Even).sum()
    }

    /// `|β|`.
    pub fn beta_size(&self) -> u32 {
        self.of_parity(Parity::Odd).sum()
    }

    /// `ℓ(α)`: number of nonzero even exponents.
    pub fn alpha_len(&self) -> u32 {
        self.of_parity(Parity::Even).filter(|&e| e > 0).count() as u32
    }

    /// `ℓ(β)`.
    pub fn beta_len(&self) -> u32 {
        self.of_parity(Parity::Odd).filter(|&e| e > 0).count() as u32
    }

    /// Largest colour with a nonzero exponent.
    pub fn max_color(&self) -> Option<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| self.params.color(Symbol::from_index(i)))
    }

    /// The weakly increasing word.
    pub fn to_sequence(&self) -> ParitySequence {
        let symbols = self
            .exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(Symbol::from_index(i)).take(e as usize))
            .collect();
        ParitySequence::new(&self.params, symbols).expect("symbols in range")
    }

    /// `x^α (−y)^β`.
    pub fn signed_monomial(&self) -> MPoly {
        let sign = if self.beta_size() % 2 == 0 { 1 } else { -1 };
        MPoly::one(&self.params)
            .mul_z_monomial(&self.exps)
            .scale(&rat(sign))
    }
}

/// `(−q^{-1})^{|β|−ℓ(β)} q^{|α|−ℓ(α)} (q−q^{-1})^{ℓ(α;β)−1}`.
pub fn tilde_q_prefactor(c: &SortedComposition) -> Result<MPoly> {
    let p = c.params();
    let len = c.alpha_len() + c.beta_len();
    if len == 0 {
        return param_err("the prefactor needs a nonempty composition");
    }
    let b = c.beta_size() - c.beta_len();
    let a = c.alpha_size() - c.alpha_len();
    let sign = if b % 2 == 0 { 1 } else { -1 };
    let head = MPoly::q_pow(p, a as i32 - b as i32).scale(&rat(sign));
    let diff = &MPoly::q(p) - &MPoly::q_pow(p, -1);
    Ok(&head * &diff.pow(len - 1))
}

/// Both sides of the permutation-sum identity for one sorted word.
#[derive(Clone, Debug, Serialize)]
pub struct PermutationSumReport {
    pub composition: Vec<u32>,
    pub arrangements: usize,
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub pass: bool,
}

/// Sums `row_weight` over the distinct rearrangements of the sorted word and
/// compares with the prefactor.
pub fn permutation_sum_check(sorted: &SortedComposition) -> Result<PermutationSumReport> {
    let params = sorted.params();
    let rhs = tilde_q_prefactor(sorted)?;
    let mut word: Vec<Symbol> = sorted.to_sequence().symbols().to_vec();
    let mut lhs = MPoly::zero(params);
    let mut arrangements = 0;
    loop {
        lhs.add_assign_ref(&row_weight(params, &word));
        arrangements += 1;
        if !next_permutation(&mut word) {
            break;
        }
    }
    let pass = lhs == rhs;
    Ok(PermutationSumReport {
        composition: sorted.exps().to_vec(),
        arrangements,
        lhs,
        rhs,
        pass,
    })
}

/// Advances to the next distinct permutation in lexicographic order.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(params: &str, exps: &[u32]) -> SortedComposition {
        SortedComposition::new(&params.parse().unwrap(), exps.to_vec()).unwrap()
    }

    #[test]
    fn prefactors() {
        let c = comp("1|1", &[2, 0]);
        assert_eq!(tilde_q_prefactor(&c).unwrap().to_string(), "q");
        let c = comp("1|1", &[1, 1]);
        assert_eq!(tilde_q_prefactor(&c).unwrap().to_string(), "q - q^-1");
        let c = comp("1|1", &[0, 2]);
        assert_eq!(tilde_q_prefactor(&c).unwrap().to_string(), "-q^-1");
        assert!(tilde_q_prefactor(&comp("1|1", &[0, 0])).is_err());
    }

    #[test]
    fn permutation_sums_small() {
        for exps in [[2, 0], [1, 1], [0, 2], [1, 0], [3, 1], [2, 2]] {
            let r = permutation_sum_check(&comp("1|1", &exps)).unwrap();
            assert!(r.pass, "{exps:?}: {} vs {}", r.lhs, r.rhs);
        }
        let r = permutation_sum_check(&comp("1|1", &[1, 1])).unwrap();
        assert_eq!(r.arrangements, 2);
    }

    #[test]
    fn composition_counts() {
        let p: HookParams = "1|1,0|1".parse().unwrap();
        assert_eq!(SortedComposition::all(&p, 2).len(), 6);
        let c = comp("1|1,0|1", &[0, 2, 1]);
        assert_eq!((c.alpha_size(), c.beta_size(), c.alpha_len(), c.beta_len()), (0, 3, 0, 2));
        assert_eq!(c.max_color(), Some(2));
        assert_eq!(c.to_sequence().to_string(), "2,2,3");
        assert_eq!(c.signed_monomial().to_string(), "-y1.1^2*y1.2");
    }

    #[test]
    fn distinct_permutations() {
        let mut v = vec![1, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 3);
    }
}
