//! Parity-integer sequences and their weights.

pub(crate) mod composition;

use std::fmt;

use crate::combinatorics::{superstandard, HookParams, Multipartition, Parity, Symbol};
use crate::error::{param_err, parse_err, Result};
use crate::exactalg::{rat, MPoly};

pub use composition::{permutation_sum_check, tilde_q_prefactor, PermutationSumReport, SortedComposition};

/// A word over the alphabet of a [`HookParams`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParitySequence {
    params: HookParams,
    symbols: Vec<Symbol>,
}

impl ParitySequence {
    pub fn new(params: &HookParams, symbols: Vec<Symbol>) -> Result<Self> {
        if let Some(s) = symbols.iter().find(|s| !params.contains(**s)) {
            return param_err(format!(
                "symbol {} outside 1..={}",
                s.0,
                params.n_symbols()
            ));
        }
        Ok(ParitySequence {
            params: params.clone(),
            symbols,
        })
    }

    /// From 1-based indices.
    pub fn from_indices(params: &HookParams, idx: &[u16]) -> Result<Self> {
        Self::new(params, idx.iter().map(|&i| Symbol(i)).collect())
    }

    /// Parses `1,3,2` or `x1.1,y1.3` (names as printed by [`HookParams::symbol_name`]).
    pub fn parse(s: &str, params: &HookParams) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParitySequence {
                params: params.clone(),
                symbols: Vec::new(),
            });
        }
        let symbols = s
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| params.parse_symbol(t))
            .collect::<Result<Vec<_>>>()?;
        if symbols.is_empty() {
            return parse_err("empty sequence");
        }
        Ok(ParitySequence {
            params: params.clone(),
            symbols,
        })
    }

    pub fn params(&self) -> &HookParams {
        &self.params
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `ℓ_0(i)` and `ℓ_1(i)`: numbers of even and odd letters.
    pub fn parity_counts(&self) -> (usize, usize) {
        let odd = self
            .symbols
            .iter()
            .filter(|&&s| self.params.parity(s).is_odd())
            .count();
        (self.len() - odd, odd)
    }

    /// Colour of the largest letter.
    pub fn max_color(&self) -> Option<usize> {
        self.symbols.iter().max().map(|&s| self.params.color(s))
    }

    /// All `N^t` words of length `t`, in lexicographic order.
    pub fn all(params: &HookParams, t: usize) -> impl Iterator<Item = ParitySequence> + '_ {
        let n = params.n_symbols();
        let total = (n as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
        (0..if n == 0 && t > 0 { 0 } else { total }).map(move |code| {
            Self::from_code(params, t, code)
        })
    }

    /// The `code`-th word of length `t` in lexicographic order.
    pub fn from_code(params: &HookParams, t: usize, mut code: u64) -> ParitySequence {
        let n = params.n_symbols() as u64;
        let mut symbols = vec![Symbol(1); t];
        for slot in symbols.iter_mut().rev() {
            *slot = Symbol((code % n) as u16 + 1);
            code /= n;
        }
        ParitySequence {
            params: params.clone(),
            symbols,
        }
    }
}

/// `1,3,2`.
impl fmt::Display for ParitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.0.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Peak position (1-based) of an up-down word: strictly increasing up to it and
/// weakly decreasing after it. `None` when the word is not up-down.
pub fn updown_peak(row: &[Symbol]) -> Result<Option<usize>> {
    if row.is_empty() {
        return param_err("peak of an empty row");
    }
    let mut p = 1;
    while p < row.len() && row[p - 1] < row[p] {
        p += 1;
    }
    let tail_ok = row[p - 1..].windows(2).all(|w| w[0] >= w[1]);
    Ok(tail_ok.then_some(p))
}

/// Factor of one non-peak position: `−q^{-1}` or `q`.
fn position_factor(params: &HookParams, s: Symbol, before_peak: bool) -> (i32, i32) {
    // (sign, q exponent)
    match (params.parity(s), before_peak) {
        (Parity::Even, true) | (Parity::Odd, false) => (-1, -1),
        (Parity::Odd, true) | (Parity::Even, false) => (1, 1),
    }
}

fn signed_q_power(params: &HookParams, sign: i32, e: i32) -> MPoly {
    MPoly::q_pow(params, e).scale(&rat(sign as i64))
}

/// Weight of a row: zero unless up-down; otherwise the product over the positions
/// before the peak of `−q^{-1}` (even letter) or `q` (odd letter), and over the
/// positions after it of `q` (even) or `−q^{-1}` (odd).
pub fn row_weight(params: &HookParams, row: &[Symbol]) -> MPoly {
    let Ok(Some(p)) = updown_peak(row) else {
        return if row.is_empty() {
            MPoly::one(params)
        } else {
            MPoly::zero(params)
        };
    };
    let (mut sign, mut e) = (1, 0);
    for (j, &s) in row.iter().enumerate() {
        if j + 1 == p {
            continue;
        }
        let (sg, de) = position_factor(params, s, j + 1 < p);
        sign *= sg;
        e += de;
    }
    signed_q_power(params, sign, e)
}

/// `wt_mu(i)`: product over the rows of `t^mu` of the row weight times
/// `Q_{colour of the peak}^{component of the row}`; zero unless every row is up-down.
pub fn mu_weight_sequence(i: &ParitySequence, mu: &Multipartition) -> Result<MPoly> {
    let params = i.params();
    if i.len() != mu.size() {
        return param_err(format!(
            "sequence of length {} against a shape of size {}",
            i.len(),
            mu.size()
        ));
    }
    if mu.m() != params.m() {
        return param_err(format!(
            "shape has {} components but parameters have m = {}",
            mu.m(),
            params.m()
        ));
    }
    let t = superstandard(mu);
    let mut out = MPoly::one(params);
    for seg in &t.rows {
        let row = &i.symbols()[seg.range()];
        let w = row_weight(params, row);
        if w.is_zero() {
            return Ok(w);
        }
        let peak = *row.iter().max().expect("rows are nonempty");
        out = &(&out * &w) * &MPoly::big_q_pow(params, params.color(peak), seg.comp as u32);
    }
    Ok(out)
}

/// `z_i = (−1)^{#odd letters} z_{i_1} ⋯ z_{i_t}`.
pub fn z_monomial(i: &ParitySequence) -> MPoly {
    let params = i.params();
    let mut z = vec![0u32; params.n_symbols()];
    for s in i.symbols() {
        z[s.index()] += 1;
    }
    let sign = if i.parity_counts().1 % 2 == 0 { 1 } else { -1 };
    MPoly::one(params).mul_z_monomial(&z).scale(&rat(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(v: &[u16]) -> Vec<Symbol> {
        v.iter().map(|&i| Symbol(i)).collect()
    }

    #[test]
    fn peaks() {
        assert_eq!(updown_peak(&syms(&[6, 7, 9])).unwrap(), Some(3));
        assert_eq!(updown_peak(&syms(&[2, 2])).unwrap(), Some(1));
        assert_eq!(updown_peak(&syms(&[8, 6, 5, 7])).unwrap(), None);
        assert_eq!(updown_peak(&syms(&[4])).unwrap(), Some(1));
        assert_eq!(updown_peak(&syms(&[1, 3, 3])).unwrap(), Some(2));
        assert!(updown_peak(&[]).is_err());
    }

    #[test]
    fn row_weights() {
        let p: HookParams = "1|1".parse().unwrap();
        assert_eq!(row_weight(&p, &syms(&[1])), MPoly::one(&p));
        assert_eq!(row_weight(&p, &syms(&[2])), MPoly::one(&p));
        assert_eq!(row_weight(&p, &syms(&[1, 2])), MPoly::parse("-q^-1", &p).unwrap());
        assert_eq!(row_weight(&p, &syms(&[2, 1])), MPoly::q(&p));
        assert_eq!(row_weight(&p, &syms(&[2, 2])), MPoly::parse("-q^-1", &p).unwrap());
        assert_eq!(row_weight(&p, &syms(&[1, 2, 1])), MPoly::parse("-1", &p).unwrap());
        let big: HookParams = "1|1,1|2,1|3".parse().unwrap();
        assert_eq!(row_weight(&big, &syms(&[6, 7, 9])), MPoly::integer(&big, -1));
    }

    #[test]
    fn mu_weight_factors_of_example_rows() {
        let big: HookParams = "1|1,1|2,1|3".parse().unwrap();
        let one_row = |v: &[u16], comp: usize| {
            let mut parts = vec![crate::Partition::empty(); 3];
            parts[comp - 1] = crate::Partition::new(vec![v.len()]).unwrap();
            let mu = Multipartition::new(parts).unwrap();
            mu_weight_sequence(&ParitySequence::from_indices(&big, v).unwrap(), &mu)
                .unwrap()
                .to_string()
        };
        assert_eq!(one_row(&[1, 3], 1), "-q^-1*Q2");
        assert_eq!(one_row(&[5, 4], 2), "-q^-1*Q2^2");
        assert_eq!(one_row(&[2, 2], 2), "-q^-1*Q1^2");
    }

    #[test]
    fn z_monomials() {
        let p: HookParams = "1|1".parse().unwrap();
        assert_eq!(z_monomial(&ParitySequence::parse("y1", &p).unwrap()).to_string(), "-y1");
        assert_eq!(z_monomial(&ParitySequence::parse("x1,y1", &p).unwrap()).to_string(), "-x1*y1");
        assert_eq!(z_monomial(&ParitySequence::parse("", &p).unwrap()), MPoly::one(&p));
    }

    #[test]
    fn sequence_parsing_and_codes() {
        let p: HookParams = "1|1,1|2".parse().unwrap();
        let s = ParitySequence::parse("x1.1,y2.2, 3", &p).unwrap();
        assert_eq!(s.to_string(), "1,5,3");
        assert_eq!(s.parity_counts(), (2, 1));
        assert_eq!(s.max_color(), Some(2));
        assert_eq!(ParitySequence::all(&p, 2).count(), 25);
        assert_eq!(ParitySequence::from_code(&p, 3, 0).to_string(), "1,1,1");
        assert_eq!(ParitySequence::from_code(&p, 3, 124).to_string(), "5,5,5");
        assert!(ParitySequence::parse("6", &p).is_err());
    }
}
