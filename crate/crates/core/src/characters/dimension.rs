use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{HookParams, Symbol};
use crate::error::{param_err, Result};
use crate::rsk::{rsk_pair, Strategy};
use crate::sequences::ParitySequence;

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub m: usize,
    pub n: usize,
    pub params: String,
    pub strategy: Strategy,
    /// `n! m^n` words: a permutation of the local positions, each letter in a chosen colour.
    pub sequences: u64,
    pub distinct_pairs: usize,
    /// Every insertion tableau has pairwise distinct entries.
    pub distinct_entries: bool,
    pub sum_of_squares: u64,
    pub group_order: u64,
    pub pass: bool,
}

/// Inserts every word `(c_1.π_1, …, c_n.π_n)` with `π ∈ S_n` and colours `c ∈ [m]^n`,
/// where `c.p` is the `p`-th letter of colour `c`. Needs `k_c + l_c = n` for each colour.
pub fn dimension_identity(n: usize, params: &HookParams, strategy: Strategy) -> Result<DimensionReport> {
    let m = params.m();
    if (1..=m).any(|c| params.k()[c - 1] + params.l()[c - 1] != n) {
        return param_err(format!("dimension identity needs k_c + l_c = {n} for every colour, got {params}"));
    }
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !crate::sequences::composition::next_permutation(&mut p) {
            break;
        }
    }
    let colourings = m.pow(n as u32);
    let words: Vec<ParitySequence> = perms
        .iter()
        .flat_map(|perm| {
            (0..colourings).map(move |mut code| {
                let symbols = perm
                    .iter()
                    .map(|&pos| {
                        let c = code % m;
                        code /= m;
                        Symbol::from_index(params.boundary(c) + pos)
                    })
                    .collect();
                ParitySequence::new(params, symbols).expect("symbols in range")
            })
        })
        .collect();
    let pairs: Vec<_> = words
        .par_iter()
        .map(|w| rsk_pair(w, strategy))
        .collect::<Result<_>>()?;
    let distinct_entries = pairs.iter().all(|(s, _)| {
        let mut seen = HashSet::new();
        s.entries().all(|(_, &x)| seen.insert(x))
    });
    let distinct_pairs = pairs.iter().collect::<HashSet<_>>().len();
    let sum_of_squares: u64 = super::dimensions(n, m)?
        .into_iter()
        .map(|(_, d)| d * d)
        .sum();
    let group_order = (1..=n as u64).product::<u64>() * (m as u64).pow(n as u32);
    let sequences = words.len() as u64;
    Ok(DimensionReport {
        m,
        n,
        params: params.to_string(),
        strategy,
        sequences,
        distinct_pairs,
        distinct_entries,
        sum_of_squares,
        group_order,
        pass: distinct_pairs as u64 == group_order && sum_of_squares == group_order && distinct_entries,
    })
}
