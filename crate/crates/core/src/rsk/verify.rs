//! Exhaustive certification of a strategy, weight transport, and the RSK character route.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use super::{reverse_insert, rsk_pair, Strategy};
use crate::combinatorics::{
    hook_tableaux, standard_tableaux, HookParams, HookTableau, Multipartition, StandardTableau,
};
use crate::error::{param_err, Error, Result};
use crate::exactalg::MPoly;
use crate::sequences::{mu_weight_sequence, ParitySequence};

/// Default largest number of words an exhaustive sweep will enumerate.
pub const MAX_SEQUENCES: u64 = 10_000_000;

static SEQUENCE_LIMIT: AtomicU64 = AtomicU64::new(MAX_SEQUENCES);

/// Raises or lowers the sweep limit for this process.
pub fn set_sequence_limit(limit: u64) {
    SEQUENCE_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn sequence_limit() -> u64 {
    SEQUENCE_LIMIT.load(Ordering::Relaxed)
}

fn sequence_count(n: usize, params: &HookParams) -> Result<u64> {
    let limit = sequence_limit();
    let count = (params.n_symbols() as u64)
        .checked_pow(n as u32)
        .filter(|&c| c <= limit);
    count.ok_or_else(|| {
        Error::Refused(format!(
            "{}^{} words exceeds the limit of {limit}",
            params.n_symbols(),
            n
        ))
    })
}

/// Two words with the same insertion pair.
#[derive(Clone, Debug, Serialize)]
pub struct Collision {
    pub first: String,
    pub second: String,
    pub s: String,
    pub t: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub params: String,
    pub strategy: Strategy,
    pub sequences: u64,
    pub distinct_pairs: usize,
    /// `Σ_lambda s(lambda) d(lambda)`.
    pub target_pairs: u64,
    pub injective: bool,
    /// Every output has a semistandard `S`, a standard `T` and equal shapes.
    pub all_valid: bool,
    pub surjective: bool,
    /// `(k+l)^n = Σ_lambda s(lambda) d(lambda)`.
    pub count_identity: bool,
    pub insertion_errors: u64,
    pub first_collision: Option<Collision>,
    pub first_invalid: Option<String>,
    pub pass: bool,
}

type Pair = (HookTableau, StandardTableau);

fn all_pairs(n: usize, params: &HookParams, strategy: Strategy) -> Result<Vec<(u64, Result<Pair>)>> {
    let count = sequence_count(n, params)?;
    Ok((0..count)
        .into_par_iter()
        .map(|code| {
            let w = ParitySequence::from_code(params, n, code);
            (code, rsk_pair(&w, strategy))
        })
        .collect())
}

/// `Σ_lambda |hook tableaux(lambda)| · |std(lambda)|` over `P_{m,n}`.
fn target_size(n: usize, params: &HookParams) -> Result<u64> {
    let mut total = 0u64;
    for lam in Multipartition::enumerate(n, params.m())? {
        let s = hook_tableaux(&lam, params)?.len() as u64;
        if s > 0 {
            total += s * standard_tableaux(&lam).len() as u64;
        }
    }
    Ok(total)
}

/// Injectivity, surjectivity and the count identity for all words of length `n`.
pub fn verify_bijection(n: usize, params: &HookParams, strategy: Strategy) -> Result<BijectionReport> {
    let pairs = all_pairs(n, params, strategy)?;
    let sequences = pairs.len() as u64;
    let target_pairs = target_size(n, params)?;
    let mut seen: HashMap<&Pair, u64> = HashMap::with_capacity(pairs.len());
    let mut first_collision = None;
    let mut first_invalid = None;
    let mut insertion_errors = 0;
    let mut collisions = 0u64;
    let mut all_valid = true;
    let word = |code: u64| ParitySequence::from_code(params, n, code).to_string();
    for (code, res) in &pairs {
        let pair = match res {
            Ok(p) => p,
            Err(e) => {
                insertion_errors += 1;
                all_valid = false;
                first_invalid.get_or_insert_with(|| format!("{}: {e}", word(*code)));
                continue;
            }
        };
        let (s, t) = pair;
        if s.shape() != t.shape() || !s.is_semistandard(params) || !t.is_standard() {
            all_valid = false;
            first_invalid.get_or_insert_with(|| {
                format!("{}: S = {}, T = {}", word(*code), s.display_with(params), t)
            });
        }
        if let Some(&prev) = seen.get(pair) {
            collisions += 1;
            first_collision.get_or_insert_with(|| Collision {
                first: word(prev),
                second: word(*code),
                s: s.display_with(params).to_string(),
                t: t.to_string(),
            });
        } else {
            seen.insert(pair, *code);
        }
    }
    let injective = collisions == 0 && insertion_errors == 0;
    let distinct_pairs = seen.len();
    let surjective = all_valid && distinct_pairs as u64 == target_pairs;
    let count_identity = sequences == target_pairs;
    Ok(BijectionReport {
        n,
        params: params.to_string(),
        strategy,
        sequences,
        distinct_pairs,
        target_pairs,
        injective,
        all_valid,
        surjective,
        count_identity,
        insertion_errors,
        first_collision,
        first_invalid,
        pass: injective && all_valid && surjective && count_identity,
    })
}

/// Two words in one fiber with different weights.
#[derive(Clone, Debug, Serialize)]
pub struct FiberViolation {
    pub mu: String,
    pub t: String,
    pub first: String,
    pub first_weight: String,
    pub second: String,
    pub second_weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MuTransport {
    pub mu: String,
    pub fibers: usize,
    pub violating_fibers: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportReport {
    pub n: usize,
    pub params: String,
    pub strategy: Strategy,
    pub per_mu: Vec<MuTransport>,
    pub first_violation: Option<FiberViolation>,
    /// For every `T` the insertion tableaux over its fiber are exactly the hook tableaux of its shape.
    pub fiber_schur: bool,
    pub pass: bool,
}

/// Checks that `wt_mu` is constant on every fiber of the recording tableau, for every `mu`.
pub fn transport_report(n: usize, params: &HookParams, strategy: Strategy) -> Result<TransportReport> {
    let pairs = all_pairs(n, params, strategy)?;
    let mut fibers: BTreeMap<StandardTableau, Vec<(u64, HookTableau)>> = BTreeMap::new();
    for (code, res) in pairs {
        let (s, t) = res?;
        fibers.entry(t).or_default().push((code, s));
    }
    let mut fiber_schur = true;
    for (t, members) in &fibers {
        let mut got: Vec<&HookTableau> = members.iter().map(|(_, s)| s).collect();
        got.sort();
        let want = hook_tableaux(&t.shape(), params)?;
        if got.len() != want.len() || got.iter().zip(&want).any(|(a, b)| *a != b) {
            fiber_schur = false;
        }
    }
    let fibers: Vec<(StandardTableau, Vec<u64>)> = fibers
        .into_iter()
        .map(|(t, v)| (t, v.into_iter().map(|(c, _)| c).collect()))
        .collect();
    let mut per_mu = Vec::new();
    let mut first_violation = None;
    for mu in Multipartition::enumerate(n, params.m())? {
        let results: Vec<Option<FiberViolation>> = fibers
            .par_iter()
            .map(|(t, codes)| -> Result<Option<FiberViolation>> {
                let first = ParitySequence::from_code(params, n, codes[0]);
                let w0 = mu_weight_sequence(&first, &mu)?;
                for &c in &codes[1..] {
                    let w = ParitySequence::from_code(params, n, c);
                    let wc = mu_weight_sequence(&w, &mu)?;
                    if wc != w0 {
                        return Ok(Some(FiberViolation {
                            mu: mu.to_string(),
                            t: t.to_string(),
                            first: first.to_string(),
                            first_weight: w0.to_string(),
                            second: w.to_string(),
                            second_weight: wc.to_string(),
                        }));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        let violating = results.iter().filter(|v| v.is_some()).count();
        if first_violation.is_none() {
            first_violation = results.into_iter().flatten().next();
        }
        per_mu.push(MuTransport {
            mu: mu.to_string(),
            fibers: fibers.len(),
            violating_fibers: violating,
        });
    }
    let pass = fiber_schur && per_mu.iter().all(|m| m.violating_fibers == 0);
    Ok(TransportReport {
        n,
        params: params.to_string(),
        strategy,
        per_mu,
        first_violation,
        fiber_schur,
        pass,
    })
}

type CertKey = (String, usize, Strategy);

fn cert_cache() -> &'static Mutex<HashMap<CertKey, bool>> {
    static CACHE: OnceLock<Mutex<HashMap<CertKey, bool>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Runs (once per process) [`verify_bijection`] at this size; refuses when it fails.
pub fn certify(n: usize, params: &HookParams, strategy: Strategy) -> Result<()> {
    let key = (params.to_string(), n, strategy);
    let cached = cert_cache().lock().unwrap().get(&key).copied();
    let ok = match cached {
        Some(ok) => ok,
        None => {
            let ok = verify_bijection(n, params, strategy)?.pass;
            cert_cache().lock().unwrap().insert(key, ok);
            ok
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Refused(format!(
            "strategy {strategy} is not a bijection for n = {n}, parameters {params}"
        )))
    }
}

/// The lexicographically smallest hook tableau of `shape` in reading order.
pub fn min_hook_tableau(shape: &Multipartition, params: &HookParams) -> Result<Option<HookTableau>> {
    crate::combinatorics::first_hook_tableau(shape, params)
}

/// `wt_mu(T)`: the sequence weight of the preimage of `(S_min, T)`, where `S_min`
/// is the smallest hook tableau of the shape of `T`.
pub fn tableau_weight(
    t: &StandardTableau,
    mu: &Multipartition,
    params: &HookParams,
    strategy: Strategy,
) -> Result<MPoly> {
    if t.size() != mu.size() || t.m() != mu.m() || mu.m() != params.m() {
        return param_err(format!("tableau {t} does not match mu = {mu} and m = {}", params.m()));
    }
    certify(t.size(), params, strategy)?;
    let Some(s) = min_hook_tableau(&t.shape(), params)? else {
        return Ok(MPoly::zero(params));
    };
    let i = reverse_insert(&s, t, params, strategy)?;
    mu_weight_sequence(&i, mu)
}

/// `chi^lambda(mu) = Σ_{T ∈ std(lambda)} wt_mu(T)`.
pub fn char_rsk(
    lambda: &Multipartition,
    mu: &Multipartition,
    params: &HookParams,
    strategy: Strategy,
) -> Result<MPoly> {
    if lambda.size() != mu.size() {
        return param_err(format!("|{lambda}| != |{mu}|"));
    }
    let mut out = MPoly::zero(params);
    for t in standard_tableaux(lambda) {
        out.add_assign_ref(&tableau_weight(&t, mu, params, strategy)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub params: String,
    /// Classes of words with the same `wt_mu` for every `mu` at once.
    pub classes: usize,
    /// Every class sums to a nonnegative integer combination of Schur functions.
    pub decomposable: bool,
    pub first_obstruction: Option<String>,
}

/// A necessary condition for any content-preserving bijection onto pairs `(S, T)` to
/// carry `wt_mu` to a function of `T`: the words sharing a weight vector must sum to
/// `Σ_T S_{shape(T)}`, a nonnegative integer combination of Schur functions.
/// Independent of the insertion rules.
pub fn fiber_decomposition(n: usize, params: &HookParams) -> Result<DecompositionReport> {
    let count = sequence_count(n, params)?;
    let mus = Multipartition::enumerate(n, params.m())?;
    let keyed: Vec<(String, MPoly)> = (0..count)
        .into_par_iter()
        .map(|code| -> Result<(String, MPoly)> {
            let w = ParitySequence::from_code(params, n, code);
            let mut key = String::new();
            for mu in &mus {
                key.push_str(&mu_weight_sequence(&w, mu)?.to_string());
                key.push('|');
            }
            Ok((key, crate::sequences::z_monomial(&w)))
        })
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<String, MPoly> = BTreeMap::new();
    for (key, z) in keyed {
        classes
            .entry(key)
            .or_insert_with(|| MPoly::zero(params))
            .add_assign_ref(&z);
    }
    let basis = crate::characters::SchurBasis::new(n, params)?;
    let mut first_obstruction = None;
    for (key, sum) in &classes {
        let ok = match crate::characters::solve_in_basis(&basis.polys, sum) {
            Ok(coeffs) => coeffs.iter().all(|c| {
                c.as_constant()
                    .is_some_and(|r| r.is_integer() && !num_traits::Signed::is_negative(&r))
            }),
            Err(_) => false,
        };
        if !ok {
            first_obstruction = Some(format!("weights {key} sum to {sum}"));
            break;
        }
    }
    Ok(DecompositionReport {
        n,
        params: params.to_string(),
        classes: classes.len(),
        decomposable: first_obstruction.is_none(),
        first_obstruction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_obstructions() {
        let p = |s: &str| s.parse::<HookParams>().unwrap();
        assert!(fiber_decomposition(3, &p("1|1")).unwrap().decomposable);
        assert!(fiber_decomposition(2, &p("2|2")).unwrap().decomposable);
        assert!(!fiber_decomposition(3, &p("1|2")).unwrap().decomposable);
        assert!(!fiber_decomposition(2, &p("1|1,1|1")).unwrap().decomposable);
    }
}
