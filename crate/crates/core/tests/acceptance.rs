//! Acceptance suite: one PASS/FAIL line per criterion, details indented beneath.
//! Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use superfrob::characters::{
    brute_force_centralizers, centralizer_order, dimension_identity, oracle_table, rsk_table,
    schur_from_power_sums, specialize_table, SchurBasis,
};
use superfrob::rsk::{
    fiber_decomposition, insert_sequence, local_factor_product, sw_ne_classify,
    sw_ne_sets, transport_report, verify_bijection, Strategy,
};
use superfrob::sequences::{
    mu_weight_sequence, permutation_sum_check, z_monomial, ParitySequence, SortedComposition,
};
use superfrob::superfunctions::q_mu;
use superfrob::{HookParams, MPoly, Multipartition};

type Outcome = (bool, Vec<String>);

const GRID: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];

fn params(s: &str) -> HookParams {
    s.parse().expect("valid params")
}

fn frobenius() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in GRID {
        let p = HookParams::uniform(m, n).unwrap();
        let t0 = Instant::now();
        let table = rsk_table(n, &p, Strategy::Corrected).unwrap();
        let basis = SchurBasis::new(n, &p).unwrap();
        let mut bad = Vec::new();
        for (j, mu) in table.cols.iter().enumerate() {
            let mut rhs = MPoly::zero(&p);
            for (i, s) in basis.polys.iter().enumerate() {
                assert_eq!(basis.shapes[i], table.rows[i]);
                rhs.add_assign_ref(&(&table.entries[i][j] * s));
            }
            let lhs = q_mu(mu, &p).unwrap();
            if let Some(d) = lhs.first_difference(&rhs) {
                bad.push(format!("mu = {mu}: {d}"));
            }
        }
        ok &= bad.is_empty();
        notes.push(format!(
            "(m,n) = ({m},{n}): {} columns, {} mismatches, {:.1?}",
            table.cols.len(),
            bad.len(),
            t0.elapsed()
        ));
        notes.extend(bad.into_iter().take(3));
    }
    (ok, notes)
}

fn route_agreement() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in GRID {
        let p = HookParams::uniform(m, n).unwrap();
        let rsk = rsk_table(n, &p, Strategy::Corrected).unwrap();
        let oracle = oracle_table(n, &p).unwrap();
        let diffs = rsk.differences(&oracle);
        ok &= diffs.is_empty();
        notes.push(format!(
            "(m,n) = ({m},{n}): {} entries, {} differ",
            rsk.rows.len() * rsk.cols.len(),
            diffs.len()
        ));
        for (lam, mu, d) in diffs.into_iter().take(3) {
            notes.push(format!("lambda = {lam}, mu = {mu}: {d}"));
        }
    }
    (ok, notes)
}

fn all_params_up_to(total: usize) -> Vec<HookParams> {
    let mut out = Vec::new();
    for s in 1..=total {
        for k in 0..=s {
            out.push(HookParams::new(vec![k], vec![s - k]).unwrap());
        }
    }
    for extra in ["1|1,1|1", "2|1,1|2", "1|2,2|1", "0|3,3|0", "1|0,0|1", "2|2,1|1", "1|1,1|1,1|1"] {
        let p = params(extra);
        if p.n_symbols() <= total {
            out.push(p);
        }
    }
    out
}

fn sequence_expansion() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    let mut notes = Vec::new();
    for p in all_params_up_to(6) {
        for n in 1..=3 {
            let words: Vec<ParitySequence> = ParitySequence::all(&p, n).collect();
            for mu in Multipartition::enumerate(n, p.m()).unwrap() {
                let mut lhs = MPoly::zero(&p);
                for w in &words {
                    let wt = mu_weight_sequence(w, &mu).unwrap();
                    if !wt.is_zero() {
                        lhs.add_assign_ref(&(&wt * &z_monomial(w)));
                    }
                }
                let rhs = q_mu(&mu, &p).unwrap();
                checked += 1;
                if let Some(d) = lhs.first_difference(&rhs) {
                    ok = false;
                    if notes.len() < 5 {
                        notes.push(format!("params {p}, mu = {mu}: {d}"));
                    }
                }
            }
        }
    }
    notes.insert(0, format!("{checked} (params, mu) cases, all words of length <= 3"));
    (ok, notes)
}

fn permutation_sums() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    let mut notes = Vec::new();
    for p in all_params_up_to(4) {
        for t in 1..=4 {
            for c in SortedComposition::all(&p, t) {
                let r = permutation_sum_check(&c).unwrap();
                checked += 1;
                if !r.pass {
                    ok = false;
                    if notes.len() < 5 {
                        notes.push(format!("params {p}, {:?}: {} vs {}", c.exps(), r.lhs, r.rhs));
                    }
                }
            }
        }
    }
    notes.insert(0, format!("{checked} sorted compositions"));
    (ok, notes)
}

fn certification() -> Outcome {
    let mut notes = Vec::new();
    let mut bijections = true;
    let mut transport = true;
    for ps in ["1|1", "2|2", "1|1,1|1", "1|1,2|2", "2|2,1|1", "2|2,2|2"] {
        let p = params(ps);
        for n in 1..=3 {
            let b = verify_bijection(n, &p, Strategy::Corrected).unwrap();
            let t = transport_report(n, &p, Strategy::Corrected).unwrap();
            let d = fiber_decomposition(n, &p).unwrap();
            bijections &= b.pass;
            transport &= t.pass;
            let violating: usize = t.per_mu.iter().filter(|m| m.violating_fibers > 0).count();
            let mut line = format!(
                "params {ps}, n = {n}: bijection {} ({} words, {} pairs), transport {} ({violating}/{} mu with split fibers), weight classes {}",
                verdict(b.pass),
                b.sequences,
                b.distinct_pairs,
                verdict(t.pass),
                t.per_mu.len(),
                if d.decomposable { "decomposable" } else { "obstructed" },
            );
            if let Some(v) = &t.first_violation {
                line.push_str(&format!(
                    "; e.g. mu = {}, T = {}: {} -> {} but {} -> {}",
                    v.mu, v.t, v.first, v.first_weight, v.second, v.second_weight
                ));
            }
            notes.push(line);
        }
    }
    let p = params("1|1");
    let lit = verify_bijection(2, &p, Strategy::Literal).unwrap();
    let expected_failure = !lit.injective;
    if let Some(c) = &lit.first_collision {
        notes.push(format!(
            "literal strategy, n = 2 (expected failure): {} and {} both give S = {}, T = {}",
            c.first, c.second, c.s, c.t
        ));
    }
    (bijections && transport && expected_failure, notes)
}

fn regressions() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut check = |label: &str, got: String, want: &str| {
        let pass = got == want;
        ok &= pass;
        notes.push(format!("{label}: {} {got}", verdict(pass)));
    };
    let p = params("3|3");
    let w = ParitySequence::parse("y1,x2,x2,x1,x3,y1,y1,y3,y2", &p).unwrap();
    let tr = insert_sequence(&w, Strategy::Literal).unwrap();
    check("single-colour example S", tr.s.display_with(&p).to_string(), "(x1 x2 x2 y1 y2 / x3 y1 y3 / y1)");
    check("single-colour example T", tr.t.to_string(), "(1 2 3 4 8 / 5 6 9 / 7)");
    let p = params("2|2,1|1");
    let w = ParitySequence::parse("x1.1,y1.1,x1.2,x2.1,x2.1,x1.2,y1.2,y1.2,y1.1,y2.1", &p).unwrap();
    let tr = insert_sequence(&w, Strategy::Literal).unwrap();
    check(
        "two-colour example S",
        tr.s.display_with(&p).to_string(),
        "(x1.1 x2.1 y1.1 y2.1 / x2.1 y1.1);(x1.2 x1.2 y1.2 / y1.2)",
    );
    check("two-colour example T", tr.t.to_string(), "(1 2 5 10 / 4 9);(3 6 7 / 8)");
    let p = params("1|1,1|2,1|3");
    let mu: Multipartition = "(2,1,1);(3,2,2,1);(4,3,1)".parse().unwrap();
    let w = ParitySequence::parse("1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8", &p).unwrap();
    check(
        "local-factor product",
        local_factor_product(&w, &mu).unwrap().to_string(),
        "q^-2*Q1^3*Q2^4*Q3^13",
    );
    let tr = insert_sequence(&w, Strategy::Corrected).unwrap();
    let (sw, ne) = sw_ne_sets(&sw_ne_classify(&tr).labels, &mu).unwrap();
    check("T_SW", format!("{sw:?}"), "[1, 5, 6, 15, 17, 18]");
    check("T_NE", format!("{ne:?}"), "[8, 10, 13, 14]");
    (ok, notes)
}

/// Murnaghan–Nakayama by rim-hook removal on beta-sets.
fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.iter().all(|&x| x == 0));
    };
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&shape, rest);
    }
    total
}

fn specialization() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [2, 3] {
        let p = HookParams::uniform(1, n).unwrap();
        let specialized = specialize_table(&rsk_table(n, &p, Strategy::Corrected).unwrap()).unwrap();
        let mut agree = true;
        for (i, lam) in specialized.rows.iter().enumerate() {
            for (j, mu) in specialized.cols.iter().enumerate() {
                let want = mn_character(lam.component(1).parts(), mu.component(1).parts());
                agree &= specialized.entries[i][j].to_rational() == Some(BigRational::from(BigInt::from(want)));
            }
        }
        ok &= agree;
        notes.push(format!("S_{n} against Murnaghan–Nakayama: {}", verdict(agree)));
    }
    for m in 1..=2 {
        for n in 1..=3 {
            let p = HookParams::uniform(m, n).unwrap();
            let specialized = specialize_table(&rsk_table(n, &p, Strategy::Corrected).unwrap()).unwrap();
            let orth = specialized.column_orthogonality();
            let good = orth
                .iter()
                .all(|(_, s, z)| s.to_rational() == Some(BigRational::from(z.clone())));
            let brute = brute_force_centralizers(m, n).unwrap();
            let z_ok = brute.len() == orth.len()
                && brute.iter().all(|(mu, &c)| centralizer_order(mu) == BigInt::from(c));
            ok &= good && z_ok;
            notes.push(format!(
                "(m,n) = ({m},{n}): column orthogonality {}, Z_mu vs group of order {} {}",
                verdict(good),
                brute.values().next().map_or(0, |_| superfrob::characters::wreath_elements(m, n).len()),
                verdict(z_ok)
            ));
        }
    }
    (ok, notes)
}

fn schur_inversion() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for m in 1..=2 {
        for n in 1..=3 {
            let p = HookParams::uniform(m, n).unwrap();
            let res = schur_from_power_sums(n, &p, Strategy::Corrected).unwrap();
            let bad: Vec<String> = res.iter().filter(|(_, g)| !g).map(|(l, _)| l.to_string()).collect();
            ok &= bad.is_empty();
            notes.push(format!("(m,n) = ({m},{n}): {} shapes, failing {:?}", res.len(), bad));
        }
    }
    (ok, notes)
}

fn dimension() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut run = |ps: String, n: usize| {
        let r = dimension_identity(n, &params(&ps), Strategy::Corrected).unwrap();
        ok &= r.pass;
        notes.push(format!(
            "params {ps}, n = {n}: {} distinct pairs, Σ d^2 = {}, n! m^n = {} {}",
            r.distinct_pairs,
            r.sum_of_squares,
            r.group_order,
            verdict(r.pass)
        ));
    };
    for k in 0..=3 {
        run(format!("{k}|{}", 3 - k), 3);
    }
    for a in 0..=2 {
        for b in 0..=2 {
            run(format!("{a}|{},{b}|{}", 2 - a, 2 - b), 2);
        }
    }
    (ok, notes)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("Frobenius identity with RSK-route characters on the default grid", frobenius),
        ("RSK route equals Schur-expansion route entrywise", route_agreement),
        ("sequence-side expansion of q_mu, all words, n <= 3, k+l <= 6", sequence_expansion),
        ("permutation sums equal the tilde-q prefactor, t <= 4, k+l <= 4", permutation_sums),
        ("corrected strategy: bijection and fiber-constant weight transport, n <= 3, m <= 2, k_i = l_i <= 2; literal collision", certification),
        ("worked-example regressions", regressions),
        ("q = 1 specialization, orthogonality, centralizers", specialization),
        ("Schur functions from specialized characters and power sums", schur_inversion),
        ("dimension identity", dimension),
    ];
    let mut failures = 0;
    let mut lines: BTreeMap<usize, String> = BTreeMap::new();
    for (idx, (name, f)) in criteria.into_iter().enumerate() {
        let t0 = Instant::now();
        let (ok, notes) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, vec![format!("panicked: {msg}")])
            }
        };
        failures += usize::from(!ok);
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} ({:.1?})", idx + 1, t0.elapsed());
        for note in &notes {
            println!("    {note}");
        }
        lines.insert(idx + 1, status.to_string());
    }
    let summary: Vec<String> = lines.iter().map(|(i, s)| format!("{i}:{s}")).collect();
    println!("summary: {}", summary.join(" "));
    if failures > 0 {
        std::process::exit(1);
    }
}
