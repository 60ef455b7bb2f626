use rand::{rngs::StdRng, Rng, SeedableRng};
use serde_json::{json, Value};
use superfrob::characters::{
    oracle_table, rsk_table, specialize_table, verify_frobenius, CharacterTable,
};
use superfrob::combinatorics::{hook_tableaux, standard_tableaux, superstandard, Symbol};
use superfrob::rsk::{
    insert_sequence, local_factor_product, reverse_insert, rsk_pair, set_sequence_limit,
    sw_ne_classify, sw_ne_sets, transport_report, verify_bijection, Strategy,
};
use superfrob::sequences::{mu_weight_sequence, row_weight, updown_peak, ParitySequence};
use superfrob::superfunctions::q_mu;
use superfrob::{HookParams, MPoly, Multipartition};

use crate::{cache, EnumArgs, Failure, QmuArgs, RskArgs, Route, SizeArgs, Suite, TableArgs, VerifyArgs, WeightArgs};

const MAX_WORDS: u128 = 10_000_000;
const MAX_SHAPES: u128 = 10_000;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_params(s: &str) -> Result<HookParams, Failure> {
    s.parse().map_err(|e: superfrob::Error| usage(format!("--params {s:?}: {e}")))
}

fn parse_shape(s: &str) -> Result<Multipartition, Failure> {
    s.parse().map_err(|e: superfrob::Error| usage(format!("shape {s:?}: {e}")))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

/// `|P_{m,n}|` from the generating function `Π_k (1 - x^k)^{-m}`.
fn multipartition_count(n: usize, m: usize) -> u128 {
    let mut series = vec![0u128; n + 1];
    series[0] = 1;
    for _ in 0..m {
        for k in 1..=n {
            for i in k..=n {
                series[i] = series[i].saturating_add(series[i - k]);
            }
        }
    }
    series[n]
}

fn guard_shapes(n: usize, m: usize, force: bool) -> Result<(), Failure> {
    let count = multipartition_count(n, m);
    if count > MAX_SHAPES && !force {
        return Err(Failure::Refused(format!(
            "|P_{{{m},{n}}}| = {count} exceeds {MAX_SHAPES}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn guard_words(n: usize, params: &HookParams, force: bool) -> Result<(), Failure> {
    if force {
        set_sequence_limit(u64::MAX);
        return Ok(());
    }
    let words = (params.n_symbols() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if words > MAX_WORDS {
        return Err(Failure::Refused(format!(
            "({})^{n} = {words} words exceeds {MAX_WORDS}; pass --force to run anyway",
            params.n_symbols()
        )));
    }
    Ok(())
}

/// Parameters for table-sized work: `--params` or `k_i = l_i = n`.
fn size_params(size: &SizeArgs) -> Result<HookParams, Failure> {
    if size.m == 0 {
        return Err(usage("--m must be at least 1"));
    }
    match &size.params {
        Some(p) => {
            let params = parse_params(p)?;
            if params.m() != size.m {
                return Err(usage(format!("--params {p:?} has {} colours but --m is {}", params.m(), size.m)));
            }
            Ok(params)
        }
        None => Ok(HookParams::uniform(size.m, size.n)?),
    }
}

pub fn enumerate(a: EnumArgs) -> Result<(), Failure> {
    let (kind, items): (&str, Vec<String>) = if let Some(n) = a.multipartitions {
        if a.m == 0 {
            return Err(usage("--m must be at least 1"));
        }
        guard_shapes(n, a.m, a.force)?;
        let items = Multipartition::enumerate(n, a.m)?.iter().map(ToString::to_string).collect();
        ("multipartitions", items)
    } else if let Some(shape) = &a.std {
        let shape = parse_shape(shape)?;
        ("standard_tableaux", standard_tableaux(&shape).iter().map(ToString::to_string).collect())
    } else {
        let shape = parse_shape(a.sstd.as_deref().expect("argument group"))?;
        let params = parse_params(a.params.as_deref().expect("required with --sstd"))?;
        let items = hook_tableaux(&shape, &params)?
            .iter()
            .map(|t| t.display_with(&params).to_string())
            .collect();
        ("hook_tableaux", items)
    };
    if a.json {
        print_json(&json!({ "kind": kind, "count": items.len(), "items": items }));
    } else {
        for item in &items {
            println!("{item}");
        }
    }
    Ok(())
}

pub fn rsk(a: RskArgs) -> Result<(), Failure> {
    let params = parse_params(&a.params)?;
    if let Some(m) = a.m {
        if m != params.m() {
            return Err(usage(format!("--m {m} but --params has {} colours", params.m())));
        }
    }
    let word = ParitySequence::parse(&a.sequence, &params)?;
    let trace = insert_sequence(&word, a.strategy.into())?;
    if a.trace {
        print_json(&trace.to_json());
    } else if a.json {
        print_json(&json!({
            "params": params.to_string(),
            "strategy": trace.strategy.to_string(),
            "sequence": word.to_string(),
            "s": trace.s.display_with(&params).to_string(),
            "t": trace.t.to_string(),
            "shape": trace.t.shape().to_string(),
        }));
    } else {
        println!("S = {}", trace.s.display_with(&params));
        println!("T = {}", trace.t);
    }
    Ok(())
}

pub fn weight(a: WeightArgs) -> Result<(), Failure> {
    let params = parse_params(&a.params)?;
    let mu = parse_shape(&a.mu)?;
    let word = ParitySequence::parse(&a.sequence, &params)?;
    let wt = mu_weight_sequence(&word, &mu)?;
    let symbols = word.symbols();
    let mut rows = Vec::new();
    for (idx, seg) in superstandard(&mu).rows.iter().enumerate() {
        let row = &symbols[seg.range()];
        let peak = updown_peak(row)?;
        let factor = peak.map(|p| {
            let top = row[p - 1];
            &row_weight(&params, row) * &MPoly::big_q_pow(&params, params.color(top), seg.comp as u32)
        });
        rows.push(json!({
            "row": idx + 1,
            "start": seg.start,
            "end": seg.start + seg.len - 1,
            "component": seg.comp,
            "symbols": row.iter().map(|s| s.0).collect::<Vec<_>>(),
            "peak": peak,
            "factor": factor.map(|f| f.to_string()),
        }));
    }
    let mut out = json!({
        "params": params.to_string(),
        "mu": mu.to_string(),
        "sequence": word.to_string(),
        "weight": wt.to_string(),
        "up_down": rows.iter().all(|r| !r["peak"].is_null()),
        "rows": rows,
    });
    if a.diagnostic {
        let trace = insert_sequence(&word, a.strategy.into())?;
        let report = sw_ne_classify(&trace);
        let (sw, ne) = sw_ne_sets(&report.labels, &mu)?;
        out["diagnostic"] = json!({
            "local_factor_product": local_factor_product(&word, &mu)?.to_string(),
            "strategy": trace.strategy.to_string(),
            "labels": report.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "t_sw": sw,
            "t_ne": ne,
            "unmatched": report.unmatched().map(|c| c.j).collect::<Vec<_>>(),
        });
    }
    if a.json {
        print_json(&out);
        return Ok(());
    }
    println!("wt_mu = {wt}");
    for r in out["rows"].as_array().expect("rows array") {
        let syms: Vec<String> = r["symbols"]
            .as_array()
            .expect("symbols array")
            .iter()
            .map(ToString::to_string)
            .collect();
        let place = format!(
            "row {} (positions {}-{}, component {}): {}",
            r["row"], r["start"], r["end"], r["component"], syms.join(",")
        );
        match r["factor"].as_str() {
            None => println!("{place} is not up-down, so the weight is 0"),
            Some(f) if a.diagnostic => println!("{place} peak at {}, factor {f}", r["peak"]),
            Some(_) => {}
        }
    }
    if let Some(d) = out.get("diagnostic") {
        let list = |v: &Value| {
            v.as_array()
                .expect("array")
                .iter()
                .map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string))
                .collect::<Vec<_>>()
                .join(",")
        };
        println!("local factor product = {}", d["local_factor_product"].as_str().expect("string"));
        println!("SW/NE labels ({}) = {}", d["strategy"].as_str().expect("string"), list(&d["labels"]));
        println!("T_SW = [{}]", list(&d["t_sw"]));
        println!("T_NE = [{}]", list(&d["t_ne"]));
        println!("pairs matching no geometric case = [{}]", list(&d["unmatched"]));
    }
    Ok(())
}

pub fn qmu(a: QmuArgs) -> Result<(), Failure> {
    let params = parse_params(&a.params)?;
    let mu = parse_shape(&a.mu)?;
    let p = q_mu(&mu, &params)?;
    if a.json {
        print_json(&serde_json::to_value(p.to_json()).expect("MPoly JSON serializes"));
    } else {
        println!("{p}");
    }
    Ok(())
}

pub fn chartable(a: TableArgs) -> Result<(), Failure> {
    let size = &a.size;
    let params = size_params(size)?;
    guard_shapes(size.n, size.m, size.force)?;
    let strategy: Strategy = size.strategy.into();
    let path = a
        .cache_dir
        .as_deref()
        .map(|dir| cache::path(dir, size.n, &params, a.route, strategy));
    let cached = path.as_deref().and_then(cache::load);
    let table = match cached {
        Some(t) => t,
        None => {
            let t = match a.route {
                Route::Rsk => {
                    guard_words(size.n, &params, size.force)?;
                    rsk_table(size.n, &params, strategy)?
                }
                Route::Oracle => oracle_table(size.n, &params)?,
            };
            if let Some(p) = &path {
                cache::store(p, &t).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
            }
            t
        }
    };
    emit_table(&table, a.specialize, size.json)
}

fn emit_table(table: &CharacterTable, specialize: bool, as_json: bool) -> Result<(), Failure> {
    if specialize {
        let specialized = specialize_table(table)?;
        if as_json {
            print_json(&specialized.to_json());
        } else {
            println!("# m = {}, n = {}, q = 1, Q_a = E({})^a", table.m, table.n, table.m);
            print!("{}", specialized.render());
        }
    } else if as_json {
        print_json(&table.to_json());
    } else {
        let how = match table.strategy {
            Some(s) => format!("rsk route, {s} strategy"),
            None => "oracle route".to_string(),
        };
        println!("# m = {}, n = {}, params {}, {how}", table.m, table.n, table.params);
        print!("{}", table.render());
    }
    Ok(())
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn verify(a: VerifyArgs) -> Result<bool, Failure> {
    let size = &a.size;
    let params = size_params(size)?;
    let n = size.n;
    guard_shapes(n, size.m, size.force)?;
    guard_words(n, &params, size.force)?;
    let strategy: Strategy = size.strategy.into();
    let want = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut suites = serde_json::Map::new();
    let mut lines = Vec::new();
    let mut all_pass = true;
    let tag = format!("m = {}, n = {n}, params {params}, {strategy}", size.m);

    if want(Suite::Frobenius) {
        match verify_frobenius(n, &params, strategy) {
            Ok(r) => {
                all_pass &= r.pass;
                let bad: Vec<_> = r.columns.iter().filter(|c| !(c.expansion_holds && c.oracle_agrees)).collect();
                let mut line = format!(
                    "{} frobenius ({tag}): {}/{} columns",
                    status(r.pass),
                    r.columns.len() - bad.len(),
                    r.columns.len()
                );
                if let Some(c) = bad.first() {
                    line.push_str(&format!("; mu = {}: {}", c.mu, c.first_difference.as_deref().unwrap_or("")));
                }
                lines.push(line);
                suites.insert("frobenius".into(), serde_json::to_value(&r).expect("report serializes"));
            }
            Err(superfrob::Error::Refused(msg)) => {
                all_pass = false;
                lines.push(format!("FAIL frobenius ({tag}): {msg}"));
                suites.insert("frobenius".into(), json!({ "pass": false, "error": msg }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if want(Suite::Bijection) {
        let r = verify_bijection(n, &params, strategy)?;
        all_pass &= r.pass;
        let mut line = format!(
            "{} bijection ({tag}): {} words, {} distinct pairs, {} target pairs",
            status(r.pass),
            r.sequences,
            r.distinct_pairs,
            r.target_pairs
        );
        if let Some(c) = &r.first_collision {
            line.push_str(&format!("; {} and {} collide at S = {}, T = {}", c.first, c.second, c.s, c.t));
        }
        if let Some(inv) = &r.first_invalid {
            line.push_str(&format!("; invalid output {inv}"));
        }
        lines.push(line);
        suites.insert("bijection".into(), serde_json::to_value(&r).expect("report serializes"));
    }
    if want(Suite::Transport) {
        match transport_report(n, &params, strategy) {
            Ok(r) => {
                all_pass &= r.pass;
                let split = r.per_mu.iter().filter(|m| m.violating_fibers > 0).count();
                let mut line = format!(
                    "{} transport ({tag}): {split}/{} mu with non-constant fibers",
                    status(r.pass),
                    r.per_mu.len()
                );
                if let Some(v) = &r.first_violation {
                    line.push_str(&format!(
                        "; mu = {}, T = {}: {} -> {} but {} -> {}",
                        v.mu, v.t, v.first, v.first_weight, v.second, v.second_weight
                    ));
                }
                lines.push(line);
                suites.insert("transport".into(), serde_json::to_value(&r).expect("report serializes"));
            }
            Err(superfrob::Error::Parameter(msg)) => {
                // the literal strategy can leave a non-partition shape
                all_pass = false;
                lines.push(format!("FAIL transport ({tag}): {msg}"));
                suites.insert("transport".into(), json!({ "pass": false, "error": msg }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if want(Suite::Roundtrip) {
        let r = roundtrip(n, &params, strategy, a.seed, a.samples);
        all_pass &= r["pass"].as_bool().unwrap_or(false);
        let mut line = format!(
            "{} roundtrip ({tag}): {} random words, seed {}",
            status(r["pass"].as_bool().unwrap_or(false)),
            r["samples"],
            a.seed
        );
        if let Some(f) = r["first_failure"].as_str() {
            line.push_str(&format!("; {f}"));
        }
        lines.push(line);
        suites.insert("roundtrip".into(), r);
    }

    if size.json {
        print_json(&json!({
            "m": size.m,
            "n": n,
            "params": params.to_string(),
            "strategy": strategy.to_string(),
            "suites": suites,
            "pass": all_pass,
        }));
    } else {
        for l in &lines {
            println!("{l}");
        }
    }
    Ok(all_pass)
}

/// Random words through insertion and back.
fn roundtrip(n: usize, params: &HookParams, strategy: Strategy, seed: u64, samples: usize) -> Value {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut first_failure = None;
    let mut failures = 0;
    for _ in 0..samples {
        let symbols = (0..n).map(|_| Symbol::from_index(rng.gen_range(0..params.n_symbols()))).collect();
        let word = ParitySequence::new(params, symbols).expect("symbols in range");
        let outcome = rsk_pair(&word, strategy).and_then(|(s, t)| {
            if !s.is_semistandard(params) {
                return Ok(Some(format!("{word}: S = {} is not semistandard", s.display_with(params))));
            }
            let back = reverse_insert(&s, &t, params, strategy)?;
            Ok((back != word).then(|| format!("{word} comes back as {back}")))
        });
        let problem = match outcome {
            Ok(p) => p,
            Err(e) => Some(format!("{word}: {e}")),
        };
        if let Some(p) = problem {
            failures += 1;
            first_failure.get_or_insert(p);
        }
    }
    json!({
        "samples": samples,
        "seed": seed,
        "failures": failures,
        "first_failure": first_failure,
        "pass": failures == 0,
    })
}
