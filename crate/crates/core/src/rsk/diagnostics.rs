//! SW/NE labels with their geometric case analysis, and the ungated local-factor product.

use std::fmt;

use serde::Serialize;

use super::InsertionTrace;
use crate::combinatorics::{superstandard, Cell, HookParams, Multipartition, Parity, Symbol};
use crate::error::{param_err, Result};
use crate::exactalg::{rat, MPoly};
use crate::sequences::ParitySequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SwNe {
    #[serde(rename = "SW")]
    Sw,
    #[serde(rename = "NE")]
    Ne,
}

impl fmt::Display for SwNe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SwNe::Sw => "SW",
            SwNe::Ne => "NE",
        })
    }
}

/// Geometric cases that fire for the pair `(j, j+1)` in the recording tableau.
#[derive(Clone, Debug, Serialize)]
pub struct SwNeCase {
    pub j: usize,
    pub label: SwNe,
    pub from: Cell,
    pub to: Cell,
    pub parities: (u8, u8),
    pub sw_cases: Vec<&'static str>,
    pub ne_cases: Vec<&'static str>,
    /// Some case of the assigned label fires.
    pub matched: bool,
    /// Some case of the opposite label fires.
    pub contradicted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SwNeReport {
    pub labels: Vec<SwNe>,
    pub cases: Vec<SwNeCase>,
}

impl SwNeReport {
    /// Pairs where no case of the assigned label fires.
    pub fn unmatched(&self) -> impl Iterator<Item = &SwNeCase> {
        self.cases.iter().filter(|c| !c.matched)
    }
}

fn label(a: Symbol, b: Symbol) -> SwNe {
    if a < b {
        SwNe::Sw
    } else {
        SwNe::Ne
    }
}

/// Labels `j → j+1` SW for an ascent `i_j < i_{j+1}` and NE otherwise, and logs
/// which geometric cases of the recording tableau agree.
pub fn sw_ne_classify(trace: &InsertionTrace) -> SwNeReport {
    let params = &trace.params;
    let word: Vec<Symbol> = trace.steps.iter().map(|s| s.symbol).collect();
    let parity = |s: Symbol| match params.parity(s) {
        Parity::Even => 0u8,
        Parity::Odd => 1u8,
    };
    let mut labels = Vec::new();
    let mut cases = Vec::new();
    for j in 1..word.len() {
        let (sa, sb) = (word[j - 1], word[j]);
        let lab = label(sa, sb);
        labels.push(lab);
        let a = trace.t.cell_of(j as u32).expect("entry present");
        let b = trace.t.cell_of(j as u32 + 1).expect("entry present");
        let (pa, pb) = (parity(sa), parity(sb));
        let south_west = b.row >= a.row && b.col <= a.col;
        let north_east = b.row <= a.row && b.col >= a.col;
        let south_or_east = b.row > a.row || b.col > a.col;
        let same = a.comp == b.comp;
        let mut sw = Vec::new();
        let mut ne = Vec::new();
        if a.comp < b.comp {
            sw.push("later component");
        }
        if same && pa == 0 && pb == 0 && south_west {
            sw.push("even-even, south and/or west");
        }
        if same && pa == 1 && pb == 1 && north_east {
            sw.push("odd-odd, north and/or east");
        }
        if same && pa == 0 && pb == 1 && south_or_east {
            sw.push("even-odd, south or east");
        }
        if b.comp < a.comp {
            ne.push("earlier component");
        }
        if same && pa == 0 && pb == 0 && north_east {
            ne.push("even-even, north and/or east");
        }
        if same && pa == 1 && south_west {
            ne.push("odd-any, south and/or west");
        }
        let (mine, other) = match lab {
            SwNe::Sw => (&sw, &ne),
            SwNe::Ne => (&ne, &sw),
        };
        cases.push(SwNeCase {
            j,
            label: lab,
            from: a,
            to: b,
            parities: (pa, pb),
            matched: !mine.is_empty(),
            contradicted: !other.is_empty(),
            sw_cases: sw,
            ne_cases: ne,
        });
    }
    SwNeReport { labels, cases }
}

/// `T_SW` and `T_NE`: the `j` with `j, j+1` in one row of `t^mu`, split by label.
pub fn sw_ne_sets(labels: &[SwNe], mu: &Multipartition) -> Result<(Vec<usize>, Vec<usize>)> {
    if labels.len() + 1 != mu.size() && !(labels.is_empty() && mu.size() == 0) {
        return param_err(format!("{} labels for a shape of size {}", labels.len(), mu.size()));
    }
    let mut sw = Vec::new();
    let mut ne = Vec::new();
    for seg in superstandard(mu).rows {
        for j in seg.start..seg.start + seg.len - 1 {
            match labels[j - 1] {
                SwNe::Sw => sw.push(j),
                SwNe::Ne => ne.push(j),
            }
        }
    }
    Ok((sw, ne))
}

/// Product over adjacent pairs in each row of `t^mu` of the local factor (an ascent
/// keyed by the left letter's parity, a weak descent by the right letter's), times
/// `Q_{colour of the row maximum}^{component}`, with no up-down requirement.
pub fn local_factor_product(i: &ParitySequence, mu: &Multipartition) -> Result<MPoly> {
    let params: &HookParams = i.params();
    if i.len() != mu.size() || mu.m() != params.m() {
        return param_err(format!(
            "sequence of length {} against {mu} with m = {}",
            i.len(),
            params.m()
        ));
    }
    let (mut sign, mut e) = (1i64, 0i32);
    let mut out = MPoly::one(params);
    for seg in superstandard(mu).rows {
        let row = &i.symbols()[seg.range()];
        for w in row.windows(2) {
            let (a, b) = (w[0], w[1]);
            let negative = if a < b {
                params.parity(a) == Parity::Even
            } else {
                params.parity(b) == Parity::Odd
            };
            if negative {
                sign = -sign;
                e -= 1;
            } else {
                e += 1;
            }
        }
        let top = *row.iter().max().expect("rows are nonempty");
        out = &out * &MPoly::big_q_pow(params, params.color(top), seg.comp as u32);
    }
    Ok(&out * &MPoly::q_pow(params, e).scale(&rat(sign)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::{insert_sequence, Strategy};

    const EXAMPLE: &str = "1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8";

    #[test]
    fn twenty_step_local_product() {
        let p: HookParams = "1|1,1|2,1|3".parse().unwrap();
        let mu: Multipartition = "(2,1,1);(3,2,2,1);(4,3,1)".parse().unwrap();
        let i = ParitySequence::parse(EXAMPLE, &p).unwrap();
        assert_eq!(local_factor_product(&i, &mu).unwrap().to_string(), "q^-2*Q1^3*Q2^4*Q3^13");
        assert!(crate::sequences::mu_weight_sequence(&i, &mu).unwrap().is_zero());
        let tr = insert_sequence(&i, Strategy::Corrected).unwrap();
        let (sw, ne) = sw_ne_sets(&sw_ne_classify(&tr).labels, &mu).unwrap();
        assert_eq!(sw, vec![1, 5, 6, 15, 17, 18]);
        assert_eq!(ne, vec![8, 10, 13, 14]);
    }

    #[test]
    fn example_label_chains() {
        let p: HookParams = "3|3".parse().unwrap();
        let w = ParitySequence::parse("y1,x2,x2,x1,x3,y1,y1,y3,y2", &p).unwrap();
        let tr = insert_sequence(&w, Strategy::Literal).unwrap();
        let got: Vec<String> = sw_ne_classify(&tr).labels.iter().map(ToString::to_string).collect();
        assert_eq!(got.join(","), "NE,NE,NE,SW,SW,NE,SW,NE");
        let p: HookParams = "2|2,1|1".parse().unwrap();
        let w = ParitySequence::parse("x1.1,y1.1,x1.2,x2.1,x2.1,x1.2,y1.2,y1.2,y1.1,y2.1", &p).unwrap();
        let tr = insert_sequence(&w, Strategy::Literal).unwrap();
        let got: Vec<String> = sw_ne_classify(&tr).labels.iter().map(ToString::to_string).collect();
        assert_eq!(got.join(","), "SW,SW,NE,NE,SW,SW,NE,NE,SW");
        let p: HookParams = "1|1".parse().unwrap();
        let w = ParitySequence::parse("2,2,2", &p).unwrap();
        let tr = insert_sequence(&w, Strategy::Corrected).unwrap();
        assert!(sw_ne_classify(&tr).labels.iter().all(|&l| l == SwNe::Ne));
    }
}
