//! RSK superinsertion: strategies, traces, reverse insertion and tableau weights.

mod diagnostics;
mod engine;
mod normalize;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Cell, HookParams, HookTableau, Multipartition, StandardTableau, Tableau};
use crate::error::{param_err, parse_err, Error, Result};
use crate::sequences::ParitySequence;
use engine::{corrected_insert, corrected_remove, literal_insert, to_cell, Rows};

pub use diagnostics::{local_factor_product, sw_ne_classify, sw_ne_sets, SwNe, SwNeCase, SwNeReport};
pub use verify::{
    certify, char_rsk, fiber_decomposition, min_hook_tableau, sequence_limit, set_sequence_limit, tableau_weight, transport_report, verify_bijection,
    BijectionReport, Collision, DecompositionReport, FiberViolation, TransportReport, MAX_SEQUENCES,
};

/// Which set of bumping rules to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The rules exactly as worded: even letters column-insert, odd letters
    /// row-insert, both bumping the smallest entry `>=` themselves. Not injective.
    Literal,
    /// Column insertion for every letter in the internal order of its colour
    /// (evens ascending, then odds descending), followed by a content-preserving
    /// normalization to an alphabet-order semistandard filling.
    Corrected,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Literal => "literal",
            Strategy::Corrected => "corrected",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "literal" => Ok(Strategy::Literal),
            "corrected" => Ok(Strategy::Corrected),
            other => parse_err(format!("unknown strategy {other:?} (literal|corrected)")),
        }
    }
}

/// One insertion step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionStep {
    pub symbol: crate::Symbol,
    /// Boxes whose entries were displaced, in order.
    pub bump_chain: Vec<Cell>,
    pub new_box: Cell,
    pub shape: Multipartition,
    /// Insertion tableau after this step, in alphabet-order form.
    pub s: HookTableau,
}

/// The full history `(S_0,T_0), …, (S_n,T_n)` of an insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTrace {
    pub params: HookParams,
    pub strategy: Strategy,
    pub steps: Vec<InsertionStep>,
    pub s: HookTableau,
    pub t: StandardTableau,
}

struct State {
    comps: Vec<Rows>,
    t: Vec<Vec<Vec<u32>>>,
}

impl State {
    fn new(m: usize) -> Self {
        State {
            comps: vec![Vec::new(); m],
            t: vec![Vec::new(); m],
        }
    }

    fn step(&mut self, params: &HookParams, strategy: Strategy, s: crate::Symbol, i: u32) -> Result<(Vec<Cell>, Cell)> {
        let c = params.color(s);
        let rows = &mut self.comps[c - 1];
        let placed = match strategy {
            Strategy::Literal => literal_insert(params, rows, s)?,
            Strategy::Corrected => corrected_insert(params, rows, s)?,
        };
        let (r, col) = placed.new_box;
        let t = &mut self.t[c - 1];
        if r == t.len() {
            t.push(Vec::new());
        }
        debug_assert_eq!(t[r].len(), col);
        t[r].push(i);
        Ok((
            placed.chain.into_iter().map(|b| to_cell(b, c)).collect(),
            to_cell(placed.new_box, c),
        ))
    }

    fn output(&self, params: &HookParams, strategy: Strategy) -> HookTableau {
        let mut comps = self.comps.clone();
        if strategy == Strategy::Corrected {
            for (c, rows) in comps.iter_mut().enumerate() {
                normalize::normalize(params, rows, c + 1);
            }
        }
        Tableau::from_rows(comps).expect("insertion keeps partition shapes")
    }
}

fn check_literal_shape(state: &State, step: usize) -> Result<()> {
    for rows in &state.comps {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return param_err(format!("literal insertion left a non-partition shape at step {step}"));
        }
    }
    Ok(())
}

/// Inserts the whole word, recording every step.
pub fn insert_sequence(i: &ParitySequence, strategy: Strategy) -> Result<InsertionTrace> {
    let params = i.params();
    let mut state = State::new(params.m());
    let mut steps = Vec::with_capacity(i.len());
    for (n, &s) in i.symbols().iter().enumerate() {
        let (bump_chain, new_box) = state.step(params, strategy, s, n as u32 + 1)?;
        if strategy == Strategy::Literal {
            check_literal_shape(&state, n + 1)?;
        }
        let snapshot = state.output(params, strategy);
        steps.push(InsertionStep {
            symbol: s,
            bump_chain,
            new_box,
            shape: snapshot.shape(),
            s: snapshot,
        });
    }
    Ok(InsertionTrace {
        params: params.clone(),
        strategy,
        steps,
        s: state.output(params, strategy),
        t: Tableau::from_rows(state.t).map_err(|e| Error::Parameter(format!("recording tableau: {e}")))?,
    })
}

/// Final `(S, T)` without the step history.
pub fn rsk_pair(i: &ParitySequence, strategy: Strategy) -> Result<(HookTableau, StandardTableau)> {
    let params = i.params();
    let mut state = State::new(params.m());
    for (n, &s) in i.symbols().iter().enumerate() {
        state.step(params, strategy, s, n as u32 + 1)?;
        if strategy == Strategy::Literal {
            check_literal_shape(&state, n + 1)?;
        }
    }
    let t = Tableau::from_rows(state.t.clone())?;
    Ok((state.output(params, strategy), t))
}

/// The word whose corrected insertion gives `(s, t)`.
pub fn reverse_insert(
    s: &HookTableau,
    t: &StandardTableau,
    params: &HookParams,
    strategy: Strategy,
) -> Result<ParitySequence> {
    if strategy != Strategy::Corrected {
        return Err(Error::Refused(
            "reverse insertion exists only for the corrected strategy".into(),
        ));
    }
    if s.shape() != t.shape() {
        return param_err(format!("shapes differ: {} vs {}", s.shape(), t.shape()));
    }
    if !s.is_semistandard(params) || !t.is_standard() {
        return param_err("reverse insertion needs a semistandard S and a standard T");
    }
    let mut comps: Vec<Rows> = s.components().to_vec();
    for (c, rows) in comps.iter_mut().enumerate() {
        normalize::denormalize(params, rows, c + 1);
    }
    let n = t.size() as u32;
    let mut word = vec![crate::Symbol(0); n as usize];
    for i in (1..=n).rev() {
        let cell = t.cell_of(i).expect("standard tableau holds every entry");
        let rows = &mut comps[cell.comp - 1];
        word[i as usize - 1] = corrected_remove(params, rows, cell.row - 1, cell.col - 1)?;
    }
    ParitySequence::new(params, word)
}

impl InsertionTrace {
    /// Per-step JSON: symbol, bump chain, new box, shape and insertion tableau.
    pub fn to_json(&self) -> serde_json::Value {
        let name = |s: crate::Symbol| self.params.symbol_name(s);
        let cell = |c: &Cell| serde_json::json!([c.row, c.col, c.comp]);
        serde_json::json!({
            "params": self.params.to_string(),
            "strategy": self.strategy.to_string(),
            "steps": self.steps.iter().enumerate().map(|(i, st)| serde_json::json!({
                "step": i + 1,
                "symbol": st.symbol.0,
                "name": name(st.symbol),
                "bump_chain": st.bump_chain.iter().map(cell).collect::<Vec<_>>(),
                "new_box": cell(&st.new_box),
                "shape": st.shape.to_string(),
                "s": st.s.display_with(&self.params).to_string(),
            })).collect::<Vec<_>>(),
            "s": self.s.display_with(&self.params).to_string(),
            "t": self.t.to_string(),
            "shape": self.t.shape().to_string(),
        })
    }
}
