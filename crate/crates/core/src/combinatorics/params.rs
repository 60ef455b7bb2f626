use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::multipartition::Multipartition;
use crate::error::{param_err, parse_err, Error, Result};

/// A letter of the graded alphabet, 1-based: symbol `i` stands for the variable `z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub u16);

impl Symbol {
    /// 0-based position, for indexing exponent vectors.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(i: usize) -> Symbol {
        Symbol((i + 1) as u16)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    /// An `x` variable.
    Even,
    /// A `y` variable.
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct ParamsInner {
    k: Vec<usize>,
    l: Vec<usize>,
    // d_0 = 0, d_a = d_{a-1} + k_a + l_a
    bounds: Vec<usize>,
}

/// The hook parameters `(k_1|l_1, ..., k_m|l_m)` and the graded alphabet they define.
///
/// Colour `a` owns symbols `d_{a-1}+1 ..= d_a`; the first `k_a` of them are even
/// (`x^{(a)}_1..`), the remaining `l_a` odd (`y^{(a)}_1..`). Cloning is cheap.
#[derive(Clone, Debug, Hash)]
pub struct HookParams(Arc<ParamsInner>);

impl PartialEq for HookParams {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for HookParams {}

impl HookParams {
    pub fn new(k: Vec<usize>, l: Vec<usize>) -> Result<Self> {
        if k.is_empty() || k.len() != l.len() {
            return param_err(format!(
                "k and l must be nonempty lists of equal length (got {} and {})",
                k.len(),
                l.len()
            ));
        }
        let mut bounds = vec![0];
        for (ka, la) in k.iter().zip(&l) {
            bounds.push(bounds.last().unwrap() + ka + la);
        }
        if *bounds.last().unwrap() > u16::MAX as usize {
            return param_err("alphabet too large");
        }
        Ok(HookParams(Arc::new(ParamsInner { k, l, bounds })))
    }

    /// `k_a = l_a = n` for every colour: every multipartition of `n` is then a hook shape.
    pub fn uniform(m: usize, n: usize) -> Result<Self> {
        HookParams::new(vec![n; m], vec![n; m])
    }

    pub fn m(&self) -> usize {
        self.0.k.len()
    }

    pub fn k(&self) -> &[usize] {
        &self.0.k
    }

    pub fn l(&self) -> &[usize] {
        &self.0.l
    }

    /// Total number of symbols `k + l`.
    pub fn n_symbols(&self) -> usize {
        *self.0.bounds.last().unwrap()
    }

    /// `d_a`, for `a` in `0..=m`.
    pub fn boundary(&self, a: usize) -> usize {
        self.0.bounds[a]
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (1..=self.n_symbols() as u16).map(Symbol)
    }

    /// Symbols of colour `c` (1-based), in increasing order.
    pub fn symbols_of_color(&self, c: usize) -> RangeInclusive<u16> {
        (self.boundary(c - 1) + 1) as u16..=self.boundary(c) as u16
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.0 >= 1 && (s.0 as usize) <= self.n_symbols()
    }

    /// Colour of a symbol, 1-based.
    pub fn color(&self, s: Symbol) -> usize {
        let i = s.0 as usize;
        debug_assert!(self.contains(s), "symbol {i} outside the alphabet");
        self.0.bounds.partition_point(|&d| d < i)
    }

    pub fn parity(&self, s: Symbol) -> Parity {
        let c = self.color(s);
        if (s.0 as usize) <= self.boundary(c - 1) + self.0.k[c - 1] {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Position of `s` among the letters of its own parity and colour, 1-based.
    pub fn local_index(&self, s: Symbol) -> usize {
        let c = self.color(s);
        let start = self.boundary(c - 1);
        match self.parity(s) {
            Parity::Even => s.0 as usize - start,
            Parity::Odd => s.0 as usize - start - self.0.k[c - 1],
        }
    }

    /// The symbol for `x^{(c)}_a` (even) or `y^{(c)}_a` (odd).
    pub fn symbol(&self, parity: Parity, index: usize, color: usize) -> Result<Symbol> {
        if color == 0 || color > self.m() {
            return param_err(format!("colour {color} outside 1..={}", self.m()));
        }
        let (offset, count) = match parity {
            Parity::Even => (self.boundary(color - 1), self.0.k[color - 1]),
            Parity::Odd => (
                self.boundary(color - 1) + self.0.k[color - 1],
                self.0.l[color - 1],
            ),
        };
        if index == 0 || index > count {
            return param_err(format!(
                "index {index} outside 1..={count} for colour {color} ({parity:?})"
            ));
        }
        Ok(Symbol((offset + index) as u16))
    }

    /// Variable name: `x2`, `y1` when `m = 1`, otherwise `x2.1`, `y1.3` (index.colour).
    pub fn symbol_name(&self, s: Symbol) -> String {
        let letter = match self.parity(s) {
            Parity::Even => 'x',
            Parity::Odd => 'y',
        };
        if self.m() == 1 {
            format!("{letter}{}", self.local_index(s))
        } else {
            format!("{letter}{}.{}", self.local_index(s), self.color(s))
        }
    }

    /// Parses a symbol given as a 1-based index (`7`), `z7`, or a variable name.
    /// The colour suffix may be omitted when `m = 1`.
    pub fn parse_symbol(&self, token: &str) -> Result<Symbol> {
        let t = token.trim();
        if let Ok(i) = t.parse::<usize>() {
            let s = Symbol(i as u16);
            if i == 0 || i > self.n_symbols() {
                return parse_err(format!("symbol {i} outside 1..={}", self.n_symbols()));
            }
            return Ok(s);
        }
        let mut chars = t.chars();
        let parity = match chars.next() {
            Some('x') => Parity::Even,
            Some('y') => Parity::Odd,
            Some('z') if chars.as_str().parse::<usize>().is_ok() => {
                return self.parse_symbol(chars.as_str());
            }
            _ => return parse_err(format!("bad symbol {t:?}")),
        };
        let rest = chars.as_str();
        let (idx, color) = match rest.split_once('.') {
            Some((i, c)) => (i, c.parse::<usize>().ok()),
            None if self.m() == 1 => (rest, Some(1)),
            None => return parse_err(format!("symbol {t:?} needs a colour suffix (m > 1)")),
        };
        let (Ok(idx), Some(color)) = (idx.parse::<usize>(), color) else {
            return parse_err(format!("bad symbol {t:?}"));
        };
        self.symbol(parity, idx, color)
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    }

    /// True iff part number `k_c + 1` of component `c` is at most `l_c`, for every `c`.
    pub fn is_hook(&self, shape: &Multipartition) -> Result<bool> {
        if shape.m() != self.m() {
            return param_err(format!(
                "shape has {} components but parameters have m = {}",
                shape.m(),
                self.m()
            ));
        }
        Ok(shape
            .components()
            .iter()
            .enumerate()
            .all(|(c, p)| p.part(self.0.k[c] + 1) <= self.0.l[c]))
    }
}

/// `1|1,1|2,1|3`.
impl fmt::Display for HookParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, l)) in self.0.k.iter().zip(&self.0.l).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}|{l}")?;
        }
        Ok(())
    }
}

impl FromStr for HookParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut k = Vec::new();
        let mut l = Vec::new();
        for block in s.split(',') {
            let Some((a, b)) = block.split_once('|') else {
                return parse_err(format!("parameter block {block:?} is not of the form k|l"));
            };
            let (Ok(a), Ok(b)) = (a.trim().parse(), b.trim().parse()) else {
                return parse_err(format!("parameter block {block:?} is not of the form k|l"));
            };
            k.push(a);
            l.push(b);
        }
        HookParams::new(k, l).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for HookParams {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HookParams {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
