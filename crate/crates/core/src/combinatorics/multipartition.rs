use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{param_err, parse_err, Error, Result};

/// A box of a multipartition diagram, addressed `(row, col, comp)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Cell { row, col, comp }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An ordered `m`-tuple of partitions.
///
/// The canonical order (used for enumeration and table layout) compares
/// components left to right; within a component, larger sizes come first and
/// equal sizes are in reverse lexicographic order. For `m = 2, n = 2` this gives
/// `((2);-)`, `((1,1);-)`, `((1);(1))`, `(-;(2))`, `(-;(1,1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return param_err("a multipartition needs at least one component");
        }
        Ok(Multipartition { components })
    }

    /// The multipartition with `m` empty components.
    pub fn empty(m: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); m.max(1)],
        }
    }

    /// Single-component multipartition.
    pub fn single(p: Partition) -> Self {
        Multipartition {
            components: vec![p],
        }
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c`, 1-based.
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    /// Every box, in reading order: component, then row, then column.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.components.iter().enumerate().flat_map(|(c, p)| {
            p.parts()
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (1..=len).map(move |j| Cell::new(r + 1, j, c + 1)))
        })
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.comp >= 1
            && cell.comp <= self.m()
            && cell.row >= 1
            && cell.col >= 1
            && self.component(cell.comp).part(cell.row) >= cell.col
    }

    /// Every multipartition of `n` with `m` components, in canonical order.
    pub fn enumerate(n: usize, m: usize) -> Result<Vec<Multipartition>> {
        if m == 0 {
            return param_err("m must be at least 1");
        }
        let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        fill(n, m, &by_size, &mut cur, &mut out);
        out.sort();
        Ok(out)
    }
}

fn fill(
    rest: usize,
    m: usize,
    by_size: &[Vec<Partition>],
    cur: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if cur.len() + 1 == m {
        for p in &by_size[rest] {
            cur.push(p.clone());
            out.push(Multipartition {
                components: cur.clone(),
            });
            cur.pop();
        }
        return;
    }
    for size in (0..=rest).rev() {
        for p in &by_size[size] {
            cur.push(p.clone());
            fill(rest - size, m, by_size, cur, out);
            cur.pop();
        }
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.components
            .cmp(&other.components)
            .then_with(|| self.m().cmp(&other.m()))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `(2,1,1);(3,2,2,1);(4,3,1)`, with `-` for an empty component.
impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Multipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return parse_err("empty multipartition string");
        }
        let parse = |body: &str| {
            body.split(';')
                .map(str::parse::<Partition>)
                .collect::<Result<Vec<_>>>()
        };
        // tolerate one pair of enclosing brackets around the whole tuple
        let components = match parse(s) {
            Ok(c) => c,
            Err(e) => match s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                Some(inner) => parse(inner).map_err(|_| e)?,
                None => return Err(e),
            },
        };
        Multipartition::new(components)
    }
}

impl TryFrom<String> for Multipartition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Multipartition> for String {
    fn from(m: Multipartition) -> Self {
        m.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_n2_m2_in_canonical_order() {
        let got: Vec<String> = Multipartition::enumerate(2, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(got, vec!["(2);-", "(1,1);-", "(1);(1)", "-;(2)", "-;(1,1)"]);
    }

    #[test]
    fn enumerate_edge_cases() {
        let e = Multipartition::enumerate(0, 2).unwrap();
        assert_eq!(e, vec![Multipartition::empty(2)]);
        assert_eq!(Multipartition::enumerate(3, 1).unwrap().len(), 3);
        assert!(Multipartition::enumerate(3, 0).is_err());
    }

    #[test]
    fn parse_and_print() {
        let m = mp("(2,1,1);(3,2,2,1);(4,3,1)");
        assert_eq!(m.m(), 3);
        assert_eq!(m.size(), 20);
        assert_eq!(m.to_string(), "(2,1,1);(3,2,2,1);(4,3,1)");
        assert_eq!(mp("((1);0)").to_string(), "(1);-");
        assert!("(1);(1,2)".parse::<Multipartition>().is_err());
    }

    #[test]
    fn cells_in_reading_order() {
        let cells: Vec<Cell> = mp("(2);(1)").cells().collect();
        assert_eq!(
            cells,
            vec![Cell::new(1, 1, 1), Cell::new(1, 2, 1), Cell::new(1, 1, 2)]
        );
        assert!(mp("(2);(1)").contains(Cell::new(1, 2, 1)));
        assert!(!mp("(2);(1)").contains(Cell::new(1, 2, 2)));
    }
}
