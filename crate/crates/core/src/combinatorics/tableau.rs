use std::fmt;

use serde::{Deserialize, Serialize};

use super::multipartition::{Cell, Multipartition};
use super::params::{HookParams, Parity, Symbol};
use super::partition::Partition;
use crate::error::{param_err, Result};

/// A filling of a multipartition diagram: components, then rows, then entries.
///
/// The derived ordering compares fillings in reading order, so among fillings of
/// one shape it is lexicographic on the reading word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau<T> {
    comps: Vec<Vec<Vec<T>>>,
}

/// Standard filling with `1..=n`.
pub type StandardTableau = Tableau<u32>;
/// `(k,l)`-semistandard filling with alphabet symbols.
pub type HookTableau = Tableau<Symbol>;

impl<T: Clone> Tableau<T> {
    pub fn empty(m: usize) -> Self {
        Tableau {
            comps: vec![Vec::new(); m],
        }
    }

    /// Builds a tableau from nested rows; the row lengths must form a multipartition.
    pub fn from_rows(comps: Vec<Vec<Vec<T>>>) -> Result<Self> {
        if comps.is_empty() {
            return param_err("a tableau needs at least one component");
        }
        for comp in &comps {
            if comp.iter().any(Vec::is_empty) || comp.windows(2).any(|w| w[0].len() < w[1].len())
            {
                return param_err("row lengths do not form a partition");
            }
        }
        Ok(Tableau { comps })
    }

    pub fn m(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Vec<Vec<T>>] {
        &self.comps
    }

    pub fn shape(&self) -> Multipartition {
        let parts = self
            .comps
            .iter()
            .map(|c| Partition::new(c.iter().map(Vec::len).collect()).expect("tableau rows"))
            .collect();
        Multipartition::new(parts).expect("tableau components")
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().map(Vec::len).sum()
    }

    pub fn get(&self, cell: Cell) -> Option<&T> {
        self.comps
            .get(cell.comp.checked_sub(1)?)?
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
    }

    /// `(cell, entry)` pairs in reading order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, &T)> + '_ {
        self.comps.iter().enumerate().flat_map(|(c, rows)| {
            rows.iter().enumerate().flat_map(move |(r, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, e)| (Cell::new(r + 1, j + 1, c + 1), e))
            })
        })
    }

    /// Component `c` (1-based) with its rows.
    pub fn component(&self, c: usize) -> &[Vec<T>] {
        &self.comps[c - 1]
    }
}

impl StandardTableau {
    /// Cell holding entry `i`.
    pub fn cell_of(&self, i: u32) -> Option<Cell> {
        self.entries().find(|(_, &e)| e == i).map(|(c, _)| c)
    }

    /// `c_T(i)`: component containing entry `i`.
    pub fn component_of(&self, i: u32) -> Option<usize> {
        self.cell_of(i).map(|c| c.comp)
    }

    /// Rows and columns strictly increase in every component and the entries are `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.entries().map(|(_, &e)| e).collect();
        seen.sort_unstable();
        if !seen.iter().copied().eq(1..=self.size() as u32) {
            return false;
        }
        self.entries().all(|(cell, &e)| {
            let left = (cell.col > 1).then(|| self.get(Cell::new(cell.row, cell.col - 1, cell.comp)));
            let up = (cell.row > 1).then(|| self.get(Cell::new(cell.row - 1, cell.col, cell.comp)));
            left.flatten().map_or(true, |&a| a < e) && up.flatten().map_or(true, |&a| a < e)
        })
    }
}

impl HookTableau {
    /// `true` iff the filling satisfies every `(k,l)`-semistandard condition for `params`.
    ///
    /// Checks the conditions one by one (colour, even region a Young diagram,
    /// even rows weak / columns strict, odd rows strict / columns weak) rather than
    /// through the neighbour rule used by the generator.
    pub fn is_semistandard(&self, params: &HookParams) -> bool {
        if self.m() != params.m() {
            return false;
        }
        for (c, rows) in self.comps.iter().enumerate() {
            let color = c + 1;
            if rows
                .iter()
                .flatten()
                .any(|&s| !params.contains(s) || params.color(s) != color)
            {
                return false;
            }
            let is_even = |s: Symbol| params.parity(s) == Parity::Even;
            // even boxes form a Young subdiagram
            let even_lens: Vec<usize> = rows
                .iter()
                .map(|row| row.iter().take_while(|&&s| is_even(s)).count())
                .collect();
            for (r, row) in rows.iter().enumerate() {
                if row[even_lens[r]..].iter().any(|&s| is_even(s)) {
                    return false;
                }
            }
            if even_lens.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
            for (r, row) in rows.iter().enumerate() {
                for j in 1..row.len() {
                    let (a, b) = (row[j - 1], row[j]);
                    let ok = if is_even(a) && is_even(b) {
                        a <= b
                    } else if !is_even(a) && !is_even(b) {
                        a < b
                    } else {
                        is_even(a)
                    };
                    if !ok {
                        return false;
                    }
                }
                if r == 0 {
                    continue;
                }
                for (j, &b) in row.iter().enumerate() {
                    let a = rows[r - 1][j];
                    let ok = if is_even(a) && is_even(b) {
                        a < b
                    } else if !is_even(a) && !is_even(b) {
                        a <= b
                    } else {
                        is_even(a)
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Multiset of symbols as a count vector indexed by `Symbol::index`.
    pub fn content(&self, n_symbols: usize) -> Vec<u32> {
        let mut out = vec![0; n_symbols];
        for (_, s) in self.entries() {
            out[s.index()] += 1;
        }
        out
    }

    /// Renders with variable names, e.g. `(x1 y1 / y1);(x1.2)`.
    pub fn display_with<'a>(&'a self, params: &'a HookParams) -> impl fmt::Display + 'a {
        DisplayWith(self, move |s: &Symbol| params.symbol_name(*s))
    }
}

struct DisplayWith<'a, T, F>(&'a Tableau<T>, F);

impl<T, F: Fn(&T) -> String> fmt::Display for DisplayWith<'_, T, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, rows) in self.0.comps.iter().enumerate() {
            if c > 0 {
                write!(f, ";")?;
            }
            if rows.is_empty() {
                write!(f, "-")?;
                continue;
            }
            write!(f, "(")?;
            for (r, row) in rows.iter().enumerate() {
                if r > 0 {
                    write!(f, " / ")?;
                }
                let names: Vec<String> = row.iter().map(&self.1).collect();
                write!(f, "{}", names.join(" "))?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// `(1 2 5 / 4);(3 6 7 / 8)`.
impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DisplayWith(self, |e: &u32| e.to_string()).fmt(f)
    }
}

/// All standard tableaux of `shape`, sorted.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<StandardTableau> {
    // place the largest entry in a removable corner, recursively
    fn rec(rows: &mut Vec<Vec<usize>>, next: u32, out: &mut Vec<Vec<Vec<Vec<u32>>>>, acc: &mut Vec<Vec<Vec<u32>>>) {
        if next == 0 {
            out.push(acc.clone());
            return;
        }
        for c in 0..rows.len() {
            for r in 0..rows[c].len() {
                let len = rows[c][r];
                if len == 0 || rows[c].get(r + 1).is_some_and(|&below| below >= len) {
                    continue;
                }
                acc[c][r][len - 1] = next;
                rows[c][r] -= 1;
                rec(rows, next - 1, out, acc);
                rows[c][r] += 1;
                acc[c][r][len - 1] = 0;
            }
        }
    }
    let mut rows: Vec<Vec<usize>> = shape.components().iter().map(|p| p.parts().to_vec()).collect();
    let mut acc: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|c| c.iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut raw = Vec::new();
    rec(&mut rows, shape.size() as u32, &mut raw, &mut acc);
    let mut out: Vec<StandardTableau> = raw.into_iter().map(|comps| Tableau { comps }).collect();
    out.sort();
    out
}

/// All `(k,l)`-semistandard tableaux of `shape`, sorted; empty iff `shape` is not a hook shape.
pub fn hook_tableaux(shape: &Multipartition, params: &HookParams) -> Result<Vec<HookTableau>> {
    if shape.m() != params.m() {
        return param_err(format!(
            "shape has {} components but parameters have m = {}",
            shape.m(),
            params.m()
        ));
    }
    let per_comp: Vec<Vec<Vec<Vec<Symbol>>>> = shape
        .components()
        .iter()
        .enumerate()
        .map(|(c, p)| component_fillings(p, c + 1, params, usize::MAX))
        .collect();
    let mut out = vec![Vec::new()];
    for fills in per_comp {
        let mut next = Vec::with_capacity(out.len() * fills.len());
        for prefix in &out {
            for f in &fills {
                let mut t: Vec<Vec<Vec<Symbol>>> = prefix.clone();
                t.push(f.clone());
                next.push(t);
            }
        }
        out = next;
    }
    let mut out: Vec<HookTableau> = out.into_iter().map(|comps| Tableau { comps }).collect();
    out.sort();
    Ok(out)
}

/// The lexicographically smallest hook tableau of `shape` in reading order, if any.
pub fn first_hook_tableau(shape: &Multipartition, params: &HookParams) -> Result<Option<HookTableau>> {
    if shape.m() != params.m() {
        return param_err(format!(
            "shape has {} components but parameters have m = {}",
            shape.m(),
            params.m()
        ));
    }
    let mut comps = Vec::with_capacity(shape.m());
    for (c, p) in shape.components().iter().enumerate() {
        match component_fillings(p, c + 1, params, 1).pop() {
            Some(f) => comps.push(f),
            None => return Ok(None),
        }
    }
    Ok(Some(Tableau { comps }))
}

/// Fillings of one partition with colour-`color` symbols, by backtracking in reading
/// order; the first `limit` found are the smallest.
fn component_fillings(shape: &Partition, color: usize, params: &HookParams, limit: usize) -> Vec<Vec<Vec<Symbol>>> {
    let symbols: Vec<Symbol> = params.symbols_of_color(color).map(Symbol).collect();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |j| (r, j)))
        .collect();
    let mut grid: Vec<Vec<Symbol>> = shape.parts().iter().map(|&len| vec![Symbol(0); len]).collect();
    let mut out = Vec::new();
    fill_cells(&cells, 0, &symbols, params, &mut grid, &mut out, limit);
    out
}

fn fill_cells(
    cells: &[(usize, usize)],
    at: usize,
    symbols: &[Symbol],
    params: &HookParams,
    grid: &mut Vec<Vec<Symbol>>,
    out: &mut Vec<Vec<Vec<Symbol>>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let Some(&(r, j)) = cells.get(at) else {
        out.push(grid.clone());
        return;
    };
    for &s in symbols {
        let odd = params.parity(s).is_odd();
        // row: weakly increasing, equal letters only if even
        if j > 0 {
            let a = grid[r][j - 1];
            if a > s || (a == s && odd) {
                continue;
            }
        }
        // column: weakly increasing, equal letters only if odd
        if r > 0 {
            let a = grid[r - 1][j];
            if a > s || (a == s && !odd) {
                continue;
            }
        }
        grid[r][j] = s;
        fill_cells(cells, at + 1, symbols, params, grid, out, limit);
    }
    grid[r][j] = Symbol(0);
}

/// A row of the superstandard tableau: entries `start..start+len` in component `comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSegment {
    /// First entry (1-based).
    pub start: usize,
    pub len: usize,
    /// Component (1-based).
    pub comp: usize,
}

impl RowSegment {
    /// 0-based index range into a sequence of length `n`.
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start - 1..self.start - 1 + self.len
    }
}

/// `t^mu`: `1..n` entered along the rows of the first component, then the second, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperstandardTableau {
    pub tableau: StandardTableau,
    pub rows: Vec<RowSegment>,
}

impl SuperstandardTableau {
    /// Component holding entry `i` (1-based).
    pub fn component_of(&self, i: usize) -> Option<usize> {
        self.rows
            .iter()
            .find(|seg| seg.start <= i && i < seg.start + seg.len)
            .map(|seg| seg.comp)
    }
}

pub fn superstandard(mu: &Multipartition) -> SuperstandardTableau {
    let mut next = 1u32;
    let mut rows = Vec::new();
    let mut comps = Vec::with_capacity(mu.m());
    for (c, p) in mu.components().iter().enumerate() {
        let mut comp = Vec::with_capacity(p.len());
        for &len in p.parts() {
            rows.push(RowSegment {
                start: next as usize,
                len,
                comp: c + 1,
            });
            comp.push((next..next + len as u32).collect());
            next += len as u32;
        }
        comps.push(comp);
    }
    SuperstandardTableau {
        tableau: Tableau { comps },
        rows,
    }
}
