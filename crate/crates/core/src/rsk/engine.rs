//! Bumping rules for both strategies, working on raw row-major fillings.

use crate::combinatorics::{Cell, HookParams, Parity, Symbol};
use crate::error::{param_err, Result};

pub(crate) type Rows = Vec<Vec<Symbol>>;

/// Result of one insertion into a component.
pub(crate) struct Placement {
    /// Boxes (0-based row, col) whose entry was displaced, in order.
    pub chain: Vec<(usize, usize)>,
    pub new_box: (usize, usize),
}

fn column_height(rows: &Rows, col: usize) -> usize {
    rows.iter().take_while(|r| r.len() > col).count()
}

fn place_at_bottom(rows: &mut Rows, col: usize, s: Symbol) -> Result<(usize, usize)> {
    let h = column_height(rows, col);
    if h == rows.len() {
        rows.push(Vec::new());
    }
    if rows[h].len() != col {
        return param_err(format!(
            "insertion would leave a gap at row {}, column {}",
            h + 1,
            col + 1
        ));
    }
    rows[h].push(s);
    Ok((h, col))
}

/// Position of `s` in the internal order of its colour: evens by index, then odds
/// by decreasing index.
pub(crate) fn internal_key(params: &HookParams, s: Symbol) -> (u8, i64) {
    let j = params.local_index(s) as i64;
    match params.parity(s) {
        Parity::Even => (0, j),
        Parity::Odd => (1, -j),
    }
}

/// Column insertion in the internal order: an even letter bumps the topmost entry
/// not below it, an odd letter the topmost entry strictly above it.
pub(crate) fn corrected_insert(params: &HookParams, rows: &mut Rows, s: Symbol) -> Result<Placement> {
    let mut chain = Vec::new();
    let mut b = s;
    let mut col = 0;
    loop {
        let kb = internal_key(params, b);
        let odd = params.parity(b).is_odd();
        let h = column_height(rows, col);
        let hit = (0..h).find(|&r| {
            let ke = internal_key(params, rows[r][col]);
            if odd {
                ke > kb
            } else {
                ke >= kb
            }
        });
        match hit {
            Some(r) => {
                chain.push((r, col));
                b = std::mem::replace(&mut rows[r][col], b);
                col += 1;
            }
            None => {
                let new_box = place_at_bottom(rows, col, b)?;
                return Ok(Placement { chain, new_box });
            }
        }
    }
}

/// Undoes [`corrected_insert`] for the box `(row, col)`; returns the inserted letter.
pub(crate) fn corrected_remove(params: &HookParams, rows: &mut Rows, row: usize, col: usize) -> Result<Symbol> {
    if rows.get(row).map(Vec::len) != Some(col + 1)
        || rows.get(row + 1).is_some_and(|r| r.len() > col)
    {
        return param_err(format!("box ({}, {}) is not a corner", row + 1, col + 1));
    }
    let mut b = rows[row].pop().unwrap();
    if rows[row].is_empty() {
        rows.pop();
    }
    for c in (0..col).rev() {
        let kb = internal_key(params, b);
        let h = column_height(rows, c);
        let hit = (0..h).rev().find(|&r| {
            let e = rows[r][c];
            let ke = internal_key(params, e);
            if params.parity(e).is_odd() {
                ke < kb
            } else {
                ke <= kb
            }
        });
        let Some(r) = hit else {
            return param_err(format!("no entry of column {} could have displaced the letter", c + 1));
        };
        b = std::mem::replace(&mut rows[r][c], b);
    }
    Ok(b)
}

enum Lane {
    Column(usize),
    Row(usize),
}

/// Smallest entry `>= b` (ties: first in scan order).
fn smallest_at_least(entries: impl Iterator<Item = (usize, Symbol)>, b: Symbol) -> Option<usize> {
    entries
        .filter(|&(_, e)| e >= b)
        .min_by_key(|&(i, e)| (e, i))
        .map(|(i, _)| i)
}

/// Word-for-word rules: even letters column-insert and odd letters row-insert,
/// both displacing the smallest entry `>=` themselves in the alphabet order.
pub(crate) fn literal_insert(params: &HookParams, rows: &mut Rows, s: Symbol) -> Result<Placement> {
    let mut chain = Vec::new();
    let mut b = s;
    let mut lane = if params.parity(s).is_odd() {
        Lane::Row(0)
    } else {
        Lane::Column(0)
    };
    loop {
        match lane {
            Lane::Column(col) => {
                let h = column_height(rows, col);
                match smallest_at_least((0..h).map(|r| (r, rows[r][col])), b) {
                    Some(r) => {
                        chain.push((r, col));
                        b = std::mem::replace(&mut rows[r][col], b);
                        lane = if params.parity(b).is_odd() {
                            Lane::Row(0)
                        } else {
                            Lane::Column(col + 1)
                        };
                    }
                    None => {
                        let new_box = place_at_bottom(rows, col, b)?;
                        return Ok(Placement { chain, new_box });
                    }
                }
            }
            Lane::Row(r) => {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                let row = &rows[r];
                match smallest_at_least(row.iter().copied().enumerate(), b) {
                    Some(c) => {
                        chain.push((r, c));
                        b = std::mem::replace(&mut rows[r][c], b);
                        lane = Lane::Row(r + 1);
                    }
                    None => {
                        let c = rows[r].len();
                        if r > 0 && rows[r - 1].len() <= c {
                            return param_err(format!(
                                "insertion would overhang row {} at column {}",
                                r + 1,
                                c + 1
                            ));
                        }
                        rows[r].push(b);
                        return Ok(Placement {
                            chain,
                            new_box: (r, c),
                        });
                    }
                }
            }
        }
    }
}

pub(crate) fn to_cell((r, c): (usize, usize), comp: usize) -> Cell {
    Cell::new(r + 1, c + 1, comp)
}
