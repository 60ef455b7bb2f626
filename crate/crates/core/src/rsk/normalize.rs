//! Conversion between fillings that are semistandard in the internal insertion
//! order and fillings that are semistandard in the alphabet order.
//!
//! Only the odd letters move. Their region, read column by column, is a skew
//! semistandard tableau once the odd letters are renumbered in reverse; a
//! Bender–Knuth sweep along a reduced word of the longest permutation then
//! restores the original content.

use super::engine::Rows;
use crate::combinatorics::{HookParams, Parity, Symbol};

/// The odd region of one component, transposed: row `j` is column `j` of the
/// original filling, starting at column `offsets[j]`; entries are local indices.
struct Skew {
    offsets: Vec<usize>,
    rows: Vec<Vec<u16>>,
}

impl Skew {
    fn get(&self, r: usize, c: usize) -> Option<u16> {
        let off = *self.offsets.get(r)?;
        c.checked_sub(off).and_then(|i| self.rows[r].get(i).copied())
    }

    /// Bender–Knuth involution exchanging the free `i` and `i+1` entries row by row.
    fn bender_knuth(&mut self, i: u16) {
        for r in 0..self.rows.len() {
            let off = self.offsets[r];
            let free: Vec<usize> = (0..self.rows[r].len())
                .filter(|&k| {
                    let c = off + k;
                    match self.rows[r][k] {
                        v if v == i => self.get(r + 1, c) != Some(i + 1),
                        v if v == i + 1 => r == 0 || self.get(r - 1, c) != Some(i),
                        _ => false,
                    }
                })
                .collect();
            let a = free.iter().filter(|&&k| self.rows[r][k] == i).count();
            let b = free.len() - a;
            for (n, &k) in free.iter().enumerate() {
                self.rows[r][k] = if n < b { i } else { i + 1 };
            }
        }
    }
}

/// `1, 2 1, 3 2 1, …`: a reduced word for the longest permutation of `l` letters.
fn longest_word(l: usize) -> Vec<u16> {
    (1..l as u16).flat_map(|j| (1..=j).rev()).collect()
}

fn extract(params: &HookParams, rows: &Rows, color: usize, reverse: bool) -> Skew {
    let l = params.l()[color - 1] as u16;
    let width = rows.first().map_or(0, Vec::len);
    let mut offsets = Vec::with_capacity(width);
    let mut out = Vec::with_capacity(width);
    for c in 0..width {
        let column: Vec<Symbol> = rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect();
        let evens = column
            .iter()
            .take_while(|&&s| params.parity(s) == Parity::Even)
            .count();
        offsets.push(evens);
        out.push(
            column[evens..]
                .iter()
                .map(|&s| {
                    let j = params.local_index(s) as u16;
                    if reverse {
                        l + 1 - j
                    } else {
                        j
                    }
                })
                .collect(),
        );
    }
    Skew { offsets, rows: out }
}

fn write_back(params: &HookParams, rows: &mut Rows, color: usize, skew: &Skew, reverse: bool) {
    let l = params.l()[color - 1] as u16;
    for (c, col) in skew.rows.iter().enumerate() {
        for (k, &j) in col.iter().enumerate() {
            let j = if reverse { l + 1 - j } else { j };
            rows[skew.offsets[c] + k][c] = params
                .symbol(Parity::Odd, j as usize, color)
                .expect("local index in range");
        }
    }
}

/// Internal-order filling of one component to an alphabet-order filling.
pub(crate) fn normalize(params: &HookParams, rows: &mut Rows, color: usize) {
    let l = params.l()[color - 1];
    if l < 2 {
        return;
    }
    let mut skew = extract(params, rows, color, true);
    for i in longest_word(l) {
        skew.bender_knuth(i);
    }
    write_back(params, rows, color, &skew, false);
}

/// Inverse of [`normalize`].
pub(crate) fn denormalize(params: &HookParams, rows: &mut Rows, color: usize) {
    let l = params.l()[color - 1];
    if l < 2 {
        return;
    }
    let mut skew = extract(params, rows, color, false);
    for i in longest_word(l).into_iter().rev() {
        skew.bender_knuth(i);
    }
    write_back(params, rows, color, &skew, true);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words() {
        assert_eq!(longest_word(1), Vec::<u16>::new());
        assert_eq!(longest_word(3), vec![1, 2, 1]);
        assert_eq!(longest_word(4), vec![1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn bender_knuth_swaps_free_letters() {
        // single row 1 1 2: two free 1s and one free 2 become one 1 and two 2s
        let mut s = Skew {
            offsets: vec![0],
            rows: vec![vec![1, 1, 2]],
        };
        s.bender_knuth(1);
        assert_eq!(s.rows, vec![vec![1, 2, 2]]);
        // a column pair 1 over 2 is fixed
        let mut s = Skew {
            offsets: vec![0, 0],
            rows: vec![vec![1, 1], vec![2]],
        };
        s.bender_knuth(1);
        assert_eq!(s.rows, vec![vec![1, 2], vec![2]]);
    }
}
