//! Brute-force model of `G(m,1,n) = Z_m ≀ S_n` for checking centralizer orders.

use std::collections::BTreeMap;

use crate::combinatorics::{Multipartition, Partition};
use crate::error::{param_err, Result};

/// `(c, σ)`: the map `(i, a) ↦ (σ(i), a + c_{σ(i)})` on `[n] × Z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub colors: Vec<usize>,
    pub perm: Vec<usize>,
}

impl WreathElement {
    fn as_points(&self, m: usize) -> Vec<usize> {
        let n = self.perm.len();
        let mut out = vec![0; n * m];
        for i in 0..n {
            let j = self.perm[i];
            for a in 0..m {
                out[i * m + a] = j * m + (a + self.colors[j]) % m;
            }
        }
        out
    }

    /// Conjugacy class label: a cycle of length `j` with colour sum `s` adds a part `j`
    /// to component `s` (component `m` when `s ≡ 0`).
    pub fn class(&self, m: usize) -> Multipartition {
        let n = self.perm.len();
        let mut parts = vec![Vec::new(); m];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut sum, mut i) = (0, 0, start);
            while !seen[i] {
                seen[i] = true;
                sum += self.colors[i];
                len += 1;
                i = self.perm[i];
            }
            let comp = match sum % m {
                0 => m - 1,
                s => s - 1,
            };
            parts[comp].push(len);
        }
        let comps = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(p).expect("sorted parts")
            })
            .collect();
        Multipartition::new(comps).expect("m >= 1")
    }
}

/// Every element of `G(m,1,n)`.
pub fn wreath_elements(m: usize, n: usize) -> Vec<WreathElement> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !crate::sequences::composition::next_permutation(&mut p) {
            break;
        }
    }
    let total_colors = m.pow(n as u32);
    let mut out = Vec::with_capacity(perms.len() * total_colors);
    for perm in &perms {
        for mut code in 0..total_colors {
            let mut colors = vec![0; n];
            for c in colors.iter_mut() {
                *c = code % m;
                code /= m;
            }
            out.push(WreathElement {
                colors,
                perm: perm.clone(),
            });
        }
    }
    out
}

/// Centralizer order of each class, by counting commuting elements of a representative.
///
/// Also checks that the class label is a conjugation invariant and that the class
/// sizes agree with `|G| / |Z(g)|`.
pub fn brute_force_centralizers(m: usize, n: usize) -> Result<BTreeMap<Multipartition, u64>> {
    if m == 0 {
        return param_err("m must be at least 1");
    }
    let g = wreath_elements(m, n);
    let pts: Vec<Vec<usize>> = g.iter().map(|e| e.as_points(m)).collect();
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
    let inverse = |a: &[usize]| -> Vec<usize> {
        let mut inv = vec![0; a.len()];
        for (i, &x) in a.iter().enumerate() {
            inv[x] = i;
        }
        inv
    };
    let mut class_size: BTreeMap<Multipartition, u64> = BTreeMap::new();
    let mut rep: BTreeMap<Multipartition, usize> = BTreeMap::new();
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for (i, e) in g.iter().enumerate() {
        let c = e.class(m);
        *class_size.entry(c.clone()).or_default() += 1;
        rep.entry(c).or_insert(i);
    }
    let mut out = BTreeMap::new();
    for (c, &i) in &rep {
        let x = &pts[i];
        let mut centralizer = 0u64;
        for h in &pts {
            if compose(h, x) == compose(x, h) {
                centralizer += 1;
            }
            let conj = compose(&compose(h, x), &inverse(h));
            let j = index[&conj];
            if g[j].class(m) != *c {
                return param_err(format!("class label of {c} is not conjugation invariant"));
            }
        }
        if centralizer * class_size[c] != g.len() as u64 {
            return param_err(format!("orbit-stabilizer fails for class {c}"));
        }
        out.insert(c.clone(), centralizer);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders_and_class_counts() {
        assert_eq!(wreath_elements(2, 2).len(), 8);
        assert_eq!(wreath_elements(2, 3).len(), 48);
        let z = brute_force_centralizers(2, 2).unwrap();
        assert_eq!(z.len(), 5);
        assert_eq!(z[&"(1,1);-".parse::<Multipartition>().unwrap()], 8);
        let z = brute_force_centralizers(1, 3).unwrap();
        assert_eq!(z.values().copied().collect::<Vec<_>>(), vec![3, 2, 6]);
    }
}
