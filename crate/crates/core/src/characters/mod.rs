//! Character tables by both routes, their specialization to `G(m,1,n)`, and the
//! identities that tie them together.

mod dimension;
pub mod linsolve;
pub mod wreath;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{standard_tableaux, HookParams, Multipartition};
use crate::error::{param_err, Error, Result};
use crate::exactalg::{CycPoly, Cyclotomic, MPoly};
use crate::rsk::{certify, char_rsk, Strategy};
use crate::superfunctions::{big_p_mu, q_mu, schur_super};

pub use dimension::{dimension_identity, DimensionReport};
pub use linsolve::solve_in_basis;
pub use wreath::{brute_force_centralizers, wreath_elements, WreathElement};

/// Which route produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Rsk,
    Oracle,
}

/// `chi^lambda(mu)` for all `lambda` (rows) and `mu` (columns) in canonical order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub m: usize,
    pub n: usize,
    pub params: HookParams,
    pub provenance: Provenance,
    pub strategy: Option<Strategy>,
    pub rows: Vec<Multipartition>,
    pub cols: Vec<Multipartition>,
    pub entries: Vec<Vec<MPoly>>,
}

#[derive(Serialize)]
struct TableJson<'a, T: Serialize> {
    m: usize,
    n: usize,
    params: String,
    provenance: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    strategy: Option<Strategy>,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<T>>,
}

fn render_grid(rows: &[Multipartition], cols: &[Multipartition], cells: &[Vec<String>]) -> String {
    let head = "lambda \\ mu".to_string();
    let row_labels: Vec<String> = rows.iter().map(ToString::to_string).collect();
    let lw = row_labels.iter().map(|s| s.chars().count()).chain([head.chars().count()]).max().unwrap_or(0);
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([c.to_string().chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{head:<lw$}");
    for (c, w) in cols.iter().zip(&widths) {
        let _ = write!(out, " | {:<w$}", c.to_string());
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(cells) {
        let _ = write!(out, "{label:<lw$}");
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, " | {cell:<w$}");
        }
        out.push('\n');
    }
    out
}

impl CharacterTable {
    pub fn get(&self, lambda: &Multipartition, mu: &Multipartition) -> Option<&MPoly> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.cols.iter().position(|c| c == mu)?;
        Some(&self.entries[i][j])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            m: self.m,
            n: self.n,
            params: self.params.to_string(),
            provenance: match self.provenance {
                Provenance::Rsk => "rsk",
                Provenance::Oracle => "oracle",
            },
            strategy: self.strategy,
            rows: self.rows.iter().map(ToString::to_string).collect(),
            cols: self.cols.iter().map(ToString::to_string).collect(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        })
        .expect("table serializes")
    }

    /// Reads back the output of [`CharacterTable::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<CharacterTable> {
        let bad = |what: &str| Error::Parse(format!("character table JSON: {what}"));
        let field = |k: &str| value.get(k).ok_or_else(|| bad(&format!("missing {k}")));
        let usize_of = |k: &str| -> Result<usize> {
            field(k)?.as_u64().map(|x| x as usize).ok_or_else(|| bad(&format!("{k} is not an integer")))
        };
        let (m, n) = (usize_of("m")?, usize_of("n")?);
        let params: HookParams = field("params")?.as_str().ok_or_else(|| bad("params"))?.parse()?;
        let provenance = match field("provenance")?.as_str() {
            Some("rsk") => Provenance::Rsk,
            Some("oracle") => Provenance::Oracle,
            _ => return Err(bad("provenance")),
        };
        let strategy = match value.get("strategy") {
            None | Some(serde_json::Value::Null) => None,
            Some(s) => Some(s.as_str().ok_or_else(|| bad("strategy"))?.parse()?),
        };
        let shapes = |k: &str| -> Result<Vec<Multipartition>> {
            field(k)?
                .as_array()
                .ok_or_else(|| bad(k))?
                .iter()
                .map(|v| v.as_str().ok_or_else(|| bad(k))?.parse())
                .collect()
        };
        let (rows, cols) = (shapes("rows")?, shapes("cols")?);
        let entries: Vec<Vec<MPoly>> = field("entries")?
            .as_array()
            .ok_or_else(|| bad("entries"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("entries"))?
                    .iter()
                    .map(|e| MPoly::parse(e.as_str().ok_or_else(|| bad("entry"))?, &params))
                    .collect()
            })
            .collect::<Result<_>>()?;
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(bad("entries do not match rows and cols"));
        }
        if params.m() != m {
            return Err(bad("m does not match params"));
        }
        Ok(CharacterTable { m, n, params, provenance, strategy, rows, cols, entries })
    }

    /// Aligned plain-text table.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        render_grid(&self.rows, &self.cols, &cells)
    }

    /// Entries that differ from `other`, as `(lambda, mu, first differing term)`.
    pub fn differences(&self, other: &CharacterTable) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for (i, lam) in self.rows.iter().enumerate() {
            for (j, mu) in self.cols.iter().enumerate() {
                let Some(theirs) = other.get(lam, mu) else {
                    out.push((lam.to_string(), mu.to_string(), "missing".into()));
                    continue;
                };
                if let Some(d) = self.entries[i][j].first_difference(theirs) {
                    out.push((lam.to_string(), mu.to_string(), d));
                }
            }
        }
        out
    }
}

fn check_table_size(n: usize, params: &HookParams) -> Result<Vec<Multipartition>> {
    let shapes = Multipartition::enumerate(n, params.m())?;
    Ok(shapes)
}

/// Every entry through [`char_rsk`].
pub fn rsk_table(n: usize, params: &HookParams, strategy: Strategy) -> Result<CharacterTable> {
    let shapes = check_table_size(n, params)?;
    certify(n, params, strategy)?;
    let cells: Vec<(usize, usize)> = (0..shapes.len())
        .flat_map(|i| (0..shapes.len()).map(move |j| (i, j)))
        .collect();
    let values: Vec<MPoly> = cells
        .par_iter()
        .map(|&(i, j)| char_rsk(&shapes[i], &shapes[j], params, strategy))
        .collect::<Result<_>>()?;
    let entries = values.chunks(shapes.len()).map(<[MPoly]>::to_vec).collect();
    Ok(CharacterTable {
        m: params.m(),
        n,
        params: params.clone(),
        provenance: Provenance::Rsk,
        strategy: Some(strategy),
        rows: shapes.clone(),
        cols: shapes,
        entries,
    })
}

/// The supersymmetric Schur functions of every hook shape of size `n`.
#[derive(Clone, Debug)]
pub struct SchurBasis {
    pub params: HookParams,
    pub shapes: Vec<Multipartition>,
    pub polys: Vec<MPoly>,
}

impl SchurBasis {
    pub fn new(n: usize, params: &HookParams) -> Result<Self> {
        let mut shapes = Vec::new();
        for lam in Multipartition::enumerate(n, params.m())? {
            if params.is_hook(&lam)? {
                shapes.push(lam);
            }
        }
        let polys = shapes
            .par_iter()
            .map(|lam| schur_super(lam, params))
            .collect::<Result<_>>()?;
        Ok(SchurBasis {
            params: params.clone(),
            shapes,
            polys,
        })
    }

    /// Coordinates of `f` in this basis, checked by recombining exactly.
    pub fn expand(&self, f: &MPoly) -> Result<BTreeMap<Multipartition, MPoly>> {
        let coeffs = solve_in_basis(&self.polys, f)?;
        let mut residual = f.clone();
        for (c, s) in coeffs.iter().zip(&self.polys) {
            residual = &residual - &(c * s);
        }
        if !residual.is_zero() {
            return Err(Error::RankDeficient(format!("nonzero residual {residual}")));
        }
        Ok(self.shapes.iter().cloned().zip(coeffs).collect())
    }
}

/// `chi^lambda(mu)` for every hook shape `lambda`, read off from `q_mu = Σ chi^lambda(mu) S_lambda`.
pub fn char_oracle(mu: &Multipartition, params: &HookParams) -> Result<BTreeMap<Multipartition, MPoly>> {
    let basis = SchurBasis::new(mu.size(), params)?;
    basis.expand(&q_mu(mu, params)?)
}

/// Every entry through [`char_oracle`]; needs every multipartition of `n` to be a hook shape.
pub fn oracle_table(n: usize, params: &HookParams) -> Result<CharacterTable> {
    let shapes = check_table_size(n, params)?;
    let basis = SchurBasis::new(n, params)?;
    if basis.shapes.len() != shapes.len() {
        return param_err(format!(
            "only {} of {} shapes are hook shapes for {params}; the expansion cannot see the rest",
            basis.shapes.len(),
            shapes.len()
        ));
    }
    let columns: Vec<BTreeMap<Multipartition, MPoly>> = shapes
        .par_iter()
        .map(|mu| basis.expand(&q_mu(mu, params)?))
        .collect::<Result<_>>()?;
    let entries = shapes
        .iter()
        .map(|lam| columns.iter().map(|col| col[lam].clone()).collect())
        .collect();
    Ok(CharacterTable {
        m: params.m(),
        n,
        params: params.clone(),
        provenance: Provenance::Oracle,
        strategy: None,
        rows: shapes.clone(),
        cols: shapes,
        entries,
    })
}

/// `Z_mu = Π_i Π_j mult_{ij}! (j m)^{mult_{ij}}`, the centralizer order in `G(m,1,n)`.
pub fn centralizer_order(mu: &Multipartition) -> BigInt {
    let m = BigInt::from(mu.m());
    let mut z = BigInt::one();
    for part in mu.components() {
        for (j, mult) in part.multiplicities() {
            for f in 1..=mult {
                z *= BigInt::from(f) * BigInt::from(j) * &m;
            }
        }
    }
    z
}

/// A character table with `q = 1` and `Q_a = ς^a`.
#[derive(Clone, Debug)]
pub struct SpecializedTable {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Multipartition>,
    pub cols: Vec<Multipartition>,
    pub entries: Vec<Vec<Cyclotomic>>,
}

impl SpecializedTable {
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        render_grid(&self.rows, &self.cols, &cells)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            m: self.m,
            n: self.n,
            params: String::new(),
            provenance: "specialized",
            strategy: None,
            rows: self.rows.iter().map(ToString::to_string).collect(),
            cols: self.cols.iter().map(ToString::to_string).collect(),
            entries: self.entries.clone(),
        })
        .map(|mut v| {
            v.as_object_mut().expect("object").remove("params");
            v
        })
        .expect("table serializes")
    }

    /// `Σ_lambda |chi^lambda(mu)|^2` against `Z_mu`, per column.
    pub fn column_orthogonality(&self) -> Vec<(Multipartition, Cyclotomic, BigInt)> {
        self.cols
            .iter()
            .enumerate()
            .map(|(j, mu)| {
                let mut s = Cyclotomic::zero(self.m);
                for row in &self.entries {
                    s = &s + &row[j].norm_sq();
                }
                (mu.clone(), s, centralizer_order(mu))
            })
            .collect()
    }
}

/// Sets `q = 1`, `Q_a = ς^a` in every entry.
pub fn specialize_table(table: &CharacterTable) -> Result<SpecializedTable> {
    let zero = vec![0u32; table.params.n_symbols()];
    let mut entries = Vec::with_capacity(table.rows.len());
    for row in &table.entries {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            if e.z_degree().is_some_and(|d| d != 0) {
                return param_err(format!("entry {e} involves alphabet variables"));
            }
            out.push(e.specialize().coefficient_of(&zero));
        }
        entries.push(out);
    }
    Ok(SpecializedTable {
        m: table.m,
        n: table.n,
        rows: table.rows.clone(),
        cols: table.cols.clone(),
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusColumn {
    pub mu: String,
    /// `q_mu = Σ_lambda chi_rsk^lambda(mu) S_lambda`.
    pub expansion_holds: bool,
    /// The RSK column equals the oracle column.
    pub oracle_agrees: bool,
    pub first_difference: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub m: usize,
    pub n: usize,
    pub params: String,
    pub strategy: Strategy,
    pub columns: Vec<FrobeniusColumn>,
    pub pass: bool,
}

/// Checks the Frobenius formula column by column with RSK-route characters.
pub fn verify_frobenius(n: usize, params: &HookParams, strategy: Strategy) -> Result<FrobeniusReport> {
    let table = rsk_table(n, params, strategy)?;
    let basis = SchurBasis::new(n, params)?;
    let schur: BTreeMap<&Multipartition, &MPoly> = basis.shapes.iter().zip(&basis.polys).collect();
    let columns: Vec<FrobeniusColumn> = table
        .cols
        .par_iter()
        .enumerate()
        .map(|(j, mu)| -> Result<FrobeniusColumn> {
            let lhs = q_mu(mu, params)?;
            let mut rhs = MPoly::zero(params);
            for (i, lam) in table.rows.iter().enumerate() {
                if let Some(s) = schur.get(lam) {
                    rhs.add_assign_ref(&(&table.entries[i][j] * *s));
                }
            }
            let mut first_difference = lhs.first_difference(&rhs).map(|d| format!("q_mu vs RSK sum: {d}"));
            let oracle = basis.expand(&lhs)?;
            let mut oracle_agrees = true;
            for (i, lam) in table.rows.iter().enumerate() {
                if let Some(o) = oracle.get(lam) {
                    if let Some(d) = table.entries[i][j].first_difference(o) {
                        oracle_agrees = false;
                        first_difference.get_or_insert_with(|| format!("lambda = {lam}: {d}"));
                    }
                }
            }
            Ok(FrobeniusColumn {
                mu: mu.to_string(),
                expansion_holds: lhs == rhs,
                oracle_agrees,
                first_difference,
            })
        })
        .collect::<Result<_>>()?;
    let pass = columns.iter().all(|c| c.expansion_holds && c.oracle_agrees);
    Ok(FrobeniusReport {
        m: params.m(),
        n,
        params: params.to_string(),
        strategy,
        columns,
        pass,
    })
}

/// `S_lambda = Σ_mu Z_mu^{-1} chi^lambda(mu) P_mu` at `q = 1`, `Q_a = ς^a`, one
/// flag per `lambda`. Uses the RSK-route table.
pub fn schur_from_power_sums(
    n: usize,
    params: &HookParams,
    strategy: Strategy,
) -> Result<Vec<(Multipartition, bool)>> {
    let table = rsk_table(n, params, strategy)?;
    let specialized = specialize_table(&table)?;
    let p: Vec<CycPoly> = specialized
        .cols
        .iter()
        .map(|mu| big_p_mu(mu, params))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (i, lam) in specialized.rows.iter().enumerate() {
        let lhs = schur_super(lam, params)?.specialize();
        let mut rhs = CycPoly::zero(params);
        for (j, mu) in specialized.cols.iter().enumerate() {
            let inv = BigRational::new(BigInt::one(), centralizer_order(mu));
            let c = specialized.entries[i][j].scale(&inv);
            if !c.is_zero() {
                rhs = &rhs + &p[j].scale(&c);
            }
        }
        let diff = &lhs - &rhs;
        out.push((lam.clone(), diff.is_zero()));
    }
    Ok(out)
}

/// `d_lambda`: the number of standard tableaux of each shape.
pub fn dimensions(n: usize, m: usize) -> Result<Vec<(Multipartition, u64)>> {
    Ok(Multipartition::enumerate(n, m)?
        .into_iter()
        .map(|lam| {
            let d = standard_tableaux(&lam).len() as u64;
            (lam, d)
        })
        .collect())
}

/// `Σ_lambda d_lambda^2`, `Σ_mu 1 / Z_mu` and `|G(m,1,n)| = n! m^n`.
pub fn group_order_sums(n: usize, m: usize) -> Result<(BigInt, BigRational, BigInt)> {
    let order: BigInt = (1..=n).map(BigInt::from).product::<BigInt>() * BigInt::from(m).pow(n as u32);
    let dims: BigInt = dimensions(n, m)?
        .into_iter()
        .map(|(_, d)| BigInt::from(d) * BigInt::from(d))
        .sum();
    let mut classes = BigRational::zero();
    for mu in Multipartition::enumerate(n, m)? {
        classes += BigRational::new(BigInt::one(), centralizer_order(&mu));
    }
    Ok((dims, classes, order))
}
