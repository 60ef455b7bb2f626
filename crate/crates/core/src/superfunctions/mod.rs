//! Supersymmetric power sums, Schur functions and the deformed power sums `q_mu`.

use rayon::prelude::*;

use crate::combinatorics::{hook_tableaux, HookParams, Multipartition, Symbol};
use crate::error::{param_err, Result};
use crate::exactalg::{rat, CycPoly, Cyclotomic, MPoly};
use crate::sequences::{tilde_q_prefactor, SortedComposition};

/// `p_t(x^{(c)}/y^{(c)})` for one colour.
pub fn power_sum_color(t: u32, c: usize, params: &HookParams) -> MPoly {
    let mut out = MPoly::zero(params);
    for s in params.symbols_of_color(c).map(Symbol) {
        let v = MPoly::var(params, s).pow(t);
        out = if params.parity(s).is_odd() {
            &out - &v
        } else {
            &out + &v
        };
    }
    out
}

/// `p_t(x/y) = Σ x^t − Σ y^t` over all colours.
pub fn power_sum(t: u32, params: &HookParams) -> Result<MPoly> {
    if t == 0 {
        return param_err("power sums start at t = 1");
    }
    Ok((1..=params.m()).fold(MPoly::zero(params), |acc, c| {
        &acc + &power_sum_color(t, c, params)
    }))
}

fn to_cyc(p: &MPoly) -> CycPoly {
    // p has no q or Q, so specialization only changes the coefficient ring
    p.specialize()
}

/// `P_t^{(i)} = Σ_j ς^{-ij} p_t(x^{(j)}/y^{(j)})`.
pub fn big_p_t(t: u32, i: usize, params: &HookParams) -> Result<CycPoly> {
    if t == 0 || i == 0 || i > params.m() {
        return param_err(format!("P_t^(i) needs t >= 1 and 1 <= i <= {}", params.m()));
    }
    let m = params.m();
    let mut out = CycPoly::zero(params);
    for j in 1..=m {
        let coeff = Cyclotomic::root_power(m, -((i * j) as i64));
        out = &out + &to_cyc(&power_sum_color(t, j, params)).scale(&coeff);
    }
    Ok(out)
}

/// `P_mu = Π_i Π_j P^{(i)}_{mu^{(i)}_j}`.
pub fn big_p_mu(mu: &Multipartition, params: &HookParams) -> Result<CycPoly> {
    check_m(mu, params)?;
    let mut out = CycPoly::constant(params, Cyclotomic::one(params.m()));
    for (i, part) in mu.components().iter().enumerate() {
        for &t in part.parts() {
            out = &out * &big_p_t(t as u32, i + 1, params)?;
        }
    }
    Ok(out)
}

fn check_m(shape: &Multipartition, params: &HookParams) -> Result<()> {
    if shape.m() != params.m() {
        return param_err(format!(
            "shape has {} components but parameters have m = {}",
            shape.m(),
            params.m()
        ));
    }
    Ok(())
}

/// `S_lambda(x/y)`: the sum over `(k,l)`-semistandard tableaux of `Π (−1)^{parity} z`.
pub fn schur_super(shape: &Multipartition, params: &HookParams) -> Result<MPoly> {
    check_m(shape, params)?;
    let mut out = MPoly::zero(params);
    for t in hook_tableaux(shape, params)? {
        let mut z = vec![0u32; params.n_symbols()];
        let mut odd = 0;
        for (_, &s) in t.entries() {
            z[s.index()] += 1;
            odd += params.parity(s).is_odd() as i64;
        }
        let sign = if odd % 2 == 0 { 1 } else { -1 };
        out.add_assign_ref(&MPoly::one(params).mul_z_monomial(&z).scale(&rat(sign)));
    }
    Ok(out)
}

/// `tilde q_{(α;β)} = prefactor · x^α (−y)^β`.
pub fn tilde_q(c: &SortedComposition) -> Result<MPoly> {
    Ok(&tilde_q_prefactor(c)? * &c.signed_monomial())
}

/// `q_t^{(a)} = Σ_{(α;β) ∈ C(t;k+l)} Q_{(α;β)}^a tilde q_{(α;β)}`.
pub fn q_t_a(t: u32, a: usize, params: &HookParams) -> Result<MPoly> {
    if t == 0 || a == 0 || a > params.m() {
        return param_err(format!("q_t^(a) needs t >= 1 and 1 <= a <= {}", params.m()));
    }
    let parts: Vec<MPoly> = SortedComposition::all(params, t)
        .par_iter()
        .map(|c| {
            let b = c.max_color().expect("t >= 1");
            Ok(&MPoly::big_q_pow(params, b, a as u32) * &tilde_q(c)?)
        })
        .collect::<Result<_>>()?;
    let mut out = MPoly::zero(params);
    for p in &parts {
        out.add_assign_ref(p);
    }
    Ok(out)
}

/// `q_mu = Π_i Π_j q^{(i)}_{mu^{(i)}_j}`, one factor per row of `t^mu`.
pub fn q_mu(mu: &Multipartition, params: &HookParams) -> Result<MPoly> {
    check_m(mu, params)?;
    let mut out = MPoly::one(params);
    for (i, part) in mu.components().iter().enumerate() {
        for &t in part.parts() {
            out = &out * &q_t_a(t as u32, i + 1, params)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HookParams {
        s.parse().unwrap()
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(1, &p("1|1")).unwrap().to_string(), "x1 - y1");
        assert_eq!(power_sum(2, &p("2|0")).unwrap().to_string(), "x1^2 + x2^2");
        let pp = p("1|1");
        assert_eq!(big_p_t(1, 1, &pp).unwrap(), power_sum(1, &pp).unwrap().specialize());
    }

    #[test]
    fn schur_examples() {
        let pp = p("1|1");
        assert_eq!(schur_super(&mp("(2)"), &pp).unwrap().to_string(), "x1^2 - x1*y1");
        assert_eq!(schur_super(&mp("(1,1)"), &pp).unwrap().to_string(), "-x1*y1 + y1^2");
        assert!(schur_super(&mp("(1,1)"), &p("1|0")).unwrap().is_zero());
    }

    #[test]
    fn tilde_q_examples() {
        let pp = p("1|1");
        let c = |e: &[u32]| SortedComposition::new(&pp, e.to_vec()).unwrap();
        assert_eq!(tilde_q(&c(&[1, 0])).unwrap().to_string(), "x1");
        assert_eq!(tilde_q(&c(&[0, 2])).unwrap().to_string(), "-q^-1*y1^2");
        assert_eq!(tilde_q(&c(&[1, 1])).unwrap().to_string(), "-(q - q^-1)*x1*y1");
    }

    #[test]
    fn deformed_power_sums() {
        let pp = p("1|1");
        assert_eq!(q_t_a(1, 1, &pp).unwrap().to_string(), "Q1*x1 - Q1*y1");
        assert_eq!(
            q_t_a(2, 1, &pp).unwrap(),
            MPoly::parse("Q1*(q*x1^2 - (q - q^-1)*x1*y1 - q^-1*y1^2)", &pp).unwrap()
        );
        assert_eq!(q_mu(&mp("(2)"), &pp).unwrap(), q_t_a(2, 1, &pp).unwrap());
        assert_eq!(q_mu(&mp("(1,1)"), &pp).unwrap(), q_t_a(1, 1, &pp).unwrap().pow(2));
        assert_eq!(q_t_a(3, 1, &p("1|1,1|1")).unwrap().z_degree(), Some(3));
    }

    #[test]
    fn q_mu_specializes_to_p_mu_for_m_up_to_2() {
        for params in [p("1|1,1|1"), p("2|0,0|2")] {
            for mu in Multipartition::enumerate(2, 2).unwrap() {
                let lhs = q_mu(&mu, &params).unwrap().specialize();
                assert_eq!(lhs, big_p_mu(&mu, &params).unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn q_mu_specializes_to_conjugated_p_mu_for_m_3() {
        let params = p("1|0,1|0,0|1");
        let conj = |c: &CycPoly| {
            let mut out = CycPoly::zero(&params);
            for (z, v) in c.terms() {
                let mut zz = vec![0; params.n_symbols()];
                zz.copy_from_slice(z);
                out.add_term(zz, v.conj());
            }
            out
        };
        for mu in Multipartition::enumerate(2, 3).unwrap() {
            let lhs = q_mu(&mu, &params).unwrap().specialize();
            let rhs = big_p_mu(&mu, &params).unwrap();
            assert_eq!(lhs, conj(&rhs), "{mu}");
        }
    }
}
