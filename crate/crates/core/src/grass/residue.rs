//! Push-forward as an iterated residue at infinity.
//!
//! The integral of a symmetric template `W` over `Grass_m(C^n)` equals
//! `1/m!` times the iterated residue at infinity, innermost variable
//! first, of `W(z) * prod_{i != j} (z_i - z_j) / prod_{i,j} (t_i - z_j)`.
//! Each residue is taken on a univariate rational function with the
//! remaining variables symbolic: divide the numerator by the denominator
//! factor in that variable (its leading coefficient is the unit `(-1)^n`),
//! and the residue is `(-1)^(n+1)` times the remainder's coefficient of
//! `z^(n-1)`.

use crate::error::GrassError;
use crate::poly::{coeff_int, AffineForm, Coeff, MultiPoly};

/// Evaluates the same push-forward as
/// [`integrate_symmetric`](super::integrate_symmetric), by residues only.
pub fn residue_integral(w: &MultiPoly, m: usize, n: usize) -> Result<MultiPoly, GrassError> {
    if m == 0 || m >= n {
        return Err(GrassError::BadSizes { m, n });
    }
    if w.nvars() != m {
        return Err(GrassError::Invalid(format!(
            "template has {} slots, expected {m}",
            w.nvars()
        )));
    }
    let slots: Vec<usize> = (0..m).collect();
    if !w.is_symmetric_in(&slots) {
        return Err(GrassError::Invalid(
            "template is not symmetric in its slots".into(),
        ));
    }

    // Ring layout: t_1..t_n then z_1..z_m.
    let nv = n + m;
    let lift: Vec<AffineForm> = (0..m)
        .map(|j| AffineForm::variable(nv, n + j + 1))
        .collect();
    let mut numerator = w.substitute(&lift, nv)?;
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let zi = MultiPoly::var(nv, n + i);
                let zj = MultiPoly::var(nv, n + j);
                numerator = &numerator * &(&zi - &zj);
            }
        }
    }

    for j in (0..m).rev() {
        numerator = residue_in_var(&numerator, nv, n + j, n)?;
    }

    let mut factorial = Coeff::from_integer(1.into());
    for k in 1..=m {
        factorial *= coeff_int(k as i64);
    }
    Ok(numerator.scale(&factorial.recip()).shrink_vars(n))
}

/// Residue at infinity in the ring variable `v` of `numerator / D(z_v)`
/// where `D(z) = prod_i (t_i - z)` over the first `n` ring variables.
fn residue_in_var(
    numerator: &MultiPoly,
    nv: usize,
    v: usize,
    n: usize,
) -> Result<MultiPoly, GrassError> {
    // D as coefficients in z_v.
    let mut d = MultiPoly::one(nv);
    let zv = MultiPoly::var(nv, v);
    for i in 0..n {
        d = &d * &(&MultiPoly::var(nv, i) - &zv);
    }
    let d_coeffs = d.coefficients_in_var(v);
    debug_assert_eq!(d_coeffs.len(), n + 1);
    let lead = coeff_int(if n % 2 == 0 { 1 } else { -1 });

    let mut parts = numerator.coefficients_in_var(v);
    // Long division top-down; only the remainder matters.
    while parts.len() > n {
        let top = parts.len() - 1;
        let q = parts[top].scale(&lead.recip());
        for (k, dc) in d_coeffs.iter().enumerate() {
            let idx = top - n + k;
            parts[idx] = &parts[idx] - &(&q * dc);
        }
        debug_assert!(parts[top].is_zero());
        parts.pop();
    }
    let r_top = if parts.len() == n {
        parts.pop().unwrap()
    } else {
        MultiPoly::zero(nv)
    };
    // Res at infinity = -(coefficient of z^-1) = (-1)^(n+1) * r_(n-1).
    let sign = coeff_int(if (n + 1) % 2 == 0 { 1 } else { -1 });
    Ok(r_top.scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grass::integrate::{c1_power_template, integrate_symmetric};
    use crate::poly::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    #[test]
    fn constant_on_the_line_vanishes() {
        let w = MultiPoly::one(1);
        assert!(residue_integral(&w, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn square_on_the_line() {
        // Two-point localization sum: t1^2/(t2-t1) + t2^2/(t1-t2).
        let w = MultiPoly::var(1, 0).pow(2);
        let direct = integrate_symmetric(&w, 1, 2).unwrap();
        assert_eq!(direct, p(2, "-t1 - t2"));
        assert_eq!(residue_integral(&w, 1, 2).unwrap(), direct);
    }

    #[test]
    fn volume_of_grass_2_4() {
        let w = c1_power_template(2, 4);
        assert_eq!(
            residue_integral(&w, 2, 4).unwrap(),
            MultiPoly::constant_i64(4, 2)
        );
    }

    #[test]
    fn agrees_with_direct_localization() {
        // Symmetrized monomials of several degrees on two Grassmannians.
        let cases: &[(usize, usize, &[&[u32]])] = &[
            (1, 3, &[&[0], &[1], &[2], &[3], &[4], &[5]]),
            (2, 4, &[&[1, 0], &[1, 1], &[2, 0], &[2, 1], &[3, 1], &[2, 2], &[4, 2]]),
        ];
        for &(m, n, exps) in cases {
            for &e in exps {
                let w = symmetrized_monomial(m, e);
                let a = integrate_symmetric(&w, m, n).unwrap();
                let b = residue_integral(&w, m, n).unwrap();
                assert_eq!(a, b, "monomial {e:?} on Grass_{m}(C^{n})");
            }
        }
    }

    fn symmetrized_monomial(m: usize, exps: &[u32]) -> MultiPoly {
        use crate::symm::{monomial_symmetric, Partition};
        let mut v = exps.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        monomial_symmetric(m, &Partition::new(v).unwrap()).unwrap()
    }
}
