//! Push-forward to a point by summation of local contributions.

use super::{fixed_points, tangent_weights, LocalClassTable};
use crate::error::GrassError;
use crate::poly::{sum_fractions, AffineForm, FractionTerm, MultiPoly};

/// The localization summands `class_p / e_p` of a full table.
pub fn localization_terms(table: &LocalClassTable) -> Result<Vec<FractionTerm>, GrassError> {
    let missing = table.missing_points();
    if let Some(p) = missing.first() {
        return Err(GrassError::MissingPoint(p.to_string()));
    }
    Ok(table
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| FractionTerm::new(c.clone(), tangent_weights(p)))
        .collect())
}

/// Integral over the Grassmannian: the sum of the local restrictions
/// divided by the Euler classes. The sum must clear its denominators; a
/// residual denominator means the table is not the restriction of a global
/// class (e.g. a point is wrong or missing).
pub fn integrate(table: &LocalClassTable) -> Result<MultiPoly, GrassError> {
    let terms = localization_terms(table)?;
    if terms.is_empty() {
        return Ok(MultiPoly::zero(table.n()));
    }
    sum_fractions(&terms, None).map_err(GrassError::Poly)
}

/// Integrate a characteristic class of the tautological bundle given by a
/// symmetric polynomial `w` in `m` slot variables: at the fixed point
/// indexed by `lambda` the slots become the characters `t_i` for `i` in
/// `lambda`.
pub fn integrate_symmetric(
    w: &MultiPoly,
    m: usize,
    n: usize,
) -> Result<MultiPoly, GrassError> {
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
    let mut table = LocalClassTable::new(m, n)?;
    for p in fixed_points(m, n)? {
        let targets: Vec<AffineForm> = p
            .subset()
            .iter()
            .map(|&i| AffineForm::variable(n, i))
            .collect();
        let value = w.substitute(&targets, n)?;
        table.set(p, value)?;
    }
    integrate(&table)
}

/// First Chern class power template `(-(x_1 + ... + x_m))^power`, the
/// integrand for degrees and the projective-space identities.
pub fn c1_power_template(m: usize, power: usize) -> MultiPoly {
    let mut sum = MultiPoly::zero(m);
    for i in 0..m {
        sum = &sum + &MultiPoly::var(m, i);
    }
    sum.neg().pow(power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::symm::{hook_degree, schur_polynomial, Partition};

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    /// Projective-space power sums: 0 below the top degree, 1 at it.
    #[test]
    fn projective_power_identities() {
        for nv in 2..=6usize {
            for power in 0..(nv - 1) {
                let w = c1_power_template(1, power);
                let total = integrate_symmetric(&w, 1, nv).unwrap();
                assert!(total.is_zero(), "power {power} on {nv} characters");
            }
            let w = c1_power_template(1, nv - 1);
            let total = integrate_symmetric(&w, 1, nv).unwrap();
            assert!(total.is_one(), "top power on {nv} characters");
        }
    }

    /// Higher powers of the hyperplane class give signed Schur rows.
    #[test]
    fn projective_higher_powers_are_schur_functions() {
        for nv in 2..=4usize {
            for extra in 1..=3usize {
                let w = c1_power_template(1, nv - 1 + extra);
                let total = integrate_symmetric(&w, 1, nv).unwrap();
                let vars: Vec<usize> = (0..nv).collect();
                let s = schur_polynomial(
                    &Partition::new(vec![extra as u32]).unwrap(),
                    nv,
                    &vars,
                    false,
                )
                .unwrap();
                let expect = if extra % 2 == 1 { s.neg() } else { s };
                assert_eq!(total, expect, "n = {}, k = {extra}", nv - 1);
            }
        }
    }

    #[test]
    fn quartic_on_the_plane_matches_hand_computation() {
        let w = c1_power_template(1, 4);
        let total = integrate_symmetric(&w, 1, 3).unwrap();
        assert_eq!(total, p(3, "t1^2 + t2^2 + t3^2 + t1*t2 + t1*t3 + t2*t3"));
    }

    #[test]
    fn constant_template_integrates_to_zero() {
        for (m, n) in [(1, 2), (2, 4), (2, 3)] {
            let w = MultiPoly::one(m);
            assert!(integrate_symmetric(&w, m, n).unwrap().is_zero());
        }
    }

    #[test]
    fn volume_of_small_grassmannians() {
        for (m, n) in [(1, 3), (2, 4), (2, 5)] {
            let dim = m * (n - m);
            let w = c1_power_template(m, dim);
            let total = integrate_symmetric(&w, m, n).unwrap();
            let expect = MultiPoly::constant(
                n,
                crate::poly::Coeff::from_integer(hook_degree(m, n)),
            );
            assert_eq!(total, expect, "volume of Grass_{m}(C^{n})");
        }
    }

    #[test]
    fn asymmetric_template_rejected() {
        let w = MultiPoly::var(2, 0);
        assert!(integrate_symmetric(&w, 2, 4).is_err());
    }

    #[test]
    fn integrate_table_of_signed_powers() {
        // values[p_k] = (-t_k)^m over the projective space on four
        // characters: zero below the top degree, one at it, a Schur row
        // above it.
        for (m, expect) in [(2usize, "0"), (3, "1"), (4, "-t1 - t2 - t3 - t4")] {
            let mut table = LocalClassTable::new(1, 4).unwrap();
            for pt in fixed_points(1, 4).unwrap() {
                let k = pt.subset()[0];
                let value = MultiPoly::var(4, k - 1).neg().pow(m);
                table.set(pt, value).unwrap();
            }
            assert_eq!(integrate(&table).unwrap(), p(4, expect), "power {m}");
        }
    }

    #[test]
    fn integral_of_euler_table_counts_points() {
        // class_p = e_p at every point: each summand is 1.
        let mut table = LocalClassTable::new(2, 4).unwrap();
        for pt in fixed_points(2, 4).unwrap() {
            let e = euler_class(&pt);
            table.set(pt, e).unwrap();
        }
        let total = integrate(&table).unwrap();
        assert_eq!(total, MultiPoly::constant_i64(4, 6));
    }

    #[test]
    fn incomplete_table_is_rejected() {
        let table = LocalClassTable::new(2, 4).unwrap();
        assert!(matches!(
            integrate(&table),
            Err(GrassError::MissingPoint(_))
        ));
    }

    use crate::grass::euler_class;
}
