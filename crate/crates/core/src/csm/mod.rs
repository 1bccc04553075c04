//! Local equivariant Chern classes of singular subvarieties, computed at
//! torus-fixed points without resolving singularities.
//!
//! The two pillars: the class at a smooth point is the normal weights times
//! the total Chern factor of the variety's tangent weights, and the
//! top-degree part at any point of the variety equals the ambient Euler
//! class (zero off the variety). Everything below the top degree at an
//! unknown point is recovered either from the vanishing of the global
//! localization sum or from GKM congruences with the neighbours.

mod cache;
mod cone;
mod gkm;
mod omega1;

pub use cache::FkCache;
pub use cone::{
    h_inverse_numerator, h_reduce, h_substitution, projective_cone_class, scalar_cone_class,
    ConeClassSpec, HPoly,
};
pub use gkm::gkm_solve;
pub use omega1::{
    omega1_class_only, omega1_deepest, omega1_known_table, omega1_level, omega1_levels,
    omega1_local, omega1_stream_table_json, omega1_stratum_class, toric_quadric_oracle,
    Omega1Method, Omega1Result,
};

use crate::error::CsmError;
use crate::grass::{euler_class, tangent_weights, GrassPoint, LocalClassTable};
use crate::poly::{sum_fractions, Coeff, FractionTerm, LinearForm, MultiPoly};
use num_traits::Zero;

/// Local class at a smooth point of a subvariety: the product of the
/// normal weights times `prod (1 + w)` over the variety's own tangent
/// weights. The two lists partition the ambient tangent weights.
pub fn smooth_local_class(
    nvars: usize,
    tangent_of_x: &[LinearForm],
    normal_in_m: &[LinearForm],
) -> MultiPoly {
    let mut out = MultiPoly::one(nvars);
    for w in normal_in_m {
        out = &out * &w.to_poly(nvars);
    }
    for w in tangent_of_x {
        out = &out * &w.one_plus(nvars);
    }
    out
}

/// Top-degree part of a local class: the ambient Euler class for a point
/// of the variety, zero otherwise.
pub fn degree_zero_anchor(p: &GrassPoint, member: bool) -> MultiPoly {
    if member {
        euler_class(p)
    } else {
        MultiPoly::zero(p.n())
    }
}

/// The summands `(e_p0 / e_p) * class_p` over the known points, with the
/// shared Euler factors cancelled before anything is expanded.
pub fn recovery_terms(
    known: &LocalClassTable,
    p0: &GrassPoint,
) -> Result<Vec<FractionTerm>, CsmError> {
    let e0_forms = tangent_weights(p0);
    let mut terms = Vec::new();
    for missing in known.missing_points() {
        if &missing != p0 {
            return Err(CsmError::MissingClass(missing.to_string()));
        }
    }
    for (p, class) in known.iter() {
        if p == p0 || class.is_zero() {
            continue;
        }
        let denom = tangent_weights(p);
        terms.push(FractionTerm::from_ratio(class.clone(), &e0_forms, &denom));
    }
    Ok(terms)
}

/// The raw degree-`d` component of `-sum_p (e_p0 / e_p) class_p`. Below
/// the top degree this is the true class component; at the top degree it
/// is not (the anchor must be used instead), which is why it is exposed
/// separately.
pub fn recover_raw_degree(
    known: &LocalClassTable,
    p0: &GrassPoint,
    degree: usize,
) -> Result<MultiPoly, CsmError> {
    let terms = recovery_terms(known, p0)?;
    if terms.is_empty() {
        return Ok(MultiPoly::zero(known.n()));
    }
    let part = sum_fractions(&terms, Some(degree)).map_err(CsmError::Poly)?;
    Ok(part.homogeneous_component(degree).neg())
}

/// Recover the unknown local class at `p0` from a table covering every
/// other fixed point: degrees below the top come from the localization
/// sum, computed degreewise; the top degree is anchored.
pub fn recover_local_class(
    known: &LocalClassTable,
    p0: &GrassPoint,
    member: bool,
) -> Result<MultiPoly, CsmError> {
    let dim = known.dim();
    let terms = recovery_terms(known, p0)?;
    let lower = if terms.is_empty() || dim == 0 {
        MultiPoly::zero(known.n())
    } else {
        sum_fractions(&terms, Some(dim - 1))
            .map_err(CsmError::Poly)?
            .neg()
    };
    Ok(&lower + &degree_zero_anchor(p0, member))
}

/// The top-degree localization sum `sum_p (class_p)_top / e_p`, which
/// equals the Euler characteristic of the variety the table describes.
pub fn euler_characteristic(table: &LocalClassTable) -> Result<Coeff, CsmError> {
    if let Some(p) = table.missing_points().first() {
        return Err(CsmError::MissingClass(p.to_string()));
    }
    let dim = table.dim();
    let mut terms = Vec::new();
    for (p, class) in table.iter() {
        let top = class.homogeneous_component(dim);
        if top.is_zero() {
            continue;
        }
        terms.push(FractionTerm::new(top, tangent_weights(p)));
    }
    if terms.is_empty() {
        return Ok(Coeff::zero());
    }
    let total = sum_fractions(&terms, None).map_err(CsmError::Poly)?;
    if total.degree().unwrap_or(0) > 0 {
        return Err(CsmError::Invalid(format!(
            "top-degree sum is not constant: {total}"
        )));
    }
    Ok(total.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grass::fixed_points;
    use crate::poly::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    fn point(subset: &[usize], m: usize, n: usize) -> GrassPoint {
        GrassPoint::new(subset.to_vec(), m, n).unwrap()
    }

    fn diff(nvars: usize, j: usize, i: usize) -> LinearForm {
        LinearForm::difference(nvars, j, i)
    }

    #[test]
    fn smooth_class_whole_space() {
        // X = M on the projective line: 1 + (t2 - t1).
        let c = smooth_local_class(2, &[diff(2, 2, 1)], &[]);
        assert_eq!(c, p(2, "1 + t2 - t1"));
    }

    #[test]
    fn smooth_class_printed_product() {
        let c = smooth_local_class(
            4,
            &[diff(4, 2, 1), diff(4, 2, 3), diff(4, 4, 3)],
            &[diff(4, 4, 1)],
        );
        assert_eq!(
            c,
            p(4, "(t4-t1)*(1 + t2-t1)*(1 + t2-t3)*(1 + t4-t3)")
        );
    }

    #[test]
    fn smooth_class_point() {
        // X = {p}: every ambient weight is normal, the class is e_p.
        let pt = point(&[1, 2], 2, 4);
        let c = smooth_local_class(4, &[], &tangent_weights(&pt));
        assert_eq!(c, euler_class(&pt));
    }

    #[test]
    fn anchor_values() {
        let pt = point(&[1, 2], 2, 4);
        assert_eq!(degree_zero_anchor(&pt, true), euler_class(&pt));
        assert!(degree_zero_anchor(&pt, false).is_zero());
        let line_pt = point(&[1], 1, 2);
        assert_eq!(degree_zero_anchor(&line_pt, true), p(2, "t2 - t1"));
    }

    #[test]
    fn euler_characteristic_of_a_single_point() {
        // X = {p_12} inside Grass_2(C^4).
        let mut table = LocalClassTable::new(2, 4).unwrap();
        for pt in fixed_points(2, 4).unwrap() {
            let class = if pt.subset() == [1, 2] {
                euler_class(&pt)
            } else {
                MultiPoly::zero(4)
            };
            table.set(pt, class).unwrap();
        }
        assert_eq!(
            euler_characteristic(&table).unwrap(),
            Coeff::from_integer(1.into())
        );
    }
}
