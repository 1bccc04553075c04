//! Local classes of the codimension-one Schubert variety of
//! `Grass_n(C^2n)` whose open chart is the vanishing of an `n x n`
//! determinant.
//!
//! Fixed points are graded by `k`, the overlap of the index set with
//! `{1..n}`. Points with `k = 0` lie outside the variety; points with
//! `0 < k < n` sit on a stratum whose singularity is the level-`k` model
//! times an affine factor, so their classes are the instantiated template
//! `f_k` times the smooth Chern factor of the residual weights; the class
//! at the deepest point `p_{1..n}` is recovered by induction.

use super::{
    degree_zero_anchor, gkm_solve, recover_local_class,
    FkCache,
};
use crate::error::CsmError;
use crate::grass::{fixed_points, gkm_graph, GrassPoint, LocalClassTable};
use crate::poly::{sum_fractions, AffineForm, FractionTerm, LinearForm, MultiPoly};
use std::collections::BTreeMap;

/// How to recover the class at the deepest point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Omega1Method {
    /// One localization sum over all other fixed points.
    Direct,
    /// Congruences with the moment-graph neighbours.
    Gkm,
    /// Localization sum evaluated group by group in the level grading,
    /// each group clearing its denominators on its own.
    Grouped,
}

impl std::str::FromStr for Omega1Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Omega1Method::Direct),
            "gkm" => Ok(Omega1Method::Gkm),
            "grouped" => Ok(Omega1Method::Grouped),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Level of a fixed point: the size of the overlap with `{1..n}`.
pub fn omega1_level(point: &GrassPoint, n: usize) -> usize {
    point.subset().iter().filter(|&&i| i <= n).count()
}

/// The deepest point `p_{1..n}`.
pub fn omega1_deepest(n: usize) -> GrassPoint {
    GrassPoint::new((1..=n).collect(), n, 2 * n).expect("valid")
}

/// Local class at a stratum point of level `k < n`, assembled from the
/// cached template: `f_k` instantiated on the overlap characters and the
/// unused right-half characters, times `prod (1 + w)` over the remaining
/// tangent weights. Level zero is off the variety and returns zero.
pub fn omega1_stratum_class(
    point: &GrassPoint,
    n: usize,
    f_table: &BTreeMap<usize, MultiPoly>,
) -> Result<MultiPoly, CsmError> {
    let nv = 2 * n;
    let k = omega1_level(point, n);
    if k == 0 {
        return Ok(MultiPoly::zero(nv));
    }
    if k >= n {
        return Err(CsmError::Invalid(format!(
            "{point} is the deepest point, not a stratum point"
        )));
    }
    let f_k = f_table.get(&k).ok_or(CsmError::MissingLevel(k))?;
    let overlap: Vec<usize> = point.subset().iter().copied().filter(|&i| i <= n).collect();
    let spare: Vec<usize> = ((n + 1)..=nv).filter(|&j| !point.contains(j)).collect();
    debug_assert_eq!(overlap.len(), k);
    debug_assert_eq!(spare.len(), k);

    let mut targets: Vec<AffineForm> = Vec::with_capacity(2 * k);
    for &i in &overlap {
        targets.push(AffineForm::variable(nv, i));
    }
    for &j in &spare {
        targets.push(AffineForm::variable(nv, j));
    }
    let mut class = f_k.substitute(&targets, nv)?;

    // Smooth Chern factor over the tangent weights outside the model block.
    for &i in point.subset() {
        for j in point.complement() {
            let in_block = i <= n && j > n;
            if !in_block {
                class = &class * &LinearForm::difference(nv, j, i).one_plus(nv);
            }
        }
    }
    Ok(class)
}

/// The table of known classes: every fixed point except the deepest one.
pub fn omega1_known_table(
    n: usize,
    f_table: &BTreeMap<usize, MultiPoly>,
) -> Result<LocalClassTable, CsmError> {
    let deepest = omega1_deepest(n);
    let mut table = LocalClassTable::new(n, 2 * n)?;
    for point in fixed_points(n, 2 * n)? {
        if point == deepest {
            continue;
        }
        let class = omega1_stratum_class(&point, n, f_table)?;
        table.set(point, class)?;
    }
    Ok(table)
}

/// Full output of one level of the induction.
#[derive(Clone, Debug)]
pub struct Omega1Result {
    pub n: usize,
    /// The local class at the deepest point, a polynomial in the `2n`
    /// characters; this is the template `f_n` for higher levels.
    pub class: MultiPoly,
    /// Classes at all fixed points.
    pub table: LocalClassTable,
}

/// Compute the local classes of the level-`n` variety, loading lower
/// levels from the cache (computing and storing them as needed).
pub fn omega1_local(
    n: usize,
    method: Omega1Method,
    cache: &mut FkCache,
) -> Result<Omega1Result, CsmError> {
    if n == 0 {
        return Err(CsmError::Invalid("level must be at least 1".into()));
    }
    let f_table = omega1_levels(n, cache)?;
    let known = omega1_known_table(n, &f_table)?;
    let deepest = omega1_deepest(n);
    let dim = n * n;

    let class = match method {
        Omega1Method::Direct => recover_local_class(&known, &deepest, true)?,
        Omega1Method::Gkm => {
            let graph = gkm_graph(n, 2 * n)?;
            gkm_solve(&graph, &known, &deepest, true)?
        }
        Omega1Method::Grouped => {
            let mut lower = MultiPoly::zero(2 * n);
            for k in 1..n {
                let part = grouped_level_sum(n, k, &f_table, dim.saturating_sub(1))?;
                lower = &lower - &part;
            }
            &lower + &degree_zero_anchor(&deepest, true)
        }
    };

    // The variety has codimension one, so nothing may appear in degree 0.
    if !class.homogeneous_component(0).is_zero() {
        return Err(CsmError::Inconsistent {
            degree: 0,
            detail: "recovered class has a constant term".into(),
        });
    }

    let mut table = known;
    table.set(deepest, class.clone())?;
    cache.store(n, &class)?;
    Ok(Omega1Result { n, class, table })
}

/// All templates below level `n`, loading or computing as needed.
pub fn omega1_levels(
    n: usize,
    cache: &mut FkCache,
) -> Result<BTreeMap<usize, MultiPoly>, CsmError> {
    let mut f_table = BTreeMap::new();
    for k in 1..n {
        f_table.insert(k, ensure_level(k, cache)?);
    }
    Ok(f_table)
}

/// Deepest-point class by the grouped nested sums only, never holding the
/// full class table. This is the memory-lean entry for the gated levels,
/// where the table of all stratum classes alone runs to gigabytes.
pub fn omega1_class_only(n: usize, cache: &mut FkCache) -> Result<MultiPoly, CsmError> {
    if n == 0 {
        return Err(CsmError::Invalid("level must be at least 1".into()));
    }
    let f_table = omega1_levels(n, cache)?;
    let dim = n * n;
    let mut lower = MultiPoly::zero(2 * n);
    for k in 1..n {
        let part = grouped_level_sum(n, k, &f_table, dim.saturating_sub(1))?;
        lower = &lower - &part;
    }
    let class = &lower + &degree_zero_anchor(&omega1_deepest(n), true);
    if !class.homogeneous_component(0).is_zero() {
        return Err(CsmError::Inconsistent {
            degree: 0,
            detail: "recovered class has a constant term".into(),
        });
    }
    cache.store(n, &class)?;
    Ok(class)
}

/// Stream the full class table as JSON, one point at a time; the bytes
/// match `LocalClassTable::to_json_string` exactly.
pub fn omega1_stream_table_json<W: std::io::Write>(
    n: usize,
    f_table: &BTreeMap<usize, MultiPoly>,
    deepest_class: &MultiPoly,
    out: &mut W,
) -> Result<(), CsmError> {
    let io_err = |e: std::io::Error| CsmError::Cache(format!("write: {e}"));
    let deepest = omega1_deepest(n);
    write!(out, "{{\"grass\":[{},{}],\"classes\":[", n, 2 * n).map_err(io_err)?;
    for (idx, point) in fixed_points(n, 2 * n)?.iter().enumerate() {
        let class = if *point == deepest {
            deepest_class.clone()
        } else {
            omega1_stratum_class(point, n, f_table)?
        };
        let entry = crate::grass::ClassJson {
            point: point.subset().to_vec(),
            poly: class.to_json(),
        };
        if idx > 0 {
            write!(out, ",").map_err(io_err)?;
        }
        let text = serde_json::to_string(&entry)
            .map_err(|e| CsmError::Cache(format!("serialize: {e}")))?;
        out.write_all(text.as_bytes()).map_err(io_err)?;
    }
    write!(out, "]}}").map_err(io_err)?;
    Ok(())
}

fn ensure_level(k: usize, cache: &mut FkCache) -> Result<MultiPoly, CsmError> {
    if let Some(p) = cache.load(k)? {
        return Ok(p);
    }
    // Lower levels always go through the cheap direct sum.
    let result = omega1_local(k, Omega1Method::Direct, cache)?;
    Ok(result.class)
}

/// Sum of `(e_deepest / e_I) * class_I` over the level-`k` group, computed
/// by nesting the summation: for each overlap set `A` in the left half, an
/// inner localization sum over the right-half index sets (which clears its
/// denominators on its own), then a small outer sum over the `A` with
/// denominators inside the left half only. The factors of the Euler-class
/// quotient that pair up across the two halves cancel to a sign before
/// anything is expanded, which is what keeps the level-four run tractable.
fn grouped_level_sum(
    n: usize,
    k: usize,
    f_table: &BTreeMap<usize, MultiPoly>,
    cap: usize,
) -> Result<MultiPoly, CsmError> {
    let nv = 2 * n;
    let f_k = f_table.get(&k).ok_or(CsmError::MissingLevel(k))?;
    let left: Vec<usize> = (1..=n).collect();
    let sign_flip = (n - k) % 2 == 1;

    // One inner sum suffices: the sums for the other overlap sets are its
    // images under permutations of the left-half characters.
    let base_a: Vec<usize> = (1..=k).collect();
    let base_partial = inner_level_sum(n, k, f_k, &base_a)?;

    let mut outer_terms = Vec::new();
    for a_set in subsets(&left, k) {
        let a_comp: Vec<usize> = left.iter().copied().filter(|i| !a_set.contains(i)).collect();
        let mut perm: Vec<usize> = (0..nv).collect();
        for (src, &dst) in base_a.iter().zip(&a_set) {
            perm[src - 1] = dst - 1;
        }
        let base_comp: Vec<usize> = ((k + 1)..=n).collect();
        for (src, &dst) in base_comp.iter().zip(&a_comp) {
            perm[src - 1] = dst - 1;
        }
        let mut partial = base_partial.permute_vars(&perm);
        if sign_flip {
            partial = partial.neg();
        }
        let mut denom = Vec::new();
        for &i in &a_set {
            for &j in &a_comp {
                partial = &partial * &LinearForm::difference(nv, j, i).one_plus(nv);
                denom.push(LinearForm::difference(nv, j, i));
            }
        }
        outer_terms.push(FractionTerm::new(partial, denom));
    }
    sum_fractions(&outer_terms, Some(cap)).map_err(CsmError::Poly)
}

/// The localization sum over the right-half index sets for a fixed overlap
/// set `a_set`: always a polynomial. Terms stream one at a time into the
/// common-denominator accumulator, so at most one expanded numerator is
/// alive at once.
fn inner_level_sum(
    n: usize,
    k: usize,
    f_k: &MultiPoly,
    a_set: &[usize],
) -> Result<MultiPoly, CsmError> {
    let nv = 2 * n;
    let left: Vec<usize> = (1..=n).collect();
    let right: Vec<usize> = ((n + 1)..=(2 * n)).collect();
    let a_comp: Vec<usize> = left.iter().copied().filter(|i| !a_set.contains(i)).collect();

    let spares = subsets(&right, k);
    let denominators: Vec<Vec<LinearForm>> = spares
        .iter()
        .map(|b_spare| {
            let mut denom = Vec::new();
            for j in right.iter().copied().filter(|j| !b_spare.contains(j)) {
                for &l in b_spare {
                    denom.push(LinearForm::difference(nv, l, j));
                }
            }
            denom
        })
        .collect();
    let numerator_for = |b_spare: &[usize]| -> Result<MultiPoly, CsmError> {
        let b_set: Vec<usize> = right
            .iter()
            .copied()
            .filter(|j| !b_spare.contains(j))
            .collect();
        let mut targets: Vec<AffineForm> = Vec::with_capacity(2 * k);
        for &i in a_set {
            targets.push(AffineForm::variable(nv, i));
        }
        for &j in b_spare {
            targets.push(AffineForm::variable(nv, j));
        }
        let mut numerator = f_k.substitute(&targets, nv)?;
        for &i in a_set {
            for &j in &b_set {
                numerator = &numerator * &LinearForm::difference(nv, j, i).to_poly(nv);
            }
        }
        for &i in &a_comp {
            for &j in b_spare {
                numerator = &numerator * &LinearForm::difference(nv, j, i).to_poly(nv);
            }
        }
        for &i in &b_set {
            for &j in &a_comp {
                numerator = &numerator * &LinearForm::difference(nv, j, i).one_plus(nv);
            }
        }
        for &i in &b_set {
            for &j in b_spare {
                numerator = &numerator * &LinearForm::difference(nv, j, i).one_plus(nv);
            }
        }
        Ok(numerator)
    };
    crate::poly::sum_fractions_streamed(
        nv,
        &denominators,
        |idx| numerator_for(&spares[idx]).map_err(|e| e.to_string()),
    )
    .map_err(CsmError::Poly)
}

fn subsets(universe: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(universe: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for idx in start..universe.len() {
            cur.push(universe[idx]);
            rec(universe, idx + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(universe, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Hard-coded orbit-closure list for the invariant quadric cone
/// `ad = bc` in the chart at `p_{1,2}` of `Grass_2(C^4)`: the cycle class
/// of a union of orbit closures is the sum of the coordinate-subspace
/// classes, which doubles as an independent oracle for the level-2 class.
pub fn toric_quadric_oracle() -> MultiPoly {
    let nv = 4;
    let a = LinearForm::difference(nv, 3, 1).to_poly(nv);
    let b = LinearForm::difference(nv, 4, 1).to_poly(nv);
    let c = LinearForm::difference(nv, 3, 2).to_poly(nv);
    let d = LinearForm::difference(nv, 4, 2).to_poly(nv);

    // Hypersurface class: the weight of the defining equation.
    let hypersurface = &(&a + &d) * &MultiPoly::one(nv);
    // Four invariant coordinate planes inside the cone.
    let planes = [
        &a * &b, // c, d free
        &a * &c, // b, d free
        &b * &d, // a, c free
        &c * &d, // a, b free
    ];
    // Four coordinate axes.
    let axes = [
        &(&b * &c) * &d,
        &(&a * &c) * &d,
        &(&a * &b) * &d,
        &(&a * &b) * &c,
    ];
    let origin = &(&a * &b) * &(&c * &d);

    let mut total = hypersurface;
    for p in planes.iter().chain(axes.iter()) {
        total = &total + p;
    }
    &total + &origin
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csm::recover_raw_degree;
    use crate::grass::euler_class;
    use crate::poly::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    fn point(subset: &[usize], n: usize) -> GrassPoint {
        GrassPoint::new(subset.to_vec(), n, 2 * n).unwrap()
    }

    #[test]
    fn level_counts_overlap() {
        assert_eq!(omega1_level(&point(&[1, 2], 2), 2), 2);
        assert_eq!(omega1_level(&point(&[1, 3], 2), 2), 1);
        assert_eq!(omega1_level(&point(&[3, 4], 2), 2), 0);
    }

    #[test]
    fn base_level_is_the_euler_class() {
        let mut cache = FkCache::memory();
        let result = omega1_local(1, Omega1Method::Direct, &mut cache).unwrap();
        assert_eq!(result.class, p(2, "t2 - t1"));
        let table = &result.table;
        assert_eq!(table.get(&point(&[1], 1)).unwrap(), &p(2, "t2 - t1"));
        assert!(table.get(&point(&[2], 1)).unwrap().is_zero());
    }

    #[test]
    fn stratum_class_matches_printed_product() {
        let mut f_table = BTreeMap::new();
        f_table.insert(1, p(2, "t2 - t1"));
        let class = omega1_stratum_class(&point(&[1, 3], 2), 2, &f_table).unwrap();
        assert_eq!(
            class,
            p(4, "(t4-t1)*(1 + t2-t1)*(1 + t2-t3)*(1 + t4-t3)")
        );
    }

    #[test]
    fn level_zero_point_is_off_the_variety() {
        let f_table = BTreeMap::new();
        let class = omega1_stratum_class(&point(&[3, 4], 2), 2, &f_table).unwrap();
        assert!(class.is_zero());
    }

    #[test]
    fn level_two_printed_degrees() {
        let mut cache = FkCache::memory();
        let result = omega1_local(2, Omega1Method::Direct, &mut cache).unwrap();
        let f2 = &result.class;
        let sigma = p(4, "t3 + t4 - t1 - t2");
        assert_eq!(f2.homogeneous_component(1), sigma);
        assert_eq!(f2.homogeneous_component(2), &sigma * &sigma);
        let cross = p(4, "2*t1*t2 - t1*t3 - t2*t3 - t1*t4 - t2*t4 + 2*t3*t4");
        assert_eq!(f2.homogeneous_component(3), &sigma * &cross);
        let e = euler_class(&omega1_deepest(2));
        assert_eq!(f2.homogeneous_component(4), e);
        assert_eq!(f2.degree(), Some(4));
        assert_eq!(f2.min_degree(), Some(1));
    }

    #[test]
    fn raw_top_degree_shows_the_anchor_is_needed() {
        let mut f_table = BTreeMap::new();
        f_table.insert(1, p(2, "t2 - t1"));
        let known = omega1_known_table(2, &f_table).unwrap();
        let raw = recover_raw_degree(&known, &omega1_deepest(2), 4).unwrap();
        let e = euler_class(&omega1_deepest(2));
        assert_eq!(raw, e.scale(&crate::poly::coeff_int(-4)));
    }

    #[test]
    fn methods_agree_at_level_two() {
        let mut cache = FkCache::memory();
        let direct = omega1_local(2, Omega1Method::Direct, &mut cache).unwrap();
        let mut cache = FkCache::memory();
        let gkm = omega1_local(2, Omega1Method::Gkm, &mut cache).unwrap();
        let mut cache = FkCache::memory();
        let grouped = omega1_local(2, Omega1Method::Grouped, &mut cache).unwrap();
        assert_eq!(direct.class, gkm.class);
        assert_eq!(direct.class, grouped.class);
        assert_eq!(direct.table, gkm.table);
        assert_eq!(direct.table, grouped.table);
    }

    #[test]
    fn toric_oracle_equals_the_recovered_class() {
        let oracle = toric_quadric_oracle();
        let sigma = p(4, "t3 + t4 - t1 - t2");
        assert_eq!(oracle.homogeneous_component(1), sigma);
        assert_eq!(oracle.homogeneous_component(2), &sigma * &sigma);
        let mut cache = FkCache::memory();
        let result = omega1_local(2, Omega1Method::Direct, &mut cache).unwrap();
        assert_eq!(oracle, result.class);
    }

    #[test]
    fn cache_is_reused_across_levels() {
        let dir = tempfile::tempdir().unwrap();
        {
            let mut cache = FkCache::at_dir(dir.path()).unwrap();
            omega1_local(2, Omega1Method::Direct, &mut cache).unwrap();
        }
        assert!(dir.path().join("f_1.json").exists());
        assert!(dir.path().join("f_2.json").exists());
        let mut cache = FkCache::at_dir(dir.path()).unwrap();
        let result = omega1_local(2, Omega1Method::Direct, &mut cache).unwrap();
        assert_eq!(result.class.homogeneous_component(1), p(4, "t3+t4-t1-t2"));
    }
}
