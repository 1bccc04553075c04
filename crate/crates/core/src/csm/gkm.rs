//! Recovery of an unknown local class from congruences with its moment
//! graph neighbours.
//!
//! Along the edge exchanging `i` for `j`, local classes of a global class
//! are congruent modulo `t_j - t_i`. The congruences at a single vertex
//! determine every degree below the ambient dimension uniquely, because a
//! polynomial divisible by all the (pairwise non-proportional) incident
//! edge labels is divisible by their product.
//!
//! Degrees are solved one at a time. Congruences are imposed sequentially:
//! the correction after `r` edges is a multiple of the product of the
//! first `r` labels, and its reduction is found by exact trial division in
//! the quotient ring of the next edge. A failed division or a nonzero
//! residual is `Inconsistent`; a degree not covered by enough edges is
//! `Underdetermined`.

use crate::error::CsmError;
use crate::grass::{GKMGraph, GrassPoint, LocalClassTable};
use crate::poly::{LinearForm, MultiPoly};

use super::degree_zero_anchor;

struct Congruence {
    neighbor_class: MultiPoly,
    /// Exchanged pair `(i, j)`: reduction substitutes `t_j <- t_i`.
    pair: (usize, usize),
    label: LinearForm,
}

/// Solve for the local class at `p0` given the classes at its moment-graph
/// neighbours. Degrees below `dim` come from the congruence system; the
/// top degree is anchored by membership.
pub fn gkm_solve(
    graph: &GKMGraph,
    neighbors: &LocalClassTable,
    p0: &GrassPoint,
    member: bool,
) -> Result<MultiPoly, CsmError> {
    let nv = graph.n();
    let dim = graph.m() * (graph.n() - graph.m());
    let mut congruences = Vec::new();
    for (neighbor, (i, j)) in graph.incident(p0) {
        let class = neighbors
            .get(&neighbor)
            .ok_or_else(|| CsmError::MissingClass(neighbor.to_string()))?;
        congruences.push(Congruence {
            neighbor_class: class.clone(),
            pair: (i, j),
            label: LinearForm::difference(nv, j, i),
        });
    }

    let mut solution = MultiPoly::zero(nv);
    for degree in 0..dim {
        if degree >= congruences.len() {
            return Err(CsmError::Underdetermined { degree });
        }
        let part = solve_degree(&congruences, nv, degree)?;
        solution = &solution + &part;
    }
    // Belt check: every congruence holds for the full lower part.
    for c in &congruences {
        let diff = &solution - &lower_part(&c.neighbor_class, dim);
        if !diff.merge_vars(c.pair.1, c.pair.0).is_zero() {
            return Err(CsmError::Inconsistent {
                degree: dim,
                detail: format!("congruence modulo {} fails on recheck", c.label),
            });
        }
    }
    Ok(&solution + &degree_zero_anchor(p0, member))
}

fn lower_part(p: &MultiPoly, dim: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for (d, part) in p.homogeneous_parts() {
        if d < dim {
            out = &out + &part;
        }
    }
    out
}

fn solve_degree(
    congruences: &[Congruence],
    nv: usize,
    degree: usize,
) -> Result<MultiPoly, CsmError> {
    // g satisfies the first r congruences; corrections are multiples of
    // the product of the processed labels.
    let mut g = MultiPoly::zero(nv);
    let mut processed: Vec<&Congruence> = Vec::new();
    let mut processed_product = MultiPoly::one(nv);
    for c in congruences {
        let target = c.neighbor_class.homogeneous_component(degree);
        let (i, j) = c.pair;
        let residual = (&target - &g).merge_vars(j, i);
        if processed.len() > degree {
            // No room left for a correction; the congruence must already hold.
            if !residual.is_zero() {
                return Err(CsmError::Inconsistent {
                    degree,
                    detail: format!("congruence modulo {} has no solution", c.label),
                });
            }
            continue;
        }
        if residual.is_zero() {
            processed.push(c);
            processed_product = &processed_product * &c.label.to_poly(nv);
            continue;
        }
        // residual = delta * prod(previous labels) in the quotient ring.
        let mut delta = residual;
        for prev in &processed {
            let reduced_label = reduce_form(&prev.label, j, i, nv);
            delta = delta.exact_div_linear(&reduced_label).map_err(|_| {
                CsmError::Inconsistent {
                    degree,
                    detail: format!(
                        "residual not divisible by {} modulo {}",
                        prev.label, c.label
                    ),
                }
            })?;
        }
        g = &g + &(&delta * &processed_product);
        processed.push(c);
        processed_product = &processed_product * &c.label.to_poly(nv);
    }
    Ok(g)
}

/// The label of an earlier edge reduced modulo `t_j - t_i`; never zero for
/// distinct exchange pairs.
fn reduce_form(label: &LinearForm, j: usize, i: usize, nv: usize) -> LinearForm {
    let mut coeffs = label.coefficients().to_vec();
    if coeffs[j - 1] != 0 {
        coeffs[i - 1] += coeffs[j - 1];
        coeffs[j - 1] = 0;
    }
    LinearForm::new(coeffs).unwrap_or_else(|_| LinearForm::variable(nv, i))
}
