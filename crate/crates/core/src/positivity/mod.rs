//! Spanning-tree difference bases and nonnegativity reports.
//!
//! A local class that lies in the subring generated by the character
//! differences can be rewritten in the generators attached to a spanning
//! tree of the complete graph on the variable indices; some trees make all
//! coefficients nonnegative.

use crate::error::PositivityError;
use crate::poly::{coeff_to_string, AffineForm, Coeff, LinearForm, MultiPoly};
use num_traits::Signed;

/// An oriented spanning tree on vertices `1..=nvertices`. The edge
/// `(tail, head)` carries the generator `u_e = t_head - t_tail`.
/// Orientation is explicit input; nothing is inferred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeBasis {
    nvertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TreeBasis {
    pub fn new(nvertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, PositivityError> {
        if nvertices < 2 {
            return Err(PositivityError::Invalid(
                "need at least two vertices".into(),
            ));
        }
        if edges.len() != nvertices - 1 {
            return Err(PositivityError::NotATree(format!(
                "{} edges on {} vertices",
                edges.len(),
                nvertices
            )));
        }
        // Union-find connectivity and acyclicity.
        let mut parent: Vec<usize> = (0..=nvertices).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &edges {
            if a == b || a < 1 || b < 1 || a > nvertices || b > nvertices {
                return Err(PositivityError::NotATree(format!("bad edge {a}>{b}")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(PositivityError::NotATree(format!(
                    "edge {a}>{b} closes a cycle"
                )));
            }
            parent[ra] = rb;
        }
        Ok(TreeBasis { nvertices, edges })
    }

    /// Parse the edge syntax `"1>2,2>4,4>3"`.
    pub fn parse(s: &str, nvertices: usize) -> Result<Self, PositivityError> {
        let mut edges = Vec::new();
        for part in s.split(',') {
            let (a, b) = part
                .trim()
                .split_once('>')
                .ok_or_else(|| PositivityError::Invalid(format!("bad edge {part:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|e| PositivityError::Invalid(format!("bad edge {part:?}: {e}")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|e| PositivityError::Invalid(format!("bad edge {part:?}: {e}")))?;
            edges.push((a, b));
        }
        TreeBasis::new(nvertices, edges)
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Generator of edge `e` as a linear form in the `t` variables.
    pub fn generator(&self, e: usize) -> LinearForm {
        let (tail, head) = self.edges[e];
        LinearForm::difference(self.nvertices, head, tail)
    }

    /// Integer edge-coordinates of every vertex potential: vertex 1 sits at
    /// the origin and crossing edge `e` forwards adds the unit vector `e`.
    fn potentials(&self) -> Vec<Vec<i64>> {
        let ne = self.edges.len();
        let mut pot: Vec<Option<Vec<i64>>> = vec![None; self.nvertices + 1];
        pot[1] = Some(vec![0; ne]);
        let mut changed = true;
        while changed {
            changed = false;
            for (e, &(tail, head)) in self.edges.iter().enumerate() {
                if pot[tail].is_some() && pot[head].is_none() {
                    let mut v = pot[tail].clone().unwrap();
                    v[e] += 1;
                    pot[head] = Some(v);
                    changed = true;
                } else if pot[head].is_some() && pot[tail].is_none() {
                    let mut v = pot[head].clone().unwrap();
                    v[e] -= 1;
                    pot[tail] = Some(v);
                    changed = true;
                }
            }
        }
        pot.into_iter()
            .skip(1)
            .map(|v| v.expect("tree is connected"))
            .collect()
    }

    /// The unique integer representation of a translation-invariant linear
    /// form in the tree generators.
    pub fn represent(&self, w: &LinearForm) -> Result<Vec<i64>, PositivityError> {
        if w.nvars() != self.nvertices {
            return Err(PositivityError::Invalid(format!(
                "form over {} variables on a tree with {} vertices",
                w.nvars(),
                self.nvertices
            )));
        }
        if !w.is_difference_form() {
            return Err(PositivityError::NotTranslationInvariant);
        }
        let pot = self.potentials();
        let mut rep = vec![0i64; self.edges.len()];
        for (v, &c) in w.coefficients().iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (e, &p) in pot[v].iter().enumerate() {
                rep[e] += c * p;
            }
        }
        Ok(rep)
    }
}

/// Rewrite a translation-invariant polynomial in the tree generators
/// `u_1..u_(V-1)`. Substituting the defining forms back returns the input.
pub fn change_basis(p: &MultiPoly, tree: &TreeBasis) -> Result<MultiPoly, PositivityError> {
    if p.nvars() != tree.nvertices() {
        return Err(PositivityError::Invalid(format!(
            "polynomial in {} variables on a tree with {} vertices",
            p.nvars(),
            tree.nvertices()
        )));
    }
    if !p.is_translation_invariant() {
        return Err(PositivityError::NotTranslationInvariant);
    }
    let ne = tree.edges().len();
    let pot = tree.potentials();
    let targets: Vec<AffineForm> = pot
        .iter()
        .map(|coords| {
            let mut a = AffineForm::zero(ne);
            for (e, &c) in coords.iter().enumerate() {
                if c != 0 {
                    a.coeffs[e] = crate::poly::coeff_int(c);
                }
            }
            a
        })
        .collect();
    Ok(p.substitute(&targets, ne)?)
}

/// Inverse of [`change_basis`]: substitute each generator's defining form.
pub fn from_basis(q: &MultiPoly, tree: &TreeBasis) -> Result<MultiPoly, PositivityError> {
    if q.nvars() != tree.edges().len() {
        return Err(PositivityError::Invalid(
            "polynomial variable count does not match the edge count".into(),
        ));
    }
    let nv = tree.nvertices();
    let targets: Vec<AffineForm> = (0..tree.edges().len())
        .map(|e| AffineForm::from_linear(&tree.generator(e), nv))
        .collect();
    Ok(q.substitute(&targets, nv)?)
}

/// A tree basis is positive for a weight set when every weight is a
/// nonnegative integer combination of the generators. The representation
/// is unique, so this is a componentwise sign check.
pub fn is_positive_basis(
    tree: &TreeBasis,
    weights: &[LinearForm],
) -> Result<bool, PositivityError> {
    for w in weights {
        let rep = tree.represent(w)?;
        if rep.iter().any(|&c| c < 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a coefficient-sign scan.
#[derive(Clone, Debug)]
pub struct NonNegReport {
    pub nonnegative: bool,
    /// Offending monomials in the `u` variables with their coefficients.
    pub negative_terms: Vec<(String, Coeff)>,
}

/// Report whether all coefficients are nonnegative, listing offenders.
pub fn check_nonneg(p: &MultiPoly) -> NonNegReport {
    let mut negative_terms = Vec::new();
    for (m, c) in p.terms() {
        if c.is_negative() {
            let mono = MultiPoly::monomial(p.nvars(), m.clone(), crate::poly::coeff_int(1));
            negative_terms.push((
                format!("{}*{}", coeff_to_string(c), mono.to_text_with('u')),
                c.clone(),
            ));
        }
    }
    NonNegReport {
        nonnegative: negative_terms.is_empty(),
        negative_terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    #[test]
    fn single_edge_change_of_basis() {
        let tree = TreeBasis::parse("1>2", 2).unwrap();
        let q = change_basis(&p(2, "t2 - t1"), &tree).unwrap();
        assert_eq!(q, p(1, "u1"));
    }

    #[test]
    fn chain_path_sums() {
        // Tree 1>2, 2>4, 4>3: t3 - t1 = u1 + u2 + u3.
        let tree = TreeBasis::parse("1>2,2>4,4>3", 4).unwrap();
        let q = change_basis(&p(4, "t3 - t1"), &tree).unwrap();
        assert_eq!(q, p(3, "u1 + u2 + u3"));
    }

    #[test]
    fn round_trip_through_the_tree() {
        let tree = TreeBasis::parse("1>2,2>4,4>3", 4).unwrap();
        let orig = p(4, "(t3 - t1)*(t4 - t2) + 2*(t2 - t1)");
        let q = change_basis(&orig, &tree).unwrap();
        assert_eq!(from_basis(&q, &tree).unwrap(), orig);
    }

    #[test]
    fn change_basis_is_a_ring_map() {
        let tree = TreeBasis::parse("1>3,2>3,2>4", 4).unwrap();
        let a = p(4, "t3 - t1 + 2*(t4 - t2)");
        let b = p(4, "(t4 - t3)^2");
        let lhs = change_basis(&(&a * &b), &tree).unwrap();
        let rhs = &change_basis(&a, &tree).unwrap() * &change_basis(&b, &tree).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = change_basis(&(&a + &b), &tree).unwrap();
        let rhs = &change_basis(&a, &tree).unwrap() + &change_basis(&b, &tree).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_invariant_input_rejected() {
        let tree = TreeBasis::parse("1>2", 2).unwrap();
        assert!(matches!(
            change_basis(&p(2, "t1 + t2"), &tree),
            Err(PositivityError::NotTranslationInvariant)
        ));
    }

    #[test]
    fn tree_validation() {
        assert!(TreeBasis::parse("1>2,2>3,3>1", 3).is_err());
        assert!(TreeBasis::parse("1>2", 3).is_err());
        assert!(TreeBasis::parse("1>2,3>4", 4).is_err());
        assert!(TreeBasis::parse("1>2,2>3,3>4", 4).is_ok());
    }

    #[test]
    fn positivity_of_single_edge() {
        let tree = TreeBasis::parse("1>2", 2).unwrap();
        let w = LinearForm::difference(2, 2, 1);
        assert!(is_positive_basis(&tree, &[w]).unwrap());
        let w = LinearForm::difference(2, 1, 2);
        assert!(!is_positive_basis(&tree, &[w]).unwrap());
    }

    #[test]
    fn nonneg_report_lists_offenders() {
        let good = p(2, "t1^2 + 2*t1*t2");
        assert!(check_nonneg(&good).nonnegative);
        let bad = p(1, "4*t1 - 2*t1^2 + t1^3");
        let report = check_nonneg(&bad);
        assert!(!report.nonnegative);
        assert_eq!(report.negative_terms.len(), 1);
        assert!(report.negative_terms[0].0.contains("u1^2"));
    }
}
