//! Torus-fixed-point geometry of Grassmannians.
//!
//! `Grass_m(C^n)` carries the standard torus action; the fixed points are
//! the coordinate subspaces, indexed by m-element subsets of `{1..n}`. The
//! projective space `P^(n-1)` is handled as `Grass_1(C^n)`.

mod gysin;
mod integrate;
mod residue;
mod table;

pub use gysin::{gysin_schur, gysin_schur_poly, GysinValue};
pub use integrate::{c1_power_template, integrate, integrate_symmetric, localization_terms};
pub use residue::residue_integral;
pub use table::{ClassJson, LocalClassTable, TableJson};

use crate::error::GrassError;
use crate::poly::{LinearForm, MultiPoly};

/// A torus-fixed point of `Grass_m(C^n)`: the coordinate subspace spanned
/// by the chosen axes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GrassPoint {
    subset: Vec<usize>,
    m: usize,
    n: usize,
}

impl GrassPoint {
    pub fn new(subset: Vec<usize>, m: usize, n: usize) -> Result<Self, GrassError> {
        if subset.len() != m
            || !subset.windows(2).all(|w| w[0] < w[1])
            || subset.iter().any(|&i| i < 1 || i > n)
        {
            return Err(GrassError::BadPoint(format!(
                "subset {subset:?} for Grass_{m}(C^{n})"
            )));
        }
        Ok(GrassPoint { subset, m, n })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.subset.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| !self.contains(i)).collect()
    }

    /// The neighbouring fixed point that swaps `i in subset` for `j` outside.
    pub fn exchange(&self, i: usize, j: usize) -> GrassPoint {
        debug_assert!(self.contains(i) && !self.contains(j));
        let mut subset: Vec<usize> = self
            .subset
            .iter()
            .copied()
            .filter(|&x| x != i)
            .chain(std::iter::once(j))
            .collect();
        subset.sort_unstable();
        GrassPoint {
            subset,
            m: self.m,
            n: self.n,
        }
    }
}

impl std::fmt::Display for GrassPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "p{{{}}}",
            self.subset
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All `C(n, m)` fixed points, in lexicographic order of the subsets.
pub fn fixed_points(m: usize, n: usize) -> Result<Vec<GrassPoint>, GrassError> {
    if m == 0 || m >= n {
        return Err(GrassError::BadSizes { m, n });
    }
    fn rec(
        start: usize,
        m: usize,
        n: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<GrassPoint>,
    ) {
        if current.len() == m {
            out.push(GrassPoint {
                subset: current.clone(),
                m,
                n,
            });
            return;
        }
        for i in start..=n {
            current.push(i);
            rec(i + 1, m, n, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    rec(1, m, n, &mut current, &mut out);
    Ok(out)
}

/// Weights of the tangent representation at a fixed point: `t_l - t_k` for
/// `k` in the subset and `l` outside, in deterministic order.
pub fn tangent_weights(p: &GrassPoint) -> Vec<LinearForm> {
    let mut out = Vec::with_capacity(p.m() * (p.n() - p.m()));
    for &k in p.subset() {
        for l in p.complement() {
            out.push(LinearForm::difference(p.n(), l, k));
        }
    }
    out
}

/// Product of the tangent weights at an isolated fixed point.
pub fn euler_class(p: &GrassPoint) -> MultiPoly {
    let nv = p.n();
    let mut e = MultiPoly::one(nv);
    for w in tangent_weights(p) {
        e = &e * &w.to_poly(nv);
    }
    e
}

/// An edge of the moment graph: two fixed points whose subsets differ by a
/// single exchange, labelled by the weight of the connecting orbit.
#[derive(Clone, Debug)]
pub struct GkmEdge {
    pub a: GrassPoint,
    pub b: GrassPoint,
    /// `t_j - t_i` where `b = (a minus i) plus j`.
    pub label: LinearForm,
    /// The exchanged pair `(i, j)` seen from `a`.
    pub exchanged: (usize, usize),
}

/// The moment graph of `Grass_m(C^n)`: vertices are fixed points, edges the
/// one-dimensional orbits.
#[derive(Clone, Debug)]
pub struct GKMGraph {
    m: usize,
    n: usize,
    vertices: Vec<GrassPoint>,
    edges: Vec<GkmEdge>,
}

pub fn gkm_graph(m: usize, n: usize) -> Result<GKMGraph, GrassError> {
    let vertices = fixed_points(m, n)?;
    let mut edges = Vec::new();
    for a in &vertices {
        for &i in a.subset() {
            for j in a.complement() {
                let b = a.exchange(i, j);
                // Keep each unordered pair once.
                if *a < b {
                    edges.push(GkmEdge {
                        a: a.clone(),
                        b,
                        label: LinearForm::difference(n, j, i),
                        exchanged: (i, j),
                    });
                }
            }
        }
    }
    Ok(GKMGraph {
        m,
        n,
        vertices,
        edges,
    })
}

impl GKMGraph {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[GrassPoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GkmEdge] {
        &self.edges
    }

    /// Edges at `p`, each as `(neighbour, exchanged pair (i, j))` with the
    /// label `t_j - t_i` oriented from `p`'s side.
    pub fn incident(&self, p: &GrassPoint) -> Vec<(GrassPoint, (usize, usize))> {
        let mut out = Vec::new();
        for e in &self.edges {
            if &e.a == p {
                out.push((e.b.clone(), e.exchanged));
            } else if &e.b == p {
                out.push((e.a.clone(), (e.exchanged.1, e.exchanged.0)));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}
