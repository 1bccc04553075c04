//! Local classes of invariant cones via partial localization.
//!
//! The equivariant cohomology of the projectivization of a representation
//! with weights `w_1..w_n` is generated by `h` with the single relation
//! `sum_i sigma_i(w) h^(n-i) = 0`. A projective-cone class written as
//! `sum b_i(t) h^i` restricts the cone's own local class to
//! `b_0(t) + e_0`, with `e_0` the product of the weights. For the scalar
//! circle action this specializes to `sum a_i t^i + t^n`.

use crate::error::CsmError;
use crate::poly::{Coeff, LinearForm, MultiPoly};
use num_traits::Zero;

/// A polynomial in `h` with polynomial coefficients: `coeffs[i] * h^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPoly {
    pub coeffs: Vec<MultiPoly>,
}

impl HPoly {
    pub fn new(coeffs: Vec<MultiPoly>) -> Self {
        HPoly { coeffs }
    }

    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    /// The monomial `c * h^k` over `nvars` characters.
    pub fn h_power(nvars: usize, k: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(nvars); k + 1];
        coeffs[k] = MultiPoly::one(nvars);
        HPoly { coeffs }
    }

    pub fn h_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn mul_h(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let nv = self.coeffs[0].nvars();
        let mut coeffs = vec![MultiPoly::zero(nv)];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }
}

/// Elementary symmetric polynomials `sigma_0..sigma_n` of the weights.
fn elementary_symmetric(weights: &[LinearForm], nvars: usize) -> Vec<MultiPoly> {
    let mut sigma = vec![MultiPoly::one(nvars)];
    for w in weights {
        let wp = w.to_poly(nvars);
        let mut next = Vec::with_capacity(sigma.len() + 1);
        next.push(MultiPoly::one(nvars));
        for k in 1..=sigma.len() {
            let mut v = if k < sigma.len() {
                sigma[k].clone()
            } else {
                MultiPoly::zero(nvars)
            };
            v = &v + &(&sigma[k - 1] * &wp);
            next.push(v);
        }
        sigma = next;
    }
    sigma
}

/// Canonical representative modulo the relation
/// `sum_i sigma_i(w) h^(n-i) = 0`: the `h`-degree drops below the number
/// of weights.
pub fn h_reduce(p: &HPoly, weights: &[LinearForm], nvars: usize) -> Result<HPoly, CsmError> {
    if weights.is_empty() {
        return Err(CsmError::Invalid("no weights".into()));
    }
    let n = weights.len();
    let sigma = elementary_symmetric(weights, nvars);
    let mut coeffs = p.coeffs.clone();
    coeffs
        .iter()
        .try_for_each(|c| {
            if c.nvars() != nvars {
                Err(CsmError::Invalid("coefficient ring mismatch".into()))
            } else {
                Ok(())
            }
        })?;
    while coeffs.len() > n {
        let d = coeffs.len() - 1;
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        // h^n = -(sigma_1 h^(n-1) + ... + sigma_n).
        for i in 1..=n {
            let idx = d - i;
            coeffs[idx] = &coeffs[idx] - &(&top * &sigma[i]);
        }
    }
    Ok(HPoly { coeffs }.trim())
}

/// The inverse Euler class of the hyperplane-at-infinity normal bundle,
/// kept polynomial by scaling: returns `(-sum_i sigma_(n-i) h^(i-1), sigma_n)`
/// so that the first component divided by the second is `h^(-1)`.
pub fn h_inverse_numerator(
    weights: &[LinearForm],
    nvars: usize,
) -> Result<(HPoly, MultiPoly), CsmError> {
    if weights.is_empty() {
        return Err(CsmError::Invalid("no weights".into()));
    }
    let n = weights.len();
    let sigma = elementary_symmetric(weights, nvars);
    let coeffs: Vec<MultiPoly> = (1..=n).map(|i| sigma[n - i].neg()).collect();
    Ok((HPoly { coeffs }.trim(), sigma[n].clone()))
}

/// Expansion data for a projective-cone class.
#[derive(Clone, Debug)]
pub struct ConeClassSpec {
    /// Nonzero weights of the ambient representation.
    pub weights: Vec<LinearForm>,
    /// Coefficient of `h^0` in the projectivization's class.
    pub b0: MultiPoly,
}

/// Local class of the affine cone from its projectivization: `b_0 + e_0`
/// with `e_0` the Euler class of the representation.
pub fn projective_cone_class(spec: &ConeClassSpec) -> Result<MultiPoly, CsmError> {
    if spec.weights.is_empty() {
        return Err(CsmError::Invalid("no weights".into()));
    }
    let nv = spec.b0.nvars();
    if spec.b0.degree().unwrap_or(0) >= spec.weights.len() {
        return Err(CsmError::Invalid(format!(
            "b0 has degree {} but the representation has dimension {}",
            spec.b0.degree().unwrap_or(0),
            spec.weights.len()
        )));
    }
    let mut e0 = MultiPoly::one(nv);
    for w in &spec.weights {
        if w.nvars() != nv {
            return Err(CsmError::Invalid("weight ring mismatch".into()));
        }
        e0 = &e0 * &w.to_poly(nv);
    }
    Ok(&spec.b0 + &e0)
}

/// Scalar circle action: the cone class `sum a_i t^i + t^n` in the single
/// character `t`, from the projectivization's coefficients `a_0..a_(n-1)`.
pub fn scalar_cone_class(a: &[Coeff]) -> MultiPoly {
    let n = a.len();
    let mut out = MultiPoly::zero(1);
    for (i, c) in a.iter().enumerate() {
        out = &out + &MultiPoly::var(1, 0).pow(i).scale(c);
    }
    &out + &MultiPoly::var(1, 0).pow(n)
}

/// Rewrite `sum a_i x^i` in `h = x - t`: returns `b_j(t)` with
/// `sum b_j h^j = sum a_i (h + t)^i`, each `b_j` univariate in `t`.
pub fn h_substitution(a: &[Coeff]) -> Vec<MultiPoly> {
    let n = a.len();
    let mut b = vec![MultiPoly::zero(1); n.max(1)];
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // (h + t)^i contributes C(i, j) t^(i-j) to b_j.
        let mut binom = Coeff::from_integer(1.into());
        for j in 0..=i {
            if j > 0 {
                binom = binom * Coeff::from_integer(((i - j + 1) as i64).into())
                    / Coeff::from_integer((j as i64).into());
            }
            let term = MultiPoly::var(1, 0).pow(i - j).scale(&(c.clone() * &binom));
            b[j] = &b[j] + &term;
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, parse_poly};

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    fn scalar_weights(n: usize) -> Vec<LinearForm> {
        // n copies of the identity character t.
        (0..n).map(|_| LinearForm::variable(1, 1)).collect()
    }

    #[test]
    fn single_weight_relation() {
        // n = 1: h reduces to -w_1.
        let w = vec![LinearForm::variable(1, 1)];
        let h = HPoly::h_power(1, 1);
        let red = h_reduce(&h, &w, 1).unwrap();
        assert_eq!(red.coeffs, vec![p(1, "-t1")]);
    }

    #[test]
    fn top_power_reduction() {
        // h^n = -(sigma_1 h^(n-1) + ... + sigma_n) for distinct characters.
        let nv = 3;
        let w: Vec<LinearForm> = (1..=3).map(|i| LinearForm::variable(nv, i)).collect();
        let h3 = HPoly::h_power(nv, 3);
        let red = h_reduce(&h3, &w, nv).unwrap();
        let sigma1 = p(nv, "t1 + t2 + t3");
        let sigma2 = p(nv, "t1*t2 + t1*t3 + t2*t3");
        let sigma3 = p(nv, "t1*t2*t3");
        assert_eq!(red.coeffs, vec![sigma3.neg(), sigma2.neg(), sigma1.neg()]);
    }

    #[test]
    fn h_times_inverse_is_one_after_scaling() {
        for n in 1..=4usize {
            let nv = n;
            let w: Vec<LinearForm> = (1..=n).map(|i| LinearForm::variable(nv, i)).collect();
            let (inv, divisor) = h_inverse_numerator(&w, nv).unwrap();
            let prod = inv.mul_h();
            let red = h_reduce(&prod, &w, nv).unwrap();
            assert_eq!(red.h_degree(), Some(0), "n = {n}");
            assert_eq!(red.coeffs[0], divisor, "n = {n}");
        }
    }

    #[test]
    fn whole_space_cone() {
        // X = V: b0 = prod(1 + w_i) - prod(w_i), class = prod(1 + w_i).
        let nv = 2;
        let weights = vec![LinearForm::variable(nv, 1), LinearForm::variable(nv, 2)];
        let total = p(nv, "(1 + t1)*(1 + t2)");
        let e0 = p(nv, "t1*t2");
        let spec = ConeClassSpec {
            weights,
            b0: &total - &e0,
        };
        assert_eq!(projective_cone_class(&spec).unwrap(), total);
    }

    #[test]
    fn origin_only_cone() {
        // X = {0}: empty projectivization, b0 = 0, class = e_0.
        let nv = 2;
        let weights = vec![LinearForm::variable(nv, 1), LinearForm::variable(nv, 2)];
        let spec = ConeClassSpec {
            weights,
            b0: MultiPoly::zero(nv),
        };
        assert_eq!(projective_cone_class(&spec).unwrap(), p(nv, "t1*t2"));
    }

    #[test]
    fn scalar_matches_projective_route() {
        // b0(t) = sum a_i t^i feeds the general cone formula.
        let a = vec![coeff_int(0), coeff_int(4), coeff_int(-2)];
        let scalar = scalar_cone_class(&a);
        assert_eq!(scalar, p(1, "4*t1 - 2*t1^2 + t1^3"));
        let b = h_substitution(&a);
        let spec = ConeClassSpec {
            weights: scalar_weights(3),
            b0: b[0].clone(),
        };
        assert_eq!(projective_cone_class(&spec).unwrap(), scalar);
    }

    #[test]
    fn line_in_the_plane() {
        // P(X) a point in P^1: a = (0, 1) gives t + t^2 = (1 + t) t.
        let a = vec![coeff_int(0), coeff_int(1)];
        assert_eq!(scalar_cone_class(&a), p(1, "t1 + t1^2"));
    }

    #[test]
    fn whole_projective_space_gives_binomials() {
        for n in 1..=5usize {
            // a_i = C(n, i) for i < n; the cone class is (1 + t)^n.
            let mut a = Vec::new();
            let mut c = 1i64;
            for i in 0..n {
                a.push(coeff_int(c));
                c = c * (n as i64 - i as i64) / (i as i64 + 1);
            }
            let expect = p(1, "(1 + t1)").pow(n);
            assert_eq!(scalar_cone_class(&a), expect, "n = {n}");
        }
    }

    #[test]
    fn substitution_examples() {
        let b = h_substitution(&[coeff_int(1)]);
        assert_eq!(b, vec![p(1, "1")]);

        let b = h_substitution(&[coeff_int(0), coeff_int(1)]);
        assert_eq!(b, vec![p(1, "t1"), p(1, "1")]);

        let b = h_substitution(&[coeff_int(0), coeff_int(0), coeff_int(1)]);
        assert_eq!(b, vec![p(1, "t1^2"), p(1, "2*t1"), p(1, "1")]);
    }
}
