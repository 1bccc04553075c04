//! Exact sparse multivariate polynomials over arbitrary-precision
//! rationals, together with the factored-fraction layer used to evaluate
//! localization sums.
//!
//! Monomials are kept in graded lexicographic order with `t1 < t2 < ...`
//! (total degree first, then the exponent of the largest variable decides).
//! A polynomial never stores a zero coefficient, so structural equality is
//! semantic equality and the text/JSON forms are canonical.

mod divide;
mod fraction;
mod json;
mod linear;
mod text;

pub use fraction::{sum_fractions, sum_fractions_streamed, FractionTerm};
pub use json::{coeff_from_string, coeff_to_string, PolyJson};
pub use linear::{AffineForm, LinearForm};
pub use text::parse_poly;

use crate::error::PolyError;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Integer constant as an exact rational.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// Exponent vector of a single monomial. The length always equals the
/// variable count of the ring the monomial lives in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    fn swap(&self, i: usize, j: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i, j);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(nvars), c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn constant_i64(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, coeff_int(c))
    }

    /// The polynomial `t_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, index), Coeff::one());
        MultiPoly { nvars, terms }
    }

    pub fn monomial(nvars: usize, mono: Monomial, c: Coeff) -> Self {
        assert_eq!(mono.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms<I>(nvars: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in iter {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit(self.nvars))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Coeff {
        self.terms.get(mono).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::unit(self.nvars))
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Fused multiply-accumulate: `self += a * b`, no intermediate map.
    pub(crate) fn accumulate_product(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(self.nvars, a.nvars);
        debug_assert_eq!(self.nvars, b.nvars);
        let (small, large) = if a.terms.len() <= b.terms.len() {
            (a, b)
        } else {
            (b, a)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// Exact sum; fails on a variable-count mismatch.
    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Exact product; fails on a variable-count mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Sum of the degree-`d` terms.
    pub fn homogeneous_component(&self, d: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .range(first_of_degree(self.nvars, d)..)
                .take_while(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// All nonzero homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Self {
        assert!(index < self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] = e - 1;
            out.add_term(Monomial(exps), c * coeff_int(e as i64));
        }
        out
    }

    /// True when `p(t + c, t + c, ...) = p`, i.e. the polynomial lies in the
    /// subring generated by differences of variables. Checked via the
    /// directional derivative along `(1, 1, ..., 1)`.
    pub fn is_translation_invariant(&self) -> bool {
        let mut total = MultiPoly::zero(self.nvars);
        for i in 0..self.nvars {
            total = &total + &self.partial(i);
        }
        total.is_zero()
    }

    /// Relabel variables: entry `i` of `perm` is the new index of the old
    /// variable `i`. `perm` must be a permutation of `0..nvars`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u16; self.nvars];
                    for (i, &x) in m.exponents().iter().enumerate() {
                        e[perm[i]] = x;
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap(i, j), c.clone()))
                .collect(),
        }
    }

    /// True when the polynomial is fixed by every permutation of the listed
    /// variables (checked on adjacent transpositions).
    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    /// True when only the listed variables occur.
    pub fn support_within(&self, vars: &[usize]) -> bool {
        let allowed: Vec<bool> = {
            let mut a = vec![false; self.nvars];
            for &v in vars {
                a[v] = true;
            }
            a
        };
        self.terms.keys().all(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed[i])
        })
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars);
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Reinterpret in a ring with `new_nvars >= nvars` variables, the extra
    /// variables unused.
    pub fn extend_vars(&self, new_nvars: usize) -> Self {
        assert!(new_nvars >= self.nvars);
        MultiPoly {
            nvars: new_nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.resize(new_nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop trailing variables that do not occur.
    pub fn shrink_vars(&self, new_nvars: usize) -> Self {
        assert!(new_nvars <= self.nvars);
        MultiPoly {
            nvars: new_nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = m.exponents();
                    assert!(
                        e[new_nvars..].iter().all(|&x| x == 0),
                        "variable beyond {new_nvars} occurs"
                    );
                    (Monomial(e[..new_nvars].to_vec()), c.clone())
                })
                .collect(),
        }
    }

    /// All coefficients are integers and nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Splits off the exponents of one variable: index `k` of the result
    /// holds the coefficient of `t_v^k`, with the `t_v` exponent cleared.
    pub(crate) fn coefficients_in_var(&self, v: usize) -> Vec<MultiPoly> {
        let top = self
            .terms
            .keys()
            .map(|m| m.exponents()[v] as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![MultiPoly::zero(self.nvars); top + 1];
        for (m, c) in &self.terms {
            let k = m.exponents()[v] as usize;
            let mut e = m.exponents().to_vec();
            e[v] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of `coefficients_in_var`: `sum_k coeffs[k] * t_v^k`.
    pub(crate) fn from_coefficients_in_var(
        nvars: usize,
        v: usize,
        coeffs: &[MultiPoly],
    ) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                debug_assert_eq!(m.exponents()[v], 0);
                let mut e = m.exponents().to_vec();
                e[v] = u16::try_from(k).expect("exponent overflow");
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }
}

fn first_of_degree(nvars: usize, d: usize) -> Monomial {
    // Smallest monomial of total degree d: all of it on the first variable.
    let mut e = vec![0u16; nvars];
    if nvars == 0 {
        return Monomial(e);
    }
    e[0] = u16::try_from(d).expect("degree overflow");
    Monomial(e)
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("arity mismatch in +")
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("arity mismatch in -")
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("arity mismatch in *")
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl std::fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = MultiPoly::var(2, 0);
        let sum = a.try_add(&a.neg()).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn add_merges_terms() {
        let a = p(2, "t1 + t2");
        let b = p(2, "t2");
        assert_eq!(a.try_add(&b).unwrap(), p(2, "t1 + 2*t2"));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = MultiPoly::var(2, 0);
        let b = MultiPoly::var(3, 0);
        assert_eq!(a.try_add(&b), Err(PolyError::ArityMismatch(2, 3)));
        assert_eq!(a.try_mul(&b), Err(PolyError::ArityMismatch(2, 3)));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let q = p(3, "2*t1^2*t3 - 1/2*t2");
        assert_eq!(MultiPoly::one(3).try_mul(&q).unwrap(), q);
    }

    #[test]
    fn product_of_two_differences() {
        let a = p(4, "t3 - t1");
        let b = p(4, "t4 - t2");
        assert_eq!(
            a.try_mul(&b).unwrap(),
            p(4, "t3*t4 - t2*t3 - t1*t4 + t1*t2")
        );
    }

    #[test]
    fn homogeneous_component_picks_degree() {
        let q = p(1, "1 + t1 + t1^2");
        assert_eq!(q.homogeneous_component(1), p(1, "t1"));
        assert_eq!(q.homogeneous_component(0), p(1, "1"));
        assert_eq!(q.homogeneous_component(3), MultiPoly::zero(1));
    }

    #[test]
    fn canonical_order_is_graded() {
        let q = p(2, "t2 + t1^2");
        let degrees: Vec<usize> = q.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degrees, vec![1, 2]);
    }

    #[test]
    fn translation_invariance_detects_differences() {
        assert!(p(3, "t2 - t1").is_translation_invariant());
        assert!(p(3, "(t3-t1)*(t3-t2)").is_translation_invariant());
        assert!(!p(3, "t1 + t2").is_translation_invariant());
    }

    #[test]
    fn symmetry_check() {
        assert!(p(3, "t1*t2 + t1*t3 + t2*t3").is_symmetric_in(&[0, 1, 2]));
        assert!(!p(3, "t1*t2").is_symmetric_in(&[0, 1, 2]));
        assert!(p(3, "t1*t2").is_symmetric_in(&[0, 1]));
    }
}
