//! Summands of localization formulas: a polynomial numerator over a
//! multiset of linear forms, and exact summation of many such terms.
//!
//! The sum of a full set of localization terms is always a polynomial, and
//! raising `NotPolynomial` on a residual denominator is the main data
//! integrity check of the whole calculus. Denominators stay factored;
//! cancellation only ever tries exact division by the denominator's own
//! linear forms.

use super::{LinearForm, MultiPoly};
use crate::error::PolyError;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Multiset of sign-normalized linear forms.
pub(crate) type Denominator = BTreeMap<LinearForm, u32>;

fn denom_degree(d: &Denominator) -> usize {
    d.values().map(|&m| m as usize).sum()
}

fn denom_to_string(d: &Denominator) -> String {
    d.iter()
        .map(|(f, m)| {
            if *m == 1 {
                format!("({f})")
            } else {
                format!("({f})^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn denom_poly(d: &Denominator, nvars: usize) -> MultiPoly {
    let mut p = MultiPoly::one(nvars);
    for (f, m) in d {
        let fp = f.to_poly(nvars);
        for _ in 0..*m {
            p = &p * &fp;
        }
    }
    p
}

/// One localization summand `sign * numerator / prod(forms)`.
#[derive(Clone, Debug)]
pub struct FractionTerm {
    sign: i8,
    numerator: MultiPoly,
    denominator: Denominator,
}

impl FractionTerm {
    /// Build from a numerator and denominator factors. Factor signs are
    /// normalized into the overall sign.
    pub fn new<I>(numerator: MultiPoly, denominator: I) -> Self
    where
        I: IntoIterator<Item = LinearForm>,
    {
        let mut sign = 1i8;
        let mut den: Denominator = BTreeMap::new();
        for f in denominator {
            assert_eq!(f.nvars(), numerator.nvars(), "form arity mismatch");
            let (norm, s) = f.normalized();
            sign *= s;
            *den.entry(norm).or_insert(0) += 1;
        }
        FractionTerm {
            sign,
            numerator,
            denominator: den,
        }
    }

    pub fn from_poly(numerator: MultiPoly) -> Self {
        FractionTerm {
            sign: 1,
            numerator,
            denominator: BTreeMap::new(),
        }
    }

    /// Build `payload * prod(numer_forms) / prod(denom_forms)`, cancelling
    /// equal forms (up to sign) between the two lists before anything is
    /// expanded. This is where quotients of Euler classes collapse.
    pub fn from_ratio(
        payload: MultiPoly,
        numer_forms: &[LinearForm],
        denom_forms: &[LinearForm],
    ) -> Self {
        let nvars = payload.nvars();
        let mut sign = 1i8;
        let mut num_ms: Denominator = BTreeMap::new();
        for f in numer_forms {
            let (norm, s) = f.normalized();
            sign *= s;
            *num_ms.entry(norm).or_insert(0) += 1;
        }
        let mut den_ms: Denominator = BTreeMap::new();
        for f in denom_forms {
            let (norm, s) = f.normalized();
            sign *= s;
            *den_ms.entry(norm).or_insert(0) += 1;
        }
        // Multiset cancellation.
        for (f, dm) in den_ms.iter_mut() {
            if let Some(nm) = num_ms.get_mut(f) {
                let common = (*nm).min(*dm);
                *nm -= common;
                *dm -= common;
            }
        }
        num_ms.retain(|_, m| *m > 0);
        den_ms.retain(|_, m| *m > 0);
        let mut numerator = payload;
        for (f, m) in &num_ms {
            let fp = f.to_poly(nvars);
            for _ in 0..*m {
                numerator = &numerator * &fp;
            }
        }
        FractionTerm {
            sign,
            numerator,
            denominator: den_ms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator_forms(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.denominator.iter().map(|(f, m)| (f, *m))
    }

    pub fn denominator_degree(&self) -> usize {
        denom_degree(&self.denominator)
    }

    /// Represented degree of a homogeneous term, `None` when the numerator
    /// is zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<isize> {
        if !self.numerator.is_homogeneous() || self.numerator.is_zero() {
            return None;
        }
        Some(self.numerator.degree().unwrap() as isize - self.denominator_degree() as isize)
    }

    fn signed_numerator(&self) -> MultiPoly {
        if self.sign < 0 {
            self.numerator.neg()
        } else {
            self.numerator.clone()
        }
    }

    /// The degree-`d` slice of the represented rational function, as a
    /// numerator over the same denominator.
    fn slice(&self, d: usize) -> Fraction {
        let want = d + self.denominator_degree();
        let num = self.numerator.homogeneous_component(want);
        let num = if self.sign < 0 { num.neg() } else { num };
        if num.is_zero() {
            Fraction::zero(self.nvars())
        } else {
            Fraction {
                num,
                den: self.denominator.clone(),
            }
        }
    }

    fn whole(&self) -> Fraction {
        if self.numerator.is_zero() {
            Fraction::zero(self.nvars())
        } else {
            Fraction {
                num: self.signed_numerator(),
                den: self.denominator.clone(),
            }
        }
    }

    /// Equality of the represented rational functions, checked by cross
    /// multiplication.
    pub fn same_value(&self, other: &FractionTerm) -> bool {
        let a = self.whole();
        let b = other.whole();
        let lhs = &a.num * &denom_poly(&b.den, self.nvars());
        let rhs = &b.num * &denom_poly(&a.den, self.nvars());
        lhs == rhs
    }
}

#[derive(Clone)]
struct Fraction {
    num: MultiPoly,
    den: Denominator,
}

impl Fraction {
    fn zero(nvars: usize) -> Self {
        Fraction {
            num: MultiPoly::zero(nvars),
            den: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divide out every denominator form that still divides the numerator.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for f in forms {
            while self.den.get(&f).copied().unwrap_or(0) > 0 {
                match self.num.exact_div_linear(&f) {
                    Ok(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }
}

fn overlap(a: &Denominator, b: &Denominator) -> usize {
    a.iter()
        .map(|(f, m)| b.get(f).map_or(0, |bm| (*m).min(*bm) as usize))
        .sum()
}

fn merge_pair(a: Fraction, b: Fraction, nvars: usize) -> Fraction {
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    // lcm of the two denominators
    let mut lcm = a.den.clone();
    for (f, m) in &b.den {
        let e = lcm.entry(f.clone()).or_insert(0);
        *e = (*e).max(*m);
    }
    let mut complement_a: Denominator = BTreeMap::new();
    let mut complement_b: Denominator = BTreeMap::new();
    for (f, m) in &lcm {
        let ma = a.den.get(f).copied().unwrap_or(0);
        let mb = b.den.get(f).copied().unwrap_or(0);
        if *m > ma {
            complement_a.insert(f.clone(), m - ma);
        }
        if *m > mb {
            complement_b.insert(f.clone(), m - mb);
        }
    }
    let na = &a.num * &denom_poly(&complement_a, nvars);
    let nb = &b.num * &denom_poly(&complement_b, nvars);
    let mut out = Fraction {
        num: &na + &nb,
        den: lcm,
    };
    out.reduce();
    out
}

/// Exact sum of fractions, merging the pair with the most shared
/// denominator factors first and reducing after every step.
fn merge_all(items: Vec<Fraction>, nvars: usize) -> Fraction {
    // Terms over an identical denominator add directly.
    let mut grouped: BTreeMap<Denominator, MultiPoly> = BTreeMap::new();
    for mut it in items {
        it.reduce();
        if it.is_zero() {
            continue;
        }
        match grouped.get_mut(&it.den) {
            Some(acc) => *acc = &*acc + &it.num,
            None => {
                grouped.insert(it.den, it.num);
            }
        }
    }
    let mut work: Vec<Fraction> = grouped
        .into_iter()
        .map(|(den, num)| {
            let mut f = Fraction { num, den };
            f.reduce();
            f
        })
        .filter(|f| !f.is_zero())
        .collect();
    while work.len() > 1 {
        let mut best = (0usize, 1usize);
        let mut best_key = (usize::MIN, usize::MAX);
        for i in 0..work.len() {
            for j in (i + 1)..work.len() {
                let shared = overlap(&work[i].den, &work[j].den);
                let lcm_size = denom_degree(&work[i].den) + denom_degree(&work[j].den) - shared;
                // Prefer maximal overlap, then the smallest merged denominator.
                let key = (shared, usize::MAX - lcm_size);
                if key > best_key {
                    best_key = key;
                    best = (i, j);
                }
            }
        }
        let (i, j) = best;
        let b = work.swap_remove(j);
        let a = work.swap_remove(i);
        let merged = merge_pair(a, b, nvars);
        if !merged.is_zero() {
            work.push(merged);
        }
    }
    work.pop().unwrap_or_else(|| Fraction::zero(nvars))
}

/// Uncapped sum: bring every term to the least common denominator, add the
/// numerators in one accumulator, then divide the denominator back out.
/// For localization sums over one fixed-point set the common denominator is
/// just the set of all character differences, and the accumulated numerator
/// collapses massively before any division happens.
fn sum_over_common_denominator(
    terms: &[FractionTerm],
    nvars: usize,
) -> Result<MultiPoly, PolyError> {
    let mut lcm: Denominator = BTreeMap::new();
    for t in terms {
        for (f, m) in &t.denominator {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
    }
    let mut acc = MultiPoly::zero(nvars);
    for t in terms {
        if t.numerator.is_zero() {
            continue;
        }
        let mut complement: Denominator = BTreeMap::new();
        for (f, m) in &lcm {
            let have = t.denominator.get(f).copied().unwrap_or(0);
            if *m > have {
                complement.insert(f.clone(), m - have);
            }
        }
        let product = denom_poly(&complement, nvars);
        acc.accumulate_product(&t.signed_numerator(), &product);
    }
    divide_out(acc, &lcm)
}

/// Divide every form of `lcm` out of `acc`. A prime linear form that fails
/// to divide now can never divide after other factors are removed, so one
/// pass over the forms suffices; the leftovers are the true residual
/// denominator.
fn divide_out(mut acc: MultiPoly, lcm: &Denominator) -> Result<MultiPoly, PolyError> {
    if acc.is_zero() {
        return Ok(acc);
    }
    let mut residual: Denominator = BTreeMap::new();
    for (f, m) in lcm {
        for step in 0..*m {
            match acc.exact_div_linear(f) {
                Ok(q) => acc = q,
                Err(_) => {
                    residual.insert(f.clone(), m - step);
                    break;
                }
            }
            if acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    if residual.is_empty() {
        Ok(acc)
    } else {
        Err(PolyError::NotPolynomial {
            degree: None,
            residual: denom_to_string(&residual),
        })
    }
}

/// Uncapped sum with on-demand numerators: the denominators are declared
/// upfront, each numerator is produced, folded into the common-denominator
/// accumulator, and dropped before the next one is built. Keeps the peak
/// footprint at one expanded term plus the accumulator.
pub fn sum_fractions_streamed(
    nvars: usize,
    denominators: &[Vec<LinearForm>],
    mut numerator: impl FnMut(usize) -> Result<MultiPoly, String>,
) -> Result<MultiPoly, PolyError> {
    let mut normalized: Vec<(Denominator, i8)> = Vec::with_capacity(denominators.len());
    for forms in denominators {
        let mut den: Denominator = BTreeMap::new();
        let mut sign = 1i8;
        for f in forms {
            let (norm, s) = f.normalized();
            sign *= s;
            *den.entry(norm).or_insert(0) += 1;
        }
        normalized.push((den, sign));
    }
    let mut lcm: Denominator = BTreeMap::new();
    for (den, _) in &normalized {
        for (f, m) in den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
    }
    let mut acc = MultiPoly::zero(nvars);
    for (idx, (den, sign)) in normalized.iter().enumerate() {
        let num = numerator(idx).map_err(PolyError::Invalid)?;
        if num.is_zero() {
            continue;
        }
        let num = if *sign < 0 { num.neg() } else { num };
        let mut complement: Denominator = BTreeMap::new();
        for (f, m) in &lcm {
            let have = den.get(f).copied().unwrap_or(0);
            if *m > have {
                complement.insert(f.clone(), m - have);
            }
        }
        let product = denom_poly(&complement, nvars);
        acc.accumulate_product(&num, &product);
    }
    divide_out(acc, &lcm)
}

fn sum_terms_at_degree(
    terms: &[FractionTerm],
    nvars: usize,
    degree: usize,
) -> Result<MultiPoly, PolyError> {
    let slices: Vec<Fraction> = terms.iter().map(|t| t.slice(degree)).collect();
    let total = merge_all(slices, nvars);
    if total.den.is_empty() {
        Ok(total.num)
    } else {
        Err(PolyError::NotPolynomial {
            degree: Some(degree),
            residual: denom_to_string(&total.den),
        })
    }
}

/// Exact sum of localization summands. The result must clear its
/// denominator completely, i.e. be a polynomial; otherwise the input data
/// is wrong (for example a missing fixed point) and `NotPolynomial` is
/// raised.
///
/// With a `degree_cap`, summation and the polynomiality check run
/// independently (and in parallel) per homogeneous degree `0..=cap`;
/// components above the cap are not computed. One monolithic common
/// denominator is never materialized in that mode.
pub fn sum_fractions(
    terms: &[FractionTerm],
    degree_cap: Option<usize>,
) -> Result<MultiPoly, PolyError> {
    let nvars = match terms.first() {
        Some(t) => t.nvars(),
        None => return Err(PolyError::Invalid("empty fraction sum".into())),
    };
    for t in terms {
        if t.nvars() != nvars {
            return Err(PolyError::ArityMismatch(nvars, t.nvars()));
        }
    }
    match degree_cap {
        None => sum_over_common_denominator(terms, nvars),
        Some(cap) => {
            let parts: Result<Vec<MultiPoly>, PolyError> = (0..=cap)
                .into_par_iter()
                .map(|d| sum_terms_at_degree(terms, nvars, d))
                .collect();
            let mut out = MultiPoly::zero(nvars);
            for p in parts? {
                out = out.try_add(&p)?;
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    fn diff(nvars: usize, j: usize, i: usize) -> LinearForm {
        LinearForm::difference(nvars, j, i)
    }

    /// Localization terms for integrating `(-t_k)^m` over the projective
    /// space on `nv` characters.
    fn projective_power_terms(nv: usize, m: usize) -> Vec<FractionTerm> {
        (1..=nv)
            .map(|k| {
                let num = MultiPoly::var(nv, k - 1).neg().pow(m);
                let den: Vec<LinearForm> = (1..=nv)
                    .filter(|&l| l != k)
                    .map(|l| diff(nv, l, k))
                    .collect();
                FractionTerm::new(num, den)
            })
            .collect()
    }

    #[test]
    fn projective_sum_below_top_degree_vanishes() {
        // Four summands with cubic denominators and quadratic numerators.
        let terms = projective_power_terms(4, 2);
        assert!(sum_fractions(&terms, None).unwrap().is_zero());
    }

    #[test]
    fn projective_sum_at_top_degree_is_one() {
        let terms = projective_power_terms(4, 3);
        assert!(sum_fractions(&terms, None).unwrap().is_one());
    }

    #[test]
    fn quartic_numerators_give_quadratic_polynomial() {
        let terms = projective_power_terms(3, 4);
        let expect = p(3, "t1^2 + t2^2 + t3^2 + t1*t2 + t1*t3 + t2*t3");
        assert_eq!(sum_fractions(&terms, None).unwrap(), expect);
        assert_eq!(sum_fractions(&terms, Some(2)).unwrap(), expect);
    }

    #[test]
    fn missing_point_is_not_polynomial() {
        let mut terms = projective_power_terms(3, 4);
        terms.pop();
        assert!(matches!(
            sum_fractions(&terms, None),
            Err(PolyError::NotPolynomial { .. })
        ));
    }

    #[test]
    fn ratio_constructor_cancels_common_factors() {
        let nv = 4;
        let numer = vec![diff(nv, 3, 1), diff(nv, 4, 1)];
        let denom = vec![diff(nv, 3, 1), diff(nv, 3, 2)];
        let t = FractionTerm::from_ratio(MultiPoly::one(nv), &numer, &denom);
        assert_eq!(t.denominator_degree(), 1);
        assert_eq!(t.numerator().degree(), Some(1));
    }

    #[test]
    fn signed_cancellation_in_ratio() {
        // (t1 - t3) in the numerator cancels (t3 - t1) in the denominator
        // up to a sign flip.
        let nv = 3;
        let numer = vec![LinearForm::new(vec![1, 0, -1]).unwrap()];
        let denom = vec![diff(nv, 3, 1)];
        let t = FractionTerm::from_ratio(MultiPoly::one(nv), &numer, &denom);
        assert_eq!(t.denominator_degree(), 0);
        assert_eq!(t.sign(), -1);
    }

    #[test]
    fn permutation_invariance() {
        let mut terms = projective_power_terms(4, 5);
        let forward = sum_fractions(&terms, None).unwrap();
        terms.reverse();
        terms.swap(0, 2);
        assert_eq!(sum_fractions(&terms, None).unwrap(), forward);
        assert_eq!(sum_fractions(&terms, Some(2)).unwrap(), forward);
    }

    #[test]
    fn homogeneity_is_preserved() {
        let terms = projective_power_terms(4, 6);
        let total = sum_fractions(&terms, None).unwrap();
        assert!(total.is_homogeneous());
        assert_eq!(total.degree(), Some(3));
    }
}
