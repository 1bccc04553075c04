//! Integer linear forms in the characters and affine substitution targets.

use super::{coeff_int, Coeff, Monomial, MultiPoly};
use crate::error::PolyError;
use num_traits::{One, Zero};

/// A nonzero integer linear form `sum c_i * t_i`.
///
/// Inside fraction denominators forms are kept in the normalized sign
/// convention (first nonzero coefficient positive); [`LinearForm::normalized`]
/// reports the flip as a sign.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, PolyError> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(PolyError::Invalid("zero linear form".into()));
        }
        Ok(LinearForm { coeffs })
    }

    /// The character `t_j - t_i` (one-based indices).
    pub fn difference(nvars: usize, j: usize, i: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= nvars && j <= nvars && i != j);
        let mut coeffs = vec![0; nvars];
        coeffs[j - 1] = 1;
        coeffs[i - 1] = -1;
        LinearForm { coeffs }
    }

    /// The single character `t_i` (one-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut coeffs = vec![0; nvars];
        coeffs[i - 1] = 1;
        LinearForm { coeffs }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// Sign-normalized copy plus the sign of the flip, so that
    /// `self = sign * normalized`.
    pub fn normalized(&self) -> (LinearForm, i8) {
        let lead = self.coeffs.iter().find(|&&c| c != 0).copied().unwrap_or(1);
        if lead > 0 {
            (self.clone(), 1)
        } else {
            (
                LinearForm {
                    coeffs: self.coeffs.iter().map(|&c| -c).collect(),
                },
                -1,
            )
        }
    }

    pub fn negated(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    /// Coefficients sum to zero, i.e. the form is a combination of
    /// differences.
    pub fn is_difference_form(&self) -> bool {
        self.coeffs.iter().sum::<i64>() == 0
    }

    /// Largest-index variable with a nonzero coefficient. This is the
    /// variable of the leading term in the canonical monomial order.
    pub fn leading_variable(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).expect("nonzero")
    }

    pub fn to_poly(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.coeffs.len());
        MultiPoly::from_terms(
            nvars,
            self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(
                |(i, &c)| (Monomial::var(nvars, i), coeff_int(c)),
            ),
        )
    }

    /// `1 + self`, a factor of a total Chern class.
    pub fn one_plus(&self, nvars: usize) -> MultiPoly {
        &MultiPoly::one(nvars) + &self.to_poly(nvars)
    }

    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.coeffs.len());
        let mut total = Coeff::zero();
        for (c, x) in self.coeffs.iter().zip(point) {
            if *c != 0 {
                total += coeff_int(*c) * x;
            }
        }
        total
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_poly(self.coeffs.len()))
    }
}

/// Substitution target for one variable: a rational-coefficient linear form
/// plus a constant, over the output ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineForm {
    pub coeffs: Vec<Coeff>,
    pub constant: Coeff,
}

impl AffineForm {
    pub fn zero(out_nvars: usize) -> Self {
        AffineForm {
            coeffs: vec![Coeff::zero(); out_nvars],
            constant: Coeff::zero(),
        }
    }

    pub fn constant(out_nvars: usize, c: Coeff) -> Self {
        AffineForm {
            coeffs: vec![Coeff::zero(); out_nvars],
            constant: c,
        }
    }

    /// The output variable `t_i` (one-based).
    pub fn variable(out_nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= out_nvars);
        let mut a = Self::zero(out_nvars);
        a.coeffs[i - 1] = Coeff::one();
        a
    }

    pub fn from_linear(form: &LinearForm, out_nvars: usize) -> Self {
        assert!(out_nvars >= form.nvars());
        let mut a = Self::zero(out_nvars);
        for (i, &c) in form.coefficients().iter().enumerate() {
            a.coeffs[i] = coeff_int(c);
        }
        a
    }

    pub fn plus_constant(mut self, c: Coeff) -> Self {
        self.constant += c;
        self
    }

    fn to_poly(&self, nvars: usize) -> MultiPoly {
        let mut p = MultiPoly::constant(nvars, self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(Monomial::var(nvars, i), c.clone());
            }
        }
        p
    }
}

impl MultiPoly {
    /// Identity substitution map for a ring.
    pub fn identity_assignment(nvars: usize) -> Vec<AffineForm> {
        (1..=nvars).map(|i| AffineForm::variable(nvars, i)).collect()
    }

    /// Compose with an affine assignment, one target per variable. The
    /// output ring size is `out_nvars` and may differ from the input ring.
    pub fn substitute(
        &self,
        targets: &[AffineForm],
        out_nvars: usize,
    ) -> Result<MultiPoly, PolyError> {
        if targets.len() != self.nvars() {
            return Err(PolyError::Invalid(format!(
                "assignment covers {} variables, polynomial has {}",
                targets.len(),
                self.nvars()
            )));
        }
        for t in targets {
            if t.coeffs.len() != out_nvars {
                return Err(PolyError::Invalid(
                    "assignment target has wrong variable count".into(),
                ));
            }
        }
        // Work in a ring with the output variables first and one spare slot
        // per input variable, then eliminate the spare slots one at a time
        // by Horner evaluation. Targets only mention output variables, so
        // sequential elimination equals simultaneous substitution, and each
        // pass is linear in the current polynomial size.
        let wide = out_nvars + self.nvars();
        let mut work = MultiPoly::zero(wide);
        for (m, c) in self.terms() {
            let mut e = vec![0u16; wide];
            e[out_nvars..].copy_from_slice(m.exponents());
            work.add_term(Monomial::from_exponents(e), c.clone());
        }
        for (i, target) in targets.iter().enumerate() {
            let slot = out_nvars + i;
            let target_poly = target.to_poly(wide);
            let mut parts = work.coefficients_in_var(slot);
            let mut acc = parts.pop().unwrap_or_else(|| MultiPoly::zero(wide));
            while let Some(lower) = parts.pop() {
                acc = acc.try_mul(&target_poly)?.try_add(&lower)?;
            }
            work = acc;
        }
        Ok(work.shrink_vars(out_nvars))
    }

    /// Substitute `t_j <- t_i` (one-based), staying in the same ring.
    /// This is reduction modulo the ideal `(t_j - t_i)`.
    pub fn merge_vars(&self, j: usize, i: usize) -> MultiPoly {
        assert!(i != j && i >= 1 && j >= 1 && i <= self.nvars() && j <= self.nvars());
        let mut out = MultiPoly::zero(self.nvars());
        for (m, c) in self.terms() {
            let e = m.exponents();
            if e[j - 1] == 0 {
                out.add_term(m.clone(), c.clone());
            } else {
                let mut exps = e.to_vec();
                exps[i - 1] += exps[j - 1];
                exps[j - 1] = 0;
                out.add_term(Monomial::from_exponents(exps), c.clone());
            }
        }
        out
    }
}
