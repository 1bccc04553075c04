//! Exact trial division by linear forms. This is the whole cancellation
//! engine: every denominator in scope is a product of character
//! differences, so nothing more general is needed.

use super::{coeff_int, LinearForm, MultiPoly};
use crate::error::PolyError;

impl MultiPoly {
    /// Exact quotient `self / form`, or `NotDivisible`.
    ///
    /// Synthetic division in the form's leading variable `t_v`: writing
    /// `self = sum_k p_k t_v^k` and `form = c t_v + g`, the quotient
    /// coefficients fall out top-down and the final remainder equals the
    /// substitution residue `self(t_v <- -g/c)`, which must vanish.
    pub fn exact_div_linear(&self, form: &LinearForm) -> Result<MultiPoly, PolyError> {
        if form.nvars() != self.nvars() {
            return Err(PolyError::ArityMismatch(self.nvars(), form.nvars()));
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero(self.nvars()));
        }
        let v = form.leading_variable();
        let c = coeff_int(form.coefficients()[v]);
        let mut g_coeffs = form.coefficients().to_vec();
        g_coeffs[v] = 0;
        let g = if g_coeffs.iter().all(|&x| x == 0) {
            MultiPoly::zero(self.nvars())
        } else {
            LinearForm::new(g_coeffs).unwrap().to_poly(self.nvars())
        };

        let parts = self.coefficients_in_var(v);
        let top = parts.len() - 1;
        if top == 0 {
            return Err(PolyError::NotDivisible {
                form: form.to_string(),
            });
        }
        let mut quotient = vec![MultiPoly::zero(self.nvars()); top];
        let mut carry = parts[top].clone();
        for k in (1..=top).rev() {
            let q = carry.scale(&c.recip());
            carry = &parts[k - 1] - &(&q * &g);
            quotient[k - 1] = q;
        }
        if !carry.is_zero() {
            return Err(PolyError::NotDivisible {
                form: form.to_string(),
            });
        }
        Ok(MultiPoly::from_coefficients_in_var(
            self.nvars(),
            v,
            &quotient,
        ))
    }
}
