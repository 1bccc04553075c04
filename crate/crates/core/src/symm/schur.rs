//! Schur polynomials as bialternants and Schur-basis expansion by leading
//! term subtraction.

use super::Partition;
use crate::error::SymmError;
use crate::poly::{coeff_int, Coeff, LinearForm, Monomial, MultiPoly};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The Schur polynomial `S_I` in the chosen variables of an ambient ring.
///
/// Computed as the bialternant: the determinant of the powers
/// `x_r^(I_c + q - c)` divided by the Vandermonde product, with
/// `x_r = t_{vars[r]}` or its negation when `negate` is set. The division
/// is exact trial division and always clears.
///
/// `vars` are zero-based indices into a ring with `nvars` variables.
pub fn schur_polynomial(
    partition: &Partition,
    nvars: usize,
    vars: &[usize],
    negate: bool,
) -> Result<MultiPoly, SymmError> {
    let q = vars.len();
    if partition.len() > q {
        return Err(SymmError::PartitionTooLong {
            len: partition.len(),
            alphabet: q,
        });
    }
    if q == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    // Exponents of the alternant columns, strictly decreasing.
    let exps: Vec<usize> = (0..q)
        .map(|c| partition.part(c) as usize + (q - 1 - c))
        .collect();
    let mut det = MultiPoly::zero(nvars);
    permutations(q, |perm, parity| {
        let mut mono = vec![0u16; nvars];
        let mut sign = parity;
        for (r, &c) in perm.iter().enumerate() {
            let e = exps[c];
            mono[vars[r]] += e as u16;
            if negate && e % 2 == 1 {
                sign = -sign;
            }
        }
        det.add_term(Monomial::from_exponents(mono), coeff_int(sign as i64));
    });
    if det.is_zero() {
        return Ok(MultiPoly::zero(nvars));
    }
    // Divide by the Vandermonde: for negated alphabets x_r - x_s flips to
    // t_s - t_r.
    let mut out = det;
    for r in 0..q {
        for s in (r + 1)..q {
            let form = if negate {
                LinearForm::difference(nvars, vars[s] + 1, vars[r] + 1)
            } else {
                LinearForm::difference(nvars, vars[r] + 1, vars[s] + 1)
            };
            out = out.exact_div_linear(&form).map_err(SymmError::Poly)?;
        }
    }
    Ok(out)
}

fn permutations(q: usize, mut visit: impl FnMut(&[usize], i8)) {
    // Heap's algorithm, tracking parity.
    let mut perm: Vec<usize> = (0..q).collect();
    let mut c = vec![0usize; q];
    let mut parity = 1i8;
    visit(&perm, parity);
    let mut i = 0;
    while i < q {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            parity = -parity;
            visit(&perm, parity);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Coefficients of a Schur-basis expansion: one alphabet, or a pair.
///
/// Reconstructing `sum coef * S_I(alphabet0) [* S_J(alphabet1)]` reproduces
/// the source polynomial exactly; `negate` flags record whether an alphabet
/// enters negated (as in `S_I(-t1,-t2)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurTable {
    pub nvars: usize,
    /// Zero-based variable indices per alphabet.
    pub alphabets: Vec<Vec<usize>>,
    pub negate: Vec<bool>,
    pub entries: BTreeMap<(Partition, Partition), Coeff>,
}

impl SchurTable {
    pub fn coefficient(&self, i: &Partition, j: &Partition) -> Coeff {
        self.entries
            .get(&(i.clone(), j.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn reconstruct(&self) -> Result<MultiPoly, SymmError> {
        let mut out = MultiPoly::zero(self.nvars);
        for ((i, j), c) in &self.entries {
            let mut term = schur_polynomial(i, self.nvars, &self.alphabets[0], self.negate[0])?;
            if self.alphabets.len() > 1 {
                let sj = schur_polynomial(j, self.nvars, &self.alphabets[1], self.negate[1])?;
                term = term.try_mul(&sj).map_err(SymmError::Poly)?;
            } else if !j.is_empty() {
                return Err(SymmError::Invalid(
                    "pair entry in a one-alphabet table".into(),
                ));
            }
            out = out.try_add(&term.scale(c)).map_err(SymmError::Poly)?;
        }
        Ok(out)
    }

    pub fn has_negative_entry(&self) -> bool {
        use num_traits::Signed;
        self.entries.values().any(|c| c.is_negative())
    }
}

/// Largest monomial under the lexicographic order that ranks the listed
/// variables first (earlier in `order` = more significant).
fn leading_monomial<'a>(p: &'a MultiPoly, order: &[usize]) -> (&'a Monomial, &'a Coeff) {
    p.terms()
        .max_by(|(a, _), (b, _)| {
            for &v in order {
                match a.exponents()[v].cmp(&b.exponents()[v]) {
                    std::cmp::Ordering::Equal => {}
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
        .expect("nonzero polynomial")
}

fn partition_from_exponents(m: &Monomial, vars: &[usize]) -> Result<Partition, SymmError> {
    let exps: Vec<u32> = vars.iter().map(|&v| m.exponents()[v] as u32).collect();
    Partition::new(exps).map_err(|_| {
        SymmError::Invalid("leading exponents not dominant; input not symmetric".into())
    })
}

/// Expand a symmetric polynomial in the Schur basis of one alphabet by
/// repeated subtraction of the leading term's Schur polynomial.
pub fn expand_schur(
    p: &MultiPoly,
    nvars: usize,
    vars: &[usize],
) -> Result<SchurTable, SymmError> {
    if !p.support_within(vars) {
        return Err(SymmError::SupportOutsideAlphabet);
    }
    if !p.is_symmetric_in(vars) {
        return Err(SymmError::NotSymmetric { group: 0 });
    }
    let mut rest = p.clone();
    let mut entries = BTreeMap::new();
    while !rest.is_zero() {
        let (mono, coef) = leading_monomial(&rest, vars);
        let i = partition_from_exponents(mono, vars)?;
        let coef = coef.clone();
        let s = schur_polynomial(&i, nvars, vars, false)?;
        rest = rest.try_sub(&s.scale(&coef)).map_err(SymmError::Poly)?;
        entries.insert((i, Partition::empty()), coef);
    }
    Ok(SchurTable {
        nvars,
        alphabets: vec![vars.to_vec()],
        negate: vec![false],
        entries,
    })
}

/// Expand a polynomial symmetric in two separate alphabets as
/// `sum a_(I,J) S_I(x) * S_J(v)`, where the first alphabet is negated when
/// `negate_first` is set (the `S_I(-t1,..) * S_J(t..)` convention).
pub fn expand_two_alphabets(
    p: &MultiPoly,
    nvars: usize,
    xvars: &[usize],
    vvars: &[usize],
    negate_first: bool,
) -> Result<SchurTable, SymmError> {
    let all: Vec<usize> = xvars.iter().chain(vvars).copied().collect();
    if !p.support_within(&all) {
        return Err(SymmError::SupportOutsideAlphabet);
    }
    // Work on the un-negated copy, then record the convention in the table.
    let mut q = p.clone();
    if negate_first {
        for (i, &v) in xvars.iter().enumerate() {
            let _ = i;
            q = negate_variable(&q, v);
        }
    }
    if !q.is_symmetric_in(xvars) {
        return Err(SymmError::NotSymmetric { group: 1 });
    }
    if !q.is_symmetric_in(vvars) {
        return Err(SymmError::NotSymmetric { group: 2 });
    }
    let mut entries = BTreeMap::new();
    let mut rest = q;
    while !rest.is_zero() {
        let (mono, coef) = leading_monomial(&rest, &all);
        let i = partition_from_exponents(mono, xvars)?;
        let j = partition_from_exponents(mono, vvars)?;
        let coef = coef.clone();
        let si = schur_polynomial(&i, nvars, xvars, false)?;
        let sj = schur_polynomial(&j, nvars, vvars, false)?;
        let prod = si.try_mul(&sj).map_err(SymmError::Poly)?;
        rest = rest.try_sub(&prod.scale(&coef)).map_err(SymmError::Poly)?;
        entries.insert((i, j), coef);
    }
    Ok(SchurTable {
        nvars,
        alphabets: vec![xvars.to_vec(), vvars.to_vec()],
        negate: vec![negate_first, false],
        entries,
    })
}

fn negate_variable(p: &MultiPoly, v: usize) -> MultiPoly {
    MultiPoly::from_terms(
        p.nvars(),
        p.terms().map(|(m, c)| {
            let flip = m.exponents()[v] % 2 == 1;
            (m.clone(), if flip { -c.clone() } else { c.clone() })
        }),
    )
}

// JSON form:
// {"alphabets": [[1,2],[3,4]], "entries": [{"I": [2,1], "J": [1], "coef": "1"}]}
// with one-based variable indices and partitions as decreasing lists.

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SchurTableJson {
    pub alphabets: Vec<Vec<usize>>,
    pub entries: Vec<SchurEntryJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SchurEntryJson {
    #[serde(rename = "I")]
    pub i: Vec<u32>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<u32>>,
    pub coef: String,
}

impl SchurTable {
    pub fn to_json(&self) -> SchurTableJson {
        SchurTableJson {
            alphabets: self
                .alphabets
                .iter()
                .map(|a| a.iter().map(|&v| v + 1).collect())
                .collect(),
            entries: self
                .entries
                .iter()
                .map(|((i, j), c)| SchurEntryJson {
                    i: i.parts().to_vec(),
                    j: if self.alphabets.len() > 1 {
                        Some(j.parts().to_vec())
                    } else {
                        None
                    },
                    coef: crate::poly::coeff_to_string(c),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serialize")
    }
}
