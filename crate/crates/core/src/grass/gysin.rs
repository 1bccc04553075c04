//! Closed-form Gysin push-forward of products of Schur classes of the
//! quotient and tautological bundles.
//!
//! For partitions `J` (length at most `n-m`) and `K` (length at most `m`)
//! the integral of `S_J(Q) * S_K(R)` over `Grass_m(C^n)` is, up to sign, a
//! single Schur polynomial in all `n` characters, or zero. The index
//! sequence is `(j_1 - m, ..., j_{n-m} - m, k_1, ..., k_m)`; when it is
//! weakly decreasing (which the inequality `j_{n-m} - m >= k_1`
//! guarantees) the sign is `+1`, otherwise the alternant exponents are
//! sorted with the permutation sign, and a repeated exponent gives zero.

use super::{fixed_points, tangent_weights};
use crate::error::GrassError;
use crate::poly::{sum_fractions, FractionTerm, MultiPoly};
use crate::symm::{schur_polynomial, Partition};

/// Result of the push-forward: zero, or a sign and a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GysinValue {
    Zero,
    Signed { sign: i8, partition: Partition },
}

impl GysinValue {
    /// The represented polynomial `sign * S_I(t_1..t_n)`.
    pub fn to_poly(&self, n: usize) -> MultiPoly {
        match self {
            GysinValue::Zero => MultiPoly::zero(n),
            GysinValue::Signed { sign, partition } => {
                let vars: Vec<usize> = (0..n).collect();
                let s = schur_polynomial(partition, n, &vars, false)
                    .expect("partition length bounded by n");
                if *sign < 0 {
                    s.neg()
                } else {
                    s
                }
            }
        }
    }
}

pub fn gysin_schur(
    j: &Partition,
    k: &Partition,
    m: usize,
    n: usize,
) -> Result<GysinValue, GrassError> {
    if m == 0 || m >= n {
        return Err(GrassError::BadSizes { m, n });
    }
    if j.len() > n - m {
        return Err(GrassError::Invalid(format!(
            "partition {j} too long for the quotient bundle of rank {}",
            n - m
        )));
    }
    if k.len() > m {
        return Err(GrassError::Invalid(format!(
            "partition {k} too long for the tautological bundle of rank {m}"
        )));
    }
    // Raw index sequence, then alternant exponents eps_r = i_r + (n - r).
    let mut raw: Vec<i64> = Vec::with_capacity(n);
    for r in 0..(n - m) {
        raw.push(j.part(r) as i64 - m as i64);
    }
    for r in 0..m {
        raw.push(k.part(r) as i64);
    }
    let eps: Vec<i64> = raw
        .iter()
        .enumerate()
        .map(|(r, &i)| i + (n - 1 - r) as i64)
        .collect();
    // Any negative exponent kills the alternant column outright.
    if eps.iter().any(|&e| e < 0) {
        return Ok(GysinValue::Zero);
    }
    // Sort strictly decreasing, tracking the permutation sign.
    let mut indexed: Vec<(i64, usize)> = eps.iter().copied().zip(0..n).collect();
    for w in 0..indexed.len() {
        for v in (w + 1)..indexed.len() {
            if indexed[w].0 == indexed[v].0 {
                return Ok(GysinValue::Zero);
            }
        }
        let _ = w;
    }
    let mut sign = 1i8;
    // Insertion sort, descending; each swap flips the sign.
    for w in 1..indexed.len() {
        let mut v = w;
        while v > 0 && indexed[v - 1].0 < indexed[v].0 {
            indexed.swap(v - 1, v);
            sign = -sign;
            v -= 1;
        }
    }
    let parts: Vec<u32> = indexed
        .iter()
        .enumerate()
        .map(|(r, &(e, _))| {
            let p = e - (n - 1 - r) as i64;
            debug_assert!(p >= 0);
            p as u32
        })
        .collect();
    let partition = Partition::new(parts)
        .map_err(|e| GrassError::Invalid(format!("straightening failed: {e}")))?;
    Ok(GysinValue::Signed { sign, partition })
}

/// Direct localization evaluation of the same integral, the oracle for
/// [`gysin_schur`]: at each fixed point the quotient bundle has the
/// complementary characters as roots and the tautological bundle the
/// chosen ones.
pub fn gysin_schur_poly(
    j: &Partition,
    k: &Partition,
    m: usize,
    n: usize,
) -> Result<MultiPoly, GrassError> {
    let mut terms = Vec::new();
    for p in fixed_points(m, n)? {
        let q_vars: Vec<usize> = p.complement().iter().map(|&i| i - 1).collect();
        let r_vars: Vec<usize> = p.subset().iter().map(|&i| i - 1).collect();
        let sj = schur_polynomial(j, n, &q_vars, false)?;
        let sk = schur_polynomial(k, n, &r_vars, false)?;
        terms.push(FractionTerm::new(&sj * &sk, tangent_weights(&p)));
    }
    sum_fractions(&terms, None).map_err(GrassError::Poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn line_bundle_degree_one() {
        let v = gysin_schur(&part(&[1]), &Partition::empty(), 1, 2).unwrap();
        assert_eq!(
            v,
            GysinValue::Signed {
                sign: 1,
                partition: Partition::empty()
            }
        );
        assert!(v.to_poly(2).is_one());
    }

    #[test]
    fn top_cell_integrates_to_one() {
        for (m, n) in [(1, 2), (2, 4), (2, 5)] {
            let j = part(&vec![m as u32; n - m]);
            let v = gysin_schur(&j, &Partition::empty(), m, n).unwrap();
            assert!(v.to_poly(n).is_one(), "top cell on Grass_{m}(C^{n})");
            assert_eq!(gysin_schur_poly(&j, &Partition::empty(), m, n).unwrap(), v.to_poly(n));
        }
    }

    #[test]
    fn first_chern_class_of_quotient_on_grass_2_4() {
        let v = gysin_schur(&part(&[3, 2]), &Partition::empty(), 2, 4).unwrap();
        assert_eq!(
            v,
            GysinValue::Signed {
                sign: 1,
                partition: part(&[1])
            }
        );
        assert_eq!(v.to_poly(4), parse_poly("t1+t2+t3+t4", 4).unwrap());
    }

    #[test]
    fn straightening_signs_on_the_line() {
        // j=0, k=1: the integral is -1.
        let v = gysin_schur(&Partition::empty(), &part(&[1]), 1, 2).unwrap();
        assert_eq!(
            v,
            GysinValue::Signed {
                sign: -1,
                partition: Partition::empty()
            }
        );
        // j=0, k=2: -S_1.
        let v = gysin_schur(&Partition::empty(), &part(&[2]), 1, 2).unwrap();
        assert_eq!(
            v,
            GysinValue::Signed {
                sign: -1,
                partition: part(&[1])
            }
        );
        // j=1, k=1: collision, zero.
        let v = gysin_schur(&part(&[1]), &part(&[1]), 1, 2).unwrap();
        assert_eq!(v, GysinValue::Zero);
    }

    #[test]
    fn oracle_agreement_low_weight() {
        // All pairs with |J| + |K| <= 4 on Grass_2(C^4).
        let (m, n) = (2usize, 4usize);
        let js = crate::symm::partitions_in_rectangle(n - m, 4);
        let ks = crate::symm::partitions_in_rectangle(m, 4);
        for j in &js {
            for k in &ks {
                if j.weight() + k.weight() > 4 {
                    continue;
                }
                let closed = gysin_schur(j, k, m, n).unwrap().to_poly(n);
                let direct = gysin_schur_poly(j, k, m, n).unwrap();
                assert_eq!(closed, direct, "J={j}, K={k}");
            }
        }
    }
}
