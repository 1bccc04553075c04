//! Partitions, Schur polynomials through the bialternant determinant, and
//! expansion of symmetric polynomials in Schur bases over one or two
//! alphabets.

mod schur;

pub use schur::{expand_schur, expand_two_alphabets, schur_polynomial, SchurTable};


use crate::error::SymmError;
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;

/// A partition: weakly decreasing nonnegative integers, trailing zeros
/// trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymmError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(SymmError::Invalid(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_trimmed(parts))
    }

    fn from_trimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part at `index`, zero beyond the length.
    pub fn part(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weight `|I|`, i.e. the sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) as usize <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Parse `"2,1"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self, SymmError> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse()).collect();
        let parts = parts.map_err(|e| SymmError::Invalid(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), &self.0).cmp(&(other.weight(), &other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with at most `rows` parts, each at most `cols`, ordered
/// by weight and then by parts descending (so `(2)` precedes `(1,1)`).
pub fn partitions_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, cols: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_trimmed(current.clone()));
        if current.len() == rows {
            return;
        }
        let max = current.last().copied().unwrap_or(cols);
        for p in (1..=max).rev() {
            current.push(p);
            rec(rows, cols, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    rec(rows, cols as u32, &mut current, &mut out);
    out.sort_by(|a, b| (a.weight(), {
        let mut v = a.parts().to_vec();
        v.iter_mut().for_each(|x| *x = u32::MAX - *x);
        v
    })
    .cmp(&(b.weight(), {
        let mut v = b.parts().to_vec();
        v.iter_mut().for_each(|x| *x = u32::MAX - *x);
        v
    })));
    out
}

/// The monomial symmetric polynomial `m_lambda` in `nslots` variables:
/// the sum of all distinct permutations of the exponent vector.
pub fn monomial_symmetric(
    nslots: usize,
    lambda: &Partition,
) -> Result<crate::poly::MultiPoly, SymmError> {
    use crate::poly::{Monomial, MultiPoly};
    if lambda.len() > nslots {
        return Err(SymmError::PartitionTooLong {
            len: lambda.len(),
            alphabet: nslots,
        });
    }
    let mut exps: Vec<u16> = lambda.parts().iter().map(|&p| p as u16).collect();
    exps.resize(nslots, 0);
    exps.sort_unstable();
    let mut out = MultiPoly::zero(nslots);
    loop {
        out = out
            .try_add(&MultiPoly::monomial(
                nslots,
                Monomial::from_exponents(exps.clone()),
                crate::poly::Coeff::from_integer(1.into()),
            ))
            .expect("same ring");
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(arr: &mut [u16]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Degree of the Pluecker embedding of `Grass_m(C^n)`: the factorial of
/// `m(n-m)` divided by the product of the hook lengths of the full
/// `m x (n-m)` rectangle.
pub fn hook_degree(m: usize, n: usize) -> BigInt {
    assert!(m <= n, "need m <= n");
    let rows = m;
    let cols = n - m;
    let cells = rows * cols;
    let mut numer = BigInt::one();
    for k in 1..=cells {
        numer *= BigInt::from(k);
    }
    let mut denom = BigInt::one();
    for i in 0..rows {
        for j in 0..cols {
            let hook = (rows - i - 1) + (cols - j - 1) + 1;
            denom *= BigInt::from(hook);
        }
    }
    numer / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_enumeration_small() {
        let ps = partitions_in_rectangle(1, 1);
        assert_eq!(ps, vec![Partition::empty(), Partition::new(vec![1]).unwrap()]);

        let ps = partitions_in_rectangle(2, 2);
        let expect: Vec<Partition> = [vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]
            .into_iter()
            .map(|v| Partition::new(v).unwrap())
            .collect();
        assert_eq!(ps, expect);
    }

    #[test]
    fn rectangle_count_is_binomial() {
        // Brute enumeration oracle: lattice paths, C(rows+cols, rows).
        assert_eq!(partitions_in_rectangle(3, 4).len(), 35);
        assert_eq!(partitions_in_rectangle(2, 4).len(), 15);
        assert_eq!(partitions_in_rectangle(4, 4).len(), 70);
    }

    #[test]
    fn hook_degrees() {
        assert_eq!(hook_degree(1, 2), BigInt::from(1));
        assert_eq!(hook_degree(2, 4), BigInt::from(2));
        assert_eq!(hook_degree(2, 5), BigInt::from(5));
        assert_eq!(hook_degree(3, 6), BigInt::from(42));
        assert_eq!(hook_degree(3, 7), BigInt::from(462));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(
            Partition::new(vec![2, 1, 0, 0]).unwrap(),
            Partition::new(vec![2, 1]).unwrap()
        );
    }

    #[test]
    fn conjugate_is_involutive() {
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 1, 1]).unwrap());
        let q = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(q.conjugate(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("2,1").unwrap().to_string(), "(2,1)");
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
    }
}
