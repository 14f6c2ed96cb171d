//! Elementary-divisor extraction over Q(i): root finding for monic
//! polynomials, Jordan partitions from rank sequences, and the pairing
//! condition that characterizes similarity to a skew-symmetric matrix.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::gaussint::GaussInt;
use crate::scalar::{GaussRat, Rat};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// One elementary divisor record: `count` Jordan blocks of the given size at
/// the given eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDivisor {
    pub eigenvalue: GaussRat,
    pub size: usize,
    pub count: usize,
}

/// All roots of a monic polynomial that lie in Q(i), with multiplicities,
/// plus the root-free remainder factor.
///
/// Candidates are enumerated as Gaussian-integer divisors of the constant
/// term of the monic integral rescaling F(u) = d^n f(u/d): any root of f in
/// Q(i) has the form (Gaussian integer dividing F(0)) / d.
pub fn gaussian_roots(f: &Poly<GaussRat>) -> (Vec<(GaussRat, usize)>, Poly<GaussRat>) {
    assert!(f.is_monic(), "gaussian_roots expects a monic polynomial");
    let mut roots = Vec::new();
    let mut rem = f.clone();

    // strip roots at zero first
    let mut zero_mult = 0;
    while rem.degree().is_some_and(|d| d >= 1) && rem.coeff(0).is_zero() {
        rem = rem.deflate(&GaussRat::zero()).expect("t divides");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((GaussRat::zero(), zero_mult));
    }
    if rem.degree().is_none_or(|d| d == 0) {
        return (roots, rem);
    }

    // common denominator of all coefficients
    let mut d = BigInt::one();
    for c in rem.coeffs() {
        d = num_integer::lcm(d.clone(), c.re.denom().clone());
        d = num_integer::lcm(d, c.im.denom().clone());
    }
    let n = rem.degree().unwrap();
    // F(0) = d^n * f(0) is a nonzero Gaussian integer
    let c0 = rem.coeff(0).mul(&GaussRat::from_rat(Rat::new(d.pow(n as u32), BigInt::one())));
    let f0 = GaussInt::new(c0.re.numer().clone(), c0.im.numer().clone());
    debug_assert!(c0.re.is_integer() && c0.im.is_integer());

    let mut candidates: Vec<GaussRat> = Vec::new();
    for base in f0.divisors_up_to_units() {
        for unit in GaussInt::units() {
            let z = base.mul(&unit);
            let re = Rat::new(z.re, d.clone());
            let im = Rat::new(z.im, d.clone());
            candidates.push(GaussRat::new(re, im));
        }
    }
    candidates.sort_by_key(scalar_sort_key);
    candidates.dedup();

    for lambda in candidates {
        let mut mult = 0;
        while rem.eval(&lambda).is_zero() {
            rem = rem.deflate(&lambda).expect("root divides");
            mult += 1;
        }
        if mult > 0 {
            roots.push((lambda, mult));
        }
        if rem.degree() == Some(0) {
            break;
        }
    }
    roots.sort_by_key(|a| scalar_sort_key(&a.0));
    (roots, rem)
}

/// Deterministic ordering key for Gaussian rationals: (re, im).
pub fn scalar_sort_key(z: &GaussRat) -> (Rat, Rat) {
    (z.re.clone(), z.im.clone())
}

/// Ranks of (A - lambda I)^k for k = 0, 1, ... until stabilization. The
/// stabilized value is appended, so the last two entries are always equal.
pub fn rank_sequence(a: &Matrix<GaussRat>, lambda: &GaussRat) -> Result<Vec<usize>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("rank_sequence of non-square matrix".into()));
    }
    let n = a.rows();
    let shifted = a.sub(&Matrix::identity(n).scalar_mul(lambda))?;
    let mut seq = vec![n];
    let mut power = Matrix::identity(n);
    loop {
        power = power.mul(&shifted)?;
        let r = power.rank();
        let prev = *seq.last().unwrap();
        seq.push(r);
        if r == prev {
            break;
        }
    }
    Ok(seq)
}

/// Jordan block sizes at lambda, descending. The number of blocks of size at
/// least k is rank((A - lambda I)^{k-1}) - rank((A - lambda I)^k).
pub fn jordan_at(a: &Matrix<GaussRat>, lambda: &GaussRat) -> Result<Vec<usize>> {
    Ok(partition_from_ranks(&rank_sequence(a, lambda)?))
}

/// The Jordan partition encoded by a stabilized rank sequence.
pub fn partition_from_ranks(seq: &[usize]) -> Vec<usize> {
    let mut partition = Vec::new();
    for k in 1..seq.len() {
        let at_least_k = seq[k - 1] - seq[k];
        let at_least_next = if k + 1 < seq.len() { seq[k] - seq[k + 1] } else { 0 };
        for _ in 0..at_least_k.saturating_sub(at_least_next) {
            partition.push(k);
        }
    }
    partition.sort_unstable_by(|x, y| y.cmp(x));
    partition
}

/// Full elementary-divisor data of a matrix whose eigenvalues all lie in
/// Q(i). Fails with UnsupportedEigenvalues if the characteristic polynomial
/// has a root-free factor of positive degree.
pub fn divisors_of(a: &Matrix<GaussRat>) -> Result<Vec<ElementaryDivisor>> {
    let cp = a.charpoly()?;
    let (roots, rem) = gaussian_roots(&cp);
    if rem.degree().is_some_and(|d| d >= 1) {
        return Err(Error::UnsupportedEigenvalues);
    }
    let mut out = Vec::new();
    for (lambda, _) in roots {
        let partition = jordan_at(a, &lambda)?;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for size in partition {
            *counts.entry(size).or_insert(0) += 1;
        }
        for (size, count) in counts {
            out.push(ElementaryDivisor { eigenvalue: lambda.clone(), size, count });
        }
    }
    Ok(out)
}

/// The pairing condition of skew-symmetric similarity classes: for lambda
/// nonzero the size multisets at lambda and -lambda agree, and every even
/// nilpotent size occurs an even number of times.
pub fn validate_skew_pairing(divisors: &[ElementaryDivisor]) -> bool {
    let mut by_eig: BTreeMap<(Rat, Rat), BTreeMap<usize, usize>> = BTreeMap::new();
    for d in divisors {
        *by_eig
            .entry(scalar_sort_key(&d.eigenvalue))
            .or_default()
            .entry(d.size)
            .or_insert(0) += d.count;
    }
    for d in divisors {
        if d.eigenvalue.is_zero() {
            if d.size % 2 == 0 {
                let count = by_eig[&scalar_sort_key(&d.eigenvalue)][&d.size];
                if !count.is_multiple_of(2) {
                    return false;
                }
            }
        } else {
            let neg = Ring::neg(&d.eigenvalue);
            let at_neg = by_eig.get(&scalar_sort_key(&neg));
            if at_neg != by_eig.get(&scalar_sort_key(&d.eigenvalue)) {
                return false;
            }
        }
    }
    true
}

/// A single Jordan block with the given eigenvalue (1's on the
/// superdiagonal); handy as a similarity reference.
pub fn jordan_block(lambda: &GaussRat, size: usize) -> Matrix<GaussRat> {
    Matrix::from_fn(size, size, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            GaussRat::one()
        } else {
            GaussRat::zero()
        }
    })
}
