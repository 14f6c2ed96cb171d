//! Constructors for the canonical matrices: the general/special skew
//! bidiagonal form, the bidiagonal blocks P_n (even) and R_n (odd), and the
//! 4-diagonal nilpotent block Q_{4s}.

use crate::combinatorics::beta;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::{rat_sqrt_lift, GaussRat, Radical, Sign};

/// Superdiagonal data `a_1 .. a_{n-1}` of a skew-symmetric bidiagonal
/// matrix: `a_k` sits at (k, k+1) and `-a_k` at (k+1, k), 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BidiagonalSpec {
    pub superdiagonal: Vec<Radical>,
}

impl BidiagonalSpec {
    pub fn new(superdiagonal: Vec<Radical>) -> Self {
        BidiagonalSpec { superdiagonal }
    }

    pub fn size(&self) -> usize {
        self.superdiagonal.len() + 1
    }

    pub fn matrix(&self) -> Matrix<Radical> {
        bidiagonal_skew_from(&self.superdiagonal)
    }

    /// Special: every entry nonzero and the even-indexed entries equal 1.
    pub fn is_special(&self) -> bool {
        self.superdiagonal.iter().enumerate().all(|(idx, a)| {
            let k = idx + 1;
            if k % 2 == 0 {
                *a == Radical::one()
            } else {
                !a.is_zero()
            }
        })
    }
}

/// The skew-symmetric bidiagonal matrix over any ring with the given
/// superdiagonal entries.
pub fn bidiagonal_skew_from<T: Ring>(superdiagonal: &[T]) -> Matrix<T> {
    let n = superdiagonal.len() + 1;
    Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            superdiagonal[i].clone()
        } else if i == j + 1 {
            superdiagonal[j].neg()
        } else {
            T::zero()
        }
    })
}

pub fn bidiagonal_skew(spec: &BidiagonalSpec) -> Matrix<Radical> {
    spec.matrix()
}

pub fn is_special(spec: &BidiagonalSpec) -> bool {
    spec.is_special()
}

/// Superdiagonal of P_n: alpha_k = sqrt(beta_k) on the chosen branches.
/// The default all-plus branch makes the middle entry equal to s*i.
pub fn build_p_spec(n: usize, signs: Option<&[Sign]>) -> Result<BidiagonalSpec> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    if let Some(signs) = signs {
        if signs.len() != n - 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} signs, got {}",
                n - 1,
                signs.len()
            )));
        }
    }
    let entries = (1..n)
        .map(|k| {
            let branch = signs.map_or(Sign::Plus, |s| s[k - 1]);
            rat_sqrt_lift(&beta(n, k), branch)
        })
        .collect();
    Ok(BidiagonalSpec::new(entries))
}

/// The even canonical block P_n with elementary divisors
/// (t-1)^{n/2}, (t+1)^{n/2}.
pub fn build_p(n: usize) -> Result<Matrix<Radical>> {
    Ok(build_p_spec(n, None)?.matrix())
}

pub fn build_p_signed(n: usize, signs: &[Sign]) -> Result<Matrix<Radical>> {
    Ok(build_p_spec(n, Some(signs))?.matrix())
}

/// Superdiagonal of R_n, n = 2s+1: the interleaved sequence
/// sqrt(s), i, sqrt(s-1), i*sqrt(2), ..., 1, i*sqrt(s), generated by
/// `a_{2j-1} = sqrt(s-j+1)` and `a_{2j} = i*sqrt(j)` for j = 1..s.
pub fn build_r_spec(n: usize, signs: Option<&[Sign]>) -> Result<BidiagonalSpec> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenSize(n));
    }
    let s = (n - 1) / 2;
    if let Some(signs) = signs {
        if signs.len() != n - 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} signs, got {}",
                n - 1,
                signs.len()
            )));
        }
    }
    let mut entries = Vec::with_capacity(n - 1);
    for j in 1..=s {
        let odd = Radical::sqrt_int((s - j + 1) as u64);
        let even = Radical::i().mul(&Radical::sqrt_int(j as u64));
        entries.push(apply_sign(odd, signs.map(|v| v[2 * j - 2])));
        entries.push(apply_sign(even, signs.map(|v| v[2 * j - 1])));
    }
    Ok(BidiagonalSpec::new(entries))
}

fn apply_sign(value: Radical, sign: Option<Sign>) -> Radical {
    match sign {
        Some(Sign::Minus) => value.neg(),
        _ => value,
    }
}

/// The odd canonical block R_n, nilpotent with the single elementary
/// divisor t^n.
pub fn build_r(n: usize) -> Result<Matrix<Radical>> {
    Ok(build_r_spec(n, None)?.matrix())
}

pub fn build_r_signed(n: usize, signs: &[Sign]) -> Result<Matrix<Radical>> {
    Ok(build_r_spec(n, Some(signs))?.matrix())
}

/// The nilpotent parts X, X1, X2 of Q_{4s} = X - X', where X = X1 + X2 and
/// all entries lie in {0, +-1, +-i}.
pub fn build_q_parts(m: usize) -> Result<(Matrix<GaussRat>, Matrix<GaussRat>, Matrix<GaussRat>)> {
    if m == 0 || !m.is_multiple_of(4) {
        return Err(Error::BadSize(m));
    }
    let s = m / 4;
    let i_unit = GaussRat::i();
    let one = GaussRat::one();
    let mut x1 = Matrix::zero(m, m);
    // X1 = sum over p=1..s of (i*E_{2p-1,2p+1} - E_{2p-1,2p}), 1-based
    for p in 1..=s {
        x1.set(2 * p - 2, 2 * p, i_unit.clone());
        x1.set(2 * p - 2, 2 * p - 1, one.neg());
    }
    // X2 = sum over p=s+1..2s of (i*E_{2p,2p-2} + E_{2p,2p-1})
    let mut x2 = Matrix::zero(m, m);
    for p in (s + 1)..=(2 * s) {
        x2.set(2 * p - 1, 2 * p - 3, i_unit.clone());
        x2.set(2 * p - 1, 2 * p - 2, one.clone());
    }
    let x = x1.add(&x2)?;
    Ok((x, x1, x2))
}

/// The 4-diagonal skew-symmetric block Q_{4s} with elementary divisors
/// t^{2s}, t^{2s}.
pub fn build_q(m: usize) -> Result<Matrix<GaussRat>> {
    let (x, _, _) = build_q_parts(m)?;
    x.sub(&x.transpose())
}
