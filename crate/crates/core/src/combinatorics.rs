//! The beta coefficients and their product-sum identities, the oriented
//! weight grid with the U_d/V_d nilpotency machinery, and the even/odd
//! squared-bidiagonal splitting.

use crate::blocks::bidiagonal_skew_from;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::Rat;
use num_bigint::BigInt;

/// beta_k = k(n-k) / ((n-2k)^2 - 1) for even n. The denominator cannot
/// vanish: n - 2k = +-1 is impossible for even n.
pub fn beta(n: usize, k: usize) -> Rat {
    assert!(n.is_multiple_of(2) && n >= 2, "beta needs even n");
    let n = n as i64;
    let k = k as i64;
    let denom = (n - 2 * k).pow(2) - 1;
    Rat::from((k * (n - k), denom))
}

/// The full table beta_1 .. beta_{n-1} with its symmetry and midpoint
/// invariants checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTable {
    pub n: usize,
    pub values: Vec<Rat>,
}

impl BetaTable {
    pub fn new(n: usize) -> Self {
        let values: Vec<Rat> = (1..n).map(|k| beta(n, k)).collect();
        let s = n / 2;
        for k in 1..n {
            debug_assert_eq!(values[k - 1], values[n - k - 1], "beta_k = beta_(n-k)");
        }
        debug_assert_eq!(values[s - 1], Rat::from(-((s * s) as i64)), "beta_s = -s^2");
        BetaTable { n, values }
    }

    pub fn get(&self, k: usize) -> &Rat {
        &self.values[k - 1]
    }
}

/// Sum of beta_{i_1} * ... * beta_{i_k} over 1 <= i_1 << i_2 << ... << i_k
/// <= n-1, where << requires a gap of at least 2. Dynamic programming on the
/// largest admitted index.
pub fn ident_lhs(s: usize, k: usize) -> Rat {
    assert!(k >= 1 && k <= s);
    let n = 2 * s;
    let table = BetaTable::new(n);
    // dp[c][j] = sum over c-element chains with all indices <= j
    let mut dp = vec![vec![Rat::zero(); n]; k + 1];
    for j in 0..n {
        dp[0][j] = Rat::one();
    }
    for c in 1..=k {
        for j in 1..n {
            let mut v = dp[c][j - 1].clone();
            let tail = if j >= 2 { dp[c - 1][j - 2].clone() } else if c == 1 { Rat::one() } else { Rat::zero() };
            v = &v + &table.get(j).mul(&tail);
            dp[c][j] = v;
        }
    }
    dp[k][n - 1].clone()
}

/// Binomial coefficient as a rational.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::from(1);
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rat::new(acc, BigInt::from(1))
}

/// The tridiagonal similarity model of P_n: superdiagonal beta_1..beta_{n-1},
/// subdiagonal -1, zero elsewhere.
pub fn build_beta_x(n: usize) -> Matrix<Rat> {
    let table = BetaTable::new(n);
    Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            table.get(i + 1).clone()
        } else if i == j + 1 {
            -Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// Checks ident_lhs(s, k) = (-1)^k C(s, k) for every k, and cross-checks the
/// same numbers against the characteristic polynomial of the beta model,
/// which must collapse to (t^2 - 1)^s.
pub fn verify_identities(s: usize) -> Result<bool> {
    assert!(s >= 1);
    let n = 2 * s;
    for k in 1..=s {
        let expected = if k % 2 == 0 {
            binomial(s, k)
        } else {
            -binomial(s, k)
        };
        if ident_lhs(s, k) != expected {
            return Ok(false);
        }
    }
    let cp = build_beta_x(n).charpoly()?;
    let t2m1 = Poly::new(vec![-Rat::one(), Rat::zero(), Rat::one()]);
    if cp != t2m1.pow(s) {
        return Ok(false);
    }
    // the product sums are exactly the charpoly coefficients of the model
    for k in 1..=s {
        if cp.coeff(n - 2 * k) != ident_lhs(s, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Horizontal edge weight of the oriented square grid.
pub fn weight_u(i: i64, j: i64) -> Rat {
    Rat::from((-2 * i * (2 * i + 1), (2 * i - 2 * j + 1) * (2 * i - 2 * j + 3)))
}

/// Vertical edge weight of the oriented square grid.
pub fn weight_v(i: i64, j: i64) -> Rat {
    Rat::from((2 * j * (2 * j - 1), (2 * i - 2 * j - 1) * (2 * i - 2 * j + 1)))
}

/// A rectangular window of the weight grid.
#[derive(Clone, Copy, Debug)]
pub struct WeightGrid {
    pub imax: i64,
    pub jmax: i64,
}

impl WeightGrid {
    pub fn new(imax: i64, jmax: i64) -> Self {
        WeightGrid { imax, jmax }
    }

    pub fn u(&self, i: i64, j: i64) -> Rat {
        weight_u(i, j)
    }

    pub fn v(&self, i: i64, j: i64) -> Rat {
        weight_v(i, j)
    }

    /// Verifies the vertex relation u_{i,j} + v_{i,j-1} = u_{i-1,j} + v_{i,j}
    /// and the square relation u_{i,j} v_{i,j} = u_{i,j+1} v_{i+1,j} at every
    /// vertex and small square of the window, plus the boundary vanishing
    /// u_{0,j} = v_{i,0} = 0.
    pub fn check(&self) -> bool {
        for i in 0..=self.imax {
            for j in 0..=self.jmax {
                let vertex = (&weight_u(i, j) + &weight_v(i, j - 1))
                    == (&weight_u(i - 1, j) + &weight_v(i, j));
                let square = weight_u(i, j).mul(&weight_v(i, j))
                    == weight_u(i, j + 1).mul(&weight_v(i + 1, j));
                if !vertex || !square {
                    return false;
                }
            }
        }
        (0..=self.jmax).all(|j| weight_u(0, j).is_zero())
            && (0..=self.imax).all(|i| weight_v(i, 0).is_zero())
    }
}

pub fn check_grid(imax: i64, jmax: i64) -> bool {
    WeightGrid::new(imax, jmax).check()
}

/// U_d: lower bidiagonal of size d+1 with diagonal u_{d,1}, u_{d-1,2}, ...,
/// u_{1,d}, 0 and subdiagonal 1's.
pub fn build_u(d: usize) -> Matrix<Rat> {
    let d = d as i64;
    let n = (d + 1) as usize;
    Matrix::from_fn(n, n, |i, j| {
        let r = (i + 1) as i64;
        if i == j {
            weight_u(d + 1 - r, r)
        } else if i == j + 1 {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// V_d: upper bidiagonal of size d+1 with diagonal -1's and superdiagonal
/// v_{d,1}, v_{d-1,2}, ..., v_{1,d}.
pub fn build_v(d: usize) -> Matrix<Rat> {
    let d = d as i64;
    let n = (d + 1) as usize;
    Matrix::from_fn(n, n, |i, j| {
        let r = (i + 1) as i64;
        if i == j {
            -Rat::one()
        } else if j == i + 1 {
            weight_v(d + 1 - r, r)
        } else {
            Rat::zero()
        }
    })
}

/// Deleting the last row and column of V_d U_d must give U_{d-1} V_{d-1}
/// exactly; this is the induction step behind the U_d V_d nilpotency.
pub fn check_truncation(d: usize) -> Result<bool> {
    assert!(d >= 1);
    let vu = build_v(d).mul(&build_u(d))?;
    let truncated = Matrix::from_fn(d, d, |i, j| vu.get(i, j).clone());
    let smaller = build_u(d - 1).mul(&build_v(d - 1))?;
    Ok(truncated == smaller)
}

/// I_s - Y = U_{s-1} V_{s-1}, where Y is the odd-index block of the squared
/// beta model of size 2s.
pub fn check_iy(s: usize) -> Result<bool> {
    assert!(s >= 1);
    let x = build_beta_x(2 * s);
    let x2 = x.mul(&x)?;
    let (y, _) = x2.even_odd_split()?;
    let lhs = Matrix::identity(s).sub(&y)?;
    let rhs = build_u(s - 1).mul(&build_v(s - 1))?;
    Ok(lhs == rhs)
}

/// The even-size splitting device: S is the skew bidiagonal with
/// superdiagonal x_1, y, x_2, y, ..., y, x_s; its square splits as S1 (+) S2
/// and both halves factor through the lower bidiagonal X with diagonal
/// x_1..x_s and subdiagonal -y, giving S1 = -X X' and S2 = -X' X.
pub fn bidiag_square_split<T: Ring>(x: &[T], y: &T) -> Result<(Matrix<T>, Matrix<T>, Matrix<T>)> {
    let s = x.len();
    assert!(s >= 1);
    let mut superdiag = Vec::with_capacity(2 * s - 1);
    for (idx, xk) in x.iter().enumerate() {
        superdiag.push(xk.clone());
        if idx + 1 < s {
            superdiag.push(y.clone());
        }
    }
    let s_mat = bidiagonal_skew_from(&superdiag);
    let s2 = s_mat.mul(&s_mat)?;
    let (s1, s2_block) = s2.even_odd_split()?;
    let x_mat = Matrix::from_fn(s, s, |i, j| {
        if i == j {
            x[i].clone()
        } else if i == j + 1 {
            y.neg()
        } else {
            T::zero()
        }
    });
    Ok((s1, s2_block, x_mat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_examples() {
        assert_eq!(beta(6, 1), Rat::from((1, 3)));
        assert_eq!(beta(6, 3), Rat::from(-9));
        assert_eq!(beta(4, 2), Rat::from(-4));
    }

    #[test]
    fn beta_table_symmetry() {
        for n in [2usize, 4, 6, 10, 14] {
            let t = BetaTable::new(n);
            for k in 1..n {
                assert_eq!(t.get(k), t.get(n - k));
            }
        }
    }

    #[test]
    fn ident_lhs_small_cases() {
        // s=2: beta = (1, -4, 1)
        assert_eq!(ident_lhs(2, 1), Rat::from(-2));
        assert_eq!(ident_lhs(2, 2), Rat::from(1));
        // s=3: 1/3 + 8/3 - 9 + 8/3 + 1/3 = -3
        assert_eq!(ident_lhs(3, 1), Rat::from(-3));
    }

    #[test]
    fn identities_hold_for_small_s() {
        assert!(verify_identities(1).unwrap());
        assert!(verify_identities(2).unwrap());
        assert!(verify_identities(5).unwrap());
    }

    #[test]
    fn weights_examples() {
        assert!(weight_u(0, 5).is_zero());
        assert_eq!(weight_u(1, 1), Rat::from(-2));
        assert_eq!(weight_v(1, 1), Rat::from(-2));
    }

    #[test]
    fn grid_relations_small_window() {
        assert!(check_grid(6, 6));
    }

    #[test]
    fn truncation_base_case() {
        assert!(check_truncation(1).unwrap());
    }

    #[test]
    fn iy_small() {
        assert!(check_iy(2).unwrap());
        assert!(check_iy(5).unwrap());
    }

    #[test]
    fn i_minus_y_entries() {
        // tridiagonal with diagonal 1+beta_1, 1+beta_2+beta_3, ...,
        // superdiagonal -beta_1*beta_2, -beta_3*beta_4, ..., subdiagonal -1
        let s = 4usize;
        let n = 2 * s;
        let t = BetaTable::new(n);
        let x = build_beta_x(n);
        let x2 = x.mul(&x).unwrap();
        let (y, _) = x2.even_odd_split().unwrap();
        let lhs = Matrix::identity(s).sub(&y).unwrap();
        assert_eq!(*lhs.get(0, 0), &Rat::one() + t.get(1));
        for r in 1..s {
            assert_eq!(
                *lhs.get(r, r),
                &(&Rat::one() + t.get(2 * r)) + t.get(2 * r + 1)
            );
        }
        for r in 0..s - 1 {
            assert_eq!(*lhs.get(r, r + 1), -&t.get(2 * r + 1).mul(t.get(2 * r + 2)));
            assert_eq!(*lhs.get(r + 1, r), -Rat::one());
        }
    }

    #[test]
    fn beta_model_square_splits_entrywise() {
        // n = 4: beta = (1, -4, 1); the odd block of X^2 is [[-1,-4],[1,3]]
        let x = build_beta_x(4);
        let x2 = x.mul(&x).unwrap();
        let (y, z) = x2.even_odd_split().unwrap();
        let expect = |v: &[i64]| {
            Matrix::new(2, 2, v.iter().map(|&c| Rat::from(c)).collect()).unwrap()
        };
        assert_eq!(y, expect(&[-1, -4, 1, 3]));
        assert_eq!(z, expect(&[3, -4, 1, -1]));
    }

    #[test]
    fn split_single_entry() {
        let (s1, s2, x) =
            bidiag_square_split(&[Rat::from(1)], &Rat::zero()).unwrap();
        assert_eq!(s1, Matrix::new(1, 1, vec![Rat::from(-1)]).unwrap());
        assert_eq!(s2, Matrix::new(1, 1, vec![Rat::from(-1)]).unwrap());
        assert_eq!(x, Matrix::new(1, 1, vec![Rat::from(1)]).unwrap());
    }

    #[test]
    fn split_matches_xx_transpose() {
        let x = vec![Rat::from(1), Rat::from(1)];
        let y = Rat::from(1);
        let (s1, s2, xm) = bidiag_square_split(&x, &y).unwrap();
        assert_eq!(s1, xm.mul(&xm.transpose()).unwrap().neg());
        assert_eq!(s2, xm.transpose().mul(&xm).unwrap().neg());
        // spec'd entries: superdiag (1), diag (-1, -2)
        assert_eq!(*s1.get(0, 0), Rat::from(-1));
        assert_eq!(*s1.get(1, 1), Rat::from(-2));
        assert_eq!(*s1.get(0, 1), Rat::from(1));
    }
}
