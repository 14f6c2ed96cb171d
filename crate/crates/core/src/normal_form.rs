//! From a skew-symmetric matrix (or its elementary divisors) to the
//! canonical direct sum of lambda*P_m, Q_m, R_m blocks, together with a
//! rank-sequence certificate of similarity. Similar skew-symmetric matrices
//! are orthogonally similar, so equality of divisor data is the whole
//! similarity story; the orthogonal transition matrix itself is never
//! constructed.

use crate::blocks::{build_p, build_q, build_r};
use crate::combinatorics::build_beta_x;
use crate::error::{Error, Result};
use crate::jordan::{
    gaussian_roots, partition_from_ranks, rank_sequence, scalar_sort_key, validate_skew_pairing,
    ElementaryDivisor,
};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::{GaussRat, Radical, Rat};
use std::collections::BTreeMap;

/// One diagonal block of the canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockSpec {
    /// lambda * P_m: even size m, lambda nonzero, elementary divisors
    /// (t-lambda)^{m/2} and (t+lambda)^{m/2}.
    PBlock { lambda: GaussRat, size: usize },
    /// Q_m: size divisible by 4, divisors t^{m/2} twice.
    QBlock { size: usize },
    /// R_m: odd size, single divisor t^m.
    RBlock { size: usize },
}

impl BlockSpec {
    pub fn size(&self) -> usize {
        match self {
            BlockSpec::PBlock { size, .. } | BlockSpec::QBlock { size } | BlockSpec::RBlock { size } => {
                *size
            }
        }
    }

    fn sort_key(&self) -> (u8, usize, (Rat, Rat)) {
        match self {
            BlockSpec::RBlock { size } => (0, *size, scalar_sort_key(&GaussRat::zero())),
            BlockSpec::QBlock { size } => (1, *size, scalar_sort_key(&GaussRat::zero())),
            BlockSpec::PBlock { lambda, size } => (2, *size, scalar_sort_key(lambda)),
        }
    }

    /// The canonical matrix of this block, over the radical ring.
    pub fn matrix(&self) -> Result<Matrix<Radical>> {
        match self {
            BlockSpec::PBlock { lambda, size } => {
                Ok(build_p(*size)?.scalar_mul(&Radical::from_gauss(lambda.clone())))
            }
            BlockSpec::QBlock { size } => Ok(build_q(*size)?.to_radical()),
            BlockSpec::RBlock { size } => build_r(*size),
        }
    }

    /// A Q(i)-matrix diagonally similar to this block. P and R blocks are
    /// bidiagonal with nonzero superdiagonal, so rescaling rows/columns
    /// moves the radical entries into the rational superdiagonal model.
    pub fn rational_model(&self) -> Result<Matrix<GaussRat>> {
        match self {
            BlockSpec::PBlock { lambda, size } => {
                Ok(build_beta_x(*size).to_gauss().scalar_mul(lambda))
            }
            BlockSpec::QBlock { size } => build_q(*size),
            BlockSpec::RBlock { size } => {
                let s = (size - 1) / 2;
                // superdiagonal entries square to s-j+1 and -j; the model is
                // the normalized bidiagonal with superdiagonal a_k^2, subdiagonal -1
                let mut superdiag = Vec::with_capacity(size - 1);
                for j in 1..=s {
                    superdiag.push(GaussRat::from((s - j + 1) as i64));
                    superdiag.push(GaussRat::from(-(j as i64)));
                }
                Ok(Matrix::from_fn(*size, *size, |r, c| {
                    if c == r + 1 {
                        superdiag[r].clone()
                    } else if r == c + 1 {
                        -GaussRat::one()
                    } else {
                        GaussRat::zero()
                    }
                }))
            }
        }
    }
}

/// Ordered list of canonical blocks. The canonical order is R, then Q, then
/// P; within a kind ascending by size, then by eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormPlan {
    pub blocks: Vec<BlockSpec>,
}

impl NormalFormPlan {
    pub fn new(mut blocks: Vec<BlockSpec>) -> Self {
        blocks.sort_by_key(|b| b.sort_key());
        NormalFormPlan { blocks }
    }

    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(|b| b.size()).sum()
    }
}

/// Representative of {lambda, -lambda} with re > 0, or re = 0 and im > 0.
pub fn canonical_eigenvalue(lambda: &GaussRat) -> GaussRat {
    let positive = if lambda.re.is_zero() {
        !lambda.im.is_negative() && !lambda.im.is_zero()
    } else {
        !lambda.re.is_negative()
    };
    if positive {
        lambda.clone()
    } else {
        Ring::neg(lambda)
    }
}

/// Consumes a paired divisor list into the canonical block menu: each
/// {lambda, -lambda} pair of size-s divisors becomes lambda*P_{2s}, each pair
/// of equal even nilpotent sizes e becomes Q_{2e}, and each odd nilpotent
/// size m becomes R_m.
pub fn plan_blocks(divisors: &[ElementaryDivisor]) -> Result<NormalFormPlan> {
    if !validate_skew_pairing(divisors) {
        return Err(Error::PairingViolation);
    }
    let mut blocks = Vec::new();
    let mut nonzero: BTreeMap<(Rat, Rat), BTreeMap<usize, usize>> = BTreeMap::new();
    for d in divisors {
        if d.eigenvalue.is_zero() {
            if d.size % 2 == 1 {
                for _ in 0..d.count {
                    blocks.push(BlockSpec::RBlock { size: d.size });
                }
            } else {
                // pairing guarantees an even count
                for _ in 0..d.count / 2 {
                    blocks.push(BlockSpec::QBlock { size: 2 * d.size });
                }
            }
        } else {
            let rep = canonical_eigenvalue(&d.eigenvalue);
            if rep == d.eigenvalue {
                *nonzero.entry(scalar_sort_key(&rep)).or_default().entry(d.size).or_insert(0) +=
                    d.count;
            }
        }
    }
    for (key, sizes) in nonzero {
        let lambda = GaussRat::new(key.0, key.1);
        for (size, count) in sizes {
            for _ in 0..count {
                blocks.push(BlockSpec::PBlock { lambda: lambda.clone(), size: 2 * size });
            }
        }
    }
    Ok(NormalFormPlan::new(blocks))
}

/// Direct sum of the canonical block matrices, in plan order.
pub fn assemble(plan: &NormalFormPlan) -> Result<Matrix<Radical>> {
    let blocks: Result<Vec<_>> = plan.blocks.iter().map(|b| b.matrix()).collect();
    Ok(Matrix::direct_sum(&blocks?))
}

/// Q(i)-matrix similar to the assembled canonical form, used for all rank
/// computations on the normal-form side.
pub fn assemble_rational_model(plan: &NormalFormPlan) -> Result<Matrix<GaussRat>> {
    let blocks: Result<Vec<_>> = plan.blocks.iter().map(|b| b.rational_model()).collect();
    Ok(Matrix::direct_sum(&blocks?))
}

/// Similarity evidence for one eigenvalue: the rank sequences of powers of
/// (A - lambda I) for the input and for (a similar model of) the normal
/// form. Equal sequences at every eigenvalue prove similarity; orthogonal
/// similarity then follows for skew-symmetric inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenCertificate {
    pub eigenvalue: GaussRat,
    pub input_ranks: Vec<usize>,
    pub normal_ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub eigen: Vec<EigenCertificate>,
    pub matches: bool,
}

/// The full normal-form output.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub plan: NormalFormPlan,
    pub matrix: Matrix<Radical>,
    pub certificate: Certificate,
}

/// Canonical form of a skew-symmetric matrix over Q(i).
pub fn normal_form(a: &Matrix<GaussRat>) -> Result<NormalForm> {
    if !a.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    normal_form_of_similar(a)
}

/// Canonical form of a skew-symmetric matrix with radical entries. The
/// matrix must be diagonally rationalizable (true for every conjugated
/// assembly of canonical blocks); divisor extraction then runs over Q(i) on
/// the similar rationalized matrix.
pub fn normal_form_radical(a: &Matrix<Radical>) -> Result<NormalForm> {
    if !a.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    if let Some(g) = a.as_gauss() {
        return normal_form_of_similar(&g);
    }
    let g = a.rationalize_similar()?;
    normal_form_of_similar(&g)
}

/// Shared pipeline: divisor data of the (possibly already rationalized)
/// input, block plan, assembly, certificate.
fn normal_form_of_similar(a: &Matrix<GaussRat>) -> Result<NormalForm> {
    let cp = a.charpoly()?;
    let (roots, rem) = gaussian_roots(&cp);
    if rem.degree().is_some_and(|d| d >= 1) {
        return Err(Error::UnsupportedEigenvalues);
    }
    let mut divisors = Vec::new();
    let mut input_seqs = Vec::new();
    for (lambda, _) in &roots {
        let seq = rank_sequence(a, lambda)?;
        let partition = partition_from_ranks(&seq);
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for size in partition {
            *counts.entry(size).or_insert(0) += 1;
        }
        for (size, count) in counts {
            divisors.push(ElementaryDivisor { eigenvalue: lambda.clone(), size, count });
        }
        input_seqs.push((lambda.clone(), seq));
    }
    let plan = plan_blocks(&divisors)?;
    let matrix = assemble(&plan)?;
    let model = assemble_rational_model(&plan)?;
    let mut eigen = Vec::new();
    let mut matches = true;
    for (lambda, input_ranks) in input_seqs {
        let normal_ranks = rank_sequence(&model, &lambda)?;
        matches &= input_ranks == normal_ranks;
        eigen.push(EigenCertificate { eigenvalue: lambda, input_ranks, normal_ranks });
    }
    Ok(NormalForm { plan, matrix, certificate: Certificate { eigen, matches } })
}

/// Exact similarity over the field: equal characteristic polynomials and
/// equal rank sequences at every Q(i) eigenvalue.
pub fn similar(a: &Matrix<GaussRat>, b: &Matrix<GaussRat>) -> Result<bool> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch("similar needs square matrices of equal size".into()));
    }
    let cp_a = a.charpoly()?;
    let cp_b = b.charpoly()?;
    let (roots_a, rem_a) = gaussian_roots(&cp_a);
    if rem_a.degree().is_some_and(|d| d >= 1) {
        return Err(Error::UnsupportedEigenvalues);
    }
    let (_, rem_b) = gaussian_roots(&cp_b);
    if rem_b.degree().is_some_and(|d| d >= 1) {
        return Err(Error::UnsupportedEigenvalues);
    }
    if cp_a != cp_b {
        return Ok(false);
    }
    for (lambda, _) in roots_a {
        if rank_sequence(a, &lambda)? != rank_sequence(b, &lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}
