//! Solution counting for the special-bidiagonal censuses: lex elimination,
//! shape-position counting by squarefree eliminant degree, and the
//! exhaustive zero-pattern analysis showing no 4x4 skew bidiagonal has a
//! paired pair of even nilpotent divisors.

use super::multipoly::{buchberger, eliminant, is_zero_dimensional, MultiPoly, SolverBudget};
use crate::error::{Error, Result};
use crate::jordan::jordan_at;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::scalar::GaussRat;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// det(tI - M) for a tridiagonal M described by its diagonal and the
/// products superdiagonal*subdiagonal, via the three-term minor recurrence.
pub fn jacobi_charpoly<T: Ring>(diag: &[T], offprod: &[T]) -> Poly<T> {
    let n = diag.len();
    let mut prev: Poly<T> = Poly::one();
    if n == 0 {
        return prev;
    }
    let t: Poly<T> = Poly::t();
    let mut cur = t.sub(&Poly::constant(diag[0].clone()));
    for j in 2..=n {
        let head = t.sub(&Poly::constant(diag[j - 1].clone()));
        let next = head.mul(&cur).sub(&Poly::constant(offprod[j - 2].clone()).mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Outcome of a point count in shape position.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub count: usize,
    /// squarefree eliminant in the last variable
    pub eliminant: Poly<GaussRat>,
    /// for each variable, its expression g_i(last) on the variety
    pub shape: Vec<Poly<GaussRat>>,
}

/// Distinct solutions over the algebraic closure of a zero-dimensional
/// system, by the degree of the squarefree eliminant once the radical basis
/// is in shape position.
pub fn count_points(
    gens: &[MultiPoly],
    nvars: usize,
    budget: &SolverBudget,
) -> Result<CountReport> {
    let gb = buchberger(gens, budget)?;
    if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
        // the ideal is (1): no solutions anywhere
        return Ok(CountReport { count: 0, eliminant: Poly::one(), shape: Vec::new() });
    }
    if !is_zero_dimensional(&gb, nvars) {
        return Err(Error::NotZeroDimensional);
    }
    let last = nvars - 1;
    let f = eliminant(&gb, last).ok_or(Error::NotZeroDimensional)?;
    let f_sf = f.squarefree_part();
    // pass to the radical in the last coordinate and demand shape position
    let mut gens2: Vec<MultiPoly> = gb.clone();
    gens2.push(MultiPoly::from_univariate(&f_sf, last));
    let gb2 = buchberger(&gens2, budget)?;
    let mut shape = vec![None; nvars];
    shape[last] = Some(Poly::t());
    for g in &gb2 {
        let (m, _) = g.lt().unwrap();
        // looking for x_i - g_i(x_last): leading term is x_i to the first power
        if m.iter().sum::<u32>() == 1 {
            let var = m.iter().position(|&e| e == 1).unwrap();
            if var == last {
                continue;
            }
            let tail = g.sub(&MultiPoly::var(var));
            if let Some(univ) = tail.neg().to_univariate(last) {
                shape[var] = Some(univ);
            }
        }
    }
    let shape: Option<Vec<Poly<GaussRat>>> = shape.into_iter().collect();
    let shape = shape.ok_or(Error::NotShapePosition)?;
    let count = f_sf.degree().unwrap_or(0);
    Ok(CountReport { count, eliminant: f_sf, shape })
}

/// count_points with up to three random linear changes of the last
/// coordinate when the basis is not in shape position.
pub fn count_points_with_retries(
    gens: &[MultiPoly],
    nvars: usize,
    budget: &SolverBudget,
    seed: u64,
) -> Result<CountReport> {
    match count_points(gens, nvars, budget) {
        Err(Error::NotShapePosition) => {}
        other => return other,
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let last = nvars - 1;
    let mut result = Err(Error::NotShapePosition);
    for _ in 0..3 {
        // z = x_last + sum c_i x_i; substitute x_last = z - sum c_i x_i
        let mut replacement = MultiPoly::var(last);
        for i in 0..last {
            let c = GaussRat::from(rng.gen_range(1i64..=9));
            replacement = replacement.sub(&MultiPoly::var(i).mul_term(&[], &c));
        }
        let moved: Vec<MultiPoly> =
            gens.iter().map(|g| g.subst_var(last, &replacement)).collect();
        result = count_points(&moved, nvars, budget);
        if !matches!(result, Err(Error::NotShapePosition)) {
            return result;
        }
    }
    result
}

/// True iff the variable is nonzero at every solution: its shape expression
/// shares no root with the squarefree eliminant.
fn nonzero_everywhere(report: &CountReport, var: usize) -> bool {
    if report.count == 0 {
        return true;
    }
    let g = &report.shape[var];
    if g.is_zero() {
        return false;
    }
    report.eliminant.gcd(g).degree() == Some(0)
}

/// Resubstitution check in the quotient ring Q(i)[t]/(eliminant): every
/// generator, with each variable replaced by its shape expression, must
/// reduce to zero modulo the squarefree eliminant. This certifies that every
/// counted solution satisfies the full system exactly, without ever leaving
/// exact arithmetic.
pub fn verify_on_variety(gens: &[MultiPoly], report: &CountReport) -> bool {
    if report.count == 0 {
        return true;
    }
    let modulus = &report.eliminant;
    for g in gens {
        let mut acc = Poly::zero();
        for (m, c) in g.terms() {
            let mut term = Poly::constant(c.clone());
            for (var, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&report.shape[var]);
                    let (_, r) = term.div_rem(modulus);
                    term = r;
                }
            }
            acc = acc.add(&term);
        }
        let (_, r) = acc.div_rem(modulus);
        if !r.is_zero() {
            return false;
        }
    }
    true
}

/// Census result: solutions of the reduced system, sign lifts, the Bezout
/// bound 2^s s!, and whether every solution avoids the coordinate
/// hyperplanes.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub s: usize,
    pub solution_count: usize,
    pub lifted_count: usize,
    pub bezout_bound: usize,
    pub all_nonzero: bool,
}

fn bezout_bound(s: usize) -> usize {
    (1..=s).map(|k| 2 * k).product::<usize>().max(1)
}

const CENSUS_MAX_S: usize = 4;

/// Count of nilpotent special bidiagonal matrices of odd size n = 2s+1.
///
/// Normalizing the even superdiagonal entries to 1 turns the squared
/// coordinates q_k = p_{2k-1} into unknowns with p_{2k} = -1 fixed; the
/// equations are the non-constant charpoly coefficients of B(p). Each
/// solution with all q_k nonzero lifts to 2^s sign choices.
pub fn odd_special_census(s: usize, budget: &SolverBudget, seed: u64) -> Result<CensusReport> {
    if s == 0 || s > CENSUS_MAX_S {
        return Err(Error::InvalidInput(format!(
            "odd census supports 1 <= s <= {CENSUS_MAX_S}, got {s}"
        )));
    }
    let n = 2 * s + 1;
    // coords p_1..p_{n-1}: odd slots are the variables, even slots -1
    let coords: Vec<MultiPoly> = (0..n - 1)
        .map(|k| {
            if k % 2 == 0 {
                MultiPoly::var(k / 2)
            } else {
                MultiPoly::from_i64(-1)
            }
        })
        .collect();
    let diag = vec![MultiPoly::zero(); n];
    // B(p): superdiagonal -p_k, subdiagonal 1, so the offdiagonal product is -p_k
    let offprod: Vec<MultiPoly> = coords.iter().map(|p| p.neg()).collect();
    let cp = jacobi_charpoly(&diag, &offprod);
    let gens: Vec<MultiPoly> = (1..=s).map(|k| cp.coeff(n - 2 * k)).collect();
    finish_census(s, &gens, budget, seed)
}

/// Count of special bidiagonal matrices of even size n = 2s with elementary
/// divisors (t-1)^s, (t+1)^s.
///
/// With the normalization y = 1 and lambda = 1, the unknowns are the squares
/// w_k = x_k^2 and the equations say charpoly(S1(x, 1)) = (t-1)^s for the
/// odd half S1 of the squared bidiagonal.
pub fn even_special_census(s: usize, budget: &SolverBudget, seed: u64) -> Result<CensusReport> {
    if s == 0 || s > CENSUS_MAX_S {
        return Err(Error::InvalidInput(format!(
            "even census supports 1 <= s <= {CENSUS_MAX_S}, got {s}"
        )));
    }
    // S1: diagonal (-w_1, -w_2 - 1, ..., -w_s - 1), offdiagonal products w_k
    let diag: Vec<MultiPoly> = (0..s)
        .map(|r| {
            let w = MultiPoly::var(r);
            if r == 0 {
                w.neg()
            } else {
                w.neg().sub(&MultiPoly::one())
            }
        })
        .collect();
    let offprod: Vec<MultiPoly> = (0..s.saturating_sub(1)).map(MultiPoly::var).collect();
    let cp = jacobi_charpoly(&diag, &offprod);
    // target (t-1)^s
    let t_minus_1: Poly<MultiPoly> =
        Poly::new(vec![MultiPoly::from_i64(-1), MultiPoly::one()]);
    let target = t_minus_1.pow(s);
    let gens: Vec<MultiPoly> = (0..s).map(|k| cp.coeff(k).sub(&target.coeff(k))).collect();
    finish_census(s, &gens, budget, seed)
}

fn finish_census(
    s: usize,
    gens: &[MultiPoly],
    budget: &SolverBudget,
    seed: u64,
) -> Result<CensusReport> {
    let report = count_points_with_retries(gens, s, budget, seed)?;
    if !verify_on_variety(gens, &report) {
        return Err(Error::InvalidInput(
            "census solutions fail resubstitution modulo the eliminant".into(),
        ));
    }
    let all_nonzero = (0..s).all(|v| nonzero_everywhere(&report, v));
    let lifted = report.count * (1usize << s);
    Ok(CensusReport {
        s,
        solution_count: report.count,
        lifted_count: lifted,
        bezout_bound: bezout_bound(s),
        all_nonzero,
    })
}

/// One zero-pattern case of the 4x4 analysis.
#[derive(Clone, Debug)]
pub struct PatternCase {
    /// 1-based superdiagonal positions forced to zero
    pub zeros: Vec<usize>,
    /// whether nilpotency is achievable with exactly this pattern
    pub satisfiable: bool,
    /// the forced Jordan type when satisfiable
    pub jordan_type: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ImpossibilityReport {
    pub holds: bool,
    pub cases: Vec<PatternCase>,
}

/// Certifies that no skew-symmetric bidiagonal 4x4 matrix has elementary
/// divisors t^2, t^2.
///
/// Nilpotency of S(a1, a2, a3) means a1^2 + a2^2 + a3^2 = 0 and a1*a3 = 0.
/// Every zero pattern of (a1, a2, a3) is enumerated; a maximal run of L
/// consecutive nonzero entries forms a cyclic nilpotent block of size L+1,
/// which is solvable with nonzero entries only for even L. A witness at a
/// representative solution pins the Jordan type, and no satisfiable pattern
/// produces [2, 2].
pub fn bidiagonal_impossibility_n4() -> Result<ImpossibilityReport> {
    let n = 4usize;
    let mut cases = Vec::new();
    let mut holds = true;
    for mask in 0u32..8 {
        let zeros: Vec<usize> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
        let nonzero: Vec<usize> = (1..n).filter(|k| !zeros.contains(k)).collect();
        // maximal runs of consecutive nonzero superdiagonal positions
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for &k in &nonzero {
            match runs.last_mut() {
                Some(run) if *run.last().unwrap() + 1 == k => run.push(k),
                _ => runs.push(vec![k]),
            }
        }
        // run length L: the (L+1)x(L+1) block must be nilpotent with all
        // entries nonzero, which requires L even:
        //   L = 1: a^2 = 0 forces a = 0;
        //   L = 3: a1*a3 = 0 forces a zero entry.
        let satisfiable = runs.iter().all(|run| run.len() % 2 == 0);
        let jordan_type = if satisfiable {
            // block sizes: L+1 per run, plus 1 per row not covered by a run
            let mut sizes: Vec<usize> = runs.iter().map(|r| r.len() + 1).collect();
            let covered: usize = sizes.iter().sum();
            sizes.extend(std::iter::repeat_n(1, n - covered));
            sizes.sort_unstable_by(|a, b| b.cmp(a));

            // ground the prediction with a concrete witness
            let witness = pattern_witness(n, &zeros);
            let observed = jordan_at(&witness, &GaussRat::zero())?;
            if observed != sizes {
                return Err(Error::InvalidInput(format!(
                    "witness type {observed:?} disagrees with predicted {sizes:?}"
                )));
            }
            if sizes == vec![2, 2] {
                holds = false;
            }
            Some(sizes)
        } else {
            None
        };
        cases.push(PatternCase { zeros, satisfiable, jordan_type });
    }
    Ok(ImpossibilityReport { holds, cases })
}

/// A concrete nilpotent skew bidiagonal realizing the zero pattern: each run
/// of two consecutive nonzero slots carries (1, i).
fn pattern_witness(n: usize, zeros: &[usize]) -> Matrix<GaussRat> {
    let mut superdiag = vec![GaussRat::zero(); n - 1];
    let mut k = 1;
    while k < n {
        if zeros.contains(&k) {
            k += 1;
            continue;
        }
        // start of a run; runs here always have even length 2
        superdiag[k - 1] = GaussRat::one();
        if k + 1 < n && !zeros.contains(&(k + 1)) {
            superdiag[k] = GaussRat::i();
            k += 2;
        } else {
            k += 1;
        }
    }
    crate::blocks::bidiagonal_skew_from(&superdiag)
}
