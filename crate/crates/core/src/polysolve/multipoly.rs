//! Sparse multivariate polynomials over Q(i) with lex term order.
//!
//! Monomials are exponent vectors with trailing zeros trimmed, so the
//! natural slice ordering is exactly lex with variable 0 most significant.

use crate::ring::{Field, Ring};
use crate::scalar::GaussRat;
use std::collections::BTreeMap;
use std::fmt;

pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let bi = *b.get(i).unwrap_or(&0);
        if a[i] < bi {
            return None;
        }
        out.push(a[i] - bi);
    }
    Some(trim(out))
}

fn mono_lcm(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| *a.get(i).unwrap_or(&0).max(b.get(i).unwrap_or(&0))).collect())
}

fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

fn mono_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Multivariate polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl MultiPoly {
    pub fn from_terms(terms: BTreeMap<Monomial, GaussRat>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { terms }
    }

    /// The variable x_i.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0u32; i + 1];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, GaussRat::one());
        MultiPoly { terms }
    }

    pub fn monomial(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(m), c);
        }
        MultiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in lex order.
    pub fn lt(&self) -> Option<(&Monomial, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| mono_degree(m)).max().unwrap_or(0)
    }

    /// Highest variable index appearing, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter(|m| !m.is_empty()).map(|m| m.len() - 1).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn mul_term(&self, m: &[u32], c: &GaussRat) -> Self {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .map(|(tm, tc)| (mono_mul(tm, m), tc.mul(c)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.lt() {
            None => self.clone(),
            Some((_, c)) => self.mul_term(&[], &c.inv()),
        }
    }

    /// Uses only the given variable? (true for univariate-in-var and constants)
    pub fn is_univariate_in(&self, var: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().enumerate().all(|(i, &e)| e == 0 || i == var))
    }

    /// Converts to a dense univariate polynomial in the given variable.
    pub fn to_univariate(&self, var: usize) -> Option<crate::poly::Poly<GaussRat>> {
        if !self.is_univariate_in(var) {
            return None;
        }
        let deg = self
            .terms
            .keys()
            .map(|m| *m.get(var).unwrap_or(&0) as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![GaussRat::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[*m.get(var).unwrap_or(&0) as usize] = c.clone();
        }
        Some(crate::poly::Poly::new(coeffs))
    }

    pub fn from_univariate(p: &crate::poly::Poly<GaussRat>, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0u32; var + 1];
                m[var] = e as u32;
                terms.insert(trim(m), c.clone());
            }
        }
        MultiPoly { terms }
    }

    /// Substitutes a polynomial for one variable.
    pub fn subst_var(&self, var: usize, replacement: &MultiPoly) -> Self {
        let mut out = MultiPoly::constant(GaussRat::zero());
        for (m, c) in &self.terms {
            let e = *m.get(var).unwrap_or(&0);
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            let mut term = MultiPoly::monomial(rest, c.clone());
            for _ in 0..e {
                term = term.mul(replacement);
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[GaussRat]) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        MultiPoly::constant(GaussRat::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(GaussRat::zero);
            *entry = entry.add(c);
        }
        MultiPoly::from_terms(terms)
    }

    fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), Ring::neg(c))).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, GaussRat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = mono_mul(m1, m2);
                let entry = terms.entry(m).or_insert_with(GaussRat::zero);
                *entry = entry.add(&c1.mul(c2));
            }
        }
        MultiPoly::from_terms(terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_i64(v: i64) -> Self {
        MultiPoly::constant(GaussRat::from_i64(v))
    }

    fn div_int(&self, k: i64) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.div_int(k))).collect(),
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// S-polynomial of two nonzero polynomials.
pub fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, cf) = f.lt().expect("s_poly of zero");
    let (mg, cg) = g.lt().expect("s_poly of zero");
    let l = mono_lcm(mf, mg);
    let a = mono_div(&l, mf).unwrap();
    let b = mono_div(&l, mg).unwrap();
    f.mul_term(&a, &cf.inv()).sub(&g.mul_term(&b, &cg.inv()))
}

/// Full normal form of f modulo the basis: every term of the result is
/// reducible by no basis leading term.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut rest = f.clone();
    let mut out = MultiPoly::zero();
    'outer: while let Some((m, c)) = rest.lt().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (mg, cg) = g.lt().unwrap();
            if let Some(q) = mono_div(&m, mg) {
                let factor = c.div(cg);
                rest = rest.sub(&g.mul_term(&q, &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the output
        out = out.add(&MultiPoly::monomial(m.clone(), c.clone()));
        rest = rest.sub(&MultiPoly::monomial(m, c));
    }
    out
}

/// Caps on the Buchberger loop so desk-scale systems terminate in minutes
/// and anything larger is rejected instead of attempted.
#[derive(Clone, Copy, Debug)]
pub struct SolverBudget {
    pub max_pairs: usize,
    pub max_terms: usize,
    pub max_degree: u32,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { max_pairs: 50_000, max_terms: 200_000, max_degree: 128 }
    }
}

/// Reduced lex Groebner basis by Buchberger's algorithm with the coprimality
/// and chain criteria.
pub fn buchberger(
    gens: &[MultiPoly],
    budget: &SolverBudget,
) -> crate::error::Result<Vec<MultiPoly>> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(&(i, j)) = pairs
        .iter()
        .min_by_key(|&&(i, j)| {
            let l = mono_lcm(basis[i].lt().unwrap().0, basis[j].lt().unwrap().0);
            (mono_degree(&l), l)
        })
    {
        pairs.retain(|&p| p != (i, j));
        processed += 1;
        if processed > budget.max_pairs {
            return Err(crate::error::Error::ResourceBudgetExceeded(format!(
                "more than {} S-pairs",
                budget.max_pairs
            )));
        }
        let (mi, _) = basis[i].lt().unwrap();
        let (mj, _) = basis[j].lt().unwrap();
        if mono_coprime(mi, mj) {
            continue;
        }
        // chain criterion: some other basis element divides the lcm and both
        // of its pairs with i and j are gone
        let l = mono_lcm(mi, mj);
        let chain = basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && mono_div(&l, g.lt().unwrap().0).is_some()
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > budget.max_degree || r.num_terms() > budget.max_terms {
            return Err(crate::error::Error::ResourceBudgetExceeded(format!(
                "intermediate polynomial of degree {} with {} terms",
                r.total_degree(),
                r.num_terms()
            )));
        }
        let r = r.monic();
        let new_idx = basis.len();
        basis.push(r);
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
    }
    Ok(interreduce(basis))
}

/// Interreduction: every element fully reduced against the others, monic,
/// duplicates and zeros dropped.
fn interreduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let f = basis[i].clone();
            if f.is_zero() {
                continue;
            }
            let others: Vec<MultiPoly> = basis
                .iter()
                .enumerate()
                .filter(|&(j, g)| j != i && !g.is_zero())
                .map(|(_, g)| g.clone())
                .collect();
            let r = reduce(&f, &others);
            let r = if r.is_zero() { r } else { r.monic() };
            if r != f {
                basis[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.retain(|f| !f.is_zero());
    basis.sort_by(|a, b| a.lt().unwrap().0.cmp(b.lt().unwrap().0));
    basis
}

/// Zero-dimensionality over the algebraic closure: every variable up to
/// nvars has a pure power of itself among the leading terms.
pub fn is_zero_dimensional(gb: &[MultiPoly], nvars: usize) -> bool {
    (0..nvars).all(|v| {
        gb.iter().any(|g| {
            let (m, _) = g.lt().unwrap();
            !m.is_empty()
                && m.len() == v + 1
                && m[v] > 0
                && m.iter().take(v).all(|&e| e == 0)
        })
    })
}

/// The univariate eliminant in the last variable from a lex basis, if
/// present (it always is for zero-dimensional ideals).
pub fn eliminant(gb: &[MultiPoly], last_var: usize) -> Option<crate::poly::Poly<GaussRat>> {
    gb.iter()
        .filter_map(|g| g.to_univariate(last_var))
        .filter(|p| p.degree().is_some_and(|d| d >= 1))
        .min_by_key(|p| p.degree().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(0)
    }

    fn y() -> MultiPoly {
        MultiPoly::var(1)
    }

    fn int(v: i64) -> MultiPoly {
        MultiPoly::from_i64(v)
    }

    #[test]
    fn lex_leading_term() {
        // x > y^5 in lex
        let f = x().add(&y().mul(&y()));
        let (m, _) = f.lt().unwrap();
        assert_eq!(m, &vec![1]);
    }

    #[test]
    fn reduce_to_normal_form() {
        // reduce x^2 + y by {x - y}: x -> y gives y^2 + y
        let basis = vec![x().sub(&y())];
        let f = x().mul(&x()).add(&y());
        let r = reduce(&f, &basis);
        assert_eq!(r, y().mul(&y()).add(&y()));
    }

    #[test]
    fn buchberger_linear_system() {
        // {x + y, x - y} -> {x, y}
        let budget = SolverBudget::default();
        let gb = buchberger(&[x().add(&y()), x().sub(&y())], &budget).unwrap();
        assert_eq!(gb, vec![y(), x()]);
        assert!(is_zero_dimensional(&gb, 2));
    }

    #[test]
    fn buchberger_single_generator() {
        let budget = SolverBudget::default();
        let f = x().mul(&x()).sub(&int(1));
        let gb = buchberger(std::slice::from_ref(&f), &budget).unwrap();
        assert_eq!(gb, vec![f]);
    }

    #[test]
    fn substitution_over_q_i() {
        // x^2 + y^2 with y -> i*x collapses to zero
        let i_coeff = MultiPoly::constant(GaussRat::i());
        let f = x().mul(&x()).add(&y().mul(&y()));
        let g = f.subst_var(1, &i_coeff.mul(&x()));
        assert!(g.is_zero());
    }

    #[test]
    fn buchberger_collapses_circle_and_line_over_q_i() {
        // {x^2 + y^2, y - i*x}: substituting the line kills the quadric
        let budget = SolverBudget::default();
        let i_coeff = MultiPoly::constant(GaussRat::i());
        let f = x().mul(&x()).add(&y().mul(&y()));
        let line = y().sub(&i_coeff.mul(&x()));
        let gb = buchberger(&[f, line.clone()], &budget).unwrap();
        assert_eq!(gb, vec![line.monic()]);
    }

    #[test]
    fn eliminant_extraction() {
        let budget = SolverBudget::default();
        // {x + y, x - y}: eliminant in y is y itself
        let gb = buchberger(&[x().add(&y()), x().sub(&y())], &budget).unwrap();
        let f = eliminant(&gb, 1).unwrap();
        assert_eq!(f.degree(), Some(1));
    }

    #[test]
    fn zero_dimensionality_detection() {
        let budget = SolverBudget::default();
        // {x - y}: a line, not zero-dimensional
        let gb = buchberger(&[x().sub(&y())], &budget).unwrap();
        assert!(!is_zero_dimensional(&gb, 2));
    }
}
