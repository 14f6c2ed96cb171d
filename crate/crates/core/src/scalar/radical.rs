use crate::error::{Error, Result};
use crate::ring::{Field, Ring};
use crate::scalar::{GaussRat, Rat};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sign branch selected when lifting a rational to its square root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Finite Q(i)-linear combination of square roots of squarefree positive
/// integers: `sum of c_r * sqrt(r)`.
///
/// The term map is canonical: every radicand is squarefree, no zero
/// coefficient is stored, and the Gaussian-rational part lives under
/// radicand 1. Because sqrt(r) for distinct squarefree r are linearly
/// independent over Q(i), structural equality coincides with equality as
/// complex numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct Radical {
    terms: BTreeMap<BigUint, GaussRat>,
}

/// Writes `m = k^2 * r` with `r` squarefree; returns `(k, r)`.
///
/// Plain trial division up to sqrt(m); only construction-time lifts go
/// through here (products of existing radicals use the gcd shortcut in
/// `mul`), so inputs stay desk-sized.
pub fn squarefree_split(m: &BigUint) -> (BigUint, BigUint) {
    assert!(!m.is_zero(), "squarefree_split requires m >= 1");
    let mut rest = m.clone();
    let mut square_part = BigUint::one();
    let mut squarefree = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if r.is_zero() {
                rest = q;
                count += 1;
            } else {
                break;
            }
        }
        if count > 0 {
            square_part *= d.pow(count / 2);
            if count % 2 == 1 {
                squarefree *= &d;
            }
        }
        d += 1u32;
    }
    // rest is now 1 or a prime.
    squarefree *= rest;
    (square_part, squarefree)
}

impl Radical {
    fn from_terms(terms: BTreeMap<BigUint, GaussRat>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !Ring::is_zero(c));
        Radical { terms }
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(BigUint::one(), c);
        }
        Radical { terms }
    }

    pub fn from_rat(q: Rat) -> Self {
        Radical::from_gauss(GaussRat::from_rat(q))
    }

    pub fn i() -> Self {
        Radical::from_gauss(GaussRat::i())
    }

    /// A single term `c * sqrt(rad)`; `rad` need not be squarefree.
    pub fn term(c: GaussRat, rad: u64) -> Self {
        assert!(rad >= 1, "radicand must be positive");
        let (k, r) = squarefree_split(&BigUint::from(rad));
        let coeff = &c * &GaussRat::from_rat(Rat::new(k.into(), 1.into()));
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&coeff) {
            terms.insert(r, coeff);
        }
        Radical { terms }
    }

    /// sqrt(n) for a positive integer n.
    pub fn sqrt_int(n: u64) -> Self {
        Radical::term(GaussRat::one(), n)
    }

    /// sqrt(r) for a radicand already known to be squarefree.
    pub fn sqrt_squarefree(r: BigUint) -> Self {
        debug_assert!(!r.is_zero());
        let mut terms = BTreeMap::new();
        terms.insert(r, GaussRat::one());
        Radical { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of sqrt(r), zero if absent.
    pub fn coeff(&self, rad: &BigUint) -> GaussRat {
        self.terms.get(rad).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// The Gaussian-rational part (coefficient of radicand 1).
    pub fn gauss_part(&self) -> GaussRat {
        self.coeff(&BigUint::one())
    }

    pub fn is_gauss(&self) -> bool {
        self.terms.keys().all(|r| r.is_one())
    }

    /// Downcast to Q(i) when no genuine radical term is present.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        self.is_gauss().then(|| self.gauss_part())
    }

    /// Multiplicative inverse of a single-term radical:
    /// `(c*sqrt(r))^-1 = (1/(c*r)) * sqrt(r)`.
    pub fn inv_single_term(&self) -> Result<Radical> {
        if self.terms.len() != 1 {
            return Err(Error::UnsupportedRing(
                "only single-term radicals are invertible".into(),
            ));
        }
        let (r, c) = self.terms.iter().next().unwrap();
        let r_gauss = GaussRat::from_rat(Rat::new(r.clone().into(), 1.into()));
        let coeff = Field::inv(&(c * &r_gauss));
        let mut terms = BTreeMap::new();
        terms.insert(r.clone(), coeff);
        Ok(Radical { terms })
    }

    /// Exact division by a nonzero Gaussian-rational scalar.
    pub fn div_gauss(&self, c: &GaussRat) -> Radical {
        self.scale(&Field::inv(c))
    }

    pub fn scale(&self, c: &GaussRat) -> Radical {
        Radical::from_terms(self.terms.iter().map(|(r, a)| (r.clone(), a * c)).collect())
    }

    /// Complex conjugation; sqrt(r) terms are real, so it acts on
    /// coefficients only.
    pub fn conj(&self) -> Radical {
        Radical::from_terms(self.terms.iter().map(|(r, a)| (r.clone(), a.conj())).collect())
    }
}

/// Exact square root of a nonzero rational, expressed in the radical ring.
///
/// For q > 0 the result is `(k/b) * sqrt(r)` with `a*b = k^2*r`; for q < 0
/// the coefficient gains a factor of i, pinning down which square root of -1
/// is meant. `branch` selects between the two square roots; `Minus` negates.
/// `rat_sqrt_lift(0)` is 0 regardless of branch.
pub fn rat_sqrt_lift(q: &Rat, branch: Sign) -> Radical {
    if Ring::is_zero(q) {
        return Radical::zero();
    }
    let (k, r) = squarefree_split(&q.unsigned_numer_times_denom());
    let mag = Rat::new(k.into(), q.denom().clone());
    let coeff = if q.is_negative() {
        GaussRat::new(Rat::zero(), mag)
    } else {
        GaussRat::from_rat(mag)
    };
    let signed = match branch {
        Sign::Plus => coeff,
        Sign::Minus => Ring::neg(&coeff),
    };
    let mut terms = BTreeMap::new();
    terms.insert(r, signed);
    Radical { terms }
}

impl Ring for Radical {
    fn zero() -> Self {
        Radical { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Radical::from_gauss(GaussRat::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (r, c) in &rhs.terms {
            let entry = terms.entry(r.clone()).or_insert_with(GaussRat::zero);
            *entry = &*entry + c;
        }
        Radical::from_terms(terms)
    }

    fn neg(&self) -> Self {
        Radical { terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<BigUint, GaussRat> = BTreeMap::new();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &rhs.terms {
                // sqrt(r1)*sqrt(r2) = g*sqrt(u*v) with g = gcd(r1,r2);
                // u*v is squarefree because u, v are coprime and squarefree.
                let g = r1.gcd(r2);
                let rad = (r1 / &g) * (r2 / &g);
                let coeff = &(c1 * c2) * &GaussRat::from_rat(Rat::new(g.into(), 1.into()));
                let entry = terms.entry(rad).or_insert_with(GaussRat::zero);
                *entry = &*entry + &coeff;
            }
        }
        Radical::from_terms(terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_i64(v: i64) -> Self {
        Radical::from_gauss(GaussRat::from_i64(v))
    }

    fn div_int(&self, k: i64) -> Self {
        Radical {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c.div_int(k))).collect(),
        }
    }
}

impl From<GaussRat> for Radical {
    fn from(c: GaussRat) -> Self {
        Radical::from_gauss(c)
    }
}

impl From<Rat> for Radical {
    fn from(q: Rat) -> Self {
        Radical::from_rat(q)
    }
}

impl From<i64> for Radical {
    fn from(v: i64) -> Self {
        Radical::from_i64(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $ring_method:ident) => {
        impl $trait for Radical {
            type Output = Radical;
            fn $method(self, rhs: Radical) -> Radical {
                Ring::$ring_method(&self, &rhs)
            }
        }
        impl $trait<&Radical> for &Radical {
            type Output = Radical;
            fn $method(self, rhs: &Radical) -> Radical {
                Ring::$ring_method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Ring::neg(&self)
    }
}

impl Neg for &Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Ring::neg(self)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if r.is_one() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: u64) -> Radical {
        Radical::sqrt_int(n)
    }

    #[test]
    fn squarefree_split_examples() {
        let split = |m: u64| {
            let (k, r) = squarefree_split(&BigUint::from(m));
            (u64::try_from(&k).unwrap(), u64::try_from(&r).unwrap())
        };
        assert_eq!(split(1), (1, 1));
        assert_eq!(split(12), (2, 3));
        assert_eq!(split(18), (3, 2));
        assert_eq!(split(49), (7, 1));
        assert_eq!(split(60), (2, 15));
    }

    #[test]
    fn product_collapses_squares() {
        assert_eq!(&sqrt(2) * &sqrt(2), Radical::from(2));
        assert_eq!(&sqrt(2) * &sqrt(3), sqrt(6));
        // sqrt(6)*sqrt(10) = 2*sqrt(15)
        assert_eq!(&sqrt(6) * &sqrt(10), sqrt(15).scale(&GaussRat::from(2)));
    }

    #[test]
    fn sqrt_lift_examples() {
        // sqrt(1/3) = (1/3)*sqrt(3)
        let third = rat_sqrt_lift(&Rat::from((1, 3)), Sign::Plus);
        assert_eq!(third, Radical::term(GaussRat::new(Rat::from((1, 3)), Rat::zero()), 3));
        assert_eq!(&third * &third, Radical::from_rat(Rat::from((1, 3))));
        // sqrt(-9) = 3i
        assert_eq!(
            rat_sqrt_lift(&Rat::from(-9), Sign::Plus),
            Radical::from_gauss(GaussRat::from((0, 3)))
        );
        // sqrt(4) = 2
        assert_eq!(rat_sqrt_lift(&Rat::from(4), Sign::Plus), Radical::from(2));
        // zero is its own square root on either branch
        assert!(rat_sqrt_lift(&Rat::zero(), Sign::Minus).is_zero());
    }

    #[test]
    fn lift_squares_back_and_branches_negate() {
        let samples = [
            Rat::from((1, 3)),
            Rat::from((-5, 7)),
            Rat::from(8),
            Rat::from((-49, 4)),
            Rat::from((300, 11)),
        ];
        for q in &samples {
            let plus = rat_sqrt_lift(q, Sign::Plus);
            let minus = rat_sqrt_lift(q, Sign::Minus);
            assert_eq!(&plus * &plus, Radical::from_rat(q.clone()), "square of lift({q})");
            assert_eq!(minus, Ring::neg(&plus));
        }
    }

    #[test]
    fn single_term_inverse() {
        let x = Radical::term(GaussRat::from((2, 1)), 6);
        let inv = x.inv_single_term().unwrap();
        assert_eq!(&x * &inv, Radical::one());
        assert!((&sqrt(2) + &sqrt(3)).inv_single_term().is_err());
    }

    #[test]
    fn canonical_no_zero_terms() {
        let z = &sqrt(5) - &sqrt(5);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }
}
