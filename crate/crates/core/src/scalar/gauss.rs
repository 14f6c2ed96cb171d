use crate::error::{Error, Result};
use crate::ring::{Field, Ring};
use crate::scalar::Rat;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Gaussian rational: an element `re + im*i` of Q(i), with i^2 = -1.
///
/// i is fixed as the unit with `im = 1`; all computations that need "one of
/// the two square roots of -1" use this one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: Ring::neg(&self.im) }
    }

    /// re^2 + im^2, the field norm down to Q.
    pub fn norm(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// The rational part, provided the imaginary part vanishes.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.re)
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }
    fn one() -> Self {
        GaussRat { re: Rat::one(), im: Rat::zero() }
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn neg(&self) -> Self {
        GaussRat { re: Ring::neg(&self.re), im: Ring::neg(&self.im) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // rational-only operands are by far the common case in matrix kernels
        if self.im.is_zero() {
            return GaussRat { re: &self.re * &rhs.re, im: &self.re * &rhs.im };
        }
        if rhs.im.is_zero() {
            return GaussRat { re: &self.re * &rhs.re, im: &self.im * &rhs.re };
        }
        GaussRat {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        GaussRat::from_rat(Rat::from_int(v))
    }
    fn div_int(&self, k: i64) -> Self {
        GaussRat { re: self.re.div_int(k), im: self.im.div_int(k) }
    }
}

impl Field for GaussRat {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!Ring::is_zero(&n), "inverse of zero");
        GaussRat { re: &self.re / &n, im: &Ring::neg(&self.im) / &n }
    }
}

impl From<Rat> for GaussRat {
    fn from(re: Rat) -> Self {
        GaussRat::from_rat(re)
    }
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::from_i64(v)
    }
}

impl From<(i64, i64)> for GaussRat {
    /// `(a, b)` is read as `a + b*i`.
    fn from((a, b): (i64, i64)) -> Self {
        GaussRat::new(Rat::from(a), Rat::from(b))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $ring_method:ident) => {
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                Ring::$ring_method(&self, &rhs)
            }
        }
        impl $trait<&GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                Ring::$ring_method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Div<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        Field::div(self, rhs)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        Ring::neg(&self)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        Ring::neg(self)
    }
}

impl fmt::Display for GaussRat {
    /// Canonical textual form `a/b+c/d*i` (or `a/b-c/d*i` for negative
    /// imaginary part); both parts are always present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits `a/b+c/d*i` (either sign, either part optional) into parts.
impl FromStr for GaussRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Find the split point: a '+' or '-' that is not the leading sign.
        let body = &s[1..];
        let split = body.find(['+', '-']).map(|p| p + 1);
        let (re_str, im_str) = match split {
            Some(p) => (&s[..p], &s[p..]),
            None => (s, ""),
        };
        // A lone `c/d*i` with no real part lands entirely in re_str.
        if im_str.is_empty() && (re_str.ends_with("*i") || re_str.ends_with('i')) {
            return Ok(GaussRat::new(Rat::zero(), parse_im(re_str)?));
        }
        let re: Rat = re_str.parse()?;
        let im = if im_str.is_empty() { Rat::zero() } else { parse_im(im_str)? };
        Ok(GaussRat::new(re, im))
    }
}

fn parse_im(s: &str) -> Result<Rat> {
    let t = s
        .strip_suffix("*i")
        .or_else(|| s.strip_suffix('i'))
        .ok_or_else(|| Error::Parse(format!("imaginary part {s:?} must end in *i")))?;
    let t = t.trim();
    match t {
        "" | "+" => Ok(Rat::one()),
        "-" => Ok(Ring::neg(&Rat::one())),
        _ => t.parse(),
    }
}
