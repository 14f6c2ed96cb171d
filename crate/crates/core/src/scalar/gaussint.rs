//! Gaussian integer arithmetic used for enumerating candidate roots in Q(i).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Element of Z[i].
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        GaussInt::from_i64(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::from_i64(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn norm(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im).to_biguint().unwrap()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    pub fn units() -> [GaussInt; 4] {
        [
            GaussInt::from_i64(1, 0),
            GaussInt::from_i64(-1, 0),
            GaussInt::from_i64(0, 1),
            GaussInt::from_i64(0, -1),
        ]
    }

    /// Euclidean division with remainder of norm at most half the divisor's.
    pub fn div_rem(&self, rhs: &Self) -> (GaussInt, GaussInt) {
        assert!(!rhs.is_zero(), "division by zero Gaussian integer");
        let n = BigInt::from(rhs.norm());
        let prod = self.mul(&rhs.conj());
        let q = GaussInt::new(round_div(&prod.re, &n), round_div(&prod.im, &n));
        let r = self.sub(&q.mul(rhs));
        (q, r)
    }

    pub fn divides(&self, z: &Self) -> bool {
        let (_, r) = z.div_rem(self);
        r.is_zero()
    }

    pub fn gcd(&self, rhs: &Self) -> GaussInt {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Prime factorization up to units. The unit left over after dividing out
    /// all prime powers is discarded.
    pub fn factor(&self) -> Vec<(GaussInt, u32)> {
        assert!(!self.is_zero(), "cannot factor zero");
        let mut z = self.clone();
        let mut out = Vec::new();
        for (p, _) in factor_biguint(&z.norm()) {
            for prime in gaussian_primes_above(&p) {
                let mut e = 0u32;
                loop {
                    let (q, r) = z.div_rem(&prime);
                    if r.is_zero() {
                        z = q;
                        e += 1;
                    } else {
                        break;
                    }
                }
                if e > 0 {
                    out.push((prime, e));
                }
            }
        }
        debug_assert!(z.is_unit());
        out
    }

    /// All divisors up to units (one representative per associate class).
    pub fn divisors_up_to_units(&self) -> Vec<GaussInt> {
        let factors = self.factor();
        let mut divisors = vec![GaussInt::one()];
        for (p, e) in &factors {
            let mut next = Vec::with_capacity(divisors.len() * (*e as usize + 1));
            for d in &divisors {
                let mut power = d.clone();
                next.push(power.clone());
                for _ in 0..*e {
                    power = power.mul(p);
                    next.push(power.clone());
                }
            }
            divisors = next;
        }
        divisors
    }
}

/// Nearest-integer quotient a/b: floor((2a+b)/2b) after normalizing b > 0.
/// Keeps both remainder coordinates within |b|/2, the Euclidean bound.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (num, den) = if b.is_negative() { (-a, -b) } else { (a.clone(), b.clone()) };
    (num * &two + &den).div_floor(&(den * &two))
}

/// Trial-division factorization; desk-scale inputs only.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0u32;
        loop {
            let (q, r) = n.div_rem(&d);
            if r.is_zero() {
                n = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// The Gaussian primes above a rational prime p: (1+i) for 2, a conjugate
/// pair for p = 1 mod 4, and p itself for p = 3 mod 4.
fn gaussian_primes_above(p: &BigUint) -> Vec<GaussInt> {
    let two = BigUint::from(2u32);
    let four = BigUint::from(4u32);
    if *p == two {
        return vec![GaussInt::from_i64(1, 1)];
    }
    if p % &four == BigUint::from(3u32) {
        return vec![GaussInt::new(BigInt::from(p.clone()), BigInt::zero())];
    }
    let x = sqrt_minus_one_mod(p);
    let pi = GaussInt::new(BigInt::from(p.clone()), BigInt::zero())
        .gcd(&GaussInt::new(BigInt::from(x), BigInt::one()));
    let pi_bar = pi.conj();
    vec![pi, pi_bar]
}

/// A square root of -1 modulo a prime p = 1 mod 4, via x = a^((p-1)/4) for
/// the first non-residue a.
fn sqrt_minus_one_mod(p: &BigUint) -> BigUint {
    let p_int = p.clone();
    let one = BigUint::one();
    let exp = (&p_int - &one) / BigUint::from(4u32);
    let target = &p_int - &one; // -1 mod p
    let mut a = BigUint::from(2u32);
    loop {
        let x = a.modpow(&exp, &p_int);
        if (&x * &x) % &p_int == target {
            return x;
        }
        a += 1u32;
        assert!(a < p_int, "no sqrt(-1) mod {p_int}; input not a 1 mod 4 prime?");
    }
}
