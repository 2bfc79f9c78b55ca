//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! Elements carry no field tag; every operation goes through a field value,
//! which plays the role of the arithmetic context.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::AlgebraError;

/// Arithmetic context for an exact field.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of a rational number; `None` when the denominator vanishes in the field.
    fn from_rational(&self, r: &BigRational) -> Option<Self::Elem>;
    /// Uniform element for prime fields, small integer for the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// A square root when one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Text form used by the polynomial printer (integers or `a/b`).
    fn format(&self, a: &Self::Elem) -> String;
    /// Whether the printed form needs a leading minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    /// `"q"` or `"gf:<p>"`.
    fn descriptor(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a - c * b`, the inner step of every reduction.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, r: &BigRational) -> Option<BigRational> {
        Some(r.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-30..=30))
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = a.numer().sqrt();
        let d = a.denom().sqrt();
        if &(&n * &n) == a.numer() && &(&d * &d) == a.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "q".to_string()
    }
}

/// Smallest modulus accepted by [`PrimeField::new`].
pub const MIN_PRIME: u64 = 1000;
/// Moduli stay below this bound so products fit in a `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// GF(p) with residues stored as `u32` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// GF(p) for a prime in the working range (1000, 2^31).
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p <= MIN_PRIME || p >= MAX_PRIME {
            return Err(AlgebraError::BadModulus(p));
        }
        Self::with_small_prime(p)
    }

    /// GF(p) for any odd prime below 2^31. Small primes are useful for
    /// hand-checkable tests and for exercising the bad-prime retry path.
    pub fn with_small_prime(p: u64) -> Result<Self, AlgebraError> {
        if !(3..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Uniformly random prime in `(lo, hi)`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, lo: u64, hi: u64) -> Self {
        loop {
            let c = rng.gen_range(lo + 1..hi) | 1;
            if c < hi && is_prime(c) {
                return PrimeField { p: c };
            }
        }
    }

    /// Residue of an arbitrary integer.
    pub fn reduce_bigint(&self, n: &BigInt) -> u32 {
        let m = BigInt::from(self.p);
        n.mod_floor(&m).to_u32().expect("residue fits")
    }

    fn symmetric(&self, a: u32) -> i64 {
        let a = a as i64;
        if a > (self.p as i64) / 2 {
            a - self.p as i64
        } else {
            a
        }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p - *b as u64) as u32
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.p - *a as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_rational(&self, r: &BigRational) -> Option<u32> {
        let d = self.reduce_bigint(r.denom());
        let n = self.reduce_bigint(r.numer());
        self.inv(&d).map(|di| self.mul(&n, &di))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p) as u32
    }
    fn sqrt(&self, a: &u32) -> Option<u32> {
        tonelli_shanks(*a as u64, self.p).map(|r| r as u32)
    }
    fn format(&self, a: &u32) -> String {
        self.symmetric(*a).to_string()
    }
    fn is_negative(&self, a: &u32) -> bool {
        self.symmetric(*a) < 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> String {
        format!("gf:{}", self.p)
    }
    #[inline]
    fn sub_mul(&self, a: &u32, c: &u32, b: &u32) -> u32 {
        let prod = (*c as u64 * *b as u64) % self.p;
        let a = *a as u64;
        (if a >= prod { a - prod } else { a + self.p - prod }) as u32
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483649));
    }

    #[test]
    fn modulus_range_is_enforced() {
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::new(1009).is_ok());
        assert!(PrimeField::new(1001).is_err());
        assert!(PrimeField::with_small_prime(101).is_ok());
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn inverse_and_sqrt() {
        let f = PrimeField::new(1_000_003).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = f.random_nonzero(&mut rng);
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            let sq = f.mul(&a, &a);
            let r = f.sqrt(&sq).unwrap();
            assert_eq!(f.mul(&r, &r), sq);
        }
        // 1_000_003 = 3 mod 4, so -1 is not a square
        assert!(f.sqrt(&f.neg(&1)).is_none());
        let g = PrimeField::new(1_000_033).unwrap(); // 1 mod 4 branch
        let r = g.sqrt(&g.from_i64(-1)).unwrap();
        assert_eq!(g.mul(&r, &r), g.from_i64(-1));
    }

    #[test]
    fn rational_reduction() {
        let f = PrimeField::new(1009).unwrap();
        let r = BigRational::new(BigInt::from(3), BigInt::from(4));
        let x = f.from_rational(&r).unwrap();
        assert_eq!(f.mul(&x, &4), 3);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(1009));
        assert!(f.from_rational(&bad).is_none());
        assert_eq!(f.format(&f.from_i64(-5)), "-5");
    }

    #[test]
    fn rational_sqrt() {
        let q = Rationals;
        let a = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(q.sqrt(&a), Some(BigRational::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(q.sqrt(&q.from_i64(2)), None);
        assert_eq!(q.format(&BigRational::new(BigInt::from(-6), BigInt::from(4))), "-3/2");
    }
}
