//! Exact coefficient fields: the rationals and prime fields of word size.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::error::{Error, Result};

/// Runtime description of a field, used for reports and compatibility checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl core::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field. Elements are plain values; all arithmetic goes through the
/// field object so that prime fields can carry their modulus.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Ord + Send + Sync + 'static;

    fn kind(&self) -> FieldKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// The image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// Numerator and denominator of a representative (symmetric for prime fields).
    fn to_ratio(&self, a: &Self::Elem) -> (BigInt, BigInt);
    /// A random element. Rationals draw integers from `[-bound, bound]`.
    fn random(&self, rng: &mut dyn RngCore, bound: u64) -> Self::Elem;
    /// A square root when one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn characteristic(&self) -> u64 {
        match self.kind() {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => p,
        }
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc -= a * b`, the elimination kernel.
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(a, b));
    }

    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem) {
        *acc = self.add(acc, a);
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
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

    fn random_nonzero(&self, rng: &mut dyn RngCore, bound: u64) -> Self::Elem {
        loop {
            let x = self.random(rng, bound);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        let (n, d) = self.to_ratio(a);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{n}/{d}")
        }
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> FieldKind {
        FieldKind::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn sub_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc -= a * b;
    }
    fn add_assign(&self, acc: &mut BigRational, a: &BigRational) {
        *acc += a;
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn to_ratio(&self, a: &BigRational) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
    fn random(&self, rng: &mut dyn RngCore, bound: u64) -> BigRational {
        let span = 2 * bound + 1;
        let v = (rng.next_u64() % span) as i64 - bound as i64;
        self.from_i64(v)
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let (n, d) = (a.numer(), a.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
    }
}

/// The prime field `Z/pZ` for a prime `p < 2^63` other than 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p == 3 {
            return Err(Error::InvalidField(format!("characteristic {p} is not supported")));
        }
        if p >= 1 << 63 {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 63 bits")));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = v.mod_floor(&p);
        r.to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce_i128(t0))
    }
    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        let prod = ((*a as u128 * *b as u128) % self.p as u128) as u64;
        *acc = self.sub(acc, &prod);
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_big(den);
        let inv = self
            .inv(&d)
            .ok_or_else(|| Error::InvalidArgument(format!("denominator {den} vanishes modulo {}", self.p)))?;
        Ok(self.mul(&self.reduce_big(num), &inv))
    }
    fn to_ratio(&self, a: &u64) -> (BigInt, BigInt) {
        let v = if *a > self.p / 2 { -BigInt::from(self.p - a) } else { BigInt::from(*a) };
        (v, BigInt::one())
    }
    fn random(&self, rng: &mut dyn RngCore, _bound: u64) -> u64 {
        rng.next_u64() % self.p
    }
    /// Tonelli-Shanks.
    fn sqrt(&self, a: &u64) -> Option<u64> {
        let p = self.p;
        if *a == 0 {
            return Some(0);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|z| self.pow(z, (p - 1) / 2) == p - 1).expect("a non-residue exists");
        let mut m = s;
        let mut c = self.pow(&z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let b = self.pow(&c, 1 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Parses a decimal integer literal into a `BigInt`.
pub fn parse_bigint(text: &str) -> Option<BigInt> {
    BigInt::parse_bytes(text.as_bytes(), 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_characteristics() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(3).is_err());
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(65537).is_ok());
        assert!(PrimeField::new(1_000_003).is_ok());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(65537).unwrap();
        for a in [1u64, 2, 3, 1000, 65536] {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 32769);
        assert_eq!(f.format(&65536), "-1");
    }

    #[test]
    fn rational_formatting() {
        let q = Rationals;
        let h = q.from_ratio(&BigInt::from(2), &BigInt::from(-4)).unwrap();
        assert_eq!(q.format(&h), "-1/2");
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0u64..2000 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "{n}");
        }
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
    }

    #[test]
    fn square_roots() {
        let f = PrimeField::new(65537).unwrap();
        for a in [0u64, 1, 4, 9, 12345, 65536] {
            let sq = f.mul(&a, &a);
            let r = f.sqrt(&sq).unwrap();
            assert_eq!(f.mul(&r, &r), sq);
        }
        // 3 generates the multiplicative group mod 65537, so it is not a square.
        assert_eq!(f.sqrt(&3), None);
        let q = Rationals;
        let x = q.from_ratio(&BigInt::from(9), &BigInt::from(4)).unwrap();
        assert_eq!(q.sqrt(&x), Some(q.from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap()));
        assert_eq!(q.sqrt(&q.from_i64(2)), None);
        assert_eq!(q.sqrt(&q.from_i64(-4)), None);
    }
}
