//! Dense univariate polynomials and root finding in the base field.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::field::{Field, FieldKind};

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        UniPoly { field, coeffs: vec![one] }
    }

    /// `T − r`.
    pub fn linear(field: F, r: &F::Elem) -> Self {
        let c = vec![field.neg(r), field.one()];
        Self::new(field, c)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n).map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))).collect();
        Self::new(f.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        self.add(&Self::new(f.clone(), other.coeffs.iter().map(|c| f.neg(c)).collect()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                f.add_assign(&mut c[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), c)
    }

    pub fn monic(&self) -> Self {
        let f = &self.field;
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = f.inv(lc).expect("nonzero leading coefficient");
                Self::new(f.clone(), self.coeffs.iter().map(|c| f.mul(c, &inv)).collect())
            }
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(&d.coeffs[dd]).expect("nonzero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(f.clone()), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                f.sub_mul_assign(&mut r[k + j], &c, dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(f.clone(), q), Self::new(f.clone(), r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.field.clone()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in the base field, sorted.
    pub fn roots(&self) -> Vec<F::Elem> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = match self.field.kind() {
            FieldKind::Prime(p) => self.roots_mod_p(p),
            FieldKind::Rationals => self.rational_roots(),
        };
        out.sort();
        out.dedup();
        out
    }

    /// Splits off `gcd(self, T^p − T)` and then separates its linear
    /// factors by random equal-degree splitting.
    fn roots_mod_p(&self, p: u64) -> Vec<F::Elem> {
        let f = &self.field;
        let m = self.monic();
        let t = Self::new(f.clone(), vec![f.zero(), f.one()]);
        let tp = t.pow_mod(p, &m);
        let g = m.gcd(&tp.sub(&t));
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let mut out = Vec::new();
        let mut stack = vec![g];
        while let Some(h) = stack.pop() {
            match h.degree() {
                None | Some(0) => {}
                Some(1) => out.push(f.neg(&h.coeffs[0])),
                Some(_) => loop {
                    let a = f.random(&mut rng, 0);
                    let shifted = Self::new(f.clone(), vec![a, f.one()]);
                    let w = shifted.pow_mod((p - 1) / 2, &h).sub(&Self::one(f.clone()));
                    let d = h.gcd(&w);
                    let dd = d.degree().unwrap_or(0);
                    if dd > 0 && dd < h.degree().unwrap() {
                        let (q, _) = h.div_rem(&d);
                        stack.push(d);
                        stack.push(q.monic());
                        break;
                    }
                },
            }
        }
        out
    }

    /// Rational root test on the integer polynomial with cleared
    /// denominators.
    fn rational_roots(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let ratios: Vec<(BigInt, BigInt)> = self.coeffs.iter().map(|c| f.to_ratio(c)).collect();
        let lcm = ratios.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        let mut ints: Vec<BigInt> = ratios.iter().map(|(n, d)| n * (&lcm / d)).collect();
        let mut out = Vec::new();
        // Zero roots first.
        let lead_zero = ints.iter().take_while(|c| c.is_zero()).count();
        if lead_zero > 0 {
            out.push(f.zero());
            ints.drain(..lead_zero);
        }
        if ints.len() < 2 {
            return out;
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let (Some(ps), Some(qs)) = (divisors(&a0), divisors(&an)) else {
            return out;
        };
        for pnum in &ps {
            for qden in &qs {
                if !pnum.gcd(qden).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let num = pnum * sign;
                    // Horner with integers: Σ c_i num^i den^{k−i}.
                    let k = ints.len() - 1;
                    let mut acc = BigInt::zero();
                    let mut den_pow = BigInt::one();
                    let mut terms = Vec::with_capacity(k + 1);
                    for _ in 0..=k {
                        terms.push(den_pow.clone());
                        den_pow *= qden;
                    }
                    let mut num_pow = BigInt::one();
                    for (i, c) in ints.iter().enumerate() {
                        acc += c * &num_pow * &terms[k - i];
                        num_pow *= &num;
                    }
                    if acc.is_zero() {
                        if let Ok(r) = f.from_ratio(&num, qden) {
                            out.push(r);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Positive divisors of `n > 0` by trial division; `None` when `n` is too
/// large to factor this way.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    use num_traits::ToPrimitive;
    let v = n.to_u64()?;
    if v == 0 || v > 1 << 40 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d * d != v {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}
