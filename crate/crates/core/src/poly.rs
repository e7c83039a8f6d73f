//! Sparse polynomials, truncated operators and the contraction action.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

/// A sparse polynomial in `n` variables. The same type serves for elements of
/// the dual space `P = k[x]` and for polynomials in the operator variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    n: usize,
    field: F,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(n: usize, field: F) -> Self {
        Polynomial { n, field, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, field: F, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(n), c)
    }

    pub fn one(n: usize, field: F) -> Self {
        let c = field.one();
        Self::constant(n, field, c)
    }

    pub fn term(field: F, m: Monomial, c: F::Elem) -> Self {
        let n = m.nvars();
        let mut p = Self::zero(n, field);
        p.add_term(m, c);
        p
    }

    pub fn monomial(field: F, exps: &[u16]) -> Self {
        let c = field.one();
        Self::term(field, Monomial::from_exps(exps.to_vec()), c)
    }

    pub fn var(n: usize, field: F, i: usize) -> Self {
        let c = field.one();
        Self::term(field, Monomial::var(n, i), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F::Elem)>>(n: usize, field: F, it: I) -> Self {
        let mut p = Self::zero(n, field);
        for (m, c) in it {
            debug_assert_eq!(m.nvars(), n);
            p.add_term(m, c);
        }
        p
    }

    /// Builds a polynomial from small integer coefficients, handy in tests.
    pub fn from_int_terms(n: usize, field: F, terms: &[(i64, &[u16])]) -> Self {
        let mut p = Self::zero(n, field.clone());
        for (c, e) in terms {
            assert_eq!(e.len(), n);
            p.add_term(Monomial::from_exps(e.to_vec()), field.from_i64(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending degrevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, F::Elem> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                self.field.add_assign(v, &c);
                if self.field.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term, `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// The largest term in degrevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d);
        Self::from_terms(self.n, self.field.clone(), terms.map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Keeps only terms of degree `< d`.
    pub fn truncate(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() < d);
        Self::from_terms(self.n, self.field.clone(), terms.map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|f, c| f.neg(c))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        if self.field.is_zero(s) {
            return Self::zero(self.n, self.field.clone());
        }
        self.map_coeffs(|f, c| f.mul(c, s))
    }

    fn map_coeffs(&self, g: impl Fn(&F, &F::Elem) -> F::Elem) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), g(&self.field, c)));
        Self::from_terms(self.n, self.field.clone(), terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_below(other, usize::MAX)
    }

    /// Product with all terms of degree `>= bound` discarded.
    pub fn mul_below(&self, other: &Self, bound: usize) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Self::zero(self.n, self.field.clone());
        for (a, ca) in &self.terms {
            let da = a.degree();
            if da >= bound {
                continue;
            }
            for (b, cb) in &other.terms {
                if da + b.degree() >= bound {
                    continue;
                }
                out.add_term(a.mul(b), self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F::Elem) -> Self {
        let terms = self.terms.iter().map(|(a, ca)| (a.mul(m), self.field.mul(ca, c)));
        Self::from_terms(self.n, self.field.clone(), terms)
    }

    pub fn pow_below(&self, e: usize, bound: usize) -> Self {
        let mut acc = Self::one(self.n, self.field.clone()).truncate(bound);
        for _ in 0..e {
            acc = acc.mul_below(self, bound);
        }
        acc
    }

    /// Embeds into a ring with `k` extra trailing variables.
    pub fn extend_vars(&self, k: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.extend(k), c.clone()));
        Self::from_terms(self.n + k, self.field.clone(), terms)
    }

    /// Drops trailing variables, which must not occur.
    pub fn restrict_vars(&self, n: usize) -> Result<Self> {
        let mut out = Self::zero(n, self.field.clone());
        for (m, c) in &self.terms {
            if m.exps()[n..].iter().any(|&e| e > 0) {
                return Err(Error::DimensionMismatch { expected: n, found: self.n });
            }
            out.add_term(Monomial::from_exps(m.exps()[..n].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Renders the polynomial with the given variable prefix, e.g. `x1^2*x2`.
    pub fn to_string_with(&self, prefix: &str) -> String {
        let mut out = String::new();
        if self.terms.is_empty() {
            out.push('0');
            return out;
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (num, den) = self.field.to_ratio(c);
            let negative = num < num_bigint::BigInt::from(0);
            let abs_num = if negative { -num } else { num };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit = abs_num == 1.into() && den == 1.into();
            let mono = render_monomial(m, prefix);
            if mono.is_empty() {
                out.push_str(&abs_num.to_string());
                if den != 1.into() {
                    out.push('/');
                    out.push_str(&den.to_string());
                }
            } else {
                if !is_unit {
                    out.push_str(&abs_num.to_string());
                    if den != 1.into() {
                        out.push('/');
                        out.push_str(&den.to_string());
                    }
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn render_monomial(m: &Monomial, prefix: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(alloc::format!("{prefix}{}", i + 1)),
            _ => parts.push(alloc::format!("{prefix}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("x"))
    }
}

/// An element of `S/m^D`: a polynomial in the operator variables `α_i` whose
/// terms all have degree below `trunc`. `trunc == usize::MAX` means the
/// operator is an honest polynomial and nothing was discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator<F: Field> {
    poly: Polynomial<F>,
    trunc: usize,
}

pub const EXACT: usize = usize::MAX;

impl<F: Field> Operator<F> {
    pub fn new(poly: Polynomial<F>, trunc: usize) -> Self {
        let poly = if trunc == EXACT { poly } else { poly.truncate(trunc) };
        Operator { poly, trunc }
    }

    /// An operator with no truncation.
    pub fn exact(poly: Polynomial<F>) -> Self {
        Operator { poly, trunc: EXACT }
    }

    pub fn zero(n: usize, field: F, trunc: usize) -> Self {
        Operator { poly: Polynomial::zero(n, field), trunc }
    }

    pub fn one(n: usize, field: F, trunc: usize) -> Self {
        Self::new(Polynomial::one(n, field), trunc)
    }

    pub fn var(n: usize, field: F, i: usize, trunc: usize) -> Self {
        Self::new(Polynomial::var(n, field, i), trunc)
    }

    pub fn monomial(field: F, exps: &[u16], trunc: usize) -> Self {
        Self::new(Polynomial::monomial(field, exps), trunc)
    }

    pub fn poly(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<F> {
        self.poly
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn field(&self) -> &F {
        self.poly.field()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn order(&self) -> Option<usize> {
        self.poly.order()
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        Self::new(self.poly.clone(), trunc.min(self.trunc))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.poly.add(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.poly.sub(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn neg(&self) -> Self {
        Operator { poly: self.poly.neg(), trunc: self.trunc }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Operator { poly: self.poly.scale(c), trunc: self.trunc }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        Operator { poly: self.poly.mul_below(&other.poly, trunc), trunc }
    }

    pub fn pow(&self, e: usize) -> Self {
        Operator { poly: self.poly.pow_below(e, self.trunc), trunc: self.trunc }
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> F::Elem {
        self.poly.coeff(&Monomial::one(self.nvars()))
    }

    /// Terms of degree exactly one, as a coefficient vector.
    pub fn linear_part(&self) -> Vec<F::Elem> {
        let n = self.nvars();
        (0..n).map(|i| self.poly.coeff(&Monomial::var(n, i))).collect()
    }
}

impl<F: Field> fmt::Display for Operator<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.to_string_with("a"))
    }
}

/// Contraction `σ ⌟ f` with `α^b ⌟ x^a = x^{a-b}` when `a >= b` and zero otherwise.
pub fn contract<F: Field>(sigma: &Operator<F>, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    sigma.poly.check_compatible(f)?;
    if let Some(d) = f.degree() {
        if sigma.trunc != EXACT && sigma.trunc <= d {
            return Err(Error::InsufficientPrecision { needed: d + 1, available: sigma.trunc });
        }
    }
    Ok(contract_poly(&sigma.poly, f))
}

/// Contraction by an operator given as a plain polynomial in the `α_i`.
pub fn contract_poly<F: Field>(sigma: &Polynomial<F>, f: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let mut out = Polynomial::zero(f.nvars(), field.clone());
    for (b, cb) in sigma.terms() {
        for (a, ca) in f.terms() {
            if let Some(q) = b.quotient_of(a) {
                out.add_term(q, field.mul(cb, ca));
            }
        }
    }
    out
}

/// Contraction by a single monomial `α^b`.
pub fn contract_monomial<F: Field>(b: &Monomial, f: &Polynomial<F>) -> Polynomial<F> {
    let terms = f.terms().filter_map(|(a, c)| b.quotient_of(a).map(|q| (q, c.clone())));
    Polynomial::from_terms(f.nvars(), f.field().clone(), terms)
}

/// The pairing `⟨σ, f⟩`, the constant term of `σ ⌟ f`.
pub fn pairing<F: Field>(sigma: &Polynomial<F>, f: &Polynomial<F>) -> F::Elem {
    let field = f.field();
    let mut acc = field.zero();
    let (small, large) = if sigma.len() <= f.len() { (sigma, f) } else { (f, sigma) };
    for (m, c) in small.terms() {
        let d = large.coeff(m);
        if !field.is_zero(&d) {
            acc = field.add(&acc, &field.mul(c, &d));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn p(n: usize, t: &[(i64, &[u16])]) -> Polynomial<Rationals> {
        Polynomial::from_int_terms(n, Rationals, t)
    }

    #[test]
    fn contraction_examples() {
        let a1sq = Operator::exact(p(2, &[(1, &[2, 0])]));
        let f = p(2, &[(1, &[3, 1])]);
        assert_eq!(contract(&a1sq, &f).unwrap(), p(2, &[(1, &[1, 1])]));

        let f = p(2, &[(1, &[6, 0]), (1, &[4, 1])]);
        let a2sq = Operator::exact(p(2, &[(1, &[0, 2])]));
        assert!(contract(&a2sq, &f).unwrap().is_zero());
        let g = Operator::exact(p(2, &[(1, &[5, 0]), (-1, &[3, 1])]));
        assert!(contract(&g, &f).unwrap().is_zero());

        let a1a2 = Operator::exact(p(2, &[(1, &[1, 1])]));
        assert!(contract(&a1a2, &p(2, &[(1, &[3, 0])])).unwrap().is_zero());
    }

    #[test]
    fn truncated_operator_is_rejected_on_high_degree_input() {
        let op = Operator::new(p(1, &[(1, &[1])]), 3);
        assert!(matches!(contract(&op, &p(1, &[(1, &[3])])), Err(Error::InsufficientPrecision { .. })));
    }

    #[test]
    fn rendering() {
        let f = p(2, &[(1, &[6, 0]), (-1, &[2, 2]), (2, &[0, 3])]);
        assert_eq!(f.to_string(), "x1^6 - x1^2*x2^2 + 2*x2^3");
        assert_eq!(Polynomial::<Rationals>::zero(2, Rationals).to_string(), "0");
        let half = Rationals.from_ratio(&1.into(), &2.into()).unwrap();
        let g = Polynomial::constant(1, Rationals, half.clone()).add(&Polynomial::term(
            Rationals,
            Monomial::var(1, 0),
            half,
        ));
        assert_eq!(g.to_string(), "1/2*x1 + 1/2");
    }
}
