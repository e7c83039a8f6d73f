//! Automorphisms of `S/m^D` given by the images of the variables, and the
//! induced dual maps on polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{pairing, Operator, Polynomial, EXACT};

/// A substitution `α_i ↦ φ(α_i)` truncated at degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution<F: Field> {
    field: F,
    images: Vec<Polynomial<F>>,
    trunc: usize,
}

impl<F: Field> Substitution<F> {
    /// Validates that every image has order at least one and that the linear
    /// parts form an invertible matrix.
    pub fn new(field: F, images: Vec<Polynomial<F>>, trunc: usize) -> Result<Self> {
        let n = images.len();
        for im in &images {
            if im.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: im.nvars() });
            }
            if im.field() != &field {
                return Err(Error::FieldMismatch);
            }
        }
        if trunc == 0 || trunc == EXACT {
            return Err(Error::InvalidArgument("substitutions need a finite truncation".into()));
        }
        let sub = Self::new_unchecked(field, images, trunc);
        if sub.images.iter().any(|im| im.order() == Some(0)) {
            return Err(Error::NotAnAutomorphism);
        }
        if sub.linear_matrix().inverse().is_none() {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(sub)
    }

    fn new_unchecked(field: F, images: Vec<Polynomial<F>>, trunc: usize) -> Self {
        let images = images.into_iter().map(|p| p.truncate(trunc)).collect();
        Substitution { field, images, trunc }
    }

    pub fn identity(n: usize, field: F, trunc: usize) -> Self {
        let images = (0..n).map(|i| Polynomial::var(n, field.clone(), i)).collect();
        Self::new_unchecked(field, images, trunc)
    }

    /// The identity except `α_i ↦ image`.
    pub fn elementary(n: usize, field: F, i: usize, image: Polynomial<F>, trunc: usize) -> Result<Self> {
        let mut images: Vec<_> = (0..n).map(|j| Polynomial::var(n, field.clone(), j)).collect();
        images[i] = image;
        Self::new(field, images, trunc)
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn image(&self, i: usize) -> &Polynomial<F> {
        &self.images[i]
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        Self::new_unchecked(self.field.clone(), self.images.clone(), trunc)
    }

    /// Row `i` holds the linear coefficients of `φ(α_i)`.
    pub fn linear_matrix(&self) -> Matrix<F> {
        let n = self.nvars();
        let rows = self.images.iter().map(|im| (0..n).map(|j| im.coeff(&Monomial::var(n, j))).collect()).collect();
        Matrix::from_rows(self.field.clone(), n, rows)
    }

    /// `σ(φ(α))`, truncated at the smaller of the two truncations.
    pub fn apply(&self, sigma: &Operator<F>) -> Result<Operator<F>> {
        if sigma.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: sigma.nvars() });
        }
        if sigma.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let trunc = self.trunc.min(sigma.trunc());
        let mut cache = ImageCache::new(self, trunc);
        Ok(Operator::new(cache.apply(sigma.poly()), trunc))
    }

    /// Applies the substitution to many operators, sharing the image cache.
    pub fn apply_all(&self, sigmas: &[Polynomial<F>], trunc: usize) -> Vec<Polynomial<F>> {
        let mut cache = ImageCache::new(self, trunc.min(self.trunc));
        sigmas.iter().map(|s| cache.apply(s)).collect()
    }

    /// The composite `α ↦ next(self(α))`, i.e. apply `self` first.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if next.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: next.nvars() });
        }
        let trunc = self.trunc.min(next.trunc);
        let images = next.apply_all(&self.images, trunc);
        Ok(Self::new_unchecked(self.field.clone(), images, trunc))
    }

    /// The inverse automorphism modulo `m^trunc`.
    ///
    /// Writing `φ = L·α + N(α)` with `N` of order two, the inverse solves
    /// `ψ = L⁻¹(α − N(ψ))`; each round fixes one more degree.
    pub fn invert(&self) -> Result<Self> {
        let n = self.nvars();
        let f = &self.field;
        let linv = self.linear_matrix().inverse().ok_or(Error::NotAnAutomorphism)?;
        let nonlinear: Vec<Polynomial<F>> = self
            .images
            .iter()
            .map(|im| {
                let lin = im.homogeneous_part(1);
                im.sub(&lin)
            })
            .collect();
        let combine = |rhs: &[Polynomial<F>]| -> Vec<Polynomial<F>> {
            (0..n)
                .map(|j| {
                    let mut acc = Polynomial::zero(n, f.clone());
                    for (i, r) in rhs.iter().enumerate() {
                        let c = linv.get(j, i);
                        if !f.is_zero(c) {
                            acc = acc.add(&r.scale(c));
                        }
                    }
                    acc
                })
                .collect()
        };
        let vars: Vec<Polynomial<F>> = (0..n).map(|i| Polynomial::var(n, f.clone(), i)).collect();
        let mut psi = Self::new_unchecked(f.clone(), combine(&vars), self.trunc);
        for _ in 0..self.trunc {
            let n_of_psi = psi.apply_all(&nonlinear, self.trunc);
            let rhs: Vec<_> = vars.iter().zip(&n_of_psi).map(|(v, q)| v.sub(q)).collect();
            let next = Self::new_unchecked(f.clone(), combine(&rhs), self.trunc);
            if next == psi {
                break;
            }
            psi = next;
        }
        debug_assert!(self.then(&psi).map(|c| c == Self::identity(n, f.clone(), self.trunc)).unwrap_or(false));
        Ok(psi)
    }
}

/// Memoized images of monomials under a substitution.
struct ImageCache<'a, F: Field> {
    sub: &'a Substitution<F>,
    trunc: usize,
    cache: BTreeMap<Monomial, Polynomial<F>>,
}

impl<'a, F: Field> ImageCache<'a, F> {
    fn new(sub: &'a Substitution<F>, trunc: usize) -> Self {
        ImageCache { sub, trunc, cache: BTreeMap::new() }
    }

    fn image(&mut self, m: &Monomial) -> Polynomial<F> {
        if let Some(p) = self.cache.get(m) {
            return p.clone();
        }
        let n = m.nvars();
        let field = self.sub.field.clone();
        let out = match (0..n).find(|&i| m.exp(i) > 0) {
            None => Polynomial::one(n, field).truncate(self.trunc),
            Some(i) => {
                let rest = self.image(&m.div_var(i).unwrap());
                rest.mul_below(&self.sub.images[i], self.trunc)
            }
        };
        self.cache.insert(m.clone(), out.clone());
        out
    }

    fn apply(&mut self, sigma: &Polynomial<F>) -> Polynomial<F> {
        let f = self.sub.field.clone();
        let mut acc = Polynomial::zero(sigma.nvars(), f);
        for (m, c) in sigma.terms() {
            if m.degree() >= self.trunc {
                continue;
            }
            acc = acc.add(&self.image(m).scale(c));
        }
        acc
    }
}

/// The dual map on polynomials: the unique `f'` with
/// `⟨φ(σ), f'⟩ = ⟨σ, f⟩` for all `σ` of degree at most `deg f`.
/// Consequently `Ann(f') = φ(Ann(f))`.
pub fn dual_substitution<F: Field>(phi: &Substitution<F>, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    let n = phi.nvars();
    if f.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.nvars() });
    }
    if f.field() != phi.field() {
        return Err(Error::FieldMismatch);
    }
    let Some(s) = f.degree() else {
        return Ok(f.clone());
    };
    if phi.trunc() < s + 1 {
        return Err(Error::InsufficientPrecision { needed: s + 1, available: phi.trunc() });
    }
    // f'_c = ⟨φ(σ_c), f'⟩ where φ(σ_c) = α^c, so σ_c = ψ(α^c) with ψ = φ⁻¹.
    let psi = phi.invert()?.with_trunc(s + 1);
    let mut cache = ImageCache::new(&psi, s + 1);
    let field = f.field().clone();
    let mut out = Polynomial::zero(n, field);
    for d in 0..=s {
        for c in monomials_of_degree(n, d) {
            let v = pairing(&cache.image(&c), f);
            out.add_term(c, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use alloc::vec;

    fn p(n: usize, t: &[(i64, &[u16])]) -> Polynomial<Rationals> {
        Polynomial::from_int_terms(n, Rationals, t)
    }

    #[test]
    fn inverse_of_quadratic_shift() {
        let phi = Substitution::elementary(2, Rationals, 1, p(2, &[(1, &[0, 1]), (1, &[2, 0])]), 8).unwrap();
        let psi = phi.invert().unwrap();
        assert_eq!(psi.image(1), &p(2, &[(1, &[0, 1]), (-1, &[2, 0])]));
        assert_eq!(psi.image(0), &p(2, &[(1, &[1, 0])]));
    }

    #[test]
    fn inverse_of_scaling() {
        let phi = Substitution::elementary(1, Rationals, 0, p(1, &[(2, &[1])]), 4).unwrap();
        let psi = phi.invert().unwrap();
        let half = Rationals.from_ratio(&1.into(), &2.into()).unwrap();
        assert_eq!(psi.image(0), &Polynomial::term(Rationals, Monomial::var(1, 0), half));
    }

    #[test]
    fn expansion_of_square() {
        let phi = Substitution::elementary(2, Rationals, 1, p(2, &[(1, &[0, 1]), (1, &[2, 0])]), 8).unwrap();
        let sq = Operator::new(p(2, &[(1, &[0, 2])]), 8);
        let out = phi.apply(&sq).unwrap();
        assert_eq!(out.poly(), &p(2, &[(1, &[0, 2]), (2, &[2, 1]), (1, &[4, 0])]));
    }

    #[test]
    fn singular_linear_part_is_rejected() {
        let r = Substitution::new(Rationals, vec![p(2, &[(1, &[1, 0])]), p(2, &[(1, &[2, 0])])], 4);
        assert_eq!(r.unwrap_err(), Error::NotAnAutomorphism);
        let r = Substitution::new(Rationals, vec![p(1, &[(1, &[1]), (1, &[0])])], 4);
        assert_eq!(r.unwrap_err(), Error::NotAnAutomorphism);
    }

    #[test]
    fn dual_of_standard_form_example() {
        let phi = Substitution::elementary(2, Rationals, 1, p(2, &[(1, &[0, 1]), (1, &[2, 0])]), 8).unwrap();
        let f = p(2, &[(1, &[6, 0]), (1, &[4, 1])]);
        let g = dual_substitution(&phi, &f).unwrap();
        assert_eq!(g, p(2, &[(1, &[6, 0]), (-1, &[2, 2]), (2, &[0, 3])]));
        let short = phi.with_trunc(6);
        assert!(matches!(dual_substitution(&short, &f), Err(Error::InsufficientPrecision { .. })));
    }
}
