//! Ideals of `S = k[[α_1..α_n]]` represented modulo `m^D`.
//!
//! An ideal is stored as the canonical reduced echelon basis of its image in
//! `S_{<D}`, with coordinates numbered lowest degree first. Every ideal also
//! carries a completeness bound `c` with `m^c ⊆ I`; as long as `c ≤ D` the
//! truncation loses nothing. Operations either produce a certified pair
//! `(D, c)` or fail.

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::index::{ColumnOrder, MonomialIndex};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{contract_monomial, Operator, Polynomial};
use crate::substitution::Substitution;

#[derive(Clone, Debug)]
pub struct TruncatedIdeal<F: Field> {
    field: F,
    index: Arc<MonomialIndex>,
    complete: usize,
    basis: Echelon<F>,
}

impl<F: Field> PartialEq for TruncatedIdeal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.index.nvars() == other.index.nvars()
            && self.index.bound() == other.index.bound()
            && self.basis == other.basis
    }
}

impl<F: Field> Eq for TruncatedIdeal<F> {}

pub(crate) fn local_index(n: usize, trunc: usize) -> Result<Arc<MonomialIndex>> {
    Ok(Arc::new(MonomialIndex::new(n, trunc, ColumnOrder::LowDegreeFirst)?))
}

impl<F: Field> TruncatedIdeal<F> {
    fn from_parts(field: F, index: Arc<MonomialIndex>, complete: usize, mut basis: Echelon<F>) -> Self {
        basis.canonicalize();
        TruncatedIdeal { field, index, complete, basis }
    }

    /// The whole ring.
    pub fn unit(n: usize, field: F, trunc: usize) -> Result<Self> {
        Self::max_ideal_power(n, field, 0, trunc)
    }

    /// `m^k`.
    pub fn max_ideal_power(n: usize, field: F, k: usize, trunc: usize) -> Result<Self> {
        let index = local_index(n, trunc)?;
        let mut e = Echelon::new(field.clone(), index.len());
        for c in index.cols_in_degrees(k, trunc) {
            e.insert_unit(c);
        }
        Ok(Self::from_parts(field, index, k.min(trunc), e))
    }

    /// The ideal generated by `gens`, closed under multiplication by the
    /// variables below degree `trunc`. The completeness bound is certified by
    /// checking that every monomial of some degree `c < trunc` lies in the span
    /// (Nakayama). When no such degree exists the result stands for
    /// `(gens) + m^D` and gets `c = D`.
    pub fn from_generators(n: usize, field: F, gens: &[Polynomial<F>], trunc: usize) -> Result<Self> {
        let index = local_index(n, trunc)?;
        let vecs: Vec<_> = gens.iter().map(|g| index.vector_truncated(g)).collect();
        Self::closure(field, index, vecs, None)
    }

    /// Like `from_generators` but with a bound `c` already known to satisfy
    /// `m^c ⊆ (gens)`, for instance from degree considerations.
    pub fn from_generators_with_bound(
        n: usize,
        field: F,
        gens: &[Polynomial<F>],
        trunc: usize,
        bound: usize,
    ) -> Result<Self> {
        let index = local_index(n, trunc)?;
        let vecs: Vec<_> = gens.iter().map(|g| index.vector_truncated(g)).collect();
        Self::closure(field, index, vecs, Some(bound))
    }

    fn closure(
        field: F,
        index: Arc<MonomialIndex>,
        gens: Vec<SparseVec<F::Elem>>,
        bound: Option<usize>,
    ) -> Result<Self> {
        let trunc = index.bound();
        let n = index.nvars();
        let mut e = Echelon::new(field.clone(), index.len());
        if let Some(c) = bound {
            for col in index.cols_in_degrees(c, trunc) {
                e.insert_unit(col);
            }
        }
        let mut queue = VecDeque::new();
        for g in &gens {
            if let Some(r) = e.insert(g) {
                queue.push_back(r);
            }
        }
        while let Some(r) = queue.pop_front() {
            let row = e.rows()[r].clone();
            for v in 0..n {
                let w = index.mul_var(v, &row);
                if w.is_empty() {
                    continue;
                }
                if let Some(r2) = e.insert(&w) {
                    queue.push_back(r2);
                }
            }
        }
        e.canonicalize();
        let scanned = certified_bound(&index, &e);
        let complete = match (bound, scanned) {
            (Some(b), Some(s)) => b.min(s),
            (Some(b), None) => b,
            (None, Some(s)) => s,
            (None, None) => trunc,
        };
        Ok(Self::from_parts(field, index, complete, e))
    }

    /// The ideal whose orthogonal complement in `P_{<D}` is spanned by `perp`.
    pub(crate) fn from_perp(field: F, index: Arc<MonomialIndex>, complete: usize, perp: &[SparseVec<F::Elem>]) -> Self {
        let mut w = Echelon::span(field.clone(), index.len(), perp.iter());
        let comp = w.complement();
        let basis = Echelon::span(field.clone(), index.len(), comp.iter());
        Self::from_parts(field, index, complete, basis)
    }

    pub fn nvars(&self) -> usize {
        self.index.nvars()
    }

    pub fn trunc(&self) -> usize {
        self.index.bound()
    }

    /// The certified bound `c` with `m^c ⊆ I`.
    pub fn completeness(&self) -> usize {
        self.complete
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    pub fn echelon(&self) -> &Echelon<F> {
        &self.basis
    }

    /// Dimension of the image of `I` in `S_{<D}`.
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// `dim S/I`, exact because `m^c ⊆ I` with `c ≤ D`.
    pub fn colength(&self) -> usize {
        self.index.len() - self.basis.rank()
    }

    pub fn is_unit(&self) -> bool {
        self.index.len() > 0 && self.basis.is_pivot(0)
    }

    pub fn basis_operators(&self) -> Vec<Operator<F>> {
        self.basis.rows().iter().map(|r| Operator::new(self.index.polynomial(&self.field, r), self.trunc())).collect()
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial<F>> {
        self.basis.rows().iter().map(|r| self.index.polynomial(&self.field, r)).collect()
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn check_same_trunc(&self, other: &Self) -> Result<()> {
        self.check_same_ring(other)?;
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch { left: self.trunc(), right: other.trunc() });
        }
        Ok(())
    }

    /// Membership of an operator, compared modulo `m^D`.
    pub fn contains_poly(&self, sigma: &Polynomial<F>) -> bool {
        let v = self.index.vector_truncated(sigma);
        let mut scratch = crate::linalg::Scratch::new(self.index.len(), self.field.zero());
        self.basis.reduce_with(&v, &mut scratch).is_empty()
    }

    pub fn contains_operator(&self, sigma: &Operator<F>) -> bool {
        self.contains_poly(sigma.poly())
    }

    /// `other ⊆ self`, compared at the common truncation.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_same_ring(other)?;
        let d = self.trunc().min(other.trunc());
        let needed = self.complete.max(other.complete);
        if d < needed {
            return Err(Error::InsufficientPrecision { needed, available: d });
        }
        let a = self.restrict(d)?;
        let b = other.restrict(d)?;
        let mut scratch = crate::linalg::Scratch::new(a.index.len(), self.field.zero());
        Ok(b.basis.rows().iter().all(|r| a.basis.reduce_with(r, &mut scratch).is_empty()))
    }

    /// Equality as ideals, compared at the common truncation.
    pub fn same_ideal(&self, other: &Self) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// The image in `S_{<d}` for `d ≤ D`. Columns of lower degree come first,
    /// so this just drops a suffix of coordinates.
    pub fn restrict(&self, d: usize) -> Result<Self> {
        if d > self.trunc() {
            return Err(Error::InvalidArgument("restrict can only lower the truncation".into()));
        }
        if d == self.trunc() {
            return Ok(self.clone());
        }
        let index = local_index(self.nvars(), d)?;
        let cut = index.len() as u32;
        let mut e = Echelon::new(self.field.clone(), index.len());
        for r in self.basis.rows() {
            if r[0].0 >= cut {
                break;
            }
            let row: SparseVec<F::Elem> = r.iter().filter(|(c, _)| *c < cut).cloned().collect();
            e.insert(&row);
        }
        Ok(Self::from_parts(self.field.clone(), index, self.complete.min(d), e))
    }

    /// The image in `S_{<d}` for `d ≥ D`, valid because `m^c ⊆ I` with `c ≤ D`.
    pub fn extend(&self, d: usize) -> Result<Self> {
        if d <= self.trunc() {
            return self.restrict(d);
        }
        let index = local_index(self.nvars(), d)?;
        let mut e = Echelon::new(self.field.clone(), index.len());
        for r in self.basis.rows() {
            e.insert(r);
        }
        for c in index.cols_in_degrees(self.trunc(), d) {
            e.insert_unit(c);
        }
        Ok(Self::from_parts(self.field.clone(), index, self.complete, e))
    }

    /// A basis of `I^⊥ ⊂ P_{<D}`; it lies in `P_{<c}`.
    pub fn perp(&self) -> Vec<SparseVec<F::Elem>> {
        let mut b = self.basis.clone();
        b.complement()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_trunc(other)?;
        let mut e = self.basis.clone();
        for r in other.basis.rows() {
            e.insert(r);
        }
        Ok(Self::from_parts(self.field.clone(), self.index.clone(), self.complete.min(other.complete), e))
    }

    /// `I ∩ J = (I^⊥ + J^⊥)^⊥`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_trunc(other)?;
        let mut perp = self.perp();
        perp.extend(other.perp());
        let c = self.complete.max(other.complete);
        Ok(Self::from_perp(self.field.clone(), self.index.clone(), c, &perp))
    }

    /// `I · J`, generated by products of minimal generators. Requires
    /// `D ≥ c_I + c_J` so that `m^{c_I + c_J} ⊆ IJ` certifies the result.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_trunc(other)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let bound = self.complete + other.complete;
        if self.trunc() < bound {
            return Err(Error::InsufficientPrecision { needed: bound, available: self.trunc() });
        }
        let g1 = self.minimal_generators()?;
        let g2 = other.minimal_generators()?;
        let d = self.trunc();
        let mut gens = Vec::with_capacity(g1.len() * g2.len());
        for a in &g1 {
            for b in &g2 {
                let p = a.poly().mul_below(b.poly(), d);
                gens.push(self.index.vector_truncated(&p));
            }
        }
        Self::closure(self.field.clone(), self.index.clone(), gens, Some(bound))
    }

    /// `(I : ∂) = {σ : σ∂ ∈ I}`, computed as `(∂ ⌟ I^⊥)^⊥`. The result keeps
    /// the truncation `D` and has completeness bound `max(0, c − ord ∂)`.
    pub fn colon(&self, partial: &Operator<F>) -> Result<Self> {
        if partial.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: partial.nvars() });
        }
        if partial.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let o = partial.order().ok_or(Error::ZeroOperator)?;
        if partial.trunc() < self.complete {
            return Err(Error::InsufficientPrecision { needed: self.complete, available: partial.trunc() });
        }
        let mut images = Vec::new();
        for w in self.perp() {
            let poly = self.index.polynomial(&self.field, &w);
            let mut acc = Polynomial::zero(self.nvars(), self.field.clone());
            for (mono, c) in partial.poly().terms() {
                acc = acc.add(&contract_monomial(mono, &poly).scale(c));
            }
            if !acc.is_zero() {
                images.push(self.index.vector(&acc)?);
            }
        }
        let c = self.complete.saturating_sub(o);
        Ok(Self::from_perp(self.field.clone(), self.index.clone(), c, &images))
    }

    /// Operators whose classes form a basis of `I / mI`.
    pub fn minimal_generators(&self) -> Result<Vec<Operator<F>>> {
        let d = self.trunc();
        let c = self.complete;
        if d < c + 1 {
            return Err(Error::InsufficientPrecision { needed: c + 1, available: d });
        }
        let n = self.nvars();
        let mut m_i = Echelon::new(self.field.clone(), self.index.len());
        for col in self.index.cols_in_degrees(c + 1, d) {
            m_i.insert_unit(col);
        }
        // Rows with pivot of degree >= c are monomials whose multiples are
        // already present.
        for r in self.basis.rows() {
            if self.index.degree_of(r[0].0 as usize) >= c {
                continue;
            }
            for v in 0..n {
                let w = self.index.mul_var(v, r);
                if !w.is_empty() {
                    m_i.insert(&w);
                }
            }
        }
        let mut gens = Vec::new();
        for r in self.basis.rows() {
            if m_i.insert(r).is_some() {
                gens.push(Operator::new(self.index.polynomial(&self.field, r), d));
            }
        }
        Ok(gens)
    }

    /// The image `φ(I)` under an automorphism.
    pub fn apply_substitution(&self, phi: &Substitution<F>) -> Result<Self> {
        if phi.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: phi.nvars() });
        }
        if phi.trunc() < self.trunc() {
            return Err(Error::InsufficientPrecision { needed: self.trunc(), available: phi.trunc() });
        }
        let polys = self.basis_polynomials();
        let images = phi.apply_all(&polys, self.trunc());
        let mut e = Echelon::new(self.field.clone(), self.index.len());
        for p in &images {
            e.insert(&self.index.vector_truncated(p));
        }
        Ok(Self::from_parts(self.field.clone(), self.index.clone(), self.complete, e))
    }

    /// True when every basis row is homogeneous.
    pub fn is_graded(&self) -> bool {
        self.basis.rows().iter().all(|r| {
            let d = self.index.degree_of(r[0].0 as usize);
            r.iter().all(|(c, _)| self.index.degree_of(*c as usize) == d)
        })
    }
}

/// Smallest `c < D` such that all monomials of degree in `[c, D)` are pivots.
fn certified_bound<F: Field>(index: &MonomialIndex, e: &Echelon<F>) -> Option<usize> {
    let d = index.bound();
    if d == 0 {
        return None;
    }
    let mut c = d;
    while c > 0 {
        let deg = c - 1;
        if index.cols_in_degrees(deg, deg + 1).all(|col| e.is_pivot(col)) {
            c -= 1;
        } else {
            break;
        }
    }
    if c == d {
        None
    } else {
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn p(n: usize, t: &[(i64, &[u16])]) -> Polynomial<Rationals> {
        Polynomial::from_int_terms(n, Rationals, t)
    }

    #[test]
    fn generated_ideal_is_certified() {
        let i =
            TruncatedIdeal::from_generators(2, Rationals, &[p(2, &[(1, &[2, 0])]), p(2, &[(1, &[0, 1])])], 5).unwrap();
        assert_eq!(i.colength(), 2);
        assert_eq!(i.completeness(), 2);
        let line = TruncatedIdeal::from_generators(2, Rationals, &[p(2, &[(1, &[1, 0])])], 5).unwrap();
        assert_eq!(line.completeness(), 5);
        assert_eq!(line.colength(), 5);
    }

    #[test]
    fn colon_of_max_power() {
        let m3 = TruncatedIdeal::max_ideal_power(3, Rationals, 3, 6).unwrap();
        let a1 = Operator::var(3, Rationals, 0, 6);
        let col = m3.colon(&a1).unwrap();
        let m2 = TruncatedIdeal::max_ideal_power(3, Rationals, 2, 6).unwrap();
        assert_eq!(col, m2);
        assert_eq!(col.completeness(), 2);
    }

    #[test]
    fn product_of_variables() {
        let i =
            TruncatedIdeal::from_generators(2, Rationals, &[p(2, &[(1, &[1, 0])]), p(2, &[(1, &[0, 2])])], 6).unwrap();
        let sq = i.product(&i).unwrap();
        assert!(sq.contains_poly(&p(2, &[(1, &[2, 0])])));
        assert!(sq.contains_poly(&p(2, &[(1, &[1, 2])])));
        assert!(!sq.contains_poly(&p(2, &[(1, &[1, 1])])));
        assert!(i.contains(&sq).unwrap());
    }
}
