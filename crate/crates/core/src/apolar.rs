//! Apolar ideals and the basic invariants of `Apolar(f) = S / Ann(f)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{local_index, TruncatedIdeal};
use crate::index::{ColumnOrder, MonomialIndex};
use crate::linalg::Echelon;
use crate::monomial::monomials_of_degree;
use crate::poly::{contract_monomial, Polynomial};

/// Invariants of an apolar algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApolarReport {
    pub hilbert_function: Vec<usize>,
    pub length: usize,
    pub socle_degree: usize,
    /// `H(1)`, the number of essential variables.
    pub essential_variables: usize,
    pub tangent_dimension: Option<usize>,
}

/// Summary of the tangent-space test for unobstructedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnobstructednessReport {
    pub length: usize,
    pub embedding_dim: usize,
    /// `dim S/I² − dim S/I` computed in the essential variables.
    pub tangent_dim: usize,
    pub is_unobstructed: bool,
}

fn socle_degree<F: Field>(f: &Polynomial<F>) -> Result<usize> {
    f.degree().ok_or(Error::ZeroPolynomial)
}

/// `Ann_S(f)` modulo `m^D`, with completeness bound `deg f + 1`.
pub fn apolar_ideal<F: Field>(f: &Polynomial<F>, trunc: usize) -> Result<TruncatedIdeal<F>> {
    let s = socle_degree(f)?;
    if trunc < s + 1 {
        return Err(Error::InsufficientPrecision { needed: s + 1, available: trunc });
    }
    let n = f.nvars();
    let index = local_index(n, trunc)?;
    // Ann(f) is the orthogonal complement of the space of derivatives S⌟f.
    let mut derivs = Vec::new();
    for d in 0..=s {
        for b in monomials_of_degree(n, d) {
            let g = contract_monomial(&b, f);
            if !g.is_zero() {
                derivs.push(index.vector_truncated(&g));
            }
        }
    }
    Ok(TruncatedIdeal::from_perp(f.field().clone(), index, s + 1, &derivs))
}

/// The nested spaces `M_l = span{α^b ⌟ f : |b| ≥ l}` for `l = 0..=s+1`,
/// each as an echelon form in `P_{≤s}` with top-degree-first coordinates.
pub(crate) struct DerivativeFlag<F: Field> {
    pub index: MonomialIndex,
    /// `levels[l]` is `M_l`.
    pub levels: Vec<Echelon<F>>,
}

pub(crate) fn derivative_flag<F: Field>(f: &Polynomial<F>) -> Result<DerivativeFlag<F>> {
    let s = socle_degree(f)?;
    let n = f.nvars();
    let index = MonomialIndex::new(n, s + 1, ColumnOrder::HighDegreeFirst)?;
    let mut cur = Echelon::new(f.field().clone(), index.len());
    let mut levels = alloc::vec![cur.clone(); s + 2];
    for l in (0..=s).rev() {
        for b in monomials_of_degree(n, l) {
            let g = contract_monomial(&b, f);
            if !g.is_zero() {
                cur.insert(&index.vector_truncated(&g));
            }
        }
        let mut snap = cur.clone();
        snap.canonicalize();
        levels[l] = snap;
    }
    Ok(DerivativeFlag { index, levels })
}

/// `H(l) = dim M_l − dim M_{l+1}` where `M_l = m^l ⌟ f`.
pub fn hilbert_vector<F: Field>(f: &Polynomial<F>) -> Result<Vec<usize>> {
    let flag = derivative_flag(f)?;
    let s = flag.levels.len() - 2;
    Ok((0..=s).map(|l| flag.levels[l].rank() - flag.levels[l + 1].rank()).collect())
}

pub fn hilbert_function<F: Field>(f: &Polynomial<F>) -> Result<ApolarReport> {
    let h = hilbert_vector(f)?;
    Ok(ApolarReport {
        length: h.iter().sum(),
        socle_degree: h.len() - 1,
        essential_variables: h.get(1).copied().unwrap_or(0),
        hilbert_function: h,
        tangent_dimension: None,
    })
}

/// `len Apolar(f) = dim S⌟f`.
pub fn apolar_length<F: Field>(f: &Polynomial<F>) -> Result<usize> {
    Ok(hilbert_vector(f)?.iter().sum())
}

/// `dim S/I² − dim S/I` for `I = Ann(f)` in the ambient `n` variables.
/// Computed at `D = 2s + 2`, where both quotients are exact.
pub fn tangent_space_dimension<F: Field>(f: &Polynomial<F>) -> Result<usize> {
    let s = socle_degree(f)?;
    let i = apolar_ideal(f, 2 * s + 2)?;
    let i2 = i.product(&i)?;
    Ok(i2.colength() - i.colength())
}

/// Complete intersection test. Linear generators of `Ann(f)` account for the
/// `n − H(1)` inessential directions, so `Apolar(f)` is a complete
/// intersection in `H(1)` variables iff `Ann(f)` needs exactly `n` generators.
pub fn is_complete_intersection<F: Field>(f: &Polynomial<F>) -> Result<bool> {
    let s = socle_degree(f)?;
    let i = apolar_ideal(f, s + 2)?;
    Ok(i.minimal_generators()?.len() == f.nvars())
}

/// Unobstructedness: the tangent space at `Apolar(f) ⊂ A^{H(1)}` has
/// dimension `H(1)·len`. The tangent space is computed in the ambient
/// variables; each inessential variable adds exactly `len` to it, since it
/// contributes a regular linear generator.
pub fn unobstructedness_report<F: Field>(f: &Polynomial<F>) -> Result<UnobstructednessReport> {
    let h = hilbert_vector(f)?;
    let len: usize = h.iter().sum();
    let e = h.get(1).copied().unwrap_or(0);
    let ambient = tangent_space_dimension(f)?;
    let tangent = ambient - (f.nvars() - e) * len;
    Ok(UnobstructednessReport {
        length: len,
        embedding_dim: e,
        tangent_dim: tangent,
        is_unobstructed: tangent == e * len,
    })
}
