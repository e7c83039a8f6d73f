//! Coordinates on spaces spanned by monomials of bounded degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::limits;
use crate::linalg::SparseVec;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;

/// How monomials are numbered. With `LowDegreeFirst` the pivot of a vector is
/// its lowest-degree term (the local order used for ideals of `S`); with
/// `HighDegreeFirst` it is the top-degree term (used for filtrations of
/// inverse systems).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnOrder {
    LowDegreeFirst,
    HighDegreeFirst,
}

/// A numbering of all monomials of degree `< bound` in `n` variables.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    n: usize,
    bound: usize,
    order: ColumnOrder,
    monos: Vec<Monomial>,
    lookup: BTreeMap<Monomial, u32>,
    mul: Vec<Vec<u32>>,
}

pub const ABSENT: u32 = u32::MAX;

impl MonomialIndex {
    pub fn new(n: usize, bound: usize, order: ColumnOrder) -> Result<Self> {
        let count = crate::monomial::count_below(n, bound);
        limits::check_columns(count)?;
        let mut monos = Vec::with_capacity(count);
        for d in 0..bound {
            monos.extend(monomials_of_degree(n, d));
        }
        if order == ColumnOrder::HighDegreeFirst {
            monos.reverse();
        }
        let lookup: BTreeMap<Monomial, u32> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let mul = (0..n)
            .map(|v| monos.iter().map(|m| lookup.get(&m.times_var(v)).copied().unwrap_or(ABSENT)).collect())
            .collect();
        Ok(MonomialIndex { n, bound, order, monos, lookup, mul })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn order(&self) -> ColumnOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, col: usize) -> &Monomial {
        &self.monos[col]
    }

    pub fn degree_of(&self, col: usize) -> usize {
        self.monos[col].degree()
    }

    pub fn col(&self, m: &Monomial) -> Option<usize> {
        self.lookup.get(m).map(|&c| c as usize)
    }

    /// Column of `α_v · monomial(col)`, or `None` past the bound.
    pub fn times_var(&self, v: usize, col: usize) -> Option<usize> {
        match self.mul[v][col] {
            ABSENT => None,
            c => Some(c as usize),
        }
    }

    /// Columns of all monomials of degree in `[lo, hi)`.
    pub fn cols_in_degrees(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.monos.len()).filter(move |&c| {
            let d = self.monos[c].degree();
            d >= lo && d < hi
        })
    }

    /// Coordinates of `p`; terms of degree `>= bound` are dropped.
    pub fn vector_truncated<F: Field>(&self, p: &Polynomial<F>) -> SparseVec<F::Elem> {
        let mut v: SparseVec<F::Elem> =
            p.terms().filter_map(|(m, c)| self.col(m).map(|col| (col as u32, c.clone()))).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Coordinates of `p`, failing if a term lies past the bound.
    pub fn vector<F: Field>(&self, p: &Polynomial<F>) -> Result<SparseVec<F::Elem>> {
        if let Some(d) = p.degree() {
            if d >= self.bound {
                return Err(Error::InsufficientPrecision { needed: d + 1, available: self.bound });
            }
        }
        Ok(self.vector_truncated(p))
    }

    pub fn polynomial<F: Field>(&self, field: &F, v: &[(u32, F::Elem)]) -> Polynomial<F> {
        Polynomial::from_terms(
            self.n,
            field.clone(),
            v.iter().map(|(c, x)| (self.monos[*c as usize].clone(), x.clone())),
        )
    }

    /// `α_v · w`, truncated; stays sorted because multiplication by a
    /// variable preserves any monomial order.
    pub fn mul_var<E: Clone>(&self, v: usize, w: &[(u32, E)]) -> SparseVec<E> {
        let table = &self.mul[v];
        let mut out: SparseVec<E> = w
            .iter()
            .filter_map(|(c, x)| match table[*c as usize] {
                ABSENT => None,
                t => Some((t, x.clone())),
            })
            .collect();
        if self.order == ColumnOrder::HighDegreeFirst {
            out.sort_by_key(|e| e.0);
        }
        out
    }
}
