//! Sparse echelon forms over an exact field.
//!
//! Vectors are sorted lists of `(column, value)` pairs. The pivot of a row is
//! its smallest column, so the caller chooses what "leading" means by the
//! order in which it numbers coordinates.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::field::Field;

pub type SparseVec<E> = Vec<(u32, E)>;

const NONE: u32 = u32::MAX;

/// Dense scratch space used while reducing one vector.
#[derive(Clone, Debug)]
pub struct Scratch<E> {
    dense: Vec<E>,
    queued: Vec<bool>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl<E: Clone> Scratch<E> {
    pub fn new(ncols: usize, zero: E) -> Self {
        Scratch { dense: vec![zero; ncols], queued: vec![false; ncols], heap: BinaryHeap::new() }
    }
}

/// A subspace of `k^ncols` kept as a list of rows in echelon form: each row
/// has pivot coefficient one and no entries at pivot columns of rows inserted
/// before it. `canonicalize` turns this into the reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_of: Vec<u32>,
    scratch: Scratch<F::Elem>,
    canonical: bool,
}

impl<F: Field> PartialEq for Echelon<F> {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.canonical && other.canonical);
        self.ncols == other.ncols && self.rows == other.rows
    }
}

impl<F: Field> Eq for Echelon<F> {}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        let scratch = Scratch::new(ncols, field.zero());
        Echelon { field, ncols, rows: Vec::new(), pivot_of: vec![NONE; ncols], scratch, canonical: true }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of[col] != NONE
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec<F::Elem>> {
        match self.pivot_of[col] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Reduces `v` against the current rows using caller-provided scratch
    /// space. The result has no entries at pivot columns.
    pub fn reduce_with(&self, v: &[(u32, F::Elem)], scratch: &mut Scratch<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        for (c, x) in v {
            let c = *c as usize;
            f.add_assign(&mut scratch.dense[c], x);
            if !scratch.queued[c] {
                scratch.queued[c] = true;
                scratch.heap.push(Reverse(c as u32));
            }
        }
        let mut out = Vec::new();
        while let Some(Reverse(c)) = scratch.heap.pop() {
            let cu = c as usize;
            scratch.queued[cu] = false;
            let val = core::mem::replace(&mut scratch.dense[cu], f.zero());
            if f.is_zero(&val) {
                continue;
            }
            let r = self.pivot_of[cu];
            if r == NONE {
                out.push((c, val));
                continue;
            }
            for (j, y) in &self.rows[r as usize][1..] {
                let ju = *j as usize;
                f.sub_mul_assign(&mut scratch.dense[ju], &val, y);
                if !scratch.queued[ju] {
                    scratch.queued[ju] = true;
                    scratch.heap.push(Reverse(*j));
                }
            }
        }
        out
    }

    pub fn reduce(&mut self, v: &[(u32, F::Elem)]) -> SparseVec<F::Elem> {
        let mut scratch = core::mem::replace(&mut self.scratch, Scratch::new(0, self.field.zero()));
        let out = self.reduce_with(v, &mut scratch);
        self.scratch = scratch;
        out
    }

    pub fn contains(&mut self, v: &[(u32, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` if it is independent of the current rows; returns the
    /// index of the new row.
    pub fn insert(&mut self, v: &[(u32, F::Elem)]) -> Option<usize> {
        let rem = self.reduce(v);
        self.push_reduced(rem)
    }

    fn push_reduced(&mut self, mut rem: SparseVec<F::Elem>) -> Option<usize> {
        if rem.is_empty() {
            return None;
        }
        let inv = self.field.inv(&rem[0].1).expect("nonzero leading entry");
        if !self.field.is_one(&inv) {
            for e in rem.iter_mut() {
                e.1 = self.field.mul(&e.1, &inv);
            }
        }
        let idx = self.rows.len();
        self.pivot_of[rem[0].0 as usize] = idx as u32;
        self.rows.push(rem);
        self.canonical = false;
        Some(idx)
    }

    /// Inserts the unit vector `e_col`.
    pub fn insert_unit(&mut self, col: usize) -> Option<usize> {
        self.insert(&[(col as u32, self.field.one())])
    }

    /// Brings the rows into reduced row echelon form, sorted by pivot.
    pub fn canonicalize(&mut self) {
        if self.canonical {
            return;
        }
        // Row k only has entries at columns that were free when it was
        // inserted, so reducing rows from last to first against already
        // reduced later rows yields the RREF.
        let mut scratch = core::mem::replace(&mut self.scratch, Scratch::new(0, self.field.zero()));
        for k in (0..self.rows.len()).rev() {
            if self.rows[k].len() <= 1 {
                continue;
            }
            let tail_needs_work = self.rows[k][1..].iter().any(|(c, _)| self.pivot_of[*c as usize] != NONE);
            if !tail_needs_work {
                continue;
            }
            let tail: SparseVec<F::Elem> = self.rows[k][1..].to_vec();
            let reduced = self.reduce_with(&tail, &mut scratch);
            let head = self.rows[k][0].clone();
            let mut row = Vec::with_capacity(reduced.len() + 1);
            row.push(head);
            row.extend(reduced);
            self.rows[k] = row;
        }
        self.scratch = scratch;
        self.rows.sort_by_key(|r| r[0].0);
        for (i, r) in self.rows.iter().enumerate() {
            self.pivot_of[r[0].0 as usize] = i as u32;
        }
        self.canonical = true;
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// The orthogonal complement under the coordinate dot product, one vector
    /// per free column `j`: `e_j − Σ_r R[r][j]·e_{pivot(r)}`.
    pub fn complement(&mut self) -> Vec<SparseVec<F::Elem>> {
        self.canonicalize();
        let f = &self.field;
        let mut by_col: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.ncols];
        for r in &self.rows {
            let p = r[0].0;
            for (j, x) in &r[1..] {
                by_col[*j as usize].push((p, f.neg(x)));
            }
        }
        let mut out = Vec::with_capacity(self.ncols - self.rows.len());
        for (j, mut v) in by_col.into_iter().enumerate() {
            if self.pivot_of[j] != NONE {
                continue;
            }
            v.push((j as u32, f.one()));
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }

    /// Builds the canonical echelon form of the span of `vectors`.
    pub fn span<'a, I>(field: F, ncols: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<F::Elem>>,
        F::Elem: 'a,
    {
        let mut e = Self::new(field, ncols);
        for v in vectors {
            e.insert(v);
        }
        e.canonicalize();
        e
    }
}

/// Dot product of two sparse vectors.
pub fn dot<F: Field>(field: &F, a: &[(u32, F::Elem)], b: &[(u32, F::Elem)]) -> F::Elem {
    let (mut i, mut j) = (0, 0);
    let mut acc = field.zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                acc = field.add(&acc, &field.mul(&a[i].1, &b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}
