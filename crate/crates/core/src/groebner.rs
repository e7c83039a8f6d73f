//! Buchberger's algorithm for zero-dimensional ideals of `k[α_1..α_n]` in
//! degrevlex order, and the linear algebra of the finite quotient.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::limits;
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::unipoly::UniPoly;

/// A reduced Gröbner basis together with its standard monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    n: usize,
    field: F,
    /// Monic, sorted by leading monomial.
    basis: Vec<Polynomial<F>>,
    /// Ascending in degrevlex; `None` when the quotient is infinite.
    quotient: Option<Vec<Monomial>>,
}

fn lead<F: Field>(p: &Polynomial<F>) -> &Monomial {
    p.leading().expect("nonzero polynomial").0
}

/// Full reduction of `p` by `gens`; leading terms are removed until none is
/// divisible, then the tail is reduced.
fn reduce<F: Field>(p: &Polynomial<F>, gens: &[Polynomial<F>]) -> Polynomial<F> {
    let field = p.field().clone();
    let mut rest = p.clone();
    let mut rem = Polynomial::zero(p.nvars(), field.clone());
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = gens.iter().find(|g| lead(g).divides(&m));
        match hit {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let q = lm.quotient_of(&m).unwrap();
                let factor = field.mul(&c, &field.inv(lc).expect("nonzero"));
                rest = rest.sub(&g.mul_monomial(&q, &factor));
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                rest.add_term(m, field.neg(&c));
            }
        }
    }
    rem
}

fn s_polynomial<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let field = a.field();
    let (la, ca) = a.leading().unwrap();
    let (lb, cb) = b.leading().unwrap();
    let l = la.lcm(lb);
    let ia = field.inv(ca).unwrap();
    let ib = field.inv(cb).unwrap();
    a.mul_monomial(&la.quotient_of(&l).unwrap(), &ia).sub(&b.mul_monomial(&lb.quotient_of(&l).unwrap(), &ib))
}

impl<F: Field> GroebnerBasis<F> {
    /// Reduced Gröbner basis of the ideal generated by `gens`, using the
    /// normal selection strategy, the coprime criterion and the chain
    /// criterion. Fails with a budget error after
    /// `limits::max_groebner_steps()` pair reductions.
    pub fn new(n: usize, field: F, gens: &[Polynomial<F>]) -> Result<Self> {
        for g in gens {
            if g.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
            }
            if g.field() != &field {
                return Err(Error::FieldMismatch);
            }
        }
        let mut basis: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
        if basis.is_empty() {
            return Err(Error::InvalidArgument("empty generator list".into()));
        }
        // Pairs keyed by (lcm degree, lcm, i, j) for normal selection.
        let mut pairs: BTreeSet<(usize, Monomial, usize, usize)> = BTreeSet::new();
        let push_pairs = |basis: &Vec<Polynomial<F>>, pairs: &mut BTreeSet<_>, j: usize| {
            for i in 0..j {
                let l = lead(&basis[i]).lcm(lead(&basis[j]));
                pairs.insert((l.degree(), l, i, j));
            }
        };
        for j in 1..basis.len() {
            push_pairs(&basis, &mut pairs, j);
        }
        let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
        let budget = limits::max_groebner_steps();
        let mut steps = 0usize;
        while let Some(key) = pairs.iter().next().cloned() {
            pairs.remove(&key);
            let (_, l, i, j) = key;
            done.insert((i, j));
            let (a, b) = (&basis[i], &basis[j]);
            if lead(a).is_coprime(lead(b)) {
                continue;
            }
            // Chain criterion: some k with lm_k | lcm and both pairs handled.
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && lead(&basis[k]).divides(&l)
                    && done.contains(&(i.min(k), i.max(k)))
                    && done.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            steps += 1;
            if steps > budget {
                return Err(Error::Budget { what: "groebner steps", limit: budget, requested: steps });
            }
            let r = reduce(&s_polynomial(a, b), &basis);
            if !r.is_zero() {
                basis.push(r.monic());
                let j = basis.len() - 1;
                push_pairs(&basis, &mut pairs, j);
            }
        }
        Ok(Self::from_groebner(n, field, basis))
    }

    /// Interreduces a Gröbner basis and computes the standard monomials.
    fn from_groebner(n: usize, field: F, mut basis: Vec<Polynomial<F>>) -> Self {
        basis.sort_by(|a, b| lead(a).cmp(lead(b)));
        let mut minimal: Vec<Polynomial<F>> = Vec::new();
        for g in basis {
            if !minimal.iter().any(|h| lead(h).divides(lead(&g))) {
                minimal.retain(|h| !lead(&g).divides(lead(h)));
                minimal.push(g);
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<_> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            let (lm, _) = minimal[k].leading().unwrap();
            let tail = minimal[k].sub(&Polynomial::term(field.clone(), lm.clone(), field.one()));
            let r = reduce(&tail, &others);
            reduced.push(r.add(&Polynomial::term(field.clone(), lm.clone(), field.one())));
        }
        reduced.sort_by(|a, b| lead(a).cmp(lead(b)));
        let quotient = standard_monomials(n, &reduced);
        GroebnerBasis { n, field, basis: reduced, quotient }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.quotient.is_some()
    }

    pub fn quotient_basis(&self) -> Result<&[Monomial]> {
        self.quotient.as_deref().ok_or(Error::NotZeroDimensional)
    }

    /// `dim_k k[α]/I`.
    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.quotient_basis()?.len())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        reduce(p, &self.basis)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Coordinates of a normal form in the quotient basis.
    fn coordinates(&self, p: &Polynomial<F>, basis: &[Monomial]) -> Vec<F::Elem> {
        let nf = self.normal_form(p);
        basis.iter().map(|m| nf.coeff(m)).collect()
    }

    /// Multiplication by `α_i` on the quotient: column `j` holds the
    /// coordinates of `α_i · b_j`.
    pub fn multiplication_matrix(&self, i: usize) -> Result<Matrix<F>> {
        let basis = self.quotient_basis()?;
        let len = basis.len();
        let mut m = Matrix::zeros(self.field.clone(), len, len);
        for (j, b) in basis.iter().enumerate() {
            let p = Polynomial::term(self.field.clone(), b.times_var(i), self.field.one());
            for (r, c) in self.coordinates(&p, basis).into_iter().enumerate() {
                m.set(r, j, c);
            }
        }
        Ok(m)
    }

    /// The multiplication matrix of `α_i` and its minimal polynomial.
    pub fn multiplication_data(&self, i: usize) -> Result<(Matrix<F>, UniPoly<F>)> {
        if i >= self.n {
            return Err(Error::InvalidArgument(format!("variable index {} out of range", i + 1)));
        }
        let m = self.multiplication_matrix(i)?;
        let mp = minimal_polynomial(&m);
        Ok((m, mp))
    }

    /// Points of the support with the lengths of the local rings there.
    pub fn support_and_local_lengths(&self) -> Result<SupportReport<F>> {
        let len = self.quotient_dimension()?;
        let field = &self.field;
        let mats: Vec<Matrix<F>> = (0..self.n).map(|i| self.multiplication_matrix(i)).collect::<Result<_>>()?;
        // Each part is a joint generalized eigenspace, as a basis of columns.
        let identity: Vec<Vec<F::Elem>> = Matrix::identity(field.clone(), len).to_rows();
        let mut parts: Vec<(Vec<F::Elem>, Vec<Vec<F::Elem>>)> = vec![(Vec::new(), identity)];
        let mut unsplit = Vec::new();
        for (i, m) in mats.iter().enumerate() {
            let mp = minimal_polynomial(m);
            let roots = mp.roots();
            let mut rest = mp.clone();
            for r in &roots {
                let lin = UniPoly::linear(field.clone(), r);
                loop {
                    let (q, rem) = rest.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    rest = q;
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                unsplit.push((i, rest.monic()));
                continue;
            }
            let mut next = Vec::new();
            for (point, space) in &parts {
                for r in &roots {
                    let k = m.sub_scalar(r).pow(len).kernel();
                    let inter = intersect(field, space, &k, len);
                    if !inter.is_empty() {
                        let mut p = point.clone();
                        p.push(r.clone());
                        next.push((p, inter));
                    }
                }
            }
            parts = next;
        }
        let mut points: Vec<_> = parts.into_iter().map(|(p, s)| (p, s.len())).collect();
        points.sort();
        let complete = unsplit.is_empty();
        Ok(SupportReport { points, unsplit, complete })
    }
}

/// Support of a zero-dimensional scheme. When some minimal polynomial does
/// not split, the coordinates of that variable are missing from the points
/// and the offending factor is listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport<F: Field> {
    /// Points (coordinates of the split variables, in order) with local lengths, sorted.
    pub points: Vec<(Vec<F::Elem>, usize)>,
    /// Variables whose minimal polynomial has a factor without roots, with that factor.
    pub unsplit: Vec<(usize, UniPoly<F>)>,
    pub complete: bool,
}

/// Standard monomials of a Gröbner basis, or `None` when infinitely many.
fn standard_monomials<F: Field>(n: usize, basis: &[Polynomial<F>]) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = basis.iter().map(|g| lead(g)).collect();
    for i in 0..n {
        let pure = leads.iter().any(|m| (0..n).all(|j| j == i || m.exp(j) == 0));
        if !pure {
            return None;
        }
    }
    let mut out = BTreeSet::new();
    let mut stack = vec![Monomial::one(n)];
    while let Some(m) = stack.pop() {
        if leads.iter().any(|l| l.divides(&m)) || out.contains(&m) {
            continue;
        }
        for i in 0..n {
            stack.push(m.times_var(i));
        }
        out.insert(m);
    }
    Some(out.into_iter().collect())
}

/// Minimal polynomial of a square matrix from the first linear dependency
/// among `I, M, M², …`.
pub fn minimal_polynomial<F: Field>(m: &Matrix<F>) -> UniPoly<F> {
    let field = m.field().clone();
    let n = m.rows();
    let flatten = |a: &Matrix<F>| -> Vec<F::Elem> { (0..n).flat_map(|r| a.row(r).to_vec()).collect() };
    let mut powers = vec![flatten(&Matrix::identity(field.clone(), n))];
    let mut cur = Matrix::identity(field.clone(), n);
    for _ in 0..=n {
        cur = cur.mul(m);
        powers.push(flatten(&cur));
        // Columns are the powers; a kernel vector is a relation.
        let k = powers.len();
        let rows: Vec<Vec<F::Elem>> = (0..n * n).map(|r| (0..k).map(|c| powers[c][r].clone()).collect()).collect();
        let a = Matrix::from_rows(field.clone(), k, rows);
        if let Some(v) = a.kernel().into_iter().next() {
            return UniPoly::new(field, v).monic();
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree")
}

/// Intersection of the column spaces spanned by `a` and `b` (vectors of length `len`).
fn intersect<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], len: usize) -> Vec<Vec<F::Elem>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σ x_i a_i − Σ y_j b_j = 0.
    let cols = a.len() + b.len();
    let rows: Vec<Vec<F::Elem>> =
        (0..len).map(|r| a.iter().map(|v| v[r].clone()).chain(b.iter().map(|v| field.neg(&v[r]))).collect()).collect();
    let ker = Matrix::from_rows(field.clone(), cols, rows).kernel();
    let mut vecs: Vec<Vec<F::Elem>> = ker
        .iter()
        .map(|x| {
            let mut v = vec![field.zero(); len];
            for (i, ai) in a.iter().enumerate() {
                if !field.is_zero(&x[i]) {
                    for r in 0..len {
                        let t = field.mul(&x[i], &ai[r]);
                        field.add_assign(&mut v[r], &t);
                    }
                }
            }
            v
        })
        .collect();
    // The kernel basis maps injectively when a is independent; prune anyway.
    let m = Matrix::from_rows(field.clone(), len, core::mem::take(&mut vecs));
    let (red, piv) = m.rref();
    (0..piv.len()).map(|r| red.row(r).to_vec()).collect()
}
