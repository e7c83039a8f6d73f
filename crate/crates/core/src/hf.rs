//! Hilbert function combinatorics, symmetric decompositions, standard forms
//! and catalecticants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::apolar::{derivative_flag, hilbert_vector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::TruncatedIdeal;
use crate::linalg::Echelon;
use crate::matrix::Matrix;
use crate::monomial::{binomial, monomials_of_degree, Monomial};
use crate::poly::{contract_monomial, contract_poly, Operator, Polynomial};
use crate::substitution::{dual_substitution, Substitution};

/// `m^⟨i⟩` from the `i`-binomial expansion
/// `m = C(m_i, i) + C(m_{i−1}, i−1) + …` with `m_i > m_{i−1} > …`.
pub fn macaulay_bound(m: usize, i: usize) -> usize {
    assert!(i >= 1, "macaulay_bound needs i >= 1");
    let mut rest = m;
    let mut out = 0;
    let mut j = i;
    while rest > 0 && j >= 1 {
        let mut a = j;
        while binomial(a + 1, j) <= rest {
            a += 1;
        }
        rest -= binomial(a, j);
        out += binomial(a + 1, j + 1);
        j -= 1;
    }
    out
}

/// `H(0) = 1` and `H(m+1) ≤ H(m)^⟨m⟩` for all `m ≥ 1`.
pub fn is_o_sequence(h: &[usize]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    (1..h.len().saturating_sub(1)).all(|m| h[m + 1] <= macaulay_bound(h[m], m))
}

/// Hilbert function together with its symmetric decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    pub h: Vec<usize>,
    pub socle_degree: usize,
    /// Rows `Δ_0..Δ_{s−2}` (just `Δ_0` when `s < 2`); `Δ_a` has length `s+1−a`.
    pub delta: Vec<Vec<usize>>,
}

impl HilbertProfile {
    /// `e(a) = Σ_{t ≤ a} Δ_t(1)`; equal to `H(1)` for `a ≥ s − 1` and zero
    /// for negative `a`.
    pub fn e(&self, a: isize) -> usize {
        if a < 0 {
            return 0;
        }
        if a as usize + 1 >= self.socle_degree {
            return self.h.get(1).copied().unwrap_or(0);
        }
        self.delta.iter().take(a as usize + 1).map(|row| row.get(1).copied().unwrap_or(0)).sum()
    }

    /// `(e(0), …, e(s−1))`.
    pub fn e_vector(&self) -> Vec<usize> {
        (0..self.socle_degree.max(1) as isize).map(|a| self.e(a)).collect()
    }
}

/// Iarrobino's decomposition, from the filtration of `A` by
/// `C(a)_i = ((0 : m^{s+1−a−i}) ∩ m^i + m^{i+1}) / m^{i+1}`,
/// `Δ_a(i) = dim C(a)_i − dim C(a+1)_i`.
///
/// Under `A ≅ S⌟f`, `m^i` becomes `M_i = m^i ⌟ f` and `(0 : m^k)` becomes
/// the polynomials of degree `< k`, so
/// `dim C(a)_i = dim(M_i ∩ P_{<k} + M_{i+1}) − dim M_{i+1}`.
pub fn symmetric_decomposition<F: Field>(f: &Polynomial<F>) -> Result<HilbertProfile> {
    let flag = derivative_flag(f)?;
    let s = flag.levels.len() - 2;
    let h: Vec<usize> = (0..=s).map(|l| flag.levels[l].rank() - flag.levels[l + 1].rank()).collect();
    let index = &flag.index;
    // dim C(a)_i for a in 0..=s+1.
    let c_dim = |a: usize, i: usize| -> usize {
        if a + i > s {
            return 0;
        }
        let k = s + 1 - a - i;
        let next = &flag.levels[i + 1];
        let mut e = next.clone();
        for row in flag.levels[i].rows() {
            if index.degree_of(row[0].0 as usize) < k {
                e.insert(row);
            }
        }
        e.rank() - next.rank()
    };
    let rows = if s >= 2 { s - 1 } else { 1 };
    let mut delta = Vec::with_capacity(rows);
    for a in 0..rows {
        let row = (0..=s - a).map(|i| c_dim(a, i) - c_dim(a + 1, i)).collect();
        delta.push(row);
    }
    Ok(HilbertProfile { h, socle_degree: s, delta })
}

/// Checks that each partial sum `Δ_0 + … + Δ_a` is an O-sequence and that
/// the rows have the shape of a symmetric decomposition.
pub fn is_admissible_decomposition(s: usize, rows: &[Vec<usize>]) -> bool {
    let mut partial = vec![0usize; s + 1];
    for (a, row) in rows.iter().enumerate() {
        if row.len() != s + 1 - a {
            return false;
        }
        let len = row.len();
        if (0..len).any(|i| row[i] != row[len - 1 - i]) {
            return false;
        }
        if (a == 0 && row[0] != 1) || (a > 0 && row[0] != 0) {
            return false;
        }
        for (i, v) in row.iter().enumerate() {
            partial[i] += v;
        }
        let last = partial.iter().rposition(|&v| v > 0).map_or(0, |p| p + 1);
        if !is_o_sequence(&partial[..last.max(1)]) {
            return false;
        }
    }
    true
}

/// All candidate symmetric decompositions of `h`: rows `Δ_0..Δ_{s−2}`,
/// symmetric, summing to `h`, with every partial sum an O-sequence. The
/// output is sorted.
pub fn decomposition_search(h: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if h.is_empty() || h[0] != 1 {
        return out;
    }
    let s = h.len() - 1;
    let nrows = if s >= 2 { s - 1 } else { 1 };
    let mut rows = Vec::new();
    let mut partial = vec![0usize; s + 1];
    search_rows(h, s, nrows, &mut rows, &mut partial, &mut out);
    out.sort();
    out
}

fn search_rows(
    h: &[usize],
    s: usize,
    nrows: usize,
    rows: &mut Vec<Vec<usize>>,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let a = rows.len();
    if a == nrows {
        if partial.as_slice() == h {
            out.push(rows.clone());
        }
        return;
    }
    let len = s + 1 - a;
    let mut row = vec![0usize; len];
    if a == 0 {
        row[0] = 1;
        row[len - 1] = 1;
        if len == 1 {
            row[0] = 1;
        }
    }
    if (0..len).any(|i| partial[i] + row[i] > h[i]) {
        return;
    }
    let free: Vec<usize> = (1..len).filter(|&i| 2 * i <= len - 1).collect();
    fill_row(h, s, nrows, rows, partial, out, &mut row, &free, 0);
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    h: &[usize],
    s: usize,
    nrows: usize,
    rows: &mut Vec<Vec<usize>>,
    partial: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
    row: &mut Vec<usize>,
    free: &[usize],
    k: usize,
) {
    let len = row.len();
    if k == free.len() {
        let mut next = partial.clone();
        for i in 0..len {
            next[i] += row[i];
        }
        let last = next.iter().rposition(|&v| v > 0).map_or(0, |p| p + 1);
        if !is_o_sequence(&next[..last.max(1)]) {
            return;
        }
        // Later rows are zero at position 0 and at positions ≥ s−a.
        let a = rows.len();
        if next[0] != h[0] || (s - a..=s).any(|i| next[i] != h[i]) {
            return;
        }
        rows.push(row.clone());
        let saved = core::mem::replace(partial, next);
        search_rows(h, s, nrows, rows, partial, out);
        *partial = saved;
        rows.pop();
        return;
    }
    let i = free[k];
    let j = len - 1 - i;
    let cap = (h[i] - partial[i]).min(h[j] - partial[j]);
    for v in 0..=cap {
        row[i] = v;
        row[j] = v;
        fill_row(h, s, nrows, rows, partial, out, row, free, k + 1);
    }
    row[i] = 0;
    row[j] = 0;
}

/// Verdict of the standard-form test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormVerdict {
    pub holds: bool,
    /// A violating pair `(r, i)` (1-based `r`): `m^{i−1} α_r ⊄ Ann(f)`.
    pub witness: Option<(usize, usize)>,
}

/// `f` is in standard form iff `m^{i−1} α_r ⊆ Ann(f)`, i.e.
/// `deg(α_r ⌟ f) < i − 1`, for all `i ≥ 1` and `r > e(s−i)`.
pub fn check_standard_form<F: Field>(f: &Polynomial<F>) -> Result<StandardFormVerdict> {
    let profile = symmetric_decomposition(f)?;
    let s = profile.socle_degree;
    let n = f.nvars();
    let derivs: Vec<Option<usize>> = (0..n).map(|r| contract_monomial(&Monomial::var(n, r), f).degree()).collect();
    for i in 1..=s {
        let e = profile.e(s as isize - i as isize);
        for r in e..n {
            if let Some(d) = derivs[r] {
                if d + 1 >= i {
                    return Ok(StandardFormVerdict { holds: false, witness: Some((r + 1, i)) });
                }
            }
        }
    }
    Ok(StandardFormVerdict { holds: true, witness: None })
}

/// Result of a twist: the new dual generator and the certificate.
#[derive(Clone, Debug)]
pub struct Twist<F: Field> {
    pub polynomial: Polynomial<F>,
    /// The substitution `φ`; the output is `(φ⁻¹)^*(f / c)`.
    pub substitution: Substitution<F>,
    /// The scalar `c = α_i^k ⌟ f` the input was divided by.
    pub scale: F::Elem,
}

/// Twist about variable `i` with exponent `k`: with `α_i^k ⌟ f = c`,
/// substitute `α_j ↦ α_j − λ_j α_i^{k−d_j+1}` where
/// `d_j = deg(α_i α_j ⌟ f) + 2` and `λ_j = (α_i^{d_j−1} α_j ⌟ f) / c`. With
/// `normalize` the output is also divided by `c`.
fn twist<F: Field>(f: &Polynomial<F>, i: usize, k: usize, normalize: bool) -> Result<Twist<F>> {
    let n = f.nvars();
    let field = f.field().clone();
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut pure = vec![0u16; n];
    pure[i] = k as u16;
    let lead = contract_monomial(&Monomial::from_exps(pure), f);
    let c = lead.coeff(&Monomial::one(n));
    if field.is_zero(&c) || lead.degree() != Some(0) {
        return Err(Error::Precondition(format!("α_{}^{k} ⌟ f must be a nonzero constant", i + 1)));
    }
    let cinv = field.inv(&c).expect("nonzero");
    let g = f.scale(&cinv);
    let target = if normalize { g.clone() } else { f.clone() };
    let mut images: Vec<Polynomial<F>> = (0..n).map(|j| Polynomial::var(n, field.clone(), j)).collect();
    for j in (0..n).filter(|&j| j != i) {
        let mut e = vec![0u16; n];
        e[i] += 1;
        e[j] += 1;
        let h = contract_monomial(&Monomial::from_exps(e), &g);
        let Some(dh) = h.degree() else { continue };
        let dj = dh + 2;
        let mut xi = vec![0u16; n];
        xi[i] = dh as u16;
        let lambda = h.coeff(&Monomial::from_exps(xi));
        if field.is_zero(&lambda) {
            continue;
        }
        if dj > k {
            return Err(Error::Precondition(format!(
                "twist about x{} needs deg(α_{}α_{} ⌟ f) ≤ {}",
                i + 1,
                i + 1,
                j + 1,
                k.saturating_sub(2)
            )));
        }
        let mut pe = vec![0u16; n];
        pe[i] = (k - dj + 1) as u16;
        let shift = Polynomial::term(field.clone(), Monomial::from_exps(pe), lambda);
        images[j] = images[j].sub(&shift);
    }
    let phi = Substitution::new(field, images, s + 1)?;
    let polynomial = dual_substitution(&phi.invert()?, &target)?;
    Ok(Twist { polynomial, substitution: phi, scale: c })
}

/// The top-degree twist about `x_i` (0-based `i`); requires `α_i^s ⌟ f ≠ 0`.
/// Afterwards `α_i^s ⌟ f̂ = 1` and `α_i^{d_j−1} α_j ⌟ f̂ = 0` for `j ≠ i`.
pub fn top_degree_twist<F: Field>(f: &Polynomial<F>, i: usize) -> Result<Twist<F>> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    if i >= f.nvars() {
        return Err(Error::InvalidArgument(format!("variable index {} out of range", i + 1)));
    }
    twist(f, i, s, true)
}

/// After a top-degree twist about `x_i`, adds a derivative `∂ ⌟ f` with
/// `∂ = aα_i + bα_i²` so that `α_i^{s−2} ⌟ f = x_i²` exactly (the
/// non-constant part of `α_i^{s−2} ⌟ (f − x_i^s)` vanishes). Returns the new
/// polynomial and `∂`; `Ann` is unchanged because `1 + ∂` is a unit.
pub fn clean_up_derivative<F: Field>(f: &Polynomial<F>, i: usize) -> Result<(Polynomial<F>, Operator<F>)> {
    let n = f.nvars();
    let field = f.field().clone();
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    if s < 2 {
        return Err(Error::UnsupportedDegree { degree: s, minimum: 2 });
    }
    let mut e = vec![0u16; n];
    e[i] = (s - 2) as u16;
    let u = contract_monomial(&Monomial::from_exps(e.clone()), f);
    let mut sq = vec![0u16; n];
    sq[i] = 2;
    let rest = u.sub(&Polynomial::monomial(field.clone(), &sq));
    let mut lin = vec![0u16; n];
    lin[i] = 1;
    let l1 = rest.coeff(&Monomial::from_exps(lin.clone()));
    let l0 = rest.coeff(&Monomial::one(n));
    let expected = Polynomial::from_terms(
        n,
        field.clone(),
        [(Monomial::from_exps(lin.clone()), l1.clone()), (Monomial::one(n), l0.clone())],
    );
    if rest != expected {
        return Err(Error::Precondition(format!(
            "α_{}^{} ⌟ f is not x{}² plus a polynomial in x{} of degree ≤ 1",
            i + 1,
            s - 2,
            i + 1,
            i + 1
        )));
    }
    let a = field.neg(&l1);
    let b = field.sub(&field.mul(&l1, &l1), &l0);
    let d = Polynomial::term(field.clone(), Monomial::from_exps(lin), a).add(&Polynomial::term(
        field.clone(),
        Monomial::from_exps(sq),
        b,
    ));
    let out = f.add(&contract_poly(&d, f));
    Ok((out, Operator::exact(d)))
}

/// One step of a replayable normalization certificate.
#[derive(Clone, Debug)]
pub enum NormalizationStep<F: Field> {
    /// `f ← θ^*(f)`.
    Substitute(Substitution<F>),
    /// `f ← f + ∂ ⌟ f` with `∂` in the maximal ideal.
    AddDerivative(Operator<F>),
    /// `f ← c·f`.
    Scale(F::Elem),
}

/// Replays a certificate.
pub fn replay_steps<F: Field>(f: &Polynomial<F>, steps: &[NormalizationStep<F>]) -> Result<Polynomial<F>> {
    let mut g = f.clone();
    for step in steps {
        g = match step {
            NormalizationStep::Substitute(theta) => dual_substitution(theta, &g)?,
            NormalizationStep::AddDerivative(d) => g.add(&contract_poly(d.poly(), &g)),
            NormalizationStep::Scale(c) => g.scale(c),
        };
    }
    Ok(g)
}

/// Output of `split_off_squares`.
#[derive(Clone, Debug)]
pub struct SquareSplit<F: Field> {
    /// `g + c_{e+1}x_{e+1}² + … + c_n x_n²` with `g ∈ k[x_1..x_e]`.
    pub polynomial: Polynomial<F>,
    /// The `c_r`; each is 1 unless it has no square root in the field.
    pub square_coefficients: Vec<F::Elem>,
    pub q: usize,
    /// `Δ_{s−2}(1)`, which the theory says equals `q`.
    pub delta_count: usize,
    pub steps: Vec<NormalizationStep<F>>,
}

/// Splits the quadratic part in the variables `x_r`, `r > e(s−3)`, into a
/// sum of squares of variables not occurring elsewhere.
pub fn split_off_squares<F: Field>(f: &Polynomial<F>) -> Result<SquareSplit<F>> {
    let n = f.nvars();
    let field = f.field().clone();
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    if s < 2 {
        return Err(Error::UnsupportedDegree { degree: s, minimum: 2 });
    }
    let verdict = check_standard_form(f)?;
    if let Some((r, i)) = verdict.witness {
        return Err(Error::NotStandardForm { r, i });
    }
    let profile = symmetric_decomposition(f)?;
    if profile.h[1] != n {
        return Err(Error::Precondition(format!("all {n} variables must be essential (H(1) = {})", profile.h[1])));
    }
    let e = profile.e(s as isize - 3);
    let delta_count = profile.delta.get(s - 2).and_then(|r| r.get(1)).copied().unwrap_or(0);
    let trunc = s + 1;
    let mut g = f.clone();
    let mut steps = Vec::new();
    let mut square_coefficients = Vec::new();
    let second = |g: &Polynomial<F>, a: usize, b: usize| {
        let mut ex = vec![0u16; n];
        ex[a] += 1;
        ex[b] += 1;
        contract_monomial(&Monomial::from_exps(ex), g)
    };
    for r in (e..n).rev() {
        if second(&g, r, r).is_zero() {
            let partner = (e..n).find(|&r2| r2 != r && !second(&g, r, r2).is_zero());
            let Some(r2) = partner else {
                return Err(Error::Precondition(format!("x{} does not occur quadratically", r + 1)));
            };
            let mut done = false;
            for sign in [1i64, -1] {
                let img = Polynomial::var(n, field.clone(), r)
                    .add(&Polynomial::var(n, field.clone(), r2).scale(&field.from_i64(sign)));
                let theta = Substitution::elementary(n, field.clone(), r, img, trunc)?;
                let cand = dual_substitution(&theta, &g)?;
                if !second(&cand, r, r).is_zero() {
                    g = cand;
                    steps.push(NormalizationStep::Substitute(theta));
                    done = true;
                    break;
                }
            }
            if !done {
                return Err(Error::Precondition(format!("cannot make α_{}² ⌟ f nonzero", r + 1)));
            }
        }
        let tw = twist(&g, r, 2, false)?;
        let c = tw.scale.clone();
        steps.push(NormalizationStep::Substitute(tw.substitution.invert()?));
        g = tw.polynomial;
        // α_r ⌟ g = c·x_r + a; remove the constant.
        let lin = contract_monomial(&Monomial::var(n, r), &g);
        let a = lin.coeff(&Monomial::one(n));
        if !field.is_zero(&a) {
            let coef = field.neg(&field.mul(&a, &field.inv(&c).expect("nonzero")));
            let d = Polynomial::term(field.clone(), Monomial::var(n, r), coef);
            g = g.add(&contract_poly(&d, &g));
            steps.push(NormalizationStep::AddDerivative(Operator::exact(d)));
        }
        // α_r ↦ √c·α_r turns c·x_r² into x_r² when the root exists.
        let coef = match field.sqrt(&c) {
            Some(t) if !field.is_one(&c) => {
                let img = Polynomial::term(field.clone(), Monomial::var(n, r), t);
                let theta = Substitution::elementary(n, field.clone(), r, img, trunc)?;
                g = dual_substitution(&theta, &g)?;
                steps.push(NormalizationStep::Substitute(theta));
                field.one()
            }
            _ => c,
        };
        square_coefficients.push(coef);
    }
    square_coefficients.reverse();
    // Verify the promised shape.
    let mut squares = Polynomial::zero(n, field.clone());
    for (r, c) in (e..n).zip(&square_coefficients) {
        let mut ex = vec![0u16; n];
        ex[r] = 2;
        squares.add_term(Monomial::from_exps(ex), c.clone());
    }
    let rest = g.sub(&squares);
    if (e..n).any(|r| rest.uses_var(r)) {
        return Err(Error::Precondition("square splitting did not separate the variables".into()));
    }
    Ok(SquareSplit { polynomial: g, q: n - e, delta_count, square_coefficients, steps })
}

/// Catalecticant `S_a → P_{s−a}` of a form of degree `s`.
#[derive(Clone, Debug)]
pub struct Catalecticant<F: Field> {
    pub rank: usize,
    /// Rows indexed by degree-`a` monomials, columns by degree-`(s−a)`
    /// monomials, both ascending in degrevlex.
    pub matrix: Matrix<F>,
}

pub fn catalecticant<F: Field>(form: &Polynomial<F>, a: usize) -> Result<Catalecticant<F>> {
    if !form.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let s = form.degree().unwrap_or(0);
    if a > s {
        return Err(Error::InvalidArgument(format!("a = {a} exceeds the degree {s}")));
    }
    let n = form.nvars();
    let field = form.field().clone();
    let cols = monomials_of_degree(n, s - a);
    let rows = monomials_of_degree(n, a).iter().map(|b| cols.iter().map(|c| form.coeff(&b.mul(c))).collect()).collect();
    let matrix = Matrix::from_rows(field, cols.len(), rows);
    Ok(Catalecticant { rank: matrix.rank(), matrix })
}

pub fn catalecticant_rank<F: Field>(form: &Polynomial<F>, a: usize) -> Result<usize> {
    Ok(catalecticant(form, a)?.rank)
}

/// Set-theoretic membership in the fourth secant variety of the Veronese:
/// the middle catalecticant has rank at most four. Proven over the complex
/// numbers; over other fields it is the same rank condition.
pub fn sigma4_membership<F: Field>(form: &Polynomial<F>) -> Result<bool> {
    let s = form.degree().unwrap_or(0);
    if s < 4 {
        return Err(Error::UnsupportedDegree { degree: s, minimum: 4 });
    }
    Ok(catalecticant_rank(form, s / 2)? <= 4)
}

/// The divided power `ℓ^{[s]} = Σ_{|a|=s} c^a x^a` of `ℓ = Σ c_i x_i`. This
/// is the power whose contractions stay on the line through `ℓ`.
pub fn divided_power_of_linear<F: Field>(field: &F, coeffs: &[F::Elem], s: usize) -> Polynomial<F> {
    let n = coeffs.len();
    let terms = monomials_of_degree(n, s).into_iter().map(|m| {
        let mut c = field.one();
        for (i, &e) in m.exps().iter().enumerate() {
            c = field.mul(&c, &field.pow(&coeffs[i], e as u64));
        }
        (m, c)
    });
    Polynomial::from_terms(n, field.clone(), terms)
}

/// `I` is `m`-saturated when `σ · m^{m−l} ⊆ I` forces `σ ∈ I` for every form
/// `σ` of degree `l ≤ m`. Requires `I` homogeneous and known beyond degree `m`.
pub fn is_m_saturated<F: Field>(ideal: &TruncatedIdeal<F>, m: usize) -> Result<bool> {
    if !ideal.is_graded() {
        return Err(Error::NotGraded);
    }
    if ideal.trunc() <= m {
        return Err(Error::InsufficientPrecision { needed: m + 1, available: ideal.trunc() });
    }
    let n = ideal.nvars();
    let field = ideal.field().clone();
    let index = ideal.index();
    let in_degree = |d: usize| -> Vec<Polynomial<F>> {
        ideal
            .echelon()
            .rows()
            .iter()
            .filter(|r| index.degree_of(r[0].0 as usize) == d)
            .map(|r| index.polynomial(&field, r))
            .collect()
    };
    let local = |mons: &[Monomial]| -> BTreeMap<Monomial, u32> {
        mons.iter().enumerate().map(|(k, m)| (m.clone(), k as u32)).collect()
    };
    let coords = |p: &Polynomial<F>, map: &BTreeMap<Monomial, u32>| {
        let mut v: Vec<(u32, F::Elem)> = p.terms().map(|(m, c)| (map[m], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    };
    let top = monomials_of_degree(n, m);
    let top_map = local(&top);
    let mut im = Echelon::new(field.clone(), top.len());
    for p in in_degree(m) {
        im.insert(&coords(&p, &top_map));
    }
    let perp: Vec<Polynomial<F>> = im
        .complement()
        .iter()
        .map(|v| Polynomial::from_terms(n, field.clone(), v.iter().map(|(c, x)| (top[*c as usize].clone(), x.clone()))))
        .collect();
    for l in 0..=m {
        let low = monomials_of_degree(n, l);
        let low_map = local(&low);
        let mut tested = Echelon::new(field.clone(), low.len());
        for mu in monomials_of_degree(n, m - l) {
            for w in &perp {
                let g = contract_monomial(&mu, w);
                if !g.is_zero() {
                    tested.insert(&coords(&g, &low_map));
                }
            }
        }
        let colon_dim = low.len() - tested.rank();
        let have = in_degree(l).len();
        if colon_dim != have {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H(m) ≤ l` for `m ≥ l` and related quick checks are left to callers;
/// this helper recomputes the Hilbert function for convenience.
pub fn hilbert_of<F: Field>(f: &Polynomial<F>) -> Result<Vec<usize>> {
    hilbert_vector(f)
}
