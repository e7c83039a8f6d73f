//! Ray sums, ray decompositions and the one-parameter families they define.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::apolar::{apolar_ideal, apolar_length};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GroebnerBasis, SupportReport};
use crate::ideal::TruncatedIdeal;
use crate::matrix::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{contract_poly, Operator, Polynomial};
use crate::unipoly::UniPoly;

/// `ν` with `π_i(I) = (α_i^ν)`, where `π_i` kills every variable but `α_i`.
pub fn ray_order<F: Field>(ideal: &TruncatedIdeal<F>, i: usize) -> Result<usize> {
    if i >= ideal.nvars() {
        return Err(Error::InvalidArgument(format!("variable index {} out of range", i + 1)));
    }
    let index = ideal.index();
    let pure = |col: u32| {
        let m = index.monomial(col as usize);
        (0..m.nvars()).all(|j| j == i || m.exp(j) == 0)
    };
    let nu = ideal
        .echelon()
        .rows()
        .iter()
        .filter_map(|r| r.iter().find(|(c, _)| pure(*c)).map(|(c, _)| index.degree_of(*c as usize)))
        .min();
    Ok(nu.unwrap_or(ideal.completeness()).min(ideal.completeness()))
}

/// Generators of `{σ ∈ k[α] : σ ⌟ f = 0}`: minimal generators of the local
/// annihilator together with all monomials of degree `deg f + 1`.
pub fn annihilator_polynomials<F: Field>(f: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let ann = apolar_ideal(f, s + 2)?;
    let mut gens: Vec<Polynomial<F>> = ann.minimal_generators()?.into_iter().map(Operator::into_poly).collect();
    push_monomials(&mut gens, f.field(), f.nvars(), s + 1, |_| true);
    Ok(gens)
}

/// Appends the degree-`d` monomials accepted by `keep`, skipping those
/// already divisible by a monomial in `gens`.
fn push_monomials<F: Field>(
    gens: &mut Vec<Polynomial<F>>,
    field: &F,
    n: usize,
    d: usize,
    keep: impl Fn(&Monomial) -> bool,
) {
    let pure: Vec<Monomial> =
        gens.iter().filter(|g| g.len() == 1).filter_map(|g| g.leading().map(|(m, _)| m.clone())).collect();
    for m in monomials_of_degree(n, d) {
        if keep(&m) && !pure.iter().any(|g| g.divides(&m)) {
            gens.push(Polynomial::term(field.clone(), m, field.one()));
        }
    }
}

fn check_partial<F: Field>(f: &Polynomial<F>, partial: &Operator<F>) -> Result<()> {
    if partial.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: partial.nvars() });
    }
    if partial.field() != f.field() {
        return Err(Error::FieldMismatch);
    }
    if !partial.field().is_zero(&partial.constant_term()) {
        return Err(Error::UnitOperator);
    }
    Ok(())
}

/// `g = f + x^d·∂⌟f + x^{2d}·∂²⌟f + …` in one extra variable `x = x_{n+1}`.
pub fn ray_sum<F: Field>(f: &Polynomial<F>, partial: &Operator<F>, d: usize) -> Result<Polynomial<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("ray sums need d >= 2, got {d}")));
    }
    check_partial(f, partial)?;
    let n = f.nvars();
    let mut g = f.extend_vars(1);
    let mut h = f.clone();
    let mut k = 1usize;
    loop {
        h = contract_poly(partial.poly(), &h);
        if h.is_zero() {
            break;
        }
        let mut e = vec![0u16; n + 1];
        e[n] = (k * d) as u16;
        g = g.add(&h.extend_vars(1).mul_monomial(&Monomial::from_exps(e), &f.field().one()));
        k += 1;
    }
    Ok(g)
}

/// `I = J + (α_i^ν − q)` with `J ⊆ I ∩ p_i` and `q ∈ p_i`, where `p_i` is
/// generated by the variables other than `α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayDecomposition<F: Field> {
    pub nvars: usize,
    pub ray_index: usize,
    pub nu: usize,
    /// Generators of `J_poly = J ∩ k[α]`.
    pub j_generators: Vec<Polynomial<F>>,
    pub q: Polynomial<F>,
}

/// Outcome of comparing `Ann(g)` with the explicit ray-sum generators.
#[derive(Clone, Debug)]
pub struct RaySumCheck<F: Field> {
    pub ray_sum: Polynomial<F>,
    pub holds: bool,
    /// Present exactly when `holds`.
    pub decomposition: Option<RayDecomposition<F>>,
    /// An element of one side missing from the other, when they differ.
    pub counterexample: Option<Polynomial<F>>,
    /// Truncation at which the ideals were compared.
    pub trunc: usize,
}

/// Compares `Ann(g)` with the ideal generated by `gens` at `D = deg g + 2`.
/// Returns an element of the symmetric difference when they differ.
pub fn compare_with_annihilator<F: Field>(
    g: &Polynomial<F>,
    gens: &[Polynomial<F>],
) -> Result<(bool, Option<Polynomial<F>>, usize)> {
    let s = g.degree().ok_or(Error::ZeroPolynomial)?;
    let trunc = s + 2;
    let ann = apolar_ideal(g, trunc)?;
    let rhs = TruncatedIdeal::from_generators(g.nvars(), g.field().clone(), gens, trunc)?;
    let missing =
        |a: &TruncatedIdeal<F>, b: &TruncatedIdeal<F>| b.basis_polynomials().into_iter().find(|p| !a.contains_poly(p));
    if let Some(p) = missing(&ann, &rhs) {
        return Ok((false, Some(p), trunc));
    }
    if let Some(p) = missing(&rhs, &ann) {
        return Ok((false, Some(p), trunc));
    }
    Ok((true, None, trunc))
}

/// Verifies `Ann_T(g) = Ann_S(f)T + α·Ann_S(∂⌟f)T + (α^d − ∂)T` for the
/// ray sum `g`, and on success returns the resulting ray decomposition with
/// respect to the new variable.
pub fn ray_sum_annihilator_check<F: Field>(
    f: &Polynomial<F>,
    partial: &Operator<F>,
    d: usize,
) -> Result<RaySumCheck<F>> {
    let g = ray_sum(f, partial, d)?;
    let df = contract_poly(partial.poly(), f);
    if df.is_zero() {
        return Err(Error::Precondition("∂ ⌟ f must be nonzero".into()));
    }
    let n = f.nvars();
    let field = f.field().clone();
    let alpha = Polynomial::var(n + 1, field.clone(), n);
    let mut j = Vec::new();
    for p in annihilator_polynomials(f)? {
        j.push(p.extend_vars(1));
    }
    for p in annihilator_polynomials(&df)? {
        j.push(p.extend_vars(1).mul(&alpha));
    }
    let q = partial.poly().extend_vars(1);
    let mut ad = vec![0u16; n + 1];
    ad[n] = d as u16;
    let main = Polynomial::monomial(field.clone(), &ad).sub(&q);
    let mut gens = j.clone();
    gens.push(main);
    let (holds, counterexample, trunc) = compare_with_annihilator(&g, &gens)?;
    let decomposition = holds.then(|| RayDecomposition { nvars: n + 1, ray_index: n, nu: d, j_generators: j, q });
    Ok(RaySumCheck { ray_sum: g, holds, decomposition, counterexample, trunc })
}

/// The decomposition with `J = I ∩ p_i`, `ν` the ray order and `q` read off
/// from an element of `I` whose projection is exactly `α_i^ν`. Needs the
/// completeness bound of `I` within its truncation.
pub fn ray_decomposition<F: Field>(ideal: &TruncatedIdeal<F>, i: usize) -> Result<RayDecomposition<F>> {
    let n = ideal.nvars();
    let d = ideal.trunc();
    if ideal.completeness() > d {
        return Err(Error::NotCertified { trunc: d });
    }
    let nu = ray_order(ideal, i)?;
    let field = ideal.field().clone();
    let rows = ideal.basis_polynomials();
    let r = rows.len();
    // [π_i(row) | e_row], reduced: rows with zero projection give J.
    let pure_exp = |m: &Monomial| (0..n).all(|j| j == i || m.exp(j) == 0).then(|| m.exp(i) as usize);
    let mut data = Vec::with_capacity(r);
    for (k, p) in rows.iter().enumerate() {
        let mut row = vec![field.zero(); d + r];
        for (m, c) in p.terms() {
            if let Some(e) = pure_exp(m) {
                row[e] = c.clone();
            }
        }
        row[d + k] = field.one();
        data.push(row);
    }
    let (red, pivots) = Matrix::from_rows(field.clone(), d + r, data).rref();
    let combine = |coeffs: &[F::Elem]| {
        let mut acc = Polynomial::zero(n, field.clone());
        for (c, p) in coeffs.iter().zip(&rows) {
            if !field.is_zero(c) {
                acc = acc.add(&p.scale(c));
            }
        }
        acc
    };
    let mut j_generators = Vec::new();
    let mut q = None;
    for (row_idx, &pc) in pivots.iter().enumerate() {
        let coeffs = &red.row(row_idx)[d..];
        if pc >= d {
            let p = combine(coeffs);
            if !p.is_zero() {
                j_generators.push(p);
            }
        } else if pc == nu {
            let sigma = combine(coeffs);
            let mut e = vec![0u16; n];
            e[i] = nu as u16;
            q = Some(Polynomial::monomial(field.clone(), &e).sub(&sigma));
        }
    }
    let q = q.ok_or_else(|| Error::Precondition("no element of I projects onto α_i^ν".into()))?;
    push_monomials(&mut j_generators, &field, n, d, |m| (0..n).any(|j| j != i && m.exp(j) > 0));
    Ok(RayDecomposition { nvars: n, ray_index: i, nu, j_generators, q })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `α_i^ν − t·α_i − q`.
    Lower,
    /// `α_i^ν − t·α_i^{ν−1} − q`.
    Upper,
    /// Generators given by hand.
    Custom,
}

/// A generator `p_0 + t·p_1` over `k[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGenerator<F: Field> {
    pub constant: Polynomial<F>,
    pub linear: Polynomial<F>,
}

impl<F: Field> FamilyGenerator<F> {
    pub fn specialize(&self, lambda: &F::Elem) -> Polynomial<F> {
        self.constant.add(&self.linear.scale(lambda))
    }
}

/// Where a family came from, for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySource<F: Field> {
    RaySum { f: Polynomial<F>, partial: Polynomial<F>, d: usize },
    Stretched { f: Polynomial<F>, c: usize },
    Decomposition,
    Custom,
}

#[derive(Clone, Debug)]
pub struct RayFamily<F: Field> {
    pub nvars: usize,
    pub field: F,
    pub kind: FamilyKind,
    pub ray_index: Option<usize>,
    pub nu: Option<usize>,
    pub generators: Vec<FamilyGenerator<F>>,
    pub source: FamilySource<F>,
}

impl<F: Field> RayFamily<F> {
    pub fn from_decomposition(dec: &RayDecomposition<F>, kind: FamilyKind, field: F) -> Result<Self> {
        let n = dec.nvars;
        let i = dec.ray_index;
        let mut gens: Vec<FamilyGenerator<F>> = dec
            .j_generators
            .iter()
            .map(|p| FamilyGenerator { constant: p.clone(), linear: Polynomial::zero(n, field.clone()) })
            .collect();
        let mut top = vec![0u16; n];
        top[i] = dec.nu as u16;
        let shift_exp = match kind {
            FamilyKind::Lower => 1,
            FamilyKind::Upper => dec.nu - 1,
            FamilyKind::Custom => return Err(Error::InvalidArgument("custom families have no ray generator".into())),
        };
        let mut sh = vec![0u16; n];
        sh[i] = shift_exp as u16;
        gens.push(FamilyGenerator {
            constant: Polynomial::monomial(field.clone(), &top).sub(&dec.q),
            linear: Polynomial::monomial(field.clone(), &sh).neg(),
        });
        Ok(RayFamily {
            nvars: n,
            field,
            kind,
            ray_index: Some(i),
            nu: Some(dec.nu),
            generators: gens,
            source: FamilySource::Decomposition,
        })
    }

    pub fn custom(nvars: usize, field: F, generators: Vec<FamilyGenerator<F>>) -> Self {
        RayFamily {
            nvars,
            field,
            kind: FamilyKind::Custom,
            ray_index: None,
            nu: None,
            generators,
            source: FamilySource::Custom,
        }
    }

    /// Ray-sum and stretched families are flat by theorem; the probe then
    /// only confirms it.
    pub fn proven_flat(&self) -> bool {
        matches!(self.source, FamilySource::RaySum { .. } | FamilySource::Stretched { .. })
    }

    /// The largest `t`-degree among the generators (0 or 1).
    pub fn t_degree(&self) -> usize {
        usize::from(self.generators.iter().any(|g| !g.linear.is_zero()))
    }

    pub fn specialize(&self, lambda: &F::Elem) -> Vec<Polynomial<F>> {
        self.generators.iter().map(|g| g.specialize(lambda)).collect()
    }
}

/// The lower or upper family of the ray decomposition of `Ann(g)` coming
/// from a ray sum.
pub fn build_ray_family<F: Field>(
    f: &Polynomial<F>,
    partial: &Operator<F>,
    d: usize,
    kind: FamilyKind,
) -> Result<RayFamily<F>> {
    let check = ray_sum_annihilator_check(f, partial, d)?;
    let dec = check.decomposition.ok_or_else(|| {
        Error::HypothesisNotMet("the annihilator of the ray sum does not match its explicit generators".into())
    })?;
    let mut fam = RayFamily::from_decomposition(&dec, kind, f.field().clone())?;
    fam.source = FamilySource::RaySum { f: f.clone(), partial: partial.poly().clone(), d };
    Ok(fam)
}

/// The fiber over `t = λ` as a zero-dimensional ideal.
#[derive(Clone, Debug)]
pub struct Fiber<F: Field> {
    pub lambda: F::Elem,
    pub basis: GroebnerBasis<F>,
    pub length: usize,
}

pub fn fiber_at<F: Field>(family: &RayFamily<F>, lambda: &F::Elem) -> Result<Fiber<F>> {
    let gens = family.specialize(lambda);
    let basis = GroebnerBasis::new(family.nvars, family.field.clone(), &gens)?;
    let length = basis.quotient_dimension()?;
    Ok(Fiber { lambda: lambda.clone(), basis, length })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatnessStatus {
    FlatConsistent,
    NotFlat,
}

#[derive(Clone, Debug)]
pub struct FlatnessVerdict<F: Field> {
    pub status: FlatnessStatus,
    /// True when a theorem guarantees flatness; otherwise the verdict is
    /// Monte Carlo evidence only.
    pub proven: bool,
    /// `(λ, length)` for `λ = 0` and the samples, sorted by `λ`.
    pub lengths: Vec<(F::Elem, usize)>,
    /// A sample whose length differs from the special fiber.
    pub witness: Option<F::Elem>,
}

/// Draws `count` distinct nonzero sample values.
pub fn sample_lambdas<F: Field>(field: &F, count: usize, seed: u64) -> Vec<F::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<F::Elem> = Vec::new();
    let mut bound = 50;
    while out.len() < count {
        let x = field.random_nonzero(&mut rng, bound);
        if !out.contains(&x) {
            out.push(x);
        } else {
            bound += 10;
        }
    }
    out
}

/// Length of the fiber at `t = 0` and at `samples` random nonzero `λ`. For
/// a finite family over `k[t]`, constant length at every point is the same
/// as flatness; sampling can only refute it.
pub fn flatness_probe<F: Field>(family: &RayFamily<F>, samples: usize, seed: u64) -> Result<FlatnessVerdict<F>> {
    let field = &family.field;
    let zero = fiber_at(family, &field.zero())?.length;
    let mut lengths = vec![(field.zero(), zero)];
    let mut witness = None;
    for lambda in sample_lambdas(field, samples, seed) {
        let len = fiber_at(family, &lambda)?.length;
        if len != zero && witness.is_none() {
            witness = Some(lambda.clone());
        }
        lengths.push((lambda, len));
    }
    lengths.sort();
    let status = if witness.is_none() { FlatnessStatus::FlatConsistent } else { FlatnessStatus::NotFlat };
    Ok(FlatnessVerdict { status, proven: family.proven_flat() && witness.is_none(), lengths, witness })
}

/// Expected and computed structure of a lower-family fiber.
#[derive(Clone, Debug)]
pub struct FiberStructureReport<F: Field> {
    pub lambda: F::Elem,
    pub d: usize,
    pub length_f: usize,
    pub length_partial_f: usize,
    pub total_length: usize,
    pub expected_total: usize,
    /// The `(d−1)`-th roots of `λ`.
    pub roots: Vec<F::Elem>,
    pub support: SupportReport<F>,
    pub expected_support: Vec<(Vec<F::Elem>, usize)>,
    pub total_ok: bool,
    pub support_ok: bool,
    pub holds: bool,
}

/// For `∂² ⌟ f = 0` the lower family fiber over `λ ≠ 0` is
/// `Spec Apolar(f) ⊔ (Spec Apolar(∂⌟f))^{⊔(d−1)}`, the extra points sitting
/// at the `(d−1)`-th roots of `λ` on the ray axis.
pub fn fiber_structure_check<F: Field>(
    f: &Polynomial<F>,
    partial: &Operator<F>,
    d: usize,
    lambda: &F::Elem,
) -> Result<FiberStructureReport<F>> {
    check_partial(f, partial)?;
    let field = f.field().clone();
    let df = contract_poly(partial.poly(), f);
    if df.is_zero() {
        return Err(Error::Precondition("∂ ⌟ f must be nonzero".into()));
    }
    if !contract_poly(partial.poly(), &df).is_zero() {
        return Err(Error::Precondition("∂² ⌟ f must vanish".into()));
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("ray sums need d >= 2, got {d}")));
    }
    let p = field.characteristic();
    if p != 0 && (d as u64 - 1) % p == 0 {
        return Err(Error::Precondition(format!("the characteristic divides d − 1 = {}", d - 1)));
    }
    if field.is_zero(lambda) {
        return Err(Error::Precondition("λ must be nonzero".into()));
    }
    // Roots of T^{d−1} − λ.
    let mut c = vec![field.zero(); d];
    c[0] = field.neg(lambda);
    c[d - 1] = field.one();
    let roots = UniPoly::new(field.clone(), c).roots();
    if roots.len() != d - 1 {
        return Err(Error::RootsUnavailable(format!(
            "T^{} − {} has only {} roots in {}",
            d - 1,
            field.format(lambda),
            roots.len(),
            field.kind()
        )));
    }
    let family = build_ray_family(f, partial, d, FamilyKind::Lower)?;
    let fiber = fiber_at(&family, lambda)?;
    let support = fiber.basis.support_and_local_lengths()?;
    let length_f = apolar_length(f)?;
    let length_partial_f = apolar_length(&df)?;
    let n = f.nvars();
    let mut expected_support = vec![(vec![field.zero(); n + 1], length_f)];
    for r in &roots {
        let mut pt = vec![field.zero(); n + 1];
        pt[n] = r.clone();
        expected_support.push((pt, length_partial_f));
    }
    expected_support.sort();
    let expected_total = length_f + (d - 1) * length_partial_f;
    let total_ok = fiber.length == expected_total;
    let support_ok = support.complete && support.points == expected_support;
    Ok(FiberStructureReport {
        lambda: lambda.clone(),
        d,
        length_f,
        length_partial_f,
        total_length: fiber.length,
        expected_total,
        roots,
        support,
        expected_support,
        total_ok,
        support_ok,
        holds: total_ok && support_ok,
    })
}

/// Outcome of the containment `I ∩ J² ∩ (I² : ∂) ⊆ I·J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentPreservingReport {
    pub holds: bool,
    /// `I·J ⊆ I ∩ J² ∩ (I² : ∂)`, which always holds.
    pub trivial_containment: bool,
    /// Whether dropping the term still breaks the containment, for the
    /// terms `I`, `J²`, `(I² : ∂)` in that order.
    pub necessary: [bool; 3],
    pub trunc: usize,
    pub colength_i: usize,
    pub colength_j: usize,
}

/// The tangent-preserving criterion for `I = Ann(f)`, `J = (I : ∂) = Ann(∂⌟f)`,
/// computed at `D = 2s + 2` where every ideal involved is certified.
pub fn tangent_preserving_check<F: Field>(f: &Polynomial<F>, partial: &Operator<F>) -> Result<TangentPreservingReport> {
    check_partial(f, partial)?;
    let df = contract_poly(partial.poly(), f);
    if df.is_zero() {
        return Err(Error::Precondition("∂ ⌟ f must be nonzero".into()));
    }
    if !contract_poly(partial.poly(), &df).is_zero() {
        return Err(Error::Precondition("∂² ⌟ f must vanish".into()));
    }
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let trunc = 2 * s + 2;
    let i = apolar_ideal(f, trunc)?;
    let j = i.colon(partial)?;
    let j2 = j.product(&j)?;
    let i2 = i.product(&i)?;
    let i2d = i2.colon(partial)?;
    let ij = i.product(&j)?;
    let lhs = i.intersect(&j2)?.intersect(&i2d)?;
    let holds = ij.contains(&lhs)?;
    let trivial_containment = lhs.contains(&ij)?;
    let pairs = [(&j2, &i2d), (&i, &i2d), (&i, &j2)];
    let mut necessary = [false; 3];
    for (k, (a, b)) in pairs.iter().enumerate() {
        necessary[k] = !ij.contains(&a.intersect(b)?)?;
    }
    Ok(TangentPreservingReport {
        holds,
        trivial_containment,
        necessary,
        trunc,
        colength_i: i.colength(),
        colength_j: j.colength(),
    })
}

/// Result of the stretched-degeneration test.
#[derive(Clone, Debug)]
pub struct StretchedReport<F: Field> {
    pub socle_degree: usize,
    /// Least `c` with `α_1^c ⌟ (f − x_1^s) = 0`.
    pub c: usize,
    pub family: RayFamily<F>,
    pub flatness: FlatnessVerdict<F>,
}

/// For `f = x_1^s + g` with `α_1^c ⌟ g = 0` and `2c ≤ s`, the upper ray
/// family of `Ann(f)` with respect to `α_1` is a degeneration.
pub fn stretched_degeneration_check<F: Field>(
    f: &Polynomial<F>,
    samples: usize,
    seed: u64,
) -> Result<StretchedReport<F>> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = f.nvars();
    let field = f.field().clone();
    let mut top = vec![0u16; n];
    top[0] = s as u16;
    let top = Monomial::from_exps(top);
    if !field.is_one(&f.coeff(&top)) {
        return Err(Error::HypothesisNotMet(format!("f must contain x1^{s} with coefficient 1")));
    }
    let g = f.sub(&Polynomial::term(field.clone(), top, field.one()));
    let mut c = 0;
    loop {
        let mut e = vec![0u16; n];
        e[0] = c as u16;
        if contract_poly(&Polynomial::monomial(field.clone(), &e), &g).is_zero() {
            break;
        }
        c += 1;
    }
    if 2 * c > s {
        return Err(Error::HypothesisNotMet(format!("α1^c ⌟ (f − x1^s) = 0 first for c = {c}, but 2c > s = {s}")));
    }
    let ideal = apolar_ideal(f, s + 1)?;
    let dec = ray_decomposition(&ideal, 0)?;
    let mut family = RayFamily::from_decomposition(&dec, FamilyKind::Upper, field)?;
    family.source = FamilySource::Stretched { f: f.clone(), c };
    let flatness = flatness_probe(&family, samples, seed)?;
    Ok(StretchedReport { socle_degree: s, c, family, flatness })
}
