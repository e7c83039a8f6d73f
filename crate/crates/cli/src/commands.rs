//! The analysis subcommands. Each one parses its inputs, runs the core
//! computation over the requested field and returns a serializable report.

use std::time::Instant;

use apolar_core::apolar::{hilbert_vector, is_complete_intersection, unobstructedness_report};
use apolar_core::groebner::SupportReport;
use apolar_core::hf::{check_standard_form, symmetric_decomposition};
use apolar_core::poly::contract_poly;
use apolar_core::ray::{
    build_ray_family, fiber_at, fiber_structure_check, flatness_probe, ray_sum_annihilator_check,
    tangent_preserving_check, FamilyKind, FlatnessStatus,
};
use apolar_core::{Error, Field, Operator, Polynomial};
use serde::Serialize;

use crate::field_spec::FieldSpec;
use crate::parse::{max_variable_index, parse_polynomial, VarKind};
use crate::report::*;
use crate::{with_field, CliError};

/// Options shared by the single-polynomial commands.
#[derive(clap::Args, Clone, Debug)]
pub struct Common {
    /// `q` for the rationals or `fp:P` for a prime field.
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    /// Number of variables; defaults to the largest index that occurs.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock timings (makes the output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(clap::Args, Clone, Debug)]
pub struct AnalyzeArgs {
    /// Dual generator in x1..xn.
    #[arg(value_name = "POLY", required_unless_present = "poly_flag", conflicts_with = "poly_flag")]
    pub poly: Option<String>,
    #[arg(long = "poly", value_name = "POLY")]
    pub poly_flag: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(clap::Args, Clone, Debug)]
pub struct RayArgs {
    /// Dual generator in x1..xn.
    #[arg(long)]
    pub poly: String,
    /// Operator in a1..an, a nonunit.
    #[arg(long)]
    pub partial: String,
    /// Exponent of the new variable, at least 2.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Lower,
    Upper,
}

#[derive(clap::Args, Clone, Debug)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub ray: RayArgs,
    #[arg(long, value_enum, default_value = "lower")]
    pub kind: KindArg,
    /// Random nonzero fibers to probe besides t = 0.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fiber for the structure check; defaults to 2^(d-1).
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(clap::Args, Clone, Debug)]
pub struct TangentArgs {
    #[arg(long)]
    pub poly: String,
    #[arg(long)]
    pub partial: String,
    #[command(flatten)]
    pub common: Common,
}

/// Human-readable rendering and the verification verdict of a report.
pub trait Render: Serialize {
    fn text(&self) -> String;
    /// False when the computation contradicts what should hold.
    fn verified(&self) -> bool {
        true
    }
}

/// Collects per-phase timings when enabled.
pub(crate) struct Timer(Option<Timings>);

impl Timer {
    pub(crate) fn new(on: bool) -> Self {
        Timer(on.then(Timings::new))
    }

    pub(crate) fn run<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let Some(map) = &mut self.0 else { return f() };
        let t = Instant::now();
        let out = f();
        let ms = (t.elapsed().as_secs_f64() * 1e6).round() / 1e3;
        map.insert(name.to_string(), ms);
        out
    }

    pub(crate) fn finish(self) -> Option<Timings> {
        self.0
    }
}

fn nvars(flag: Option<usize>, inputs: &[(&str, VarKind)]) -> usize {
    flag.unwrap_or_else(|| inputs.iter().map(|(s, k)| max_variable_index(s, *k)).max().unwrap_or(0).max(1))
}

fn parse<F: Field>(src: &str, n: usize, kind: VarKind, field: &F) -> Result<Polynomial<F>, CliError> {
    parse_polynomial(src, n, kind, field.clone())
        .map_err(|error| CliError::Parse { source_text: src.to_string(), error })
}

fn seq(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn poly_text<F: Field>(p: &Polynomial<F>) -> String {
    p.to_string_with("x")
}

fn op_text<F: Field>(p: &Polynomial<F>) -> String {
    p.to_string_with("a")
}

fn support_points<F: Field>(field: &F, n: usize, rep: &SupportReport<F>) -> Vec<SupportPoint> {
    let unsplit: Vec<usize> = rep.unsplit.iter().map(|(i, _)| *i).collect();
    rep.points
        .iter()
        .map(|(coords, length)| {
            let mut it = coords.iter();
            let point = (0..n)
                .map(|i| if unsplit.contains(&i) { "?".to_string() } else { field.format(it.next().unwrap()) })
                .collect();
            SupportPoint { point, length: *length }
        })
        .collect()
}

fn points_text(pts: &[SupportPoint]) -> String {
    let parts: Vec<String> = pts.iter().map(|p| format!("({}):{}", p.point.join(","), p.length)).collect();
    parts.join(" ")
}

pub fn analyze(a: &AnalyzeArgs) -> Result<AnalysisReport, CliError> {
    let src = a.poly.as_deref().or(a.poly_flag.as_deref()).unwrap_or_default();
    with_field!(a.common.field, |field| analyze_in(field, src, &a.common))
}

fn analyze_in<F: Field>(field: F, src: &str, c: &Common) -> Result<AnalysisReport, CliError> {
    let n = nvars(c.vars, &[(src, VarKind::Dual)]);
    let f = parse(src, n, VarKind::Dual, &field)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    let mut timer = Timer::new(c.timings);
    let profile = timer.run("symmetric_decomposition", || symmetric_decomposition(&f))?;
    let sf = timer.run("standard_form", || check_standard_form(&f))?;
    let un = timer.run("tangent_space", || unobstructedness_report(&f))?;
    let ci = timer.run("complete_intersection", || is_complete_intersection(&f))?;
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        command: "analyze".into(),
        input: src.to_string(),
        field: c.field.to_string(),
        nvars: n,
        polynomial: poly_text(&f),
        length: un.length,
        socle_degree: profile.socle_degree,
        e_vector: profile.e_vector(),
        symmetric_decomposition: profile.delta.clone(),
        hilbert_function: profile.h,
        standard_form: StandardForm { holds: sf.holds, witness: sf.witness.map(|(r, i)| Witness { r, i }) },
        tangent_dimension: un.tangent_dim,
        embedding_dimension: un.embedding_dim,
        unobstructed: un.is_unobstructed,
        complete_intersection: ci,
        timings_ms: timer.finish(),
    })
}

impl Render for AnalysisReport {
    fn text(&self) -> String {
        let mut out = format!("f = {}  over {} in {} variables\n", self.polynomial, self.field, self.nvars);
        out += &format!("Hilbert function      {}\n", seq(&self.hilbert_function));
        out += &format!("length                {}\n", self.length);
        out += &format!("socle degree          {}\n", self.socle_degree);
        for (a, row) in self.symmetric_decomposition.iter().enumerate() {
            out += &format!("Δ{a:<20} {}\n", seq(row));
        }
        out += &format!("e-vector              {}\n", seq(&self.e_vector));
        out += &match &self.standard_form.witness {
            None => "standard form         yes\n".to_string(),
            Some(w) => format!("standard form         no (r={}, i={})\n", w.r, w.i),
        };
        out += &format!("tangent dimension     {}\n", self.tangent_dimension);
        out += &format!("embedding dimension   {}\n", self.embedding_dimension);
        out += &format!("unobstructed          {}\n", if self.unobstructed { "yes" } else { "no (obstructed)" });
        out += &format!("complete intersection {}\n", if self.complete_intersection { "yes" } else { "no" });
        out += &timings_text(&self.timings_ms);
        out
    }
}

fn timings_text(t: &Option<Timings>) -> String {
    let Some(t) = t else { return String::new() };
    t.iter().map(|(k, v)| format!("time {k}: {v:.3} ms\n")).collect()
}

struct RayInputs<F: Field> {
    n: usize,
    f: Polynomial<F>,
    partial: Operator<F>,
}

fn ray_inputs<F: Field>(field: &F, poly: &str, partial: &str, vars: Option<usize>) -> Result<RayInputs<F>, CliError> {
    let n = nvars(vars, &[(poly, VarKind::Dual), (partial, VarKind::Operator)]);
    let f = parse(poly, n, VarKind::Dual, field)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    let p = parse(partial, n, VarKind::Operator, field)?;
    Ok(RayInputs { n, f, partial: Operator::exact(p) })
}

pub fn raysum(a: &RayArgs) -> Result<RaySumReport, CliError> {
    with_field!(a.common.field, |field| raysum_in(field, a))
}

fn raysum_in<F: Field>(field: F, a: &RayArgs) -> Result<RaySumReport, CliError> {
    let RayInputs { n, f, partial } = ray_inputs(&field, &a.poly, &a.partial, a.common.vars)?;
    let mut timer = Timer::new(a.common.timings);
    let chk = timer.run("annihilator_identity", || ray_sum_annihilator_check(&f, &partial, a.d))?;
    let hilbert_f = hilbert_vector(&f)?;
    let hilbert_ray_sum = timer.run("hilbert", || hilbert_vector(&chk.ray_sum))?;
    Ok(RaySumReport {
        schema_version: SCHEMA_VERSION,
        command: "raysum".into(),
        field: a.common.field.to_string(),
        nvars: n,
        f: poly_text(&f),
        partial: op_text(partial.poly()),
        d: a.d,
        ray_sum: poly_text(&chk.ray_sum),
        hilbert_f,
        hilbert_ray_sum,
        annihilator_identity: IdentityCheck {
            holds: chk.holds,
            trunc: chk.trunc,
            counterexample: chk.counterexample.as_ref().map(op_text),
        },
        timings_ms: timer.finish(),
    })
}

impl Render for RaySumReport {
    fn text(&self) -> String {
        let mut out = format!("f = {}, ∂ = {}, d = {} over {}\n", self.f, self.partial, self.d, self.field);
        out += &format!("ray sum      g = {}\n", self.ray_sum);
        out += &format!("H(f)         {}\n", seq(&self.hilbert_f));
        out += &format!("H(g)         {}\n", seq(&self.hilbert_ray_sum));
        let id = &self.annihilator_identity;
        out += &format!(
            "Ann(g) = Ann(f) + α·Ann(∂f) + (α^d − ∂)   {} (checked mod m^{})\n",
            if id.holds { "holds" } else { "FAILS" },
            id.trunc
        );
        if let Some(w) = &id.counterexample {
            out += &format!("  witness {w}\n");
        }
        out += &timings_text(&self.timings_ms);
        out
    }

    fn verified(&self) -> bool {
        self.annihilator_identity.holds
    }
}

pub fn family(a: &FamilyArgs) -> Result<FamilyReport, CliError> {
    with_field!(a.ray.common.field, |field| family_in(field, a))
}

fn family_in<F: Field>(field: F, a: &FamilyArgs) -> Result<FamilyReport, CliError> {
    let c = &a.ray.common;
    let RayInputs { n, f, partial } = ray_inputs(&field, &a.ray.poly, &a.ray.partial, c.vars)?;
    let kind = match a.kind {
        KindArg::Lower => FamilyKind::Lower,
        KindArg::Upper => FamilyKind::Upper,
    };
    let mut timer = Timer::new(c.timings);
    let fam = timer.run("family", || build_ray_family(&f, &partial, a.ray.d, kind))?;
    let verdict = timer.run("flatness_probe", || flatness_probe(&fam, a.samples, a.seed))?;
    let m = n + 1;
    let fibers = timer.run("fiber_supports", || -> Result<Vec<FiberRow>, CliError> {
        let mut rows = Vec::new();
        for (lambda, length) in &verdict.lengths {
            let rep = fiber_at(&fam, lambda)?.basis.support_and_local_lengths()?;
            rows.push(FiberRow {
                lambda: field.format(lambda),
                length: *length,
                support: support_points(&field, m, &rep),
                support_complete: rep.complete,
            });
        }
        Ok(rows)
    })?;
    let lambda = match &a.lambda {
        Some(src) => {
            let p = parse(src, 1, VarKind::Dual, &field)?;
            if p.degree().unwrap_or(0) > 0 {
                return Err(CliError::Usage(format!("--lambda must be a constant, got '{src}'")));
            }
            p.coeff(&apolar_core::Monomial::one(1))
        }
        None => field.pow(&field.from_i64(2), a.ray.d.saturating_sub(1) as u64),
    };
    let df = contract_poly(partial.poly(), &f);
    let (fiber_structure, fiber_structure_note) = if kind != FamilyKind::Lower {
        (None, Some("fiber structure is predicted for lower families only".to_string()))
    } else if !contract_poly(partial.poly(), &df).is_zero() {
        (None, Some("∂² ⌟ f ≠ 0, no structure prediction".to_string()))
    } else {
        match timer.run("fiber_structure", || fiber_structure_check(&f, &partial, a.ray.d, &lambda)) {
            Ok(r) => (
                Some(FiberStructure {
                    lambda: field.format(&r.lambda),
                    holds: r.holds,
                    length_f: r.length_f,
                    length_partial_f: r.length_partial_f,
                    expected_total: r.expected_total,
                    total_length: r.total_length,
                    roots: r.roots.iter().map(|x| field.format(x)).collect(),
                    expected_support: r
                        .expected_support
                        .iter()
                        .map(|(p, l)| SupportPoint { point: p.iter().map(|x| field.format(x)).collect(), length: *l })
                        .collect(),
                    support: support_points(&field, m, &r.support),
                }),
                None,
            ),
            Err(e @ (Error::RootsUnavailable(_) | Error::Precondition(_))) => (None, Some(e.to_string())),
            Err(e) => return Err(e.into()),
        }
    };
    let status = match verdict.status {
        FlatnessStatus::FlatConsistent => "FLAT_CONSISTENT",
        FlatnessStatus::NotFlat => "NOT_FLAT",
    };
    Ok(FamilyReport {
        schema_version: SCHEMA_VERSION,
        command: "family".into(),
        field: c.field.to_string(),
        nvars: n,
        f: poly_text(&f),
        partial: op_text(partial.poly()),
        d: a.ray.d,
        kind: match kind {
            FamilyKind::Upper => "upper",
            _ => "lower",
        }
        .into(),
        ray_index: fam.ray_index.unwrap_or(n),
        nu: fam.nu.unwrap_or(0),
        generators: fam
            .generators
            .iter()
            .map(|g| Generator { constant: op_text(&g.constant), linear: op_text(&g.linear) })
            .collect(),
        samples: a.samples,
        seed: a.seed,
        flatness: Flatness {
            status: status.into(),
            pedigree: if fam.proven_flat() { "proven" } else { "monte-carlo" }.into(),
            witness: verdict.witness.as_ref().map(|w| field.format(w)),
            fibers,
        },
        fiber_structure,
        fiber_structure_note,
        timings_ms: timer.finish(),
    })
}

impl Render for FamilyReport {
    fn text(&self) -> String {
        let mut out = format!(
            "{} family of f = {}, ∂ = {}, d = {} over {}\n",
            self.kind, self.f, self.partial, self.d, self.field
        );
        out += &format!("ray variable a{}, ν = {}\n", self.ray_index + 1, self.nu);
        for g in &self.generators {
            if g.linear == "0" {
                out += &format!("  {}\n", g.constant);
            } else {
                out += &format!("  {} + t·({})\n", g.constant, g.linear);
            }
        }
        out += &format!("flatness: {} ({})\n", self.flatness.status, self.flatness.pedigree);
        out += &format!("  {:>12}  {:>6}  support\n", "λ", "length");
        for row in &self.flatness.fibers {
            let mark = if row.support_complete { "" } else { " (partial: roots outside the field)" };
            out += &format!("  {:>12}  {:>6}  {}{mark}\n", row.lambda, row.length, points_text(&row.support));
        }
        if let Some(fs) = &self.fiber_structure {
            out += &format!(
                "fiber structure at λ = {}: {} (length {} = {} + {}·{}, expected {})\n",
                fs.lambda,
                if fs.holds { "as predicted" } else { "MISMATCH" },
                fs.total_length,
                fs.length_f,
                self.d - 1,
                fs.length_partial_f,
                fs.expected_total
            );
            out += &format!("  expected support {}\n", points_text(&fs.expected_support));
            out += &format!("  computed support {}\n", points_text(&fs.support));
        }
        if let Some(note) = &self.fiber_structure_note {
            out += &format!("fiber structure skipped: {note}\n");
        }
        out += &timings_text(&self.timings_ms);
        out
    }

    fn verified(&self) -> bool {
        let flat_ok = !(self.flatness.status == "NOT_FLAT" && self.flatness.pedigree == "proven");
        flat_ok && self.fiber_structure.as_ref().map_or(true, |f| f.holds)
    }
}

pub fn tangent_preserve(a: &TangentArgs) -> Result<TangentPreserveReport, CliError> {
    with_field!(a.common.field, |field| tangent_in(field, a))
}

fn tangent_in<F: Field>(field: F, a: &TangentArgs) -> Result<TangentPreserveReport, CliError> {
    let RayInputs { n, f, partial } = ray_inputs(&field, &a.poly, &a.partial, a.common.vars)?;
    let mut timer = Timer::new(a.common.timings);
    let r = timer.run("containment", || tangent_preserving_check(&f, &partial))?;
    Ok(TangentPreserveReport {
        schema_version: SCHEMA_VERSION,
        command: "tangent-preserve".into(),
        field: a.common.field.to_string(),
        nvars: n,
        f: poly_text(&f),
        partial: op_text(partial.poly()),
        holds: r.holds,
        trivial_containment: r.trivial_containment,
        necessary: Necessity { i: r.necessary[0], j_squared: r.necessary[1], i_squared_colon: r.necessary[2] },
        trunc: r.trunc,
        colength_i: r.colength_i,
        colength_j: r.colength_j,
        timings_ms: timer.finish(),
    })
}

impl Render for TangentPreserveReport {
    fn text(&self) -> String {
        let yn = |b: bool| if b { "necessary" } else { "redundant" };
        let mut out = format!("f = {}, ∂ = {} over {}\n", self.f, self.partial, self.field);
        out += &format!("len Apolar(f) = {}, len Apolar(∂f) = {}\n", self.colength_i, self.colength_j);
        out += &format!(
            "I ∩ J² ∩ (I² : ∂) ⊆ I·J   {}   (checked mod m^{})\n",
            if self.holds { "true" } else { "false" },
            self.trunc
        );
        out += &format!("  term I          {}\n", yn(self.necessary.i));
        out += &format!("  term J²         {}\n", yn(self.necessary.j_squared));
        out += &format!("  term (I² : ∂)   {}\n", yn(self.necessary.i_squared_colon));
        out += &timings_text(&self.timings_ms);
        out
    }

    fn verified(&self) -> bool {
        self.trivial_containment
    }
}
