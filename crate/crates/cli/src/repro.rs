//! Reproduction suites: the reference examples, recomputed and compared.
//!
//! Cases run over F_65537 except the random (1,6,6,1) cubics, which use
//! primes above 10^6. Suites run on separate threads; the table is
//! assembled in suite order so the output does not depend on scheduling.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use apolar_core::apolar::*;
use apolar_core::hf::*;
use apolar_core::monomial::monomials_of_degree;
use apolar_core::poly::contract_poly;
use apolar_core::ray::*;
use apolar_core::{dual_substitution, Error, Field, Operator, Polynomial, PrimeField, Substitution, TruncatedIdeal};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::commands::Render;
use crate::parse::{parse_polynomial, VarKind};
use crate::report::{ReproCase, ReproReport, Timings, SCHEMA_VERSION};
use crate::CliError;

pub const SUITES: &[&str] =
    &["hilbert", "annihilator", "decomposition", "standard-form", "macaulay", "tangent", "secant", "ray"];

const P: u64 = 65537;
const LARGE_PRIMES: [u64; 3] = [1_000_003, 1_000_033, 1_000_037];

type R<T> = Result<T, Error>;

fn k() -> PrimeField {
    PrimeField::new(P).expect("prime")
}

fn px(src: &str, n: usize) -> Polynomial<PrimeField> {
    parse_polynomial(src, n, VarKind::Dual, k()).expect("built-in example parses")
}

fn pa(src: &str, n: usize) -> Polynomial<PrimeField> {
    parse_polynomial(src, n, VarKind::Operator, k()).expect("built-in example parses")
}

fn seq(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn yes(b: bool) -> String {
    b.to_string()
}

struct Cases {
    suite: &'static str,
    out: Vec<ReproCase>,
}

impl Cases {
    fn new(suite: &'static str) -> Self {
        Cases { suite, out: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, expected: impl Into<String>, computed: R<String>) {
        let expected = expected.into();
        let computed = computed.unwrap_or_else(|e| format!("error: {e}"));
        self.out.push(ReproCase {
            suite: self.suite.into(),
            name: name.into(),
            pass: computed == expected,
            expected,
            computed,
        });
    }
}

/// The ideal generated by `gens` equals `Ann(f)` and has as many minimal generators.
fn ann_is(f: &Polynomial<PrimeField>, gens: &[&str], trunc: usize) -> R<String> {
    let n = f.nvars();
    let ann = apolar_ideal(f, trunc)?;
    let polys: Vec<_> = gens.iter().map(|g| pa(g, n)).collect();
    let other = TruncatedIdeal::from_generators(n, k(), &polys, trunc)?;
    let mingens = ann.minimal_generators()?.len();
    Ok(if ann.same_ideal(&other)? && mingens == gens.len() {
        format!("({})", gens.join(", "))
    } else {
        format!("differs ({mingens} minimal generators)")
    })
}

fn hilbert(_seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("hilbert");
    for (src, n, h) in [
        ("x1^6 + x1^4*x2", 2, "(1,2,2,2,1,1,1)"),
        ("x1^2*x2*x3 + x4^2*x1", 4, "(1,4,5,3,1)"),
        ("x1^2*x3 + x2^2*x3 + x4^2*x1", 4, "(1,4,4,1)"),
        ("x1^2*x3 + x2^2*x3 + x4^2*x1 + x5^2*x4", 5, "(1,5,5,1)"),
        ("x1^5 + x2^4 + x3^2*x1^2 + x4^2*x3", 4, "(1,4,4,3,1,1)"),
    ] {
        c.check(format!("H of {src}"), h, hilbert_vector(&px(src, n)).map(|v| seq(&v)));
    }
    c.out
}

fn annihilator(_seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("annihilator");
    let f = px("x1^6 + x1^4*x2", 2);
    for op in ["a2^2", "a1^5 - a1^3*a2"] {
        c.check(format!("({op}) ⌟ (x1^6 + x1^4*x2)"), "0", Ok(contract_poly(&pa(op, 2), &f).to_string_with("x")));
    }
    c.check("Ann(x1^6 + x1^4*x2) mod m^8", "(a2^2, a1^5 - a1^3*a2)", ann_is(&f, &["a2^2", "a1^5 - a1^3*a2"], 8));
    let g = px("(x1^2 + x2^2)*x3", 3);
    c.check("Ann((x1^2 + x2^2)*x3)", "(a1^2 - a2^2, a1*a2, a3^2)", ann_is(&g, &["a1^2 - a2^2", "a1*a2", "a3^2"], 5));
    c.check("complete intersection: x1^2*x2^2*x3", "true", is_complete_intersection(&px("x1^2*x2^2*x3", 3)).map(yes));
    c.check("complete intersection: (x1^2 + x2^2)*x3", "true", is_complete_intersection(&g).map(yes));
    c.out
}

fn decomposition(seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("decomposition");
    let rows = |f: &Polynomial<PrimeField>, shown: usize| -> R<String> {
        let p = symmetric_decomposition(f)?;
        let mut parts: Vec<String> =
            p.delta.iter().take(shown).enumerate().map(|(a, r)| format!("Δ{a}={}", seq(r))).collect();
        let rest_zero = p.delta.iter().skip(shown).all(|r| r.iter().all(|&v| v == 0));
        if rest_zero {
            parts.push("rest zero".into());
        }
        Ok(parts.join(" "))
    };
    c.check(
        "Δ rows of x1^6 + x1^4*x2",
        "Δ0=(1,1,1,1,1,1,1) Δ1=(0,0,0,0,0,0) Δ2=(0,1,1,1,0) rest zero",
        rows(&px("x1^6 + x1^4*x2", 2), 3),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let form =
        Polynomial::from_terms(3, k(), monomials_of_degree(3, 4).into_iter().map(|m| (m, k().random(&mut rng, 0))));
    let graded = symmetric_decomposition(&form).map(|p| {
        let ok = p.delta[0] == p.h && p.delta[1..].iter().all(|r| r.iter().all(|&v| v == 0));
        if ok {
            "Δ0 = H, rest zero".to_string()
        } else {
            format!("Δ = {:?}, H = {}", p.delta, seq(&p.h))
        }
    });
    c.check("random quartic form in 3 variables", "Δ0 = H, rest zero", graded);
    let found: Vec<String> = decomposition_search(&[1, 4, 4, 3, 1, 1])
        .into_iter()
        .filter(|d| d[3].iter().all(|&v| v == 0))
        .map(|d| d[..3].iter().map(|r| seq(r)).collect::<Vec<_>>().join("+"))
        .collect();
    c.check("(1,4,4,3,1,1) with Δ3 = 0", "(1,1,1,1,1,1)+(0,2,2,2,0)+(0,1,1,0)", Ok(found.join(" | ")));
    for n in 2..=5 {
        let found: Vec<String> = decomposition_search(&[1, n, 1, 1])
            .into_iter()
            .map(|d| d.iter().map(|r| seq(r)).collect::<Vec<_>>().join("+"))
            .collect();
        c.check(format!("(1,{n},1,1)"), format!("(1,1,1,1)+(0,{},0)", n - 1), Ok(found.join(" | ")));
    }
    let ok = is_admissible_decomposition(5, &[vec![1; 6], vec![0, 0, 1, 0, 0]]);
    c.check("Δ0 = (1,1,1,1,1,1), Δ1 = (0,0,1,0,0)", "rejected", Ok(if ok { "accepted" } else { "rejected" }.into()));
    c.out
}

fn standard_form(_seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("standard-form");
    for (src, n, want) in
        [("x1^6 + x2^5 + x3^3", 3, "true"), ("x3^6 + x2^5 + x1^3", 3, "false"), ("x1^6 + x1^4*x2", 2, "false")]
    {
        c.check(format!("standard form: {src}"), want, check_standard_form(&px(src, n)).map(|v| yes(v.holds)));
    }
    let f = px("x1^6 + x1^4*x2", 2);
    let phi = Substitution::elementary(2, k(), 1, pa("a2 + a1^2", 2), 8);
    c.check(
        "α2 ↦ α2 + α1^2 applied to x1^6 + x1^4*x2",
        px("x1^6 - x1^2*x2^2 + 2*x2^3", 2).to_string_with("x"),
        phi.clone().and_then(|p| dual_substitution(&p, &f)).map(|g| g.to_string_with("x")),
    );
    let moved = phi.clone().and_then(|p| {
        let ann = apolar_ideal(&f, 8)?.apply_substitution(&p)?;
        let want = TruncatedIdeal::from_generators(2, k(), &[pa("(a2 + a1^2)^2", 2), pa("a1^3*a2", 2)], 8)?;
        Ok(if ann.same_ideal(&want)? { "((a2 + a1^2)^2, a1^3*a2)".to_string() } else { "differs".to_string() })
    });
    c.check("image of Ann(x1^6 + x1^4*x2) under α2 ↦ α2 + α1^2", "((a2 + a1^2)^2, a1^3*a2)", moved);
    c.check(
        "inverse of α2 ↦ α2 + α1^2",
        pa("a2 - a1^2", 2).to_string_with("a"),
        phi.and_then(|p| p.invert()).map(|q| q.image(1).to_string_with("a")),
    );
    let h = px("x1^5 + x2^5 + x1^3*x2 + x1^2*x2^2 + x1^2 + x1", 2);
    let cleaned = top_degree_twist(&h, 0).and_then(|t| clean_up_derivative(&t.polynomial, 0)).map(|(g, _)| {
        let rest = g.sub(&px("x1^5", 2));
        let u = contract_poly(&pa("a1^3", 2), &rest);
        u.sub(&u.homogeneous_part(0)).to_string_with("x")
    });
    c.check("nonconstant part of α1^3 ⌟ (f̂ − x1^5) after twist and clean-up", "0", cleaned);
    let sq = px("x1^3 + x2^3 + x3*x4 + x1*x4", 4);
    let split = split_off_squares(&sq).and_then(|out| {
        let h = hilbert_vector(&out.polynomial)?;
        Ok(format!("{} squares, H = {}", out.q, seq(&h)))
    });
    c.check("squares split from x1^3 + x2^3 + x3*x4 + x1*x4", "2 squares, H = (1,4,2,1)", split);
    c.out
}

fn macaulay(_seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("macaulay");
    for (m, i, v) in [(3, 2, 4), (4, 2, 5), (6, 2, 10), (4, 3, 5)] {
        c.check(format!("{m}<{i}>"), v.to_string(), Ok(macaulay_bound(m, i).to_string()));
    }
    let ones: Vec<usize> = (1..=10).map(|n| macaulay_bound(1, n)).collect();
    c.check("1<n> for n = 1..10", seq(&[1; 10]), Ok(seq(&ones)));
    c.out
}

fn tangent_row(f: &Polynomial<PrimeField>) -> R<String> {
    let r = unobstructedness_report(f)?;
    Ok(format!(
        "tangent {}, length {}, {}",
        r.tangent_dim,
        r.length,
        if r.is_unobstructed { "unobstructed" } else { "obstructed" }
    ))
}

fn tangent(seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("tangent");
    for (src, n, want) in [
        ("x1*x2*x3 + x4^2 + x5^2*x4", 5, "tangent 67, length 12, obstructed"),
        ("x1^2*x2*x3 + x4^2*x1", 4, "tangent 56, length 14, unobstructed"),
        ("x1^2*x3 + x2^2*x3 + x4^2*x1", 4, "tangent 40, length 10, unobstructed"),
        ("x1^2*x3 + x2^2*x3 + x4^2*x1 + x5^2*x4", 5, "tangent 60, length 12, unobstructed"),
        ("x1^5 + x2^4 + x3^2*x1^2 + x4^2*x3", 4, "tangent 56, length 14, unobstructed"),
    ] {
        c.check(src, want, tangent_row(&px(src, n)));
    }
    for (j, p) in LARGE_PRIMES.iter().enumerate() {
        let s = seed.wrapping_add(j as u64);
        let field = PrimeField::new(*p).expect("prime");
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let f = Polynomial::from_terms(
            6,
            field,
            monomials_of_degree(6, 3).into_iter().map(|m| (m, field.random(&mut rng, 0))),
        );
        let got =
            hilbert_vector(&f).and_then(|h| Ok(format!("H = {}, tangent {}", seq(&h), tangent_space_dimension(&f)?)));
        c.check(format!("random cubic in 6 variables, seed {s}, F_{p}"), "H = (1,6,6,1), tangent 76", got);
    }
    c.out
}

fn secant(_seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("secant");
    for s in 4..=6 {
        let src = format!("x1^{}*x2 + x3^{s}", s - 1);
        c.check(format!("σ4 membership of {src}"), "true", sigma4_membership(&px(&src, 3)).map(yes));
    }
    for s in 5..=6 {
        let src = format!("x1^{}*(x1*x3 + x2^2)", s - 2);
        let f = px(&src, 3);
        let got = catalecticant_rank(&f, 2).and_then(|r| {
            let h = hilbert_vector(&f)?;
            Ok(format!("rank {r}, H starts {}", seq(&h[..4])))
        });
        c.check(format!("catalecticant of {src} at a = 2"), "rank 3, H starts (1,3,3,3)", got);
    }
    let form = px("x1^2*x2*x3 + x3^4 + 2*x1*x2^3", 3);
    let sat = apolar_ideal(&form, 6).and_then(|ann| {
        let all = (0..=4).map(|m| is_m_saturated(&ann, m)).collect::<R<Vec<bool>>>()?;
        Ok(yes(all.iter().all(|&b| b)))
    });
    c.check("Ann(x1^2*x2*x3 + x3^4 + 2*x1*x2^3) is m-saturated for m ≤ 4", "true", sat);
    c.out
}

fn ray(seed: u64) -> Vec<ReproCase> {
    let mut c = Cases::new("ray");
    let f = px("x1^2*x2^2*x3", 3);
    let d2 = Operator::exact(pa("a2^2", 3));
    c.check(
        "ray sum of (x1^2*x2^2*x3, a2^2, 3)",
        px("x1^2*x2^2*x3 + x4^3*x1^2*x3", 4).to_string_with("x"),
        ray_sum(&f, &d2, 3).map(|g| g.to_string_with("x")),
    );
    c.check(
        "Ann(g) = Ann(f) + α·Ann(∂f) + (α^3 − ∂) for (x1^2*x2^2*x3, a2^2, 3)",
        "holds",
        ray_sum_annihilator_check(&f, &d2, 3).map(|r| if r.holds { "holds" } else { "fails" }.into()),
    );
    for (src, op, n) in [("x1^3", "a1^2", 1), ("(x1^2 + x2^2)*x3", "a1*a3", 3)] {
        let (g, o) = (px(src, n), Operator::exact(pa(op, n)));
        let same = build_ray_family(&g, &o, 2, FamilyKind::Lower).and_then(|lo| {
            let up = build_ray_family(&g, &o, 2, FamilyKind::Upper)?;
            Ok(if lo.generators == up.generators { "equal" } else { "differ" }.to_string())
        });
        c.check(format!("lower and upper families of ({src}, {op}, 2)"), "equal", same);
    }
    for kind in [FamilyKind::Lower, FamilyKind::Upper] {
        let v = build_ray_family(&f, &d2, 3, kind).and_then(|fam| flatness_probe(&fam, 5, seed)).map(|v| {
            let lens: Vec<usize> = v.lengths.iter().map(|(_, l)| *l).collect();
            match v.status {
                FlatnessStatus::FlatConsistent => format!("FLAT_CONSISTENT, lengths {}", seq(&lens)),
                FlatnessStatus::NotFlat => format!("NOT_FLAT, lengths {}", seq(&lens)),
            }
        });
        let len = apolar_length(&ray_sum(&f, &d2, 3).expect("valid ray sum")).unwrap_or(0);
        c.check(
            format!("{kind:?} family of (x1^2*x2^2*x3, a2^2, 3)").to_lowercase(),
            format!("FLAT_CONSISTENT, lengths {}", seq(&[len; 6])),
            v,
        );
    }
    for (src, op, n, d, lambda) in [("x1^2*x2^2*x3", "a2^2", 3, 3, 4), ("x1^3", "a1^2", 1, 2, 1)] {
        let (g, o) = (px(src, n), Operator::exact(pa(op, n)));
        let got = fiber_structure_check(&g, &o, d, &k().from_i64(lambda)).map(|r| {
            format!(
                "length {} = {} + {}·{}, {}",
                r.total_length,
                r.length_f,
                d - 1,
                r.length_partial_f,
                if r.support_ok { "support as predicted" } else { "support differs" }
            )
        });
        let (lf, ld) = (apolar_length(&g).unwrap_or(0), apolar_length(&contract_poly(o.poly(), &g)).unwrap_or(0));
        c.check(
            format!("lower fiber of ({src}, {op}, {d}) at λ = {lambda}"),
            format!("length {} = {lf} + {}·{ld}, support as predicted", lf + (d - 1) * ld, d - 1),
            got,
        );
    }
    let quartic = px("x1^4 + x1*x2^2 + x3^2", 3);
    let st = stretched_degeneration_check(&quartic, 5, seed).map(|r| {
        let status = match r.flatness.status {
            FlatnessStatus::FlatConsistent => "FLAT_CONSISTENT",
            FlatnessStatus::NotFlat => "NOT_FLAT",
        };
        format!("c = {}, s = {}, {status}", r.c, r.socle_degree)
    });
    c.check("upper family of x1^4 + x1*x2^2 + x3^2", "c = 2, s = 4, FLAT_CONSISTENT", st);
    let quintic = px("x1^5 + x2^2 + x3^2", 3);
    let peeled = stretched_degeneration_check(&quintic, 3, seed).and_then(|r| {
        let fib = fiber_at(&r.family, &k().from_i64(3))?;
        let mut lens: Vec<usize> = fib.basis.support_and_local_lengths()?.points.iter().map(|(_, l)| *l).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Ok(format!("local lengths {}", seq(&lens)))
    });
    let len = apolar_length(&quintic).unwrap_or(0);
    c.check("fiber at λ = 3 of the family of x1^5 + x2^2 + x3^2", format!("local lengths ({},1)", len - 1), peeled);
    let tp = |src: &str, op: &str, n: usize| tangent_preserving_check(&px(src, n), &Operator::exact(pa(op, n)));
    c.check("tangent-preserving: x1^2*x2^2*x3 with a2^2", "true", tp("x1^2*x2^2*x3", "a2^2", 3).map(|r| yes(r.holds)));
    c.check(
        "tangent-preserving: x1^2*x3 + x2^2*x3 + x4^2*x1 with a4*a1",
        "true, necessary (I, J², I²:∂) = (true,true,true)",
        tp("x1^2*x3 + x2^2*x3 + x4^2*x1", "a4*a1", 4).map(|r| {
            format!("{}, necessary (I, J², I²:∂) = ({},{},{})", r.holds, r.necessary[0], r.necessary[1], r.necessary[2])
        }),
    );
    c.check(
        "tangent-preserving: (x1^2 + x2^2)*x3 with a1*a3",
        "true",
        tp("(x1^2 + x2^2)*x3", "a1*a3", 3).map(|r| yes(r.holds)),
    );
    let pre = match tangent_preserving_check(&px("x1*x2*x3 + x4^2", 4), &Operator::exact(pa("a4", 4))) {
        Err(Error::Precondition(_)) => Ok("precondition failure".to_string()),
        Err(e) => Err(e),
        Ok(r) => Ok(format!("accepted ({})", r.holds)),
    };
    c.check("tangent-preserving: x1*x2*x3 + x4^2 with a4", "precondition failure", pre);
    c.out
}

fn suite_fn(name: &str) -> Option<fn(u64) -> Vec<ReproCase>> {
    Some(match name {
        "hilbert" => hilbert,
        "annihilator" => annihilator,
        "decomposition" => decomposition,
        "standard-form" => standard_form,
        "macaulay" => macaulay,
        "tangent" => tangent,
        "secant" => secant,
        "ray" => ray,
        _ => return None,
    })
}

/// Expands `all` and rejects unknown names.
pub fn resolve(names: &[String]) -> Result<Vec<&'static str>, CliError> {
    let mut out: Vec<&'static str> = Vec::new();
    let names: Vec<&str> = if names.is_empty() { vec!["all"] } else { names.iter().map(String::as_str).collect() };
    for n in names {
        if n == "all" {
            for s in SUITES {
                if !out.contains(s) {
                    out.push(s);
                }
            }
            continue;
        }
        match SUITES.iter().find(|s| **s == n) {
            Some(s) if !out.contains(s) => out.push(s),
            Some(_) => {}
            None => {
                return Err(CliError::Usage(format!(
                    "unknown suite '{n}'; available suites: all, {}",
                    SUITES.join(", ")
                )))
            }
        }
    }
    Ok(out)
}

pub fn run(names: &[String], seed: u64, timings: bool) -> Result<ReproReport, CliError> {
    let suites = resolve(names)?;
    let results: Vec<(Vec<ReproCase>, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|name| {
                let f = suite_fn(name).expect("resolved");
                scope.spawn(move || {
                    let t = Instant::now();
                    let cases = catch_unwind(AssertUnwindSafe(|| f(seed))).unwrap_or_else(|_| {
                        vec![ReproCase {
                            suite: name.to_string(),
                            name: "suite".into(),
                            expected: "completes".into(),
                            computed: "panicked".into(),
                            pass: false,
                        }]
                    });
                    (cases, (t.elapsed().as_secs_f64() * 1e6).round() / 1e3)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    let mut cases = Vec::new();
    let mut times = Timings::new();
    for (name, (cs, ms)) in suites.iter().zip(results) {
        cases.extend(cs);
        times.insert(name.to_string(), ms);
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    Ok(ReproReport {
        schema_version: SCHEMA_VERSION,
        command: "repro".into(),
        suites: suites.iter().map(|s| s.to_string()).collect(),
        seed,
        passed,
        failed: cases.len() - passed,
        cases,
        timings_ms: timings.then_some(times),
    })
}

impl Render for ReproReport {
    fn text(&self) -> String {
        let w = self.cases.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        let mut last = "";
        for case in &self.cases {
            if case.suite != last {
                out += &format!("[{}]\n", case.suite);
                last = &case.suite;
            }
            let pad = " ".repeat(w - case.name.chars().count());
            let mark = if case.pass { "PASS" } else { "FAIL" };
            out += &format!("  {mark}  {}{pad}  expected {}", case.name, case.expected);
            if case.pass {
                out.push('\n');
            } else {
                out += &format!("  computed {}\n", case.computed);
            }
        }
        out += &format!("{} passed, {} failed (seed {})\n", self.passed, self.failed, self.seed);
        if let Some(t) = &self.timings_ms {
            for (k, v) in t {
                out += &format!("time {k}: {v:.3} ms\n");
            }
        }
        out
    }

    fn verified(&self) -> bool {
        self.failed == 0
    }
}
