//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use apolar_core::apolar::*;
use apolar_core::groebner::GroebnerBasis;
use apolar_core::hf::*;
use apolar_core::monomial::monomials_of_degree;
use apolar_core::poly::contract_poly;
use apolar_core::ray::*;
use apolar_core::substitution::Substitution;
use apolar_core::{dual_substitution, Field, Operator, Polynomial, PrimeField, Rationals};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e:?}"))
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let el = t.elapsed();
    if el > limit {
        return Err(format!("{what} took {:.2?}, over the {:?} budget", el, limit));
    }
    Ok(())
}

fn q(n: usize, t: &[(i64, &[u16])]) -> Polynomial<Rationals> {
    Polynomial::from_int_terms(n, Rationals, t)
}

fn op(n: usize, t: &[(i64, &[u16])]) -> Operator<Rationals> {
    Operator::exact(q(n, t))
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn random_form<F: Field>(field: &F, n: usize, deg: usize, rng: &mut ChaCha8Rng, bound: u64) -> Polynomial<F> {
    Polynomial::from_terms(
        n,
        field.clone(),
        monomials_of_degree(n, deg).into_iter().map(|m| (m, field.random(rng, bound))),
    )
}

/// Random polynomial with a nonzero top-degree part and random lower terms.
fn random_poly<F: Field>(field: &F, n: usize, deg: usize, rng: &mut ChaCha8Rng) -> Polynomial<F> {
    loop {
        let mut f = random_form(field, n, deg, rng, 5);
        for d in 1..deg {
            for m in monomials_of_degree(n, d) {
                if rng.next_u32() % 3 == 0 {
                    f.add_term(m, field.random(rng, 5));
                }
            }
        }
        if f.degree() == Some(deg) {
            return f;
        }
    }
}

fn random_operator<F: Field>(field: &F, n: usize, max_deg: usize, rng: &mut ChaCha8Rng) -> Polynomial<F> {
    let mut p = Polynomial::zero(n, field.clone());
    for d in 1..=max_deg {
        for m in monomials_of_degree(n, d) {
            if rng.next_u32() % 2 == 0 {
                p.add_term(m, field.random(rng, 5));
            }
        }
    }
    p
}

fn hilbert_examples() -> Vec<(&'static str, Polynomial<Rationals>, Vec<usize>)> {
    vec![
        ("x1^6+x1^4x2", q(2, &[(1, &[6, 0]), (1, &[4, 1])]), vec![1, 2, 2, 2, 1, 1, 1]),
        ("x1^2x2x3+x4^2x1", q(4, &[(1, &[2, 1, 1, 0]), (1, &[1, 0, 0, 2])]), vec![1, 4, 5, 3, 1]),
        ("x1^2x3+x2^2x3+x4^2x1", q(4, &[(1, &[2, 0, 1, 0]), (1, &[0, 2, 1, 0]), (1, &[1, 0, 0, 2])]), vec![1, 4, 4, 1]),
        (
            "x1^2x3+x2^2x3+x4^2x1+x5^2x4",
            q(5, &[(1, &[2, 0, 1, 0, 0]), (1, &[0, 2, 1, 0, 0]), (1, &[1, 0, 0, 2, 0]), (1, &[0, 0, 0, 1, 2])]),
            vec![1, 5, 5, 1],
        ),
        (
            "x1^5+x2^4+x3^2x1^2+x4^2x3",
            q(4, &[(1, &[5, 0, 0, 0]), (1, &[0, 4, 0, 0]), (1, &[2, 0, 2, 0]), (1, &[0, 0, 1, 2])]),
            vec![1, 4, 4, 3, 1, 1],
        ),
    ]
}

fn c1_hilbert() -> Check {
    for (name, f, h) in hilbert_examples() {
        let t = Instant::now();
        let got = ok(hilbert_vector(&f), name)?;
        within(t, Duration::from_secs(1), name)?;
        ensure!(got == h, "{name}: H = {got:?}, expected {h:?}");
    }
    Ok("5 Hilbert functions match".into())
}

fn c2_decomposition() -> Check {
    let t = Instant::now();
    let f = q(2, &[(1, &[6, 0]), (1, &[4, 1])]);
    let p = ok(symmetric_decomposition(&f), "decomposition")?;
    let expected = [vec![1; 7], vec![0; 6], vec![0, 1, 1, 1, 0]];
    ensure!(p.delta[..3] == expected, "rows {:?}", p.delta);
    ensure!(p.delta[3..].iter().all(|r| r.iter().all(|&v| v == 0)), "rows {:?}", p.delta);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..5 {
        let n = 2 + k % 3;
        let s = 3 + k % 3;
        let form = random_form(&Rationals, n, s, &mut rng, 9);
        let p = ok(symmetric_decomposition(&form), "decomposition")?;
        ensure!(p.delta[0] == p.h, "form {k}: Δ0 = {:?}, H = {:?}", p.delta[0], p.h);
        ensure!(p.delta[1..].iter().all(|r| r.iter().all(|&v| v == 0)), "form {k}: nonzero higher row");
    }
    within(t, Duration::from_secs(1), "criterion 2")?;
    Ok("example rows exact; Δ0 = H for 5 random forms".into())
}

fn c3_transport() -> Check {
    let t = Instant::now();
    let f = q(2, &[(1, &[6, 0]), (1, &[4, 1])]);
    let psi = ok(Substitution::elementary(2, Rationals, 1, q(2, &[(1, &[0, 1]), (1, &[2, 0])]), 8), "ψ")?;
    let g = ok(dual_substitution(&psi, &f), "dual substitution")?;
    let expected = q(2, &[(1, &[6, 0]), (-1, &[2, 2]), (2, &[0, 3])]);
    ensure!(g == expected, "got {}", g.to_string_with("x"));
    let moved = ok(ok(apolar_ideal(&f, 8), "Ann f")?.apply_substitution(&psi), "ψ(Ann f)")?;
    let ann_g = ok(apolar_ideal(&g, 8), "Ann g")?;
    ensure!(ok(ann_g.same_ideal(&moved), "compare")?, "Ann(output) ≠ ψ(Ann(input))");
    within(t, Duration::from_secs(1), "criterion 3")?;
    Ok("x1^6 - x1^2x2^2 + 2x2^3 and Ann transported".into())
}

fn c4_macaulay() -> Check {
    for (m, i, v) in [(3, 2, 4), (4, 2, 5), (6, 2, 10), (4, 3, 5)] {
        ensure!(macaulay_bound(m, i) == v, "{m}<{i}> = {}, expected {v}", macaulay_bound(m, i));
    }
    for n in 1..=10 {
        ensure!(macaulay_bound(1, n) == 1, "1<{n}> = {}", macaulay_bound(1, n));
    }
    Ok("table exact".into())
}

fn c5_tangent() -> Check {
    let t = Instant::now();
    let f67 = q(5, &[(1, &[1, 1, 1, 0, 0]), (1, &[0, 0, 0, 2, 0]), (1, &[0, 0, 0, 1, 2])]);
    let r = ok(unobstructedness_report(&f67), "67")?;
    ensure!(r.tangent_dim == 67 && r.length == 12 && !r.is_unobstructed, "67 case: {r:?}");
    let examples = hilbert_examples();
    for (idx, expect) in [(1usize, 56usize), (2, 40), (3, 60)] {
        let (name, f, _) = &examples[idx];
        let r = ok(unobstructedness_report(f), name)?;
        ensure!(r.tangent_dim == expect && r.is_unobstructed, "{name}: {r:?}, expected {expect}");
    }
    let small = t.elapsed();
    let mut runs = Vec::new();
    for (seed, p) in [(0u64, 1_000_003u64), (1, 1_000_033), (2, 1_000_037)] {
        let field = fp(p);
        let t = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, 6, 3, &mut rng, 0);
        let h = ok(hilbert_vector(&f), "H")?;
        ensure!(h == vec![1, 6, 6, 1], "seed {seed}: H = {h:?}");
        let tan = ok(tangent_space_dimension(&f), "tangent")?;
        within(t, Duration::from_secs(300), "76 run")?;
        ensure!(tan == 76, "seed {seed}: tangent dimension {tan}");
        runs.push(format!("seed {seed} mod {p} in {:.2?}", t.elapsed()));
    }
    Ok(format!("67/56/40/60 over Q in {small:.2?}; 76 for {}", runs.join(", ")))
}

struct Triple<F: Field> {
    name: &'static str,
    f: Polynomial<F>,
    partial: Operator<F>,
    d: usize,
}

fn triples() -> Vec<Triple<Rationals>> {
    vec![
        Triple { name: "(x1^2x2^2x3, a2^2, 3)", f: q(3, &[(1, &[2, 2, 1])]), partial: op(3, &[(1, &[0, 2, 0])]), d: 3 },
        Triple { name: "(x1^3, a1^2, 2)", f: q(1, &[(1, &[3])]), partial: op(1, &[(1, &[2])]), d: 2 },
        Triple {
            name: "((x1^2+x2^2)x3, a1a3, 2)",
            f: q(3, &[(1, &[2, 0, 1]), (1, &[0, 2, 1])]),
            partial: op(3, &[(1, &[1, 0, 1])]),
            d: 2,
        },
        Triple {
            name: "(x1^2x3+x2^2x3, a3, 3)",
            f: q(3, &[(1, &[2, 0, 1]), (1, &[0, 2, 1])]),
            partial: op(3, &[(1, &[0, 0, 1])]),
            d: 3,
        },
        Triple { name: "(x1x2x3, a1a2, 4)", f: q(3, &[(1, &[1, 1, 1])]), partial: op(3, &[(1, &[1, 1, 0])]), d: 4 },
        Triple {
            name: "(x1^4+x2^3, a1+a2^2, 2)",
            f: q(2, &[(1, &[4, 0]), (1, &[0, 3])]),
            partial: op(2, &[(1, &[1, 0]), (1, &[0, 2])]),
            d: 2,
        },
    ]
}

fn c6_ray_identity() -> Check {
    let t = Instant::now();
    let ts = triples();
    for tr in &ts {
        let chk = ok(ray_sum_annihilator_check(&tr.f, &tr.partial, tr.d), tr.name)?;
        ensure!(chk.holds, "{}: identity fails, witness {:?}", tr.name, chk.counterexample);
    }
    within(t, Duration::from_secs(5), "criterion 6")?;
    Ok(format!("identity holds for {} triples", ts.len()))
}

fn c7_flatness() -> Check {
    let t = Instant::now();
    for tr in triples() {
        for kind in [FamilyKind::Lower, FamilyKind::Upper] {
            let fam = ok(build_ray_family(&tr.f, &tr.partial, tr.d, kind), tr.name)?;
            let v = ok(flatness_probe(&fam, 5, 17), tr.name)?;
            ensure!(v.lengths.len() == 6, "{}: {} fibers sampled", tr.name, v.lengths.len());
            ensure!(v.status == FlatnessStatus::FlatConsistent, "{} {kind:?}: lengths {:?}", tr.name, v.lengths);
        }
    }
    let bad = RayFamily::custom(
        1,
        Rationals,
        vec![
            FamilyGenerator { constant: q(1, &[(1, &[2])]), linear: q(1, &[(-1, &[1])]) },
            FamilyGenerator { constant: q(1, &[(1, &[3])]), linear: q(1, &[]) },
        ],
    );
    let v = ok(flatness_probe(&bad, 5, 17), "hand-built")?;
    ensure!(v.status == FlatnessStatus::NotFlat, "hand-built family reported flat");
    let lens: Vec<usize> = v.lengths.iter().map(|(_, l)| *l).collect();
    let zero = v.lengths.iter().find(|(l, _)| Rationals.is_zero(l)).map(|(_, n)| *n);
    ensure!(zero == Some(2), "special fiber length {zero:?}");
    ensure!(lens.iter().filter(|&&l| l == 1).count() == 5, "general lengths {lens:?}");
    within(t, Duration::from_secs(10), "criterion 7")?;
    Ok("12 families flat-consistent; (a^2 - t a, a^3) not flat".into())
}

fn c8_fibers() -> Check {
    let t = Instant::now();
    let ts = triples();
    let mut count = 0;
    for (idx, lambda) in [(0usize, 4i64), (1, 1), (2, 5)] {
        let tr = &ts[idx];
        let r = ok(fiber_structure_check(&tr.f, &tr.partial, tr.d, &Rationals.from_i64(lambda)), tr.name)?;
        ensure!(r.holds, "{}: {r:?}", tr.name);
        count += 1;
    }
    // d − 1 = 3 needs cube roots of unity: work mod 1000003 and take λ = ω³.
    let field = fp(1_000_003);
    let f = Polynomial::from_int_terms(3, field, &[(1, &[1, 1, 1])]);
    let d = Operator::exact(Polynomial::from_int_terms(3, field, &[(1, &[1, 1, 0])]));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let omega = field.random_nonzero(&mut rng, 0);
    let lambda = field.pow(&omega, 3);
    let r = ok(fiber_structure_check(&f, &d, 4, &lambda), "(x1x2x3, a1a2, 4)")?;
    ensure!(r.holds && r.roots.len() == 3, "(x1x2x3, a1a2, 4) mod p: {r:?}");
    count += 1;
    within(t, Duration::from_secs(10), "criterion 8")?;
    Ok(format!("{count} triples: lengths, support and local lengths as predicted"))
}

fn c9_tangent_preserving() -> Check {
    let t = Instant::now();
    let cis: [(&[u16], &[u16]); 5] = [
        (&[2, 2, 1], &[0, 2, 0]),
        (&[3, 1, 0], &[3, 0, 0]),
        (&[1, 1, 1], &[1, 0, 0]),
        (&[2, 3, 0], &[0, 2, 0]),
        (&[3, 2, 1], &[2, 0, 1]),
    ];
    for (m, a) in cis {
        let f = q(3, &[(1, m)]);
        ensure!(ok(is_complete_intersection(&f), "CI")?, "{m:?} not a complete intersection");
        let r = ok(tangent_preserving_check(&f, &op(3, &[(1, a)])), "check")?;
        ensure!(r.holds && r.trivial_containment, "x^{m:?} with a^{a:?}: {r:?}");
    }
    let f = q(4, &[(1, &[2, 0, 1, 0]), (1, &[0, 2, 1, 0]), (1, &[1, 0, 0, 2])]);
    let r = ok(tangent_preserving_check(&f, &op(4, &[(1, &[1, 0, 0, 1])])), "ledger example")?;
    ensure!(r.holds && r.trivial_containment, "ledger example: {r:?}");
    ensure!(r.necessary == [true, true, true], "necessity {:?}", r.necessary);
    let h = q(4, &[(1, &[5, 0, 0, 0]), (1, &[0, 4, 0, 0]), (1, &[2, 0, 2, 0]), (1, &[0, 0, 1, 2])]);
    let u = ok(unobstructedness_report(&h), "double ray")?;
    ensure!(u.is_unobstructed, "double ray sum obstructed: {u:?}");
    within(t, Duration::from_secs(30), "criterion 9")?;
    Ok("5 monomial CIs, all-three-terms ledger, double ray sum unobstructed".into())
}

fn power_sum(field: PrimeField, n: usize, s: usize, count: usize, seed: u64) -> Polynomial<PrimeField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Polynomial::zero(n, field);
    for _ in 0..count {
        let l: Vec<u64> = (0..n).map(|_| field.random(&mut rng, 0)).collect();
        f = f.add(&divided_power_of_linear(&field, &l, s));
    }
    f
}

fn c10_secant() -> Check {
    let t = Instant::now();
    let field = fp(1_000_003);
    for s in [4usize, 6] {
        for count in 1..=4 {
            let f = power_sum(field, 5, s, count, (s * 10 + count) as u64);
            ensure!(ok(sigma4_membership(&f), "σ4")?, "{count} powers of degree {s} rejected");
        }
        // Five generic powers; a degenerate draw is regenerated.
        let five = (0..20)
            .map(|k| power_sum(field, 5, s, 5, 1000 + k))
            .find(|f| catalecticant_rank(f, s / 2).unwrap() == 5)
            .ok_or("no generic sample of five powers")?;
        ensure!(!ok(sigma4_membership(&five), "σ4")?, "five powers of degree {s} accepted");
    }
    let reps = [
        ("x1^6+x2^6+x3^6", q(3, &[(1, &[6, 0, 0]), (1, &[0, 6, 0]), (1, &[0, 0, 6])])),
        ("x1^5x2+x3^6", q(3, &[(1, &[5, 1, 0]), (1, &[0, 0, 6])])),
        ("x1^4(x1x3+x2^2)", q(3, &[(1, &[5, 0, 1]), (1, &[4, 2, 0])])),
    ];
    for (name, f) in reps {
        let r = ok(catalecticant_rank(&f, 3), name)?;
        let h = ok(hilbert_vector(&f), name)?;
        ensure!(r == 3, "{name}: rank {r}");
        ensure!(h[..4] == [1, 3, 3, 3], "{name}: H = {h:?}");
    }
    within(t, Duration::from_secs(10), "criterion 10")?;
    Ok("≤4 powers pass, 5 fail, three orbit representatives have rank 3".into())
}

fn c11_properties() -> Check {
    let t = Instant::now();
    let field = fp(65537);
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    for k in 0..200 {
        let n = 1 + k % 4;
        let f = random_poly(&field, n, 2 + k % 4, &mut rng);
        let s = random_operator(&field, n, 3, &mut rng);
        let u = random_operator(&field, n, 3, &mut rng);
        let (a, b) = (field.random(&mut rng, 0), field.random(&mut rng, 0));
        let lhs = contract_poly(&s.scale(&a).add(&u.scale(&b)), &f);
        let rhs = contract_poly(&s, &f).scale(&a).add(&contract_poly(&u, &f).scale(&b));
        ensure!(lhs == rhs, "bilinearity fails in case {k}");
        ensure!(
            contract_poly(&s.mul(&u), &f) == contract_poly(&s, &contract_poly(&u, &f)),
            "module action fails in case {k}"
        );
    }

    let mut hs = 0;
    for k in 0..50 {
        let n = 2 + k % 3;
        let f = random_poly(&field, n, 3 + k % 4, &mut rng);
        let p = ok(symmetric_decomposition(&f), "decomposition")?;
        let s = p.socle_degree;
        for (a, row) in p.delta.iter().enumerate() {
            for i in 0..row.len() {
                ensure!(row[i] == row[s - a - i], "case {k}: row {a} not symmetric: {row:?}");
            }
        }
        for i in 0..=s {
            let sum: usize = p.delta.iter().map(|r| r.get(i).copied().unwrap_or(0)).sum();
            ensure!(sum == p.h[i], "case {k}: rows do not sum to H at {i}");
        }
        ensure!(is_o_sequence(&p.h), "case {k}: H = {:?} is not an O-sequence", p.h);
        hs += 1;
    }

    for k in 0..20 {
        let n = 2 + k % 2;
        let f = random_poly(&field, n, 3 + k % 3, &mut rng);
        let gens = ok(annihilator_polynomials(&f), "generators")?;
        let gb = ok(GroebnerBasis::new(n, field, &gens), "Gröbner")?;
        let len = ok(apolar_length(&f), "length")?;
        let h = ok(hilbert_vector(&f), "H")?;
        ensure!(is_o_sequence(&h), "case {k}: H = {h:?}");
        hs += 1;
        ensure!(ok(gb.quotient_dimension(), "dim")? == len, "case {k}: Gröbner length differs from {len}");
    }

    let mut pairs = 0;
    while pairs < 50 {
        let n = 2 + pairs % 3;
        let f = random_poly(&field, n, 3 + pairs % 3, &mut rng);
        let d = Operator::exact(random_operator(&field, n, 2, &mut rng));
        if d.is_zero() || contract_poly(d.poly(), &f).is_zero() {
            continue;
        }
        let s = f.degree().unwrap();
        let ann = ok(apolar_ideal(&f, s + 2), "Ann")?;
        let df = contract_poly(d.poly(), &f);
        let lhs = ok(ann.colon(&d), "colon")?;
        let rhs = ok(apolar_ideal(&df, s + 2), "Ann ∂f")?;
        ensure!(ok(lhs.same_ideal(&rhs), "compare")?, "colon identity fails for pair {pairs}");
        pairs += 1;
    }

    let mut bumps = 0;
    while bumps < 20 {
        let n = 2 + bumps % 3;
        let f = random_form(&field, n, 3, &mut rng, 0);
        let d2 = random_form(&field, n, 2, &mut rng, 0);
        let ell = contract_poly(&d2, &f);
        if f.is_zero() || ell.is_zero() {
            continue;
        }
        let g = ok(ray_sum(&f, &Operator::exact(d2), 2), "ray sum")?;
        let ha = ok(hilbert_vector(&f), "H_A")?;
        let hb = ok(hilbert_vector(&g), "H_B")?;
        ensure!(ha.len() == hb.len(), "socle degree changed in case {bumps}");
        for m in 0..ha.len() {
            let bump = usize::from(m == 1 || m == 2);
            ensure!(hb[m] == ha[m] + bump, "case {bumps}: H_A = {ha:?}, H_B = {hb:?}");
        }
        bumps += 1;
    }
    Ok(format!(
        "200 contraction cases, 50 decompositions, {hs} O-sequences, 20 Gröbner lengths, 50 colons, 20 bumps in {:.2?}",
        t.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("Hilbert functions", c1_hilbert),
        ("symmetric decomposition", c2_decomposition),
        ("standard-form transport", c3_transport),
        ("Macaulay bounds", c4_macaulay),
        ("tangent dimensions", c5_tangent),
        ("ray-sum annihilator identity", c6_ray_identity),
        ("flatness probes", c7_flatness),
        ("fiber structure", c8_fibers),
        ("tangent-preserving criterion", c9_tangent_preserving),
        ("secant tests", c10_secant),
        ("property suites", c11_properties),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let el = t.elapsed();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({el:.2?}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({el:.2?}): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
