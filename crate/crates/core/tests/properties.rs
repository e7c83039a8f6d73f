use apolar_core::apolar::{apolar_ideal, hilbert_vector, tangent_space_dimension};
use apolar_core::hf::{catalecticant_rank, decomposition_search, symmetric_decomposition};
use apolar_core::monomial::Monomial;
use apolar_core::poly::contract_poly;
use apolar_core::substitution::Substitution;
use apolar_core::{dual_substitution, Operator, Polynomial, PrimeField};
use proptest::prelude::*;

const P: u64 = 10007;

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

/// Sparse polynomial in `n` variables with exponents below `max_exp`.
fn poly(n: usize, max_exp: u16, terms: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    prop::collection::vec((prop::collection::vec(0..max_exp, n), 1..P), 1..=terms).prop_map(move |ts| {
        Polynomial::from_terms(n, field(), ts.into_iter().map(|(e, c)| (Monomial::from_exps(e), c)))
    })
}

fn nonzero_poly(n: usize, max_exp: u16, terms: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    poly(n, max_exp, terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn form(n: usize, deg: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let ms = apolar_core::monomial::monomials_of_degree(n, deg);
    let k = ms.len();
    prop::collection::vec(0..P, k)
        .prop_map(move |cs| Polynomial::from_terms(n, field(), ms.clone().into_iter().zip(cs)))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// An automorphism `α_i ↦ c_i α_i + (terms of degree 2 and 3)`.
fn automorphism(n: usize, trunc: usize) -> impl Strategy<Value = Substitution<PrimeField>> {
    prop::collection::vec((1..P, poly(n, 2, 3)), n).prop_map(move |parts| {
        let f = field();
        let images = parts
            .into_iter()
            .enumerate()
            .map(|(i, (c, tail))| {
                let high = Polynomial::from_terms(
                    n,
                    f,
                    tail.terms().filter(|(m, _)| m.degree() >= 2).map(|(m, c)| (m.clone(), *c)),
                );
                Polynomial::term(f, Monomial::var(n, i), c).add(&high)
            })
            .collect();
        Substitution::new(f, images, trunc).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn contraction_is_bilinear(f in poly(3, 4, 6), s in poly(3, 3, 4), t in poly(3, 3, 4), a in 0..P, b in 0..P) {
        let lhs = contract_poly(&s.scale(&a).add(&t.scale(&b)), &f);
        let rhs = contract_poly(&s, &f).scale(&a).add(&contract_poly(&t, &f).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_a_module_action(f in poly(3, 4, 6), s in poly(3, 3, 4), t in poly(3, 3, 4)) {
        prop_assert_eq!(contract_poly(&s.mul(&t), &f), contract_poly(&s, &contract_poly(&t, &f)));
    }

    #[test]
    fn inverse_substitution_round_trips(phi in automorphism(2, 6), sigma in poly(2, 4, 5)) {
        let psi = phi.invert().unwrap();
        let op = Operator::new(sigma.truncate(6), 6);
        let back = psi.apply(&phi.apply(&op).unwrap()).unwrap();
        prop_assert_eq!(back.poly(), op.poly());
    }

    #[test]
    fn dual_substitution_is_contravariant(phi in automorphism(2, 7), psi in automorphism(2, 7), f in nonzero_poly(2, 3, 5)) {
        let both = phi.then(&psi).unwrap();
        let lhs = dual_substitution(&both, &f).unwrap();
        let rhs = dual_substitution(&psi, &dual_substitution(&phi, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_transport(phi in automorphism(2, 7), f in nonzero_poly(2, 3, 5)) {
        let g = dual_substitution(&phi, &f).unwrap();
        let moved = apolar_ideal(&f, 7).unwrap().apply_substitution(&phi).unwrap();
        prop_assert!(apolar_ideal(&g, 7).unwrap().same_ideal(&moved).unwrap());
        prop_assert_eq!(hilbert_vector(&g).unwrap(), hilbert_vector(&f).unwrap());
    }

    #[test]
    fn truncations_agree(f in nonzero_poly(3, 3, 5), extra in 1usize..4) {
        let s = f.degree().unwrap();
        let lo = apolar_ideal(&f, s + 1).unwrap();
        let hi = apolar_ideal(&f, s + 1 + extra).unwrap();
        prop_assert!(hi.restrict(s + 1).unwrap().same_ideal(&lo).unwrap());
        prop_assert_eq!(hi.colength(), hilbert_vector(&f).unwrap().iter().sum::<usize>());
        let h = hilbert_vector(&f).unwrap();
        prop_assert_eq!(h[0], 1);
        prop_assert_eq!(*h.last().unwrap(), 1);
        prop_assert_eq!(h.len(), s + 1);
    }

    #[test]
    fn products_commute_and_sit_in_intersections(f in nonzero_poly(2, 3, 4), g in nonzero_poly(2, 3, 4)) {
        let d = f.degree().unwrap() + g.degree().unwrap() + 2;
        let i = apolar_ideal(&f, d).unwrap();
        let j = apolar_ideal(&g, d).unwrap();
        let ij = i.product(&j).unwrap();
        prop_assert!(ij.same_ideal(&j.product(&i).unwrap()).unwrap());
        let cap = i.intersect(&j).unwrap();
        prop_assert!(cap.contains(&ij).unwrap());
        prop_assert!(i.contains(&cap).unwrap() && j.contains(&cap).unwrap());
    }

    #[test]
    fn catalecticant_transpose(f in form(3, 5), a in 0usize..=5) {
        prop_assert_eq!(catalecticant_rank(&f, a).unwrap(), catalecticant_rank(&f, 5 - a).unwrap());
    }

    #[test]
    fn search_finds_actual_decomposition(f in nonzero_poly(2, 4, 4)) {
        let p = symmetric_decomposition(&f).unwrap();
        let found = decomposition_search(&p.h);
        let mut rows = p.delta.clone();
        if p.socle_degree < 2 {
            return Ok(());
        }
        rows.truncate(p.socle_degree - 1);
        prop_assert!(found.contains(&rows), "{:?} not among {:?}", rows, found);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn tangent_dimension_is_an_invariant(phi in automorphism(3, 8), f in nonzero_poly(3, 3, 4)) {
        let g = dual_substitution(&phi, &f).unwrap();
        prop_assert_eq!(tangent_space_dimension(&g).unwrap(), tangent_space_dimension(&f).unwrap());
    }
}
