use apolar_core::apolar::*;
use apolar_core::monomial::{monomials_of_degree, Monomial};
use apolar_core::poly::{contract_monomial, contract_poly};
use apolar_core::substitution::Substitution;
use apolar_core::{
    contract, dual_substitution, Error, Field, Operator, Polynomial, PrimeField, Rationals, TruncatedIdeal,
};

fn q(n: usize, t: &[(i64, &[u16])]) -> Polynomial<Rationals> {
    Polynomial::from_int_terms(n, Rationals, t)
}

fn gens_of(n: usize, trunc: usize, gens: &[Polynomial<Rationals>]) -> TruncatedIdeal<Rationals> {
    TruncatedIdeal::from_generators(n, Rationals, gens, trunc).unwrap()
}

fn example() -> Polynomial<Rationals> {
    q(2, &[(1, &[6, 0]), (1, &[4, 1])])
}

#[test]
fn contraction_rules() {
    let a11 = Operator::monomial(Rationals, &[2, 0], 8);
    assert_eq!(contract(&a11, &q(2, &[(1, &[3, 1])])).unwrap(), q(2, &[(1, &[1, 1])]));
    let a22 = q(2, &[(1, &[0, 2])]);
    assert!(contract_poly(&a22, &example()).is_zero());
    let g = q(2, &[(1, &[5, 0]), (-1, &[3, 1])]);
    assert!(contract_poly(&g, &example()).is_zero());
    assert!(contract_monomial(&Monomial::from_exps(vec![1, 1]), &q(2, &[(1, &[3, 0])])).is_zero());
}

#[test]
fn annihilator_of_example() {
    let ann = apolar_ideal(&example(), 8).unwrap();
    let expected = gens_of(2, 8, &[q(2, &[(1, &[0, 2])]), q(2, &[(1, &[5, 0]), (-1, &[3, 1])])]);
    assert!(ann.same_ideal(&expected).unwrap());
    assert_eq!(ann.minimal_generators().unwrap().len(), 2);
}

#[test]
fn annihilator_of_power_in_more_variables() {
    let f = q(3, &[(1, &[4, 0, 0])]);
    let ann = apolar_ideal(&f, 7).unwrap();
    let expected = gens_of(3, 7, &[q(3, &[(1, &[0, 1, 0])]), q(3, &[(1, &[0, 0, 1])]), q(3, &[(1, &[5, 0, 0])])]);
    assert!(ann.same_ideal(&expected).unwrap());
    assert_eq!(ann.minimal_generators().unwrap().len(), 3);
}

#[test]
fn annihilator_of_binary_cubic_cone() {
    let f = q(3, &[(1, &[2, 0, 1]), (1, &[0, 2, 1])]);
    let ann = apolar_ideal(&f, 5).unwrap();
    let expected = gens_of(
        3,
        5,
        &[q(3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0])]), q(3, &[(1, &[1, 1, 0])]), q(3, &[(1, &[0, 0, 2])])],
    );
    assert!(ann.same_ideal(&expected).unwrap());
    assert!(is_complete_intersection(&f).unwrap());
}

#[test]
fn hilbert_functions_of_examples() {
    let cases: Vec<(Polynomial<Rationals>, Vec<usize>)> = vec![
        (example(), vec![1, 2, 2, 2, 1, 1, 1]),
        (q(4, &[(1, &[2, 1, 1, 0]), (1, &[1, 0, 0, 2])]), vec![1, 4, 5, 3, 1]),
        (q(4, &[(1, &[2, 0, 1, 0]), (1, &[0, 2, 1, 0]), (1, &[1, 0, 0, 2])]), vec![1, 4, 4, 1]),
        (
            q(5, &[(1, &[2, 0, 1, 0, 0]), (1, &[0, 2, 1, 0, 0]), (1, &[1, 0, 0, 2, 0]), (1, &[0, 0, 0, 1, 2])]),
            vec![1, 5, 5, 1],
        ),
        (
            q(4, &[(1, &[5, 0, 0, 0]), (1, &[0, 4, 0, 0]), (1, &[2, 0, 2, 0]), (1, &[0, 0, 1, 2])]),
            vec![1, 4, 4, 3, 1, 1],
        ),
    ];
    for (f, h) in cases {
        let rep = hilbert_function(&f).unwrap();
        assert_eq!(rep.hilbert_function, h);
        assert_eq!(rep.length, h.iter().sum::<usize>());
        assert_eq!(rep.socle_degree, h.len() - 1);
    }
    assert!(matches!(hilbert_function(&q(2, &[])), Err(Error::ZeroPolynomial)));
}

#[test]
fn ideal_sum_and_products() {
    let a = apolar_ideal(&q(2, &[(1, &[3, 0])]), 8).unwrap();
    let b = apolar_ideal(&q(2, &[(1, &[0, 3])]), 8).unwrap();
    let s = a.sum(&b).unwrap();
    // (α2, α1^4) + (α1, α2^4) = (α1, α2).
    assert!(s.same_ideal(&TruncatedIdeal::max_ideal_power(2, Rationals, 1, 8).unwrap()).unwrap());
    assert!(a.sum(&a).unwrap().same_ideal(&a).unwrap());
    let unit = TruncatedIdeal::unit(2, Rationals, 8).unwrap();
    assert!(a.product(&unit).unwrap().same_ideal(&a).unwrap());
    assert!(a.sum(&unit).unwrap().is_unit());

    // I² against the span of pairwise products of basis elements.
    let a16 = apolar_ideal(&q(2, &[(1, &[3, 0])]), 10).unwrap();
    let sq = a16.product(&a16).unwrap();
    let basis = a16.basis_polynomials();
    let mut prods = Vec::new();
    for x in &basis {
        for y in &basis {
            prods.push(x.mul_below(y, 10));
        }
    }
    let brute = gens_of(2, 10, &prods);
    assert!(brute.same_ideal(&sq).unwrap());
}

#[test]
fn products_and_intersections_of_coordinate_ideals() {
    let x = gens_of(2, 6, &[q(2, &[(1, &[1, 0])])]);
    let y = gens_of(2, 6, &[q(2, &[(1, &[0, 1])])]);
    let xy = gens_of(2, 6, &[q(2, &[(1, &[1, 1])])]);
    assert!(x.intersect(&y).unwrap().restrict(4).unwrap().same_ideal(&xy.restrict(4).unwrap()).unwrap());
    assert!(x.intersect(&x).unwrap().same_ideal(&x).unwrap());
}

#[test]
fn colon_examples() {
    let m3 = TruncatedIdeal::max_ideal_power(3, Rationals, 3, 6).unwrap();
    let m2 = TruncatedIdeal::max_ideal_power(3, Rationals, 2, 6).unwrap();
    let a1 = Operator::var(3, Rationals, 0, 6);
    assert!(m3.colon(&a1).unwrap().same_ideal(&m2).unwrap());
    let one = Operator::one(3, Rationals, 6);
    assert!(m3.colon(&one).unwrap().same_ideal(&m3).unwrap());
    let f = q(3, &[(1, &[2, 1, 1]), (1, &[0, 3, 0])]);
    let d = Operator::exact(q(3, &[(1, &[1, 1, 0]), (2, &[0, 0, 1])]));
    let ann = apolar_ideal(&f, 6).unwrap();
    let df = contract(&d, &f).unwrap();
    assert!(ann.colon(&d).unwrap().same_ideal(&apolar_ideal(&df, 6).unwrap()).unwrap());
}

#[test]
fn containment_between_related_annihilators() {
    let f = example();
    let g = q(2, &[(1, &[4, 1])]);
    let h = q(2, &[(1, &[3, 1])]);
    let kills = |i: &TruncatedIdeal<Rationals>, p: &Polynomial<Rationals>| {
        i.basis_polynomials().iter().all(|s| contract_poly(s, p).is_zero())
    };
    for (a, b) in [(&f, &g), (&g, &f), (&g, &h), (&h, &g)] {
        let ia = apolar_ideal(a, 8).unwrap();
        let ib = apolar_ideal(b, 8).unwrap();
        assert_eq!(ib.contains(&ia).unwrap(), kills(&ia, b));
    }
    // α1^5 kills x1^4x2 but not x1^6; α1^3α2 kills x1^6 but not x1^4x2.
    assert!(!apolar_ideal(&g, 8).unwrap().contains(&apolar_ideal(&f, 8).unwrap()).unwrap());
    // Ann(x1^4x2) ⊆ Ann(x1^3x2) since x1^3x2 is a derivative.
    assert!(apolar_ideal(&h, 8).unwrap().contains(&apolar_ideal(&g, 8).unwrap()).unwrap());
}

#[test]
fn transport_under_substitution() {
    let phi = Substitution::elementary(2, Rationals, 1, q(2, &[(1, &[0, 1]), (1, &[2, 0])]), 8).unwrap();
    let ann = apolar_ideal(&example(), 8).unwrap();
    let moved = ann.apply_substitution(&phi).unwrap();
    let expected = gens_of(2, 8, &[q(2, &[(1, &[0, 2]), (2, &[2, 1]), (1, &[4, 0])]), q(2, &[(1, &[3, 1])])]);
    assert!(moved.same_ideal(&expected).unwrap());
    let g = dual_substitution(&phi, &example()).unwrap();
    assert_eq!(g, q(2, &[(1, &[6, 0]), (-1, &[2, 2]), (2, &[0, 3])]));
    assert!(apolar_ideal(&g, 8).unwrap().same_ideal(&moved).unwrap());
    let id = Substitution::identity(2, Rationals, 8);
    assert_eq!(dual_substitution(&id, &example()).unwrap(), example());
}

#[test]
fn tangent_dimensions() {
    assert_eq!(tangent_space_dimension(&q(1, &[(1, &[3])])).unwrap(), 4);
    let f = q(4, &[(1, &[2, 1, 1, 0]), (1, &[1, 0, 0, 2])]);
    let rep = unobstructedness_report(&f).unwrap();
    assert_eq!((rep.tangent_dim, rep.is_unobstructed), (56, true));
    assert_eq!(
        is_complete_intersection(&f).unwrap(),
        apolar_ideal(&f, 6).unwrap().minimal_generators().unwrap().len() == 4
    );
}

#[test]
fn obstructed_length_twelve() {
    let p = PrimeField::new(65537).unwrap();
    let f = Polynomial::from_int_terms(5, p, &[(1, &[1, 1, 1, 0, 0]), (1, &[0, 0, 0, 2, 0]), (1, &[0, 0, 0, 1, 2])]);
    let rep = unobstructedness_report(&f).unwrap();
    assert_eq!((rep.length, rep.tangent_dim, rep.is_unobstructed), (12, 67, false));
}

#[test]
fn unobstructed_examples() {
    let p = PrimeField::new(65537).unwrap();
    let f = Polynomial::from_int_terms(4, p, &[(1, &[2, 0, 1, 0]), (1, &[0, 2, 1, 0]), (1, &[1, 0, 0, 2])]);
    let rep = unobstructedness_report(&f).unwrap();
    assert_eq!((rep.length, rep.tangent_dim, rep.is_unobstructed), (10, 40, true));
    let g = Polynomial::from_int_terms(
        4,
        p,
        &[(1, &[5, 0, 0, 0]), (1, &[0, 4, 0, 0]), (1, &[2, 0, 2, 0]), (1, &[0, 0, 1, 2])],
    );
    let rep = unobstructedness_report(&g).unwrap();
    assert_eq!((rep.length, rep.tangent_dim, rep.is_unobstructed), (14, 56, true));
}

#[test]
fn monomials_are_complete_intersections() {
    assert!(is_complete_intersection(&q(3, &[(1, &[2, 2, 1])])).unwrap());
    // Sum of three squares: five quadrics cut out (1,3,1).
    assert!(!is_complete_intersection(&q(3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])])).unwrap());
    assert!(is_complete_intersection(&q(3, &[(1, &[1, 1, 1]), (1, &[3, 0, 0])])).unwrap());
}

#[test]
fn pairing_is_perfect() {
    for d in 0..4 {
        let ms = monomials_of_degree(3, d);
        for a in &ms {
            for b in &ms {
                let v = contract_monomial(a, &Polynomial::term(Rationals, b.clone(), Rationals.one()));
                let expect = if a == b { Polynomial::one(3, Rationals) } else { Polynomial::zero(3, Rationals) };
                assert_eq!(v, expect);
            }
        }
    }
}
