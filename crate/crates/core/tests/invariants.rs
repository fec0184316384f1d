use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use skein::frobenius::{alpha, AlgebraElement};
use skein::invariants::*;
use skein::scalar::{binomial, Rational, Scalar};
use skein::solidtorus::kirby_closed_form;
use skein::surfaces::{SurfaceComponent, SurfacePresentation};
use skein::Error;

fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

fn skein_of(terms: &[(&str, Scalar)]) -> SphereSkein {
    let mut x = SphereSkein::zero();
    for (s, c) in terms {
        x.add_term(w(s), c.clone());
    }
    x
}

fn inv_a(k: i64) -> Scalar {
    Scalar::alpha_pow(-k)
}

#[test]
fn s2xb2_table_values() {
    let one = Scalar::one();
    assert_eq!(invariant_s2xb2(SphereGenerator::SPow(2), &one).unwrap(), &Scalar::frac(1, 2) * &inv_a(1));
    assert_eq!(invariant_s2xb2(SphereGenerator::SPow(4), &one).unwrap(), &Scalar::frac(6, 16) * &inv_a(2));
    assert_eq!(invariant_s2xb2(SphereGenerator::SPow(6), &one).unwrap(), &Scalar::frac(20, 64) * &inv_a(3));
    assert!(invariant_s2xb2(SphereGenerator::SPow(3), &one).unwrap().is_zero());
    assert!(invariant_s2xb2(SphereGenerator::D, &one).unwrap().is_zero());
    let y = &Scalar::int(3) * &Scalar::alpha();
    assert_eq!(invariant_s2xb2(SphereGenerator::Empty, &y).unwrap(), &y * &y);
    assert_eq!(invariant_s2xb2(SphereGenerator::Empty, &Scalar::zero()), Err(Error::NonUnitEvaluation));
}

#[test]
fn s2xb2_table_matches_the_presentation() {
    let y = Scalar::frac(-2, 5);
    for k in 0..=6 {
        let table = invariant_s2xb2(SphereGenerator::SPow(k), &y).unwrap();
        assert_eq!(s2xb2_on_words(&SphereSkein::s_pow(k), &y).unwrap(), table, "S^{k}");
    }
    assert_eq!(s2xb2_on_words(&SphereSkein::word(w("D")), &y).unwrap(), Scalar::zero());
    for k in 1..=3 {
        let c = Scalar::rational(Rational::new(binomial(2 * k as u64, k as u64), BigInt::from(1u32) << (2 * k)));
        assert_eq!(s2xb2_capping_coefficient(k), &c * &inv_a(k as i64));
    }
}

#[test]
fn b3xs1_table() {
    assert!(invariant_b3xs1(SphereGenerator::Empty).is_one());
    assert!(invariant_b3xs1(SphereGenerator::SPow(3)).is_zero());
    assert!(invariant_b3xs1(SphereGenerator::SPow(1)).is_zero());
    assert!(invariant_b3xs1(SphereGenerator::D).is_one());
    assert!(b3xs1_on_words(&SphereSkein::word(w("D"))).is_one());
    assert!(b3xs1_on_words(&SphereSkein::s_pow(2)).is_zero());
}

/// Sum over the terms of ω of the product of ε(H·x^m) over the tori, `m` the total exponent at a torus.
fn toric_oracle(d: usize, r: usize) -> Scalar {
    let omega = kirby_closed_form(d * r / 2).tensor;
    let mut total = Scalar::zero();
    for (exps, c) in omega.terms() {
        let mut value = c.clone();
        for i in 0..d {
            let m: usize = (0..r).map(|t| exps[i + t * d] as usize).sum();
            value = if m % 2 == 0 { &(&value * &Scalar::int(2)) * &Scalar::alpha_pow((m / 2) as i64) } else { Scalar::zero() };
        }
        total += &value;
    }
    total
}

#[test]
fn toric_cap_values() {
    assert_eq!(cyclic_toric_cap(2, 1).unwrap(), Scalar::int(2));
    assert_eq!(cyclic_toric_cap(1, 2).unwrap(), Scalar::int(2));
    assert!(matches!(cyclic_toric_cap(1, 1), Err(Error::OddProduct(1))));
    assert!(matches!(cyclic_toric_cap(3, 3), Err(Error::OddProduct(9))));
    for (d, r) in [(1, 2), (2, 1), (2, 2), (1, 4), (4, 1), (3, 2), (2, 3), (1, 6), (6, 1), (2, 4), (4, 2)] {
        assert_eq!(cyclic_toric_cap(d, r).unwrap(), toric_oracle(d, r), "d={d} r={r}");
    }
}

#[test]
fn t2xb2_table() {
    assert!(invariant_t2xb2(TorusGenerator::Empty, 3).unwrap().is_one());
    assert!(invariant_t2xb2(TorusGenerator::D, 3).unwrap().is_zero());
    assert!(invariant_t2xb2(TorusGenerator::TPow(1), 1).unwrap().is_zero());
    assert_eq!(invariant_t2xb2(TorusGenerator::TPow(2), 1).unwrap(), Scalar::int(2));
    assert_eq!(invariant_t2xb2(TorusGenerator::TPow(2), -2).unwrap(), cyclic_toric_cap(2, 2).unwrap());
}

#[test]
fn sphere_rewriting_examples() {
    let nf = |s: &str| sphere_skein_normal_form(&SphereSkein::word(w(s)));
    assert_eq!(nf("DS"), skein_of(&[("SD", -Scalar::one())]));
    assert_eq!(nf("DD"), skein_of(&[("", Scalar::one()), ("SS", -Scalar::alpha())]));
    assert_eq!(nf("DDS"), skein_of(&[("SSS", -Scalar::alpha()), ("S", Scalar::one())]));
    assert_eq!(nf("DDD"), skein_of(&[("D", Scalar::one()), ("SSD", -Scalar::alpha())]));
    let ddd_left = normal_form_with(&SphereSkein::word(w("DDD")), &mut |_| 0);
    let ddd_right = normal_form_with(&SphereSkein::word(w("DDD")), &mut |n| n - 1);
    assert_eq!(ddd_left, ddd_right);
    let dds_right = normal_form_with(&SphereSkein::word(w("DDS")), &mut |n| n - 1);
    assert_eq!(dds_right, nf("DDS"));
    assert!(nf("DSDS").is_normal());
    assert!(!SphereSkein::word(w("DS")).is_normal());
}

#[test]
fn trace_reduction_examples() {
    let tr = |s: &str| sphere_skein_trace_reduce(&SphereSkein::word(w(s)));
    assert!(tr("SSD").is_zero());
    assert!(tr("SD").is_zero());
    assert_eq!(tr("D"), SphereSkein::word(w("D")));
    assert_eq!(tr("SSS"), skein_of(&[("S", inv_a(1))]));
    assert_eq!(tr("SSSSS"), skein_of(&[("S", inv_a(2))]));
    assert_eq!(tr("DD"), skein_of(&[("", Scalar::one()), ("SS", -Scalar::alpha())]));
    assert_eq!(tr("DS"), SphereSkein::zero());
}

#[test]
fn sphere_powers_are_distinct() {
    let forms: Vec<SphereSkein> = (0..=10).map(|k| sphere_skein_normal_form(&SphereSkein::s_pow(k))).collect();
    for i in 0..forms.len() {
        for j in 0..i {
            assert_ne!(forms[i], forms[j]);
        }
    }
}

#[test]
fn words_and_rendering() {
    assert_eq!(word_to_string(&w("SDS")), "SDS");
    assert_eq!(word_to_string(&[]), "∅");
    assert_eq!(w("∅"), Vec::<Sphere>::new());
    assert!(parse_word("SX").is_err());
    let x: SphereSkein = "DS".parse().unwrap();
    assert_eq!(x, SphereSkein::word(vec![Sphere::D, Sphere::S]));
    assert_eq!(SphereSkein::word(w("S")).mul(&SphereSkein::word(w("D"))), SphereSkein::word(w("SD")));
}

#[test]
fn handlebody_invariant_examples() {
    let a = alpha();
    let empty = DecoratedSkeinInBoundary::new(SurfacePresentation::empty(&a), Vec::new()).unwrap();
    let y = Scalar::alpha();
    assert_eq!(handlebody_invariant(&empty, &y, 2).unwrap(), &y * &y);
    assert_eq!(handlebody_invariant(&empty, &Scalar::int(0), 2), Err(Error::NonUnitEvaluation));
    assert!(handlebody_invariant(&s2xb2_presentation(&w("S")), &Scalar::one(), 2).unwrap().is_zero());
    assert!(handlebody_invariant(&s2xb2_presentation(&w("SSS")), &Scalar::one(), 2).unwrap().is_zero());

    let torus = SurfaceComponent::torus(AlgebraElement::one(&a)).with_punctures(2);
    let s = SurfacePresentation::new(&a, vec![torus]).unwrap();
    let d = DecoratedSkeinInBoundary::new(s, vec![vec![0, 1]]).unwrap();
    assert_eq!(handlebody_invariant(&d, &Scalar::one(), 0).unwrap(), cyclic_toric_cap(1, 2).unwrap());

    let s = SurfacePresentation::new(&a, vec![SurfaceComponent::sphere(AlgebraElement::one(&a)).with_punctures(2)]).unwrap();
    assert!(matches!(DecoratedSkeinInBoundary::new(s.clone(), vec![vec![0]]), Err(Error::InvalidSurface(_))));
    assert!(matches!(DecoratedSkeinInBoundary::new(s, vec![vec![0, 0]]), Err(Error::InvalidSurface(_))));
}

#[test]
fn rank_one_theory() {
    for u in [Scalar::one(), Scalar::int(-3), Scalar::alpha(), &Scalar::frac(2, 7) * &inv_a(2)] {
        let t = rank_one_tables(&u).unwrap();
        let r = t.battery();
        assert!(r.passed(), "{r}");
        assert_eq!(t.p4, vec![vec![Scalar::int(2)]]);
        assert_eq!(t.m4, vec![vec![Scalar::frac(1, 2)]]);
        assert_eq!(t.closed_value(0), Scalar::frac(1, 2));
        assert_eq!(t.closed_value(1), Scalar::one());
    }
    assert!(matches!(rank_one_tables(&Scalar::zero()), Err(Error::NonUnitParameter(_))));
    assert!(matches!(rank_one_tables(&(&Scalar::alpha() + &Scalar::one())), Err(Error::NonUnitParameter(_))));
    let half = |p: i64| Rational::new(p.into(), 2.into());
    assert_eq!(rank_one_dw(1), half(1));
    assert_eq!(rank_one_dw(2), half(2));
    assert_eq!(rank_one_dw(4), half(4));
}

#[test]
fn confluence_on_seeded_words() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let len = rng.gen_range(0..=8);
        let word: Word = (0..len).map(|_| if rng.gen_bool(0.5) { Sphere::S } else { Sphere::D }).collect();
        let x = SphereSkein::word(word);
        let left = sphere_skein_normal_form(&x);
        let right = normal_form_with(&x, &mut |n| n - 1);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(rng.gen());
        let random = normal_form_with(&x, &mut |n| r2.gen_range(0..n));
        assert!(left.is_normal());
        assert_eq!(left, right);
        assert_eq!(left, random);
    }
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { Sphere::S } else { Sphere::D }), 0..7)
}

fn unit_strategy() -> impl Strategy<Value = Scalar> {
    ((1i64..=4), prop::bool::ANY, -2i64..=2).prop_map(|(p, neg, k)| &Scalar::int(if neg { -p } else { p }) * &Scalar::alpha_pow(k))
}

proptest! {
    #[test]
    fn normal_form_is_order_independent(word in word_strategy(), choices in prop::collection::vec(0usize..8, 64)) {
        let x = SphereSkein::word(word);
        let mut i = 0;
        let picked = normal_form_with(&x, &mut |n| { i += 1; choices[i % choices.len()] % n });
        prop_assert_eq!(picked, sphere_skein_normal_form(&x));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(u in word_strategy(), v in word_strategy(), c in -3i64..=3) {
        let (x, y) = (SphereSkein::word(u), SphereSkein::word(v));
        let nf = sphere_skein_normal_form(&x);
        prop_assert_eq!(sphere_skein_normal_form(&nf), nf.clone());
        let c = Scalar::int(c);
        let lhs = sphere_skein_normal_form(&x.add(&y.scale(&c)));
        prop_assert_eq!(lhs, nf.add(&sphere_skein_normal_form(&y).scale(&c)));
    }

    #[test]
    fn word_evaluations_respect_the_relations(word in word_strategy(), y in unit_strategy()) {
        let x = SphereSkein::word(word);
        let table = |g| invariant_s2xb2(g, &y);
        prop_assert_eq!(s2xb2_on_words(&x, &y).unwrap(), apply_table(&x, &table).unwrap());
        let reduced = sphere_skein_trace_reduce(&x);
        prop_assert_eq!(s2xb2_on_words(&reduced, &y).unwrap(), s2xb2_on_words(&x, &y).unwrap());
        prop_assert_eq!(b3xs1_on_words(&x), apply_table(&x, &|g| Ok(invariant_b3xs1(g))).unwrap());
    }

    #[test]
    fn euler_rescaling(word in word_strategy(), y in unit_strategy(), chi in -3i64..=4) {
        let p = s2xb2_presentation(&word);
        let base = handlebody_invariant(&p, &Scalar::one(), chi).unwrap();
        prop_assert_eq!(handlebody_invariant(&p, &y, chi).unwrap(), &y.pow(chi).unwrap() * &base);
    }
}
