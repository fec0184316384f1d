use num_traits::{One, Zero};
use proptest::prelude::*;
use skein::frobenius::*;
use skein::scalar::Scalar;
use skein::verify::builtin_list;
use skein::Error;

fn tensor(alg: &Algebra, terms: &[(&[u8], Scalar)]) -> TensorElement {
    let slots = terms.first().map(|t| t.0.len()).unwrap_or(0);
    let mut t = TensorElement::zero(alg, slots);
    for (e, c) in terms {
        t.add_term(e.to_vec(), c.clone());
    }
    t
}

fn a_inv_half() -> Scalar {
    &Scalar::frac(1, 2) * &Scalar::alpha_pow(-1)
}

#[test]
fn alpha_structure_maps() {
    let alg = alpha();
    let one = AlgebraElement::one(&alg);
    let x = AlgebraElement::basis(&alg, 1);
    assert_eq!(one.comul(), tensor(&alg, &[(&[0, 1], Scalar::one()), (&[1, 0], Scalar::one())]));
    assert_eq!(x.comul(), tensor(&alg, &[(&[1, 1], Scalar::one()), (&[0, 0], Scalar::alpha())]));
    assert!(one.counit().is_zero());
    assert!(x.counit().is_one());
}

#[test]
fn trivial_and_beta_structure_maps() {
    let t = trivial(Scalar::one()).unwrap();
    let one = AlgebraElement::one(&t);
    assert_eq!(one.comul(), tensor(&t, &[(&[0, 0], Scalar::one())]));
    assert!(one.counit().is_one());
    let u = Scalar::int(3);
    let tu = trivial(u.clone()).unwrap();
    assert_eq!(AlgebraElement::one(&tu).comul(), tensor(&tu, &[(&[0, 0], Scalar::frac(1, 3))]));
    assert!(matches!(trivial(&Scalar::alpha() + &Scalar::one()), Err(Error::NonUnitParameter(_))));

    let b3 = builtin_algebra(Builtin::Beta(3)).unwrap();
    let expect = tensor(&b3, &[(&[2, 0], Scalar::one()), (&[1, 1], Scalar::one()), (&[0, 2], Scalar::one())]);
    assert_eq!(AlgebraElement::one(&b3).comul(), expect);
    for k in 0..3 {
        assert_eq!(AlgebraElement::basis(&b3, k).counit(), if k == 2 { Scalar::one() } else { Scalar::zero() });
    }
    assert!(builtin_algebra(Builtin::Beta(1)).is_err());
}

#[test]
fn every_builtin_passes_the_axiom_battery() {
    for alg in builtin_list() {
        for (name, ok) in alg.axiom_report() {
            assert!(ok, "{}: {name}", alg.name());
        }
    }
}

#[test]
fn handle_elements() {
    let two_x = AlgebraElement::basis(&alpha(), 1).scale(&Scalar::int(2));
    assert_eq!(handle_element(&alpha()), two_x);
    assert_eq!(handle_element(&bar_natan()), AlgebraElement::basis(&bar_natan(), 1).scale(&Scalar::int(2)));
    let u = Scalar::alpha();
    let t = trivial(u.clone()).unwrap();
    assert_eq!(handle_element(&t), AlgebraElement::one(&t).scale(&u.inv().unwrap()));
}

#[test]
fn strong_separability() {
    let (ok, hinv) = is_strongly_separable(&alpha());
    assert!(ok);
    assert_eq!(hinv.unwrap(), AlgebraElement::basis(&alpha(), 1).scale(&a_inv_half()));
    assert_eq!(is_strongly_separable(&bar_natan()), (false, None));
    let u = Scalar::frac(2, 5);
    let t = trivial(u.clone()).unwrap();
    let (ok, hinv) = is_strongly_separable(&t);
    assert!(ok);
    assert_eq!(hinv.unwrap(), AlgebraElement::one(&t).scale(&u));
}

#[test]
fn pairing_and_dual_bases() {
    let alg = alpha();
    let one = AlgebraElement::one(&alg);
    let x = AlgebraElement::basis(&alg, 1);
    assert!(frobenius_pairing(&one, &x).unwrap().is_one());
    assert!(frobenius_pairing(&one, &one).unwrap().is_zero());
    assert!(frobenius_pairing(&x, &x).unwrap().is_zero());
    let (basis, dual) = dual_bases(&alg).unwrap();
    assert_eq!(basis, vec![one.clone(), x.clone()]);
    assert_eq!(dual, vec![x.clone(), one.clone()]);
    let t = trivial(Scalar::one()).unwrap();
    let e = AlgebraElement::one(&t);
    assert!(frobenius_pairing(&e, &e).unwrap().is_one());
    assert_eq!(frobenius_pairing(&one, &AlgebraElement::one(&bar_natan())), Err(Error::AlgebraMismatch));
}

#[test]
fn dual_bases_are_dual_and_split_the_copairing() {
    for alg in builtin_list() {
        let (xs, ys) = dual_bases(&alg).unwrap();
        for (i, xi) in xs.iter().enumerate() {
            for (j, yj) in ys.iter().enumerate() {
                let v = frobenius_pairing(xi, yj).unwrap();
                assert_eq!(v, if i == j { Scalar::one() } else { Scalar::zero() }, "{}", alg.name());
            }
        }
        let mut sum = TensorElement::zero(&alg, 2);
        for (xi, yi) in xs.iter().zip(&ys) {
            sum = sum.add(&TensorElement::product_of(&alg, &[xi.clone(), yi.clone()]).unwrap()).unwrap();
        }
        assert_eq!(sum, AlgebraElement::one(&alg).comul(), "{}", alg.name());
    }
}

#[test]
fn separability_idempotents() {
    let alg = alpha();
    let e = separability_idempotent(&alg).unwrap();
    assert_eq!(e, tensor(&alg, &[(&[0, 0], Scalar::frac(1, 2)), (&[1, 1], a_inv_half())]));
    assert_eq!(e.multi_mul(), AlgebraElement::one(&alg));
    assert_eq!(e.slotwise_mul(&e).unwrap(), e);
    for n in 2..=4 {
        let b = builtin_algebra(Builtin::Beta(n)).unwrap();
        let e = separability_idempotent(&b).unwrap();
        let c = (&Scalar::int(n as i64) * &Scalar::alpha()).inv().unwrap();
        let mut expect = TensorElement::zero(&b, 2);
        for i in 1..=n {
            let left = if i == n { 0 } else { i };
            let coeff = if i == n { &c * &Scalar::alpha() } else { c.clone() };
            expect.add_term(vec![left as u8, (n - i) as u8], coeff);
        }
        assert_eq!(e, expect, "beta:{n}");
        assert_eq!(e.multi_mul(), AlgebraElement::one(&b));
        assert_eq!(e.slotwise_mul(&e).unwrap(), e);
    }
    let t = trivial(Scalar::one()).unwrap();
    assert_eq!(separability_idempotent(&t).unwrap(), tensor(&t, &[(&[0, 0], Scalar::one())]));
    assert_eq!(separability_idempotent(&bar_natan()), Err(Error::NotSeparable));
}

#[test]
fn iterated_comultiplication() {
    let alg = alpha();
    let one = AlgebraElement::one(&alg);
    assert!(iterated_comul(&one, 0).as_scalar().unwrap().is_zero());
    assert_eq!(iterated_comul(&one, 1), TensorElement::from_element(&one));
    assert_eq!(iterated_comul(&one, 2), one.comul());
    let expect = tensor(
        &alg,
        &[
            (&[0, 0, 0], Scalar::alpha()),
            (&[0, 1, 1], Scalar::one()),
            (&[1, 0, 1], Scalar::one()),
            (&[1, 1, 0], Scalar::one()),
        ],
    );
    assert_eq!(iterated_comul(&one, 3), expect);
    assert_eq!(iterated_comul_with(&one, 3, Bracketing::Left), expect);
}

#[test]
fn multiplication_folds() {
    let alg = alpha();
    let xx = tensor(&alg, &[(&[1, 1], Scalar::one())]);
    assert_eq!(multi_mul(&xx), AlgebraElement::one(&alg).scale(&Scalar::alpha()));
    let c = Scalar::frac(-7, 3);
    assert_eq!(multi_mul(&TensorElement::scalar(&alg, c.clone())), AlgebraElement::one(&alg).scale(&c));
    let oxx = tensor(&alg, &[(&[0, 1, 1], Scalar::one())]);
    assert_eq!(multi_mul(&oxx), AlgebraElement::one(&alg).scale(&Scalar::alpha()));
}

#[test]
fn tensor_json_round_trip() {
    let alg = alpha();
    let t = iterated_comul(&AlgebraElement::one(&alg), 3);
    let text = serde_json::to_string(&t.to_json()).unwrap();
    assert!(text.starts_with("{\"slots\":3,\"terms\":["));
    let back: TensorJson = serde_json::from_str(&text).unwrap();
    assert_eq!(TensorElement::from_json(&alg, &back).unwrap(), t);
}

#[test]
fn algebra_names_round_trip() {
    for alg in builtin_list() {
        let again = algebra_by_name(alg.name()).unwrap();
        assert_eq!(*again, *alg);
    }
    assert!(algebra_by_name("gamma").is_err());
}

fn element_strategy(rank: usize) -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-4i64..=4, 1i64..=3, -2i64..=2), rank)
}

fn build(alg: &Algebra, cs: &[(i64, i64, i64)]) -> AlgebraElement {
    AlgebraElement::new(alg, cs.iter().map(|&(p, d, k)| &Scalar::frac(p, d) * &Scalar::alpha_pow(k)).collect()).unwrap()
}

proptest! {
    #[test]
    fn comultiplication_is_a_bimodule_map(which in 0usize..6, a in element_strategy(4), b in element_strategy(4)) {
        let alg = builtin_list()[which].clone();
        let r = alg.rank();
        let a = build(&alg, &a[..r]);
        let b = build(&alg, &b[..r]);
        let ab = a.mul(&b).unwrap();
        let left = TensorElement::product_of(&alg, &[a.clone(), AlgebraElement::one(&alg)]).unwrap().slotwise_mul(&b.comul()).unwrap();
        let right = TensorElement::product_of(&alg, &[AlgebraElement::one(&alg), a.clone()]).unwrap().slotwise_mul(&b.comul()).unwrap();
        prop_assert_eq!(&ab.comul(), &left);
        prop_assert_eq!(&ab.comul(), &right);
        prop_assert_eq!(ab.comul().multi_mul().counit(), ab.mul(&handle_element(&alg)).unwrap().counit());
    }

    #[test]
    fn iterated_comul_is_bracketing_independent(which in 0usize..6, a in element_strategy(4), k in 0usize..5) {
        let alg = builtin_list()[which].clone();
        let a = build(&alg, &a[..alg.rank()]);
        prop_assert_eq!(iterated_comul_with(&a, k, Bracketing::Left), iterated_comul_with(&a, k, Bracketing::Right));
    }
}
