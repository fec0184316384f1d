use num_traits::{One, Zero};
use proptest::prelude::*;
use skein::scalar::{arith, ArithOp, Poly, RatFunc, Rational, Scalar, Subring};
use skein::Error;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 0..4).prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(p, d)| q(p, d)).collect()))
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(), poly_strategy()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn laurent_strategy() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-3i64..=3, -5i64..=5, 1i64..=3), 0..4).prop_map(|ts| {
        ts.into_iter().map(|(k, p, d)| RatFunc::laurent_monomial(q(p, d), k)).sum()
    })
}

#[test]
fn arithmetic_examples() {
    let a = Scalar::alpha();
    assert_eq!(arith(&a, &a, ArithOp::Div).unwrap(), Scalar::one());
    let half = Scalar::frac(1, 2);
    let dual = Scalar::laurent_monomial(q(1, 2), -1);
    assert_eq!(arith(&half, &dual, ArithOp::Mul).unwrap(), Scalar::laurent_monomial(q(1, 4), -1));
    let am1 = &a - &Scalar::one();
    let ap1 = &a + &Scalar::one();
    assert_eq!(arith(&am1, &ap1, ArithOp::Add).unwrap(), &Scalar::int(2) * &a);
    assert_eq!(arith(&a, &Scalar::zero(), ArithOp::Div), Err(Error::DivisionByZero));
}

#[test]
fn unit_examples() {
    assert!(Scalar::laurent_monomial(q(2, 1), -3).is_unit(Subring::Laurent));
    assert!(!(&Scalar::alpha() + &Scalar::one()).is_unit(Subring::Laurent));
    assert!(!Scalar::zero().is_unit(Subring::Field));
    assert!((&Scalar::alpha() + &Scalar::one()).is_unit(Subring::Field));
    assert!(!Scalar::zero().is_unit(Subring::Laurent));
}

#[test]
fn rendering_grammar() {
    let s = &Scalar::laurent_monomial(q(3, 4), -2) + &Scalar::one();
    assert_eq!(s.to_string(), "3/4*a^-2 + 1");
    assert_eq!(Scalar::laurent_monomial(q(-1, 2), 1).to_string(), "-1/2*a^1");
    assert_eq!(Scalar::zero().to_string(), "0");
    let r = Scalar::one().checked_div(&(&Scalar::alpha() + &Scalar::one())).unwrap();
    assert_eq!(r.to_string(), "(1)/(1 + 1*a^1)");
    assert_eq!("3/4*a^-2 + 1".parse::<Scalar>().unwrap(), s);
    assert_eq!("(1)/(1 + 1*a^1)".parse::<Scalar>().unwrap(), r);
}

#[test]
fn canonical_denominator_is_monic() {
    let r = RatFunc::new(Poly::from_coeffs(vec![q(2, 1)]), Poly::from_coeffs(vec![q(3, 1), q(6, 1)])).unwrap();
    assert!(r.denom().lead().unwrap() == &q(1, 1));
    assert_eq!(r, RatFunc::new(Poly::from_coeffs(vec![q(1, 3)]), Poly::from_coeffs(vec![q(1, 2), q(1, 1)])).unwrap());
    assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
}

proptest! {
    #[test]
    fn field_laws(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn canonical_form_equality(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        let equal = a == b;
        let same_pair = a.numer() == b.numer() && a.denom() == b.denom();
        prop_assert_eq!(equal, same_pair);
        prop_assert!(a.denom().lead().map(|l| l == &q(1, 1)).unwrap_or(false));
    }

    #[test]
    fn render_parse_round_trip(a in ratfunc_strategy()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn laurent_round_trip(a in laurent_strategy()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn laurent_units_are_monomials(c in -5i64..=5, k in -4i64..=4) {
        let m = Scalar::laurent_monomial(q(c, 1), k);
        prop_assert_eq!(m.is_unit(Subring::Laurent), c != 0);
        let shifted = &m + &Scalar::laurent_monomial(q(1, 1), k + 1);
        prop_assert_eq!(shifted.is_unit(Subring::Laurent), c == 0);
    }
}
