use super::poly::{Poly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Element of Q(a) in canonical form: monic denominator, coprime parts, zero as 0/1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Which ring `is_unit` tests against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subring {
    Laurent,
    Field,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lead = den.lead().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = Rational::one() / lead;
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The formal variable `a`.
    pub fn alpha() -> Self {
        Self::from_poly(Poly::monomial(Rational::one(), 1))
    }

    /// `c * a^k` for any integer `k`.
    pub fn laurent_monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFunc { num: Poly::constant(c), den: Poly::monomial(Rational::one(), (-k) as usize) }
        }
    }

    pub fn alpha_pow(k: i64) -> Self {
        Self::laurent_monomial(Rational::one(), k)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational value when the element is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.den.is_one() && self.num.degree() == Some(0) {
            Some(self.num.coeffs()[0].clone())
        } else {
            None
        }
    }

    /// `(c, k)` when the element is the Laurent monomial `c * a^k`.
    pub fn as_laurent_monomial(&self) -> Option<(Rational, i64)> {
        let dk = self.den.monomial_degree()?;
        let nk = self.num.monomial_degree()?;
        Some((self.num.coeffs()[nk].clone(), nk as i64 - dk as i64))
    }

    /// Laurent terms `(exponent, coefficient)` ascending, when the denominator is a power of `a`.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rational)>> {
        let dk = self.den.monomial_degree()? as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - dk, c.clone()))
                .collect(),
        )
    }

    pub fn is_unit(&self, subring: Subring) -> bool {
        match subring {
            Subring::Field => !self.is_zero(),
            Subring::Laurent => self.as_laurent_monomial().is_some(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Absolute value of a Laurent monomial; other elements are returned unchanged.
    pub fn abs_monomial(&self) -> Self {
        match self.as_laurent_monomial() {
            Some((c, k)) => Self::laurent_monomial(c.abs(), k),
            None => self.clone(),
        }
    }

    /// Substitutes a nonzero rational for `a`; `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduce(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::reduce(num, self.den.mul(&o.den))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        RatFunc::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use `checked_div` for a fallible variant.
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = &*self + o;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = &*self - o;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &RatFunc) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |a, b| a * b)
    }
}

fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_terms(terms: &[(i64, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let body = if idx == 0 {
            render_rational(c)
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            render_rational(&c.abs())
        };
        out.push_str(&body);
        if *k != 0 {
            out.push_str(&format!("*a^{k}"));
        }
    }
    out
}

fn poly_terms(p: &Poly) -> Vec<(i64, Rational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, c.clone()))
        .collect()
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.laurent_terms() {
            Some(terms) => f.write_str(&render_terms(&terms)),
            None => write!(f, "({})/({})", render_terms(&poly_terms(&self.num)), render_terms(&poly_terms(&self.den))),
        }
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_scalar(s)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::rational(c)
    }
}

impl RatFunc {
    /// True when the rendering needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        match self.laurent_terms() {
            Some(t) => t.len() > 1,
            None => true,
        }
    }

    pub fn is_negative_monomial(&self) -> bool {
        self.as_laurent_monomial().is_some_and(|(c, _)| c.is_negative())
    }
}
