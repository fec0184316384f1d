use super::{ensure_same, Algebra, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::{parse_xpoly, Scalar};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug)]
pub struct AlgebraElement {
    algebra: Algebra,
    coords: Vec<Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        super::same_algebra(&self.algebra, &other.algebra) && self.coords == other.coords
    }
}

impl AlgebraElement {
    pub fn new(algebra: &Algebra, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != algebra.rank() {
            return Err(Error::SizeMismatch(coords.len(), algebra.rank()));
        }
        Ok(AlgebraElement { algebra: algebra.clone(), coords })
    }

    pub fn zero(algebra: &Algebra) -> Self {
        AlgebraElement { algebra: algebra.clone(), coords: vec![Scalar::zero(); algebra.rank()] }
    }

    pub fn one(algebra: &Algebra) -> Self {
        AlgebraElement { algebra: algebra.clone(), coords: algebra.unit_coords() }
    }

    pub fn basis(algebra: &Algebra, i: usize) -> Self {
        AlgebraElement { algebra: algebra.clone(), coords: algebra.basis_coords(i) }
    }

    /// `x^s` reduced in the basis.
    pub fn power_of_x(algebra: &Algebra, s: usize) -> Self {
        AlgebraElement { algebra: algebra.clone(), coords: algebra.power_coords(s) }
    }

    /// Parses a polynomial in `x` with coefficients in Q(a), e.g. `2*x + a`.
    pub fn parse(algebra: &Algebra, s: &str) -> Result<Self> {
        let p = parse_xpoly(s, true)?;
        let mut out = Self::zero(algebra);
        for (k, c) in p {
            if algebra.rank() == 1 && k > 0 {
                return Err(Error::Parse(format!("x does not exist in rank-one algebra: {s}")));
            }
            out = out.add(&Self::power_of_x(algebra, k as usize).scale(&c))?;
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        ensure_same(&self.algebra, &o.algebra)?;
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        AlgebraElement { algebra: self.algebra.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        ensure_same(&self.algebra, &o.algebra)?;
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords: self.algebra.mul_coords(&self.coords, &o.coords) })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(&self.algebra);
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn counit(&self) -> Scalar {
        self.algebra.counit_coords(&self.coords)
    }

    pub fn comul(&self) -> TensorElement {
        TensorElement::from_element(self).comul_slot(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

pub(crate) fn monomial_name(k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let negative = c.is_negative_monomial();
            let shown = if negative && !first { -c } else { c.clone() };
            if !first {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if k == 0 {
                if shown.is_compound() && !first {
                    write!(f, "({shown})")?;
                } else {
                    write!(f, "{shown}")?;
                }
            } else if shown.is_one() {
                f.write_str(&monomial_name(k))?;
            } else if shown.is_compound() {
                write!(f, "({shown})*{}", monomial_name(k))?;
            } else {
                write!(f, "{shown}*{}", monomial_name(k))?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
