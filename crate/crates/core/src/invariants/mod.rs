//! Invariants of 4-dimensional 2-handlebodies from surface skeins in their boundary,
//! with the worked examples, the sphere skein algebra and the rank-one theory.

mod rankone;
mod sphere;

pub use rankone::{rank_one_dw, rank_one_tables, RankOneHandleData};
pub use sphere::{
    normal_form_with, parse_word, sphere_skein_normal_form, sphere_skein_trace_reduce, word_to_string, Sphere, SphereSkein, Word,
};

use crate::error::{Error, Result};
use crate::frobenius::{alpha, same_algebra, Algebra, AlgebraElement, TensorElement};
use crate::scalar::{binomial, Rational, Scalar, Subring};
use crate::solidtorus::{kirby_closed_form, kirby_gram};
use crate::surfaces::{eval_punctured, SurfaceComponent, SurfacePresentation};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A closed decorated surface in the boundary together with the puncture groups cut out by the
/// dual link, one group per 2-handle, each listing puncture slots (0-based) in cyclic order.
#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedSkeinInBoundary {
    surface: SurfacePresentation,
    groups: Vec<Vec<usize>>,
}

impl DecoratedSkeinInBoundary {
    pub fn new(surface: SurfacePresentation, groups: Vec<Vec<usize>>) -> Result<Self> {
        let p = surface.total_punctures();
        let mut seen = vec![false; p];
        for &s in groups.iter().flatten() {
            if s >= p || seen[s] {
                return Err(Error::InvalidSurface(format!("puncture groups are not a partition of 1..{p}")));
            }
            seen[s] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidSurface(format!("puncture groups are not a partition of 1..{p}")));
        }
        if surface.total_boundary() != 0 {
            return Err(Error::InvalidSurface("surface in the boundary must be closed".into()));
        }
        Ok(DecoratedSkeinInBoundary { surface, groups })
    }

    pub fn surface(&self) -> &SurfacePresentation {
        &self.surface
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }
}

/// Kirby color tensor of the given algebra.
pub fn kirby_tensor(algebra: &Algebra, n: usize) -> Result<TensorElement> {
    if same_algebra(algebra, &alpha()) {
        Ok(kirby_closed_form(n).tensor)
    } else {
        Ok(kirby_gram(algebra, n)?.tensor)
    }
}

/// `ev(∅)^χ · eval(S, P)(⊗_j ω_{|P_j|})`.
pub fn handlebody_invariant(skein: &DecoratedSkeinInBoundary, ev_empty: &Scalar, euler_char: i64) -> Result<Scalar> {
    if !ev_empty.is_unit(Subring::Laurent) {
        return Err(Error::NonUnitEvaluation);
    }
    let scale = ev_empty.pow(euler_char)?;
    if skein.groups.iter().any(|g| g.len() % 2 == 1) {
        return Ok(Scalar::zero());
    }
    let alg = skein.surface.algebra();
    let mut input = TensorElement::scalar(alg, Scalar::one());
    for g in &skein.groups {
        input = input.tensor(&kirby_tensor(alg, g.len() / 2)?)?;
    }
    let perm: Vec<usize> = skein.groups.iter().flatten().copied().collect();
    let input = input.permute(&perm)?;
    let value = eval_punctured(&skein.surface, &input)?.as_scalar().expect("closed surface");
    Ok(&value * &scale)
}

/// Generators of the `S²×S¹` skein module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereGenerator {
    Empty,
    D,
    SPow(usize),
}

/// Table for `S²×B²`: `∅ ↦ y²`, `D ↦ 0`, `S^{2k+1} ↦ 0`, `S^{2k} ↦ C(2k,k)/(2^{2k} a^k) y²`.
pub fn invariant_s2xb2(g: SphereGenerator, ev: &Scalar) -> Result<Scalar> {
    if !ev.is_unit(Subring::Laurent) {
        return Err(Error::NonUnitEvaluation);
    }
    let y2 = ev * ev;
    Ok(match g {
        SphereGenerator::Empty => y2,
        SphereGenerator::D => Scalar::zero(),
        SphereGenerator::SPow(k) if k % 2 == 1 => Scalar::zero(),
        SphereGenerator::SPow(k) => {
            let h = k / 2;
            let c = Scalar::rational(Rational::new(binomial(k as u64, h as u64), BigInt::one() << k));
            &(&c * &Scalar::alpha_pow(-(h as i64))) * &y2
        }
    })
}

/// Table for `B³×S¹`: `∅ ↦ 1`, `S^k ↦ 0`, `D ↦ 1`.
pub fn invariant_b3xs1(g: SphereGenerator) -> Scalar {
    match g {
        SphereGenerator::Empty | SphereGenerator::D | SphereGenerator::SPow(0) => Scalar::one(),
        SphereGenerator::SPow(_) => Scalar::zero(),
    }
}

fn generator_of(w: &[Sphere]) -> Option<SphereGenerator> {
    match w {
        [] => Some(SphereGenerator::Empty),
        [Sphere::D] => Some(SphereGenerator::D),
        _ if w.iter().all(|&l| l == Sphere::S) => Some(SphereGenerator::SPow(w.len())),
        _ => None,
    }
}

/// Applies a generator table to the trace-reduced form.
pub fn apply_table(x: &SphereSkein, table: &dyn Fn(SphereGenerator) -> Result<Scalar>) -> Result<Scalar> {
    let reduced = sphere_skein_trace_reduce(x);
    let mut total = Scalar::zero();
    for (w, c) in reduced.terms() {
        let g = generator_of(w).expect("trace-reduced words are generators");
        total += &(c * &table(g)?);
    }
    Ok(total)
}

fn label_of(l: Sphere) -> AlgebraElement {
    match l {
        Sphere::S => AlgebraElement::one(&alpha()),
        Sphere::D => AlgebraElement::basis(&alpha(), 1),
    }
}

/// Parallel spheres in `S²×S¹`, each punctured once by the dual circle of the single 2-handle.
pub fn s2xb2_presentation(w: &[Sphere]) -> DecoratedSkeinInBoundary {
    let comps = w.iter().map(|&l| SurfaceComponent::sphere(label_of(l)).with_punctures(1)).collect();
    let s = SurfacePresentation::new(&alpha(), comps).expect("spheres");
    DecoratedSkeinInBoundary::new(s, vec![(0..w.len()).collect()]).expect("one group")
}

/// `S²×B²` invariant of a word sum through the explicit presentation (χ = 2).
pub fn s2xb2_on_words(x: &SphereSkein, ev: &Scalar) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for (w, c) in x.terms() {
        total += &(c * &handlebody_invariant(&s2xb2_presentation(w), ev, 2)?);
    }
    Ok(total)
}

/// `B³×S¹` invariant of a word sum by abstract evaluation of each sphere.
pub fn b3xs1_on_words(x: &SphereSkein) -> Scalar {
    x.terms().iter().map(|(w, c)| w.iter().fold(c.clone(), |acc, &l| &acc * &label_of(l).counit())).sum()
}

/// `eval(S, P)(ω_{dr})` for `d` tori with `r` punctures each at the interleaved slots `i, i+d, …`.
pub fn cyclic_toric_cap(d: usize, r: usize) -> Result<Scalar> {
    if (d * r) % 2 == 1 {
        return Err(Error::OddProduct(d * r));
    }
    let alg = alpha();
    let one = AlgebraElement::one(&alg);
    let comps = (0..d).map(|_| SurfaceComponent::torus(one.clone()).with_punctures(r)).collect();
    let punct = (0..d).map(|i| (0..r).map(|t| i + t * d).collect()).collect();
    let s = SurfacePresentation::with_slots(&alg, comps, vec![Vec::new(); d], punct)?;
    let omega = kirby_closed_form(d * r / 2).tensor;
    Ok(eval_punctured(&s, &omega)?.as_scalar().expect("closed surface"))
}

/// Generators of the 3-torus skein module with the `r` entry of the slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusGenerator {
    Empty,
    D,
    TPow(usize),
}

/// Table for `T²×B²`: `∅ ↦ 1`, `D ↦ 0`, `T ↦ 0`, `T^{2k} ↦ cap_{2k,|r|}(ω_{2k|r|})`.
pub fn invariant_t2xb2(g: TorusGenerator, r: i64) -> Result<Scalar> {
    Ok(match g {
        TorusGenerator::Empty | TorusGenerator::TPow(0) => Scalar::one(),
        TorusGenerator::D => Scalar::zero(),
        TorusGenerator::TPow(k) if k % 2 == 1 => Scalar::zero(),
        TorusGenerator::TPow(k) => cyclic_toric_cap(k, r.unsigned_abs() as usize)?,
    })
}

/// Coefficient `C(2k,k)/(2^{2k} a^k)` read off the Kirby color by capping with undotted disks.
pub fn s2xb2_capping_coefficient(k: usize) -> Scalar {
    let omega = kirby_closed_form(k).tensor;
    omega.coeff(&vec![1u8; 2 * k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2xb2_table() {
        let one = Scalar::one();
        assert_eq!(invariant_s2xb2(SphereGenerator::SPow(2), &one).unwrap(), &Scalar::frac(1, 2) * &Scalar::alpha_pow(-1));
        assert_eq!(invariant_s2xb2(SphereGenerator::SPow(4), &one).unwrap(), &Scalar::frac(6, 16) * &Scalar::alpha_pow(-2));
        assert!(invariant_s2xb2(SphereGenerator::D, &one).unwrap().is_zero());
        let y = Scalar::int(3);
        assert_eq!(invariant_s2xb2(SphereGenerator::Empty, &y).unwrap(), Scalar::int(9));
    }

    #[test]
    fn toric_caps() {
        assert_eq!(cyclic_toric_cap(2, 1).unwrap(), Scalar::int(2));
        assert_eq!(cyclic_toric_cap(1, 2).unwrap(), Scalar::int(2));
        assert!(matches!(cyclic_toric_cap(1, 1), Err(Error::OddProduct(1))));
    }

    #[test]
    fn odd_group_vanishes() {
        let w = parse_word("SSS").unwrap();
        assert!(handlebody_invariant(&s2xb2_presentation(&w), &Scalar::one(), 2).unwrap().is_zero());
    }

    #[test]
    fn empty_skein() {
        let s = SurfacePresentation::empty(&alpha());
        let d = DecoratedSkeinInBoundary::new(s, Vec::new()).unwrap();
        let y = Scalar::alpha();
        assert_eq!(handlebody_invariant(&d, &y, 2).unwrap(), &y * &y);
        assert!(matches!(handlebody_invariant(&d, &Scalar::zero(), 2), Err(Error::NonUnitEvaluation)));
    }
}
