//! Abstract evaluation of decorated, possibly punctured, surfaces.

use crate::error::{Error, Result};
use crate::frobenius::{algebra_by_name, alpha, ensure_same, handle_element, iterated_comul, Algebra, AlgebraElement, TensorElement};
use crate::scalar::Scalar;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A connected decorated surface described by its numerical data.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceComponent {
    pub euler_char: i64,
    pub boundary_count: usize,
    pub orientable: bool,
    pub label: AlgebraElement,
    pub punctures: usize,
}

impl SurfaceComponent {
    pub fn new(euler_char: i64, boundary_count: usize, orientable: bool, label: AlgebraElement, punctures: usize) -> Result<Self> {
        let defect = 2 - euler_char - boundary_count as i64;
        if orientable && (defect < 0 || defect % 2 != 0) {
            return Err(Error::InvalidSurface(format!("no orientable surface with chi={euler_char} and {boundary_count} boundary circles")));
        }
        if !orientable && defect < 1 {
            return Err(Error::InvalidSurface(format!("no unorientable surface with chi={euler_char} and {boundary_count} boundary circles")));
        }
        Ok(SurfaceComponent { euler_char, boundary_count, orientable, label, punctures })
    }

    pub fn sphere(label: AlgebraElement) -> Self {
        Self::new(2, 0, true, label, 0).expect("sphere")
    }

    pub fn torus(label: AlgebraElement) -> Self {
        Self::new(0, 0, true, label, 0).expect("torus")
    }

    pub fn disk(label: AlgebraElement) -> Self {
        Self::new(1, 1, true, label, 0).expect("disk")
    }

    pub fn with_punctures(mut self, p: usize) -> Self {
        self.punctures = p;
        self
    }

    /// Unorientable with `χ + |∂|` odd.
    pub fn is_type_beta(&self) -> bool {
        !self.orientable && (self.euler_char + self.boundary_count as i64).rem_euclid(2) == 1
    }

    /// `g = 1 - (|∂| + χ)/2`.
    pub fn genus(&self) -> Result<usize> {
        if self.is_type_beta() {
            return Err(Error::TypeBetaComponent);
        }
        Ok(((2 - self.euler_char - self.boundary_count as i64) / 2) as usize)
    }

    /// `Δ^{|∂|}(H^g · ℓ · a)`.
    fn eval_with(&self, a: &AlgebraElement) -> Result<TensorElement> {
        let h = handle_element(self.label.algebra()).pow(self.genus()?);
        Ok(iterated_comul(&h.mul(&self.label)?.mul(a)?, self.boundary_count))
    }
}

/// Components with their boundary circles and punctures assigned to global slots (0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct SurfacePresentation {
    algebra: Algebra,
    components: Vec<SurfaceComponent>,
    boundary_slots: Vec<Vec<usize>>,
    puncture_slots: Vec<Vec<usize>>,
}

fn check_bijection(maps: &[Vec<usize>], counts: impl Iterator<Item = usize>, what: &str) -> Result<usize> {
    let mut total = 0;
    for (m, c) in maps.iter().zip(counts) {
        if m.len() != c {
            return Err(Error::SlotMismatch { expected: c, found: m.len() });
        }
        total += c;
    }
    let mut seen = vec![false; total];
    for &s in maps.iter().flatten() {
        if s >= total || seen[s] {
            return Err(Error::InvalidSurface(format!("{what} slots are not a bijection onto 1..{total}")));
        }
        seen[s] = true;
    }
    Ok(total)
}

fn consecutive(counts: impl Iterator<Item = usize>) -> Vec<Vec<usize>> {
    let mut next = 0;
    counts
        .map(|c| {
            let v = (next..next + c).collect();
            next += c;
            v
        })
        .collect()
}

impl SurfacePresentation {
    /// Slots assigned consecutively in component order.
    pub fn new(algebra: &Algebra, components: Vec<SurfaceComponent>) -> Result<Self> {
        let b = consecutive(components.iter().map(|c| c.boundary_count));
        let p = consecutive(components.iter().map(|c| c.punctures));
        Self::with_slots(algebra, components, b, p)
    }

    pub fn with_slots(
        algebra: &Algebra,
        components: Vec<SurfaceComponent>,
        boundary_slots: Vec<Vec<usize>>,
        puncture_slots: Vec<Vec<usize>>,
    ) -> Result<Self> {
        for c in &components {
            ensure_same(algebra, c.label.algebra())?;
        }
        if boundary_slots.len() != components.len() || puncture_slots.len() != components.len() {
            return Err(Error::InvalidSurface("one slot list per component is required".into()));
        }
        check_bijection(&boundary_slots, components.iter().map(|c| c.boundary_count), "boundary")?;
        check_bijection(&puncture_slots, components.iter().map(|c| c.punctures), "puncture")?;
        Ok(SurfacePresentation { algebra: algebra.clone(), components, boundary_slots, puncture_slots })
    }

    pub fn empty(algebra: &Algebra) -> Self {
        Self::new(algebra, Vec::new()).expect("empty")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn components(&self) -> &[SurfaceComponent] {
        &self.components
    }

    pub fn boundary_slots(&self) -> &[Vec<usize>] {
        &self.boundary_slots
    }

    pub fn puncture_slots(&self) -> &[Vec<usize>] {
        &self.puncture_slots
    }

    pub fn total_boundary(&self) -> usize {
        self.components.iter().map(|c| c.boundary_count).sum()
    }

    pub fn total_punctures(&self) -> usize {
        self.components.iter().map(|c| c.punctures).sum()
    }

    pub fn from_json(j: &SurfaceJson) -> Result<Self> {
        let algebra = match &j.algebra {
            Some(name) => algebra_by_name(name)?,
            None => alpha(),
        };
        let components = j
            .components
            .iter()
            .map(|c| SurfaceComponent::new(c.chi, c.boundary, c.orientable, AlgebraElement::parse(&algebra, &c.label)?, c.punctures))
            .collect::<Result<Vec<_>>>()?;
        let shift = |m: &Vec<Vec<usize>>| -> Result<Vec<Vec<usize>>> {
            m.iter()
                .map(|v| v.iter().map(|&s| s.checked_sub(1).ok_or(Error::IndexOutOfRange { index: 0, max: 0 })).collect())
                .collect()
        };
        let b = match &j.boundary_slots {
            Some(m) => shift(m)?,
            None => consecutive(components.iter().map(|c| c.boundary_count)),
        };
        let p = match &j.puncture_slots {
            Some(m) => shift(m)?,
            None => consecutive(components.iter().map(|c| c.punctures)),
        };
        Self::with_slots(&algebra, components, b, p)
    }

    pub fn to_json(&self) -> SurfaceJson {
        let one_based = |m: &Vec<Vec<usize>>| m.iter().map(|v| v.iter().map(|s| s + 1).collect()).collect();
        SurfaceJson {
            algebra: Some(self.algebra.name().to_string()),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    chi: c.euler_char,
                    boundary: c.boundary_count,
                    orientable: c.orientable,
                    label: c.label.to_string(),
                    punctures: c.punctures,
                })
                .collect(),
            boundary_slots: Some(one_based(&self.boundary_slots)),
            puncture_slots: Some(one_based(&self.puncture_slots)),
            inputs: None,
        }
    }

    /// Places per-component outputs at their global boundary slots.
    fn assemble(&self, parts: Vec<TensorElement>) -> Result<TensorElement> {
        let mut t = TensorElement::scalar(&self.algebra, Scalar::one());
        for p in &parts {
            t = t.tensor(p)?;
        }
        let perm: Vec<usize> = self.boundary_slots.iter().flatten().copied().collect();
        t.permute(&perm)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub chi: i64,
    pub boundary: usize,
    pub orientable: bool,
    pub label: String,
    #[serde(default)]
    pub punctures: usize,
}

/// File format for surfaces; slot lists are 1-based and `inputs` is a pure tensor of puncture labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_slots: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub puncture_slots: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<String>>,
}

/// `⊗_C Δ^{|∂C|}(H^{g(C)} ℓ(C))`, ignoring punctures.
pub fn eval_surface(s: &SurfacePresentation) -> Result<TensorElement> {
    let one = AlgebraElement::one(&s.algebra);
    let parts = s.components.iter().map(|c| c.eval_with(&one)).collect::<Result<Vec<_>>>()?;
    s.assemble(parts)
}

/// Linear map `A^{⊗P} → A^{⊗π₀(∂S)}` multiplying each puncture input into its component.
pub fn eval_punctured(s: &SurfacePresentation, inputs: &TensorElement) -> Result<TensorElement> {
    ensure_same(&s.algebra, inputs.algebra())?;
    let p = s.total_punctures();
    if inputs.slots() != p {
        return Err(Error::SlotMismatch { expected: p, found: inputs.slots() });
    }
    for c in &s.components {
        c.genus()?;
    }
    let alg = &s.algebra;
    let mut cache: Vec<HashMap<Vec<u8>, TensorElement>> = vec![HashMap::new(); s.components.len()];
    let mut out = TensorElement::zero(alg, s.total_boundary());
    for (exps, coeff) in inputs.terms() {
        let mut parts = Vec::with_capacity(s.components.len());
        for (ci, c) in s.components.iter().enumerate() {
            let key: Vec<u8> = s.puncture_slots[ci].iter().map(|&slot| exps[slot]).collect();
            if let Some(t) = cache[ci].get(&key) {
                parts.push(t.clone());
                continue;
            }
            let mut a = AlgebraElement::one(alg);
            for &e in &key {
                a = a.mul(&AlgebraElement::basis(alg, e as usize))?;
            }
            let t = c.eval_with(&a)?;
            cache[ci].insert(key, t.clone());
            parts.push(t);
        }
        out = out.add(&s.assemble(parts)?.scale(coeff))?;
    }
    Ok(out)
}

/// Ambient 3-manifolds whose skein modules are evaluated here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Ball,
    Sphere,
    S1xS2,
    SolidTorus(usize),
}

/// Evaluation `Sk_A(M, c) → A^{⊗π₀(c)}` on a surface in one of the supported shapes.
pub fn skein_eval(shape: Shape, s: &SurfacePresentation) -> Result<TensorElement> {
    let b = s.total_boundary();
    let expected = match shape {
        Shape::Ball => b,
        Shape::Sphere | Shape::S1xS2 => 0,
        Shape::SolidTorus(n) => 2 * n,
    };
    if b != expected {
        return Err(Error::UnsupportedShape(format!("{shape:?} with {b} boundary circles")));
    }
    eval_surface(s)
}
