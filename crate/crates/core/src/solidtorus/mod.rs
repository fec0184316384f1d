//! The skein module of the solid torus with `2n` longitudinal boundary circles:
//! walk-indexed basis, pairing, cap values and the Kirby color.

mod kirby;

pub use kirby::{
    annulus_cap, capping_constant, capping_constant_formula, capping_constant_recursive, kirby_closed_form,
    kirby_color, kirby_copair, kirby_gram, kirby_symmetrizer, sign_z, super_catalan, von_szily_check, von_szily_sum,
    KirbyColor, KirbyColorJson, KirbyMethod, StratumJson,
};

use crate::dtl::DiagramSum;
use crate::error::{Error, Result};
use crate::frobenius::{alpha, ensure_same, Algebra, TensorElement};
use crate::idempotents::{dot, enumerate_classes, matching_of_walk, partition_idempotent};
use crate::linalg::{self, EchelonBasis, Matrix};
use crate::scalar::{Scalar, Subring};
use num_traits::Zero;

/// A `0 -> 2n` diagram sum together with its tensor image.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeinElement {
    n: usize,
    value: DiagramSum,
    embedding: TensorElement,
}

impl SkeinElement {
    pub fn new(value: DiagramSum) -> Result<Self> {
        if value.bottom() != 0 {
            return Err(Error::BoundaryMismatch { expected: 0, found: value.bottom() });
        }
        if value.top() % 2 != 0 {
            return Err(Error::InvalidDiagram(format!("odd boundary {}", value.top())));
        }
        let embedding = value.embed_tensor();
        Ok(SkeinElement { n: value.top() / 2, value, embedding })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> &DiagramSum {
        &self.value
    }

    pub fn embedding(&self) -> &TensorElement {
        &self.embedding
    }

    pub fn algebra(&self) -> &Algebra {
        self.value.algebra()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        SkeinElement { n: self.n, value: self.value.scale(c), embedding: self.embedding.scale(c) }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::SizeMismatch(self.n, o.n));
        }
        Ok(SkeinElement { n: self.n, value: self.value.add(&o.value)?, embedding: self.embedding.add(&o.embedding)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassBasisElement {
    pub walk: Vec<u8>,
    pub dotted: bool,
}

/// Walk-indexed basis: every `e` in walk order, then every dotted `ė`.
pub fn class_basis(n: usize) -> Vec<(ClassBasisElement, SkeinElement)> {
    let walks = enumerate_classes(n);
    let mut plain = Vec::new();
    let mut dotted = Vec::new();
    for w in walks {
        let p = matching_of_walk(&w).expect("walk is returning");
        let e = partition_idempotent(&p);
        let ed = dot(&e, 0).expect("arc 0 exists");
        plain.push((ClassBasisElement { walk: w.clone(), dotted: false }, SkeinElement::new(e.to_diagram_sum()).expect("0 -> 2n")));
        dotted.push((ClassBasisElement { walk: w, dotted: true }, SkeinElement::new(ed.to_diagram_sum()).expect("0 -> 2n")));
    }
    plain.extend(dotted);
    plain
}

/// Basis of the module for `m` boundary circles; empty when `m` is odd.
pub fn class_basis_for_points(m: usize) -> Vec<(ClassBasisElement, SkeinElement)> {
    if m % 2 == 1 {
        Vec::new()
    } else {
        class_basis(m / 2)
    }
}

/// Glue two `0 -> 2n` sums along their boundary and evaluate every resulting circle.
pub fn pairing(d1: &SkeinElement, d2: &SkeinElement) -> Result<Scalar> {
    if d1.n != d2.n {
        return Err(Error::SizeMismatch(d1.n, d2.n));
    }
    let alg = d1.algebra();
    ensure_same(alg, d2.algebra())?;
    let k = 2 * d1.n;
    let mut total = Scalar::zero();
    let t2: Vec<_> = d2.value.terms().iter().map(|(d, c)| (d.partner(), d.deco_at_points(), c)).collect();
    for (da, ca) in d1.value.terms() {
        let (pa, ea) = (da.partner(), da.deco_at_points());
        for (pb, eb, cb) in &t2 {
            let mut seen = vec![false; k];
            let mut v = ca * *cb;
            for start in 0..k {
                if seen[start] {
                    continue;
                }
                let mut sum = 0usize;
                let mut p = start;
                loop {
                    seen[p] = true;
                    sum += ea[p] as usize;
                    let q = pa[p] as usize;
                    seen[q] = true;
                    sum += eb[q] as usize;
                    p = pb[q] as usize;
                    if p == start {
                        break;
                    }
                }
                v = &v * &alg.circle_value(sum);
                if v.is_zero() {
                    break;
                }
            }
            total += &v;
        }
    }
    Ok(total)
}

/// Same pairing computed by composing with the mirror image.
pub fn pairing_by_composition(d1: &SkeinElement, d2: &SkeinElement) -> Result<Scalar> {
    let closed = d2.value.mirror().compose(&d1.value)?;
    Ok(closed.as_scalar().expect("closed"))
}

/// Gram matrix on the walk-indexed basis.
pub fn gram_matrix(n: usize) -> Matrix {
    let basis = class_basis(n);
    basis
        .iter()
        .map(|(_, a)| basis.iter().map(|(_, b)| pairing(a, b).expect("same n")).collect())
        .collect()
}

/// `Σ ½ e⊗e + (1/2a) ė⊗ė` as weighted pairs.
pub fn copairing(n: usize) -> Vec<(Scalar, SkeinElement, SkeinElement)> {
    let half = Scalar::frac(1, 2);
    let dual = &half * &Scalar::alpha_pow(-1);
    class_basis(n)
        .into_iter()
        .map(|(c, s)| (if c.dotted { dual.clone() } else { half.clone() }, s.clone(), s))
        .collect()
}

/// Product over arcs of `ε(label)`.
pub fn cap_value(d: &SkeinElement) -> Scalar {
    cap_value_of(&d.value)
}

pub fn cap_value_of(d: &DiagramSum) -> Scalar {
    let alg = d.algebra();
    d.terms()
        .iter()
        .map(|(diag, c)| diag.decorations().iter().fold(c.clone(), |acc, &e| &acc * alg.counit_basis(e as usize)))
        .sum()
}

/// Basis of decorated matchings chosen by independence of their images, with its Gram matrix.
///
/// Fails with `SingularPairing` unless the determinant is a Laurent unit.
pub fn spanning_gram(algebra: &Algebra, n: usize) -> Result<(Vec<SkeinElement>, Matrix)> {
    let rank = algebra.rank();
    let mut echelon = EchelonBasis::new();
    let mut chosen = Vec::new();
    for arcs in crate::dtl::planar_matchings(n) {
        let mut decos = vec![0usize; n];
        loop {
            let d = crate::dtl::Diagram::new(0, 2 * n, arcs.iter().zip(&decos).map(|(&p, &e)| (p, e as u8)).collect())?;
            let s = SkeinElement::new(DiagramSum::from_diagram(algebra, d)?)?;
            if echelon.insert(s.embedding.terms().clone()) {
                chosen.push(s);
            }
            let Some(i) = decos.iter().position(|&e| e + 1 < rank) else { break };
            for e in decos.iter_mut().take(i) {
                *e = 0;
            }
            decos[i] += 1;
        }
    }
    let gram: Matrix = chosen.iter().map(|a| chosen.iter().map(|b| pairing(a, b).expect("same n")).collect()).collect();
    let det = linalg::determinant(&gram);
    if !det.is_unit(Subring::Laurent) {
        return Err(Error::SingularPairing);
    }
    Ok((chosen, gram))
}

/// Zig-zag identity `(pairing ⊗ id)(id ⊗ copairing) = id` on the class basis.
pub fn zigzag_holds(n: usize) -> bool {
    let basis = class_basis(n);
    let cop = copairing(n);
    basis.iter().all(|(_, v)| {
        let mut acc = TensorElement::zero(&alpha(), 2 * n);
        for (w, a, b) in &cop {
            let p = pairing(v, a).expect("same n");
            if !p.is_zero() {
                acc = acc.add(&b.embedding.scale(&(w * &p))).expect("slots");
            }
        }
        acc == v.embedding
    })
}
