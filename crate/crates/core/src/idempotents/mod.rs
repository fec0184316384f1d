//! Partition idempotents of planar matchings over `k[x]/(x^2 - a)` and their
//! classification by returning walks on Z.

mod walks;

pub use walks::{
    bits_from_str, bits_to_string, boundary_sequence, enumerate_classes, matching_of_walk, walk_of,
};

use crate::dtl::{Diagram, DiagramSum};
use crate::error::{Error, Result};
use crate::frobenius::alpha;
use crate::linalg::EchelonBasis;
use crate::report::Report;
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Non-crossing perfect matching of points `0..2n`, arcs sorted by first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    arcs: Vec<(usize, usize)>,
}

impl PlanarMatching {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        for a in arcs.iter_mut() {
            if a.0 > a.1 {
                *a = (a.1, a.0);
            }
        }
        arcs.sort();
        if arcs.len() > 64 {
            return Err(Error::InvalidDiagram("more than 64 arcs".into()));
        }
        let d = Diagram::new(0, 2 * arcs.len(), arcs.iter().map(|&p| (p, 0)).collect())?;
        let _ = d;
        Ok(PlanarMatching { arcs })
    }

    pub fn all(n: usize) -> Vec<PlanarMatching> {
        crate::dtl::planar_matchings(n).into_iter().map(|arcs| PlanarMatching { arcs }).collect()
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Index of the arc containing boundary point `p`.
    pub fn arc_at(&self, p: usize) -> usize {
        self.arcs.iter().position(|&(a, b)| a == p || b == p).expect("point on an arc")
    }

    fn check_arc(&self, b: usize) -> Result<()> {
        if b < self.n() {
            Ok(())
        } else {
            Err(Error::ArcMismatch(format!("arc {b} not in a matching with {} arcs", self.n())))
        }
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|(a, b)| format!("({}-{})", a + 1, b + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

fn dots_name(mask: u64) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..64).filter(|i| (mask >> i) & 1 == 1).map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join("·")
}

impl fmt::Display for EndoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mask, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_monomial();
            let shown = if negative && idx > 0 { -c } else { c.clone() };
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if shown.is_compound() {
                write!(f, "({shown}) * {}", dots_name(*mask))?;
            } else {
                write!(f, "{shown} * {}", dots_name(*mask))?;
            }
        }
        Ok(())
    }
}

/// Element of `End(M)`: a combination of dotting subsets, with `x_b^2 = a` applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoElement {
    matching: PlanarMatching,
    terms: BTreeMap<u64, Scalar>,
}

impl EndoElement {
    pub fn zero(m: &PlanarMatching) -> Self {
        EndoElement { matching: m.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(m: &PlanarMatching) -> Self {
        Self::dots(m, 0, Scalar::one())
    }

    /// `c * x_D` for the dotting subset `mask`.
    pub fn dots(m: &PlanarMatching, mask: u64, c: Scalar) -> Self {
        let mut e = Self::zero(m);
        e.add_term(mask, c);
        e
    }

    pub fn matching(&self) -> &PlanarMatching {
        &self.matching
    }

    pub fn terms(&self) -> &BTreeMap<u64, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, mask: u64) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.matching == o.matching {
            Ok(())
        } else {
            Err(Error::ArcMismatch("endomorphisms of different matchings".into()))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.matching);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        let a = Scalar::alpha();
        let mut out = Self::zero(&self.matching);
        for (d, c) in &self.terms {
            for (e, v) in &o.terms {
                let overlap = (d & e).count_ones() as i64;
                out.add_term(d ^ e, &(c * v) * &a.pow(overlap).expect("nonzero"));
            }
        }
        Ok(out)
    }

    /// The same skein read in the solid torus as a `0 -> 2n` diagram sum.
    pub fn to_diagram_sum(&self) -> DiagramSum {
        let alg = alpha();
        let n = self.matching.n();
        let mut out = DiagramSum::zero(&alg, 0, 2 * n);
        for (mask, c) in &self.terms {
            let arcs = self.matching.arcs.iter().enumerate().map(|(i, &p)| (p, ((mask >> i) & 1) as u8)).collect();
            let d = Diagram::new(0, 2 * n, arcs).expect("planar");
            out.add_term(d, c.clone());
        }
        out
    }
}

fn half() -> Scalar {
    Scalar::frac(1, 2)
}

fn pair_mask(b: usize, c: usize) -> u64 {
    (1u64 << b) | (1u64 << c)
}

fn join_like(m: &PlanarMatching, b: usize, c: usize, sign: i64) -> Result<EndoElement> {
    m.check_arc(b)?;
    m.check_arc(c)?;
    if b == c {
        return Err(Error::ArcMismatch(format!("join of arc {b} with itself")));
    }
    let coeff = &Scalar::frac(sign, 2) * &Scalar::alpha_pow(-1);
    EndoElement::identity(m).scale(&half()).add(&EndoElement::dots(m, pair_mask(b, c), coeff))
}

/// `½(id + a^-1 x_b x_c)`.
pub fn join(m: &PlanarMatching, b: usize, c: usize) -> Result<EndoElement> {
    join_like(m, b, c, 1)
}

/// `½(id - a^-1 x_b x_c)`.
pub fn disjoin(m: &PlanarMatching, b: usize, c: usize) -> Result<EndoElement> {
    join_like(m, b, c, -1)
}

/// Split of the arcs into blocks `B` and `C`, with the arc at point 0 in `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcPartition {
    matching: PlanarMatching,
    in_b: Vec<bool>,
}

impl ArcPartition {
    pub fn new(matching: PlanarMatching, in_b: Vec<bool>) -> Result<Self> {
        if in_b.len() != matching.n() {
            return Err(Error::SizeMismatch(in_b.len(), matching.n()));
        }
        if matching.n() > 0 && !in_b[0] {
            return Err(Error::ArcMismatch("the arc at point 1 must lie in B".into()));
        }
        Ok(ArcPartition { matching, in_b })
    }

    /// All partitions into at most two blocks.
    pub fn all(m: &PlanarMatching) -> Vec<ArcPartition> {
        let n = m.n();
        if n == 0 {
            return vec![ArcPartition { matching: m.clone(), in_b: Vec::new() }];
        }
        (0..1u64 << (n - 1))
            .map(|bits| {
                let mut in_b = vec![true];
                in_b.extend((1..n).map(|i| (bits >> (i - 1)) & 1 == 0));
                ArcPartition { matching: m.clone(), in_b }
            })
            .collect()
    }

    pub fn matching(&self) -> &PlanarMatching {
        &self.matching
    }

    pub fn in_b(&self, arc: usize) -> bool {
        self.in_b[arc]
    }

    pub fn block_b(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&i| self.in_b[i]).collect()
    }

    pub fn block_c(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&i| !self.in_b[i]).collect()
    }

    fn mask_b(&self) -> u64 {
        self.block_b().iter().fold(0, |m, &i| m | (1 << i))
    }
}

/// `e_P = 2^{1-n} Σ_{|D| even} (-1)^{|D∩B|} a^{-|D|/2} x_D`.
pub fn partition_idempotent(p: &ArcPartition) -> EndoElement {
    let m = &p.matching;
    let n = m.n();
    let mut e = EndoElement::zero(m);
    if n == 0 {
        return EndoElement::identity(m);
    }
    let norm = Scalar::frac(1, 1i64 << (n - 1));
    let b = p.mask_b();
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as i64;
        if size % 2 != 0 {
            continue;
        }
        let sign = if (mask & b).count_ones() % 2 == 0 { 1 } else { -1 };
        let c = &(&norm * &Scalar::int(sign)) * &Scalar::alpha_pow(-size / 2);
        e.add_term(mask, c);
    }
    e
}

/// Join of all arcs of a block, as joins from its first arc.
pub fn join_block(m: &PlanarMatching, block: &[usize]) -> Result<EndoElement> {
    let mut acc = EndoElement::identity(m);
    if let Some((&first, rest)) = block.split_first() {
        for &b in rest {
            acc = acc.mul(&join(m, first, b)?)?;
        }
    }
    Ok(acc)
}

/// `j(B) j(C) d(b, c)` for the first arcs of both blocks.
pub fn product_form(p: &ArcPartition) -> Result<EndoElement> {
    let m = &p.matching;
    let (b, c) = (p.block_b(), p.block_c());
    let mut acc = join_block(m, &b)?.mul(&join_block(m, &c)?)?;
    if let (Some(&b0), Some(&c0)) = (b.first(), c.first()) {
        acc = acc.mul(&disjoin(m, b0, c0)?)?;
    }
    Ok(acc)
}

/// `x_b · e`.
pub fn dot(e: &EndoElement, arc: usize) -> Result<EndoElement> {
    e.matching.check_arc(arc)?;
    EndoElement::dots(&e.matching, 1 << arc, Scalar::one()).mul(e)
}

/// Orthogonality, completeness, idempotency, dot relations and rank-two endomorphism check.
pub fn idempotent_battery(m: &PlanarMatching) -> Report {
    let mut r = Report::new();
    let parts = ArcPartition::all(m);
    let es: Vec<EndoElement> = parts.iter().map(partition_idempotent).collect();
    let label = m.to_string();

    let mut total = EndoElement::zero(m);
    for e in &es {
        total = total.add(e).expect("same matching");
    }
    r.check(format!("completeness {label}"), total == EndoElement::identity(m));

    let mut orth = true;
    let mut idem = true;
    for (i, e) in es.iter().enumerate() {
        idem &= e.mul(e).expect("same") == *e;
        for (j, f) in es.iter().enumerate() {
            if i != j {
                orth &= e.mul(f).expect("same").is_zero();
            }
        }
    }
    r.check(format!("orthogonality {label}"), orth);
    r.check(format!("idempotency {label}"), idem);

    let mut dots_ok = true;
    let mut product_ok = true;
    let mut rank_ok = true;
    let n = m.n();
    for (p, e) in parts.iter().zip(&es) {
        product_ok &= product_form(p).map(|f| f == *e).unwrap_or(false);
        let d0 = dot(e, 0).expect("arc");
        for b in 0..n {
            let db = dot(e, b).expect("arc");
            let expected = if p.in_b(b) { d0.clone() } else { d0.scale(&Scalar::int(-1)) };
            dots_ok &= db == expected;
            dots_ok &= dot(&db, b).expect("arc") == e.scale(&Scalar::alpha());
        }
        let mut span = EchelonBasis::new();
        for mask in 0..(1u64 << n) {
            let v = EndoElement::dots(m, mask, Scalar::one()).mul(e).expect("same");
            span.insert(v.terms.clone());
        }
        let mut basis = EchelonBasis::new();
        let independent = basis.insert(e.terms.clone()) && basis.insert(d0.terms.clone());
        rank_ok &= span.rank() == 2 && independent;
    }
    r.check(format!("dot relations {label}"), dots_ok);
    r.check(format!("product form {label}"), product_ok);
    r.check(format!("endomorphisms of rank two {label}"), rank_ok);

    let mut triple = true;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                let t = disjoin(m, a, b)
                    .and_then(|x| x.mul(&disjoin(m, b, c)?))
                    .and_then(|x| x.mul(&disjoin(m, c, a)?))
                    .expect("arcs");
                triple &= t.is_zero();
            }
        }
    }
    r.check(format!("triple disjoin vanishes {label}"), triple);
    r
}
