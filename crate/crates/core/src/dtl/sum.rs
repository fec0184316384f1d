use super::diagram::Diagram;
use crate::error::{Error, Result};
use crate::frobenius::{ensure_same, is_strongly_separable, Algebra, AlgebraElement, TensorElement};
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Formal linear combination of diagrams with a common boundary.
#[derive(Clone, Debug)]
pub struct DiagramSum {
    algebra: Algebra,
    bottom: usize,
    top: usize,
    terms: BTreeMap<Diagram, Scalar>,
}

impl PartialEq for DiagramSum {
    fn eq(&self, o: &Self) -> bool {
        crate::frobenius::same_algebra(&self.algebra, &o.algebra)
            && self.bottom == o.bottom
            && self.top == o.top
            && self.terms == o.terms
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DiagramTermJson {
    pub diagram: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DiagramSumJson {
    pub bottom: usize,
    pub top: usize,
    pub terms: Vec<DiagramTermJson>,
}

/// How much an embedding comparison proves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityKind {
    /// The embedding is injective, so equal images mean equal skeins.
    Skein,
    /// Only the images agree; the algebra is not strongly separable.
    ImageOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinEquality {
    pub equal: bool,
    pub kind: EqualityKind,
}

impl DiagramSum {
    pub fn zero(algebra: &Algebra, bottom: usize, top: usize) -> Self {
        DiagramSum { algebra: algebra.clone(), bottom, top, terms: BTreeMap::new() }
    }

    pub fn from_diagram(algebra: &Algebra, d: Diagram) -> Result<Self> {
        Self::from_term(algebra, d, Scalar::one())
    }

    pub fn from_term(algebra: &Algebra, d: Diagram, c: Scalar) -> Result<Self> {
        if d.decorations().iter().any(|&e| e as usize >= algebra.rank()) {
            return Err(Error::InvalidDiagram(format!("decoration out of range for rank {}", algebra.rank())));
        }
        let mut s = Self::zero(algebra, d.bottom(), d.top());
        s.add_term(d, c);
        Ok(s)
    }

    /// Expands arbitrary algebra labels multilinearly into basis decorations.
    pub fn from_labeled(algebra: &Algebra, bottom: usize, top: usize, arcs: &[((usize, usize), AlgebraElement)]) -> Result<Self> {
        let mut partial: Vec<(Vec<((usize, usize), u8)>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for (pair, label) in arcs {
            ensure_same(algebra, label.algebra())?;
            let mut next = Vec::new();
            for (acc, c) in &partial {
                for (k, lc) in label.terms() {
                    let mut a = acc.clone();
                    a.push((*pair, k as u8));
                    next.push((a, c * lc));
                }
            }
            partial = next;
        }
        let mut s = Self::zero(algebra, bottom, top);
        for (arcs, c) in partial {
            s.add_term(Diagram::new(bottom, top, arcs)?, c);
        }
        Ok(s)
    }

    pub fn identity(algebra: &Algebra, m: usize) -> Self {
        Self::from_diagram(algebra, Diagram::identity(m)).expect("identity")
    }

    pub fn empty(algebra: &Algebra) -> Self {
        Self::from_diagram(algebra, Diagram::empty()).expect("empty")
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, d: Diagram, c: Scalar) {
        debug_assert!(d.bottom() == self.bottom && d.top() == self.top);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        ensure_same(&self.algebra, &o.algebra)?;
        if self.bottom != o.bottom {
            return Err(Error::BoundaryMismatch { expected: self.bottom, found: o.bottom });
        }
        if self.top != o.top {
            return Err(Error::BoundaryMismatch { expected: self.top, found: o.top });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (d, c) in &o.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.algebra, self.bottom, self.top);
        }
        DiagramSum {
            algebra: self.algebra.clone(),
            bottom: self.bottom,
            top: self.top,
            terms: self.terms.iter().map(|(d, v)| (d.clone(), v * c)).collect(),
        }
    }

    fn collect(algebra: &Algebra, bottom: usize, top: usize, acc: HashMap<Diagram, Scalar>) -> Self {
        DiagramSum { algebra: algebra.clone(), bottom, top, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `g ∘ f`, with `self = g` stacked on top of `f`.
    pub fn compose(&self, f: &DiagramSum) -> Result<Self> {
        ensure_same(&self.algebra, &f.algebra)?;
        if self.bottom != f.top {
            return Err(Error::BoundaryMismatch { expected: f.top, found: self.bottom });
        }
        let mut acc: HashMap<Diagram, Scalar> = HashMap::new();
        let gs: Vec<_> = self.terms.iter().map(|(d, c)| (d, d.partner(), d.deco_at_points(), c)).collect();
        let fs: Vec<_> = f.terms.iter().map(|(d, c)| (d, d.partner(), d.deco_at_points(), c)).collect();
        let mut scratch = Scratch::default();
        for (fd, fp, fdec, fc) in &fs {
            for (gd, gp, gdec, gc) in &gs {
                let coeff = *fc * *gc;
                glue(&self.algebra, (fd, fp, fdec), (gd, gp, gdec), &mut scratch, |d, c| {
                    let e = acc.entry(d).or_insert_with(Scalar::zero);
                    *e += &(&coeff * &c);
                });
            }
        }
        Ok(Self::collect(&self.algebra, f.bottom, self.top, acc))
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, o: &DiagramSum) -> Result<Self> {
        ensure_same(&self.algebra, &o.algebra)?;
        let (m1, n1, m2, n2) = (self.bottom, self.top, o.bottom, o.top);
        let (mm, nn) = (m1 + m2, n1 + n2);
        let total = mm + nn;
        let map_f = |i: usize| if i < m1 { i } else { total - 1 - (m1 + n1 - 1 - i) };
        let map_g = |i: usize| if i < m2 { m1 + i } else { total - 1 - n1 - (m2 + n2 - 1 - i) };
        let mut out = Self::zero(&self.algebra, mm, nn);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                let mut arcs: Vec<((u8, u8), u8)> = Vec::with_capacity(total / 2);
                for ((a, b), e) in d1.arcs() {
                    arcs.push(((map_f(a) as u8, map_f(b) as u8), e));
                }
                for ((a, b), e) in d2.arcs() {
                    arcs.push(((map_g(a) as u8, map_g(b) as u8), e));
                }
                out.add_term(Diagram::from_parts_unchecked(mm, nn, arcs), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Top/bottom reflection.
    pub fn mirror(&self) -> Self {
        DiagramSum {
            algebra: self.algebra.clone(),
            bottom: self.top,
            top: self.bottom,
            terms: self.terms.iter().map(|(d, c)| (d.mirror(), c.clone())).collect(),
        }
    }

    /// Image in `A^{⊗(m+n)}`: arc `(i, j)` decorated `a` contributes `Δ(a)` at slots `i, j`.
    pub fn embed_tensor(&self) -> TensorElement {
        let k = self.bottom + self.top;
        let mut out = TensorElement::zero(&self.algebra, k);
        for (d, c) in &self.terms {
            let mut partial: Vec<(Vec<u8>, Scalar)> = vec![(vec![0u8; k], c.clone())];
            for ((i, j), e) in d.arcs() {
                let comul = self.algebra.comul_basis(e as usize);
                let mut next = Vec::with_capacity(partial.len() * comul.len());
                for (exps, v) in &partial {
                    for (a, b, w) in comul {
                        let mut ex = exps.clone();
                        ex[i] = *a;
                        ex[j] = *b;
                        next.push((ex, v * w));
                    }
                }
                partial = next;
            }
            for (ex, v) in partial {
                out.add_term(ex, v);
            }
        }
        out
    }

    pub fn skein_equal(&self, o: &DiagramSum) -> Result<SkeinEquality> {
        self.check_same(o)?;
        let kind = if is_strongly_separable(&self.algebra).0 { EqualityKind::Skein } else { EqualityKind::ImageOnly };
        Ok(SkeinEquality { equal: self.embed_tensor() == o.embed_tensor(), kind })
    }

    /// Joins two cyclically adjacent boundary points of a `0 -> 2n` element by an arc labelled `label`.
    pub fn cap_indices(&self, i: usize, j: usize, label: &AlgebraElement) -> Result<Self> {
        ensure_same(&self.algebra, label.algebra())?;
        let k = self.bottom + self.top;
        if self.bottom != 0 {
            return Err(Error::BoundaryMismatch { expected: 0, found: self.bottom });
        }
        if i >= k || j >= k {
            return Err(Error::IndexOutOfRange { index: i.max(j) + 1, max: k });
        }
        let adjacent = (i + 1) % k == j || (j + 1) % k == i;
        if !adjacent || i == j {
            return Err(Error::InvalidDiagram(format!("points {} and {} are not adjacent", i + 1, j + 1)));
        }
        let alg = &self.algebra;
        let keep: Vec<usize> = (0..k).filter(|&p| p != i && p != j).collect();
        let mut newidx = vec![usize::MAX; k];
        for (n, &p) in keep.iter().enumerate() {
            newidx[p] = n;
        }
        let mut acc: HashMap<Diagram, Scalar> = HashMap::new();
        for (d, c) in &self.terms {
            let partner = d.partner();
            let deco = d.deco_at_points();
            let (pi, pj) = (partner[i] as usize, partner[j] as usize);
            for (lk, lc) in label.terms() {
                let base = c * lc;
                if pi == j {
                    let v = alg.circle_value(deco[i] as usize + lk);
                    let mut rest = Vec::new();
                    for ((a, b), e) in d.arcs() {
                        if a != i && a != j {
                            rest.push(((newidx[a] as u8, newidx[b] as u8), e));
                        }
                    }
                    let e = acc.entry(Diagram::from_parts_unchecked(0, k - 2, rest)).or_insert_with(Scalar::zero);
                    *e += &(&base * &v);
                } else {
                    let s = deco[i] as usize + deco[j] as usize + lk;
                    let label_coords = alg.power_coords(s);
                    for (e_new, w) in label_coords.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let mut rest = vec![((newidx[pi] as u8, newidx[pj] as u8), e_new as u8)];
                        for ((a, b), e) in d.arcs() {
                            if a != i && a != j && b != i && b != j {
                                rest.push(((newidx[a] as u8, newidx[b] as u8), e));
                            }
                        }
                        let e = acc.entry(Diagram::from_parts_unchecked(0, k - 2, rest)).or_insert_with(Scalar::zero);
                        *e += &(&base * w);
                    }
                }
            }
        }
        Ok(Self::collect(alg, 0, k - 2, acc))
    }

    /// Coefficient of the empty diagram of a `0 -> 0` element.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.bottom == 0 && self.top == 0 {
            Some(self.coeff(&Diagram::empty()))
        } else {
            None
        }
    }

    pub fn to_json(&self) -> DiagramSumJson {
        DiagramSumJson {
            bottom: self.bottom,
            top: self.top,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| DiagramTermJson { diagram: d.to_string(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(algebra: &Algebra, j: &DiagramSumJson) -> Result<Self> {
        let mut s = Self::zero(algebra, j.bottom, j.top);
        for t in &j.terms {
            let d: Diagram = t.diagram.parse()?;
            if d.bottom() != j.bottom || d.top() != j.top {
                return Err(Error::BoundaryMismatch { expected: j.bottom + j.top, found: d.points() });
            }
            s = s.add(&Self::from_term(algebra, d, t.coeff.parse()?)?)?;
        }
        Ok(s)
    }
}

#[derive(Default)]
struct Scratch {
    visited_mid: Vec<bool>,
    visited_out: Vec<bool>,
    arcs: Vec<((u8, u8), usize)>,
}

/// Glues `g` on top of `f`; calls `emit` for each resulting basis diagram.
fn glue(
    alg: &Algebra,
    f: (&Diagram, &Vec<u8>, &Vec<u8>),
    g: (&Diagram, &Vec<u8>, &Vec<u8>),
    s: &mut Scratch,
    mut emit: impl FnMut(Diagram, Scalar),
) {
    let (fd, pf, df) = f;
    let (gd, pg, dg) = g;
    let (m, n, p) = (fd.bottom(), fd.top(), gd.top());
    let out_total = m + p;
    s.visited_mid.clear();
    s.visited_mid.resize(n, false);
    s.visited_out.clear();
    s.visited_out.resize(out_total, false);
    s.arcs.clear();
    let f_top = |t: usize| m + n - 1 - t;
    let res_of_g = |q: usize| m + q - n;

    // `true` means the walker is on `f`.
    let walk = |mut on_f: bool, mut idx: usize, s: &mut Scratch| -> (usize, usize) {
        let mut sum = 0usize;
        loop {
            if on_f {
                let q = pf[idx] as usize;
                sum += df[idx] as usize;
                if q < m {
                    return (q, sum);
                }
                let t = m + n - 1 - q;
                s.visited_mid[t] = true;
                on_f = false;
                idx = t;
            } else {
                let q = pg[idx] as usize;
                sum += dg[idx] as usize;
                if q >= n {
                    return (res_of_g(q), sum);
                }
                s.visited_mid[q] = true;
                on_f = true;
                idx = f_top(q);
            }
        }
    };

    for start in 0..out_total {
        if s.visited_out[start] {
            continue;
        }
        let (end, sum) = if start < m { walk(true, start, s) } else { walk(false, start - m + n, s) };
        s.visited_out[start] = true;
        s.visited_out[end] = true;
        s.arcs.push(((start as u8, end as u8), sum));
    }

    let mut factor = Scalar::one();
    for t0 in 0..n {
        if s.visited_mid[t0] {
            continue;
        }
        let mut sum = 0usize;
        let mut t = t0;
        loop {
            s.visited_mid[t] = true;
            let fi = f_top(t);
            sum += df[fi] as usize;
            let t2 = m + n - 1 - pf[fi] as usize;
            s.visited_mid[t2] = true;
            sum += dg[t2] as usize;
            t = pg[t2] as usize;
            if t == t0 {
                break;
            }
        }
        factor = &factor * &alg.circle_value(sum);
        if factor.is_zero() {
            return;
        }
    }

    let rank = alg.rank();
    if s.arcs.iter().all(|(_, sum)| *sum < rank) {
        let arcs = s.arcs.iter().map(|(a, sum)| (*a, *sum as u8)).collect();
        emit(Diagram::from_parts_unchecked(m, p, arcs), factor);
        return;
    }
    let mut partial: Vec<(Vec<((u8, u8), u8)>, Scalar)> = vec![(Vec::with_capacity(s.arcs.len()), factor)];
    for (a, sum) in &s.arcs {
        let coords = alg.power_coords(*sum);
        let mut next = Vec::new();
        for (arcs, c) in &partial {
            for (e, w) in coords.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let mut na = arcs.clone();
                na.push((*a, e as u8));
                next.push((na, c * w));
            }
        }
        partial = next;
    }
    for (arcs, c) in partial {
        emit(Diagram::from_parts_unchecked(m, p, arcs), c);
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 @ {}:{} |", self.bottom, self.top);
        }
        for (idx, (d, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} @ {d}")?;
        }
        Ok(())
    }
}
