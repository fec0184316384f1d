use super::element::monomial_name;
use super::{ensure_same, Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse element of `A^{⊗k}` keyed by exponent vectors.
#[derive(Clone, Debug)]
pub struct TensorElement {
    algebra: Algebra,
    slots: usize,
    terms: BTreeMap<Vec<u8>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        super::same_algebra(&self.algebra, &other.algebra) && self.slots == other.slots && self.terms == other.terms
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TensorTermJson {
    pub exps: Vec<u8>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TensorJson {
    pub slots: usize,
    pub terms: Vec<TensorTermJson>,
}

impl TensorElement {
    pub fn zero(algebra: &Algebra, slots: usize) -> Self {
        TensorElement { algebra: algebra.clone(), slots, terms: BTreeMap::new() }
    }

    pub fn scalar(algebra: &Algebra, c: Scalar) -> Self {
        let mut t = Self::zero(algebra, 0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn from_element(a: &AlgebraElement) -> Self {
        let mut t = Self::zero(a.algebra(), 1);
        for (k, c) in a.terms() {
            t.add_term(vec![k as u8], c.clone());
        }
        t
    }

    pub fn monomial(algebra: &Algebra, exps: Vec<u8>, c: Scalar) -> Self {
        let mut t = Self::zero(algebra, exps.len());
        t.add_term(exps, c);
        t
    }

    /// Ordered tensor product of single-slot elements.
    pub fn product_of(algebra: &Algebra, factors: &[AlgebraElement]) -> Result<Self> {
        let mut t = Self::scalar(algebra, Scalar::one());
        for f in factors {
            ensure_same(algebra, f.algebra())?;
            t = t.tensor(&Self::from_element(f))?;
        }
        Ok(t)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u8>, Scalar> {
        self.terms
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

    pub fn coeff(&self, exps: &[u8]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Scalar value of a zero-slot tensor.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.slots == 0 {
            Some(self.coeff(&[]))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exps: Vec<u8>, c: Scalar) {
        debug_assert_eq!(exps.len(), self.slots);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    fn check(&self, o: &Self) -> Result<()> {
        ensure_same(&self.algebra, &o.algebra)?;
        if self.slots != o.slots {
            return Err(Error::SlotMismatch { expected: self.slots, found: o.slots });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.algebra, self.slots);
        }
        TensorElement {
            algebra: self.algebra.clone(),
            slots: self.slots,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn tensor(&self, o: &Self) -> Result<Self> {
        ensure_same(&self.algebra, &o.algebra)?;
        let mut out = Self::zero(&self.algebra, self.slots + o.slots);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Slot `i` of the input becomes slot `perm[i]` of the output.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.slots {
            return Err(Error::SlotMismatch { expected: self.slots, found: perm.len() });
        }
        let mut out = Self::zero(&self.algebra, self.slots);
        for (k, c) in &self.terms {
            let mut nk = vec![0u8; self.slots];
            for (i, &p) in perm.iter().enumerate() {
                nk[p] = k[i];
            }
            out.add_term(nk, c.clone());
        }
        Ok(out)
    }

    /// Applies `Δ` to slot `i`, producing slots `i, i+1`.
    pub fn comul_slot(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.algebra, self.slots + 1);
        for (k, c) in &self.terms {
            for (a, b, d) in self.algebra.comul_basis(k[i] as usize) {
                let mut nk = Vec::with_capacity(self.slots + 1);
                nk.extend_from_slice(&k[..i]);
                nk.push(*a);
                nk.push(*b);
                nk.extend_from_slice(&k[i + 1..]);
                out.add_term(nk, c * d);
            }
        }
        out
    }

    /// Multiplies slot `j` into slot `i` and removes slot `j`.
    pub fn mul_slots(&self, i: usize, j: usize) -> Self {
        assert!(i != j && i < self.slots && j < self.slots);
        let mut out = Self::zero(&self.algebra, self.slots - 1);
        for (k, c) in &self.terms {
            let prod = self.algebra.mul_basis(k[i] as usize, k[j] as usize);
            for (e, m) in prod.iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let mut nk = k.clone();
                nk[i] = e as u8;
                nk.remove(j);
                out.add_term(nk, c * m);
            }
        }
        out
    }

    /// Contracts slots `i` and `j` with `u ⊗ v ↦ ε(label·u·v)`.
    pub fn contract(&self, i: usize, j: usize, label: &AlgebraElement) -> Result<Self> {
        ensure_same(&self.algebra, label.algebra())?;
        if i == j || i >= self.slots || j >= self.slots {
            return Err(Error::IndexOutOfRange { index: i.max(j) + 1, max: self.slots });
        }
        let n = self.algebra.rank();
        let mut table = vec![vec![Scalar::zero(); n]; n];
        for (p, row) in table.iter_mut().enumerate() {
            for (q, v) in row.iter_mut().enumerate() {
                let uv = self.algebra.mul_basis(p, q);
                *v = self.algebra.counit_coords(&self.algebra.mul_coords(label.coords(), uv));
            }
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let mut out = Self::zero(&self.algebra, self.slots - 2);
        for (k, c) in &self.terms {
            let v = &table[k[i] as usize][k[j] as usize];
            if v.is_zero() {
                continue;
            }
            let mut nk = k.clone();
            nk.remove(hi);
            nk.remove(lo);
            out.add_term(nk, c * v);
        }
        Ok(out)
    }

    /// Applies `ε` to every slot.
    pub fn counit_all(&self) -> Scalar {
        self.terms
            .iter()
            .map(|(k, c)| k.iter().fold(c.clone(), |acc, &e| &acc * self.algebra.counit_basis(e as usize)))
            .sum()
    }

    /// Slotwise product in the algebra `A^{⊗k}`.
    pub fn slotwise_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(&self.algebra, self.slots);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut partial: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), c1 * c2)];
                for s in 0..self.slots {
                    let prod = self.algebra.mul_basis(k1[s] as usize, k2[s] as usize);
                    let mut next = Vec::new();
                    for (ex, cx) in &partial {
                        for (e, m) in prod.iter().enumerate() {
                            if !m.is_zero() {
                                let mut nk = ex.clone();
                                nk.push(e as u8);
                                next.push((nk, cx * m));
                            }
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    /// Folds all slots with `m`.
    pub fn multi_mul(&self) -> AlgebraElement {
        let alg = &self.algebra;
        let mut acc = AlgebraElement::zero(alg);
        for (k, c) in &self.terms {
            let mut v = alg.unit_coords();
            for &e in k {
                v = alg.mul_coords(&v, &alg.basis_coords(e as usize));
            }
            let term = AlgebraElement::new(alg, v).expect("rank").scale(c);
            acc = acc.add(&term).expect("same algebra");
        }
        acc
    }

    /// Terms grouped by the total exponent `|z|`.
    pub fn strata(&self) -> BTreeMap<usize, Vec<(&Vec<u8>, &Scalar)>> {
        let mut out: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.iter().map(|&e| e as usize).sum()).or_default().push((k, c));
        }
        out
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            slots: self.slots,
            terms: self.terms.iter().map(|(k, c)| TensorTermJson { exps: k.clone(), coeff: c.to_string() }).collect(),
        }
    }

    pub fn from_json(algebra: &Algebra, j: &TensorJson) -> Result<Self> {
        let mut t = Self::zero(algebra, j.slots);
        for term in &j.terms {
            if term.exps.len() != j.slots {
                return Err(Error::SlotMismatch { expected: j.slots, found: term.exps.len() });
            }
            if term.exps.iter().any(|&e| e as usize >= algebra.rank()) {
                return Err(Error::Parse(format!("exponent out of range in {:?}", term.exps)));
            }
            t.add_term(term.exps.clone(), term.coeff.parse()?);
        }
        Ok(t)
    }
}

fn word(k: &[u8]) -> String {
    if k.is_empty() {
        return "∅".to_string();
    }
    k.iter().map(|&e| monomial_name(e as usize)).collect::<Vec<_>>().join("⊗")
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_monomial();
            let shown = if negative && idx > 0 { -c } else { c.clone() };
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if shown.is_compound() {
                write!(f, "({shown}) * {}", word(k))?;
            } else {
                write!(f, "{shown} * {}", word(k))?;
            }
        }
        Ok(())
    }
}
