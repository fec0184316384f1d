use super::diagram::{Diagram, Point};
use super::sum::DiagramSum;
use crate::error::{Error, Result};
use crate::frobenius::Algebra;
use crate::scalar::Scalar;
use std::sync::OnceLock;

/// `m -> m` diagram with bottom and top positions `i, i+1` (0-based) joined.
pub fn cupcap_at(m: usize, i: usize) -> Result<Diagram> {
    if m < 2 || i + 1 >= m {
        return Err(Error::IndexOutOfRange { index: i + 1, max: m.saturating_sub(1) });
    }
    let mut arcs = vec![(Point::Bottom(i), Point::Bottom(i + 1), 0), (Point::Top(i), Point::Top(i + 1), 0)];
    for j in (0..m).filter(|&j| j != i && j != i + 1) {
        arcs.push((Point::Bottom(j), Point::Top(j), 0));
    }
    Diagram::from_points(m, m, &arcs)
}

/// `P_i = id - cup∘cap` at strands `i, i+1`, with `i` counted from 1.
pub fn crossing(algebra: &Algebra, i: usize, m: usize) -> Result<DiagramSum> {
    if i == 0 || i >= m {
        return Err(Error::IndexOutOfRange { index: i, max: m.saturating_sub(1) });
    }
    let id = DiagramSum::identity(algebra, m);
    let cc = DiagramSum::from_diagram(algebra, cupcap_at(m, i - 1)?)?;
    id.sub(&cc)
}

/// `P_σ` as a product of crossings along a reduced word; `sigma` is a permutation of `0..m`.
pub fn permutation_morphism(algebra: &Algebra, sigma: &[usize]) -> Result<DiagramSum> {
    let m = sigma.len();
    let mut seen = vec![false; m];
    for &s in sigma {
        if s >= m || seen[s] {
            return Err(Error::InvalidDiagram(format!("not a permutation: {sigma:?}")));
        }
        seen[s] = true;
    }
    let mut w = sigma.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..m.saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else { break };
        w.swap(i, i + 1);
        word.push(i + 1);
    }
    let mut acc = DiagramSum::identity(algebra, m);
    for &i in word.iter().rev() {
        acc = crossing(algebra, i, m)?.compose(&acc)?;
    }
    Ok(acc)
}

const MAX_CACHED: usize = 32;

/// Write-once cache of symmetrizers over one algebra.
pub struct SymmetrizerCache {
    algebra: Algebra,
    slots: Vec<OnceLock<DiagramSum>>,
}

impl SymmetrizerCache {
    pub fn new(algebra: &Algebra) -> Self {
        SymmetrizerCache { algebra: algebra.clone(), slots: (0..=MAX_CACHED).map(|_| OnceLock::new()).collect() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn get(&self, m: usize) -> Result<&DiagramSum> {
        if m == 0 || m > MAX_CACHED {
            return Err(Error::IndexOutOfRange { index: m, max: MAX_CACHED });
        }
        if let Some(s) = self.slots[m].get() {
            return Ok(s);
        }
        let value = if m == 1 {
            DiagramSum::identity(&self.algebra, 1)
        } else {
            let prev = self.get(m - 1)?;
            let stacked = prev.tensor(&DiagramSum::identity(&self.algebra, 1))?;
            let crossed = stacked.compose(&crossing(&self.algebra, m - 1, m)?)?.compose(&stacked)?;
            let mm = m as i64;
            stacked.scale(&Scalar::frac(1, mm)).add(&crossed.scale(&Scalar::frac(mm - 1, mm)))?
        };
        Ok(self.slots[m].get_or_init(|| value))
    }
}

/// Symmetrizer on `m` strands via a fresh cache.
pub fn symmetrizer(algebra: &Algebra, m: usize) -> Result<DiagramSum> {
    SymmetrizerCache::new(algebra).get(m).cloned()
}
