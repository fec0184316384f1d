//! Commutative Frobenius algebras on the monomial basis `1, x, ..., x^(N-1)`.

mod element;
mod tensor;

pub use element::AlgebraElement;
pub use tensor::{TensorElement, TensorJson, TensorTermJson};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Scalar, Subring};
use num_traits::{One, Zero};
use std::sync::{Arc, OnceLock};

pub type Algebra = Arc<FrobeniusPresentation>;

/// Comultiplication of one basis vector: `(i, j, c)` stands for `c * x^i ⊗ x^j`.
pub type ComulTerms = Vec<(u8, u8, Scalar)>;

#[derive(Debug, PartialEq)]
pub struct FrobeniusPresentation {
    name: String,
    rank: usize,
    mul_table: Vec<Vec<Vec<Scalar>>>,
    counit: Vec<Scalar>,
    comul_table: Vec<ComulTerms>,
    unit_index: usize,
    circle: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Builtin {
    Trivial(Scalar),
    BarNatan,
    Alpha,
    Beta(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Left,
    Right,
}

static ALPHA: OnceLock<Algebra> = OnceLock::new();
static BAR_NATAN: OnceLock<Algebra> = OnceLock::new();

/// Shared instance of `k[x]/(x^2 - a)`.
pub fn alpha() -> Algebra {
    ALPHA.get_or_init(|| monogenic("alpha", 2, Scalar::alpha()).expect("alpha presentation")).clone()
}

/// Shared instance of `k[x]/(x^2)`.
pub fn bar_natan() -> Algebra {
    BAR_NATAN.get_or_init(|| monogenic("bar_natan", 2, Scalar::zero()).expect("bar-natan presentation")).clone()
}

pub fn builtin_algebra(which: Builtin) -> Result<Algebra> {
    match which {
        Builtin::Alpha => Ok(alpha()),
        Builtin::BarNatan => Ok(bar_natan()),
        Builtin::Beta(n) => {
            if n < 2 {
                return Err(Error::InvalidPresentation(format!("beta requires N >= 2, got {n}")));
            }
            monogenic(&format!("beta:{n}"), n, Scalar::alpha())
        }
        Builtin::Trivial(u) => trivial(u),
    }
}

/// Resolves `alpha`, `bar_natan`, `beta:N` and `trivial:u`.
pub fn algebra_by_name(name: &str) -> Result<Algebra> {
    let name = name.trim();
    let which = match name.split_once(':') {
        None => match name {
            "alpha" => Builtin::Alpha,
            "bar_natan" | "bn" => Builtin::BarNatan,
            _ => return Err(Error::Parse(format!("unknown algebra {name:?}"))),
        },
        Some(("beta", n)) => Builtin::Beta(n.trim().parse().map_err(|_| Error::Parse(format!("beta rank {n:?}")))?),
        Some(("trivial", u)) => Builtin::Trivial(u.parse()?),
        Some(_) => return Err(Error::Parse(format!("unknown algebra {name:?}"))),
    };
    builtin_algebra(which)
}

/// `k` with counit `1 -> u`.
pub fn trivial(u: Scalar) -> Result<Algebra> {
    if !u.is_unit(Subring::Laurent) {
        return Err(Error::NonUnitParameter(u.to_string()));
    }
    let uinv = u.inv()?;
    FrobeniusPresentation::new(
        &format!("trivial:{u}"),
        vec![vec![vec![Scalar::one()]]],
        vec![u],
        vec![vec![(0, 0, uinv)]],
        0,
    )
}

/// `k[x]/(x^n - c)` with `ε(x^k) = δ(k, n-1)`.
pub fn monogenic(name: &str, n: usize, c: Scalar) -> Result<Algebra> {
    let basis = |k: usize, coeff: Scalar| {
        let mut v = vec![Scalar::zero(); n];
        v[k] = coeff;
        v
    };
    let mul_table: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j < n { basis(i + j, Scalar::one()) } else { basis(i + j - n, c.clone()) })
                .collect()
        })
        .collect();
    let counit: Vec<Scalar> = (0..n).map(|k| if k == n - 1 { Scalar::one() } else { Scalar::zero() }).collect();
    let comul_table: Vec<ComulTerms> = (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..n {
                let left = n - 1 - i + k;
                let (e, coeff) = if left < n { (left, Scalar::one()) } else { (left - n, c.clone()) };
                if !coeff.is_zero() {
                    terms.push((e as u8, i as u8, coeff));
                }
            }
            terms.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
            terms
        })
        .collect();
    FrobeniusPresentation::new(name, mul_table, counit, comul_table, 0)
}

impl FrobeniusPresentation {
    /// Builds a presentation and checks every structural axiom on basis vectors.
    pub fn new(
        name: &str,
        mul_table: Vec<Vec<Vec<Scalar>>>,
        counit: Vec<Scalar>,
        comul_table: Vec<ComulTerms>,
        unit_index: usize,
    ) -> Result<Algebra> {
        let rank = counit.len();
        if rank == 0 || rank > 64 {
            return Err(Error::InvalidPresentation(format!("rank {rank} out of range")));
        }
        let shape_ok = mul_table.len() == rank
            && mul_table.iter().all(|r| r.len() == rank && r.iter().all(|v| v.len() == rank))
            && comul_table.len() == rank
            && comul_table.iter().flatten().all(|(i, j, _)| (*i as usize) < rank && (*j as usize) < rank)
            && unit_index < rank;
        if !shape_ok {
            return Err(Error::InvalidPresentation("table shapes do not match the rank".into()));
        }
        let mut p = FrobeniusPresentation {
            name: name.to_string(),
            rank,
            mul_table,
            counit,
            comul_table,
            unit_index,
            circle: Vec::new(),
        };
        let failed: Vec<String> = p.axiom_report().into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        if !failed.is_empty() {
            return Err(Error::InvalidPresentation(failed.join(", ")));
        }
        let cached = if rank == 1 { 1 } else { 4 * rank };
        p.circle = (0..cached).map(|s| p.circle_value_direct(s)).collect();
        Ok(Arc::new(p))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mul_table[i][j]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn comul_basis(&self, i: usize) -> &ComulTerms {
        &self.comul_table[i]
    }

    pub fn unit_coords(&self) -> Vec<Scalar> {
        self.basis_coords(self.unit_index)
    }

    pub fn basis_coords(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.rank];
        v[i] = Scalar::one();
        v
    }

    pub fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.rank];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, m) in self.mul_table[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn counit_coords(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(&self.counit).filter(|(x, e)| !x.is_zero() && !e.is_zero()).map(|(x, e)| x * e).sum()
    }

    /// Coordinates of `x^s`; for rank one only `s = 0` exists.
    pub fn power_coords(&self, s: usize) -> Vec<Scalar> {
        if s < self.rank {
            return self.basis_coords(s);
        }
        assert!(self.rank > 1, "x is not a basis vector of a rank-one algebra");
        let top = self.rank - 1;
        self.mul_coords(&self.power_coords(s - top), &self.basis_coords(top))
    }

    /// Value of a closed loop labelled `x^s`, computed as `ε(m(Δ(x^s)))`.
    pub fn circle_value(&self, s: usize) -> Scalar {
        match self.circle.get(s) {
            Some(v) => v.clone(),
            None => self.circle_value_direct(s),
        }
    }

    fn circle_value_direct(&self, s: usize) -> Scalar {
        let a = self.power_coords(s);
        let mut acc = Scalar::zero();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, d) in &self.comul_table[k] {
                let prod = &self.mul_table[*i as usize][*j as usize];
                acc += &(&(c * d) * &self.counit_coords(prod));
            }
        }
        acc
    }

    fn comul_coords(&self, a: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.rank]; self.rank];
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, d) in &self.comul_table[k] {
                out[*i as usize][*j as usize] += &(c * d);
            }
        }
        out
    }

    /// Named checks of every presentation axiom.
    pub fn axiom_report(&self) -> Vec<(String, bool)> {
        let n = self.rank;
        let mut report = Vec::new();
        let unit = self.unit_coords();
        let mut ok = true;
        for i in 0..n {
            ok &= self.mul_coords(&unit, &self.basis_coords(i)) == self.basis_coords(i);
        }
        report.push(("unit".to_string(), ok));

        let mut mono = self.unit_index == 0;
        for i in 0..n {
            for j in 0..n - i {
                mono &= self.mul_table[i][j] == self.basis_coords(i + j);
            }
        }
        report.push(("monomial basis".to_string(), mono));

        let mut assoc = true;
        let mut comm = true;
        for i in 0..n {
            for j in 0..n {
                comm &= self.mul_table[i][j] == self.mul_table[j][i];
                for k in 0..n {
                    let l = self.mul_coords(&self.mul_table[i][j], &self.basis_coords(k));
                    let r = self.mul_coords(&self.basis_coords(i), &self.mul_table[j][k]);
                    assoc &= l == r;
                }
            }
        }
        report.push(("associativity".to_string(), assoc));
        report.push(("commutativity".to_string(), comm));

        let mut coassoc = true;
        let mut cocomm = true;
        let mut counit_law = true;
        for k in 0..n {
            let d = self.comul_coords(&self.basis_coords(k));
            for i in 0..n {
                for j in 0..n {
                    cocomm &= d[i][j] == d[j][i];
                }
            }
            let mut left = std::collections::BTreeMap::new();
            let mut right = std::collections::BTreeMap::new();
            for (i, j, c) in &self.comul_table[k] {
                for (a, b, e) in &self.comul_table[*i as usize] {
                    *left.entry((*a, *b, *j)).or_insert_with(Scalar::zero) += &(c * e);
                }
                for (a, b, e) in &self.comul_table[*j as usize] {
                    *right.entry((*i, *a, *b)).or_insert_with(Scalar::zero) += &(c * e);
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            coassoc &= left == right;
            let mut l = vec![Scalar::zero(); n];
            let mut r = vec![Scalar::zero(); n];
            for (i, j, c) in &self.comul_table[k] {
                l[*i as usize] += &(c * &self.counit[*j as usize]);
                r[*j as usize] += &(c * &self.counit[*i as usize]);
            }
            counit_law &= l == self.basis_coords(k) && r == self.basis_coords(k);
        }
        report.push(("coassociativity".to_string(), coassoc));
        report.push(("cocommutativity".to_string(), cocomm));
        report.push(("counit".to_string(), counit_law));

        let mut frob = true;
        for i in 0..n {
            for j in 0..n {
                let mid = self.comul_coords(&self.mul_table[i][j]);
                let dj = self.comul_coords(&self.basis_coords(j));
                let di = self.comul_coords(&self.basis_coords(i));
                let xi = self.basis_coords(i);
                let xj = self.basis_coords(j);
                for a in 0..n {
                    for b in 0..n {
                        let mut l = Scalar::zero();
                        let mut r = Scalar::zero();
                        for c in 0..n {
                            if !dj[c][b].is_zero() {
                                l += &(&dj[c][b] * &self.mul_coords(&xi, &self.basis_coords(c))[a]);
                            }
                            if !di[a][c].is_zero() {
                                r += &(&di[a][c] * &self.mul_coords(&self.basis_coords(c), &xj)[b]);
                            }
                        }
                        frob &= l == mid[a][b] && r == mid[a][b];
                    }
                }
            }
        }
        report.push(("frobenius relation".to_string(), frob));
        report
    }

    /// Gram matrix of `ε∘m` on the monomial basis.
    pub fn pairing_matrix(&self) -> linalg::Matrix {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.counit_coords(&self.mul_table[i][j])).collect())
            .collect()
    }
}

pub fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn ensure_same(a: &Algebra, b: &Algebra) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `H = m(Δ(1))`.
pub fn handle_element(a: &Algebra) -> AlgebraElement {
    AlgebraElement::one(a).comul().multi_mul()
}

/// Whether `H` is invertible with Laurent-unit determinant, along with `H^-1`.
pub fn is_strongly_separable(a: &Algebra) -> (bool, Option<AlgebraElement>) {
    let h = handle_element(a);
    let n = a.rank();
    let columns: Vec<Vec<Scalar>> = (0..n).map(|j| a.mul_coords(h.coords(), &a.basis_coords(j))).collect();
    let m: linalg::Matrix = (0..n).map(|i| (0..n).map(|j| columns[j][i].clone()).collect()).collect();
    let det = linalg::determinant(&m);
    if !det.is_unit(Subring::Laurent) {
        return (false, None);
    }
    let inv = linalg::inverse(&m).expect("unit determinant");
    let unit = a.unit_coords();
    let coords: Vec<Scalar> = (0..n)
        .map(|i| (0..n).filter(|&j| !unit[j].is_zero()).map(|j| &inv[i][j] * &unit[j]).sum())
        .collect();
    (true, Some(AlgebraElement::new(a, coords).expect("rank matches")))
}

/// `β(a, b) = ε(ab)`.
pub fn frobenius_pairing(a: &AlgebraElement, b: &AlgebraElement) -> Result<Scalar> {
    Ok(a.mul(b)?.counit())
}

/// Monomial basis and its `β`-dual basis.
pub fn dual_bases(a: &Algebra) -> Result<(Vec<AlgebraElement>, Vec<AlgebraElement>)> {
    let g = a.pairing_matrix();
    let inv = linalg::inverse(&g).map_err(|_| Error::InvalidPresentation("degenerate pairing".into()))?;
    let basis: Vec<AlgebraElement> = (0..a.rank()).map(|i| AlgebraElement::basis(a, i)).collect();
    let dual: Vec<AlgebraElement> = (0..a.rank())
        .map(|j| AlgebraElement::new(a, (0..a.rank()).map(|i| inv[i][j].clone()).collect()).expect("rank"))
        .collect();
    Ok((basis, dual))
}

/// `Δ(H^-1)`.
pub fn separability_idempotent(a: &Algebra) -> Result<TensorElement> {
    match is_strongly_separable(a) {
        (true, Some(hinv)) => Ok(hinv.comul()),
        _ => Err(Error::NotSeparable),
    }
}

/// `k = 0` gives `ε(a)`, `k = 1` gives `a`, larger `k` iterates `Δ`.
pub fn iterated_comul(a: &AlgebraElement, k: usize) -> TensorElement {
    iterated_comul_with(a, k, Bracketing::Right)
}

pub fn iterated_comul_with(a: &AlgebraElement, k: usize, bracket: Bracketing) -> TensorElement {
    let alg = a.algebra();
    if k == 0 {
        return TensorElement::scalar(alg, a.counit());
    }
    let mut t = TensorElement::from_element(a);
    for _ in 1..k {
        let slot = match bracket {
            Bracketing::Right => t.slots() - 1,
            Bracketing::Left => 0,
        };
        t = t.comul_slot(slot);
    }
    t
}

/// Folds every slot with `m`; zero slots give the unit times the scalar.
pub fn multi_mul(t: &TensorElement) -> AlgebraElement {
    t.multi_mul()
}
