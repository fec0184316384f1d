use super::{cap_value, class_basis, spanning_gram};
use crate::dtl::{Diagram, DiagramSum, DiagramSumJson, SymmetrizerCache};
use crate::error::{Error, Result};
use crate::frobenius::{alpha, algebra_by_name, same_algebra, Algebra, AlgebraElement, TensorElement, TensorJson, TensorTermJson};
use crate::linalg;
use crate::scalar::{binomial, binomial_i, factorial, int_scalar, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Kirby color in `Sk(H, (2n, 0))`; `dtl` is absent for the closed-form route.
#[derive(Clone, Debug)]
pub struct KirbyColor {
    pub n: usize,
    pub tensor: TensorElement,
    pub dtl: Option<DiagramSum>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumJson {
    pub weight: usize,
    pub terms: Vec<TensorTermJson>,
}

/// JSON form of a Kirby color: tensor terms grouped by `|z|`, plus the diagram form when known.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KirbyColorJson {
    pub algebra: String,
    pub n: usize,
    pub strata: Vec<StratumJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dtl: Option<DiagramSumJson>,
}

impl KirbyColor {
    pub fn to_json(&self) -> KirbyColorJson {
        let strata = self
            .tensor
            .strata()
            .into_iter()
            .map(|(weight, terms)| StratumJson {
                weight,
                terms: terms.into_iter().map(|(k, c)| TensorTermJson { exps: k.clone(), coeff: c.to_string() }).collect(),
            })
            .collect();
        KirbyColorJson {
            algebra: self.tensor.algebra().name().to_string(),
            n: self.n,
            strata,
            dtl: self.dtl.as_ref().map(DiagramSum::to_json),
        }
    }

    pub fn from_json(j: &KirbyColorJson) -> Result<Self> {
        let alg = algebra_by_name(&j.algebra)?;
        let terms: Vec<TensorTermJson> = j.strata.iter().flat_map(|s| s.terms.iter().cloned()).collect();
        let tensor = TensorElement::from_json(&alg, &TensorJson { slots: 2 * j.n, terms })?;
        let dtl = match &j.dtl {
            Some(d) => Some(DiagramSum::from_json(&alg, d)?),
            None => None,
        };
        Ok(KirbyColor { n: j.n, tensor, dtl })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KirbyMethod {
    Copair,
    Closed,
    Symmetrizer,
    Gram,
}

fn from_dtl(n: usize, d: DiagramSum) -> KirbyColor {
    KirbyColor { n, tensor: d.embed_tensor(), dtl: Some(d) }
}

fn alpha_symmetrizers() -> &'static SymmetrizerCache {
    static CACHE: OnceLock<SymmetrizerCache> = OnceLock::new();
    CACHE.get_or_init(|| SymmetrizerCache::new(&alpha()))
}

/// `ω = Σ ½ cap(e) e + (1/2a) cap(ė) ė` over the walk-indexed basis.
pub fn kirby_copair(n: usize) -> KirbyColor {
    let alg = alpha();
    if n == 0 {
        return from_dtl(0, DiagramSum::empty(&alg));
    }
    let half = Scalar::frac(1, 2);
    let dual = &half * &Scalar::alpha_pow(-1);
    let mut acc = DiagramSum::zero(&alg, 0, 2 * n);
    for (c, s) in class_basis(n) {
        let w = if c.dotted { &dual } else { &half };
        let cap = cap_value(&s);
        if !cap.is_zero() {
            acc = acc.add(&s.value().scale(&(w * &cap))).expect("same boundary");
        }
    }
    from_dtl(n, acc)
}

/// `(2a)!(2b)!/(a! b! (a+b)!)`.
pub fn super_catalan(a: u64, b: u64) -> BigInt {
    factorial(2 * a) * factorial(2 * b) / (factorial(a) * factorial(b) * factorial(a + b))
}

/// `Σ_k (-1)^k C(2a, a+k) C(2b, b-k)`.
pub fn von_szily_sum(a: u64, b: u64) -> BigInt {
    let (a, b) = (a as i64, b as i64);
    let lim = a.max(b);
    let mut acc = BigInt::zero();
    for k in -lim..=lim {
        let t = binomial_i(2 * a, a + k) * binomial_i(2 * b, b - k);
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

pub fn von_szily_check(a: u64, b: u64) -> bool {
    super_catalan(a, b) == von_szily_sum(a, b)
}

/// `+1` iff the entries at even (1-based) positions sum to `k` mod 2.
pub fn sign_z(z: &[u8], k: usize) -> i64 {
    let even: usize = z.iter().skip(1).step_by(2).map(|&e| e as usize).sum();
    if even % 2 == k % 2 {
        1
    } else {
        -1
    }
}

/// `ω = 2^{-2n} Σ_k a^{-k} S(n-k, k) Σ_{|z|=2k} sign(z,k) T_z`.
pub fn kirby_closed_form(n: usize) -> KirbyColor {
    let alg = alpha();
    let len = 2 * n;
    let mut t = TensorElement::zero(&alg, len);
    let norm = Scalar::rational(crate::scalar::Rational::new(BigInt::one(), BigInt::one() << len));
    let coeffs: Vec<Scalar> = (0..=n)
        .map(|k| &(&norm * &int_scalar(&super_catalan((n - k) as u64, k as u64))) * &Scalar::alpha_pow(-(k as i64)))
        .collect();
    for bits in 0..(1u64 << len) {
        let weight = bits.count_ones() as usize;
        if weight % 2 != 0 {
            continue;
        }
        let k = weight / 2;
        let z: Vec<u8> = (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect();
        let c = &coeffs[k] * &Scalar::int(sign_z(&z, k));
        t.add_term(z, c);
    }
    KirbyColor { n, tensor: t, dtl: None }
}

fn dotted_cups(alg: &Algebra, n: usize, scale: &Scalar) -> Result<DiagramSum> {
    let cup = DiagramSum::from_term(alg, Diagram::cup(1), scale.clone())?;
    let mut acc = DiagramSum::empty(alg);
    for _ in 0..n {
        acc = acc.tensor(&cup)?;
    }
    Ok(acc)
}

/// `ω = 2^{-n} C(2n, n) Sym_{2n} ∘ (sepcup)^{⊗n}` with `sepcup = (1/2a)` times the dotted cup.
pub fn kirby_symmetrizer(n: usize) -> KirbyColor {
    let alg = alpha();
    if n == 0 {
        return from_dtl(0, DiagramSum::empty(&alg));
    }
    let sep = &Scalar::frac(1, 2) * &Scalar::alpha_pow(-1);
    let cups = dotted_cups(&alg, n, &sep).expect("cups");
    let sym = alpha_symmetrizers().get(2 * n).expect("cached range");
    let c = &int_scalar(&binomial(2 * n as u64, n as u64)) * &Scalar::frac(1, 1i64 << n);
    from_dtl(n, sym.compose(&cups).expect("boundaries match").scale(&c))
}

/// `ω = Σ_{ij} (G^{-1})_{ij} cap(b_j) b_i` over a basis of decorated matchings.
pub fn kirby_gram(algebra: &Algebra, n: usize) -> Result<KirbyColor> {
    if n == 0 {
        return Ok(from_dtl(0, DiagramSum::empty(algebra)));
    }
    let (basis, gram) = spanning_gram(algebra, n)?;
    let inv = linalg::inverse(&gram).map_err(|_| Error::SingularPairing)?;
    let caps: Vec<Scalar> = basis.iter().map(cap_value).collect();
    let mut acc = DiagramSum::zero(algebra, 0, 2 * n);
    for (i, b) in basis.iter().enumerate() {
        let w: Scalar = (0..basis.len()).filter(|&j| !caps[j].is_zero()).map(|j| &inv[i][j] * &caps[j]).sum();
        if !w.is_zero() {
            acc = acc.add(&b.value().scale(&w))?;
        }
    }
    Ok(from_dtl(n, acc))
}

/// Kirby color of any algebra: the walk-basis routes for `alpha`, the Gram route otherwise.
pub fn kirby_color(algebra: &Algebra, n: usize, method: KirbyMethod) -> Result<KirbyColor> {
    if !same_algebra(algebra, &alpha()) {
        return match method {
            KirbyMethod::Gram | KirbyMethod::Copair => kirby_gram(algebra, n),
            _ => {
                spanning_gram(algebra, n.max(1))?;
                Err(Error::UnsupportedShape(format!("method {method:?} needs the alpha algebra")))
            }
        };
    }
    Ok(match method {
        KirbyMethod::Copair => kirby_copair(n),
        KirbyMethod::Closed => kirby_closed_form(n),
        KirbyMethod::Symmetrizer => kirby_symmetrizer(n),
        KirbyMethod::Gram => kirby_gram(algebra, n)?,
    })
}

/// Glues an annulus labelled `label` to the cyclically adjacent circles `i, j` (1-based).
pub fn annulus_cap(omega: &KirbyColor, position: (usize, usize), label: &AlgebraElement) -> Result<KirbyColor> {
    let k = 2 * omega.n;
    let (i, j) = position;
    if omega.n == 0 || i == 0 || j == 0 || i > k || j > k {
        return Err(Error::IndexOutOfRange { index: i.max(j), max: k });
    }
    let (i, j) = (i - 1, j - 1);
    if !((i + 1) % k == j || (j + 1) % k == i) || i == j {
        return Err(Error::InvalidDiagram(format!("circles {} and {} are not adjacent", i + 1, j + 1)));
    }
    let tensor = omega.tensor.contract(i, j, label)?;
    let dtl = match &omega.dtl {
        Some(d) => Some(d.cap_indices(i, j, label)?),
        None => None,
    };
    Ok(KirbyColor { n: omega.n - 1, tensor, dtl })
}

/// Ratio `t` with `dcap ∘ Sym_{2n} ∘ dcup^{⊗n} = t · Sym_{2n-2} ∘ dcup^{⊗(n-1)}`, capping the two rightmost strands.
pub fn capping_constant(n: usize) -> Option<Scalar> {
    if n == 0 {
        return None;
    }
    let alg = alpha();
    let cache = alpha_symmetrizers();
    let lhs_full = cache.get(2 * n).ok()?.compose(&dotted_cups(&alg, n, &Scalar::one()).ok()?).ok()?;
    let x = AlgebraElement::basis(&alg, 1);
    let lhs = lhs_full.embed_tensor().contract(1, 0, &x).ok()?;
    let rhs = if n == 1 {
        TensorElement::scalar(&alg, Scalar::one())
    } else {
        cache.get(2 * n - 2).ok()?.compose(&dotted_cups(&alg, n - 1, &Scalar::one()).ok()?).ok()?.embed_tensor()
    };
    let (key, c) = rhs.terms().iter().next()?;
    let t = lhs.coeff(key).checked_div(c).ok()?;
    if rhs.scale(&t) == lhs {
        Some(t)
    } else {
        None
    }
}

/// `2n a / (2n - 1)`.
pub fn capping_constant_formula(n: usize) -> Scalar {
    let n = n as i64;
    &Scalar::frac(2 * n, 2 * n - 1) * &Scalar::alpha()
}

/// `t̃_2 = 4a`, `t̃_{2n} = 4(2n-1)a + t̃_{2n-2}`, `t = t̃ / (2n(2n-1))`.
pub fn capping_constant_recursive(n: usize) -> Scalar {
    let mut tilde = Scalar::zero();
    for i in 1..=n as i64 {
        tilde = &tilde + &(&Scalar::int(4 * (2 * i - 1)) * &Scalar::alpha());
    }
    let n = n as i64;
    &tilde * &Scalar::frac(1, 2 * n * (2 * n - 1))
}
