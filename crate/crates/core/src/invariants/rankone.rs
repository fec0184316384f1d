use crate::error::{Error, Result};
use crate::linalg::{identity, mat_mul, Matrix};
use crate::report::Report;
use crate::scalar::{Rational, Scalar, Subring};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Handle maps of the rank-one theory `k` with `ε(1) = u`.
///
/// Vectors are indexed by the skein bases `{∅}` of `S³` and the solid tori, `{∅, S}` of `S²×B¹`,
/// and maps are matrices acting on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOneHandleData {
    pub u: Scalar,
    /// `Sk(S³) → k`.
    pub m0: Matrix,
    /// Abstract evaluation `Sk(B¹×S²) → k` on `{∅, S}`.
    pub m1: Matrix,
    /// Pairings and copairings of the solid torus for boundary classes `(0,0)` and `(0,1)`.
    pub p2: [Matrix; 2],
    pub c2: [Matrix; 2],
    /// `Sk(B²×S¹, ∅) → Sk(S¹×B², ∅)`.
    pub m2: Matrix,
    pub p3: Matrix,
    pub c3: Matrix,
    /// `∅ ↦ ∅ + u^{-1} S`.
    pub m3: Matrix,
    /// Compression of `{∅, S}` inside `S³`.
    pub s3_eval: Matrix,
    pub p4: Matrix,
    pub c4: Matrix,
    pub m4: Matrix,
}

fn column(v: Vec<Scalar>) -> Matrix {
    v.into_iter().map(|x| vec![x]).collect()
}

fn diag(v: Vec<Scalar>) -> Matrix {
    let n = v.len();
    v.into_iter()
        .enumerate()
        .map(|(i, x)| (0..n).map(|j| if i == j { x.clone() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn rank_one_tables(u: &Scalar) -> Result<RankOneHandleData> {
    if !u.is_unit(Subring::Laurent) {
        return Err(Error::NonUnitParameter(u.to_string()));
    }
    let one = Scalar::one();
    let uinv = u.inv()?;
    let p3 = diag(vec![one.clone(), u * u]);
    let c3 = diag(vec![one.clone(), &uinv * &uinv]);
    let s3_eval = vec![vec![one.clone(), u.clone()]];
    let m3: Matrix = (0..2).map(|i| vec![(0..2).map(|j| &c3[i][j] * &s3_eval[0][j]).sum()]).collect();
    let p4 = mat_mul(&s3_eval, &m3);
    let c4 = vec![vec![p4[0][0].inv()?]];
    Ok(RankOneHandleData {
        u: u.clone(),
        m0: vec![vec![one.clone()]],
        m1: vec![vec![one.clone(), u.clone()]],
        p2: [vec![vec![one.clone()]], vec![vec![u.clone()]]],
        c2: [vec![vec![one.clone()]], vec![vec![uinv.clone()]]],
        m2: vec![vec![one.clone()]],
        p3,
        c3,
        m3,
        s3_eval,
        p4,
        m4: c4.clone(),
        c4,
    })
}

impl RankOneHandleData {
    /// Zig-zag identities `P·C = id`, `p₄ = 2`, `m₄ = ½` and `m₃ = (id ⊗ s³)(c₃)`.
    pub fn battery(&self) -> Report {
        let mut r = Report::new();
        for (i, (p, c)) in self.p2.iter().zip(&self.c2).enumerate() {
            r.check(format!("rank one zig-zag p2 class {i}"), mat_mul(p, c) == identity(p.len()));
        }
        r.check("rank one zig-zag p3", mat_mul(&self.p3, &self.c3) == identity(2));
        r.check("rank one zig-zag p4", mat_mul(&self.p4, &self.c4) == identity(1));
        r.check("rank one p4 = 2", self.p4 == vec![vec![Scalar::int(2)]]);
        r.check("rank one m4 = 1/2", self.m4 == vec![vec![Scalar::frac(1, 2)]]);
        let expect_m3 = column(vec![Scalar::one(), self.u.inv().expect("unit")]);
        r.check("rank one m3 = 1 + S/u", self.m3 == expect_m3);
        r.check("rank one m1 matches sphere evaluation", self.m1 == self.s3_eval);
        r
    }

    /// `m₄ · (s³ · m₃)^k` for a closed manifold with `k` non-cancelling 3-handles.
    pub fn closed_value(&self, three_handles: usize) -> Scalar {
        let cycle = mat_mul(&self.s3_eval, &self.m3)[0][0].clone();
        (0..three_handles).fold(self.m4[0][0].clone(), |acc, _| &acc * &cycle)
    }
}

/// `½ |H₃(W; Z/2)|`.
pub fn rank_one_dw(h3_order: u64) -> Rational {
    Rational::new(BigInt::from(h3_order), BigInt::from(2))
}
