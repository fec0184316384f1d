//! Decorated Temperley-Lieb diagrams: composition, juxtaposition, crossings,
//! symmetrizers and the tensor embedding of `0 -> 2n` diagrams.

mod diagram;
mod sum;
mod symmetrizer;

pub use diagram::{Diagram, Point};
pub use sum::{DiagramSum, DiagramSumJson, DiagramTermJson, EqualityKind, SkeinEquality};
pub use symmetrizer::{crossing, cupcap_at, permutation_morphism, symmetrizer, SymmetrizerCache};

/// All non-crossing perfect matchings of `0..2n`, as sorted arc lists.
pub fn planar_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut j = lo + 1;
        while j < hi {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut m = vec![(lo, j)];
                    m.extend(inner.iter().copied());
                    m.extend(outer.iter().copied());
                    m.sort();
                    out.push(m);
                }
            }
            j += 2;
        }
        out
    }
    let mut all = rec(0, 2 * n);
    all.sort();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{alpha, AlgebraElement};
    use crate::scalar::Scalar;

    fn single(d: Diagram) -> DiagramSum {
        DiagramSum::from_diagram(&alpha(), d).unwrap()
    }

    #[test]
    fn circles() {
        let undotted = single(Diagram::cap(0)).compose(&single(Diagram::cup(0))).unwrap();
        assert_eq!(undotted.as_scalar(), Some(Scalar::int(2)));
        let dotted = single(Diagram::cap(0)).compose(&single(Diagram::cup(1))).unwrap();
        assert!(dotted.is_zero());
        let twice = single(Diagram::cap(1)).compose(&single(Diagram::cup(1))).unwrap();
        assert_eq!(twice.as_scalar(), Some(Scalar::alpha() * Scalar::int(2)));
    }

    #[test]
    fn embed_cups() {
        let a = alpha();
        let t = single(Diagram::cup(0)).embed_tensor();
        assert_eq!(t.to_string(), "1 * 1⊗x + 1 * x⊗1");
        let t = single(Diagram::cup(1)).embed_tensor();
        assert_eq!(t.coeff(&[0, 0]), Scalar::alpha());
        assert_eq!(t.coeff(&[1, 1]), Scalar::int(1));
        let _ = AlgebraElement::one(&a);
    }

    #[test]
    fn text_round_trip() {
        let d: Diagram = "0:4 | (1-2)^1 (3-4)^0".parse().unwrap();
        assert_eq!(d.to_string(), "0:4 | (1-2)^1 (3-4)^0");
        assert!("0:4 | (1-3)^0 (2-4)^0".parse::<Diagram>().is_err());
    }

    #[test]
    fn sym2() {
        let a = alpha();
        let s = symmetrizer(&a, 2).unwrap();
        let expected = DiagramSum::identity(&a, 2)
            .sub(&DiagramSum::from_diagram(&a, cupcap_at(2, 0).unwrap()).unwrap().scale(&Scalar::frac(1, 2)))
            .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn matchings_catalan() {
        let counts: Vec<usize> = (0..6).map(|n| planar_matchings(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }
}
