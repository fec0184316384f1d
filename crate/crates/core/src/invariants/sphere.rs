use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Parallel essential spheres: undotted `S` or dotted `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sphere {
    S,
    D,
}

pub type Word = Vec<Sphere>;

/// Linear combination of words in the thickened-sphere skein algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SphereSkein {
    terms: BTreeMap<Word, Scalar>,
}

impl SphereSkein {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn s_pow(k: usize) -> Self {
        Self::word(vec![Sphere::S; k])
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Sphere]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Whether every word has the form `S^k` or `S^k D`.
    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| redexes(w).is_empty())
    }
}

/// Positions `i` with `w[i] = D` and a letter after it.
fn redexes(w: &[Sphere]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| w[i] == Sphere::D).collect()
}

/// `DS → -SD` and `DD → 1 - a SS` at position `i`.
fn rewrite_at(w: &[Sphere], i: usize) -> Vec<(Word, Scalar)> {
    let (pre, post) = (&w[..i], &w[i + 2..]);
    let join = |mid: &[Sphere]| -> Word { pre.iter().chain(mid).chain(post).copied().collect() };
    match w[i + 1] {
        Sphere::S => vec![(join(&[Sphere::S, Sphere::D]), -Scalar::one())],
        Sphere::D => vec![(join(&[]), Scalar::one()), (join(&[Sphere::S, Sphere::S]), -Scalar::alpha())],
    }
}

/// Rewrites to normal form, rewriting at the redex `choose(count)` of each reducible word.
pub fn normal_form_with(x: &SphereSkein, choose: &mut dyn FnMut(usize) -> usize) -> SphereSkein {
    let mut done = SphereSkein::zero();
    let mut work: Vec<(Word, Scalar)> = x.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = work.pop() {
        let r = redexes(&w);
        if r.is_empty() {
            done.add_term(w, c);
            continue;
        }
        let i = r[choose(r.len()) % r.len()];
        for (nw, nc) in rewrite_at(&w, i) {
            work.push((nw, &nc * &c));
        }
    }
    done
}

/// Normal form in the basis `{S^k, S^k D}`, rewriting leftmost redexes first.
pub fn sphere_skein_normal_form(x: &SphereSkein) -> SphereSkein {
    normal_form_with(x, &mut |_| 0)
}

/// Reduction in `S²×S¹` onto the spanning set `{∅, D, S, S^{2k}}`.
pub fn sphere_skein_trace_reduce(x: &SphereSkein) -> SphereSkein {
    let nf = sphere_skein_normal_form(x);
    let mut out = SphereSkein::zero();
    for (w, c) in nf.terms() {
        let k = w.iter().filter(|&&l| l == Sphere::S).count();
        let dotted = w.last() == Some(&Sphere::D);
        if dotted {
            if k == 0 {
                out.add_term(w.clone(), c.clone());
            }
        } else if k % 2 == 1 {
            out.add_term(vec![Sphere::S], c * &Scalar::alpha_pow(-((k / 2) as i64)));
        } else {
            out.add_term(w.clone(), c.clone());
        }
    }
    out
}

pub fn word_to_string(w: &[Sphere]) -> String {
    if w.is_empty() {
        return "∅".into();
    }
    w.iter().map(|l| if *l == Sphere::S { 'S' } else { 'D' }).collect()
}

pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "∅" || s == "1" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.chars()
        .map(|c| match c {
            'S' => Ok(Sphere::S),
            'D' => Ok(Sphere::D),
            _ => Err(Error::Parse(format!("sphere word {s:?}"))),
        })
        .collect()
}

impl FromStr for SphereSkein {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(SphereSkein::word(parse_word(s)?))
    }
}

impl fmt::Display for SphereSkein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_monomial();
            let shown = if negative && idx > 0 { -c } else { c.clone() };
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if shown.is_compound() {
                write!(f, "({shown}) * {}", word_to_string(w))?;
            } else {
                write!(f, "{shown} * {}", word_to_string(w))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: &str) -> SphereSkein {
        sphere_skein_normal_form(&s.parse().unwrap())
    }

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn basic_rewrites() {
        assert_eq!(nf("DS"), SphereSkein::term(w("SD"), -Scalar::one()));
        let expect = SphereSkein::term(w("SSS"), -Scalar::alpha()).add(&SphereSkein::word(w("S")));
        assert_eq!(nf("DDS"), expect);
        assert!(nf("DSDSSDD").is_normal());
    }

    #[test]
    fn trace_examples() {
        assert!(sphere_skein_trace_reduce(&"SSD".parse().unwrap()).is_zero());
        let s5 = sphere_skein_trace_reduce(&SphereSkein::s_pow(5));
        assert_eq!(s5, SphereSkein::term(w("S"), Scalar::alpha_pow(-2)));
        assert_eq!(sphere_skein_trace_reduce(&"D".parse().unwrap()), SphereSkein::word(w("D")));
    }
}
