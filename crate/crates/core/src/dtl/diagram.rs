use crate::error::{Error, Result};
use std::fmt;

/// Boundary point in geometric terms, positions counted left to right from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

/// Non-crossing matching of `bottom + top` boundary points with one exponent per arc.
///
/// Indices run counterclockwise: bottom points left to right, then top points right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    bottom: usize,
    top: usize,
    arcs: Vec<(u8, u8)>,
    decos: Vec<u8>,
}

impl Diagram {
    /// Arcs are 0-based index pairs with their decoration exponents.
    pub fn new(bottom: usize, top: usize, arcs: Vec<((usize, usize), u8)>) -> Result<Self> {
        let total = bottom + top;
        if total % 2 != 0 {
            return Err(Error::InvalidDiagram(format!("odd number of boundary points {total}")));
        }
        if total > 250 {
            return Err(Error::InvalidDiagram(format!("too many boundary points {total}")));
        }
        if arcs.len() * 2 != total {
            return Err(Error::InvalidDiagram(format!("{} arcs for {total} points", arcs.len())));
        }
        let mut partner = vec![usize::MAX; total];
        let mut norm: Vec<((u8, u8), u8)> = Vec::with_capacity(arcs.len());
        for ((i, j), e) in arcs {
            if i >= total || j >= total || i == j {
                return Err(Error::InvalidDiagram(format!("bad arc ({i}, {j})")));
            }
            if partner[i] != usize::MAX || partner[j] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("point reused in arc ({i}, {j})")));
            }
            partner[i] = j;
            partner[j] = i;
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            norm.push(((a as u8, b as u8), e));
        }
        let mut stack = Vec::new();
        for (p, &q) in partner.iter().enumerate() {
            if q > p {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return Err(Error::InvalidDiagram("arcs cross".into()));
            }
        }
        norm.sort();
        Ok(Diagram {
            bottom,
            top,
            arcs: norm.iter().map(|(a, _)| *a).collect(),
            decos: norm.iter().map(|(_, e)| *e).collect(),
        })
    }

    pub(crate) fn from_parts_unchecked(bottom: usize, top: usize, mut arcs: Vec<((u8, u8), u8)>) -> Self {
        for a in arcs.iter_mut() {
            if a.0 .0 > a.0 .1 {
                a.0 = (a.0 .1, a.0 .0);
            }
        }
        arcs.sort_unstable();
        Diagram {
            bottom,
            top,
            arcs: arcs.iter().map(|(a, _)| *a).collect(),
            decos: arcs.iter().map(|(_, e)| *e).collect(),
        }
    }

    pub fn index_of(&self, p: Point) -> usize {
        index_of(self.bottom, self.top, p)
    }

    /// Diagram from arcs given by geometric endpoints.
    pub fn from_points(bottom: usize, top: usize, arcs: &[(Point, Point, u8)]) -> Result<Self> {
        for (a, b, _) in arcs {
            for p in [a, b] {
                let ok = match p {
                    Point::Bottom(j) => *j < bottom,
                    Point::Top(j) => *j < top,
                };
                if !ok {
                    return Err(Error::InvalidDiagram(format!("point {p:?} out of range")));
                }
            }
        }
        Diagram::new(
            bottom,
            top,
            arcs.iter().map(|(a, b, e)| ((index_of(bottom, top, *a), index_of(bottom, top, *b)), *e)).collect(),
        )
    }

    pub fn empty() -> Self {
        Diagram { bottom: 0, top: 0, arcs: Vec::new(), decos: Vec::new() }
    }

    pub fn identity(m: usize) -> Self {
        let arcs: Vec<_> = (0..m).map(|j| (Point::Bottom(j), Point::Top(j), 0)).collect();
        Diagram::from_points(m, m, &arcs).expect("identity is planar")
    }

    /// Identity with the given strand decorations.
    pub fn decorated_identity(decos: &[u8]) -> Self {
        let m = decos.len();
        let arcs: Vec<_> = decos.iter().enumerate().map(|(j, &e)| (Point::Bottom(j), Point::Top(j), e)).collect();
        Diagram::from_points(m, m, &arcs).expect("identity is planar")
    }

    pub fn cup(e: u8) -> Self {
        Diagram::from_points(0, 2, &[(Point::Top(0), Point::Top(1), e)]).expect("cup")
    }

    pub fn cap(e: u8) -> Self {
        Diagram::from_points(2, 0, &[(Point::Bottom(0), Point::Bottom(1), e)]).expect("cap")
    }

    /// `m -> m-2`, joining bottom positions `i` and `i+1`.
    pub fn cap_at(m: usize, i: usize, e: u8) -> Result<Self> {
        if m < 2 || i + 1 >= m {
            return Err(Error::IndexOutOfRange { index: i + 1, max: m.saturating_sub(1) });
        }
        let mut arcs = vec![(Point::Bottom(i), Point::Bottom(i + 1), e)];
        for j in 0..m - 2 {
            let b = if j < i { j } else { j + 2 };
            arcs.push((Point::Bottom(b), Point::Top(j), 0));
        }
        Diagram::from_points(m, m - 2, &arcs)
    }

    /// `m -> m+2`, joining top positions `i` and `i+1`.
    pub fn cup_at(m: usize, i: usize, e: u8) -> Result<Self> {
        if i > m {
            return Err(Error::IndexOutOfRange { index: i + 1, max: m + 1 });
        }
        let mut arcs = vec![(Point::Top(i), Point::Top(i + 1), e)];
        for j in 0..m {
            let t = if j < i { j } else { j + 2 };
            arcs.push((Point::Bottom(j), Point::Top(t), 0));
        }
        Diagram::from_points(m, m + 2, &arcs)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn points(&self) -> usize {
        self.bottom + self.top
    }

    /// Arcs as 0-based index pairs with decorations, sorted by first endpoint.
    pub fn arcs(&self) -> impl Iterator<Item = ((usize, usize), u8)> + '_ {
        self.arcs.iter().zip(&self.decos).map(|(&(a, b), &e)| ((a as usize, b as usize), e))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn decorations(&self) -> &[u8] {
        &self.decos
    }

    pub fn partner(&self) -> Vec<u8> {
        let mut p = vec![0u8; self.points()];
        for &(a, b) in &self.arcs {
            p[a as usize] = b;
            p[b as usize] = a;
        }
        p
    }

    pub fn deco_at_points(&self) -> Vec<u8> {
        let mut d = vec![0u8; self.points()];
        for (&(a, b), &e) in self.arcs.iter().zip(&self.decos) {
            d[a as usize] = e;
            d[b as usize] = e;
        }
        d
    }

    /// Same matching with all decorations replaced.
    pub fn with_decorations(&self, decos: Vec<u8>) -> Self {
        assert_eq!(decos.len(), self.arcs.len());
        Diagram { bottom: self.bottom, top: self.top, arcs: self.arcs.clone(), decos }
    }

    /// Top/bottom reflection `m -> n` to `n -> m`; reverses the index order.
    pub fn mirror(&self) -> Self {
        let t = self.points() as u8;
        let arcs = self.arcs.iter().zip(&self.decos).map(|(&(a, b), &e)| ((t - 1 - b, t - 1 - a), e)).collect();
        Diagram::from_parts_unchecked(self.top, self.bottom, arcs)
    }

    /// Number of arcs joining bottom to top.
    pub fn through_degree(&self) -> usize {
        let m = self.bottom as u8;
        self.arcs.iter().filter(|(a, b)| (*a < m) != (*b < m)).count()
    }
}

pub(crate) fn index_of(bottom: usize, top: usize, p: Point) -> usize {
    match p {
        Point::Bottom(j) => j,
        Point::Top(j) => bottom + top - 1 - j,
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{} |", self.bottom, self.top)?;
        for ((a, b), e) in self.arcs() {
            write!(f, " ({}-{})^{}", a + 1, b + 1, e)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("diagram {s:?}"));
        let (head, body) = s.split_once('|').ok_or_else(bad)?;
        let (m, n) = head.trim().split_once(':').ok_or_else(bad)?;
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut arcs = Vec::new();
        for tok in body.split_whitespace() {
            let tok = tok.strip_prefix('(').ok_or_else(bad)?;
            let (pair, e) = tok.split_once(")^").ok_or_else(bad)?;
            let (i, j) = pair.split_once('-').ok_or_else(bad)?;
            let i: usize = i.parse().map_err(|_| bad())?;
            let j: usize = j.parse().map_err(|_| bad())?;
            let e: u8 = e.parse().map_err(|_| bad())?;
            if i == 0 || j == 0 {
                return Err(bad());
            }
            arcs.push(((i - 1, j - 1), e));
        }
        Diagram::new(m, n, arcs)
    }
}
