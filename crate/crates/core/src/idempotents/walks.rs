use super::{ArcPartition, PlanarMatching};
use crate::error::{Error, Result};

/// `b_i = 0` when the arc at point `i` lies in `B`.
pub fn boundary_sequence(p: &ArcPartition) -> Vec<u8> {
    let m = p.matching();
    (0..2 * m.n()).map(|pt| if p.in_b(m.arc_at(pt)) { 0 } else { 1 }).collect()
}

fn add_alternating(bits: &[u8]) -> Vec<u8> {
    bits.iter().enumerate().map(|(i, &b)| (b + (i % 2) as u8) % 2).collect()
}

/// Stack reduction pairing adjacent equal bits, leftmost innermost first.
fn reduce_pairs(bits: &[u8]) -> Option<Vec<(usize, usize)>> {
    let mut stack: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        match stack.last() {
            Some(&top) if bits[top] == b => {
                stack.pop();
                arcs.push((top, i));
            }
            _ => stack.push(i),
        }
    }
    if stack.is_empty() {
        arcs.sort();
        Some(arcs)
    } else {
        None
    }
}

/// Walk sequence `w = b + (0,1,0,1,...)` of a realizable boundary sequence.
pub fn walk_of(b: &[u8]) -> Result<Vec<u8>> {
    if b.is_empty() || b.len() % 2 != 0 || b[0] != 0 || b.iter().any(|&x| x > 1) {
        return Err(Error::UnrealizableSequence);
    }
    reduce_pairs(b).ok_or(Error::UnrealizableSequence)?;
    Ok(add_alternating(b))
}

/// Representative partition of a returning walk.
pub fn matching_of_walk(w: &[u8]) -> Result<ArcPartition> {
    let ones = w.iter().filter(|&&x| x == 1).count();
    if w.is_empty() || w[0] != 0 || w.iter().any(|&x| x > 1) || 2 * ones != w.len() {
        return Err(Error::NonReturningWalk);
    }
    let b = add_alternating(w);
    let arcs = reduce_pairs(&b).ok_or(Error::UnrealizableSequence)?;
    let in_b = arcs.iter().map(|&(i, _)| b[i] == 0).collect();
    ArcPartition::new(PlanarMatching::new(arcs)?, in_b)
}

/// Returning walks of length `2n` starting with 0, in lexicographic order.
pub fn enumerate_classes(n: usize) -> Vec<Vec<u8>> {
    let len = 2 * n;
    let mut out = Vec::new();
    if n == 0 || len > 62 {
        return out;
    }
    for bits in 0..(1u64 << (len - 1)) {
        if bits.count_ones() as usize != n {
            continue;
        }
        let w: Vec<u8> = (0..len).map(|i| if i == 0 { 0 } else { ((bits >> (len - 1 - i)) & 1) as u8 }).collect();
        out.push(w);
    }
    out.sort();
    out
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|b| if *b == 0 { '0' } else { '1' }).collect()
}

pub fn bits_from_str(s: &str) -> Result<Vec<u8>> {
    s.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Parse(format!("bit string {s:?}"))),
        })
        .collect()
}
