use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::canonical::incidence_columns;
use crate::error::{ensure_at_most, Result};
use crate::setcore::Family;

/// The incidence-matrix columns of a family as points of the cube `{0,1}^n`.
///
/// Graph operations treat the distinct columns as vertices, adjacent when
/// they differ in exactly one coordinate.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingRep {
    n: usize,
    columns: Vec<u32>,
}

/// Formats a cube point as `δ{...}` with 1-indexed member labels.
pub fn delta_label(column: u32) -> String {
    if column == 0 {
        return "δ∅".to_string();
    }
    let mut s = String::from("δ");
    let parts: Vec<String> = (0..32)
        .filter(|i| column >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    // single-digit labels read as δ123; wider ones need separators
    if parts.iter().all(|p| p.len() == 1) {
        s.push_str(&parts.concat());
    } else {
        s.push_str(&parts.join(","));
    }
    s
}

impl HammingRep {
    pub fn new(n: usize, columns: Vec<u32>) -> Self {
        debug_assert!(n <= 16 && columns.iter().all(|&c| c >> n == 0));
        Self { n, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One column per ground element, in element order.
    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Distinct columns in increasing order.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v = self.columns.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn weight(column: u32) -> u32 {
        column.count_ones()
    }

    pub fn adjacent(s: u32, t: u32) -> bool {
        (s ^ t).count_ones() == 1
    }

    pub fn degree(&self, v: u32) -> usize {
        self.vertices()
            .into_iter()
            .filter(|&u| Self::adjacent(u, v))
            .count()
    }

    /// Edges between distinct vertices, each listed once with `s < t`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let v = self.vertices();
        let mut out = Vec::new();
        for (i, &s) in v.iter().enumerate() {
            for &t in &v[i + 1..] {
                if Self::adjacent(s, t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// Connected components of the vertex graph.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let verts = self.vertices();
        let mut seen = vec![false; verts.len()];
        let mut out = Vec::new();
        for start in 0..verts.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![verts[start]];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (j, &u) in verts.iter().enumerate() {
                    if !seen[j] && Self::adjacent(verts[i], u) {
                        seen[j] = true;
                        comp.push(u);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the representation is a single simple cycle (at least four
    /// vertices, since the cube has no odd cycles).
    pub fn is_cycle(&self) -> bool {
        let v = self.vertices();
        v.len() >= 4 && self.is_connected() && v.iter().all(|&x| self.degree(x) == 2)
    }

    /// Whether the representation is a single simple path (a lone vertex
    /// counts).
    pub fn is_path(&self) -> bool {
        let v = self.vertices();
        if v.is_empty() || !self.is_connected() {
            return false;
        }
        if v.len() == 1 {
            return true;
        }
        let degrees: Vec<usize> = v.iter().map(|&x| self.degree(x)).collect();
        degrees.iter().filter(|&&d| d == 1).count() == 2
            && degrees.iter().all(|&d| d == 1 || d == 2)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for HammingRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.columns.iter().map(|&c| delta_label(c)).collect();
        write!(f, "HammingRep(n={}, [{}])", self.n, labels.join(" "))
    }
}

/// Columns of `family`'s incidence matrix.
pub fn hamming_representation(family: &Family) -> Result<HammingRep> {
    ensure_at_most("number of sets", family.len() as u64, 16)?;
    Ok(HammingRep::new(family.len(), incidence_columns(family)))
}

pub fn is_connected(rep: &HammingRep) -> bool {
    rep.is_connected()
}

/// The four forbidden four-point arrangements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YKind {
    /// `δx` below three points `δxyu, δxyv, δxyw` with `u, v, w` nonempty and
    /// pairwise disjoint.
    A,
    /// A chain `δx ⊊ δxy` below two points `δxyz, δxyw` with `z, w` disjoint.
    B,
    /// Incomparable `δx, δy`, their union `δxy`, and a strict superset `δxyz`.
    C,
    /// Three points `δx, δy, δz` below `δxyz`, each index of one shared by another.
    D,
}

/// Four cube points in one of the [`YKind`] arrangements. No coordinate is
/// set in exactly two of them, so the four matching ground elements are
/// split by no member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YWitness {
    pub kind: YKind,
    /// In pattern order: the root first for (a) and (b), the top last for
    /// (c) and (d).
    pub vertices: [u32; 4],
}

/// No coordinate is set in exactly two of the four points.
fn no_index_twice(v: [u32; 4]) -> bool {
    let twice = (v[0] & v[1] & !v[2] & !v[3])
        | (v[0] & !v[1] & v[2] & !v[3])
        | (v[0] & !v[1] & !v[2] & v[3])
        | (!v[0] & v[1] & v[2] & !v[3])
        | (!v[0] & v[1] & !v[2] & v[3])
        | (!v[0] & !v[1] & v[2] & v[3]);
    twice == 0
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

fn pairwise_disjoint(xs: &[u32]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, &a)| xs[i + 1..].iter().all(|&b| a & b == 0))
}

const ORDERS: [[usize; 4]; 24] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 0, 3, 1],
    [2, 1, 0, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [2, 3, 1, 0],
    [3, 0, 1, 2],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 1, 2, 0],
    [3, 2, 0, 1],
    [3, 2, 1, 0],
];

fn match_kind(kind: YKind, p: [u32; 4]) -> bool {
    match kind {
        YKind::A => {
            let [x, t1, t2, t3] = p;
            let common = t1 & t2 & t3;
            let private = [t1 & !common, t2 & !common, t3 & !common];
            subset(x, common) && private.iter().all(|&p| p != 0) && pairwise_disjoint(&private)
        }
        YKind::B => {
            let [x, m, t1, t2] = p;
            x != m
                && subset(x, m)
                && t1 != m
                && t2 != m
                && subset(m, t1)
                && subset(m, t2)
                && (t1 & !m) & (t2 & !m) == 0
        }
        YKind::C => {
            let [x, y, u, top] = p;
            !subset(x, y) && !subset(y, x) && u == x | y && top != u && subset(u, top)
        }
        YKind::D => {
            let [x, y, z, top] = p;
            top == x | y | z && subset(x, y | z) && subset(y, x | z) && subset(z, x | y)
        }
    }
}

/// Classifies four distinct points as a Y arrangement, if they form one.
pub fn classify_y(points: [u32; 4]) -> Option<YWitness> {
    if !no_index_twice(points) {
        return None;
    }
    for kind in [YKind::A, YKind::B, YKind::C, YKind::D] {
        for order in ORDERS {
            let p = order.map(|i| points[i]);
            if match_kind(kind, p) {
                return Some(YWitness { kind, vertices: p });
            }
        }
    }
    None
}

/// Searches the distinct columns for a forbidden Y arrangement.
///
/// Any vertex with three neighbours yields one.
pub fn find_forbidden_y(rep: &HammingRep) -> Result<Option<YWitness>> {
    let v = rep.vertices();
    ensure_at_most("number of columns", v.len() as u64, 64)?;
    let m = v.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if let Some(w) = classify_y([v[a], v[b], v[c], v[d]]) {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::standard_family;

    fn d(indices: &[u32]) -> u32 {
        indices.iter().fold(0, |acc, i| acc | 1 << (i - 1))
    }

    fn exceptional() -> Family {
        Family::from_lists(
            8,
            [
                vec![1, 2, 3, 4],
                vec![1, 2, 5, 6],
                vec![3, 4, 5, 6],
                vec![1, 3, 5, 7],
            ],
        )
        .unwrap()
    }

    #[test]
    fn standard_eight_is_the_cycle() {
        let rep = hamming_representation(&standard_family(8).unwrap()).unwrap();
        let expected = [
            d(&[1]),
            d(&[1, 2]),
            d(&[1, 2, 3]),
            d(&[1, 2, 3, 4]),
            d(&[2, 3, 4]),
            d(&[3, 4]),
            d(&[4]),
            d(&[]),
        ];
        assert_eq!(rep.columns(), &expected);
        assert!(rep.is_cycle());
        // consecutive columns (cyclically) are the cycle's edges
        for i in 0..8 {
            assert!(HammingRep::adjacent(expected[i], expected[(i + 1) % 8]));
        }
        assert_eq!(rep.edges().len(), 8);
    }

    #[test]
    fn exceptional_is_four_edges() {
        let rep = hamming_representation(&exceptional()).unwrap();
        let mut edges = rep.edges();
        edges.sort_unstable();
        let mut expected = vec![
            (d(&[]), d(&[4])),
            (d(&[1, 2]), d(&[1, 2, 4])),
            (d(&[1, 3]), d(&[1, 3, 4])),
            (d(&[2, 3]), d(&[2, 3, 4])),
        ];
        expected.sort_unstable();
        assert_eq!(edges, expected);
        assert_eq!(rep.components().len(), 4);
        assert!(!is_connected(&rep));
    }

    #[test]
    fn empty_family_columns() {
        let rep = hamming_representation(&Family::empty(3).unwrap()).unwrap();
        assert_eq!(rep.columns(), &[0, 0, 0]);
        assert_eq!(rep.vertices(), vec![0]);
        assert!(rep.is_connected());
        assert!(HammingRep::new(2, vec![]).is_connected());
    }

    #[test]
    fn star_is_type_a() {
        let rep = HammingRep::new(3, vec![d(&[]), d(&[1]), d(&[2]), d(&[3])]);
        let w = find_forbidden_y(&rep).unwrap().unwrap();
        assert_eq!(w.kind, YKind::A);
        assert_eq!(w.vertices[0], 0);
    }

    #[test]
    fn no_y_in_known_families() {
        let std8 = hamming_representation(&standard_family(8).unwrap()).unwrap();
        assert_eq!(find_forbidden_y(&std8).unwrap(), None);
        let exc = hamming_representation(&exceptional()).unwrap();
        assert_eq!(find_forbidden_y(&exc).unwrap(), None);
        let singles = HammingRep::new(4, vec![d(&[1]), d(&[2]), d(&[3]), d(&[4])]);
        assert_eq!(find_forbidden_y(&singles).unwrap(), None);
    }

    #[test]
    fn each_degree_three_shape() {
        // s = δ12 with neighbours chosen above/below in every combination
        let s = d(&[1, 2]);
        let up = [d(&[1, 2, 3]), d(&[1, 2, 4]), d(&[1, 2, 5])];
        let down = [d(&[1]), d(&[2])];
        let cases = [
            ([up[0], up[1], up[2]], YKind::A),
            ([up[0], up[1], down[0]], YKind::B),
            ([up[0], down[0], down[1]], YKind::C),
        ];
        for (nbrs, kind) in cases {
            let w = classify_y([s, nbrs[0], nbrs[1], nbrs[2]]).unwrap();
            assert_eq!(w.kind, kind);
        }
        let top = d(&[1, 2, 3]);
        let w = classify_y([top, d(&[1, 2]), d(&[1, 3]), d(&[2, 3])]).unwrap();
        assert_eq!(w.kind, YKind::D);
    }

    #[test]
    fn labels() {
        assert_eq!(delta_label(0), "δ∅");
        assert_eq!(delta_label(d(&[1, 2, 4])), "δ124");
    }
}
