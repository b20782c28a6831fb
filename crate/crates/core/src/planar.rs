//! Combinatorial planar maps of link diagrams.
//!
//! Crossing `v` owns darts `4v..4v+4`, one per corner, numbered
//! counter-clockwise from the upper right exactly as in
//! [`strands`](crate::strands). `alpha` pairs the two ends of each edge.
//! Faces are the orbits of `d ↦ cw(alpha(d))`, which keeps the face on the
//! left of the walk.

use crate::morse::{EventKind, MorseLink};
use crate::strands::{Layout, Step, LL, LR, UL, UR};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    pub alpha: Vec<usize>,
    /// the dart lies on the over strand of its crossing
    pub over: Vec<bool>,
    /// the oriented strand leaves the crossing through this dart
    pub out: Vec<bool>,
}

pub fn cw(d: usize) -> usize {
    4 * (d / 4) + (d % 4 + 3) % 4
}

pub fn ccw(d: usize) -> usize {
    4 * (d / 4) + (d % 4 + 1) % 4
}

pub fn opposite(d: usize) -> usize {
    4 * (d / 4) + (d % 4 + 2) % 4
}

#[derive(Debug, Clone)]
pub struct Faces {
    pub face_of: Vec<usize>,
    /// darts of each face in walk order, starting from the smallest
    pub darts: Vec<Vec<usize>>,
}

impl PlanarMap {
    /// Map of all crossings of the diagram, plus the number of components
    /// that have no crossing at all.
    pub fn from_diagram(diagram: &MorseLink) -> (PlanarMap, usize) {
        let layout = Layout::new(diagram);
        let up = layout.orientation();
        let events = diagram.events();
        let mut vertex_of = vec![usize::MAX; events.len()];
        let mut v = 0;
        for (i, e) in events.iter().enumerate() {
            if e.kind.is_crossing() {
                vertex_of[i] = v;
                v += 1;
            }
        }
        let n = 4 * v;
        let mut alpha = vec![usize::MAX; n];
        let mut over = vec![false; n];
        let mut out = vec![false; n];
        for (i, e) in events.iter().enumerate() {
            if !e.kind.is_crossing() {
                continue;
            }
            let base = 4 * vertex_of[i];
            for corner in [UR, UL, LL, LR] {
                let d = base + corner;
                over[d] = (corner % 2 == 0) == (e.kind == EventKind::CrossPos);
                let seg_up = up[layout.corner_segment(i, corner)];
                out[d] = if corner == UR || corner == UL { seg_up } else { !seg_up };
                let mut step = layout.leave_corner(i, corner);
                alpha[d] = loop {
                    match step {
                        Step::Segment { level, pos, up } => step = layout.step(level, pos, up),
                        Step::Crossing { event, corner } => break 4 * vertex_of[event] + corner,
                    }
                };
            }
        }

        let (comp, count) = layout.component_of_segments();
        let mut touched = vec![false; count];
        for (i, e) in events.iter().enumerate() {
            if e.kind.is_crossing() {
                touched[comp[layout.segment(i, e.pos)]] = true;
                touched[comp[layout.segment(i, e.pos + 1)]] = true;
            }
        }
        let free = touched.iter().filter(|&&t| !t).count();
        (PlanarMap { alpha, over, out }, free)
    }

    pub fn vertex_count(&self) -> usize {
        self.alpha.len() / 4
    }

    pub fn faces(&self) -> Faces {
        let n = self.alpha.len();
        let mut face_of = vec![usize::MAX; n];
        let mut darts = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = darts.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = f;
                walk.push(d);
                d = cw(self.alpha[d]);
                if d == start {
                    break;
                }
            }
            darts.push(walk);
        }
        Faces { face_of, darts }
    }

    /// The outgoing dart joined to in-dart `x` by the oriented smoothing.
    pub fn smoothing_successor(&self, x: usize) -> usize {
        debug_assert!(!self.out[x]);
        if self.out[ccw(x)] {
            ccw(x)
        } else {
            cw(x)
        }
    }

    /// Seifert circle of every dart, numbered by first appearance.
    pub fn circles(&self) -> (Vec<usize>, usize) {
        let n = self.alpha.len();
        let mut circle = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if circle[start] != usize::MAX {
                continue;
            }
            let mut o = if self.out[start] { start } else { self.alpha[start] };
            loop {
                if circle[o] != usize::MAX {
                    break;
                }
                let x = self.alpha[o];
                circle[o] = count;
                circle[x] = count;
                o = self.smoothing_successor(x);
            }
            count += 1;
        }
        (circle, count)
    }

    /// Writhe sign of vertex `v`.
    pub fn sign(&self, v: usize) -> i32 {
        let darts = 4 * v..4 * v + 4;
        let o = darts.clone().find(|&d| self.over[d] && self.out[d]).expect("over strand leaves");
        let u = darts.clone().find(|&d| !self.over[d] && self.out[d]).expect("under strand leaves");
        if u == ccw(o) {
            1
        } else {
            -1
        }
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let v = self.vertex_count();
        let mut seen = vec![false; v];
        let mut out = Vec::new();
        for s in 0..v {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for d in 4 * x..4 * x + 4 {
                    let w = self.alpha[d] / 4;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Restriction to a union of components, with vertices renumbered in
    /// the given order.
    pub fn restrict(&self, vertices: &[usize]) -> PlanarMap {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            new_index[v] = i;
        }
        let relabel = |d: usize| 4 * new_index[d / 4] + d % 4;
        let mut m = PlanarMap {
            alpha: vec![0; 4 * vertices.len()],
            over: vec![false; 4 * vertices.len()],
            out: vec![false; 4 * vertices.len()],
        };
        for &v in vertices {
            for d in 4 * v..4 * v + 4 {
                let nd = relabel(d);
                m.alpha[nd] = relabel(self.alpha[d]);
                m.over[nd] = self.over[d];
                m.out[nd] = self.out[d];
            }
        }
        m
    }

    /// Slides the edge leaving `d1` over the edge leaving `d2`, creating two
    /// crossings inside the face that holds both darts. Both edges must be
    /// walked the same way relative to their orientation.
    pub fn push_over(&mut self, d1: usize, d2: usize) {
        debug_assert_eq!(self.out[d1], self.out[d2]);
        let (e1_far, e2_far) = (self.alpha[d1], self.alpha[d2]);
        let x = self.alpha.len();
        let y = x + 4;
        self.alpha.extend([usize::MAX; 8]);
        // odd corners carry the pushed edge, which passes over
        self.over.extend([false, true, false, true, false, true, false, true]);
        let forward = self.out[d1];
        // x0 toward y, x1 toward the tip, x2 toward e2's far end, x3 back to d1
        // y0 back to d2, y1 toward the tip, y2 toward x, y3 toward e1's far end
        self.out.extend([!forward, forward, forward, !forward]);
        self.out.extend([!forward, !forward, forward, forward]);
        let mut link = |a: usize, b: usize| {
            self.alpha[a] = b;
            self.alpha[b] = a;
        };
        link(d1, x + 3);
        link(x + 1, y + 1);
        link(y + 3, e1_far);
        link(d2, y);
        link(y + 2, x);
        link(x + 2, e2_far);
    }

    pub fn is_consistent(&self) -> bool {
        (0..self.alpha.len()).all(|d| {
            let a = self.alpha[d];
            a < self.alpha.len() && a != d && self.alpha[a] == d && self.out[a] != self.out[d]
        }) && (0..self.vertex_count()).all(|v| {
            (0..2).all(|k| {
                let (p, q) = (4 * v + k, 4 * v + k + 2);
                self.over[p] == self.over[q] && self.out[p] != self.out[q] && self.over[p] != self.over[p + 1]
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::seifert::seifert_circles;

    #[test]
    fn euler_characteristic_of_faces() {
        for (w, n) in [("1 1 1", 2), ("1 -2 1 2", 3), ("1 2 1 2", 3)] {
            let d = MorseLink::trace_closure(&BraidWord::parse(w, n).unwrap());
            let (m, free) = PlanarMap::from_diagram(&d);
            assert_eq!(free, 0);
            assert!(m.is_consistent());
            assert_eq!(m.faces().darts.len(), m.vertex_count() + 2);
        }
    }

    #[test]
    fn circles_agree_with_strand_count() {
        for (w, n) in [("1 1 1", 2), ("1 -2 1", 3), ("2 2", 4)] {
            let d = MorseLink::trace_closure(&BraidWord::parse(w, n).unwrap());
            let (m, free) = PlanarMap::from_diagram(&d);
            assert_eq!(m.circles().1 + free, seifert_circles(&d));
        }
    }

    #[test]
    fn signs_match_writhe() {
        let d = MorseLink::trace_closure(&BraidWord::parse("1 -1 1", 2).unwrap());
        let (m, _) = PlanarMap::from_diagram(&d);
        assert_eq!((0..3).map(|v| m.sign(v)).collect::<Vec<_>>(), [1, -1, 1]);
    }

    #[test]
    fn push_over_keeps_the_map_planar() {
        let d = MorseLink::plat_closure(&BraidWord::parse("2 1", 4).unwrap()).unwrap();
        let (mut m, _) = PlanarMap::from_diagram(&d);
        let circles_before = m.circles().1;
        let f = m.faces();
        let (a, b) = f
            .darts
            .iter()
            .find_map(|ds| {
                ds.iter()
                    .flat_map(|&a| ds.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| a != b && m.out[a] == m.out[b])
            })
            .unwrap();
        m.push_over(a, b);
        assert!(m.is_consistent());
        assert_eq!(m.faces().darts.len(), m.vertex_count() + 2);
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.circles().1, circles_before);
    }
}
