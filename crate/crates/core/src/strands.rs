//! Segment bookkeeping for layered diagrams: strand tracing, orientation and
//! component counting.
//!
//! Level `l` sits between events `l - 1` and `l`; segment `(l, q)` is the
//! piece of strand at position `q` on that level.

use crate::morse::{Event, EventKind, MorseLink};

/// Corner of a crossing, numbered counter-clockwise from the upper right.
pub const UR: usize = 0;
pub const UL: usize = 1;
pub const LL: usize = 2;
pub const LR: usize = 3;

/// Where a walk along a strand ends up after one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Continues on segment `(level, pos)` in the given direction.
    Segment { level: usize, pos: usize, up: bool },
    /// Reaches corner `corner` of the crossing at event `event`.
    Crossing { event: usize, corner: usize },
}

#[derive(Debug, Clone)]
pub struct Layout<'a> {
    events: &'a [Event],
    widths: Vec<usize>,
    offsets: Vec<usize>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    pub fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

impl<'a> Layout<'a> {
    pub fn new(diagram: &'a MorseLink) -> Self {
        let widths = diagram.widths();
        let mut offsets = Vec::with_capacity(widths.len() + 1);
        let mut acc = 0;
        for &w in &widths {
            offsets.push(acc);
            acc += w;
        }
        offsets.push(acc);
        Self {
            events: diagram.events(),
            widths,
            offsets,
        }
    }

    pub fn events(&self) -> &[Event] {
        self.events
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn segment_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn segment(&self, level: usize, pos: usize) -> usize {
        debug_assert!(pos < self.widths[level]);
        self.offsets[level] + pos
    }

    pub fn level_of(&self, seg: usize) -> (usize, usize) {
        let level = self.offsets.partition_point(|&o| o <= seg) - 1;
        (level, seg - self.offsets[level])
    }

    /// Segment adjacent to a crossing corner.
    pub fn corner_segment(&self, event: usize, corner: usize) -> usize {
        let p = self.events[event].pos;
        match corner {
            UR => self.segment(event + 1, p + 1),
            UL => self.segment(event + 1, p),
            LL => self.segment(event, p),
            LR => self.segment(event, p + 1),
            _ => unreachable!("corner index"),
        }
    }

    /// Direction a walk leaves a crossing through `corner`: upward for the
    /// upper corners.
    pub fn leave_corner(&self, event: usize, corner: usize) -> Step {
        let p = self.events[event].pos;
        match corner {
            UR => Step::Segment { level: event + 1, pos: p + 1, up: true },
            UL => Step::Segment { level: event + 1, pos: p, up: true },
            LL => Step::Segment { level: event, pos: p, up: false },
            LR => Step::Segment { level: event, pos: p + 1, up: false },
            _ => unreachable!("corner index"),
        }
    }

    /// One step from segment `(level, pos)` moving in direction `up`, passing
    /// through cups, caps and untouched strands but stopping at crossings.
    pub fn step(&self, level: usize, pos: usize, up: bool) -> Step {
        if up {
            let ev = self.events[level];
            match ev.shift_up(pos) {
                Some(q) => Step::Segment { level: level + 1, pos: q, up: true },
                None => match ev.kind {
                    EventKind::Cap => {
                        let other = if pos == ev.pos { ev.pos + 1 } else { ev.pos };
                        Step::Segment { level, pos: other, up: false }
                    }
                    EventKind::CrossPos | EventKind::CrossNeg => Step::Crossing {
                        event: level,
                        corner: if pos == ev.pos { LL } else { LR },
                    },
                    EventKind::Cup => unreachable!("cups touch no strand below"),
                },
            }
        } else {
            let ev = self.events[level - 1];
            match ev.shift_down(pos) {
                Some(q) => Step::Segment { level: level - 1, pos: q, up: false },
                None => match ev.kind {
                    EventKind::Cup => {
                        let other = if pos == ev.pos { ev.pos + 1 } else { ev.pos };
                        Step::Segment { level, pos: other, up: true }
                    }
                    EventKind::CrossPos | EventKind::CrossNeg => Step::Crossing {
                        event: level - 1,
                        corner: if pos == ev.pos { UL } else { UR },
                    },
                    EventKind::Cap => unreachable!("caps touch no strand above"),
                },
            }
        }
    }

    /// Union-find over segments joined through every non-crossing event.
    pub(crate) fn base_union(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.segment_count());
        for (i, ev) in self.events.iter().enumerate() {
            for q in 0..self.widths[i] {
                if let Some(q2) = ev.shift_up(q) {
                    uf.union(self.segment(i, q), self.segment(i + 1, q2));
                }
            }
            match ev.kind {
                EventKind::Cup => {
                    uf.union(self.segment(i + 1, ev.pos), self.segment(i + 1, ev.pos + 1));
                }
                EventKind::Cap => {
                    uf.union(self.segment(i, ev.pos), self.segment(i, ev.pos + 1));
                }
                _ => {}
            }
        }
        uf
    }

    /// Link component index of every segment, numbered by first appearance.
    pub fn component_of_segments(&self) -> (Vec<usize>, usize) {
        let mut uf = self.base_union();
        for (i, ev) in self.events.iter().enumerate() {
            if ev.kind.is_crossing() {
                uf.union(self.segment(i, ev.pos), self.segment(i + 1, ev.pos + 1));
                uf.union(self.segment(i, ev.pos + 1), self.segment(i + 1, ev.pos));
            }
        }
        let n = self.segment_count();
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for s in 0..n {
            let root = uf.find(s);
            if label[root] == usize::MAX {
                label[root] = next;
                next += 1;
            }
            out[s] = label[root];
        }
        (out, next)
    }

    pub fn component_count(&self) -> usize {
        self.component_of_segments().1
    }

    /// Upward flag of every segment. Each component is oriented so that the
    /// left leg of its lowest cup ascends; this makes braid strands of a
    /// trace closure point upward.
    pub fn orientation(&self) -> Vec<bool> {
        let n = self.segment_count();
        let mut up = vec![false; n];
        let mut done = vec![false; n];
        for (i, ev) in self.events.iter().enumerate() {
            if ev.kind != EventKind::Cup {
                continue;
            }
            let start = self.segment(i + 1, ev.pos);
            if done[start] {
                continue;
            }
            let (mut level, mut pos, mut dir) = (i + 1, ev.pos, true);
            loop {
                let s = self.segment(level, pos);
                if done[s] {
                    debug_assert_eq!(up[s], dir, "inconsistent orientation");
                    break;
                }
                done[s] = true;
                up[s] = dir;
                let next = match self.step(level, pos, dir) {
                    s @ Step::Segment { .. } => s,
                    Step::Crossing { event, corner } => self.leave_corner(event, opposite(corner)),
                };
                match next {
                    Step::Segment { level: l, pos: p, up: u } => {
                        level = l;
                        pos = p;
                        dir = u;
                    }
                    Step::Crossing { .. } => unreachable!(),
                }
            }
        }
        up
    }

    /// Upward flags of the strands at the lower-left and lower-right corners
    /// of crossing `event`.
    pub fn crossing_directions(&self, up: &[bool], event: usize) -> (bool, bool) {
        let p = self.events[event].pos;
        (up[self.segment(event, p)], up[self.segment(event, p + 1)])
    }

    /// Writhe sign of crossing `event` under orientation `up`.
    pub fn crossing_sign(&self, up: &[bool], event: usize) -> i32 {
        let (a, b) = self.crossing_directions(up, event);
        let base = if self.events[event].kind == EventKind::CrossPos { 1 } else { -1 };
        if a == b {
            base
        } else {
            -base
        }
    }
}

/// Corner diagonally across a crossing, along the same strand.
pub fn opposite(corner: usize) -> usize {
    (corner + 2) % 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn trace_closure_strands_point_up() {
        let b = BraidWord::parse("1 -2 1", 3).unwrap();
        let d = MorseLink::trace_closure(&b);
        let layout = Layout::new(&d);
        let up = layout.orientation();
        for (i, ev) in d.events().iter().enumerate() {
            if ev.kind.is_crossing() {
                assert_eq!(layout.crossing_directions(&up, i), (true, true));
            }
        }
        // return strands descend
        let top = d.events().len() - 3;
        for q in 3..6 {
            assert!(!up[layout.segment(top, q)]);
        }
    }

    #[test]
    fn writhe_of_trefoil() {
        let d = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap());
        let layout = Layout::new(&d);
        let up = layout.orientation();
        let w: i32 = (0..d.events().len())
            .filter(|&i| d.events()[i].kind.is_crossing())
            .map(|i| layout.crossing_sign(&up, i))
            .sum();
        assert_eq!(w, 3);
    }

    #[test]
    fn level_lookup_inverts_segment() {
        let d = MorseLink::trace_closure(&BraidWord::parse("1 2", 3).unwrap());
        let layout = Layout::new(&d);
        for s in 0..layout.segment_count() {
            let (l, q) = layout.level_of(s);
            assert_eq!(layout.segment(l, q), s);
        }
    }
}
