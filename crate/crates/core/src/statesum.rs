//! Brute-force Kauffman state sum, kept independent of the transfer-matrix
//! code as a cross-check.

use std::collections::BTreeMap;

use crate::cyclotomic::Cyclotomic;
use crate::error::JonesError;
use crate::morse::{EventKind, MorseLink};
use crate::root::RootOfUnity;
use crate::strands::Layout;

pub const DEFAULT_CROSSING_CAP: usize = 16;

/// Laurent polynomial in `A` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    /// exponent -> coefficient, zero terms omitted
    pub terms: BTreeMap<i64, i128>,
}

impl LaurentPoly {
    /// Evaluates at `A = ζ_{4r}^{r-1}`.
    pub fn evaluate(&self, root: &RootOfUnity) -> Result<Cyclotomic, JonesError> {
        let n = root.level() as i64;
        let mut v = vec![0i128; n as usize];
        for (&e, &c) in &self.terms {
            let k = (e * root.a_exponent()).rem_euclid(n) as usize;
            v[k] = v[k].checked_add(c).ok_or(JonesError::Overflow)?;
        }
        Cyclotomic::from_group_ring_i128(root.level(), &v).ok_or(JonesError::Overflow)
    }
}

/// Union-find with undo, for depth-first enumeration of smoothings.
struct RollbackUf {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<Option<(u32, u32)>>,
    classes: usize,
}

impl RollbackUf {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
            classes: n,
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra as usize] > self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra as usize] = rb;
        self.size[rb as usize] += self.size[ra as usize];
        self.classes -= 1;
        self.history.push(Some((ra, rb)));
    }

    fn undo(&mut self) {
        if let Some((ra, rb)) = self.history.pop().expect("undo without union") {
            self.parent[ra as usize] = ra;
            self.size[rb as usize] -= self.size[ra as usize];
            self.classes += 1;
        }
    }
}

/// State counts indexed by `(A-exponent + c, loops)`.
struct Counts {
    c: i64,
    stride: usize,
    n: Vec<u64>,
}

impl Counts {
    fn new(c: usize, classes: usize) -> Self {
        let stride = classes + 1;
        Self {
            c: c as i64,
            stride,
            n: vec![0; (2 * c + 1) * stride],
        }
    }

    fn add(&mut self, exp: i64, loops: usize) {
        self.n[(exp + self.c) as usize * self.stride + loops] += 1;
    }

    fn iter(&self) -> impl Iterator<Item = ((i64, usize), u64)> + '_ {
        self.n
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| (((i / self.stride) as i64 - self.c, i % self.stride), k))
    }
}

struct Smoothing {
    /// class ids of the LL, LR, UL, UR segments
    corners: [u32; 4],
    /// whether the vertical smoothing carries `A` (and the horizontal `A⁻¹`)
    vertical_is_a: bool,
}

fn enumerate(
    crossings: &[Smoothing],
    i: usize,
    exp: i64,
    uf: &mut RollbackUf,
    counts: &mut Counts,
) {
    if i == crossings.len() {
        counts.add(exp, uf.classes);
        return;
    }
    let s = &crossings[i];
    let [ll, lr, ul, ur] = s.corners;
    let v = if s.vertical_is_a { 1 } else { -1 };
    if i + 1 == crossings.len() {
        // last crossing: count the merges of both smoothings directly
        let [a, b, c, d] = [ll, lr, ul, ur].map(|x| uf.find(x));
        let merges = |p: u32, q: u32, x: u32, y: u32| {
            if p == q {
                (x != y) as usize
            } else {
                let g = |z: u32| if z == q { p } else { z };
                1 + (g(x) != g(y)) as usize
            }
        };
        counts.add(exp + v, uf.classes - merges(a, c, b, d));
        counts.add(exp - v, uf.classes - merges(a, b, c, d));
        return;
    }

    uf.union(ll, ul);
    uf.union(lr, ur);
    enumerate(crossings, i + 1, exp + v, uf, counts);
    uf.undo();
    uf.undo();

    uf.union(ll, lr);
    uf.union(ul, ur);
    enumerate(crossings, i + 1, exp - v, uf, counts);
    uf.undo();
    uf.undo();
}

fn binomial_row(l: usize) -> Vec<i128> {
    let mut row = vec![1i128];
    for _ in 0..l {
        let mut next = vec![1i128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row
}

/// The bracket as a Laurent polynomial in `A`, summing `A^{#A - #B} d^{loops}`
/// over all smoothings with `d = -A² - A⁻²`.
pub fn bracket_polynomial(diagram: &MorseLink, cap: usize) -> Result<LaurentPoly, JonesError> {
    let c = diagram.crossing_count();
    if c > cap {
        return Err(JonesError::CrossingCap { cap, crossings: c });
    }
    let layout = Layout::new(diagram);
    let mut base = layout.base_union();
    let nseg = layout.segment_count();
    let mut label = vec![u32::MAX; nseg];
    let mut classes = 0u32;
    for s in 0..nseg {
        let r = base.find(s);
        if label[r] == u32::MAX {
            label[r] = classes;
            classes += 1;
        }
    }
    let class = |s: usize, base: &mut crate::strands::UnionFind| label[base.find(s)];

    let mut crossings = Vec::with_capacity(c);
    for (i, ev) in diagram.events().iter().enumerate() {
        if !ev.kind.is_crossing() {
            continue;
        }
        let p = ev.pos;
        crossings.push(Smoothing {
            corners: [
                class(layout.segment(i, p), &mut base),
                class(layout.segment(i, p + 1), &mut base),
                class(layout.segment(i + 1, p), &mut base),
                class(layout.segment(i + 1, p + 1), &mut base),
            ],
            vertical_is_a: ev.kind == EventKind::CrossPos,
        });
    }

    let mut counts = Counts::new(c, classes as usize);
    let mut uf = RollbackUf::new(classes as usize);
    enumerate(&crossings, 0, 0, &mut uf, &mut counts);

    let mut terms: BTreeMap<i64, i128> = BTreeMap::new();
    for ((exp, loops), n) in counts.iter() {
        // d^l = (-1)^l Σ_j C(l, j) A^{4j - 2l}
        let sign: i128 = if loops % 2 == 0 { 1 } else { -1 };
        for (j, b) in binomial_row(loops).into_iter().enumerate() {
            let e = exp + 4 * j as i64 - 2 * loops as i64;
            let t = b
                .checked_mul(n as i128)
                .and_then(|x| x.checked_mul(sign))
                .ok_or(JonesError::Overflow)?;
            let slot = terms.entry(e).or_insert(0);
            *slot = slot.checked_add(t).ok_or(JonesError::Overflow)?;
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(LaurentPoly { terms })
}

/// Bracket at `r` by the full `2^c` state sum; refuses diagrams with more
/// than [`DEFAULT_CROSSING_CAP`] crossings.
pub fn bracket_statesum_oracle(diagram: &MorseLink, r: u32) -> Result<Cyclotomic, JonesError> {
    bracket_statesum_with_cap(diagram, r, DEFAULT_CROSSING_CAP)
}

pub fn bracket_statesum_with_cap(diagram: &MorseLink, r: u32, cap: usize) -> Result<Cyclotomic, JonesError> {
    let root = RootOfUnity::new(r)?;
    bracket_polynomial(diagram, cap)?.evaluate(&root)
}
