//! Vogel's algorithm: Reidemeister II moves across defect faces until the
//! Seifert circles are coherently nested, then a closed braid read-off.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::VogelError;
use crate::morse::MorseLink;
use crate::planar::{Faces, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VogelResult {
    pub braid: BraidWord,
    pub rii_moves: usize,
}

/// Options for [`vogel_braiding_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VogelOptions {
    /// Return diagrams that already are trace closures unchanged.
    pub shortcut_closed_braids: bool,
}

impl Default for VogelOptions {
    fn default() -> Self {
        Self {
            shortcut_closed_braids: true,
        }
    }
}

/// A braid whose trace closure is isotopic to the diagram (through R2 moves
/// and isotopy of the sphere only), and the number of R2 moves used.
pub fn vogel_braiding(diagram: &MorseLink) -> Result<VogelResult, VogelError> {
    vogel_braiding_with(diagram, VogelOptions::default())
}

pub fn vogel_braiding_with(diagram: &MorseLink, options: VogelOptions) -> Result<VogelResult, VogelError> {
    if options.shortcut_closed_braids {
        if let Some(braid) = diagram.as_trace_closure() {
            return Ok(VogelResult { braid, rii_moves: 0 });
        }
    }
    let (map, free) = PlanarMap::from_diagram(diagram);
    let mut braid: Option<BraidWord> = None;
    let mut rii_moves = 0;
    for comp in map.components() {
        let mut sub = map.restrict(&comp);
        rii_moves += remove_defects(&mut sub)?;
        let b = read_off(&sub)?;
        braid = Some(match braid {
            None => b,
            Some(acc) => acc.direct_sum(&b),
        });
    }
    if free > 0 {
        let id = BraidWord::identity(free).expect("nonzero strands");
        braid = Some(match braid {
            None => id,
            Some(acc) => acc.direct_sum(&id),
        });
    }
    let braid = braid.ok_or_else(|| VogelError::ReadOff("empty diagram".into()))?;
    Ok(VogelResult { braid, rii_moves })
}

/// First defect: in faces ordered by their smallest dart, the first pair of
/// darts on different circles walked in the same direction.
fn find_defect(faces: &Faces, circle: &[usize], out: &[bool]) -> Option<(usize, usize)> {
    for ds in &faces.darts {
        for (i, &a) in ds.iter().enumerate() {
            for &b in &ds[i + 1..] {
                if circle[a] != circle[b] && out[a] == out[b] {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

fn remove_defects(map: &mut PlanarMap) -> Result<usize, VogelError> {
    let s = map.circles().1;
    let budget = 4 * s * s + 16;
    let mut moves = 0;
    loop {
        let faces = map.faces();
        let (circle, _) = map.circles();
        let Some((a, b)) = find_defect(&faces, &circle, &map.out) else {
            return Ok(moves);
        };
        if moves == budget {
            return Err(VogelError::NoProgress(moves));
        }
        map.push_over(a, b);
        moves += 1;
        debug_assert!(map.is_consistent());
    }
}

/// Reads the closed braid off a connected map without defects. Circles are
/// numbered from the end of the (path-shaped) Seifert graph whose private
/// face runs against the orientation; that circle becomes the rightmost
/// braid strand.
fn read_off(map: &PlanarMap) -> Result<BraidWord, VogelError> {
    let faces = map.faces();
    let (circle, s) = map.circles();
    let v = map.vertex_count();

    let mut touching: Vec<[usize; 2]> = Vec::with_capacity(v);
    let mut neighbours = vec![Vec::new(); s];
    for x in 0..v {
        let mut cs: Vec<usize> = (4 * x..4 * x + 4).map(|d| circle[d]).collect();
        cs.sort_unstable();
        cs.dedup();
        if cs.len() != 2 {
            return Err(VogelError::ReadOff(format!("crossing {x} touches {} circles", cs.len())));
        }
        touching.push([cs[0], cs[1]]);
        for (a, b) in [(cs[0], cs[1]), (cs[1], cs[0])] {
            if !neighbours[a].contains(&b) {
                neighbours[a].push(b);
            }
        }
    }
    if neighbours.iter().any(|n| n.len() > 2 || n.is_empty()) {
        return Err(VogelError::ReadOff("Seifert graph is not a path".into()));
    }

    let inner_face = faces
        .darts
        .iter()
        .position(|ds| {
            let c = circle[ds[0]];
            neighbours[c].len() == 1 && ds.iter().all(|&d| circle[d] == c && !map.out[d])
        })
        .ok_or_else(|| VogelError::ReadOff("no inner end circle".into()))?;

    // order[k] = k-th circle from the inner end
    let mut order = vec![circle[faces.darts[inner_face][0]]];
    while order.len() < s {
        let last = *order.last().unwrap();
        let prev = if order.len() > 1 { Some(order[order.len() - 2]) } else { None };
        let next = neighbours[last]
            .iter()
            .copied()
            .find(|&c| Some(c) != prev)
            .ok_or_else(|| VogelError::ReadOff("Seifert graph is not a path".into()))?;
        order.push(next);
    }
    let mut rank = vec![0; s];
    for (k, &c) in order.iter().enumerate() {
        rank[c] = k;
    }

    // Cut every circle along a ray from the inner face outward, then list
    // the crossings met along each circle in orientation order.
    let mut face = inner_face;
    let mut sequences: Vec<Vec<usize>> = Vec::with_capacity(s);
    for &c in &order {
        let d = *faces.darts[face]
            .iter()
            .find(|&&d| circle[d] == c)
            .ok_or_else(|| VogelError::ReadOff("cut ray blocked".into()))?;
        face = faces.face_of[map.alpha[d]];
        let cut = if map.out[d] { d } else { map.alpha[d] };
        let mut seq = Vec::new();
        let mut o = cut;
        loop {
            let x = map.alpha[o];
            seq.push(x / 4);
            o = map.smoothing_successor(x);
            if o == cut {
                break;
            }
        }
        sequences.push(seq);
    }

    let mut ptr = vec![0; s];
    let mut letters = Vec::with_capacity(v);
    'emit: while letters.len() < v {
        for k in 0..s.saturating_sub(1) {
            let (a, b) = (&sequences[k], &sequences[k + 1]);
            if ptr[k] < a.len() && ptr[k + 1] < b.len() && a[ptr[k]] == b[ptr[k + 1]] {
                let x = a[ptr[k]];
                debug_assert_eq!(
                    {
                        let mut r = [rank[touching[x][0]], rank[touching[x][1]]];
                        r.sort_unstable();
                        r
                    },
                    [k, k + 1]
                );
                letters.push(Letter::new(s - 1 - k, map.sign(x) > 0));
                ptr[k] += 1;
                ptr[k + 1] += 1;
                continue 'emit;
            }
        }
        return Err(VogelError::ReadOff("crossing order is not braid-like".into()));
    }
    BraidWord::new(s, letters).map_err(|e| VogelError::ReadOff(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::jones::jones_at_root;
    use crate::root::RootOfUnity;
    use crate::seifert::seifert_circles;

    fn full() -> VogelOptions {
        VogelOptions {
            shortcut_closed_braids: false,
        }
    }

    fn check(d: &MorseLink) -> VogelResult {
        let res = vogel_braiding_with(d, full()).unwrap();
        let s = seifert_circles(d);
        assert_eq!(res.braid.strands(), s, "{d:?}");
        assert!(res.rii_moves <= s * s);
        let out = MorseLink::trace_closure(&res.braid);
        assert_eq!(seifert_circles(&out), s);
        for r in [5, 7] {
            let root = RootOfUnity::new(r).unwrap();
            assert_eq!(jones_at_root(d, &root), jones_at_root(&out, &root), "{d:?} -> {}", res.braid);
        }
        res
    }

    #[test]
    fn closed_braids_need_no_moves() {
        for (w, n) in [("1 1 1", 2), ("1 -2 1 2", 3), ("1 2 3 -1", 4), ("", 2)] {
            let d = MorseLink::trace_closure(&BraidWord::parse(w, n).unwrap());
            let res = check(&d);
            assert_eq!(res.rii_moves, 0);
            let quick = vogel_braiding(&d).unwrap();
            assert_eq!(quick.braid.to_string(), w);
        }
    }

    #[test]
    fn plat_closures() {
        for (w, n) in [("1", 2), ("1 1 1", 2), ("2", 4), ("2 -1 2", 4), ("1 2 3 2 1", 4), ("-2 -2 -2", 4)] {
            let d = MorseLink::plat_closure(&BraidWord::parse(w, n).unwrap()).unwrap();
            check(&d);
        }
    }

    #[test]
    fn crossingless_diagrams() {
        let u = MorseLink::unknot();
        let three = u.disjoint_union(&u).disjoint_union(&u);
        let res = vogel_braiding(&three).unwrap();
        assert_eq!(res.braid, BraidWord::identity(3).unwrap());
        assert!(vogel_braiding(&MorseLink::empty()).is_err());
    }
}
