//! Seifert circles, Euler characteristic and genus of a diagram.

use serde::{Deserialize, Serialize};

use crate::error::SeifertError;
use crate::morse::MorseLink;
use crate::strands::Layout;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub circles: usize,
    /// `χ = s - c` of the Seifert surface.
    pub euler_characteristic: i64,
    /// `(c - s + 1) / 2` for single-component diagrams.
    pub genus_if_knot: Option<usize>,
}

/// Witness of `s ≤ c + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertBound {
    pub holds: bool,
    pub circles: usize,
    pub crossings: usize,
    pub components: usize,
}

/// Number of loops after the oriented smoothing of every crossing.
pub fn seifert_circles(diagram: &MorseLink) -> usize {
    let layout = Layout::new(diagram);
    let up = layout.orientation();
    let mut uf = layout.base_union();
    for (i, ev) in diagram.events().iter().enumerate() {
        if !ev.kind.is_crossing() {
            continue;
        }
        let p = ev.pos;
        let (ll, lr) = (layout.segment(i, p), layout.segment(i, p + 1));
        let (ul, ur) = (layout.segment(i + 1, p), layout.segment(i + 1, p + 1));
        let (a, b) = layout.crossing_directions(&up, i);
        if a == b {
            uf.union(ll, ul);
            uf.union(lr, ur);
        } else {
            uf.union(ll, lr);
            uf.union(ul, ur);
        }
    }
    uf.classes()
}

pub fn seifert_data(diagram: &MorseLink) -> SeifertData {
    let s = seifert_circles(diagram);
    let c = diagram.crossing_count();
    let genus_if_knot = (diagram.component_count() == 1).then(|| {
        let twice = c + 1 - s;
        debug_assert!(twice % 2 == 0, "c - s + 1 odd for a knot");
        twice / 2
    });
    SeifertData {
        circles: s,
        euler_characteristic: s as i64 - c as i64,
        genus_if_knot,
    }
}

/// Genus of the Seifert surface of a knot diagram.
pub fn genus(diagram: &MorseLink) -> Result<usize, SeifertError> {
    let n = diagram.component_count();
    seifert_data(diagram)
        .genus_if_knot
        .ok_or(SeifertError::NotAKnot(n))
}

pub fn check_seifert_bound(diagram: &MorseLink) -> SeifertBound {
    let circles = seifert_circles(diagram);
    let crossings = diagram.crossing_count();
    let components = diagram.component_count();
    SeifertBound {
        holds: circles <= crossings + components,
        circles,
        crossings,
        components,
    }
}
