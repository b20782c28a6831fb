//! Congruence subgroup membership, full-twist insertion and surgery cost
//! bookkeeping.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cyclotomic::Cyclotomic;
use crate::error::{LinkError, SurgeryError};
use crate::jones::jones_at_root;
use crate::morse::{Event, MorseLink};
use crate::root::RootOfUnity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SL2Matrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl SL2Matrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, SurgeryError> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(SurgeryError::NotUnimodular { a, b, c, d, det });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `[[1, k], [0, 1]]`.
    pub fn shear(k: i64) -> Self {
        Self { a: 1, b: k, c: 0, d: 1 }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Matrix product; `None` on overflow.
    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
        Some(Self {
            a: dot(self.a, o.a, self.b, o.c)?,
            b: dot(self.a, o.b, self.b, o.d)?,
            c: dot(self.c, o.a, self.d, o.c)?,
            d: dot(self.c, o.b, self.d, o.d)?,
        })
    }
}

/// Whether `M ≡ I (mod 4r)` entry-wise.
pub fn gamma4r_member(m: &SL2Matrix, r: u32) -> bool {
    let n = 4 * r as i64;
    let [a, b, c, d] = m.entries();
    (a - 1).rem_euclid(n) == 0 && b.rem_euclid(n) == 0 && c.rem_euclid(n) == 0 && (d - 1).rem_euclid(n) == 0
}

/// First level holding at least `p + m` strands.
pub fn default_twist_level(diagram: &MorseLink, p: usize, m: usize) -> Option<usize> {
    diagram.widths().iter().position(|&w| w >= p + m)
}

/// Inserts `(Δ²)^k` on strands `p..p+m` at `level`. Adds `|k|·m(m-1)`
/// crossings.
pub fn insert_full_twists(
    diagram: &MorseLink,
    level: usize,
    p: usize,
    m: usize,
    k: i64,
) -> Result<MorseLink, LinkError> {
    let widths = diagram.widths();
    let width = *widths.get(level).ok_or(LinkError::LevelOutOfRange {
        level,
        levels: widths.len(),
    })?;
    if m == 0 || p + m > width {
        return Err(LinkError::WindowOutOfRange {
            start: p,
            end: p + m,
            width,
            level,
        });
    }
    let twist = BraidWord::full_twist(m)?;
    let twist = if k < 0 { twist.inverse() } else { twist };
    let block: Vec<Event> = twist
        .letters()
        .iter()
        .map(|l| Event::cross(p + l.generator - 1, l.positive))
        .collect();
    let mut events = diagram.events()[..level].to_vec();
    for _ in 0..k.unsigned_abs() {
        events.extend_from_slice(&block);
    }
    events.extend_from_slice(&diagram.events()[level..]);
    MorseLink::new(events)
}

/// Exact comparison of `|J|²` before and after inserting twists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCheck {
    pub k: i64,
    pub crossings_before: usize,
    pub crossings_after: usize,
    pub abs_squared_before: Vec<String>,
    pub abs_squared_after: Vec<String>,
    pub equal: bool,
}

pub fn check_twist(
    diagram: &MorseLink,
    level: usize,
    p: usize,
    m: usize,
    k: i64,
    root: &RootOfUnity,
) -> Result<TwistCheck, SurgeryError> {
    let after = insert_full_twists(diagram, level, p, m, k)?;
    let before_v: Cyclotomic = jones_at_root(diagram, root).abs_squared();
    let after_v = jones_at_root(&after, root).abs_squared();
    Ok(TwistCheck {
        k,
        crossings_before: diagram.crossing_count(),
        crossings_after: after.crossing_count(),
        equal: before_v == after_v,
        abs_squared_before: before_v.coefficient_strings(),
        abs_squared_after: after_v.coefficient_strings(),
    })
}

/// The `±1/(4r)` surgery check: `4r` full twists.
pub fn check_twist_invariance(
    diagram: &MorseLink,
    level: usize,
    p: usize,
    m: usize,
    root: &RootOfUnity,
) -> Result<TwistCheck, SurgeryError> {
    check_twist(diagram, level, p, m, 4 * root.r() as i64, root)
}

/// Cost of an explicit witness: crossings `c`, matrix bits `b`, moves `γ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryLedger {
    pub crossings_c: u64,
    pub bits_b: u64,
    pub reidemeister_gamma: u64,
}

/// `1 + ⌈log₂(|e| + 1)⌉`: a sign bit plus the magnitude's bit length.
pub fn entry_bits(e: i64) -> u64 {
    1 + (64 - e.unsigned_abs().leading_zeros()) as u64
}

pub fn matrix_bits(matrices: &[SL2Matrix]) -> u64 {
    matrices
        .iter()
        .flat_map(|m| m.entries())
        .map(entry_bits)
        .sum()
}

impl SurgeryLedger {
    pub fn witness(diagram: &MorseLink, matrices: &[SL2Matrix], gamma: u64) -> Self {
        Self {
            crossings_c: diagram.crossing_count() as u64,
            bits_b: matrix_bits(matrices),
            reidemeister_gamma: gamma,
        }
    }
}

pub fn ledger_total(ledger: &SurgeryLedger) -> u64 {
    ledger.crossings_c + ledger.bits_b + ledger.reidemeister_gamma
}
