//! Reidemeister moves and planar exchanges on layered diagrams.
//!
//! Insertion moves act on level `level` (between events `level - 1` and
//! `level`); removal and rewriting moves name the index of the first event
//! of the pattern.

use serde::{Deserialize, Serialize};

use crate::error::LinkError;
use crate::morse::{Event, EventKind, MorseLink};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Curl on the strand at `pos`. The loop sits to the right of the strand,
    /// or to the left with `left`.
    R1Add {
        level: usize,
        pos: usize,
        positive: bool,
        left: bool,
    },
    /// Removes a curl `cup, crossing, cap` starting at `index`.
    R1Remove { index: usize },
    /// Two opposite crossings on strands `pos, pos+1`.
    R2Add {
        level: usize,
        pos: usize,
        positive: bool,
    },
    /// Removes two opposite crossings at `index, index+1`.
    R2Remove { index: usize },
    /// Slides the middle strand of three crossings at `index..index+3`.
    R3 { index: usize },
    /// Swaps the events `index, index+1` when they touch disjoint strands.
    Exchange { index: usize },
}

impl Move {
    /// Whether the move counts towards `γ`; exchanges are planar isotopies.
    pub fn is_reidemeister(&self) -> bool {
        !matches!(self, Move::Exchange { .. })
    }
}

fn mismatch(index: usize, reason: &str) -> LinkError {
    LinkError::PatternMismatch {
        index,
        reason: reason.to_string(),
    }
}

fn splice(events: &[Event], at: usize, remove: usize, insert: &[Event]) -> Vec<Event> {
    let mut out = Vec::with_capacity(events.len() + insert.len());
    out.extend_from_slice(&events[..at]);
    out.extend_from_slice(insert);
    out.extend_from_slice(&events[at + remove..]);
    out
}

fn check_level(widths: &[usize], level: usize, pos: usize, need: usize) -> Result<(), LinkError> {
    if level >= widths.len() {
        return Err(LinkError::LevelOutOfRange {
            level,
            levels: widths.len(),
        });
    }
    if pos + need > widths[level] {
        return Err(LinkError::WindowOutOfRange {
            start: pos,
            end: pos + need,
            width: widths[level],
            level,
        });
    }
    Ok(())
}

fn get(events: &[Event], index: usize, n: usize) -> Result<&[Event], LinkError> {
    events
        .get(index..index + n)
        .ok_or_else(|| mismatch(index, "pattern runs past the last event"))
}

/// Sign flip of an R3 triple is a braid relation exactly when the outer
/// crossings agree with each other only if they also agree with the middle.
fn r3_valid(a: EventKind, b: EventKind, c: EventKind) -> bool {
    !(a == c && a != b)
}

pub fn apply_reidemeister(diagram: &MorseLink, mv: Move) -> Result<MorseLink, LinkError> {
    let ev = diagram.events();
    let events = match mv {
        Move::R1Add {
            level,
            pos,
            positive,
            left,
        } => {
            check_level(&diagram.widths(), level, pos, 1)?;
            let curl = if left {
                [Event::cup(pos), Event::cross(pos + 1, positive), Event::cap(pos)]
            } else {
                [Event::cup(pos + 1), Event::cross(pos, positive), Event::cap(pos + 1)]
            };
            splice(ev, level, 0, &curl)
        }
        Move::R1Remove { index } => {
            let w = get(ev, index, 3)?;
            let (cup, x, cap) = (w[0], w[1], w[2]);
            let right = cup.kind == EventKind::Cup
                && x.kind.is_crossing()
                && cap.kind == EventKind::Cap
                && cup.pos == cap.pos
                && cup.pos >= 1
                && x.pos + 1 == cup.pos;
            let left = cup.kind == EventKind::Cup
                && x.kind.is_crossing()
                && cap.kind == EventKind::Cap
                && cup.pos == cap.pos
                && x.pos == cup.pos + 1;
            if !(right || left) {
                return Err(mismatch(index, "not a curl"));
            }
            splice(ev, index, 3, &[])
        }
        Move::R2Add { level, pos, positive } => {
            check_level(&diagram.widths(), level, pos, 2)?;
            splice(ev, level, 0, &[Event::cross(pos, positive), Event::cross(pos, !positive)])
        }
        Move::R2Remove { index } => {
            let w = get(ev, index, 2)?;
            if !(w[0].kind.is_crossing() && w[1].kind == w[0].kind.flipped() && w[0].pos == w[1].pos) {
                return Err(mismatch(index, "not a pair of opposite crossings"));
            }
            splice(ev, index, 2, &[])
        }
        Move::R3 { index } => {
            let w = get(ev, index, 3)?;
            if !w.iter().all(|e| e.kind.is_crossing()) {
                return Err(mismatch(index, "R3 needs three crossings"));
            }
            let (p, q) = (w[0].pos, w[1].pos);
            let shape_down = q == p + 1 && w[2].pos == p;
            let shape_up = p == q + 1 && w[2].pos == p;
            if !(shape_down || shape_up) {
                return Err(mismatch(index, "crossings are not a triangle"));
            }
            if !r3_valid(w[0].kind, w[1].kind, w[2].kind) {
                return Err(mismatch(index, "crossing types do not allow the slide"));
            }
            let new = [
                Event { kind: w[2].kind, pos: q },
                Event { kind: w[1].kind, pos: p },
                Event { kind: w[0].kind, pos: q },
            ];
            splice(ev, index, 3, &new)
        }
        Move::Exchange { index } => {
            let w = get(ev, index, 2)?;
            let (a, b) = (w[0], w[1]);
            let (a_in, a_out) = a.kind.arity();
            let (b_in, b_out) = b.kind.arity();
            let swapped = if b.pos + b_in <= a.pos {
                [b, Event { kind: a.kind, pos: a.pos + b_out - b_in }]
            } else if b.pos >= a.pos + a_out {
                [Event { kind: b.kind, pos: b.pos + a_in - a_out }, a]
            } else {
                return Err(mismatch(index, "events share a strand"));
            };
            splice(ev, index, 2, &swapped)
        }
    };
    MorseLink::new(events)
}

/// Applies moves while counting them; only R1/R2/R3 add to `γ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCounter {
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub exchanges: usize,
}

impl MoveCounter {
    pub fn apply(&mut self, diagram: &MorseLink, mv: Move) -> Result<MorseLink, LinkError> {
        let out = apply_reidemeister(diagram, mv)?;
        match mv {
            Move::R1Add { .. } | Move::R1Remove { .. } => self.r1 += 1,
            Move::R2Add { .. } | Move::R2Remove { .. } => self.r2 += 1,
            Move::R3 { .. } => self.r3 += 1,
            Move::Exchange { .. } => self.exchanges += 1,
        }
        Ok(out)
    }

    pub fn gamma(&self) -> usize {
        self.r1 + self.r2 + self.r3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::jones::jones_at_root;
    use crate::root::RootOfUnity;

    fn trefoil() -> MorseLink {
        MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap())
    }

    #[test]
    fn r2_round_trip() {
        let t = trefoil();
        let root = RootOfUnity::new(5).unwrap();
        let added = apply_reidemeister(
            &t,
            Move::R2Add {
                level: 2,
                pos: 0,
                positive: false,
            },
        )
        .unwrap();
        assert_eq!(added.crossing_count(), 5);
        assert_eq!(jones_at_root(&added, &root), jones_at_root(&t, &root));
        let back = apply_reidemeister(&added, Move::R2Remove { index: 2 }).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn r1_curls_both_sides() {
        let t = trefoil();
        for left in [false, true] {
            for positive in [false, true] {
                let mv = Move::R1Add {
                    level: 3,
                    pos: 1,
                    positive,
                    left,
                };
                let added = apply_reidemeister(&t, mv).unwrap();
                assert_eq!(added.crossing_count(), 4);
                assert_eq!(added.component_count(), 1);
                let back = apply_reidemeister(&added, Move::R1Remove { index: 3 }).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn mismatches_are_reported() {
        let t = trefoil();
        assert!(matches!(
            apply_reidemeister(&t, Move::R2Remove { index: 2 }),
            Err(LinkError::PatternMismatch { index: 2, .. })
        ));
        assert!(matches!(
            apply_reidemeister(&t, Move::R3 { index: 2 }),
            Err(LinkError::PatternMismatch { .. })
        ));
        assert!(matches!(
            apply_reidemeister(
                &t,
                Move::R2Add {
                    level: 0,
                    pos: 0,
                    positive: true
                }
            ),
            Err(LinkError::WindowOutOfRange { .. })
        ));
    }

    #[test]
    fn exchange_commutes_distant_events() {
        let d = MorseLink::plat_closure(&BraidWord::parse("1 3", 4).unwrap()).unwrap();
        let swapped = apply_reidemeister(&d, Move::Exchange { index: 2 }).unwrap();
        assert_eq!(swapped.events()[2], Event::cross(2, true));
        assert_eq!(swapped.stats(), d.stats());
        let root = RootOfUnity::new(7).unwrap();
        assert_eq!(jones_at_root(&swapped, &root), jones_at_root(&d, &root));
        // cup then an unrelated crossing
        let s2 = apply_reidemeister(&d, Move::Exchange { index: 1 });
        assert!(s2.is_ok());
        let mut c = MoveCounter::default();
        c.apply(&d, Move::Exchange { index: 2 }).unwrap();
        assert_eq!(c.gamma(), 0);
    }
}
