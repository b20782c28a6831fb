//! Layered (Morse) encoding of link diagrams.
//!
//! A diagram is read bottom to top as a list of events acting on the strands
//! present at the current level. A `Cup` at `p` creates two strands at
//! positions `p, p + 1`; a `Cap` at `p` joins the strands at `p, p + 1`; a
//! crossing at `p` exchanges them. For `CrossPos` the strand entering from
//! the lower left passes over, for `CrossNeg` the one from the lower right.
//! With both strands oriented upward these are the positive and negative
//! crossings, and the braid letter `σ_i^{±1}` is a crossing at `i - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::LinkError;
use crate::strands::Layout;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    #[serde(rename = "cup")]
    Cup,
    #[serde(rename = "cap")]
    Cap,
    #[serde(rename = "x+")]
    CrossPos,
    #[serde(rename = "x-")]
    CrossNeg,
}

impl EventKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, EventKind::CrossPos | EventKind::CrossNeg)
    }

    /// Strands consumed below and produced above the event.
    pub fn arity(self) -> (usize, usize) {
        match self {
            EventKind::Cup => (0, 2),
            EventKind::Cap => (2, 0),
            EventKind::CrossPos | EventKind::CrossNeg => (2, 2),
        }
    }

    /// The opposite crossing; cups and caps are returned unchanged.
    pub fn flipped(self) -> Self {
        match self {
            EventKind::CrossPos => EventKind::CrossNeg,
            EventKind::CrossNeg => EventKind::CrossPos,
            k => k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Event {
    #[serde(rename = "type")]
    pub kind: EventKind,
    pub pos: usize,
}

impl Event {
    pub fn cup(pos: usize) -> Self {
        Self {
            kind: EventKind::Cup,
            pos,
        }
    }
    pub fn cap(pos: usize) -> Self {
        Self {
            kind: EventKind::Cap,
            pos,
        }
    }
    pub fn cross(pos: usize, positive: bool) -> Self {
        Self {
            kind: if positive {
                EventKind::CrossPos
            } else {
                EventKind::CrossNeg
            },
            pos,
        }
    }

    /// Width after the event, or `None` if it does not fit at `width`.
    pub fn apply_width(&self, width: usize) -> Option<usize> {
        match self.kind {
            EventKind::Cup => (self.pos <= width).then_some(width + 2),
            EventKind::Cap => (self.pos < width.saturating_sub(1)).then(|| width - 2),
            EventKind::CrossPos | EventKind::CrossNeg => (self.pos < width.saturating_sub(1)).then_some(width),
        }
    }

    /// Position above the event of the strand at `q` below it, for strands
    /// the event does not touch.
    pub fn shift_up(&self, q: usize) -> Option<usize> {
        let (below, above) = self.kind.arity();
        if q < self.pos {
            Some(q)
        } else if q >= self.pos + below {
            Some(q + above - below)
        } else {
            None
        }
    }

    /// Inverse of [`Event::shift_up`].
    pub fn shift_down(&self, q: usize) -> Option<usize> {
        let (below, above) = self.kind.arity();
        if q < self.pos {
            Some(q)
        } else if q >= self.pos + above {
            Some(q + below - above)
        } else {
            None
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            EventKind::Cup => "cup",
            EventKind::Cap => "cap",
            EventKind::CrossPos => "x+",
            EventKind::CrossNeg => "x-",
        };
        write!(f, "{name}@{}", self.pos)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    Plat,
    Trace,
}

/// A closed link diagram in layered form. Always valid once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MorseLink {
    events: Vec<Event>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorseDoc {
    events: Vec<Event>,
}

impl<'de> Deserialize<'de> for MorseLink {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = MorseDoc::deserialize(d)?;
        MorseLink::new(doc.events).map_err(serde::de::Error::custom)
    }
}

/// Per-diagram counts used throughout: `g(D)`, `c(D)`, `n(D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramStats {
    pub girth: usize,
    pub crossings: usize,
    pub components: usize,
}

impl MorseLink {
    pub fn new(events: Vec<Event>) -> Result<Self, LinkError> {
        let mut width = 0usize;
        for (index, ev) in events.iter().enumerate() {
            width = ev.apply_width(width).ok_or_else(|| LinkError::InvalidEvent {
                index,
                event: ev.to_string(),
                width,
            })?;
        }
        if width != 0 {
            return Err(LinkError::NotClosed(width));
        }
        Ok(Self { events })
    }

    pub fn empty() -> Self {
        Self { events: Vec::new() }
    }

    pub fn unknot() -> Self {
        Self {
            events: vec![Event::cup(0), Event::cap(0)],
        }
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }

    /// Strand count at each of the `events + 1` levels.
    pub fn widths(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.events.len() + 1);
        let mut cur = 0;
        w.push(cur);
        for ev in &self.events {
            cur = ev.apply_width(cur).expect("validated");
            w.push(cur);
        }
        w
    }

    pub fn girth(&self) -> usize {
        self.widths().into_iter().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind.is_crossing()).count()
    }

    pub fn component_count(&self) -> usize {
        Layout::new(self).component_count()
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            girth: self.girth(),
            crossings: self.crossing_count(),
            components: self.component_count(),
        }
    }

    /// Diagram placed to the right of `self`; the bracket is multiplicative
    /// over this union.
    pub fn disjoint_union(&self, other: &MorseLink) -> MorseLink {
        let mut events = self.events.clone();
        events.extend(other.events.iter().copied());
        MorseLink { events }
    }

    /// Reflection in the projection plane: every crossing flipped.
    pub fn mirror(&self) -> MorseLink {
        MorseLink {
            events: self
                .events
                .iter()
                .map(|e| Event {
                    kind: e.kind.flipped(),
                    pos: e.pos,
                })
                .collect(),
        }
    }

    /// Plat closure of a braid on `2n` strands: `n` side-by-side cups, the
    /// braid, then `n` caps.
    pub fn plat_closure(braid: &BraidWord) -> Result<MorseLink, LinkError> {
        let strands = braid.strands();
        if strands % 2 != 0 {
            return Err(LinkError::OddStrands(strands));
        }
        let n = strands / 2;
        let mut events: Vec<Event> = (0..n).map(|k| Event::cup(2 * k)).collect();
        events.extend(
            braid
                .letters()
                .iter()
                .map(|l| Event::cross(l.generator - 1, l.positive)),
        );
        events.extend((0..n).map(|_| Event::cap(0)));
        MorseLink::new(events)
    }

    /// Trace closure of a braid on `n` strands. The braid occupies positions
    /// `0..n`, the return strands run down at positions `n..2n`, nested so
    /// that strand `j` returns at `2n - 1 - j`.
    pub fn trace_closure(braid: &BraidWord) -> MorseLink {
        let n = braid.strands();
        let mut events: Vec<Event> = (0..n).map(Event::cup).collect();
        events.extend(
            braid
                .letters()
                .iter()
                .map(|l| Event::cross(l.generator - 1, l.positive)),
        );
        events.extend((0..n).rev().map(Event::cap));
        MorseLink::new(events).expect("trace closure is always valid")
    }

    pub fn closure(braid: &BraidWord, closure: Closure) -> Result<MorseLink, LinkError> {
        match closure {
            Closure::Plat => Self::plat_closure(braid),
            Closure::Trace => Ok(Self::trace_closure(braid)),
        }
    }

    /// Recognises the exact event pattern produced by [`trace_closure`].
    ///
    /// [`trace_closure`]: MorseLink::trace_closure
    pub fn as_trace_closure(&self) -> Option<BraidWord> {
        let ev = &self.events;
        let n = ev.iter().take_while(|e| e.kind == EventKind::Cup).count();
        if n == 0 || ev.len() < 2 * n {
            return None;
        }
        if (0..n).any(|k| ev[k].pos != k) {
            return None;
        }
        let caps = &ev[ev.len() - n..];
        if caps
            .iter()
            .enumerate()
            .any(|(k, e)| e.kind != EventKind::Cap || e.pos != n - 1 - k)
        {
            return None;
        }
        let mut tokens = Vec::new();
        for e in &ev[n..ev.len() - n] {
            if !e.kind.is_crossing() || e.pos + 1 >= n {
                return None;
            }
            let g = (e.pos + 1) as i64;
            tokens.push(if e.kind == EventKind::CrossPos { g } else { -g });
        }
        BraidWord::from_tokens(n, &tokens).ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<MorseLink, LinkError> {
        serde_json::from_str(text).map_err(|e| LinkError::Json(e.to_string()))
    }
}
