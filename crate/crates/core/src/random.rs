//! Seeded generators for braids and layered diagrams.

use rand::Rng;

use crate::braid::{BraidWord, Letter};
use crate::morse::{Event, MorseLink};

pub fn random_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| Letter::new(rng.random_range(1..strands), rng.random_bool(0.5)))
        .collect();
    BraidWord::new(strands, letters).expect("generators in range")
}

/// Shape of [`random_diagram`] output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramParams {
    /// largest width the walk may reach
    pub max_width: usize,
    /// events drawn before the remaining strands are capped off
    pub events: usize,
}

impl Default for DiagramParams {
    fn default() -> Self {
        Self {
            max_width: 6,
            events: 12,
        }
    }
}

/// A random valid diagram: a walk over cups, caps and crossings at random
/// positions, closed off with caps at the end.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, params: DiagramParams) -> MorseLink {
    let max_width = params.max_width.max(2) & !1;
    let mut width = 0usize;
    let mut events = Vec::with_capacity(params.events + max_width / 2);
    for _ in 0..params.events {
        let can_cup = width + 2 <= max_width;
        let ev = if width < 2 || (can_cup && rng.random_bool(0.25)) {
            Event::cup(rng.random_range(0..=width))
        } else if rng.random_bool(0.2) {
            Event::cap(rng.random_range(0..width - 1))
        } else {
            Event::cross(rng.random_range(0..width - 1), rng.random_bool(0.5))
        };
        width = ev.apply_width(width).expect("event fits");
        events.push(ev);
    }
    while width > 0 {
        events.push(Event::cap(rng.random_range(0..width - 1)));
        width -= 2;
    }
    MorseLink::new(events).expect("walk closes")
}

/// Random diagram with exactly one component and at least one crossing.
pub fn random_knot_diagram<R: Rng + ?Sized>(rng: &mut R, params: DiagramParams) -> MorseLink {
    loop {
        let d = random_diagram(rng, params);
        if d.crossing_count() > 0 && d.component_count() == 1 {
            return d;
        }
    }
}

/// Random diagram with a crossing that is not a trace closure.
pub fn random_nonbraided_diagram<R: Rng + ?Sized>(rng: &mut R, params: DiagramParams) -> MorseLink {
    loop {
        let d = random_diagram(rng, params);
        if d.crossing_count() > 0 && d.as_trace_closure().is_none() {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagrams_respect_width_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = DiagramParams {
                max_width: 8,
                events: 20,
            };
            let d = random_diagram(&mut rng, p);
            assert!(d.girth() <= 8);
            assert!(d.girth() % 2 == 0);
        }
    }

    #[test]
    fn braids_are_seeded() {
        let a = random_braid(&mut ChaCha8Rng::seed_from_u64(3), 4, 10);
        let b = random_braid(&mut ChaCha8Rng::seed_from_u64(3), 4, 10);
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }
}
