//! Link diagrams in layered (Morse) form, exact Kauffman bracket values at
//! roots of unity, Seifert/Vogel machinery and twist surgery.

pub mod braid;
pub mod cyclotomic;
pub mod error;
pub mod jones;
pub mod morse;
pub mod planar;
pub mod random;
pub mod reidemeister;
pub mod root;
pub mod seifert;
pub mod statesum;
pub mod strands;
pub mod surgery;
pub mod temperley_lieb;
pub mod vogel;

pub use braid::{BraidWord, Letter};
pub use cyclotomic::Cyclotomic;
pub use error::{JonesError, LinkError, SeifertError, SurgeryError, VogelError};
pub use morse::{Closure, DiagramStats, Event, EventKind, MorseLink};
pub use root::RootOfUnity;
