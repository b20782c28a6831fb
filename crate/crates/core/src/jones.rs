//! Exact bracket and Jones evaluations at `ω_r`.

use crate::braid::BraidWord;
use crate::cyclotomic::Cyclotomic;
use crate::error::JonesError;
use crate::morse::{Closure, MorseLink};
use crate::root::RootOfUnity;
use crate::strands::Layout;
use crate::temperley_lieb::{contract, Contraction};

/// Kauffman bracket of the diagram (blackboard framing, empty diagram = 1)
/// by transfer-matrix contraction.
pub fn jones_at_root(diagram: &MorseLink, root: &RootOfUnity) -> Cyclotomic {
    contract(diagram, root).value
}

/// Like [`jones_at_root`], also reporting the peak basis size.
pub fn jones_with_stats(diagram: &MorseLink, root: &RootOfUnity) -> Contraction {
    contract(diagram, root)
}

pub fn abs_squared(value: &Cyclotomic) -> Cyclotomic {
    value.abs_squared()
}

pub fn to_complex(value: &Cyclotomic) -> (f64, f64) {
    value.to_complex()
}

/// Sum of crossing signs under the canonical orientation.
pub fn writhe(diagram: &MorseLink) -> i64 {
    let layout = Layout::new(diagram);
    let up = layout.orientation();
    diagram
        .events()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.kind.is_crossing())
        .map(|(i, _)| layout.crossing_sign(&up, i) as i64)
        .sum()
}

/// Orientation-normalised value `(-A³)^{-w} ⟨D⟩`.
pub fn writhe_normalized(diagram: &MorseLink, root: &RootOfUnity) -> Cyclotomic {
    let w = writhe(diagram);
    let factor = Cyclotomic::zeta_pow(root.level(), -3 * w * root.a_exponent());
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    &(&factor * &jones_at_root(diagram, root)) * &Cyclotomic::from_int(root.level(), sign)
}

/// Number of closure arcs `n` used in the normalisation `|J| / dⁿ`: half the
/// strands for a plat closure, all of them for a trace closure.
pub fn normalization_power(braid: &BraidWord, closure: Closure) -> Result<usize, JonesError> {
    match closure {
        Closure::Plat if braid.strands() % 2 != 0 => {
            Err(crate::error::LinkError::OddStrands(braid.strands()).into())
        }
        Closure::Plat => Ok(braid.strands() / 2),
        Closure::Trace => Ok(braid.strands()),
    }
}

/// `|J(closure of braid)| / dⁿ`.
pub fn normalized_abs(braid: &BraidWord, closure: Closure, root: &RootOfUnity) -> Result<f64, JonesError> {
    let n = normalization_power(braid, closure)?;
    let diagram = MorseLink::closure(braid, closure)?;
    let value = jones_at_root(&diagram, root);
    Ok(value.modulus() / root.d_real().powi(n as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(r: u32) -> RootOfUnity {
        RootOfUnity::new(r).unwrap()
    }

    #[test]
    fn identity_normalizes_to_one() {
        for r in [5, 7, 8] {
            for n in 1..5 {
                let id = BraidWord::identity(n).unwrap();
                let t = normalized_abs(&id, Closure::Trace, &root(r)).unwrap();
                assert!((t - 1.0).abs() < 1e-12);
                if n % 2 == 0 {
                    let p = normalized_abs(&id, Closure::Plat, &root(r)).unwrap();
                    assert!((p - 1.0).abs() < 1e-12);
                }
            }
        }
        let odd = BraidWord::identity(3).unwrap();
        assert!(normalized_abs(&odd, Closure::Plat, &root(5)).is_err());
    }

    #[test]
    fn writhe_normalization_removes_kinks() {
        let r = root(5);
        let plain = MorseLink::unknot();
        for b in ["1", "-1", "1 1 1", "1 -1"] {
            let kinky = MorseLink::plat_closure(&BraidWord::parse(b, 2).unwrap()).unwrap();
            assert_eq!(writhe_normalized(&kinky, &r), writhe_normalized(&plain, &r), "{b}");
        }
    }

    #[test]
    fn trefoil_writhe() {
        let t = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap());
        assert_eq!(writhe(&t), 3);
        assert_eq!(writhe(&t.mirror()), -3);
    }
}
