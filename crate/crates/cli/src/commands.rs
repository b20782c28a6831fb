//! Subcommand bodies. Each returns the `outputs` document of a [`RunReport`].
//!
//! [`RunReport`]: crate::report::RunReport

use anyhow::{bail, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use rootjones_core::jones::{jones_with_stats, normalized_abs, writhe, writhe_normalized};
use rootjones_core::seifert::{check_seifert_bound, seifert_data};
use rootjones_core::statesum::{bracket_statesum_oracle, DEFAULT_CROSSING_CAP};
use rootjones_core::surgery::{check_twist, default_twist_level};
use rootjones_core::vogel::vogel_braiding;
use rootjones_core::{BraidWord, Closure, MorseLink, RootOfUnity};
use rootjones_qsim::estimate::{
    estimate_plat, estimate_trace_dqc1, exact_normalized, girth_reduction_pipeline, repeat_estimates,
};
use rootjones_qsim::QsimError;

use crate::input::Input;
use crate::report::exact_value;

pub fn stats(diagram: &MorseLink) -> Value {
    let s = diagram.stats();
    let seifert = seifert_data(diagram);
    let bound = check_seifert_bound(diagram);
    json!({
        "girth": s.girth,
        "crossings": s.crossings,
        "components": s.components,
        "seifert_circles": seifert.circles,
        "euler_characteristic": seifert.euler_characteristic,
        "genus": seifert.genus_if_knot,
        "writhe": writhe(diagram),
        "seifert_bound": {
            "holds": bound.holds,
            "circles": bound.circles,
            "crossings_plus_components": bound.crossings + bound.components,
        },
    })
}

/// Bracket, orientation-normalised value and, for braids, `|J| / dⁿ`. The
/// state-sum cross-check runs when the diagram is small enough.
pub fn jones(input: &Input, closure: Closure, root: &RootOfUnity, oracle: bool) -> Result<Value> {
    let diagram = input.diagram(closure)?;
    let contraction = jones_with_stats(&diagram, root);
    let mut out = json!({
        "r": root.r(),
        "bracket": exact_value(&contraction.value),
        "jones": exact_value(&writhe_normalized(&diagram, root)),
        "abs_squared": exact_value(&contraction.value.abs_squared()),
        "modulus": contraction.value.modulus(),
        "d": root.d_real(),
        "peak_basis": contraction.peak_basis,
    });
    if let Input::Braid(b) = input {
        out["normalized_abs"] = json!(normalized_abs(b, closure, root)?);
    }
    if oracle && diagram.crossing_count() <= DEFAULT_CROSSING_CAP {
        let v = bracket_statesum_oracle(&diagram, root.r())?;
        out["oracle_equal"] = json!(v == contraction.value);
    }
    Ok(out)
}

pub fn vogel(input: &Input, closure: Closure, root: &RootOfUnity) -> Result<Value> {
    let diagram = input.diagram(closure)?;
    let before = seifert_data(&diagram).circles;
    let res = vogel_braiding(&diagram)?;
    let out = MorseLink::trace_closure(&res.braid);
    let after = seifert_data(&out).circles;
    let s = res.braid.strands();
    Ok(json!({
        "braid": res.braid.to_string(),
        "strands": s,
        "rii_moves": res.rii_moves,
        "braided_input": diagram.as_trace_closure().is_some(),
        "seifert_circles_before": before,
        "seifert_circles_after": after,
        "move_bound_holds": res.rii_moves <= s * s,
        "bracket_equal": jones_with_stats(&diagram, root).value == jones_with_stats(&out, root).value,
        "r": root.r(),
    }))
}

/// Inserts `k` full twists (default `4r`) on strands `p..p+m` and compares
/// `|J|²` exactly.
pub fn twist(
    input: &Input,
    closure: Closure,
    root: &RootOfUnity,
    level: Option<usize>,
    p: usize,
    m: usize,
    k: Option<i64>,
) -> Result<Value> {
    let diagram = input.diagram(closure)?;
    let level = match level {
        Some(l) => l,
        None => match default_twist_level(&diagram, p, m) {
            Some(l) => l,
            None => bail!("no level of the diagram has {} strands", p + m),
        },
    };
    let k = k.unwrap_or(4 * root.r() as i64);
    let check = check_twist(&diagram, level, p, m, k, root)?;
    Ok(json!({
        "level": level,
        "p": p,
        "m": m,
        "k": k,
        "expected_crossing_delta": k.unsigned_abs() as usize * m * (m - 1),
        "check": check,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    Plat,
    Dqc1,
    Pipeline,
}

impl Estimator {
    fn closure(self) -> Closure {
        match self {
            Estimator::Dqc1 => Closure::Trace,
            _ => Closure::Plat,
        }
    }

    fn run(
        self,
        braid: &BraidWord,
        r: u32,
        eps: f64,
        samples: Option<usize>,
        rng: &mut ChaCha8Rng,
    ) -> Result<rootjones_qsim::EstimateReport, QsimError> {
        match self {
            Estimator::Plat => estimate_plat(braid, r, eps, samples, rng),
            Estimator::Dqc1 => estimate_trace_dqc1(braid, r, eps, samples, rng),
            Estimator::Pipeline => girth_reduction_pipeline(braid, r, eps, samples, rng),
        }
    }
}

/// One estimate from `seed`, then, for `reps > 1`, the success fraction over
/// `reps` runs on streams `0..reps` of `seed`. The pipeline is also compared
/// against the direct plat estimate at `2ε`.
pub fn simulate(
    which: Estimator,
    braid: &BraidWord,
    r: u32,
    eps: f64,
    samples: Option<usize>,
    seed: u64,
    reps: usize,
) -> Result<Value> {
    if reps == 0 {
        bail!("--reps must be positive");
    }
    let exact = exact_normalized(braid, which.closure(), r)?;
    let mut first = which.run(braid, r, eps, samples, &mut ChaCha8Rng::seed_from_u64(seed))?;
    let mut out = json!({ "exact": exact });
    if reps > 1 {
        let summary = repeat_estimates(reps, seed, exact, eps, |rng| which.run(braid, r, eps, samples, rng))?;
        first.empirical_success = Some(summary.empirical_success);
        out["repetitions"] = json!(summary);
        if which == Estimator::Pipeline {
            let mut agree = 0;
            for i in 0..reps {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                let direct = estimate_plat(braid, r, eps, samples, &mut rng)?;
                let piped = girth_reduction_pipeline(braid, r, eps, samples, &mut rng)?;
                if (direct.point_estimate - piped.point_estimate).abs() < 2.0 * eps {
                    agree += 1;
                }
            }
            out["direct_agreement"] = json!(agree as f64 / reps as f64);
        }
    }
    out["estimate"] = json!(first);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root5() -> RootOfUnity {
        RootOfUnity::new(5).unwrap()
    }

    #[test]
    fn trefoil_stats() {
        let t = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap());
        let s = stats(&t);
        assert_eq!(s["girth"], 4);
        assert_eq!(s["crossings"], 3);
        assert_eq!(s["components"], 1);
        assert_eq!(s["seifert_circles"], 2);
        assert_eq!(s["genus"], 1);
        let id = MorseLink::trace_closure(&BraidWord::identity(3).unwrap());
        let s = stats(&id);
        assert_eq!((s["girth"].as_u64(), s["crossings"].as_u64()), (Some(6), Some(0)));
        assert_eq!((s["components"].as_u64(), s["seifert_circles"].as_u64()), (Some(3), Some(3)));
    }

    #[test]
    fn unknot_bracket_is_d() {
        let out = jones(&Input::Diagram(MorseLink::unknot()), Closure::Trace, &root5(), true).unwrap();
        assert_eq!(out["bracket"], exact_value(&root5().d()));
        assert_eq!(out["oracle_equal"], true);
    }

    #[test]
    fn braided_input_is_untouched() {
        let b = BraidWord::parse("1 -2 1", 3).unwrap();
        let out = vogel(&Input::Braid(b), Closure::Trace, &root5()).unwrap();
        assert_eq!(out["braid"], "1 -2 1");
        assert_eq!(out["rii_moves"], 0);
        assert_eq!(out["braided_input"], true);
    }

    #[test]
    fn twist_defaults_to_4r() {
        let b = BraidWord::parse("1 1 1", 2).unwrap();
        let out = twist(&Input::Braid(b), Closure::Trace, &root5(), None, 0, 2, None).unwrap();
        assert_eq!(out["k"], 20);
        assert_eq!(out["check"]["equal"], true);
        assert_eq!(out["check"]["crossings_after"], 43);
    }

    #[test]
    fn repeated_simulation_reports_success() {
        let b = BraidWord::parse("1 1 1", 2).unwrap();
        let out = simulate(Estimator::Dqc1, &b, 5, 0.1, None, 4, 20).unwrap();
        assert!(out["estimate"]["empirical_success"].as_f64().unwrap() >= 0.75);
        let out = simulate(Estimator::Pipeline, &b, 5, 0.1, None, 4, 10).unwrap();
        assert!(out["direct_agreement"].as_f64().unwrap() >= 0.75);
        assert!(simulate(Estimator::Plat, &b, 5, 0.1, None, 4, 0).is_err());
    }
}
