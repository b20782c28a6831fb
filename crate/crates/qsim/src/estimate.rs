//! Sampling estimators for `|J| / dⁿ` of plat and trace closures.
//!
//! Outcome probabilities of the Hadamard tests are computed exactly by
//! simulation; the estimators then draw Bernoulli samples from them. Real
//! and imaginary parts get `N` draws each. By Hoeffding, each part's mean is
//! off by more than `ε/(2√2)` with probability at most `2e^{-Nε²/4}`, so
//! `N = ⌈4 ln 16 / ε²⌉` keeps the total failure probability under 1/4 and
//! the modulus within `ε`.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use rootjones_core::jones::normalized_abs;
use rootjones_core::vogel::vogel_braiding;
use rootjones_core::{BraidWord, Closure, MorseLink, RootOfUnity};

use crate::error::QsimError;
use crate::hadamard::{hadamard_test, Part, StatePrep};
use crate::pathmodel::PathBasis;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    /// `Z`, clipped to `[0, 1]`
    pub point_estimate: f64,
    pub real_estimate: f64,
    pub imag_estimate: f64,
    /// Bernoulli draws over both parts
    pub samples: usize,
    pub epsilon: f64,
    /// filled in by [`repeat_estimates`]
    pub empirical_success: Option<f64>,
    pub strands: usize,
    pub hilbert_dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rescale: Option<Rescale>,
}

/// Bookkeeping of the girth-reduction pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rescale {
    pub n: usize,
    pub n_prime: usize,
    /// `d^{n′-n}`
    pub factor: f64,
    pub inner_epsilon: f64,
    pub rii_moves: usize,
    pub trace_braid: String,
}

/// Draws per part for accuracy `ε` with confidence 3/4.
pub fn sample_budget(epsilon: f64) -> Result<usize, QsimError> {
    if !(epsilon > 0.0) {
        return Err(QsimError::BadEpsilon(epsilon));
    }
    Ok((4.0 * 16f64.ln() / (epsilon * epsilon)).ceil() as usize)
}

/// `2·(fraction of zeros) - 1` over `n` draws.
fn sample_part<R: Rng + ?Sized>(rng: &mut R, n: usize, mut p0: impl FnMut(&mut R) -> f64) -> f64 {
    let zeros = (0..n)
        .filter(|_| {
            let p = p0(rng);
            rng.random_bool(p.clamp(0.0, 1.0))
        })
        .count();
    2.0 * zeros as f64 / n as f64 - 1.0
}

fn report(re: f64, im: f64, per_part: usize, epsilon: f64, strands: usize, dim: usize) -> EstimateReport {
    EstimateReport {
        point_estimate: re.hypot(im).min(1.0),
        real_estimate: re,
        imag_estimate: im,
        samples: 2 * per_part,
        epsilon,
        empirical_success: None,
        strands,
        hilbert_dimension: dim,
        rescale: None,
    }
}

/// Hadamard test on the plat-boundary walk.
pub fn estimate_plat<R: Rng + ?Sized>(
    braid: &BraidWord,
    r: u32,
    epsilon: f64,
    samples: Option<usize>,
    rng: &mut R,
) -> Result<EstimateReport, QsimError> {
    let budget = sample_budget(epsilon)?;
    let basis = PathBasis::new(braid.strands(), r, Closure::Plat)?;
    let u = basis.braid_unitary(braid)?;
    let prep = StatePrep::Basis(basis.plat_state()?);
    let p_re = hadamard_test(&u, &prep, Part::Real)?;
    let p_im = hadamard_test(&u, &prep, Part::Imaginary)?;
    let n = samples.unwrap_or(budget).max(1);
    let re = sample_part(rng, n, |_| p_re);
    let im = sample_part(rng, n, |_| p_im);
    Ok(report(re, im, n, epsilon, braid.strands(), basis.dim()))
}

/// One clean qubit with the register drawn from the Markov-trace weights.
pub fn estimate_trace_dqc1<R: Rng + ?Sized>(
    braid: &BraidWord,
    r: u32,
    epsilon: f64,
    samples: Option<usize>,
    rng: &mut R,
) -> Result<EstimateReport, QsimError> {
    let budget = sample_budget(epsilon)?;
    let basis = PathBasis::new(braid.strands(), r, Closure::Trace)?;
    let u = basis.braid_unitary(braid)?;
    let weights = WeightedIndex::new(basis.markov_weights()).expect("positive weights");
    let probs = |part: Part| -> Result<Vec<f64>, QsimError> {
        (0..basis.dim())
            .map(|i| hadamard_test(&u, &StatePrep::Basis(i), part))
            .collect()
    };
    let (p_re, p_im) = (probs(Part::Real)?, probs(Part::Imaginary)?);
    let n = samples.unwrap_or(budget).max(1);
    let re = sample_part(rng, n, |g| p_re[weights.sample(g)]);
    let im = sample_part(rng, n, |g| p_im[weights.sample(g)]);
    Ok(report(re, im, n, epsilon, braid.strands(), basis.dim()))
}

/// Estimates `|J(plat)| / dⁿ` through a trace closure: braid the plat
/// diagram, estimate the trace closure on `n′` strands at `ε / d^{n′-n}`,
/// and rescale by `d^{n′-n}`.
pub fn girth_reduction_pipeline<R: Rng + ?Sized>(
    braid: &BraidWord,
    r: u32,
    epsilon: f64,
    samples: Option<usize>,
    rng: &mut R,
) -> Result<EstimateReport, QsimError> {
    sample_budget(epsilon)?;
    let root = RootOfUnity::new(r)?;
    let diagram = MorseLink::plat_closure(braid)?;
    let vogel = vogel_braiding(&diagram)?;
    let n = braid.strands() / 2;
    let n_prime = vogel.braid.strands();
    let factor = root.d_real().powi(n_prime as i32 - n as i32);
    let inner_epsilon = epsilon / factor;
    let inner = estimate_trace_dqc1(&vogel.braid, r, inner_epsilon, samples, rng)?;
    Ok(EstimateReport {
        point_estimate: (factor * inner.point_estimate).min(1.0),
        real_estimate: factor * inner.real_estimate,
        imag_estimate: factor * inner.imag_estimate,
        samples: inner.samples,
        epsilon,
        empirical_success: None,
        strands: braid.strands(),
        hilbert_dimension: inner.hilbert_dimension,
        rescale: Some(Rescale {
            n,
            n_prime,
            factor,
            inner_epsilon,
            rii_moves: vogel.rii_moves,
            trace_braid: vogel.braid.to_string(),
        }),
    })
}

/// Exact `|J| / dⁿ` from the cyclotomic evaluation.
pub fn exact_normalized(braid: &BraidWord, closure: Closure, r: u32) -> Result<f64, QsimError> {
    Ok(normalized_abs(braid, closure, &RootOfUnity::new(r)?)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepetitionSummary {
    pub exact: f64,
    pub epsilon: f64,
    pub repetitions: usize,
    pub successes: usize,
    pub empirical_success: f64,
    pub estimates: Vec<f64>,
    pub samples_per_run: usize,
}

/// Runs `reps` estimates, repetition `i` on ChaCha8 stream `i` of `seed`,
/// and counts those within `ε` of `exact`.
pub fn repeat_estimates<F>(
    reps: usize,
    seed: u64,
    exact: f64,
    epsilon: f64,
    mut estimate: F,
) -> Result<RepetitionSummary, QsimError>
where
    F: FnMut(&mut ChaCha8Rng) -> Result<EstimateReport, QsimError>,
{
    let mut estimates = Vec::with_capacity(reps);
    let mut samples = 0;
    for i in 0..reps {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let rep = estimate(&mut rng)?;
        samples = rep.samples;
        estimates.push(rep.point_estimate);
    }
    let successes = estimates.iter().filter(|z| (*z - exact).abs() < epsilon).count();
    Ok(RepetitionSummary {
        exact,
        epsilon,
        repetitions: reps,
        successes,
        empirical_success: successes as f64 / reps.max(1) as f64,
        estimates,
        samples_per_run: samples,
    })
}
