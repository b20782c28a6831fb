//! The acceptance suite behind `rootjones verify`.
//!
//! Each criterion returns a deterministic [`CriterionResult`] for a given
//! seed; wall times are reported separately.

use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use rootjones_core::jones::{jones_at_root, jones_with_stats};
use rootjones_core::random::{
    random_braid, random_diagram, random_knot_diagram, random_nonbraided_diagram, DiagramParams,
};
use rootjones_core::seifert::{check_seifert_bound, genus, seifert_circles};
use rootjones_core::statesum::bracket_polynomial;
use rootjones_core::surgery::check_twist;
use rootjones_core::temperley_lieb::catalan;
use rootjones_core::vogel::vogel_braiding;
use rootjones_core::{BraidWord, Closure, MorseLink, RootOfUnity};
use rootjones_qsim::estimate::{
    estimate_plat, estimate_trace_dqc1, exact_normalized, girth_reduction_pipeline, repeat_estimates,
};
use rootjones_qsim::hadamard::{
    dqc1_prob0, dqc1_prob0_density, hadamard_test, uprime_construct, uprime_trace, Part, StatePrep,
};
use rootjones_qsim::unitary::Vector;
use rootjones_qsim::Unitary;

pub const ALL: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub metrics: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Swap a frozen regression constant for a wrong one; criterion 2 must
    /// then fail.
    pub corrupt_constant: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            corrupt_constant: false,
        }
    }
}

/// `all`, `quick` (everything but the exhaustive oracle sweep), or a list
/// such as `2,3,5-7`.
pub fn parse_suite(text: &str) -> Result<Vec<u8>> {
    match text.trim() {
        "all" => return Ok(ALL.to_vec()),
        "quick" => return Ok(ALL[1..].to_vec()),
        _ => {}
    }
    let mut ids = Vec::new();
    for part in text.split(',').map(str::trim) {
        let (lo, hi) = match part.split_once('-') {
            Some((a, b)) => (a.trim().parse::<u8>()?, b.trim().parse::<u8>()?),
            None => {
                let k = part.parse::<u8>()?;
                (k, k)
            }
        };
        if lo == 0 || hi > 10 || lo > hi {
            bail!("criteria are numbered 1 to 10, got {part:?}");
        }
        ids.extend(lo..=hi);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

pub fn run_criterion(id: u8, opts: &VerifyOptions) -> (CriterionResult, Duration) {
    let start = Instant::now();
    let (name, outcome) = match id {
        1 => ("oracle equivalence", oracle_equivalence(start)),
        2 => ("root-of-unity wiring", root_wiring(opts)),
        3 => ("Hadamard-test identities", hadamard_identities(opts.seed)),
        4 => ("clean-qubit probability and U′ trace", clean_qubit_identities(opts.seed)),
        5 => ("estimator contracts", estimator_contracts(opts.seed)),
        6 => ("girth-reduction pipeline", pipeline_agreement(opts.seed)),
        7 => ("Seifert bound and genus identity", seifert_checks(opts.seed)),
        8 => ("Vogel braiding bound", vogel_checks(opts.seed)),
        9 => ("twist surgery", twist_checks(opts.seed)),
        10 => ("performance envelope", performance(opts.seed, start)),
        _ => ("unknown", Err(anyhow::anyhow!("no criterion {id}"))),
    };
    let result = match outcome {
        Ok((passed, detail, metrics)) => CriterionResult {
            id,
            name: name.to_string(),
            passed,
            detail,
            metrics,
        },
        Err(e) => CriterionResult {
            id,
            name: name.to_string(),
            passed: false,
            detail: format!("error: {e}"),
            metrics: Value::Null,
        },
    };
    (result, start.elapsed())
}

type Outcome = Result<(bool, String, Value)>;

fn words(strands: usize, len: usize) -> impl Iterator<Item = Vec<i64>> {
    let gens: Vec<i64> = (1..strands as i64).flat_map(|g| [g, -g]).collect();
    let k = gens.len();
    let total = if len == 0 { 1 } else { k.pow(len as u32) };
    (0..total).map(move |mut x| {
        (0..len)
            .map(|_| {
                let g = gens[x % k];
                x /= k;
                g
            })
            .collect()
    })
}

const ORACLE_LIMIT: Duration = Duration::from_secs(300);

/// Every braid of length ≤ 8 on ≤ 4 strands, both closures, `r ∈ {5, 7, 8}`:
/// transfer matrix against the `2^c` state sum.
fn oracle_equivalence(start: Instant) -> Outcome {
    let roots: Vec<RootOfUnity> = [5, 7, 8].iter().map(|&r| RootOfUnity::new(r)).collect::<Result<_, _>>()?;
    let mut cases = 0u64;
    let mut mismatches = Vec::new();
    for strands in 1..=4 {
        let max_len = if strands == 1 { 0 } else { 8 };
        for len in 0..=max_len {
            for w in words(strands, len) {
                let b = BraidWord::from_tokens(strands, &w)?;
                for closure in [Closure::Plat, Closure::Trace] {
                    let Ok(d) = MorseLink::closure(&b, closure) else { continue };
                    let poly = bracket_polynomial(&d, 16)?;
                    for root in &roots {
                        cases += 1;
                        if jones_at_root(&d, root) != poly.evaluate(root)? && mismatches.len() < 5 {
                            mismatches.push(format!("{closure:?} [{b}] r={}", root.r()));
                        }
                    }
                }
            }
        }
    }
    let in_time = start.elapsed() < ORACLE_LIMIT;
    let passed = mismatches.is_empty() && cases >= 10_000 && in_time;
    let detail = if mismatches.is_empty() {
        format!("{cases} cases bit-exact{}", if in_time { "" } else { ", over the 300 s limit" })
    } else {
        format!("mismatches: {}", mismatches.join("; "))
    };
    Ok((passed, detail, json!({ "cases": cases, "mismatches": mismatches })))
}

/// Trefoil bracket at `r = 5` in the power basis of `Z[ζ₂₀]`.
const TREFOIL_R5: [&str; 8] = ["-1", "0", "0", "0", "-2", "0", "0", "0"];
const TREFOIL_R5_CORRUPT: [&str; 8] = ["-1", "0", "0", "0", "-1", "0", "0", "0"];

fn root_wiring(opts: &VerifyOptions) -> Outcome {
    use std::f64::consts::PI;
    let mut worst = 0.0f64;
    for r in [5, 7, 8, 9, 10] {
        let root = RootOfUnity::new(r)?;
        let (a, a_inv) = (root.a(), root.a_inv());
        let d = -&(&(&a * &a) + &(&a_inv * &a_inv));
        let (re, im) = d.to_complex();
        worst = worst.max((re - 2.0 * (PI / r as f64).cos()).abs()).max(im.abs());
        let (re, im) = a_inv.pow(4).to_complex();
        let theta = 2.0 * PI / r as f64;
        worst = worst.max((re - theta.cos()).abs()).max((im - theta.sin()).abs());
    }
    let trefoil = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2)?);
    let got = jones_at_root(&trefoil, &RootOfUnity::new(5)?).coefficient_strings();
    let frozen = if opts.corrupt_constant { TREFOIL_R5_CORRUPT } else { TREFOIL_R5 };
    let constant_ok = got == frozen;
    let passed = worst < 1e-12 && constant_ok;
    Ok((
        passed,
        format!(
            "max deviation {worst:.1e} (tol 1e-12), trefoil constant {}",
            if constant_ok { "matches" } else { "differs" }
        ),
        json!({ "max_deviation": worst, "trefoil_r5": got }),
    ))
}

fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    Unitary::random(rng, dim).matrix().column(0).into_owned()
}

fn hadamard_identities(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let dim = 1 + k % 32;
        let u = Unitary::random(&mut rng, dim);
        let psi = random_state(&mut rng, dim);
        let amp = psi.dotc(&(u.matrix() * &psi));
        let prep = StatePrep::Pure(psi);
        worst = worst.max((hadamard_test(&u, &prep, Part::Real)? - (1.0 + amp.re) / 2.0).abs());
        worst = worst.max((hadamard_test(&u, &prep, Part::Imaginary)? - (1.0 + amp.im) / 2.0).abs());
        let tr = u.trace();
        let mixed = hadamard_test(&u, &StatePrep::MaximallyMixed, Part::Real)?;
        worst = worst.max((mixed - (0.5 + tr.re / (2.0 * dim as f64))).abs());
    }
    Ok((
        worst < 1e-10,
        format!("100 unitaries up to dimension 32, max error {worst:.1e} (tol 1e-10)"),
        json!({ "max_error": worst }),
    ))
}

fn clean_qubit_identities(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 4);
    let (mut eq1, mut uprime) = (0.0f64, 0.0f64);
    for k in 0..100 {
        let u = Unitary::random(&mut rng, 2 * (1 + k % 16));
        eq1 = eq1.max((dqc1_prob0(&u)? - dqc1_prob0_density(&u)?).abs());
        let n = k % 5;
        let u = Unitary::random(&mut rng, 2 << n);
        let t = uprime_trace(&uprime_construct(&u)?);
        uprime = uprime.max((t.re - dqc1_prob0(&u)?).abs()).max(t.im.abs());
    }
    Ok((
        eq1 < 1e-10 && uprime < 1e-10,
        format!("formula vs evolution {eq1:.1e}, U′ trace vs p₀ {uprime:.1e} (tol 1e-10)"),
        json!({ "formula_vs_evolution": eq1, "uprime_vs_p0": uprime }),
    ))
}

const EPS: f64 = 0.1;
const REPS: usize = 100;

/// 24 braids: named 2- and 4-strand examples, then random 4-strand words of
/// length ≤ 6.
pub fn estimator_corpus(seed: u64) -> Vec<BraidWord> {
    let named = [
        ("", 2),
        ("1 1 1", 2),
        ("1 1", 2),
        ("-1 -1 -1 -1", 2),
        ("", 4),
        ("1 1 1", 4),
        ("1 -2 1 3", 4),
        ("2 2 -1 3 3 -2", 4),
    ];
    let mut out: Vec<BraidWord> = named
        .iter()
        .map(|&(w, n)| BraidWord::parse(w, n).expect("valid word"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 5);
    while out.len() < 24 {
        let len = rng.random_range(1..=6);
        out.push(random_braid(&mut rng, 4, len));
    }
    out
}

fn estimator_contracts(seed: u64) -> Outcome {
    let corpus = estimator_corpus(seed);
    let mut worst = (REPS, REPS);
    let mut failing = Vec::new();
    for (k, b) in corpus.iter().enumerate() {
        let base = seed.wrapping_add(1000 + 2 * k as u64);
        let plat = repeat_estimates(REPS, base, exact_normalized(b, Closure::Plat, 5)?, EPS, |rng| {
            estimate_plat(b, 5, EPS, None, rng)
        })?;
        let trace = repeat_estimates(REPS, base + 1, exact_normalized(b, Closure::Trace, 5)?, EPS, |rng| {
            estimate_trace_dqc1(b, 5, EPS, None, rng)
        })?;
        worst = (worst.0.min(plat.successes), worst.1.min(trace.successes));
        if plat.successes < 75 || trace.successes < 75 {
            failing.push(format!("[{b}] on {}", b.strands()));
        }
    }
    Ok((
        failing.is_empty(),
        format!(
            "{} braids, fewest successes out of {REPS}: plat {}, trace {} (need 75)",
            corpus.len(),
            worst.0,
            worst.1
        ),
        json!({ "braids": corpus.len(), "min_plat": worst.0, "min_trace": worst.1, "failing": failing }),
    ))
}

fn pipeline_agreement(seed: u64) -> Outcome {
    let corpus = estimator_corpus(seed);
    let mut fewest = REPS;
    let mut failing = Vec::new();
    let mut largest_factor = 0.0f64;
    for (k, b) in corpus.iter().enumerate() {
        let mut agree = 0;
        for i in 0..REPS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2000 + k as u64));
            rng.set_stream(i as u64);
            let direct = estimate_plat(b, 5, EPS, None, &mut rng)?;
            let piped = girth_reduction_pipeline(b, 5, EPS, None, &mut rng)?;
            if let Some(r) = &piped.rescale {
                largest_factor = largest_factor.max(r.factor);
            }
            if (direct.point_estimate - piped.point_estimate).abs() < 2.0 * EPS {
                agree += 1;
            }
        }
        fewest = fewest.min(agree);
        if agree < 75 {
            failing.push(format!("[{b}] on {}", b.strands()));
        }
    }
    Ok((
        failing.is_empty(),
        format!("fewest agreements within 2ε: {fewest}/{REPS} (need 75), largest d^(n′-n) {largest_factor:.3}"),
        json!({ "min_agreement": fewest, "largest_factor": largest_factor, "failing": failing }),
    ))
}

fn seifert_checks(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 7);
    let mut violations = 0;
    for i in 0..1000 {
        let params = DiagramParams {
            max_width: 2 + 2 * (i % 4),
            events: 4 + i % 24,
        };
        if !check_seifert_bound(&random_diagram(&mut rng, params)).holds {
            violations += 1;
        }
    }
    let mut genus_failures = 0;
    for i in 0..100 {
        let d = random_knot_diagram(&mut rng, DiagramParams { max_width: 6, events: 8 + i % 16 });
        let (c, s, n) = (d.crossing_count() as i64, seifert_circles(&d) as i64, d.component_count() as i64);
        let ok = match genus(&d) {
            Ok(g) => c - s - n + 2 - 2 * g as i64 == 0,
            Err(_) => false,
        };
        if !ok {
            genus_failures += 1;
        }
    }
    Ok((
        violations == 0 && genus_failures == 0,
        format!("s ≤ c + n violated {violations}/1000, genus identity failed {genus_failures}/100"),
        json!({ "bound_violations": violations, "genus_failures": genus_failures }),
    ))
}

fn vogel_checks(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 8);
    let roots = [RootOfUnity::new(5)?, RootOfUnity::new(7)?];
    let mut failures = Vec::new();
    let mut worst_ratio = 0.0f64;
    for i in 0..200 {
        let (max_width, events) = [(4, 10), (6, 14), (6, 20)][i % 3];
        // outputs wider than 8 strands make the exact comparison slow
        let d = loop {
            let d = random_nonbraided_diagram(&mut rng, DiagramParams { max_width, events });
            if seifert_circles(&d) <= 8 {
                break d;
            }
        };
        let s = seifert_circles(&d);
        let res = match vogel_braiding(&d) {
            Ok(res) => res,
            Err(e) => {
                failures.push(format!("{e}: {}", d.to_json()));
                continue;
            }
        };
        let out = MorseLink::trace_closure(&res.braid);
        worst_ratio = worst_ratio.max(res.rii_moves as f64 / (s * s) as f64);
        let ok = res.braid.strands() == s
            && res.rii_moves <= s * s
            && seifert_circles(&out) == s
            && roots.iter().all(|root| jones_at_root(&d, root) == jones_at_root(&out, root));
        if !ok {
            failures.push(d.to_json());
        }
    }
    Ok((
        failures.is_empty(),
        format!("{} of 200 diagrams failed, largest moves/s² {worst_ratio:.3}", failures.len()),
        json!({ "failures": failures, "largest_move_ratio": worst_ratio }),
    ))
}

/// Diagrams with a twist window `(diagram, level, p, m)`, `m = 3` for every
/// third entry.
pub fn twist_corpus(seed: u64, size: usize) -> Vec<(MorseLink, usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let d = if out.len() % 2 == 0 {
            let (n, len) = (rng.random_range(2..=4), rng.random_range(1..=6));
            MorseLink::trace_closure(&random_braid(&mut rng, n, len))
        } else {
            random_diagram(&mut rng, DiagramParams { max_width: 6, events: 10 })
        };
        let m = if out.len() % 3 == 0 { 3 } else { 2 };
        let levels: Vec<(usize, usize)> = d.widths().into_iter().enumerate().filter(|&(_, w)| w >= m).collect();
        if levels.is_empty() {
            continue;
        }
        let (level, w) = levels[rng.random_range(0..levels.len())];
        let p = rng.random_range(0..=w - m);
        out.push((d, level, p, m));
    }
    out
}

fn twist_checks(seed: u64) -> Outcome {
    let root = RootOfUnity::new(5)?;
    let four_r = 4 * root.r() as i64;
    let corpus = twist_corpus(seed ^ 9, 50);
    let mut failures = 0;
    let mut broken_by_one = 0;
    for (d, level, p, m) in &corpus {
        for k in [four_r, -four_r] {
            let c = check_twist(d, *level, *p, *m, k, &root)?;
            let delta = c.crossings_after - c.crossings_before;
            if !c.equal || delta != four_r as usize * m * (m - 1) {
                failures += 1;
            }
        }
        if !check_twist(d, *level, *p, *m, 1, &root)?.equal {
            broken_by_one += 1;
        }
    }
    Ok((
        failures == 0 && broken_by_one >= 1,
        format!("±4r twists: {failures} failures on 50 diagrams; k = 1 breaks {broken_by_one}"),
        json!({ "failures": failures, "broken_by_single_twist": broken_by_one }),
    ))
}

const PERFORMANCE_LIMIT: Duration = Duration::from_secs(10);

fn performance(seed: u64, start: Instant) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 10);
    let d = MorseLink::trace_closure(&random_braid(&mut rng, 6, 200));
    let c = jones_with_stats(&d, &RootOfUnity::new(5)?);
    let bound = catalan(6) as usize;
    let in_time = start.elapsed() < PERFORMANCE_LIMIT;
    Ok((
        d.girth() == 12 && d.crossing_count() == 200 && c.peak_basis <= bound && in_time,
        format!(
            "{} crossings, girth {}, peak basis {} (bound {bound}){}",
            d.crossing_count(),
            d.girth(),
            c.peak_basis,
            if in_time { "" } else { ", over the 10 s limit" }
        ),
        json!({ "crossings": d.crossing_count(), "girth": d.girth(), "peak_basis": c.peak_basis }),
    ))
}

/// Result of a suite run plus per-criterion wall times in milliseconds.
pub fn run_suite(ids: &[u8], opts: &VerifyOptions) -> (Vec<CriterionResult>, Vec<f64>) {
    ids.iter()
        .map(|&id| {
            let (r, t) = run_criterion(id, opts);
            (r, t.as_secs_f64() * 1e3)
        })
        .unzip()
}

/// `criterion N PASS|FAIL name: detail (time)`.
pub fn summary_line(r: &CriterionResult, ms: f64) -> String {
    format!(
        "criterion {:>2} {} {}: {} ({:.1} s)",
        r.id,
        if r.passed { "PASS" } else { "FAIL" },
        r.name,
        r.detail,
        ms / 1e3
    )
}
