use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rootjones_core::random::random_braid;
use rootjones_core::vogel::vogel_braiding;
use rootjones_core::{BraidWord, Closure, MorseLink, RootOfUnity};
use rootjones_qsim::estimate::{
    estimate_plat, estimate_trace_dqc1, exact_normalized, girth_reduction_pipeline, repeat_estimates,
    sample_budget,
};

const EPS: f64 = 0.1;

fn braid(s: &str, strands: usize) -> BraidWord {
    BraidWord::parse(s, strands).unwrap()
}

fn assert_sound(b: &BraidWord, closure: Closure, r: u32, seed: u64) {
    let exact = exact_normalized(b, closure, r).unwrap();
    let summary = repeat_estimates(100, seed, exact, EPS, |rng| match closure {
        Closure::Plat => estimate_plat(b, r, EPS, None, rng),
        Closure::Trace => estimate_trace_dqc1(b, r, EPS, None, rng),
    })
    .unwrap();
    assert!(summary.successes >= 75, "{b} {closure:?} r={r}: {summary:?}");
}

#[test]
fn named_examples() {
    assert_sound(&BraidWord::identity(4).unwrap(), Closure::Plat, 5, 1);
    assert_sound(&braid("1 1 1", 4), Closure::Plat, 5, 2);
    assert_sound(&BraidWord::identity(2).unwrap(), Closure::Trace, 5, 3);
    assert_sound(&braid("1 1 1", 2), Closure::Trace, 5, 4);
    assert_sound(&braid("1 1", 2), Closure::Trace, 7, 5);
}

#[test]
fn random_corpus_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for k in 0..6 {
        let b = random_braid(&mut rng, 4, 6);
        assert_sound(&b, Closure::Plat, 5, 100 + k);
        let t = random_braid(&mut rng, 2 + (k as usize % 3), 6);
        assert_sound(&t, Closure::Trace, 5, 200 + k);
    }
}

#[test]
fn same_seed_same_report() {
    let b = braid("1 -2 3 2 1", 4);
    for f in [estimate_plat, estimate_trace_dqc1, girth_reduction_pipeline] {
        let run = |seed| f(&b, 5, EPS, None, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        assert_eq!(run(7), run(7));
    }
}

#[test]
fn budget_bookkeeping() {
    let b = braid("1 2", 4);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let coarse = estimate_plat(&b, 5, 0.1, None, &mut rng).unwrap();
    let fine = estimate_plat(&b, 5, 0.05, None, &mut rng).unwrap();
    let ratio = fine.samples as f64 / coarse.samples as f64;
    assert!((ratio - 4.0).abs() < 0.01, "{ratio}");
    assert_eq!(coarse.samples, 2 * sample_budget(0.1).unwrap());
    let fixed = estimate_plat(&b, 5, 0.1, Some(50), &mut rng).unwrap();
    assert_eq!(fixed.samples, 100);
    assert!(estimate_trace_dqc1(&b, 5, 0.0, None, &mut rng).is_err());
}

#[test]
fn pipeline_rescale_bookkeeping() {
    let root = RootOfUnity::new(5).unwrap();
    let b = braid("1 1 1 2 -3", 4);
    let rep = girth_reduction_pipeline(&b, 5, EPS, None, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
    let rescale = rep.rescale.unwrap();
    let vogel = vogel_braiding(&MorseLink::plat_closure(&b).unwrap()).unwrap();
    assert_eq!(rescale.n, 2);
    assert_eq!(rescale.n_prime, vogel.braid.strands());
    let want = root.d_real().powi(rescale.n_prime as i32 - 2);
    assert!((rescale.factor - want).abs() < 1e-12);
    assert!((rescale.inner_epsilon * rescale.factor - EPS).abs() < 1e-12);
    assert!((0.0..=1.0).contains(&rep.point_estimate));
}

#[test]
fn pipeline_tracks_direct_plat_estimate() {
    for (b, seed) in [(BraidWord::identity(2).unwrap(), 8), (braid("1 1 1", 2), 9), (braid("1 -2 1 3", 4), 10)] {
        let mut agree = 0;
        for i in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let direct = estimate_plat(&b, 5, EPS, None, &mut rng).unwrap();
            let piped = girth_reduction_pipeline(&b, 5, EPS, None, &mut rng).unwrap();
            if (direct.point_estimate - piped.point_estimate).abs() < 2.0 * EPS {
                agree += 1;
            }
        }
        assert!(agree >= 75, "{b}: {agree}");
    }
}
