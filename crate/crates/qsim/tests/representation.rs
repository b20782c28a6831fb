use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootjones_core::jones::{jones_at_root, to_complex};
use rootjones_core::random::random_braid;
use rootjones_core::{BraidWord, Closure, MorseLink, RootOfUnity};
use rootjones_qsim::pathmodel::{jones_rep_generator, PathBasis};
use rootjones_qsim::unitary::{c, Matrix, C64};

fn close(a: &Matrix, b: &Matrix) -> f64 {
    (a - b).norm()
}

#[test]
fn generators_are_unitary_and_satisfy_braid_relations() {
    for r in [5, 7, 8] {
        for n in 2..=6 {
            for closure in [Closure::Trace, Closure::Plat] {
                if closure == Closure::Plat && n % 2 != 0 {
                    continue;
                }
                let b = PathBasis::new(n, r, closure).unwrap();
                let id = Matrix::identity(b.dim(), b.dim());
                let g: Vec<_> = (1..n)
                    .map(|i| b.generator(i, true).unwrap().into_matrix())
                    .collect();
                for i in 1..n {
                    let inv = b.generator(i, false).unwrap();
                    assert!(inv.deviation() < 1e-10);
                    assert!(close(&(&g[i - 1] * inv.matrix()), &id) < 1e-10);
                }
                for i in 0..g.len() {
                    for j in 0..g.len() {
                        let lhs_rhs = if i.abs_diff(j) == 1 {
                            (&g[i] * &g[j] * &g[i], &g[j] * &g[i] * &g[j])
                        } else if i.abs_diff(j) > 1 {
                            (&g[i] * &g[j], &g[j] * &g[i])
                        } else {
                            continue;
                        };
                        assert!(close(&lhs_rhs.0, &lhs_rhs.1) < 1e-10, "r={r} n={n} {i} {j}");
                    }
                }
            }
        }
    }
}

fn bracket(braid: &BraidWord, closure: Closure, root: &RootOfUnity) -> C64 {
    let (re, im) = to_complex(&jones_at_root(&MorseLink::closure(braid, closure).unwrap(), root));
    c(re, im)
}

#[test]
fn weighted_trace_matches_exact_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in [5, 7, 8] {
        let root = RootOfUnity::new(r).unwrap();
        for _ in 0..60 {
            let n = rng.random_range(1..=5);
            let len = if n == 1 { 0 } else { rng.random_range(0..=8) };
            let braid = random_braid(&mut rng, n, len);
            let b = PathBasis::new(n, r, Closure::Trace).unwrap();
            let u = b.braid_unitary(&braid).unwrap();
            let want = bracket(&braid, Closure::Trace, &root) / b.d().powi(n as i32);
            let got = b.trace_value(&u);
            assert!((got - want).norm() < 1e-9, "r={r} {braid}: {got} vs {want}");
        }
    }
}

#[test]
fn plat_amplitude_matches_exact_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for r in [5, 7, 8] {
        let root = RootOfUnity::new(r).unwrap();
        for _ in 0..60 {
            let n = 2 * rng.random_range(1..=3);
            let len = rng.random_range(0..=8);
            let braid = random_braid(&mut rng, n, len);
            let b = PathBasis::new(n, r, Closure::Plat).unwrap();
            let u = b.braid_unitary(&braid).unwrap();
            let want = bracket(&braid, Closure::Plat, &root) / b.d().powi(n as i32 / 2);
            let got = b.plat_value(&u).unwrap();
            assert!((got - want).norm() < 1e-9, "r={r} {braid}: {got} vs {want}");
        }
    }
}

#[test]
fn free_generator_function_agrees_with_basis() {
    let g = jones_rep_generator(4, 2, false, 7, Closure::Trace).unwrap();
    let b = PathBasis::new(4, 7, Closure::Trace).unwrap();
    assert_eq!(g, b.generator(2, false).unwrap());
}
