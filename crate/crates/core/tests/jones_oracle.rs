use rootjones_core::jones::{abs_squared, jones_at_root, jones_with_stats};
use rootjones_core::statesum::{bracket_polynomial, bracket_statesum_oracle};
use rootjones_core::temperley_lieb::catalan;
use rootjones_core::{BraidWord, Closure, Cyclotomic, MorseLink, RootOfUnity};

fn all_words(strands: usize, len: usize) -> Vec<Vec<i64>> {
    let gens: Vec<i64> = (1..strands as i64).flat_map(|g| [g, -g]).collect();
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                gens.iter().map(move |&g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn transfer_matrix_matches_state_sum_on_short_braids() {
    let roots: Vec<RootOfUnity> = [5, 7, 8].iter().map(|&r| RootOfUnity::new(r).unwrap()).collect();
    for strands in 2..=4 {
        for len in 0..=4 {
            for w in all_words(strands, len) {
                let b = BraidWord::from_tokens(strands, &w).unwrap();
                for closure in [Closure::Plat, Closure::Trace] {
                    let Ok(d) = MorseLink::closure(&b, closure) else { continue };
                    let poly = bracket_polynomial(&d, 16).unwrap();
                    for root in &roots {
                        let c = jones_with_stats(&d, root);
                        assert_eq!(c.value, poly.evaluate(root).unwrap(), "{w:?} {closure:?} r={}", root.r());
                        assert!(c.peak_basis as u128 <= catalan(d.girth() / 2));
                    }
                }
            }
        }
    }
}

#[test]
fn trefoil_regression_constant() {
    let t = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap());
    let v = bracket_statesum_oracle(&t, 5).unwrap();
    assert_eq!(jones_at_root(&t, &RootOfUnity::new(5).unwrap()), v);
    // -1 - 2ζ⁴ in the power basis of Z[ζ_20]
    assert_eq!(v.coefficient_strings(), ["-1", "0", "0", "0", "-2", "0", "0", "0"]);
    let (re, im) = v.to_complex();
    assert!((re + 1.618_033_988_749_895).abs() < 1e-12);
    assert!((im + 1.902_113_032_590_307).abs() < 1e-12);
}

#[test]
fn mirror_has_conjugate_value() {
    let root = RootOfUnity::new(7).unwrap();
    let t = MorseLink::trace_closure(&BraidWord::parse("1 1 1", 2).unwrap());
    let a = jones_at_root(&t, &root);
    let b = jones_at_root(&t.mirror(), &root);
    assert_eq!(b, a.conj());
    assert_eq!(abs_squared(&a), abs_squared(&b));
    assert_eq!(abs_squared(&root.d()), root.d().pow(2));
    assert_eq!(abs_squared(&root.a()), Cyclotomic::one(root.level()));
}
