use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootjones_core::jones::jones_at_root;
use rootjones_core::random::{random_nonbraided_diagram, DiagramParams};
use rootjones_core::seifert::seifert_circles;
use rootjones_core::vogel::vogel_braiding;
use rootjones_core::{MorseLink, RootOfUnity};

#[test]
fn random_diagrams_braid_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let roots = [RootOfUnity::new(5).unwrap(), RootOfUnity::new(7).unwrap()];
    let mut worst = 0.0f64;
    for (max_width, events) in [(4, 10), (6, 14), (6, 20)] {
        for _ in 0..100 {
            let d = loop {
                // keep the closed braid narrow enough to evaluate quickly
                let d = random_nonbraided_diagram(&mut rng, DiagramParams { max_width, events });
                if seifert_circles(&d) <= 8 {
                    break d;
                }
            };
            let res = vogel_braiding(&d).unwrap_or_else(|e| panic!("{e}: {}", d.to_json()));
            let s = seifert_circles(&d);
            assert_eq!(res.braid.strands(), s);
            assert!(res.rii_moves <= s * s, "{} moves for s = {s}", res.rii_moves);
            worst = worst.max(res.rii_moves as f64 / (s * s) as f64);
            let out = MorseLink::trace_closure(&res.braid);
            assert_eq!(seifert_circles(&out), s);
            for root in &roots {
                assert_eq!(jones_at_root(&d, root), jones_at_root(&out, root), "{}", d.to_json());
            }
        }
    }
    println!("largest moves / s^2 = {worst:.3}");
}
