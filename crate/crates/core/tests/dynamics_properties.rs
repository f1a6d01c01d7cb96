use dg_lab::dynamics::*;
use dg_lab::invariants::*;
use dg_lab::spectral::Trig;
use dg_lab::Field;
use proptest::prelude::*;

fn two_zero_data() -> impl Strategy<Value = Field> {
    (-0.3..0.3f64, -0.3..0.3f64, -0.2..0.2f64, 0.5..2.0f64).prop_map(|(a, b, c, amp)| {
        Field::from_trig(
            8,
            &[
                Trig::Sin(1, -amp),
                Trig::Sin(2, a * amp),
                Trig::Cos(2, b * amp),
                Trig::Cos(3, c * amp),
            ],
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dg_conserves_the_mean(w in two_zero_data()) {
        let mut cfg = SimConfig::new(ModelSpec::dg(), 16, 1e-3, 0.5);
        cfg.record_every = 50;
        let out = simulate(&cfg, &w).unwrap();
        prop_assert!(out.failure.is_none());
        for r in &out.records {
            prop_assert!((r.mean - out.records[0].mean).abs() <= 1e-10);
        }
    }

    #[test]
    fn pushforward_keeps_orbit_invariants(w in two_zero_data(), t in 0.1..0.8f64) {
        let before = orbit_invariants(&w).unwrap();
        let pushed = exact_pushforward(&w, t, 256).unwrap();
        prop_assert!(pushed.tail_fraction < 1e-24);
        let after = orbit_invariants(&pushed.field).unwrap();
        prop_assert_eq!(before.count(), after.count());
        let mut a = before.derivative_cycle();
        let mut b = after.derivative_cycle();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-8, "{} vs {}", x, y);
        }
        prop_assert!((before.pv - after.pv).abs() <= 1e-8, "{} vs {}", before.pv, after.pv);
    }

    #[test]
    fn normalization_rescales_predictions(w in two_zero_data()) {
        let (plus, minus) = predict_amplitudes(&w).unwrap();
        let (normalized, record) = normalize_initial_data(&w).unwrap();
        let (np, nm) = predict_amplitudes(&normalized).unwrap();
        prop_assert!((np - plus / record.amplitude).abs() <= 1e-10);
        prop_assert!((nm - minus / record.amplitude).abs() <= 1e-10);
        prop_assert!((np - 1.0).abs() <= 1e-10);
        prop_assert!((normalized.value_at(0.0)).abs() <= 1e-12);
        let back = record.restore(&normalized);
        let err = (&back - &w).coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
        prop_assert!(err <= 1e-12);
    }
}
