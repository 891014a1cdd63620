//! Property checks over randomized inputs: conjugation symmetries, branch
//! antisymmetry, sign invariances and format round-trips.

use proptest::prelude::*;
use radial_zeta::domination::d_function;
use radial_zeta::numerics::{power_term, principal_arg_ratio, Complex, StripPoint};
use radial_zeta::radial::{center_closed_form, center_geometric, pitch_angle};
use radial_zeta::series::partial_sum;
use radial_zeta::zeros::{parse_zeros, to_csv, ZeroRecord, ZerosFormat};

fn strip_point() -> impl Strategy<Value = StripPoint> {
    (0.05f64..3.0, 0.2f64..60.0, any::<bool>())
        .prop_map(|(x, y, neg)| StripPoint::new(x, if neg { -y } else { y }).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_term_conjugates_componentwise(z in strip_point(), n in 1u64..100_000) {
        let a = power_term(n, z);
        let b = power_term(n, z.conj());
        prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
        prop_assert_eq!(a.im.to_bits(), (-b.im).to_bits());
    }

    #[test]
    fn partial_sum_conjugation(z in strip_point(), n in 0u64..2_000) {
        let a = partial_sum(z, n);
        let b = partial_sum(z.conj(), n);
        let scale = a.norm().max(1.0);
        prop_assert!((a.re - b.re).abs() / scale < 1e-14);
        prop_assert!((a.im + b.im).abs() / scale < 1e-14);
    }

    #[test]
    fn arg_ratio_antisymmetry(
        ar in -3.0f64..3.0, ai in -3.0f64..3.0,
        br in -3.0f64..3.0, bi in -3.0f64..3.0,
    ) {
        let a = Complex::new(ar, ai);
        let b = Complex::new(br, bi);
        prop_assume!(a.norm() > 1e-6 && b.norm() > 1e-6);
        let fwd = principal_arg_ratio(a, b).unwrap();
        let bwd = principal_arg_ratio(b, a).unwrap();
        // Antisymmetric except on the branch cut itself.
        prop_assume!((fwd.abs() - std::f64::consts::PI).abs() > 1e-12);
        prop_assert!((fwd + bwd).abs() < 1e-12);
    }

    #[test]
    fn pitch_angle_range_and_conjugation(z in strip_point()) {
        let a = pitch_angle(z).radians();
        prop_assert!(a > 0.0 && a < std::f64::consts::TAU);
        prop_assert!((a - std::f64::consts::PI).abs() > 1e-15);
        let b = pitch_angle(z.conj()).radians();
        prop_assert!((a + b - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    fn domination_even_in_y(z in strip_point(), n in 1u64..50_000) {
        match (d_function(z.x(), z.y(), n), d_function(z.x(), -z.y(), n)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.to_bits(), b.to_bits()),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "sign asymmetry: {:?}", other),
        }
    }

    #[test]
    fn centers_commute_with_conjugation(z in strip_point(), n in 0u64..200) {
        let a = center_geometric(z, n).unwrap();
        let b = center_geometric(z.conj(), n).unwrap();
        let scale = 1.0 + a.norm();
        prop_assert!((a.re - b.re).abs() / scale < 1e-12);
        prop_assert!((a.im + b.im).abs() / scale < 1e-12);
    }

    #[test]
    fn cross_route_center_equality(z in strip_point(), n in 0u64..1_000) {
        let geo = center_geometric(z, n).unwrap();
        // A singular tangent index is measure-zero; nothing to compare there.
        if let Ok(closed) = center_closed_form(z, n) {
            prop_assert!(
                (geo - closed).norm() <= 1e-10 * (1.0 + geo.norm()),
                "n = {}, |diff| = {:e}", n, (geo - closed).norm()
            );
        }
    }

    #[test]
    fn zeros_csv_round_trip(ordinates in proptest::collection::vec(0.001f64..1e6, 1..40)) {
        let mut sorted = ordinates;
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        sorted.dedup();
        let records: Vec<ZeroRecord> = sorted
            .iter()
            .enumerate()
            .map(|(i, &t)| ZeroRecord {
                index: i as u32 + 1,
                ordinate_text: format!("{t}"),
                ordinate: t,
                expected_u: if i % 2 == 0 { Some(i as i64 * 2) } else { None },
            })
            .collect();
        let back = parse_zeros(&to_csv(&records), ZerosFormat::Csv).unwrap();
        prop_assert_eq!(records, back);
    }
}
