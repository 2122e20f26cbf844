//! Property tests for the algebraic invariants of the bicomplex ring and
//! the dynamics primitives.

use bcjulia::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn finite_component() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn arb_bicomplex() -> impl Strategy<Value = Bicomplex> {
    (
        finite_component(),
        finite_component(),
        finite_component(),
        finite_component(),
    )
        .prop_map(|(a, b, c, d)| Bicomplex::from_components(a, b, c, d))
}

fn arb_complex() -> impl Strategy<Value = Complex64> {
    (finite_component(), finite_component()).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #[test]
    fn norm_identity(w in arb_bicomplex()) {
        // ||w||^2 = (|P1|^2 + |P2|^2) / 2
        let p = w.to_idempotent();
        let via_proj = (p.p1.norm_sqr() + p.p2.norm_sqr()) / 2.0;
        let direct = w.norm_sqr();
        prop_assert!((direct - via_proj).abs() <= 1e-12 * direct.max(1.0));
    }

    #[test]
    fn multiplication_is_componentwise(u in arb_bicomplex(), v in arb_bicomplex()) {
        let direct = (u * v).to_idempotent();
        let pu = u.to_idempotent();
        let pv = v.to_idempotent();
        let scale = direct.p1.norm().max(direct.p2.norm()).max(1.0);
        prop_assert!((direct.p1 - pu.p1 * pv.p1).norm() <= 1e-12 * scale);
        prop_assert!((direct.p2 - pu.p2 * pv.p2).norm() <= 1e-12 * scale);
    }

    #[test]
    fn ring_laws(u in arb_bicomplex(), v in arb_bicomplex(), t in arb_bicomplex()) {
        let scale = u.norm().max(v.norm()).max(t.norm()).max(1.0);
        let tol = 1e-10 * scale * scale * scale;
        prop_assert!((u * v - v * u).norm() <= tol);
        prop_assert!(((u * v) * t - u * (v * t)).norm() <= tol);
        prop_assert!((u * Bicomplex::one() - u).norm() == 0.0);
    }

    #[test]
    fn sqrt_branches_square_back(w in arb_bicomplex()) {
        let branches = w.sqrt_branches();
        let p = w.to_idempotent();
        let zero_projections =
            (p.p1 == Complex64::new(0.0, 0.0)) as usize + (p.p2 == Complex64::new(0.0, 0.0)) as usize;
        let expected = match zero_projections {
            0 => 4,
            1 => 2,
            _ => 1,
        };
        prop_assert_eq!(branches.len(), expected);
        for b in branches {
            prop_assert!((b * b - w).norm() <= 1e-10 * w.norm().max(1.0));
        }
    }

    #[test]
    fn idempotent_round_trips(w in arb_bicomplex()) {
        // 2 ulp-scale slack relative to the overall magnitude: the
        // projections mix components, so cancellation scales with ||w||
        let tol = 2.0 * f64::EPSILON * w.norm().max(1.0);
        let back = Bicomplex::from_idempotent(w.to_idempotent());
        prop_assert!((back - w).norm() <= tol);
        let p = IdempotentPair::new(Complex64::new(w.z1.re, w.z1.im), Complex64::new(w.z2.re, w.z2.im));
        let q = Bicomplex::from_idempotent(p).to_idempotent();
        let ptol = 2.0 * f64::EPSILON * (p.p1.norm() + p.p2.norm()).max(1.0);
        prop_assert!((q.p1 - p.p1).norm() <= ptol);
        prop_assert!((q.p2 - p.p2).norm() <= ptol);
    }

    #[test]
    fn ball_discus_inclusions(
        a in arb_bicomplex(),
        r in (1e-3..3.0f64, 1e-3..3.0f64),
        w in arb_bicomplex(),
    ) {
        let (ra, rb) = r;
        let (r1, r2) = if ra <= rb { (ra, rb) } else { (rb, ra) };
        let d = Discus::new(a, r1, r2).unwrap();
        if ball_contains(a, r1 / 2f64.sqrt(), w).unwrap() {
            prop_assert!(d.contains(w));
        }
        if d.contains(w) {
            prop_assert!(ball_contains(a, ((r1 * r1 + r2 * r2) / 2.0).sqrt(), w).unwrap());
        }
    }

    #[test]
    fn inverse_step_inverts_forward(c in arb_complex(), z in arb_complex(), branch in 0u8..2) {
        let back = iterate_forward(c, inverse_step(c, z, branch), 1);
        prop_assert!((back - z).norm() <= 1e-12 * z.norm().max(1.0));
    }

    #[test]
    fn bc_inverse_step_inverts_forward(
        c in arb_bicomplex(),
        w in arb_bicomplex(),
        s1 in 0u8..2,
        s2 in 0u8..2,
    ) {
        let param = BicomplexParam::new(c);
        let b = bc_inverse_step(&param, w, (s1, s2));
        let back = iterate_forward_bc(&param, b, 1, ForwardRoute::Direct);
        prop_assert!((back - w).norm() <= 1e-12 * w.norm().max(1.0));
    }

    #[test]
    fn fixed_point_residuals(c in arb_complex()) {
        for f in fixed_points(c) {
            let residual = (f.point * f.point + c - f.point).norm();
            prop_assert!(residual <= 1e-12 * c.norm().max(1.0));
        }
    }
}
