//! Discrete-memoryless systems against direct-summation recomputation.

mod support;

use icstate::dm::{
    cond_mutual_info, dm_region, embed_simultaneous, simultaneous_system, superposition_system,
    EncodingMode, Var, VarSet,
};
use support::{direct_cmi, random_binary_scheme, rng, swap_users};

fn rhs_of(sys: &icstate::fme::IneqSystem, pattern: [f64; 4], skip: usize) -> f64 {
    sys.rows()
        .iter()
        .filter(|r| r.coeffs == pattern)
        .nth(skip)
        .unwrap_or_else(|| panic!("row {pattern:?} missing"))
        .rhs
}

#[test]
fn simultaneous_rhs_match_direct_summation() {
    use Var::*;
    let mut r = rng(31);
    for trial in 0..12 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Simultaneous, true);
        let sys = simultaneous_system(&scheme).unwrap();
        let joint = scheme.build_joint().unwrap();
        let prefix1 =
            direct_cmi(&joint, &[U1], &[U2], &[Q]) + direct_cmi(&joint, &[U1, U2], &[V1], &[Q]);
        let pen_u1 = direct_cmi(&joint, &[U1], &[S], &[Q]);
        let pen_v1 = direct_cmi(&joint, &[V1], &[S], &[Q]);
        let pen_u2 = direct_cmi(&joint, &[U2], &[S], &[Q]);
        let expected_r11 = prefix1 + direct_cmi(&joint, &[V1], &[Y1], &[U1, U2, Q]) - pen_v1;
        let expected_g1 =
            prefix1 + direct_cmi(&joint, &[U1, V1, U2], &[Y1], &[Q]) - pen_u1 - pen_v1 - pen_u2;
        assert!(
            (rhs_of(&sys, [0.0, 1.0, 0.0, 0.0], 0) - expected_r11).abs() < 1e-10,
            "trial {trial}: R11 row"
        );
        assert!(
            (rhs_of(&sys, [1.0, 1.0, 1.0, 0.0], 0) - expected_g1).abs() < 1e-10,
            "trial {trial}: full receiver-1 row"
        );
        // Receiver 2's mixed-penalty row.
        let prefix2 =
            direct_cmi(&joint, &[U2], &[U1], &[Q]) + direct_cmi(&joint, &[U2, U1], &[V2], &[Q]);
        let expected_e2 = prefix2 + direct_cmi(&joint, &[V2, U1], &[Y2], &[U2, Q])
            - direct_cmi(&joint, &[V2], &[S], &[Q])
            - pen_u1;
        assert!(
            (rhs_of(&sys, [1.0, 0.0, 0.0, 1.0], 0) - expected_e2).abs() < 1e-10,
            "trial {trial}: R10+R22 row"
        );
    }
}

#[test]
fn superposition_rhs_match_direct_summation() {
    use Var::*;
    let mut r = rng(32);
    for trial in 0..12 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Superposition, true);
        let sys = superposition_system(&scheme).unwrap();
        assert_eq!(sys.rows().len(), 4 + 8, "non-negativity plus eight rows");
        let joint = scheme.build_joint().unwrap();
        let prefix1 = direct_cmi(&joint, &[U1, V1], &[U2], &[Q]);
        let expected_r11 = prefix1 + direct_cmi(&joint, &[V1], &[Y1], &[U1, U2, Q])
            - direct_cmi(&joint, &[V1], &[S], &[U1, Q]);
        let expected_d1 = prefix1 + direct_cmi(&joint, &[U1, V1], &[Y1], &[U2, Q])
            - direct_cmi(&joint, &[U1, V1], &[S], &[Q]);
        assert!(
            (rhs_of(&sys, [0.0, 1.0, 0.0, 0.0], 0) - expected_r11).abs() < 1e-10,
            "trial {trial}: R11 row"
        );
        assert!(
            (rhs_of(&sys, [1.0, 1.0, 0.0, 0.0], 0) - expected_d1).abs() < 1e-10,
            "trial {trial}: R10+R11 row"
        );
    }
}

#[test]
fn embedding_keeps_joint_and_contains_region() {
    let mut r = rng(33);
    for trial in 0..10 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Simultaneous, false);
        let embedded = embed_simultaneous(&scheme).unwrap();
        let j1 = scheme.build_joint().unwrap();
        let j2 = embedded.build_joint().unwrap();
        for (a, b) in j1.weights().iter().zip(j2.weights()) {
            assert!((a - b).abs() <= 1e-12, "trial {trial}: joint changed");
        }
        let r1 = dm_region(&scheme).unwrap();
        let r2 = dm_region(&embedded).unwrap();
        assert!(
            r2.contains(&r1, 1e-9),
            "trial {trial}: simultaneous region escapes the superposition region"
        );
    }
}

#[test]
fn user_swap_transposes_region() {
    let mut r = rng(34);
    for trial in 0..8 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Simultaneous, true);
        let swapped = swap_users(&scheme);
        let base = dm_region(&scheme).unwrap();
        let mirrored = dm_region(&swapped).unwrap();
        assert!(
            base.transposed().hausdorff(&mirrored) <= 1e-9,
            "trial {trial}: swap is not a transpose"
        );
    }
}

#[test]
fn conditional_independence_of_public_and_private_given_qs() {
    use Var::*;
    let mut r = rng(35);
    for _ in 0..10 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Simultaneous, true);
        let joint = scheme.build_joint().unwrap();
        assert!((joint.total() - 1.0).abs() < 1e-10);
        let i = cond_mutual_info(
            &joint,
            VarSet::of(&[U1]),
            VarSet::of(&[V1]),
            VarSet::of(&[Q, S]),
        );
        assert!(
            i.abs() < 1e-10,
            "U1 and V1 must be independent given (Q, S)"
        );
        let i12 = cond_mutual_info(
            &joint,
            VarSet::of(&[U1]),
            VarSet::of(&[U2]),
            VarSet::of(&[Q, S]),
        );
        assert!(i12.abs() < 1e-10);
    }
}

#[test]
fn chain_rule_and_nonnegativity_on_random_joints() {
    use Var::*;
    let mut r = rng(36);
    for _ in 0..30 {
        let scheme = random_binary_scheme(&mut r, EncodingMode::Simultaneous, true);
        let joint = scheme.build_joint().unwrap();
        // I(X;Y) + I(X;Z|Y) = I(X;YZ)
        let lhs = cond_mutual_info(
            &joint,
            VarSet::of(&[X1]),
            VarSet::of(&[Y1]),
            VarSet::default(),
        ) + cond_mutual_info(
            &joint,
            VarSet::of(&[X1]),
            VarSet::of(&[Y2]),
            VarSet::of(&[Y1]),
        );
        let rhs = cond_mutual_info(
            &joint,
            VarSet::of(&[X1]),
            VarSet::of(&[Y1, Y2]),
            VarSet::default(),
        );
        assert!((lhs - rhs).abs() < 1e-12);
        for (a, b, c) in [
            ([U1], [Y1], vec![]),
            ([V2], [S], vec![Q]),
            ([X1], [Y2], vec![S, Q]),
        ] {
            let i = cond_mutual_info(&joint, VarSet::of(&a), VarSet::of(&b), VarSet::of(&c));
            assert!(i >= -1e-12, "negative information {i}");
        }
    }
}
