use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::*;
use crate::affine::{is_valid_shape, CylindricShape};
use crate::partitions::{enumerate_strict, BoxedPartition};
use crate::symfun::flat::{psi_flat, skew_e, skew_h, theta_flat};

fn ctx(n: usize, k: usize) -> Context {
    Context::new(n, k).unwrap()
}

fn w(c: Context, parts: &[usize]) -> AlcoveWeight {
    AlcoveWeight::new(c, parts.to_vec()).unwrap()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn theta_anchors() {
    let c = ctx(2, 1);
    assert_eq!(theta_cyl(&w(c, &[1]), 1, &w(c, &[1])), int(1));
    assert_eq!(theta_cyl_oracle(&w(c, &[1]), 1, &w(c, &[1])), int(1));
    let c = ctx(2, 2);
    assert_eq!(theta_cyl(&w(c, &[2, 1]), 1, &w(c, &[2, 1])), int(3));
    assert_eq!(theta_cyl_oracle(&w(c, &[2, 1]), 1, &w(c, &[2, 1])), int(3));
    for l in enumerate_alcove(ctx(3, 2)) {
        assert_eq!(theta_cyl(&l, 0, &l), int(1));
    }
}

#[test]
fn psi_example_and_vertical_strips() {
    let c = ctx(2, 2);
    let (l, m) = (w(c, &[2, 1]), w(c, &[2, 2]));
    assert_eq!(psi_cyl(&l, 1, &m), psi_cyl_oracle(&l, 1, &m));
    assert_eq!(psi_cyl(&l, 1, &m), int(1));
    for (l, d, m) in shapes(ctx(4, 3), 2) {
        if !is_vertical_strip(&l, d, &m) {
            assert!(psi_cyl(&l, d, &m).is_zero());
        }
    }
}

#[test]
fn degree_zero_matches_flat_statistics() {
    for (l, _, m) in shapes(ctx(4, 3), 0) {
        let (lp, mp) = (l.as_partition(), m.as_partition());
        assert_eq!(theta_cyl(&l, 0, &m), theta_flat(&lp, &mp));
        assert_eq!(psi_cyl(&l, 0, &m), psi_flat(&lp, &mp));
        assert_eq!(cyl_h(&l, 0, &m), skew_h(&lp, &mp));
        assert_eq!(cyl_e(&l, 0, &m), skew_e(&lp, &mp));
    }
}

#[test]
fn formulas_match_oracles() {
    for (n, k) in [(2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3)] {
        let report = oracle_report(ctx(n, k), 3);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn theta_vanishes_exactly_on_invalid_shapes() {
    for (n, k) in [(3, 2), (4, 3)] {
        for (l, d, m) in shapes(ctx(n, k), 3) {
            assert_eq!(theta_cyl(&l, d, &m).is_zero(), !is_valid_shape(&l, d, &m), "{l}/{d}/{m}");
        }
    }
}

#[test]
fn adjacent_column_figure_values() {
    let c = ctx(4, 3);
    let mu = w(c, &[2, 2, 1]);
    let lam = w(c, &[2, 1, 1]);
    let nu = w(c, &[4, 2, 1]);
    let strip = reduce_adjacent_strip(&lam, 1, &mu).unwrap();
    assert_eq!((strip.start, strip.length), (3, 3));
    assert_eq!(phi_cyl(&lam, 1, &mu), int(2));
    let strip = reduce_adjacent_strip(&nu, 1, &mu).unwrap();
    assert_eq!((strip.start, strip.length, strip.windings), (3, 6, 1));
    assert_eq!(phi_cyl(&nu, 1, &mu), int(1));
    assert_eq!(phi_cyl(&mu, 1, &mu), int(3));
}

#[test]
fn phi_shift_identity() {
    let c = ctx(3, 2);
    for (l, d, m) in shapes(c, 2) {
        let size = shape_size(&l, d, &m);
        if size <= 3 || d == 0 {
            continue;
        }
        let first = size as usize;
        assert_eq!(phi_weight(&l, d, &m, &[first]), phi_weight(&l, d - 1, &m, &[first - 3]), "{l}/{d}/{m}");
        if size > 4 {
            let parts = [first - 1, 1];
            let shifted = [first - 4, 1];
            assert_eq!(phi_weight(&l, d, &m, &parts), phi_weight(&l, d - 1, &m, &shifted));
        }
    }
}

#[test]
fn ribbon_figure_heights() {
    let c = ctx(5, 2);
    let lam = BoxedPartition::parse(c, "2,1").unwrap().to_strict();
    let mu = BoxedPartition::parse(c, "2,2").unwrap().to_strict();
    assert_eq!(shape_size(&lam, 1, &mu), 4);
    assert_eq!(ribbon_height(&lam, 1, &mu), Some(2));
    assert_eq!(chi_cyl(&lam, 1, &mu), int(-1));
    assert_eq!(shape_size(&lam, 2, &mu), 9);
    assert_eq!(ribbon_height(&lam, 2, &mu), Some(3));
    assert_eq!(chi_cyl(&lam, 2, &mu), int(1));
}

#[test]
fn ribbon_signs_match_alternating_tensors() {
    for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 3), (4, 1)] {
        let c = ctx(n, k);
        for l in enumerate_strict(c) {
            for m in enumerate_strict(c) {
                for d in 0..=3 {
                    assert_eq!(chi_cyl(&l, d, &m), chi_cyl_oracle(&l, d, &m), "{n},{k}: {l}/{d}/{m}");
                }
            }
        }
    }
}

#[test]
fn chi_winding_recurrence() {
    let c = ctx(5, 2);
    for l in enumerate_strict(c) {
        for m in enumerate_strict(c) {
            for d in 1..=3 {
                let r = shape_size(&l, d, &m);
                if r > 5 {
                    assert_eq!(chi_cyl(&l, d, &m), -chi_cyl(&l, d - 1, &m), "{l}/{d}/{m}");
                }
            }
        }
    }
}

#[test]
fn single_row_weight_has_one_filling() {
    let c = ctx(3, 2);
    for (l, d, m) in shapes(c, 2) {
        if !is_valid_shape(&l, d, &m) {
            continue;
        }
        let shape = CylindricShape::new(l.clone(), d, m.clone()).unwrap();
        let size = shape.size() as usize;
        let all = enumerate_crpp(&shape, &Filling::Weight(vec![size]), CrppKind::General);
        assert_eq!(all.len(), 1, "{l}/{d}/{m}");
        assert_eq!(all[0].theta(), theta_cyl(&l, d, &m));
        assert_eq!(theta_weight(&l, d, &m, &[size]), theta_cyl(&l, d, &m));
    }
    let l = w(c, &[2, 1]);
    let shape = CylindricShape::new(l.clone(), 0, l.clone()).unwrap();
    let trivial = enumerate_crpp(&shape, &Filling::Weight(vec![]), CrppKind::General);
    assert_eq!(trivial.len(), 1);
    assert_eq!(trivial[0].levels(), 0);
}

#[test]
fn enumeration_sums_match_transfer_weights() {
    let c = ctx(3, 2);
    let weights: [&[usize]; 4] = [&[2, 1], &[1, 2], &[1, 1, 1], &[3, 1]];
    for (l, d, m) in shapes(c, 1) {
        let Ok(shape) = CylindricShape::new(l.clone(), d, m.clone()) else { continue };
        for nu in weights {
            let filling = Filling::Weight(nu.to_vec());
            let theta: BigInt = enumerate_crpp(&shape, &filling, CrppKind::General).iter().map(Crpp::theta).sum();
            assert_eq!(theta, theta_weight(&l, d, &m, nu));
            let psi: BigInt = enumerate_crpp(&shape, &filling, CrppKind::RowStrict).iter().map(Crpp::psi).sum();
            assert_eq!(psi, psi_weight(&l, d, &m, nu));
            let phi: BigInt = enumerate_crpp(&shape, &filling, CrppKind::AdjacentColumn).iter().map(Crpp::phi).sum();
            assert_eq!(phi, phi_weight(&l, d, &m, nu));
        }
    }
}

#[test]
fn weights_are_invariant_under_reordering() {
    let c = ctx(3, 2);
    for (l, d, m) in shapes(c, 1) {
        for (a, b) in [(&[2usize, 1, 1][..], &[1usize, 2, 1][..]), (&[3, 1], &[1, 3]), (&[2, 2, 1], &[1, 2, 2])] {
            assert_eq!(theta_weight(&l, d, &m, a), theta_weight(&l, d, &m, b));
            assert_eq!(psi_weight(&l, d, &m, a), psi_weight(&l, d, &m, b));
        }
        assert!(theta_weight(&l, d, &m, &[5, 5, 5, 5]).is_zero() || shape_size(&l, d, &m) == 20);
    }
}

#[test]
fn vee_figure_example() {
    let c = ctx(4, 3);
    let shape = CylindricShape::new(w(c, &[4, 3, 2]), 1, w(c, &[2, 2, 1])).unwrap();
    let all = enumerate_crpp(&shape, &Filling::Weight(vec![4, 3, 1]), CrppKind::General);
    assert!(!all.is_empty());
    for pi in &all {
        let dual = pi.vee().unwrap();
        assert_eq!(dual.shape(), CylindricShape::new(w(c, &[4, 3, 3]), 1, w(c, &[3, 2, 1])).unwrap());
        assert_eq!(dual.weight(), vec![1, 3, 4]);
        assert_eq!(dual.vee().unwrap(), *pi);
        assert_eq!(pi.theta() * BigInt::from(1), dual.theta() * shape.outer.stab_order() / shape.inner.stab_order());
    }
}

#[test]
fn vee_is_an_involution_on_random_shapes() {
    let c = ctx(4, 3);
    let mut pool: Vec<_> = shapes(c, 1).into_iter().filter(|(l, d, m)| is_valid_shape(l, *d, m)).collect();
    pool.shuffle(&mut StdRng::seed_from_u64(7));
    for (l, d, m) in pool.into_iter().take(10) {
        let shape = CylindricShape::new(l.clone(), d, m.clone()).unwrap();
        for kind in [CrppKind::General, CrppKind::RowStrict] {
            for pi in enumerate_crpp(&shape, &Filling::Levels(3), kind) {
                let dual = pi.vee().unwrap();
                assert_eq!(dual.vee().unwrap(), pi);
                let mut reversed = pi.weight();
                reversed.reverse();
                assert_eq!(dual.weight(), reversed);
                assert_eq!(pi.theta() * m.stab_order(), dual.theta() * l.stab_order());
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    let c = ctx(3, 2);
    let shape = CylindricShape::new(w(c, &[3, 2]), 1, w(c, &[2, 1])).unwrap();
    let all = enumerate_crpp(&shape, &Filling::Levels(3), CrppKind::General);
    assert!(all.windows(2).all(|p| p[0] < p[1]));
    let bad = CylindricShape::new(w(c, &[1, 1]), 0, w(c, &[3, 3])).unwrap();
    assert!(enumerate_crpp(&bad, &Filling::Levels(2), CrppKind::General).is_empty());
    assert!(!all[0].render().is_empty());
}

#[test]
fn routes_agree_small() {
    for (n, k) in [(2, 2), (3, 2)] {
        let report = route_report(ctx(n, k), 2);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn antipode_and_duality() {
    for (n, k) in [(3, 2), (4, 3)] {
        let report = symmetry_report(ctx(n, k), 1);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn nonskew_family() {
    let fc = FusionContext::new(ctx(3, 2));
    let report = nonskew_report(&fc, 2);
    assert!(report.passed(), "{report}");
    let c = ctx(3, 2);
    let top = AlcoveWeight::top(c);
    let delta = cyl_in_nonskew(&fc, &w(c, &[2, 1]), 1, &top);
    assert!(delta.keys().all(|(s, _)| *s == w(c, &[2, 1])));
}

#[test]
fn coproduct_small() {
    let fc = FusionContext::new(ctx(3, 2));
    let report = coalgebra_report(&fc, 1, 5);
    assert!(report.passed(), "{report}");
}
