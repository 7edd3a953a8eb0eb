//! Module-level invariant sweeps at their own (tighter) tolerances,
//! complementing the acceptance criteria.

use mink4_gauss::classify::{classify, sample_plan, Kind};
use mink4_gauss::closed_form::{lk_gauss_closed, special_case_closed};
use mink4_gauss::operator::{ak_closed, lk_gauss_generic};
use mink4_gauss::profile::{Profile, SpecialCase};
use mink4_gauss::sample::config;
use mink4_gauss::surface::{AxisKind, RotSurface, SurfPoint};

const AXES: [AxisKind; 3] = [AxisKind::Spacelike, AxisKind::Timelike, AxisKind::Lightlike];

#[test]
fn transcription_soundness_closed_vs_generic_1e8() {
    // the expanded formulas match the operator identity componentwise to
    // 1e-8 (1 + ||.||) on 200 seeded configurations per axis and k — any
    // violation pinpoints a transcription (or source) error
    for axis in AXES {
        for k in [1u32, 2] {
            for i in 0..200u64 {
                let cfg = config(axis, 1042 + k as u64, i);
                let generic = lk_gauss_generic(&cfg.surface, cfg.point, k).unwrap();
                let b = lk_gauss_closed(&cfg.surface, cfg.point, k).unwrap();
                let dev = (b.result - generic).max_abs() / (1.0 + generic.norm());
                assert!(
                    dev <= 1e-8,
                    "{axis:?} k={k} profile {} at {:?}: deviation {dev:.3e}; aggregates {:?}",
                    cfg.surface.profile(),
                    cfg.point,
                    b.aggregates
                );
            }
        }
    }
}

#[test]
fn flat_families_are_l2_harmonic_to_1e10_absolute() {
    for (axis, spec) in [
        (AxisKind::Spacelike, "flat-s:2"),
        (AxisKind::Spacelike, "flat-s:0.4"),
        (AxisKind::Timelike, "flat-t:3"),
        (AxisKind::Lightlike, "flat-l:0.3,0.5"),
    ] {
        let s = RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap();
        for i in 0..25 {
            let p = SurfPoint::new(1.05 + 0.09 * i as f64, 0.3, -0.5);
            let norm = lk_gauss_closed(&s, p, 2).unwrap().result.norm();
            assert!(norm <= 1e-10, "{spec} at s = {}: ||L2N|| = {norm:.3e}", p.s);
        }
    }
}

#[test]
fn three_evaluation_layers_agree_on_special_families() {
    // general closed form, proposition A-form, and corollary form pairwise
    // within 1e-9 relative on the flat/minimal families
    for (axis, spec, case) in [
        (AxisKind::Spacelike, "flat-s:1.7", SpecialCase::Flat),
        (AxisKind::Spacelike, "minimal-s:1.3", SpecialCase::Minimal),
        (AxisKind::Timelike, "flat-t:2.4", SpecialCase::Flat),
        (AxisKind::Timelike, "minimal-t:2", SpecialCase::Minimal),
        (AxisKind::Lightlike, "flat-l:-0.4,0.8", SpecialCase::Flat),
    ] {
        let s = RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap();
        let (lo, hi) = s.profile().default_s_range();
        for k in [1u32, 2] {
            for i in 0..8 {
                let p = SurfPoint::new(lo + (hi - lo) * i as f64 / 7.0, 0.45, -0.35);
                let closed = lk_gauss_closed(&s, p, k).unwrap().result;
                let e = special_case_closed(&s, p, case, k).unwrap();
                let c = e.corollary.expect("named family");
                let scale = 1.0 + closed.norm();
                assert!(
                    (e.proposition - closed).norm() <= 1e-9 * scale,
                    "{spec} k={k} proposition at s={}",
                    p.s
                );
                assert!(
                    (c - closed).norm() <= 1e-9 * scale,
                    "{spec} k={k} corollary at s={}",
                    p.s
                );
                assert!((e.proposition - c).norm() <= 1e-9 * scale);
            }
        }
    }
}

#[test]
fn minimal_and_flat_family_defects() {
    // minimal families keep |a1| <= 1e-9, flat families keep |a3| <= 1e-12,
    // across their validity ranges
    for (axis, spec, idx, tol) in [
        (AxisKind::Spacelike, "minimal-s:1", 0usize, 1e-9),
        (AxisKind::Spacelike, "minimal-s:0.7", 0, 1e-9),
        (AxisKind::Timelike, "minimal-t:2", 0, 1e-9),
        (AxisKind::Spacelike, "flat-s:2", 2, 1e-12),
        (AxisKind::Timelike, "flat-t:3", 2, 1e-12),
        (AxisKind::Lightlike, "flat-l:0.2,0.4", 2, 1e-12),
    ] {
        let s = RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap();
        let (lo, hi) = s.profile().default_s_range();
        for i in 0..25 {
            let sv = lo + (hi - lo) * i as f64 / 24.0;
            let ak = ak_closed(&s, sv).unwrap();
            assert!(ak[idx].abs() <= tol, "{spec} at s = {sv}: |a| = {:.3e}", ak[idx].abs());
        }
    }
}

#[test]
fn harmonic_verdicts_sit_atop_the_lattice() {
    // harmonic maps trivially satisfy every residual-based fit (L = 0 closes
    // each decomposition with zero functions); the classifier must report
    // the strongest property and the fits must close numerically
    for (axis, spec, k) in [
        (AxisKind::Spacelike, "const:1", 1u32),
        (AxisKind::Spacelike, "linear:0.5,0", 2),
        (AxisKind::Timelike, "linear:1.5,0.3", 2),
        (AxisKind::Lightlike, "linear:0.5,3", 2),
    ] {
        let s = RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap();
        let plan = sample_plan(&s);
        let v = classify(&s, &plan, k, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::Harmonic, "{axis:?} {spec} k={k}");
        for p in &plan {
            let l = lk_gauss_generic(&s, *p, k).unwrap();
            // the m = n = 0 fit closes exactly
            assert!(l.norm() <= 1e-7 * (1.0 + l.norm()));
        }
    }
}
