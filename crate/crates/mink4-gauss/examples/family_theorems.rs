//! Exercise the explicit solution families: flat/minimal corollaries against
//! the general closed forms, and the arc-integral first-kind families against
//! their defining pointwise condition.
//!
//! Run: cargo run --example family_theorems

use mink4_gauss::classify::{decompose, ode_residual, OdeKind};
use mink4_gauss::closed_form::{lk_gauss_closed, special_case_closed};
use mink4_gauss::{AxisKind, Profile, RotSurface, SpecialCase, SurfPoint};

fn main() -> mink4_gauss::Result<()> {
    println!("flat/minimal corollaries (worst scaled deviation over 10 points):");
    for (axis, spec, case, k) in [
        (AxisKind::Spacelike, "flat-s:1", SpecialCase::Flat, 1u32),
        (AxisKind::Spacelike, "minimal-s:1", SpecialCase::Minimal, 1),
        (AxisKind::Spacelike, "minimal-s:1", SpecialCase::Minimal, 2),
        (AxisKind::Timelike, "flat-t:2", SpecialCase::Flat, 1),
        (AxisKind::Timelike, "minimal-t:2", SpecialCase::Minimal, 1),
        (AxisKind::Timelike, "minimal-t:2", SpecialCase::Minimal, 2),
        (AxisKind::Lightlike, "flat-l:0,1", SpecialCase::Flat, 1),
    ] {
        let surface = RotSurface::new(axis, Profile::parse(spec)?)?;
        let (lo, hi) = surface.profile().default_s_range();
        let mut worst = 0.0f64;
        for i in 0..10 {
            let s = lo + (hi - lo) * i as f64 / 9.0;
            let p = SurfPoint::new(s, 0.4, -0.6);
            let e = special_case_closed(&surface, p, case, k)?;
            let closed = lk_gauss_closed(&surface, p, k)?.result;
            let scale = 1.0 + closed.norm();
            worst = worst.max((e.proposition - closed).norm() / scale);
            if let Some(c) = e.corollary {
                worst = worst.max((c - closed).norm() / scale);
            }
        }
        println!("  {:<10} {spec:<14} k={k}: {worst:.3e}", axis.name());
    }

    println!("\nfirst-kind families (pointwise condition and n = 0):");
    for (axis, spec) in [
        (AxisKind::Spacelike, "firstkind-s:1,1,0,+"),
        (AxisKind::Timelike, "firstkind-t:3,0,0,-"),
    ] {
        let surface = RotSurface::new(axis, Profile::parse(spec)?)?;
        let (lo, hi) = surface.profile().default_s_range();
        let mut worst_ode = 0.0f64;
        let mut worst_n = 0.0f64;
        for i in 0..20 {
            let s = lo + (hi - lo) * i as f64 / 19.0;
            worst_ode = worst_ode.max(ode_residual(&surface, s, 1, OdeKind::FirstKind, 0.0)?.abs());
            let d = decompose(&surface, SurfPoint::new(s, 0.3, -0.4), 1)?;
            worst_n = worst_n.max(d.n.abs());
        }
        println!("  {:<10} {spec:<20}: ODE residual {worst_ode:.3e}, |n| {worst_n:.3e}", axis.name());
    }
    Ok(())
}
