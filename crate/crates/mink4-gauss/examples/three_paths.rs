//! Evaluate L_k N along the three independent computation paths and compare.
//!
//! The closed path evaluates the expanded per-axis polynomial formulas, the
//! generic path assembles the operator identity from mean curvatures and the
//! intrinsic gradient, and the trace path computes tr(P_k ∘ Hess N)
//! componentwise from the shape operator. Agreement across all three is the
//! crate's central invariant.
//!
//! Run: cargo run --example three_paths

use mink4_gauss::closed_form::lk_gauss_closed;
use mink4_gauss::operator::{lk_gauss_generic, lk_trace, trace_gauge};
use mink4_gauss::{AxisKind, Profile, RotSurface, SurfPoint};

fn main() -> mink4_gauss::Result<()> {
    println!("Newton trace gauge: {}\n", trace_gauge()?.name());

    let cases = [
        (AxisKind::Spacelike, "linear:0.5,0", SurfPoint::new(2.0, 0.0, 0.0)),
        (AxisKind::Spacelike, "minimal-s:1", SurfPoint::new(1.2, 0.25, 0.55)),
        (AxisKind::Timelike, "minimal-t:2", SurfPoint::new(1.1, 0.4, 2.0)),
        (AxisKind::Lightlike, "poly:0.2,0.1,0.05", SurfPoint::new(1.5, 0.7, -0.3)),
    ];

    for (axis, spec, p) in cases {
        let surface = RotSurface::new(axis, Profile::parse(spec)?)?;
        println!("{} axis, profile {spec}, point ({}, {}, {})", axis.name(), p.s, p.t, p.w);
        for k in [1u32, 2] {
            let closed = lk_gauss_closed(&surface, p, k)?.result;
            let generic = lk_gauss_generic(&surface, p, k)?;
            let trace = lk_trace(&surface, p, k)?;
            let scale = 1.0 + generic.norm();
            println!("  L{k}N closed  = {:?}", closed.to_array());
            println!("  L{k}N generic = {:?}", generic.to_array());
            println!("  L{k}N trace   = {:?}", trace.to_array());
            println!(
                "  scaled deviations: closed {:.2e}, trace {:.2e}",
                (closed - generic).max_abs() / scale,
                (trace - generic).max_abs() / scale
            );
        }
        println!();
    }
    Ok(())
}
