//! Classify the Gauss maps of a gallery of profiles as harmonic, first/second
//! kind pointwise 1-type, or generalized 1-type.
//!
//! Run: cargo run --example classify_gauss_maps

use mink4_gauss::classify::{classify, sample_plan};
use mink4_gauss::{AxisKind, Profile, RotSurface};

fn main() -> mink4_gauss::Result<()> {
    let gallery = [
        (AxisKind::Spacelike, "const:1", 1u32),
        (AxisKind::Spacelike, "linear:0.5,0", 1),
        (AxisKind::Spacelike, "linear:0.5,0", 2),
        (AxisKind::Spacelike, "firstkind-s:1,0,0,+", 1),
        (AxisKind::Spacelike, "minimal-s:1", 1),
        (AxisKind::Spacelike, "tanh:0.6", 1),
        (AxisKind::Timelike, "firstkind-t:3,0,0,+", 1),
        (AxisKind::Timelike, "flat-t:2", 2),
        (AxisKind::Lightlike, "flat-l:0.3,0.4", 1),
        (AxisKind::Lightlike, "poly:0.2,0.1,0.05", 2),
    ];
    println!("{:<10} {:<22} k  verdict       margin", "axis", "profile");
    for (axis, spec, k) in gallery {
        let surface = RotSurface::new(axis, Profile::parse(spec)?)?;
        let plan = sample_plan(&surface);
        let v = classify(&surface, &plan, k, 1e-7)?;
        let c = match v.c {
            Some(c) => format!("  C = {:?}", c.to_array()),
            None => String::new(),
        };
        println!(
            "{:<10} {:<22} {}  {:<12} {:.2e}{c}",
            axis.name(),
            spec,
            k,
            v.kind.name(),
            v.margin
        );
    }
    Ok(())
}
