//! Library-level verification sweep: random valid configurations on every
//! axis, checking Gauss-map normalization, shape-operator eigenvalues, the
//! two a_k routes, and three-path L_k N agreement.
//!
//! Run: cargo run --release --example cross_verification

use mink4_gauss::closed_form::lk_gauss_closed;
use mink4_gauss::linalg::eigenvalues_real;
use mink4_gauss::minkowski::mink_dot;
use mink4_gauss::operator::{ak_closed, lk_gauss_generic, lk_trace, mean_curvature_jets};
use mink4_gauss::sample::config;
use mink4_gauss::AxisKind;

fn main() -> mink4_gauss::Result<()> {
    let n = 150u64;
    for axis in [AxisKind::Spacelike, AxisKind::Timelike, AxisKind::Lightlike] {
        let mut worst = [0.0f64; 5]; // norm, eigen, ak, closed, trace
        for i in 0..n {
            let cfg = config(axis, 2024, i);
            let p = cfg.point;
            let s = &cfg.surface;

            let nvec = s.gauss_map(p)?;
            worst[0] = worst[0].max((mink_dot(nvec, nvec) - 1.0).abs());

            let ev = eigenvalues_real(&s.shape_operator(p)?);
            let c = s.principal_curvatures(p.s)?;
            let mut kap = [c.kappa1, c.kappa2, c.kappa3];
            kap.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let kscale = 1.0 + kap.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for (a, b) in ev.iter().zip(kap.iter()) {
                worst[1] = worst[1].max((a - b).abs() / kscale);
            }

            let jets = mean_curvature_jets(s, p.s)?;
            let sym = [jets.a1.value, jets.a2.value, jets.a3.value];
            for (a, b) in ak_closed(s, p.s)?.iter().zip(sym.iter()) {
                worst[2] = worst[2].max((a - b).abs() / (1.0 + a.abs()));
            }

            for k in [1u32, 2] {
                let generic = lk_gauss_generic(s, p, k)?;
                let scale = 1.0 + generic.norm();
                worst[3] =
                    worst[3].max((lk_gauss_closed(s, p, k)?.result - generic).max_abs() / scale);
                worst[4] = worst[4].max((lk_trace(s, p, k)? - generic).max_abs() / scale);
            }
        }
        println!("{} axis ({n} configurations):", axis.name());
        println!("  |<N,N>-1|            worst {:.3e}", worst[0]);
        println!("  shape eigen vs kappa worst {:.3e}", worst[1]);
        println!("  a_k two routes       worst {:.3e}", worst[2]);
        println!("  closed vs generic    worst {:.3e}", worst[3]);
        println!("  trace  vs generic    worst {:.3e}", worst[4]);
    }
    Ok(())
}
