//! Gauss-map type decision procedures: the (m, n, C) decomposition of
//! L_k N = m N + n C, pointwise ODE residuals for the first/second-kind
//! conditions, the explicit solution families, and the sampled classifier.
//!
//! The constant direction C is forced by the component structure of L_k N:
//! (0,0,0,1) for the spacelike axis, (1,0,0,0) for the timelike axis, and
//! (1,1,0,0) for the lightlike axis. The lightlike case extends the printed
//! classification systems (which cover only the other two axes): there
//! `d_s Gamma = sqrt(1-f'^2) N + (1+f') (1,1,0,0)`, so the decomposition is
//! exact with C along the axis direction.

use crate::error::{Error, Result};
use crate::minkowski::MinkVec4;
use crate::operator::lk_gauss_generic;
use crate::profile::{Branch, Profile};
use crate::surface::{AxisKind, RotSurface, SurfPoint};

/// Pointwise decomposition L_k N = m N + n C with C normalized so its first
/// nonzero component is 1.
#[derive(Clone, Copy, Debug)]
pub struct Decomposition {
    pub m: f64,
    pub n: f64,
    /// normalized constant direction (axis pattern)
    pub c: MinkVec4,
    /// || L_k N - m N - n C || (euclidean component norm)
    pub residual: f64,
    /// the printed closed-form value of m, where the source provides one
    /// (spacelike/timelike axes)
    pub m_closed_form: Option<f64>,
    /// the printed closed-form value of n (with the C component set to 1)
    pub n_closed_form: Option<f64>,
}

/// The normalized constant direction used for the given axis.
pub fn c_pattern(axis: AxisKind) -> MinkVec4 {
    match axis {
        AxisKind::Spacelike => MinkVec4::new(0.0, 0.0, 0.0, 1.0),
        AxisKind::Timelike => MinkVec4::new(1.0, 0.0, 0.0, 0.0),
        AxisKind::Lightlike => MinkVec4::new(1.0, 1.0, 0.0, 0.0),
    }
}

/// The printed generalized-1-type formulas for (m, n) on the spacelike and
/// timelike axes, with the constant C component normalized to 1. The
/// lightlike axis has no printed system; returns (None, None) there.
pub fn printed_mn(surface: &RotSurface, s: f64, k: u32) -> Result<(Option<f64>, Option<f64>)> {
    let fj = surface.profile_jet(s)?;
    let (f1, f2, f3) = (fj.ds, fj.ds2, fj.ds3);
    let om = f1 * f1 - 1.0;
    Ok(match (surface.axis(), k) {
        (AxisKind::Spacelike, 1) => {
            let m = -(-2.0 * om.powi(3) * f1 * f1 + 2.0 * s * om * f1.powi(3) * f2
                - 2.0 * s * s * ((4.0 * f1 * f1 + 1.0) * f2 * f2 - om * f1 * f3))
                / (s.powi(3) * f1 * (1.0 - f1 * f1).powf(3.5));
            let n = (2.0 * (s * s * f3 * om + f1 * (om * om - 3.0 * s * s * f2 * f2)) * f1
                - 2.0 * s * s * f2 * f2)
                / (s.powi(3) * f1 * om.powi(3));
            (Some(m), Some(n))
        }
        (AxisKind::Timelike, 1) => {
            let m = -2.0
                * (3.0 * f1.powi(4) * (1.0 - f1 * f1) + f1.powi(8) - s * f1.powi(5) * f2
                    + s * s * f2 * f2
                    + (4.0 * s * s * f2 * f2 - 1.0) * f1 * f1
                    + s * s * f1 * f3
                    + s * f1.powi(3) * (f2 - s * f3))
                / (s.powi(3) * f1 * om.powf(3.5));
            let n = (2.0 * (f1 * (om * om - 3.0 * s * s * f2 * f2) + s * s * om * f3) * f1
                - 2.0 * s * s * f2 * f2)
                / (s.powi(3) * f1 * om.powi(3));
            (Some(m), Some(n))
        }
        (AxisKind::Spacelike, 2) => {
            let m = (2.0 * f2 * (f1 * om * om - s * (2.0 * f1 * f1 + 1.0) * f2)
                + s * om * f1 * f3)
                / (s.powi(3) * om.powi(4));
            let n = -(f2 * (2.0 * f1 * om + s * (3.0 * f1 * f1 + 2.0) * f2) - s * om * f1 * f3)
                / (s.powi(3) * (1.0 - f1 * f1).powf(3.5));
            (Some(m), Some(n))
        }
        (AxisKind::Timelike, 2) => {
            let m = (2.0 * f2 * (f1 * om * om - s * (2.0 * f1 * f1 + 1.0) * f2)
                + s * om * f1 * f3)
                / (s.powi(3) * om.powi(4));
            let n = (s * om * f1 * f3 - (2.0 * f1 * om + s * (3.0 * f1 * f1 + 2.0) * f2) * f2)
                / (s.powi(3) * om.powf(3.5));
            (Some(m), Some(n))
        }
        (AxisKind::Lightlike, _) => (None, None),
        (_, other) => return Err(Error::UnsupportedK(other)),
    })
}

/// Solve L_k N = m N + n C at a point. m comes from the rotationally
/// symmetric components (least squares over them), n from the
/// axis-distinguished component(s); the residual reports how exactly the
/// decomposition closes.
pub fn decompose(surface: &RotSurface, p: SurfPoint, k: u32) -> Result<Decomposition> {
    if !(k == 1 || k == 2) {
        return Err(Error::UnsupportedK(k));
    }
    let n_vec = surface.gauss_map(p)?;
    let l_vec = lk_gauss_generic(surface, p, k)?;
    if l_vec.norm() <= 1e-13 * (1.0 + n_vec.norm()) {
        // f' = 0 (k = 1) or f'' = 0 (k = 2) collapse L_k N to zero: no
        // decomposition with nonzero functions exists
        return Err(Error::IndeterminateDecomposition(format!(
            "L_{k} N vanishes at {p:?} (the harmonic case)"
        )));
    }
    let c = c_pattern(surface.axis());

    let (sym_idx, ax_idx): (&[usize], &[usize]) = match surface.axis() {
        AxisKind::Spacelike => (&[0, 1, 2], &[3]),
        AxisKind::Timelike => (&[1, 2, 3], &[0]),
        AxisKind::Lightlike => (&[2, 3], &[0, 1]),
    };
    let na = n_vec.to_array();
    let la = l_vec.to_array();
    let ca = c.to_array();

    let denom: f64 = sym_idx.iter().map(|&i| na[i] * na[i]).sum();
    if denom < 1e-18 {
        return Err(Error::IndeterminateDecomposition(format!(
            "symmetric Gauss-map components vanish at {p:?} (the harmonic degeneracy)"
        )));
    }
    let m = sym_idx.iter().map(|&i| la[i] * na[i]).sum::<f64>() / denom;

    let n_num: f64 = ax_idx.iter().map(|&i| (la[i] - m * na[i]) * ca[i]).sum();
    let n_den: f64 = ax_idx.iter().map(|&i| ca[i] * ca[i]).sum();
    let n = n_num / n_den;

    let residual = (l_vec - n_vec * m - c * n).norm();
    let (m_closed_form, n_closed_form) = printed_mn(surface, p.s, k)?;
    Ok(Decomposition {
        m,
        n,
        c,
        residual,
        m_closed_form,
        n_closed_form,
    })
}

/// Which pointwise condition an [`ode_residual`] call evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OdeKind {
    FirstKind,
    SecondKind,
}

/// Left-hand side of the pointwise classification condition, evaluated with
/// exact jets. Zero (within tolerance) iff the condition holds at s.
///
/// * first kind, k = 1: the shared spacelike/timelike condition
///   `f'(s^2(f'^2-1) f''' + ((f'^2-1)^2 - 3 s^2 f''^2) f') - s^2 f''^2 = 0`;
/// * first kind, k = 2:
///   `s (f'^2-1) f' f''' - (2 f'(f'^2-1) + s(3 f'^2+2) f'') f'' = 0`;
/// * second kind: the printed m = n conditions, parameterized by the constant
///   C component (the timelike k = 1 equation is rebuilt from the
///   generalized-type system; its printing carries a stray '/').
///
/// The lightlike axis has no printed classification conditions.
pub fn ode_residual(
    surface: &RotSurface,
    s: f64,
    k: u32,
    kind: OdeKind,
    c_component: f64,
) -> Result<f64> {
    if !(k == 1 || k == 2) {
        return Err(Error::UnsupportedK(k));
    }
    if surface.axis() == AxisKind::Lightlike {
        return Err(Error::Unsupported(
            "no printed classification conditions exist for the lightlike axis".into(),
        ));
    }
    let fj = surface.profile_jet(s)?;
    let (f1, f2, f3) = (fj.ds, fj.ds2, fj.ds3);
    let om = f1 * f1 - 1.0;
    Ok(match (kind, k) {
        (OdeKind::FirstKind, 1) => {
            f1 * (s * s * om * f3 + (om * om - 3.0 * s * s * f2 * f2) * f1) - s * s * f2 * f2
        }
        (OdeKind::FirstKind, _) => {
            s * om * f1 * f3 - (2.0 * f1 * om + s * (3.0 * f1 * f1 + 2.0) * f2) * f2
        }
        (OdeKind::SecondKind, 1) => {
            // the m = n condition: (sign) (C sqrt(|1-f'^2|) -/+ 1) * G - 2 s R f'^2
            let big = -2.0 * om.powi(3) * f1 * f1 + 2.0 * s * om * f1.powi(3) * f2
                - 2.0 * s * s * (4.0 * f1 * f1 + 1.0) * f2 * f2
                + 2.0 * s * s * om * f1 * f3;
            let r_inner = (f1 * om - s * (3.0 * f1 * f1 + 2.0) * f2) * f2 + s * om * f1 * f3;
            match surface.axis() {
                AxisKind::Spacelike => {
                    (c_component * (1.0 - f1 * f1).sqrt() - 1.0) * (-big)
                        - 2.0 * s * r_inner * f1 * f1
                }
                _ => (1.0 + c_component * om.sqrt()) * big - 2.0 * s * r_inner * f1 * f1,
            }
        }
        (OdeKind::SecondKind, _) => {
            let lead =
                s * om * f1 * f3 + 2.0 * f2 * (f1 * om * om - s * (2.0 * f1 * f1 + 1.0) * f2);
            let tail = s * f1 * f1 * (om * f1 * f3 - 3.0 * (f1 * f1 + 1.0) * f2 * f2);
            match surface.axis() {
                AxisKind::Spacelike => (c_component * (1.0 - f1 * f1).sqrt() - 1.0) * lead + tail,
                _ => (1.0 + c_component * om.sqrt()) * lead - tail,
            }
        }
    })
}

/// Construct one of the solution-family profiles by grammar name:
/// `flat-s`, `minimal-s`, `flat-t`, `minimal-t`, `flat-l`, `firstkind-s`,
/// `firstkind-t`. The branch selects the sign of the arc-integral families.
pub fn family_profile(name: &str, params: &[f64], branch: Branch) -> Result<Profile> {
    let want = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::BadFamilyParams(format!(
                "{name} takes {n} numeric parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    match name {
        "flat-s" => {
            want(1)?;
            Profile::flat_s(params[0])
        }
        "minimal-s" => {
            want(1)?;
            Profile::minimal_s(params[0])
        }
        "flat-t" => {
            want(1)?;
            Profile::flat_t(params[0])
        }
        "minimal-t" => {
            want(1)?;
            Profile::minimal_t(params[0])
        }
        "flat-l" => {
            want(2)?;
            Profile::flat_l(params[0], params[1])
        }
        "firstkind-s" => {
            want(3)?;
            Profile::first_kind_s(params[0], params[1], params[2], branch)
        }
        "firstkind-t" => {
            want(3)?;
            Profile::first_kind_t(params[0], params[1], params[2], branch)
        }
        other => Err(Error::BadFamilyParams(format!("unknown family `{other}`"))),
    }
}

/// Gauss-map type verdict, strongest property first: harmonic implies
/// first-kind implies second-kind implies generalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Harmonic,
    FirstKind,
    SecondKind,
    Generalized,
    None,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Harmonic => "Harmonic",
            Kind::FirstKind => "FirstKind",
            Kind::SecondKind => "SecondKind",
            Kind::Generalized => "Generalized",
            Kind::None => "None",
        }
    }
}

/// Residuals and decomposition data at one sample point.
#[derive(Clone, Copy, Debug)]
pub struct SampleEvidence {
    pub point: SurfPoint,
    pub l_norm: f64,
    pub m: Option<f64>,
    pub n: Option<f64>,
    pub residual: Option<f64>,
}

/// Classification outcome with per-sample evidence.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: Kind,
    pub k: u32,
    /// the fitted constant vector for the second-kind case (n/m * pattern)
    pub c: Option<MinkVec4>,
    pub evidence: Vec<SampleEvidence>,
    /// worst residual backing the verdict, scaled by (1 + ||L_k N||)
    pub margin: f64,
}

/// The default sample plan: 8 log-spaced s values in the profile's validity
/// range crossed with 3 fixed (t, w) pairs (the s-dependence carries all the
/// analysis; t, w variation exercises rotational symmetry).
pub fn sample_plan(surface: &RotSurface) -> Vec<SurfPoint> {
    let (lo, hi) = surface.profile().default_s_range();
    let tw = [(0.25, -0.4), (0.8, 0.35), (-0.6, 0.9)];
    let mut out = Vec::with_capacity(24);
    for i in 0..8 {
        let frac = i as f64 / 7.0;
        // log spacing over magnitudes, sign-preserving
        let (a, b) = (lo.abs().max(1e-9), hi.abs().max(1e-9));
        let mag = a * (b / a).powf(frac);
        let s = if lo < 0.0 { -mag } else { mag };
        for (t, w) in tw {
            out.push(SurfPoint::new(s, t, w));
        }
    }
    out
}

/// Decide the Gauss-map type over the sampled points.
///
/// Harmonic if max ||L_k N|| <= tol; else first kind if the n-free fit
/// L = m N closes pointwise; else second kind if the full decomposition
/// closes with a single constant C = (n/m) pattern across samples; else
/// generalized if the decomposition closes pointwise (shared C direction,
/// pointwise m, n); else none.
pub fn classify(surface: &RotSurface, samples: &[SurfPoint], k: u32, tol: f64) -> Result<Verdict> {
    if !(k == 1 || k == 2) {
        return Err(Error::UnsupportedK(k));
    }
    let mut distinct: Vec<f64> = samples.iter().map(|p| p.s).collect();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    distinct.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    if samples.len() < 8 || distinct.len() < 8 {
        return Err(Error::InsufficientSamples(format!(
            "need >= 8 samples spanning distinct s values, got {} over {} distinct s",
            samples.len(),
            distinct.len()
        )));
    }

    let n_vecs: Vec<MinkVec4> = samples
        .iter()
        .map(|p| surface.gauss_map(*p))
        .collect::<Result<_>>()?;
    let l_vecs: Vec<MinkVec4> = samples
        .iter()
        .map(|p| lk_gauss_generic(surface, *p, k))
        .collect::<Result<_>>()?;

    let mut evidence: Vec<SampleEvidence> = samples
        .iter()
        .zip(&l_vecs)
        .map(|(p, l)| SampleEvidence {
            point: *p,
            l_norm: l.norm(),
            m: None,
            n: None,
            residual: None,
        })
        .collect();

    // 1. harmonic
    let max_l = l_vecs.iter().fold(0.0f64, |acc, l| acc.max(l.norm()));
    if max_l <= tol {
        return Ok(Verdict {
            kind: Kind::Harmonic,
            k,
            c: None,
            evidence,
            margin: max_l,
        });
    }

    // pointwise decompositions
    let decomps: Vec<Result<Decomposition>> =
        samples.iter().map(|p| decompose(surface, *p, k)).collect();
    for (ev, d) in evidence.iter_mut().zip(&decomps) {
        if let Ok(d) = d {
            ev.m = Some(d.m);
            ev.n = Some(d.n);
            ev.residual = Some(d.residual);
        }
    }
    if decomps.iter().any(|d| d.is_err()) {
        return Ok(Verdict {
            kind: Kind::None,
            k,
            c: None,
            evidence,
            margin: f64::INFINITY,
        });
    }
    let decomps: Vec<Decomposition> = decomps.into_iter().map(|d| d.unwrap()).collect();

    // 2. first kind: n forced to zero, m from the symmetric components
    let first_kind_margin = decomps
        .iter()
        .zip(&n_vecs)
        .zip(&l_vecs)
        .map(|((d, n), l)| (*l - *n * d.m).norm() / (1.0 + l.norm()))
        .fold(0.0f64, f64::max);
    let m_nonzero = decomps.iter().all(|d| d.m.abs() > tol);
    if first_kind_margin <= tol && m_nonzero {
        return Ok(Verdict {
            kind: Kind::FirstKind,
            k,
            c: None,
            evidence,
            margin: first_kind_margin,
        });
    }

    // the full decomposition must close for either remaining kind
    let decomp_margin = decomps
        .iter()
        .zip(&l_vecs)
        .map(|(d, l)| d.residual / (1.0 + l.norm()))
        .fold(0.0f64, f64::max);
    let mn_nonzero = decomps.iter().all(|d| d.m.abs() > tol && d.n.abs() > tol);

    if decomp_margin <= tol && mn_nonzero {
        // 3. second kind: L = m (N + C) needs n/m constant across samples
        let ratios: Vec<f64> = decomps.iter().map(|d| d.n / d.m).collect();
        let mut sorted = ratios.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = sorted[sorted.len() / 2];
        let ratio_spread = ratios
            .iter()
            .map(|r| (r - median).abs() / (1.0 + median.abs()))
            .fold(0.0f64, f64::max);
        if ratio_spread <= tol {
            return Ok(Verdict {
                kind: Kind::SecondKind,
                k,
                c: Some(c_pattern(surface.axis()) * median),
                evidence,
                margin: ratio_spread.max(decomp_margin),
            });
        }
        // 4. generalized: pointwise m, n with the common C direction
        return Ok(Verdict {
            kind: Kind::Generalized,
            k,
            c: Some(c_pattern(surface.axis())),
            evidence,
            margin: decomp_margin,
        });
    }

    Ok(Verdict {
        kind: Kind::None,
        k,
        c: None,
        evidence,
        margin: decomp_margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(axis: AxisKind, spec: &str) -> RotSurface {
        RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap()
    }

    const ANCHOR: SurfPoint = SurfPoint { s: 2.0, t: 0.0, w: 0.0 };

    #[test]
    fn decompose_linear_spacelike_anchor() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let d = decompose(&s, ANCHOR, 1).unwrap();
        assert!((d.m - (-0.1443376)).abs() < 1e-7, "m = {}", d.m);
        assert!((d.n - (-0.1666667)).abs() < 1e-7, "n = {}", d.n);
        assert_eq!(d.c, MinkVec4::new(0.0, 0.0, 0.0, 1.0));
        assert!(d.residual <= 1e-12);
        // cross-checked against the printed generalized-type formulas
        assert!((d.m - d.m_closed_form.unwrap()).abs() <= 1e-8 * (1.0 + d.m.abs()));
        assert!((d.n - d.n_closed_form.unwrap()).abs() <= 1e-8 * (1.0 + d.n.abs()));
    }

    #[test]
    fn decompose_indeterminate_on_harmonic_cases() {
        let c = surf(AxisKind::Spacelike, "const:1");
        assert!(matches!(
            decompose(&c, SurfPoint::new(1.5, 0.3, 0.2), 1),
            Err(Error::IndeterminateDecomposition(_))
        ));
    }

    #[test]
    fn decompose_matches_printed_formulas_across_axes() {
        // flat-t is linear, so only k = 1 decomposes there (k = 2 is the
        // harmonic degeneracy)
        for (axis, spec, p, ks) in [
            (AxisKind::Spacelike, "tanh:0.6", SurfPoint::new(1.3, 0.4, -0.2), &[1u32, 2][..]),
            (AxisKind::Spacelike, "poly:0.1,0.3,0.12,0.05", SurfPoint::new(1.4, 0.3, 0.7), &[1, 2]),
            (AxisKind::Timelike, "minimal-t:2", SurfPoint::new(1.1, 0.4, 2.0), &[1, 2]),
            (AxisKind::Timelike, "flat-t:2", SurfPoint::new(1.9, -0.5, 0.9), &[1]),
        ] {
            let s = surf(axis, spec);
            for &k in ks {
                let d = decompose(&s, p, k).unwrap();
                let scale_m = 1.0 + d.m.abs();
                let scale_n = 1.0 + d.n.abs();
                assert!(
                    (d.m - d.m_closed_form.unwrap()).abs() <= 1e-8 * scale_m,
                    "{axis:?} {spec} k={k}: m {} vs printed {}",
                    d.m,
                    d.m_closed_form.unwrap()
                );
                assert!(
                    (d.n - d.n_closed_form.unwrap()).abs() <= 1e-8 * scale_n,
                    "{axis:?} {spec} k={k}: n {} vs printed {}",
                    d.n,
                    d.n_closed_form.unwrap()
                );
                assert!(d.residual <= 1e-10 * (1.0 + d.m.abs() + d.n.abs()));
            }
        }
    }

    #[test]
    fn decompose_lightlike_closes_exactly() {
        let s = surf(AxisKind::Lightlike, "poly:0.2,0.1,0.05");
        for k in [1u32, 2] {
            let p = SurfPoint::new(1.5, 0.7, -0.3);
            let d = decompose(&s, p, k).unwrap();
            let l = lk_gauss_generic(&s, p, k).unwrap();
            assert!(d.residual <= 1e-10 * (1.0 + l.norm()), "k={k}: {}", d.residual);
            assert!(d.m_closed_form.is_none());
        }
    }

    #[test]
    fn ode_residual_examples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        // f'^2 (f'^2 - 1)^2 = 0.140625: linear is not first-kind
        let r = ode_residual(&s, 2.0, 1, OdeKind::FirstKind, 0.0).unwrap();
        assert!((r - 0.140625).abs() < 1e-15);

        let c = surf(AxisKind::Spacelike, "const:1");
        let r = ode_residual(&c, 2.0, 1, OdeKind::FirstKind, 0.0).unwrap();
        assert_eq!(r, 0.0);

        // the first-kind family solves its own ODE along the profile
        let fk = surf(AxisKind::Spacelike, "firstkind-s:1,0,0,+");
        for i in 0..20 {
            let s_val = 1.1 + 1.9 * i as f64 / 19.0;
            let r = ode_residual(&fk, s_val, 1, OdeKind::FirstKind, 0.0).unwrap();
            assert!(r.abs() <= 1e-7, "s = {s_val}: residual {r}");
        }
    }

    #[test]
    fn second_kind_residual_consistent_with_decomposition() {
        // at the C that makes the pointwise ratio n/m equal to 1 the printed
        // m = n equation must vanish; away from it, it must not.
        for (axis, spec, p) in [
            (AxisKind::Spacelike, "tanh:0.6", SurfPoint::new(1.3, 0.4, -0.2)),
            (AxisKind::Timelike, "minimal-t:2", SurfPoint::new(1.1, 0.4, 2.0)),
        ] {
            let s = surf(axis, spec);
            for k in [1u32, 2] {
                let d = decompose(&s, p, k).unwrap();
                let c_star = d.n / d.m;
                let r = ode_residual(&s, p.s, k, OdeKind::SecondKind, c_star).unwrap();
                let scale = 1.0 + d.m.abs() + d.n.abs();
                assert!(
                    r.abs() <= 1e-7 * scale * (1.0 + p.s.abs().powi(5)),
                    "{axis:?} k={k}: residual {r} at c* = {c_star}"
                );
                let r_bad = ode_residual(&s, p.s, k, OdeKind::SecondKind, c_star + 1.0).unwrap();
                assert!(r_bad.abs() > 1e-6, "{axis:?} k={k}: {r_bad}");
            }
        }
    }

    #[test]
    fn family_profile_constructs_and_guards() {
        let p = family_profile("firstkind-s", &[1.0, 1.0, 0.0], Branch::Plus).unwrap();
        let j = p.eval(1.0).unwrap();
        assert!((j.value - 0.0).abs() < 1e-14);
        assert!((j.ds - (14f64 / 17.0).sqrt()).abs() < 1e-13);

        let p = family_profile("flat-s", &[1.0], Branch::Plus).unwrap();
        let j = p.eval(2.0).unwrap();
        assert!((j.ds - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((j.value - 2.0 / 2f64.sqrt()).abs() < 1e-15);

        assert!(matches!(
            family_profile("minimal-t", &[1.0], Branch::Plus).unwrap().eval(1.2),
            Err(Error::BadFamilyParams(_))
        ));
    }

    #[test]
    fn classify_harmonic_first_kind_generalized() {
        // linear spacelike, k = 2: harmonic
        let lin = surf(AxisKind::Spacelike, "linear:0.5,0");
        let plan = sample_plan(&lin);
        let v = classify(&lin, &plan, 2, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::Harmonic);

        // linear spacelike, k = 1: R1 vanishes identically, so n/m is the
        // constant 1/sqrt(1-f'^2) and the map is genuinely second-kind,
        // L1 N = m (N + C) with C = (0,0,0,1)/sqrt(1-f'^2). The printed
        // second-kind condition corroborates: it holds exactly at that C4.
        let v = classify(&lin, &plan, 1, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::SecondKind, "margin {}", v.margin);
        let c4 = 1.0 / (1.0f64 - 0.25).sqrt();
        let c = v.c.unwrap();
        assert!((c.x4 - c4).abs() < 1e-9, "{c:?}");
        assert_eq!((c.x1, c.x2, c.x3), (0.0, 0.0, 0.0));
        let r = ode_residual(&lin, 1.7, 1, OdeKind::SecondKind, c4).unwrap();
        assert!(r.abs() < 1e-12, "printed second-kind equation at C4: {r}");

        // first-kind family, k = 1: first kind
        let fk = surf(AxisKind::Spacelike, "firstkind-s:1,0,0,+");
        let plan = sample_plan(&fk);
        let v = classify(&fk, &plan, 1, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::FirstKind, "margin {}", v.margin);

        // linear timelike, k = 1: the axis aggregate vanishes for linear
        // profiles there too, so n/m = -1/sqrt(f'^2-1) is constant
        let lt = surf(AxisKind::Timelike, "linear:1.5,0.3");
        let plan = sample_plan(&lt);
        let v = classify(&lt, &plan, 1, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::SecondKind, "margin {}", v.margin);
        let c1 = -1.0 / (1.5f64 * 1.5 - 1.0).sqrt();
        assert!((v.c.unwrap().x1 - c1).abs() < 1e-9);

        // constant spacelike, k = 1: harmonic
        let c = surf(AxisKind::Spacelike, "const:1");
        let plan = sample_plan(&c);
        let v = classify(&c, &plan, 1, 1e-7).unwrap();
        assert_eq!(v.kind, Kind::Harmonic);
    }

    #[test]
    fn classify_requires_enough_samples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let few: Vec<SurfPoint> = (0..5)
            .map(|i| SurfPoint::new(1.1 + i as f64 * 0.2, 0.1, 0.2))
            .collect();
        assert!(matches!(
            classify(&s, &few, 1, 1e-7),
            Err(Error::InsufficientSamples(_))
        ));
    }
}
