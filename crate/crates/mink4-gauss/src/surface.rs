//! The three rotational hypersurface families of E^4_1 and their first-order
//! invariants: embedding, Gauss map, induced metric, principal curvatures,
//! and a numerically assembled shape operator.
//!
//! Everything evaluates through jets, so the partial derivatives consumed by
//! the operator modules are exact. The closed-form diagonal metric and
//! curvature expressions are per-axis transcriptions; the shape operator is
//! built independently from the embedding/Gauss-map Jacobians and serves as
//! the oracle that cross-checks them.

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::{cond_1, inverse, Mat3};
use crate::minkowski::{mink_dot, MinkVec4};
use crate::profile::Profile;

/// Margin keeping evaluations away from the guard singularities
/// ((1-f'^2)^(9/2)-type denominators, s^2 metric degenerations, cos t = 0).
pub const DELTA_DOM: f64 = 1e-6;

/// Causal character of the rotation axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisKind {
    /// axis (0,0,0,1)
    Spacelike,
    /// axis (1,0,0,0)
    Timelike,
    /// axis (1,1,0,0)
    Lightlike,
}

impl AxisKind {
    pub fn name(self) -> &'static str {
        match self {
            AxisKind::Spacelike => "spacelike",
            AxisKind::Timelike => "timelike",
            AxisKind::Lightlike => "lightlike",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "spacelike" | "s" => Ok(AxisKind::Spacelike),
            "timelike" | "t" => Ok(AxisKind::Timelike),
            "lightlike" | "l" => Ok(AxisKind::Lightlike),
            other => Err(Error::Usage(format!("unknown axis `{other}`"))),
        }
    }
}

/// Surface coordinates (s, t, w).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfPoint {
    pub s: f64,
    pub t: f64,
    pub w: f64,
}

impl SurfPoint {
    pub fn new(s: f64, t: f64, w: f64) -> Self {
        SurfPoint { s, t, w }
    }
}

/// Principal curvatures and the diagonal metric coefficients at the
/// rotational reference (t = 0). kappa2 == kappa3 bit-exactly: the shared
/// closed form is evaluated once.
#[derive(Clone, Copy, Debug)]
pub struct CurvatureData {
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub g11: f64,
    pub g22: f64,
    pub g33: f64,
}

/// A rotational hypersurface: axis kind plus profile.
#[derive(Clone, Debug)]
pub struct RotSurface {
    axis: AxisKind,
    profile: Profile,
}

impl RotSurface {
    /// Construct, rejecting named-family profiles bound to a different axis
    /// (e.g. `minimal-t` on the spacelike axis can never satisfy the
    /// normalization guard).
    pub fn new(axis: AxisKind, profile: Profile) -> Result<Self> {
        if let Some(hint) = profile.axis_hint() {
            let ok = matches!(
                (axis, hint),
                (AxisKind::Spacelike, 's') | (AxisKind::Timelike, 't') | (AxisKind::Lightlike, 'l')
            );
            if !ok {
                return Err(Error::BadFamilyParams(format!(
                    "profile family `{}` is tied to the `{}` axis",
                    profile.family_name(),
                    match hint {
                        's' => "spacelike",
                        't' => "timelike",
                        _ => "lightlike",
                    }
                )));
            }
        }
        Ok(RotSurface { axis, profile })
    }

    pub fn axis(&self) -> AxisKind {
        self.axis
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// Profile jet (f, f', f'', f''') at s, with the family domain already
    /// checked.
    pub fn profile_jet(&self, s: f64) -> Result<Jet> {
        self.profile.eval(s)
    }

    fn guard_embed(&self, s: f64) -> Result<()> {
        if matches!(self.axis, AxisKind::Spacelike | AxisKind::Timelike) && s.abs() <= DELTA_DOM {
            return Err(Error::Domain(format!(
                "|s| <= {DELTA_DOM} degenerates the orbit metric (s = {s})"
            )));
        }
        Ok(())
    }

    fn guard_metric(&self, p: SurfPoint, fj: &Jet) -> Result<()> {
        self.guard_embed(p.s)?;
        let one_minus = 1.0 - fj.ds * fj.ds;
        if one_minus.abs() <= DELTA_DOM {
            return Err(Error::Domain(format!(
                "|1 - f'^2| <= {DELTA_DOM} (f' = {})",
                fj.ds
            )));
        }
        match self.axis {
            AxisKind::Timelike => {
                if p.t.cos().abs() <= DELTA_DOM {
                    return Err(Error::Domain(format!(
                        "|cos t| <= {DELTA_DOM} degenerates g33 (t = {})",
                        p.t
                    )));
                }
            }
            AxisKind::Lightlike => {
                if (p.s - fj.value).abs() <= DELTA_DOM {
                    return Err(Error::Domain(format!(
                        "|s - f(s)| <= {DELTA_DOM} (s = {}, f = {})",
                        p.s, fj.value
                    )));
                }
            }
            AxisKind::Spacelike => {}
        }
        Ok(())
    }

    fn guard_full(&self, p: SurfPoint, fj: &Jet) -> Result<()> {
        self.guard_metric(p, fj)?;
        let fp2 = fj.ds * fj.ds;
        match self.axis {
            AxisKind::Spacelike | AxisKind::Lightlike => {
                if 1.0 - fp2 <= DELTA_DOM {
                    return Err(Error::Domain(format!(
                        "normalization requires 1 - f'^2 > {DELTA_DOM} (f' = {})",
                        fj.ds
                    )));
                }
            }
            AxisKind::Timelike => {
                if fp2 - 1.0 <= DELTA_DOM {
                    return Err(Error::Domain(format!(
                        "normalization requires f'^2 - 1 > {DELTA_DOM} (f' = {})",
                        fj.ds
                    )));
                }
            }
        }
        Ok(())
    }

    /// Check the full guard set at a point (what the curvature operators
    /// require).
    pub fn check_point(&self, p: SurfPoint) -> Result<()> {
        let fj = self.profile_jet(p.s)?;
        self.guard_full(p, &fj)
    }

    /// The embedding Gamma(s, t, w), each component as a jet.
    pub fn embed_jets(&self, p: SurfPoint) -> Result<[Jet; 4]> {
        let fj = self.profile_jet(p.s)?;
        self.guard_embed(p.s)?;
        let s = Jet::coord_s(p.s);
        let t = Jet::coord_t(p.t);
        let w = Jet::coord_w(p.w);
        Ok(match self.axis {
            AxisKind::Spacelike => {
                let (cht, sht) = (t.cosh(), t.sinh());
                let (chw, shw) = (w.cosh(), w.sinh());
                [s * cht * chw, s * sht, s * cht * shw, fj]
            }
            AxisKind::Timelike => {
                let (cost, sint) = (t.cos(), t.sin());
                let (cosw, sinw) = (w.cos(), w.sin());
                [fj, -(s * cost * sinw), -(s * sint), s * cost * cosw]
            }
            AxisKind::Lightlike => {
                let half_rho = (t * t + w * w) * 0.5;
                [
                    (half_rho + 1.0) * s - half_rho * fj,
                    half_rho * s + (-half_rho + 1.0) * fj,
                    t * (s - fj),
                    w * (s - fj),
                ]
            }
        })
    }

    /// The embedding as plain values.
    pub fn embed(&self, p: SurfPoint) -> Result<MinkVec4> {
        let jets = self.embed_jets(p)?;
        Ok(MinkVec4::new(jets[0].value, jets[1].value, jets[2].value, jets[3].value))
    }

    /// The unit normal (Gauss map), each component as a jet valid through
    /// second order. Verbatim per-axis formulas including leading signs.
    pub fn gauss_jets(&self, p: SurfPoint) -> Result<[Jet; 4]> {
        let fj = self.profile_jet(p.s)?;
        self.guard_full(p, &fj)?;
        // f' lifted as a jet: the ds3 slot would need f'''' and is never read.
        let fp = Jet::of_s(fj.ds, fj.ds2, fj.ds3, 0.0);
        let t = Jet::coord_t(p.t);
        let w = Jet::coord_w(p.w);
        Ok(match self.axis {
            AxisKind::Spacelike => {
                let r = -((-fp * fp + 1.0).sqrt().recip());
                let (cht, sht) = (t.cosh(), t.sinh());
                let (chw, shw) = (w.cosh(), w.sinh());
                [
                    r * fp * cht * chw,
                    r * fp * sht,
                    r * fp * cht * shw,
                    r,
                ]
            }
            AxisKind::Timelike => {
                let r = (fp * fp - 1.0).sqrt().recip();
                let (cost, sint) = (t.cos(), t.sin());
                let (cosw, sinw) = (w.cos(), w.sin());
                [r, -(r * fp * cost * sinw), -(r * fp * sint), r * fp * cost * cosw]
            }
            AxisKind::Lightlike => {
                let rho = t * t + w * w;
                let r = ((-fp * fp + 1.0).sqrt() * 2.0).recip();
                [
                    r * (rho - (rho + 2.0) * fp),
                    r * (rho - 2.0 - rho * fp),
                    r * (t * (-fp + 1.0) * 2.0),
                    r * (w * (-fp + 1.0) * 2.0),
                ]
            }
        })
    }

    /// The Gauss map as plain values.
    pub fn gauss_map(&self, p: SurfPoint) -> Result<MinkVec4> {
        let jets = self.gauss_jets(p)?;
        Ok(MinkVec4::new(jets[0].value, jets[1].value, jets[2].value, jets[3].value))
    }

    /// Diagonal metric coefficients (g11, g22, g33) as jets of (s, t, w); the
    /// rotational families have identically vanishing off-diagonal terms.
    pub fn metric_jets(&self, p: SurfPoint) -> Result<[Jet; 3]> {
        let fj = self.profile_jet(p.s)?;
        self.guard_metric(p, &fj)?;
        let fp = Jet::of_s(fj.ds, fj.ds2, fj.ds3, 0.0);
        let s = Jet::coord_s(p.s);
        let t = Jet::coord_t(p.t);
        Ok(match self.axis {
            AxisKind::Spacelike => [fp * fp - 1.0, s * s, s * s * t.cosh() * t.cosh()],
            AxisKind::Timelike => [-(fp * fp) + 1.0, s * s, s * s * t.cos() * t.cos()],
            AxisKind::Lightlike => {
                let d = s - fj;
                [fp * fp - 1.0, d * d, d * d]
            }
        })
    }

    /// Metric coefficients as plain values.
    pub fn metric(&self, p: SurfPoint) -> Result<[f64; 3]> {
        let jets = self.metric_jets(p)?;
        Ok([jets[0].value, jets[1].value, jets[2].value])
    }

    /// Principal curvature jets (kappa1, kappa2=kappa3), valid through first
    /// order in s — exactly what the mean-curvature gradients need.
    pub fn curvature_jets(&self, s: f64) -> Result<(Jet, Jet)> {
        let fj = self.profile_jet(s)?;
        self.guard_full(SurfPoint::new(s, 0.0, 0.0), &fj)?;
        let fp = Jet::of_s(fj.ds, fj.ds2, fj.ds3, 0.0);
        // f'' as a jet: ds carries f'''; higher slots are never read.
        let fpp = Jet::of_s(fj.ds2, fj.ds3, 0.0, 0.0);
        let sj = Jet::coord_s(s);
        Ok(match self.axis {
            AxisKind::Spacelike => {
                let om = -fp * fp + 1.0;
                let k1 = fpp / (om.sqrt().powi(3));
                let k23 = fp / (sj * om.sqrt());
                (k1, k23)
            }
            AxisKind::Timelike => {
                let om = fp * fp - 1.0;
                let k1 = fpp / (om.sqrt().powi(3));
                let k23 = -(fp / (sj * om.sqrt()));
                (k1, k23)
            }
            AxisKind::Lightlike => {
                let om = -fp * fp + 1.0;
                let k1 = fpp / (om.sqrt().powi(3));
                let k23 = (fp - 1.0) / ((sj - fj) * om.sqrt());
                (k1, k23)
            }
        })
    }

    /// Closed-form principal curvatures plus the metric at the rotational
    /// reference t = 0.
    pub fn principal_curvatures(&self, s: f64) -> Result<CurvatureData> {
        let (k1, k23) = self.curvature_jets(s)?;
        let g = self.metric(SurfPoint::new(s, 0.0, 0.0))?;
        let kappa23 = k23.value;
        Ok(CurvatureData {
            kappa1: k1.value,
            kappa2: kappa23,
            kappa3: kappa23,
            g11: g[0],
            g22: g[1],
            g33: g[2],
        })
    }

    /// Coordinate-frame Jacobian of the embedding: column i is the
    /// pushforward of the i-th coordinate direction.
    pub fn embed_partials(&self, p: SurfPoint) -> Result<[MinkVec4; 3]> {
        let j = self.embed_jets(p)?;
        Ok([
            MinkVec4::new(j[0].ds, j[1].ds, j[2].ds, j[3].ds),
            MinkVec4::new(j[0].dt, j[1].dt, j[2].dt, j[3].dt),
            MinkVec4::new(j[0].dw, j[1].dw, j[2].dw, j[3].dw),
        ])
    }

    /// Numerically assembled shape operator S = -(dN) (dGamma)^-1 in the
    /// coordinate frame: S^j_i = -g^{jm} <d_m Gamma, d_i N>. Pure jet input,
    /// no finite differencing. Its eigenvalues are the oracle for the
    /// closed-form principal curvatures.
    pub fn shape_operator(&self, p: SurfPoint) -> Result<Mat3> {
        let dg = self.embed_partials(p)?;
        let nj = self.gauss_jets(p)?;
        let dn = [
            MinkVec4::new(nj[0].ds, nj[1].ds, nj[2].ds, nj[3].ds),
            MinkVec4::new(nj[0].dt, nj[1].dt, nj[2].dt, nj[3].dt),
            MinkVec4::new(nj[0].dw, nj[1].dw, nj[2].dw, nj[3].dw),
        ];
        let mut gram: Mat3 = [[0.0; 3]; 3];
        let mut rhs: Mat3 = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                gram[i][j] = mink_dot(dg[i], dg[j]);
                rhs[i][j] = mink_dot(dg[i], dn[j]);
            }
        }
        let cond = cond_1(&gram);
        if !cond.is_finite() || cond > 1e12 {
            return Err(Error::SingularFrame(cond));
        }
        let ginv = inverse(&gram).ok_or(Error::SingularFrame(f64::INFINITY))?;
        let mut s_mat: Mat3 = [[0.0; 3]; 3];
        for j in 0..3 {
            for i in 0..3 {
                s_mat[j][i] = -(0..3).map(|m| ginv[j][m] * rhs[m][i]).sum::<f64>();
            }
        }
        Ok(s_mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigenvalues_real;

    fn surf(axis: AxisKind, spec: &str) -> RotSurface {
        RotSurface::new(axis, Profile::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn embed_examples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let g = s.embed(SurfPoint::new(2.0, 0.0, 0.0)).unwrap();
        assert_eq!(g.to_array(), [2.0, 0.0, 0.0, 1.0]);

        let t = surf(AxisKind::Timelike, "flat-t:3");
        let f1 = t.profile_jet(1.0).unwrap().value;
        let g = t.embed(SurfPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert!((g.x1 - f1).abs() < 1e-15);
        assert_eq!([g.x2, g.x3, g.x4], [0.0, 0.0, 1.0]);

        let l = surf(AxisKind::Lightlike, "flat-l:0,0");
        let g = l.embed(SurfPoint::new(1.0, 1.0, 0.0)).unwrap();
        assert_eq!(g.to_array(), [1.5, 0.5, 1.0, 0.0]);
    }

    #[test]
    fn gauss_map_examples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let n = s.gauss_map(SurfPoint::new(2.0, 0.0, 0.0)).unwrap();
        let r = 1.0 / 0.75f64.sqrt();
        assert!((n.x1 - (-0.5 * r)).abs() < 1e-14);
        assert!((n.x4 - (-r)).abs() < 1e-14);
        assert!((n.x1 - (-0.5773503)).abs() < 1e-7);
        assert!((n.x4 - (-1.1547005)).abs() < 1e-7);

        let c = surf(AxisKind::Spacelike, "const:3");
        let n = c.gauss_map(SurfPoint::new(1.7, 0.8, -0.4)).unwrap();
        assert_eq!(n.to_array(), [0.0, 0.0, 0.0, -1.0]);

        let l = surf(AxisKind::Lightlike, "linear:0,0");
        let n = l.gauss_map(SurfPoint::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(n.to_array(), [0.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn gauss_map_is_unit_and_orthogonal() {
        for (axis, spec, p) in [
            (AxisKind::Spacelike, "tanh:0.6", SurfPoint::new(1.4, 0.5, -0.8)),
            (AxisKind::Timelike, "minimal-t:2", SurfPoint::new(1.1, 0.4, 2.0)),
            (AxisKind::Lightlike, "poly:0.2,0.1,0.05", SurfPoint::new(1.5, 0.7, -0.3)),
        ] {
            let s = surf(axis, spec);
            let n = s.gauss_map(p).unwrap();
            assert!((mink_dot(n, n) - 1.0).abs() < 1e-12, "{axis:?} <N,N>");
            for d in s.embed_partials(p).unwrap() {
                assert!(mink_dot(n, d).abs() < 1e-10, "{axis:?} <N,dGamma>");
            }
        }
    }

    #[test]
    fn metric_examples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let g = s.metric(SurfPoint::new(2.0, 0.0, 0.0)).unwrap();
        assert_eq!(g, [-0.75, 4.0, 4.0]);

        // f' = sqrt(2): 1 - f'^2 = -1
        let t = surf(AxisKind::Timelike, "linear:1.4142135623730951,0");
        let g = t.metric(SurfPoint::new(1.0, 0.0, 0.3)).unwrap();
        assert!((g[0] + 1.0).abs() < 1e-14);
        assert!((g[1] - 1.0).abs() < 1e-14);
        assert!((g[2] - 1.0).abs() < 1e-14);

        let l = surf(AxisKind::Lightlike, "const:0");
        let g = l.metric(SurfPoint::new(2.0, 0.4, 0.1)).unwrap();
        assert_eq!(g, [-1.0, 4.0, 4.0]);
    }

    #[test]
    fn metric_matches_gram_matrix() {
        for (axis, spec, p) in [
            (AxisKind::Spacelike, "tanh:0.6", SurfPoint::new(1.4, 0.5, -0.8)),
            (AxisKind::Timelike, "flat-t:2", SurfPoint::new(2.0, 0.6, 1.0)),
            (AxisKind::Lightlike, "flat-l:0.3,0.5", SurfPoint::new(1.8, 0.5, 0.7)),
        ] {
            let s = surf(axis, spec);
            let g = s.metric(p).unwrap();
            let d = s.embed_partials(p).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let gram = mink_dot(d[i], d[j]);
                    let want = if i == j { g[i] } else { 0.0 };
                    assert!(
                        (gram - want).abs() <= 1e-10 * (1.0 + want.abs()),
                        "{axis:?} g[{i}][{j}]: {gram} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn principal_curvature_examples() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let c = s.principal_curvatures(2.0).unwrap();
        assert_eq!(c.kappa1, 0.0);
        assert!((c.kappa2 - 0.2886751).abs() < 1e-7);
        assert_eq!(c.kappa2.to_bits(), c.kappa3.to_bits());

        let flat = surf(AxisKind::Spacelike, "const:2");
        let c = flat.principal_curvatures(1.5).unwrap();
        assert_eq!((c.kappa1, c.kappa2, c.kappa3), (0.0, 0.0, 0.0));

        // minimal profile: kappa1 = -2, kappa2 = kappa3 = 1 at c2 = 1, s = 1,
        // so the mean curvature vanishes.
        let m = surf(AxisKind::Spacelike, "minimal-s:1");
        let c = m.principal_curvatures(1.0).unwrap();
        assert!((c.kappa1 + 2.0).abs() < 1e-12);
        assert!((c.kappa2 - 1.0).abs() < 1e-12);
        assert!((c.kappa1 + c.kappa2 + c.kappa3).abs() < 1e-12);
    }

    #[test]
    fn shape_operator_matches_closed_form_curvatures() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        let p = SurfPoint::new(2.0, 0.0, 0.0);
        let shape = s.shape_operator(p).unwrap();
        let ev = eigenvalues_real(&shape);
        assert!(ev[0].abs() < 1e-12);
        assert!((ev[1] - 0.2886751).abs() < 1e-7);
        assert!((ev[2] - 0.2886751).abs() < 1e-7);

        let flat = surf(AxisKind::Spacelike, "const:1");
        let shape = flat.shape_operator(SurfPoint::new(1.3, 0.2, 0.4)).unwrap();
        for row in shape {
            for v in row {
                assert!(v.abs() < 1e-13);
            }
        }

        // tr S = kappa1 + kappa2 + kappa3 on a curved profile
        let m = surf(AxisKind::Timelike, "minimal-t:2");
        let p = SurfPoint::new(1.1, 0.4, 2.0);
        let shape = m.shape_operator(p).unwrap();
        let c = m.principal_curvatures(1.1).unwrap();
        let tr = shape[0][0] + shape[1][1] + shape[2][2];
        assert!(
            (tr - (c.kappa1 + c.kappa2 + c.kappa3)).abs() <= 1e-8 * (1.0 + tr.abs()),
            "trace {tr}"
        );
    }

    #[test]
    fn guards_reject_invalid_points() {
        let s = surf(AxisKind::Spacelike, "linear:0.5,0");
        assert!(matches!(s.embed(SurfPoint::new(0.0, 0.0, 0.0)), Err(Error::Domain(_))));

        // timelike needs f'^2 > 1
        let t = surf(AxisKind::Timelike, "const:1");
        assert!(t.embed(SurfPoint::new(1.0, 0.0, 0.0)).is_ok());
        assert!(matches!(t.gauss_map(SurfPoint::new(1.0, 0.0, 0.0)), Err(Error::Domain(_))));

        // timelike t near pi/2 degenerates g33
        let t2 = surf(AxisKind::Timelike, "flat-t:2");
        let bad = SurfPoint::new(1.0, std::f64::consts::FRAC_PI_2, 0.0);
        assert!(matches!(t2.metric(bad), Err(Error::Domain(_))));

        // lightlike: s = 0 is fine as long as s - f stays away from 0
        let l = surf(AxisKind::Lightlike, "flat-l:0,1");
        assert!(l.gauss_map(SurfPoint::new(0.0, 0.3, 0.2)).is_ok());
        let l2 = surf(AxisKind::Lightlike, "linear:0,0");
        assert!(matches!(
            l2.gauss_map(SurfPoint::new(0.0, 0.3, 0.2)),
            Err(Error::Domain(_))
        ));

        // axis/family compatibility at construction
        assert!(RotSurface::new(AxisKind::Spacelike, Profile::parse("minimal-t:2").unwrap()).is_err());
    }
}
