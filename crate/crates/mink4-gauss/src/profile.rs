//! Profile function families for the three rotational axes.
//!
//! A profile is the function f(s) whose rotation generates the hypersurface.
//! Families split into three groups:
//!
//! * direct: `const`, `linear`, `poly`, `tanh`, and the flat families (all
//!   with closed-form f and derivatives);
//! * derivative-defined: the minimal families give f'(s) in closed form and
//!   f itself by quadrature from a family-specific base point;
//! * arc-integral: the first-kind families f = ±∫ √(2c(6c'x³+1))/√(12cc'x³+3x+2c) dx + const.
//!
//! Every family evaluates to an exact 3-jet (f, f', f'', f'''): closed-form
//! derivatives where available, otherwise jet arithmetic on the f' expression.
//! Only the *value* of f ever goes through quadrature.
//!
//! Grammar (shared with the CLI):
//! `const:a` | `linear:a,b` | `poly:a0,a1,...` | `flat-s:c1` | `minimal-s:c2` |
//! `flat-t:c7` | `minimal-t:c8` | `flat-l:c13,c14` | `firstkind-s:c4,c5,c6,±` |
//! `firstkind-t:c10,c11,c12,±` | `tanh:a`.

use std::fmt;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::quad::quad;

/// Which specialized-case family a profile belongs to, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    Flat,
    Minimal,
}

/// Sign branch of the arc-integral families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn signum(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Const(f64),
    Linear { a: f64, b: f64 },
    Poly(Vec<f64>),
    Tanh(f64),
    FlatS { c1: f64 },
    MinimalS { c2: f64 },
    FlatT { c7: f64 },
    MinimalT { c8: f64 },
    FlatL { c13: f64, c14: f64 },
    FirstKindS { c4: f64, c5: f64, c6: f64, branch: Branch },
    FirstKindT { c10: f64, c11: f64, c12: f64, branch: Branch },
}

/// A named profile family with parameters, evaluable to exact jets.
#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    kind: Kind,
    /// Quadrature tolerance for integral-defined values.
    quad_tol: f64,
}

fn parse_params(spec: &str, name: &str, n: usize) -> Result<Vec<f64>> {
    let parts: Vec<&str> = if spec.is_empty() {
        Vec::new()
    } else {
        spec.split(',').collect()
    };
    if parts.len() != n {
        return Err(Error::BadFamilyParams(format!(
            "{name} takes {n} parameter(s), got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            let v = p
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::BadFamilyParams(format!("{name}: cannot parse `{p}` as a number")))?;
            if !v.is_finite() {
                return Err(Error::BadFamilyParams(format!(
                    "{name}: parameter `{p}` is not finite"
                )));
            }
            Ok(v)
        })
        .collect()
}

fn parse_branch(tok: &str, name: &str) -> Result<Branch> {
    match tok.trim() {
        "+" => Ok(Branch::Plus),
        "-" => Ok(Branch::Minus),
        other => Err(Error::BadFamilyParams(format!(
            "{name}: sign must be `+` or `-`, got `{other}`"
        ))),
    }
}

impl Profile {
    pub fn constant(a: f64) -> Self {
        Profile { kind: Kind::Const(a), quad_tol: 1e-12 }
    }

    pub fn linear(a: f64, b: f64) -> Self {
        Profile { kind: Kind::Linear { a, b }, quad_tol: 1e-12 }
    }

    pub fn poly(coeffs: Vec<f64>) -> Self {
        Profile { kind: Kind::Poly(coeffs), quad_tol: 1e-12 }
    }

    pub fn tanh(a: f64) -> Self {
        Profile { kind: Kind::Tanh(a), quad_tol: 1e-12 }
    }

    pub fn flat_s(c1: f64) -> Result<Self> {
        if c1 == 0.0 {
            return Err(Error::BadFamilyParams("flat-s requires c1 != 0".into()));
        }
        Ok(Profile { kind: Kind::FlatS { c1 }, quad_tol: 1e-12 })
    }

    pub fn minimal_s(c2: f64) -> Result<Self> {
        if c2 == 0.0 {
            return Err(Error::BadFamilyParams("minimal-s requires c2 != 0".into()));
        }
        Ok(Profile { kind: Kind::MinimalS { c2 }, quad_tol: 1e-12 })
    }

    pub fn flat_t(c7: f64) -> Result<Self> {
        // slope = c7^(1/3)/sqrt(c7^(2/3)-1) needs c7^(2/3) > 1, i.e. |c7| > 1.
        if c7.abs() <= 1.0 {
            return Err(Error::BadFamilyParams(
                "flat-t requires c7^(2/3) > 1 (|c7| > 1)".into(),
            ));
        }
        Ok(Profile { kind: Kind::FlatT { c7 }, quad_tol: 1e-12 })
    }

    pub fn minimal_t(c8: f64) -> Result<Self> {
        if c8 == 0.0 {
            return Err(Error::BadFamilyParams("minimal-t requires c8 != 0".into()));
        }
        Ok(Profile { kind: Kind::MinimalT { c8 }, quad_tol: 1e-12 })
    }

    pub fn flat_l(c13: f64, c14: f64) -> Result<Self> {
        if c13.abs() >= 1.0 {
            return Err(Error::BadFamilyParams(
                "flat-l requires |c13| < 1 (lightlike normalization 1 - f'^2 > 0)".into(),
            ));
        }
        Ok(Profile { kind: Kind::FlatL { c13, c14 }, quad_tol: 1e-12 })
    }

    pub fn first_kind_s(c4: f64, c5: f64, c6: f64, branch: Branch) -> Result<Self> {
        if c4 <= 0.0 {
            return Err(Error::BadFamilyParams("firstkind-s requires c4 > 0".into()));
        }
        if c5 < 0.0 {
            return Err(Error::BadFamilyParams("firstkind-s requires c5 >= 0".into()));
        }
        Ok(Profile {
            kind: Kind::FirstKindS { c4, c5, c6, branch },
            quad_tol: 1e-12,
        })
    }

    pub fn first_kind_t(c10: f64, c11: f64, c12: f64, branch: Branch) -> Result<Self> {
        if c10 <= 0.0 {
            return Err(Error::BadFamilyParams("firstkind-t requires c10 > 0".into()));
        }
        if c11 < 0.0 {
            return Err(Error::BadFamilyParams("firstkind-t requires c11 >= 0".into()));
        }
        let p = Profile {
            kind: Kind::FirstKindT { c10, c11, c12, branch },
            quad_tol: 1e-12,
        };
        // The family needs f'^2 > 1, which forces s < 0; check the base point
        // is actually inside the validity interval.
        p.check_family_domain(p.base_point())?;
        Ok(p)
    }

    /// Parse the CLI grammar. The canonical form round-trips through
    /// `Display`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::BadFamilyParams(format!("profile `{spec}` missing `name:` prefix")))?;
        match name {
            "const" => Ok(Profile::constant(parse_params(rest, name, 1)?[0])),
            "linear" => {
                let p = parse_params(rest, name, 2)?;
                Ok(Profile::linear(p[0], p[1]))
            }
            "poly" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.is_empty() || rest.is_empty() {
                    return Err(Error::BadFamilyParams("poly needs at least one coefficient".into()));
                }
                let coeffs = parse_params(rest, name, parts.len())?;
                Ok(Profile::poly(coeffs))
            }
            "tanh" => Ok(Profile::tanh(parse_params(rest, name, 1)?[0])),
            "flat-s" => Profile::flat_s(parse_params(rest, name, 1)?[0]),
            "minimal-s" => Profile::minimal_s(parse_params(rest, name, 1)?[0]),
            "flat-t" => Profile::flat_t(parse_params(rest, name, 1)?[0]),
            "minimal-t" => Profile::minimal_t(parse_params(rest, name, 1)?[0]),
            "flat-l" => {
                let p = parse_params(rest, name, 2)?;
                Profile::flat_l(p[0], p[1])
            }
            "firstkind-s" | "firstkind-t" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::BadFamilyParams(format!(
                        "{name} takes c,c,c,± (4 fields), got {}",
                        parts.len()
                    )));
                }
                let nums = parse_params(&parts[..3].join(","), name, 3)?;
                let branch = parse_branch(parts[3], name)?;
                if name == "firstkind-s" {
                    Profile::first_kind_s(nums[0], nums[1], nums[2], branch)
                } else {
                    Profile::first_kind_t(nums[0], nums[1], nums[2], branch)
                }
            }
            other => Err(Error::BadFamilyParams(format!("unknown profile family `{other}`"))),
        }
    }

    /// Flat/minimal family marker used by the specialized closed forms.
    pub fn special_case(&self) -> Option<SpecialCase> {
        match self.kind {
            Kind::FlatS { .. } | Kind::FlatT { .. } | Kind::FlatL { .. } => Some(SpecialCase::Flat),
            Kind::MinimalS { .. } | Kind::MinimalT { .. } => Some(SpecialCase::Minimal),
            _ => None,
        }
    }

    /// Family constants for the corollary formulas, when this is a named
    /// flat/minimal family: flat-s -> c1, minimal-s -> c2, flat-t -> c7,
    /// minimal-t -> c8, flat-l -> (c13, c14).
    pub fn family_constants(&self) -> Option<Vec<f64>> {
        match self.kind {
            Kind::FlatS { c1 } => Some(vec![c1]),
            Kind::MinimalS { c2 } => Some(vec![c2]),
            Kind::FlatT { c7 } => Some(vec![c7]),
            Kind::MinimalT { c8 } => Some(vec![c8]),
            Kind::FlatL { c13, c14 } => Some(vec![c13, c14]),
            _ => None,
        }
    }

    /// Name of the family as used in the grammar.
    pub fn family_name(&self) -> &'static str {
        match self.kind {
            Kind::Const(..) => "const",
            Kind::Linear { .. } => "linear",
            Kind::Poly(..) => "poly",
            Kind::Tanh(..) => "tanh",
            Kind::FlatS { .. } => "flat-s",
            Kind::MinimalS { .. } => "minimal-s",
            Kind::FlatT { .. } => "flat-t",
            Kind::MinimalT { .. } => "minimal-t",
            Kind::FlatL { .. } => "flat-l",
            Kind::FirstKindS { .. } => "firstkind-s",
            Kind::FirstKindT { .. } => "firstkind-t",
        }
    }

    /// Axis letter (`s`/`t`/`l`) this family is tied to, if any. Generic
    /// profiles return None and work on whichever axis their slope fits.
    pub fn axis_hint(&self) -> Option<char> {
        match self.kind {
            Kind::FlatS { .. } | Kind::MinimalS { .. } | Kind::FirstKindS { .. } => Some('s'),
            Kind::FlatT { .. } | Kind::MinimalT { .. } | Kind::FirstKindT { .. } => Some('t'),
            Kind::FlatL { .. } => Some('l'),
            _ => None,
        }
    }

    /// Base point for integral-defined values. The arc-integral theorems use
    /// lower limit 1; the timelike arc family lives on s < 0 so its base sits
    /// inside that interval; the minimal families use ±1 matched to the sign
    /// of s.
    fn base_point(&self) -> f64 {
        match self.kind {
            Kind::FirstKindS { .. } => 1.0,
            Kind::FirstKindT { c10, .. } => -c10 / 3.0,
            // minimal-t is only defined on s^4 < c8^2
            Kind::MinimalT { c8 } => 0.5 * c8.abs().sqrt(),
            _ => 1.0,
        }
    }

    /// Family-specific validity of a parameter value s. Violations carry the
    /// constraint by name.
    pub fn check_family_domain(&self, s: f64) -> Result<()> {
        match self.kind {
            Kind::MinimalT { c8 } => {
                if s * s * s * s >= c8 * c8 {
                    return Err(Error::BadFamilyParams(format!(
                        "minimal-t requires s^4 < c8^2 (s = {s}, c8 = {c8})"
                    )));
                }
            }
            Kind::FirstKindS { c4, c5, .. } => {
                if s <= 0.0 {
                    return Err(Error::BadFamilyParams(format!(
                        "firstkind-s requires s > 0 (s = {s})"
                    )));
                }
                let v = 12.0 * c4 * c5 * s * s * s + 3.0 * s + 2.0 * c4;
                if v <= 0.0 {
                    return Err(Error::BadFamilyParams(
                        "firstkind-s requires 12 c4 c5 s^3 + 3 s + 2 c4 > 0".into(),
                    ));
                }
            }
            Kind::FirstKindT { c10, c11, .. } => {
                if s >= 0.0 {
                    return Err(Error::BadFamilyParams(format!(
                        "firstkind-t requires s < 0 (f'^2 > 1 fails otherwise; s = {s})"
                    )));
                }
                let u = 6.0 * c11 * s * s * s + 1.0;
                let v = 12.0 * c10 * c11 * s * s * s + 3.0 * s + 2.0 * c10;
                if u <= 0.0 {
                    return Err(Error::BadFamilyParams(
                        "firstkind-t requires 6 c11 s^3 + 1 > 0".into(),
                    ));
                }
                if v <= 0.0 {
                    return Err(Error::BadFamilyParams(
                        "firstkind-t requires 12 c10 c11 s^3 + 3 s + 2 c10 > 0".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// f' as a jet in s (valid through second order, i.e. carries f'' and
    /// f'''), for the derivative-defined families.
    fn prime_jet(&self, s: f64) -> Jet {
        let js = Jet::coord_s(s);
        match self.kind {
            Kind::MinimalS { c2 } => {
                // f' = c2 / sqrt(s^4 + c2^2)
                (js.powi(4) + c2 * c2).sqrt().recip() * c2
            }
            Kind::MinimalT { c8 } => {
                // f' = c8 / sqrt(c8^2 - s^4)
                ((-js.powi(4)) + c8 * c8).sqrt().recip() * c8
            }
            Kind::FirstKindS { c4, c5, branch, .. } => {
                // f'^2 = 2 c4 (6 c5 s^3 + 1) / (12 c4 c5 s^3 + 3 s + 2 c4)
                let u = js.powi(3) * (12.0 * c4 * c5) + 2.0 * c4;
                let v = js.powi(3) * (12.0 * c4 * c5) + js * 3.0 + 2.0 * c4;
                (u / v).sqrt() * branch.signum()
            }
            Kind::FirstKindT { c10, c11, branch, .. } => {
                let u = js.powi(3) * (12.0 * c10 * c11) + 2.0 * c10;
                let v = js.powi(3) * (12.0 * c10 * c11) + js * 3.0 + 2.0 * c10;
                (u / v).sqrt() * branch.signum()
            }
            _ => unreachable!("prime_jet only for derivative-defined families"),
        }
    }

    fn prime_value(&self, s: f64) -> f64 {
        self.prime_jet(s).value
    }

    /// Evaluate the profile to a jet in s: value f(s) with exact ds, ds2, ds3
    /// slots (f', f'', f'''); all t, w slots zero.
    pub fn eval(&self, s: f64) -> Result<Jet> {
        self.check_family_domain(s)?;
        match &self.kind {
            Kind::Const(a) => Ok(Jet::constant(*a)),
            Kind::Linear { a, b } => Ok(Jet::of_s(a * s + b, *a, 0.0, 0.0)),
            Kind::Poly(coeffs) => {
                let js = Jet::coord_s(s);
                let mut acc = Jet::constant(0.0);
                // Horner over jets keeps every slot exact.
                for &c in coeffs.iter().rev() {
                    acc = acc * js + c;
                }
                Ok(acc)
            }
            Kind::Tanh(a) => Ok(Jet::coord_s(s).tanh() * *a),
            Kind::FlatS { c1 } => {
                let slope = c1.cbrt() / (1.0 + c1.cbrt() * c1.cbrt()).sqrt();
                Ok(Jet::of_s(slope * s, slope, 0.0, 0.0))
            }
            Kind::FlatT { c7 } => {
                let slope = c7.cbrt() / (c7.cbrt() * c7.cbrt() - 1.0).sqrt();
                Ok(Jet::of_s(slope * s, slope, 0.0, 0.0))
            }
            Kind::FlatL { c13, c14 } => Ok(Jet::of_s(c13 * s + c14, *c13, 0.0, 0.0)),
            Kind::MinimalS { .. } | Kind::MinimalT { .. } => {
                let p = self.prime_jet(s);
                let base = if s >= 0.0 { self.base_point() } else { -self.base_point() };
                self.check_family_domain(base)?;
                let value = quad(|x| self.prime_value(x), base, s, self.quad_tol)?;
                Ok(Jet::of_s(value, p.value, p.ds, p.ds2))
            }
            Kind::FirstKindS { c6, .. } => {
                let p = self.prime_jet(s);
                let value = quad(|x| self.prime_value(x), self.base_point(), s, self.quad_tol)? + c6;
                Ok(Jet::of_s(value, p.value, p.ds, p.ds2))
            }
            Kind::FirstKindT { c12, .. } => {
                let p = self.prime_jet(s);
                let value = quad(|x| self.prime_value(x), self.base_point(), s, self.quad_tol)? + c12;
                Ok(Jet::of_s(value, p.value, p.ds, p.ds2))
            }
        }
    }

    /// A representative s-interval inside the family's validity domain, used
    /// by sample plans and scans when the caller does not supply one.
    pub fn default_s_range(&self) -> (f64, f64) {
        match self.kind {
            Kind::MinimalT { c8 } => {
                let top = c8.abs().sqrt();
                (0.15 * top, 0.85 * top)
            }
            Kind::FirstKindT { c10, c11, .. } => {
                // validity on s < 0 is bounded below by the roots of the two
                // radicands; both are strictly increasing in s, so the lower
                // endpoint is the larger root. s near 0 drives f'^2 -> 1, so
                // keep |s| >= |lo|/4.
                let v = |s: f64| 12.0 * c10 * c11 * s * s * s + 3.0 * s + 2.0 * c10;
                let (mut a, mut b) = (-10.0 * c10.max(1.0), 0.0);
                for _ in 0..80 {
                    let m = 0.5 * (a + b);
                    if v(m) > 0.0 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
                let mut root = b;
                if c11 > 0.0 {
                    root = root.max(-(1.0 / (6.0 * c11)).cbrt());
                }
                let lo = 0.9 * root;
                (lo, 0.25 * lo)
            }
            _ => (1.1, 3.0),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn n(x: f64) -> String {
            // shortest round-trip representation; keeps the grammar canonical
            format!("{x}")
        }
        match &self.kind {
            Kind::Const(a) => write!(f, "const:{}", n(*a)),
            Kind::Linear { a, b } => write!(f, "linear:{},{}", n(*a), n(*b)),
            Kind::Poly(c) => {
                let body: Vec<String> = c.iter().map(|x| n(*x)).collect();
                write!(f, "poly:{}", body.join(","))
            }
            Kind::Tanh(a) => write!(f, "tanh:{}", n(*a)),
            Kind::FlatS { c1 } => write!(f, "flat-s:{}", n(*c1)),
            Kind::MinimalS { c2 } => write!(f, "minimal-s:{}", n(*c2)),
            Kind::FlatT { c7 } => write!(f, "flat-t:{}", n(*c7)),
            Kind::MinimalT { c8 } => write!(f, "minimal-t:{}", n(*c8)),
            Kind::FlatL { c13, c14 } => write!(f, "flat-l:{},{}", n(*c13), n(*c14)),
            Kind::FirstKindS { c4, c5, c6, branch } => write!(
                f,
                "firstkind-s:{},{},{},{}",
                n(*c4),
                n(*c5),
                n(*c6),
                if *branch == Branch::Plus { "+" } else { "-" }
            ),
            Kind::FirstKindT { c10, c11, c12, branch } => write!(
                f,
                "firstkind-t:{},{},{},{}",
                n(*c10),
                n(*c11),
                n(*c12),
                if *branch == Branch::Plus { "+" } else { "-" }
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_profile_jet() {
        let p = Profile::linear(0.5, 1.0);
        let j = p.eval(2.0).unwrap();
        assert_eq!(j.value, 2.0);
        assert_eq!(j.ds, 0.5);
        assert_eq!(j.ds2, 0.0);
        assert_eq!(j.ds3, 0.0);
        assert_eq!(j.dt, 0.0);
    }

    #[test]
    fn minimal_spacelike_slope() {
        // f'(s) = c2 / sqrt(s^4 + c2^2); at c2 = 1, s = 1 that is 1/sqrt(2).
        let p = Profile::minimal_s(1.0).unwrap();
        let j = p.eval(1.0).unwrap();
        assert!((j.ds - 1.0 / 2f64.sqrt()).abs() < 1e-14);
        // f'' = -2 c2 s^3 (s^4+c2^2)^(-3/2)
        assert!((j.ds2 - (-2.0 / 2f64.powf(1.5))).abs() < 1e-13);
    }

    #[test]
    fn first_kind_value_at_base_is_the_constant() {
        let p = Profile::first_kind_s(1.0, 1.0, 0.25, Branch::Plus).unwrap();
        let j = p.eval(1.0).unwrap();
        assert!((j.value - 0.25).abs() < 1e-14, "integral with equal bounds");
        // f'(1)^2 = 2(6+1)/(12+3+2) = 14/17
        assert!((j.ds - (14f64 / 17.0).sqrt()).abs() < 1e-13);
    }

    #[test]
    fn minimal_timelike_guards_s4_below_c8sq() {
        let p = Profile::minimal_t(1.0).unwrap();
        match p.eval(1.2) {
            Err(Error::BadFamilyParams(msg)) => assert!(msg.contains("s^4 < c8^2")),
            other => panic!("expected BadFamilyParams, got {other:?}"),
        }
        assert!(p.eval(0.9).is_ok());
    }

    #[test]
    fn flat_family_slopes() {
        // flat-s: |f'| < 1 always; flat-t: |f'| > 1 always.
        let ps = Profile::flat_s(1.0).unwrap();
        let slope = ps.eval(1.0).unwrap().ds;
        assert!((slope - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        let pt = Profile::flat_t(3.0).unwrap();
        assert!(pt.eval(1.0).unwrap().ds.abs() > 1.0);
        assert!(Profile::flat_t(0.5).is_err());
    }

    #[test]
    fn first_kind_timelike_lives_on_negative_s() {
        let p = Profile::first_kind_t(3.0, 0.0, 0.0, Branch::Plus).unwrap();
        let j = p.eval(-1.0).unwrap();
        // f'^2 = 6/(3s + 6) = 2 at s = -1
        assert!((j.ds * j.ds - 2.0).abs() < 1e-13);
        assert!(p.eval(0.5).is_err());
    }

    #[test]
    fn grammar_round_trips() {
        for spec in [
            "const:1",
            "linear:0.5,0",
            "poly:1,-0.25,0.125,0.5",
            "tanh:0.6",
            "flat-s:1",
            "minimal-s:1",
            "flat-t:3",
            "minimal-t:2",
            "flat-l:0,1",
            "firstkind-s:1,0,0,+",
            "firstkind-t:3,0,0,-",
        ] {
            let p = Profile::parse(spec).unwrap();
            let canon = p.to_string();
            let again = Profile::parse(&canon).unwrap();
            assert_eq!(p, again, "round trip failed for {spec} -> {canon}");
        }
        assert!(Profile::parse("nope:1").is_err());
        assert!(Profile::parse("linear:1").is_err());
        assert!(Profile::parse("firstkind-s:1,0,0,?").is_err());
    }

    #[test]
    fn rejects_non_finite_parameters() {
        for spec in ["const:NaN", "linear:inf,0", "poly:1,NaN", "minimal-s:-inf"] {
            assert!(
                matches!(Profile::parse(spec), Err(Error::BadFamilyParams(_))),
                "{spec} must be rejected"
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn grammar_round_trips_random_params(
            a in -50.0f64..50.0,
            b in -50.0f64..50.0,
            c4 in 0.01f64..20.0,
            c5 in 0.0f64..10.0,
            plus in proptest::bool::ANY,
        ) {
            let sign = if plus { "+" } else { "-" };
            for spec in [
                format!("linear:{a},{b}"),
                format!("poly:{a},{b},{c5}"),
                format!("firstkind-s:{c4},{c5},{b},{sign}"),
            ] {
                let p = Profile::parse(&spec).unwrap();
                let canon = p.to_string();
                let again = Profile::parse(&canon).unwrap();
                proptest::prop_assert_eq!(&p, &again, "spec {} -> {}", spec, canon);
            }
        }
    }

    #[test]
    fn poly_jets_are_exact() {
        // f = 1 + 2s - s^2 + 0.5 s^3
        let p = Profile::poly(vec![1.0, 2.0, -1.0, 0.5]);
        let j = p.eval(1.5).unwrap();
        let s: f64 = 1.5;
        assert!((j.value - (1.0 + 2.0 * s - s * s + 0.5 * s * s * s)).abs() < 1e-14);
        assert!((j.ds - (2.0 - 2.0 * s + 1.5 * s * s)).abs() < 1e-14);
        assert!((j.ds2 - (-2.0 + 3.0 * s)).abs() < 1e-14);
        assert!((j.ds3 - 3.0).abs() < 1e-14);
    }
}
