//! Adaptive Simpson quadrature with a Richardson error estimate.
//!
//! Used to materialize the integral-defined profile functions. The integrands
//! are smooth on their validity intervals, so a plain recursive Simpson rule
//! with the classical |S2 - S1|/15 acceptance test is accurate and easy to
//! audit. A hard cap of 2^20 panels turns pathological inputs into a typed
//! error instead of an endless recursion.

use crate::error::{Error, Result};

/// Default relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_PANELS: u64 = 1 << 20;

/// Integrate `f` over [a, b] so that |result - exact| <= tol * (1 + |result|).
///
/// `b < a` is allowed and gives the signed integral. Equal bounds return 0
/// without evaluating the integrand.
pub fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    assert!(tol > 0.0, "quad tolerance must be positive");
    if a == b {
        return Ok(0.0);
    }

    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    // Scale the absolute budget by the rough magnitude, honoring the
    // relative-tolerance contract.
    let budget = tol * (1.0 + whole.abs());

    let mut panels: u64 = 0;
    let est = adapt(&f, a, b, fa, fm, fb, whole, budget, 24, &mut panels)?;
    Ok(est)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    budget: f64,
    depth: u32,
    panels: &mut u64,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let s2 = left + right;
    let err = (s2 - whole) / 15.0;

    *panels += 2;
    if err.abs() <= budget || (b - a).abs() < f64::EPSILON * (1.0 + a.abs() + b.abs()) {
        // Richardson extrapolation: one order better than S2 for free.
        return Ok(s2 + err);
    }
    if depth == 0 || *panels > MAX_PANELS {
        return Err(Error::QuadNonConvergence {
            best: s2 + err,
            err_bound: err.abs(),
        });
    }
    let l = adapt(f, a, m, fa, flm, fm, left, 0.5 * budget, depth - 1, panels)?;
    let r = adapt(f, m, b, fm, frm, fb, right, 0.5 * budget, depth - 1, panels)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_bounds_integrate_to_zero() {
        let v = quad(|x| x.exp() + 17.0, 1.0, 1.0, 1e-10).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn polynomial_exactness() {
        // Simpson is exact through cubics and the adaptive refinement carries
        // degree 4 and 5 to well below 1e-12 absolute.
        let v = quad(|x| x * x, 0.0, 1.0, 1e-10).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-10);
        for (poly, exact) in [
            ((|x: f64| x.powi(4)) as fn(f64) -> f64, 0.2),
            (|x: f64| x.powi(5), 1.0 / 6.0),
            (|x: f64| 3.0 * x.powi(3) - x + 0.5, 0.75 - 0.5 + 0.5),
        ] {
            let v = quad(poly, 0.0, 1.0, 1e-12).unwrap();
            assert!((v - exact).abs() < 1e-12, "got {v}, want {exact}");
        }
    }

    #[test]
    fn first_kind_profile_integrand_regression() {
        // Frozen from an independent high-resolution composite-Simpson
        // refinement (30-digit arithmetic): the arc integrand of the
        // first-kind spacelike family with c4 = c5 = 1 over [1, 2].
        let f = |x: f64| (2.0 * (6.0 * x.powi(3) + 1.0)).sqrt() / (12.0 * x.powi(3) + 3.0 * x + 2.0).sqrt();
        let v = quad(f, 1.0, 2.0, 1e-12).unwrap();
        assert!((v - 0.9470643342140267).abs() < 1e-11, "got {v}");
    }

    #[test]
    fn reversed_bounds_flip_sign() {
        let a = quad(|x| x.sin(), 0.0, 2.0, 1e-11).unwrap();
        let b = quad(|x| x.sin(), 2.0, 0.0, 1e-11).unwrap();
        assert!((a + b).abs() < 1e-11);
    }

    #[test]
    fn nonconvergence_carries_best_estimate() {
        // |x|^(-1/2) is integrable but the singular corner defeats the
        // panel cap at a tolerance this tight.
        let r = quad(|x: f64| x.abs().max(1e-300).powf(-0.5), 0.0, 1.0, 1e-14);
        match r {
            Err(Error::QuadNonConvergence { best, err_bound }) => {
                assert!(best.is_finite());
                assert!(err_bound > 0.0);
            }
            other => panic!("expected QuadNonConvergence, got {other:?}"),
        }
    }
}
