//! The scalar backbone: derivative-carrying jets and adaptive quadrature.
//!
//! Jets propagate exact partial derivatives (order 3 in s, order 2 in t, w)
//! through arithmetic; quadrature materializes the integral-defined profile
//! values. This example checks a jet against central finite differences and
//! integrates the first-kind arc integrand.
//!
//! Run: cargo run --example jets_and_quadrature

use mink4_gauss::jet::Jet;
use mink4_gauss::quad::quad;

fn main() -> mink4_gauss::Result<()> {
    // g(s, t, w) = sinh(s t) / sqrt(1 + s^2 + w^2)
    let g = |s: f64, t: f64, w: f64| -> Jet {
        let (js, jt, jw) = (Jet::coord_s(s), Jet::coord_t(t), Jet::coord_w(w));
        (js * jt).sinh() / (js * js + jw * jw + 1.0).sqrt()
    };
    let (s, t, w) = (0.7, -0.4, 1.1);
    let j = g(s, t, w);
    let h = 1e-5;
    let fd_s = (g(s + h, t, w).value - g(s - h, t, w).value) / (2.0 * h);
    let fd_tw = (g(s, t + h, w + h).value - g(s, t + h, w - h).value - g(s, t - h, w + h).value
        + g(s, t - h, w - h).value)
        / (4.0 * h * h);
    println!("jet ds   = {:.12}   central difference {:.12}", j.ds, fd_s);
    println!("jet dtdw = {:.12}   central difference {:.12}", j.dtdw, fd_tw);

    // the arc integrand of the first-kind spacelike family (c4 = c5 = 1)
    let integrand = |x: f64| {
        (2.0 * (6.0 * x.powi(3) + 1.0)).sqrt() / (12.0 * x.powi(3) + 3.0 * x + 2.0).sqrt()
    };
    let v = quad(integrand, 1.0, 2.0, 1e-12)?;
    println!("arc integral over [1, 2] = {v:.16} (reference 0.9470643342140267)");
    Ok(())
}
