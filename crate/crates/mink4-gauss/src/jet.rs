//! Truncated-Taylor scalars ("jets") over the surface coordinates (s, t, w).
//!
//! A [`Jet`] carries a value together with its exact partial derivatives up to
//! order 3 in `s` and order 2 in `t` and `w` (including the mixed second
//! partials `ds·dt`, `ds·dw`, `dt·dw`). Arithmetic propagates the stored
//! orders exactly, so profile functions, Gauss maps, metric coefficients and
//! their Christoffel symbols all come out with machine-precision derivatives —
//! no finite differencing anywhere on the computation path.
//!
//! The slot budget is the minimum the operators need: third s-derivatives feed
//! the f''' terms of the closed forms, and the full second-order block feeds
//! the intrinsic Hessians of the trace oracle.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A scalar with exact partial derivatives in (s, t, w).
///
/// Stored orders: s up to 3, t and w up to 2, plus the mixed second partials.
/// Slots the arithmetic cannot keep exact for a given input (e.g. `ds3` of a
/// quantity seeded from an order-2 profile derivative) are simply never read
/// downstream.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub ds: f64,
    pub ds2: f64,
    pub ds3: f64,
    pub dt: f64,
    pub dw: f64,
    pub dt2: f64,
    pub dw2: f64,
    pub dsdt: f64,
    pub dsdw: f64,
    pub dtdw: f64,
}

impl Jet {
    /// Lift a constant: all derivative slots zero.
    pub fn constant(value: f64) -> Self {
        Jet {
            value,
            ..Jet::default()
        }
    }

    /// The coordinate s at value `s`: ds = 1, everything else 0.
    pub fn coord_s(s: f64) -> Self {
        Jet {
            value: s,
            ds: 1.0,
            ..Jet::default()
        }
    }

    /// The coordinate t at value `t`.
    pub fn coord_t(t: f64) -> Self {
        Jet {
            value: t,
            dt: 1.0,
            ..Jet::default()
        }
    }

    /// The coordinate w at value `w`.
    pub fn coord_w(w: f64) -> Self {
        Jet {
            value: w,
            dw: 1.0,
            ..Jet::default()
        }
    }

    /// A function of s only, given by its 3-jet (f, f', f'', f''').
    pub fn of_s(f: f64, f1: f64, f2: f64, f3: f64) -> Self {
        Jet {
            value: f,
            ds: f1,
            ds2: f2,
            ds3: f3,
            ..Jet::default()
        }
    }

    /// Apply a smooth unary function given its value and first three
    /// derivatives at `self.value` (Faà di Bruno truncated to the stored slots).
    pub fn chain(self, g: f64, g1: f64, g2: f64, g3: f64) -> Self {
        let x = self;
        Jet {
            value: g,
            ds: g1 * x.ds,
            ds2: g1 * x.ds2 + g2 * x.ds * x.ds,
            ds3: g1 * x.ds3 + 3.0 * g2 * x.ds * x.ds2 + g3 * x.ds * x.ds * x.ds,
            dt: g1 * x.dt,
            dw: g1 * x.dw,
            dt2: g1 * x.dt2 + g2 * x.dt * x.dt,
            dw2: g1 * x.dw2 + g2 * x.dw * x.dw,
            dsdt: g1 * x.dsdt + g2 * x.ds * x.dt,
            dsdw: g1 * x.dsdw + g2 * x.ds * x.dw,
            dtdw: g1 * x.dtdw + g2 * x.dt * x.dw,
        }
    }

    pub fn recip(self) -> Self {
        let v = self.value;
        let iv = 1.0 / v;
        self.chain(iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv)
    }

    pub fn sqrt(self) -> Self {
        let r = self.value.sqrt();
        let d1 = 0.5 / r;
        let d2 = -0.25 / (r * self.value);
        let d3 = 0.375 / (r * self.value * self.value);
        self.chain(r, d1, d2, d3)
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(s, c, -s, -c)
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(c, -s, -c, s)
    }

    pub fn sinh(self) -> Self {
        let s = self.value.sinh();
        let c = self.value.cosh();
        self.chain(s, c, s, c)
    }

    pub fn cosh(self) -> Self {
        let s = self.value.sinh();
        let c = self.value.cosh();
        self.chain(c, s, c, s)
    }

    pub fn tanh(self) -> Self {
        let y = self.value.tanh();
        let sech2 = 1.0 - y * y;
        self.chain(
            y,
            sech2,
            -2.0 * y * sech2,
            sech2 * (6.0 * y * y - 2.0),
        )
    }

    /// Integer power by repeated multiplication (exact Taylor rules).
    pub fn powi(self, n: u32) -> Self {
        let mut acc = Jet::constant(1.0);
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            value: self.value + o.value,
            ds: self.ds + o.ds,
            ds2: self.ds2 + o.ds2,
            ds3: self.ds3 + o.ds3,
            dt: self.dt + o.dt,
            dw: self.dw + o.dw,
            dt2: self.dt2 + o.dt2,
            dw2: self.dw2 + o.dw2,
            dsdt: self.dsdt + o.dsdt,
            dsdw: self.dsdw + o.dsdw,
            dtdw: self.dtdw + o.dtdw,
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            value: -self.value,
            ds: -self.ds,
            ds2: -self.ds2,
            ds3: -self.ds3,
            dt: -self.dt,
            dw: -self.dw,
            dt2: -self.dt2,
            dw2: -self.dw2,
            dsdt: -self.dsdt,
            dsdw: -self.dsdw,
            dtdw: -self.dtdw,
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let a = self;
        let b = o;
        Jet {
            value: a.value * b.value,
            ds: a.ds * b.value + a.value * b.ds,
            ds2: a.ds2 * b.value + 2.0 * a.ds * b.ds + a.value * b.ds2,
            ds3: a.ds3 * b.value + 3.0 * a.ds2 * b.ds + 3.0 * a.ds * b.ds2 + a.value * b.ds3,
            dt: a.dt * b.value + a.value * b.dt,
            dw: a.dw * b.value + a.value * b.dw,
            dt2: a.dt2 * b.value + 2.0 * a.dt * b.dt + a.value * b.dt2,
            dw2: a.dw2 * b.value + 2.0 * a.dw * b.dw + a.value * b.dw2,
            dsdt: a.dsdt * b.value + a.ds * b.dt + a.dt * b.ds + a.value * b.dsdt,
            dsdw: a.dsdw * b.value + a.ds * b.dw + a.dw * b.ds + a.value * b.dsdw,
            dtdw: a.dtdw * b.value + a.dt * b.dw + a.dw * b.dt + a.value * b.dtdw,
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    // quotient rule realized as a * (1/b)
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, k: f64) -> Jet {
        self * Jet::constant(k)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, k: f64) -> Jet {
        self + Jet::constant(k)
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(self, k: f64) -> Jet {
        self - Jet::constant(k)
    }
}
