//! 4-vectors in Lorentz-Minkowski space E^4_1 with signature (-,+,+,+).

use std::ops::{Add, Mul, Neg, Sub};

/// An ambient 4-vector; the first coordinate is the timelike one.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MinkVec4 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl MinkVec4 {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        MinkVec4 { x1, x2, x3, x4 }
    }

    pub fn zero() -> Self {
        MinkVec4::default()
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        MinkVec4::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    /// Euclidean component norm, used for residual scaling. The Minkowski
    /// norm can vanish on nonzero (lightlike) vectors, so it is useless as a
    /// residual measure.
    pub fn norm(self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3 + self.x4 * self.x4).sqrt()
    }

    /// Largest component magnitude.
    pub fn max_abs(self) -> f64 {
        self.x1
            .abs()
            .max(self.x2.abs())
            .max(self.x3.abs())
            .max(self.x4.abs())
    }
}

/// The signature-(-,+,+,+) bilinear form; symmetric and bilinear, total on
/// all inputs.
pub fn mink_dot(u: MinkVec4, v: MinkVec4) -> f64 {
    -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 + u.x4 * v.x4
}

impl Add for MinkVec4 {
    type Output = MinkVec4;
    fn add(self, o: MinkVec4) -> MinkVec4 {
        MinkVec4::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3, self.x4 + o.x4)
    }
}

impl Sub for MinkVec4 {
    type Output = MinkVec4;
    fn sub(self, o: MinkVec4) -> MinkVec4 {
        self + (-o)
    }
}

impl Neg for MinkVec4 {
    type Output = MinkVec4;
    fn neg(self) -> MinkVec4 {
        MinkVec4::new(-self.x1, -self.x2, -self.x3, -self.x4)
    }
}

impl Mul<f64> for MinkVec4 {
    type Output = MinkVec4;
    fn mul(self, k: f64) -> MinkVec4 {
        MinkVec4::new(self.x1 * k, self.x2 * k, self.x3 * k, self.x4 * k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn timelike_unit_vector_squares_to_minus_one() {
        let e1 = MinkVec4::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(mink_dot(e1, e1), -1.0);
    }

    #[test]
    fn lightlike_vector_squares_to_zero() {
        let l = MinkVec4::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(mink_dot(l, l), 0.0);
    }

    #[test]
    fn gauss_map_of_linear_spacelike_profile_is_unit() {
        // Gauss map of f = 0.5 s at s = 2 (see the operator modules).
        let n = MinkVec4::new(-0.5 / 0.75f64.sqrt(), 0.0, 0.0, -1.0 / 0.75f64.sqrt());
        assert!((mink_dot(n, n) - 1.0).abs() < 1e-12);
        assert!((n.x1 - (-0.5773503)).abs() < 1e-7);
        assert!((n.x4 - (-1.1547005)).abs() < 1e-7);
    }

    proptest! {
        #[test]
        fn symmetric_and_bilinear(
            a in proptest::array::uniform4(-10.0f64..10.0),
            b in proptest::array::uniform4(-10.0f64..10.0),
            c in proptest::array::uniform4(-10.0f64..10.0),
            lam in -5.0f64..5.0,
        ) {
            let (u, v, z) = (
                MinkVec4::from_array(a),
                MinkVec4::from_array(b),
                MinkVec4::from_array(c),
            );
            let scale = 1.0 + u.norm() * (v.norm() + z.norm()) * (1.0 + lam.abs());
            prop_assert!((mink_dot(u, v) - mink_dot(v, u)).abs() <= 1e-12 * scale);
            prop_assert!(
                (mink_dot(u + z * lam, v) - (mink_dot(u, v) + lam * mink_dot(z, v))).abs()
                    <= 1e-12 * scale
            );
        }
    }
}
