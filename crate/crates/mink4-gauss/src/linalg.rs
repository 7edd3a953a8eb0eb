//! Fixed-size 3x3 matrix helpers: products, inverses, and closed-form
//! eigenvalues via the characteristic polynomial (Cardano / trigonometric
//! form for the three-real-root case, which covers every shape operator the
//! rotational families produce).

/// Row-major 3x3 matrix.
pub type Mat3 = [[f64; 3]; 3];

pub const IDENTITY: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_scale(a: &Mat3, k: f64) -> Mat3 {
    let mut out = *a;
    for row in &mut out {
        for cell in row {
            *cell *= k;
        }
    }
    out
}

pub fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] += b[i][j];
        }
    }
    out
}

pub fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    mat_add(a, &mat_scale(b, -1.0))
}

pub fn trace(a: &Mat3) -> f64 {
    a[0][0] + a[1][1] + a[2][2]
}

pub fn det(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Inverse via the adjugate; returns None when the determinant vanishes.
pub fn inverse(a: &Mat3) -> Option<Mat3> {
    let d = det(a);
    if d == 0.0 || !d.is_finite() {
        return None;
    }
    let inv_d = 1.0 / d;
    let mut c = [[0.0; 3]; 3];
    for (i, j) in (0..3).flat_map(|i| (0..3).map(move |j| (i, j))) {
        let (r1, r2) = ((i + 1) % 3, (i + 2) % 3);
        let (c1, c2) = ((j + 1) % 3, (j + 2) % 3);
        // adjugate transposes the cofactor matrix
        c[j][i] = (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) * inv_d;
    }
    Some(c)
}

/// 1-norm condition estimate.
pub fn cond_1(a: &Mat3) -> f64 {
    match inverse(a) {
        Some(inv) => norm_1(a) * norm_1(&inv),
        None => f64::INFINITY,
    }
}

fn norm_1(a: &Mat3) -> f64 {
    (0..3)
        .map(|j| (0..3).map(|i| a[i][j].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Elementary symmetric functions (e1, e2, e3) of the eigenvalues of `a`,
/// read off the characteristic polynomial (no eigen-decomposition needed).
pub fn elem_sym(a: &Mat3) -> (f64, f64, f64) {
    let e1 = trace(a);
    let a2 = mat_mul(a, a);
    let e2 = 0.5 * (e1 * e1 - trace(&a2));
    let e3 = det(a);
    (e1, e2, e3)
}

/// Real eigenvalues of a 3x3 matrix with all-real spectrum, sorted
/// ascending. Solves the characteristic cubic in Cardano trigonometric form,
/// then applies a multiplicity-aware Newton polish: the trig formula alone
/// loses half the digits near repeated roots, and the rotational surfaces
/// always have kappa2 = kappa3.
pub fn eigenvalues_real(a: &Mat3) -> [f64; 3] {
    let (e1, e2, e3) = elem_sym(a);
    // lambda^3 - e1 lambda^2 + e2 lambda - e3 = 0; depress with lambda = x + e1/3
    let p = e2 - e1 * e1 / 3.0;
    let q = -2.0 * e1 * e1 * e1 / 27.0 + e1 * e2 / 3.0 - e3;
    let shift = e1 / 3.0;
    let mut roots = if p.abs() < 1e-300 {
        let r = (-q).cbrt();
        [r + shift; 3]
    } else {
        let m = 2.0 * (-p / 3.0).max(0.0).sqrt();
        if m == 0.0 {
            [shift; 3]
        } else {
            let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            [
                m * theta.cos() + shift,
                m * (theta - 2.0 * std::f64::consts::PI / 3.0).cos() + shift,
                m * (theta + 2.0 * std::f64::consts::PI / 3.0).cos() + shift,
            ]
        }
    };
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Refinement. Near a double root the characteristic polynomial itself is
    // noise-limited to ~sqrt(eps), but the double root is a *simple* root of
    // p', a well-conditioned quadratic; the remaining simple root then comes
    // from the exact trace relation. Fully separated roots take plain Newton.
    let scale = 1.0 + roots.iter().fold(0.0f64, |acc, r| acc.max(r.abs()));
    let cluster = 5e-7 * scale;
    let poly = |x: f64| ((x - e1) * x + e2) * x - e3;
    let dpoly = |x: f64| (3.0 * x - 2.0 * e1) * x + e2;
    let newton = |mut x: f64| {
        for _ in 0..2 {
            let d = dpoly(x);
            if d == 0.0 {
                break;
            }
            let step = poly(x) / d;
            if !step.is_finite() || step.abs() > 1e-3 * scale {
                break;
            }
            x -= step;
        }
        x
    };
    let crit_near = |x0: f64| -> Option<f64> {
        // roots of p'(x) = 3x^2 - 2 e1 x + e2
        let disc = e1 * e1 - 3.0 * e2;
        if disc < 0.0 {
            return None;
        }
        let r = disc.sqrt();
        let c1 = (e1 + r) / 3.0;
        let c2 = (e1 - r) / 3.0;
        Some(if (c1 - x0).abs() <= (c2 - x0).abs() { c1 } else { c2 })
    };
    let d01 = roots[1] - roots[0];
    let d12 = roots[2] - roots[1];
    if d01 <= cluster && d12 <= cluster {
        let r = e1 / 3.0;
        roots = [r; 3];
    } else if d01 <= cluster {
        let mu = crit_near(0.5 * (roots[0] + roots[1])).unwrap_or(roots[0]);
        roots = [mu, mu, e1 - 2.0 * mu];
    } else if d12 <= cluster {
        let mu = crit_near(0.5 * (roots[1] + roots[2])).unwrap_or(roots[2]);
        roots = [e1 - 2.0 * mu, mu, mu];
    } else {
        roots = [newton(roots[0]), newton(roots[1]), newton(roots[2])];
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_diagonal() {
        let a: Mat3 = [[2.0, 0.0, 0.0], [0.0, -4.0, 0.0], [0.0, 0.0, 0.5]];
        let inv = inverse(&a).unwrap();
        let prod = mat_mul(&a, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn eigenvalues_of_diagonal_with_repeat() {
        let a: Mat3 = [[0.0, 0.0, 0.0], [0.0, 0.2886751, 0.0], [0.0, 0.0, 0.2886751]];
        let ev = eigenvalues_real(&a);
        assert!((ev[0] - 0.0).abs() < 1e-12);
        assert!((ev[1] - 0.2886751).abs() < 1e-12);
        assert!((ev[2] - 0.2886751).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_nonsymmetric_real_spectrum() {
        // companion-like matrix with spectrum {1, 2, 3}
        let a: Mat3 = [[6.0, -11.0, 6.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
        let ev = eigenvalues_real(&a);
        assert!((ev[0] - 1.0).abs() < 1e-10);
        assert!((ev[1] - 2.0).abs() < 1e-10);
        assert!((ev[2] - 3.0).abs() < 1e-10);
    }

    #[test]
    fn elem_sym_matches_eigenvalues() {
        let a: Mat3 = [[1.5, 0.2, 0.0], [0.0, -0.5, 0.1], [0.3, 0.0, 2.0]];
        let (e1, e2, e3) = elem_sym(&a);
        let ev = eigenvalues_real(&a);
        assert!((e1 - (ev[0] + ev[1] + ev[2])).abs() < 1e-9);
        assert!((e2 - (ev[0] * ev[1] + ev[0] * ev[2] + ev[1] * ev[2])).abs() < 1e-9);
        assert!((e3 - ev[0] * ev[1] * ev[2]).abs() < 1e-9);
    }
}
