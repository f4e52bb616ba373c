use super::matrix::Mat;

/// `e^{-tA}` by the scaling-and-squaring method with a [6/6] Padé
/// approximant.  Works for any square real matrix.
pub fn matrix_exponential(a: &Mat<f64>, t: f64) -> Mat<f64> {
    expm(&a.scale(&-t))
}

fn one_norm(a: &Mat<f64>) -> f64 {
    (0..a.cols())
        .map(|c| (0..a.rows()).map(|r| a[(r, c)].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn expm(b: &Mat<f64>) -> Mat<f64> {
    let n = b.rows();
    assert_eq!(n, b.cols(), "expm requires a square matrix");
    let norm = one_norm(b);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = b.scale(&0.5f64.powi(squarings));

    // Padé [6/6] coefficients for e^x: c_0 = 1, c_j = c_{j-1} (7-j)/(j (13-j)).
    let mut c = [0.0; 7];
    c[0] = 1.0;
    for j in 1..7 {
        c[j] = c[j - 1] * (7 - j) as f64 / (j * (13 - j)) as f64;
    }

    let mut power = Mat::identity(n);
    let mut num = Mat::identity(n); // sum c_j B^j
    let mut den = Mat::identity(n); // sum (-1)^j c_j B^j
    for (j, &cj) in c.iter().enumerate().skip(1) {
        power = power.mul(&scaled);
        let term = power.scale(&cj);
        num = num.add(&term);
        if j % 2 == 0 {
            den = den.add(&term);
        } else {
            den = den.sub(&term);
        }
    }
    let mut x = den
        .solve(&num)
        .expect("Pade denominator is nonsingular for scaled input");
    for _ in 0..squarings {
        x = x.mul(&x);
    }
    x
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns `(eigenvalues, q)` with the columns of `q` the orthonormal
/// eigenvectors, so `a = q * diag(eigenvalues) * q^T`.
pub fn jacobi_eigen(a: &Mat<f64>) -> (Vec<f64>, Mat<f64>) {
    let n = a.rows();
    assert_eq!(n, a.cols(), "jacobi_eigen requires a square matrix");
    let mut a = a.clone();
    let mut v = Mat::identity(n);
    let scale = a.max_abs().max(1.0);
    for _sweep in 0..200 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].abs());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eig = (0..n).map(|i| a[(i, i)]).collect();
    (eig, v)
}

/// `e^{-tA}` for an operator `A` that is self-adjoint with respect to the
/// weights `m` (that is, `M A` is symmetric for `M = diag(m)`).  Computed by
/// symmetrizing `A` to `M^{1/2} A M^{-1/2}`, diagonalizing with Jacobi
/// rotations, and conjugating back — an independent route used to validate
/// [`matrix_exponential`].
pub fn expm_self_adjoint(a: &Mat<f64>, m: &[f64], t: f64) -> Mat<f64> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    assert_eq!(n, m.len());
    let sqrt_m: Vec<f64> = m.iter().map(|w| w.sqrt()).collect();
    let mut sym = Mat::from_fn(n, n, |r, c| sqrt_m[r] * a[(r, c)] / sqrt_m[c]);
    // Kill the rounding skew so Jacobi sees an exactly symmetric matrix.
    for r in 0..n {
        for c in (r + 1)..n {
            let avg = 0.5 * (sym[(r, c)] + sym[(c, r)]);
            sym[(r, c)] = avg;
            sym[(c, r)] = avg;
        }
    }
    let (eig, q) = jacobi_eigen(&sym);
    let exp_diag: Vec<f64> = eig.iter().map(|l| (-t * l).exp()).collect();
    // M^{-1/2} Q e^{-t diag} Q^T M^{1/2}
    Mat::from_fn(n, n, |r, c| {
        let inner: f64 = (0..n).map(|k| q[(r, k)] * exp_diag[k] * q[(c, k)]).sum();
        inner * sqrt_m[c] / sqrt_m[r]
    })
}
