use super::scalar::Scalar;
use crate::error::Error;

/// A finite weighted measure space: coordinates indexed `0..dim` with
/// strictly positive weights `m`.  Cochain spaces `C(X_k)` are instances of
/// this with `m` the cell weights of grade `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSpace<S> {
    m: Vec<S>,
}

impl<S: Scalar> WeightedSpace<S> {
    pub fn new(m: Vec<S>) -> Self {
        assert!(m.iter().all(Scalar::is_positive), "weights must be positive");
        WeightedSpace { m }
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn weights(&self) -> &[S] {
        &self.m
    }

    /// `<f, g> = sum_x f(x) g(x) m(x)`.
    pub fn inner(&self, f: &[S], g: &[S]) -> S {
        assert_eq!(f.len(), self.m.len());
        assert_eq!(g.len(), self.m.len());
        f.iter()
            .zip(g)
            .zip(&self.m)
            .map(|((a, b), w)| a.clone() * b.clone() * w.clone())
            .sum()
    }

    /// `||f||_{omega,1} = sum_x m(x) omega(x) |f(x)|` (omega defaults to 1).
    pub fn norm_one_omega(&self, f: &[S], omega: Option<&[S]>) -> S {
        assert_eq!(f.len(), self.m.len());
        f.iter()
            .enumerate()
            .map(|(i, v)| {
                let w = match omega {
                    Some(o) => o[i].clone(),
                    None => S::one(),
                };
                v.abs() * w * self.m[i].clone()
            })
            .sum()
    }

    /// `||f||_{omega,inf} = max_x |f(x)| / omega(x)` (omega defaults to 1).
    /// Note the sup-norm carries no `m`-weight.
    pub fn norm_inf_omega(&self, f: &[S], omega: Option<&[S]>) -> S {
        assert_eq!(f.len(), self.m.len());
        let mut best = S::zero();
        for (i, v) in f.iter().enumerate() {
            let r = match omega {
                Some(o) => v.abs() / o[i].clone(),
                None => v.abs(),
            };
            if r > best {
                best = r;
            }
        }
        best
    }
}

/// The omega-deformed p-norm `||f||_{omega,p} = ||omega^(2/p - 1) f||_p`
/// where `||g||_p^p = sum_x m(x) |g(x)|^p`, and
/// `||f||_{omega,inf} = max |f|/omega`.
///
/// `p` may be any value in `[1, inf]`; the computation is scaled so that
/// large finite exponents (used to probe continuity at `p = inf`) do not
/// overflow.
pub fn norm_p_omega(
    f: &[f64],
    p: f64,
    omega: Option<&[f64]>,
    space: &WeightedSpace<f64>,
) -> Result<f64, Error> {
    assert_eq!(f.len(), space.dim());
    if p.is_nan() || p < 1.0 {
        return Err(Error::BadExponent(p));
    }
    if p.is_infinite() {
        return Ok(space.norm_inf_omega(f, omega));
    }
    let exponent = 2.0 / p - 1.0;
    let g: Vec<f64> = f
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let w = omega.map_or(1.0, |o| o[i]);
            w.powf(exponent) * v.abs()
        })
        .collect();
    let peak = g.iter().copied().fold(0.0, f64::max);
    if peak == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = g
        .iter()
        .zip(space.weights())
        .map(|(v, m)| m * (v / peak).powf(p))
        .sum();
    Ok(peak * sum.powf(1.0 / p))
}
