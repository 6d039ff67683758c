use super::ComplexMatrix;
use nalgebra::DMatrix;
use num_complex::Complex64;

const NEWTON_STEPS: usize = 60;

/// The unitary factor of the polar decomposition `X = U·H`, i.e. the
/// unitary matrix nearest to `X` in Frobenius norm. Uses scaled Newton
/// iteration `X ← (γX + (γX)^{-†})/2` and falls back to an SVD when `X` is
/// singular or the iteration stalls. `None` only if the SVD fails too.
pub fn nearest_unitary(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    newton(x).or_else(|| svd_polar(x))
}

fn newton(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = x.n();
    let mut cur = x.clone();
    for _ in 0..NEWTON_STEPS {
        let inv = cur.inverse()?;
        let gamma = (inv.frobenius_norm() / cur.frobenius_norm()).sqrt();
        if !gamma.is_finite() || gamma == 0.0 {
            return None;
        }
        let inv_adj = inv.adjoint();
        let next = ComplexMatrix::from_fn(n, |i, j| {
            (cur[(i, j)] * gamma + inv_adj[(i, j)] / gamma) * 0.5
        });
        let step = next.max_abs_diff(&cur);
        cur = next;
        if step <= 1e-15 * (n as f64) {
            break;
        }
    }
    (cur.unitarity_residual() <= 1e-12).then_some(cur)
}

fn svd_polar(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = x.n();
    let m = DMatrix::<Complex64>::from_fn(n, n, |i, j| x[(i, j)]);
    let svd = m.try_svd(true, true, 1e-15, 10_000)?;
    let u = svd.u?;
    let v_t = svd.v_t?;
    let w = u * v_t;
    Some(ComplexMatrix::from_fn(n, |i, j| w[(i, j)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, |i, j| {
            Complex64::new(((i * 7 + j * 3) % 5) as f64 - 2.0, ((i + 2 * j) % 3) as f64 - 1.0)
        })
    }

    #[test]
    fn newton_agrees_with_svd() {
        let x = sample(5);
        let a = newton(&x).unwrap();
        let b = svd_polar(&x).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-10);
        assert!(a.unitarity_residual() < 1e-12);
    }

    #[test]
    fn singular_input_falls_back() {
        let x = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let u = nearest_unitary(&x).unwrap();
        assert!(u.unitarity_residual() < 1e-12);
    }

    #[test]
    fn unitary_is_fixed() {
        let f = super::super::dft(4).unwrap();
        assert!(nearest_unitary(&f).unwrap().max_abs_diff(&f) < 1e-13);
    }
}
