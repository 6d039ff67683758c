use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::{nearest_unitary, ComplexMatrix};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Numerical settings for certification and realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Unitarity residual pass threshold.
    pub tol: f64,
    /// Floor on the modulus of every required entry.
    pub min_magnitude: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-8,
            min_magnitude: 1e-6,
            max_iter: 10_000,
            restarts: 50,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::input("tol must be positive"));
        }
        if !(self.min_magnitude > 0.0 && self.min_magnitude.is_finite()) {
            return Err(Error::input("min_magnitude must be positive"));
        }
        if self.max_iter == 0 || self.restarts == 0 {
            return Err(Error::input("max_iter and restarts must be at least 1"));
        }
        Ok(())
    }
}

/// A successful run: the matrix and which restart produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub matrix: ComplexMatrix,
    pub restart: usize,
    pub iterations: usize,
}

/// Checked every this many iterations; a run that has not shrunk its
/// residual by `STALL_FACTOR` since the last check is abandoned.
const STALL_WINDOW: usize = 200;
const STALL_FACTOR: f64 = 0.9;

/// Searches for a unitary matrix supported exactly by `target` by
/// alternating the nearest-unitary projection with zeroing the entries
/// outside the pattern. Restart `r` is seeded with `seed ^ r`; restart 0
/// starts from the 0/1 pattern itself, so a permutation pattern returns its
/// permutation matrix. Restarts run in order and the first success wins.
pub fn alternating_projection(target: &Digraph, cfg: &SolverConfig) -> Result<Option<Realization>> {
    cfg.validate()?;
    let n = target.n();
    let norm = (n as f64).sqrt();
    for restart in 0..cfg.restarts {
        let start = if restart == 0 {
            ComplexMatrix::from_fn(n, |i, j| {
                Complex64::new(if target.has_arc(i, j) { 1.0 } else { 0.0 }, 0.0)
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ restart as u64);
            ComplexMatrix::from_fn(n, |i, j| {
                let (re, im): (f64, f64) = (StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng));
                if target.has_arc(i, j) {
                    Complex64::new(re, im)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
        };
        if let Some((matrix, iterations)) = run(target, start, norm, cfg) {
            return Ok(Some(Realization {
                matrix,
                restart,
                iterations,
            }));
        }
    }
    Ok(None)
}

fn rescale(x: &ComplexMatrix, norm: f64) -> Option<ComplexMatrix> {
    let f = x.frobenius_norm();
    (f > 0.0 && f.is_finite()).then(|| x.scale(norm / f))
}

fn run(target: &Digraph, start: ComplexMatrix, norm: f64, cfg: &SolverConfig) -> Option<(ComplexMatrix, usize)> {
    let n = target.n();
    let mut x = rescale(&start, norm)?;
    let mut checkpoint = f64::INFINITY;
    for it in 1..=cfg.max_iter {
        let u = nearest_unitary(&x)?;
        let masked = ComplexMatrix::from_fn(n, |i, j| {
            if target.has_arc(i, j) {
                u[(i, j)]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        x = rescale(&masked, norm)?;
        let residual = x.unitarity_residual();
        if residual <= cfg.tol {
            // A unitary iterate is a fixed point of both projections, so a
            // small required entry can no longer recover.
            return (x.min_modulus_on(target) >= cfg.min_magnitude).then_some((x, it));
        }
        if it % STALL_WINDOW == 0 {
            if residual > STALL_FACTOR * checkpoint {
                return None;
            }
            checkpoint = residual;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families;

    #[test]
    fn complete_four_is_realized() {
        let cfg = SolverConfig::default();
        let r = alternating_projection(&families::complete(4), &cfg).unwrap().unwrap();
        assert!(r.matrix.unitarity_residual() <= 1e-8);
        assert_eq!(r.matrix.support(1e-6), families::complete(4));
    }

    #[test]
    fn permutation_is_a_fixed_point() {
        let p = families::directed_cycle(5);
        let r = alternating_projection(&p, &SolverConfig::default()).unwrap().unwrap();
        assert_eq!((r.restart, r.iterations), (0, 1));
        let want = ComplexMatrix::from_fn(5, |i, j| {
            Complex64::new(if p.has_arc(i, j) { 1.0 } else { 0.0 }, 0.0)
        });
        assert!(r.matrix.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn dipath_fails() {
        let cfg = SolverConfig {
            restarts: 5,
            max_iter: 2000,
            ..SolverConfig::default()
        };
        assert!(alternating_projection(&families::directed_path(3), &cfg).unwrap().is_none());
    }

    #[test]
    fn deterministic() {
        let cfg = SolverConfig {
            seed: 7,
            ..SolverConfig::default()
        };
        let d = families::complete(5);
        let a = alternating_projection(&d, &cfg).unwrap().unwrap();
        let b = alternating_projection(&d, &cfg).unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_config() {
        let cfg = SolverConfig {
            tol: 0.0,
            ..SolverConfig::default()
        };
        assert!(alternating_projection(&families::k2(), &cfg).is_err());
    }
}
