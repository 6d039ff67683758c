use super::battery::{necessary_battery, BatteryVerdict, ConditionReport};
use super::projection::{alternating_projection, SolverConfig};
use crate::digraph::{families, find_isomorphism, Digraph};
use crate::error::{Error, Result};
use crate::linedigraph::square_block_cover;
use crate::matrix::{dft, hypercube_weighing, ComplexMatrix, MAX_WEIGHING_ORDER};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_1_SQRT_2;

/// Registered constructions are matched up to isomorphism only this far.
const ISOMORPHISM_SEARCH_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Explicit,
    LineDigraphDft,
    Weighing,
    Numerical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Which registered construction, for `explicit` and `weighing`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    pub matrix: ComplexMatrix,
    pub residual: f64,
    pub support_match: bool,
    /// Smallest modulus over the required entries.
    pub min_modulus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Excluded,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certification {
    pub verdict: Verdict,
    pub battery: ConditionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// The first failing condition when excluded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Runs the necessary conditions, then the constructions in order: DFT
/// blocks for line digraphs with square covering blocks, the registered
/// weighing and explicit matrices, and finally alternating projections.
/// Every certificate is re-verified before it is returned.
pub fn certify(d: &Digraph, cfg: &SolverConfig) -> Result<Certification> {
    cfg.validate()?;
    let battery = necessary_battery(d);
    if battery.verdict == BatteryVerdict::Excluded {
        let reason = battery.first_failure().map(|c| c.name.clone());
        return Ok(Certification {
            verdict: Verdict::Excluded,
            battery,
            certificate: None,
            reason,
        });
    }
    let constructed = dft_blocks(d)
        .map(|m| (CertificateKind::LineDigraphDft, None, m))
        .or_else(|| registered(d).map(|(name, kind, m)| (kind, Some(name), m)));
    let certificate = match constructed {
        Some((kind, construction, matrix)) => {
            let cert = verify(d, kind, construction, matrix, cfg);
            if !cert.support_match || cert.residual > cfg.tol {
                return Err(Error::Internal(format!(
                    "{kind:?} construction failed verification: residual {:e}, support match {}",
                    cert.residual, cert.support_match
                )));
            }
            Some(cert)
        }
        None => match alternating_projection(d, cfg)? {
            Some(r) => {
                let cert = verify(d, CertificateKind::Numerical, None, r.matrix, cfg);
                if !cert.support_match || cert.residual > cfg.tol {
                    return Err(Error::Internal(
                        "numerical realization failed re-verification".into(),
                    ));
                }
                Some(cert)
            }
            None => None,
        },
    };
    Ok(Certification {
        verdict: if certificate.is_some() {
            Verdict::Certified
        } else {
            Verdict::Undecided
        },
        battery,
        certificate,
        reason: None,
    })
}

fn verify(
    d: &Digraph,
    kind: CertificateKind,
    construction: Option<String>,
    matrix: ComplexMatrix,
    cfg: &SolverConfig,
) -> Certificate {
    Certificate {
        kind,
        construction,
        residual: matrix.unitarity_residual(),
        support_match: matrix.support(cfg.min_magnitude * (1.0 - 1e-12)) == *d,
        min_modulus: matrix.min_modulus_on(d),
        matrix,
    }
}

/// A unitary supported by `d` when its blocks are square and cover every
/// row and column: each `k×k` block gets the `k`-point Fourier matrix.
pub fn dft_blocks(d: &Digraph) -> Option<ComplexMatrix> {
    let cover = square_block_cover(d)?;
    let mut m = ComplexMatrix::zeros(d.n());
    for b in &cover.blocks {
        let f = dft(b.rows.len()).expect("blocks are nonempty");
        for (a, &r) in b.rows.iter().enumerate() {
            for (c, &col) in b.cols.iter().enumerate() {
                m[(r, col)] = f[(a, c)];
            }
        }
    }
    Some(m)
}

/// The 3×3 unitary whose bipartite double realizes the six-vertex claw graph.
pub fn claw_graph_unitary() -> ComplexMatrix {
    let (a, h) = (FRAC_1_SQRT_2, 0.5);
    let v = ComplexMatrix::from_real_rows(&[[a, -a, 0.0], [h, h, a], [h, h, -a]])
        .expect("constant matrix is square");
    let adj = v.adjoint();
    ComplexMatrix::from_fn(6, |i, j| match (i < 3, j < 3) {
        (true, false) => v[(i, j - 3)],
        (false, true) => adj[(i - 3, j)],
        _ => Complex64::new(0.0, 0.0),
    })
}

/// Rewrites a matrix supported by `reference` for a digraph isomorphic to it.
fn transport(m: &ComplexMatrix, iso: &[usize]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(m.n());
    for i in 0..m.n() {
        for j in 0..m.n() {
            out[(iso[i], iso[j])] = m[(i, j)];
        }
    }
    out
}

fn matches(reference: &Digraph, d: &Digraph) -> Option<Vec<usize>> {
    if reference == d {
        return Some((0..d.n()).collect());
    }
    if d.n() > ISOMORPHISM_SEARCH_LIMIT {
        return None;
    }
    find_isomorphism(reference, d)
}

fn registered(d: &Digraph) -> Option<(String, CertificateKind, ComplexMatrix)> {
    let n = d.n();
    if n.is_power_of_two() && (4..=MAX_WEIGHING_ORDER).contains(&n) {
        let k = n.trailing_zeros();
        let loops = d.has_loops();
        let degree = k as usize + loops as usize;
        if d.regular_degree() == Some(degree) {
            let mut reference = families::hypercube(k as usize);
            if loops {
                reference = reference.with_loops();
            }
            if let Some(iso) = matches(&reference, d) {
                let w = hypercube_weighing(k, loops).expect("k is in range");
                let m = w.to_complex().scale(1.0 / (degree as f64).sqrt());
                let name = format!("W({degree},{n}) on Q{k}{}", if loops { " with loops" } else { "" });
                return Some((name, CertificateKind::Weighing, transport(&m, &iso)));
            }
        }
    }
    if n == 6 {
        if let Some(iso) = matches(&families::claw_counterexample(), d) {
            return Some((
                "bipartite double of a 3x3 unitary".into(),
                CertificateKind::Explicit,
                transport(&claw_graph_unitary(), &iso),
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn z6_gets_dft_blocks() {
        let d = families::circulant(6, &[1, 4]);
        let c = certify(&d, &cfg()).unwrap();
        let cert = c.certificate.unwrap();
        assert_eq!(cert.kind, CertificateKind::LineDigraphDft);
        assert!(cert.residual < 1e-10);
        assert!(cert.support_match);
    }

    #[test]
    fn cube_gets_weighing() {
        for loops in [false, true] {
            let mut d = families::hypercube(3);
            if loops {
                d = d.with_loops();
            }
            let cert = certify(&d, &cfg()).unwrap().certificate.unwrap();
            assert_eq!(cert.kind, CertificateKind::Weighing);
            assert!(cert.residual < 1e-12);
        }
        let relabelled = families::hypercube(4)
            .relabel(&(0..16).map(|i| (i * 5 + 2) % 16).collect::<Vec<_>>())
            .unwrap();
        let cert = certify(&relabelled, &cfg()).unwrap().certificate.unwrap();
        assert_eq!(cert.kind, CertificateKind::Weighing);
        assert!(cert.support_match);
    }

    #[test]
    fn k2_variants() {
        let k2 = certify(&families::k2(), &cfg()).unwrap().certificate.unwrap();
        assert_eq!(k2.kind, CertificateKind::LineDigraphDft);
        assert_eq!(k2.matrix[(0, 1)], Complex64::new(1.0, 0.0));
        let k2p = certify(&families::k2_plus(), &cfg()).unwrap().certificate.unwrap();
        assert!(k2p.matrix.max_abs_diff(&dft(2).unwrap()) < 1e-15);
    }

    #[test]
    fn claw_graph_is_explicit() {
        let c = certify(&families::claw_counterexample(), &cfg()).unwrap();
        let cert = c.certificate.unwrap();
        assert_eq!(cert.kind, CertificateKind::Explicit);
        assert!(cert.residual < 1e-12);
    }

    #[test]
    fn path_is_excluded_by_quadrangularity() {
        let c = certify(&families::path(3), &cfg()).unwrap();
        assert_eq!(c.verdict, Verdict::Excluded);
        assert_eq!(c.reason.as_deref(), Some("quadrangular"));
    }

    #[test]
    fn complete_four_is_numerical() {
        let c = certify(&families::complete(4), &SolverConfig { seed: 7, ..cfg() }).unwrap();
        let cert = c.certificate.unwrap();
        assert_eq!(cert.kind, CertificateKind::Numerical);
        assert!(cert.residual < 1e-8 && cert.support_match);
    }
}
