use crate::digraph::Digraph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Optimize mode searches distributions on at most this many vertices.
pub const SPERNER_OPTIMIZE_LIMIT: usize = 10;
const ASCENT_STEPS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpernerMode {
    Uniform,
    Optimize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpernerValue {
    pub mode: SpernerMode,
    /// Minimum edge entropy at `distribution`. In optimize mode this is the
    /// best value found by a heuristic search, a lower bound on the capacity.
    pub value: f64,
    pub distribution: Vec<f64>,
    pub heuristic: bool,
}

fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.log2() };
    term(p) + term(1.0 - p)
}

/// `(μa + μb)·h(μa / (μa + μb))`, zero when both weights vanish.
pub fn edge_entropy(mu_a: f64, mu_b: f64) -> f64 {
    let total = mu_a + mu_b;
    if total <= 0.0 {
        0.0
    } else {
        total * binary_entropy(mu_a / total)
    }
}

fn min_edge(edges: &[(usize, usize)], mu: &[f64]) -> (f64, usize) {
    edges
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| (edge_entropy(mu[a], mu[b]), k))
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("at least one edge")
}

/// Euclidean projection onto the probability simplex.
fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &x) in sorted.iter().enumerate() {
        cumulative += x;
        let t = (cumulative - 1.0) / (k + 1) as f64;
        if x - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// The minimum edge entropy over the edges of a graph, at the uniform
/// distribution or at the best distribution a projected subgradient ascent
/// finds. Loops are ignored.
pub fn sperner_capacity(d: &Digraph, mode: SpernerMode) -> Result<SpernerValue> {
    if !d.is_symmetric() {
        return Err(Error::input("Sperner capacity needs a symmetric digraph"));
    }
    let edges: Vec<(usize, usize)> = d.edges().collect();
    if edges.is_empty() {
        return Err(Error::input("Sperner capacity needs at least one edge"));
    }
    let n = d.n();
    let uniform = vec![1.0 / n as f64; n];
    let (value, _) = min_edge(&edges, &uniform);
    if mode == SpernerMode::Uniform {
        return Ok(SpernerValue {
            mode,
            value,
            distribution: uniform,
            heuristic: false,
        });
    }
    if n > SPERNER_OPTIMIZE_LIMIT {
        return Err(Error::Capacity {
            what: "vertex count for Sperner optimization",
            got: n,
            limit: SPERNER_OPTIMIZE_LIMIT,
        });
    }
    let (mut best, mut best_mu) = (value, uniform.clone());
    let mut mu = uniform;
    for step in 1..=ASCENT_STEPS {
        let (_, k) = min_edge(&edges, &mu);
        let (a, b) = edges[k];
        let total = mu[a] + mu[b];
        // ∂/∂μa of the edge entropy is log2((μa+μb)/μa).
        let grad = |x: f64| if x <= 0.0 { 10.0 } else { (total / x).log2() };
        let mut next = mu.clone();
        let eta = 0.05 / (step as f64).sqrt();
        next[a] += eta * grad(mu[a]);
        next[b] += eta * grad(mu[b]);
        mu = project_to_simplex(&next);
        let (v, _) = min_edge(&edges, &mu);
        if v > best {
            best = v;
            best_mu = mu.clone();
        }
    }
    Ok(SpernerValue {
        mode,
        value: best,
        distribution: best_mu,
        heuristic: true,
    })
}
