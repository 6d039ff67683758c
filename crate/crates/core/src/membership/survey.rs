use super::certify::{certify, Verdict};
use super::projection::SolverConfig;
use crate::digraph::{families, find_isomorphism, hamiltonian_cycle, Digraph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const SURVEY_MAX_N: usize = 8;

/// Connected loop-free graphs on `n` vertices, one per isomorphism class.
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each class on `n` vertices extends some class on `n - 1` by one vertex.
pub fn connected_graphs(n: usize) -> Result<Vec<Digraph>> {
    if n == 0 || n > SURVEY_MAX_N {
        return Err(Error::input(format!("graph order must be in 1..={SURVEY_MAX_N}")));
    }
    let mut level = vec![Digraph::empty(1)?];
    for m in 2..=n {
        let mut buckets: HashMap<Vec<u64>, Vec<Digraph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (m - 1)) {
                let mut h = Digraph::empty(m)?;
                for (a, b) in g.edges() {
                    h.set_arc(a, b, true);
                    h.set_arc(b, a, true);
                }
                for v in (0..m - 1).filter(|v| mask >> v & 1 == 1) {
                    h.set_arc(m - 1, v, true);
                    h.set_arc(v, m - 1, true);
                }
                let bucket = buckets.entry(invariant(&h)).or_default();
                if bucket.iter().all(|k| find_isomorphism(k, &h).is_none()) {
                    bucket.push(h.clone());
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Sorted per-vertex (degree, sorted neighbour degrees) profile.
fn invariant(g: &Digraph) -> Vec<u64> {
    let deg: Vec<u64> = (0..g.n()).map(|v| g.out_degree(v) as u64).collect();
    let mut profile: Vec<u64> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<u64> = g.out_neighbors(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            nd.iter().fold(deg[v], |h, &x| h.wrapping_mul(31).wrapping_add(x))
        })
        .collect();
    profile.sort_unstable();
    profile
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyEntry {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub verdict: Verdict,
    pub hamiltonian: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyCounts {
    pub n: usize,
    pub graphs: usize,
    pub excluded: usize,
    pub certified: usize,
    pub undecided: usize,
    pub certified_hamiltonian: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Survey {
    pub max_n: usize,
    pub counts: Vec<SurveyCounts>,
    /// Every graph not excluded by a necessary condition.
    pub survivors: Vec<SurveyEntry>,
    /// Certified but not hamiltonian.
    pub counterexample_candidates: Vec<SurveyEntry>,
    /// Whether the six-vertex claw graph appeared, and its row if so.
    pub claw_graph: Option<SurveyEntry>,
}

/// Checks every connected loop-free graph on `2..=max_n` vertices: does
/// certification in the class coincide with hamiltonicity? K2 counts as
/// hamiltonian through the 2-cycle on its edge.
pub fn conjecture_survey(max_n: usize, cfg: &SolverConfig) -> Result<Survey> {
    if !(2..=SURVEY_MAX_N).contains(&max_n) {
        return Err(Error::input(format!("max_n must be in 2..={SURVEY_MAX_N}")));
    }
    let claw = families::claw_counterexample();
    let mut counts = Vec::new();
    let mut survivors = Vec::new();
    let mut candidates = Vec::new();
    let mut claw_graph = None;
    for n in 2..=max_n {
        let mut row = SurveyCounts {
            n,
            ..SurveyCounts::default()
        };
        for g in connected_graphs(n)? {
            row.graphs += 1;
            let verdict = certify(&g, cfg)?.verdict;
            let hamiltonian = hamiltonian_cycle(&g, SURVEY_MAX_N)?.is_some();
            let entry = SurveyEntry {
                n,
                edges: g.edges().collect(),
                verdict,
                hamiltonian,
            };
            match verdict {
                Verdict::Excluded => row.excluded += 1,
                Verdict::Undecided => row.undecided += 1,
                Verdict::Certified => {
                    row.certified += 1;
                    if hamiltonian {
                        row.certified_hamiltonian += 1;
                    } else {
                        candidates.push(entry.clone());
                    }
                }
            }
            if n == 6 && find_isomorphism(&claw, &g).is_some() {
                claw_graph = Some(entry.clone());
            }
            if verdict != Verdict::Excluded {
                survivors.push(entry);
            }
        }
        counts.push(row);
    }
    Ok(Survey {
        max_n,
        counts,
        survivors,
        counterexample_candidates: candidates,
        claw_graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper-triangle bitmask enumeration with brute-force canonical forms.
    fn brute_force_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut perms = vec![(0..n).collect::<Vec<usize>>()];
        for k in 1..n {
            perms = perms
                .into_iter()
                .flat_map(|p| (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.retain(|&x| x != k);
                    q.insert(pos, k);
                    q
                }))
                .collect();
        }
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Digraph::from_edges(n, edges.iter().copied()).unwrap();
            if n > 1 && crate::digraph::structure::weak_components(&g).len() != 1 {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            seen.insert(canon);
        }
        seen.len()
    }

    #[test]
    fn class_counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(connected_graphs(n).unwrap().len(), brute_force_classes(n), "n = {n}");
        }
        assert_eq!(connected_graphs(6).unwrap().len(), 112);
    }

    #[test]
    fn small_survey() {
        let s = conjecture_survey(4, &SolverConfig::default()).unwrap();
        assert!(s.counterexample_candidates.is_empty());
        assert_eq!(s.counts[0].certified, 1);
        assert_eq!(s.counts[0].certified_hamiltonian, 1);
        assert!(conjecture_survey(9, &SolverConfig::default()).is_err());
        assert!(conjecture_survey(1, &SolverConfig::default()).is_err());
    }
}
