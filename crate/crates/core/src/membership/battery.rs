use crate::digraph::{
    bipartite_perfect_matching, bipartition, connectivity_numbers, hall_violations,
    perfect_two_matching, quadrangularity_violations, structure_report, term_rank, Digraph,
    StructureReport, TermRank, DEFAULT_HALL_LIMIT,
};
use crate::error::Error;
use crate::report::{Condition, Status, Witness};
use serde::{Deserialize, Serialize};

/// Above this many vertices the battery skips the all-pairs max-flow note.
const CONNECTIVITY_NOTE_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BatteryVerdict {
    /// Some necessary condition fails.
    Excluded,
    /// Every applicable necessary condition holds.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
    pub verdict: BatteryVerdict,
}

impl ConditionReport {
    pub fn from_conditions(conditions: Vec<Condition>) -> Self {
        let verdict = if conditions.iter().any(Condition::failed) {
            BatteryVerdict::Excluded
        } else {
            BatteryVerdict::Undecided
        };
        ConditionReport {
            conditions,
            verdict,
        }
    }

    pub fn first_failure(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.failed())
    }

    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.get(name).map(|c| c.status)
    }
}

pub const BATTERY_NAMES: [&str; 10] = [
    "quadrangular",
    "no-directed-bridges",
    "bridges-in-k2-components",
    "cut-vertices-in-k2-components",
    "full-term-rank",
    "cycle-factor",
    "perfect-2-matching",
    "hall-condition",
    "2-connected",
    "bipartite-perfect-matching",
];

/// Whether the weak component is exactly K2 (no loops) or K2+ (two loops).
fn is_k2_component(d: &Digraph, comp: &[usize]) -> bool {
    match *comp {
        [a, b] => d.has_arc(a, b) && d.has_arc(b, a) && d.has_arc(a, a) == d.has_arc(b, b),
        _ => false,
    }
}

/// Rows reachable from an unmatched row by alternating paths. Their joint
/// out-neighbourhood is one smaller than the set.
fn deficient_rows(d: &Digraph, tr: &TermRank) -> Vec<usize> {
    let n = d.n();
    let mut row_of_col = vec![usize::MAX; n];
    let mut matched = vec![false; n];
    for &(r, c) in &tr.matching {
        row_of_col[c] = r;
        matched[r] = true;
    }
    let Some(start) = (0..n).find(|&r| !matched[r]) else {
        return Vec::new();
    };
    let mut in_set = vec![false; n];
    let mut seen_col = vec![false; n];
    in_set[start] = true;
    let mut stack = vec![start];
    while let Some(r) = stack.pop() {
        for c in d.out_neighbors(r) {
            if !std::mem::replace(&mut seen_col[c], true) {
                let r2 = row_of_col[c];
                debug_assert!(r2 != usize::MAX, "maximum matchings have no augmenting path");
                if r2 != usize::MAX && !std::mem::replace(&mut in_set[r2], true) {
                    stack.push(r2);
                }
            }
        }
    }
    (0..n).filter(|&r| in_set[r]).collect()
}

/// Evaluates every necessary condition in a fixed order.
pub fn necessary_battery(d: &Digraph) -> ConditionReport {
    let sr = structure_report(d);
    let mut out = Vec::with_capacity(10);

    let quad = quadrangularity_violations(d);
    out.push(Condition::check(
        BATTERY_NAMES[0],
        quad.is_empty(),
        quad.iter()
            .map(|q| Witness::Pair {
                a: q.pair.0,
                b: q.pair.1,
                side: q.side,
            })
            .collect(),
    ));

    out.push(Condition::check(
        BATTERY_NAMES[1],
        sr.directed_bridges.is_empty(),
        sr.directed_bridges
            .iter()
            .map(|&(from, to)| Witness::Arc { from, to })
            .collect(),
    ));

    let stray_bridges: Vec<Witness> = sr
        .bridges
        .iter()
        .filter(|&&(a, _)| !is_k2_component(d, &sr.weak_components[sr.component_of(a)]))
        .map(|&(a, b)| Witness::Edge { a, b })
        .collect();
    out.push(Condition::check(BATTERY_NAMES[2], stray_bridges.is_empty(), stray_bridges));

    let stray_cuts: Vec<Witness> = sr
        .cut_vertices
        .members()
        .iter()
        .filter(|&&v| !is_k2_component(d, &sr.weak_components[sr.component_of(v)]))
        .map(|&v| Witness::Vertex { v })
        .collect();
    out.push(Condition::check(BATTERY_NAMES[3], stray_cuts.is_empty(), stray_cuts));

    let tr = term_rank(d);
    let full = tr.rank == d.n();
    let deficiency = || {
        vec![
            Witness::Subset {
                members: deficient_rows(d, &tr),
            },
            Witness::Note {
                text: format!("term rank {} of {}", tr.rank, d.n()),
            },
        ]
    };
    out.push(Condition::check(BATTERY_NAMES[4], full, if full { vec![] } else { deficiency() }));
    out.push(Condition::check(BATTERY_NAMES[5], full, if full { vec![] } else { deficiency() }));

    if sr.is_symmetric {
        symmetric_conditions(d, &sr, full, &deficiency, &mut out);
    } else {
        for name in &BATTERY_NAMES[6..] {
            out.push(Condition::not_applicable(name, "digraph is not symmetric"));
        }
    }
    ConditionReport::from_conditions(out)
}

fn symmetric_conditions(
    d: &Digraph,
    sr: &StructureReport,
    full: bool,
    deficiency: &dyn Fn() -> Vec<Witness>,
    out: &mut Vec<Condition>,
) {
    let loop_free = !d.has_loops();
    out.push(if loop_free {
        let found = perfect_two_matching(d).expect("symmetric loop-free input").is_some();
        debug_assert_eq!(found, full);
        Condition::check(BATTERY_NAMES[6], found, if found { vec![] } else { deficiency() })
    } else {
        Condition::not_applicable(BATTERY_NAMES[6], "graph has loops")
    });

    out.push(match hall_violations(d, DEFAULT_HALL_LIMIT) {
        Ok(v) => Condition::check(
            BATTERY_NAMES[7],
            v.is_empty(),
            v.into_iter()
                .map(|s| Witness::Subset {
                    members: s.members().to_vec(),
                })
                .collect(),
        ),
        Err(Error::Capacity { got, limit, .. }) => Condition::not_applicable(
            BATTERY_NAMES[7],
            &format!("{got} vertices is above the exhaustive limit {limit}"),
        ),
        Err(e) => unreachable!("symmetric input: {e}"),
    });

    out.push(two_connected(d, sr));

    out.push(match (loop_free, bipartition(d)) {
        (true, Some((left, right))) => {
            let found = bipartite_perfect_matching(d)
                .expect("bipartite loop-free input")
                .is_some();
            let mut w = if found { vec![] } else { deficiency() };
            if !found && left.len() != right.len() {
                w.push(Witness::Note {
                    text: format!("sides have {} and {} vertices", left.len(), right.len()),
                });
            }
            Condition::check(BATTERY_NAMES[9], found, w)
        }
        _ => Condition::not_applicable(BATTERY_NAMES[9], "graph is not bipartite"),
    });
}

/// Each weak component on three or more vertices must have no cut-vertex
/// and no bridge.
fn two_connected(d: &Digraph, sr: &StructureReport) -> Condition {
    let big: Vec<usize> = (0..sr.weak_components.len())
        .filter(|&k| sr.weak_components[k].len() >= 3)
        .collect();
    if big.is_empty() {
        return Condition::not_applicable(BATTERY_NAMES[8], "no component has 3 or more vertices");
    }
    let in_big = |v: usize| big.contains(&sr.component_of(v));
    let mut witnesses: Vec<Witness> = sr
        .cut_vertices
        .members()
        .iter()
        .filter(|&&v| in_big(v))
        .map(|&v| Witness::Vertex { v })
        .collect();
    witnesses.extend(
        sr.bridges
            .iter()
            .filter(|&&(a, _)| in_big(a))
            .map(|&(a, b)| Witness::Edge { a, b }),
    );
    let mut c = Condition::check(BATTERY_NAMES[8], witnesses.is_empty(), witnesses);
    if sr.is_weakly_connected() && d.n() >= 3 && d.n() <= CONNECTIVITY_NOTE_LIMIT {
        if let Ok(k) = connectivity_numbers(d, None) {
            c = c.with_note(format!(
                "vertex connectivity {}, edge connectivity {}",
                k.vertex, k.edge
            ));
        }
    }
    c
}
