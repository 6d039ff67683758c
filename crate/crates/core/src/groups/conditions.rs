//! Necessary conditions for a Cayley digraph to support a convex hull of
//! permutation matrices lying inside the uni-stochastic matrices.

use super::{cayley_digraph, regular_representation, FiniteGroup, GenSet, GroupSource};
use crate::matrix::pairwise_complementary;
use crate::report::{Condition, Witness};

fn names(group: &FiniteGroup, elements: &[usize]) -> Witness {
    Witness::Elements {
        members: elements.iter().map(|&g| group.element_name(g)).collect(),
    }
}

fn first_bad_pair(gens: &[usize], bad: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    gens.iter()
        .enumerate()
        .flat_map(|(k, &s)| gens[k + 1..].iter().map(move |&t| (s, t)))
        .find(|&(s, t)| bad(s, t))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Prime-power factors of `m`.
fn prime_powers(mut m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut q = 1;
            while m.is_multiple_of(p) {
                m /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, m));
    }
    out
}

/// Evaluates every group-level condition; statuses never depend on how the
/// elements happen to be indexed.
pub fn unistochastic_group_conditions(group: &FiniteGroup, gens: &GenSet) -> Vec<Condition> {
    let s = gens.elements();
    let mut out = Vec::new();

    let quotient = |a: usize, b: usize| group.mul(a, group.inverse(b));
    out.push(match first_bad_pair(s, |a, b| quotient(a, b) != quotient(b, a)) {
        None => Condition::pass("quotient-symmetry"),
        Some((a, b)) => Condition::fail("quotient-symmetry", vec![names(group, &[a, b])]),
    });

    out.push(Condition::check(
        "even-order",
        group.order().is_multiple_of(2),
        vec![Witness::Note {
            text: format!("group order is {}", group.order()),
        }],
    ));

    out.push(if group.is_abelian() {
        let square = |a: usize| group.mul(a, a);
        match first_bad_pair(s, |a, b| square(a) != square(b)) {
            None => Condition::pass("abelian-equal-doubles"),
            Some((a, b)) => Condition::fail("abelian-equal-doubles", vec![names(group, &[a, b])]),
        }
    } else {
        Condition::not_applicable("abelian-equal-doubles", "group is not abelian")
    });

    cyclic_conditions(group, gens, &mut out);
    abelian_component_conditions(group, gens, &mut out);

    let reps: Vec<_> = s
        .iter()
        .map(|&g| regular_representation(group, g).expect("connection elements are valid"))
        .collect();
    out.push(
        match pairwise_complementary(&reps).expect("representations share one size") {
            None => Condition::pass("regular-images-complementary"),
            Some((a, b)) => {
                Condition::fail("regular-images-complementary", vec![names(group, &[s[a], s[b]])])
            }
        },
    );
    out
}

const CYCLIC_NAMES: [&str; 5] = [
    "cyclic-half-shift",
    "cyclic-generation",
    "cyclic-generated-hamiltonian",
    "cyclic-graph-iff-quarter",
    "cyclic-graph-not-hamiltonian",
];

fn cyclic_conditions(group: &FiniteGroup, gens: &GenSet, out: &mut Vec<Condition>) {
    let n = match group.source() {
        GroupSource::Cyclic { n } => *n,
        _ => {
            out.extend(CYCLIC_NAMES.iter().map(|c| Condition::not_applicable(c, "group is not cyclic")));
            return;
        }
    };
    let s = gens.elements();
    let half_shift = s.len() == 2 && n % 2 == 0 && (s[1] + n - s[0]) % n == n / 2;
    out.push(match s.len() {
        1 => Condition::not_applicable(CYCLIC_NAMES[0], "a single element has no partner"),
        2 => Condition::check(
            CYCLIC_NAMES[0],
            half_shift,
            vec![names(group, s), Witness::Note { text: format!("difference is not {n}/2") }],
        ),
        k => Condition::fail(
            CYCLIC_NAMES[0],
            vec![Witness::Note {
                text: format!("{k} elements; pairwise differences in {{0, n/2}} allow at most 2"),
            }],
        ),
    });
    if !half_shift {
        out.extend(
            CYCLIC_NAMES[1..]
                .iter()
                .map(|c| Condition::not_applicable(c, "connection set is not {s, s+n/2}")),
        );
        return;
    }

    let generated = group.generated_subgroup(s).len();
    let generating = generated == n;
    let parity_rule = s[0] % 2 == 1 || (n / 2) % 2 == 1;
    let mut gen = Condition::check(
        CYCLIC_NAMES[1],
        generating,
        vec![Witness::Note {
            text: format!("generated subgroup has order {generated}"),
        }],
    );
    if parity_rule != generating {
        gen = gen.with_note(format!(
            "the parity rule predicts {parity_rule}; gcd(s, n/2) = {} decides",
            gcd(s[0], n / 2)
        ));
    }
    out.push(gen);

    out.push(if generating {
        let full = *s
            .iter()
            .find(|&&g| gcd(g, n) == 1)
            .expect("a generating half-shift pair contains a unit");
        Condition::pass(CYCLIC_NAMES[2]).with_note(format!(
            "cycle e, s, 2s, ..., (n-1)s with s = {}",
            group.element_name(full)
        ))
    } else {
        Condition::not_applicable(CYCLIC_NAMES[2], "connection set does not generate")
    });

    let is_graph = cayley_digraph(group, gens).is_symmetric();
    let quarter = n % 4 == 0 && {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted == [n / 4, 3 * n / 4]
    };
    out.push(Condition::check(
        CYCLIC_NAMES[3],
        is_graph == quarter,
        vec![Witness::Note {
            text: format!("symmetric: {is_graph}, s = n/4: {quarter}"),
        }],
    ));

    out.push(if is_graph && generating {
        Condition::not_applicable(
            CYCLIC_NAMES[4],
            "only n = 4 meets the hypothesis; X(Z4;{1,3}) is the hamiltonian 4-cycle",
        )
    } else {
        Condition::not_applicable(CYCLIC_NAMES[4], "not a generating graph")
    });
}

fn abelian_component_conditions(group: &FiniteGroup, gens: &GenSet, out: &mut Vec<Condition>) {
    let moduli = match group.source() {
        GroupSource::Cyclic { n } => vec![*n],
        GroupSource::Product { moduli } => moduli.clone(),
        _ => {
            for c in ["odd-components-equal", "odd-order-single-generator"] {
                out.push(Condition::not_applicable(c, "no cyclic decomposition available"));
            }
            return;
        }
    };
    let s = gens.elements();
    let coords: Vec<Vec<usize>> = s.iter().map(|&g| group.coordinates(g).unwrap()).collect();
    let mut mismatch = None;
    for (f, &m) in moduli.iter().enumerate() {
        for (p, q) in prime_powers(m) {
            if p == 2 {
                continue;
            }
            if let Some(k) = (1..s.len()).find(|&k| coords[k][f] % q != coords[0][f] % q) {
                mismatch.get_or_insert((s[0], s[k], q));
            }
        }
    }
    out.push(match mismatch {
        None => Condition::pass("odd-components-equal"),
        Some((a, b, q)) => Condition::fail(
            "odd-components-equal",
            vec![
                names(group, &[a, b]),
                Witness::Note {
                    text: format!("coordinates differ in the Z{q} component"),
                },
            ],
        ),
    });
    out.push(if group.order() % 2 == 1 {
        Condition::check(
            "odd-order-single-generator",
            s.len() == 1,
            vec![Witness::Note {
                text: format!("{} elements", s.len()),
            }],
        )
    } else {
        Condition::not_applicable("odd-order-single-generator", "an even component is present")
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn run(group: &FiniteGroup, gens: &str) -> Vec<Condition> {
        let g = GenSet::new(group, group.parse_elements(gens).unwrap(), false).unwrap();
        unistochastic_group_conditions(group, &g)
    }

    fn status(conds: &[Condition], name: &str) -> Status {
        conds.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn z8_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let good = run(&z8, "1,5");
        assert!(good.iter().all(|c| !c.failed()), "{good:?}");
        assert_eq!(status(&good, "cyclic-generation"), Status::Pass);
        assert_eq!(status(&good, "cyclic-generated-hamiltonian"), Status::Pass);

        let even = run(&z8, "2,6");
        assert_eq!(status(&even, "cyclic-half-shift"), Status::Pass);
        assert_eq!(status(&even, "cyclic-generation"), Status::Fail);

        let bad = run(&z8, "1,2");
        assert_eq!(status(&bad, "abelian-equal-doubles"), Status::Fail);
        assert_eq!(status(&bad, "quotient-symmetry"), Status::Fail);
        assert_eq!(status(&bad, "regular-images-complementary"), Status::Fail);
    }

    #[test]
    fn parity_rule_disagreement_is_noted() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let c = run(&z12, "3,9");
        let gen = c.iter().find(|c| c.name == "cyclic-generation").unwrap();
        assert_eq!(gen.status, Status::Fail);
        assert_eq!(gen.witnesses.len(), 2);
    }

    #[test]
    fn graph_case() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let c = run(&z4, "1,3");
        assert_eq!(status(&c, "cyclic-graph-iff-quarter"), Status::Pass);
        assert_eq!(status(&c, "cyclic-graph-not-hamiltonian"), Status::NotApplicable);
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let c = run(&z8, "2,6");
        assert_eq!(status(&c, "cyclic-graph-iff-quarter"), Status::Pass);
        assert!(cayley_digraph(&z8, &GenSet::new(&z8, vec![2, 6], false).unwrap()).is_symmetric());
    }

    #[test]
    fn abelian_components() {
        let z3 = FiniteGroup::product(&[2, 3]).unwrap();
        let c = run(&z3, "(1,0),(1,1)");
        assert_eq!(status(&c, "odd-components-equal"), Status::Fail);
        let z9 = FiniteGroup::cyclic(9).unwrap();
        let c = run(&z9, "1,2");
        assert_eq!(status(&c, "even-order"), Status::Fail);
        assert_eq!(status(&c, "odd-order-single-generator"), Status::Fail);
        assert_eq!(status(&run(&z9, "1"), "odd-order-single-generator"), Status::Pass);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = run(&s3, "(1 2),(1 2 3)");
        assert_eq!(status(&c, "abelian-equal-doubles"), Status::NotApplicable);
        assert_eq!(status(&c, "cyclic-half-shift"), Status::NotApplicable);
    }

    #[test]
    fn complementarity_matches_quotient_symmetry() {
        for spec in ["Z:8", "Z:6", "D:4", "S:3", "prod:Z:2,Z:4"] {
            let g: FiniteGroup = spec.parse::<super::super::GroupSpec>().unwrap().build().unwrap();
            for a in 0..g.order() {
                for b in 0..a {
                    if a == g.identity() || b == g.identity() {
                        continue;
                    }
                    let gens = GenSet::new(&g, vec![a, b], false).unwrap();
                    let c = unistochastic_group_conditions(&g, &gens);
                    assert_eq!(
                        status(&c, "quotient-symmetry"),
                        status(&c, "regular-images-complementary"),
                        "{spec} {a} {b}"
                    );
                }
            }
        }
    }
}
