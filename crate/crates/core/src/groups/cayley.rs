use super::FiniteGroup;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::PermutationMatrix;
use serde::{Deserialize, Serialize};

/// A connection set: distinct elements, the identity only if loops are wanted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSet {
    elements: Vec<usize>,
}

impl GenSet {
    pub fn new(group: &FiniteGroup, elements: Vec<usize>, allow_identity: bool) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::input("connection set must be nonempty"));
        }
        for (k, &g) in elements.iter().enumerate() {
            group.check_element(g)?;
            if elements[..k].contains(&g) {
                return Err(Error::input(format!(
                    "element {} is listed twice",
                    group.element_name(g)
                )));
            }
            if g == group.identity() && !allow_identity {
                return Err(Error::input(
                    "the identity gives loops; allow it explicitly to include it",
                ));
            }
        }
        Ok(GenSet { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.contains(&g)
    }
}

/// Arcs `(g, s·g)` for every element `g` and connection element `s`.
pub fn cayley_digraph(group: &FiniteGroup, gens: &GenSet) -> Digraph {
    Digraph::from_arcs(
        group.order(),
        (0..group.order()).flat_map(|g| gens.elements().iter().map(move |&s| (g, group.mul(s, g)))),
    )
    .expect("group elements index the vertices")
}

/// The permutation `g ↦ s·g`; summing these over a connection set gives the
/// Cayley digraph's adjacency matrix.
pub fn regular_representation(group: &FiniteGroup, s: usize) -> Result<PermutationMatrix> {
    group.check_element(s)?;
    PermutationMatrix::new((0..group.order()).map(|g| group.mul(s, g)).collect())
}

/// `T = s1·⟨s1⁻¹·s2⟩`. It contains both elements and generates the group.
/// Left-multiplying `T` by `s1⁻¹` gives a cyclic subgroup, so `X(G;T)` is a
/// line digraph.
pub fn coset_generating_set(group: &FiniteGroup, s1: usize, s2: usize) -> Result<GenSet> {
    group.check_element(s1)?;
    group.check_element(s2)?;
    let generated = group.generated_subgroup(&[s1, s2]).len();
    if generated != group.order() {
        return Err(Error::NotGenerating {
            subgroup: generated,
            order: group.order(),
        });
    }
    let c = group.mul(group.inverse(s1), s2);
    let mut elements = Vec::new();
    let mut power = group.identity();
    loop {
        elements.push(group.mul(s1, power));
        power = group.mul(power, c);
        if power == group.identity() {
            break;
        }
    }
    let allow_identity = elements.contains(&group.identity());
    GenSet::new(group, elements, allow_identity)
}

/// Evidence that `X(G;S)` is a line digraph: `x·S` is a subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineWitness {
    pub x: usize,
    pub subgroup: Vec<usize>,
}

/// Finds `x ∈ S⁻¹` with `x·S` a subgroup, trying the inverses in the order
/// of the connection set.
pub fn mansilla_serra_check(group: &FiniteGroup, gens: &GenSet) -> Option<LineWitness> {
    gens.elements().iter().find_map(|&s| {
        let x = group.inverse(s);
        let mut coset: Vec<usize> = gens.elements().iter().map(|&t| group.mul(x, t)).collect();
        coset.sort_unstable();
        group
            .is_subgroup(&coset)
            .then_some(LineWitness { x, subgroup: coset })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families;

    #[test]
    fn cayley_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let all = GenSet::new(&z4, vec![1, 2, 3], false).unwrap();
        assert_eq!(cayley_digraph(&z4, &all), families::complete(4));
        for k in 1..=5 {
            let g = FiniteGroup::elementary_abelian_2(k).unwrap();
            let basis = GenSet::new(&g, (0..k).map(|i| 1 << i).collect(), false).unwrap();
            assert_eq!(cayley_digraph(&g, &basis), families::hypercube(k));
        }
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let id = GenSet::new(&s3, vec![s3.identity()], true).unwrap();
        assert_eq!(cayley_digraph(&s3, &id), families::identity(6));
        assert!(GenSet::new(&s3, vec![s3.identity()], false).is_err());
        assert!(GenSet::new(&s3, vec![1, 1], false).is_err());
    }

    #[test]
    fn representation_sums_to_pattern() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let gens = GenSet::new(&d4, vec![1, 4, 6], false).unwrap();
        let d = cayley_digraph(&d4, &gens);
        let mut sum = Digraph::empty(8).unwrap();
        for &s in gens.elements() {
            for (i, j) in regular_representation(&d4, s).unwrap().to_digraph().arcs() {
                assert!(!sum.has_arc(i, j));
                sum.set_arc(i, j, true);
            }
        }
        assert_eq!(sum, d);
        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert_eq!(regular_representation(&z5, 0).unwrap(), PermutationMatrix::identity(5));
        assert_eq!(regular_representation(&z5, 1).unwrap().as_slice(), &[1, 2, 3, 4, 0]);
    }

    #[test]
    fn coset_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let (a, b) = (s3.parse_element("(1 2)").unwrap(), s3.parse_element("(1 2 3)").unwrap());
        let t = coset_generating_set(&s3, a, b).unwrap();
        let names: Vec<String> = t.elements().iter().map(|&g| s3.element_name(g)).collect();
        assert_eq!(names, vec!["(1 2)", "(1 2 3)"]);

        let z5 = FiniteGroup::cyclic(5).unwrap();
        let mut t = coset_generating_set(&z5, 1, 2).unwrap().elements().to_vec();
        t.sort();
        assert_eq!(t, vec![0, 1, 2, 3, 4]);

        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(
            coset_generating_set(&z8, 2, 6),
            Err(Error::NotGenerating { subgroup: 4, order: 8 })
        );
    }

    #[test]
    fn line_witnesses() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let w = mansilla_serra_check(&z8, &GenSet::new(&z8, vec![1, 5], false).unwrap()).unwrap();
        assert_eq!(w, LineWitness { x: 7, subgroup: vec![0, 4] });
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(mansilla_serra_check(&z4, &GenSet::new(&z4, vec![1, 2, 3], false).unwrap()).is_none());
        for n in 3..=7 {
            let d = FiniteGroup::dihedral(n).unwrap();
            let gens = GenSet::new(&d, vec![1, n], false).unwrap();
            assert!(mansilla_serra_check(&d, &gens).is_some());
        }
    }
}
