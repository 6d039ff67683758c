use crate::digraph::{check_permutation, Digraph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The permutation matrix with a one at `(i, perm[i])` for every row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PermutationMatrix {
    perm: Vec<usize>,
}

impl PermutationMatrix {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm, perm.len())?;
        if perm.is_empty() {
            return Err(Error::input("permutation must be nonempty"));
        }
        Ok(PermutationMatrix { perm })
    }

    pub fn identity(n: usize) -> Self {
        PermutationMatrix {
            perm: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j] = i;
        }
        PermutationMatrix { perm: inv }
    }

    pub fn has_one(&self, i: usize, j: usize) -> bool {
        self.perm[i] == j
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_arcs(self.n(), self.perm.iter().copied().enumerate())
            .expect("permutation entries are in range")
    }
}

impl TryFrom<Vec<usize>> for PermutationMatrix {
    type Error = Error;
    fn try_from(perm: Vec<usize>) -> Result<Self> {
        PermutationMatrix::new(perm)
    }
}

impl From<PermutationMatrix> for Vec<usize> {
    fn from(p: PermutationMatrix) -> Vec<usize> {
        p.perm
    }
}

/// `P_{ij} = P_{hk} = Q_{ik} = 1` forces `Q_{hj} = 1`. With `j = p(i)`,
/// `k = p(h)` and `q(i) = k`, row `i` is fixed by `h`, leaving one check per `h`.
fn implies(p: &PermutationMatrix, q: &PermutationMatrix) -> bool {
    let q_inv = q.inverse();
    (0..p.n()).all(|h| {
        let i = q_inv.image(p.image(h));
        q.image(h) == p.image(i)
    })
}

/// Whether `P` and `Q` are complementary, checked in both directions.
pub fn complementary(p: &PermutationMatrix, q: &PermutationMatrix) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::input(format!(
            "permutation sizes differ: {} and {}",
            p.n(),
            q.n()
        )));
    }
    Ok(implies(p, q) && implies(q, p))
}

/// The first non-complementary pair `(a, b)` with `a < b`, if any.
pub fn pairwise_complementary(perms: &[PermutationMatrix]) -> Result<Option<(usize, usize)>> {
    for a in 0..perms.len() {
        for b in a + 1..perms.len() {
            if !complementary(&perms[a], &perms[b])? {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}
