//! Finite groups given by a family or an explicit table, and the Cayley
//! digraphs built from them.

mod cayley;
mod conditions;
mod parse;

pub use cayley::{
    cayley_digraph, coset_generating_set, mansilla_serra_check, regular_representation, GenSet,
    LineWitness,
};
pub use conditions::unistochastic_group_conditions;
pub use parse::GroupSpec;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Largest group order accepted from any source.
pub const MAX_GROUP_ORDER: usize = 5040;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupSource {
    Cyclic { n: usize },
    /// Direct product of cyclic groups. Element indices are mixed-radix with
    /// the first factor least significant.
    Product { moduli: Vec<usize> },
    /// Symmetries of the `n`-gon, order `2n`. Index `a + n·b` is `r^a s^b`.
    Dihedral { n: usize },
    /// Permutations of `n` points in lexicographic order of one-line notation.
    Symmetric { n: usize },
    Table,
}

#[derive(Debug, Clone)]
enum Repr {
    Arithmetic,
    Perms(Vec<Vec<u8>>),
    Table(Vec<u16>),
}

/// A finite group on element indices `0..order`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    source: GroupSource,
    repr: Repr,
    inverses: Vec<usize>,
}

fn capacity(order: usize) -> Error {
    Error::Capacity {
        what: "group order",
        got: order,
        limit: MAX_GROUP_ORDER,
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::input("group order must be positive"));
    }
    if order > MAX_GROUP_ORDER {
        return Err(capacity(order));
    }
    Ok(())
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(FiniteGroup::finish(n, 0, GroupSource::Cyclic { n }, Repr::Arithmetic))
    }

    pub fn product(moduli: &[usize]) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::input("product factors must be positive cyclic orders"));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m).filter(|&o| o <= MAX_GROUP_ORDER))
            .ok_or_else(|| capacity(moduli.iter().fold(1usize, |a, &m| a.saturating_mul(m))))?;
        Ok(FiniteGroup::finish(
            order,
            0,
            GroupSource::Product {
                moduli: moduli.to_vec(),
            },
            Repr::Arithmetic,
        ))
    }

    /// `Z2^k`, whose standard basis vector `e_i` has index `2^i`.
    pub fn elementary_abelian_2(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("Z2^k needs k >= 1"));
        }
        FiniteGroup::product(&vec![2; k])
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("dihedral group needs n >= 1"));
        }
        check_order(n.saturating_mul(2))?;
        Ok(FiniteGroup::finish(2 * n, 0, GroupSource::Dihedral { n }, Repr::Arithmetic))
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("symmetric group needs n >= 1"));
        }
        if n > 7 {
            return Err(Error::Capacity {
                what: "symmetric group degree",
                got: n,
                limit: 7,
            });
        }
        let mut perms = Vec::new();
        let mut p: Vec<u8> = (0..n as u8).collect();
        loop {
            perms.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        Ok(FiniteGroup::finish(
            perms.len(),
            0,
            GroupSource::Symmetric { n },
            Repr::Perms(perms),
        ))
    }

    /// Validates the group axioms. Errors name a witness.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        check_order(order)?;
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Validation(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= order {
                    return Err(Error::Validation(format!(
                        "{a}*{b} = {c} is not an element"
                    )));
                }
                flat.push(c as u16);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;
        for a in 0..order {
            let mut row_seen = vec![usize::MAX; order];
            let mut col_seen = vec![usize::MAX; order];
            for b in 0..order {
                let r = at(a, b);
                if row_seen[r] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "{a}*{} = {a}*{b} = {r}, so {a} has no inverse",
                        row_seen[r]
                    )));
                }
                row_seen[r] = b;
                let c = at(b, a);
                if col_seen[c] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "{}*{a} = {b}*{a} = {c}, so {a} has no inverse",
                        col_seen[c]
                    )));
                }
                col_seen[c] = b;
            }
        }
        if let Some((a, b, c)) = light_associativity_witness(order, &at) {
            return Err(Error::Validation(format!(
                "associativity fails for ({a}, {b}, {c}): ({a}*{b})*{c} = {} but {a}*({b}*{c}) = {}",
                at(at(a, b), c),
                at(a, at(b, c))
            )));
        }
        Ok(FiniteGroup::finish(order, identity, GroupSource::Table, Repr::Table(flat)))
    }

    fn finish(order: usize, identity: usize, source: GroupSource, repr: Repr) -> Self {
        let mut g = FiniteGroup {
            order,
            identity,
            source,
            repr,
            inverses: Vec::new(),
        };
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            if inverses[a] != usize::MAX {
                continue;
            }
            let b = (0..order)
                .find(|&b| g.mul(a, b) == identity)
                .expect("validated groups have inverses");
            inverses[a] = b;
            inverses[b] = a;
        }
        g.inverses = inverses;
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn source(&self) -> &GroupSource {
        &self.source
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::input(format!(
                "element index {g} out of range for a group of order {}",
                self.order
            )))
        }
    }

    /// The product `a·b`; for permutations, `b` is applied first.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match (&self.source, &self.repr) {
            (GroupSource::Cyclic { n }, _) => (a + b) % n,
            (GroupSource::Product { moduli }, _) => {
                let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
                for &m in moduli {
                    out += ((a % m + b % m) % m) * place;
                    place *= m;
                    a /= m;
                    b /= m;
                }
                out
            }
            (GroupSource::Dihedral { n }, _) => {
                let (ra, sa, rb, sb) = (a % n, a / n, b % n, b / n);
                let r = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                r + n * ((sa + sb) % 2)
            }
            (_, Repr::Perms(perms)) => {
                let (p, q) = (&perms[a], &perms[b]);
                let composed: Vec<u8> = q.iter().map(|&i| p[i as usize]).collect();
                lehmer_rank(&composed)
            }
            (_, Repr::Table(t)) => t[a * self.order + b] as usize,
            _ => unreachable!("every source has a multiplication"),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        match self.source {
            GroupSource::Cyclic { .. } | GroupSource::Product { .. } => true,
            _ => (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a))),
        }
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &m in members {
            inside[m] = true;
        }
        inside[self.identity] && members.iter().all(|&a| members.iter().all(|&b| inside[self.mul(a, b)]))
    }

    /// Human-readable element name, parseable by [`FiniteGroup::parse_element`].
    pub fn element_name(&self, g: usize) -> String {
        match (&self.source, &self.repr) {
            (GroupSource::Cyclic { .. }, _) | (GroupSource::Table, _) => g.to_string(),
            (GroupSource::Product { moduli }, _) => {
                let mut rest = g;
                let coords: Vec<String> = moduli
                    .iter()
                    .map(|&m| {
                        let c = rest % m;
                        rest /= m;
                        c.to_string()
                    })
                    .collect();
                format!("({})", coords.join(","))
            }
            (GroupSource::Dihedral { n }, _) => match (g % n, g / n) {
                (0, 0) => "e".into(),
                (0, _) => "s".into(),
                (1, 0) => "r".into(),
                (a, 0) => format!("r^{a}"),
                (1, _) => "r s".into(),
                (a, _) => format!("r^{a} s"),
            },
            (_, Repr::Perms(perms)) => cycle_notation(&perms[g]),
            _ => unreachable!(),
        }
    }

    /// Coordinates of an element of a product or cyclic group.
    pub fn coordinates(&self, g: usize) -> Option<Vec<usize>> {
        match &self.source {
            GroupSource::Cyclic { .. } => Some(vec![g]),
            GroupSource::Product { moduli } => {
                let mut rest = g;
                Some(
                    moduli
                        .iter()
                        .map(|&m| {
                            let c = rest % m;
                            rest /= m;
                            c
                        })
                        .collect(),
                )
            }
            _ => None,
        }
    }

    /// The full multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// One-line image of a symmetric-group element, 0-based.
    pub fn permutation(&self, g: usize) -> Option<Vec<usize>> {
        match &self.repr {
            Repr::Perms(perms) => Some(perms[g].iter().map(|&x| x as usize).collect()),
            _ => None,
        }
    }

    fn perm_index(&self, one_line: &[usize]) -> Result<usize> {
        let n = match self.source {
            GroupSource::Symmetric { n } => n,
            _ => return Err(Error::input("permutation syntax needs a symmetric group")),
        };
        crate::digraph::check_permutation(one_line, n)?;
        let p: Vec<u8> = one_line.iter().map(|&x| x as u8).collect();
        Ok(lehmer_rank(&p))
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Position of a permutation in lexicographic order.
fn lehmer_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// 1-based cycle notation without fixed points; `e` for the identity.
fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] as usize == s {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            cyc.push((v + 1).to_string());
            v = p[v] as usize;
        }
        out.push_str(&format!("({})", cyc.join(" ")));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Light's test: a quasigroup with identity is associative iff
/// `(x·a)·y = x·(a·y)` for every `a` in a generating set.
fn light_associativity_witness(
    order: usize,
    at: &dyn Fn(usize, usize) -> usize,
) -> Option<(usize, usize, usize)> {
    let mut inside = vec![false; order];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    let absorb = |start: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        let mut queue = VecDeque::from([start]);
        inside[start] = true;
        while let Some(z) = queue.pop_front() {
            members.push(z);
            for k in 0..members.len() {
                let m = members[k];
                for p in [at(z, m), at(m, z)] {
                    if !inside[p] {
                        inside[p] = true;
                        queue.push_back(p);
                    }
                }
            }
        }
    };
    for a in 0..order {
        if !inside[a] {
            gens.push(a);
            absorb(a, &mut inside, &mut members);
        }
    }
    for &a in &gens {
        for x in 0..order {
            let xa = at(x, a);
            for y in 0..order {
                if at(xa, y) != at(x, at(a, y)) {
                    return Some((x, a, y));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let (r, s) = (1, 3);
        assert_eq!(d3.pow(r, 3), d3.identity());
        assert_eq!(d3.pow(s, 2), d3.identity());
        assert_eq!(d3.mul(d3.mul(s, r), s), d3.inverse(r));
        assert!(!d3.is_abelian());
        assert_eq!(d3.element_name(4), "r s");
    }

    #[test]
    fn symmetric_conventions() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let t = s3.perm_index(&[1, 0, 2]).unwrap();
        let c = s3.perm_index(&[1, 2, 0]).unwrap();
        assert_eq!(s3.element_name(t), "(1 2)");
        assert_eq!(s3.element_name(c), "(1 2 3)");
        // right factor first: (1 2)(1 2 3) sends 1 -> 2 -> 1, 2 -> 3, 3 -> 1 -> 2.
        assert_eq!(s3.element_name(s3.mul(t, c)), "(2 3)");
        assert_eq!(s3.element_order(c), 3);
        for a in 0..6 {
            assert_eq!(s3.mul(a, s3.inverse(a)), s3.identity());
        }
    }

    #[test]
    fn products_and_bits() {
        let z = FiniteGroup::elementary_abelian_2(3).unwrap();
        assert_eq!(z.element_name(4), "(0,0,1)");
        assert_eq!(z.mul(5, 6), 3);
        let p = FiniteGroup::product(&[2, 3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.coordinates(5), Some(vec![1, 2]));
        assert!(matches!(FiniteGroup::product(&[100, 100]), Err(Error::Capacity { .. })));
        assert!(matches!(FiniteGroup::symmetric(8), Err(Error::Capacity { .. })));
    }

    #[test]
    fn table_validation() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let g = FiniteGroup::from_table(&z3.table()).unwrap();
        assert_eq!(g.order(), 3);
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]),
            Err(Error::Validation(_))
        ));
        // A loop of order 5 that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&loop5).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("associativity")));
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert!(FiniteGroup::from_table(&s4.table()).is_ok());
    }

    #[test]
    fn closure() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(z8.generated_subgroup(&[2, 6]), vec![0, 2, 4, 6]);
        assert_eq!(z8.generated_subgroup(&[1, 5]).len(), 8);
        assert!(z8.is_subgroup(&[0, 4]));
        assert!(!z8.is_subgroup(&[0, 3]));
    }
}
