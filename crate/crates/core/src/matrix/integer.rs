use super::ComplexMatrix;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::Index;

/// Largest order accepted by [`hypercube_weighing`].
pub const MAX_WEIGHING_ORDER: usize = 4096;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        IntMatrix {
            n,
            data: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::input("matrix must be at least 1x1"));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {n}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, |i, j| (i == j) as i64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn support(&self) -> Digraph {
        Digraph::from_fn(self.n, |i, j| self[(i, j)] != 0).expect("matrix has at least one row")
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| Complex64::new(self[(i, j)] as f64, 0.0))
    }

    /// `k` with `W·Wᵀ = k·I` exactly, or `None`. The zero matrix has no weight.
    /// Row products are accumulated column by column over nonzero entries, so
    /// sparse matrices of order in the thousands are cheap.
    pub fn weighing_weight(&self) -> Result<Option<i64>> {
        let n = self.n;
        if let Some(k) = self.data.iter().position(|x| !(-1..=1).contains(x)) {
            return Err(Error::input(format!(
                "entry ({},{}) = {} is outside {{-1,0,1}}",
                k / n,
                k % n,
                self.data[k]
            )));
        }
        let rows: Vec<Vec<(usize, i64)>> = self
            .rows()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect())
            .collect();
        let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for (i, r) in rows.iter().enumerate() {
            for &(c, x) in r {
                cols[c].push((i, x));
            }
        }
        let weight = rows[0].len() as i64;
        if weight == 0 {
            return Ok(None);
        }
        let mut acc = vec![0i64; n];
        let mut touched = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for &(c, x) in r {
                for &(j, y) in &cols[c] {
                    if acc[j] == 0 {
                        touched.push(j);
                    }
                    acc[j] += x * y;
                }
            }
            let ok = touched
                .iter()
                .all(|&j| acc[j] == if j == i { weight } else { 0 })
                && acc[i] == weight;
            for &j in &touched {
                acc[j] = 0;
            }
            touched.clear();
            if !ok {
                return Ok(None);
            }
        }
        Ok(Some(weight))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

#[derive(Serialize, Deserialize)]
struct IntMatrixFile {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntMatrixFile {
            n: self.n,
            entries: self.rows().map(<[i64]>::to_vec).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = IntMatrixFile::deserialize(d)?;
        if file.entries.len() != file.n {
            return Err(serde::de::Error::custom(format!(
                "n is {} but {} rows given",
                file.n,
                file.entries.len()
            )));
        }
        IntMatrix::from_rows(&file.entries).map_err(serde::de::Error::custom)
    }
}

const SQUARE_BASE: [[i64; 4]; 4] = [[0, -1, 1, 0], [-1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]];
const LOOPED_SQUARE_BASE: [[i64; 4]; 4] =
    [[1, 1, -1, 0], [1, -1, 0, 1], [-1, 0, -1, 1], [0, 1, 1, 1]];

/// Weighing matrix supported by the `k`-cube (with a loop at every vertex if
/// `loops`), grown from a 4×4 base by `A ↦ [[A, −I], [I, Aᵀ]]`. Vertex `v`
/// of the cube is bit pattern `v`, matching [`crate::digraph::families::hypercube`].
pub fn hypercube_weighing(k: u32, loops: bool) -> Result<IntMatrix> {
    if k < 2 {
        return Err(Error::input("hypercube weighing matrices start at k = 2"));
    }
    let max_k = MAX_WEIGHING_ORDER.ilog2();
    if k > max_k {
        return Err(Error::Capacity {
            what: "hypercube dimension",
            got: k as usize,
            limit: max_k as usize,
        });
    }
    let mut a = IntMatrix::from_rows(if loops { &LOOPED_SQUARE_BASE } else { &SQUARE_BASE })?;
    for _ in 2..k {
        let m = a.n();
        let at = a.transpose();
        a = IntMatrix::from_fn(2 * m, |i, j| match (i < m, j < m) {
            (true, true) => a[(i, j)],
            (true, false) => -((j - m == i) as i64),
            (false, true) => (i - m == j) as i64,
            (false, false) => at[(i - m, j - m)],
        });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families;

    fn brute_weight(w: &IntMatrix) -> Option<i64> {
        let n = w.n();
        let k: i64 = (0..n).map(|c| w[(0, c)] * w[(0, c)]).sum();
        for i in 0..n {
            for j in 0..n {
                let dot: i64 = (0..n).map(|c| w[(i, c)] * w[(j, c)]).sum();
                if dot != if i == j { k } else { 0 } {
                    return None;
                }
            }
        }
        (k > 0).then_some(k)
    }

    #[test]
    fn weight_examples() {
        let base = IntMatrix::from_rows(&SQUARE_BASE).unwrap();
        assert_eq!(base.weighing_weight().unwrap(), Some(2));
        assert_eq!(IntMatrix::identity(5).weighing_weight().unwrap(), Some(1));
        let j2 = IntMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(j2.weighing_weight().unwrap(), None);
        let two = IntMatrix::from_rows(&[[2, 0], [0, 1]]).unwrap();
        assert!(matches!(two.weighing_weight(), Err(Error::Input(_))));
        assert_eq!(IntMatrix::from_fn(3, |_, _| 0).weighing_weight().unwrap(), None);
        // unequal row weights
        let uneven = IntMatrix::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert_eq!(uneven.weighing_weight().unwrap(), None);
    }

    #[test]
    fn cube_recursion() {
        assert_eq!(hypercube_weighing(2, false).unwrap().rows().collect::<Vec<_>>(), SQUARE_BASE.iter().map(|r| &r[..]).collect::<Vec<_>>());
        for k in 2..=6u32 {
            let w = hypercube_weighing(k, false).unwrap();
            assert_eq!(w.weighing_weight().unwrap(), Some(k as i64));
            assert_eq!(brute_weight(&w), Some(k as i64));
            assert_eq!(w.support(), families::hypercube(k as usize));
            let l = hypercube_weighing(k, true).unwrap();
            assert_eq!(l.weighing_weight().unwrap(), Some(k as i64 + 1));
            assert_eq!(brute_weight(&l), Some(k as i64 + 1));
            assert_eq!(l.support(), families::hypercube(k as usize).with_loops());
        }
    }

    #[test]
    fn cube_limits() {
        assert!(matches!(hypercube_weighing(1, false), Err(Error::Input(_))));
        assert!(matches!(hypercube_weighing(13, true), Err(Error::Capacity { .. })));
    }

    #[test]
    fn largest_cube_is_exact() {
        let w = hypercube_weighing(12, false).unwrap();
        assert_eq!(w.n(), MAX_WEIGHING_ORDER);
        assert_eq!(w.weighing_weight().unwrap(), Some(12));
        let l = hypercube_weighing(12, true).unwrap();
        assert_eq!(l.weighing_weight().unwrap(), Some(13));
    }
}
