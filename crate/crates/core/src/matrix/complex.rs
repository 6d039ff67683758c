use crate::digraph::Digraph;
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;
use std::ops::{Index, IndexMut, Mul};

/// Square matrix of finite complex numbers, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        ComplexMatrix { n, data }
    }

    /// Rejects ragged, empty or non-finite input.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::input("matrix must be at least 1x1"));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|z| !z.is_finite()) {
                return Err(Error::input(format!("entry ({i},{j}) is not finite")));
            }
            data.extend(row);
        }
        Ok(ComplexMatrix { n, data })
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        ComplexMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.n)
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        ComplexMatrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: f64) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Gauss-Jordan with partial pivoting; `None` if numerically singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = ComplexMatrix::identity(n);
        let scale = self.data.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return None;
        }
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
                .unwrap();
            if a[(pivot, col)].norm() <= 1e-14 * scale {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] *= p;
                inv[(col, j)] *= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let (x, y) = (a[(col, j)], inv[(col, j)]);
                    a[(r, j)] -= f * x;
                    inv[(r, j)] -= f * y;
                }
            }
        }
        Some(inv)
    }

    /// Largest entrywise deviation of `M†M` and `MM†` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        let id = ComplexMatrix::identity(self.n);
        let adj = self.adjoint();
        (&adj * self)
            .max_abs_diff(&id)
            .max((self * &adj).max_abs_diff(&id))
    }

    /// Arc `(i,j)` iff `|M[i,j]| > tol`.
    pub fn support(&self, tol: f64) -> Digraph {
        Digraph::from_fn(self.n, |i, j| self[(i, j)].norm() > tol)
            .expect("matrix has at least one row")
    }

    /// Smallest modulus over the arcs of `pattern`, or infinity if arcless.
    pub fn min_modulus_on(&self, pattern: &Digraph) -> f64 {
        pattern
            .arcs()
            .map(|(i, j)| self[(i, j)].norm())
            .fold(f64::INFINITY, f64::min)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * n..k * n + n];
                for (o, b) in out.data[i * n..i * n + n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({})", self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexMatrixFile {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexMatrixFile {
            n: self.n,
            entries: self
                .rows()
                .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = ComplexMatrixFile::deserialize(d)?;
        if file.entries.len() != file.n {
            return Err(serde::de::Error::custom(format!(
                "n is {} but {} rows given",
                file.n,
                file.entries.len()
            )));
        }
        let rows = file
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
            .collect();
        ComplexMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `e^{2πi·k/n}`, with the exponent reduced first so large products stay exact.
fn root_of_unity(k: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU * ((k % n) as f64) / n as f64)
}

/// The normalized Fourier matrix `ω^{jk}/√n`.
pub fn dft(n: usize) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::input("dft size must be positive"));
    }
    let norm = 1.0 / (n as f64).sqrt();
    Ok(ComplexMatrix::from_fn(n, |j, k| {
        root_of_unity(j * k % n, n) * norm
    }))
}

/// `(1/√2)·[[A, −I], [I, A†]]`, unitary whenever `A` is. For real `A` the
/// lower-right block is the plain transpose.
pub fn block_double(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let residual = a.unitarity_residual();
    if residual > tol {
        return Err(Error::input(format!(
            "block doubling needs a unitary input; residual is {residual:e}"
        )));
    }
    let n = a.n();
    let adj = a.adjoint();
    let one = Complex64::new(1.0, 0.0);
    Ok(ComplexMatrix::from_fn(2 * n, |i, j| {
        let z = match (i < n, j < n) {
            (true, true) => a[(i, j)],
            (true, false) if j - n == i => -one,
            (false, true) if i - n == j => one,
            (false, false) => adj[(i - n, j - n)],
            _ => Complex64::new(0.0, 0.0),
        };
        z * FRAC_1_SQRT_2
    }))
}

/// Eigenvalues `λ_j = Σ_{s∈S} ω^{js}` of the circulant pattern of `X(Zn; S)`,
/// for `j = 0..n`.
pub fn circulant_spectrum(n: usize, residues: &[usize]) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::input("group order must be positive"));
    }
    if residues.is_empty() {
        return Err(Error::input("connection set must be nonempty"));
    }
    Ok((0..n)
        .map(|j| residues.iter().map(|&s| root_of_unity(j * (s % n), n)).sum())
        .collect())
}
