//! Dense matrices over a cyclotomic field with exact row reduction.

use std::fmt;

use serde::Serialize;

use super::cyclotomic::CycScalar;
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix over `Q(ζ_e)`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<CycScalar>,
}

/// Outcome of `solve`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<CycScalar>),
    /// One particular solution plus a kernel basis (as rows).
    Affine(Vec<CycScalar>, CycMatrix),
    Inconsistent,
}

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: CycMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl CycMatrix {
    pub fn zeros(conductor: u32, rows: usize, cols: usize) -> Self {
        CycMatrix { rows, cols, conductor, data: vec![CycScalar::zero(conductor); rows * cols] }
    }

    pub fn identity(conductor: u32, n: usize) -> Self {
        let mut m = Self::zeros(conductor, n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::one(conductor));
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(conductor: u32, cols: usize, rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row.into_iter().map(|x| x.embed_to(conductor)));
        }
        Ok(CycMatrix { rows: nrows, cols, conductor, data })
    }

    pub fn from_fn(conductor: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> CycScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CycMatrix { rows, cols, conductor, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<CycScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        CycMatrix::from_fn(self.conductor, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let e = self.conductor;
        let mut out = CycMatrix::zeros(e, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    let p = a * b;
                    out.data[idx] += &p;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![CycScalar::zero(self.conductor); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *slot += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(CycMatrix { rows: self.rows, cols: self.cols, conductor: self.conductor, data })
    }

    /// Kronecker product; index `(a, b)` of the result is `a * other.rows + b`.
    pub fn kron(&self, other: &CycMatrix) -> CycMatrix {
        let (r2, c2) = (other.rows, other.cols);
        CycMatrix::from_fn(self.conductor, self.rows * r2, self.cols * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                return CycScalar::zero(self.conductor);
            }
            a * other.get(i % r2, j % c2)
        })
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Stacks the rows of `other` below `self`.
    pub fn vstack(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column count".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(CycMatrix { rows: self.rows + other.rows, cols: self.cols, conductor: self.conductor, data })
    }

    /// Reduced row echelon form; deterministic (first nonzero entry is the pivot).
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                if !v.is_zero() {
                    let scaled = v * &inv;
                    m.set(r, j, scaled);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let d = &f * pv;
                    let nv = m.get(i, j) - &d;
                    m.set(i, j, nv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    /// Nonzero rows of the RREF: a canonical representative of the row space.
    pub fn row_space(&self) -> CycMatrix {
        let red = self.rref();
        red.matrix.take_rows(red.rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn take_rows(&self, n: usize) -> CycMatrix {
        CycMatrix {
            rows: n,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of `{x : M x = 0}`, returned as the rows of an RREF matrix.
    pub fn kernel(&self) -> CycMatrix {
        let red = self.rref();
        let e = self.conductor;
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![CycScalar::zero(e); self.cols];
            v[f] = CycScalar::one(e);
            for (r, &p) in red.pivots.iter().enumerate() {
                let x = red.matrix.get(r, f);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        let m = CycMatrix::from_rows(e, self.cols, basis).expect("kernel rows have matching length");
        m.row_space()
    }

    /// Solves `M x = b` exactly.
    pub fn solve(&self, b: &[CycScalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let e = self.conductor;
        let aug = CycMatrix::from_fn(e, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let red = aug.rref();
        if red.pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = vec![CycScalar::zero(e); self.cols];
        for (r, &p) in red.pivots.iter().enumerate() {
            x[p] = red.matrix.get(r, self.cols).clone();
        }
        if red.rank == self.cols {
            Ok(Solution::Unique(x))
        } else {
            Ok(Solution::Affine(x, self.kernel()))
        }
    }
}

impl CycScalar {
    /// Embeds into `Q(ζ_m)` when needed; no-op for equal conductors.
    pub fn embed_to(self, m: u32) -> CycScalar {
        if self.conductor() == m {
            self
        } else {
            self.embed(m)
        }
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for CycMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vecs().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(4, v)
    }

    fn mat(rows: &[&[i64]]) -> CycMatrix {
        let cols = rows[0].len();
        CycMatrix::from_rows(4, cols, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_is_reduced() {
        let id = CycMatrix::identity(4, 3);
        let red = id.rref();
        assert_eq!(red.matrix, id);
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn dependent_rows_collapse() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.row_space(), mat(&[&[1, 1]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_cases() {
        let id = CycMatrix::identity(4, 2);
        let b = vec![int(3), CycScalar::root_of_unity(4, 1)];
        assert_eq!(id.solve(&b).unwrap(), Solution::Unique(b.clone()));
        let z = CycMatrix::zeros(4, 2, 2);
        assert_eq!(z.solve(&[int(1), int(0)]).unwrap(), Solution::Inconsistent);
        assert!(matches!(id.solve(&[int(1)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kernel_annihilates() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 2);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn kron_indexing() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 1), &int(1));
        assert_eq!(k.get(3, 2), &int(4));
        assert_eq!(k.trace(), &a.trace() * &b.trace());
    }
}
