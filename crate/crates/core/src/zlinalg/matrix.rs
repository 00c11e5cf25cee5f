use std::fmt;

use super::{Int, LinalgError};

/// Dense integer matrix, stored column by column.
///
/// Columns are the natural unit here: lattices are always spanned by
/// columns, and the elimination routines only ever touch whole columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::ONE);
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[Int]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix from row-major small entries.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, Int::from(*v));
            }
        }
        m
    }

    /// Builds a matrix from columns of a common length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Int>>) -> Self {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
            data.extend(c);
        }
        IntMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[c * self.rows + r]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[c * self.rows + r] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: &Int) {
        self.data[c * self.rows + r] += v;
    }

    #[inline]
    pub fn col(&self, c: usize) -> &[Int] {
        &self.data[c * self.rows..(c + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, c: usize) -> &mut [Int] {
        &mut self.data[c * self.rows..(c + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[Int]> + '_ {
        (0..self.cols).map(move |c| self.col(c))
    }

    pub fn to_columns(&self) -> Vec<Vec<Int>> {
        self.columns().map(|c| c.to_vec()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Int> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for c in 0..self.cols {
            for r in 0..self.rows {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { op: "mul", left: (self.rows, self.cols), right: (rhs.rows, rhs.cols) });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let dst = j * self.rows;
            for (k, b) in rhs.col(j).iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let nb = -b;
                for (r, a) in self.col(k).iter().enumerate() {
                    if !a.is_zero() {
                        out.data[dst + r].sub_mul_assign(&nb, a);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch { op: "mul_vec", left: (self.rows, self.cols), right: (v.len(), 1) });
        }
        let mut out = vec![Int::ZERO; self.rows];
        for (k, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let nb = -b;
            for (r, a) in self.col(k).iter().enumerate() {
                if !a.is_zero() {
                    out[r].sub_mul_assign(&nb, a);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::DimensionMismatch { op: "sub", left: (self.rows, self.cols), right: (rhs.rows, rhs.cols) });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Stacks matrices on top of each other.
    pub fn vstack(parts: &[&IntMatrix]) -> Result<IntMatrix, LinalgError> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if let Some(bad) = parts.iter().find(|m| m.cols != cols) {
            return Err(LinalgError::DimensionMismatch { op: "vstack", left: (0, cols), right: (bad.rows, bad.cols) });
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for c in 0..cols {
            for m in parts {
                data.extend_from_slice(m.col(c));
            }
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Places matrices side by side.
    pub fn hstack(parts: &[&IntMatrix]) -> Result<IntMatrix, LinalgError> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if let Some(bad) = parts.iter().find(|m| m.rows != rows) {
            return Err(LinalgError::DimensionMismatch { op: "hstack", left: (rows, 0), right: (bad.rows, bad.cols) });
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        Ok(IntMatrix { rows, cols, data })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
