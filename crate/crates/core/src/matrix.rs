//! Matrices with polynomial entries.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::Polynomial;

/// Size up to which determinants use cofactor expansion.
pub const COFACTOR_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, n: usize) -> Self {
        Self {
            rows,
            cols,
            n,
            entries: vec![Polynomial::zero(n); rows * cols],
        }
    }

    pub fn identity(size: usize, n: usize) -> Self {
        let mut m = Self::zeros(size, size, n);
        for i in 0..size {
            m.entries[i * size + i] = Polynomial::one(n);
        }
        m
    }

    /// Builds a matrix from row vectors; all entries must share `n`.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::ShapeMismatch("matrix must be non-empty".into()));
        }
        let n = rows[0][0].n();
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for p in row {
                if p.n() != n {
                    return Err(Error::VariableCountMismatch {
                        left: n,
                        right: p.n(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            n,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.n(), self.n);
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} minus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<_>>()?;
        Ok(Self { entries, ..*self })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.n);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.n);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `self^k` for `k ≥ 1`, stopping early once a power vanishes.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if k == 0 {
            return Ok(Self::identity(self.rows, self.n));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            if acc.is_zero() {
                break;
            }
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// True iff `self^k` is the zero matrix, computed exactly.
    pub fn power_is_zero(&self, k: u32) -> Result<bool> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "matrix power must be positive".into(),
            ));
        }
        Ok(self.pow(k)?.is_zero())
    }

    /// Exact determinant: cofactor expansion up to [`COFACTOR_LIMIT`],
    /// fraction-free elimination beyond.
    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= COFACTOR_LIMIT {
            Ok(self.determinant_cofactor())
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along successive rows, memoised on the set of
    /// columns still available.
    pub fn determinant_cofactor(&self) -> Polynomial {
        assert!(self.is_square());
        let size = self.rows;
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        self.cofactor_rec(0, (1u64 << size) - 1, &mut memo)
    }

    fn cofactor_rec(
        &self,
        row: usize,
        cols: u64,
        memo: &mut HashMap<u64, Polynomial>,
    ) -> Polynomial {
        if row == self.rows {
            return Polynomial::one(self.n);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = Polynomial::zero(self.n);
        let mut sign_negative = false;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let minor = self.cofactor_rec(row + 1, cols & !(1 << c), memo);
                let t = a * &minor;
                acc = if sign_negative { &acc - &t } else { &acc + &t };
            }
            sign_negative = !sign_negative;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Bareiss elimination over the polynomial ring; every division is exact.
    pub fn determinant_bareiss(&self) -> Result<Polynomial> {
        assert!(self.is_square());
        let size = self.rows;
        let mut a: Vec<Vec<Polynomial>> = (0..size)
            .map(|i| (0..size).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = Polynomial::one(self.n);
        let mut negate = false;
        for k in 0..size {
            let Some(p) = (k..size).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Polynomial::zero(self.n));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = if prev.is_one() {
                        num
                    } else {
                        num.div_exact(&prev)?
                    };
                }
                a[i][k] = Polynomial::zero(self.n);
            }
            prev = a[k][k].clone();
        }
        let det = a[size - 1][size - 1].clone();
        Ok(if negate { -&det } else { det })
    }

    /// Entry-wise evaluation at a point.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<Vec<Vec<GaussianRational>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).evaluate(point))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
