//! Dense exact linear algebra over `ℚ(i)`.
//!
//! Elimination is fraction-free: every row is first scaled to Gaussian
//! integers, then Bareiss elimination keeps all entries in `ℤ[i]` (each is a
//! minor of the scaled input). Division into the field only happens in the
//! final normalisation to reduced row-echelon form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::GaussianRational;

pub type Row = Vec<GaussianRational>;

/// Gaussian integer, used only inside elimination where every entry is
/// known to lie in `ℤ[i]`; avoids the gcd normalisation of `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn from_field(c: &GaussianRational) -> Self {
        debug_assert!(c.is_gaussian_integer());
        Self {
            re: c.re().to_integer(),
            im: c.im().to_integer(),
        }
    }

    fn to_field(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// `self·a - other·b`.
    fn cross(&self, a: &Self, other: &Self, b: &Self) -> Self {
        Self {
            re: &self.re * &a.re - &self.im * &a.im - (&other.re * &b.re - &other.im * &b.im),
            im: &self.re * &a.im + &self.im * &a.re - (&other.re * &b.im + &other.im * &b.re),
        }
    }

    /// Division known to be exact in `ℤ[i]`.
    fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            return Self {
                re: &self.re / &d.re,
                im: &self.im / &d.re,
            };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &norm).is_zero() && (&im % &norm).is_zero());
        Self {
            re: re / &norm,
            im: im / &norm,
        }
    }
}

/// Scales a row to Gaussian integers; returns the scaling factor.
fn clear_denominators(row: &[GaussianRational]) -> (Vec<GaussInt>, BigInt) {
    let l = row.iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, &c.denom_lcm())
    });
    let ints = row
        .iter()
        .map(|c| {
            GaussInt::from_field(&if l.is_one() {
                c.clone()
            } else {
                c.scale_int(&l)
            })
        })
        .collect();
    (ints, l)
}

/// Row echelon form by Bareiss elimination.
///
/// Returns the nonzero echelon rows, their pivot columns, the number of row
/// swaps and the product of the denominator scalings.
fn bareiss_echelon(input: Vec<Row>, cols: usize) -> (Vec<Row>, Vec<usize>, usize, BigInt) {
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<GaussInt>> = Vec::with_capacity(input.len());
    for r in &input {
        debug_assert_eq!(r.len(), cols);
        let (ints, l) = clear_denominators(r);
        scale *= l;
        rows.push(ints);
    }
    drop(input);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = GaussInt {
        re: BigInt::one(),
        im: BigInt::zero(),
    };
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if p != top {
            rows.swap(p, top);
            swaps += 1;
        }
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            if factor.is_zero() {
                // Row still has to be rescaled to stay a minor.
                for x in row[col + 1..].iter_mut().filter(|x| !x.is_zero()) {
                    let v = pivot.mul(x);
                    *x = if prev.is_one() { v } else { v.div_exact(&prev) };
                }
                continue;
            }
            for (x, p) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let v = pivot.cross(x, &factor, p);
                *x = if prev.is_one() { v } else { v.div_exact(&prev) };
            }
            row[col] = GaussInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = rows[top][col].clone();
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    let rows = rows
        .iter()
        .map(|r| r.iter().map(GaussInt::to_field).collect())
        .collect();
    (rows, pivots, swaps, scale)
}

/// Reduced row-echelon form; returns the nonzero rows and pivot columns.
pub fn rref(rows: Vec<Row>, cols: usize) -> (Vec<Row>, Vec<usize>) {
    let (mut rows, pivots, _, _) = bareiss_echelon(rows, cols);
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let inv = rows[r][pc].inv().expect("pivot is nonzero");
        for x in &mut rows[r][pc..] {
            *x = &*x * &inv;
        }
        let (upper, lower) = rows.split_at_mut(r);
        let src = &lower[0];
        for row in upper {
            let factor = row[pc].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, s) in row[pc..].iter_mut().zip(&src[pc..]) {
                *x -= &(&factor * s);
            }
        }
    }
    (rows, pivots)
}

pub fn rank(rows: Vec<Row>, cols: usize) -> usize {
    bareiss_echelon(rows, cols).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`, returned in reduced
/// row-echelon form.
pub fn kernel(rows: Vec<Row>, cols: usize) -> Vec<Row> {
    let (r, pivots) = rref(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Row> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![GaussianRational::zero(); cols];
            v[f] = GaussianRational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect();
    rref(basis, cols).0
}

/// Determinant of a square matrix via Bareiss elimination.
pub fn determinant(rows: Vec<Row>) -> GaussianRational {
    let n = rows.len();
    let (ech, pivots, swaps, scale) = bareiss_echelon(rows, n);
    if pivots.len() < n {
        return GaussianRational::zero();
    }
    let mut det = ech[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        det = -det;
    }
    &det / &GaussianRational::from_bigint(scale)
}
