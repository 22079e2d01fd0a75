//! Dense matrices over arbitrary-precision integers and their Smith normal
//! form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix { rows: r, cols: c, data: rows.iter().flatten().cloned().map(Into::into).collect() }
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let mut m = IntegerMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= q * row[source], for columns `from..`.
    fn sub_row(&mut self, target: usize, source: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let d = q * s;
                self.data[target * self.cols + j] -= d;
            }
        }
    }

    /// col[target] -= q * col[source], for rows `from..`.
    fn sub_col(&mut self, target: usize, source: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let s = &self.data[i * self.cols + source];
            if !s.is_zero() {
                let d = q * s;
                self.data[i * self.cols + target] -= d;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[r * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntegerMatrix,
    pub rank: usize,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Unimodular `(U, V)` with `U * m * V = diagonal`, when requested.
    pub transforms: Option<(IntegerMatrix, IntegerMatrix)>,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    snf(m, false)
}

pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> SmithForm {
    snf(m, true)
}

struct Work {
    a: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Work {
    fn swap_rows(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(u) = &mut self.u {
            u.swap_rows(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some(v) = &mut self.v {
            v.swap_cols(x, y);
        }
    }

    fn sub_row(&mut self, target: usize, source: usize, q: &BigInt, from: usize) {
        self.a.sub_row(target, source, q, from);
        if let Some(u) = &mut self.u {
            u.sub_row(target, source, q, 0);
        }
    }

    fn sub_col(&mut self, target: usize, source: usize, q: &BigInt, from: usize) {
        self.a.sub_col(target, source, q, from);
        if let Some(v) = &mut self.v {
            v.sub_col(target, source, q, 0);
        }
    }

    /// Smallest nonzero magnitude in the trailing block starting at `(t, t)`.
    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.magnitude() < self.a[(bi, bj)].magnitude()) {
                    if x.magnitude().is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Elimination pivoting on the smallest nonzero magnitude.
fn snf(m: &IntegerMatrix, track: bool) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = Work {
        a: m.clone(),
        u: track.then(|| IntegerMatrix::identity(rows)),
        v: track.then(|| IntegerMatrix::identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_in_block(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut residue = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].div_floor(&w.a[(t, t)]);
                w.sub_row(i, t, &q, t);
                residue |= !w.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].div_floor(&w.a[(t, t)]);
                w.sub_col(j, t, &q, t);
                residue |= !w.a[(t, j)].is_zero();
            }
            if residue {
                // a remainder smaller than the pivot survived; move it into place
                let col_min = (t + 1..rows)
                    .filter(|&i| !w.a[(i, t)].is_zero())
                    .min_by(|&x, &y| w.a[(x, t)].magnitude().cmp(w.a[(y, t)].magnitude()));
                let row_min = (t + 1..cols)
                    .filter(|&j| !w.a[(t, j)].is_zero())
                    .min_by(|&x, &y| w.a[(t, x)].magnitude().cmp(w.a[(t, y)].magnitude()));
                match (col_min, row_min) {
                    (Some(i), Some(j)) if w.a[(t, j)].magnitude() < w.a[(i, t)].magnitude() => w.swap_cols(t, j),
                    (Some(i), _) => w.swap_rows(t, i),
                    (None, Some(j)) => w.swap_cols(t, j),
                    (None, None) => unreachable!("residue implies a nonzero entry"),
                }
                continue;
            }
            let pivot = w.a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    // row t += row i, then the row pass produces a smaller remainder
                    w.sub_row(t, i, &BigInt::from(-1), t);
                }
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.a.negate_row(t);
            if let Some(u) = &mut w.u {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..t).map(|i| w.a[(i, i)].clone()).collect();
    SmithForm { rank: invariant_factors.len(), invariant_factors, transforms: w.u.zip(w.v), diagonal: w.a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form_with_transforms(m);
        let (u, v) = s.transforms.clone().unwrap();
        assert_eq!(u.mul(m).mul(&v), s.diagonal);
        assert!(u.determinant().magnitude().is_one());
        assert!(v.determinant().magnitude().is_one());
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert_eq!(smith_normal_form(m).diagonal, s.diagonal);
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&IntegerMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.diagonal, IntegerMatrix::diagonal(&[1, 6]));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntegerMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        assert!(s.invariant_factors.is_empty());
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(check(&IntegerMatrix::zeros(0, 3)).rank, 0);
        assert_eq!(check(&IntegerMatrix::zeros(4, 0)).rank, 0);
    }

    #[test]
    fn classic_torsion_example() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors, [2, 6, 12].map(BigInt::from).to_vec());
    }

    #[test]
    fn determinant_values() {
        let m = IntegerMatrix::from_rows(&[vec![0, 2, 1], vec![1, 0, 3], vec![4, 5, 6]]);
        // cofactor expansion: 0*(0-15) - 2*(6-12) + 1*(5-0) = 17
        assert_eq!(m.determinant(), BigInt::from(17));
        assert_eq!(IntegerMatrix::identity(0).determinant(), BigInt::one());
        assert_eq!(IntegerMatrix::zeros(2, 2).determinant(), BigInt::zero());
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let m = IntegerMatrix::from_rows(&[vec![big.clone(), BigInt::from(0)], vec![BigInt::from(0), big.clone() * 3]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors, vec![big.clone(), big * 3]);
    }
}
