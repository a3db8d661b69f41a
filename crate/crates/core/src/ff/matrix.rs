//! Dense matrices over a [`Field`], with Gaussian elimination.
//!
//! Pivoting always takes the first row holding a nonzero entry in the
//! current column, so results are reproducible.

use super::{Field, Gf, MatrixError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

/// Row echelon form with pivots normalised to 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
    reduced: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Rank,
    NullspaceVector,
    FullNullspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Rank(usize),
    Vector(Vec<Gf>),
    Basis(Vec<Vec<Gf>>),
}

/// Mode-dispatching front end over the [`Matrix`] methods.
pub fn solve(field: &Field, matrix: &Matrix, mode: SolveMode) -> Result<Solution, MatrixError> {
    Ok(match mode {
        SolveMode::Rank => Solution::Rank(matrix.rank(field)),
        SolveMode::NullspaceVector => Solution::Vector(matrix.nullspace_vector(field)?),
        SolveMode::FullNullspace => Solution::Basis(matrix.nullspace(field)),
    })
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Gf::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gf>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Empty matrix with a fixed column count, filled by [`Matrix::push_row`].
    pub fn with_cols(cols: usize) -> Self {
        Matrix {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: &[Gf]) {
        assert_eq!(row.len(), self.cols, "row length");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Gf) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Gf] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Gf]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// A·v
    pub fn mul_vec(&self, field: &Field, v: &[Gf]) -> Vec<Gf> {
        assert_eq!(v.len(), self.cols);
        self.iter_rows().map(|r| field.dot(r, v)).collect()
    }

    /// vᵀ·A
    pub fn vec_mul(&self, field: &Field, v: &[Gf]) -> Vec<Gf> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Gf::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            field.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![Gf::ZERO; other.cols];
            for k in 0..self.cols {
                field.axpy(&mut acc, self.get(i, k), other.row(k));
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    /// `row[dst] += c * row[src]`
    fn add_row_multiple(&mut self, field: &Field, dst: usize, src: usize, c: Gf, from: usize) {
        let cols = self.cols;
        if dst == src {
            unreachable!("row operation on itself");
        }
        let (d, s) = if dst < src {
            let (head, tail) = self.data.split_at_mut(src * cols);
            (&mut head[dst * cols..(dst + 1) * cols], &tail[..cols])
        } else {
            let (head, tail) = self.data.split_at_mut(dst * cols);
            (&mut tail[..cols], &head[src * cols..(src + 1) * cols])
        };
        field.axpy(&mut d[from..], c, &s[from..]);
    }

    fn eliminate(&self, field: &Field, reduce: bool) -> Echelon {
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
            let inv = field.inv(m.get(r, c));
            field.scale(&mut m.row_mut(r)[c..], inv);
            for i in (r + 1)..m.rows {
                let f = m.get(i, c);
                if !f.is_zero() {
                    m.add_row_multiple(field, i, r, field.neg(f), c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut e = Echelon {
            matrix: m,
            pivots,
            reduced: false,
        };
        if reduce {
            e.reduce(field);
        }
        e
    }

    pub fn echelon(&self, field: &Field) -> Echelon {
        self.eliminate(field, false)
    }

    /// Reduced row echelon form.
    pub fn rref(&self, field: &Field) -> Echelon {
        self.eliminate(field, true)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.echelon(field).pivots.len()
    }

    /// A nonzero kernel vector: the first free column set to 1, the other
    /// free columns to 0.
    pub fn nullspace_vector(&self, field: &Field) -> Result<Vec<Gf>, MatrixError> {
        let e = self.echelon(field);
        let free = first_free(&e.pivots, self.cols).ok_or(MatrixError::TrivialKernel {
            rank: e.pivots.len(),
            cols: self.cols,
        })?;
        Ok(e.back_substitute(field, free))
    }

    /// Kernel basis, one vector per free column in increasing order.
    pub fn nullspace(&self, field: &Field) -> Vec<Vec<Gf>> {
        let e = self.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|f| {
                let mut v = vec![Gf::ZERO; self.cols];
                v[f] = Gf::ONE;
                for (row, &p) in e.pivots.iter().enumerate() {
                    v[p] = field.neg(e.matrix.get(row, f));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, Gf::ONE);
        }
        let e = aug.rref(field);
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&e.matrix.row(i)[n..]);
        }
        Some(inv)
    }

    /// Some x with A·x = b, if the system is consistent.
    pub fn solve_affine(&self, field: &Field, b: &[Gf]) -> Option<Vec<Gf>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            aug.set(i, self.cols, b[i]);
        }
        let e = aug.rref(field);
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Gf::ZERO; self.cols];
        for (row, &p) in e.pivots.iter().enumerate() {
            x[p] = e.matrix.get(row, self.cols);
        }
        Some(x)
    }
}

fn first_free(pivots: &[usize], cols: usize) -> Option<usize> {
    let mut next = 0;
    for &p in pivots {
        if p != next {
            return Some(next);
        }
        next += 1;
    }
    (next < cols).then_some(next)
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&mut self, field: &Field) {
        if self.reduced {
            return;
        }
        for (row, &c) in self.pivots.iter().enumerate().rev() {
            for i in 0..row {
                let f = self.matrix.get(i, c);
                if !f.is_zero() {
                    self.matrix.add_row_multiple(field, i, row, field.neg(f), c);
                }
            }
        }
        self.reduced = true;
    }

    fn back_substitute(&self, field: &Field, free: usize) -> Vec<Gf> {
        let cols = self.matrix.cols;
        let mut x = vec![Gf::ZERO; cols];
        x[free] = Gf::ONE;
        for (row, &p) in self.pivots.iter().enumerate().rev() {
            let r = self.matrix.row(row);
            let mut s = Gf::ZERO;
            for j in (p + 1)..cols {
                if !x[j].is_zero() && !r[j].is_zero() {
                    s = field.add(s, field.mul(r[j], x[j]));
                }
            }
            x[p] = field.neg(s);
        }
        x
    }

    /// Reduces `v` against the echelon rows; returns the remainder.
    pub fn reduce_vector(&self, field: &Field, v: &[Gf]) -> Vec<Gf> {
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if !c.is_zero() {
                field.axpy(&mut w[p..], field.neg(c), &self.matrix.row(row)[p..]);
            }
        }
        w
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, field: &Field, v: &[Gf]) -> bool {
        self.reduce_vector(field, v).iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, Gf(rng.gen_range(0..f.size())));
            }
        }
        m
    }

    #[test]
    fn identity_has_full_rank() {
        let f = Field::binary(3).unwrap();
        let id = Matrix::identity(5);
        assert_eq!(id.rank(&f), 5);
        assert!(id.nullspace(&f).is_empty());
        assert!(matches!(
            id.nullspace_vector(&f),
            Err(MatrixError::TrivialKernel { rank: 5, cols: 5 })
        ));
    }

    #[test]
    fn one_by_two_over_gf2() {
        let f = Field::binary(1).unwrap();
        let m = Matrix::from_rows(vec![vec![Gf(1), Gf(1)]]).unwrap();
        assert_eq!(m.nullspace_vector(&f).unwrap(), vec![Gf(1), Gf(1)]);
        assert_eq!(solve(&f, &m, SolveMode::Rank).unwrap(), Solution::Rank(1));
    }

    #[test]
    fn random_kernel_over_gf64() {
        let f = Field::binary(6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_matrix(&f, 100, 101, &mut rng);
        let v = m.nullspace_vector(&f).unwrap();
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(m.mul_vec(&f, &v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn rank_nullity_and_kernel() {
        let f = Field::new(3, 2, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let mut m = random_matrix(&f, rows, cols, &mut rng);
            // force some dependency
            if rows > 1 {
                let r0 = m.row(0).to_vec();
                m.row_mut(rows - 1).copy_from_slice(&r0);
            }
            let basis = m.nullspace(&f);
            assert_eq!(m.rank(&f) + basis.len(), cols);
            for v in &basis {
                assert!(m.mul_vec(&f, v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::binary(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut done = 0;
        while done < 5 {
            let m = random_matrix(&f, 6, 6, &mut rng);
            if let Some(inv) = m.inverse(&f) {
                assert_eq!(m.mul(&f, &inv), Matrix::identity(6));
                done += 1;
            }
        }
    }

    #[test]
    fn affine_solve_and_membership() {
        let f = Field::binary(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = random_matrix(&f, 4, 7, &mut rng);
        let x: Vec<Gf> = (0..7).map(|_| Gf(rng.gen_range(0..8))).collect();
        let b = m.mul_vec(&f, &x);
        let y = m.solve_affine(&f, &b).unwrap();
        assert_eq!(m.mul_vec(&f, &y), b);
        let e = m.echelon(&f);
        let combo = m.vec_mul(&f, &[Gf(1), Gf(5), Gf(0), Gf(3)]);
        assert!(e.contains(&f, &combo));
    }
}
