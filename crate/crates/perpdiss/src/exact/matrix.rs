//! Rectangular matrices over exact rationals with reduced row echelon form.
//!
//! RREF is canonical for a row space, which is what makes affine flats
//! directly comparable by equality downstream.

use std::fmt;

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<Rat>) {
        assert_eq!(row.len(), self.cols);
        self.entries.extend(row);
        self.rows += 1;
    }

    /// Reduced row echelon form and rank. Pivots are normalized to 1, zero
    /// rows are dropped, so the result is the canonical representative of the
    /// row space.
    pub fn rref(&self) -> (RationalMatrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m[(pivot_row, col)].recip();
            for c in col..m.cols {
                let v = m[(pivot_row, c)].clone() * inv.clone();
                m[(pivot_row, c)] = v;
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m[(r2, col)].is_zero() {
                    let factor = m[(r2, col)].clone();
                    for c in col..m.cols {
                        let v = m[(r2, c)].clone() - factor.clone() * m[(pivot_row, c)].clone();
                        m[(r2, c)] = v;
                    }
                }
            }
            pivot_row += 1;
        }
        let rank = pivot_row;
        m.entries.truncate(rank * m.cols);
        m.rows = rank;
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Transpose.
    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product.
    pub fn matmul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += self[(i, k)].clone() * rhs[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Solve `self · x = b` for square invertible `self`; None when singular.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        aug.cols += 1;
        let mut entries = Vec::with_capacity(aug.rows * aug.cols);
        for (i, rhs) in b.iter().enumerate() {
            entries.extend(self.row(i).to_vec());
            entries.push(rhs.clone());
        }
        aug.entries = entries;
        let (r, rank) = aug.rref();
        if rank < self.rows {
            return None;
        }
        Some((0..self.rows).map(|i| r[(i, self.cols)].clone()).collect())
    }

    /// Basis of the null space `{x : self·x = 0}` as columns of the result.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let (r, rank) = self.rref();
        let mut pivot_cols = vec![];
        let mut col = 0;
        for row in 0..rank {
            while col < self.cols && r[(row, col)].is_zero() {
                col += 1;
            }
            pivot_cols.push(col);
        }
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_is_fixed() {
        let id = RationalMatrix::identity(3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn dependent_rows_drop() {
        let (r, rank) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(rank, 1);
        assert_eq!(r, m(&[&[1, 2]]));
    }

    #[test]
    fn row_swap() {
        let (r, rank) = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(rank, 2);
        assert_eq!(r, RationalMatrix::identity(2));
    }

    // rref is idempotent and rank is invariant under row shuffles, for random
    // matrices up to 6×8.
    #[test]
    fn rref_idempotent_and_shuffle_invariant() {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=8);
            let mut mat = RationalMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    mat[(i, j)] = Rat::from_int(rng.gen_range(-3..=3));
                }
            }
            let (r1, rank1) = mat.rref();
            let (r2, rank2) = r1.rref();
            assert_eq!(r1, r2);
            assert_eq!(rank1, rank2);

            let mut order: Vec<usize> = (0..rows).collect();
            order.shuffle(&mut rng);
            let shuffled =
                RationalMatrix::from_rows(order.iter().map(|&i| mat.row(i).to_vec()).collect());
            let (r3, rank3) = shuffled.rref();
            assert_eq!(rank1, rank3);
            assert_eq!(r1, r3, "canonical form must not depend on row order");
        }
    }

    #[test]
    fn solve_and_null_space() {
        let a = m(&[&[2, 0], &[1, 1]]);
        let x = a.solve(&[Rat::from_int(4), Rat::from_int(5)]).unwrap();
        assert_eq!(x, vec![Rat::from_int(2), Rat::from_int(3)]);

        let b = m(&[&[1, 1, 0]]);
        let ns = b.null_space();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rat = (0..3).map(|i| b[(0, i)].clone() * v[i].clone()).sum();
            assert!(dot.is_zero());
        }
    }
}
