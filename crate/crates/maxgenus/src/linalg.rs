//! Exact dense linear algebra over the coefficient field: rank, determinant
//! and kernel via Gaussian elimination (F_p) or fraction-free Bareiss
//! elimination (rationals).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};

/// Dense row-major matrix over one coefficient field.
#[derive(Clone, Debug)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix-vector product A v.
    pub fn apply(&self, v: &[Coeff]) -> Vec<Coeff> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }

    /// Submatrix keeping the given rows.
    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, keep.len(), self.cols);
        for (i, &r) in keep.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Prime(_) => {
                let mut m = self.clone();
                m.row_echelon().0
            }
            FieldSpec::Rational => self.rank_bareiss(),
        }
    }

    /// Determinant over F_p. Over the rationals only singularity is exposed
    /// (use `rank`), so this returns a domain error there.
    pub fn det(&self) -> Result<Coeff> {
        if self.rows != self.cols {
            return Err(Error::Domain("determinant of a non-square matrix".into()));
        }
        match self.field {
            FieldSpec::Prime(_) => {
                let mut m = self.clone();
                let (rank, det) = m.row_echelon();
                if rank < self.rows {
                    Ok(self.field.zero())
                } else {
                    Ok(det)
                }
            }
            FieldSpec::Rational => Err(Error::Domain(
                "determinants are recorded only over F_p".into(),
            )),
        }
    }

    /// In-place forward elimination. Returns (rank, product of pivots adjusted
    /// by row-swap signs), the latter being the determinant for square full
    /// rank input.
    fn row_echelon(&mut self) -> (usize, Coeff) {
        let f = self.field;
        let mut det = f.one();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..self.cols {
                    self.data
                        .swap(src * self.cols + c, pivot_row * self.cols + c);
                }
                det = f.neg(&det);
            }
            let pivot = self.get(pivot_row, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for r in pivot_row + 1..self.rows {
                let factor = f.mul(self.get(r, col), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..self.cols {
                    let sub = f.mul(self.get(pivot_row, c), &factor);
                    let v = f.sub(self.get(r, c), &sub);
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        (pivot_row, det)
    }

    /// Rank by fraction-free Bareiss elimination on a denominator-cleared
    /// integer copy; keeps intermediate entries polynomial-sized.
    fn rank_bareiss(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    if let Coeff::Rat(q) = self.get(r, c) {
                        lcm = lcm.lcm(q.denom());
                    }
                }
                (0..self.cols)
                    .map(|c| match self.get(r, c) {
                        Coeff::Rat(q) => q.numer() * (&lcm / q.denom()),
                        Coeff::Fp(_) => unreachable!("rational matrix"),
                    })
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(src, pivot_row);
            for r in pivot_row + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[pivot_row][col].clone();
            if prev.is_negative() {
                prev = -prev;
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Basis of the right kernel {v : A v = 0} via reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let mut m = self.clone();
        // full reduction so free columns read off directly
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(src * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("nonzero pivot");
            for c in col..m.cols {
                let v = f.mul(m.get(pivot_row, c), &inv);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let sub = f.mul(m.get(pivot_row, c), &factor);
                    let v = f.sub(m.get(r, c), &sub);
                    m.set(r, c, v);
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); m.cols];
            v[free] = f.one();
            for &(r, c) in &pivots {
                v[c] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn mat(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, field.from_i64(entries[r * cols + c]));
            }
        }
        m
    }

    #[test]
    fn small_rank_and_det() {
        let f = fp(7);
        let m = mat(f, 2, 2, &[1, 2, 3, 4]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det().unwrap(), f.from_i64(-2));
        let s = mat(f, 2, 2, &[1, 2, 2, 4]);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.det().unwrap(), f.zero());
    }

    #[test]
    fn bareiss_rank_matches_gauss() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let big = fp(32003);
        for _ in 0..20 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-3..=3)).collect();
            let a = mat(FieldSpec::Rational, rows, cols, &entries);
            // over a huge prime small integer matrices have the same rank
            let b = mat(big, rows, cols, &entries);
            assert_eq!(a.rank(), b.rank());
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = FieldSpec::Rational;
        let m = mat(f, 2, 4, &[1, 2, 3, 4, 2, 4, 6, 8]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 3);
        for v in &ker {
            assert!(m
                .apply(v)
                .iter()
                .all(|c| matches!(c, Coeff::Rat(q) if q == &BigRational::zero())));
        }
    }

    #[test]
    fn det_unsupported_over_rationals() {
        let m = mat(FieldSpec::Rational, 1, 1, &[3]);
        assert!(m.det().is_err());
        assert_eq!(m.rank(), 1);
    }
}
