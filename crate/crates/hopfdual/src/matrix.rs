//! Dense exact matrices over a cyclotomic-rational field: fraction-free
//! determinants and ranks, Kronecker products, and the structured
//! root-power/Vandermonde-style builders the invertibility suites certify.

use crate::scalar::{rat_pow, CycloContext, CycloScalar, Rational, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the outer matrix must be invertible")]
    SingularHypothesis,
    #[error("zero base for a power-structured matrix")]
    ZeroBase,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Dense matrix with `CycloScalar` entries in row-major order.
#[derive(Clone, Debug)]
pub struct ExactMatrix {
    ctx: Arc<CycloContext>,
    rows: usize,
    cols: usize,
    entries: Vec<CycloScalar>,
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}
impl Eq for ExactMatrix {}

impl ExactMatrix {
    pub fn from_fn(
        ctx: &Arc<CycloContext>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycloScalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            ctx: Arc::clone(ctx),
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(ctx: &Arc<CycloContext>, rows: usize, cols: usize) -> Self {
        Self::from_fn(ctx, rows, cols, |_, _| ctx.zero())
    }

    pub fn identity(ctx: &Arc<CycloContext>, n: usize) -> Self {
        Self::from_fn(
            ctx,
            n,
            n,
            |i, j| if i == j { ctx.one() } else { ctx.zero() },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(&self.ctx, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix::from_fn(
            &self.ctx,
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = self.ctx.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                acc
            },
        ))
    }

    /// Kronecker product in lexicographic block order: entry at row
    /// `(i, j)`, column `(i', j')` is `self[i, i'] * other[j, j']`.
    pub fn kronecker(&self, other: &ExactMatrix) -> ExactMatrix {
        let (rb, cb) = (other.rows, other.cols);
        ExactMatrix::from_fn(&self.ctx, self.rows * rb, self.cols * cb, |r, c| {
            let (i, j) = (r / rb, r % rb);
            let (ip, jp) = (c / cb, c % cb);
            self.get(i, ip).mul(other.get(j, jp))
        })
    }

    /// Multiply every entry of each row by the lcm of the rational
    /// denominators appearing in it, so elimination runs over integer
    /// coordinate vectors. Returns the per-row factors.
    fn cleared_rows(&self) -> (Vec<CycloScalar>, Vec<BigInt>) {
        let mut entries = self.entries.clone();
        let mut factors = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut l = BigInt::one();
            for j in 0..self.cols {
                for c in self.get(i, j).coeffs() {
                    l = l.lcm(c.denom());
                }
            }
            if !l.is_one() {
                let f = Rational::from_integer(l.clone());
                for j in 0..self.cols {
                    entries[i * self.cols + j] = entries[i * self.cols + j].scale(&f);
                }
            }
            factors.push(l);
        }
        (entries, factors)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<CycloScalar, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.ctx.one());
        }
        let (mut m, factors) = self.cleared_rows();
        let at = |m: &Vec<CycloScalar>, i: usize, j: usize| -> CycloScalar { m[i * n + j].clone() };
        let mut sign = false;
        let mut prev_inv = self.ctx.one();
        for k in 0..n - 1 {
            let pivot_row = (k..n).find(|&r| !m[r * n + k].is_zero());
            let Some(pr) = pivot_row else {
                return Ok(self.ctx.zero());
            };
            if pr != k {
                for j in 0..n {
                    m.swap(pr * n + j, k * n + j);
                }
                sign = !sign;
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                let lead = at(&m, i, k);
                for j in k + 1..n {
                    let t = pivot.mul(&at(&m, i, j)).sub(&lead.mul(&at(&m, k, j)));
                    m[i * n + j] = t.mul(&prev_inv);
                }
                m[i * n + k] = self.ctx.zero();
            }
            prev_inv = pivot.inv().expect("pivot is nonzero");
        }
        let mut det = at(&m, n - 1, n - 1);
        if sign {
            det = det.neg();
        }
        let mut denom = BigInt::one();
        for f in factors {
            denom *= f;
        }
        Ok(det.scale(&Rational::new(BigInt::one(), denom)))
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared_rows();
        let (rows, cols) = (self.rows, self.cols);
        let at =
            |m: &Vec<CycloScalar>, i: usize, j: usize| -> CycloScalar { m[i * cols + j].clone() };
        let mut rank = 0usize;
        let mut prev_inv = self.ctx.one();
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot_row = (rank..rows).find(|&r| !m[r * cols + col].is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for j in 0..cols {
                    m.swap(pr * cols + j, rank * cols + j);
                }
            }
            let pivot = at(&m, rank, col);
            for i in rank + 1..rows {
                let lead = at(&m, i, col);
                for j in col + 1..cols {
                    let t = pivot.mul(&at(&m, i, j)).sub(&lead.mul(&at(&m, rank, j)));
                    m[i * cols + j] = t.mul(&prev_inv);
                }
                m[i * cols + col] = self.ctx.zero();
            }
            prev_inv = pivot.inv().expect("pivot is nonzero");
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> Result<bool, MatrixError> {
        Ok(!self.det()?.is_zero())
    }

    /// CSV dump with exact-scalar cells (quoted, since the cells contain commas).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("\"{}\"", self.get(i, j).exact_string()))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// The `2r x 2r` matrix with rows `(e, s)` and columns `(e', s')` in
/// `2 x r` lexicographic order and entries
/// `base^{(-1)^e (shift_num + shift_den (2s'+e'))} (a + 2s'+e')^s`,
/// with `0^0 = 1`. Passing the base as a `shift_den`-th root keeps every
/// exponent an integer.
pub fn build_shifted_matrix(
    r: usize,
    base: &CycloScalar,
    a: &Rational,
    shift_num: i64,
    shift_den: u64,
) -> Result<ExactMatrix, MatrixError> {
    if base.is_zero() {
        return Err(MatrixError::ZeroBase);
    }
    let ctx = Arc::clone(base.ctx());
    let n = 2 * r;
    let mut m = ExactMatrix::zero(&ctx, n, n);
    for e in 0..2usize {
        for s in 0..r {
            let row = e * r + s;
            for ep in 0..2usize {
                for sp in 0..r {
                    let col = ep * r + sp;
                    let node = 2 * sp as i64 + ep as i64;
                    let mut exp = shift_num + shift_den as i64 * node;
                    if e == 1 {
                        exp = -exp;
                    }
                    let power = base.pow_int(exp)?;
                    let shifted = a + Rational::from_integer(BigInt::from(node));
                    let weight = rat_pow(&shifted, s as u64);
                    m.set(row, col, power.scale(&weight));
                }
            }
        }
    }
    Ok(m)
}

/// Outcome of assembling the block matrix `(a_{i,i'} b_{i',j,j'})` from an
/// invertible outer matrix and the per-column inner blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCriterion {
    pub assembled_invertible: bool,
    pub all_blocks_invertible: bool,
}

impl BlockCriterion {
    /// The assembled matrix is invertible exactly when every block is.
    pub fn consistent(&self) -> bool {
        self.assembled_invertible == self.all_blocks_invertible
    }
}

/// Assemble `C = (a_{i,i'} b_{i',j,j'})` and report both its invertibility
/// and the invertibility of all blocks; the two must agree when `A` is
/// invertible.
pub fn verify_block_criterion(
    a: &ExactMatrix,
    blocks: &[ExactMatrix],
) -> Result<BlockCriterion, MatrixError> {
    let g1 = a.rows();
    if a.cols() != g1 {
        return Err(MatrixError::NotSquare(a.rows(), a.cols()));
    }
    if blocks.len() != g1 {
        return Err(MatrixError::DimensionMismatch(format!(
            "outer size {} vs {} blocks",
            g1,
            blocks.len()
        )));
    }
    let g2 = blocks.first().map(|b| b.rows()).unwrap_or(0);
    for b in blocks {
        if b.rows() != g2 || b.cols() != g2 {
            return Err(MatrixError::DimensionMismatch(format!(
                "inner block is {}x{}, expected {}x{}",
                b.rows(),
                b.cols(),
                g2,
                g2
            )));
        }
    }
    if !a.is_invertible()? {
        return Err(MatrixError::SingularHypothesis);
    }
    let ctx = a.ctx();
    let c = ExactMatrix::from_fn(ctx, g1 * g2, g1 * g2, |row, col| {
        let (i, j) = (row / g2, row % g2);
        let (ip, jp) = (col / g2, col % g2);
        a.get(i, ip).mul(blocks[ip].get(j, jp))
    });
    let assembled_invertible = c.is_invertible()?;
    let mut all_blocks_invertible = true;
    for b in blocks {
        if !b.is_invertible()? {
            all_blocks_invertible = false;
        }
    }
    Ok(BlockCriterion {
        assembled_invertible,
        all_blocks_invertible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn ctx3() -> Arc<CycloContext> {
        CycloContext::new(3)
    }

    fn from_rows(ctx: &Arc<CycloContext>, rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_fn(ctx, rows.len(), rows[0].len(), |i, j| {
            ctx.from_int(rows[i][j])
        })
    }

    #[test]
    fn determinant_basics() {
        let ctx = ctx3();
        assert!(ExactMatrix::identity(&ctx, 3).det().unwrap().is_one());
        let m = ExactMatrix::from_fn(&ctx, 2, 2, |i, j| match (i, j) {
            (0, 0) => ctx.from_int(1),
            (0, 1) => ctx.from_int(2),
            (1, 0) => ctx.from_int(1),
            (1, 1) => ctx.from_rational(ratio(1, 2)),
            _ => unreachable!(),
        });
        assert_eq!(m.det().unwrap(), ctx.from_rational(ratio(-3, 2)));
        assert!(
            from_rows(&ctx, &[&[1, 2], &[3, 4]])
                .transpose()
                .det()
                .unwrap()
                == ctx.from_int(-2)
        );
    }

    #[test]
    fn vandermonde_on_cube_roots_is_invertible() {
        let ctx = ctx3();
        let nodes = [ctx.one(), ctx.zeta(), ctx.zeta().pow_int(2).unwrap()];
        let v = ExactMatrix::from_fn(&ctx, 3, 3, |i, j| nodes[j].pow_int(i as i64).unwrap());
        let det = v.det().unwrap();
        // oracle: product of pairwise node differences
        let mut expected = ctx.one();
        for i in 0..3 {
            for j in 0..i {
                expected = expected.mul(&nodes[i].sub(&nodes[j]));
            }
        }
        assert_eq!(det, expected);
        assert!(!det.is_zero());
    }

    #[test]
    fn rank_basics() {
        let ctx = ctx3();
        assert_eq!(ExactMatrix::zero(&ctx, 2, 3).rank(), 0);
        assert_eq!(ExactMatrix::identity(&ctx, 4).rank(), 4);
        assert_eq!(from_rows(&ctx, &[&[1, 1], &[2, 2]]).rank(), 1);
        let m = from_rows(&ctx, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kronecker_shapes_and_dets() {
        let ctx = ctx3();
        let a = from_rows(&ctx, &[&[1, 1], &[0, 1]]);
        let b = from_rows(&ctx, &[&[2, 0], &[0, 3]]);
        let k = a.kronecker(&ExactMatrix::identity(&ctx, 2));
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert!(!a.kronecker(&b).det().unwrap().is_zero());
        let singular = from_rows(&ctx, &[&[1, 1], &[1, 1]]);
        assert!(a.kronecker(&singular).rank() < 4);
        // det(A (x) B) = det(A)^n det(B)^m for 2x2 blocks
        let lhs = a.kronecker(&b).det().unwrap();
        let rhs = a
            .det()
            .unwrap()
            .pow_int(2)
            .unwrap()
            .mul(&b.det().unwrap().pow_int(2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_is_multiplicative() {
        let ctx = ctx3();
        let a = from_rows(&ctx, &[&[1, 2], &[3, 5]]);
        let b = from_rows(&ctx, &[&[2, 1], &[7, 4]]);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(ab.det().unwrap(), a.det().unwrap().mul(&b.det().unwrap()));
    }

    #[test]
    fn shifted_matrix_small_instance() {
        let ctx = ctx3();
        let m = build_shifted_matrix(1, &ctx.from_int(2), &rat(0), 0, 1).unwrap();
        assert_eq!(m.get(0, 0), &ctx.from_int(1));
        assert_eq!(m.get(0, 1), &ctx.from_int(2));
        assert_eq!(m.get(1, 0), &ctx.from_int(1));
        assert_eq!(m.get(1, 1), &ctx.from_rational(ratio(1, 2)));
        assert!(!m.det().unwrap().is_zero());
    }

    #[test]
    fn shifted_matrix_base_one_is_singular() {
        let ctx = ctx3();
        let m = build_shifted_matrix(1, &ctx.one(), &ratio(1, 2), 0, 1).unwrap();
        assert!(m.det().unwrap().is_zero());
        assert!(build_shifted_matrix(1, &ctx.zero(), &rat(0), 0, 1).is_err());
    }

    #[test]
    fn shifted_matrix_fractional_shift() {
        let ctx = ctx3();
        // r=2, base 3 standing for lambda^{1/2}, a = 1/2, b = 1/2
        let m = build_shifted_matrix(2, &ctx.from_int(3), &ratio(1, 2), 1, 2).unwrap();
        assert!(!m.det().unwrap().is_zero());
    }

    #[test]
    fn block_criterion_examples() {
        let ctx = ctx3();
        let id2 = ExactMatrix::identity(&ctx, 2);
        let ok = verify_block_criterion(&id2, &[id2.clone(), id2.clone()]).unwrap();
        assert!(ok.assembled_invertible && ok.consistent());

        let a = from_rows(&ctx, &[&[1, 1], &[0, 1]]);
        let singular = from_rows(&ctx, &[&[1, 1], &[1, 1]]);
        let bad = verify_block_criterion(&a, &[id2.clone(), singular]).unwrap();
        assert!(!bad.assembled_invertible && bad.consistent());

        let diag = from_rows(&ctx, &[&[2, 0], &[0, 3]]);
        let b1 = from_rows(&ctx, &[&[1, 2], &[3, 4]]);
        let b2 = from_rows(&ctx, &[&[0, 1], &[1, 0]]);
        let good = verify_block_criterion(&diag, &[b1, b2]).unwrap();
        assert!(good.assembled_invertible && good.consistent());

        assert!(matches!(
            verify_block_criterion(&singular_outer(&ctx), &[id2.clone(), id2]),
            Err(MatrixError::SingularHypothesis)
        ));
    }

    fn singular_outer(ctx: &Arc<CycloContext>) -> ExactMatrix {
        from_rows(ctx, &[&[1, 1], &[1, 1]])
    }

    #[test]
    fn csv_cells_are_quoted() {
        let ctx = ctx3();
        let m = ExactMatrix::identity(&ctx, 1);
        assert_eq!(m.to_csv(), "\"N=3;[1,0]\"\n");
    }
}
