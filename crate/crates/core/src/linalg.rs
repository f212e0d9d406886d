//! Exact integer linear algebra: Smith normal form, image membership, and
//! rational rank. This is the oracle behind every graded-piece computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    /// Assemble from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.entries[i][j] = v.clone();
            }
        }
        m
    }
}

/// Smith normal form data: positive diagonal invariants in divisibility order,
/// plus the left transform `U` with `U * A * V = diag`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
}

pub fn smith_normal_form(matrix: &IntMatrix) -> SmithForm {
    let mut a = matrix.clone();
    let mut u = IntMatrix::identity(matrix.rows);
    loop {
        diagonalize(&mut a, &mut u);
        if enforce_divisibility(&mut a, &mut u) {
            break;
        }
    }
    let mut diag = Vec::new();
    for k in 0..a.rows.min(a.cols) {
        if !a.entries[k][k].is_zero() {
            diag.push(a.entries[k][k].clone());
        }
    }
    debug_assert!(diag
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    SmithForm {
        rank: diag.len(),
        diag,
        left: u,
    }
}

fn swap_rows(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize) {
    a.entries.swap(i, j);
    u.entries.swap(i, j);
}

fn negate_row(a: &mut IntMatrix, u: &mut IntMatrix, i: usize) {
    for v in &mut a.entries[i] {
        *v = -&*v;
    }
    for v in &mut u.entries[i] {
        *v = -&*v;
    }
}

/// row_i -= q * row_k
fn sub_row(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let row_k: Vec<BigInt> = a.entries[k].clone();
    for (v, w) in a.entries[i].iter_mut().zip(row_k.iter()) {
        *v -= q * w;
    }
    let urow_k: Vec<BigInt> = u.entries[k].clone();
    for (v, w) in u.entries[i].iter_mut().zip(urow_k.iter()) {
        *v -= q * w;
    }
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    for row in &mut a.entries {
        row.swap(i, j);
    }
}

/// col_j -= q * col_k
fn sub_col(a: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in &mut a.entries {
        let w = row[k].clone();
        row[j] -= q * &w;
    }
}

fn diagonalize(a: &mut IntMatrix, u: &mut IntMatrix) {
    let limit = a.rows.min(a.cols);
    for k in 0..limit {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..a.rows {
            for j in k..a.cols {
                if a.entries[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => a.entries[i][j].abs() < a.entries[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return;
        };
        swap_rows(a, u, k, pi);
        swap_cols(a, k, pj);
        loop {
            if a.entries[k][k].is_negative() {
                negate_row(a, u, k);
            }
            let mut restart = false;
            for i in k + 1..a.rows {
                if a.entries[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a.entries[i][k].div_mod_floor(&a.entries[k][k]);
                sub_row(a, u, i, k, &q);
                if !r.is_zero() {
                    swap_rows(a, u, i, k);
                    restart = true;
                }
            }
            if restart {
                continue;
            }
            for j in k + 1..a.cols {
                if a.entries[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a.entries[k][j].div_mod_floor(&a.entries[k][k]);
                sub_col(a, j, k, &q);
                if !r.is_zero() {
                    swap_cols(a, k, j);
                    restart = true;
                }
            }
            if restart {
                continue;
            }
            let col_clear = (k + 1..a.rows).all(|i| a.entries[i][k].is_zero());
            let row_clear = (k + 1..a.cols).all(|j| a.entries[k][j].is_zero());
            if col_clear && row_clear {
                break;
            }
        }
    }
}

/// Returns true when the diagonal already satisfies the divisibility chain;
/// otherwise couples the first offending pair and returns false so the caller
/// re-diagonalizes.
fn enforce_divisibility(a: &mut IntMatrix, u: &mut IntMatrix) -> bool {
    let limit = a.rows.min(a.cols);
    for i in 0..limit.saturating_sub(1) {
        let d_i = a.entries[i][i].clone();
        let d_next = a.entries[i + 1][i + 1].clone();
        if d_i.is_zero() || d_next.is_zero() {
            continue;
        }
        if (&d_next % &d_i).is_zero() {
            continue;
        }
        // row_i += row_{i+1} puts d_{i+1} next to d_i so the gcd surfaces
        let minus_one = -BigInt::one();
        sub_row(a, u, i, i + 1, &minus_one);
        return false;
    }
    true
}

/// Does `v` lie in the integer column span of `matrix`?
pub fn in_image(matrix: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(v.len(), matrix.rows);
    let snf = smith_normal_form(matrix);
    let w: Vec<BigInt> = (0..matrix.rows)
        .map(|i| {
            (0..matrix.rows)
                .map(|j| &snf.left.entries[i][j] * &v[j])
                .sum()
        })
        .collect();
    for (i, wi) in w.iter().enumerate() {
        if i < snf.rank {
            if !(wi % &snf.diag[i]).is_zero() {
                return false;
            }
        } else if !wi.is_zero() {
            return false;
        }
    }
    true
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rational_rank(entries: &[Vec<BigRational>]) -> usize {
    let rows = entries.len();
    if rows == 0 {
        return 0;
    }
    let cols = entries[0].len();
    let mut m: Vec<Vec<BigRational>> = entries.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            let top_row = m[rank].clone();
            for (v, w) in m[r].iter_mut().zip(top_row.iter()) {
                *v -= &factor * w;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.entries[i][j] = BigInt::from(v);
            }
        }
        m
    }

    fn diag_i64(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diag
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    fn det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for (idx, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &m.entries[rows[0]][c] * det(m, &rows[1..], &sub_cols);
            if idx % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    /// Independent oracle: the k-th determinant divisor (gcd of all k-minors)
    /// equals d_1 * ... * d_k.
    fn determinant_divisor(m: &IntMatrix, k: usize) -> BigInt {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows, k) {
            for cs in subsets(m.cols, k) {
                g = g.gcd(&det(m, &rs, &cs));
            }
        }
        g
    }

    #[test]
    fn single_entry() {
        assert_eq!(diag_i64(&mat(&[&[24]])), vec![24]);
        assert_eq!(diag_i64(&mat(&[&[-12]])), vec![12]);
        assert_eq!(diag_i64(&mat(&[&[0]])), Vec::<i64>::new());
    }

    #[test]
    fn known_invariants() {
        assert_eq!(diag_i64(&mat(&[&[2, 4], &[6, 8]])), vec![2, 4]);
        assert_eq!(diag_i64(&mat(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(diag_i64(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), vec![1, 3]);
    }

    #[test]
    fn matches_determinant_divisors() {
        let samples = [
            mat(&[&[6, 4], &[2, 8]]),
            mat(&[&[3, 0, -1], &[0, 5, 2]]),
            mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]),
            mat(&[&[0, 0], &[0, 0]]),
        ];
        for m in &samples {
            let snf = smith_normal_form(m);
            let mut product = BigInt::one();
            for (k, d) in snf.diag.iter().enumerate() {
                product *= d;
                assert_eq!(
                    determinant_divisor(m, k + 1),
                    product,
                    "determinant divisor mismatch at k={} for {:?}",
                    k + 1,
                    m
                );
            }
            // the (rank+1)-st determinant divisor vanishes
            if snf.rank < m.rows.min(m.cols) {
                assert!(determinant_divisor(m, snf.rank + 1).is_zero());
            }
        }
    }

    #[test]
    fn left_transform_is_consistent() {
        // U*A*V = D implies image membership tests work through U
        let m = mat(&[&[2, 0], &[0, 3]]);
        assert!(in_image(&m, &[BigInt::from(2), BigInt::from(3)]));
        assert!(in_image(&m, &[BigInt::from(4), BigInt::from(0)]));
        assert!(!in_image(&m, &[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn membership_in_index_two_subgroup() {
        let m = mat(&[&[2]]);
        assert!(!in_image(&m, &[BigInt::from(1)]));
        assert!(in_image(&m, &[BigInt::from(-4)]));
    }

    #[test]
    fn rational_rank_examples() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let one = BigRational::one();
        let zero = BigRational::zero();
        assert_eq!(
            rational_rank(&[vec![one.clone(), half.clone()], vec![one.clone(), half.clone()]]),
            1
        );
        assert_eq!(rational_rank(&[vec![zero.clone(); 3]]), 0);
        assert_eq!(
            rational_rank(&[
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), one.clone()]
            ]),
            2
        );
    }
}
