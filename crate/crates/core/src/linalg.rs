//! Exact rank computation over ℚ via fraction-free (Bareiss) Gaussian
//! elimination on integer matrices. Entries grow as minors, so everything
//! runs over `BigInt`.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over ℚ of an integer matrix given as rows.
pub fn rank_bigint(rows: &[Vec<BigInt>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row = 0;

    for col in 0..n {
        if row >= m {
            break;
        }
        // pivot: smallest nonzero magnitude keeps growth down
        let pivot = (row..m)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].magnitude().clone());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in row + 1..m {
            for c in col + 1..n {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank over ℚ of an `i64` matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    rank_bigint(&big)
}
