use super::{ComplexMatrix, Permutation, C64};
use crate::error::{Error, Result};

/// Largest matrix order accepted by [`permanent`].
pub const MAX_PERMANENT_ORDER: usize = 20;

/// Matrix permanent by Ryser's formula, visiting column subsets in Gray-code
/// order so each step updates the running row sums with a single column.
///
/// Cost is `O(2^n n)`.
pub fn permanent(m: &ComplexMatrix) -> Result<C64> {
    let n = m.require_square()?;
    if n > MAX_PERMANENT_ORDER {
        return Err(Error::TooLarge(format!(
            "permanent of order {n} exceeds the supported bound {MAX_PERMANENT_ORDER}"
        )));
    }
    if n == 0 {
        return Ok(C64::new(1.0, 0.0));
    }

    let a = m.as_dmatrix();
    let mut row_sums = vec![C64::new(0.0, 0.0); n];
    let mut total = C64::new(0.0, 0.0);
    let mut gray: u32 = 0;
    for k in 1u32..(1u32 << n) {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        if gray & (1 << col) != 0 {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s += a[(i, col)];
            }
        } else {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s -= a[(i, col)];
            }
        }
        let prod = row_sums.iter().fold(C64::new(1.0, 0.0), |acc, s| acc * s);
        if gray.count_ones().is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

/// Reference permanent as the plain sum over all `n!` permutations.
pub fn permanent_naive(m: &ComplexMatrix) -> Result<C64> {
    let n = m.require_square()?;
    Ok(Permutation::all(n)
        .map(|p| (0..n).fold(C64::new(1.0, 0.0), |acc, i| acc * m[(i, p.image(i))]))
        .sum())
}
