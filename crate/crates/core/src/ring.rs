//! Minimal commutative-ring interface, enough to expand determinants whose
//! entries are cohomology classes or symmetric functions.

use std::collections::HashMap;

pub trait RingElement: Clone {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

/// Determinant of a square matrix by Laplace expansion along rows, memoized on
/// the set of remaining columns (`O(2^n n)` ring products). An empty matrix has
/// determinant `one`.
pub fn determinant<T: RingElement>(matrix: &[Vec<T>], one: &T) -> T {
    let n = matrix.len();
    assert!(
        n <= 30,
        "determinant too large for the column-mask expansion"
    );
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    let zero = one.ring_sub(one);
    let mut memo: HashMap<u32, T> = HashMap::new();
    minor(matrix, 0, (1u32 << n) - 1, one, &zero, &mut memo)
}

fn minor<T: RingElement>(
    matrix: &[Vec<T>],
    row: usize,
    cols: u32,
    one: &T,
    zero: &T,
    memo: &mut HashMap<u32, T>,
) -> T {
    if row == matrix.len() {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = zero.clone();
    let mut position = 0;
    for j in 0..matrix.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &matrix[row][j];
        if !entry.ring_is_zero() {
            let sub = minor(matrix, row + 1, cols & !(1 << j), one, zero, memo);
            if !sub.ring_is_zero() {
                let term = entry.ring_mul(&sub);
                acc = if position % 2 == 0 {
                    acc.ring_add(&term)
                } else {
                    acc.ring_sub(&term)
                };
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}
