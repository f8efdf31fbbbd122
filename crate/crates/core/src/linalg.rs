use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::Field;

/// Dense integer matrix. Boundary matrices are sparse with entries in
/// {-1, 0, 1}, but the complexes here are small enough that dense
/// exact elimination is the simplest thing that is fast enough.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    /// Keeps the rows whose indices satisfy `keep`, in order.
    pub fn filter_rows(&self, keep: impl Fn(usize) -> bool) -> IntMatrix {
        let kept: Vec<usize> = (0..self.rows).filter(|&i| keep(i)).collect();
        let mut out = IntMatrix::zero(kept.len(), self.cols);
        for (new_i, &old_i) in kept.iter().enumerate() {
            let src = &self.data[old_i * self.cols..(old_i + 1) * self.cols];
            out.data[new_i * self.cols..(new_i + 1) * self.cols].copy_from_slice(src);
        }
        out
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Rational => {
                rank_bareiss_i128(self).unwrap_or_else(|| rank_bareiss_bigint(self))
            }
            Field::Gf(p) => rank_gf(self, p),
        }
    }
}

/// Fraction-free (Bareiss) elimination in i128. Returns None on overflow,
/// in which case the caller retries with big integers.
fn rank_bareiss_i128(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    if rows == 0 || cols == 0 {
        return Some(0);
    }
    let mut a = m.data.clone();
    let at = |a: &Vec<i128>, i: usize, j: usize| a[i * cols + j];
    let steps = rows.min(cols);
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == steps {
            break;
        }
        // pivot: smallest nonzero magnitude in this column keeps growth down
        let mut pivot_row = None;
        for i in row..rows {
            let v = at(&a, i, col);
            if v != 0 {
                match pivot_row {
                    None => pivot_row = Some(i),
                    Some(p) if v.abs() < at(&a, p, col).abs() => pivot_row = Some(i),
                    _ => {}
                }
            }
        }
        let Some(p) = pivot_row else { continue };
        if p != row {
            for j in 0..cols {
                a.swap(row * cols + j, p * cols + j);
            }
        }
        let pivot = at(&a, row, col);
        for i in (row + 1)..rows {
            let head = at(&a, i, col);
            for j in (col + 1)..cols {
                let t1 = pivot.checked_mul(at(&a, i, j))?;
                let t2 = head.checked_mul(at(&a, row, j))?;
                let num = t1.checked_sub(t2)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[i * cols + j] = num / prev;
            }
            a[i * cols + col] = 0;
        }
        prev = pivot;
        row += 1;
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut a: Vec<BigInt> = m.data.iter().map(|&v| BigInt::from(v)).collect();
    let steps = rows.min(cols);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == steps {
            break;
        }
        let mut pivot_row = None;
        for i in row..rows {
            if !a[i * cols + col].is_zero() {
                match pivot_row {
                    None => pivot_row = Some(i),
                    Some(p) => {
                        if a[i * cols + col].abs() < a[p * cols + col].abs() {
                            pivot_row = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = pivot_row else { continue };
        if p != row {
            for j in 0..cols {
                a.swap(row * cols + j, p * cols + j);
            }
        }
        let pivot = a[row * cols + col].clone();
        for i in (row + 1)..rows {
            let head = a[i * cols + col].clone();
            for j in (col + 1)..cols {
                let num = &pivot * &a[i * cols + j] - &head * &a[row * cols + j];
                a[i * cols + j] = num / &prev;
            }
            a[i * cols + col] = BigInt::zero();
        }
        prev = pivot;
        row += 1;
        rank += 1;
    }
    rank
}

fn rank_gf(m: &IntMatrix, p: u32) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    if rows == 0 || cols == 0 {
        return 0;
    }
    let p = p as u64;
    let reduce = |v: i128| -> u64 {
        let r = (v % p as i128 + p as i128) % p as i128;
        r as u64
    };
    let mut a: Vec<u64> = m.data.iter().map(|&v| reduce(v)).collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&i| a[i * cols + col] != 0) else {
            continue;
        };
        if pr != row {
            for j in 0..cols {
                a.swap(row * cols + j, pr * cols + j);
            }
        }
        let inv = mod_inverse(a[row * cols + col], p);
        for i in (row + 1)..rows {
            let head = a[i * cols + col];
            if head == 0 {
                continue;
            }
            let factor = head * inv % p;
            for j in col..cols {
                let sub = factor * a[row * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Inverse of a mod prime p, via extended Euclid. a must be nonzero mod p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "input not invertible");
    let inv = (old_s % p as i128 + p as i128) % p as i128;
    inv as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GUARD_PRIME;

    fn from_rows(rows: &[&[i128]]) -> IntMatrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn rank_of_empty_and_zero() {
        assert_eq!(IntMatrix::zero(0, 5).rank(Field::Rational), 0);
        assert_eq!(IntMatrix::zero(5, 0).rank(Field::Rational), 0);
        assert_eq!(IntMatrix::zero(3, 3).rank(Field::Rational), 0);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(Field::Rational), 2);
        assert_eq!(m.rank(Field::Gf(GUARD_PRIME)), 2);
    }

    #[test]
    fn rank_full_identity() {
        let m = from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(m.rank(Field::Rational), 3);
        assert_eq!(m.rank(Field::Gf(2)), 3);
    }

    #[test]
    fn characteristic_changes_rank() {
        // Rows sum to 0 mod 2 only.
        let m = from_rows(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(Field::Rational), 2);
        assert_eq!(m.rank(Field::Gf(2)), 1);
        assert_eq!(m.rank(Field::Gf(3)), 2);
    }

    #[test]
    fn bigint_fallback_agrees_with_gf_on_huge_entries() {
        // Entries near i128::MAX / 2 force the checked path to bail out.
        let big = i128::MAX / 2;
        let m = from_rows(&[&[big, big - 1, 1], &[big - 1, big, 0], &[1, 0, 1]]);
        assert!(rank_bareiss_i128(&m).is_none());
        let r = m.rank(Field::Rational);
        assert_eq!(r, rank_bareiss_bigint(&m));
        assert_eq!(r, 3);
    }

    #[test]
    fn mod_inverse_small_cases() {
        for p in [2u64, 3, 7, 32003] {
            for a in 1..p.min(50) {
                assert_eq!(a * mod_inverse(a, p) % p, 1);
            }
        }
    }
}
