//! Exact row reduction on small dense rational matrices.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank(rows: Vec<Vec<Rational>>) -> usize {
    rref(rows).1.len()
}

/// Eliminates the pivot columns of `basis` (an RREF) from `row`.
pub(crate) fn reduce_by(row: &mut [Rational], basis: &[Vec<Rational>], pivots: &[usize]) {
    for (b, &p) in basis.iter().zip(pivots) {
        if !row[p].is_zero() {
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
    }
}

/// Scales so that the first nonzero entry among `row[..lead]` has absolute value 1.
/// Returns false if that prefix is all zero.
pub(crate) fn normalize_leading(row: &mut [Rational], lead: usize) -> bool {
    let Some(first) = row[..lead].iter().find(|x| !x.is_zero()) else {
        return false;
    };
    let s = Rational::one() / num_traits::Signed::abs(first);
    for x in row.iter_mut() {
        *x = &*x * &s;
    }
    true
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let (a, pa) = rref(m(&[&[2, 4, 2], &[1, 2, 3]]));
        let (b, pb) = rref(m(&[&[1, 2, 3], &[3, 6, 5], &[0, 0, 1]]));
        assert_eq!(a, b);
        assert_eq!(pa, vec![0, 2]);
        assert_eq!(pb, pa);
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(m(&[&[1, 1], &[2, 2], &[0, 0]])), 1);
        assert_eq!(rank(m(&[&[1, 0], &[0, 1]])), 2);
    }
}
