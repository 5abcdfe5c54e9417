//! Exact linear algebra over [`CoeffElem`].

use super::CoeffElem;

pub type Matrix = Vec<Vec<CoeffElem>>;

/// Row echelon form by fraction-free (Bareiss) elimination, then scaled and
/// back-substituted to reduced row echelon form. Returns the nonzero rows
/// and their pivot columns.
pub fn rref(rows: &[Vec<CoeffElem>], ncols: usize) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = rows.to_vec();
    for r in &a {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let nrows = a.len();
    let mut prev = CoeffElem::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][col].clone();
        for i in r + 1..nrows {
            let lead = a[i][col].clone();
            for j in col + 1..ncols {
                let v = &(&piv * &a[i][j]) - &(&lead * &a[r][j]);
                a[i][j] = v.checked_div(&prev).expect("Bareiss divisor is a nonzero minor");
            }
            a[i][col] = CoeffElem::zero();
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    for (k, &col) in pivots.iter().enumerate().rev() {
        let inv = a[k][col].inv().expect("pivot is nonzero");
        for j in col..ncols {
            a[k][j] = &a[k][j] * &inv;
        }
        for i in 0..k {
            let f = a[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for j in col..ncols {
                let v = &a[i][j] - &(&f * &a[k][j]);
                a[i][j] = v;
            }
        }
    }
    (a, pivots)
}

pub fn rank(rows: &[Vec<CoeffElem>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// A basis of `{v : A v = 0}`, returned as the rows of a matrix in reduced
/// row echelon form, which makes it canonical for the subspace.
pub fn nullspace(rows: &[Vec<CoeffElem>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis: Matrix = free
        .iter()
        .map(|&f| {
            let mut v = vec![CoeffElem::zero(); ncols];
            v[f] = CoeffElem::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[k][f];
            }
            v
        })
        .collect();
    rref(&basis, ncols).0
}

pub fn dot(a: &[CoeffElem], b: &[CoeffElem]) -> CoeffElem {
    a.iter()
        .zip(b)
        .fold(CoeffElem::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// True when every row of `rows` annihilates `v`.
pub fn annihilates(rows: &[Vec<CoeffElem>], v: &[CoeffElem]) -> bool {
    rows.iter().all(|r| dot(r, v).is_zero())
}
