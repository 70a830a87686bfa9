//! Exact rank of integer vectors by fraction-free elimination.
//!
//! Rows are kept in echelon form. Reducing a row against a pivot row uses
//! `r ← p·r − r[c]·b` followed by division by the row content, so entries
//! stay integral and small for the `{-1, 0, 1}` inputs seen here.

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Incrementally built row echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector; returns whether it increased the rank.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut r: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (pivot, basis) in &self.rows {
            let a = r[*pivot];
            if a == 0 {
                continue;
            }
            let p = basis[*pivot];
            for (x, &b) in r.iter_mut().zip(basis) {
                *x = x
                    .checked_mul(p)
                    .and_then(|x| x.checked_sub(a.checked_mul(b)?))
                    .expect("integer elimination overflowed i128");
            }
            normalize(&mut r);
        }
        match r.iter().position(|&x| x != 0) {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.len());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Dimension of the affine hull of `points`; `None` for no points.
pub fn affine_dimension<'a>(points: impl IntoIterator<Item = &'a [i64]>) -> Option<usize> {
    let mut it = points.into_iter();
    let base = it.next()?;
    let mut e = Echelon::new(base.len());
    let cap = base.len();
    for p in it {
        let diff: Vec<i64> = p.iter().zip(base).map(|(a, b)| a - b).collect();
        e.insert(&diff);
        if e.rank() == cap {
            break;
        }
    }
    Some(e.rank())
}
