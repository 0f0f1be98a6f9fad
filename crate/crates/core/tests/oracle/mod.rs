//! Graded dimensions of the canonical filtration of a nilpotent `T` with
//! Jordan type `λ`, computed by literal linear algebra over `ℚ`:
//! `V_{≥a} = Σ_{j≥max(0,a)} T^j(ker T^{2j−a+1})`.

use num_rational::Rational64 as Q;

type Mat = Vec<Vec<Q>>;

fn zero() -> Q {
    Q::from_integer(0)
}

/// The nilpotent Jordan matrix with blocks `λ`: `T e_k = e_{k-1}` inside a block.
pub fn jordan(lambda: &[u32]) -> Mat {
    let n: usize = lambda.iter().map(|&x| x as usize).sum();
    let mut t = vec![vec![zero(); n]; n];
    let mut start = 0;
    for &b in lambda {
        for k in 1..b as usize {
            t[start + k - 1][start + k] = Q::from_integer(1);
        }
        start += b as usize;
    }
    t
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = vec![vec![zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == zero() {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn power(t: &Mat, e: usize) -> Mat {
    let n = t.len();
    let mut p: Mat = (0..n).map(|i| (0..n).map(|j| Q::from_integer((i == j) as i64)).collect()).collect();
    for _ in 0..e {
        p = mul(&p, t);
    }
    p
}

fn apply(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut Mat) -> Vec<usize> {
    let (rows, cols) = (m.len(), m.first().map_or(0, |r| r.len()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::from_integer(1) / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != zero() {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

fn rank(vectors: &[Vec<Q>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// A basis of the null space of `a`.
fn kernel(a: &Mat) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m = a.clone();
    let pivots = rref(&mut m);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero(); n];
            v[free] = Q::from_integer(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][free];
            }
            v
        })
        .collect()
}

fn dim_at_least(t: &Mat, a: i64) -> usize {
    let n = t.len() as i64;
    let mut span = Vec::new();
    for j in a.max(0)..=n {
        let e = (2 * j - a + 1) as usize;
        let tj = power(t, j as usize);
        for v in kernel(&power(t, e)) {
            span.push(apply(&tj, &v));
        }
    }
    rank(&span)
}

/// `(m, [f_{−m}, …, f_m])` with `f_a = dim V_{≥a} − dim V_{≥a+1}`.
pub fn graded_dimensions(lambda: &[u32]) -> (u32, Vec<u32>) {
    let t = jordan(lambda);
    let n = t.len() as i64;
    let dims: Vec<usize> = (-n - 1..=n + 2).map(|a| dim_at_least(&t, a)).collect();
    let f_at = |a: i64| (dims[(a + n + 1) as usize] - dims[(a + n + 2) as usize]) as u32;
    let m = (0..=n).rev().find(|&a| f_at(a) != 0 || f_at(-a) != 0).unwrap_or(0);
    (m as u32, (-m..=m).map(f_at).collect())
}

/// Partitions admissible for an orthogonal group: even parts occur an even
/// number of times.
pub fn orthogonal_admissible(lambda: &[u32]) -> bool {
    lambda.iter().filter(|&&p| p % 2 == 0).all(|&p| lambda.iter().filter(|&&q| q == p).count() % 2 == 0)
}
