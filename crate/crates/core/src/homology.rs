//! Finitely generated abelian groups from integer presentation matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// `Z^rank + Z/t_1 + ... + Z/t_k` with `t_i | t_{i+1}` and every `t_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|x| x.to_string()))
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        match n.abs() {
            z if z.is_zero() => AbelianGroup { rank: 1, torsion: Vec::new() },
            o if o.is_one() => Self::trivial(),
            n => AbelianGroup { rank: 0, torsion: vec![n] },
        }
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("{r} Z")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Row Hermite form without zero rows: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`. Bezout row moves keep entries small.
fn hermite_rows(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for j in 0..cols {
        if r == m.len() {
            break;
        }
        for i in r + 1..m.len() {
            if m[i][j].is_zero() {
                continue;
            }
            if m[r][j].is_zero() {
                m.swap(r, i);
                continue;
            }
            let e = m[r][j].extended_gcd(&m[i][j]);
            let (a, b) = (&m[r][j] / &e.gcd, &m[i][j] / &e.gcd);
            let (top, bottom) = m.split_at_mut(i);
            for (u, v) in top[r].iter_mut().zip(bottom[0].iter_mut()).skip(j) {
                let nu = &e.x * &*u + &e.y * &*v;
                *v = &a * &*v - &b * &*u;
                *u = nu;
            }
        }
        if m[r][j].is_zero() {
            continue;
        }
        if m[r][j].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        let (top, bottom) = m.split_at_mut(r);
        for row in top.iter_mut() {
            let k = row[j].div_floor(&bottom[0][j]);
            if !k.is_zero() {
                for (u, v) in row.iter_mut().zip(&bottom[0]).skip(j) {
                    *u -= &k * v;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

fn transpose(m: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Diagonal of the Smith normal form, nonnegative and in divisibility order.
/// Trailing zeros are omitted, so the length is the rank of the matrix.
///
/// Alternates row Hermite forms of the matrix and its transpose until the
/// result is diagonal, then fixes divisibility with gcd/lcm swaps.
pub fn smith_diagonal(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m = hermite_rows(matrix.to_vec(), cols);
    loop {
        let diagonal =
            m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| j == i || x.is_zero()));
        if diagonal {
            break;
        }
        let width = m.first().map_or(0, Vec::len);
        let rows = m.len();
        m = hermite_rows(transpose(&m, width), rows);
    }
    let mut diag: Vec<BigInt> = m.iter().enumerate().map(|(i, row)| row[i].clone()).collect();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                diag[j] = &diag[i] / &g * &diag[j];
                diag[i] = g;
            }
        }
    }
    diag
}

/// The group presented by `generators` columns and the given relation rows.
pub fn presented_group(generators: usize, relations: &[Vec<BigInt>]) -> AbelianGroup {
    debug_assert!(relations.iter().all(|r| r.len() == generators));
    let diag = smith_diagonal(relations);
    AbelianGroup {
        rank: generators - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn det(m: &[Vec<BigInt>]) -> BigInt {
        match m.len() {
            0 => BigInt::one(),
            1 => m[0][0].clone(),
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<BigInt>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                        .collect();
                    let term = &m[0][j] * det(&minor);
                    if j % 2 == 0 { term } else { -term }
                })
                .sum(),
        }
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }

    /// Invariant factors from gcds of k x k minors.
    fn determinantal_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=rows.min(cols) {
            let mut g = BigInt::zero();
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let minor: Vec<Vec<BigInt>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                    g = g.gcd(&det(&minor));
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    #[test]
    fn known_forms() {
        assert_eq!(smith_diagonal(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), mat(&[&[2, 6, 12]])[0]);
        assert_eq!(smith_diagonal(&mat(&[&[0, 0], &[0, 0]])), Vec::<BigInt>::new());
        assert_eq!(smith_diagonal(&mat(&[&[2, 0], &[0, 3]])), mat(&[&[1, 6]])[0]);
        assert!(smith_diagonal(&[]).is_empty());
    }

    #[test]
    fn groups() {
        assert_eq!(presented_group(2, &mat(&[&[2, 0], &[0, 3]])), AbelianGroup::cyclic(6));
        assert_eq!(presented_group(1, &[]), AbelianGroup::cyclic(0));
        assert_eq!(presented_group(2, &mat(&[&[2, 0], &[0, 2]])).to_string(), "Z/2 + Z/2");
        assert_eq!(presented_group(3, &mat(&[&[1, 1, 0]])).to_string(), "2 Z");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            rows in 1usize..4, cols in 1usize..4,
            entries in proptest::collection::vec(-9i64..10, 16)
        ) {
            let m: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| (0..cols).map(|j| BigInt::from(entries[i * 4 + j])).collect())
                .collect();
            let d = smith_diagonal(&m);
            prop_assert_eq!(&d, &determinantal_factors(&m));
            for w in d.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }

        #[test]
        fn invariant_under_unimodular_moves(
            entries in proptest::collection::vec(-3i64..4, 144),
            moves in proptest::collection::vec((0usize..12, 0usize..12, -3i64..4, any::<bool>()), 60)
        ) {
            let m: Vec<Vec<BigInt>> = entries.chunks(12).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let mut n = m.clone();
            for (a, b, k, on_rows) in moves {
                if a == b {
                    continue;
                }
                if on_rows {
                    let src = n[b].clone();
                    for (x, y) in n[a].iter_mut().zip(&src) {
                        *x += y * k;
                    }
                } else {
                    for row in n.iter_mut() {
                        let y = row[b].clone();
                        row[a] += y * k;
                    }
                }
            }
            prop_assert_eq!(smith_diagonal(&m), smith_diagonal(&n));
        }
    }
}
