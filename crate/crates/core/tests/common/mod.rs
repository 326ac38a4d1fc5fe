#![allow(clippy::needless_range_loop)]
//! Independent oracles for the integration and acceptance tests.
//!
//! Everything here uses machine integers and a deliberately different
//! elimination order from the library, so agreement is a real check.

#![allow(dead_code)]

use binoid_core::{Face, FinAbGroup, IntMatrix, SimplicialComplex};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;

pub type Mat = Vec<Vec<i128>>;

pub fn to_mat(a: &IntMatrix) -> Mat {
    (0..a.rows()).map(|i| a.row(i).iter().map(|x| x.to_i128().expect("small entry")).collect()).collect()
}

pub fn to_int_matrix(rows: usize, cols: usize, a: &Mat) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(a[i][j]))
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by cofactor-free fraction-free elimination.
fn det(mut m: Mat) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else { return 0 };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors as quotients of determinantal divisors (gcds of k×k minors).
pub fn invariant_factors_by_minors(a: &Mat, rows: usize, cols: usize) -> Vec<i128> {
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let minor: Mat = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = gcd(g, det(minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// A naive Smith reduction tracking only the column transform `V` and its inverse.
pub struct NaiveSmith {
    pub diag: Vec<i128>,
    pub v: Mat,
    pub v_inv: Mat,
}

pub fn naive_smith(a: &Mat, rows: usize, cols: usize) -> NaiveSmith {
    let mut m = a.clone();
    let mut v: Mat = (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect();
    let mut v_inv = v.clone();
    let mut diag = Vec::new();
    // Column operation col_dst -= q * col_src, recorded in V and V⁻¹.
    let col_sub = |m: &mut Mat, v: &mut Mat, v_inv: &mut Mat, dst: usize, src: usize, q: i128| {
        for row in m.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
        for j in 0..v_inv[0].len() {
            let x = v_inv[dst][j];
            v_inv[src][j] += q * x;
        }
    };
    let col_swap = |m: &mut Mat, v: &mut Mat, v_inv: &mut Mat, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
        v_inv.swap(a, b);
    };
    for t in 0..rows.min(cols) {
        // First nonzero in the remaining block, scanning column-major.
        let Some((pi, pj)) = (t..cols).flat_map(|j| (t..rows).map(move |i| (i, j))).find(|&(i, j)| m[i][j] != 0) else {
            break;
        };
        m.swap(t, pi);
        col_swap(&mut m, &mut v, &mut v_inv, t, pj);
        loop {
            // Euclid on (pivot, entry); the pivot only changes when a nonzero
            // remainder is swapped in, so its magnitude strictly decreases.
            for i in t + 1..rows {
                while m[i][t] != 0 {
                    let q = m[i][t] / m[t][t];
                    for j in 0..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    if m[i][t] != 0 {
                        m.swap(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                while m[t][j] != 0 {
                    let q = m[t][j] / m[t][t];
                    col_sub(&mut m, &mut v, &mut v_inv, j, t, q);
                    if m[t][j] != 0 {
                        col_swap(&mut m, &mut v, &mut v_inv, t, j);
                    }
                }
            }
            if (t + 1..rows).any(|i| m[i][t] != 0) {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % m[t][t] != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        m[t][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    NaiveSmith { diag, v, v_inv }
}

/// `(free rank, torsion)` of `coker(A)` for `A : ℤ^cols → ℤ^rows`.
pub fn naive_cokernel(a: &Mat, rows: usize, cols: usize) -> (usize, Vec<i128>) {
    let s = naive_smith(a, rows, cols);
    (rows - s.diag.len(), s.diag.into_iter().filter(|&d| d > 1).collect())
}

/// `ker(d_out)/im(d_in)` through an explicit kernel basis: the columns of `V`
/// past the rank of `d_out`, with `im(d_in)` rewritten in that basis.
pub fn kernel_route_cohomology(d_in: &Mat, a: usize, b: usize, d_out: &Mat, c: usize) -> (usize, Vec<i128>) {
    let s = naive_smith(d_out, c, b);
    let k = s.diag.len();
    let coords: Mat =
        (k..b).map(|r| (0..a).map(|j| (0..b).map(|x| s.v_inv[r][x] * d_in[x][j]).sum()).collect()).collect();
    naive_cokernel(&coords, b - k, a)
}

pub fn group_of(free: usize, torsion: &[i128]) -> FinAbGroup {
    FinAbGroup::new(free, torsion.iter().map(|&d| BigInt::from(d)))
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(a: &IntMatrix, p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| (x % BigInt::from(p)).to_i64().unwrap().rem_euclid(p)).collect())
        .collect();
    let (rows, cols) = a.shape();
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let scale = inv(m[r][c]);
        for j in 0..cols {
            m[r][j] = m[r][j] * scale % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimensions over `F_p` of the cohomology of `0 → F_p^{dims[0]} → …`.
pub fn cohomology_dims_mod_p(dims: &[usize], diffs: &[IntMatrix], p: i64) -> Vec<usize> {
    let ranks: Vec<usize> = diffs.iter().map(|d| rank_mod_p(d, p)).collect();
    (0..dims.len())
        .map(|j| dims[j] - ranks.get(j).copied().unwrap_or(0) - j.checked_sub(1).map_or(0, |i| ranks[i]))
        .collect()
}

/// `(order, number of elements killed by 2)` of `H^j` with `ℤ/4` coefficients,
/// by enumerating all cochains.
pub fn z4_cohomology_counts(dims: &[usize], diffs: &[IntMatrix], j: usize) -> (u64, u64) {
    let apply = |d: &IntMatrix, x: &[i64]| -> Vec<i64> {
        (0..d.rows())
            .map(|i| d.row(i).iter().zip(x).map(|(a, b)| a.to_i64().unwrap() * b).sum::<i64>().rem_euclid(4))
            .collect()
    };
    let all = |n: usize| -> Vec<Vec<i64>> {
        (0..4u64.pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let d = (k % 4) as i64;
                        k /= 4;
                        d
                    })
                    .collect()
            })
            .collect()
    };
    let kernel: Vec<Vec<i64>> =
        all(dims[j]).into_iter().filter(|x| diffs.get(j).is_none_or(|d| apply(d, x).iter().all(|&y| y == 0))).collect();
    let image: std::collections::BTreeSet<Vec<i64>> = match j.checked_sub(1) {
        Some(i) => all(dims[i]).iter().map(|x| apply(&diffs[i], x)).collect(),
        None => std::iter::once(vec![0; dims[j]]).collect(),
    };
    let killed_by_two =
        kernel.iter().filter(|x| image.contains(&x.iter().map(|y| 2 * y % 4).collect::<Vec<_>>())).count() as u64;
    let im = image.len() as u64;
    (kernel.len() as u64 / im, killed_by_two / im)
}

/// `(order, number of elements killed by 2)` of a finite group.
pub fn finite_counts(g: &FinAbGroup) -> (u64, u64) {
    assert_eq!(g.free_rank(), 0);
    g.invariant_factors().iter().fold((1, 1), |(o, t), d| {
        let d = d.to_u64().unwrap();
        (o * d, t * if d % 2 == 0 { 2 } else { 1 })
    })
}

pub fn random_complex(rng: &mut impl Rng, max_vertices: u32) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let facets = rng.gen_range(1..=6);
    let mut list: Vec<Vec<u32>> = Vec::new();
    for _ in 0..facets {
        let mut f: Vec<u32> = (1..=n).filter(|_| rng.gen_bool(0.45)).collect();
        if f.is_empty() {
            f.push(rng.gen_range(1..=n));
        }
        list.push(f);
    }
    // Every vertex appears, possibly isolated.
    SimplicialComplex::with_vertices(1..=n, list.iter().map(|f| f.as_slice())).unwrap()
}

pub fn complex_strategy(max_vertices: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_vertices).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 1..=n as usize), 1..=5)
            .prop_map(move |facets| SimplicialComplex::with_vertices(1..=n, facets.into_iter().map(Face::new)).unwrap())
    })
}

pub fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn star_graph(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((2..=n).map(|v| [1, v]))
}

pub fn cycle_graph(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((1..=n).map(|v| [v, v % n + 1]))
}

pub fn path_graph(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((1..n).map(|v| [v, v + 1]))
}

pub fn complete_graph(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((1..=n).flat_map(|a| (a + 1..=n).map(move |b| [a, b])))
}

pub fn points(n: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets((1..=n).map(|v| [v]))
}

pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 5],
        [1, 3, 6],
        [1, 4, 6],
        [2, 3, 4],
        [2, 3, 6],
        [2, 5, 6],
        [3, 4, 5],
        [4, 5, 6],
    ])
}

pub fn cone_over_rp2() -> SimplicialComplex {
    SimplicialComplex::from_facets(rp2().facets().iter().map(|f| f.union(&Face::from([7]))))
}

pub fn favorite() -> SimplicialComplex {
    SimplicialComplex::from_facets([Face::from([1, 2, 3]), Face::from([3, 4])])
}

pub fn triangle_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets([[1, 2], [1, 3], [2, 3]])
}
