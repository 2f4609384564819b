#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use toral::{int_matrix, Int, IntMat};

pub fn small_matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), rows)
        .prop_map(|r| int_matrix(&r))
}

pub fn any_small_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| small_matrix(r, c, bound))
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Determinant by cofactor expansion; independent of the library's Bareiss
/// routine.
pub fn cofactor_det(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::from(1);
    }
    let mut acc = Int::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Int>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// gcd of all `k × k` minors.
pub fn determinantal_divisor(m: &IntMat, k: usize) -> Int {
    let rows = m.to_rows();
    let mut g = Int::zero();
    for rs in combinations(m.rows(), k) {
        for cs in combinations(m.cols(), k) {
            let sub: Vec<Vec<Int>> =
                rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    g
}

/// Rank as the largest `k` with a nonzero `k × k` minor.
pub fn minor_rank(m: &IntMat) -> usize {
    (1..=m.rows().min(m.cols())).rev().find(|&k| !determinantal_divisor(m, k).is_zero()).unwrap_or(0)
}

pub fn is_unimodular(m: &IntMat) -> bool {
    m.is_square() && cofactor_det(&m.to_rows()).abs() == Int::from(1)
}

pub fn big(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn concrete_m() -> IntMat {
    int_matrix(&[[1, -5, 0], [-1, 1, -1], [0, 3, 1]])
}

pub fn binomial_b() -> IntMat {
    int_matrix(&[[-2, -1, 0], [3, 0, 1], [0, 3, 0], [-1, -2, 0], [0, 0, -1]])
}

pub fn binomial_a() -> IntMat {
    int_matrix(&[[1, 1, 1, 1, 1], [0, 1, 2, 3, 1]])
}

/// Move matrices used across tests, all with mixed columns.
pub fn corpus() -> Vec<(&'static str, IntMat)> {
    vec![
        ("concrete", concrete_m()),
        ("difference", int_matrix(&[[1], [-1]])),
        ("skew-2x2", int_matrix(&[[1, -1], [-1, 2]])),
        ("2x2-2-1-1-3", int_matrix(&[[2, 1], [-1, -3]])),
        ("2x2-3-2-1-4", int_matrix(&[[3, 2], [-1, -4]])),
        ("2x2-1-4-3-2", int_matrix(&[[1, 4], [-3, -2]])),
        
        ("cycle-3", int_matrix(&[[1, 0, -1], [-1, 1, 0], [0, -1, 1]])),
        ("degree-3x2", int_matrix(&[[1, 2], [-2, -1], [1, -1]])),
    ]
}

/// Connected component of `gamma` in the move graph, searched naively with
/// every point kept at total degree `<= cap`. `None` if the search reaches
/// the cap, i.e. the component may continue beyond it.
pub fn naive_component(
    gamma: &toral::congruence::ExponentVector,
    m: &IntMat,
    cap: i64,
) -> Option<std::collections::BTreeSet<Vec<i64>>> {
    let cols: Vec<Vec<i64>> =
        m.columns().iter().map(|c| c.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![gamma.coords().to_vec()];
    seen.insert(gamma.coords().to_vec());
    while let Some(u) = stack.pop() {
        for c in &cols {
            for s in [1, -1] {
                let v: Vec<i64> = u.iter().zip(c).map(|(a, b)| a + s * b).collect();
                if v.iter().any(|&x| x < 0) {
                    continue;
                }
                if v.iter().sum::<i64>() > cap {
                    return None;
                }
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    Some(seen)
}

/// A lattice basis matrix with a mixed, nonsingular `2 × 2` block in rows
/// `{0, 1}`, columns `{0, 1}`, and zeros in the rest of those rows.
pub fn with_toral_block(max_n: usize, max_m: usize) -> impl Strategy<Value = IntMat> {
    (3..=max_n, 2..=max_m)
        .prop_flat_map(|(n, m)| {
            (
                prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 2),
                prop::collection::vec(prop::collection::vec(-3i64..=3, m), n - 2),
                Just(m),
            )
        })
        .prop_map(|(block, rest, m)| {
            let mut rows: Vec<Vec<i64>> = block
                .into_iter()
                .map(|mut r| {
                    r.resize(m, 0);
                    r
                })
                .collect();
            rows.extend(rest);
            int_matrix(&rows)
        })
        .prop_filter("mixed nonsingular block", |b| {
            let (a, bb, c, d) = (&b[(0, 0)], &b[(0, 1)], &b[(1, 0)], &b[(1, 1)]);
            let mixed = |x: &Int, y: &Int| (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive());
            mixed(a, c) && mixed(bb, d) && a * d != bb * c
        })
        .prop_filter("lattice basis", |b| toral::ideals::lattice_basis_ideal(b).is_ok())
}
