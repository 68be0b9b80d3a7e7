//! Standard root data in the coordinates used throughout the crate.

use std::collections::{BTreeMap, VecDeque};

use crate::error::RootDatumError;
use crate::lattice::{dot, IntMatrix};
use crate::root_datum::{RawRootDatum, RootDatum};

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// Closes the simple (root, coroot) pairs under the simple reflections.
fn close_under_reflections(
    name: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
) -> Result<RootDatum, RootDatumError> {
    let mut pairs: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    for (r, c) in simple_roots.iter().zip(&simple_coroots) {
        queue.push_back((r.clone(), c.clone()));
        queue.push_back((neg(r), neg(c)));
    }
    while let Some((r, c)) = queue.pop_front() {
        if pairs.contains_key(&r) {
            continue;
        }
        pairs.insert(r.clone(), c.clone());
        for (a, ac) in simple_roots.iter().zip(&simple_coroots) {
            let k = dot(&r, ac);
            let l = dot(a, &c);
            let r2: Vec<i64> = r.iter().zip(a).map(|(x, y)| x - k * y).collect();
            let c2: Vec<i64> = c.iter().zip(ac).map(|(x, y)| x - l * y).collect();
            if !pairs.contains_key(&r2) {
                queue.push_back((r2, c2));
            }
        }
    }
    let roots: Vec<Vec<i64>> = pairs.keys().cloned().collect();
    let coroots: Vec<Vec<i64>> = pairs.values().cloned().collect();
    let simple = simple_roots
        .iter()
        .map(|s| roots.iter().position(|r| r == s).unwrap())
        .collect();
    RootDatum::validate(RawRootDatum { name, rank, roots, coroots, simple })
}

/// Simply connected datum of a Cartan matrix with entries
/// `cartan[i][j] = <alpha_i, alpha_j^vee>`, in the basis of fundamental weights.
pub fn simply_connected(name: &str, cartan: &[Vec<i64>]) -> Result<RootDatum, RootDatumError> {
    let n = cartan.len();
    let simple_roots = cartan.to_vec();
    let simple_coroots = (0..n).map(|i| unit(n, i, 1)).collect();
    close_under_reflections(name.to_string(), n, simple_roots, simple_coroots)
}

/// Adjoint datum of a Cartan matrix, in the basis of simple roots.
pub fn adjoint(name: &str, cartan: &[Vec<i64>]) -> Result<RootDatum, RootDatumError> {
    let n = cartan.len();
    let transposed: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
    let sc = simply_connected(name, &transposed)?;
    let mut raw = sc.dual().to_raw();
    raw.name = name.to_string();
    RootDatum::validate(raw)
}

/// Cartan matrix of type `A_n`.
pub fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// `SL_n` in fundamental-weight coordinates (rank `n - 1`).
pub fn sl(n: usize) -> RootDatum {
    if n == 2 {
        return RootDatum::validate(RawRootDatum {
            name: "SL2".into(),
            rank: 1,
            roots: vec![vec![2], vec![-2]],
            coroots: vec![vec![1], vec![-1]],
            simple: vec![0],
        })
        .unwrap();
    }
    simply_connected(&format!("SL{n}"), &cartan_a(n - 1)).unwrap()
}

/// `PGL_n` in simple-root coordinates (rank `n - 1`).
pub fn pgl(n: usize) -> RootDatum {
    adjoint(&format!("PGL{n}"), &cartan_a(n - 1)).unwrap()
}

/// `GL_n` on `Z^n` with roots `e_i - e_j`.
pub fn gl(n: usize) -> RootDatum {
    let simple_roots: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1))).collect();
    close_under_reflections(format!("GL{n}"), n, simple_roots.clone(), simple_roots).unwrap()
}

/// `Sp_2n` on `Z^n`: roots `±e_i±e_j`, `±2e_i`.
pub fn sp(n: usize) -> RootDatum {
    let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1))).collect();
    let mut coroots = roots.clone();
    roots.push(unit(n, n - 1, 2));
    coroots.push(unit(n, n - 1, 1));
    close_under_reflections(format!("Sp{}", 2 * n), n, roots, coroots).unwrap()
}

/// `SO_2n+1` on `Z^n`: roots `±e_i±e_j`, `±e_i`.
pub fn so_odd(n: usize) -> RootDatum {
    let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1))).collect();
    let mut coroots = roots.clone();
    roots.push(unit(n, n - 1, 1));
    coroots.push(unit(n, n - 1, 2));
    close_under_reflections(format!("SO{}", 2 * n + 1), n, roots, coroots).unwrap()
}

/// `SO_2n` on `Z^n` (n >= 2): roots `±e_i±e_j`.
pub fn so_even(n: usize) -> RootDatum {
    let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&unit(n, i, 1), &unit(n, i + 1, -1))).collect();
    roots.push(add(&unit(n, n - 2, 1), &unit(n, n - 1, 1)));
    close_under_reflections(format!("SO{}", 2 * n), n, roots.clone(), roots).unwrap()
}

pub fn torus(rank: usize) -> RootDatum {
    RootDatum::torus(&format!("T{rank}"), rank).unwrap()
}

/// The diagram flip of `GL_n`: `(x_1, ..., x_n) -> (-x_n, ..., -x_1)`.
pub fn gl_flip(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, -1);
    }
    m
}

/// Reversal of a basis of size `n`; the diagram flip of `SL` and `PGL` in
/// their weight and root coordinates.
pub fn reversal(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, 1);
    }
    m
}

/// The swap of coordinates on `Z^2`.
pub fn swap2() -> IntMatrix {
    reversal(2)
}
