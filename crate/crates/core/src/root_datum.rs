//! Based root data, their duals and Levi subdata, the affine simple system,
//! and automorphisms transported across duality.

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::RootDatumError;
use crate::lattice::{self, dot, IntMatrix};

/// Search bound used when computing the order of a lattice automorphism.
pub const AUTOMORPHISM_ORDER_BOUND: usize = 5040;

/// Unvalidated root datum as read from user input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRootDatum {
    pub name: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    /// Indices into `roots` of the simple roots.
    pub simple: Vec<usize>,
}

/// A validated based root datum on `X = Z^rank`, with the dot product as
/// pairing. Roots are stored in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    simple: Vec<usize>,
    coefficients: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    /// Checks every axiom and returns the datum in canonical order.
    pub fn validate(raw: RawRootDatum) -> Result<RootDatum, RootDatumError> {
        let RawRootDatum { name, rank, roots, coroots, simple } = raw;
        if rank == 0 {
            return Err(RootDatumError::ZeroRank);
        }
        if roots.len() != coroots.len() {
            return Err(RootDatumError::CountMismatch { roots: roots.len(), coroots: coroots.len() });
        }
        for (index, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            for v in [r, c] {
                if v.len() != rank {
                    return Err(RootDatumError::WrongLength { index, expected: rank, found: v.len() });
                }
            }
        }
        let mut lookup = HashMap::new();
        for (index, r) in roots.iter().enumerate() {
            if lookup.insert(r.clone(), index).is_some() {
                return Err(RootDatumError::DuplicateRoot { index });
            }
        }
        let mut seen = vec![false; roots.len()];
        for &index in &simple {
            if index >= roots.len() || seen[index] {
                return Err(RootDatumError::BadSimpleIndex { index });
            }
            seen[index] = true;
        }
        for (index, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            let pairing = dot(r, c);
            if pairing != 2 {
                return Err(RootDatumError::PairingNotTwo { index, pairing });
            }
        }
        for (index, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            let negc: Vec<i64> = c.iter().map(|x| -x).collect();
            match lookup.get(&neg) {
                Some(&j) if coroots[j] == negc => {}
                _ => return Err(RootDatumError::MissingNegative { index }),
            }
            let double: Vec<i64> = r.iter().map(|x| 2 * x).collect();
            if lookup.contains_key(&double) {
                return Err(RootDatumError::NonReduced { index });
            }
        }
        for (index, (a, ac)) in roots.iter().zip(&coroots).enumerate() {
            for (b, bc) in roots.iter().zip(&coroots) {
                let image = reflect(b, a, ac);
                let coimage = reflect(bc, ac, a);
                match lookup.get(&image) {
                    Some(&k) if coroots[k] == coimage => {}
                    _ => return Err(RootDatumError::NotReflectionStable { index }),
                }
            }
        }
        let simple_vectors: Vec<Vec<i64>> = simple.iter().map(|&i| roots[i].clone()).collect();
        if lattice::rational_rank(&simple_vectors) != simple.len() {
            return Err(RootDatumError::SimpleDependent);
        }
        // Columns are the simple roots; solve for each root's coefficients.
        let system: Vec<Vec<Rational64>> = (0..rank)
            .map(|row| simple_vectors.iter().map(|v| Rational64::from_integer(v[row])).collect())
            .collect();
        let mut coefficients = Vec::with_capacity(roots.len());
        for (index, r) in roots.iter().enumerate() {
            let rhs: Vec<Rational64> = r.iter().map(|&x| Rational64::from_integer(x)).collect();
            let coeffs = solve_in_span(&system, &rhs, simple.len())
                .ok_or(RootDatumError::NotABase { index })?;
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(RootDatumError::NotABase { index });
            }
            let ints: Vec<i64> = coeffs.iter().map(|c| c.to_integer()).collect();
            let nonneg = ints.iter().all(|&c| c >= 0);
            let nonpos = ints.iter().all(|&c| c <= 0);
            if !(nonneg || nonpos) {
                return Err(RootDatumError::NotABase { index });
            }
            coefficients.push(ints);
        }

        // Canonical order: roots sorted lexicographically, simple roots listed
        // in the order of their vectors.
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
        let mut new_index = vec![0; roots.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut new_simple: Vec<usize> = simple.iter().map(|&i| new_index[i]).collect();
        new_simple.sort_unstable();
        // Coefficient columns follow the new order of the simple roots.
        let column_order: Vec<usize> = new_simple
            .iter()
            .map(|&ns| simple.iter().position(|&s| new_index[s] == ns).unwrap())
            .collect();
        let roots_sorted: Vec<Vec<i64>> = order.iter().map(|&i| roots[i].clone()).collect();
        let coroots_sorted: Vec<Vec<i64>> = order.iter().map(|&i| coroots[i].clone()).collect();
        let coefficients: Vec<Vec<i64>> = order
            .iter()
            .map(|&i| column_order.iter().map(|&c| coefficients[i][c]).collect())
            .collect();
        let lookup = roots_sorted.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(RootDatum {
            name,
            rank,
            roots: roots_sorted,
            coroots: coroots_sorted,
            simple: new_simple,
            coefficients,
            lookup,
        })
    }

    /// The datum with no roots on `Z^rank`.
    pub fn torus(name: &str, rank: usize) -> Result<RootDatum, RootDatumError> {
        RootDatum::validate(RawRootDatum {
            name: name.to_string(),
            rank,
            roots: vec![],
            coroots: vec![],
            simple: vec![],
        })
    }

    pub fn to_raw(&self) -> RawRootDatum {
        RawRootDatum {
            name: self.name.clone(),
            rank: self.rank,
            roots: self.roots.clone(),
            coroots: self.coroots.clone(),
            simple: self.simple.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// Root indices of the simple roots, in canonical order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    /// Coefficients of root `i` on the simple roots, in canonical order.
    pub fn simple_coefficients(&self, i: usize) -> &[i64] {
        &self.coefficients[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coefficients[i].iter().any(|&c| c > 0)
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.is_positive(i)).collect()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coefficients[i].iter().sum()
    }

    /// Position of root `i` in the simple list, if it is simple.
    pub fn simple_position(&self, i: usize) -> Option<usize> {
        self.simple.iter().position(|&s| s == i)
    }

    /// Cartan integer `<alpha_i, alpha_j^vee>` for simple positions `i`, `j`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        dot(&self.roots[self.simple[i]], &self.coroots[self.simple[j]])
    }

    /// Matrix of the reflection `x -> x - <x, a^vee> a` on `X`.
    pub fn reflection_matrix(&self, i: usize) -> IntMatrix {
        let (a, ac) = (&self.roots[i], &self.coroots[i]);
        let mut m = IntMatrix::identity(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                m.set(r, c, m.get(r, c) - a[r] * ac[c]);
            }
        }
        m
    }

    /// Irreducible components as lists of simple positions, ordered by their
    /// smallest position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.simple.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..n {
                    if comp[j] == usize::MAX && self.cartan(i, j) != 0 {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The highest root of the component spanned by the given simple positions.
    pub fn highest_root(&self, component: &[usize]) -> usize {
        (0..self.roots.len())
            .filter(|&i| self.is_positive(i))
            .filter(|&i| {
                self.coefficients[i]
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || component.contains(&k))
            })
            .max_by_key(|&i| self.height(i))
            .expect("component without roots")
    }

    /// The dual datum `(X^vee, X, coroots, roots)` with the simple coroots as base.
    pub fn dual(&self) -> RootDatum {
        let name = match self.name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("dual({})", self.name),
        };
        RootDatum::validate(RawRootDatum {
            name,
            rank: self.rank,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            simple: self.simple.clone(),
        })
        .expect("the dual of a valid root datum is valid")
    }

    /// Subdatum whose roots are those in the span of the given simple roots.
    pub fn levi_subdatum(&self, delta_m: &[usize]) -> Result<RootDatum, RootDatumError> {
        let positions = self.simple_positions_of(delta_m)?;
        let keep: Vec<usize> = (0..self.roots.len())
            .filter(|&i| {
                self.coefficients[i]
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || positions.contains(&k))
            })
            .collect();
        let simple: Vec<usize> = delta_m
            .iter()
            .map(|s| keep.iter().position(|k| k == s).unwrap())
            .collect();
        let mut name = format!("{}[levi", self.name);
        for p in &positions {
            name.push_str(&format!(" {}", p + 1));
        }
        name.push(']');
        RootDatum::validate(RawRootDatum {
            name,
            rank: self.rank,
            roots: keep.iter().map(|&i| self.roots[i].clone()).collect(),
            coroots: keep.iter().map(|&i| self.coroots[i].clone()).collect(),
            simple,
        })
    }

    /// Simple positions of a set of simple root indices.
    pub fn simple_positions_of(&self, indices: &[usize]) -> Result<Vec<usize>, RootDatumError> {
        let mut out = Vec::with_capacity(indices.len());
        for &i in indices {
            let p = self.simple_position(i).ok_or(RootDatumError::NotSimple { index: i })?;
            out.push(p);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Simple roots plus the negated highest root with offset 1, per component.
    pub fn affine_simple_system(&self) -> Vec<AffineNode> {
        let mut nodes = Vec::new();
        for (c, comp) in self.components().iter().enumerate() {
            for &p in comp {
                nodes.push(AffineNode {
                    component: c,
                    root: self.simple[p],
                    offset: 0,
                    simple_position: Some(p),
                });
            }
            let top = self.highest_root(comp);
            let neg: Vec<i64> = self.roots[top].iter().map(|x| -x).collect();
            nodes.push(AffineNode {
                component: c,
                root: self.root_index(&neg).unwrap(),
                offset: 1,
                simple_position: None,
            });
        }
        nodes
    }

    /// Root permutation induced by a lattice automorphism, checking that
    /// coroots are carried along by the inverse transpose.
    pub fn automorphism_permutation(&self, m: &IntMatrix) -> Result<Vec<usize>, RootDatumError> {
        if m.n_rows() != self.rank || m.n_cols() != self.rank {
            return Err(RootDatumError::MatrixShape { rank: self.rank });
        }
        let inv = m.inverse().ok_or(RootDatumError::NotInvertible)?;
        let inv_t = inv.transpose();
        let mut perm = Vec::with_capacity(self.roots.len());
        for (index, (r, c)) in self.roots.iter().zip(&self.coroots).enumerate() {
            let image = m.apply(r);
            match self.root_index(&image) {
                Some(j) if self.coroots[j] == inv_t.apply(c) => perm.push(j),
                _ => return Err(RootDatumError::NotRootPreserving { index }),
            }
        }
        Ok(perm)
    }
}

/// A node of the affine Dynkin diagram: the affine function `gradient + offset`
/// where the gradient is the root with index `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineNode {
    pub component: usize,
    pub root: usize,
    pub offset: i64,
    /// Position in the simple list for finite nodes; `None` for the affine node.
    pub simple_position: Option<usize>,
}

impl AffineNode {
    pub fn is_affine(&self) -> bool {
        self.simple_position.is_none()
    }
}

fn reflect(x: &[i64], a: &[i64], ac: &[i64]) -> Vec<i64> {
    let k = dot(x, ac);
    x.iter().zip(a).map(|(xi, ai)| xi - k * ai).collect()
}

/// Unique solution of `system * c = rhs` when `rhs` lies in the column span.
fn solve_in_span(system: &[Vec<Rational64>], rhs: &[Rational64], cols: usize) -> Option<Vec<Rational64>> {
    let mut aug: Vec<Vec<Rational64>> = system
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let pivots = lattice::rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut out = vec![Rational64::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        out[pc] = aug[r][cols];
    }
    Some(out)
}

/// A finite-order lattice automorphism permuting the roots and the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedAutomorphism {
    matrix: IntMatrix,
    order: usize,
}

impl BasedAutomorphism {
    pub fn new(rd: &RootDatum, matrix: IntMatrix) -> Result<Self, RootDatumError> {
        let perm = rd.automorphism_permutation(&matrix)?;
        let order = matrix
            .multiplicative_order(AUTOMORPHISM_ORDER_BOUND)
            .ok_or(RootDatumError::InfiniteOrder { bound: AUTOMORPHISM_ORDER_BOUND })?;
        for &s in rd.simple_indices() {
            if !rd.simple_indices().contains(&perm[s]) {
                return Err(RootDatumError::NotBased { index: s });
            }
        }
        Ok(BasedAutomorphism { matrix, order })
    }

    pub fn identity(rank: usize) -> Self {
        BasedAutomorphism { matrix: IntMatrix::identity(rank), order: 1 }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }
}

/// The automorphism of the dual datum induced by `theta`: its transpose,
/// which sends the coroot of `a` to the coroot of `theta^{-1} a`.
pub fn transpose_automorphism(
    rd: &RootDatum,
    theta: &BasedAutomorphism,
) -> Result<BasedAutomorphism, RootDatumError> {
    BasedAutomorphism::new(rd, theta.matrix.clone())?;
    BasedAutomorphism::new(&rd.dual(), theta.matrix.transpose())
}

/// Transpose of an arbitrary automorphism of the root datum, as an
/// automorphism of the dual datum. Unlike [`transpose_automorphism`] this
/// accepts non-based maps such as Weyl group elements.
pub fn dual_lattice_action(rd: &RootDatum, m: &IntMatrix) -> Result<IntMatrix, RootDatumError> {
    rd.automorphism_permutation(m)?;
    let t = m.transpose();
    rd.dual().automorphism_permutation(&t)?;
    Ok(t)
}

/// Whether each root pairs into `[-1, 1]`-bounded affine values, i.e. the
/// highest root dominates every root of its component on the alcove vertices.
pub fn highest_root_dominates(rd: &RootDatum) -> bool {
    let comps = rd.components();
    comps.iter().all(|comp| {
        let top = rd.highest_root(comp);
        let top_coeffs = rd.simple_coefficients(top);
        (0..rd.num_roots()).all(|i| {
            let c = rd.simple_coefficients(i);
            let inside = c.iter().enumerate().all(|(k, &x)| x == 0 || comp.contains(&k));
            !inside || c.iter().zip(top_coeffs).all(|(x, t)| x.abs() <= *t)
        })
    })
}
