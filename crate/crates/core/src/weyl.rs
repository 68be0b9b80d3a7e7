//! Finite Weyl groups as integer matrices on `X`, their subgroups, and orbit
//! computations on `X ⊗ Q/Z`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::root_datum::{AffineNode, RootDatum};
use crate::ss_classes::ClassVector;

/// Default bound on the number of group elements generated by closure.
pub const DEFAULT_ORDER_BOUND: usize = 1_000_000;

/// The Weyl group `W_0` of a root datum, with element 0 the identity.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<IntMatrix>,
    lookup: HashMap<IntMatrix, usize>,
    simple_generators: Vec<usize>,
    root_reflection: Vec<usize>,
    positive_roots: Vec<usize>,
}

/// A subgroup of a [`WeylGroup`], stored as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    /// Roots whose reflections generate the subgroup, when it is reflection-generated.
    pub generating_roots: Vec<usize>,
    /// Whether the subgroup is generated by the root reflections it contains.
    pub reflection_generated: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.binary_search(&element).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

pub fn generate_weyl(rd: &RootDatum) -> Result<WeylGroup> {
    generate_weyl_bounded(rd, DEFAULT_ORDER_BOUND)
}

/// Generates `W_0` by closure from the simple reflections.
pub fn generate_weyl_bounded(rd: &RootDatum, bound: usize) -> Result<WeylGroup> {
    let rank = rd.rank();
    let gens: Vec<IntMatrix> = rd.simple_indices().iter().map(|&s| rd.reflection_matrix(s)).collect();
    let identity = IntMatrix::identity(rank);
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let next = g.mul(&elements[i]);
            if !lookup.contains_key(&next) {
                if elements.len() >= bound {
                    return Err(Error::BoundExceeded { bound });
                }
                lookup.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    let simple_generators = gens.iter().map(|g| lookup[g]).collect();
    let root_reflection = (0..rd.num_roots())
        .map(|r| lookup[&rd.reflection_matrix(r)])
        .collect();
    Ok(WeylGroup {
        rank,
        elements,
        lookup,
        simple_generators,
        root_reflection,
        positive_roots: rd.positive_roots(),
    })
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn simple_generators(&self) -> &[usize] {
        &self.simple_generators
    }

    /// Element index of the reflection in root `r`.
    pub fn reflection_of_root(&self, r: usize) -> usize {
        self.root_reflection[r]
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.lookup[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn apply(&self, element: usize, v: &ClassVector) -> ClassVector {
        v.apply(&self.elements[element])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.elements.len()).collect(),
            generating_roots: Vec::new(),
            reflection_generated: true,
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { members: vec![0], generating_roots: Vec::new(), reflection_generated: true }
    }

    /// Closure of a set of elements under products.
    pub fn generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut seen: HashSet<usize> = HashSet::from([0]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &g in gens {
                let next = self.compose(g, i);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut members: Vec<usize> = seen.into_iter().collect();
        members.sort_unstable();
        Subgroup { members, generating_roots: Vec::new(), reflection_generated: false }
    }

    /// Subgroup generated by the reflections in the given roots.
    pub fn reflection_subgroup_of_roots(&self, roots: &[usize]) -> Subgroup {
        let gens: Vec<usize> = roots.iter().map(|&r| self.root_reflection[r]).collect();
        let mut h = self.generated_by(&gens);
        h.generating_roots = roots.to_vec();
        h.reflection_generated = true;
        h
    }

    /// Lexicographically smallest element of the `h`-orbit of `v`.
    pub fn canonical_rep(&self, h: &Subgroup, v: &ClassVector) -> ClassVector {
        h.members
            .iter()
            .map(|&m| v.apply(&self.elements[m]))
            .min()
            .expect("subgroups contain the identity")
    }

    pub fn orbit(&self, h: &Subgroup, v: &ClassVector) -> BTreeSet<ClassVector> {
        h.members.iter().map(|&m| v.apply(&self.elements[m])).collect()
    }

    /// `{w in h : w v = v}`, flagged as reflection-generated when the root
    /// reflections it contains generate it.
    pub fn stabilizer(&self, h: &Subgroup, v: &ClassVector) -> Subgroup {
        let members: Vec<usize> = h
            .members
            .iter()
            .copied()
            .filter(|&m| v.apply(&self.elements[m]) == *v)
            .collect();
        let reflection_roots: Vec<usize> = self
            .positive_roots
            .iter()
            .copied()
            .filter(|&r| members.binary_search(&self.root_reflection[r]).is_ok())
            .collect();
        let gens: Vec<usize> = reflection_roots.iter().map(|&r| self.root_reflection[r]).collect();
        let reflection_part = self.generated_by(&gens);
        let reflection_generated = reflection_part.members == members;
        Subgroup {
            members,
            generating_roots: if reflection_generated { reflection_roots } else { Vec::new() },
            reflection_generated,
        }
    }

    /// Subgroup generated by the reflections `s_b` with `<v, b^vee>` integral.
    pub fn fixing_reflection_subgroup(&self, rd: &RootDatum, v: &ClassVector) -> Subgroup {
        let roots: Vec<usize> = self
            .positive_roots
            .iter()
            .copied()
            .filter(|&r| v.pairs_integrally(rd.coroot(r)))
            .collect();
        self.reflection_subgroup_of_roots(&roots)
    }
}

/// Lexicographically smallest element of the `h`-orbit of `v`.
pub fn canonical_rep(w: &WeylGroup, h: &Subgroup, v: &ClassVector) -> ClassVector {
    w.canonical_rep(h, v)
}

pub fn stabilizer(w: &WeylGroup, h: &Subgroup, v: &ClassVector) -> Subgroup {
    w.stabilizer(h, v)
}

pub fn fixing_reflection_subgroup(w: &WeylGroup, rd: &RootDatum, v: &ClassVector) -> Subgroup {
    w.fixing_reflection_subgroup(rd, v)
}

/// Subgroup of `W_0` generated by the linear parts of the affine reflections
/// in the nodes `j`, given as indices into `nodes`.
pub fn reflection_subgroup(w: &WeylGroup, nodes: &[AffineNode], j: &[usize]) -> Subgroup {
    let roots: Vec<usize> = j.iter().map(|&k| nodes[k].root).collect();
    w.reflection_subgroup_of_roots(&roots)
}

/// Generates the group of affine maps of `X^vee ⊗ Q` spanned by the affine
/// reflections in the nodes `j` and checks that distinct elements have
/// distinct linear parts. Returns `false` if the group is infinite (more
/// than `bound` elements), which happens exactly when `j` contains a whole
/// component.
pub fn certify_facet_embedding(rd: &RootDatum, nodes: &[AffineNode], j: &[usize], bound: usize) -> bool {
    let n = rd.rank();
    // Reflection in {x : <b, x> + k = 0}: x -> x - (<b, x> + k) b^vee.
    let gens: Vec<(IntMatrix, Vec<i64>)> = j
        .iter()
        .map(|&k| {
            let node = &nodes[k];
            let b = rd.root(node.root);
            let bc = rd.coroot(node.root);
            let mut m = IntMatrix::identity(n);
            for r in 0..n {
                for c in 0..n {
                    m.set(r, c, m.get(r, c) - bc[r] * b[c]);
                }
            }
            let t: Vec<i64> = bc.iter().map(|x| -node.offset * x).collect();
            (m, t)
        })
        .collect();
    let start = (IntMatrix::identity(n), vec![0; n]);
    let mut seen: HashSet<(IntMatrix, Vec<i64>)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, t)) = queue.pop_front() {
        for (g, gt) in &gens {
            let m = g.mul(&a);
            let shift: Vec<i64> = g.apply(&t).iter().zip(gt).map(|(x, y)| x + y).collect();
            let next = (m, shift);
            if !seen.contains(&next) {
                if seen.len() >= bound {
                    return false;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let linear: HashSet<&IntMatrix> = seen.iter().map(|(a, _)| a).collect();
    linear.len() == seen.len()
}
