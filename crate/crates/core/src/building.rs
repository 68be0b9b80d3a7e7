//! Facet types of the fundamental alcove, parahoric quotients, the maps from
//! facet classes to parameters, class systems and their coherence.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{DiagramSymmetry, Group};
use crate::inertial_params::{enumerate_inertial_params, InertialParam};
use crate::lattice::{self, IntMatrix};
use crate::root_datum::{RawRootDatum, RootDatum};
use crate::ss_classes::{level_points, ClassContext, ClassVector, GeometricClass, Lambda};
use crate::weyl::{certify_facet_embedding, reflection_subgroup, Subgroup};

/// Bound on affine group closures used to certify facet embeddings.
const EMBEDDING_BOUND: usize = 200_000;

/// A Frobenius-stable proper subset of affine nodes with the barycenter of
/// the corresponding face of the fundamental alcove (in `X^vee ⊗ Q`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetType {
    pub nodes: Vec<usize>,
    pub barycenter: Vec<Rational64>,
}

impl FacetType {
    pub fn is_chamber(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Vertices of the fundamental alcove, one per affine node: vertex `j` is
/// the point where every other node of its component vanishes. Each vertex
/// is written in the span of its component's coroots.
pub fn alcove_vertices(group: &Group) -> Vec<Vec<Rational64>> {
    let rd = group.datum();
    let marks = group.node_marks();
    let rank = rd.rank();
    group
        .nodes()
        .iter()
        .enumerate()
        .map(|(j, node)| {
            let Some(pos) = node.simple_position else {
                return vec![Rational64::zero(); rank];
            };
            let comp = &group.components()[node.component];
            // Solve <a_i, sum_k c_k a_k^vee> = delta_{i,pos} / mark.
            let cartan: Vec<Vec<Rational64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&k| Rational64::from_integer(rd.cartan(i, k))).collect())
                .collect();
            let rhs: Vec<Rational64> = comp
                .iter()
                .map(|&i| {
                    if i == pos {
                        Rational64::new(1, marks[j])
                    } else {
                        Rational64::zero()
                    }
                })
                .collect();
            let coeffs = lattice::solve_rational_unique(&cartan, &rhs).expect("Cartan matrices are invertible");
            let mut x = vec![Rational64::zero(); rank];
            for (c, &k) in coeffs.iter().zip(comp) {
                let coroot = rd.coroot(rd.simple_indices()[k]);
                for (xi, &a) in x.iter_mut().zip(coroot) {
                    *xi += c * a;
                }
            }
            x
        })
        .collect()
}

/// Value of the affine node `j` at the point `x`.
pub fn node_value(group: &Group, j: usize, x: &[Rational64]) -> Rational64 {
    let node = &group.nodes()[j];
    lattice::rdot(group.datum().root(node.root), x) + node.offset
}

/// Barycenter of the face where exactly the nodes in `j` vanish.
pub fn barycenter(group: &Group, vertices: &[Vec<Rational64>], j: &[usize]) -> Vec<Rational64> {
    let rank = group.datum().rank();
    let mut x = vec![Rational64::zero(); rank];
    for c in 0..group.components().len() {
        let free: Vec<usize> = (0..group.nodes().len())
            .filter(|&k| group.nodes()[k].component == c && !j.contains(&k))
            .collect();
        let weight = Rational64::new(1, free.len() as i64);
        for k in free {
            for (xi, vi) in x.iter_mut().zip(&vertices[k]) {
                *xi += vi * weight;
            }
        }
    }
    x
}

/// All Frobenius-stable node subsets that are proper on every component,
/// ordered by size and then lexicographically.
pub fn facet_types(group: &Group) -> Vec<FacetType> {
    let nodes = group.nodes();
    let perm = group.facet_node_permutation();
    let vertices = alcove_vertices(group);
    let n = nodes.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let j: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        let proper = (0..group.components().len())
            .all(|c| (0..n).any(|k| nodes[k].component == c && mask & (1 << k) == 0));
        if !proper {
            continue;
        }
        if j.iter().any(|&k| mask & (1 << perm[k]) == 0) {
            continue;
        }
        let barycenter = barycenter(group, &vertices, &j);
        out.push(FacetType { nodes: j, barycenter });
    }
    out.sort_by(|a, b| (a.nodes.len(), &a.nodes).cmp(&(b.nodes.len(), &b.nodes)));
    out
}

/// Root datum of the reductive quotient at a facet: the roots integral at
/// the barycenter, based by the gradients of the facet's nodes.
pub fn parahoric_quotient(group: &Group, facet: &FacetType) -> Result<RootDatum> {
    let rd = group.datum();
    let keep: Vec<usize> = (0..rd.num_roots())
        .filter(|&i| lattice::rdot(rd.root(i), &facet.barycenter).is_integer())
        .collect();
    let simple: Vec<usize> = facet
        .nodes
        .iter()
        .map(|&k| {
            let r = group.nodes()[k].root;
            keep.iter().position(|&x| x == r).expect("facet nodes vanish at the barycenter")
        })
        .collect();
    Ok(RootDatum::validate(RawRootDatum {
        name: format!("{}{}", rd.name(), group.facet_label(&facet.nodes)),
        rank: rd.rank(),
        roots: keep.iter().map(|&i| rd.root(i).to_vec()).collect(),
        coroots: keep.iter().map(|&i| rd.coroot(i).to_vec()).collect(),
        simple,
    })?)
}

/// An element of `Ω^F`: a diagram symmetry realized by an element of the
/// extended affine Weyl group of `G` and commuting with Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApartmentSymmetry {
    pub symmetry: DiagramSymmetry,
    /// Translation part in `X^vee`.
    pub translation: Vec<i64>,
}

/// The standard apartment of a group: facet types, facet groups and symmetries.
#[derive(Clone, Debug)]
pub struct Apartment<'g> {
    group: &'g Group,
    facets: Vec<FacetType>,
    subgroups: Vec<Subgroup>,
    index: HashMap<Vec<usize>, usize>,
    symmetries: Vec<ApartmentSymmetry>,
}

impl<'g> Apartment<'g> {
    pub fn new(group: &'g Group) -> Result<Apartment<'g>> {
        let facets = facet_types(group);
        let w = group.weyl();
        let subgroups: Vec<Subgroup> = facets
            .iter()
            .map(|f| reflection_subgroup(w, group.nodes(), &f.nodes))
            .collect();
        for f in &facets {
            if !certify_facet_embedding(group.datum(), group.nodes(), &f.nodes, EMBEDDING_BOUND) {
                return Err(Error::BoundExceeded { bound: EMBEDDING_BOUND });
            }
        }
        let index = facets.iter().enumerate().map(|(i, f)| (f.nodes.clone(), i)).collect();
        let symmetries = apartment_symmetries(group);
        Ok(Apartment { group, facets, subgroups, index, symmetries })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn facets(&self) -> &[FacetType] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &FacetType {
        &self.facets[i]
    }

    /// The facet group `W_J` as a subgroup of `W_0`.
    pub fn facet_group(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn facet_index(&self, nodes: &[usize]) -> Option<usize> {
        self.index.get(nodes).copied()
    }

    pub fn facet_label(&self, i: usize) -> String {
        self.group.facet_label(&self.facets[i].nodes)
    }

    pub fn symmetries(&self) -> &[ApartmentSymmetry] {
        &self.symmetries
    }

    /// The facet whose nodes are all the finite simple nodes, when it is
    /// Frobenius-stable.
    pub fn hyperspecial_facet(&self) -> Option<usize> {
        let finite: Vec<usize> = (0..self.group.nodes().len())
            .filter(|&k| !self.group.nodes()[k].is_affine())
            .collect();
        self.facet_index(&finite)
    }

    /// Chamber facet (no vanishing node).
    pub fn iwahori_facet(&self) -> usize {
        self.facet_index(&[]).expect("the chamber is always a facet")
    }

    /// Canonical representative of `v` under `W_J` of facet `i`.
    pub fn canonical_at(&self, i: usize, v: &ClassVector) -> ClassVector {
        self.group.weyl().canonical_rep(&self.subgroups[i], v)
    }

    /// Whether the `W_J`-class of the canonical vector `c` is Frobenius-stable.
    pub fn is_f_stable_at(&self, i: usize, c: &ClassVector) -> bool {
        self.canonical_at(i, &self.group.facet_frobenius_image(c)) == *c
    }

    /// All Frobenius-stable `W_J`-classes of order dividing `n` that are
    /// invertible in the coefficient ring, by brute force over `(1/n) X / X`.
    pub fn facet_classes(&self, i: usize, n: u64, lambda: Lambda) -> Result<BTreeSet<ClassVector>> {
        let f = self.group.frobenius();
        f.check_level(n)?;
        crate::ss_classes::check_level_size(self.group.datum().rank(), n)?;
        let mut out = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for v in level_points(self.group.datum().rank(), n) {
            if !f.admits_order(v.order(), lambda) {
                continue;
            }
            let c = self.canonical_at(i, &v);
            if seen.insert(c.clone()) && self.is_f_stable_at(i, &c) {
                out.insert(c);
            }
        }
        Ok(out)
    }
}

/// Diagram symmetries with an integral translation part that commute with
/// the Frobenius node permutation.
fn apartment_symmetries(group: &Group) -> Vec<ApartmentSymmetry> {
    let rd = group.datum();
    let nodes = group.nodes();
    let fperm = group.facet_node_permutation();
    let gradients: Vec<Vec<i64>> = nodes.iter().map(|n| rd.root(n.root).to_vec()).collect();
    let system = IntMatrix::from_rows(&gradients).unwrap_or_else(|| IntMatrix::zeros(0, rd.rank()));
    let mut out = Vec::new();
    for sym in group.diagram_symmetries() {
        let commutes = (0..nodes.len()).all(|j| sym.perm[fperm[j]] == fperm[sym.perm[j]]);
        if !commutes {
            continue;
        }
        // <b_i, lambda> = k_{pi^{-1}(i)} - k_i for every node i.
        let mut rhs = vec![0i64; nodes.len()];
        for (j, &pj) in sym.perm.iter().enumerate() {
            rhs[pj] = nodes[j].offset - nodes[pj].offset;
        }
        let translation = if nodes.is_empty() {
            Some(vec![0; rd.rank()])
        } else {
            lattice::solve_integer(&system, &rhs)
        };
        if let Some(translation) = translation {
            out.push(ApartmentSymmetry { symmetry: sym.clone(), translation });
        }
    }
    out
}

/// `W_0`-orbit of a facet class.
pub fn psi_sigma(ap: &Apartment, class: &ClassVector) -> InertialParam {
    let w = ap.group().weyl();
    InertialParam::from_canonical(w.canonical_rep(&w.whole(), class), ap.group().frobenius().lambda())
}

/// Whether facet `sigma` lies in the closure of facet `omega`.
pub fn is_face(ap: &Apartment, omega: usize, sigma: usize) -> bool {
    let js = &ap.facet(sigma).nodes;
    ap.facet(omega).nodes.iter().all(|k| js.contains(k))
}

/// Restriction of a class at `omega` to its face `sigma` (`J_omega ⊆ J_sigma`).
pub fn face_restriction(ap: &Apartment, class: &ClassVector, omega: usize, sigma: usize) -> Result<GeometricClass> {
    if !is_face(ap, omega, sigma) {
        return Err(Error::NotAFace { omega: ap.facet_label(omega), sigma: ap.facet_label(sigma) });
    }
    Ok(GeometricClass { rep: ap.canonical_at(sigma, class), context: ClassContext::Facet(ap.facet(sigma).nodes.clone()) })
}

/// Classes assigned to each facet type, keyed by the facet's node set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassSystem {
    pub assignment: BTreeMap<Vec<usize>, BTreeSet<ClassVector>>,
}

impl ClassSystem {
    pub fn at(&self, nodes: &[usize]) -> BTreeSet<ClassVector> {
        self.assignment.get(nodes).cloned().unwrap_or_default()
    }
}

/// The fiber of `phi` at every facet: Frobenius-stable `W_J`-classes inside
/// the `W_0`-orbit of `phi`.
pub fn compute_s_phi(ap: &Apartment, phi: &InertialParam) -> ClassSystem {
    let group = ap.group();
    let w = group.weyl();
    let orbit = w.orbit(&w.whole(), phi.rep());
    let admissible = group.frobenius().admits_order(phi.order, phi.lambda);
    let mut assignment = BTreeMap::new();
    for (i, facet) in ap.facets().iter().enumerate() {
        let mut set = BTreeSet::new();
        if admissible {
            for u in &orbit {
                let c = ap.canonical_at(i, u);
                if !set.contains(&c) && ap.is_f_stable_at(i, &c) {
                    set.insert(c);
                }
            }
        }
        assignment.insert(facet.nodes.clone(), set);
    }
    ClassSystem { assignment }
}

/// Outcome of a coherence check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub passed: bool,
    pub face_pairs_checked: usize,
    pub symmetry_checks: usize,
    /// Symmetries are those of the standard apartment only.
    pub symmetry_scope: &'static str,
    pub counterexample: Option<String>,
}

/// Checks compatibility with face restriction (every face pair) and with
/// the apartment symmetries.
pub fn verify_zero_coherence(ap: &Apartment, s: &ClassSystem) -> CoherenceReport {
    let group = ap.group();
    let w = group.weyl();
    let lambda = group.frobenius().lambda();
    let mut report = CoherenceReport {
        passed: true,
        face_pairs_checked: 0,
        symmetry_checks: 0,
        symmetry_scope: "apartment",
        counterexample: None,
    };
    for (key, classes) in &s.assignment {
        let Some(i) = ap.facet_index(key) else {
            report.passed = false;
            report.counterexample = Some(format!("unknown facet {}", group.facet_label(key)));
            return report;
        };
        for c in classes {
            let bad = ap.canonical_at(i, c) != *c
                || !ap.is_f_stable_at(i, c)
                || !group.frobenius().admits_order(c.order(), lambda);
            if bad {
                report.passed = false;
                report.counterexample = Some(format!("{c} is not a stable class at {}", ap.facet_label(i)));
                return report;
            }
        }
    }
    let n = ap.facets().len();
    for omega in 0..n {
        for sigma in 0..n {
            if !is_face(ap, omega, sigma) {
                continue;
            }
            let (jo, js) = (&ap.facet(omega).nodes, &ap.facet(sigma).nodes);
            report.face_pairs_checked += 1;
            let target = s.at(js);
            let mut preimage = BTreeSet::new();
            for t in &target {
                for u in w.orbit(ap.facet_group(sigma), t) {
                    let c = ap.canonical_at(omega, &u);
                    if group.frobenius().admits_order(c.order(), lambda) && ap.is_f_stable_at(omega, &c) {
                        preimage.insert(c);
                    }
                }
            }
            if preimage != s.at(jo) {
                report.passed = false;
                report.counterexample = Some(format!(
                    "restriction from {} to {}: preimage {:?} differs from {:?}",
                    ap.facet_label(omega),
                    ap.facet_label(sigma),
                    preimage,
                    s.at(jo)
                ));
                return report;
            }
        }
    }
    for sym in ap.symmetries() {
        let m = w.element(sym.symmetry.element);
        for (i, facet) in ap.facets().iter().enumerate() {
            let mut image: Vec<usize> = facet.nodes.iter().map(|&k| sym.symmetry.perm[k]).collect();
            image.sort_unstable();
            let Some(gi) = ap.facet_index(&image) else {
                report.passed = false;
                report.counterexample = Some(format!("symmetry sends {} outside the facets", ap.facet_label(i)));
                return report;
            };
            report.symmetry_checks += 1;
            let moved: BTreeSet<ClassVector> = s.at(&facet.nodes).iter().map(|c| ap.canonical_at(gi, &c.apply(m))).collect();
            if moved != s.at(&image) {
                report.passed = false;
                report.counterexample = Some(format!(
                    "symmetry {:?} moves the classes at {} to {:?}, but {} carries {:?}",
                    sym.symmetry.perm,
                    ap.facet_label(i),
                    moved,
                    ap.facet_label(gi),
                    s.at(&image)
                ));
                return report;
            }
        }
    }
    report
}

/// Per-facet bookkeeping of a partition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetPartition {
    pub facet: String,
    pub classes: usize,
    pub assigned: usize,
    pub disjoint: bool,
    pub covered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub passed: bool,
    pub order_bound: u64,
    pub parameters: usize,
    pub facets: Vec<FacetPartition>,
}

/// Checks that the fibers of all parameters of order dividing `n` partition
/// the stable classes at every facet.
pub fn verify_partition(ap: &Apartment, n: u64, lambda: Lambda) -> Result<PartitionReport> {
    let params = enumerate_inertial_params(ap.group(), n, lambda)?;
    let systems: Vec<ClassSystem> = params.iter().map(|p| compute_s_phi(ap, p)).collect();
    let mut facets = Vec::new();
    for (i, facet) in ap.facets().iter().enumerate() {
        let universe = ap.facet_classes(i, n, lambda)?;
        let mut union = BTreeSet::new();
        let mut assigned = 0;
        let mut disjoint = true;
        for s in &systems {
            for c in s.at(&facet.nodes) {
                assigned += 1;
                if !union.insert(c) {
                    disjoint = false;
                }
            }
        }
        facets.push(FacetPartition {
            facet: ap.facet_label(i),
            classes: universe.len(),
            assigned,
            disjoint,
            covered: union == universe,
        });
    }
    let passed = facets.iter().all(|f| f.disjoint && f.covered);
    Ok(PartitionReport { passed, order_bound: n, parameters: params.len(), facets })
}

/// Whether some facet carries a class over `phi`.
pub fn is_attained(ap: &Apartment, phi: &InertialParam) -> bool {
    compute_s_phi(ap, phi).assignment.values().any(|s| !s.is_empty())
}

/// Checks `psi_sigma ∘ restriction = psi_omega` for every face pair and every
/// stable class of order dividing `n`. Returns the number of checks made.
pub fn verify_composition_law(ap: &Apartment, n: u64, lambda: Lambda) -> Result<std::result::Result<usize, String>> {
    let mut checks = 0;
    for omega in 0..ap.facets().len() {
        let classes = ap.facet_classes(omega, n, lambda)?;
        for sigma in 0..ap.facets().len() {
            if !is_face(ap, omega, sigma) {
                continue;
            }
            for c in &classes {
                let restricted = face_restriction(ap, c, omega, sigma)?;
                if psi_sigma(ap, &restricted.rep) != psi_sigma(ap, c) {
                    return Ok(Err(format!(
                        "{c} at {} restricts to {} at {}",
                        ap.facet_label(omega),
                        restricted.rep,
                        ap.facet_label(sigma)
                    )));
                }
                checks += 1;
            }
        }
    }
    Ok(Ok(checks))
}
