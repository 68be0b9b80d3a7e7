//! Levi subgroups: parameter maps, restriction fibers, the equivalence
//! criterion and the discreteness search.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::inertial_params::InertialParam;
use crate::lattice;
use crate::ss_classes::{ClassContext, ClassVector, GeometricClass};
use crate::weyl::Subgroup;

/// A Frobenius-stable standard Levi subgroup, given by simple root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviContext {
    delta_m: Vec<usize>,
    weyl: Subgroup,
}

impl LeviContext {
    pub fn new(group: &Group, delta_m: &[usize]) -> Result<Self> {
        let rd = group.datum();
        let mut delta: Vec<usize> = delta_m.to_vec();
        delta.sort_unstable();
        delta.dedup();
        rd.simple_positions_of(&delta)?;
        let theta = group.frobenius().theta().matrix();
        for &a in &delta {
            let image = theta.apply(rd.root(a));
            if !delta.iter().any(|&b| rd.root(b) == image.as_slice()) {
                return Err(Error::Levi(format!("theta does not preserve the simple root {a}")));
            }
        }
        let weyl = group.weyl().reflection_subgroup_of_roots(&delta);
        Ok(LeviContext { delta_m: delta, weyl })
    }

    /// Levi given by positions in the simple list rather than root indices.
    pub fn from_positions(group: &Group, positions: &[usize]) -> Result<Self> {
        let simple = group.datum().simple_indices();
        let mut delta = Vec::with_capacity(positions.len());
        for &p in positions {
            let idx = *simple
                .get(p)
                .ok_or_else(|| Error::Levi(format!("simple position {p} out of range")))?;
            delta.push(idx);
        }
        Self::new(group, &delta)
    }

    pub fn whole(group: &Group) -> Self {
        Self::new(group, group.datum().simple_indices()).expect("theta preserves the simple roots")
    }

    pub fn torus(group: &Group) -> Self {
        Self::new(group, &[]).expect("the empty Levi is always stable")
    }

    pub fn delta_m(&self) -> &[usize] {
        &self.delta_m
    }

    pub fn weyl(&self) -> &Subgroup {
        &self.weyl
    }

    pub fn canonical(&self, group: &Group, v: &ClassVector) -> ClassVector {
        group.weyl().canonical_rep(&self.weyl, v)
    }

    pub fn class(&self, group: &Group, v: &ClassVector) -> GeometricClass {
        GeometricClass { rep: self.canonical(group, v), context: ClassContext::Levi(self.delta_m.clone()) }
    }

    /// Whether the `W_M`-class of `v` is Frobenius-stable.
    pub fn is_f_stable(&self, group: &Group, v: &ClassVector) -> bool {
        let c = self.canonical(group, v);
        self.canonical(group, &group.frobenius_image(&c)) == c
    }
}

/// The parameter of `G` obtained from a class of `M`.
pub fn levi_param_map(group: &Group, class: &ClassVector) -> InertialParam {
    let w = group.weyl();
    InertialParam::from_canonical(w.canonical_rep(&w.whole(), class), group.frobenius().lambda())
}

/// Frobenius-stable `W_M`-classes inside the `W_0`-orbit of `phi`, sorted.
pub fn restriction_fibers(group: &Group, phi: &InertialParam, m: &LeviContext) -> Vec<GeometricClass> {
    let w = group.weyl();
    let classes: BTreeSet<ClassVector> = w
        .orbit(&w.whole(), phi.rep())
        .iter()
        .map(|u| m.canonical(group, u))
        .filter(|c| m.is_f_stable(group, c))
        .collect();
    classes
        .into_iter()
        .map(|rep| GeometricClass { rep, context: ClassContext::Levi(m.delta_m.clone()) })
        .collect()
}

/// Whether the stabilizer of `v` in `W_0`, and its reflection part, lie in `W_M`.
pub fn satisfies_equivalence_criterion(group: &Group, v: &ClassVector, m: &LeviContext) -> bool {
    let w = group.weyl();
    let stab = w.stabilizer(&w.whole(), v);
    let fixing = w.fixing_reflection_subgroup(group.datum(), v);
    stab.is_subgroup_of(&m.weyl) && fixing.is_subgroup_of(&m.weyl)
}

/// Classes `W_M (w v')` for `w` outside `W_M` and `v'` in the `W_M`-orbit of
/// `v`, paired with the element used.
pub fn crossed_classes(group: &Group, v: &ClassVector, m: &LeviContext) -> Vec<(usize, ClassVector)> {
    let w = group.weyl();
    let mut out = Vec::new();
    for e in 0..w.order() {
        if m.weyl.contains(e) {
            continue;
        }
        for u in w.orbit(&m.weyl, v) {
            out.push((e, m.canonical(group, &w.apply(e, &u))));
        }
    }
    out
}

/// Evidence that a parameter extends into a proper Levi of the L-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscretenessWitness {
    /// Weyl element `w` of the twist `w theta`.
    pub twist: usize,
    pub twist_matrix: Vec<Vec<i64>>,
    /// Simple root indices of the standard Levi.
    pub levi: Vec<usize>,
    pub representative: ClassVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscretenessReport {
    pub discrete: bool,
    pub witness: Option<DiscretenessWitness>,
}

/// Searches for a twist `w theta`, a standard Levi `M` whose roots it
/// preserves and whose twisted central torus is not central in the dual
/// group, and a representative `v'` with `w'' w theta(q v') = v'` for some
/// `w''` in `W_M`. The parameter is discrete when no such data exist.
pub fn is_discrete(group: &Group, phi: &InertialParam) -> DiscretenessReport {
    let rd = group.datum();
    let w = group.weyl();
    let theta = group.frobenius().theta().matrix();
    let q = group.frobenius().q() as i64;
    let simple = rd.simple_indices();
    let orbit = w.orbit(&w.whole(), phi.rep());
    let levis: Vec<(Vec<usize>, Vec<usize>, Subgroup)> = (0u64..(1 << simple.len()))
        .map(|mask| {
            let delta: Vec<usize> = (0..simple.len()).filter(|&k| mask & (1 << k) != 0).map(|k| simple[k]).collect();
            let positions: Vec<usize> = (0..simple.len()).filter(|&k| mask & (1 << k) != 0).collect();
            let roots: Vec<usize> = (0..rd.num_roots())
                .filter(|&r| {
                    rd.simple_coefficients(r)
                        .iter()
                        .enumerate()
                        .all(|(k, &c)| c == 0 || positions.contains(&k))
                })
                .collect();
            let sub = w.reflection_subgroup_of_roots(&delta);
            (delta, roots, sub)
        })
        .collect();
    for e in 0..w.order() {
        let twist = w.element(e).mul(theta);
        for (delta, roots, sub) in &levis {
            let preserved = roots.iter().all(|&r| {
                let image = twist.apply(rd.root(r));
                rd.root_index(&image).is_some_and(|i| roots.contains(&i))
            });
            if !preserved || !has_noncentral_fixed_part(group, delta, &twist) {
                continue;
            }
            for v in &orbit {
                let image = v.scale(q).apply(&twist);
                if w.canonical_rep(sub, &image) == w.canonical_rep(sub, v) {
                    return DiscretenessReport {
                        discrete: false,
                        witness: Some(DiscretenessWitness {
                            twist: e,
                            twist_matrix: w.element(e).to_rows(),
                            levi: delta.clone(),
                            representative: v.clone(),
                        }),
                    };
                }
            }
        }
    }
    DiscretenessReport { discrete: true, witness: None }
}

/// Whether `{x : <x, a^vee> = 0 for a in delta, twist x = x}` pairs
/// nontrivially with some coroot.
fn has_noncentral_fixed_part(group: &Group, delta: &[usize], twist: &lattice::IntMatrix) -> bool {
    let rd = group.datum();
    let n = rd.rank();
    let mut rows: Vec<Vec<Rational64>> = delta
        .iter()
        .map(|&a| rd.coroot(a).iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    for i in 0..n {
        rows.push(
            (0..n)
                .map(|j| Rational64::from_integer(twist.get(i, j) - i64::from(i == j)))
                .collect(),
        );
    }
    let basis = lattice::rational_nullspace(&rows, n);
    basis
        .iter()
        .any(|y| rd.coroots().iter().any(|c| lattice::rdot(c, y) != Rational64::from_integer(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ss_classes::Lambda;

    fn cv(entries: &[&str]) -> ClassVector {
        ClassVector::parse(entries).unwrap()
    }

    #[test]
    fn gl2_torus_fibers() {
        let g = Group::split(catalog::gl(2), 7).unwrap();
        let t = LeviContext::torus(&g);
        let phi = InertialParam::new(&g, &cv(&["1/3", "0"]), Lambda::Qlbar).unwrap();
        assert_eq!(restriction_fibers(&g, &phi, &t).len(), 2);
        assert_eq!(levi_param_map(&g, &cv(&["0", "1/3"])), phi);

        let g = Group::split(catalog::gl(2), 2).unwrap();
        let t = LeviContext::torus(&g);
        let phi = InertialParam::new(&g, &cv(&["1/3", "2/3"]), Lambda::Qlbar).unwrap();
        assert!(restriction_fibers(&g, &phi, &t).is_empty());
        assert_eq!(restriction_fibers(&g, &phi, &LeviContext::whole(&g)).len(), 1);
    }

    #[test]
    fn equivalence_examples() {
        let g = Group::split(catalog::gl(2), 7).unwrap();
        let t = LeviContext::torus(&g);
        assert!(satisfies_equivalence_criterion(&g, &cv(&["1/3", "0"]), &t));
        assert!(!satisfies_equivalence_criterion(&g, &cv(&["1/2", "1/2"]), &t));
        assert!(satisfies_equivalence_criterion(&g, &cv(&["1/2", "1/2"]), &LeviContext::whole(&g)));
    }

    #[test]
    fn discreteness_examples() {
        let g = Group::split(catalog::sl(2), 3).unwrap();
        let half = InertialParam::new(&g, &cv(&["1/2"]), Lambda::Qlbar).unwrap();
        let r = is_discrete(&g, &half);
        assert!(!r.discrete);
        assert_eq!(r.witness.unwrap().levi, Vec::<usize>::new());
        let quarter = InertialParam::new(&g, &cv(&["1/4"]), Lambda::Qlbar).unwrap();
        assert!(is_discrete(&g, &quarter).discrete);
        let t = Group::split(catalog::torus(2), 3).unwrap();
        assert!(is_discrete(&t, &InertialParam::trivial(&t, Lambda::Qlbar)).discrete);
    }

    #[test]
    fn unstable_levi_is_rejected() {
        let rd = catalog::gl(3);
        let g = Group::new(
            rd.clone(),
            crate::ss_classes::FrobeniusDescriptor::twisted(&rd, catalog::gl_flip(3), 3).unwrap(),
        )
        .unwrap();
        let a = rd.simple_indices()[0];
        assert!(LeviContext::new(&g, &[a]).is_err());
        assert!(LeviContext::new(&g, rd.simple_indices()).is_ok());
    }
}
