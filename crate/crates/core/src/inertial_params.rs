//! Tame inertial parameters as Frobenius-stable `W_0`-orbits, their
//! ℓ-adic refinement, centralizer connectedness, twisted tori, and the
//! decomposition of a lattice under a finite-order automorphism.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{self, IntMatrix};
use crate::root_datum::AUTOMORPHISM_ORDER_BOUND;
use crate::ss_classes::{
    ell_regular_part, enumerate_f_stable_orbits, level_points, ClassContext, ClassVector, GeometricClass, Lambda,
};

/// A tame inertial parameter: a Frobenius-stable `W_0`-orbit of invertible order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InertialParam {
    pub class: GeometricClass,
    pub lambda: Lambda,
    pub order: u64,
}

impl InertialParam {
    /// The parameter through `v`; fails if the orbit is not Frobenius-stable
    /// or its order is not invertible in the coefficient ring.
    pub fn new(group: &Group, v: &ClassVector, lambda: Lambda) -> Result<Self> {
        if v.rank() != group.datum().rank() {
            return Err(Error::Dimension { expected: group.datum().rank(), found: v.rank() });
        }
        let w = group.weyl();
        let all = w.whole();
        let rep = w.canonical_rep(&all, v);
        if !group.frobenius().admits_order(rep.order(), lambda) {
            return Err(Error::BadClass(format!("{rep} has order not invertible in {lambda}")));
        }
        if w.canonical_rep(&all, &group.frobenius_image(&rep)) != rep {
            return Err(Error::BadClass(format!("the orbit of {rep} is not Frobenius-stable")));
        }
        Ok(Self::from_canonical(rep, lambda))
    }

    pub(crate) fn from_canonical(rep: ClassVector, lambda: Lambda) -> Self {
        let order = rep.order();
        InertialParam { class: GeometricClass { rep, context: ClassContext::Weyl }, lambda, order }
    }

    pub fn trivial(group: &Group, lambda: Lambda) -> Self {
        Self::from_canonical(ClassVector::zero(group.datum().rank()), lambda)
    }

    pub fn rep(&self) -> &ClassVector {
        &self.class.rep
    }
}

/// All parameters of order dividing `n`, in canonical order.
pub fn enumerate_inertial_params(group: &Group, n: u64, lambda: Lambda) -> Result<Vec<InertialParam>> {
    Ok(enumerate_f_stable_orbits(group, n, lambda)?
        .into_iter()
        .map(|c| InertialParam::from_canonical(c.rep, lambda))
        .collect())
}

/// The `Q̄ℓ`-parameters of order dividing `n` whose ℓ-regular part is `phi`.
pub fn refine_to_ql(group: &Group, phi: &InertialParam, n: u64) -> Result<Vec<InertialParam>> {
    let f = group.frobenius();
    f.check_level(n)?;
    let ell = f
        .ell()
        .ok_or_else(|| Error::Frobenius("refinement needs ell".into()))?;
    let w = group.weyl();
    let all = w.whole();
    Ok(enumerate_inertial_params(group, n, Lambda::Qlbar)?
        .into_iter()
        .filter(|cand| w.canonical_rep(&all, &ell_regular_part(cand.rep(), ell)) == *phi.rep())
        .collect())
}

/// Whether the stabilizer of the representative in `W_0` is generated by
/// the reflections fixing it.
pub fn centralizer_connected(group: &Group, phi: &InertialParam) -> bool {
    let w = group.weyl();
    let stab = w.stabilizer(&w.whole(), phi.rep());
    let fixing = w.fixing_reflection_subgroup(group.datum(), phi.rep());
    stab.members() == fixing.members()
}

/// `"exact"` when the dual group has torsion-free fundamental group (the
/// roots span a saturated sublattice of `X`), `"proxy"` otherwise.
pub fn connectedness_label(group: &Group) -> &'static str {
    let rd = group.datum();
    if lattice::quotient_torsion(rd.roots(), rd.rank()) == 1 {
        "exact"
    } else {
        "proxy"
    }
}

/// Parameters factoring through the unramified torus of type `w`: orbits of
/// the vectors fixed by `v -> w theta (q v)` with order dividing `n`.
pub fn twisted_torus_params(group: &Group, w: usize, n: u64) -> Result<Vec<InertialParam>> {
    let f = group.frobenius();
    f.check_level(n)?;
    crate::ss_classes::check_level_size(group.datum().rank(), n)?;
    let weyl = group.weyl();
    let all = weyl.whole();
    let twist = weyl.element(w).mul(f.theta().matrix());
    let lambda = f.lambda();
    let mut reps = BTreeSet::new();
    for v in level_points(group.datum().rank(), n) {
        if !f.admits_order(v.order(), lambda) {
            continue;
        }
        if v.scale(f.q() as i64).apply(&twist) == v {
            reps.insert(weyl.canonical_rep(&all, &v));
        }
    }
    Ok(reps
        .into_iter()
        .map(|rep| InertialParam::from_canonical(rep, lambda))
        .collect())
}

/// Sublattices attached to a finite-order automorphism `theta` of `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusDecomposition {
    /// Basis of the fixed lattice `ker(1 - theta)`, saturated in `Z^r`.
    pub fixed: Vec<Vec<i64>>,
    /// Basis of the lattice `im(1 - theta)`.
    pub image: Vec<Vec<i64>>,
    /// Index of `fixed + image` in `Z^r`.
    pub index: u64,
}

pub fn torus_theta_decomposition(theta: &IntMatrix) -> Result<TorusDecomposition> {
    if !theta.is_square() {
        return Err(Error::Dimension { expected: theta.n_rows(), found: theta.n_cols() });
    }
    let r = theta.n_rows();
    if theta.multiplicative_order(AUTOMORPHISM_ORDER_BOUND).is_none() {
        return Err(Error::NotFiniteOrder);
    }
    let one_minus = IntMatrix::identity(r).sub(theta);
    let fixed = lattice::integer_kernel(&one_minus);
    let image = lattice::lattice_basis(&one_minus.transpose().to_rows(), r);
    let mut generators = fixed.clone();
    generators.extend(image.iter().cloned());
    let index = lattice::lattice_index(&generators, r).ok_or(Error::NotFiniteOrder)?;
    Ok(TorusDecomposition { fixed, image, index })
}
