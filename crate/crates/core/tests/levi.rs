use level_zero::functoriality::crossed_classes;
use level_zero::{
    catalog, enumerate_inertial_params, is_discrete, levi_param_map, restriction_fibers,
    satisfies_equivalence_criterion, ClassVector, FrobeniusDescriptor, Group, InertialParam, Lambda, LeviContext,
};

fn cv(entries: &[&str]) -> ClassVector {
    ClassVector::parse(entries).unwrap()
}

#[test]
fn parameter_maps() {
    let g = Group::split(catalog::gl(2), 7).unwrap();
    assert!(levi_param_map(&g, &ClassVector::zero(2)).rep().is_zero());
    assert_eq!(levi_param_map(&g, &cv(&["1/3", "0"])), levi_param_map(&g, &cv(&["0", "1/3"])));
}

#[test]
fn fibers() {
    let g = Group::split(catalog::gl(2), 7).unwrap();
    let phi = InertialParam::new(&g, &cv(&["1/3", "0"]), Lambda::Qlbar).unwrap();
    let whole = restriction_fibers(&g, &phi, &LeviContext::whole(&g));
    assert_eq!(whole.len(), 1);
    assert_eq!(&whole[0].rep, phi.rep());
    assert_eq!(restriction_fibers(&g, &phi, &LeviContext::torus(&g)).len(), 2);

    // q = 2 swaps 1/3 and 2/3, and no vector of the orbit {(1/3,2/3),(2/3,1/3)} is fixed.
    let g = Group::split(catalog::gl(2), 2).unwrap();
    let phi = InertialParam::new(&g, &cv(&["1/3", "2/3"]), Lambda::Qlbar).unwrap();
    assert!(restriction_fibers(&g, &phi, &LeviContext::torus(&g)).is_empty());
    // The orbit of (1/3, 0) is not even stable for q = 2 at the torus level.
    let g = Group::split(catalog::gl(2), 5).unwrap();
    let phi = InertialParam::new(&g, &cv(&["1/3", "2/3"]), Lambda::Qlbar).unwrap();
    assert!(restriction_fibers(&g, &phi, &LeviContext::torus(&g)).is_empty());
}

#[test]
fn round_trip_through_fibers() {
    for (rd, q) in [(catalog::gl(3), 7), (catalog::sp(2), 5), (catalog::sl(3), 7)] {
        let g = Group::split(rd, q).unwrap();
        let n = g.datum().simple_indices().len();
        for mask in 0..(1usize << n) {
            let positions: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
            let m = LeviContext::from_positions(&g, &positions).unwrap();
            for phi in enumerate_inertial_params(&g, 6, Lambda::Qlbar).unwrap() {
                for c in restriction_fibers(&g, &phi, &m) {
                    assert_eq!(levi_param_map(&g, &c.rep), phi);
                }
            }
        }
    }
}

#[test]
fn equivalence_criterion() {
    let g = Group::split(catalog::gl(2), 7).unwrap();
    let t = LeviContext::torus(&g);
    assert!(satisfies_equivalence_criterion(&g, &cv(&["1/3", "0"]), &t));
    assert!(!satisfies_equivalence_criterion(&g, &cv(&["1/2", "1/2"]), &t));
    assert!(satisfies_equivalence_criterion(&g, &cv(&["1/2", "1/2"]), &LeviContext::whole(&g)));

    let g = Group::split(catalog::gl(3), 7).unwrap();
    let m = LeviContext::from_positions(&g, &[0]).unwrap();
    for phi in enumerate_inertial_params(&g, 6, Lambda::Qlbar).unwrap() {
        for c in restriction_fibers(&g, &phi, &m) {
            if satisfies_equivalence_criterion(&g, &c.rep, &m) {
                for (_, crossed) in crossed_classes(&g, &c.rep, &m) {
                    assert_ne!(crossed, c.rep);
                }
            }
        }
    }
}

#[test]
fn discreteness() {
    let t = Group::split(catalog::torus(1), 3).unwrap();
    assert!(is_discrete(&t, &InertialParam::trivial(&t, Lambda::Qlbar)).discrete);
    let g = Group::split(catalog::sl(2), 3).unwrap();
    assert!(!is_discrete(&g, &InertialParam::new(&g, &cv(&["1/2"]), Lambda::Qlbar).unwrap()).discrete);
    assert!(is_discrete(&g, &InertialParam::new(&g, &cv(&["1/4"]), Lambda::Qlbar).unwrap()).discrete);
    for rd in [catalog::sl(2), catalog::gl(2), catalog::sp(2), catalog::sl(3), catalog::pgl(2)] {
        let g = Group::split(rd, 5).unwrap();
        let r = is_discrete(&g, &InertialParam::trivial(&g, Lambda::Qlbar));
        assert!(!r.discrete);
        assert!(r.witness.is_some());
    }
}

#[test]
fn stable_levis() {
    let rd = catalog::gl(3);
    let g = Group::new(rd.clone(), FrobeniusDescriptor::twisted(&rd, catalog::gl_flip(3), 5).unwrap()).unwrap();
    assert!(LeviContext::from_positions(&g, &[0]).is_err());
    assert!(LeviContext::from_positions(&g, &[]).is_ok());
    assert!(LeviContext::from_positions(&g, &[0, 1]).is_ok());
    assert!(LeviContext::from_positions(&g, &[5]).is_err());
}
