use std::collections::BTreeSet;

use level_zero::building::{face_restriction, is_face, parahoric_quotient, verify_composition_law};
use level_zero::{
    catalog, compute_s_phi, enumerate_inertial_params, facet_types, is_attained, psi_sigma, verify_partition,
    verify_zero_coherence, Apartment, ClassVector, FrobeniusDescriptor, Group, InertialParam, Lambda,
};
use num_rational::Rational64;

fn cv(entries: &[&str]) -> ClassVector {
    ClassVector::parse(entries).unwrap()
}

fn set(items: &[ClassVector]) -> BTreeSet<ClassVector> {
    items.iter().cloned().collect()
}

fn division_gl3(q: u64) -> Group {
    let f = FrobeniusDescriptor::split(3, q).unwrap().with_rotation(Some(vec![1])).unwrap();
    Group::new(catalog::gl(3), f).unwrap()
}

#[test]
fn facet_type_counts() {
    let t = Group::split(catalog::torus(2), 3).unwrap();
    let f = facet_types(&t);
    assert_eq!(f.len(), 1);
    assert!(f[0].is_chamber());
    assert_eq!(facet_types(&Group::split(catalog::sl(2), 3).unwrap()).len(), 3);
    assert_eq!(facet_types(&Group::split(catalog::sp(2), 3).unwrap()).len(), 7);
    let d = facet_types(&division_gl3(3));
    assert_eq!(d.len(), 1);
    assert!(d[0].nodes.is_empty());
}

#[test]
fn barycenters_vanish_exactly_on_their_nodes() {
    for g in [Group::split(catalog::sp(2), 3).unwrap(), Group::split(catalog::gl(3), 5).unwrap()] {
        for f in facet_types(&g) {
            for j in 0..g.nodes().len() {
                let value = level_zero::building::node_value(&g, j, &f.barycenter);
                if f.nodes.contains(&j) {
                    assert_eq!(value, Rational64::from_integer(0));
                } else {
                    assert!(value > Rational64::from_integer(0));
                }
            }
        }
    }
}

#[test]
fn parahoric_quotients() {
    let sl2 = Group::split(catalog::sl(2), 3).unwrap();
    let ap = Apartment::new(&sl2).unwrap();
    assert_eq!(parahoric_quotient(&sl2, ap.facet(ap.iwahori_facet())).unwrap().num_roots(), 0);
    let hs = ap.hyperspecial_facet().unwrap();
    assert_eq!(parahoric_quotient(&sl2, ap.facet(hs)).unwrap().num_roots(), 2);

    let sp4 = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&sp4).unwrap();
    let middle = ap.facet_index(&[0, 2]).unwrap();
    let h = Rational64::new(1, 2);
    assert_eq!(ap.facet(middle).barycenter, vec![h, Rational64::from_integer(0)]);
    let quotient = parahoric_quotient(&sp4, ap.facet(middle)).unwrap();
    let roots: BTreeSet<Vec<i64>> = quotient.roots().iter().cloned().collect();
    let expected: BTreeSet<Vec<i64>> = [[2, 0], [-2, 0], [0, 2], [0, -2]].iter().map(|r| r.to_vec()).collect();
    assert_eq!(roots, expected);
    assert_eq!(
        level_zero::generate_weyl(&quotient).unwrap().order(),
        ap.facet_group(middle).order()
    );
}

#[test]
fn psi_at_facets() {
    let sp4 = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&sp4).unwrap();
    let middle = ap.facet_index(&[0, 2]).unwrap();
    let a = ap.canonical_at(middle, &cv(&["1/2", "0"]));
    let b = ap.canonical_at(middle, &cv(&["0", "1/2"]));
    assert_ne!(a, b);
    assert_eq!(psi_sigma(&ap, &a), psi_sigma(&ap, &b));
    assert!(psi_sigma(&ap, &ClassVector::zero(2)).rep().is_zero());
}

#[test]
fn face_restrictions() {
    let sp4 = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&sp4).unwrap();
    let chamber = ap.iwahori_facet();
    let middle = ap.facet_index(&[0, 2]).unwrap();
    assert!(is_face(&ap, chamber, middle));
    assert!(!is_face(&ap, middle, chamber));
    assert!(face_restriction(&ap, &ClassVector::zero(2), middle, chamber).is_err());
    let same = face_restriction(&ap, &cv(&["1/4", "1/2"]), middle, middle).unwrap();
    assert_eq!(same.rep, ap.canonical_at(middle, &cv(&["1/4", "1/2"])));
    // The middle vertex group only changes signs, so (1/2, 0) is its own
    // canonical form there.
    let r = face_restriction(&ap, &cv(&["1/2", "0"]), chamber, middle).unwrap();
    assert_eq!(r.rep, cv(&["1/2", "0"]));
    let hs = ap.facet_index(&[0, 1]).unwrap();
    let r = face_restriction(&ap, &cv(&["1/2", "0"]), chamber, hs).unwrap();
    assert_eq!(r.rep, cv(&["0", "1/2"]));
}

#[test]
fn class_systems() {
    let g = Group::split(catalog::sl(2), 3).unwrap();
    let ap = Apartment::new(&g).unwrap();
    let trivial = compute_s_phi(&ap, &InertialParam::trivial(&g, Lambda::Qlbar));
    assert!(trivial.assignment.values().all(|s| s == &set(&[ClassVector::zero(1)])));

    let quarter = InertialParam::new(&g, &cv(&["1/4"]), Lambda::Qlbar).unwrap();
    let s = compute_s_phi(&ap, &quarter);
    assert!(s.at(&[]).is_empty());
    assert_eq!(s.at(&[0]).len(), 1);
    assert_eq!(s.at(&[1]).len(), 1);

    let g5 = Group::split(catalog::sl(2), 5).unwrap();
    let ap5 = Apartment::new(&g5).unwrap();
    let quarter = InertialParam::new(&g5, &cv(&["1/4"]), Lambda::Qlbar).unwrap();
    assert_eq!(compute_s_phi(&ap5, &quarter).at(&[]), set(&[cv(&["1/4"]), cv(&["3/4"])]));
}

#[test]
fn coherence() {
    let g = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&g).unwrap();
    for phi in enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap() {
        let s = compute_s_phi(&ap, &phi);
        assert!(verify_zero_coherence(&ap, &s).passed, "{}", phi.rep());
    }
    let phi = InertialParam::new(&g, &cv(&["1/2", "0"]), Lambda::Qlbar).unwrap();
    let mut s = compute_s_phi(&ap, &phi);
    let middle = ap.facet(ap.facet_index(&[0, 2]).unwrap()).nodes.clone();
    let first = s.at(&middle).into_iter().next().unwrap();
    s.assignment.get_mut(&middle).unwrap().remove(&first);
    let report = verify_zero_coherence(&ap, &s);
    assert!(!report.passed);
    assert!(report.counterexample.is_some());

    let mut everything = level_zero::ClassSystem::default();
    for i in 0..ap.facets().len() {
        everything.assignment.insert(ap.facet(i).nodes.clone(), ap.facet_classes(i, 8, Lambda::Qlbar).unwrap());
    }
    assert!(verify_zero_coherence(&ap, &everything).passed);
}

#[test]
fn partitions() {
    for (rd, q) in [(catalog::sl(2), 3), (catalog::sp(2), 3), (catalog::gl(2), 5)] {
        let g = Group::split(rd, q).unwrap();
        let ap = Apartment::new(&g).unwrap();
        assert!(verify_partition(&ap, 1, Lambda::Qlbar).unwrap().passed);
        let r = verify_partition(&ap, 8, Lambda::Qlbar).unwrap();
        assert!(r.passed);
        for f in &r.facets {
            assert_eq!(f.classes, f.assigned);
        }
        assert!(verify_partition(&ap, 6, Lambda::Qlbar).is_err() || q != 3);
    }
}

#[test]
fn composition_law() {
    let g = Group::split(catalog::sp(2), 5).unwrap();
    let ap = Apartment::new(&g).unwrap();
    assert!(verify_composition_law(&ap, 4, Lambda::Qlbar).unwrap().is_ok());
}

#[test]
fn attainment() {
    let g = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&g).unwrap();
    for phi in enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap() {
        assert!(is_attained(&ap, &phi));
    }
    let d = division_gl3(3);
    let ap = Apartment::new(&d).unwrap();
    assert!(is_attained(&ap, &InertialParam::trivial(&d, Lambda::Qlbar)));
    let half = InertialParam::new(&d, &cv(&["1/2", "0", "0"]), Lambda::Qlbar).unwrap();
    assert!(!is_attained(&ap, &half));
    let scalar = InertialParam::new(&d, &cv(&["1/2", "1/2", "1/2"]), Lambda::Qlbar).unwrap();
    assert!(is_attained(&ap, &scalar));
}
