use level_zero::ss_classes::{class_order, ell_regular_part, enumerate_f_stable_orbits, frobenius_image};
use level_zero::{catalog, ClassVector, Error, FrobeniusDescriptor, Group, Lambda};

fn cv(entries: &[&str]) -> ClassVector {
    ClassVector::parse(entries).unwrap()
}

#[test]
fn orders() {
    assert_eq!(class_order(&ClassVector::zero(2)), 1);
    assert_eq!(class_order(&cv(&["1/3", "2/3"])), 3);
    assert_eq!(class_order(&cv(&["1/6", "1/4"])), 12);
    assert!(matches!(cv(&["1/6"]).tame(3), Err(Error::NotTame { p: 3, .. })));
    assert!(cv(&["1/4"]).tame(3).is_ok());
}

#[test]
fn frobenius_images() {
    let f = FrobeniusDescriptor::split(1, 5).unwrap();
    assert_eq!(frobenius_image(&cv(&["1/3"]), &f), cv(&["2/3"]));
    assert_eq!(frobenius_image(&ClassVector::zero(1), &f), ClassVector::zero(1));
    let rd = catalog::gl(2);
    let f = FrobeniusDescriptor::twisted(&rd, catalog::gl_flip(2), 3).unwrap();
    assert_eq!(frobenius_image(&cv(&["1/8", "0"]), &f), cv(&["0", "5/8"]));
}

#[test]
fn stability() {
    let g = Group::split(catalog::sl(2), 3).unwrap();
    let classes = enumerate_f_stable_orbits(&g, 8, Lambda::Qlbar).unwrap();
    let reps: Vec<_> = classes.iter().map(|c| c.rep.clone()).collect();
    assert!(reps.contains(&cv(&["1/4"])));
    assert!(!reps.contains(&cv(&["1/8"])));
}

#[test]
fn ell_regular_parts() {
    assert_eq!(ell_regular_part(&cv(&["1/3"]), 2), cv(&["1/3"]));
    assert_eq!(ell_regular_part(&ClassVector::zero(1), 5), ClassVector::zero(1));
    assert_eq!(ell_regular_part(&cv(&["1/6"]), 3), cv(&["1/2"]));
    assert_eq!(ell_regular_part(&cv(&["1/6"]), 2), cv(&["2/3"]));
}

#[test]
fn enumeration_examples() {
    for rd in [catalog::sl(2), catalog::gl(3), catalog::sp(2)] {
        let g = Group::split(rd, 5).unwrap();
        let one = enumerate_f_stable_orbits(&g, 1, Lambda::Qlbar).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].rep.is_zero());
    }
    let g = Group::split(catalog::sl(2), 3).unwrap();
    assert_eq!(enumerate_f_stable_orbits(&g, 4, Lambda::Qlbar).unwrap().len(), 3);
    let g = g.with_frobenius(g.frobenius().with_lambda(Lambda::Zlbar, Some(2)).unwrap()).unwrap();
    assert_eq!(enumerate_f_stable_orbits(&g, 4, Lambda::Zlbar).unwrap().len(), 1);
    assert!(matches!(enumerate_f_stable_orbits(&g, 9, Lambda::Qlbar), Err(Error::OrderBoundDivisibleByP { .. })));
    assert_eq!(enumerate_f_stable_orbits(&g, 0, Lambda::Qlbar), Err(Error::ZeroOrderBound));
}

#[test]
fn descriptor_validation() {
    assert!(FrobeniusDescriptor::split(1, 6).is_err());
    let f = FrobeniusDescriptor::split(1, 9).unwrap();
    assert_eq!(f.p(), 3);
    assert!(f.with_lambda(Lambda::Zlbar, None).is_err());
    assert!(f.with_lambda(Lambda::Zlbar, Some(3)).is_err());
    assert!(f.with_lambda(Lambda::Zlbar, Some(4)).is_err());
    assert!(f.with_lambda(Lambda::Zlbar, Some(2)).is_ok());
}

#[test]
fn level_size_bound() {
    use level_zero::ss_classes::check_level_size;
    assert!(check_level_size(3, 100).is_ok());
    assert!(matches!(check_level_size(8, 11), Err(Error::BoundExceeded { .. })));
    let g = Group::split(catalog::torus(8), 5).unwrap();
    assert!(matches!(enumerate_f_stable_orbits(&g, 11, Lambda::Qlbar), Err(Error::BoundExceeded { .. })));
}
