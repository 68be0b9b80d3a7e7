//! Tame inertial parameters: enumeration, ℓ-adic refinement, connectedness
//! of centralizers, twisted tori and the torus decomposition.

use level_zero::inertial_params::{connectedness_label, twisted_torus_params};
use level_zero::{
    catalog, centralizer_connected, enumerate_inertial_params, refine_to_ql, torus_theta_decomposition, ClassVector,
    Group, InertialParam, Lambda,
};

fn main() {
    let g = Group::split(catalog::sl(2), 3).unwrap();
    println!("SL2, q = 3, order dividing 8 ({} centralizers):", connectedness_label(&g));
    for phi in enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap() {
        println!("  {} order {} connected {}", phi.rep(), phi.order, centralizer_connected(&g, &phi));
    }
    match enumerate_inertial_params(&g, 6, Lambda::Qlbar) {
        Err(e) => println!("N = 6: {e}"),
        Ok(_) => unreachable!(),
    }

    let g5 = Group::split(catalog::sl(2), 5).unwrap();
    let f = g5.frobenius().with_lambda(Lambda::Zlbar, Some(3)).unwrap();
    let g5 = g5.with_frobenius(f).unwrap();
    let phi = InertialParam::new(&g5, &ClassVector::parse(&["1/2"]).unwrap(), Lambda::Zlbar).unwrap();
    let lifts: Vec<String> = refine_to_ql(&g5, &phi, 6).unwrap().iter().map(|p| p.rep().to_string()).collect();
    println!("lifts of {} over ell = 3: {}", phi.rep(), lifts.join(" "));

    let s = g.weyl().simple_generators()[0];
    let elliptic: Vec<String> = twisted_torus_params(&g, s, 4).unwrap().iter().map(|p| p.rep().to_string()).collect();
    println!("through the elliptic torus: {}", elliptic.join(" "));

    let d = torus_theta_decomposition(&catalog::swap2()).unwrap();
    println!("swap on Z^2: fixed {:?}, image {:?}, index {}", d.fixed, d.image, d.index);
}
