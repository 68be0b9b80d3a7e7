//! Levi subgroups: restriction fibers, the equivalence criterion and
//! discreteness with its witness.

use level_zero::{
    catalog, enumerate_inertial_params, is_discrete, restriction_fibers, satisfies_equivalence_criterion, Group,
    Lambda, LeviContext,
};

fn main() {
    for q in [7, 5] {
        let g = Group::split(catalog::gl(2), q).unwrap();
        let torus = LeviContext::torus(&g);
        println!("GL2, q = {q}, torus fibers at order 3:");
        for phi in enumerate_inertial_params(&g, 3, Lambda::Qlbar).unwrap() {
            let fibers = restriction_fibers(&g, &phi, &torus);
            let shown: Vec<String> = fibers
                .iter()
                .map(|f| format!("{}[{}]", f.rep, satisfies_equivalence_criterion(&g, &f.rep, &torus)))
                .collect();
            println!("  {} -> {}", phi.rep(), shown.join(" "));
        }
    }

    let g = Group::split(catalog::sl(2), 3).unwrap();
    for phi in enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap() {
        let r = is_discrete(&g, &phi);
        println!("SL2 {} discrete {} witness {:?}", phi.rep(), r.discrete, r.witness.map(|w| (w.twist, w.levi)));
    }
}
