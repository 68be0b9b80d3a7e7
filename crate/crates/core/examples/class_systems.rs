//! Facets of the fundamental alcove, per-facet fibers of a parameter,
//! coherence and the partition check.

use level_zero::building::verify_composition_law;
use level_zero::cli::format_rational;
use level_zero::{
    catalog, compute_s_phi, enumerate_inertial_params, verify_partition, verify_zero_coherence, Apartment, Group,
    Lambda,
};

fn main() {
    for q in [3, 5] {
        let g = Group::split(catalog::sl(2), q).unwrap();
        let ap = Apartment::new(&g).unwrap();
        println!("SL2 over q = {q}");
        for phi in enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap() {
            let s = compute_s_phi(&ap, &phi);
            let cells: Vec<String> = ap
                .facets()
                .iter()
                .enumerate()
                .map(|(i, f)| format!("{}:{}", ap.facet_label(i), s.at(&f.nodes).len()))
                .collect();
            let coherent = verify_zero_coherence(&ap, &s).passed;
            println!("  {} -> {} coherent={coherent}", phi.rep(), cells.join(" "));
        }
    }

    let g = Group::split(catalog::sp(2), 3).unwrap();
    let ap = Apartment::new(&g).unwrap();
    for (i, f) in ap.facets().iter().enumerate() {
        let x: Vec<String> = f.barycenter.iter().map(format_rational).collect();
        println!("Sp4 facet {} barycenter ({})", ap.facet_label(i), x.join(", "));
    }
    let report = verify_partition(&ap, 8, Lambda::Qlbar).unwrap();
    println!("partition over {} parameters: {}", report.parameters, report.passed);
    println!("composition law: {:?}", verify_composition_law(&ap, 8, Lambda::Qlbar).unwrap());
}
