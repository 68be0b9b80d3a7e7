//! Weyl groups as matrix groups: orbits, canonical representatives and
//! stabilizers of torsion points.

use level_zero::{catalog, generate_weyl, ClassVector};

fn main() {
    let rd = catalog::sp(2);
    let w = generate_weyl(&rd).unwrap();
    println!("W(Sp4) has order {}", w.order());

    let v = ClassVector::parse(&["1/2", "1/4"]).unwrap();
    let all = w.whole();
    let orbit = w.orbit(&all, &v);
    println!("orbit of {v}: {} points, canonical {}", orbit.len(), w.canonical_rep(&all, &v));

    for x in [["1/2", "0"], ["1/2", "1/2"], ["1/3", "1/3"]] {
        let v = ClassVector::parse(&x).unwrap();
        let stab = w.stabilizer(&all, &v);
        let fixing = w.fixing_reflection_subgroup(&rd, &v);
        println!("{v}: stabilizer {} elements, integral reflections generate {}", stab.order(), fixing.order());
    }
}
