//! Torsion points of `X ⊗ Q/Z`: orders, Frobenius images and ℓ-regular parts.

use level_zero::ss_classes::{ell_regular_part, frobenius_image};
use level_zero::{catalog, ClassVector, FrobeniusDescriptor};

fn main() {
    let v = ClassVector::parse(&["1/6", "2/3"]).unwrap();
    println!("{v} has order {}", v.order());
    println!("2-regular part {}", ell_regular_part(&v, 2));
    println!("3-regular part {}", ell_regular_part(&v, 3));

    let rd = catalog::gl(2);
    let split = FrobeniusDescriptor::split(2, 5).unwrap();
    let twisted = FrobeniusDescriptor::twisted(&rd, catalog::gl_flip(2), 5).unwrap();
    let u = ClassVector::parse(&["1/8", "0"]).unwrap();
    println!("split F{u} = {}", frobenius_image(&u, &split));
    println!("unitary F{u} = {}", frobenius_image(&u, &twisted));

    match ClassVector::parse(&["1/5"]).unwrap().tame(5) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
}
