//! Characteristic polynomials of classical dual groups and the
//! compatibility identity at every vertex.

use level_zero::classical::{compatibility_grid, vertex_types};
use level_zero::{char_polynomial, is_self_dual, jordan_multiplicities, ClassVector, ClassicalFamily, ClassicalType};

fn main() {
    let so5 = ClassicalType::new(ClassicalFamily::OddOrthogonal, 2);
    for v in [["0", "0"], ["1/2", "0"], ["1/8", "3/8"]] {
        let p = char_polynomial(&ClassVector::parse(&v).unwrap(), so5, 3).unwrap();
        println!("{so5} at {:?}: {p} self-dual {}", v, is_self_dual(&p));
    }
    for twice_s in 0..7 {
        println!("2s = {twice_s}: {:?}", jordan_multiplicities(twice_s));
    }
    for t in [so5, ClassicalType::new(ClassicalFamily::Symplectic, 2)] {
        let types: Vec<String> = vertex_types(t).iter().map(|v| format!("{} x {}", v.first, v.second)).collect();
        let grid = compatibility_grid(t, 3, 8).unwrap();
        let passed = grid.iter().filter(|r| r.passed).count();
        println!("{t}: vertices {types:?}, {passed}/{} cases pass", grid.len());
    }
}
