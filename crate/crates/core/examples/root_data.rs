//! Root data: validation, canonical order, the dual datum and transposes.

use level_zero::root_datum::{transpose_automorphism, BasedAutomorphism};
use level_zero::{catalog, RawRootDatum, RootDatum};

fn main() {
    let raw = RawRootDatum {
        name: "Sp4".into(),
        rank: 2,
        roots: vec![vec![1, -1], vec![0, 2], vec![-1, 1], vec![0, -2], vec![1, 1], vec![-1, -1], vec![2, 0], vec![-2, 0]],
        coroots: vec![vec![1, -1], vec![0, 1], vec![-1, 1], vec![0, -1], vec![1, 1], vec![-1, -1], vec![1, 0], vec![-1, 0]],
        simple: vec![0, 1],
    };
    let rd = RootDatum::validate(raw).expect("valid datum");
    println!("{}: {} roots, simple roots:", rd.name(), rd.num_roots());
    for &i in rd.simple_indices() {
        println!("  {:?} with coroot {:?}", rd.root(i), rd.coroot(i));
    }
    let top = rd.highest_root(&rd.components()[0]);
    println!("highest root {:?}", rd.root(top));

    let dual = rd.dual();
    println!("{} has simple roots {:?}", dual.name(), dual.simple_indices().iter().map(|&i| dual.root(i)).collect::<Vec<_>>());
    assert_eq!(dual.dual(), rd);

    let gl3 = catalog::gl(3);
    let flip = BasedAutomorphism::new(&gl3, catalog::gl_flip(3)).unwrap();
    let t = transpose_automorphism(&gl3, &flip).unwrap();
    println!("flip of GL3 has order {}, transpose {:?}", flip.order(), t.matrix().to_rows());

    let bad = RawRootDatum { name: "bad".into(), rank: 1, roots: vec![vec![1], vec![-1]], coroots: vec![vec![1], vec![-1]], simple: vec![0] };
    println!("pairing check: {}", RootDatum::validate(bad).unwrap_err());
}
