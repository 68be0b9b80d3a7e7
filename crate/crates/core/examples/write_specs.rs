//! Writes the bundled group specs.
//!
//! ```bash
//! cargo run -p level-zero --example write_specs -- crates/core/specs
//! ```

use std::path::PathBuf;

use level_zero::classical::{ClassicalFamily, ClassicalType};
use level_zero::{catalog, GroupSpec, Lambda, RootDatum};

fn split(rd: &RootDatum, q: u64, p: u64) -> GroupSpec {
    GroupSpec::split(rd, q, p)
}

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "specs".into()));
    std::fs::create_dir_all(&dir)?;

    let mut specs = vec![
        ("sl2", split(&catalog::sl(2), 3, 3)),
        ("pgl2", split(&catalog::pgl(2), 3, 3)),
        ("gl2", split(&catalog::gl(2), 7, 7)),
        ("gl3", split(&catalog::gl(3), 5, 5)),
        ("torus2", split(&catalog::torus(2), 3, 3)),
    ];

    let mut sp4 = split(&catalog::sp(2), 3, 3);
    sp4.classical = Some(ClassicalType::new(ClassicalFamily::OddOrthogonal, 2));
    specs.push(("sp4", sp4));

    let mut so5 = split(&catalog::so_odd(2), 3, 3);
    so5.classical = Some(ClassicalType::new(ClassicalFamily::Symplectic, 2));
    specs.push(("so5", so5));

    let mut division = split(&catalog::gl(3), 3, 3);
    division.name = "GL3 inner twist".into();
    division.diagram_rotation = Some(vec![1]);
    specs.push(("gl3_division", division));

    let mut unitary = split(&catalog::gl(3), 5, 5);
    unitary.name = "U3".into();
    unitary.theta = catalog::gl_flip(3).to_rows();
    unitary.classical = Some(ClassicalType::new(ClassicalFamily::Unitary, 3));
    specs.push(("u3", unitary));

    let mut modular = split(&catalog::gl(2), 3, 3);
    modular.lambda = Lambda::Zlbar;
    modular.ell = Some(2);
    specs.push(("gl2_mod2", modular));

    for (file, spec) in specs {
        spec.build().expect("bundled spec is valid");
        let path = dir.join(format!("{file}.json"));
        std::fs::write(&path, spec.to_canonical_json())?;
        println!("{}", path.display());
    }
    Ok(())
}
