//! An inner form of GL3 through a rotation of the affine diagram: one facet
//! type survives and only parameters stable at it are attained.

use level_zero::{catalog, enumerate_inertial_params, is_attained, Apartment, FrobeniusDescriptor, Group, Lambda};

fn main() {
    let f = FrobeniusDescriptor::split(3, 3).unwrap().with_rotation(Some(vec![1])).unwrap();
    let g = Group::new(catalog::gl(3), f).unwrap();
    let ap = Apartment::new(&g).unwrap();
    println!("facet types: {:?}", (0..ap.facets().len()).map(|i| ap.facet_label(i)).collect::<Vec<_>>());
    for phi in enumerate_inertial_params(&g, 4, Lambda::Qlbar).unwrap() {
        println!("{} attained {}", phi.rep(), is_attained(&ap, &phi));
    }
}
