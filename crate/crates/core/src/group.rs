//! A root datum together with its Frobenius, Weyl group and the action of
//! both on the affine Dynkin diagram.

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::root_datum::{AffineNode, RootDatum};
use crate::ss_classes::{frobenius_image, ClassVector, FrobeniusDescriptor};
use crate::weyl::{generate_weyl, WeylGroup};

/// An element of `W_0` permuting the gradients of the affine nodes, with the
/// induced node permutation. These are the linear parts of the diagram
/// automorphisms coming from the adjoint group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSymmetry {
    pub element: usize,
    /// `perm[j]` is the node whose gradient is the image of node `j`'s gradient.
    pub perm: Vec<usize>,
}

/// Everything the rest of the crate needs about one group.
#[derive(Clone, Debug)]
pub struct Group {
    datum: RootDatum,
    frobenius: FrobeniusDescriptor,
    weyl: WeylGroup,
    nodes: Vec<AffineNode>,
    components: Vec<Vec<usize>>,
    diagram_symmetries: Vec<DiagramSymmetry>,
    rotation: Option<DiagramSymmetry>,
    facet_theta: IntMatrix,
    facet_node_perm: Vec<usize>,
}

impl Group {
    pub fn new(datum: RootDatum, frobenius: FrobeniusDescriptor) -> Result<Group> {
        let weyl = generate_weyl(&datum)?;
        Self::with_weyl(datum, frobenius, weyl)
    }

    /// Split group over `Q̄ℓ` with residue field of size `q`.
    pub fn split(datum: RootDatum, q: u64) -> Result<Group> {
        let f = FrobeniusDescriptor::split(datum.rank(), q)?;
        Self::new(datum, f)
    }

    fn with_weyl(datum: RootDatum, frobenius: FrobeniusDescriptor, weyl: WeylGroup) -> Result<Group> {
        let theta = frobenius.theta().matrix();
        if theta.n_rows() != datum.rank() {
            return Err(Error::Dimension { expected: datum.rank(), found: theta.n_rows() });
        }
        datum.automorphism_permutation(theta)?;
        let nodes = datum.affine_simple_system();
        let components = datum.components();
        let theta_perm = node_permutation(&datum, &nodes, theta)
            .ok_or_else(|| Error::Frobenius("theta does not act on the affine diagram".into()))?;
        let diagram_symmetries: Vec<DiagramSymmetry> = (0..weyl.order())
            .filter_map(|e| {
                node_permutation(&datum, &nodes, weyl.element(e)).map(|perm| DiagramSymmetry { element: e, perm })
            })
            .collect();

        let rotation = match frobenius.diagram_rotation() {
            None => None,
            Some(r) => Some(find_rotation(&datum, &nodes, &components, &diagram_symmetries, r)?),
        };
        if let Some(rot) = &rotation {
            let commutes = (0..nodes.len()).all(|j| rot.perm[theta_perm[j]] == theta_perm[rot.perm[j]]);
            if !commutes {
                return Err(Error::Frobenius("diagram rotation does not commute with theta".into()));
            }
        }
        let facet_theta = match &rotation {
            Some(rot) => weyl.element(rot.element).mul(theta),
            None => theta.clone(),
        };
        let facet_node_perm = node_permutation(&datum, &nodes, &facet_theta)
            .expect("rotation composed with theta acts on the diagram");
        Ok(Group {
            datum,
            frobenius,
            weyl,
            nodes,
            components,
            diagram_symmetries,
            rotation,
            facet_theta,
            facet_node_perm,
        })
    }

    /// The same group with another Frobenius descriptor; the Weyl group is reused.
    pub fn with_frobenius(&self, frobenius: FrobeniusDescriptor) -> Result<Group> {
        Self::with_weyl(self.datum.clone(), frobenius, self.weyl.clone())
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn frobenius(&self) -> &FrobeniusDescriptor {
        &self.frobenius
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn nodes(&self) -> &[AffineNode] {
        &self.nodes
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Elements of `W_0` permuting the affine node gradients.
    pub fn diagram_symmetries(&self) -> &[DiagramSymmetry] {
        &self.diagram_symmetries
    }

    pub fn rotation(&self) -> Option<&DiagramSymmetry> {
        self.rotation.as_ref()
    }

    /// Linear action of Frobenius on the standard apartment: theta, composed
    /// with the linear part of the diagram rotation for inner twists.
    pub fn facet_theta(&self) -> &IntMatrix {
        &self.facet_theta
    }

    /// Node permutation induced by [`Group::facet_theta`].
    pub fn facet_node_permutation(&self) -> &[usize] {
        &self.facet_node_perm
    }

    /// Frobenius on classes of the dual group: `theta(q v)`.
    pub fn frobenius_image(&self, v: &ClassVector) -> ClassVector {
        frobenius_image(v, &self.frobenius)
    }

    /// Frobenius on classes attached to facets of the standard apartment.
    pub fn facet_frobenius_image(&self, v: &ClassVector) -> ClassVector {
        v.scale(self.frobenius.q() as i64).apply(&self.facet_theta)
    }

    pub fn node_label(&self, j: usize) -> String {
        let node = &self.nodes[j];
        match node.simple_position {
            Some(p) => format!("a{}", p + 1),
            None if self.components.len() == 1 => "a0".to_string(),
            None => format!("a0.{}", node.component + 1),
        }
    }

    /// Label of a node subset, e.g. `{a0,a2}`.
    pub fn facet_label(&self, j: &[usize]) -> String {
        let parts: Vec<String> = j.iter().map(|&k| self.node_label(k)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Marks of the affine nodes: the coefficient of each simple root in the
    /// highest root of its component, and 1 for the affine nodes.
    pub fn node_marks(&self) -> Vec<i64> {
        self.nodes
            .iter()
            .map(|node| match node.simple_position {
                None => 1,
                Some(p) => {
                    let top = self.datum.highest_root(&self.components[node.component]);
                    self.datum.simple_coefficients(top)[p]
                }
            })
            .collect()
    }
}

/// Permutation of the affine nodes induced by a lattice automorphism, if the
/// automorphism permutes the node gradients.
pub fn node_permutation(rd: &RootDatum, nodes: &[AffineNode], m: &IntMatrix) -> Option<Vec<usize>> {
    nodes
        .iter()
        .map(|node| {
            let image = m.apply(rd.root(node.root));
            nodes.iter().position(|other| rd.root(other.root) == image.as_slice())
        })
        .collect()
}

/// The diagram symmetry moving each component's affine node to the special
/// node selected by `rotation`. Special nodes of a component are listed as
/// the affine node followed by the simple nodes of mark 1 in node order.
fn find_rotation(
    rd: &RootDatum,
    nodes: &[AffineNode],
    components: &[Vec<usize>],
    symmetries: &[DiagramSymmetry],
    rotation: &[i64],
) -> Result<DiagramSymmetry> {
    if rotation.len() != components.len() {
        return Err(Error::Frobenius(format!(
            "diagram_rotation has {} entries for {} components",
            rotation.len(),
            components.len()
        )));
    }
    let mut targets = Vec::with_capacity(components.len());
    for (c, comp) in components.iter().enumerate() {
        let top = rd.highest_root(comp);
        let affine = nodes.iter().position(|n| n.component == c && n.is_affine()).unwrap();
        let mut special = vec![affine];
        special.extend(
            nodes
                .iter()
                .enumerate()
                .filter(|(_, n)| n.component == c)
                .filter(|(_, n)| n.simple_position.is_some_and(|p| rd.simple_coefficients(top)[p] == 1))
                .map(|(j, _)| j),
        );
        let k = rotation[c].rem_euclid(special.len() as i64) as usize;
        targets.push((affine, special[k]));
    }
    symmetries
        .iter()
        .find(|s| targets.iter().all(|&(from, to)| s.perm[from] == to))
        .cloned()
        .ok_or_else(|| Error::Frobenius("diagram rotation is not realized by a diagram symmetry".into()))
}
