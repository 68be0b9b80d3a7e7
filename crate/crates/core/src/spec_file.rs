//! The JSON group-spec format read and written by the command line tool.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::classical::ClassicalType;
use crate::error::Error;
use crate::group::Group;
use crate::lattice::IntMatrix;
use crate::root_datum::{transpose_automorphism, BasedAutomorphism, RawRootDatum, RootDatum};
use crate::ss_classes::{FrobeniusDescriptor, Lambda};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot parse spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error("theta is not a square integer matrix of size rank")]
    ThetaShape,
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// One group: root datum, Frobenius data and an optional classical type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    /// Indices into `roots`.
    pub simple: Vec<usize>,
    pub theta: Vec<Vec<i64>>,
    pub q: u64,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
    #[serde(default = "default_lambda")]
    pub lambda: Lambda,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram_rotation: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalType>,
}

fn default_lambda() -> Lambda {
    Lambda::Qlbar
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Spec of a split group.
    pub fn split(rd: &RootDatum, q: u64, p: u64) -> Self {
        let raw = rd.to_raw();
        GroupSpec {
            name: raw.name,
            rank: raw.rank,
            roots: raw.roots,
            coroots: raw.coroots,
            simple: raw.simple,
            theta: IntMatrix::identity(raw.rank).to_rows(),
            q,
            p,
            ell: None,
            lambda: Lambda::Qlbar,
            diagram_rotation: None,
            classical: None,
        }
    }

    /// Pretty JSON with keys sorted, newline-terminated.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("spec serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    /// Hex SHA-256 of the canonical JSON.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_canonical_json().as_bytes()))
    }

    fn raw(&self) -> RawRootDatum {
        RawRootDatum {
            name: self.name.clone(),
            rank: self.rank,
            roots: self.roots.clone(),
            coroots: self.coroots.clone(),
            simple: self.simple.clone(),
        }
    }

    pub fn datum(&self) -> Result<RootDatum, SpecError> {
        Ok(RootDatum::validate(self.raw()).map_err(Error::from)?)
    }

    fn theta_matrix(&self) -> Result<IntMatrix, SpecError> {
        let m = IntMatrix::from_rows(&self.theta).ok_or(SpecError::ThetaShape)?;
        if m.n_rows() != self.rank || m.n_cols() != self.rank {
            return Err(SpecError::ThetaShape);
        }
        Ok(m)
    }

    pub fn frobenius(&self, rd: &RootDatum) -> Result<FrobeniusDescriptor, SpecError> {
        let theta = BasedAutomorphism::new(rd, self.theta_matrix()?).map_err(Error::from)?;
        Ok(FrobeniusDescriptor::new(
            theta,
            self.q,
            self.p,
            self.ell,
            self.lambda,
            self.diagram_rotation.clone(),
        )?)
    }

    pub fn build(&self) -> Result<Group, SpecError> {
        let rd = self.datum()?;
        let f = self.frobenius(&rd)?;
        Ok(Group::new(rd, f)?)
    }

    /// The spec of the dual datum: roots and coroots exchanged, theta
    /// transposed, everything else kept. Applying it twice gives back the
    /// original spec.
    pub fn dual(&self) -> Result<GroupSpec, SpecError> {
        let rd = self.datum()?;
        let theta = BasedAutomorphism::new(&rd, self.theta_matrix()?).map_err(Error::from)?;
        let dual_theta = transpose_automorphism(&rd, &theta).map_err(Error::from)?;
        let name = match self.name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("dual({})", self.name),
        };
        Ok(GroupSpec {
            name,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            theta: dual_theta.matrix().to_rows(),
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_and_hash() {
        let spec = GroupSpec::split(&catalog::sl(2), 3, 3);
        let text = spec.to_canonical_json();
        assert_eq!(GroupSpec::parse(&text).unwrap(), spec);
        assert_eq!(spec.hash().len(), 64);
        assert!(text.find("\"coroots\"").unwrap() < text.find("\"name\"").unwrap());
        assert!(spec.build().is_ok());
    }

    #[test]
    fn dual_is_an_involution() {
        let mut spec = GroupSpec::split(&catalog::gl(3), 5, 5);
        spec.theta = catalog::gl_flip(3).to_rows();
        let dual = spec.dual().unwrap();
        assert_eq!(dual.name, "dual(GL3)");
        assert_eq!(dual.dual().unwrap().to_canonical_json(), spec.to_canonical_json());
    }

    #[test]
    fn unknown_fields_and_defaults() {
        let text = r#"{"name":"T1","rank":1,"roots":[],"coroots":[],"simple":[],"theta":[[1]],"q":3,"p":3}"#;
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.lambda, Lambda::Qlbar);
        assert!(GroupSpec::parse(&text.replace("\"p\":3", "\"p\":3,\"extra\":1")).is_err());
        let bad = GroupSpec { q: 4, ..spec };
        assert!(bad.build().is_err());
    }
}
