//! Input documents: JSON descriptions of knots, boundary systems and the
//! named constructions, plus stored Hermitian certificates.

use serde::{Deserialize, Serialize};
use zgenus_core::{
    internal_band_sum, parallel_link, whitehead_double_2, whitehead_double_3,
    BoundarySeifertSystem, KnotSeifert, LambdaMatrix,
};

/// A link description, either an explicit matrix or a constructor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LinkDocument {
    Knot {
        seifert: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    BoundaryLink {
        r: usize,
        matrix: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Whitehead2 {
        n: i64,
        a1: i64,
        a2: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Whitehead3 {
        n: [i64; 3],
        a: [i64; 3],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Parallel {
        p: usize,
        n: usize,
        of: Box<LinkDocument>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

impl LinkDocument {
    pub fn label(&self) -> Option<&str> {
        match self {
            LinkDocument::Knot { label, .. }
            | LinkDocument::BoundaryLink { label, .. }
            | LinkDocument::Whitehead2 { label, .. }
            | LinkDocument::Whitehead3 { label, .. }
            | LinkDocument::Parallel { label, .. } => label.as_deref(),
        }
    }

    /// Validates the document into a boundary Seifert system.
    pub fn to_system(&self) -> anyhow::Result<BoundarySeifertSystem> {
        match self {
            LinkDocument::Knot { seifert, .. } => {
                let knot = KnotSeifert::new(seifert.clone())?;
                Ok(BoundarySeifertSystem::from_knot_block(&knot, 1)?)
            }
            LinkDocument::BoundaryLink { r, matrix, .. } => {
                Ok(BoundarySeifertSystem::new(matrix.clone(), *r)?)
            }
            LinkDocument::Whitehead2 { n, a1, a2, .. } => Ok(whitehead_double_2(*n, *a1, *a2)?),
            LinkDocument::Whitehead3 { n, a, .. } => Ok(whitehead_double_3(*n, *a)?),
            LinkDocument::Parallel { p, n, of, .. } => {
                let inner = of.to_system()?;
                if inner.components() != 1 {
                    anyhow::bail!("parallel links take a knot, got {} components", inner.components());
                }
                Ok(parallel_link(&internal_band_sum(&inner), *p, *n)?)
            }
        }
    }

    /// Resolves constructors into an explicit matrix document, keeping the
    /// label.
    pub fn materialize(&self) -> anyhow::Result<LinkDocument> {
        let system = self.to_system()?;
        let label = self.label().map(str::to_owned);
        Ok(if system.components() == 1 {
            LinkDocument::Knot {
                seifert: internal_band_sum(&system).matrix().to_vec(),
                label,
            }
        } else {
            LinkDocument::BoundaryLink {
                r: system.components(),
                matrix: system.matrix().to_vec(),
                label,
            }
        })
    }
}

/// A stored Hermitian certificate: a knot, a claimed genus, and the matrix
/// said to present its Blanchfield form at that genus.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub knot: LinkDocument,
    pub genus: usize,
    pub matrix: LambdaMatrix,
}

impl CertificateDocument {
    pub fn knot(&self) -> anyhow::Result<KnotSeifert> {
        let system = self.knot.to_system()?;
        if system.components() != 1 {
            anyhow::bail!("certificates apply to knots, got {} components", system.components());
        }
        Ok(internal_band_sum(&system))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let doc: LinkDocument =
            serde_json::from_str(r#"{"kind":"knot","seifert":[[-1,1],[0,-1]]}"#).unwrap();
        assert!(doc.to_system().is_ok());

        let doc: LinkDocument =
            serde_json::from_str(r#"{"kind":"whitehead2","n":3,"a1":1,"a2":-1}"#).unwrap();
        assert_eq!(doc.to_system().unwrap().components(), 2);

        let doc: LinkDocument = serde_json::from_str(
            r#"{"kind":"parallel","p":2,"n":1,"of":{"kind":"knot","seifert":[[-1,1],[0,-1]]}}"#,
        )
        .unwrap();
        assert_eq!(doc.to_system().unwrap().components(), 3);
    }

    #[test]
    fn odd_size_rejected() {
        let doc: LinkDocument =
            serde_json::from_str(r#"{"kind":"knot","seifert":[[1]]}"#).unwrap();
        assert!(doc.to_system().is_err());
    }

    #[test]
    fn materialize_round_trips() {
        let doc: LinkDocument =
            serde_json::from_str(r#"{"kind":"whitehead3","n":[0,2,2],"a":[1,-1,1]}"#).unwrap();
        let flat = doc.materialize().unwrap();
        let json = serde_json::to_string(&flat).unwrap();
        let back: LinkDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, flat);
        assert_eq!(back.to_system().unwrap(), doc.to_system().unwrap());
    }
}
