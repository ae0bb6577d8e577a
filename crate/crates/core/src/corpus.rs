//! Corpus files: a list of rings, the subspace selectors to run on each, an
//! optional check filter and cap overrides.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::dsl::parse_ring_dsl;
use crate::error::{Error, Result};
use crate::ring::{Caps, RingSpec, TableSpec};
use crate::zariski::YSelector;

const DEFAULT_CORPUS: &str = include_str!("../data/default_corpus.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRing {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dsl: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<TableSpec>,
}

impl CorpusRing {
    pub fn dsl(name: &str, dsl: &str) -> CorpusRing {
        CorpusRing { name: name.into(), dsl: Some(dsl.into()), tables: None }
    }

    pub fn spec(&self) -> Result<RingSpec> {
        match (&self.dsl, &self.tables) {
            (Some(text), None) => parse_ring_dsl(text),
            (None, Some(t)) => Ok(RingSpec::Tables(t.clone())),
            _ => Err(Error::Corpus(format!("ring `{}` needs exactly one of `dsl` or `tables`", self.name))),
        }
    }
}

fn default_subspaces() -> Vec<YSelector> {
    vec![YSelector::Spec, YSelector::Max, YSelector::Min, YSelector::AllSubsets]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFile {
    #[serde(default)]
    pub rings: Vec<CorpusRing>,
    #[serde(default = "default_subspaces")]
    pub subspaces: Vec<YSelector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
}

impl CorpusFile {
    pub fn default_corpus() -> CorpusFile {
        CorpusFile::from_json(DEFAULT_CORPUS).expect("bundled corpus is valid")
    }

    pub fn from_rings(rings: Vec<CorpusRing>) -> CorpusFile {
        CorpusFile { rings, subspaces: default_subspaces(), checks: None, caps: None }
    }

    pub fn from_json(text: &str) -> Result<CorpusFile> {
        let corpus: CorpusFile = serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
        corpus.validate()?;
        Ok(corpus)
    }

    pub fn load(path: &Path) -> Result<CorpusFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
        CorpusFile::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for r in &self.rings {
            if !seen.insert(r.name.as_str()) {
                return Err(Error::Corpus(format!("duplicate ring name `{}`", r.name)));
            }
            r.spec().map_err(|e| Error::Corpus(format!("ring `{}`: {e}", r.name)))?;
        }
        Ok(())
    }

    /// Effective caps: file overrides on top of `base`.
    pub fn caps_over(&self, base: Caps) -> Caps {
        self.caps.unwrap_or(base)
    }

    /// Builds every ring, in file order.
    pub fn contexts(&self, caps: &Caps) -> Result<Vec<RingContext>> {
        self.rings
            .iter()
            .map(|r| {
                RingContext::with_caps(r.name.clone(), &r.spec()?, caps)
                    .map_err(|e| Error::Corpus(format!("ring `{}`: {e}", r.name)))
            })
            .collect()
    }
}
