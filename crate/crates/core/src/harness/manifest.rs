use std::path::Path;

use serde::Deserialize;

use crate::families::FamilySpec;

const BUNDLED: &str = include_str!("../../suites/default.toml");

#[derive(Debug, thiserror::Error)]
pub enum ManifestError {
    #[error("cannot read manifest: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid manifest: {0}")]
    Toml(#[from] toml::de::Error),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteManifest {
    pub shift_grid: ShiftGridConfig,
    pub prop_iso: PropIsoConfig,
    pub chi: ChiConfig,
    pub hom_idempotence: HomIdempotenceConfig,
    pub core: CoreConfig,
    pub probe: ProbeConfig,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftGridConfig {
    pub k: Vec<usize>,
    pub s: Vec<usize>,
    pub n_max: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropIsoConfig {
    pub k: Vec<usize>,
    pub s: Vec<usize>,
    pub count_k: Vec<usize>,
    pub count_s: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChiConfig {
    pub instances: Vec<FamilySpec>,
    pub critical: Vec<FamilySpec>,
    pub antipodal_s: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomIdempotenceConfig {
    pub square: Vec<(usize, usize)>,
    pub two_cycles: Vec<FamilySpec>,
    pub antipodal_s: Vec<usize>,
    pub square_search_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoreConfig {
    pub instances: Vec<CoreInstance>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoreInstance {
    pub spec: FamilySpec,
    pub claim: String,
    pub core: bool,
}

/// Inclusive ranges `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeConfig {
    pub n: (usize, usize),
    pub k: (usize, usize),
    pub s: (usize, usize),
    pub nodes: u64,
}

impl SuiteManifest {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled suite manifest parses")
    }

    pub fn parse(text: &str) -> Result<Self, ManifestError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ManifestError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_manifest_parses() {
        let m = SuiteManifest::bundled();
        assert_eq!(m.shift_grid.n_max, 16);
        assert_eq!(m.chi.instances.len(), 10);
        assert_eq!(m.hom_idempotence.square, vec![(2, 2), (2, 3), (3, 2)]);
        assert!(m.core.instances.iter().any(|c| !c.core));
        assert_eq!(m.probe.n, (9, 12));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_specs() {
        let text = BUNDLED.replace("n_max = 16", "n_max = 16\nbogus = 1");
        assert!(SuiteManifest::parse(&text).is_err());
        let text = BUNDLED.replace("kneser:n=5,k=2\"", "kneser:n=5\"");
        assert!(SuiteManifest::parse(&text).is_err());
    }
}
