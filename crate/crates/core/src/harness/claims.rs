use serde::Deserialize;

use super::report::ValueSource;

const BUNDLED: &str = include_str!("../../suites/claims.toml");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Claim {
    pub id: String,
    pub provenance: ValueSource,
    pub statement: String,
}

#[derive(Deserialize)]
struct ClaimFile {
    claim: Vec<Claim>,
}

/// The bundled claims manifest, in file order.
pub fn claims() -> Vec<Claim> {
    toml::from_str::<ClaimFile>(BUNDLED).expect("bundled claims manifest parses").claim
}

/// Looks up a claim by id.
///
/// # Panics
/// On an unknown id; suites only use ids from the bundled manifest.
pub fn claim(id: &str) -> Claim {
    claims()
        .into_iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("claim {id:?} missing from the claims manifest"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let all = claims();
        let ids: HashSet<_> = all.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), all.len());
        assert_eq!(claim("conjecture-chi").provenance, ValueSource::Conjecture);
    }
}
