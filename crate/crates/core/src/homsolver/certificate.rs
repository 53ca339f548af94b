//! JSON certificates that can be re-checked without searching again.

use serde::{Deserialize, Serialize};

use super::{verify_homomorphism, Coloring, Homomorphism};
use crate::budget::SearchStats;
use crate::graph::{CliqueWitness, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Homomorphism,
    Coloring,
    Clique,
}

/// `source` and `target` name the graphs (a family spec or a file path).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clique: Option<Vec<usize>>,
    pub verified: bool,
    pub nodes: u64,
    pub seconds: f64,
}

impl Certificate {
    pub fn homomorphism(source: &str, target: &str, hom: &Homomorphism, stats: SearchStats) -> Self {
        Certificate {
            kind: CertificateKind::Homomorphism,
            source: source.into(),
            target: Some(target.into()),
            map: Some(hom.map().to_vec()),
            coloring: None,
            clique: None,
            verified: hom.is_verified(),
            nodes: stats.nodes,
            seconds: stats.seconds,
        }
    }

    /// A proper colouring, i.e. a homomorphism to `K_χ`.
    pub fn coloring(source: &str, c: &Coloring) -> Self {
        Certificate {
            kind: CertificateKind::Coloring,
            source: source.into(),
            target: Some(format!("K{}", c.chi)),
            map: None,
            coloring: Some(c.coloring.clone()),
            clique: None,
            verified: true,
            nodes: c.stats.nodes,
            seconds: c.stats.seconds,
        }
    }

    pub fn clique(source: &str, w: &CliqueWitness) -> Self {
        Certificate {
            kind: CertificateKind::Clique,
            source: source.into(),
            target: None,
            map: None,
            coloring: None,
            clique: Some(w.vertices.clone()),
            verified: true,
            nodes: w.stats.nodes,
            seconds: w.stats.seconds,
        }
    }

    /// Re-checks the witness against `source` (and `target` for homomorphisms).
    pub fn recheck(&self, source: &Graph, target: Option<&Graph>) -> bool {
        match self.kind {
            CertificateKind::Homomorphism => match (&self.map, target) {
                (Some(map), Some(h)) => verify_homomorphism(source, h, map),
                _ => false,
            },
            CertificateKind::Coloring => match &self.coloring {
                Some(col) => {
                    let c = col.iter().max().map_or(0, |m| m + 1);
                    verify_homomorphism(source, &Graph::complete(c), col)
                }
                None => false,
            },
            CertificateKind::Clique => match &self.clique {
                Some(q) => {
                    q.iter().all(|&v| v < source.order())
                        && q.iter().enumerate().all(|(i, &u)| q[i + 1..].iter().all(|&v| source.has_edge(u, v)))
                }
                None => false,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::SearchBudget;
    use crate::families::stable_kneser;
    use crate::graph::clique_number;
    use crate::homsolver::{chromatic_number, find_homomorphism};

    #[test]
    fn round_trip_and_recheck() {
        let g = stable_kneser(8, 2, 3).unwrap();
        let c = chromatic_number(&g, &SearchBudget::default()).unwrap();
        let cert = Certificate::coloring("stable:n=8,k=2,s=3", &c);
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert!(back.recheck(&g, None));
        assert!(!back.recheck(&Graph::complete(12), None));

        let w = clique_number(&g, &SearchBudget::default()).unwrap();
        assert!(Certificate::clique("x", &w).recheck(&g, None));
    }

    #[test]
    fn homomorphism_certificate() {
        let c5 = Graph::cycle(5);
        let k3 = Graph::complete(3);
        let h = find_homomorphism(&c5, &k3, &SearchBudget::default());
        let cert = Certificate::homomorphism("c5", "k3", h.found().unwrap(), SearchStats::default());
        let json = cert.to_json();
        assert!(json.contains("\"kind\": \"homomorphism\""));
        let back = Certificate::from_json(&json).unwrap();
        assert!(back.recheck(&c5, Some(&k3)));
        assert!(!back.recheck(&c5, Some(&Graph::complete(2))));
    }
}
