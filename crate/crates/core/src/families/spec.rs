use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    cayley_dihedral, circulant, circular_graph, cycle_power, kneser, stable_kneser, FamilyError,
};
use crate::dihedral::DihedralElement;
use crate::graph::Graph;

/// A named family member, with a canonical text form:
///
/// | family        | text                         |
/// |---------------|------------------------------|
/// | Kneser        | `kneser:n=5,k=2`             |
/// | stable Kneser | `stable:n=8,k=2,s=3`         |
/// | circular      | `circular:n=7,k=2`           |
/// | cycle power   | `cyclepow:n=8,a=2`           |
/// | circulant     | `circulant:n=8,conn=1,2,6,7` |
/// | dihedral Cay  | `caydih:n=8,gens=r1,r7`      |
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilySpec {
    Kneser { n: usize, k: usize },
    StableKneser { n: usize, k: usize, s: usize },
    Circular { n: usize, k: usize },
    CyclePower { n: usize, a: usize },
    Circulant { n: usize, connection: BTreeSet<usize> },
    CayleyDihedral { n: usize, gens: BTreeSet<DihedralElement> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Kneser { n, k } => kneser(*n, *k),
            FamilySpec::StableKneser { n, k, s } => stable_kneser(*n, *k, *s),
            FamilySpec::Circular { n, k } => circular_graph(*n, *k),
            FamilySpec::CyclePower { n, a } => cycle_power(*n, *a),
            FamilySpec::Circulant { n, connection } => circulant(*n, connection),
            FamilySpec::CayleyDihedral { n, gens } => cayley_dihedral(*n, gens),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Kneser { n, k } => write!(f, "kneser:n={n},k={k}"),
            FamilySpec::StableKneser { n, k, s } => write!(f, "stable:n={n},k={k},s={s}"),
            FamilySpec::Circular { n, k } => write!(f, "circular:n={n},k={k}"),
            FamilySpec::CyclePower { n, a } => write!(f, "cyclepow:n={n},a={a}"),
            FamilySpec::Circulant { n, connection } => {
                let c: Vec<String> = connection.iter().map(|x| x.to_string()).collect();
                write!(f, "circulant:n={n},conn={}", c.join(","))
            }
            FamilySpec::CayleyDihedral { n, gens } => {
                let g: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
                write!(f, "caydih:n={n},gens={}", g.join(","))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || FamilyError::Parse(text.to_string());
        let (family, params) = text.trim().split_once(':').ok_or_else(err)?;

        // key=value pairs; bare tokens extend the previous key's list
        let mut pairs: Vec<(String, Vec<String>)> = Vec::new();
        for tok in params.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.split_once('=') {
                Some((k, v)) => pairs.push((k.trim().to_string(), vec![v.trim().to_string()])),
                None => pairs.last_mut().ok_or_else(err)?.1.push(tok.to_string()),
            }
        }
        let take = |key: &str| -> Result<&Vec<String>, FamilyError> {
            pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v).ok_or_else(err)
        };
        let num = |key: &str| -> Result<usize, FamilyError> {
            match take(key)?.as_slice() {
                [v] => v.parse().map_err(|_| err()),
                _ => Err(err()),
            }
        };
        let expect_keys = |keys: &[&str]| -> Result<(), FamilyError> {
            if pairs.len() == keys.len() && pairs.iter().all(|(k, _)| keys.contains(&k.as_str())) {
                Ok(())
            } else {
                Err(err())
            }
        };

        let spec = match family.trim() {
            "kneser" => {
                expect_keys(&["n", "k"])?;
                FamilySpec::Kneser { n: num("n")?, k: num("k")? }
            }
            "stable" => {
                expect_keys(&["n", "k", "s"])?;
                FamilySpec::StableKneser { n: num("n")?, k: num("k")?, s: num("s")? }
            }
            "circular" => {
                expect_keys(&["n", "k"])?;
                FamilySpec::Circular { n: num("n")?, k: num("k")? }
            }
            "cyclepow" => {
                expect_keys(&["n", "a"])?;
                FamilySpec::CyclePower { n: num("n")?, a: num("a")? }
            }
            "circulant" => {
                expect_keys(&["n", "conn"])?;
                let connection = take("conn")?
                    .iter()
                    .map(|v| v.parse::<usize>().map_err(|_| err()))
                    .collect::<Result<_, _>>()?;
                FamilySpec::Circulant { n: num("n")?, connection }
            }
            "caydih" => {
                expect_keys(&["n", "gens"])?;
                let n = num("n")?;
                let gens = take("gens")?
                    .iter()
                    .map(|v| DihedralElement::parse(v, n).map_err(FamilyError::from))
                    .collect::<Result<_, _>>()?;
                FamilySpec::CayleyDihedral { n, gens }
            }
            _ => return Err(err()),
        };
        Ok(spec)
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = FamilyError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<FamilySpec> for String {
    fn from(value: FamilySpec) -> Self {
        value.to_string()
    }
}
