use std::fmt;
use std::str::FromStr;

use crate::dihedral::DihedralElement;
use crate::families::KSubset;

/// Paper-facing name of a vertex.
///
/// Text forms (used in DIMACS comments and reports):
/// `{1,4}/6` subset of `[6]`, `r1/8` dihedral element of `D_16`,
/// `z3/7` residue 3 of `Z_7`, `(a;b)` product pair, `#5` plain index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Subset(KSubset),
    GroupElem(DihedralElement),
    CyclicElem { value: usize, modulus: usize },
    Pair(Box<VertexLabel>, Box<VertexLabel>),
    Index(usize),
}

impl VertexLabel {
    pub fn pair(a: VertexLabel, b: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_subset(&self) -> Option<&KSubset> {
        match self {
            VertexLabel::Subset(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_cyclic(&self) -> Option<(usize, usize)> {
        match self {
            VertexLabel::CyclicElem { value, modulus } => Some((*value, *modulus)),
            _ => None,
        }
    }

    pub fn as_group_elem(&self) -> Option<&DihedralElement> {
        match self {
            VertexLabel::GroupElem(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Subset(s) => write!(f, "{}/{}", s, s.ambient()),
            VertexLabel::GroupElem(e) => write!(f, "{}/{}", e, e.ambient()),
            VertexLabel::CyclicElem { value, modulus } => write!(f, "z{value}/{modulus}"),
            VertexLabel::Pair(a, b) => write!(f, "({a};{b})"),
            VertexLabel::Index(i) => write!(f, "#{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse vertex label {0:?}")]
pub struct LabelParseError(pub String);

impl FromStr for VertexLabel {
    type Err = LabelParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(text.to_string());
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            // split at the top-level ';'
            let mut depth = 0usize;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.checked_sub(1).ok_or_else(err)?,
                    ';' if depth == 0 => {
                        let a = inner[..i].parse()?;
                        let b = inner[i + 1..].parse()?;
                        return Ok(VertexLabel::pair(a, b));
                    }
                    _ => {}
                }
            }
            return Err(err());
        }
        if let Some(i) = t.strip_prefix('#') {
            return i.parse().map(VertexLabel::Index).map_err(|_| err());
        }
        let (body, n) = t.rsplit_once('/').ok_or_else(err)?;
        let n: usize = n.parse().map_err(|_| err())?;
        if let Some(set) = body.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let elems = set
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err())?;
            return KSubset::new(elems, n)
                .map(VertexLabel::Subset)
                .map_err(|_| err());
        }
        if let Some(v) = body.strip_prefix('z') {
            let value: usize = v.parse().map_err(|_| err())?;
            if value >= n {
                return Err(err());
            }
            return Ok(VertexLabel::CyclicElem { value, modulus: n });
        }
        DihedralElement::parse(body, n)
            .map(VertexLabel::GroupElem)
            .map_err(|_| err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::DihedralElement;

    #[test]
    fn text_forms_round_trip() {
        let labels = vec![
            VertexLabel::Subset(KSubset::new(vec![1, 4], 6).unwrap()),
            VertexLabel::GroupElem(DihedralElement::delta(8, 3).unwrap()),
            VertexLabel::CyclicElem { value: 3, modulus: 7 },
            VertexLabel::Index(12),
            VertexLabel::pair(
                VertexLabel::pair(VertexLabel::Index(1), VertexLabel::CyclicElem { value: 0, modulus: 5 }),
                VertexLabel::Subset(KSubset::new(vec![2, 5, 8], 9).unwrap()),
            ),
        ];
        for l in labels {
            let text = l.to_string();
            assert_eq!(text.parse::<VertexLabel>().unwrap(), l, "{text}");
        }
        assert_eq!(
            VertexLabel::Subset(KSubset::new(vec![1, 4], 6).unwrap()).to_string(),
            "{1,4}/6"
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "{1,1}/6", "z7/7", "(#1)", "q2/8", "{1,4}", "(#1;#2"] {
            assert!(bad.parse::<VertexLabel>().is_err(), "{bad}");
        }
    }
}
