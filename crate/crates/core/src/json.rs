//! JSON forms of trees, forests, permutations and groupoid elements.
//!
//! A tree is the list of its leaf addresses as `0`/`1` strings (`""` is the root), a
//! forest is a list of trees, a permutation is its 1-based image list. An element is
//! `{"m", "m2", "f1", "alpha", "labels", "f2"}` with labels as a string over `e,b,c,d`.

use serde::{Deserialize, Serialize};

use crate::cantor::{Address, Forest, Permutation, Tree};
use crate::error::{Error, Result};
use crate::grigorchuk::KleinLabel;
use crate::groupoid::GroupoidElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub m: usize,
    pub m2: usize,
    pub f1: Vec<Vec<String>>,
    pub alpha: Vec<usize>,
    pub labels: String,
    pub f2: Vec<Vec<String>>,
}

pub fn tree_to_json(t: &Tree) -> Vec<String> {
    t.leaves().iter().map(Address::to_bit_string).collect()
}

pub fn forest_to_json(f: &Forest) -> Vec<Vec<String>> {
    f.trees().iter().map(tree_to_json).collect()
}

pub fn tree_from_json(leaves: &[String]) -> Result<Tree> {
    Tree::from_leaves(
        leaves
            .iter()
            .map(|s| Address::parse(s))
            .collect::<Result<Vec<_>>>()?,
    )
}

pub fn forest_from_json(trees: &[Vec<String>]) -> Result<Forest> {
    Forest::new(
        trees
            .iter()
            .map(|t| tree_from_json(t))
            .collect::<Result<Vec<_>>>()?,
    )
}

impl From<&GroupoidElement> for ElementJson {
    fn from(g: &GroupoidElement) -> Self {
        ElementJson {
            m: g.domain_roots(),
            m2: g.range_roots(),
            f1: forest_to_json(g.f1()),
            alpha: g.alpha().one_based(),
            labels: g.labels().iter().map(|k| k.as_char()).collect(),
            f2: forest_to_json(g.f2()),
        }
    }
}

impl TryFrom<&ElementJson> for GroupoidElement {
    type Error = Error;

    fn try_from(j: &ElementJson) -> Result<Self> {
        let f1 = forest_from_json(&j.f1)?;
        let f2 = forest_from_json(&j.f2)?;
        if f1.roots() != j.m {
            return Err(Error::ArityMismatch {
                expected: j.m,
                found: f1.roots(),
            });
        }
        if f2.roots() != j.m2 {
            return Err(Error::ArityMismatch {
                expected: j.m2,
                found: f2.roots(),
            });
        }
        let labels = j
            .labels
            .chars()
            .map(|c| {
                KleinLabel::from_char(c).ok_or_else(|| Error::Parse(format!("bad label {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupoidElement::new(f1, Permutation::from_one_based(&j.alpha)?, labels, f2)
    }
}

pub fn element_to_string(g: &GroupoidElement) -> String {
    serde_json::to_string(&ElementJson::from(g)).expect("element JSON serializes")
}

pub fn element_from_str(s: &str) -> Result<GroupoidElement> {
    let j: ElementJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    GroupoidElement::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_element;

    #[test]
    fn x_schema() {
        let x = parse_element("x1").unwrap();
        assert_eq!(
            element_to_string(&x),
            r#"{"m":1,"m2":2,"f1":[["0","1"]],"alpha":[1,2],"labels":"ee","f2":[[""],[""]]}"#
        );
    }

    #[test]
    fn round_trip() {
        for s in ["b1", "x1 s1 b2", "inv(x1) c1 x1 d1", "p(2 3 1) x2"] {
            let g = parse_element(s).unwrap();
            let back = element_from_str(&element_to_string(&g)).unwrap();
            assert!(back.equals(&g).unwrap(), "{s}");
        }
    }

    #[test]
    fn rejects_bad_payloads() {
        assert!(element_from_str(
            r#"{"m":1,"m2":1,"f1":[["0"]],"alpha":[1],"labels":"e","f2":[[""]]}"#
        )
        .is_err());
        assert!(element_from_str(
            r#"{"m":1,"m2":1,"f1":[[""]],"alpha":[1],"labels":"z","f2":[[""]]}"#
        )
        .is_err());
        assert!(element_from_str("nope").is_err());
    }
}
