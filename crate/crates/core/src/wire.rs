//! JSON form of bubble trees.
//!
//! ```json
//! {"n": 2, "m": 1,
//!  "root": {"interior": [{"ip": 2}],
//!           "boundary": [{"disk": {"interior": [], "boundary": [
//!               {"disk": {"interior": [{"ip": 1}], "boundary": []}},
//!               {"bp": 1}]}}]}}
//! ```
//!
//! Interior lists hold `{"ip": k}` and `{"sphere": {"children": [...]}}`;
//! boundary lists hold `{"bp": k}` and `{"disk": {...}}`. The root's
//! boundary is read cyclically, a disk bubble's linearly. `n` and `m` may
//! be omitted and are then counted from the particles.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ops::Stratum;
use crate::tree::{count_particles, BoundaryItem, BubbleTree, Disk, InteriorItem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum WireItem {
    Ip(u32),
    Bp(u32),
    Sphere { children: Vec<WireItem> },
    Disk(WireDisk),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireDisk {
    #[serde(default)]
    pub interior: Vec<WireItem>,
    #[serde(default)]
    pub boundary: Vec<WireItem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTree {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub root: WireDisk,
}

impl From<&InteriorItem> for WireItem {
    fn from(it: &InteriorItem) -> Self {
        match it {
            InteriorItem::Particle(l) => WireItem::Ip(*l),
            InteriorItem::Sphere(ch) => WireItem::Sphere {
                children: ch.iter().map(WireItem::from).collect(),
            },
        }
    }
}

impl From<&BoundaryItem> for WireItem {
    fn from(it: &BoundaryItem) -> Self {
        match it {
            BoundaryItem::Particle(l) => WireItem::Bp(*l),
            BoundaryItem::Disk(d) => WireItem::Disk(d.into()),
        }
    }
}

impl From<&Disk> for WireDisk {
    fn from(d: &Disk) -> Self {
        WireDisk {
            interior: d.interior.iter().map(WireItem::from).collect(),
            boundary: d.boundary.iter().map(WireItem::from).collect(),
        }
    }
}

impl From<&BubbleTree> for WireTree {
    fn from(t: &BubbleTree) -> Self {
        WireTree {
            n: Some(t.n()),
            m: Some(t.m()),
            root: t.root().into(),
        }
    }
}

fn interior(it: &WireItem) -> Result<InteriorItem> {
    match it {
        WireItem::Ip(l) => Ok(InteriorItem::Particle(*l)),
        WireItem::Sphere { children } => Ok(InteriorItem::Sphere(
            children.iter().map(interior).collect::<Result<_>>()?,
        )),
        WireItem::Bp(l) => Err(Error::Parse(format!("bp{l} listed among interior items"))),
        WireItem::Disk(_) => Err(Error::Parse("disk bubble listed among interior items".into())),
    }
}

fn boundary(it: &WireItem) -> Result<BoundaryItem> {
    match it {
        WireItem::Bp(l) => Ok(BoundaryItem::Particle(*l)),
        WireItem::Disk(d) => Ok(BoundaryItem::Disk(disk(d)?)),
        WireItem::Ip(l) => Err(Error::Parse(format!("ip{l} listed among boundary items"))),
        WireItem::Sphere { .. } => Err(Error::Parse("sphere bubble listed among boundary items".into())),
    }
}

fn disk(d: &WireDisk) -> Result<Disk> {
    Ok(Disk::new(
        d.interior.iter().map(interior).collect::<Result<_>>()?,
        d.boundary.iter().map(boundary).collect::<Result<_>>()?,
    ))
}

impl WireTree {
    /// Builds the tree without validating it.
    pub fn to_tree(&self) -> Result<BubbleTree> {
        let root = disk(&self.root)?;
        let (cn, cm) = count_particles(&root);
        Ok(BubbleTree::from_parts(self.n.unwrap_or(cn), self.m.unwrap_or(cm), root))
    }
}

/// Parses and validates a JSON tree.
pub fn tree_from_json(src: &str) -> Result<BubbleTree> {
    let wire: WireTree = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    let tree = wire.to_tree()?;
    tree.validate()?;
    Ok(tree)
}

pub fn tree_to_json(tree: &BubbleTree) -> String {
    serde_json::to_string(&WireTree::from(tree)).expect("tree serializes")
}

impl Serialize for BubbleTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireTree::from(self).serialize(s)
    }
}

impl Serialize for Stratum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            encoding: String,
            codim: usize,
            dim: usize,
            factors: &'a [crate::factor::ModuliFactor],
            tree: WireTree,
        }
        View {
            encoding: self.encoding(),
            codim: self.codim(),
            dim: self.dim(),
            factors: self.factors(),
            tree: self.canonical().into(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t: BubbleTree = "K(2,1):(i2|F[P(i1|),b1])".parse().unwrap();
        let json = tree_to_json(&t);
        assert_eq!(tree_from_json(&json).unwrap(), t);
    }

    #[test]
    fn documented_example_parses() {
        let src = r#"{"n": 2, "m": 1,
          "root": {"interior": [{"ip": 2}],
                   "boundary": [{"disk": {"interior": [], "boundary": [
                       {"disk": {"interior": [{"ip": 1}], "boundary": []}},
                       {"bp": 1}]}}]}}"#;
        let t = tree_from_json(src).unwrap();
        assert_eq!(t.to_string(), "K(2,1):(i2|F[P(i1|),b1])");
    }

    #[test]
    fn counts_are_inferred() {
        let t = tree_from_json(r#"{"root":{"interior":[{"ip":1}],"boundary":[{"bp":1}]}}"#).unwrap();
        assert_eq!((t.n(), t.m()), (1, 1));
    }

    #[test]
    fn misplaced_items_are_parse_errors() {
        let err = tree_from_json(r#"{"root":{"interior":[{"bp":1}],"boundary":[]}}"#).unwrap_err();
        assert_eq!(err.code(), "Parse");
        let err = tree_from_json("{").unwrap_err();
        assert_eq!(err.code(), "Parse");
    }

    #[test]
    fn validation_errors_pass_through() {
        let src = r#"{"root":{"interior":[],"boundary":[{"disk":{"interior":[{"ip":1}],"boundary":[{"bp":1}]}},{"bp":2},{"bp":3}]}}"#;
        assert_eq!(tree_from_json(src).unwrap_err().code(), "AnchorViolation");
    }
}
