use std::collections::BTreeSet;
use std::fmt;

use crate::canonical::normalize;
use crate::error::{Error, Result};
use crate::factor::{factors_unchecked, ModuliFactor};
use crate::tree::{
    BoundaryItem, BubbleKind, BubbleTree, Disk, InteriorItem, Label, Node, NodePath, Step,
};

/// A stratum: the class of a bubble tree under flips, root rotation and
/// (for `n = 0`) re-rooting, held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stratum {
    canonical: BubbleTree,
    codim: usize,
    dim: usize,
    factors: Vec<ModuliFactor>,
}

impl Stratum {
    pub fn from_tree(tree: &BubbleTree) -> Result<Self> {
        tree.validate()?;
        Ok(Self::from_valid(tree.clone()))
    }

    pub(crate) fn from_valid(tree: BubbleTree) -> Self {
        Self::from_canonical(normalize(tree, true))
    }

    pub(crate) fn from_canonical(canonical: BubbleTree) -> Self {
        let codim = canonical.codim();
        let dim = canonical.space_dim() - codim;
        let factors = factors_unchecked(&canonical);
        Stratum {
            canonical,
            codim,
            dim,
            factors,
        }
    }

    pub fn canonical(&self) -> &BubbleTree {
        &self.canonical
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[ModuliFactor] {
        &self.factors
    }

    pub fn encoding(&self) -> String {
        self.canonical.to_string()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Mirrors the flat disk bubble at `path`, reversing its own item sequence
/// and leaving every child subtree untouched.
pub fn flip(tree: &BubbleTree, path: &NodePath) -> Result<BubbleTree> {
    tree.validate()?;
    match tree.bubble_kind(path) {
        Ok(BubbleKind::Flat) => {}
        Ok(_) | Err(Error::IsRoot) => return Err(Error::NotFlat(path.to_string())),
        Err(e) => return Err(e),
    }
    let mut out = tree.clone();
    match container_at(out.root_mut(), &path.0) {
        Some(Container::Disk(d)) => d.boundary.reverse(),
        _ => unreachable!("path checked above"),
    }
    Ok(out)
}

pub(crate) enum Container<'a> {
    Disk(&'a mut Disk),
    Sphere(&'a mut Vec<InteriorItem>),
}

pub(crate) fn container_at<'a>(d: &'a mut Disk, steps: &[Step]) -> Option<Container<'a>> {
    match steps.split_first() {
        None => Some(Container::Disk(d)),
        Some((Step::Interior(i), rest)) => match d.interior.get_mut(*i)? {
            InteriorItem::Sphere(ch) => sphere_container(ch, rest),
            InteriorItem::Particle(_) => None,
        },
        Some((Step::Boundary(i), rest)) => match d.boundary.get_mut(*i)? {
            BoundaryItem::Disk(sub) => container_at(sub, rest),
            BoundaryItem::Particle(_) => None,
        },
    }
}

fn sphere_container<'a>(ch: &'a mut Vec<InteriorItem>, steps: &[Step]) -> Option<Container<'a>> {
    match steps.split_first() {
        None => Some(Container::Sphere(ch)),
        Some((Step::Interior(i), rest)) => match ch.get_mut(*i)? {
            InteriorItem::Sphere(c) => sphere_container(c, rest),
            InteriorItem::Particle(_) => None,
        },
        Some((Step::Boundary(_), _)) => None,
    }
}

/// The result with the bubble spliced as stored, plus the reversed splice
/// when the bubble is flat.
fn merge_variants(tree: &BubbleTree, path: &NodePath) -> Result<(BubbleTree, Option<BubbleTree>)> {
    let (parent, step) = path.split_last().ok_or(Error::IsRoot)?;
    let bad = || Error::BadPath(path.to_string());
    let mut out = tree.clone();
    let container = container_at(out.root_mut(), &parent.0).ok_or_else(bad)?;
    match (container, step) {
        (Container::Sphere(items), Step::Interior(i)) => {
            splice_sphere(items, i).ok_or_else(bad)?;
            Ok((out, None))
        }
        (Container::Disk(d), Step::Interior(i)) => {
            splice_sphere(&mut d.interior, i).ok_or_else(bad)?;
            Ok((out, None))
        }
        (Container::Disk(d), Step::Boundary(i)) => {
            let Some(BoundaryItem::Disk(sub)) = d.boundary.get(i) else {
                return Err(bad());
            };
            let sub = sub.clone();
            let flat = sub.is_flat();
            d.interior.extend(sub.interior);
            let reversed = flat.then(|| {
                let mut rev = sub.boundary.clone();
                rev.reverse();
                rev
            });
            d.boundary.splice(i..=i, sub.boundary);
            let other = reversed.map(|rev| {
                let mut alt = tree.clone();
                if let Some(Container::Disk(d)) = container_at(alt.root_mut(), &parent.0) {
                    d.boundary.splice(i..=i, rev);
                }
                alt
            });
            Ok((out, other))
        }
        (Container::Sphere(_), Step::Boundary(_)) => Err(bad()),
    }
}

fn splice_sphere(items: &mut Vec<InteriorItem>, i: usize) -> Option<()> {
    match items.get(i)? {
        InteriorItem::Sphere(_) => {}
        InteriorItem::Particle(_) => return None,
    }
    let InteriorItem::Sphere(children) = items.remove(i) else {
        unreachable!()
    };
    items.extend(children);
    Some(())
}

fn subtree_boundary_labels(tree: &BubbleTree, path: &NodePath) -> Result<BTreeSet<Label>> {
    let mut labels = Vec::new();
    match tree.node(path)? {
        Node::Disk(d) | Node::Root(d) => d
            .boundary
            .iter()
            .for_each(|it| crate::tree::push_boundary_labels(it, &mut labels)),
        _ => {}
    }
    Ok(labels.into_iter().collect())
}

/// Moves an `n = 0` tree to its gauge rooting and returns the path of the
/// bubble cutting off the same boundary set as `path` did.
fn regauge(tree: &BubbleTree, path: &NodePath) -> Result<(BubbleTree, NodePath)> {
    let side = subtree_boundary_labels(tree, path)?;
    let gauged = normalize(tree.clone(), false);
    let all: BTreeSet<Label> = (1..=tree.m()).collect();
    let other: BTreeSet<Label> = all.difference(&side).copied().collect();
    for p in gauged.bubble_paths() {
        let labels = subtree_boundary_labels(&gauged, &p)?;
        if labels == side || labels == other {
            return Ok((gauged, p));
        }
    }
    unreachable!("every arc survives re-rooting")
}

/// Removes one arc. A flat bubble is spliced back in both orientations, so
/// up to two strata of codimension one less are returned, canonical and
/// deduplicated.
pub fn merge_bubble(tree: &BubbleTree, path: &NodePath) -> Result<Vec<Stratum>> {
    tree.validate()?;
    if path.is_root() {
        return Err(Error::IsRoot);
    }
    tree.bubble_kind(path)?;
    merge_valid(tree, path)
}

/// [`merge_bubble`] for a tree already known to be valid, at a path known
/// to name a bubble.
pub(crate) fn merge_valid(tree: &BubbleTree, path: &NodePath) -> Result<Vec<Stratum>> {
    let (work, at) = if tree.n() == 0 {
        regauge(tree, path)?
    } else {
        (tree.clone(), path.clone())
    };
    let (first, second) = merge_variants(&work, &at)?;
    let mut out: Vec<Stratum> = std::iter::once(first)
        .chain(second)
        .map(Stratum::from_valid)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
