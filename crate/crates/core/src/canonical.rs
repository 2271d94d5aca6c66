//! Canonical forms.
//!
//! Two normal forms are used. The *stratum* form quotients by flips of
//! flat bubbles; the *oriented* form keeps every orientation and names a
//! face of one chamber's tile. Both rotate the root sequence to its least
//! rotation and sort unordered collections.
//!
//! With no interior particles there is no anchor to fix the root, so the
//! tree is first re-rooted at the gauge bubble: the median of boundary
//! particles 1, 2 and 3. Its cyclic orientation records which of the two
//! sheets of the space the stratum lies in; every other bubble is flat and
//! free to flip.

use crate::error::{Error, Result};
use crate::tree::{BoundaryItem, BubbleTree, Disk, InteriorItem, Label, NodePath, Step};

/// Least representative of the tree's class under flips, root rotation
/// and (for `n = 0`) re-rooting.
pub fn canonicalize(tree: &BubbleTree) -> Result<BubbleTree> {
    tree.validate()?;
    Ok(normalize(tree.clone(), true))
}

/// Normal form without flips: identifies only root rotations and
/// orientation-preserving re-rootings.
pub fn oriented_form(tree: &BubbleTree) -> Result<BubbleTree> {
    tree.validate()?;
    Ok(normalize(tree.clone(), false))
}

pub(crate) fn normalize(tree: BubbleTree, flips: bool) -> BubbleTree {
    let (n, m) = (tree.n(), tree.m());
    let mut root = tree.into_root();
    if n == 0 {
        if let Some(path) = gauge_path(&root) {
            root = reroot_along(root, &path);
        }
    }
    BubbleTree::from_parts(n, m, normalize_root(root, flips))
}

fn normalize_interior(item: InteriorItem) -> InteriorItem {
    match item {
        InteriorItem::Particle(l) => InteriorItem::Particle(l),
        InteriorItem::Sphere(ch) => InteriorItem::Sphere(sorted_interior(ch)),
    }
}

fn sorted_interior(items: Vec<InteriorItem>) -> Vec<InteriorItem> {
    let mut items: Vec<_> = items.into_iter().map(normalize_interior).collect();
    items.sort();
    items
}

fn normalize_bubble(d: Disk, flips: bool) -> Disk {
    let interior = sorted_interior(d.interior);
    let mut boundary: Vec<_> = d
        .boundary
        .into_iter()
        .map(|it| normalize_boundary(it, flips))
        .collect();
    if flips && interior.is_empty() && boundary.iter().rev().lt(boundary.iter()) {
        boundary.reverse();
    }
    Disk { interior, boundary }
}

fn normalize_boundary(item: BoundaryItem, flips: bool) -> BoundaryItem {
    match item {
        BoundaryItem::Particle(l) => BoundaryItem::Particle(l),
        BoundaryItem::Disk(d) => BoundaryItem::Disk(normalize_bubble(d, flips)),
    }
}

fn normalize_root(root: Disk, flips: bool) -> Disk {
    let interior = sorted_interior(root.interior);
    let mut boundary: Vec<_> = root
        .boundary
        .into_iter()
        .map(|it| normalize_boundary(it, flips))
        .collect();
    let best = least_rotation(&boundary);
    boundary.rotate_left(best);
    Disk { interior, boundary }
}

pub(crate) fn least_rotation<T: Ord>(seq: &[T]) -> usize {
    let k = seq.len();
    (0..k)
        .min_by(|&a, &b| {
            let ra = seq[a..].iter().chain(&seq[..a]);
            let rb = seq[b..].iter().chain(&seq[..b]);
            ra.cmp(rb)
        })
        .unwrap_or(0)
}

/// Moves the root into the top-level flat bubble at `idx`:
/// `[X1..X(j-1), F[Y1..Yl], X(j+1)..Xk]` becomes
/// `[Y1..Yl, F'[X(j+1)..Xk, X1..X(j-1)]]`. The boundary read around the
/// disk is unchanged.
pub(crate) fn reroot_top(mut root: Disk, idx: usize) -> Disk {
    let mut items = std::mem::take(&mut root.boundary);
    let tail = items.split_off(idx + 1);
    let target = items.pop().expect("index in range");
    let BoundaryItem::Disk(bubble) = target else {
        panic!("re-rooting target must be a disk bubble");
    };
    debug_assert!(bubble.is_flat() && root.interior.is_empty());
    let mut rest = tail;
    rest.extend(items);
    let mut boundary = bubble.boundary;
    boundary.push(BoundaryItem::Disk(Disk::new(Vec::new(), rest)));
    Disk::new(Vec::new(), boundary)
}

fn reroot_along(mut root: Disk, path: &[usize]) -> Disk {
    for &idx in path {
        root = reroot_top(root, idx);
    }
    root
}

/// Re-roots an `n = 0` tree at the flat bubble addressed by `path`
/// (boundary steps only), preserving every orientation.
pub fn reroot(tree: &BubbleTree, path: &NodePath) -> Result<BubbleTree> {
    tree.validate()?;
    if tree.n() != 0 {
        return Err(Error::BadPath(
            "re-rooting only applies when there are no interior particles".into(),
        ));
    }
    let mut idxs = Vec::with_capacity(path.0.len());
    for step in &path.0 {
        match step {
            Step::Boundary(i) => idxs.push(*i),
            Step::Interior(_) => return Err(Error::BadPath(path.to_string())),
        }
    }
    tree.bubble_kind(path)?;
    let root = reroot_along(tree.root().clone(), &idxs);
    Ok(BubbleTree::from_parts(tree.n(), tree.m(), root))
}

fn leaf_path(d: &Disk, label: Label, prefix: &mut Vec<usize>) -> bool {
    for (i, it) in d.boundary.iter().enumerate() {
        prefix.push(i);
        match it {
            BoundaryItem::Particle(l) if *l == label => return true,
            BoundaryItem::Disk(sub) if leaf_path(sub, label, prefix) => return true,
            _ => {}
        }
        prefix.pop();
    }
    false
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Boundary-index path to the median bubble of boundary particles 1, 2, 3.
fn gauge_path(root: &Disk) -> Option<Vec<usize>> {
    let mut paths = Vec::with_capacity(3);
    for label in 1..=3 {
        let mut p = Vec::new();
        if !leaf_path(root, label, &mut p) {
            return None;
        }
        paths.push(p);
    }
    // deepest pairwise meeting point
    let (a, depth) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(a, b)| (a, common_prefix(&paths[a], &paths[b])))
        .max_by_key(|&(_, d)| d)?;
    Some(paths[a][..depth].to_vec())
}

/// For `n = 0`: the path of the bubble that fixes the sheet (the median of
/// boundary particles 1, 2, 3). `None` when it is the root or `n >= 1`.
pub fn gauge_bubble(tree: &BubbleTree) -> Option<NodePath> {
    if tree.n() != 0 {
        return None;
    }
    let path = gauge_path(tree.root())?;
    (!path.is_empty()).then(|| NodePath(path.into_iter().map(Step::Boundary).collect()))
}

/// True when flipping the bubble at `path` stays inside the same stratum:
/// always for flat bubbles when `n >= 1`; for `n = 0` every flat bubble
/// except the gauge bubble.
pub fn flip_is_identification(tree: &BubbleTree, path: &NodePath) -> bool {
    gauge_bubble(tree).as_ref() != Some(path)
}
