//! Incidence between strata: the face poset of the whole space, the face
//! poset of a single chamber's tile, chamber adjacency and the Euler
//! characteristic.
//!
//! A chamber's tile is built from *oriented* faces: trees reached from the
//! chamber by inserting arcs, normalized without flips. Several faces of
//! one tile can be the same stratum of the space (the tile is glued to
//! itself), which the closure reports instead of hiding.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::canonical::normalize;
use crate::enumerate::{enumerate_all_with, enumerate_strata_with, EnumConfig, Strata};
use crate::error::{Error, Result};
use crate::ops::{merge_bubble, merge_valid, Stratum};
use crate::poset::FacePoset;
use crate::tree::{BoundaryItem, BubbleTree, Disk, InteriorItem, Label, NodePath, Step};

/// Default limit on the number of elements of a face poset.
pub const DEFAULT_MAX_FACES: usize = 200_000;

/// Face poset of the whole space: all strata, ranked by dimension, with
/// covers from single-arc merges. Labels are canonical encodings.
pub fn face_poset(n: u32, m: u32) -> Result<FacePoset> {
    face_poset_with(n, m, &EnumConfig::default(), DEFAULT_MAX_FACES)
}

pub fn face_poset_with(n: u32, m: u32, cfg: &EnumConfig, max_faces: usize) -> Result<FacePoset> {
    let strata = enumerate_all_with(n, m, cfg)?;
    face_poset_of(&strata, max_faces)
}

/// Face poset over already enumerated strata. A merge landing outside the
/// given strata is reported as a bad path.
pub fn face_poset_of(strata: &Strata, max_faces: usize) -> Result<FacePoset> {
    if strata.len() > max_faces {
        return Err(Error::CapExceeded {
            what: "strata in face poset",
            count: strata.len(),
            cap: max_faces,
        });
    }
    let all: Vec<&Stratum> = strata.iter().collect();
    let index: HashMap<&Stratum, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut covers = Vec::new();
    for (lo, s) in all.iter().enumerate() {
        for path in s.canonical().bubble_paths() {
            for up in merge_valid(s.canonical(), &path)? {
                let hi = index
                    .get(&up)
                    .ok_or_else(|| Error::BadPath(format!("merge of {s} at {path} gave unknown {up}")))?;
                covers.push((lo, *hi));
            }
        }
    }
    let ranks = all.iter().map(|s| s.dim()).collect();
    let labels = all.iter().map(|s| Some(s.encoding())).collect();
    Ok(FacePoset::new(ranks, labels, covers))
}

/// The tile of one chamber.
#[derive(Clone, Debug, Serialize)]
pub struct ChamberClosure {
    pub n: u32,
    pub m: u32,
    /// Faces ranked by dimension, labelled by oriented encoding; the
    /// chamber itself is the top element.
    pub poset: FacePoset,
    /// Oriented face trees, indexed like the poset.
    #[serde(skip)]
    pub faces: Vec<BubbleTree>,
    /// Stratum of the space each face lies in.
    pub strata: Vec<Stratum>,
    /// Index into `strata` for every face.
    pub face_stratum: Vec<usize>,
}

impl ChamberClosure {
    /// True when two distinct faces of the tile are the same stratum.
    pub fn self_glued(&self) -> bool {
        self.strata.len() < self.faces.len()
    }

    /// Strata hit by more than one face, with the number of faces each.
    pub fn glued_strata(&self) -> Vec<(&Stratum, usize)> {
        let mut count = vec![0usize; self.strata.len()];
        for &s in &self.face_stratum {
            count[s] += 1;
        }
        self.strata
            .iter()
            .zip(count)
            .filter(|&(_, c)| c > 1)
            .collect()
    }

    /// Distinct strata met by the closure, per dimension.
    pub fn stratum_f_vector(&self) -> Vec<usize> {
        let top = self.strata.iter().map(Stratum::dim).max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        for s in &self.strata {
            f[s.dim()] += 1;
        }
        f
    }
}

/// Face poset of a chamber's tile, built by repeatedly inserting one arc.
pub fn chamber_closure_poset(n: u32, m: u32, chamber: &Stratum) -> Result<ChamberClosure> {
    chamber_closure_poset_with(n, m, chamber, DEFAULT_MAX_FACES)
}

pub fn chamber_closure_poset_with(
    n: u32,
    m: u32,
    chamber: &Stratum,
    max_faces: usize,
) -> Result<ChamberClosure> {
    let tree = chamber.canonical();
    crate::tree::validate_tree(tree, n, m)?;
    if chamber.codim() != 0 {
        return Err(Error::NotAChamber(chamber.codim()));
    }
    let start = normalize(tree.clone(), false);
    let mut faces = vec![start.clone()];
    let mut index: HashMap<BubbleTree, usize> = HashMap::from([(start, 0)]);
    let mut covers = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(hi) = queue.pop_front() {
        for child in insertions(&faces[hi]) {
            let child = normalize(child, false);
            let lo = match index.get(&child) {
                Some(&i) => i,
                None => {
                    if faces.len() >= max_faces {
                        return Err(Error::CapExceeded {
                            what: "faces in chamber closure",
                            count: faces.len() + 1,
                            cap: max_faces,
                        });
                    }
                    let i = faces.len();
                    index.insert(child.clone(), i);
                    faces.push(child);
                    queue.push_back(i);
                    i
                }
            };
            covers.push((lo, hi));
        }
    }
    // stable order: by codimension then oriented encoding
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by(|&a, &b| {
        (faces[a].codim(), &faces[a])
            .cmp(&(faces[b].codim(), &faces[b]))
    });
    let mut pos = vec![0; faces.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let faces: Vec<BubbleTree> = order.iter().map(|&i| faces[i].clone()).collect();
    let covers = covers.into_iter().map(|(a, b)| (pos[a], pos[b])).collect();
    let ranks = faces.iter().map(|f| f.space_dim() - f.codim()).collect();
    let labels = faces.iter().map(|f| Some(f.to_string())).collect();
    let poset = FacePoset::new(ranks, labels, covers);

    let mut strata: Vec<Stratum> = Vec::new();
    let mut seen: BTreeMap<Stratum, usize> = BTreeMap::new();
    let mut face_stratum = Vec::with_capacity(faces.len());
    for f in &faces {
        let s = Stratum::from_valid(f.clone());
        let id = *seen.entry(s.clone()).or_insert_with(|| {
            strata.push(s);
            strata.len() - 1
        });
        face_stratum.push(id);
    }
    Ok(ChamberClosure {
        n,
        m,
        poset,
        faces,
        strata,
        face_stratum,
    })
}

/// Every valid tree obtained by adding one arc, in raw form.
pub fn insertions(tree: &BubbleTree) -> Vec<BubbleTree> {
    let mu = tree.anchor();
    let mut out = Vec::new();
    let mut containers = vec![NodePath::root()];
    containers.extend(tree.bubble_paths());
    for path in containers {
        let is_root = path.is_root();
        let is_sphere = matches!(path.0.last(), Some(Step::Interior(_)));
        if is_sphere {
            let items = sphere_items(tree, &path);
            for mask in proper_subsets(items.len()) {
                if mask.count_ones() < 2 {
                    continue;
                }
                let mut t = tree.clone();
                let ch = sphere_at(&mut t, &path);
                let (inside, rest) = split_by_mask(std::mem::take(ch), mask);
                *ch = rest;
                ch.push(InteriorItem::Sphere(inside));
                out.push(t);
            }
            continue;
        }
        let disk = disk_at_ref(tree, &path);
        let ni = disk.interior.len();
        let nb = disk.boundary.len();
        // loops around interior items
        for mask in 1u64..(1 << ni) {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut t = tree.clone();
            let d = disk_at(&mut t, &path);
            let (inside, mut rest) = split_by_mask(std::mem::take(&mut d.interior), mask);
            rest.push(InteriorItem::Sphere(inside));
            d.interior = rest;
            out.push(t);
        }
        // disk arcs: interior items avoiding the anchor plus a run of boundary items
        let free: u64 = disk
            .interior
            .iter()
            .enumerate()
            .filter(|(_, it)| mu.is_none_or(|l| !contains_label(it, l)))
            .fold(0, |acc, (i, _)| acc | 1 << i);
        for (s, len) in runs(nb, is_root) {
            let mut sub = 0u64;
            loop {
                if sub.count_ones() as usize * 2 + len >= 2 {
                    let mut t = tree.clone();
                    let d = disk_at(&mut t, &path);
                    let (inside, rest) = split_by_mask(std::mem::take(&mut d.interior), sub);
                    d.interior = rest;
                    let mut items = std::mem::take(&mut d.boundary);
                    let run: Vec<BoundaryItem>;
                    if is_root {
                        items.rotate_left(s);
                        let tail = items.split_off(len);
                        run = items;
                        items = tail;
                        items.insert(0, BoundaryItem::Disk(Disk::new(inside, run)));
                    } else {
                        let tail = items.split_off(s + len);
                        run = items.split_off(s);
                        items.push(BoundaryItem::Disk(Disk::new(inside, run)));
                        items.extend(tail);
                    }
                    d.boundary = items;
                    out.push(t);
                }
                sub = sub.wrapping_sub(free) & free;
                if sub == 0 {
                    break;
                }
            }
        }
    }
    out.retain(|t| t.validate().is_ok());
    out
}

/// `(start, length)` of every boundary run. A bubble's sequence is linear;
/// the root's is cyclic, and a run may wrap or cover the whole cycle.
fn runs(nb: usize, cyclic: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if cyclic {
        if nb == 0 {
            out.push((0, 0));
        }
        for s in 0..nb {
            for len in 0..=nb {
                out.push((s, len));
            }
        }
    } else {
        for s in 0..=nb {
            for len in 0..=nb - s {
                out.push((s, len));
            }
        }
    }
    out
}

fn proper_subsets(k: usize) -> impl Iterator<Item = u64> {
    1u64..((1u64 << k) - 1).max(1)
}

fn split_by_mask(items: Vec<InteriorItem>, mask: u64) -> (Vec<InteriorItem>, Vec<InteriorItem>) {
    let mut inside = Vec::new();
    let mut rest = Vec::new();
    for (i, it) in items.into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            inside.push(it);
        } else {
            rest.push(it);
        }
    }
    (inside, rest)
}

fn contains_label(item: &InteriorItem, label: Label) -> bool {
    match item {
        InteriorItem::Particle(l) => *l == label,
        InteriorItem::Sphere(ch) => ch.iter().any(|c| contains_label(c, label)),
    }
}

fn disk_at_ref<'a>(tree: &'a BubbleTree, path: &NodePath) -> &'a Disk {
    match tree.node(path) {
        Ok(crate::tree::Node::Root(d)) | Ok(crate::tree::Node::Disk(d)) => d,
        _ => unreachable!("path names a disk"),
    }
}

fn sphere_items(tree: &BubbleTree, path: &NodePath) -> Vec<InteriorItem> {
    match tree.node(path) {
        Ok(crate::tree::Node::Sphere(ch)) => ch.to_vec(),
        _ => unreachable!("path names a sphere"),
    }
}

fn disk_at<'a>(tree: &'a mut BubbleTree, path: &NodePath) -> &'a mut Disk {
    match crate::ops::container_at(tree.root_mut(), &path.0) {
        Some(crate::ops::Container::Disk(d)) => d,
        _ => unreachable!("path names a disk"),
    }
}

fn sphere_at<'a>(tree: &'a mut BubbleTree, path: &NodePath) -> &'a mut Vec<InteriorItem> {
    match crate::ops::container_at(tree.root_mut(), &path.0) {
        Some(crate::ops::Container::Sphere(ch)) => ch,
        _ => unreachable!("path names a sphere"),
    }
}

/// Chambers of the space and which pairs share a codim-1 stratum.
#[derive(Clone, Debug, Serialize)]
pub struct Adjacency {
    pub chambers: Vec<Stratum>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

impl Adjacency {
    /// Component sizes, largest first.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.components.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

pub fn chamber_adjacency(n: u32, m: u32) -> Result<Adjacency> {
    chamber_adjacency_with(n, m, &EnumConfig::default())
}

pub fn chamber_adjacency_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<Adjacency> {
    crate::error::check_space(n, m)?;
    if m == 0 {
        return Err(Error::UnsupportedM0);
    }
    let chambers = enumerate_strata_with(n, m, 0, cfg)?;
    let index: HashMap<&Stratum, usize> = chambers.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    if (2 * n + m) > 3 {
        for wall in enumerate_strata_with(n, m, 1, cfg)? {
            for path in wall.canonical().bubble_paths() {
                let sides: Vec<usize> = merge_bubble(wall.canonical(), &path)?
                    .iter()
                    .map(|s| index[s])
                    .collect();
                if let [a, b] = sides[..] {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let mut parent: Vec<usize> = (0..chambers.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..chambers.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    Ok(Adjacency {
        chambers,
        edges,
        components: groups.into_values().collect(),
    })
}

/// Alternating count of strata by dimension. Only meaningful when every
/// stratum is an open cell, which holds for `n <= 1`.
pub fn euler_characteristic(n: u32, m: u32) -> Result<i64> {
    euler_characteristic_with(n, m, &EnumConfig::default())
}

pub fn euler_characteristic_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<i64> {
    crate::error::check_space(n, m)?;
    if n >= 2 {
        return Err(Error::UnsupportedN(n));
    }
    let strata = enumerate_all_with(n, m, cfg)?;
    Ok(strata
        .iter()
        .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{is_graded, poset_f_vector};

    fn chamber(n: u32, m: u32) -> Stratum {
        Stratum::from_tree(&BubbleTree::trivial(n, m)).unwrap()
    }

    #[test]
    fn circle_with_a_vertex() {
        let p = face_poset(1, 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers().len(), 1);
    }

    #[test]
    fn point_poset() {
        let p = face_poset(1, 1).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers().is_empty());
    }

    #[test]
    fn eye_poset() {
        let p = face_poset(2, 1).unwrap();
        assert!(is_graded(&p));
        assert_eq!(poset_f_vector(&p).unwrap(), vec![1, 3, 1]);
        let corner = (0..p.len()).find(|&i| p.rank(i) == 0).unwrap();
        // the corner lies on both lids, not on the pupil
        assert_eq!(p.up(corner).len(), 2);
        let pupil = (0..p.len())
            .find(|&i| p.rank(i) == 1 && p.down(i).is_empty())
            .unwrap();
        assert!(p.label(pupil).unwrap().contains("S("));
    }

    #[test]
    fn hexagon_tile() {
        let c = chamber_closure_poset(1, 3, &chamber(1, 3)).unwrap();
        assert_eq!(poset_f_vector(&c.poset).unwrap(), vec![6, 6, 1]);
        // opposite vertices of each hexagon are the same point of the space
        assert_eq!(c.stratum_f_vector(), vec![3, 6, 1]);
        assert!(c.glued_strata().iter().all(|&(s, k)| s.dim() == 0 && k == 2));
    }

    #[test]
    fn pentagon_tile() {
        let c = chamber_closure_poset(0, 5, &chamber(0, 5)).unwrap();
        assert_eq!(poset_f_vector(&c.poset).unwrap(), vec![5, 5, 1]);
    }

    #[test]
    fn segment_glued_to_itself() {
        let c = chamber_closure_poset(1, 2, &chamber(1, 2)).unwrap();
        assert_eq!(poset_f_vector(&c.poset).unwrap(), vec![2, 1]);
        assert_eq!(c.stratum_f_vector(), vec![1, 1]);
        assert!(c.self_glued());
        assert_eq!(c.glued_strata().len(), 1);
    }

    #[test]
    fn closure_rejects_walls() {
        let wall = enumerate_strata_with(1, 3, 1, &EnumConfig::default()).unwrap();
        let err = chamber_closure_poset(1, 3, &wall[0]).unwrap_err();
        assert_eq!(err, Error::NotAChamber(1));
    }

    #[test]
    fn adjacency_components() {
        assert_eq!(chamber_adjacency(0, 4).unwrap().component_sizes(), vec![3, 3]);
        assert_eq!(chamber_adjacency(1, 3).unwrap().component_sizes(), vec![2]);
        assert_eq!(chamber_adjacency(1, 1).unwrap().component_sizes(), vec![1]);
    }

    #[test]
    fn euler() {
        assert_eq!(euler_characteristic(1, 3).unwrap(), -1);
        assert_eq!(euler_characteristic(1, 2).unwrap(), 0);
        assert_eq!(euler_characteristic(0, 4).unwrap(), 0);
        assert_eq!(euler_characteristic(2, 2).unwrap_err(), Error::UnsupportedN(2));
    }
}
