//! Bubble trees: the combinatorial record of a nested compatible arc system.
//!
//! A tree has a root (the bubble holding the anchor particle) with an
//! unordered set of interior items and a cyclically ordered sequence of
//! boundary items. Interior items are particles or sphere bubbles; boundary
//! items are particles or disk bubbles. A disk bubble is *flat* when it has
//! no direct interior items and *punctured* otherwise.
//!
//! The compact text encoding used throughout (and by `Display`/`FromStr`):
//!
//! ```text
//! K(2,1):(i2|F[P(i1|),b1])
//! ```
//!
//! `iK`/`bK` are particles, `S(..)` a sphere, `F[..]` a flat disk,
//! `P(interior|boundary)` a punctured disk and the outer `(interior|boundary)`
//! the root. The `K(n,m):` prefix is optional; when absent `n` and `m` are
//! the particle counts.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_space, Error, Result};

pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParticleKind {
    Interior,
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParticleId {
    pub kind: ParticleKind,
    pub index: Label,
}

impl ParticleId {
    pub fn interior(index: Label) -> Self {
        ParticleId {
            kind: ParticleKind::Interior,
            index,
        }
    }

    pub fn boundary(index: Label) -> Self {
        ParticleId {
            kind: ParticleKind::Boundary,
            index,
        }
    }
}

impl fmt::Display for ParticleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParticleKind::Interior => write!(f, "ip{}", self.index),
            ParticleKind::Boundary => write!(f, "bp{}", self.index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InteriorItem {
    Particle(Label),
    /// Unordered children; at least two for stability.
    Sphere(Vec<InteriorItem>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryItem {
    Particle(Label),
    Disk(Disk),
}

/// Contents of a disk: the root, or a disk bubble hanging off a boundary.
///
/// For the root the boundary sequence is cyclic; for a bubble it is linear,
/// read from the attachment node.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Disk {
    pub interior: Vec<InteriorItem>,
    pub boundary: Vec<BoundaryItem>,
}

impl Disk {
    pub fn new(interior: Vec<InteriorItem>, boundary: Vec<BoundaryItem>) -> Self {
        Disk { interior, boundary }
    }

    pub fn is_flat(&self) -> bool {
        self.interior.is_empty()
    }

    /// `2i + b` over direct items.
    pub fn weight(&self) -> usize {
        2 * self.interior.len() + self.boundary.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BubbleTree {
    n: u32,
    m: u32,
    root: Disk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Interior(usize),
    Boundary(usize),
}

/// Address of a node: the sequence of child positions from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodePath(pub Vec<Step>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, step: Step) -> Self {
        let mut steps = self.0.clone();
        steps.push(step);
        NodePath(steps)
    }

    pub fn split_last(&self) -> Option<(NodePath, Step)> {
        let (&last, rest) = self.0.split_last()?;
        Some((NodePath(rest.to_vec()), last))
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "/");
        }
        for (pos, step) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ".")?;
            }
            match step {
                Step::Interior(i) => write!(f, "i{i}")?,
                Step::Boundary(i) => write!(f, "b{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for NodePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "/" {
            return Ok(NodePath::root());
        }
        let mut steps = Vec::new();
        for part in s.split('.') {
            let bad = || Error::BadPath(format!("cannot parse step {part:?} in {s:?}"));
            let (kind, idx) = part.split_at(1.min(part.len()));
            let idx: usize = idx.parse().map_err(|_| bad())?;
            steps.push(match kind {
                "i" => Step::Interior(idx),
                "b" => Step::Boundary(idx),
                _ => return Err(bad()),
            });
        }
        Ok(NodePath(steps))
    }
}

/// Read-only view of a node reached by a [`NodePath`].
#[derive(Clone, Copy, Debug)]
pub enum Node<'a> {
    Root(&'a Disk),
    Sphere(&'a [InteriorItem]),
    Disk(&'a Disk),
    Particle(ParticleId),
}

/// What a bubble node is, by its direct contents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BubbleKind {
    Sphere,
    Flat,
    Punctured,
}

impl BubbleTree {
    /// Builds a tree without validating it. Use [`BubbleTree::new`] for
    /// checked construction.
    pub fn from_parts(n: u32, m: u32, root: Disk) -> Self {
        BubbleTree { n, m, root }
    }

    pub fn new(n: u32, m: u32, root: Disk) -> Result<Self> {
        let tree = BubbleTree { n, m, root };
        tree.validate()?;
        Ok(tree)
    }

    /// The codimension-0 tree: every particle directly on the root, boundary
    /// particles in the given cyclic order.
    pub fn trivial_with_order(n: u32, order: &[Label]) -> Self {
        let interior = (1..=n).map(InteriorItem::Particle).collect();
        let boundary = order.iter().copied().map(BoundaryItem::Particle).collect();
        BubbleTree {
            n,
            m: order.len() as u32,
            root: Disk::new(interior, boundary),
        }
    }

    pub fn trivial(n: u32, m: u32) -> Self {
        let order: Vec<Label> = (1..=m).collect();
        Self::trivial_with_order(n, &order)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn root(&self) -> &Disk {
        &self.root
    }

    pub(crate) fn root_mut(&mut self) -> &mut Disk {
        &mut self.root
    }

    pub fn into_root(self) -> Disk {
        self.root
    }

    /// The anchor particle μ: interior particle `n`, when `n >= 1`.
    pub fn anchor(&self) -> Option<Label> {
        (self.n >= 1).then_some(self.n)
    }

    pub fn space_dim(&self) -> usize {
        (2 * self.n + self.m) as usize - 3
    }

    /// Number of bubble nodes (= number of arcs).
    pub fn codim(&self) -> usize {
        fn interior(items: &[InteriorItem]) -> usize {
            items
                .iter()
                .map(|it| match it {
                    InteriorItem::Particle(_) => 0,
                    InteriorItem::Sphere(ch) => 1 + interior(ch),
                })
                .sum()
        }
        fn disk(d: &Disk) -> usize {
            interior(&d.interior)
                + d.boundary
                    .iter()
                    .map(|it| match it {
                        BoundaryItem::Particle(_) => 0,
                        BoundaryItem::Disk(sub) => 1 + disk(sub),
                    })
                    .sum::<usize>()
        }
        disk(&self.root)
    }

    /// `(codim, dim)` after validating the tree.
    pub fn codim_dim(&self) -> Result<(usize, usize)> {
        self.validate()?;
        let codim = self.codim();
        Ok((codim, self.space_dim() - codim))
    }

    /// Checks every tree invariant, reporting the first violation in the
    /// order: degenerate space, label partition, bubble size, root
    /// stability, anchor.
    pub fn validate(&self) -> Result<()> {
        check_space(self.n, self.m)?;
        self.check_labels()?;
        check_disk_bubbles(&self.root, &NodePath::root())?;
        let weight = self.root.weight();
        if weight < 3 {
            return Err(Error::RootUnstable { weight });
        }
        if let Some(mu) = self.anchor() {
            if self
                .root
                .boundary
                .iter()
                .any(|it| boundary_contains_interior(it, mu))
            {
                return Err(Error::AnchorViolation(mu));
            }
        }
        Ok(())
    }

    fn check_labels(&self) -> Result<()> {
        let mut interior = vec![0usize; self.n as usize + 1];
        let mut boundary = vec![0usize; self.m as usize + 1];
        let mut stray = Vec::new();
        self.for_each_particle(|p| {
            let (counts, bound) = match p.kind {
                ParticleKind::Interior => (&mut interior, self.n),
                ParticleKind::Boundary => (&mut boundary, self.m),
            };
            if p.index == 0 || p.index > bound {
                stray.push(p);
            } else {
                counts[p.index as usize] += 1;
            }
        });
        if let Some(p) = stray.first() {
            return Err(Error::LabelPartition(format!(
                "{p} is out of range for (n,m) = ({},{})",
                self.n, self.m
            )));
        }
        let check = |counts: &[usize], make: fn(Label) -> ParticleId| -> Result<()> {
            for (idx, &c) in counts.iter().enumerate().skip(1) {
                let p = make(idx as Label);
                match c {
                    1 => {}
                    0 => return Err(Error::LabelPartition(format!("{p} is missing"))),
                    _ => return Err(Error::LabelPartition(format!("{p} occurs {c} times"))),
                }
            }
            Ok(())
        };
        check(&interior, ParticleId::interior)?;
        check(&boundary, ParticleId::boundary)
    }

    pub fn for_each_particle(&self, mut f: impl FnMut(ParticleId)) {
        visit_disk_particles(&self.root, &mut f);
    }

    pub fn node(&self, path: &NodePath) -> Result<Node<'_>> {
        let bad = || Error::BadPath(path.to_string());
        let mut node = Node::Root(&self.root);
        for step in &path.0 {
            node = match (node, *step) {
                (Node::Root(d) | Node::Disk(d), Step::Interior(i)) => {
                    interior_node(d.interior.get(i).ok_or_else(bad)?)
                }
                (Node::Root(d) | Node::Disk(d), Step::Boundary(i)) => {
                    match d.boundary.get(i).ok_or_else(bad)? {
                        BoundaryItem::Particle(l) => Node::Particle(ParticleId::boundary(*l)),
                        BoundaryItem::Disk(sub) => Node::Disk(sub),
                    }
                }
                (Node::Sphere(ch), Step::Interior(i)) => interior_node(ch.get(i).ok_or_else(bad)?),
                _ => return Err(bad()),
            };
        }
        Ok(node)
    }

    pub fn bubble_kind(&self, path: &NodePath) -> Result<BubbleKind> {
        match self.node(path)? {
            Node::Sphere(_) => Ok(BubbleKind::Sphere),
            Node::Disk(d) if d.is_flat() => Ok(BubbleKind::Flat),
            Node::Disk(_) => Ok(BubbleKind::Punctured),
            Node::Root(_) => Err(Error::IsRoot),
            Node::Particle(p) => Err(Error::BadPath(format!("{path} addresses particle {p}"))),
        }
    }

    /// Paths of all bubble nodes, in pre-order.
    pub fn bubble_paths(&self) -> Vec<NodePath> {
        fn interior(items: &[InteriorItem], at: &NodePath, out: &mut Vec<NodePath>) {
            for (i, it) in items.iter().enumerate() {
                if let InteriorItem::Sphere(ch) = it {
                    let p = at.child(Step::Interior(i));
                    out.push(p.clone());
                    interior(ch, &p, out);
                }
            }
        }
        fn disk(d: &Disk, at: &NodePath, out: &mut Vec<NodePath>) {
            interior(&d.interior, at, out);
            for (i, it) in d.boundary.iter().enumerate() {
                if let BoundaryItem::Disk(sub) = it {
                    let p = at.child(Step::Boundary(i));
                    out.push(p.clone());
                    disk(sub, &p, out);
                }
            }
        }
        let mut out = Vec::new();
        disk(&self.root, &NodePath::root(), &mut out);
        out
    }

    /// Boundary labels read around the disk with every bubble spliced in its
    /// stored orientation, rotated to start at the smallest label.
    pub fn boundary_order(&self) -> Vec<Label> {
        let mut order = Vec::with_capacity(self.m as usize);
        for it in &self.root.boundary {
            push_boundary_labels(it, &mut order);
        }
        if let Some(pos) = order.iter().enumerate().min_by_key(|(_, l)| **l).map(|(i, _)| i) {
            order.rotate_left(pos);
        }
        order
    }
}

pub(crate) fn push_boundary_labels(item: &BoundaryItem, out: &mut Vec<Label>) {
    match item {
        BoundaryItem::Particle(l) => out.push(*l),
        BoundaryItem::Disk(d) => d.boundary.iter().for_each(|it| push_boundary_labels(it, out)),
    }
}

fn interior_node(item: &InteriorItem) -> Node<'_> {
    match item {
        InteriorItem::Particle(l) => Node::Particle(ParticleId::interior(*l)),
        InteriorItem::Sphere(ch) => Node::Sphere(ch),
    }
}

fn visit_interior_particles(items: &[InteriorItem], f: &mut impl FnMut(ParticleId)) {
    for it in items {
        match it {
            InteriorItem::Particle(l) => f(ParticleId::interior(*l)),
            InteriorItem::Sphere(ch) => visit_interior_particles(ch, f),
        }
    }
}

fn visit_disk_particles(d: &Disk, f: &mut impl FnMut(ParticleId)) {
    visit_interior_particles(&d.interior, f);
    for it in &d.boundary {
        match it {
            BoundaryItem::Particle(l) => f(ParticleId::boundary(*l)),
            BoundaryItem::Disk(sub) => visit_disk_particles(sub, f),
        }
    }
}

fn interior_contains(item: &InteriorItem, label: Label) -> bool {
    match item {
        InteriorItem::Particle(l) => *l == label,
        InteriorItem::Sphere(ch) => ch.iter().any(|c| interior_contains(c, label)),
    }
}

fn boundary_contains_interior(item: &BoundaryItem, label: Label) -> bool {
    match item {
        BoundaryItem::Particle(_) => false,
        BoundaryItem::Disk(d) => {
            d.interior.iter().any(|c| interior_contains(c, label))
                || d.boundary.iter().any(|c| boundary_contains_interior(c, label))
        }
    }
}

fn check_spheres(items: &[InteriorItem], at: &NodePath) -> Result<()> {
    for (i, it) in items.iter().enumerate() {
        if let InteriorItem::Sphere(ch) = it {
            let p = at.child(Step::Interior(i));
            if ch.len() < 2 {
                return Err(Error::BubbleTooSmall(format!(
                    "sphere at {p} has {} child(ren), needs 2",
                    ch.len()
                )));
            }
            check_spheres(ch, &p)?;
        }
    }
    Ok(())
}

fn check_disk_bubbles(d: &Disk, at: &NodePath) -> Result<()> {
    check_spheres(&d.interior, at)?;
    for (i, it) in d.boundary.iter().enumerate() {
        if let BoundaryItem::Disk(sub) = it {
            let p = at.child(Step::Boundary(i));
            if sub.weight() < 2 {
                return Err(Error::BubbleTooSmall(format!(
                    "disk at {p} has 2i+b = {} < 2",
                    sub.weight()
                )));
            }
            check_disk_bubbles(sub, &p)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Compact encoding

fn write_interior(f: &mut fmt::Formatter<'_>, items: &[InteriorItem]) -> fmt::Result {
    for (pos, it) in items.iter().enumerate() {
        if pos > 0 {
            write!(f, ",")?;
        }
        match it {
            InteriorItem::Particle(l) => write!(f, "i{l}")?,
            InteriorItem::Sphere(ch) => {
                write!(f, "S(")?;
                write_interior(f, ch)?;
                write!(f, ")")?;
            }
        }
    }
    Ok(())
}

fn write_boundary(f: &mut fmt::Formatter<'_>, items: &[BoundaryItem]) -> fmt::Result {
    for (pos, it) in items.iter().enumerate() {
        if pos > 0 {
            write!(f, ",")?;
        }
        match it {
            BoundaryItem::Particle(l) => write!(f, "b{l}")?,
            BoundaryItem::Disk(d) if d.is_flat() => {
                write!(f, "F[")?;
                write_boundary(f, &d.boundary)?;
                write!(f, "]")?;
            }
            BoundaryItem::Disk(d) => {
                write!(f, "P(")?;
                write_interior(f, &d.interior)?;
                write!(f, "|")?;
                write_boundary(f, &d.boundary)?;
                write!(f, ")")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_interior(f, &self.interior)?;
        write!(f, "|")?;
        write_boundary(f, &self.boundary)?;
        write!(f, ")")
    }
}

impl fmt::Display for BubbleTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{}):{}", self.n, self.m, self.root)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.pos)))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("number out of range".into()))
    }

    fn interior_list(&mut self, close: u8) -> Result<Vec<InteriorItem>> {
        let mut items = Vec::new();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.interior_item()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(items);
            }
        }
    }

    fn interior_item(&mut self) -> Result<InteriorItem> {
        if self.eat_str("S(") {
            let ch = self.interior_list(b')')?;
            self.eat(b')')?;
            Ok(InteriorItem::Sphere(ch))
        } else if self.eat_str("i") {
            Ok(InteriorItem::Particle(self.number()?))
        } else {
            self.err("expected an interior item")
        }
    }

    fn boundary_list(&mut self, close: u8) -> Result<Vec<BoundaryItem>> {
        let mut items = Vec::new();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.boundary_item()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(items);
            }
        }
    }

    fn boundary_item(&mut self) -> Result<BoundaryItem> {
        if self.eat_str("F[") {
            let items = self.boundary_list(b']')?;
            self.eat(b']')?;
            Ok(BoundaryItem::Disk(Disk::new(Vec::new(), items)))
        } else if self.eat_str("P") {
            Ok(BoundaryItem::Disk(self.disk()?))
        } else if self.eat_str("b") {
            Ok(BoundaryItem::Particle(self.number()?))
        } else {
            self.err("expected a boundary item")
        }
    }

    fn disk(&mut self) -> Result<Disk> {
        self.eat(b'(')?;
        let interior = self.interior_list(b'|')?;
        self.eat(b'|')?;
        let boundary = self.boundary_list(b')')?;
        self.eat(b')')?;
        Ok(Disk::new(interior, boundary))
    }
}

impl FromStr for BubbleTree {
    type Err = Error;

    /// Parses the compact encoding. The result is not validated.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            src: cleaned.as_bytes(),
            pos: 0,
        };
        let declared = if p.eat_str("K(") {
            let n = p.number()?;
            p.eat(b',')?;
            let m = p.number()?;
            p.eat(b')')?;
            p.eat(b':')?;
            Some((n, m))
        } else {
            None
        };
        let root = p.disk()?;
        if p.pos != p.src.len() {
            return p.err("trailing input");
        }
        let (n, m) = declared.unwrap_or_else(|| count_particles(&root));
        Ok(BubbleTree { n, m, root })
    }
}

pub(crate) fn count_particles(root: &Disk) -> (u32, u32) {
    let (mut n, mut m) = (0, 0);
    visit_disk_particles(root, &mut |p| match p.kind {
        ParticleKind::Interior => n += 1,
        ParticleKind::Boundary => m += 1,
    });
    (n, m)
}

/// `validate_tree(tree, n, m)`: checks the tree against an explicit `(n,m)`.
pub fn validate_tree(tree: &BubbleTree, n: u32, m: u32) -> Result<()> {
    check_space(n, m)?;
    if tree.n != n || tree.m != m {
        return Err(Error::LabelPartition(format!(
            "tree is declared for ({},{}), expected ({n},{m})",
            tree.n, tree.m
        )));
    }
    tree.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BubbleTree {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_configuration_is_valid() {
        let tree = t("(i1|b1)");
        assert_eq!(tree.validate(), Ok(()));
        assert_eq!(tree.codim_dim(), Ok((0, 0)));
    }

    #[test]
    fn understuffed_flat_bubble() {
        let err = t("(i1|F[b1])").validate().unwrap_err();
        assert_eq!(err.code(), "BubbleTooSmall");
    }

    #[test]
    fn anchor_inside_disk() {
        let err = t("K(2,1):(i1|P(i2|),b1)").validate().unwrap_err();
        assert_eq!(err.code(), "AnchorViolation");
        // the anchor may sit in spheres
        assert!(t("K(2,1):(S(i1,i2)|b1)").validate().is_ok());
    }

    #[test]
    fn label_errors() {
        assert_eq!(t("K(1,2):(i1|b1,b1)").validate().unwrap_err().code(), "LabelPartition");
        assert_eq!(t("K(1,2):(i1|b1,b3)").validate().unwrap_err().code(), "LabelPartition");
        assert_eq!(t("K(2,2):(i1|b1,b2)").validate().unwrap_err().code(), "LabelPartition");
    }

    #[test]
    fn degenerate_and_unstable() {
        assert_eq!(t("K(1,0):(i1|)").validate().unwrap_err().code(), "DegenerateSpace");
        assert_eq!(t("K(0,2):(|b1,b2)").validate().unwrap_err().code(), "DegenerateSpace");
        // root (i1 | F) has weight 3 but (| F, b3) with n = 0 only 2
        assert_eq!(
            t("K(0,3):(|F[b1,b2],b3)").validate().unwrap_err().code(),
            "RootUnstable"
        );
        assert_eq!(t("K(2,0):(S(i1,i2)|)").validate().unwrap_err().code(), "RootUnstable");
    }

    #[test]
    fn sphere_needs_two_children() {
        assert_eq!(t("K(2,1):(i2,S(i1)|b1)").validate().unwrap_err().code(), "BubbleTooSmall");
    }

    #[test]
    fn codim_examples() {
        assert_eq!(t("(i1,i2|b1,b2)").codim_dim(), Ok((0, 3)));
        assert_eq!(t("(i2|F[P(i1|),b1])").codim_dim(), Ok((2, 0)));
        assert_eq!(t("(S(i1,i2)|b1)").codim_dim(), Ok((1, 1)));
    }

    #[test]
    fn encoding_round_trips() {
        for s in [
            "K(2,1):(i2|F[P(i1|),b1])",
            "K(3,2):(S(i3,S(i1,i2))|b2,b1)",
            "K(0,4):(|b1,b2,F[b3,b4])",
        ] {
            assert_eq!(t(s).to_string(), s);
        }
    }

    #[test]
    fn node_paths() {
        let tree = t("(i2|F[P(i1|),b1])");
        let paths = tree.bubble_paths();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].to_string(), "b0");
        assert_eq!(paths[1].to_string(), "b0.b0");
        assert_eq!("b0.b0".parse::<NodePath>().unwrap(), paths[1]);
        assert_eq!(tree.bubble_kind(&paths[0]), Ok(BubbleKind::Flat));
        assert_eq!(tree.bubble_kind(&paths[1]), Ok(BubbleKind::Punctured));
        assert!(tree.node(&"b3".parse().unwrap()).is_err());
    }

    #[test]
    fn boundary_order_splices_bubbles() {
        assert_eq!(t("(i1|b3,F[b2,b4],b1)").boundary_order(), vec![1, 3, 2, 4]);
    }
}
