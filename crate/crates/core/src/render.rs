//! Schematic drawings: nested arcs on a disk (SVG) and the dual tree (DOT).
//!
//! Every disk bubble is drawn as a circle tangent to its parent at its
//! attachment point, every sphere bubble as a dashed loop. Positions depend
//! only on the tree, so output is byte-stable.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::tree::{BoundaryItem, BubbleTree, Disk, InteriorItem};

const SIZE: f64 = 400.0;
const DOT_R: f64 = 4.0;

/// SVG picture of the arc system encoded by `tree`.
pub fn render_svg(tree: &BubbleTree) -> String {
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n",
        s = SIZE
    );
    let _ = writeln!(out, "<title>{}</title>", xml_escape(&tree.to_string()));
    let c = SIZE / 2.0;
    let r = SIZE / 2.0 - 20.0;
    let _ = writeln!(
        out,
        "<circle class=\"disk\" cx=\"{c:.2}\" cy=\"{c:.2}\" r=\"{r:.2}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"
    );
    draw_disk(&mut out, tree.root(), c, c, r, None);
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn dot(out: &mut String, class: &str, x: f64, y: f64, label: &str) {
    let fill = if class == "interior" { "white" } else { "black" };
    let _ = writeln!(
        out,
        "<circle class=\"{class}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{DOT_R}\" fill=\"{fill}\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">{label}</text>",
        x + DOT_R + 1.0,
        y - DOT_R - 1.0
    );
}

/// Lays out the items of a disk of radius `r` centred at `(cx, cy)`. For a
/// bubble, `attach` is the angle of its tangency with the parent; its
/// boundary items run around the rest of the circle.
fn draw_disk(out: &mut String, d: &Disk, cx: f64, cy: f64, r: f64, attach: Option<f64>) {
    let nb = d.boundary.len();
    let angles: Vec<f64> = match attach {
        None => (0..nb)
            .map(|k| -PI / 2.0 + 2.0 * PI * k as f64 / nb as f64)
            .collect(),
        Some(a) => (0..nb)
            .map(|k| a + PI / 3.0 + (4.0 * PI / 3.0) * (k as f64 + 0.5) / nb as f64)
            .collect(),
    };
    let sub_r = if nb > 0 { (r * 0.9 * (PI / nb as f64).sin()).min(r * 0.42) } else { 0.0 };
    for (item, &a) in d.boundary.iter().zip(&angles) {
        match item {
            BoundaryItem::Particle(l) => {
                dot(out, "boundary", cx + r * a.cos(), cy + r * a.sin(), &format!("b{l}"));
            }
            BoundaryItem::Disk(sub) => {
                let (sx, sy) = (cx + (r - sub_r) * a.cos(), cy + (r - sub_r) * a.sin());
                let _ = writeln!(
                    out,
                    "<circle class=\"arc\" cx=\"{sx:.2}\" cy=\"{sy:.2}\" r=\"{sub_r:.2}\" fill=\"none\" stroke=\"steelblue\"/>"
                );
                draw_disk(out, sub, sx, sy, sub_r, Some(a + PI));
            }
        }
    }
    let inner = if nb > 0 { (r - 2.0 * sub_r).max(r * 0.15) } else { r * 0.8 };
    draw_interior(out, &d.interior, cx, cy, inner);
}

fn draw_interior(out: &mut String, items: &[InteriorItem], cx: f64, cy: f64, r: f64) {
    let k = items.len();
    let ring = if k > 1 { r * 0.55 } else { 0.0 };
    let item_r = if k > 1 { (ring * (PI / k as f64).sin()).min(r * 0.4) } else { r * 0.6 };
    for (j, it) in items.iter().enumerate() {
        let a = -PI / 2.0 + 2.0 * PI * j as f64 / k.max(1) as f64;
        let (x, y) = (cx + ring * a.cos(), cy + ring * a.sin());
        match it {
            InteriorItem::Particle(l) => dot(out, "interior", x, y, &format!("i{l}")),
            InteriorItem::Sphere(ch) => {
                let _ = writeln!(
                    out,
                    "<circle class=\"loop\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{item_r:.2}\" fill=\"none\" stroke=\"darkred\" stroke-dasharray=\"4 2\"/>"
                );
                draw_interior(out, ch, x, y, item_r * 0.9);
            }
        }
    }
}

/// Kinds of node in the dual tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualNode {
    Root,
    Sphere,
    Flat,
    Punctured,
    Interior(u32),
    Boundary(u32),
}

/// Edges are `spatial` (interior attachments, unordered) or `planar`
/// (boundary attachments, ordered by `position`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub parent: usize,
    pub child: usize,
    pub planar: bool,
    pub position: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualTree {
    pub nodes: Vec<DualNode>,
    pub edges: Vec<DualEdge>,
}

/// The partially planar tree dual to the arc system: one node per bubble
/// and per particle.
pub fn dual_tree(tree: &BubbleTree) -> DualTree {
    let mut dt = DualTree::default();
    dt.nodes.push(DualNode::Root);
    add_disk(&mut dt, 0, tree.root());
    dt
}

fn add_disk(dt: &mut DualTree, at: usize, d: &Disk) {
    add_interior(dt, at, &d.interior);
    for (pos, it) in d.boundary.iter().enumerate() {
        let id = dt.nodes.len();
        match it {
            BoundaryItem::Particle(l) => dt.nodes.push(DualNode::Boundary(*l)),
            BoundaryItem::Disk(sub) => {
                dt.nodes.push(if sub.is_flat() {
                    DualNode::Flat
                } else {
                    DualNode::Punctured
                });
                add_disk(dt, id, sub);
            }
        }
        dt.edges.push(DualEdge {
            parent: at,
            child: id,
            planar: true,
            position: pos,
        });
    }
}

fn add_interior(dt: &mut DualTree, at: usize, items: &[InteriorItem]) {
    for (pos, it) in items.iter().enumerate() {
        let id = dt.nodes.len();
        match it {
            InteriorItem::Particle(l) => dt.nodes.push(DualNode::Interior(*l)),
            InteriorItem::Sphere(ch) => {
                dt.nodes.push(DualNode::Sphere);
                add_interior(dt, id, ch);
            }
        }
        dt.edges.push(DualEdge {
            parent: at,
            child: id,
            planar: false,
            position: pos,
        });
    }
}

impl DualTree {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let (label, shape) = match node {
                DualNode::Root => ("root".to_string(), "doublecircle"),
                DualNode::Sphere => ("S".to_string(), "circle"),
                DualNode::Flat => ("F".to_string(), "box"),
                DualNode::Punctured => ("P".to_string(), "box"),
                DualNode::Interior(l) => (format!("i{l}"), "plaintext"),
                DualNode::Boundary(l) => (format!("b{l}"), "plaintext"),
            };
            let _ = writeln!(out, "  v{i} [label=\"{label}\", shape={shape}];");
        }
        for e in &self.edges {
            if e.planar {
                let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.parent, e.child, e.position);
            } else {
                let _ = writeln!(out, "  v{} -- v{} [style=dashed];", e.parent, e.child);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svg(s: &str) -> String {
        render_svg(&s.parse().unwrap())
    }

    fn count(hay: &str, needle: &str) -> usize {
        hay.matches(needle).count()
    }

    #[test]
    fn trivial_picture() {
        let s = svg("(i1|b1)");
        assert_eq!(count(&s, "class=\"disk\""), 1);
        assert_eq!(count(&s, "class=\"interior\""), 1);
        assert_eq!(count(&s, "class=\"boundary\""), 1);
        assert_eq!(count(&s, "class=\"loop\""), 0);
    }

    #[test]
    fn loop_around_two_interior_particles() {
        let s = svg("(S(i1,i2)|b1)");
        assert_eq!(count(&s, "class=\"loop\""), 1);
        assert_eq!(count(&s, "class=\"interior\""), 2);
    }

    #[test]
    fn corner_has_nested_arcs() {
        let s = svg("K(2,1):(i2|F[P(i1|),b1])");
        assert_eq!(count(&s, "class=\"arc\""), 2);
        assert_eq!(count(&s, "class=\"boundary\""), 1);
    }

    #[test]
    fn deterministic() {
        assert_eq!(svg("(i1|F[b1,b2],b3)"), svg("(i1|F[b1,b2],b3)"));
    }

    #[test]
    fn dual_tree_shape() {
        let dt = dual_tree(&"K(2,1):(i2|F[P(i1|),b1])".parse().unwrap());
        assert_eq!(dt.nodes.len(), 6);
        assert_eq!(dt.edges.len(), 5);
        assert_eq!(dt.edges.iter().filter(|e| !e.planar).count(), 2);
        assert!(dt.to_dot().starts_with("graph dual {"));
    }
}
