use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::tree::{BoundaryItem, BubbleTree, Disk, InteriorItem};

/// A factor of a stratum's product decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum ModuliFactor {
    /// Punctured disk with `n` interior and `m` boundary particles.
    Kbar { n: u32, m: u32 },
    /// Real points of the moduli space of `k` marked points on a line.
    Mreal { k: u32 },
    /// Sphere bubble with `k` special points.
    Ncomplex { k: u32 },
}

impl ModuliFactor {
    pub fn is_valid(&self) -> bool {
        match *self {
            ModuliFactor::Kbar { n, m } => 2 * n + m >= 3,
            ModuliFactor::Mreal { k } | ModuliFactor::Ncomplex { k } => k >= 3,
        }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            ModuliFactor::Kbar { n, m } => (2 * n + m) as usize - 3,
            ModuliFactor::Mreal { k } => k as usize - 3,
            ModuliFactor::Ncomplex { k } => 2 * k as usize - 5,
        }
    }

    /// Number of top-dimensional tiles: `(m-1)!` for a punctured disk,
    /// `(k-1)!/2` for the real line, one for a sphere. `None` for a disk
    /// without boundary particles, which has no chamber structure.
    pub fn chamber_count(&self) -> Option<u64> {
        match *self {
            ModuliFactor::Kbar { m, .. } if m >= 1 => Some(factorial(m as u64 - 1)),
            ModuliFactor::Kbar { .. } => None,
            ModuliFactor::Mreal { k } => Some(factorial(k as u64 - 1) / 2),
            ModuliFactor::Ncomplex { .. } => Some(1),
        }
    }
}

impl fmt::Display for ModuliFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuliFactor::Kbar { n, m } => write!(f, "Kbar({n},{m})"),
            ModuliFactor::Mreal { k } => write!(f, "Mreal({k})"),
            ModuliFactor::Ncomplex { k } => write!(f, "Ncomplex({k})"),
        }
    }
}

pub(crate) fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Product decomposition, one factor per bubble plus the root, sorted.
pub fn factors(tree: &BubbleTree) -> Result<Vec<ModuliFactor>> {
    tree.validate()?;
    Ok(factors_unchecked(tree))
}

pub(crate) fn factors_unchecked(tree: &BubbleTree) -> Vec<ModuliFactor> {
    let mut out = Vec::new();
    let root = tree.root();
    out.push(ModuliFactor::Kbar {
        n: root.interior.len() as u32,
        m: root.boundary.len() as u32,
    });
    collect_disk(root, &mut out);
    out.sort();
    out
}

fn collect_interior(items: &[InteriorItem], out: &mut Vec<ModuliFactor>) {
    for it in items {
        if let InteriorItem::Sphere(ch) = it {
            out.push(ModuliFactor::Ncomplex {
                k: ch.len() as u32 + 1,
            });
            collect_interior(ch, out);
        }
    }
}

fn collect_disk(d: &Disk, out: &mut Vec<ModuliFactor>) {
    collect_interior(&d.interior, out);
    for it in &d.boundary {
        if let BoundaryItem::Disk(sub) = it {
            let b = sub.boundary.len() as u32;
            out.push(if sub.is_flat() {
                ModuliFactor::Mreal { k: b + 1 }
            } else {
                ModuliFactor::Kbar {
                    n: sub.interior.len() as u32,
                    m: b + 1,
                }
            });
            collect_disk(sub, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Vec<ModuliFactor> {
        factors(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn interior_collision_factors() {
        assert_eq!(
            f("(S(i1,i2)|b1)"),
            vec![ModuliFactor::Kbar { n: 1, m: 1 }, ModuliFactor::Ncomplex { k: 3 }]
        );
    }

    #[test]
    fn boundary_collision_factors() {
        assert_eq!(
            f("(i1|F[b1,b2,b3])"),
            vec![ModuliFactor::Kbar { n: 1, m: 1 }, ModuliFactor::Mreal { k: 4 }]
        );
    }

    #[test]
    fn trivial_tree_has_one_factor() {
        assert_eq!(f("(i1,i2|b1,b2)"), vec![ModuliFactor::Kbar { n: 2, m: 2 }]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(ModuliFactor::Ncomplex { k: 3 }.dimension(), 1);
        assert_eq!(ModuliFactor::Mreal { k: 3 }.dimension(), 0);
        assert_eq!(ModuliFactor::Kbar { n: 1, m: 1 }.dimension(), 0);
        assert_eq!(ModuliFactor::Kbar { n: 2, m: 2 }.dimension(), 3);
    }

    #[test]
    fn corner_dimensions_telescope() {
        let tree: BubbleTree = "(i2|F[P(i1|),b1])".parse().unwrap();
        let total: usize = f("(i2|F[P(i1|),b1])").iter().map(|x| x.dimension()).sum();
        assert_eq!(total, tree.codim_dim().unwrap().1);
    }
}
