//! Associahedra from bracketings, and cyclohedra as tiles of `K(1, n)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::closure::{chamber_closure_poset, ChamberClosure};
use crate::error::{Error, Result};
use crate::ops::Stratum;
use crate::poset::FacePoset;
use crate::tree::BubbleTree;

/// A set of brackets on a word of `n` letters. Each bracket `(i, j)` is an
/// inclusive interval with `2 <= j - i + 1 <= n - 1`; any two are nested or
/// disjoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bracketing {
    n: usize,
    brackets: Vec<(usize, usize)>,
}

fn compatible(a: (usize, usize), b: (usize, usize)) -> bool {
    let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
    let disjoint = a.1 < b.0 || b.1 < a.0;
    nested || disjoint
}

impl Bracketing {
    pub fn new(n: usize, mut brackets: Vec<(usize, usize)>) -> Result<Self> {
        brackets.sort_unstable();
        for w in brackets.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Parse(format!("duplicate bracket {:?}", w[0])));
            }
        }
        for &(i, j) in &brackets {
            let len = (j + 1).saturating_sub(i);
            if i < 1 || j > n || len < 2 || len > n.saturating_sub(1) {
                return Err(Error::Parse(format!("bracket ({i},{j}) out of range for {n} letters")));
            }
        }
        for (k, &a) in brackets.iter().enumerate() {
            if let Some(&b) = brackets[k + 1..].iter().find(|&&b| !compatible(a, b)) {
                return Err(Error::Parse(format!("brackets {a:?} and {b:?} cross")));
            }
        }
        Ok(Bracketing { n, brackets })
    }

    pub fn letters(&self) -> usize {
        self.n
    }

    pub fn brackets(&self) -> &[(usize, usize)] {
        &self.brackets
    }

    /// Face dimension: `(n - 2) - #brackets`.
    pub fn rank(&self) -> usize {
        self.n - 2 - self.brackets.len()
    }
}

impl fmt::Display for Bracketing {
    /// Letters `a, b, c, ...` with parentheses, e.g. `(ab)c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 1..=self.n {
            for _ in self.brackets.iter().filter(|b| b.0 == pos) {
                f.write_str("(")?;
            }
            let c = char::from_u32('a' as u32 + (pos as u32 - 1) % 26).unwrap_or('?');
            write!(f, "{c}")?;
            for _ in self.brackets.iter().filter(|b| b.1 == pos) {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

/// Every bracketing of `n` letters, sorted.
pub fn bracketings(n: usize) -> Result<Vec<Bracketing>> {
    if n < 2 {
        return Err(Error::TooSmall(format!("associahedron needs n >= 2 letters, got {n}")));
    }
    let mut all = Vec::new();
    for len in 2..n {
        for i in 1..=n + 1 - len {
            all.push((i, i + len - 1));
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&all, 0, &mut chosen, &mut |bs| {
        out.push(Bracketing {
            n,
            brackets: {
                let mut v = bs.to_vec();
                v.sort_unstable();
                v
            },
        })
    });
    out.sort();
    Ok(out)
}

fn grow(
    all: &[(usize, usize)],
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    emit(chosen);
    for k in from..all.len() {
        if chosen.iter().all(|&c| compatible(c, all[k])) {
            chosen.push(all[k]);
            grow(all, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Face poset of the associahedron `K_n`: bracketings, with removal of one
/// bracket going up one rank.
pub fn associahedron_poset(n: usize) -> Result<FacePoset> {
    let faces = bracketings(n)?;
    let index: HashMap<&Bracketing, usize> = faces.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut covers = Vec::new();
    for (lo, face) in faces.iter().enumerate() {
        for k in 0..face.brackets.len() {
            let mut up = face.brackets.clone();
            up.remove(k);
            let up = Bracketing { n, brackets: up };
            covers.push((lo, index[&up]));
        }
    }
    let ranks = faces.iter().map(Bracketing::rank).collect();
    let labels = faces.iter().map(|b| Some(b.to_string())).collect();
    Ok(FacePoset::new(ranks, labels, covers))
}

/// `C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> u128 {
    // C(j+1) = C(j) * 2(2j+1) / (j+2), exact at every step
    (0..k as u128).fold(1u128, |c, j| c * 2 * (2 * j + 1) / (j + 2))
}

/// The tile of `K(1, n)` at the chamber with boundary order `1, 2, ..., n`.
pub fn cyclohedron_poset(n: u32) -> Result<ChamberClosure> {
    if n < 2 {
        return Err(Error::TooSmall(format!("cyclohedron needs n >= 2, got {n}")));
    }
    let chamber = Stratum::from_tree(&BubbleTree::trivial(1, n))?;
    chamber_closure_poset(1, n, &chamber)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::poset_f_vector;

    #[test]
    fn pentagon() {
        let p = associahedron_poset(4).unwrap();
        assert_eq!(poset_f_vector(&p).unwrap(), vec![5, 5, 1]);
    }

    #[test]
    fn segment() {
        let p = associahedron_poset(3).unwrap();
        assert_eq!(poset_f_vector(&p).unwrap(), vec![2, 1]);
        let labels: Vec<_> = (0..p.len()).filter_map(|i| p.label(i)).collect();
        assert!(labels.contains(&"(ab)c"));
        assert!(labels.contains(&"a(bc)"));
    }

    #[test]
    fn two_letters_is_a_point() {
        assert_eq!(poset_f_vector(&associahedron_poset(2).unwrap()).unwrap(), vec![1]);
        assert_eq!(associahedron_poset(1).unwrap_err().code(), "TooSmall");
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), 1);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(5), 42);
        assert_eq!(catalan(10), 16796);
    }

    #[test]
    fn bracketing_validation() {
        assert!(Bracketing::new(4, vec![(1, 2), (3, 4)]).is_ok());
        assert!(Bracketing::new(4, vec![(1, 3), (1, 2)]).is_ok());
        assert!(Bracketing::new(4, vec![(1, 2), (2, 3)]).is_err());
        assert!(Bracketing::new(4, vec![(1, 4)]).is_err());
        assert!(Bracketing::new(4, vec![(2, 2)]).is_err());
        assert!(Bracketing::new(4, vec![(1, 2), (1, 2)]).is_err());
    }

    #[test]
    fn hexagonal_cyclohedron() {
        let c = cyclohedron_poset(3).unwrap();
        assert_eq!(poset_f_vector(&c.poset).unwrap(), vec![6, 6, 1]);
        assert_eq!(cyclohedron_poset(1).unwrap_err().code(), "TooSmall");
    }
}
