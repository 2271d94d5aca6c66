//! Finite ranked posets given by their Hasse diagram.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default size limit for [`poset_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 50_000;

/// Elements `0..len` with a rank and an optional label each, plus the
/// cover relation as `(lower, upper)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacePoset {
    ranks: Vec<usize>,
    labels: Vec<Option<String>>,
    covers: Vec<(usize, usize)>,
    #[serde(skip)]
    up: Vec<Vec<usize>>,
    #[serde(skip)]
    down: Vec<Vec<usize>>,
}

impl FacePoset {
    /// Covers are sorted and deduplicated. Panics if a cover names an
    /// element out of range.
    pub fn new(ranks: Vec<usize>, labels: Vec<Option<String>>, mut covers: Vec<(usize, usize)>) -> Self {
        assert_eq!(ranks.len(), labels.len(), "one label slot per element");
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); ranks.len()];
        let mut down = vec![Vec::new(); ranks.len()];
        for &(lo, hi) in &covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        FacePoset {
            ranks,
            labels,
            covers,
            up,
            down,
        }
    }

    pub fn unlabeled(ranks: Vec<usize>, covers: Vec<(usize, usize)>) -> Self {
        let labels = vec![None; ranks.len()];
        Self::new(ranks, labels, covers)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covering `i`.
    pub fn up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Elements covered by `i`.
    pub fn down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.ranks.iter().copied().max()
    }

    /// Same poset with every label dropped.
    pub fn without_labels(&self) -> Self {
        Self::unlabeled(self.ranks.clone(), self.covers.clone())
    }

    /// Hasse diagram in Graphviz DOT, bottom rank at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, r) in self.ranks.iter().enumerate() {
            let text = match &self.labels[i] {
                Some(l) => format!("r{r} {l}"),
                None => format!("r{r}"),
            };
            let _ = writeln!(out, "  e{i} [label=\"{}\"];", escape(&text));
        }
        for (lo, hi) in &self.covers {
            let _ = writeln!(out, "  e{lo} -> e{hi};");
        }
        out.push_str("}\n");
        out
    }

    /// Line-oriented text format:
    ///
    /// ```text
    /// poset 1
    /// elements <count>
    /// e <index> <rank> <label or ->
    /// covers <count>
    /// c <lower> <upper>
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("poset 1\nelements {}\n", self.len());
        for (i, r) in self.ranks.iter().enumerate() {
            let _ = writeln!(out, "e {i} {r} {}", self.labels[i].as_deref().unwrap_or("-"));
        }
        let _ = writeln!(out, "covers {}", self.covers.len());
        for (lo, hi) in &self.covers {
            let _ = writeln!(out, "c {lo} {hi}");
        }
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// True when every cover raises the rank by exactly one, i.e. the stored
/// rank is a rank function for the order.
pub fn is_graded(p: &FacePoset) -> bool {
    p.covers.iter().all(|&(lo, hi)| p.ranks[hi] == p.ranks[lo] + 1)
}

/// Graded and every maximal chain runs from the lowest rank present to the
/// highest.
pub fn is_pure(p: &FacePoset) -> bool {
    let (Some(lo), Some(hi)) = (p.ranks.iter().min(), p.ranks.iter().max()) else {
        return true;
    };
    is_graded(p)
        && (0..p.len()).all(|i| {
            (!p.down[i].is_empty() || p.ranks[i] == *lo) && (!p.up[i].is_empty() || p.ranks[i] == *hi)
        })
}

/// Element count per rank, rank 0 first.
pub fn poset_f_vector(p: &FacePoset) -> Result<Vec<usize>> {
    if !is_graded(p) {
        return Err(Error::NotGraded);
    }
    let mut f = vec![0; p.max_rank().map_or(0, |r| r + 1)];
    for &r in &p.ranks {
        f[r] += 1;
    }
    Ok(f)
}

pub fn poset_isomorphic(p: &FacePoset, q: &FacePoset) -> Result<bool> {
    poset_isomorphic_with_cap(p, q, DEFAULT_ISO_CAP)
}

/// Rank-preserving order isomorphism test. Colours are refined from
/// (rank, up-degree, down-degree) by neighbour colours until stable, then a
/// colour-respecting bijection is searched by backtracking.
pub fn poset_isomorphic_with_cap(p: &FacePoset, q: &FacePoset, cap: usize) -> Result<bool> {
    for x in [p, q] {
        if x.len() > cap {
            return Err(Error::CapExceeded {
                what: "poset elements",
                count: x.len(),
                cap,
            });
        }
        if !is_graded(x) {
            return Err(Error::NotGraded);
        }
    }
    if p.len() != q.len() || p.covers.len() != q.covers.len() {
        return Ok(false);
    }
    let (cp, cq) = refine(p, q);
    let mut hist_p = cp.clone();
    let mut hist_q = cq.clone();
    hist_p.sort_unstable();
    hist_q.sort_unstable();
    if hist_p != hist_q {
        return Ok(false);
    }
    Ok(Matcher::new(p, q, &cp, &cq).run())
}

/// Joint colour refinement so colours are comparable across both posets.
fn refine(p: &FacePoset, q: &FacePoset) -> (Vec<usize>, Vec<usize>) {
    let init = |x: &FacePoset| -> Vec<(usize, usize, usize)> {
        (0..x.len())
            .map(|i| (x.ranks[i], x.up[i].len(), x.down[i].len()))
            .collect()
    };
    let (mut cp, mut cq) = relabel(init(p), init(q));
    let mut classes = distinct(&cp, &cq);
    loop {
        let sig = |x: &FacePoset, c: &[usize]| -> Vec<(usize, Vec<usize>, Vec<usize>)> {
            (0..x.len())
                .map(|i| {
                    let mut u: Vec<usize> = x.up[i].iter().map(|&j| c[j]).collect();
                    let mut d: Vec<usize> = x.down[i].iter().map(|&j| c[j]).collect();
                    u.sort_unstable();
                    d.sort_unstable();
                    (c[i], u, d)
                })
                .collect()
        };
        let (np, nq) = relabel(sig(p, &cp), sig(q, &cq));
        let next = distinct(&np, &nq);
        cp = np;
        cq = nq;
        if next == classes {
            return (cp, cq);
        }
        classes = next;
    }
}

fn relabel<K: Ord + Clone>(a: Vec<K>, b: Vec<K>) -> (Vec<usize>, Vec<usize>) {
    let ids: BTreeMap<K, usize> = a
        .iter()
        .chain(&b)
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    (
        a.iter().map(|k| ids[k]).collect(),
        b.iter().map(|k| ids[k]).collect(),
    )
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    a.iter().chain(b).collect::<HashSet<_>>().len()
}

struct Matcher<'a> {
    p: &'a FacePoset,
    q: &'a FacePoset,
    cp: &'a [usize],
    cq: &'a [usize],
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    q_covers: HashSet<(usize, usize)>,
}

impl<'a> Matcher<'a> {
    fn new(p: &'a FacePoset, q: &'a FacePoset, cp: &'a [usize], cq: &'a [usize]) -> Self {
        Matcher {
            p,
            q,
            cp,
            cq,
            order: search_order(p, cp),
            map: vec![None; p.len()],
            used: vec![false; q.len()],
            q_covers: q.covers.iter().copied().collect(),
        }
    }

    fn run(&mut self) -> bool {
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        for y in 0..self.q.len() {
            if self.used[y] || self.cq[y] != self.cp[x] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[x] = None;
            self.used[y] = false;
        }
        false
    }

    /// Covers between `x` and already mapped elements must be matched by
    /// covers between `y` and their images, and vice versa. Since colours
    /// fix degrees, checking `x`'s side suffices once everything is mapped;
    /// checking both sides here prunes earlier.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let mut mapped_up = 0;
        for &z in self.p.up(x) {
            if let Some(w) = self.map[z] {
                if !self.q_covers.contains(&(y, w)) {
                    return false;
                }
                mapped_up += 1;
            }
        }
        let mut mapped_down = 0;
        for &z in self.p.down(x) {
            if let Some(w) = self.map[z] {
                if !self.q_covers.contains(&(w, y)) {
                    return false;
                }
                mapped_down += 1;
            }
        }
        let used_up = self.q.up(y).iter().filter(|&&w| self.used[w]).count();
        let used_down = self.q.down(y).iter().filter(|&&w| self.used[w]).count();
        used_up == mapped_up && used_down == mapped_down
    }
}

/// Breadth-first over the Hasse graph, each component started from its
/// rarest colour, so every element after the first in a component has an
/// already-mapped neighbour.
fn search_order(p: &FacePoset, colours: &[usize]) -> Vec<usize> {
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colours {
        *freq.entry(c).or_default() += 1;
    }
    let mut starts: Vec<usize> = (0..p.len()).collect();
    starts.sort_by_key(|&i| (freq[&colours[i]], i));
    let mut seen = vec![false; p.len()];
    let mut order = Vec::with_capacity(p.len());
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in p.up(x).iter().chain(p.down(x)) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}
