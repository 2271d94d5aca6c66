//! Exhaustive enumeration of strata.
//!
//! Raw trees are generated recursively by splitting label sets (bitmasks)
//! into sphere and disk bubbles with an exact bubble budget, then
//! canonicalized and deduplicated. Two redundancies are removed during
//! generation: the root sequence starts with the item holding the smallest
//! label, and (optionally) flat bubbles are emitted in one orientation
//! only.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use rayon::prelude::*;

use crate::canonical::normalize;
use crate::error::{check_space, Error, Result};
use crate::factor::factorial;
use crate::ops::Stratum;
use crate::tree::{BoundaryItem, BubbleTree, Disk, InteriorItem, Label};

pub const DEFAULT_MAX_RAW_TREES: usize = 2_000_000;

/// Intermediate (memoized) items allowed per raw tree of the cap.
const INTERMEDIATE_FACTOR: usize = 4;
const MIN_INTERMEDIATE: usize = 100_000;

#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Refuse once this many raw trees have been generated for one query.
    pub max_raw_trees: usize,
    /// Canonicalize raw trees on the rayon pool. Output order is unaffected.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_raw_trees: DEFAULT_MAX_RAW_TREES,
            parallel: false,
        }
    }
}

type Forest = Vec<InteriorItem>;
type Sequence = Vec<BoundaryItem>;

struct Generator {
    mu: u32,
    one_flat_orientation: bool,
    items: HashMap<(u32, usize), Rc<Vec<InteriorItem>>>,
    forests: HashMap<(u32, usize, usize), Rc<Vec<Forest>>>,
    blocks: HashMap<(u32, u32, usize), Rc<Vec<BoundaryItem>>>,
    seqs: HashMap<(u32, u32, usize), Rc<Vec<Sequence>>>,
    /// Intermediate items produced so far, and the most allowed.
    produced: usize,
    budget: usize,
}

fn label_of(bit: u32) -> Label {
    bit.trailing_zeros() + 1
}

fn lowest(mask: u32) -> u32 {
    mask & mask.wrapping_neg()
}

/// All submasks of `mask`, including 0 and `mask` itself.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & mask);
        Some(cur)
    })
}

/// Ordering key of an item: its smallest boundary label, else its smallest
/// interior label (boundary labels sort first).
fn item_key(item: &BoundaryItem) -> (u8, Label) {
    fn min_interior(items: &[InteriorItem]) -> Option<Label> {
        items
            .iter()
            .filter_map(|it| match it {
                InteriorItem::Particle(l) => Some(*l),
                InteriorItem::Sphere(ch) => min_interior(ch),
            })
            .min()
    }
    fn walk(item: &BoundaryItem, best_b: &mut Option<Label>, best_i: &mut Option<Label>) {
        match item {
            BoundaryItem::Particle(l) => *best_b = Some(best_b.map_or(*l, |b| b.min(*l))),
            BoundaryItem::Disk(d) => {
                if let Some(i) = min_interior(&d.interior) {
                    *best_i = Some(best_i.map_or(i, |b| b.min(i)));
                }
                d.boundary.iter().for_each(|c| walk(c, best_b, best_i));
            }
        }
    }
    let (mut b, mut i) = (None, None);
    walk(item, &mut b, &mut i);
    match (b, i) {
        (Some(b), _) => (0, b),
        (None, Some(i)) => (1, i),
        (None, None) => (2, 0),
    }
}

impl Generator {
    fn new(n: u32, one_flat_orientation: bool, cap: usize) -> Self {
        Generator {
            mu: if n >= 1 { 1 << (n - 1) } else { 0 },
            one_flat_orientation,
            items: HashMap::new(),
            forests: HashMap::new(),
            blocks: HashMap::new(),
            seqs: HashMap::new(),
            produced: 0,
            budget: cap.saturating_mul(INTERMEDIATE_FACTOR).max(MIN_INTERMEDIATE),
        }
    }

    /// Counts one intermediate item; false once the budget is spent, after
    /// which every list comes back truncated and `roots` reports the cap.
    fn tick(&mut self) -> bool {
        self.produced += 1;
        self.produced <= self.budget
    }

    fn over_budget(&self) -> bool {
        self.produced > self.budget
    }

    /// Interior items covering exactly `mask` with `k` bubbles.
    fn interior_items(&mut self, mask: u32, k: usize) -> Rc<Vec<InteriorItem>> {
        if let Some(hit) = self.items.get(&(mask, k)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if mask.count_ones() == 1 {
            if k == 0 {
                out.push(InteriorItem::Particle(label_of(mask)));
            }
        } else if k >= 1 {
            for f in self.forests(mask, k - 1, 2).iter() {
                out.push(InteriorItem::Sphere(f.clone()));
            }
        }
        let out = Rc::new(out);
        self.items.insert((mask, k), out.clone());
        out
    }

    /// Unordered forests over `mask` with `k` bubbles and at least
    /// `min_items` top-level items. Each set partition is produced once.
    fn forests(&mut self, mask: u32, k: usize, min_items: usize) -> Rc<Vec<Forest>> {
        if let Some(hit) = self.forests.get(&(mask, k, min_items)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if mask == 0 {
            if k == 0 && min_items == 0 {
                out.push(Vec::new());
            }
        } else {
            let low = lowest(mask);
            let rest = mask ^ low;
            for sub in submasks(rest) {
                let block = low | sub;
                let remaining = rest ^ sub;
                for kb in 0..=k {
                    let heads = self.interior_items(block, kb);
                    if heads.is_empty() {
                        continue;
                    }
                    let tails = self.forests(remaining, k - kb, min_items.saturating_sub(1));
                    for head in heads.iter() {
                        for tail in tails.iter() {
                            let mut f = Vec::with_capacity(tail.len() + 1);
                            f.push(head.clone());
                            f.extend(tail.iter().cloned());
                            out.push(f);
                            if !self.tick() {
                                break;
                            }
                        }
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.forests.insert((mask, k, min_items), out.clone());
        out
    }

    /// Single boundary items holding exactly the labels (`imask`, `bmask`).
    fn blocks(&mut self, imask: u32, bmask: u32, k: usize) -> Rc<Vec<BoundaryItem>> {
        if let Some(hit) = self.blocks.get(&(imask, bmask, k)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if imask & self.mu != 0 {
            // the anchor never enters a disk bubble
        } else if imask == 0 && bmask.count_ones() == 1 {
            if k == 0 {
                out.push(BoundaryItem::Particle(label_of(bmask)));
            }
        } else if k >= 1 {
            for direct in submasks(imask) {
                let nested = imask ^ direct;
                for kd in 0..k {
                    let forests = self.forests(direct, kd, 0);
                    if forests.is_empty() {
                        continue;
                    }
                    let seqs = self.sequences(nested, bmask, k - 1 - kd);
                    for f in forests.iter() {
                        for s in seqs.iter() {
                            if 2 * f.len() + s.len() < 2 {
                                continue;
                            }
                            if self.one_flat_orientation
                                && f.is_empty()
                                && item_key(&s[0]) > item_key(&s[s.len() - 1])
                            {
                                continue;
                            }
                            out.push(BoundaryItem::Disk(Disk::new(f.clone(), s.clone())));
                            if !self.tick() {
                                break;
                            }
                        }
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.blocks.insert((imask, bmask, k), out.clone());
        out
    }

    /// Ordered sequences of boundary items partitioning (`imask`, `bmask`).
    fn sequences(&mut self, imask: u32, bmask: u32, k: usize) -> Rc<Vec<Sequence>> {
        if let Some(hit) = self.seqs.get(&(imask, bmask, k)) {
            return hit.clone();
        }
        let out = Rc::new(self.sequences_from(imask, bmask, k, None));
        self.seqs.insert((imask, bmask, k), out.clone());
        out
    }

    /// As [`Self::sequences`], optionally forcing the first item to contain
    /// the label bit `pivot` (given as `(is_boundary, bit)`).
    fn sequences_from(
        &mut self,
        imask: u32,
        bmask: u32,
        k: usize,
        pivot: Option<(bool, u32)>,
    ) -> Vec<Sequence> {
        let mut out = Vec::new();
        if imask == 0 && bmask == 0 {
            if k == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        for bsub in submasks(bmask) {
            for isub in submasks(imask) {
                if bsub == 0 && isub == 0 {
                    continue;
                }
                match pivot {
                    Some((true, bit)) if bsub & bit == 0 => continue,
                    Some((false, bit)) if isub & bit == 0 => continue,
                    _ => {}
                }
                for kb in 0..=k {
                    let heads = self.blocks(isub, bsub, kb);
                    if heads.is_empty() {
                        continue;
                    }
                    let tails = self.sequences(imask ^ isub, bmask ^ bsub, k - kb);
                    for head in heads.iter() {
                        for tail in tails.iter() {
                            let mut s = Vec::with_capacity(tail.len() + 1);
                            s.push(head.clone());
                            s.extend(tail.iter().cloned());
                            out.push(s);
                            if !self.tick() {
                                break;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Root contents for a tree over all labels with exactly `k` bubbles.
    fn roots(&mut self, n: u32, m: u32, k: usize, cap: usize) -> Result<Vec<Disk>> {
        let all_i = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let all_b = if m == 0 { 0 } else { (1u32 << m) - 1 };
        let mut out = Vec::new();
        for direct in submasks(all_i) {
            if direct & self.mu != self.mu {
                continue;
            }
            let nested = all_i ^ direct;
            let pivot = if all_b != 0 {
                Some((true, lowest(all_b)))
            } else if nested != 0 {
                Some((false, lowest(nested)))
            } else {
                None
            };
            for kd in 0..=k {
                let forests = self.forests(direct, kd, 0);
                if forests.is_empty() {
                    continue;
                }
                let seqs = self.sequences_from(nested, all_b, k - kd, pivot);
                if self.over_budget() {
                    return Err(Error::CapExceeded {
                        what: "intermediate trees",
                        count: self.produced,
                        cap: self.budget,
                    });
                }
                for f in forests.iter() {
                    for s in &seqs {
                        if 2 * f.len() + s.len() < 3 {
                            continue;
                        }
                        out.push(Disk::new(f.clone(), s.clone()));
                        if out.len() > cap {
                            return Err(Error::CapExceeded {
                                what: "raw trees",
                                count: out.len(),
                                cap,
                            });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn check_codim(n: u32, m: u32, k: usize) -> Result<()> {
    check_space(n, m)?;
    let max = (2 * n + m) as usize - 3;
    if k > max {
        return Err(Error::CodimOutOfRange { k, max });
    }
    Ok(())
}

fn check_labels(n: u32, m: u32) -> Result<()> {
    if n > 31 || m > 31 {
        return Err(Error::CapExceeded {
            what: "particles of one kind",
            count: n.max(m) as usize,
            cap: 31,
        });
    }
    Ok(())
}

/// Raw generated trees of codimension `k`. Every valid tree is a rotation
/// (and, when `one_flat_orientation`, a flip) of exactly one of these.
pub fn raw_trees(
    n: u32,
    m: u32,
    k: usize,
    one_flat_orientation: bool,
    cfg: &EnumConfig,
) -> Result<Vec<BubbleTree>> {
    check_codim(n, m, k)?;
    check_labels(n, m)?;
    let mut gen = Generator::new(n, one_flat_orientation, cfg.max_raw_trees);
    Ok(gen
        .roots(n, m, k, cfg.max_raw_trees)?
        .into_iter()
        .map(|root| BubbleTree::from_parts(n, m, root))
        .collect())
}

/// Canonicalizes and deduplicates raw trees into sorted strata.
fn dedupe(trees: Vec<BubbleTree>, parallel: bool, flips: bool) -> Vec<BubbleTree> {
    let set: BTreeSet<BubbleTree> = if parallel {
        trees
            .into_par_iter()
            .map(|t| normalize(t, flips))
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    } else {
        trees.into_iter().map(|t| normalize(t, flips)).collect()
    };
    set.into_iter().collect()
}

pub fn enumerate_strata_with(n: u32, m: u32, k: usize, cfg: &EnumConfig) -> Result<Vec<Stratum>> {
    let raw = raw_trees(n, m, k, true, cfg)?;
    Ok(dedupe(raw, cfg.parallel, true)
        .into_iter()
        .map(Stratum::from_canonical)
        .collect())
}

/// All distinct strata of codimension exactly `k`, sorted by canonical form.
pub fn enumerate_strata(n: u32, m: u32, k: usize) -> Result<Vec<Stratum>> {
    enumerate_strata_with(n, m, k, &EnumConfig::default())
}

/// Distinct oriented faces (trees up to rotation and, for `n = 0`,
/// re-rooting, but not flips) of codimension `k`.
pub fn enumerate_oriented(n: u32, m: u32, k: usize, cfg: &EnumConfig) -> Result<Vec<BubbleTree>> {
    let raw = raw_trees(n, m, k, false, cfg)?;
    Ok(dedupe(raw, cfg.parallel, false))
}

/// Every stratum, grouped by codimension.
#[derive(Clone, Debug)]
pub struct Strata {
    pub n: u32,
    pub m: u32,
    pub by_codim: Vec<Vec<Stratum>>,
}

impl Strata {
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_codim.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Stratum> {
        self.by_codim.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_codim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn enumerate_all_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<Strata> {
    check_space(n, m)?;
    check_labels(n, m)?;
    let top = (2 * n + m) as usize - 3;
    let mut gen = Generator::new(n, true, cfg.max_raw_trees);
    let mut by_codim = Vec::with_capacity(top + 1);
    let mut total = 0usize;
    for k in 0..=top {
        let roots = gen
            .roots(n, m, k, cfg.max_raw_trees.saturating_sub(total))
            .map_err(|e| match e {
                Error::CapExceeded { what: "raw trees", count, .. } => Error::CapExceeded {
                    what: "raw trees",
                    count: total + count,
                    cap: cfg.max_raw_trees,
                },
                other => other,
            })?;
        total += roots.len();
        let raw = roots
            .into_iter()
            .map(|root| BubbleTree::from_parts(n, m, root))
            .collect();
        by_codim.push(
            dedupe(raw, cfg.parallel, true)
                .into_iter()
                .map(Stratum::from_canonical)
                .collect(),
        );
    }
    Ok(Strata { n, m, by_codim })
}

pub fn enumerate_all(n: u32, m: u32) -> Result<Strata> {
    enumerate_all_with(n, m, &EnumConfig::default())
}

/// Number of strata per codimension, `0..=2n+m-3`.
pub fn f_vector(n: u32, m: u32) -> Result<Vec<usize>> {
    Ok(enumerate_all(n, m)?.f_vector())
}

/// Enumerated chamber count next to the closed form `(m-1)!`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberCount {
    pub enumerated: u64,
    pub formula: u64,
}

impl ChamberCount {
    pub fn matches(&self) -> bool {
        self.enumerated == self.formula
    }
}

pub fn chambers(n: u32, m: u32) -> Result<ChamberCount> {
    chambers_with(n, m, &EnumConfig::default())
}

pub fn chambers_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<ChamberCount> {
    check_space(n, m)?;
    if m == 0 {
        return Err(Error::UnsupportedM0);
    }
    let enumerated = enumerate_strata_with(n, m, 0, cfg)?.len() as u64;
    Ok(ChamberCount {
        enumerated,
        formula: factorial(m as u64 - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_cover_all() {
        let subs: Vec<u32> = submasks(0b101).collect();
        assert_eq!(subs, vec![0b101, 0b100, 0b001, 0]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn point_space() {
        let s = enumerate_strata(1, 1, 0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].encoding(), "K(1,1):(i1|b1)");
    }

    #[test]
    fn hexagon_edges() {
        let s = enumerate_strata(1, 3, 1).unwrap();
        let names: Vec<_> = s.iter().map(|x| x.encoding()).collect();
        assert_eq!(s.len(), 6, "{names:?}");
        let pairs = s.iter().filter(|x| x.canonical().root().boundary.len() == 2).count();
        assert_eq!(pairs, 3);
    }

    #[test]
    fn eye_corner() {
        let s = enumerate_strata(2, 1, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].encoding(), "K(2,1):(i2|F[b1,P(i1|)])");
    }

    #[test]
    fn small_f_vectors() {
        assert_eq!(f_vector(1, 3).unwrap(), vec![2, 6, 3]);
        assert_eq!(f_vector(2, 1).unwrap(), vec![1, 3, 1]);
        assert_eq!(f_vector(1, 1).unwrap(), vec![1]);
        assert_eq!(f_vector(1, 2).unwrap(), vec![1, 1]);
    }

    #[test]
    fn chamber_counts() {
        assert_eq!(chambers(1, 4).unwrap().enumerated, 6);
        assert_eq!(chambers(2, 2).unwrap().enumerated, 1);
        assert_eq!(chambers(0, 5).unwrap().enumerated, 24);
        assert!(chambers(0, 5).unwrap().matches());
        assert_eq!(chambers(3, 0).unwrap_err().code(), "UnsupportedM0");
    }

    #[test]
    fn range_errors() {
        assert_eq!(enumerate_strata(1, 3, 3).unwrap_err().code(), "CodimOutOfRange");
        assert_eq!(enumerate_strata(0, 2, 0).unwrap_err().code(), "DegenerateSpace");
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = EnumConfig {
            max_raw_trees: 3,
            parallel: false,
        };
        let err = enumerate_strata_with(1, 5, 0, &cfg).unwrap_err();
        assert_eq!(err.code(), "CapExceeded");
    }

    #[test]
    fn parallel_matches_serial() {
        let par = EnumConfig {
            parallel: true,
            ..EnumConfig::default()
        };
        for k in 0..=3 {
            assert_eq!(
                enumerate_strata_with(2, 2, k, &par).unwrap(),
                enumerate_strata(2, 2, k).unwrap()
            );
        }
    }
}
