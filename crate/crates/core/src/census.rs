//! Codimension-one census: divisor classes, their closed-form counts, and
//! the building set of single-arc collisions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::{enumerate_strata_with, EnumConfig};
use crate::error::{check_space, Result};
use crate::factor::ModuliFactor;
use crate::ops::Stratum;
use crate::tree::{BoundaryItem, Disk, InteriorItem, Label};

/// Which particles collide along the single arc of a codim-1 stratum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Collision {
    Interior { interior: Vec<Label> },
    Boundary { boundary: Vec<Label> },
    Mixed { interior: Vec<Label>, boundary: Vec<Label> },
}

impl Collision {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Collision::Interior { .. } => "interior",
            Collision::Boundary { .. } => "boundary",
            Collision::Mixed { .. } => "mixed",
        }
    }

    /// `(i, b)`: interior and boundary particle counts of the collision.
    pub fn sizes(&self) -> (usize, usize) {
        match self {
            Collision::Interior { interior } => (interior.len(), 0),
            Collision::Boundary { boundary } => (0, boundary.len()),
            Collision::Mixed { interior, boundary } => (interior.len(), boundary.len()),
        }
    }

    /// `2i + b`.
    pub fn grading(&self) -> usize {
        let (i, b) = self.sizes();
        2 * i + b
    }

    /// Codimension of the collision locus before any blowup.
    pub fn naive_codim(&self) -> usize {
        let (i, b) = self.sizes();
        match self {
            Collision::Interior { .. } => 2 * (i - 1),
            Collision::Boundary { .. } => b - 1,
            Collision::Mixed { .. } => 2 * i + b - 1,
        }
    }

    /// The two factors of the divisor for a space `K(n, m)`.
    pub fn expected_factors(&self, n: u32, m: u32) -> (ModuliFactor, ModuliFactor) {
        let (i, b) = self.sizes();
        let (i, b) = (i as u32, b as u32);
        match self {
            Collision::Interior { .. } => (
                ModuliFactor::Kbar { n: n - i + 1, m },
                ModuliFactor::Ncomplex { k: i + 1 },
            ),
            Collision::Boundary { .. } => (
                ModuliFactor::Kbar { n, m: m - b + 1 },
                ModuliFactor::Mreal { k: b + 1 },
            ),
            Collision::Mixed { .. } => (
                ModuliFactor::Kbar {
                    n: n - i,
                    m: m - b + 1,
                },
                ModuliFactor::Kbar { n: i, m: b + 1 },
            ),
        }
    }
}

/// One divisor: a collision together with the strata that realise it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub collision: Collision,
    pub factors: (ModuliFactor, ModuliFactor),
    /// Codim-1 strata with this content (one per chamber pairing).
    pub strata: usize,
}

impl DivisorClass {
    /// Product of the chamber counts of both factors: the number of
    /// codim-1 strata this divisor contributes.
    pub fn chamber_product(&self) -> u64 {
        let c = |f: &ModuliFactor| f.chamber_count().unwrap_or(1);
        c(&self.factors.0) * c(&self.factors.1)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub interior: u64,
    pub boundary: u64,
    pub mixed: u64,
}

impl KindCounts {
    pub fn total(&self) -> u64 {
        self.interior + self.boundary + self.mixed
    }
}

/// Per-(kind, i, b) count next to its binomial prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub kind: &'static str,
    pub i: usize,
    pub b: usize,
    pub enumerated: u64,
    pub expected: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorCensus {
    pub n: u32,
    pub m: u32,
    pub classes: Vec<DivisorClass>,
    pub enumerated: KindCounts,
    /// `None` when `n = 0` or `m = 0`, where the closed forms are not
    /// claimed.
    pub closed_form: Option<KindCounts>,
    pub hypothesis_violated: bool,
    pub by_size: Vec<SizeCount>,
    pub codim_one_strata: usize,
}

impl DivisorCensus {
    pub fn closed_form_matches(&self) -> Option<bool> {
        self.closed_form.map(|cf| cf == self.enumerated)
    }

    pub fn refinement_matches(&self) -> Option<bool> {
        self.closed_form
            .map(|_| self.by_size.iter().all(|s| s.expected == Some(s.enumerated)))
    }

    /// Sum of chamber products over all classes.
    pub fn refinement_sum(&self) -> u64 {
        self.classes.iter().map(DivisorClass::chamber_product).sum()
    }

    /// True when every class's factors, read off its strata, agree with
    /// the formula for its collision type.
    pub fn factors_consistent(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.factors == c.collision.expected_factors(self.n, self.m))
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

pub fn closed_form_counts(n: u32, m: u32) -> KindCounts {
    let (n, m) = (n as u64, m as u64);
    KindCounts {
        interior: (1u64 << n) - n - 1,
        boundary: (1u64 << m) - m - 1,
        mixed: if n == 0 {
            0
        } else {
            (1u64 << m) * ((1u64 << (n - 1)) - 1)
        },
    }
}

fn interior_labels(items: &[InteriorItem], out: &mut Vec<Label>) {
    for it in items {
        match it {
            InteriorItem::Particle(l) => out.push(*l),
            InteriorItem::Sphere(ch) => interior_labels(ch, out),
        }
    }
}

fn disk_labels(d: &Disk) -> (Vec<Label>, Vec<Label>) {
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    collect_disk(d, &mut interior, &mut boundary);
    interior.sort_unstable();
    boundary.sort_unstable();
    (interior, boundary)
}

fn collect_disk(d: &Disk, interior: &mut Vec<Label>, boundary: &mut Vec<Label>) {
    interior_labels(&d.interior, interior);
    for it in &d.boundary {
        match it {
            BoundaryItem::Particle(l) => boundary.push(*l),
            BoundaryItem::Disk(sub) => collect_disk(sub, interior, boundary),
        }
    }
}

/// Collision content and factors of a codim-1 stratum: its single bubble
/// sits directly under the root.
fn classify(s: &Stratum) -> (Collision, (ModuliFactor, ModuliFactor)) {
    let root = s.canonical().root();
    let collision = root
        .interior
        .iter()
        .find_map(|it| match it {
            InteriorItem::Sphere(ch) => {
                let mut interior = Vec::new();
                interior_labels(ch, &mut interior);
                interior.sort_unstable();
                Some(Collision::Interior { interior })
            }
            InteriorItem::Particle(_) => None,
        })
        .or_else(|| {
            root.boundary.iter().find_map(|it| match it {
                BoundaryItem::Disk(d) => {
                    let (interior, boundary) = disk_labels(d);
                    Some(if d.is_flat() {
                        Collision::Boundary { boundary }
                    } else {
                        Collision::Mixed { interior, boundary }
                    })
                }
                BoundaryItem::Particle(_) => None,
            })
        })
        .expect("codim-1 stratum has one bubble");
    let fs = s.factors();
    let root_factor = ModuliFactor::Kbar {
        n: root.interior.len() as u32,
        m: root.boundary.len() as u32,
    };
    // two factors; the root's is the one matching the root's shape
    let other = if fs[0] == root_factor { fs[1] } else { fs[0] };
    (collision, (root_factor, other))
}

/// Enumerates codim-1 strata and groups them by collision content.
pub fn divisor_census(n: u32, m: u32) -> Result<DivisorCensus> {
    divisor_census_with(n, m, &EnumConfig::default())
}

pub fn divisor_census_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<DivisorCensus> {
    check_space(n, m)?;
    let strata = if 2 * n + m > 3 {
        enumerate_strata_with(n, m, 1, cfg)?
    } else {
        Vec::new()
    };
    let mut groups: BTreeMap<Collision, ((ModuliFactor, ModuliFactor), usize)> = BTreeMap::new();
    for s in &strata {
        let (c, f) = classify(s);
        groups.entry(c).or_insert((f, 0)).1 += 1;
    }
    let classes: Vec<DivisorClass> = groups
        .into_iter()
        .map(|(collision, (factors, strata))| DivisorClass {
            collision,
            factors,
            strata,
        })
        .collect();

    let mut enumerated = KindCounts::default();
    let mut sizes: BTreeMap<(&'static str, usize, usize), u64> = BTreeMap::new();
    for c in &classes {
        match c.collision {
            Collision::Interior { .. } => enumerated.interior += 1,
            Collision::Boundary { .. } => enumerated.boundary += 1,
            Collision::Mixed { .. } => enumerated.mixed += 1,
        }
        let (i, b) = c.collision.sizes();
        *sizes.entry((c.collision.kind_name(), i, b)).or_default() += 1;
    }

    let hypothesis_violated = n == 0 || m == 0;
    let closed_form = (!hypothesis_violated).then(|| closed_form_counts(n, m));
    if !hypothesis_violated {
        // make sure predicted but missing sizes show up as zero
        for key in expected_sizes(n, m).keys() {
            sizes.entry(*key).or_default();
        }
    }
    let expected = expected_sizes(n, m);
    let by_size = sizes
        .into_iter()
        .map(|((kind, i, b), enumerated)| SizeCount {
            kind,
            i,
            b,
            enumerated,
            expected: (!hypothesis_violated).then(|| expected.get(&(kind, i, b)).copied().unwrap_or(0)),
        })
        .collect();

    Ok(DivisorCensus {
        n,
        m,
        classes,
        enumerated,
        closed_form,
        hypothesis_violated,
        by_size,
        codim_one_strata: strata.len(),
    })
}

/// Binomial predictions per (kind, i, b) for `n, m >= 1`.
fn expected_sizes(n: u32, m: u32) -> BTreeMap<(&'static str, usize, usize), u64> {
    let (n, m) = (n as u64, m as u64);
    let mut out = BTreeMap::new();
    for i in 2..=n {
        out.insert(("interior", i as usize, 0), binomial(n, i));
    }
    for b in 2..=m {
        out.insert(("boundary", 0, b as usize), binomial(m, b));
    }
    if n >= 1 {
        for i in 1..n {
            for b in 0..=m {
                out.insert(("mixed", i as usize, b as usize), binomial(n - 1, i) * binomial(m, b));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildingSetElement {
    pub collision: Collision,
    pub grading: usize,
    pub naive_codim: usize,
}

/// Divisor classes whose naive collision locus has codimension at least
/// two, sorted by `2i + b`. For `n = 0` a boundary split and its
/// complement are one locus, so the smaller side is used.
pub fn building_set(n: u32, m: u32) -> Result<Vec<BuildingSetElement>> {
    building_set_with(n, m, &EnumConfig::default())
}

pub fn building_set_with(n: u32, m: u32, cfg: &EnumConfig) -> Result<Vec<BuildingSetElement>> {
    let census = divisor_census_with(n, m, cfg)?;
    let mut out: Vec<BuildingSetElement> = census
        .classes
        .into_iter()
        .map(|c| {
            let collision = match (n, c.collision) {
                (0, Collision::Boundary { boundary }) if 2 * boundary.len() > m as usize => {
                    let rest = (1..=m).filter(|l| !boundary.contains(l)).collect();
                    Collision::Boundary { boundary: rest }
                }
                (_, other) => other,
            };
            BuildingSetElement {
                grading: collision.grading(),
                naive_codim: collision.naive_codim(),
                collision,
            }
        })
        .filter(|e| e.naive_codim >= 2)
        .collect();
    out.sort_by(|a, b| (a.grading, &a.collision).cmp(&(b.grading, &b.collision)));
    out.dedup();
    Ok(out)
}
