//! Reproduction checks for the published counts, grouped into ten
//! criteria. Each check records what was expected and what was computed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonicalize, flip_is_identification, reroot};
use crate::census::{building_set, divisor_census};
use crate::closure::{chamber_adjacency, chamber_closure_poset, euler_characteristic, face_poset, face_poset_of};
use crate::enumerate::{chambers, enumerate_all};
use crate::error::Result;
use crate::ops::{flip, merge_bubble, Stratum};
use crate::polytope::{associahedron_poset, catalan, cyclohedron_poset};
use crate::poset::{is_graded, poset_f_vector, poset_isomorphic};
use crate::tree::{BubbleKind, BubbleTree, Disk, InteriorItem};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn eq<T: std::fmt::Debug + PartialEq>(name: impl Into<String>, expected: T, actual: Result<T>) -> Self {
        let name = name.into();
        match actual {
            Ok(a) => Check {
                name,
                expected: format!("{expected:?}"),
                actual: format!("{a:?}"),
                pass: a == expected,
            },
            Err(e) => Check {
                name,
                expected: format!("{expected:?}"),
                actual: format!("error {}: {e}", e.code()),
                pass: false,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

pub const CRITERIA: u8 = 10;

/// Ranges used by the sweeping criteria.
const SWEEP_N: std::ops::RangeInclusive<u32> = 1..=3;
const SWEEP_M: std::ops::RangeInclusive<u32> = 1..=4;

pub fn run_all() -> Vec<Criterion> {
    (1..=CRITERIA).map(criterion).collect()
}

/// Runs one criterion. Panics on an id outside `1..=10`.
pub fn criterion(id: u8) -> Criterion {
    let (title, checks) = match id {
        1 => ("chamber counts equal (m-1)!", chamber_checks()),
        2 => ("divisor census matches closed forms", divisor_checks()),
        3 => ("building-set sizes", building_checks()),
        4 => ("f-vector and Euler characteristic of K(1,3)", k13_checks()),
        5 => ("f-vector and incidence of K(2,1)", k21_checks()),
        6 => ("two sheets for n = 0", sheet_checks()),
        7 => ("chamber tiles are associahedra and cyclohedra", tile_checks()),
        8 => ("Catalan vertex counts", catalan_checks()),
        9 => ("codim-1 strata from divisor factors", refinement_checks()),
        10 => ("structural properties of every stratum", property_checks()),
        _ => panic!("no criterion {id}"),
    };
    Criterion { id, title, checks }
}

fn chamber_checks() -> Vec<Check> {
    [(1, 2, 1), (2, 2, 1), (1, 3, 2), (0, 4, 6), (1, 4, 6), (0, 5, 24), (2, 3, 2)]
        .into_iter()
        .flat_map(|(n, m, want)| {
            let c = chambers(n, m);
            [
                Check::eq(format!("chambers({n},{m})"), want, c.map(|c| c.enumerated)),
                Check::eq(format!("(m-1)! for ({n},{m})"), want, Ok(crate::factor::factorial(m as u64 - 1))),
            ]
        })
        .collect()
}

fn divisor_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in SWEEP_N {
        for m in SWEEP_M {
            let census = divisor_census(n, m);
            out.push(Check::eq(
                format!("closed forms ({n},{m})"),
                Some(true),
                census.as_ref().map(|c| c.closed_form_matches()).map_err(Clone::clone),
            ));
            out.push(Check::eq(
                format!("per-(i,b) binomials ({n},{m})"),
                Some(true),
                census.as_ref().map(|c| c.refinement_matches()).map_err(Clone::clone),
            ));
            out.push(Check::eq(
                format!("factors per class ({n},{m})"),
                true,
                census.as_ref().map(|c| c.factors_consistent()).map_err(Clone::clone),
            ));
        }
    }
    for (n, m, want) in [(2, 2, (1, 1, 4)), (3, 1, (4, 0, 6))] {
        out.push(Check::eq(
            format!("(interior, boundary, mixed) for ({n},{m})"),
            want,
            divisor_census(n, m).map(|c| (c.enumerated.interior, c.enumerated.boundary, c.enumerated.mixed)),
        ));
    }
    out
}

fn building_checks() -> Vec<Check> {
    [(2, 2, 4), (2, 1, 2), (1, 2, 0), (1, 3, 1)]
        .into_iter()
        .map(|(n, m, want)| Check::eq(format!("|b({n},{m})|"), want, building_set(n, m).map(|b| b.len())))
        .collect()
}

fn k13_checks() -> Vec<Check> {
    vec![
        Check::eq("f_vector(1,3)", vec![2, 6, 3], crate::enumerate::f_vector(1, 3)),
        Check::eq("euler_characteristic(1,3)", -1, euler_characteristic(1, 3)),
    ]
}

fn k21_checks() -> Vec<Check> {
    let mut out = vec![Check::eq("f_vector(2,1)", vec![1, 3, 1], crate::enumerate::f_vector(2, 1))];
    let shape = enumerate_all(2, 1).map(|s| {
        let walls = &s.by_codim[1];
        let spheres = walls
            .iter()
            .filter(|w| w.canonical().root().interior.iter().any(|i| matches!(i, InteriorItem::Sphere(_))))
            .count();
        (spheres, walls.len() - spheres)
    });
    out.push(Check::eq("(pupil, lids)", (1, 2), shape));
    let corner = face_poset(2, 1).map(|p| {
        let c = (0..p.len()).find(|&i| p.rank(i) == 0).expect("a vertex");
        let on_lids = p
            .up(c)
            .iter()
            .filter(|&&w| !p.label(w).unwrap_or("").contains("S("))
            .count();
        (p.up(c).len(), on_lids)
    });
    out.push(Check::eq("corner lies on (walls, lids)", (2, 2), corner));
    out
}

fn sheet_checks() -> Vec<Check> {
    [(4, 3), (5, 12)]
        .into_iter()
        .map(|(m, size)| {
            Check::eq(
                format!("components of K(0,{m})"),
                vec![size, size],
                chamber_adjacency(0, m).map(|a| a.component_sizes()),
            )
        })
        .collect()
}

fn first_chamber(n: u32, m: u32) -> Result<Stratum> {
    Stratum::from_tree(&BubbleTree::trivial(n, m))
}

fn tile_checks() -> Vec<Check> {
    let k05 = first_chamber(0, 5).and_then(|c| chamber_closure_poset(0, 5, &c));
    let k4 = associahedron_poset(4);
    let iso = match (&k05, &k4) {
        (Ok(c), Ok(a)) => poset_isomorphic(&c.poset, a),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    let k13 = first_chamber(1, 3).and_then(|c| chamber_closure_poset(1, 3, &c));
    vec![
        Check::eq("tile of K(0,5) ~ K_4", true, iso),
        Check::eq(
            "f(tile of K(0,5))",
            vec![5, 5, 1],
            k05.and_then(|c| poset_f_vector(&c.poset)),
        ),
        Check::eq("f(tile of K(1,3))", vec![6, 6, 1], k13.and_then(|c| poset_f_vector(&c.poset))),
    ]
}

fn catalan_checks() -> Vec<Check> {
    let mut out: Vec<Check> = (2..=7usize)
        .map(|n| {
            Check::eq(
                format!("vertices of K_{n}"),
                catalan(n as u64 - 1) as usize,
                associahedron_poset(n).and_then(|p| poset_f_vector(&p)).map(|f| f[0]),
            )
        })
        .collect();
    out.push(Check::eq(
        "vertices of W_4",
        20,
        cyclohedron_poset(4).and_then(|c| poset_f_vector(&c.poset)).map(|f| f[0]),
    ));
    out
}

fn refinement_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in SWEEP_N {
        for m in SWEEP_M {
            let r = divisor_census(n, m).map(|c| (c.codim_one_strata as u64, c.refinement_sum()));
            let (want, got) = match r {
                Ok((a, b)) => (a, Ok(b)),
                Err(e) => (0, Err(e)),
            };
            out.push(Check::eq(format!("|strata({n},{m},1)|"), want, got));
        }
    }
    out.push(Check::eq(
        "|strata(2,2,1)|",
        8,
        divisor_census(2, 2).map(|c| c.refinement_sum()),
    ));
    out
}

fn property_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=3u32 {
        for m in 0..=4u32 {
            if 2 * n + m < 3 {
                continue;
            }
            out.push(Check::eq(
                format!("violations in ({n},{m})"),
                Vec::<String>::new(),
                sweep(n, m),
            ));
        }
    }
    out
}

/// Every property over every stratum of `K(n,m)`; returns the names of the
/// properties that failed, with a witness.
pub fn sweep(n: u32, m: u32) -> Result<Vec<String>> {
    let strata = enumerate_all(n, m)?;
    let known: Vec<HashSet<&BubbleTree>> = strata
        .by_codim
        .iter()
        .map(|v| v.iter().map(Stratum::canonical).collect())
        .collect();
    let mut bad: Vec<String> = strata
        .by_codim
        .par_iter()
        .flatten()
        .flat_map_iter(|s| stratum_violations(s, &known))
        .collect();
    match face_poset_of(&strata, usize::MAX) {
        Ok(p) if is_graded(&p) => {}
        Ok(_) => bad.push("face poset not graded".into()),
        Err(e) => bad.push(format!("face poset: {e}")),
    }
    bad.sort();
    bad.dedup_by(|a, b| a.split(':').next() == b.split(':').next());
    Ok(bad)
}

fn stratum_violations(s: &Stratum, known: &[HashSet<&BubbleTree>]) -> Vec<String> {
    let t = s.canonical();
    let mut bad = Vec::new();
    let mut fail = |what: &str| bad.push(format!("{what}: {t}"));
    if canonicalize(t).as_ref() != Ok(t) {
        fail("canonical form not idempotent");
    }
    let dims: usize = s.factors().iter().map(|f| f.dimension()).sum();
    if dims != s.dim() || s.dim() + s.codim() != t.space_dim() {
        fail("factor dimensions do not telescope");
    }
    for image in orbit(t) {
        if canonicalize(&image).as_ref() != Ok(t) {
            fail("canonical form not orbit invariant");
        }
    }
    for path in t.bubble_paths() {
        if t.bubble_kind(&path) == Ok(BubbleKind::Flat) {
            let twice = flip(t, &path).and_then(|f| flip(&f, &path));
            if twice.as_ref() != Ok(t) {
                fail("flip not an involution");
            }
        }
        match merge_bubble(t, &path) {
            Ok(ups) if !ups.is_empty() => {
                let k = s.codim();
                if ups.iter().any(|up| up.codim() + 1 != k || !known[k - 1].contains(up.canonical())) {
                    fail("merge left the enumerated strata");
                }
            }
            _ => fail("merge failed"),
        }
    }
    bad
}

/// Images of `t` under one application of each identifying generator:
/// root rotations, flips of flat bubbles, and (for `n = 0`) re-rooting.
pub fn orbit(t: &BubbleTree) -> Vec<BubbleTree> {
    let mut out = Vec::new();
    let root = t.root();
    for k in 1..root.boundary.len() {
        let mut b = root.boundary.clone();
        b.rotate_left(k);
        out.push(BubbleTree::from_parts(t.n(), t.m(), Disk::new(root.interior.clone(), b)));
    }
    for path in t.bubble_paths() {
        if t.bubble_kind(&path) == Ok(BubbleKind::Flat) && flip_is_identification(t, &path) {
            if let Ok(f) = flip(t, &path) {
                out.push(f);
            }
        }
        if t.n() == 0 {
            if let Ok(r) = reroot(t, &path) {
                out.push(r);
            }
        }
    }
    out
}
