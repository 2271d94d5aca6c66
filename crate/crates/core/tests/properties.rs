//! Randomized invariants of trees, strata and posets.

use std::collections::HashSet;

use disk_moduli::canonical::reroot;
use disk_moduli::closure::insertions;
use disk_moduli::verify::orbit;
use disk_moduli::{
    associahedron_poset, canonicalize, enumerate_strata, factors, flip, merge_bubble, oriented_form, poset_isomorphic,
    Bracketing, BubbleKind, BubbleTree, FacePoset, Label,
};
use proptest::prelude::*;

const SPACES: &[(u32, u32)] = &[(0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];

/// A valid tree reached from a trivial chamber by a walk of arc insertions.
fn walk(space: usize, order_seed: &[usize], steps: &[usize]) -> Vec<BubbleTree> {
    let (n, m) = SPACES[space];
    let mut labels: Vec<Label> = (1..=m).collect();
    for (i, s) in order_seed.iter().enumerate().take(labels.len()) {
        let j = i + s % (labels.len() - i);
        labels.swap(i, j);
    }
    let mut t = BubbleTree::trivial_with_order(n, &labels);
    let mut path = vec![t.clone()];
    for &s in steps {
        let next = insertions(&t);
        if next.is_empty() {
            break;
        }
        t = next[s % next.len()].clone();
        path.push(t.clone());
    }
    path
}

fn arb_walk() -> impl Strategy<Value = Vec<BubbleTree>> {
    (
        0..SPACES.len(),
        prop::collection::vec(any::<usize>(), 6),
        prop::collection::vec(any::<usize>(), 0..6),
    )
        .prop_map(|(sp, o, s)| walk(sp, &o, &s))
}

fn arb_tree() -> impl Strategy<Value = BubbleTree> {
    arb_walk().prop_map(|mut w| w.pop().unwrap())
}

fn flat_paths(t: &BubbleTree) -> Vec<disk_moduli::NodePath> {
    t.bubble_paths()
        .into_iter()
        .filter(|p| t.bubble_kind(p) == Ok(BubbleKind::Flat))
        .collect()
}

fn permuted(p: &FacePoset, seed: &[usize]) -> FacePoset {
    let k = p.len();
    let mut perm: Vec<usize> = (0..k).collect();
    for i in 0..k {
        let j = i + seed[i % seed.len()] % (k - i);
        perm.swap(i, j);
    }
    let mut ranks = vec![0; k];
    for i in 0..k {
        ranks[perm[i]] = p.rank(i);
    }
    let covers = p.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    FacePoset::unlabeled(ranks, covers)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn walks_stay_valid_and_raise_codim(w in arb_walk()) {
        for (k, t) in w.iter().enumerate() {
            prop_assert!(t.validate().is_ok(), "{t}");
            prop_assert_eq!(t.codim(), k);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(t in arb_tree()) {
        let c = canonicalize(&t).unwrap();
        prop_assert_eq!(canonicalize(&c).unwrap(), c.clone());
        let o = oriented_form(&t).unwrap();
        prop_assert_eq!(oriented_form(&o).unwrap(), o.clone());
        prop_assert_eq!(canonicalize(&o).unwrap(), c);
    }

    #[test]
    fn canonical_form_is_orbit_invariant(t in arb_tree(), picks in prop::collection::vec(any::<usize>(), 1..5)) {
        let c = canonicalize(&t).unwrap();
        let mut cur = t;
        for p in picks {
            let o = orbit(&cur);
            if o.is_empty() {
                break;
            }
            cur = o[p % o.len()].clone();
            prop_assert_eq!(canonicalize(&cur).unwrap(), c.clone());
        }
    }

    #[test]
    fn flips_are_involutions(t in arb_tree()) {
        for p in flat_paths(&t) {
            let once = flip(&t, &p).unwrap();
            prop_assert!(once.validate().is_ok());
            prop_assert_eq!(once.codim(), t.codim());
            prop_assert_eq!(flip(&once, &p).unwrap(), t.clone());
        }
    }

    #[test]
    fn merges_lower_codim_by_one(t in arb_tree()) {
        for p in t.bubble_paths() {
            let ups = merge_bubble(&t, &p).unwrap();
            prop_assert!(!ups.is_empty());
            for up in ups {
                prop_assert_eq!(up.codim() + 1, t.codim());
            }
        }
    }

    #[test]
    fn every_insertion_can_be_merged_back(w in arb_walk()) {
        for pair in w.windows(2) {
            let below = canonicalize(&pair[0]).unwrap();
            let t = &pair[1];
            let back: HashSet<BubbleTree> = t
                .bubble_paths()
                .iter()
                .flat_map(|p| merge_bubble(t, p).unwrap())
                .map(|s| s.canonical().clone())
                .collect();
            prop_assert!(back.contains(&below), "{} does not merge to {}", t, below);
        }
    }

    #[test]
    fn factor_dimensions_telescope(t in arb_tree()) {
        let dims: usize = factors(&t).unwrap().iter().map(|f| f.dimension()).sum();
        let (codim, dim) = t.codim_dim().unwrap();
        prop_assert_eq!(dims, dim);
        prop_assert_eq!(codim + dim, t.space_dim());
    }

    #[test]
    fn rerooting_keeps_the_stratum(sp in 0usize..3, o in prop::collection::vec(any::<usize>(), 6), s in prop::collection::vec(any::<usize>(), 1..5)) {
        let t = walk(sp, &o, &s).pop().unwrap();
        prop_assert_eq!(t.n(), 0);
        let c = canonicalize(&t).unwrap();
        for p in flat_paths(&t) {
            let r = reroot(&t, &p).unwrap();
            prop_assert!(r.validate().is_ok());
            prop_assert_eq!(canonicalize(&r).unwrap(), c.clone());
        }
    }

    #[test]
    fn brackets_are_nested_or_disjoint(n in 3usize..9, raw in prop::collection::vec((1usize..9, 1usize..9), 0..5)) {
        let brackets: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let in_range = |&(i, j): &(usize, usize)| j <= n && j > i && j - i < n - 1;
        let mut uniq = brackets.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let ok = uniq.len() == brackets.len()
            && brackets.iter().all(in_range)
            && brackets.iter().all(|a| brackets.iter().all(|b| {
                (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1) || a.1 < b.0 || b.1 < a.0
            }));
        match Bracketing::new(n, brackets) {
            Ok(b) => {
                prop_assert!(ok);
                prop_assert_eq!(b.rank() + b.brackets().len(), n - 2);
            }
            Err(e) => {
                prop_assert!(!ok);
                prop_assert_eq!(e.code(), "Parse");
            }
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(n in 2usize..6, seed in prop::collection::vec(any::<usize>(), 1..8)) {
        let p = associahedron_poset(n).unwrap();
        let q = permuted(&p, &seed);
        prop_assert!(poset_isomorphic(&p, &q).unwrap());
        prop_assert!(poset_isomorphic(&q, &p).unwrap());
    }

    #[test]
    fn isomorphism_is_symmetric(a in 2usize..6, b in 2usize..6) {
        let p = associahedron_poset(a).unwrap();
        let q = associahedron_poset(b).unwrap();
        prop_assert_eq!(poset_isomorphic(&p, &q).unwrap(), poset_isomorphic(&q, &p).unwrap());
        prop_assert_eq!(poset_isomorphic(&p, &q).unwrap(), a == b);
    }

    #[test]
    fn enumerated_strata_are_canonical(sp in 0..SPACES.len(), k in 0usize..4, pick in any::<usize>()) {
        let (n, m) = SPACES[sp];
        let top = (2 * n + m) as usize - 3;
        let list = enumerate_strata(n, m, k.min(top)).unwrap();
        let s = &list[pick % list.len()];
        prop_assert_eq!(canonicalize(s.canonical()).unwrap(), s.canonical().clone());
        prop_assert_eq!(s.codim(), k.min(top));
    }
}
