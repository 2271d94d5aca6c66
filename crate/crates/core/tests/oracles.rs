//! Enumerated counts against independent formulas and brute-force counts.

use std::collections::BTreeSet;

use disk_moduli::{
    associahedron_poset, building_set, catalan, chamber_adjacency, chamber_closure_poset, chambers, cyclohedron_poset,
    divisor_census, enumerate_all, enumerate_strata, euler_characteristic, face_poset, f_vector, poset_f_vector,
    poset_isomorphic, BubbleTree, Collision,
};

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dyck words of length 2k, counted by walking every 0/1 string.
fn ballot_count(k: u32) -> u64 {
    (0u64..1 << (2 * k))
        .filter(|w| {
            let mut h = 0i32;
            for i in 0..2 * k {
                h += if w >> i & 1 == 1 { 1 } else { -1 };
                if h < 0 {
                    return false;
                }
            }
            h == 0
        })
        .count() as u64
}

/// Dissections of a convex N-gon with k diagonals.
fn kirkman(polygon: u64, k: u64) -> u64 {
    binom(polygon - 3, k) * binom(polygon + k - 1, k) / (k + 1)
}

/// Faces of codimension k of the (n-1)-dimensional cyclohedron.
fn type_b_faces(n: u64, k: u64) -> u64 {
    binom(n - 1, k) * binom(n + k - 1, k)
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[test]
fn catalan_matches_ballot_sequences() {
    for k in 0..=9 {
        assert_eq!(catalan(k as u64), ballot_count(k) as u128, "k = {k}");
    }
    assert_eq!(catalan(5), 42);
}

#[test]
fn associahedra_match_kirkman_cayley() {
    for n in 2..=7usize {
        let f = poset_f_vector(&associahedron_poset(n).unwrap()).unwrap();
        let top = n - 2;
        for (rank, &count) in f.iter().enumerate() {
            let diagonals = (top - rank) as u64;
            assert_eq!(count as u64, kirkman(n as u64 + 1, diagonals), "K_{n} rank {rank}");
        }
        assert_eq!(f[0] as u128, catalan(n as u64 - 1));
    }
}

#[test]
fn cyclohedra_match_type_b_counts() {
    for n in 2..=5u32 {
        let w = cyclohedron_poset(n).unwrap();
        let f = poset_f_vector(&w.poset).unwrap();
        let top = n as usize - 1;
        for (rank, &count) in f.iter().enumerate() {
            let k = (top - rank) as u64;
            assert_eq!(count as u64, type_b_faces(n as u64, k), "W_{n} rank {rank}");
        }
    }
    let w4 = cyclohedron_poset(4).unwrap();
    let f = poset_f_vector(&w4.poset).unwrap();
    assert_eq!((f[0], f[2]), (20, 12));
    // each facet of the tile lies on its own wall
    assert_eq!(w4.stratum_f_vector()[2], 12);
}

#[test]
fn every_chamber_of_one_four_is_a_cyclohedron() {
    let w4 = cyclohedron_poset(4).unwrap();
    for c in enumerate_strata(1, 4, 0).unwrap() {
        let tile = chamber_closure_poset(1, 4, &c).unwrap();
        assert!(poset_isomorphic(&tile.poset, &w4.poset).unwrap(), "{c}");
    }
}

#[test]
fn chamber_counts_match_cyclic_orders() {
    for (n, m) in [(0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let rest: Vec<u32> = (2..=m).collect();
        let orders: BTreeSet<String> = permutations(&rest)
            .into_iter()
            .map(|p| {
                let mut o = vec![1];
                o.extend(p);
                BubbleTree::trivial_with_order(n, &o).to_string()
            })
            .collect();
        let c = chambers(n, m).unwrap();
        assert_eq!(c.enumerated, orders.len() as u64, "({n},{m})");
        assert!(c.matches());
    }
}

#[test]
fn chamber_closures_cover_every_stratum() {
    for (n, m) in [(1, 2), (1, 3), (2, 1), (2, 2), (0, 5), (1, 4)] {
        let all = enumerate_all(n, m).unwrap();
        let mut met = BTreeSet::new();
        for c in &all.by_codim[0] {
            let tile = chamber_closure_poset(n, m, c).unwrap();
            met.extend(tile.strata.iter().map(|s| s.canonical().clone()));
        }
        let every: BTreeSet<_> = all.iter().map(|s| s.canonical().clone()).collect();
        assert_eq!(met, every, "({n},{m})");
    }
}

#[test]
fn four_points_on_a_line_give_two_triangulated_circles() {
    assert_eq!(f_vector(0, 4).unwrap(), vec![6, 6]);
    let a = chamber_adjacency(0, 4).unwrap();
    assert_eq!(a.component_sizes(), vec![3, 3]);
}

#[test]
fn real_line_adjacency_counts_associahedron_facets() {
    for m in [4u64, 5, 6] {
        let a = chamber_adjacency(0, m as u32).unwrap();
        let chambers: u64 = (1..m).product();
        // every wall of a tile is a diagonal of the m-gon, shared by two tiles
        assert_eq!(a.edges.len() as u64, chambers * (m * (m - 3) / 2) / 2, "m = {m}");
        assert_eq!(a.component_sizes(), vec![chambers as usize / 2; 2]);
    }
}

#[test]
fn euler_characteristic_is_the_alternating_face_count() {
    for (n, m) in [(1, 2), (1, 3), (1, 4), (0, 4), (0, 5), (0, 6)] {
        let f = f_vector(n, m).unwrap();
        let top = f.len() - 1;
        let alt: i64 = f
            .iter()
            .enumerate()
            .map(|(k, &c)| if (top - k).is_multiple_of(2) { c as i64 } else { -(c as i64) })
            .sum();
        assert_eq!(euler_characteristic(n, m).unwrap(), alt, "({n},{m})");
    }
    // torus # RP^2
    assert_eq!(euler_characteristic(1, 3).unwrap(), -1);
    // two copies of the connected sum of five projective planes
    assert_eq!(euler_characteristic(0, 5).unwrap(), 2 * (2 - 5));
}

#[test]
fn eye_corner_lies_on_both_lids_but_not_the_pupil() {
    let p = face_poset(2, 1).unwrap();
    assert_eq!(poset_f_vector(&p).unwrap(), vec![1, 3, 1]);
    let corner = (0..p.len()).find(|&i| p.rank(i) == 0).unwrap();
    let above: Vec<&str> = p.up(corner).iter().map(|&j| p.label(j).unwrap()).collect();
    assert_eq!(above.len(), 2);
    assert!(above.iter().all(|l| !l.contains("S(")), "{above:?}");
    let pupil = (0..p.len()).find(|&i| p.label(i).unwrap().contains("S(")).unwrap();
    assert!(p.down(pupil).is_empty());
}

#[test]
fn circle_with_one_vertex() {
    let p = face_poset(1, 2).unwrap();
    assert_eq!((p.len(), p.covers().len()), (2, 1));
    let w = cyclohedron_poset(2).unwrap();
    assert_eq!(poset_f_vector(&w.poset).unwrap(), vec![2, 1]);
    assert_eq!(w.stratum_f_vector(), vec![1, 1]);
    assert!(w.self_glued());
}

fn subsets(k: u32) -> impl Iterator<Item = Vec<u32>> {
    (0u32..1 << k).map(move |mask| (1..=k).filter(|l| mask >> (l - 1) & 1 == 1).collect())
}

/// Every admissible collision, listed straight from label subsets: at
/// least two interior or two boundary particles, and a disk bubble never
/// takes the last interior particle.
fn expected_collisions(n: u32, m: u32) -> BTreeSet<Collision> {
    let mut out = BTreeSet::new();
    for i in subsets(n).filter(|s| s.len() >= 2) {
        out.insert(Collision::Interior { interior: i });
    }
    for b in subsets(m).filter(|s| s.len() >= 2) {
        out.insert(Collision::Boundary { boundary: b });
    }
    for i in subsets(n.saturating_sub(1)).filter(|s| !s.is_empty()) {
        for b in subsets(m) {
            out.insert(Collision::Mixed { interior: i.clone(), boundary: b });
        }
    }
    out
}

#[test]
fn divisor_classes_match_label_subsets() {
    let count = |n, m| {
        let c = divisor_census(n, m).unwrap();
        (c.enumerated.interior, c.enumerated.boundary, c.enumerated.mixed)
    };
    assert_eq!(count(2, 2), (1, 1, 4));
    assert_eq!(count(1, 2), (0, 1, 0));
    assert_eq!(count(3, 1), (4, 0, 6));
    for n in 1..=3u32 {
        for m in 1..=4u32 {
            let c = divisor_census(n, m).unwrap();
            let got: BTreeSet<Collision> = c.classes.iter().map(|d| d.collision.clone()).collect();
            assert_eq!(got.len(), c.classes.len());
            assert_eq!(got, expected_collisions(n, m), "({n},{m})");
            assert_eq!(c.codim_one_strata, f_vector(n, m).unwrap().get(1).copied().unwrap_or(0));
        }
    }
}

#[test]
fn building_set_sizes() {
    let sizes: Vec<usize> = [(2, 2), (2, 1), (1, 2), (1, 3)]
        .iter()
        .map(|&(n, m)| building_set(n, m).unwrap().len())
        .collect();
    assert_eq!(sizes, vec![4, 2, 0, 1]);
}
