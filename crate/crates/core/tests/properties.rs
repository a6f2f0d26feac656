//! Randomized checks of the structural invariants, with fixed proptest seeds.

mod common;

use std::collections::BTreeSet;

use mw_core::bounds::{cyclic_f, heawood_check, heawood_min_vertices, kuehnel_kalai_bound, lbt_check};
use mw_core::construct::{boundary_simplex, connected_sum, path, product, stack, twisted_bundle};
use mw_core::flip::{self, apply_move, check_move, legal_moves, FlipMove, Schedule};
use mw_core::homology::{betti, coherent_orientation, homology, top_homology_is_z};
use mw_core::io::{self, catalog};
use mw_core::iso::{are_isomorphic, as_determinant, as_link_determinants, automorphism_group, canonical_form};
use mw_core::{binomial, Complex, Face, Label};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::Rng;

use common::{random_relabel, random_walk, rng};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x6d77), failure_persistence: None, ..Config::default() }
}

/// Small closed manifolds of dimensions 1 to 3.
fn small() -> Vec<Complex> {
    vec![
        boundary_simplex(1),
        boundary_simplex(2),
        boundary_simplex(3),
        catalog::fixture("RP2-6").unwrap(),
        common::load("csaszar-torus"),
        twisted_bundle(2).unwrap(),
        common::load("RP3-11"),
        common::load("L31-12"),
    ]
}

fn pick(i: usize) -> Complex {
    let all = small();
    all[i % all.len()].clone()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn from_facets_canonical_and_idempotent(
        d in 0usize..4,
        raw in prop::collection::vec(prop::collection::btree_set(1u32..30, 1..5), 1..12),
    ) {
        let raw: Vec<Vec<Label>> = raw
            .into_iter()
            .filter(|s| s.len() == d + 1)
            .map(|s| s.into_iter().collect())
            .collect();
        prop_assume!(!raw.is_empty());
        let c = Complex::from_facets(&raw).unwrap();
        let used: BTreeSet<Label> = c.facets().iter().flat_map(|f| f.vertices().to_vec()).collect();
        prop_assert_eq!(used, (1..=c.n() as Label).collect::<BTreeSet<_>>());
        prop_assert!(c.facets().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(c.facets().iter().all(|f| f.len() == d + 1));
        prop_assert!(c.original_labels().windows(2).all(|w| w[0] < w[1]));
        let again = Complex::from_facets(c.facet_lists()).unwrap();
        prop_assert_eq!(&again, &c);

        let f = c.f_vector();
        prop_assert_eq!(f.get(0), c.n() as u64);
        prop_assert_eq!(f.get(d), c.num_facets() as u64);
        let alt: i64 = f.counts.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        prop_assert_eq!(f.euler, alt);
        let h = homology(&c);
        prop_assert_eq!(h.euler(), f.euler);
    }

    #[test]
    fn star_link_duality(
        d in 1usize..4,
        raw in prop::collection::vec(prop::collection::btree_set(1u32..12, 2..5), 1..14),
        pick_face in any::<prop::sample::Index>(),
    ) {
        let raw: Vec<Vec<Label>> = raw.into_iter().filter(|s| s.len() == d + 1).map(|s| s.into_iter().collect()).collect();
        prop_assume!(!raw.is_empty());
        let c = Complex::from_facets(&raw).unwrap();
        let faces: Vec<Face> = (1..=d).flat_map(|k| c.faces(k)).collect();
        let face = pick_face.get(&faces);
        let star = c.star(face).unwrap();
        // star and link come back with compacted labels; compare through the original labels
        let orig = |x: &Complex, g: &Face| -> Vec<Label> {
            g.vertices().iter().map(|&v| x.original_labels()[v as usize - 1]).collect()
        };
        let star_sets: BTreeSet<Vec<Label>> = star.facets().iter().map(|g| orig(&star, g)).collect();
        let want_star: BTreeSet<Vec<Label>> =
            c.facets().iter().filter(|g| g.includes(face)).map(|g| orig(&c, g)).collect();
        let face_orig = orig(&c, face);
        prop_assert_eq!(&star_sets, &want_star);
        let link = c.link(face);
        if face.len() == d + 1 {
            prop_assert!(link.is_err());
        } else {
            let link = link.unwrap();
            let link_sets: BTreeSet<Vec<Label>> = link.facets().iter().map(|g| orig(&link, g)).collect();
            let want_link: BTreeSet<Vec<Label>> =
                want_star.iter().map(|g| g.iter().copied().filter(|v| !face_orig.contains(v)).collect()).collect();
            prop_assert_eq!(link_sets, want_link);
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn homology_and_determinants_survive_relabelling(i in 0usize..8, seed in any::<u64>()) {
        let c = pick(i);
        let r = random_relabel(&c, &mut rng(seed));
        prop_assert_eq!(homology(&r), homology(&c));
        prop_assert_eq!(as_determinant(&r), as_determinant(&c));
        let sorted = |x: &Complex| { let mut v = as_link_determinants(x); v.sort(); v };
        prop_assert_eq!(sorted(&r), sorted(&c));
        prop_assert_eq!(canonical_form(&r).0, canonical_form(&c).0);
    }

    #[test]
    fn isomorphism_is_an_equivalence(i in 0usize..8, j in 0usize..8, seed in any::<u64>()) {
        let mut g = rng(seed);
        let (a, b) = (pick(i), pick(j));
        let (a1, a2) = (random_relabel(&a, &mut g), random_relabel(&a, &mut g));
        prop_assert!(are_isomorphic(&a, &a));
        prop_assert!(are_isomorphic(&a, &a1) && are_isomorphic(&a1, &a));
        prop_assert!(are_isomorphic(&a1, &a2));
        let same = i % 8 == j % 8;
        prop_assert_eq!(are_isomorphic(&a1, &b), same);
        prop_assert_eq!(are_isomorphic(&b, &a1), same);
    }

    #[test]
    fn io_round_trip(i in 0usize..8, seed in any::<u64>()) {
        let c = random_walk(&pick(i), 20, 2, &mut rng(seed));
        let text = io::write(&c);
        prop_assert_eq!(&io::write(&c), &text);
        prop_assert_eq!(io::parse(&text).unwrap(), c.clone());
        let commented = io::write_with_comments(&c, &["walked", "twice"]);
        prop_assert_eq!(io::parse(&commented).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn flip_walks_preserve_topology(i in 0usize..8, seed in any::<u64>()) {
        let c = pick(i);
        let h = homology(&c);
        let w = random_walk(&c, 200, 3, &mut rng(seed));
        prop_assert!(w.is_pseudomanifold().is_yes());
        prop_assert_eq!(homology(&w), h);
        let f = w.f_vector();
        prop_assert_eq!(f.euler, c.f_vector().euler);
        let n = f.get(0) as i64;
        match w.dim() {
            2 => {
                prop_assert_eq!(f.get(1) as i64, 3 * n - 3 * f.euler);
                prop_assert_eq!(f.get(2) as i64, 2 * n - 2 * f.euler);
            }
            3 => {
                let f1 = f.get(1) as i64;
                prop_assert_eq!(f.counts.iter().map(|&x| x as i64).collect::<Vec<_>>(), vec![n, f1, 2 * f1 - 2 * n, f1 - n]);
            }
            _ => {}
        }
    }

    #[test]
    fn moves_are_reversible(i in 0usize..8, seed in any::<u64>()) {
        let mut g = rng(seed);
        let c = random_walk(&pick(i), 30, 2, &mut g);
        let d = c.dim();
        for k in 0..d {
            let moves = legal_moves(&c, k);
            if moves.is_empty() {
                continue;
            }
            let m = &moves[g.random_range(0..moves.len())];
            prop_assert!(check_move(&c, m).is_ok());
            let next = apply_move(&c, m).unwrap();
            let back = if k == 0 {
                FlipMove { kind: d, remove: m.insert.clone(), insert: m.remove.clone() }
            } else {
                FlipMove { kind: d - k, remove: m.insert.clone(), insert: m.remove.clone() }
            };
            prop_assert!(check_move(&next, &back).is_ok(), "inverse of {} illegal", m);
            prop_assert_eq!(apply_move(&next, &back).unwrap(), c.clone());
        }
    }

    #[test]
    fn stacking_keeps_homology(i in 0usize..8, which in any::<prop::sample::Index>()) {
        let c = pick(i);
        let f = which.get(c.facets()).clone();
        let s = stack(&c, &f).unwrap();
        prop_assert_eq!(s.n(), c.n() + 1);
        prop_assert_eq!(homology(&s), homology(&c));
    }

    #[test]
    fn connected_sum_euler(i in 0usize..8, j in 0usize..8, fa in any::<prop::sample::Index>(), fb in any::<prop::sample::Index>()) {
        let (a, b) = (pick(i), pick(j));
        prop_assume!(a.dim() == b.dim());
        let s = connected_sum(&a, fa.get(a.facets()), &b, fb.get(b.facets()), None).unwrap();
        prop_assert!(s.is_pseudomanifold().is_yes());
        let sphere_chi = boundary_simplex(a.dim()).f_vector().euler;
        prop_assert_eq!(s.f_vector().euler, a.f_vector().euler + b.f_vector().euler - sphere_chi);
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn reducer_is_deterministic_and_replayable(i in 0usize..8, seed in any::<u64>()) {
        let c = random_walk(&pick(i), 40, 6, &mut rng(seed));
        let schedule = Schedule::default();
        let r1 = flip::reduce(&c, seed, 3000, &schedule).unwrap();
        let r2 = flip::reduce(&c, seed, 3000, &schedule).unwrap();
        prop_assert_eq!(&r1.trace, &r2.trace);
        prop_assert!(r1.stats.best.counts <= c.f_vector().counts);
        prop_assert_eq!(flip::replay(&c, &r1.trace).unwrap(), r1.complex.clone());
        prop_assert_eq!(homology(&r1.complex), homology(&c));
    }
}

#[test]
fn product_vertex_count_and_euler() {
    let factors = [
        boundary_simplex(1),
        boundary_simplex(2),
        path(2),
        catalog::fixture("RP2-6").unwrap(),
        common::load("csaszar-torus"),
    ];
    for a in &factors {
        for b in &factors {
            let p = product(a, b);
            let (fa, fb, fp) = (a.f_vector(), b.f_vector(), p.f_vector());
            assert_eq!(fp.get(0), fa.get(0) * fb.get(0));
            assert_eq!(fp.euler, fa.euler * fb.euler);
            assert_eq!(p.dim(), a.dim() + b.dim());
        }
    }
}

#[test]
fn orientation_agrees_with_top_homology() {
    let mut all = small();
    all.extend(catalog::catalog().unwrap().into_iter().map(|e| e.complex));
    all.push(catalog::fixture("CP2-9").unwrap());
    all.push(twisted_bundle(3).unwrap());
    all.push(twisted_bundle(4).unwrap());
    for c in &all {
        assert_eq!(coherent_orientation(c).is_some(), top_homology_is_z(&homology(c)), "{}", c.f_vector());
    }
}

#[test]
fn poincare_duality_mod_two() {
    for e in catalog::catalog().unwrap() {
        let b = betti(&e.complex, 2).ranks;
        let mut rev = b.clone();
        rev.reverse();
        assert_eq!(b, rev, "{}", e.name());
    }
}

#[test]
fn automorphisms_fix_the_facet_set() {
    for name in ["RP3-11", "L31-12", "csaszar-torus", "S3xtS1-12"] {
        let c = common::load(name);
        let dets = as_link_determinants(&c);
        for g in automorphism_group(&c).generators {
            assert_eq!(c.relabel(&g), c, "{name}");
            for v in 0..c.n() {
                assert_eq!(dets[g[v] as usize - 1], dets[v], "{name}");
            }
        }
    }
}

#[test]
fn rp3_automorphisms_keep_link_classes() {
    let c = common::load("RP3-11");
    let classes: [&[Label]; 3] = [&[1, 2, 3, 4, 5, 6], &[7, 8, 9, 10], &[11]];
    for g in automorphism_group(&c).generators {
        for class in classes {
            let mut image: Vec<Label> = class.iter().map(|&v| g[v as usize - 1]).collect();
            image.sort_unstable();
            assert_eq!(image, class);
        }
    }
}

#[test]
fn heawood_monotone_and_matches_kuehnel_kalai() {
    let mut last = u64::MAX;
    for chi in -80..=2i64 {
        let m = heawood_min_vertices(chi, false);
        assert!(m <= last);
        last = m;
        for n in 4..40u64 {
            assert_eq!(kuehnel_kalai_bound(1, n, chi), heawood_check(n, chi, false), "n={n} chi={chi}");
        }
    }
}

#[test]
fn cyclic_dehn_sommerville() {
    for d in 1..8usize {
        for n in d as u64 + 2..20 {
            let f = cyclic_f(d, n);
            let big_d = d as i64 + 1;
            let fm = |i: i64| if i < 0 { 1 } else { f.get(i as usize) as i128 };
            let h: Vec<i128> = (0..=big_d)
                .map(|k| (0..=k).map(|i| if (k - i) % 2 == 0 { 1 } else { -1 } * binomial(big_d - i, k - i) * fm(i - 1)).sum())
                .collect();
            let mut rev = h.clone();
            rev.reverse();
            assert_eq!(h, rev, "d={d} n={n}");
        }
    }
}

#[test]
fn stacked_spheres_meet_the_lower_bound() {
    let mut g = rng(11);
    for trial in 0..10 {
        let mut c = boundary_simplex(3);
        for _ in 0..trial + 1 {
            let f = c.facets()[g.random_range(0..c.num_facets())].clone();
            c = stack(&c, &f).unwrap();
        }
        assert!(lbt_check(&c.f_vector()).iter().all(|k| k.sharp), "{}", c.f_vector());
    }
}

#[test]
fn twisted_bundles_are_manifolds_with_bundle_homology() {
    for d in 2..=5usize {
        let c = twisted_bundle(d).unwrap();
        assert!(mw_core::manifold::is_combinatorial_manifold(&c, mw_core::manifold::DEFAULT_LINK_BUDGET).is_yes(), "d={d}");
        assert_eq!(betti(&c, 0).ranks[1], 1);
        let mut want = vec!["Z".to_string(), "Z".to_string()];
        want.extend(std::iter::repeat_n("0".to_string(), d - 1));
        want[d - 1] = if d == 2 { "Z+Z_2".into() } else { "Z_2".into() };
        want[d] = "0".into();
        let want = mw_core::HomologyVector::parse(&format!("({})", want.join(","))).unwrap();
        assert_eq!(homology(&c), want, "d={d}");
    }
}
