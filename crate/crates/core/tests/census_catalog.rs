mod common;

use mw_core::bounds::{heawood_min_vertices, is_exceptional_surface};
use mw_core::census::{classify_surface, enumerate_spheres_with, enumerate_surfaces, enumerate_surfaces_with, CensusOptions};
use mw_core::construct::twisted_bundle;
use mw_core::io::catalog::{self, verify_entry};
use mw_core::io::realize::{realization_check, Embedding};
use mw_core::iso::{are_isomorphic, canonical_form};
use mw_core::{par, Error, Face};

fn keep() -> CensusOptions {
    CensusOptions { cap: None, keep_representatives: true }
}

#[test]
fn representatives_are_closed_surfaces_in_canonical_form() {
    for n in 4..=8 {
        let r = enumerate_surfaces_with(n, &keep()).unwrap();
        let total = r.total();
        let reps = r.representatives.unwrap();
        assert_eq!(reps.len() as u64, total);
        for (class, c) in &reps {
            assert_eq!(c.dim(), 2);
            assert_eq!(c.n(), n);
            for v in 1..=n as u32 {
                let link = c.vertex_link(v).unwrap();
                assert!(link.is_connected() && link.facet_degrees().iter().all(|&k| k == 2), "n={n} v={v}");
            }
            for e in c.faces(2) {
                assert_eq!(c.facets().iter().filter(|t| t.includes(&e)).count(), 2);
            }
            assert_eq!(canonical_form(c).0, *c);
            assert_eq!(classify_surface(c).unwrap(), *class);
        }
        for (i, (_, a)) in reps.iter().enumerate() {
            for (_, b) in &reps[i + 1..] {
                assert!(!are_isomorphic(a, b), "n={n}: duplicate class");
            }
        }
    }
}

#[test]
fn sphere_representatives_are_distinct() {
    let r = enumerate_spheres_with(8, &keep()).unwrap();
    let reps = r.representatives.unwrap();
    assert_eq!(reps.len(), 14);
    for (i, (_, a)) in reps.iter().enumerate() {
        assert_eq!(classify_surface(a).unwrap().name(), "S2");
        for (_, b) in &reps[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let one = par::install(1, || enumerate_surfaces(8).unwrap());
    let two = par::install(2, || enumerate_surfaces(8).unwrap());
    assert_eq!(one.counts, two.counts);
    assert_eq!(one.lines(), two.lines());
}

#[test]
fn no_surface_below_its_heawood_number() {
    for n in 4..=9 {
        for class in enumerate_surfaces(n).unwrap().counts.keys() {
            let min = heawood_min_vertices(class.chi, is_exceptional_surface(class.chi, class.orientable));
            assert!(n as u64 >= min, "{} at n={n}", class.name());
        }
    }
}

#[test]
fn caps_are_enforced() {
    assert!(matches!(enumerate_surfaces(11), Err(Error::CapExceeded { .. })));
    let opts = CensusOptions { cap: Some(6), keep_representatives: false };
    assert!(matches!(enumerate_surfaces_with(7, &opts), Err(Error::CapExceeded { .. })));
    assert!(matches!(enumerate_spheres_with(13, &CensusOptions::default()), Err(Error::CapExceeded { .. })));
}

#[test]
fn classification_examples() {
    let torus = classify_surface(&common::load("csaszar-torus")).unwrap();
    assert_eq!((torus.orientable, torus.genus, torus.chi), (true, 1, 0));
    let rp2 = classify_surface(&catalog::fixture("RP2-6").unwrap()).unwrap();
    assert_eq!((rp2.orientable, rp2.genus, rp2.chi), (false, 1, 1));
    let klein = classify_surface(&twisted_bundle(2).unwrap()).unwrap();
    assert_eq!((klein.orientable, klein.genus, klein.chi), (false, 2, 0));
    assert_eq!(klein.name(), "K2");
    assert!(matches!(classify_surface(&common::load("RP3-11")), Err(Error::NotASurface(_))));
}

#[test]
fn every_catalog_check_passes() {
    for e in catalog::catalog().unwrap() {
        for line in verify_entry(&e) {
            assert!(line.ok(), "{}: {line}", e.name());
        }
    }
}

#[test]
fn catalog_identifies_relabelled_entries() {
    let mut g = common::rng(5);
    for e in catalog::catalog().unwrap() {
        let r = common::random_relabel(&e.complex, &mut g);
        assert_eq!(catalog::identify(&r).map(|x| x.name()), Some(e.name()));
    }
    assert!(catalog::identify(&catalog::fixture("RP2-6").unwrap()).is_none());
}

#[test]
fn realization_is_deterministic_and_exact() {
    let e = catalog::entry("csaszar-torus").unwrap();
    let emb = e.embedding.clone().unwrap();
    let a = realization_check(&e.complex, &emb).unwrap();
    let b = realization_check(&e.complex, &emb).unwrap();
    assert!(a.valid && a.exact);
    assert_eq!(a, b);

    // the same coordinates attached to a relabelled torus generally self-intersect
    let moved = common::random_relabel(&e.complex, &mut common::rng(1));
    let v1 = realization_check(&moved, &emb).unwrap();
    let v2 = realization_check(&moved, &emb).unwrap();
    assert_eq!(v1, v2);

    let text = "1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1.5\n";
    let float = Embedding::parse(text).unwrap();
    let tet = mw_core::construct::boundary_simplex(2);
    let v = realization_check(&tet, &float).unwrap();
    assert!(v.valid && !v.exact);
}

#[test]
fn letter_labels() {
    let text = "2 12\n1 2 a\n";
    let err = mw_core::io::parse(text).unwrap_err();
    assert!(matches!(err, Error::HeaderMismatch { .. }), "{err}");
    let c = mw_core::io::parse("1 11\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 a\na b\n1 b\n").unwrap();
    assert!(c.has_face(&Face::new(vec![9, 10]).unwrap()));
    assert!(c.has_face(&Face::new(vec![1, 11]).unwrap()));
    assert!(!mw_core::io::write(&c).contains('a'));
}
