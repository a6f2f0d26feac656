//! Bundled triangulations with their expected invariants.
//!
//! Files are compiled in; setting `MW_CATALOG_DIR` reads `<dir>/<name>.tri`
//! (and `<name>.coords`) from disk instead.

use std::fmt;

use num_bigint::BigInt;

use super::realize::{realization_check, Embedding};
use crate::census::classify_surface;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology::{homology, HomologyVector};
use crate::iso::{as_determinant, as_link_determinants, automorphism_group};

pub const CATALOG_ENV: &str = "MW_CATALOG_DIR";

/// Static description of an entry; the complex itself is loaded separately.
#[derive(Clone, Debug)]
pub struct EntrySpec {
    pub name: &'static str,
    pub description: &'static str,
    /// Manifold name understood by the bounds hints.
    pub manifold: &'static str,
    pub f: &'static [u64],
    pub homology: &'static str,
    pub as_det: Option<&'static str>,
    /// `(determinant, multiplicity)` over all vertex links.
    pub link_dets: &'static [(&'static str, usize)],
    pub aut_order: Option<u128>,
    /// Name of the automorphism group as usually written; not checked.
    pub group_name: Option<&'static str>,
    pub neighborly: Option<usize>,
    /// `(orientable, genus)` for surfaces.
    pub surface: Option<(bool, u32)>,
    source: &'static str,
    coords: Option<&'static str>,
}

const SPECS: &[EntrySpec] = &[
    EntrySpec {
        name: "RP3-11",
        description: "real projective 3-space",
        manifold: "RP3",
        f: &[11, 51, 80, 40],
        homology: "(Z,Z_2,0,Z)",
        as_det: None,
        link_dets: &[("41616", 6), ("12096", 4), ("0", 1)],
        aut_order: Some(48),
        group_name: Some("2S4"),
        neighborly: None,
        surface: None,
        source: include_str!("../../catalog/RP3-11.tri"),
        coords: None,
    },
    EntrySpec {
        name: "L31-12",
        description: "lens space L(3,1)",
        manifold: "L31",
        f: &[12, 66, 108, 54],
        homology: "(Z,Z_3,0,Z)",
        as_det: None,
        link_dets: &[],
        aut_order: Some(6),
        group_name: Some("S3"),
        neighborly: Some(2),
        surface: None,
        source: include_str!("../../catalog/L31-12.tri"),
        coords: None,
    },
    EntrySpec {
        name: "S2xS2-11",
        description: "S^2 x S^2",
        manifold: "S2xS2",
        f: &[11, 55, 150, 170, 68],
        homology: "(Z,0,Z^2,0,Z)",
        as_det: None,
        link_dets: &[],
        aut_order: None,
        group_name: None,
        neighborly: Some(2),
        surface: None,
        source: include_str!("../../catalog/S2xS2-11.tri"),
        coords: None,
    },
    EntrySpec {
        name: "S3xtS1-12",
        description: "twisted S^3-bundle over S^1",
        manifold: "S3xtS1",
        f: &[12, 60, 120, 120, 48],
        homology: "(Z,Z,0,Z_2,0)",
        as_det: None,
        link_dets: &[],
        aut_order: None,
        group_name: None,
        neighborly: None,
        surface: None,
        source: include_str!("../../catalog/S3xtS1-12.tri"),
        coords: None,
    },
    EntrySpec {
        name: "S3xS2-a-12",
        description: "S^3 x S^2, example a",
        manifold: "S3xS2",
        f: &[12, 66, 220, 390, 336, 112],
        homology: "(Z,0,Z,Z,0,Z)",
        as_det: Some("4471184572226676864"),
        link_dets: &[],
        aut_order: None,
        group_name: None,
        neighborly: Some(3),
        surface: None,
        source: include_str!("../../catalog/S3xS2-a-12.tri"),
        coords: None,
    },
    EntrySpec {
        name: "S3xS3-a-13",
        description: "S^3 x S^3, example a",
        manifold: "S3xS3",
        f: &[13, 78, 286, 715, 1014, 728, 208],
        homology: "(Z,0,0,Z^2,0,0,Z)",
        as_det: Some("745714154823444619853824"),
        link_dets: &[],
        aut_order: None,
        group_name: None,
        neighborly: Some(4),
        surface: None,
        source: include_str!("../../catalog/S3xS3-a-13.tri"),
        coords: None,
    },
    EntrySpec {
        name: "csaszar-torus",
        description: "Csaszar torus",
        manifold: "T2",
        f: &[7, 21, 14],
        homology: "(Z,Z^2,Z)",
        as_det: None,
        link_dets: &[],
        aut_order: None,
        group_name: None,
        neighborly: Some(2),
        surface: Some((true, 1)),
        source: include_str!("../../catalog/csaszar-torus.tri"),
        coords: Some(include_str!("../../catalog/csaszar-torus.coords")),
    },
];

const FIXTURES: &[(&str, &str)] = &[
    ("RP2-6", include_str!("../../fixtures/RP2-6.tri")),
    ("CP2-9", include_str!("../../fixtures/CP2-9.tri")),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: &'static EntrySpec,
    pub complex: Complex,
    pub embedding: Option<Embedding>,
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.spec.name
    }
}

fn load_text(name: &str, ext: &str, bundled: &'static str) -> Result<String> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => Ok(std::fs::read_to_string(std::path::Path::new(&dir).join(format!("{name}.{ext}")))?),
        None => Ok(bundled.to_string()),
    }
}

fn load(spec: &'static EntrySpec) -> Result<CatalogEntry> {
    let complex = super::parse(&load_text(spec.name, "tri", spec.source)?)?;
    let embedding = match spec.coords {
        Some(c) => Some(Embedding::parse(&load_text(spec.name, "coords", c)?)?),
        None => None,
    };
    Ok(CatalogEntry { spec, complex, embedding })
}

/// All seven entries, in a fixed order.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    SPECS.iter().map(load).collect()
}

pub fn names() -> Vec<&'static str> {
    SPECS.iter().map(|s| s.name).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    SPECS.iter().find(|s| s.name.eq_ignore_ascii_case(name)).map(load).unwrap_or_else(|| Err(Error::UnknownEntry(name.into())))
}

/// Auxiliary complexes used in tests (`RP2-6`, `CP2-9`).
pub fn fixture(name: &str) -> Result<Complex> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownEntry(name.into()))?;
    super::parse(text)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub what: &'static str,
    pub expected: String,
    pub found: String,
}

impl CheckLine {
    pub fn ok(&self) -> bool {
        self.expected == self.found
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok   {}: {}", self.what, self.found)
        } else {
            write!(f, "FAIL {}: expected {}, found {}", self.what, self.expected, self.found)
        }
    }
}

fn multiset(dets: &[BigInt]) -> String {
    let mut counts: Vec<(BigInt, usize)> = Vec::new();
    for d in dets {
        match counts.iter_mut().find(|(x, _)| x == d) {
            Some((_, k)) => *k += 1,
            None => counts.push((d.clone(), 1)),
        }
    }
    counts.sort_by(|a, b| b.0.cmp(&a.0));
    let parts: Vec<String> = counts.iter().map(|(d, k)| format!("{d}x{k}")).collect();
    parts.join(",")
}

/// Recomputes every expected value of the entry.
pub fn verify_entry(e: &CatalogEntry) -> Vec<CheckLine> {
    let s = e.spec;
    let c = &e.complex;
    let mut out = Vec::new();
    let fv = c.f_vector();
    out.push(CheckLine { what: "f-vector", expected: format!("{:?}", s.f), found: format!("{:?}", fv.counts) });
    let h = homology(c);
    let want = HomologyVector::parse(s.homology).map(|h| h.to_string()).unwrap_or_else(|| s.homology.to_string());
    out.push(CheckLine { what: "homology", expected: want, found: h.to_string() });
    out.push(CheckLine { what: "euler", expected: h.euler().to_string(), found: fv.euler.to_string() });
    if let Some(det) = s.as_det {
        out.push(CheckLine { what: "AS determinant", expected: det.into(), found: as_determinant(c).to_string() });
    }
    if !s.link_dets.is_empty() {
        let mut want: Vec<BigInt> = Vec::new();
        for (d, k) in s.link_dets {
            want.extend(std::iter::repeat_n(d.parse::<BigInt>().expect("valid literal"), *k));
        }
        out.push(CheckLine {
            what: "link determinants",
            expected: multiset(&want),
            found: multiset(&as_link_determinants(c)),
        });
    }
    if let Some(order) = s.aut_order {
        out.push(CheckLine {
            what: "automorphism order",
            expected: order.to_string(),
            found: automorphism_group(c).order.to_string(),
        });
    }
    if let Some(k) = s.neighborly {
        out.push(CheckLine {
            what: "neighborly",
            expected: format!("{k}-neighborly"),
            found: format!("{}-neighborly", c.neighborliness()),
        });
    }
    if let Some((o, g)) = s.surface {
        let found = match classify_surface(c) {
            Ok(cl) => format!("orientable={} genus={}", cl.orientable, cl.genus),
            Err(err) => err.to_string(),
        };
        out.push(CheckLine { what: "surface", expected: format!("orientable={o} genus={g}"), found });
    }
    if let Some(emb) = &e.embedding {
        let found = match realization_check(c, emb) {
            Ok(v) if v.valid => "valid".to_string(),
            Ok(v) => format!("invalid: {}", v.problems.join("; ")),
            Err(err) => err.to_string(),
        };
        out.push(CheckLine { what: "realization", expected: "valid".into(), found });
    }
    out
}

/// The catalog entry isomorphic to `c`, if any.
pub fn identify(c: &Complex) -> Option<CatalogEntry> {
    let f = c.f_vector();
    SPECS
        .iter()
        .filter(|s| s.f == f.counts.as_slice())
        .filter_map(|s| load(s).ok())
        .find(|e| crate::iso::are_isomorphic(c, &e.complex))
}
