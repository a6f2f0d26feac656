//! Incremental bit-mask representation used by the reducer.

use indexmap::IndexSet;
use rustc_hash::{FxBuildHasher, FxHashMap};

use crate::complex::{Complex, Face};

/// Bit `n` must stay free for the vertex a 0-move introduces.
pub(crate) const MAX_VERTICES: usize = 63;

type MaskSet = IndexSet<u64, FxBuildHasher>;

/// Facets plus, for every face, the number of facets containing it.
/// `cand[i]` holds the faces with `d-i+1` vertices lying in exactly `i+1`
/// facets, the only possible removal faces of an `i`-move.
#[derive(Clone)]
pub(crate) struct MaskState {
    pub d: usize,
    pub n: usize,
    facets: MaskSet,
    count: FxHashMap<u64, u32>,
    cand: Vec<MaskSet>,
    pub f: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RawMove {
    pub kind: usize,
    pub remove: u64,
    pub insert: u64,
}

impl MaskState {
    pub fn new(c: &Complex) -> Self {
        assert!(c.n() <= MAX_VERTICES, "too many vertices for the flip engine");
        let masks = c.facet_masks().expect("n <= 63");
        Self::from_masks(c.dim(), c.n(), masks)
    }

    fn from_masks(d: usize, n: usize, masks: impl IntoIterator<Item = u64>) -> Self {
        let mut s = MaskState {
            d,
            n,
            facets: MaskSet::default(),
            count: FxHashMap::default(),
            cand: vec![MaskSet::default(); d + 1],
            f: vec![0; d + 1],
        };
        for m in masks {
            s.add_facet(m);
        }
        s
    }

    pub fn to_complex(&self) -> Complex {
        let facets = self.facets.iter().map(|&m| Face::from_mask(m)).collect();
        Complex::from_trusted(self.d, facets, None)
    }

    pub fn candidates(&self, i: usize) -> &MaskSet {
        &self.cand[i]
    }

    fn bump(&mut self, face: u64, up: bool) {
        let s = face.count_ones() as usize;
        let entry = self.count.entry(face).or_insert(0);
        let old = *entry;
        let new = if up { old + 1 } else { old - 1 };
        *entry = new;
        if new == 0 {
            self.count.remove(&face);
            self.f[s - 1] -= 1;
        } else if old == 0 {
            self.f[s - 1] += 1;
        }
        let i = self.d + 1 - s;
        let want = (i + 1) as u32;
        if old == want {
            self.cand[i].swap_remove(&face);
        }
        if new == want {
            self.cand[i].insert(face);
        }
    }

    fn add_facet(&mut self, m: u64) {
        self.facets.insert(m);
        let mut sub = m;
        while sub != 0 {
            self.bump(sub, true);
            sub = (sub - 1) & m;
        }
    }

    fn remove_facet(&mut self, m: u64) {
        self.facets.swap_remove(&m);
        let mut sub = m;
        while sub != 0 {
            self.bump(sub, false);
            sub = (sub - 1) & m;
        }
    }

    pub fn is_face(&self, m: u64) -> bool {
        self.count.contains_key(&m)
    }

    /// The face `B` completing a legal move at candidate `a`, if any.
    pub fn legal_insert(&self, kind: usize, a: u64) -> Option<u64> {
        if kind == 0 {
            return Some(1u64 << self.n);
        }
        let mut link = 0u64;
        let mut found = 0;
        for w in 0..self.n {
            let bit = 1u64 << w;
            if a & bit == 0 && self.count.contains_key(&(a | bit)) {
                link |= bit;
                found += 1;
                if found > kind + 1 {
                    return None;
                }
            }
        }
        (found == kind + 1 && !self.is_face(link)).then_some(link)
    }

    pub fn apply(&mut self, m: RawMove) {
        let (a, b) = (m.remove, m.insert);
        let mut rest = b;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            self.remove_facet(a | (b ^ bit));
        }
        let mut rest = a;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            self.add_facet(b | (a ^ bit));
        }
        if m.kind == 0 {
            self.n += 1;
        } else if m.kind == self.d {
            self.n -= 1;
            let v = a.trailing_zeros() as usize;
            if v != self.n {
                self.compact_after(v);
            }
        }
    }

    /// Shifts the labels above the deleted vertex `v` down by one.
    fn compact_after(&mut self, v: usize) {
        let low = (1u64 << v) - 1;
        let shifted: Vec<u64> = self.facets.iter().map(|&m| (m & low) | ((m >> 1) & !low)).collect();
        *self = Self::from_masks(self.d, self.n, shifted);
    }

    /// Lexicographic comparison key.
    pub fn objective(&self) -> &[u64] {
        &self.f
    }
}
