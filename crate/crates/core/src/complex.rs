//! The complex data model and purely combinatorial queries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::util::{binomial, combinations};

/// A vertex label. Inside a [`Complex`] labels always form the range `1..=n`.
pub type Label = u32;

/// A face as a strictly increasing vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<Label>);

impl Face {
    /// Sorts the labels; fails on repeated labels.
    pub fn new(mut vertices: Vec<Label>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex { index: 0, label: w[0] });
        }
        Ok(Face(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<Label>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension `|F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Label) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True when every vertex of `other` is a vertex of `self`.
    pub fn includes(&self, other: &Face) -> bool {
        let mut it = self.0.iter();
        other.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        other.0.iter().all(|v| !self.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<Label> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// All subfaces with `k` vertices.
    pub fn subfaces(&self, k: usize) -> impl Iterator<Item = Face> {
        combinations(&self.0, k).into_iter().map(Face)
    }

    /// Bit mask of the labels (bit `v - 1` for label `v`); requires labels ≤ 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | 1u64 << (v - 1))
    }

    pub fn from_mask(mask: u64) -> Face {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros();
            out.push(b + 1);
            m &= m - 1;
        }
        Face(out)
    }

    pub fn into_vec(self) -> Vec<Label> {
        self.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl From<&[Label]> for Face {
    fn from(v: &[Label]) -> Self {
        Face::new(v.to_vec()).expect("face with repeated vertex")
    }
}

/// A pure simplicial complex stored as a sorted, duplicate-free facet list on
/// the labels `1..=n`.
///
/// The labels of the input are compacted on construction; `original_labels`
/// remembers the input label of every vertex for reporting. It does not take
/// part in equality.
#[derive(Clone, Debug)]
pub struct Complex {
    dim: usize,
    n: usize,
    facets: Vec<Face>,
    original: Vec<Label>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.n == other.n && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl std::hash::Hash for Complex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.n.hash(state);
        self.facets.hash(state);
    }
}

impl Complex {
    /// Canonicalises a raw facet list: labels are compacted to `1..=n` keeping
    /// their relative order, facets are deduplicated and sorted.
    pub fn from_facets<I, F>(raw: I) -> Result<Complex>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Label]>,
    {
        let mut facets: Vec<Vec<Label>> = Vec::new();
        for (index, f) in raw.into_iter().enumerate() {
            let mut v = f.as_ref().to_vec();
            if v.is_empty() {
                return Err(Error::EmptyFacet(index));
            }
            v.sort_unstable();
            if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { index, label: w[0] });
            }
            facets.push(v);
        }
        if facets.is_empty() {
            return Err(Error::Empty);
        }
        facets.sort();
        facets.dedup();

        // strict containment is reported before purity
        let faces: Vec<Face> = facets.into_iter().map(Face).collect();
        if let Some(e) = find_containment(&faces) {
            return Err(e);
        }
        let d = faces[0].len();
        if let Some(f) = faces.iter().find(|f| f.len() != d) {
            return Err(Error::NotPure { expected: d - 1, found: f.len() - 1 });
        }
        Ok(Self::compact(d - 1, faces, None))
    }

    /// Builds from facets already known to be pure and simplicial; only the
    /// label compaction and sorting are performed. Allows dimension 0.
    pub(crate) fn from_trusted(dim: usize, facets: Vec<Face>, parent: Option<&[Label]>) -> Complex {
        let mut facets = facets;
        facets.sort();
        facets.dedup();
        Self::compact(dim, facets, parent)
    }

    fn compact(dim: usize, facets: Vec<Face>, parent: Option<&[Label]>) -> Complex {
        let labels: BTreeSet<Label> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        let map: FxHashMap<Label, Label> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as Label + 1)).collect();
        let identity = labels.iter().enumerate().all(|(i, &l)| l == i as Label + 1);
        let mut facets: Vec<Face> = if identity {
            facets
        } else {
            facets
                .into_iter()
                .map(|f| Face(f.0.iter().map(|v| map[v]).collect()))
                .collect()
        };
        facets.sort();
        let original = labels
            .iter()
            .map(|&l| match parent {
                Some(p) => p[l as usize - 1],
                None => l,
            })
            .collect();
        Complex { dim, n: labels.len(), facets, original }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Input label of every vertex, indexed by `label - 1`.
    pub fn original_labels(&self) -> &[Label] {
        &self.original
    }

    /// Facet list as plain label vectors.
    pub fn facet_lists(&self) -> Vec<Vec<Label>> {
        self.facets.iter().map(|f| f.0.clone()).collect()
    }

    /// Facets as bit masks, when `n ≤ 64`.
    pub fn facet_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.facets.iter().map(Face::mask).collect())
    }

    /// Applies a vertex relabelling `perm[v - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[Label]) -> Complex {
        assert_eq!(perm.len(), self.n);
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut v: Vec<Label> = f.0.iter().map(|&x| perm[x as usize - 1]).collect();
                v.sort_unstable();
                Face(v)
            })
            .collect();
        let mut c = Self::from_trusted(self.dim, facets, None);
        let mut original = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            original[p as usize - 1] = self.original[i];
        }
        c.original = original;
        c
    }

    /// All faces with `k` vertices, sorted lexicographically.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        if k == 0 || k > self.dim + 1 {
            return Vec::new();
        }
        if k == self.dim + 1 {
            return self.facets.clone();
        }
        if k == 1 {
            return (1..=self.n as Label).map(|v| Face(vec![v])).collect();
        }
        let mut out: Vec<Face> = self.facets.iter().flat_map(|f| f.subfaces(k)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether `face` lies in some facet.
    pub fn has_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| f.includes(face))
    }

    /// Face vector `(f_0, …, f_d)` together with the Euler characteristic.
    pub fn f_vector(&self) -> FVector {
        let counts = if self.n <= 64 {
            self.f_vector_masks()
        } else {
            (1..=self.dim + 1).map(|k| self.faces(k).len() as u64).collect()
        };
        FVector::new(counts)
    }

    fn f_vector_masks(&self) -> Vec<u64> {
        let mut seen: Vec<rustc_hash::FxHashSet<u64>> = vec![Default::default(); self.dim + 1];
        for f in &self.facets {
            let verts = &f.0;
            let m = verts.len();
            for sub in 1u32..(1u32 << m) {
                let mut mask = 0u64;
                for (i, v) in verts.iter().enumerate() {
                    if sub >> i & 1 == 1 {
                        mask |= 1u64 << (v - 1);
                    }
                }
                seen[sub.count_ones() as usize - 1].insert(mask);
            }
        }
        seen.iter().map(|s| s.len() as u64).collect()
    }

    /// Facets containing `face`, as a complex with compacted labels.
    pub fn star(&self, face: &Face) -> Result<Complex> {
        let facets: Vec<Face> = self.facets.iter().filter(|f| f.includes(face)).cloned().collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(face.clone()));
        }
        Ok(Self::from_trusted(self.dim, facets, Some(&self.original)))
    }

    /// Link of `face`: `{G \ F : G a facet containing F}`, of dimension `d - |F|`.
    pub fn link(&self, face: &Face) -> Result<Complex> {
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.includes(face))
            .map(|f| f.difference(face))
            .collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(face.clone()));
        }
        if face.len() > self.dim {
            return Err(Error::EmptyLink(face.clone()));
        }
        Ok(Self::from_trusted(self.dim - face.len(), facets, Some(&self.original)))
    }

    pub fn vertex_link(&self, v: Label) -> Result<Complex> {
        self.link(&Face(vec![v]))
    }

    /// Every ridge in exactly two facets and the facet adjacency graph connected.
    pub fn is_pseudomanifold(&self) -> ManifoldVerdict {
        let mut ridges: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for r in f.subfaces(self.dim) {
                ridges.entry(r).or_default().push(i);
            }
        }
        if let Some((r, fs)) = ridges.iter().find(|(_, fs)| fs.len() != 2) {
            return ManifoldVerdict::no(Witness::BadRidge { ridge: r.clone(), degree: fs.len() });
        }
        let mut uf = UnionFind::new(self.facets.len());
        for fs in ridges.values() {
            uf.union(fs[0], fs[1]);
        }
        let comps = uf.count();
        if comps > 1 {
            return ManifoldVerdict::no(Witness::Disconnected { components: comps });
        }
        ManifoldVerdict::yes()
    }

    /// Every `k`-subset of the vertices is a face.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.dim + 1 {
            return false;
        }
        self.f_vector().counts[k - 1] as i128 == binomial(self.n as i64, k as i64)
    }

    /// Largest `k` with the complex `k`-neighborly.
    pub fn neighborliness(&self) -> usize {
        let f = self.f_vector();
        (1..=self.dim + 1)
            .take_while(|&k| f.counts[k - 1] as i128 == binomial(self.n as i64, k as i64))
            .last()
            .unwrap_or(0)
    }

    /// Vertex set of every connected component (via shared vertices).
    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for f in &self.facets {
            for w in f.0.windows(2) {
                uf.union(w[0] as usize - 1, w[1] as usize - 1);
            }
        }
        uf.count() <= 1
    }

    /// Vertex degrees counted in facets.
    pub fn facet_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for f in &self.facets {
            for &v in &f.0 {
                deg[v as usize - 1] += 1;
            }
        }
        deg
    }
}

fn find_containment(faces: &[Face]) -> Option<Error> {
    let mut by_len: Vec<&Face> = faces.iter().collect();
    by_len.sort_by_key(|f| f.len());
    let max = by_len.last()?.len();
    if by_len[0].len() == max {
        return None;
    }
    for (i, a) in by_len.iter().enumerate() {
        if a.len() == max {
            break;
        }
        for b in &by_len[i + 1..] {
            if b.len() > a.len() && b.includes(a) {
                return Some(Error::ContainedFacet { inner: (*a).clone(), outer: (*b).clone() });
            }
        }
    }
    None
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Face counts `(f_0, …, f_d)` and the Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector {
    pub counts: Vec<u64>,
    pub euler: i64,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        let euler = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        FVector { counts, euler }
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn n(&self) -> u64 {
        self.counts[0]
    }

    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Evidence attached to a negative or inconclusive verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    BadRidge { ridge: Face, degree: usize },
    Disconnected { components: usize },
    NotPseudomanifold { vertex: Label, reason: String },
    NonSphereLink { vertex: Label, reason: String },
    BudgetExhausted { vertex: Label, best_vertices: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::BadRidge { ridge, degree } => {
                write!(f, "ridge {ridge} lies in {degree} facets")
            }
            Witness::Disconnected { components } => {
                write!(f, "facet graph has {components} components")
            }
            Witness::NotPseudomanifold { vertex, reason } => {
                write!(f, "link of vertex {vertex} is not a pseudomanifold: {reason}")
            }
            Witness::NonSphereLink { vertex, reason } => {
                write!(f, "link of vertex {vertex} is not a sphere: {reason}")
            }
            Witness::BudgetExhausted { vertex, best_vertices } => write!(
                f,
                "flip budget exhausted on the link of vertex {vertex} (best {best_vertices} vertices)"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub status: Verdict,
    pub witness: Option<Witness>,
}

impl ManifoldVerdict {
    pub fn yes() -> Self {
        ManifoldVerdict { status: Verdict::Yes, witness: None }
    }

    pub fn no(w: Witness) -> Self {
        ManifoldVerdict { status: Verdict::No, witness: Some(w) }
    }

    pub fn unknown(w: Witness) -> Self {
        ManifoldVerdict { status: Verdict::Unknown, witness: Some(w) }
    }

    pub fn is_yes(&self) -> bool {
        self.status == Verdict::Yes
    }
}

impl fmt::Display for ManifoldVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.status {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        };
        match &self.witness {
            Some(w) => write!(f, "{s} ({w})"),
            None => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Complex {
        Complex::from_facets([[1, 2], [2, 3], [1, 3]]).unwrap()
    }

    #[test]
    fn triangle_boundary() {
        let c = triangle();
        assert_eq!((c.dim(), c.n(), c.num_facets()), (1, 3, 3));
        assert_eq!(c.f_vector().counts, vec![3, 3]);
        assert_eq!(c.f_vector().euler, 0);
    }

    #[test]
    fn labels_are_compacted() {
        let c = Complex::from_facets([[10, 20], [20, 35], [10, 35]]).unwrap();
        assert_eq!(c, triangle());
        assert_eq!(c.original_labels(), &[10, 20, 35]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Complex::from_facets(vec![vec![1, 2, 3], vec![4, 5]]),
            Err(Error::NotPure { .. })
        ));
        assert!(matches!(
            Complex::from_facets(vec![vec![1, 2, 3], vec![1, 2]]),
            Err(Error::ContainedFacet { .. })
        ));
        assert!(matches!(Complex::from_facets(Vec::<Vec<u32>>::new()), Err(Error::Empty)));
        let points = Complex::from_facets([[1], [2]]).unwrap();
        assert_eq!((points.dim(), points.n()), (0, 2));
        assert!(matches!(Complex::from_facets([[1, 1]]), Err(Error::RepeatedVertex { .. })));
    }

    #[test]
    fn duplicates_are_merged() {
        let c = Complex::from_facets([[2, 1], [1, 2], [2, 3], [3, 1]]).unwrap();
        assert_eq!(c, triangle());
    }

    #[test]
    fn links_and_stars() {
        let tet = Complex::from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        let l = tet.vertex_link(1).unwrap();
        assert_eq!(l, triangle());
        assert_eq!(l.original_labels(), &[2, 3, 4]);
        let s = tet.star(&Face::from(&[1u32][..])).unwrap();
        assert_eq!(s.num_facets(), 3);
        assert!(matches!(tet.link(&Face::from(&[1u32, 5][..])), Err(Error::NotAFace(_))));
        let edge_link = tet.link(&Face::from(&[1u32, 2][..])).unwrap();
        assert_eq!(edge_link.dim(), 0);
        assert_eq!(edge_link.n(), 2);
    }

    #[test]
    fn pseudomanifold_witnesses() {
        assert!(triangle().is_pseudomanifold().is_yes());
        let pendant = Complex::from_facets([[1, 2], [2, 3], [1, 3], [3, 4]]).unwrap();
        let v = pendant.is_pseudomanifold();
        assert_eq!(v.status, Verdict::No);
        assert!(matches!(v.witness, Some(Witness::BadRidge { .. })));
        let two = Complex::from_facets([
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 4],
            [2, 3, 4],
            [5, 6, 7],
            [5, 6, 8],
            [5, 7, 8],
            [6, 7, 8],
        ])
        .unwrap();
        assert_eq!(
            two.is_pseudomanifold().witness,
            Some(Witness::Disconnected { components: 2 })
        );
    }

    #[test]
    fn neighborliness() {
        let tet = Complex::from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert!(tet.is_k_neighborly(1));
        assert!(tet.is_k_neighborly(2));
        assert!(tet.is_k_neighborly(3));
        assert!(!tet.is_k_neighborly(4));
        assert_eq!(tet.neighborliness(), 3);
    }

    #[test]
    fn face_masks_roundtrip() {
        let f = Face::from(&[1u32, 4, 9][..]);
        assert_eq!(Face::from_mask(f.mask()), f);
    }
}
