//! Simplicial homology over the integers and over prime fields.

use std::fmt;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::par;
use crate::snf::{rank_mod_p, smith_normal_form, IntMatrix, SmithForm};

/// One homology group `Z^rank ⊕ Z_{t_1} ⊕ …` with torsion in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        HomologyGroup { free_rank, torsion: torsion.to_vec() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == t).count();
            if run == 1 {
                parts.push(format!("Z_{t}"));
            } else {
                parts.push(format!("Z_{t}^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Unreduced integral homology `H_0, …, H_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyVector {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyVector {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.free_rank).collect()
    }

    pub fn euler(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| if i % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
            .sum()
    }

    /// Homology of the `d`-sphere.
    pub fn sphere(d: usize) -> Self {
        let mut groups = vec![HomologyGroup::free(0); d + 1];
        groups[0] = HomologyGroup::free(1);
        groups[d] = HomologyGroup::free(1);
        if d == 0 {
            groups[0] = HomologyGroup::free(2);
        }
        HomologyVector { groups }
    }

    /// Parses `(Z,Z_2,0,Z)`-style notation: terms joined by `+`, `Z^k`, `Z_t`, `Z_t^k`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut groups = Vec::new();
        for part in s.split(',') {
            let mut g = HomologyGroup::free(0);
            let part = part.trim();
            if part != "0" {
                for term in part.split('+') {
                    let term = term.trim();
                    let (base, exp) = match term.split_once('^') {
                        Some((b, e)) => (b, e.parse::<usize>().ok()?),
                        None => (term, 1),
                    };
                    if base == "Z" {
                        g.free_rank += exp;
                    } else {
                        let t: u64 = base.strip_prefix("Z_")?.parse().ok()?;
                        g.torsion.extend(std::iter::repeat_n(t, exp));
                    }
                }
            }
            g.torsion.sort_unstable();
            groups.push(g);
        }
        Some(HomologyVector { groups })
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub coefficients: Coefficients,
    pub ranks: Vec<usize>,
}

impl BettiVector {
    /// `β̃_0 = β_0 - 1`, all other entries unchanged.
    pub fn reduced(&self) -> Vec<i64> {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &b)| if i == 0 { b as i64 - 1 } else { b as i64 })
            .collect()
    }
}

/// All faces per dimension with a lookup index, in canonical (lexicographic) order.
struct FaceIndex {
    faces: Vec<Vec<Face>>,
    index: Vec<FxHashMap<Face, usize>>,
}

impl FaceIndex {
    fn new(c: &Complex) -> Self {
        let faces: Vec<Vec<Face>> = (0..=c.dim()).map(|k| c.faces(k + 1)).collect();
        let index = faces
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            .collect();
        FaceIndex { faces, index }
    }

    /// `∂_k`: rows are (k-1)-faces, columns are k-faces; the face obtained by
    /// deleting the i-th vertex (0-based) gets sign (-1)^i.
    fn boundary(&self, k: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.faces[k - 1].len(), self.faces[k].len());
        for (j, f) in self.faces[k].iter().enumerate() {
            let v = f.vertices();
            for i in 0..v.len() {
                let mut sub = v.to_vec();
                sub.remove(i);
                let r = self.index[k - 1][&Face::from_sorted(sub)];
                m.set(r, j, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

/// Boundary matrix `∂_k` for `1 ≤ k ≤ d` in the canonical face order.
pub fn boundary_matrix(c: &Complex, k: usize) -> IntMatrix {
    assert!(k >= 1 && k <= c.dim(), "boundary index out of range");
    FaceIndex::new(c).boundary(k)
}

/// Unreduced integral homology of the complex.
pub fn homology(c: &Complex) -> HomologyVector {
    let idx = FaceIndex::new(c);
    let d = c.dim();
    let forms: Vec<SmithForm> = par::map((1..=d).collect(), |k| smith_normal_form(&idx.boundary(k)));
    let rank = |k: usize| if k == 0 || k > d { 0 } else { forms[k - 1].rank };
    let groups = (0..=d)
        .map(|k| {
            let free_rank = idx.faces[k].len() - rank(k) - rank(k + 1);
            let torsion = if k < d {
                forms[k]
                    .torsion()
                    .iter()
                    .map(|t| u64::try_from(t).expect("torsion coefficient exceeds u64"))
                    .collect()
            } else {
                Vec::new()
            };
            HomologyGroup { free_rank, torsion }
        })
        .collect();
    HomologyVector { groups }
}

/// Betti numbers over `Q` (`p = 0`) or over `F_p`.
pub fn betti(c: &Complex, p: u64) -> BettiVector {
    let idx = FaceIndex::new(c);
    let d = c.dim();
    let ranks: Vec<usize> = par::map((1..=d).collect(), |k| {
        let m = idx.boundary(k);
        if p == 0 {
            smith_normal_form(&m).rank
        } else {
            rank_mod_p(&m, p)
        }
    });
    let rank = |k: usize| if k == 0 || k > d { 0 } else { ranks[k - 1] };
    let betti = (0..=d).map(|k| idx.faces[k].len() - rank(k) - rank(k + 1)).collect();
    BettiVector {
        coefficients: if p == 0 { Coefficients::Rationals } else { Coefficients::Prime(p) },
        ranks: betti,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

/// Coherent orientation propagation across ridges.
pub fn orientability(c: &Complex) -> Result<Orientability> {
    let verdict = c.is_pseudomanifold();
    if !verdict.is_yes() {
        return Err(Error::NotPseudomanifold(verdict.to_string()));
    }
    Ok(if coherent_orientation(c).is_some() {
        Orientability::Orientable
    } else {
        Orientability::NonOrientable
    })
}

/// Signs `±1` per facet (in facet order) making every ridge cancel, if any exist.
/// Assumes a strongly connected pseudomanifold.
pub fn coherent_orientation(c: &Complex) -> Option<Vec<i8>> {
    let d = c.dim();
    // ridge -> (facet, sign of the ridge in ∂facet)
    let mut ridges: FxHashMap<Face, Vec<(usize, i8)>> = FxHashMap::default();
    for (fi, f) in c.facets().iter().enumerate() {
        let v = f.vertices();
        for i in 0..=d {
            let mut sub = v.to_vec();
            sub.remove(i);
            ridges
                .entry(Face::from_sorted(sub))
                .or_default()
                .push((fi, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); c.num_facets()];
    for inc in ridges.values() {
        if inc.len() != 2 {
            return None;
        }
        let ((a, sa), (b, sb)) = (inc[0], inc[1]);
        // need orient[a]*sa = -orient[b]*sb
        let rel = -sa * sb;
        adj[a].push((b, rel));
        adj[b].push((a, rel));
    }
    let mut orient = vec![0i8; c.num_facets()];
    for start in 0..orient.len() {
        if orient[start] != 0 {
            continue;
        }
        orient[start] = 1;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &(b, rel) in &adj[a] {
                let want = orient[a] * rel;
                if orient[b] == 0 {
                    orient[b] = want;
                    stack.push(b);
                } else if orient[b] != want {
                    return None;
                }
            }
        }
    }
    Some(orient)
}

/// Top-dimensional homology criterion: `H_d ≅ Z`.
pub fn top_homology_is_z(h: &HomologyVector) -> bool {
    h.groups.last().is_some_and(|g| g.free_rank == 1 && g.torsion.is_empty())
}

/// The integer vector of invariant factors, for callers that need big values.
pub fn invariant_factors(c: &Complex, k: usize) -> Vec<BigInt> {
    smith_normal_form(&boundary_matrix(c, k)).factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Complex {
        Complex::from_facets([[1, 2], [2, 3], [1, 3]]).unwrap()
    }

    #[test]
    fn sign_convention() {
        let m = boundary_matrix(&tri(), 1);
        // column 0 is the edge {1,2}: +1 at {2}, -1 at {1}
        assert_eq!(m.get(1, 0), 1);
        assert_eq!(m.get(0, 0), -1);
    }

    #[test]
    fn circle_homology() {
        let h = homology(&tri());
        assert_eq!(h.to_string(), "(Z,Z)");
        assert_eq!(h, HomologyVector::sphere(1));
    }

    #[test]
    fn parse_and_display() {
        let h = HomologyVector::parse("(Z, Z_2^2, 0, Z)").unwrap();
        assert_eq!(h.groups[1].torsion, vec![2, 2]);
        assert_eq!(h.to_string(), "(Z,Z_2^2,0,Z)");
        let h = HomologyVector::parse("(Z,Z+Z_2,0)").unwrap();
        assert_eq!(h.groups[1], HomologyGroup::new(1, &[2]));
    }

    #[test]
    fn orientation_of_circle() {
        assert_eq!(orientability(&tri()).unwrap(), Orientability::Orientable);
    }
}
