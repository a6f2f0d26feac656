//! Builders: simplices, joins, staircase products, connected sums, stacking
//! and sphere bundles over the circle.

use crate::complex::{Complex, Face, Label};
use crate::error::{Error, Result};
use crate::flip::{apply_move, FlipMove};
use crate::homology::coherent_orientation;
use crate::util::combinations;

/// Boundary of the `(d+1)`-simplex: a `d`-sphere on `d+2` vertices.
pub fn boundary_simplex(d: usize) -> Complex {
    assert!(d >= 1, "boundary_simplex needs d >= 1");
    let verts: Vec<Label> = (1..=d as Label + 2).collect();
    Complex::from_facets(combinations(&verts, d + 1)).expect("valid boundary")
}

/// The `d`-simplex as a single-facet complex.
pub fn simplex(d: usize) -> Complex {
    let verts: Vec<Label> = (1..=d as Label + 1).collect();
    Complex::from_trusted(d, vec![Face::from_sorted(verts)], None)
}

/// Path with `k ≥ 2` vertices `1 - 2 - … - k`.
pub fn path(k: usize) -> Complex {
    assert!(k >= 2);
    Complex::from_facets((1..k as Label).map(|i| [i, i + 1])).expect("valid path")
}

/// Join: all unions of a facet of `a` with a facet of `b`; labels of `b` follow those of `a`.
pub fn join(a: &Complex, b: &Complex) -> Complex {
    let shift = a.n() as Label;
    let mut facets = Vec::with_capacity(a.num_facets() * b.num_facets());
    for f in a.facets() {
        for g in b.facets() {
            let mut v = f.vertices().to_vec();
            v.extend(g.vertices().iter().map(|x| x + shift));
            facets.push(Face::from_sorted(v));
        }
    }
    Complex::from_trusted(a.dim() + b.dim() + 1, facets, None)
}

/// Cone from the new vertex `n+1`.
pub fn cone(c: &Complex) -> Complex {
    let apex = c.n() as Label + 1;
    let facets = c
        .facets()
        .iter()
        .map(|f| {
            let mut v = f.vertices().to_vec();
            v.push(apex);
            Face::from_sorted(v)
        })
        .collect();
    Complex::from_trusted(c.dim() + 1, facets, None)
}

/// Suspension with apexes `n+1` and `n+2`.
pub fn suspension(c: &Complex) -> Complex {
    let (p, q) = (c.n() as Label + 1, c.n() as Label + 2);
    let mut facets = Vec::with_capacity(2 * c.num_facets());
    for f in c.facets() {
        for apex in [p, q] {
            let mut v = f.vertices().to_vec();
            v.push(apex);
            facets.push(Face::from_sorted(v));
        }
    }
    Complex::from_trusted(c.dim() + 1, facets, None)
}

/// Staircase product with both factors ordered by label.
pub fn product(a: &Complex, b: &Complex) -> Complex {
    let oa: Vec<Label> = (1..=a.n() as Label).collect();
    let ob: Vec<Label> = (1..=b.n() as Label).collect();
    product_with_orders(a, b, &oa, &ob)
}

/// Staircase product. `order_a` / `order_b` list the vertices of each factor
/// in the linear order used to build the monotone staircases; the vertex
/// `(x, y)` gets label `(x-1)·n_b + y`.
pub fn product_with_orders(a: &Complex, b: &Complex, order_a: &[Label], order_b: &[Label]) -> Complex {
    let rank = |order: &[Label], n: usize| {
        assert_eq!(order.len(), n, "vertex order must list every vertex once");
        let mut r = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            r[v as usize - 1] = i;
        }
        assert!(r.iter().all(|&x| x != usize::MAX), "vertex order must list every vertex once");
        r
    };
    let (ra, rb) = (rank(order_a, a.n()), rank(order_b, b.n()));
    let nb = b.n() as Label;
    let (da, db) = (a.dim(), b.dim());
    let mut facets = Vec::new();
    for f in a.facets() {
        let mut fv = f.vertices().to_vec();
        fv.sort_by_key(|&v| ra[v as usize - 1]);
        for g in b.facets() {
            let mut gv = g.vertices().to_vec();
            gv.sort_by_key(|&v| rb[v as usize - 1]);
            // every shuffle of da right-steps and db up-steps
            for ups in combinations(&(0..da + db).collect::<Vec<_>>(), db) {
                let (mut x, mut y) = (0usize, 0usize);
                let mut verts = vec![(fv[0] - 1) * nb + gv[0]];
                for step in 0..da + db {
                    if ups.contains(&step) {
                        y += 1;
                    } else {
                        x += 1;
                    }
                    verts.push((fv[x] - 1) * nb + gv[y]);
                }
                verts.sort_unstable();
                facets.push(Face::from_sorted(verts));
            }
        }
    }
    Complex::from_trusted(da + db, facets, None)
}

/// Vertex correspondence between two facets used to glue their boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingMap {
    /// `(vertex of the first facet, vertex of the second facet)`.
    pub correspondence: Vec<(Label, Label)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// The sum carries the orientations of both summands.
    Preserve,
    /// The second summand enters with its orientation reversed.
    Reverse,
}

/// Sign of the facet at `index` under the coherent orientation normalised to
/// be positive on the first facet.
fn facet_sign(c: &Complex, facet: &Face) -> Option<i8> {
    let o = coherent_orientation(c)?;
    let i = c.facets().iter().position(|f| f == facet)?;
    Some(o[i] * o[0])
}

fn permutation_sign(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl GluingMap {
    /// Matches the vertices of both facets in increasing label order.
    pub fn by_order(f1: &Face, f2: &Face) -> Self {
        GluingMap { correspondence: f1.vertices().iter().copied().zip(f2.vertices().iter().copied()).collect() }
    }

    /// Label-order map, with the two smallest vertices of `f2` swapped when
    /// needed so the requested parity holds. Falls back to label order when
    /// either summand is non-orientable.
    pub fn oriented(c1: &Complex, f1: &Face, c2: &Complex, f2: &Face, parity: Parity) -> Self {
        let mut map = Self::by_order(f1, f2);
        if let (Some(s1), Some(s2)) = (facet_sign(c1, f1), facet_sign(c2, f2)) {
            // boundaries cancel when s1 = -s2·sgn(π)
            let want = -s1 * s2 * if parity == Parity::Preserve { 1 } else { -1 };
            if map.sign(f1, f2) != want {
                let (a, b) = (map.correspondence[0].1, map.correspondence[1].1);
                map.correspondence[0].1 = b;
                map.correspondence[1].1 = a;
            }
        }
        map
    }

    /// Sign of the permutation relating sorted `f1` to sorted `f2` under the map.
    fn sign(&self, f1: &Face, f2: &Face) -> i8 {
        let p: Vec<usize> = f1
            .vertices()
            .iter()
            .map(|v| {
                let w = self.correspondence.iter().find(|(x, _)| x == v).unwrap().1;
                f2.vertices().iter().position(|&y| y == w).unwrap()
            })
            .collect();
        permutation_sign(&p)
    }

    fn validate(&self, f1: &Face, f2: &Face) -> Result<()> {
        let mut left: Vec<Label> = self.correspondence.iter().map(|p| p.0).collect();
        let mut right: Vec<Label> = self.correspondence.iter().map(|p| p.1).collect();
        left.sort_unstable();
        right.sort_unstable();
        if left != f1.vertices() || right != f2.vertices() {
            return Err(Error::IncompatibleGluing(format!("map is not a bijection {f1} -> {f2}")));
        }
        Ok(())
    }
}

/// Removes `f1` and `f2` and glues along their boundaries. Vertices of `c1`
/// keep their labels; the remaining vertices of `c2` follow in label order.
/// Without a map the oriented label-order map ([`Parity::Preserve`]) is used.
pub fn connected_sum(c1: &Complex, f1: &Face, c2: &Complex, f2: &Face, map: Option<&GluingMap>) -> Result<Complex> {
    if c1.dim() != c2.dim() {
        return Err(Error::WrongDimension { expected: c1.dim(), found: c2.dim() });
    }
    for (c, f) in [(c1, f1), (c2, f2)] {
        if !c.facets().contains(f) {
            return Err(Error::NotAFacet(f.clone()));
        }
    }
    let default;
    let map = match map {
        Some(m) => m,
        None => {
            default = GluingMap::oriented(c1, f1, c2, f2, Parity::Preserve);
            &default
        }
    };
    map.validate(f1, f2)?;
    let mut relabel = vec![0 as Label; c2.n()];
    for &(a, b) in &map.correspondence {
        relabel[b as usize - 1] = a;
    }
    let mut next = c1.n() as Label;
    for v in 1..=c2.n() as Label {
        if !f2.contains(v) {
            next += 1;
            relabel[v as usize - 1] = next;
        }
    }
    let mut facets: Vec<Face> = c1.facets().iter().filter(|f| *f != f1).cloned().collect();
    for g in c2.facets().iter().filter(|g| *g != f2) {
        let mut v: Vec<Label> = g.vertices().iter().map(|&x| relabel[x as usize - 1]).collect();
        v.sort_unstable();
        facets.push(Face::from_sorted(v));
    }
    Ok(Complex::from_trusted(c1.dim(), facets, None))
}

/// Subdivides the facet `f` by a cone from the new vertex `n+1` (a 0-move).
pub fn stack(c: &Complex, f: &Face) -> Result<Complex> {
    if !c.facets().contains(f) {
        return Err(Error::NotAFacet(f.clone()));
    }
    let m = FlipMove { kind: 0, remove: f.clone(), insert: Face::from_sorted(vec![c.n() as Label + 1]) };
    apply_move(c, &m)
}

/// `∂Δ^d × I` on a 4-vertex interval with the ends identified through `sigma`
/// (a permutation of `1..=d+1`): level-3 vertex `x` becomes level-0 vertex `sigma(x)`.
fn mapping_torus(d: usize, sigma: &[Label]) -> Result<Complex> {
    let sphere = boundary_simplex(d - 1);
    let prod = product(&sphere, &path(4));
    let k = d as Label + 1;
    // product label of (x, y) is (x-1)·4 + y
    let target = |v: Label| -> Label {
        let (x, y) = ((v - 1) / 4 + 1, (v - 1) % 4 + 1);
        if y == 4 {
            (sigma[x as usize - 1] - 1) * 4 + 1
        } else {
            v
        }
    };
    let mut facets = Vec::with_capacity(prod.num_facets());
    for f in prod.facets() {
        let mut v: Vec<Label> = f.vertices().iter().map(|&x| target(x)).collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IncompatibleGluing(format!("identification collapses facet {f}")));
        }
        facets.push(Face::from_sorted(v));
    }
    let before = facets.len();
    let c = Complex::from_trusted(d, facets, None);
    if c.num_facets() != before || c.n() != 3 * k as usize {
        return Err(Error::IncompatibleGluing("identification merged facets".into()));
    }
    Ok(c)
}

/// The twisted `S^{d-1}`-bundle over the circle on `3d+3` vertices; the ends are
/// glued through the reflection swapping vertices 1 and 2.
pub fn twisted_bundle(d: usize) -> Result<Complex> {
    assert!(d >= 2, "twisted_bundle needs d >= 2");
    let mut sigma: Vec<Label> = (1..=d as Label + 1).collect();
    sigma.swap(0, 1);
    let c = mapping_torus(d, &sigma)?;
    if coherent_orientation(&c).is_some() {
        return Err(Error::IncompatibleGluing("glued complex is orientable".into()));
    }
    Ok(c)
}

/// `S^{d-1} × S^1` on `3d+3` vertices (identity gluing).
pub fn orientable_bundle(d: usize) -> Result<Complex> {
    assert!(d >= 2, "orientable_bundle needs d >= 2");
    let sigma: Vec<Label> = (1..=d as Label + 1).collect();
    let c = mapping_torus(d, &sigma)?;
    if coherent_orientation(&c).is_none() {
        return Err(Error::IncompatibleGluing("glued complex is not orientable".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology;

    #[test]
    fn simplex_boundaries() {
        assert_eq!(boundary_simplex(2).f_vector().counts, vec![4, 6, 4]);
        assert_eq!(boundary_simplex(3).f_vector().counts, vec![5, 10, 10, 5]);
        assert!(boundary_simplex(4).is_k_neighborly(5));
    }

    #[test]
    fn torus_product() {
        let t = product(&boundary_simplex(1), &boundary_simplex(1));
        assert_eq!(t.f_vector().counts, vec![9, 27, 18]);
        assert_eq!(homology(&t).to_string(), "(Z,Z^2,Z)");
    }

    #[test]
    fn joins_and_cones() {
        let s3 = join(&boundary_simplex(1), &boundary_simplex(1));
        assert_eq!(s3.n(), 6);
        assert_eq!(homology(&s3), crate::homology::HomologyVector::sphere(3));
        assert_eq!(cone(&simplex(2)), simplex(3));
        assert_eq!(cone(&boundary_simplex(2)).num_facets(), 4);
    }

    #[test]
    fn bundles() {
        let k = twisted_bundle(2).unwrap();
        assert_eq!(k.n(), 9);
        assert_eq!(homology(&k).to_string(), "(Z,Z+Z_2,0)");
        let t = orientable_bundle(2).unwrap();
        assert_eq!(homology(&t).to_string(), "(Z,Z^2,Z)");
    }

    #[test]
    fn stacking() {
        let c = boundary_simplex(2);
        let s = stack(&c, &c.facets()[0].clone()).unwrap();
        assert_eq!(s.f_vector().counts, vec![5, 9, 6]);
        assert!(matches!(stack(&c, &Face::from(&[1u32, 2][..])), Err(Error::NotAFacet(_))));
    }

    #[test]
    fn sum_with_sphere_is_stacking() {
        let c = boundary_simplex(3);
        let f = c.facets()[0].clone();
        let s = connected_sum(&c, &f, &boundary_simplex(3), &f, None).unwrap();
        assert_eq!(s.n(), 5 + 5 - 4);
        assert_eq!(s.f_vector(), stack(&c, &f).unwrap().f_vector());
        assert!(coherent_orientation(&s).is_some());
    }
}
