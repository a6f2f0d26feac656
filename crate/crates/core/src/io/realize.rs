//! Straight-line realization check for triangulated surfaces in 3-space.
//!
//! Predicates are exact over the rationals. Decimal input is converted from
//! `f64` and marked inexact; only the degeneracy test then uses a tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::complex::{Complex, Face, Label};
use crate::error::{Error, Result};

type Q = BigRational;
type P3 = [Q; 3];

/// Relative tolerance on triangle area for inexact coordinates.
pub const AREA_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    /// Coordinates by vertex label; index 0 is label 1.
    pub coords: Vec<Option<P3>>,
    pub exact: bool,
}

fn parse_number(tok: &str, line: usize) -> Result<(Q, bool)> {
    let bad = || Error::Parse { line, msg: format!("bad coordinate `{tok}`") };
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok((Q::new(p, q), true));
    }
    if let Ok(i) = tok.parse::<BigInt>() {
        return Ok((Q::from_integer(i), true));
    }
    let x: f64 = tok.parse().map_err(|_| bad())?;
    Q::from_f64(x).map(|q| (q, false)).ok_or_else(bad)
}

impl Embedding {
    /// Lines `v x y z`; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Embedding> {
        let mut coords: Vec<Option<P3>> = Vec::new();
        let mut exact = true;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 4 {
                return Err(Error::Parse { line, msg: "expected `v x y z`".into() });
            }
            let v: usize = toks[0].parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex `{}`", toks[0]) })?;
            if v == 0 {
                return Err(Error::Parse { line, msg: "vertex labels start at 1".into() });
            }
            let mut p: Vec<Q> = Vec::with_capacity(3);
            for t in &toks[1..] {
                let (q, ex) = parse_number(t, line)?;
                exact &= ex;
                p.push(q);
            }
            if coords.len() < v {
                coords.resize(v, None);
            }
            coords[v - 1] = Some([p[0].clone(), p[1].clone(), p[2].clone()]);
        }
        Ok(Embedding { coords, exact })
    }

    pub fn from_integers(points: &[[i64; 3]]) -> Embedding {
        let coords = points.iter().map(|p| Some(p.map(|x| Q::from_integer(BigInt::from(x))))).collect();
        Embedding { coords, exact: true }
    }

    fn point(&self, v: Label) -> Result<&P3> {
        self.coords.get(v as usize - 1).and_then(|p| p.as_ref()).ok_or(Error::IncompleteEmbedding(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationVerdict {
    pub valid: bool,
    pub exact: bool,
    pub problems: Vec<String>,
}

fn sub(a: &P3, b: &P3) -> P3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn dot(a: &P3, b: &P3) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Sign of `det[b-a, c-a, d-a]`.
fn orient3(a: &P3, b: &P3, c: &P3, d: &P3) -> i8 {
    sign(&dot(&cross(&sub(b, a), &sub(c, a)), &sub(d, a)))
}

fn sign(q: &Q) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

type P2 = [Q; 2];

fn orient2(a: &P2, b: &P2, c: &P2) -> i8 {
    sign(&((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])))
}

fn on_segment2(p: &P2, a: &P2, b: &P2) -> bool {
    let within = |i: usize| {
        let (lo, hi) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        lo <= &p[i] && &p[i] <= hi
    };
    orient2(a, b, p) == 0 && within(0) && within(1)
}

fn segments_meet2(p: &P2, q: &P2, a: &P2, b: &P2) -> bool {
    let (o1, o2, o3, o4) = (orient2(p, q, a), orient2(p, q, b), orient2(a, b, p), orient2(a, b, q));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment2(a, p, q) || on_segment2(b, p, q) || on_segment2(p, a, b) || on_segment2(q, a, b)
}

fn in_triangle2(p: &P2, a: &P2, b: &P2, c: &P2) -> bool {
    let (o1, o2, o3) = (orient2(a, b, p), orient2(b, c, p), orient2(c, a, p));
    (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)
}

/// Projection dropping the dominant axis of `normal`.
fn projector(normal: &P3) -> impl Fn(&P3) -> P2 {
    let abs: Vec<Q> = normal.iter().map(|x| x.abs()).collect();
    let drop = (0..3).max_by(|&i, &j| abs[i].cmp(&abs[j]).then(j.cmp(&i))).unwrap();
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    move |p: &P3| [p[keep[0]].clone(), p[keep[1]].clone()]
}

/// Closed segment against closed triangle.
fn segment_hits_triangle(p: &P3, q: &P3, a: &P3, b: &P3, c: &P3) -> bool {
    let (sp, sq) = (orient3(a, b, c, p), orient3(a, b, c, q));
    if sp * sq > 0 {
        return false;
    }
    if sp == 0 && sq == 0 {
        let pr = projector(&cross(&sub(b, a), &sub(c, a)));
        let (p2, q2, a2, b2, c2) = (pr(p), pr(q), pr(a), pr(b), pr(c));
        return in_triangle2(&p2, &a2, &b2, &c2)
            || in_triangle2(&q2, &a2, &b2, &c2)
            || segments_meet2(&p2, &q2, &a2, &b2)
            || segments_meet2(&p2, &q2, &b2, &c2)
            || segments_meet2(&p2, &q2, &c2, &a2);
    }
    let (o1, o2, o3) = (orient3(p, q, a, b), orient3(p, q, b, c), orient3(p, q, c, a));
    (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)
}

/// Whether the edge `v -> a` runs into the triangle `(v, c, d)` beyond `v`.
fn edge_enters_corner(v: &P3, a: &P3, c: &P3, d: &P3) -> bool {
    if orient3(v, c, d, a) != 0 {
        return false;
    }
    let n = cross(&sub(c, v), &sub(d, v));
    let pr = projector(&n);
    let (v2, a2, c2, d2) = (pr(v), pr(a), pr(c), pr(d));
    // a - v inside the closed cone spanned by c - v and d - v; the opposite ray fails one test
    let s = orient2(&v2, &c2, &d2);
    orient2(&v2, &c2, &a2) * s >= 0 && orient2(&v2, &a2, &d2) * s >= 0
}

fn degenerate(a: &P3, b: &P3, c: &P3, exact: bool, scale: &Q) -> bool {
    let n = cross(&sub(b, a), &sub(c, a));
    let area2 = dot(&n, &n);
    if exact {
        return area2.is_zero();
    }
    let tol = Q::from_f64(AREA_TOLERANCE).unwrap() * scale;
    area2 <= &tol * &tol
}

fn bbox_scale(points: &[&P3]) -> Q {
    let mut best = Q::zero();
    for i in 0..3 {
        let lo = points.iter().map(|p| &p[i]).min().cloned().unwrap_or_else(Q::zero);
        let hi = points.iter().map(|p| &p[i]).max().cloned().unwrap_or_else(Q::zero);
        let w = hi - lo;
        if w > best {
            best = w;
        }
    }
    &best * &best
}

fn describe(f: &Face) -> String {
    f.to_string()
}

/// Checks that the triangles of `c` placed at `e` form an embedded polyhedral surface:
/// no degenerate triangle, and any two triangles meet exactly in their common face.
pub fn realization_check(c: &Complex, e: &Embedding) -> Result<RealizationVerdict> {
    if c.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, found: c.dim() });
    }
    let labels = c.original_labels();
    let pt = |v: Label| e.point(labels[v as usize - 1]);
    for v in 1..=c.n() as Label {
        pt(v)?;
    }
    let all: Vec<&P3> = (1..=c.n() as Label).map(|v| pt(v).unwrap()).collect();
    let scale = bbox_scale(&all);
    let tris = c.facets();
    let mut problems = Vec::new();
    for t in tris {
        let [a, b, cc] = [0, 1, 2].map(|i| pt(t.vertices()[i]).unwrap());
        if degenerate(a, b, cc, e.exact, &scale) {
            problems.push(format!("triangle {} is degenerate", describe(t)));
        }
    }
    if problems.is_empty() {
        for (i, t1) in tris.iter().enumerate() {
            for t2 in &tris[i + 1..] {
                if let Some(p) = pair_problem(t1, t2, &pt) {
                    problems.push(p);
                }
            }
        }
    }
    Ok(RealizationVerdict { valid: problems.is_empty(), exact: e.exact, problems })
}

fn pair_problem<'a>(t1: &Face, t2: &Face, pt: &dyn Fn(Label) -> Result<&'a P3>) -> Option<String> {
    let p = |v: Label| pt(v).unwrap();
    let shared: Vec<Label> = t1.vertices().iter().copied().filter(|&v| t2.contains(v)).collect();
    let rest = |t: &Face| -> Vec<Label> { t.vertices().iter().copied().filter(|v| !shared.contains(v)).collect() };
    let (r1, r2) = (rest(t1), rest(t2));
    let bad = match shared.len() {
        0 => {
            let hits = |s: &Face, t: &Face| {
                let tv = t.vertices();
                let sv = s.vertices();
                [(0, 1), (1, 2), (0, 2)]
                    .iter()
                    .any(|&(i, j)| segment_hits_triangle(p(sv[i]), p(sv[j]), p(tv[0]), p(tv[1]), p(tv[2])))
            };
            hits(t1, t2) || hits(t2, t1)
        }
        1 => {
            let v = p(shared[0]);
            let (a, b, c, d) = (p(r1[0]), p(r1[1]), p(r2[0]), p(r2[1]));
            segment_hits_triangle(a, b, v, c, d)
                || segment_hits_triangle(c, d, v, a, b)
                || edge_enters_corner(v, a, c, d)
                || edge_enters_corner(v, b, c, d)
                || edge_enters_corner(v, c, a, b)
                || edge_enters_corner(v, d, a, b)
        }
        2 => {
            let (u, v, a, b) = (p(shared[0]), p(shared[1]), p(r1[0]), p(r2[0]));
            orient3(u, v, a, b) == 0 && {
                let n1 = cross(&sub(v, u), &sub(a, u));
                let n2 = cross(&sub(v, u), &sub(b, u));
                !dot(&n1, &n2).is_negative()
            }
        }
        _ => false,
    };
    bad.then(|| format!("triangles {} and {} intersect improperly", describe(t1), describe(t2)))
}
