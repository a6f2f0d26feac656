//! Bistellar moves and the stochastic reducer.
//!
//! An `i`-move removes a `(d-i)`-face `A` whose link is the boundary of an
//! `i`-simplex `B` that is not yet a face, and replaces `A * ∂B` by `∂A * B`.
//! A 0-move inserts the fresh vertex `n+1` into a facet; a `d`-move deletes a
//! vertex of degree `d+1`, after which the labels above it shift down by one.

mod anneal;
mod state;

use std::fmt;
use std::str::FromStr;

use crate::complex::{Complex, Face, Label};
use crate::error::{Error, Result};

pub use anneal::{reduce, reduce_observed, reduce_seeds, ReduceResult, ReduceStats, Schedule};
pub(crate) use state::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipMove {
    pub kind: usize,
    pub remove: Face,
    pub insert: Face,
}

impl fmt::Display for FlipMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |face: &Face| {
            face.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        };
        write!(f, "{}: {} -> {}", self.kind, join(&self.remove), join(&self.insert))
    }
}

impl FromStr for FlipMove {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, rest) = s.split_once(':').ok_or("missing `:`")?;
        let kind: usize = kind.trim().parse().map_err(|e| format!("bad move kind: {e}"))?;
        let (a, b) = rest.split_once("->").ok_or("missing `->`")?;
        let face = |t: &str| -> std::result::Result<Face, String> {
            let v = t
                .split_whitespace()
                .map(|x| x.parse::<Label>().map_err(|e| format!("bad label `{x}`: {e}")))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Face::new(v).map_err(|e| e.to_string())
        };
        Ok(FlipMove { kind, remove: face(a)?, insert: face(b)? })
    }
}

/// Parses a newline-delimited trace; blank lines and `#` comments are skipped.
pub fn parse_trace(text: &str) -> Result<Vec<FlipMove>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| l.parse().map_err(|msg| Error::Parse { line: i + 1, msg }))
        .collect()
}

pub fn format_trace(trace: &[FlipMove]) -> String {
    trace.iter().map(|m| format!("{m}\n")).collect()
}

/// Facets containing `a`.
fn star_of(c: &Complex, a: &Face) -> Vec<Face> {
    c.facets().iter().filter(|f| f.includes(a)).cloned().collect()
}

/// Every legal `i`-move, ordered by the face removed.
pub fn legal_moves(c: &Complex, i: usize) -> Vec<FlipMove> {
    let d = c.dim();
    if i > d {
        return Vec::new();
    }
    if i == 0 {
        let fresh = Face::from_sorted(vec![c.n() as Label + 1]);
        return c
            .facets()
            .iter()
            .map(|f| FlipMove { kind: 0, remove: f.clone(), insert: fresh.clone() })
            .collect();
    }
    let mut out = Vec::new();
    for a in c.faces(d - i + 1) {
        let star = star_of(c, &a);
        if star.len() != i + 1 {
            continue;
        }
        let b = star.iter().fold(Face::from_sorted(Vec::new()), |acc, f| acc.union(f)).difference(&a);
        if b.len() == i + 1 && !c.has_face(&b) {
            out.push(FlipMove { kind: i, remove: a, insert: b });
        }
    }
    out
}

/// Checks every legality clause, naming the first one violated.
pub fn check_move(c: &Complex, m: &FlipMove) -> Result<()> {
    let d = c.dim();
    let illegal = |s: String| Err(Error::IllegalMove(s));
    if m.kind > d {
        return illegal(format!("kind {} exceeds dimension {d}", m.kind));
    }
    if m.remove.len() != d - m.kind + 1 || m.insert.len() != m.kind + 1 {
        return illegal(format!(
            "a {}-move removes a face with {} vertices and inserts one with {}",
            m.kind,
            d - m.kind + 1,
            m.kind + 1
        ));
    }
    if !m.remove.is_disjoint(&m.insert) {
        return illegal("removed and inserted faces share a vertex".into());
    }
    let star = star_of(c, &m.remove);
    if star.is_empty() {
        return illegal(format!("{} is not a face", m.remove));
    }
    if m.kind == 0 {
        if m.insert.vertices() != [c.n() as Label + 1] {
            return illegal(format!("a 0-move inserts the fresh vertex {}", c.n() + 1));
        }
        return Ok(());
    }
    let link = star.iter().fold(Face::from_sorted(Vec::new()), |acc, f| acc.union(f)).difference(&m.remove);
    if star.len() != m.kind + 1 || link != m.insert {
        return illegal(format!("link of {} is not the boundary of {}", m.remove, m.insert));
    }
    if c.has_face(&m.insert) {
        return illegal(format!("{} is already a face", m.insert));
    }
    Ok(())
}

/// Applies a legal move, returning the canonical result.
pub fn apply_move(c: &Complex, m: &FlipMove) -> Result<Complex> {
    check_move(c, m)?;
    let removed: Vec<Face> = if m.kind == 0 {
        vec![m.remove.clone()]
    } else {
        star_of(c, &m.remove)
    };
    let mut facets: Vec<Face> = c.facets().iter().filter(|f| !removed.contains(f)).cloned().collect();
    for &a in m.remove.vertices() {
        let rest: Vec<Label> = m.remove.vertices().iter().copied().filter(|&x| x != a).collect();
        facets.push(m.insert.union(&Face::from_sorted(rest)));
    }
    Ok(Complex::from_trusted(c.dim(), facets, None))
}

/// Applies a trace in order, failing on the first illegal move.
pub fn replay(c: &Complex, trace: &[FlipMove]) -> Result<Complex> {
    let mut cur = c.clone();
    for (k, m) in trace.iter().enumerate() {
        cur = apply_move(&cur, m).map_err(|e| Error::IllegalMove(format!("move {}: {e}", k + 1)))?;
    }
    Ok(cur)
}

/// f-vector change of an `i`-move in dimension `d`.
pub fn move_delta(d: usize, i: usize) -> Vec<i64> {
    use crate::util::binomial;
    let (a, b) = ((d - i + 1) as i64, (i + 1) as i64);
    (0..=d as i64)
        .map(|k| {
            let size = k + 1;
            let added = if size >= b && size - b < a { binomial(a, size - b) } else { 0 };
            let removed = if size >= a && size - a < b { binomial(b, size - a) } else { 0 };
            (added - removed) as i64
        })
        .collect()
}
