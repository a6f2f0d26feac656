//! Combinatorial manifold recognition through vertex links.

use crate::complex::{Complex, Label, ManifoldVerdict, Verdict, Witness};
use crate::flip::{self, Schedule, MAX_VERTICES};
use crate::homology::{homology, HomologyVector};
use crate::par;

/// Flip budget per vertex link.
pub const DEFAULT_LINK_BUDGET: u64 = 10_000;

/// Verdict for a single vertex link of a pseudomanifold.
pub fn check_link(c: &Complex, v: Label, budget: u64) -> ManifoldVerdict {
    let d = c.dim();
    if d == 1 {
        // links are two points once every ridge has degree two
        return ManifoldVerdict::yes();
    }
    let link = match c.vertex_link(v) {
        Ok(l) => l,
        Err(e) => {
            return ManifoldVerdict::no(Witness::NotPseudomanifold { vertex: v, reason: e.to_string() })
        }
    };
    let pm = link.is_pseudomanifold();
    if !pm.is_yes() {
        let reason = pm.witness.map(|w| w.to_string()).unwrap_or_default();
        return ManifoldVerdict::no(Witness::NotPseudomanifold { vertex: v, reason });
    }
    if d == 2 {
        return ManifoldVerdict::yes();
    }
    let h = homology(&link);
    if h != HomologyVector::sphere(d - 1) {
        return ManifoldVerdict::no(Witness::NonSphereLink { vertex: v, reason: format!("homology {h}") });
    }
    if link.n() == d + 1 {
        return ManifoldVerdict::yes();
    }
    if link.n() > MAX_VERTICES || budget == 0 {
        return ManifoldVerdict::unknown(Witness::BudgetExhausted { vertex: v, best_vertices: link.n() });
    }
    let schedule = Schedule::default().stop_at_vertices(d as u64 + 1);
    match flip::reduce(&link, v as u64, budget, &schedule) {
        Ok(r) if r.complex.n() == d + 1 => ManifoldVerdict::yes(),
        Ok(r) => ManifoldVerdict::unknown(Witness::BudgetExhausted { vertex: v, best_vertices: r.complex.n() }),
        Err(_) => ManifoldVerdict::unknown(Witness::BudgetExhausted { vertex: v, best_vertices: link.n() }),
    }
}

/// Every vertex link must flip-reduce to the boundary of a simplex within `budget` moves.
/// The first negative link (by vertex label) wins over any inconclusive one.
pub fn is_combinatorial_manifold(c: &Complex, budget: u64) -> ManifoldVerdict {
    let pm = c.is_pseudomanifold();
    if !pm.is_yes() {
        return pm;
    }
    let verdicts = par::map((1..=c.n() as Label).collect(), |v| check_link(c, v, budget));
    if let Some(no) = verdicts.iter().find(|v| v.status == Verdict::No) {
        return no.clone();
    }
    if let Some(unknown) = verdicts.iter().find(|v| v.status == Verdict::Unknown) {
        return unknown.clone();
    }
    ManifoldVerdict::yes()
}
