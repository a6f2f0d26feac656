//! Lower and upper bounds on vertex and face numbers of triangulated manifolds.
//!
//! Every check reports `slack ≥ 0` exactly when the inequality holds, and is
//! sharp when the slack is zero.

use std::fmt;
use std::str::FromStr;

use crate::complex::{Complex, FVector};
use crate::homology::{betti, coherent_orientation, homology, HomologyGroup, HomologyVector};
use crate::util::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub satisfied: bool,
    pub slack: i128,
    pub sharp: bool,
}

impl Check {
    pub fn from_slack(slack: i128) -> Self {
        Check { satisfied: slack >= 0, slack, sharp: slack == 0 }
    }
}

fn c(n: i64, k: i64) -> i128 {
    binomial(n, k)
}

/// `C(n-3,2)` (or `C(n-4,2)` for the exceptional surfaces) against `3(2-χ)`.
pub fn heawood_check(n: u64, chi: i64, exceptional: bool) -> Check {
    let shift = if exceptional { 4 } else { 3 };
    Check::from_slack(c(n as i64 - shift, 2) - 3 * (2 - chi) as i128)
}

/// Least `n ≥ 4` passing [`heawood_check`].
pub fn heawood_min_vertices(chi: i64, exceptional: bool) -> u64 {
    assert!(chi <= 2, "surfaces have χ ≤ 2");
    (4..).find(|&n| heawood_check(n, chi, exceptional).satisfied).unwrap()
}

/// Orientable genus 2, the Klein bottle and the non-orientable genus 3 surface.
pub fn is_exceptional_surface(chi: i64, orientable: bool) -> bool {
    matches!((orientable, chi), (true, -2) | (false, 0) | (false, -1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologySphere {
    Integral,
    Mod2,
}

/// Facts about the underlying manifold that cannot be read off the complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TopologyHints {
    pub is_sphere: Option<bool>,
    pub simply_connected: Option<bool>,
    /// `i` with the manifold `(i-1)`-connected but not `i`-connected.
    pub connectivity: Option<usize>,
    pub homology_sphere: Option<HomologySphere>,
    /// Manifold name, e.g. `RP3`, `L31`, `S2xtS1`, `CP2`, `RP4`, `other3`.
    pub manifold: Option<String>,
}

impl TopologyHints {
    /// Applies one `key=value` (or bare flag) hint.
    pub fn apply(&mut self, hint: &str) -> Result<(), String> {
        let (k, v) = match hint.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (hint.trim(), None),
        };
        let flag = |v: Option<&str>| -> Result<bool, String> {
            match v {
                None | Some("true") | Some("yes") | Some("1") => Ok(true),
                Some("false") | Some("no") | Some("0") => Ok(false),
                Some(x) => Err(format!("expected a boolean, got `{x}`")),
            }
        };
        match k {
            "sphere" => self.is_sphere = Some(flag(v)?),
            "not-sphere" => self.is_sphere = Some(!flag(v)?),
            "simply-connected" => self.simply_connected = Some(flag(v)?),
            "not-simply-connected" => self.simply_connected = Some(!flag(v)?),
            "connectivity" => {
                let i = v.ok_or("connectivity needs a value")?;
                self.connectivity = Some(i.parse().map_err(|e| format!("bad connectivity: {e}"))?);
            }
            "homology-sphere" => {
                self.homology_sphere = Some(match v {
                    Some("Z") | None => HomologySphere::Integral,
                    Some("Z2") => HomologySphere::Mod2,
                    Some(x) => return Err(format!("homology-sphere expects Z or Z2, got `{x}`")),
                })
            }
            "manifold" => self.manifold = Some(v.ok_or("manifold needs a name")?.to_string()),
            _ => return Err(format!("unknown hint `{k}`")),
        }
        Ok(())
    }
}

impl FromStr for TopologyHints {
    type Err = String;

    /// Comma-separated hints.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut h = TopologyHints::default();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            h.apply(part)?;
        }
        Ok(h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexBound {
    pub id: &'static str,
    pub statement: String,
    pub min_vertices: u64,
}

/// Vertex lower bounds for non-spheres, `(i-1)`- but not `i`-connected
/// manifolds and non-simply-connected manifolds, as far as the hints allow.
pub fn brehm_kuehnel_bounds(d: usize, hints: &TopologyHints) -> Vec<VertexBound> {
    let d64 = d as u64;
    let mut out = Vec::new();
    if hints.is_sphere == Some(false) {
        let raw = 3 * d64.div_ceil(2) + 3;
        // equality only for d = 2, 4, 8, 16 among even dimensions
        let min = if d.is_multiple_of(2) && ![2, 4, 8, 16].contains(&d) { raw + 1 } else { raw };
        out.push(VertexBound { id: "brehm-kuehnel-a", statement: "n >= 3*ceil(d/2)+3".into(), min_vertices: min });
    }
    if let Some(i) = hints.connectivity {
        if i >= 1 && 2 * i < d {
            out.push(VertexBound {
                id: "brehm-kuehnel-b",
                statement: "n >= 2d+4-i".into(),
                min_vertices: 2 * d64 + 4 - i as u64,
            });
        }
    }
    if hints.simply_connected == Some(false) {
        let min = if d == 2 { 6 } else { 2 * d64 + 3 };
        out.push(VertexBound { id: "brehm-kuehnel-nsc", statement: "n >= 2d+3 (n >= 6 for d=2)".into(), min_vertices: min });
    }
    out
}

/// `C(n-4,3) ≥ 10(χ-2)` for combinatorial 4-manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kuehnel4d {
    pub check: Check,
    /// Equality would force a 3-neighborly triangulation, and the only ones
    /// with `n ≤ 13` have 6 or 9 vertices.
    pub excluded: bool,
}

pub fn kuehnel_4d_check(n: u64, chi: i64) -> Kuehnel4d {
    let check = Check::from_slack(c(n as i64 - 4, 3) - 10 * (chi - 2) as i128);
    Kuehnel4d { check, excluded: check.sharp && n <= 13 && n != 6 && n != 9 }
}

/// `C(n-k-2,k+1) ≥ (-1)^k C(2k+1,k+1)(χ-2)` for `2k`-manifolds.
pub fn kuehnel_kalai_bound(k: u64, n: u64, chi: i64) -> Check {
    let k = k as i64;
    let sign: i128 = if k % 2 == 0 { 1 } else { -1 };
    Check::from_slack(c(n as i64 - k - 2, k + 1) - sign * c(2 * k + 1, k + 1) * (chi - 2) as i128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleEntry {
    pub j: usize,
    /// The middle entry for even `d` compares against half the Betti number;
    /// its slack is doubled to stay integral.
    pub halved: bool,
    pub check: Check,
}

/// The Pascal-like triangle of bounds from reduced Betti numbers `β̃_0..β̃_{⌊d/2⌋}`.
pub fn kuehnel_triangle_bounds(d: usize, n: u64, reduced_betti: &[i64]) -> Vec<TriangleEntry> {
    let (d, n) = (d as i64, n as i64);
    let mut out = Vec::new();
    for j in 0..=(d - 1) / 2 {
        let b = reduced_betti.get(j as usize).copied().unwrap_or(0) as i128;
        let slack = c(n - d + j - 2, j + 1) - c(d + 2, j + 1) * b;
        out.push(TriangleEntry { j: j as usize, halved: false, check: Check::from_slack(slack) });
    }
    if d % 2 == 0 {
        let j = d / 2;
        let b = reduced_betti.get(j as usize).copied().unwrap_or(0) as i128;
        let slack = 2 * c(n - j - 2, j + 1) - c(d + 2, j + 1) * b;
        out.push(TriangleEntry { j: j as usize, halved: true, check: Check::from_slack(slack) });
    }
    out
}

/// Lower bound theorem, entries for `k = 1..=d`.
pub fn lbt_check(f: &FVector) -> Vec<Check> {
    let d = f.dim() as i64;
    let n = f.n() as i128;
    (1..=d)
        .map(|k| {
            let rhs = if k < d {
                c(d + 1, k) * n - c(d + 2, k + 1) * k as i128
            } else {
                d as i128 * n - ((d - 1) * (d + 2)) as i128
            };
            Check::from_slack(f.get(k as usize) as i128 - rhs)
        })
        .collect()
}

/// f-vector of the boundary of the cyclic `(d+1)`-polytope on `n` vertices,
/// from its h-vector: `h_i = C(n-D+i-1, i)` below the middle, symmetric above.
pub fn cyclic_f(d: usize, n: u64) -> FVector {
    let dd = d as i64 + 1;
    let n = n as i64;
    assert!(n > dd, "cyclic polytope needs n ≥ d+2");
    let h: Vec<i128> = (0..=dd).map(|i| c(n - dd + i.min(dd - i) - 1, i.min(dd - i))).collect();
    let counts = (1..=dd)
        .map(|j| (0..=j).map(|i| c(dd - i, j - i) * h[i as usize]).sum::<i128>() as u64)
        .collect();
    FVector::new(counts)
}

/// Upper bound theorem, entries for `k = 1..=d`.
pub fn ubt_check(f: &FVector) -> Vec<Check> {
    let cyc = cyclic_f(f.dim(), f.n());
    (1..=f.dim()).map(|k| Check::from_slack(cyc.get(k) as i128 - f.get(k) as i128)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaEntry {
    pub manifold: &'static str,
    pub gamma: i64,
    pub gamma_star: i64,
    /// `gamma` is only a lower bound (all other 3-manifolds).
    pub lower_bound_only: bool,
    pub conjectural: bool,
    /// `(n, f_1)` pairs above `γ*` that do not occur.
    pub exceptions: Vec<(u64, u64)>,
}

/// Known values of `γ` and `γ*` in `f_1 ≥ 4n + γ`.
pub fn walkup_gamma_table() -> Vec<GammaEntry> {
    let e = |manifold, gamma, gamma_star, lower_bound_only, conjectural, exceptions: Vec<(u64, u64)>| GammaEntry {
        manifold,
        gamma,
        gamma_star,
        lower_bound_only,
        conjectural,
        exceptions,
    };
    vec![
        e("S3", -10, -10, false, false, vec![]),
        e("S2xtS1", 0, 0, false, false, vec![]),
        e("S2xS1", 0, 1, false, false, vec![(9, 36)]),
        e("RP3", 7, 7, false, false, vec![]),
        e("other3", 8, 8, true, false, vec![]),
        e("L31", 18, 18, false, true, vec![]),
        e("T3", 45, 45, false, true, vec![]),
    ]
}

pub fn walkup_gamma(manifold: &str) -> Option<GammaEntry> {
    walkup_gamma_table().into_iter().find(|g| g.manifold.eq_ignore_ascii_case(manifold))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkupCheck {
    /// `f_2 = 2f_1 - 2n` and `f_3 = f_1 - n`.
    pub consistent: bool,
    pub check: Check,
}

/// `f_1 ≥ 4n + γ` together with the 3-manifold face relations.
pub fn walkup_relation(f: &FVector, gamma: i64) -> crate::Result<WalkupCheck> {
    if f.dim() != 3 {
        return Err(crate::Error::WrongDimension { expected: 3, found: f.dim() });
    }
    let (n, f1, f2, f3) = (f.get(0) as i128, f.get(1) as i128, f.get(2) as i128, f.get(3) as i128);
    Ok(WalkupCheck {
        consistent: f2 == 2 * f1 - 2 * n && f3 == f1 - n,
        check: Check::from_slack(f1 - 4 * n - gamma as i128),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikEntry {
    pub inequality: u8,
    pub k: usize,
    pub applicable: bool,
    pub check: Option<Check>,
}

/// The three inequalities in `F_2`-Betti numbers, each evaluated only inside
/// its `(n, k)` window. The third is compared after clearing the denominator
/// `n+k+2`.
pub fn novik_bounds(d: usize, n: u64, betti_f2: &[usize]) -> Vec<NovikEntry> {
    let b = |i: usize| betti_f2.get(i).copied().unwrap_or(0) as i128;
    let n64 = n as i64;
    let mut out = Vec::new();
    if d >= 2 && d.is_multiple_of(2) {
        let k = d / 2;
        let kk = k as i64;
        let lhs = c(n64 - kk - 2, kk + 1);
        let coef = c(2 * kk + 1, kk + 1);
        let reduced = |i: usize| if i == 0 { b(0) - 1 } else { b(i) };
        let w1 = n64 <= 3 * kk + 3 || n64 >= 4 * kk + 3;
        let rhs1 = coef * (b(k) + 2 * (0..k.saturating_sub(1)).map(reduced).sum::<i128>());
        out.push(NovikEntry { inequality: 1, k, applicable: w1, check: w1.then(|| Check::from_slack(lhs - rhs1)) });
        let w2 = n64 <= 3 * kk + 3 || n64 >= 7 * kk + 3;
        let rhs2 = coef * (b(k) + 2 * (1..k).map(b).sum::<i128>());
        out.push(NovikEntry { inequality: 2, k, applicable: w2, check: w2.then(|| Check::from_slack(lhs - rhs2)) });
    } else if d % 2 == 1 {
        let k = d.div_ceil(2);
        let kk = k as i64;
        let w3 = n64 <= 3 * kk + 2 || n64 > 4 * kk;
        let lhs = 2 * n as i128 * c(n64 - kk - 2, kk);
        let rhs = (n as i128 + kk as i128 + 2) * c(2 * kk - 1, kk) * 2 * (1..k).map(b).sum::<i128>();
        out.push(NovikEntry { inequality: 3, k, applicable: w3, check: w3.then(|| Check::from_slack(lhs - rhs)) });
    }
    out
}

/// `(n, 3n-3χ, 2n-2χ)` for a closed surface.
pub fn surface_f_from_n(n: u64, chi: i64) -> FVector {
    let n = n as i64;
    FVector::new(vec![n as u64, (3 * n - 3 * chi) as u64, (2 * n - 2 * chi) as u64])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveSpace {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinVertices {
    pub bound: u64,
    /// `bound + 1` where equality is impossible.
    pub effective: u64,
}

/// `RP^d`: `(d+1)(d+2)/2`; `CP^r`: `(r+1)^2`; equality only in dimension 2 resp. `r = 2`.
pub fn arnoux_marin_min(kind: ProjectiveSpace, dim: u64) -> MinVertices {
    let (bound, equality) = match kind {
        ProjectiveSpace::Real => ((dim + 1) * (dim + 2) / 2, dim == 2),
        ProjectiveSpace::Complex => ((dim + 1) * (dim + 1), dim == 2),
    };
    MinVertices { bound, effective: if equality { bound } else { bound + 1 } }
}

/// Non-spherical `Z_2`-homology `d`-spheres with `3 ≤ d ≤ 6` need `d+9` vertices.
pub fn bagchi_datta_min(d: usize) -> Option<u64> {
    (3..=6).contains(&d).then_some(d as u64 + 9)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub id: String,
    pub statement: String,
    pub applicable: bool,
    pub satisfied: Option<bool>,
    pub slack: Option<i128>,
    pub sharp: bool,
    pub conjectural: bool,
    pub notes: String,
}

impl BoundEntry {
    fn new(id: impl Into<String>, statement: impl Into<String>) -> Self {
        BoundEntry {
            id: id.into(),
            statement: statement.into(),
            applicable: false,
            satisfied: None,
            slack: None,
            sharp: false,
            conjectural: false,
            notes: String::new(),
        }
    }

    fn with(mut self, check: Check) -> Self {
        self.applicable = true;
        self.satisfied = Some(check.satisfied);
        self.slack = Some(check.slack);
        self.sharp = check.sharp;
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        let s = s.into();
        if !s.is_empty() {
            if !self.notes.is_empty() {
                self.notes.push_str("; ");
            }
            self.notes.push_str(&s);
        }
        self
    }

    fn conjectural(mut self) -> Self {
        self.conjectural = true;
        self
    }

    /// A violated non-conjectural bound.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.conjectural && self.satisfied == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub d: usize,
    pub f: FVector,
    pub homology: HomologyVector,
    pub betti_f2: Vec<usize>,
    pub orientable: Option<bool>,
    pub hints: TopologyHints,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.entries.iter().filter(|e| e.is_violation()).collect()
    }

    /// `key=value` blocks, one per entry, after an `[inputs]` block.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        s.push_str("[inputs]\n");
        s.push_str(&format!("n={}\nd={}\nf={}\nchi={}\n", self.n, self.d, self.f, self.f.euler));
        s.push_str(&format!("homology={}\n", self.homology));
        let b: Vec<String> = self.betti_f2.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("betti_f2=({})\n", b.join(",")));
        if let Some(o) = self.orientable {
            s.push_str(&format!("orientable={o}\n"));
        }
        for e in &self.entries {
            s.push_str(&format!("\n[{}]\n", e.id));
            s.push_str(&format!("statement={}\n", e.statement));
            s.push_str(&format!("applicable={}\n", e.applicable));
            if let Some(sat) = e.satisfied {
                s.push_str(&format!("satisfied={sat}\n"));
            }
            if let Some(sl) = e.slack {
                s.push_str(&format!("slack={sl}\n"));
            }
            s.push_str(&format!("sharp={}\nconjectural={}\n", e.sharp, e.conjectural));
            if !e.notes.is_empty() {
                s.push_str(&format!("notes={}\n", e.notes));
            }
        }
        s
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} d={} f={} chi={} H={}", self.n, self.d, self.f, self.f.euler, self.homology)?;
        for e in &self.entries {
            let status = match (e.applicable, e.satisfied) {
                (false, _) => "n/a".to_string(),
                (true, Some(true)) if e.sharp => "sharp".to_string(),
                (true, Some(true)) => "ok".to_string(),
                (true, Some(false)) if e.conjectural => "fails (conjectural)".to_string(),
                (true, Some(false)) => "VIOLATED".to_string(),
                (true, None) => "?".to_string(),
            };
            write!(f, "{:<24} {:<44} {}", e.id, e.statement, status)?;
            if let Some(sl) = e.slack {
                write!(f, " slack={sl}")?;
            }
            if e.conjectural {
                write!(f, " [conjectural]")?;
            }
            if !e.notes.is_empty() {
                write!(f, " ({})", e.notes)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn is_product_homology(h: &HomologyVector, d: usize, i: usize) -> bool {
    let mut want = vec![HomologyGroup::free(0); d + 1];
    want[0].free_rank += 1;
    want[i].free_rank += 1;
    want[d - i].free_rank += 1;
    want[d].free_rank += 1;
    h.groups == want
}

/// Runs every bound that applies to `c` under `hints`. Entries come in a fixed order.
pub fn bound_report(cx: &Complex, hints: &TopologyHints) -> BoundReport {
    let f = cx.f_vector();
    let (n, d, chi) = (cx.n() as u64, cx.dim(), f.euler);
    let h = homology(cx);
    let b2 = betti(cx, 2).ranks;
    let pseudo = cx.is_pseudomanifold().is_yes();
    let orientable = pseudo.then(|| coherent_orientation(cx).is_some());
    let mut entries = Vec::new();
    let manifold_note = if pseudo { "" } else { "complex is not a pseudomanifold" };

    for (k, chk) in lbt_check(&f).into_iter().enumerate() {
        let k = k + 1;
        let st = if k < d { format!("f_{k} >= C(d+1,{k})n - C(d+2,{})*{k}", k + 1) } else { format!("f_{d} >= dn - (d-1)(d+2)") };
        let e = BoundEntry::new(format!("lbt-{k}"), st);
        entries.push(if pseudo { e.with(chk) } else { e.note(manifold_note) });
    }

    // the cyclic comparison is a theorem for odd d, and for d = 2k under a Betti condition
    let ubt_ok = if d % 2 == 1 {
        true
    } else {
        // reduced F2 Betti numbers; the sum runs over i = 1..=k-3
        let k = d / 2;
        let b = |i: usize| b2.get(i).copied().unwrap_or(0) as i64 - i64::from(i == 0);
        b(k) <= 2 * b(k - 1) + 2 * (1..k.saturating_sub(2)).map(b).sum::<i64>()
    };
    if n as usize > d + 1 {
        for (k, chk) in ubt_check(&f).into_iter().enumerate() {
            let k = k + 1;
            let e = BoundEntry::new(format!("ubt-{k}"), format!("f_{k} <= f_{k}(C_{{d+1}}(n))"));
            entries.push(if pseudo && ubt_ok {
                e.with(chk)
            } else if pseudo {
                e.note("Betti condition for even d fails")
            } else {
                e.note(manifold_note)
            });
        }
    }

    if d == 2 {
        let e = BoundEntry::new("heawood", "C(n-3,2) >= 3(2-chi)");
        entries.push(match orientable {
            Some(o) => {
                let ex = is_exceptional_surface(chi, o);
                let e = e.with(heawood_check(n, chi, ex));
                if ex { e.note("exceptional surface: C(n-4,2) replaces C(n-3,2)") } else { e }
            }
            None => e.note(manifold_note),
        });
    }

    if d % 2 == 0 {
        let k = (d / 2) as u64;
        let e = BoundEntry::new("kuehnel-kalai", "C(n-k-2,k+1) >= (-1)^k C(2k+1,k+1)(chi-2)");
        let e = if pseudo { e.with(kuehnel_kalai_bound(k, n, chi)) } else { e.note(manifold_note) };
        entries.push(if k >= 3 { e.conjectural() } else { e.note("proven for k = 1, 2") });
    }

    if d == 4 {
        let e = BoundEntry::new("kuehnel-4d", "C(n-4,3) >= 10(chi-2)");
        entries.push(if pseudo {
            let k = kuehnel_4d_check(n, chi);
            let three = cx.is_k_neighborly(3);
            let e = e.with(k.check);
            if k.check.sharp && !three {
                e.note("equality requires 3-neighborliness")
            } else if k.excluded {
                e.note("sharp-but-excluded")
            } else {
                e
            }
        } else {
            e.note(manifold_note)
        });
    }

    let sphere_homology = h == HomologyVector::sphere(d);
    let mut not_sphere_note = "";
    let mut derived = hints.clone();
    if derived.is_sphere.is_none() && pseudo && !sphere_homology {
        derived.is_sphere = Some(false);
        not_sphere_note = "non-sphere from homology";
    }
    let mut nsc_note = "";
    if derived.simply_connected.is_none() && h.groups.get(1).is_some_and(|g| !g.is_trivial()) {
        derived.simply_connected = Some(false);
        nsc_note = "not simply connected since H_1 != 0";
    }
    let bk = brehm_kuehnel_bounds(d, &derived);
    for (id, st) in [
        ("brehm-kuehnel-a", "n >= 3*ceil(d/2)+3"),
        ("brehm-kuehnel-b", "n >= 2d+4-i"),
        ("brehm-kuehnel-nsc", "n >= 2d+3 (n >= 6 for d=2)"),
    ] {
        let e = BoundEntry::new(id, st);
        entries.push(match bk.iter().find(|b| b.id == id) {
            Some(b) if pseudo => {
                let e = e.with(Check::from_slack(n as i128 - b.min_vertices as i128));
                match id {
                    "brehm-kuehnel-a" => e.note(not_sphere_note),
                    "brehm-kuehnel-nsc" => e.note(nsc_note),
                    _ => e,
                }
            }
            Some(_) => e.note(manifold_note),
            None => e.note("needs a hint"),
        });
    }

    let e = BoundEntry::new("sphere-product", "n >= 2d+4-i for H = H(S^(d-i) x S^i)");
    let i = (1..=d / 2).find(|&i| is_product_homology(&h, d, i));
    entries.push(match i {
        Some(i) if pseudo && d >= 2 => {
            let e = e.with(Check::from_slack(n as i128 - (2 * d + 4 - i) as i128));
            e.note(format!("i={i}"))
        }
        _ => e.note("homology is not that of a sphere product"),
    });

    let z2_sphere = b2.iter().enumerate().all(|(k, &b)| b == usize::from(k == 0 || k == d));
    let e = BoundEntry::new("bagchi-datta", "n >= d+9 for Z2-homology spheres, 3 <= d <= 6");
    entries.push(match bagchi_datta_min(d) {
        Some(min) if pseudo && (z2_sphere || hints.homology_sphere == Some(HomologySphere::Mod2)) => {
            if derived.is_sphere == Some(false) {
                e.with(Check::from_slack(n as i128 - min as i128)).note(not_sphere_note)
            } else {
                e.note("needs sphere=false")
            }
        }
        Some(_) => e.note("not a Z2-homology sphere"),
        None => e.note("only for 3 <= d <= 6"),
    });

    let e = BoundEntry::new("homology-sphere-z", "n >= 2d+3 for Z-homology spheres, d >= 6");
    entries.push(if d >= 6 && pseudo && sphere_homology && derived.is_sphere == Some(false) {
        e.with(Check::from_slack(n as i128 - (2 * d + 3) as i128))
    } else {
        e.note("needs a non-sphere Z-homology sphere, d >= 6")
    });

    let e = BoundEntry::new("arnoux-marin", "RP^d: n >= (d+1)(d+2)/2, CP^r: n >= (r+1)^2");
    let proj = hints.manifold.as_deref().and_then(|m| {
        let m = m.to_ascii_uppercase();
        if let Some(r) = m.strip_prefix("RP") {
            r.parse().ok().map(|k| (ProjectiveSpace::Real, k))
        } else if let Some(r) = m.strip_prefix("CP") {
            r.parse().ok().map(|k| (ProjectiveSpace::Complex, k))
        } else {
            None
        }
    });
    entries.push(match proj {
        Some((kind, k)) if pseudo => {
            let m = arnoux_marin_min(kind, k);
            e.with(Check::from_slack(n as i128 - m.effective as i128)).note(format!("raw bound {}", m.bound))
        }
        _ => e.note("needs manifold=RP<d> or CP<r>"),
    });

    if d == 3 {
        let name = hints.manifold.clone();
        let entry = name.as_deref().and_then(walkup_gamma);
        let gamma = entry.as_ref().map(|g| g.gamma).unwrap_or(-10);
        let w = walkup_relation(&f, gamma).expect("d = 3");
        let mut e = BoundEntry::new("walkup", "f_1 >= 4n + gamma(M)").with(w.check).note(format!("gamma={gamma}"));
        if !w.consistent {
            e.satisfied = Some(false);
            e = e.note("f_2 = 2f_1-2n, f_3 = f_1-n fails");
        }
        let e = match &entry {
            Some(g) if g.conjectural => e.conjectural(),
            Some(g) if g.lower_bound_only => e.note("gamma is a lower bound"),
            Some(_) => e,
            None => e.note("no manifold hint: gamma(S3) used"),
        };
        entries.push(if pseudo { e } else { BoundEntry::new("walkup", "f_1 >= 4n + gamma(M)").note(manifold_note) });
    }

    let reduced: Vec<i64> =
        b2.iter().enumerate().map(|(i, &b)| if i == 0 { b as i64 - 1 } else { b as i64 }).collect();
    for t in kuehnel_triangle_bounds(d, n, &reduced) {
        let st = if t.halved {
            format!("C(n-{0}-2,{1}) >= C(d+2,{1}) b~_{0}/2", t.j, t.j + 1)
        } else {
            format!("C(n-d+{0}-2,{1}) >= C(d+2,{1}) b~_{0}", t.j, t.j + 1)
        };
        let e = BoundEntry::new(format!("kuehnel-triangle-{}", t.j), st).conjectural();
        entries.push(if pseudo {
            let e = e.with(t.check).note("F2 Betti numbers");
            if t.halved { e.note("slack doubled") } else { e }
        } else {
            e.note(manifold_note)
        });
    }

    for nv in novik_bounds(d, n, &b2) {
        let st = match nv.inequality {
            1 => "C(n-k-2,k+1) >= C(2k+1,k+1)(b_k + 2 sum_{i<=k-2} b~_i)",
            2 => "C(n-k-2,k+1) >= C(2k+1,k+1)(b_k + 2 sum_{1<=i<k} b_i)",
            _ => "2n/(n+k+2) C(n-k-2,k) >= C(2k-1,k) 2 sum_{1<=i<k} b_i",
        };
        let e = BoundEntry::new(format!("novik-{}", nv.inequality), st);
        entries.push(match nv.check {
            Some(chk) if pseudo => {
                let e = e.with(chk).note(format!("k={}", nv.k));
                if nv.inequality == 3 { e.note("compared times (n+k+2)") } else { e }
            }
            Some(_) => e.note(manifold_note),
            None => e.note(format!("n outside the window for k={}", nv.k)),
        });
    }

    BoundReport { n, d, f, homology: h, betti_f2: b2, orientable, hints: hints.clone(), entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_values() {
        assert_eq!(heawood_min_vertices(2, false), 4);
        assert_eq!(heawood_min_vertices(1, false), 6);
        assert_eq!(heawood_min_vertices(0, false), 7);
        assert_eq!(heawood_min_vertices(0, true), 8);
        assert_eq!(heawood_min_vertices(-1, true), 9);
        assert_eq!(heawood_min_vertices(-2, true), 10);
    }

    #[test]
    fn brehm_kuehnel_values() {
        let h = TopologyHints { is_sphere: Some(false), ..Default::default() };
        let min = |d| brehm_kuehnel_bounds(d, &h)[0].min_vertices;
        assert_eq!(min(5), 12);
        assert_eq!(min(6), 13);
        assert_eq!(min(4), 9);
        assert_eq!(min(3), 9);
        let h: TopologyHints = "not-simply-connected".parse().unwrap();
        assert_eq!(brehm_kuehnel_bounds(3, &h)[0].min_vertices, 9);
    }

    #[test]
    fn kuehnel_4d() {
        assert!(kuehnel_4d_check(9, 3).check.sharp);
        assert!(kuehnel_4d_check(16, 24).check.sharp);
        let k = kuehnel_4d_check(10, 4);
        assert!(k.check.sharp && k.excluded);
    }

    #[test]
    fn cyclic() {
        assert_eq!(cyclic_f(3, 9).counts, vec![9, 36, 54, 27]);
        assert_eq!(cyclic_f(2, 4).counts, vec![4, 6, 4]);
        assert_eq!(cyclic_f(4, 6).counts, vec![6, 15, 20, 15, 6]);
    }

    #[test]
    fn surfaces_and_projective() {
        assert_eq!(surface_f_from_n(7, 0).counts, vec![7, 21, 14]);
        assert_eq!(arnoux_marin_min(ProjectiveSpace::Real, 4), MinVertices { bound: 15, effective: 16 });
        assert_eq!(arnoux_marin_min(ProjectiveSpace::Complex, 2).effective, 9);
        assert_eq!(bagchi_datta_min(3), Some(12));
    }

    #[test]
    fn novik_torus() {
        let e = novik_bounds(2, 7, &[1, 2, 1]);
        assert!(e[0].applicable);
        assert!(e[0].check.unwrap().sharp);
    }
}
