//! Isomorph-free enumeration of triangulated closed surfaces and 2-spheres.
//!
//! Surfaces are generated by closing vertex stars in label order, starting from the
//! star of a vertex of maximal degree. A labelled surface is determined by a
//! flag `(x, y, z)` (a vertex of maximal degree, a neighbour and a direction around
//! the link) through the same closing process, which yields a code. A generated
//! surface is kept when its own code is the least over all flags, so every class
//! comes out exactly once.
//!
//! 2-spheres are grown level by level through vertex splits from the tetrahedron
//! boundary and deduplicated by the least flag code.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::complex::{Complex, Label};
use crate::error::{Error, Result};
use crate::homology::coherent_orientation;
use crate::par;
use crate::iso::canonical_form;

/// Default largest `n` for [`enumerate_surfaces`].
pub const SURFACE_CAP: usize = 10;
/// Default largest `n` for [`enumerate_spheres`].
pub const SPHERE_CAP: usize = 12;
/// Hard limit of the fixed-size tables.
pub const MAX_CENSUS_VERTICES: usize = 16;

const M: usize = MAX_CENSUS_VERTICES;
const NONE: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceClass {
    pub orientable: bool,
    pub genus: u32,
    pub chi: i64,
}

impl SurfaceClass {
    pub fn from_chi(chi: i64, orientable: bool) -> Self {
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };
        SurfaceClass { orientable, genus: genus as u32, chi }
    }

    /// `S2`, `T2`, `RP2`, `K2`, otherwise `M(g,±)`.
    pub fn name(&self) -> String {
        match (self.orientable, self.genus) {
            (true, 0) => "S2".into(),
            (true, 1) => "T2".into(),
            (false, 1) => "RP2".into(),
            (false, 2) => "K2".into(),
            (o, g) => format!("M({g},{})", if o { '+' } else { '-' }),
        }
    }
}

impl Ord for SurfaceClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (!self.orientable, self.genus).cmp(&(!other.orientable, other.genus))
    }
}

impl PartialOrd for SurfaceClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub cap: Option<usize>,
    pub keep_representatives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub counts: BTreeMap<SurfaceClass, u64>,
    /// Canonical representatives sorted by facet list, if requested.
    pub representatives: Option<Vec<(SurfaceClass, Complex)>>,
}

impl CensusResult {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, name: &str) -> u64 {
        self.counts.iter().find(|(c, _)| c.name() == name).map(|(_, &k)| k).unwrap_or(0)
    }

    /// One `n=.. chi=.. orient=.. genus=.. count=..` line per class.
    pub fn lines(&self) -> Vec<String> {
        self.counts
            .iter()
            .map(|(c, k)| {
                format!(
                    "n={} chi={} orient={} genus={} count={}",
                    self.n,
                    c.chi,
                    if c.orientable { '+' } else { '-' },
                    c.genus,
                    k
                )
            })
            .collect()
    }
}

/// Orientability and genus of a closed surface.
pub fn classify_surface(c: &Complex) -> Result<SurfaceClass> {
    if c.dim() != 2 {
        return Err(Error::NotASurface(format!("dimension {}", c.dim())));
    }
    if !c.is_pseudomanifold().is_yes() {
        return Err(Error::NotASurface("not a pseudomanifold".into()));
    }
    for v in 1..=c.n() as Label {
        let link = c.vertex_link(v)?;
        if !link.is_pseudomanifold().is_yes() {
            return Err(Error::NotASurface(format!("link of {v} is not a single cycle")));
        }
    }
    let chi = c.f_vector().euler;
    Ok(SurfaceClass::from_chi(chi, coherent_orientation(c).is_some()))
}

/// A closed surface on labels `0..n` with the two third vertices of every edge.
#[derive(Clone)]
struct Surf {
    n: usize,
    opp: [[[u8; 2]; M]; M],
    cnt: [[u8; M]; M],
    deg: [u8; M],
}

impl Surf {
    fn new(n: usize, tris: &[[u8; 3]]) -> Surf {
        let mut s = Surf { n, opp: [[[NONE; 2]; M]; M], cnt: [[0; M]; M], deg: [0; M] };
        for t in tris {
            for (a, b, c) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[0], t[2], t[1])] {
                let (a, b) = (a as usize, b as usize);
                let slot = s.cnt[a][b] as usize;
                s.opp[a][b][slot] = c;
                s.opp[b][a][slot] = c;
                if slot == 0 {
                    s.deg[a] += 1;
                    s.deg[b] += 1;
                }
                s.cnt[a][b] += 1;
                s.cnt[b][a] += 1;
            }
        }
        s
    }

    fn other(&self, a: u8, b: u8, not: u8) -> u8 {
        let o = self.opp[a as usize][b as usize];
        if o[0] == not { o[1] } else { o[0] }
    }

    /// Link cycle of `x` starting `y, z, ...`.
    fn link_cycle(&self, x: u8, y: u8, z: u8) -> Vec<u8> {
        let k = self.deg[x as usize] as usize;
        let mut cyc = Vec::with_capacity(k);
        cyc.push(y);
        cyc.push(z);
        while cyc.len() < k {
            let (p, q) = (cyc[cyc.len() - 2], cyc[cyc.len() - 1]);
            cyc.push(self.other(x, q, p));
        }
        cyc
    }

    fn max_degree(&self) -> u8 {
        self.deg[..self.n].iter().copied().max().unwrap_or(0)
    }

    fn flags(&self) -> Vec<(u8, u8, u8)> {
        let k = self.max_degree();
        let mut out = Vec::new();
        for x in 0..self.n as u8 {
            if self.deg[x as usize] != k {
                continue;
            }
            for y in 0..self.n as u8 {
                if self.cnt[x as usize][y as usize] == 2 {
                    let [z1, z2] = self.opp[x as usize][y as usize];
                    out.push((x, y, z1));
                    out.push((x, y, z2));
                }
            }
        }
        out
    }

    /// Code of the flag compared against `target`. With `stop_below`, returns as
    /// soon as the code drops below the target; it always returns as soon as it
    /// rises above.
    fn flag_code(&self, flag: (u8, u8, u8), target: Option<&[u8]>, stop_below: bool) -> (Ordering, Vec<u8>) {
        let (x, y, z) = flag;
        let k = self.deg[x as usize] as usize;
        let mut lab = [NONE; M];
        let mut inv = [0u8; M];
        lab[x as usize] = 0;
        inv[0] = x;
        for (i, &c) in self.link_cycle(x, y, z).iter().enumerate() {
            lab[c as usize] = (i + 1) as u8;
            inv[i + 1] = c;
        }
        let mut used = k + 1;
        let mut cnt = [[0u8; M]; M];
        let mut third = [[NONE; M]; M];
        let mut ntri = [0u8; M];
        for i in 1..=k {
            add_tri([0, i as u8, (i % k + 1) as u8], &mut cnt, &mut third, &mut ntri);
        }
        let mut code = Vec::with_capacity(2 * self.n);
        let mut ord = if target.is_some() { Ordering::Equal } else { Ordering::Less };
        loop {
            let Some(v) = (0..used).find(|&a| ntri[a] < self.deg[inv[a] as usize]) else { break };
            let u = (0..used).find(|&b| cnt[v][b] == 1).expect("open vertex has an open edge");
            let t = third[v][u];
            let w_old = self.other(inv[v], inv[u], inv[t as usize]);
            if lab[w_old as usize] == NONE {
                lab[w_old as usize] = used as u8;
                inv[used] = w_old;
                used += 1;
            }
            let w = lab[w_old as usize];
            if ord == Ordering::Equal {
                match w.cmp(&target.unwrap()[code.len()]) {
                    Ordering::Greater => return (Ordering::Greater, code),
                    Ordering::Less => {
                        ord = Ordering::Less;
                        if stop_below {
                            return (ord, code);
                        }
                    }
                    Ordering::Equal => {}
                }
            }
            code.push(w);
            add_tri([v as u8, u as u8, w], &mut cnt, &mut third, &mut ntri);
        }
        (ord, code)
    }

    /// Least code over all flags, prefixed by the maximal degree.
    fn canonical_code(&self) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        for flag in self.flags() {
            let (ord, code) = self.flag_code(flag, best.as_deref(), false);
            if ord == Ordering::Less {
                best = Some(code);
            }
        }
        let mut key = vec![self.max_degree()];
        key.extend(best.unwrap_or_default());
        key
    }
}

type Table = [[u8; M]; M];

fn add_tri([a, b, c]: [u8; 3], cnt: &mut Table, third: &mut Table, ntri: &mut [u8; M]) {
    for (p, q, r) in [(a, b, c), (b, c, a), (a, c, b)] {
        let (p, q) = (p as usize, q as usize);
        if cnt[p][q] == 0 {
            third[p][q] = r;
            third[q][p] = r;
        }
        cnt[p][q] += 1;
        cnt[q][p] += 1;
    }
    for v in [a, b, c] {
        ntri[v as usize] += 1;
    }
}

fn to_complex(tris: &[[u8; 3]]) -> Complex {
    Complex::from_facets(tris.iter().map(|t| t.iter().map(|&v| v as Label + 1).collect::<Vec<_>>()))
        .expect("generated surface is a valid complex")
}

/// Partial surface grown by closing vertex stars.
#[derive(Clone)]
struct Partial {
    n: usize,
    k: u8,
    cnt: [[u8; M]; M],
    opp: [[[u8; 2]; M]; M],
    deg: [u8; M],
    ntri: [u8; M],
    closed: [bool; M],
    used: usize,
    code: Vec<u8>,
    tris: Vec<[u8; 3]>,
}

impl Partial {
    fn star(n: usize, k: usize) -> Partial {
        let mut p = Partial {
            n,
            k: k as u8,
            cnt: [[0; M]; M],
            opp: [[[NONE; 2]; M]; M],
            deg: [0; M],
            ntri: [0; M],
            closed: [false; M],
            used: k + 1,
            code: Vec::new(),
            tris: Vec::new(),
        };
        for i in 1..=k {
            p.push(0, i as u8, (i % k + 1) as u8);
        }
        p.closed[0] = true;
        p
    }

    fn path_end(&self, x: usize, y: u8) -> u8 {
        let mut prev = y;
        let mut cur = self.opp[x][y as usize][0];
        loop {
            if self.cnt[x][cur as usize] == 1 {
                return cur;
            }
            let o = self.opp[x][cur as usize];
            let next = if o[0] == prev { o[1] } else { o[0] };
            prev = cur;
            cur = next;
        }
    }

    fn push(&mut self, a: u8, b: u8, c: u8) {
        for (p, q, r) in [(a, b, c), (b, c, a), (a, c, b)] {
            let (p, q) = (p as usize, q as usize);
            let slot = self.cnt[p][q] as usize;
            self.opp[p][q][slot] = r;
            self.opp[q][p][slot] = r;
            if slot == 0 {
                self.deg[p] += 1;
                self.deg[q] += 1;
            }
            self.cnt[p][q] += 1;
            self.cnt[q][p] += 1;
        }
        for v in [a, b, c] {
            self.ntri[v as usize] += 1;
        }
        self.tris.push([a, b, c]);
    }

    fn pop(&mut self) {
        let [a, b, c] = self.tris.pop().expect("nonempty");
        for (p, q) in [(a, b), (b, c), (a, c)] {
            let (p, q) = (p as usize, q as usize);
            self.cnt[p][q] -= 1;
            self.cnt[q][p] -= 1;
            let slot = self.cnt[p][q] as usize;
            self.opp[p][q][slot] = NONE;
            self.opp[q][p][slot] = NONE;
            if slot == 0 {
                self.deg[p] -= 1;
                self.deg[q] -= 1;
            }
        }
        for v in [a, b, c] {
            self.ntri[v as usize] -= 1;
            self.closed[v as usize] = false;
        }
    }

    /// Adds `{v,u,w}` if every link stays a disjoint union of paths or closes up
    /// into a single cycle.
    fn try_add(&mut self, v: u8, u: u8, w: u8) -> bool {
        let mut cycles = [false; 3];
        for (i, (x, y, z)) in [(v, u, w), (u, v, w), (w, v, u)].into_iter().enumerate() {
            let xs = x as usize;
            if self.closed[xs] {
                return false;
            }
            let (cy, cz) = (self.cnt[xs][y as usize], self.cnt[xs][z as usize]);
            if cy == 2 || cz == 2 || (cy == 1 && cz == 1 && self.opp[xs][y as usize][0] == z) {
                return false;
            }
            if self.deg[xs] + u8::from(cy == 0) + u8::from(cz == 0) > self.k {
                return false;
            }
            cycles[i] = cy == 1 && cz == 1 && self.path_end(xs, y) == z;
        }
        self.push(v, u, w);
        for (i, x) in [v, u, w].into_iter().enumerate() {
            if cycles[i] {
                let xs = x as usize;
                if self.deg[xs] != self.ntri[xs] {
                    self.pop();
                    return false;
                }
                self.closed[xs] = true;
            }
        }
        true
    }

    fn is_canonical(&self) -> bool {
        let s = Surf::new(self.n, &self.tris);
        s.flags()
            .into_iter()
            .filter(|&f| f != (0, 1, 2))
            .all(|f| s.flag_code(f, Some(&self.code), true).0 != Ordering::Less)
    }

    fn search(&mut self, out: &mut Vec<Vec<[u8; 3]>>) {
        let Some(v) = (0..self.used).find(|&x| !self.closed[x]) else {
            if self.used == self.n && self.is_canonical() {
                out.push(self.tris.clone());
            }
            return;
        };
        let u = (0..self.used).find(|&y| self.cnt[v][y] == 1).expect("open vertex has an open edge");
        let top = if self.used < self.n { self.used + 1 } else { self.used };
        for w in 0..top {
            if w == v || w == u {
                continue;
            }
            let fresh = w == self.used;
            if self.try_add(v as u8, u as u8, w as u8) {
                if fresh {
                    self.used += 1;
                }
                self.code.push(w as u8);
                self.search(out);
                self.code.pop();
                if fresh {
                    self.used -= 1;
                }
                self.pop();
            }
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > M {
        return Err(Error::CapExceeded { requested: n, cap: cap.min(M) });
    }
    Ok(())
}

/// All triangulated closed surfaces on exactly `n` vertices, one per isomorphism class.
pub fn enumerate_surfaces(n: usize) -> Result<CensusResult> {
    enumerate_surfaces_with(n, &CensusOptions::default())
}

pub fn enumerate_surfaces_with(n: usize, opts: &CensusOptions) -> Result<CensusResult> {
    check_cap(n, opts.cap.unwrap_or(SURFACE_CAP))?;
    if n < 4 {
        return Err(Error::NotASurface(format!("no closed surface has {n} vertices")));
    }
    let tasks: Vec<usize> = (3..n).collect();
    let found: Vec<Vec<Vec<[u8; 3]>>> = par::map(tasks, |k| {
        let mut out = Vec::new();
        Partial::star(n, k).search(&mut out);
        out
    });
    let mut counts = BTreeMap::new();
    let mut reps = Vec::new();
    for tris in found.into_iter().flatten() {
        let c = to_complex(&tris);
        let chi = n as i64 - tris.len() as i64 / 2;
        let class = SurfaceClass::from_chi(chi, coherent_orientation(&c).is_some());
        *counts.entry(class).or_insert(0) += 1;
        if opts.keep_representatives {
            reps.push((class, canonical_form(&c).0));
        }
    }
    let representatives = opts.keep_representatives.then(|| {
        reps.sort_by(|a, b| a.1.facets().cmp(b.1.facets()));
        reps
    });
    Ok(CensusResult { n, counts, representatives })
}

/// Vertex splits of `v`: the link arc `c_i..c_j` moves to a new vertex.
fn splits(s: &Surf, tris: &[[u8; 3]]) -> Vec<Vec<[u8; 3]>> {
    let n = s.n as u8;
    let mut out = Vec::new();
    for v in 0..n {
        let y = (0..n).find(|&y| s.cnt[v as usize][y as usize] == 2).expect("vertex has neighbours");
        let z = s.opp[v as usize][y as usize][0];
        let cyc = s.link_cycle(v, y, z);
        let k = cyc.len();
        for i in 0..k {
            for j in i + 1..k {
                let moved: Vec<[u8; 3]> = (i..j).map(|t| sorted3(v, cyc[t], cyc[t + 1])).collect();
                let mut next: Vec<[u8; 3]> = tris.iter().filter(|t| !moved.contains(t)).copied().collect();
                next.extend((i..j).map(|t| sorted3(n, cyc[t], cyc[t + 1])));
                next.push(sorted3(v, n, cyc[i]));
                next.push(sorted3(v, n, cyc[j]));
                out.push(next);
            }
        }
    }
    out
}

fn sorted3(a: u8, b: u8, c: u8) -> [u8; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Canonical codes and representatives of all 2-spheres on `n` vertices.
fn sphere_level(n: usize) -> BTreeMap<Vec<u8>, Vec<[u8; 3]>> {
    let k4: Vec<[u8; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut level = BTreeMap::new();
    level.insert(Surf::new(4, &k4).canonical_code(), k4);
    for m in 4..n {
        let parents: Vec<Vec<[u8; 3]>> = level.into_values().collect();
        let children = par::map(parents, |tris| {
            let s = Surf::new(m, &tris);
            let mut local: FxHashMap<Vec<u8>, Vec<[u8; 3]>> = FxHashMap::default();
            for child in splits(&s, &tris) {
                local.entry(Surf::new(m + 1, &child).canonical_code()).or_insert(child);
            }
            local.into_iter().collect::<Vec<_>>()
        });
        let mut next = BTreeMap::new();
        for (key, tris) in children.into_iter().flatten() {
            next.entry(key).or_insert(tris);
        }
        level = next;
    }
    level
}

/// Number of combinatorial types of triangulated 2-spheres on `n` vertices.
pub fn enumerate_spheres(n: usize) -> Result<u64> {
    enumerate_spheres_with(n, &CensusOptions::default()).map(|r| r.total())
}

pub fn enumerate_spheres_with(n: usize, opts: &CensusOptions) -> Result<CensusResult> {
    check_cap(n, opts.cap.unwrap_or(SPHERE_CAP))?;
    if n < 4 {
        return Err(Error::NotASurface(format!("no 2-sphere has {n} vertices")));
    }
    let level = sphere_level(n);
    let class = SurfaceClass::from_chi(2, true);
    let mut counts = BTreeMap::new();
    counts.insert(class, level.len() as u64);
    let representatives = opts.keep_representatives.then(|| {
        let mut reps: Vec<(SurfaceClass, Complex)> = level.values().map(|t| (class, canonical_form(&to_complex(t)).0)).collect();
        reps.sort_by(|a, b| a.1.facets().cmp(b.1.facets()));
        reps
    });
    Ok(CensusResult { n, counts, representatives })
}
