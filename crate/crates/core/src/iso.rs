//! Altshuler–Steinberg determinants, canonical labelling, isomorphism and
//! automorphism groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::complex::{Complex, Label, UnionFind};
use crate::par;

/// `det(A·Aᵀ)` for an integer matrix given by rows, via fraction-free elimination.
fn gram_determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum::<i64>()))
                .collect()
        })
        .collect();
    bareiss(&mut m)
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Vertex-facet incidence rows of `c`.
fn incidence(c: &Complex) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; c.num_facets()]; c.n()];
    for (j, f) in c.facets().iter().enumerate() {
        for &v in f.vertices() {
            rows[v as usize - 1][j] = 1;
        }
    }
    rows
}

/// The Altshuler–Steinberg determinant `det(A·Aᵀ)` of the vertex-facet incidence matrix.
pub fn as_determinant(c: &Complex) -> BigInt {
    gram_determinant(&incidence(c))
}

/// The determinant of every vertex link, indexed by `label - 1`.
pub fn as_link_determinants(c: &Complex) -> Vec<BigInt> {
    par::map((1..=c.n() as Label).collect(), |v| match c.vertex_link(v) {
        Ok(l) => as_determinant(&l),
        Err(_) => BigInt::zero(),
    })
}

/// `det(A·Aᵀ) mod p` for a prime `p < 2^62`.
pub fn as_determinant_mod(c: &Complex, p: u64) -> u64 {
    let rows = incidence(c);
    let n = rows.len();
    let p128 = p as u128;
    let mut m: Vec<Vec<u128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rows[i].iter().zip(&rows[j]).map(|(a, b)| (a * b) as u128).sum::<u128>() % p128)
                .collect()
        })
        .collect();
    let pow = |mut b: u128, mut e: u128| {
        let mut r = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p128;
            }
            b = b * b % p128;
            e >>= 1;
        }
        r
    };
    let mut det = 1u128;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| m[r][k] != 0) else { return 0 };
        if r != k {
            m.swap(r, k);
            det = (p128 - det) % p128;
        }
        det = det * m[k][k] % p128;
        let inv = pow(m[k][k], p128 - 2);
        for i in k + 1..n {
            let factor = m[i][k] * inv % p128;
            if factor == 0 {
                continue;
            }
            for j in k..n {
                let sub = factor * m[k][j] % p128;
                m[i][j] = (m[i][j] + p128 - sub) % p128;
            }
        }
    }
    det as u64
}

/// Primes used for the modular fast path of [`are_isomorphic`].
pub const CHECK_PRIMES: [u64; 2] = [4611686018427387847, 4611686018427387817];

/// A vertex permutation `perm[v-1] = image of v`.
pub type Permutation = Vec<Label>;

/// Writes a permutation in cycle notation, fixed points omitted: `(1,2)(3,4,5)`.
pub fn cycle_notation(p: &[Label]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] as usize == s + 1 {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x] as usize - 1;
        }
        out.push('(');
        out.push_str(&cyc.join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parses cycle notation on `1..=n`.
pub fn parse_cycles(s: &str, n: usize) -> Option<Permutation> {
    let mut p: Permutation = (1..=n as Label).collect();
    let mut seen = vec![false; n];
    for cyc in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let body = cyc.strip_prefix('(')?;
        if body.trim().is_empty() {
            continue;
        }
        let elems: Vec<Label> = body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
        for (i, &a) in elems.iter().enumerate() {
            if a == 0 || a as usize > n || seen[a as usize - 1] {
                return None;
            }
            seen[a as usize - 1] = true;
            p[a as usize - 1] = elems[(i + 1) % elems.len()];
        }
    }
    Some(p)
}

/// Whether `p` maps the facet set of `c` onto itself.
pub fn is_automorphism(c: &Complex, p: &[Label]) -> bool {
    p.len() == c.n() && c.relabel(p) == *c
}

fn compose(a: &[Label], b: &[Label]) -> Permutation {
    // a after b
    b.iter().map(|&x| a[x as usize - 1]).collect()
}

/// Generated group by breadth-first closure; `None` once it exceeds `limit` elements.
pub fn closure_order(gens: &[Permutation], n: usize, limit: usize) -> Option<usize> {
    let id: Permutation = (1..=n as Label).collect();
    let mut seen = rustc_hash::FxHashSet::default();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for h in gens {
            let x = compose(h, &g);
            if seen.insert(x.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push(x);
            }
        }
    }
    Some(seen.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescription {
    pub generators: Vec<Permutation>,
    pub order: u128,
}

impl fmt::Display for GroupDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order)?;
        for g in &self.generators {
            writeln!(f, "{}", cycle_notation(g))?;
        }
        Ok(())
    }
}

/// Ordered partition of the vertices `0..n`.
type Partition = Vec<Vec<usize>>;

struct Leaf {
    lab: Vec<usize>,
    cert: Vec<u64>,
}

struct Searcher {
    n: usize,
    facets: Vec<u64>,
    incident: Vec<Vec<u64>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    /// `(prefix, first child)` for every node on the first path.
    first_path: Vec<(Vec<usize>, usize)>,
}

impl Searcher {
    fn new(c: &Complex) -> Self {
        let facets = c.facet_masks().expect("canonical labelling supports at most 64 vertices");
        let mut incident = vec![Vec::new(); c.n()];
        for &m in &facets {
            let mut r = m;
            while r != 0 {
                incident[r.trailing_zeros() as usize].push(m);
                r &= r - 1;
            }
        }
        Searcher { n: c.n(), facets, incident, first: None, best: None, gens: Vec::new(), first_path: Vec::new() }
    }

    /// Splits cells by the multiset of cell-index tuples of incident facets until stable.
    fn refine(&self, mut part: Partition) -> Partition {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, cell) in part.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let mut next: Partition = Vec::with_capacity(part.len());
            let mut changed = false;
            for cell in &part {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<Vec<u32>>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<Vec<u32>> = self.incident[v]
                            .iter()
                            .map(|&m| {
                                let mut t = Vec::new();
                                let mut r = m & !(1u64 << v);
                                while r != 0 {
                                    t.push(cell_of[r.trailing_zeros() as usize] as u32);
                                    r &= r - 1;
                                }
                                t.sort_unstable();
                                t
                            })
                            .collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let start = next.len();
                next.push(vec![keyed[0].1]);
                for w in 1..keyed.len() {
                    if keyed[w].0 != keyed[w - 1].0 {
                        next.push(Vec::new());
                    }
                    next.last_mut().unwrap().push(keyed[w].1);
                }
                if next.len() - start > 1 {
                    changed = true;
                }
            }
            part = next;
            if !changed {
                return part;
            }
        }
    }

    fn leaf(&self, part: &Partition) -> Leaf {
        let mut lab = vec![0usize; self.n];
        for (i, cell) in part.iter().enumerate() {
            lab[cell[0]] = i;
        }
        let mut cert: Vec<u64> = self
            .facets
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                let mut r = m;
                while r != 0 {
                    out |= 1u64 << lab[r.trailing_zeros() as usize];
                    r &= r - 1;
                }
                out
            })
            .collect();
        cert.sort_unstable();
        Leaf { lab, cert }
    }

    /// The automorphism taking `from`'s labelling onto `to`'s: `v ↦ to⁻¹(from(v))`.
    fn automorphism(&self, from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; self.n];
        for (v, &p) in to.iter().enumerate() {
            inv[p] = v;
        }
        from.iter().map(|&p| inv[p]).collect()
    }

    fn orbits_fixing(&self, prefix: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for g in self.gens.iter().filter(|g| prefix.iter().all(|&v| g[v] == v)) {
            for v in 0..self.n {
                uf.union(v, g[v]);
            }
        }
        uf
    }

    /// Returns the level to jump back to when an automorphism to the first leaf was found.
    fn search(&mut self, part: Partition, prefix: &mut Vec<usize>, diverged: Option<usize>) -> Option<usize> {
        let level = prefix.len();
        let Some(target) = part
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
        else {
            let leaf = self.leaf(&part);
            let Some(first) = &self.first else {
                self.best = Some(Leaf { lab: leaf.lab.clone(), cert: leaf.cert.clone() });
                self.first = Some(leaf);
                return None;
            };
            if leaf.cert == first.cert {
                let g = self.automorphism(&leaf.lab, &first.lab);
                self.gens.push(g);
                return diverged;
            }
            let best = self.best.as_ref().unwrap();
            if leaf.cert == best.cert {
                let g = self.automorphism(&leaf.lab, &best.lab);
                self.gens.push(g);
            } else if leaf.cert < best.cert {
                self.best = Some(leaf);
            }
            return None;
        };
        let mut children = part[target].clone();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &children {
            if !explored.is_empty() {
                let mut uf = self.orbits_fixing(prefix);
                let rv = uf.find(v);
                if explored.iter().any(|&w| uf.find(w) == rv) {
                    continue;
                }
            }
            let mut next = part.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&x| x != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            let next = self.refine(next);
            let on_first = diverged.is_none() && explored.is_empty();
            if on_first {
                self.first_path.push((prefix.clone(), v));
            }
            prefix.push(v);
            let child_div = if diverged.is_none() && !explored.is_empty() { Some(level) } else { diverged };
            let jump = self.search(next, prefix, child_div);
            prefix.pop();
            explored.push(v);
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }
}

/// Invariant colour of each vertex: link face numbers, plus the link
/// determinant from dimension 3 on (surface links are cycles, where it adds nothing).
fn vertex_invariants(c: &Complex) -> Vec<(Vec<u64>, BigInt)> {
    par::map((1..=c.n() as Label).collect(), |v| {
        let link = c.vertex_link(v).expect("every label is a vertex");
        let det = if c.dim() >= 3 { as_determinant(&link) } else { BigInt::zero() };
        (link.f_vector().counts, det)
    })
}

fn initial_partition(c: &Complex) -> Partition {
    let inv = vertex_invariants(c);
    let mut order: Vec<usize> = (0..c.n()).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]).then(a.cmp(&b)));
    let mut part: Partition = Vec::new();
    for (k, &v) in order.iter().enumerate() {
        if k == 0 || inv[v] != inv[order[k - 1]] {
            part.push(Vec::new());
        }
        part.last_mut().unwrap().push(v);
    }
    part
}

fn run_search(c: &Complex) -> Searcher {
    let mut s = Searcher::new(c);
    let start = s.refine(initial_partition(c));
    s.search(start, &mut Vec::new(), None);
    s
}

/// Canonical representative and the relabelling (`perm[v-1]` = new label of `v`) producing it.
pub fn canonical_form(c: &Complex) -> (Complex, Permutation) {
    let s = run_search(c);
    let best = s.best.expect("search reaches a leaf");
    let perm: Permutation = best.lab.iter().map(|&p| p as Label + 1).collect();
    (c.relabel(&perm), perm)
}

/// Isomorphism test with fast rejection on f-vector, determinants and link determinants.
pub fn are_isomorphic(a: &Complex, b: &Complex) -> bool {
    if a.dim() != b.dim() || a.n() != b.n() || a.num_facets() != b.num_facets() {
        return false;
    }
    if a.f_vector() != b.f_vector() {
        return false;
    }
    if CHECK_PRIMES.iter().any(|&p| as_determinant_mod(a, p) != as_determinant_mod(b, p)) {
        return false;
    }
    let sorted = |c: &Complex| {
        let mut v = as_link_determinants(c);
        v.sort();
        v
    };
    if sorted(a) != sorted(b) {
        return false;
    }
    canonical_form(a).0 == canonical_form(b).0
}

/// Generators and order of the facet-preserving vertex permutations.
pub fn automorphism_group(c: &Complex) -> GroupDescription {
    let s = run_search(c);
    // |Aut| = product over the first path of the orbit length of the chosen child
    let mut order: u128 = 1;
    for (prefix, child) in &s.first_path {
        let mut uf = s.orbits_fixing(prefix);
        let r = uf.find(*child);
        order *= (0..s.n).filter(|&v| uf.find(v) == r).count() as u128;
    }
    let generators = s.gens.iter().map(|g| g.iter().map(|&x| x as Label + 1).collect()).collect();
    GroupDescription { generators, order }
}

/// Absolute value of a determinant, used when only magnitudes are compared.
pub fn abs_det(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::boundary_simplex;

    #[test]
    fn determinant_small() {
        // triangle boundary: A·Aᵀ = [[2,1,1],[1,2,1],[1,1,2]], det 4
        let c = Complex::from_facets([[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(as_determinant(&c), BigInt::from(4));
        assert_eq!(as_determinant_mod(&c, 7), 4);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let mut m: Vec<Vec<BigInt>> =
            [[0, 2, 1], [3, 0, 4], [1, 5, 2]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        // 0·(0-20) - 2·(6-4) + 1·(15-0) = 11
        assert_eq!(bareiss(&mut m), BigInt::from(11));
    }

    #[test]
    fn simplex_group() {
        for d in 1..=4 {
            let g = automorphism_group(&boundary_simplex(d));
            assert_eq!(g.order, (1..=d as u128 + 2).product::<u128>());
        }
    }

    #[test]
    fn cycles_roundtrip() {
        let p = parse_cycles("(1,2,3)(5,6)", 6).unwrap();
        assert_eq!(p, vec![2, 3, 1, 4, 6, 5]);
        assert_eq!(cycle_notation(&p), "(1,2,3)(5,6)");
        assert!(parse_cycles("(1,1)", 3).is_none());
    }

    #[test]
    fn canonical_form_detects_relabelling() {
        let c = Complex::from_facets([[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 5], [2, 3, 6], [3, 4, 6], [4, 5, 6], [2, 5, 6]])
            .unwrap();
        let p = vec![4, 6, 1, 2, 5, 3];
        let d = c.relabel(&p);
        assert_eq!(canonical_form(&c).0, canonical_form(&d).0);
        assert!(are_isomorphic(&c, &d));
        assert_eq!(automorphism_group(&c).order, 48);
    }
}
