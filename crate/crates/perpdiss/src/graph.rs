//! Real additive gain graphs.
//!
//! A gain graph is a multigraph whose edges carry exact rational gains read
//! with an orientation: the gain of an edge from `j` to `i` is the negative of
//! its gain from `i` to `j`. Edges are stored canonically with `i ≤ j` and the
//! gain recorded in that direction; reading the reverse orientation negates.
//!
//! An edge set is *balanced* when around every circle the gains, taken in a
//! consistent direction, sum to zero — equivalently, when the set admits a
//! vertex potential θ with `gain(e; i, j) = θ(i) − θ(j)`. Switching by a
//! function η replaces each gain by `gain − η(i) + η(j)`, so switching by the
//! potential of a balanced set zeroes that set, which is what contraction
//! uses.
//!
//! Loops with nonzero gain are silently discarded at construction; loops with
//! gain zero are retained and flagged degenerate (they stand for the whole
//! space acting as a degenerate hyperplane, which kills the region count but
//! not the face counts downstream).

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::Error;
use crate::exact::Rat;
use crate::Result;

/// One edge with endpoints `i ≤ j` and gain read from `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub i: usize,
    pub j: usize,
    pub gain: Rat,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.i == self.j
    }
}

/// Vertex function used for switching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction {
    values: Vec<Rat>,
}

impl SwitchingFunction {
    /// One value per vertex 1..n.
    pub fn new(values: Vec<Rat>) -> Self {
        SwitchingFunction { values }
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        SwitchingFunction { values: vec![c; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rat {
        &self.values[v - 1]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn negated(&self) -> Self {
        SwitchingFunction {
            values: self.values.iter().map(|x| -x).collect(),
        }
    }
}

/// Disjoint nonempty vertex blocks covering 1..n, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidParam("empty partition block".into()));
            }
            for &v in b {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidParam(format!("bad partition vertex {v}")));
                }
                seen[v] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidParam("partition does not cover 1..n".into()));
        }
        Ok(Partition { blocks })
    }

    /// Each vertex its own block.
    pub fn discrete(n: usize) -> Self {
        Partition {
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    /// All vertices in one block.
    pub fn single(n: usize) -> Self {
        Partition {
            blocks: vec![(1..=n).collect()],
        }
    }

    /// From a component id per vertex (1-based vertices, any id scheme).
    pub fn from_components(comp: &[usize]) -> Self {
        let mut map = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for (idx, &c) in comp.iter().enumerate() {
            map.entry(c).or_default().push(idx + 1);
        }
        let mut blocks: Vec<Vec<usize>> = map.into_values().collect();
        blocks.sort();
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing v (blocks are in canonical order).
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("vertex not covered by partition")
    }
}

/// Which notion of balance is in force.
///
/// `Exact` is gain balance: circles must sum to zero. `ZOnly` is the biased
/// notion appropriate to non-Pythagorean descriptors (α ≠ 0): a set is
/// balanced iff every circle lies inside the zero-gain edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BalanceMode {
    Exact,
    ZOnly,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    i: usize,
    j: usize,
    gain: Rat,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    #[serde(default = "Rat::zero")]
    alpha: Rat,
    edges: Vec<EdgeJson>,
}

/// A real additive gain graph on vertices 1..n with a descriptor exponent α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainGraph {
    n: usize,
    edges: Vec<Edge>,
    alpha: Rat,
}

impl GainGraph {
    /// Build from raw `(i, j, gain)` triples. Gains are re-oriented so the
    /// stored endpoint pair has `i ≤ j`; nonzero-gain loops are discarded.
    pub fn new(n: usize, raw: Vec<(usize, usize, Rat)>, alpha: Rat) -> Result<Self> {
        let mut edges = Vec::with_capacity(raw.len());
        for (i, j, gain) in raw {
            if i == 0 || i > n || j == 0 || j > n {
                return Err(Error::Input(format!(
                    "edge endpoint ({i},{j}) outside 1..{n}"
                )));
            }
            if i == j && !gain.is_zero() {
                continue; // ideal hyperplane: nothing in E^d
            }
            let (i, j, gain) = if i <= j { (i, j, gain) } else { (j, i, -gain) };
            edges.push(Edge {
                id: edges.len(),
                i,
                j,
                gain,
            });
        }
        Ok(GainGraph { n, edges, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn with_alpha(mut self, alpha: Rat) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        self.edges.get(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Oriented gain φ(e; from, to).
    pub fn gain(&self, id: usize, from: usize, to: usize) -> Result<Rat> {
        let e = self.edge(id)?;
        if e.i == from && e.j == to {
            Ok(e.gain.clone())
        } else if e.i == to && e.j == from {
            Ok(-e.gain.clone())
        } else {
            Err(Error::InvalidParam(format!(
                "edge {id} does not join {from} and {to}"
            )))
        }
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Zero-gain loops: degenerate hyperplanes (the whole space).
    pub fn degenerate_loops(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.is_loop())
            .map(|e| e.id)
            .collect()
    }

    /// Ids of the zero-gain edges Z.
    pub fn zero_set(&self) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|e| e.gain.is_zero())
            .map(|e| e.id)
            .collect()
    }

    fn check_subset(&self, s: &BTreeSet<usize>) -> Result<()> {
        match s.iter().find(|&&id| id >= self.edges.len()) {
            Some(&id) => Err(Error::UnknownEdge(id)),
            None => Ok(()),
        }
    }

    /// Vertex partition induced by the components of (V, S), isolated
    /// vertices included as singleton blocks.
    pub fn component_partition(&self, s: &BTreeSet<usize>) -> Result<Partition> {
        self.check_subset(s)?;
        let mut dsu = Dsu::new(self.n);
        for &id in s {
            let e = &self.edges[id];
            dsu.union(e.i - 1, e.j - 1);
        }
        let comp: Vec<usize> = (0..self.n).map(|v| dsu.find(v)).collect();
        Ok(Partition::from_components(&comp))
    }

    /// Exact-mode balance with certificate: `Some(θ)` iff S is balanced, with
    /// θ(i) − θ(j) = gain(e; i, j) for every e ∈ S and the smallest vertex of
    /// each component pinned to 0. Every vertex gets a value (isolated
    /// vertices are their own roots).
    pub fn potential(&self, s: &BTreeSet<usize>) -> Result<Option<Vec<Rat>>> {
        self.check_subset(s)?;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![vec![]; self.n]; // (edge id, other endpoint 0-based)
        for &id in s {
            let e = &self.edges[id];
            if e.is_loop() {
                if !e.gain.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            adj[e.i - 1].push((id, e.j - 1));
            adj[e.j - 1].push((id, e.i - 1));
        }
        let mut theta: Vec<Option<Rat>> = vec![None; self.n];
        for root in 0..self.n {
            if theta[root].is_some() {
                continue;
            }
            theta[root] = Some(Rat::zero());
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let theta_u = theta[u].clone().unwrap();
                for &(id, v) in &adj[u] {
                    // φ(e; u+1, v+1) = θ(u) − θ(v)  ⟹  θ(v) = θ(u) − φ
                    let phi = self.gain(id, u + 1, v + 1)?;
                    let expected = &theta_u - &phi;
                    match &theta[v] {
                        Some(t) => {
                            if *t != expected {
                                return Ok(None);
                            }
                        }
                        None => {
                            theta[v] = Some(expected);
                            stack.push(v);
                        }
                    }
                }
            }
        }
        Ok(Some(theta.into_iter().map(Option::unwrap).collect()))
    }

    /// Balance test in either mode. `ZOnly` collapses the components of
    /// (V, S∩Z) and asks that S∖Z be a forest on the collapsed vertices,
    /// which is exactly "every circle of S lies inside Z".
    pub fn is_balanced(&self, s: &BTreeSet<usize>, mode: BalanceMode) -> Result<bool> {
        match mode {
            BalanceMode::Exact => Ok(self.potential(s)?.is_some()),
            BalanceMode::ZOnly => {
                self.check_subset(s)?;
                let mut dsu = Dsu::new(self.n);
                for &id in s {
                    let e = &self.edges[id];
                    if e.gain.is_zero() {
                        dsu.union(e.i - 1, e.j - 1);
                    }
                }
                for &id in s {
                    let e = &self.edges[id];
                    if e.gain.is_zero() {
                        continue;
                    }
                    if e.is_loop() || dsu.find(e.i - 1) == dsu.find(e.j - 1) {
                        return Ok(false);
                    }
                    dsu.union(e.i - 1, e.j - 1);
                }
                Ok(true)
            }
        }
    }

    /// Closure of S in the flat semilattice of the given mode, or None when S
    /// is not balanced in that mode.
    ///
    /// Exact mode adds every edge lying inside a component of S whose gain
    /// matches the potential difference of its endpoints (degenerate loops
    /// always match). ZOnly mode adds every zero-gain edge whose endpoints are
    /// joined by S∩Z.
    pub fn closure(
        &self,
        s: &BTreeSet<usize>,
        mode: BalanceMode,
    ) -> Result<Option<BTreeSet<usize>>> {
        match mode {
            BalanceMode::Exact => {
                let Some(theta) = self.potential(s)? else {
                    return Ok(None);
                };
                let mut dsu = Dsu::new(self.n);
                for &id in s {
                    let e = &self.edges[id];
                    dsu.union(e.i - 1, e.j - 1);
                }
                let mut out = s.clone();
                for e in &self.edges {
                    if out.contains(&e.id) {
                        continue;
                    }
                    if e.is_loop() {
                        out.insert(e.id); // degenerate loop: gain 0 = θ(i) − θ(i)
                        continue;
                    }
                    if dsu.find(e.i - 1) == dsu.find(e.j - 1)
                        && e.gain == &theta[e.i - 1] - &theta[e.j - 1]
                    {
                        out.insert(e.id);
                    }
                }
                Ok(Some(out))
            }
            BalanceMode::ZOnly => {
                if !self.is_balanced(s, BalanceMode::ZOnly)? {
                    return Ok(None);
                }
                let mut dsu = Dsu::new(self.n);
                for &id in s {
                    let e = &self.edges[id];
                    if e.gain.is_zero() {
                        dsu.union(e.i - 1, e.j - 1);
                    }
                }
                let mut out = s.clone();
                for e in &self.edges {
                    if e.gain.is_zero() && dsu.find(e.i - 1) == dsu.find(e.j - 1) {
                        out.insert(e.id);
                    }
                }
                Ok(Some(out))
            }
        }
    }

    /// Switch gains: `gain(e; i, j) ↦ gain(e; i, j) − η(i) + η(j)`. The
    /// underlying graph is unchanged.
    pub fn switch(&self, eta: &SwitchingFunction) -> GainGraph {
        assert_eq!(eta.len(), self.n, "switching function must be total");
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id,
                i: e.i,
                j: e.j,
                gain: &(&e.gain - eta.get(e.i)) + eta.get(e.j),
            })
            .collect();
        GainGraph {
            n: self.n,
            edges,
            alpha: self.alpha.clone(),
        }
    }

    /// Contract a balanced edge set: switch by its potential (so S becomes
    /// all-zero), identify each component of S to one vertex, delete S, and
    /// drop any loops whose switched gain is nonzero. Zero-gain loops are
    /// retained (degenerate). New vertices are the components of (V, S)
    /// numbered in order of their smallest original vertex.
    pub fn contract(&self, s: &BTreeSet<usize>) -> Result<GainGraph> {
        let theta = self.potential(s)?.ok_or(Error::Unbalanced)?;
        let switched = self.switch(&SwitchingFunction::new(theta));
        let pi = self.component_partition(s)?;
        let mut raw = Vec::new();
        for e in &switched.edges {
            if s.contains(&e.id) {
                continue;
            }
            let bi = pi.block_of(e.i) + 1;
            let bj = pi.block_of(e.j) + 1;
            if bi == bj && !e.gain.is_zero() {
                continue; // nonzero loop after contraction: discard
            }
            raw.push((bi, bj, e.gain.clone()));
        }
        GainGraph::new(pi.len(), raw, self.alpha.clone())
    }

    /// Collapse by a partition: identify the vertices of each block, keep the
    /// gains, and remove all loops.
    pub fn collapse(&self, pi: &Partition) -> Result<GainGraph> {
        let covered: usize = pi.blocks().iter().map(Vec::len).sum();
        if covered != self.n {
            return Err(Error::InvalidParam(
                "partition does not match vertex set".into(),
            ));
        }
        let mut raw = Vec::new();
        for e in &self.edges {
            let bi = pi.block_of(e.i) + 1;
            let bj = pi.block_of(e.j) + 1;
            if bi == bj {
                continue; // all loops removed, including degenerate ones
            }
            raw.push((bi, bj, e.gain.clone()));
        }
        GainGraph::new(pi.len(), raw, self.alpha.clone())
    }

    /// Planar statistics (q, s₂, t, t₀): edge count, second elementary
    /// symmetric function of the pair multiplicities, balanced triangles, and
    /// triangles inside the zero-gain set.
    pub fn planar_statistics(&self) -> Result<PlanarStats> {
        if self.has_loops() {
            return Err(Error::InvalidParam(
                "planar statistics require a loop-free graph".into(),
            ));
        }
        let q = self.edges.len();
        // multiplicities per unordered vertex pair
        let mut mult = std::collections::BTreeMap::<(usize, usize), usize>::new();
        for e in &self.edges {
            *mult.entry((e.i, e.j)).or_insert(0) += 1;
        }
        let total: i128 = q as i128;
        let sum_sq: i128 = mult.values().map(|&m| (m * m) as i128).sum();
        let s2 = (total * total - sum_sq) / 2;

        // group parallel edges for the triangle scan
        let mut by_pair = std::collections::BTreeMap::<(usize, usize), Vec<usize>>::new();
        for e in &self.edges {
            by_pair.entry((e.i, e.j)).or_default().push(e.id);
        }
        let mut t = 0i128;
        let mut t0 = 0i128;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                for k in j + 1..=self.n {
                    let (Some(eij), Some(ejk), Some(eik)) = (
                        by_pair.get(&(i, j)),
                        by_pair.get(&(j, k)),
                        by_pair.get(&(i, k)),
                    ) else {
                        continue;
                    };
                    for &a in eij {
                        for &b in ejk {
                            for &c in eik {
                                let sum = self.gain(a, i, j)?
                                    + self.gain(b, j, k)?
                                    + self.gain(c, k, i)?;
                                if sum.is_zero() {
                                    t += 1;
                                    if self.edges[a].gain.is_zero()
                                        && self.edges[b].gain.is_zero()
                                        && self.edges[c].gain.is_zero()
                                    {
                                        t0 += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(PlanarStats {
            q: q as i128,
            s2,
            t,
            t0,
        })
    }

    /// Find a balanced circle, optionally ignoring circles that lie entirely
    /// in the zero-gain set. Returns the edge ids of the first one found.
    /// Used by the family constructors to reject non-generic random gains.
    pub fn find_balanced_circle(&self, ignore_inside_zero: bool) -> Option<Vec<usize>> {
        // 1-edge circles: loops
        for e in &self.edges {
            if e.is_loop() && e.gain.is_zero() && !ignore_inside_zero {
                return Some(vec![e.id]);
            }
        }
        // 2-edge circles: parallel pairs with equal gains
        for (a_idx, a) in self.edges.iter().enumerate() {
            if a.is_loop() {
                continue;
            }
            for b in &self.edges[a_idx + 1..] {
                if a.i == b.i && a.j == b.j && a.gain == b.gain {
                    if ignore_inside_zero && a.gain.is_zero() {
                        continue;
                    }
                    return Some(vec![a.id, b.id]);
                }
            }
        }
        // longer circles: simple vertex cycles with smallest vertex first
        let mut by_pair = std::collections::BTreeMap::<(usize, usize), Vec<usize>>::new();
        for e in &self.edges {
            if !e.is_loop() {
                by_pair.entry((e.i, e.j)).or_default().push(e.id);
            }
        }
        for start in 1..=self.n {
            let mut path = vec![start];
            if let Some(found) = self.cycle_dfs(start, &mut path, &by_pair, ignore_inside_zero) {
                return Some(found);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        by_pair: &std::collections::BTreeMap<(usize, usize), Vec<usize>>,
        ignore_inside_zero: bool,
    ) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        for next in start + 1..=self.n {
            if path.contains(&next) {
                continue;
            }
            let key = (last.min(next), last.max(next));
            if !by_pair.contains_key(&key) {
                continue;
            }
            path.push(next);
            // close the cycle when long enough and direction-canonical
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                let close_key = (start.min(next), start.max(next));
                if by_pair.contains_key(&close_key) {
                    if let Some(found) = self.scan_cycle_gains(path, by_pair, ignore_inside_zero) {
                        path.pop();
                        return Some(found);
                    }
                }
            }
            if let Some(found) = self.cycle_dfs(start, path, by_pair, ignore_inside_zero) {
                path.pop();
                return Some(found);
            }
            path.pop();
        }
        None
    }

    /// Try every choice of parallel edges along a closed vertex cycle; return
    /// a zero-sum choice if one exists.
    fn scan_cycle_gains(
        &self,
        cycle: &[usize],
        by_pair: &std::collections::BTreeMap<(usize, usize), Vec<usize>>,
        ignore_inside_zero: bool,
    ) -> Option<Vec<usize>> {
        let len = cycle.len();
        let mut chosen: Vec<usize> = Vec::with_capacity(len);
        self.scan_cycle_rec(
            cycle,
            by_pair,
            0,
            Rat::zero(),
            &mut chosen,
            ignore_inside_zero,
        )
    }

    fn scan_cycle_rec(
        &self,
        cycle: &[usize],
        by_pair: &std::collections::BTreeMap<(usize, usize), Vec<usize>>,
        pos: usize,
        acc: Rat,
        chosen: &mut Vec<usize>,
        ignore_inside_zero: bool,
    ) -> Option<Vec<usize>> {
        if pos == cycle.len() {
            if acc.is_zero() {
                let all_zero = chosen.iter().all(|&id| self.edges[id].gain.is_zero());
                if !(ignore_inside_zero && all_zero) {
                    return Some(chosen.clone());
                }
            }
            return None;
        }
        let from = cycle[pos];
        let to = cycle[(pos + 1) % cycle.len()];
        let key = (from.min(to), from.max(to));
        for &id in by_pair.get(&key)? {
            let phi = self.gain(id, from, to).expect("endpoints match key");
            chosen.push(id);
            if let Some(found) = self.scan_cycle_rec(
                cycle,
                by_pair,
                pos + 1,
                &acc + &phi,
                chosen,
                ignore_inside_zero,
            ) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n,
            alpha: self.alpha.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    i: e.i,
                    j: e.j,
                    gain: e.gain.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<GainGraph> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("graph JSON: {e}")))?;
        GainGraph::new(
            doc.n,
            doc.edges.into_iter().map(|e| (e.i, e.j, e.gain)).collect(),
            doc.alpha,
        )
    }
}

/// Output of [`GainGraph::planar_statistics`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanarStats {
    pub q: i128,
    pub s2: i128,
    pub t: i128,
    pub t0: i128,
}

/// Small union-find over 0-based indices.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so component labels are canonical
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn triangle(g12: i64, g23: i64, g31: i64) -> GainGraph {
        // gains read cyclically 1→2→3→1
        GainGraph::new(
            3,
            vec![
                (1, 2, Rat::from_int(g12)),
                (2, 3, Rat::from_int(g23)),
                (3, 1, Rat::from_int(g31)),
            ],
            Rat::zero(),
        )
        .unwrap()
    }

    fn all_edges(g: &GainGraph) -> BTreeSet<usize> {
        (0..g.edge_count()).collect()
    }

    #[test]
    fn balance_modes_on_triangles() {
        let bal = triangle(1, 2, -3);
        assert!(bal
            .is_balanced(&all_edges(&bal), BalanceMode::Exact)
            .unwrap());
        let unbal = triangle(1, 2, 3);
        assert!(!unbal
            .is_balanced(&all_edges(&unbal), BalanceMode::Exact)
            .unwrap());
        // a balanced circle with nonzero gains is not inside Z
        assert!(!bal
            .is_balanced(&all_edges(&bal), BalanceMode::ZOnly)
            .unwrap());
    }

    #[test]
    fn potential_certifies_balance() {
        let bal = triangle(1, 2, -3);
        let theta = bal.potential(&all_edges(&bal)).unwrap().unwrap();
        // root pinned to zero, θ(1)−θ(2)=1, θ(2)−θ(3)=2
        assert_eq!(theta[0], Rat::zero());
        assert_eq!(&theta[0] - &theta[1], Rat::from_int(1));
        assert_eq!(&theta[1] - &theta[2], Rat::from_int(2));
    }

    #[test]
    fn switching_formula_and_involution() {
        let g = GainGraph::new(2, vec![(1, 2, Rat::from_int(5))], Rat::zero()).unwrap();
        let eta = SwitchingFunction::new(vec![Rat::from_int(2), Rat::from_int(3)]);
        let s = g.switch(&eta);
        assert_eq!(s.edges()[0].gain, Rat::from_int(6)); // 5 − 2 + 3

        // constant η leaves gains unchanged
        let c = g.switch(&SwitchingFunction::constant(2, Rat::from_int(9)));
        assert_eq!(c, g);

        // switching by η then −η restores the graph
        let back = s.switch(&eta.negated());
        assert_eq!(back, g);
    }

    #[test]
    fn contract_zero_triangle_edge() {
        let k3 = GainGraph::new(
            3,
            vec![
                (1, 2, Rat::zero()),
                (1, 3, Rat::zero()),
                (2, 3, Rat::zero()),
            ],
            Rat::zero(),
        )
        .unwrap();
        let s: BTreeSet<usize> = [0].into();
        let c = k3.contract(&s).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 2);
        assert!(c
            .edges()
            .iter()
            .all(|e| e.gain.is_zero() && (e.i, e.j) == (1, 2)));
    }

    #[test]
    fn contract_path_fully() {
        let path = GainGraph::new(
            3,
            vec![(1, 2, Rat::from_int(1)), (2, 3, Rat::from_int(2))],
            Rat::zero(),
        )
        .unwrap();
        let c = path.contract(&all_edges(&path)).unwrap();
        assert_eq!(c.n(), 1);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn contract_balanced_triangle_leaves_degenerate_loop() {
        let bal = triangle(1, 2, -3);
        let s: BTreeSet<usize> = [0, 1].into();
        let c = bal.contract(&s).unwrap();
        assert_eq!(c.n(), 1);
        assert_eq!(c.edge_count(), 1);
        let loop_edge = &c.edges()[0];
        assert!(loop_edge.is_loop());
        assert!(loop_edge.gain.is_zero());
        assert_eq!(c.degenerate_loops(), vec![0]);
    }

    #[test]
    fn contract_unbalanced_rejected() {
        let unbal = triangle(1, 2, 3);
        assert!(matches!(
            unbal.contract(&all_edges(&unbal)),
            Err(Error::Unbalanced)
        ));
    }

    #[test]
    fn collapse_examples() {
        let k3 = GainGraph::new(
            3,
            vec![
                (1, 2, Rat::zero()),
                (1, 3, Rat::zero()),
                (2, 3, Rat::zero()),
            ],
            Rat::zero(),
        )
        .unwrap();
        // discrete partition: unchanged
        let same = k3.collapse(&Partition::discrete(3)).unwrap();
        assert_eq!(same, k3);
        // {{1,2},{3}}: two vertices, two parallel zero edges
        let pi = Partition::new(vec![vec![1, 2], vec![3]], 3).unwrap();
        let c = k3.collapse(&pi).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 2);
        // one block: single vertex, nothing left
        let full = k3.collapse(&Partition::single(3)).unwrap();
        assert_eq!(full.n(), 1);
        assert_eq!(full.edge_count(), 0);
    }

    #[test]
    fn zero_set_examples() {
        let k3 = GainGraph::new(
            3,
            vec![
                (1, 2, Rat::zero()),
                (1, 3, Rat::zero()),
                (2, 3, Rat::zero()),
            ],
            Rat::zero(),
        )
        .unwrap();
        assert_eq!(k3.zero_set().len(), 3);
        assert!(triangle(1, 2, 3).zero_set().is_empty());
    }

    #[test]
    fn nonzero_loops_discarded_zero_loops_kept() {
        let g = GainGraph::new(
            2,
            vec![
                (1, 1, Rat::from_int(4)),
                (2, 2, Rat::zero()),
                (1, 2, Rat::from_int(1)),
            ],
            Rat::zero(),
        )
        .unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degenerate_loops().len(), 1);
    }

    #[test]
    fn planar_statistics_k4_bisectors() {
        let mut raw = vec![];
        for i in 1..=4 {
            for j in i + 1..=4 {
                raw.push((i, j, Rat::zero()));
            }
        }
        let k4 = GainGraph::new(4, raw, Rat::zero()).unwrap();
        let st = k4.planar_statistics().unwrap();
        assert_eq!((st.q, st.s2, st.t, st.t0), (6, 15, 4, 4));
    }

    #[test]
    fn reverse_orientation_negates() {
        let g = GainGraph::new(2, vec![(2, 1, Rat::from_int(7))], Rat::zero()).unwrap();
        // stored canonically as (1,2) with negated gain
        assert_eq!(g.gain(0, 1, 2).unwrap(), Rat::from_int(-7));
        assert_eq!(g.gain(0, 2, 1).unwrap(), Rat::from_int(7));
    }

    #[test]
    fn forest_always_exact_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(2..=6);
            let mut raw = vec![];
            // random spanning tree shape with random gains
            for v in 2..=n {
                let u = rng.gen_range(1..v);
                raw.push((u, v, Rat::from_int(rng.gen_range(-50..50))));
            }
            let g = GainGraph::new(n, raw, Rat::zero()).unwrap();
            let s: BTreeSet<usize> = (0..g.edge_count()).collect();
            assert!(g.is_balanced(&s, BalanceMode::Exact).unwrap());
        }
    }

    #[test]
    fn balance_is_switching_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let n = rng.gen_range(2..=5);
            let q = rng.gen_range(1..=8);
            let mut raw = vec![];
            for _ in 0..q {
                let i = rng.gen_range(1..=n);
                let mut j = rng.gen_range(1..=n);
                if i == j {
                    j = if j == n { 1 } else { j + 1 };
                }
                raw.push((i, j, Rat::from_int(rng.gen_range(-3..=3))));
            }
            let g = GainGraph::new(n, raw, Rat::zero()).unwrap();
            let eta = SwitchingFunction::new(
                (0..n)
                    .map(|_| Rat::from_int(rng.gen_range(-5..=5)))
                    .collect(),
            );
            let h = g.switch(&eta);
            // random subset
            let s: BTreeSet<usize> = (0..g.edge_count()).filter(|_| rng.gen_bool(0.6)).collect();
            for mode in [BalanceMode::Exact, BalanceMode::ZOnly] {
                if mode == BalanceMode::ZOnly {
                    continue; // ZOnly is not switching-invariant: Z itself moves
                }
                assert_eq!(
                    g.is_balanced(&s, mode).unwrap(),
                    h.is_balanced(&s, mode).unwrap()
                );
            }
        }
    }

    #[test]
    fn zero_set_changes_under_noncostant_switching() {
        let g = GainGraph::new(2, vec![(1, 2, Rat::zero())], Rat::zero()).unwrap();
        let eta = SwitchingFunction::new(vec![Rat::from_int(1), Rat::zero()]);
        assert!(g.switch(&eta).zero_set().is_empty());
        let c = SwitchingFunction::constant(2, Rat::from_int(5));
        assert_eq!(g.switch(&c).zero_set(), g.zero_set());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"n": 3, "alpha": "2", "edges": [{"i":1,"j":2,"gain":"3/2"}, {"i":3,"j":2,"gain":"-1"}]}"#;
        let g = GainGraph::from_json(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.alpha(), &Rat::from_int(2));
        assert_eq!(g.edges()[1].i, 2); // canonicalized
        assert_eq!(g.edges()[1].gain, Rat::from_int(1)); // negated on reorientation
        let again = GainGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn balanced_circle_scan() {
        let bal = triangle(1, 2, -3);
        assert!(bal.find_balanced_circle(false).is_some());
        assert!(bal.find_balanced_circle(true).is_some()); // nonzero gains
        let unbal = triangle(1, 2, 3);
        assert!(unbal.find_balanced_circle(false).is_none());
        // zero triangle is a balanced circle inside Z
        let zeros = triangle(0, 0, 0);
        assert!(zeros.find_balanced_circle(false).is_some());
        assert!(zeros.find_balanced_circle(true).is_none());
        // parallel pair with equal nonzero gains
        let digon = GainGraph::new(
            2,
            vec![(1, 2, Rat::from_int(4)), (1, 2, Rat::from_int(4))],
            Rat::zero(),
        )
        .unwrap();
        assert_eq!(digon.find_balanced_circle(true).unwrap(), vec![0, 1]);
    }
}
