//! Semilattices of balanced flats and the complete lift, with Möbius
//! functions and Whitney numbers.
//!
//! A *flat* is a closed balanced edge set: closed meaning that closure adds
//! nothing, balanced in the active [`BalanceMode`]. Every flat is the closure
//! of any of its spanning forests, so enumeration walks all forests with at
//! most `cap` edges and deduplicates their closures — far fewer candidates
//! than the full subset scan, which the tests keep around as an oracle.
//!
//! The complete lift adds, on top of the balanced flats, one element `(F, e0)`
//! for each closed edge set `F` of the underlying graphic matroid, with rank
//! `n − c(F) + 1`; truncation replaces everything at or above the cap rank by
//! a single top. Ordering both families by edge-set containment (with an
//! extra bit for `e0`) lets one Möbius engine serve the balanced semilattice,
//! the lift, and the geometric intersection semilattice alike.

use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::Error;
use crate::exact::{BivariatePolynomial, Polynomial, Rat};
use crate::graph::{BalanceMode, GainGraph, Partition};
use crate::Result;

/// Guard: maximum forests visited during enumeration.
const MAX_FORESTS: usize = 2_000_000;
/// Guard: maximum semilattice elements.
const MAX_ELEMENTS: usize = 100_000;
/// Edge ids are packed into a u128 bitset; bit 127 is reserved for `e0` and
/// the all-ones word for the truncation top, so ids must stay below 126.
const MAX_EDGES: usize = 126;
const E0_BIT: u128 = 1 << 127;

/// A closed balanced edge set with its certificate data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Sorted edge ids of the closed set.
    pub edge_ids: Vec<usize>,
    /// Vertex partition into the connected components of (V, S).
    pub partition: Partition,
    /// n − c(S).
    pub rank: usize,
    /// Vertex potential θ with gain(e;i,j) = θ(i) − θ(j) on S, smallest
    /// vertex of each component pinned to 0. Present in Exact mode only.
    pub potential: Option<Vec<Rat>>,
}

#[derive(Serialize)]
struct FlatJson<'a> {
    edge_ids: &'a [usize],
    partition: &'a [Vec<usize>],
    rank: usize,
}

/// The geometric semilattice of balanced flats with rank ≤ cap, ordered by
/// edge-set containment. Element 0 is the closure of the empty set.
#[derive(Clone, Debug)]
pub struct Semilattice {
    n: usize,
    mode: BalanceMode,
    cap: usize,
    flats: Vec<Flat>,
    keys: Vec<u128>,
}

impl Semilattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> BalanceMode {
        self.mode
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Number of flats of each rank (Whitney numbers of the second kind).
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.cap + 1];
        for f in &self.flats {
            counts[f.rank] += 1;
        }
        counts
    }

    /// Edge-set families, for comparisons that ignore certificates.
    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.flats.iter().map(|f| f.edge_ids.clone()).collect()
    }

    pub fn whitney(&self) -> WhitneyTable {
        let elems: Vec<(usize, u128)> = self
            .flats
            .iter()
            .zip(&self.keys)
            .map(|(f, &k)| (f.rank, k))
            .collect();
        WhitneyTable::from_ranked_elements(&elems)
    }

    /// JSON dump: list of {edge_ids, partition, rank}.
    pub fn to_json(&self) -> String {
        let docs: Vec<FlatJson> = self
            .flats
            .iter()
            .map(|f| FlatJson {
                edge_ids: &f.edge_ids,
                partition: f.partition.blocks(),
                rank: f.rank,
            })
            .collect();
        serde_json::to_string_pretty(&docs).expect("semilattice serialization cannot fail")
    }
}

fn bitset_of(ids: &BTreeSet<usize>) -> u128 {
    ids.iter().fold(0u128, |acc, &id| acc | (1u128 << id))
}

/// Enumerate every closed balanced edge set of rank ≤ cap, as deduplicated
/// closures of all forests with ≤ cap edges.
pub fn enumerate_flats(g: &GainGraph, mode: BalanceMode, cap: usize) -> Result<Semilattice> {
    if g.n() == 0 {
        return Err(Error::InvalidParam(
            "graph needs at least one vertex".into(),
        ));
    }
    if cap + 1 > g.n() {
        return Err(Error::InvalidParam(format!(
            "cap {cap} exceeds the maximum flat rank {}",
            g.n() - 1
        )));
    }
    if g.edge_count() > MAX_EDGES {
        return Err(Error::Guard(format!(
            "{} edges exceeds the {MAX_EDGES}-edge bitset limit",
            g.edge_count()
        )));
    }

    let links: Vec<usize> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| e.id)
        .collect();

    let mut found: BTreeMap<u128, BTreeSet<usize>> = BTreeMap::new();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    let mut forest_count = 0usize;
    forest_walk(
        g,
        mode,
        cap,
        &links,
        0,
        &mut chosen,
        &mut found,
        &mut forest_count,
    )?;

    let mut flats = Vec::with_capacity(found.len());
    let mut keys = Vec::with_capacity(found.len());
    for (key, set) in found {
        let partition = g.component_partition(&set)?;
        let rank = g.n() - partition.len();
        let potential = match mode {
            BalanceMode::Exact => Some(
                g.potential(&set)?
                    .expect("closure of a balanced set stays balanced"),
            ),
            BalanceMode::ZOnly => None,
        };
        flats.push(Flat {
            edge_ids: set.into_iter().collect(),
            partition,
            rank,
            potential,
        });
        keys.push(key);
    }
    // canonical order: by (rank, edge ids)
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by(|&a, &b| {
        (flats[a].rank, &flats[a].edge_ids).cmp(&(flats[b].rank, &flats[b].edge_ids))
    });
    let flats: Vec<Flat> = order.iter().map(|&i| flats[i].clone()).collect();
    let keys: Vec<u128> = order.iter().map(|&i| keys[i]).collect();

    Ok(Semilattice {
        n: g.n(),
        mode,
        cap,
        flats,
        keys,
    })
}

#[allow(clippy::too_many_arguments)]
fn forest_walk(
    g: &GainGraph,
    mode: BalanceMode,
    cap: usize,
    links: &[usize],
    start: usize,
    chosen: &mut BTreeSet<usize>,
    found: &mut BTreeMap<u128, BTreeSet<usize>>,
    forest_count: &mut usize,
) -> Result<()> {
    *forest_count += 1;
    if *forest_count > MAX_FORESTS {
        return Err(Error::Guard(format!("more than {MAX_FORESTS} forests")));
    }
    if let Some(closure) = g.closure(chosen, mode)? {
        found.insert(bitset_of(&closure), closure);
        if found.len() > MAX_ELEMENTS {
            return Err(Error::Guard(format!("more than {MAX_ELEMENTS} flats")));
        }
    }
    if chosen.len() == cap {
        return Ok(());
    }
    for (pos, &id) in links.iter().enumerate().skip(start) {
        let e = &g.edges()[id];
        // acyclicity: endpoints must be in different components of the chosen set
        if connected_in(g, chosen, e.i, e.j) {
            continue;
        }
        chosen.insert(id);
        forest_walk(g, mode, cap, links, pos + 1, chosen, found, forest_count)?;
        chosen.remove(&id);
    }
    Ok(())
}

fn connected_in(g: &GainGraph, s: &BTreeSet<usize>, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let mut dsu = crate::graph::Dsu::new(g.n());
    for &id in s {
        let e = &g.edges()[id];
        dsu.union(e.i - 1, e.j - 1);
    }
    dsu.find(a - 1) == dsu.find(b - 1)
}

/// Doubly indexed Whitney numbers of the first kind, rank counts, and the
/// underlying Möbius values of a ranked poset ordered by key containment.
#[derive(Clone, Debug)]
pub struct WhitneyTable {
    /// Largest rank present.
    pub rank: usize,
    /// `w[j]` = Σ μ(0̂, y) over rank-j elements.
    pub w: Vec<i128>,
    /// `W[j]` = number of rank-j elements.
    pub big_w: Vec<i128>,
    /// w2[(i,j)] = Σ μ(x, y) over rank-i x ≤ rank-j y; zero entries omitted.
    pub w2: BTreeMap<(usize, usize), i128>,
    /// Nonzero Möbius values (x index, y index, μ(x,y)).
    pub mobius: Vec<(u32, u32, i128)>,
}

impl WhitneyTable {
    /// Compute μ over all ordered pairs of a ranked poset given as
    /// (rank, key) with x ≤ y iff key(x) ⊆ key(y) as bitsets.
    ///
    /// μ(x,x) = 1 and μ(x,y) = −Σ_{z: x ≤ z < y} μ(x,z), evaluated in rank
    /// order, which is valid because containment implies rank increase here.
    pub fn from_ranked_elements(elems: &[(usize, u128)]) -> WhitneyTable {
        let rank = elems.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut w = vec![0i128; rank + 1];
        let mut big_w = vec![0i128; rank + 1];
        let mut w2: BTreeMap<(usize, usize), i128> = BTreeMap::new();
        let mut mobius = Vec::new();

        for &(r, _) in elems {
            big_w[r] += 1;
        }

        // order of evaluation: indices sorted by rank
        let mut by_rank: Vec<usize> = (0..elems.len()).collect();
        by_rank.sort_by_key(|&i| elems[i].0);

        for x in 0..elems.len() {
            let (rx, kx) = elems[x];
            // upset of x in rank order
            let upset: Vec<usize> = by_rank
                .iter()
                .copied()
                .filter(|&y| kx & !elems[y].1 == 0)
                .collect();
            let mut mu: BTreeMap<usize, i128> = BTreeMap::new();
            for &y in &upset {
                let (ry, ky) = elems[y];
                let value = if y == x {
                    1
                } else {
                    let mut acc = 0i128;
                    for &z in &upset {
                        if z == y {
                            continue;
                        }
                        let kz = elems[z].1;
                        if kz & !ky == 0 {
                            acc += mu.get(&z).copied().unwrap_or(0);
                        }
                    }
                    -acc
                };
                mu.insert(y, value);
                if value != 0 {
                    *w2.entry((rx, ry)).or_insert(0) += value;
                    mobius.push((x as u32, y as u32, value));
                    if rx == 0 {
                        w[ry] += value;
                    }
                }
            }
        }
        w2.retain(|_, v| *v != 0);
        WhitneyTable {
            rank,
            w,
            big_w,
            w2,
            mobius,
        }
    }

    pub fn w2(&self, i: usize, j: usize) -> i128 {
        self.w2.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Rota's sign rule: sgn w_ij = (−1)^{j−i} wherever nonzero.
    pub fn check_sign_rule(&self) -> bool {
        self.w2.iter().all(|(&(i, j), &v)| {
            if j < i {
                return false;
            }
            let expected_negative = (j - i) % 2 == 1;
            (v < 0) == expected_negative && v != 0
        })
    }

    /// Characteristic polynomial Σ_j w_j λ^{top_rank−j}.
    pub fn characteristic_polynomial(&self, top_rank: usize) -> Polynomial {
        let mut coeffs = vec![Rat::zero(); top_rank + 1];
        for (j, &wj) in self.w.iter().enumerate() {
            if j <= top_rank {
                coeffs[top_rank - j] = Rat::from_bigint(wj.into());
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// JSON dump per the module contract: `{w, W, w2: [[i,j,value],...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TableJson<'a> {
            w: &'a [i128],
            #[serde(rename = "W")]
            big_w: &'a [i128],
            w2: Vec<(usize, usize, i128)>,
        }
        let doc = TableJson {
            w: &self.w,
            big_w: &self.big_w,
            w2: self.w2.iter().map(|(&(i, j), &v)| (i, j, v)).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization cannot fail")
    }
}

/// Balanced chromatic polynomial Σ_j w_j λ^{n−j} and balanced Whitney-number
/// polynomial ΣΣ w_ij x^i λ^{n−j} of a complete table.
pub fn polynomials(table: &WhitneyTable, n: usize) -> (Polynomial, BivariatePolynomial) {
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (j, &wj) in table.w.iter().enumerate() {
        coeffs[n - j] = Rat::from_bigint(wj.into());
    }
    let chi_b = Polynomial::from_coeffs(coeffs);
    let mut w_poly = BivariatePolynomial::new();
    for (&(i, j), &v) in &table.w2 {
        w_poly.add_term(i, n - j, Rat::from_bigint(v.into()));
    }
    (chi_b, w_poly)
}

/// One element of a (possibly truncated) complete lift lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftElement {
    /// A balanced flat (rank n − c(S)).
    Balanced(Vec<usize>),
    /// A closed set of the underlying graphic matroid joined with e0
    /// (rank n − c(F) + 1).
    Graphic(Vec<usize>),
    /// The truncation point 1̂ absorbing every element of rank ≥ cap.
    Top,
}

/// The complete lift lattice T_cap(Lat L0), built from the balanced
/// semilattice plus the graphic flats marked with e0.
#[derive(Clone, Debug)]
pub struct LiftLattice {
    n: usize,
    cap: usize,
    elements: Vec<(usize, u128, LiftElement)>,
    /// Rank of the lattice top (= cap when truncated, the natural top rank
    /// otherwise).
    top_rank: usize,
}

impl LiftLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn top_rank(&self) -> usize {
        self.top_rank
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, &LiftElement)> {
        self.elements.iter().map(|(r, _, e)| (*r, e))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn whitney(&self) -> WhitneyTable {
        let elems: Vec<(usize, u128)> = self.elements.iter().map(|&(r, k, _)| (r, k)).collect();
        WhitneyTable::from_ranked_elements(&elems)
    }

    /// Characteristic polynomial of the (truncated) lift lattice.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        self.whitney().characteristic_polynomial(self.top_rank)
    }
}

/// Build the complete lift lattice truncated at rank `cap` (≤ n): balanced
/// flats of rank < cap stay, each closed graphic set F with n − c(F) + 1 < cap
/// contributes (F, e0), and everything at rank ≥ cap collapses to one top.
pub fn lift_lattice(g: &GainGraph, mode: BalanceMode, cap: usize) -> Result<LiftLattice> {
    if cap > g.n() {
        return Err(Error::InvalidParam(format!(
            "lift cap {cap} exceeds n = {}",
            g.n()
        )));
    }
    if cap == 0 {
        return Err(Error::InvalidParam("lift cap must be at least 1".into()));
    }
    let bal_cap = (cap - 1).min(g.n() - 1);
    let balanced = enumerate_flats(g, mode, bal_cap)?;

    let mut elements: Vec<(usize, u128, LiftElement)> = Vec::new();
    for (flat, &key) in balanced.flats.iter().zip(&balanced.keys) {
        elements.push((flat.rank, key, LiftElement::Balanced(flat.edge_ids.clone())));
    }

    // graphic flats: vertex partitions with connected blocks; F = all edges
    // inside blocks (loops included), rank n − #blocks + 1
    let everything: BTreeSet<usize> = (0..g.edge_count()).collect();
    let full_components = g.component_partition(&everything)?.len();
    let full_rank = g.n() - full_components + 1;

    for pi in all_partitions(g.n()) {
        if !blocks_connected(g, &pi) {
            continue;
        }
        let rank = g.n() - pi.len() + 1;
        if rank >= cap {
            continue; // absorbed by the truncation top
        }
        let f: BTreeSet<usize> = g
            .edges()
            .iter()
            .filter(|e| {
                let bi = pi.block_of(e.i);
                bi == pi.block_of(e.j)
            })
            .map(|e| e.id)
            .collect();
        let key = bitset_of(&f) | E0_BIT;
        elements.push((rank, key, LiftElement::Graphic(f.into_iter().collect())));
    }

    // the top exists whenever the untruncated lift reaches rank cap
    let top_rank = if full_rank >= cap {
        elements.push((cap, u128::MAX, LiftElement::Top));
        cap
    } else {
        full_rank
    };

    elements.sort_by_key(|e| (e.0, e.1));
    Ok(LiftLattice {
        n: g.n(),
        cap,
        elements,
        top_rank,
    })
}

/// All set partitions of {1..n} (n is small everywhere this is used).
pub(crate) fn all_partitions(n: usize) -> Vec<Partition> {
    // restricted growth strings
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    fn rec(pos: usize, max_used: usize, assignment: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let n = assignment.len();
        if pos == n {
            out.push(Partition::from_components(assignment));
            return;
        }
        for c in 0..=max_used + 1 {
            assignment[pos] = c;
            rec(pos + 1, max_used.max(c), assignment, out);
        }
    }
    if n == 0 {
        return out;
    }
    assignment[0] = 0;
    rec(1, 0, &mut assignment, &mut out);
    out
}

fn blocks_connected(g: &GainGraph, pi: &Partition) -> bool {
    for block in pi.blocks() {
        if block.len() == 1 {
            continue;
        }
        let mut dsu = crate::graph::Dsu::new(g.n());
        for e in g.edges() {
            if e.is_loop() {
                continue;
            }
            if block.binary_search(&e.i).is_ok() && block.binary_search(&e.j).is_ok() {
                dsu.union(e.i - 1, e.j - 1);
            }
        }
        let root = dsu.find(block[0] - 1);
        if block.iter().any(|&v| dsu.find(v - 1) != root) {
            return false;
        }
    }
    true
}
