//! General-position certification and rejection sampling of reference points.
//!
//! Ideal general position (IGP) asks that the direction vectors of the
//! reference lines realize the rank-d truncation of the complete-graph
//! matroid: rank(T) = min(n − c(T), d) for every set T of directions. Since a
//! direction rank can only fall below the graphic rank, this holds iff every
//! forest of at most d direction edges is linearly independent, which is what
//! the check enumerates (cycles are always dependent — their directions
//! telescope to zero).
//!
//! General position with respect to a gain graph (GP) is checked against the
//! definition itself: the predicted rank-≤d flat semilattice must map onto
//! the actual intersection semilattice, flat by flat, with matching
//! containing-hyperplane sets, and every forest of d+1 hyperplanes must have
//! empty intersection.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use super::{build_arrangement, intersection_semilattice, sub, PointConfiguration};
use crate::error::Error;
use crate::exact::{Rat, RationalMatrix};
use crate::graph::{BalanceMode, GainGraph};
use crate::lattice::enumerate_flats;
use crate::Result;

/// Guard: brute-force IGP check is limited to this many reference points.
const MAX_IGP_POINTS: usize = 8;

/// Outcome of the ideal-general-position check.
#[derive(Clone, Debug)]
pub struct IgpReport {
    pub ok: bool,
    /// A dependent direction forest, as vertex pairs, when not ok.
    pub witness: Option<Vec<(usize, usize)>>,
}

/// Check ideal general position of the reference points: no parallelisms,
/// equivalently every forest of ≤ min(d, n−1) direction vectors is linearly
/// independent.
pub fn check_igp(q: &PointConfiguration) -> Result<IgpReport> {
    let n = q.n();
    if n > MAX_IGP_POINTS {
        return Err(Error::Guard(format!(
            "IGP check limited to {MAX_IGP_POINTS} points, got {n}"
        )));
    }
    if n < 2 {
        return Ok(IgpReport {
            ok: true,
            witness: None,
        });
    }
    let d = q.d;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let cap = d.min(n - 1);
    let mut chosen: Vec<usize> = vec![];
    let witness = igp_forest_scan(q, &pairs, 0, cap, &mut chosen);
    Ok(IgpReport {
        ok: witness.is_none(),
        witness,
    })
}

fn igp_forest_scan(
    q: &PointConfiguration,
    pairs: &[(usize, usize)],
    start: usize,
    cap: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<(usize, usize)>> {
    if !chosen.is_empty() {
        // the chosen forest's directions must be independent
        let rows: Vec<Vec<Rat>> = chosen
            .iter()
            .map(|&idx| {
                let (i, j) = pairs[idx];
                sub(q.point(j), q.point(i))
            })
            .collect();
        let rank = RationalMatrix::from_rows(rows).rank();
        if rank < chosen.len() {
            return Some(chosen.iter().map(|&idx| pairs[idx]).collect());
        }
    }
    if chosen.len() == cap {
        return None;
    }
    for idx in start..pairs.len() {
        let (i, j) = pairs[idx];
        // forest condition on the vertex pairs
        let mut dsu = crate::graph::Dsu::new(q.n());
        for &c in chosen.iter() {
            let (a, b) = pairs[c];
            dsu.union(a - 1, b - 1);
        }
        if dsu.find(i - 1) == dsu.find(j - 1) {
            continue;
        }
        chosen.push(idx);
        if let Some(w) = igp_forest_scan(q, pairs, idx + 1, cap, chosen) {
            chosen.pop();
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// Outcome of the general-position check: a certificate when it fails.
#[derive(Clone, Debug)]
pub struct GpReport {
    pub ok: bool,
    /// Description of the first violation found.
    pub failure: Option<String>,
}

impl GpReport {
    fn fail(msg: String) -> Self {
        GpReport {
            ok: false,
            failure: Some(msg),
        }
    }
    fn pass() -> Self {
        GpReport {
            ok: true,
            failure: None,
        }
    }
}

/// The balance mode an exponent α selects: exact gain balance when α = 0,
/// zero-set balance otherwise.
pub fn mode_for_alpha(alpha: &Rat) -> BalanceMode {
    if alpha.is_zero() {
        BalanceMode::Exact
    } else {
        BalanceMode::ZOnly
    }
}

/// Check general position of the reference points with respect to the gain
/// graph: the map from predicted flats (closed balanced edge sets of rank
/// ≤ d) to hyperplane intersections must be a rank-preserving bijection onto
/// the geometric semilattice with matching containing sets, and every forest
/// of d+1 edges must have empty intersection.
pub fn check_gp(g: &GainGraph, q: &PointConfiguration) -> Result<GpReport> {
    let d = q.d;
    let hyperplanes = build_arrangement(g, q)?;
    let mode = mode_for_alpha(g.alpha());
    let cap = d.min(g.n().saturating_sub(1));
    let predicted = enumerate_flats(g, mode, cap)?;
    let geometric = intersection_semilattice(&hyperplanes, d)?;

    if geometric.len() != predicted.len() {
        return Ok(GpReport::fail(format!(
            "{} geometric flats vs {} predicted",
            geometric.len(),
            predicted.len()
        )));
    }
    for flat in predicted.flats() {
        let mut geo = super::AffineFlat::whole_space(d);
        for &e in &flat.edge_ids {
            match geo.intersect_hyperplane(&hyperplanes[e]) {
                Some(next) => geo = next,
                None => {
                    return Ok(GpReport::fail(format!(
                        "predicted flat {:?} has empty intersection",
                        flat.edge_ids
                    )));
                }
            }
        }
        if geo.codim() != flat.rank {
            return Ok(GpReport::fail(format!(
                "predicted flat {:?} has codim {} instead of rank {}",
                flat.edge_ids,
                geo.codim(),
                flat.rank
            )));
        }
        let containing: Vec<usize> = hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, h)| geo.contained_in_hyperplane(h))
            .map(|(i, _)| i)
            .collect();
        if containing != flat.edge_ids {
            return Ok(GpReport::fail(format!(
                "flat {:?} is contained in hyperplanes {:?}",
                flat.edge_ids, containing
            )));
        }
    }
    // no point may be over-determined: forests of d+1 edges intersect nowhere
    if let Some(forest) = forest_with_nonempty_intersection(g, &hyperplanes, d) {
        return Ok(GpReport::fail(format!(
            "forest {forest:?} of {} hyperplanes still intersects",
            d + 1
        )));
    }
    Ok(GpReport::pass())
}

/// Search for a forest of exactly d+1 edges whose hyperplanes all meet.
fn forest_with_nonempty_intersection(
    g: &GainGraph,
    hyperplanes: &[super::Hyperplane],
    d: usize,
) -> Option<Vec<usize>> {
    let links: Vec<usize> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| e.id)
        .collect();
    let mut chosen = vec![];
    forest_intersect_scan(g, hyperplanes, &links, 0, d + 1, &mut chosen)
}

fn forest_intersect_scan(
    g: &GainGraph,
    hyperplanes: &[super::Hyperplane],
    links: &[usize],
    start: usize,
    want: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == want {
        let mut geo = super::AffineFlat::whole_space(hyperplanes[0].normal.len());
        for &e in chosen.iter() {
            geo = geo.intersect_hyperplane(&hyperplanes[e])?;
        }
        return Some(chosen.clone());
    }
    for (pos, &id) in links.iter().enumerate().skip(start) {
        let e = &g.edges()[id];
        let mut dsu = crate::graph::Dsu::new(g.n());
        for &c in chosen.iter() {
            let ce = &g.edges()[c];
            dsu.union(ce.i - 1, ce.j - 1);
        }
        if dsu.find(e.i - 1) == dsu.find(e.j - 1) {
            continue;
        }
        chosen.push(id);
        if let Some(w) = forest_intersect_scan(g, hyperplanes, links, pos + 1, want, chosen) {
            chosen.pop();
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// Sample integer reference points uniformly from [−bound, bound]^d until
/// both position checks pass. Deterministic given the seed.
pub fn sample_generic(
    g: &GainGraph,
    d: usize,
    seed: u64,
    bound: i64,
    retries: usize,
) -> Result<PointConfiguration> {
    let n = g.n();
    if !(n > d && d >= 1) {
        return Err(Error::InvalidParam(format!(
            "need n > d ≥ 1, got n={n}, d={d}"
        )));
    }
    if bound < 1 {
        return Err(Error::InvalidParam("bound must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        let points: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| Rat::from_int(rng.gen_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        // all points pairwise distinct
        let distinct = {
            let set: BTreeSet<&Vec<Rat>> = points.iter().collect();
            set.len() == n
        };
        if !distinct {
            continue;
        }
        let q = PointConfiguration::new(d, points)?;
        if !check_igp(&q)?.ok {
            continue;
        }
        if !check_gp(g, &q)?.ok {
            continue;
        }
        return Ok(q);
    }
    Err(Error::Sampling(format!(
        "no generic configuration found in {retries} tries"
    )))
}
