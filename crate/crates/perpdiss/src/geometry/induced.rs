//! Dissections within a flat, cross-section representations, and the
//! paraboloid-lift construction.
//!
//! The induced arrangement in a flat t is itself a perpendicular arrangement:
//! project the reference points into t, switch the gains by the squared
//! distances η_t(i) = d(Q_i, t)², and collapse vertices whose projections
//! coincide. Every step is exact, and the result is verified edge by edge
//! against the actual hyperplane sections h(e) ∩ t.

use std::collections::BTreeSet;

use super::{build_arrangement, dot, norm_sq, sub, AffineFlat, Hyperplane, PointConfiguration};
use crate::error::Error;
use crate::exact::{Rat, RationalMatrix};
use crate::graph::{GainGraph, Partition, SwitchingFunction};
use crate::Result;

/// Result of sectioning an arrangement by an affine flat.
#[derive(Clone, Debug)]
pub struct InducedArrangement {
    /// The switched, collapsed gain graph describing the induced arrangement.
    pub graph: GainGraph,
    /// Projected reference points in an affine chart of the flat
    /// (dimension = dim t).
    pub points: PointConfiguration,
    /// The same projections in ambient coordinates, one per collapsed vertex.
    pub ambient_points: Vec<Vec<Rat>>,
    /// η_t(i) = d(Q_i, t)² per original vertex.
    pub eta: SwitchingFunction,
    /// Which original vertices coalesced.
    pub partition: Partition,
    /// For each surviving edge of `graph`, the originating edge id.
    pub edge_origin: Vec<usize>,
    /// True iff every hyperplane section h(e) ∩ t equals the hyperplane the
    /// contracted graph predicts inside t.
    pub verified: bool,
}

/// Section the arrangement of (g, q) by the flat t.
pub fn induced_arrangement(
    g: &GainGraph,
    q: &PointConfiguration,
    t: &AffineFlat,
) -> Result<InducedArrangement> {
    if !g.alpha().is_zero() {
        return Err(Error::InvalidParam(
            "induced arrangements are defined for the exact coordinate rule (alpha = 0)".into(),
        ));
    }
    if t.ambient_dim() != q.d {
        return Err(Error::InvalidParam(
            "flat lives in a different ambient space".into(),
        ));
    }
    let n = g.n();
    if q.n() != n {
        return Err(Error::Input(format!("{} points for {} vertices", q.n(), n)));
    }

    // project every reference point into t, exactly
    let projections: Vec<Vec<Rat>> = (1..=n).map(|i| t.project_point(q.point(i))).collect();
    let eta = SwitchingFunction::new(
        (0..n)
            .map(|i| norm_sq(&sub(q.point(i + 1), &projections[i])))
            .collect(),
    );

    // vertices with equal projections coalesce
    let mut comp: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if projections[i] == projections[j] {
                comp[i] = comp[j];
                break;
            }
        }
    }
    let partition = Partition::from_components(&comp);

    let switched = g.switch(&eta);
    let collapsed = switched.collapse(&partition)?;
    // collapse keeps surviving edges in original order
    let edge_origin: Vec<usize> = g
        .edges()
        .iter()
        .filter(|e| partition.block_of(e.i) != partition.block_of(e.j))
        .map(|e| e.id)
        .collect();

    // one ambient representative per block
    let ambient_points: Vec<Vec<Rat>> = partition
        .blocks()
        .iter()
        .map(|b| projections[b[0] - 1].clone())
        .collect();

    // chart coordinates within t
    let chart = Chart::new(t);
    let chart_points: Vec<Vec<Rat>> = ambient_points.iter().map(|p| chart.coords(p)).collect();
    let points = PointConfiguration::new(chart.dim(), chart_points)?;

    let verified = verify_sections(
        g,
        q,
        t,
        &collapsed,
        &edge_origin,
        &ambient_points,
        &partition,
    )?;

    Ok(InducedArrangement {
        graph: collapsed,
        points,
        ambient_points,
        eta,
        partition,
        edge_origin,
        verified,
    })
}

/// Compare each hyperplane section with the contracted graph's prediction.
fn verify_sections(
    g: &GainGraph,
    q: &PointConfiguration,
    t: &AffineFlat,
    collapsed: &GainGraph,
    edge_origin: &[usize],
    ambient_points: &[Vec<Rat>],
    partition: &Partition,
) -> Result<bool> {
    let hyperplanes = build_arrangement(g, q)?;
    // surviving edges: h(e) ∩ t must equal the predicted relative hyperplane
    for (new_id, &orig) in edge_origin.iter().enumerate() {
        let e = &collapsed.edges()[new_id];
        let (bi, bj) = (e.i, e.j);
        let qi = &ambient_points[bi - 1];
        let qj = &ambient_points[bj - 1];
        let diff = sub(qj, qi);
        if diff.iter().all(Rat::is_zero) {
            return Ok(false); // distinct blocks must project apart
        }
        // predicted: 2(q̄j − q̄i)·x = gain − |q̄i|² + |q̄j|², inside t
        let mut row: Vec<Rat> = diff.iter().map(|x| Rat::from_int(2) * x.clone()).collect();
        row.push(&e.gain - &norm_sq(qi) + norm_sq(qj));
        let predicted = Hyperplane {
            normal: row[..row.len() - 1].to_vec(),
            offset: row[row.len() - 1].clone(),
            source_edge: orig,
        };
        let lhs = t.intersect_hyperplane(&hyperplanes[orig]);
        let rhs = t.intersect_hyperplane(&predicted);
        match (lhs, rhs) {
            (Some(a), Some(b)) if a.same_locus(&b) => {}
            _ => return Ok(false),
        }
    }
    // vanished edges: h(e) must contain t or miss it entirely
    for e in g.edges() {
        if partition.block_of(e.i) == partition.block_of(e.j) {
            let section = t.intersect_hyperplane(&hyperplanes[e.id]);
            if let Some(s) = section {
                if !s.same_locus(t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Affine chart of a flat: a particular point plus a rational basis of the
/// direction space. Not an isometry in general; incidence structure and
/// ratios along lines are preserved, which is all the downstream checks use.
struct Chart {
    origin: Vec<Rat>,
    basis: RationalMatrix, // d × k, columns are basis vectors
    gram: RationalMatrix,  // BᵀB
}

impl Chart {
    fn new(t: &AffineFlat) -> Chart {
        let origin = t.particular_point();
        let vectors = t.direction_basis();
        let k = vectors.len();
        let basis = if k == 0 {
            RationalMatrix::zero(t.ambient_dim(), 0)
        } else {
            RationalMatrix::from_rows(vectors).transpose()
        };
        let gram = basis.transpose().matmul(&basis);
        Chart {
            origin,
            basis,
            gram,
        }
    }

    fn dim(&self) -> usize {
        self.basis.cols()
    }

    fn coords(&self, ambient: &[Rat]) -> Vec<Rat> {
        if self.dim() == 0 {
            return vec![];
        }
        let rel = sub(ambient, &self.origin);
        let bt = self.basis.transpose();
        let rhs: Vec<Rat> = (0..bt.rows()).map(|i| dot(bt.row(i), &rel)).collect();
        self.gram
            .solve(&rhs)
            .expect("Gram matrix of a basis is invertible")
    }
}

/// Is a finite multiset of rationals symmetric about some center?
pub fn is_centrally_symmetric(values: &[Rat]) -> bool {
    if values.is_empty() {
        return true;
    }
    let mut sorted = values.to_vec();
    sorted.sort();
    let m = sorted.len();
    let center = &sorted[0] + &sorted[m - 1];
    (0..m / 2 + 1).all(|i| &sorted[i] + &sorted[m - 1 - i] == center)
}

/// A cross-sectional representation: the same arrangement realized as the
/// section of one with affinely independent reference points.
#[derive(Clone, Debug)]
pub struct CrossSection {
    /// Lifted points Q′ in dimension n−1.
    pub points: PointConfiguration,
    /// The copy of the original space inside E^{n−1}.
    pub flat: AffineFlat,
    /// True iff sectioning the lifted arrangement by the flat reproduces the
    /// original arrangement exactly.
    pub verified: bool,
}

/// Lift the reference points out of E^d into E^{n−1} with equal-norm offsets
/// so they become affinely independent while the induced arrangement in the
/// original space is unchanged.
pub fn cross_section_embed(g: &GainGraph, q: &PointConfiguration) -> Result<CrossSection> {
    let n = g.n();
    let d = q.d;
    if q.n() != n {
        return Err(Error::Input(format!("{} points for {} vertices", q.n(), n)));
    }
    if d >= n - 1 {
        return Err(Error::InvalidParam(format!(
            "nothing to lift: need d < n−1, got d={d}, n={n}"
        )));
    }
    // the points must affinely span E^d
    let span_rank =
        RationalMatrix::from_rows((2..=n).map(|i| sub(q.point(i), q.point(1))).collect()).rank();
    if span_rank != d {
        return Err(Error::InvalidParam(
            "reference points must affinely span their space".into(),
        ));
    }

    let m = n - 1 - d; // codimension of the embedded copy
    let offsets: Vec<Vec<Rat>> = if m == 1 {
        // one affine dependency: flip the offset sign at one support index so
        // the dependency no longer annihilates the lift
        let mut rows: Vec<Vec<Rat>> = (0..d)
            .map(|c| (1..=n).map(|i| q.point(i)[c].clone()).collect())
            .collect();
        rows.push(vec![Rat::one(); n]);
        let kernel = RationalMatrix::from_rows(rows).null_space();
        let lambda = kernel
            .first()
            .ok_or_else(|| Error::InvalidParam("no affine dependency found".into()))?;
        let flip = lambda
            .iter()
            .position(|x| !x.is_zero())
            .expect("a dependency has support");
        (0..n)
            .map(|i| vec![if i == flip { -Rat::one() } else { Rat::one() }])
            .collect()
    } else {
        // signed permutations of (1, …, m): all of equal norm
        let all = signed_permutations(m);
        if all.len() < n {
            return Err(Error::InvalidParam("not enough distinct offsets".into()));
        }
        // rotate through assignments until the lift is affinely independent
        let mut chosen = None;
        'rot: for r in 0..all.len() {
            let cand: Vec<Vec<Rat>> = (0..n).map(|i| all[(i + r) % all.len()].clone()).collect();
            let rank = RationalMatrix::from_rows(
                (1..n)
                    .map(|i| {
                        let mut row = sub(q.point(i + 1), q.point(1));
                        row.extend(sub(&cand[i], &cand[0]));
                        row
                    })
                    .collect(),
            )
            .rank();
            if rank == n - 1 {
                chosen = Some(cand);
                break 'rot;
            }
        }
        chosen.ok_or_else(|| Error::Sampling("no offset assignment lifts independently".into()))?
    };

    let lifted: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut p = q.point(i + 1).to_vec();
            p.extend(offsets[i].iter().cloned());
            p
        })
        .collect();
    let points = PointConfiguration::new(n - 1, lifted)?;

    // verify affine independence
    let rank = RationalMatrix::from_rows(
        (2..=n)
            .map(|i| sub(points.point(i), points.point(1)))
            .collect(),
    )
    .rank();
    if rank != n - 1 {
        return Err(Error::Sampling(
            "lifted points are affinely dependent".into(),
        ));
    }

    // t = E^d × {0}: equations x_{d+1} = 0 … x_{n−1} = 0
    let mut rows = vec![];
    for c in d..(n - 1) {
        let mut row = vec![Rat::zero(); n];
        row[c] = Rat::one();
        rows.push(row);
    }
    let flat = AffineFlat::from_equations(n - 1, rows).expect("coordinate subspace is nonempty");

    // sectioning the lifted arrangement must reproduce the original one
    let induced = induced_arrangement(g, &points, &flat)?;
    let mut verified = induced.verified
        && induced.graph == *g
        && induced.partition.len() == n
        && induced.points.d == d;
    if verified {
        // chart of a coordinate subspace is the leading d coordinates, so
        // projections must come back exactly as the original points
        for i in 1..=n {
            if induced.points.point(i) != q.point(i) {
                verified = false;
                break;
            }
        }
    }
    Ok(CrossSection {
        points,
        flat,
        verified,
    })
}

fn signed_permutations(m: usize) -> Vec<Vec<Rat>> {
    let mut perms: Vec<Vec<usize>> = vec![];
    let mut items: Vec<usize> = (1..=m).collect();
    permute(&mut items, 0, &mut perms);
    let mut out = vec![];
    for p in perms {
        for signs in 0..(1u32 << m) {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(idx, &v)| {
                        let val = Rat::from_int(v as i64);
                        if signs >> idx & 1 == 1 {
                            -val
                        } else {
                            val
                        }
                    })
                    .collect(),
            );
        }
    }
    out
}

fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Outcome of the paraboloid-lift verification.
#[derive(Clone, Debug)]
pub struct ParaboloidReport {
    /// Vertical displacements of the tangent spaces, one per vertex.
    pub eta: SwitchingFunction,
    pub verified: bool,
}

/// Realize the arrangement of a balanced complete gain graph as vertical
/// projections of pairwise intersections of displaced tangent spaces of the
/// paraboloid z = |x|².
///
/// The tangent space at the lift of Q_i, raised by η(i), has equation
/// z = 2Q_i·x − |Q_i|² + η(i); eliminating z from a pair of such equations
/// must reproduce the hyperplane h(e) exactly. The displacement that works is
/// the balance potential itself.
pub fn paraboloid_roundtrip(g: &GainGraph, q: &PointConfiguration) -> Result<ParaboloidReport> {
    let n = g.n();
    if q.n() != n {
        return Err(Error::Input(format!("{} points for {} vertices", q.n(), n)));
    }
    if !g.alpha().is_zero() {
        return Err(Error::InvalidParam(
            "the paraboloid lift applies to the exact coordinate rule (alpha = 0)".into(),
        ));
    }
    // completeness: every pair adjacent
    for i in 1..=n {
        for j in i + 1..=n {
            if !g.edges().iter().any(|e| (e.i, e.j) == (i, j)) {
                return Err(Error::InvalidParam(format!(
                    "graph is not complete: no edge between {i} and {j}"
                )));
            }
        }
    }
    let everything: BTreeSet<usize> = (0..g.edge_count()).collect();
    let theta = g.potential(&everything)?.ok_or(Error::Unbalanced)?;
    let eta = SwitchingFunction::new(theta.clone());

    let hyperplanes = build_arrangement(g, q)?;
    let d = q.d;
    let mut verified = true;
    for e in g.edges() {
        let qi = q.point(e.i);
        let qj = q.point(e.j);
        // T_i: z = 2Q_i·x − |Q_i|² + θ_i; subtracting T_j eliminates z:
        // 2(Q_i−Q_j)·x = |Q_i|² − |Q_j|² − θ_i + θ_j
        let normal: Vec<Rat> = (0..d)
            .map(|c| Rat::from_int(2) * (&qi[c] - &qj[c]))
            .collect();
        let offset = norm_sq(qi) - norm_sq(qj) - theta[e.i - 1].clone() + theta[e.j - 1].clone();
        let projected = Hyperplane {
            normal,
            offset,
            source_edge: e.id,
        };
        let a = projected.as_flat(d);
        let b = hyperplanes[e.id].as_flat(d);
        if !a.same_locus(&b) {
            verified = false;
            break;
        }
    }
    Ok(ParaboloidReport { eta, verified })
}
