//! Exact geometry: perpendicular arrangements over rational reference points,
//! their intersection semilattices, an independent planar Euler census, and
//! general-position certification.
//!
//! Affine flats are keyed by the reduced row echelon form of their constraint
//! systems, so equality of flats is equality of matrices — no epsilons
//! anywhere. The geometric counting path shares the Möbius machinery with the
//! combinatorial path but never looks at the gain graph's prediction: it sees
//! only hyperplane equations.

mod induced;
mod position;
mod svg;

pub use induced::{
    cross_section_embed, induced_arrangement, is_centrally_symmetric, paraboloid_roundtrip,
    CrossSection, InducedArrangement, ParaboloidReport,
};
pub use position::{check_gp, check_igp, sample_generic, GpReport, IgpReport};
pub use svg::render_svg;

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::counts::{counts_from_whitney, CountReport};
use crate::error::Error;
use crate::exact::{Rat, RationalMatrix};
use crate::graph::GainGraph;
use crate::lattice::WhitneyTable;
use crate::Result;

/// Guard: maximum hyperplanes for the intersection semilattice.
const MAX_HYPERPLANES: usize = 40;

/// Rational reference points Q_1..Q_n in Q^d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfiguration {
    pub d: usize,
    pub points: Vec<Vec<Rat>>,
}

impl PointConfiguration {
    pub fn new(d: usize, points: Vec<Vec<Rat>>) -> Result<Self> {
        if points.iter().any(|p| p.len() != d) {
            return Err(Error::Input(
                "point coordinate length differs from d".into(),
            ));
        }
        Ok(PointConfiguration { d, points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: usize) -> &[Rat] {
        &self.points[i - 1]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("point serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: PointConfiguration =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("points JSON: {e}")))?;
        PointConfiguration::new(cfg.d, cfg.points)
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn norm_sq(a: &[Rat]) -> Rat {
    dot(a, a)
}

/// ψ_ij(P) = d(P,Q_i)² − d(P,Q_j)²: the coordinate that is constant on every
/// hyperplane perpendicular to the line Q_iQ_j.
pub fn pythagorean_coordinate(p: &[Rat], qi: &[Rat], qj: &[Rat]) -> Rat {
    assert_eq!(p.len(), qi.len());
    assert_eq!(p.len(), qj.len());
    norm_sq(&sub(p, qi)) - norm_sq(&sub(p, qj))
}

/// One hyperplane `normal·x = offset` tagged with the edge that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub source_edge: usize,
}

impl Hyperplane {
    pub fn contains(&self, p: &[Rat]) -> bool {
        dot(&self.normal, p) == self.offset
    }

    /// The defining equation as a row [normal | offset].
    fn equation_row(&self) -> Vec<Rat> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }

    pub(crate) fn as_flat(&self, d: usize) -> AffineFlat {
        AffineFlat::from_equations(d, vec![self.equation_row()])
            .expect("a hyperplane is never empty")
    }
}

/// Is α usable by the exact oracle: an even nonnegative integer, so that
/// d(Q_i,Q_j)^α is rational.
pub fn alpha_exponent(alpha: &Rat) -> Result<u32> {
    let v = alpha
        .to_i128()
        .ok_or_else(|| Error::InvalidParam(format!("alpha {alpha} is not an integer")))?;
    if v < 0 || v % 2 != 0 {
        return Err(Error::InvalidParam(format!(
            "alpha {alpha} not supported exactly: need an even nonnegative integer"
        )));
    }
    Ok(v as u32)
}

/// Build the arrangement of one hyperplane per edge: the perpendicular to
/// Q_iQ_j whose Pythagorean coordinate is gain·d(Q_i,Q_j)^α, written out as
/// 2(Q_j−Q_i)·x = target − |Q_i|² + |Q_j|².
pub fn build_arrangement(g: &GainGraph, q: &PointConfiguration) -> Result<Vec<Hyperplane>> {
    if q.n() != g.n() {
        return Err(Error::Input(format!(
            "{} reference points for {} vertices",
            q.n(),
            g.n()
        )));
    }
    let half_alpha = alpha_exponent(g.alpha())? / 2;
    let mut out = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        if e.is_loop() {
            return Err(Error::InvalidParam(
                "degenerate loop has no hyperplane; handle it upstream".into(),
            ));
        }
        let qi = q.point(e.i);
        let qj = q.point(e.j);
        let diff = sub(qj, qi);
        let dist_sq = norm_sq(&diff);
        if dist_sq.is_zero() {
            return Err(Error::InvalidParam(format!(
                "adjacent reference points {} and {} coincide",
                e.i, e.j
            )));
        }
        let target = &e.gain * &dist_sq.pow(half_alpha);
        let normal: Vec<Rat> = diff.iter().map(|x| Rat::from_int(2) * x.clone()).collect();
        let offset = target - norm_sq(qi) + norm_sq(qj);
        out.push(Hyperplane {
            normal,
            offset,
            source_edge: e.id,
        });
    }
    Ok(out)
}

/// A nonempty affine flat, stored as the canonical RREF of its constraint
/// system [A | b] (rank rows, d+1 columns). Two flats are equal iff their
/// systems are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFlat {
    d: usize,
    system: RationalMatrix,
    /// Indices (into the arrangement) of all hyperplanes containing the flat.
    /// Filled by the semilattice construction; empty for standalone flats.
    pub containing: Vec<usize>,
}

impl AffineFlat {
    pub fn whole_space(d: usize) -> Self {
        AffineFlat {
            d,
            system: RationalMatrix::zero(0, d + 1),
            containing: vec![],
        }
    }

    /// From equation rows [a_1 .. a_d | b]; None when inconsistent.
    pub fn from_equations(d: usize, rows: Vec<Vec<Rat>>) -> Option<Self> {
        let m = RationalMatrix::from_rows(rows);
        assert_eq!(m.cols(), d + 1);
        let (r, rank) = m.rref();
        // inconsistent iff some row pivots in the rhs column
        for i in 0..rank {
            let lead = (0..=d).find(|&c| !r[(i, c)].is_zero());
            if lead == Some(d) {
                return None;
            }
        }
        Some(AffineFlat {
            d,
            system: r,
            containing: vec![],
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn codim(&self) -> usize {
        self.system.rows()
    }

    pub fn dim(&self) -> usize {
        self.d - self.system.rows()
    }

    pub fn is_whole_space(&self) -> bool {
        self.system.rows() == 0
    }

    pub fn system(&self) -> &RationalMatrix {
        &self.system
    }

    /// Canonical sort key: (codim, system entries).
    fn sort_key(&self) -> (usize, Vec<Rat>) {
        let mut entries = vec![];
        for i in 0..self.system.rows() {
            entries.extend(self.system.row(i).to_vec());
        }
        (self.codim(), entries)
    }

    /// Same flat as a set of points, ignoring bookkeeping.
    pub fn same_locus(&self, other: &AffineFlat) -> bool {
        self.d == other.d && self.system == other.system
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        assert_eq!(p.len(), self.d);
        for i in 0..self.system.rows() {
            let row = self.system.row(i);
            let lhs: Rat = (0..self.d).map(|c| &row[c] * &p[c]).sum();
            if lhs != row[self.d] {
                return false;
            }
        }
        true
    }

    /// Intersect with a hyperplane; None when empty.
    pub fn intersect_hyperplane(&self, h: &Hyperplane) -> Option<AffineFlat> {
        let mut rows: Vec<Vec<Rat>> = (0..self.system.rows())
            .map(|i| self.system.row(i).to_vec())
            .collect();
        rows.push(h.equation_row());
        AffineFlat::from_equations(self.d, rows)
    }

    /// Does the hyperplane contain this flat?
    pub fn contained_in_hyperplane(&self, h: &Hyperplane) -> bool {
        match self.intersect_hyperplane(h) {
            Some(f) => f.system == self.system,
            None => false,
        }
    }

    /// Intersection of two flats in the same ambient space; None when empty.
    pub fn intersect(&self, other: &AffineFlat) -> Option<AffineFlat> {
        assert_eq!(self.d, other.d);
        let mut rows: Vec<Vec<Rat>> = (0..self.system.rows())
            .map(|i| self.system.row(i).to_vec())
            .collect();
        for i in 0..other.system.rows() {
            rows.push(other.system.row(i).to_vec());
        }
        if rows.is_empty() {
            return Some(AffineFlat::whole_space(self.d));
        }
        AffineFlat::from_equations(self.d, rows)
    }

    /// Any point of the flat (free variables set to zero).
    pub fn particular_point(&self) -> Vec<Rat> {
        let mut p = vec![Rat::zero(); self.d];
        for i in 0..self.system.rows() {
            let row = self.system.row(i);
            let pivot = (0..self.d)
                .find(|&c| !row[c].is_zero())
                .expect("consistent system rows pivot left of the rhs");
            // free variables are zero and RREF zeroed other pivot columns
            p[pivot] = row[self.d].clone();
        }
        p
    }

    /// Basis of the direction space (null space of A).
    pub fn direction_basis(&self) -> Vec<Vec<Rat>> {
        if self.system.rows() == 0 {
            return (0..self.d)
                .map(|i| {
                    let mut v = vec![Rat::zero(); self.d];
                    v[i] = Rat::one();
                    v
                })
                .collect();
        }
        let a = RationalMatrix::from_rows(
            (0..self.system.rows())
                .map(|i| self.system.row(i)[..self.d].to_vec())
                .collect(),
        );
        a.null_space()
    }

    /// Orthogonal projection of a point into the flat, exactly:
    /// x = x0 + B(BᵀB)⁻¹Bᵀ(p − x0) over the rational direction basis B.
    pub fn project_point(&self, p: &[Rat]) -> Vec<Rat> {
        assert_eq!(p.len(), self.d);
        if self.system.rows() == 0 {
            return p.to_vec();
        }
        let x0 = self.particular_point();
        let basis = self.direction_basis();
        if basis.is_empty() {
            return x0; // the flat is a point
        }
        let b = RationalMatrix::from_rows(basis).transpose(); // d × k
        let bt = b.transpose();
        let gram = bt.matmul(&b);
        let rhs_vec = sub(p, &x0);
        let bt_rhs: Vec<Rat> = (0..bt.rows()).map(|i| dot(bt.row(i), &rhs_vec)).collect();
        let u = gram
            .solve(&bt_rhs)
            .expect("Gram matrix of a basis is invertible");
        let mut out = x0;
        for (col, coeff) in u.iter().enumerate() {
            for r in 0..self.d {
                out[r] = out[r].clone() + b[(r, col)].clone() * coeff.clone();
            }
        }
        out
    }

    /// Squared distance from a point to the flat.
    pub fn distance_sq(&self, p: &[Rat]) -> Rat {
        norm_sq(&sub(p, &self.project_point(p)))
    }
}

/// The intersection semilattice of an arrangement: all nonempty intersections
/// of subsets of hyperplanes, each with its full (closed) set of containing
/// hyperplanes, ordered by reverse inclusion.
#[derive(Clone, Debug)]
pub struct GeomSemilattice {
    d: usize,
    flats: Vec<AffineFlat>,
}

impl GeomSemilattice {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn flats(&self) -> &[AffineFlat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Number of flats of each codimension.
    pub fn codim_counts(&self) -> Vec<usize> {
        let max = self.flats.iter().map(AffineFlat::codim).max().unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for f in &self.flats {
            counts[f.codim()] += 1;
        }
        counts
    }

    pub fn whitney(&self) -> WhitneyTable {
        let elems: Vec<(usize, u128)> = self
            .flats
            .iter()
            .map(|f| {
                let key = f
                    .containing
                    .iter()
                    .fold(0u128, |acc, &i| acc | (1u128 << i));
                (f.codim(), key)
            })
            .collect();
        WhitneyTable::from_ranked_elements(&elems)
    }
}

/// Build the intersection semilattice by intersecting each hyperplane with
/// every flat found so far, deduplicating by canonical RREF, then computing
/// each flat's full containing-hyperplane set directly.
pub fn intersection_semilattice(hyperplanes: &[Hyperplane], d: usize) -> Result<GeomSemilattice> {
    if hyperplanes.len() > MAX_HYPERPLANES {
        return Err(Error::Guard(format!(
            "{} hyperplanes exceeds the limit of {MAX_HYPERPLANES}",
            hyperplanes.len()
        )));
    }
    let mut flats: BTreeMap<(usize, Vec<Rat>), AffineFlat> = BTreeMap::new();
    let whole = AffineFlat::whole_space(d);
    flats.insert(whole.sort_key(), whole);
    for h in hyperplanes {
        let mut new_flats = vec![];
        for f in flats.values() {
            if let Some(g) = f.intersect_hyperplane(h) {
                new_flats.push(g);
            }
        }
        for g in new_flats {
            flats.entry(g.sort_key()).or_insert(g);
        }
    }
    let mut flats: Vec<AffineFlat> = flats.into_values().collect();
    for f in &mut flats {
        f.containing = hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, h)| f.contained_in_hyperplane(h))
            .map(|(i, _)| i)
            .collect();
    }
    flats.sort_by_key(AffineFlat::sort_key);
    Ok(GeomSemilattice { d, flats })
}

/// Face counts of the arrangement from the geometric poset alone, via the
/// same Möbius machinery as the combinatorial path but fed only with
/// hyperplane equations.
pub fn geometric_counts(lattice: &GeomSemilattice, d: usize) -> Result<CountReport> {
    let table = lattice.whitney();
    counts_from_whitney(&table, d, d + 1)
}

/// Independent planar census via the Euler relation: f0 = distinct
/// intersection points, f1 = Σ over lines of (points on the line + 1),
/// f2 = 1 − f0 + f1.
pub fn planar_census(hyperplanes: &[Hyperplane]) -> Result<(i128, i128, i128)> {
    for h in hyperplanes {
        if h.normal.len() != 2 {
            return Err(Error::InvalidParam("planar census needs d = 2".into()));
        }
    }
    // duplicate lines are not an arrangement of distinct hyperplanes
    let mut canonical: Vec<AffineFlat> = vec![];
    for h in hyperplanes {
        let f = h.as_flat(2);
        if canonical.iter().any(|g| g.same_locus(&f)) {
            return Err(Error::InvalidParam(format!(
                "duplicate line from edge {}",
                h.source_edge
            )));
        }
        canonical.push(f);
    }
    let mut points: Vec<Vec<Rat>> = vec![];
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            let Some(meet) = canonical[i].intersect(&canonical[j]) else {
                continue; // parallel
            };
            if meet.dim() != 0 {
                continue;
            }
            let p = meet.particular_point();
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    let f0 = points.len() as i128;
    let mut f1 = 0i128;
    for h in hyperplanes {
        let on_line = points.iter().filter(|p| h.contains(p)).count() as i128;
        f1 += on_line + 1;
    }
    let f2 = 1 - f0 + f1;
    Ok((f0, f1, f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{make_family, FamilySpec};

    pub(crate) fn pts(d: usize, coords: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(
            d,
            coords
                .iter()
                .map(|p| p.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pythagorean_coordinate_values() {
        let p = [Rat::zero(), Rat::zero()];
        let qi = [Rat::from_int(1), Rat::zero()];
        let qj = [Rat::zero(), Rat::from_int(1)];
        assert!(pythagorean_coordinate(&p, &qi, &qj).is_zero());

        let qi2 = [Rat::from_int(2), Rat::zero()];
        let qj2 = [Rat::zero(), Rat::zero()];
        assert_eq!(pythagorean_coordinate(&p, &qi2, &qj2), Rat::from_int(4));
    }

    #[test]
    fn pythagorean_antisymmetry() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut rand_pt = || {
                vec![
                    Rat::from_int(rng.gen_range(-9..9)),
                    Rat::from_int(rng.gen_range(-9..9)),
                    Rat::from_int(rng.gen_range(-9..9)),
                ]
            };
            let p = rand_pt();
            let a = rand_pt();
            let b = rand_pt();
            assert_eq!(
                pythagorean_coordinate(&p, &a, &b),
                -pythagorean_coordinate(&p, &b, &a)
            );
        }
    }

    #[test]
    fn bisector_hyperplane() {
        // edge (1,2) gain 0 with Q1=(0,0), Q2=(2,0): 4x₁ = 4
        let g = GainGraph::new(2, vec![(1, 2, Rat::zero())], Rat::zero()).unwrap();
        let q = pts(2, &[&[0, 0], &[2, 0]]);
        let h = &build_arrangement(&g, &q).unwrap()[0];
        assert_eq!(h.normal, vec![Rat::from_int(4), Rat::zero()]);
        assert_eq!(h.offset, Rat::from_int(4));
        assert!(h.contains(&[Rat::from_int(1), Rat::from_int(77)]));
    }

    #[test]
    fn alpha_two_scales_target() {
        // α=2, gain 1, Q1=(0), Q2=(1): target = 1·d² = 1 → 2x = 2
        let g = GainGraph::new(2, vec![(1, 2, Rat::one())], Rat::from_int(2)).unwrap();
        let q = pts(1, &[&[0], &[1]]);
        let h = &build_arrangement(&g, &q).unwrap()[0];
        assert_eq!(h.normal, vec![Rat::from_int(2)]);
        assert_eq!(h.offset, Rat::from_int(2));
    }

    #[test]
    fn foot_displacement_matches_half_gain_over_distance() {
        // the foot's signed distance from the midpoint is gain/(2·d₁₂)
        let g = GainGraph::new(2, vec![(1, 2, Rat::from_int(6))], Rat::zero()).unwrap();
        let q = pts(1, &[&[0], &[3]]);
        let h = &build_arrangement(&g, &q).unwrap()[0];
        // foot x solves 6x = 6 − 0 + 9 → x = 5/2; midpoint 3/2;
        // displacement = 1 = 6/(2·3)
        assert!(h.contains(&[Rat::new(5, 2)]));
    }

    #[test]
    fn odd_alpha_rejected() {
        let g = GainGraph::new(2, vec![(1, 2, Rat::one())], Rat::one()).unwrap();
        let q = pts(1, &[&[0], &[1]]);
        assert!(build_arrangement(&g, &q).is_err());
    }

    #[test]
    fn coincident_adjacent_points_rejected() {
        let g = GainGraph::new(2, vec![(1, 2, Rat::zero())], Rat::zero()).unwrap();
        let q = pts(2, &[&[1, 1], &[1, 1]]);
        assert!(build_arrangement(&g, &q).is_err());
    }

    #[test]
    fn three_generic_bisectors_concur() {
        // circumcenter concurrency: plane, 3 lines, 1 triple point
        let g = make_family(&FamilySpec::Bisectors { n: 3 }).unwrap();
        let q = pts(2, &[&[0, 0], &[4, 0], &[1, 3]]);
        let h = build_arrangement(&g, &q).unwrap();
        let sl = intersection_semilattice(&h, 2).unwrap();
        assert_eq!(sl.codim_counts(), vec![1, 3, 1]);
        let point = sl.flats().iter().find(|f| f.dim() == 0).unwrap();
        assert_eq!(point.containing, vec![0, 1, 2]);
    }

    #[test]
    fn parallel_hyperplanes_never_meet() {
        let g = GainGraph::new(
            2,
            vec![(1, 2, Rat::zero()), (1, 2, Rat::from_int(5))],
            Rat::zero(),
        )
        .unwrap();
        let q = pts(2, &[&[0, 0], &[2, 0]]);
        let h = build_arrangement(&g, &q).unwrap();
        let sl = intersection_semilattice(&h, 2).unwrap();
        assert_eq!(sl.codim_counts(), vec![1, 2]);
    }

    #[test]
    fn empty_arrangement_semilattice() {
        let sl = intersection_semilattice(&[], 3).unwrap();
        assert_eq!(sl.len(), 1);
        assert!(sl.flats()[0].is_whole_space());
    }

    #[test]
    fn hyperplane_count_guard() {
        // 50 lines is past the semilattice guard
        let g = make_family(&FamilySpec::Odd { n: 5, k: 2 }).unwrap();
        let q = pts(2, &[&[0, 0], &[13, 1], &[5, 17], &[-7, 11], &[2, -9]]);
        let h = build_arrangement(&g, &q).unwrap();
        assert_eq!(h.len(), 50);
        assert!(matches!(
            intersection_semilattice(&h, 2),
            Err(crate::error::Error::Guard(_))
        ));
    }

    #[test]
    fn geometric_counts_of_concurrent_lines() {
        let g = make_family(&FamilySpec::Bisectors { n: 3 }).unwrap();
        let q = pts(2, &[&[0, 0], &[4, 0], &[1, 3]]);
        let h = build_arrangement(&g, &q).unwrap();
        let sl = intersection_semilattice(&h, 2).unwrap();
        let r = geometric_counts(&sl, 2).unwrap();
        // w = (1, −3, 2): 6 regions, none bounded
        assert_eq!(r.f[2], 6);
        assert_eq!(r.b[2], 0);
    }

    #[test]
    fn geometric_counts_two_crossing_lines() {
        let g = GainGraph::new(
            3,
            vec![(1, 2, Rat::zero()), (1, 3, Rat::zero())],
            Rat::zero(),
        )
        .unwrap();
        let q = pts(2, &[&[0, 0], &[2, 0], &[0, 2]]);
        let h = build_arrangement(&g, &q).unwrap();
        let sl = intersection_semilattice(&h, 2).unwrap();
        assert_eq!(geometric_counts(&sl, 2).unwrap().f[2], 4);
    }

    #[test]
    fn planar_census_cases() {
        // 3 concurrent lines
        let g = make_family(&FamilySpec::Bisectors { n: 3 }).unwrap();
        let q = pts(2, &[&[0, 0], &[4, 0], &[1, 3]]);
        let h = build_arrangement(&g, &q).unwrap();
        assert_eq!(planar_census(&h).unwrap(), (1, 6, 6));

        // 2 parallels + 1 transversal
        let g2 = GainGraph::new(
            3,
            vec![
                (1, 2, Rat::zero()),
                (1, 2, Rat::from_int(8)),
                (1, 3, Rat::zero()),
            ],
            Rat::zero(),
        )
        .unwrap();
        let q2 = pts(2, &[&[0, 0], &[2, 0], &[0, 2]]);
        let h2 = build_arrangement(&g2, &q2).unwrap();
        assert_eq!(planar_census(&h2).unwrap(), (2, 7, 6));

        // single line
        let g3 = GainGraph::new(2, vec![(1, 2, Rat::zero())], Rat::zero()).unwrap();
        let q3 = pts(2, &[&[0, 0], &[2, 0]]);
        let h3 = build_arrangement(&g3, &q3).unwrap();
        assert_eq!(planar_census(&h3).unwrap(), (0, 1, 2));

        // duplicate lines rejected
        let g4 = GainGraph::new(
            2,
            vec![(1, 2, Rat::zero()), (1, 2, Rat::zero())],
            Rat::zero(),
        )
        .unwrap();
        let h4 = build_arrangement(&g4, &q3).unwrap();
        assert!(planar_census(&h4).is_err());
    }

    #[test]
    fn census_matches_mobius_f2() {
        // two independent planar counting paths agree
        let g = make_family(&FamilySpec::Odd { n: 3, k: 1 }).unwrap();
        let q = pts(2, &[&[0, 0], &[7, 1], &[2, 5]]);
        let h = build_arrangement(&g, &q).unwrap();
        let (_, _, f2) = planar_census(&h).unwrap();
        let sl = intersection_semilattice(&h, 2).unwrap();
        let r = geometric_counts(&sl, 2).unwrap();
        assert_eq!(r.f[2], f2);
    }

    #[test]
    fn projection_and_distance() {
        // project (3, 4) onto the line x = y
        let f = AffineFlat::from_equations(2, vec![vec![Rat::one(), -Rat::one(), Rat::zero()]])
            .unwrap();
        assert_eq!(
            f.project_point(&[Rat::from_int(3), Rat::from_int(4)]),
            vec![Rat::new(7, 2), Rat::new(7, 2)]
        );
        assert_eq!(
            f.distance_sq(&[Rat::from_int(3), Rat::from_int(4)]),
            Rat::new(1, 2)
        );
    }

    #[test]
    fn flat_canonical_equality() {
        // the same line from two different equation scalings
        let a = AffineFlat::from_equations(
            2,
            vec![vec![Rat::from_int(2), Rat::from_int(4), Rat::from_int(6)]],
        )
        .unwrap();
        let b = AffineFlat::from_equations(
            2,
            vec![vec![Rat::one(), Rat::from_int(2), Rat::from_int(3)]],
        )
        .unwrap();
        assert!(a.same_locus(&b));
    }

    // For any reference points at all: the hyperplanes of a balanced circle
    // meet exactly where all-but-one of them meet, and the hyperplanes of an
    // unbalanced circle have empty intersection.
    #[test]
    fn circle_redundancy_holds_for_any_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for round in 0..25 {
            let d = rng.gen_range(2..=3usize);
            let q = PointConfiguration::new(
                d,
                (0..3)
                    .map(|_| {
                        (0..d)
                            .map(|_| Rat::from_int(rng.gen_range(-30..=30)))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            if q.points[0] == q.points[1]
                || q.points[1] == q.points[2]
                || q.points[0] == q.points[2]
            {
                continue;
            }
            let (a, b) = (
                Rat::from_int(rng.gen_range(-9..=9)),
                Rat::from_int(rng.gen_range(-9..=9)),
            );
            let balanced = GainGraph::new(
                3,
                vec![
                    (1, 2, a.clone()),
                    (2, 3, b.clone()),
                    (3, 1, -(a.clone() + b.clone())),
                ],
                Rat::zero(),
            )
            .unwrap();
            let h = build_arrangement(&balanced, &q).unwrap();
            let two = h[0].as_flat(d).intersect(&h[1].as_flat(d));
            let three = two.as_ref().and_then(|f| f.intersect_hyperplane(&h[2]));
            match (two, three) {
                (Some(t2), Some(t3)) => assert!(t2.same_locus(&t3), "round {round}"),
                (None, None) => {} // the first two were already parallel
                _ => panic!("balanced circle lost points at the last hyperplane"),
            }

            let unbalanced = GainGraph::new(
                3,
                vec![
                    (1, 2, a.clone()),
                    (2, 3, b.clone()),
                    (3, 1, -(a.clone() + b.clone()) + Rat::one()),
                ],
                Rat::zero(),
            )
            .unwrap();
            let h = build_arrangement(&unbalanced, &q).unwrap();
            let meet = h[0]
                .as_flat(d)
                .intersect(&h[1].as_flat(d))
                .and_then(|f| f.intersect_hyperplane(&h[2]));
            assert!(
                meet.is_none(),
                "round {round}: unbalanced circle must be empty"
            );
        }
    }

    #[test]
    fn points_json_round_trip() {
        let text = r#"{"d":2, "points":[["0","0"],["0","2"],["2","1"],["3","2"]]}"#;
        let q = PointConfiguration::from_json(text).unwrap();
        assert_eq!(q.n(), 4);
        assert_eq!(q.point(3)[0], Rat::from_int(2));
        let again = PointConfiguration::from_json(&q.to_json()).unwrap();
        assert_eq!(again, q);
    }
}
