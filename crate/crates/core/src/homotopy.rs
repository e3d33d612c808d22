//! Beat points, cores and simple-homotopy reduction.
//!
//! Beat points are detected from the matrix: `x_i` is an up beat point iff
//! some row `r_j` satisfies `r_i - r_j = -e_i`, and a down beat point iff some
//! column satisfies `c_i - c_j = -e_i`. The witness `x_j` is the minimum of
//! `F̂_{x_i}` (resp. the maximum of `Û_{x_i}`).
//!
//! Removing a beat point or a weak beat point negates the determinant and
//! leaves `rank_bar` unchanged; [`ReductionTrace`] records each removal.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::canon;
use crate::complexes::reduced_euler_of_poset;
use crate::error::Result;
use crate::linalg::{determinant, rank_bar, IntMatrix};
use crate::poset::{Poset, SumProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BeatKind {
    Up,
    Down,
    Both,
}

impl BeatKind {
    fn from_flags(up: bool, down: bool) -> Option<Self> {
        match (up, down) {
            (true, true) => Some(BeatKind::Both),
            (true, false) => Some(BeatKind::Up),
            (false, true) => Some(BeatKind::Down),
            (false, false) => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BeatKind::Up => "up",
            BeatKind::Down => "down",
            BeatKind::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeatPointReport {
    pub point: usize,
    /// Minimum of `F̂_x`, when `x` is an up beat point.
    pub up_witness: Option<usize>,
    /// Maximum of `Û_x`, when `x` is a down beat point.
    pub down_witness: Option<usize>,
}

impl BeatPointReport {
    pub fn kind(&self) -> BeatKind {
        BeatKind::from_flags(self.up_witness.is_some(), self.down_witness.is_some())
            .expect("a report always has a witness")
    }

    /// The up witness if there is one, otherwise the down witness.
    pub fn witness(&self) -> usize {
        self.up_witness
            .or(self.down_witness)
            .expect("a report always has a witness")
    }
}

/// Row criterion: the `j` with `r_i - r_j = -e_i`, if any.
pub fn up_beat_witness(p: &Poset, i: usize) -> Option<usize> {
    let m = p.matrix();
    let n = p.n();
    (0..n).find(|&j| {
        j != i && m.get(j, i) == 1 && (0..n).all(|k| k == i || m.get(i, k) == m.get(j, k))
    })
}

/// Column criterion: the `j` with `c_i - c_j = -e_i`, if any.
pub fn down_beat_witness(p: &Poset, i: usize) -> Option<usize> {
    let m = p.matrix();
    let n = p.n();
    (0..n).find(|&j| {
        j != i && m.get(i, j) == 1 && (0..n).all(|k| k == i || m.get(k, i) == m.get(k, j))
    })
}

/// Every beat point, in index order, detected by the matrix criteria.
pub fn find_beat_points(p: &Poset) -> Vec<BeatPointReport> {
    (0..p.n())
        .filter_map(|i| {
            let up_witness = up_beat_witness(p, i);
            let down_witness = down_beat_witness(p, i);
            (up_witness.is_some() || down_witness.is_some()).then_some(BeatPointReport {
                point: i,
                up_witness,
                down_witness,
            })
        })
        .collect()
}

fn greatest(p: &Poset, set: &[usize]) -> Option<usize> {
    set.iter()
        .copied()
        .find(|&m| set.iter().all(|&y| p.leq(y, m)))
}

fn least(p: &Poset, set: &[usize]) -> Option<usize> {
    set.iter()
        .copied()
        .find(|&m| set.iter().all(|&y| p.leq(m, y)))
}

/// Beat points from the definition: `F̂_x` has a minimum (up) or `Û_x` has a
/// maximum (down).
pub fn find_beat_points_by_order(p: &Poset) -> Vec<BeatPointReport> {
    (0..p.n())
        .filter_map(|i| {
            let up_witness = least(p, &p.punctured_up_set(i));
            let down_witness = greatest(p, &p.punctured_down_set(i));
            (up_witness.is_some() || down_witness.is_some()).then_some(BeatPointReport {
                point: i,
                up_witness,
                down_witness,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Beat,
    WeakBeat,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Beat => "beat",
            MoveKind::WeakBeat => "weak-beat",
        }
    }
}

/// One removal. Indices refer to the poset the reduction started from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub index: usize,
    pub label: String,
    pub kind: MoveKind,
    pub direction: BeatKind,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: Poset,
    /// Original index of each point of `result`.
    pub kept: Vec<usize>,
}

impl ReductionTrace {
    /// Each removal negates the determinant.
    pub fn sign_flips(&self) -> usize {
        self.steps.len()
    }
}

struct Reducer {
    current: Poset,
    kept: Vec<usize>,
    steps: Vec<ReductionStep>,
}

impl Reducer {
    fn new(p: &Poset) -> Self {
        Self {
            current: p.clone(),
            kept: (0..p.n()).collect(),
            steps: Vec::new(),
        }
    }

    fn remove(&mut self, i: usize, kind: MoveKind, direction: BeatKind, witness: Option<usize>) {
        self.steps.push(ReductionStep {
            index: self.kept[i],
            label: self.current.label(i).to_string(),
            kind,
            direction,
            witness: witness.map(|w| self.kept[w]),
        });
        self.current = self
            .current
            .remove_point(i)
            .expect("never removes the last point");
        self.kept.remove(i);
    }

    fn finish(self) -> ReductionTrace {
        ReductionTrace {
            steps: self.steps,
            result: self.current,
            kept: self.kept,
        }
    }

    fn remove_beat(&mut self, b: &BeatPointReport) {
        let witness = b.witness();
        self.remove(b.point, MoveKind::Beat, b.kind(), Some(witness));
    }
}

/// Stong core: removes the lowest-index beat point until none remain.
pub fn core(p: &Poset) -> ReductionTrace {
    let mut r = Reducer::new(p);
    while r.current.n() > 1 {
        let Some(b) = find_beat_points(&r.current).into_iter().next() else {
            break;
        };
        r.remove_beat(&b);
    }
    r.finish()
}

/// A finite space is contractible iff its core is a single point.
pub fn is_contractible(p: &Poset) -> bool {
    core(p).result.n() == 1
}

fn contractible_subset(p: &Poset, set: &[usize]) -> bool {
    !set.is_empty() && is_contractible(&p.induced(set))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakBeatPoint {
    pub point: usize,
    pub kind: BeatKind,
}

/// Points whose punctured down-set (down) or punctured up-set (up) is
/// nonempty and contractible.
pub fn find_weak_beat_points(p: &Poset) -> Vec<WeakBeatPoint> {
    (0..p.n())
        .filter_map(|i| {
            let up = contractible_subset(p, &p.punctured_up_set(i));
            let down = contractible_subset(p, &p.punctured_down_set(i));
            BeatKind::from_flags(up, down).map(|kind| WeakBeatPoint { point: i, kind })
        })
        .collect()
}

/// Order in which [`weak_reduce_with`] picks removals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionPolicy {
    /// Lowest-index beat point if any, otherwise lowest-index weak beat point.
    #[default]
    BeatFirst,
    /// Lowest-index weak beat point; the move counts as a beat move when the
    /// point is also a beat point.
    WeakFirst,
}

/// Removes beat and weak beat points until neither remains, beat points first.
pub fn weak_reduce(p: &Poset) -> ReductionTrace {
    weak_reduce_with(p, ReductionPolicy::BeatFirst)
}

pub fn weak_reduce_with(p: &Poset, policy: ReductionPolicy) -> ReductionTrace {
    let mut r = Reducer::new(p);
    while r.current.n() > 1 {
        let beats = find_beat_points(&r.current);
        if policy == ReductionPolicy::BeatFirst {
            if let Some(b) = beats.first() {
                r.remove_beat(b);
                continue;
            }
        }
        let Some(w) = find_weak_beat_points(&r.current).into_iter().next() else {
            break;
        };
        match beats.iter().find(|b| b.point == w.point) {
            Some(b) => r.remove_beat(b),
            None => r.remove(w.point, MoveKind::WeakBeat, w.kind, None),
        }
    }
    r.finish()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantsBundle {
    pub det: BigInt,
    pub abs_det: BigInt,
    pub rank_bar: usize,
    pub sum_profile: SumProfile,
    /// Reduced Euler characteristic of the order complex, by chain counting.
    pub reduced_euler: BigInt,
    /// Whether `|det| = |reduced_euler|`.
    pub euler_consistent: bool,
}

pub fn invariants_bundle(p: &Poset) -> InvariantsBundle {
    let det = determinant(&IntMatrix::from(&p.matrix()));
    let reduced_euler = reduced_euler_of_poset(p);
    InvariantsBundle {
        abs_det: det.abs(),
        euler_consistent: det.abs() == reduced_euler.abs(),
        det,
        rank_bar: rank_bar(p),
        sum_profile: p.sum_profile(),
        reduced_euler,
    }
}

/// A witnessing bijection `map` (point `i` of `p` goes to `map[i]` of `q`)
/// when the two posets are homeomorphic.
pub fn homeomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    canon::isomorphism(p, q)
}

/// Removes the weak beat point `i`, checking that it is one.
pub fn remove_weak_beat_point(p: &Poset, i: usize) -> Result<Option<Poset>> {
    p.check_index(i)?;
    if find_weak_beat_points(p).iter().any(|w| w.point == i) {
        p.remove_point(i).map(Some)
    } else {
        Ok(None)
    }
}
