//! Named families of posets and exhaustive enumeration up to homeomorphism.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::canon::{canonical_form, canonical_poset};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, IntMatrix, IntPolynomial};
use crate::poset::Poset;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Chain,
    Antichain,
    /// `x1 < x2 > x3 < x4 ...`
    Fence,
    /// Minimal model of the `n`-sphere: two points per height `0..=n`, each
    /// above every point of lower height.
    SphereModel,
    /// `x1<x5>x2<x6>x3<x7>x4<x8>x1`.
    Circle8,
    /// Two disjoint 4-point circles `y1<y5>y2<y6>y1` and `y3<y7>y4<y8>y3`.
    TwoCircles8,
    /// `a < b < x`, `a < c < x`.
    WeakBeat4,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Chain,
        Family::Antichain,
        Family::Fence,
        Family::SphereModel,
        Family::Circle8,
        Family::TwoCircles8,
        Family::WeakBeat4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::Antichain => "antichain",
            Family::Fence => "fence",
            Family::SphereModel => "sphere_model",
            Family::Circle8 => "circle8",
            Family::TwoCircles8 => "twocircles8",
            Family::WeakBeat4 => "weakbeat4",
        }
    }

    /// Whether the size parameter is used.
    pub fn is_sized(self) -> bool {
        matches!(
            self,
            Family::Chain | Family::Antichain | Family::Fence | Family::SphereModel
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    /// Number of points, or the sphere dimension. Ignored by fixed families.
    pub size: usize,
}

impl FamilySpec {
    pub fn new(family: Family, size: usize) -> Self {
        Self { family, size }
    }
}

pub fn make_family(spec: FamilySpec) -> Result<Poset> {
    let n = spec.size;
    match spec.family {
        Family::Chain => {
            let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Poset::from_relations(n, &rel)
        }
        Family::Antichain => Poset::from_relations(n, &[]),
        Family::Fence => {
            let rel: Vec<_> = (1..n)
                .map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) })
                .collect();
            Poset::from_relations(n, &rel)
        }
        Family::SphereModel => {
            let size = 2 * (n + 1);
            let rel: Vec<_> = (2..size)
                .flat_map(|j| (0..2 * (j / 2)).map(move |i| (i, j)))
                .collect();
            Poset::from_relations(size, &rel)
        }
        Family::Circle8 => Poset::from_relations(
            8,
            &[
                (0, 4),
                (1, 4),
                (1, 5),
                (2, 5),
                (2, 6),
                (3, 6),
                (3, 7),
                (0, 7),
            ],
        ),
        Family::TwoCircles8 => Poset::from_relations(
            8,
            &[
                (0, 4),
                (1, 4),
                (1, 5),
                (0, 5),
                (2, 6),
                (3, 6),
                (3, 7),
                (2, 7),
            ],
        )?
        .with_labels((1..=8).map(|i| format!("y{i}"))),
        Family::WeakBeat4 => Poset::from_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])?
            .with_labels(["a", "b", "c", "x"]),
    }
}

/// The antipodal involution of `sphere_model(n)`, swapping the two points of
/// each height. Element 0 is the identity.
pub fn sphere_antipodal_action(n: usize) -> Vec<Vec<usize>> {
    let size = 2 * (n + 1);
    vec![(0..size).collect(), (0..size).map(|i| i ^ 1).collect()]
}

/// Every `n`-point poset up to homeomorphism, canonically labelled and
/// sorted by canonical code.
///
/// Each class is reached from an `(n-1)`-point class by adding a new maximal
/// point above one of its down-closed subsets.
pub fn enumerate_posets(n: usize, limit: usize) -> Result<Vec<Poset>> {
    if n > limit {
        return Err(Error::SizeLimitExceeded { n, limit });
    }
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let mut classes = vec![Poset::from_relations(1, &[])?];
    for m in 2..=n {
        let mut found: BTreeMap<Vec<u32>, Poset> = BTreeMap::new();
        for base in &classes {
            for down in down_closed_subsets(base) {
                let q = extend_with_maximal(base, &down);
                found.entry(canonical_form(&q).code).or_insert(q);
            }
        }
        debug_assert!(found.values().all(|q| q.n() == m));
        classes = found.into_values().map(|q| canonical_poset(&q)).collect();
    }
    if n == 1 {
        classes = classes.iter().map(canonical_poset).collect();
    }
    Ok(classes)
}

fn down_closed_subsets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.n();
    (0u64..1 << n)
        .filter(|&mask| {
            (0..n).all(|j| mask >> j & 1 == 0 || (0..n).all(|i| !p.leq(i, j) || mask >> i & 1 == 1))
        })
        .map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect())
        .collect()
}

fn extend_with_maximal(p: &Poset, below: &[usize]) -> Poset {
    let n = p.n();
    let m = n + 1;
    let leq = (0..m * m)
        .map(|k| {
            let (i, j) = (k / m, k % m);
            match (i == n, j == n) {
                (false, false) => p.leq(i, j),
                (true, true) => true,
                (false, true) => below.contains(&i),
                (true, false) => false,
            }
        })
        .collect();
    Poset::from_leq_unchecked(m, crate::poset::default_labels(m), leq)
}

/// `(-1)^n λ (λ - (n-2)) (λ+1)^(n-2)`, expanded.
pub fn fence_closed_form(n: usize) -> IntPolynomial {
    assert!(n >= 2, "fences have at least two points");
    let sign = IntPolynomial::constant(if n.is_multiple_of(2) { 1 } else { -1 });
    let lam = IntPolynomial::x();
    let shifted = &lam - &IntPolynomial::constant((n - 2) as i64);
    let ones = (&lam + &IntPolynomial::constant(1)).pow((n - 2) as u32);
    &(&(&sign * &lam) * &shifted) * &ones
}

/// Compares the characteristic polynomial of `fence(n)` with the closed
/// form. Requires `n >= 2`.
pub fn fence_charpoly_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n, n: 2 });
    }
    let fence = make_family(FamilySpec::new(Family::Fence, n))?;
    let p = char_poly(&IntMatrix::from(&fence.matrix()));
    Ok(p == fence_closed_form(n))
}
