//! Finite simplicial complexes and the order complex / face poset functors.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{determinant, rank_bar, IntMatrix};
use crate::poset::Poset;

/// A complex given by its facets over named vertices. Facets are stored as
/// sorted vertex-index sets, none contained in another, sorted by
/// `(dimension, lexicographic)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<String>,
    facets: Vec<Vec<usize>>,
}

fn by_dim_then_lex(a: &Vec<usize>, b: &Vec<usize>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

impl SimplicialComplex {
    /// Builds a complex from simplices over `names`; non-maximal simplices
    /// are dropped.
    pub fn from_facets(names: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets".into()));
        }
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty facet".into()));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= names.len()) {
                return Err(Error::InvalidComplex(format!(
                    "vertex index {v} has no name"
                )));
            }
            let set: BTreeSet<usize> = f.iter().copied().collect();
            if set.len() != f.len() {
                return Err(Error::InvalidComplex("repeated vertex in facet".into()));
            }
            sets.push(set.into_iter().collect::<Vec<_>>());
        }
        sets.sort_by(by_dim_then_lex);
        sets.dedup();
        let maximal: Vec<Vec<usize>> = sets
            .iter()
            .filter(|f| !sets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();

        let mut seen = BTreeSet::new();
        seen.extend(maximal.iter().flatten().copied());
        if seen.len() != names.len() {
            return Err(Error::InvalidComplex(
                "some named vertex lies in no facet".into(),
            ));
        }
        let mut unique = BTreeSet::new();
        for n in &names {
            if !unique.insert(n) {
                return Err(Error::InvalidComplex(format!(
                    "duplicate vertex name {n:?}"
                )));
            }
        }
        Ok(Self {
            names,
            facets: maximal,
        })
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn dimension(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    /// Every simplex, as sorted vertex sets ordered by dimension then
    /// lexicographically.
    pub fn simplices(&self) -> Vec<Vec<usize>> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            for mask in 1u64..(1u64 << f.len()) {
                let s: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(s);
            }
        }
        let mut out: Vec<_> = all.into_iter().collect();
        out.sort_by(by_dim_then_lex);
        out
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dimension() + 1];
        for s in self.simplices() {
            f[s.len() - 1] += 1;
        }
        f
    }

    pub fn euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn reduced_euler(&self) -> i64 {
        self.euler() - 1
    }

    fn simplex_label(&self, s: &[usize]) -> String {
        let names: Vec<&str> = s.iter().map(|&v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Simplices are the nonempty chains of `p`; the facets are its maximal
/// chains. Vertex names are the poset labels.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let covers = p.covers();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); p.n()];
    for &(i, j) in &covers {
        up[i].push(j);
    }
    let ext = p.extremal_points();
    let mut facets = Vec::new();
    let mut stack: Vec<Vec<usize>> = ext.minimal.iter().map(|&m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("chains are nonempty");
        if up[last].is_empty() {
            let mut f = chain;
            f.sort_unstable();
            facets.push(f);
        } else {
            for &next in &up[last] {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
    }
    SimplicialComplex::from_facets(p.labels().to_vec(), facets)
        .expect("maximal chains form a valid complex")
}

/// Simplices of `k` ordered by inclusion, points in `(dimension, lex)` order
/// and labelled `{a,b,...}`.
pub fn face_poset(k: &SimplicialComplex) -> Poset {
    let simplices = k.simplices();
    let n = simplices.len();
    let leq = (0..n * n)
        .map(|idx| is_subset(&simplices[idx / n], &simplices[idx % n]))
        .collect();
    let labels = simplices.iter().map(|s| k.simplex_label(s)).collect();
    Poset::from_leq_unchecked(n, labels, leq)
}

/// `|det|` of the face poset matrix.
pub fn det_of_complex(k: &SimplicialComplex) -> BigInt {
    determinant(&IntMatrix::from(&face_poset(k).matrix())).abs()
}

pub fn rankbar_of_complex(k: &SimplicialComplex) -> usize {
    rank_bar(&face_poset(k))
}

/// Reduced Euler characteristic of the order complex, from the numbers
/// `c_k` of `k`-point chains: `Σ (-1)^(k-1) c_k - 1`.
pub fn reduced_euler_of_poset(p: &Poset) -> BigInt {
    chain_counts(p)
        .into_iter()
        .enumerate()
        .fold(
            BigInt::from(-1),
            |acc, (k, c)| if k % 2 == 0 { acc + c } else { acc - c },
        )
}

/// `counts[k]` is the number of chains with `k + 1` points.
pub fn chain_counts(p: &Poset) -> Vec<BigInt> {
    let n = p.n();
    let order = p.linear_extension();
    // ending[x][k]: chains of k + 1 points whose top is x.
    let mut ending: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    for (pos, &x) in order.iter().enumerate() {
        let mut row = vec![BigInt::from(1)];
        for &y in &order[..pos] {
            if !p.lt(y, x) {
                continue;
            }
            for (k, c) in ending[y].iter().enumerate() {
                if row.len() <= k + 1 {
                    row.resize(k + 2, BigInt::zero());
                }
                row[k + 1] += c;
            }
        }
        ending[x] = row;
    }
    let mut totals: Vec<BigInt> = Vec::new();
    for row in ending {
        for (k, c) in row.into_iter().enumerate() {
            if totals.len() <= k {
                totals.resize(k + 1, BigInt::zero());
            }
            totals[k] += c;
        }
    }
    totals
}
