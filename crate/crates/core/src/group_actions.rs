//! Free actions of finite groups by order automorphisms.
//!
//! Listing the points as `D, g_2 D, ..., g_m D` for a fundamental domain `D`
//! splits the poset matrix into `m x m` blocks with `A_{i,j} = A_{1,s}` where
//! `g_s = g_i^{-1} ∘ g_j` (apply `g_j` first). For `|G| = 2` this gives
//! `det X_M = det(A_11 + A_12) · det(A_11 - A_12)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{determinant, IntMatrix};
use crate::poset::{Poset, ZeroOneMatrix};

/// A validated free action. Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    perms: Vec<Vec<usize>>,
    /// `table[a][b]` is the index of `g_a ∘ g_b`.
    table: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.perms[g][x]
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == 0)
            .expect("every group element has an inverse")
    }

    pub fn composition_table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

fn not_a_group(msg: impl Into<String>) -> Error {
    Error::NotAGroup(msg.into())
}

/// Checks group closure, the automorphism property, freeness and orbit
/// sizes, in that order.
pub fn validate_action(p: &Poset, perms: Vec<Vec<usize>>) -> Result<GroupAction> {
    let n = p.n();
    if perms.is_empty() {
        return Err(not_a_group("no elements"));
    }
    for (k, g) in perms.iter().enumerate() {
        let mut seen = vec![false; n];
        if g.len() != n
            || g.iter()
                .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(not_a_group(format!(
                "g{} is not a permutation of {n} points",
                k + 1
            )));
        }
    }
    if perms[0].iter().enumerate().any(|(i, &v)| i != v) {
        return Err(not_a_group("g1 must be the identity"));
    }
    for a in 0..perms.len() {
        if let Some(b) = (a + 1..perms.len()).find(|&b| perms[a] == perms[b]) {
            return Err(not_a_group(format!("g{} and g{} coincide", a + 1, b + 1)));
        }
    }
    let mut table = vec![vec![0; perms.len()]; perms.len()];
    for a in 0..perms.len() {
        for b in 0..perms.len() {
            let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            table[a][b] = perms.iter().position(|g| *g == composed).ok_or_else(|| {
                not_a_group(format!("g{} ∘ g{} is not in the list", a + 1, b + 1))
            })?;
        }
    }

    for (element, g) in perms.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                if p.leq(i, j) != p.leq(g[i], g[j]) {
                    return Err(Error::NotOrderPreserving { element, i, j });
                }
            }
        }
    }
    for (element, g) in perms.iter().enumerate().skip(1) {
        if let Some(point) = (0..n).find(|&x| g[x] == x) {
            return Err(Error::NotFree { element, point });
        }
    }
    if !n.is_multiple_of(perms.len()) {
        return Err(Error::OrbitSizeMismatch {
            n,
            group_order: perms.len(),
        });
    }
    Ok(GroupAction { perms, table })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockForm {
    /// Fundamental domain: the lowest index of each orbit, ascending.
    pub domain: Vec<usize>,
    /// `order[t]` is the original point at reordered position `t`.
    pub order: Vec<usize>,
    pub matrix: ZeroOneMatrix,
    pub block_size: usize,
    /// `blocks[i][j]` is `A_{i+1,j+1}`.
    pub blocks: Vec<Vec<ZeroOneMatrix>>,
    /// `s_index[i][j]` is the element `g_i^{-1} ∘ g_j`.
    pub s_index: Vec<Vec<usize>>,
}

pub fn block_form(p: &Poset, a: &GroupAction) -> Result<BlockForm> {
    let n = p.n();
    let m = a.order();
    let mut covered = vec![false; n];
    let mut domain = Vec::new();
    for x in 0..n {
        if !covered[x] {
            domain.push(x);
            for g in 0..m {
                covered[a.apply(g, x)] = true;
            }
        }
    }
    let k = n / m;
    if domain.len() != k {
        return Err(Error::OrbitSizeMismatch { n, group_order: m });
    }
    let order: Vec<usize> = (0..m)
        .flat_map(|g| domain.iter().map(move |&d| (g, d)))
        .map(|(g, d)| a.apply(g, d))
        .collect();
    let matrix = p.matrix().permuted(&order);
    let blocks: Vec<Vec<ZeroOneMatrix>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| ZeroOneMatrix::from_fn(k, |r, c| matrix.get(i * k + r, j * k + c)))
                .collect()
        })
        .collect();
    let s_index: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| a.compose(a.inverse(i), j)).collect())
        .collect();
    for i in 0..m {
        for j in 0..m {
            if blocks[i][j] != blocks[0][s_index[i][j]] {
                return Err(Error::InternalInvariantViolation(format!(
                    "block ({},{}) differs from block (1,{})",
                    i + 1,
                    j + 1,
                    s_index[i][j] + 1
                )));
            }
        }
    }
    Ok(BlockForm {
        domain,
        order,
        matrix,
        block_size: k,
        blocks,
        s_index,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Factorization {
    pub det_sum: BigInt,
    pub det_diff: BigInt,
    pub product: BigInt,
    pub det: BigInt,
}

impl Z2Factorization {
    pub fn holds(&self) -> bool {
        self.product == self.det
    }
}

pub fn z2_det_factorization(p: &Poset, a: &GroupAction) -> Result<Z2Factorization> {
    if a.order() != 2 {
        return Err(Error::NotZ2(a.order()));
    }
    let bf = block_form(p, a)?;
    let a11 = IntMatrix::from(&bf.blocks[0][0]);
    let a12 = IntMatrix::from(&bf.blocks[0][1]);
    let det_sum = determinant(&(&a11 + &a12));
    let det_diff = determinant(&(&a11 - &a12));
    Ok(Z2Factorization {
        product: &det_sum * &det_diff,
        det_sum,
        det_diff,
        det: determinant(&IntMatrix::from(&p.matrix())),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitSumReport {
    /// `Σ |U_x|`.
    pub down_sum: usize,
    /// `Σ |F_x|`.
    pub up_sum: usize,
    pub group_order: usize,
}

impl OrbitSumReport {
    pub fn divisible(&self) -> bool {
        self.down_sum.is_multiple_of(self.group_order)
            && self.up_sum.is_multiple_of(self.group_order)
    }
}

pub fn orbit_sum_check(p: &Poset, a: &GroupAction) -> OrbitSumReport {
    let n = p.n();
    OrbitSumReport {
        down_sum: (0..n).map(|i| p.down_set(i).len()).sum(),
        up_sum: (0..n).map(|i| p.up_set(i).len()).sum(),
        group_order: a.order(),
    }
}

/// Whether `det(A_11 + A_12)` vanishes; a convenience for reports.
pub fn z2_sum_block_singular(f: &Z2Factorization) -> bool {
    f.det_sum.is_zero()
}
