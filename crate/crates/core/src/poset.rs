//! Finite posets and their 0/1 matrix encoding.
//!
//! A poset on points `x_1..x_n` is encoded by the matrix with entry `(i,j)`
//! equal to 0 when `x_i <= x_j` and 1 otherwise. Such matrices are exactly the
//! square 0/1 matrices with zero diagonal, no pair of symmetric off-diagonal
//! zeros, and transitive zeros; [`ZeroOneMatrix::validate_membership`] checks
//! those three conditions and [`Poset::from_matrix`] inverts the encoding.
//!
//! Points are identified by their 0-based position. Labels are display only.

use std::fmt;

use crate::error::{Error, Result, Violation};

/// A square matrix with entries in `{0, 1}`.
///
/// Any square binary matrix can be held; membership in the poset class is a
/// separate check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl ZeroOneMatrix {
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NonSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 | 1 => entries.push(v as u8),
                    value => {
                        return Err(Error::NonBinaryEntry {
                            row: i,
                            col: j,
                            value,
                        })
                    }
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> u8) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Order of the matrix.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows()
            .map(|r| r.iter().map(|&v| v as usize).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }

    /// Reorders rows and columns so that new position `t` holds old index
    /// `order[t]`, i.e. computes `E M E^-1` for the permutation matrix `E`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self::from_fn(self.n, |i, j| self.get(order[i], order[j]))
    }

    /// Checks the three membership conditions in order and reports the first
    /// failure with its witness cells.
    pub fn validate_membership(&self) -> std::result::Result<(), Violation> {
        let n = self.n;
        for i in 0..n {
            if self.get(i, i) != 0 {
                return Err(Violation {
                    condition: 1,
                    cells: vec![(i, i)],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.get(i, j) == 0 && self.get(j, i) != 1 {
                    return Err(Violation {
                        condition: 2,
                        cells: vec![(i, j), (j, i)],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) != 0 {
                    continue;
                }
                for k in 0..n {
                    if self.get(j, k) == 0 && self.get(i, k) != 0 {
                        return Err(Violation {
                            condition: 3,
                            cells: vec![(i, j), (j, k), (i, k)],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Reports whether `(1 - M)` is idempotent under Boolean arithmetic, which
    /// for a zero-diagonal binary matrix means the relation `m_ij = 0` is
    /// transitive (a topology on the point set).
    pub fn validate_boolean_idempotent(&self) -> Result<bool> {
        let n = self.n;
        if let Some(i) = (0..n).find(|&i| self.get(i, i) != 0) {
            return Err(Error::NonZeroDiagonal(i));
        }
        let b = |i: usize, j: usize| self.get(i, j) == 0;
        for i in 0..n {
            for j in 0..n {
                let square = (0..n).any(|k| b(i, k) && b(k, j));
                if square != b(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for ZeroOneMatrix {
    /// One line per row, one character per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for &v in row {
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Row sums, column sums and total of a poset matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProfile {
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub total: usize,
}

impl SumProfile {
    /// The profile with both sum vectors sorted; equal for homeomorphic posets.
    pub fn sorted(&self) -> SumProfile {
        let mut row_sums = self.row_sums.clone();
        let mut col_sums = self.col_sums.clone();
        row_sums.sort_unstable();
        col_sums.sort_unstable();
        SumProfile {
            row_sums,
            col_sums,
            total: self.total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPoints {
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
    pub minimum: Option<usize>,
    pub maximum: Option<usize>,
}

/// A finite partial order on points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    labels: Vec<String>,
    leq: Vec<bool>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Poset {
    /// Builds the poset generated by the strict relations `i < j`
    /// (0-based). The reflexive-transitive closure is taken; cycles are
    /// rejected.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(i, j) in relations {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if i == j {
                return Err(Error::Cycle(i));
            }
            leq[i * n + j] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::Cycle(i));
                }
            }
        }
        Ok(Self {
            n,
            labels: default_labels(n),
            leq,
        })
    }

    /// Inverse of [`Poset::matrix`]: `x_i <= x_j` iff `m_ij = 0`.
    pub fn from_matrix(m: &ZeroOneMatrix) -> Result<Self> {
        if m.n() == 0 {
            return Err(Error::EmptyPoset);
        }
        m.validate_membership().map_err(Error::InvalidMatrix)?;
        let n = m.n();
        Ok(Self {
            n,
            labels: default_labels(n),
            leq: (0..n * n).map(|k| m.get(k / n, k % n) == 0).collect(),
        })
    }

    /// Builds from a closed relation already known to be a partial order.
    pub(crate) fn from_leq_unchecked(n: usize, labels: Vec<String>, leq: Vec<bool>) -> Self {
        debug_assert_eq!(labels.len(), n);
        debug_assert_eq!(leq.len(), n * n);
        Self { n, labels, leq }
    }

    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {} labels, got {}", self.n, labels.len()),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels == default_labels(self.n)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.n })
        }
    }

    /// The 0/1 matrix encoding: entry `(i,j)` is 0 iff `x_i <= x_j`.
    pub fn matrix(&self) -> ZeroOneMatrix {
        ZeroOneMatrix::from_fn(self.n, |i, j| u8::from(!self.leq(i, j)))
    }

    /// The same set with the reversed order; its matrix is the transpose.
    pub fn opposite(&self) -> Poset {
        let n = self.n;
        Self {
            n,
            labels: self.labels.clone(),
            leq: (0..n * n).map(|k| self.leq(k % n, k / n)).collect(),
        }
    }

    /// Induced subposet on `points`, in the given order, labels kept.
    pub fn induced(&self, points: &[usize]) -> Poset {
        let m = points.len();
        Self {
            n: m,
            labels: points.iter().map(|&i| self.labels[i].clone()).collect(),
            leq: (0..m * m)
                .map(|k| self.leq(points[k / m], points[k % m]))
                .collect(),
        }
    }

    /// Relabels so that new position `t` holds old point `order[t]`.
    pub fn permuted(&self, order: &[usize]) -> Poset {
        self.induced(order)
    }

    /// `U_x`: all points below or equal to `x_i`.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.leq(j, i)).collect()
    }

    /// `F_x`: all points above or equal to `x_i`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.leq(i, j)).collect()
    }

    /// `C_x = U_x ∩ F_x`, which in a poset is `{x}`.
    pub fn cset(&self, i: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.leq(j, i) && self.leq(i, j))
            .collect()
    }

    pub fn punctured_down_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.lt(j, i)).collect()
    }

    pub fn punctured_up_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.lt(i, j)).collect()
    }

    /// Hasse edges `(i, j)` with `x_i ≺ x_j`, detected from the matrix: the
    /// vector `r_i + c_j^T` vanishes exactly at positions `i` and `j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.matrix();
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let is_cover = (0..n).all(|k| {
                    let p = m.get(i, k) + m.get(k, j);
                    if k == i || k == j {
                        p == 0
                    } else {
                        p != 0
                    }
                });
                if is_cover {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Longest chain length (in points) ending at each point.
    fn chain_lengths_below(&self) -> Vec<usize> {
        let order = self.linear_extension();
        let mut len = vec![1usize; self.n];
        for (pos, &x) in order.iter().enumerate() {
            for &y in &order[..pos] {
                if self.lt(y, x) {
                    len[x] = len[x].max(len[y] + 1);
                }
            }
        }
        len
    }

    /// A linear extension: points sorted by the size of their down-set.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        let sizes: Vec<usize> = (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.leq(j, i)).count())
            .collect();
        order.sort_by_key(|&i| (sizes[i], i));
        order
    }

    /// One less than the maximum number of points in a chain.
    pub fn height(&self) -> usize {
        self.chain_lengths_below().into_iter().max().unwrap_or(1) - 1
    }

    /// Height of `U_{x_i}`.
    pub fn point_height(&self, i: usize) -> usize {
        self.chain_lengths_below()[i] - 1
    }

    pub fn point_heights(&self) -> Vec<usize> {
        self.chain_lengths_below()
            .into_iter()
            .map(|l| l - 1)
            .collect()
    }

    /// Maximum antichain size, via a minimum chain cover (Dilworth): `n`
    /// minus a maximum matching in the bipartite graph of strict relations.
    pub fn width(&self) -> usize {
        let n = self.n;
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for u in 0..n {
            let mut seen = vec![false; n];
            if self.augment(u, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, u: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for v in 0..self.n {
            if !self.lt(u, v) || seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, seen, match_right),
            };
            if free {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for (y, slot) in comp.iter_mut().enumerate() {
                    if *slot == usize::MAX && self.comparable(x, y) {
                        *slot = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Extremal points read off the row and column sums of the matrix.
    pub fn extremal_points(&self) -> ExtremalPoints {
        let m = self.matrix();
        let rows = m.row_sums();
        let cols = m.col_sums();
        let n = self.n;
        ExtremalPoints {
            minimal: (0..n).filter(|&i| cols[i] == n - 1).collect(),
            maximal: (0..n).filter(|&i| rows[i] == n - 1).collect(),
            minimum: (0..n).find(|&i| rows[i] == 0),
            maximum: (0..n).find(|&i| cols[i] == 0),
        }
    }

    /// Whether `x_{s_1} < x_{s_2} < ... < x_{s_k}`, read as the vanishing of
    /// the matrix entries along consecutive pairs.
    pub fn is_chain_sequence(&self, seq: &[usize]) -> Result<bool> {
        for &i in seq {
            self.check_index(i)?;
        }
        let m = self.matrix();
        Ok(seq
            .windows(2)
            .all(|w| w[0] != w[1] && m.get(w[0], w[1]) == 0))
    }

    /// Whether the order is total.
    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.comparable(i, j)))
    }

    pub fn sum_profile(&self) -> SumProfile {
        let m = self.matrix();
        let row_sums = m.row_sums();
        let col_sums = m.col_sums();
        let total = row_sums.iter().sum();
        SumProfile {
            row_sums,
            col_sums,
            total,
        }
    }

    /// The poset with point `i` removed.
    pub fn remove_point(&self, i: usize) -> Result<Poset> {
        self.check_index(i)?;
        if self.n == 1 {
            return Err(Error::EmptyPoset);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&j| j != i).collect();
        Ok(self.induced(&keep))
    }
}
