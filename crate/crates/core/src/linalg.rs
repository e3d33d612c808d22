//! Exact integer linear algebra on square matrices.
//!
//! Everything here works over arbitrary-precision integers. Determinant and
//! rank use fraction-free (Bareiss) elimination, where every division is
//! exact. The characteristic polynomial `p(λ) = det(M - λI)` is recovered by
//! evaluating that determinant at `λ = 0..=n` and interpolating exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poset::{Poset, ZeroOneMatrix};

/// A dense square matrix of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Panics if the rows are not square.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        for r in rows {
            assert_eq!(
                r.as_ref().len(),
                n,
                "IntMatrix::from_rows needs a square matrix"
            );
        }
        Self::from_fn(n, |i, j| BigInt::from(rows[i].as_ref()[j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on the given indices, in order.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// `self - k I`.
    pub fn shift_diagonal(&self, k: &BigInt) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i) - k;
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn rows_vec(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[BigInt]>::to_vec)
            .collect()
    }
}

impl From<&ZeroOneMatrix> for IntMatrix {
    fn from(m: &ZeroOneMatrix) -> Self {
        Self::from_fn(m.n(), |i, j| BigInt::from(m.get(i, j)))
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

fn exact_div(a: BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "Bareiss step produced a non-exact division");
    q
}

/// Exact determinant by Bareiss elimination with row pivoting. The empty
/// matrix has determinant 1.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.rows_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(v, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank over the rationals by fraction-free row echelon reduction.
pub fn rank(m: &IntMatrix) -> usize {
    let n = m.n();
    let mut a = m.rows_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..n {
            for j in col + 1..n {
                let v = &a[i][j] * &a[r][col] - &a[i][col] * &a[r][j];
                a[i][j] = exact_div(v, &prev);
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

/// `|X| - rank(X_M)`.
pub fn rank_bar(p: &Poset) -> usize {
    p.n() - rank(&IntMatrix::from(&p.matrix()))
}

/// Polynomial with integer coefficients, stored lowest degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    /// The polynomial `λ`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// Lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders nonzero terms from the highest degree down, e.g.
    /// `-1*λ^3 + 1*λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*λ")?,
                _ => write!(f, "{mag}*λ^{k}")?,
            }
        }
        Ok(())
    }
}

/// `p(λ) = det(M - λI)`, from `n + 1` exact determinant evaluations and
/// Newton interpolation on the nodes `0..=n`.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.n();
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|k| determinant(&m.shift_diagonal(&BigInt::from(k))))
        .collect();

    // Forward differences in place: diffs[k] becomes Δ^k p(0).
    for k in 1..=n {
        for i in (k..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }

    // p(λ) = Σ Δ^k p(0) / k! · λ(λ-1)...(λ-k+1)
    let mut result = IntPolynomial::default();
    let mut falling = IntPolynomial::constant(1);
    let mut factorial = BigInt::one();
    for (k, d) in diffs.into_iter().enumerate() {
        if k > 0 {
            factorial *= k;
            falling = &falling * &IntPolynomial::from_i64(&[-(k as i64 - 1), 1]);
        }
        let (c, r) = d.div_rem(&factorial);
        assert!(r.is_zero(), "non-integral Newton coefficient");
        result = &result + &(&falling * &IntPolynomial::new(vec![c]));
    }
    result
}

/// `tr(M^k)`.
pub fn trace_power(m: &IntMatrix, k: u32) -> BigInt {
    m.pow(k).trace()
}

/// Antichain counts read off from traces as `tr(M^2)/2` and `tr(M^3)/6`.
///
/// The first is always the number of 2-point antichains. `tr(M^3)` also
/// picks up 3 closed walks from every induced 2-chain plus an incomparable
/// point, so `a3` is the number of 3-point antichains only when no such
/// subposet exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntichainCounts {
    pub a2: usize,
    pub a3: usize,
}

/// Fails with [`Error::InternalInvariantViolation`] when a trace is not
/// divisible.
pub fn antichain_counts(p: &Poset) -> Result<AntichainCounts> {
    let m = IntMatrix::from(&p.matrix());
    let exact = |t: BigInt, d: u32, what: &str| -> Result<usize> {
        let (q, r) = t.div_rem(&BigInt::from(d));
        if !r.is_zero() {
            return Err(Error::InternalInvariantViolation(format!(
                "{what} = {t} is not divisible by {d}"
            )));
        }
        q.to_usize()
            .ok_or_else(|| Error::InternalInvariantViolation(format!("{what} out of range")))
    };
    Ok(AntichainCounts {
        a2: exact(trace_power(&m, 2), 2, "tr(M^2)")?,
        a3: exact(trace_power(&m, 3), 6, "tr(M^3)")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset_matrix(n: usize, rel: &[(usize, usize)]) -> IntMatrix {
        IntMatrix::from(&Poset::from_relations(n, rel).unwrap().matrix())
    }

    fn s1() -> Poset {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&poset_matrix(2, &[])), BigInt::from(-1));
        assert_eq!(
            determinant(&poset_matrix(3, &[(0, 2), (1, 2)])),
            BigInt::zero()
        );
        assert_eq!(determinant(&IntMatrix::from(&s1().matrix())), BigInt::one());
        assert_eq!(determinant(&IntMatrix::zeros(0)), BigInt::one());
        assert_eq!(
            determinant(&IntMatrix::from_rows(&[[2, 1, 3], [0, 4, 1], [5, 2, 0]])),
            BigInt::from(-59)
        );
        // Needs a pivot swap.
        assert_eq!(
            determinant(&IntMatrix::from_rows(&[[0, 1], [1, 0]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_bar(&Poset::from_relations(1, &[]).unwrap()), 1);
        assert_eq!(rank(&IntMatrix::from_rows(&[[0]])), 0);
        assert_eq!(rank_bar(&Poset::from_relations(2, &[]).unwrap()), 0);
        assert_eq!(
            rank_bar(&Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap()),
            1
        );
        assert_eq!(
            rank(&IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]])),
            2
        );
        assert_eq!(
            rank(&IntMatrix::from_rows(&[[0, 0, 1], [0, 0, 2], [0, 0, 0]])),
            1
        );
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(
            IntPolynomial::from_i64(&[0, 1, 0, -1]).to_string(),
            "-1*λ^3 + 1*λ"
        );
        assert_eq!(
            IntPolynomial::from_i64(&[-2, 0, 3]).to_string(),
            "3*λ^2 - 2"
        );
        assert_eq!(IntPolynomial::default().to_string(), "0");
    }

    #[test]
    fn char_poly_of_v_and_opposite() {
        let v = Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        let expected = IntPolynomial::from_i64(&[0, 1, 0, -1]);
        assert_eq!(char_poly(&IntMatrix::from(&v.matrix())), expected);
        assert_eq!(
            char_poly(&IntMatrix::from(&v.opposite().matrix())),
            expected
        );
    }

    #[test]
    fn char_poly_of_chain_is_minus_lambda_power() {
        for n in 1..=6 {
            let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            let p = char_poly(&poset_matrix(n, &rel));
            let expected = IntPolynomial::from_i64(&[0, -1]).pow(n as u32);
            assert_eq!(p, expected);
        }
    }

    #[test]
    fn char_poly_of_general_matrix() {
        // [[2,1],[1,2]]: det(M - λI) = λ^2 - 4λ + 3
        let m = IntMatrix::from_rows(&[[2, 1], [1, 2]]);
        assert_eq!(char_poly(&m), IntPolynomial::from_i64(&[3, -4, 1]));
    }

    #[test]
    fn traces_and_antichains() {
        let anti3 = poset_matrix(3, &[]);
        assert_eq!(trace_power(&anti3, 2), BigInt::from(6));
        assert_eq!(trace_power(&anti3, 3), BigInt::from(6));
        assert_eq!(
            trace_power(&poset_matrix(3, &[(0, 1), (1, 2)]), 2),
            BigInt::zero()
        );
        assert_eq!(trace_power(&anti3, 0), BigInt::from(3));

        let counts = |p: &Poset| {
            let c = antichain_counts(p).unwrap();
            (c.a2, c.a3)
        };
        assert_eq!(counts(&Poset::from_relations(3, &[]).unwrap()), (3, 1));
        let chain5: Vec<_> = (1..5).map(|i| (i - 1, i)).collect();
        assert_eq!(counts(&Poset::from_relations(5, &chain5).unwrap()), (0, 0));
        assert_eq!(counts(&s1()), (2, 0));
    }
}
