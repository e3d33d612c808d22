//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::HashMap;

use fspace::Poset;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn chain(n: usize) -> Poset {
    let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_relations(n, &rel).unwrap()
}

pub fn matrix_i64(p: &Poset) -> Vec<Vec<i64>> {
    p.matrix()
        .rows()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] * cofactor_det(&minor);
    }
    total
}

/// Largest `k` with a nonzero `k x k` minor.
pub fn minor_rank(m: &[Vec<i64>]) -> usize {
    let n = m.len();
    for k in (1..=n).rev() {
        let subsets: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
            .collect();
        for rows in &subsets {
            for cols in &subsets {
                let sub: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
                    .collect();
                if cofactor_det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tries every bijection.
pub fn brute_isomorphic(p: &Poset, q: &Poset) -> bool {
    let n = p.n();
    n == q.n()
        && permutations(n)
            .iter()
            .any(|f| (0..n).all(|i| (0..n).all(|j| p.leq(i, j) == q.leq(f[i], f[j]))))
}

/// Number of `k`-point antichains by subset inspection.
pub fn brute_antichains(p: &Poset, k: usize) -> usize {
    let n = p.n();
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .filter(|s| {
            let pts: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            pts.iter()
                .all(|&a| pts.iter().all(|&b| a == b || !p.comparable(a, b)))
        })
        .count()
}

/// Largest antichain by subset inspection.
pub fn brute_width(p: &Poset) -> usize {
    (1..=p.n())
        .rev()
        .find(|&k| brute_antichains(p, k) > 0)
        .unwrap_or(0)
}

/// Strict relations minus those implied through a third point.
pub fn transitive_reduction(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if p.lt(i, j) && !(0..n).any(|k| p.lt(i, k) && p.lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Reduced Euler characteristic from all chains found by subset inspection.
pub fn brute_reduced_euler(p: &Poset) -> i64 {
    let n = p.n();
    let mut chi = -1;
    for s in 1u32..1 << n {
        let pts: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        if pts.iter().all(|&a| pts.iter().all(|&b| p.comparable(a, b))) {
            chi += if pts.len() % 2 == 1 { 1 } else { -1 };
        }
    }
    chi
}

/// Beat points by the definition: `Û_x` has a maximum or `F̂_x` a minimum.
pub fn definitional_beat_points(p: &Poset) -> Vec<usize> {
    let n = p.n();
    (0..n)
        .filter(|&x| {
            let below: Vec<usize> = (0..n).filter(|&y| p.lt(y, x)).collect();
            let above: Vec<usize> = (0..n).filter(|&y| p.lt(x, y)).collect();
            below.iter().any(|&m| below.iter().all(|&y| p.leq(y, m)))
                || above.iter().any(|&m| above.iter().all(|&y| p.leq(m, y)))
        })
        .collect()
}

/// Removes definitional beat points greedily until none remain.
pub fn definitional_core(p: &Poset) -> Poset {
    let mut q = p.clone();
    while q.n() > 1 {
        match definitional_beat_points(&q).first() {
            Some(&x) => q = q.remove_point(x).unwrap(),
            None => break,
        }
    }
    q
}

/// Posets on `n` points by filtering candidate matrices: every pair is
/// assigned `<`, `>` or incomparable and the resulting matrix is kept when it
/// passes the membership check. Classes are separated with
/// [`brute_isomorphic`].
pub fn enumerate_by_matrix_filter(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut reps: HashMap<(Vec<usize>, Vec<usize>), Vec<Poset>> = HashMap::new();
    for code in 0..total {
        let mut m = vec![vec![1i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => m[i][j] = 0,
                2 => m[j][i] = 0,
                _ => {}
            }
            c /= 3;
        }
        let Ok(zm) = fspace::ZeroOneMatrix::from_rows(&m) else {
            continue;
        };
        if zm.validate_membership().is_err() {
            continue;
        }
        let p = Poset::from_matrix(&zm).unwrap();
        let mut rs = zm.row_sums();
        let mut cs = zm.col_sums();
        rs.sort_unstable();
        cs.sort_unstable();
        let bucket = reps.entry((rs, cs)).or_default();
        if !bucket.iter().any(|q| brute_isomorphic(&p, q)) {
            bucket.push(p);
        }
    }
    reps.into_values().flatten().collect()
}

/// A random poset on `n` points: a random acyclic relation, closed.
pub fn random_poset(rng: &mut StdRng, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                rel.push((perm[a], perm[b]));
            }
        }
    }
    Poset::from_relations(n, &rel).unwrap()
}

/// Adds a point that is a beat point of the result, dominated by (or
/// dominating) a random existing point.
pub fn attach_beat_point(rng: &mut StdRng, p: &Poset) -> Poset {
    let up = rng.gen_bool(0.5);
    let base = if up { p.clone() } else { p.opposite() };
    let n = base.n();
    let y = rng.gen_range(0..n);
    // New x below y with F̂_x = F_y, and Û_x a down-closed part of Û_y.
    let seeds: Vec<usize> = base
        .punctured_down_set(y)
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let below: Vec<usize> = (0..n)
        .filter(|&w| seeds.iter().any(|&s| base.leq(w, s)))
        .collect();
    let mut rel: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| base.lt(i, j))
        .collect();
    rel.push((n, y));
    rel.extend(below.iter().map(|&w| (w, n)));
    let grown = Poset::from_relations(n + 1, &rel).unwrap();
    if up {
        grown
    } else {
        grown.opposite()
    }
}

/// All posets with at most `max` points, one per homeomorphism class.
pub fn census(max: usize) -> Vec<Poset> {
    (1..=max)
        .flat_map(|n| fspace::enumeration::enumerate_posets(n, max.max(7)).unwrap())
        .collect()
}

/// Number of induced 3-point subposets shaped like a 2-chain plus a point.
pub fn brute_l32(p: &Poset) -> usize {
    let n = p.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let comparable_pairs = [(a, b), (a, c), (b, c)]
                    .iter()
                    .filter(|&&(u, v)| p.comparable(u, v))
                    .count();
                if comparable_pairs == 1 {
                    count += 1;
                }
            }
        }
    }
    count
}
