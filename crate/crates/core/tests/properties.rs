mod common;

use std::sync::OnceLock;

use common::*;
use fspace::complexes::{face_poset, order_complex, rankbar_of_complex, reduced_euler_of_poset};
use fspace::digraph::{antichain_cliques, scc_count, to_digraph};
use fspace::enumeration::{enumerate_posets, fence_charpoly_check};
use fspace::group_actions::{block_form, orbit_sum_check, validate_action, z2_det_factorization};
use fspace::homotopy::{
    core, find_beat_points, find_beat_points_by_order, find_weak_beat_points, homeomorphic,
    is_contractible, weak_reduce, ReductionPolicy,
};
use fspace::linalg::{char_poly, determinant, rank, rank_bar, trace_power};
use fspace::subposet_sums::{det_plus_identity, gamma_table, verify_gamma_formulas};
use fspace::{IntMatrix, IntPolynomial, Poset, ZeroOneMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn small() -> &'static [Poset] {
    static CENSUS: OnceLock<Vec<Poset>> = OnceLock::new();
    CENSUS.get_or_init(|| census(6))
}

fn int(p: &Poset) -> IntMatrix {
    IntMatrix::from(&p.matrix())
}

fn det(p: &Poset) -> BigInt {
    determinant(&int(p))
}

fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0u8..3, n * (n - 1) / 2),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, perm)| {
            let mut rel = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] == 0 {
                        rel.push((perm[a], perm[b]));
                    }
                    k += 1;
                }
            }
            Poset::from_relations(n, &rel).unwrap()
        })
}

// ---- posets and matrices

#[test]
fn matrix_round_trip() {
    for p in small() {
        assert_eq!(&Poset::from_matrix(&p.matrix()).unwrap(), p);
    }
}

#[test]
fn membership_matches_idempotence_exhaustive() {
    for n in 1..=3usize {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .collect();
        for mask in 0u32..1 << off.len() {
            let mut m = vec![vec![0i64; n]; n];
            for (k, &(i, j)) in off.iter().enumerate() {
                m[i][j] = (mask >> k & 1) as i64;
            }
            check_membership_vs_idempotence(&m);
        }
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn membership_matches_idempotence_random() {
    let mut r = rng(11);
    for _ in 0..4000 {
        let n = r.gen_range(4..=5);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                match r.gen_range(0..3) {
                    0 => m[j][i] = 1,
                    1 => m[i][j] = 1,
                    _ => {
                        m[i][j] = 1;
                        m[j][i] = 1;
                    }
                }
            }
        }
        check_membership_vs_idempotence(&m);
    }
}

fn check_membership_vs_idempotence(m: &[Vec<i64>]) {
    let n = m.len();
    let cond2 = (0..n).all(|i| (0..n).all(|j| i == j || m[i][j] == 1 || m[j][i] == 1));
    if !cond2 {
        return;
    }
    let zm = ZeroOneMatrix::from_rows(m).unwrap();
    assert_eq!(
        zm.validate_membership().is_ok(),
        zm.validate_boolean_idempotent().unwrap(),
        "{m:?}"
    );
}

#[test]
fn opposite_is_transpose() {
    for p in small() {
        assert_eq!(p.opposite().matrix(), p.matrix().transpose());
    }
}

#[test]
fn row_and_column_sums() {
    for p in small() {
        let m = p.matrix();
        let (rs, cs) = (m.row_sums(), m.col_sums());
        for i in 0..p.n() {
            assert_eq!(rs[i], p.n() - p.up_set(i).len());
            assert_eq!(cs[i], p.n() - p.down_set(i).len());
        }
    }
}

#[test]
fn covers_match_transitive_reduction() {
    for p in small() {
        assert_eq!(p.covers(), transitive_reduction(p));
    }
}

#[test]
fn width_matches_largest_antichain() {
    for p in small() {
        assert_eq!(p.width(), brute_width(p));
    }
}

// ---- digraph

#[test]
fn digraphs_lie_in_poset_class() {
    for p in small() {
        assert!(to_digraph(&p.matrix()).in_poset_class());
    }
}

#[test]
fn cliques_count_antichains() {
    for p in small() {
        let g = to_digraph(&p.matrix());
        for k in 1..=4 {
            assert_eq!(antichain_cliques(&g, k).len(), brute_antichains(p, k));
        }
    }
}

#[test]
fn disconnected_posets_have_one_scc() {
    let mut seen = 0;
    for p in small().iter().filter(|p| !p.is_connected()) {
        assert_eq!(scc_count(&to_digraph(&p.matrix())), 1);
        seen += 1;
    }
    assert!(seen > 0);
}

// ---- exact linear algebra

#[test]
fn determinant_matches_cofactor_expansion() {
    for p in small() {
        assert_eq!(det(p), BigInt::from(cofactor_det(&matrix_i64(p))));
    }
}

#[test]
fn rank_matches_minors() {
    for p in small().iter().filter(|p| p.n() <= 5) {
        assert_eq!(rank(&int(p)), minor_rank(&matrix_i64(p)));
    }
}

#[test]
fn char_poly_constant_and_leading_terms() {
    for p in small() {
        let cp = char_poly(&int(p));
        assert_eq!(cp.coeff(0), det(p));
        assert_eq!(cp.degree(), Some(p.n()));
        let sign = if p.n() % 2 == 0 { 1 } else { -1 };
        assert_eq!(cp.leading_coeff(), BigInt::from(sign));
    }
}

#[test]
fn vanishing_second_trace_means_chain() {
    for p in small() {
        assert_eq!(trace_power(&int(p), 2).is_zero(), p.is_chain());
    }
}

#[test]
fn second_trace_counts_two_point_antichains() {
    for p in small() {
        assert_eq!(
            trace_power(&int(p), 2),
            BigInt::from(2 * brute_antichains(p, 2))
        );
    }
}

/// Closed 3-walks in `G_X` come from 3-point antichains (6 each) and from
/// 2-chains with an incomparable third point (3 each).
#[test]
fn third_trace_decomposition() {
    for p in small() {
        let expected = 6 * brute_antichains(p, 3) + 3 * brute_l32(p);
        assert_eq!(trace_power(&int(p), 3), BigInt::from(expected));
    }
}

#[test]
fn squared_matrix_entries() {
    for p in small().iter().filter(|p| p.n() <= 5) {
        let n = p.n();
        let m = int(p);
        let mt = m.transpose();
        let sq = &m * &m;
        let mmt = &m * &mt;
        let mtm = &mt * &m;
        let union = |a: Vec<usize>, b: Vec<usize>| {
            let mut s = a;
            s.extend(b);
            s.sort_unstable();
            s.dedup();
            BigInt::from(s.len())
        };
        for i in 0..n {
            for j in 0..n {
                let nn = BigInt::from(n);
                assert_eq!(&nn - sq.get(i, j), union(p.up_set(i), p.down_set(j)));
                assert_eq!(&nn - mmt.get(i, j), union(p.up_set(i), p.up_set(j)));
                assert_eq!(&nn - mtm.get(i, j), union(p.down_set(i), p.down_set(j)));
            }
        }
    }
}

#[test]
fn extreme_points_factor_char_poly() {
    let minus_lambda = IntPolynomial::from_i64(&[0, -1]);
    for p in small().iter().filter(|p| p.n() >= 2) {
        let ext = p.extremal_points();
        for x in [ext.maximum, ext.minimum].into_iter().flatten() {
            let rest = p.remove_point(x).unwrap();
            assert_eq!(char_poly(&int(p)), &minus_lambda * &char_poly(&int(&rest)));
        }
    }
}

// ---- homotopy

#[test]
fn beat_point_criteria_agree() {
    for p in small() {
        let by_matrix: Vec<usize> = find_beat_points(p).iter().map(|b| b.point).collect();
        let by_order = find_beat_points_by_order(p);
        assert_eq!(by_matrix, definitional_beat_points(p));
        assert_eq!(find_beat_points(p), by_order);
    }
}

#[test]
fn removals_flip_det_and_keep_rank_bar() {
    for p in small().iter().filter(|p| p.n() >= 2) {
        let mut points: Vec<usize> = find_beat_points(p).iter().map(|b| b.point).collect();
        points.extend(find_weak_beat_points(p).iter().map(|w| w.point));
        for x in points {
            let q = p.remove_point(x).unwrap();
            assert_eq!(det(p), -det(&q));
            assert_eq!(rank_bar(p), rank_bar(&q));
        }
    }
}

#[test]
fn contractible_spaces() {
    for p in small() {
        let contractible = is_contractible(p);
        assert_eq!(contractible, definitional_core(p).n() == 1);
        if contractible {
            assert!(det(p).is_zero() || p.n() == 1);
            assert_eq!(rank_bar(p), 1);
        }
        if p.n() > 1 && find_beat_points(p).is_empty() {
            assert!(!contractible);
        }
    }
}

#[test]
fn cores_are_unique() {
    for p in small() {
        let c = core(p).result;
        assert!(find_beat_points(&c).is_empty() || c.n() == 1);
        assert!(homeomorphic(&c, &definitional_core(p)).is_some());
    }
}

#[test]
fn weak_reduction_preserves_invariants() {
    for p in small() {
        for policy in [ReductionPolicy::BeatFirst, ReductionPolicy::WeakFirst] {
            let t = fspace::homotopy::weak_reduce_with(p, policy);
            let sign = if t.sign_flips().is_multiple_of(2) {
                1
            } else {
                -1
            };
            assert_eq!(det(p), det(&t.result) * sign);
            assert_eq!(rank_bar(p), rank_bar(&t.result));
        }
        assert_eq!(weak_reduce(p).result.n(), weak_reduce(p).kept.len());
    }
}

// ---- complexes

#[test]
fn euler_identity_and_chain_counts() {
    for p in small() {
        let chi = reduced_euler_of_poset(p);
        assert_eq!(chi, BigInt::from(brute_reduced_euler(p)));
        assert_eq!(det(p).abs(), chi.abs());
        assert_eq!(BigInt::from(order_complex(p).reduced_euler()), chi);
    }
}

#[test]
fn face_poset_of_order_complex() {
    for p in small().iter().filter(|p| p.n() <= 5) {
        let k = order_complex(p);
        let fp = face_poset(&k);
        assert_eq!(det(&fp).abs(), det(p).abs());
        assert_eq!(rankbar_of_complex(&k), rank_bar(p));
    }
}

// ---- subposet sums

#[test]
fn det_plus_identity_detects_chains() {
    for p in small() {
        let d = det_plus_identity(p);
        assert!(d == BigInt::zero() || d == BigInt::from(1));
        assert_eq!(d == BigInt::from(1), p.width() == 1);
    }
}

#[test]
fn gamma_formulas_exhaustive() {
    for p in small() {
        let r = verify_gamma_formulas(p, 14).unwrap();
        assert!(r.all_hold(), "{:?}", r.checks);
        assert_eq!(r.table.get(p.n()), &BigInt::from(1));
    }
}

#[test]
fn gamma_matches_cofactor_sums() {
    for p in small().iter().filter(|p| p.n() <= 5) {
        let n = p.n();
        let m = matrix_i64(p);
        let mut brute = vec![0i64; n + 1];
        for s in 0u32..1 << n {
            let idx: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            let sub: Vec<Vec<i64>> = idx
                .iter()
                .map(|&r| idx.iter().map(|&c| m[r][c]).collect())
                .collect();
            brute[n - idx.len()] += cofactor_det(&sub);
        }
        let table = gamma_table(p, 14).unwrap();
        let got: Vec<BigInt> = brute.into_iter().map(BigInt::from).collect();
        assert_eq!(table.values, got);
    }
}

#[test]
fn gamma_spot_checks_on_larger_posets() {
    let mut r = rng(5);
    for n in [7, 8] {
        for _ in 0..6 {
            let p = random_poset(&mut r, n, 0.3);
            assert!(verify_gamma_formulas(&p, 14).unwrap().all_hold());
        }
    }
}

// ---- group actions

/// `m` copies of a random poset, glued by relations repeated around the
/// cyclic group, so that shifting copies is a free action.
fn glued(r: &mut rand::rngs::StdRng, m: usize, k: usize) -> Option<(Poset, Vec<Vec<usize>>)> {
    let base = random_poset(r, k, 0.4);
    let n = m * k;
    let mut rel = Vec::new();
    for g in 0..m {
        for i in 0..k {
            for j in 0..k {
                if base.lt(i, j) {
                    rel.push((g * k + i, g * k + j));
                }
            }
        }
    }
    for _ in 0..r.gen_range(0..3) {
        let (d, e, s) = (r.gen_range(0..k), r.gen_range(0..k), r.gen_range(1..m));
        for g in 0..m {
            rel.push((g * k + d, (g + s) % m * k + e));
        }
    }
    let p = Poset::from_relations(n, &rel).ok()?;
    let perms = (0..m)
        .map(|s| (0..n).map(|x| (x / k + s) % m * k + x % k).collect())
        .collect();
    Some((p, perms))
}

#[test]
fn free_actions_have_latin_blocks() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 60 {
        let m = r.gen_range(2..=4);
        let k = r.gen_range(1..=12 / m);
        let Some((p, perms)) = glued(&mut r, m, k) else {
            continue;
        };
        let a = validate_action(&p, perms).unwrap();
        let bf = block_form(&p, &a).unwrap();
        for i in 0..m {
            for j in 0..m {
                assert_eq!(bf.blocks[i][j], bf.blocks[0][bf.s_index[i][j]]);
            }
        }
        assert!(orbit_sum_check(&p, &a).divisible());
        if m == 2 {
            assert!(z2_det_factorization(&p, &a).unwrap().holds());
        }
        checked += 1;
    }
}

// ---- enumeration

#[test]
fn dual_enumeration_agrees() {
    for n in 1..=5 {
        let by_extension = enumerate_posets(n, 7).unwrap();
        let by_filter = enumerate_by_matrix_filter(n);
        assert_eq!(by_extension.len(), by_filter.len(), "n = {n}");
        for q in &by_filter {
            assert_eq!(
                by_extension
                    .iter()
                    .filter(|p| brute_isomorphic(p, q))
                    .count(),
                1
            );
        }
    }
}

#[test]
fn enumerated_posets_are_valid() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| small().iter().filter(|p| p.n() == n).count())
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63, 318]);
    for p in small() {
        let m = p.matrix();
        assert!(m.validate_membership().is_ok());
        assert_eq!(&Poset::from_matrix(&m).unwrap(), p);
    }
}

#[test]
fn fence_polynomials() {
    for n in 2..=12 {
        assert!(fence_charpoly_check(n).unwrap(), "fence {n}");
    }
}

// ---- randomized

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn prop_round_trip(p in poset_strategy(9)) {
        prop_assert_eq!(Poset::from_matrix(&p.matrix()).unwrap(), p.clone());
        prop_assert_eq!(p.opposite().matrix(), p.matrix().transpose());
    }

    #[test]
    fn prop_beat_removal_flips_det(p in poset_strategy(9)) {
        for b in find_beat_points(&p) {
            if p.n() < 2 { break; }
            let q = p.remove_point(b.point).unwrap();
            prop_assert_eq!(det(&p), -det(&q));
            prop_assert_eq!(rank_bar(&p), rank_bar(&q));
        }
    }

    #[test]
    fn prop_weak_removal_flips_det(p in poset_strategy(8)) {
        for w in find_weak_beat_points(&p) {
            if p.n() < 2 { break; }
            let q = p.remove_point(w.point).unwrap();
            prop_assert_eq!(det(&p), -det(&q));
            prop_assert_eq!(rank_bar(&p), rank_bar(&q));
        }
    }

    #[test]
    fn prop_euler_identity(p in poset_strategy(9)) {
        prop_assert_eq!(det(&p).abs(), reduced_euler_of_poset(&p).abs());
    }

    #[test]
    fn prop_relabelling_is_homeomorphic(
        p in poset_strategy(7),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut order: Vec<usize> = (0..p.n()).collect();
        order.shuffle(&mut rng(seed));
        let q = p.permuted(&order);
        let map = homeomorphic(&p, &q);
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for i in 0..p.n() {
            for j in 0..p.n() {
                prop_assert_eq!(p.leq(i, j), q.leq(map[i], map[j]));
            }
        }
    }

    #[test]
    fn prop_homeomorphism_matches_brute_force(p in poset_strategy(6), q in poset_strategy(6)) {
        prop_assert_eq!(homeomorphic(&p, &q).is_some(), brute_isomorphic(&p, &q));
    }

    #[test]
    fn prop_cores_survive_attached_beat_points(p in poset_strategy(7), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut grown = p.clone();
        for _ in 0..r.gen_range(1..=3) {
            grown = attach_beat_point(&mut r, &grown);
        }
        prop_assert!(homeomorphic(&core(&p).result, &core(&grown).result).is_some());
        prop_assert_eq!(rank_bar(&p), rank_bar(&grown));
        prop_assert_eq!(det(&p).abs(), det(&grown).abs());
    }
}
