//! Canonical labelling of posets.
//!
//! Points are first coloured by `(|U_x|, |F_x|, height)` and the colouring is
//! refined by the colour multisets of strict down- and up-sets until stable.
//! Among all orderings that list points by colour, the one giving the
//! lexicographically smallest matrix code is chosen by backtracking with
//! prefix pruning. Two posets are homeomorphic exactly when their codes agree.

use std::collections::BTreeMap;

use crate::poset::Poset;

/// Canonical code of a poset together with the ordering that realises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Size, colour of each canonical position, then matrix entries in the
    /// incremental order used by the search.
    pub code: Vec<u32>,
    /// `order[t]` is the original point placed at canonical position `t`.
    pub order: Vec<usize>,
}

/// Stable isomorphism-invariant colouring, as dense ranks starting at 0.
pub fn refined_colours(p: &Poset) -> Vec<u32> {
    let n = p.n();
    let heights = p.point_heights();
    let init: Vec<(usize, usize, usize)> = (0..n)
        .map(|i| (p.down_set(i).len(), p.up_set(i).len(), heights[i]))
        .collect();
    let mut colours = rank_keys(&init);
    loop {
        let keys: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|i| {
                let mut below: Vec<u32> = p
                    .punctured_down_set(i)
                    .iter()
                    .map(|&j| colours[j])
                    .collect();
                let mut above: Vec<u32> =
                    p.punctured_up_set(i).iter().map(|&j| colours[j]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (colours[i], below, above)
            })
            .collect();
        let next = rank_keys(&keys);
        let classes = |c: &[u32]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colours) {
            return next;
        }
        colours = next;
    }
}

fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let ranks: BTreeMap<K, u32> = {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        sorted.into_iter().zip(0..).collect()
    };
    keys.iter().map(|k| ranks[k]).collect()
}

struct Search<'a> {
    p: &'a Poset,
    slot_colour: Vec<u32>,
    colours: Vec<u32>,
    used: Vec<bool>,
    current: Vec<usize>,
    bits: Vec<u32>,
    best_bits: Option<Vec<u32>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// `bits` holds, for each filled position t, the entries
    /// `(m[s][t], m[t][s])` for `s < t`.
    fn run(&mut self, depth: usize, tied: bool) {
        let n = self.p.n();
        if depth == n {
            if self.best_bits.as_ref().is_none_or(|b| self.bits < *b) {
                self.best_bits = Some(self.bits.clone());
                self.best_order = self.current.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colours[v] != self.slot_colour[depth] {
                continue;
            }
            let start = self.bits.len();
            for &u in &self.current {
                self.bits.push(u32::from(!self.p.leq(u, v)));
                self.bits.push(u32::from(!self.p.leq(v, u)));
            }
            let mut still_tied = tied;
            let mut prune = false;
            if tied {
                if let Some(best) = &self.best_bits {
                    match self.bits[start..].cmp(&best[start..self.bits.len()]) {
                        std::cmp::Ordering::Greater => prune = true,
                        std::cmp::Ordering::Less => still_tied = false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            if !prune {
                self.used[v] = true;
                self.current.push(v);
                self.run(depth + 1, still_tied);
                self.current.pop();
                self.used[v] = false;
            }
            self.bits.truncate(start);
        }
    }
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    let n = p.n();
    let colours = refined_colours(p);
    let mut slot_colour = colours.clone();
    slot_colour.sort_unstable();
    let mut search = Search {
        p,
        slot_colour: slot_colour.clone(),
        colours,
        used: vec![false; n],
        current: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * n),
        best_bits: None,
        best_order: Vec::new(),
    };
    search.run(0, true);
    let bits = search
        .best_bits
        .expect("a colour-respecting ordering always exists");
    let mut code = Vec::with_capacity(1 + n + bits.len());
    code.push(n as u32);
    code.extend(slot_colour);
    code.extend(bits);
    CanonicalForm {
        code,
        order: search.best_order,
    }
}

/// The poset relabelled into canonical order with default labels.
pub fn canonical_poset(p: &Poset) -> Poset {
    let form = canonical_form(p);
    let q = p.permuted(&form.order);
    Poset::from_leq_unchecked(
        q.n(),
        crate::poset::default_labels(q.n()),
        (0..q.n() * q.n())
            .map(|k| q.leq(k / q.n(), k % q.n()))
            .collect(),
    )
}

/// If `p` and `q` are homeomorphic, returns `map` with `map[i]` the point of
/// `q` matched to point `i` of `p`.
pub fn isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.n() != q.n() {
        return None;
    }
    let fp = canonical_form(p);
    let fq = canonical_form(q);
    if fp.code != fq.code {
        return None;
    }
    let mut map = vec![0; p.n()];
    for (t, &i) in fp.order.iter().enumerate() {
        map[i] = fq.order[t];
    }
    debug_assert!((0..p.n()).all(|i| (0..p.n()).all(|j| p.leq(i, j) == q.leq(map[i], map[j]))));
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_v_is_isomorphic() {
        let v = Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        let w = Poset::from_relations(3, &[(1, 0), (2, 0)]).unwrap();
        let map = isomorphism(&v, &w).unwrap();
        assert_eq!(map[2], 0);
        assert!(isomorphism(&v, &v.opposite()).is_none());
    }

    #[test]
    fn canonical_poset_is_labelling_independent() {
        let a = Poset::from_relations(4, &[(0, 1), (0, 2), (3, 2)]).unwrap();
        let b = a.permuted(&[2, 0, 3, 1]);
        assert_eq!(canonical_poset(&a), canonical_poset(&b));
        assert_eq!(canonical_form(&a).code, canonical_form(&b).code);
    }

    #[test]
    fn colours_separate_levels() {
        let s1 = Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = refined_colours(&s1);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[2], c[3]);
        assert_ne!(c[0], c[2]);
    }
}
