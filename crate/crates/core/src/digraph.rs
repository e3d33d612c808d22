//! The loop-free digraph `G_X` whose adjacency matrix is the poset matrix:
//! there is an arc `i -> j` exactly when `x_i` is not below or equal to `x_j`.

use std::fmt::Write as _;

use crate::poset::{Poset, ZeroOneMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut adj = vec![false; n * n];
        for &(u, v) in arcs {
            adj[u * n + v] = true;
        }
        Self { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|&k| self.adj[k])
            .map(|k| (k / self.n, k % self.n))
            .collect()
    }

    /// The three conditions characterising digraphs of posets: no loops; a
    /// missing arc forces the reverse arc; missing arcs compose.
    pub fn in_poset_class(&self) -> bool {
        let n = self.n;
        let e = |u, v| self.has_arc(u, v);
        (0..n).all(|u| !e(u, u))
            && (0..n).all(|u| (0..n).all(|v| u == v || e(u, v) || e(v, u)))
            && (0..n).all(|u| (0..n).all(|v| e(u, v) || (0..n).all(|w| e(v, w) || !e(u, w))))
    }
}

pub fn to_digraph(m: &ZeroOneMatrix) -> Digraph {
    let n = m.n();
    Digraph {
        n,
        adj: (0..n * n).map(|k| m.get(k / n, k % n) == 1).collect(),
    }
}

/// Strongly connected components by Tarjan's algorithm. Components are
/// sorted internally and listed by smallest member.
pub fn strongly_connected_components(g: &Digraph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Digraph,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for w in 0..s.g.n {
            if !s.g.has_arc(v, w) {
                continue;
            }
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("v is on the stack");
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            s.out.push(comp);
        }
    }

    let n = g.n;
    let mut s = State {
        g,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.out.sort_by_key(|c| c[0]);
    s.out
}

pub fn scc_count(g: &Digraph) -> usize {
    strongly_connected_components(g).len()
}

/// All `k`-vertex sets with arcs in both directions between every pair, in
/// lexicographic order. These are exactly the `k`-point antichains.
pub fn antichain_cliques(g: &Digraph, k: usize) -> Vec<Vec<usize>> {
    fn extend(
        g: &Digraph,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n {
            if cur.iter().all(|&u| g.has_arc(u, v) && g.has_arc(v, u)) {
                cur.push(v);
                extend(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, k, 0, &mut Vec::new(), &mut out);
    out
}

fn dot_nodes(out: &mut String, p: &Poset) {
    for i in 0..p.n() {
        writeln!(
            out,
            "  n{} [label=\"{}\"];",
            i + 1,
            p.label(i).replace('"', "\\\"")
        )
        .unwrap();
    }
}

/// DOT rendering of `G_X`, nodes in index order, arcs in row-major order.
pub fn export_dot_gx(p: &Poset) -> String {
    let g = to_digraph(&p.matrix());
    let mut out = String::from("digraph G_X {\n");
    dot_nodes(&mut out, p);
    for (u, v) in g.arcs() {
        writeln!(out, "  n{} -> n{};", u + 1, v + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the Hasse diagram, drawn bottom-up with one rank per
/// point height.
pub fn export_dot_hasse(p: &Poset) -> String {
    let mut out = String::from("digraph Hasse {\n  rankdir=BT;\n");
    dot_nodes(&mut out, p);
    let heights = p.point_heights();
    for h in 0..=p.height() {
        let members: Vec<String> = (0..p.n())
            .filter(|&i| heights[i] == h)
            .map(|i| format!("n{};", i + 1))
            .collect();
        writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
    }
    for (u, v) in p.covers() {
        writeln!(out, "  n{} -> n{};", u + 1, v + 1).unwrap();
    }
    out.push_str("}\n");
    out
}
