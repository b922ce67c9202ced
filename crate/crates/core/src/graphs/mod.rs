//! Cayley graphs of the twin functions, the edge-colored pair graph, and a
//! brute-force strong-regularity checker.
//!
//! Graphs are stored as bitset adjacency rows. A colored graph keeps a second
//! plane marking which edges are blue; red is adjacency minus blue, so every
//! edge of a colored graph has exactly one of the two colors.

mod iso;

pub use iso::{
    find_color_swap_automorphism, find_isomorphism, verify_mapping, IsoCertificate,
    DEFAULT_ISO_BUDGET,
};

use crate::bent::{BoolFn, SrgParams};
use crate::bits;
use crate::clifford::{self, basis_count, positive_basis};
use crate::error::Error;
use crate::monomial::{Amicability, Support};

/// Edge color in the pair graph. `Red` marks anti-amicable pairs and carries
/// label -1; `Blue` marks amicable pairs and carries +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeColor {
    Red,
    Blue,
}

impl EdgeColor {
    pub fn label(self) -> i8 {
        match self {
            EdgeColor::Red => -1,
            EdgeColor::Blue => 1,
        }
    }

    pub fn other(self) -> EdgeColor {
        match self {
            EdgeColor::Red => EdgeColor::Blue,
            EdgeColor::Blue => EdgeColor::Red,
        }
    }
}

/// Simple graph on vertices `0..n`, optionally with red/blue edge colors.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    blue: Option<Vec<u64>>,
}

impl LabeledGraph {
    pub fn uncolored(n: usize) -> Self {
        let words = bits::words_for(n);
        LabeledGraph {
            n,
            words,
            adj: vec![0; n * words],
            blue: None,
        }
    }

    pub fn colored(n: usize) -> Self {
        let words = bits::words_for(n);
        LabeledGraph {
            n,
            words,
            adj: vec![0; n * words],
            blue: Some(vec![0; n * words]),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_colored(&self) -> bool {
        self.blue.is_some()
    }

    pub(crate) fn adj_row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn blue_row(&self, v: usize) -> &[u64] {
        let blue = self.blue.as_ref().expect("colored graph");
        &blue[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(self.blue.is_none(), "colored graphs take add_colored_edge");
        self.add_adj(u, v);
    }

    pub fn add_colored_edge(&mut self, u: usize, v: usize, color: EdgeColor) {
        assert!(self.blue.is_some(), "uncolored graphs take add_edge");
        self.add_adj(u, v);
        if color == EdgeColor::Blue {
            let w = self.words;
            let blue = self.blue.as_mut().unwrap();
            bits::set(&mut blue[u * w..(u + 1) * w], v);
            bits::set(&mut blue[v * w..(v + 1) * w], u);
        }
    }

    fn add_adj(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        assert!(u < self.n && v < self.n);
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        bits::get(self.adj_row(u), v)
    }

    /// Color of the edge (u, v), or None when not adjacent.
    pub fn color_of(&self, u: usize, v: usize) -> Option<EdgeColor> {
        if !self.adjacent(u, v) {
            return None;
        }
        match &self.blue {
            Some(_) if bits::get(self.blue_row(u), v) => Some(EdgeColor::Blue),
            Some(_) => Some(EdgeColor::Red),
            None => panic!("color_of on an uncolored graph"),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::popcount(self.adj_row(v))
    }

    pub fn color_degree(&self, v: usize, color: EdgeColor) -> usize {
        let blue = bits::popcount(self.blue_row(v));
        match color {
            EdgeColor::Blue => blue,
            EdgeColor::Red => self.degree(v) - blue,
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        bits::and_popcount(self.adj_row(u), self.adj_row(v))
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits::ones(self.adj_row(u)) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges as (u, v, label) with u < v; label is -1 for red, +1 for blue.
    pub fn colored_edges(&self) -> Vec<(usize, usize, i8)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (u, v, self.color_of(u, v).expect("edge").label()))
            .collect()
    }

    /// The uncolored graph carrying only edges of one color.
    pub fn subgraph_by_color(&self, color: EdgeColor) -> LabeledGraph {
        assert!(self.is_colored());
        let mut g = LabeledGraph::uncolored(self.n);
        for u in 0..self.n {
            let adj = self.adj_row(u);
            let blue = self.blue_row(u);
            let row = &mut g.adj[u * g.words..(u + 1) * g.words];
            for w in 0..g.words {
                row[w] = match color {
                    EdgeColor::Blue => adj[w] & blue[w],
                    EdgeColor::Red => adj[w] & !blue[w],
                };
            }
        }
        g
    }

    /// Same support, red and blue exchanged.
    pub fn swap_colors(&self) -> LabeledGraph {
        assert!(self.is_colored());
        let mut g = self.clone();
        let blue = g.blue.as_mut().unwrap();
        for (w, (a, b)) in self.adj.iter().zip(self.blue.as_ref().unwrap()).enumerate() {
            blue[w] = a & !b;
        }
        g
    }

    /// Subgraph induced on `verts`, relabeled to 0..verts.len() in the given
    /// order. Colors are preserved when present.
    pub fn induced(&self, verts: &[usize]) -> LabeledGraph {
        let k = verts.len();
        let mut g = if self.is_colored() {
            LabeledGraph::colored(k)
        } else {
            LabeledGraph::uncolored(k)
        };
        for a in 0..k {
            for b in a + 1..k {
                if self.is_colored() {
                    if let Some(c) = self.color_of(verts[a], verts[b]) {
                        g.add_colored_edge(a, b, c);
                    }
                } else if self.adjacent(verts[a], verts[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// DIMACS format; colored graphs get the label as a third field on each
    /// edge line.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edge_count());
        if self.is_colored() {
            for (u, v, label) in self.colored_edges() {
                out.push_str(&format!("e {} {} {}\n", u + 1, v + 1, label));
            }
        } else {
            for (u, v) in self.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
        out
    }
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_colored() {
            write!(
                f,
                "LabeledGraph(colored, n={}, edges={:?})",
                self.n,
                self.colored_edges()
            )
        } else {
            write!(f, "LabeledGraph(n={}, edges={:?})", self.n, self.edges())
        }
    }
}

/// Cayley graph of a truth table under XOR: vertices 0..4^m, edge (i, j) when
/// `f(i ^ j) = 1`. Requires `f(0) = 0` so there are no loops.
pub fn cayley_graph(f: &BoolFn) -> Result<LabeledGraph, Error> {
    if f.value(0) != 0 {
        return Err(Error::NonzeroAtOrigin);
    }
    let n = f.len();
    let mut g = LabeledGraph::uncolored(n);
    for u in 0..n {
        for v in u + 1..n {
            if f.value(u ^ v) == 1 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Largest half-rank for which the pair graph is built by the matrix route.
pub const MAX_DELTA_M: usize = 4;

/// Edge-colored graph on the basis indices: support-disjoint pairs get an
/// edge, red (-1) when anti-amicable and blue (+1) when amicable. Pairs with
/// overlapping support stay non-adjacent.
///
/// Built entirely from matrix arithmetic; the digit-rule shortcut is checked
/// against it in tests rather than substituted for it.
pub fn delta_graph(m: usize) -> Result<LabeledGraph, Error> {
    clifford::check_m(m)?;
    if m > MAX_DELTA_M {
        return Err(Error::MOutOfRange {
            m,
            min: 1,
            max: MAX_DELTA_M,
        });
    }
    let basis = positive_basis(m)?;
    let n = basis_count(m);
    let mut g = LabeledGraph::colored(n);
    for i in 0..n {
        for j in i + 1..n {
            let rel = basis[i].pair_relation(&basis[j])?;
            if rel.support == Support::Disjoint {
                let color = match rel.amicability {
                    Amicability::AntiAmicable => EdgeColor::Red,
                    Amicability::Amicable => EdgeColor::Blue,
                };
                g.add_colored_edge(i, j, color);
            }
        }
    }
    Ok(g)
}

/// Outcome of the brute-force strong-regularity check. Failures carry the
/// first witness in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SrgOutcome {
    StronglyRegular(SrgParams),
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    IrregularLambda {
        u: usize,
        v: usize,
        count: usize,
        expected: usize,
    },
    IrregularMu {
        u: usize,
        v: usize,
        count: usize,
        expected: usize,
    },
}

impl SrgOutcome {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgOutcome::StronglyRegular(p) => Some(*p),
            _ => None,
        }
    }
}

/// Checks strong regularity by exhaustive counting: every degree, then the
/// common-neighbor count of every pair, adjacent and not.
pub fn check_srg(g: &LabeledGraph) -> SrgOutcome {
    let n = g.vertex_count();
    let k = g.degree(0);
    for v in 1..n {
        let d = g.degree(v);
        if d != k {
            return SrgOutcome::NotRegular {
                vertex: v,
                degree: d,
                expected: k,
            };
        }
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbors(u, v);
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(expected) if expected != c => {
                    return if g.adjacent(u, v) {
                        SrgOutcome::IrregularLambda {
                            u,
                            v,
                            count: c,
                            expected,
                        }
                    } else {
                        SrgOutcome::IrregularMu {
                            u,
                            v,
                            count: c,
                            expected,
                        }
                    };
                }
                Some(_) => {}
            }
        }
    }
    SrgOutcome::StronglyRegular(SrgParams {
        v: n,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bent::{sigma_fn, srg_params, tau_fn, BoolFn};

    #[test]
    fn colored_graph_basics() {
        let mut g = LabeledGraph::colored(4);
        g.add_colored_edge(0, 1, EdgeColor::Red);
        g.add_colored_edge(2, 0, EdgeColor::Blue);
        assert!(g.adjacent(1, 0));
        assert_eq!(g.color_of(0, 1), Some(EdgeColor::Red));
        assert_eq!(g.color_of(0, 2), Some(EdgeColor::Blue));
        assert_eq!(g.color_of(1, 2), None);
        assert_eq!(g.colored_edges(), vec![(0, 1, -1), (0, 2, 1)]);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.color_degree(0, EdgeColor::Red), 1);
        assert_eq!(g.color_degree(0, EdgeColor::Blue), 1);

        let swapped = g.swap_colors();
        assert_eq!(swapped.color_of(0, 1), Some(EdgeColor::Blue));
        assert_eq!(swapped.color_of(0, 2), Some(EdgeColor::Red));
        assert_eq!(swapped.swap_colors(), g);

        let red = g.subgraph_by_color(EdgeColor::Red);
        assert_eq!(red.edges(), vec![(0, 1)]);
    }

    #[test]
    fn induced_preserves_colors() {
        let mut g = LabeledGraph::colored(5);
        g.add_colored_edge(1, 3, EdgeColor::Red);
        g.add_colored_edge(3, 4, EdgeColor::Blue);
        let h = g.induced(&[1, 3, 4]);
        assert_eq!(h.colored_edges(), vec![(0, 1, -1), (1, 2, 1)]);
    }

    #[test]
    fn cayley_rejects_loops() {
        let f = BoolFn::new(1, vec![1, 0, 0, 0]).unwrap();
        assert_eq!(cayley_graph(&f).unwrap_err(), Error::NonzeroAtOrigin);
    }

    #[test]
    fn rank_one_cayley_graphs_are_perfect_matchings() {
        let s = cayley_graph(&sigma_fn(1).unwrap()).unwrap();
        assert_eq!(s.edges(), vec![(0, 1), (2, 3)]);
        let t = cayley_graph(&tau_fn(1).unwrap()).unwrap();
        assert_eq!(t.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn rank_one_pair_graph() {
        let d = delta_graph(1).unwrap();
        assert_eq!(
            d.colored_edges(),
            vec![(0, 1, -1), (0, 2, 1), (1, 3, 1), (2, 3, -1)]
        );
        // Index pairs with overlapping support (xor digit 3) stay non-edges.
        assert_eq!(d.color_of(0, 3), None);
        assert_eq!(d.color_of(1, 2), None);
    }

    #[test]
    fn pair_graph_overlays_both_cayley_graphs() {
        for m in 1..=3 {
            let d = delta_graph(m).unwrap();
            let red = d.subgraph_by_color(EdgeColor::Red);
            let blue = d.subgraph_by_color(EdgeColor::Blue);
            assert_eq!(red, cayley_graph(&sigma_fn(m).unwrap()).unwrap(), "m={m}");
            assert_eq!(blue, cayley_graph(&tau_fn(m).unwrap()).unwrap(), "m={m}");
        }
    }

    #[test]
    fn pair_graph_colors_follow_the_digit_rule() {
        // Red edge exactly when the xor index lands in the sigma support;
        // this is the equivalence the matrix route must reproduce.
        let m = 3;
        let d = delta_graph(m).unwrap();
        let sigma = sigma_fn(m).unwrap();
        let tau = tau_fn(m).unwrap();
        for u in 0..d.vertex_count() {
            for v in u + 1..d.vertex_count() {
                let x = u ^ v;
                let expected = if sigma.value(x) == 1 {
                    Some(EdgeColor::Red)
                } else if tau.value(x) == 1 {
                    Some(EdgeColor::Blue)
                } else {
                    None
                };
                assert_eq!(d.color_of(u, v), expected, "m={m} u={u} v={v}");
            }
        }
    }

    #[test]
    fn both_cayley_graphs_are_strongly_regular() {
        for m in 1..=3 {
            let expected = srg_params(m);
            for f in [sigma_fn(m).unwrap(), tau_fn(m).unwrap()] {
                let g = cayley_graph(&f).unwrap();
                assert_eq!(check_srg(&g), SrgOutcome::StronglyRegular(expected));
            }
        }
    }

    #[test]
    fn srg_failures_carry_witnesses() {
        // A path on 3 vertices is not regular.
        let mut p = LabeledGraph::uncolored(3);
        p.add_edge(0, 1);
        p.add_edge(1, 2);
        assert_eq!(
            check_srg(&p),
            SrgOutcome::NotRegular {
                vertex: 1,
                degree: 2,
                expected: 1
            }
        );
        // C6 is regular but mu is not constant: vertices at distance 2 share
        // one neighbor, antipodal ones share none.
        let mut c6 = LabeledGraph::uncolored(6);
        for i in 0..6 {
            c6.add_edge(i, (i + 1) % 6);
        }
        assert_eq!(
            check_srg(&c6),
            SrgOutcome::IrregularMu {
                u: 0,
                v: 3,
                count: 0,
                expected: 1
            }
        );
        // C5 is the classic (5, 2, 0, 1) strongly regular graph.
        let mut c5 = LabeledGraph::uncolored(5);
        for i in 0..5 {
            c5.add_edge(i, (i + 1) % 5);
        }
        assert_eq!(
            check_srg(&c5),
            SrgOutcome::StronglyRegular(SrgParams {
                v: 5,
                k: 2,
                lambda: 0,
                mu: 1
            })
        );
    }

    #[test]
    fn dimacs_layout() {
        let mut g = LabeledGraph::uncolored(3);
        g.add_edge(0, 2);
        assert_eq!(g.to_dimacs(), "p edge 3 1\ne 1 3\n");
        let d = delta_graph(1).unwrap();
        assert!(d.to_dimacs().starts_with("p edge 4 4\ne 1 2 -1\n"));
    }
}
