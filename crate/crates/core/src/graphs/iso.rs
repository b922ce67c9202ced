//! Graph isomorphism by iterated refinement plus backtracking with forward
//! checking. Strongly regular graphs defeat the refinement (every vertex
//! looks alike), so the search must carry its weight; candidate sets are kept
//! as bitsets and pruned on every assignment.

use std::collections::BTreeMap;

use crate::bits;
use crate::graphs::{EdgeColor, LabeledGraph};

/// Default cap on search nodes (one node per attempted vertex assignment).
pub const DEFAULT_ISO_BUDGET: u64 = 100_000_000;

/// Result of an isomorphism search.
///
/// `Absent` is only produced from an exhausted search or a refuted invariant,
/// never from giving up; running out of budget yields `Inconclusive`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IsoCertificate {
    /// `mapping[u]` is the image of vertex `u`; verified edge-by-edge before
    /// being returned.
    Mapping { mapping: Vec<usize>, nodes: u64 },
    Absent { witness: String, nodes: u64 },
    Inconclusive { nodes: u64 },
}

/// Checks that `mapping` is a bijection sending every (non-)edge of `g` to a
/// (non-)edge of `h`, with equal colors when `respect_colors` is set.
pub fn verify_mapping(
    g: &LabeledGraph,
    h: &LabeledGraph,
    mapping: &[usize],
    respect_colors: bool,
) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in mapping {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if respect_colors {
                if g.color_of(u, v) != h.color_of(mapping[u], mapping[v]) {
                    return false;
                }
            } else if g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v]) {
                return false;
            }
        }
    }
    true
}

/// Relation of a vertex pair as seen by the matcher.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Rel {
    None,
    Edge,
    Red,
    Blue,
}

fn relation(g: &LabeledGraph, u: usize, v: usize, colors: bool) -> Rel {
    if !g.adjacent(u, v) {
        Rel::None
    } else if !colors {
        Rel::Edge
    } else {
        match g.color_of(u, v).unwrap() {
            EdgeColor::Red => Rel::Red,
            EdgeColor::Blue => Rel::Blue,
        }
    }
}

/// Iterated neighborhood refinement over both graphs at once, sharing one
/// class-id space. Returns per-vertex class ids, or an error string when the
/// class size multisets differ (proof of non-isomorphism).
fn joint_refinement(
    g: &LabeledGraph,
    h: &LabeledGraph,
    colors: bool,
) -> Result<(Vec<u64>, Vec<u64>), String> {
    let n = g.vertex_count();
    let mut ids_g = vec![0u64; n];
    let mut ids_h = vec![0u64; n];
    let mut classes = 1u64;
    for round in 0..n {
        let signature = |graph: &LabeledGraph, ids: &[u64], v: usize| {
            let mut sig: Vec<(Rel, u64)> = bits::ones(graph.adj_row(v))
                .map(|u| (relation(graph, v, u, colors), ids[u]))
                .collect();
            sig.sort_unstable();
            (ids[v], sig)
        };
        let mut table: BTreeMap<(u64, Vec<(Rel, u64)>), u64> = BTreeMap::new();
        let mut next_g = vec![0u64; n];
        let mut next_h = vec![0u64; n];
        for v in 0..n {
            let s = signature(g, &ids_g, v);
            let fresh = table.len() as u64;
            let id = *table.entry(s).or_insert(fresh);
            next_g[v] = id;
        }
        for v in 0..n {
            let s = signature(h, &ids_h, v);
            let fresh = table.len() as u64;
            let id = *table.entry(s).or_insert(fresh);
            next_h[v] = id;
        }
        let new_classes = table.len() as u64;
        let mut count_g = BTreeMap::new();
        let mut count_h = BTreeMap::new();
        for v in 0..n {
            *count_g.entry(next_g[v]).or_insert(0u64) += 1;
            *count_h.entry(next_h[v]).or_insert(0u64) += 1;
        }
        if count_g != count_h {
            return Err(format!(
                "refinement round {} splits the vertex sets differently",
                round + 1
            ));
        }
        ids_g = next_g;
        ids_h = next_h;
        if new_classes == classes {
            break;
        }
        classes = new_classes;
    }
    Ok((ids_g, ids_h))
}

struct Matcher<'a> {
    g: &'a LabeledGraph,
    colors: bool,
    n: usize,
    words: usize,
    /// For each h-vertex x, precomputed rows: what an h-vertex must satisfy
    /// to stay compatible with a neighbor (by relation) of x.
    h_rows: BTreeMap<Rel, Vec<u64>>,
    assignment: Vec<Option<usize>>,
    budget: u64,
    nodes: u64,
    out_of_budget: bool,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a LabeledGraph, h: &'a LabeledGraph, colors: bool, budget: u64) -> Self {
        let n = g.vertex_count();
        let words = bits::words_for(n);
        let mask = bits::tail_mask(n);
        let mut h_rows = BTreeMap::new();
        let rels: &[Rel] = if colors {
            &[Rel::None, Rel::Red, Rel::Blue]
        } else {
            &[Rel::None, Rel::Edge]
        };
        for &rel in rels {
            let mut plane = vec![0u64; n * words];
            for x in 0..n {
                let row = &mut plane[x * words..(x + 1) * words];
                for y in 0..n {
                    if y != x && relation(h, x, y, colors) == rel {
                        bits::set(row, y);
                    }
                }
                if words > 0 {
                    row[words - 1] &= mask;
                }
            }
            h_rows.insert(rel, plane);
        }
        Matcher {
            g,
            colors,
            n,
            words,
            h_rows,
            assignment: vec![None; n],
            budget,
            nodes: 0,
            out_of_budget: false,
        }
    }

    fn h_row(&self, rel: Rel, x: usize) -> &[u64] {
        let plane = &self.h_rows[&rel];
        &plane[x * self.words..(x + 1) * self.words]
    }

    fn dfs(&mut self, cand: &[u64], depth: usize) -> Option<Vec<usize>> {
        if depth == self.n {
            let mapping: Vec<usize> = self.assignment.iter().map(|a| a.unwrap()).collect();
            return Some(mapping);
        }
        // Most-constrained unassigned vertex first; ties break on index.
        let mut best: Option<(usize, usize)> = None;
        for u in 0..self.n {
            if self.assignment[u].is_some() {
                continue;
            }
            let count = bits::popcount(&cand[u * self.words..(u + 1) * self.words]);
            if count == 0 {
                return None;
            }
            if best.map_or(true, |(c, _)| count < c) {
                best = Some((count, u));
            }
        }
        let (_, u) = best.expect("depth < n leaves an unassigned vertex");
        let row: Vec<u64> = cand[u * self.words..(u + 1) * self.words].to_vec();
        for x in bits::ones(&row) {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.out_of_budget = true;
                return None;
            }
            let mut next = cand.to_vec();
            self.assignment[u] = Some(x);
            let mut viable = true;
            for v in 0..self.n {
                if self.assignment[v].is_some() {
                    continue;
                }
                let vrow = &mut next[v * self.words..(v + 1) * self.words];
                bits::clear(vrow, x);
                let rel = relation(self.g, u, v, self.colors);
                bits::and_assign(vrow, self.h_row(rel, x));
                if bits::is_zero(vrow) {
                    viable = false;
                    break;
                }
            }
            if viable {
                if let Some(found) = self.dfs(&next, depth + 1) {
                    return Some(found);
                }
                if self.out_of_budget {
                    self.assignment[u] = None;
                    return None;
                }
            }
            self.assignment[u] = None;
        }
        None
    }
}

/// Searches for an isomorphism from `g` to `h`.
///
/// When `respect_colors` is set both graphs must be colored and the mapping
/// must preserve edge colors; otherwise only adjacency is matched.
pub fn find_isomorphism(
    g: &LabeledGraph,
    h: &LabeledGraph,
    respect_colors: bool,
    budget: u64,
) -> IsoCertificate {
    if respect_colors {
        assert!(
            g.is_colored() && h.is_colored(),
            "color-respecting search needs colored graphs"
        );
    }
    let n = g.vertex_count();
    if h.vertex_count() != n {
        return IsoCertificate::Absent {
            witness: format!(
                "vertex counts differ: {} vs {}",
                n,
                h.vertex_count()
            ),
            nodes: 0,
        };
    }
    if n == 0 {
        return IsoCertificate::Mapping {
            mapping: vec![],
            nodes: 0,
        };
    }

    let (ids_g, ids_h) = match joint_refinement(g, h, respect_colors) {
        Ok(pair) => pair,
        Err(witness) => return IsoCertificate::Absent { witness, nodes: 0 },
    };

    let words = bits::words_for(n);
    let mut cand = vec![0u64; n * words];
    for u in 0..n {
        let row = &mut cand[u * words..(u + 1) * words];
        for x in 0..n {
            if ids_g[u] == ids_h[x] {
                bits::set(row, x);
            }
        }
    }

    let mut matcher = Matcher::new(g, h, respect_colors, budget);
    match matcher.dfs(&cand, 0) {
        Some(mapping) => {
            assert!(
                verify_mapping(g, h, &mapping, respect_colors),
                "search returned a mapping that fails verification"
            );
            IsoCertificate::Mapping {
                mapping,
                nodes: matcher.nodes,
            }
        }
        None if matcher.out_of_budget => IsoCertificate::Inconclusive {
            nodes: matcher.nodes,
        },
        None => IsoCertificate::Absent {
            witness: format!("search space exhausted after {} nodes", matcher.nodes),
            nodes: matcher.nodes,
        },
    }
}

/// Searches for an automorphism of the colored graph that exchanges the two
/// edge colors, i.e. an isomorphism onto the color-swapped copy.
pub fn find_color_swap_automorphism(g: &LabeledGraph, budget: u64) -> IsoCertificate {
    let swapped = g.swap_colors();
    find_isomorphism(g, &swapped, true, budget)
}
