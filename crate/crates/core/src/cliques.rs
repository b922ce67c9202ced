//! Maximum clique search and the Hurwitz-Radon bound that turns clique
//! numbers into a non-isomorphism certificate for the twin Cayley graphs.
//!
//! Cliques through 0 in the sigma Cayley graph translate to families of skew,
//! orthogonal, pairwise-anticommuting matrices, which the Hurwitz-Radon
//! function caps at rho(2^m) - 1 members. The tau graph meanwhile always
//! contains a clique of size 2^m. For m >= 4 these two numbers separate the
//! graphs; the search below certifies the sigma side exactly at desk scale.

use crate::bent::{sigma_fn, tau_fn};
use crate::bits;
use crate::clifford::{self, gamma};
use crate::error::Error;
use crate::graphs::{cayley_graph, LabeledGraph};
use crate::monomial::{SignedPerm, Symmetry};

/// Default cap on branch-and-bound nodes.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 100_000_000;

/// Hurwitz-Radon function at a power of two: for `n = 2^(4d+c)` with
/// `0 <= c < 4`, `rho(n) = 2^c + 8d`.
pub fn rho(n: usize) -> Result<usize, Error> {
    if n == 0 || n & (n - 1) != 0 {
        return Err(Error::NotPowerOfTwo(n as u64));
    }
    let t = n.trailing_zeros() as usize;
    Ok((1 << (t % 4)) + 8 * (t / 4))
}

/// True when the matrices form a Hurwitz-Radon family: all the same order,
/// each skew and orthogonal, pairwise anticommuting.
pub fn is_hr_family(mats: &[SignedPerm]) -> Result<bool, Error> {
    let Some(first) = mats.first() else {
        return Ok(true);
    };
    let n = first.order();
    for a in mats {
        if a.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: a.order(),
            });
        }
        match a.classify() {
            Ok(c) if c.symmetry == Symmetry::Skew => {}
            Ok(_) => return Ok(false),
            Err(_) => return Ok(false),
        }
        if !a.multiply(&a.transpose())?.is_identity() {
            return Ok(false);
        }
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[..i] {
            let ab = a.multiply(b)?;
            let ba = b.multiply(a)?;
            if ab != ba.neg() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug)]
pub struct CliqueOptions {
    pub budget: u64,
    pub threads: usize,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions {
            budget: DEFAULT_CLIQUE_BUDGET,
            threads: 1,
        }
    }
}

/// Result of a maximum clique search.
///
/// With `exact` set, `clique` is the lexicographically smallest maximum
/// clique and `size` is the clique number. On budget exhaustion `exact` is
/// false and the fields describe the best clique found.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CliqueReport {
    pub graph: String,
    pub n: usize,
    pub size: usize,
    pub clique: Vec<usize>,
    pub exact: bool,
    /// Greedy coloring bound on the clique number, taken at the root.
    pub upper_bound: usize,
    pub nodes: u64,
}

/// Flat bitset adjacency used by the search.
struct Rows {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Rows {
    fn from_graph(g: &LabeledGraph) -> Rows {
        let n = g.vertex_count();
        let words = bits::words_for(n);
        let mut rows = Rows {
            n,
            words,
            bits: vec![0; n * words],
        };
        for u in 0..n {
            for v in bits::ones(g.adj_row(u)) {
                bits::set(rows.row_mut(u), v);
            }
        }
        rows
    }

    fn relabeled(g: &LabeledGraph, pos: &[usize]) -> Rows {
        let n = g.vertex_count();
        let words = bits::words_for(n);
        let mut rows = Rows {
            n,
            words,
            bits: vec![0; n * words],
        };
        for u in 0..n {
            for v in bits::ones(g.adj_row(u)) {
                bits::set(rows.row_mut(pos[u]), pos[v]);
            }
        }
        rows
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.bits[v * self.words..(v + 1) * self.words]
    }

    fn full(&self) -> Vec<u64> {
        let mut p = vec![!0u64; self.words];
        p[self.words - 1] &= bits::tail_mask(self.n);
        p
    }
}

/// Removal order by repeated minimum degree, ties to the smaller index.
/// Returned earliest-removed first.
fn degeneracy_order(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for u in bits::ones(g.adj_row(v)) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

struct Search<'a> {
    rows: &'a Rows,
    budget: u64,
    nodes: u64,
    complete: bool,
    best_size: usize,
    best: Vec<usize>,
    /// Decision mode: stop as soon as a clique of this size is found.
    target: Option<usize>,
    found: bool,
}

impl<'a> Search<'a> {
    fn new(rows: &'a Rows, budget: u64) -> Self {
        Search {
            rows,
            budget,
            nodes: 0,
            complete: true,
            best_size: 0,
            best: Vec::new(),
            target: None,
            found: false,
        }
    }

    /// Greedy coloring of the candidate set in ascending vertex order.
    /// Returns (vertex, color) pairs sorted by color, colors from 1.
    fn color_sort(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let words = self.rows.words;
        let mut class_masks: Vec<Vec<u64>> = Vec::new();
        let mut class_members: Vec<Vec<usize>> = Vec::new();
        for v in bits::ones(p) {
            let row = self.rows.row(v);
            let mut placed = false;
            for (mask, members) in class_masks.iter_mut().zip(class_members.iter_mut()) {
                if bits::and_popcount(mask, row) == 0 {
                    bits::set(mask, v);
                    members.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut mask = vec![0u64; words];
                bits::set(&mut mask, v);
                class_masks.push(mask);
                class_members.push(vec![v]);
            }
        }
        let mut out = Vec::with_capacity(bits::popcount(p));
        for (color, members) in class_members.iter().enumerate() {
            for &v in members {
                out.push((v, color + 1));
            }
        }
        out
    }

    fn leaf(&mut self, r: &[usize]) {
        if r.len() > self.best_size {
            self.best_size = r.len();
            self.best = r.to_vec();
            if let Some(t) = self.target {
                if self.best_size >= t {
                    self.found = true;
                }
            }
        }
    }

    fn expand(&mut self, p: &[u64], r: &mut Vec<usize>) {
        let order = self.color_sort(p);
        let mut live = p.to_vec();
        // In decision mode anything that cannot reach the target is dead
        // weight even before it beats the incumbent.
        let floor = match self.target {
            Some(t) => self.best_size.max(t - 1),
            None => self.best_size,
        };
        for &(v, color) in order.iter().rev() {
            if self.found {
                return;
            }
            if r.len() + color <= floor.max(self.best_size) {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.complete = false;
                return;
            }
            let mut next = live.clone();
            bits::and_assign(&mut next, self.rows.row(v));
            r.push(v);
            if bits::is_zero(&next) {
                self.leaf(r);
            } else {
                self.expand(&next, r);
            }
            r.pop();
            if !self.complete || self.found {
                return;
            }
            bits::clear(&mut live, v);
        }
    }
}

/// Root branches in the order the sequential search would open them. Each is
/// (vertex, candidate set, coloring bound for cliques through the vertex).
fn root_branches(rows: &Rows) -> (usize, Vec<(usize, Vec<u64>, usize)>) {
    let probe = Search::new(rows, 0);
    let full = rows.full();
    let order = probe.color_sort(&full);
    let upper_bound = order.last().map_or(0, |&(_, c)| c);
    let mut live = full;
    let mut branches = Vec::with_capacity(order.len());
    for &(v, color) in order.iter().rev() {
        let mut p = live.clone();
        bits::and_assign(&mut p, rows.row(v));
        branches.push((v, p, color));
        bits::clear(&mut live, v);
    }
    (upper_bound, branches)
}

struct Phase1 {
    best_size: usize,
    best: Vec<usize>,
    complete: bool,
    nodes: u64,
    upper_bound: usize,
}

fn run_phase1(rows: &Rows, budget: u64, threads: usize) -> Phase1 {
    let (upper_bound, branches) = root_branches(rows);
    let threads = threads.max(1);
    let shares: Vec<u64> = (0..threads)
        .map(|w| budget / threads as u64 + if w == 0 { budget % threads as u64 } else { 0 })
        .collect();

    let run_worker = |w: usize| {
        let mut s = Search::new(rows, shares[w]);
        let mut r = Vec::new();
        for (i, (v, p, color)) in branches.iter().enumerate() {
            if i % threads != w {
                continue;
            }
            if *color <= s.best_size {
                continue;
            }
            r.push(*v);
            if bits::is_zero(p) {
                s.leaf(&r);
            } else {
                s.expand(p, &mut r);
            }
            r.pop();
            if !s.complete {
                break;
            }
        }
        (s.best_size, s.best, s.complete, s.nodes)
    };

    let results: Vec<(usize, Vec<usize>, bool, u64)> = if threads == 1 {
        vec![run_worker(0)]
    } else {
        let worker = &run_worker;
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| scope.spawn(move || worker(w)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut out = Phase1 {
        best_size: 0,
        best: Vec::new(),
        complete: true,
        nodes: 0,
        upper_bound,
    };
    for (size, mut clique, complete, nodes) in results {
        out.nodes += nodes;
        out.complete &= complete;
        clique.sort_unstable();
        if size > out.best_size || (size == out.best_size && size > 0 && clique < out.best) {
            out.best_size = size;
            out.best = clique;
        }
    }
    out
}

/// True when `p` (restricted search space) contains a clique of size >= t.
/// Returns (found, search_was_complete).
fn exists_clique(rows: &Rows, p: &[u64], t: usize, budget: u64, nodes: &mut u64) -> (bool, bool) {
    if t == 0 {
        return (true, true);
    }
    if bits::popcount(p) < t {
        return (false, true);
    }
    let mut s = Search::new(rows, budget);
    s.target = Some(t);
    let mut r = Vec::new();
    s.expand(p, &mut r);
    *nodes += s.nodes;
    (s.found, s.complete || s.found)
}

/// Exhaustive maximum clique by branch-and-bound with greedy coloring bounds
/// over a degeneracy vertex order.
///
/// Exact results are independent of the thread count: the clique number is
/// established first, then the lexicographically smallest maximum clique is
/// rebuilt sequentially from it.
pub fn max_clique(g: &LabeledGraph, graph: &str, opts: &CliqueOptions) -> CliqueReport {
    assert!(!g.is_colored(), "clique search works on uncolored graphs");
    let n = g.vertex_count();
    if n == 0 {
        return CliqueReport {
            graph: graph.to_string(),
            n,
            size: 0,
            clique: vec![],
            exact: true,
            upper_bound: 0,
            nodes: 0,
        };
    }

    // Positions by reversed min-degree removal: highest coreness first.
    let removal = degeneracy_order(g);
    let mut pos = vec![0usize; n];
    for (p, &v) in removal.iter().rev().enumerate() {
        pos[v] = p;
    }
    let relabeled = Rows::relabeled(g, &pos);
    let original = Rows::from_graph(g);

    let phase1 = run_phase1(&relabeled, opts.budget, opts.threads);
    let order_back: Vec<usize> = {
        let mut back = vec![0usize; n];
        for (v, &p) in pos.iter().enumerate() {
            back[p] = v;
        }
        back
    };
    let mut best_original: Vec<usize> = phase1.best.iter().map(|&p| order_back[p]).collect();
    best_original.sort_unstable();

    if !phase1.complete {
        return CliqueReport {
            graph: graph.to_string(),
            n,
            size: phase1.best_size,
            clique: best_original,
            exact: false,
            upper_bound: phase1.upper_bound,
            nodes: phase1.nodes,
        };
    }

    // Phase 2: rebuild the lexicographically smallest maximum clique by
    // decision queries against the now-known clique number.
    let omega = phase1.best_size;
    let mut nodes = phase1.nodes;
    let mut allowed = original.full();
    let mut chosen: Vec<usize> = Vec::with_capacity(omega);
    'slots: while chosen.len() < omega {
        for v in bits::ones(&allowed.clone()) {
            let mut rest = allowed.clone();
            bits::and_assign(&mut rest, original.row(v));
            for w in 0..=v {
                bits::clear(&mut rest, w);
            }
            let need = omega - chosen.len() - 1;
            let (found, complete) = exists_clique(&original, &rest, need, opts.budget, &mut nodes);
            if !complete {
                // Could not certify lex-minimality within budget; fall back
                // to the phase 1 clique. The size is still exact.
                return CliqueReport {
                    graph: graph.to_string(),
                    n,
                    size: omega,
                    clique: best_original,
                    exact: true,
                    upper_bound: phase1.upper_bound,
                    nodes,
                };
            }
            if found {
                chosen.push(v);
                allowed = rest;
                continue 'slots;
            }
        }
        unreachable!("an exact clique number always admits a completion");
    }

    CliqueReport {
        graph: graph.to_string(),
        n,
        size: omega,
        clique: chosen,
        exact: true,
        upper_bound: phase1.upper_bound,
        nodes,
    }
}

/// The all-blue clique in the pair graph: indices whose base-4 digits are all
/// 0 or 2. Always `2^m` vertices, pairwise amicable with disjoint supports.
pub fn blue_clique(m: usize) -> Vec<usize> {
    assert!((1..=clifford::MAX_M).contains(&m));
    (0..1usize << m)
        .map(|mask| {
            let mut idx = 0;
            for t in 0..m {
                if mask >> t & 1 == 1 {
                    idx += 2 << (2 * t);
                }
            }
            idx
        })
        .collect()
}

/// XOR-translate of a vertex set, sorted. Cayley graphs of XOR functions are
/// vertex-transitive under these translations.
pub fn translate_clique(clique: &[usize], c: usize) -> Vec<usize> {
    let mut out: Vec<usize> = clique.iter().map(|&v| v ^ c).collect();
    out.sort_unstable();
    out
}

/// Converts a clique of the sigma Cayley graph into a Hurwitz-Radon family.
///
/// The clique is first translated to contain 0 (by its smallest member if
/// needed); the nonzero vertices then map through `gamma`. The family size is
/// one less than the clique size.
pub fn red_clique_to_hr(m: usize, clique: &[usize]) -> Result<Vec<SignedPerm>, Error> {
    clifford::check_m(m)?;
    let sigma = sigma_fn(m)?;
    for &v in clique {
        if v >= sigma.len() {
            return Err(Error::IndexOutOfRange {
                m,
                index: v,
                limit: sigma.len(),
            });
        }
    }
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[..i] {
            if a == b || sigma.value(a ^ b) != 1 {
                return Err(Error::NotRedClique { m, a: b, b: a });
            }
        }
    }
    let shift = if clique.contains(&0) {
        0
    } else {
        clique.iter().copied().min().unwrap_or(0)
    };
    let mut family = Vec::with_capacity(clique.len().saturating_sub(1));
    for &v in clique {
        let x = v ^ shift;
        if x != 0 {
            family.push(gamma(m, x)?);
        }
    }
    assert!(
        is_hr_family(&family)?,
        "translated sigma cliques always give Hurwitz-Radon families"
    );
    Ok(family)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RedOmega {
    pub value: usize,
    pub exact: bool,
}

/// The clique-number separation certificate for one half-rank.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Certificate {
    pub m: usize,
    /// Matrix order 2^m, the relevant Hurwitz-Radon argument.
    pub order: usize,
    pub rho: usize,
    /// The verified all-amicable clique, size 2^m.
    pub blue_clique: Vec<usize>,
    /// Clique number of the sigma Cayley graph, exact when the search
    /// finished, otherwise the analytic Hurwitz-Radon bound.
    pub red_omega: RedOmega,
    /// Whether blue clique size exceeds the red bound, i.e. whether the
    /// certificate proves the two Cayley graphs non-isomorphic.
    pub separates: bool,
    pub conclusion: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Builds the certificate: a verified blue clique of size 2^m against the
/// Hurwitz-Radon cap on red cliques.
///
/// For m <= 3 the cap equals 2^m and the certificate reports itself not
/// applicable. For m >= 4 it proves the twin Cayley graphs non-isomorphic.
pub fn nonisomorphism_certificate(m: usize, opts: &CliqueOptions) -> Result<Certificate, Error> {
    clifford::check_m(m)?;
    let order = 1usize << m;
    let rho_v = rho(order)?;

    let blue = blue_clique(m);
    let tau = tau_fn(m)?;
    for (i, &a) in blue.iter().enumerate() {
        for &b in &blue[..i] {
            assert_eq!(tau.value(a ^ b), 1, "blue clique must be pairwise amicable");
        }
    }

    let searchable = 2 * m <= 8; // up to 256 vertices
    let (red_omega, note) = if searchable {
        let g = cayley_graph(&sigma_fn(m)?)?;
        let report = max_clique(&g, "cayley_sigma", opts);
        if report.exact {
            assert!(
                report.size <= rho_v,
                "exact sigma clique number exceeded the Hurwitz-Radon bound"
            );
            (
                RedOmega {
                    value: report.size,
                    exact: true,
                },
                None,
            )
        } else {
            (
                RedOmega {
                    value: rho_v,
                    exact: false,
                },
                Some(format!(
                    "clique search stopped at {} nodes; using the analytic bound",
                    report.nodes
                )),
            )
        }
    } else {
        (
            RedOmega {
                value: rho_v,
                exact: false,
            },
            Some("graph too large for the exhaustive search; using the analytic bound".into()),
        )
    };

    let red_bound = if red_omega.exact { red_omega.value } else { rho_v };
    let separates = red_bound < order;
    let conclusion = if separates {
        format!(
            "non-isomorphic: the tau Cayley graph has a clique of size {order} \
             but every sigma clique has size at most {red_bound}"
        )
    } else {
        format!("not applicable: rho({order}) = {rho_v} = 2^{m}")
    };

    Ok(Certificate {
        m,
        order,
        rho: rho_v,
        blue_clique: blue,
        red_omega,
        separates,
        conclusion,
        note,
    })
}
