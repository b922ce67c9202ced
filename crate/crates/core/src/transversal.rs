//! Transversals of the diagonal cosets and the complementary-coloring
//! conjectures over them.
//!
//! The indices whose base-4 digits all lie in {0, 3} form the diagonal
//! subgroup D under XOR. Its cosets are exactly the non-adjacency classes of
//! the pair graph, so picking one vertex per coset induces a complete
//! edge-colored graph on 2^m vertices. The questions checked here: does every
//! such transversal have a partner whose coloring is the exact color swap,
//! and can that partner be the transversal itself?

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bent::{sigma_fn, tau_fn};
use crate::clifford::{self, basis_count, digits4};
use crate::cliques::{blue_clique, max_clique, rho, CliqueOptions};
use crate::error::Error;
use crate::graphs::{
    delta_graph, find_color_swap_automorphism, find_isomorphism, verify_mapping, EdgeColor,
    IsoCertificate, LabeledGraph,
};

/// Largest half-rank the transversal tooling works at; matches the pair
/// graph cap.
pub const MAX_TRANSVERSAL_M: usize = 4;

fn check_m(m: usize) -> Result<(), Error> {
    clifford::check_m(m)?;
    if m > MAX_TRANSVERSAL_M {
        return Err(Error::MOutOfRange {
            m,
            min: 1,
            max: MAX_TRANSVERSAL_M,
        });
    }
    Ok(())
}

/// Coset number of a basis index: bit t set when base-4 digit t is 1 or 2.
/// Indices in the same coset differ by an element of D.
pub fn class_index(m: usize, v: usize) -> Result<usize, Error> {
    let digits = digits4(m, v)?;
    let mut mask = 0usize;
    for (t, &d) in digits.iter().enumerate() {
        if d == 1 || d == 2 {
            mask |= 1 << t;
        }
    }
    Ok(mask)
}

/// The 2^m cosets of D, each sorted ascending, ordered by smallest member.
pub fn support_classes(m: usize) -> Result<Vec<Vec<usize>>, Error> {
    check_m(m)?;
    let mut classes = vec![Vec::new(); 1 << m];
    for v in 0..basis_count(m) {
        classes[class_index(m, v)?].push(v);
    }
    Ok(classes)
}

/// One vertex per coset of D, stored in coset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    m: usize,
    vertices: Vec<usize>,
}

impl Transversal {
    pub fn new(m: usize, vertices: Vec<usize>) -> Result<Self, Error> {
        check_m(m)?;
        let classes = 1usize << m;
        if vertices.len() != classes {
            return Err(Error::InvalidTransversal(format!(
                "expected {} vertices, got {}",
                classes,
                vertices.len()
            )));
        }
        let mut by_class = vec![None; classes];
        for &v in &vertices {
            let c = class_index(m, v)?;
            if by_class[c].is_some() {
                return Err(Error::InvalidTransversal(format!(
                    "coset {c} is represented twice"
                )));
            }
            by_class[c] = Some(v);
        }
        Ok(Transversal {
            m,
            vertices: by_class.into_iter().map(|v| v.unwrap()).collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Vertices in coset order: entry c represents coset c.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// Total number of transversals, `(2^m)^(2^m)`.
pub fn transversal_count(m: usize) -> Result<u128, Error> {
    check_m(m)?;
    Ok((1u128 << m).pow(1 << m))
}

/// Lexicographic enumeration treats the coset-0 choice as the most
/// significant digit of a base-2^m odometer. The coset members are taken in
/// ascending order, so index 0 picks every coset's smallest element.
pub fn transversal_by_index(m: usize, index: u64) -> Result<Transversal, Error> {
    check_m(m)?;
    let total = transversal_count(m)?;
    if u128::from(index) >= total {
        return Err(Error::TransversalIndex { index, total });
    }
    let classes = support_classes(m)?;
    let base = 1u64 << m;
    let count = classes.len();
    let mut vertices = Vec::with_capacity(count);
    for (c, class) in classes.iter().enumerate() {
        // Largest divisor is 16^15 = 2^60, still inside u64.
        let place = (count - 1 - c) as u32;
        let digit = (index / base.pow(place)) % base;
        vertices.push(class[digit as usize]);
    }
    Transversal::new(m, vertices)
}

/// Streaming enumeration in index order; yields (index, transversal).
pub struct TransversalStream {
    m: usize,
    classes: Vec<Vec<usize>>,
    digits: Vec<usize>,
    next: u64,
    end: u64,
}

impl Iterator for TransversalStream {
    type Item = (u64, Transversal);

    fn next(&mut self) -> Option<(u64, Transversal)> {
        if self.next >= self.end {
            return None;
        }
        let vertices: Vec<usize> = self
            .digits
            .iter()
            .enumerate()
            .map(|(c, &d)| self.classes[c][d])
            .collect();
        let t = Transversal {
            m: self.m,
            vertices,
        };
        let index = self.next;
        self.next += 1;
        // Odometer step: least significant digit is the last coset.
        let base = 1usize << self.m;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                break;
            }
            *d = 0;
        }
        Some((index, t))
    }
}

/// Iterates `count` transversals starting at lexicographic index `start`.
/// Enumeration is limited to m <= 3; at m = 4 the space has 2^64 members.
pub fn enumerate_transversals(m: usize, start: u64, count: u64) -> Result<TransversalStream, Error> {
    check_m(m)?;
    if m > 3 {
        return Err(Error::MOutOfRange { m, min: 1, max: 3 });
    }
    let total = transversal_count(m)? as u64;
    if start > total {
        return Err(Error::TransversalIndex {
            index: start,
            total: total as u128,
        });
    }
    let end = start.saturating_add(count).min(total);
    let first = transversal_by_index(m, start.min(total - 1))?;
    let classes = support_classes(m)?;
    let digits: Vec<usize> = first
        .vertices()
        .iter()
        .zip(&classes)
        .map(|(&v, class)| class.iter().position(|&x| x == v).unwrap())
        .collect();
    Ok(TransversalStream {
        m,
        classes,
        digits,
        next: start,
        end,
    })
}

struct ColorRule {
    sigma: Vec<u8>,
    tau: Vec<u8>,
}

impl ColorRule {
    fn new(m: usize) -> Result<ColorRule, Error> {
        Ok(ColorRule {
            sigma: sigma_fn(m)?.table().to_vec(),
            tau: tau_fn(m)?.table().to_vec(),
        })
    }

    fn color(&self, a: usize, b: usize) -> EdgeColor {
        let x = a ^ b;
        if self.sigma[x] == 1 {
            EdgeColor::Red
        } else {
            debug_assert_eq!(self.tau[x], 1, "distinct cosets always get a color");
            EdgeColor::Blue
        }
    }
}

fn profile_with(rule: &ColorRule, t: &Transversal) -> LabeledGraph {
    let n = t.vertices().len();
    let mut g = LabeledGraph::colored(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_colored_edge(i, j, rule.color(t.vertices()[i], t.vertices()[j]));
        }
    }
    g
}

/// The complete edge-colored graph a transversal induces: vertex c is the
/// coset-c representative, edges colored red/blue by which twin's support the
/// XOR of the endpoints lands in.
pub fn color_profile(t: &Transversal) -> Result<LabeledGraph, Error> {
    let rule = ColorRule::new(t.m())?;
    Ok(profile_with(&rule, t))
}

/// Outcome of looking for a complement of one transversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplementOutcome {
    /// `partner` is a transversal whose profile is the exact color swap;
    /// `mapping` sends swapped-profile vertices to partner-profile vertices
    /// and has been verified edge by edge.
    Found {
        partner: Vec<usize>,
        mapping: Vec<usize>,
    },
    /// Every transversal was scanned; none matches.
    NotFoundExhaustive { scanned: u64 },
    /// A clique obstruction rules a complement out without any scan.
    NotFoundObstruction { certificate: String },
    /// Budget ran out before the space did.
    Inconclusive { scanned: u64 },
}

const PROFILE_ISO_BUDGET: u64 = 1_000_000;

fn swap_partner(t: &Transversal, pi: &[usize]) -> Transversal {
    let mapped: Vec<usize> = t.vertices().iter().map(|&v| pi[v]).collect();
    Transversal::new(t.m(), mapped).expect("automorphisms permute cosets")
}

/// Mapping from the swapped profile of `t` to the profile of `partner`,
/// in profile vertex indices.
fn partner_mapping(t: &Transversal, partner: &Transversal, pi: &[usize]) -> Vec<usize> {
    t.vertices()
        .iter()
        .map(|&v| {
            let image = pi[v];
            partner
                .vertices()
                .iter()
                .position(|&w| w == image)
                .expect("image is a partner vertex")
        })
        .collect()
}

/// Searches for a complement of `t`: a transversal whose induced coloring is
/// isomorphic to the color swap of `t`'s.
///
/// Order of attack: a Hurwitz-Radon clique obstruction (definitive negative),
/// then a color-swap automorphism of the whole pair graph (definitive
/// positive), then exhaustive or budgeted scanning where the space allows.
/// `budget` caps the number of transversals scanned in the last stage.
pub fn complement_exists(t: &Transversal, budget: u64) -> Result<ComplementOutcome, Error> {
    let m = t.m();
    let rule = ColorRule::new(m)?;
    let profile = profile_with(&rule, t);
    let target = profile.swap_colors();

    // A complement must carry a red clique wherever t has a blue one, and
    // red cliques translate to Hurwitz-Radon families of bounded size.
    let blue_part = profile.subgraph_by_color(EdgeColor::Blue);
    let blue_max = max_clique(&blue_part, "profile_blue", &CliqueOptions::default());
    let cap = rho(1 << m)?;
    if blue_max.exact && blue_max.size > cap {
        return Ok(ComplementOutcome::NotFoundObstruction {
            certificate: format!(
                "a complement would need a red clique of size {}, but red cliques \
                 are Hurwitz-Radon families of size at most rho({}) = {} < {}",
                blue_max.size,
                1 << m,
                cap,
                blue_max.size
            ),
        });
    }

    // A color-swap automorphism of the pair graph maps any transversal to a
    // complement directly.
    let delta = delta_graph(m)?;
    if let IsoCertificate::Mapping { mapping: pi, .. } =
        find_color_swap_automorphism(&delta, PROFILE_ISO_BUDGET)
    {
        let partner = swap_partner(t, &pi);
        let mapping = partner_mapping(t, &partner, &pi);
        let partner_profile = profile_with(&rule, &partner);
        assert!(
            verify_mapping(&target, &partner_profile, &mapping, true),
            "swap automorphism must produce a verified complement"
        );
        return Ok(ComplementOutcome::Found {
            partner: partner.vertices().to_vec(),
            mapping,
        });
    }

    if m > 3 {
        // 2^64 transversals; nothing to scan honestly.
        return Ok(ComplementOutcome::Inconclusive { scanned: 0 });
    }

    let total = transversal_count(m)? as u64;
    let red_degrees = |g: &LabeledGraph| {
        let mut d: Vec<usize> = (0..g.vertex_count())
            .map(|v| g.color_degree(v, EdgeColor::Red))
            .collect();
        d.sort_unstable();
        d
    };
    let want = red_degrees(&target);
    let mut scanned = 0u64;
    for (_, cand) in enumerate_transversals(m, 0, total)? {
        if scanned >= budget {
            return Ok(ComplementOutcome::Inconclusive { scanned });
        }
        scanned += 1;
        let cand_profile = profile_with(&rule, &cand);
        if red_degrees(&cand_profile) != want {
            continue;
        }
        if let IsoCertificate::Mapping { mapping, .. } =
            find_isomorphism(&target, &cand_profile, true, PROFILE_ISO_BUDGET)
        {
            return Ok(ComplementOutcome::Found {
                partner: cand.vertices().to_vec(),
                mapping,
            });
        }
    }
    Ok(ComplementOutcome::NotFoundExhaustive { scanned })
}

/// How a conjecture run classifies transversals.
#[derive(Clone, Debug)]
pub struct ConjectureOptions {
    /// Stream the whole space (m = 3 only; smaller ranks always do).
    pub exhaustive: bool,
    /// Number of seeded random draws when sampling.
    pub sample_size: u64,
    pub seed: u64,
    /// Cap on transversals processed in one exhaustive run.
    pub budget: u64,
    /// Resume/progress file for long exhaustive runs.
    pub checkpoint: Option<PathBuf>,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions {
            exhaustive: false,
            sample_size: 2000,
            seed: 42,
            budget: u64::MAX,
            checkpoint: None,
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Counterexample {
    pub transversal: Vec<usize>,
    pub obstruction: String,
}

/// Tally of a conjecture verification run.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConjectureReport {
    pub m: usize,
    /// Size of the whole transversal space, decimal (2^64 at m = 4).
    pub total: String,
    /// "exhaustive", "sampled", or "counterexample".
    pub mode: String,
    pub examined: u64,
    pub self_complementary: u64,
    pub paired: u64,
    pub unpaired: u64,
    pub inconclusive: u64,
    /// Whether the run covered everything it set out to cover.
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Minimum over all vertex relabelings of the flattened color matrix; equal
/// keys mean isomorphic colorings.
fn canonical_key(g: &LabeledGraph, perms: &[Vec<usize>]) -> Vec<i8> {
    let n = g.vertex_count();
    let mut best: Option<Vec<i8>> = None;
    for p in perms {
        let mut key = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                key.push(g.color_of(p[i], p[j]).expect("complete").label());
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

fn read_checkpoint(path: &Path) -> Result<Option<[u64; 5]>, Error> {
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let fields: Vec<u64> = text
                .split_whitespace()
                .map(|f| {
                    f.parse::<u64>()
                        .map_err(|e| Error::BadCheckpoint(format!("{f:?}: {e}")))
                })
                .collect::<Result<_, _>>()?;
            if fields.len() != 5 {
                return Err(Error::BadCheckpoint(format!(
                    "expected 5 fields, found {}",
                    fields.len()
                )));
            }
            Ok(Some([fields[0], fields[1], fields[2], fields[3], fields[4]]))
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::BadCheckpoint(e.to_string())),
    }
}

fn write_checkpoint(path: &Path, state: [u64; 5]) -> Result<(), Error> {
    let line = format!(
        "{} {} {} {} {}\n",
        state[0], state[1], state[2], state[3], state[4]
    );
    std::fs::write(path, line).map_err(|e| Error::BadCheckpoint(e.to_string()))
}

/// Verifies the complementary-coloring conjectures at one half-rank.
///
/// m <= 2: full enumeration with canonical-form matching. m = 3: sampled by
/// default (seeded), exhaustive streaming behind the option, resumable via
/// the checkpoint file; either way the positive witness is the color-swap
/// automorphism of the pair graph. m = 4: produces the clique-obstruction
/// counterexample instead of a scan.
pub fn conjecture_report(m: usize, opts: &ConjectureOptions) -> Result<ConjectureReport, Error> {
    check_m(m)?;
    let total = transversal_count(m)?;
    let rule = ColorRule::new(m)?;

    if m == 4 {
        let t = Transversal::new(4, blue_clique(4))?;
        let outcome = complement_exists(&t, 0)?;
        let ComplementOutcome::NotFoundObstruction { certificate } = outcome else {
            panic!("the all-blue transversal at m = 4 must hit the clique obstruction");
        };
        return Ok(ConjectureReport {
            m,
            total: total.to_string(),
            mode: "counterexample".into(),
            examined: 1,
            self_complementary: 0,
            paired: 0,
            unpaired: 1,
            inconclusive: 0,
            complete: true,
            counterexample: Some(Counterexample {
                transversal: t.vertices().to_vec(),
                obstruction: certificate,
            }),
        });
    }

    if m <= 2 {
        let perms = permutations(1 << m);
        let total64 = total as u64;
        let mut keys = Vec::with_capacity(total64 as usize);
        let mut buckets: std::collections::BTreeMap<Vec<i8>, u64> = std::collections::BTreeMap::new();
        let mut swapped_keys = Vec::with_capacity(total64 as usize);
        for (_, t) in enumerate_transversals(m, 0, total64)? {
            let profile = profile_with(&rule, &t);
            let key = canonical_key(&profile, &perms);
            let swapped = canonical_key(&profile.swap_colors(), &perms);
            *buckets.entry(key.clone()).or_insert(0) += 1;
            keys.push(key);
            swapped_keys.push(swapped);
        }
        let mut report = ConjectureReport {
            m,
            total: total.to_string(),
            mode: "exhaustive".into(),
            examined: total64,
            self_complementary: 0,
            paired: 0,
            unpaired: 0,
            inconclusive: 0,
            complete: true,
            counterexample: None,
        };
        for (key, swapped) in keys.iter().zip(&swapped_keys) {
            if key == swapped {
                report.self_complementary += 1;
            } else if buckets.contains_key(swapped) {
                report.paired += 1;
            } else {
                report.unpaired += 1;
            }
        }
        return Ok(report);
    }

    // m == 3. The positive witness is the swap automorphism of the pair
    // graph; each examined transversal additionally gets a self-check.
    let delta = delta_graph(m)?;
    let pi = match find_color_swap_automorphism(&delta, crate::graphs::DEFAULT_ISO_BUDGET) {
        IsoCertificate::Mapping { mapping, .. } => Some(mapping),
        _ => None,
    };

    let classify = |t: &Transversal| -> u8 {
        // 0 self-complementary, 1 paired, 2 inconclusive
        let profile = profile_with(&rule, t);
        let target = profile.swap_colors();
        match find_isomorphism(&profile, &target, true, PROFILE_ISO_BUDGET) {
            IsoCertificate::Mapping { .. } => 0,
            _ => match &pi {
                Some(pi) => {
                    let partner = swap_partner(t, pi);
                    let mapping = partner_mapping(t, &partner, pi);
                    let ok = verify_mapping(&target, &profile_with(&rule, &partner), &mapping, true);
                    if ok {
                        1
                    } else {
                        2
                    }
                }
                None => 2,
            },
        }
    };

    if !opts.exhaustive {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let total64 = total as u64;
        let mut report = ConjectureReport {
            m,
            total: total.to_string(),
            mode: "sampled".into(),
            examined: opts.sample_size,
            self_complementary: 0,
            paired: 0,
            unpaired: 0,
            inconclusive: 0,
            complete: false,
            counterexample: None,
        };
        for _ in 0..opts.sample_size {
            let idx = rng.gen_range(0..total64);
            match classify(&transversal_by_index(m, idx)?) {
                0 => report.self_complementary += 1,
                1 => report.paired += 1,
                _ => report.inconclusive += 1,
            }
        }
        return Ok(report);
    }

    let total64 = total as u64;
    let mut state = [0u64; 5]; // next index, self, paired, unpaired, inconclusive
    if let Some(path) = &opts.checkpoint {
        if let Some(saved) = read_checkpoint(path)? {
            state = saved;
        }
    }
    let start = state[0].min(total64);
    let budget = opts.budget;
    let mut processed = 0u64;
    for (idx, t) in enumerate_transversals(m, start, total64 - start)? {
        if processed >= budget {
            break;
        }
        processed += 1;
        match classify(&t) {
            0 => state[1] += 1,
            1 => state[2] += 1,
            _ => state[4] += 1,
        }
        state[0] = idx + 1;
        if let Some(path) = &opts.checkpoint {
            if state[0] % (1 << 16) == 0 {
                write_checkpoint(path, state)?;
            }
        }
    }
    if let Some(path) = &opts.checkpoint {
        write_checkpoint(path, state)?;
    }
    Ok(ConjectureReport {
        m,
        total: total.to_string(),
        mode: "exhaustive".into(),
        examined: state[0],
        self_complementary: state[1],
        paired: state[2],
        unpaired: state[3],
        inconclusive: state[4],
        complete: state[0] == total64,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_structure() {
        let classes = support_classes(1).unwrap();
        assert_eq!(classes, vec![vec![0, 3], vec![1, 2]]);
        let classes = support_classes(2).unwrap();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes[0], vec![0, 3, 12, 15]);
        assert_eq!(classes[3], vec![5, 6, 9, 10]);
        // Same coset exactly when the pair graph has no edge there.
        let d = delta_graph(2).unwrap();
        for (c, class) in classes.iter().enumerate() {
            for &a in class {
                assert_eq!(class_index(2, a).unwrap(), c);
                for &b in class {
                    if a != b {
                        assert_eq!(d.color_of(a, b), None);
                    }
                }
            }
        }
    }

    #[test]
    fn transversal_validation() {
        assert!(Transversal::new(1, vec![0, 1]).is_ok());
        // Two vertices from one coset.
        assert!(matches!(
            Transversal::new(1, vec![1, 2]),
            Err(Error::InvalidTransversal(_))
        ));
        assert!(matches!(
            Transversal::new(1, vec![0]),
            Err(Error::InvalidTransversal(_))
        ));
        // Canonical storage is coset order regardless of input order.
        let t = Transversal::new(1, vec![2, 3]).unwrap();
        assert_eq!(t.vertices(), &[3, 2]);
    }

    #[test]
    fn counting_and_indexing() {
        assert_eq!(transversal_count(1).unwrap(), 4);
        assert_eq!(transversal_count(2).unwrap(), 256);
        assert_eq!(transversal_count(3).unwrap(), 16_777_216);
        assert_eq!(transversal_count(4).unwrap(), 1u128 << 64);

        assert_eq!(transversal_by_index(1, 0).unwrap().vertices(), &[0, 1]);
        assert_eq!(transversal_by_index(1, 1).unwrap().vertices(), &[0, 2]);
        assert_eq!(transversal_by_index(1, 2).unwrap().vertices(), &[3, 1]);
        assert_eq!(transversal_by_index(1, 3).unwrap().vertices(), &[3, 2]);
        assert!(transversal_by_index(1, 4).is_err());
    }

    #[test]
    fn streaming_matches_direct_indexing() {
        let all: Vec<(u64, Transversal)> = enumerate_transversals(2, 0, 1000).unwrap().collect();
        assert_eq!(all.len(), 256);
        for (idx, t) in &all {
            assert_eq!(&transversal_by_index(2, *idx).unwrap(), t);
        }
        // Resume mid-stream.
        let tail: Vec<(u64, Transversal)> = enumerate_transversals(2, 250, 10).unwrap().collect();
        assert_eq!(tail.len(), 6);
        assert_eq!(tail[0].0, 250);
        assert_eq!(tail[0].1, all[250].1);
    }

    #[test]
    fn profiles_are_complete_and_colored() {
        for idx in [0u64, 100, 255] {
            let t = transversal_by_index(2, idx).unwrap();
            let p = color_profile(&t).unwrap();
            assert_eq!(p.vertex_count(), 4);
            assert_eq!(p.edge_count(), 6);
        }
        let t = Transversal::new(1, vec![0, 1]).unwrap();
        let p = color_profile(&t).unwrap();
        assert_eq!(p.color_of(0, 1), Some(EdgeColor::Red));
    }

    #[test]
    fn complements_at_rank_one() {
        // {0, 1} is all red; {0, 2} is its all-blue complement.
        let t = Transversal::new(1, vec![0, 1]).unwrap();
        match complement_exists(&t, 100).unwrap() {
            ComplementOutcome::Found { partner, .. } => {
                let p = Transversal::new(1, partner).unwrap();
                let profile = color_profile(&p).unwrap();
                assert_eq!(profile.color_of(0, 1), Some(EdgeColor::Blue));
            }
            other => panic!("expected complement, got {other:?}"),
        }
    }

    #[test]
    fn all_blue_transversal_at_rank_four_is_obstructed() {
        let t = Transversal::new(4, blue_clique(4)).unwrap();
        match complement_exists(&t, 0).unwrap() {
            ComplementOutcome::NotFoundObstruction { certificate } => {
                assert!(certificate.contains("rho(16) = 9"), "{certificate}");
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn rank_one_conjectures_hold_exhaustively() {
        let r = conjecture_report(1, &ConjectureOptions::default()).unwrap();
        assert_eq!(r.total, "4");
        assert_eq!(r.examined, 4);
        assert_eq!(r.unpaired, 0);
        assert_eq!(r.inconclusive, 0);
        assert_eq!(r.self_complementary, 0);
        assert_eq!(r.paired, 4);
        assert!(r.complete);
    }

    #[test]
    fn rank_two_conjectures_hold_exhaustively() {
        let r = conjecture_report(2, &ConjectureOptions::default()).unwrap();
        assert_eq!(r.total, "256");
        assert_eq!(r.examined, 256);
        assert_eq!(r.unpaired, 0);
        assert_eq!(r.inconclusive, 0);
        assert_eq!(r.self_complementary + r.paired, 256);
        assert!(r.complete);
    }

    #[test]
    fn rank_four_report_carries_the_counterexample() {
        let r = conjecture_report(4, &ConjectureOptions::default()).unwrap();
        assert_eq!(r.mode, "counterexample");
        assert_eq!(r.total, "18446744073709551616");
        assert_eq!(r.unpaired, 1);
        let c = r.counterexample.unwrap();
        assert_eq!(c.transversal.len(), 16);
        assert!(c.obstruction.contains("rho(16) = 9"));
    }

    #[test]
    fn checkpointing_resumes() {
        let dir = std::env::temp_dir().join(format!("twinbent-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m3.ckpt");
        let _ = std::fs::remove_file(&path);
        let opts = |budget| ConjectureOptions {
            exhaustive: true,
            budget,
            checkpoint: Some(path.clone()),
            ..ConjectureOptions::default()
        };
        let first = conjecture_report(3, &opts(50)).unwrap();
        assert_eq!(first.examined, 50);
        assert!(!first.complete);
        let second = conjecture_report(3, &opts(25)).unwrap();
        assert_eq!(second.examined, 75);
        assert_eq!(
            second.self_complementary + second.paired + second.inconclusive,
            75
        );
        assert_eq!(second.unpaired, 0);
        let saved = read_checkpoint(&path).unwrap().unwrap();
        assert_eq!(saved[0], 75);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn sampled_rank_three_run_is_clean() {
        let opts = ConjectureOptions {
            sample_size: 40,
            ..ConjectureOptions::default()
        };
        let r = conjecture_report(3, &opts).unwrap();
        assert_eq!(r.mode, "sampled");
        assert_eq!(r.examined, 40);
        assert_eq!(r.unpaired, 0);
        assert_eq!(r.inconclusive, 0);
        assert_eq!(r.self_complementary + r.paired, 40);
    }
}
