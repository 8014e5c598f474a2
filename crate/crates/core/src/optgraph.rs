//! The conversion graph G, its condensation Γ, and the optimal subgraph G̃
//! whose `0 → 0` paths are exactly the optimal representations.
//!
//! Paths are read with the most significant block first: a path realizing
//! blocks `u₁ ⋯ uₙ` starts at state 0 above `u₁`, follows edges backwards
//! (an edge `q → q'` consumes its block with `q'` on the more significant
//! side), and must end at state 0 below `uₙ`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{consistency, Result};
use crate::naf::{dump_edges, label, wnaf, Transducer, TransducerEdge};
use crate::repr::{Block, DigitString};
use crate::ring::{Digit, RingElem, System};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Full,
    Optimal,
}

#[derive(Debug, Clone)]
pub struct LabeledGraph {
    sys: System,
    kind: GraphKind,
    vertices: Vec<RingElem>,
    index: HashMap<RingElem, usize>,
    edges: Vec<TransducerEdge>,
}

impl LabeledGraph {
    fn new(sys: System, kind: GraphKind, vertices: Vec<RingElem>, edges: Vec<TransducerEdge>) -> Self {
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        LabeledGraph { sys, kind, vertices, index, edges }
    }

    pub fn system(&self) -> System {
        self.sys
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[RingElem] {
        &self.vertices
    }

    pub fn vertex_index(&self, q: &RingElem) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn edges(&self) -> &[TransducerEdge] {
        &self.edges
    }

    /// Edge list in the transducer dump format.
    pub fn dump(&self) -> String {
        dump_edges(self.sys, &self.vertices, &self.edges)
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// G: the transducer viewed as a weighted graph.
pub fn build_full_graph(sys: System) -> Result<LabeledGraph> {
    let t = Transducer::build(sys)?;
    Ok(LabeledGraph::new(sys, GraphKind::Full, t.states().to_vec(), t.edges().to_vec()))
}

/// Γ: states up to the symmetry group, with minimal weights between classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedGraph {
    sys: System,
    representatives: Vec<RingElem>,
    members: Vec<Vec<RingElem>>,
    /// `(from class, to class, weight)`, sorted.
    edges: Vec<(usize, usize, i32)>,
}

impl CondensedGraph {
    pub fn system(&self) -> System {
        self.sys
    }

    /// One representative per class, in order of increasing norm.
    pub fn representatives(&self) -> &[RingElem] {
        &self.representatives
    }

    pub fn members(&self, class: usize) -> &[RingElem] {
        &self.members[class]
    }

    pub fn edges(&self) -> &[(usize, usize, i32)] {
        &self.edges
    }

    pub fn class_of(&self, q: &RingElem) -> Option<usize> {
        self.members.iter().position(|m| m.contains(q))
    }

    pub fn class_label(&self, class: usize) -> String {
        format!("[{}]", self.representatives[class])
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<i32> {
        self.edges.iter().find(|e| e.0 == from && e.1 == to).map(|e| e.2)
    }

    /// Edges as `([from], [to], weight)` with text labels.
    pub fn rows(&self) -> Vec<(String, String, i32)> {
        self.edges
            .iter()
            .map(|&(u, v, w)| (self.class_label(u), self.class_label(v), w))
            .collect()
    }

    pub fn dump(&self) -> String {
        self.rows().iter().map(|(u, v, w)| format!("{u} -> {v} : {w}\n")).collect()
    }

    /// Shortest distances from class `src` (`forward`) or to it, allowing
    /// negative weights. Errors on a negative cycle.
    fn distances(&self, src: usize, forward: bool) -> Result<Vec<Option<i64>>> {
        let n = self.representatives.len();
        let mut dist = vec![None; n];
        dist[src] = Some(0i64);
        for round in 0..=n {
            let mut changed = false;
            for &(u, v, w) in &self.edges {
                let (a, b) = if forward { (u, v) } else { (v, u) };
                if let Some(da) = dist[a] {
                    let cand = da + w as i64;
                    if dist[b].map_or(true, |db| cand < db) {
                        dist[b] = Some(cand);
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(dist);
            }
            if round == n {
                break;
            }
        }
        Err(consistency("condensed graph has a negative cycle"))
    }

    /// Γ̃: classes and edges lying on some weight-0 closed walk through [0].
    ///
    /// Every closed walk through [0] has nonnegative weight (the output is
    /// the W-NAF, which is optimal), so an edge `(U, V, w)` lies on a weight-0
    /// walk iff `d([0], U) + w + d(V, [0]) = 0`.
    pub fn optimal_part(&self) -> Result<CondensedGraph> {
        let from0 = self.distances(0, true)?;
        let to0 = self.distances(0, false)?;
        let on_zero = |u: usize| matches!((from0[u], to0[u]), (Some(a), Some(b)) if a + b == 0);
        let keep: Vec<usize> = (0..self.representatives.len()).filter(|&u| on_zero(u)).collect();
        let renum: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v, w)| {
                on_zero(u) && on_zero(v) && from0[u].unwrap() + w as i64 + to0[v].unwrap() == 0
            })
            .map(|&(u, v, w)| (renum[&u], renum[&v], w))
            .collect();
        Ok(CondensedGraph {
            sys: self.sys,
            representatives: keep.iter().map(|&u| self.representatives[u].clone()).collect(),
            members: keep.iter().map(|&u| self.members[u].clone()).collect(),
            edges,
        })
    }
}

impl fmt::Display for CondensedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Orbit of `q` under the unit group, and conjugation for Gauss.
fn symmetry_orbit(q: &RingElem) -> BTreeSet<(num_bigint::BigInt, num_bigint::BigInt)> {
    let sys = q.ring();
    let mut out = BTreeSet::new();
    let seeds = match sys {
        System::Gauss => vec![q.clone(), q.conj()],
        System::Eisenstein => vec![q.clone()],
    };
    for s in seeds {
        for k in 0..sys.unit_order() as i64 {
            let p = s.unit_mul(k);
            out.insert((p.a().clone(), p.b().clone()));
        }
    }
    out
}

fn class_key(q: &RingElem) -> (num_bigint::BigInt, num_bigint::BigInt, num_bigint::BigInt) {
    use num_traits::Signed;
    (q.b().abs(), -q.a().clone(), -q.b().clone())
}

/// Γ from G.
pub fn condense(g: &LabeledGraph) -> Result<CondensedGraph> {
    if g.kind != GraphKind::Full {
        return Err(consistency("condense expects the full graph"));
    }
    let sys = g.sys;
    let mut class_of = vec![usize::MAX; g.vertices.len()];
    let mut members: Vec<Vec<RingElem>> = Vec::new();
    for (i, q) in g.vertices.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let orbit: Vec<RingElem> =
            symmetry_orbit(q).into_iter().map(|(a, b)| RingElem::new(sys, a, b)).collect();
        let id = members.len();
        for p in &orbit {
            let j = g.vertex_index(p).ok_or_else(|| consistency(format!("{p} is not a state")))?;
            class_of[j] = id;
        }
        members.push(orbit);
    }
    let representatives: Vec<RingElem> = members
        .iter()
        .map(|m| m.iter().min_by_key(|q| class_key(q)).unwrap().clone())
        .collect();

    // renumber classes by representative norm
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&c| representatives[c].sort_key());
    let mut renum = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        renum[old] = new;
    }

    let mut best: HashMap<(usize, usize), i32> = HashMap::new();
    let mut zero_loop = vec![false; order.len()];
    for e in &g.edges {
        let (u, v) = (renum[class_of[e.from]], renum[class_of[e.to]]);
        if u == v {
            zero_loop[u] |= e.weight == 0;
        } else {
            let w = best.entry((u, v)).or_insert(e.weight);
            *w = (*w).min(e.weight);
        }
    }
    let mut edges: Vec<(usize, usize, i32)> = best.into_iter().map(|((u, v), w)| (u, v, w)).collect();
    edges.extend((0..order.len()).filter(|&u| zero_loop[u]).map(|u| (u, u, 0)));
    edges.sort();

    Ok(CondensedGraph {
        sys,
        representatives: order.iter().map(|&c| representatives[c].clone()).collect(),
        members: order.iter().map(|&c| members[c].clone()).collect(),
        edges,
    })
}

/// The expected Γ̃ edge lists, `(from, to, weight)` by class representative.
fn expected_optimal_classes(sys: System) -> Vec<(RingElem, RingElem, i32)> {
    let g = |a: i64, b: i64| RingElem::new(sys, a, b);
    match sys {
        System::Gauss => vec![
            (g(0, 0), g(0, 0), 0),
            (g(0, 0), g(1, 0), 1),
            (g(0, 0), g(1, 1), 1),
            (g(1, 0), g(0, 0), -1),
            (g(1, 0), g(1, 0), 0),
            (g(1, 0), g(1, 1), 0),
            (g(1, 1), g(1, 0), 0),
        ],
        System::Eisenstein => vec![
            (g(0, 0), g(0, 0), 0),
            (g(0, 0), g(1, 0), 1),
            (g(1, 0), g(0, 0), -1),
            (g(1, 0), g(1, 0), 0),
        ],
    }
}

/// G̃ from G.
///
/// Γ̃ is derived from Γ (see [`CondensedGraph::optimal_part`]) and checked
/// against the expected edge list; G̃ keeps the edges between surviving
/// classes whose weight equals the Γ̃ weight. Vertices are ordered `0`, then
/// `u^k · rep` for each surviving nonzero class.
pub fn restrict_optimal(g: &LabeledGraph) -> Result<LabeledGraph> {
    let sys = g.sys;
    let gamma = condense(g)?;
    let opt = gamma.optimal_part()?;
    let mut derived: Vec<(RingElem, RingElem, i32)> = opt
        .edges
        .iter()
        .map(|&(u, v, w)| (opt.representatives[u].clone(), opt.representatives[v].clone(), w))
        .collect();
    let mut expected = expected_optimal_classes(sys);
    let key = |t: &(RingElem, RingElem, i32)| (t.0.sort_key(), t.1.sort_key(), t.2);
    derived.sort_by_key(key);
    expected.sort_by_key(key);
    if derived != expected {
        return Err(consistency(format!("derived optimal class graph differs from the expected one:\n{opt}")));
    }

    let mut vertices = vec![RingElem::zero(sys)];
    for rep in opt.representatives.iter().skip(1) {
        for k in 0..sys.unit_order() as i64 {
            vertices.push(rep.unit_mul(k));
        }
    }
    if vertices.len() != opt.members.iter().map(Vec::len).sum::<usize>() {
        return Err(consistency("optimal classes are not free unit orbits"));
    }
    let new_index: HashMap<&RingElem, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for e in &g.edges {
        let (q, q2) = (&g.vertices[e.from], &g.vertices[e.to]);
        let (Some(&from), Some(&to)) = (new_index.get(q), new_index.get(q2)) else {
            continue;
        };
        let (u, v) = (opt.class_of(q).unwrap(), opt.class_of(q2).unwrap());
        if opt.weight(u, v) == Some(e.weight) {
            edges.push(TransducerEdge { from, to, ..e.clone() });
        }
    }
    Ok(LabeledGraph::new(sys, GraphKind::Optimal, vertices, edges))
}

/// G̃, built once per system.
pub fn optimal_graph(sys: System) -> &'static LabeledGraph {
    static GAUSS: OnceLock<LabeledGraph> = OnceLock::new();
    static EISENSTEIN: OnceLock<LabeledGraph> = OnceLock::new();
    let cell = match sys {
        System::Gauss => &GAUSS,
        System::Eisenstein => &EISENSTEIN,
    };
    cell.get_or_init(|| {
        let full = build_full_graph(sys).expect("transducer construction is verified by tests");
        restrict_optimal(&full).expect("optimal graph construction is verified by tests")
    })
}

fn block_matches(e: &TransducerEdge, b: Block) -> bool {
    match b {
        Block::Zero => !e.is_window_edge(),
        Block::Digit(d) => e.is_window_edge() && e.output_digit() == d,
    }
}

/// Path counts over the blocks of a W-NAF.
///
/// `counts[j][v]` is the number of paths in G̃ that start at state 0 below
/// the last block and reach state `v` just below block `j` (0-based, most
/// significant first); `counts[n] = e`.
struct PathTable<'g> {
    graph: &'g LabeledGraph,
    blocks: Vec<Block>,
    counts: Vec<Vec<BigUint>>,
    /// `incoming[v]`: edges entering `v`.
    incoming: Vec<Vec<usize>>,
}

impl<'g> PathTable<'g> {
    fn new(graph: &'g LabeledGraph, x: &RingElem) -> Self {
        let naf = wnaf(x);
        let blocks = naf.block_decompose().expect("wnaf output is a W-NAF").blocks().to_vec();
        let dim = graph.vertices.len();
        let mut incoming = vec![Vec::new(); dim];
        for (i, e) in graph.edges.iter().enumerate() {
            incoming[e.to].push(i);
        }
        let n = blocks.len();
        let mut counts = vec![vec![BigUint::zero(); dim]; n + 1];
        counts[n][0] = BigUint::one();
        for j in (0..n).rev() {
            for v in 0..dim {
                let mut c = BigUint::zero();
                for &ei in &incoming[v] {
                    let e = &graph.edges[ei];
                    if block_matches(e, blocks[j]) {
                        c += &counts[j + 1][e.from];
                    }
                }
                counts[j][v] = c;
            }
        }
        PathTable { graph, blocks, counts, incoming }
    }

    fn total(&self) -> &BigUint {
        &self.counts[0][0]
    }

    /// Edges usable at block `j` when the state above is `v`, with the
    /// number of completions each leads to.
    fn choices(&self, j: usize, v: usize) -> impl Iterator<Item = (&TransducerEdge, &BigUint)> + '_ {
        let block = self.blocks[j];
        self.incoming[v]
            .iter()
            .map(move |&ei| &self.graph.edges[ei])
            .filter(move |e| block_matches(e, block))
            .map(move |e| (e, &self.counts[j + 1][e.from]))
            .filter(|(_, c)| !c.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Normalized strings, sorted by their text form.
    pub strings: Vec<DigitString>,
    pub truncated: bool,
    /// Number of optimal representations, whether or not all were listed.
    pub total: BigUint,
}

/// All optimal representations of `x`; `cap = 0` means no limit.
pub fn enumerate_optimal(x: &RingElem, cap: usize) -> Enumeration {
    let table = PathTable::new(optimal_graph(x.ring()), x);
    let mut strings = Vec::new();
    let mut prefix = Vec::new();
    let mut truncated = false;
    enumerate_from(&table, 0, 0, &mut prefix, cap, &mut strings, &mut truncated);
    strings.sort_by_cached_key(|s| s.to_string());
    Enumeration { strings, truncated, total: table.total().clone() }
}

fn enumerate_from(
    table: &PathTable<'_>,
    j: usize,
    v: usize,
    prefix: &mut Vec<Digit>,
    cap: usize,
    out: &mut Vec<DigitString>,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if j == table.blocks.len() {
        if cap > 0 && out.len() == cap {
            *truncated = true;
            return;
        }
        let s = DigitString::from_digits_unchecked(table.graph.sys, prefix.clone());
        out.push(s.normalize());
        return;
    }
    for (e, _) in table.choices(j, v) {
        let len = prefix.len();
        prefix.extend_from_slice(&e.input);
        enumerate_from(table, j + 1, e.from, prefix, cap, out, truncated);
        prefix.truncate(len);
    }
}

/// Uniform sampler over the optimal representations of one element.
///
/// Draws a uniform rank below the total path count with a ChaCha8 stream
/// seeded from `seed`, then unranks it block by block.
pub struct Sampler {
    table: PathTable<'static>,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(x: &RingElem, seed: u64) -> Self {
        Sampler {
            table: PathTable::new(optimal_graph(x.ring()), x),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn total(&self) -> &BigUint {
        self.table.total()
    }

    pub fn sample(&mut self) -> DigitString {
        let mut r = self.rng.gen_biguint_below(self.table.total());
        let mut digits = Vec::new();
        let mut v = 0;
        for j in 0..self.table.blocks.len() {
            let mut next = None;
            for (e, c) in self.table.choices(j, v) {
                if r < *c {
                    next = Some(e);
                    break;
                }
                r -= c;
            }
            let e = next.expect("rank below the total path count");
            digits.extend_from_slice(&e.input);
            v = e.from;
        }
        DigitString::from_digits_unchecked(self.table.graph.sys, digits).normalize()
    }
}

/// One optimal representation of `x`, uniformly at random.
pub fn sample_optimal(x: &RingElem, seed: u64) -> DigitString {
    Sampler::new(x, seed).sample()
}

/// Text form of an edge label, e.g. `0j1`.
pub fn edge_label(sys: System, digits: &[Digit]) -> String {
    label(sys, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn g(a: i64, b: i64) -> RingElem {
        RingElem::new(System::Gauss, a, b)
    }

    fn strings(e: &Enumeration) -> Vec<String> {
        e.strings.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn full_graph_sizes() {
        let gg = build_full_graph(System::Gauss).unwrap();
        assert_eq!(gg.vertices().len(), 21);
        assert!(gg.edges().iter().any(|e| e.from == 0 && e.to == 0 && e.input == [Digit::ZERO]));
        assert_eq!(build_full_graph(System::Eisenstein).unwrap().vertices().len(), 7);
    }

    #[test]
    fn condensed_examples() {
        let gamma = condense(&build_full_graph(System::Gauss).unwrap()).unwrap();
        let labels: Vec<String> = (0..5).map(|c| gamma.class_label(c)).collect();
        assert_eq!(labels, ["[0]", "[1]", "[1+i]", "[2]", "[2+i]"]);
        assert_eq!(gamma.weight(1, 0), Some(-1));
        assert_eq!(gamma.weight(2, 4), Some(2));
        let e = condense(&build_full_graph(System::Eisenstein).unwrap()).unwrap();
        assert_eq!(e.edges(), &[(0, 0, 0), (0, 1, 1), (1, 0, -1), (1, 1, 0)]);
    }

    #[test]
    fn optimal_vertex_order() {
        let text = |sys| optimal_graph(sys).vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>();
        assert_eq!(text(System::Gauss), ["0", "1", "i", "-1", "-i", "1+i", "-1+i", "-1-i", "1-i"]);
        assert_eq!(text(System::Eisenstein), ["0", "1", "1+w", "w", "-1", "-1-w", "-w"]);
    }

    #[test]
    fn optimal_graph_edges() {
        let gt = optimal_graph(System::Gauss);
        let one = gt.vertex_index(&g(1, 0)).unwrap();
        assert!(gt.edges().iter().any(|e| e.from == one
            && e.to == 0
            && edge_label(System::Gauss, &e.input) == "000"
            && edge_label(System::Gauss, &e.output) == "001"));
        for k in 0..4 {
            let q = gt.vertex_index(&g(1, 1).unit_mul(k)).unwrap();
            assert!(gt.edges().iter().all(|e| !(e.from == q && e.to == 0)));
        }
        // Every 0 -> 0 path is optimal, so no edge can lower the weight below
        // what its classes allow.
        assert!(gt.edges().iter().all(|e| (-1..=1).contains(&e.weight)));
    }

    /// Rows `(q, q', input, output, weight)`; each must occur in G̃ up to a
    /// common rotation of states and labels.
    const OPTIMAL_EDGE_ROWS: &[(&str, &str, &str, &str, i32)] = &[
        ("1", "1", "m00", "00m", 0),
        ("1", "1", "0j0", "00j", 0),
        ("1", "-i", "100", "00m", 0),
        ("1", "-i", "0m0", "00i", 0),
        ("1", "1-i", "i00", "00m", 0),
        ("1", "0", "000", "001", -1),
        ("-1+i", "i", "00m", "00j", 0),
        ("-1+i", "i", "00i", "001", 0),
        ("-1+i", "1", "0", "0", 0),
        ("0", "1", "0j1", "00j", 1),
        ("0", "1", "0ji", "00m", 1),
        ("0", "1", "m01", "00m", 1),
        ("0", "1", "i0i", "00j", 1),
        ("0", "-1+i", "j0m", "001", 1),
        ("0", "0", "0", "0", 0),
        ("0", "0", "001", "001", 0),
        ("0", "0", "00m", "00m", 0),
        ("0", "0", "00i", "00i", 0),
        ("0", "0", "00j", "00j", 0),
    ];

    #[test]
    fn optimal_edge_rows_present_up_to_rotation() {
        let sys = System::Gauss;
        let gt = optimal_graph(sys);
        let have: HashSet<(RingElem, RingElem, String, String, i32)> = gt
            .edges()
            .iter()
            .map(|e| {
                (
                    gt.vertices()[e.from].clone(),
                    gt.vertices()[e.to].clone(),
                    edge_label(sys, &e.input),
                    edge_label(sys, &e.output),
                    e.weight,
                )
            })
            .collect();
        let rot = |s: &str, k: i64| {
            DigitString::parse(s, sys).unwrap().unit_mul(k).to_string()
        };
        for &(q, q2, input, output, w) in OPTIMAL_EDGE_ROWS {
            let (q, q2) = (RingElem::parse(q, sys).unwrap(), RingElem::parse(q2, sys).unwrap());
            let found = (0..4).any(|k| {
                have.contains(&(q.unit_mul(k), q2.unit_mul(k), rot(input, k), rot(output, k), w))
            });
            assert!(found, "{q} -> {q2} : {input}|{output}");
        }
    }

    #[test]
    fn worked_examples() {
        let e = enumerate_optimal(&g(2, 1), 0);
        assert_eq!(strings(&e), ["100j", "i0i", "j1"]);
        assert!(!e.truncated);
        let e = enumerate_optimal(&g(0, 0), 0);
        assert_eq!(e.strings, [DigitString::empty(System::Gauss)]);
        let x = g(-2, 5);
        let e = enumerate_optimal(&x, 0);
        assert_eq!(e.strings.len(), 8);
        assert!(e.strings.iter().all(|s| s.eval() == x && s.hamming_weight() == 3));
        let e = enumerate_optimal(&x, 3);
        assert_eq!((e.strings.len(), e.truncated, e.total), (3, true, BigUint::from(8u32)));
    }

    #[test]
    fn sampler_examples() {
        let allowed = ["100j", "i0i", "j1"];
        for seed in 0..20 {
            assert!(allowed.contains(&sample_optimal(&g(2, 1), seed).to_string().as_str()));
        }
        assert_eq!(sample_optimal(&g(1, 0), 7).to_string(), "1");
        assert!(sample_optimal(&g(0, 0), 7).is_empty());
        assert_eq!(sample_optimal(&g(-2, 5), 42), sample_optimal(&g(-2, 5), 42));
    }

    #[test]
    fn eisenstein_enumeration_is_sound() {
        let sys = System::Eisenstein;
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let x = RingElem::new(sys, a, b);
                let w = wnaf(&x).hamming_weight();
                let e = enumerate_optimal(&x, 0);
                let set: HashSet<_> = e.strings.iter().collect();
                assert_eq!(set.len(), e.strings.len());
                assert!(e.strings.iter().all(|s| s.eval() == x && s.hamming_weight() == w));
            }
        }
    }
}
