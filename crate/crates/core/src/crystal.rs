//! The level-2 Fock space crystal: nodes, reduced i-words, Kashiwara
//! operators, weights, graphs, components and isomorphism up to color shift.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{bipartition_counts, Bipartition, Partition};

pub const DEFAULT_MAX_VERTICES: u128 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ChargedBipartition {
    pub bipartition: Bipartition,
    pub charge: (i64, i64),
}

impl ChargedBipartition {
    pub fn new(bipartition: Bipartition, charge: (i64, i64)) -> Self {
        ChargedBipartition {
            bipartition,
            charge,
        }
    }

    pub fn rank(&self) -> usize {
        self.bipartition.rank()
    }
}

impl fmt::Display for ChargedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|{}, ({},{})>",
            self.bipartition, self.charge.0, self.charge.1
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// The box in row `row`, column `col` of component `component`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BoxNode {
    pub row: usize,
    pub col: usize,
    pub component: u8,
    pub kind: NodeKind,
}

impl fmt::Display for BoxNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            NodeKind::Addable => "A",
            NodeKind::Removable => "R",
        };
        write!(f, "{k}({},{},{})", self.row, self.col, self.component)
    }
}

pub fn node_content(n: &BoxNode, c: (i64, i64)) -> i64 {
    let cj = if n.component == 1 { c.0 } else { c.1 };
    n.col as i64 - n.row as i64 + cj
}

fn residue(content: i64, e: usize) -> usize {
    content.rem_euclid(e as i64) as usize
}

fn component_nodes(p: &Partition, component: u8, out: &mut Vec<BoxNode>) {
    let parts = p.parts();
    let len = parts.len();
    for r in 0..=len {
        let here = if r < len { parts[r] } else { 0 };
        if r == 0 || parts[r - 1] > here {
            out.push(BoxNode {
                row: r + 1,
                col: here + 1,
                component,
                kind: NodeKind::Addable,
            });
        }
        if r < len && (r + 1 == len || parts[r + 1] < here) {
            out.push(BoxNode {
                row: r + 1,
                col: here,
                component,
                kind: NodeKind::Removable,
            });
        }
    }
}

/// All addable and removable nodes, bucketed by residue and sorted by
/// content, component 2 before component 1 on equal content.
fn letters(v: &ChargedBipartition, e: usize) -> Vec<Vec<BoxNode>> {
    let mut nodes = Vec::new();
    component_nodes(&v.bipartition.first, 1, &mut nodes);
    component_nodes(&v.bipartition.second, 2, &mut nodes);
    let mut keyed: Vec<(i64, u8, BoxNode)> = nodes
        .into_iter()
        .map(|n| (node_content(&n, v.charge), n.component, n))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    debug_assert!(
        keyed
            .windows(2)
            .all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1)),
        "two i-nodes share content and component"
    );
    let mut buckets = vec![Vec::new(); e];
    for (content, _, n) in keyed {
        buckets[residue(content, e)].push(n);
    }
    buckets
}

/// A reduced i-word `A^alpha R^beta`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ReducedWord {
    pub alpha: usize,
    pub beta: usize,
    pub good_addable: Option<BoxNode>,
    pub good_removable: Option<BoxNode>,
}

fn reduce(word: &[BoxNode]) -> ReducedWord {
    let mut stack: Vec<BoxNode> = Vec::with_capacity(word.len());
    for &n in word {
        let cancels = n.kind == NodeKind::Addable
            && stack
                .last()
                .is_some_and(|top| top.kind == NodeKind::Removable);
        if cancels {
            stack.pop();
        } else {
            stack.push(n);
        }
    }
    let alpha = stack
        .iter()
        .take_while(|n| n.kind == NodeKind::Addable)
        .count();
    let beta = stack.len() - alpha;
    ReducedWord {
        alpha,
        beta,
        good_addable: alpha.checked_sub(1).map(|k| stack[k]),
        good_removable: stack.get(alpha).copied(),
    }
}

pub fn reduced_i_word(v: &ChargedBipartition, e: usize, i: usize) -> ReducedWord {
    assert!(i < e, "residue {i} out of range for e = {e}");
    reduce(&letters(v, e)[i])
}

/// Reduced words for every residue `0..e`.
pub fn reduced_words(v: &ChargedBipartition, e: usize) -> Vec<ReducedWord> {
    letters(v, e).iter().map(|w| reduce(w)).collect()
}

fn with_node(b: &Bipartition, n: &BoxNode) -> Bipartition {
    let source = b.component(n.component as usize);
    let mut parts = source.parts().to_vec();
    match n.kind {
        NodeKind::Addable => {
            if n.row > parts.len() {
                parts.push(1);
            } else {
                parts[n.row - 1] += 1;
            }
        }
        NodeKind::Removable => parts[n.row - 1] -= 1,
    }
    let p = Partition::new(parts).expect("adding or removing a corner keeps a partition");
    if n.component == 1 {
        Bipartition::new(p, b.second.clone())
    } else {
        Bipartition::new(b.first.clone(), p)
    }
}

pub fn f_tilde(v: &ChargedBipartition, e: usize, i: usize) -> Option<ChargedBipartition> {
    let node = reduced_i_word(v, e, i).good_addable?;
    Some(ChargedBipartition::new(
        with_node(&v.bipartition, &node),
        v.charge,
    ))
}

pub fn e_tilde(v: &ChargedBipartition, e: usize, i: usize) -> Option<ChargedBipartition> {
    let node = reduced_i_word(v, e, i).good_removable?;
    Some(ChargedBipartition::new(
        with_node(&v.bipartition, &node),
        v.charge,
    ))
}

/// `f_tilde` for every residue at once.
pub fn children(v: &ChargedBipartition, e: usize) -> Vec<Option<Bipartition>> {
    reduced_words(v, e)
        .into_iter()
        .map(|w| w.good_addable.map(|n| with_node(&v.bipartition, &n)))
        .collect()
}

pub fn is_highest_weight(v: &ChargedBipartition, e: usize) -> bool {
    reduced_words(v, e).iter().all(|w| w.beta == 0)
}

/// Coefficients of the fundamental weights; the null root is not tracked.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub coefficients: Vec<i64>,
}

impl Weight {
    /// The weight after adding a node of residue `i`.
    pub fn lowered(&self, i: usize) -> Weight {
        let e = self.coefficients.len();
        let mut c = self.coefficients.clone();
        c[i] -= 2;
        c[(i + 1) % e] += 1;
        c[(i + e - 1) % e] += 1;
        Weight { coefficients: c }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coefficients.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(","))
    }
}

pub fn weight(v: &ChargedBipartition, e: usize) -> Weight {
    Weight {
        coefficients: reduced_words(v, e)
            .iter()
            .map(|w| w.alpha as i64 - w.beta as i64)
            .collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub residue: usize,
}

#[derive(Clone, Debug)]
pub struct GraphOptions {
    pub max_vertices: u128,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            threads: None,
        }
    }
}

/// A finite piece of the crystal: vertices of rank at most `max_rank`, in
/// order of rank and then formatted bipartition.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    e: usize,
    charge: (i64, i64),
    max_rank: usize,
    vertices: Vec<Bipartition>,
    edges: Vec<Edge>,
    out: Vec<Vec<Option<usize>>>,
    in_degree: Vec<usize>,
    index: HashMap<Bipartition, usize>,
    root: Option<usize>,
}

fn run_with<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|err| Error::Parameter(format!("thread pool: {err}")))?;
            Ok(pool.install(job))
        }
    }
}

fn vertex_key(b: &Bipartition) -> (usize, String) {
    (b.rank(), b.to_string())
}

impl CrystalGraph {
    fn assemble(
        e: usize,
        charge: (i64, i64),
        max_rank: usize,
        mut vertices: Vec<Bipartition>,
        root: Option<Bipartition>,
        threads: Option<usize>,
    ) -> Result<Self> {
        vertices.par_sort_by_cached_key(vertex_key);
        let index: HashMap<Bipartition, usize> = vertices
            .iter()
            .enumerate()
            .map(|(k, b)| (b.clone(), k))
            .collect();
        let out: Vec<Vec<Option<usize>>> = run_with(threads, || {
            vertices
                .par_iter()
                .map(|b| {
                    if b.rank() >= max_rank {
                        return vec![None; e];
                    }
                    children(&ChargedBipartition::new(b.clone(), charge), e)
                        .into_iter()
                        .map(|child| child.map(|c| index[&c]))
                        .collect()
                })
                .collect()
        })?;
        let mut edges = Vec::new();
        let mut in_degree = vec![0; vertices.len()];
        for (from, targets) in out.iter().enumerate() {
            for (residue, to) in targets.iter().enumerate() {
                if let Some(to) = *to {
                    edges.push(Edge { from, to, residue });
                    in_degree[to] += 1;
                }
            }
        }
        let root = root.map(|r| index[&r]);
        Ok(CrystalGraph {
            e,
            charge,
            max_rank,
            vertices,
            edges,
            out,
            in_degree,
            index,
            root,
        })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn charge(&self) -> (i64, i64) {
        self.charge
    }

    pub fn max_rank(&self) -> usize {
        self.max_rank
    }

    pub fn vertices(&self) -> &[Bipartition] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, k: usize) -> &Bipartition {
        &self.vertices[k]
    }

    pub fn charged(&self, k: usize) -> ChargedBipartition {
        ChargedBipartition::new(self.vertices[k].clone(), self.charge)
    }

    pub fn index_of(&self, b: &Bipartition) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// Target of the edge of color `i` leaving vertex `k`.
    pub fn out_edge(&self, k: usize, i: usize) -> Option<usize> {
        self.out[k][i]
    }

    pub fn in_degree(&self, k: usize) -> usize {
        self.in_degree[k]
    }

    /// Vertex indices of rank `m`.
    pub fn layer(&self, m: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| self.vertices[k].rank() == m)
            .collect()
    }

    /// Vertices with outgoing edges only. Vertices of the top rank have
    /// no outgoing edges in a truncated graph, so they are never sources
    /// even when highest weight.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| self.in_degree[k] == 0 && self.out[k].iter().any(Option::is_some))
            .collect()
    }

    /// Vertices killed by every lowering-inverse operator.
    pub fn highest_weight_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| is_highest_weight(&self.charged(k), self.e))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!(
            "digraph crystal {{\n  label=\"e={} charge=({},{}) max_rank={}\";\n",
            self.e, self.charge.0, self.charge.1, self.max_rank
        );
        for b in &self.vertices {
            s.push_str(&format!("  \"{b}\";\n"));
        }
        for edge in &self.edges {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[edge.from], self.vertices[edge.to], edge.residue
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct VertexOut {
            rank: usize,
            bipartition: String,
        }
        #[derive(Serialize)]
        struct EdgeOut {
            from: String,
            to: String,
            residue: usize,
        }
        #[derive(Serialize)]
        struct GraphOut {
            e: usize,
            charge: [i64; 2],
            max_rank: usize,
            vertices: Vec<VertexOut>,
            edges: Vec<EdgeOut>,
        }
        let out = GraphOut {
            e: self.e,
            charge: [self.charge.0, self.charge.1],
            max_rank: self.max_rank,
            vertices: self
                .vertices
                .iter()
                .map(|b| VertexOut {
                    rank: b.rank(),
                    bipartition: b.to_string(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|edge| EdgeOut {
                    from: self.vertices[edge.from].to_string(),
                    to: self.vertices[edge.to].to_string(),
                    residue: edge.residue,
                })
                .collect(),
        };
        serde_json::to_value(out).expect("graph serializes")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "crystal graph e={} charge=({},{}) max_rank={}\nvertices: {}  edges: {}\n",
            self.e,
            self.charge.0,
            self.charge.1,
            self.max_rank,
            self.vertices.len(),
            self.edges.len()
        );
        let top = self.vertices.last().map_or(0, |b| b.rank());
        let first = self.vertices.first().map_or(0, |b| b.rank());
        for m in first..=top {
            let names: Vec<String> = self
                .layer(m)
                .into_iter()
                .map(|k| self.vertices[k].to_string())
                .collect();
            s.push_str(&format!(
                "rank {m} ({}): {}\n",
                names.len(),
                names.join(" ")
            ));
        }
        s.push_str("edges:\n");
        for edge in &self.edges {
            s.push_str(&format!(
                "  {} -{}-> {}\n",
                self.vertices[edge.from], edge.residue, self.vertices[edge.to]
            ));
        }
        let hw: Vec<String> = self
            .highest_weight_vertices()
            .into_iter()
            .map(|k| self.vertices[k].to_string())
            .collect();
        s.push_str(&format!("highest weight: {}\n", hw.join(" ")));
        s
    }
}

fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::Parameter(format!("e must be at least 2, got {e}")));
    }
    Ok(())
}

pub fn build_graph(charge: (i64, i64), e: usize, max_rank: usize) -> Result<CrystalGraph> {
    build_graph_with(charge, e, max_rank, &GraphOptions::default())
}

/// Every bipartition of rank at most `max_rank` with all `f_tilde` edges.
pub fn build_graph_with(
    charge: (i64, i64),
    e: usize,
    max_rank: usize,
    options: &GraphOptions,
) -> Result<CrystalGraph> {
    check_e(e)?;
    let needed: u128 = bipartition_counts(max_rank).iter().sum();
    if needed > options.max_vertices {
        return Err(Error::TooManyVertices {
            needed,
            limit: options.max_vertices,
        });
    }
    let vertices: Vec<Bipartition> = (0..=max_rank).flat_map(Bipartition::all).collect();
    CrystalGraph::assemble(e, charge, max_rank, vertices, None, options.threads)
}

/// The component of a highest weight vertex, up to absolute rank `max_rank`.
pub fn component(hw: &ChargedBipartition, e: usize, max_rank: usize) -> Result<CrystalGraph> {
    component_with(hw, e, max_rank, &GraphOptions::default())
}

pub fn component_to_depth(hw: &ChargedBipartition, e: usize, depth: usize) -> Result<CrystalGraph> {
    component(hw, e, hw.rank() + depth)
}

pub fn component_with(
    hw: &ChargedBipartition,
    e: usize,
    max_rank: usize,
    options: &GraphOptions,
) -> Result<CrystalGraph> {
    check_e(e)?;
    if !is_highest_weight(hw, e) {
        return Err(Error::Domain(format!(
            "{hw} is not a highest weight vertex for e = {e}"
        )));
    }
    let mut seen: HashMap<Bipartition, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(hw.bipartition.clone(), ());
    queue.push_back(hw.bipartition.clone());
    while let Some(b) = queue.pop_front() {
        if b.rank() >= max_rank {
            continue;
        }
        for child in children(&ChargedBipartition::new(b, hw.charge), e)
            .into_iter()
            .flatten()
        {
            if seen.insert(child.clone(), ()).is_none() {
                if seen.len() as u128 > options.max_vertices {
                    return Err(Error::TooManyVertices {
                        needed: seen.len() as u128,
                        limit: options.max_vertices,
                    });
                }
                queue.push_back(child);
            }
        }
    }
    let vertices = seen.into_keys().collect();
    CrystalGraph::assemble(
        e,
        hw.charge,
        max_rank,
        vertices,
        Some(hw.bipartition.clone()),
        options.threads,
    )
}

/// A shift `d` such that recoloring `i -> i + d` maps `g1` onto `g2` as
/// rooted colored graphs.
pub fn iso_up_to_shift(g1: &CrystalGraph, g2: &CrystalGraph) -> Option<usize> {
    let (r1, r2) = (g1.root?, g2.root?);
    if g1.e != g2.e || g1.len() != g2.len() || g1.edges.len() != g2.edges.len() {
        return None;
    }
    let e = g1.e;
    (0..e).find(|&d| {
        let mut map = vec![None; g1.len()];
        let mut used = vec![false; g2.len()];
        map[r1] = Some(r2);
        used[r2] = true;
        let mut queue = VecDeque::from([r1]);
        while let Some(u) = queue.pop_front() {
            let v = map[u].expect("queued vertices are mapped");
            for i in 0..e {
                match (g1.out_edge(u, i), g2.out_edge(v, (i + d) % e)) {
                    (None, None) => {}
                    (Some(a), Some(b)) => match map[a] {
                        Some(mapped) if mapped == b => {}
                        Some(_) => return false,
                        None => {
                            if used[b] {
                                return false;
                            }
                            map[a] = Some(b);
                            used[b] = true;
                            queue.push_back(a);
                        }
                    },
                    _ => return false,
                }
            }
        }
        map.iter().all(Option::is_some)
    })
}
