//! Deterministic and random graph family constructors.
//!
//! Random generators take a [`RandomSource`]; the same seed and parameters
//! always produce the same graph, bit for bit.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, VertexId};
use crate::kind::GraphKind;

/// Seed used by in-tree tests. Command-line runs must pass a seed explicitly.
pub const DEFAULT_TEST_SEED: u64 = 0x5EED;

/// A seeded random stream with a stable, platform-independent sequence.
pub struct RandomSource {
    rng: ChaCha8Rng,
    seed: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

fn simple_with_vertices(n: u32) -> Graph {
    let mut g = Graph::new(GraphKind::Graph);
    for _ in 0..n {
        g.add_vertex();
    }
    g
}

/// Complete graph on `0..n-1` with `n(n-1)/2` edges.
pub fn complete(n: u32) -> Graph {
    let mut g = simple_with_vertices(n);
    for v in 0..n {
        for u in (v + 1)..n {
            g.add_edge(v, u).unwrap();
        }
    }
    g
}

/// Path `0 - 1 - ... - n-1`.
pub fn path(n: u32) -> Graph {
    let mut g = simple_with_vertices(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: u32) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0).unwrap();
    Ok(g)
}

/// Star with hub 0 and leaves `1..n-1`.
pub fn star(n: u32) -> Graph {
    let mut g = simple_with_vertices(n);
    for leaf in 1..n {
        g.add_edge(0, leaf).unwrap();
    }
    g
}

/// Wheel on `n >= 4` vertices: a cycle on `1..n-1` plus hub 0.
pub fn wheel(n: u32) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidParameter(format!(
            "wheel needs n >= 4, got {n}"
        )));
    }
    let mut g = simple_with_vertices(n);
    for v in 1..n {
        let next = if v == n - 1 { 1 } else { v + 1 };
        g.add_edge(v, next).unwrap();
    }
    for v in 1..n {
        g.add_edge(0, v).unwrap();
    }
    Ok(g)
}

/// Uniformly random labeled tree, decoded from a random Pruefer sequence.
pub fn random_tree(n: u32, rnd: &mut RandomSource) -> Graph {
    let mut g = simple_with_vertices(n);
    if n < 2 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1).unwrap();
        return g;
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| rnd.gen_range(0..n)).collect();
    let mut degree = alloc::vec![1u32; n as usize];
    for &x in &seq {
        degree[x as usize] += 1;
    }
    // classic two-pointer decode: always joins the smallest current leaf
    let mut ptr = 0u32;
    while degree[ptr as usize] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in &seq {
        g.add_edge(leaf, x).unwrap();
        degree[x as usize] -= 1;
        if degree[x as usize] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr as usize] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1).unwrap();
    g
}

/// 2k-regular circulant graph: each `v` connects to `(v + j + 1) mod n` for
/// `j` in `0..k`. Requires `n > 2k >= 2`; has `m = n * k` edges.
pub fn regular_2k(n: u32, k: u32) -> Result<Graph, GraphError> {
    if k < 1 || n <= 2 * k {
        return Err(GraphError::InvalidParameter(format!(
            "regular_2k needs n > 2k >= 2, got n={n}, k={k}"
        )));
    }
    let mut g = simple_with_vertices(n);
    for v in 0..n {
        for j in 0..k {
            g.add_edge(v, (v + j + 1) % n).unwrap();
        }
    }
    Ok(g)
}

fn pair_count(n: u32) -> u64 {
    u64::from(n) * u64::from(n.saturating_sub(1)) / 2
}

/// Uniformly random graph with exactly `m` distinct edges (the G(n, m)
/// model). Rejection-samples random pairs through `contains_edge`; past
/// 60% density it samples the complement instead.
pub fn gnm(n: u32, m: u64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    let total = pair_count(n);
    if m > total {
        return Err(GraphError::InvalidParameter(format!(
            "gnm: m={m} exceeds {total} possible edges"
        )));
    }
    if 10 * m > 6 * total {
        // sample the excluded set, then add everything else
        let excluded = sample_distinct_pairs(n, total - m, rnd);
        let mut g = simple_with_vertices(n);
        for v in 0..n {
            for u in (v + 1)..n {
                if !excluded.contains(v, u) {
                    g.add_edge(v, u).unwrap();
                }
            }
        }
        return Ok(g);
    }
    let mut g = simple_with_vertices(n);
    let mut added = 0u64;
    while added < m {
        let v = rnd.gen_range(0..n);
        let u = rnd.gen_range(0..n);
        if v == u || g.contains_edge(v, u) {
            continue;
        }
        g.add_edge(v, u).unwrap();
        added += 1;
    }
    Ok(g)
}

fn sample_distinct_pairs(
    n: u32,
    count: u64,
    rnd: &mut RandomSource,
) -> crate::collections::EdgeSet {
    let mut set = crate::collections::EdgeSet::new_undirected();
    while (set.len() as u64) < count {
        let v = rnd.gen_range(0..n);
        let u = rnd.gen_range(0..n);
        if v != u {
            set.add(v, u);
        }
    }
    set
}

/// Random graph where each of the `C(n,2)` pairs appears independently with
/// probability `p` (the G(n, p) model). Sparse probabilities use geometric
/// skipping over the linearized pair index; the distribution is identical to
/// the naive pair-by-pair scan.
pub fn gnp(n: u32, p: f64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    check_probability(p)?;
    if p < 0.1 {
        gnp_geometric(n, p, rnd)
    } else {
        gnp_bernoulli(n, p, rnd)
    }
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

fn gnp_bernoulli(n: u32, p: f64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    let mut g = simple_with_vertices(n);
    for v in 0..n {
        for u in (v + 1)..n {
            if rnd.gen::<f64>() < p {
                g.add_edge(v, u).unwrap();
            }
        }
    }
    Ok(g)
}

/// Decodes the lexicographic pair index `0 <= idx < C(n,2)` into `(v, u)`,
/// `v < u`.
fn decode_pair(n: u32, idx: u64) -> (u32, u32) {
    // remaining pairs after row v form a triangle; find v by inverting it
    let total = pair_count(n);
    let rem = total - idx; // pairs at or after idx
    // largest t with t(t+1)/2 >= rem, where t counts rows from the bottom
    let mut t = ((libm::sqrt(8.0 * rem as f64 + 1.0) - 1.0) / 2.0) as u64;
    while t * (t + 1) / 2 < rem {
        t += 1;
    }
    while t > 0 && (t - 1) * t / 2 >= rem {
        t -= 1;
    }
    let v = u64::from(n) - 1 - t;
    let row_start = total - t * (t + 1) / 2;
    let u = v + 1 + (idx - row_start);
    (v as u32, u as u32)
}

fn gnp_geometric(n: u32, p: f64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    let mut g = simple_with_vertices(n);
    if p <= 0.0 {
        return Ok(g);
    }
    let total = pair_count(n);
    let log_q = libm::log(1.0 - p);
    let mut cursor = 0u64; // next candidate pair index
    loop {
        // geometric number of failures before the next success
        let skip = {
            let u: f64 = rnd.gen();
            (libm::log(1.0 - u) / log_q) as u64
        };
        cursor = match cursor.checked_add(skip) {
            Some(c) => c,
            None => break,
        };
        if cursor >= total {
            break;
        }
        let (v, u) = decode_pair(n, cursor);
        g.add_edge(v, u).unwrap();
        cursor += 1;
    }
    Ok(g)
}

/// Random tournament: every pair gets exactly one arc, fair-coin direction.
pub fn random_tournament(n: u32, rnd: &mut RandomSource) -> Graph {
    let mut g = Graph::new(GraphKind::Digraph);
    for _ in 0..n {
        g.add_vertex();
    }
    for v in 0..n {
        for u in (v + 1)..n {
            if rnd.gen::<bool>() {
                g.add_edge(v, u).unwrap();
            } else {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random bipartite G(n, p): parts `0..n/2` and `n/2..n`, each cross pair
/// present with probability `p`. `n` must be even.
pub fn random_bipartite_gnp(n: u32, p: f64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    check_probability(p)?;
    if n % 2 != 0 {
        return Err(GraphError::InvalidParameter(format!(
            "bipartite gnp needs even n, got {n}"
        )));
    }
    let mut g = simple_with_vertices(n);
    let half = n / 2;
    for v in 0..half {
        for u in half..n {
            if rnd.gen::<f64>() < p {
                g.add_edge(v, u).unwrap();
            }
        }
    }
    Ok(g)
}

/// Random digraph where each ordered pair `(v, u)`, `v != u`, is an arc
/// independently with probability `p`.
pub fn random_digraph_gnp(n: u32, p: f64, rnd: &mut RandomSource) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut g = Graph::new(GraphKind::Digraph);
    for _ in 0..n {
        g.add_vertex();
    }
    for v in 0..n {
        for u in 0..n {
            if v != u && rnd.gen::<f64>() < p {
                g.add_edge(v, u).unwrap();
            }
        }
    }
    Ok(g)
}

/// Random edge weights in `[lo, hi)`, assigned in canonical edge order.
pub fn randomize_weights(g: &mut Graph, lo: f64, hi: f64, rnd: &mut RandomSource) {
    let pairs: Vec<(VertexId, VertexId)> = g.edges().map(|e| (e.source, e.target)).collect();
    for (v, u) in pairs {
        let w = lo + (hi - lo) * rnd.gen::<f64>();
        g.set_edge_weight(v, u, w).unwrap();
    }
}
