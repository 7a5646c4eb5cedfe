//! Graph identification (strong and distance regularity, Kneser and complete
//! graphs) and automorphism groups of small graphs by individualization and
//! refinement.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{arg, Error, Result};
use crate::orbital::Digraph;
use crate::perm::{PermGroup, Permutation};

/// Largest vertex count accepted by [`identify_graph`].
pub const MAX_IDENTIFY_VERTICES: usize = 20_000;
/// Largest vertex count accepted by [`graph_aut_order_small`].
pub const MAX_AUT_VERTICES: usize = 150;
/// Above this vertex count distance-regularity is checked from a sample of
/// base vertices only.
pub const DRG_ALL_BASES_LIMIT: usize = 2_000;
const DRG_SAMPLE: usize = 32;
const MAX_DRG_DIAMETER: usize = 4;

/// `{b₀,…,b_{d−1}; c₁,…,c_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", j(&self.b), j(&self.c))
    }
}

/// What [`identify_graph`] found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIdentification {
    pub vertices: usize,
    pub valency: usize,
    pub edges: usize,
    /// `(n, k, λ, μ)` when strongly regular.
    pub srg: Option<(usize, usize, usize, usize)>,
    /// Present when distance-regular of diameter at most four.
    pub intersection_array: Option<IntersectionArray>,
    /// Decided only for 126 vertices.
    pub kneser_9_4: Option<bool>,
    pub complete: bool,
}

impl GraphIdentification {
    /// Short human-readable name, e.g. `SRG(16,5,0,2)`.
    pub fn summary(&self) -> String {
        if self.complete {
            return format!("K{}", self.vertices);
        }
        if self.kneser_9_4 == Some(true) {
            return "K(9,4)".into();
        }
        if let Some((n, k, l, m)) = self.srg {
            return format!("SRG({n},{k},{l},{m})");
        }
        if let Some(a) = &self.intersection_array {
            return format!("DRG{a}");
        }
        format!("{}-regular on {} vertices", self.valency, self.vertices)
    }
}

fn require_simple(g: &Digraph) -> Result<Vec<Vec<usize>>> {
    if !g.is_symmetric() || g.has_loops() {
        return arg("expected an undirected loopless graph");
    }
    Ok(g.adjacency())
}

/// Valency, strong regularity, distance-regularity, Kneser K(9,4) and
/// completeness of a regular undirected graph.
pub fn identify_graph(g: &Digraph) -> Result<GraphIdentification> {
    let n = g.vertex_count();
    if n > MAX_IDENTIFY_VERTICES {
        return Err(Error::Unsupported(format!("{n} vertices exceed {MAX_IDENTIFY_VERTICES}")));
    }
    let adj = require_simple(g)?;
    let k = g.out_valency().ok_or_else(|| Error::Argument("graph is not regular".into()))?;
    let kneser_9_4 = (n == 126).then(|| isomorphic(g, &kneser_graph(9, 4))).transpose()?.map(|m| m.is_some());
    Ok(GraphIdentification {
        vertices: n,
        valency: k,
        edges: g.arc_count() / 2,
        srg: strongly_regular(&adj, k),
        intersection_array: distance_regular(&adj),
        kneser_9_4,
        complete: n == k + 1,
    })
}

/// Common-neighbour counts from every vertex by counting 2-paths.
fn strongly_regular(adj: &[Vec<usize>], k: usize) -> Option<(usize, usize, usize, usize)> {
    let n = adj.len();
    if n < 2 || k == 0 || k + 1 == n {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    let mut paths = vec![0usize; n];
    let mut touched = Vec::new();
    for v in 0..n {
        for &u in &adj[v] {
            for &w in &adj[u] {
                if w != v {
                    if paths[w] == 0 {
                        touched.push(w);
                    }
                    paths[w] += 1;
                }
            }
        }
        let mut reached_non_adjacent = 0;
        for &w in &touched {
            let is_adj = adj[v].binary_search(&w).is_ok();
            let slot = if is_adj { &mut lambda } else { &mut mu };
            if !is_adj {
                reached_non_adjacent += 1;
            }
            if *slot.get_or_insert(paths[w]) != paths[w] {
                return None;
            }
        }
        // Neighbours with no common neighbour and unreached non-neighbours.
        let adjacent_reached = touched.len() - reached_non_adjacent;
        if adjacent_reached < k && *lambda.get_or_insert(0) != 0 {
            return None;
        }
        if reached_non_adjacent < n - 1 - k {
            return None;
        }
        for &w in &touched {
            paths[w] = 0;
        }
        touched.clear();
    }
    Some((n, k, lambda.unwrap_or(0), mu?))
}

fn bfs_layers(adj: &[Vec<usize>], v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

fn array_from(adj: &[Vec<usize>], v: usize) -> Option<IntersectionArray> {
    let dist = bfs_layers(adj, v);
    if dist.contains(&usize::MAX) {
        return None;
    }
    let diameter = *dist.iter().max()?;
    if diameter > MAX_DRG_DIAMETER {
        return None;
    }
    let mut b = vec![None; diameter + 1];
    let mut c = vec![None; diameter + 1];
    for (x, &d) in dist.iter().enumerate() {
        let up = adj[x].iter().filter(|&&y| dist[y] + 1 == d).count();
        let down = adj[x].iter().filter(|&&y| dist[y] == d + 1).count();
        if *c[d].get_or_insert(up) != up || *b[d].get_or_insert(down) != down {
            return None;
        }
    }
    Some(IntersectionArray {
        b: b[..diameter].iter().map(|x| x.expect("layer is nonempty")).collect(),
        c: c[1..].iter().map(|x| x.expect("layer is nonempty")).collect(),
    })
}

/// The intersection array, required to agree from every examined base.
fn distance_regular(adj: &[Vec<usize>]) -> Option<IntersectionArray> {
    let n = adj.len();
    let bases: Vec<usize> = if n <= DRG_ALL_BASES_LIMIT {
        (0..n).collect()
    } else {
        (0..DRG_SAMPLE).map(|i| i * n / DRG_SAMPLE).collect()
    };
    let first = array_from(adj, *bases.first()?)?;
    bases[1..].iter().all(|&v| array_from(adj, v).as_ref() == Some(&first)).then_some(first)
}

/// Kneser graph K(n,k): k-subsets of `0..n`, adjacent when disjoint.
/// Vertices are the subsets in increasing order of their bit masks.
pub fn kneser_graph(n: usize, k: usize) -> Digraph {
    let sets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    let arcs = (0..sets.len())
        .flat_map(|a| (0..sets.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| sets[a] & sets[b] == 0);
    Digraph::new(sets.len(), arcs.collect::<Vec<_>>()).expect("indices in range")
}

/// Complete graph on n vertices.
pub fn complete_graph(n: usize) -> Digraph {
    Digraph::new(n, (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))).expect("in range")
}

/// Out- and in-neighbour lists of a digraph.
struct Adjacency {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Adjacency {
    fn of(g: &Digraph) -> Adjacency {
        let out = g.adjacency();
        Adjacency {
            inn: g.reverse().adjacency(),
            out,
        }
    }
}

type Signature = (usize, Vec<usize>, Vec<usize>);

fn signatures(adj: &Adjacency, colour: &[usize]) -> Vec<Signature> {
    (0..colour.len())
        .map(|v| {
            let mut o: Vec<usize> = adj.out[v].iter().map(|&w| colour[w]).collect();
            let mut i: Vec<usize> = adj.inn[v].iter().map(|&w| colour[w]).collect();
            o.sort_unstable();
            i.sort_unstable();
            (colour[v], o, i)
        })
        .collect()
}

fn colour_count(colour: &[usize]) -> usize {
    colour.iter().max().map_or(0, |m| m + 1)
}

/// Refines two colourings jointly to the coarsest common equitable
/// refinement. Colour ids depend only on signatures, so corresponding cells
/// receive equal ids. Returns false when the colourings become incompatible.
fn refine_jointly(a: &Adjacency, ca: &mut Vec<usize>, b: &Adjacency, cb: &mut Vec<usize>) -> bool {
    loop {
        let before = colour_count(ca);
        let sa = signatures(a, ca);
        let sb = signatures(b, cb);
        let mut sorted_a = sa.clone();
        let mut sorted_b = sb.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return false;
        }
        sorted_a.dedup();
        let id: BTreeMap<&Signature, usize> = sorted_a.iter().enumerate().map(|(i, s)| (s, i)).collect();
        *ca = sa.iter().map(|s| id[s]).collect();
        *cb = sb.iter().map(|s| id[s]).collect();
        if colour_count(ca) == before {
            return true;
        }
    }
}

/// Smallest colour whose cell is not a singleton, with that cell's members.
fn target_cell(colour: &[usize]) -> Option<(usize, Vec<usize>)> {
    let mut size = vec![0usize; colour_count(colour)];
    for &c in colour {
        size[c] += 1;
    }
    let c = size.iter().position(|&s| s > 1)?;
    Some((c, (0..colour.len()).filter(|&v| colour[v] == c).collect()))
}

fn individualize(colour: &mut [usize], v: usize) {
    colour[v] = colour_count(colour);
}

fn preserves_arcs(g: &Digraph, h: &Digraph, map: &[usize]) -> bool {
    g.arcs().iter().all(|&(u, v)| h.has_arc(map[u], map[v]))
}

/// Backtracking search for an isomorphism compatible with the colourings.
fn extend(a: &Adjacency, ga: &Digraph, ca: &[usize], b: &Adjacency, gb: &Digraph, cb: &[usize]) -> Option<Vec<usize>> {
    let mut ca = ca.to_vec();
    let mut cb = cb.to_vec();
    if !refine_jointly(a, &mut ca, b, &mut cb) {
        return None;
    }
    match target_cell(&ca) {
        None => {
            let mut position = vec![0; cb.len()];
            for (w, &c) in cb.iter().enumerate() {
                position[c] = w;
            }
            let map: Vec<usize> = ca.iter().map(|&c| position[c]).collect();
            preserves_arcs(ga, gb, &map).then_some(map)
        }
        Some((c, cell)) => {
            let v = cell[0];
            let mut ca2 = ca.clone();
            individualize(&mut ca2, v);
            (0..cb.len()).filter(|&w| cb[w] == c).find_map(|w| {
                let mut cb2 = cb.clone();
                individualize(&mut cb2, w);
                extend(a, ga, &ca2, b, gb, &cb2)
            })
        }
    }
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn isomorphic(g: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let n = g.vertex_count();
    let (a, b) = (Adjacency::of(g), Adjacency::of(h));
    Ok(extend(&a, g, &vec![0; n], &b, h, &vec![0; n]))
}

/// Automorphism group with its certificate.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub order: u128,
    pub generators: Vec<Permutation>,
    /// Orbit lengths along the base, whose product is the order.
    pub orbit_lengths: Vec<usize>,
}

fn orbit_under(gens: &[Permutation], point: usize, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Full automorphism group of a digraph on at most 150 vertices.
///
/// Individualizes a base `b₁, b₂, …` until refinement is discrete, then for
/// each level from the deepest upward extends the known stabilizer
/// generators by searching for automorphisms fixing `b₁…b_{i−1}` and moving
/// `b_i` to every candidate outside its current orbit. The result is
/// certified: the generators preserve the arcs and their closure has the
/// reported order.
pub fn graph_automorphisms(g: &Digraph) -> Result<AutomorphismGroup> {
    let n = g.vertex_count();
    if n > MAX_AUT_VERTICES {
        return Err(Error::Unsupported(format!("{n} vertices exceed {MAX_AUT_VERTICES}")));
    }
    let adj = Adjacency::of(g);
    // Base and the colouring before each individualization.
    let mut colour = vec![0; n];
    let mut levels: Vec<(usize, Vec<usize>)> = Vec::new();
    loop {
        let mut twin = colour.clone();
        refine_jointly(&adj, &mut colour, &adj, &mut twin);
        let Some((_, cell)) = target_cell(&colour) else { break };
        levels.push((cell[0], colour.clone()));
        individualize(&mut colour, cell[0]);
    }
    let mut generators: Vec<Permutation> = Vec::new();
    let mut orbit_lengths = vec![0; levels.len()];
    for (depth, (base_point, before)) in levels.iter().enumerate().rev() {
        let mut orbit = orbit_under(&generators, *base_point, n);
        let mut fixed = before.clone();
        individualize(&mut fixed, *base_point);
        let candidates: Vec<usize> = (0..n).filter(|&w| before[w] == before[*base_point]).collect();
        for w in candidates {
            if orbit[w] {
                continue;
            }
            let mut moved = before.clone();
            individualize(&mut moved, w);
            if let Some(map) = extend(&adj, g, &fixed, &adj, g, &moved) {
                generators.push(Permutation::from_images(map)?);
                orbit = orbit_under(&generators, *base_point, n);
            }
        }
        orbit_lengths[depth] = orbit.iter().filter(|&&x| x).count();
    }
    let order: u128 = orbit_lengths.iter().map(|&l| l as u128).product();
    if !generators.iter().all(|p| preserves_arcs(g, g, &p.images().iter().map(|&x| x as usize).collect::<Vec<_>>())) {
        return Err(Error::Internal("automorphism candidate does not preserve arcs".into()));
    }
    let closure = PermGroup::new(n, generators.clone())?.freeze().order()?;
    if closure != order {
        return Err(Error::Internal(format!("closure order {closure} differs from orbit product {order}")));
    }
    Ok(AutomorphismGroup {
        order,
        generators,
        orbit_lengths,
    })
}

/// |Aut(g)| for at most 150 vertices, certified as in [`graph_automorphisms`].
pub fn graph_aut_order_small(g: &Digraph) -> Result<u128> {
    Ok(graph_automorphisms(g)?.order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)])).unwrap()
    }

    fn petersen() -> Digraph {
        kneser_graph(5, 2)
    }

    #[test]
    fn small_automorphism_groups() {
        assert_eq!(graph_aut_order_small(&cycle(7)).unwrap(), 14);
        assert_eq!(graph_aut_order_small(&petersen()).unwrap(), 120);
        assert_eq!(graph_aut_order_small(&complete_graph(6)).unwrap(), 720);
        let directed = Digraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(graph_aut_order_small(&directed).unwrap(), 5);
    }

    #[test]
    fn petersen_identification() {
        let id = identify_graph(&petersen()).unwrap();
        assert_eq!(id.srg, Some((10, 3, 0, 1)));
        assert_eq!(id.intersection_array.unwrap().to_string(), "{3,2;1,1}");
        assert!(!id.complete);
    }

    #[test]
    fn complete_graph_is_recognized() {
        let id = identify_graph(&complete_graph(6)).unwrap();
        assert!(id.complete);
        assert_eq!(id.summary(), "K6");
    }

    #[test]
    fn non_regular_rejected() {
        let path = Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert!(matches!(identify_graph(&path), Err(Error::Argument(_))));
    }

    #[test]
    fn isomorphism_respects_structure() {
        let c6 = cycle(6);
        let relabeled = Digraph::new(6, c6.arcs().iter().map(|&(u, v)| ((u * 5) % 6, (v * 5) % 6))).unwrap();
        let map = isomorphic(&c6, &relabeled).unwrap().unwrap();
        assert!(c6.arcs().iter().all(|&(u, v)| relabeled.has_arc(map[u], map[v])));
        assert!(isomorphic(&c6, &complete_graph(6)).unwrap().is_none());
    }
}
