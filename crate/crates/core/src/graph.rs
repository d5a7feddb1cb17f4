//! Simple undirected graphs and the matrices built from them.
//!
//! Vertices are `0..n` in this API. Text formats (edge lists, parts files)
//! use 1-based ids; conversion happens at the parse/format boundary.

use std::collections::{HashSet, VecDeque};

use crate::{Error, Result, SymMatrix};

/// Default upper bound on the vertex count of [`generate_lattice`].
pub const LATTICE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Builds a simple graph from 0-based edge pairs. Self-loops, duplicate
    /// edges and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        let mut seen = HashSet::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.insert_edge(u, v, i + 1, &mut seen)?;
        }
        Ok(g)
    }

    /// Same as [`Graph::new`] but with 1-based endpoints.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            zero_based.push((u - 1, v - 1));
        }
        Self::new(n, zero_based)
    }

    // `line` is only used for error reporting; errors report 1-based ids.
    fn insert_edge(
        &mut self,
        u: usize,
        v: usize,
        line: usize,
        seen: &mut HashSet<(usize, usize)>,
    ) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w + 1, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u + 1 });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::DuplicateEdge { line, u: key.0 + 1, v: key.1 + 1 });
        }
        self.edges.push(key);
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1.0;
            a[v][u] = 1.0;
        }
        SymMatrix::from_rows(&a).expect("adjacency is symmetric by construction")
    }

    pub fn degree_matrix(&self) -> SymMatrix {
        let d: Vec<f64> = self.adj.iter().map(|a| a.len() as f64).collect();
        SymMatrix::from_diagonal(&d).expect("degrees are finite")
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> SymMatrix {
        self.degree_matrix().sub(&self.adjacency_matrix()).expect("same dimension")
    }

    /// Subgraph induced by `subset`, relabeled `0..|subset|` in subset order.
    /// The returned vector maps new ids back to ids of `self`.
    pub fn induced_subgraph(&self, subset: &VertexSubset) -> Result<(Graph, Vec<usize>)> {
        let members = subset.members();
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&bad) = members.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad + 1, n: self.n });
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            new_id[v] = i;
        }
        let mut sub = Graph::empty(members.len());
        for &(u, v) in &self.edges {
            let (a, b) = (new_id[u], new_id[v]);
            if a != usize::MAX && b != usize::MAX {
                sub.edges.push((a.min(b), a.max(b)));
                sub.adj[a].push(b);
                sub.adj[b].push(a);
            }
        }
        Ok((sub, members.to_vec()))
    }

    /// Breadth-first connected components; part ids follow each component's
    /// smallest vertex.
    pub fn connected_components(&self) -> Partition {
        let mut part_of = vec![usize::MAX; self.n];
        let mut k = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if part_of[start] != usize::MAX {
                continue;
            }
            part_of[start] = k;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if part_of[w] == usize::MAX {
                        part_of[w] = k;
                        queue.push_back(w);
                    }
                }
            }
            k += 1;
        }
        Partition { part_of, k }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().k() <= 1
    }
}

/// Parses an edge list: one `u v` pair of 1-based ids per line, `#` comments
/// and blank lines ignored, and an optional leading `n <count>` header that
/// fixes the vertex count (for isolated trailing vertices).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut pairs = Vec::new();
    let mut saw_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_matches(|c: char| c.is_ascii_whitespace());
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if !saw_content && tokens.first() == Some(&"n") {
            saw_content = true;
            if tokens.len() != 2 {
                return Err(parse_err(line_no, "header must be `n <count>`"));
            }
            declared_n = Some(parse_usize(tokens[1], line_no)?);
            continue;
        }
        saw_content = true;
        if tokens.len() != 2 {
            return Err(parse_err(
                line_no,
                &format!("expected two vertex ids, found {} tokens", tokens.len()),
            ));
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        pairs.push((line_no, u, v));
    }

    let max_id = pairs.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < max_id => return Err(Error::VertexOutOfRange { vertex: max_id, n }),
        Some(n) => n,
        None => max_id,
    };

    let mut g = Graph::empty(n);
    let mut seen = HashSet::new();
    for (line, u, v) in pairs {
        g.insert_edge(u - 1, v - 1, line, &mut seen)?;
    }
    Ok(g)
}

/// Writes an edge list with an `n <count>` header and 1-based ids.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n);
    for &(u, v) in &g.edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse { line, message: message.to_string() }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line, &format!("`{tok}` is not a decimal integer")));
    }
    tok.parse().map_err(|_| parse_err(line, &format!("`{tok}` is out of range")))
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    match parse_usize(tok, line)? {
        0 => Err(parse_err(line, "vertex ids start at 1")),
        id => Ok(id),
    }
}

/// Grid graph with the given side lengths. Vertices are lattice points in
/// row-major order (last coordinate fastest); edges join points that differ
/// by one in exactly one coordinate.
pub fn generate_lattice(dims: &[usize]) -> Result<Graph> {
    generate_lattice_capped(dims, LATTICE_CAP)
}

pub fn generate_lattice_capped(dims: &[usize], cap: usize) -> Result<Graph> {
    if dims.is_empty() {
        return Err(Error::InvalidLattice("no dimensions given".into()));
    }
    if let Some(pos) = dims.iter().position(|&d| d == 0) {
        return Err(Error::InvalidLattice(format!("dimension {} is zero", pos + 1)));
    }
    let size =
        dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).filter(|&s| s <= cap).ok_or(
            Error::LatticeTooLarge { size: dims.iter().fold(1usize, |a, &d| a.saturating_mul(d)), cap },
        )?;

    let mut strides = vec![1usize; dims.len()];
    for axis in (0..dims.len() - 1).rev() {
        strides[axis] = strides[axis + 1] * dims[axis + 1];
    }

    let mut g = Graph::empty(size);
    let mut coord = vec![0usize; dims.len()];
    for id in 0..size {
        for axis in 0..dims.len() {
            if coord[axis] + 1 < dims[axis] {
                let other = id + strides[axis];
                g.edges.push((id, other));
                g.adj[id].push(other);
                g.adj[other].push(id);
            }
        }
        // odometer increment, last axis fastest
        for axis in (0..dims.len()).rev() {
            coord[axis] += 1;
            if coord[axis] < dims[axis] {
                break;
            }
            coord[axis] = 0;
        }
    }
    Ok(g)
}

/// Number of edges whose endpoints lie in different parts.
pub fn cut_size(g: &Graph, p: &Partition) -> Result<usize> {
    if p.len() != g.n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.len(),
            g.n
        )));
    }
    Ok(g.edges.iter().filter(|&&(u, v)| p.part_of(u) != p.part_of(v)).count())
}

/// An ordered set of vertex ids of some parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    /// Sorts the members; duplicates are rejected.
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Self(members))
    }

    pub fn from_one_based(ids: &[usize]) -> Result<Self> {
        if ids.contains(&0) {
            return Err(Error::VertexOutOfRange { vertex: 0, n: 0 });
        }
        Self::new(ids.iter().map(|id| id - 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Assignment of every vertex (or point) to one of `k` parts `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    part_of: Vec<usize>,
    k: usize,
}

impl Partition {
    /// Part ids must be contiguous: every id in `0..max+1` used at least once.
    pub fn new(part_of: Vec<usize>) -> Result<Self> {
        let k = part_of.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &p in &part_of {
            used[p] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidPartition(format!("part {missing} is empty")));
        }
        Ok(Self { part_of, k })
    }

    /// Builds a partition of `0..n` from explicit part lists.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        for (p, members) in parts.iter().enumerate() {
            if members.is_empty() {
                return Err(Error::InvalidPartition(format!("part {p} is empty")));
            }
            for &v in members {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {} assigned twice", v + 1)));
                }
                part_of[v] = p;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {} unassigned", v + 1)));
        }
        Ok(Self { part_of, k: parts.len() })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.part_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part_of.is_empty()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn assignments(&self) -> &[usize] {
        &self.part_of
    }

    /// Members of each part, ascending.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &p) in self.part_of.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &p in &self.part_of {
            sizes[p] += 1;
        }
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GRAPH1: &[(usize, usize)] = &[
        (1, 8),
        (1, 9),
        (2, 3),
        (2, 7),
        (2, 9),
        (3, 7),
        (3, 9),
        (3, 10),
        (4, 5),
        (4, 6),
        (4, 10),
        (5, 6),
        (5, 10),
        (6, 10),
        (8, 9),
    ];

    fn graph1() -> Graph {
        Graph::from_one_based(10, GRAPH1).unwrap()
    }

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn parses_simple_list() {
        let g = parse_edge_list("1 2\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_header_comments_and_blank_lines() {
        let g = parse_edge_list("# graph\nn 5\n\n1 2   \n\t3 4\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 0);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_rejections() {
        assert_eq!(parse_edge_list("1 1"), Err(Error::SelfLoop { line: 1, vertex: 1 }));
        assert_eq!(parse_edge_list("1 2\n# c\n2 1\n"), Err(Error::DuplicateEdge { line: 3, u: 1, v: 2 }));
        assert!(matches!(parse_edge_list("1 2\n2 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("-1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_edge_list("n 2\n1 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 2 }));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = graph1();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph1_degrees() {
        assert_eq!(graph1().degrees(), vec![2, 3, 4, 3, 3, 3, 2, 2, 4, 4]);
    }

    #[test]
    fn small_matrices() {
        let e = Graph::empty(3);
        assert!(e.adjacency_matrix().to_rows().iter().flatten().all(|&x| x == 0.0));
        assert!(e.degree_matrix().to_rows().iter().flatten().all(|&x| x == 0.0));
        assert_eq!(Graph::empty(1).laplacian().to_rows(), vec![vec![0.0]]);

        let g = k3();
        assert_eq!(
            g.adjacency_matrix().to_rows(),
            vec![vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]
        );
        assert_eq!(g.degree_matrix().diagonal(), vec![2.0, 2.0, 2.0]);
        assert_eq!(
            g.laplacian().to_rows(),
            vec![vec![2.0, -1.0, -1.0], vec![-1.0, 2.0, -1.0], vec![-1.0, -1.0, 2.0]]
        );
    }

    #[test]
    fn induced_subgraph_of_graph1() {
        let s = VertexSubset::from_one_based(&[1, 2, 3, 7, 8, 9]).unwrap();
        let (sub, map) = graph1().induced_subgraph(&s).unwrap();
        assert_eq!(map, vec![0, 1, 2, 6, 7, 8]);
        let mut edges: Vec<_> = sub.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![(1, 5), (1, 6), (2, 3), (2, 4), (2, 6), (3, 4), (3, 6), (5, 6)]);
        assert_eq!(sub.degrees(), vec![2, 3, 3, 2, 2, 4]);
        assert!(sub.laplacian().row_sums().iter().all(|&s| s == 0.0));
    }

    #[test]
    fn induced_subgraph_edge_cases() {
        let g = graph1();
        let all = VertexSubset::new((0..10).collect()).unwrap();
        let (same, map) = g.induced_subgraph(&all).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, (0..10).collect::<Vec<_>>());

        let (sub, _) = k3().induced_subgraph(&VertexSubset::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(sub.edges(), &[(0, 1)]);

        let empty = VertexSubset::new(vec![]).unwrap();
        assert_eq!(g.induced_subgraph(&empty), Err(Error::EmptySubset));
        assert_eq!(VertexSubset::new(vec![1, 1]), Err(Error::DuplicateVertex(1)));
    }

    #[test]
    fn components() {
        assert_eq!(graph1().connected_components().k(), 1);
        assert_eq!(Graph::empty(4).connected_components().k(), 4);
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c = two.connected_components();
        assert_eq!(c.parts(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(cut_size(&two, &c).unwrap(), 0);
    }

    #[test]
    fn lattices() {
        let p2 = generate_lattice(&[2]).unwrap();
        assert_eq!((p2.n(), p2.edge_count()), (2, 1));
        let grid = generate_lattice(&[3, 3]).unwrap();
        assert_eq!((grid.n(), grid.edge_count()), (9, 12));
        assert!(grid.has_edge(0, 1) && grid.has_edge(0, 3) && !grid.has_edge(2, 3));
        let cube = generate_lattice(&[2, 2, 2]).unwrap();
        assert_eq!((cube.n(), cube.edge_count()), (8, 12));
        assert!(cube.degrees().iter().all(|&d| d == 3));
        let single = generate_lattice(&[1]).unwrap();
        assert_eq!((single.n(), single.edge_count()), (1, 0));
    }

    #[test]
    fn lattice_rejections() {
        assert!(matches!(generate_lattice(&[]), Err(Error::InvalidLattice(_))));
        assert!(matches!(generate_lattice(&[3, 0]), Err(Error::InvalidLattice(_))));
        assert!(matches!(
            generate_lattice(&[1001, 1000]),
            Err(Error::LatticeTooLarge { size: 1_001_000, cap: LATTICE_CAP })
        ));
        assert!(matches!(generate_lattice(&[usize::MAX, 2]), Err(Error::LatticeTooLarge { .. })));
        assert!(generate_lattice_capped(&[4, 4], 15).is_err());
    }

    #[test]
    fn cut_sizes_on_graph1() {
        let g = graph1();
        let split = Partition::from_parts(10, &[vec![0, 1, 2, 6, 7, 8], vec![3, 4, 5, 9]]).unwrap();
        assert_eq!(cut_size(&g, &split).unwrap(), 1);
        assert_eq!(cut_size(&g, &Partition::new(vec![0; 10]).unwrap()).unwrap(), 0);
        assert_eq!(cut_size(&g, &Partition::new((0..10).collect()).unwrap()).unwrap(), 15);
        assert!(cut_size(&g, &Partition::new(vec![0; 9]).unwrap()).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![0, 2]).is_err());
        assert!(Partition::from_parts(3, &[vec![0], vec![1]]).is_err());
        assert!(Partition::from_parts(2, &[vec![0, 1], vec![1]]).is_err());
        let p = Partition::new(vec![1, 0, 1]).unwrap();
        assert_eq!(p.sizes(), vec![1, 2]);
    }
}
