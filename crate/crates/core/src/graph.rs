//! Simple undirected graphs, hop distances and the edge-list text format.
//!
//! Vertices are dense integers `0..n`. Edges are stored once as `(u, v)` with
//! `u < v`, sorted lexicographically, so two graphs built from the same edge
//! set compare equal regardless of input order or duplicates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered vertex pairs.
    ///
    /// Pairs may be given in either orientation and may repeat; duplicates
    /// collapse to a single edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    /// `edges` must already be sorted, deduplicated, in range and loop-free
    /// with `u < v` in every pair.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    ///
    /// # Panics
    /// If `v >= n`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// # Panics
    /// If `v >= n`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `(min degree, max degree)`.
    pub fn degree_extremes(&self) -> (usize, usize) {
        self.adjacency
            .iter()
            .map(Vec::len)
            .fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)))
    }

    pub fn is_regular(&self) -> bool {
        let (lo, hi) = self.degree_extremes();
        lo == hi
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and lines starting with `#` are ignored.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (a, b) = parse_pair(trimmed, lineno)?;
            match header {
                None => header = Some((a, b)),
                Some((_, m)) => {
                    if pairs.len() == m {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("more than the declared {m} edge lines"),
                        });
                    }
                    pairs.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        if pairs.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", pairs.len()),
            });
        }
        Self::from_edge_list(n, pairs)
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        Self::read_edge_list(text.as_bytes())
    }

    /// Writes the edge-list text format with LF line endings.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.m() + 1));
        let _ = writeln!(out, "{} {}", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

/// Exact hop distances between every pair of vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut d = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                d[u * n + v] = f(u, v);
            }
        }
        Self { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// # Panics
    /// If either vertex is out of range.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Iterates `(u, v, d(u, v))` over unordered pairs `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.get(u, v))))
    }
}

const UNREACHED: u32 = u32::MAX;

/// Breadth-first distances from `source`; unreachable vertices hold `u32::MAX`.
fn bfs_row(g: &Graph, source: usize, row: &mut [u32], queue: &mut VecDeque<usize>) {
    row.fill(UNREACHED);
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &w in g.neighbors(u) {
            if row[w] == UNREACHED {
                row[w] = next;
                queue.push_back(w);
            }
        }
    }
}

/// All-pairs hop distances by one BFS per source.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = vec![0; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for (source, row) in d.chunks_mut(n).enumerate() {
        bfs_row(g, source, row, &mut queue);
        if row.contains(&UNREACHED) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(all_pairs_distances(g)?.max())
}
