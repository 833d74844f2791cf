//! Named graph families, seeded random connected graphs and exhaustive
//! enumeration of small labeled connected graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `CompleteBipartite(a, b)`: side `0..a`, side `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Star with the given number of leaves; the center is vertex 0.
    Star(usize),
    Petersen,
    /// Erdős–Rényi graph conditioned on connectivity, see [`erdos_renyi_connected`].
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) if n < 2 => Err(invalid(format!("path needs n >= 2, got {n}"))),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            FamilySpec::Complete(n) if n < 2 => {
                Err(invalid(format!("complete graph needs n >= 2, got {n}")))
            }
            FamilySpec::Star(0) => Err(invalid("star needs at least one leaf")),
            FamilySpec::CompleteBipartite(a, b) if a == 0 || b == 0 => Err(invalid(format!(
                "complete bipartite graph needs both sides >= 1, got {a},{b}"
            ))),
            FamilySpec::Gnp { n, .. } if n < 2 => {
                Err(invalid(format!("gnp needs n >= 2, got {n}")))
            }
            FamilySpec::Gnp { p, .. } if !(p > 0.0 && p <= 1.0) => {
                Err(invalid(format!("gnp needs 0 < p <= 1, got {p}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "kbipartite:{a},{b}"),
            FamilySpec::Star(l) => write!(f, "star:{l}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("`{s}` is not a valid {what}")))
}

fn parse_list(args: &str, count: usize, kind: &str) -> Result<Vec<String>> {
    let parts: Vec<String> = args.split(',').map(|s| s.trim().to_string()).collect();
    if parts.len() != count {
        return Err(invalid(format!(
            "{kind} takes {count} comma-separated parameters"
        )));
    }
    Ok(parts)
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `path:7`, `cycle:5`, `complete:4`, `star:6`, `kbipartite:2,3`,
    /// `petersen` and `gnp:12,0.4,42`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = match s.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a)),
            None => (s.trim(), None),
        };
        let need = |what: &str| args.ok_or_else(|| invalid(format!("{kind} needs {what}")));
        let spec = match kind {
            "petersen" => {
                if args.is_some() {
                    return Err(invalid("petersen takes no parameters"));
                }
                FamilySpec::Petersen
            }
            "path" => FamilySpec::Path(parse_num(need("n")?, "order")?),
            "cycle" => FamilySpec::Cycle(parse_num(need("n")?, "order")?),
            "complete" => FamilySpec::Complete(parse_num(need("n")?, "order")?),
            "star" => FamilySpec::Star(parse_num(need("a leaf count")?, "leaf count")?),
            "kbipartite" => {
                let p = parse_list(need("a,b")?, 2, kind)?;
                FamilySpec::CompleteBipartite(parse_num(&p[0], "side")?, parse_num(&p[1], "side")?)
            }
            "gnp" => {
                let p = parse_list(need("n,p,seed")?, 3, kind)?;
                FamilySpec::Gnp {
                    n: parse_num(&p[0], "order")?,
                    p: parse_num(&p[1], "probability")?,
                    seed: parse_num(&p[2], "seed")?,
                }
            }
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the graph described by `spec` with its canonical labeling.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path(n) => Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle(n) => Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete(n) => {
            Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite(a, b) => {
            Graph::from_edge_list(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        FamilySpec::Star(leaves) => Graph::from_edge_list(leaves + 1, (1..=leaves).map(|i| (0, i))),
        FamilySpec::Petersen => Graph::from_edge_list(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        ),
        FamilySpec::Gnp { n, p, seed } => erdos_renyi_connected(n, p, seed),
    }?;
    debug_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    Ok(g)
}

/// SplitMix64 stream. The output sequence for a given seed is fixed by the
/// algorithm and identical on every platform.
#[derive(Debug, Clone)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Samples G(n, p) until the result is connected.
///
/// Attempt `k` (from 0) uses a fresh [`SplitMix64`] seeded with `seed + k`
/// (wrapping). Pairs `(u, v)`, `u < v`, are visited in lexicographic order and
/// each is kept when the next uniform draw is below `p`.
pub fn erdos_renyi_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("gnp needs n >= 2, got {n}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("gnp needs 0 < p <= 1, got {p}")));
    }
    let mut attempt = seed;
    loop {
        let mut rng = SplitMix64::new(attempt);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_canonical(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
        attempt = attempt.wrapping_add(1);
    }
}

/// Lexicographic list of the `C(n, 2)` vertex pairs; bit `i` of an
/// enumeration mask selects pair `i`.
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Iterator over the labeled connected graphs on `n` vertices, in increasing
/// edge-mask order.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn mask_connected(&self, mask: u64) -> bool {
        let mut adj = [0u8; MAX_ENUMERATION_ORDER];
        for (bit, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let full = (1u8 << self.n) - 1;
        let mut seen = 1u8;
        loop {
            let grown = (0..self.n)
                .filter(|&v| seen >> v & 1 == 1)
                .fold(seen, |acc, v| acc | adj[v]);
            if grown == seen {
                return seen == full;
            }
            seen = grown;
        }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.mask_connected(mask) {
                let edges = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                return Some(Graph::from_canonical(self.n, edges));
            }
        }
        None
    }
}

/// All labeled connected graphs on `n` vertices, `2 <= n <= 6`.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    if n < 2 {
        return Err(invalid(format!("enumeration needs n >= 2, got {n}")));
    }
    let pairs = pair_table(n);
    let end = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, diameter};

    fn family(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn named_families() {
        let c5 = family("cycle:5");
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(diameter(&c5).unwrap(), 2);

        let k23 = family("kbipartite:2,3");
        assert_eq!((k23.n(), k23.m()), (5, 6));
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
        assert_eq!(diameter(&k23).unwrap(), 2);

        let star = family("star:6");
        assert_eq!(star.degree(0), 6);
        assert_eq!(family("path:7").edges()[0], (0, 1));
        assert_eq!(family("complete:4").m(), 6);
    }

    #[test]
    fn petersen_structure() {
        let p = family("petersen");
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(diameter(&p).unwrap(), 2);
        // Girth 5: no triangle, no 4-cycle, and the outer 5-cycle exists.
        let d = all_pairs_distances(&p).unwrap();
        for &(u, v) in p.edges() {
            let common = p.neighbors(u).iter().filter(|w| p.has_edge(**w, v)).count();
            assert_eq!(common, 0);
        }
        for u in 0..10 {
            for v in u + 1..10 {
                if d.get(u, v) == 2 {
                    let common = p.neighbors(u).iter().filter(|w| p.has_edge(**w, v)).count();
                    assert_eq!(common, 1);
                }
            }
        }
    }

    #[test]
    fn family_parse_errors() {
        for bad in [
            "path:1",
            "cycle:2",
            "complete:1",
            "star:0",
            "kbipartite:0,3",
            "kbipartite:2",
            "gnp:5,0,1",
            "gnp:5,1.5,1",
            "gnp:1,0.5,1",
            "petersen:3",
            "wheel:5",
            "path:x",
            "path",
        ] {
            assert!(
                matches!(bad.parse::<FamilySpec>(), Err(Error::InvalidParameter(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn family_display_roundtrip() {
        for s in [
            "path:7",
            "cycle:5",
            "complete:4",
            "star:6",
            "kbipartite:2,3",
            "petersen",
            "gnp:12,0.4,42",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn gnp_forced_and_reproducible() {
        assert_eq!(
            erdos_renyi_connected(2, 1.0, 7).unwrap(),
            family("complete:2")
        );
        assert_eq!(
            erdos_renyi_connected(5, 1.0, 123).unwrap(),
            family("complete:5")
        );
        let a = erdos_renyi_connected(12, 0.4, 42).unwrap();
        let b = erdos_renyi_connected(12, 0.4, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(family("gnp:12,0.4,42"), a);
        assert!(erdos_renyi_connected(5, 0.0, 1).is_err());
        assert!(erdos_renyi_connected(5, 1.1, 1).is_err());
    }

    /// Independent count: union-find over every subset.
    fn brute_connected_count(n: usize) -> usize {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len())
            .filter(|mask| {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(p: &mut Vec<usize>, x: usize) -> usize {
                    if p[x] != x {
                        let r = find(p, p[x]);
                        p[x] = r;
                    }
                    p[x]
                }
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        parent[a] = b;
                    }
                }
                let r = find(&mut parent, 0);
                (0..n).all(|v| find(&mut parent, v) == r)
            })
            .count()
    }

    #[test]
    fn enumeration_counts() {
        for (n, count) in [(2, 1), (3, 4), (4, 38), (5, 728)] {
            assert_eq!(brute_connected_count(n), count);
            let graphs: Vec<_> = enumerate_connected(n).unwrap().collect();
            assert_eq!(graphs.len(), count);
            assert!(graphs.iter().all(|g| g.is_connected() && g.n() == n));
        }
        assert_eq!(
            enumerate_connected(7).unwrap_err(),
            Error::TooLarge { n: 7, max: 6 }
        );
        assert!(enumerate_connected(1).is_err());
    }

    #[test]
    fn enumeration_order_is_mask_order() {
        let first: Vec<_> = enumerate_connected(3).unwrap().collect();
        // masks 3 = {01,02}, 5 = {01,12}, 6 = {02,12}, 7 = all
        assert_eq!(first[0].edges(), &[(0, 1), (0, 2)]);
        assert_eq!(first[1].edges(), &[(0, 1), (1, 2)]);
        assert_eq!(first[2].edges(), &[(0, 2), (1, 2)]);
        assert_eq!(first[3].m(), 3);
    }
}
