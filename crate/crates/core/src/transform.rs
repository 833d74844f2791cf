//! The Mycielskian of a graph, with degrees and distances predicted from the
//! base graph alone.
//!
//! For a base graph on `n` vertices the Mycielskian has `2n + 1` vertices laid
//! out as originals `0..n`, shadows `n..2n` (shadow `n + i` copies the
//! neighbourhood of original `i` into the originals) and the root `2n`, which
//! is adjacent to every shadow.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Role of a vertex of the Mycielskian, carrying the base index where one exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "role", content = "index", rename_all = "lowercase")]
pub enum Role {
    Original(usize),
    Shadow(usize),
    Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MycielskianLayout {
    base: Graph,
    mu: Graph,
}

/// Builds the Mycielskian of `g`.
pub fn mycielskian(g: &Graph) -> Result<MycielskianLayout> {
    let (n, m) = (g.n(), g.m());
    if n < 2 || m == 0 {
        return Err(Error::TooSmall { n, m });
    }
    let root = 2 * n;
    let mut edges = Vec::with_capacity(3 * m + n);
    for &(i, j) in g.edges() {
        edges.push((i, j));
        // v_i ~ x_j and v_j ~ x_i
        edges.push((i, n + j));
        edges.push((j, n + i));
    }
    edges.extend((0..n).map(|j| (n + j, root)));
    edges.sort_unstable();
    let mu = Graph::from_canonical(2 * n + 1, edges);
    Ok(MycielskianLayout {
        base: g.clone(),
        mu,
    })
}

impl MycielskianLayout {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn mu(&self) -> &Graph {
        &self.mu
    }

    pub fn into_mu(self) -> Graph {
        self.mu
    }

    pub fn base_n(&self) -> usize {
        self.base.n()
    }

    pub fn root(&self) -> usize {
        2 * self.base.n()
    }

    pub fn role(&self, v: usize) -> Result<Role> {
        let n = self.base.n();
        match v {
            _ if v < n => Ok(Role::Original(v)),
            _ if v < 2 * n => Ok(Role::Shadow(v - n)),
            _ if v == 2 * n => Ok(Role::Root),
            _ => Err(Error::VertexOutOfRange {
                vertex: v,
                n: 2 * n + 1,
            }),
        }
    }

    /// Degree of `v` in the Mycielskian from base degrees only.
    pub fn mu_degree(&self, v: usize) -> Result<usize> {
        Ok(match self.role(v)? {
            Role::Root => self.base.n(),
            Role::Shadow(i) => 1 + self.base.degree(i),
            Role::Original(i) => 2 * self.base.degree(i),
        })
    }

    fn check_matrix(&self, dg: &DistanceMatrix) -> Result<()> {
        if dg.n() != self.base.n() {
            return Err(Error::MatrixMismatch {
                expected: self.base.n(),
                found: dg.n(),
            });
        }
        Ok(())
    }

    /// Distance between `u` and `v` in the Mycielskian, read off the base
    /// distance matrix `dg` in constant time.
    pub fn mu_distance(&self, dg: &DistanceMatrix, u: usize, v: usize) -> Result<u32> {
        self.check_matrix(dg)?;
        let (ru, rv) = (self.role(u)?, self.role(v)?);
        Ok(distance_by_role(dg, ru, rv))
    }

    /// Full `(2n+1) x (2n+1)` distance matrix of the Mycielskian.
    pub fn mu_distance_matrix(&self, dg: &DistanceMatrix) -> Result<DistanceMatrix> {
        self.check_matrix(dg)?;
        let roles: Vec<Role> = (0..self.mu.n())
            .map(|v| self.role(v))
            .collect::<Result<_>>()?;
        Ok(DistanceMatrix::from_fn(self.mu.n(), |u, v| {
            distance_by_role(dg, roles[u], roles[v])
        }))
    }
}

fn distance_by_role(dg: &DistanceMatrix, a: Role, b: Role) -> u32 {
    use Role::*;
    match (a, b) {
        (Root, Root) => 0,
        (Root, Shadow(_)) | (Shadow(_), Root) => 1,
        (Root, Original(_)) | (Original(_), Root) => 2,
        (Shadow(i), Shadow(j)) => {
            if i == j {
                0
            } else {
                2
            }
        }
        (Original(i), Original(j)) => {
            let d = dg.get(i, j);
            if d <= 3 {
                d
            } else {
                4
            }
        }
        (Original(i), Shadow(j)) | (Shadow(j), Original(i)) => {
            if i == j {
                2
            } else {
                let d = dg.get(i, j);
                if d <= 2 {
                    d
                } else {
                    3
                }
            }
        }
    }
}
