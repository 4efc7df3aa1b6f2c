//! Brute-force reference computations for tests.
//!
//! Everything here works on a dense adjacency matrix and shares no code with
//! the production measures: distances come from Floyd–Warshall, betweenness
//! from explicit enumeration of every shortest path, HITS from repeated
//! multiplication by `AᵀA`, PageRank from a direct linear solve.

use crate::centrality::IterativeConfig;
use crate::graph::DisambGraph;

pub type Matrix = Vec<Vec<f64>>;

/// `adj[u][v]` is true iff `u → v`.
pub fn adjacency(g: &DisambGraph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            *cell = g.has_edge(u, v);
        }
    }
    adj
}

pub fn degree(adj: &[Vec<bool>]) -> Vec<f64> {
    let n = adj.len();
    (0..n)
        .map(|v| {
            if n <= 1 {
                return 0.0;
            }
            let incoming = (0..n).filter(|&u| adj[u][v]).count();
            incoming as f64 / (n - 1) as f64
        })
        .collect()
}

/// All-pairs hop distances, `None` when unreachable.
pub fn distances(adj: &[Vec<bool>]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if adj[u][v] && u != v {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Enumerates every shortest `s → t` path and credits each interior node.
pub fn betweenness(adj: &[Vec<bool>]) -> Vec<f64> {
    let n = adj.len();
    let dist = distances(adj);
    let mut scores = vec![0.0; n];

    fn walk(
        adj: &[Vec<bool>],
        dist: &[Vec<Option<usize>>],
        s: usize,
        t: usize,
        path: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let here = *path.last().unwrap();
        if here == t {
            found.push(path.clone());
            return;
        }
        let depth = path.len() - 1;
        for next in 0..adj.len() {
            if adj[here][next] && dist[s][next] == Some(depth + 1) && dist[next][t].is_some() {
                path.push(next);
                walk(adj, dist, s, t, path, found);
                path.pop();
            }
        }
    }

    for s in 0..n {
        for t in 0..n {
            if s == t || dist[s][t].is_none() {
                continue;
            }
            let mut found = Vec::new();
            walk(adj, &dist, s, t, &mut vec![s], &mut found);
            let found: Vec<_> = found
                .into_iter()
                .filter(|p| p.len() - 1 == dist[s][t].unwrap())
                .collect();
            let total = found.len() as f64;
            for (i, score) in scores.iter_mut().enumerate() {
                if i == s || i == t {
                    continue;
                }
                let through = found.iter().filter(|p| p.contains(&i)).count() as f64;
                *score += through / total;
            }
        }
    }
    scores
}

pub fn closeness(adj: &[Vec<bool>]) -> Vec<f64> {
    let n = adj.len();
    let dist = distances(adj);
    (0..n)
        .map(|i| {
            let incoming: Vec<usize> = (0..n).filter(|&j| j != i).filter_map(|j| dist[j][i]).collect();
            let r = incoming.len() as f64;
            if incoming.is_empty() {
                0.0
            } else {
                let sum: usize = incoming.iter().sum();
                (r / (n - 1) as f64) * (r / sum as f64)
            }
        })
        .collect()
}

fn mat_vec(m: &Matrix, v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn l1_normalized(mut v: Vec<f64>) -> Vec<f64> {
    let s: f64 = v.iter().sum();
    if s > 0.0 {
        v.iter_mut().for_each(|x| *x /= s);
    }
    v
}

/// Authority vector by power iteration on `AᵀA`, started from `Aᵀ·(1/n)`,
/// with the same stopping rule as the production code.
pub fn hits(adj: &[Vec<bool>], cfg: &IterativeConfig) -> Vec<f64> {
    let n = adj.len();
    let a = |u: usize, v: usize| if adj[u][v] { 1.0 } else { 0.0 };
    let at: Matrix = (0..n).map(|i| (0..n).map(|j| a(j, i)).collect()).collect();
    let ata: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a(k, i) * a(k, j)).sum())
                .collect()
        })
        .collect();

    let mut auth = l1_normalized(mat_vec(&at, &vec![1.0 / n as f64; n]));
    let mut delta: f64 = auth.iter().map(|x| x.abs()).sum();
    let mut k = 1;
    while delta >= cfg.tolerance && k < cfg.max_iterations {
        let next = l1_normalized(mat_vec(&ata, &auth));
        delta = next.iter().zip(&auth).map(|(x, y)| (x - y).abs()).sum();
        auth = next;
        k += 1;
    }
    auth
}

/// Stationary vector of the damped Google matrix, solved exactly with
/// Gaussian elimination (one balance equation replaced by `Σ s = 1`).
/// Requires `damping < 1`.
pub fn pagerank(adj: &[Vec<bool>], damping: f64) -> Vec<f64> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let nf = n as f64;
    let outdeg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    // google[i][j] = probability of stepping j → i
    let google: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let walk = if outdeg[j] == 0 {
                        1.0 / nf
                    } else if adj[j][i] {
                        1.0 / outdeg[j] as f64
                    } else {
                        0.0
                    };
                    damping * walk + (1.0 - damping) / nf
                })
                .collect()
        })
        .collect();

    let mut m: Matrix = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n)
                .map(|j| f64::from(u8::from(i == j)) - google[i][j])
                .collect();
            row.push(0.0);
            row
        })
        .collect();
    m[n - 1] = vec![1.0; n + 1];
    solve(m)
}

/// Solves an augmented `n × (n+1)` system.
fn solve(mut m: Matrix) -> Vec<f64> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        m.swap(col, pivot);
        let p = m[col][col];
        assert!(p.abs() > 1e-14, "singular system");
        let pivot_row = m[col].clone();
        for (row, r) in m.iter_mut().enumerate() {
            if row != col {
                let f = r[col] / p;
                for (x, y) in r[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * y;
                }
            }
        }
    }
    (0..n).map(|i| m[i][n] / m[i][i]).collect()
}
