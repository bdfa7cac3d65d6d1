//! Circulant graphs `Λ_m(n)` on `Z_n` with generators `±round(n^{i/m})`.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

/// Largest order accepted for exact diameters.
pub const MAX_EXACT_ORDER: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("m = {0} must be at least 3")]
    SmallDegree(u32),
    #[error("generators {0} and {1} coincide up to sign modulo {2}")]
    Collision(u64, u64, u64),
    #[error("n = {0} exceeds the exact-diameter budget of {MAX_EXACT_ORDER}")]
    TooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaGraph {
    n: u64,
    m: u32,
    /// `round(n^{i/m})` for `i = 0..m`, increasing.
    generators: Vec<u64>,
}

/// Nearest integer to `n^{num/den}`, half rounded up.
fn nearest_root_power(n: u64, num: u32, den: u32) -> u64 {
    let x = (n as f64).powf(num as f64 / den as f64);
    let mut r = x.round() as u64;
    // guard the float against being off by one at half-integers
    let exceeds = |c: f64| c.powi(den as i32) > (n as f64).powi(num as i32);
    while r > 0 && exceeds(r as f64 - 0.5) {
        r -= 1;
    }
    while !exceeds(r as f64 + 0.5) {
        r += 1;
    }
    r
}

pub fn build_lambda(m: u32, n: u64) -> Result<LambdaGraph, LambdaError> {
    if m < 3 {
        return Err(LambdaError::SmallDegree(m));
    }
    let generators: Vec<u64> = (0..m).map(|i| nearest_root_power(n, i, m)).collect();
    for (i, &g) in generators.iter().enumerate() {
        if (2 * g) % n == 0 {
            return Err(LambdaError::Collision(g, g, n));
        }
        for &h in &generators[i + 1..] {
            if (g + n - h % n) % n == 0 || (g + h) % n == 0 {
                return Err(LambdaError::Collision(g, h, n));
            }
        }
    }
    Ok(LambdaGraph { n, m, generators })
}

/// Least-squares slope of `log y` against `log x`; `None` below two points.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

impl LambdaGraph {
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree_exponent(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The `2m` neighbors of `v`.
    pub fn neighbors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let n = self.n;
        self.generators.iter().flat_map(move |&g| [(v + g) % n, (v + n - g % n) % n])
    }

    pub fn bfs(&self, source: u64) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n as usize];
        let mut queue = VecDeque::with_capacity(self.n as usize);
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize] + 1;
            for w in self.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, x: u64, y: u64) -> u32 {
        let diff = (y + self.n - x % self.n) % self.n;
        self.bfs(0)[diff as usize]
    }

    /// Exact diameter: the eccentricity of 0, by vertex transitivity.
    pub fn diameter(&self) -> Result<u32, LambdaError> {
        if self.n > MAX_EXACT_ORDER {
            return Err(LambdaError::TooLarge(self.n));
        }
        Ok(self.bfs(0).into_iter().max().unwrap_or(0))
    }

    /// Walk from `x` to `y`: stage `i` uses only `±g_{m-i}`, leaving a residue
    /// at most half that generator.
    pub fn greedy_path(&self, x: u64, y: u64) -> Vec<u64> {
        let n = self.n as i64;
        let mut residual = (y as i64 - x as i64).rem_euclid(n);
        if 2 * residual > n {
            residual -= n;
        }
        let mut path = vec![x % self.n];
        let mut at = x as i64 % n;
        for &g in self.generators.iter().rev() {
            let g = g as i64;
            let steps = (residual as f64 / g as f64).round() as i64;
            let step = if steps < 0 { -g } else { g };
            for _ in 0..steps.abs() {
                at = (at + step).rem_euclid(n);
                path.push(at as u64);
            }
            residual -= steps * g;
        }
        debug_assert_eq!(residual, 0);
        path
    }

    /// Path-length ceiling `m (ceil(n^{1/m}) + 2)`.
    pub fn greedy_bound(&self) -> usize {
        let root = (self.n as f64).powf(1.0 / self.m as f64).ceil() as usize;
        self.m as usize * (root + 2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: u64,
    pub m: u32,
    pub diameter: u32,
    pub root: f64,
    pub ratio: f64,
}

/// Diameters over `orders`, in input order, with the log-log slope.
pub fn bound_sweep(m: u32, orders: &[u64]) -> Result<(Vec<SweepRow>, Option<f64>), LambdaError> {
    let rows = orders
        .par_iter()
        .map(|&n| {
            let g = build_lambda(m, n)?;
            let diameter = g.diameter()?;
            let root = (n as f64).powf(1.0 / m as f64);
            Ok(SweepRow { n, m, diameter, root, ratio: diameter as f64 / root })
        })
        .collect::<Result<Vec<_>, LambdaError>>()?;
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.diameter as f64)).collect();
    Ok((rows.clone(), loglog_slope(&pts)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_of_cubes_and_non_cubes() {
        assert_eq!(build_lambda(3, 1331).unwrap().generators(), &[1, 11, 121]);
        assert_eq!(build_lambda(3, 1000).unwrap().generators(), &[1, 10, 100]);
        assert_eq!(build_lambda(3, 29).unwrap().generators(), &[1, 3, 9]);
        assert_eq!(build_lambda(4, 4096).unwrap().generators(), &[1, 8, 64, 512]);
    }

    #[test]
    fn collisions_are_rejected() {
        assert!(matches!(build_lambda(3, 2), Err(LambdaError::Collision(..))));
        assert!(matches!(build_lambda(3, 8), Err(LambdaError::Collision(..))));
        assert_eq!(build_lambda(2, 100), Err(LambdaError::SmallDegree(2)));
    }

    #[test]
    fn small_diameters() {
        let d = build_lambda(3, 1331).unwrap().diameter().unwrap();
        assert!((6..=33).contains(&d));
        let d = build_lambda(3, 27).unwrap().diameter().unwrap();
        assert!((2..=9).contains(&d));
        let d = build_lambda(4, 4096).unwrap().diameter().unwrap();
        assert!(d <= 4 * 8 + 4);
    }

    #[test]
    fn greedy_examples() {
        let g = build_lambda(3, 1331).unwrap();
        assert_eq!(g.greedy_path(0, 0), vec![0]);
        assert!(g.greedy_path(0, 665).len() - 1 <= 33);
    }

    #[test]
    fn slope_needs_two_points() {
        assert_eq!(loglog_slope(&[(8.0, 2.0)]), None);
        let s = loglog_slope(&[(8.0, 2.0), (64.0, 4.0)]).unwrap();
        assert!((s - 1.0 / 3.0).abs() < 1e-12);
    }
}
