//! Reference computations that share no code with the library.
#![allow(dead_code)]

use jacobi_gaps::cli::sweep::sample_matrices;
use jacobi_gaps::cli::SweepConfig;
use jacobi_gaps::PeriodicJacobi;

/// `D(λ)` as the trace of the one-period monodromy
/// `T_p ⋯ T_1`, `T_n = [[(λ − b_n)/a_n, −a_{n−1}/a_n], [1, 0]]`, `a_0 = a_p`.
pub fn monodromy_trace(a: &[f64], b: &[f64], lambda: f64) -> f64 {
    let p = a.len();
    let mut m = [[1.0, 0.0], [0.0, 1.0]];
    for n in 0..p {
        let prev = a[(n + p - 1) % p];
        let t = [[(lambda - b[n]) / a[n], -prev / a[n]], [1.0, 0.0]];
        m = [
            [
                t[0][0] * m[0][0] + t[0][1] * m[1][0],
                t[0][0] * m[0][1] + t[0][1] * m[1][1],
            ],
            [
                t[1][0] * m[0][0] + t[1][1] * m[1][0],
                t[1][0] * m[0][1] + t[1][1] * m[1][1],
            ],
        ];
    }
    m[0][0] + m[1][1]
}

pub fn oracle_d(j: &PeriodicJacobi, lambda: f64) -> f64 {
    monodromy_trace(j.a(), j.b(), lambda)
}

/// `max |f|` over `n` equally spaced points of `[lo, hi]`.
pub fn grid_sup(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    (0..n)
        .map(|k| f(lo + (hi - lo) * k as f64 / (n - 1) as f64).abs())
        .fold(0.0, f64::max)
}

/// `max − min`, computed the obvious way.
pub fn spread(xs: &[f64]) -> f64 {
    let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    hi - lo
}

/// `count` seeded matrices with `p ∈ p_min..=p_max`, `a ∈ [0.5, 2]`, `b ∈ [−1, 1]`.
pub fn suite(seed: u64, count: usize, p_min: usize, p_max: usize) -> Vec<PeriodicJacobi> {
    sample_matrices(&SweepConfig {
        seed,
        count,
        p_min,
        p_max,
        a_lo: 0.5,
        a_hi: 2.0,
        b_lo: -1.0,
        b_hi: 1.0,
        epsilon: None,
    })
    .unwrap()
}

/// One line per acceptance criterion.
pub fn report(id: u32, title: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id:>2}: {title} ({detail})");
}
