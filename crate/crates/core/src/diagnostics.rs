//! Finite-depth heuristics for the asymptotic conditions `sum |a_k|^2 < inf`
//! and `prod (1 - |a_k|^2) > 0`.
//!
//! Both conditions are statements about infinite sequences, so every verdict
//! here is a heuristic read off the last quarter of the available terms.
//! The product route does not threshold `-log prod` directly: that growth
//! exceeds the sum growth by up to a factor `1 / (1 - max term)`, so any
//! fixed threshold leaves sequences that only one route can classify.
//! Instead it reads the per-step deficits `1 - P_k / P_{k-1}` off its own
//! partial products and applies the same window test as the sum route.

use num_complex::Complex64;
use serde::Serialize;

/// Window growth of the partial sums above which the series is called divergent.
pub const DIVERGENCE_GROWTH: f64 = 0.1;

/// Window growth of the partial sums below which the series is called convergent.
pub const CONVERGENCE_GROWTH: f64 = 0.02;

/// A half-tail below this is always read as convergent.
pub const TAIL_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Trend {
    Converges,
    Diverges,
    Inconclusive,
}

/// Partial sums and products of `|a_k|^2` and `1 - |a_k|^2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquareSumTrend {
    pub partial_sums: Vec<f64>,
    pub log_products: Vec<f64>,
    /// `sum_{k > d/2} |a_k|^2`.
    pub half_tail: f64,
    pub sum_growth: f64,
    pub log_product_growth: f64,
    pub sum_trend: Trend,
    pub product_trend: Trend,
}

impl SquareSumTrend {
    pub fn new(coeffs: &[Complex64]) -> Self {
        let mut partial_sums = Vec::with_capacity(coeffs.len());
        let mut log_products = Vec::with_capacity(coeffs.len());
        let (mut s, mut l) = (0.0f64, 0.0f64);
        for a in coeffs {
            let x = a.norm_sqr();
            s += x;
            l += (-x).ln_1p();
            partial_sums.push(s);
            log_products.push(l);
        }
        let d = coeffs.len();
        let half_tail: f64 = coeffs.iter().skip(d / 2 + 1).map(|a| a.norm_sqr()).sum();
        let sum_growth = window_growth(&partial_sums);
        let log_product_growth = -window_growth(&log_products);

        let deficits: Vec<f64> = log_products
            .iter()
            .scan(0.0, |prev, &l| {
                let step = -(l - *prev).exp_m1();
                *prev = l;
                Some(step)
            })
            .collect();
        let product_tail: f64 = deficits.iter().skip(d / 2 + 1).sum();
        let product_growth: f64 = deficits.iter().skip(d - (d / 4).max(1).min(d)).sum();
        let sum_trend = classify(d, half_tail, sum_growth);
        let product_trend = classify(d, product_tail, product_growth);
        Self {
            partial_sums,
            log_products,
            half_tail,
            sum_growth,
            log_product_growth,
            sum_trend,
            product_trend,
        }
    }

    pub fn depth(&self) -> usize {
        self.partial_sums.len()
    }

    pub fn sum(&self) -> f64 {
        self.partial_sums.last().copied().unwrap_or(0.0)
    }

    pub fn product(&self) -> f64 {
        self.log_products.last().copied().unwrap_or(0.0).exp()
    }

    pub fn partial_products(&self) -> Vec<f64> {
        self.log_products.iter().map(|l| l.exp()).collect()
    }

    /// Combined verdict: agreement wins, a lone conclusive route wins, a
    /// disagreement is inconclusive.
    pub fn combined(&self) -> Trend {
        match (self.sum_trend, self.product_trend) {
            (a, b) if a == b => a,
            (Trend::Inconclusive, b) => b,
            (a, Trend::Inconclusive) => a,
            _ => Trend::Inconclusive,
        }
    }

    /// Second-order Richardson extrapolation of the partial products in
    /// `1/depth`, using depths `d/4`, `d/2`, `d`. `None` below depth 8.
    pub fn product_limit_estimate(&self) -> Option<f64> {
        let d = self.depth();
        if d < 8 {
            return None;
        }
        let at = |depth: usize| self.log_products[depth - 1].exp();
        let (p1, p2, p3) = (at(d / 4), at(d / 2), at(d));
        let (h1, h2, h3) = (1.0 / (d / 4) as f64, 1.0 / (d / 2) as f64, 1.0 / d as f64);
        // Neville tableau for the value at h = 0 of the quadratic through the three points
        let r12 = (p2 * h1 - p1 * h2) / (h1 - h2);
        let r23 = (p3 * h2 - p2 * h3) / (h2 - h3);
        Some((r23 * h1 - r12 * h3) / (h1 - h3))
    }
}

fn classify(depth: usize, tail: f64, growth: f64) -> Trend {
    if depth == 0 || tail < TAIL_FLOOR {
        Trend::Converges
    } else if growth > DIVERGENCE_GROWTH {
        Trend::Diverges
    } else if growth < CONVERGENCE_GROWTH {
        Trend::Converges
    } else {
        Trend::Inconclusive
    }
}

/// Increase of a running total across its last quarter (at least one term).
fn window_growth(partials: &[f64]) -> f64 {
    let d = partials.len();
    if d == 0 {
        return 0.0;
    }
    let q = (d / 4).max(1);
    let end = partials[d - 1];
    let start = if d > q { partials[d - 1 - q] } else { 0.0 };
    end - start
}
