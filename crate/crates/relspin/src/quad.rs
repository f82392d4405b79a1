//! One-dimensional quadrature rules: Gauss-Legendre composites with affine
//! and logarithmic mappings, and generalized Gauss-Laguerre rules.
//!
//! Node generation is delegated to the `gauss-quad` crate; the panel
//! composition and variable mappings live here.

use gauss_quad::{GaussLaguerre, GaussLegendre};

use crate::{Error, Result};

/// Minimum order accepted for any configurable rule.
pub const MIN_ORDER: usize = 2;

/// Nodes and matching weights of a one-dimensional rule, in a fixed
/// deterministic order.
#[derive(Debug, Clone)]
pub struct Rule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule1D {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Weighted sum in stored node order.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.iter().map(|(x, w)| w * f(x)).sum()
    }
}

fn check_order(order: usize) -> Result<()> {
    if order < MIN_ORDER {
        return Err(Error::OrderTooSmall {
            order,
            min: MIN_ORDER,
        });
    }
    Ok(())
}

/// Gauss-Legendre rule on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(order: usize) -> Result<Rule1D> {
    check_order(order)?;
    let rule = GaussLegendre::new(order).map_err(|_| Error::OrderTooSmall {
        order,
        min: MIN_ORDER,
    })?;
    let mut pairs: Vec<(f64, f64)> = rule.iter().map(|(n, w)| (*n, *w)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(Rule1D {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Generalized Gauss-Laguerre rule for the weight `x^alpha e^{-x}` on
/// `[0, inf)`, `alpha > -1`; nodes ascending.
pub fn gauss_laguerre(order: usize, alpha: f64) -> Result<Rule1D> {
    check_order(order)?;
    let rule = GaussLaguerre::new(order, alpha).map_err(|_| Error::OrderTooSmall {
        order,
        min: MIN_ORDER,
    })?;
    let mut pairs: Vec<(f64, f64)> = rule.iter().map(|(n, w)| (*n, *w)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(Rule1D {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Composite Gauss-Legendre over explicit panel boundaries.
pub fn composite_on_panels(boundaries: &[f64], order: usize) -> Result<Rule1D> {
    let base = gauss_legendre(order)?;
    let mut nodes = Vec::with_capacity(order * boundaries.len().saturating_sub(1));
    let mut weights = Vec::with_capacity(nodes.capacity());
    for pair in boundaries.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (x, w) in base.iter() {
            nodes.push(mid + half * x);
            weights.push(half * w);
        }
    }
    Ok(Rule1D { nodes, weights })
}

/// Composite Gauss-Legendre on `[a, b]` split into `panels` equal panels.
pub fn composite_legendre(a: f64, b: f64, panels: usize, order: usize) -> Result<Rule1D> {
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let boundaries: Vec<f64> = (0..=panels).map(|k| a + width * k as f64).collect();
    composite_on_panels(&boundaries, order)
}

/// Composite Gauss-Legendre in log space on `[a, b]` with `0 < a < b`.
///
/// Panels are equal in `ln x` with width at most `max_log_width`. Weights are
/// for the plain measure `dx` (the Jacobian `x` is folded in), so
/// `rule.integrate(f)` approximates the integral of `f` over `[a, b]`.
pub fn log_composite_legendre(a: f64, b: f64, max_log_width: f64, order: usize) -> Result<Rule1D> {
    assert!(a > 0.0 && b > a, "log rule needs 0 < a < b");
    let range = (b / a).ln();
    let panels = (range / max_log_width).ceil().max(1.0) as usize;
    let base = gauss_legendre(order)?;
    let width = range / panels as f64;
    let mut nodes = Vec::with_capacity(order * panels);
    let mut weights = Vec::with_capacity(order * panels);
    let log_a = a.ln();
    for k in 0..panels {
        let t0 = log_a + width * k as f64;
        let half = 0.5 * width;
        let mid = t0 + half;
        for (t, w) in base.iter() {
            let x = (mid + half * t).exp();
            nodes.push(x);
            weights.push(half * w * x);
        }
    }
    Ok(Rule1D { nodes, weights })
}
