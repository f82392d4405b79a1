//! Spherical momentum quadrature grid: a log-mapped composite Gauss-Legendre
//! rule in the radial direction and a Gauss-Legendre x uniform product rule
//! on the sphere.
//!
//! Radial weights absorb the `p^2` volume factor, and angular weights carry
//! the full solid-angle measure, so summing `weight * f(p_vec)` over all
//! nodes approximates the integral of `f` over momentum space. The angular
//! integrands arising from s- and p-wave spinors times the operator families
//! are polynomials of degree at most four in the direction components, for
//! which the default 8 x 8 product rule is exact.

use std::sync::Arc;

use crate::quad::{self, MIN_ORDER};
use crate::spin_ops::Momentum3;
use crate::{Error, Result};

/// Log-space panel width of the radial rule.
const RADIAL_LOG_PANEL_WIDTH: f64 = 2.0;

/// Quadrature orders: radial is per log-panel, angular is the polar order and
/// the azimuthal point count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridConfig {
    pub radial_order: usize,
    pub angular_order: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            radial_order: 32,
            angular_order: 8,
        }
    }
}

impl GridConfig {
    pub fn validate(&self) -> Result<()> {
        for order in [self.radial_order, self.angular_order] {
            if order < MIN_ORDER {
                return Err(Error::OrderTooSmall {
                    order,
                    min: MIN_ORDER,
                });
            }
        }
        Ok(())
    }
}

/// One quadrature node of the spherical grid.
#[derive(Debug, Clone, Copy)]
pub struct GridNode {
    pub p: Momentum3,
    /// Full 3D weight including `p^2` and the solid-angle measure.
    pub weight: f64,
    /// Index into the radial node list.
    pub radial_index: usize,
}

/// Spherical momentum grid over `p in [p_min, p_max]`.
#[derive(Debug, Clone)]
pub struct MomentumGrid {
    radial_nodes: Vec<f64>,
    radial_weights: Vec<f64>,
    directions: Vec<[f64; 3]>,
    angular_weights: Vec<f64>,
    pub p_min: f64,
    pub p_max: f64,
    /// Analytic bound on the norm fraction outside `[p_min, p_max]`.
    pub tail_bound: f64,
    pub config: GridConfig,
}

impl MomentumGrid {
    pub fn build(p_min: f64, p_max: f64, tail_bound: f64, config: GridConfig) -> Result<Self> {
        config.validate()?;
        assert!(p_min > 0.0 && p_max > p_min);

        // radial rule in log space, weights for the measure p^2 dp
        let dp_rule = quad::log_composite_legendre(
            p_min,
            p_max,
            RADIAL_LOG_PANEL_WIDTH,
            config.radial_order,
        )?;
        let radial_nodes = dp_rule.nodes;
        let radial_weights: Vec<f64> = radial_nodes
            .iter()
            .zip(dp_rule.weights.iter())
            .map(|(p, w)| w * p * p)
            .collect();

        // product rule on the sphere
        let polar = quad::gauss_legendre(config.angular_order)?;
        let n_phi = config.angular_order;
        let phi_weight = std::f64::consts::TAU / n_phi as f64;
        let mut directions = Vec::with_capacity(polar.len() * n_phi);
        let mut angular_weights = Vec::with_capacity(polar.len() * n_phi);
        for (z, wz) in polar.iter() {
            let s = (1.0 - z * z).max(0.0).sqrt();
            for b in 0..n_phi {
                let phi = phi_weight * (b as f64 + 0.5);
                directions.push([s * phi.cos(), s * phi.sin(), z]);
                angular_weights.push(wz * phi_weight);
            }
        }

        Ok(Self {
            radial_nodes,
            radial_weights,
            directions,
            angular_weights,
            p_min,
            p_max,
            tail_bound,
            config,
        })
    }

    /// Same panel layout with the radial order doubled.
    pub fn refined_radial(&self) -> Result<Self> {
        Self::build(
            self.p_min,
            self.p_max,
            self.tail_bound,
            GridConfig {
                radial_order: 2 * self.config.radial_order,
                angular_order: self.config.angular_order,
            },
        )
    }

    /// Same panel layout with both orders doubled.
    pub fn refined(&self) -> Result<Self> {
        Self::build(
            self.p_min,
            self.p_max,
            self.tail_bound,
            GridConfig {
                radial_order: 2 * self.config.radial_order,
                angular_order: 2 * self.config.angular_order,
            },
        )
    }

    pub fn radial_nodes(&self) -> &[f64] {
        &self.radial_nodes
    }

    /// Radial weights for the measure `p^2 dp`.
    pub fn radial_weights(&self) -> &[f64] {
        &self.radial_weights
    }

    pub fn angular_count(&self) -> usize {
        self.directions.len()
    }

    pub fn node_count(&self) -> usize {
        self.radial_nodes.len() * self.directions.len()
    }

    /// Iterate all nodes in the fixed deterministic order: radial-major,
    /// then polar, then azimuthal.
    pub fn nodes(&self) -> impl Iterator<Item = GridNode> + '_ {
        self.radial_nodes
            .iter()
            .zip(self.radial_weights.iter())
            .enumerate()
            .flat_map(move |(k, (p, wr))| {
                self.directions
                    .iter()
                    .zip(self.angular_weights.iter())
                    .map(move |(dir, wa)| GridNode {
                        p: Momentum3::new(p * dir[0], p * dir[1], p * dir[2]),
                        weight: wr * wa,
                        radial_index: k,
                    })
            })
    }

    /// Two grids index the same nodes (same bounds and orders).
    pub fn compatible(&self, other: &Self) -> bool {
        self.p_min == other.p_min && self.p_max == other.p_max && self.config == other.config
    }
}

/// Shared handle used by spinor fields living on a common grid.
pub type SharedGrid = Arc<MomentumGrid>;
