//! One-variable dynamics of `P_c(z) = z^2 + c`: forward and inverse
//! iteration, fixed points with multiplier classification, the inverse
//! iteration method (IIM), and escape-time sampling of the filled set.

use num_complex::Complex64;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Complex;
use crate::error::Error;

/// Tolerance on `| |2z| - 1 |` below which a fixed point is indifferent.
pub const CLASS_TOL: f64 = 1e-12;

/// Full-tree expansion is capped here (about 16M nodes at the cap).
pub const MAX_TREE_DEPTH: u32 = 24;

/// Identifier of the branch-selection RNG, recorded in run metadata.
pub const RNG_ID: &str = "chacha8(seed64)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Attractive,
    Repelling,
    Indifferent,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Classification::Attractive => "attractive",
            Classification::Repelling => "repelling",
            Classification::Indifferent => "indifferent",
        };
        f.write_str(s)
    }
}

/// A fixed point of `P_c` with its multiplier modulus `|2z|`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FixedPointInfo {
    pub point: Complex,
    pub multiplier_mag: f64,
    pub class: Classification,
}

impl FixedPointInfo {
    fn classify(point: Complex) -> Self {
        let multiplier_mag = 2.0 * point.norm();
        let class = if (multiplier_mag - 1.0).abs() <= CLASS_TOL {
            Classification::Indifferent
        } else if multiplier_mag < 1.0 {
            Classification::Attractive
        } else {
            Classification::Repelling
        };
        Self {
            point,
            multiplier_mag,
            class,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IimMode {
    RandomWalk,
    FullTree { depth: u32 },
}

/// Generation parameters for the inverse iteration method.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct IimConfig {
    pub seed: u64,
    pub n_points: usize,
    pub warmup: usize,
    pub mode: IimMode,
}

impl IimConfig {
    pub fn random_walk(seed: u64, n_points: usize, warmup: usize) -> Self {
        Self {
            seed,
            n_points,
            warmup,
            mode: IimMode::RandomWalk,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.n_points < 1 {
            return Err(Error::InvalidConfig("n_points must be >= 1".into()));
        }
        if let IimMode::FullTree { depth } = self.mode {
            if depth < 1 {
                return Err(Error::InvalidConfig("tree depth must be >= 1".into()));
            }
            if depth > MAX_TREE_DEPTH {
                return Err(Error::DepthTooLarge(depth));
            }
        }
        Ok(())
    }
}

/// Rectangular sampling grid with escape-time parameters.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub max_iter: usize,
    pub escape_radius: f64,
}

impl GridSpec {
    /// The paper-figure default: 401x401 on [-2,2]^2, 200 iterations.
    pub fn default_figure() -> Self {
        Self {
            x_min: -2.0,
            x_max: 2.0,
            y_min: -2.0,
            y_max: 2.0,
            nx: 401,
            ny: 401,
            max_iter: 200,
            escape_radius: 2.0,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.x_min < self.x_max) || !(self.y_min < self.y_max) {
            return Err(Error::InvalidConfig("grid bounds must be increasing".into()));
        }
        if self.nx < 2 || self.ny < 2 {
            return Err(Error::InvalidConfig("grid resolution must be >= 2".into()));
        }
        if !(self.escape_radius >= 2.0) {
            return Err(Error::InvalidConfig("escape radius must be >= 2".into()));
        }
        Ok(())
    }

    pub fn cell_width(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn cell_height(&self) -> f64 {
        (self.y_max - self.y_min) / (self.ny - 1) as f64
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.cell_width().hypot(self.cell_height())
    }

    pub fn node(&self, ix: usize, iy: usize) -> Complex {
        Complex64::new(
            self.x_min + ix as f64 * self.cell_width(),
            self.y_min + iy as f64 * self.cell_height(),
        )
    }
}

/// `n`-fold composition of `P_c`. Overflow to a non-finite value is the
/// escape flag, not a fault; callers test `is_finite()`.
pub fn iterate_forward(c: Complex, z: Complex, n: usize) -> Complex {
    let mut z = z;
    for _ in 0..n {
        z = z * z + c;
        if !z.re.is_finite() || !z.im.is_finite() {
            return z;
        }
    }
    z
}

/// Roots of `z^2 - z + c = 0`, classified by multiplier. The parabolic
/// parameter `c = 1/4` is detected by value and yields the single
/// indifferent point `1/2`.
pub fn fixed_points(c: Complex) -> Vec<FixedPointInfo> {
    if c == Complex64::new(0.25, 0.0) {
        return vec![FixedPointInfo {
            point: Complex64::new(0.5, 0.0),
            multiplier_mag: 1.0,
            class: Classification::Indifferent,
        }];
    }
    let s = (Complex64::new(1.0, 0.0) - c * 4.0).sqrt();
    let mut roots = [(Complex64::new(1.0, 0.0) - s) * 0.5, (Complex64::new(1.0, 0.0) + s) * 0.5];
    roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    roots.iter().map(|&z| FixedPointInfo::classify(z)).collect()
}

/// Seed for the IIM: a repelling fixed point when one exists, otherwise the
/// indifferent one. Ties between repelling points go to the larger
/// multiplier, then to lexicographic (re, im) order.
pub fn choose_seed_point(c: Complex) -> Complex {
    let fps = fixed_points(c);
    let mut repelling: Vec<&FixedPointInfo> = fps
        .iter()
        .filter(|f| f.class == Classification::Repelling)
        .collect();
    if !repelling.is_empty() {
        repelling.sort_by(|a, b| {
            b.multiplier_mag
                .partial_cmp(&a.multiplier_mag)
                .unwrap()
                .then((a.point.re, a.point.im).partial_cmp(&(b.point.re, b.point.im)).unwrap())
        });
        return repelling[0].point;
    }
    fps.iter()
        .find(|f| f.class == Classification::Indifferent)
        .map(|f| f.point)
        .unwrap_or(fps[0].point)
}

/// One inverse step `sqrt(z - c)`: branch 0 is the principal root, branch 1
/// its negation.
pub fn inverse_step(c: Complex, z: Complex, branch: u8) -> Complex {
    let r = (z - c).sqrt();
    if branch == 0 {
        r
    } else {
        -r
    }
}

/// Inverse iteration method for the complex Julia set `J_c`.
///
/// Random-walk mode draws one branch bit per step from a ChaCha8 stream
/// seeded with `cfg.seed`, discards the first `warmup` iterates and records
/// the next `n_points`. Full-tree mode expands both branches breadth-first
/// to the configured depth and returns every node deeper than `warmup`.
pub fn iim(c: Complex, cfg: &IimConfig) -> Result<Vec<Complex>, Error> {
    cfg.validate()?;
    let seed = choose_seed_point(c);
    match cfg.mode {
        IimMode::RandomWalk => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut z = seed;
            let mut out = Vec::with_capacity(cfg.n_points);
            for step in 0..cfg.warmup + cfg.n_points {
                let branch = (rng.next_u64() & 1) as u8;
                z = inverse_step(c, z, branch);
                if step >= cfg.warmup {
                    out.push(z);
                }
            }
            Ok(out)
        }
        IimMode::FullTree { depth } => {
            let mut level = vec![seed];
            let mut out = Vec::new();
            for d in 1..=depth as usize {
                let mut next = Vec::with_capacity(level.len() * 2);
                for &z in &level {
                    next.push(inverse_step(c, z, 0));
                    next.push(inverse_step(c, z, 1));
                }
                if d > cfg.warmup {
                    out.extend_from_slice(&next);
                }
                level = next;
            }
            Ok(out)
        }
    }
}

/// Escape-time approximation of membership in the filled set `K_c`.
pub fn filled_julia_contains(c: Complex, z: Complex, max_iter: usize, escape_radius: f64) -> bool {
    let r2 = escape_radius * escape_radius;
    let mut z = z;
    for _ in 0..max_iter {
        if z.norm_sqr() > r2 {
            return false;
        }
        z = z * z + c;
        if !z.re.is_finite() || !z.im.is_finite() {
            return false;
        }
    }
    z.norm_sqr() <= r2
}

/// Boolean inside-mask over the grid, row-major with `iy` outer.
pub fn filled_julia_mask(c: Complex, grid: &GridSpec) -> Result<Vec<bool>, Error> {
    grid.validate()?;
    let mask = (0..grid.ny)
        .into_par_iter()
        .flat_map_iter(|iy| {
            (0..grid.nx).map(move |ix| {
                filled_julia_contains(c, grid.node(ix, iy), grid.max_iter, grid.escape_radius)
            })
        })
        .collect();
    Ok(mask)
}

/// Grid nodes classified inside `K_c`, in row-major order.
pub fn sample_filled_julia(c: Complex, grid: &GridSpec) -> Result<Vec<Complex>, Error> {
    let mask = filled_julia_mask(c, grid)?;
    let mut out = Vec::new();
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            if mask[iy * grid.nx + ix] {
                out.push(grid.node(ix, iy));
            }
        }
    }
    Ok(out)
}
