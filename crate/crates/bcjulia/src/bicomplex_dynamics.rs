//! Bicomplex dynamics of `P_c(w) = w^2 + c` through the idempotent
//! decomposition: both forward routes, bicomplex fixed points, the adapted
//! inverse iteration method, and a grid heuristic for the dendrite case.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, Complex, IdempotentPair};
use crate::cloud::{PointCloud4D, Tag, TaggedPoint};
use crate::dynamics::{
    self, filled_julia_mask, FixedPointInfo, GridSpec, IimConfig, IimMode,
};
use crate::error::Error;

/// A bicomplex parameter `c` with its idempotent projections cached.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BicomplexParam {
    pub c: Bicomplex,
    pub c_minus: Complex,
    pub c_plus: Complex,
}

impl BicomplexParam {
    pub fn new(c: Bicomplex) -> Self {
        let p = c.to_idempotent();
        Self {
            c,
            c_minus: p.p1,
            c_plus: p.p2,
        }
    }
}

/// A fixed point of the bicomplex map together with the classification of
/// its two complex components.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BicomplexFixedPoint {
    pub point: Bicomplex,
    pub comp1: FixedPointInfo,
    pub comp2: FixedPointInfo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForwardRoute {
    /// Compose bicomplex multiplication directly.
    Direct,
    /// Run the two complex orbits and recombine.
    Idempotent,
}

/// `n`-fold composition of `P_c` on a bicomplex point. Non-finite overflow
/// is the escape flag, as in the complex case.
pub fn iterate_forward_bc(c: &BicomplexParam, w: Bicomplex, n: usize, via: ForwardRoute) -> Bicomplex {
    match via {
        ForwardRoute::Direct => {
            let mut w = w;
            for _ in 0..n {
                w = w * w + c.c;
                if !w.is_finite() {
                    return w;
                }
            }
            w
        }
        ForwardRoute::Idempotent => {
            let p = w.to_idempotent();
            Bicomplex::from_idempotent(IdempotentPair {
                p1: dynamics::iterate_forward(c.c_minus, p.p1, n),
                p2: dynamics::iterate_forward(c.c_plus, p.p2, n),
            })
        }
    }
}

/// All bicomplex fixed points: the cartesian combinations of the fixed
/// points of the two projected complex maps.
pub fn bc_fixed_points(c: &BicomplexParam) -> Vec<BicomplexFixedPoint> {
    let fps1 = dynamics::fixed_points(c.c_minus);
    let fps2 = dynamics::fixed_points(c.c_plus);
    let mut out = Vec::with_capacity(fps1.len() * fps2.len());
    for &f1 in &fps1 {
        for &f2 in &fps2 {
            out.push(BicomplexFixedPoint {
                point: Bicomplex::from_idempotent(IdempotentPair::new(f1.point, f2.point)),
                comp1: f1,
                comp2: f2,
            });
        }
    }
    out
}

/// A fixed point lying in `J x_e J`: each component is the seed its complex
/// map would use (a repelling fixed point, or 1/2 in the parabolic case).
pub fn seed_in_jxj(c: &BicomplexParam) -> BicomplexFixedPoint {
    let s1 = dynamics::choose_seed_point(c.c_minus);
    let s2 = dynamics::choose_seed_point(c.c_plus);
    let find = |fps: Vec<FixedPointInfo>, s: Complex| {
        fps.into_iter()
            .min_by(|a, b| {
                (a.point - s)
                    .norm()
                    .partial_cmp(&(b.point - s).norm())
                    .unwrap()
            })
            .unwrap()
    };
    let comp1 = find(dynamics::fixed_points(c.c_minus), s1);
    let comp2 = find(dynamics::fixed_points(c.c_plus), s2);
    BicomplexFixedPoint {
        point: Bicomplex::from_idempotent(IdempotentPair::new(comp1.point, comp2.point)),
        comp1,
        comp2,
    }
}

/// One inverse step with the branch pair `(s1, s2)` applied to the two
/// idempotent components.
pub fn bc_inverse_step(c: &BicomplexParam, w: Bicomplex, branch: (u8, u8)) -> Bicomplex {
    let p = w.to_idempotent();
    Bicomplex::from_idempotent(IdempotentPair {
        p1: dynamics::inverse_step(c.c_minus, p.p1, branch.0),
        p2: dynamics::inverse_step(c.c_plus, p.p2, branch.1),
    })
}

/// Adapted inverse iteration method: a random walk from a fixed point in
/// `J x_e J`, drawing one uniform branch pair out of the four per step.
/// Full-tree mode is not supported for the bicomplex walk.
pub fn iim_bicomplex(c: &BicomplexParam, cfg: &IimConfig) -> Result<PointCloud4D, Error> {
    cfg.validate()?;
    if !matches!(cfg.mode, IimMode::RandomWalk) {
        return Err(Error::InvalidConfig(
            "bicomplex IIM supports random-walk mode only".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut w = seed_in_jxj(c).point;
    let mut points = Vec::with_capacity(cfg.n_points);
    for step in 0..cfg.warmup + cfg.n_points {
        let draw = rng.next_u64() & 3;
        let branch = ((draw >> 1) as u8, (draw & 1) as u8);
        w = bc_inverse_step(c, w, branch);
        if step >= cfg.warmup {
            points.push(TaggedPoint { w, tag: Tag::JxJ });
        }
    }
    Ok(PointCloud4D { points })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DendriteVerdict {
    DendriteConsistent,
    NotDendrite,
    Inconclusive,
}

impl std::fmt::Display for DendriteVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DendriteVerdict::DendriteConsistent => "dendrite-consistent",
            DendriteVerdict::NotDendrite => "not-dendrite",
            DendriteVerdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

fn component_verdict(c: Complex, grid: &GridSpec) -> Result<DendriteVerdict, Error> {
    let mask = filled_julia_mask(c, grid)?;
    let at = |ix: i64, iy: i64| -> bool {
        if ix < 0 || iy < 0 || ix >= grid.nx as i64 || iy >= grid.ny as i64 {
            return false;
        }
        mask[iy as usize * grid.nx + ix as usize]
    };
    let block_inside = |ix: i64, iy: i64, radius: i64| -> bool {
        for dy in -radius..=radius {
            for dx in -radius..=radius {
                if !at(ix + dx, iy + dy) {
                    return false;
                }
            }
        }
        true
    };
    let mut thin = true;
    for iy in 0..grid.ny as i64 {
        for ix in 0..grid.nx as i64 {
            if !at(ix, iy) {
                continue;
            }
            if block_inside(ix, iy, 2) {
                return Ok(DendriteVerdict::NotDendrite);
            }
            if block_inside(ix, iy, 1) {
                thin = false;
            }
        }
    }
    if thin {
        Ok(DendriteVerdict::DendriteConsistent)
    } else {
        Ok(DendriteVerdict::Inconclusive)
    }
}

/// Grid heuristic for the dendrite case: a component whose sampled filled
/// set has no interior at this resolution is dendrite-consistent; one with
/// a solid 5x5 inside block is not. Resolution-dependent by construction.
pub fn dendrite_heuristic(c: &BicomplexParam, grid: &GridSpec) -> Result<DendriteVerdict, Error> {
    let v1 = component_verdict(c.c_minus, grid)?;
    let v2 = component_verdict(c.c_plus, grid)?;
    Ok(combine_verdicts(v1, v2))
}

/// Per-component verdicts, for reporting.
pub fn dendrite_heuristic_components(
    c: &BicomplexParam,
    grid: &GridSpec,
) -> Result<(DendriteVerdict, DendriteVerdict), Error> {
    Ok((
        component_verdict(c.c_minus, grid)?,
        component_verdict(c.c_plus, grid)?,
    ))
}

fn combine_verdicts(v1: DendriteVerdict, v2: DendriteVerdict) -> DendriteVerdict {
    use DendriteVerdict::*;
    match (v1, v2) {
        (NotDendrite, _) | (_, NotDendrite) => NotDendrite,
        (DendriteConsistent, DendriteConsistent) => DendriteConsistent,
        _ => Inconclusive,
    }
}
