//! Boundary construction for bicomplex Julia sets: the boundary of a
//! cartesian set is the union of three cartesian pieces, and for the Julia
//! case the pieces reduce to combinations of `J` and `K` samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::{Bicomplex, Complex, IdempotentPair};
use crate::bicomplex_dynamics::BicomplexParam;
use crate::cloud::{PointCloud4D, Tag, TaggedPoint};
use crate::dynamics::{iim, sample_filled_julia, GridSpec, IimConfig};
use crate::error::Error;

/// Recombine two complex sample lists into bicomplex points
/// `from_idempotent(a, b)`. All pairs when they fit in `budget`, otherwise
/// `budget` uniformly drawn pairs (duplicates allowed). Returns the points
/// and the number of duplicate index pairs drawn.
pub fn cartesian_combine_counted(
    a: &[Complex],
    b: &[Complex],
    budget: usize,
    seed: u64,
) -> Result<(Vec<Bicomplex>, usize), Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    if budget < 1 {
        return Err(Error::InvalidConfig("budget must be >= 1".into()));
    }
    let total = a.len().checked_mul(b.len());
    if let Some(total) = total {
        if total <= budget {
            let mut out = Vec::with_capacity(total);
            for &x in a {
                for &y in b {
                    out.push(Bicomplex::from_idempotent(IdempotentPair::new(x, y)));
                }
            }
            return Ok((out, 0));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(budget);
    let mut duplicates = 0usize;
    let mut out = Vec::with_capacity(budget);
    for _ in 0..budget {
        let i = rng.random_range(0..a.len());
        let j = rng.random_range(0..b.len());
        if !seen.insert((i, j)) {
            duplicates += 1;
        }
        out.push(Bicomplex::from_idempotent(IdempotentPair::new(a[i], b[j])));
    }
    Ok((out, duplicates))
}

pub fn cartesian_combine(
    a: &[Complex],
    b: &[Complex],
    budget: usize,
    seed: u64,
) -> Result<Vec<Bicomplex>, Error> {
    cartesian_combine_counted(a, b, budget, seed).map(|(points, _)| points)
}

/// Per-piece budgets: half to the `J x_e J` piece, a quarter to each of the
/// mixed pieces, each at least one.
fn budget_shares(budget: usize) -> (usize, usize, usize) {
    let quarter = (budget / 4).max(1);
    let jxj = budget.saturating_sub(2 * (budget / 4)).max(1);
    (jxj, quarter, quarter)
}

/// Boundary of a generic cartesian set `X1 x_e X2` from interior and
/// boundary samples of each factor: the three pieces are
/// `bd(X1) x_e X2` (tagged `JxK`), `X1 x_e bd(X2)` (tagged `KxJ`) and
/// `bd(X1) x_e bd(X2)` (tagged `JxJ`).
pub fn build_theorem33_boundary(
    x1_in: &[Complex],
    x1_bd: &[Complex],
    x2_in: &[Complex],
    x2_bd: &[Complex],
    budget: usize,
    seed: u64,
) -> Result<PointCloud4D, Error> {
    let (jxj_budget, jxk_budget, kxj_budget) = budget_shares(budget);
    let mut cloud = PointCloud4D::default();
    let pieces: [(&[Complex], &[Complex], usize, Tag, u64); 3] = [
        (x1_bd, x2_in, jxk_budget, Tag::JxK, seed.wrapping_add(1)),
        (x1_in, x2_bd, kxj_budget, Tag::KxJ, seed.wrapping_add(2)),
        (x1_bd, x2_bd, jxj_budget, Tag::JxJ, seed.wrapping_add(3)),
    ];
    for (a, b, share, tag, piece_seed) in pieces {
        let points = cartesian_combine(a, b, share, piece_seed)?;
        cloud
            .points
            .extend(points.into_iter().map(|w| TaggedPoint { w, tag }));
    }
    Ok(cloud)
}

/// Full bicomplex Julia boundary cloud: IIM samples stand in for the `J`
/// factors, escape-time grid samples for the `K` factors, and the three
/// cartesian pieces are combined with split budgets.
///
/// Sub-seeds are derived from `iim_cfg.seed`: the two IIM walks use
/// `seed` and `seed + 1`, the pair sampling uses `seed + 2 .. seed + 4`.
pub fn build_julia_boundary(
    c: &BicomplexParam,
    iim_cfg: &IimConfig,
    grid: &GridSpec,
    budget: usize,
) -> Result<PointCloud4D, Error> {
    let mut cfg1 = *iim_cfg;
    let mut cfg2 = *iim_cfg;
    cfg1.seed = iim_cfg.seed;
    cfg2.seed = iim_cfg.seed.wrapping_add(1);
    let j1 = iim(c.c_minus, &cfg1)?;
    let j2 = iim(c.c_plus, &cfg2)?;
    let k1 = sample_filled_julia(c.c_minus, grid)?;
    let k2 = sample_filled_julia(c.c_plus, grid)?;
    if k1.is_empty() || k2.is_empty() {
        return Err(Error::EmptyInput);
    }
    build_theorem33_boundary(&k1, &j1, &k2, &j2, budget, iim_cfg.seed.wrapping_add(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c64(re: f64, im: f64) -> Complex {
        Complex64::new(re, im)
    }

    #[test]
    fn combine_singletons() {
        let out = cartesian_combine(&[c64(1.0, 0.0)], &[c64(1.0, 0.0)], 10, 0).unwrap();
        assert_eq!(out, vec![Bicomplex::one()]);
    }

    #[test]
    fn combine_signs() {
        let pm = [c64(1.0, 0.0), c64(-1.0, 0.0)];
        let out = cartesian_combine(&pm, &pm, 4, 0).unwrap();
        assert_eq!(out.len(), 4);
        for expect in [
            Bicomplex::one(),
            -Bicomplex::one(),
            Bicomplex::unit_j(),
            -Bicomplex::unit_j(),
        ] {
            assert!(out.iter().any(|w| (*w - expect).norm() < 1e-15));
        }
    }

    #[test]
    fn combine_budget_sampling() {
        let a: Vec<Complex> = (0..1000).map(|i| c64(i as f64, 0.0)).collect();
        let b: Vec<Complex> = (0..1000).map(|i| c64(0.0, i as f64)).collect();
        let out = cartesian_combine(&a, &b, 100_000, 9).unwrap();
        assert_eq!(out.len(), 100_000);
        for w in out.iter().take(100) {
            let p = w.to_idempotent();
            assert!(a.contains(&p.p1));
            // p2 may pick up rounding from the round trip
            assert!(b.iter().any(|y| (p.p2 - y).norm() < 1e-9));
        }
    }

    #[test]
    fn combine_rejects_empty() {
        assert!(matches!(
            cartesian_combine(&[], &[c64(0.0, 0.0)], 1, 0),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn combine_deterministic() {
        let a: Vec<Complex> = (0..50).map(|i| c64(i as f64, 0.0)).collect();
        let x = cartesian_combine(&a, &a, 100, 7).unwrap();
        let y = cartesian_combine(&a, &a, 100, 7).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn theorem33_singletons() {
        let interior = [c64(0.0, 0.0)];
        let boundary = [c64(1.0, 0.0)];
        let cloud =
            build_theorem33_boundary(&interior, &boundary, &interior, &boundary, 30, 0).unwrap();
        assert_eq!(cloud.len(), 3);
        let expected = [
            (Tag::JxK, IdempotentPair::new(c64(1.0, 0.0), c64(0.0, 0.0))),
            (Tag::KxJ, IdempotentPair::new(c64(0.0, 0.0), c64(1.0, 0.0))),
            (Tag::JxJ, IdempotentPair::new(c64(1.0, 0.0), c64(1.0, 0.0))),
        ];
        for (tag, pair) in expected {
            let w = Bicomplex::from_idempotent(pair);
            assert!(cloud
                .points
                .iter()
                .any(|tp| tp.tag == tag && (tp.w - w).norm() < 1e-15));
        }
    }

    #[test]
    fn theorem33_disk_circle_predicates() {
        // X = unit disk samples, bd(X) = unit circle samples
        let disk: Vec<Complex> = (0..40)
            .flat_map(|i| {
                (0..8).map(move |k| {
                    let r = i as f64 / 40.0;
                    let th = k as f64 / 8.0 * std::f64::consts::TAU;
                    Complex64::from_polar(r, th)
                })
            })
            .collect();
        let circle: Vec<Complex> = (0..64)
            .map(|k| Complex64::from_polar(1.0, k as f64 / 64.0 * std::f64::consts::TAU))
            .collect();
        let cloud = build_theorem33_boundary(&disk, &circle, &disk, &circle, 1000, 3).unwrap();
        for tp in &cloud.points {
            let p = tp.w.to_idempotent();
            assert!(p.p1.norm() <= 1.0 + 1e-9 && p.p2.norm() <= 1.0 + 1e-9);
            match tp.tag {
                Tag::JxK => assert!((p.p1.norm() - 1.0).abs() < 1e-9),
                Tag::KxJ => assert!((p.p2.norm() - 1.0).abs() < 1e-9),
                Tag::JxJ => {
                    assert!((p.p1.norm() - 1.0).abs() < 1e-9);
                    assert!((p.p2.norm() - 1.0).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn julia_boundary_matches_generic_builder() {
        let c = BicomplexParam::new(Bicomplex::from_components(0.25, 0.0, 0.0, 0.0));
        let cfg = IimConfig::random_walk(21, 500, 20);
        let mut grid = GridSpec::default_figure();
        grid.nx = 101;
        grid.ny = 101;
        grid.max_iter = 100;
        let via_julia = build_julia_boundary(&c, &cfg, &grid, 2000).unwrap();

        let mut cfg2 = cfg;
        cfg2.seed = cfg.seed + 1;
        let j1 = iim(c.c_minus, &cfg).unwrap();
        let j2 = iim(c.c_plus, &cfg2).unwrap();
        let k1 = sample_filled_julia(c.c_minus, &grid).unwrap();
        let k2 = sample_filled_julia(c.c_plus, &grid).unwrap();
        let via_generic =
            build_theorem33_boundary(&k1, &j1, &k2, &j2, 2000, cfg.seed + 1).unwrap();

        assert_eq!(via_julia.len(), via_generic.len());
        for (x, y) in via_julia.points.iter().zip(&via_generic.points) {
            assert_eq!(x.tag, y.tag);
            assert_eq!(x.w, y.w);
        }
    }
}
