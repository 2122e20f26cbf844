//! Python bindings: the bicomplex value type plus the point-cloud
//! generators, returned as plain tuples for easy numpy ingestion.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bcjulia::{
    Axis, BicomplexParam, GridSpec, IimConfig, SliceSpec,
};

fn to_py_err(e: bcjulia::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A bicomplex number `a + b*i1 + c*i2 + d*j`.
#[pyclass(name = "Bicomplex", from_py_object)]
#[derive(Clone)]
struct PyBicomplex {
    inner: bcjulia::Bicomplex,
}

#[pymethods]
impl PyBicomplex {
    #[new]
    fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self {
            inner: bcjulia::Bicomplex::from_components(a, b, c, d),
        }
    }

    #[getter]
    fn components(&self) -> [f64; 4] {
        self.inner.components()
    }

    /// Idempotent projections as two complex numbers `(P1, P2)`.
    fn to_idempotent(&self) -> (Complex64, Complex64) {
        let p = self.inner.to_idempotent();
        (p.p1, p.p2)
    }

    #[staticmethod]
    fn from_idempotent(p1: Complex64, p2: Complex64) -> Self {
        Self {
            inner: bcjulia::Bicomplex::from_idempotent(bcjulia::IdempotentPair::new(p1, p2)),
        }
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    fn is_null_cone(&self) -> bool {
        self.inner.is_null_cone()
    }

    fn sqrt_branches(&self) -> Vec<PyBicomplex> {
        self.inner
            .sqrt_branches()
            .into_iter()
            .map(|inner| PyBicomplex { inner })
            .collect()
    }

    fn __add__(&self, other: &PyBicomplex) -> PyBicomplex {
        PyBicomplex {
            inner: self.inner + other.inner,
        }
    }

    fn __mul__(&self, other: &PyBicomplex) -> PyBicomplex {
        PyBicomplex {
            inner: self.inner * other.inner,
        }
    }

    fn __neg__(&self) -> PyBicomplex {
        PyBicomplex { inner: -self.inner }
    }

    fn __repr__(&self) -> String {
        let [a, b, c, d] = self.inner.components();
        format!("Bicomplex({a}, {b}, {c}, {d})")
    }
}

fn parse_axis(axis: &str) -> PyResult<Axis> {
    Axis::parse(axis).ok_or_else(|| PyValueError::new_err(format!("axis must be a|b|c|d, got {axis}")))
}

fn param(c: [f64; 4]) -> BicomplexParam {
    BicomplexParam::new(bcjulia::Bicomplex::from_components(c[0], c[1], c[2], c[3]))
}

/// Fixed points of `z^2 + c` as `(point, multiplier_mag, class)` tuples.
#[pyfunction]
fn fixed_points(c: Complex64) -> Vec<(Complex64, f64, String)> {
    bcjulia::fixed_points(c)
        .into_iter()
        .map(|f| (f.point, f.multiplier_mag, f.class.to_string()))
        .collect()
}

/// Bicomplex fixed points as `(components, class1, class2)` tuples.
#[pyfunction]
fn bc_fixed_points(c: [f64; 4]) -> Vec<([f64; 4], String, String)> {
    bcjulia::bc_fixed_points(&param(c))
        .into_iter()
        .map(|f| {
            (
                f.point.components(),
                f.comp1.class.to_string(),
                f.comp2.class.to_string(),
            )
        })
        .collect()
}

/// Complex Julia set points by inverse iteration.
#[pyfunction]
#[pyo3(signature = (c, n_points=10_000, warmup=20, seed=1))]
fn julia2d(c: Complex64, n_points: usize, warmup: usize, seed: u64) -> PyResult<Vec<(f64, f64)>> {
    let cfg = IimConfig::random_walk(seed, n_points, warmup);
    let pts = bcjulia::iim(c, &cfg).map_err(to_py_err)?;
    Ok(pts.into_iter().map(|z| (z.re, z.im)).collect())
}

/// Sliced bicomplex IIM cloud as `(x, y, z, tag)` tuples.
#[pyfunction]
#[pyo3(signature = (c, n_points=10_000, warmup=20, seed=1, epsilon=0.05, axis="d"))]
fn julia3d_iim(
    c: [f64; 4],
    n_points: usize,
    warmup: usize,
    seed: u64,
    epsilon: f64,
    axis: &str,
) -> PyResult<Vec<(f64, f64, f64, String)>> {
    let cfg = IimConfig::random_walk(seed, n_points, warmup);
    let cloud = bcjulia::iim_bicomplex(&param(c), &cfg).map_err(to_py_err)?;
    let spec = SliceSpec {
        drop_axis: parse_axis(axis)?,
        epsilon,
    };
    let sliced = bcjulia::slice3d(&cloud, &spec).map_err(to_py_err)?;
    Ok(sliced
        .into_iter()
        .map(|p| (p.x, p.y, p.z, p.tag.as_str().to_string()))
        .collect())
}

/// Sliced tagged boundary cloud as `(x, y, z, tag)` tuples.
#[pyfunction]
#[pyo3(signature = (c, n_points=10_000, warmup=20, seed=1, grid_n=201, max_iter=200, budget=50_000, epsilon=0.05, axis="d"))]
#[allow(clippy::too_many_arguments)]
fn julia3d_boundary(
    c: [f64; 4],
    n_points: usize,
    warmup: usize,
    seed: u64,
    grid_n: usize,
    max_iter: usize,
    budget: usize,
    epsilon: f64,
    axis: &str,
) -> PyResult<Vec<(f64, f64, f64, String)>> {
    let cfg = IimConfig::random_walk(seed, n_points, warmup);
    let mut grid = GridSpec::default_figure();
    grid.nx = grid_n;
    grid.ny = grid_n;
    grid.max_iter = max_iter;
    let cloud = bcjulia::build_julia_boundary(&param(c), &cfg, &grid, budget).map_err(to_py_err)?;
    let spec = SliceSpec {
        drop_axis: parse_axis(axis)?,
        epsilon,
    };
    let sliced = bcjulia::slice3d(&cloud, &spec).map_err(to_py_err)?;
    Ok(sliced
        .into_iter()
        .map(|p| (p.x, p.y, p.z, p.tag.as_str().to_string()))
        .collect())
}

/// Dendrite heuristic verdict for both components.
#[pyfunction]
#[pyo3(signature = (c, grid_n=401, max_iter=200))]
fn dendrite_check(c: [f64; 4], grid_n: usize, max_iter: usize) -> PyResult<String> {
    let mut grid = GridSpec::default_figure();
    grid.nx = grid_n;
    grid.ny = grid_n;
    grid.max_iter = max_iter;
    let v = bcjulia::dendrite_heuristic(&param(c), &grid).map_err(to_py_err)?;
    Ok(v.to_string())
}

#[pymodule]
fn bcjulia_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBicomplex>()?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(bc_fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(julia2d, m)?)?;
    m.add_function(wrap_pyfunction!(julia3d_iim, m)?)?;
    m.add_function(wrap_pyfunction!(julia3d_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(dendrite_check, m)?)?;
    m.add("RNG_ID", bcjulia::dynamics::RNG_ID)?;
    Ok(())
}
