//! The epsilon-cut: project a 4D cloud to 3D by dropping one real
//! component, keeping only points where that component is small.

use serde::{Deserialize, Serialize};

use crate::cloud::{PointCloud4D, Tag};
use crate::error::Error;

/// Which real component of `a + b*i1 + c*i2 + d*j` is cut away.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    A,
    B,
    C,
    D,
}

impl Axis {
    pub fn index(&self) -> usize {
        match self {
            Axis::A => 0,
            Axis::B => 1,
            Axis::C => 2,
            Axis::D => 3,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Axis::A => "a",
            Axis::B => "b",
            Axis::C => "c",
            Axis::D => "d",
        }
    }

    pub fn parse(s: &str) -> Option<Axis> {
        match s {
            "a" => Some(Axis::A),
            "b" => Some(Axis::B),
            "c" => Some(Axis::C),
            "d" => Some(Axis::D),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SliceSpec {
    pub drop_axis: Axis,
    pub epsilon: f64,
}

impl Default for SliceSpec {
    /// The paper's cut: drop the `j` component, epsilon 0.05.
    fn default() -> Self {
        Self {
            drop_axis: Axis::D,
            epsilon: 0.05,
        }
    }
}

impl SliceSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.epsilon > 0.0) {
            return Err(Error::InvalidConfig("epsilon must be positive".into()));
        }
        Ok(())
    }
}

/// A projected point: the three surviving components in `(a, b, c, d)`
/// order with the dropped axis removed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlicedPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub tag: Tag,
}

/// Keep points with `|dropped component| < epsilon`, projected to 3D.
pub fn slice3d(cloud: &PointCloud4D, spec: &SliceSpec) -> Result<Vec<SlicedPoint>, Error> {
    spec.validate()?;
    let drop = spec.drop_axis.index();
    let mut out = Vec::new();
    for tp in &cloud.points {
        let comps = tp.w.components();
        if comps[drop].abs() >= spec.epsilon {
            continue;
        }
        let kept: Vec<f64> = comps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, &v)| v)
            .collect();
        out.push(SlicedPoint {
            x: kept[0],
            y: kept[1],
            z: kept[2],
            tag: tp.tag,
        });
    }
    Ok(out)
}
