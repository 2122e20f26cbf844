//! Tagged 4D point clouds and their summary statistics.

use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;

/// Which cartesian piece of the boundary decomposition produced a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tag {
    /// Julia x filled set (`J x_e K`).
    JxK,
    /// Filled set x Julia (`K x_e J`).
    KxJ,
    /// Julia x Julia (`J x_e J`), the main structure.
    JxJ,
}

impl Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tag::JxK => "JxK",
            Tag::KxJ => "KxJ",
            Tag::JxJ => "JxJ",
        }
    }

    pub fn parse(s: &str) -> Option<Tag> {
        match s {
            "JxK" => Some(Tag::JxK),
            "KxJ" => Some(Tag::KxJ),
            "JxJ" => Some(Tag::JxJ),
            _ => None,
        }
    }

    /// RGB used by the PLY exporter; `J x_e J` is black.
    pub fn color(&self) -> [u8; 3] {
        match self {
            Tag::JxJ => [0, 0, 0],
            Tag::JxK => [200, 30, 30],
            Tag::KxJ => [30, 30, 200],
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TaggedPoint {
    pub w: Bicomplex,
    pub tag: Tag,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PointCloud4D {
    pub points: Vec<TaggedPoint>,
}

impl PointCloud4D {
    pub fn new(points: Vec<TaggedPoint>) -> Self {
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn filter_tag(&self, tag: Tag) -> PointCloud4D {
        PointCloud4D {
            points: self.points.iter().copied().filter(|p| p.tag == tag).collect(),
        }
    }

    pub fn extend(&mut self, other: PointCloud4D) {
        self.points.extend(other.points);
    }

    pub fn stats(&self) -> CloudStats {
        let mut s = CloudStats::default();
        s.count = self.points.len();
        for tp in &self.points {
            let comps = tp.w.components();
            for (axis, &v) in comps.iter().enumerate() {
                s.min[axis] = s.min[axis].min(v);
                s.max[axis] = s.max[axis].max(v);
            }
            let n = tp.w.norm();
            s.mean_norm += n;
            s.max_norm = s.max_norm.max(n);
            match tp.tag {
                Tag::JxK => s.jxk_count += 1,
                Tag::KxJ => s.kxj_count += 1,
                Tag::JxJ => s.jxj_count += 1,
            }
        }
        if s.count > 0 {
            s.mean_norm /= s.count as f64;
        } else {
            s.min = [f64::NAN; 4];
            s.max = [f64::NAN; 4];
        }
        s
    }
}

/// Aggregate summary of a cloud: count, per-axis bounding box over
/// `(a, b, c, d)`, norm statistics and the tag histogram.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CloudStats {
    pub count: usize,
    pub min: [f64; 4],
    pub max: [f64; 4],
    pub mean_norm: f64,
    pub max_norm: f64,
    pub jxk_count: usize,
    pub kxj_count: usize,
    pub jxj_count: usize,
}

impl Default for CloudStats {
    fn default() -> Self {
        Self {
            count: 0,
            min: [f64::INFINITY; 4],
            max: [f64::NEG_INFINITY; 4],
            mean_norm: 0.0,
            max_norm: 0.0,
            jxk_count: 0,
            kxj_count: 0,
            jxj_count: 0,
        }
    }
}
