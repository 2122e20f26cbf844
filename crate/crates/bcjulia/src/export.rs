//! Interchange writers for sliced point clouds: CSV, ASCII PLY and XYZ,
//! plus a JSON metadata sidecar describing the run.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cloud::Tag;
use crate::error::Error;
use crate::slice::SlicedPoint;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// 17 significant digits: enough for an exact f64 round trip.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV with header `x,y,z,tag`.
pub fn export_csv(points: &[SlicedPoint], path: &Path) -> Result<(), Error> {
    let mut out = BufWriter::new(File::create(path).map_err(io_err(path))?);
    (|| {
        writeln!(out, "x,y,z,tag")?;
        for p in points {
            writeln!(
                out,
                "{},{},{},{}",
                fmt_f64(p.x),
                fmt_f64(p.y),
                fmt_f64(p.z),
                p.tag.as_str()
            )?;
        }
        out.flush()
    })()
    .map_err(io_err(path))
}

/// Read back a CSV written by [`export_csv`].
pub fn import_csv(path: &Path) -> Result<Vec<SlicedPoint>, Error> {
    let reader = BufReader::new(File::open(path).map_err(io_err(path))?);
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if lineno == 0 {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::InvalidConfig(format!(
                "{}: malformed CSV line {}",
                path.display(),
                lineno + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| {
                Error::InvalidConfig(format!("{}: bad number on line {}", path.display(), lineno + 1))
            })
        };
        out.push(SlicedPoint {
            x: parse(fields[0])?,
            y: parse(fields[1])?,
            z: parse(fields[2])?,
            tag: Tag::parse(fields[3]).ok_or_else(|| {
                Error::InvalidConfig(format!("{}: bad tag on line {}", path.display(), lineno + 1))
            })?,
        });
    }
    Ok(out)
}

/// ASCII PLY 1.0 with per-vertex uchar RGB from the tag colors.
pub fn export_ply(points: &[SlicedPoint], path: &Path) -> Result<(), Error> {
    let mut out = BufWriter::new(File::create(path).map_err(io_err(path))?);
    (|| {
        writeln!(out, "ply")?;
        writeln!(out, "format ascii 1.0")?;
        writeln!(out, "element vertex {}", points.len())?;
        writeln!(out, "property float x")?;
        writeln!(out, "property float y")?;
        writeln!(out, "property float z")?;
        writeln!(out, "property uchar red")?;
        writeln!(out, "property uchar green")?;
        writeln!(out, "property uchar blue")?;
        writeln!(out, "end_header")?;
        for p in points {
            let [r, g, b] = p.tag.color();
            writeln!(
                out,
                "{} {} {} {} {} {}",
                fmt_f64(p.x),
                fmt_f64(p.y),
                fmt_f64(p.z),
                r,
                g,
                b
            )?;
        }
        out.flush()
    })()
    .map_err(io_err(path))
}

/// Plain whitespace-separated triples.
pub fn export_xyz(points: &[SlicedPoint], path: &Path) -> Result<(), Error> {
    let mut out = BufWriter::new(File::create(path).map_err(io_err(path))?);
    (|| {
        for p in points {
            writeln!(out, "{} {} {}", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(p.z))?;
        }
        out.flush()
    })()
    .map_err(io_err(path))
}

/// Sidecar metadata written next to each exported cloud.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExportMeta {
    /// Parameter `c` as `(a, b, c, d)`.
    pub c: [f64; 4],
    pub seed: u64,
    pub rng: String,
    pub warmup: usize,
    pub n_points: usize,
    pub budget: Option<usize>,
    pub epsilon: Option<f64>,
    pub axis: Option<String>,
    pub version: String,
}

impl ExportMeta {
    /// Write to `<basename>.meta.json` next to `data_path`.
    pub fn write_sidecar(&self, data_path: &Path) -> Result<std::path::PathBuf, Error> {
        let mut meta_path = data_path.to_path_buf();
        let ext = match meta_path.extension().and_then(|e| e.to_str()) {
            Some(e) => format!("{e}.meta.json"),
            None => "meta.json".to_string(),
        };
        meta_path.set_extension(ext);
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        std::fs::write(&meta_path, json).map_err(io_err(&meta_path))?;
        Ok(meta_path)
    }
}
