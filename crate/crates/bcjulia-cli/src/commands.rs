use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use bcjulia::{
    bc_fixed_points, build_julia_boundary, dendrite_heuristic, iim, iim_bicomplex, seed_in_jxj,
    slice3d, Axis, Bicomplex, BicomplexParam, Classification, GridSpec, IimConfig, IimMode,
    SliceSpec, SlicedPoint, Tag,
};

#[derive(Parser)]
#[command(name = "bcjulia", about = "Complex and bicomplex Julia set point clouds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complex Julia set via the inverse iteration method
    Julia2d(Julia2dArgs),
    /// Bicomplex Julia set piece J x_e J via inverse iteration, sliced to 3D
    #[command(name = "julia3d-iim")]
    Julia3dIim(Julia3dIimArgs),
    /// Full bicomplex Julia boundary (three tagged cartesian pieces), sliced
    #[command(name = "julia3d-boundary")]
    Julia3dBoundary(Julia3dBoundaryArgs),
    /// Bicomplex fixed points with component classifications
    #[command(name = "fixed-points")]
    FixedPoints(FixedPointsArgs),
    /// Grid heuristic for the dendrite property of both components
    #[command(name = "dendrite-check")]
    DendriteCheck(DendriteCheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Random,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Ply,
    Xyz,
}

#[derive(Args)]
struct IimArgs {
    /// Points to record
    #[arg(long = "points", default_value_t = 100_000)]
    points: usize,
    /// Iterates discarded before recording
    #[arg(long = "warmup", default_value_t = 20)]
    warmup: usize,
    /// RNG seed for branch selection
    #[arg(long = "seed", default_value_t = 1)]
    seed: u64,
    /// Branch strategy
    #[arg(long = "mode", value_enum, default_value = "random")]
    mode: ModeArg,
    /// Tree depth (full-tree mode only)
    #[arg(long = "depth")]
    depth: Option<u32>,
}

impl IimArgs {
    fn config(&self) -> Result<IimConfig> {
        let mode = match self.mode {
            ModeArg::Random => IimMode::RandomWalk,
            ModeArg::Tree => IimMode::FullTree {
                depth: self.depth.unwrap_or(16),
            },
        };
        Ok(IimConfig {
            seed: self.seed,
            n_points: self.points,
            warmup: self.warmup,
            mode,
        })
    }
}

#[derive(Args)]
struct GridArgs {
    /// Grid as `NXxNY` or `xmin,xmax,ymin,ymax,nx,ny`
    #[arg(long = "grid", default_value = "401x401")]
    grid: String,
    #[arg(long = "max-iter", default_value_t = 200)]
    max_iter: usize,
}

impl GridArgs {
    fn spec(&self) -> Result<GridSpec> {
        let mut spec = GridSpec::default_figure();
        spec.max_iter = self.max_iter;
        if self.grid.contains(',') {
            let parts: Vec<&str> = self.grid.split(',').collect();
            if parts.len() != 6 {
                bail!("--grid expects 6 comma-separated fields, got {}", parts.len());
            }
            spec.x_min = parse_num(parts[0], "--grid")?;
            spec.x_max = parse_num(parts[1], "--grid")?;
            spec.y_min = parse_num(parts[2], "--grid")?;
            spec.y_max = parse_num(parts[3], "--grid")?;
            spec.nx = parts[4].parse().context("--grid nx")?;
            spec.ny = parts[5].parse().context("--grid ny")?;
        } else if let Some((nx, ny)) = self.grid.split_once('x') {
            spec.nx = nx.parse().context("--grid nx")?;
            spec.ny = ny.parse().context("--grid ny")?;
        } else {
            let n: usize = self.grid.parse().context("--grid")?;
            spec.nx = n;
            spec.ny = n;
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args)]
struct SliceArgs {
    #[arg(long = "epsilon", default_value_t = 0.05)]
    epsilon: f64,
    /// Which real component the 3D cut drops
    #[arg(long = "axis", default_value = "d")]
    axis: String,
}

impl SliceArgs {
    fn spec(&self) -> Result<SliceSpec> {
        let drop_axis = Axis::parse(&self.axis)
            .with_context(|| format!("--axis must be one of a|b|c|d, got `{}`", self.axis))?;
        let spec = SliceSpec {
            drop_axis,
            epsilon: self.epsilon,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args)]
struct OutArgs {
    /// Output basename; extensions are appended per format
    #[arg(long = "out", default_value = "bcjulia-out")]
    out: PathBuf,
    /// Restrict output to a single format (default: csv and ply)
    #[arg(long = "format", value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct Julia2dArgs {
    /// Parameter c as `re` or `re,im`
    #[arg(long = "c", short = 'c', allow_hyphen_values = true)]
    c: String,
    #[command(flatten)]
    iim: IimArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct Julia3dIimArgs {
    /// Parameter c as `a`, `a,b` or `a,b,c,d`
    #[arg(long = "c", short = 'c', allow_hyphen_values = true)]
    c: String,
    #[command(flatten)]
    iim: IimArgs,
    #[command(flatten)]
    slice: SliceArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct Julia3dBoundaryArgs {
    #[arg(long = "c", short = 'c', allow_hyphen_values = true)]
    c: String,
    #[command(flatten)]
    iim: IimArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Total point budget across the three boundary pieces
    #[arg(long = "budget", default_value_t = 300_000)]
    budget: usize,
    #[command(flatten)]
    slice: SliceArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct FixedPointsArgs {
    #[arg(long = "c", short = 'c', allow_hyphen_values = true)]
    c: String,
}

#[derive(Args)]
struct DendriteCheckArgs {
    #[arg(long = "c", short = 'c', allow_hyphen_values = true)]
    c: String,
    #[command(flatten)]
    grid: GridArgs,
}

fn parse_num(s: &str, flag: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .with_context(|| format!("{flag}: cannot parse `{s}` as a number"))?;
    if !v.is_finite() {
        bail!("{flag}: `{s}` is not finite");
    }
    Ok(v)
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => Ok(Complex64::new(parse_num(parts[0], "--c")?, 0.0)),
        2 => Ok(Complex64::new(
            parse_num(parts[0], "--c")?,
            parse_num(parts[1], "--c")?,
        )),
        n => bail!("--c: expected `re` or `re,im`, got {n} components"),
    }
}

fn parse_bicomplex(s: &str) -> Result<Bicomplex> {
    let parts: Vec<&str> = s.split(',').collect();
    let vals: Vec<f64> = parts
        .iter()
        .map(|p| parse_num(p, "--c"))
        .collect::<Result<_>>()?;
    match vals.len() {
        1 => Ok(Bicomplex::from_components(vals[0], 0.0, 0.0, 0.0)),
        2 => Ok(Bicomplex::from_components(vals[0], vals[1], 0.0, 0.0)),
        4 => Ok(Bicomplex::from_components(vals[0], vals[1], vals[2], vals[3])),
        n => bail!("--c: expected 1, 2 or 4 comma-separated components, got {n}"),
    }
}

fn export_all(
    points: &[SlicedPoint],
    out: &OutArgs,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let base = &out.out;
    let formats: Vec<FormatArg> = match out.format {
        Some(f) => vec![f],
        None => vec![FormatArg::Csv, FormatArg::Ply],
    };
    for f in formats {
        let path = match f {
            FormatArg::Csv => base.with_extension("csv"),
            FormatArg::Ply => base.with_extension("ply"),
            FormatArg::Xyz => base.with_extension("xyz"),
        };
        match f {
            FormatArg::Csv => bcjulia::export::export_csv(points, &path)?,
            FormatArg::Ply => bcjulia::export::export_ply(points, &path)?,
            FormatArg::Xyz => bcjulia::export::export_xyz(points, &path)?,
        }
        written.push(path);
    }
    Ok(written)
}

fn write_manifest(
    subcommand: &str,
    params: serde_json::Value,
    seed: u64,
    outputs: Vec<PathBuf>,
    started: Instant,
    base: &Path,
) -> Result<()> {
    let manifest = bcjulia::manifest::RunManifest {
        subcommand: subcommand.to_string(),
        argv: std::env::args().skip(1).collect(),
        params,
        seed,
        rng: bcjulia::dynamics::RNG_ID.to_string(),
        outputs,
        timing_ms: started.elapsed().as_millis() as u64,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let path = base.with_extension("manifest.json");
    manifest.save(&path)?;
    Ok(())
}

pub fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Julia2d(args) => cmd_julia2d(args),
        Command::Julia3dIim(args) => cmd_julia3d_iim(args),
        Command::Julia3dBoundary(args) => cmd_julia3d_boundary(args),
        Command::FixedPoints(args) => cmd_fixed_points(args),
        Command::DendriteCheck(args) => cmd_dendrite_check(args),
    }
}

fn cmd_julia2d(args: Julia2dArgs) -> Result<()> {
    let started = Instant::now();
    let c = parse_complex(&args.c)?;
    let cfg = args.iim.config()?;
    let pts = iim(c, &cfg)?;
    let sliced: Vec<SlicedPoint> = pts
        .iter()
        .map(|z| SlicedPoint {
            x: z.re,
            y: z.im,
            z: 0.0,
            tag: Tag::JxJ,
        })
        .collect();
    let outputs = export_all(&sliced, &args.out)?;
    write_manifest(
        "julia2d",
        serde_json::json!({"c": [c.re, c.im], "iim": cfg}),
        cfg.seed,
        outputs.clone(),
        started,
        &args.out.out,
    )?;
    for p in &outputs {
        println!("wrote {} ({} points)", p.display(), sliced.len());
    }
    Ok(())
}

fn cmd_julia3d_iim(args: Julia3dIimArgs) -> Result<()> {
    let started = Instant::now();
    let c = BicomplexParam::new(parse_bicomplex(&args.c)?);
    let cfg = args.iim.config()?;
    let slice_spec = args.slice.spec()?;
    let cloud = iim_bicomplex(&c, &cfg)?;
    let sliced = slice3d(&cloud, &slice_spec)?;
    let outputs = export_all(&sliced, &args.out)?;
    write_sidecar(&c, &cfg, None, &slice_spec, &outputs)?;
    write_manifest(
        "julia3d-iim",
        serde_json::json!({"c": c.c.components(), "iim": cfg, "slice": slice_spec}),
        cfg.seed,
        outputs.clone(),
        started,
        &args.out.out,
    )?;
    for p in &outputs {
        println!("wrote {} ({} of {} points kept by the cut)", p.display(), sliced.len(), cloud.len());
    }
    Ok(())
}

fn cmd_julia3d_boundary(args: Julia3dBoundaryArgs) -> Result<()> {
    let started = Instant::now();
    let c = BicomplexParam::new(parse_bicomplex(&args.c)?);
    let cfg = args.iim.config()?;
    let grid = args.grid.spec()?;
    let slice_spec = args.slice.spec()?;
    let cloud = build_julia_boundary(&c, &cfg, &grid, args.budget)?;
    let sliced = slice3d(&cloud, &slice_spec)?;
    let outputs = export_all(&sliced, &args.out)?;
    write_sidecar(&c, &cfg, Some(args.budget), &slice_spec, &outputs)?;
    write_manifest(
        "julia3d-boundary",
        serde_json::json!({
            "c": c.c.components(),
            "iim": cfg,
            "grid": grid,
            "budget": args.budget,
            "slice": slice_spec,
        }),
        cfg.seed,
        outputs.clone(),
        started,
        &args.out.out,
    )?;
    let stats = cloud.stats();
    println!(
        "pieces: JxK {} / KxJ {} / JxJ {}",
        stats.jxk_count, stats.kxj_count, stats.jxj_count
    );
    for p in &outputs {
        println!("wrote {} ({} of {} points kept by the cut)", p.display(), sliced.len(), cloud.len());
    }
    Ok(())
}

fn write_sidecar(
    c: &BicomplexParam,
    cfg: &IimConfig,
    budget: Option<usize>,
    slice_spec: &SliceSpec,
    outputs: &[PathBuf],
) -> Result<()> {
    let meta = bcjulia::export::ExportMeta {
        c: c.c.components(),
        seed: cfg.seed,
        rng: bcjulia::dynamics::RNG_ID.to_string(),
        warmup: cfg.warmup,
        n_points: cfg.n_points,
        budget,
        epsilon: Some(slice_spec.epsilon),
        axis: Some(slice_spec.drop_axis.as_str().to_string()),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    for out in outputs {
        meta.write_sidecar(out)?;
    }
    Ok(())
}

fn cmd_fixed_points(args: FixedPointsArgs) -> Result<()> {
    let c = BicomplexParam::new(parse_bicomplex(&args.c)?);
    let fps = bc_fixed_points(&c);
    println!("c = {}", c.c);
    println!("projections: P1(c) = {}, P2(c) = {}", c.c_minus, c.c_plus);
    println!("{} fixed point(s):", fps.len());
    for (i, f) in fps.iter().enumerate() {
        let w = f.point;
        let fw = bcjulia::iterate_forward_bc(&c, w, 1, bcjulia::ForwardRoute::Direct);
        let residual = (fw - w).norm();
        let in_jxj = |cls: Classification| cls != Classification::Attractive;
        println!(
            "  [{i}] {w}\n      component 1: {} (|2z| = {:.6})\n      component 2: {} (|2z| = {:.6})\n      residual = {residual:.3e}, in JxJ: {}",
            f.comp1.class,
            f.comp1.multiplier_mag,
            f.comp2.class,
            f.comp2.multiplier_mag,
            in_jxj(f.comp1.class) && in_jxj(f.comp2.class)
        );
    }
    let seed = seed_in_jxj(&c);
    println!("IIM seed (fixed point in JxJ): {}", seed.point);
    Ok(())
}

fn cmd_dendrite_check(args: DendriteCheckArgs) -> Result<()> {
    let c = BicomplexParam::new(parse_bicomplex(&args.c)?);
    let grid = args.grid.spec()?;
    let (v1, v2) = bcjulia::bicomplex_dynamics::dendrite_heuristic_components(&c, &grid)?;
    let overall = dendrite_heuristic(&c, &grid)?;
    println!("component 1 (c = {}): {}", c.c_minus, v1);
    println!("component 2 (c = {}): {}", c.c_plus, v2);
    println!("verdict: {overall}");
    Ok(())
}
