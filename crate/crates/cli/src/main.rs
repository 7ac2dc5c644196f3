use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jtm_core::synth::Generator;
use jtm_core::{CanvasConfig, EncodingConfig, EncodingLevel, MagnitudeRange, Plane, SpeedNormalization};

mod commands;
mod manifest;

#[derive(Parser, Debug)]
#[command(name = "jtm", version, about = "Encode skeleton action sequences as Joint Trajectory Map images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render trajectory maps for one or more sequence files.
    Encode(EncodeArgs),
    /// Cross-subject nearest-neighbor evaluation over a directory of canonical files.
    Eval(EvalArgs),
    /// Write a train/test folder tree of trajectory maps for external training.
    Export(ExportArgs),
    /// Generate seeded synthetic sequences in the canonical format.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneSel {
    One(Plane),
    All,
}

impl PlaneSel {
    pub fn planes(self) -> Vec<Plane> {
        match self {
            PlaneSel::One(p) => vec![p],
            PlaneSel::All => Plane::ALL.to_vec(),
        }
    }
}

fn parse_plane(s: &str) -> Result<PlaneSel, String> {
    if s == "all" {
        return Ok(PlaneSel::All);
    }
    s.parse().map(PlaneSel::One).map_err(|e: jtm_core::JtmError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelSel {
    One(EncodingLevel),
    All,
}

impl LevelSel {
    pub fn levels(self) -> Vec<EncodingLevel> {
        match self {
            LevelSel::One(l) => vec![l],
            LevelSel::All => EncodingLevel::ALL.to_vec(),
        }
    }
}

fn parse_level(s: &str) -> Result<LevelSel, String> {
    if s == "all" {
        return Ok(LevelSel::All);
    }
    s.parse().map(LevelSel::One).map_err(|e: jtm_core::JtmError| e.to_string())
}

fn parse_size(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let w = w.parse().map_err(|_| format!("invalid width in {s:?}"))?;
    let h = h.parse().map_err(|_| format!("invalid height in {s:?}"))?;
    Ok((w, h))
}

fn parse_unit(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

/// Flags shared by every command that renders images.
#[derive(Args, Debug, Clone)]
pub struct RenderArgs {
    /// Canvas size in pixels.
    #[arg(long, value_name = "WxH", default_value = "256x256", value_parser = parse_size)]
    size: (u32, u32),
    /// Empty border on each side, as a fraction of the canvas.
    #[arg(long, value_name = "F", default_value_t = 0.05)]
    margin: f64,
    #[arg(long, default_value_t = 0.0, value_parser = parse_unit)]
    smin: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_unit)]
    smax: f64,
    #[arg(long, default_value_t = 0.0, value_parser = parse_unit)]
    bmin: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_unit)]
    bmax: f64,
    /// Normalize speeds by this fixed maximum instead of each sequence's own.
    #[arg(long, value_name = "SPEED")]
    vmax: Option<f64>,
}

impl RenderArgs {
    pub fn encoding(&self, level: EncodingLevel) -> anyhow::Result<EncodingConfig> {
        let canvas = CanvasConfig::new(self.size.0, self.size.1, self.margin)?;
        let range = MagnitudeRange::new(self.smin, self.smax, self.bmin, self.bmax)?;
        let normalization = match self.vmax {
            Some(v) if v > 0.0 && v.is_finite() => SpeedNormalization::Fixed(v),
            Some(v) => anyhow::bail!("--vmax must be positive, got {v}"),
            None => SpeedNormalization::PerSequence,
        };
        Ok(EncodingConfig { level, canvas, range, normalization, ..Default::default() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Auto,
    Canonical,
    Msrc12,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    /// Sequence files (canonical or MSRC-12 rows).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(short, long, default_value = ".")]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    /// front, top, side or all.
    #[arg(long, default_value = "all", value_parser = parse_plane)]
    plane: PlaneSel,
    /// plain, hue, parts, sat, bright, satbright or all.
    #[arg(long, default_value = "satbright", value_parser = parse_level)]
    level: LevelSel,
    /// Also write binary PPM copies next to the PNGs.
    #[arg(long)]
    ppm: bool,
    /// Report unreadable inputs and continue with the rest.
    #[arg(long)]
    keep_going: bool,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Directory of canonical `.jtm` files with labels and subjects.
    dataset: PathBuf,
    /// `odd-even`, or `subjects TRAIN/TEST` / `subjects TRAIN/VAL/TEST` with
    /// comma lists and ranges, e.g. `subjects 1-4/5/6-10`.
    #[arg(long, num_args = 1..=2, default_values = ["odd-even"])]
    protocol: Vec<String>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Plane to classify on; `all` fuses front, top and side.
    #[arg(long, default_value = "all", value_parser = parse_plane)]
    plane: PlaneSel,
    #[arg(long, default_value = "satbright", value_parser = parse_level)]
    level: LevelSel,
    /// Evaluate all six encoding levels on the front plane.
    #[arg(long)]
    ablation: bool,
    /// Side of the downsampled feature image.
    #[arg(long, default_value_t = 64)]
    feature_side: u32,
    /// Report directory.
    #[arg(short, long, default_value = "report")]
    out: PathBuf,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    dataset: PathBuf,
    #[arg(short, long)]
    out: PathBuf,
    #[arg(long, num_args = 1..=2, default_values = ["odd-even"])]
    protocol: Vec<String>,
    #[arg(long, default_value = "all", value_parser = parse_plane)]
    plane: PlaneSel,
    #[arg(long, default_value = "satbright", value_parser = parse_level)]
    level: LevelSel,
    /// Overwrite existing images.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args, Debug)]
pub struct SynthArgs {
    /// circle-cw, circle-ccw, wave, kick or clap.
    generator: Generator,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Gaussian noise per coordinate, meters.
    #[arg(long, default_value_t = 0.004)]
    noise: f64,
    /// Subjects are cycled 1..=N.
    #[arg(long, default_value_t = 8)]
    subjects: u32,
    #[arg(short, long, default_value = ".")]
    out: PathBuf,
}

fn configure_threads() {
    if let Some(n) = std::env::var("JTM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Encode(a) => commands::encode(&a),
        Command::Eval(a) => commands::eval(&a),
        Command::Export(a) => commands::export(&a),
        Command::Synth(a) => commands::synth(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
