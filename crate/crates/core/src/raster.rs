//! Projection of joint trajectories onto the three Cartesian planes and
//! rasterization of the colored strokes into trajectory-map images.
//!
//! Every step `i` of a sequence contributes one stroke per joint, drawn from
//! the joint's projected position in frame `i - 1` to its position in frame
//! `i`. Steps are painted in temporal order and later strokes overwrite
//! earlier ones, so the image after step `j` is exactly the image after step
//! `j - 1` with step `j`'s strokes painted on top.

use std::fmt;
use std::io::Cursor;
use std::path::Path;
use std::str::FromStr;

use crate::colorizer::{stroke_color, temporal_position, ColormapBank, EncodingLevel, MagnitudeRange};
use crate::error::{JtmError, Result};
use crate::skeleton::{BodyPart, SkeletonSequence, Vec3};
use crate::trajectory::{compute_trajectories, TrajectorySet};

/// Projection plane. Front keeps (x, y), Top keeps (x, z), Side keeps (z, y);
/// the first coordinate runs right, the second runs up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Plane {
    Front,
    Top,
    Side,
}

impl Plane {
    pub const ALL: [Plane; 3] = [Plane::Front, Plane::Top, Plane::Side];

    pub fn project(self, p: Vec3) -> (f64, f64) {
        match self {
            Plane::Front => (p.x, p.y),
            Plane::Top => (p.x, p.z),
            Plane::Side => (p.z, p.y),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Plane::Front => "front",
            Plane::Top => "top",
            Plane::Side => "side",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Plane {
    type Err = JtmError;

    fn from_str(s: &str) -> Result<Self> {
        Plane::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| JtmError::Config(format!("unknown plane {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanvasConfig {
    pub width: u32,
    pub height: u32,
    /// Fraction of each dimension left empty on both sides.
    pub margin_fraction: f64,
    pub background: [u8; 3],
}

impl Default for CanvasConfig {
    fn default() -> Self {
        CanvasConfig { width: 256, height: 256, margin_fraction: 0.05, background: [0, 0, 0] }
    }
}

impl CanvasConfig {
    pub const MIN_SIDE: u32 = 16;

    pub fn new(width: u32, height: u32, margin_fraction: f64) -> Result<Self> {
        CanvasConfig { width, height, margin_fraction, ..Default::default() }.validated()
    }

    /// Canvas without the minimum-size restriction. Only for tiny test rasters.
    pub fn unchecked(width: u32, height: u32, margin_fraction: f64) -> Self {
        CanvasConfig { width, height, margin_fraction, ..Default::default() }
    }

    pub fn validated(self) -> Result<Self> {
        if self.width < Self::MIN_SIDE || self.height < Self::MIN_SIDE {
            return Err(JtmError::Config(format!(
                "canvas must be at least {0}x{0}, got {1}x{2}",
                Self::MIN_SIDE,
                self.width,
                self.height
            )));
        }
        if !(0.0..0.5).contains(&self.margin_fraction) {
            return Err(JtmError::Config(format!("margin must lie in [0, 0.5), got {}", self.margin_fraction)));
        }
        Ok(self)
    }
}

/// Where speeds are normalized against.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum SpeedNormalization {
    /// Largest speed of the sequence being rendered.
    #[default]
    PerSequence,
    /// Caller-supplied maximum, e.g. one computed over a whole dataset.
    Fixed(f64),
}

/// Everything that decides how a sequence becomes an image.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodingConfig {
    pub level: EncodingLevel,
    pub bank: ColormapBank,
    pub range: MagnitudeRange,
    pub canvas: CanvasConfig,
    pub normalization: SpeedNormalization,
}

impl Default for EncodingConfig {
    fn default() -> Self {
        EncodingConfig {
            level: EncodingLevel::HuePartsSatBright,
            bank: ColormapBank::default(),
            range: MagnitudeRange::default(),
            canvas: CanvasConfig::default(),
            normalization: SpeedNormalization::PerSequence,
        }
    }
}

impl EncodingConfig {
    pub fn with_level(&self, level: EncodingLevel) -> Self {
        EncodingConfig { level, ..self.clone() }
    }
}

/// Uniform-scale map from plane coordinates to pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap2D {
    pub scale: f64,
    pub world_center: (f64, f64),
    pub pixel_center: (f64, f64),
}

impl AffineMap2D {
    /// Pixel position of a plane point; the vertical axis is flipped.
    pub fn apply(&self, (u, v): (f64, f64)) -> (f64, f64) {
        (
            self.pixel_center.0 + self.scale * (u - self.world_center.0),
            self.pixel_center.1 - self.scale * (v - self.world_center.1),
        )
    }
}

/// Fit the bounding box of all projected joints (every frame) into the canvas
/// interior, keeping aspect ratio and centering the box. A box with no extent
/// maps every point to the canvas center.
pub fn fit_transform(seq: &SkeletonSequence, plane: Plane, canvas: &CanvasConfig) -> AffineMap2D {
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for frame in seq.frames() {
        for &p in &frame.joints {
            let (u, v) = plane.project(p);
            lo = (lo.0.min(u), lo.1.min(v));
            hi = (hi.0.max(u), hi.1.max(v));
        }
    }
    let (w, h) = (canvas.width as f64, canvas.height as f64);
    let inner = (w * (1.0 - 2.0 * canvas.margin_fraction), h * (1.0 - 2.0 * canvas.margin_fraction));
    let extent = (hi.0 - lo.0, hi.1 - lo.1);
    let mut scale = f64::INFINITY;
    if extent.0 > 0.0 {
        scale = scale.min(inner.0 / extent.0);
    }
    if extent.1 > 0.0 {
        scale = scale.min(inner.1 / extent.1);
    }
    if !scale.is_finite() {
        scale = 0.0;
    }
    AffineMap2D {
        scale,
        world_center: ((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0),
        pixel_center: (w / 2.0, h / 2.0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImageMeta {
    pub label: Option<u32>,
    pub subject: Option<u32>,
    pub level: EncodingLevel,
}

/// An 8-bit RGB raster, row-major, three bytes per pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JtmImage {
    pub plane: Plane,
    width: u32,
    height: u32,
    pixels: Vec<u8>,
    pub meta: ImageMeta,
}

/// Round to the nearest pixel, halves up. Coordinates are clamped far
/// outside any canvas so integer arithmetic cannot overflow.
fn to_pixel(v: f64) -> i64 {
    const LIMIT: f64 = (1u64 << 40) as f64;
    (v + 0.5).floor().clamp(-LIMIT, LIMIT) as i64
}

impl JtmImage {
    pub fn new(plane: Plane, width: u32, height: u32, background: [u8; 3], meta: ImageMeta) -> Self {
        let pixels = background.repeat(width as usize * height as usize);
        JtmImage { plane, width, height, pixels, meta }
    }

    pub fn blank(plane: Plane, canvas: &CanvasConfig, meta: ImageMeta) -> Self {
        Self::new(plane, canvas.width, canvas.height, canvas.background, meta)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> [u8; 3] {
        let i = 3 * (y as usize * self.width as usize + x as usize);
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    /// Writes the pixel if it lies on the canvas; returns whether it did.
    pub fn put(&mut self, x: i64, y: i64, color: [u8; 3]) -> bool {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return false;
        }
        let i = 3 * (y as usize * self.width as usize + x as usize);
        self.pixels[i..i + 3].copy_from_slice(&color);
        true
    }

    /// Draw a 1-pixel line between the rounded endpoints. Later writes win.
    /// Off-canvas pixels are skipped; strokes with non-finite endpoints are
    /// ignored.
    pub fn draw_stroke(&mut self, p0: (f64, f64), p1: (f64, f64), color: [u8; 3]) {
        if ![p0.0, p0.1, p1.0, p1.1].iter().all(|v| v.is_finite()) {
            return;
        }
        let (w, h) = (self.width as i64, self.height as i64);
        for_each_line_pixel((to_pixel(p0.0), to_pixel(p0.1)), (to_pixel(p1.0), to_pixel(p1.1)), w, h, |x, y| {
            self.put(x, y, color);
        });
    }

    pub fn to_png(&self) -> Vec<u8> {
        let img = image::RgbImage::from_raw(self.width, self.height, self.pixels.clone())
            .expect("buffer matches dimensions");
        let mut out = Cursor::new(Vec::new());
        img.write_to(&mut out, image::ImageFormat::Png).expect("in-memory PNG encoding");
        out.into_inner()
    }

    pub fn write_png(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_png())
    }

    /// Binary PPM (P6).
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }

    /// `<sample_id>_<plane>_<level>.<ext>`
    pub fn file_name(&self, sample_id: &str, ext: &str) -> String {
        format!("{sample_id}_{}_{}.{ext}", self.plane, self.meta.level)
    }
}

/// Bresenham walk from `a` to `b` restricted to the `w` x `h` canvas.
///
/// Along the major axis (x when `|dx| >= |dy|`), the `i`-th pixel's minor
/// offset is `floor((2*i*|d_minor| + |d_major|) / (2*|d_major|))`, i.e. the
/// exact line position rounded half away from the start point. The walk
/// jumps directly to the first on-canvas major coordinate, so far-away
/// endpoints cost nothing.
fn for_each_line_pixel(a: (i64, i64), b: (i64, i64), w: i64, h: i64, mut plot: impl FnMut(i64, i64)) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let x_major = dx.abs() >= dy.abs();
    // (major start, major step, major extent, major canvas size, minor start, minor step, minor extent, minor canvas size)
    let (m0, ms, md, msize, n0, ns, nd, nsize) = if x_major {
        (a.0, dx.signum(), dx.abs(), w, a.1, dy.signum(), dy.abs(), h)
    } else {
        (a.1, dy.signum(), dy.abs(), h, a.0, dx.signum(), dx.abs(), w)
    };
    let emit = |plot: &mut dyn FnMut(i64, i64), major: i64, minor: i64| {
        if minor >= 0 && minor < nsize {
            if x_major {
                plot(major, minor)
            } else {
                plot(minor, major)
            }
        }
    };
    if md == 0 {
        if m0 >= 0 && m0 < msize {
            emit(&mut plot, m0, n0);
        }
        return;
    }
    // step indices i in [0, md] whose major coordinate m0 + ms*i is on canvas
    let (lo, hi) = if ms > 0 { (-m0, msize - 1 - m0) } else { (m0 - (msize - 1), m0) };
    let (i_start, i_end) = (lo.max(0), hi.min(md));
    if i_start > i_end {
        return;
    }
    let two_md = 2 * md as i128;
    let num = 2 * i_start as i128 * nd as i128 + md as i128;
    let mut offset = (num / two_md) as i64;
    let mut err = num % two_md;
    for i in i_start..=i_end {
        emit(&mut plot, m0 + ms * i, n0 + ns * offset);
        err += 2 * nd as i128;
        if err >= two_md {
            err -= two_md;
            offset += 1;
        }
    }
}

/// One drawn stroke, as recorded by [`RenderPlan::strokes_for_step`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeRecord {
    pub step: usize,
    pub joint: usize,
    pub part: BodyPart,
    /// Colormap position of the step.
    pub fraction: f64,
    pub speed: f64,
    pub from: (f64, f64),
    pub to: (f64, f64),
    pub color: [u8; 3],
}

/// A sequence prepared for rendering on one plane: trajectories, speed
/// normalization and the pixel transform are computed once, so any prefix
/// of steps can be drawn incrementally.
#[derive(Debug, Clone)]
pub struct RenderPlan<'a> {
    seq: &'a SkeletonSequence,
    config: &'a EncodingConfig,
    plane: Plane,
    trajectories: TrajectorySet,
    v_max: f64,
    transform: AffineMap2D,
    projected: Vec<Vec<(f64, f64)>>,
}

impl<'a> RenderPlan<'a> {
    pub fn new(seq: &'a SkeletonSequence, plane: Plane, config: &'a EncodingConfig) -> Self {
        let trajectories = compute_trajectories(seq);
        let v_max = match config.normalization {
            SpeedNormalization::PerSequence => trajectories.v_max,
            SpeedNormalization::Fixed(v) => v,
        };
        let transform = fit_transform(seq, plane, &config.canvas);
        let projected = seq
            .frames()
            .iter()
            .map(|f| f.joints.iter().map(|&p| transform.apply(plane.project(p))).collect())
            .collect();
        RenderPlan { seq, config, plane, trajectories, v_max, transform, projected }
    }

    pub fn plane(&self) -> Plane {
        self.plane
    }

    pub fn transform(&self) -> &AffineMap2D {
        &self.transform
    }

    pub fn trajectories(&self) -> &TrajectorySet {
        &self.trajectories
    }

    /// Number of steps, `n - 1`.
    pub fn step_count(&self) -> usize {
        self.trajectories.steps.len()
    }

    pub fn blank(&self) -> JtmImage {
        JtmImage::blank(
            self.plane,
            &self.config.canvas,
            ImageMeta { label: self.seq.label, subject: self.seq.subject, level: self.config.level },
        )
    }

    /// Strokes of step `step` (1-based) in joint order.
    pub fn strokes_for_step(&self, step: usize) -> impl Iterator<Item = StrokeRecord> + '_ {
        let n = self.seq.frame_count();
        let fraction = temporal_position(step, n);
        let traj = &self.trajectories.steps[step - 1];
        let layout = self.seq.layout();
        let cfg = self.config;
        (0..layout.len()).map(move |joint| {
            let part = layout.part_of(joint);
            let speed = traj.speeds[joint];
            let color = stroke_color(part, fraction, speed, self.v_max, cfg.level, &cfg.bank, &cfg.range).quantize();
            StrokeRecord {
                step,
                joint,
                part,
                fraction,
                speed,
                from: self.projected[step - 1][joint],
                to: self.projected[step][joint],
                color,
            }
        })
    }

    /// All strokes in painting order.
    pub fn strokes(&self) -> impl Iterator<Item = StrokeRecord> + '_ {
        (1..=self.step_count()).flat_map(move |s| self.strokes_for_step(s))
    }

    pub fn draw_step(&self, img: &mut JtmImage, step: usize) {
        for s in self.strokes_for_step(step) {
            img.draw_stroke(s.from, s.to, s.color);
        }
    }

    /// Image after painting steps `1..=through`.
    pub fn render_through(&self, through: usize) -> JtmImage {
        let mut img = self.blank();
        for step in 1..=through.min(self.step_count()) {
            self.draw_step(&mut img, step);
        }
        img
    }

    pub fn render(&self) -> JtmImage {
        self.render_through(self.step_count())
    }
}

pub fn render_jtm(seq: &SkeletonSequence, plane: Plane, config: &EncodingConfig) -> JtmImage {
    RenderPlan::new(seq, plane, config).render()
}

/// Front, top and side images, each with its own bounding-box fit.
pub fn render_all_planes(seq: &SkeletonSequence, config: &EncodingConfig) -> [JtmImage; 3] {
    Plane::ALL.map(|p| render_jtm(seq, p, config))
}
