//! Colormaps and the HSV stroke-color encodings.
//!
//! A stroke's color is built in two stages. A colormap lookup at the step's
//! temporal position gives the base color (one map for all joints, or one
//! per body part). Joint speed then optionally overrides the HSV saturation
//! and/or value channel of that base color with a linear function of the
//! normalized speed.
//!
//! Colors stay in `f64` (0..=255 per channel) until the rasterizer writes a
//! pixel; [`Rgb::quantize`] is the only place that rounds to 8 bits.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{JtmError, Result};
use crate::skeleton::BodyPart;
use crate::trajectory::normalized_speed;

/// Unquantized RGB color, channels in `0.0..=255.0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rgb(pub [f64; 3]);

impl Rgb {
    pub const BLACK: Rgb = Rgb([0.0, 0.0, 0.0]);
    pub const WHITE: Rgb = Rgb([255.0, 255.0, 255.0]);

    pub fn from_u8(c: [u8; 3]) -> Rgb {
        Rgb([c[0] as f64, c[1] as f64, c[2] as f64])
    }

    /// Round half up to 8 bits, clamping to the valid range.
    pub fn quantize(self) -> [u8; 3] {
        self.0.map(quantize_channel)
    }
}

/// Channel values whose exact value is a half (e.g. 255 * 5/6 at step 1 of
/// 3) often arrive a few ulps low after interpolation and HSV round trips;
/// the slack keeps those ties rounding up.
const TIE_SLACK: f64 = 1e-9;

pub fn quantize_channel(v: f64) -> u8 {
    (v + 0.5 + TIE_SLACK).floor().clamp(0.0, 255.0) as u8
}

/// Hue in degrees `[0, 360)`, saturation and value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hsv {
    pub h: f64,
    pub s: f64,
    pub v: f64,
}

/// Hexcone RGB to HSV. Achromatic colors get hue 0.
pub fn rgb_to_hsv(c: Rgb) -> Hsv {
    let [r, g, b] = c.0.map(|x| x / 255.0);
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let chroma = max - min;
    let h = if chroma == 0.0 {
        0.0
    } else if max == r {
        60.0 * ((g - b) / chroma).rem_euclid(6.0)
    } else if max == g {
        60.0 * ((b - r) / chroma + 2.0)
    } else {
        60.0 * ((r - g) / chroma + 4.0)
    };
    let s = if max == 0.0 { 0.0 } else { chroma / max };
    Hsv { h: if h >= 360.0 { h - 360.0 } else { h }, s, v: max }
}

/// Hexcone HSV to RGB.
pub fn hsv_to_rgb(c: Hsv) -> Rgb {
    let chroma = c.v * c.s;
    let hp = c.h.rem_euclid(360.0) / 60.0;
    let x = chroma * (1.0 - (hp.rem_euclid(2.0) - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (chroma, x, 0.0),
        1 => (x, chroma, 0.0),
        2 => (0.0, chroma, x),
        3 => (0.0, x, chroma),
        4 => (x, 0.0, chroma),
        _ => (chroma, 0.0, x),
    };
    let m = c.v - chroma;
    Rgb([(r + m) * 255.0, (g + m) * 255.0, (b + m) * 255.0])
}

/// Piecewise-linear colormap over `[0, 1]`, interpolated in RGB.
#[derive(Debug, Clone, PartialEq)]
pub struct Colormap {
    anchors: Vec<(f64, Rgb)>,
    reversed: bool,
}

impl Colormap {
    pub fn new(anchors: Vec<(f64, [f64; 3])>) -> Result<Self> {
        if anchors.len() < 2 {
            return Err(JtmError::Config("colormap needs at least two anchors".into()));
        }
        if anchors[0].0 != 0.0 || anchors[anchors.len() - 1].0 != 1.0 {
            return Err(JtmError::Config("colormap anchors must start at 0 and end at 1".into()));
        }
        if anchors.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(JtmError::Config("colormap anchor positions must strictly increase".into()));
        }
        if anchors.iter().any(|(_, c)| c.iter().any(|v| !(0.0..=255.0).contains(v))) {
            return Err(JtmError::Config("colormap anchor channels must lie in 0..=255".into()));
        }
        Ok(Colormap { anchors: anchors.into_iter().map(|(p, c)| (p, Rgb(c))).collect(), reversed: false })
    }

    /// Blue through cyan, yellow and orange to red.
    pub fn jet() -> Self {
        Colormap::new(vec![
            (0.0, [0.0, 0.0, 128.0]),
            (0.125, [0.0, 0.0, 255.0]),
            (0.375, [0.0, 255.0, 255.0]),
            (0.625, [255.0, 255.0, 0.0]),
            (0.875, [255.0, 0.0, 0.0]),
            (1.0, [128.0, 0.0, 0.0]),
        ])
        .expect("jet anchors are valid")
    }

    /// Light gray (211, 211, 211) fading linearly to black.
    pub fn gray_to_black() -> Self {
        Colormap::new(vec![(0.0, [211.0; 3]), (1.0, [0.0; 3])]).expect("gray anchors are valid")
    }

    /// The same map read backwards: `reversed().lookup(x) == lookup(1 - x)`.
    pub fn reversed(&self) -> Self {
        Colormap { anchors: self.anchors.clone(), reversed: !self.reversed }
    }

    pub fn anchors(&self) -> &[(f64, Rgb)] {
        &self.anchors
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn lookup(&self, x: f64) -> Rgb {
        let x = if self.reversed { 1.0 - x } else { x };
        self.lookup_forward(x.clamp(0.0, 1.0))
    }

    fn lookup_forward(&self, x: f64) -> Rgb {
        // first segment whose right end reaches x
        let seg = self.anchors.windows(2).find(|w| x <= w[1].0).unwrap_or_else(|| {
            let n = self.anchors.len();
            &self.anchors[n - 2..]
        });
        let ((p0, Rgb(c0)), (p1, Rgb(c1))) = (seg[0], seg[1]);
        let t = (x - p0) / (p1 - p0);
        Rgb(std::array::from_fn(|i| c0[i] + t * (c1[i] - c0[i])))
    }
}

/// The three body-part colormaps.
#[derive(Debug, Clone, PartialEq)]
pub struct ColormapBank {
    /// Left body part; also the single map used below [`EncodingLevel::HueParts`].
    pub c1: Colormap,
    /// Right body part.
    pub c2: Colormap,
    /// Middle body part.
    pub c3: Colormap,
}

impl Default for ColormapBank {
    fn default() -> Self {
        let jet = Colormap::jet();
        ColormapBank { c2: jet.reversed(), c1: jet, c3: Colormap::gray_to_black() }
    }
}

impl ColormapBank {
    pub fn for_part(&self, part: BodyPart) -> &Colormap {
        match part {
            BodyPart::Left => &self.c1,
            BodyPart::Right => &self.c2,
            BodyPart::Middle => &self.c3,
        }
    }

    /// Plain-text description of the anchors, one line per anchor.
    pub fn to_table(&self) -> String {
        let mut out = String::from("map\tpart\treversed\tposition\tr\tg\tb\n");
        for (name, part, map) in [("c1", "left", &self.c1), ("c2", "right", &self.c2), ("c3", "middle", &self.c3)] {
            for (p, Rgb([r, g, b])) in map.anchors() {
                let _ = writeln!(out, "{name}\t{part}\t{}\t{p}\t{r}\t{g}\t{b}", map.is_reversed());
            }
        }
        out
    }
}

/// The six encoding schemes, from plain white trajectories up to body-part
/// colormaps with speed-modulated saturation and brightness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EncodingLevel {
    Plain,
    Hue,
    HueParts,
    HuePartsSat,
    HuePartsBright,
    HuePartsSatBright,
}

impl EncodingLevel {
    pub const ALL: [EncodingLevel; 6] = [
        EncodingLevel::Plain,
        EncodingLevel::Hue,
        EncodingLevel::HueParts,
        EncodingLevel::HuePartsSat,
        EncodingLevel::HuePartsBright,
        EncodingLevel::HuePartsSatBright,
    ];

    /// Short name used on the command line and in file names.
    pub fn tag(self) -> &'static str {
        match self {
            EncodingLevel::Plain => "plain",
            EncodingLevel::Hue => "hue",
            EncodingLevel::HueParts => "parts",
            EncodingLevel::HuePartsSat => "sat",
            EncodingLevel::HuePartsBright => "bright",
            EncodingLevel::HuePartsSatBright => "satbright",
        }
    }

    /// Trajectory notation used in ablation tables.
    pub fn notation(self) -> &'static str {
        match self {
            EncodingLevel::Plain => "t",
            EncodingLevel::Hue => "C_t",
            EncodingLevel::HueParts => "MC_t",
            EncodingLevel::HuePartsSat => "MC_s_t",
            EncodingLevel::HuePartsBright => "MC_b_t",
            EncodingLevel::HuePartsSatBright => "MC_sb_t",
        }
    }

    pub fn modulates_saturation(self) -> bool {
        matches!(self, EncodingLevel::HuePartsSat | EncodingLevel::HuePartsSatBright)
    }

    pub fn modulates_brightness(self) -> bool {
        matches!(self, EncodingLevel::HuePartsBright | EncodingLevel::HuePartsSatBright)
    }
}

impl fmt::Display for EncodingLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for EncodingLevel {
    type Err = JtmError;

    fn from_str(s: &str) -> Result<Self> {
        EncodingLevel::ALL
            .into_iter()
            .find(|l| l.tag() == s || l.notation() == s)
            .ok_or_else(|| JtmError::Config(format!("unknown encoding level {s:?}")))
    }
}

/// Output ranges of the saturation and brightness encodings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagnitudeRange {
    pub s_min: f64,
    pub s_max: f64,
    pub b_min: f64,
    pub b_max: f64,
}

impl Default for MagnitudeRange {
    fn default() -> Self {
        MagnitudeRange { s_min: 0.0, s_max: 1.0, b_min: 0.0, b_max: 1.0 }
    }
}

impl MagnitudeRange {
    pub fn new(s_min: f64, s_max: f64, b_min: f64, b_max: f64) -> Result<Self> {
        let r = MagnitudeRange { s_min, s_max, b_min, b_max };
        if [s_min, s_max, b_min, b_max].iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(JtmError::Config("saturation/brightness bounds must lie in [0, 1]".into()));
        }
        if s_min > s_max || b_min > b_max {
            return Err(JtmError::Config("range minimum exceeds maximum".into()));
        }
        Ok(r)
    }
}

/// Colormap position of step `q` (1-based) in an `n`-frame sequence.
///
/// Panics if `q` is outside `1..=n-1`.
pub fn temporal_position(q: usize, n: usize) -> f64 {
    assert!(n >= 2 && (1..n).contains(&q), "step {q} out of range for {n} frames");
    q as f64 / (n - 1) as f64
}

pub fn base_color(part: BodyPart, fraction: f64, level: EncodingLevel, bank: &ColormapBank) -> Rgb {
    match level {
        EncodingLevel::Plain => Rgb::WHITE,
        EncodingLevel::Hue => bank.c1.lookup(fraction),
        _ => bank.for_part(part).lookup(fraction),
    }
}

pub fn saturation_scale(v: f64, v_max: f64, range: &MagnitudeRange) -> f64 {
    (normalized_speed(v, v_max) * (range.s_max - range.s_min) + range.s_min).clamp(range.s_min, range.s_max)
}

pub fn brightness_scale(v: f64, v_max: f64, range: &MagnitudeRange) -> f64 {
    (normalized_speed(v, v_max) * (range.b_max - range.b_min) + range.b_min).clamp(range.b_min, range.b_max)
}

/// Final color of one stroke. Levels without speed modulation return the
/// base color unchanged; otherwise the modulated channels replace the base
/// color's saturation and/or value.
pub fn stroke_color(
    part: BodyPart,
    fraction: f64,
    v: f64,
    v_max: f64,
    level: EncodingLevel,
    bank: &ColormapBank,
    range: &MagnitudeRange,
) -> Rgb {
    let base = base_color(part, fraction, level, bank);
    let (sat, bright) = (level.modulates_saturation(), level.modulates_brightness());
    if !sat && !bright {
        return base;
    }
    let mut hsv = rgb_to_hsv(base);
    if sat {
        hsv.s = saturation_scale(v, v_max, range);
    }
    if bright {
        hsv.v = brightness_scale(v, v_max, range);
    }
    hsv_to_rgb(hsv)
}
