//! Seeded synthetic action generators.
//!
//! Each generator animates two to four joints of the 20-joint skeleton over a
//! static rest pose, with per-subject body scale, per-sample jitter of
//! amplitude, tempo and frame count, and additive Gaussian noise on every
//! joint. Output depends only on the generator, subject, seed and sample
//! index.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{JtmError, Result};
use crate::eval::Sample;
use crate::skeleton::{default_layout_20, Frame, SkeletonSequence, Vec3, KINECT20_NAMES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Right hand draws a clockwise circle in the frontal plane.
    CircleCw,
    /// Same circle, counter-clockwise.
    CircleCcw,
    /// Right hand waves side to side above the head.
    Wave,
    /// Right leg kicks forward and returns.
    Kick,
    /// Both hands meet in front of the chest, repeatedly.
    Clap,
}

impl Generator {
    pub const ALL: [Generator; 5] =
        [Generator::CircleCw, Generator::CircleCcw, Generator::Wave, Generator::Kick, Generator::Clap];

    pub fn name(self) -> &'static str {
        match self {
            Generator::CircleCw => "circle-cw",
            Generator::CircleCcw => "circle-ccw",
            Generator::Wave => "wave",
            Generator::Kick => "kick",
            Generator::Clap => "clap",
        }
    }

    /// Class label written into generated files.
    pub fn label(self) -> u32 {
        self as u32
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = JtmError;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| JtmError::Config(format!("unknown generator {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthParams {
    /// Standard deviation of the per-coordinate Gaussian noise, meters.
    pub noise: f64,
    /// Number of distinct subjects; sample `i` gets subject `i % subjects + 1`.
    pub subjects: u32,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams { noise: 0.004, subjects: 8 }
    }
}

const REST_POSE: [[f64; 3]; 20] = [
    [0.0, 1.0, 0.0],      // hip_center
    [0.0, 1.25, 0.0],     // torso
    [0.0, 1.5, 0.0],      // neck
    [0.0, 1.65, 0.0],     // head
    [0.18, 1.45, 0.0],    // left_shoulder
    [0.22, 1.2, 0.0],     // left_elbow
    [0.24, 0.98, 0.0],    // left_wrist
    [0.25, 0.9, 0.0],     // left_hand
    [-0.18, 1.45, 0.0],   // right_shoulder
    [-0.22, 1.2, 0.0],    // right_elbow
    [-0.24, 0.98, 0.0],   // right_wrist
    [-0.25, 0.9, 0.0],    // right_hand
    [0.1, 0.95, 0.0],     // left_hip
    [0.11, 0.5, 0.0],     // left_knee
    [0.12, 0.08, 0.0],    // left_ankle
    [0.12, 0.03, -0.08],  // left_foot
    [-0.1, 0.95, 0.0],    // right_hip
    [-0.11, 0.5, 0.0],    // right_knee
    [-0.12, 0.08, 0.0],   // right_ankle
    [-0.12, 0.03, -0.08], // right_foot
];

fn joint(name: &str) -> usize {
    KINECT20_NAMES.iter().position(|n| *n == name).expect("known joint")
}

fn v(p: [f64; 3]) -> Vec3 {
    Vec3::new(p[0], p[1], p[2])
}

/// Per-sample random parameters, drawn in a fixed order.
struct Variation {
    scale: f64,
    amplitude: f64,
    tempo: f64,
    phase: f64,
    frames: usize,
    offset: Vec3,
}

impl Variation {
    fn draw(subject: u32, rng: &mut ChaCha8Rng) -> Self {
        let subject_scale = 0.9 + 0.03 * ((subject * 5) % 8) as f64;
        Variation {
            scale: subject_scale * rng.random_range(0.97..1.03),
            amplitude: rng.random_range(0.85..1.15),
            tempo: rng.random_range(0.9..1.1),
            phase: rng.random_range(-0.25..0.25),
            frames: rng.random_range(40..=60),
            offset: Vec3::new(rng.random_range(-0.3..0.3), rng.random_range(-0.05..0.05), rng.random_range(1.8..2.6)),
        }
    }
}

/// Pose of every joint at normalized time `t` in `[0, 1]`, before scaling.
fn pose(gen: Generator, t: f64, var: &Variation) -> [Vec3; 20] {
    let mut p = REST_POSE.map(v);
    let a = var.amplitude;
    let rs = p[joint("right_shoulder")];
    // with `shoulder` the elbow follows the hand; without, it stays put
    let set_arm = |p: &mut [Vec3; 20], side: &str, shoulder: Option<Vec3>, hand: Vec3| {
        let elbow_at = joint(&format!("{side}_elbow"));
        if let Some(shoulder) = shoulder {
            p[elbow_at] = shoulder + (hand - shoulder) * 0.5 + Vec3::new(0.0, -0.06, 0.04);
        }
        let wrist = hand + (p[elbow_at] - hand) * 0.15;
        p[joint(&format!("{side}_wrist"))] = wrist;
        p[joint(&format!("{side}_hand"))] = hand;
    };
    match gen {
        Generator::CircleCw | Generator::CircleCcw => {
            let dir = if gen == Generator::CircleCw { -1.0 } else { 1.0 };
            let angle = FRAC_PI_2 + var.phase + dir * TAU * t;
            let center = Vec3::new(rs.x - 0.12, 1.35, -0.3);
            let r = 0.2 * a;
            let hand = center + Vec3::new(r * angle.cos(), r * angle.sin(), 0.0);
            set_arm(&mut p, "right", Some(rs), hand);
        }
        Generator::Wave => {
            let cycles = 2.5 * var.tempo;
            let sway = 0.15 * a * (TAU * cycles * t + var.phase).sin();
            let hand = Vec3::new(rs.x - 0.12 + sway, 1.82, -0.05);
            set_arm(&mut p, "right", Some(rs), hand);
        }
        Generator::Kick => {
            let lift = (std::f64::consts::PI * t).sin().powf(var.tempo);
            let knee = p[joint("right_knee")] + Vec3::new(0.0, 0.25 * a * lift, -0.3 * a * lift);
            let ankle = p[joint("right_ankle")] + Vec3::new(0.0, 0.35 * a * lift, -0.55 * a * lift);
            p[joint("right_knee")] = knee;
            p[joint("right_ankle")] = ankle;
            p[joint("right_foot")] = ankle + Vec3::new(0.0, -0.05 + 0.04 * lift, -0.08);
        }
        Generator::Clap => {
            let claps = 3.0 * var.tempo;
            let open = 0.5 * (1.0 + (TAU * claps * t + var.phase).cos());
            let sep = 0.04 + 0.26 * a * open;
            set_arm(&mut p, "left", None, Vec3::new(sep, 1.25, -0.3));
            set_arm(&mut p, "right", None, Vec3::new(-sep, 1.25, -0.3));
        }
    }
    p
}

/// One sequence from `gen` for `subject`, consuming randomness from `rng`.
pub fn generate(gen: Generator, subject: u32, rng: &mut ChaCha8Rng, params: &SynthParams) -> SkeletonSequence {
    let var = Variation::draw(subject, rng);
    let noise = Normal::new(0.0, params.noise.max(0.0)).expect("finite noise level");
    let frames = (0..var.frames)
        .map(|i| {
            let t = i as f64 / (var.frames - 1) as f64;
            let joints = pose(gen, t, &var)
                .iter()
                .map(|&p| {
                    let jitter = if params.noise > 0.0 {
                        Vec3::new(noise.sample(rng), noise.sample(rng), noise.sample(rng))
                    } else {
                        Vec3::ZERO
                    };
                    p * var.scale + var.offset + jitter
                })
                .collect();
            Frame::new(joints)
        })
        .collect();
    SkeletonSequence::new(default_layout_20(), frames, Some(gen.label()), Some(subject))
        .expect("generated sequences are valid")
}

/// Independent RNG for sample `index` of `gen` under `seed`.
pub fn sample_rng(gen: Generator, seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((gen as u64) << 40) | index);
    rng
}

/// `count` samples with subjects cycling `1..=params.subjects`.
pub fn generate_batch(gen: Generator, count: usize, seed: u64, params: &SynthParams) -> Vec<SkeletonSequence> {
    let subjects = params.subjects.max(1);
    (0..count)
        .map(|i| {
            let subject = (i as u32 % subjects) + 1;
            generate(gen, subject, &mut sample_rng(gen, seed, i as u64), params)
        })
        .collect()
}

/// Every generator, `per_class` samples each, ids `<generator>_<index>`.
pub fn synthetic_suite(per_class: usize, seed: u64, params: &SynthParams) -> Vec<Sample> {
    Generator::ALL
        .iter()
        .flat_map(|&g| {
            generate_batch(g, per_class, seed, params)
                .into_iter()
                .enumerate()
                .map(move |(i, sequence)| Sample { id: format!("{}_{i:03}", g.name()), sequence })
        })
        .collect()
}
