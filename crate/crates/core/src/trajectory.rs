//! Per-step joint displacements and speeds.

use crate::skeleton::{SkeletonSequence, Vec3};

/// Displacements of every joint between frame `step_index - 1` and frame
/// `step_index` (0-based frames, so steps are numbered `1..=n-1`).
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryStep {
    pub step_index: usize,
    pub start_points: Vec<Vec3>,
    pub deltas: Vec<Vec3>,
    pub speeds: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySet {
    pub steps: Vec<TrajectoryStep>,
    /// Largest speed over every joint and step of the sequence.
    pub v_max: f64,
}

impl TrajectorySet {
    /// Speed normalized by `v_max`, or 0 for a fully static sequence.
    pub fn normalized(&self, speed: f64) -> f64 {
        normalized_speed(speed, self.v_max)
    }
}

pub fn normalized_speed(speed: f64, v_max: f64) -> f64 {
    if v_max > 0.0 {
        (speed / v_max).clamp(0.0, 1.0)
    } else {
        0.0
    }
}

/// Euclidean distance between consecutive positions of one joint.
pub fn joint_speed(p_next: Vec3, p: Vec3) -> f64 {
    (p_next - p).norm()
}

pub fn compute_trajectories(seq: &SkeletonSequence) -> TrajectorySet {
    let frames = seq.frames();
    let mut v_max = 0.0f64;
    let steps = frames
        .windows(2)
        .enumerate()
        .map(|(i, pair)| {
            let (a, b) = (&pair[0].joints, &pair[1].joints);
            let deltas: Vec<Vec3> = a.iter().zip(b).map(|(&p, &q)| q - p).collect();
            let speeds: Vec<f64> = a.iter().zip(b).map(|(&p, &q)| joint_speed(q, p)).collect();
            v_max = speeds.iter().copied().fold(v_max, f64::max);
            TrajectoryStep { step_index: i + 1, start_points: a.clone(), deltas, speeds }
        })
        .collect();
    TrajectorySet { steps, v_max }
}
