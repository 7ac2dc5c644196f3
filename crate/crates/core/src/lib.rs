//! Joint Trajectory Maps: color images that encode 3D skeleton motion.
//!
//! A skeleton sequence is turned into per-step joint displacements
//! ([`trajectory`]), each displacement becomes a colored stroke whose hue
//! tracks time and body part and whose saturation / brightness track speed
//! ([`colorizer`]), and the strokes are projected onto the front, top and
//! side planes and painted in order ([`raster`]). [`eval`] measures how well
//! the resulting images separate action classes with a nearest-neighbor
//! classifier; [`synth`] produces seeded test actions.

pub mod colorizer;
pub mod error;
pub mod eval;
pub mod raster;
pub mod skeleton;
pub mod synth;
pub mod trajectory;

pub use colorizer::{
    base_color, brightness_scale, hsv_to_rgb, rgb_to_hsv, saturation_scale, stroke_color, temporal_position, Colormap,
    ColormapBank, EncodingLevel, Hsv, MagnitudeRange, Rgb,
};
pub use error::{JtmError, Result};
pub use eval::{
    evaluate, evaluate_split, featurize, fuse_scores, knn_scores, make_split, predict, EvalConfig, EvalReport,
    FeatureVector, PlaneMode, Sample, Split, SplitProtocol, TrainingSet,
};
pub use raster::{
    fit_transform, render_all_planes, render_jtm, AffineMap2D, CanvasConfig, EncodingConfig, JtmImage, Plane,
    RenderPlan, SpeedNormalization, StrokeRecord,
};
pub use skeleton::{
    default_layout_20, parse_canonical, parse_msrc12_stream, serialize_canonical, BodyPart, Frame, JointId,
    SkeletonLayout, SkeletonSequence, Vec3,
};
pub use trajectory::{compute_trajectories, joint_speed, TrajectorySet, TrajectoryStep};
