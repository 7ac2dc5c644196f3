//! Skeleton data model and the readers for the on-disk sequence formats.
//!
//! Two inputs are understood:
//!
//! * the canonical text format, a self-describing file that carries joint
//!   names, class label and subject id alongside the frames;
//! * MSRC-12 style streams, one frame per row with `x y z confidence` per
//!   joint. Joint order is given by the caller's [`SkeletonLayout`].

use std::collections::HashSet;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Sub};

use crate::error::{JtmError, Result};

/// Magic token opening every canonical file.
pub const CANONICAL_MAGIC: &str = "JTM1";

/// A point or displacement in sensor space (meters).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Body region a joint belongs to. Each region gets its own colormap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BodyPart {
    Left,
    Right,
    Middle,
}

impl BodyPart {
    pub const ALL: [BodyPart; 3] = [BodyPart::Left, BodyPart::Right, BodyPart::Middle];

    /// Guess the body part from a joint name: a `left` prefix or suffix maps
    /// to [`BodyPart::Left`], `right` to [`BodyPart::Right`], anything else to
    /// [`BodyPart::Middle`].
    pub fn infer_from_name(name: &str) -> BodyPart {
        let lower = name.to_ascii_lowercase();
        let has = |side: &str| {
            lower.starts_with(side)
                || lower.ends_with(side)
                || lower.contains(&format!("_{side}_"))
        };
        if has("left") {
            BodyPart::Left
        } else if has("right") {
            BodyPart::Right
        } else {
            BodyPart::Middle
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JointId {
    pub index: usize,
    pub name: String,
}

/// Ordered joint set of a skeleton together with the body-part assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonLayout {
    joints: Vec<JointId>,
    parts: Vec<BodyPart>,
}

impl SkeletonLayout {
    pub fn new<S: Into<String>>(joints: impl IntoIterator<Item = (S, BodyPart)>) -> Result<Self> {
        let mut ids = Vec::new();
        let mut parts = Vec::new();
        let mut seen = HashSet::new();
        for (index, (name, part)) in joints.into_iter().enumerate() {
            let name = name.into();
            if name.is_empty() {
                return Err(JtmError::Layout(format!("joint {index} has an empty name")));
            }
            if name.chars().any(char::is_whitespace) {
                return Err(JtmError::Layout(format!("joint name {name:?} contains whitespace")));
            }
            if !seen.insert(name.clone()) {
                return Err(JtmError::Layout(format!("duplicate joint name {name:?}")));
            }
            ids.push(JointId { index, name });
            parts.push(part);
        }
        if ids.is_empty() {
            return Err(JtmError::Layout("layout needs at least one joint".into()));
        }
        Ok(SkeletonLayout { joints: ids, parts })
    }

    /// Build a layout from names alone, inferring body parts with
    /// [`BodyPart::infer_from_name`].
    pub fn from_names<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(names.into_iter().map(|n| {
            let n = n.as_ref();
            (n.to_string(), BodyPart::infer_from_name(n))
        }))
    }

    /// Same joints and parts, but in the given name order. Used to match the
    /// column order of a dataset stream.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(JtmError::Layout(format!(
                "reorder list has {} names, layout has {} joints",
                order.len(),
                self.len()
            )));
        }
        let mut joints = Vec::with_capacity(order.len());
        for name in order {
            let name = name.as_ref();
            let idx = self
                .index_of(name)
                .ok_or_else(|| JtmError::Layout(format!("unknown joint {name:?}")))?;
            joints.push((name.to_string(), self.parts[idx]));
        }
        Self::new(joints)
    }

    pub fn len(&self) -> usize {
        self.joints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.joints.is_empty()
    }

    pub fn joints(&self) -> &[JointId] {
        &self.joints
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.joints.iter().map(|j| j.name.as_str())
    }

    pub fn part_of(&self, index: usize) -> BodyPart {
        self.parts[index]
    }

    pub fn part_of_name(&self, name: &str) -> Option<BodyPart> {
        self.index_of(name).map(|i| self.parts[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.joints.iter().position(|j| j.name == name)
    }

    pub fn joints_in(&self, part: BodyPart) -> impl Iterator<Item = &JointId> {
        self.joints
            .iter()
            .zip(&self.parts)
            .filter(move |(_, p)| **p == part)
            .map(|(j, _)| j)
    }
}

/// Joint names of the 20-joint Kinect v1 skeleton, in the sensor's native order.
pub const KINECT20_NAMES: [&str; 20] = [
    "hip_center",
    "torso",
    "neck",
    "head",
    "left_shoulder",
    "left_elbow",
    "left_wrist",
    "left_hand",
    "right_shoulder",
    "right_elbow",
    "right_wrist",
    "right_hand",
    "left_hip",
    "left_knee",
    "left_ankle",
    "left_foot",
    "right_hip",
    "right_knee",
    "right_ankle",
    "right_foot",
];

/// The 20-joint layout with eight left-side limb joints, eight right-side
/// limb joints and four trunk joints (head, neck, torso, hip center).
pub fn default_layout_20() -> SkeletonLayout {
    SkeletonLayout::from_names(KINECT20_NAMES).expect("static layout is valid")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub joints: Vec<Vec3>,
}

impl Frame {
    pub fn new(joints: Vec<Vec3>) -> Self {
        Frame { joints }
    }
}

/// One recorded action: a layout plus at least two frames of joint positions.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonSequence {
    layout: SkeletonLayout,
    frames: Vec<Frame>,
    pub label: Option<u32>,
    pub subject: Option<u32>,
}

impl SkeletonSequence {
    pub fn new(
        layout: SkeletonLayout,
        frames: Vec<Frame>,
        label: Option<u32>,
        subject: Option<u32>,
    ) -> Result<Self> {
        if frames.len() < 2 {
            return Err(JtmError::TooShort { frames: frames.len() });
        }
        for (i, f) in frames.iter().enumerate() {
            if f.joints.len() != layout.len() {
                return Err(JtmError::Frame {
                    frame: i,
                    msg: format!("has {} joints, layout has {}", f.joints.len(), layout.len()),
                });
            }
            if let Some(k) = f.joints.iter().position(|p| !p.is_finite()) {
                return Err(JtmError::Frame {
                    frame: i,
                    msg: format!("joint {k} has a non-finite coordinate"),
                });
            }
        }
        Ok(SkeletonSequence { layout, frames, label, subject })
    }

    pub fn layout(&self) -> &SkeletonLayout {
        &self.layout
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn joint_count(&self) -> usize {
        self.layout.len()
    }

    /// Apply `f` to every joint position, keeping layout and metadata.
    pub fn map_positions(&self, mut f: impl FnMut(Vec3) -> Vec3) -> SkeletonSequence {
        let frames = self
            .frames
            .iter()
            .map(|fr| Frame::new(fr.joints.iter().map(|&p| f(p)).collect()))
            .collect();
        SkeletonSequence { layout: self.layout.clone(), frames, label: self.label, subject: self.subject }
    }

    /// Frames in reverse temporal order.
    pub fn reversed(&self) -> SkeletonSequence {
        let mut frames = self.frames.clone();
        frames.reverse();
        SkeletonSequence { layout: self.layout.clone(), frames, label: self.label, subject: self.subject }
    }

    /// The first `count` frames (`count >= 2`).
    pub fn truncated(&self, count: usize) -> Result<SkeletonSequence> {
        let count = count.min(self.frames.len());
        SkeletonSequence::new(self.layout.clone(), self.frames[..count].to_vec(), self.label, self.subject)
    }
}

fn opt_u32_field(key: &str, value: &str, line: usize) -> Result<Option<u32>> {
    if value == "-" {
        return Ok(None);
    }
    value.parse::<u32>().map(Some).map_err(|_| JtmError::Format {
        line,
        msg: format!("{key} must be a non-negative integer or '-', got {value:?}"),
    })
}

fn parse_f64(token: &str, line: usize) -> Result<f64> {
    token.parse::<f64>().map_err(|_| JtmError::Parse { line, token: token.to_string() })
}

fn text_lines(bytes: &[u8]) -> Result<Vec<&str>> {
    let text = std::str::from_utf8(bytes).map_err(|e| JtmError::Format {
        line: 1,
        msg: format!("input is not UTF-8: {e}"),
    })?;
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    Ok(lines)
}

struct Header {
    m: usize,
    n: usize,
    label: Option<u32>,
    subject: Option<u32>,
}

fn parse_header(line: &str) -> Result<Header> {
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(CANONICAL_MAGIC) => {}
        other => {
            return Err(JtmError::Format {
                line: 1,
                msg: format!("expected {CANONICAL_MAGIC:?} magic, found {:?}", other.unwrap_or("")),
            })
        }
    }
    let (mut m, mut n, mut label, mut subject) = (None, None, None, None);
    for tok in tokens {
        let (key, value) = tok.split_once('=').ok_or_else(|| JtmError::Format {
            line: 1,
            msg: format!("expected key=value, found {tok:?}"),
        })?;
        let count = |v: &str| {
            v.parse::<usize>().map_err(|_| JtmError::Format {
                line: 1,
                msg: format!("{key} must be a non-negative integer, got {v:?}"),
            })
        };
        let dup = match key {
            "m" => m.replace(count(value)?).is_some(),
            "n" => n.replace(count(value)?).is_some(),
            "label" => label.replace(opt_u32_field(key, value, 1)?).is_some(),
            "subject" => subject.replace(opt_u32_field(key, value, 1)?).is_some(),
            _ => {
                return Err(JtmError::Format { line: 1, msg: format!("unknown header key {key:?}") })
            }
        };
        if dup {
            return Err(JtmError::Format { line: 1, msg: format!("duplicate header key {key:?}") });
        }
    }
    let m = m.ok_or_else(|| JtmError::Format { line: 1, msg: "missing m=<joints>".into() })?;
    let n = n.ok_or_else(|| JtmError::Format { line: 1, msg: "missing n=<frames>".into() })?;
    if m == 0 {
        return Err(JtmError::Format { line: 1, msg: "m must be at least 1".into() });
    }
    Ok(Header { m, n, label: label.flatten(), subject: subject.flatten() })
}

/// Parse a sequence in the canonical text format.
///
/// ```text
/// JTM1 m=<joints> n=<frames> label=<int|-> subject=<int|->
/// <name_1> ... <name_m>
/// x1 y1 z1 x2 y2 z2 ...        (n lines, 3m values each)
/// ```
///
/// Line numbers in errors are 1-based.
pub fn parse_canonical(bytes: &[u8]) -> Result<SkeletonSequence> {
    let lines = text_lines(bytes)?;
    let header = parse_header(lines.first().copied().unwrap_or(""))?;
    if header.n < 2 {
        return Err(JtmError::TooShort { frames: header.n });
    }
    let names_line = lines.get(1).ok_or_else(|| JtmError::Format {
        line: 2,
        msg: "missing joint name line".into(),
    })?;
    let names: Vec<&str> = names_line.split_whitespace().collect();
    if names.len() != header.m {
        return Err(JtmError::Validation {
            line: 2,
            msg: format!("header declares m={} joints, name line has {}", header.m, names.len()),
        });
    }
    let layout = SkeletonLayout::from_names(&names).map_err(|e| JtmError::Validation {
        line: 2,
        msg: e.to_string(),
    })?;

    let body = &lines[2..];
    if body.len() != header.n {
        return Err(JtmError::Format {
            line: 3 + body.len().min(header.n),
            msg: format!("header declares n={} frames, found {} frame lines", header.n, body.len()),
        });
    }
    let width = 3 * header.m;
    // `n` is untrusted; the frame-count check below rejects mismatches
    let mut frames = Vec::with_capacity(header.n.min(1 << 16));
    for (i, raw) in body.iter().enumerate() {
        let line = i + 3;
        let values = raw
            .split_whitespace()
            .map(|t| parse_f64(t, line))
            .collect::<Result<Vec<f64>>>()?;
        if values.len() != width {
            return Err(JtmError::Validation {
                line,
                msg: format!("expected {width} values (3 x {} joints), found {}", header.m, values.len()),
            });
        }
        frames.push(frame_from_values(&values, 3, line)?);
    }
    SkeletonSequence::new(layout, frames, header.label, header.subject)
}

fn frame_from_values(values: &[f64], stride: usize, line: usize) -> Result<Frame> {
    let joints: Vec<Vec3> = values
        .chunks_exact(stride)
        .map(|c| Vec3::new(c[0], c[1], c[2]))
        .collect();
    if let Some(k) = joints.iter().position(|p| !p.is_finite()) {
        return Err(JtmError::Validation {
            line,
            msg: format!("joint {k} has a non-finite coordinate"),
        });
    }
    Ok(Frame::new(joints))
}

/// Write a sequence in the canonical text format. Floats use the shortest
/// representation that parses back to the same bits.
pub fn serialize_canonical(seq: &SkeletonSequence) -> String {
    let opt = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{CANONICAL_MAGIC} m={} n={} label={} subject={}",
        seq.joint_count(),
        seq.frame_count(),
        opt(seq.label),
        opt(seq.subject)
    );
    let names: Vec<&str> = seq.layout().names().collect();
    out.push_str(&names.join(" "));
    out.push('\n');
    for frame in seq.frames() {
        let mut first = true;
        for p in &frame.joints {
            for v in [p.x, p.y, p.z] {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{v}");
            }
        }
        out.push('\n');
    }
    out
}

/// Parse an MSRC-12 style stream: one frame per row, `x y z confidence` for
/// every joint of `layout` in layout order. Confidence values are dropped.
/// Blank rows are skipped.
pub fn parse_msrc12_stream(bytes: &[u8], layout: &SkeletonLayout) -> Result<SkeletonSequence> {
    let lines = text_lines(bytes)?;
    let width = 4 * layout.len();
    let mut frames = Vec::new();
    for (i, raw) in lines.iter().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let values = raw
            .split_whitespace()
            .map(|t| parse_f64(t, line))
            .collect::<Result<Vec<f64>>>()?;
        if values.len() != width {
            return Err(JtmError::Validation {
                line,
                msg: format!("expected {width} values (4 x {} joints), found {}", layout.len(), values.len()),
            });
        }
        frames.push(frame_from_values(&values, 4, line)?);
    }
    SkeletonSequence::new(layout.clone(), frames, None, None)
}

/// True when the bytes start with the canonical magic token.
pub fn looks_canonical(bytes: &[u8]) -> bool {
    let start = bytes.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(bytes.len());
    bytes[start..].starts_with(CANONICAL_MAGIC.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeros_row(count: usize) -> String {
        vec!["0"; count].join(" ")
    }

    #[test]
    fn canonical_three_frames_two_joints() {
        let src = "JTM1 m=2 n=3 label=4 subject=2\na b\n0 0 0 1 1 1\n1 2 3 4 5 6\n-1 -2 -3 0.5 0.25 0.125\n";
        let seq = parse_canonical(src.as_bytes()).unwrap();
        assert_eq!(seq.frame_count(), 3);
        assert_eq!(seq.joint_count(), 2);
        assert_eq!(seq.label, Some(4));
        assert_eq!(seq.subject, Some(2));
        assert_eq!(seq.frames()[1].joints[1], Vec3::new(4.0, 5.0, 6.0));
        assert_eq!(seq.frames()[2].joints[0], Vec3::new(-1.0, -2.0, -3.0));
    }

    #[test]
    fn canonical_short_line_cites_line_number() {
        let src = "JTM1 m=2 n=3 label=- subject=-\na b\n0 0 0 1 1 1\n0 0 0 1 1\n0 0 0 1 1 1\n";
        match parse_canonical(src.as_bytes()) {
            Err(JtmError::Validation { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn canonical_single_frame_is_too_short() {
        let src = format!("JTM1 m=20 n=1 label=- subject=-\n{}\n{}\n", KINECT20_NAMES.join(" "), zeros_row(60));
        assert_eq!(parse_canonical(src.as_bytes()), Err(JtmError::TooShort { frames: 1 }));
    }

    #[test]
    fn canonical_header_errors() {
        for bad in [
            "",
            "JTM2 m=2 n=3",
            "JTM1 m=2",
            "JTM1 n=3",
            "JTM1 m=x n=3",
            "JTM1 m=0 n=3",
            "JTM1 m=2 n=3 color=red",
            "JTM1 m=2 m=2 n=3",
            "JTM1 m=2 n=3 label=abc",
            "JTM1 m=2 n=3 subject",
        ] {
            let err = parse_canonical(format!("{bad}\na b\n").as_bytes()).unwrap_err();
            assert!(matches!(err, JtmError::Format { line: 1, .. }), "{bad:?} gave {err:?}");
        }
    }

    #[test]
    fn canonical_frame_count_mismatch() {
        let src = "JTM1 m=1 n=3\nhead\n0 0 0\n1 1 1\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Format { .. })));
        let src = "JTM1 m=1 n=2\nhead\n0 0 0\n1 1 1\n2 2 2\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Format { .. })));
        let src = "JTM1 m=1 n=18446744073709551615\nhead\n0 0 0\n1 1 1\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Format { .. })));
    }

    #[test]
    fn canonical_rejects_non_finite_and_garbage() {
        let src = "JTM1 m=1 n=2\nhead\n0 0 0\n1 inf 1\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Validation { line: 4, .. })));
        let src = "JTM1 m=1 n=2\nhead\n0 0 0\n1 one 1\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Parse { line: 4, .. })));
        let src = "JTM1 m=2 n=2\nhead head\n0 0 0 0 0 0\n1 1 1 1 1 1\n";
        assert!(matches!(parse_canonical(src.as_bytes()), Err(JtmError::Validation { line: 2, .. })));
    }

    #[test]
    fn canonical_roundtrip_is_bit_exact() {
        let src = "JTM1 m=2 n=2 label=1 subject=-\nleft_hand head\n0.1 -0 1e-300 3.141592653589793 2 -7.25\n1 2 3 4 5 6\n";
        let seq = parse_canonical(src.as_bytes()).unwrap();
        let text = serialize_canonical(&seq);
        let back = parse_canonical(text.as_bytes()).unwrap();
        for (a, b) in seq.frames().iter().zip(back.frames()) {
            for (p, q) in a.joints.iter().zip(&b.joints) {
                assert_eq!(p.x.to_bits(), q.x.to_bits());
                assert_eq!(p.y.to_bits(), q.y.to_bits());
                assert_eq!(p.z.to_bits(), q.z.to_bits());
            }
        }
        assert_eq!(serialize_canonical(&back), text);
        assert_eq!(back.layout().part_of(0), BodyPart::Left);
    }

    #[test]
    fn msrc_zero_rows() {
        let layout = default_layout_20();
        let src = format!("{}\n{}\n", zeros_row(80), zeros_row(80));
        let seq = parse_msrc12_stream(src.as_bytes(), &layout).unwrap();
        assert_eq!(seq.frame_count(), 2);
        assert!(seq.frames().iter().all(|f| f.joints.iter().all(|&p| p == Vec3::ZERO)));
    }

    #[test]
    fn msrc_wrong_arity() {
        let layout = default_layout_20();
        let src = format!("{}\n{}\n", zeros_row(80), zeros_row(79));
        assert!(matches!(
            parse_msrc12_stream(src.as_bytes(), &layout),
            Err(JtmError::Validation { line: 2, .. })
        ));
    }

    #[test]
    fn msrc_drops_confidence() {
        let layout = default_layout_20();
        let mut row = vec!["0".to_string(); 80];
        row[20] = "1".into();
        row[21] = "2".into();
        row[22] = "2".into();
        row[23] = "0.9".into();
        let src = format!("{}\n{}\n", row.join(" "), zeros_row(80));
        let seq = parse_msrc12_stream(src.as_bytes(), &layout).unwrap();
        assert_eq!(seq.frames()[0].joints[5], Vec3::new(1.0, 2.0, 2.0));
    }

    #[test]
    fn msrc_non_numeric() {
        let layout = default_layout_20();
        let mut row = vec!["0"; 80];
        row[3] = "n/a";
        let src = format!("{}\n{}\n", zeros_row(80), row.join(" "));
        assert!(matches!(parse_msrc12_stream(src.as_bytes(), &layout), Err(JtmError::Parse { line: 2, .. })));
    }

    #[test]
    fn default_layout_partition() {
        let layout = default_layout_20();
        assert_eq!(layout.len(), 20);
        assert_eq!(layout.part_of_name("left_wrist"), Some(BodyPart::Left));
        assert_eq!(layout.part_of_name("right_foot"), Some(BodyPart::Right));
        assert_eq!(layout.part_of_name("head"), Some(BodyPart::Middle));
        assert_eq!(layout.joints_in(BodyPart::Left).count(), 8);
        assert_eq!(layout.joints_in(BodyPart::Right).count(), 8);
        let middle: Vec<&str> = layout.joints_in(BodyPart::Middle).map(|j| j.name.as_str()).collect();
        assert_eq!(middle, ["hip_center", "torso", "neck", "head"]);
    }

    #[test]
    fn layout_reorder_keeps_parts() {
        let layout = default_layout_20();
        let mut names: Vec<&str> = KINECT20_NAMES.to_vec();
        names.reverse();
        let r = layout.reordered(&names).unwrap();
        assert_eq!(r.index_of("right_foot"), Some(0));
        assert_eq!(r.part_of(0), BodyPart::Right);
        assert!(layout.reordered(&["head"]).is_err());
    }

    #[test]
    fn layout_rejects_bad_names() {
        assert!(SkeletonLayout::from_names(Vec::<&str>::new()).is_err());
        assert!(SkeletonLayout::from_names(["a", "a"]).is_err());
        assert!(SkeletonLayout::from_names(["a", ""]).is_err());
    }

    #[test]
    fn part_inference() {
        assert_eq!(BodyPart::infer_from_name("ElbowLeft"), BodyPart::Left);
        assert_eq!(BodyPart::infer_from_name("hand_right"), BodyPart::Right);
        assert_eq!(BodyPart::infer_from_name("spine"), BodyPart::Middle);
    }
}
