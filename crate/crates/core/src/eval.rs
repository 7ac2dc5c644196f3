//! Cross-subject evaluation of trajectory-map encodings with a deterministic
//! nearest-neighbor classifier over downsampled pixels.
//!
//! Each plane gets its own classifier; per-plane class scores are averaged
//! (late fusion) and the arg-max is the prediction. All ties resolve to the
//! lowest index, so a fixed dataset and configuration always yield the same
//! report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::colorizer::EncodingLevel;
use crate::error::{JtmError, Result};
use crate::raster::{render_jtm, EncodingConfig, JtmImage, Plane};
use crate::skeleton::SkeletonSequence;

/// How subjects are assigned to train / validation / test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitProtocol {
    /// Odd subject ids train, even subject ids test.
    OddEvenSubjects,
    /// Explicit subject lists. Samples of unlisted subjects are left out.
    SubjectLists { train: BTreeSet<u32>, validation: BTreeSet<u32>, test: BTreeSet<u32> },
}

impl SplitProtocol {
    pub fn subject_lists(
        train: impl IntoIterator<Item = u32>,
        validation: impl IntoIterator<Item = u32>,
        test: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let (train, validation, test): (BTreeSet<u32>, BTreeSet<u32>, BTreeSet<u32>) =
            (train.into_iter().collect(), validation.into_iter().collect(), test.into_iter().collect());
        for (a, b, what) in [(&train, &test, "train/test"), (&train, &validation, "train/validation"), (&validation, &test, "validation/test")] {
            if let Some(s) = a.intersection(b).next() {
                return Err(JtmError::Split(format!("subject {s} appears in both {what} lists")));
            }
        }
        Ok(SplitProtocol::SubjectLists { train, validation, test })
    }

    /// Parse `odd-even`, or subject lists `TRAIN/TEST` / `TRAIN/VAL/TEST`
    /// where each list is comma-separated ids or `a-b` ranges, e.g.
    /// `1-4/5/6-10` or `1,3,5,7/2,4,6,8`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if matches!(spec, "odd-even" | "oddeven" | "odd_even") {
            return Ok(SplitProtocol::OddEvenSubjects);
        }
        let parts: Vec<&str> = spec.split('/').collect();
        let lists = parts.iter().map(|p| parse_id_list(p)).collect::<Result<Vec<_>>>()?;
        match lists.as_slice() {
            [train, test] => Self::subject_lists(train.clone(), [], test.clone()),
            [train, val, test] => Self::subject_lists(train.clone(), val.clone(), test.clone()),
            _ => Err(JtmError::Split(format!("expected odd-even, TRAIN/TEST or TRAIN/VAL/TEST, got {spec:?}"))),
        }
    }
}

/// Widest `a-b` range accepted in a subject list.
const MAX_RANGE: u32 = 100_000;

fn parse_id_list(s: &str) -> Result<Vec<u32>> {
    let bad = || JtmError::Split(format!("invalid subject list {s:?}"));
    let mut ids = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match item.split_once('-') {
            Some((a, b)) => {
                let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b || b - a >= MAX_RANGE {
                    return Err(bad());
                }
                ids.extend(a..=b);
            }
            None => ids.push(item.parse().map_err(|_| bad())?),
        }
    }
    Ok(ids)
}

/// Sample indices per partition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Split {
    pub train: Vec<usize>,
    pub validation: Vec<usize>,
    pub test: Vec<usize>,
}

/// Partition samples by subject id.
pub fn make_split_by_subject(subjects: &[Option<u32>], protocol: &SplitProtocol) -> Result<Split> {
    let mut split = Split::default();
    for (i, s) in subjects.iter().enumerate() {
        let s = s.ok_or_else(|| JtmError::Split(format!("sample {i} has no subject id")))?;
        let bucket = match protocol {
            SplitProtocol::OddEvenSubjects => Some(if s % 2 == 1 { &mut split.train } else { &mut split.test }),
            SplitProtocol::SubjectLists { train, validation, test } => {
                if train.contains(&s) {
                    Some(&mut split.train)
                } else if validation.contains(&s) {
                    Some(&mut split.validation)
                } else if test.contains(&s) {
                    Some(&mut split.test)
                } else {
                    None
                }
            }
        };
        if let Some(b) = bucket {
            b.push(i);
        }
    }
    if split.train.is_empty() {
        return Err(JtmError::Split("training partition is empty".into()));
    }
    if split.test.is_empty() {
        return Err(JtmError::Split("test partition is empty".into()));
    }
    Ok(split)
}

pub fn make_split(samples: &[SkeletonSequence], protocol: &SplitProtocol) -> Result<Split> {
    let subjects: Vec<Option<u32>> = samples.iter().map(|s| s.subject).collect();
    make_split_by_subject(&subjects, protocol)
}

/// Downsampled, `[0, 1]`-normalized pixels of one image, flattened row-major
/// with interleaved RGB.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub values: Vec<f32>,
    pub plane: Plane,
}

/// Box-filter `img` down to `side` x `side`. Output pixel `(ox, oy)` averages
/// source columns `ox*W/side .. (ox+1)*W/side` (integer division) and the
/// matching rows.
pub fn featurize(img: &JtmImage, side: u32) -> Result<FeatureVector> {
    let (w, h) = (img.width() as usize, img.height() as usize);
    let side_us = side as usize;
    if side == 0 || side_us > w || side_us > h {
        return Err(JtmError::Config(format!("feature side {side} must be in 1..={}", w.min(h))));
    }
    let px = img.pixels();
    let mut values = Vec::with_capacity(3 * side_us * side_us);
    for oy in 0..side_us {
        let (y0, y1) = (oy * h / side_us, (oy + 1) * h / side_us);
        for ox in 0..side_us {
            let (x0, x1) = (ox * w / side_us, (ox + 1) * w / side_us);
            let mut acc = [0u32; 3];
            for y in y0..y1 {
                let row = &px[3 * (y * w + x0)..3 * (y * w + x1)];
                for c in row.chunks_exact(3) {
                    acc[0] += c[0] as u32;
                    acc[1] += c[1] as u32;
                    acc[2] += c[2] as u32;
                }
            }
            let count = ((y1 - y0) * (x1 - x0)) as f32 * 255.0;
            values.extend(acc.iter().map(|&a| a as f32 / count));
        }
    }
    Ok(FeatureVector { values, plane: img.plane })
}

/// Frozen training matrix for one plane.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingSet {
    vectors: Vec<Vec<f32>>,
    classes: Vec<usize>,
    num_classes: usize,
}

impl TrainingSet {
    pub fn new(vectors: Vec<Vec<f32>>, classes: Vec<usize>, num_classes: usize) -> Result<Self> {
        if vectors.len() != classes.len() {
            return Err(JtmError::Classifier("vector and class counts differ".into()));
        }
        if let Some(c) = classes.iter().find(|&&c| c >= num_classes) {
            return Err(JtmError::Classifier(format!("class {c} out of range for {num_classes} classes")));
        }
        if let Some(first) = vectors.first() {
            if vectors.iter().any(|v| v.len() != first.len()) {
                return Err(JtmError::Classifier("training vectors differ in length".into()));
            }
        }
        Ok(TrainingSet { vectors, classes, num_classes })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }
}

fn squared_distance(a: &[f32], b: &[f32]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| ((x - y) as f64).powi(2)).sum()
}

/// Fraction of the `k` nearest training vectors (Euclidean distance, ties to
/// the lower training index) that belong to each class.
pub fn knn_scores(query: &[f32], train: &TrainingSet, k: usize) -> Result<Vec<f64>> {
    if train.is_empty() {
        return Err(JtmError::Classifier("training set is empty".into()));
    }
    if k == 0 || k > train.len() {
        return Err(JtmError::Classifier(format!("k must be in 1..={}, got {k}", train.len())));
    }
    if query.len() != train.vectors[0].len() {
        return Err(JtmError::Classifier(format!(
            "query has {} features, training vectors have {}",
            query.len(),
            train.vectors[0].len()
        )));
    }
    let mut ranked: Vec<(f64, usize)> =
        train.vectors.iter().enumerate().map(|(i, v)| (squared_distance(query, v), i)).collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut scores = vec![0.0; train.num_classes];
    for &(_, i) in &ranked[..k] {
        scores[train.classes[i]] += 1.0;
    }
    scores.iter_mut().for_each(|s| *s /= k as f64);
    Ok(scores)
}

/// Element-wise mean of the three per-plane score vectors.
pub fn fuse_scores(front: &[f64], top: &[f64], side: &[f64]) -> Result<Vec<f64>> {
    if front.len() != top.len() || front.len() != side.len() {
        return Err(JtmError::Classifier(format!(
            "score vectors differ in length: {}, {}, {}",
            front.len(),
            top.len(),
            side.len()
        )));
    }
    Ok(front.iter().zip(top).zip(side).map(|((a, b), c)| (a + b + c) / 3.0).collect())
}

/// Index of the largest score; the lowest index wins ties.
pub fn predict(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate() {
        if s > scores[best] {
            best = i;
        }
    }
    best
}

/// Which planes feed the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlaneMode {
    /// Average of the front, top and side classifiers.
    Fused,
    Single(Plane),
}

impl PlaneMode {
    pub fn planes(self) -> Vec<Plane> {
        match self {
            PlaneMode::Fused => Plane::ALL.to_vec(),
            PlaneMode::Single(p) => vec![p],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    pub encoding: EncodingConfig,
    pub k: usize,
    /// Side of the square downsampled feature image.
    pub feature_side: u32,
    pub mode: PlaneMode,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { encoding: EncodingConfig::default(), k: 1, feature_side: 64, mode: PlaneMode::Fused }
    }
}

/// A labeled dataset entry. `id` names the sample in reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub id: String,
    pub sequence: SkeletonSequence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRecord {
    pub id: String,
    #[serde(rename = "true")]
    pub true_label: u32,
    pub predicted: u32,
    /// Fused scores in the order of [`EvalReport::classes`].
    pub scores: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub level: EncodingLevel,
    pub mode: PlaneMode,
    /// Class labels; row/column order of `confusion`.
    pub classes: Vec<u32>,
    pub overall_accuracy: f64,
    /// Only classes with at least one test sample.
    pub per_class_accuracy: BTreeMap<u32, f64>,
    /// `confusion[true][predicted]` counts.
    pub confusion: Vec<Vec<usize>>,
    pub per_plane_accuracy: BTreeMap<Plane, f64>,
    pub records: Vec<SampleRecord>,
}

impl Serialize for Plane {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl Serialize for EncodingLevel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl EvalReport {
    pub fn test_count(&self) -> usize {
        self.records.len()
    }

    /// Aligned plain-text summary: accuracies followed by the confusion matrix.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            PlaneMode::Fused => "fused (front+top+side)".to_string(),
            PlaneMode::Single(p) => format!("{p} only"),
        };
        let _ = writeln!(out, "level:    {} ({})", self.level.tag(), self.level.notation());
        let _ = writeln!(out, "planes:   {mode}");
        let _ = writeln!(out, "test:     {} samples", self.test_count());
        let _ = writeln!(out, "accuracy: {:.4}", self.overall_accuracy);
        for (p, a) in &self.per_plane_accuracy {
            let _ = writeln!(out, "  {:<6} {:.4}", p.tag(), a);
        }
        let _ = writeln!(out, "\nper-class accuracy:");
        for (c, a) in &self.per_class_accuracy {
            let _ = writeln!(out, "  class {c:>4}  {a:.4}");
        }
        let width = self
            .classes
            .iter()
            .map(|c| c.to_string().len())
            .chain(self.confusion.iter().flatten().map(|n| n.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(4);
        let _ = writeln!(out, "\nconfusion (rows = true, columns = predicted):");
        let _ = write!(out, "{:>w$}", "", w = width);
        for c in &self.classes {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
        for (c, row) in self.classes.iter().zip(&self.confusion) {
            let _ = write!(out, "{c:>width$}");
            for n in row {
                let _ = write!(out, " {n:>width$}");
            }
            out.push('\n');
        }
        out
    }

    /// Confusion matrix as CSV, first row and column holding class labels.
    pub fn confusion_csv(&self) -> String {
        let mut out = String::from("true\\predicted");
        for c in &self.classes {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
        for (c, row) in self.classes.iter().zip(&self.confusion) {
            let _ = write!(out, "{c}");
            for n in row {
                let _ = write!(out, ",{n}");
            }
            out.push('\n');
        }
        out
    }

    /// One JSON object per test sample: id, true, predicted, fused scores.
    pub fn records_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

fn class_index(samples: &[Sample]) -> Result<(Vec<u32>, Vec<usize>)> {
    let labels = samples
        .iter()
        .map(|s| s.sequence.label.ok_or_else(|| JtmError::Split(format!("sample {:?} has no class label", s.id))))
        .collect::<Result<Vec<u32>>>()?;
    let classes: Vec<u32> = labels.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let idx = labels.iter().map(|l| classes.binary_search(l).expect("label is present")).collect();
    Ok((classes, idx))
}

/// Render and featurize `indices` on one plane, in parallel, keeping order.
fn features_for(samples: &[Sample], indices: &[usize], plane: Plane, cfg: &EvalConfig) -> Result<Vec<Vec<f32>>> {
    indices
        .par_iter()
        .map(|&i| {
            let img = render_jtm(&samples[i].sequence, plane, &cfg.encoding);
            featurize(&img, cfg.feature_side).map(|f| f.values)
        })
        .collect()
}

/// Evaluate on a precomputed split. Train and test indices may overlap.
pub fn evaluate_split(samples: &[Sample], split: &Split, cfg: &EvalConfig) -> Result<EvalReport> {
    let (classes, class_of) = class_index(samples)?;
    let num_classes = classes.len();
    if split.train.is_empty() || split.test.is_empty() {
        return Err(JtmError::Split("train and test partitions must be non-empty".into()));
    }
    let planes = cfg.mode.planes();
    // per plane: scores for each test sample
    let mut plane_scores: Vec<(Plane, Vec<Vec<f64>>)> = Vec::with_capacity(planes.len());
    for &plane in &planes {
        let train = TrainingSet::new(
            features_for(samples, &split.train, plane, cfg)?,
            split.train.iter().map(|&i| class_of[i]).collect(),
            num_classes,
        )?;
        let test = features_for(samples, &split.test, plane, cfg)?;
        let scores = test.par_iter().map(|q| knn_scores(q, &train, cfg.k)).collect::<Result<Vec<_>>>()?;
        plane_scores.push((plane, scores));
    }

    let mut confusion = vec![vec![0usize; num_classes]; num_classes];
    let mut per_plane_hits: BTreeMap<Plane, usize> = planes.iter().map(|&p| (p, 0)).collect();
    let mut records = Vec::with_capacity(split.test.len());
    for (t, &i) in split.test.iter().enumerate() {
        let truth = class_of[i];
        for (plane, scores) in &plane_scores {
            if predict(&scores[t]) == truth {
                *per_plane_hits.get_mut(plane).expect("plane tracked") += 1;
            }
        }
        let fused = match plane_scores.as_slice() {
            [(_, f), (_, tp), (_, s)] => fuse_scores(&f[t], &tp[t], &s[t])?,
            [(_, only)] => only[t].clone(),
            _ => unreachable!("one or three planes"),
        };
        let pred = predict(&fused);
        confusion[truth][pred] += 1;
        records.push(SampleRecord {
            id: samples[i].id.clone(),
            true_label: classes[truth],
            predicted: classes[pred],
            scores: fused,
        });
    }

    let total = split.test.len();
    let correct: usize = (0..num_classes).map(|c| confusion[c][c]).sum();
    let per_class_accuracy = (0..num_classes)
        .filter_map(|c| {
            let n: usize = confusion[c].iter().sum();
            (n > 0).then(|| (classes[c], confusion[c][c] as f64 / n as f64))
        })
        .collect();
    Ok(EvalReport {
        level: cfg.encoding.level,
        mode: cfg.mode,
        classes,
        overall_accuracy: correct as f64 / total as f64,
        per_class_accuracy,
        confusion,
        per_plane_accuracy: per_plane_hits.into_iter().map(|(p, h)| (p, h as f64 / total as f64)).collect(),
        records,
    })
}

/// Split by `protocol`, then evaluate.
pub fn evaluate(samples: &[Sample], protocol: &SplitProtocol, cfg: &EvalConfig) -> Result<EvalReport> {
    let subjects: Vec<Option<u32>> = samples.iter().map(|s| s.sequence.subject).collect();
    let split = make_split_by_subject(&subjects, protocol)?;
    evaluate_split(samples, &split, cfg)
}

/// Front-plane accuracy for each of the six encoding levels.
pub fn ablation(samples: &[Sample], protocol: &SplitProtocol, cfg: &EvalConfig) -> Result<Vec<EvalReport>> {
    EncodingLevel::ALL
        .iter()
        .map(|&level| {
            let cfg = EvalConfig {
                encoding: cfg.encoding.with_level(level),
                mode: PlaneMode::Single(Plane::Front),
                ..cfg.clone()
            };
            evaluate(samples, protocol, &cfg)
        })
        .collect()
}

/// Six-row text table of an [`ablation`] run.
pub fn ablation_table(reports: &[EvalReport]) -> String {
    let mut out = String::from("level      scheme    accuracy\n");
    for r in reports {
        let _ = writeln!(out, "{:<10} {:<9} {:.4}", r.level.tag(), r.level.notation(), r.overall_accuracy);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::ImageMeta;

    fn subjects(ids: &[u32]) -> Vec<Option<u32>> {
        ids.iter().map(|&s| Some(s)).collect()
    }

    #[test]
    fn odd_even_split() {
        let subj = subjects(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let s = make_split_by_subject(&subj, &SplitProtocol::OddEvenSubjects).unwrap();
        let ids = |v: &[usize]| v.iter().map(|&i| subj[i].unwrap()).collect::<Vec<_>>();
        assert_eq!(ids(&s.train), [1, 3, 5, 7]);
        assert_eq!(ids(&s.test), [2, 4, 6, 8]);
        assert!(s.validation.is_empty());
    }

    #[test]
    fn subject_list_split() {
        let subj = subjects(&(1..=10).collect::<Vec<_>>());
        let p = SplitProtocol::parse("1-4/5/6-10").unwrap();
        let s = make_split_by_subject(&subj, &p).unwrap();
        assert_eq!(s.train, [0, 1, 2, 3]);
        assert_eq!(s.validation, [4]);
        assert_eq!(s.test, [5, 6, 7, 8, 9]);
    }

    #[test]
    fn split_errors() {
        assert!(make_split_by_subject(&subjects(&[3, 3, 3]), &SplitProtocol::OddEvenSubjects).is_err());
        assert!(make_split_by_subject(&subjects(&[2, 4]), &SplitProtocol::OddEvenSubjects).is_err());
        assert!(make_split_by_subject(&[Some(1), None], &SplitProtocol::OddEvenSubjects).is_err());
        assert!(SplitProtocol::parse("1-4/4-6").is_err());
        assert!(SplitProtocol::parse("1-4").is_err());
        assert!(SplitProtocol::parse("4-1/5").is_err());
        assert!(SplitProtocol::parse("a/b").is_err());
        assert!(SplitProtocol::parse("0-4294967295/1").is_err());
        assert_eq!(SplitProtocol::parse("odd-even").unwrap(), SplitProtocol::OddEvenSubjects);
    }

    fn uniform(color: [u8; 3], w: u32, h: u32) -> JtmImage {
        JtmImage::new(Plane::Front, w, h, color, ImageMeta { label: None, subject: None, level: EncodingLevel::Plain })
    }

    #[test]
    fn featurize_constant_images() {
        let f = featurize(&uniform([0, 0, 0], 32, 32), 8).unwrap();
        assert_eq!(f.values.len(), 3 * 64);
        assert!(f.values.iter().all(|&v| v == 0.0));
        let f = featurize(&uniform([255; 3], 30, 20), 7).unwrap();
        assert!(f.values.iter().all(|&v| v == 1.0));
        let f = featurize(&uniform([255, 0, 0], 4, 4), 2).unwrap();
        assert!(f.values.chunks(3).all(|c| c == [1.0, 0.0, 0.0]));
        assert!(featurize(&uniform([0; 3], 16, 16), 17).is_err());
        assert!(featurize(&uniform([0; 3], 16, 16), 0).is_err());
    }

    #[test]
    fn featurize_box_average() {
        let mut img = uniform([0, 0, 0], 4, 4);
        img.put(0, 0, [255, 255, 255]);
        let f = featurize(&img, 2).unwrap();
        assert_eq!(f.values[0], 0.25);
        assert_eq!(f.values[3], 0.0);
    }

    fn training() -> TrainingSet {
        TrainingSet::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![5.0, 5.0]], vec![0, 1, 1, 2], 3).unwrap()
    }

    #[test]
    fn knn_examples() {
        let t = training();
        assert_eq!(knn_scores(&[5.0, 5.0], &t, 1).unwrap(), [0.0, 0.0, 1.0]);
        assert_eq!(knn_scores(&[0.3, 0.2], &t, 4).unwrap(), [0.25, 0.5, 0.25]);
        // rows 0, 1 and 2 are all at distance sqrt(0.5)
        assert_eq!(knn_scores(&[0.5, 0.5], &t, 1).unwrap(), [1.0, 0.0, 0.0]);
        let tie = TrainingSet::new(vec![vec![1.0], vec![-1.0]], vec![1, 0], 2).unwrap();
        assert_eq!(knn_scores(&[0.0], &tie, 1).unwrap(), [0.0, 1.0]);
    }

    #[test]
    fn knn_errors() {
        let t = training();
        assert!(knn_scores(&[0.0, 0.0], &t, 0).is_err());
        assert!(knn_scores(&[0.0, 0.0], &t, 5).is_err());
        assert!(knn_scores(&[0.0], &t, 1).is_err());
        let empty = TrainingSet::new(vec![], vec![], 2).unwrap();
        assert!(knn_scores(&[0.0], &empty, 1).is_err());
        assert!(TrainingSet::new(vec![vec![0.0]], vec![3], 2).is_err());
    }

    #[test]
    fn fusion_examples() {
        let v = [0.2, 0.5, 0.3];
        let same = fuse_scores(&v, &v, &v).unwrap();
        assert!(same.iter().zip(v).all(|(a, b)| (a - b).abs() < 1e-15));
        let f = fuse_scores(&[0.25, 0.75], &[0.5, 0.5], &[0.0, 1.0]).unwrap();
        assert!((f.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        let f = fuse_scores(&[1.0, 0.0], &[0.0, 1.0], &[1.0, 0.0]).unwrap();
        assert_eq!(f, [2.0 / 3.0, 1.0 / 3.0]);
        assert_eq!(predict(&f), 0);
        assert_eq!(predict(&[0.5, 0.5]), 0);
        assert!(fuse_scores(&[1.0], &[0.5, 0.5], &[1.0]).is_err());
    }
}
