use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::CommandFactory;
use jtm_core::eval::{ablation, ablation_table, make_split_by_subject, EvalReport};
use jtm_core::skeleton::looks_canonical;
use jtm_core::synth::{generate_batch, SynthParams};
use jtm_core::{
    default_layout_20, evaluate, parse_canonical, parse_msrc12_stream, serialize_canonical, EncodingConfig,
    EvalConfig, PlaneMode, RenderPlan, Sample, SkeletonSequence, SplitProtocol,
};
use rayon::prelude::*;

use crate::manifest::{sha256_hex, ConfigSnapshot, FileEntry, OutputEntry, RunManifest};
use crate::{EncodeArgs, EvalArgs, ExportArgs, InputFormat, LevelSel, PlaneSel, SynthArgs};

fn usage_error(msg: impl std::fmt::Display) -> ! {
    crate::Cli::command().error(clap::error::ErrorKind::ValueValidation, msg).exit()
}

fn sample_id(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "sample".into())
}

fn parse_protocol(tokens: &[String]) -> SplitProtocol {
    let spec = match tokens {
        [one] if one == "subjects" => usage_error("--protocol subjects needs a list, e.g. 1-4/5/6-10"),
        [one] => one.as_str(),
        [kind, lists] if kind == "subjects" => lists.as_str(),
        _ => usage_error(format!("unrecognized --protocol {}", tokens.join(" "))),
    };
    SplitProtocol::parse(spec).unwrap_or_else(|e| usage_error(e))
}

fn render_config(render: &crate::RenderArgs, level: jtm_core::EncodingLevel) -> EncodingConfig {
    render.encoding(level).unwrap_or_else(|e| usage_error(e))
}

fn read_sequence(path: &Path, format: InputFormat) -> anyhow::Result<(Vec<u8>, SkeletonSequence)> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let canonical = match format {
        InputFormat::Auto => looks_canonical(&bytes),
        InputFormat::Canonical => true,
        InputFormat::Msrc12 => false,
    };
    let seq = if canonical {
        parse_canonical(&bytes)
    } else {
        parse_msrc12_stream(&bytes, &default_layout_20())
    };
    let seq = seq.with_context(|| format!("{}", path.display()))?;
    Ok((bytes, seq))
}

pub fn encode(args: &EncodeArgs) -> anyhow::Result<()> {
    let levels = args.level.levels();
    let planes = args.plane.planes();
    let base = render_config(&args.render, levels[0]);

    let parsed: Vec<_> = args.inputs.par_iter().map(|p| (p, read_sequence(p, args.format))).collect();
    let mut failures = 0;
    let mut good = Vec::new();
    for (path, res) in parsed {
        match res {
            Ok((bytes, seq)) => good.push((path, bytes, seq)),
            Err(e) => {
                failures += 1;
                eprintln!("error: {e:#}");
            }
        }
    }
    if failures > 0 && !args.keep_going {
        bail!("{failures} input file(s) failed; nothing written (use --keep-going to skip them)");
    }
    let mut ids = HashSet::new();
    for (path, _, _) in &good {
        if !ids.insert(sample_id(path)) {
            bail!("two inputs share the sample id {:?}; outputs would collide", sample_id(path));
        }
    }

    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    let outputs: Vec<Vec<OutputEntry>> = good
        .par_iter()
        .map(|(path, _, seq)| -> anyhow::Result<Vec<OutputEntry>> {
            let id = sample_id(path);
            let mut written = Vec::new();
            for &level in &levels {
                let cfg = base.with_level(level);
                for &plane in &planes {
                    let img = RenderPlan::new(seq, plane, &cfg).render();
                    let mut files = vec![(img.file_name(&id, "png"), img.to_png())];
                    if args.ppm {
                        files.push((img.file_name(&id, "ppm"), img.to_ppm()));
                    }
                    for (name, bytes) in files {
                        let out = args.out.join(&name);
                        fs::write(&out, &bytes).with_context(|| format!("cannot write {}", out.display()))?;
                        written.push(OutputEntry {
                            path: out.display().to_string(),
                            sha256: sha256_hex(&bytes),
                            input: Some(path.display().to_string()),
                            plane: Some(plane.tag().into()),
                            level: Some(level.tag().into()),
                        });
                    }
                }
            }
            Ok(written)
        })
        .collect::<anyhow::Result<_>>()?;

    let mut manifest = RunManifest::new("encode", ConfigSnapshot::new(&base, &levels, &planes));
    manifest.inputs = good
        .iter()
        .map(|(p, bytes, _)| FileEntry { path: p.display().to_string(), sha256: sha256_hex(bytes) })
        .collect();
    manifest.outputs = outputs.into_iter().flatten().collect();
    for o in &manifest.outputs {
        println!("{}", o.path);
    }
    manifest.write(&args.out.join("manifest.json"))?;
    if failures > 0 {
        bail!("{failures} input file(s) failed");
    }
    Ok(())
}

/// Every `.jtm` file in `dir`, sorted by name. Each must carry a label and a
/// subject id.
fn load_dataset(dir: &Path) -> anyhow::Result<(Vec<Sample>, Vec<FileEntry>)> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read dataset directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "jtm"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no .jtm files in {}", dir.display());
    }
    let loaded = paths
        .par_iter()
        .map(|p| {
            let (bytes, seq) = read_sequence(p, InputFormat::Canonical)?;
            if seq.label.is_none() {
                bail!("{}: sample has no class label", p.display());
            }
            if seq.subject.is_none() {
                bail!("{}: sample has no subject id", p.display());
            }
            Ok((Sample { id: sample_id(p), sequence: seq }, FileEntry { path: p.display().to_string(), sha256: sha256_hex(&bytes) }))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(loaded.into_iter().unzip())
}

fn protocol_json(tokens: &[String]) -> serde_json::Value {
    serde_json::Value::String(tokens.join(" "))
}

fn write_report(out: &Path, report: &EvalReport, manifest: &mut RunManifest) -> anyhow::Result<()> {
    let tag = report.level.tag();
    let plane = match report.mode {
        PlaneMode::Fused => "fused".to_string(),
        PlaneMode::Single(p) => p.tag().to_string(),
    };
    for (name, text) in [
        (format!("report_{plane}_{tag}.txt"), report.to_table()),
        (format!("records_{plane}_{tag}.jsonl"), report.records_jsonl()),
        (format!("confusion_{plane}_{tag}.csv"), report.confusion_csv()),
    ] {
        let path = out.join(name);
        fs::write(&path, &text).with_context(|| format!("cannot write {}", path.display()))?;
        manifest.outputs.push(OutputEntry {
            path: path.display().to_string(),
            sha256: sha256_hex(text.as_bytes()),
            input: None,
            plane: Some(plane.clone()),
            level: Some(tag.into()),
        });
    }
    Ok(())
}

pub fn eval(args: &EvalArgs) -> anyhow::Result<()> {
    let protocol = parse_protocol(&args.protocol);
    if args.k == 0 {
        usage_error("--k must be at least 1");
    }
    let levels = if args.ablation { LevelSel::All.levels() } else { args.level.levels() };
    let planes = if args.ablation { vec![jtm_core::Plane::Front] } else { args.plane.planes() };
    let base = render_config(&args.render, levels[0]);
    let (samples, inputs) = load_dataset(&args.dataset)?;

    let mode = match args.plane {
        PlaneSel::All => PlaneMode::Fused,
        PlaneSel::One(p) => PlaneMode::Single(p),
    };
    let cfg = EvalConfig { encoding: base.clone(), k: args.k, feature_side: args.feature_side, mode };

    let mut snapshot = ConfigSnapshot::new(&base, &levels, &planes);
    snapshot.extra.insert("protocol".into(), protocol_json(&args.protocol));
    snapshot.extra.insert("k".into(), args.k.into());
    snapshot.extra.insert("feature_side".into(), args.feature_side.into());
    snapshot.extra.insert("ablation".into(), args.ablation.into());
    let mut manifest = RunManifest::new("eval", snapshot);
    manifest.inputs = inputs;

    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    if args.ablation {
        let reports = ablation(&samples, &protocol, &cfg)?;
        let table = ablation_table(&reports);
        print!("{table}");
        let path = args.out.join("ablation.txt");
        fs::write(&path, &table)?;
        manifest.outputs.push(OutputEntry {
            path: path.display().to_string(),
            sha256: sha256_hex(table.as_bytes()),
            input: None,
            plane: Some("front".into()),
            level: Some("all".into()),
        });
        for r in &reports {
            write_report(&args.out, r, &mut manifest)?;
        }
    } else {
        for &level in &levels {
            let report = evaluate(&samples, &protocol, &EvalConfig { encoding: base.with_level(level), ..cfg.clone() })?;
            print!("{}", report.to_table());
            write_report(&args.out, &report, &mut manifest)?;
        }
    }
    manifest.write(&args.out.join("manifest.json"))
}

pub fn export(args: &ExportArgs) -> anyhow::Result<()> {
    let protocol = parse_protocol(&args.protocol);
    let levels = args.level.levels();
    let planes = args.plane.planes();
    let base = render_config(&args.render, levels[0]);
    let (samples, inputs) = load_dataset(&args.dataset)?;
    let subjects: Vec<Option<u32>> = samples.iter().map(|s| s.sequence.subject).collect();
    let split = make_split_by_subject(&subjects, &protocol)?;

    // plan every file first so collisions are caught before anything is written
    let mut jobs = Vec::new();
    for (partition, indices) in [("train", &split.train), ("validation", &split.validation), ("test", &split.test)] {
        for &i in indices {
            let label = samples[i].sequence.label.expect("dataset samples are labeled");
            let dir = args.out.join(partition).join(label.to_string());
            for &level in &levels {
                for &plane in &planes {
                    let name = format!("{}_{}_{}.png", samples[i].id, plane, level);
                    jobs.push((dir.join(name), i, plane, level));
                }
            }
        }
    }
    let mut seen = HashSet::new();
    for (path, ..) in &jobs {
        if !seen.insert(path.clone()) {
            bail!("two samples map to the same output {}", path.display());
        }
        if !args.force && path.exists() {
            bail!("{} already exists (use --force to overwrite)", path.display());
        }
    }
    let manifest_path = args.out.join("manifest.json");
    if !args.force && manifest_path.exists() {
        bail!("{} already exists (use --force to overwrite)", manifest_path.display());
    }

    let outputs = jobs
        .par_iter()
        .map(|(path, i, plane, level)| -> anyhow::Result<OutputEntry> {
            let cfg = base.with_level(*level);
            let png = RenderPlan::new(&samples[*i].sequence, *plane, &cfg).render().to_png();
            fs::create_dir_all(path.parent().expect("output has a parent"))?;
            fs::write(path, &png).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(OutputEntry {
                path: path.display().to_string(),
                sha256: sha256_hex(&png),
                input: Some(samples[*i].id.clone()),
                plane: Some(plane.tag().into()),
                level: Some(level.tag().into()),
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;

    let mut snapshot = ConfigSnapshot::new(&base, &levels, &planes);
    snapshot.extra.insert("protocol".into(), protocol_json(&args.protocol));
    let mut manifest = RunManifest::new("export", snapshot);
    manifest.inputs = inputs;
    manifest.outputs = outputs;
    manifest.write(&manifest_path)?;
    println!(
        "exported {} images ({} train, {} validation, {} test samples) to {}",
        manifest.outputs.len(),
        split.train.len(),
        split.validation.len(),
        split.test.len(),
        args.out.display()
    );
    Ok(())
}

pub fn synth(args: &SynthArgs) -> anyhow::Result<()> {
    if !(args.noise >= 0.0 && args.noise.is_finite()) {
        usage_error(format!("--noise must be a non-negative number, got {}", args.noise));
    }
    if args.subjects == 0 {
        usage_error("--subjects must be at least 1");
    }
    let params = SynthParams { noise: args.noise, subjects: args.subjects };
    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    for (i, seq) in generate_batch(args.generator, args.count, args.seed, &params).iter().enumerate() {
        let path = args.out.join(format!("{}_{i:03}.jtm", args.generator.name()));
        fs::write(&path, serialize_canonical(seq)).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(())
}
