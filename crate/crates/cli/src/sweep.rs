use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;
use wdlab::cohomology::{report, very_smooth_report};
use wdlab::nilpotent::{partition_label, partitions};
use wdlab::smoothfactory::smooth_point;
use wdlab::wdrep::{sample_fiber, InertialData, WDPoint};

use crate::commands::{emit, group_from_name, malformed, nilpotent_coords, parse_partition, Failure, Outcome};

#[derive(Args, Clone, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    #[arg(long = "fK", default_value_t = 1)]
    pub fk: u32,
    /// `all`, or Jordan types separated by `;`, e.g. `2,1;3`.
    #[arg(long, default_value = "all")]
    pub partitions: String,
    /// Sampled points per Jordan type, besides the constructed one.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; rows are emitted in input order regardless.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

struct Task {
    orbit: String,
    kind: &'static str,
    index: usize,
    point: WDPoint,
}

fn evaluate(t: &Task) -> Result<Vec<String>, Failure> {
    let r = report(&t.point)?;
    let v = very_smooth_report(&t.point)?;
    Ok(vec![
        t.orbit.clone(),
        t.kind.to_string(),
        t.index.to_string(),
        r.h0.to_string(),
        r.h1.to_string(),
        r.h2.to_string(),
        r.smooth.to_string(),
        v.very_smooth.to_string(),
    ])
}

pub fn run(args: &SweepArgs) -> Outcome {
    let g = group_from_name(&args.group)?;
    let types: Vec<Vec<usize>> = if args.partitions.trim() == "all" {
        partitions(g.std_dim)
    } else {
        args.partitions.split(';').map(parse_partition).collect::<Result<_, _>>()?
    };
    let trivial = InertialData::trivial(&g);
    let mut tasks = Vec::new();
    for (k, parts) in types.iter().enumerate() {
        let label = if parts.is_empty() { "0".to_string() } else { partition_label(parts) };
        let n = match nilpotent_coords(&g, parts) {
            Ok(n) => n,
            Err(e) if args.partitions.trim() == "all" => {
                eprintln!("skipping {label}: {}", e.message);
                continue;
            }
            Err(e) => return Err(e),
        };
        let cert = smooth_point(&g, &trivial, &n, args.p, args.fk)?;
        tasks.push(Task { orbit: label.clone(), kind: "factory", index: 0, point: cert.point });
        let seed = args.seed.wrapping_add(k as u64);
        let pts = sample_fiber(&g, &trivial, &n, args.p, args.fk, args.count, seed, None)?;
        for (i, point) in pts.into_iter().enumerate() {
            tasks.push(Task { orbit: label.clone(), kind: "sample", index: i + 1, point });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| malformed(e.to_string()))?;
    let rows: Vec<Vec<String>> = pool.install(|| tasks.par_iter().map(evaluate).collect::<Result<_, _>>())?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| malformed(e.to_string());
    w.write_record(["orbit", "kind", "index", "h0", "h1", "h2", "smooth", "very_smooth"]).map_err(csv_err)?;
    for r in &rows {
        w.write_record(r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| malformed(e.to_string()))?;
    emit(args.output.as_deref(), &String::from_utf8(bytes).expect("csv is utf-8"))?;
    let bad = rows.iter().filter(|r| r[1] == "factory" && (r[6] != "true" || r[7] != "true")).count();
    Ok(if bad == 0 { 0 } else { 1 })
}
