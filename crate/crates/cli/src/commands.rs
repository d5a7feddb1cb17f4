//! Subcommand bodies. Each validates its flags before touching input files.

use std::io::Write;
use std::path::Path;

use partitionlab::eigen::smallest_k;
use partitionlab::graph::{generate_lattice, parse_edge_list, write_edge_list};
use partitionlab::kmeans::{lloyd, KMeansConfig, StopReason, TieBreak};
use partitionlab::matrix::format_fixed4;
use partitionlab::spectral::{
    recursive_partition, BisectConfig, RecursionConfig, SpectralReport, SplitKind, StopRule,
};
use partitionlab::{Error, Graph};

use crate::error::{CliError, Result};
use crate::io::{
    format_labels_csv, format_parts_csv, parse_centers, parse_centers_file, parse_points_csv,
    parse_usize_list, read_file, write_file,
};
use crate::{svg, trace, KmeansArgs, LaplacianArgs, LatticeArgs, SpectralArgs, Ties};

/// `PARTITIONLAB_COLOR=always` enables ANSI styling of terminal reports.
pub fn color_from_env() -> bool {
    std::env::var("PARTITIONLAB_COLOR").is_ok_and(|v| v == "always")
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = read_file(path)?;
    parse_edge_list(&text).map_err(|e| CliError::parse(path.display().to_string(), e.to_string()))
}

pub fn run_kmeans(a: &KmeansArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    if a.k == 0 {
        return Err(CliError::usage("--k must be at least 1"));
    }
    if a.max_iterations == 0 {
        return Err(CliError::usage("--max-iterations must be at least 1"));
    }
    let plot_columns = match &a.dims {
        Some(text) => {
            let dims = parse_usize_list(text, "--dims")?;
            if dims.len() != 2 || dims.contains(&0) {
                return Err(CliError::usage("--dims takes two 1-based column numbers, e.g. `1,2`"));
            }
            Some(dims.iter().map(|d| d - 1).collect::<Vec<_>>())
        }
        None => None,
    };
    let centers = match (&a.centers, &a.centers_file) {
        (Some(text), _) => Some(parse_centers(text)?),
        (None, Some(path)) => Some(parse_centers_file(&read_file(path)?, &path.display().to_string())?),
        (None, None) => None,
    };
    if let Some(c) = &centers {
        if c.len() != a.k {
            return Err(CliError::usage(format!("{} centers given for --k {}", c.len(), a.k)));
        }
    } else if a.seed.is_none() {
        return Err(CliError::usage("--seed is required when no initial centers are given"));
    }

    let table = parse_points_csv(&read_file(&a.input)?, &a.input.display().to_string())?;
    let ds = &table.dataset;

    let plot = match (&a.svg, plot_columns) {
        (None, _) => None,
        (Some(_), Some(cols)) => Some(cols),
        (Some(_), None) if ds.dim() == 2 => Some(vec![0, 1]),
        (Some(_), None) => {
            return Err(CliError::Runtime(format!(
                "scatter plot needs 2-D data but points have {} coordinates; select two with --dims i,j",
                ds.dim()
            )))
        }
    };

    let cfg = match centers {
        Some(c) => KMeansConfig::with_centers(c),
        None => KMeansConfig::sampled(a.k, a.seed.expect("checked above")),
    }
    .max_iterations(a.max_iterations)
    .tie_break(match a.ties {
        Ties::Highest => TieBreak::HighestIndex,
        Ties::Lowest => TieBreak::LowestIndex,
    });
    let result = lloyd(ds, &cfg)?;

    let labels_csv = format_labels_csv(ds, &result.labels);
    let stop = match result.trace.stop {
        StopReason::LabelsStable => "labels-stable",
        StopReason::CentersStable => "centers-stable",
        StopReason::MaxIterations => "max-iterations",
    };
    let summary = format!(
        "k={} iterations={} stop={} sse={:.6}\n",
        a.k,
        result.trace.iteration_count(),
        stop,
        result.trace.final_sse
    );

    if let Some(path) = &a.trace {
        write_file(path, &trace::format_trace(ds, &table.columns, &result.trace, a.precise))?;
    }
    if let (Some(path), Some(cols)) = (&a.svg, plot) {
        let shown = ds.select_columns(&cols)?;
        let points: Vec<(f64, f64)> = shown.points().iter().map(|p| (p.coords[0], p.coords[1])).collect();
        let classes: Vec<usize> = result.labels.iter().map(|l| l - 1).collect();
        let svg = svg::scatter(&points, &classes, &table.columns[cols[0]], &table.columns[cols[1]])?;
        write_file(path, &svg)?;
    }
    match &a.labels {
        Some(path) => {
            write_file(path, &labels_csv)?;
            stdout.write_all(summary.as_bytes())?;
        }
        None => {
            stdout.write_all(labels_csv.as_bytes())?;
            stderr.write_all(summary.as_bytes())?;
        }
    }
    Ok(())
}

pub fn run_spectral(a: &SpectralArgs, color: bool, stdout: &mut dyn Write) -> Result<()> {
    let stop = match (a.parts, a.lambda2_stop) {
        (Some(k), _) if k < 2 => return Err(CliError::usage("--parts must be at least 2")),
        (Some(k), _) => StopRule::TargetParts(k),
        (None, Some(b)) if !b.is_finite() => {
            return Err(CliError::usage("--lambda2-stop must be a finite number"))
        }
        (None, Some(b)) => StopRule::Lambda2Above(b),
        (None, None) => return Err(CliError::usage("one of --parts or --lambda2-stop is required")),
    };
    if a.min_part_size == 0 {
        return Err(CliError::usage("--min-part-size must be at least 1"));
    }
    if !a.alpha.is_finite() {
        return Err(CliError::usage("--alpha must be a finite number"));
    }

    let g = load_graph(&a.edges)?;
    if !a.components_first {
        let components = g.connected_components();
        if components.k() > 1 {
            return Err(Error::Disconnected { sizes: components.sizes() }.into());
        }
    }
    let cfg = RecursionConfig {
        stop,
        min_part_size: a.min_part_size,
        bisect: if a.median { BisectConfig::median() } else { BisectConfig::alpha(a.alpha) },
    };
    let report = recursive_partition(&g, &cfg)?;

    if let Some(path) = &a.out {
        write_file(path, &format_parts_csv(&report.partition))?;
    }
    if let Some(path) = &a.svg {
        write_file(path, &svg::graph_layout(&g, &report.partition)?)?;
    }
    match &a.report {
        Some(path) => write_file(path, &format_spectral_report(&g, &cfg, &report, false))?,
        None => stdout.write_all(format_spectral_report(&g, &cfg, &report, color).as_bytes())?,
    }
    Ok(())
}

fn ids(vertices: &[usize]) -> String {
    vertices.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Plain-text report of a recursive partition; vertex ids are 1-based.
pub fn format_spectral_report(g: &Graph, cfg: &RecursionConfig, r: &SpectralReport, color: bool) -> String {
    let hl = |s: String| if color { format!("\x1b[1;36m{s}\x1b[0m") } else { s };
    let mut out = format!("graph: {} vertices, {} edges\n", g.n(), g.edge_count());
    for (i, s) in r.splits.iter().enumerate() {
        let kind = match s.kind {
            SplitKind::Spectral => "spectral",
            SplitKind::Component => "component",
        };
        out.push_str(&format!(
            "split {}: {} on {} vertices, {}, sides {} + {}\n",
            i + 1,
            kind,
            s.vertices.len(),
            hl(format!("lambda2 = {:.6}", s.lambda2)),
            s.sides.0,
            s.sides.1
        ));
    }
    if let StopRule::Lambda2Above(bound) = cfg.stop {
        for h in &r.halted {
            out.push_str(&format!(
                "halted: {} vertices, {} > {}: {}\n",
                h.vertices.len(),
                hl(format!("lambda2 = {:.6}", h.lambda2)),
                bound,
                ids(&h.vertices)
            ));
        }
    }
    for (p, members) in r.partition.parts().iter().enumerate() {
        out.push_str(&format!("part {}: {} vertices: {}\n", p, members.len(), ids(members)));
    }
    out.push_str(&format!("cut size: {}\n", hl(r.cut_size.to_string())));
    out
}

pub fn run_laplacian(a: &LaplacianArgs, stdout: &mut dyn Write) -> Result<()> {
    if a.eigs == Some(0) {
        return Err(CliError::usage("--eigs must be at least 1"));
    }
    let g = load_graph(&a.edges)?;
    stdout.write_all(laplacian_report(&g, a.eigs)?.as_bytes())?;
    Ok(())
}

/// `A`, `D` and `L` in fixed-width text, plus the `eigs` smallest
/// eigenvalues of `L` when requested.
pub fn laplacian_report(g: &Graph, eigs: Option<usize>) -> Result<String> {
    let mut out =
        format!("A =\n{}\nD =\n{}\nL =\n{}", g.adjacency_matrix(), g.degree_matrix(), g.laplacian());
    if let Some(k) = eigs {
        out.push_str("\neigenvalues =\n");
        for pair in smallest_k(&g.laplacian(), k)? {
            out.push_str(&format_fixed4(pair.value));
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn run_lattice(a: &LatticeArgs, stdout: &mut dyn Write) -> Result<()> {
    let dims = parse_usize_list(&a.dims, "--dims")?;
    let g = generate_lattice(&dims).map_err(|e| match e {
        Error::InvalidLattice(msg) => CliError::usage(format!("--dims: {msg}")),
        other => other.into(),
    })?;
    let text = write_edge_list(&g);
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}
