//! Lloyd's k-means with a complete iteration trace.
//!
//! Every iteration records the centers it started from, the full
//! point-by-center Euclidean distance matrix, the resulting labels and the
//! squared error before and after the mean update. Labels are 1-based
//! throughout, matching how cluster tables are usually printed.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub id: String,
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(id: impl Into<String>, coords: Vec<f64>) -> Self {
        Self { id: id.into(), coords }
    }
}

/// Non-empty list of points with unique ids and a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Point>,
    dim: usize,
}

impl Dataset {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyDataset)?;
        let dim = first.coords.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let mut ids = HashSet::new();
        for p in &points {
            if p.coords.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.coords.len() });
            }
            if p.coords.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteCoordinate { id: p.id.clone() });
            }
            if !ids.insert(p.id.as_str()) {
                return Err(Error::DuplicateId(p.id.clone()));
            }
        }
        Ok(Self { points, dim })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Keeps only the given coordinate columns (0-based), in that order.
    pub fn select_columns(&self, columns: &[usize]) -> Result<Dataset> {
        if let Some(&bad) = columns.iter().find(|&&c| c >= self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, got: bad + 1 });
        }
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.id.clone(), columns.iter().map(|&c| p.coords[c]).collect()))
            .collect();
        Dataset::new(points)
    }
}

pub fn euclidean_distance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    Ok(x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
}

/// Rounds half away from zero, as spreadsheet `ROUND(x, 0)` does.
pub fn display_round(x: f64) -> i64 {
    x.round() as i64
}

/// Which center wins when a point is exactly equidistant from several.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// The last of the tied centers wins (needed for exact ties to resolve deterministically).
    #[default]
    HighestIndex,
    LowestIndex,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    /// 1-based label per point.
    pub labels: Vec<usize>,
    /// `distances[i][j]` is the distance from point `i` to center `j`.
    pub distances: Vec<Vec<f64>>,
}

pub fn assign_points(ds: &Dataset, centers: &[Vec<f64>], tie: TieBreak) -> Result<Assignment> {
    if centers.is_empty() {
        return Err(Error::KOutOfRange { k: 0, n: ds.len() });
    }
    if let Some(c) = centers.iter().find(|c| c.len() != ds.dim) {
        return Err(Error::DimensionMismatch { expected: ds.dim, got: c.len() });
    }
    let mut labels = Vec::with_capacity(ds.len());
    let mut distances = Vec::with_capacity(ds.len());
    for p in &ds.points {
        let row: Vec<f64> =
            centers.iter().map(|c| euclidean_distance(&p.coords, c).expect("dimensions checked")).collect();
        let mut best = 0;
        for (j, &d) in row.iter().enumerate().skip(1) {
            let better = match tie {
                TieBreak::LowestIndex => d < row[best],
                TieBreak::HighestIndex => d <= row[best],
            };
            if better {
                best = j;
            }
        }
        labels.push(best + 1);
        distances.push(row);
    }
    Ok(Assignment { labels, distances })
}

/// Coordinate-wise mean of each cluster. A cluster with no points keeps its
/// previous center; `previous.len()` is the cluster count.
pub fn update_means(ds: &Dataset, labels: &[usize], previous: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let k = previous.len();
    if labels.len() != ds.len() {
        return Err(Error::DimensionMismatch { expected: ds.len(), got: labels.len() });
    }
    let mut sums = vec![vec![0.0; ds.dim]; k];
    let mut counts = vec![0usize; k];
    for (p, &label) in ds.points.iter().zip(labels) {
        if label == 0 || label > k {
            return Err(Error::InvalidLabel { label, k });
        }
        counts[label - 1] += 1;
        for (s, x) in sums[label - 1].iter_mut().zip(&p.coords) {
            *s += x;
        }
    }
    Ok(sums
        .into_iter()
        .zip(counts)
        .zip(previous)
        .map(|((sum, count), prev)| match count {
            0 => prev.clone(),
            c => sum.into_iter().map(|s| s / c as f64).collect(),
        })
        .collect())
}

/// Sum of squared distances from each point to the center of its 1-based label.
pub fn sse(ds: &Dataset, labels: &[usize], centers: &[Vec<f64>]) -> f64 {
    ds.points
        .iter()
        .zip(labels)
        .map(|(p, &l)| p.coords.iter().zip(&centers[l - 1]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Init {
    /// Start from these centers; their count must equal `k`.
    Centers(Vec<Vec<f64>>),
    /// Start from `k` distinct dataset points chosen by a seeded generator.
    Sample { seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansConfig {
    pub k: usize,
    pub init: Init,
    pub max_iterations: usize,
    pub mean_tolerance: f64,
    pub tie_break: TieBreak,
}

impl KMeansConfig {
    pub fn with_centers(centers: Vec<Vec<f64>>) -> Self {
        Self::new(centers.len(), Init::Centers(centers))
    }

    pub fn sampled(k: usize, seed: u64) -> Self {
        Self::new(k, Init::Sample { seed })
    }

    fn new(k: usize, init: Init) -> Self {
        Self { k, init, max_iterations: 100, mean_tolerance: 1e-12, tie_break: TieBreak::default() }
    }

    pub fn max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    /// Centers the assignment step measured against.
    pub centers: Vec<Vec<f64>>,
    pub distances: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
    /// SSE of `labels` against `centers`.
    pub sse_assigned: f64,
    /// SSE of `labels` against the updated means; `None` on the final
    /// iteration when no update followed.
    pub sse_updated: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// An assignment pass reproduced the previous labels.
    LabelsStable,
    /// No center moved more than the mean tolerance.
    CentersStable,
    MaxIterations,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansTrace {
    pub iterations: Vec<IterationRecord>,
    pub stop: StopReason,
    pub final_sse: f64,
}

impl KMeansTrace {
    /// Number of assignment passes, including the one that detected convergence.
    pub fn iteration_count(&self) -> usize {
        self.iterations.len()
    }

    pub fn converged(&self) -> bool {
        self.stop != StopReason::MaxIterations
    }

    /// SSE after every assign and update step, in execution order.
    pub fn sse_sequence(&self) -> Vec<f64> {
        self.iterations.iter().flat_map(|r| std::iter::once(r.sse_assigned).chain(r.sse_updated)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub labels: Vec<usize>,
    pub centers: Vec<Vec<f64>>,
    pub trace: KMeansTrace,
}

fn initial_centers(ds: &Dataset, cfg: &KMeansConfig) -> Result<Vec<Vec<f64>>> {
    if cfg.k == 0 || cfg.k > ds.len() {
        return Err(Error::KOutOfRange { k: cfg.k, n: ds.len() });
    }
    match &cfg.init {
        Init::Centers(centers) => {
            if centers.len() != cfg.k {
                return Err(Error::InvalidConfig(format!(
                    "{} initial centers given for k = {}",
                    centers.len(),
                    cfg.k
                )));
            }
            if let Some(c) = centers.iter().find(|c| c.len() != ds.dim) {
                return Err(Error::DimensionMismatch { expected: ds.dim, got: c.len() });
            }
            Ok(centers.clone())
        }
        Init::Sample { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok(rand::seq::index::sample(&mut rng, ds.len(), cfg.k)
                .into_iter()
                .map(|i| ds.points[i].coords.clone())
                .collect())
        }
    }
}

/// Runs assign/update passes until the labels repeat, the centers stop
/// moving, or `max_iterations` passes have been made.
pub fn lloyd(ds: &Dataset, cfg: &KMeansConfig) -> Result<KMeansResult> {
    if cfg.max_iterations == 0 {
        return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
    }
    let mut centers = initial_centers(ds, cfg)?;
    let mut iterations: Vec<IterationRecord> = Vec::new();
    let mut stop = StopReason::MaxIterations;

    while iterations.len() < cfg.max_iterations {
        let Assignment { labels, distances } = assign_points(ds, &centers, cfg.tie_break)?;
        let sse_assigned = sse(ds, &labels, &centers);
        let repeated = iterations.last().is_some_and(|prev| prev.labels == labels);
        let mut record =
            IterationRecord { centers: centers.clone(), distances, labels, sse_assigned, sse_updated: None };
        if repeated {
            iterations.push(record);
            stop = StopReason::LabelsStable;
            break;
        }

        let updated = update_means(ds, &record.labels, &centers)?;
        record.sse_updated = Some(sse(ds, &record.labels, &updated));
        let moved = centers
            .iter()
            .zip(&updated)
            .map(|(a, b)| euclidean_distance(a, b).expect("same dimension"))
            .fold(0.0, f64::max);
        centers = updated;
        iterations.push(record);
        if moved <= cfg.mean_tolerance {
            stop = StopReason::CentersStable;
            break;
        }
    }

    let labels = iterations.last().expect("at least one pass").labels.clone();
    let final_sse = sse(ds, &labels, &centers);
    Ok(KMeansResult { labels, centers, trace: KMeansTrace { iterations, stop, final_sse } })
}
