//! Fiedler bisection and recursive spectral partitioning.

use crate::eigen::fiedler_pair;
use crate::graph::cut_size;
use crate::{Error, Graph, Partition, Result, VertexSubset};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    /// Part 0 gets entries `<= alpha`, part 1 entries `> alpha`.
    Alpha(f64),
    /// Part 0 gets the `ceil(n/2)` smallest entries (ties broken by vertex id).
    Median,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectConfig {
    pub threshold: Threshold,
    /// Entries with magnitude at or below this always land in part 0.
    pub zero_tol: f64,
}

impl Default for BisectConfig {
    fn default() -> Self {
        Self { threshold: Threshold::Alpha(0.0), zero_tol: 1e-9 }
    }
}

impl BisectConfig {
    pub fn alpha(alpha: f64) -> Self {
        Self { threshold: Threshold::Alpha(alpha), ..Self::default() }
    }

    pub fn median() -> Self {
        Self { threshold: Threshold::Median, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bisection {
    pub partition: Partition,
    pub lambda2: f64,
    /// Sign-normalized Fiedler vector the split was read from.
    pub fiedler: Vec<f64>,
}

/// Splits the vertices of a connected graph by thresholding its Fiedler vector.
pub fn bisect(g: &Graph, cfg: &BisectConfig) -> Result<Bisection> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    let components = g.connected_components();
    if components.k() > 1 {
        return Err(Error::Disconnected { sizes: components.sizes() });
    }
    let f = fiedler_pair(&g.laplacian())?;
    let partition = split_by_vector(&f.vector, cfg)?;
    Ok(Bisection { partition, lambda2: f.lambda2, fiedler: f.vector })
}

/// Two-way split of indices `0..v.len()` according to `cfg`.
pub fn split_by_vector(v: &[f64], cfg: &BisectConfig) -> Result<Partition> {
    let part_of: Vec<usize> = match cfg.threshold {
        Threshold::Alpha(alpha) => {
            if !alpha.is_finite() {
                return Err(Error::InvalidConfig(format!("alpha must be finite, got {alpha}")));
            }
            let part_of: Vec<usize> =
                v.iter().map(|&x| usize::from(!(x <= alpha || x.abs() <= cfg.zero_tol))).collect();
            let ones = part_of.iter().filter(|&&p| p == 1).count();
            if ones == 0 || ones == v.len() {
                return Err(Error::EmptySide { alpha });
            }
            part_of
        }
        Threshold::Median => {
            if v.len() < 2 {
                return Err(Error::TooSmall { n: v.len(), min: 2 });
            }
            let mut order: Vec<usize> = (0..v.len()).collect();
            order.sort_by(|&i, &j| v[i].total_cmp(&v[j]).then(i.cmp(&j)));
            let lower = v.len().div_ceil(2);
            let mut part_of = vec![1; v.len()];
            for &i in &order[..lower] {
                part_of[i] = 0;
            }
            part_of
        }
    };
    Partition::new(part_of)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopRule {
    /// Keep splitting until this many parts exist.
    TargetParts(usize),
    /// Do not split a connected part whose λ₂ exceeds this bound.
    Lambda2Above(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionConfig {
    pub stop: StopRule,
    /// Connected parts smaller than twice this are not bisected.
    pub min_part_size: usize,
    pub bisect: BisectConfig,
}

impl RecursionConfig {
    pub fn target_parts(k: usize) -> Self {
        Self::new(StopRule::TargetParts(k))
    }

    pub fn lambda2_stop(bound: f64) -> Self {
        Self::new(StopRule::Lambda2Above(bound))
    }

    fn new(stop: StopRule) -> Self {
        Self { stop, min_part_size: 2, bisect: BisectConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// Fiedler bisection of a connected part.
    Spectral,
    /// A disconnected part: the component holding its smallest vertex is
    /// separated from the rest (λ₂ = 0).
    Component,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitRecord {
    /// Vertices (ids of the input graph) of the part that was split.
    pub vertices: Vec<usize>,
    pub lambda2: f64,
    /// Sizes of the retained side and the split-off side.
    pub sides: (usize, usize),
    pub kind: SplitKind,
}

/// A connected part that was not split because its λ₂ exceeded the bound.
#[derive(Debug, Clone, PartialEq)]
pub struct HaltRecord {
    pub vertices: Vec<usize>,
    pub lambda2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub partition: Partition,
    pub splits: Vec<SplitRecord>,
    pub halted: Vec<HaltRecord>,
    pub cut_size: usize,
}

/// Repeatedly splits the largest unfinished part (ties go to the part with
/// the smallest vertex) until the stop rule is met or nothing can be split.
///
/// When part `i` is split, its part-0 side keeps id `i` and the other side
/// becomes the next new part id.
pub fn recursive_partition(g: &Graph, cfg: &RecursionConfig) -> Result<SpectralReport> {
    if g.n() == 0 {
        return Err(Error::EmptySubset);
    }
    match cfg.stop {
        StopRule::TargetParts(k) if k < 2 => {
            return Err(Error::InvalidConfig(format!("target parts must be at least 2, got {k}")))
        }
        StopRule::TargetParts(k) if k > g.n() => return Err(Error::KOutOfRange { k, n: g.n() }),
        StopRule::Lambda2Above(b) if !b.is_finite() => {
            return Err(Error::InvalidConfig(format!("lambda2 bound must be finite, got {b}")))
        }
        _ => {}
    }

    let mut parts: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    let mut done = vec![false];
    let mut splits = Vec::new();
    let mut halted = Vec::new();

    loop {
        if let StopRule::TargetParts(k) = cfg.stop {
            if parts.len() >= k {
                break;
            }
        }
        // largest unfinished part; parts are sorted so [0] is the smallest vertex
        let Some(idx) = (0..parts.len())
            .filter(|&i| !done[i])
            .max_by(|&a, &b| parts[a].len().cmp(&parts[b].len()).then(parts[b][0].cmp(&parts[a][0])))
        else {
            break;
        };
        if parts[idx].len() < 2 {
            done[idx] = true;
            continue;
        }

        let subset = VertexSubset::new(parts[idx].clone())?;
        let (sub, map) = g.induced_subgraph(&subset)?;
        let components = sub.connected_components();

        let (keep, split_off, lambda2, kind) = if components.k() > 1 {
            let (first, rest): (Vec<usize>, Vec<usize>) =
                (0..sub.n()).partition(|&v| components.part_of(v) == 0);
            (first, rest, 0.0, SplitKind::Component)
        } else if sub.n() < 2 * cfg.min_part_size {
            done[idx] = true;
            continue;
        } else {
            let b = bisect(&sub, &cfg.bisect)?;
            if let StopRule::Lambda2Above(bound) = cfg.stop {
                if b.lambda2 > bound {
                    halted.push(HaltRecord { vertices: map.clone(), lambda2: b.lambda2 });
                    done[idx] = true;
                    continue;
                }
            }
            let (zero, one): (Vec<usize>, Vec<usize>) =
                (0..sub.n()).partition(|&v| b.partition.part_of(v) == 0);
            (zero, one, b.lambda2, SplitKind::Spectral)
        };

        let to_original = |side: Vec<usize>| side.into_iter().map(|v| map[v]).collect::<Vec<_>>();
        let keep = to_original(keep);
        let split_off = to_original(split_off);
        splits.push(SplitRecord { vertices: map, lambda2, sides: (keep.len(), split_off.len()), kind });
        parts[idx] = keep;
        parts.push(split_off);
        done.push(false);
    }

    let partition = Partition::from_parts(g.n(), &parts)?;
    let cut = cut_size(g, &partition)?;
    Ok(SpectralReport { partition, splits, halted, cut_size: cut })
}
