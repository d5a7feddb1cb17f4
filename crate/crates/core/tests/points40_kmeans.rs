mod common;

use common::points40;
use partitionlab::kmeans::{
    assign_points, display_round, lloyd, update_means, Dataset, KMeansConfig, StopReason, TieBreak,
};

fn centers(pairs: &[(f64, f64)]) -> Vec<Vec<f64>> {
    pairs.iter().map(|&(x, y)| vec![x, y]).collect()
}

fn k4() -> Vec<Vec<f64>> {
    centers(&[(33.0, 49.0), (68.0, 51.0), (75.0, 65.0), (84.0, 71.0)])
}

fn k6() -> Vec<Vec<f64>> {
    centers(&[(0.0, 0.0), (42.0, 42.0), (54.0, 54.0), (68.0, 51.0), (77.0, 71.0), (83.0, 65.0)])
}

fn rounded(rows: &[Vec<f64>]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.iter().map(|&d| display_round(d)).collect()).collect()
}

#[test]
fn first_pass_with_four_centers() {
    let a = assign_points(&points40(), &k4(), TieBreak::default()).unwrap();
    let expected: [[i64; 4]; 7] = [
        [39, 6, 10, 20],
        [16, 23, 36, 47],
        [41, 6, 15, 23],
        [29, 11, 16, 27],
        [16, 23, 36, 47],
        [15, 24, 37, 48],
        [52, 21, 8, 6],
    ];
    assert_eq!(rounded(&a.distances[..7]), expected.map(|r| r.to_vec()).to_vec());
    assert_eq!(a.labels[..7], [2, 1, 2, 2, 1, 1, 4]);
}

#[test]
fn first_pass_with_six_centers() {
    let a = assign_points(&points40(), &k6(), TieBreak::default()).unwrap();
    let expected: [[i64; 6]; 10] = [
        [91, 33, 18, 6, 17, 15],
        [63, 5, 14, 23, 42, 43],
        [89, 33, 20, 6, 21, 17],
        [84, 25, 8, 11, 21, 24],
        [63, 5, 14, 23, 42, 43],
        [62, 4, 14, 24, 42, 44],
        [105, 47, 31, 21, 8, 0],
        [109, 50, 34, 25, 6, 6],
        [85, 25, 9, 13, 21, 24],
        [0, 59, 76, 85, 105, 105],
    ];
    assert_eq!(rounded(&a.distances[..10]), expected.map(|r| r.to_vec()).to_vec());
    assert_eq!(a.labels[..10], [4, 2, 4, 3, 2, 2, 6, 6, 3, 1]);
    assert_eq!(a.distances[6][5], 0.0);
    // record 0008 sits exactly between centers 5 and 6
    assert_eq!(a.distances[7][4], a.distances[7][5]);
    let low = assign_points(&points40(), &k6(), TieBreak::LowestIndex).unwrap();
    assert_eq!(low.labels[7], 5);
}

#[test]
fn absent_students_form_a_zero_center() {
    let ds = points40();
    let zeros: Vec<usize> = ds.points().iter().map(|p| if p.coords == [0.0, 0.0] { 1 } else { 2 }).collect();
    let c = update_means(&ds, &zeros, &k4()[..2]).unwrap();
    assert_eq!(c[0], vec![0.0, 0.0]);
}

#[test]
fn four_cluster_run_converges() {
    let ds = points40();
    let r = lloyd(&ds, &KMeansConfig::with_centers(k4())).unwrap();
    assert_eq!(r.trace.stop, StopReason::LabelsStable);
    assert_eq!(r.trace.iteration_count(), 10);
    // frozen from an independent NumPy implementation of the same rules
    let expected = [
        4, 2, 4, 3, 2, 2, 4, 4, 3, 1, 3, 3, 3, 3, 3, 2, 4, 4, 4, 2, 3, 3, 2, 1, 4, 3, 3, 4, 3, 3, 3, 4, 3, 1,
        4, 1, 2, 3, 3, 4,
    ];
    assert_eq!(r.labels, expected);
    assert!((r.trace.final_sse - 2505.3452380952385).abs() < 1e-9);
    assert_eq!(r.centers[0], vec![0.0, 0.0]);
}

#[test]
fn six_cluster_run_converges_fast() {
    let r = lloyd(&points40(), &KMeansConfig::with_centers(k6())).unwrap();
    assert_eq!(r.trace.iteration_count(), 2);
    assert!((r.trace.final_sse - 1121.6709956709956).abs() < 1e-9);
}

fn brute_sse(ds: &Dataset, labels: &[usize], centers: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for (i, p) in ds.points().iter().enumerate() {
        let c = &centers[labels[i] - 1];
        let dx = p.coords[0] - c[0];
        let dy = p.coords[1] - c[1];
        total += dx * dx + dy * dy;
    }
    total
}

#[test]
fn final_sse_matches_resummation() {
    let ds = points40();
    let r = lloyd(&ds, &KMeansConfig::with_centers(k4())).unwrap();
    assert!((r.trace.final_sse - brute_sse(&ds, &r.labels, &r.centers)).abs() < 1e-9);
}

#[test]
fn final_state_is_a_fixpoint() {
    let ds = points40();
    for init in [k4(), k6()] {
        let r = lloyd(&ds, &KMeansConfig::with_centers(init)).unwrap();
        let again = assign_points(&ds, &r.centers, TieBreak::default()).unwrap();
        assert_eq!(again.labels, r.labels);
    }
}

#[test]
fn sse_never_increases_on_points40() {
    for init in [k4(), k6()] {
        let r = lloyd(&points40(), &KMeansConfig::with_centers(init)).unwrap();
        let seq = r.trace.sse_sequence();
        assert!(seq.windows(2).all(|w| w[1] <= w[0]), "{seq:?}");
    }
}
