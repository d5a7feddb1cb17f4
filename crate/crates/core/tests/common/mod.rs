#![allow(dead_code)]

use partitionlab::kmeans::{Dataset, Point};
use partitionlab::{Graph, SymMatrix};

pub const GRAPH1_EDGES: &[(usize, usize)] = &[
    (1, 8),
    (1, 9),
    (2, 3),
    (2, 7),
    (2, 9),
    (3, 7),
    (3, 9),
    (3, 10),
    (4, 5),
    (4, 6),
    (4, 10),
    (5, 6),
    (5, 10),
    (6, 10),
    (8, 9),
];

pub const GRAPH1_ADJACENCY: [[i32; 10]; 10] = [
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 1, 1, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
];

pub const GRAPH1_DEGREES: [i32; 10] = [2, 3, 4, 3, 3, 3, 2, 2, 4, 4];

pub const GRAPH1_LAPLACIAN: [[i32; 10]; 10] = [
    [2, 0, 0, 0, 0, 0, 0, -1, -1, 0],
    [0, 3, -1, 0, 0, 0, -1, 0, -1, 0],
    [0, -1, 4, 0, 0, 0, -1, 0, -1, -1],
    [0, 0, 0, 3, -1, -1, 0, 0, 0, -1],
    [0, 0, 0, -1, 3, -1, 0, 0, 0, -1],
    [0, 0, 0, -1, -1, 3, 0, 0, 0, -1],
    [0, -1, -1, 0, 0, 0, 2, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 2, -1, 0],
    [-1, -1, -1, 0, 0, 0, 0, -1, 4, 0],
    [0, 0, -1, -1, -1, -1, 0, 0, 0, 4],
];

pub const REFERENCE_SPECTRUM: [f64; 10] =
    [0.0000, 0.2602, 0.8638, 3.0000, 3.0607, 4.0000, 4.0000, 4.0000, 5.0000, 5.8154];

/// The 6x6 matrix entered verbatim for the second pass (not a Laplacian:
/// row 3 keeps the original degree 4).
pub const LITERAL_SECOND_PASS: [[f64; 6]; 6] = [
    [2.0, 0.0, 0.0, 0.0, -1.0, -1.0],
    [0.0, 3.0, -1.0, -1.0, 0.0, -1.0],
    [0.0, -1.0, 4.0, -1.0, 0.0, -1.0],
    [0.0, -1.0, -1.0, 2.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0, 2.0, -1.0],
    [-1.0, -1.0, -1.0, 0.0, -1.0, 4.0],
];

pub fn graph1() -> Graph {
    Graph::from_one_based(10, GRAPH1_EDGES).unwrap()
}

pub fn int_matrix<const N: usize>(rows: &[[i32; N]; N]) -> SymMatrix {
    let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    SymMatrix::from_rows(&rows).unwrap()
}

pub fn points40() -> Dataset {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/points40.csv");
    let text = std::fs::read_to_string(path).unwrap();
    let points = text
        .lines()
        .skip(1)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let mut fields = line.split(',');
            let id = fields.next().unwrap();
            Point::new(id, fields.map(|f| f.parse().unwrap()).collect())
        })
        .collect();
    Dataset::new(points).unwrap()
}
