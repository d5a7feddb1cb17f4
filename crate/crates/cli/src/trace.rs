//! Tab-separated rendering of a k-means run, one block per iteration.
//!
//! ```text
//! iteration  1  33,49  68,51  75,65  84,71
//! id  PSCP  CO  d1  d2  d3  d4  label
//! 11087-i-0001  72  55  39  6  10  20  2
//! ...
//! ```
//!
//! Blocks are separated by a blank line. Distances are rounded half away
//! from zero unless `precise` is set.

use partitionlab::kmeans::{display_round, Dataset, KMeansTrace};

pub fn format_trace(ds: &Dataset, columns: &[String], trace: &KMeansTrace, precise: bool) -> String {
    let mut out = String::new();
    for (i, it) in trace.iterations.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let centers: Vec<String> = it
            .centers
            .iter()
            .map(|c| c.iter().map(|&x| format_center(x, precise)).collect::<Vec<_>>().join(","))
            .collect();
        out.push_str(&format!("iteration\t{}\t{}\n", i + 1, centers.join("\t")));

        let mut header = vec!["id".to_string()];
        header.extend(columns.iter().cloned());
        header.extend((1..=it.centers.len()).map(|j| format!("d{j}")));
        header.push("label".into());
        out.push_str(&header.join("\t"));
        out.push('\n');

        for ((p, dists), label) in ds.points().iter().zip(&it.distances).zip(&it.labels) {
            let mut row = vec![p.id.clone()];
            row.extend(p.coords.iter().map(|x| x.to_string()));
            row.extend(dists.iter().map(
                |&d| {
                    if precise {
                        d.to_string()
                    } else {
                        display_round(d).to_string()
                    }
                },
            ));
            row.push(label.to_string());
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
    }
    out
}

/// Up to four decimals with trailing zeros dropped (`30.1667`, `33`), or the
/// shortest round-trip representation when `precise`.
fn format_center(x: f64, precise: bool) -> String {
    if precise {
        return x.to_string();
    }
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
