//! Text formats read and written by the command line.

use std::fs;
use std::path::Path;

use partitionlab::kmeans::{Dataset, Point};
use partitionlab::Partition;

use crate::error::{CliError, Result};

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// A points CSV: the dataset plus the names of its coordinate columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PointsTable {
    pub columns: Vec<String>,
    pub dataset: Dataset,
}

/// Parses `id,<col1>,<col2>,...` with one record per line.
pub fn parse_points_csv(text: &str, source: &str) -> Result<PointsTable> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| CliError::parse(source, e.to_string()))?.clone();
    if header.len() < 2 {
        return Err(CliError::parse(source, "header must be `id,<col1>,...` with at least one coordinate"));
    }
    let columns: Vec<String> = header.iter().skip(1).map(str::to_string).collect();

    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::parse(source, e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != header.len() {
            return Err(CliError::parse(
                source,
                format!("line {line}: expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        let coords = record
            .iter()
            .skip(1)
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| CliError::parse(source, format!("line {line}: `{f}` is not a number")))
            })
            .collect::<Result<Vec<f64>>>()?;
        points.push(Point::new(&record[0], coords));
    }
    Ok(PointsTable { columns, dataset: Dataset::new(points)? })
}

/// `id,label` with 1-based labels.
pub fn format_labels_csv(ds: &Dataset, labels: &[usize]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "label"]).expect("in-memory write");
    for (p, label) in ds.points().iter().zip(labels) {
        w.write_record([p.id.as_str(), &label.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn parse_labels_csv(text: &str) -> Result<Vec<(String, usize)>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|r| {
            let r = r.map_err(|e| CliError::parse("labels", e.to_string()))?;
            let label = r
                .get(1)
                .and_then(|l| l.parse().ok())
                .ok_or_else(|| CliError::parse("labels", "malformed row"))?;
            Ok((r[0].to_string(), label))
        })
        .collect()
}

/// `vertex,part` with 1-based vertices and 0-based parts.
pub fn format_parts_csv(p: &Partition) -> String {
    let mut out = String::from("vertex,part\n");
    for (v, part) in p.assignments().iter().enumerate() {
        out.push_str(&format!("{},{}\n", v + 1, part));
    }
    out
}

pub fn parse_parts_csv(text: &str) -> Result<Partition> {
    let mut part_of = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        let bad = || CliError::parse("parts", format!("line {}: malformed row", i + 1));
        let (v, p) = line.split_once(',').ok_or_else(bad)?;
        let v: usize = v.parse().map_err(|_| bad())?;
        if v != part_of.len() + 1 {
            return Err(bad());
        }
        part_of.push(p.parse().map_err(|_| bad())?);
    }
    Ok(Partition::new(part_of)?)
}

fn parse_center(text: &str, source: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::parse(source, format!("`{}` is not a number", t.trim())))
        })
        .collect()
}

/// `x1,y1;x2,y2;...`
pub fn parse_centers(text: &str) -> Result<Vec<Vec<f64>>> {
    let centers: Vec<Vec<f64>> = text
        .split(';')
        .filter(|c| !c.trim().is_empty())
        .map(|c| parse_center(c, "--centers"))
        .collect::<Result<_>>()?;
    if centers.is_empty() {
        return Err(CliError::parse("--centers", "no centers given"));
    }
    Ok(centers)
}

/// One comma-separated center per line; blank lines and `#` comments skipped.
pub fn parse_centers_file(text: &str, source: &str) -> Result<Vec<Vec<f64>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_center(l, source))
        .collect()
}

/// Comma-separated positive integers, e.g. `3,3` or `1,2`.
pub fn parse_usize_list(text: &str, flag: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("{flag}: `{}` is not a non-negative integer", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centers_grammar() {
        assert_eq!(parse_centers("33,49;68,51").unwrap(), vec![vec![33.0, 49.0], vec![68.0, 51.0]]);
        assert_eq!(parse_centers(" 1.5 , -2 ;").unwrap(), vec![vec![1.5, -2.0]]);
        assert!(parse_centers("1,x").is_err());
        assert!(parse_centers("").is_err());
        assert!(parse_centers("nan,1").is_err());
        assert_eq!(
            parse_centers_file("# c\n1,2\n\n3,4\n", "f").unwrap(),
            vec![vec![1.0, 2.0], vec![3.0, 4.0]]
        );
    }

    #[test]
    fn points_csv() {
        let t = parse_points_csv("id,a,b\nx, 1,2\ny,3,4.5\n", "t").unwrap();
        assert_eq!(t.columns, vec!["a", "b"]);
        assert_eq!(t.dataset.points()[1].coords, vec![3.0, 4.5]);
        let err = parse_points_csv("id,a\nx,1\ny,oops\n", "t").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("line 3"), "{err}");
        assert_eq!(parse_points_csv("id,a\n", "t").unwrap_err().exit_code(), 1);
        assert_eq!(parse_points_csv("id\nx\n", "t").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn labels_with_awkward_ids_round_trip() {
        let ds = Dataset::new(vec![Point::new("a,b", vec![0.0]), Point::new("c\"d", vec![1.0])]).unwrap();
        let text = format_labels_csv(&ds, &[2, 1]);
        assert_eq!(parse_labels_csv(&text).unwrap(), vec![("a,b".to_string(), 2), ("c\"d".to_string(), 1)]);
    }

    #[test]
    fn parts_csv_round_trip() {
        let p = Partition::new(vec![1, 0, 1, 2]).unwrap();
        let text = format_parts_csv(&p);
        assert_eq!(text, "vertex,part\n1,1\n2,0\n3,1\n4,2\n");
        assert_eq!(parse_parts_csv(&text).unwrap(), p);
    }
}
