//! Dataset CSV format.
//!
//! One header row, one row per point. Feature columns come first in header
//! order with arbitrary names; a column named `label` holds `pos` or `neg`;
//! a column named `identity` holds a non-negative integer. Both label
//! columns are optional. Coordinates are written in shortest round-trip
//! form, so save followed by load reproduces the dataset exactly.

use std::path::Path;

use crate::error::{Error, Result};
use crate::types::{BinaryLabel, Dataset, Point};

fn file_err(path: &Path, message: impl Into<String>) -> Error {
    Error::MalformedFile {
        path: path.into(),
        message: message.into(),
    }
}

/// Reads a dataset. Cell-level problems name the file line and 1-based
/// column; every value must parse and be finite.
pub fn load_csv(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let mut reader = ::csv::ReaderBuilder::new()
        .trim(::csv::Trim::All)
        .from_path(path)
        .map_err(|e| file_err(path, e.to_string()))?;
    let headers = reader
        .headers()
        .map_err(|e| file_err(path, e.to_string()))?
        .clone();
    let mut feature_cols = Vec::new();
    let mut label_col = None;
    let mut identity_col = None;
    for (i, name) in headers.iter().enumerate() {
        match name {
            "label" => {
                if label_col.replace(i).is_some() {
                    return Err(file_err(path, "duplicate \"label\" column"));
                }
            }
            "identity" => {
                if identity_col.replace(i).is_some() {
                    return Err(file_err(path, "duplicate \"identity\" column"));
                }
            }
            _ => feature_cols.push(i),
        }
    }
    if feature_cols.is_empty() {
        return Err(file_err(path, "no feature columns in header"));
    }
    let mut points = Vec::new();
    let mut labels = label_col.map(|_| Vec::new());
    let mut identities = identity_col.map(|_| Vec::new());
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| file_err(path, e.to_string()))?;
        let row = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or(index + 2);
        let cell_err = |column: usize, message: String| Error::CsvCell {
            path: path.into(),
            row,
            column: column + 1,
            message,
        };
        let mut coords = Vec::with_capacity(feature_cols.len());
        for &col in &feature_cols {
            let raw = &record[col];
            let value: f64 = raw
                .parse()
                .map_err(|_| cell_err(col, format!("cannot parse {raw:?} as a number")))?;
            if !value.is_finite() {
                return Err(cell_err(col, format!("{raw:?} is not finite")));
            }
            coords.push(value);
        }
        points.push(Point::new(coords)?);
        if let (Some(labels), Some(col)) = (labels.as_mut(), label_col) {
            let raw = &record[col];
            labels.push(match raw {
                "pos" => BinaryLabel::Positive,
                "neg" => BinaryLabel::Negative,
                _ => {
                    return Err(cell_err(
                        col,
                        format!("label must be \"pos\" or \"neg\", got {raw:?}"),
                    ))
                }
            });
        }
        if let (Some(identities), Some(col)) = (identities.as_mut(), identity_col) {
            let raw = &record[col];
            let id: usize = raw.parse().map_err(|_| {
                cell_err(col, format!("cannot parse {raw:?} as an identity"))
            })?;
            identities.push(id);
        }
    }
    Dataset::with_labels(points, labels, identities)
}

/// Writes a dataset with headers `x0..x{d-1}`, then `label` and `identity`
/// when the dataset carries them.
pub fn save_csv(data: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut writer =
        ::csv::Writer::from_path(path).map_err(|e| file_err(path, e.to_string()))?;
    let mut header: Vec<String> = (0..data.dim()).map(|d| format!("x{d}")).collect();
    if data.binary_labels().is_some() {
        header.push("label".into());
    }
    if data.identity_labels().is_some() {
        header.push("identity".into());
    }
    writer
        .write_record(&header)
        .map_err(|e| file_err(path, e.to_string()))?;
    for i in 0..data.len() {
        let mut row: Vec<String> = data.point(i).coords().iter().map(|c| c.to_string()).collect();
        if let Some(labels) = data.binary_labels() {
            row.push(
                match labels[i] {
                    BinaryLabel::Positive => "pos",
                    BinaryLabel::Negative => "neg",
                }
                .into(),
            );
        }
        if let Some(ids) = data.identity_labels() {
            row.push(ids[i].to_string());
        }
        writer
            .write_record(&row)
            .map_err(|e| file_err(path, e.to_string()))?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn pt(coords: &[f64]) -> Point {
        Point::from_slice(coords).unwrap()
    }

    fn write_file(content: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(content.as_bytes()).unwrap();
        file
    }

    #[test]
    fn round_trip_preserves_every_bit() {
        use BinaryLabel::{Negative as N, Positive as P};
        let data = Dataset::with_labels(
            vec![
                pt(&[0.1, -3.5]),
                pt(&[1e-17, 2.0 / 3.0]),
                pt(&[12345.6789, -0.0]),
            ],
            Some(vec![P, N, P]),
            Some(vec![0, 1, 1]),
        )
        .unwrap();
        let file = tempfile::NamedTempFile::new().unwrap();
        save_csv(&data, file.path()).unwrap();
        let back = load_csv(file.path()).unwrap();
        assert_eq!(back, data);
    }

    #[test]
    fn loads_feature_only_files() {
        let file = write_file("a,b\n1,2\n3,4\n");
        let data = load_csv(file.path()).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data.dim(), 2);
        assert!(data.binary_labels().is_none());
        assert!(data.identity_labels().is_none());
        assert_eq!(data.point(1), &pt(&[3.0, 4.0]));
    }

    #[test]
    fn label_and_identity_columns_are_recognised_by_name() {
        let file = write_file("x,label,y,identity\n1,pos,2,4\n3,neg,4,9\n");
        let data = load_csv(file.path()).unwrap();
        assert_eq!(data.dim(), 2);
        assert_eq!(data.point(0), &pt(&[1.0, 2.0]));
        assert_eq!(
            data.binary_labels().unwrap(),
            &[BinaryLabel::Positive, BinaryLabel::Negative]
        );
        assert_eq!(data.identity_labels().unwrap(), &[4, 9]);
    }

    #[test]
    fn nan_cell_is_reported_with_row_and_column() {
        let file = write_file("x,y\n1,2\n3,NaN\n");
        let err = load_csv(file.path()).unwrap_err();
        match err {
            Error::CsvCell { row, column, .. } => {
                assert_eq!(row, 3);
                assert_eq!(column, 2);
            }
            other => panic!("expected a cell error, got {other:?}"),
        }
    }

    #[test]
    fn bad_label_and_bad_identity_are_cell_errors() {
        let file = write_file("x,label\n1,up\n");
        assert!(matches!(
            load_csv(file.path()),
            Err(Error::CsvCell { row: 2, column: 2, .. })
        ));
        let file = write_file("x,identity\n1,-3\n");
        assert!(matches!(
            load_csv(file.path()),
            Err(Error::CsvCell { row: 2, column: 2, .. })
        ));
    }

    #[test]
    fn ragged_rows_and_missing_files_are_file_errors() {
        let file = write_file("x,y\n1,2\n3\n");
        assert!(matches!(
            load_csv(file.path()),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            load_csv("/nonexistent/nowhere.csv"),
            Err(Error::MalformedFile { .. })
        ));
    }

    #[test]
    fn header_only_file_is_an_empty_dataset_error() {
        let file = write_file("x,y\n");
        assert!(matches!(load_csv(file.path()), Err(Error::EmptyDataset)));
    }
}
