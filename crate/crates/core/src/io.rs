//! CSV encodings for connection fields and trajectories.

use std::io::{self, Read, Write};

use crate::connection::FieldGrid;
use crate::gait::Trajectory;
use crate::real::Real;

pub const FIELD_HEADER: [&str; 8] = ["alpha1", "alpha2", "A11", "A12", "A21", "A22", "A31", "A32"];
pub const TRAJECTORY_HEADER: [&str; 9] = ["t", "x", "y", "theta", "alpha1", "alpha2", "xix", "xiy", "xitheta"];

/// 17 significant digits in scientific notation; negative zero prints as zero.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        format!("{:.16e}", 0.0)
    } else {
        format!("{v:.16e}")
    }
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn write_rows<W: Write, const N: usize>(
    w: W,
    header: [&str; N],
    rows: impl Iterator<Item = [f64; N]>,
) -> io::Result<()> {
    let mut out = writer(w);
    out.write_record(header)?;
    for row in rows {
        out.write_record(row.map(format_number))?;
    }
    out.flush()
}

/// One row per grid point in grid order; missing entries are written as `NaN`.
pub fn write_field_csv<T: Real, W: Write>(grid: &FieldGrid<T>, w: W) -> io::Result<()> {
    let n2 = grid.alpha2_values.len();
    let rows = grid.entries.iter().enumerate().map(|(idx, entry)| {
        let mut row = [f64::NAN; 8];
        row[0] = grid.alpha1_values[idx / n2].as_f64();
        row[1] = grid.alpha2_values[idx % n2].as_f64();
        if let Some(a) = entry {
            for (dst, v) in row[2..].iter_mut().zip(a.entries()) {
                *dst = v.as_f64();
            }
        }
        row
    });
    write_rows(w, FIELD_HEADER, rows)
}

pub type TrajectoryRow = [f64; 9];

pub fn trajectory_rows<T: Real>(traj: &Trajectory<T>) -> Vec<TrajectoryRow> {
    traj.samples
        .iter()
        .map(|s| {
            [
                s.t,
                s.pose.x,
                s.pose.y,
                s.pose.theta,
                s.shape.alpha1,
                s.shape.alpha2,
                s.twist.vx,
                s.twist.vy,
                s.twist.omega,
            ]
            .map(|v| v.as_f64())
        })
        .collect()
}

pub fn write_trajectory_rows<W: Write>(rows: &[TrajectoryRow], w: W) -> io::Result<()> {
    write_rows(w, TRAJECTORY_HEADER, rows.iter().copied())
}

pub fn write_trajectory_csv<T: Real, W: Write>(traj: &Trajectory<T>, w: W) -> io::Result<()> {
    write_trajectory_rows(&trajectory_rows(traj), w)
}

fn invalid(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}

pub fn read_trajectory_csv<R: Read>(r: R) -> io::Result<Vec<TrajectoryRow>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let header = reader.headers()?.clone();
    if header.iter().ne(TRAJECTORY_HEADER) {
        return Err(invalid(format!(
            "unexpected trajectory header {:?}",
            header.iter().collect::<Vec<_>>()
        )));
    }
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != 9 {
            return Err(invalid(format!(
                "row {} has {} fields, expected 9",
                line + 1,
                record.len()
            )));
        }
        let mut row = [0.0; 9];
        for (dst, field) in row.iter_mut().zip(record.iter()) {
            *dst = field
                .parse()
                .map_err(|e| invalid(format!("row {}: cannot parse `{field}`: {e}", line + 1)))?;
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::{sample_field, GridSpec};
    use crate::model::{Model, SwimmerParams};

    #[test]
    fn number_format() {
        assert_eq!(format_number(-1.0 / 3.0), "-3.3333333333333331e-1");
        assert_eq!(format_number(-0.0), "0.0000000000000000e0");
        assert_eq!(format_number(f64::NAN), "NaN");
        for v in [1.0 / 3.0, 7.0 / 27.0, 1e-300, -2.5e17, f64::MIN_POSITIVE] {
            assert_eq!(format_number(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn field_csv_layout() {
        let spec = GridSpec {
            min: [-1.0, -1.0],
            max: [1.0, 1.0],
            counts: [3, 3],
        };
        let grid = sample_field(&spec, &Model::corrected(SwimmerParams::unit())).unwrap();
        let mut buf = Vec::new();
        write_field_csv(&grid, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "alpha1,alpha2,A11,A12,A21,A22,A31,A32");
        assert_eq!(lines.len(), 10);
        assert!(!text.contains('\r'));
        let centre: Vec<f64> = lines[5].split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(&centre[..2], &[0.0, 0.0]);
    }

    #[test]
    fn rejects_bad_trajectory_csv() {
        assert!(read_trajectory_csv("a,b\n1,2\n".as_bytes()).is_err());
        let bad = format!("{}\n1,2,3,4,5,6,7,8,x\n", TRAJECTORY_HEADER.join(","));
        assert!(read_trajectory_csv(bad.as_bytes()).is_err());
    }
}
