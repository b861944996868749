use crate::relation::WfPoint;

#[derive(Debug, thiserror::Error)]
pub enum SampleIoError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("row {row}: expected 16 numbers and a label, {reason}")]
    Row { row: usize, reason: String },
}

const HEADER: [&str; 17] = [
    "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3", "kx0", "kx1", "kx2", "kx3", "ky0", "ky1", "ky2", "ky3", "label",
];

/// One row per point: `x`, `y`, `k_x`, `k_y` (primed signs), then a label.
pub fn samples_to_csv(points: &[(WfPoint, String)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for (p, label) in points {
        let mut row: Vec<String> = [p.x, p.y, p.kx, p.ky].iter().flatten().map(|v| format!("{v:?}")).collect();
        row.push(label.clone());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn samples_from_csv(text: &str) -> Result<Vec<(WfPoint, String)>, SampleIoError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (row, rec) in r.records().enumerate() {
        let rec = rec?;
        if rec.len() != 17 {
            return Err(SampleIoError::Row { row: row + 1, reason: format!("found {} fields", rec.len()) });
        }
        let mut v = [0.0; 16];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = rec[i].trim().parse().map_err(|e| SampleIoError::Row { row: row + 1, reason: format!("column {}: {e}", HEADER[i]) })?;
        }
        let q = |o: usize| [v[o], v[o + 1], v[o + 2], v[o + 3]];
        out.push((WfPoint::primed(q(0), q(4), q(8), q(12)), rec[16].to_string()));
    }
    Ok(out)
}
