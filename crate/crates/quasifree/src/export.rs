use ccr_core::scalar::to_c64;
use ccr_core::{GeneratorIndex, Real};
use num_complex::Complex;

use crate::state::GramReport;

/// CSV with columns `indices,re,im`; indices are space separated.
pub fn npoint_csv<R: Real>(rows: &[(Vec<GeneratorIndex>, Complex<R>)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["indices", "re", "im"]).expect("in-memory write");
    for (idx, v) in rows {
        let z = to_c64(v);
        let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        w.write_record([idx.join(" "), format!("{:?}", z.re), format!("{:?}", z.im)])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn gram_json(report: &GramReport) -> String {
    serde_json::to_string_pretty(report).expect("plain struct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let s = npoint_csv(&[(vec![1, 2], Complex::new(0.5_f64, -1.0))]);
        assert_eq!(s, "indices,re,im\n1 2,0.5,-1.0\n");
    }
}
