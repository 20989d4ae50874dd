//! `(p0, D)` sweep CSV with 12 significant digits per value.

use std::io::{Read, Write};

use pingpong_core::analysis::SweepRow;

use crate::{LabError, LabResult};

pub const HEADER: [&str; 9] = [
    "p0",
    "d",
    "q_formula",
    "q_exact",
    "i_ab",
    "i_ae",
    "p_i",
    "p_z",
    "control_detection",
];

const DIGITS: usize = 12;

/// Positional decimal with exactly 12 significant digits (`0` for zero).
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else if (exp as usize) + 1 >= digits.len() {
        format!("{}{}", digits, "0".repeat(exp as usize + 1 - digits.len()))
    } else {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

fn fields(r: &SweepRow) -> [f64; 9] {
    [r.p0, r.d, r.q_formula, r.q_exact, r.i_ab, r.i_ae, r.p_i, r.p_z, r.control_detection]
}

pub fn write_sweep<W: Write>(out: W, rows: &[SweepRow]) -> LabResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record(fields(r).iter().map(|&x| format_sig(x)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_sweep<R: Read>(input: R) -> LabResult<Vec<SweepRow>> {
    let mut rd = csv::Reader::from_reader(input);
    if rd.headers()?.iter().ne(HEADER) {
        return Err(LabError::Format("unexpected sweep header".into()));
    }
    let mut rows = Vec::new();
    for (i, rec) in rd.records().enumerate() {
        let rec = rec?;
        let mut v = [0.0; 9];
        if rec.len() != v.len() {
            return Err(LabError::Format(format!("line {}: expected 9 fields", i + 2)));
        }
        for (slot, s) in v.iter_mut().zip(rec.iter()) {
            *slot = s
                .parse()
                .map_err(|_| LabError::Format(format!("line {}: bad number {s:?}", i + 2)))?;
        }
        rows.push(SweepRow {
            p0: v[0],
            d: v[1],
            q_formula: v[2],
            q_exact: v[3],
            i_ab: v[4],
            i_ae: v[5],
            p_i: v[6],
            p_z: v[7],
            control_detection: v[8],
        });
    }
    Ok(rows)
}
