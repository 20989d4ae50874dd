//! Per-round transcript CSV.

use std::io::{Read, Write};

use pingpong_core::protocol::{PhotonKind, RoundMode, RoundRecord};

use crate::{LabError, LabResult};

pub const HEADER: [&str; 9] = [
    "index",
    "mode",
    "kind",
    "alice_bit",
    "bob_bit",
    "control_mismatch",
    "dpd_click",
    "photon_lost",
    "discarded",
];

/// One transcript line; `None` is written as an empty field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptRow {
    pub index: u64,
    pub mode: RoundMode,
    pub kind: PhotonKind,
    pub alice_bit: Option<u8>,
    pub bob_bit: Option<u8>,
    pub control_mismatch: Option<bool>,
    pub dpd_click: Option<bool>,
    pub photon_lost: bool,
    pub discarded: bool,
}

impl From<&RoundRecord> for TranscriptRow {
    fn from(r: &RoundRecord) -> Self {
        Self {
            index: r.index,
            mode: r.mode,
            kind: r.kind,
            alice_bit: r.alice_bit,
            bob_bit: r.bob_decoded_bit,
            control_mismatch: r.control_mismatch,
            dpd_click: r.dpd_click,
            photon_lost: r.photon_lost,
            discarded: r.discarded,
        }
    }
}

fn mode_str(m: RoundMode) -> &'static str {
    match m {
        RoundMode::Control => "control",
        RoundMode::Message => "message",
    }
}

fn kind_str(k: PhotonKind) -> &'static str {
    match k {
        PhotonKind::True => "true",
        PhotonKind::False => "false",
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_transcript<W: Write>(out: W, rows: impl IntoIterator<Item = TranscriptRow>) -> LabResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            r.index.to_string(),
            mode_str(r.mode).to_string(),
            kind_str(r.kind).to_string(),
            opt(r.alice_bit),
            opt(r.bob_bit),
            opt(r.control_mismatch),
            opt(r.dpd_click),
            r.photon_lost.to_string(),
            r.discarded.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_records<W: Write>(out: W, records: &[RoundRecord]) -> LabResult<()> {
    write_transcript(out, records.iter().map(TranscriptRow::from))
}

fn bad(line: usize, what: &str) -> LabError {
    LabError::Format(format!("line {line}: {what}"))
}

fn parse_opt<T: std::str::FromStr>(s: &str, line: usize, col: &str) -> LabResult<Option<T>> {
    if s.is_empty() {
        return Ok(None);
    }
    s.parse().map(Some).map_err(|_| bad(line, col))
}

pub fn read_transcript<R: Read>(input: R) -> LabResult<Vec<TranscriptRow>> {
    let mut rd = csv::Reader::from_reader(input);
    if rd.headers()?.iter().ne(HEADER) {
        return Err(LabError::Format("unexpected transcript header".into()));
    }
    let mut rows = Vec::new();
    for (i, rec) in rd.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        let f = |k: usize| rec.get(k).unwrap_or("");
        let mode = match f(1) {
            "control" => RoundMode::Control,
            "message" => RoundMode::Message,
            _ => return Err(bad(line, "mode")),
        };
        let kind = match f(2) {
            "true" => PhotonKind::True,
            "false" => PhotonKind::False,
            _ => return Err(bad(line, "kind")),
        };
        rows.push(TranscriptRow {
            index: f(0).parse().map_err(|_| bad(line, "index"))?,
            mode,
            kind,
            alice_bit: parse_opt(f(3), line, "alice_bit")?,
            bob_bit: parse_opt(f(4), line, "bob_bit")?,
            control_mismatch: parse_opt(f(5), line, "control_mismatch")?,
            dpd_click: parse_opt(f(6), line, "dpd_click")?,
            photon_lost: f(7).parse().map_err(|_| bad(line, "photon_lost"))?,
            discarded: f(8).parse().map_err(|_| bad(line, "discarded"))?,
        });
    }
    Ok(rows)
}
