use pingpong_core::analysis::{default_grid, sweep};
use pingpong_core::attacks::Attack;
use pingpong_core::protocol::{run_session, ProtocolConfig};
use pingpong_lab::sweep_csv::{format_sig, read_sweep, write_sweep};
use pingpong_lab::transcript::{read_transcript, write_records, write_transcript, TranscriptRow};
use pingpong_lab::LabError;
use proptest::prelude::*;

#[test]
fn transcript_round_trip() {
    for name in ["none", "translucent:D=0.3", "wojcik", "cai"] {
        let attack: Attack = name.parse().unwrap();
        let cfg = ProtocolConfig {
            rounds: 400,
            master_seed: 9,
            ..ProtocolConfig::default()
        };
        let (_, records) = run_session(&cfg, &attack).unwrap();
        let mut bytes = Vec::new();
        write_records(&mut bytes, &records).unwrap();
        let rows = read_transcript(bytes.as_slice()).unwrap();
        let want: Vec<TranscriptRow> = records.iter().map(TranscriptRow::from).collect();
        assert_eq!(rows, want, "{name}");
        let mut again = Vec::new();
        write_transcript(&mut again, rows).unwrap();
        assert_eq!(bytes, again, "{name}");
    }
}

#[test]
fn transcript_header_and_empty_fields() {
    let (_, records) = run_session(
        &ProtocolConfig {
            rounds: 20,
            ..ProtocolConfig::default()
        },
        &Attack::None(Default::default()),
    )
    .unwrap();
    let mut bytes = Vec::new();
    write_records(&mut bytes, &records).unwrap();
    let text = String::from_utf8(bytes).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,mode,kind,alice_bit,bob_bit,control_mismatch,dpd_click,photon_lost,discarded"
    );
    let control = lines.find(|l| l.contains(",control,true,")).unwrap();
    assert!(control.contains(",control,true,,,"), "{control}");
}

#[test]
fn malformed_transcript_is_rejected() {
    let bad = "index,mode,kind,alice_bit,bob_bit,control_mismatch,dpd_click,photon_lost,discarded\n0,sideways,true,,,,,false,false\n";
    assert!(matches!(read_transcript(bad.as_bytes()), Err(LabError::Format(_))));
    assert!(matches!(read_transcript("a,b\n1,2\n".as_bytes()), Err(LabError::Format(_))));
}

#[test]
fn sweep_round_trip() {
    let g = default_grid();
    let rows = sweep(&g, &g).unwrap();
    let mut bytes = Vec::new();
    write_sweep(&mut bytes, &rows).unwrap();
    let text = std::str::from_utf8(&bytes).unwrap();
    assert_eq!(text.lines().next().unwrap(), "p0,d,q_formula,q_exact,i_ab,i_ae,p_i,p_z,control_detection");
    assert_eq!(text.lines().count(), 122);
    let back = read_sweep(bytes.as_slice()).unwrap();
    assert_eq!(back.len(), rows.len());
    for (a, b) in back.iter().zip(&rows) {
        assert!((a.q_exact - b.q_exact).abs() <= 1e-11 * b.q_exact.abs().max(1e-300));
        assert_eq!((a.p0, a.d), (b.p0, b.d));
    }
    let mut again = Vec::new();
    write_sweep(&mut again, &back).unwrap();
    assert_eq!(bytes, again);
}

proptest! {
    #[test]
    fn twelve_significant_digits_parse_back(x in prop::num::f64::NORMAL) {
        let s = format_sig(x);
        prop_assert!(!s.contains('e'));
        let y: f64 = s.parse().unwrap();
        prop_assert!((x - y).abs() <= 5e-12 * x.abs());
        prop_assert_eq!(format_sig(y), s);
    }
}
