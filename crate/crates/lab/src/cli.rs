//! `pingpong` command-line front end.
//!
//! Summaries are `key=value` lines; absent statistics print as `na`. Exit
//! codes: 0 success, 2 invalid arguments or a simulation fault, 3 I/O error.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pingpong_core::analysis::{
    default_grid, dpd_click_probability, opaque_closed_form, translucent_closed_form,
    translucent_exact_engine,
};
use pingpong_core::attacks::{Attack, AttackStrategy, TranslucentAttack};
use pingpong_core::protocol::{ProtocolConfig, QberConvention, SessionStats};

use crate::runner::{dpd_clicks, run_session_parallel, sweep_parallel, threads_from_env};
use crate::{sweep_csv, transcript, LabError, LabResult};

#[derive(Debug, Parser)]
#[command(name = "pingpong", version, about = "Ping-Pong QKD simulation lab")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte Carlo session with an eavesdropper.
    Simulate(RunArgs),
    /// Closed-form and exact-engine figures at one point.
    Exact(RunArgs),
    /// Closed form against exact engine over a (p0, D) grid, as CSV.
    Sweep(RunArgs),
    /// False-photon Z^1 rounds only: empirical and exact P+ click rates.
    DpdDemo(RunArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// none | opaque | translucent[:D=<f>] | wojcik | cai
    #[arg(long)]
    pub attack: Option<String>,
    /// Probability that Alice encodes 0.
    #[arg(long, default_value_t = 0.5)]
    pub p0: f64,
    /// Disturbance for a bare `translucent` attack name.
    #[arg(long, default_value_t = 0.2)]
    pub d: f64,
    #[arg(long, default_value_t = 0.5)]
    pub control_prob: f64,
    #[arg(long, default_value_t = 0.25)]
    pub false_prob: f64,
    #[arg(long, default_value_t = 10_000)]
    pub rounds: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file: the summary (simulate, exact, dpd-demo) or the CSV (sweep).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-round transcript CSV (simulate only).
    #[arg(long)]
    pub transcript: Option<PathBuf>,
    /// Fraction of the raw key disclosed for authentication.
    #[arg(long, default_value_t = 0.5)]
    pub sample_fraction: f64,
    /// fidelity | bell-decode
    #[arg(long, default_value = "fidelity")]
    pub qber_convention: String,
    /// Comma-separated p0 values for sweep.
    #[arg(long, value_delimiter = ',')]
    pub p0_grid: Option<Vec<f64>>,
    /// Comma-separated D values for sweep.
    #[arg(long, value_delimiter = ',')]
    pub d_grid: Option<Vec<f64>>,
}

impl RunArgs {
    fn attack(&self, default: &str) -> LabResult<Attack> {
        let name = self.attack.as_deref().unwrap_or(default);
        let parsed = if name == "translucent" {
            TranslucentAttack::new(self.d).map(Attack::Translucent)
        } else {
            name.parse()
        };
        parsed.map_err(|e| LabError::Usage(format!("--attack {name}: {e}")))
    }

    fn config(&self) -> LabResult<ProtocolConfig> {
        let qber_convention: QberConvention = self
            .qber_convention
            .parse()
            .map_err(|e| LabError::Usage(format!("--qber-convention: {e}")))?;
        let cfg = ProtocolConfig {
            p0: self.p0,
            control_prob: self.control_prob,
            false_prob: self.false_prob,
            rounds: self.rounds,
            master_seed: self.seed,
            qber_convention,
            sample_fraction: self.sample_fraction,
        };
        cfg.validate().map_err(|e| LabError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "pingpong: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> LabResult<()> {
    match cmd {
        Command::Simulate(a) => simulate(a, out),
        Command::Exact(a) => exact(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::DpdDemo(a) => dpd_demo(a, out),
    }
}

struct Summary(Vec<(&'static str, String)>);

impl Summary {
    fn new() -> Self {
        Summary(Vec::new())
    }

    fn put(&mut self, key: &'static str, v: impl Display) {
        self.0.push((key, v.to_string()));
    }

    fn opt(&mut self, key: &'static str, v: Option<impl Display>) {
        self.0.push((key, v.map_or_else(|| "na".to_string(), |x| x.to_string())));
    }

    fn render(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }

    /// Writes to `out`, and to `path` as well when given.
    fn emit(&self, out: &mut dyn Write, path: Option<&Path>) -> LabResult<()> {
        let text = self.render();
        out.write_all(text.as_bytes())?;
        out.flush()?;
        if let Some(p) = path {
            std::fs::write(p, text.as_bytes())?;
        }
        Ok(())
    }
}

fn create(path: &Path) -> LabResult<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn convention_name(c: QberConvention) -> String {
    c.to_string()
}

fn simulate(a: &RunArgs, out: &mut dyn Write) -> LabResult<()> {
    let attack = a.attack("none")?;
    let cfg = a.config()?;
    let (stats, records) = run_session_parallel(&cfg, &attack, threads_from_env())?;
    if let Some(path) = &a.transcript {
        let mut w = create(path)?;
        transcript::write_records(&mut w, &records)?;
        w.flush()?;
    }
    session_summary(&attack, &cfg, &stats).emit(out, a.out.as_deref())
}

fn session_summary(attack: &Attack, cfg: &ProtocolConfig, s: &SessionStats) -> Summary {
    let t = &s.tally;
    let mut m = Summary::new();
    m.put("attack", attack);
    m.put("p0", cfg.p0);
    m.put("rounds", t.rounds);
    m.put("seed", cfg.master_seed);
    m.put("discarded", t.discarded);
    m.put("lost", t.lost);
    m.put("control_rounds", t.control);
    m.put("control_mismatches", t.control_mismatches);
    m.put("message_rounds", t.message);
    m.put("qber_rounds", t.qber_rounds);
    m.put("bell_tamper", t.tamper);
    m.opt("qber_bell", s.qber_bell);
    m.opt("qber_fidelity", s.qber_fidelity);
    m.opt("i_ab", s.i_ab);
    m.put("i_ab_convention", convention_name(s.i_ab_convention));
    m.opt("control_detection_rate", s.control_detection_rate);
    m.put("dpd_tests", t.dpd_tests);
    m.put("dpd_clicks", t.dpd_clicks);
    m.opt("dpd_click_rate", s.dpd_click_rate);
    m.put("raw_key_length", s.raw_key_length);
    m.put("auth_sampled", s.auth.as_ref().map_or(0, |a| a.sampled.len()));
    m.opt("auth_mismatch", s.auth_mismatch);
    m.put("key_length", s.key_length);
    m.opt("eve_accuracy", s.eve_accuracy);
    m.put("loss_rate", s.loss_rate);
    m
}

fn exact(a: &RunArgs, out: &mut dyn Write) -> LabResult<()> {
    let attack = a.attack("translucent")?;
    let mut m = Summary::new();
    m.put("attack", attack);
    m.put("p0", a.p0);
    match attack {
        Attack::Opaque(_) => {
            let r = opaque_closed_form(a.p0)?;
            m.put("q0", r.q0);
            m.put("q1", r.q1);
            m.put("q", r.q);
            m.put("i_ab", r.i_ab);
        }
        Attack::Translucent(t) => {
            let d = t.disturbance();
            let closed = translucent_closed_form(a.p0, d)?;
            let engine = translucent_exact_engine(a.p0, d)?;
            m.put("d", d);
            m.put("q_formula", closed.qber_fidelity);
            m.put("q_exact", engine.qber_fidelity);
            m.put("i_ab", closed.i_ab);
            m.put("i_ae", closed.i_ae);
            m.put("lambda_3", closed.eigenvalues[0]);
            m.put("lambda_4", closed.eigenvalues[1]);
            m.put("p_i", closed.p_i);
            m.put("p_z", closed.p_z);
            m.put("control_detection", closed.control_detection);
            m.put("max_deviation", format!("{:e}", closed.max_deviation(&engine)?));
        }
        Attack::Wojcik(_) => {
            m.put("dpd_click_probability", dpd_click_probability(true)?);
        }
        Attack::None(_) => {
            m.put("dpd_click_probability", dpd_click_probability(false)?);
        }
        Attack::Cai(_) => {
            return Err(LabError::Usage("no exact analysis for attack cai".into()));
        }
    }
    m.emit(out, a.out.as_deref())
}

fn sweep(a: &RunArgs, out: &mut dyn Write) -> LabResult<()> {
    let p0s = a.p0_grid.clone().unwrap_or_else(default_grid);
    let ds = a.d_grid.clone().unwrap_or_else(default_grid);
    if p0s.is_empty() || ds.is_empty() {
        return Err(LabError::Usage("sweep grids must be nonempty".into()));
    }
    if let Some(bad) = p0s.iter().chain(&ds).find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(LabError::Usage(format!("grid value {bad} outside [0, 1]")));
    }
    let rows = sweep_parallel(&p0s, &ds, threads_from_env())?;
    match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            sweep_csv::write_sweep(&mut w, &rows)?;
            w.flush()?;
            writeln!(out, "rows={}", rows.len())?;
            writeln!(out, "out={}", path.display())?;
        }
        None => sweep_csv::write_sweep(&mut *out, &rows)?,
    }
    Ok(())
}

fn dpd_demo(a: &RunArgs, out: &mut dyn Write) -> LabResult<()> {
    let attack = a.attack("none")?;
    let eve = match attack {
        Attack::None(_) => false,
        Attack::Wojcik(_) => true,
        other => {
            return Err(LabError::Usage(format!(
                "dpd-demo supports attacks none and wojcik, not {}",
                other.name()
            )))
        }
    };
    if a.rounds == 0 {
        return Err(LabError::Usage("rounds must be at least 1".into()));
    }
    let clicks = dpd_clicks(&attack, a.seed, a.rounds, threads_from_env())?;
    let mut m = Summary::new();
    m.put("attack", attack);
    m.put("seed", a.seed);
    m.put("applicable_rounds", a.rounds);
    m.put("clicks", clicks);
    m.put("click_rate", clicks as f64 / a.rounds as f64);
    m.put("exact_click_probability", dpd_click_probability(eve)?);
    m.emit(out, a.out.as_deref())
}

/// Entry point for the binary.
pub fn main_with_stdio() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
