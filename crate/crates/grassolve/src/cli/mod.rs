//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to a subcommand and writes its report to `out`
//! (JSON by default, `--format ascii` for aligned text). Diagnostics go to `err`. The exit
//! code is 0 when every asserted property holds, 1 when one fails (the failing check is
//! named on `err`), and 2 for unusable arguments.
//!
//! `GRASSOLVE_THREADS` caps the size of the rayon pool.

pub mod checks;

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bott::{cohomology_gr, cohomology_x, Bundle, Weight};
use crate::complex::{
    binomial, koszul_gr, resolution_spgr4, subcomplex_b, tate_spgr, ComplexDescriptor,
};
use crate::error::{Error, Result};
use crate::fiber::{split_blocks, ComponentFiber, LascouxReport, Which};
use crate::ktheory::{ext_table_spgr4, generators_gr, pairing_matrix_gr};

/// Output format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON.
    #[default]
    Json,
    /// Aligned text.
    Ascii,
}

/// Where a bundle's cohomology is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// The Grassmannian `Gr(k,N)`.
    #[default]
    Gr,
    /// The hyperplane section `X ⊂ Gr(2,N)`.
    X,
}

/// Variety for the `ktheory` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KSpace {
    /// `Gr(k,N)`.
    Gr,
    /// `SpGr(2,4)`.
    Spgr4,
}

/// Resolutions of the diagonal for Grassmannians and symplectic Grassmannians.
#[derive(Debug, Parser)]
#[command(name = "grassolve", version, about)]
pub struct Cli {
    /// Subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Koszul resolution of the diagonal of Gr(k,N), with the Cauchy rank identity.
    GrResolution {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The subcomplex B of the Tate resolution on SpGr(2,N) (the full resolution for N = 4).
    SpgrResolution {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Render the whole Tate complex D through this degree instead of B.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cohomology of Σ^s S ⊗ Σ^perp S^⊥ ⊗ O(twist) by the Bott algorithm.
    Cohomology {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Non-increasing weight on S, comma separated (default zero).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        s: Option<Weight>,
        /// Non-increasing weight on S^⊥, comma separated (default zero).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        perp: Option<Weight>,
        /// Power of the Plücker line bundle O(1).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, value_enum, default_value_t)]
        on: Space,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Homology of D, B or Q restricted to a diagonal point of SpGr(2,N) × SpGr(2,N).
    FiberCheck {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value = "Q", value_parser = parse_which)]
        which: Which,
        /// Inclusive degree range `a..b` (default 0..2N−5).
        #[arg(long, value_parser = parse_range)]
        degrees: Option<RangeInclusive<usize>>,
        /// Also split Q into its connected blocks.
        #[arg(long)]
        blocks: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lascoux complexes at the cycle t, compared with the promised exact range.
    Lascoux {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Twist j of O(j); all 0 ≤ j ≤ N − 2 when omitted.
        #[arg(long)]
        j: Option<usize>,
        /// Exterior power of the constant factor.
        #[arg(long, default_value_t = 0)]
        twist: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// K-theory generators and their pairing matrix.
    Ktheory {
        #[arg(long, value_enum, default_value = "gr")]
        space: KSpace,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sampled symplectic identities.
    SymplecticCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Every verification check, one line each.
    VerifyAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_weight(s: &str) -> std::result::Result<Weight, String> {
    let t = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn parse_which(s: &str) -> std::result::Result<Which, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// A finished subcommand: what to print and whether its properties held.
#[derive(Clone, Debug)]
pub struct Report {
    /// Machine-readable report.
    pub json: Value,
    /// Human-readable report.
    pub ascii: String,
    /// Names of failed properties.
    pub failures: Vec<String>,
}

impl Report {
    fn new(json: Value, ascii: String) -> Self {
        Self {
            json,
            ascii,
            failures: Vec::new(),
        }
    }

    fn require(mut self, name: &str, ok: bool) -> Self {
        if !ok {
            self.failures.push(name.to_string());
        }
        self
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("GRASSOLVE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Parses `args` (including the program name), runs the subcommand and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    configure_threads();
    let format = match &cli.command {
        Command::GrResolution { format, .. }
        | Command::SpgrResolution { format, .. }
        | Command::Cohomology { format, .. }
        | Command::FiberCheck { format, .. }
        | Command::Lascoux { format, .. }
        | Command::Ktheory { format, .. }
        | Command::SymplecticCheck { format, .. }
        | Command::VerifyAll { format, .. } => *format,
    };
    let report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "grassolve: {e}");
            return 2;
        }
    };
    let printed = match format {
        Format::Json => serde_json::to_string_pretty(&report.json).map(|s| s + "\n"),
        Format::Ascii => Ok(report.ascii.clone()),
    };
    match printed {
        Ok(text) => {
            let _ = write!(out, "{text}");
        }
        Err(e) => {
            let _ = writeln!(err, "grassolve: {e}");
            return 1;
        }
    }
    if report.failures.is_empty() {
        0
    } else {
        for f in &report.failures {
            let _ = writeln!(err, "FAILED: {f}");
        }
        1
    }
}

/// Runs one subcommand.
pub fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::GrResolution { k, n, .. } => gr_resolution(*k, *n),
        Command::SpgrResolution { n, max_degree, .. } => spgr_resolution(*n, *max_degree),
        Command::Cohomology {
            k,
            n,
            s,
            perp,
            twist,
            on,
            ..
        } => cohomology(*k, *n, s.clone(), perp.clone(), *twist, *on),
        Command::FiberCheck {
            n,
            which,
            degrees,
            blocks,
            ..
        } => fiber_check(*n, *which, degrees.clone(), *blocks),
        Command::Lascoux { n, j, twist, .. } => lascoux(*n, *j, *twist),
        Command::Ktheory { space, k, n, .. } => ktheory(*space, *k, *n),
        Command::SymplecticCheck { seed, samples, .. } => symplectic(*seed, *samples),
        Command::VerifyAll { seed, .. } => Ok(verify_all(*seed)),
    }
}

fn descriptor_report(c: &ComplexDescriptor) -> Report {
    Report::new(json!(c.to_json()), c.render_ascii())
}

fn gr_resolution(k: usize, n: usize) -> Result<Report> {
    let c = koszul_gr(k, n)?;
    let dim = k * (n - k);
    let ranks_ok = (0..=dim).all(|i| c.rank(i) == binomial(dim, i));
    Ok(descriptor_report(&c).require("Cauchy rank identity for the Koszul terms", ranks_ok))
}

fn spgr_resolution(n: usize, max_degree: Option<usize>) -> Result<Report> {
    let c = match max_degree {
        Some(top) => tate_spgr(n, top)?,
        None if n == 4 => resolution_spgr4()?,
        None => subcomplex_b(n)?,
    };
    let b = subcomplex_b(n)?;
    let d = tate_spgr(n, b.top_degree())?;
    let closed = (1..=b.top_degree()).all(|k| {
        b.alphas(k).iter().all(|a| {
            a.boundary()
                .iter()
                .all(|g| !d.alphas(k - 1).contains(g) || b.alphas(k - 1).contains(g))
        })
    });
    Ok(descriptor_report(&c).require("B is closed under the differential of D", closed))
}

fn cohomology(
    k: usize,
    n: usize,
    s: Option<Weight>,
    perp: Option<Weight>,
    twist: i64,
    on: Space,
) -> Result<Report> {
    let s = s.unwrap_or_else(|| vec![0; k]);
    let perp = perp.unwrap_or_else(|| vec![0; n.saturating_sub(k)]);
    let bundle = Bundle::irreducible(k, n, s.clone(), perp.clone())?.twist(twist);
    let table = match on {
        Space::Gr => cohomology_gr(&bundle)?,
        Space::X => cohomology_x(&bundle)?,
    };
    let space = match on {
        Space::Gr => format!("Gr({k},{n})"),
        Space::X => format!("X ⊂ Gr({k},{n})"),
    };
    let json = json!({
        "space": space,
        "s": s,
        "perp": perp,
        "twist": twist,
        "rank": bundle.rank(),
        "cohomology": table,
    });
    let ascii = format!("{space}  s={s:?} perp={perp:?} twist={twist}\n{table}\n");
    Ok(Report::new(json, ascii))
}

fn fiber_check(
    n: usize,
    which: Which,
    degrees: Option<RangeInclusive<usize>>,
    blocks: bool,
) -> Result<Report> {
    let top = 2 * n - 5;
    let range = degrees.unwrap_or(0..=top);
    let fiber = ComponentFiber::new(n, range.end() + 1)?;
    fiber.check_b_closed()?;
    let homology = fiber.homology(which, range.clone())?;
    let dims: Vec<usize> = range
        .clone()
        .map(|k| fiber.selection(k, which).len())
        .collect();
    let mut ascii = format!("fiber of {which:?} over the diagonal, N = {n}\n");
    for (k, (h, d)) in range.clone().zip(homology.iter().zip(&dims)) {
        ascii.push_str(&format!("deg {k:>3} | dim {d:>6} | H = {h}\n"));
    }
    let mut json = json!({
        "n": n,
        "which": format!("{which:?}"),
        "degrees": range.clone().collect::<Vec<_>>(),
        "dims": dims,
        "homology": homology,
    });
    let start = *range.start();
    let property = match which {
        Which::Q => (
            "Q is exact in degrees up to 2N−6",
            range
                .clone()
                .zip(&homology)
                .all(|(k, &h)| k > 2 * n - 6 || h == 0),
        ),
        Which::D => (
            "D restricted to the diagonal has homology ⋀ of the conormal space",
            range
                .clone()
                .zip(&homology)
                .all(|(k, &h)| h as u64 == binomial(top, k)),
        ),
        Which::B => ("B is closed under the differential", start <= *range.end()),
    };
    let mut report = Report::new(Value::Null, String::new()).require(property.0, property.1);
    if blocks {
        let split = split_blocks(n)?;
        for b in &split {
            let label = b
                .label
                .map_or_else(|| "mixed".to_string(), |l| l.to_string());
            ascii.push_str(&format!(
                "block {label}: dims {:?}, homology {:?}\n",
                b.dims, b.homology
            ));
        }
        json["blocks"] = serde_json::to_value(&split).map_err(|e| Error::Parse(e.to_string()))?;
        report = report.require(
            "Q splits into N−2 exact blocks",
            split.len() == n - 2 && split.iter().all(|b| b.homology.iter().all(|&h| h == 0)),
        );
    }
    report.json = json;
    report.ascii = ascii;
    Ok(report)
}

fn lascoux(n: usize, j: Option<usize>, twist: usize) -> Result<Report> {
    let js: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (0..=n.saturating_sub(2)).collect(),
    };
    let reports = js
        .iter()
        .map(|&j| LascouxReport::compute(n, j, twist))
        .collect::<Result<Vec<_>>>()?;
    let mut ascii = String::new();
    for r in &reports {
        ascii.push_str(&format!(
            "N={} j={} twist={} | dims {:?} | H {:?} | promised {:?} | exact {:?}\n",
            r.n, r.j, r.twist, r.dims, r.homology, r.promised, r.realized
        ));
    }
    let ok = reports.iter().all(LascouxReport::holds);
    let json = serde_json::to_value(&reports).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(Report::new(json, ascii).require("Lascoux complex exact in the promised degrees", ok))
}

fn ktheory(space: KSpace, k: usize, n: usize) -> Result<Report> {
    match space {
        KSpace::Gr => {
            let set = generators_gr(k, n)?;
            let m = pairing_matrix_gr(k, n)?;
            let ascii = format!("{} generators on {}\n{m}", set.len(), set.space);
            let json = json!({
                "space": set.space,
                "generators": set.labels(),
                "pairing": m.entries,
            });
            let count_ok = set.len() as u64 == binomial(n, k);
            Ok(Report::new(json, ascii)
                .require("generator count C(N,k)", count_ok)
                .require("pairing matrix is unitriangular", m.is_unitriangular()))
        }
        KSpace::Spgr4 => {
            let t = ext_table_spgr4()?;
            let mut ascii = String::from("Ext^i(H, G) on SpGr(2,4), rows H, columns G\n");
            for (h, row) in t.labels.iter().zip(&t.ext) {
                for (g, table) in t.labels.iter().zip(row) {
                    ascii.push_str(&format!("{h:>6} {g:>6} | {table}\n"));
                }
            }
            ascii.push_str(&t.hom_matrix().to_string());
            let json = json!({
                "space": "SpGr(2,4)",
                "generators": t.labels,
                "ext": t.ext,
            });
            let ok = t.is_exceptional();
            Ok(Report::new(json, ascii).require("Ext table is exceptional", ok))
        }
    }
}

fn symplectic(seed: u64, samples: usize) -> Result<Report> {
    let s = checks::symplectic_summary(seed, samples)?;
    let mut ascii = format!("z-invariance: {}/{}\n", s.z_invariant.0, s.z_invariant.1);
    for (case, n, ok) in &s.families {
        ascii.push_str(&format!(
            "isotropy family {case} (n = {n}): {}\n",
            pass(*ok)
        ));
    }
    ascii.push_str(&format!("parabolic action on η: {}\n", pass(s.parabolic)));
    ascii.push_str(&format!("two-form identity: {}\n", pass(s.theta)));
    let json = serde_json::to_value(&s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(Report::new(json, ascii).require("symplectic identities", s.holds()))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn verify_all(seed: u64) -> Report {
    let outcomes = checks::run_all(seed, None);
    let mut ascii = String::new();
    for c in &outcomes {
        ascii.push_str(&format!(
            "[{}] {:>2} {:<26} {}\n",
            pass(c.passed),
            c.id,
            c.name,
            c.detail
        ));
    }
    let json = json!(outcomes);
    let mut report = Report::new(json, ascii);
    for c in &outcomes {
        report = report.require(c.name, c.passed);
    }
    report
}
