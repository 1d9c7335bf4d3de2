//! Command-line front end. Exit codes: 0 success, 2 a check failed,
//! 64 bad usage.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::moduli::{
    build_complex, divisor_subcomplex, euler_closed_form, euler_proof_sum, f_vector_formula, Mode,
};
use crate::polygon::{cayley_count, enumerate_diagonal_sets, Label};
use crate::quasibraid::{check_phi, export_presentation, generators, phi, relations, MAX_CHECK_N};
use crate::verify::verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "mosaic", version, about = "Polygon dissections, moduli tessellations and quasibraids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cayley counts, f-vectors and Euler characteristics
    Counts {
        #[arg(long)]
        n: usize,
        /// Only this number of diagonals
        #[arg(long)]
        k: Option<usize>,
        /// Build the complex even when it is large (n = 8)
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the moduli complex and print it
    Complex {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Projective)]
        mode: ModeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare a divisor with the product of two smaller complexes
    Divisor {
        #[arg(long)]
        n: usize,
        /// Comma-separated labels, e.g. 1,2,3
        #[arg(long = "set", value_delimiter = ',', required = true)]
        set: Vec<Label>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generators, relations and the map to the symmetric group
    Quasibraid {
        #[arg(long)]
        n: usize,
        #[arg(value_enum)]
        what: QuasibraidPart,
    },
    /// Run every check and print one line per check
    Verify {
        #[arg(long = "n-max", default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArgs {
    #[arg(long, value_enum, conflicts_with_all = ["json", "dot"])]
    format: Option<Format>,
    /// Same as --format json
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    /// Same as --format dot
    #[arg(long)]
    dot: bool,
}

impl OutputArgs {
    fn format(self) -> Format {
        match (self.format, self.json, self.dot) {
            (Some(f), _, _) => f,
            (None, true, _) => Format::Json,
            (None, _, true) => Format::Dot,
            _ => Format::Table,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Projective,
    DoubleCover,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Projective => Mode::Projective,
            ModeArg::DoubleCover => Mode::DoubleCover,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasibraidPart {
    Gens,
    Relations,
    Phi,
    Export,
}

/// What a command produced: text for stdout and whether its checks held.
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, ok: true }
    }
}

pub enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Range { .. }
            | Error::BadSubsetSize { .. }
            | Error::BadSubsetLabel(_)
            | Error::DuplicateLabel(_)
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            other => Failure::Mismatch(other.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

fn counts(n: usize, k: Option<usize>, enumerate: bool, format: Format) -> CmdResult {
    if !(3..=10).contains(&n) {
        return Err(usage(format!("n = {n} is outside 3..=10")));
    }
    if enumerate && n > 8 {
        return Err(usage(format!("--enumerate needs n <= 8, got {n}")));
    }
    if let Some(k) = k {
        if k > n - 3 {
            return Err(usage(format!("k = {k} is outside 0..={}", n - 3)));
        }
    }
    if format == Format::Dot {
        return Err(usage("counts has no dot output"));
    }
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n - 3).collect(),
    };
    let mut ok = true;
    let mut cayley = Vec::new();
    for &k in &ks {
        let formula = cayley_count(n, k)?;
        let listed = enumerate_diagonal_sets(n, k)?.len() as u128;
        ok &= formula == listed;
        cayley.push((k, formula, listed));
    }
    let projective = f_vector_formula(n, Mode::Projective)?;
    let double = f_vector_formula(n, Mode::DoubleCover)?;

    let (closed, sum) = if n >= 4 {
        (Some(euler_closed_form(n)?), Some(euler_proof_sum(n)?))
    } else {
        (None, None)
    };
    let built = if enumerate || n <= 7 {
        Some(build_complex(n, Mode::Projective)?)
    } else {
        None
    };
    let enumerated = built.as_ref().map(|c| c.euler_characteristic() as i128);
    if let Some(c) = &built {
        ok &= c.f_vector().iter().zip(&projective).all(|(&a, &b)| a as u128 == b);
    }
    let values: Vec<i128> = [closed, sum, enumerated].into_iter().flatten().collect();
    ok &= values.windows(2).all(|w| w[0] == w[1]);

    let stdout = if format == Format::Json {
        let v = json!({
            "n": n,
            "cayley": cayley.iter().map(|&(k, f, l)| json!({"k": k, "formula": f.to_string(), "enumerated": l.to_string()})).collect::<Vec<_>>(),
            "f_vector": {
                "projective": projective.iter().map(u128::to_string).collect::<Vec<_>>(),
                "double_cover": double.iter().map(u128::to_string).collect::<Vec<_>>(),
                "enumerated": built.as_ref().map(|c| c.f_vector()),
            },
            "euler": {"enumerated": enumerated.map(|x| x as i64), "proof_sum": sum.map(|x| x as i64), "closed_form": closed.map(|x| x as i64)},
            "consistent": ok,
        });
        serde_json::to_string_pretty(&v).expect("plain data") + "\n"
    } else {
        let mut s = String::new();
        writeln!(s, "n = {n}").unwrap();
        writeln!(s, "{:>3} {:>12} {:>12}", "k", "formula", "enumerated").unwrap();
        for (k, f, l) in &cayley {
            writeln!(s, "{k:>3} {f:>12} {l:>12}  {}", mark(f == l)).unwrap();
        }
        let show = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(", ");
        writeln!(s, "f-vector projective   ({})", show(&projective)).unwrap();
        writeln!(s, "f-vector double cover ({})", show(&double)).unwrap();
        if let Some(c) = &built {
            let f: Vec<String> = c.f_vector().iter().map(usize::to_string).collect();
            writeln!(s, "f-vector enumerated   ({})", f.join(", ")).unwrap();
        }
        let opt = |x: Option<i128>| x.map_or("-".to_string(), |v| v.to_string());
        writeln!(s, "euler: enumerated {}  proof-sum {}  closed form {}", opt(enumerated), opt(sum), opt(closed)).unwrap();
        writeln!(s, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
        s
    };
    Ok(Outcome { stdout, ok })
}

fn complex(n: usize, mode: Mode, format: Format) -> CmdResult {
    let c = build_complex(n, mode)?;
    let stdout = match format {
        Format::Json => c.to_json() + "\n",
        Format::Dot => c.to_dot()?,
        Format::Table => {
            let mut s = String::new();
            let f: Vec<String> = c.f_vector().iter().map(usize::to_string).collect();
            writeln!(s, "{mode} complex, n = {n}, {} cells, f-vector ({})", c.len(), f.join(", ")).unwrap();
            writeln!(s, "euler characteristic {}", c.euler_characteristic()).unwrap();
            for (id, cell) in c.cells().iter().enumerate() {
                let faces: Vec<String> = c.boundary(id).iter().map(|(b, _)| b.to_string()).collect();
                writeln!(s, "{id:>6}  codim {}  {}  faces [{}]", cell.codim, cell.representative, faces.join(" ")).unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn divisor(n: usize, set: &[Label], format: Format) -> CmdResult {
    if !(4..=8).contains(&n) {
        return Err(usage(format!("n = {n} is outside 4..=8")));
    }
    if format == Format::Dot {
        return Err(usage("divisor has no dot output"));
    }
    let c = build_complex(n, Mode::Projective)?;
    let d = divisor_subcomplex(&c, set)?;
    let r = d.verify_product(&c)?;
    let f = d.f_vector(&c);
    let stdout = if format == Format::Json {
        let v = json!({
            "n": n,
            "subset": d.subset(),
            "f_vector": f,
            "factors": [r.factor_sides.0, r.factor_sides.1],
            "factor_f_vectors": [r.factor_f_vectors.0, r.factor_f_vectors.1],
            "bijective": r.bijective,
            "graded": r.graded,
            "incidences": r.incidences,
            "incidences_match": r.incidences_match,
            "passed": r.passed(),
        });
        serde_json::to_string_pretty(&v).expect("plain data") + "\n"
    } else {
        let mut s = String::new();
        writeln!(s, "divisor {:?} in n = {n}: {} cells, {} top cells", d.subset(), d.cells().len(), f[0]).unwrap();
        writeln!(s, "cells by dimension (top first) {f:?}").unwrap();
        writeln!(
            s,
            "product of n = {} {:?} and n = {} {:?}",
            r.factor_sides.0, r.factor_f_vectors.0, r.factor_sides.1, r.factor_f_vectors.1
        )
        .unwrap();
        writeln!(s, "cell bijection {}  grading {}  incidences {} ({})", mark(r.bijective), mark(r.graded), mark(r.incidences_match), r.incidences).unwrap();
        writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
        s
    };
    Ok(Outcome { stdout, ok: r.passed() })
}

fn quasibraid(n: usize, what: QuasibraidPart) -> CmdResult {
    if !(4..=MAX_CHECK_N).contains(&n) {
        return Err(usage(format!("n = {n} is outside 4..={MAX_CHECK_N}")));
    }
    let mut s = String::new();
    let mut ok = true;
    match what {
        QuasibraidPart::Gens => {
            let g = generators(n)?;
            writeln!(s, "{} generators", g.len()).unwrap();
            for x in g {
                writeln!(s, "{}  diagonal {}  free part {:?}", x.name(), x.diagonal, x.free_part).unwrap();
            }
        }
        QuasibraidPart::Relations => {
            let r = relations(n)?;
            writeln!(s, "{} relations", r.len()).unwrap();
            for x in r {
                writeln!(s, "{:?}: {x}", x.kind).unwrap();
            }
        }
        QuasibraidPart::Phi => {
            for g in generators(n)? {
                writeln!(s, "phi({}) = {}", g, phi(&g)).unwrap();
            }
            let r = check_phi(n)?;
            writeln!(s, "relations checked {}, failing {}", r.relations_checked, r.failed_relations.len()).unwrap();
            for f in &r.failed_relations {
                writeln!(s, "  fails: {f}").unwrap();
            }
            writeln!(s, "image order {} of {}; adjacent transpositions from free parts of size 2: {}", r.image_order, r.symmetric_order, mark(r.adjacent_witness)).unwrap();
            ok = r.passed();
            writeln!(s, "{}", if ok { "PASS: all relations preserved, surjective" } else { "FAIL" }).unwrap();
        }
        QuasibraidPart::Export => s = export_presentation(n)?,
    }
    Ok(Outcome { stdout: s, ok })
}

fn verify_cmd(n_max: usize) -> CmdResult {
    let results = verify(n_max)?;
    let mut s = String::new();
    for r in &results {
        writeln!(s, "{r}").unwrap();
    }
    Ok(Outcome {
        stdout: s,
        ok: results.iter().all(|r| r.passed),
    })
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Counts { n, k, enumerate, out } => counts(*n, *k, *enumerate, out.format()),
        Command::Complex { n, mode, out } => complex(*n, (*mode).into(), out.format()),
        Command::Divisor { n, set, out } => divisor(*n, set, out.format()),
        Command::Quasibraid { n, what } => quasibraid(*n, *what),
        Command::Verify { n_max } => verify_cmd(*n_max),
    }
}

/// Parse arguments, run, print, and pick the exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.ok { EXIT_OK } else { EXIT_MISMATCH })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
