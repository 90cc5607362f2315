//! Command-line frontend for `arcperm-core`.
//!
//! [`run`] parses arguments, dispatches to the library and returns the text
//! to print together with the exit code, so the whole interface can be tested
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 malformed input, 2 a domain constraint is
//! violated, 3 a size cap is exceeded.

mod render;

use std::collections::BTreeSet;
use std::ffi::OsString;

use arcperm_core::bdiagram::{
    complement, cut_set, max_crossing, plato_add, plato_remove, plato_transpose, validate_z,
};
use arcperm_core::census::{census, CensusReport};
use arcperm_core::generation::{
    complete_table, count_generators, enumerate_generators, generators_oracle, DEFAULT_CAP,
};
use arcperm_core::inversion::{canonical_half, perms_from_word, perms_from_word_oracle};
use arcperm_core::words::{inflate, path_steps, sigma_word};
use arcperm_core::{
    Arc, BDiagram, CyclicPerm, Dialect, Error, GeneratorSet, SigmaWord, Validity, Word,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(exit_code: i32, stdout: String) -> Self {
        CommandResult {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit_code: i32, message: String) -> Self {
        CommandResult {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "arcperm",
    version,
    about = "Cyclic permutations, their Motzkin/Dyck words and acyclic b-diagrams"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse enumerations that would produce more results than this.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split the vertices of a cyclic permutation into R, R̄ and K and print its word.
    Classify {
        /// Permutation starting with 1, e.g. "1 3 2 7 8 4 5 6".
        perm: String,
    },
    /// List every cyclic permutation with the given σ-word.
    Invert(InvertArgs),
    /// Print the z-word of a b-diagram.
    Bword {
        /// Blocks separated by '|', e.g. "3 1 6 | 2 7 8 | 4 5".
        diagram: String,
    },
    /// Decide whether some b-diagram has the given z-word.
    ValidateWord { word: String },
    /// Count or list the generators of a b-diagram.
    Generators(GeneratorArgs),
    /// Arcs of a generator that are missing from the diagram.
    Cutset { perm: String, diagram: String },
    /// The b-diagram formed by the cut set.
    Complement { perm: String, diagram: String },
    /// Size of the largest family of mutually crossing arcs.
    Crossing { diagram: String },
    /// Expand a z-word into single-step letters.
    Inflate { word: String },
    /// Add, remove or transpose arcs of a b-diagram.
    Edit {
        #[command(subcommand)]
        op: EditOp,
    },
    /// Draw the lattice path of a permutation, σ-word or z-word.
    Render(RenderArgs),
    /// Check the word counts over every cyclic permutation of [n].
    Census { n: usize },
}

#[derive(Args, Debug)]
struct InvertArgs {
    word: String,
    /// Print every permutation (default).
    #[arg(long, conflicts_with = "canonical_half")]
    all: bool,
    /// Print one permutation of each reverse pair, the one with σ_2 < σ_n.
    #[arg(long)]
    canonical_half: bool,
    /// Cross-check against a scan of all cyclic permutations.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct GeneratorArgs {
    diagram: String,
    /// Print the number of generators (default).
    #[arg(long, conflicts_with = "list")]
    count: bool,
    /// Print every generator, one per line.
    #[arg(long)]
    list: bool,
    /// Enumeration route. Without it `--count` uses the closed formula.
    #[arg(long, value_enum)]
    method: Option<Method>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Blocks,
    Table,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Blocks => "blocks",
            Method::Table => "table",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Subcommand, Debug)]
enum EditOp {
    /// Join vertices i and j with a new arc.
    Add { diagram: String, i: usize, j: usize },
    /// Delete the arc between i and j.
    Remove { diagram: String, i: usize, j: usize },
    /// Swap the labels i and j.
    Transpose { diagram: String, i: usize, j: usize },
}

#[derive(Args, Debug)]
struct RenderArgs {
    input: String,
    #[arg(long, value_enum, default_value_t = Kind::Word)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    /// A cyclic permutation, drawn through its σ-word.
    Perm,
    /// A σ-word.
    Word,
    /// A z-word, with double steps for r, R and k.
    Bword,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Ascii,
    Svg,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } | Error::CapExceeded { .. } => EXIT_CAP,
        Error::HasKeratoids(_)
        | Error::NotRepresentable(_)
        | Error::NotAGenerator(_)
        | Error::DegreeExceeded(_)
        | Error::WouldCycle(_)
        | Error::AlreadyPresent(_)
        | Error::NotPresent(_)
        | Error::CountMismatch { .. } => EXIT_DOMAIN,
        _ => EXIT_MALFORMED,
    }
}

type Outcome = std::result::Result<CommandResult, Error>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(text),
                _ => CommandResult {
                    exit_code: EXIT_MALFORMED,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let out = Output { json: cli.json };
    match dispatch(&cli.command, cli.cap, &out) {
        Ok(result) => result,
        Err(e) => CommandResult::fail(exit_code(&e), e.to_string()),
    }
}

struct Output {
    json: bool,
}

impl Output {
    /// Picks the JSON document or the text lines.
    fn emit(&self, value: Value, text: impl FnOnce() -> String) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            text()
        }
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| i.to_string() + "\n").collect()
}

fn seq_string(set: &BTreeSet<usize>) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn arc_pairs(arcs: &[Arc]) -> Value {
    arcs.iter().map(|a| json!([a.lo, a.hi])).collect()
}

fn dispatch(command: &Command, cap: u64, out: &Output) -> Outcome {
    match command {
        Command::Classify { perm } => classify(perm, out),
        Command::Invert(args) => invert(args, out),
        Command::Bword { diagram } => bword(diagram, out),
        Command::ValidateWord { word } => validate_word(word, out),
        Command::Generators(args) => generators(args, cap, out),
        Command::Cutset { perm, diagram } => {
            let (p, b) = (perm.parse::<CyclicPerm>()?, diagram.parse::<BDiagram>()?);
            let cut = cut_set(&p, &b)?;
            let value = json!({
                "permutation": p.to_string(),
                "diagram": b.to_string(),
                "cut_set": arc_pairs(&cut.arcs),
            });
            Ok(CommandResult::ok(out.emit(value, || format!("{cut}\n"))))
        }
        Command::Complement { perm, diagram } => {
            let (p, b) = (perm.parse::<CyclicPerm>()?, diagram.parse::<BDiagram>()?);
            let c = complement(&p, &b)?;
            let value = json!({ "diagram": c.to_string(), "arcs": c.arc_notation() });
            Ok(CommandResult::ok(out.emit(value, || format!("{c}\n"))))
        }
        Command::Crossing { diagram } => {
            let b: BDiagram = diagram.parse()?;
            let k = max_crossing(&b);
            let value = json!({
                "diagram": b.to_string(),
                "max_crossing": k,
                "noncrossing_from": k + 1,
            });
            Ok(CommandResult::ok(out.emit(value, || format!("{k}\n"))))
        }
        Command::Inflate { word } => {
            let z: Word = word.parse()?;
            let a = inflate(&z);
            let value = json!({ "word": z.to_string(), "inflated": a.to_string() });
            Ok(CommandResult::ok(out.emit(value, || format!("{a}\n"))))
        }
        Command::Edit { op } => {
            let b = match op {
                EditOp::Add { diagram, i, j } => plato_add(&diagram.parse()?, *i, *j)?,
                EditOp::Remove { diagram, i, j } => plato_remove(&diagram.parse()?, *i, *j)?,
                EditOp::Transpose { diagram, i, j } => plato_transpose(&diagram.parse()?, *i, *j)?,
            };
            let value = json!({ "diagram": b.to_string() });
            Ok(CommandResult::ok(out.emit(value, || format!("{b}\n"))))
        }
        Command::Render(args) => render_cmd(args),
        Command::Census { n } => census_cmd(*n, out),
    }
}

fn classify(perm: &str, out: &Output) -> Outcome {
    let p: CyclicPerm = perm.parse()?;
    let c = p.classify();
    let word = sigma_word(&p).to_string();
    let value = json!({ "R": c.r, "Rbar": c.rbar, "K": c.k, "word": word });
    Ok(CommandResult::ok(out.emit(value, || {
        format!(
            "R: {}\nRbar: {}\nK: {}\nword: {word}\n",
            seq_string(&c.r),
            seq_string(&c.rbar),
            seq_string(&c.k)
        )
    })))
}

fn invert(args: &InvertArgs, out: &Output) -> Outcome {
    let w: SigmaWord = args.word.parse()?;
    let all = perms_from_word(&w)?;
    let verdict = if args.oracle {
        let matches = perms_from_word_oracle(&w)? == all;
        Some(if matches { "MATCH" } else { "MISMATCH" })
    } else {
        None
    };
    let shown = if args.canonical_half {
        canonical_half(&all)
    } else {
        all
    };
    let mut value = json!({
        "word": w.to_string(),
        "permutations": shown.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if let Some(v) = verdict {
        value["oracle"] = json!(v);
    }
    let text = out.emit(value, || {
        let mut s = lines(&shown);
        if let Some(v) = verdict {
            s.push_str(&format!("oracle: {v}\n"));
        }
        s
    });
    let code = if verdict == Some("MISMATCH") {
        EXIT_DOMAIN
    } else {
        EXIT_OK
    };
    Ok(CommandResult::with_code(code, text))
}

fn bword(diagram: &str, out: &Output) -> Outcome {
    let b: BDiagram = diagram.parse()?;
    let z = b.word().to_string();
    let c = b.classify();
    let value = json!({
        "diagram": b.to_string(),
        "word": z,
        "classes": {
            "R": c.r, "Rbar": c.rbar, "K": c.k, "A": c.a, "Abar": c.abar, "L": c.l,
        },
    });
    Ok(CommandResult::ok(out.emit(value, || format!("{z}\n"))))
}

fn validate_word(word: &str, out: &Output) -> Outcome {
    let z: Word = word.parse()?;
    Ok(match validate_z(&z) {
        Validity::Valid(b) => {
            let value = json!({ "word": z.to_string(), "valid": true, "diagram": b.to_string() });
            CommandResult::ok(out.emit(value, || format!("Valid: {b}\n")))
        }
        Validity::Invalid(reason) => {
            let value =
                json!({ "word": z.to_string(), "valid": false, "reason": reason.to_string() });
            CommandResult::with_code(
                EXIT_DOMAIN,
                out.emit(value, || format!("Invalid: {reason}\n")),
            )
        }
    })
}

fn enumerate(b: &BDiagram, method: Method, cap: u64) -> std::result::Result<GeneratorSet, Error> {
    match method {
        Method::Blocks => enumerate_generators(b, cap),
        Method::Table => complete_table(b, cap),
        Method::Oracle => {
            let count = count_generators(b);
            if count > BigUint::from(cap) {
                return Err(Error::CapExceeded {
                    count: count.to_string(),
                    cap,
                });
            }
            generators_oracle(b)
        }
    }
}

fn generators(args: &GeneratorArgs, cap: u64, out: &Output) -> Outcome {
    let b: BDiagram = args.diagram.parse()?;
    if !args.list {
        let (count, method) = match args.method {
            None => (count_generators(&b), "formula"),
            Some(m) => (BigUint::from(enumerate(&b, m, cap)?.len()), m.name()),
        };
        let value = json!({
            "diagram": b.to_string(),
            "method": method,
            "count": count.to_string(),
        });
        return Ok(CommandResult::ok(out.emit(value, || format!("{count}\n"))));
    }
    let method = args.method.unwrap_or(Method::Blocks);
    let set = enumerate(&b, method, cap)?;
    let value = json!({
        "diagram": b.to_string(),
        "method": method.name(),
        "count": set.len().to_string(),
        "generators": set.perms().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(CommandResult::ok(out.emit(value, || lines(set.perms()))))
}

fn render_cmd(args: &RenderArgs) -> Outcome {
    let path = match args.kind {
        Kind::Perm => {
            let p: CyclicPerm = args.input.parse()?;
            path_steps(&sigma_word(&p), Dialect::Sigma)?
        }
        Kind::Word => {
            let w: SigmaWord = args.input.parse()?;
            path_steps(&w, Dialect::Sigma)?
        }
        Kind::Bword => {
            let z: Word = args.input.parse()?;
            if z.is_empty() {
                return Err(Error::Parse("empty word".into()));
            }
            path_steps(&z, Dialect::B)?
        }
    };
    Ok(CommandResult::ok(match args.format {
        Format::Ascii => render::ascii(&path),
        Format::Svg => render::svg(&path),
    }))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn census_text(r: &CensusReport) -> String {
    let mut s = format!("n = {}\npermutations: {}\n", r.n, r.permutations);
    s += &format!(
        "distinct words: {}, expected M_{} = {}: {}\n",
        r.distinct_words,
        r.n - 2,
        r.expected_words,
        verdict(r.words_match())
    );
    s += &format!(
        "keratoid-free words: {}, expected elevated Dyck words = {}: {}\n",
        r.keratoid_free_words,
        r.expected_keratoid_free,
        verdict(r.keratoid_free_match())
    );
    s += &format!("second-entry split failures: {}\n", r.split_failures.len());
    for f in &r.split_failures {
        s += &format!(
            "  {}: {} permutations, {} with second entry min(Rbar+K), missed {}\n",
            f.word,
            f.permutations,
            f.selected,
            f.missed
                .iter()
                .map(|p| format!("[{p}]"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    s
}

fn census_cmd(n: usize, out: &Output) -> Outcome {
    let r = census(n)?;
    let failures: Vec<Value> = r
        .split_failures
        .iter()
        .map(|f| {
            json!({
                "word": f.word.to_string(),
                "permutations": f.permutations,
                "selected": f.selected,
                "missed": f.missed.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "n": r.n,
        "permutations": r.permutations,
        "distinct_words": r.distinct_words,
        "expected_words": r.expected_words.to_string(),
        "words_match": r.words_match(),
        "keratoid_free_words": r.keratoid_free_words,
        "expected_keratoid_free": r.expected_keratoid_free.to_string(),
        "keratoid_free_match": r.keratoid_free_match(),
        "split_failures": failures,
    });
    let code = if r.words_match() && r.keratoid_free_match() {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    };
    Ok(CommandResult::with_code(
        code,
        out.emit(value, || census_text(&r)),
    ))
}
