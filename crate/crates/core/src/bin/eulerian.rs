use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};

use eulerian::analysis::{
    classify_word, inequality_f_form, inequality_l_form, limit_l_vector, negative_witness,
    nonneg_certificate, valid_windows, WordClass,
};
use eulerian::cd::big_to_json;
use eulerian::verify::run_suite;
use eulerian::{
    budget, cd_index, expr, flag_vector, l_vector, CdWord, Error, IntervalSystem, RankSubset,
    RankedPoset, RawPoset,
};

#[derive(Parser)]
#[command(
    name = "eulerian",
    version,
    about = "Eulerian posets and their cd-indices"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Largest poset any construction may produce.
    #[arg(long, default_value_t = budget::DEFAULT_MAX_ELEMENTS, global = true)]
    max_elements: usize,
    /// Largest interval system accepted by limit-l.
    #[arg(long, default_value_t = budget::DEFAULT_MAX_INTERVALS, global = true)]
    max_intervals: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Build a poset from an expression and print it as JSON.
    Build {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Flag vector f_S for every S.
    Flags {
        poset: String,
    },
    /// cd-index; fails on posets that are not cd-expressible.
    CdIndex {
        poset: String,
    },
    /// L-vector (ce-index), nonzero entries only.
    LVector {
        poset: String,
    },
    CheckEulerian {
        poset: String,
    },
    /// Evaluate both forms of the flag inequality.
    CheckInequality {
        poset: String,
        #[arg(long, conflicts_with_all = ["t", "v"])]
        all: bool,
        #[arg(long = "T", id = "t", default_value = "[]")]
        t: String,
        #[arg(long = "V", id = "v", default_value = "[]")]
        v: String,
    },
    /// Limit L-vector of an interval system, e.g. --intervals "[[1,2],[3,4]]".
    LimitL {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        intervals: String,
    },
    Classify {
        word: String,
    },
    Certificate {
        word: String,
    },
    /// Poset with a negative coefficient for a Part3 word.
    Witness {
        word: String,
        #[arg(long = "N", id = "copies")]
        copies: u64,
    },
    /// Run a reproduction suite, or `all`.
    Verify {
        suite: String,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCdExpressible { .. } | Error::NonIntegral { .. } | Error::Internal(_) => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(Value, String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    budget::set_max_elements(cli.max_elements);
    budget::set_max_intervals(cli.max_intervals);
    match run(&cli.command) {
        Ok((value, table, ok)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
                Format::Table => print!("{table}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

/// A file path holding poset JSON, or an inline expression.
fn load(arg: &str) -> Result<RankedPoset, Failure> {
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        let raw: RawPoset =
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        return Ok(RankedPoset::from_raw(&raw)?);
    }
    Ok(expr::build(arg)?)
}

fn word(text: &str) -> Result<CdWord, Failure> {
    text.parse::<CdWord>().map_err(Failure::from)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Build { expr: text, output } => {
            let p = load(text)?;
            let value = to_value(&p.to_raw());
            let table = format!(
                "rank {}\nlevel sizes {:?}\nelements {}\ncovers {}\n",
                p.rank(),
                p.level_sizes(),
                p.element_count(),
                p.cover_count()
            );
            if let Some(path) = output {
                let text = serde_json::to_string(&value).unwrap() + "\n";
                std::fs::write(path, text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                return Ok((
                    json!({ "written": path.display().to_string() }),
                    table,
                    true,
                ));
            }
            Ok((value, table, true))
        }
        Command::Flags { poset } => {
            let f = flag_vector(&load(poset)?)?;
            let value = to_value(&f);
            let table = lines(
                value
                    .as_object()
                    .unwrap()
                    .iter()
                    .map(|(k, v)| format!("{k:<16} {}", v.as_str().unwrap())),
            );
            Ok((value, table, true))
        }
        Command::CdIndex { poset } => {
            let cd = cd_index(&load(poset)?)?;
            let value = to_value(&cd);
            Ok((json!({ "terms": value["terms"] }), format!("{cd}\n"), true))
        }
        Command::LVector { poset } => {
            let l = l_vector(&flag_vector(&load(poset)?)?);
            let table = lines(
                l.nonzero()
                    .iter()
                    .map(|(q, v)| format!("{:<16} {v}", q.to_string())),
            );
            Ok((to_value(&l), table, true))
        }
        Command::CheckEulerian { poset } => {
            let rep = load(poset)?.is_eulerian();
            let table = match &rep.violation {
                None => "eulerian\n".to_string(),
                Some(v) => format!(
                    "not eulerian: interval {:?} to {:?} has {} even-rank and {} odd-rank elements\n",
                    v.x, v.y, v.even, v.odd
                ),
            };
            Ok((to_value(&rep), table, rep.eulerian))
        }
        Command::CheckInequality { poset, all, t, v } => {
            let f = flag_vector(&load(poset)?)?;
            let l = l_vector(&f);
            let n = f.n();
            let windows: Vec<(RankSubset, RankSubset)> = if *all {
                valid_windows(n)?
                    .into_iter()
                    .map(|w| (w.t(), w.v()))
                    .collect()
            } else {
                vec![(RankSubset::parse(n, t)?, RankSubset::parse(n, v)?)]
            };
            let mut rows = Vec::new();
            let mut table = String::new();
            let mut ok = true;
            for (t, v) in windows {
                let ff = inequality_f_form(&f, &t, &v)?;
                let lf = inequality_l_form(&l, &t, &v)?;
                let nonneg = !ff.is_negative() && !lf.is_negative();
                ok &= nonneg;
                table += &format!("T={t:<12} V={v:<16} f={ff:<10} L={lf}\n");
                rows.push(json!({
                    "T": to_value(&t),
                    "V": to_value(&v),
                    "f_form": big_to_json(&ff),
                    "l_form": lf.to_string(),
                    "nonnegative": nonneg,
                }));
            }
            Ok((Value::Array(rows), table, ok))
        }
        Command::LimitL { n, intervals } => {
            let pairs: Vec<(usize, usize)> = serde_json::from_str(intervals)
                .map_err(|e| Failure::Usage(format!("--intervals expects [[i,j],...]: {e}")))?;
            let sys = IntervalSystem::new(*n, pairs)?;
            let lim = limit_l_vector(*n, &sys)?;
            let table = lines(
                lim.nonzero()
                    .iter()
                    .map(|(q, v)| format!("{:<16} {v}", q.to_string())),
            );
            Ok((to_value(&lim), table, true))
        }
        Command::Classify { word: text } => {
            let w = word(text)?;
            let (value, table) = match classify_word(&w)? {
                WordClass::Part2 => (json!({ "word": text, "class": "Part2" }), "Part2\n".into()),
                WordClass::Part1a(c) | WordClass::Part1b(c) => {
                    let table = format!("{} S={} T={} V={}\n", c.class, c.s, c.t, c.v);
                    (to_value(&c), table)
                }
                WordClass::Part3(wit) => (
                    json!({
                        "word": text,
                        "class": "Part3",
                        "witness": wit.subword.to_string(),
                        "position": wit.letter_offset,
                    }),
                    format!(
                        "Part3 witness {} at letter {}\n",
                        wit.subword, wit.letter_offset
                    ),
                ),
            };
            Ok((value, table, true))
        }
        Command::Certificate { word: text } => {
            let c = nonneg_certificate(&word(text)?)?;
            let table = format!("S={} T={} V={}\n", c.s, c.t, c.v);
            Ok((to_value(&c), table, true))
        }
        Command::Witness { word: text, copies } => {
            let nw = negative_witness(&word(text)?, *copies)?;
            let table = format!(
                "[{}] = {} on {} at N={} ({} elements)\n",
                nw.word,
                nw.coefficient,
                nw.construction(),
                nw.copies,
                nw.poset.element_count()
            );
            Ok((to_value(&nw), table, true))
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite)?;
            let ok = reports.iter().all(|r| r.pass());
            let mut table = String::new();
            for r in &reports {
                table += &format!(
                    "== {} ({}) {} ms\n",
                    r.suite,
                    if r.pass() { "pass" } else { "FAIL" },
                    r.millis
                );
                for row in &r.rows {
                    let mark = match (row.pass, row.informational) {
                        (true, _) => "ok  ",
                        (false, true) => "info",
                        (false, false) => "FAIL",
                    };
                    table += &format!(
                        "  {mark} {}: expected {}, got {}\n",
                        row.label, row.expected, row.actual
                    );
                }
                for note in &r.notes {
                    table += &format!("  note: {note}\n");
                }
            }
            Ok((to_value(&reports), table, ok))
        }
    }
}
