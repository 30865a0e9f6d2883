//! Command-line front end. All computation and validation lives in the
//! library; this crate only parses flags, renders output, and maps errors
//! to exit codes (0 success, 1 verify counterexample, 2 input error).

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use curvenbhd::verify::{self, Suite, VerifyConfig};
use curvenbhd::{
    CosmallReport, Degree, Error, ParabolicSubset, Root, RootSystem, Word,
};

#[derive(Debug, Parser)]
#[command(
    name = "curvenbhd",
    about = "Curve neighborhoods of Schubert varieties, cosmall roots, and verification sweeps",
    long_about = "Computes with root systems, Weyl groups, Hecke products, greedy degree \
                  decompositions, cosmall/P-cosmall roots, and curve neighborhoods of Schubert \
                  classes. Simple-root indices are 1-based everywhere. Root and degree literals \
                  are comma-separated integers; words are whitespace-separated simple indices."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a root as cosmall and P-cosmall, with witnesses.
    Cosmall {
        /// Dynkin type literal, e.g. B2 or A3.
        #[arg(long = "type")]
        dynkin: String,
        /// Root over the simple-root basis, e.g. "1,2" for b1+2b2.
        #[arg(long)]
        root: String,
        /// Simple indices of Delta_P, e.g. "1,3"; empty for P = B.
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Curve neighborhood of a Schubert class: greedy parts, the
    /// point-neighborhood element, and the resulting representative.
    #[command(name = "curve-nbhd")]
    CurveNbhd {
        #[arg(long = "type")]
        dynkin: String,
        /// Word for w (group product of simple reflections); empty = identity.
        #[arg(long, default_value = "")]
        word: String,
        /// Degree over the free simple indices, e.g. "2,1".
        #[arg(long)]
        degree: String,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Greedy decomposition of a degree into maximal roots.
    Greedy {
        #[arg(long = "type")]
        dynkin: String,
        #[arg(long)]
        degree: String,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hecke product of two words (pass --word twice: left, then right).
    Hecke {
        #[arg(long = "type")]
        dynkin: String,
        #[arg(long = "word")]
        words: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the cosmall-root table of a classical type.
    Table {
        #[arg(long = "type")]
        dynkin: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification sweeps; exits 1 on any counterexample.
    Verify {
        /// Rank bound for the exhaustive sweeps.
        #[arg(long = "max-rank", default_value_t = 3)]
        max_rank: usize,
        /// Run a single suite (counts, hecke, lemma1..lemma4,
        /// theorem1..theorem3, tables, duality); default: all.
        #[arg(long)]
        suite: Option<String>,
        /// Seed for the sampled sweeps.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// What a run produced; `main` prints and exits accordingly.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

// JSON output documents. Each one deserializes back to an equal value.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveNbhdOutput {
    pub dynkin: String,
    pub parabolic: Vec<usize>,
    pub word: Vec<usize>,
    pub degree: Vec<i64>,
    pub greedy: Vec<Root>,
    pub z_word: Vec<usize>,
    pub z_length: usize,
    pub rep_word: Vec<usize>,
    pub rep_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyOutput {
    pub dynkin: String,
    pub parabolic: Vec<usize>,
    pub degree: Vec<i64>,
    pub parts: Vec<Root>,
    pub part_coroots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeOutput {
    pub dynkin: String,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub product: Vec<usize>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub suite: String,
    pub cases: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

pub fn execute(cli: Cli) -> Outcome {
    match run_command(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn members(p: &ParabolicSubset) -> Vec<usize> {
    p.members().collect()
}

/// e-coordinate label where one exists (classical types only).
fn labeled(rs: &RootSystem, root: &Root) -> String {
    match rs.e_label(root) {
        Ok(label) => format!("{root} ({label})"),
        Err(_) => root.to_string(),
    }
}

fn run_command(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Cosmall {
            dynkin,
            root,
            parabolic,
            format,
        } => {
            let rs = RootSystem::parse(&dynkin)?;
            let p = ParabolicSubset::parse(&parabolic, rs.rank())?;
            let alpha = rs.parse_root(&root)?;
            let report = rs.cosmall_report(&alpha, &p)?;
            Ok(Outcome::ok(render_cosmall(&rs, &report, format)))
        }
        Command::CurveNbhd {
            dynkin,
            word,
            degree,
            parabolic,
            format,
        } => {
            let rs = RootSystem::parse(&dynkin)?;
            let p = ParabolicSubset::parse(&parabolic, rs.rank())?;
            let w_word = Word::parse(&word, rs.rank())?;
            let w = rs.evaluate_word(&w_word)?;
            let d = Degree::parse(&rs, &p, &degree)?;
            let greedy = rs.greedy_decomposition(&d)?;
            let z = rs.point_neighborhood(&d)?;
            let class = rs.curve_neighborhood(&w, &d)?;
            let out = CurveNbhdOutput {
                dynkin: rs.dynkin().to_string(),
                parabolic: members(&p),
                word: w_word.letters().to_vec(),
                degree: d.coeffs().to_vec(),
                greedy: greedy.parts().to_vec(),
                z_word: rs.reduced_word(&z).letters().to_vec(),
                z_length: rs.length(&z),
                rep_word: rs.reduced_word(class.rep()).letters().to_vec(),
                rep_length: rs.length(class.rep()),
            };
            Ok(Outcome::ok(render_curve_nbhd(&rs, &out, format)))
        }
        Command::Greedy {
            dynkin,
            degree,
            parabolic,
            format,
        } => {
            let rs = RootSystem::parse(&dynkin)?;
            let p = ParabolicSubset::parse(&parabolic, rs.rank())?;
            let d = Degree::parse(&rs, &p, &degree)?;
            let greedy = rs.greedy_decomposition(&d)?;
            let part_coroots = greedy
                .parts()
                .iter()
                .map(|alpha| Ok(rs.coroot(alpha)?.coeffs().to_vec()))
                .collect::<Result<_, Error>>()?;
            let out = GreedyOutput {
                dynkin: rs.dynkin().to_string(),
                parabolic: members(&p),
                degree: d.coeffs().to_vec(),
                parts: greedy.parts().to_vec(),
                part_coroots,
            };
            Ok(Outcome::ok(render_greedy(&rs, &out, format)))
        }
        Command::Hecke {
            dynkin,
            words,
            format,
        } => {
            let rs = RootSystem::parse(&dynkin)?;
            if words.len() != 2 {
                return Err(Error::BadLiteral {
                    input: words.join(" | "),
                    reason: "hecke needs exactly two --word arguments".to_string(),
                });
            }
            let left = Word::parse(&words[0], rs.rank())?;
            let right = Word::parse(&words[1], rs.rank())?;
            let u = rs.evaluate_word(&left)?;
            let v = rs.evaluate_word(&right)?;
            let product = rs.hecke_product(&u, &v);
            let out = HeckeOutput {
                dynkin: rs.dynkin().to_string(),
                left: left.letters().to_vec(),
                right: right.letters().to_vec(),
                product: rs.reduced_word(&product).letters().to_vec(),
                length: rs.length(&product),
            };
            Ok(Outcome::ok(render_hecke(&out, format)))
        }
        Command::Table { dynkin, format } => {
            let rs = RootSystem::parse(&dynkin)?;
            let table = rs.table()?;
            let text = match format {
                Format::Text => table.to_text(),
                Format::Json => json_line(&table),
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify {
            max_rank,
            suite,
            seed,
            format,
        } => {
            if max_rank < 2 {
                return Err(Error::BadLiteral {
                    input: max_rank.to_string(),
                    reason: "verify needs --max-rank >= 2".to_string(),
                });
            }
            let cfg = VerifyConfig {
                max_rank,
                seed,
                samples: 10_000,
            };
            let reports = match suite {
                Some(name) => vec![verify::run(name.parse::<Suite>()?, &cfg)],
                None => verify::run_all(&cfg),
            };
            let outputs: Vec<VerifyOutput> = reports
                .iter()
                .map(|r| VerifyOutput {
                    suite: r.suite.name().to_string(),
                    cases: r.cases,
                    passed: r.passed(),
                    counterexample: r.counterexample.clone(),
                })
                .collect();
            let failed = outputs.iter().any(|o| !o.passed);
            let stdout = match format {
                Format::Json => json_line(&outputs),
                Format::Text => {
                    let mut s = String::new();
                    for o in &outputs {
                        s.push_str(&format!(
                            "suite {}: {} ({} cases)\n",
                            o.suite,
                            if o.passed { "PASS" } else { "FAIL" },
                            o.cases
                        ));
                        if let Some(cx) = &o.counterexample {
                            s.push_str(&format!("  counterexample: {cx}\n"));
                        }
                    }
                    s.push_str(if failed {
                        "counterexample found\n"
                    } else {
                        "all checks passed\n"
                    });
                    s
                }
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code: if failed { 1 } else { 0 },
            })
        }
    }
}

fn render_cosmall(rs: &RootSystem, report: &CosmallReport, format: Format) -> String {
    match format {
        Format::Json => json_line(report),
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("type: {}\n", report.dynkin));
            s.push_str(&format!("parabolic: {}\n", report.parabolic));
            s.push_str(&format!("root: {}\n", labeled(rs, &report.root)));
            s.push_str(&format!("cosmall: {}\n", report.is_cosmall));
            if let Some(w) = &report.cosmall_witness {
                s.push_str(&format!("cosmall witness: {}\n", labeled(rs, w)));
            }
            let delta = report
                .delta_set
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            s.push_str(&format!("delta: {{{delta}}}\n"));
            s.push_str(&format!("P-cosmall: {}\n", report.is_p_cosmall));
            if let Some(w) = &report.p_cosmall_witness {
                s.push_str(&format!("P-cosmall witness: {}\n", labeled(rs, w)));
            }
            s
        }
    }
}

fn render_curve_nbhd(rs: &RootSystem, out: &CurveNbhdOutput, format: Format) -> String {
    match format {
        Format::Json => json_line(out),
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("type: {}\n", out.dynkin));
            s.push_str(&format!("parabolic: {{{}}}\n", join(&out.parabolic, ",")));
            s.push_str(&format!("w: [{}]\n", join(&out.word, " ")));
            s.push_str(&format!("degree: {}\n", join(&out.degree, ",")));
            s.push_str(&format!("greedy: {}\n", parts_list(rs, &out.greedy)));
            s.push_str(&format!(
                "z_P_d: [{}] (length {})\n",
                join(&out.z_word, " "),
                out.z_length
            ));
            s.push_str(&format!(
                "neighborhood: X(v) with v = [{}] (length {})\n",
                join(&out.rep_word, " "),
                out.rep_length
            ));
            s
        }
    }
}

fn render_greedy(rs: &RootSystem, out: &GreedyOutput, format: Format) -> String {
    match format {
        Format::Json => json_line(out),
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("type: {}\n", out.dynkin));
            s.push_str(&format!("parabolic: {{{}}}\n", join(&out.parabolic, ",")));
            s.push_str(&format!("degree: {}\n", join(&out.degree, ",")));
            s.push_str(&format!("parts: {}\n", parts_list(rs, &out.parts)));
            let coroots = out
                .part_coroots
                .iter()
                .map(|c| join(c, ","))
                .collect::<Vec<_>>()
                .join("; ");
            s.push_str(&format!("part coroots: {coroots}\n"));
            s
        }
    }
}

fn render_hecke(out: &HeckeOutput, format: Format) -> String {
    match format {
        Format::Json => json_line(out),
        Format::Text => {
            format!(
                "type: {}\nu: [{}]\nv: [{}]\nu.v: [{}] (length {})\n",
                out.dynkin,
                join(&out.left, " "),
                join(&out.right, " "),
                join(&out.product, " "),
                out.length
            )
        }
    }
}

fn parts_list(rs: &RootSystem, parts: &[Root]) -> String {
    if parts.is_empty() {
        return "(empty)".to_string();
    }
    parts
        .iter()
        .map(|r| labeled(rs, r))
        .collect::<Vec<_>>()
        .join("; ")
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
