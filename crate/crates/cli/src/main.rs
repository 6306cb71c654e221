use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chanorder::miner::{self, Limits};
use chanorder::order::{self, Side};
use chanorder::partition::{self, Partition, Variant};
use chanorder::radical::{capacity_expr, degree_bound, eliminate_steps, RadicalExpr, RadicalOptions};
use chanorder::{BinaryWord, Error, IntPolynomial, Judgement, QuaternaryWord, Relation, Verdict, Witness};

#[derive(Parser)]
#[command(name = "chanorder", version, about = "Exact comparisons of BEC synthetic channels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Abort eliminations whose degree bound exceeds this.
    #[arg(long, default_value_t = 1 << 14, global = true)]
    max_degree: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide p ≽ q.
    Compare { p: QuaternaryWord, q: QuaternaryWord },
    /// Decide the prefix TBM relation α ⊵ β.
    Tbm { alpha: QuaternaryWord, beta: QuaternaryWord },
    /// Decide the suffix TBM relation α ⊵' β.
    TbmSuffix { alpha: QuaternaryWord, beta: QuaternaryWord },
    /// Eliminate the roots of I_w(x) - x, or of the worked example.
    Eliminate {
        word: Option<QuaternaryWord>,
        #[arg(long, conflicts_with = "word")]
        demo: bool,
    },
    /// All TRUE pairs among binary words of length n.
    Enumerate(TableArgs),
    /// Cover edges of an enumerated relation.
    Hasse(TableArgs),
    /// Independent rules among binary words of length at most n.
    NewRules { n: usize },
    /// Emit and verify members of the rule family of a base comparison.
    Family {
        base_p: QuaternaryWord,
        base_q: QuaternaryWord,
        alpha: QuaternaryWord,
        beta: QuaternaryWord,
        #[arg(long, default_value = "prefix")]
        side: Side,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Bit inserted at the seam.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        fill: u8,
    },
    /// Integer partitions and the dominance order.
    #[command(subcommand)]
    Partition(PartitionCommand),
    /// Pairs with α ≽ β but not α ⊵ β.
    TbmGap { n: usize },
}

#[derive(Args)]
struct TableArgs {
    n: usize,
    #[arg(long, value_enum, default_value_t = TableRelation::Order)]
    relation: TableRelation,
    /// Compare words of every length up to n (order only).
    #[arg(long)]
    mixed: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableRelation {
    Order,
    Tbm,
    TbmSuffix,
}

#[derive(Subcommand)]
enum PartitionCommand {
    /// The partition of a binary word.
    Pi { word: BinaryWord },
    /// Whether P dominates Q.
    Dominates { p: Partition, q: Partition },
    /// Simultaneous substitution 0 -> rule0, 1 -> rule1.
    Lindenmayer { word: BinaryWord, rule0: BinaryWord, rule1: BinaryWord },
    /// Check that dominance implies ≽ for all words of length n.
    Check {
        n: usize,
        #[arg(long, default_value = "plain")]
        variant: Variant,
    },
    /// Dominance covers among words of length n and whether each is a window rewrite.
    Covers { n: usize },
}

struct Output {
    text: String,
    success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn describe(j: &Judgement) -> String {
    let truth = if j.truth { "TRUE" } else { "FALSE" };
    let lhs = if j.lhs.is_empty() { "ε" } else { &j.lhs };
    let rhs = if j.rhs.is_empty() { "ε" } else { &j.rhs };
    let mut out = format!("{truth}: {lhs} {} {rhs}\n", j.relation.symbol());
    match &j.witness {
        Witness::Counterexample(c) => {
            out += &format!("  counterexample at x = {} (difference ~ {:e})\n", c.point, c.approx);
        }
        Witness::Conjunction { parts } => {
            for p in parts {
                out += &describe(p).lines().map(|l| format!("  {l}\n")).collect::<String>();
            }
        }
        Witness::Polynomial(p) => {
            out += &format!("  square-free part of degree {}, {} roots in [0, 1]\n", p.squarefree.degree().unwrap_or(0), p.roots_in_unit);
        }
        Witness::Radical(r) => {
            out += &format!("  eliminant of degree {}, {} roots in [0, 1], {} gap samples positive\n", r.eliminant_degree, r.roots_in_unit, r.samples.len());
        }
        Witness::Trivial { reason } => out += &format!("  {reason}\n"),
    }
    out
}

fn verdict_output(v: Verdict, lhs: &QuaternaryWord, rhs: &QuaternaryWord, relation: Relation, format: Format) -> Output {
    let j = v.judge(lhs, rhs, relation);
    let text = match format {
        Format::Json => j.to_json_line() + "\n",
        _ => describe(&j),
    };
    Output { text, success: j.truth }
}

fn run_eliminate(w: Option<QuaternaryWord>, demo: bool, cli: &Cli) -> Result<Output, Error> {
    let expr = match (&w, demo) {
        (_, true) => RadicalExpr::demo(),
        (Some(w), false) => capacity_expr(w).minus_x(),
        (None, false) => return Err(Error::Precondition("eliminate needs a word or --demo".into())),
    };
    let bound = degree_bound(&expr);
    if bound > cli.max_degree {
        return Err(Error::ResourceLimit(format!("eliminant degree bound {bound} exceeds --max-degree {}", cli.max_degree)));
    }
    let steps = eliminate_steps(&expr)?;
    let f = steps.last().and_then(|s| s.as_univariate()).expect("eliminated");
    let closed_form = demo.then(|| {
        let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
        let expected = &(&one_minus_x.square() - &IntPolynomial::from_i64s(&[2])).square() - &IntPolynomial::from_i64s(&[3, 0, -1]);
        assert_eq!(f, expected, "worked example");
        "((1 - x)^2 - 2)^2 - (3 - x^2)"
    });
    let k = steps.len() - 1;
    let rendered: Vec<String> = steps.iter().enumerate().map(|(i, s)| s.render(&format!("y{}", k - i))).collect();
    let text = match cli.format {
        Format::Json => json_line(&json!({
            "expression": expr.to_string(),
            "steps": rendered,
            "eliminant": f,
            "eliminant_pretty": f.to_pretty(),
            "closed_form": closed_form,
        })),
        _ => {
            let mut out = format!("f(x) = {expr}\n");
            for (i, s) in rendered.iter().enumerate() {
                out += &format!("step {i}: {s}\n");
            }
            out += &format!("eliminant: {}\n", f.to_pretty());
            if let Some(c) = closed_form {
                out += &format!("= {c}\n");
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn table(args: &TableArgs) -> Result<miner::RelationTable, Error> {
    let limits = Limits::default();
    match args.relation {
        TableRelation::Order => miner::enumerate_order(args.n, args.mixed, &limits),
        TableRelation::Tbm => miner::enumerate_tbm(args.n, Side::Prefix, &limits),
        TableRelation::TbmSuffix => miner::enumerate_tbm(args.n, Side::Suffix, &limits),
    }
}

fn label(w: &BinaryWord) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let opts = RadicalOptions { max_degree: cli.max_degree, ..Default::default() };
    let format = cli.format;
    Ok(match &cli.command {
        Command::Compare { p, q } => verdict_output(order::compare_with(p, q, &opts)?, p, q, Relation::Geq, format),
        Command::Tbm { alpha, beta } => {
            verdict_output(order::tbm_prefix_with(alpha, beta, &opts)?, alpha, beta, Relation::Tbm, format)
        }
        Command::TbmSuffix { alpha, beta } => {
            verdict_output(order::tbm_suffix_with(alpha, beta, &opts)?, alpha, beta, Relation::TbmSuffix, format)
        }
        Command::Eliminate { word, demo } => return run_eliminate(word.clone(), *demo, cli),
        Command::Enumerate(args) => {
            let t = table(args)?;
            Output::ok(match format {
                Format::Json => t.to_json_lines(),
                _ => t.pairs().iter().map(|(a, b)| format!("{} {} {}\n", label(a), t.relation.symbol(), label(b))).collect(),
            })
        }
        Command::Hasse(args) => {
            let h = miner::hasse(&table(args)?);
            Output::ok(match format {
                Format::Json => json_line(&h),
                Format::Dot => h.to_dot(),
                Format::Text => h.to_text(),
            })
        }
        Command::NewRules { n } => {
            let r = miner::new_rules(*n, &Limits::default())?;
            Output::ok(match format {
                Format::Json => json_line(&r),
                _ => r.rules.iter().map(|x| format!("{} >= {}\n", label(&x.lhs), label(&x.rhs))).collect(),
            })
        }
        Command::Family { base_p, base_q, alpha, beta, side, depth, fill } => {
            let r = order::prove_family(base_p, base_q, alpha, beta, *side, *depth, *fill)?;
            let text = match format {
                Format::Json => r.members.iter().map(|m| m.to_json_line() + "\n").collect(),
                _ => r.members.iter().map(describe).collect(),
            };
            Output { text, success: r.all_true }
        }
        Command::Partition(cmd) => run_partition(cmd, format)?,
        Command::TbmGap { n } => {
            let gaps = miner::find_tbm_gap(*n, &Limits::default())?;
            Output::ok(match format {
                Format::Json => gaps.iter().map(json_line).collect(),
                _ => gaps.iter().map(|g| format!("{} >= {} but not {} |> {}\n", label(&g.alpha), label(&g.beta), label(&g.alpha), label(&g.beta))).collect(),
            })
        }
    })
}

fn run_partition(cmd: &PartitionCommand, format: Format) -> Result<Output, Error> {
    let json = format == Format::Json;
    Ok(match cmd {
        PartitionCommand::Pi { word } => {
            let p = partition::pi(word);
            Output::ok(if json { json_line(&json!({"word": word, "partition": p})) } else { format!("{p}\n") })
        }
        PartitionCommand::Dominates { p, q } => {
            let d = partition::dominates(p, q);
            let text = if json { json_line(&json!({"p": p, "q": q, "dominates": d})) } else { format!("{}\n", if d { "TRUE" } else { "FALSE" }) };
            Output { text, success: d }
        }
        PartitionCommand::Lindenmayer { word, rule0, rule1 } => {
            let w = partition::lindenmayer(word, rule0, rule1);
            Output::ok(if json { json_line(&json!({"word": word, "result": w})) } else { format!("{w}\n") })
        }
        PartitionCommand::Check { n, variant } => {
            let r = partition::check_dominance_theorem(*n, *variant)?;
            let text = if json {
                json_line(&r)
            } else {
                let mut out = format!("{} dominance pairs of length {} checked under {}\n", r.checked.len(), r.n, r.variant);
                for v in &r.violations {
                    out += &describe(v);
                }
                out
            };
            Output { success: r.holds(), text }
        }
        PartitionCommand::Covers { n } => {
            let r = partition::cover_step_report(*n);
            Output::ok(if json {
                json_line(&r)
            } else {
                let mut out = format!("{} covers, {} not a single window rewrite\n", r.covers.len(), r.discrepancies.len());
                for (a, b) in &r.discrepancies {
                    out += &format!("  {a} -> {b}\n");
                }
                out
            })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
