use clap::{Parser, Subcommand, ValueEnum};
use skein::frobenius::{algebra_by_name, AlgebraElement, TensorElement};
use skein::idempotents::{bits_to_string, enumerate_classes, idempotent_battery, partition_idempotent, ArcPartition, PlanarMatching};
use skein::invariants::{
    apply_table, b3xs1_on_words, invariant_b3xs1, invariant_s2xb2, invariant_t2xb2, rank_one_tables, s2xb2_on_words,
    sphere_skein_normal_form, sphere_skein_trace_reduce, SphereGenerator, SphereSkein, TorusGenerator,
};
use skein::linalg::determinant;
use skein::scalar::Scalar;
use skein::solidtorus::{class_basis, gram_matrix, kirby_color, KirbyColor, KirbyMethod};
use skein::surfaces::{eval_punctured, eval_surface, SurfaceJson, SurfacePresentation};
use skein::verify::{run_suite, Suite};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact surface skein computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Kirby color ω_{2n}.
    Kirby {
        #[arg(long, default_value = "alpha")]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long, value_enum, default_value = "tensor")]
        format: KirbyFormat,
    },
    /// Print the Gram matrix on the walk-indexed class basis.
    Pairing {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the partition idempotents of every planar matching with n arcs and check their relations.
    Idempotents {
        #[arg(long)]
        n: usize,
    },
    /// List the returning walks of length 2n.
    Walks {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate a decorated surface given as JSON.
    Eval {
        #[arg(long)]
        surface: std::path::PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the worked handlebody invariants.
    Invariant {
        #[arg(long, value_enum)]
        example: Example,
        /// Largest k in the generators S^{2k} or T^{2k}.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        /// Evaluation of the empty skein.
        #[arg(long, default_value = "1")]
        ev: String,
        /// Slope entry r for the 3-torus generators.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        /// Counit parameter of the rank-one theory.
        #[arg(long, default_value = "1")]
        u: String,
        /// A word in S and D to evaluate instead of the generator table.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a property battery.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Copair,
    Closed,
    Symmetrizer,
    Gram,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum KirbyFormat {
    Tensor,
    Dtl,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    S2xb2,
    B3xs1,
    T2xb2,
    RankOne,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Frobenius,
    Dtl,
    Idempotents,
    Kirby,
    Invariants,
    All,
}

enum Failure {
    Error(skein::Error),
    Usage(String),
    Check,
}

impl From<skein::Error> for Failure {
    fn from(e: skein::Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Kirby { algebra, n, method, format } => kirby(&algebra, n, method, format),
        Command::Pairing { n, format } => pairing(n, format),
        Command::Idempotents { n } => idempotents(n),
        Command::Walks { n } => {
            for w in enumerate_classes(n) {
                println!("{}", bits_to_string(&w));
            }
            Ok(())
        }
        Command::Eval { surface, format } => eval(&surface, format),
        Command::Invariant { example, max_k, ev, r, u, word, format } => invariant(example, max_k, &ev, r, &u, word.as_deref(), format),
        Command::Verify { suite, max_n, seed } => verify(suite, max_n, seed),
    }
}

fn json<T: serde::Serialize>(v: &T) -> Outcome {
    println!("{}", serde_json::to_string_pretty(v).map_err(|e| Failure::Error(e.into()))?);
    Ok(())
}

fn print_kirby(k: &KirbyColor, format: KirbyFormat) -> Outcome {
    match format {
        KirbyFormat::Tensor => println!("{}", k.tensor),
        KirbyFormat::Dtl => match &k.dtl {
            Some(d) => println!("{d}"),
            None => return Err(Failure::Usage("the closed form has no diagram form; use --method copair".into())),
        },
        KirbyFormat::Json => json(&k.to_json())?,
    }
    Ok(())
}

fn kirby(algebra: &str, n: usize, method: Method, format: KirbyFormat) -> Outcome {
    let alg = algebra_by_name(algebra).map_err(|e| Failure::Usage(e.to_string()))?;
    let single = |m: KirbyMethod| kirby_color(&alg, n, m);
    match method {
        Method::All => {
            let copair = single(KirbyMethod::Copair)?;
            let closed = single(KirbyMethod::Closed)?;
            let sym = single(KirbyMethod::Symmetrizer)?;
            let agree = copair.tensor == closed.tensor && sym.tensor == closed.tensor;
            print_kirby(&copair, format)?;
            if !agree {
                eprintln!("routes disagree");
                return Err(Failure::Check);
            }
            Ok(())
        }
        Method::Copair => print_kirby(&single(KirbyMethod::Copair)?, format),
        Method::Closed => print_kirby(&single(KirbyMethod::Closed)?, format),
        Method::Symmetrizer => print_kirby(&single(KirbyMethod::Symmetrizer)?, format),
        Method::Gram => print_kirby(&single(KirbyMethod::Gram)?, format),
    }
}

fn basis_label(walk: &[u8], dotted: bool) -> String {
    format!("{}{}", bits_to_string(walk), if dotted { "•" } else { "" })
}

fn pairing(n: usize, format: Format) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let labels: Vec<String> = class_basis(n).iter().map(|(c, _)| basis_label(&c.walk, c.dotted)).collect();
    let g = gram_matrix(n);
    let det = determinant(&g);
    if format == Format::Json {
        let rows: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        return json(&serde_json::json!({ "n": n, "basis": labels, "gram": rows, "determinant": det.to_string() }));
    }
    println!("basis: {}", labels.join(" "));
    for row in &g {
        println!("{}", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\t"));
    }
    println!("det = {det}");
    Ok(())
}

fn idempotents(n: usize) -> Outcome {
    let mut ok = true;
    for m in PlanarMatching::all(n) {
        println!("matching {m}");
        for p in ArcPartition::all(&m) {
            let b: Vec<String> = p.block_b().iter().map(|a| (a + 1).to_string()).collect();
            let c: Vec<String> = p.block_c().iter().map(|a| (a + 1).to_string()).collect();
            println!("  B={{{}}} C={{{}}}: {}", b.join(","), c.join(","), partition_idempotent(&p));
        }
        let report = idempotent_battery(&m);
        for f in report.failures() {
            println!("  FAIL {}", f.name);
        }
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn eval(path: &std::path::Path, format: Format) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let j: SurfaceJson = serde_json::from_str(&text).map_err(|e| Failure::Error(e.into()))?;
    let s = SurfacePresentation::from_json(&j)?;
    let out = match &j.inputs {
        Some(labels) => {
            let factors = labels.iter().map(|l| AlgebraElement::parse(s.algebra(), l)).collect::<skein::Result<Vec<_>>>()?;
            eval_punctured(&s, &TensorElement::product_of(s.algebra(), &factors)?)?
        }
        None => eval_surface(&s)?,
    };
    match format {
        Format::Text => println!("{out}"),
        Format::Json => json(&out.to_json())?,
    }
    Ok(())
}

fn parse_scalar_flag(name: &str, v: &str) -> std::result::Result<Scalar, Failure> {
    v.parse().map_err(|e: skein::Error| Failure::Usage(format!("--{name}: {e}")))
}

fn emit_table(example: &str, rows: Vec<(String, Scalar)>, format: Format) -> Outcome {
    if format == Format::Json {
        let values: Vec<_> = rows.iter().map(|(g, v)| serde_json::json!({ "generator": g, "value": v.to_string() })).collect();
        return json(&serde_json::json!({ "example": example, "values": values }));
    }
    for (g, v) in rows {
        println!("{g} ↦ {v}");
    }
    Ok(())
}

fn invariant(example: Example, max_k: usize, ev: &str, r: i64, u: &str, word: Option<&str>, format: Format) -> Outcome {
    let ev = parse_scalar_flag("ev", ev)?;
    match example {
        Example::S2xb2 | Example::B3xs1 => {
            let name = if matches!(example, Example::S2xb2) { "s2xb2" } else { "b3xs1" };
            if let Some(w) = word {
                let x: SphereSkein = w.parse().map_err(|e: skein::Error| Failure::Usage(e.to_string()))?;
                let (direct, table) = match example {
                    Example::S2xb2 => (s2xb2_on_words(&x, &ev)?, apply_table(&x, &|g| invariant_s2xb2(g, &ev))?),
                    _ => (b3xs1_on_words(&x), apply_table(&x, &|g| Ok(invariant_b3xs1(g)))?),
                };
                if format == Format::Json {
                    return json(&serde_json::json!({
                        "example": name,
                        "word": w,
                        "normal_form": sphere_skein_normal_form(&x).to_string(),
                        "trace_reduced": sphere_skein_trace_reduce(&x).to_string(),
                        "value": table.to_string(),
                        "direct": direct.to_string(),
                    }));
                }
                println!("normal form: {}", sphere_skein_normal_form(&x));
                println!("trace reduced: {}", sphere_skein_trace_reduce(&x));
                println!("value: {table}");
                println!("direct evaluation: {direct}");
                return if direct == table { Ok(()) } else { Err(Failure::Check) };
            }
            let mut gens = vec![("∅".to_string(), SphereGenerator::Empty), ("D".into(), SphereGenerator::D), ("S".into(), SphereGenerator::SPow(1))];
            gens.extend((1..=max_k).map(|k| (format!("S^{}", 2 * k), SphereGenerator::SPow(2 * k))));
            let rows = gens
                .into_iter()
                .map(|(label, g)| {
                    let v = match example {
                        Example::S2xb2 => invariant_s2xb2(g, &ev)?,
                        _ => invariant_b3xs1(g),
                    };
                    Ok((label, v))
                })
                .collect::<skein::Result<Vec<_>>>()?;
            emit_table(name, rows, format)
        }
        Example::T2xb2 => {
            let mut gens = vec![("∅".to_string(), TorusGenerator::Empty), ("D".into(), TorusGenerator::D), ("T".into(), TorusGenerator::TPow(1))];
            gens.extend((1..=max_k).map(|k| (format!("T^{}", 2 * k), TorusGenerator::TPow(2 * k))));
            let rows = gens.into_iter().map(|(l, g)| Ok((l, invariant_t2xb2(g, r)?))).collect::<skein::Result<Vec<_>>>()?;
            emit_table("t2xb2", rows, format)
        }
        Example::RankOne => {
            let u = parse_scalar_flag("u", u)?;
            let t = rank_one_tables(&u)?;
            let show = |m: &Vec<Vec<Scalar>>| {
                m.iter().map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))).collect::<Vec<_>>().join(" ")
            };
            let rows = [
                ("m0", &t.m0),
                ("m1", &t.m1),
                ("p2(0,0)", &t.p2[0]),
                ("p2(0,1)", &t.p2[1]),
                ("c2(0,0)", &t.c2[0]),
                ("c2(0,1)", &t.c2[1]),
                ("m2", &t.m2),
                ("p3", &t.p3),
                ("c3", &t.c3),
                ("m3", &t.m3),
                ("p4", &t.p4),
                ("c4", &t.c4),
                ("m4", &t.m4),
            ];
            if format == Format::Json {
                let obj: serde_json::Map<String, serde_json::Value> = rows
                    .iter()
                    .map(|(k, m)| {
                        let v: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                        (k.to_string(), serde_json::json!(v))
                    })
                    .collect();
                return json(&obj);
            }
            for (k, m) in rows {
                println!("{k} = {}", show(m));
            }
            let battery = t.battery();
            print!("{battery}");
            if battery.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn verify(suite: SuiteArg, max_n: usize, seed: u64) -> Outcome {
    let suites = match suite {
        SuiteArg::Frobenius => vec![Suite::Frobenius],
        SuiteArg::Dtl => vec![Suite::Dtl],
        SuiteArg::Idempotents => vec![Suite::Idempotents],
        SuiteArg::Kirby => vec![Suite::Kirby],
        SuiteArg::Invariants => vec![Suite::Invariants],
        SuiteArg::All => vec![Suite::Frobenius, Suite::Dtl, Suite::Idempotents, Suite::Kirby, Suite::Invariants],
    };
    let mut ok = true;
    for s in suites {
        let report = run_suite(s, max_n, seed);
        print!("{report}");
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
