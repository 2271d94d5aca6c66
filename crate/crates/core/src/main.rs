use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use disk_moduli::census::{building_set_with, divisor_census_with};
use disk_moduli::closure::{
    chamber_adjacency_with, chamber_closure_poset, euler_characteristic_with, face_poset_with, ChamberClosure,
    DEFAULT_MAX_FACES,
};
use disk_moduli::enumerate::{chambers_with, enumerate_all_with, enumerate_strata_with, DEFAULT_MAX_RAW_TREES};
use disk_moduli::factor::ModuliFactor;
use disk_moduli::render::{dual_tree, render_svg};
use disk_moduli::wire::{tree_from_json, WireTree};
use disk_moduli::{
    associahedron_poset, cyclohedron_poset, Collision, poset_f_vector, poset_isomorphic, verify, BubbleTree, EnumConfig,
    Error, FacePoset, Stratum,
};

const VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "disk-moduli", version, about = "Strata, tilings and censuses of the compactified moduli space of the punctured disk")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Refuse after generating this many raw trees.
    #[arg(long, global = true, env = "DISK_MODULI_MAX_TREES", default_value_t = DEFAULT_MAX_RAW_TREES)]
    cap: usize,
    /// Canonicalize on a thread pool.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Svg,
    Text,
}

#[derive(Args, Clone, Copy)]
struct Space {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// List strata, optionally of one codimension.
    Strata {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Number of strata per codimension.
    Fvector {
        #[command(flatten)]
        space: Space,
    },
    /// Number of chambers, with the (m-1)! formula.
    Chambers {
        #[command(flatten)]
        space: Space,
    },
    /// Divisor classes and closed-form counts.
    Divisors {
        #[command(flatten)]
        space: Space,
    },
    /// Single-arc collisions of naive codimension at least two.
    BuildingSet {
        #[command(flatten)]
        space: Space,
    },
    /// Face poset of all strata.
    Poset {
        #[command(flatten)]
        space: Space,
    },
    /// Face poset of one chamber's tile.
    Closure {
        #[command(flatten)]
        space: Space,
        /// Chamber as a compact encoding, e.g. "(i1|b1,b3,b2)".
        #[arg(long, conflicts_with = "order")]
        chamber: Option<String>,
        /// Chamber as a boundary order, e.g. 1,3,2.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<u32>>,
    },
    /// Chambers sharing a codim-1 stratum, and connected components.
    Adjacency {
        #[command(flatten)]
        space: Space,
    },
    /// Euler characteristic (n <= 1).
    Euler {
        #[command(flatten)]
        space: Space,
    },
    /// Associahedron face poset on n letters.
    Assoc {
        #[arg(long)]
        n: usize,
    },
    /// Cyclohedron face poset: the tile of K(1,n).
    Cyclo {
        #[arg(long)]
        n: u32,
    },
    /// Test two posets for isomorphism. Operands: assoc:N, cyclo:N,
    /// closure:N,M or faces:N,M.
    Iso {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Draw a tree given as JSON or compact encoding (file path, or - for stdin).
    Render {
        #[arg(long)]
        tree: String,
    },
    /// Run every reproduction check.
    Verify,
}

enum CliError {
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

struct Ctx {
    cfg: EnumConfig,
    format: Option<Format>,
}

impl Ctx {
    fn format(&self, allowed: &[Format]) -> Result<Format, CliError> {
        match self.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(format!(
                "format {} is not available for this command (choose from {})",
                name(f),
                allowed.iter().map(|&a| name(a)).collect::<Vec<_>>().join(", ")
            ))),
        }
    }
}

fn name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
        Format::Svg => "svg",
        Format::Text => "text",
    }
}

fn record(command: &str, body: Value) -> String {
    let mut v = json!({ "version": VERSION, "command": command });
    if let (Some(obj), Value::Object(extra)) = (v.as_object_mut(), body) {
        obj.extend(extra);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

/// Space-separated interior and boundary labels of a collision.
fn labels(c: &Collision) -> (String, String) {
    let join = |v: &[u32]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    match c {
        Collision::Interior { interior } => (join(interior), String::new()),
        Collision::Boundary { boundary } => (String::new(), join(boundary)),
        Collision::Mixed { interior, boundary } => (join(interior), join(boundary)),
    }
}

fn factors_text(fs: &[ModuliFactor]) -> String {
    fs.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}

fn poset_output(ctx: &Ctx, command: &str, p: &FacePoset, extra: Value) -> Result<String, CliError> {
    Ok(match ctx.format(&[Format::Json, Format::Dot, Format::Text])? {
        Format::Dot => p.to_dot(),
        Format::Text => p.to_text(),
        _ => {
            let mut body = json!({
                "f_vector": poset_f_vector(p).ok(),
                "poset": p,
            });
            if let (Some(obj), Value::Object(more)) = (body.as_object_mut(), extra) {
                obj.extend(more);
            }
            record(command, body)
        }
    })
}

fn closure_extra(c: &ChamberClosure) -> Value {
    json!({
        "n": c.n,
        "m": c.m,
        "self_glued": c.self_glued(),
        "stratum_f_vector": c.stratum_f_vector(),
        "glued": c.glued_strata().iter().map(|(s, k)| json!({"stratum": s.encoding(), "faces": k})).collect::<Vec<_>>(),
    })
}

fn read_source(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

/// JSON if it looks like JSON, otherwise the compact encoding.
fn parse_tree(src: &str) -> Result<BubbleTree, Error> {
    let src = src.trim();
    if src.starts_with('{') {
        tree_from_json(src)
    } else {
        let t: BubbleTree = src.parse()?;
        t.validate()?;
        Ok(t)
    }
}

fn iso_operand(spec: &str) -> Result<FacePoset, Error> {
    let bad = || Error::Parse(format!("bad poset operand {spec:?}; use assoc:N, cyclo:N, closure:N,M or faces:N,M"));
    let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<u32> = args
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match (kind, nums.as_slice()) {
        ("assoc", [n]) => associahedron_poset(*n as usize),
        ("cyclo", [n]) => Ok(cyclohedron_poset(*n)?.poset),
        ("closure", [n, m]) => {
            let chamber = Stratum::from_tree(&BubbleTree::trivial(*n, *m))?;
            Ok(chamber_closure_poset(*n, *m, &chamber)?.poset)
        }
        ("faces", [n, m]) => face_poset_with(*n, *m, &EnumConfig::default(), DEFAULT_MAX_FACES),
        _ => Err(bad()),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let ctx = Ctx {
        cfg: EnumConfig {
            max_raw_trees: cli.cap,
            parallel: cli.parallel,
        },
        format: cli.format,
    };
    let cfg = &ctx.cfg;
    let out = match &cli.cmd {
        Cmd::Strata { space: Space { n, m }, codim } => {
            let (n, m) = (*n, *m);
            let strata: Vec<Stratum> = match codim {
                Some(k) => enumerate_strata_with(n, m, *k, cfg)?,
                None => enumerate_all_with(n, m, cfg)?.iter().cloned().collect(),
            };
            match ctx.format(&[Format::Json, Format::Csv, Format::Text])? {
                Format::Csv => {
                    let mut s = String::from("codim,dim,factors,encoding\n");
                    for st in &strata {
                        s += &format!("{},{},{},\"{}\"\n", st.codim(), st.dim(), factors_text(st.factors()), st.encoding());
                    }
                    s
                }
                Format::Text => strata.iter().map(|s| s.encoding() + "\n").collect(),
                _ => record("strata", json!({"n": n, "m": m, "codim": codim, "count": strata.len(), "strata": strata})),
            }
        }
        Cmd::Fvector { space: Space { n, m } } => {
            let f = enumerate_all_with(*n, *m, cfg)?.f_vector();
            match ctx.format(&[Format::Json, Format::Csv, Format::Text])? {
                Format::Csv => {
                    let mut s = String::from("codim,count\n");
                    for (k, c) in f.iter().enumerate() {
                        s += &format!("{k},{c}\n");
                    }
                    s
                }
                Format::Text => format!("{}\n", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
                _ => record("fvector", json!({"n": n, "m": m, "f_vector": f})),
            }
        }
        Cmd::Chambers { space: Space { n, m } } => {
            let c = chambers_with(*n, *m, cfg)?;
            let (enumerated, formula) = (c.enumerated, c.formula);
            match ctx.format(&[Format::Json, Format::Text])? {
                Format::Text => format!("{enumerated}\n"),
                _ => record(
                    "chambers",
                    json!({"n": n, "m": m, "chambers": enumerated, "formula": formula, "matches": enumerated == formula}),
                ),
            }
        }
        Cmd::Divisors { space: Space { n, m } } => {
            let c = divisor_census_with(*n, *m, cfg)?;
            match ctx.format(&[Format::Json, Format::Csv])? {
                Format::Csv => {
                    let mut s = String::from("kind,interior,boundary,factor1,factor2,strata\n");
                    for d in &c.classes {
                        let (i, b) = labels(&d.collision);
                        s += &format!(
                            "{},{},{},{},{},{}\n",
                            d.collision.kind_name(),
                            i,
                            b,
                            d.factors.0,
                            d.factors.1,
                            d.strata
                        );
                    }
                    s
                }
                _ => record(
                    "divisors",
                    json!({
                        "n": n, "m": m,
                        "interior": c.enumerated.interior,
                        "boundary": c.enumerated.boundary,
                        "mixed": c.enumerated.mixed,
                        "total": c.enumerated.total(),
                        "closed_form": c.closed_form,
                        "closed_form_matches": c.closed_form_matches(),
                        "refinement_matches": c.refinement_matches(),
                        "theorem_hypothesis_violated": c.hypothesis_violated,
                        "codim_one_strata": c.codim_one_strata,
                        "chamber_product_sum": c.refinement_sum(),
                        "by_size": c.by_size,
                        "classes": c.classes,
                    }),
                ),
            }
        }
        Cmd::BuildingSet { space: Space { n, m } } => {
            let b = building_set_with(*n, *m, cfg)?;
            match ctx.format(&[Format::Json, Format::Csv])? {
                Format::Csv => {
                    let mut s = String::from("grading,naive_codim,kind,interior,boundary\n");
                    for e in &b {
                        let (i, bb) = labels(&e.collision);
                        s += &format!("{},{},{},{i},{bb}\n", e.grading, e.naive_codim, e.collision.kind_name());
                    }
                    s
                }
                _ => record("building-set", json!({"n": n, "m": m, "count": b.len(), "elements": b})),
            }
        }
        Cmd::Poset { space: Space { n, m } } => {
            let p = face_poset_with(*n, *m, cfg, DEFAULT_MAX_FACES)?;
            poset_output(&ctx, "poset", &p, json!({"n": n, "m": m}))?
        }
        Cmd::Closure { space: Space { n, m }, chamber, order } => {
            let tree = match (chamber, order) {
                (Some(enc), _) => parse_tree(enc)?,
                (None, Some(order)) => BubbleTree::trivial_with_order(*n, order),
                (None, None) => BubbleTree::trivial(*n, *m),
            };
            disk_moduli::tree::validate_tree(&tree, *n, *m)?;
            let c = chamber_closure_poset(*n, *m, &Stratum::from_tree(&tree)?)?;
            poset_output(&ctx, "closure", &c.poset, closure_extra(&c))?
        }
        Cmd::Adjacency { space: Space { n, m } } => {
            let a = chamber_adjacency_with(*n, *m, cfg)?;
            ctx.format(&[Format::Json])?;
            record(
                "adjacency",
                json!({
                    "n": n, "m": m,
                    "chambers": a.chambers.iter().map(Stratum::encoding).collect::<Vec<_>>(),
                    "edges": a.edges,
                    "components": a.components,
                    "component_sizes": a.component_sizes(),
                }),
            )
        }
        Cmd::Euler { space: Space { n, m } } => {
            let chi = euler_characteristic_with(*n, *m, cfg)?;
            match ctx.format(&[Format::Json, Format::Text])? {
                Format::Text => format!("{chi}\n"),
                _ => record("euler", json!({"n": n, "m": m, "euler_characteristic": chi})),
            }
        }
        Cmd::Assoc { n } => {
            let p = associahedron_poset(*n)?;
            poset_output(&ctx, "assoc", &p, json!({"n": n}))?
        }
        Cmd::Cyclo { n } => {
            let c = cyclohedron_poset(*n)?;
            poset_output(&ctx, "cyclo", &c.poset, closure_extra(&c))?
        }
        Cmd::Iso { left, right } => {
            let (p, q) = (iso_operand(left)?, iso_operand(right)?);
            let iso = poset_isomorphic(&p, &q)?;
            match ctx.format(&[Format::Json, Format::Text])? {
                Format::Text => format!("{iso}\n"),
                _ => record(
                    "iso",
                    json!({
                        "left": left, "right": right, "isomorphic": iso,
                        "left_f_vector": poset_f_vector(&p).ok(),
                        "right_f_vector": poset_f_vector(&q).ok(),
                    }),
                ),
            }
        }
        Cmd::Render { tree } => {
            let t = parse_tree(&read_source(tree)?)?;
            match ctx.format(&[Format::Svg, Format::Dot, Format::Json])? {
                Format::Dot => dual_tree(&t).to_dot(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&WireTree::from(&t)).expect("json value");
                    s.push('\n');
                    s
                }
                _ => render_svg(&t),
            }
        }
        Cmd::Verify => {
            let results = verify::run_all();
            let ok = results.iter().all(|c| c.pass());
            let text = match ctx.format(&[Format::Text, Format::Json])? {
                Format::Json => record("verify", json!({"pass": ok, "criteria": results})),
                _ => {
                    let mut s = String::new();
                    for c in &results {
                        s += &format!("[{}] {:>2} {}\n", if c.pass() { "PASS" } else { "FAIL" }, c.id, c.title);
                        for ch in &c.checks {
                            s += &format!(
                                "       {} {}: expected {} actual {}\n",
                                if ch.pass { "ok  " } else { "FAIL" },
                                ch.name,
                                ch.expected,
                                ch.actual
                            );
                        }
                    }
                    s
                }
            };
            return Ok((text, ok));
        }
    };
    Ok((out, true))
}

fn emit(path: Option<&str>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn fail(code: &str, message: String) -> ExitCode {
    eprintln!("{}", json!({"error": {"code": code, "message": message}}));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return fail("Usage", e.kind().to_string());
        }
    };
    match run(&cli) {
        Ok((text, ok)) => {
            if let Err(e) = emit(cli.output.as_deref(), &text) {
                return fail("Io", e.to_string());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Lib(e)) => fail(e.code(), e.to_string()),
        Err(CliError::Usage(msg)) => fail("Usage", msg),
    }
}
