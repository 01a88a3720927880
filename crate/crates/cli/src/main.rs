//! Command-line front end over the JSON table kinds: validate, build,
//! convert, verify, compute cohomology, classify, enumerate, and improve.
//!
//! Exit codes: 0 for success or a `true` verdict, 1 for a structural
//! failure or a `false` verdict (with a JSON diagnostic on standard
//! error), 2 for usage or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twogroups_core::classification::{
    compose_homs, count_equivalence_classes, count_homs, enumerate_2homs, enumerate_homs,
    equivalent, strictify_if_coboundary,
};
use twogroups_core::cohomology::{cohomology_group, differential_at, GModule};
use twogroups_core::finite_algebra::{cyclic_group, validate_hom};
use twogroups_core::json::{
    choice_to_value, cochain_to_value, crossed_module_to_value, from_text, groupoid_to_value,
    kind_of, parse_abelian, parse_action_abelian, parse_action_group, parse_action_perms,
    parse_choice, parse_cochain, parse_cochain_shape, parse_crossed_module, parse_group,
    parse_groupoid, parse_quadruple, parse_special_hom, parse_special_hom_shape, parse_strict,
    parse_two_hom_shape, quadruple_to_value, special_hom_to_value, strict_to_value, to_line,
    two_hom_to_value, JsonError,
};
use twogroups_core::monoidal_groupoid::{
    check_zigzags, eckmann_hilton_check, groupoid_from_quadruple, improve,
};
use twogroups_core::twogroups::{
    aut2group, central_extension_crossed, crossed_to_strict, strict_to_crossed, trivial_t_crossed,
};

#[derive(Parser)]
#[command(name = "twogroups", version, about = "Exact computation with finite 2-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a JSON document of any known kind
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Compute a cohomology group of a module
    Cohomology {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Also list one cocycle representative per class generator
        #[arg(long)]
        reps: bool,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Decide whether a cochain is closed
    IsCocycle {
        cochain: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Build groupoid models
    Build {
        #[command(subcommand)]
        what: BuildCommand,
    },
    /// Convert between crossed modules and strict 2-groups
    Crossed {
        #[command(subcommand)]
        what: CrossedCommand,
    },
    /// Check one named law, printing true or false
    Verify {
        law: Law,
        file: PathBuf,
        /// Inverse-choice document, required by the zigzag law
        #[arg(long)]
        choices: Option<PathBuf>,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Repair an inverse choice so the zig-zag identities hold
    Improve {
        #[arg(long)]
        groupoid: PathBuf,
        #[arg(long)]
        choices: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Compare and count 2-groups up to equivalence
    Classify {
        #[command(subcommand)]
        what: ClassifyCommand,
    },
    /// Enumerate and compose homomorphisms and their 2-cells
    Homs {
        #[command(subcommand)]
        what: HomsCommand,
    },
    /// Emit a worked example as a crossed module
    Example {
        #[command(subcommand)]
        what: ExampleCommand,
    },
    /// Replace the associator by zero when its class vanishes
    Strictify {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the homomorphism onto the strict model
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BuildCommand {
    /// The one-object-per-element groupoid model of a two_group document
    Skeletal {
        #[arg(long)]
        quadruple: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the canonical inverse choice
        #[arg(long)]
        choices_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CrossedCommand {
    /// Crossed module to strict 2-group
    ToStrict {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Strict 2-group to crossed module
    FromStrict {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Law {
    Pentagon,
    Triangle,
    Zigzag,
    Peiffer,
    Eckmann,
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Decide whether two two_group documents are equivalent
    Equivalent {
        q1: PathBuf,
        q2: PathBuf,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Count equivalence classes sharing a module
    Count {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
}

#[derive(Subcommand)]
enum HomsCommand {
    /// All homomorphisms between two two_group documents, one per line
    Enumerate {
        q1: PathBuf,
        q2: PathBuf,
        /// Print only the number of homomorphisms
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
    /// Compose two homomorphism documents
    Compose {
        f1: PathBuf,
        f2: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        mid: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// All 2-cells between two homomorphism documents, one per line
    TwoCells {
        f1: PathBuf,
        f2: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, default_value_t = MAX_ENUMERATE)]
        max_enumerate: usize,
    },
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// The automorphism 2-group of the cyclic group of the given order
    Aut2 {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = MAX_ORDER)]
        max_order: usize,
    },
    /// The crossed module with trivial boundary over an abelian kernel
    TrivialT {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        kernel: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// The crossed module of a central extension
    CentralExt {
        #[arg(long)]
        total: PathBuf,
        #[arg(long)]
        quotient: PathBuf,
        /// Comma-separated images of the projection, one per total element
        #[arg(long)]
        map: String,
    },
}

const MAX_ENUMERATE: usize = 100_000;
const MAX_ORDER: usize = 24;

enum Failure {
    /// Unusable input: unreadable file, bad JSON, malformed shape (exit 2).
    Usage(String),
    /// Well-formed data violating a structural law, or a false verdict
    /// (exit 1).
    Structural { code: &'static str, witness: String },
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Failure {
        match e {
            JsonError::Shape(msg) => Failure::Usage(msg),
            JsonError::Invalid { code, message } => Failure::Structural {
                code,
                witness: message,
            },
        }
    }
}

fn structural(code: &'static str, witness: impl Into<String>) -> Failure {
    Failure::Structural {
        code,
        witness: witness.into(),
    }
}

fn read_doc(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(from_text(&text)?)
}

fn emit(v: &Value, output: Option<&Path>) -> Result<(), Failure> {
    let line = to_line(v);
    match output {
        Some(path) => fs::write(path, line)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{line}");
            Ok(())
        }
    }
}

/// Prints the verdict; a false verdict carries a diagnostic and exit 1.
fn verdict(ok: bool, code: &'static str, witness: impl Into<String>) -> Result<(), Failure> {
    println!("{ok}");
    if ok {
        Ok(())
    } else {
        Err(structural(code, witness))
    }
}

fn load_module(group: &Path, coeffs: &Path, action: &Path) -> Result<GModule, Failure> {
    let g = parse_group(&read_doc(group)?)?;
    let h = parse_abelian(&read_doc(coeffs)?)?;
    let alpha = parse_action_abelian(&read_doc(action)?, &g, &h)?;
    GModule::new(g, h, alpha).map_err(|e| structural(e.code(), e.to_string()))
}

fn run_validate(file: &Path, max_enumerate: usize) -> Result<(), Failure> {
    let doc = read_doc(file)?;
    let kind = kind_of(&doc)?.to_string();
    match kind.as_str() {
        "group" => parse_group(&doc).map(|_| ())?,
        "abelian" => parse_abelian(&doc).map(|_| ())?,
        "action" => parse_action_perms(&doc).map(|_| ())?,
        "cochain" => parse_cochain_shape(&doc).map(|_| ())?,
        "crossed_module" => parse_crossed_module(&doc).map(|_| ())?,
        "strict_two_group" => parse_strict(&doc).map(|_| ())?,
        "monoidal_groupoid" => parse_groupoid(&doc, max_enumerate).map(|_| ())?,
        "inverse_choice" => parse_choice(&doc).map(|_| ())?,
        "two_group" => parse_quadruple(&doc).map(|_| ())?,
        "special_hom" => parse_special_hom_shape(&doc).map(|_| ())?,
        "two_hom" => parse_two_hom_shape(&doc).map(|_| ())?,
        other => return Err(Failure::Usage(format!("unknown kind \"{other}\""))),
    }
    Ok(())
}

fn run_cohomology(
    group: &Path,
    coeffs: &Path,
    action: &Path,
    degree: usize,
    reps: bool,
    max_enumerate: usize,
) -> Result<(), Failure> {
    let module = load_module(group, coeffs, action)?;
    let coh = cohomology_group(&module, degree, max_enumerate)
        .map_err(|e| structural(e.code(), e.to_string()))?;
    let mut out = json!({"invariant_factors": coh.invariant_factors()});
    if reps {
        let docs: Vec<Value> = coh.representatives().iter().map(cochain_to_value).collect();
        out["representatives"] = json!(docs);
    }
    print!("{}", to_line(&out));
    Ok(())
}

fn run_is_cocycle(
    cochain: &Path,
    group: &Path,
    coeffs: &Path,
    action: &Path,
) -> Result<(), Failure> {
    let module = load_module(group, coeffs, action)?;
    let f = parse_cochain(&read_doc(cochain)?, &module)?;
    let arity = f.degree() + 1;
    let bad = (0..module.tuple_count(arity))
        .map(|idx| module.index_tuple(idx, arity))
        .find(|tuple| differential_at(&f, tuple) != 0);
    match bad {
        None => verdict(true, "", ""),
        Some(tuple) => verdict(
            false,
            "NotCocycle",
            format!("nonzero differential at {tuple:?}"),
        ),
    }
}

fn run_verify(
    law: Law,
    file: &Path,
    choices: Option<&Path>,
    max_enumerate: usize,
) -> Result<(), Failure> {
    let doc = read_doc(file)?;
    match law {
        // validation reports the first broken law; the pentagon stage runs
        // right before the triangle stage, so a triangle report means the
        // pentagon held
        Law::Pentagon => match parse_groupoid(&doc, max_enumerate) {
            Ok(_) => verdict(true, "", ""),
            Err(JsonError::Invalid {
                code: code @ "PentagonFailed",
                message,
            }) => verdict(false, code, message),
            Err(JsonError::Invalid {
                code: "TriangleFailed",
                ..
            }) => verdict(true, "", ""),
            Err(e) => Err(e.into()),
        },
        Law::Triangle => match parse_groupoid(&doc, max_enumerate) {
            Ok(_) => verdict(true, "", ""),
            Err(JsonError::Invalid {
                code: code @ "TriangleFailed",
                message,
            }) => verdict(false, code, message),
            Err(e) => Err(e.into()),
        },
        Law::Zigzag => {
            let m = parse_groupoid(&doc, max_enumerate)?;
            let choices = choices
                .ok_or_else(|| Failure::Usage("verify zigzag requires --choices".into()))?;
            let c = parse_choice(&read_doc(choices)?)?;
            let mut broken = None;
            for x in 0..m.n_objects() {
                let (first, second) =
                    check_zigzags(&m, &c, x).map_err(|e| structural(e.code(), e.to_string()))?;
                if !(first && second) {
                    broken = Some((x, first, second));
                    break;
                }
            }
            match broken {
                None => verdict(true, "", ""),
                Some((x, first, second)) => verdict(
                    false,
                    "ZigzagFailed",
                    format!("object {x}: first identity {first}, second identity {second}"),
                ),
            }
        }
        Law::Peiffer => match parse_crossed_module(&doc) {
            Ok(_) => verdict(true, "", ""),
            Err(JsonError::Invalid {
                code: code @ "PeifferFailed",
                message,
            }) => verdict(false, code, message),
            Err(e) => Err(e.into()),
        },
        Law::Eckmann => {
            let m = parse_groupoid(&doc, max_enumerate)?;
            verdict(
                eckmann_hilton_check(&m),
                "EckmannHiltonFailed",
                "unit endomorphisms fail commutativity or the tensor comparison",
            )
        }
    }
}

fn run_homs(what: &HomsCommand) -> Result<(), Failure> {
    match what {
        HomsCommand::Enumerate {
            q1,
            q2,
            count_only,
            max_enumerate,
        } => {
            let q = parse_quadruple(&read_doc(q1)?)?;
            let q2 = parse_quadruple(&read_doc(q2)?)?;
            if *count_only {
                println!("{}", count_homs(&q, &q2));
                return Ok(());
            }
            let homs = enumerate_homs(&q, &q2, *max_enumerate)
                .map_err(|e| structural(e.code(), e.to_string()))?;
            for f in &homs {
                print!("{}", to_line(&special_hom_to_value(f)));
            }
            Ok(())
        }
        HomsCommand::Compose {
            f1,
            f2,
            source,
            mid,
            target,
        } => {
            let qa = parse_quadruple(&read_doc(source)?)?;
            let qb = parse_quadruple(&read_doc(mid)?)?;
            let qc = parse_quadruple(&read_doc(target)?)?;
            let f = parse_special_hom(&read_doc(f1)?, &qa, &qb)?;
            let g = parse_special_hom(&read_doc(f2)?, &qb, &qc)?;
            let fg = compose_homs(&f, &g).map_err(|e| structural(e.code(), e.to_string()))?;
            emit(&special_hom_to_value(&fg), None)
        }
        HomsCommand::TwoCells {
            f1,
            f2,
            source,
            target,
            max_enumerate,
        } => {
            let qa = parse_quadruple(&read_doc(source)?)?;
            let qb = parse_quadruple(&read_doc(target)?)?;
            let f = parse_special_hom(&read_doc(f1)?, &qa, &qb)?;
            let g = parse_special_hom(&read_doc(f2)?, &qa, &qb)?;
            let cells = enumerate_2homs(&f, &g, *max_enumerate)
                .map_err(|e| structural(e.code(), e.to_string()))?;
            for t in &cells {
                print!("{}", to_line(&two_hom_to_value(t)));
            }
            Ok(())
        }
    }
}

fn run_example(what: &ExampleCommand) -> Result<(), Failure> {
    let cm = match what {
        ExampleCommand::Aut2 { order, max_order } => {
            let g = cyclic_group(*order).map_err(|e| structural(e.code(), e.to_string()))?;
            aut2group(&g, *max_order).map_err(|e| structural(e.code(), e.to_string()))?
        }
        ExampleCommand::TrivialT {
            group,
            kernel,
            action,
        } => {
            let g = parse_group(&read_doc(group)?)?;
            let h = parse_group(&read_doc(kernel)?)?;
            let alpha = parse_action_group(&read_doc(action)?, &g, &h)?;
            trivial_t_crossed(&g, &h, &alpha).map_err(|e| structural(e.code(), e.to_string()))?
        }
        ExampleCommand::CentralExt {
            total,
            quotient,
            map,
        } => {
            let e = parse_group(&read_doc(total)?)?;
            let q = parse_group(&read_doc(quotient)?)?;
            let images: Vec<usize> = map
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad map entry \"{part}\"")))
                })
                .collect::<Result<_, _>>()?;
            let p = validate_hom(&e, &q, images).map_err(|e| structural(e.code(), e.to_string()))?;
            central_extension_crossed(&p).map_err(|e| structural(e.code(), e.to_string()))?
        }
    };
    emit(&crossed_module_to_value(&cm), None)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate {
            file,
            max_enumerate,
        } => run_validate(&file, max_enumerate),
        Command::Cohomology {
            group,
            coeffs,
            action,
            degree,
            reps,
            max_enumerate,
        } => run_cohomology(&group, &coeffs, &action, degree, reps, max_enumerate),
        Command::IsCocycle {
            cochain,
            group,
            coeffs,
            action,
        } => run_is_cocycle(&cochain, &group, &coeffs, &action),
        Command::Build {
            what:
                BuildCommand::Skeletal {
                    quadruple,
                    output,
                    choices_out,
                },
        } => {
            let q = parse_quadruple(&read_doc(&quadruple)?)?;
            let (m, c) = groupoid_from_quadruple(&q);
            if let Some(path) = choices_out {
                emit(&choice_to_value(&c), Some(&path))?;
            }
            emit(&groupoid_to_value(&m)?, output.as_deref())
        }
        Command::Crossed { what } => match what {
            CrossedCommand::ToStrict { file, output } => {
                let cm = parse_crossed_module(&read_doc(&file)?)?;
                emit(&strict_to_value(&crossed_to_strict(&cm)), output.as_deref())
            }
            CrossedCommand::FromStrict { file, output } => {
                let st = parse_strict(&read_doc(&file)?)?;
                let (cm, _) = strict_to_crossed(&st);
                emit(&crossed_module_to_value(&cm), output.as_deref())
            }
        },
        Command::Verify {
            law,
            file,
            choices,
            max_enumerate,
        } => run_verify(law, &file, choices.as_deref(), max_enumerate),
        Command::Improve {
            groupoid,
            choices,
            output,
            max_enumerate,
        } => {
            let m = parse_groupoid(&read_doc(&groupoid)?, max_enumerate)?;
            let c = parse_choice(&read_doc(&choices)?)?;
            let fixed = improve(&m, &c).map_err(|e| structural(e.code(), e.to_string()))?;
            emit(&choice_to_value(&fixed), output.as_deref())
        }
        Command::Classify { what } => match what {
            ClassifyCommand::Equivalent {
                q1,
                q2,
                max_enumerate,
            } => {
                let a = parse_quadruple(&read_doc(&q1)?)?;
                let b = parse_quadruple(&read_doc(&q2)?)?;
                let found = equivalent(&a, &b, max_enumerate)
                    .map_err(|e| structural(e.code(), e.to_string()))?;
                verdict(
                    found.is_some(),
                    "Inequivalent",
                    "no isomorphism pair transports the data",
                )
            }
            ClassifyCommand::Count {
                group,
                coeffs,
                action,
                max_enumerate,
            } => {
                let module = load_module(&group, &coeffs, &action)?;
                let n = count_equivalence_classes(&module, max_enumerate)
                    .map_err(|e| structural(e.code(), e.to_string()))?;
                println!("{n}");
                Ok(())
            }
        },
        Command::Homs { what } => run_homs(&what),
        Command::Example { what } => run_example(&what),
        Command::Strictify {
            file,
            output,
            witness_out,
        } => {
            let q = parse_quadruple(&read_doc(&file)?)?;
            let Some((strict, hom)) = strictify_if_coboundary(&q) else {
                return Err(structural(
                    "ClassNonzero",
                    "the associator class is not a coboundary",
                ));
            };
            if let Some(path) = witness_out {
                emit(&special_hom_to_value(&hom), Some(&path))?;
            }
            emit(&quadruple_to_value(&strict), output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Structural { code, witness }) => {
            eprintln!("{}", json!({"error": code, "witness": witness}));
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("{}", json!({"error": "Parse", "witness": message}));
            ExitCode::from(2)
        }
    }
}
