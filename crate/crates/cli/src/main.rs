//! `bicrossed`: batch front end over the JSON file formats.
//!
//! Exit codes: 0 success, 1 validation failed (report on the output),
//! 2 malformed input, 3 search space over `--limit`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicrossed::formats::{
    from_json, to_json, ActionFile, AlgebraJson, BialgebraJson, BracketFile, CategoryFile,
    CoalgebraMapJson, CoalgebraMapPairJson, LinearBody, LinearCategoryJson, LinearDocument,
    MatchedPairFile, MatrixJson, TwistingFile,
};
use bicrossed::linear::{
    assemble_coalgebra_map, double_cross_product, simple_twisting_product, smash_product,
    split_coalgebra_map, twisted_tensor_algebra, validate_linear_simple_twisting,
    validate_linear_structure, validate_matched_pair_of_bialgebras, validate_twisting_map,
    LinearStructure,
};
use bicrossed::twisting::DEFAULT_LIMIT;
use bicrossed::{
    check_factorization, construct_cst, derive_twisting, enumerate_brackets,
    enumerate_twisting_systems, extract_simple, semidirect_product, twisted_tensor_product,
    validate_matched_pair, validate_twisting_system, Error, FiniteCategory, ValidationReport,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bicrossed", version, about = "Twisting systems, matched pairs and bicrossed products of finite categories and algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Out {
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Pair {
    /// First factor `A`.
    #[arg(long)]
    cat_a: PathBuf,
    /// Second factor `B`.
    #[arg(long)]
    cat_b: PathBuf,
}

#[derive(Args)]
struct Lin {
    /// Linear document.
    #[arg(long)]
    lin: PathBuf,
    #[command(flatten)]
    out: Out,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a category file against the category axioms.
    CheckCategory {
        #[arg(long)]
        cat_a: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Report whether a category is thin and whether it is a groupoid.
    Classify {
        #[arg(long)]
        cat_a: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Validate a twisting system between two categories.
    CheckTwisting {
        #[command(flatten)]
        cats: Pair,
        #[arg(long)]
        twist: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Validate a matched pair between two categories.
    CheckMatchedPair {
        #[command(flatten)]
        cats: Pair,
        /// Matched pair file.
        #[arg(long, alias = "matched-pair")]
        twist: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Write a simple twisting system as its matched pair.
    ExtractSimple {
        #[command(flatten)]
        cats: Pair,
        #[arg(long)]
        twist: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// List every twisting system between two categories.
    EnumerateTwisting {
        #[command(flatten)]
        cats: Pair,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
        #[command(flatten)]
        out: Out,
    },
    /// List every bracket function between two thin categories.
    EnumerateBrackets {
        #[command(flatten)]
        cats: Pair,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
        #[command(flatten)]
        out: Out,
    },
    /// Build the twisted tensor product of a twisting system.
    Product {
        #[command(flatten)]
        cats: Pair,
        #[arg(long)]
        twist: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Check that a category factorizes through two wide subcategories.
    Factorize {
        /// The ambient category.
        #[arg(long)]
        cat: PathBuf,
        /// Morphism ids of the first subcategory, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        a_subset: Vec<usize>,
        /// Morphism ids of the second subcategory, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        b_subset: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Recover the twisting system of a factorizable category.
    ///
    /// The subsets default to the images of the two factors recorded in
    /// the file's tagging.
    DeriveTwisting {
        #[arg(long)]
        cat: PathBuf,
        #[arg(long, value_delimiter = ',', requires = "b_subset")]
        a_subset: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "a_subset")]
        b_subset: Option<Vec<usize>>,
        #[command(flatten)]
        out: Out,
    },
    /// Build the category of a bracket function between thin categories.
    Cst {
        #[command(flatten)]
        cats: Pair,
        #[arg(long)]
        bracket: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Semidirect product of a category by a one-object category (`--cat-b`)
    /// acting through `--action`.
    Semidirect {
        #[command(flatten)]
        cats: Pair,
        #[arg(long)]
        action: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Validate an algebra, coalgebra, bialgebra, linear category or module category.
    LinCheck(Lin),
    /// Validate a twisting map, linear simple twisting system or matched pair of bialgebras.
    LinTwistCheck(Lin),
    /// Twisted tensor algebra of a twisting map, or product of a linear simple twisting system.
    LinProduct(Lin),
    /// Split a coalgebra map into a tensor product, or assemble a split pair.
    LinSplit(Lin),
    /// Double cross product of a matched pair of bialgebras.
    DoubleCross(Lin),
    /// Smash product of a module category.
    Smash(Lin),
}

/// Result of a subcommand: JSON data, or a report whose emptiness decides
/// the exit code.
enum Outcome {
    Data(String),
    Report(ValidationReport),
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    from_json(&read(path)?).map_err(|e| match e {
        Error::Malformed(m) => Error::Malformed(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_raw_category(path: &Path) -> Result<FiniteCategory, Error> {
    load::<CategoryFile>(path)?.to_category()
}

/// Loads a category and requires it to satisfy the axioms.
fn load_category(path: &Path, name: &str) -> Result<FiniteCategory, Error> {
    let c = load_raw_category(path)?;
    let report = c.validate();
    if report.is_valid() {
        return Ok(c);
    }
    let mut tagged = ValidationReport::new();
    for v in report.violations {
        tagged.push(&format!("{name}: {}", v.axiom), v.witness, v.message);
    }
    Err(Error::Invalid(tagged))
}

fn load_pair(cats: &Pair) -> Result<(FiniteCategory, FiniteCategory), Error> {
    Ok((load_category(&cats.cat_a, "first category")?, load_category(&cats.cat_b, "second category")?))
}

fn single(axiom: &str, message: impl Into<String>) -> Error {
    let mut report = ValidationReport::new();
    report.push(axiom, Vec::new(), message);
    Error::Invalid(report)
}

fn linear(path: &Path) -> Result<LinearBody, Error> {
    Ok(LinearDocument::parse(&read(path)?)?.0)
}

fn wrong_kind<T>(body: &LinearBody, expected: &str) -> Result<T, Error> {
    Err(Error::Malformed(format!("expected {expected}, found a {} document", body.kind())))
}

fn doc(body: LinearBody) -> Outcome {
    Outcome::Data(LinearDocument(body).to_json())
}

#[derive(Serialize)]
struct Classification {
    thin: bool,
    groupoid: bool,
    inverse: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Enumeration<T> {
    count: usize,
    #[serde(flatten)]
    items: T,
}

#[derive(Serialize)]
struct Systems {
    systems: Vec<TwistingFile>,
}

#[derive(Serialize)]
struct Brackets {
    brackets: Vec<BracketFile>,
}

#[derive(Serialize)]
struct FactorizationFile {
    first: CategoryFile,
    second: CategoryFile,
    /// `[u, g, f, c]`: `g ∘ f = c` with `g`, `f` numbered within the subcategories
    phi: Vec<[usize; 4]>,
}

/// Subsets of a product file that the two factors were tagged with:
/// `(u, g, 1)` for the first and `(u, 1, f)` for the second, ascending in
/// `g` and `f`.
fn factor_subsets(file: &CategoryFile) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let tags = file
        .tags()?
        .ok_or_else(|| Error::Malformed("pass --a-subset and --b-subset, or a file with a tagging".into()))?;
    let ids_a: Vec<_> = file.identity.iter().map(|&i| tags[i].a).collect();
    let ids_b: Vec<_> = file.identity.iter().map(|&i| tags[i].b).collect();
    let mut a: Vec<_> = (0..tags.len()).filter(|&c| ids_b.get(tags[c].u) == Some(&tags[c].b)).map(|c| (tags[c].a, c)).collect();
    let mut b: Vec<_> = (0..tags.len()).filter(|&c| ids_a.get(tags[c].u) == Some(&tags[c].a)).map(|c| (tags[c].b, c)).collect();
    a.sort();
    b.sort();
    Ok((a.into_iter().map(|p| p.1).collect(), b.into_iter().map(|p| p.1).collect()))
}

fn run(command: &Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::CheckCategory { cat_a, .. } => Outcome::Report(load_raw_category(cat_a)?.validate()),
        Command::Classify { cat_a, .. } => {
            let c = load_category(cat_a, "category")?;
            let inverse = c.inverse_table();
            Outcome::Data(to_json(&Classification { thin: c.is_thin(), groupoid: inverse.is_some(), inverse }))
        }
        Command::CheckTwisting { cats, twist, .. } => {
            let (a, b) = load_pair(cats)?;
            let r = load::<TwistingFile>(twist)?.to_twisting()?;
            Outcome::Report(validate_twisting_system(&a, &b, &r))
        }
        Command::CheckMatchedPair { cats, twist, .. } => {
            let (a, b) = load_pair(cats)?;
            let mp = load::<MatchedPairFile>(twist)?.to_matched_pair()?;
            Outcome::Report(validate_matched_pair(&a, &b, &mp))
        }
        Command::ExtractSimple { cats, twist, .. } => {
            let (a, b) = load_pair(cats)?;
            let r = load::<TwistingFile>(twist)?.to_twisting()?;
            validate_twisting_system(&a, &b, &r).into_result()?;
            let st = extract_simple(&a, &b, &r)
                .ok_or_else(|| single("simple", "some triple has entries in more than one summand"))?;
            Outcome::Data(to_json(&MatchedPairFile::from_matched_pair(&st.to_matched_pair())))
        }
        Command::EnumerateTwisting { cats, limit, .. } => {
            let (a, b) = load_pair(cats)?;
            let systems: Vec<_> = enumerate_twisting_systems(&a, &b, *limit)?.iter().map(TwistingFile::from_twisting).collect();
            Outcome::Data(to_json(&Enumeration { count: systems.len(), items: Systems { systems } }))
        }
        Command::EnumerateBrackets { cats, limit, .. } => {
            let (a, b) = load_pair(cats)?;
            let brackets: Vec<_> = enumerate_brackets(&a, &b, *limit)?.iter().map(BracketFile::from_bracket).collect();
            Outcome::Data(to_json(&Enumeration { count: brackets.len(), items: Brackets { brackets } }))
        }
        Command::Product { cats, twist, .. } => {
            let (a, b) = load_pair(cats)?;
            let r = load::<TwistingFile>(twist)?.to_twisting()?;
            Outcome::Data(to_json(&CategoryFile::from_product(&twisted_tensor_product(&a, &b, &r)?)))
        }
        Command::Factorize { cat, a_subset, b_subset, .. } => {
            let c = load_category(cat, "category")?;
            let f = check_factorization(&c, a_subset, b_subset)?
                .ok_or_else(|| single("factorization", "composition is not a bijection onto some hom-set"))?;
            Outcome::Data(to_json(&FactorizationFile {
                first: CategoryFile::from_category(&f.a.category),
                second: CategoryFile::from_category(&f.b.category),
                phi: f.phi.iter().map(|(t, c)| [t.u, t.a, t.b, *c]).collect(),
            }))
        }
        Command::DeriveTwisting { cat, a_subset, b_subset, .. } => {
            let file: CategoryFile = load(cat)?;
            let c = file.to_category()?;
            let (a, b) = match (a_subset, b_subset) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => factor_subsets(&file)?,
            };
            match derive_twisting(&c, &a, &b) {
                Ok(d) => Outcome::Data(to_json(&TwistingFile::from_twisting(&d.twisting))),
                Err(Error::FactorizationFailed) => {
                    return Err(single("factorization", "composition is not a bijection onto some hom-set"))
                }
                Err(e) => return Err(e),
            }
        }
        Command::Cst { cats, bracket, .. } => {
            let (a, b) = load_pair(cats)?;
            let bf = load::<BracketFile>(bracket)?.to_bracket()?;
            Outcome::Data(to_json(&CategoryFile::from_cst(&construct_cst(&a, &b, &bf)?)))
        }
        Command::Semidirect { cats, action, .. } => {
            let (a, m) = load_pair(cats)?;
            let act = load::<ActionFile>(action)?.to_table(m.num_morphisms(), a.num_morphisms())?;
            Outcome::Data(to_json(&CategoryFile::from_product(&semidirect_product(&a, &m, &act)?)))
        }
        Command::LinCheck(lin) => {
            let structure = match linear(&lin.lin)? {
                LinearBody::Algebra(a) => LinearStructure::Algebra(a.to_algebra()?),
                LinearBody::Coalgebra(c) => LinearStructure::Coalgebra(c.to_coalgebra()?),
                LinearBody::Bialgebra(h) => LinearStructure::Bialgebra(h.to_bialgebra()?),
                LinearBody::LinearCategory(c) => LinearStructure::Category(c.to_category()?),
                LinearBody::ModuleCategory(m) => LinearStructure::ModuleCategory(m.to_action()?),
                other => return wrong_kind(&other, "an algebra, coalgebra, bialgebra, linear category or module category"),
            };
            Outcome::Report(validate_linear_structure(&structure)?)
        }
        Command::LinTwistCheck(lin) => Outcome::Report(match linear(&lin.lin)? {
            LinearBody::TwistingMap(t) => validate_twisting_map(&t.a.to_algebra()?, &t.b.to_algebra()?, &t.r.to_map()?)?,
            LinearBody::LinearSimpleTwisting(t) => {
                let (a, b, st) = t.to_parts()?;
                validate_linear_simple_twisting(&a, &b, &st)?
            }
            LinearBody::BialgebraMatchedPair(m) => validate_matched_pair_of_bialgebras(
                &m.a.to_bialgebra()?,
                &m.b.to_bialgebra()?,
                &m.left.to_map()?,
                &m.right.to_map()?,
            )?,
            other => return wrong_kind(&other, "a twisting map, linear simple twisting system or bialgebra matched pair"),
        }),
        Command::LinProduct(lin) => match linear(&lin.lin)? {
            LinearBody::TwistingMap(t) => {
                let p = twisted_tensor_algebra(&t.a.to_algebra()?, &t.b.to_algebra()?, &t.r.to_map()?)?;
                doc(LinearBody::Algebra(AlgebraJson::from_algebra(&p)))
            }
            LinearBody::LinearSimpleTwisting(t) => {
                let (a, b, st) = t.to_parts()?;
                doc(LinearBody::LinearCategory(LinearCategoryJson::from_category(&simple_twisting_product(&a, &b, &st)?)))
            }
            other => return wrong_kind(&other, "a twisting map or linear simple twisting system"),
        },
        Command::LinSplit(lin) => match linear(&lin.lin)? {
            LinearBody::CoalgebraMap(m) => {
                let (c, d1, d2) = (m.source.to_coalgebra()?, m.first.to_coalgebra()?, m.second.to_coalgebra()?);
                let (f1, f2) = split_coalgebra_map(&m.map.to_map()?, &c, &d1, &d2)?;
                doc(LinearBody::CoalgebraMapPair(CoalgebraMapPairJson {
                    source: m.source,
                    first: m.first,
                    second: m.second,
                    first_map: MatrixJson::from_map(&f1),
                    second_map: MatrixJson::from_map(&f2),
                }))
            }
            LinearBody::CoalgebraMapPair(m) => {
                let (c, d1, d2) = (m.source.to_coalgebra()?, m.first.to_coalgebra()?, m.second.to_coalgebra()?);
                let f = assemble_coalgebra_map(&m.first_map.to_map()?, &m.second_map.to_map()?, &c, &d1, &d2)?;
                doc(LinearBody::CoalgebraMap(CoalgebraMapJson {
                    source: m.source,
                    first: m.first,
                    second: m.second,
                    map: MatrixJson::from_map(&f),
                }))
            }
            other => return wrong_kind(&other, "a coalgebra map or coalgebra map pair"),
        },
        Command::DoubleCross(lin) => match linear(&lin.lin)? {
            LinearBody::BialgebraMatchedPair(m) => {
                let h = double_cross_product(&m.a.to_bialgebra()?, &m.b.to_bialgebra()?, &m.left.to_map()?, &m.right.to_map()?)?;
                doc(LinearBody::Bialgebra(BialgebraJson::from_bialgebra(&h)))
            }
            other => return wrong_kind(&other, "a bialgebra matched pair"),
        },
        Command::Smash(lin) => match linear(&lin.lin)? {
            LinearBody::ModuleCategory(m) => {
                let s = smash_product(&m.to_action()?)?;
                doc(LinearBody::LinearCategory(LinearCategoryJson::from_category(&s)))
            }
            other => return wrong_kind(&other, "a module category"),
        },
    })
}

fn out_path(command: &Command) -> Option<&Path> {
    let out = match command {
        Command::CheckCategory { out, .. }
        | Command::Classify { out, .. }
        | Command::CheckTwisting { out, .. }
        | Command::CheckMatchedPair { out, .. }
        | Command::ExtractSimple { out, .. }
        | Command::EnumerateTwisting { out, .. }
        | Command::EnumerateBrackets { out, .. }
        | Command::Product { out, .. }
        | Command::Factorize { out, .. }
        | Command::DeriveTwisting { out, .. }
        | Command::Cst { out, .. }
        | Command::Semidirect { out, .. } => out,
        Command::LinCheck(l)
        | Command::LinTwistCheck(l)
        | Command::LinProduct(l)
        | Command::LinSplit(l)
        | Command::DoubleCross(l)
        | Command::Smash(l) => &l.out,
    };
    out.out.as_deref()
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli.command) {
        Ok(Outcome::Data(text)) => (text, 0),
        Ok(Outcome::Report(report)) => {
            let code = if report.is_valid() { 0 } else { 1 };
            (to_json(&report), code)
        }
        Err(Error::Invalid(report)) => {
            eprintln!("validation failed: {} violation(s)", report.len());
            (to_json(&report), 1)
        }
        Err(e @ Error::SpaceTooLarge { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(out_path(&cli.command), &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
