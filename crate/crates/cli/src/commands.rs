//! Command implementations. Each returns the rendered report and whether the
//! computed claim holds.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use hopflab::coideal::{coideal_closure, invariants_of, CoidealContext};
use hopflab::corpus;
use hopflab::harmonic::CoidealAnalysis;
use hopflab::hopf::{
    drinfeld_double, group_algebra, symmetric3_table, CompositionConvention, QuasitriangularReport,
    QuasitriangularStructure,
};
use hopflab::io::{self, CoidealRecord, Generator, Report};
use hopflab::linalg::{Subspace, Vector};
use hopflab::solvability::{
    ascending_central_series, check_integral_commutation, check_nilpotent_criterion, check_projection_injectivity,
    check_solvable_series, find_solvable_series, is_integral_of, ProjectionReport, SearchOutcome,
};
use hopflab::{CyclotomicOrder, HopfData};

use crate::render::{element, table, yes_no};
use crate::{Cli, Command, Convention, CorpusAction};

pub struct Outcome {
    pub body: String,
    pub holds: bool,
}

fn report<T: Serialize>(
    cli: &Cli,
    command: &str,
    input: Option<&HopfData>,
    result: T,
    text: impl FnOnce(&T) -> String,
    holds: bool,
) -> Outcome {
    let body = if cli.text {
        let mut out = String::new();
        if let Some(h) = input {
            out.push_str(&format!("input {} (dim {})\n", io::content_hash(h), h.dim()));
        }
        out.push_str(&text(&result));
        out
    } else {
        Report::new(command, input, result).to_json()
    };
    Outcome { body, holds }
}

pub fn emit(cli: &Cli, body: &str) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn load(cli: &Cli, path: &Path) -> Result<HopfData> {
    io::load(path, cli.skip_verify, io::order_override()?).with_context(|| format!("loading {}", path.display()))
}

/// Splits `a;b;[1,0,1/2]` into labels and coordinate lists.
pub fn parse_generators(h: &HopfData, text: &str) -> Result<Vec<Vector>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let g = match item.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                Some(inner) => Generator::Coordinates(inner.split(',').map(|s| s.trim().to_string()).collect()),
                None => Generator::Label(item.to_string()),
            };
            Ok(io::resolve_generator(h, &g)?)
        })
        .collect()
}

fn closure_of(h: &HopfData, gens: &str) -> Result<CoidealContext> {
    let gens = parse_generators(h, gens)?;
    if gens.is_empty() {
        bail!("no generators given");
    }
    Ok(coideal_closure(h, &gens)?)
}

#[derive(Serialize)]
struct VerifyResult {
    hopf: hopflab::hopf::HopfReport,
    quasitriangular: Option<QuasitriangularReport>,
}

#[derive(Serialize)]
struct InducedCharacter {
    index: usize,
    degree: usize,
    induced: Vector,
    induced_degree: String,
    /// Multiplicity of each irreducible character of H in the induced one.
    multiplicities: Vec<u64>,
}

#[derive(Serialize)]
struct NoncommutingCase {
    convention: &'static str,
    dim_n: usize,
    dim_l: usize,
    intersection_dim: usize,
    product_nl: String,
    product_ln: String,
    products_differ: bool,
    products_match_expected: bool,
    neither_is_integral: bool,
    projection: ProjectionReport,
}

impl NoncommutingCase {
    fn holds(&self) -> bool {
        self.dim_n == 3
            && self.dim_l == 3
            && self.intersection_dim == 1
            && self.products_differ
            && self.products_match_expected
            && self.neither_is_integral
            && !self.projection.injective
    }
}

#[derive(Serialize)]
struct CorpusRecord {
    name: String,
    file: String,
    dim: usize,
    cyclotomic_order: u32,
    hash: String,
}

fn noncommuting_case(convention: CompositionConvention) -> Result<NoncommutingCase> {
    let g = group_algebra(&symmetric3_table(convention), CyclotomicOrder::new(3)?)?;
    let h = g.dual();
    let el = |l: &str| g.basis(g.index_of(l).expect("S3 label"));
    let make = |t: &str| -> Result<CoidealContext> {
        let b = Subspace::span(6, [el("e"), el(t)].iter());
        Ok(CoidealContext::from_subspace(&h, invariants_of(&h, &b)?)?)
    };
    let (n, l) = (make("(12)")?, make("(13)")?);
    let c = check_integral_commutation(&h, &l, &n);
    let product_nl = c.product_nl.clone();
    let product_ln = c.product_ln.clone();
    let dual = h.dual_ref();
    let sum = |labels: &[&str]| -> Vector {
        let mut v = vec![hopflab::Scalar::zero(); 6];
        for x in labels {
            v[dual.index_of(x).expect("label")] = hopflab::Scalar::one();
        }
        v
    };
    let expected = [sum(&["e", "(12)", "(13)", "(132)"]), sum(&["e", "(12)", "(13)", "(123)"])];
    let whole = Subspace::full(6);
    Ok(NoncommutingCase {
        convention: match convention {
            CompositionConvention::RightToLeft => "right_to_left",
            CompositionConvention::LeftToRight => "left_to_right",
        },
        dim_n: n.dim(),
        dim_l: l.dim(),
        intersection_dim: n.intersect(&h, &l)?.dim(),
        product_nl: element(dual, &product_nl),
        product_ln: element(dual, &product_ln),
        products_differ: product_nl != product_ln,
        products_match_expected: (product_nl == expected[0] && product_ln == expected[1])
            || (product_nl == expected[1] && product_ln == expected[0]),
        neither_is_integral: !is_integral_of(dual, &whole, &product_nl) && !is_integral_of(dual, &whole, &product_ln),
        projection: check_projection_injectivity(&h, &n, &l)?,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify(input) => {
            let h = io::load(&input.file, true, io::order_override()?)
                .with_context(|| format!("loading {}", input.file.display()))?;
            let hopf = h.verify();
            let quasitriangular = h.r_matrix().map(|r| QuasitriangularStructure { r: r.to_vec() }.verify(&h));
            let holds = hopf.all_passed() && quasitriangular.as_ref().is_none_or(QuasitriangularReport::all_passed);
            let result = VerifyResult { hopf, quasitriangular };
            Ok(report(
                cli,
                "verify",
                Some(&h),
                result,
                |r| {
                    let mut out = r.hopf.to_string();
                    if let Some(q) = &r.quasitriangular {
                        out.push_str(&format!(
                            "R-matrix                           {}\n",
                            if q.all_passed() { "pass" } else { "FAIL" }
                        ));
                    }
                    out
                },
                holds,
            ))
        }
        Command::Dual(input) | Command::Double(input) => {
            let h = load(cli, &input.file)?;
            let out = match &cli.command {
                Command::Dual(_) => h.dual(),
                _ => drinfeld_double(&h)?.0,
            };
            let body = if cli.text {
                format!("input {}\noutput {} (dim {})\n", io::content_hash(&h), io::content_hash(&out), out.dim())
            } else {
                io::to_json(&out)
            };
            Ok(Outcome { body, holds: true })
        }
        Command::Integrals(input) => {
            let h = load(cli, &input.file)?;
            let pair = h.integrals()?.clone();
            Ok(report(
                cli,
                "integrals",
                Some(&h),
                pair,
                |p| format!("Lambda = {}\nlambda = {}\n", element(&h, &p.big_lambda), element(h.dual_ref(), &p.lambda)),
                true,
            ))
        }
        Command::Characters(input) => {
            let h = load(cli, &input.file)?;
            let t = h.characters()?.clone();
            Ok(report(
                cli,
                "characters",
                Some(&h),
                t,
                |t| {
                    let mut rows = vec![std::iter::once(String::new())
                        .chain(std::iter::once("deg".to_string()))
                        .chain((0..h.dim()).map(|i| h.label(i)))
                        .collect::<Vec<_>>()];
                    for (i, chi) in t.characters.iter().enumerate() {
                        let mut r = vec![format!("chi{i}"), t.degrees[i].to_string()];
                        r.extend(chi.iter().map(ToString::to_string));
                        rows.push(r);
                    }
                    table(&rows)
                },
                true,
            ))
        }
        Command::Coideal(c) => {
            let h = load(cli, &c.file)?;
            let ctx = closure_of(&h, &c.gens)?;
            let record = CoidealRecord::new(&h, &ctx);
            Ok(report(
                cli,
                "coideal",
                Some(&h),
                record,
                |r| {
                    let mut out = format!(
                        "dim {}\ndim B {}\nnormal {}\nHopf subalgebra {}\nLambda_N = {}\nlambda_B = {}\nbasis:\n",
                        r.dim,
                        r.dim_b,
                        yes_no(r.is_normal),
                        yes_no(r.is_hopf_subalgebra),
                        element(&h, &r.big_lambda_n),
                        element(h.dual_ref(), &r.lambda_b)
                    );
                    for v in &r.basis {
                        out.push_str(&format!("  {}\n", element(&h, v)));
                    }
                    out
                },
                true,
            ))
        }
        Command::Reciprocity(c) => {
            let h = load(cli, &c.file)?;
            let ctx = closure_of(&h, &c.gens)?;
            let analysis = CoidealAnalysis::new(&h, &ctx)?;
            let table = analysis.reciprocity()?;
            Ok(report(cli, "reciprocity", Some(&h), table, |t| t.to_text(), true))
        }
        Command::Induce(c) => {
            let h = load(cli, &c.file)?;
            let ctx = closure_of(&h, &c.gens)?;
            let analysis = CoidealAnalysis::new(&h, &ctx)?;
            let recip = analysis.reciprocity()?;
            let chars = analysis.characters();
            let mut results = Vec::new();
            for (j, phi) in chars.characters.iter().enumerate() {
                let up = analysis.induce(phi)?;
                results.push(InducedCharacter {
                    index: j,
                    degree: chars.degrees[j],
                    induced_degree: h.pair(&up.coadjoint, h.unit()).to_string(),
                    induced: up.coadjoint,
                    multiplicities: recip.multiplicities.iter().map(|row| row[j]).collect(),
                });
            }
            Ok(report(
                cli,
                "induce",
                Some(&h),
                results,
                |rs| {
                    let mut out = String::new();
                    for r in rs {
                        let parts: Vec<String> = r
                            .multiplicities
                            .iter()
                            .enumerate()
                            .filter(|(_, m)| **m > 0)
                            .map(|(i, m)| if *m == 1 { format!("chi{i}") } else { format!("{m}*chi{i}") })
                            .collect();
                        out.push_str(&format!(
                            "phi{} (deg {}) induces degree {}: {}\n",
                            r.index,
                            r.degree,
                            r.induced_degree,
                            parts.join(" + ")
                        ));
                    }
                    out
                },
                true,
            ))
        }
        Command::SolvableCheck { chain, file } => {
            let h = load(cli, file)?;
            let text = std::fs::read_to_string(chain).with_context(|| format!("reading {}", chain.display()))?;
            let chain = io::parse_chain(&h, &text)?;
            let r = check_solvable_series(&h, &chain)?;
            let holds = r.is_solvable_series();
            Ok(report(cli, "solvable-check", Some(&h), r, |r| format!("{}\n", r.summary()), holds))
        }
        Command::SolvableFind { hint, file } => {
            let h = load(cli, file)?;
            let hints = hint.iter().map(|s| parse_generators(&h, s)).collect::<Result<Vec<_>>>()?;
            let outcome = find_solvable_series(&h, &hints)?;
            let holds = outcome.found().is_some();
            Ok(report(
                cli,
                "solvable-find",
                Some(&h),
                outcome,
                |o| match o {
                    SearchOutcome::Found(r) => format!("found: {}\n", r.summary()),
                    SearchOutcome::Undecided { candidates } => {
                        format!("undecided after {candidates} candidate coideal subalgebras\n")
                    }
                },
                holds,
            ))
        }
        Command::NilpotentCheck { chain, file } => {
            let h = load(cli, file)?;
            match chain {
                Some(path) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    let chain = io::parse_chain(&h, &text)?;
                    let c = check_nilpotent_criterion(&h, &chain)?;
                    let holds = c.certifies_nilpotent();
                    Ok(report(
                        cli,
                        "nilpotent-check",
                        Some(&h),
                        c,
                        |c| {
                            let steps: Vec<&str> = c.steps.iter().map(|s| if *s { "pass" } else { "fail" }).collect();
                            format!(
                                "steps: {}\ncertifies nilpotent: {}\n",
                                steps.join(" "),
                                yes_no(c.certifies_nilpotent())
                            )
                        },
                        holds,
                    ))
                }
                None => {
                    let r = ascending_central_series(&h)?;
                    let holds = r.is_nilpotent;
                    Ok(report(
                        cli,
                        "nilpotent-check",
                        Some(&h),
                        r,
                        |r| {
                            let dims: Vec<String> = r.dims.iter().map(usize::to_string).collect();
                            format!(
                                "ascending central series dims {}\nnilpotent: {}\n",
                                dims.join(" ⊆ "),
                                yes_no(r.is_nilpotent)
                            )
                        },
                        holds,
                    ))
                }
            }
        }
        Command::NoncommutingIntegrals { convention } => {
            let conventions = match convention {
                Convention::RightToLeft => vec![CompositionConvention::RightToLeft],
                Convention::LeftToRight => vec![CompositionConvention::LeftToRight],
                Convention::Both => vec![CompositionConvention::RightToLeft, CompositionConvention::LeftToRight],
            };
            let cases = conventions.into_iter().map(noncommuting_case).collect::<Result<Vec<_>>>()?;
            let holds = cases.iter().all(NoncommutingCase::holds);
            Ok(report(
                cli,
                "noncommuting-integrals",
                None,
                cases,
                |cs| {
                    let mut out = String::new();
                    for c in cs {
                        out.push_str(&format!(
                        "[{}]\ndim N = {}, dim L = {}, dim N∩L = {}\nlambda_N lambda_L = {}\nlambda_L lambda_N = {}\n\
                         products differ: {}\nneither is an integral: {}\nkernel of H -> H//N on L: dim {}\n",
                        c.convention,
                        c.dim_n,
                        c.dim_l,
                        c.intersection_dim,
                        c.product_nl,
                        c.product_ln,
                        yes_no(c.products_differ),
                        yes_no(c.neither_is_integral),
                        c.projection.kernel_dim
                    ));
                    }
                    out
                },
                holds,
            ))
        }
        Command::Corpus { action } => {
            let entries = corpus::corpus()?;
            let records: Vec<CorpusRecord> = entries
                .iter()
                .map(|e| CorpusRecord {
                    name: e.name.to_string(),
                    file: e.file_name(),
                    dim: e.hopf.dim(),
                    cyclotomic_order: e.hopf.order().get(),
                    hash: io::content_hash(&e.hopf),
                })
                .collect();
            if let CorpusAction::Export { dir } = action {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for e in &entries {
                    let path = dir.join(e.file_name());
                    std::fs::write(&path, io::to_json(&e.hopf))
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            Ok(report(
                cli,
                "corpus",
                None,
                records,
                |rs| {
                    let mut rows = vec![["name", "dim", "order", "hash"].map(String::from).to_vec()];
                    rows.extend(rs.iter().map(|r| {
                        vec![r.file.clone(), r.dim.to_string(), r.cyclotomic_order.to_string(), r.hash.clone()]
                    }));
                    table(&rows)
                },
                true,
            ))
        }
    }
}
