//! The `whiskerkit` command line.
//!
//! Every command prints a short `#` header (the command echo and a sha256
//! digest per input file), then its result. Theorem-violation diagnostics are
//! printed as `# violation:` lines and make the exit code 1; input and
//! precondition errors go to standard error with exit code 2.

use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::algebra::{
    alexander_dual, eagon_reiner_poly_check, stanley_reisner, whisker_betti, whisker_betti_oracle,
};
use crate::coloring::{is_balanced, min_coloring, validate_coloring, Coloring};
use crate::complex::SimplicialComplex;
use crate::decompose::{find_shelling, is_vertex_decomposable, whisker_shelling_order, ShellingSearch};
use crate::error::Error;
use crate::graphs::{
    chordal_free_vertex_facet, clique_complex, clique_whisker, coloring_from_clique_partition,
    explore_exhaustive, explore_sampled, facet_restrictions, find_facet_restriction, hhz_check,
    independence_complex, is_chordal, reverse_whisker, reverse_whisker_at, Chordality, CliquePartition, Graph,
    EXHAUSTIVE_LIMIT,
};
use crate::io;
use crate::whisker::whisker;

/// Certificates with more nodes than this are summarized instead of printed.
const CERTIFICATE_PRINT_LIMIT: usize = 500;

#[derive(Parser, Debug)]
#[command(name = "whiskerkit", version, about = "Balanced whiskering of simplicial complexes")]
pub struct Cli {
    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Pure,
    Balanced,
    Vd,
    Shellable,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f-vector of a complex.
    Fvec { complex: PathBuf },
    /// h-vector of a complex.
    Hvec { complex: PathBuf },
    /// Whisker a complex along a colouring.
    Whisker { complex: PathBuf, coloring: PathBuf },
    /// Test one property of a complex.
    Check { property: Property, complex: PathBuf },
    /// Minimal generators of the Stanley-Reisner ideal.
    SrIdeal { complex: PathBuf },
    /// Alexander dual complex.
    Dual { complex: PathBuf },
    /// Betti table of the Alexander dual ideal of the whiskered complex.
    Betti {
        complex: PathBuf,
        coloring: PathBuf,
        /// Also compute the table through Hochster's formula.
        #[arg(long)]
        oracle: bool,
    },
    /// First facet restriction, or all of them.
    FacetRestriction {
        complex: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Undo a whiskering at a facet restriction.
    Reverse {
        complex: PathBuf,
        coloring: Option<PathBuf>,
        /// Reverse at this facet (space-separated labels) instead of the first
        /// facet restriction.
        #[arg(long, value_name = "LABELS")]
        facet: Option<String>,
    },
    /// Independence complex of a graph.
    Ind { graph: PathBuf },
    /// Clique complex of a graph.
    Cliquecomplex { graph: PathBuf },
    /// Whisker a graph along a clique partition.
    CliqueWhisker { graph: PathBuf, partition: PathBuf },
    /// Chordality with a perfect elimination order or an induced cycle.
    Chordal { graph: PathBuf },
    /// Unmixedness against the free-vertex clique partition.
    Hhz { graph: PathBuf },
    /// Check the chordal case of the f-vector / h-vector equality.
    Explore {
        #[arg(long)]
        max_n: usize,
        /// Required when max-n exceeds the exhaustive limit.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// What a run produced: text for standard output and standard error, and the
/// exit code.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Default)]
struct RunReport {
    echo: String,
    digests: Vec<(String, String)>,
    body: String,
    violations: Vec<String>,
}

impl RunReport {
    fn read(&mut self, path: &Path) -> Result<String, String> {
        let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        self.digests
            .push((path.display().to_string(), hex::encode(Sha256::digest(&bytes))));
        String::from_utf8(bytes).map_err(|_| format!("{}: not valid UTF-8", path.display()))
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.body.push_str(s.as_ref());
        self.body.push('\n');
    }

    fn comment(&mut self, s: impl AsRef<str>) {
        for l in s.as_ref().lines() {
            self.line(format!("# {l}").trim_end());
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.violations.push(what.to_string());
        }
    }

    fn render(&self) -> String {
        let mut out = format!("# {}\n", self.echo);
        for (path, digest) in &self.digests {
            let _ = writeln!(out, "# sha256 {digest} {path}");
        }
        out.push_str(&self.body);
        for v in &self.violations {
            let _ = writeln!(out, "# violation: {v}");
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn in_file(path: &Path, e: Error) -> String {
    format!("{}: {e}", path.display())
}

fn read_complex(r: &mut RunReport, path: &Path) -> Result<(SimplicialComplex, Option<Coloring>), String> {
    let text = r.read(path)?;
    io::parse_complex_with_coloring(&text).map_err(|e| in_file(path, e))
}

fn read_coloring(r: &mut RunReport, path: &Path, complex: &SimplicialComplex) -> Result<Coloring, String> {
    let text = r.read(path)?;
    io::parse_coloring(&text, complex.universe()).map_err(|e| in_file(path, e))
}

fn read_graph(r: &mut RunReport, path: &Path) -> Result<Graph, String> {
    let text = r.read(path)?;
    io::parse_graph(&text).map_err(|e| in_file(path, e))
}

fn execute(command: &Command, r: &mut RunReport) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    match command {
        Command::Fvec { complex } => {
            let (c, _) = read_complex(r, complex)?;
            r.line(c.f_vector().map_err(err)?.to_string());
        }
        Command::Hvec { complex } => {
            let (c, _) = read_complex(r, complex)?;
            r.line(c.h_vector().map_err(err)?.to_string());
        }
        Command::Whisker { complex, coloring } => {
            let (c, _) = read_complex(r, complex)?;
            let chi = read_coloring(r, coloring, &c)?;
            cmd_whisker(r, &c, &chi)?;
        }
        Command::Check { property, complex } => {
            let (c, _) = read_complex(r, complex)?;
            cmd_check(r, *property, &c)?;
        }
        Command::SrIdeal { complex } => {
            let (c, _) = read_complex(r, complex)?;
            let ideal = stanley_reisner(&c).map_err(err)?;
            if ideal.is_zero() {
                r.comment("zero ideal");
            }
            r.body.push_str(&ideal.render());
        }
        Command::Dual { complex } => {
            let (c, _) = read_complex(r, complex)?;
            r.body.push_str(&io::write_complex(&alexander_dual(&c).map_err(err)?));
        }
        Command::Betti {
            complex,
            coloring,
            oracle,
        } => {
            let (c, _) = read_complex(r, complex)?;
            let chi = read_coloring(r, coloring, &c)?;
            cmd_betti(r, &c, &chi, *oracle)?;
        }
        Command::FacetRestriction { complex, all } => {
            let (c, _) = read_complex(r, complex)?;
            if c.is_void() {
                return Err(err(Error::VoidComplex));
            }
            let found = if *all {
                facet_restrictions(&c)
            } else {
                find_facet_restriction(&c).into_iter().collect()
            };
            if found.is_empty() {
                r.line("none");
            }
            for f in found {
                r.line(format!("facet: {}", c.universe().format_face(f)));
            }
        }
        Command::Reverse {
            complex,
            coloring,
            facet,
        } => {
            let (c, embedded) = read_complex(r, complex)?;
            let chi = match coloring {
                Some(path) => Some(read_coloring(r, path, &c)?),
                None => embedded,
            };
            let reversal = match facet {
                None => reverse_whisker(&c, chi.as_ref()),
                Some(labels) => {
                    let f = c.universe().face(labels.split_whitespace()).map_err(err)?;
                    let chi = match chi {
                        Some(chi) => chi,
                        None => {
                            let s = (c.dimension().map_err(err)? + 1).max(1) as usize;
                            min_coloring(&c, s).ok_or_else(|| err(Error::NotBalanced))?
                        }
                    };
                    reverse_whisker_at(&c, &chi, f)
                }
            };
            match reversal {
                Ok(rev) => {
                    r.body.push_str(&io::write_complex(&rev.restricted));
                    r.body
                        .push_str(&io::write_coloring(&rev.coloring, rev.restricted.universe()));
                    r.comment(format!("facet restriction: {}", c.universe().format_face(rev.facet)));
                    r.comment(format!("h(input) = {}", rev.h));
                    r.comment(format!("f(restriction) = {}", rev.f));
                    r.comment("h = f: yes");
                }
                Err(Error::TheoremViolation(m)) => r.violations.push(m),
                Err(e) => return Err(err(e)),
            }
        }
        Command::Ind { graph } => {
            let g = read_graph(r, graph)?;
            r.body.push_str(&io::write_complex(&independence_complex(&g)));
        }
        Command::Cliquecomplex { graph } => {
            let g = read_graph(r, graph)?;
            r.body.push_str(&io::write_complex(&clique_complex(&g)));
        }
        Command::CliqueWhisker { graph, partition } => {
            let g = read_graph(r, graph)?;
            let text = r.read(partition)?;
            let classes = io::parse_coloring(&text, g.universe()).map_err(|e| in_file(partition, e))?;
            let pi = CliquePartition::new(&g, classes.classes().to_vec()).map_err(err)?;
            let gp = clique_whisker(&g, &pi).map_err(err)?;
            r.body.push_str(&io::write_graph(&gp));
            let chi = coloring_from_clique_partition(&g, &pi).map_err(err)?;
            let w = whisker(&independence_complex(&g), &chi).map_err(err)?;
            let same = &independence_complex(&gp) == w.complex();
            r.comment(format!("Ind(G^π) = whiskered Ind(G): {}", yes(same)));
            r.check(same, "Ind(G^π) differs from the whiskered independence complex");
            let before = is_chordal(&g).is_chordal();
            let after = is_chordal(&gp).is_chordal();
            r.comment(format!("chordal: input {}, output {}", yes(before), yes(after)));
            r.check(!before || after, "whiskering a chordal graph gave a non-chordal graph");
        }
        Command::Chordal { graph } => {
            let g = read_graph(r, graph)?;
            let names = |vs: &[usize]| vs.iter().map(|&v| g.universe().label(v)).collect::<Vec<_>>().join(" ");
            match is_chordal(&g) {
                Chordality::PerfectElimination(order) => {
                    r.line("chordal: yes");
                    r.comment(format!("perfect elimination order: {}", names(&order)));
                }
                Chordality::InducedCycle(cycle) => {
                    r.line("chordal: no");
                    r.comment(format!("induced cycle: {}", names(&cycle)));
                }
            }
        }
        Command::Hhz { graph } => {
            let g = read_graph(r, graph)?;
            let report = hhz_check(&g).map_err(err)?;
            r.line(format!("unmixed: {}", yes(report.unmixed)));
            r.line(format!("free-vertex partition: {}", yes(report.partition_holds)));
            r.comment("free clique facets:");
            for c in &report.free_facets {
                r.comment(format!("  {}", g.universe().format_face(*c)));
            }
            r.check(report.agrees(), "unmixedness and the free-vertex partition disagree");
            if report.unmixed {
                match chordal_free_vertex_facet(&g) {
                    Ok(f) => r.comment(format!("free-vertex facet restriction: {}", g.universe().format_face(f))),
                    Err(e) => r.violations.push(e.to_string()),
                }
            }
        }
        Command::Explore {
            max_n,
            seed,
            samples,
        } => {
            let report = if *max_n <= EXHAUSTIVE_LIMIT {
                explore_exhaustive(*max_n)
            } else {
                let seed = seed.ok_or_else(|| {
                    format!("--seed is required when --max-n exceeds {EXHAUSTIVE_LIMIT} (sampled mode)")
                })?;
                explore_sampled(*max_n, seed, *samples)
            }
            .map_err(err)?;
            r.body.push_str(&report.render());
            r.violations.extend(report.violations);
        }
    }
    Ok(())
}

fn cmd_whisker(r: &mut RunReport, c: &SimplicialComplex, chi: &Coloring) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    let w = whisker(c, chi).map_err(err)?;
    let wc = w.complex();
    r.body.push_str(&io::write_whisker(&w));
    let f = c.f_vector().map_err(err)?;
    let h = wc.h_vector().map_err(err)?;
    let matches = f.eq_up_to_trailing_zeros(&h);
    r.comment(format!("f(source) = {f}"));
    r.comment(format!("h(whisker) = {h}"));
    r.comment(format!("h = f: {}", yes(matches)));
    r.check(matches, "h of the whiskered complex differs from f of the source");
    let pure = wc.is_pure().map_err(err)?;
    r.comment(format!("pure: {}", yes(pure)));
    r.check(pure, "whiskered complex is not pure");
    let dim = wc.dimension().map_err(err)?;
    let balanced = validate_coloring(wc, w.induced_coloring()).map_err(err)?
        && w.induced_coloring().class_count() as isize == dim + 1;
    r.comment(format!("balanced: {}", yes(balanced)));
    r.check(balanced, "induced colouring is not a balanced colouring");
    match whisker_shelling_order(&w) {
        Ok(order) => {
            r.comment("shelling order (position, facet index, facet, restriction set):");
            r.comment(order.render(wc));
        }
        Err(e) => r.violations.push(e.to_string()),
    }
    match is_vertex_decomposable(wc).map_err(err)? {
        Some(cert) if cert.verify(wc) => {
            let size = cert.size();
            if size <= CERTIFICATE_PRINT_LIMIT {
                r.comment("shedding certificate:");
                r.comment(cert.render(wc.universe()));
            } else {
                r.comment(format!("shedding certificate: {size} nodes, verified"));
            }
        }
        _ => r.violations.push("whiskered complex has no verified shedding certificate".into()),
    }
    Ok(())
}

fn cmd_check(r: &mut RunReport, property: Property, c: &SimplicialComplex) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    match property {
        Property::Pure => r.line(format!("pure: {}", yes(c.is_pure().map_err(err)?))),
        Property::Balanced => {
            let balanced = is_balanced(c).map_err(err)?;
            r.line(format!("balanced: {}", yes(balanced)));
            if balanced {
                let s = (c.dimension().map_err(err)? + 1).max(1) as usize;
                let chi = min_coloring(c, s).expect("balanced complexes have a colouring");
                r.body.push_str(&io::write_coloring(&chi, c.universe()));
            }
        }
        Property::Vd => match is_vertex_decomposable(c) {
            Ok(Some(cert)) => {
                r.line("vertex decomposable: yes");
                r.comment(cert.render(c.universe()));
            }
            Ok(None) => r.line("vertex decomposable: no"),
            Err(Error::NotPure) => r.line("vertex decomposable: no (not pure)"),
            Err(e) => return Err(err(e)),
        },
        Property::Shellable => match find_shelling(c) {
            Ok(ShellingSearch::Found(order)) => {
                r.line("shellable: yes");
                r.comment(order.render(c));
            }
            Ok(ShellingSearch::NotShellable) => r.line("shellable: no"),
            Ok(ShellingSearch::Unknown) => r.line("shellable: unknown (search budget exhausted)"),
            Err(Error::NotPure) => r.line("shellable: no (not pure)"),
            Err(e) => return Err(err(e)),
        },
    }
    Ok(())
}

fn cmd_betti(r: &mut RunReport, c: &SimplicialComplex, chi: &Coloring, oracle: bool) -> Result<(), String> {
    let err = |e: Error| e.to_string();
    let w = whisker(c, chi).map_err(err)?;
    let wb = whisker_betti(&w).map_err(err)?;
    r.body.push_str(&wb.table.to_tsv());
    r.comment(format!("projective dimension {}", wb.projective_dimension));
    r.comment(format!("regularity {}", wb.regularity));
    let linear = wb.table.is_linear(w.source_vertex_count());
    r.comment(format!("linear resolution: {}", yes(linear)));
    let er = eagon_reiner_poly_check(&w.complex().h_vector().map_err(err)?, &wb.table);
    r.comment(format!("eagon-reiner expansion: {}", yes(er)));
    r.check(er, "total Betti numbers differ from the h-polynomial expansion");
    if oracle {
        let table = whisker_betti_oracle(&w).map_err(err)?;
        r.comment("oracle (Hochster's formula):");
        r.comment(table.to_tsv());
        let same = table == wb.table;
        r.line(if same { "MATCH" } else { "MISMATCH" });
        r.check(same, "formula table differs from the Hochster oracle");
    }
    Ok(())
}

/// Run the command line on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code: 2,
                    ..Default::default()
                }
            } else {
                Outcome {
                    stdout: text,
                    ..Default::default()
                }
            };
        }
    };
    let start = Instant::now();
    let mut report = RunReport {
        echo: std::iter::once("whiskerkit".to_string())
            .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
            .collect::<Vec<_>>()
            .join(" "),
        ..Default::default()
    };
    if let Err(message) = execute(&cli.command, &mut report) {
        return Outcome {
            stderr: format!("error: {message}\n"),
            code: 2,
            ..Default::default()
        };
    }
    let mut outcome = Outcome {
        stdout: report.render(),
        code: if report.violations.is_empty() { 0 } else { 1 },
        ..Default::default()
    };
    for v in &report.violations {
        let _ = writeln!(outcome.stderr, "VIOLATION: {v}");
    }
    let _ = writeln!(outcome.stderr, "# wall time {:.3} s", start.elapsed().as_secs_f64());
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            return Outcome {
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                code: 2,
                ..Default::default()
            };
        }
        outcome.stdout.clear();
    }
    outcome
}
