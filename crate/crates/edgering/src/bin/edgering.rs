//! Command-line front end for the shift-graph toolkit. Every verb prints
//! deterministic output on stdout; diagnostics go to stderr. Exit codes:
//! 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use edgering::cone::{self, AInvariantMode, ConeError, DEFAULT_DD_BUDGET};
use edgering::family::{self, GridParams};
use edgering::monomial::{grid_edge_ideal, grid_vars, Monomial, MonomialIdeal};
use edgering::poly::{self, PolyError, DEFAULT_SPAIR_BUDGET};
use edgering::registry;
use edgering::resolution::{betti_table, FieldChar, ResolutionError, DEFAULT_LATTICE_CAP};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: msg.into() }
    }
    fn verification(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_VERIFICATION, message: msg.into() }
    }
    fn budget(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_BUDGET, message: msg.into() }
    }
}

impl From<ResolutionError> for Failure {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::TooLarge { .. } => Failure::budget(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
            PolyError::IdentityFailure { .. } => Failure::verification(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<ConeError> for Failure {
    fn from(e: ConeError) -> Self {
        match e {
            ConeError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
            ConeError::BoundsMismatch { .. } | ConeError::CertificateInvalid(_) => {
                Failure::verification(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "edgering",
    about = "Exact toolkit for the bipartite shift graph of an m-by-n grid: \
             edge ideals, resolutions, Groebner bases, and edge-cone certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Grid {
    /// Number of rows (at least 2).
    #[arg(long)]
    m: usize,
    /// Number of columns (at least 2).
    #[arg(long)]
    n: usize,
}

impl Grid {
    fn params(&self) -> Result<GridParams, Failure> {
        if self.m < 2 || self.n < 2 {
            return Err(Failure::usage("both --m and --n must be at least 2"));
        }
        Ok(GridParams::new(self.m, self.n))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructObject {
    /// The shift graph H on the full grid.
    H,
    /// The column strip H_k on columns k, k+1.
    Hk,
    /// H with the two isolated corners removed.
    Hprime,
    /// The canonical maximum matching of H.
    Matching,
    /// The column-sign matrix annihilating the edge cone.
    MatrixA,
    /// The interior certificate vector (m >= 4).
    UHat,
    /// The three certificate subgraphs decomposing the vector (m >= 4).
    Subgraphs,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealObject {
    /// Minimal generators of the edge ideal I(H).
    Generators,
    /// Generators of I(H)^t.
    Power,
    /// Generators of the t-th symbolic power.
    Symbolic,
    /// Generators of I(H)^{t+1} : I(H).
    Colon,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConeObject {
    /// Facet inequalities and affine-hull equalities.
    Facets,
    /// Dimension of the edge cone.
    Dim,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Certificate,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a member of the graph family or a certificate object.
    Construct {
        object: ConstructObject,
        #[command(flatten)]
        grid: Grid,
        /// Strip index for hk (1-based, at most n-1).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print generators of the edge ideal or a derived ideal.
    Ideal {
        object: IdealObject,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "1")]
        t: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Graded Betti table of S/I(H)^t.
    Betti {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "1")]
        t: u32,
        /// Field characteristic (0 or a prime).
        #[arg(long, default_value = "0")]
        characteristic: u64,
        /// Cap on the lcm-lattice size.
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Castelnuovo-Mumford regularity of S/I(H)^t.
    Reg {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "1")]
        t: u32,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
    /// Depth of S/I(H)^t.
    Depth {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "1")]
        t: u32,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
    /// Maximum matching size of H.
    Match {
        #[command(flatten)]
        grid: Grid,
    },
    /// Validate the column-strip cochordal cover and print its size.
    Cochord {
        #[command(flatten)]
        grid: Grid,
    },
    /// List the chordless cycles of H.
    Chordless {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "24")]
        max_len: usize,
    },
    /// Reduced Groebner basis of the binomial edge ideal of (K_m, P_n).
    Groebner {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = DEFAULT_SPAIR_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Verify the five rewriting identities on the grid.
    SagbiIdentities {
        #[command(flatten)]
        grid: Grid,
    },
    /// Check ini(J^t) = (ini J)^t.
    IniPower {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = DEFAULT_SPAIR_BUDGET)]
        budget: usize,
    },
    /// Edge-cone data of H'.
    Cone {
        object: ConeObject,
        #[command(flatten)]
        grid: Grid,
        /// Cap on intermediate ray counts in the facet enumeration.
        #[arg(long, default_value_t = DEFAULT_DD_BUDGET)]
        budget: usize,
    },
    /// Negative a-invariant of the edge subring K[H].
    AInvariant {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "certificate")]
        mode: Mode,
    },
    /// Cross-check every applicable closed formula against its oracle.
    Verify {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "1")]
        t: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn render_ideal(ideal: &MonomialIdeal, format: Format) -> String {
    match format {
        Format::Json => ideal.to_json().to_string(),
        Format::Plain => {
            let mut lines: Vec<String> = ideal
                .gens()
                .iter()
                .map(|g| render_monomial(g, &ideal.vars))
                .collect();
            lines.push(String::new());
            lines.join("\n")
        }
    }
}

fn render_monomial(mono: &Monomial, vars: &[String]) -> String {
    let factors: Vec<String> = mono
        .exps
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                vars[k].clone()
            } else {
                format!("{}^{}", vars[k], e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn graph_output(g: &edgering::graph::Graph, format: Format) -> String {
    match format {
        Format::Plain => g.to_edge_list(),
        Format::Json => serde_json::json!({
            "vertices": g.labels(),
            "edges": g.edge_labels(),
        })
        .to_string(),
    }
}

fn matrix_output(mx: &family::IntMatrix, format: Format) -> String {
    match format {
        Format::Json => serde_json::json!(mx.entries).to_string(),
        Format::Plain => {
            let mut out = String::new();
            for row in &mx.entries {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Construct { object, grid, k, format } => {
            let p = grid.params()?;
            match object {
                ConstructObject::H => Ok(graph_output(&family::build_h(p), format)),
                ConstructObject::Hk => {
                    let k = k.ok_or_else(|| Failure::usage("hk requires --k"))?;
                    let g = family::build_hk(p, k).map_err(|e| Failure::usage(e.to_string()))?;
                    Ok(graph_output(&g, format))
                }
                ConstructObject::Hprime => Ok(graph_output(&family::build_hprime(p), format)),
                ConstructObject::Matching => {
                    let m = family::canonical_matching(p);
                    let h = family::build_h(p);
                    if !h.is_valid_matching(&m) {
                        return Err(Failure::verification("canonical matching invalid"));
                    }
                    let mut out = String::new();
                    for (a, b) in &m.edges {
                        out.push_str(&format!("{a} {b}\n"));
                    }
                    Ok(out)
                }
                ConstructObject::MatrixA => Ok(matrix_output(&family::matrix_a(p), format)),
                ConstructObject::UHat => {
                    let u = family::vector_u_hat(p).map_err(|e| Failure::usage(e.to_string()))?;
                    Ok(matrix_output(&u, format))
                }
                ConstructObject::Subgraphs => {
                    let subs =
                        family::u_type_subgraphs(p).map_err(|e| Failure::usage(e.to_string()))?;
                    let mut out = String::new();
                    for (idx, sub) in subs.iter().enumerate() {
                        out.push_str(&format!("# decomposition {}\n", idx + 1));
                        out.push_str(&graph_output(sub, format));
                    }
                    Ok(out)
                }
            }
        }
        Command::Ideal { object, grid, t, format } => {
            let p = grid.params()?;
            if t < 1 {
                return Err(Failure::usage("--t must be at least 1"));
            }
            let ideal = grid_edge_ideal(p);
            let result = match object {
                IdealObject::Generators => ideal,
                IdealObject::Power => ideal.power(t),
                IdealObject::Symbolic => ideal.symbolic_power(t).map_err(|e| match e {
                    edgering::monomial::MonomialError::PrimeCapExceeded(_) => {
                        Failure::budget(e.to_string())
                    }
                    _ => Failure::usage(e.to_string()),
                })?,
                IdealObject::Colon => {
                    let higher = ideal.power(t + 1);
                    higher.colon(&ideal)
                }
            };
            Ok(render_ideal(&result, format))
        }
        Command::Betti { grid, t, characteristic, cap, format } => {
            let p = grid.params()?;
            let field = match characteristic {
                0 => FieldChar::Zero,
                p if is_prime(p) => FieldChar::Prime(p),
                other => {
                    return Err(Failure::usage(format!(
                        "--characteristic must be 0 or a prime, got {other}"
                    )))
                }
            };
            let table = betti_table(&grid_edge_ideal(p).power(t), field, cap)?;
            Ok(match format {
                Format::Plain => table.to_csv(),
                Format::Json => table.to_json().to_string(),
            })
        }
        Command::Reg { grid, t, cap } => {
            let p = grid.params()?;
            let table = betti_table(&grid_edge_ideal(p).power(t), FieldChar::Zero, cap)?;
            Ok(format!("{}\n", table.regularity()))
        }
        Command::Depth { grid, t, cap } => {
            let p = grid.params()?;
            let table = betti_table(&grid_edge_ideal(p).power(t), FieldChar::Zero, cap)?;
            Ok(format!("{}\n", table.depth()))
        }
        Command::Match { grid } => {
            let p = grid.params()?;
            let h = family::build_h(p);
            let m = h.max_matching().map_err(|e| Failure::usage(e.to_string()))?;
            Ok(format!("{}\n", m.edges.len()))
        }
        Command::Cochord { grid } => {
            let p = grid.params()?;
            let cover =
                family::cochord_cover(p).map_err(|e| Failure::verification(e.to_string()))?;
            Ok(format!("{}\n", cover.len()))
        }
        Command::Chordless { grid, max_len } => {
            let p = grid.params()?;
            let h = family::build_h(p);
            let mut out = String::new();
            for cycle in h.chordless_cycles(max_len) {
                out.push_str(&cycle.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
        Command::Groebner { grid, budget, format } => {
            let p = grid.params()?;
            let j = poly::path_pair_ideal(p);
            let gb = poly::buchberger(&j, budget)?;
            eprintln!(
                "pairs processed: {}; skipped (coprime leads): {}; reduced to zero: {}",
                gb.pairs_processed, gb.pairs_skipped_coprime, gb.reductions_to_zero
            );
            let vars = grid_vars(p);
            Ok(match format {
                Format::Json => serde_json::json!(
                    gb.basis.iter().map(|g| g.to_json()).collect::<Vec<_>>()
                )
                .to_string(),
                Format::Plain => {
                    let mut out = String::new();
                    for g in &gb.basis {
                        out.push_str(&g.render(&vars));
                        out.push('\n');
                    }
                    out
                }
            })
        }
        Command::SagbiIdentities { grid } => {
            let p = grid.params()?;
            let report = poly::verify_sagbi_identities(p)?;
            let mut out = String::new();
            for (label, count) in &report.per_identity {
                out.push_str(&format!("{label}: {count} tuples verified\n"));
            }
            Ok(out)
        }
        Command::IniPower { grid, t, budget } => {
            let p = grid.params()?;
            if t < 1 {
                return Err(Failure::usage("--t must be at least 1"));
            }
            let ok = poly::ini_power_commutes(p, t, budget)?;
            if ok {
                Ok("true\n".into())
            } else {
                Err(Failure::verification("initial ideal of the power differs"))
            }
        }
        Command::Cone { object, grid, budget } => {
            let p = grid.params()?;
            let c = cone::edge_cone(p);
            match object {
                ConeObject::Dim => Ok(format!("{}\n", cone::cone_dimension(&c))),
                ConeObject::Facets => {
                    let fd = cone::facet_description(&c, budget)?;
                    Ok(format!("{}\n", fd.to_json()))
                }
            }
        }
        Command::AInvariant { grid, mode } => {
            let p = grid.params()?;
            let mode = match mode {
                Mode::Certificate => AInvariantMode::Certificate,
                Mode::Brute => AInvariantMode::BruteForce,
            };
            let v = cone::a_invariant(p, mode)?;
            Ok(format!("{v}\n"))
        }
        Command::Verify { grid, t, format } => {
            let p = grid.params()?;
            let report = registry::verify_all(&[(p.m, p.n, t)]);
            let text = match format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Plain => report.to_table(),
            };
            if report.all_agree() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::verification("one or more checks disagree"))
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
