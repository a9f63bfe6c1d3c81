use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use dihedral_bessel::cli::{
    cmd_eval, cmd_table, cmd_verify, parse_f64_list, parse_u32_list, OutputFormat, RunConfig,
    EXIT_DOMAIN,
};
use dihedral_bessel::series::Route;

/// Evaluate the dihedral Bessel series by independent routes and verify
/// the identities connecting them.
#[derive(Parser)]
#[command(name = "dihedral-bessel", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Args)]
struct GridArgs {
    /// Series orders, e.g. `2` or `1..5` or `2,4`
    #[arg(long)]
    n: Option<String>,

    /// Parameters k, e.g. `1` or `0.5,1,2`
    #[arg(long)]
    k: Option<String>,

    /// Arguments R, e.g. `1` or `0.5..5 step 0.5`
    #[arg(long = "R")]
    r: Option<String>,

    /// Angles xi in [0, pi]; accepts `pi` forms, e.g. `0..pi step pi/8`
    #[arg(long)]
    xi: Option<String>,

    /// Relative tolerance for series truncation
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,

    /// Hard cap on series terms / degree shells
    #[arg(long = "max-terms", default_value_t = 10_000)]
    max_terms: usize,

    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: String,

    /// Write records to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for the randomized verification samples
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Commands {
    /// Evaluate the series on a grid, one record per route, with a
    /// cross-route disagreement record per grid point
    Eval {
        #[command(flatten)]
        grid: GridArgs,

        /// Comma-separated routes: direct, closed_n1, closed_n2,
        /// integral_n4, horn_phi2 (default: all routes valid for n)
        #[arg(long, alias = "route")]
        routes: Option<String>,
    },

    /// Run an identity suite and report one row per case
    Verify {
        #[command(flatten)]
        grid: GridArgs,

        /// Suite: degrees | symmetric | product-formula | inversion |
        /// subset-products | monomial | neumann | moment | poisson |
        /// factorization | dimidiation | all
        #[arg(long, default_value = "all")]
        suite: String,

        /// Largest identity degree N for the degrees suite
        #[arg(long = "Nmax", default_value_t = 15)]
        n_max: u32,

        /// Largest polynomial degree for the polynomial suites
        #[arg(long = "jmax", default_value_t = 6)]
        j_max: u32,

        /// Inversion half-orders q for the inversion suite
        #[arg(long, default_value = "1..3")]
        q: String,
    },

    /// Emit a value table for a single route over the grid
    Table {
        #[command(flatten)]
        grid: GridArgs,

        /// The route to tabulate
        #[arg(long, alias = "route", default_value = "direct")]
        routes: String,
    },
}

fn build_config(grid: &GridArgs, err: &mut dyn Write) -> Result<RunConfig, i32> {
    let mut cfg = RunConfig {
        tol: grid.tol,
        max_terms: grid.max_terms,
        out: grid.out.clone(),
        seed: grid.seed,
        ..RunConfig::default()
    };
    let fail = |e: dihedral_bessel::Error, err: &mut dyn Write| {
        let _ = writeln!(err, "error: {e}");
        EXIT_DOMAIN
    };
    cfg.format = match grid.format.parse::<OutputFormat>() {
        Ok(f) => f,
        Err(e) => return Err(fail(e, err)),
    };
    if let Some(s) = &grid.n {
        cfg.ns = parse_u32_list(s).map_err(|e| fail(e, err))?;
    }
    if let Some(s) = &grid.k {
        cfg.ks = parse_f64_list(s).map_err(|e| fail(e, err))?;
    }
    if let Some(s) = &grid.r {
        cfg.rs = parse_f64_list(s).map_err(|e| fail(e, err))?;
    }
    if let Some(s) = &grid.xi {
        cfg.xis = parse_f64_list(s).map_err(|e| fail(e, err))?;
    }
    Ok(cfg)
}

fn parse_routes(spec: &str, err: &mut dyn Write) -> Result<Vec<Route>, i32> {
    let mut routes = Vec::new();
    for piece in spec.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        match piece.parse::<Route>() {
            Ok(r) => {
                if !routes.contains(&r) {
                    routes.push(r);
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return Err(EXIT_DOMAIN);
            }
        }
    }
    Ok(routes)
}

fn require_grid(cfg: &RunConfig, err: &mut dyn Write) -> Result<(), i32> {
    for (name, empty) in [
        ("--n", cfg.ns.is_empty()),
        ("--k", cfg.ks.is_empty()),
        ("--R", cfg.rs.is_empty()),
        ("--xi", cfg.xis.is_empty()),
    ] {
        if empty {
            let _ = writeln!(err, "error: {name} is required for this command");
            return Err(EXIT_DOMAIN);
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();

    let code = match &cli.command {
        Commands::Eval { grid, routes } => match build_config(grid, &mut err) {
            Ok(mut cfg) => {
                let selected = match routes {
                    Some(spec) => match parse_routes(spec, &mut err) {
                        Ok(r) => r,
                        Err(code) => std::process::exit(code),
                    },
                    None => Vec::new(),
                };
                if require_grid(&cfg, &mut err).is_err() {
                    std::process::exit(EXIT_DOMAIN);
                }
                cfg.routes = if selected.is_empty() {
                    // all routes applicable to every requested n
                    Route::ALL
                        .into_iter()
                        .filter(|r| cfg.ns.iter().all(|&n| r.applicable(n)))
                        .collect()
                } else {
                    selected
                };
                cmd_eval(&cfg, &mut out, &mut err)
            }
            Err(code) => code,
        },
        Commands::Verify {
            grid,
            suite,
            n_max,
            j_max,
            q,
        } => match build_config(grid, &mut err) {
            Ok(mut cfg) => {
                cfg.suite = Some(suite.clone());
                cfg.max_degree = *n_max;
                cfg.max_poly_degree = *j_max;
                match parse_u32_list(q) {
                    Ok(qs) => cfg.qs = qs,
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        std::process::exit(EXIT_DOMAIN);
                    }
                }
                cmd_verify(&cfg, &mut out, &mut err)
            }
            Err(code) => code,
        },
        Commands::Table { grid, routes } => match build_config(grid, &mut err) {
            Ok(mut cfg) => {
                match parse_routes(routes, &mut err) {
                    Ok(r) => cfg.routes = r,
                    Err(code) => std::process::exit(code),
                }
                if require_grid(&cfg, &mut err).is_err() {
                    std::process::exit(EXIT_DOMAIN);
                }
                cmd_table(&cfg, &mut out, &mut err)
            }
            Err(code) => code,
        },
    };
    drop(out);
    drop(err);
    std::process::exit(code);
}
