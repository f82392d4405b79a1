//! Command-line front end: `table1`, `scan`, `verify`, `energy`, `state`.
//!
//! Output conventions: every produced file (or stream) starts with a comment
//! header recording the version, physical constants, quadrature orders, seed
//! and the exact command line, so identical configurations give byte-identical
//! output. Numbers are printed with 12 significant digits.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::table1_report;
use crate::dirac::{Axis, PhysicalConstants};
use crate::expectation::z_scan;
use crate::grid::GridConfig;
use crate::hydrogen::{
    assemble_momentum_spinor, ground_state_grid, sommerfeld_energy, GroundStateSpec, Orientation,
    QuantumNumbers, RadialFunctions,
};
use crate::spin_ops::SpinKind;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "relspin",
    version,
    about = "Relativistic spin operators and their expectation values on hydrogen-like ground states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

/// Options shared by every subcommand; recorded in each output header.
#[derive(Debug, Clone, Args)]
pub struct CommonOpts {
    /// Override the fine-structure constant.
    #[arg(long)]
    pub alpha_el: Option<f64>,

    /// Radial quadrature order per log panel.
    #[arg(long, default_value_t = 32)]
    pub radial_order: usize,

    /// Angular quadrature order (polar nodes and azimuthal points).
    #[arg(long, default_value_t = 8)]
    pub angular_order: usize,

    /// Seed for every randomized sweep.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format where both are supported.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check commutation, algebra, spectrum and covariance for all families.
    Table1 {
        /// Number of sampled momenta.
        #[arg(long, default_value_t = 1200)]
        samples: usize,

        /// Defect below which a property counts as satisfied.
        #[arg(long)]
        yes_tolerance: Option<f64>,

        #[command(flatten)]
        common: CommonOpts,
    },

    /// Scan ground-state spin expectations over atomic numbers (CSV).
    Scan {
        /// Comma-separated family names, or `all`.
        #[arg(long, default_value = "all")]
        kinds: String,

        #[arg(long, default_value_t = 1)]
        z_min: u32,

        #[arg(long, default_value_t = 137)]
        z_max: u32,

        /// Measured component, 1..3.
        #[arg(long, default_value_t = 3)]
        axis: u8,

        #[command(flatten)]
        common: CommonOpts,
    },

    /// Run the bundled invariant suite.
    Verify {
        /// Number of sampled momenta for the property sweep.
        #[arg(long, default_value_t = 1000)]
        samples: usize,

        /// Fault-injection hook used by the test suite.
        #[arg(long, hide = true)]
        inject_beta_fault: bool,

        #[command(flatten)]
        common: CommonOpts,
    },

    /// Print a Dirac-Coulomb bound energy.
    Energy {
        /// Principal quantum number.
        #[arg(long)]
        n: u32,

        /// Total angular momentum (half-odd-integer, e.g. 0.5).
        #[arg(long)]
        j: f64,

        #[arg(long)]
        z: u32,

        #[command(flatten)]
        common: CommonOpts,
    },

    /// Dump the momentum-space radial profile of a ground state.
    State {
        #[arg(long)]
        z: u32,

        /// Spin projection: up or down.
        #[arg(long, default_value = "up")]
        orientation: String,

        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Parse argv and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let command_line = argv
        .iter()
        .map(|s| s.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(argv.iter()) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, &command_line) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, command_line: &str) -> Result<i32, String> {
    match cli.command {
        Command::Table1 {
            samples,
            yes_tolerance,
            common,
        } => cmd_table1(samples, yes_tolerance, &common, command_line),
        Command::Scan {
            kinds,
            z_min,
            z_max,
            axis,
            common,
        } => cmd_scan(&kinds, z_min, z_max, axis, &common, command_line),
        Command::Verify {
            samples,
            inject_beta_fault,
            common,
        } => cmd_verify(samples, inject_beta_fault, &common, command_line),
        Command::Energy { n, j, z, common } => cmd_energy(n, j, z, &common, command_line),
        Command::State {
            z,
            orientation,
            common,
        } => cmd_state(z, &orientation, &common, command_line),
    }
}

fn constants_from(common: &CommonOpts) -> Result<PhysicalConstants, String> {
    match common.alpha_el {
        Some(alpha) => PhysicalConstants::from_alpha(alpha).map_err(|e| e.to_string()),
        None => Ok(PhysicalConstants::default()),
    }
}

fn grid_from(common: &CommonOpts) -> Result<GridConfig, String> {
    let config = GridConfig {
        radial_order: common.radial_order,
        angular_order: common.angular_order,
    };
    config.validate().map_err(|e| e.to_string())?;
    Ok(config)
}

/// 12 significant digits.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn header(common: &CommonOpts, consts: &PhysicalConstants, command_line: &str) -> String {
    let mut h = String::new();
    let _ = writeln!(h, "# relspin {}", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(h, "# command: {command_line}");
    let _ = writeln!(h, "# alpha_el = {}", sig12(consts.alpha_el));
    let _ = writeln!(
        h,
        "# radial_order = {}, angular_order = {}",
        common.radial_order, common.angular_order
    );
    let _ = writeln!(h, "# seed = {}", common.seed);
    h
}

fn emit(common: &CommonOpts, content: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("failed to write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_table1(
    samples: usize,
    yes_tolerance: Option<f64>,
    common: &CommonOpts,
    command_line: &str,
) -> Result<i32, String> {
    if samples == 0 {
        return Err("samples must be at least 1".into());
    }
    let consts = constants_from(common)?;
    let mut reports = table1_report(samples, common.seed, &consts).map_err(|e| e.to_string())?;
    if let Some(tol) = yes_tolerance {
        if !tol.is_finite() || tol <= 0.0 {
            return Err("yes-tolerance must be positive".into());
        }
        for r in &mut reports {
            r.commutes_with_h0 = r.h0_defect <= tol;
            r.algebra_holds = r.algebra_defect <= tol;
            r.eigenvalues_half = r.eigenvalue_deviation <= tol;
            r.covariance_holds = r.covariance_defect <= tol;
            r.yes_tolerance = tol;
        }
    }

    let mut body = String::new();
    match common.format {
        OutputFormat::Csv => {
            let _ = writeln!(
                body,
                "kind,commutes_with_h0,h0_defect,algebra_holds,algebra_defect,eigenvalues_half,eigenvalue_deviation,covariance_holds,covariance_defect,samples,seed"
            );
            for r in &reports {
                let _ = writeln!(
                    body,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.kind,
                    yes_no(r.commutes_with_h0),
                    sig12(r.h0_defect),
                    yes_no(r.algebra_holds),
                    sig12(r.algebra_defect),
                    yes_no(r.eigenvalues_half),
                    sig12(r.eigenvalue_deviation),
                    yes_no(r.covariance_holds),
                    sig12(r.covariance_defect),
                    r.samples,
                    r.seed
                );
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(
                body,
                "{:<18} {:>10} {:>10} {:>12} {:>11}   defects (H0, algebra, eigen, covariance)",
                "family", "[H0,S]=0?", "algebra?", "eigen +-1/2?", "covariance?"
            );
            for r in &reports {
                let _ = writeln!(
                    body,
                    "{:<18} {:>10} {:>10} {:>12} {:>11}   {} {} {} {}",
                    r.kind.to_string(),
                    yes_no(r.commutes_with_h0),
                    yes_no(r.algebra_holds),
                    yes_no(r.eigenvalues_half),
                    yes_no(r.covariance_holds),
                    sig12(r.h0_defect),
                    sig12(r.algebra_defect),
                    sig12(r.eigenvalue_deviation),
                    sig12(r.covariance_defect)
                );
            }
        }
    }

    let matches = reports.iter().all(|r| r.matches_reference());
    let _ = writeln!(
        body,
        "# reference pattern {}",
        if matches { "matched" } else { "NOT matched" }
    );

    let content = header(common, &consts, command_line) + &body;
    emit(common, &content)?;
    Ok(if matches {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILURE
    })
}

fn parse_kinds(spec: &str) -> Result<Vec<SpinKind>, String> {
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Err("kind set must not be empty".into());
    }
    if trimmed.eq_ignore_ascii_case("all") {
        return Ok(SpinKind::ALL.to_vec());
    }
    let mut kinds = Vec::new();
    for name in trimmed.split(',') {
        let name = name.trim();
        if name.is_empty() {
            return Err("kind set contains an empty entry".into());
        }
        let kind = SpinKind::parse(name).ok_or_else(|| format!("unknown spin kind `{name}`"))?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn cmd_scan(
    kinds_spec: &str,
    z_min: u32,
    z_max: u32,
    axis: u8,
    common: &CommonOpts,
    command_line: &str,
) -> Result<i32, String> {
    let kinds = parse_kinds(kinds_spec)?;
    if z_min < 1 || z_max > crate::hydrogen::Z_MAX || z_min > z_max {
        return Err(format!(
            "invalid range: need 1 <= z-min <= z-max <= {}",
            crate::hydrogen::Z_MAX
        ));
    }
    let axis = Axis::try_from(axis).map_err(|e| e.to_string())?;
    let consts = constants_from(common)?;
    let grid = grid_from(common)?;
    let zs: Vec<u32> = (z_min..=z_max).collect();
    let rows = z_scan(&kinds, &zs, axis, grid, &consts).map_err(|e| e.to_string())?;

    let mut body = String::from("kind,Z,axis,value,variance,error_estimate\n");
    for row in &rows {
        let _ = writeln!(
            body,
            "{},{},{},{},{},{}",
            row.kind,
            row.z,
            row.axis,
            sig12(row.value),
            sig12(row.variance),
            sig12(row.quadrature_error_estimate)
        );
    }
    let content = header(common, &consts, command_line) + &body;
    emit(common, &content)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    samples: usize,
    inject_beta_fault: bool,
    common: &CommonOpts,
    command_line: &str,
) -> Result<i32, String> {
    let consts = constants_from(common)?;
    let grid = grid_from(common)?;
    let outcomes = verify::run(&VerifyConfig {
        seed: common.seed,
        table1_samples: samples.max(1),
        grid,
        consts,
        corrupt_beta: inject_beta_fault,
    });
    let mut body = String::new();
    for o in &outcomes {
        let _ = writeln!(
            body,
            "{} {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    let all = verify::all_passed(&outcomes);
    let _ = writeln!(
        body,
        "# {}",
        if all {
            "all groups passed"
        } else {
            "FAILURES present"
        }
    );
    let content = header(common, &consts, command_line) + &body;
    emit(common, &content)?;
    Ok(if all {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILURE
    })
}

fn cmd_energy(
    n: u32,
    j: f64,
    z: u32,
    common: &CommonOpts,
    command_line: &str,
) -> Result<i32, String> {
    let consts = constants_from(common)?;
    // m is not part of the energy; pick the lowest sector for validation
    let q = QuantumNumbers::new(n, j, 0.5, -((j + 0.5) as i32)).map_err(|e| e.to_string())?;
    let energy = sommerfeld_energy(&q, z, &consts).map_err(|e| e.to_string())?;
    let rest = consts.rest_energy();

    let mut body = String::new();
    match common.format {
        OutputFormat::Csv => {
            let _ = writeln!(body, "n,j,Z,energy_over_rest_energy,energy_au,binding_au");
            let _ = writeln!(
                body,
                "{},{},{},{},{},{}",
                n,
                j,
                z,
                sig12(energy / rest),
                sig12(energy),
                sig12(energy - rest)
            );
        }
        OutputFormat::Text => {
            let _ = writeln!(body, "E(n={n}, j={j}, Z={z})");
            let _ = writeln!(body, "  in rest energies: {}", sig12(energy / rest));
            let _ = writeln!(body, "  in atomic units:  {}", sig12(energy));
            let _ = writeln!(body, "  binding (au):     {}", sig12(energy - rest));
        }
    }
    let content = header(common, &consts, command_line) + &body;
    emit(common, &content)?;
    Ok(EXIT_OK)
}

fn cmd_state(
    z: u32,
    orientation: &str,
    common: &CommonOpts,
    command_line: &str,
) -> Result<i32, String> {
    let orientation = Orientation::parse(orientation)
        .ok_or_else(|| format!("unknown orientation `{orientation}`"))?;
    let consts = constants_from(common)?;
    let grid_config = grid_from(common)?;

    let spec = GroundStateSpec::new(z, orientation, &consts).map_err(|e| e.to_string())?;
    let radial = RadialFunctions::for_ground_state(z, &consts).map_err(|e| e.to_string())?;
    let grid = std::sync::Arc::new(
        ground_state_grid(&radial, grid_config, &consts).map_err(|e| e.to_string())?,
    );
    let field = assemble_momentum_spinor(&spec, &radial, &grid);

    let momentum_norm: f64 = grid
        .radial_nodes()
        .iter()
        .zip(grid.radial_weights().iter())
        .map(|(&p, &w)| {
            let g = radial.g_momentum(p);
            let f = radial.f_momentum(p);
            w * (g * g + f * f)
        })
        .sum();

    let mut body = String::new();
    let _ = writeln!(body, "# Z = {z}, orientation = {orientation}");
    let _ = writeln!(body, "# gamma = {}", sig12(spec.gamma));
    let _ = writeln!(body, "# energy_au = {}", sig12(spec.energy));
    let _ = writeln!(body, "# momentum_norm = {}", sig12(momentum_norm));
    let _ = writeln!(body, "# field_norm = {}", sig12(field.norm()));
    let _ = writeln!(
        body,
        "# grid: p in [{}, {}], tail bound {}",
        sig12(grid.p_min),
        sig12(grid.p_max),
        sig12(grid.tail_bound)
    );
    let _ = writeln!(body, "# weights carry the p^2 measure");
    let sep = match common.format {
        OutputFormat::Csv => ",",
        OutputFormat::Text => " ",
    };
    let _ = writeln!(body, "node{sep}weight{sep}g_momentum{sep}f_momentum");
    for (&p, &w) in grid.radial_nodes().iter().zip(grid.radial_weights().iter()) {
        let _ = writeln!(
            body,
            "{}{sep}{}{sep}{}{sep}{}",
            sig12(p),
            sig12(w),
            sig12(radial.g_momentum(p)),
            sig12(radial.f_momentum(p))
        );
    }
    let content = header(common, &consts, command_line) + &body;
    emit(common, &content)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing() {
        assert_eq!(parse_kinds("all").unwrap().len(), 6);
        assert_eq!(
            parse_kinds("pryce,fw").unwrap(),
            vec![SpinKind::Pryce, SpinKind::FoldyWouthuysen]
        );
        assert!(parse_kinds("").is_err());
        assert!(parse_kinds("pauli,,pryce").is_err());
        assert!(parse_kinds("bogus").is_err());
    }

    #[test]
    fn sig12_has_12_significant_digits() {
        assert_eq!(sig12(0.5), "5.00000000000e-1");
        assert_eq!(sig12(1.0 / 3.0), "3.33333333333e-1");
    }
}
