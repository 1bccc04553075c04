//! Subcommand implementations.

use crate::config::{RunConfig, HEAVY_LEVEL};
use crate::error::CliError;
use chernloc::csm::{
    omega1_local, projective_cone_class, scalar_cone_class, ConeClassSpec, Omega1Method,
};
use chernloc::grass::{
    gysin_schur, gysin_schur_poly, integrate, residue_integral, GysinValue, LocalClassTable,
};
use chernloc::poly::{coeff_from_string, parse_poly};
use chernloc::symm::{expand_schur, expand_two_alphabets, schur_polynomial, SchurTable};
use chernloc::{Coeff, LinearForm, MultiPoly, Partition};
use clap::Args;
use std::io::Write;
use std::path::PathBuf;

fn parse_grass(s: &str) -> Result<(usize, usize), CliError> {
    let (m, n) = s
        .split_once(',')
        .ok_or_else(|| CliError::Input(format!("expected m,n: {s:?}")))?;
    let m = m
        .trim()
        .parse()
        .map_err(|e| CliError::Input(format!("bad m: {e}")))?;
    let n = n
        .trim()
        .parse()
        .map_err(|e| CliError::Input(format!("bad n: {e}")))?;
    if m == 0 || m >= n {
        return Err(CliError::Input(format!("need 0 < m < n, got {m},{n}")));
    }
    Ok((m, n))
}

fn parse_vars(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| {
            let i: usize = x
                .trim()
                .parse()
                .map_err(|e| CliError::Input(format!("bad variable index {x:?}: {e}")))?;
            if i == 0 {
                return Err(CliError::Input("variable indices are one-based".into()));
            }
            Ok(i - 1)
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::parse(s).map_err(CliError::from)
}

/// Symmetric integrand templates shared by `integrate` and `residue`.
#[derive(Args)]
pub struct TemplateArgs {
    /// Power of the first Chern class of the dual determinant bundle.
    #[arg(long, conflicts_with_all = ["volume", "mono"])]
    pub power: Option<usize>,

    /// Integrate the top power: the degree of the Pluecker embedding.
    #[arg(long, conflicts_with = "mono")]
    pub volume: bool,

    /// Symmetrized monomial with the given exponent partition, e.g. "2,1".
    #[arg(long)]
    pub mono: Option<String>,
}

impl TemplateArgs {
    fn build(&self, m: usize, n: usize) -> Result<Option<MultiPoly>, CliError> {
        let dim = m * (n - m);
        if self.volume {
            return Ok(Some(chernloc::grass::c1_power_template(m, dim)));
        }
        if let Some(p) = self.power {
            return Ok(Some(chernloc::grass::c1_power_template(m, p)));
        }
        if let Some(mono) = &self.mono {
            let lambda = parse_partition(mono)?;
            let w = chernloc::symm::monomial_symmetric(m, &lambda)?;
            return Ok(Some(w));
        }
        Ok(None)
    }
}

fn print_poly(p: &MultiPoly, config: &RunConfig) {
    if config.json {
        println!("{}", p.to_json_string());
    } else {
        println!("{p}");
    }
}

#[derive(Args)]
pub struct IntegrateArgs {
    /// Ambient Grassmannian as m,n.
    #[arg(long)]
    pub grass: String,

    #[command(flatten)]
    pub template: TemplateArgs,

    /// Local class table file (JSON) to integrate directly.
    #[arg(long)]
    pub table: Option<PathBuf>,

    /// Inline JSON class table.
    #[arg(long)]
    pub table_json: Option<String>,
}

pub fn cmd_integrate(args: &IntegrateArgs, config: &RunConfig) -> Result<(), CliError> {
    let (m, n) = parse_grass(&args.grass)?;
    let total = if let Some(w) = args.template.build(m, n)? {
        chernloc::grass::integrate_symmetric(&w, m, n)?
    } else {
        let text = match (&args.table, &args.table_json) {
            (Some(path), None) => std::fs::read_to_string(path)?,
            (None, Some(s)) => s.clone(),
            _ => {
                return Err(CliError::Input(
                    "supply one of --power/--volume/--mono/--table/--table-json".into(),
                ))
            }
        };
        let table = LocalClassTable::from_json_str(&text)?;
        if table.m() != m || table.n() != n {
            return Err(CliError::Input(format!(
                "table is over Grass_{}(C^{}), not Grass_{m}(C^{n})",
                table.m(),
                table.n()
            )));
        }
        integrate(&table)?
    };
    print_poly(&total, config);
    Ok(())
}

#[derive(Args)]
pub struct SchurArgs {
    /// Partition, e.g. "2,1" (empty for the trivial one).
    #[arg(long, default_value = "")]
    pub partition: String,

    /// Number of ring variables.
    #[arg(long)]
    pub nvars: usize,

    /// One-based variable indices of the alphabet; all variables if absent.
    #[arg(long)]
    pub vars: Option<String>,

    /// Negate the alphabet.
    #[arg(long)]
    pub negate: bool,
}

pub fn cmd_schur(args: &SchurArgs, config: &RunConfig) -> Result<(), CliError> {
    let partition = parse_partition(&args.partition)?;
    let vars = match &args.vars {
        Some(s) => parse_vars(s)?,
        None => (0..args.nvars).collect(),
    };
    if vars.iter().any(|&v| v >= args.nvars) {
        return Err(CliError::Input("variable index out of range".into()));
    }
    let s = schur_polynomial(&partition, args.nvars, &vars, args.negate)?;
    print_poly(&s, config);
    Ok(())
}

fn read_poly_arg(
    poly: &Option<String>,
    file: &Option<PathBuf>,
    nvars: Option<usize>,
) -> Result<MultiPoly, CliError> {
    let text = match (poly, file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        _ => return Err(CliError::Input("supply exactly one of --poly/--poly-file".into())),
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(MultiPoly::from_json_str(trimmed)?)
    } else {
        let nv = nvars.ok_or_else(|| {
            CliError::Input("--nvars is required for text-form polynomials".into())
        })?;
        Ok(parse_poly(trimmed, nv)?)
    }
}

#[derive(Args)]
pub struct ExpandArgs {
    /// Inline polynomial (canonical text form or JSON).
    #[arg(long)]
    pub poly: Option<String>,

    /// Polynomial file (text form or JSON).
    #[arg(long)]
    pub poly_file: Option<PathBuf>,

    /// Ring size for text-form input.
    #[arg(long)]
    pub nvars: Option<usize>,

    /// First alphabet, one-based indices, e.g. "1,2".
    #[arg(long)]
    pub alphabet: String,

    /// Second alphabet for a two-alphabet expansion.
    #[arg(long)]
    pub alphabet2: Option<String>,

    /// Negate the first alphabet before expanding.
    #[arg(long)]
    pub negate_first: bool,
}

pub fn print_schur_table(table: &SchurTable, config: &RunConfig) {
    if config.json {
        println!("{}", table.to_json_string());
        return;
    }
    for ((i, j), c) in &table.entries {
        if table.alphabets.len() > 1 {
            println!("{i} x {j}: {}", chernloc::poly::coeff_to_string(c));
        } else {
            println!("{i}: {}", chernloc::poly::coeff_to_string(c));
        }
    }
}

pub fn cmd_expand(args: &ExpandArgs, config: &RunConfig) -> Result<(), CliError> {
    let p = read_poly_arg(&args.poly, &args.poly_file, args.nvars)?;
    let alpha = parse_vars(&args.alphabet)?;
    let table = match &args.alphabet2 {
        Some(beta) => {
            let beta = parse_vars(beta)?;
            expand_two_alphabets(&p, p.nvars(), &alpha, &beta, args.negate_first)?
        }
        None => {
            if args.negate_first {
                return Err(CliError::Input(
                    "--negate-first needs a two-alphabet expansion".into(),
                ));
            }
            expand_schur(&p, p.nvars(), &alpha)?
        }
    };
    print_schur_table(&table, config);
    Ok(())
}

#[derive(Args)]
pub struct GysinArgs {
    /// Ambient Grassmannian as m,n.
    #[arg(long)]
    pub grass: String,

    /// Partition for the quotient bundle.
    #[arg(long, default_value = "")]
    pub q: String,

    /// Partition for the tautological bundle.
    #[arg(long, default_value = "")]
    pub r: String,

    /// Cross-check against the direct localization sum.
    #[arg(long)]
    pub check: bool,
}

pub fn cmd_gysin(args: &GysinArgs, config: &RunConfig) -> Result<(), CliError> {
    let (m, n) = parse_grass(&args.grass)?;
    let j = parse_partition(&args.q)?;
    let k = parse_partition(&args.r)?;
    let value = gysin_schur(&j, &k, m, n)?;
    let poly = value.to_poly(n);
    if args.check {
        let direct = gysin_schur_poly(&j, &k, m, n)?;
        if direct != poly {
            return Err(CliError::Math(format!(
                "closed form {poly} disagrees with localization {direct}"
            )));
        }
    }
    if config.json {
        println!("{}", poly.to_json_string());
    } else {
        match &value {
            GysinValue::Zero => println!("0"),
            GysinValue::Signed { sign, partition } => {
                let lead = if *sign < 0 { "-" } else { "" };
                println!("{lead}S{partition} = {poly}");
            }
        }
    }
    Ok(())
}

#[derive(Args)]
pub struct ResidueArgs {
    /// Ambient Grassmannian as m,n.
    #[arg(long)]
    pub grass: String,

    #[command(flatten)]
    pub template: TemplateArgs,
}

pub fn cmd_residue(args: &ResidueArgs, config: &RunConfig) -> Result<(), CliError> {
    let (m, n) = parse_grass(&args.grass)?;
    let w = args
        .template
        .build(m, n)?
        .ok_or_else(|| CliError::Input("supply one of --power/--volume/--mono".into()))?;
    let total = residue_integral(&w, m, n)?;
    print_poly(&total, config);
    Ok(())
}

#[derive(Args)]
pub struct Omega1Args {
    /// Level: the variety lives in Grass_n(C^2n).
    #[arg(long)]
    pub n: usize,

    /// Recovery method: direct, gkm, or grouped.
    #[arg(long, default_value = "direct")]
    pub method: String,

    /// Output directory for the three artifacts.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub fn cmd_omega1(args: &Omega1Args, config: &RunConfig) -> Result<(), CliError> {
    if args.n >= HEAVY_LEVEL && !config.allow_heavy {
        return Err(CliError::Gate(format!(
            "level {} is a heavy run (hours of CPU, gigabytes of memory); pass --allow-heavy to proceed",
            args.n
        )));
    }
    let method: Omega1Method = args
        .method
        .parse()
        .map_err(CliError::Input)?;
    let mut cache = config.cache()?;
    std::fs::create_dir_all(&args.out)?;

    // Gated levels avoid materializing the table of all stratum classes
    // in memory: the class comes from the grouped nested sums and the
    // table streams to disk point by point.
    let class = if args.n >= HEAVY_LEVEL {
        chernloc::csm::omega1_class_only(args.n, &mut cache)?
    } else {
        omega1_local(args.n, method, &mut cache)?.class
    };

    let class_path = args.out.join(format!("f_{}.txt", args.n));
    let mut f = std::fs::File::create(&class_path)?;
    writeln!(f, "{class}")?;

    let table_path = args.out.join(format!("table_{}.json", args.n));
    {
        let f_table = chernloc::csm::omega1_levels(args.n, &mut cache)?;
        let file = std::fs::File::create(&table_path)?;
        let mut writer = std::io::BufWriter::new(file);
        chernloc::csm::omega1_stream_table_json(args.n, &f_table, &class, &mut writer)?;
        writer.flush()?;
    }

    let nv = 2 * args.n;
    let xvars: Vec<usize> = (0..args.n).collect();
    let vvars: Vec<usize> = (args.n..nv).collect();
    let schur = expand_two_alphabets(&class, nv, &xvars, &vvars, true)?;
    let schur_path = args.out.join(format!("schur_{}.json", args.n));
    std::fs::write(&schur_path, schur.to_json_string())?;

    if config.json {
        println!("{}", class.to_json_string());
    } else {
        let top = class.degree().unwrap_or(0);
        for d in 1..=top {
            let part = class.homogeneous_component(d);
            if !part.is_zero() {
                println!("deg={d}  {part}");
            }
        }
        println!("wrote {}", class_path.display());
        println!("wrote {}", table_path.display());
        println!("wrote {}", schur_path.display());
    }
    Ok(())
}

#[derive(Args)]
pub struct ConeArgs {
    /// Scalar action: projectivization coefficients a_0..a_(n-1), e.g. "0,4,-2".
    #[arg(long)]
    pub coeffs: Option<String>,

    /// Scalar action shortcut: a cone over a degree-d genus-g plane curve, "d,g".
    #[arg(long, conflicts_with = "coeffs")]
    pub plane_curve: Option<String>,

    /// General torus: semicolon-separated weight forms, e.g. "t1;t2;t1+t2".
    #[arg(long, requires = "b0", conflicts_with_all = ["coeffs", "plane_curve"])]
    pub weights: Option<String>,

    /// Coefficient of h^0 of the projectivization's class (text or JSON).
    #[arg(long)]
    pub b0: Option<String>,

    /// Ring size for text-form weights and b0.
    #[arg(long)]
    pub nvars: Option<usize>,
}

fn parse_linear_form(s: &str, nvars: usize) -> Result<LinearForm, CliError> {
    let p = parse_poly(s, nvars)?;
    let mut coeffs = vec![0i64; nvars];
    for (mono, c) in p.terms() {
        if mono.degree() != 1 {
            return Err(CliError::Input(format!("{s:?} is not a linear form")));
        }
        let var = mono
            .exponents()
            .iter()
            .position(|&e| e == 1)
            .expect("degree-one monomial");
        if *c.denom() != chernloc::BigInt::from(1) {
            return Err(CliError::Input(format!("{s:?} has non-integer coefficients")));
        }
        coeffs[var] = i64::try_from(c.numer().clone())
            .map_err(|_| CliError::Input("coefficient out of range".into()))?;
    }
    LinearForm::new(coeffs).map_err(CliError::from)
}

pub fn cmd_cone(args: &ConeArgs, config: &RunConfig) -> Result<(), CliError> {
    if let Some(coeffs) = &args.coeffs {
        let a: Result<Vec<Coeff>, CliError> = coeffs
            .split(',')
            .map(|x| coeff_from_string(x.trim()).map_err(CliError::from))
            .collect();
        let class = scalar_cone_class(&a?);
        print_poly(&class, config);
        return Ok(());
    }
    if let Some(dg) = &args.plane_curve {
        let (d, g) = dg
            .split_once(',')
            .ok_or_else(|| CliError::Input("expected d,g".into()))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|e| CliError::Input(format!("bad degree: {e}")))?;
        let g: i64 = g
            .trim()
            .parse()
            .map_err(|e| CliError::Input(format!("bad genus: {e}")))?;
        let a = vec![
            Coeff::from_integer(0.into()),
            Coeff::from_integer(d.into()),
            Coeff::from_integer((2 - 2 * g).into()),
        ];
        let class = scalar_cone_class(&a);
        print_poly(&class, config);
        return Ok(());
    }
    if let Some(weights) = &args.weights {
        let nv = args
            .nvars
            .ok_or_else(|| CliError::Input("--nvars is required with --weights".into()))?;
        let forms: Result<Vec<LinearForm>, CliError> = weights
            .split(';')
            .map(|w| parse_linear_form(w.trim(), nv))
            .collect();
        let b0 = read_poly_arg(&args.b0, &None, Some(nv))?;
        let spec = ConeClassSpec {
            weights: forms?,
            b0,
        };
        let class = projective_cone_class(&spec)?;
        print_poly(&class, config);
        return Ok(());
    }
    Err(CliError::Input(
        "supply --coeffs, --plane-curve, or --weights with --b0".into(),
    ))
}

#[derive(Args)]
pub struct PositivityArgs {
    /// Inline class polynomial (text or JSON).
    #[arg(long)]
    pub class: Option<String>,

    /// Class polynomial file.
    #[arg(long)]
    pub class_file: Option<PathBuf>,

    /// Ring size for text-form input.
    #[arg(long)]
    pub nvars: Option<usize>,

    /// Spanning tree edge list, e.g. "1>2,2>4,4>3".
    #[arg(long)]
    pub tree: String,
}

pub fn cmd_positivity(args: &PositivityArgs, _config: &RunConfig) -> Result<(), CliError> {
    let p = read_poly_arg(&args.class, &args.class_file, args.nvars)?;
    let tree = chernloc::positivity::TreeBasis::parse(&args.tree, p.nvars())?;
    let rewritten = chernloc::positivity::change_basis(&p, &tree)?;
    let report = chernloc::positivity::check_nonneg(&rewritten);
    if report.nonnegative {
        println!("PASS: all {} coefficients nonnegative", rewritten.num_terms());
    } else {
        println!(
            "FAIL: {} negative coefficient(s)",
            report.negative_terms.len()
        );
        for (term, _) in &report.negative_terms {
            println!("  {term}");
        }
    }
    Ok(())
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suites to run; all quick suites when empty.
    pub suites: Vec<String>,

    /// List available suites.
    #[arg(long)]
    pub list: bool,

    /// Run every suite, including the gated heavy ones.
    #[arg(long)]
    pub all: bool,
}

pub fn cmd_verify(args: &VerifyArgs, config: &RunConfig) -> Result<(), CliError> {
    crate::verify::run(args, config)
}
