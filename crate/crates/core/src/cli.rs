//! Command-line surface. Every subcommand builds a serializable report; the
//! binary only parses arguments, picks the thread count and writes output.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::certify::{
    certify_ifs, classify, diameter_evidence, shape, verify_theorem, SearchParams, Shape, Verdict, MAX_VERIFY_DIM,
    REPORT_SCHEMA_VERSION,
};
use crate::error::{Error, Result};
use crate::ifs::{
    example5, expand, farey_variant, is_continuous, orientation, pair_from_perms, pi_approx, FareyVariant, Ifs,
    Orientation, SplitPair, Word,
};
use crate::linalg::{char_poly, parse_rational, SimplexPoint};
use crate::render::{self, Style};
use crate::symmetry::{canonical_split_pair, enumerate_orbits, Permutation, DEFAULT_MAX_ORBIT_DIM};

pub const THREADS_ENV: &str = "SIMPLEX_SPLIT_THREADS";

/// Exit status when `verify` finishes but the survivors differ from the Farey orbits.
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_ERROR: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "simplex-split",
    version,
    about = "Two-map simplex-splitting continued fraction algorithms"
)]
pub struct Cli {
    /// Output format; `render` defaults to svg, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of symmetry classes of permutation pairs.
    CountOrbits {
        #[arg(long)]
        n: usize,
    },
    /// Certify every non-Farey class and collect evidence for the survivors.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Digit expansion of an exact point, with the cylinder that brackets it.
    Expand {
        #[command(flatten)]
        target: TargetArgs,
        /// Comma-separated fractions summing to 1, e.g. `1/3,1/3,1/3`.
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// SVG picture of a 2-dimensional system.
    Render {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = RenderMode::Partition)]
        mode: RenderMode,
        /// Word length of the drawn cylinders.
        #[arg(long, default_value_t = 5)]
        depth: usize,
        /// Longest word whose attracting point is plotted in `cloud` mode.
        #[arg(long, default_value_t = 8)]
        max_word_len: usize,
        #[arg(long, default_value_t = 0.5)]
        stroke_width: f64,
        /// Comma-separated fill colors, one per first digit.
        #[arg(long)]
        palette: Option<String>,
    },
    /// Characteristic polynomials of both branches.
    Charpoly {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Shape, orientation, continuity and verdict for one system.
    Classify {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Largest cylinder diameter at each depth.
    Diameters {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderMode {
    Partition,
    Cloud,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// `mono`, `op`, `or`, `example5` or `perms=P0;P1` with one-line
    /// permutations such as `perms=[1,2,0];[2,1,0]`.
    #[arg(long, default_value = "mono")]
    pub variant: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Certificate word bound; defaults to 2(n+1).
    #[arg(long)]
    pub max_word_len: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub depth: usize,
    /// Exact fraction, e.g. `1/16`.
    #[arg(long, default_value = "1/16")]
    pub epsilon: String,
}

impl SearchArgs {
    fn params(&self, dim: usize) -> Result<SearchParams> {
        let mut p = SearchParams::defaults(dim);
        if let Some(b) = self.max_word_len {
            p.max_word_len = b;
        }
        p.depth = self.depth;
        p.epsilon = parse_rational(&self.epsilon)?;
        if p.max_word_len == 0 || p.depth == 0 {
            return Err(Error::Parse("--max-word-len and --depth must be positive".into()));
        }
        if p.epsilon <= BigRational::from_integer(0.into()) {
            return Err(Error::Parse("--epsilon must be positive".into()));
        }
        Ok(p)
    }
}

/// A named system: a Farey variant, an explicit permutation pair, or the
/// three-branch example.
#[derive(Debug, Clone)]
pub enum Variant {
    Farey(FareyVariant),
    Perms(Permutation, Permutation),
    Example5,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "mono" => Ok(Variant::Farey(FareyVariant::Monkemeyer)),
            "op" => Ok(Variant::Farey(FareyVariant::OrientationPreserving)),
            "or" => Ok(Variant::Farey(FareyVariant::OrientationReversing)),
            "example5" => Ok(Variant::Example5),
            other => {
                let body = other
                    .strip_prefix("perms=")
                    .ok_or_else(|| Error::Parse(format!("unknown variant {other:?}")))?;
                let (a, b) = body
                    .split_once(';')
                    .ok_or_else(|| Error::Parse("perms= expects P0;P1".into()))?;
                Ok(Variant::Perms(a.parse()?, b.parse()?))
            }
        }
    }
}

/// The resolved system behind `--variant`.
pub struct Target {
    pub label: String,
    pub ifs: Ifs,
    pub pair: Option<SplitPair>,
}

impl Target {
    pub fn resolve(n: usize, variant: &str) -> Result<Self> {
        let v: Variant = variant.parse()?;
        let pair = match v {
            Variant::Example5 => {
                return Ok(Self {
                    label: "example5".into(),
                    ifs: example5(),
                    pair: None,
                })
            }
            Variant::Farey(f) => farey_variant(n, f)?,
            Variant::Perms(p0, p1) => {
                if p0.size() != n + 1 {
                    return Err(Error::Dimension {
                        n,
                        reason: "permutation length must be n+1",
                    });
                }
                pair_from_perms(n, p0, p1)?
            }
        };
        Ok(Self {
            label: variant.trim().to_string(),
            ifs: pair.ifs(),
            pair: Some(pair),
        })
    }
}

/// Result of one subcommand: the rendered output and whether the run counts
/// as a success.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub body: String,
    pub success: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            EXIT_MISMATCH
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CountReport {
    pub schema_version: u32,
    pub n: usize,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct ExpandReport {
    pub schema_version: u32,
    pub variant: String,
    pub n: usize,
    pub point: SimplexPoint,
    pub steps: usize,
    pub digits: Word,
    pub bracket: crate::ifs::Bracket,
    pub bracket_contains_point: bool,
}

#[derive(Debug, Serialize)]
pub struct CharpolyReport {
    pub schema_version: u32,
    pub variant: String,
    pub n: usize,
    /// One polynomial per branch, in digit order.
    pub branches: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub variant: String,
    pub n: usize,
    pub branches: Vec<crate::linalg::IntMatrix>,
    pub canonical_pair: Option<crate::certify::CanonicalPair>,
    pub orientation: Vec<Orientation>,
    pub continuous: Option<bool>,
    pub shape: Option<Shape>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub parameters: SearchParams,
}

#[derive(Debug, Serialize)]
pub struct DiameterReport {
    pub schema_version: u32,
    pub variant: String,
    pub n: usize,
    pub depth: usize,
    #[serde(serialize_with = "crate::ser::rationals")]
    pub profile: Vec<BigRational>,
    pub profile_approx: Vec<f64>,
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn reject_svg(format: Format) -> Result<()> {
    if format == Format::Svg {
        return Err(Error::Parse("svg output is only available for render".into()));
    }
    Ok(())
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Render { .. } => Format::Svg,
        _ => Format::Json,
    });
    let ok = |body: String| Outcome { body, success: true };
    match &cli.command {
        Command::CountOrbits { n } => {
            reject_svg(format)?;
            let report = enumerate_orbits(*n, DEFAULT_MAX_ORBIT_DIM)?;
            let r = CountReport {
                schema_version: REPORT_SCHEMA_VERSION,
                n: *n,
                count: report.orbit_count,
            };
            Ok(ok(match format {
                Format::Text => format!("{}\n", r.count),
                _ => json(&r)?,
            }))
        }
        Command::Verify { n, search } => {
            reject_svg(format)?;
            if *n > MAX_VERIFY_DIM {
                return Err(Error::ResourceLimit(format!(
                    "verify is capped at n ≤ {MAX_VERIFY_DIM}"
                )));
            }
            let report = verify_theorem(*n, &search.params(*n)?)?;
            let body = match format {
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "n = {}: {} orbits", report.n, report.orbit_count);
                    let _ = writeln!(
                        s,
                        "certified {} (reverified {}, failed {}), longest word {}",
                        report.certified.len(),
                        report.reverification_passed,
                        report.reverification_failed,
                        report.longest_certificate_word
                    );
                    for (k, c) in &report.certificate_kinds {
                        let _ = writeln!(s, "  {k}: {c}");
                    }
                    for sv in &report.survivors {
                        let _ = writeln!(
                            s,
                            "survivor {} {}  farey={}  final diameter {}",
                            sv.canonical_pair.p0,
                            sv.canonical_pair.p1,
                            sv.is_farey,
                            sv.diameter_profile.last().expect("nonempty")
                        );
                    }
                    let _ = writeln!(s, "survivors match Farey orbits: {}", report.survivors_match_farey);
                    s
                }
                _ => json(&report)?,
            };
            Ok(Outcome {
                body,
                success: report.survivors_match_farey,
            })
        }
        Command::Expand { target, point, steps } => {
            reject_svg(format)?;
            let t = Target::resolve(target.n, &target.variant)?;
            let x: SimplexPoint = point.parse()?;
            if x.dim() != t.ifs.dim() {
                return Err(Error::Dimension {
                    n: x.dim(),
                    reason: "point dimension differs from the system",
                });
            }
            let digits = expand(&t.ifs, &x, *steps)?;
            let bracket = pi_approx(&t.ifs, &digits)?;
            let r = ExpandReport {
                schema_version: REPORT_SCHEMA_VERSION,
                variant: t.label,
                n: t.ifs.dim(),
                bracket_contains_point: bracket.contains(&x),
                point: x,
                steps: *steps,
                digits,
                bracket,
            };
            Ok(ok(match format {
                Format::Text => {
                    let verts: Vec<String> = r.bracket.vertices.iter().map(|v| v.to_string()).collect();
                    format!(
                        "digits {}\nbracket {}\ndiameter {}\n",
                        r.digits,
                        verts.join(" "),
                        r.bracket.diameter
                    )
                }
                _ => json(&r)?,
            }))
        }
        Command::Render {
            target,
            mode,
            depth,
            max_word_len,
            stroke_width,
            palette,
        } => {
            if format != Format::Svg {
                return Err(Error::Parse("render only produces svg".into()));
            }
            let t = Target::resolve(target.n, &target.variant)?;
            let mut style = Style {
                stroke_width: *stroke_width,
                ..Style::default()
            };
            if let Some(p) = palette {
                style.palette = p.split(',').map(|c| c.trim().to_string()).collect();
                if style.palette.iter().any(String::is_empty) {
                    return Err(Error::Parse("empty color in --palette".into()));
                }
            }
            let svg = match mode {
                RenderMode::Partition => render::partition_svg(&t.ifs, *depth, &style)?,
                RenderMode::Cloud => {
                    render::fixed_point_cloud_svg(&t.ifs, *max_word_len, render::DEFAULT_PROXIMALITY_MARGIN, &style)?
                }
            };
            Ok(ok(svg))
        }
        Command::Charpoly { target } => {
            reject_svg(format)?;
            let t = Target::resolve(target.n, &target.variant)?;
            let r = CharpolyReport {
                schema_version: REPORT_SCHEMA_VERSION,
                n: t.ifs.dim(),
                variant: t.label,
                branches: t.ifs.branches().iter().map(|a| char_poly(a).to_string()).collect(),
            };
            Ok(ok(match format {
                Format::Text => r
                    .branches
                    .iter()
                    .enumerate()
                    .map(|(d, p)| format!("branch {d}: {p}\n"))
                    .collect(),
                _ => json(&r)?,
            }))
        }
        Command::Classify { target, search } => {
            reject_svg(format)?;
            let t = Target::resolve(target.n, &target.variant)?;
            let params = search.params(t.ifs.dim())?;
            let verdict = match &t.pair {
                Some(pair) => classify(pair, &params)?,
                None => match certify_ifs(&t.ifs, params.max_word_len) {
                    Some(certificate) => Verdict::NonContractive { certificate },
                    None => {
                        let diameter_profile = diameter_evidence(&t.ifs, params.depth)?;
                        if *diameter_profile.last().expect("nonempty") < params.epsilon {
                            Verdict::ContractiveEvidence { diameter_profile }
                        } else {
                            Verdict::Unknown { diameter_profile }
                        }
                    }
                },
            };
            let r = ClassifyReport {
                schema_version: REPORT_SCHEMA_VERSION,
                n: t.ifs.dim(),
                branches: t.ifs.branches().to_vec(),
                canonical_pair: t.pair.as_ref().map(|p| (&canonical_split_pair(p)).into()),
                orientation: match &t.pair {
                    Some(p) => {
                        let (a, b) = orientation(p);
                        vec![a, b]
                    }
                    None => t
                        .ifs
                        .branches()
                        .iter()
                        .map(|a| {
                            if a.det() > 0.into() {
                                Orientation::Preserving
                            } else {
                                Orientation::Reversing
                            }
                        })
                        .collect(),
                },
                continuous: t.pair.as_ref().map(is_continuous),
                shape: t.pair.as_ref().map(shape).transpose()?,
                variant: t.label,
                verdict,
                parameters: params,
            };
            Ok(ok(match format {
                Format::Text => {
                    let mut s = String::new();
                    for (d, a) in r.branches.iter().enumerate() {
                        let _ = writeln!(s, "A{d} = {a}  ({:?})", r.orientation[d]);
                    }
                    if let Some(c) = r.continuous {
                        let _ = writeln!(s, "continuous: {c}");
                    }
                    if let Some(sh) = &r.shape {
                        let _ = writeln!(s, "shape: {sh}");
                    }
                    match &r.verdict {
                        Verdict::NonContractive { certificate } => {
                            let words: Vec<String> = certificate.words.iter().map(|w| w.to_string()).collect();
                            let _ = writeln!(
                                s,
                                "non-contractive: {} on {} at nodes {:?}",
                                certificate.kind,
                                words.join(", "),
                                certificate.nodes
                            );
                        }
                        Verdict::ContractiveEvidence { diameter_profile } => {
                            let _ = writeln!(
                                s,
                                "contractive evidence: diameter {}",
                                diameter_profile.last().expect("nonempty")
                            );
                        }
                        Verdict::Unknown { diameter_profile } => {
                            let _ = writeln!(s, "unknown: diameter {}", diameter_profile.last().expect("nonempty"));
                        }
                    }
                    s
                }
                _ => json(&r)?,
            }))
        }
        Command::Diameters { target, depth } => {
            reject_svg(format)?;
            let t = Target::resolve(target.n, &target.variant)?;
            let profile = diameter_evidence(&t.ifs, *depth)?;
            let r = DiameterReport {
                schema_version: REPORT_SCHEMA_VERSION,
                n: t.ifs.dim(),
                variant: t.label,
                depth: *depth,
                profile_approx: profile.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect(),
                profile,
            };
            Ok(ok(match format {
                Format::Text => r
                    .profile
                    .iter()
                    .enumerate()
                    .map(|(t, d)| format!("{t}\t{d}\n"))
                    .collect(),
                _ => json(&r)?,
            }))
        }
    }
}

/// Caps the global rayon pool at `SIMPLEX_SPLIT_THREADS` when it is set.
pub fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let k: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::Parse(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| Error::ResourceLimit(e.to_string()))
}

/// Parses arguments the way the binary does; handy in tests.
pub fn run_args<I, T>(args: I) -> std::result::Result<Outcome, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    run(&cli).map_err(|e| e.to_string())
}
