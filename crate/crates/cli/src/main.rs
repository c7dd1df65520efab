use std::f64::consts::PI;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use htarea::closed_forms::{hyperbolic_alpha, hyperbolic_quad_volume, triangle_volume};
use htarea::flags::{
    double_ratio_1, double_ratio_2, fg_to_normalized, polygons_from_flags, triangle_pair,
    triple_ratio,
};
use htarea::hilbert::{dual_ball_area, integrand_q0, integrand_t0, model_square, model_triangle};
use htarea::quadrature::ht_area;
use htarea::surfaces::{s03_area_lower_bound, s03_parameters, surface_lower_bound};
use htarea::{ConvexPolygon, FGQuadCoords, FlagTuple, QuadratureSpec, Vec2};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "htarea",
    version,
    about = "Hilbert geometry and Holmes-Thompson areas of positive flag tuples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Area of the triangle with triple ratio t, closed form against quadrature
    Triangle {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Area of a quadrilateral given by its triple and double ratios
    Quad {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        tp: f64,
        #[arg(long, allow_hyphen_values = true)]
        d: f64,
        #[arg(long, allow_hyphen_values = true)]
        dp: f64,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// CSV table of the hyperbolic quadrilateral area over log-spaced d
    HyperbolicSweep {
        #[arg(long)]
        d_min: f64,
        #[arg(long)]
        d_max: f64,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Skip the quadrature column
        #[arg(long)]
        no_quadrature: bool,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Lower bound for the thrice-punctured sphere family at d = e^ld, t = e^lt
    S03 {
        #[arg(long, allow_hyphen_values = true)]
        ld: f64,
        #[arg(long, allow_hyphen_values = true)]
        lt: f64,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Area lower bound for a closed surface from its triangle triple ratios
    SurfaceBound {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        ratios: Vec<f64>,
    },
    /// Dual unit ball area at a point of a model or custom polygon
    Ball {
        #[arg(long, value_enum)]
        outer: Outer,
        /// JSON file with the polygon vertices as [[x, y], ...], for --outer json
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: f64,
    },
    /// Ratios and area of a flag tuple read from a JSON file
    Flags {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Outer {
    Q0,
    T0,
    Json,
}

enum Failure {
    Domain(String),
    Io(String),
}

impl From<htarea::Error> for Failure {
    fn from(e: htarea::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn spec(tol: f64) -> Result<QuadratureSpec, Failure> {
    Ok(QuadratureSpec::with_tol(tol)?)
}

fn triangle(t: f64, tol: f64) -> Outcome {
    let closed_form = triangle_volume(t)?;
    let quadrature = ht_area(&triangle_pair(t)?, &spec(tol)?)?;
    Ok(json!({
        "t": t,
        "closed_form": closed_form,
        "quadrature": quadrature.value,
        "abs_diff": (closed_form - quadrature.value).abs(),
    }))
}

fn quad(coords: FGQuadCoords, tol: f64) -> Outcome {
    let params = fg_to_normalized(&coords);
    let area = ht_area(&params.inscribed_pair(), &spec(tol)?)?;
    Ok(json!({
        "t": coords.t,
        "tp": coords.tp,
        "d": coords.d,
        "dp": coords.dp,
        "alpha1": params.alpha1,
        "alpha2": params.alpha2,
        "beta1": params.beta1,
        "beta2": params.beta2,
        "area": area.value,
        "error_estimate": area.error_estimate,
    }))
}

fn sweep(d_min: f64, d_max: f64, steps: usize, out: &Path, quadrature: bool, tol: f64) -> Outcome {
    if !(d_min > 0.0 && d_min < d_max && d_max.is_finite()) {
        return Err(Failure::Domain(format!(
            "need 0 < d-min < d-max, got {d_min} and {d_max}"
        )));
    }
    if steps < 2 {
        return Err(Failure::Domain("steps must be at least 2".into()));
    }
    let spec = spec(tol)?;
    let (lo, span) = (d_min.ln(), (d_max / d_min).ln());
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let d = (lo + span * i as f64 / (steps - 1) as f64).exp();
        let closed = hyperbolic_quad_volume(d)?;
        let quad = if quadrature {
            let pair = fg_to_normalized(&FGQuadCoords::new(1.0, 1.0, d, d)?).inscribed_pair();
            format!("{}", ht_area(&pair, &spec)?.value)
        } else {
            String::new()
        };
        rows.push(format!(
            "{d},{},{closed},{quad},{}",
            hyperbolic_alpha(d),
            2.0 * PI
        ));
    }
    let io = |e: std::io::Error| Failure::Io(format!("{}: {e}", out.display()));
    let mut file = BufWriter::new(fs::File::create(out).map_err(io)?);
    writeln!(file, "d,alpha,closed_form,quadrature,hyperbolic_bound").map_err(io)?;
    for row in &rows {
        writeln!(file, "{row}").map_err(io)?;
    }
    file.flush().map_err(io)?;
    Ok(json!({ "out": out.display().to_string(), "rows": steps }))
}

fn s03(ld: f64, lt: f64, tol: f64) -> Outcome {
    let (d, t) = (ld.exp(), lt.exp());
    let params = s03_parameters(d, t)?;
    let bound = s03_area_lower_bound(d, t, &spec(tol)?)?;
    Ok(json!({
        "ld": ld,
        "lt": lt,
        "d": d,
        "t": t,
        "parameters": params,
        "lower_bound": bound.value,
        "error_estimate": bound.error_estimate,
    }))
}

fn surface(chi: i64, ratios: &[f64]) -> Outcome {
    Ok(json!({ "chi": chi, "ratios": ratios, "lower_bound": surface_lower_bound(chi, ratios)? }))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn ball(outer: Outer, polygon: Option<&Path>, x: f64, y: f64) -> Outcome {
    let p = Vec2::new(x, y);
    let (omega, closed_form) = match outer {
        Outer::Q0 => (model_square(), Some(integrand_q0(x, y)?)),
        Outer::T0 => (model_triangle(), Some(integrand_t0(x, y)?)),
        Outer::Json => {
            let path =
                polygon.ok_or_else(|| Failure::Domain("--outer json needs --polygon".into()))?;
            let vertices: Vec<[f64; 2]> = read_json(path)?;
            (
                ConvexPolygon::new(vertices.iter().map(|v| Vec2::new(v[0], v[1])).collect())?,
                None,
            )
        }
    };
    Ok(
        json!({ "x": x, "y": y, "dual_area": dual_ball_area(&omega, &p)?, "closed_form": closed_form }),
    )
}

fn flags(input: &Path, tol: f64) -> Outcome {
    let tuple: FlagTuple = read_json(input)?;
    let f = tuple.flags();
    let k = f.len();
    let triple: Vec<f64> = (1..k - 1)
        .map(|i| triple_ratio(&f[0], &f[i], &f[i + 1]))
        .collect::<Result<_, _>>()?;
    let double: Vec<[f64; 2]> = (1..k.saturating_sub(2))
        .map(|i| {
            Ok([
                double_ratio_1(&f[0], &f[i], &f[i + 1], &f[i + 2])?,
                double_ratio_2(&f[0], &f[i], &f[i + 1], &f[i + 2])?,
            ])
        })
        .collect::<Result<_, htarea::Error>>()?;
    let area = ht_area(&polygons_from_flags(&tuple)?, &spec(tol)?)?;
    Ok(json!({
        "k": k,
        "positive": tuple.is_positive(),
        "triple_ratios": triple,
        "double_ratios": double,
        "area": area.value,
        "error_estimate": area.error_estimate,
    }))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Triangle { t, tol } => triangle(t, tol),
        Command::Quad { t, tp, d, dp, tol } => quad(FGQuadCoords::new(t, tp, d, dp)?, tol),
        Command::HyperbolicSweep {
            d_min,
            d_max,
            steps,
            out,
            no_quadrature,
            tol,
        } => sweep(d_min, d_max, steps, &out, !no_quadrature, tol),
        Command::S03 { ld, lt, tol } => s03(ld, lt, tol),
        Command::SurfaceBound { chi, ratios } => surface(chi, &ratios),
        Command::Ball {
            outer,
            polygon,
            x,
            y,
        } => ball(outer, polygon.as_deref(), x, y),
        Command::Flags { input, tol } => flags(&input, tol),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
