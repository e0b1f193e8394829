use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use linespace_congruences::{
    Branch, EllipsoidParams, EllipsoidSection, LineSection, SphereSection, TorusParams,
    TorusSection,
};
use linespace_core::{Chart, Complex64, EuclideanPoint, ExtComplex};

use crate::grid::GridSpec;
use crate::parse::{fmt_f64, parse_point};
use crate::AppError;

pub const CSV_HEADER: &str = "xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped";

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SurfaceKind {
    /// Point sphere: all lines through --point (reconstruction is constant)
    Sphere,
    /// Triaxial ellipsoid x²/a1 + y²/a2 + t²/a3 = 1
    Ellipsoid,
    /// Rotationally symmetric torus, center-circle radius --a, tube --b
    Torus,
}

#[derive(Args)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    surface: SurfaceKind,

    /// Sphere: the point whose line sphere to sample, as 'x,y,t'
    #[arg(long, value_parser = parse_point)]
    point: Option<EuclideanPoint>,

    /// Ellipsoid coefficients (squared semi-axes)
    #[arg(long)]
    a1: Option<f64>,
    #[arg(long)]
    a2: Option<f64>,
    #[arg(long)]
    a3: Option<f64>,

    /// Torus center-circle radius
    #[arg(long)]
    a: Option<f64>,
    /// Torus tube radius
    #[arg(long)]
    b: Option<f64>,
    /// Torus branch: plus (outer half of the tube) or minus (inner half)
    #[arg(long)]
    branch: Option<Branch>,

    /// Grid: disk:R:A:MAX, annulus:R:A:MIN:MAX or two-chart:R:A:MAX
    #[arg(long)]
    grid: GridSpec,

    #[arg(long)]
    out_csv: PathBuf,

    /// Also write the reconstructed points as an OBJ point cloud
    #[arg(long)]
    out_obj: Option<PathBuf>,
}

struct Row {
    chart: Chart,
    xi: Complex64,
    /// Fiber coordinate in the row's chart, incidence parameter, and the
    /// reconstructed point; `None` when the sample was skipped.
    data: Option<(Complex64, f64, EuclideanPoint)>,
}

pub fn run(args: &SampleArgs) -> Result<ExitCode, AppError> {
    // All parameter validation happens before any file is touched.
    let section = build_section(args)?;

    let rows: Vec<Row> = args
        .grid
        .samples()
        .iter()
        .map(|sample| {
            let result = match sample.chart {
                Chart::One => section.eval(ExtComplex::Finite(sample.xi)),
                Chart::Two => section.eval_chart2(sample.xi),
            };
            Row {
                chart: sample.chart,
                xi: sample.xi,
                data: result
                    .ok()
                    .map(|lp| (lp.line.eta_chart(), lp.r, lp.point())),
            }
        })
        .collect();

    write_csv(&args.out_csv, &rows)?;
    if let Some(path) = &args.out_obj {
        write_obj(path, &rows)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn build_section(args: &SampleArgs) -> Result<Box<dyn LineSection>, AppError> {
    match args.surface {
        SurfaceKind::Sphere => {
            let point = args
                .point
                .ok_or_else(|| AppError::Usage("--surface sphere requires --point".into()))?;
            Ok(Box::new(SphereSection::point_sphere(point)))
        }
        SurfaceKind::Ellipsoid => {
            let (a1, a2, a3) = match (args.a1, args.a2, args.a3) {
                (Some(a1), Some(a2), Some(a3)) => (a1, a2, a3),
                _ => {
                    return Err(AppError::Usage(
                        "--surface ellipsoid requires --a1, --a2 and --a3".into(),
                    ))
                }
            };
            let params = EllipsoidParams::new(a1, a2, a3)
                .map_err(|e| AppError::Usage(e.to_string()))?;
            Ok(Box::new(EllipsoidSection::new(params)))
        }
        SurfaceKind::Torus => {
            let (a, b, branch) = match (args.a, args.b, args.branch) {
                (Some(a), Some(b), Some(branch)) => (a, b, branch),
                _ => {
                    return Err(AppError::Usage(
                        "--surface torus requires --a, --b and --branch".into(),
                    ))
                }
            };
            let params =
                TorusParams::new(a, b, branch).map_err(|e| AppError::Usage(e.to_string()))?;
            if !params.is_embedded() {
                eprintln!(
                    "warning: torus with center-circle radius {a} and tube radius {b} \
                     self-intersects (embedded requires a > b)"
                );
            }
            Ok(Box::new(TorusSection::new(params)))
        }
    }
}

fn write_csv(path: &PathBuf, rows: &[Row]) -> Result<(), AppError> {
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        match &row.data {
            Some((eta, r, p)) => writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},0",
                fmt_f64(row.xi.re),
                fmt_f64(row.xi.im),
                row.chart.index(),
                fmt_f64(eta.re),
                fmt_f64(eta.im),
                fmt_f64(*r),
                fmt_f64(p.x()),
                fmt_f64(p.y()),
                fmt_f64(p.t),
            )?,
            None => writeln!(
                out,
                "{},{},{},,,,,,,1",
                fmt_f64(row.xi.re),
                fmt_f64(row.xi.im),
                row.chart.index(),
            )?,
        }
    }
    out.flush()?;
    Ok(())
}

fn write_obj(path: &PathBuf, rows: &[Row]) -> Result<(), AppError> {
    let mut out = BufWriter::new(File::create(path)?);
    for row in rows {
        if let Some((_, _, p)) = &row.data {
            writeln!(out, "v {} {} {}", fmt_f64(p.x()), fmt_f64(p.y()), fmt_f64(p.t))?;
        }
    }
    out.flush()?;
    Ok(())
}
