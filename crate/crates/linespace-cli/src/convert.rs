use std::process::ExitCode;

use clap::Args;
use linespace_core::{
    lines_through_point, Complex64, EuclideanPoint, ExtComplex, LinePoint, OrientedLine,
};
use serde::Serialize;

use crate::parse::{parse_complex, parse_ext_complex, parse_point};
use crate::AppError;

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["eta", "point"]))]
pub struct ConvertArgs {
    /// Direction coordinate: 're,im', a bare real, or 'inf'
    #[arg(long, value_parser = parse_ext_complex)]
    xi: ExtComplex,

    /// Fiber coordinate 're,im' (line-to-point mode, with --r). With
    /// --xi inf this is the chart-two fiber coordinate.
    #[arg(long, value_parser = parse_complex, requires = "r", conflicts_with = "point")]
    eta: Option<Complex64>,

    /// Affine parameter along the line (line-to-point mode)
    #[arg(long, requires = "eta", conflicts_with = "point")]
    r: Option<f64>,

    /// Euclidean point 'x,y,t' (point-to-line mode: prints the eta and r of
    /// the line through the point with direction --xi)
    #[arg(long, value_parser = parse_point)]
    point: Option<EuclideanPoint>,
}

#[derive(Serialize)]
struct PointRecord {
    x: f64,
    y: f64,
    t: f64,
}

#[derive(Serialize)]
struct LineRecord {
    chart: u8,
    xi_re: f64,
    xi_im: f64,
    eta_re: f64,
    eta_im: f64,
    r: f64,
}

pub fn run(args: &ConvertArgs) -> Result<ExitCode, AppError> {
    let record = match (&args.eta, &args.r, &args.point) {
        (Some(eta), Some(r), None) => {
            let lp = LinePoint::new(OrientedLine::new(args.xi, *eta), *r);
            let p = lp.point();
            serde_json::to_string(&PointRecord {
                x: p.x(),
                y: p.y(),
                t: p.t,
            })
        }
        (None, None, Some(point)) => {
            let lp = lines_through_point(*point, args.xi);
            serde_json::to_string(&LineRecord {
                chart: lp.line.chart().index(),
                xi_re: lp.line.xi_chart().re,
                xi_im: lp.line.xi_chart().im,
                eta_re: lp.line.eta_chart().re,
                eta_im: lp.line.eta_chart().im,
                r: lp.r,
            })
        }
        _ => {
            return Err(AppError::Usage(
                "specify either --eta with --r, or --point".into(),
            ))
        }
    };
    println!("{}", record.expect("record serialization cannot fail"));
    Ok(ExitCode::SUCCESS)
}
