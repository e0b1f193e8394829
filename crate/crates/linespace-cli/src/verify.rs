//! Seeded numerical verification of the library's geometric identities.
//!
//! Each check draws its samples from its own deterministically derived RNG
//! stream, measures the worst residual it sees, and compares against a
//! pinned tolerance. Sampling boxes follow the conditioning of the closed
//! forms: identities quoted at 1e-10..1e-12 keep coordinates small enough
//! that f64 rounding stays an order of magnitude below the tolerance.

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use linespace_congruences::{
    implicit_residual_ellipsoid, implicit_residual_torus, verify_normality, Branch,
    EllipsoidParams, EllipsoidSection, LineSection, SphereSection, TorusParams, TorusSection,
};
use linespace_core::{
    dir_from_xi, inner, lines_through_point, xi_from_dir, Complex64, EuclideanPoint, ExtComplex,
    LinePoint, OrientedLine,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::AppError;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Core,
    Spheres,
    Ellipsoid,
    Torus,
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which invariant suite to run
    #[arg(value_enum)]
    suite: Suite,

    /// Seed for the deterministic sampler
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Override every check's tolerance
    #[arg(long)]
    tol: Option<f64>,

    /// Also write the report as JSON
    #[arg(long)]
    report_json: Option<PathBuf>,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub wall_ms: f64,
}

#[derive(Serialize)]
pub struct RunReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

struct Check {
    name: &'static str,
    tolerance: f64,
    run: fn(&mut ChaCha8Rng) -> f64,
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode, AppError> {
    if let Some(tol) = args.tol {
        if !(tol > 0.0) {
            return Err(AppError::Usage(format!(
                "--tol must be positive, got {tol}"
            )));
        }
    }

    let checks = checks_for(args.suite);
    let mut reports = Vec::with_capacity(checks.len());
    for (index, check) in checks.iter().enumerate() {
        let tolerance = args.tol.unwrap_or(check.tolerance);
        // A fixed stride keeps every check's stream independent of which
        // suite it runs in.
        let mut rng =
            ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(index as u64 * 0x9E37_79B9));
        let start = Instant::now();
        let max_residual = (check.run)(&mut rng);
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let passed = max_residual <= tolerance;
        println!(
            "[{}] {:<34} max_residual {:9.3e}  tol {:7.1e}  ({:.0} ms)",
            if passed { "PASS" } else { "FAIL" },
            check.name,
            max_residual,
            tolerance,
            wall_ms
        );
        reports.push(CheckReport {
            name: check.name.to_string(),
            max_residual,
            tolerance,
            passed,
            wall_ms,
        });
    }

    let passed = reports.iter().all(|c| c.passed);
    let suite_name = suite_name(args.suite);
    println!(
        "suite {}: {}/{} checks passed (seed {})",
        suite_name,
        reports.iter().filter(|c| c.passed).count(),
        reports.len(),
        args.seed
    );

    if let Some(path) = &args.report_json {
        let report = RunReport {
            suite: suite_name.to_string(),
            seed: args.seed,
            passed,
            checks: reports,
        };
        let mut out = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut out, &report)
            .map_err(|e| AppError::Io(e.into()))?;
        out.write_all(b"\n")?;
        out.flush()?;
    }

    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Core => "core",
        Suite::Spheres => "spheres",
        Suite::Ellipsoid => "ellipsoid",
        Suite::Torus => "torus",
        Suite::All => "all",
    }
}

fn checks_for(suite: Suite) -> Vec<Check> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Core | Suite::All) {
        checks.extend(CORE_CHECKS);
    }
    if matches!(suite, Suite::Spheres | Suite::All) {
        checks.extend(SPHERE_CHECKS);
    }
    if matches!(suite, Suite::Ellipsoid | Suite::All) {
        checks.extend(ELLIPSOID_CHECKS);
    }
    if matches!(suite, Suite::Torus | Suite::All) {
        checks.extend(TORUS_CHECKS);
    }
    checks
}

const CORE_CHECKS: [Check; 8] = [
    Check {
        name: "core/unit-direction",
        tolerance: 1e-12,
        run: check_unit_direction,
    },
    Check {
        name: "core/projection-round-trip",
        tolerance: 1e-10,
        run: check_projection_round_trip,
    },
    Check {
        name: "core/line-parametrization",
        tolerance: 1e-10,
        run: check_line_parametrization,
    },
    Check {
        name: "core/orthogonality",
        tolerance: 1e-12,
        run: check_orthogonality,
    },
    Check {
        name: "core/inverse-correctness",
        tolerance: 1e-10,
        run: check_inverse_correctness,
    },
    Check {
        name: "core/minimal-distance",
        tolerance: 1e-10,
        run: check_minimal_distance,
    },
    Check {
        name: "core/foot-minimality",
        tolerance: 1e-10,
        run: check_foot_minimality,
    },
    Check {
        name: "core/chart-coherence",
        tolerance: 1e-9,
        run: check_chart_coherence,
    },
];

const SPHERE_CHECKS: [Check; 2] = [
    Check {
        name: "spheres/point-exactness",
        tolerance: 1e-10,
        run: check_point_sphere_exactness,
    },
    Check {
        name: "spheres/normality",
        tolerance: 1e-6,
        run: check_sphere_normality,
    },
];

const ELLIPSOID_CHECKS: [Check; 4] = [
    Check {
        name: "ellipsoid/on-surface",
        tolerance: 1e-8,
        run: check_ellipsoid_on_surface,
    },
    Check {
        name: "ellipsoid/sphere-degeneration",
        tolerance: 1e-10,
        run: check_ellipsoid_degeneration,
    },
    Check {
        name: "ellipsoid/global-section",
        tolerance: 1e-8,
        run: check_ellipsoid_global_section,
    },
    Check {
        name: "ellipsoid/normality",
        tolerance: 1e-6,
        run: check_ellipsoid_normality,
    },
];

const TORUS_CHECKS: [Check; 5] = [
    Check {
        name: "torus/on-surface",
        tolerance: 1e-8,
        run: check_torus_on_surface,
    },
    Check {
        name: "torus/equators",
        tolerance: 1e-12,
        run: check_torus_equators,
    },
    Check {
        name: "torus/double-cover",
        tolerance: 1e-8,
        run: check_torus_double_cover,
    },
    Check {
        name: "torus/rotational-symmetry",
        tolerance: 1e-10,
        run: check_torus_rotational_symmetry,
    },
    Check {
        name: "torus/normality",
        tolerance: 1e-6,
        run: check_torus_normality,
    },
];

// ---- samplers -------------------------------------------------------------

fn uniform_complex(rng: &mut ChaCha8Rng, limit: f64) -> Complex64 {
    Complex64::new(
        rng.random_range(-limit..limit),
        rng.random_range(-limit..limit),
    )
}

fn uniform_point(rng: &mut ChaCha8Rng, limit: f64) -> EuclideanPoint {
    EuclideanPoint::from_xyz(
        rng.random_range(-limit..limit),
        rng.random_range(-limit..limit),
        rng.random_range(-limit..limit),
    )
}

/// Log-uniform modulus between the two bounds, uniform phase.
fn log_annulus(rng: &mut ChaCha8Rng, min_mod: f64, max_mod: f64) -> Complex64 {
    let modulus = min_mod * (max_mod / min_mod).powf(rng.random_range(0.0..1.0));
    Complex64::from_polar(modulus, rng.random_range(0.0..TAU))
}

fn embedded_torus(rng: &mut ChaCha8Rng, branch: Branch) -> TorusParams {
    let a = rng.random_range(1.0..10.0);
    let b = a * rng.random_range(0.1..0.9);
    TorusParams::new(a, b, branch).expect("positive radii")
}

fn max_abs_component(v: linespace_core::Vector3) -> f64 {
    v.x().abs().max(v.y().abs()).max(v.vt.abs())
}

// ---- core -----------------------------------------------------------------

fn check_unit_direction(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = {
        let v = dir_from_xi(ExtComplex::Infinity);
        (inner(v, v) - 1.0).abs()
    };
    for _ in 0..10_000 {
        let v = dir_from_xi(ExtComplex::Finite(uniform_complex(rng, 1e3)));
        worst = worst.max((inner(v, v) - 1.0).abs());
    }
    worst
}

fn check_projection_round_trip(rng: &mut ChaCha8Rng) -> f64 {
    // Relative to max(1, |xi|): near the south pole an absolute bound would
    // sit below what f64 can even represent for xi itself.
    let mut worst: f64 = match xi_from_dir(dir_from_xi(ExtComplex::Infinity), 1e-9) {
        Ok(ExtComplex::Infinity) => 0.0,
        _ => f64::INFINITY,
    };
    for _ in 0..10_000 {
        let xi = log_annulus(rng, 1e-6, 1e6);
        match xi_from_dir(dir_from_xi(ExtComplex::Finite(xi)), 1e-9) {
            Ok(ExtComplex::Finite(back)) => {
                worst = worst.max((back - xi).norm() / xi.norm().max(1.0));
            }
            _ => return f64::INFINITY,
        }
    }
    worst
}

fn check_line_parametrization(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let line = OrientedLine::chart1(
            uniform_complex(rng, 1e3),
            uniform_complex(rng, 1e2),
        );
        let r1 = rng.random_range(-1e3..1e3);
        let r2 = rng.random_range(-1e3..1e3);
        let moved = LinePoint::new(line, r1).point() - LinePoint::new(line, r2).point();
        let expected = line.direction() * (r1 - r2);
        worst = worst.max(max_abs_component(moved - expected));
    }
    worst
}

fn check_orthogonality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let line = OrientedLine::chart1(
            uniform_complex(rng, 1e3),
            uniform_complex(rng, 1e3),
        );
        worst = worst.max(inner(line.perp_displacement(), line.direction()).abs());
    }
    worst
}

fn check_inverse_correctness(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let p = uniform_point(rng, 1e3);
        let xi = uniform_complex(rng, 1e3);
        let back = lines_through_point(p, ExtComplex::Finite(xi)).point();
        worst = worst.max(max_abs_component(back - p));
    }
    worst
}

fn check_minimal_distance(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let p = uniform_point(rng, 50.0);
        let xi = uniform_complex(rng, 1e3);
        let lp = lines_through_point(p, ExtComplex::Finite(xi));
        let foot_sq = lp.line.foot_point().to_vector().norm_squared();
        worst = worst.max((lp.r * lp.r + foot_sq - p.to_vector().norm_squared()).abs());
    }
    worst
}

fn check_foot_minimality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let line = OrientedLine::chart1(
            uniform_complex(rng, 1e2),
            uniform_complex(rng, 1e2),
        );
        let foot_norm = line.foot_point().norm();
        for _ in 0..100 {
            let r = rng.random_range(-1e2..1e2);
            let dist = LinePoint::new(line, r).point().norm();
            worst = worst.max(foot_norm - dist);
        }
    }
    worst.max(0.0)
}

fn check_chart_coherence(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let line = OrientedLine::chart1(
            log_annulus(rng, 1e-3, 1e3),
            uniform_complex(rng, 1e2),
        );
        let other = line.to_other_chart().expect("xi != 0 by construction");
        worst = worst.max(max_abs_component(
            other.foot_point() - line.foot_point(),
        ));
    }
    worst
}

// ---- spheres ----------------------------------------------------------------

fn check_point_sphere_exactness(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..1_000 {
        let p = uniform_point(rng, 1e2);
        let section = SphereSection::point_sphere(p);
        let xi = uniform_complex(rng, 1e2);
        match section.eval(ExtComplex::Finite(xi)) {
            Ok(lp) => worst = worst.max(max_abs_component(lp.point() - p)),
            Err(_) => return f64::INFINITY,
        }
    }
    worst
}

fn check_sphere_normality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let section = SphereSection::new(
            uniform_point(rng, 5.0),
            rng.random_range(0.5..5.0),
        );
        let xi = log_annulus(rng, 0.05, 3.0);
        match verify_normality(&section, ExtComplex::Finite(xi), 1e-5) {
            Ok(res) => worst = worst.max(res),
            Err(_) => return f64::INFINITY,
        }
    }
    worst
}

// ---- ellipsoid --------------------------------------------------------------

fn random_ellipsoid(rng: &mut ChaCha8Rng) -> EllipsoidParams {
    EllipsoidParams::new(
        rng.random_range(0.5..100.0),
        rng.random_range(0.5..100.0),
        rng.random_range(0.5..100.0),
    )
    .expect("positive coefficients")
}

fn check_ellipsoid_on_surface(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let params = random_ellipsoid(rng);
        let section = EllipsoidSection::new(params);
        let scale = params.max_param().max(1.0);
        for _ in 0..250 {
            let xi = uniform_complex(rng, 50.0);
            let chart1 = section.eval(ExtComplex::Finite(xi)).map(|lp| lp.point());
            let chart2 = section.eval_chart2(xi).map(|lp| lp.point());
            match (chart1, chart2) {
                (Ok(p1), Ok(p2)) => {
                    worst = worst
                        .max(implicit_residual_ellipsoid(&params, p1).abs() / scale)
                        .max(implicit_residual_ellipsoid(&params, p2).abs() / scale);
                }
                _ => return f64::INFINITY,
            }
        }
    }
    worst
}

fn check_ellipsoid_degeneration(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let a = rng.random_range(0.25..100.0);
        let section = EllipsoidSection::new(EllipsoidParams::new(a, a, a).expect("positive"));
        for _ in 0..20 {
            let xi = uniform_complex(rng, 50.0);
            match section.eval(ExtComplex::Finite(xi)) {
                Ok(lp) => {
                    worst = worst
                        .max(lp.line.eta_chart().norm())
                        .max((lp.r - a.sqrt()).abs());
                }
                Err(_) => return f64::INFINITY,
            }
        }
    }
    worst
}

fn check_ellipsoid_global_section(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let params = random_ellipsoid(rng);
        let section = EllipsoidSection::new(params);
        let scale = params.max_param().max(1.0);
        // At the south pole exactly, then on a tight ring around it.
        let mut samples = vec![Complex64::new(0.0, 0.0)];
        for _ in 0..10 {
            samples.push(log_annulus(rng, 1e-8, 1e-4));
        }
        for xi in samples {
            match section.eval_chart2(xi) {
                Ok(lp) => {
                    let p = lp.point();
                    if !p.is_finite() {
                        return f64::INFINITY;
                    }
                    worst = worst.max(implicit_residual_ellipsoid(&params, p).abs() / scale);
                }
                Err(_) => return f64::INFINITY,
            }
        }
    }
    worst
}

fn check_ellipsoid_normality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let section = EllipsoidSection::new(
            EllipsoidParams::new(
                rng.random_range(0.5..25.0),
                rng.random_range(0.5..25.0),
                rng.random_range(0.5..25.0),
            )
            .expect("positive"),
        );
        let xi = log_annulus(rng, 0.05, 3.0);
        match verify_normality(&section, ExtComplex::Finite(xi), 1e-5) {
            Ok(res) => worst = worst.max(res),
            Err(_) => return f64::INFINITY,
        }
    }
    worst
}

// ---- torus ------------------------------------------------------------------

fn check_torus_on_surface(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        for branch in [Branch::Plus, Branch::Minus] {
            let params = embedded_torus(rng, branch);
            let section = TorusSection::new(params);
            let scale = params.a() * params.a() + params.b() * params.b();
            for _ in 0..250 {
                let xi = log_annulus(rng, 0.05, 20.0);
                let chart1 = section.eval(ExtComplex::Finite(xi)).map(|lp| lp.point());
                let chart2 = section.eval_chart2(xi).map(|lp| lp.point());
                match (chart1, chart2) {
                    (Ok(p1), Ok(p2)) => {
                        worst = worst
                            .max(implicit_residual_torus(&params, p1).abs() / scale)
                            .max(implicit_residual_torus(&params, p2).abs() / scale);
                    }
                    _ => return f64::INFINITY,
                }
            }
        }
    }
    worst
}

fn check_torus_equators(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        for branch in [Branch::Plus, Branch::Minus] {
            let params = embedded_torus(rng, branch);
            let section = TorusSection::new(params);
            let expected_r = params.b() + branch.sign() * params.a();
            for _ in 0..50 {
                let xi = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
                match section.eval(ExtComplex::Finite(xi)) {
                    Ok(lp) => {
                        worst = worst
                            .max(lp.line.eta_chart().norm())
                            .max((lp.r - expected_r).abs());
                    }
                    Err(_) => return f64::INFINITY,
                }
            }
        }
    }
    worst
}

fn check_torus_double_cover(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..1_000 {
        let params = embedded_torus(rng, Branch::Plus);
        let plus = TorusSection::new(params);
        let minus = TorusSection::new(
            TorusParams::new(params.a(), params.b(), Branch::Minus).expect("positive"),
        );
        let xi = log_annulus(rng, 0.1, 10.0);
        let (p, m) = match (
            plus.eval(ExtComplex::Finite(xi)),
            minus.eval(ExtComplex::Finite(xi)),
        ) {
            (Ok(p), Ok(m)) => (p, m),
            _ => return f64::INFINITY,
        };
        // Two distinct surface points sharing the direction axis: the chord
        // between them is horizontal, radially aligned, of length 2a.
        let diff = p.point() - m.point();
        let scale = 1.0 + 2.0 * params.a();
        let phase = xi / xi.norm();
        worst = worst
            .max(diff.vt.abs() / scale)
            .max((diff.norm() - 2.0 * params.a()).abs() / scale)
            .max((diff.vz * phase.conj()).im.abs() / scale);
    }
    worst
}

fn check_torus_rotational_symmetry(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..1_000 {
        let branch = if rng.random_range(0..2) == 0 {
            Branch::Plus
        } else {
            Branch::Minus
        };
        let params = embedded_torus(rng, branch);
        let section = TorusSection::new(params);
        let xi = log_annulus(rng, 0.05, 20.0);
        let spin = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
        let (base, rotated) = match (
            section.eval(ExtComplex::Finite(xi)),
            section.eval(ExtComplex::Finite(spin * xi)),
        ) {
            (Ok(b), Ok(r)) => (b, r),
            _ => return f64::INFINITY,
        };
        let eta_scale = 1.0 + base.line.eta_chart().norm();
        worst = worst
            .max((rotated.r - base.r).abs() / (1.0 + base.r.abs()))
            .max(
                (rotated.line.eta_chart().norm() - base.line.eta_chart().norm()).abs()
                    / eta_scale,
            );
    }
    worst
}

fn check_torus_normality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for branch in [Branch::Plus, Branch::Minus] {
        for _ in 0..50 {
            let section = TorusSection::new(embedded_torus(rng, branch));
            let xi = log_annulus(rng, 0.3, 3.0);
            match verify_normality(&section, ExtComplex::Finite(xi), 1e-5) {
                Ok(res) => worst = worst.max(res),
                Err(_) => return f64::INFINITY,
            }
        }
    }
    worst
}
