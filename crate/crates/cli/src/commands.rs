use std::io::Read;

use ksforms::algebra::multipoly::format_poly;
use ksforms::algebra::parse::{parse_field_elem, parse_ratfn};
use ksforms::algebra::{FieldElem, ParamField, RatFn, Ring};
use ksforms::cm::{ks_rank_bound, moduli_dimension, rank_window, RankWindow, ShimuraType};
use ksforms::curve::{cech_project, h0_omega_basis, h1_basis, normal_form_ratfn, ChartTag, PlaneCurve};
use ksforms::engine::{
    analyze, cup_product_matrix, ks_cocycle, ks_rank_kernel, lift_global_ksform, pairing_with_omega00,
    prolong_derivation, AnalyzeOptions, Path,
};
use ksforms::jet::KSForm;
use ksforms::ode::{hi_constant_mode, section_from_ksform, verify_section, DVarietySection};
use serde::Serialize;

use crate::error::CliError;
use crate::output::*;
use crate::spec::{CurveBlock, CurveKind, CurveSpec, Loaded};
use crate::{ChartArg, Cli, Command, CurveArgs, FieldArgs, OdeArgs, ReportArgs};

pub struct Output {
    pub stdout: String,
    /// Printed after `stdout` and turned into the exit code.
    pub failure: Option<CliError>,
}

fn emit<T: Serialize>(cli: &Cli, v: &T, text: impl FnOnce(&T) -> String) -> Output {
    Output {
        stdout: if cli.json { to_json(v) } else { text(v) },
        failure: None,
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Analyze { spec, report } => {
            let s = CurveSpec::from_toml(&read_source(spec)?)?;
            let loaded = load(cli, s, &FieldArgs::default())?;
            let r = run_report("analyze", &loaded, report)?;
            Ok(emit(cli, &r, ReportJson::to_text))
        }
        Command::Picard { g, field, report } => {
            let s = inline_spec(CurveKind::Picard, g.clone());
            let loaded = load(cli, s, field)?;
            let r = run_report("picard", &loaded, report)?;
            Ok(emit(cli, &r, ReportJson::to_text))
        }
        Command::Cohomology { curve, elements } => {
            let loaded = load_curve(cli, curve)?;
            let r = cohomology(&loaded, elements)?;
            Ok(emit(cli, &r, CohomologyJson::to_text))
        }
        Command::Ode(args) => {
            let loaded = load_curve(cli, &args.curve)?;
            let r = ode(&loaded, args)?;
            let failed = r.sections.iter().filter(|s| !s.verified).count();
            let mut out = emit(cli, &r, OdeJson::to_text);
            if failed > 0 {
                out.failure = Some(CliError::rejected(format!(
                    "{failed} section(s) fail the tangency or form residual"
                )));
            }
            Ok(out)
        }
        Command::CmBound { g, e, types } => {
            let r = cm_bound(*g, *e, types)?;
            Ok(emit(cli, &r, CmJson::to_text))
        }
    }
}

fn read_source(path: &std::path::Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn inline_spec(kind: CurveKind, equation: String) -> CurveSpec {
    let (g, f) = match kind {
        CurveKind::Picard => (Some(equation), None),
        CurveKind::Plane => (None, Some(equation)),
    };
    CurveSpec {
        curve: CurveBlock { kind, g, f },
        ..CurveSpec::default()
    }
}

fn load(cli: &Cli, mut spec: CurveSpec, field: &FieldArgs) -> Result<Loaded, CliError> {
    spec.add_derivatives(&field.deriv)?;
    if let Some(p) = &field.params {
        spec.field.params = Some(p.clone());
    }
    let config = spec.config(cli.max_reductions, cli.max_degree);
    spec.load(config)
}

fn load_curve(cli: &Cli, args: &CurveArgs) -> Result<Loaded, CliError> {
    let spec = match (&args.spec, &args.g, &args.f) {
        (Some(p), _, _) => CurveSpec::from_toml(&read_source(p)?)?,
        (None, Some(g), _) => inline_spec(CurveKind::Picard, g.clone()),
        (None, None, Some(f)) => inline_spec(CurveKind::Plane, f.clone()),
        (None, None, None) => return Err(CliError::input("give --spec, --g or --f")),
    };
    load(cli, spec, &args.field)
}

fn path_of(loaded: &Loaded, choice: Option<crate::spec::PathChoice>) -> Path {
    choice
        .or(loaded.spec.options.path)
        .map(Into::into)
        .unwrap_or_else(|| loaded.model.default_path())
}

fn run_report(command: &str, loaded: &Loaded, args: &ReportArgs) -> Result<ReportJson, CliError> {
    let opts = AnalyzeOptions {
        path: Some(path_of(loaded, args.path)),
        simple_jacobian: args.simple_jacobian || loaded.spec.options.simple_jacobian,
        config: loaded.config.clone(),
        lift: args.full,
    };
    let r = analyze(&loaded.model, &opts).map_err(|e| CliError::engine(e, &loaded.field))?;
    Ok(report_json(command, &loaded.field, &loaded.model, &r, args.full))
}

/// Every parameter occurring in `F` has a recorded derivative.
fn derivation_defined(curve: &PlaneCurve) -> bool {
    let k = curve.field();
    (0..k.len()).all(|i| k.derivative(i).is_some() || !curve.f().terms().iter().any(|(_, c)| c.uses_param(i)))
}

fn cohomology(loaded: &Loaded, elements: &[String]) -> Result<CohomologyJson, CliError> {
    let k = &loaded.field;
    let curve = loaded.model.plane();
    let d = curve.degree();
    let certificates = [ChartTag::U, ChartTag::V]
        .into_iter()
        .map(|chart| {
            let cert = curve.certificate(chart);
            let show = |p| format_poly(p, &chart.vars(), k.params());
            CertificateJson {
                chart: chart.to_string(),
                generators: cert.generators().iter().map(show).collect(),
                cofactors: cert.cofactors().iter().map(show).collect(),
            }
        })
        .collect();
    let cocycle = if derivation_defined(curve) {
        let path = path_of(loaded, None);
        let d1 = prolong_derivation(&loaded.model, ChartTag::U, path, &loaded.config)?;
        let d2 = prolong_derivation(&loaded.model, ChartTag::V, path, &loaded.config)?;
        let c = ks_cocycle(&d1, &d2, curve)?;
        let pairing = pairing_with_omega00(&c, curve)?;
        let show = |p| format_poly(p, &["x", "y"], k.params());
        Some(CocycleJson {
            dx: show(c.d12x().as_poly()),
            dy: show(c.d12y().as_poly()),
            pairing: show(pairing.as_poly()),
            projection: elems(k, &cech_project(&pairing, curve)),
        })
    } else {
        None
    };
    let elements = elements
        .iter()
        .map(|src| {
            let z = normal_form_ratfn(&parse_ratfn(src, k, &["x", "y"])?, curve)?;
            let coords = cech_project(&z, curve);
            Ok(ElementJson {
                input: src.clone(),
                normal_form: format_poly(z.as_poly(), &["x", "y"], k.params()),
                coboundary: coords.iter().all(Ring::is_zero),
                projection: elems(k, &coords),
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(CohomologyJson {
        schema: SCHEMA.into(),
        command: "cohomology".into(),
        field: field_json(k),
        curve: curve_json(k, &loaded.model),
        h1_basis: h1_basis(d).iter().map(ToString::to_string).collect(),
        omega_basis: h0_omega_basis(d).iter().map(ToString::to_string).collect(),
        certificates,
        cocycle,
        elements,
    })
}

fn section_json(k: &ParamField, source: String, eta: &KSForm, s: &DVarietySection, curve: &PlaneCurve) -> SectionJson {
    let r = verify_section(s, eta, curve);
    SectionJson {
        source,
        form: form_json(k, eta),
        chart: s.chart.to_string(),
        x_dot: ratfn(k, s.chart, &s.rx),
        y_dot: ratfn(k, s.chart, &s.ry),
        verified: r.is_zero(),
        tangency_residual: ratfn(k, s.chart, &r.tangency),
        form_residual: ratfn(k, s.chart, &r.form),
    }
}

fn ode(loaded: &Loaded, args: &OdeArgs) -> Result<OdeJson, CliError> {
    let k = &loaded.field;
    let curve = loaded.model.plane();
    let chart = match args.chart {
        ChartArg::U => ChartTag::U,
        ChartArg::V => ChartTag::V,
    };
    let parse = |src: &Option<String>| -> Result<RatFn, CliError> {
        match src {
            Some(s) => Ok(parse_ratfn(s, k, &chart.vars())?),
            None => Ok(RatFn::zero()),
        }
    };
    let mut sections = Vec::new();
    let mode = if args.constant_mode {
        if chart != ChartTag::U {
            return Err(CliError::input("--constant-mode works on chart U"));
        }
        let u = parse(&args.dx)?;
        let s = hi_constant_mode(&u, curve)?;
        let eta = KSForm::new(chart, vec![u, RatFn::zero()], RatFn::one().neg());
        sections.push(section_json(k, "constant".into(), &eta, &s, curve));
        "constant"
    } else if args.dx.is_some() || args.dy.is_some() || args.function.is_some() {
        let eta = KSForm::new(chart, vec![parse(&args.dx)?, parse(&args.dy)?], parse(&args.function)?);
        let s = section_from_ksform(&eta, curve)?;
        sections.push(section_json(k, "form".into(), &eta, &s, curve));
        "form"
    } else {
        let path = path_of(loaded, args.path);
        let d1 = prolong_derivation(&loaded.model, ChartTag::U, path, &loaded.config)?;
        let d2 = prolong_derivation(&loaded.model, ChartTag::V, path, &loaded.config)?;
        let cocycle = ks_cocycle(&d1, &d2, curve)?;
        let targets: Vec<(String, Vec<FieldElem>)> = match &args.omega {
            Some(coords) => {
                let g = curve.genus() as usize;
                if coords.len() != g {
                    return Err(CliError::input(format!("--omega needs {g} coordinates, got {}", coords.len())));
                }
                let w = coords
                    .iter()
                    .map(|c| parse_field_elem(c, k))
                    .collect::<Result<_, _>>()?;
                vec![("omega".into(), w)]
            }
            None => {
                let m = cup_product_matrix(&cocycle, curve)?;
                ks_rank_kernel(&m)
                    .kernel
                    .into_iter()
                    .enumerate()
                    .map(|(i, w)| (format!("kernel {}", i + 1), w))
                    .collect()
            }
        };
        for (source, w) in targets {
            let lift = lift_global_ksform(&w, curve, &d1, &d2, &cocycle).map_err(|e| CliError::engine(e, k))?;
            let s = section_from_ksform(&lift.on_u, curve)?;
            sections.push(section_json(k, source, &lift.on_u, &s, curve));
        }
        if args.omega.is_some() { "omega" } else { "kernel" }
    };
    Ok(OdeJson {
        schema: SCHEMA.into(),
        command: "ode".into(),
        field: field_json(k),
        curve: curve_json(k, &loaded.model),
        mode: mode.into(),
        sections,
    })
}

fn parse_pair(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::input(format!("--type expects r,s with nonnegative integers, got '{s}'"));
    let (r, t) = s.split_once(',').ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, t.trim().parse().map_err(|_| bad())?))
}

fn cm_bound(g: u32, e: u32, types: &[String]) -> Result<CmJson, CliError> {
    let window = rank_window(g, e)?;
    let t = if types.is_empty() {
        None
    } else {
        let pairs = types.iter().map(|s| parse_pair(s)).collect::<Result<_, _>>()?;
        Some(ShimuraType::with_shape(g, e, pairs)?)
    };
    Ok(CmJson {
        schema: SCHEMA.into(),
        command: "cm-bound".into(),
        g,
        e,
        m: g / e,
        shimura_type: t.as_ref().map(|t| t.pairs().iter().map(|&(r, s)| [r, s]).collect()),
        ks_rank_bound: t.as_ref().map(ks_rank_bound),
        moduli_dimension: t.as_ref().map(moduli_dimension),
        window: match window {
            RankWindow::Bounds { lo, hi } => Some(WindowJson { lo, hi }),
            RankWindow::HypothesisFails { .. } => None,
        },
    })
}
