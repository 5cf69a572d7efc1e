//! Machine-readable reports and their plain-text rendering.
//!
//! Every field element and function is a canonical string, so two runs on
//! the same input produce byte-identical JSON.

use std::fmt::Write as _;

use ksforms::algebra::multipoly::format_poly;
use ksforms::algebra::ratfn::format_ratfn;
use ksforms::algebra::{FieldElem, ParamField, RatFn};
use ksforms::curve::{h0_omega_basis, h1_basis, ChartTag};
use ksforms::engine::{CurveModel, GlobalKSForm, KSReport, Path};
use ksforms::jet::KSForm;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "ksforms/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldJson {
    pub params: Vec<String>,
    pub derivatives: Vec<DerivativeJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivativeJson {
    pub param: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    pub equation: String,
    pub degree: i32,
    pub genus: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PicardJson {
    pub a: String,
    pub b: String,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub chart: String,
    pub coeffs: Vec<String>,
    pub function: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftJson {
    pub omega: Vec<String>,
    pub on_u: FormJson,
    pub on_v: FormJson,
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullJson {
    pub omega_basis: Vec<String>,
    pub h1_basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub lifts: Vec<LiftJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub schema: String,
    pub command: String,
    pub field: FieldJson,
    pub curve: CurveJson,
    pub path: String,
    pub genus: usize,
    pub rank: usize,
    pub h0_tau: usize,
    pub manin_abs_dim: usize,
    pub isotrivial: bool,
    pub new_forms_exist: Option<bool>,
    pub picard: Option<PicardJson>,
    pub kernel: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full: Option<FullJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub input: String,
    pub normal_form: String,
    pub projection: Vec<String>,
    pub coboundary: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub dx: String,
    pub dy: String,
    pub pairing: String,
    pub projection: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub chart: String,
    pub generators: Vec<String>,
    pub cofactors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub schema: String,
    pub command: String,
    pub field: FieldJson,
    pub curve: CurveJson,
    pub h1_basis: Vec<String>,
    pub omega_basis: Vec<String>,
    pub certificates: Vec<CertificateJson>,
    pub cocycle: Option<CocycleJson>,
    pub elements: Vec<ElementJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionJson {
    pub source: String,
    pub form: FormJson,
    pub chart: String,
    pub x_dot: String,
    pub y_dot: String,
    pub tangency_residual: String,
    pub form_residual: String,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OdeJson {
    pub schema: String,
    pub command: String,
    pub field: FieldJson,
    pub curve: CurveJson,
    pub mode: String,
    pub sections: Vec<SectionJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowJson {
    pub lo: u32,
    pub hi: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CmJson {
    pub schema: String,
    pub command: String,
    pub g: u32,
    pub e: u32,
    pub m: u32,
    pub shimura_type: Option<Vec<[u32; 2]>>,
    pub ks_rank_bound: Option<u32>,
    pub moduli_dimension: Option<u32>,
    pub window: Option<WindowJson>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

pub fn ratfn(k: &ParamField, chart: ChartTag, f: &RatFn) -> String {
    format_ratfn(f, &chart.vars(), k.params())
}

pub fn elems(k: &ParamField, v: &[FieldElem]) -> Vec<String> {
    v.iter().map(|e| k.format(e)).collect()
}

pub fn field_json(k: &ParamField) -> FieldJson {
    FieldJson {
        params: k.params().to_vec(),
        derivatives: (0..k.len())
            .filter_map(|i| {
                k.derivative(i).map(|d| DerivativeJson {
                    param: k.name(i),
                    value: k.format(d),
                })
            })
            .collect(),
    }
}

pub fn curve_json(k: &ParamField, model: &CurveModel) -> CurveJson {
    let c = model.plane();
    CurveJson {
        kind: if model.picard().is_some() { "picard" } else { "plane" }.into(),
        g: model.picard().map(|p| format_poly(p.g(), &["x"], k.params())),
        equation: format_poly(c.f(), &["x", "y"], k.params()),
        degree: c.degree(),
        genus: c.genus(),
    }
}

pub fn form_json(k: &ParamField, eta: &KSForm) -> FormJson {
    let chart = eta.chart();
    FormJson {
        chart: chart.to_string(),
        coeffs: eta.coeffs().iter().map(|f| ratfn(k, chart, f)).collect(),
        function: ratfn(k, chart, eta.function()),
    }
}

fn lift_json(k: &ParamField, l: &GlobalKSForm) -> LiftJson {
    LiftJson {
        omega: elems(k, &l.omega),
        on_u: form_json(k, &l.on_u),
        on_v: form_json(k, &l.on_v),
        residual: l.residual.iter().map(|r| ratfn(k, ChartTag::U, r)).collect(),
    }
}

pub fn path_name(p: Path) -> &'static str {
    match p {
        Path::Picard => "picard",
        Path::Generic => "generic",
    }
}

pub fn report_json(command: &str, k: &ParamField, model: &CurveModel, r: &KSReport, full: bool) -> ReportJson {
    let d = model.plane().degree();
    ReportJson {
        schema: SCHEMA.into(),
        command: command.into(),
        field: field_json(k),
        curve: curve_json(k, model),
        path: path_name(r.path).into(),
        genus: r.genus,
        rank: r.rank,
        h0_tau: r.h0_tau,
        manin_abs_dim: r.manin_abs_dim,
        isotrivial: r.isotrivial,
        new_forms_exist: r.new_forms_exist,
        picard: r.picard.as_ref().map(|p| PicardJson {
            a: k.format(&p.a),
            b: k.format(&p.b),
            unit: k.format(&p.unit),
        }),
        kernel: r.liftable_basis.iter().map(|v| elems(k, v)).collect(),
        full: full.then(|| FullJson {
            omega_basis: h0_omega_basis(d).iter().map(ToString::to_string).collect(),
            h1_basis: h1_basis(d).iter().map(ToString::to_string).collect(),
            matrix: r.matrix.entries.iter().map(|row| elems(k, row)).collect(),
            lifts: r.lifts.iter().map(|l| lift_json(k, l)).collect(),
        }),
    }
}

fn field_line(f: &FieldJson) -> String {
    let mut s = if f.params.is_empty() {
        "Q".to_string()
    } else {
        format!("Q({})", f.params.join(", "))
    };
    for d in &f.derivatives {
        let _ = write!(s, ", δ({}) = {}", d.param, d.value);
    }
    s
}

fn curve_line(c: &CurveJson) -> String {
    match &c.g {
        Some(g) => format!("y^3 = {g}"),
        None => format!("{} = 0", c.equation),
    }
}

fn header(out: &mut String, field: &FieldJson, curve: &CurveJson) {
    let _ = writeln!(out, "curve: {}", curve_line(curve));
    let _ = writeln!(out, "field: {}", field_line(field));
    let _ = writeln!(out, "degree: {}, genus: {}", curve.degree, curve.genus);
}

fn form_text(f: &FormJson) -> String {
    let vars = if f.chart == "U" { ["x", "y"] } else { ["s", "t"] };
    let mut parts: Vec<String> = f
        .coeffs
        .iter()
        .zip(vars)
        .filter(|(c, _)| c.as_str() != "0")
        .map(|(c, v)| format!("({c})·d^τ{v}"))
        .collect();
    if f.function != "0" || parts.is_empty() {
        parts.push(format!("({})", f.function));
    }
    format!("[{}] {}", f.chart, parts.join(" + "))
}

fn vector(v: &[String]) -> String {
    format!("[{}]", v.join(", "))
}

impl ReportJson {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.field, &self.curve);
        let _ = writeln!(out, "path: {}", self.path);
        let _ = writeln!(out, "rank: {}", self.rank);
        let _ = writeln!(out, "h0_tau: {}", self.h0_tau);
        let _ = writeln!(out, "manin_abs_dim: {}", self.manin_abs_dim);
        let _ = writeln!(out, "isotrivial: {}", self.isotrivial);
        let nf = match self.new_forms_exist {
            Some(b) => b.to_string(),
            None => "unknown (pass --simple-jacobian)".into(),
        };
        let _ = writeln!(out, "new_forms_exist: {nf}");
        if let Some(p) = &self.picard {
            let _ = writeln!(out, "A: {}", p.a);
            let _ = writeln!(out, "B: {}", p.b);
            let _ = writeln!(out, "unit: {}", p.unit);
        }
        let _ = writeln!(out, "kernel:");
        for v in &self.kernel {
            let _ = writeln!(out, "  {}", vector(v));
        }
        if let Some(f) = &self.full {
            let _ = writeln!(out, "matrix (columns {}):", f.h1_basis.join(", "));
            for (label, row) in f.omega_basis.iter().zip(&f.matrix) {
                let _ = writeln!(out, "  {label}: {}", vector(row));
            }
            for (i, l) in f.lifts.iter().enumerate() {
                let _ = writeln!(out, "lift {}: omega {}", i + 1, vector(&l.omega));
                let _ = writeln!(out, "  {}", form_text(&l.on_u));
                let _ = writeln!(out, "  {}", form_text(&l.on_v));
                let _ = writeln!(out, "  residual: {}", vector(&l.residual));
            }
        }
        out
    }
}

impl CohomologyJson {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.field, &self.curve);
        let _ = writeln!(out, "H^1(O) basis: {}", self.h1_basis.join(", "));
        let _ = writeln!(out, "H^0(Ω^1) basis: {}", self.omega_basis.join(", "));
        for c in &self.certificates {
            let _ = writeln!(out, "certificate on {}:", c.chart);
            for (g, q) in c.generators.iter().zip(&c.cofactors) {
                let _ = writeln!(out, "  ({q}) * ({g})");
            }
        }
        match &self.cocycle {
            Some(c) => {
                let _ = writeln!(out, "KS cocycle: D12(x) = {}, D12(y) = {}", c.dx, c.dy);
                let _ = writeln!(out, "  pairing with w00: {}", c.pairing);
                let _ = writeln!(out, "  projection: {}", vector(&c.projection));
            }
            None => {
                let _ = writeln!(out, "KS cocycle: unavailable (derivative table incomplete)");
            }
        }
        for e in &self.elements {
            let _ = writeln!(out, "element {}:", e.input);
            let _ = writeln!(out, "  normal form: {}", e.normal_form);
            let _ = writeln!(out, "  projection: {}", vector(&e.projection));
            let _ = writeln!(out, "  coboundary: {}", e.coboundary);
        }
        out
    }
}

impl OdeJson {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.field, &self.curve);
        let _ = writeln!(out, "mode: {}", self.mode);
        if self.sections.is_empty() {
            let _ = writeln!(out, "no sections");
        }
        for s in &self.sections {
            let _ = writeln!(out, "section from {}: {}", s.source, form_text(&s.form));
            let (x, y) = if s.chart == "U" { ("x", "y") } else { ("s", "t") };
            let _ = writeln!(out, "  {x}' = {}", s.x_dot);
            let _ = writeln!(out, "  {y}' = {}", s.y_dot);
            let _ = writeln!(
                out,
                "  residuals: tangency {}, form {} ({})",
                s.tangency_residual,
                s.form_residual,
                if s.verified { "verified" } else { "FAILED" }
            );
        }
        out
    }
}

impl CmJson {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "g: {}, e: {}, m: {}", self.g, self.e, self.m);
        if let Some(t) = &self.shimura_type {
            let pairs: Vec<String> = t.iter().map(|[r, s]| format!("({r},{s})")).collect();
            let _ = writeln!(out, "type: {}", pairs.join(" "));
        }
        if let Some(b) = self.ks_rank_bound {
            let _ = writeln!(out, "ks_rank_bound: {b}");
        }
        if let Some(d) = self.moduli_dimension {
            let _ = writeln!(out, "moduli_dimension: {d}");
        }
        match &self.window {
            Some(w) => {
                let _ = writeln!(out, "window: {} <= rank <= {}", w.lo, w.hi);
            }
            None => {
                let _ = writeln!(out, "window: none (m = {} is even)", self.m);
            }
        }
        out
    }
}
