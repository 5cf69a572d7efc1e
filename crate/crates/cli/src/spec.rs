//! Curve specification files and their command-line equivalent.

use std::collections::BTreeMap;

use ksforms::algebra::parse::{parse_expr, parse_field_elem, parse_poly};
use ksforms::algebra::ParamField;
use ksforms::certificates::GroebnerConfig;
use ksforms::curve::{PicardCurve, PlaneCurve};
use ksforms::engine::{CurveModel, Path};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    #[serde(default)]
    pub field: FieldBlock,
    pub curve: CurveBlock,
    #[serde(default)]
    pub options: OptionsBlock,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldBlock {
    pub params: Option<Vec<String>>,
    #[serde(default)]
    pub derivatives: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    #[default]
    Picard,
    Plane,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Picard => "picard",
            CurveKind::Plane => "plane",
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveBlock {
    pub kind: CurveKind,
    pub g: Option<String>,
    pub f: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum PathChoice {
    Picard,
    Generic,
}

impl From<PathChoice> for Path {
    fn from(p: PathChoice) -> Self {
        match p {
            PathChoice::Picard => Path::Picard,
            PathChoice::Generic => Path::Generic,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsBlock {
    pub path: Option<PathChoice>,
    #[serde(default)]
    pub simple_jacobian: bool,
    pub max_reductions: Option<usize>,
    pub max_degree: Option<i32>,
}

/// A spec resolved into engine values.
pub struct Loaded {
    pub spec: CurveSpec,
    pub field: ParamField,
    pub model: CurveModel,
    pub config: GroebnerConfig,
}

impl CurveSpec {
    pub fn from_toml(src: &str) -> Result<Self, CliError> {
        toml::from_str(src).map_err(|e| CliError::input(format!("invalid curve spec: {e}")))
    }

    /// `--deriv p=v` arguments.
    pub fn add_derivatives(&mut self, args: &[String]) -> Result<(), CliError> {
        for a in args {
            let (p, v) = a
                .split_once('=')
                .ok_or_else(|| CliError::input(format!("--deriv expects param=value, got '{a}'")))?;
            self.field.derivatives.insert(p.trim().to_string(), v.trim().to_string());
        }
        Ok(())
    }

    fn equation(&self) -> Result<&str, CliError> {
        let (want, other, name, bad) = match self.curve.kind {
            CurveKind::Picard => (&self.curve.g, &self.curve.f, "g", "f"),
            CurveKind::Plane => (&self.curve.f, &self.curve.g, "f", "g"),
        };
        if other.is_some() {
            return Err(CliError::input(format!("curve kind {} takes '{name}', not '{bad}'", self.curve.kind.name())));
        }
        want.as_deref()
            .ok_or_else(|| CliError::input(format!("curve block is missing '{name}'")))
    }

    /// Declared params, or every non-variable symbol in order of first
    /// appearance: the curve equation, then the derivative table by key.
    pub fn params(&self) -> Result<Vec<String>, CliError> {
        if let Some(p) = &self.field.params {
            return Ok(p.clone());
        }
        let mut out: Vec<String> = Vec::new();
        let mut sources = vec![self.equation()?];
        for (k, v) in &self.field.derivatives {
            sources.push(k);
            sources.push(v);
        }
        for src in sources {
            for s in parse_expr(src)?.symbols() {
                if s != "x" && s != "y" && !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> Result<ParamField, CliError> {
        let mut k = ParamField::new(self.params()?)?;
        for (p, v) in &self.field.derivatives {
            if k.index_of(p).is_none() {
                return Err(CliError::input(format!("derivative given for undeclared param '{p}'")));
            }
            let value = parse_field_elem(v, &k)?;
            k.set_derivative(p, value)?;
        }
        Ok(k)
    }

    pub fn config(&self, max_reductions: Option<usize>, max_degree: Option<i32>) -> GroebnerConfig {
        let mut c = GroebnerConfig::default();
        if let Some(n) = max_reductions.or(self.options.max_reductions) {
            c.max_reductions = n;
        }
        if let Some(n) = max_degree.or(self.options.max_degree) {
            c.max_degree = n;
        }
        c
    }

    pub fn load(self, config: GroebnerConfig) -> Result<Loaded, CliError> {
        let field = self.field()?;
        let src = self.equation()?;
        let model: CurveModel = match self.curve.kind {
            CurveKind::Picard => PicardCurve::new(field.clone(), parse_poly(src, &field, &["x"])?)?.into(),
            CurveKind::Plane => PlaneCurve::with_config(field.clone(), parse_poly(src, &field, &["x", "y"])?, &config)?.into(),
        };
        Ok(Loaded {
            spec: self,
            field,
            model,
            config,
        })
    }
}
