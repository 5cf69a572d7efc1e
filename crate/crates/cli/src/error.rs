use std::fmt;
use std::process::ExitCode;

use ksforms::algebra::{AlgebraError, ParamField};
use ksforms::certificates::CertificateError;
use ksforms::cm::CmError;
use ksforms::curve::CurveError;
use ksforms::engine::EngineError;
use ksforms::jet::JetError;
use ksforms::ode::OdeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// The input is well formed but the mathematics says no.
    Rejected,
    ResourceLimit,
    Input,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: Kind::Input,
            message: message.into(),
        }
    }

    pub fn rejected(message: impl Into<String>) -> Self {
        CliError {
            kind: Kind::Rejected,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self.kind {
            Kind::Rejected => 1,
            Kind::ResourceLimit => 2,
            Kind::Input => 3,
        })
    }

    /// Like the `From` impl, but renders lifting obstructions with the
    /// field's parameter names.
    pub fn engine(e: EngineError, field: &ParamField) -> Self {
        match e {
            EngineError::NotLiftable(coords) => {
                let shown: Vec<String> = coords.iter().map(|c| field.format(c)).collect();
                CliError::rejected(format!(
                    "form does not lift: KS cup ω has H^1 coordinates [{}]",
                    shown.join(", ")
                ))
            }
            other => other.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<CertificateError> for CliError {
    fn from(e: CertificateError) -> Self {
        match e {
            CertificateError::ResourceLimit { .. } => CliError {
                kind: Kind::ResourceLimit,
                message: format!(
                    "{e} while searching for a unit certificate (raise KSFORMS_MAX_REDUCTIONS or KSFORMS_MAX_DEGREE)"
                ),
            },
            CertificateError::Algebra(a) => a.into(),
            CertificateError::EmptyInput | CertificateError::BothZero | CertificateError::NotUnivariate(_) => {
                CliError::input(e.to_string())
            }
            CertificateError::NotCoprime { .. } | CertificateError::NotUnitIdeal | CertificateError::InvalidCertificate => {
                CliError::rejected(e.to_string())
            }
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Certificate(c) => c.into(),
            CurveError::Algebra(a) => a.into(),
            CurveError::NotMonicInX | CurveError::NotPicard(_) => CliError::input(e.to_string()),
            CurveError::Singular(_)
            | CurveError::NotCoprime(_)
            | CurveError::NotInOverlapRing
            | CurveError::NonzeroClass(_) => CliError::rejected(e.to_string()),
        }
    }
}

impl From<JetError> for CliError {
    fn from(e: JetError) -> Self {
        match e {
            JetError::Curve(c) => c.into(),
            JetError::Algebra(a) => a.into(),
            other => CliError::rejected(other.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Curve(c) => c.into(),
            EngineError::Jet(j) => j.into(),
            EngineError::Algebra(a) => a.into(),
            EngineError::NotPicard => CliError::input(e.to_string()),
            EngineError::NotLiftable(_) | EngineError::OverlapMismatch => CliError::rejected(e.to_string()),
        }
    }
}

impl From<OdeError> for CliError {
    fn from(e: OdeError) -> Self {
        match e {
            OdeError::Jet(j) => j.into(),
            OdeError::Curve(c) => c.into(),
            OdeError::Algebra(a) => a.into(),
            OdeError::DegenerateForm | OdeError::NotConstantCoefficients => CliError::rejected(e.to_string()),
        }
    }
}

impl From<CmError> for CliError {
    fn from(e: CmError) -> Self {
        CliError::input(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ksforms::curve::ChartTag;

    #[test]
    fn classification() {
        let singular: CliError = EngineError::Curve(CurveError::Singular(ChartTag::V)).into();
        assert_eq!(singular.kind, Kind::Rejected);
        assert!(singular.message.contains("chart V"));
        let limit: CliError = CurveError::Certificate(CertificateError::ResourceLimit {
            what: "reduction steps",
            limit: 5,
        })
        .into();
        assert_eq!(limit.kind, Kind::ResourceLimit);
        let unknown: CliError = JetError::Algebra(AlgebraError::UnknownSymbol("q".into())).into();
        assert_eq!(unknown.kind, Kind::Input);
        assert_eq!(CliError::from(CmError::NotDivisible { g: 4, e: 3 }).kind, Kind::Input);
    }
}
