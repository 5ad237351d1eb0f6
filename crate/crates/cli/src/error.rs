use std::io;
use std::path::PathBuf;

use steiner_core::catalog::CatalogError;
use steiner_core::format::FormatError;
use steiner_core::{AdcError, NuError, PolygraphError, RoundtripError, ZlinError};
use thiserror::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_NEGATIVE: u8 = 4;
pub const EXIT_RESOURCE: u8 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Polygraph(#[from] PolygraphError),
    #[error(transparent)]
    Adc(#[from] AdcError),
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
    #[error(transparent)]
    Roundtrip(#[from] RoundtripError),
}

fn zlin_is_resource(e: &ZlinError) -> bool {
    matches!(e, ZlinError::Overflow | ZlinError::Torsion { .. })
}

fn adc_is_resource(e: &AdcError) -> bool {
    matches!(e, AdcError::Zlin(z) if zlin_is_resource(z))
}

fn nu_is_resource(e: &NuError) -> bool {
    match e {
        NuError::EnumCap { .. } => true,
        NuError::Zlin(z) => zlin_is_resource(z),
        NuError::Adc(a) => adc_is_resource(a),
        _ => false,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        let resource = match self {
            CliError::Polygraph(PolygraphError::Nu(e)) | CliError::Nu(e) | CliError::Roundtrip(RoundtripError::Nu(e)) => {
                nu_is_resource(e)
            }
            CliError::Polygraph(PolygraphError::Zlin(e)) | CliError::Zlin(e) | CliError::Roundtrip(RoundtripError::Zlin(e)) => {
                zlin_is_resource(e)
            }
            CliError::Polygraph(PolygraphError::Adc(e)) | CliError::Adc(e) | CliError::Roundtrip(RoundtripError::Adc(e)) => {
                adc_is_resource(e)
            }
            _ => false,
        };
        if resource {
            return EXIT_RESOURCE;
        }
        match self {
            CliError::Catalog(_) | CliError::Write { .. } => EXIT_USAGE,
            CliError::Read { .. } => EXIT_INPUT,
            CliError::Format(FormatError::Validation { .. }) => EXIT_VALIDATION,
            CliError::Format(_) => EXIT_INPUT,
            _ => EXIT_VALIDATION,
        }
    }
}
