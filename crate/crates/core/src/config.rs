//! Run configuration shared by the command-line front end and the tests.

use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{TypeTag, Weight};
use crate::scalar::is_prime;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub type_tag: TypeTag,
    pub p: u32,
    pub r: u32,
    pub command: String,
    pub lambda: Option<Weight>,
    pub mu: Option<Weight>,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: &str, type_tag: TypeTag, p: u32, r: u32) -> Self {
        RunConfig {
            type_tag,
            p,
            r,
            command: command.to_string(),
            lambda: None,
            mu: None,
            cache_dir: None,
            seed: DEFAULT_SEED,
            output_path: None,
            format: Format::Table,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_envelope(self.type_tag, self.p, self.r)?;
        let rank = crate::root_system::root_datum(self.type_tag).rank();
        for w in self.lambda.iter().chain(&self.mu) {
            if w.rank() != rank {
                return Err(Error::InvalidArgument(format!("weight {w} has {} coordinates, {} expects {rank}", w.rank(), self.type_tag)));
            }
        }
        Ok(())
    }
}

/// A1 with `p <= 7, r <= 2` and A2 with `p <= 3, r = 1`.
pub fn check_envelope(type_tag: TypeTag, p: u32, r: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ok = match type_tag {
        TypeTag::A1 => p <= 7 && (1..=2).contains(&r),
        TypeTag::A2 => p <= 3 && r == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfEnvelope(format!("{type_tag} with p = {p}, r = {r} (supported: A1 p<=7 r<=2, A2 p<=3 r=1)")))
    }
}

/// Parses `"1,-2"` into a weight.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let coords: std::result::Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match coords {
        Ok(c) if !c.is_empty() => Ok(Weight::new(&c)),
        _ => Err(Error::InvalidArgument(format!("cannot parse weight `{s}`"))),
    }
}
