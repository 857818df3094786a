//! Versioned JSON envelope for every report.
//!
//! Reports carry no timings or paths, so identical inputs and seeds give
//! byte-identical output.

use serde::Serialize;

use crate::error::Result;
use crate::root_system::RootDatum;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    #[serde(rename = "type")]
    pub type_tag: String,
    pub p: u32,
    pub r: u32,
    pub seed: u64,
    pub sign_convention: &'static str,
    pub root_order_hash: String,
    pub passed: bool,
    pub body: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, datum: &RootDatum, p: u32, r: u32, seed: u64, passed: bool, body: T) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            type_tag: datum.type_tag().to_string(),
            p,
            r,
            seed,
            sign_convention: datum.sign_convention_id(),
            root_order_hash: datum.root_order_hash(),
            passed,
            body,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
