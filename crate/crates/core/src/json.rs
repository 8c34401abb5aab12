//! The function file format shared by every command:
//! `{"n": 3, "ones": ["110", ...], "zeros": ["000", ...]}`.

use serde::{Deserialize, Serialize};

use crate::pbf::{format_mask, parse_mask, PartialBooleanFn};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionJson {
    pub n: usize,
    pub ones: Vec<String>,
    pub zeros: Vec<String>,
}

impl FunctionJson {
    pub fn to_function(&self) -> Result<PartialBooleanFn> {
        let parse = |v: &[String]| v.iter().map(|s| parse_mask(s, self.n)).collect::<Result<Vec<_>>>();
        if self.n == 0 || self.n > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(self.n));
        }
        PartialBooleanFn::new(self.n, parse(&self.ones)?, parse(&self.zeros)?)
    }
}

impl From<&PartialBooleanFn> for FunctionJson {
    fn from(f: &PartialBooleanFn) -> Self {
        let n = f.arity();
        Self {
            n,
            ones: f.ones().iter().map(|&x| format_mask(x, n)).collect(),
            zeros: f.zeros().iter().map(|&x| format_mask(x, n)).collect(),
        }
    }
}

pub fn parse_function(text: &str) -> Result<PartialBooleanFn> {
    let raw: FunctionJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("function JSON: {e}")))?;
    raw.to_function()
}

pub fn function_to_string(f: &PartialBooleanFn) -> String {
    serde_json::to_string_pretty(&FunctionJson::from(f)).expect("serializable")
}
