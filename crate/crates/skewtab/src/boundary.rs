//! JSON input for the `integrate` subcommand.
//!
//! ```json
//! {
//!   "omega": [[0, 2], [2, 2]],
//!   "pi": [[0, 1], [1, 1], [1, 0], [2, 0]],
//!   "integrand": { "kind": "log-hook" }
//! }
//! ```
//!
//! `omega` and `pi` are breakpoint lists of the upper and lower boundary
//! over a common interval `[0, a]`; a repeated `x` is a vertical drop.
//! `integrand` defaults to `log-hook`.

use serde::{Deserialize, Serialize};
use skewtab_core::asymptotics::{
    hook_integral, integrate_region, PiecewiseLinear, Quadrature, StableShape,
};
use skewtab_core::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Integrand {
    /// `log ℏ(x, y)`, the scaled hook of the region.
    #[default]
    LogHook,
    /// `log(c + x + y)`.
    LogSum { c: f64 },
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundarySpec {
    pub omega: Vec<(f64, f64)>,
    pub pi: Vec<(f64, f64)>,
    #[serde(default)]
    pub integrand: Integrand,
}

impl BoundarySpec {
    /// Parses the JSON text. Syntax errors are reported with the byte
    /// offset of the offending token.
    pub fn parse(text: &str) -> Result<BoundarySpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: byte_offset(text, e.line(), e.column()),
            message: format!("boundary spec: {e}"),
        })
    }

    pub fn region(&self) -> Result<StableShape> {
        StableShape::new(
            PiecewiseLinear::new(self.omega.clone())?,
            PiecewiseLinear::new(self.pi.clone())?,
        )
    }

    pub fn integrate(&self, grid: usize) -> Result<(StableShape, Quadrature)> {
        let region = self.region()?;
        let q = match self.integrand {
            Integrand::LogHook => hook_integral(&region, grid)?,
            Integrand::LogSum { c } => integrate_region(&region, |x, y| (c + x + y).ln(), grid)?,
        };
        Ok((region, q))
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_integrand_is_the_hook() {
        let spec = BoundarySpec::parse(r#"{"omega": [[0,1],[1,1]], "pi": [[0,0],[1,0]]}"#).unwrap();
        assert_eq!(spec.integrand, Integrand::LogHook);
        let (region, q) = spec.integrate(128).unwrap();
        assert!((region.area() - 1.0).abs() < 1e-12);
        assert!((q.value - skewtab_core::asymptotics::c1()).abs() < 1e-3);
    }

    #[test]
    fn log_sum_integrand() {
        let spec = BoundarySpec::parse(
            r#"{"omega": [[0,1],[1,1]], "pi": [[0,0],[1,0]], "integrand": {"kind": "log-sum", "c": 1}}"#,
        )
        .unwrap();
        let (_, q) = spec.integrate(256).unwrap();
        assert!((q.value - skewtab_core::asymptotics::c2()).abs() < 1e-5);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = BoundarySpec::parse("{\"omega\": [[0,1]],\n \"pi\": x}").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 26),
            other => panic!("{other:?}"),
        }
    }
}
