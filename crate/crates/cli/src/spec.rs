//! Function specifications: the TOML documents the CLI reads.
//!
//! ```toml
//! family = "beta"
//! alpha = 3.0
//! beta = 2.0
//! n = 2001        # optional sample count
//! ```

use std::path::Path;

use fuzzy_prior::{Density, GridFunction, Interval, Likelihood, Membership, DEFAULT_GRID_SIZE};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A named function family or an explicit grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Constant shape on `domain` (default `[0, 1]`).
    Uniform {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
    },
    /// Beta kernel on `[0, 1]`, scaled to a unit peak; `alpha, beta >= 1`.
    Beta { alpha: f64, beta: f64 },
    /// Tent rising from `left` to 1 at `mode` and back to 0 at `right`.
    Triangular { left: f64, mode: f64, right: f64 },
    /// The cubic `6.075 θ² (1 - θ)` on `[0, 1]`, peaking at 0.9.
    PolyEq9,
    /// `θ^successes (1 - θ)^failures` on `[0, 1]`.
    BinomialLikelihood { successes: u32, failures: u32 },
    /// `exp(-(θ - center)² / (2 width²))` on `domain` (default `[0, 1]`).
    GaussianLikelihood {
        center: f64,
        width: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
    },
    /// Explicit samples on a uniform grid over `domain`.
    Grid { domain: [f64; 2], values: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

fn allowed_fields(family: &str) -> Option<&'static [&'static str]> {
    Some(match family {
        "uniform" => &["domain"],
        "beta" => &["alpha", "beta"],
        "triangular" => &["left", "mode", "right"],
        "poly_eq9" => &[],
        "binomial_likelihood" => &["successes", "failures"],
        "gaussian_likelihood" => &["center", "width", "domain"],
        "grid" => &["domain", "values"],
        _ => return None,
    })
}

fn invalid(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Validation(format!("field `{field}`: {msg}"))
}

impl FunctionSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let table: toml::Table =
            toml::from_str(text).map_err(|e| CliError::Validation(format!("parse error: {e}")))?;
        let family = match table.get("family") {
            Some(toml::Value::String(s)) => s.clone(),
            Some(_) => return Err(invalid("family", "must be a string")),
            None => return Err(invalid("family", "missing")),
        };
        let allowed = allowed_fields(&family)
            .ok_or_else(|| invalid("family", format!("unknown family `{family}`")))?;
        for key in table.keys() {
            if key != "family" && key != "n" && !allowed.contains(&key.as_str()) {
                return Err(invalid(key, format!("not a field of family `{family}`")));
            }
        }
        let spec: FunctionSpec = table.try_into().map_err(|e: toml::de::Error| {
            CliError::Validation(format!("family `{family}`: {e}"))
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        FunctionSpec::parse(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("function specs serialize")
    }

    fn validate(&self) -> Result<(), CliError> {
        if let Some(n) = self.n {
            if n < 3 || n.is_multiple_of(2) {
                return Err(invalid("n", format!("{n} must be odd and at least 3")));
            }
        }
        let check_domain = |field: &str, d: &[f64; 2]| {
            Interval::new(d[0], d[1])
                .map(|_| ())
                .map_err(|_| invalid(field, format!("[{}, {}] needs finite lo < hi", d[0], d[1])))
        };
        match &self.family {
            Family::Uniform { domain } => {
                if let Some(d) = domain {
                    check_domain("domain", d)?;
                }
            }
            Family::Beta { alpha, beta } => {
                for (name, v) in [("alpha", alpha), ("beta", beta)] {
                    if !(v.is_finite() && *v >= 1.0) {
                        return Err(invalid(
                            name,
                            format!("{v} must be finite and >= 1 (smaller values are unbounded)"),
                        ));
                    }
                }
            }
            Family::Triangular { left, mode, right } => {
                if ![left, mode, right].iter().all(|v| v.is_finite()) {
                    return Err(invalid("left/mode/right", "must be finite"));
                }
                if !(left < right) {
                    return Err(invalid(
                        "right",
                        format!("{right} must exceed left = {left}"),
                    ));
                }
                if !(left <= mode && mode <= right) {
                    return Err(invalid(
                        "mode",
                        format!("{mode} must lie in [{left}, {right}]"),
                    ));
                }
            }
            Family::PolyEq9 | Family::BinomialLikelihood { .. } => {}
            Family::GaussianLikelihood {
                center,
                width,
                domain,
            } => {
                if !center.is_finite() {
                    return Err(invalid("center", "must be finite"));
                }
                if !(width.is_finite() && *width > 0.0) {
                    return Err(invalid(
                        "width",
                        format!("{width} must be finite and positive"),
                    ));
                }
                if let Some(d) = domain {
                    check_domain("domain", d)?;
                }
            }
            Family::Grid { domain, values } => {
                check_domain("domain", domain)?;
                if values.len() < 3 || values.len().is_multiple_of(2) {
                    return Err(invalid(
                        "values",
                        format!("{} samples; need an odd count of at least 3", values.len()),
                    ));
                }
                if let Some(k) = values.iter().position(|v| !v.is_finite()) {
                    return Err(invalid("values", format!("entry {k} is not finite")));
                }
                if let Some(n) = self.n {
                    if n != values.len() {
                        return Err(invalid(
                            "n",
                            format!("{n} disagrees with the {} listed values", values.len()),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Sample count to use: a grid's own length, else the command-line
    /// override, else the document's `n`, else the default.
    pub fn resolve_n(&self, flag: Option<usize>) -> Result<usize, CliError> {
        match &self.family {
            Family::Grid { values, .. } => match flag {
                Some(n) if n != values.len() => Err(invalid(
                    "values",
                    format!("grid has {} samples but --grid asks for {n}", values.len()),
                )),
                _ => Ok(values.len()),
            },
            _ => {
                let n = flag.or(self.n).unwrap_or(DEFAULT_GRID_SIZE);
                if n < 3 || n.is_multiple_of(2) {
                    return Err(CliError::Validation(format!(
                        "grid size {n} must be odd and at least 3"
                    )));
                }
                Ok(n)
            }
        }
    }

    pub fn domain(&self) -> Interval {
        let unit = Interval::unit();
        let from = |d: &Option<[f64; 2]>| {
            d.map(|[lo, hi]| Interval::new(lo, hi).expect("validated"))
                .unwrap_or(unit)
        };
        match &self.family {
            Family::Uniform { domain } | Family::GaussianLikelihood { domain, .. } => from(domain),
            Family::Triangular { left, right, .. } => {
                Interval::new(*left, *right).expect("validated")
            }
            Family::Grid { domain, .. } => Interval::new(domain[0], domain[1]).expect("validated"),
            Family::Beta { .. } | Family::PolyEq9 | Family::BinomialLikelihood { .. } => unit,
        }
    }

    /// The family's shape sampled on `n` points.
    pub fn shape(&self, n: usize) -> Result<GridFunction, CliError> {
        let domain = self.domain();
        let sampled = match &self.family {
            Family::Uniform { .. } => GridFunction::constant(domain, n, 1.0),
            Family::Beta { alpha, beta } => {
                let (a, b) = (alpha - 1.0, beta - 1.0);
                let mode = if a + b > 0.0 { a / (a + b) } else { 0.5 };
                let kernel = |x: f64| x.powf(a) * (1.0 - x).powf(b);
                let peak = kernel(mode);
                GridFunction::from_fn(domain, n, |x| (kernel(x) / peak).min(1.0))
            }
            Family::Triangular { left, mode, right } => {
                let (l, c, r) = (*left, *mode, *right);
                GridFunction::from_fn(domain, n, |x| {
                    if x == c {
                        1.0
                    } else if x < c {
                        (x - l) / (c - l)
                    } else {
                        (r - x) / (r - c)
                    }
                })
            }
            Family::PolyEq9 => GridFunction::from_fn(domain, n, fuzzy_prior::gallery::eq9_value),
            Family::BinomialLikelihood {
                successes,
                failures,
            } => Likelihood::binomial(*successes, *failures, n).map(|l| l.grid().clone()),
            Family::GaussianLikelihood { center, width, .. } => {
                Likelihood::gaussian(domain, n, *center, *width).map(|l| l.grid().clone())
            }
            Family::Grid { values, .. } => GridFunction::new(domain, values.clone()),
        };
        sampled.map_err(|e| CliError::Validation(e.to_string()))
    }

    /// The function read as a prior density. Named families are normalized;
    /// explicit grids must already integrate to 1.
    pub fn density(&self, n: usize) -> Result<Density, CliError> {
        let shape = self.shape(n)?;
        let density = match self.family {
            Family::Grid { .. } => Density::new(shape),
            _ => Density::normalize(shape),
        };
        density.map_err(|e| CliError::Validation(format!("not a prior density: {e}")))
    }

    /// The function read as a membership; every sample must lie in `[0, 1]`.
    pub fn membership(&self, n: usize) -> Result<Membership, CliError> {
        Membership::new(self.shape(n)?)
            .map_err(|e| CliError::Validation(format!("not a membership function: {e}")))
    }

    pub fn likelihood(&self, n: usize) -> Result<Likelihood, CliError> {
        Likelihood::new(self.shape(n)?)
            .map_err(|e| CliError::Validation(format!("not a likelihood: {e}")))
    }
}
