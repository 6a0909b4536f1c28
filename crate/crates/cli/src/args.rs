use std::ops::RangeInclusive;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use zetakit::catalog::{CatalogModel, ModelSpec};
use zetakit::series::{ContourParams, DEFAULT_QUAD_TOL};
use zetakit::Complex;

pub const QUAD_TOL_ENV: &str = "ZETAKIT_QUAD_TOL";

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// riemann, hurwitz, airy, pcf, chf, or a JSON spec like {"model":"chf","a":0.5,"b":1.5}
    #[arg(long)]
    pub model: Option<String>,
    /// First parameter (Hurwitz a, parabolic cylinder a, confluent a)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Second parameter (confluent b)
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
}

impl ModelArgs {
    /// The requested model, `default` when --model is absent.
    pub fn spec_or(&self, default: &str) -> Result<ModelSpec> {
        let name = self.model.as_deref().unwrap_or(default).trim();
        if name.starts_with('{') {
            if self.a.is_some() || self.b.is_some() {
                bail!("--a/--b cannot be combined with a JSON model spec");
            }
            return serde_json::from_str(name).context("invalid model JSON");
        }
        let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| anyhow!("model {name} needs --{flag}"));
        let unused = |ok_a: bool, ok_b: bool| -> Result<()> {
            if (!ok_a && self.a.is_some()) || (!ok_b && self.b.is_some()) {
                bail!("model {name} takes no such parameter");
            }
            Ok(())
        };
        Ok(match name {
            "riemann" => {
                unused(false, false)?;
                ModelSpec::Riemann
            }
            "airy" => {
                unused(false, false)?;
                ModelSpec::Airy
            }
            "hurwitz" => {
                unused(true, false)?;
                ModelSpec::Hurwitz { a: need(self.a, "a")? }
            }
            "pcf" => {
                unused(true, false)?;
                ModelSpec::Pcf { a: need(self.a, "a")? }
            }
            "chf" => ModelSpec::Chf { a: need(self.a, "a")?, b: need(self.b, "b")? },
            other => bail!("unknown model {other:?} (riemann, hurwitz, airy, pcf, chf)"),
        })
    }

    pub fn spec(&self) -> Result<ModelSpec> {
        self.spec_or("riemann")
    }

    pub fn build_or(&self, default: &str) -> Result<(ModelSpec, CatalogModel)> {
        let spec = self.spec_or(default)?;
        let model = spec.build().map_err(|e| anyhow!("{e}"))?;
        Ok((spec, model))
    }
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Radius of the circle around the origin (default |a₁|/2)
    #[arg(long = "R")]
    pub r: Option<f64>,
    /// End of the quadrature ray
    #[arg(long)]
    pub tmax: Option<f64>,
    /// Absolute quadrature tolerance per segment (else $ZETAKIT_QUAD_TOL, else 1e-10)
    #[arg(long)]
    pub tol: Option<f64>,
}

/// Quadrature tolerance from the environment, if set.
pub fn env_quad_tol() -> Result<Option<f64>> {
    match std::env::var(QUAD_TOL_ENV) {
        Ok(v) => {
            let tol: f64 = v.trim().parse().with_context(|| format!("{QUAD_TOL_ENV}={v:?} is not a number"))?;
            if !(tol > 0.0) {
                bail!("{QUAD_TOL_ENV} must be positive");
            }
            Ok(Some(tol))
        }
        Err(_) => Ok(None),
    }
}

impl QuadArgs {
    pub fn params(&self, model: &CatalogModel) -> Result<ContourParams> {
        let mut p = ContourParams::for_model(model);
        if let Some(r) = self.r {
            p.r = r;
        }
        if let Some(t) = self.tmax {
            p = p.with_t_max(t);
        }
        let tol = match self.tol {
            Some(t) => t,
            None => env_quad_tol()?.unwrap_or(DEFAULT_QUAD_TOL),
        };
        Ok(p.with_tol(tol))
    }
}

/// Accepts `5`, `1..5` (inclusive), `-9..-1`, and comma lists of these.
pub fn parse_int_ranges(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse_int(a)?, parse_int(b)?);
                if a > b {
                    bail!("empty range {part}");
                }
                out.extend(a..=b);
            }
            None => out.push(parse_int(part)?),
        }
    }
    if out.is_empty() {
        bail!("no integers in {text:?}");
    }
    Ok(out)
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().with_context(|| format!("{s:?} is not an integer"))
}

/// `lo..hi` with lo < hi.
pub fn parse_interval(text: &str) -> Result<RangeInclusive<f64>> {
    let (a, b) = text.split_once("..").ok_or_else(|| anyhow!("expected lo..hi, got {text:?}"))?;
    let lo: f64 = a.trim().parse().with_context(|| format!("{a:?} is not a number"))?;
    let hi: f64 = b.trim().parse().with_context(|| format!("{b:?} is not a number"))?;
    if !(lo < hi) {
        bail!("interval {text:?} is empty");
    }
    Ok(lo..=hi)
}

/// `2`, `-0.5`, `1.5+2i`, `3i`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    text.trim()
        .replace(' ', "")
        .parse::<Complex>()
        .map_err(|_| anyhow!("{text:?} is not a complex number (e.g. 2, -0.5, 1.5+2i)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_int_ranges("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(parse_int_ranges("-3..-1,2").unwrap(), vec![-3, -2, -1, 2]);
        assert_eq!(parse_int_ranges("-1").unwrap(), vec![-1]);
        assert!(parse_int_ranges("5..1").is_err());
        assert!(parse_int_ranges("x").is_err());
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("-0.5").unwrap(), Complex::new(-0.5, 0.0));
        assert_eq!(parse_complex("1.5+2i").unwrap(), Complex::new(1.5, 2.0));
        assert_eq!(parse_complex("3i").unwrap(), Complex::new(0.0, 3.0));
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn model_specs() {
        let m = |model: &str, a, b| ModelArgs { model: Some(model.into()), a, b };
        assert_eq!(m("chf", Some(0.5), Some(1.5)).spec().unwrap(), ModelSpec::Chf { a: 0.5, b: 1.5 });
        assert_eq!(m(r#"{"model":"pcf","a":1.0}"#, None, None).spec().unwrap(), ModelSpec::Pcf { a: 1.0 });
        assert!(m("hurwitz", None, None).spec().is_err());
        assert!(m("riemann", Some(1.0), None).spec().is_err());
        assert!(m("zeta", None, None).spec().is_err());
    }
}
