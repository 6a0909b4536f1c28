use anyhow::anyhow;
use serde_json::{json, Value};
use zetakit::aaa::aaa_report;
use zetakit::asym::{PoleReport, ZeroValue};
use zetakit::catalog::{CatalogModel, ModelSpec};
use zetakit::numerics::{bernoulli_poly, ln_gamma};
use zetakit::series::{contour_zeta, continued_zeta, zeta_series, ContourParams, SERIES_MARGIN};
use zetakit::shift::{ShiftParams, ShiftedZeta};
use zetakit::taylor::log_coeffs;
use zetakit::{Complex, ZetaError};

use crate::args::{parse_complex, parse_int_ranges, parse_interval, ModelArgs, QuadArgs};
use crate::format::{cjson, fmt_complex, fmt_real, table};

/// Terms summed explicitly by the series paths.
pub const SERIES_TERMS: usize = 10_000;

/// Residues are re-derived only for poles within this distance left of α.
pub const RESIDUE_CHECK_REACH: f64 = 4.0;

/// Why a command stopped: bad input (exit 2) or a failed computation (exit 1).
#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Compute(anyhow::Error),
}

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        Failure::Compute(e.into())
    }
}

pub trait UsageExt<T> {
    fn usage(self) -> Result<T, Failure>;
}

impl<T> UsageExt<T> for anyhow::Result<T> {
    fn usage(self) -> Result<T, Failure> {
        self.map_err(Failure::Usage)
    }
}

/// Text and JSON renderings of one command, plus the items that failed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub failures: Vec<String>,
}

/// A value re-derived by another route.
struct Check {
    path: &'static str,
    value: Complex,
    reference: Complex,
}

impl Check {
    fn discrepancy(&self) -> f64 {
        (self.value - self.reference).norm()
    }

    fn json(&self) -> Value {
        json!({ "path": self.path, "value": cjson(self.value), "discrepancy": self.discrepancy() })
    }

    fn text(&self) -> String {
        format!("{} {} (Δ {:.1e})", self.path, fmt_complex(self.value), self.discrepancy())
    }
}

fn check_json(c: &Option<Check>) -> Value {
    c.as_ref().map_or(Value::Null, Check::json)
}

fn check_text(c: &Option<Check>) -> String {
    c.as_ref().map_or_else(String::new, Check::text)
}

/// ζ(s) by the zero series when it converges fast enough, else the continued form.
fn independent_value(model: &CatalogModel, s: Complex, params: &ContourParams) -> Result<(&'static str, Complex), ZetaError> {
    match model.zeros() {
        Some(z) if s.re > model.alpha() + SERIES_MARGIN => Ok(("series", zeta_series(z, s, SERIES_TERMS, model.psi())?)),
        _ => Ok(("continued", continued_zeta(model, s, params)?.value)),
    }
}

fn header(spec: &ModelSpec) -> String {
    format!("model: {}", serde_json::to_string(spec).expect("model spec serializes"))
}

pub fn values(m: &ModelArgs, n: &str, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let ns = parse_int_ranges(n).usage()?;
    let params = quad.params(&model).usage()?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    let mut failures = Vec::new();
    for n in ns {
        let v = match model.zeta_int(n) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("n = {n}: {e}"));
                continue;
            }
        };
        let cf = model.closed_form(n);
        let chk = if check {
            let s = Complex::new(n as f64, 0.0);
            match independent_value(&model, s, &params) {
                Ok((path, value)) => Some(Check { path, value, reference: v.value }),
                Err(e) => {
                    failures.push(format!("n = {n}: check failed: {e}"));
                    None
                }
            }
        } else {
            None
        };
        let method = serde_json::to_value(v.method).expect("method serializes");
        rows.push(vec![
            n.to_string(),
            fmt_complex(v.value),
            method.as_str().unwrap_or_default().to_string(),
            cf.as_ref().map_or_else(String::new, |c| c.expr.clone()),
            check_text(&chk),
        ]);
        items.push(json!({
            "n": n,
            "value": cjson(v.value),
            "method": method,
            "closed_form": cf.map_or(Value::Null, |c| json!({ "expr": c.expr, "value": cjson(c.value) })),
            "check": check_json(&chk),
        }));
    }
    let mut cols = vec!["n", "value", "method", "closed form"];
    if check {
        cols.push("check");
    } else {
        rows.iter_mut().for_each(|r| {
            r.pop();
        });
    }
    Ok(Report {
        text: format!("{}\n{}", header(&spec), table(&cols, &rows)),
        json: json!({ "command": "values", "model": spec, "items": items, "failures": failures }),
        failures,
    })
}

fn zero_value_text(z: &ZeroValue) -> String {
    match z {
        ZeroValue::Value { value } => fmt_complex(*value),
        ZeroValue::Pole { order, residue } => format!("pole of order {order}, residue {}", fmt_complex(*residue)),
        ZeroValue::Indeterminate => "indeterminate".into(),
        ZeroValue::Unavailable { reason } => format!("unavailable ({reason})"),
    }
}

fn pole_section(report: &PoleReport) -> (String, Value) {
    let rows: Vec<Vec<String>> = report
        .poles
        .iter()
        .map(|p| {
            vec![
                fmt_real(p.location),
                p.order.to_string(),
                fmt_complex(p.residue),
                if p.possible_cancellation { "possible cancellation".into() } else { String::new() },
            ]
        })
        .collect();
    let zp = report.zeta_prime0.map_or_else(|| "unavailable".into(), fmt_complex);
    let text = format!(
        "{}\nzeta(0) = {}\nzeta'(0) = {}",
        table(&["s", "order", "residue", "note"], &rows),
        zero_value_text(&report.zeta0),
        zp
    );
    let js = json!({
        "poles": report.poles,
        "zeta0": report.zeta0,
        "zeta_prime0": report.zeta_prime0.map_or(Value::Null, cjson),
    });
    (text, js)
}

pub fn poles(m: &ModelArgs, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let params = quad.params(&model).usage()?;
    let report = model.poles();
    let (mut text, mut js) = pole_section(&report);
    let mut failures = Vec::new();
    if check {
        let mut checks = Vec::new();
        let mut lines = Vec::new();
        let h = 1e-3;
        // simple poles near the strip: midpoint of (s − s₀)ζ(s) at s₀ ± h.
        // Further left the ray integrand grows like t^{-Re s} and the quadrature loses digits.
        let reach = model.alpha() - RESIDUE_CHECK_REACH;
        for p in report.poles.iter().filter(|p| p.order == 1) {
            if p.location < reach || p.location - 1.0 - h <= model.asym().strip_edge() {
                lines.push(format!("residue at {}: beyond the checked range, skipped", fmt_real(p.location)));
                continue;
            }
            let at = |d: f64| continued_zeta(&model, Complex::new(p.location + d, 0.0), &params).map(|c| c.value * d);
            match (at(-h), at(h)) {
                (Ok(a), Ok(b)) => {
                    let c = Check { path: "continued", value: (a + b) / 2.0, reference: p.residue };
                    lines.push(format!("residue at {}: {}", fmt_real(p.location), c.text()));
                    checks.push(json!({ "location": p.location, "what": "residue", "check": c.json() }));
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("residue at {}: {e}", p.location)),
            }
        }
        if let Some(z0) = report.zeta0.value() {
            match continued_zeta(&model, Complex::default(), &params) {
                Ok(c) => {
                    let c = Check { path: "continued", value: c.value, reference: z0 };
                    lines.push(format!("zeta(0): {}", c.text()));
                    checks.push(json!({ "location": 0.0, "what": "zeta0", "check": c.json() }));
                }
                Err(e) => failures.push(format!("zeta(0): {e}")),
            }
        }
        text = format!("{text}\ncheck:\n{}", lines.join("\n"));
        js["check"] = Value::Array(checks);
    } else {
        js["check"] = Value::Null;
    }
    js["command"] = json!("poles");
    js["model"] = json!(spec);
    js["failures"] = json!(failures);
    Ok(Report { text: format!("{}\n{text}", header(&spec)), json: js, failures })
}

pub fn shift(m: &ModelArgs, a: &str, b: &str, n: &str, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let (a, b) = (parse_complex(a).usage()?, parse_complex(b).usage()?);
    let ns = parse_int_ranges(n).usage()?;
    let params = ShiftParams::new(a, b).map_err(|e| Failure::Usage(e.into()))?;
    let quad_params = quad.params(&model).usage()?;
    let shift = params.shift();
    let mut failures = Vec::new();
    let ln_f0 = match model.eval(-shift) {
        Ok(v) => Some(v.ln_value()),
        Err(e) => {
            failures.push(format!("ln F(-B/A): {e}"));
            None
        }
    };
    let sz = ShiftedZeta::new(model.asym(), params, None, ln_f0);
    let logc = log_coeffs(&model.series().shifted(-shift))?;
    let report = sz.report();
    let (pole_text, mut js) = pole_section(&report);

    // Hurwitz closed forms when the base is the integers and A > 0
    let hurwitz_a = (spec == ModelSpec::Riemann && a.im == 0.0 && a.re > 0.0).then(|| 1.0 + shift);
    let shifted_zeros = model.zeros().map(|z| z.clone().affine(a, b));
    let independent = |n: i64| -> Result<Option<Check>, ZetaError> {
        let s = Complex::new(n as f64, 0.0);
        let a_pow = (-s * a.ln()).exp();
        if let (Some(h), true) = (hurwitz_a, n <= 0) {
            let k = (1 - n) as usize;
            let cf = -bernoulli_poly(k, h)? / k as f64;
            return Ok(Some(Check { path: "hurwitz-closed-form", value: a_pow * cf, reference: Complex::default() }));
        }
        match &shifted_zeros {
            Some(z) if s.re > model.alpha() + SERIES_MARGIN => Ok(Some(Check {
                path: "series",
                value: zeta_series(z, s, SERIES_TERMS, sz.psi_prime())?,
                reference: Complex::default(),
            })),
            _ => Ok(None),
        }
    };
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for n in ns {
        let v = if n == 0 {
            sz.zeta_at_zero().value().ok_or_else(|| anyhow!("{}", zero_value_text(&sz.zeta_at_zero())))
        } else {
            sz.zeta_at_int(n, Some(&logc)).map_err(anyhow::Error::from)
        };
        let v = match v {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("n = {n}: {e}"));
                continue;
            }
        };
        let chk = if check {
            match independent(n) {
                Ok(c) => c.map(|c| Check { reference: v, ..c }),
                Err(e) => {
                    failures.push(format!("n = {n}: check failed: {e}"));
                    None
                }
            }
        } else {
            None
        };
        rows.push(vec![n.to_string(), fmt_complex(v), check_text(&chk)]);
        items.push(json!({ "n": n, "value": cjson(v), "check": check_json(&chk) }));
    }
    let mut cols = vec!["n", "value"];
    if check {
        cols.push("check");
    } else {
        rows.iter_mut().for_each(|r| {
            r.pop();
        });
    }
    let mut text = format!(
        "{}\nA = {}, B = {}, shift B/A = {}\n{pole_text}\n{}",
        header(&spec),
        fmt_complex(a),
        fmt_complex(b),
        fmt_complex(shift),
        table(&cols, &rows)
    );
    if check {
        if let (Some(h), Some(zp)) = (hurwitz_a, report.zeta_prime0) {
            // ζ'_H(0, a) = lnΓ(a) − ½ln 2π, then the A^{−s} factor
            let hz = ln_gamma(h) - 0.5 * (2.0 * std::f64::consts::PI).ln() - a.ln() * (0.5 - h);
            let c = Check { path: "hurwitz-closed-form", value: hz, reference: zp };
            text = format!("{text}\ncheck zeta'(0): {}", c.text());
            js["check_zeta_prime0"] = c.json();
        } else {
            js["check_zeta_prime0"] = Value::Null;
        }
    } else {
        js["check_zeta_prime0"] = Value::Null;
    }
    js["command"] = json!("shift");
    js["model"] = json!(spec);
    js["A"] = cjson(a);
    js["B"] = cjson(b);
    js["items"] = json!(items);
    js["failures"] = json!(failures);
    let _ = quad_params;
    Ok(Report { text, json: js, failures })
}

fn single(
    command: &'static str,
    spec: &ModelSpec,
    s: Complex,
    value: Complex,
    extra: Value,
    chk: Option<Check>,
    failures: Vec<String>,
) -> Report {
    let mut text = format!("{}\nzeta({}) = {}", header(spec), fmt_complex(s), fmt_complex(value));
    if let Some(c) = &chk {
        text = format!("{text}\ncheck: {}", c.text());
    }
    let mut js = json!({
        "command": command,
        "model": spec,
        "s": cjson(s),
        "value": cjson(value),
        "check": check_json(&chk),
        "failures": failures,
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut js, extra) {
        map.extend(more);
    }
    Report { text, json: js, failures }
}

fn quad_json(p: &ContourParams) -> Value {
    json!({ "R": p.r, "tmax": p.t_max, "tol": p.tol })
}

pub fn series(m: &ModelArgs, s: &str, n: Option<usize>, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let s = parse_complex(s).usage()?;
    let params = quad.params(&model).usage()?;
    let zeros = model
        .zeros()
        .ok_or_else(|| Failure::Usage(anyhow!("the {} model has no generated zeros to sum", model.name())))?;
    let n_terms = n.unwrap_or(SERIES_TERMS);
    let value = zeta_series(zeros, s, n_terms, model.psi())?;
    let mut failures = Vec::new();
    let chk = if check {
        match contour_zeta(&model, s, &params) {
            Ok(v) => Some(Check { path: "contour", value: v, reference: value }),
            Err(e) => {
                failures.push(format!("check failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    Ok(single("series", &spec, s, value, json!({ "n_terms": n_terms }), chk, failures))
}

pub fn contour(m: &ModelArgs, s: &str, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let s = parse_complex(s).usage()?;
    let params = quad.params(&model).usage()?;
    let value = contour_zeta(&model, s, &params)?;
    let mut failures = Vec::new();
    let chk = if check {
        match independent_value(&model, s, &params) {
            Ok((path, v)) => Some(Check { path, value: v, reference: value }),
            Err(e) => {
                failures.push(format!("check failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    Ok(single("contour", &spec, s, value, quad_json(&params), chk, failures))
}

pub fn continued(m: &ModelArgs, s: &str, quad: &QuadArgs, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("riemann").usage()?;
    let s = parse_complex(s).usage()?;
    let params = quad.params(&model).usage()?;
    let c = continued_zeta(&model, s, &params)?;
    let mut failures = Vec::new();
    let chk = if check {
        let other = match model.zeros() {
            Some(z) if s.re > model.alpha() + SERIES_MARGIN => zeta_series(z, s, SERIES_TERMS, model.psi()).map(|v| ("series", v)),
            _ => {
                let moved = ContourParams { r: 0.8 * params.r, ..params };
                continued_zeta(&model, s, &moved).map(|v| ("continued-0.8R", v.value))
            }
        };
        match other {
            Ok((path, v)) => Some(Check { path, value: v, reference: c.value }),
            Err(e) => {
                failures.push(format!("check failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    let mut extra = quad_json(&params);
    extra["rows"] = json!(c.rows);
    extra["warning"] = json!(c.warning);
    let mut rep = single("continue", &spec, s, c.value, extra, chk, failures);
    if let Some(w) = &c.warning {
        rep.text = format!("{}\nwarning: {w}", rep.text);
    }
    Ok(rep)
}

pub struct AaaArgs<'a> {
    pub interval: &'a str,
    pub scan: &'a str,
    pub points: usize,
    pub n_terms: Option<usize>,
    pub tol: Option<f64>,
}

pub fn aaa(m: &ModelArgs, args: AaaArgs<'_>, check: bool) -> Result<Report, Failure> {
    let (spec, model) = m.build_or("airy").usage()?;
    let iv = parse_interval(args.interval).usage()?;
    let sc = parse_interval(args.scan).usage()?;
    let tol = args.tol.unwrap_or(1e-13);
    let n_terms = args.n_terms.unwrap_or(SERIES_TERMS);
    let r = aaa_report(&model, [*iv.start(), *iv.end()], args.points, n_terms, tol, [*sc.start(), *sc.end()])?;
    let fit = &r.fit;
    let list = |v: &[f64]| v.iter().map(|x| fmt_real(*x)).collect::<Vec<_>>().join(", ");
    let numbers = [
        ("zeta(1)", r.zeta_one),
        ("zeta(0)", r.zeta_zero),
        ("zeta'(0)", r.zeta_prime_zero),
        ("zeta(-1/2)", r.zeta_minus_half),
    ];
    let mut text = format!(
        "{}\nsamples: {} points on [{}, {}], {} terms each\ndegree: {} ({} support points)\nmax residual: {:.3e}{}\nzeros in [{}, {}]: {}\npoles in [{}, {}]: {}",
        header(&spec),
        args.points,
        fmt_real(r.interval[0]),
        fmt_real(r.interval[1]),
        n_terms,
        fit.model.m().saturating_sub(1),
        fit.model.m(),
        fit.residual,
        if fit.converged { "" } else { " (tolerance not reached)" },
        fmt_real(r.scan[0]),
        fmt_real(r.scan[1]),
        list(&r.features.zeros),
        fmt_real(r.scan[0]),
        fmt_real(r.scan[1]),
        list(&r.features.poles),
    );
    for (name, v) in numbers {
        text = format!("{text}\n{name} = {}", fmt_complex(v));
    }
    let mut failures = Vec::new();
    let mut checks = Value::Null;
    if check {
        let params = ContourParams::for_model(&model).with_tol(crate::args::env_quad_tol().usage()?.unwrap_or(1e-10));
        let mut out = serde_json::Map::new();
        let mut lines = Vec::new();
        let refs = [
            ("zeta(1)", r.zeta_one, Some(1.0)),
            ("zeta(0)", r.zeta_zero, Some(0.0)),
            ("zeta'(0)", r.zeta_prime_zero, None),
            ("zeta(-1/2)", r.zeta_minus_half, Some(-0.5)),
        ];
        for (name, v, at) in refs {
            let other = match at {
                Some(x) => continued_zeta(&model, Complex::new(x, 0.0), &params).map(|c| ("continued", c.value)),
                None => model.zeta_prime_zero().map(|z| ("table", z)),
            };
            match other {
                Ok((path, value)) => {
                    let c = Check { path, value, reference: v };
                    lines.push(format!("{name}: {}", c.text()));
                    out.insert(name.to_string(), c.json());
                }
                Err(e) => failures.push(format!("{name}: check failed: {e}")),
            }
        }
        text = format!("{text}\ncheck:\n{}", lines.join("\n"));
        checks = Value::Object(out);
    }
    let js = json!({
        "command": "aaa",
        "model": spec,
        "interval": r.interval,
        "scan": r.scan,
        "points": args.points,
        "n_terms": n_terms,
        "degree": fit.model.m().saturating_sub(1),
        "residual": fit.residual,
        "converged": fit.converged,
        "history": fit.history,
        "features": r.features,
        "values": {
            "zeta_one": cjson(r.zeta_one),
            "zeta_zero": cjson(r.zeta_zero),
            "zeta_prime_zero": cjson(r.zeta_prime_zero),
            "zeta_minus_half": cjson(r.zeta_minus_half),
        },
        "fit": fit.model,
        "check": checks,
        "failures": failures,
    });
    Ok(Report { text, json: js, failures })
}

/// Parameters used when `catalog` lists every model.
fn default_specs() -> Vec<ModelSpec> {
    vec![
        ModelSpec::Riemann,
        ModelSpec::Hurwitz { a: 0.5 },
        ModelSpec::Airy,
        ModelSpec::Pcf { a: 0.0 },
        ModelSpec::Chf { a: 0.5, b: 1.5 },
    ]
}

pub fn catalog(m: &ModelArgs, check: bool) -> Result<Report, Failure> {
    let specs = if m.model.is_some() { vec![m.spec().usage()?] } else { default_specs() };
    let mut blocks = Vec::new();
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for spec in specs {
        let model = spec.build().map_err(|e| Failure::Usage(e.into()))?;
        let asym = model.asym();
        let zeros = model.zeros().map(|z| {
            json!({ "exact": z.n_exact(), "count": z.count(), "first": cjson(z.get(1)) })
        });
        let mut lines = vec![
            header(&spec),
            format!(
                "  alpha = {}, m = {}, max log power = {}, depth = {}, psi = {}",
                fmt_real(model.alpha()),
                asym.m(),
                asym.max_log(),
                asym.depth(),
                fmt_real(model.psi())
            ),
        ];
        if let Some(z) = model.zeros() {
            lines.push(format!(
                "  zeros: {} refined, {} listed, a_1 = {}",
                z.n_exact(),
                z.count(),
                fmt_complex(z.get(1))
            ));
        }
        lines.extend(model.notes().iter().map(|n| format!("  note: {n}")));
        let mut chk = Value::Null;
        if check {
            // engine against every closed form in −3..5
            let mut worst: f64 = 0.0;
            let mut count = 0;
            for n in -3..=5 {
                let Some(cf) = model.closed_form(n) else { continue };
                match model.zeta_int(n) {
                    Ok(v) => {
                        worst = worst.max((v.value - cf.value).norm());
                        count += 1;
                    }
                    Err(e) => failures.push(format!("{} n = {n}: {e}", spec.name())),
                }
            }
            lines.push(format!("  check: {count} closed forms, max |Δ| {worst:.1e}"));
            chk = json!({ "closed_forms": count, "max_discrepancy": worst });
        }
        blocks.push(lines.join("\n"));
        entries.push(json!({
            "spec": spec,
            "alpha": model.alpha(),
            "m": asym.m(),
            "max_log": asym.max_log(),
            "depth": asym.depth(),
            "psi": model.psi(),
            "ln_f0": asym.ln_f0().map_or(Value::Null, cjson),
            "zeros": zeros,
            "notes": model.notes(),
            "check": chk,
        }));
    }
    Ok(Report {
        text: blocks.join("\n"),
        json: json!({ "command": "catalog", "models": entries, "failures": failures }),
        failures,
    })
}
