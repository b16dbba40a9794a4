//! Sweep configuration: a flat key schema shared by TOML files and CLI flags.
//!
//! Every key holds either one value (the parameter is fixed) or several
//! (the parameter is an axis). Numeric values are written as a number, a
//! TOML array, a comma list `"0.2,1,5"`, or `"linspace START STOP N"`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use hopfield_core::Variant;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("key `{key}`: {reason}")]
    BadValue { key: String, reason: String },
    #[error("{0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

type Result<T, E = ConfigError> = std::result::Result<T, E>;

fn bad(key: impl Into<String>, reason: impl Into<String>) -> ConfigError {
    ConfigError::BadValue {
        key: key.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Ground,
    Thermal,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Ground => "ground",
            Mode::Thermal => "thermal",
        }
    }
}

impl FromStr for Mode {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ground" => Ok(Mode::Ground),
            "thermal" => Ok(Mode::Thermal),
            _ => Err(bad(
                "mode",
                format!("expected `ground` or `thermal`, got `{s}`"),
            )),
        }
    }
}

/// Sweepable parameters in canonical column order. Frequencies,
/// temperatures and rates are in units of `ω_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Variant,
    EtaA,
    G,
    /// Common temperature, `T_a = T_b = t`.
    T,
    TA,
    TB,
    Gamma,
    Kappa,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::Variant,
        Param::EtaA,
        Param::G,
        Param::T,
        Param::TA,
        Param::TB,
        Param::Gamma,
        Param::Kappa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Variant => "variant",
            Param::EtaA => "eta_a",
            Param::G => "g",
            Param::T => "t",
            Param::TA => "t_a",
            Param::TB => "t_b",
            Param::Gamma => "gamma",
            Param::Kappa => "kappa",
        }
    }

    fn is_bath(self) -> bool {
        matches!(
            self,
            Param::T | Param::TA | Param::TB | Param::Gamma | Param::Kappa
        )
    }
}

impl FromStr for Param {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| ConfigError::UnknownKey(s.to_string()))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Report fields that can be emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Output {
    CA,
    CB,
    CTot,
    MuA,
    MuB,
    V1,
    V2,
    VA,
    VB,
    Entropy,
    EntropyReference,
    LogNegativity,
    OmegaPlus,
    OmegaMinus,
    SecularRatio,
}

impl Output {
    pub const ALL: [Output; 15] = [
        Output::CA,
        Output::CB,
        Output::CTot,
        Output::MuA,
        Output::MuB,
        Output::V1,
        Output::V2,
        Output::VA,
        Output::VB,
        Output::Entropy,
        Output::EntropyReference,
        Output::LogNegativity,
        Output::OmegaPlus,
        Output::OmegaMinus,
        Output::SecularRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Output::CA => "c_a",
            Output::CB => "c_b",
            Output::CTot => "c_tot",
            Output::MuA => "mu_a",
            Output::MuB => "mu_b",
            Output::V1 => "v1",
            Output::V2 => "v2",
            Output::VA => "v_a",
            Output::VB => "v_b",
            Output::Entropy => "entropy",
            Output::EntropyReference => "entropy_reference",
            Output::LogNegativity => "log_negativity",
            Output::OmegaPlus => "omega_plus",
            Output::OmegaMinus => "omega_minus",
            Output::SecularRatio => "secular_ratio",
        }
    }

    /// Everything except `secular_ratio`, which is infinite for ground states.
    pub fn defaults(mode: Mode) -> Vec<Output> {
        Output::ALL
            .into_iter()
            .filter(|o| mode == Mode::Thermal || *o != Output::SecularRatio)
            .collect()
    }
}

impl FromStr for Output {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self> {
        Output::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| bad("outputs", format!("unknown output `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Number(f64),
    Variant(Variant),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Number(x) => write!(f, "{x}"),
            Scalar::Variant(v) => f.write_str(v.name()),
        }
    }
}

/// Values of one key, kept in the form they were written so configs can be
/// dumped back unchanged.
#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Numbers(Vec<f64>),
    Linspace { start: f64, stop: f64, n: usize },
    Variants(Vec<Variant>),
}

impl Values {
    pub fn expand(&self) -> Vec<Scalar> {
        match self {
            Values::Numbers(xs) => xs.iter().map(|&x| Scalar::Number(x)).collect(),
            Values::Variants(vs) => vs.iter().map(|&v| Scalar::Variant(v)).collect(),
            Values::Linspace { start, stop, n } => linspace(*start, *stop, *n)
                .into_iter()
                .map(Scalar::Number)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Values::Numbers(xs) => xs.len(),
            Values::Variants(vs) => vs.len(),
            Values::Linspace { n, .. } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn single(x: f64) -> Self {
        Values::Numbers(vec![x])
    }

    fn to_toml(&self) -> String {
        match self {
            Values::Numbers(xs) if xs.len() == 1 => fmt_number(xs[0]),
            Values::Numbers(xs) => format!(
                "[{}]",
                xs.iter()
                    .map(|x| fmt_number(*x))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Values::Linspace { start, stop, n } => {
                format!(
                    "\"linspace {} {} {n}\"",
                    fmt_number(*start),
                    fmt_number(*stop)
                )
            }
            Values::Variants(vs) if vs.len() == 1 => format!("\"{}\"", vs[0].name()),
            Values::Variants(vs) => format!(
                "[{}]",
                vs.iter()
                    .map(|v| format!("\"{}\"", v.name()))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

/// `n` evenly spaced points; the last one is exactly `stop`.
pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![start],
        _ => (0..n)
            .map(|i| {
                if i + 1 == n {
                    stop
                } else {
                    start + (stop - start) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Shortest representation that reads back to the same `f64`, always with
/// a decimal point or exponent so TOML sees a float.
fn fmt_number(x: f64) -> String {
    let s = format!("{x:?}");
    if s.contains(['.', 'e', 'E', 'i', 'N']) {
        s
    } else {
        format!("{s}.0")
    }
}

/// Parses the textual value forms of a key.
pub fn parse_values(param: Param, text: &str) -> Result<Values> {
    let text = text.trim();
    if param == Param::Variant {
        let vs = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<Variant>()
                    .map_err(|e| bad(param.name(), e))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Values::Variants(vs));
    }
    if let Some(rest) = text.strip_prefix("linspace") {
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [a, b, n] = parts[..] else {
            return Err(bad(param.name(), "expected `linspace START STOP N`"));
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| bad(param.name(), e.to_string()))
        };
        let n = n
            .parse::<usize>()
            .map_err(|e| bad(param.name(), e.to_string()))?;
        return Ok(Values::Linspace {
            start: num(a)?,
            stop: num(b)?,
            n,
        });
    }
    let xs = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| bad(param.name(), format!("`{s}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Values::Numbers(xs))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub values: Values,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub mode: Mode,
    /// Outer axis first; rows vary fastest along the last axis.
    pub axes: Vec<Axis>,
    pub fixed: BTreeMap<Param, Scalar>,
    pub outputs: Vec<Output>,
}

/// Raw key/value form before axes and fixed values are separated.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    pub mode: Option<Mode>,
    pub axes: Option<Vec<Param>>,
    pub outputs: Option<Vec<Output>>,
    pub values: BTreeMap<Param, Values>,
}

pub const DEFAULT_ETA_A: f64 = 1.0;
pub const DEFAULT_G: f64 = 1.0;
pub const DEFAULT_T: f64 = 1.0;
pub const DEFAULT_RATE: f64 = 1e-3;

impl RawConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let table: toml::Table = text
            .parse()
            .map_err(|e: toml::de::Error| ConfigError::Parse(e.to_string()))?;
        let mut raw = RawConfig::default();
        for (key, value) in &table {
            raw.set_toml(key, value)?;
        }
        Ok(raw)
    }

    fn set_toml(&mut self, key: &str, value: &toml::Value) -> Result<()> {
        let strings = |v: &toml::Value| -> Result<Vec<String>> {
            match v {
                toml::Value::String(s) => Ok(s.split(',').map(|x| x.trim().to_string()).collect()),
                toml::Value::Array(items) => items
                    .iter()
                    .map(|i| {
                        i.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| bad(key, "expected strings"))
                    })
                    .collect(),
                _ => Err(bad(key, "expected a string or an array of strings")),
            }
        };
        match key {
            "mode" => {
                let s = value
                    .as_str()
                    .ok_or_else(|| bad(key, "expected a string"))?;
                self.mode = Some(s.parse()?);
            }
            "axes" => {
                self.axes = Some(
                    strings(value)?
                        .iter()
                        .map(|s| s.parse())
                        .collect::<Result<_>>()?,
                );
            }
            "outputs" => {
                self.outputs = Some(
                    strings(value)?
                        .iter()
                        .map(|s| s.parse())
                        .collect::<Result<_>>()?,
                );
            }
            _ => {
                let param: Param = key.parse()?;
                let values = match value {
                    toml::Value::String(s) => parse_values(param, s)?,
                    toml::Value::Float(x) if param != Param::Variant => Values::single(*x),
                    toml::Value::Integer(i) if param != Param::Variant => Values::single(*i as f64),
                    toml::Value::Array(items) if param == Param::Variant => parse_values(
                        param,
                        &strings(&toml::Value::Array(items.clone()))?.join(","),
                    )?,
                    toml::Value::Array(items) => Values::Numbers(
                        items
                            .iter()
                            .map(|i| match i {
                                toml::Value::Float(x) => Ok(*x),
                                toml::Value::Integer(n) => Ok(*n as f64),
                                _ => Err(bad(key, "expected numbers")),
                            })
                            .collect::<Result<_>>()?,
                    ),
                    _ => return Err(bad(key, "unsupported value type")),
                };
                self.values.insert(param, values);
            }
        }
        Ok(())
    }

    /// Applies `key=value` text, as given on the command line.
    pub fn set_text(&mut self, key: &str, text: &str) -> Result<()> {
        match key {
            "mode" => self.mode = Some(text.parse()?),
            "axes" => {
                self.axes = Some(
                    text.split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| s.trim().parse())
                        .collect::<Result<_>>()?,
                )
            }
            "outputs" => {
                self.outputs = Some(
                    text.split(',')
                        .map(|s| s.trim().parse())
                        .collect::<Result<_>>()?,
                )
            }
            _ => {
                let param: Param = key.parse()?;
                self.values.insert(param, parse_values(param, text)?);
            }
        }
        Ok(())
    }

    /// Overlays `other` on `self`. Setting `t` drops `t_a`/`t_b` and vice
    /// versa, so a flag can switch a config between the two temperature forms.
    pub fn merge(&mut self, other: RawConfig) {
        if other.mode.is_some() {
            self.mode = other.mode;
        }
        if other.axes.is_some() {
            self.axes = other.axes;
        }
        if other.outputs.is_some() {
            self.outputs = other.outputs;
        }
        for (p, v) in other.values {
            match p {
                Param::T => {
                    self.values.remove(&Param::TA);
                    self.values.remove(&Param::TB);
                }
                Param::TA | Param::TB => {
                    self.values.remove(&Param::T);
                }
                _ => {}
            }
            self.values.insert(p, v);
        }
    }

    pub fn resolve(&self) -> Result<SweepConfig> {
        let mode = self.mode.unwrap_or(Mode::Ground);
        let mut values = self.values.clone();

        if mode == Mode::Ground {
            if let Some(p) = values.keys().find(|p| p.is_bath()) {
                return Err(ConfigError::Inconsistent(format!(
                    "`{p}` has no effect in ground mode"
                )));
            }
        } else {
            let split = values.contains_key(&Param::TA) || values.contains_key(&Param::TB);
            if split && values.contains_key(&Param::T) {
                return Err(ConfigError::Inconsistent(
                    "give either `t` or `t_a`/`t_b`, not both".into(),
                ));
            }
            if split && !(values.contains_key(&Param::TA) && values.contains_key(&Param::TB)) {
                return Err(ConfigError::Inconsistent(
                    "`t_a` and `t_b` must be given together".into(),
                ));
            }
            if !split {
                values.entry(Param::T).or_insert(Values::single(DEFAULT_T));
            }
            values
                .entry(Param::Gamma)
                .or_insert(Values::single(DEFAULT_RATE));
            values
                .entry(Param::Kappa)
                .or_insert(Values::single(DEFAULT_RATE));
        }
        values
            .entry(Param::Variant)
            .or_insert(Values::Variants(vec![Variant::FullHopfield]));
        values
            .entry(Param::EtaA)
            .or_insert(Values::single(DEFAULT_ETA_A));
        values.entry(Param::G).or_insert(Values::single(DEFAULT_G));

        let multi: Vec<Param> = values
            .iter()
            .filter(|(_, v)| v.len() > 1)
            .map(|(p, _)| *p)
            .collect();
        let axis_order = match &self.axes {
            Some(order) => {
                for p in &multi {
                    if !order.contains(p) {
                        return Err(ConfigError::Inconsistent(format!(
                            "`{p}` has several values but is not listed in `axes`"
                        )));
                    }
                }
                order.clone()
            }
            None => multi,
        };

        let mut axes = Vec::new();
        for (i, p) in axis_order.iter().enumerate() {
            if axis_order[..i].contains(p) {
                return Err(ConfigError::Inconsistent(format!(
                    "axis `{p}` listed twice"
                )));
            }
            let v = values
                .remove(p)
                .ok_or_else(|| ConfigError::Inconsistent(format!("axis `{p}` has no values")))?;
            axes.push(Axis {
                param: *p,
                values: v,
            });
        }
        let mut fixed = BTreeMap::new();
        for (p, v) in values {
            let mut it = v.expand().into_iter();
            match (it.next(), it.next()) {
                (Some(s), None) => {
                    fixed.insert(p, s);
                }
                _ => return Err(bad(p.name(), "a fixed parameter needs exactly one value")),
            }
        }
        let outputs = self
            .outputs
            .clone()
            .unwrap_or_else(|| Output::defaults(mode));
        let config = SweepConfig {
            mode,
            axes,
            fixed,
            outputs,
        };
        config.validate()?;
        Ok(config)
    }
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        RawConfig::from_toml(text)?.resolve()
    }

    pub fn validate(&self) -> Result<()> {
        if self.outputs.is_empty() {
            return Err(bad("outputs", "at least one output is required"));
        }
        for (i, o) in self.outputs.iter().enumerate() {
            if self.outputs[..i].contains(o) {
                return Err(bad("outputs", format!("`{}` listed twice", o.name())));
            }
        }
        for axis in &self.axes {
            if self.fixed.contains_key(&axis.param) {
                return Err(ConfigError::Inconsistent(format!(
                    "`{}` is both an axis and fixed",
                    axis.param
                )));
            }
            let vals = axis.values.expand();
            if vals.is_empty() {
                return Err(bad(axis.param.name(), "axis has no values"));
            }
            match &axis.values {
                Values::Variants(vs) => {
                    for (i, v) in vs.iter().enumerate() {
                        if vs[..i].contains(v) {
                            return Err(bad(
                                axis.param.name(),
                                format!("variant `{v}` listed twice"),
                            ));
                        }
                    }
                }
                _ => {
                    let xs: Vec<f64> = vals
                        .iter()
                        .map(|s| match s {
                            Scalar::Number(x) => *x,
                            Scalar::Variant(_) => unreachable!(),
                        })
                        .collect();
                    let up = xs.windows(2).all(|w| w[0] < w[1]);
                    let down = xs.windows(2).all(|w| w[0] > w[1]);
                    if !(up || down) {
                        return Err(bad(
                            axis.param.name(),
                            "axis values must be strictly ordered",
                        ));
                    }
                    for x in &xs {
                        check_domain(axis.param, *x)?;
                    }
                }
            }
        }
        for (p, s) in &self.fixed {
            if let Scalar::Number(x) = s {
                check_domain(*p, *x)?;
            }
        }
        Ok(())
    }

    pub fn point_count(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    /// Parameter columns: axes in order, then fixed parameters.
    pub fn param_columns(&self) -> Vec<Param> {
        self.axes
            .iter()
            .map(|a| a.param)
            .chain(self.fixed.keys().copied())
            .collect()
    }

    /// TOML text that resolves back to this config.
    pub fn to_toml(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode = \"{}\"\n", self.mode.name()));
        let axes: Vec<String> = self
            .axes
            .iter()
            .map(|a| format!("\"{}\"", a.param))
            .collect();
        out.push_str(&format!("axes = [{}]\n", axes.join(", ")));
        let outputs: Vec<String> = self
            .outputs
            .iter()
            .map(|o| format!("\"{}\"", o.name()))
            .collect();
        out.push_str(&format!("outputs = [{}]\n", outputs.join(", ")));
        for axis in &self.axes {
            out.push_str(&format!("{} = {}\n", axis.param, axis.values.to_toml()));
        }
        for (p, s) in &self.fixed {
            let v = match s {
                Scalar::Number(x) => Values::single(*x),
                Scalar::Variant(v) => Values::Variants(vec![*v]),
            };
            out.push_str(&format!("{p} = {}\n", v.to_toml()));
        }
        out
    }
}

fn check_domain(p: Param, x: f64) -> Result<()> {
    let ok = x.is_finite()
        && match p {
            Param::EtaA => x > 0.0,
            _ => x >= 0.0,
        };
    if ok {
        Ok(())
    } else {
        Err(bad(p.name(), format!("value {x} out of range")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_forms() {
        assert_eq!(parse_values(Param::G, "0.5").unwrap(), Values::single(0.5));
        assert_eq!(
            parse_values(Param::G, "0.2, 1,5").unwrap(),
            Values::Numbers(vec![0.2, 1.0, 5.0])
        );
        assert_eq!(
            parse_values(Param::G, "linspace 0 3 201").unwrap(),
            Values::Linspace {
                start: 0.0,
                stop: 3.0,
                n: 201
            }
        );
        assert_eq!(
            parse_values(Param::Variant, "no-anti,full-hopfield").unwrap(),
            Values::Variants(vec![Variant::NoAnti, Variant::FullHopfield])
        );
        assert!(parse_values(Param::G, "linspace 0 3").is_err());
        assert!(parse_values(Param::Variant, "hopfield").is_err());
    }

    #[test]
    fn linspace_hits_both_ends() {
        let xs = linspace(0.0, 3.0, 201);
        assert_eq!(xs.len(), 201);
        assert_eq!(xs[0], 0.0);
        assert_eq!(xs[200], 3.0);
        assert_eq!(xs[100], 1.5);
    }

    #[test]
    fn resolve_fills_defaults_and_infers_axes() {
        let c = SweepConfig::from_toml(
            "mode = \"thermal\"\ng = \"linspace 0 1 3\"\neta_a = [0.2, 1.0]\n",
        )
        .unwrap();
        let params: Vec<Param> = c.axes.iter().map(|a| a.param).collect();
        assert_eq!(params, vec![Param::EtaA, Param::G]);
        assert_eq!(c.fixed[&Param::T], Scalar::Number(1.0));
        assert_eq!(c.fixed[&Param::Gamma], Scalar::Number(1e-3));
        assert_eq!(c.point_count(), 6);
        assert!(c.outputs.contains(&Output::SecularRatio));
    }

    #[test]
    fn inconsistent_configs_are_rejected() {
        let cases = [
            "mode = \"ground\"\nt = 1.0\n",
            "mode = \"thermal\"\nt = 1.0\nt_a = 0.5\nt_b = 0.5\n",
            "mode = \"thermal\"\nt_a = 0.5\n",
            "axes = [\"g\"]\neta_a = [1.0, 2.0]\ng = [0.1, 0.2]\n",
            "axes = [\"g\", \"g\"]\ng = [0.1, 0.2]\n",
            "g = [0.2, 0.1, 0.3]\n",
            "g = [0.1, 0.1]\n",
            "eta_a = 0.0\n",
            "g = -1.0\n",
            "outputs = []\n",
            "outputs = [\"c_tot\", \"c_tot\"]\n",
            "variant = [\"no-anti\", \"no-anti\"]\n",
            "colour = 1.0\n",
            "g = \"nan\"\n",
        ];
        for text in cases {
            assert!(SweepConfig::from_toml(text).is_err(), "{text}");
        }
    }

    #[test]
    fn decreasing_axes_are_allowed() {
        assert!(SweepConfig::from_toml("g = [0.3, 0.2, 0.1]\n").is_ok());
    }

    #[test]
    fn toml_round_trip() {
        let text = "mode = \"thermal\"\naxes = [\"variant\", \"t\"]\nvariant = [\"no-anti\", \"no-res\"]\nt = \"linspace 0.01 2 201\"\ng = 0.1\noutputs = [\"c_tot\", \"log_negativity\"]\n";
        let c = SweepConfig::from_toml(text).unwrap();
        let again = SweepConfig::from_toml(&c.to_toml()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn overrides_switch_temperature_form() {
        let mut raw = RawConfig::from_toml("mode = \"thermal\"\nt = 1.0\n").unwrap();
        let mut flags = RawConfig::default();
        flags.set_text("t_a", "0.2").unwrap();
        flags.set_text("t_b", "0.4").unwrap();
        raw.merge(flags);
        let c = raw.resolve().unwrap();
        assert!(!c.fixed.contains_key(&Param::T));
        assert_eq!(c.fixed[&Param::TA], Scalar::Number(0.2));
    }
}
