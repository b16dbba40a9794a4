use hopfield_core::{coherence_report, BathSpec, CoherenceReport, ModelParams, StateSpec, Variant};
use rayon::prelude::*;

use crate::config::{Mode, Output, Param, Scalar, SweepConfig};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Text(String),
    Bool(bool),
    /// Output of a point that failed.
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub cells: Vec<Cell>,
}

/// Rows plus their shared header.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r.cells[i]).collect())
    }

    /// Numeric column, `NaN` for empty cells.
    pub fn numbers(&self, name: &str) -> Option<Vec<f64>> {
        Some(
            self.column(name)?
                .into_iter()
                .map(|c| match c {
                    Cell::Number(x) => *x,
                    _ => f64::NAN,
                })
                .collect(),
        )
    }
}

pub const SECULAR_COLUMN: &str = "secular_ok";
pub const REASON_COLUMN: &str = "reason";

/// Header: parameters (axes first, in order), outputs, `secular_ok`, then
/// `reason`, which is empty unless the point failed.
pub fn columns(config: &SweepConfig) -> Vec<String> {
    config
        .param_columns()
        .iter()
        .map(|p| p.name().to_string())
        .chain(config.outputs.iter().map(|o| o.name().to_string()))
        .chain([SECULAR_COLUMN.to_string(), REASON_COLUMN.to_string()])
        .collect()
}

/// Grid points in lexicographic axis order, each as values aligned with
/// [`SweepConfig::param_columns`].
pub fn grid(config: &SweepConfig) -> Vec<Vec<Scalar>> {
    let axes: Vec<Vec<Scalar>> = config.axes.iter().map(|a| a.values.expand()).collect();
    let fixed: Vec<Scalar> = config.fixed.values().copied().collect();
    let mut points = vec![Vec::new()];
    for values in &axes {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect();
    }
    for p in &mut points {
        p.extend(fixed.iter().copied());
    }
    points
}

fn evaluate(
    mode: Mode,
    params: &[Param],
    values: &[Scalar],
) -> hopfield_core::Result<CoherenceReport> {
    let num = |want: Param| {
        params
            .iter()
            .zip(values)
            .find(|(p, _)| **p == want)
            .and_then(|(_, v)| match v {
                Scalar::Number(x) => Some(*x),
                Scalar::Variant(_) => None,
            })
    };
    let variant = params
        .iter()
        .zip(values)
        .find_map(|(p, v)| match (p, v) {
            (Param::Variant, Scalar::Variant(v)) => Some(*v),
            _ => None,
        })
        .unwrap_or(Variant::FullHopfield);
    let model = ModelParams::scaled(
        num(Param::EtaA).unwrap_or(1.0),
        num(Param::G).unwrap_or(0.0),
        variant,
    )?;
    let state = match mode {
        Mode::Ground => StateSpec::Ground,
        Mode::Thermal => {
            let (t_a, t_b) = match num(Param::T) {
                Some(t) => (t, t),
                None => (num(Param::TA).unwrap_or(0.0), num(Param::TB).unwrap_or(0.0)),
            };
            let rate = |p| num(p).unwrap_or(crate::config::DEFAULT_RATE);
            StateSpec::Thermal(BathSpec::new(
                rate(Param::Gamma),
                rate(Param::Kappa),
                t_a,
                t_b,
            )?)
        }
    };
    coherence_report(&model, &state)
}

fn output_value(r: &CoherenceReport, o: Output) -> f64 {
    match o {
        Output::CA => r.c_a,
        Output::CB => r.c_b,
        Output::CTot => r.c_tot,
        Output::MuA => r.mu_a,
        Output::MuB => r.mu_b,
        Output::V1 => r.v1,
        Output::V2 => r.v2,
        Output::VA => r.v_a,
        Output::VB => r.v_b,
        Output::Entropy => r.entropy,
        Output::EntropyReference => r.entropy_reference,
        Output::LogNegativity => r.log_negativity,
        Output::OmegaPlus => r.omega_plus,
        Output::OmegaMinus => r.omega_minus,
        Output::SecularRatio => r.secular_ratio,
    }
}

fn row(config: &SweepConfig, params: &[Param], values: Vec<Scalar>) -> SweepRow {
    let result = evaluate(config.mode, params, &values);
    let mut cells: Vec<Cell> = values
        .into_iter()
        .map(|v| match v {
            Scalar::Number(x) => Cell::Number(x),
            Scalar::Variant(v) => Cell::Text(v.name().to_string()),
        })
        .collect();
    match result {
        Ok(r) => {
            cells.extend(
                config
                    .outputs
                    .iter()
                    .map(|&o| Cell::Number(output_value(&r, o))),
            );
            cells.push(Cell::Bool(r.secular_ok));
            cells.push(Cell::Text(String::new()));
        }
        Err(e) => {
            cells.extend(config.outputs.iter().map(|_| Cell::Empty));
            cells.push(Cell::Empty);
            cells.push(Cell::Text(e.reason().to_string()));
        }
    }
    SweepRow { cells }
}

/// Evaluates every grid point on the current rayon pool. Points are
/// independent; failures become rows with a `reason` and empty outputs.
pub fn run_sweep(config: &SweepConfig) -> SweepTable {
    let params = config.param_columns();
    let rows = grid(config)
        .into_par_iter()
        .map(|values| row(config, &params, values))
        .collect();
    SweepTable {
        columns: columns(config),
        rows,
    }
}

/// [`run_sweep`] on a dedicated pool of `workers` threads.
pub fn run_sweep_with_workers(
    config: &SweepConfig,
    workers: usize,
) -> Result<SweepTable, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()?;
    Ok(pool.install(|| run_sweep(config)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncoupled_ground_point_has_no_coherence() {
        let c = SweepConfig::from_toml("g = [0.0]\naxes = [\"g\"]\n").unwrap();
        let t = run_sweep(&c);
        assert_eq!(t.rows.len(), 1);
        for name in ["c_a", "c_b", "c_tot"] {
            assert_eq!(t.numbers(name).unwrap(), vec![0.0]);
        }
    }

    #[test]
    fn grid_is_lexicographic() {
        let c = SweepConfig::from_toml(
            "eta_a = [1.0, 2.0]\ng = [0.1, 0.2, 0.3]\naxes = [\"eta_a\", \"g\"]\n",
        )
        .unwrap();
        let t = run_sweep(&c);
        assert_eq!(
            t.numbers("eta_a").unwrap(),
            vec![1.0, 1.0, 1.0, 2.0, 2.0, 2.0]
        );
        assert_eq!(t.numbers("g").unwrap(), vec![0.1, 0.2, 0.3, 0.1, 0.2, 0.3]);
    }

    #[test]
    fn failures_become_rows() {
        let c = SweepConfig::from_toml("variant = \"dicke\"\ng = [0.4, 0.5, 0.6]\n").unwrap();
        let t = run_sweep(&c);
        let reasons: Vec<&Cell> = t.column(REASON_COLUMN).unwrap();
        assert_eq!(reasons[0], &Cell::Text(String::new()));
        assert_eq!(reasons[1], &Cell::Text("beyond-critical".into()));
        assert_eq!(reasons[2], &Cell::Text("beyond-critical".into()));
        assert!(t.numbers("c_tot").unwrap()[1].is_nan());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let c = SweepConfig::from_toml("mode = \"thermal\"\ng = \"linspace 0.05 2 40\"\n").unwrap();
        assert_eq!(
            run_sweep_with_workers(&c, 1).unwrap(),
            run_sweep_with_workers(&c, 4).unwrap()
        );
    }
}
