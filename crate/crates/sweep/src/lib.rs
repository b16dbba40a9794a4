//! Parameter sweeps over the Gaussian coherence pipeline, figure presets,
//! CSV/JSON output and oracle verification.

pub mod config;
pub mod emit;
pub mod presets;
pub mod run;
pub mod verify;

pub use config::{ConfigError, Mode, Output, Param, RawConfig, SweepConfig};
pub use emit::{emit, format_number, render, EmitError, Format};
pub use presets::{find as find_preset, Preset, PRESETS};
pub use run::{run_sweep, run_sweep_with_workers, Cell, SweepRow, SweepTable};
pub use verify::{verify, Check, VerifyReport, VERIFY_PRESETS};
