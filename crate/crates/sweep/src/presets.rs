//! Built-in sweeps reproducing each figure's data. Grids not fixed by the
//! figures use 201 points; thermal temperature axes start at 0.01 so every
//! point is a genuine finite-temperature state.

use crate::config::SweepConfig;

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    toml: &'static str,
}

impl Preset {
    pub fn config(&self) -> SweepConfig {
        SweepConfig::from_toml(self.toml)
            .unwrap_or_else(|e| panic!("preset `{}` is invalid: {e}", self.name))
    }
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig2-g",
        description: "ground state vs coupling for several photon frequencies",
        toml: r#"
mode = "ground"
axes = ["eta_a", "g"]
eta_a = [0.2, 1.0, 5.0]
g = "linspace 0 3 201"
"#,
    },
    Preset {
        name: "fig2-eta",
        description: "ground state vs photon frequency for several couplings",
        toml: r#"
mode = "ground"
axes = ["g", "eta_a"]
g = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0]
eta_a = "linspace 0.1 10 201"
"#,
    },
    Preset {
        name: "fig3",
        description: "ground-state coherence of the partial Hamiltonians vs coupling",
        toml: r#"
mode = "ground"
axes = ["variant", "g"]
variant = ["no-anti", "no-res", "full-hopfield"]
g = "linspace 0 3 201"
eta_a = 1.0
outputs = ["c_a", "c_b", "c_tot", "mu_a", "mu_b"]
"#,
    },
    Preset {
        name: "fig4",
        description: "thermal coherence with only one half of the diamagnetic term",
        toml: r#"
mode = "thermal"
axes = ["variant", "g"]
variant = ["s-plus-squeeze", "s-plus-phase"]
g = "linspace 0 3 201"
eta_a = 1.0
t = 1.0
"#,
    },
    Preset {
        name: "fig5",
        description:
            "thermal coherence, symplectic eigenvalues, occupations and entropies vs coupling",
        toml: r#"
mode = "thermal"
axes = ["eta_a", "g"]
eta_a = [0.2, 1.0, 5.0]
g = "linspace 0 3 201"
t = 1.0
outputs = ["c_a", "c_b", "c_tot", "v1", "v2", "mu_a", "mu_b", "entropy", "entropy_reference", "secular_ratio"]
"#,
    },
    Preset {
        name: "fig6-eta",
        description: "thermal coherence vs temperature at g = 2 for several photon frequencies",
        toml: r#"
mode = "thermal"
axes = ["eta_a", "t"]
eta_a = [0.2, 0.5, 1.0, 5.0, 10.0]
t = "linspace 0.01 2 201"
g = 2.0
"#,
    },
    Preset {
        name: "fig6-g",
        description: "resonant thermal coherence vs temperature for several couplings",
        toml: r#"
mode = "thermal"
axes = ["g", "t"]
g = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0]
t = "linspace 0.01 2 201"
eta_a = 1.0
"#,
    },
    Preset {
        name: "fig7",
        description: "thermal coherence vs temperature without the rotating terms",
        toml: r#"
mode = "thermal"
axes = ["g", "t"]
variant = "no-res"
g = [0.1, 0.5, 1.0, 2.0]
t = "linspace 0.01 2 201"
eta_a = 1.0
"#,
    },
    Preset {
        name: "fig8",
        description: "thermal coherence vs temperature without the counter-rotating terms",
        toml: r#"
mode = "thermal"
axes = ["g", "t"]
variant = "no-anti"
g = [0.1, 0.5, 1.0, 2.0]
t = "linspace 0.01 2 201"
eta_a = 1.0
"#,
    },
    Preset {
        name: "fig9-temps",
        description: "total coherence over the two bath temperatures",
        toml: r#"
mode = "thermal"
axes = ["t_a", "t_b"]
t_a = "linspace 0.01 2 201"
t_b = "linspace 0.01 2 201"
g = 1.0
eta_a = 1.0
outputs = ["c_tot", "c_a", "c_b", "log_negativity"]
"#,
    },
    Preset {
        name: "fig9-gamma",
        description: "total coherence over photon-bath temperature and photon damping",
        toml: r#"
mode = "thermal"
axes = ["t_a", "gamma"]
t_a = "linspace 0.01 2 201"
gamma = "linspace 0.0001 0.01 201"
t_b = 1.0
kappa = 0.001
g = 1.0
eta_a = 1.0
outputs = ["c_tot", "c_a", "c_b", "secular_ratio"]
"#,
    },
    Preset {
        name: "figA1-ground",
        description: "Dicke ground state up to the critical coupling",
        toml: r#"
mode = "ground"
axes = ["g"]
variant = "dicke"
eta_a = 1.0
g = "linspace 0 0.5 201"
"#,
    },
    Preset {
        name: "figA1-thermal",
        description: "Dicke thermal state up to the critical coupling",
        toml: r#"
mode = "thermal"
axes = ["g"]
variant = "dicke"
eta_a = 1.0
g = "linspace 0 0.5 201"
t = 1.0
"#,
    },
    Preset {
        name: "figA2-ground",
        description: "ground-state log-negativity of the partial Hamiltonians vs coupling",
        toml: r#"
mode = "ground"
axes = ["variant", "g"]
variant = ["no-anti", "no-res", "full-hopfield"]
g = "linspace 0 3 201"
eta_a = 1.0
outputs = ["log_negativity", "c_tot"]
"#,
    },
    Preset {
        name: "figA2-thermal",
        description: "thermal log-negativity of the partial Hamiltonians vs temperature at g = 0.1",
        toml: r#"
mode = "thermal"
axes = ["variant", "t"]
variant = ["no-anti", "no-res", "full-hopfield"]
t = "linspace 0.01 2 201"
g = 0.1
eta_a = 1.0
outputs = ["log_negativity", "c_tot", "secular_ratio"]
"#,
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}
