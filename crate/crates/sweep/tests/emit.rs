use hopfield_sweep::*;
use serde_json::Value;

fn table(text: &str) -> SweepTable {
    run_sweep(&SweepConfig::from_toml(text).unwrap())
}

#[test]
fn single_row_csv_has_two_lines() {
    let t = table("g = 0.5\n");
    let csv = render(&t, Format::Csv).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.ends_with('\n') && !csv.contains('\r'));
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    assert_eq!(&header[..3], &["variant", "eta_a", "g"]);
    assert_eq!(&header[header.len() - 2..], &["secular_ok", "reason"]);
}

#[test]
fn axes_lead_the_header() {
    let t = table("mode = \"thermal\"\naxes = [\"t\", \"eta_a\"]\nt = [0.5, 1.0]\neta_a = [0.5, 2.0]\noutputs = [\"c_tot\"]\n");
    assert_eq!(
        t.columns,
        [
            "t",
            "eta_a",
            "variant",
            "g",
            "gamma",
            "kappa",
            "c_tot",
            "secular_ok",
            "reason"
        ]
    );
}

#[test]
fn emission_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg =
        SweepConfig::from_toml("mode = \"thermal\"\ng = \"linspace 0 2 41\"\neta_a = [0.5, 1.0]\n")
            .unwrap();
    for format in [Format::Csv, Format::Json] {
        let a = dir.path().join("a");
        let b = dir.path().join("b");
        emit(&run_sweep(&cfg), format, &a).unwrap();
        emit(&run_sweep(&cfg), format, &b).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}

#[test]
fn json_round_trip_is_exact() {
    let t = table("mode = \"thermal\"\ng = \"linspace 0 1 11\"\n");
    let parsed: Vec<serde_json::Map<String, Value>> =
        serde_json::from_str(&render(&t, Format::Json).unwrap()).unwrap();
    assert_eq!(parsed.len(), t.rows.len());
    for (obj, row) in parsed.iter().zip(&t.rows) {
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(keys, t.columns.iter().collect::<Vec<_>>());
        for (v, cell) in obj.values().zip(&row.cells) {
            match cell {
                Cell::Number(x) => assert_eq!(v.as_f64().unwrap().to_bits(), x.to_bits()),
                Cell::Text(s) => assert_eq!(v.as_str().unwrap(), s),
                Cell::Bool(b) => assert_eq!(v.as_bool().unwrap(), *b),
                Cell::Empty => assert!(v.is_null()),
            }
        }
    }
    // g = 0 at resonance is a failed point with a reason and null outputs.
    assert_eq!(parsed[0]["reason"], "degenerate-polaritons");
    assert!(parsed[0]["c_tot"].is_null());
}

#[test]
fn csv_numbers_carry_twelve_significant_digits() {
    let t = table("g = 1.0\noutputs = [\"mu_a\"]\n");
    let csv = render(&t, Format::Csv).unwrap();
    let row = csv.lines().nth(1).unwrap();
    // (√2 − 1)/2
    assert!(row.contains(",0.207106781187,"), "{row}");
}

#[test]
fn unwritable_destination_is_an_error() {
    let t = table("g = 0.5\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    assert!(matches!(
        emit(&t, Format::Csv, &path),
        Err(EmitError::Io { .. })
    ));
}

#[test]
fn secular_violations_are_kept() {
    let t = table("mode = \"thermal\"\ngamma = 0.5\nkappa = 0.5\ng = [0.05, 1.0]\n");
    let flags = t.column("secular_ok").unwrap();
    assert_eq!(flags.len(), 2);
    assert_eq!(flags[0], &Cell::Bool(false));
}
