use std::process::Command as Process;

use proptest::prelude::*;
use serde_json::Value;
use toral::int_matrix;
use toral_cli::{parse_job, render_ascii, run, CliError, Command, Format, JobSpec, Options, Status};

const CONCRETE: &str = "1 -5 0; -1 1 -1; 0 3 1";

fn job(args: &[&str]) -> JobSpec {
    let mut argv = vec!["toral"];
    argv.extend_from_slice(args);
    parse_job(argv).unwrap()
}

fn parse_err(args: &[&str]) -> CliError {
    let mut argv = vec!["toral"];
    argv.extend_from_slice(args);
    parse_job(argv).unwrap_err()
}

fn payload(job: &JobSpec) -> Value {
    serde_json::from_str(&run(job).to_json()).unwrap()
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_toral")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn parses_the_concrete_example() {
    let j = job(&["subgraphs", CONCRETE]);
    assert_eq!(j.command, Command::Subgraphs);
    assert_eq!(j.matrix, int_matrix(&[[1, -5, 0], [-1, 1, -1], [0, 3, 1]]));
    assert_eq!(j.options, Options::default());
}

#[test]
fn parses_four_integers_for_two_by_two() {
    let j = job(&["verify-2x2", "1", "5", "1", "3"]);
    assert_eq!(j.matrix, int_matrix(&[[1, 5], [-1, -3]]));
    assert_eq!(job(&["bounded-count", "1", "5", "1", "3"]).matrix, j.matrix);
}

#[test]
fn parse_errors_carry_positions() {
    match parse_err(&["subgraphs", "1 2; x 4"]) {
        CliError::Usage(msg) => assert!(msg.contains("row 2 col 1"), "{msg}"),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(parse_err(&["subgraphs", "1 2; 3"]), CliError::Usage(_)));
    assert!(matches!(parse_err(&["nonsense", "1"]), CliError::Args(_)));
    assert!(matches!(parse_err(&["verify-2x2", "1", "-5", "1", "3"]), CliError::Usage(_)));
}

#[test]
fn unmixed_lattice_basis_is_a_domain_error() {
    match parse_err(&["decompose", "1; 1"]) {
        CliError::Domain(e @ toral::Error::NotMixed { .. }) => assert_eq!(e.code(), "lattice.not-mixed"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn subgraphs_on_the_concrete_example() {
    let j = job(&["subgraphs", CONCRETE]);
    let report = run(&j);
    assert_eq!(report.status, Status::Complete);
    assert_eq!(report.exit_code(), 0);
    let v = payload(&j);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"]["sizes"], serde_json::json!([1, 3, 6, 10]));
    assert_eq!(v["results"]["certificate"]["degree"], 4);
    assert_eq!(v["results"]["unbounded_min_gens"].as_array().unwrap().len(), 15);
}

#[test]
fn bounded_count_two_by_two() {
    let v = payload(&job(&["bounded-count", "1", "5", "1", "3"]));
    assert_eq!(v["results"]["count"], 3);
    assert_eq!(v["results"]["min_ad_bc"], 3);
}

#[test]
fn infinitely_many_bounded_classes_exit_two() {
    let j = job(&["subgraphs", "--budget", "10", "1; -1"]);
    let report = run(&j);
    assert_eq!(report.status, Status::Incomplete);
    assert_eq!(report.exit_code(), 2);
    assert_eq!(payload(&j)["results"]["class_count"], 11);
}

#[test]
fn characters_of_the_binomial_example() {
    let v = payload(&job(&["characters", "--", "-2 -1 0; 3 0 1; 0 3 0; -1 -2 0; 0 0 -1"]));
    assert_eq!(v["results"]["invariants"], serde_json::json!([3]));
    let chars = v["results"]["characters"].as_array().unwrap();
    assert_eq!(chars.len(), 3);
    for c in &chars[1..] {
        // roots of unity as (k, N) pairs, never floats
        assert!(c["values"].as_array().unwrap().iter().any(|p| p[1] == 3));
    }
}

#[test]
fn solve_emits_exact_fractions() {
    let v = payload(&job(&["solve", CONCRETE]));
    let sols = v["results"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 4);
    let cubic = &sols[3]["coefficients"];
    let c = cubic.as_array().unwrap().iter().find(|t| t["exponent"] == serde_json::json!([1, 1, 1])).unwrap();
    assert_eq!(c["coefficient"], "6");
    let v = payload(&job(&["solve", "--point", "4 0 0", CONCRETE]));
    // default truncation is d* + 2
    assert_eq!(v["results"]["solution"]["truncation"], 6);
    assert_eq!(v["results"]["solution"]["verification"]["annihilated"], true);
}

#[test]
fn fractions_appear_for_non_unit_ratios() {
    // one move (2, -1): λ_(0,1)·1! = λ_(2,0)·2!, so λ_(0,1) = 2 when λ_(2,0) = 1
    let v = payload(&job(&["solve", "--point", "0 1", "2; -1"]));
    let terms = v["results"]["solution"]["coefficients"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let v = payload(&job(&["solve", "--point", "2 0", "2; -1"]));
    let terms = v["results"]["solution"]["coefficients"].as_array().unwrap();
    assert!(terms.iter().any(|t| t["coefficient"] == "2"));
    let v = payload(&job(&["solve", "--point", "0 1", "2; -1"]));
    let terms = v["results"]["solution"]["coefficients"].as_array().unwrap();
    assert!(terms.iter().any(|t| t["coefficient"] == "1/2"));
}

#[test]
fn components_report_uncertifiable_candidates() {
    let j = job(&["components", "--", "1 -2 0; -1 1 0; -1 2 1; 1 -1 -1"]);
    let report = run(&j);
    assert_eq!(report.exit_code(), 2);
    let v = payload(&j);
    let comps = v["results"]["components"].as_array().unwrap();
    assert!(comps.iter().any(|c| c["q"] == 0 && c["u_min_gens"] == serde_json::json!([])));
    assert!(comps.iter().any(|c| c["status"] == "incomplete" && c["error"]["code"] == "congruence.incomplete"));
}

#[test]
fn renders_two_and_three_variables() {
    let moves = toral::congruence::moves_2x2(1, 5, 1, 3);
    let catalog = toral::congruence::bounded_catalog(&moves, None, 50, 1_000_000).unwrap();
    let text = render_ascii(&catalog);
    for g in ['0', '1', '2', '∞'] {
        assert!(text.contains(g));
    }
    let v = payload(&job(&["subgraphs", "--render", CONCRETE]));
    let r = v["rendering"].as_str().unwrap();
    assert!(r.contains("degree 3:") && r.contains('∞'));
    let big = int_matrix(&[[1, 0, 0, 0], [-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]);
    let catalog = toral::congruence::bounded_catalog(
        &toral::congruence::moves_from_columns(&big).unwrap(),
        None,
        3,
        100_000,
    )
    .unwrap();
    assert!(render_ascii(&catalog).contains("only available for 2 or 3 variables"));
}

#[test]
fn text_format_is_readable() {
    let j = job(&["bounded-count", "--format", "text", "1", "5", "1", "3"]);
    assert_eq!(j.options.format, Format::Text);
    let out = run(&j).render();
    assert!(out.contains("count: 3"));
}

#[test]
fn json_input_file() {
    let dir = std::env::temp_dir().join(format!("toral-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("m.json");
    std::fs::write(&json, r#"{"matrix": [[1, -5, 0], [-1, 1, -1], [0, 3, 1]]}"#).unwrap();
    let text = dir.join("m.txt");
    std::fs::write(&text, "1 -5 0\n-1 1 -1\n0 3 1\n").unwrap();
    let a = job(&["subgraphs", "--input", json.to_str().unwrap()]);
    let b = job(&["subgraphs", "--input", text.to_str().unwrap()]);
    assert_eq!(a, b);
    assert_eq!(a.matrix, job(&["subgraphs", CONCRETE]).matrix);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes_and_determinism() {
    let corpus: &[(&[&str], i32)] = &[
        (&["subgraphs", CONCRETE], 0),
        (&["bounded-count", "1", "5", "1", "3"], 0),
        (&["verify-2x2", "2", "1", "1", "3"], 0),
        (&["subgraphs", "--budget", "10", "1; -1"], 2),
        (&["snf", "2 4; 6 8"], 0),
        (&["decompose", "--", "-2 -1 0; 3 0 1; 0 3 0; -1 -2 0; 0 0 -1"], 0),
        (&["components", "--", "-2 -1 0; 3 0 1; 0 3 0; -1 -2 0; 0 0 -1"], 0),
        (&["components", "--", "1 -2 0; -1 1 0; -1 2 1; 1 -1 -1"], 2),
        (&["solve", "--point", "4 0 0", CONCRETE], 0),
        (&["solve", "--point", "4 0 0", "--budget", "2", CONCRETE], 1),
        (&["subgraphs", "1 2; x 4"], 1),
        (&["decompose", "1; 1"], 1),
        (&["bogus"], 1),
        (&["verify-2x2", "1", "1", "1", "1"], 1),
        (&["--help"], 0),
    ];
    for (args, code) in corpus {
        let (got, out, _) = binary(args);
        assert_eq!(got, *code, "{args:?}");
        let (_, again, _) = binary(args);
        assert_eq!(out, again, "{args:?} is not deterministic");
    }
    let (_, out, err) = binary(&["subgraphs", "--timing", CONCRETE]);
    assert!(err.contains("elapsed"));
    assert!(!out.contains("elapsed"));
}

fn arb_job() -> impl Strategy<Value = JobSpec> {
    let matrix = (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(|rows| int_matrix(&rows))
    });
    let options = (
        1u64..60,
        1usize..2_000_000,
        prop::option::of(1u64..6),
        prop::option::of(0u64..12),
        any::<bool>(),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(budget, node_cap, power, truncate, text, render, timing)| Options {
            budget,
            node_cap,
            power,
            truncate,
            point: None,
            format: if text { Format::Text } else { Format::Json },
            render,
            timing,
        });
    let command = prop::sample::select(vec![Command::Snf, Command::Characters, Command::Subgraphs, Command::Solve]);
    (command, matrix, options, prop::collection::vec(0i64..5, 3)).prop_map(|(command, matrix, mut options, p)| {
        if command == Command::Solve {
            options.point = Some(p[..matrix.rows()].to_vec());
        }
        JobSpec { command, matrix, options }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn jobs_round_trip_through_arguments(j in arb_job()) {
        // only jobs that validate are meaningful; the parser must agree
        match parse_job(j.to_args()) {
            Ok(parsed) => prop_assert_eq!(parsed, j),
            Err(CliError::Domain(_)) => {}
            Err(e) => prop_assert!(false, "{:?} failed to parse: {}", j.to_args(), e),
        }
    }

    #[test]
    fn two_by_two_jobs_round_trip(a in 1i64..7, b in 1i64..7, c in 1i64..7, d in 1i64..7) {
        let j = JobSpec {
            command: Command::Verify2x2,
            matrix: int_matrix(&[[a, b], [-c, -d]]),
            options: Options::default(),
        };
        prop_assert_eq!(parse_job(j.to_args()).unwrap(), j);
    }

    #[test]
    fn reports_are_deterministic(j in arb_job()) {
        if let Ok(parsed) = parse_job(j.to_args()) {
            let mut small = parsed;
            small.options.budget = small.options.budget.min(8);
            small.options.node_cap = small.options.node_cap.min(20_000);
            prop_assert_eq!(run(&small).render(), run(&small).render());
        }
    }
}
