use std::path::Path;

use jacsyz::{load, parse_corpus, run_batch, Error, Options};
use jacsyz_core::tau_formula;

fn shipped() -> Vec<jacsyz::CorpusEntry> {
    load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/curves.jsonl")).unwrap()
}

#[test]
fn shipped_corpus_contents() {
    let entries = shipped();
    for needed in ["x^2 + y^2 + z^2", "x^4 + y^4 + z^4", "x*y*z", "y^2*z - x^3"] {
        assert!(entries.iter().any(|e| e.polynomial == needed), "{needed}");
    }
    for d in 4..=8 {
        let p = format!("x^{d} + y^{}*z", d - 1);
        let e = entries.iter().find(|e| e.polynomial == p).expect("family member");
        assert!(e.assume_rational_cuspidal);
    }
    let neither = entries
        .iter()
        .filter(|e| e.expected.as_ref().and_then(|x| x.verdict.as_deref()) == Some("Neither"))
        .count();
    assert!(neither >= 1);
}

#[test]
fn expectations_are_self_consistent() {
    // independent of the pipeline: exponents and tau obey the closed forms
    for e in shipped() {
        let x = e.expected.clone().unwrap();
        let d = jacsyz_core::parse_poly(&e.polynomial).unwrap().degree() as i64;
        let (r, tau) = (x.mdr.unwrap() as i64, x.tau.unwrap() as i64);
        match x.verdict.as_deref().unwrap() {
            "Free" => {
                assert_eq!(tau, tau_formula(d, r), "{}", e.name);
                assert_eq!((x.d1.unwrap() + x.d2.unwrap()) as i64, d - 1);
                assert_eq!(x.nu, Some(0));
            }
            "NearlyFree" => {
                assert_eq!(tau, tau_formula(d, r) - 1, "{}", e.name);
                assert_eq!((x.d1.unwrap() + x.d2.unwrap()) as i64, d);
                assert_eq!(x.nu, Some(1));
            }
            _ => assert!(tau < tau_formula(d, r) - 1 || 2 * r > d, "{}", e.name),
        }
    }
}

#[test]
fn one_cusp_family_tjurina() {
    // a single cusp of type y^{d-1} = x^d has tau = mu = (d-1)(d-2)
    for e in shipped().iter().filter(|e| e.name.starts_with("one-cusp") || e.name.contains("two-cusp")) {
        let d = jacsyz_core::parse_poly(&e.polynomial).unwrap().degree() as usize;
        assert_eq!(e.expected.as_ref().unwrap().tau, Some((d - 1) * (d - 2)), "{}", e.name);
    }
}

#[test]
fn batch_library_api() {
    let entries = shipped();
    let summary = run_batch(&entries, &Options::default());
    assert_eq!(summary.failed, 0, "{}", summary.render_text());
    assert!(summary.mismatches().is_empty());
    let names: Vec<&str> = summary.entries.iter().map(|r| r.name.as_str()).collect();
    let expected: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
    assert_eq!(names, expected);
    assert!(summary.entries.iter().all(|r| r.report.as_ref().unwrap().escalations == 0));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse_corpus("# header\n{\"name\": \"a\", \"polynomial\": \"x*y\"}\nnot json\n").unwrap_err();
    assert!(matches!(err, Error::CorpusParse { line: 3, .. }));
    let err = parse_corpus(r#"{"name": "a", "polynomial": "x*y", "colour": 1}"#).unwrap_err();
    assert_eq!(err.code(), "CorpusParseError");
    let ok = parse_corpus(r#"{"name": "a", "polynomial": "x*y"}"#).unwrap();
    assert!(!ok[0].assume_rational_cuspidal && ok[0].expected.is_none());
}
