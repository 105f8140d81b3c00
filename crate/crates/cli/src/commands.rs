use serde_json::{json, Value};
use sjplane::algebra::{check_identities, reduce_word, reduce_word_with, GenWord, Generator, Strategy};
use sjplane::classify::{classify, construct, iso_criterion, Classification};
use sjplane::exactmath::{ratio, rational, split_spectrum};
use sjplane::modtheory::{check_representation, full_decompose, is_isomorphic, RelationCheck};
use sjplane::{Label, Mat, Rational, Rep};

use crate::error::CliError;
use crate::input::InputDocument;
use crate::report::Report;

/// A command with its inputs already loaded.
#[derive(Clone, Debug)]
pub enum Command {
    Check(InputDocument),
    Classify(InputDocument),
    Decompose(InputDocument),
    Iso(InputDocument, InputDocument),
    Construct(String),
    Nf(String),
    Selftest { bmax: u32, cmax: u32, nmax: u32 },
}

pub const DEFAULT_BMAX: u32 = 6;
pub const DEFAULT_CMAX: u32 = 6;
pub const DEFAULT_NMAX: u32 = 8;

pub fn run_command(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Check(doc) => check(doc),
        Command::Classify(doc) => classify_cmd(doc),
        Command::Decompose(doc) => decompose(doc),
        Command::Iso(a, b) => iso(a, b),
        Command::Construct(text) => construct_cmd(text),
        Command::Nf(word) => nf(word),
        Command::Selftest { bmax, cmax, nmax } => selftest(*bmax, *cmax, *nmax),
    }
}

fn vector(v: &[Rational]) -> String {
    let xs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", xs.join(", "))
}

fn check(doc: &InputDocument) -> Result<Report, CliError> {
    match check_representation(&doc.x1, &doc.x2)? {
        RelationCheck::Valid => {
            let mut r = Report::new("check", "valid");
            r.lines.push(format!("dim {}: x1^2 = 0 and the cubic relation hold", doc.dim));
            r.payload = json!({ "dim": doc.dim, "valid": true });
            Ok(r)
        }
        RelationCheck::Violation { relation, row, col, value } => {
            let mut r = Report::new("check", "relation violated");
            r.ok = false;
            r.lines.push(format!("{relation} fails at entry ({}, {}): {value}", row + 1, col + 1));
            r.payload = json!({
                "dim": doc.dim,
                "valid": false,
                "relation": relation,
                "row": row + 1,
                "col": col + 1,
                "value": value,
            });
            Ok(r)
        }
    }
}

fn classify_cmd(doc: &InputDocument) -> Result<Report, CliError> {
    let rep = doc.representation()?;
    let c = classify(&rep)?;
    let labels: Vec<String> = c.labels().iter().map(|l| l.to_string()).collect();
    let kind = match c {
        Classification::Indecomposable(_) => "indecomposable",
        Classification::Decomposable(_) => "decomposable",
    };
    let mut r = Report::new("classify", labels.join(" + "));
    r.lines.push(kind.to_string());
    r.payload = json!({ "kind": kind, "labels": labels });
    Ok(r)
}

fn t_eigenvalue(rep: &Rep) -> Result<Rational, CliError> {
    let split = split_spectrum(&rep.t(), "T")?;
    Ok(split.distinct_roots().remove(0))
}

fn decompose(doc: &InputDocument) -> Result<Report, CliError> {
    let rep = doc.representation()?;
    let parts = full_decompose(&rep)?;
    let mut r = Report::new("decompose", format!("{} summand(s)", parts.len()));
    let mut summands = Vec::new();
    for (i, s) in parts.iter().enumerate() {
        let ev = t_eigenvalue(&s.rep)?;
        let basis: Vec<String> = s.basis.iter().map(|v| vector(v)).collect();
        r.lines.push(format!("summand {}: dim {}, T-eigenvalue {ev}", i + 1, s.rep.dim()));
        r.lines.push(format!("  basis {}", basis.join(", ")));
        r.lines.push(format!("  X1: {}", s.rep.x1()));
        r.lines.push(format!("  X2: {}", s.rep.x2()));
        summands.push(json!({
            "dim": s.rep.dim(),
            "t_eigenvalue": ev.to_string(),
            "basis": basis,
            "x1": s.rep.x1().to_string(),
            "x2": s.rep.x2().to_string(),
        }));
    }
    r.payload = json!({ "summands": summands });
    Ok(r)
}

fn iso(a: &InputDocument, b: &InputDocument) -> Result<Report, CliError> {
    let (ra, rb) = (a.representation()?, b.representation()?);
    let answer = is_isomorphic(&ra, &rb)?;
    let mut r = Report::new("iso", if answer { "isomorphic" } else { "not isomorphic" });
    r.payload = json!({ "isomorphic": answer, "dims": [ra.dim(), rb.dim()] });
    Ok(r)
}

fn construct_cmd(text: &str) -> Result<Report, CliError> {
    let label: Label = text.parse()?;
    let rep = construct(&label)?;
    let mut r = Report::new("construct", label.to_string());
    r.lines.push(format!("dim {}", rep.dim()));
    r.lines.push(format!("X1: {}", rep.x1()));
    r.lines.push(format!("X2: {}", rep.x2()));
    r.payload = json!({
        "label": label.to_string(),
        "dim": rep.dim(),
        "x1": rep.x1().to_string(),
        "x2": rep.x2().to_string(),
    });
    Ok(r)
}

fn parse_word(text: &str) -> Result<GenWord, CliError> {
    let mut letters = Vec::new();
    let mut col = 1;
    for piece in text.split(' ') {
        match piece {
            "" => {}
            "x1" => letters.push(Generator::X1),
            "x2" => letters.push(Generator::X2),
            other => {
                return Err(CliError::Parse {
                    origin: "<word>".into(),
                    line: 1,
                    col,
                    msg: format!("unknown letter {other:?}; expected x1 or x2"),
                })
            }
        }
        col += piece.chars().count() + 1;
    }
    Ok(GenWord(letters))
}

fn nf(text: &str) -> Result<Report, CliError> {
    let word = parse_word(text)?;
    let value = reduce_word::<Rational>(&word);
    let mut r = Report::new("nf", value.to_string());
    r.payload = json!({ "word": word.to_string(), "normal_form": value.to_string() });
    Ok(r)
}

/// Labels spread over every family, for the round-trip part of `selftest`.
const SAMPLE_LABELS: [&str; 14] = [
    "JordanChain(7,3)",
    "Dim2U(2,3)",
    "Dim2V(-1/2)",
    "T1U(1,2)",
    "T1Y(1,0,2,3,4)",
    "T2R(0)",
    "T2S(5/3)",
    "T2T(1,2,-1)",
    "T3U(2,1)",
    "T3W(1,1,2,-1,0)",
    "T4Vupper(3)",
    "T4Vlower(-1)",
    "FamU(2,3)",
    "FamV(1,2)",
];

/// A fixed change of basis: upper unitriangular with a dense upper part.
fn mixing_matrix(n: usize) -> Mat {
    Mat::from_fn(n, n, |i, j| match j.cmp(&i) {
        std::cmp::Ordering::Less => rational(0),
        std::cmp::Ordering::Equal => rational(1),
        std::cmp::Ordering::Greater => ratio((i + 2 * j) as i64, 2),
    })
}

fn selftest(bmax: u32, cmax: u32, nmax: u32) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut all_ok = true;
    for lambda in [rational(0), rational(1), ratio(-3, 2)] {
        for c in check_identities(bmax, cmax, nmax, &lambda).checks {
            all_ok &= c.passed();
            let status = if c.passed() { "ok" } else { "FAILED" };
            lines.push(format!(
                "identity {:<48} lambda {:>4}  {:>4} instances  {status}",
                c.name, lambda.to_string(), c.instances
            ));
            rows.push(json!({
                "name": c.name,
                "lambda": lambda.to_string(),
                "instances": c.instances,
                "passed": c.passed(),
                "counterexample": c.counterexample,
            }));
        }
    }

    let mut confluent = true;
    for len in 0..=6 {
        for w in GenWord::all_of_length(len) {
            let l = reduce_word_with::<Rational>(&w, Strategy::Leftmost);
            confluent &= l == reduce_word_with(&w, Strategy::Rightmost) && l == reduce_word(&w);
        }
    }
    all_ok &= confluent;
    lines.push(format!("confluence on words of length <= 6  {}", if confluent { "ok" } else { "FAILED" }));

    let mut trips = Vec::new();
    for text in SAMPLE_LABELS {
        let label: Label = text.parse()?;
        let rep = construct(&label)?;
        let moved = rep.conjugate(&mixing_matrix(rep.dim()))?;
        let (found, passed) = match classify(&moved) {
            Ok(Classification::Indecomposable(f)) => (f.to_string(), iso_criterion(&label, &f)),
            Ok(Classification::Decomposable(ls)) => (format!("{ls:?}"), false),
            Err(e) => (e.name(), false),
        };
        all_ok &= passed;
        lines.push(format!(
            "round trip {text:<18} -> {found:<18} {}",
            if passed { "ok" } else { "FAILED" }
        ));
        trips.push(json!({ "label": text, "found": found, "passed": passed }));
    }

    let mut r = Report::new("selftest", if all_ok { "all checks passed" } else { "FAILED" });
    r.ok = all_ok;
    r.lines = lines;
    r.payload = json!({
        "bounds": { "bmax": bmax, "cmax": cmax, "nmax": nmax },
        "identities": Value::Array(rows),
        "confluence": confluent,
        "round_trips": trips,
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    fn doc(text: &str) -> InputDocument {
        parse_input(text).unwrap()
    }

    #[test]
    fn classify_example() {
        let r = run_command(&Command::Classify(doc("dim 2 / X1: 0 1 ; 0 0 / X2: 2 3 ; 0 2"))).unwrap();
        assert_eq!(r.verdict, "Dim2U(2,3)");
    }

    #[test]
    fn nf_example() {
        let r = run_command(&Command::Nf("x2 x1".into())).unwrap();
        assert_eq!(r.verdict, "+1·x21 − 1·x1·x2");
        assert!(matches!(
            run_command(&Command::Nf("x2 y".into())),
            Err(CliError::Parse { col: 4, .. })
        ));
    }

    #[test]
    fn decompose_example() {
        // U(1,0) + U(2,0): T-eigenvalues 1 and 4
        let d = doc("dim 4\nX1: 0 1 0 0 ; 0 0 0 0 ; 0 0 0 1 ; 0 0 0 0\nX2: 1 0 0 0 ; 0 1 0 0 ; 0 0 2 0 ; 0 0 0 2");
        let r = run_command(&Command::Decompose(d)).unwrap();
        let evs: Vec<&str> = r.payload["summands"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["t_eigenvalue"].as_str().unwrap())
            .collect();
        assert_eq!(evs, ["1", "4"]);
        assert_eq!(r.verdict, "2 summand(s)");
    }

    #[test]
    fn check_reports_violations() {
        let r = run_command(&Command::Check(doc("dim 2 / X1: 0 1 ; 0 0 / X2: 1 0 ; 1 1"))).unwrap();
        assert!(!r.ok);
        assert_eq!(r.verdict, "relation violated");
    }

    #[test]
    fn selftest_passes_at_small_bounds() {
        let r = run_command(&Command::Selftest { bmax: 2, cmax: 2, nmax: 3 }).unwrap();
        assert!(r.ok, "{}", r.text());
    }
}
