use mtlab::{run, Outcome};
use serde_json::Value;

fn mtlab(args: &str) -> Outcome {
    run(std::iter::once("mtlab").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = mtlab(&format!("--format json {args}"));
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: {e}\n{}", out.stdout))
}

#[test]
fn disc_of_cyclic_cubic() {
    let out = mtlab("disc --N 3 --A -3 --B -1");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "trinomial\tdiscriminant\nx^3 - 3x - 1\t81\n");
}

#[test]
fn monogenic_member_of_first_family() {
    let out = mtlab("monogenic --N 3 --A -1 --B -1");
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("\tMonogenic\n"), "{}", out.stdout);
}

#[test]
fn monogenic_json_carries_witness() {
    let v = json("monogenic --N 3 --A -9 --B -1");
    assert_eq!(v["monogenic"]["verdict"], "NotMonogenic");
    assert_eq!(v["monogenic"]["witness_prime"], "3");
    assert_eq!(v["monogenic"]["condition"], "2");
    assert_eq!(v["trinomial"]["A"], "-9");
}

#[test]
fn classnum_small_fields() {
    let out = mtlab("classnum --delta -23");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().nth(1), Some("-23\t-23\t3\tFormEnumeration\t-\t-"));
    let v = json("classnum --delta 229");
    assert_eq!(v["h"]["value"], "3");
    assert_eq!(v["h"]["unit_norm"], "-1");
}

#[test]
fn classnum_requires_squarefree() {
    assert_eq!(mtlab("classnum --delta 12").code, 2);
    assert_eq!(mtlab("classnum --delta 1").code, 3);
}

#[test]
fn classnum_slow_gate() {
    let out = mtlab("classnum --delta 244140626");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--slow"));
}

#[test]
fn irr_verdicts() {
    let out = mtlab("irr --N 3 --A -2 --B -4");
    assert!(out.stdout.contains("Reducible(2)"));
    let v = json("irr --N 5 --A 2 --B 2");
    assert_eq!(v["irreducible"]["verdict"], "Irreducible");
    assert_eq!(v["irreducible"]["certificate"], "Eisenstein(2)");
}

#[test]
fn jks_lists_each_prime() {
    let out = mtlab("jks --N 3 --A -10 --B -4");
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.lines().skip(1).collect();
    assert_eq!(rows, ["2\t4\tFail(1)\tdivides", "223\t1\tPass\t-"]);
    assert_eq!(mtlab("jks --N 3 --A -10 --B -4 --q 5").code, 3);
}

#[test]
fn order_of_form() {
    let out = mtlab("order --form 2,-1,3");
    assert_eq!(out.stdout.lines().nth(1), Some("(2, -1, 3)\t-23\t(2, -1, 3)\t3"));
    assert_eq!(mtlab("order --form 1,1").code, 3);
    assert_eq!(mtlab("order --form 1,1,-1").code, 3);
}

#[test]
fn usage_errors_exit_3() {
    for args in ["", "table 5", "disc --N 3 --A 1", "disc --N 2 --A 1 --B 1", "disc --N 3 --A 1 --B 0", "verify main1 --a 1..2", "verify all --w 1"] {
        let out = mtlab(args);
        assert_eq!(out.code, 3, "{args}: {}", out.stderr);
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(mtlab("--help").code, 0);
    assert!(mtlab("--version").stdout.starts_with("mtlab "));
}

#[test]
fn verify_table4_range() {
    let out = mtlab("verify main4 --N 3 --b 2..4");
    assert_eq!(out.code, 0, "{}", out.stdout);
    for claim in ["7 | 42", "9 | 108", "11 | 396"] {
        assert!(out.stdout.contains(claim), "{claim}");
    }
}

#[test]
fn verify_pending_without_slow() {
    let out = mtlab("verify main4");
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("PENDING Main4 N=7 b=1"));
}

#[test]
fn scan_records_match_schema() {
    let v = json("scan main1 --range -1..1");
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 3);
    let r = &records[2];
    assert_eq!(r["family"], "Main1");
    assert_eq!(r["params"]["w"], "1");
    assert_eq!(r["delta"], "-23");
    assert_eq!(r["D"], "-23");
    assert_eq!(r["h"]["value"], "3");
    assert_eq!(r["n_claimed"], "3");
    assert_eq!(r["claim_holds"], "true");
    assert_eq!(records[1]["claim_holds"], "NotEvaluated");
}

#[test]
fn output_is_deterministic() {
    for args in ["table 2", "scan main2", "--format json scan main3 --N 6 --b 1"] {
        assert_eq!(mtlab(args), mtlab(args), "{args}");
    }
}

#[test]
fn tsv_has_no_trailing_whitespace() {
    let out = mtlab("scan main2 --a 1 --b 2..4");
    assert!(out.stdout.ends_with('\n'));
    for line in out.stdout.lines() {
        assert_eq!(line, line.trim_end());
        assert_eq!(line.split('\t').count(), 10);
    }
}
