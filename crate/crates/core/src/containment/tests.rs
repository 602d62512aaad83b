use super::*;
use crate::ring::{parse_polynomial, Ring};

fn sq(p: u64, n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
    let ring = Ring::with_standard_names(p, n).unwrap();
    let masks = gens.iter().map(|g| g.iter().fold(0u64, |m, &i| m | 1 << i)).collect();
    SquarefreeIdeal::from_masks(&ring, masks).unwrap()
}

fn triangle(p: u64) -> Subject {
    sq(p, 3, &[&[0, 1], &[0, 2], &[1, 2]]).into()
}

#[test]
fn triangle_theorem_instances() {
    let a = verify_main(&triangle(2), 1, 0, Variant::A).unwrap();
    assert!(a.verdict.holds(), "{a}");
    assert_eq!(a.statement, "I^(3) ⊆ m·I");

    let b = verify_main(&triangle(2), 2, 0, Variant::B).unwrap();
    assert!(b.verdict.holds(), "{b}");
    assert_eq!(b.statement, "I^(3) ⊆ I^2");
    assert!(b.note.as_deref().unwrap().starts_with("F-pure at p = 2"));

    let els = verify_main(&triangle(2), 2, 0, Variant::Els).unwrap();
    assert!(els.verdict.holds(), "{els}");
    assert_eq!(els.statement, "I^(4) ⊆ I^2");
}

#[test]
fn sharpness_probe_fails_with_xyz() {
    let t = triangle(2);
    let r = symbolic_containment(&t, 2, 1, 2, false).unwrap();
    let Verdict::Fails(w) = &r.verdict else { panic!("{r}") };
    assert_eq!(w.to_string(), "x*y*z");
    // Re-check the witness through the Gröbner engine.
    let left = t.symbolic_power(2).unwrap();
    assert!(ideal_member(w, &left).unwrap());
    assert!(!ideal_member(w, &t.ideal().power(2)).unwrap());
}

#[test]
fn variant_b_preconditions() {
    // Height one: (x) ∩ (y, z).
    let mixed: Subject = sq(2, 3, &[&[0, 1], &[0, 2]]).into();
    let r = verify_main(&mixed, 1, 0, Variant::B).unwrap();
    assert!(matches!(r.verdict, Verdict::PreconditionUnmet(_)), "{r}");

    let ring = Ring::new(2, vec!["x", "y", "z"]).unwrap();
    let cusp = Ideal::parse(&ring, &["x^2 - y^3"]).unwrap();
    let s = parse_polynomial(&ring, "z + 1").unwrap();
    let g: Subject = GeneralIdeal::new(cusp, vec![vec![0, 1]], Some(s)).unwrap().into();
    let r = verify_main(&g, 1, 0, Variant::B).unwrap();
    assert_eq!(r.verdict.name(), "PreconditionUnmet");
}

#[test]
fn audit_examples() {
    let t = sq(2, 3, &[&[0, 1], &[0, 2], &[1, 2]]);
    let links = audit_proof_chain(&t, 1, 0).unwrap();
    assert_eq!(links.len(), 4);
    assert!(links.iter().all(|r| r.verdict.holds()), "{links:?}");
    assert_eq!(links[0].params["l"], 1);
    assert_eq!(links[0].statement, "I^(3)·τ(1·I^(•)) ⊆ τ(4·I^(•))");

    let principal = sq(2, 3, &[&[0, 1, 2]]);
    let links = audit_proof_chain(&principal, 1, 0).unwrap();
    assert_eq!(links[0].params["l"], 0);
    assert!(links.iter().all(|r| r.verdict.holds()));
}

#[test]
fn colon_claim_examples() {
    // ((x^2 y^2) : (xy)) = (xy) = (x) ∩ (y)
    let xy: Subject = sq(2, 2, &[&[0, 1]]).into();
    let r = check_colon_claim(&xy, 1).unwrap();
    assert!(r.verdict.holds(), "{r}");
    let ring = xy.ring().clone();
    let left = frobenius_colon(&xy.ideal(), 1).unwrap();
    assert!(left.same_ideal(&Ideal::parse(&ring, &["x*y"]).unwrap()).unwrap());

    let prime: Subject = sq(3, 3, &[&[0], &[1]]).into();
    assert!(check_colon_claim(&prime, 1).unwrap().verdict.holds());
    assert!(check_colon_claim(&triangle(2), 1).unwrap().verdict.holds());
    assert!(check_colon_claim(&triangle(2), 2).unwrap().verdict.holds());
}

#[test]
fn colon_claim_for_general_radical_ideal() {
    // (xy) attested with (x) as its only prime: the two sides disagree.
    let ring = Ring::new(3, vec!["x", "y"]).unwrap();
    let i = Ideal::parse(&ring, &["x*y"]).unwrap();
    let g: Subject = GeneralIdeal::new(i, vec![vec![0]], None).unwrap().into();
    let r = check_colon_claim(&g, 1).unwrap();
    assert_eq!(r.verdict.name(), "Fails");

    let no_primes = GeneralIdeal::new(Ideal::parse(&ring, &["x^2 - y^2"]).unwrap(), vec![], None).unwrap();
    assert!(check_colon_claim(&no_primes.into(), 1).is_err());
}

#[test]
fn fpure_colon_inclusion_examples() {
    let r = check_fpure_colon_inclusion(&triangle(2), 1).unwrap();
    assert!(r.verdict.holds(), "{r}");
    let mixed: Subject = sq(2, 3, &[&[0, 1], &[0, 2]]).into();
    let r = check_fpure_colon_inclusion(&mixed, 1).unwrap();
    assert!(matches!(r.verdict, Verdict::PreconditionUnmet(_)));
}

#[test]
fn conjecture_examples() {
    let t = sq(2, 3, &[&[0, 1], &[0, 2], &[1, 2]]);
    assert!(check_conjecture(&t).unwrap().verdict.holds());

    let explicit = Corpus::new(Recipe::Explicit(vec![t, sq(2, 3, &[&[0, 1, 2]]), sq(2, 3, &[&[0], &[1], &[2]])]), 2);
    let out = conjecture_scan(&explicit).unwrap();
    assert_eq!(out.reports.len(), 1);
    assert_eq!(out.skipped.len(), 2);
    assert_eq!(out.counterexamples().count(), 0);

    let out = conjecture_scan(&Corpus::new(Recipe::AllSquarefree(4), 2)).unwrap();
    assert_eq!(out.counterexamples().count(), 0);
    assert_eq!(out.reports.len(), 63);
}

#[test]
fn general_symbolic_power_matches_monomial() {
    let ring = Ring::new(2, vec!["x", "y", "z"]).unwrap();
    let t = sq(2, 3, &[&[0, 1], &[0, 2], &[1, 2]]);
    let primes = t.minimal_primes().to_vec();
    let sep = parse_polynomial(&ring, "x + y + z").unwrap();
    let got = symbolic_power_general(&t.to_ideal(), 2, &sep, &primes).unwrap();
    let want = Ideal::from_monomial(&ring, &t.symbolic_power(2)).unwrap();
    assert!(got.same_ideal(&want).unwrap());

    // A prime: saturation changes nothing.
    let p = Ideal::parse(&ring, &["x", "y"]).unwrap();
    let got = symbolic_power_general(&p, 3, &sep, &[vec![0, 1]]).unwrap();
    assert!(got.same_ideal(&p.power(3)).unwrap());

    let gen = parse_polynomial(&ring, "x*y").unwrap();
    assert!(symbolic_power_general(&t.to_ideal(), 2, &gen, &primes).is_err());
}

#[test]
fn general_path_verify_agrees_with_monomial_path() {
    let ring = Ring::new(2, vec!["x", "y", "z"]).unwrap();
    let t = sq(2, 3, &[&[0, 1], &[0, 2], &[1, 2]]);
    let sep = parse_polynomial(&ring, "x + y + z").unwrap();
    let g: Subject = GeneralIdeal::new(t.to_ideal(), t.minimal_primes().to_vec(), Some(sep)).unwrap().into();
    let r = verify_main(&g, 1, 0, Variant::A).unwrap();
    assert!(r.verdict.holds(), "{r}");
    assert!(r.note.is_some());

    let no_sep: Subject = GeneralIdeal::new(t.to_ideal(), t.minimal_primes().to_vec(), None).unwrap().into();
    assert!(verify_main(&no_sep, 1, 0, Variant::A).is_err());
}

#[test]
fn report_json_round_trip() {
    let r = symbolic_containment(&triangle(2), 2, 1, 2, false).unwrap();
    let rec = r.record();
    let text = serde_json::to_string(&rec).unwrap();
    let back: ReportRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rec);
    assert_eq!(back.witness.as_deref(), Some("x*y*z"));
    assert!(!text.contains("\"reason\""));

    let s = Summary::of(&[r]);
    assert_eq!((s.total, s.fails), (1, 1));
}
