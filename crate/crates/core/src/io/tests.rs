use super::*;
use crate::comodule::check_bicomodule;
use crate::entwine::check_entwining;

#[test]
fn fields() {
    assert_eq!(parse_field("Q").unwrap(), Field::Rationals);
    assert_eq!(parse_field("GF(7)").unwrap(), Field::Prime(7));
    assert!(parse_field("GF(8)").is_err());
    assert!(parse_field("R").is_err());
    assert_eq!(serde_json::to_string(&Field::Prime(5)).unwrap(), "\"GF(5)\"");
}

#[test]
fn scalars_accept_numbers_and_fractions() {
    let m: MatrixJson = from_json(r#"[[1, "-2/4"], ["0", 3]]"#, "inline").unwrap();
    let x = m.to_matrix(Field::Rationals, 2, 2).unwrap();
    assert_eq!(x[(0, 1)], Scalar::ratio(-1, 2));
    assert_eq!(serde_json::to_string(&MatrixJson::from(&x)).unwrap(), r#"[["1","-1/2"],["0","3"]]"#);
    // 1/2 = 2 in GF(3)
    let y = m.to_matrix(Field::Prime(3), 2, 2).unwrap();
    assert_eq!(y[(0, 1)], Scalar::Mod { v: 1, p: 3 });
    assert!(m.to_matrix(Field::Rationals, 2, 3).is_err());
}

#[test]
fn parse_errors_carry_position() {
    let err = from_json::<CoringSpec>("{\n  \"kind\": \"comatrix\",\n  \"n\": \"two\"\n}", "c.json").unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("c.json:"), "{msg}");
    let err = from_json::<CoringSpec>(r#"{"kind": "nonsense"}"#, "c.json").unwrap_err();
    assert!(err.to_string().contains("c.json:1:"), "{err}");
}

#[test]
fn named_specs() {
    let c: CoringSpec = from_json(r#"{"kind": "comatrix", "n": 2}"#, "inline").unwrap();
    assert_eq!(c.build().unwrap().dim(), 4);
    let c: CoringSpec = from_json(
        r#"{"kind": "tensor", "left": {"kind": "group_like", "n": 2}, "right": {"kind": "catalog", "id": "comatrix-2"}}"#,
        "inline",
    )
    .unwrap();
    assert_eq!(c.build().unwrap().dim(), 8);
    let c: CoringSpec = from_json(r#"{"kind": "catalog", "id": "no-such"}"#, "inline").unwrap();
    assert!(c.build().is_err());
    let c: CoringSpec = from_json(
        r#"{"kind": "sweedler", "algebra": {"kind": "truncated", "n": 2}, "subalgebra": [[1, 0]]}"#,
        "inline",
    )
    .unwrap();
    assert_eq!(c.build().unwrap().dim(), 4);
    let c: CoringSpec = from_json(r#"{"kind": "base_change", "of": {"kind": "group_like", "n": 2}, "minpoly": [1, 0, 1]}"#, "inline").unwrap();
    assert_eq!(c.build().unwrap().base().dim(), 2);
}

#[test]
fn explicit_corings_round_trip() {
    for entry in catalog::catalog().iter().filter(|e| e.id != "comatrix-2-x-comatrix-2") {
        let c = entry.build().unwrap();
        let spec = CoringSpec::explicit(&c);
        let text = to_json(&spec).unwrap();
        let back = from_json::<CoringSpec>(&text, entry.id).unwrap().build().unwrap();
        assert_eq!(back.carrier(), c.carrier(), "{}", entry.id);
        assert_eq!(back.comult(), c.comult(), "{}", entry.id);
        assert_eq!(back.counit(), c.counit(), "{}", entry.id);
        assert_eq!(to_json(&CoringSpec::explicit(&back)).unwrap(), text);
    }
}

#[test]
fn broken_explicit_coring_is_rejected() {
    let mut spec = CoringSpec::explicit(&Coring::group_like(Field::Rationals, 2));
    if let CoringSpec::Explicit { counit, .. } = &mut spec {
        counit.0[0][0] = ScalarJson::Int(2);
    }
    let c = spec.build().unwrap();
    assert!(c.check().has("counit"));
}

#[test]
fn comodules_round_trip() {
    let c = Coring::comatrix(Field::Rationals, 2);
    for side in [Side::Left, Side::Right] {
        let m = Comodule::regular(&c, side);
        let spec = ComoduleSpec::explicit(&m);
        let back = from_json::<ComoduleSpec>(&to_json(&spec).unwrap(), "inline").unwrap().build().unwrap();
        assert_eq!(back.coaction(), m.coaction());
        let short: ComoduleSpec =
            from_json(&format!(r#"{{"coring": {{"kind": "comatrix", "n": 2}}, "side": "{}"}}"#, if side == Side::Left { "left" } else { "right" }), "inline")
                .unwrap();
        assert_eq!(short.build().unwrap().coaction(), m.coaction());
    }
}

#[test]
fn bicomodules_and_entwinings_round_trip() {
    for (id, b) in catalog::bicomodules().unwrap() {
        let back = BicomoduleSpec::explicit(&b).build().unwrap();
        assert!(check_bicomodule(&back).is_valid(), "{id}");
        assert_eq!(back.lambda(), b.lambda(), "{id}");
        assert_eq!(back.rho(), b.rho(), "{id}");
    }
    for (id, e) in catalog::entwinings().unwrap() {
        let back = EntwiningSpec::explicit(&e).build().unwrap();
        assert_eq!(back.psi, e.psi, "{id}");
        assert_eq!(check_entwining(&back).is_valid(), check_entwining(&e).is_valid(), "{id}");
    }
}
