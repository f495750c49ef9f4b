use proptest::prelude::*;
use qforms::{parse_poly, spec_from_json, spec_to_json};
use qforms_core::{ClassFieldSpec, Fq, Poly};

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop_oneof![Just(3u64), Just(5), Just(7)].prop_flat_map(|q| {
        let field = Fq::new(q).unwrap();
        proptest::collection::vec(0..field.q(), 0..12).prop_map(move |c| Poly::new(field, c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 3000, ..ProptestConfig::default() })]

    #[test]
    fn parse_inverts_display(f in poly_strategy()) {
        prop_assert_eq!(parse_poly(&f.to_string(), f.field()).unwrap(), f);
    }

    #[test]
    fn negative_residues_accepted(f in poly_strategy()) {
        // the same polynomial written with signed coefficients in [-(q-1)/2, (q-1)/2]
        let q = f.field().q() as i64;
        let terms: Vec<String> = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let c = c as i64;
                let signed = if c > q / 2 { c - q } else { c };
                format!("({signed})*t^{i}")
            })
            .collect();
        let text = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        prop_assert_eq!(parse_poly(&text, f.field()).unwrap(), f);
    }
}

#[test]
fn spec_records_round_trip() {
    for spec in [ClassFieldSpec::f3_example(), ClassFieldSpec::f3_example_primitive()] {
        let text = spec_to_json(&spec);
        assert_eq!(spec_from_json(&text).unwrap(), spec);
    }
}
