mod common;

use proptest::prelude::*;

use hodp::syntax::{parse_pattern, parse_system, parse_type, print_system};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pattern_round_trip(p in common::pattern(4)) {
        prop_assert_eq!(parse_pattern(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn type_round_trip(t in common::ty(4, 3)) {
        let back = parse_type(&t.to_string()).unwrap();
        prop_assert!(back.alpha_eq(&t), "{} reparsed as {}", t, back);
    }

    #[test]
    fn system_round_trip(sys in common::system()) {
        let text = print_system(&sys);
        let back = parse_system(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        prop_assert!(back.alpha_eq(&sys), "round trip changed\n{}", text);
        prop_assert_eq!(print_system(&back), text);
    }

    #[test]
    fn printing_is_deterministic(sys in common::system()) {
        prop_assert_eq!(print_system(&sys), print_system(&sys.clone()));
    }
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_system("symbol f : B(leaf) recursive 0;\nrule f -> ;").unwrap_err();
    assert_eq!(e.span.line, 2);
    assert!(e.to_string().starts_with("2:"));
}
