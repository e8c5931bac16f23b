use proptest::prelude::*;
use sfcontact::seifert::SeifertData;
use sfcontact::BigInt;
use sfcontact_cli::commands::{gamma_input, seifert_input, CliError};
use sfcontact_cli::{parse_gammas, parse_seifert};

fn coprime(a: i64, b: i64) -> bool {
    let (mut x, mut y) = (a.abs(), b.abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x == 1
}

fn valid_seifert() -> impl Strategy<Value = SeifertData<BigInt>> {
    let fiber = (1i64..60, -500i64..500).prop_filter("coprime", |&(a, b)| coprime(a, b));
    (any::<i64>(), -50i64..50, prop::collection::vec(fiber, 0..8)).prop_map(|(b, g, fibers)| {
        SeifertData::new(b.into(), g.into(), fibers.into_iter().map(|(a, b)| (a.into(), b.into())))
    })
}

/// Same expression with arbitrary whitespace between tokens.
fn spaced(m: &SeifertData<BigInt>, pad: &[usize]) -> String {
    let ws = |i: usize| " \t\n".chars().cycle().take(pad[i % pad.len()]).collect::<String>();
    let mut s = format!("{}{{{}{}{};{}{}{};", ws(0), ws(1), m.b, ws(2), ws(3), m.g, ws(4));
    for (i, f) in m.fibers.iter().enumerate() {
        if i > 0 {
            s.push_str(&format!("{},", ws(i + 5)));
        }
        s.push_str(&format!("{}({}{},{}{}){}", ws(i), f.alpha, ws(i + 1), ws(i + 2), f.beta, ws(i + 3)));
    }
    s.push_str(&format!("}}{}", ws(7)));
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn print_then_parse_is_identity(m in valid_seifert()) {
        let text = m.to_string();
        prop_assert_eq!(parse_seifert(&text).unwrap(), m.clone());
        prop_assert!(seifert_input(&text).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn whitespace_is_insignificant(m in valid_seifert(), pad in prop::collection::vec(0usize..3, 1..8)) {
        prop_assert_eq!(parse_seifert(&spaced(&m, &pad)).unwrap(), m);
    }

    #[test]
    fn json_form_agrees_with_text_form(m in valid_seifert()) {
        let fibers: Vec<String> = m.fibers.iter().map(|f| format!("[{}, {}]", f.alpha, f.beta)).collect();
        let json = format!(r#"{{"b": {}, "g": {}, "fibers": [{}]}}"#, m.b, m.g, fibers.join(", "));
        prop_assert_eq!(parse_seifert(&json).unwrap(), m);
    }

    #[test]
    fn truncated_input_is_a_syntax_error(m in valid_seifert(), cut in 0usize..1000) {
        let text = m.to_string();
        let cut = cut % text.len();
        prop_assert!(parse_seifert(&text[..cut]).is_err());
    }

    #[test]
    fn gamma_lists_round_trip(entries in prop::collection::vec((1i64..1000, 2i64..1000), 1..8)) {
        let text: Vec<String> = entries.iter().map(|(n, d)| format!("{n}/{d}")).collect();
        let parsed = parse_gammas(&text.join(",")).unwrap();
        prop_assert_eq!(parsed.len(), entries.len());
        for (r, (n, d)) in parsed.iter().zip(&entries) {
            prop_assert_eq!(r * BigInt::from(*d), sfcontact::Rational::from_integer(BigInt::from(*n)));
        }
    }
}

#[test]
fn huge_integers_survive() {
    let text = "{-123456789012345678901234567890; 0; (98765432109876543210987,1)}";
    let m = parse_seifert(text).unwrap();
    assert_eq!(m.to_string(), text);
}

#[test]
fn invalid_fibers_are_not_syntax_errors() {
    assert!(matches!(seifert_input("{-1; 0; (2,2)}"), Err(CliError::Invalid(_))));
    assert!(matches!(seifert_input("{-1; 0; (0,1)}"), Err(CliError::Invalid(_))));
    assert!(matches!(gamma_input("1/2,1,1/3"), Err(CliError::Invalid(_))));
    assert!(matches!(gamma_input("1/2,,1/3"), Err(CliError::Parse(_))));
}
