mod common;

use homsum::{parse, print};
use rand::Rng;

#[test]
fn parse_inverts_print() {
    let mut rng = common::rng(31);
    for _ in 0..1500 {
        let depth = rng.gen_range(0..=6);
        let e = common::expr(&mut rng, depth, true);
        let text = print(&e);
        let back = parse(&text).unwrap_or_else(|err| panic!("{}", err.render(&text)));
        assert_eq!(back, e, "{text}");
        assert_eq!(print(&back), text);
    }
}

#[test]
fn print_parse_is_idempotent_on_user_text() {
    for text in [
        "CP(2)#S(4)",
        "((S(3))) * (S(4))",
        "Σ S(1) ∧ S(2) ∨ M(4,2)",
        "S(1) * S(2) * S(3) ^ S(4)",
        "halfsmash( punct( SS(2) ) , S(1) )",
        "(S(4) # S(4)) v S(2)",
    ] {
        let once = print(&parse(text).unwrap());
        let twice = print(&parse(&once).unwrap());
        assert_eq!(once, twice, "{text}");
    }
}

#[test]
fn error_spans_stay_in_bounds() {
    let alphabet: Vec<char> = "S CP M SS ( ) , * ^ v # Sigma punct halfsmash 0 1 2 3 7 - x +"
        .chars()
        .collect();
    let mut rng = common::rng(32);
    let mut errors = 0;
    for _ in 0..3000 {
        let len = rng.gen_range(0..24);
        let text: String = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
            .collect();
        if let Err(e) = parse(&text) {
            errors += 1;
            assert!(e.span.start <= e.span.end, "{text:?}");
            assert!(e.span.end <= text.len(), "{text:?}: {e}");
        }
    }
    assert!(errors > 1000);
}
