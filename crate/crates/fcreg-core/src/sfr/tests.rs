use proptest::prelude::*;

use super::*;
use crate::testutil::*;

/// Hand-run of the expression semantics, independent of the NFA/DFA pipeline.
pub fn naive_membership(e: &SfrExpr, w: &str) -> bool {
    match e {
        SfrExpr::Letter(c) => {
            let mut chars = w.chars();
            chars.next() == Some(*c) && chars.next().is_none()
        }
        SfrExpr::WordStar(u) => {
            if u.is_empty() {
                return w.is_empty();
            }
            let (wc, uc): (Vec<char>, Vec<char>) = (w.chars().collect(), u.chars().collect());
            wc.len() % uc.len() == 0 && wc.chunks(uc.len()).all(|chunk| chunk == uc)
        }
        SfrExpr::Empty => false,
        SfrExpr::Union(a, b) => naive_membership(a, w) || naive_membership(b, w),
        SfrExpr::Concat(a, b) => {
            let chars: Vec<char> = w.chars().collect();
            (0..=chars.len()).any(|i| {
                let left: String = chars[..i].iter().collect();
                let right: String = chars[i..].iter().collect();
                naive_membership(a, &left) && naive_membership(b, &right)
            })
        }
        SfrExpr::Complement(inner) => !naive_membership(inner, w),
    }
}

fn all_words(max_len: usize) -> Vec<String> {
    Dfa::full_language(Alphabet::ab()).enumerate_language(max_len)
}

/// The block-language expression built from word stars, used across the
/// test-suite: its complement is (aa | bb)*.
pub fn blocky_expr_text() -> &'static str {
    r#"((EPS|ANY b) "aa"* a (b ANY|EPS)) | ((EPS|ANY a) "bb"* b (a ANY|EPS))"#
}

#[test]
fn parse_word_star() {
    let e = parse_sfr(r#""ab"*"#, &Alphabet::ab()).unwrap();
    assert_eq!(e, SfrExpr::WordStar("ab".into()));
}

#[test]
fn parse_complement_of_repetition() {
    let e = parse_sfr(r#"!( "abab" "abab"* )"#, &Alphabet::ab()).unwrap();
    match e {
        SfrExpr::Complement(inner) => match *inner {
            SfrExpr::Concat(_, ref b) => assert_eq!(**b, SfrExpr::WordStar("abab".into())),
            other => panic!("expected concat, got {other:?}"),
        },
        other => panic!("expected complement, got {other:?}"),
    }
}

#[test]
fn parse_union_binds_looser_than_concat() {
    let e = parse_sfr("a | b b", &Alphabet::ab()).unwrap();
    assert_eq!(
        e,
        SfrExpr::union(
            SfrExpr::Letter('a'),
            SfrExpr::concat(SfrExpr::Letter('b'), SfrExpr::Letter('b'))
        )
    );
}

#[test]
fn parse_errors_carry_positions() {
    match parse_sfr("a | | b", &Alphabet::ab()) {
        Err(SfrParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("expected syntax error, got {other:?}"),
    }
    match parse_sfr("a c", &Alphabet::ab()) {
        Err(SfrParseError::ForeignLetter { pos: 2, letter: 'c' }) => {}
        other => panic!("expected foreign letter, got {other:?}"),
    }
    assert!(matches!(
        parse_sfr(r#""ab"#, &Alphabet::ab()),
        Err(SfrParseError::Syntax { pos: 0, .. })
    ));
    assert!(matches!(parse_sfr("(a", &Alphabet::ab()), Err(SfrParseError::Syntax { .. })));
    assert!(matches!(parse_sfr("", &Alphabet::ab()), Err(SfrParseError::Syntax { .. })));
}

#[test]
fn parse_sugar() {
    let ab = Alphabet::ab();
    assert_eq!(parse_sfr("EPS", &ab).unwrap(), SfrExpr::epsilon());
    assert_eq!(parse_sfr("EMPTY", &ab).unwrap(), SfrExpr::Empty);
    assert_eq!(parse_sfr("ANY", &ab).unwrap(), SfrExpr::any());
    // unstarred string = concatenation of its letters
    assert_eq!(
        parse_sfr(r#""ab""#, &ab).unwrap(),
        SfrExpr::concat(SfrExpr::Letter('a'), SfrExpr::Letter('b'))
    );
    // juxtaposed letters without spaces
    assert_eq!(
        parse_sfr("ab", &ab).unwrap(),
        SfrExpr::concat(SfrExpr::Letter('a'), SfrExpr::Letter('b'))
    );
}

#[test]
fn display_round_trips() {
    for text in ["a | b b", blocky_expr_text(), r#"!( "abab" "abab"* )"#, "a & !b | EPS \\ a"] {
        let e = parse_sfr(text, &Alphabet::ab()).unwrap();
        let printed = e.to_string();
        assert_eq!(parse_sfr(&printed, &Alphabet::ab()).unwrap(), e);
    }
}

#[test]
fn compile_epsilon_and_empty() {
    let ab = Alphabet::ab();
    let eps = compile_sfr(&SfrExpr::epsilon(), &ab).unwrap();
    assert_eq!(eps.enumerate_language(3), vec![""]);
    assert!(compile_sfr(&SfrExpr::Empty, &ab).unwrap().is_empty());
}

#[test]
fn compile_single_a_language() {
    let ab = Alphabet::ab();
    let e = parse_sfr(r#""b"* a "b"*"#, &ab).unwrap();
    let d = compile_sfr(&e, &ab).unwrap();
    let expected: Vec<String> =
        all_words(3).into_iter().filter(|w| w.chars().filter(|&c| c == 'a').count() == 1).collect();
    assert_eq!(d.enumerate_language(3), expected);
}

#[test]
fn complement_of_blocky_expression_is_aa_or_bb_star() {
    let ab = Alphabet::ab();
    let e = parse_sfr(blocky_expr_text(), &ab).unwrap();
    let complemented = compile_sfr(&e, &ab).unwrap().complement();
    assert!(complemented.equivalent(&aa_or_bb_star()).unwrap());
}

#[test]
fn blocky_expression_matches_naive_semantics_to_8() {
    let ab = Alphabet::ab();
    let e = parse_sfr(blocky_expr_text(), &ab).unwrap();
    let d = compile_sfr(&e, &ab).unwrap();
    for w in all_words(8) {
        assert_eq!(d.accepts(&w).unwrap(), naive_membership(&e, &w), "word {w:?}");
    }
}

#[test]
fn intro_expression_excludes_even_ab_powers() {
    let ab = Alphabet::ab();
    let e = parse_sfr(r#"!( "abab" "abab"* )"#, &ab).unwrap();
    let d = compile_sfr(&e, &ab).unwrap();
    assert!(d.accepts("").unwrap());
    assert!(d.accepts("ab").unwrap());
    assert!(!d.accepts("abab").unwrap());
    assert!(d.accepts("ababab").unwrap());
    assert!(!d.accepts("abababab").unwrap());
}

fn arb_word(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 0..=max)
        .prop_map(|cs| cs.into_iter().collect())
}

fn arb_expr() -> impl Strategy<Value = SfrExpr> {
    let leaf = prop_oneof![
        Just(SfrExpr::Letter('a')),
        Just(SfrExpr::Letter('b')),
        Just(SfrExpr::Empty),
        arb_word(3).prop_map(SfrExpr::WordStar),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SfrExpr::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SfrExpr::concat(a, b)),
            inner.prop_map(SfrExpr::complement),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compiled_dfa_matches_naive_semantics(e in arb_expr()) {
        let ab = Alphabet::ab();
        let d = compile_sfr(&e, &ab).unwrap();
        for w in all_words(6) {
            prop_assert_eq!(d.accepts(&w).unwrap(), naive_membership(&e, &w));
        }
    }

    #[test]
    fn boolean_laws_on_compiled_languages(e1 in arb_expr(), e2 in arb_expr()) {
        let ab = Alphabet::ab();
        let du = compile_sfr(&SfrExpr::union(e1.clone(), e2.clone()), &ab).unwrap();
        let dc = compile_sfr(&SfrExpr::concat(e1.clone(), e2.clone()), &ab).unwrap();
        let dn = compile_sfr(&SfrExpr::complement(e1.clone()), &ab).unwrap();
        let d1 = compile_sfr(&e1, &ab).unwrap();
        let d2 = compile_sfr(&e2, &ab).unwrap();
        for w in all_words(5) {
            prop_assert_eq!(du.accepts(&w).unwrap(), d1.accepts(&w).unwrap() || d2.accepts(&w).unwrap());
            prop_assert_eq!(dn.accepts(&w).unwrap(), !d1.accepts(&w).unwrap());
            let chars: Vec<char> = w.chars().collect();
            let split_exists = (0..=chars.len()).any(|i| {
                let l: String = chars[..i].iter().collect();
                let r: String = chars[i..].iter().collect();
                d1.accepts(&l).unwrap() && d2.accepts(&r).unwrap()
            });
            prop_assert_eq!(dc.accepts(&w).unwrap(), split_exists);
        }
    }

    #[test]
    fn double_complement_is_identity(e in arb_expr()) {
        let ab = Alphabet::ab();
        let d = compile_sfr(&e, &ab).unwrap();
        let dd = compile_sfr(&SfrExpr::complement(SfrExpr::complement(e)), &ab).unwrap();
        prop_assert!(d.equivalent(&dd).unwrap());
    }
}
