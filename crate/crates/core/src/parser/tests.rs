use super::*;
use crate::kernel::{radial_basis, RadialLabel, SignumDistribution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn eval(s: &str) -> GeneralizedFunction {
    evaluate_str(s).unwrap_or_else(|e| panic!("evaluating `{s}`: {e}"))
}

#[test]
fn ast_shapes() {
    assert_eq!(
        parse("dr^2 delta").unwrap(),
        Expr::Apply {
            op: OpCode::Dr,
            pow: 2,
            arg: Box::new(Expr::Delta),
        }
    );
    assert_eq!(
        parse("r (w dr) delta").unwrap(),
        Expr::Apply {
            op: OpCode::R,
            pow: 1,
            arg: Box::new(Expr::Apply {
                op: OpCode::W,
                pow: 1,
                arg: Box::new(Expr::Apply {
                    op: OpCode::Dr,
                    pow: 1,
                    arg: Box::new(Expr::Delta),
                }),
            }),
        }
    );
}

#[test]
fn parse_error_positions() {
    match parse("delta +") {
        Err(ParserError::Parse { offset, .. }) => assert_eq!(offset, 7),
        other => panic!("expected parse error, got {other:?}"),
    }
    assert!(parse("").is_err());
    match parse("delta delta") {
        Err(ParserError::Arity { message, .. }) => {
            assert!(message.contains("more than one"))
        }
        other => panic!("expected arity error, got {other:?}"),
    }
    match parse("r w") {
        Err(ParserError::Arity { message, .. }) => assert!(message.contains("no 'delta'")),
        other => panic!("expected arity error, got {other:?}"),
    }
    match parse("delta r") {
        Err(ParserError::Arity { message, .. }) => {
            assert!(message.contains("left of 'delta'"))
        }
        other => panic!("expected arity error, got {other:?}"),
    }
    // exponents are restricted to the listed operators
    assert!(matches!(parse("E^2 delta"), Err(ParserError::Parse { .. })));
    assert!(matches!(parse("G^2 delta"), Err(ParserError::Parse { .. })));
    assert!(parse("inv_r^3 delta").is_ok());
}

#[test]
fn scalar_literals() {
    let g = eval("3 delta");
    assert_eq!(
        g,
        GeneralizedFunction::Dist(Distribution::term(0, DimScalar::from_int(3)))
    );
    let g = eval("-(m+1)/2 * D^2 delta");
    assert_eq!(
        g,
        GeneralizedFunction::Dist(Distribution::term(
            2,
            -(DimScalar::m_plus(1) / DimScalar::from_int(2))
        ))
    );
    let g = eval("(m+1)*(m+3)/8 delta");
    assert_eq!(
        g,
        GeneralizedFunction::Dist(Distribution::term(0, crate::symq::odd_rising_coeff(2)))
    );
    let g = eval("2 m delta");
    assert_eq!(
        g,
        GeneralizedFunction::Dist(Distribution::term(
            0,
            DimScalar::from_int(2) * DimScalar::m()
        ))
    );
    let g = eval("(m^2-1)/4 delta");
    let expect = (DimScalar::m() * DimScalar::m() - DimScalar::one()) / DimScalar::from_int(4);
    assert_eq!(
        g,
        GeneralizedFunction::Dist(Distribution::term(0, expect))
    );
}

#[test]
fn evaluate_examples() {
    // dr^2 delta = -(m+1)/2 D^2 delta
    assert_eq!(
        eval("dr^2 delta"),
        GeneralizedFunction::Dist(Distribution::delta().apply_dr2())
    );
    // inv_r delta prints as the radial alias
    let g = eval("inv_r delta");
    assert_eq!(print_canonical(&g), "-1/m * dr delta");
    // Gamma on a vector-kind element is unsupported
    match evaluate_str("G (w dr) delta") {
        Err(ParserError::Eval { context, .. }) => assert!(context.contains("G")),
        other => panic!("expected eval error, got {other:?}"),
    }
}

#[test]
fn even_powers_rewrite_to_classical() {
    // r^2 delta is the classical x^2 action, which is zero on delta
    assert!(eval("r^2 delta").is_zero());
    assert_eq!(eval("r^2 delta").space(), Space::Dist);
    // r^2 D^2 delta = -x^2 D^2 delta = -2m delta
    assert_eq!(
        eval("r^2 D^2 delta"),
        GeneralizedFunction::Dist(Distribution::term(
            0,
            DimScalar::from_int(-2) * DimScalar::m()
        ))
    );
    // w^2 delta = -delta
    assert_eq!(eval("w^2 delta"), GeneralizedFunction::delta().neg());
    // dr^4 delta agrees with two applications of the classical dr^2
    assert_eq!(
        eval("dr^4 delta"),
        GeneralizedFunction::Dist(Distribution::delta().apply_dr2().apply_dr2())
    );
    // odd powers leave one space crossing
    assert_eq!(eval("dr^3 delta"), radial_basis(RadialLabel::Sd, 1));
    assert_eq!(eval("r^3 D^3 delta").space(), Space::Sign);
    // and iterated transitions agree with the classical-first resolution
    let mut g = GeneralizedFunction::delta();
    for _ in 0..3 {
        g = g.act_dr();
    }
    assert_eq!(eval("dr^3 delta"), g);
}

#[test]
fn sums_and_signs() {
    let g = eval("delta + 2 D delta - D^2 delta");
    let expect = Distribution::from_terms([
        (0, DimScalar::one()),
        (1, DimScalar::from_int(2)),
        (2, DimScalar::from_int(-1)),
    ]);
    assert_eq!(g, GeneralizedFunction::Dist(expect));
    // adding across spaces is an evaluation error
    assert!(matches!(
        evaluate_str("delta + w delta"),
        Err(ParserError::Eval { .. })
    ));
}

#[test]
fn print_canonical_examples() {
    let g = GeneralizedFunction::Dist(Distribution::term(
        2,
        -(DimScalar::m_plus(1) / DimScalar::from_int(2)),
    ));
    assert_eq!(print_canonical(&g), "-(m+1)/2 * D^2 delta");
    assert_eq!(
        print_canonical(&GeneralizedFunction::Dist(Distribution::zero())),
        "0"
    );
    let s0 = GeneralizedFunction::Sign(SignumDistribution::basis(0));
    assert_eq!(print_canonical(&s0), "w delta");
    // dr delta (the paper's first signum example)
    assert_eq!(
        print_canonical(&GeneralizedFunction::delta().act_dr()),
        "dr delta"
    );
    assert_eq!(
        print_canonical(&eval("w dr^2 delta")),
        "w dr^2 delta"
    );
}

#[test]
fn printed_dist_forms_reevaluate_equal() {
    let samples = [
        "delta",
        "D^3 delta",
        "L delta",
        "dr^2 delta",
        "x D delta",
        "inv_x delta",
        "E delta + 3 delta",
        "(m+1)/2 * D^2 delta - m delta",
        "inv_r_dr^2 delta",
    ];
    for s in samples {
        let v = eval(s);
        assert_eq!(v.space(), Space::Dist, "sample {s}");
        let printed = print_canonical(&v);
        let back = eval(&printed);
        assert_eq!(back, v, "sample `{s}` printed as `{printed}`");
    }
}

#[test]
fn printed_signum_aliases_reevaluate_equal() {
    let samples = ["dr delta", "w delta", "inv_r delta", "r D^2 delta", "w dr^4 delta"];
    for s in samples {
        let v = eval(s);
        assert_eq!(v.space(), Space::Sign, "sample {s}");
        let printed = print_canonical(&v);
        let back = eval(&printed);
        assert_eq!(back, v, "sample `{s}` printed as `{printed}`");
    }
}

#[test]
fn random_expr_round_trip() {
    // random well-formed DIST-preserving operator chains survive
    // print -> parse -> evaluate
    let classical = ["D", "L", "x", "inv_x", "dr^2", "inv_r_dr", "E", "r^2", "w^2"];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut checked = 0;
    for _ in 0..200 {
        let len = rng.gen_range(0..5);
        let mut text = String::new();
        for _ in 0..len {
            text.push_str(classical[rng.gen_range(0..classical.len())]);
            text.push(' ');
        }
        text.push_str("delta");
        // some chains are legitimately unsupported (e.g. (1/r)dr after
        // an odd-index result); those must error, not panic
        let v = match evaluate_str(&text) {
            Ok(v) => v,
            Err(ParserError::Eval { .. }) => continue,
            Err(other) => panic!("chain `{text}` failed to parse: {other}"),
        };
        let printed = print_canonical(&v);
        let back = eval(&printed);
        assert_eq!(back, v, "chain `{text}` printed as `{printed}`");
        checked += 1;
    }
    assert!(checked > 100, "too few evaluable chains: {checked}");
}

#[test]
fn fuzz_never_panics() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alphabet: &[u8] = b"rdwxDLEG lb_inv^0123456789+-*/()delta ms[]";
    for _ in 0..2000 {
        let len = rng.gen_range(0..40);
        let s: String = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())] as char)
            .collect();
        let _ = evaluate_str(&s); // Ok or Err, never a crash
    }
    for _ in 0..500 {
        let len = rng.gen_range(0..24);
        let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
        if let Ok(s) = String::from_utf8(bytes) {
            let _ = evaluate_str(&s);
        }
    }
}
