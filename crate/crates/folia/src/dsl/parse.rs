use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::extalg::{DiffForm, PointQ};
use crate::foliation::Ambient;
use crate::poly::{MonomialOrder, PolyRing};
use crate::rational::Rational;

use super::doc::{InputDocument, Item};
use super::lex::{lex, Lexer, ParseError, Pos, Tok};

const KEYWORDS: &[&str] = &["ring", "affine", "projective", "form", "point", "frame"];

pub fn parse(input: &str) -> Result<InputDocument, ParseError> {
    parse_with_order(input, MonomialOrder::DegRevLex)
}

pub fn parse_with_order(
    input: &str,
    order: MonomialOrder,
) -> Result<InputDocument, ParseError> {
    let mut lx = lex(input)?;
    let (ring, ambient) = parse_ring_decl(&mut lx, order)?;
    let mut items: Vec<Item> = Vec::new();
    loop {
        match lx.peek().clone() {
            Tok::Eof => break,
            Tok::Ident(kw) if kw == "form" => {
                lx.next();
                let (name, npos) = lx.eat_ident()?;
                check_fresh_name(&items, &name, npos)?;
                lx.eat_punct('=')?;
                let value = parse_expr(&mut lx, &ring)?;
                lx.eat_punct(';')?;
                items.push(Item::Form(name, value));
            }
            Tok::Ident(kw) if kw == "point" => {
                lx.next();
                let (name, npos) = lx.eat_ident()?;
                check_fresh_name(&items, &name, npos)?;
                lx.eat_punct('=')?;
                lx.eat_punct('(')?;
                let mut coords = Vec::new();
                loop {
                    coords.push(parse_rational(&mut lx)?);
                    if matches!(lx.peek(), Tok::Punct(',')) {
                        lx.next();
                    } else {
                        break;
                    }
                }
                let cpos = lx.pos();
                lx.eat_punct(')')?;
                lx.eat_punct(';')?;
                if coords.len() != ring.nvars() {
                    return Err(ParseError::new(
                        cpos,
                        format!(
                            "point has {} coordinates, ring has {} variables",
                            coords.len(),
                            ring.nvars()
                        ),
                    ));
                }
                items.push(Item::Point(name, PointQ::new(coords)));
            }
            Tok::Ident(kw) if kw == "frame" => {
                lx.next();
                let (name, npos) = lx.eat_ident()?;
                check_fresh_name(&items, &name, npos)?;
                lx.eat_punct('=')?;
                lx.eat_punct('(')?;
                let mut members = Vec::new();
                loop {
                    let (member, mpos) = lx.eat_ident()?;
                    let found = items.iter().find_map(|i| match i {
                        Item::Form(n, f) if *n == member => Some(f.degree()),
                        _ => None,
                    });
                    match found {
                        None => {
                            return Err(ParseError::new(
                                mpos,
                                format!("frame member `{}` is not a declared form", member),
                            ))
                        }
                        Some(d) if d != 1 => {
                            return Err(ParseError::new(
                                mpos,
                                format!("frame member `{}` has degree {}, expected 1", member, d),
                            ))
                        }
                        Some(_) => {}
                    }
                    members.push(member);
                    if matches!(lx.peek(), Tok::Punct(',')) {
                        lx.next();
                    } else {
                        break;
                    }
                }
                lx.eat_punct(')')?;
                lx.eat_punct(';')?;
                items.push(Item::Frame(name, members));
            }
            other => {
                return Err(ParseError::expecting(
                    lx.pos(),
                    format!("found {}", other),
                    vec!["`form`", "`point`", "`frame`"],
                ))
            }
        }
    }
    Ok(InputDocument::from_parts(ring, ambient, items))
}

fn check_fresh_name(items: &[Item], name: &str, pos: Pos) -> Result<(), ParseError> {
    let taken = items.iter().any(|i| match i {
        Item::Form(n, _) | Item::Point(n, _) | Item::Frame(n, _) => n == name,
    });
    if taken {
        return Err(ParseError::new(pos, format!("name `{}` already declared", name)));
    }
    Ok(())
}

fn parse_ring_decl(
    lx: &mut Lexer,
    order: MonomialOrder,
) -> Result<(PolyRing, Ambient), ParseError> {
    let (kw, pos) = lx.eat_ident()?;
    if kw != "ring" {
        return Err(ParseError::expecting(pos, format!("found `{}`", kw), vec!["`ring`"]));
    }
    let (kind, kpos) = lx.eat_ident()?;
    let projective = match kind.as_str() {
        "affine" => false,
        "projective" => true,
        other => {
            return Err(ParseError::expecting(
                kpos,
                format!("found `{}`", other),
                vec!["`affine`", "`projective`"],
            ))
        }
    };
    let mut vars: Vec<(String, Pos)> = Vec::new();
    while let Tok::Ident(_) = lx.peek() {
        vars.push(lx.eat_ident()?);
    }
    lx.eat_punct(';')?;
    if vars.is_empty() {
        return Err(ParseError::new(lx.pos(), "ring needs at least one variable"));
    }
    for (v, vpos) in &vars {
        if KEYWORDS.contains(&v.as_str()) {
            return Err(ParseError::new(
                *vpos,
                format!("`{}` is a keyword and cannot name a variable", v),
            ));
        }
        for (w, _) in &vars {
            if *v == format!("d{}", w) {
                return Err(ParseError::new(
                    *vpos,
                    format!("variable `{}` is ambiguous with the differential of `{}`", v, w),
                ));
            }
        }
        if vars.iter().filter(|(w, _)| w == v).count() > 1 {
            return Err(ParseError::new(*vpos, format!("variable `{}` declared twice", v)));
        }
    }
    let names: Vec<&str> = vars.iter().map(|(v, _)| v.as_str()).collect();
    let ring = PolyRing::new(&names, order)
        .map_err(|_| ParseError::new(pos, "invalid variable list"))?;
    let ambient = if projective {
        Ambient::Projective(ring.nvars() - 1)
    } else {
        Ambient::Affine(ring.nvars())
    };
    if projective && ring.nvars() < 2 {
        return Err(ParseError::new(pos, "projective ambient needs at least two variables"));
    }
    Ok((ring, ambient))
}

fn parse_rational(lx: &mut Lexer) -> Result<Rational, ParseError> {
    let negative = if matches!(lx.peek(), Tok::Punct('-')) {
        lx.next();
        true
    } else {
        false
    };
    let (tok, pos) = lx.next();
    let numer = match tok {
        Tok::Int(s) => s.parse::<BigInt>().expect("digits"),
        other => {
            return Err(ParseError::expecting(
                pos,
                format!("found {}", other),
                vec!["integer"],
            ))
        }
    };
    let denom = if matches!(lx.peek(), Tok::Punct('/')) {
        lx.next();
        let (tok, dpos) = lx.next();
        match tok {
            Tok::Int(s) => {
                let d = s.parse::<BigInt>().expect("digits");
                if d.is_zero() {
                    return Err(ParseError::new(dpos, "zero denominator"));
                }
                d
            }
            other => {
                return Err(ParseError::expecting(
                    dpos,
                    format!("found {}", other),
                    vec!["integer"],
                ))
            }
        }
    } else {
        BigInt::from(1)
    };
    let r = Rational::new(numer, denom);
    Ok(if negative { -r } else { r })
}

// expression grammar:
//   expr  := term (('+'|'-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' atom)*
//   atom  := INT ['/' INT] | IDENT | '(' expr ')'
// values are differential forms; scalars are forms of degree 0

fn parse_expr(lx: &mut Lexer, ring: &PolyRing) -> Result<DiffForm, ParseError> {
    let mut acc = parse_term(lx, ring)?;
    loop {
        let op = match lx.peek() {
            Tok::Punct('+') => '+',
            Tok::Punct('-') => '-',
            _ => break,
        };
        let pos = lx.pos();
        lx.next();
        let rhs = parse_term(lx, ring)?;
        let rhs = if op == '-' { -&rhs } else { rhs };
        acc = add_forms(&acc, &rhs, pos)?;
    }
    Ok(acc)
}

fn add_forms(a: &DiffForm, b: &DiffForm, pos: Pos) -> Result<DiffForm, ParseError> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if a.degree() != b.degree() {
        return Err(ParseError::new(
            pos,
            format!("cannot add forms of degree {} and {}", a.degree(), b.degree()),
        ));
    }
    Ok(a + b)
}

fn parse_term(lx: &mut Lexer, ring: &PolyRing) -> Result<DiffForm, ParseError> {
    let mut acc = parse_unary(lx, ring)?;
    while matches!(lx.peek(), Tok::Punct('*')) {
        let pos = lx.pos();
        lx.next();
        let rhs = parse_unary(lx, ring)?;
        acc = mul_forms(&acc, &rhs, pos)?;
    }
    Ok(acc)
}

fn mul_forms(a: &DiffForm, b: &DiffForm, pos: Pos) -> Result<DiffForm, ParseError> {
    if a.degree() == 0 {
        return Ok(b.scale_poly(&a.as_polynomial()));
    }
    if b.degree() == 0 {
        return Ok(a.scale_poly(&b.as_polynomial()));
    }
    Err(ParseError::new(
        pos,
        "`*` multiplies by scalars; use `^` to wedge forms",
    ))
}

fn parse_unary(lx: &mut Lexer, ring: &PolyRing) -> Result<DiffForm, ParseError> {
    if matches!(lx.peek(), Tok::Punct('-')) {
        lx.next();
        let inner = parse_unary(lx, ring)?;
        return Ok(-&inner);
    }
    parse_power(lx, ring)
}

fn parse_power(lx: &mut Lexer, ring: &PolyRing) -> Result<DiffForm, ParseError> {
    let mut acc = parse_atom(lx, ring)?;
    while matches!(lx.peek(), Tok::Punct('^')) {
        let pos = lx.pos();
        lx.next();
        let rhs = parse_atom(lx, ring)?;
        acc = combine_power(&acc, &rhs, pos)?;
    }
    Ok(acc)
}

fn combine_power(a: &DiffForm, b: &DiffForm, pos: Pos) -> Result<DiffForm, ParseError> {
    if a.degree() == 0 {
        // scalar base: exponentiation by a literal non-negative integer
        let exp = b
            .degree()
            .eq(&0)
            .then(|| b.as_polynomial().constant_value())
            .flatten()
            .ok_or_else(|| ParseError::new(pos, "exponent must be a non-negative integer"))?;
        if exp.denom() != &BigInt::from(1) || exp.numer().is_negative() {
            return Err(ParseError::new(pos, "exponent must be a non-negative integer"));
        }
        let e = exp
            .numer()
            .to_u32()
            .filter(|&e| e <= 4096)
            .ok_or_else(|| ParseError::new(pos, "exponent too large"))?;
        return Ok(DiffForm::from_polynomial(a.as_polynomial().pow(e)));
    }
    if b.degree() == 0 {
        return Err(ParseError::new(pos, "cannot raise a form to a power"));
    }
    Ok(a.wedge(b))
}

fn parse_atom(lx: &mut Lexer, ring: &PolyRing) -> Result<DiffForm, ParseError> {
    match lx.peek().clone() {
        Tok::Int(_) => {
            let r = parse_rational(lx)?;
            Ok(DiffForm::from_polynomial(ring.constant(r)))
        }
        Tok::Punct('(') => {
            lx.next();
            let inner = parse_expr(lx, ring)?;
            lx.eat_punct(')')?;
            Ok(inner)
        }
        Tok::Ident(name) => {
            let pos = lx.pos();
            lx.next();
            if let Some(i) = ring.var_index(&name) {
                return Ok(DiffForm::from_polynomial(ring.var(i)));
            }
            if let Some(rest) = name.strip_prefix('d') {
                if let Some(i) = ring.var_index(rest) {
                    return Ok(DiffForm::basis_one_form(ring, i));
                }
            }
            Err(ParseError::new(pos, format!("unknown variable `{}`", name)))
        }
        other => Err(ParseError::expecting(
            lx.pos(),
            format!("found {}", other),
            vec!["integer", "identifier", "`(`"],
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn parses_p3_document() {
        let doc = parse(
            "ring projective x0 x1 x2 x3;\n\
             form w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;\n\
             point p = (1, 0, 0, 0);",
        )
        .unwrap();
        assert_eq!(doc.ambient(), Ambient::Projective(3));
        let w = doc.form("w").unwrap();
        assert_eq!(w.degree(), 2);
        let r = doc.ring();
        assert_eq!(w.component(&[1, 2]), -&r.var(3));
        assert_eq!(w.component(&[1, 3]), r.var(2));
        assert_eq!(w.component(&[2, 3]), -&r.var(1));
        let (_, p) = doc.points().next().unwrap();
        assert_eq!(p.coords()[0], rat(1));
    }

    #[test]
    fn parses_a3_document_with_sum_coefficient() {
        let doc = parse(
            "ring affine x1 x2 x3;\n\
             form w = x1*dx1^dx2 + (x1+x3)*dx1^dx3 + x2*dx2^dx3;",
        )
        .unwrap();
        let w = doc.form("w").unwrap();
        let r = doc.ring();
        assert_eq!(w.component(&[0, 2]), &r.var(0) + &r.var(2));
    }

    #[test]
    fn wedge_of_equal_forms_is_zero() {
        let doc = parse("ring affine x1 x2; form z = dx1 ^ dx1;").unwrap();
        let z = doc.form("z").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 2);
    }

    #[test]
    fn rationals_powers_and_precedence() {
        let doc = parse(
            "ring affine x1 x2;\n\
             form f = 3/2*x1^2 - x2 + 1/2;\n\
             form g = -x1*dx2;",
        )
        .unwrap();
        let f = doc.form("f").unwrap();
        assert_eq!(f.degree(), 0);
        let p = f.as_polynomial();
        let r = doc.ring();
        let want = &(&r.var(0).pow(2).scaled(&ratio(3, 2)) - &r.var(1)) + &r.constant(ratio(1, 2));
        assert_eq!(p, want);
        assert_eq!(doc.form("g").unwrap().component(&[1]), -&r.var(0));
    }

    #[test]
    fn frame_and_point_declarations() {
        let doc = parse(
            "ring affine x1 x2 x3;\n\
             form w1 = x1*dx2;\n\
             form w2 = dx3;\n\
             frame E = (w1, w2);\n\
             point origin = (0, 0, 0);",
        )
        .unwrap();
        let (name, members) = doc.frames().next().unwrap();
        assert_eq!(name, "E");
        assert_eq!(members, ["w1".to_string(), "w2".to_string()]);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("ring affine x1 x2;\nform w = dx1 + ;").unwrap_err();
        assert_eq!(err.pos.line, 2);
        assert!(!err.expected.is_empty());

        let err = parse("ring affine x1;\nform w = dy1;").unwrap_err();
        assert!(err.message.contains("unknown variable"));

        let err = parse("ring affine x1 x2;\nform w = dx1 + dx1^dx2;").unwrap_err();
        assert!(err.message.contains("cannot add"));

        let err = parse("ring affine x1 x2; form w = dx1; form w = dx2;").unwrap_err();
        assert!(err.message.contains("already declared"));

        let err = parse("ring affine x1 dx1; form w = dx1;").unwrap_err();
        assert!(err.message.contains("ambiguous"));

        let err = parse("ring affine x1 x2; point p = (1, 2, 3);").unwrap_err();
        assert!(err.message.contains("coordinates"));
    }

    #[test]
    fn print_parse_round_trip() {
        let sources = [
            "ring projective x0 x1 x2 x3;\nform w = -x3*dx1^dx2 + x2*dx1^dx3 - x1*dx2^dx3;\npoint p = (1, 0, 0, 0);",
            "ring affine x1 x2 x3;\nform w = x1*dx1^dx2 + (x1 + x3)*dx1^dx3 + x2*dx2^dx3;",
            "ring affine x1 x2 x3;\nform a = 2*dx1;\nform b = -dx2;\nframe E = (a, b);",
            "ring projective x0 x1 x2;\nform pencil = x0*x1*dx2 + x0*x2*dx1 - 2*x1*x2*dx0;",
        ];
        for src in sources {
            let doc = parse(src).unwrap();
            let printed = doc.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(doc, reparsed, "round trip failed for:\n{}", printed);
        }
    }
}
