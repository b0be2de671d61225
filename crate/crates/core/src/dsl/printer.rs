use crate::spaces::SpaceExpr;

/// Binding strength: `v`/`#` 1, `^` 2, `*` 3, everything else 4.
fn precedence(e: &SpaceExpr) -> u8 {
    match e {
        SpaceExpr::Wedge(..) | SpaceExpr::ConnectedSum(..) => 1,
        SpaceExpr::Smash(..) => 2,
        SpaceExpr::Product(..) => 3,
        _ => 4,
    }
}

pub fn print(e: &SpaceExpr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

fn write_expr(e: &SpaceExpr, out: &mut String) {
    match e {
        SpaceExpr::Sphere(n) => out.push_str(&format!("S({n})")),
        SpaceExpr::ComplexProjective(n) => out.push_str(&format!("CP({n})")),
        SpaceExpr::Moore { n, k } => out.push_str(&format!("M({n},{k})")),
        SpaceExpr::SigmaSigma(r) => out.push_str(&format!("SS({r})")),
        SpaceExpr::Product(a, b) => write_binary(e, a, b, " * ", out),
        SpaceExpr::Smash(a, b) => write_binary(e, a, b, " ^ ", out),
        SpaceExpr::Wedge(a, b) => write_binary(e, a, b, " v ", out),
        SpaceExpr::ConnectedSum(a, b) => write_binary(e, a, b, " # ", out),
        SpaceExpr::Suspension(a) => {
            out.push_str("Sigma ");
            write_operand(a, precedence(a) < 4, out);
        }
        SpaceExpr::Punctured(a) => {
            out.push_str("punct(");
            write_expr(a, out);
            out.push(')');
        }
        SpaceExpr::HalfSmash(b, f) => {
            out.push_str("halfsmash(");
            write_expr(b, out);
            out.push_str(", ");
            write_expr(f, out);
            out.push(')');
        }
    }
}

fn write_binary(e: &SpaceExpr, a: &SpaceExpr, b: &SpaceExpr, op: &str, out: &mut String) {
    let p = precedence(e);
    let same_kind = |x: &SpaceExpr| std::mem::discriminant(x) == std::mem::discriminant(e);
    // left-associative: the left operand may repeat the operator, the right may not
    let left_parens = precedence(a) < p || (precedence(a) == p && !same_kind(a));
    let right_parens = precedence(b) <= p;
    write_operand(a, left_parens, out);
    out.push_str(op);
    write_operand(b, right_parens, out);
}

fn write_operand(e: &SpaceExpr, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}
