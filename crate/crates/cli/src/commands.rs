use std::fmt;
use std::fs;

use homsum::duality::{check_poincare, cohomology_profile, wall_descriptor};
use homsum::sequences::{
    gysin_circle_bundle, pullback, verify_split, wall_bundle_cohomology, BundleData, EulerAction,
};
use homsum::{
    cokernel, evaluate, parse, print, smith_normal_form, ChainComplex, GradedGroup, IntMatrix,
    SpaceExpr,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{exit, Command, GysinArgs, HomologyArgs, PullbackArgs};

/// A command that did not produce a result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad expression, bad file, or input outside the supported domain.
    Input(String),
    /// A computed result broke one of its own postconditions.
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => exit::USAGE,
            Failure::Internal(_) => exit::INTERNAL,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "{m}"),
            Failure::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

fn input(e: impl fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

pub(crate) struct Output {
    pub text: String,
    /// False when a verification command ran to completion and answered no.
    pub verified: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            verified: true,
        }
    }
}

pub(crate) fn dispatch(cmd: &Command, json: bool) -> Result<Output, Failure> {
    match cmd {
        Command::Homology(a) => homology(a, json),
        Command::Cohomology { expr } => cohomology(expr, json),
        Command::Pullback(a) => pullback_cmd(a, json),
        Command::Gysin(a) => gysin(a, json),
        Command::Wall(a) => wall(a.r, a.k, json),
        Command::VerifySplit(a) => {
            let h_m: GradedGroup = read_json(&a.m_file)?;
            let h_xp: GradedGroup = read_json(&a.xp_file)?;
            let h_l: GradedGroup = read_json(&a.l_file)?;
            let report = verify_split(&h_m, &h_xp, &h_l, a.dim);
            let text = if json {
                to_json(&report)
            } else {
                let mut s = String::new();
                for d in &report.degrees {
                    s.push_str(&format!(
                        "q={:<3} M: {:<16} X': {:<16} L: {:<16} {}\n",
                        d.degree,
                        d.homology_m.to_string(),
                        d.homology_x_prime.to_string(),
                        d.homology_l.to_string(),
                        if d.holds { "ok" } else { "FAIL" }
                    ));
                }
                s.push_str(&format!("split holds: {}\n", report.holds));
                s
            };
            Ok(Output {
                text,
                verified: report.holds,
            })
        }
        Command::CheckDuality(a) => {
            let h: GradedGroup = read_json(&a.h_file)?;
            let holds = check_poincare(&h, a.n);
            let text = if json {
                to_json(&json!({
                    "dimension": a.n,
                    "homology": h,
                    "cohomology": cohomology_profile(&h),
                    "poincare_duality": holds,
                }))
            } else {
                format!(
                    "{}{}Poincaré duality in dimension {}: {}\n",
                    h.table("H_"),
                    cohomology_profile(&h).table("H^"),
                    a.n,
                    holds
                )
            };
            Ok(Output {
                text,
                verified: holds,
            })
        }
        Command::Snf { file } => snf(file, json),
    }
}

fn parse_expr(text: &str) -> Result<SpaceExpr, Failure> {
    parse(text).map_err(|e| Failure::Input(format!("cannot parse expression\n{}", e.render(text))))
}

fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn homology(a: &HomologyArgs, json: bool) -> Result<Output, Failure> {
    if let Some(path) = &a.chain {
        let c: ChainComplex = read_json(path)?;
        let h = c.homology().map_err(input)?;
        let text = if json {
            to_json(&json!({ "homology": h }))
        } else {
            h.table("H_")
        };
        return Ok(Output::ok(text));
    }
    let text = a
        .expr
        .as_deref()
        .expect("clap requires EXPR without --chain");
    let e = parse_expr(text)?;
    let h = evaluate(&e).map_err(input)?;
    Ok(Output::ok(if json {
        to_json(&json!({ "expr": print(&e), "homology": h }))
    } else {
        format!("{}\n{}", print(&e), h.table("H_"))
    }))
}

fn cohomology(text: &str, json: bool) -> Result<Output, Failure> {
    let e = parse_expr(text)?;
    let h = cohomology_profile(&evaluate(&e).map_err(input)?);
    Ok(Output::ok(if json {
        to_json(&json!({ "expr": print(&e), "cohomology": h }))
    } else {
        format!("{}\n{}", print(&e), h.table("H^"))
    }))
}

fn pullback_cmd(a: &PullbackArgs, json: bool) -> Result<Output, Failure> {
    let b = parse_expr(&a.b)?;
    let c = parse_expr(&a.c)?;
    let f = parse_expr(&a.f)?;
    let bundle = match &a.l {
        Some(path) => BundleData::with_total(c.clone(), f.clone(), read_json(path)?),
        None => BundleData::trivial(c.clone(), f.clone()),
    };
    let p = pullback(&b, &bundle).map_err(input)?;
    if !p.report.holds {
        return Err(Failure::Internal(format!(
            "assembled H_*(M) fails the split in degrees {:?}",
            p.report.failing_degrees()
        )));
    }
    let text = if json {
        to_json(&json!({
            "B": print(&b),
            "C": print(&c),
            "F": print(&f),
            "total_dim": p.total_dim,
            "homology_M": p.homology_m,
            "homology_Xp": p.homology_x_prime,
            "homology_L": p.homology_l,
            "report": p.report,
        }))
    } else {
        format!(
            "M = pullback of L -> {c} along {b} # {c}, fiber {f}, dim {}\n\nH_*(M)\n{}\nH_*(X')\n{}\nH_*(L)\n{}\nsplit holds: {}\n",
            p.total_dim,
            p.homology_m.table("H_"),
            p.homology_x_prime.table("H_"),
            p.homology_l.table("H_"),
            p.report.holds,
            b = print(&b),
            c = print(&c),
            f = print(&f),
        )
    };
    Ok(Output::ok(text))
}

#[derive(Deserialize)]
struct RingFile {
    cohomology: GradedGroup,
    dim: usize,
    #[serde(default)]
    euler: EulerAction,
}

fn gysin(a: &GysinArgs, json: bool) -> Result<Output, Failure> {
    let (h, header) = match (&a.ring, a.r, a.k) {
        (Some(path), _, _) => {
            let ring: RingFile = read_json(path)?;
            let h = gysin_circle_bundle(&ring.cohomology, ring.dim, &ring.euler).map_err(input)?;
            (h, json!({ "dim": ring.dim + 1 }))
        }
        (None, Some(r), Some(k)) => {
            let h = wall_bundle_cohomology(r, k).map_err(input)?;
            (h, json!({ "r": r, "k": k, "dim": 7 }))
        }
        _ => return Err(Failure::Input("give --r and --k, or --ring FILE".into())),
    };
    if h.euler_characteristic() != 0 {
        return Err(Failure::Internal(format!(
            "circle bundle has Euler characteristic {}",
            h.euler_characteristic()
        )));
    }
    let text = if json {
        let mut v = header;
        v["cohomology"] = serde_json::to_value(&h).expect("serializable");
        v["euler_characteristic"] = Value::from(0);
        to_json(&v)
    } else {
        h.table("H^")
    };
    Ok(Output::ok(text))
}

fn wall(r: u32, k: i64, json: bool) -> Result<Output, Failure> {
    let d = wall_descriptor(r, k).map_err(input)?;
    if d.summand_cohomology() != d.predicted {
        return Err(Failure::Internal(format!(
            "{} has H^* = {}, solver gives {}",
            d.text,
            d.summand_cohomology(),
            d.predicted
        )));
    }
    Ok(Output::ok(if json {
        to_json(&d)
    } else {
        format!("M ≃ {}\n{}", d.text, d.predicted.table("H^"))
    }))
}

fn snf(path: &str, json: bool) -> Result<Output, Failure> {
    let a: IntMatrix = read_json(path)?;
    let s = smith_normal_form(&a);
    if &(&s.u * &a) * &s.v != s.d {
        return Err(Failure::Internal("U·A·V differs from D".into()));
    }
    if !s.u.is_unimodular() || !s.v.is_unimodular() {
        return Err(Failure::Internal("transform is not unimodular".into()));
    }
    let coker = cokernel(&a);
    let factors: Vec<String> = s
        .invariant_factors()
        .iter()
        .map(|d| d.to_string())
        .collect();
    Ok(Output::ok(if json {
        to_json(&json!({
            "u": s.u,
            "d": s.d,
            "v": s.v,
            "rank": s.rank(),
            "invariant_factors": factors,
            "cokernel": coker,
        }))
    } else {
        format!(
            "U =\n{}D =\n{}V =\n{}rank: {}\ninvariant factors: [{}]\ncokernel: {}\n",
            block(&s.u),
            block(&s.d),
            block(&s.v),
            s.rank(),
            factors.join(", "),
            coker
        )
    }))
}

fn block(m: &IntMatrix) -> String {
    let s = m.to_string();
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}
