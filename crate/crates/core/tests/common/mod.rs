#![allow(dead_code)]

use homsum::SpaceExpr;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// A simply connected closed manifold of dimension `dim` built from the
/// catalog, products of spheres and connected sums. `dim ≥ 2`.
pub fn manifold(rng: &mut impl Rng, dim: u32, depth: u32) -> SpaceExpr {
    let mut options: Vec<u8> = vec![0];
    if dim % 2 == 0 {
        options.push(1);
    }
    if dim == 6 {
        options.push(2);
    }
    if dim >= 4 {
        options.push(3);
    }
    if depth > 0 {
        options.push(4);
    }
    match *options.choose(rng).unwrap() {
        0 => SpaceExpr::sphere(dim),
        1 => SpaceExpr::cp(dim / 2),
        2 => SpaceExpr::sigma_sigma(rng.gen_range(0..4)),
        3 => {
            let a = rng.gen_range(2..=dim - 2);
            SpaceExpr::product(sphere_product(rng, a), sphere_product(rng, dim - a))
        }
        _ => SpaceExpr::connected_sum(manifold(rng, dim, depth - 1), manifold(rng, dim, depth - 1)),
    }
}

/// A product of spheres `S^{a_1} × … ` of total dimension `dim ≥ 2` with every `a_i ≥ 2`.
pub fn sphere_product(rng: &mut impl Rng, dim: u32) -> SpaceExpr {
    if dim >= 4 && rng.gen_bool(0.4) {
        let a = rng.gen_range(2..=dim - 2);
        SpaceExpr::product(SpaceExpr::sphere(a), sphere_product(rng, dim - a))
    } else {
        SpaceExpr::sphere(dim)
    }
}

/// Any well-formed expression, including formula-only nodes when `with_formula_only`.
pub fn expr(rng: &mut impl Rng, depth: u32, with_formula_only: bool) -> SpaceExpr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 => SpaceExpr::sphere(rng.gen_range(1..6)),
            1 => SpaceExpr::cp(rng.gen_range(1..3)),
            2 => SpaceExpr::moore(rng.gen_range(3..6), rng.gen_range(1..7)),
            3 => SpaceExpr::sigma_sigma(rng.gen_range(0..3)),
            _ => {
                let dim = 2 * rng.gen_range(1..4);
                manifold(rng, dim, 1)
            }
        };
    }
    let upper = if with_formula_only { 7 } else { 5 };
    let d = depth - 1;
    match rng.gen_range(0..upper) {
        0 => SpaceExpr::product(
            expr(rng, d, with_formula_only),
            expr(rng, d, with_formula_only),
        ),
        1 => SpaceExpr::wedge(
            expr(rng, d, with_formula_only),
            expr(rng, d, with_formula_only),
        ),
        2 => SpaceExpr::smash(
            expr(rng, d, with_formula_only),
            expr(rng, d, with_formula_only),
        ),
        3 => SpaceExpr::suspension(expr(rng, d, with_formula_only)),
        4 => {
            let dim = rng.gen_range(2..8);
            SpaceExpr::connected_sum(manifold(rng, dim, d.min(2)), manifold(rng, dim, d.min(2)))
        }
        5 => {
            let dim = rng.gen_range(2..8);
            SpaceExpr::punctured(manifold(rng, dim, d.min(2)))
        }
        _ => SpaceExpr::half_smash(expr(rng, d, true), expr(rng, d, true)),
    }
}
