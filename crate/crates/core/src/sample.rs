//! Seeded generation of exact rational test points.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rat::{ratio, PointFn, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `[-bound, bound]` with denominator at most `max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-bound * den..=bound * den);
    ratio(num, den)
}

pub fn random_point<R: Rng>(rng: &mut R, dim: usize, bound: i64, max_den: i64) -> PointFn {
    PointFn::new((0..dim).map(|_| random_rational(rng, bound, max_den)).collect())
}

/// A random point of `[0, 1]^dim` with small denominators.
pub fn random_unit_point<R: Rng>(rng: &mut R, dim: usize, max_den: i64) -> PointFn {
    PointFn::new(
        (0..dim)
            .map(|_| {
                let den = rng.gen_range(1..=max_den);
                ratio(rng.gen_range(0..=den), den)
            })
            .collect(),
    )
}

/// A random convex combination of `vertices` with positive integer weights
/// below `max_weight`, so the result lies in the relative interior.
pub fn random_convex_combination<R: Rng>(rng: &mut R, vertices: &[PointFn], max_weight: i64) -> PointFn {
    let weights: Vec<i64> = vertices.iter().map(|_| rng.gen_range(1..=max_weight)).collect();
    let total: i64 = weights.iter().sum();
    let dim = vertices[0].dim();
    let mut acc = PointFn::zero(dim);
    for (w, v) in weights.iter().zip(vertices) {
        acc = acc.add(&v.scale(&Rat::from_integer(BigInt::from(*w))));
    }
    acc.scale(&ratio(1, total))
}

/// A random convex combination where some weights may be zero, producing
/// points on lower-dimensional faces as well.
pub fn random_face_point<R: Rng>(rng: &mut R, vertices: &[PointFn], max_weight: i64) -> PointFn {
    loop {
        let weights: Vec<i64> = vertices.iter().map(|_| rng.gen_range(0..=max_weight)).collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let dim = vertices[0].dim();
        let mut acc = PointFn::zero(dim);
        for (w, v) in weights.iter().zip(vertices) {
            acc = acc.add(&v.scale(&Rat::from_integer(BigInt::from(*w))));
        }
        return acc.scale(&ratio(1, total));
    }
}
