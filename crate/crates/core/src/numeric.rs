//! Complex floating-point helpers shared by the numeric checks: a stable
//! quadratic solver, multiset comparison, and the seeded sampling used by the
//! randomized trials.
//!
//! Kernels are generic over the float width; the harness instantiates them at
//! f64 (`C64`).

use num_complex::Complex;
use num_traits::{Float, FromPrimitive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Float scalar for the numeric kernels.
pub trait Real: Float + FromPrimitive {}
impl<T: Float + FromPrimitive> Real for T {}

pub fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::from_f64(re).unwrap(), T::from_f64(im).unwrap())
}

/// Roots of a z^2 + b z + c = 0 via the cancellation-avoiding form: the
/// square root branch is chosen so that b and the root add constructively.
pub fn solve_quadratic<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
) -> [Complex<T>; 2] {
    let disc = b * b - cx::<T>(4.0, 0.0) * a * c;
    let mut s = disc.sqrt();
    if (b.conj() * s).re < T::zero() {
        s = -s;
    }
    let q = -(b + s) * cx::<T>(0.5, 0.0);
    if q.norm() == T::zero() {
        let r = -b / (a + a);
        return [r, r];
    }
    [q / a, c / q]
}

/// Minimal over all pairings of the maximum pairwise distance between two
/// equally sized multisets (n <= 4: all permutations are tried).
pub fn multiset_distance<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut best = T::infinity();
    permute(&mut idx, 0, &mut |perm: &[usize]| {
        let mut worst = T::zero();
        for (i, &j) in perm.iter().enumerate() {
            let d = (a[i] - b[j]).norm();
            if d > worst {
                worst = d;
            }
        }
        if worst < best {
            best = worst;
        }
    });
    best
}

/// Relative version: scaled by 1 + the largest magnitude present.
pub fn multiset_distance_rel<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    let scale = a
        .iter()
        .chain(b.iter())
        .map(|z| z.norm())
        .fold(T::one(), |m, x| if x > m { x } else { m });
    multiset_distance(a, b) / scale
}

fn permute(idx: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        visit(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, visit);
        idx.swap(k, i);
    }
}

/// Seed-stable PRNG shared through the harness; modules receive child seeds
/// derived from the suite seed and a fixed stream tag.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    // SplitMix64 mix so that nearby (seed, stream) pairs decorrelate.
    let mut z = seed
        .wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(stream.wrapping_mul(0xbf58476d1ce4e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

/// Uniform complex sample in the disk of the given radius.
pub fn sample_disk<T: Real>(rng: &mut ChaCha8Rng, radius: f64) -> Complex<T> {
    loop {
        let re: f64 = rng.gen_range(-1.0..1.0);
        let im: f64 = rng.gen_range(-1.0..1.0);
        if re * re + im * im <= 1.0 {
            return cx(re * radius, im * radius);
        }
    }
}

/// Small random rational represented exactly in a float.
pub fn sample_small_rational(rng: &mut ChaCha8Rng) -> f64 {
    let num: i64 = rng.gen_range(-8..=8);
    let den: i64 = *[1, 2, 4].get(rng.gen_range(0..3)).unwrap();
    num as f64 / den as f64
}
