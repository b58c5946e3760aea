#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_weights::catalogue::builtin_fan;
use toric_weights::{validate_fan, Fan};

pub const SIMPLICIAL_CATALOGUE: &[&str] = &[
    "p1",
    "p2",
    "p3",
    "p1xp1",
    "p1xp1xp1",
    "hirzebruch(0)",
    "hirzebruch(1)",
    "hirzebruch(3)",
    "affine-line",
    "affine-plane",
    "affine-space(3)",
    "affine-space(4)",
    "torus(1)",
    "torus(2)",
    "torus(3)",
    "example-prz",
    "example-prz-completion",
    "c2-minus-origin",
];

pub const NONSIMPLICIAL_CATALOGUE: &[&str] = &["cone-over-square", "cone-over-hexagon", "cube-face-fan"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fan(name: &str) -> Fan {
    builtin_fan(name).unwrap()
}

/// Stellar subdivision of a simplicial fan at the sum of the rays of `cone`.
pub fn blow_up(f: &Fan, cone: usize) -> Fan {
    let sigma = f.cone(cone).rays().to_vec();
    let n = f.rank();
    let mut new_ray = vec![0i64; n];
    for &r in &sigma {
        for (x, y) in new_ray.iter_mut().zip(f.ray(r)) {
            *x += y;
        }
    }
    let g = new_ray.iter().fold(0i64, |g, &x| num_gcd(g, x));
    let new_ray: Vec<i64> = new_ray.iter().map(|x| x / g).collect();
    let mut rays = f.rays().to_vec();
    let new_index = rays.len();
    rays.push(new_ray);
    let mut cones = Vec::new();
    for (_, c) in f.maximal_cones() {
        if sigma.iter().all(|r| c.contains_ray(*r)) {
            for &drop in &sigma {
                let mut d: Vec<usize> = c.rays().iter().copied().filter(|&r| r != drop).collect();
                d.push(new_index);
                cones.push(d);
            }
        } else {
            cones.push(c.rays().to_vec());
        }
    }
    validate_fan(n, rays, cones).unwrap()
}

fn num_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A smooth complete fan of rank 2 or 3 obtained by random blow-ups.
pub fn random_complete(rng: &mut ChaCha8Rng) -> Fan {
    let base = ["p2", "p1xp1", "hirzebruch(1)", "p3", "p1xp1xp1"];
    let mut f = fan(base.choose(rng).unwrap());
    let blowups = if f.rank() == 2 { rng.gen_range(0..4) } else { rng.gen_range(0..2) };
    for _ in 0..blowups {
        let candidates: Vec<usize> = (1..f.cones().len()).filter(|&i| f.cone(i).dim() >= 2).collect();
        let c = *candidates.choose(rng).unwrap();
        f = blow_up(&f, c);
    }
    f
}

/// The subfan generated by a random nonempty collection of cones.
pub fn random_subfan(rng: &mut ChaCha8Rng, ambient: &Fan) -> Fan {
    let cones: Vec<usize> = (1..ambient.cones().len()).collect();
    let keep = rng.gen_range(0.2..0.9);
    let generators: Vec<usize> = cones.iter().copied().filter(|_| rng.gen_bool(keep)).collect();
    ambient.subfan(&generators)
}

/// A random simplicial fan of rank at most 3.
pub fn random_simplicial(rng: &mut ChaCha8Rng) -> Fan {
    let ambient = if rng.gen_bool(0.7) {
        random_complete(rng)
    } else {
        let names = ["example-prz-completion", "affine-space(3)", "p2", "p1"];
        fan(names.choose(rng).unwrap())
    };
    random_subfan(rng, &ambient)
}

/// A random fan of rank at most 3, simplicial or not.
pub fn random_fan(rng: &mut ChaCha8Rng) -> Fan {
    if rng.gen_bool(0.25) {
        let ambient = fan(NONSIMPLICIAL_CATALOGUE.choose(rng).unwrap());
        random_subfan(rng, &ambient)
    } else {
        random_simplicial(rng)
    }
}

/// Two random subfans of a common ambient fan.
pub fn random_pair(rng: &mut ChaCha8Rng, simplicial_only: bool) -> (Fan, Fan) {
    let ambient = if simplicial_only || rng.gen_bool(0.7) {
        random_complete(rng)
    } else {
        fan(NONSIMPLICIAL_CATALOGUE.choose(rng).unwrap())
    };
    (random_subfan(rng, &ambient), random_subfan(rng, &ambient))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Hilbert function of the Stanley–Reisner ring: `Σ_{σ ≠ 0} C(k-1, dim σ - 1)`.
pub fn stanley_reisner_dim(f: &Fan, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    f.cones()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| binomial(k - 1, c.dim() - 1))
        .sum()
}

/// `h_i = Σ_j (-1)^{i-j} C(n-j, i-j) f_j`.
pub fn h_vector_oracle(f: &Fan) -> Vec<i64> {
    let n = f.rank();
    let fv = f.f_vector();
    (0..=n)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let s = if (i - j) % 2 == 0 { 1 } else { -1 };
                    s * binomial(n - j, i - j) as i64 * fv[j] as i64
                })
                .sum()
        })
        .collect()
}
