//! Named example fans.
//!
//! Parametric families accept both `name(n)` and `namen`, e.g. `torus(2)`
//! and `torus2`. Names ending in `-completion` denote a smooth complete
//! fan together with the rays of an open subfan.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::deligne::{validate_completion, CompletionPair};
use crate::error::{Error, Result};
use crate::fan::{validate_fan, Fan};

/// Catalogue entries, parametric families written with their parameter.
pub const NAMES: &[&str] = &[
    "p1",
    "p2",
    "p3",
    "projective-space(n)",
    "p1xp1",
    "p1xp1xp1",
    "hirzebruch(a)",
    "affine-line",
    "affine-plane",
    "affine-space(n)",
    "torus(n)",
    "example-prz",
    "example-prz-completion",
    "c2-minus-origin",
    "cone-over-square",
    "cone-over-hexagon",
    "cube-face-fan",
    "p2-completion",
    "cstar-completion",
];

#[derive(Clone, Debug)]
pub enum Example {
    Fan(Fan),
    Completion(CompletionPair),
}

impl Example {
    /// The fan itself, or the ambient fan of a completion.
    pub fn into_fan(self) -> Fan {
        match self {
            Example::Fan(f) => f,
            Example::Completion(p) => p.ambient().clone(),
        }
    }
}

pub fn builtin_example(name: &str) -> Result<Example> {
    let unknown = || Error::UnknownExample(name.to_string());
    let pair = |ambient: Fan, open: Vec<usize>| validate_completion(ambient, &open).map(Example::Completion);
    let fan = |f: Result<Fan>| f.map(Example::Fan);
    match name {
        "p1" => return fan(projective_space(1)),
        "p1xp1" => return fan(product_of_lines(2)),
        "p1xp1xp1" => return fan(product_of_lines(3)),
        "affine-line" => return fan(affine_space(1)),
        "affine-plane" => return fan(affine_space(2)),
        "example-prz" => return fan(prz()),
        "example-prz-completion" => return pair(prz_completion()?, vec![0, 1, 2, 3]),
        "p2-completion" => return pair(projective_space(2)?, vec![0, 1, 2]),
        "cstar-completion" => return pair(projective_space(1)?, Vec::new()),
        "c2-minus-origin" => {
            return fan(validate_fan(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0], vec![1]]))
        }
        "cone-over-square" => {
            let rays = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, -1]];
            return fan(validate_fan(3, rays, vec![vec![0, 1, 2, 3]]));
        }
        "cone-over-hexagon" => {
            let rays = vec![
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![-1, 1, 1],
                vec![-1, 0, 1],
                vec![0, -1, 1],
                vec![1, -1, 1],
            ];
            return fan(validate_fan(3, rays, vec![(0..6).collect()]));
        }
        "cube-face-fan" => return fan(cube_face_fan()),
        _ => {}
    }
    let (family, parameter) = split_parameter(name).ok_or_else(unknown)?;
    match family {
        "p" | "projective-space" if parameter >= 1 => fan(projective_space(parameter)),
        "affine-space" => fan(affine_space(parameter)),
        "torus" => fan(validate_fan(parameter, Vec::new(), Vec::new())),
        "hirzebruch" => fan(hirzebruch(parameter)),
        _ => Err(unknown()),
    }
}

/// The fan of a catalogue entry; for completions, the ambient fan.
pub fn builtin_fan(name: &str) -> Result<Fan> {
    builtin_example(name).map(Example::into_fan)
}

fn split_parameter(name: &str) -> Option<(&str, usize)> {
    if let Some(open) = name.find('(') {
        let inner = name[open + 1..].strip_suffix(')')?;
        return Some((&name[..open], inner.parse().ok()?));
    }
    let digits = name.len() - name.bytes().rev().take_while(u8::is_ascii_digit).count();
    if digits == 0 || digits == name.len() {
        return None;
    }
    Some((&name[..digits], name[digits..].parse().ok()?))
}

fn unit(n: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = sign;
    v
}

fn projective_space(n: usize) -> Result<Fan> {
    let mut rays: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    validate_fan(n, rays, cones)
}

fn affine_space(n: usize) -> Result<Fan> {
    let rays = (0..n).map(|i| unit(n, i, 1)).collect();
    validate_fan(n, rays, vec![(0..n).collect()])
}

/// `(P^1)^n` with rays `e_1..e_n, -e_1..-e_n`.
fn product_of_lines(n: usize) -> Result<Fan> {
    let mut rays: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
    rays.extend((0..n).map(|i| unit(n, i, -1)));
    let cones = (0..1usize << n)
        .map(|signs| {
            let mut c: Vec<usize> = (0..n).map(|i| if signs >> i & 1 == 0 { i } else { n + i }).collect();
            c.sort_unstable();
            c
        })
        .collect();
    validate_fan(n, rays, cones)
}

fn hirzebruch(a: usize) -> Result<Fan> {
    let a = i64::try_from(a).map_err(|_| Error::Overflow)?;
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
    validate_fan(2, rays, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
}

fn prz() -> Result<Fan> {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
    validate_fan(2, rays, vec![vec![0, 1], vec![2, 3]])
}

/// `P^1 x P^1` blown up at the two fixed points that `prz` omits.
fn prz_completion() -> Result<Fan> {
    let rays = vec![
        vec![1, 0],
        vec![0, 1],
        vec![-1, 0],
        vec![0, -1],
        vec![-1, 1],
        vec![1, -1],
    ];
    let cones = vec![vec![0, 1], vec![1, 4], vec![2, 4], vec![2, 3], vec![3, 5], vec![0, 5]];
    validate_fan(2, rays, cones)
}

/// Cones over the six faces of the cube with vertices `(±1, ±1, ±1)`.
fn cube_face_fan() -> Result<Fan> {
    let sign = |bit: usize| if bit == 0 { 1 } else { -1 };
    let rays: Vec<Vec<i64>> = (0..8usize)
        .map(|r| (0..3).map(|i| sign(r >> i & 1)).collect())
        .collect();
    let mut cones = Vec::new();
    for i in 0..3 {
        for bit in 0..2 {
            cones.push((0..8usize).filter(|r| r >> i & 1 == bit).collect());
        }
    }
    validate_fan(3, rays, cones)
}

/// Canonical spellings, for error hints.
pub fn names() -> Vec<String> {
    NAMES.iter().map(|s| s.to_string()).collect()
}
