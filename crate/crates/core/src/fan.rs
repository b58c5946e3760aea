//! Rational polyhedral fans: validation, faces, links and star quotients.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::dd;
use crate::error::{Error, Result};
use crate::lattice::{content, primitive, rank_of, Echelon, Lattice};

/// A cone of a fan, given by the sorted indices of its rays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    rays: Vec<usize>,
    dim: usize,
}

impl Cone {
    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    /// Whether every ray of `self` is a ray of `other`; inside a fan this is
    /// exactly the face relation.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        is_subset(&self.rays, &other.rays)
    }

    pub fn contains_ray(&self, ray: usize) -> bool {
        self.rays.binary_search(&ray).is_ok()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// The serialized form of a fan: nonmaximal faces are implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanDescription {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

/// Combinatorial type of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_simplicial: bool,
    pub is_smooth: bool,
    pub is_complete: bool,
    /// Number of cones of each dimension `0..=rank`.
    pub f_vector: Vec<usize>,
}

/// A validated fan. Every face of every cone is present and cones are sorted
/// by dimension, then by ray indices; index 0 is the zero cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice: Lattice,
    rays: Vec<Vec<i64>>,
    cones: Vec<Cone>,
    maximal: Vec<bool>,
    lookup: BTreeMap<Vec<usize>, usize>,
}

/// Exact geometry of one cone: its span, facets and faces.
struct ConeGeometry {
    rays: Vec<usize>,
    echelon: Echelon,
    /// Inward facet normals as functionals on the ambient lattice.
    facets: Vec<Vec<i64>>,
    /// Integer functionals cutting out the linear span.
    equations: Vec<Vec<i64>>,
    faces: BTreeMap<Vec<usize>, usize>,
}

enum GeometryError {
    NotStronglyConvex,
    Redundant(usize),
    Other(Error),
}

impl From<Error> for GeometryError {
    fn from(e: Error) -> Self {
        GeometryError::Other(e)
    }
}

impl ConeGeometry {
    fn new(ambient: usize, all_rays: &[Vec<i64>], rays: &[usize]) -> core::result::Result<Self, GeometryError> {
        let vectors: Vec<Vec<i64>> = rays.iter().map(|&r| all_rays[r].clone()).collect();
        let echelon = Echelon::of_columns(ambient, &vectors)?;
        let d = echelon.rank;
        let coords: Vec<Vec<i64>> = vectors
            .iter()
            .map(|v| echelon.span_coordinates(v))
            .collect::<Result<_>>()?;
        let normals = if d == 0 {
            Vec::new()
        } else {
            dd::facet_normals(d, &coords)?.ok_or(Error::Overflow)?
        };
        if d > 0 && rank_of(d, &normals)? < d {
            return Err(GeometryError::NotStronglyConvex);
        }
        let facets: Vec<Vec<i64>> = normals
            .iter()
            .map(|u| {
                let mut f = vec![0i64; ambient];
                for (j, uj) in u.iter().enumerate() {
                    for (k, x) in echelon.transform[j].iter().enumerate() {
                        f[k] += uj * x;
                    }
                }
                primitive(&f)
            })
            .collect();
        let equations = echelon.transform[d..].to_vec();

        let facet_sets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                rays.iter()
                    .copied()
                    .zip(&vectors)
                    .filter(|(_, v)| crate::lattice::dot(f, v).map(|x| x == 0).unwrap_or(false))
                    .map(|(r, _)| r)
                    .collect()
            })
            .collect();
        let mut faces: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        faces.insert(rays.to_vec(), d);
        queue.push_back(rays.to_vec());
        while let Some(face) = queue.pop_front() {
            for fs in &facet_sets {
                let next: Vec<usize> = face.iter().copied().filter(|r| fs.binary_search(r).is_ok()).collect();
                if next.len() < face.len() && !faces.contains_key(&next) {
                    let vs: Vec<Vec<i64>> = next.iter().map(|&r| all_rays[r].clone()).collect();
                    let dim = rank_of(ambient, &vs)?;
                    faces.insert(next.clone(), dim);
                    queue.push_back(next);
                }
            }
        }
        for &r in rays {
            if !faces.contains_key(&vec![r][..]) {
                return Err(GeometryError::Redundant(r));
            }
        }
        Ok(ConeGeometry {
            rays: rays.to_vec(),
            echelon,
            facets,
            equations,
            faces,
        })
    }

    fn dim(&self) -> usize {
        self.echelon.rank
    }

    /// Whether `self ∩ other` is a common face of both.
    fn meets_in_face(&self, other: &ConeGeometry, ambient: usize, all_rays: &[Vec<i64>]) -> Result<bool> {
        let common: Vec<usize> = self
            .rays
            .iter()
            .copied()
            .filter(|r| other.rays.binary_search(r).is_ok())
            .collect();
        if !self.faces.contains_key(&common) || !other.faces.contains_key(&common) {
            return Ok(false);
        }
        if common.len() == self.rays.len() || common.len() == other.rays.len() {
            return Ok(true);
        }
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for g in [self, other] {
            rows.extend(g.facets.iter().cloned());
            for e in &g.equations {
                rows.push(e.clone());
                rows.push(e.iter().map(|x| -x).collect());
            }
        }
        let extreme = dd::extreme_rays(ambient, &rows)?.ok_or(Error::Overflow)?;
        Ok(extreme
            .iter()
            .all(|v| common.iter().any(|&r| &all_rays[r] == v)))
    }
}

/// Validates the input and builds the fan with all faces.
pub fn validate_fan(rank: usize, rays: Vec<Vec<i64>>, maximal_cones: Vec<Vec<usize>>) -> Result<Fan> {
    for (i, r) in rays.iter().enumerate() {
        if r.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: r.len(),
            });
        }
        if content(r) != 1 {
            return Err(Error::NonPrimitiveRay { ray: i });
        }
    }
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i] == rays[j] {
                return Err(Error::DuplicateRay { first: i, second: j });
            }
        }
    }
    let mut input: Vec<Vec<usize>> = Vec::with_capacity(maximal_cones.len());
    for cone in maximal_cones {
        let mut c = cone;
        for &r in &c {
            if r >= rays.len() {
                return Err(Error::InvalidRayIndex {
                    index: r,
                    rays: rays.len(),
                });
            }
        }
        c.sort_unstable();
        c.dedup();
        input.push(c);
    }

    let mut geometry = Vec::with_capacity(input.len());
    for (i, c) in input.iter().enumerate() {
        match ConeGeometry::new(rank, &rays, c) {
            Ok(g) => geometry.push(g),
            Err(GeometryError::NotStronglyConvex) => return Err(Error::NotStronglyConvex { cone: i }),
            Err(GeometryError::Redundant(r)) => return Err(Error::RedundantGenerator { cone: i, ray: r }),
            Err(GeometryError::Other(e)) => return Err(e),
        }
    }
    for i in 0..geometry.len() {
        for j in i + 1..geometry.len() {
            if !geometry[i].meets_in_face(&geometry[j], rank, &rays)? {
                return Err(Error::NotAFan { first: i, second: j });
            }
        }
    }
    let mut cones: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    cones.insert(Vec::new(), 0);
    for g in &geometry {
        for (f, &d) in &g.faces {
            cones.insert(f.clone(), d);
        }
        debug_assert_eq!(g.faces.get(&g.rays), Some(&g.dim()));
    }
    Ok(Fan::assemble(Lattice::new(rank), rays, cones))
}

impl Fan {
    pub fn from_description(d: FanDescription) -> Result<Fan> {
        validate_fan(d.rank, d.rays, d.maximal_cones)
    }

    /// Builds a fan from a face-closed cone set already known to be a fan.
    fn assemble(lattice: Lattice, rays: Vec<Vec<i64>>, cones: BTreeMap<Vec<usize>, usize>) -> Fan {
        let mut list: Vec<Cone> = cones
            .into_iter()
            .map(|(rays, dim)| Cone { rays, dim })
            .collect();
        list.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
        let maximal = list
            .iter()
            .map(|c| {
                !list
                    .iter()
                    .any(|o| o.rays.len() > c.rays.len() && c.is_face_of(o))
            })
            .collect();
        let lookup = list
            .iter()
            .enumerate()
            .map(|(i, c)| (c.rays.clone(), i))
            .collect();
        Fan {
            lattice,
            rays,
            cones: list,
            maximal,
            lookup,
        }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i]
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, index: usize) -> &Cone {
        &self.cones[index]
    }

    pub fn is_maximal(&self, index: usize) -> bool {
        self.maximal[index]
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = (usize, &Cone)> + '_ {
        self.cones
            .iter()
            .enumerate()
            .filter(move |(i, _)| self.maximal[*i])
    }

    pub fn zero_cone(&self) -> &Cone {
        &self.cones[0]
    }

    /// Index of the cone with exactly these (sorted) rays.
    pub fn find(&self, rays: &[usize]) -> Option<usize> {
        self.lookup.get(rays).copied()
    }

    pub fn index_of(&self, cone: &Cone) -> Result<usize> {
        match self.find(&cone.rays) {
            Some(i) if self.cones[i].dim == cone.dim => Ok(i),
            _ => Err(Error::UnknownCone),
        }
    }

    pub fn description(&self) -> FanDescription {
        FanDescription {
            rank: self.rank(),
            rays: self.rays.clone(),
            maximal_cones: self.maximal_cones().map(|(_, c)| c.rays.clone()).collect(),
        }
    }

    /// Indices of the faces of cone `index` (itself included), sorted by dimension.
    pub fn faces_of(&self, index: usize) -> Vec<usize> {
        let c = &self.cones[index];
        (0..=index)
            .filter(|&i| self.cones[i].rays.len() <= c.rays.len() && self.cones[i].is_face_of(c))
            .collect()
    }

    /// All faces of `cone`, graded by dimension.
    pub fn face_lattice(&self, cone: &Cone) -> Result<Vec<Vec<Cone>>> {
        let index = self.index_of(cone)?;
        let mut graded = vec![Vec::new(); cone.dim + 1];
        for i in self.faces_of(index) {
            graded[self.cones[i].dim].push(self.cones[i].clone());
        }
        Ok(graded)
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(Cone::is_simplicial)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.rank() + 1];
        for c in &self.cones {
            f[c.dim] += 1;
        }
        f
    }

    pub fn is_smooth(&self) -> bool {
        self.maximal_cones().all(|(_, c)| {
            c.is_simplicial() && {
                let vs: Vec<Vec<i64>> = c.rays.iter().map(|&r| self.rays[r].clone()).collect();
                matches!(Echelon::of_columns(self.rank(), &vs).and_then(|e| e.index()), Ok(1))
            }
        })
    }

    /// Boundaryless and connected through top-dimensional cones.
    pub fn is_complete(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return true;
        }
        let top: Vec<usize> = (0..self.cones.len()).filter(|&i| self.cones[i].dim == n).collect();
        if top.is_empty() {
            return false;
        }
        let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in &self.cones {
            if c.dim + 1 != n {
                continue;
            }
            let containing: Vec<usize> = top
                .iter()
                .copied()
                .filter(|&t| c.is_face_of(&self.cones[t]))
                .collect();
            if containing.len() != 2 {
                return false;
            }
            adjacency.entry(containing[0]).or_default().push(containing[1]);
            adjacency.entry(containing[1]).or_default().push(containing[0]);
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([top[0]]);
        seen.insert(top[0]);
        while let Some(t) = queue.pop_front() {
            for &u in adjacency.get(&t).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        seen.len() == top.len()
    }

    pub fn classify(&self) -> Classification {
        let is_simplicial = self.is_simplicial();
        Classification {
            is_simplicial,
            is_smooth: is_simplicial && self.is_smooth(),
            is_complete: self.is_complete(),
            f_vector: self.f_vector(),
        }
    }

    /// The subfan generated by the given cones (all their faces).
    pub fn subfan(&self, generators: &[usize]) -> Fan {
        let mut cones: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        cones.insert(Vec::new(), 0);
        for &g in generators {
            for f in self.faces_of(g) {
                cones.insert(self.cones[f].rays.clone(), self.cones[f].dim);
            }
        }
        Fan::assemble(self.lattice, self.rays.clone(), cones)
    }

    /// Complete fan of the link of `cone`, in the lattice
    /// `(N ∩ span σ) / (N ∩ Q α)` with `α` the sum of the ray generators.
    /// Its cones are the images of the proper faces of `cone`.
    pub fn link_fan(&self, cone: &Cone) -> Result<Fan> {
        let index = self.index_of(cone)?;
        if cone.is_zero() {
            return Err(Error::ZeroCone);
        }
        let vectors: Vec<Vec<i64>> = cone.rays.iter().map(|&r| self.rays[r].clone()).collect();
        let span = Echelon::of_columns(self.rank(), &vectors)?;
        let d = span.rank;
        let coords: Vec<Vec<i64>> = vectors
            .iter()
            .map(|v| span.span_coordinates(v))
            .collect::<Result<_>>()?;
        let mut alpha = vec![0i64; d];
        for c in &coords {
            for (a, x) in alpha.iter_mut().zip(c) {
                *a = a.checked_add(*x).ok_or(Error::Overflow)?;
            }
        }
        let alpha = primitive(&alpha);
        let quotient = Echelon::of_columns(d, &[alpha])?;
        let images: Vec<Vec<i64>> = coords
            .iter()
            .map(|c| quotient.quotient_coordinates(c).map(|v| primitive(&v)))
            .collect::<Result<_>>()?;

        let position: BTreeMap<usize, usize> =
            cone.rays.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let (rays, maximal) = if d == 1 {
            (Vec::new(), Vec::new())
        } else {
            let maximal: Vec<Vec<usize>> = self
                .faces_of(index)
                .into_iter()
                .filter(|&f| self.cones[f].dim + 1 == d)
                .map(|f| self.cones[f].rays.iter().map(|r| position[r]).collect())
                .collect();
            (images, maximal)
        };
        validate_fan(d - 1, rays, maximal)
    }

    /// Fan of the orbit closure of `cone`: images in `N / (N ∩ span σ)` of
    /// the cones containing it.
    pub fn star_quotient(&self, cone: &Cone) -> Result<Fan> {
        self.index_of(cone)?;
        let vectors: Vec<Vec<i64>> = cone.rays.iter().map(|&r| self.rays[r].clone()).collect();
        let span = Echelon::of_columns(self.rank(), &vectors)?;
        let d = span.rank;
        let star: Vec<usize> = (0..self.cones.len())
            .filter(|&i| cone.is_face_of(&self.cones[i]))
            .collect();
        // rays of the quotient <-> cones of dimension d + 1 in the star
        let mut ray_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rays: Vec<Vec<i64>> = Vec::new();
        for &i in &star {
            let c = &self.cones[i];
            if c.dim != d + 1 {
                continue;
            }
            let extra = c
                .rays
                .iter()
                .copied()
                .find(|r| !cone.contains_ray(*r))
                .expect("a larger cone has a ray outside the face");
            let image = primitive(&span.quotient_coordinates(&self.rays[extra])?);
            ray_of.insert(i, rays.len());
            rays.push(image);
        }
        let maximal: Vec<Vec<usize>> = star
            .iter()
            .copied()
            .filter(|&i| self.maximal[i])
            .map(|i| {
                let c = &self.cones[i];
                ray_of
                    .iter()
                    .filter(|(&j, _)| self.cones[j].is_face_of(c))
                    .map(|(_, &r)| r)
                    .collect()
            })
            .collect();
        validate_fan(self.rank() - d, rays, maximal)
    }
}

/// Union and intersection of two subfans of a common fan.
#[derive(Clone, Debug)]
pub struct SubfanOps {
    pub union: Fan,
    pub intersection: Fan,
}

pub fn subfan_ops(f1: &Fan, f2: &Fan) -> Result<SubfanOps> {
    if f1.lattice != f2.lattice || f1.rays != f2.rays {
        return Err(Error::IncompatibleRayUniverse);
    }
    let rank = f1.rank();
    let g1: Vec<ConeGeometry> = f1
        .maximal_cones()
        .map(|(_, c)| geometry_of(rank, &f1.rays, &c.rays))
        .collect::<Result<_>>()?;
    let g2: Vec<ConeGeometry> = f2
        .maximal_cones()
        .map(|(_, c)| geometry_of(rank, &f2.rays, &c.rays))
        .collect::<Result<_>>()?;
    for (i, a) in g1.iter().enumerate() {
        for (j, b) in g2.iter().enumerate() {
            if !a.meets_in_face(b, rank, &f1.rays)? {
                return Err(Error::NotAFan { first: i, second: j });
            }
        }
    }
    let mut union: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut inter: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for c in &f1.cones {
        union.insert(c.rays.clone(), c.dim);
        if f2.find(&c.rays).is_some() {
            inter.insert(c.rays.clone(), c.dim);
        }
    }
    for c in &f2.cones {
        union.insert(c.rays.clone(), c.dim);
    }
    Ok(SubfanOps {
        union: Fan::assemble(f1.lattice, f1.rays.clone(), union),
        intersection: Fan::assemble(f1.lattice, f1.rays.clone(), inter),
    })
}

fn geometry_of(rank: usize, rays: &[Vec<i64>], cone: &[usize]) -> Result<ConeGeometry> {
    ConeGeometry::new(rank, rays, cone).map_err(|e| match e {
        GeometryError::Other(e) => e,
        // cones of validated fans are pointed and irredundant
        _ => Error::Overflow,
    })
}
