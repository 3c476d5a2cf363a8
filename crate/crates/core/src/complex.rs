//! Simplicial complexes stored by their maximal faces.
//!
//! A simple polytope `P` with `m` facets is carried by its dual complex `K_P`
//! on the facet labels `0..m`: a vertex set is a face of `K_P` exactly when
//! the corresponding facets have a common point. Faces of `P` of codimension
//! `k` are the `k`-element faces of `K_P`, with `P` itself matching the empty
//! face.

use core::fmt;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::vertex_set::{Mask, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("{0} vertices exceed the limit of 64")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a complex on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex {0} lies in no face")]
    UnusedVertex(usize),
    #[error("maximal face {face} has {found} vertices, expected {expected}")]
    NotPure {
        face: Mask,
        found: usize,
        expected: usize,
    },
    #[error("ridge {ridge} lies in {count} maximal faces, expected 2")]
    NotPseudomanifold { ridge: Mask, count: usize },
    #[error("facet adjacency graph is disconnected")]
    Disconnected,
    #[error("{0} is not a face")]
    NotAFace(Mask),
    #[error("vertex counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("relabeling is not a bijection")]
    NotABijection,
}

/// A finite simplicial complex on the vertices `0..vertex_count`.
///
/// Maximal faces are kept sorted and form an antichain. The complex `{∅}` on
/// zero vertices is the dual of the point; it is also what a full subcomplex
/// on the empty vertex set returns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal_faces: Vec<Mask>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`, dropping non-maximal ones.
    ///
    /// An empty generator list yields `{∅}`.
    pub fn new<I>(vertex_count: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Mask>,
    {
        if vertex_count > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(vertex_count));
        }
        let universe = Mask::full(vertex_count);
        let mut faces: Vec<Mask> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(universe)) {
            let vertex = bad.difference(universe).iter().next().unwrap_or(0);
            return Err(ComplexError::VertexOutOfRange {
                vertex,
                count: vertex_count,
            });
        }
        if faces.is_empty() {
            faces.push(Mask::EMPTY);
        }
        let maximal_faces = maximal_antichain(faces);
        let used = maximal_faces
            .iter()
            .fold(Mask::EMPTY, |acc, f| acc.union(*f));
        if let Some(v) = universe.difference(used).iter().next() {
            return Err(ComplexError::UnusedVertex(v));
        }
        Ok(SimplicialComplex {
            vertex_count,
            maximal_faces,
        })
    }

    /// Convenience constructor from 0-based vertex lists.
    pub fn from_facets(vertex_count: usize, facets: &[&[usize]]) -> Result<Self, ComplexError> {
        for facet in facets {
            if let Some(&v) = facet.iter().find(|&&v| v >= MAX_VERTICES) {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
        }
        Self::new(
            vertex_count,
            facets.iter().map(|f| f.iter().copied().collect::<Mask>()),
        )
    }

    /// The complex `{∅}`.
    pub fn point() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            maximal_faces: vec![Mask::EMPTY],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal_faces(&self) -> &[Mask] {
        &self.maximal_faces
    }

    /// Size of the largest face; `dim K + 1`.
    pub fn max_face_size(&self) -> usize {
        self.maximal_faces
            .iter()
            .map(|f| f.len())
            .max()
            .unwrap_or(0)
    }

    pub fn vertices(&self) -> Mask {
        Mask::full(self.vertex_count)
    }

    pub fn is_face(&self, sigma: Mask) -> bool {
        self.maximal_faces.iter().any(|f| sigma.is_subset(*f))
    }

    /// Every face, the empty one included, in increasing mask order.
    pub fn faces(&self) -> BTreeSet<Mask> {
        let mut out = BTreeSet::new();
        for f in &self.maximal_faces {
            for s in f.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// Faces grouped by cardinality: entry `k` lists the faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<Mask>> {
        let mut out = vec![Vec::new(); self.max_face_size() + 1];
        for s in self.faces() {
            out[s.len()].push(s);
        }
        out
    }

    /// Number of faces with `k` vertices, for `k = 0..=max_face_size`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Inclusion-minimal vertex sets that are not faces.
    pub fn minimal_non_faces(&self) -> BTreeSet<Mask> {
        let faces = self.faces();
        let mut out = BTreeSet::new();
        for &tau in &faces {
            for v in self.vertices().difference(tau).iter() {
                let sigma = tau.insert(v);
                if faces.contains(&sigma) || out.contains(&sigma) {
                    continue;
                }
                if sigma.iter().all(|w| faces.contains(&sigma.remove(w))) {
                    out.insert(sigma);
                }
            }
        }
        out
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, relabeled onto consecutive vertices.
    ///
    /// The second component maps new labels back to the labels of `self`.
    pub fn link(&self, sigma: Mask) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        if !sigma.is_subset(self.vertices()) || !self.is_face(sigma) {
            return Err(ComplexError::NotAFace(sigma));
        }
        let generators: Vec<Mask> = self
            .maximal_faces
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        let support = generators.iter().fold(Mask::EMPTY, |acc, f| acc.union(*f));
        let faces = generators.into_iter().map(|f| f.compress(support));
        let link = SimplicialComplex::new(support.len(), faces)?;
        Ok((link, support.to_vec()))
    }

    /// The double: on `2m` vertices, vertex `i + m` playing the role of the
    /// copy `i'` of `i`.
    ///
    /// A set `σ` is a face iff the indices `i` with both `i` and `i'` in `σ`
    /// form a face of `self`. The maximal faces are therefore `F ∪ F'`
    /// together with one of `i, i'` for every `i` outside a maximal `F`.
    pub fn double(&self) -> Result<SimplicialComplex, ComplexError> {
        let m = self.vertex_count;
        if 2 * m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(2 * m));
        }
        let all = Mask::full(m);
        let mut faces = Vec::new();
        for &f in &self.maximal_faces {
            let base = f.union(f.shift_up(m));
            let free = all.difference(f);
            for chosen in free.subsets() {
                let primed = free.difference(chosen).shift_up(m);
                faces.push(base.union(chosen).union(primed));
            }
        }
        faces.sort_unstable();
        faces.dedup();
        Ok(SimplicialComplex {
            vertex_count: 2 * m,
            maximal_faces: faces,
        })
    }

    /// Join with `other`, whose vertices are shifted past those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let count = self.vertex_count + other.vertex_count;
        if count > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(count));
        }
        let mut faces = Vec::with_capacity(self.maximal_faces.len() * other.maximal_faces.len());
        for &a in &self.maximal_faces {
            for &b in &other.maximal_faces {
                faces.push(a.union(b.shift_up(self.vertex_count)));
            }
        }
        faces.sort_unstable();
        Ok(SimplicialComplex {
            vertex_count: count,
            maximal_faces: faces,
        })
    }

    /// Faces contained in `subset`, relabeled onto `0..|subset|`.
    pub fn full_subcomplex(&self, subset: Mask) -> Result<SimplicialComplex, ComplexError> {
        if let Some(v) = subset.difference(self.vertices()).iter().next() {
            return Err(ComplexError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        let faces: Vec<Mask> = self
            .maximal_faces
            .iter()
            .map(|f| f.intersection(subset).compress(subset))
            .collect();
        SimplicialComplex::new(subset.len(), faces)
    }

    /// Whether `map` carries the maximal faces of `self` exactly onto those of `other`.
    pub fn equal_under_relabel(
        &self,
        other: &SimplicialComplex,
        map: &[usize],
    ) -> Result<bool, ComplexError> {
        if self.vertex_count != other.vertex_count {
            return Err(ComplexError::SizeMismatch {
                left: self.vertex_count,
                right: other.vertex_count,
            });
        }
        if map.len() != self.vertex_count {
            return Err(ComplexError::SizeMismatch {
                left: map.len(),
                right: self.vertex_count,
            });
        }
        let image: Mask = map.iter().copied().filter(|&v| v < MAX_VERTICES).collect();
        if image != self.vertices() || map.iter().any(|&v| v >= self.vertex_count) {
            return Err(ComplexError::NotABijection);
        }
        let mut mapped: Vec<Mask> = self.maximal_faces.iter().map(|f| f.relabel(map)).collect();
        mapped.sort_unstable();
        Ok(mapped == other.maximal_faces)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}](", self.vertex_count)?;
        for (k, face) in self.maximal_faces.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str(")")
    }
}

/// Relabeling that carries `double(join(K1, K2))` onto
/// `join(double(K1), double(K2))` for complexes on `m1` and `m2` vertices.
pub fn double_of_join_relabeling(m1: usize, m2: usize) -> Vec<usize> {
    let m = m1 + m2;
    let mut map = vec![0; 2 * m];
    for i in 0..m1 {
        map[i] = i;
        map[m + i] = m1 + i;
    }
    for j in 0..m2 {
        map[m1 + j] = 2 * m1 + j;
        map[m + m1 + j] = 2 * m1 + m2 + j;
    }
    map
}

fn maximal_antichain(mut faces: Vec<Mask>) -> Vec<Mask> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// The dual complex of a simple `dim`-polytope, checked to be a pure,
/// strongly connected pseudomanifold of dimension `dim - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualPolytope {
    complex: SimplicialComplex,
    dim: usize,
}

impl DualPolytope {
    /// Checks purity, the pseudomanifold condition and connectivity of the
    /// facet adjacency graph.
    pub fn validate(complex: SimplicialComplex, dim: usize) -> Result<Self, ComplexError> {
        if let Some(&face) = complex.maximal_faces.iter().find(|f| f.len() != dim) {
            return Err(ComplexError::NotPure {
                face,
                found: face.len(),
                expected: dim,
            });
        }
        if dim == 0 {
            // purity leaves only {∅}, and every vertex is used, so m = 0
            return Ok(DualPolytope { complex, dim });
        }
        let mut ridges: BTreeMap<Mask, Vec<usize>> = BTreeMap::new();
        for (k, f) in complex.maximal_faces.iter().enumerate() {
            for v in f.iter() {
                ridges.entry(f.remove(v)).or_default().push(k);
            }
        }
        if let Some((&ridge, owners)) = ridges.iter().find(|(_, owners)| owners.len() != 2) {
            return Err(ComplexError::NotPseudomanifold {
                ridge,
                count: owners.len(),
            });
        }
        let mut parent: Vec<usize> = (0..complex.maximal_faces.len()).collect();
        for owners in ridges.values() {
            let a = find(&mut parent, owners[0]);
            let b = find(&mut parent, owners[1]);
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (1..parent.len()).any(|k| find(&mut parent, k) != root) {
            return Err(ComplexError::Disconnected);
        }
        Ok(DualPolytope { complex, dim })
    }

    pub fn point() -> Self {
        DualPolytope {
            complex: SimplicialComplex::point(),
            dim: 0,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    /// `n`, the dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `m`, the number of facets of the polytope.
    pub fn facet_count(&self) -> usize {
        self.complex.vertex_count
    }

    /// `[f_{n-1,1}, .., f_{0,n}]`: entry `i - 1` counts faces of codimension `i`.
    pub fn f_counts(&self) -> Vec<usize> {
        let counts = self.complex.face_counts();
        (1..=self.dim)
            .map(|i| counts.get(i).copied().unwrap_or(0))
            .collect()
    }

    /// The face of the polytope dual to `sigma`, of dimension `n - |σ|`.
    pub fn link(&self, sigma: Mask) -> Result<(DualPolytope, Vec<usize>), ComplexError> {
        let (complex, map) = self.complex.link(sigma)?;
        let link = DualPolytope::validate(complex, self.dim - sigma.len())?;
        Ok((link, map))
    }

    /// Dual of `L(P)`, a simple `(m + n)`-polytope with `2m` facets.
    pub fn double(&self) -> Result<DualPolytope, ComplexError> {
        let complex = self.complex.double()?;
        DualPolytope::validate(complex, self.facet_count() + self.dim)
    }

    /// Dual of `P × Q`.
    pub fn product(&self, other: &DualPolytope) -> Result<DualPolytope, ComplexError> {
        let complex = self.complex.join(&other.complex)?;
        DualPolytope::validate(complex, self.dim + other.dim)
    }

    /// Number of facets of `P` disjoint from facet `vertex`: vertices `j`
    /// with `{vertex, j}` not an edge.
    pub fn disjoint_facet_count(&self, vertex: usize) -> Result<usize, ComplexError> {
        let m = self.complex.vertex_count;
        if vertex >= m {
            return Err(ComplexError::VertexOutOfRange { vertex, count: m });
        }
        let neighbours = self
            .complex
            .maximal_faces
            .iter()
            .filter(|f| f.contains(vertex))
            .fold(Mask::EMPTY, |acc, f| acc.union(*f));
        Ok(m - neighbours.len())
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
