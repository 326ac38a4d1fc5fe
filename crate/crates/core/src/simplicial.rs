//! Abstract simplicial complexes on integer-labelled vertices.
//!
//! The *void* complex has no faces at all; the *empty* complex `{∅}` has only
//! the empty face. They are different values and behave differently in
//! reduced cohomology: `H̃^{-1}({∅}) = ℤ`, while the void complex is rejected.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{cochain_cohomology, coefficient_cohomology, FinAbGroup, GroupExpr, IntMatrix};

/// A face: a strictly increasing list of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The face with the vertex at `position` removed.
    pub fn without_position(&self, position: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(position);
        Face(v)
    }

    pub fn position(&self, v: u32) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    /// All subsets, in no particular order.
    fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (0u64..(1u64 << n)).map(move |mask| Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect()))
    }
}

impl From<&[u32]> for Face {
    fn from(v: &[u32]) -> Self {
        Face::new(v.iter().copied())
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A sequence of groups indexed by consecutive degrees starting at `first_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded<T> {
    pub first_degree: isize,
    pub groups: Vec<T>,
}

impl<T> Graded<T> {
    pub fn get(&self, degree: isize) -> Option<&T> {
        let i = degree.checked_sub(self.first_degree)?;
        usize::try_from(i).ok().and_then(|i| self.groups.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, &T)> {
        self.groups.iter().enumerate().map(|(i, g)| (self.first_degree + i as isize, g))
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// The simplicial cochain complex of a complex with integer coefficients.
///
/// `bases[k]` lists the faces indexing the group in degree `first_degree + k`
/// (lexicographic order); `differentials[k]` maps degree `first_degree + k`
/// to the next one.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub first_degree: isize,
    pub bases: Vec<Vec<Face>>,
    pub differentials: Vec<IntMatrix>,
}

impl CochainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn cohomology(&self) -> Result<Graded<FinAbGroup>> {
        Ok(Graded { first_degree: self.first_degree, groups: cochain_cohomology(&self.dims(), &self.differentials)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Face>,
    /// `faces_by_size[k]`: all faces with `k` vertices, sorted.
    faces_by_size: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { vertices: Vec::new(), facets: Vec::new(), faces_by_size: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_facets([Face::empty()])
    }

    /// The complex generated by `facets`. Non-maximal entries are dropped; the
    /// vertex set is the union of the facets. An empty list gives the void complex.
    pub fn from_facets<I, F>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let candidates: BTreeSet<Face> = facets.into_iter().map(Into::into).collect();
        if candidates.is_empty() {
            return Self::void();
        }
        let maximal: Vec<Face> =
            candidates.iter().filter(|f| !candidates.iter().any(|g| g != *f && f.is_subset(g))).cloned().collect();
        let vertices: BTreeSet<u32> = maximal.iter().flat_map(|f| f.0.iter().copied()).collect();
        let top = maximal.iter().map(Face::len).max().unwrap_or(0);
        let mut by_size: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top + 1];
        for facet in &maximal {
            for sub in facet.subsets() {
                by_size[sub.len()].insert(sub);
            }
        }
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets: maximal,
            faces_by_size: by_size.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// A complex on a declared vertex set. Declared vertices that lie in no
    /// facet become isolated vertices.
    pub fn with_vertices<F: Into<Face>>(
        vertices: impl IntoIterator<Item = u32>,
        facets: impl IntoIterator<Item = F>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let mut all: Vec<Face> = Vec::new();
        for f in facets {
            let f = f.into();
            if let Some(&v) = f.0.iter().find(|v| !vertices.contains(v)) {
                return Err(Error::UnknownVertex(v));
            }
            all.push(f);
        }
        all.extend(vertices.iter().map(|&v| Face(vec![v])));
        if all.is_empty() {
            // No vertices and no facets declared: the complex {∅}.
            return Ok(Self::empty());
        }
        Ok(Self::from_facets(all))
    }

    /// The full simplex on `1..=n`.
    pub fn simplex(n: u32) -> Self {
        Self::from_facets([Face::new(1..=n)])
    }

    /// The complex whose faces are the subsets of `vertices` containing none
    /// of `nonfaces`. Vertices that are themselves non-faces are dropped.
    pub fn from_nonfaces(vertices: &[u32], nonfaces: &[Face]) -> Self {
        let n = vertices.len();
        assert!(n < 64, "too many vertices");
        let forbidden: Vec<u64> = nonfaces
            .iter()
            .map(|nf| {
                nf.0.iter()
                    .map(|v| vertices.iter().position(|w| w == v).map_or(u64::MAX, |i| 1u64 << i))
                    .fold(0, |acc, b| acc | b)
            })
            .collect();
        let is_face = |mask: u64| forbidden.iter().all(|&nf| nf & mask != nf);
        // Faces of the complex are downward closed, so the maximal ones can be
        // found by greedy depth-first extension.
        let mut faces = Vec::new();
        let mut stack = vec![(0u64, 0usize)];
        while let Some((mask, next)) = stack.pop() {
            let mut extended = false;
            for i in next..n {
                let m = mask | (1 << i);
                if is_face(m) {
                    stack.push((m, i + 1));
                    extended = true;
                }
            }
            // Only record faces that cannot be extended by any vertex at all.
            if !extended && (0..n).all(|i| mask & (1 << i) != 0 || !is_face(mask | (1 << i))) {
                faces.push(Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| vertices[i]).collect()));
            }
        }
        Self::from_facets(faces)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}` and for the void complex.
    pub fn dimension(&self) -> isize {
        self.faces_by_size.len() as isize - 2
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces_by_size.get(face.len()).is_some_and(|fs| fs.binary_search(face).is_ok())
    }

    /// All faces of dimension `d`, lexicographically sorted.
    pub fn faces(&self, d: isize) -> &[Face] {
        usize::try_from(d + 1).ok().and_then(|k| self.faces_by_size.get(k)).map_or(&[], Vec::as_slice)
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size.iter().map(Vec::len).sum()
    }

    fn require_face(&self, face: &Face) -> Result<()> {
        if self.contains(face) {
            Ok(())
        } else {
            Err(Error::NotAFace)
        }
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        self.require_face(face)?;
        Ok(Self::from_facets(self.facets.iter().filter(|f| face.is_subset(f)).map(|f| f.difference(face))))
    }

    /// The faces contained in `subset`.
    pub fn restriction(&self, subset: &[u32]) -> Result<SimplicialComplex> {
        if let Some(&v) = subset.iter().find(|v| self.vertices.binary_search(v).is_err()) {
            return Err(Error::UnknownVertex(v));
        }
        if self.is_void() {
            return Ok(Self::void());
        }
        let w = Face::new(subset.iter().copied());
        Ok(Self::from_facets(
            self.facets.iter().map(|f| Face(f.0.iter().copied().filter(|v| w.contains(*v)).collect())),
        ))
    }

    /// The crosscut complex of `faces` in `self`, on the vertex set
    /// `1..=faces.len()`: an index set is a face when the union of the listed
    /// faces it selects lies in the complex.
    pub fn crosscut(&self, faces: &[Face]) -> Result<SimplicialComplex> {
        for f in faces {
            self.require_face(f)?;
        }
        let mut maximal = Vec::new();
        // (chosen indices, union so far, next index to try)
        let mut stack: Vec<(Vec<u32>, Face, usize)> = vec![(Vec::new(), Face::empty(), 0)];
        while let Some((chosen, union, next)) = stack.pop() {
            let mut grew = false;
            for (i, face) in faces.iter().enumerate().skip(next) {
                let u = union.union(face);
                if self.contains(&u) {
                    let mut c = chosen.clone();
                    c.push(i as u32 + 1);
                    stack.push((c, u, i + 1));
                    grew = true;
                }
            }
            if !grew {
                maximal.push(Face(chosen));
            }
        }
        Ok(Self::from_facets(maximal))
    }

    /// Minimal subsets of the vertex set that are not faces, plus the vertex
    /// set itself is never included. Sorted lexicographically.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        let n = self.vertices.len();
        assert!(n < 64, "too many vertices");
        // A non-face is minimal when every codimension-one subset is a face.
        // Enumerate candidates as faces extended by one vertex.
        let mut seen = BTreeSet::new();
        for faces in &self.faces_by_size {
            for f in faces {
                for &v in &self.vertices {
                    if f.contains(v) {
                        continue;
                    }
                    let g = f.union(&Face(vec![v]));
                    if self.contains(&g) || !seen.insert(g.clone()) {
                        continue;
                    }
                    if (0..g.len()).all(|p| self.contains(&g.without_position(p))) {
                        out.push(g);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Number of connected components of the 1-skeleton.
    pub fn connected_components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.faces(1) {
            let a = self.vertices.binary_search(&e.0[0]).expect("vertex");
            let b = self.vertices.binary_search(&e.0[1]).expect("vertex");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// `Σ (-1)^j #Δ_j` over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces_by_size
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum()
    }

    /// The simplicial cochain complex with integer coefficients. The reduced
    /// complex starts with `C̃^{-1} = ℤ^{∅}`.
    ///
    /// The coboundary of a cochain `σ` at `G = {g_0 < … < g_k}` is
    /// `Σ_l (-1)^l σ(G ∖ g_l)`.
    pub fn cochain_complex(&self, reduced: bool) -> Result<CochainComplex> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let start = if reduced { 0 } else { 1 };
        let bases: Vec<Vec<Face>> = self.faces_by_size.iter().skip(start).cloned().collect();
        let differentials = bases.windows(2).map(|w| coboundary_matrix(&w[0], &w[1])).collect();
        Ok(CochainComplex { first_degree: start as isize - 1, bases, differentials })
    }

    pub fn cohomology(&self, reduced: bool) -> Result<Graded<FinAbGroup>> {
        self.cochain_complex(reduced)?.cohomology()
    }

    /// Cohomology with coefficients in an abstract group named `symbol`.
    pub fn cohomology_with_coefficients(&self, symbol: &str, reduced: bool) -> Result<Graded<GroupExpr>> {
        let h = self.cohomology(reduced)?;
        let trivial = FinAbGroup::trivial();
        let groups = (0..h.groups.len())
            .map(|i| coefficient_cohomology(&h.groups[i], h.groups.get(i + 1).unwrap_or(&trivial), symbol))
            .collect();
        Ok(Graded { first_degree: h.first_degree, groups })
    }
}

/// Matrix of `δ : ℤ^{lower} → ℤ^{upper}` where each upper face has one more vertex.
fn coboundary_matrix(lower: &[Face], upper: &[Face]) -> IntMatrix {
    let mut d = IntMatrix::zeros(upper.len(), lower.len());
    for (row, g) in upper.iter().enumerate() {
        for l in 0..g.len() {
            let col = lower.binary_search(&g.without_position(l)).expect("faces are downward closed");
            d[(row, col)] = BigInt::from(if l % 2 == 0 { 1 } else { -1 });
        }
    }
    d
}

/// Facets separated by spaces, or `void`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        for (i, facet) in self.facets().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        Ok(())
    }
}
