//! The spectrum of a binoid presentation as a finite poset.
//!
//! Every prime ideal is generated by a subset of the generators. A subset `G`
//! generates a prime exactly when
//!
//! * for every relation `a = b`, `G` meets `supp(a)` if and only if it meets `supp(b)`, and
//! * for every relation `a = ∞`, `G` meets `supp(a)`.
//!
//! Opens of the Zariski topology are the subsets of the spectrum closed under
//! taking smaller primes; `D(f)` consists of the primes avoiding `supp(f)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

use crate::binoid::{support, BinoidPresentation, RelationRhs};
use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 63;

/// A subset of the generator indices `0..63`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        GenSet((1u64 << n) - 1)
    }

    pub fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        GenSet(1 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        GenSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: GenSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn meets(self, other: GenSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }

    /// Generator names joined by `sep`.
    pub fn names(self, generators: &[String], sep: &str) -> String {
        self.iter().map(|i| generators[i].as_str()).collect::<Vec<_>>().join(sep)
    }
}

/// Order by cardinality, then lexicographically by index list.
impl Ord for GenSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for GenSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A prime ideal, given by the generators it contains. The empty set stands
/// for `⟨∞⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal(pub GenSet);

impl PrimeIdeal {
    pub fn generators(self) -> GenSet {
        self.0
    }
}

#[derive(Clone, Copy)]
enum Constraint {
    Balanced(GenSet, GenSet),
    Meets(GenSet),
}

fn constraints(m: &BinoidPresentation) -> Vec<Constraint> {
    let set = |v: &[u32]| GenSet::from_indices(support(v));
    m.relations()
        .iter()
        .map(|r| match &r.rhs {
            RelationRhs::Element(rhs) => Constraint::Balanced(set(&r.lhs), set(rhs)),
            RelationRhs::Infinity => Constraint::Meets(set(&r.lhs)),
        })
        .collect()
}

fn is_prime(g: GenSet, constraints: &[Constraint]) -> bool {
    constraints.iter().all(|c| match *c {
        Constraint::Balanced(a, b) => g.meets(a) == g.meets(b),
        Constraint::Meets(a) => g.meets(a),
    })
}

/// The primes of a presentation, sorted by cardinality and then
/// lexicographically, together with the generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecPoset {
    generators: Vec<String>,
    primes: Vec<PrimeIdeal>,
}

impl SpecPoset {
    /// Enumerates subsets by ascending cardinality. A subset that is the union
    /// of the primes it contains is accepted without checking, since unions of
    /// primes are prime.
    pub fn compute(m: &BinoidPresentation) -> Result<Self> {
        let n = m.generator_count();
        if n == 0 {
            return Err(Error::NoGenerators);
        }
        if n > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(n));
        }
        let zero = |v: &[u32]| v.iter().all(|&e| e == 0);
        for r in m.relations() {
            let degenerate = match &r.rhs {
                RelationRhs::Element(rhs) => zero(&r.lhs) || zero(rhs),
                RelationRhs::Infinity => zero(&r.lhs),
            };
            if degenerate {
                return Err(Error::NotPositive);
            }
        }
        let cs = constraints(m);
        let mut subsets: Vec<GenSet> = (0..=GenSet::full(n).0).map(GenSet).collect();
        subsets.sort();
        let mut primes: Vec<PrimeIdeal> = Vec::new();
        for g in subsets {
            let covered = primes.iter().filter(|p| p.0.is_subset(g)).fold(GenSet::EMPTY, |acc, p| acc.union(p.0));
            if (covered == g && !g.is_empty()) || is_prime(g, &cs) {
                primes.push(PrimeIdeal(g));
            }
        }
        Ok(SpecPoset { generators: m.generators().to_vec(), primes })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// `M_+`, the ideal of all generators.
    pub fn top(&self) -> PrimeIdeal {
        PrimeIdeal(GenSet::full(self.generators.len()))
    }

    pub fn index_of(&self, p: PrimeIdeal) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    pub fn contains(&self, p: PrimeIdeal) -> bool {
        self.index_of(p).is_some()
    }

    fn require(&self, p: PrimeIdeal) -> Result<usize> {
        self.index_of(p).ok_or(Error::NotInSpec)
    }

    /// `⟨x, z⟩`, or `⟨∞⟩` for the empty set.
    pub fn label(&self, p: PrimeIdeal) -> String {
        if p.0.is_empty() {
            String::from("⟨∞⟩")
        } else {
            format!("⟨{}⟩", p.0.names(&self.generators, ","))
        }
    }

    /// Length of the longest strictly increasing chain of primes ending at `p`.
    pub fn height(&self, p: PrimeIdeal) -> Result<usize> {
        let target = self.require(p)?;
        Ok(self.heights()[target])
    }

    /// Heights of all primes, in spectrum order.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.primes.len()];
        // Strict subsets come earlier in the cardinality order.
        for i in 0..self.primes.len() {
            h[i] = (0..i)
                .filter(|&j| self.primes[j].0.is_subset(self.primes[i].0) && self.primes[j] != self.primes[i])
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// The generators outside `p`; `D` of their sum is the smallest open set containing `p`.
    pub fn minimal_neighborhood(&self, p: PrimeIdeal) -> Result<GenSet> {
        self.require(p)?;
        Ok(GenSet::full(self.generators.len()).difference(p.0))
    }

    /// `D(f)` for any `f` with the given support.
    pub fn open_subset(&self, support: GenSet) -> Vec<PrimeIdeal> {
        self.primes.iter().copied().filter(|p| p.0.is_disjoint(support)).collect()
    }

    /// `Spec• M`, everything but `M_+`.
    pub fn punctured(&self) -> Vec<PrimeIdeal> {
        let top = self.top();
        self.primes.iter().copied().filter(|&p| p != top).collect()
    }

    /// The primes of height at most `h`.
    pub fn height_locus(&self, h: usize) -> Vec<PrimeIdeal> {
        let heights = self.heights();
        self.primes.iter().zip(heights).filter(|(_, ph)| *ph <= h).map(|(p, _)| *p).collect()
    }

    /// Checks that `open` lists primes of this spectrum and is closed under
    /// passing to smaller primes. Returns it sorted and deduplicated.
    pub fn check_open(&self, open: &[PrimeIdeal]) -> Result<Vec<PrimeIdeal>> {
        let set: BTreeSet<PrimeIdeal> = open.iter().copied().collect();
        for &p in &set {
            self.require(p)?;
            if self.primes.iter().any(|q| q.0.is_subset(p.0) && !set.contains(q)) {
                return Err(Error::NotOpen);
            }
        }
        Ok(set.into_iter().collect())
    }

    /// One support per maximal prime of `open`, its minimal neighborhood.
    /// Sorted lexicographically by index list.
    pub fn minimal_cover(&self, open: &[PrimeIdeal]) -> Result<Vec<GenSet>> {
        let open = self.check_open(open)?;
        let full = GenSet::full(self.generators.len());
        let mut cover: Vec<GenSet> = open
            .iter()
            .filter(|p| !open.iter().any(|q| q != *p && p.0.is_subset(q.0)))
            .map(|p| full.difference(p.0))
            .collect();
        cover.sort_by(|a, b| a.iter().cmp(b.iter()));
        Ok(cover)
    }

    /// The nerve of `{D(S_i)}` on the vertices `1..=k`: an index set is a face
    /// when some prime avoids all of its supports.
    pub fn nerve(&self, cover: &[GenSet]) -> SimplicialComplex {
        let nonempty = |s: GenSet| self.primes.iter().any(|p| p.0.is_disjoint(s));
        let mut maximal = Vec::new();
        let mut stack: Vec<(Vec<u32>, GenSet, usize)> = vec![(Vec::new(), GenSet::EMPTY, 0)];
        while let Some((chosen, union, next)) = stack.pop() {
            let mut grew = false;
            for (i, s) in cover.iter().enumerate().skip(next) {
                let u = union.union(*s);
                if nonempty(u) {
                    let mut c = chosen.clone();
                    c.push(i as u32 + 1);
                    stack.push((c, u, i + 1));
                    grew = true;
                }
            }
            if !grew {
                maximal.push(Face::new(chosen));
            }
        }
        SimplicialComplex::from_facets(maximal)
    }

    /// Connected components of the comparability graph of an open set.
    pub fn connected_components(&self, open: &[PrimeIdeal]) -> Result<usize> {
        let open = self.check_open(open)?;
        let mut parent: Vec<usize> = (0..open.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..open.len() {
            for j in 0..i {
                if open[i].0.is_subset(open[j].0) || open[j].0.is_subset(open[i].0) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        Ok((0..open.len()).filter(|&i| find(&mut parent, i) == i).count())
    }

    /// Covering relations `(i, j)` of the inclusion order, as indices into
    /// [`Self::primes`] with `primes[i] ⊊ primes[j]` and nothing in between.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let ps = &self.primes;
        let below = |a: usize, b: usize| a != b && ps[a].0.is_subset(ps[b].0);
        let mut edges = Vec::new();
        for j in 0..ps.len() {
            for i in 0..ps.len() {
                if below(i, j) && !(0..ps.len()).any(|k| below(i, k) && below(k, j)) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// The Hasse diagram in DOT syntax, smaller primes at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph spec {\n  rankdir=BT;\n");
        for (i, p) in self.primes.iter().enumerate() {
            let _ = writeln!(out, "  p{i} [label=\"{}\"];", self.label(*p));
        }
        for (i, j) in self.cover_edges() {
            let _ = writeln!(out, "  p{i} -> p{j};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for SpecPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.label(*p))?;
        }
        Ok(())
    }
}

/// The prime `⟨x_i : v_i ∉ F⟩` of the simplicial binoid of `complex` that
/// corresponds to the face `F`. Generators follow the sorted vertex order.
pub fn prime_of_face(complex: &SimplicialComplex, face: &Face) -> Result<PrimeIdeal> {
    if !complex.contains(face) {
        return Err(Error::NotAFace);
    }
    let vs = complex.vertices();
    Ok(PrimeIdeal(GenSet::from_indices((0..vs.len()).filter(|&i| !face.contains(vs[i])))))
}

/// The face of `complex` whose vertices are the generators outside `p`.
pub fn face_of_prime(complex: &SimplicialComplex, p: PrimeIdeal) -> Face {
    let vs = complex.vertices();
    Face::new((0..vs.len()).filter(|&i| !p.0.contains(i)).map(|i| vs[i]))
}

/// The face spanned by the generators in `s`.
pub fn face_of_support(complex: &SimplicialComplex, s: GenSet) -> Face {
    let vs = complex.vertices();
    Face::new(s.iter().map(|i| vs[i]))
}
