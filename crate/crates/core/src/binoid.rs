//! Finitely presented commutative binoids.
//!
//! A presentation has named generators `x_1, …, x_n` and relations between
//! exponent vectors, `a = b` or `a = ∞`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{smith_normal_form, IntMatrix};
use crate::simplicial::{Face, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelationRhs {
    Element(Vec<u32>),
    Infinity,
}

/// `lhs = rhs`, both sides as exponent vectors over the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Vec<u32>,
    pub rhs: RelationRhs,
}

impl Relation {
    pub fn element(lhs: impl Into<Vec<u32>>, rhs: impl Into<Vec<u32>>) -> Self {
        Relation { lhs: lhs.into(), rhs: RelationRhs::Element(rhs.into()) }
    }

    pub fn infinity(lhs: impl Into<Vec<u32>>) -> Self {
        Relation { lhs: lhs.into(), rhs: RelationRhs::Infinity }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self.rhs, RelationRhs::Infinity)
    }
}

/// Indices of the nonzero entries of an exponent vector.
pub(crate) fn support(v: &[u32]) -> impl Iterator<Item = usize> + '_ {
    v.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinoidPresentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl BinoidPresentation {
    /// Checks that every exponent vector has one entry per generator, that
    /// generator names are distinct and that no element relation is trivial.
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let n = generators.len();
        let names: BTreeSet<&str> = generators.iter().map(String::as_str).collect();
        if names.len() != n {
            return Err(Error::InvalidPresentation("duplicate generator name".into()));
        }
        for (k, r) in relations.iter().enumerate() {
            let lens_ok = r.lhs.len() == n
                && match &r.rhs {
                    RelationRhs::Element(rhs) => rhs.len() == n,
                    RelationRhs::Infinity => true,
                };
            if !lens_ok {
                return Err(Error::InvalidPresentation(format!(
                    "relation {} does not have one exponent per generator",
                    k + 1
                )));
            }
            if let RelationRhs::Element(rhs) = &r.rhs {
                if *rhs == r.lhs {
                    return Err(Error::InvalidPresentation(format!("relation {} is trivial", k + 1)));
                }
            }
        }
        Ok(BinoidPresentation { generators, relations })
    }

    /// The free binoid on `x1, …, xn`.
    pub fn free(n: usize) -> Self {
        BinoidPresentation { generators: (1..=n).map(|i| format!("x{i}")).collect(), relations: Vec::new() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn has_infinity_relation(&self) -> bool {
        self.relations.iter().any(Relation::is_infinity)
    }

    /// The simplicial binoid of a complex: one generator `x{v}` per vertex and
    /// one relation `Σ_{i∈N} x_i = ∞` per minimal non-face `N`.
    pub fn from_simplicial(complex: &SimplicialComplex) -> Result<Self> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        let vertices = complex.vertices();
        let relations = complex
            .minimal_nonfaces()
            .iter()
            .map(|nf| Relation::infinity(vertices.iter().map(|v| u32::from(nf.contains(*v))).collect::<Vec<_>>()))
            .collect();
        Ok(BinoidPresentation { generators: vertices.iter().map(|v| format!("x{v}")).collect(), relations })
    }

    /// The complex of a simplicial presentation, on the vertices `1..=n`
    /// (generator `i` becomes vertex `i + 1`).
    pub fn as_simplicial(&self) -> Result<SimplicialComplex> {
        let mut nonfaces = Vec::new();
        for r in &self.relations {
            if !r.is_infinity() || r.lhs.iter().any(|&e| e > 1) || r.lhs.iter().all(|&e| e == 0) {
                return Err(Error::NotSimplicialPresentation);
            }
            nonfaces.push(Face::new(support(&r.lhs).map(|i| i as u32 + 1)));
        }
        Ok(self.complex_from_nonfaces(&nonfaces))
    }

    /// The complex of the radical of a monomial presentation: every
    /// `∞`-relation is replaced by the squarefree monomial on its support.
    pub fn radical_complex(&self) -> Result<SimplicialComplex> {
        let mut nonfaces = Vec::new();
        for r in &self.relations {
            if !r.is_infinity() || r.lhs.iter().all(|&e| e == 0) {
                return Err(Error::NotMonomialPresentation);
            }
            nonfaces.push(Face::new(support(&r.lhs).map(|i| i as u32 + 1)));
        }
        Ok(self.complex_from_nonfaces(&nonfaces))
    }

    fn complex_from_nonfaces(&self, nonfaces: &[Face]) -> SimplicialComplex {
        let vertices: Vec<u32> = (1..=self.generators.len() as u32).collect();
        if vertices.is_empty() {
            return SimplicialComplex::empty();
        }
        SimplicialComplex::from_nonfaces(&vertices, nonfaces)
    }

    /// `M ∧ (ℕ^k)^∞`: `k` new free generators, no new relations.
    pub fn smash_free(&self, k: usize) -> Self {
        let mut generators = self.generators.clone();
        for i in 1..=k {
            let mut name = if k == 1 { String::from("t") } else { format!("t{i}") };
            while generators.contains(&name) {
                name.push('\'');
            }
            generators.push(name);
        }
        let n = generators.len();
        let pad = |v: &Vec<u32>| {
            let mut v = v.clone();
            v.resize(n, 0);
            v
        };
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                lhs: pad(&r.lhs),
                rhs: match &r.rhs {
                    RelationRhs::Element(rhs) => RelationRhs::Element(pad(rhs)),
                    RelationRhs::Infinity => RelationRhs::Infinity,
                },
            })
            .collect();
        BinoidPresentation { generators, relations }
    }

    /// The relation lattice: one row `lhs − rhs` per element relation.
    pub fn relation_lattice(&self) -> Result<IntMatrix> {
        let n = self.generators.len();
        let mut rows = Vec::new();
        for r in &self.relations {
            let RelationRhs::Element(rhs) = &r.rhs else {
                return Err(Error::NotIntegral);
            };
            rows.extend((0..n).map(|i| BigInt::from(r.lhs[i]) - BigInt::from(rhs[i])));
        }
        Ok(IntMatrix::from_vec(rows.len() / n.max(1), n, rows))
    }

    /// `Γ`, the group completion of `M ∖ {∞}`, with the generator images in
    /// coordinates chosen from the Smith form of the relation lattice.
    pub fn difference_group(&self) -> Result<DifferenceGroup> {
        let lattice = self.relation_lattice()?;
        let n = self.generators.len();
        let smith = smith_normal_form(&lattice);
        let diagonal = smith.diagonal();
        if diagonal.iter().any(|d| !d.is_zero() && !d.is_one()) {
            return Err(Error::Torsion);
        }
        let k = smith.rank();
        // With U·R·V = S and unit pivots, x ↦ (x·V)_{k..n} identifies ℤ^n / rowspace(R) with ℤ^{n−k}.
        let images = IntMatrix::from_fn(n - k, n, |a, j| smith.v[(j, k + a)].clone());
        Ok(DifferenceGroup { rank: n - k, images, relation_lattice: lattice })
    }
}

impl fmt::Display for BinoidPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |v: &[u32]| -> String {
            let parts: Vec<String> = v
                .iter()
                .zip(&self.generators)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| if *e == 1 { g.clone() } else { format!("{e}{g}") })
                .collect();
            if parts.is_empty() {
                String::from("0")
            } else {
                parts.join("+")
            }
        };
        write!(f, "({}", self.generators.join(","))?;
        for (k, r) in self.relations.iter().enumerate() {
            f.write_str(if k == 0 { " | " } else { ", " })?;
            let rhs = match &r.rhs {
                RelationRhs::Element(v) => term(v),
                RelationRhs::Infinity => String::from("∞"),
            };
            write!(f, "{}={}", term(&r.lhs), rhs)?;
        }
        f.write_str(")")
    }
}

/// `Γ ≅ ℤ^rank`, with column `j` of `images` the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceGroup {
    pub rank: usize,
    pub images: IntMatrix,
    pub relation_lattice: IntMatrix,
}

impl DifferenceGroup {
    pub fn image(&self, generator: usize) -> Vec<BigInt> {
        self.images.column(generator)
    }

    /// The image of the element `Σ e_j x_j`.
    pub fn image_of(&self, exponents: &[u32]) -> Vec<BigInt> {
        let v: Vec<BigInt> = exponents.iter().map(|&e| BigInt::from(e)).collect();
        self.images.mul_vec(&v).expect("one exponent per generator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn names(s: &str) -> Vec<String> {
        s.split_whitespace().map(ToString::to_string).collect()
    }

    fn x_plus_y_eq_nz(n: u32) -> BinoidPresentation {
        BinoidPresentation::new(names("x y z"), vec![Relation::element([1, 1, 0], [0, 0, n])]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            BinoidPresentation::new(names("x y"), vec![Relation::element([1], [0, 1])]),
            Err(Error::InvalidPresentation(_))
        ));
        assert!(matches!(
            BinoidPresentation::new(names("x y"), vec![Relation::element([1, 1], [1, 1])]),
            Err(Error::InvalidPresentation(_))
        ));
        assert!(matches!(BinoidPresentation::new(names("x x"), vec![]), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn simplicial_presentations() {
        let triangle = SimplicialComplex::from_facets([[1, 2], [1, 3], [2, 3]]);
        let m = BinoidPresentation::from_simplicial(&triangle).unwrap();
        assert_eq!(m.generators(), names("x1 x2 x3"));
        assert_eq!(m.relations(), [Relation::infinity([1, 1, 1])]);
        assert_eq!(m.as_simplicial().unwrap(), triangle);

        let favorite = SimplicialComplex::from_facets([Face::from([1, 2, 3]), Face::from([3, 4])]);
        let m = BinoidPresentation::from_simplicial(&favorite).unwrap();
        assert_eq!(m.relations(), [Relation::infinity([1, 0, 0, 1]), Relation::infinity([0, 1, 0, 1])]);

        assert!(BinoidPresentation::from_simplicial(&SimplicialComplex::simplex(3)).unwrap().relations().is_empty());
        assert_eq!(BinoidPresentation::free(3).as_simplicial().unwrap(), SimplicialComplex::simplex(3));
        assert_eq!(BinoidPresentation::from_simplicial(&SimplicialComplex::void()), Err(Error::VoidComplex));
    }

    #[test]
    fn non_simplicial_presentations() {
        let m = BinoidPresentation::new(names("x y z"), vec![Relation::infinity([1, 1, 2])]).unwrap();
        assert_eq!(m.as_simplicial(), Err(Error::NotSimplicialPresentation));
        assert_eq!(x_plus_y_eq_nz(2).as_simplicial(), Err(Error::NotSimplicialPresentation));
        assert_eq!(x_plus_y_eq_nz(2).radical_complex(), Err(Error::NotMonomialPresentation));
    }

    #[test]
    fn non_minimal_relations_are_accepted() {
        let m =
            BinoidPresentation::new(names("x y z"), vec![Relation::infinity([1, 1, 1]), Relation::infinity([1, 1, 0])])
                .unwrap();
        assert_eq!(m.as_simplicial().unwrap().facets(), [Face::from([1, 3]), Face::from([2, 3])]);
    }

    #[test]
    fn radicals() {
        let triangle = SimplicialComplex::from_facets([[1, 2], [1, 3], [2, 3]]);
        let m = BinoidPresentation::new(names("x y z"), vec![Relation::infinity([1, 1, 2])]).unwrap();
        assert_eq!(m.radical_complex().unwrap(), triangle);
        let m =
            BinoidPresentation::new(names("x y z"), vec![Relation::infinity([2, 1, 3]), Relation::infinity([1, 2, 2])])
                .unwrap();
        assert_eq!(m.radical_complex().unwrap(), triangle);
    }

    #[test]
    fn smash_with_free_generators() {
        let m = x_plus_y_eq_nz(3).smash_free(1);
        assert_eq!(m.generators(), names("x y z t"));
        assert_eq!(m.relations(), [Relation::element([1, 1, 0, 0], [0, 0, 3, 0])]);
        assert_eq!(x_plus_y_eq_nz(3).smash_free(0), x_plus_y_eq_nz(3));
        assert_eq!(BinoidPresentation::free(2).smash_free(2).relations(), []);
        assert_eq!(BinoidPresentation::free(2).smash_free(2).generator_count(), 4);
    }

    #[test]
    fn difference_groups() {
        for n in 1..=5 {
            let g = x_plus_y_eq_nz(n).difference_group().unwrap();
            assert_eq!(g.rank, 2);
            assert_eq!(g.image_of(&[1, 1, 0]), g.image_of(&[0, 0, n]));
        }
        let free = BinoidPresentation::free(3).difference_group().unwrap();
        assert_eq!(free.rank, 3);
        assert_eq!(free.images, IntMatrix::identity(3));
        let xyzw =
            BinoidPresentation::new(names("x y z w"), vec![Relation::element([1, 1, 0, 0], [0, 0, 1, 1])]).unwrap();
        assert_eq!(xyzw.difference_group().unwrap().rank, 3);
        let torsion = BinoidPresentation::new(names("x y"), vec![Relation::element([2, 0], [0, 2])]).unwrap();
        assert_eq!(torsion.difference_group(), Err(Error::Torsion));
        let m = BinoidPresentation::new(names("x y"), vec![Relation::infinity([1, 1])]).unwrap();
        assert_eq!(m.difference_group(), Err(Error::NotIntegral));
    }

    #[test]
    fn display() {
        assert_eq!(x_plus_y_eq_nz(2).to_string(), "(x,y,z | x+y=2z)");
        assert_eq!(BinoidPresentation::free(2).to_string(), "(x1,x2)");
    }
}
