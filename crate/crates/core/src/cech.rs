//! Čech complexes of the sheaf of units on punctured spectra and open subsets.
//!
//! For a simplicial binoid `M_Δ` the units of the localization at a face `F`
//! are `ℤ^F`, and the Čech complex of the coordinate cover splits into one
//! complex per vertex. Its cohomology is
//!
//! ```text
//! H^j(Spec• M_Δ, O*) = ⊕_v H̃^{j-1}(lk_Δ(v); ℤ).
//! ```
//!
//! For a general integral, torsion-free, cancellative binoid the unit groups
//! of the localizations are sublattices of the difference group `Γ` and the
//! complex is assembled from their inclusions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::binoid::{BinoidPresentation, DifferenceGroup};
use crate::divisors::cone_facets;
use crate::error::{Error, Result};
use crate::exactalg::{cochain_cohomology, column_basis, FinAbGroup, GroupExpr, IntMatrix, IntegerSolver};
use crate::simplicial::{Face, SimplicialComplex};
use crate::spectrum::{face_of_support, GenSet, PrimeIdeal, SpecPoset};

/// One basis vector of a Čech cochain group: a coordinate of the group
/// attached to a cell (a face, or a set of 1-based cover indices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CechLabel {
    pub cell: Face,
    pub coordinate: u32,
}

/// Free groups `ℤ^{labels[j]}` in degrees `0, 1, …` and the differentials
/// between consecutive ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechComplex {
    pub labels: Vec<Vec<CechLabel>>,
    pub differentials: Vec<IntMatrix>,
}

impl CechComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn cohomology(&self) -> Result<Vec<FinAbGroup>> {
        cochain_cohomology(&self.ranks(), &self.differentials)
    }

    /// Builds the complex from cells per degree, the coordinates of each cell
    /// and the block between a cell and a codimension-one subcell.
    fn assemble(
        cells: &[Vec<Face>],
        coordinates: impl Fn(&Face) -> Vec<u32>,
        mut block: impl FnMut(&Face, &Face, &[u32], &[u32]) -> IntMatrix,
    ) -> Self {
        let labels: Vec<Vec<CechLabel>> = cells
            .iter()
            .map(|cs| {
                cs.iter()
                    .flat_map(|c| {
                        coordinates(c).into_iter().map(|coordinate| CechLabel { cell: c.clone(), coordinate })
                    })
                    .collect()
            })
            .collect();
        // Offset of each cell's coordinates within its degree.
        let offsets: Vec<Vec<usize>> = cells
            .iter()
            .map(|cs| {
                cs.iter()
                    .scan(0, |acc, c| {
                        let start = *acc;
                        *acc += coordinates(c).len();
                        Some(start)
                    })
                    .collect()
            })
            .collect();
        let mut differentials = Vec::new();
        for j in 0..cells.len().saturating_sub(1) {
            let mut d = IntMatrix::zeros(labels[j + 1].len(), labels[j].len());
            for (gi, g) in cells[j + 1].iter().enumerate() {
                let g_coords = coordinates(g);
                for l in 0..g.len() {
                    let f = g.without_position(l);
                    let fi = cells[j].binary_search(&f).expect("cells are closed under subsets");
                    let b = block(g, &f, &g_coords, &coordinates(&f));
                    let sign = if l % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            if !b[(r, c)].is_zero() {
                                d[(offsets[j + 1][gi] + r, offsets[j][fi] + c)] = &sign * &b[(r, c)];
                            }
                        }
                    }
                }
            }
            differentials.push(d);
        }
        CechComplex { labels, differentials }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Matrix of the coordinate inclusion `ℤ^{small} → ℤ^{big}`.
fn coordinate_inclusion(big: &[u32], small: &[u32]) -> IntMatrix {
    let mut m = IntMatrix::zeros(big.len(), small.len());
    for (c, v) in small.iter().enumerate() {
        let r = big.binary_search(v).expect("coordinates are nested");
        m[(r, c)] = BigInt::from(1);
    }
    m
}

/// Nonempty faces of `complex`, grouped by dimension `0, 1, …`.
fn cells_of(complex: &SimplicialComplex) -> Vec<Vec<Face>> {
    (0..=complex.dimension()).map(|d| complex.faces(d).to_vec()).collect()
}

/// The Čech complex of the units on the coordinate cover of `Spec• M_Δ`:
/// one `ℤ` per pair `(F, v)` with `v ∈ F`.
pub fn picard_complex_simplicial(complex: &SimplicialComplex) -> Result<CechComplex> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(CechComplex::assemble(
        &cells_of(complex),
        |f| f.vertices().to_vec(),
        |_, _, big, small| coordinate_inclusion(big, small),
    ))
}

/// `H^j = ⊕_v H̃^{j-1}(lk_Δ(v); ℤ)` for `j = 0, …, dim Δ`.
pub fn local_picard_formula(complex: &SimplicialComplex) -> Result<Vec<FinAbGroup>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let dim = complex.dimension();
    let mut out = vec![FinAbGroup::trivial(); (dim + 1).max(0) as usize];
    for &v in complex.vertices() {
        let h = complex.link(&Face::from([v]))?.cohomology(true)?;
        for (j, slot) in out.iter_mut().enumerate() {
            if let Some(g) = h.get(j as isize - 1) {
                *slot = slot.direct_sum(g);
            }
        }
    }
    Ok(out)
}

/// Cohomology of [`picard_complex_simplicial`].
pub fn local_picard_cech(complex: &SimplicialComplex) -> Result<Vec<FinAbGroup>> {
    picard_complex_simplicial(complex)?.cohomology()
}

/// Cohomology of the constant sheaf `ℤ` on the punctured spectrum of `M_Δ`,
/// which is the simplicial cohomology of `Δ`.
pub fn constant_cohomology(complex: &SimplicialComplex) -> Result<Vec<FinAbGroup>> {
    Ok(complex.cohomology(false)?.groups)
}

/// Cohomology of the constant sheaf `ℤ` on an open set, computed on the
/// nerve of its minimal cover.
pub fn constant_cohomology_open(spec: &SpecPoset, open: &[PrimeIdeal]) -> Result<Vec<FinAbGroup>> {
    let cover = spec.minimal_cover(open)?;
    if cover.is_empty() {
        return Ok(Vec::new());
    }
    Ok(spec.nerve(&cover).cohomology(false)?.groups)
}

/// The Čech complex of the units of `M_Δ` on the minimal cover `{D(F_i)}` of
/// an open set. Its nerve is the crosscut complex of the faces `F_i`; the
/// cell `J` carries `ℤ^{∪_{j∈J} F_j}`.
pub fn pic_open_complex(complex: &SimplicialComplex, open: &[PrimeIdeal]) -> Result<CechComplex> {
    let m = BinoidPresentation::from_simplicial(complex)?;
    let spec = SpecPoset::compute(&m)?;
    let cover: Vec<Face> = spec.minimal_cover(open)?.into_iter().map(|s| face_of_support(complex, s)).collect();
    let crosscut = complex.crosscut(&cover)?;
    let union = |cell: &Face| -> Vec<u32> {
        cell.vertices().iter().fold(Face::empty(), |acc, &i| acc.union(&cover[i as usize - 1])).vertices().to_vec()
    };
    Ok(CechComplex::assemble(&cells_of(&crosscut), union, |_, _, big, small| coordinate_inclusion(big, small)))
}

/// `H^j(U, O*)` for an open subset `U` of `Spec M_Δ`.
pub fn pic_open_subset(complex: &SimplicialComplex, open: &[PrimeIdeal]) -> Result<Vec<FinAbGroup>> {
    pic_open_complex(complex, open)?.cohomology()
}

/// One degree of `H^j(Spec• K[Δ], O*) = H^j(Δ; K*) ⊕ ⊕_v H̃^{j-1}(lk v; ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrTerm {
    pub units: GroupExpr,
    pub picard: FinAbGroup,
}

impl SrTerm {
    pub fn is_trivial(&self) -> bool {
        self.units.is_trivial() && self.picard.is_trivial()
    }
}

impl fmt::Display for SrTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.units.is_trivial(), self.picard.is_trivial()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.units),
            (true, false) => write!(f, "{}", self.picard),
            (false, false) => write!(f, "{} ⊕ {}", self.units, self.picard),
        }
    }
}

/// Unit-sheaf cohomology of the punctured spectrum of a Stanley-Reisner ring,
/// with the field's unit group kept as the symbol `symbol`.
pub fn stanley_reisner_cohomology(complex: &SimplicialComplex, symbol: &str) -> Result<Vec<SrTerm>> {
    let units = complex.cohomology_with_coefficients(symbol, false)?;
    let picard = local_picard_formula(complex)?;
    Ok(units.groups.into_iter().zip(picard).map(|(units, picard)| SrTerm { units, picard }).collect())
}

/// The unit group of a localization `M_F`, as a sublattice of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSubgroup {
    pub support: GenSet,
    /// Generators shown to be units by an explicit witness.
    pub unit_generators: GenSet,
    /// Columns form a basis of the span of the unit generators, in `Γ`-coordinates.
    pub basis: IntMatrix,
    /// Every generator was either shown to be a unit or certified not to be one.
    pub complete: bool,
}

impl UnitSubgroup {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }
}

/// Shared data for unit searches on one presentation.
struct UnitSearch {
    group: DifferenceGroup,
    spec: SpecPoset,
    /// A linear form on `Γ` that is positive on every generator.
    functional: Vec<BigInt>,
    /// The form evaluated at each generator.
    weights: Vec<BigInt>,
}

impl UnitSearch {
    fn new(m: &BinoidPresentation) -> Result<Self> {
        let group = m.difference_group()?;
        let spec = SpecPoset::compute(m)?;
        let normals = cone_facets(&group)?;
        let functional: Vec<BigInt> = (0..group.rank).map(|i| normals.iter().map(|u| &u[i]).sum()).collect();
        let weights = (0..m.generator_count()).map(|j| dot(&group.image(j), &functional)).collect();
        Ok(UnitSearch { group, spec, functional, weights })
    }

    /// Searches `a ∈ ℕ^n` with `A·a = target`, using `w(A·a) = w(target)` to
    /// bound every coordinate.
    fn representable(&self, target: &[BigInt]) -> bool {
        let budget = dot(target, &self.functional);
        if budget.is_negative() {
            return false;
        }
        let mut residual = target.to_vec();
        self.search(0, &budget, &mut residual)
    }

    fn search(&self, j: usize, budget: &BigInt, residual: &mut Vec<BigInt>) -> bool {
        if budget.is_zero() || j == self.weights.len() {
            return budget.is_zero() && residual.iter().all(Zero::is_zero);
        }
        let image = self.group.image(j);
        let max = budget / &self.weights[j];
        let mut k = BigInt::zero();
        let mut remaining = budget.clone();
        loop {
            if self.search(j + 1, &remaining, residual) {
                return true;
            }
            if k >= max {
                break;
            }
            k += 1;
            remaining -= &self.weights[j];
            for (r, x) in residual.iter_mut().zip(&image) {
                *r -= x;
            }
        }
        // Restore the residual.
        for (r, x) in residual.iter_mut().zip(&image) {
            *r += x * &k;
        }
        false
    }

    fn units(&self, support: GenSet, bound: u32) -> Result<UnitSubgroup> {
        let disjoint = self.spec.open_subset(support);
        if disjoint.is_empty() {
            return Err(Error::DegenerateLocalization);
        }
        // The largest prime avoiding F; exactly its generators stay non-units in M_F.
        let largest = disjoint.iter().fold(GenSet::EMPTY, |acc, p| acc.union(p.0));
        let n = self.weights.len();
        let r = self.group.rank;
        let f: Vec<BigInt> = (0..r).map(|a| support.iter().map(|j| &self.group.images[(a, j)]).sum()).collect();
        let mut units = GenSet::EMPTY;
        for i in (0..n).filter(|&i| !largest.contains(i)) {
            let image = self.group.image(i);
            // x_i + y = m·f for some y ∈ M makes x_i invertible in M_F.
            let witnessed = (1..=bound).any(|mult| {
                let target: Vec<BigInt> = f.iter().zip(&image).map(|(a, b)| a * mult - b).collect();
                self.representable(&target)
            });
            if witnessed {
                units = units.union(GenSet::singleton(i));
            }
        }
        let complete = units.union(largest) == GenSet::full(n);
        let columns: Vec<Vec<BigInt>> = units.iter().map(|j| self.group.image(j)).collect();
        let basis = column_basis(&IntMatrix::from_columns(r, &columns));
        Ok(UnitSubgroup { support, unit_generators: units, basis, complete })
    }
}

/// Units of `M_F` for the support `F`, searching witnesses `x_i + y = m·f`
/// with `m ≤ bound`. Generators inside the largest prime avoiding `F` are
/// certified non-units.
pub fn units_of_localization(m: &BinoidPresentation, support: GenSet, bound: u32) -> Result<UnitSubgroup> {
    UnitSearch::new(m)?.units(support, bound)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPicard {
    /// Supports of the minimal cover of `Spec• M`, one per maximal prime.
    pub cover: Vec<GenSet>,
    pub units: Vec<Vec<UnitSubgroup>>,
    pub complex: CechComplex,
    pub cohomology: Vec<FinAbGroup>,
    pub complete: bool,
}

/// Čech cohomology of the units on the minimal cover of `Spec• M` for an
/// integral, torsion-free, cancellative, positive presentation.
pub fn local_picard_general(m: &BinoidPresentation, bound: u32) -> Result<GeneralPicard> {
    let search = UnitSearch::new(m)?;
    let cover = search.spec.minimal_cover(&search.spec.punctured())?;
    let nerve = search.spec.nerve(&cover);
    let cells = if cover.is_empty() { Vec::new() } else { cells_of(&nerve) };
    let support = |cell: &Face| cell.vertices().iter().fold(GenSet::EMPTY, |acc, &i| acc.union(cover[i as usize - 1]));
    let mut units: Vec<Vec<UnitSubgroup>> = Vec::new();
    for cs in &cells {
        units.push(cs.iter().map(|c| search.units(support(c), bound)).collect::<Result<_>>()?);
    }
    let complete = units.iter().flatten().all(|u| u.complete);
    let lookup = |cell: &Face| -> &UnitSubgroup {
        let d = cell.len() - 1;
        &units[d][cells[d].binary_search(cell).expect("cell")]
    };
    let complex = CechComplex::assemble(
        &cells,
        |c| (0..lookup(c).rank() as u32).collect(),
        |big, small, _, _| {
            let (b, s) = (lookup(big), lookup(small));
            let solver = IntegerSolver::new(&b.basis);
            let columns: Vec<Vec<BigInt>> = (0..s.rank())
                .map(|c| solver.solve(&s.basis.column(c)).expect("unit groups grow under inclusion"))
                .collect();
            IntMatrix::from_columns(b.rank(), &columns)
        },
    );
    let cohomology = complex.cohomology()?;
    Ok(GeneralPicard { cover, units, complex, cohomology, complete })
}

/// Whether the `1 + N` part of the unit sheaf was determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnipotentPart {
    /// The radical complex has dimension at most 0, so the cover has no
    /// overlaps and all higher Čech groups vanish.
    Vanishes,
    NotComputed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialReport {
    pub radical: SimplicialComplex,
    pub is_radical: bool,
    pub reduced_parts: Vec<SrTerm>,
    /// `H^1(Δ; K*)` or `Pic^loc(M_Δ)` is nontrivial, so `Pic^loc` of the
    /// monomial algebra is nontrivial.
    pub nonvanishing_h1: bool,
    pub unipotent_part: UnipotentPart,
    /// `Some` when triviality of `Pic^loc` is decided.
    pub pic_loc_trivial: Option<bool>,
}

/// What can be said about the units of `K[x]/I` for a monomial presentation.
pub fn monomial_report(m: &BinoidPresentation, symbol: &str) -> Result<MonomialReport> {
    let radical = m.radical_complex()?;
    let relations = m.relations();
    // I is radical when every squarefree support monomial lies in I.
    let is_radical = relations.iter().all(|r| {
        relations.iter().any(|s| s.lhs.iter().zip(&r.lhs).all(|(&a, &b)| if b > 0 { a <= 1 } else { a == 0 }))
    });
    let reduced_parts = stanley_reisner_cohomology(&radical, symbol)?;
    let nonvanishing_h1 = reduced_parts.get(1).is_some_and(|t| !t.is_trivial());
    let small = radical.dimension() <= 0;
    let unipotent_part = if small { UnipotentPart::Vanishes } else { UnipotentPart::NotComputed };
    let pic_loc_trivial = if small || is_radical {
        Some(!nonvanishing_h1)
    } else if nonvanishing_h1 {
        Some(false)
    } else {
        None
    };
    Ok(MonomialReport { radical, is_radical, reduced_parts, nonvanishing_h1, unipotent_part, pic_loc_trivial })
}
