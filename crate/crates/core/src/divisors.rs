//! Weil divisors of integral, torsion-free, cancellative, positive binoids.
//!
//! The height-one primes correspond to the facets of the cone spanned by the
//! generators in `Γ ⊗ ℚ`. The valuation at a height-one prime is the
//! primitive inner facet normal, and the class group is the cokernel of
//! `Γ → ℤ^{height-one primes}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binoid::{BinoidPresentation, DifferenceGroup};
use crate::error::{Error, Result};
use crate::exactalg::{cokernel, rank, smith_normal_form, FinAbGroup, IntMatrix};
use crate::spectrum::{GenSet, PrimeIdeal, SpecPoset};

/// All `k`-element subsets of `0..n`, lexicographically.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Primitive inner normals of the facets of the cone spanned by the generator
/// images, sorted.
///
/// Every facet is spanned by generators, so each one shows up as the kernel of
/// some `(r−1)`-subset of generator images of rank `r−1`; candidates that take
/// both signs on the generators are not supporting and are discarded.
pub fn cone_facets(group: &DifferenceGroup) -> Result<Vec<Vec<BigInt>>> {
    let r = group.rank;
    let n = group.images.cols();
    if rank(&group.images) < r {
        return Err(Error::NotFullDimensional);
    }
    let gens: Vec<Vec<BigInt>> = (0..n).map(|j| group.image(j)).collect();
    let mut normals = BTreeSet::new();
    if r > 0 {
        for subset in subsets(n, r - 1) {
            let rows: Vec<&[BigInt]> = subset.iter().map(|&j| gens[j].as_slice()).collect();
            let t = IntMatrix::from_fn(r - 1, r, |i, k| rows[i][k].clone());
            let smith = smith_normal_form(&t);
            if smith.rank() != r - 1 {
                continue;
            }
            // Columns of V past the rank span the kernel; V is unimodular, so the column is primitive.
            let mut normal = smith.v.column(r - 1);
            let values: Vec<BigInt> = gens.iter().map(|g| dot(&normal, g)).collect();
            if values.iter().all(|v| !v.is_positive()) {
                normal.iter_mut().for_each(|x| *x = -core::mem::take(x));
            } else if values.iter().any(|v| v.is_negative()) {
                continue;
            }
            normals.insert(normal);
        }
    }
    let normals: Vec<Vec<BigInt>> = normals.into_iter().collect();
    // Pointed with no generator at the origin: some facet is positive on each generator.
    for g in &gens {
        if !normals.iter().any(|u| dot(u, g).is_positive()) {
            return Err(Error::NotPointed);
        }
    }
    Ok(normals)
}

/// Rows are height-one primes in spectrum order, columns are generators;
/// entry `(p, j)` is `v_p(x_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationMatrix {
    pub primes: Vec<PrimeIdeal>,
    pub normals: Vec<Vec<BigInt>>,
    pub values: IntMatrix,
    pub group: DifferenceGroup,
}

/// Matches every cone facet to the height-one prime generated by the
/// generators on which its valuation is positive.
pub fn valuation_matrix(m: &BinoidPresentation) -> Result<ValuationMatrix> {
    let group = m.difference_group()?;
    let spec = SpecPoset::compute(m)?;
    let normals = cone_facets(&group)?;
    let n = m.generator_count();
    let height_one: Vec<PrimeIdeal> =
        spec.primes().iter().zip(spec.heights()).filter(|(_, h)| *h == 1).map(|(p, _)| *p).collect();
    if height_one.len() != normals.len() {
        return Err(Error::FacetPrimeMismatch);
    }
    let mut rows: Vec<Option<(Vec<BigInt>, Vec<BigInt>)>> = (0..height_one.len()).map(|_| None).collect();
    for normal in normals {
        let values: Vec<BigInt> = (0..n).map(|j| dot(&normal, &group.image(j))).collect();
        let positive = GenSet::from_indices((0..n).filter(|&j| values[j].is_positive()));
        let slot = height_one.iter().position(|p| p.0 == positive).ok_or(Error::FacetPrimeMismatch)?;
        if rows[slot].is_some() {
            return Err(Error::FacetPrimeMismatch);
        }
        rows[slot] = Some((normal, values));
    }
    let (normals, values): (Vec<_>, Vec<_>) = rows.into_iter().map(|r| r.expect("bijection")).unzip();
    let values = IntMatrix::from_fn(values.len(), n, |i, j| values[i][j].clone());
    Ok(ValuationMatrix { primes: height_one, normals, values, group })
}

/// `Cl(M)`, the cokernel of the valuation map `Γ → ℤ^{height-one primes}`.
///
/// Generators span `Γ`, so the image equals the column span of the
/// valuation matrix.
pub fn class_group(m: &BinoidPresentation) -> Result<FinAbGroup> {
    Ok(cokernel(&valuation_matrix(m)?.values))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Unknown,
}

/// What was found at one height-one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeEvidence {
    pub prime: PrimeIdeal,
    /// Generator indices whose sum has valuation 1, if any was found.
    pub uniformizer: Option<Vec<usize>>,
    /// Rank of the images of the generators with valuation 0.
    pub unit_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCheck {
    pub verdict: Verdict,
    pub evidence: Vec<PrimeEvidence>,
}

/// A sufficient test for regularity in codimension one: at every height-one
/// prime some generator or sum of two generators has valuation 1, and the
/// generators of valuation 0 span a sublattice of rank `r − 1`. Failing the
/// test gives [`Verdict::Unknown`], never a negative answer.
pub fn regular_in_codim1_check(m: &BinoidPresentation) -> Result<RegularityCheck> {
    let vm = valuation_matrix(m)?;
    let n = m.generator_count();
    let r = vm.group.rank;
    let mut evidence = Vec::new();
    for (i, &prime) in vm.primes.iter().enumerate() {
        let row = vm.values.row(i);
        let uniformizer = (0..n).find(|&j| row[j].is_one()).map(|j| alloc::vec![j]).or_else(|| {
            (0..n)
                .flat_map(|a| (a..n).map(move |b| (a, b)))
                .find(|&(a, b)| (&row[a] + &row[b]).is_one())
                .map(|(a, b)| alloc::vec![a, b])
        });
        let zero_columns: Vec<Vec<BigInt>> = (0..n).filter(|&j| row[j].is_zero()).map(|j| vm.group.image(j)).collect();
        let unit_rank = rank(&IntMatrix::from_columns(r, &zero_columns));
        evidence.push(PrimeEvidence { prime, uniformizer, unit_rank });
    }
    let ok = evidence.iter().all(|e| e.uniformizer.is_some() && e.unit_rank + 1 == r);
    Ok(RegularityCheck { verdict: if ok { Verdict::Certified } else { Verdict::Unknown }, evidence })
}
