//! JSON forms of the computed objects.

use binoid_core::cech::{GeneralPicard, MonomialReport, SrTerm, UnipotentPart};
use binoid_core::divisors::ValuationMatrix;
use binoid_core::{FinAbGroup, GenSet, GroupExpr, SimplicialComplex, SpecPoset};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn integer(n: &BigInt) -> Value {
    n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn integers(v: &[BigInt]) -> Vec<Value> {
    v.iter().map(integer).collect()
}

#[derive(Serialize)]
pub struct GroupJson {
    pub free_rank: usize,
    pub torsion: Vec<Value>,
}

impl From<&FinAbGroup> for GroupJson {
    fn from(g: &FinAbGroup) -> Self {
        GroupJson { free_rank: g.free_rank(), torsion: integers(g.invariant_factors()) }
    }
}

#[derive(Serialize)]
pub struct GroupExprJson {
    pub symbol: String,
    pub free: usize,
    pub cotorsion: Vec<Value>,
    pub torsion_sub: Vec<Value>,
}

impl From<&GroupExpr> for GroupExprJson {
    fn from(e: &GroupExpr) -> Self {
        GroupExprJson {
            symbol: e.symbol.clone(),
            free: e.free_power,
            cotorsion: integers(&e.cotorsion),
            torsion_sub: integers(&e.torsion_sub),
        }
    }
}

#[derive(Serialize)]
pub struct ComplexJson {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: c.vertices().to_vec(),
            facets: c.facets().iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }
}

pub fn gen_names(gens: &[String], s: GenSet) -> Vec<String> {
    s.iter().map(|i| gens[i].clone()).collect()
}

#[derive(Serialize)]
pub struct SpecJson {
    pub generators: Vec<String>,
    pub primes: Vec<Vec<String>>,
    pub heights: Vec<usize>,
    /// Pairs `[i, j]` of indices into `primes` with `primes[j]` covering `primes[i]`.
    pub cover_edges: Vec<[usize; 2]>,
}

impl From<&SpecPoset> for SpecJson {
    fn from(s: &SpecPoset) -> Self {
        SpecJson {
            generators: s.generators().to_vec(),
            primes: s.primes().iter().map(|p| gen_names(s.generators(), p.0)).collect(),
            heights: s.heights(),
            cover_edges: s.cover_edges().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DegreeJson<T> {
    pub degree: isize,
    pub group: T,
}

#[derive(Serialize)]
pub struct GroupsJson<T> {
    pub degrees: Vec<DegreeJson<T>>,
}

#[derive(Serialize)]
pub struct SrTermJson {
    pub units: GroupExprJson,
    pub picard: GroupJson,
}

impl From<&SrTerm> for SrTermJson {
    fn from(t: &SrTerm) -> Self {
        SrTermJson { units: (&t.units).into(), picard: (&t.picard).into() }
    }
}

#[derive(Serialize)]
pub struct UnitGroupJson {
    pub support: Vec<String>,
    pub unit_generators: Vec<String>,
    pub rank: usize,
    pub complete: bool,
}

#[derive(Serialize)]
pub struct GeneralPicardJson {
    pub cover: Vec<Vec<String>>,
    pub units: Vec<Vec<UnitGroupJson>>,
    pub ranks: Vec<usize>,
    pub degrees: Vec<DegreeJson<GroupJson>>,
    pub complete: bool,
}

impl GeneralPicardJson {
    pub fn new(gens: &[String], g: &GeneralPicard, degrees: Vec<DegreeJson<GroupJson>>) -> Self {
        GeneralPicardJson {
            cover: g.cover.iter().map(|&s| gen_names(gens, s)).collect(),
            units: g
                .units
                .iter()
                .map(|cells| {
                    cells
                        .iter()
                        .map(|u| UnitGroupJson {
                            support: gen_names(gens, u.support),
                            unit_generators: gen_names(gens, u.unit_generators),
                            rank: u.rank(),
                            complete: u.complete,
                        })
                        .collect()
                })
                .collect(),
            ranks: g.complex.ranks(),
            degrees,
            complete: g.complete,
        }
    }
}

#[derive(Serialize)]
pub struct ClassGroupJson {
    pub primes: Vec<Vec<String>>,
    pub valuations: Vec<Vec<Value>>,
    pub class_group: GroupJson,
}

impl ClassGroupJson {
    pub fn new(gens: &[String], vm: &ValuationMatrix, cl: &FinAbGroup) -> Self {
        ClassGroupJson {
            primes: vm.primes.iter().map(|p| gen_names(gens, p.0)).collect(),
            valuations: (0..vm.values.rows()).map(|i| integers(vm.values.row(i))).collect(),
            class_group: cl.into(),
        }
    }
}

#[derive(Serialize)]
pub struct PicOpenJson {
    pub open: Vec<Vec<String>>,
    pub degrees: Vec<DegreeJson<GroupJson>>,
}

#[derive(Serialize)]
pub struct MonomialReportJson {
    pub radical: ComplexJson,
    pub is_radical: bool,
    pub reduced_parts: Vec<DegreeJson<SrTermJson>>,
    pub nonvanishing_h1: bool,
    pub unipotent_part: &'static str,
    pub pic_loc_trivial: Option<bool>,
}

impl From<&MonomialReport> for MonomialReportJson {
    fn from(r: &MonomialReport) -> Self {
        MonomialReportJson {
            radical: (&r.radical).into(),
            is_radical: r.is_radical,
            reduced_parts: r
                .reduced_parts
                .iter()
                .enumerate()
                .map(|(j, t)| DegreeJson { degree: j as isize, group: t.into() })
                .collect(),
            nonvanishing_h1: r.nonvanishing_h1,
            unipotent_part: match r.unipotent_part {
                UnipotentPart::Vanishes => "vanishes",
                UnipotentPart::NotComputed => "not_computed",
            },
            pic_loc_trivial: r.pic_loc_trivial,
        }
    }
}
