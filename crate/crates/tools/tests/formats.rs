use binoid_core::{BinoidPresentation, Face, Relation, RelationRhs, SimplicialComplex};
use binoid_tools::input::{parse, parse_binoid, parse_complex, parse_complex_json, parse_monomial, Input};
use binoid_tools::report::ComplexJson;
use proptest::prelude::*;

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1..=7u32).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 1..=n as usize), 1..=5)
            .prop_map(move |facets| SimplicialComplex::with_vertices(1..=n, facets.into_iter().map(Face::new)).unwrap())
    })
}

fn exponents(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..4u32, n).prop_filter("nonzero", |v| v.iter().any(|&e| e > 0))
}

fn presentation_strategy() -> impl Strategy<Value = BinoidPresentation> {
    (1..=5usize).prop_flat_map(|n| {
        prop::collection::vec((exponents(n), prop::option::of(exponents(n))), 0..=3).prop_map(move |rels| {
            let relations = rels
                .into_iter()
                .filter(|(l, r)| r.as_ref() != Some(l))
                .map(|(l, r)| match r {
                    Some(r) => Relation::element(l, r),
                    None => Relation::infinity(l),
                })
                .collect();
            BinoidPresentation::new((1..=n).map(|i| format!("x{i}")).collect(), relations).unwrap()
        })
    })
}

fn sum(names: &[String], v: &[u32]) -> String {
    let terms: Vec<String> = v.iter().zip(names).filter(|(e, _)| **e > 0).map(|(e, n)| format!("{e} {n}")).collect();
    terms.join(" + ")
}

fn binoid_file(m: &BinoidPresentation) -> String {
    let mut out = format!("generators: {}\n", m.generators().join(" "));
    for r in m.relations() {
        let rhs = match &r.rhs {
            RelationRhs::Element(v) => sum(m.generators(), v),
            RelationRhs::Infinity => "inf".into(),
        };
        out += &format!("relation: {} = {rhs}\n", sum(m.generators(), &r.lhs));
    }
    out
}

proptest! {
    #[test]
    fn complexes_round_trip(c in complex_strategy()) {
        let mut text = format!("vertices: {}\n", c.vertices().iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
        for f in c.facets() {
            text += &format!("facet: {}\n", f.vertices().iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
        }
        prop_assert_eq!(&parse_complex(&text).unwrap(), &c);
        let json = serde_json::to_string(&ComplexJson::from(&c)).unwrap();
        prop_assert_eq!(&parse_complex_json(&json).unwrap(), &c);
        prop_assert_eq!(parse(&json).unwrap(), Input::Complex(c));
    }

    #[test]
    fn presentations_round_trip(m in presentation_strategy()) {
        prop_assert_eq!(&parse_binoid(&binoid_file(&m)).unwrap(), &m);
    }

    #[test]
    fn monomial_generators_round_trip(gens in prop::collection::vec(exponents(3), 1..=4)) {
        let mut text = String::from("variables: X Y Z\n");
        for g in &gens {
            let factors: Vec<String> = g.iter().zip(["X", "Y", "Z"]).filter(|(e, _)| **e > 0).map(|(e, n)| format!("{n}^{e}")).collect();
            text += &format!("gen: {}\n", factors.join(" "));
        }
        let m = parse_monomial(&text).unwrap();
        let expected: Vec<Relation> = gens.into_iter().map(Relation::infinity).collect();
        prop_assert_eq!(m.relations(), expected.as_slice());
    }
}
