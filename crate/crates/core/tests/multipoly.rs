use std::collections::{BTreeMap, HashMap};

use dimfermat_core::arrangements::{ambient_field, generators_y, generators_z, inflection_scene};
use dimfermat_core::make_field;
use dimfermat_core::multipoly::{monomials_of_degree, MultiPoly, Ring, Substitution, VarSet};
use dimfermat_core::unexpected::gamma;
use proptest::prelude::*;

#[test]
fn nine_lines_product_brute_force() {
    // (x³+y³)(y³+z³)(z³+x³): choose one summand from each factor, 2³ ways
    let factors = [[[3, 0, 0], [0, 3, 0]], [[0, 3, 0], [0, 0, 3]], [[0, 0, 3], [3, 0, 0]]];
    let mut expanded: HashMap<[u32; 3], i64> = HashMap::new();
    for choice in 0..8 {
        let mut e = [0u32; 3];
        for (k, f) in factors.iter().enumerate() {
            let pick = f[(choice >> k) & 1];
            for i in 0..3 {
                e[i] += pick[i];
            }
        }
        *expanded.entry(e).or_default() += 1;
    }
    assert_eq!(expanded.len(), 7);
    assert_eq!(expanded[&[3, 3, 3]], 2);

    let scene = inflection_scene(&ambient_field(3).unwrap()).unwrap();
    assert_eq!(scene.g3.num_terms(), 7);
    for (e, c) in expanded {
        assert_eq!(scene.g3.coefficient(&e), scene.field.from_int(c));
    }
}

#[test]
fn euler_relation_on_generators() {
    for m in 1..=5 {
        let f = ambient_field(m).unwrap();
        let r = Ring::new(&f, &VarSet::xyz());
        let vars = [r.v("x"), r.v("y"), r.v("z")];
        let gens: Vec<MultiPoly> = generators_y(m, &f).into_iter().chain(generators_z(m, &f)).collect();
        for g in gens {
            let d = g.homogeneous_degree().unwrap();
            let lhs = (0..3).fold(MultiPoly::zero(&f, &r.vars), |acc, i| acc + &vars[i] * &g.partial_derivative(i));
            assert_eq!(lhs, g.scale_int(d as i64));
        }
    }
}

#[test]
fn gamma_bidegree_and_euler_in_both_triples() {
    let g = gamma(3).unwrap().poly;
    let r = Ring::new(g.field(), g.vars());
    let names = ["x", "y", "z", "a", "b", "c"];
    for (offset, degree) in [(0usize, 7i64), (3, 5)] {
        let lhs = (0..3).fold(MultiPoly::zero(g.field(), g.vars()), |acc, i| {
            acc + &r.v(names[offset + i]) * &g.partial_derivative(offset + i)
        });
        assert_eq!(lhs, g.scale_int(degree));
    }
}

#[test]
fn evaluation_examples() {
    let f = ambient_field(3).unwrap();
    let scene = inflection_scene(&f).unwrap();
    let a1 = &scene.flexes[0];
    assert!(a1.eval(&scene.lines[0].poly).unwrap().is_zero());
    let f3 = &generators_y(3, &f)[2];
    let one = dimfermat_core::ProjPoint::from_ints(&f, [1, 1, 1]).unwrap();
    assert_eq!(one.eval(f3).unwrap(), f.from_int(4));
}

#[test]
fn monomial_counts_match_binomials() {
    for k in 1..=6usize {
        for d in 0..=9u32 {
            let n = monomials_of_degree(k, d).len();
            // C(d + k - 1, k - 1)
            let mut c: u64 = 1;
            for i in 0..(k as u64 - 1) {
                c = c * (d as u64 + 1 + i) / (i + 1);
            }
            assert_eq!(n as u64, c, "k={k} d={d}");
        }
    }
}

fn xyzabc_poly(terms: &[([u32; 6], i64)]) -> MultiPoly {
    let f = make_field(6).unwrap();
    let vars = VarSet::xyzabc();
    MultiPoly::from_terms(&f, &vars, terms.iter().map(|(e, c)| (e.to_vec(), f.from_int(*c)))).unwrap()
}

fn sparse_terms() -> impl Strategy<Value = Vec<([u32; 6], i64)>> {
    prop::collection::vec((prop::array::uniform6(0u32..4), -9i64..=9), 0..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivatives_commute(t in sparse_terms(), u in 0usize..6, v in 0usize..6) {
        let p = xyzabc_poly(&t);
        prop_assert_eq!(p.partial_derivative(u).partial_derivative(v), p.partial_derivative(v).partial_derivative(u));
    }

    #[test]
    fn substitution_is_multiplicative(s in sparse_terms(), t in sparse_terms(), img in sparse_terms()) {
        let (p, q, h) = (xyzabc_poly(&s), xyzabc_poly(&t), xyzabc_poly(&img));
        let f = p.field().clone();
        let mut map = BTreeMap::new();
        map.insert(0, Substitution::Poly(h));
        map.insert(4, Substitution::Value(f.root_of_unity(1)));
        let lhs = (&p * &q).substitute(&map).unwrap();
        let rhs = p.substitute(&map).unwrap() * q.substitute(&map).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negation_cancels(t in sparse_terms()) {
        let p = xyzabc_poly(&t);
        prop_assert!((&p + &(-&p)).is_zero());
    }
}
