use dimfermat_core::arrangements::{ambient_field, diminished_set_in, generators_z};
use dimfermat_core::multipoly::{Ring, Substitution};
use dimfermat_core::unexpected::*;
use dimfermat_core::{Bidegree, MultiPoly, Status, VarSet};

fn abc_ring(m: u32) -> Ring {
    Ring::new(&ambient_field(m).unwrap(), &VarSet::abc())
}

#[test]
fn lambda_three_members() {
    let r = abc_ring(3);
    let (a, b, c) = (r.v("a"), r.v("b"), r.v("c"));
    let (a3, b3, c3) = (a.pow(3), b.pow(3), c.pow(3));
    let expected = [
        a.pow(2) * (c3.scale_int(5) - &a3),
        b.pow(2) * (&b3 - &c3.scale_int(5)),
        c.pow(2) * (&c3 - &a3.scale_int(5)),
        c.pow(2) * (b3.scale_int(5) - &c3),
        (b.pow(2) * (&a3 - &c3)).scale_int(5),
        (a.pow(2) * (&c3 - &b3)).scale_int(5),
    ];
    let lambda = lambda_system(3).unwrap();
    assert_eq!(lambda.members, expected);
    assert_eq!(lambda.degree(), Some(5));
}

#[test]
fn gamma_recovers_its_coefficient_system() {
    for m in 2..=4u32 {
        let f = ambient_field(m).unwrap();
        let g = gamma_in(m, &f).unwrap();
        assert_eq!(g.bidegree, Bidegree { deg_xyz: 2 * m + 1, deg_abc: 2 * m - 1 });
        let back = extract_coefficient_system(&g, &generators_z(m, &f), m).unwrap();
        assert_eq!(back, lambda_system_in(m, &f).unwrap());
    }
    assert!(gamma(1).is_err());
}

#[test]
fn gamma_at_the_unit_point() {
    let f = ambient_field(3).unwrap();
    let g = gamma_in(3, &f).unwrap();
    let one = Substitution::Value(f.one());
    let at = g.poly.substitute_named(&[("a", one.clone()), ("b", one.clone()), ("c", one)]).unwrap();
    let h: Vec<MultiPoly> = generators_z(3, &f).iter().map(|h| embed_xyz(h).unwrap()).collect();
    let expected = (&h[0] - &h[1] - &h[2] + &h[3]).scale_int(4);
    assert_eq!(at, expected);
    let project = ["x", "y", "z"].map(|n| MultiPoly::var(&f, &VarSet::xyz(), n).unwrap());
    let plane = at
        .compose(
            &VarSet::xyz(),
            &[
                project[0].clone(),
                project[1].clone(),
                project[2].clone(),
                MultiPoly::one(&f, &VarSet::xyz()),
                MultiPoly::one(&f, &VarSet::xyz()),
                MultiPoly::one(&f, &VarSet::xyz()),
            ],
        )
        .unwrap();
    for p in diminished_set_in(3, &f).unwrap().points() {
        assert!(p.eval(&plane).unwrap().is_zero());
    }
}

#[test]
fn dual_expansion_coefficients() {
    for m in 2..=4u32 {
        let f = ambient_field(m).unwrap();
        let r = Ring::new(&f, &VarSet::xyzabc());
        let (x, y, z) = (r.v("x"), r.v("y"), r.v("z"));
        let k = 2 * m as i64 - 1;
        let e = 2 * m - 1;
        let g = gamma_in(m, &f).unwrap();
        let coeffs = g.poly.collect_in(&[3, 4, 5]);
        let find = |exps: [u32; 3]| coeffs.iter().find(|(ex, _)| ex[..] == exps[..]).map(|(_, p)| p.clone()).unwrap();
        assert_eq!(find([e, 0, 0]), &x * &(z.pow(2 * m) - y.pow(2 * m)));
        let xm_zm = x.pow(m) + z.pow(m);
        let ym_zm = y.pow(m) + z.pow(m);
        let xm_ym = x.pow(m) + y.pow(m);
        assert_eq!(find([m, m - 1, 0]), (&y * &xm_zm * &ym_zm).scale_int(k));
        assert_eq!(find([0, m, m - 1]), (&z * &xm_ym * &xm_zm).scale_int(k));
        assert_eq!(find([0, m - 1, m]), (&y * &xm_ym * &xm_zm).scale_int(-k));
        assert!(dual_expansion_check(m).unwrap().passed());
    }
}

#[test]
fn multiplicity_three_on_both_sides() {
    for m in 2..=4u32 {
        let g = gamma(m).unwrap();
        for side in [Side::Xyz, Side::Abc] {
            let cert = mult_certificate(&g, side).unwrap();
            assert_eq!(cert.residues.len(), 10);
            assert!(cert.exact_three(), "m={m} side={}", side.label());
            assert_eq!(cert.to_certificate("mult", m).status, Status::Pass);
        }
        assert!(mult_certificate(&g.dual(), Side::Abc).unwrap().passed());
    }
}

#[test]
fn generator_alone_is_not_triple() {
    let f = ambient_field(3).unwrap();
    let h1 = embed_xyz(&generators_z(3, &f)[0]).unwrap();
    let curve = BiCurve::new(h1, Side::Xyz).unwrap();
    let cert = mult_certificate(&curve, Side::Xyz).unwrap();
    assert!(!cert.passed());
    assert_eq!(cert.failing_order(), Some(0));
    let c = cert.to_certificate("mult-xyz", 3);
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.witness.get("failing_order").and_then(|w| w.as_int()), Some(0));
}

#[test]
fn base_point_freeness() {
    let lambda = lambda_system(3).unwrap();
    let cert = bpf_check(&lambda, 13).unwrap();
    assert_eq!(cert.status, Status::Pass);
    assert_eq!(cert.witness.get("saturating_degree").and_then(|w| w.as_int()), Some(10));
    assert_eq!(default_n_max(3), 13);

    let r = abc_ring(3);
    let pencil = CoeffSystem { m: 3, members: vec![r.v("a").pow(2), r.v("b").pow(2)] };
    assert_eq!(bpf_check(&pencil, 8).unwrap().status, Status::Inconclusive);
    assert_eq!(bpf_check(&lambda_system(1).unwrap(), default_n_max(1)).unwrap().status, Status::Inconclusive);
}

#[test]
fn case_analysis_branches() {
    let lambda = lambda_system(3).unwrap();
    let r = abc_ring(3);
    let zero = Substitution::Value(ambient_field(3).unwrap().zero());
    let u3 = lambda.members[2].substitute_named(&[("a", zero)]).unwrap();
    assert_eq!(u3, r.v("c").pow(5));
    let u2 = lambda.members[1].substitute_named(&[("c", Substitution::Poly(r.v("b")))]).unwrap();
    assert_eq!(u2, r.v("b").pow(5).scale_int(-4));
    assert!(bpf_case_analysis_m3(&lambda).unwrap().passed());
    assert!(bpf_case_analysis_m3(&lambda_system(4).unwrap()).is_err());
    for m in 2..=5 {
        assert!(bpf_case_analysis(&lambda_system(m).unwrap()).unwrap().passed(), "m={m}");
    }
}

#[test]
fn specializations_lie_in_the_ideal() {
    let f = ambient_field(3).unwrap();
    let cert = gamma_membership_in(3, &f, 3, 0).unwrap();
    assert_eq!(cert.claim, "gamma-membership");
    assert!(cert.passed());
}
