//! The unexpected curves `γ_m`, their triple-point certificates in both readings,
//! and the coefficient systems `Λ_m`.
//!
//! `γ_m` lives in the six-variable ring `K[x,y,z,a,b,c]`. Reading it as a curve in
//! `(x:y:z)` with parameter point `(a:b:c)`, or the other way round, is only a
//! [`Side`] flag; the polynomial itself never changes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arrangements::{ambient_field, diminished_set_in, generators_z, primitive_root};
use crate::certificate::{Certificate, Status, Witness};
use crate::cyclotomic::{CycloElem, CycloField};
use crate::linsys::{generator_span_dim, kernel_basis, random_point, ExactMatrix};
use crate::multipoly::{monomials_of_degree, Bidegree, MultiPoly, Ring, Substitution, VarSet};
use crate::{Error, Result};

/// Which coordinate triple plays the role of the curve's coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Xyz,
    Abc,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Xyz => "xyz",
            Side::Abc => "abc",
        }
    }

    /// Indices of this triple in `x,y,z,a,b,c`.
    pub fn indices(self) -> [usize; 3] {
        match self {
            Side::Xyz => [0, 1, 2],
            Side::Abc => [3, 4, 5],
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::Xyz => Side::Abc,
            Side::Abc => Side::Xyz,
        }
    }
}

/// A bihomogeneous form in `x,y,z ; a,b,c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiCurve {
    pub poly: MultiPoly,
    pub bidegree: Bidegree,
    pub role: Side,
}

impl BiCurve {
    pub fn new(poly: MultiPoly, role: Side) -> Result<Self> {
        let bidegree = poly
            .bidegree()?
            .ok_or_else(|| Error::InvalidParameter("polynomial is zero or not bihomogeneous".into()))?;
        Ok(BiCurve { poly, bidegree, role })
    }

    /// The same form read from the other triple.
    pub fn dual(&self) -> BiCurve {
        BiCurve { role: self.role.other(), ..self.clone() }
    }
}

/// The six forms `u_1..u_6` in `a,b,c`, all of degree `2m-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSystem {
    pub m: u32,
    pub members: Vec<MultiPoly>,
}

impl CoeffSystem {
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.members.iter().map(MultiPoly::homogeneous_degree);
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }
}

/// `u_1..u_6` over `field`, in the ring `K[a,b,c]`.
pub fn lambda_system_in(m: u32, field: &Arc<CycloField>) -> Result<CoeffSystem> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let r = Ring::new(field, &VarSet::abc());
    let (a, b, c) = (r.v("a"), r.v("b"), r.v("c"));
    let k = 2 * m as i64 - 1;
    let (am, bm, cm) = (a.pow(m), b.pow(m), c.pow(m));
    let (a1, b1, c1) = (a.pow(m - 1), b.pow(m - 1), c.pow(m - 1));
    let members = vec![
        &a1 * &(cm.scale_int(k) - &am),
        &b1 * &(&bm - &cm.scale_int(k)),
        &c1 * &(&cm - &am.scale_int(k)),
        &c1 * &(bm.scale_int(k) - &cm),
        (&b1 * &(&am - &cm)).scale_int(k),
        (&a1 * &(&cm - &bm)).scale_int(k),
    ];
    Ok(CoeffSystem { m, members })
}

/// `Λ_m` over the ambient field of `m`.
pub fn lambda_system(m: u32) -> Result<CoeffSystem> {
    lambda_system_in(m, &ambient_field(m)?)
}

fn embed(p: &MultiPoly, offset: usize) -> Result<MultiPoly> {
    let target = VarSet::xyzabc();
    let r = Ring::new(p.field(), &target);
    let names = ["x", "y", "z", "a", "b", "c"];
    let images: Vec<MultiPoly> = (0..3).map(|i| r.v(names[offset + i])).collect();
    p.compose(&target, &images)
}

/// A form in `x,y,z` as an element of the six-variable ring.
pub fn embed_xyz(p: &MultiPoly) -> Result<MultiPoly> {
    embed(p, 0)
}

/// A form in `a,b,c` as an element of the six-variable ring.
pub fn embed_abc(p: &MultiPoly) -> Result<MultiPoly> {
    embed(p, 3)
}

/// `γ_m = Σ u_i h_i`, bihomogeneous of bidegree `(2m+1, 2m-1)`.
pub fn gamma_in(m: u32, field: &Arc<CycloField>) -> Result<BiCurve> {
    let lambda = lambda_system_in(m, field)?;
    let hs = generators_z(m, field);
    let mut acc = MultiPoly::zero(field, &VarSet::xyzabc());
    for (u, h) in lambda.members.iter().zip(&hs) {
        acc = acc + embed_abc(u)? * embed_xyz(h)?;
    }
    BiCurve::new(acc, Side::Xyz)
}

pub fn gamma(m: u32) -> Result<BiCurve> {
    gamma_in(m, &ambient_field(m)?)
}

/// Recovers `u_1..u_6` from `γ` by writing each `(a,b,c)`-coefficient of `γ` in the
/// basis `h_1..h_6`. Fails if some coefficient is outside their span.
pub fn extract_coefficient_system(curve: &BiCurve, hs: &[MultiPoly], m: u32) -> Result<CoeffSystem> {
    let field = curve.poly.field().clone();
    let xyz = VarSet::xyz();
    let abc = VarSet::abc();
    let degree = hs
        .first()
        .and_then(MultiPoly::homogeneous_degree)
        .ok_or_else(|| Error::InvalidParameter("generators must be homogeneous".into()))?;
    let monos = monomials_of_degree(3, degree);
    let rows = monos.iter().map(|e| hs.iter().map(|h| h.coefficient(e)).collect()).collect();
    let system = ExactMatrix::new(&field, hs.len(), rows)?;

    let project: Vec<MultiPoly> = ["x", "y", "z"]
        .iter()
        .map(|n| MultiPoly::var(&field, &xyz, n))
        .chain((0..3).map(|_| Ok(MultiPoly::one(&field, &xyz))))
        .collect::<Result<_>>()?;

    let mut members = vec![MultiPoly::zero(&field, &abc); hs.len()];
    for (abc_exps, coeff) in curve.poly.collect_in(&[3, 4, 5]) {
        let in_xyz = coeff.compose(&xyz, &project)?;
        let rhs: Vec<CycloElem> = monos.iter().map(|e| in_xyz.coefficient(e)).collect();
        let lambda = system
            .solve(&rhs)?
            .ok_or_else(|| Error::InvalidParameter(format!("coefficient of a,b,c^{abc_exps:?} is outside span(h)")))?;
        for (i, l) in lambda.into_iter().enumerate() {
            members[i] = &members[i] + &MultiPoly::monomial(&field, &abc, abc_exps.clone(), l);
        }
    }
    Ok(CoeffSystem { m, members })
}

/// Zero-test of all partials of order `≤ 2` of a bihomogeneous curve at the swapped
/// point, plus the first nonvanishing partial of order 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCertificate {
    pub side: Side,
    pub bidegree: Bidegree,
    /// `(derivative orders, residue)` for the 10 partials of order 0, 1, 2.
    pub residues: Vec<([u32; 3], MultiPoly)>,
    /// First order-3 partial (graded-lex order) whose residue is not zero.
    pub witness_order3: Option<([u32; 3], MultiPoly)>,
}

impl MultCertificate {
    pub fn passed(&self) -> bool {
        self.residues.iter().all(|(_, r)| r.is_zero())
    }

    /// Multiplicity is exactly 3: all lower residues vanish and an order-3 one does not.
    pub fn exact_three(&self) -> bool {
        self.passed() && self.witness_order3.is_some()
    }

    /// Lowest order with a nonzero residue, if any.
    pub fn failing_order(&self) -> Option<u32> {
        self.residues.iter().find(|(_, r)| !r.is_zero()).map(|(o, _)| o.iter().sum())
    }

    pub fn to_certificate(&self, claim: &str, m: u32) -> Certificate {
        let residues: Vec<Witness> = self
            .residues
            .iter()
            .map(|(o, r)| {
                let w = Witness::map().with("orders", o.to_vec()).with("zero", r.is_zero());
                if r.is_zero() {
                    w
                } else {
                    w.with("residue", r.to_text())
                }
            })
            .collect();
        let mut w = Witness::map()
            .with("side", self.side.label())
            .with("bidegree", vec![self.bidegree.deg_xyz, self.bidegree.deg_abc])
            .with("order_checked", 2u32)
            .with("residues", Witness::List(residues))
            .with("exact_multiplicity_3", self.exact_three());
        if let Some((o, r)) = &self.witness_order3 {
            w = w.with(
                "witness_order3",
                Witness::map().with("orders", o.to_vec()).with("terms", r.num_terms()).with("residue", r.to_text()),
            );
        }
        if let Some(k) = self.failing_order() {
            w = w.with("failing_order", k);
        }
        Certificate::new(claim, Status::from_bool(self.exact_three())).param("m", m as i64).witness(w)
    }
}

fn swap_assignment(curve: &BiCurve, side: Side) -> Result<BTreeMap<usize, Substitution>> {
    let field = curve.poly.field();
    let vars = curve.poly.vars();
    let mut map = BTreeMap::new();
    for (from, to) in side.indices().into_iter().zip(side.other().indices()) {
        let mut e = vec![0; 6];
        e[to] = 1;
        map.insert(from, Substitution::Poly(MultiPoly::monomial(field, vars, e, field.one())));
    }
    Ok(map)
}

fn residue(curve: &BiCurve, side: Side, orders: &[u32], swap: &BTreeMap<usize, Substitution>) -> Result<MultiPoly> {
    let mut full = [0u32; 6];
    for (slot, &o) in side.indices().iter().zip(orders) {
        full[*slot] = o;
    }
    curve.poly.derivative(&full).substitute(swap)
}

/// Differentiates with respect to `side` up to order 2 and substitutes that triple by
/// the other one; every residue must be the zero polynomial.
pub fn mult_certificate(curve: &BiCurve, side: Side) -> Result<MultCertificate> {
    let swap = swap_assignment(curve, side)?;
    let mut residues = Vec::with_capacity(10);
    for order in 0..=2 {
        for idx in monomials_of_degree(3, order) {
            let r = residue(curve, side, &idx, &swap)?;
            residues.push(([idx[0], idx[1], idx[2]], r));
        }
    }
    let mut witness_order3 = None;
    for idx in monomials_of_degree(3, 3) {
        let r = residue(curve, side, &idx, &swap)?;
        if !r.is_zero() {
            witness_order3 = Some(([idx[0], idx[1], idx[2]], r));
            break;
        }
    }
    Ok(MultCertificate { side, bidegree: curve.bidegree, residues, witness_order3 })
}

/// One term of the dual display: `coeff(x,y,z) · a^i b^j c^k`.
struct DisplayTerm {
    abc: [u32; 3],
    coeff: MultiPoly,
}

fn dual_display(m: u32, field: &Arc<CycloField>) -> Vec<DisplayTerm> {
    let r = Ring::new(field, &VarSet::xyz());
    let (x, y, z) = (r.v("x"), r.v("y"), r.v("z"));
    let (xm, ym, zm) = (x.pow(m), y.pow(m), z.pow(m));
    let (x2, y2, z2) = (x.pow(2 * m), y.pow(2 * m), z.pow(2 * m));
    let k = 2 * m as i64 - 1;
    let xy = &xm + &ym;
    let xz = &xm + &zm;
    let yz = &ym + &zm;
    let (e, f) = (2 * m - 1, m - 1);
    vec![
        DisplayTerm { abc: [e, 0, 0], coeff: &x * &(&z2 - &y2) },
        DisplayTerm { abc: [0, e, 0], coeff: &y * &(&x2 - &z2) },
        DisplayTerm { abc: [0, 0, e], coeff: &z * &(&y2 - &x2) },
        DisplayTerm { abc: [m, f, 0], coeff: (&y * &(&xz * &yz)).scale_int(k) },
        DisplayTerm { abc: [f, m, 0], coeff: (&x * &(&xz * &yz)).scale_int(-k) },
        DisplayTerm { abc: [m, 0, f], coeff: (&z * &(&xy * &yz)).scale_int(-k) },
        DisplayTerm { abc: [f, 0, m], coeff: (&x * &(&xy * &yz)).scale_int(k) },
        DisplayTerm { abc: [0, m, f], coeff: (&z * &(&xy * &xz)).scale_int(k) },
        DisplayTerm { abc: [0, f, m], coeff: (&y * &(&xy * &xz)).scale_int(-k) },
    ]
}

fn abc_text(e: &[u32]) -> String {
    let mut parts = Vec::new();
    for (name, &k) in ["a", "b", "c"].iter().zip(e) {
        if k > 0 {
            parts.push(format!("{name}^{k}"));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Regroups `γ_m` by `(a,b,c)`-monomials and compares every coefficient with the
/// closed-form dual expansion (terms of the expansion landing on the same monomial are
/// summed first).
pub fn dual_expansion_check_in(m: u32, field: &Arc<CycloField>) -> Result<Certificate> {
    let curve = gamma_in(m, field)?;
    let xyz = VarSet::xyz();
    let mut expected: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for t in dual_display(m, field) {
        let slot = expected.entry(t.abc.to_vec()).or_insert_with(|| MultiPoly::zero(field, &xyz));
        *slot = &*slot + &t.coeff;
    }
    let project: Vec<MultiPoly> = ["x", "y", "z"]
        .iter()
        .map(|n| MultiPoly::var(field, &xyz, n))
        .chain((0..3).map(|_| Ok(MultiPoly::one(field, &xyz))))
        .collect::<Result<_>>()?;
    let mut actual: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (e, c) in curve.poly.collect_in(&[3, 4, 5]) {
        actual.insert(e, c.compose(&xyz, &project)?);
    }

    let mut entries = Vec::new();
    let mut mismatches = Vec::new();
    let zero = MultiPoly::zero(field, &xyz);
    let keys: alloc::collections::BTreeSet<&Vec<u32>> = expected.keys().chain(actual.keys()).collect();
    for key in keys {
        let want = expected.get(key).unwrap_or(&zero);
        let got = actual.get(key).unwrap_or(&zero);
        let ok = want == got;
        let mut w = Witness::map().with("monomial", abc_text(key)).with("equal", ok).with("coefficient", got.to_text());
        if !ok {
            w = w.with("expected", want.to_text());
            mismatches.push(Witness::Text(abc_text(key)));
        }
        entries.push(w);
    }
    Ok(Certificate::new("dual-expansion", Status::from_bool(mismatches.is_empty())).param("m", m as i64).witness(
        Witness::map()
            .with("monomials", entries.len())
            .with("coefficients", Witness::List(entries))
            .with("mismatches", Witness::List(mismatches)),
    ))
}

pub fn dual_expansion_check(m: u32) -> Result<Certificate> {
    dual_expansion_check_in(m, &ambient_field(m)?)
}

/// Searches for a degree `N` in `[e, n_max]` at which the multiples of the system span
/// every form of degree `N`. Success proves that the system has no common zero over the
/// algebraic closure; not finding one is inconclusive.
pub fn bpf_check(system: &CoeffSystem, n_max: u32) -> Result<Certificate> {
    let e = system.degree().ok_or_else(|| Error::InvalidParameter("system members must share one degree".into()))?;
    let mut steps = Vec::new();
    let mut saturating = None;
    for n in e..=n_max {
        let span = generator_span_dim(&system.members, n)?;
        let full = ((n as usize + 2) * (n as usize + 1)) / 2;
        steps.push(Witness::map().with("degree", n).with("span_dim", span).with("full_dim", full));
        if span == full {
            saturating = Some(n);
            break;
        }
    }
    let status = if saturating.is_some() { Status::Pass } else { Status::Inconclusive };
    let mut w = Witness::map().with("member_degree", e).with("members", system.members.len());
    if let Some(n) = saturating {
        w = w.with("saturating_degree", n);
    }
    Ok(Certificate::new("bpf", status)
        .param("m", system.m as i64)
        .param("n_max", n_max as i64)
        .witness(w.with("steps", Witness::List(steps))))
}

/// `Some(k)` if `p = k · v^exp` with `k ≠ 0`.
fn monomial_multiple(p: &MultiPoly, var: usize, exp: u32) -> Option<CycloElem> {
    if p.num_terms() != 1 {
        return None;
    }
    let (mono, c) = p.terms().next()?;
    let e = mono.exponents();
    (e[var] == exp && e.iter().enumerate().all(|(i, &k)| i == var || k == 0)).then(|| c.clone())
}

/// Mechanical replay of the case analysis proving `Λ_m` base point free: `u_6` splits
/// as `(2m-1) a^{m-1} ∏ (c - ω^α b)`, and on each branch the remaining members force
/// all coordinates to vanish.
pub fn bpf_case_analysis(system: &CoeffSystem) -> Result<Certificate> {
    let m = system.m;
    if system.members.len() != 6 {
        return Err(Error::InvalidParameter("expected six members".into()));
    }
    let u = &system.members;
    let field = u[0].field().clone();
    let abc = VarSet::abc();
    let r = Ring::new(&field, &abc);
    let (a, b, c) = (r.v("a"), r.v("b"), r.v("c"));
    let e = 2 * m - 1;
    let omega = primitive_root(&field, m)?;
    let mut trace = Vec::new();
    let mut ok = true;

    let mut factored = a.pow(m - 1).scale_int(2 * m as i64 - 1);
    for alpha in 0..m {
        factored = &factored * &(&c - &b.scale(&omega.pow(alpha as u64)));
    }
    let split = factored == u[5];
    ok &= split;
    trace.push(Witness::map().with("step", "u6 splits into a^(m-1) and c - w^k b").with("holds", split));

    let zero = Substitution::Value(field.zero());
    let subst = |p: &MultiPoly, s: &[(&str, Substitution)]| p.substitute_named(s);

    // a = 0
    let u3 = subst(&u[2], &[("a", zero.clone())])?;
    let c_forced = monomial_multiple(&u3, 2, e).is_some();
    let u2 = subst(&u[1], &[("a", zero.clone()), ("c", zero.clone())])?;
    let b_forced = monomial_multiple(&u2, 1, e).is_some();
    let branch_ok = c_forced && b_forced;
    ok &= branch_ok;
    trace.push(
        Witness::map()
            .with("branch", "a = 0")
            .with("u3", u3.to_text())
            .with("forces_c_zero", c_forced)
            .with("u2_after_c_zero", u2.to_text())
            .with("forces_b_zero", b_forced)
            .with("contradiction", branch_ok),
    );

    // c = ω^α b
    for alpha in 0..m {
        let w = omega.pow(alpha as u64);
        let on_line = Substitution::Poly(b.scale(&w));
        let u6 = subst(&u[5], &[("c", on_line.clone())])?;
        let u2 = subst(&u[1], &[("c", on_line)])?;
        let b_forced = monomial_multiple(&u2, 1, e).is_some();
        let u1 = subst(&u[0], &[("b", zero.clone()), ("c", zero.clone())])?;
        let a_forced = monomial_multiple(&u1, 0, e).is_some();
        let branch_ok = u6.is_zero() && b_forced && a_forced;
        ok &= branch_ok;
        trace.push(
            Witness::map()
                .with("branch", format!("c = w^{alpha} b"))
                .with("u6_vanishes", u6.is_zero())
                .with("u2", u2.to_text())
                .with("forces_b_zero", b_forced)
                .with("u1_after_b_c_zero", u1.to_text())
                .with("forces_a_zero", a_forced)
                .with("contradiction", branch_ok),
        );
    }
    Ok(Certificate::new("bpf-case-analysis", Status::from_bool(ok))
        .param("m", m as i64)
        .witness(Witness::map().with("branches", 1 + m).with("trace", Witness::List(trace))))
}

/// The case analysis at `m = 3`, where the branches are `a = 0` and `c = ε^α b`.
pub fn bpf_case_analysis_m3(system: &CoeffSystem) -> Result<Certificate> {
    if system.m != 3 {
        return Err(Error::InvalidParameter(format!("expected the m = 3 system, got m = {}", system.m)));
    }
    bpf_case_analysis(system)
}

/// Default search bound for [`bpf_check`]: `3(2m-2) + 1`.
pub fn default_n_max(m: u32) -> u32 {
    3 * (2 * m).saturating_sub(2) + 1
}

/// Specializes `(a,b,c)` at random integer points and checks that the resulting form
/// lies in the span of a kernel basis of `[I(Z_m)]_{2m+1}`.
pub fn gamma_membership_in(m: u32, field: &Arc<CycloField>, trials: u32, seed: u64) -> Result<Certificate> {
    let curve = gamma_in(m, field)?;
    let z = diminished_set_in(m, field)?;
    let piece = kernel_basis(&z, 2 * m + 1);
    let xyz = VarSet::xyz();
    let mut ok = true;
    let mut items = Vec::new();
    for t in 0..trials as u64 {
        let s = seed.wrapping_add(t);
        let p = random_point(s);
        let images: Vec<MultiPoly> = ["x", "y", "z"]
            .iter()
            .map(|n| MultiPoly::var(field, &xyz, n))
            .chain(p.iter().map(|&v| Ok(MultiPoly::constant(&xyz, field.from_int(v)))))
            .collect::<Result<_>>()?;
        let special = curve.poly.compose(&xyz, &images)?;
        let member = !special.is_zero() && piece.coordinates_of(&special)?.is_some();
        ok &= member;
        items.push(
            Witness::map()
                .with("seed", s as i64)
                .with("point", Witness::List(p.iter().map(|&v| Witness::Int(v)).collect()))
                .with("in_span", member),
        );
    }
    Ok(Certificate::new("gamma-membership", Status::from_bool(ok))
        .param("m", m as i64)
        .param("degree", (2 * m + 1) as i64)
        .witness(Witness::map().with("dim_IZ_d", piece.dim()).with("trials", Witness::List(items))))
}
