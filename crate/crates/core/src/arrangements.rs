//! Point configurations and the polynomials attached to them: the Fermat grids
//! `W_m`, the diminished sets `Y_m` and `Z_m`, the inflection points and tangent
//! lines of the Fermat cubic, and the ideal generators `f_i`, `h_i`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{make_field, CycloElem, CycloField};
use crate::multipoly::{MultiPoly, Ring, VarSet};
use crate::{ambient_conductor, Error, Result};

/// A point of the projective plane, scaled so that its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [CycloElem; 3],
}

impl ProjPoint {
    pub fn new(coords: [CycloElem; 3]) -> Result<Self> {
        let f = coords[0].field().clone();
        for c in &coords[1..] {
            if c.field() != &f {
                return Err(Error::FieldMismatch { left: f.conductor(), right: c.field().conductor() });
            }
        }
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let scale = lead.inv()?;
        Ok(ProjPoint { coords: coords.map(|c| &c * &scale) })
    }

    pub fn from_ints(field: &Arc<CycloField>, coords: [i64; 3]) -> Result<Self> {
        Self::new(coords.map(|c| field.from_int(c)))
    }

    pub fn coords(&self) -> &[CycloElem; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.coords[0].field()
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.coords.iter().any(CycloElem::is_zero)
    }

    /// `(c0 : c1 : c2)` with coordinates in cyclotomic text form.
    pub fn to_text(&self) -> String {
        format!("({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }

    /// Evaluates a polynomial in `x,y,z` at this representative.
    pub fn eval(&self, p: &MultiPoly) -> Result<CycloElem> {
        p.eval(&self.coords)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConfigKind {
    /// Complete intersection grid `W_m`.
    W,
    /// Singular points of the Fermat arrangement, `W_m ∪ X`.
    S,
    /// `W_{2m} ∖ W_m`.
    Y,
    /// `Y_m ∪ X`.
    Z,
    /// The three coordinate points.
    X,
    /// Anything assembled by hand.
    Custom,
}

impl ConfigKind {
    pub fn label(self) -> &'static str {
        match self {
            ConfigKind::W => "W",
            ConfigKind::S => "S",
            ConfigKind::Y => "Y",
            ConfigKind::Z => "Z",
            ConfigKind::X => "X",
            ConfigKind::Custom => "custom",
        }
    }
}

/// A named finite set of points. Points are distinct and kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub m: u32,
    field: Arc<CycloField>,
    points: Vec<ProjPoint>,
}

impl Configuration {
    pub fn new(kind: ConfigKind, m: u32, field: &Arc<CycloField>, points: impl IntoIterator<Item = ProjPoint>) -> Self {
        let set: BTreeSet<ProjPoint> = points.into_iter().collect();
        Configuration { kind, m, field: field.clone(), points: set.into_iter().collect() }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn difference(&self, other: &Configuration, kind: ConfigKind) -> Configuration {
        let pts = self.points.iter().filter(|p| !other.contains(p)).cloned();
        Configuration::new(kind, self.m, &self.field, pts)
    }

    pub fn union(&self, other: &Configuration, kind: ConfigKind) -> Configuration {
        let pts = self.points.iter().chain(other.points.iter()).cloned();
        Configuration::new(kind, self.m, &self.field, pts)
    }

    pub fn is_disjoint(&self, other: &Configuration) -> bool {
        self.points.iter().all(|p| !other.contains(p))
    }

    /// One point per line, sorted by the serialized form.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self.points.iter().map(ProjPoint::to_text).collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

/// The field used for every computation with parameter `m`.
pub fn ambient_field(m: u32) -> Result<Arc<CycloField>> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    make_field(ambient_conductor(m))
}

fn require_roots(field: &Arc<CycloField>, order: u32) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidParameter("root order must be positive".into()));
    }
    if !field.conductor().is_multiple_of(order) {
        return Err(Error::ConductorIncompatible { n: field.conductor(), required: order });
    }
    Ok(())
}

/// A fixed primitive `order`-th root of unity, `ζ_n^{n/order}`.
pub fn primitive_root(field: &Arc<CycloField>, order: u32) -> Result<CycloElem> {
    require_roots(field, order)?;
    Ok(field.root_of_unity((field.conductor() / order) as i64))
}

/// `W_m`: the `m²` points `(1 : ω^α : ω^β)`, `ω` a primitive `m`-th root of unity.
pub fn fermat_grid(m: u32, field: &Arc<CycloField>) -> Result<Configuration> {
    let omega = primitive_root(field, m)?;
    let powers: Vec<CycloElem> = (1..=m).map(|k| omega.pow(k as u64)).collect();
    let mut pts = Vec::with_capacity((m * m) as usize);
    for a in &powers {
        for b in &powers {
            pts.push(ProjPoint::new([field.one(), a.clone(), b.clone()])?);
        }
    }
    Ok(Configuration::new(ConfigKind::W, m, field, pts))
}

/// `X`: the coordinate points.
pub fn coordinate_points(field: &Arc<CycloField>) -> Configuration {
    let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|c| ProjPoint::from_ints(field, c).unwrap());
    Configuration::new(ConfigKind::X, 0, field, pts)
}

/// `S_m = W_m ∪ X`, the singular points of the Fermat arrangement of order `m`.
pub fn fermat_singular_points(m: u32, field: &Arc<CycloField>) -> Result<Configuration> {
    let mut s = fermat_grid(m, field)?.union(&coordinate_points(field), ConfigKind::S);
    s.m = m;
    Ok(s)
}

/// `Y_m = W_{2m} ∖ W_m`.
pub fn y_set(m: u32, field: &Arc<CycloField>) -> Result<Configuration> {
    let big = fermat_grid(2 * m, field)?;
    let small = fermat_grid(m, field)?;
    let mut y = big.difference(&small, ConfigKind::Y);
    y.m = m;
    Ok(y)
}

/// `Z_m = (W_{2m} ∖ W_m) ∪ X` in the given field.
pub fn diminished_set_in(m: u32, field: &Arc<CycloField>) -> Result<Configuration> {
    let s = fermat_singular_points(2 * m, field)?;
    let mut z = s.difference(&fermat_grid(m, field)?, ConfigKind::Z);
    z.m = m;
    Ok(z)
}

/// `Z_m` over its ambient field `Q(ζ_{lcm(2m, 6)})`.
pub fn diminished_set(m: u32) -> Result<Configuration> {
    diminished_set_in(m, &ambient_field(m)?)
}

fn xyz_ring(field: &Arc<CycloField>) -> Ring {
    Ring::new(field, &VarSet::xyz())
}

/// `(f_1, f_2, f_3) = (x^{2m} - y^{2m}, x^{2m} - z^{2m}, (x^m + z^m)(y^m + z^m))`.
pub fn generators_y(m: u32, field: &Arc<CycloField>) -> [MultiPoly; 3] {
    let r = xyz_ring(field);
    let (x, y, z) = (r.v("x"), r.v("y"), r.v("z"));
    let (xm, ym, zm) = (x.pow(m), y.pow(m), z.pow(m));
    [x.pow(2 * m) - y.pow(2 * m), x.pow(2 * m) - z.pow(2 * m), (&xm + &zm) * (&ym + &zm)]
}

/// The six degree `2m+1` generators `h_1..h_6` of `I(Z_m)`.
pub fn generators_z(m: u32, field: &Arc<CycloField>) -> [MultiPoly; 6] {
    let r = xyz_ring(field);
    let (x, y, z) = (r.v("x"), r.v("y"), r.v("z"));
    let (xm, ym, zm) = (x.pow(m), y.pow(m), z.pow(m));
    let xy = &xm + &ym;
    let xz = &xm + &zm;
    let yz = &ym + &zm;
    [
        &x * &(y.pow(2 * m) - z.pow(2 * m)),
        &y * &(x.pow(2 * m) - z.pow(2 * m)),
        &z * &(&xy * &yz),
        &z * &(&xy * &xz),
        &y * &(&xz * &yz),
        &x * &(&xz * &yz),
    ]
}

/// A linear form in `x,y,z` with a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineForm {
    pub label: usize,
    pub poly: MultiPoly,
}

impl LineForm {
    pub fn new(label: usize, poly: MultiPoly) -> Result<Self> {
        if poly.vars().len() != 3 || poly.homogeneous_degree() != Some(1) {
            return Err(Error::NotHomogeneous(1));
        }
        Ok(LineForm { label, poly })
    }

    /// `[α, β, γ]` for the line `αx + βy + γz`.
    pub fn coefficients(&self) -> [CycloElem; 3] {
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|e| self.poly.coefficient(&e))
    }

    pub fn contains(&self, p: &ProjPoint) -> Result<bool> {
        Ok(p.eval(&self.poly)?.is_zero())
    }

    /// Intersection point of two distinct lines.
    pub fn meet(&self, other: &LineForm) -> Result<ProjPoint> {
        let [a1, b1, c1] = self.coefficients();
        let [a2, b2, c2] = other.coefficients();
        ProjPoint::new([&b1 * &c2 - &c1 * &b2, &c1 * &a2 - &a1 * &c2, &a1 * &b2 - &b1 * &a2])
    }
}

/// The Fermat cubic together with its flexes and inflectional tangents.
#[derive(Clone, Debug)]
pub struct InflectionScene {
    pub field: Arc<CycloField>,
    /// `x³ + y³ + z³`
    pub fermat: MultiPoly,
    /// `xyz`, the Hessian (up to a constant).
    pub hessian: MultiPoly,
    /// `A_1..A_9`
    pub flexes: Vec<ProjPoint>,
    /// `ℓ_1..ℓ_9`; `ℓ_i` is tangent at `A_i`.
    pub lines: Vec<LineForm>,
    /// `(x³ + y³)(y³ + z³)(z³ + x³)`
    pub g3: MultiPoly,
}

/// Builds the flexes of the Fermat cubic, their tangents, and the product `g_3`.
pub fn inflection_scene(field: &Arc<CycloField>) -> Result<InflectionScene> {
    let eps = primitive_root(field, 3)?;
    let eps2 = eps.pow(2);
    let r = xyz_ring(field);
    let (x, y, z) = (r.v("x"), r.v("y"), r.v("z"));
    let one = field.one();
    let zero = field.zero();
    let units = [one.clone(), eps.clone(), eps2.clone()];

    let mut flexes = Vec::with_capacity(9);
    for u in &units {
        flexes.push(ProjPoint::new([one.clone(), -u, zero.clone()])?);
    }
    for u in &units {
        flexes.push(ProjPoint::new([one.clone(), zero.clone(), -u])?);
    }
    for u in &units {
        flexes.push(ProjPoint::new([zero.clone(), one.clone(), -u])?);
    }

    // tangent at (1 : -u : 0) is x + u^{-1} y, and similarly for the other two families
    let inverses = [one.clone(), eps2.clone(), eps.clone()];
    let mut lines = Vec::with_capacity(9);
    let pairs = [(&x, &y), (&x, &z), (&y, &z)];
    for (fam, (s, t)) in pairs.iter().enumerate() {
        for (k, u) in inverses.iter().enumerate() {
            let poly = (*s).clone() + t.scale(u);
            lines.push(LineForm::new(3 * fam + k + 1, poly)?);
        }
    }

    let (x3, y3, z3) = (x.pow(3), y.pow(3), z.pow(3));
    Ok(InflectionScene {
        field: field.clone(),
        fermat: &x3 + &y3 + z3.clone(),
        hessian: &(&x * &y) * &z,
        flexes,
        lines,
        g3: (&x3 + &y3) * (&y3 + &z3) * (&z3 + &x3),
    })
}

/// Order of contact of `curve` with `line` at `point`: the multiplicity of the
/// parameter of `point` as a root of the curve restricted to the line.
pub fn contact_order(curve: &MultiPoly, line: &LineForm, point: &ProjPoint) -> Result<u32> {
    if !line.contains(point)? {
        return Err(Error::NotOnLine);
    }
    let field = point.field();
    // second point on the line, not proportional to `point`
    let [a, b, c] = line.coefficients();
    let zero = field.zero();
    let candidates = [[b.clone(), -&a, zero.clone()], [c.clone(), zero.clone(), -&a], [zero, c, -&b]];
    let other = candidates
        .into_iter()
        .filter_map(|cand| ProjPoint::new(cand).ok())
        .find(|q| q != point)
        .ok_or(Error::NotOnLine)?;

    // restrict to s·point + t·other; the parameter of `point` is t = 0
    let st = VarSet::new(&["s", "t"])?;
    let r = Ring::new(field, &st);
    let (s, t) = (r.v("s"), r.v("t"));
    let images: Vec<MultiPoly> = (0..3).map(|i| s.scale(&point.coords()[i]) + t.scale(&other.coords()[i])).collect();
    let restricted = curve.compose(&st, &images)?;
    restricted.terms().map(|(m, _)| m.exponents()[1]).min().ok_or(Error::LineInCurve)
}

/// `true` iff `line` meets `curve` at `point` with contact order at least 3.
pub fn verify_tangency(curve: &MultiPoly, line: &LineForm, point: &ProjPoint) -> Result<bool> {
    Ok(contact_order(curve, line, point)? >= 3)
}

/// Intersection points of a line arrangement, split by how many lines pass through them.
#[derive(Clone, Debug)]
pub struct ArrangementPoints {
    /// Points on exactly two lines.
    pub double: Vec<ProjPoint>,
    /// Points on three or more lines, with the number of lines through them.
    pub higher: Vec<(ProjPoint, usize)>,
}

pub fn arrangement_points(lines: &[LineForm]) -> Result<ArrangementPoints> {
    let mut all = BTreeSet::new();
    for (i, l1) in lines.iter().enumerate() {
        for l2 in &lines[i + 1..] {
            all.insert(l1.meet(l2)?);
        }
    }
    let mut double = Vec::new();
    let mut higher = Vec::new();
    for p in all {
        let mut k = 0;
        for l in lines {
            if l.contains(&p)? {
                k += 1;
            }
        }
        if k == 2 {
            double.push(p);
        } else {
            higher.push((p, k));
        }
    }
    Ok(ArrangementPoints { double, higher })
}

/// Outcome of comparing the double points of the nine tangent lines with `W_6 ∖ W_3`.
#[derive(Clone, Debug)]
pub struct DoublePointCheck {
    pub double_points: usize,
    pub triple_points: usize,
    pub matches: bool,
}

pub fn double_points_crosscheck(scene: &InflectionScene) -> Result<DoublePointCheck> {
    let pts = arrangement_points(&scene.lines)?;
    let triple_points = pts.higher.iter().filter(|(_, k)| *k == 3).count();
    let double = Configuration::new(ConfigKind::Custom, 3, &scene.field, pts.double);
    let y3 = y_set(3, &scene.field)?;
    Ok(DoublePointCheck {
        double_points: double.len(),
        triple_points,
        matches: double.points() == y3.points() && pts.higher.len() == 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        let f = make_field(12).unwrap();
        assert_eq!(fermat_grid(1, &f).unwrap().points()[0], ProjPoint::from_ints(&f, [1, 1, 1]).unwrap());
        assert_eq!(fermat_grid(6, &f).unwrap().len(), 36);
        assert_eq!(fermat_grid(3, &f).unwrap().len(), 9);
        assert_eq!(fermat_grid(5, &f).unwrap_err(), Error::ConductorIncompatible { n: 12, required: 5 });
    }

    #[test]
    fn normalization_makes_points_comparable() {
        let f = make_field(6).unwrap();
        let p = ProjPoint::new([f.zero(), f.from_int(2), f.root_of_unity(1)]).unwrap();
        let q = ProjPoint::new([
            f.zero(),
            f.one(),
            &f.root_of_unity(1) * &f.from_rational(&num_rational::BigRational::new(1.into(), 2.into())),
        ])
        .unwrap();
        assert_eq!(p, q);
        assert_eq!(ProjPoint::from_ints(&f, [0, 0, 0]).unwrap_err(), Error::ZeroPoint);
    }

    #[test]
    fn diminished_sizes() {
        assert_eq!(diminished_set(1).unwrap().len(), 6);
        assert_eq!(diminished_set(3).unwrap().len(), 30);
        assert_eq!(diminished_set(4).unwrap().len(), 51);
    }

    #[test]
    fn h3_vanishes_at_third_coordinate_point() {
        let f = ambient_field(3).unwrap();
        let h = generators_z(3, &f);
        let x3 = ProjPoint::from_ints(&f, [0, 0, 1]).unwrap();
        assert!(x3.eval(&h[2]).unwrap().is_zero());
    }

    #[test]
    fn tangency_requires_incidence() {
        let f = ambient_field(3).unwrap();
        let scene = inflection_scene(&f).unwrap();
        assert_eq!(contact_order(&scene.fermat, &scene.lines[0], &scene.flexes[0]).unwrap(), 3);
        assert_eq!(verify_tangency(&scene.fermat, &scene.lines[0], &scene.flexes[3]).unwrap_err(), Error::NotOnLine);
    }
}
