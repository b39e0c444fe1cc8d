//! Exact linear algebra on graded pieces of ideals in `K[x,y,z]`.
//!
//! Every dimension here comes from Gaussian elimination over the cyclotomic field:
//! leftmost nonzero pivot, rows taken in input order, so echelon forms (and hence
//! kernel bases) are deterministic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangements::{diminished_set, Configuration, ProjPoint};
use crate::certificate::{Certificate, Status, Witness};
use crate::cyclotomic::{CycloElem, CycloField};
use crate::multipoly::{monomials_of_degree, MultiPoly, VarSet};
use crate::{Error, Result};

/// Dense matrix over one cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Arc<CycloField>,
    cols: usize,
    rows: Vec<Vec<CycloElem>>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub cols: usize,
    /// Nonzero rows of the reduced form; row `i` has a 1 in column `pivots[i]`.
    pub rows: Vec<Vec<CycloElem>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right kernel: one vector per free column, with a 1 in that column.
    pub fn kernel(&self, field: &Arc<CycloField>) -> Vec<Vec<CycloElem>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![field.zero(); self.cols];
                v[free] = field.one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_zero() {
                        v[p] = -&row[free];
                    }
                }
                v
            })
            .collect()
    }
}

impl ExactMatrix {
    pub fn new(field: &Arc<CycloField>, cols: usize, rows: Vec<Vec<CycloElem>>) -> Result<Self> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::InvalidParameter(format!("row of length {} in a {cols}-column matrix", row.len())));
            }
            if let Some(bad) = row.iter().find(|e| e.field() != field) {
                return Err(Error::FieldMismatch { left: field.conductor(), right: bad.field().conductor() });
            }
        }
        Ok(ExactMatrix { field: field.clone(), cols, rows })
    }

    pub fn zeros(field: &Arc<CycloField>, rows: usize, cols: usize) -> Self {
        ExactMatrix { field: field.clone(), cols, rows: vec![vec![field.zero(); cols]; rows] }
    }

    pub fn identity(field: &Arc<CycloField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.rows[i][i] = field.one();
        }
        m
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<CycloElem>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloElem {
        &self.rows[r][c]
    }

    /// Appends the rows of `other` below these.
    pub fn stack(&self, other: &ExactMatrix) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::new(&self.field, self.cols, rows)
    }

    /// Forward elimination only; enough for the rank.
    fn forward(&self) -> (Vec<Vec<CycloElem>>, Vec<usize>) {
        let mut pending: Vec<Vec<CycloElem>> = self.rows.clone();
        let mut done: Vec<Vec<CycloElem>> = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let Some(pos) = pending.iter().position(|r| !r[col].is_zero()) else {
                continue;
            };
            let mut pivot_row = pending.remove(pos);
            let inv = pivot_row[col].inv().expect("nonzero pivot");
            for e in pivot_row[col..].iter_mut() {
                if !e.is_zero() {
                    *e = &*e * &inv;
                }
            }
            let support: Vec<usize> = (col + 1..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for row in pending.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = core::mem::replace(&mut row[col], self.field.zero());
                for &c in &support {
                    let t = &factor * &pivot_row[c];
                    row[c] -= &t;
                }
            }
            pending.retain(|r| r.iter().any(|e| !e.is_zero()));
            done.push(pivot_row);
            pivots.push(col);
            if pending.is_empty() {
                break;
            }
        }
        (done, pivots)
    }

    pub fn rank(&self) -> usize {
        self.forward().1.len()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let (mut rows, pivots) = self.forward();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let support: Vec<usize> = (p + 1..self.cols).filter(|&c| !rows[i][c].is_zero()).collect();
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let factor = core::mem::replace(&mut row[p], self.field.zero());
                for &c in &support {
                    let t = &factor * &pivot_row[c];
                    row[c] -= &t;
                }
            }
        }
        Echelon { cols: self.cols, rows, pivots }
    }

    pub fn kernel(&self) -> Vec<Vec<CycloElem>> {
        self.rref().kernel(&self.field)
    }

    pub fn mul_vec(&self, v: &[CycloElem]) -> Vec<CycloElem> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = self.field.zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Some `v` with `self · v = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[CycloElem]) -> Result<Option<Vec<CycloElem>>> {
        if rhs.len() != self.rows.len() {
            return Err(Error::InvalidParameter("right-hand side length".into()));
        }
        let rows = self.rows.iter().zip(rhs).map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        });
        let augmented = ExactMatrix::new(&self.field, self.cols + 1, rows.collect())?;
        let ech = augmented.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            v[p] = row[self.cols].clone();
        }
        Ok(Some(v))
    }
}

/// Where the basis of a [`GradedPiece`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceSource {
    /// Kernel of an interpolation matrix.
    Interpolation,
    /// Echelon basis of the multiples of some generators.
    GeneratorSpan,
}

/// A linearly independent family of forms of one degree in `x,y,z`.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: Vec<MultiPoly>,
    pub source: PieceSource,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn from_vectors(field: &Arc<CycloField>, degree: u32, vectors: Vec<Vec<CycloElem>>, source: PieceSource) -> Self {
        let vars = VarSet::xyz();
        let monos = monomials_of_degree(3, degree);
        let basis = vectors
            .into_iter()
            .map(|v| {
                let terms = monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero());
                MultiPoly::from_terms(field, &vars, terms).expect("consistent ring")
            })
            .collect();
        GradedPiece { degree, basis, source }
    }

    /// Coefficient matrix of the basis with respect to the degree-`d` monomials.
    pub fn coefficient_matrix(&self, field: &Arc<CycloField>) -> ExactMatrix {
        let monos = monomials_of_degree(3, self.degree);
        let rows = self.basis.iter().map(|p| monos.iter().map(|e| p.coefficient(e)).collect()).collect();
        ExactMatrix::new(field, monos.len(), rows).expect("consistent field")
    }

    /// Coordinates of `p` in this basis, if `p` lies in the span.
    pub fn coordinates_of(&self, p: &MultiPoly) -> Result<Option<Vec<CycloElem>>> {
        let field = p.field().clone();
        let monos = monomials_of_degree(3, self.degree);
        // columns are basis members, rows are monomials
        let rows = monos.iter().map(|e| self.basis.iter().map(|b| b.coefficient(e)).collect()).collect();
        let m = ExactMatrix::new(&field, self.basis.len(), rows)?;
        let rhs: Vec<CycloElem> = monos.iter().map(|e| p.coefficient(e)).collect();
        if p.terms().any(|(mono, _)| mono.degree() != self.degree) {
            return Ok(None);
        }
        m.solve(&rhs)
    }
}

fn power_table(c: &CycloElem, d: u32) -> Vec<CycloElem> {
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push(c.field().one());
    for k in 1..=d as usize {
        let next = &out[k - 1] * c;
        out.push(next);
    }
    out
}

/// One row per point: the degree-`d` monomials (in [`monomials_of_degree`] order)
/// evaluated at the point's normalized representative.
pub fn interpolation_matrix(points: &Configuration, d: u32) -> ExactMatrix {
    interpolation_matrix_of(points.field(), points.points(), d)
}

pub fn interpolation_matrix_of(field: &Arc<CycloField>, points: &[ProjPoint], d: u32) -> ExactMatrix {
    let monos = monomials_of_degree(3, d);
    let rows = points
        .iter()
        .map(|p| {
            let pw: Vec<Vec<CycloElem>> = p.coords().iter().map(|c| power_table(c, d)).collect();
            monos
                .iter()
                .map(|e| {
                    let xy = &pw[0][e[0] as usize] * &pw[1][e[1] as usize];
                    &xy * &pw[2][e[2] as usize]
                })
                .collect()
        })
        .collect();
    ExactMatrix { field: field.clone(), cols: monos.len(), rows }
}

/// `[I(Z)]_d` with an explicit basis.
pub fn kernel_basis(points: &Configuration, d: u32) -> GradedPiece {
    let m = interpolation_matrix(points, d);
    GradedPiece::from_vectors(points.field(), d, m.kernel(), PieceSource::Interpolation)
}

/// `dim [I(Z)]_d`.
pub fn hilbert_dim(points: &Configuration, d: u32) -> usize {
    let m = interpolation_matrix(points, d);
    m.num_cols() - m.rank()
}

fn multiples_matrix(field: &Arc<CycloField>, gens: &[MultiPoly], d: u32) -> Result<ExactMatrix> {
    let monos = monomials_of_degree(3, d);
    let index: BTreeMap<&[u32], usize> = monos.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let deg = g.homogeneous_degree().ok_or(Error::NotHomogeneous(0))?;
        if deg > d {
            continue;
        }
        for shift in monomials_of_degree(3, d - deg) {
            let mut row = vec![field.zero(); monos.len()];
            for (m, c) in g.terms() {
                let e: Vec<u32> = m.exponents().iter().zip(&shift).map(|(a, b)| a + b).collect();
                row[index[e.as_slice()]] = c.clone();
            }
            rows.push(row);
        }
    }
    ExactMatrix::new(field, monos.len(), rows)
}

/// Dimension and an echelon basis of the degree-`d` part of the ideal generated by `gens`.
pub fn generator_span(gens: &[MultiPoly], d: u32) -> Result<(usize, GradedPiece)> {
    let field = gens
        .first()
        .map(|g| g.field().clone())
        .ok_or_else(|| Error::InvalidParameter("empty generator list".into()))?;
    let m = multiples_matrix(&field, gens, d)?;
    let ech = m.rref();
    let piece = GradedPiece::from_vectors(&field, d, ech.rows, PieceSource::GeneratorSpan);
    Ok((piece.dim(), piece))
}

/// Rank of the degree-`d` multiples of `gens` (no basis).
pub fn generator_span_dim(gens: &[MultiPoly], d: u32) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(0);
    };
    Ok(multiples_matrix(first.field(), gens, d)?.rank())
}

/// Compares the ideal generated by `gens` with `I(points)` degree by degree on
/// `[d_min, d_max]`. Fails hard if some generator does not vanish on the points.
pub fn generation_check(gens: &[MultiPoly], points: &Configuration, d_min: u32, d_max: u32) -> Result<Certificate> {
    for (i, g) in gens.iter().enumerate() {
        for p in points.points() {
            if !p.eval(g)?.is_zero() {
                return Err(Error::GeneratorNotVanishing { index: i + 1, point: p.to_text() });
            }
        }
    }
    // direct containment spot check: the first multiple of each generator in degree d_min
    let mut sample_ok = true;
    for g in gens {
        let deg = g.homogeneous_degree().ok_or(Error::NotHomogeneous(0))?;
        if deg > d_min {
            continue;
        }
        let x = MultiPoly::var(g.field(), g.vars(), "x")?;
        let multiple = g * &x.pow(d_min - deg);
        for p in points.points() {
            sample_ok &= p.eval(&multiple)?.is_zero();
        }
    }

    let mut degrees = Vec::new();
    let mut all_equal = sample_ok;
    for d in d_min..=d_max {
        let span = generator_span_dim(gens, d)?;
        let hilb = hilbert_dim(points, d);
        all_equal &= span == hilb;
        degrees.push(
            Witness::map()
                .with("degree", d)
                .with("span_dim", span)
                .with("hilbert_dim", hilb)
                .with("equal", span == hilb),
        );
    }
    Ok(Certificate::new("ideal-generation", Status::from_bool(all_equal))
        .param("m", points.m as i64)
        .param("d_min", d_min as i64)
        .param("d_max", d_max as i64)
        .witness(
            Witness::map()
                .with("configuration", points.kind.label())
                .with("points", points.len())
                .with("generators", gens.len())
                .with("containment_sample", sample_ok)
                .with("degrees", Witness::List(degrees)),
        ))
}

/// Number of conditions a point of multiplicity `mult` imposes on plane curves.
pub fn fat_point_conditions(mult: u32) -> usize {
    (mult as usize * (mult as usize + 1)) / 2
}

/// Conditions for a point of multiplicity `mult` at `p`: rows are the partial
/// derivatives of order exactly `mult - 1`, columns are the basis members of `piece`.
/// For forms of one degree the lower-order partials at `p` are combinations of these
/// (Euler's identity), so the `C(mult+1, 2)` rows carry all conditions.
pub fn fat_point_rows(piece: &GradedPiece, p: &ProjPoint, mult: u32) -> Result<ExactMatrix> {
    if mult == 0 {
        return Err(Error::InvalidParameter("multiplicity must be at least 1".into()));
    }
    if p.has_zero_coordinate() {
        return Err(Error::InvalidParameter(format!("point {p} has a zero coordinate")));
    }
    let field = p.field().clone();
    let mut rows = Vec::new();
    for idx in monomials_of_degree(3, mult - 1) {
        let row = piece.basis.iter().map(|b| p.eval(&b.derivative(&idx))).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    ExactMatrix::new(&field, piece.dim(), rows)
}

/// One random specialization of the fat point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub seed: u64,
    pub point: [i64; 3],
    pub rank: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnexpectednessReport {
    pub m: u32,
    pub d: u32,
    pub mult: u32,
    pub dim_iz_d: usize,
    pub fatpoint_conditions_expected: usize,
    /// Smallest dimension observed over the trials.
    pub dim_actual: usize,
    pub expected: usize,
    pub unexpected: bool,
    /// All trials produced the same dimension.
    pub conclusive: bool,
    pub trials: Vec<Trial>,
}

impl UnexpectednessReport {
    pub fn to_certificate(&self, claim: &str) -> Certificate {
        let status = if !self.conclusive { Status::Inconclusive } else { Status::from_bool(self.unexpected) };
        self.certificate_with_status(claim, status)
    }

    pub fn certificate_with_status(&self, claim: &str, status: Status) -> Certificate {
        let trials: Vec<Witness> = self
            .trials
            .iter()
            .map(|t| {
                Witness::map()
                    .with("seed", t.seed as i64)
                    .with("point", Witness::List(t.point.iter().map(|&c| Witness::Int(c)).collect()))
                    .with("rank", t.rank)
                    .with("dim", t.dim)
            })
            .collect();
        Certificate::new(claim, status)
            .param("m", self.m as i64)
            .param("degree", self.d as i64)
            .param("mult", self.mult as i64)
            .witness(
                Witness::map()
                    .with("dim_IZ_d", self.dim_iz_d)
                    .with("fatpoint_conditions_expected", self.fatpoint_conditions_expected)
                    .with("expected", self.expected)
                    .with("dim_actual", self.dim_actual)
                    .with("unexpected", self.unexpected)
                    .with("conclusive", self.conclusive)
                    .with("trials", Witness::List(trials)),
            )
    }
}

/// Random point with integer coordinates in `[1, 10^6]`, drawn from a seeded stream.
pub fn random_point(seed: u64) -> [i64; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [0; 3].map(|_| rng.gen_range(1..=1_000_000i64))
}

/// Dimension of `[I(Z)]_d` with a fat point of multiplicity `mult` at random points.
pub fn unexpectedness_check_for(
    points: &Configuration,
    d: u32,
    mult: u32,
    trials: u32,
    seed: u64,
) -> Result<UnexpectednessReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    let piece = kernel_basis(points, d);
    let dim = piece.dim();
    let conditions = fat_point_conditions(mult);
    let mut out = Vec::new();
    for t in 0..trials as u64 {
        let s = seed.wrapping_add(t);
        let coords = random_point(s);
        let p = ProjPoint::from_ints(points.field(), coords)?;
        let rank = fat_point_rows(&piece, &p, mult)?.rank();
        out.push(Trial { seed: s, point: coords, rank, dim: dim - rank });
    }
    let dim_actual = out.iter().map(|t| t.dim).min().unwrap();
    let conclusive = out.iter().all(|t| t.dim == dim_actual);
    let expected = dim.saturating_sub(conditions);
    Ok(UnexpectednessReport {
        m: points.m,
        d,
        mult,
        dim_iz_d: dim,
        fatpoint_conditions_expected: conditions,
        dim_actual,
        expected,
        unexpected: dim_actual > expected,
        conclusive,
        trials: out,
    })
}

/// [`unexpectedness_check_for`] on `Z_m`.
pub fn unexpectedness_check(m: u32, d: u32, mult: u32, trials: u32, seed: u64) -> Result<UnexpectednessReport> {
    unexpectedness_check_for(&diminished_set(m)?, d, mult, trials, seed)
}

/// Human-readable summary of the per-degree comparison.
pub fn describe_generation(cert: &Certificate) -> String {
    let mut s = String::new();
    if let Some(Witness::List(items)) = cert.witness.get("degrees") {
        for it in items {
            let g = |k| it.get(k).and_then(Witness::as_int).unwrap_or(-1);
            s.push_str(&format!("d={} span={} hilbert={}\n", g("degree"), g("span_dim"), g("hilbert_dim")));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{ambient_field, coordinate_points};
    use crate::make_field;
    use crate::multipoly::Ring;

    #[test]
    fn trivial_matrices() {
        let f = make_field(3).unwrap();
        assert_eq!(ExactMatrix::identity(&f, 4).kernel().len(), 0);
        assert_eq!(ExactMatrix::zeros(&f, 3, 5).kernel().len(), 5);
        let empty = Configuration::new(crate::ConfigKind::Custom, 0, &f, []);
        let m = interpolation_matrix(&empty, 4);
        assert_eq!((m.num_rows(), m.num_cols()), (0, 15));
        assert_eq!(m.kernel().len(), 15);
    }

    #[test]
    fn coordinate_points_small_degrees() {
        let f = make_field(6).unwrap();
        let x = coordinate_points(&f);
        let m = interpolation_matrix(&x, 1);
        assert_eq!((m.num_rows(), m.num_cols()), (3, 3));
        assert_eq!(m.rank(), 3);
        assert_eq!(hilbert_dim(&x, 2), 3);
    }

    #[test]
    fn span_of_linear_generators() {
        let r = Ring::new(&make_field(6).unwrap(), &VarSet::xyz());
        assert_eq!(generator_span_dim(&[r.v("x")], 2).unwrap(), 3);
        assert_eq!(generator_span_dim(&[r.v("x"), r.v("y")], 1).unwrap(), 2);
        let (dim, piece) = generator_span(&[r.v("x"), r.v("y")], 2).unwrap();
        assert_eq!(dim, 5);
        assert_eq!(piece.source, PieceSource::GeneratorSpan);
    }

    #[test]
    fn solve_finds_consistent_solutions_only() {
        let f = make_field(3).unwrap();
        let z = f.root_of_unity(1);
        let m =
            ExactMatrix::new(&f, 2, vec![vec![f.one(), z.clone()], vec![f.from_int(2), &z * &f.from_int(2)]]).unwrap();
        let v = m.solve(&[f.one(), f.from_int(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&v), vec![f.one(), f.from_int(2)]);
        assert!(m.solve(&[f.one(), f.one()]).unwrap().is_none());
    }

    #[test]
    fn fat_point_row_counts() {
        let f = ambient_field(3).unwrap();
        let z = crate::arrangements::diminished_set_in(3, &f).unwrap();
        let piece = kernel_basis(&z, 7);
        let p = ProjPoint::from_ints(&f, [2, 3, 5]).unwrap();
        assert_eq!(fat_point_rows(&piece, &p, 1).unwrap().num_rows(), 1);
        assert_eq!(fat_point_rows(&piece, &p, 3).unwrap().num_rows(), 6);
        let bad = ProjPoint::from_ints(&f, [0, 3, 5]).unwrap();
        assert!(fat_point_rows(&piece, &bad, 3).is_err());
    }

    #[test]
    fn random_points_are_reproducible_and_in_range() {
        assert_eq!(random_point(7), random_point(7));
        for s in 0..20 {
            assert!(random_point(s).iter().all(|&c| (1..=1_000_000).contains(&c)));
        }
    }
}
