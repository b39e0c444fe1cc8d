//! The per-`m` verification pipeline.

use std::sync::Arc;

use clap::ValueEnum;
use dimfermat_core::arrangements::*;
use dimfermat_core::linsys::{generation_check, hilbert_dim, unexpectedness_check_for};
use dimfermat_core::unexpected::*;
use dimfermat_core::{Certificate, ConfigKind, CycloField, Error, Result, Status, Witness};

use crate::emit::Format;

/// Groups of checks, in pipeline order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Configurations,
    Generators,
    Generation,
    Corollary,
    Unexpected,
    GammaMembership,
    Multiplicity,
    Dual,
    Bpf,
}

impl Check {
    pub fn all() -> Vec<Check> {
        Check::value_variants().to_vec()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub m: u32,
    pub commands: Vec<Check>,
    pub trials: u32,
    pub seed: u64,
    /// Upper degree for the generation checks; `2(2m+1)` for `Z_m` and `4m` for `Y_m` when unset.
    pub d_max_generation: Option<u32>,
    /// Search bound for base-point-freeness; `3(2m-2)+1` when unset.
    pub n_max_bpf: Option<u32>,
    pub output: Format,
}

impl RunConfig {
    pub fn new(m: u32) -> Self {
        RunConfig {
            m,
            commands: Check::all(),
            trials: 3,
            seed: 0,
            d_max_generation: None,
            n_max_bpf: None,
            output: Format::Text,
        }
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.m == 0 {
            return Err("m must be at least 1".into());
        }
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        if let Some(d) = self.d_max_generation {
            if d < 2 * self.m + 1 {
                return Err(format!("--d-max must be at least 2m+1 = {}", 2 * self.m + 1));
            }
        }
        Ok(())
    }

    pub fn d_max_z(&self) -> u32 {
        self.d_max_generation.unwrap_or(2 * (2 * self.m + 1))
    }

    pub fn d_max_y(&self) -> u32 {
        self.d_max_generation.unwrap_or(4 * self.m)
    }

    pub fn n_max(&self) -> u32 {
        self.n_max_bpf.unwrap_or_else(|| default_n_max(self.m))
    }
}

/// A failed certificate carrying the error message.
pub fn error_certificate(claim: &str, m: u32, e: &Error) -> Certificate {
    Certificate::new(claim, Status::Fail).param("m", m as i64).witness(Witness::map().with("error", e.to_string()))
}

fn guarded(claim: &str, m: u32, f: impl FnOnce() -> Result<Certificate>) -> Certificate {
    f().unwrap_or_else(|e| error_certificate(claim, m, &e))
}

fn renamed(mut c: Certificate, claim: &str) -> Certificate {
    c.claim = claim.to_string();
    c
}

pub fn configuration_counts(m: u32, field: &Arc<CycloField>) -> Result<Certificate> {
    let w = fermat_grid(m, field)?;
    let w2 = fermat_grid(2 * m, field)?;
    let x = coordinate_points(field);
    let y = y_set(m, field)?;
    let z = diminished_set_in(m, field)?;
    let mm = (m * m) as usize;
    let ok = w.len() == mm
        && w2.len() == 4 * mm
        && y.len() == 3 * mm
        && z.len() == 3 * mm + 3
        && y.points() == w2.difference(&w, ConfigKind::Y).points()
        && w.is_disjoint(&y)
        && x.is_disjoint(&y);
    Ok(Certificate::new("configuration-counts", Status::from_bool(ok)).param("m", m as i64).witness(
        Witness::map()
            .with("W_m", w.len())
            .with("W_2m", w2.len())
            .with("X", x.len())
            .with("Y_m", y.len())
            .with("Z_m", z.len())
            .with("expected_Z_m", 3 * mm + 3),
    ))
}

/// Tangent lines at the nine flexes of the Fermat cubic against `W_6 ∖ W_3`.
pub fn inflection_crosscheck(field: &Arc<CycloField>) -> Result<Certificate> {
    let scene = inflection_scene(field)?;
    let dp = double_points_crosscheck(&scene)?;
    let contacts = scene
        .lines
        .iter()
        .zip(&scene.flexes)
        .map(|(l, a)| contact_order(&scene.fermat, l, a))
        .collect::<Result<Vec<u32>>>()?;
    let product = scene.lines.iter().skip(1).fold(scene.lines[0].poly.clone(), |acc, l| acc * &l.poly);
    let ok = dp.matches && dp.triple_points == 3 && contacts.iter().all(|&c| c == 3) && product == scene.g3;
    Ok(Certificate::new("inflection-crosscheck", Status::from_bool(ok)).param("m", 3).witness(
        Witness::map()
            .with("double_points", dp.double_points)
            .with("triple_points", dp.triple_points)
            .with("double_points_equal_W6_minus_W3", dp.matches)
            .with("contact_orders", contacts)
            .with("product_is_g3", product == scene.g3),
    ))
}

pub fn generators_vanish_y(m: u32, field: &Arc<CycloField>) -> Result<Certificate> {
    let y = y_set(m, field)?;
    let w = fermat_grid(m, field)?;
    let fs = generators_y(m, field);
    let mut nonvanishing = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for p in y.points() {
            if !p.eval(f)?.is_zero() {
                nonvanishing.push(format!("f{} at {p}", i + 1));
            }
        }
    }
    let mut f3_zero_on_w = Vec::new();
    for p in w.points() {
        if p.eval(&fs[2])?.is_zero() {
            f3_zero_on_w.push(p.to_text());
        }
    }
    let ok = nonvanishing.is_empty() && f3_zero_on_w.is_empty();
    Ok(Certificate::new("lemma-generators-Y", Status::from_bool(ok)).param("m", m as i64).witness(
        Witness::map()
            .with("points_checked", y.len())
            .with("generators", fs.len())
            .with("nonvanishing", nonvanishing)
            .with("f3_nonzero_on_W_m", f3_zero_on_w.is_empty())
            .with("f3_zero_on_W_m", f3_zero_on_w),
    ))
}

pub fn generators_vanish_z(m: u32, field: &Arc<CycloField>) -> Result<Certificate> {
    let z = diminished_set_in(m, field)?;
    let hs = generators_z(m, field);
    let mut nonvanishing = Vec::new();
    for (i, h) in hs.iter().enumerate() {
        for p in z.points() {
            if !p.eval(h)?.is_zero() {
                nonvanishing.push(format!("h{} at {p}", i + 1));
            }
        }
    }
    Ok(Certificate::new("lemma-generators-Z", Status::from_bool(nonvanishing.is_empty())).param("m", m as i64).witness(
        Witness::map().with("points_checked", z.len()).with("generators", hs.len()).with("nonvanishing", nonvanishing),
    ))
}

/// `dim [I(Z_3)]_7 = 36 - 30`.
pub fn corollary_dimension(field: &Arc<CycloField>) -> Result<Certificate> {
    let z = diminished_set_in(3, field)?;
    let dim = hilbert_dim(&z, 7);
    let expected = 36 - z.len();
    Ok(Certificate::new("corollary-dimension", Status::from_bool(dim == expected && dim == 6))
        .param("m", 3)
        .param("degree", 7)
        .witness(Witness::map().with("monomials", 36usize).with("points", z.len()).with("dim", dim)))
}

fn unexpected_certificate(cfg: &RunConfig, field: &Arc<CycloField>) -> Result<Certificate> {
    let m = cfg.m;
    let z = diminished_set_in(m, field)?;
    let rep = unexpectedness_check_for(&z, 2 * m + 1, 3, cfg.trials, cfg.seed)?;
    if m >= 3 {
        Ok(rep.to_certificate("theorem-unexpected"))
    } else {
        // below m = 3 the property is only observed, not asserted
        Ok(rep.certificate_with_status("observation-unexpected", Status::from_bool(rep.conclusive)))
    }
}

fn run_check(cfg: &RunConfig, field: &Arc<CycloField>, check: Check, out: &mut Vec<Certificate>) {
    let m = cfg.m;
    match check {
        Check::Configurations => {
            out.push(guarded("configuration-counts", m, || configuration_counts(m, field)));
            if m == 3 {
                out.push(guarded("inflection-crosscheck", m, || inflection_crosscheck(field)));
            }
        }
        Check::Generators => {
            out.push(guarded("lemma-generators-Y", m, || generators_vanish_y(m, field)));
            out.push(guarded("lemma-generators-Z", m, || generators_vanish_z(m, field)));
        }
        Check::Generation => {
            out.push(guarded("generation-Y", m, || {
                let y = y_set(m, field)?;
                Ok(renamed(generation_check(&generators_y(m, field), &y, 2 * m, cfg.d_max_y())?, "generation-Y"))
            }));
            out.push(guarded("generation-Z", m, || {
                let z = diminished_set_in(m, field)?;
                Ok(renamed(generation_check(&generators_z(m, field), &z, 2 * m + 1, cfg.d_max_z())?, "generation-Z"))
            }));
        }
        Check::Corollary => {
            if m == 3 {
                out.push(guarded("corollary-dimension", m, || corollary_dimension(field)));
            }
        }
        Check::Unexpected => {
            let claim = if m >= 3 { "theorem-unexpected" } else { "observation-unexpected" };
            out.push(guarded(claim, m, || unexpected_certificate(cfg, field)));
        }
        Check::GammaMembership => {
            out.push(guarded("gamma-membership", m, || gamma_membership_in(m, field, cfg.trials, cfg.seed)));
        }
        Check::Multiplicity => {
            for (side, claim) in [(Side::Xyz, "mult-xyz"), (Side::Abc, "mult-abc")] {
                out.push(guarded(claim, m, || {
                    let g = gamma_in(m, field)?;
                    Ok(mult_certificate(&g, side)?.to_certificate(claim, m))
                }));
            }
        }
        Check::Dual => out.push(guarded("dual-expansion", m, || dual_expansion_check_in(m, field))),
        Check::Bpf => {
            let lambda = lambda_system_in(m, field);
            out.push(guarded("bpf", m, || bpf_check(lambda.as_ref().map_err(Clone::clone)?, cfg.n_max())));
            if m == 3 {
                out.push(guarded("bpf-case-analysis", m, || {
                    bpf_case_analysis_m3(lambda.as_ref().map_err(Clone::clone)?)
                }));
            }
        }
    }
}

/// Runs the selected checks for one `m` in pipeline order. Core errors become failed
/// certificates carrying the message.
pub fn run_report(cfg: &RunConfig) -> Result<Vec<Certificate>> {
    let field = ambient_field(cfg.m)?;
    let mut checks = cfg.commands.clone();
    checks.sort();
    checks.dedup();
    let mut out = Vec::new();
    for check in checks {
        run_check(cfg, &field, check, &mut out);
    }
    Ok(out)
}

/// [`run_report`] for several `m` concurrently; results come back in ascending `m`.
pub fn run_sweep(base: &RunConfig, ms: &[u32]) -> Result<Vec<Certificate>> {
    let mut ms = ms.to_vec();
    ms.sort_unstable();
    ms.dedup();
    let results: Vec<Result<Vec<Certificate>>> = std::thread::scope(|s| {
        let handles: Vec<_> = ms
            .iter()
            .map(|&m| {
                let cfg = RunConfig { m, ..base.clone() };
                s.spawn(move || run_report(&cfg))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("report worker panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// 0 if every certificate passed, 1 otherwise.
pub fn exit_code(certs: &[Certificate]) -> i32 {
    if certs.iter().all(Certificate::passed) {
        0
    } else {
        1
    }
}
