//! Registered verification sweeps.
//!
//! Each claim names a structural property of quandle surjections and an
//! instance space over all small quandles. Sweeps run the space exhaustively
//! up to a per-claim cutoff and draw seeded samples for orders above it,
//! reporting every counterexample in a line-oriented text format. Claims
//! proved in general are expected to come back clean; the two failure sweeps
//! (kernel-pair preservation is checked elsewhere, left cancellation for the
//! rigid class here) are expected to produce counterexamples.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::congruence::{
    congruences_of, direct_image, inn_orbit_congruence, kernel_congruence, meet,
    relations_permute, Relation,
};
use crate::enumerate::{
    enumerate_homs, enumerate_quandles, enumerate_surjective_homs, sample_quandles, subgroups,
    EnumConfig,
};
use crate::error::{Error, Result};
use crate::factorisation::{
    check_admissibility_instance, classify, factor_em, factor_rigid, orthogonal_fill,
    special_pushout_comparison_surjective, unit_square_comparison,
};
use crate::group::PermGroup;
use crate::hom::Hom;
use crate::inner::{inn_hom, inner_group, pi0_map};
use crate::quandle::Quandle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    /// Orbit congruences of normal subgroups permute with every congruence.
    Permutability,
    /// The E/M factorisation recomposes with legs in the right classes.
    FactorEm,
    /// The rigid factorisation recomposes with an E1 leg and a rigid leg.
    FactorRigid,
    /// E1 implies E and M implies M1.
    Inclusions,
    /// Left cancellation for class E.
    CancellationE,
    /// Left cancellation for class E1 — expected to fail.
    CancellationE1,
    /// The component reflection preserves pullbacks of units along
    /// surjections of trivial quandles.
    Admissibility,
    /// Comparison maps of pushouts along E1-maps are surjective.
    SpecialPushout,
    /// Direct images of inner orbit congruences are inner orbit congruences.
    InducedImage,
    /// The congruence criteria agree with the reflection criteria for E and M.
    Characterizations,
    /// Diagonal fills for (E, M) squares exist and are unique.
    Orthogonality,
    /// The component reflection preserves kernel pairs — expected to fail.
    KernelPairPreservation,
}

impl ClaimId {
    pub fn all() -> &'static [ClaimId] {
        &[
            ClaimId::Permutability,
            ClaimId::FactorEm,
            ClaimId::FactorRigid,
            ClaimId::Inclusions,
            ClaimId::CancellationE,
            ClaimId::CancellationE1,
            ClaimId::Admissibility,
            ClaimId::SpecialPushout,
            ClaimId::InducedImage,
            ClaimId::Characterizations,
            ClaimId::Orthogonality,
            ClaimId::KernelPairPreservation,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Permutability => "permutability",
            ClaimId::FactorEm => "factor-em",
            ClaimId::FactorRigid => "factor-rigid",
            ClaimId::Inclusions => "inclusions",
            ClaimId::CancellationE => "cancellation-e",
            ClaimId::CancellationE1 => "cancellation-e1",
            ClaimId::Admissibility => "admissibility",
            ClaimId::SpecialPushout => "special-pushout",
            ClaimId::InducedImage => "induced-image",
            ClaimId::Characterizations => "characterizations",
            ClaimId::Orthogonality => "orthogonality",
            ClaimId::KernelPairPreservation => "kernel-pair-preservation",
        }
    }

    /// Largest order swept exhaustively; sampling takes over above it. The
    /// rigid-cancellation counterexample needs order five, squares for the
    /// orthogonality check grow fourth-power, everything else stops at four.
    pub fn exhaustive_cutoff(self) -> usize {
        match self {
            ClaimId::CancellationE1 => 5,
            ClaimId::Orthogonality => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::all()
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub claim: ClaimId,
    pub instances_checked: u64,
    pub holds: bool,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    fn new(claim: ClaimId, instances_checked: u64, counterexamples: Vec<String>) -> Self {
        SweepReport {
            claim,
            instances_checked,
            holds: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            writeln!(
                f,
                "{}: holds ({} instances checked)",
                self.claim, self.instances_checked
            )?;
        } else {
            writeln!(
                f,
                "{}: fails ({} instances checked, {} counterexamples)",
                self.claim,
                self.instances_checked,
                self.counterexamples.len()
            )?;
            for line in &self.counterexamples {
                writeln!(f, "counterexample claim={} {}", self.claim, line)?;
            }
        }
        Ok(())
    }
}

/// One-line table serialization: rows joined by `;` inside braces.
pub fn inline_table(q: &Quandle) -> String {
    let rows: Vec<String> = q
        .table()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("{{{}}}", rows.join(";"))
}

pub fn inline_map(map: &[usize]) -> String {
    format!(
        "[{}]",
        map.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn inline_group(g: &PermGroup) -> String {
    let elems: Vec<String> = g
        .sorted_elements()
        .iter()
        .map(|p| inline_map(p.images()))
        .collect();
    format!("<{}>", elems.join(";"))
}

/// Runs the registered sweep for `claim` under `cfg`. Deterministic for a
/// fixed configuration.
pub fn run_sweep(claim: ClaimId, cfg: &EnumConfig) -> Result<SweepReport> {
    if cfg.max_order == 0 {
        return Err(Error::PreconditionViolated("max_order must be at least 1"));
    }
    let (checked, counterexamples) = match claim {
        ClaimId::Permutability => sweep_permutability(cfg)?,
        ClaimId::FactorEm => sweep_surjections(cfg, claim, check_factor_em)?,
        ClaimId::FactorRigid => sweep_surjections(cfg, claim, check_factor_rigid)?,
        ClaimId::Inclusions => sweep_surjections(cfg, claim, check_inclusions)?,
        ClaimId::CancellationE => sweep_cancellation(cfg, claim, is_in_e)?,
        ClaimId::CancellationE1 => sweep_cancellation(cfg, claim, is_in_e1)?,
        ClaimId::Admissibility => sweep_admissibility(cfg)?,
        ClaimId::SpecialPushout => sweep_special_pushout(cfg)?,
        ClaimId::InducedImage => sweep_surjections(cfg, claim, check_induced_image)?,
        ClaimId::Characterizations => sweep_surjections(cfg, claim, check_characterizations)?,
        ClaimId::Orthogonality => sweep_orthogonality(cfg)?,
        ClaimId::KernelPairPreservation => {
            sweep_surjections(cfg, claim, check_kernel_pair_preservation)?
        }
    };
    Ok(SweepReport::new(claim, checked, counterexamples))
}

/// Quandles of one order: exhaustive below the cutoff, seeded samples above.
fn pool(order: usize, cfg: &EnumConfig, cutoff: usize) -> Result<Vec<Quandle>> {
    if order <= cutoff {
        enumerate_quandles(order, cfg.up_to_iso)
    } else {
        let seed = cfg.seed.wrapping_mul(0x9E3779B9).wrapping_add(order as u64);
        Ok(sample_quandles(order, cfg.sample_budget, seed))
    }
}

fn pools_up_to(cfg: &EnumConfig, cutoff: usize) -> Result<Vec<Vec<Quandle>>> {
    let mut out = vec![Vec::new()];
    for o in 1..=cfg.max_order {
        out.push(pool(o, cfg, cutoff)?);
    }
    Ok(out)
}

fn sweep_permutability(cfg: &EnumConfig) -> Result<(u64, Vec<String>)> {
    let cutoff = ClaimId::Permutability.exhaustive_cutoff();
    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for order in 1..=cfg.max_order {
        for q in pool(order, cfg, cutoff)? {
            let inn = inner_group(&q)?;
            let normals = subgroups(&inn, true)?;
            let congs = congruences_of(&q);
            for n in &normals {
                let orbit = Relation::new(q.clone(), n.orbit_partition().pairs());
                for r in &congs {
                    checked += 1;
                    if !relations_permute(&r.to_relation(), &orbit)? {
                        cxs.push(format!(
                            "q={} congruence={} subgroup={}",
                            inline_table(&q),
                            r.partition(),
                            inline_group(n)
                        ));
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}

/// Iterates all surjections between enumerated quandles (domain order up to
/// `cfg.max_order`, codomain order bounded by the claim cutoff) and applies
/// a per-instance check returning an optional counterexample payload.
fn sweep_surjections(
    cfg: &EnumConfig,
    claim: ClaimId,
    check: impl Fn(&Hom) -> Result<Option<String>>,
) -> Result<(u64, Vec<String>)> {
    let cutoff = claim.exhaustive_cutoff();
    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for order in 1..=cfg.max_order {
        let doms = pool(order, cfg, cutoff)?;
        let mut cods = Vec::new();
        for k in 1..=order.min(cutoff) {
            cods.extend(enumerate_quandles(k, cfg.up_to_iso)?);
        }
        for a in &doms {
            for b in &cods {
                for f in enumerate_surjective_homs(a, b) {
                    checked += 1;
                    if let Some(detail) = check(&f)? {
                        cxs.push(format!(
                            "a={} b={} f={} {}",
                            inline_table(a),
                            inline_table(b),
                            inline_map(f.map()),
                            detail
                        ));
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}

fn check_factor_em(f: &Hom) -> Result<Option<String>> {
    let fac = factor_em(f)?;
    if fac.second.compose(&fac.first)? != *f {
        return Ok(Some("reason=recomposition".into()));
    }
    if !classify(&fac.first)?.in_e {
        return Ok(Some("reason=first-not-in-e".into()));
    }
    if !classify(&fac.second)?.in_m {
        return Ok(Some("reason=second-not-in-m".into()));
    }
    Ok(None)
}

fn check_factor_rigid(f: &Hom) -> Result<Option<String>> {
    let fac = factor_rigid(f)?;
    if fac.second.compose(&fac.first)? != *f {
        return Ok(Some("reason=recomposition".into()));
    }
    if !classify(&fac.first)?.in_e1 {
        return Ok(Some("reason=first-not-in-e1".into()));
    }
    if !inn_hom(&fac.second)?.is_isomorphism() {
        return Ok(Some("reason=second-not-rigid".into()));
    }
    Ok(None)
}

/// The four memberships recomputed from first principles, bypassing the
/// constructor assertions in `classify`.
fn raw_classes(f: &Hom) -> Result<(bool, bool, bool, bool)> {
    let eq = kernel_congruence(f);
    let sim = inn_orbit_congruence(f.dom())?;
    let in_e = eq.partition().refines(sim.partition());
    let in_m = meet(&eq, &sim)?.is_diagonal();
    let ih = inn_hom(f)?;
    let in_e1 = eq.partition() == &ih.kernel().orbit_partition();
    let in_m1 = ih.is_isomorphism();
    Ok((in_e, in_m, in_e1, in_m1))
}

fn check_inclusions(f: &Hom) -> Result<Option<String>> {
    let (in_e, in_m, in_e1, in_m1) = raw_classes(f)?;
    if in_e1 && !in_e {
        return Ok(Some("reason=e1-without-e".into()));
    }
    if in_m && !in_m1 {
        return Ok(Some("reason=m-without-m1".into()));
    }
    Ok(None)
}

fn check_induced_image(f: &Hom) -> Result<Option<String>> {
    let image = direct_image(f, &inn_orbit_congruence(f.dom())?.to_relation())?;
    let target = inn_orbit_congruence(f.cod())?.to_relation();
    if image != target {
        return Ok(Some("reason=induced-image".into()));
    }
    Ok(None)
}

fn check_characterizations(f: &Hom) -> Result<Option<String>> {
    let eq = kernel_congruence(f);
    let sim = inn_orbit_congruence(f.dom())?;
    let e_congruence = eq.partition().refines(sim.partition());
    let e_reflection = pi0_map(f)?.is_bijective();
    if e_congruence != e_reflection {
        return Ok(Some("reason=e-criteria-disagree".into()));
    }
    let m_congruence = meet(&eq, &sim)?.is_diagonal();
    let comparison = unit_square_comparison(f)?;
    // the canonical comparison of a unit square is always surjective
    if !comparison.is_surjective() {
        return Ok(Some("reason=unit-comparison-not-surjective".into()));
    }
    let m_pullback = comparison.is_bijective();
    if m_congruence != m_pullback {
        return Ok(Some("reason=m-criteria-disagree".into()));
    }
    Ok(None)
}

fn check_kernel_pair_preservation(f: &Hom) -> Result<Option<String>> {
    if !crate::factorisation::pi0_preserves_kernel_pair(f)? {
        return Ok(Some("reason=kernel-pair-not-preserved".into()));
    }
    Ok(None)
}

fn is_in_e(f: &Hom) -> Result<bool> {
    let eq = kernel_congruence(f);
    let sim = inn_orbit_congruence(f.dom())?;
    Ok(eq.partition().refines(sim.partition()))
}

fn is_in_e1(f: &Hom) -> Result<bool> {
    let eq = kernel_congruence(f);
    let ih = inn_hom(f)?;
    Ok(eq.partition() == &ih.kernel().orbit_partition())
}

/// Left-cancellation sweep for a class membership predicate: whenever
/// `f ∘ g` and `f` are members, `g` must be. Triples run over all
/// composable pairs of surjections among enumerated quandles.
fn sweep_cancellation(
    cfg: &EnumConfig,
    claim: ClaimId,
    member: impl Fn(&Hom) -> Result<bool>,
) -> Result<(u64, Vec<String>)> {
    let cutoff = claim.exhaustive_cutoff();
    let pools = pools_up_to(cfg, cutoff)?;
    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for xo in 1..=cfg.max_order.min(cutoff) {
        for x in &pools[xo] {
            // second legs out of x, with membership computed once
            let mut fs: Vec<(Hom, bool)> = Vec::new();
            for mo in 1..=xo {
                for m in enumerate_quandles(mo, cfg.up_to_iso)? {
                    for f in enumerate_surjective_homs(x, &m) {
                        let f_member = member(&f)?;
                        fs.push((f, f_member));
                    }
                }
            }
            for ao in xo..=cfg.max_order {
                for a in &pools[ao] {
                    for g in enumerate_surjective_homs(a, x) {
                        let mut g_member: Option<bool> = None;
                        for (f, f_in) in &fs {
                            checked += 1;
                            if !*f_in {
                                continue;
                            }
                            let fg = f.compose(&g)?;
                            if !member(&fg)? {
                                continue;
                            }
                            let g_in = match g_member {
                                Some(v) => v,
                                None => {
                                    let v = member(&g)?;
                                    g_member = Some(v);
                                    v
                                }
                            };
                            if !g_in {
                                cxs.push(format!(
                                    "a={} x={} m={} g={} f={}",
                                    inline_table(a),
                                    inline_table(x),
                                    inline_table(f.cod()),
                                    inline_map(g.map()),
                                    inline_map(f.map())
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}

fn sweep_admissibility(cfg: &EnumConfig) -> Result<(u64, Vec<String>)> {
    let cutoff = ClaimId::Admissibility.exhaustive_cutoff();
    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for order in 1..=cfg.max_order {
        for b in pool(order, cfg, cutoff)? {
            let components = crate::inner::pi0(&b)?;
            let k = components.components.num_classes();
            for xo in k..=cfg.max_order {
                let x = Quandle::trivial(xo);
                for phi in enumerate_surjective_homs(&x, &components.quotient) {
                    checked += 1;
                    if !check_admissibility_instance(&b, &phi)? {
                        cxs.push(format!(
                            "b={} x_order={} phi={}",
                            inline_table(&b),
                            xo,
                            inline_map(phi.map())
                        ));
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}

fn sweep_special_pushout(cfg: &EnumConfig) -> Result<(u64, Vec<String>)> {
    let cutoff = ClaimId::SpecialPushout.exhaustive_cutoff();
    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for order in 1..=cfg.max_order {
        let doms = pool(order, cfg, cutoff)?;
        let mut cods = Vec::new();
        for k in 1..=order.min(cutoff) {
            cods.extend(enumerate_quandles(k, cfg.up_to_iso)?);
        }
        for a in &doms {
            let mut outs: Vec<Hom> = Vec::new();
            for b in &cods {
                outs.extend(enumerate_surjective_homs(a, b));
            }
            let e1_legs: Vec<&Hom> = outs
                .iter()
                .filter_map(|f| match is_in_e1(f) {
                    Ok(true) => Some(Ok(f)),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                })
                .collect::<Result<_>>()?;
            for f in e1_legs {
                for g in &outs {
                    checked += 1;
                    if !special_pushout_comparison_surjective(f, g)? {
                        cxs.push(format!(
                            "a={} b={} c={} f={} g={}",
                            inline_table(a),
                            inline_table(f.cod()),
                            inline_table(g.cod()),
                            inline_map(f.map()),
                            inline_map(g.map())
                        ));
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}

type HomCache = HashMap<(Vec<Vec<usize>>, Vec<Vec<usize>>), Vec<Hom>>;

fn sweep_orthogonality(cfg: &EnumConfig) -> Result<(u64, Vec<String>)> {
    let cutoff = ClaimId::Orthogonality.exhaustive_cutoff();
    let max = cfg.max_order.min(cutoff);
    let mut quandles = Vec::new();
    for o in 1..=max {
        quandles.extend(enumerate_quandles(o, cfg.up_to_iso)?);
    }

    // surjections with classes, and a cache of full hom-sets between pairs
    let mut e_legs: Vec<Hom> = Vec::new();
    let mut m_legs: Vec<Hom> = Vec::new();
    for a in &quandles {
        for b in &quandles {
            if b.order() > a.order() {
                continue;
            }
            for f in enumerate_surjective_homs(a, b) {
                let (in_e, in_m, _, _) = raw_classes(&f)?;
                if in_e {
                    e_legs.push(f.clone());
                }
                if in_m {
                    m_legs.push(f);
                }
            }
        }
    }
    let mut hom_cache: HomCache = HashMap::new();
    let mut homs = |a: &Quandle, b: &Quandle| -> Vec<Hom> {
        hom_cache
            .entry((a.table().to_vec(), b.table().to_vec()))
            .or_insert_with(|| enumerate_homs(a, b))
            .clone()
    };

    let mut checked = 0u64;
    let mut cxs = Vec::new();
    for e in &e_legs {
        for m in &m_legs {
            let us = homs(e.dom(), m.dom());
            let vs = homs(e.cod(), m.cod());
            let fills = homs(e.cod(), m.dom());
            for u in &us {
                let mu = m.compose(u)?;
                for v in &vs {
                    if v.compose(e)? != mu {
                        continue;
                    }
                    checked += 1;
                    // brute-force oracle: every hom making both triangles commute
                    let brute: Vec<&Hom> = fills
                        .iter()
                        .filter(|w| {
                            w.compose(e).expect("composable") == *u
                                && m.compose(w).expect("composable") == *v
                        })
                        .collect();
                    let constructed = orthogonal_fill(e, m, u, v);
                    let line = |reason: &str| {
                        format!(
                            "a={} b={} c={} d={} e={} m={} u={} v={} reason={}",
                            inline_table(e.dom()),
                            inline_table(e.cod()),
                            inline_table(m.dom()),
                            inline_table(m.cod()),
                            inline_map(e.map()),
                            inline_map(m.map()),
                            inline_map(u.map()),
                            inline_map(v.map()),
                            reason
                        )
                    };
                    match constructed {
                        Ok(w) => {
                            if brute.len() != 1 || *brute[0] != w {
                                cxs.push(line("fill-not-unique"));
                            }
                        }
                        Err(_) => cxs.push(line("no-fill")),
                    }
                }
            }
        }
    }
    Ok((checked, cxs))
}
