//! Class membership and factorisations for surjective homomorphisms, plus
//! the pullback/pushout machinery they rest on.
//!
//! For a surjection `f : A → B` write `Eq(f)` for its kernel congruence and
//! `~Inn(A)` for the orbit congruence of the inner group. The four classes:
//!
//! * `E`:  `Eq(f) ⊆ ~Inn(A)` — equivalently, the component map of `f` is a
//!   bijection. Both routes are computed and must agree.
//! * `M`:  `Eq(f) ∩ ~Inn(A) = Δ` — equivalently, the unit square of `f` is
//!   a pullback (`f` is a trivial extension).
//! * `E1`: `Eq(f)` equals the orbit congruence of `Ker(Inn(f))`.
//! * `M1`: `Inn(f)` is an isomorphism (`f` is a rigid quotient).
//!
//! `E1 ⊆ E` and `M ⊆ M1`; each surjection factors as an `E`-map followed by
//! an `M`-map (quotient by `Eq(f) ∩ ~Inn(A)`) and as an `E1`-map followed by
//! an `M1`-map (quotient by the kernel orbits of `Inn(f)`).

use std::collections::HashMap;

use crate::congruence::{
    inn_orbit_congruence, join, kernel_congruence, meet, orbit_congruence, quotient, Congruence,
    OrbitRelation,
};
use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::inner::{inn_hom, pi0, pi0_map};
use crate::perm::Permutation;
use crate::quandle::Quandle;

/// Membership report for the four classes, with witnesses for every `false`
/// entry.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub in_e: bool,
    pub in_m: bool,
    pub in_e1: bool,
    pub in_m1: bool,
    /// Pair identified by `f` but lying in different components.
    pub e_witness: Option<(usize, usize)>,
    /// Non-diagonal pair in `Eq(f) ∩ ~Inn(dom f)`.
    pub m_witness: Option<(usize, usize)>,
    /// Pair in `Eq(f)` outside the kernel orbit congruence.
    pub e1_witness: Option<E1Witness>,
    /// Non-identity element of `Ker(Inn(f))`.
    pub m1_witness: Option<Permutation>,
}

/// Evidence that a surjection is not in `E1`: a kernel pair not linked by
/// any element of `Ker(Inn(f))`. When some inner automorphism links the pair
/// at all, one is recorded together with its (necessarily non-identity)
/// image.
#[derive(Debug, Clone)]
pub struct E1Witness {
    pub pair: (usize, usize),
    pub link: Option<Permutation>,
    pub link_image: Option<Permutation>,
}

/// Both factorisations share this shape: `second ∘ first` is the original
/// map and both legs are surjective.
#[derive(Debug, Clone)]
pub struct Factorisation {
    pub first: Hom,
    pub middle: Quandle,
    pub second: Hom,
}

/// A pullback apex together with its projections. Matched pairs are indexed
/// in lexicographic order of `(first, second)`.
#[derive(Debug, Clone)]
pub struct PullbackResult {
    pub apex: Quandle,
    pub pairs: Vec<(usize, usize)>,
    pub p1: Hom,
    pub p2: Hom,
}

fn first_distinct_pair_outside(
    eq: &Congruence,
    coarser: &crate::partition::Partition,
) -> Option<(usize, usize)> {
    let n = eq.base().order();
    for i in 0..n {
        for j in (i + 1)..n {
            if eq.same_class(i, j) && !coarser.same_class(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Classifies a surjection into the four factorisation classes using the
/// congruence and group criteria. Class `E` is additionally cross-checked
/// against inversion of the component map; disagreement would be an
/// implementation bug and aborts.
pub fn classify(f: &Hom) -> Result<ClassReport> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let eq = kernel_congruence(f);
    let sim_inn = inn_orbit_congruence(f.dom())?;

    let in_e = eq.partition().refines(sim_inn.partition());
    let e_witness = first_distinct_pair_outside(&eq, sim_inn.partition());
    // double-entry bookkeeping: the reflection inverts f exactly on class E
    let component_map = pi0_map(f)?;
    assert_eq!(
        in_e,
        component_map.is_bijective(),
        "class-E criteria disagree: congruence route vs component-map route"
    );

    let meet_c = meet(&eq, &sim_inn)?;
    let in_m = meet_c.is_diagonal();
    let m_witness = first_distinct_pair_outside(&meet_c, &crate::partition::Partition::discrete(f.dom().order()));

    let ih = inn_hom(f)?;
    let kernel = ih.kernel();
    let kernel_orbits = kernel.orbit_partition();
    let in_e1 = eq.partition() == &kernel_orbits;
    let e1_witness = first_distinct_pair_outside(&eq, &kernel_orbits).map(|pair| {
        // prefer a labeled generator as the linking witness when one exists
        let links = |p: &&Permutation| p.apply(pair.0) == pair.1;
        let link = ih
            .dom()
            .generators()
            .iter()
            .map(|g| &g.perm)
            .find(links)
            .or_else(|| ih.dom().elements().iter().find(links))
            .cloned();
        let link_image = link.as_ref().map(|p| {
            let image = ih.apply(p).expect("link is an inner automorphism").clone();
            assert!(
                !image.is_identity(),
                "a kernel element linking the pair would put it in the kernel orbits"
            );
            image
        });
        E1Witness {
            pair,
            link,
            link_image,
        }
    });

    let in_m1 = ih.is_isomorphism();
    // the induced inner map of a surjection is surjective, so failing to be
    // an isomorphism means a nontrivial kernel
    debug_assert_eq!(in_m1, kernel.is_trivial());
    let m1_witness = kernel
        .elements()
        .iter()
        .find(|p| !p.is_identity())
        .cloned();

    let report = ClassReport {
        in_e,
        in_m,
        in_e1,
        in_m1,
        e_witness,
        m_witness,
        e1_witness,
        m1_witness,
    };
    assert!(
        !report.in_e1 || report.in_e,
        "kernel orbits sit inside the inner orbits, so E1 implies E"
    );
    assert!(
        !report.in_m || report.in_m1,
        "trivial extensions are rigid quotients, so M implies M1"
    );
    Ok(report)
}

/// Factors `f` as an `E`-map followed by an `M`-map: quotient by
/// `Eq(f) ∩ ~Inn(dom f)`, then the induced map onto the codomain.
pub fn factor_em(f: &Hom) -> Result<Factorisation> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let eq = kernel_congruence(f);
    let sim_inn = inn_orbit_congruence(f.dom())?;
    let r = meet(&eq, &sim_inn)?;
    let (middle, first) = quotient(&r);
    let second = induced_on_quotient(&first, f);
    debug_assert_eq!(second.compose(&first).expect("composable"), *f);
    Ok(Factorisation {
        first,
        middle,
        second,
    })
}

/// Factors `f` as an `E1`-map followed by a rigid quotient: quotient by the
/// orbit congruence of `Ker(Inn(f))`, then the induced map.
pub fn factor_rigid(f: &Hom) -> Result<Factorisation> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let ih = inn_hom(f)?;
    let kernel = ih.kernel();
    let r = match orbit_congruence(f.dom(), &kernel)? {
        OrbitRelation::Congruence(c) => c,
        OrbitRelation::NotACongruence(_) => {
            unreachable!("kernels are normal, so their orbit equivalence is a congruence")
        }
    };
    let (middle, first) = quotient(&r);
    let second = induced_on_quotient(&first, f);
    debug_assert_eq!(second.compose(&first).expect("composable"), *f);
    Ok(Factorisation {
        first,
        middle,
        second,
    })
}

/// The map out of a quotient induced by any `f` whose kernel contains the
/// quotient's kernel.
fn induced_on_quotient(proj: &Hom, f: &Hom) -> Hom {
    let k = proj.cod().order();
    let mut map = vec![usize::MAX; k];
    for i in 0..f.dom().order() {
        let c = proj.apply(i);
        if map[c] == usize::MAX {
            map[c] = f.apply(i);
        } else {
            assert_eq!(map[c], f.apply(i), "map does not descend to the quotient");
        }
    }
    Hom::new_unchecked(proj.cod().clone(), f.cod().clone(), map)
}

/// Pullback of a cospan `fbar : C → D ← B : gbar`, as the subquandle of the
/// product on the matched pairs `(c, b)`.
pub fn pullback(fbar: &Hom, gbar: &Hom) -> Result<PullbackResult> {
    if fbar.cod() != gbar.cod() {
        return Err(Error::CodomainMismatch);
    }
    let c = fbar.dom();
    let b = gbar.dom();
    let mut pairs = Vec::new();
    for i in 0..c.order() {
        for j in 0..b.order() {
            if fbar.apply(i) == gbar.apply(j) {
                pairs.push((i, j));
            }
        }
    }
    if pairs.is_empty() {
        return Err(Error::PreconditionViolated(
            "pullback has an empty carrier",
        ));
    }
    let k = pairs.len();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![vec![0usize; k]; k];
    for (x, &(c1, b1)) in pairs.iter().enumerate() {
        for (y, &(c2, b2)) in pairs.iter().enumerate() {
            let target = (c.op(c1, c2), b.op(b1, b2));
            table[x][y] = *index
                .get(&target)
                .expect("matched pairs are closed under the operations");
        }
    }
    let apex = Quandle::from_table(table).expect("pullback apex is a quandle");
    let p1 = Hom::new_unchecked(
        apex.clone(),
        c.clone(),
        pairs.iter().map(|&(i, _)| i).collect(),
    );
    let p2 = Hom::new_unchecked(
        apex.clone(),
        b.clone(),
        pairs.iter().map(|&(_, j)| j).collect(),
    );
    Ok(PullbackResult {
        apex,
        pairs,
        p1,
        p2,
    })
}

/// For a commuting square `fbar ∘ g = gbar ∘ f`, the canonical map
/// `a ↦ (g(a), f(a))` into the pullback of `fbar` and `gbar`.
pub fn comparison_to_pullback(f: &Hom, g: &Hom, fbar: &Hom, gbar: &Hom) -> Result<Hom> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    if fbar.dom() != g.cod() || gbar.dom() != f.cod() {
        return Err(Error::DomainMismatch);
    }
    if fbar.cod() != gbar.cod() {
        return Err(Error::CodomainMismatch);
    }
    if fbar.compose(g)? != gbar.compose(f)? {
        return Err(Error::SquareNotCommuting);
    }
    let pb = pullback(fbar, gbar)?;
    let index: HashMap<(usize, usize), usize> = pb
        .pairs
        .iter()
        .copied()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let map = (0..f.dom().order())
        .map(|a| index[&(g.apply(a), f.apply(a))])
        .collect();
    Ok(Hom::new_unchecked(f.dom().clone(), pb.apex, map))
}

/// The comparison map of the unit square of `f`: `a ↦ ([a], f(a))` into
/// `π₀(dom f) ×_{π₀(cod f)} cod f`. Always surjective for surjective `f`.
pub fn unit_square_comparison(f: &Hom) -> Result<Hom> {
    let pd = pi0(f.dom())?;
    let pc = pi0(f.cod())?;
    let p0f = pi0_map(f)?;
    comparison_to_pullback(f, &pd.unit, &p0f, &pc.unit)
}

/// True iff the unit square of `f` is a pullback, i.e. `f` is a trivial
/// extension. The result is checked against the congruence criterion for
/// class `M`.
pub fn is_trivial_extension(f: &Hom) -> Result<bool> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let bijective = unit_square_comparison(f)?.is_bijective();
    assert_eq!(
        bijective,
        classify(f)?.in_m,
        "pullback criterion and congruence criterion for class M disagree"
    );
    Ok(bijective)
}

/// Pushout of two surjections with a common domain: the quotient of the
/// domain by `Eq(f) ∨ Eq(g)`, with the induced legs. Returns
/// `(apex, fbar, gbar)` where `fbar : cod g → apex` and `gbar : cod f → apex`.
pub fn pushout_of_surjections(f: &Hom, g: &Hom) -> Result<(Quandle, Hom, Hom)> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    if !f.is_surjective() || !g.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let j = join(&kernel_congruence(f), &kernel_congruence(g))?;
    let (apex, t) = quotient(&j);
    let fbar = induced_on_quotient(g, &t);
    let gbar = induced_on_quotient(f, &t);
    debug_assert_eq!(fbar.compose(g).expect("composable"), t);
    debug_assert_eq!(gbar.compose(f).expect("composable"), t);
    // the diagonal's kernel is exactly the join
    debug_assert_eq!(kernel_congruence(&t).partition(), j.partition());
    Ok((apex, fbar, gbar))
}

/// For `f ∈ E1` and any surjection `g` out of the same domain, the canonical
/// map to the pullback of the pushout legs is surjective. Returns the
/// surjectivity verdict for one instance.
pub fn special_pushout_comparison_surjective(f: &Hom, g: &Hom) -> Result<bool> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    if !f.is_surjective() || !g.is_surjective() {
        return Err(Error::NotSurjective);
    }
    if !classify(f)?.in_e1 {
        return Err(Error::PreconditionViolated("first map must be in class E1"));
    }
    let (_, fbar, gbar) = pushout_of_surjections(f, g)?;
    let cmp = comparison_to_pullback(f, g, &fbar, &gbar)?;
    Ok(cmp.is_surjective())
}

/// Unique diagonal for a commuting square `v ∘ e = m ∘ u` with `e ∈ E` and
/// `m ∈ M`, built constructively: invert the component map of `e`, then use
/// that `m`'s unit square is a pullback to locate the image elementwise.
pub fn orthogonal_fill(e: &Hom, m: &Hom, u: &Hom, v: &Hom) -> Result<Hom> {
    if e.dom() != u.dom() || e.cod() != v.dom() || m.dom() != u.cod() || m.cod() != v.cod() {
        return Err(Error::DomainMismatch);
    }
    if v.compose(e)? != m.compose(u)? {
        return Err(Error::SquareNotCommuting);
    }
    let ce = classify(e)?;
    let cm = classify(m)?;
    if !ce.in_e || !cm.in_m {
        return Err(Error::ClassViolation);
    }

    let p0e = pi0_map(e)?;
    let p0u = pi0_map(u)?;
    let pb = pi0(e.cod())?;
    let pc = pi0(m.dom())?;

    // invert the bijective component map of e
    let mut p0e_inv = vec![0usize; p0e.cod().order()];
    for i in 0..p0e.dom().order() {
        p0e_inv[p0e.apply(i)] = i;
    }

    // m ∈ M: (component, image under m) determines an element of its domain
    let mut locate: HashMap<(usize, usize), usize> = HashMap::new();
    for c in 0..m.dom().order() {
        locate.insert((pc.unit.apply(c), m.apply(c)), c);
    }

    let mut map = Vec::with_capacity(e.cod().order());
    for b in 0..e.cod().order() {
        let component = p0u.apply(p0e_inv[pb.unit.apply(b)]);
        let c = *locate.get(&(component, v.apply(b))).ok_or(Error::NoFill)?;
        map.push(c);
    }
    let w = Hom::new(e.cod().clone(), m.dom().clone(), map).map_err(|_| Error::NoFill)?;
    if w.compose(e)? != *u || m.compose(&w)? != *v {
        return Err(Error::NoFill);
    }
    Ok(w)
}

/// One instance of the pullback-preservation property of the component
/// reflection: for a surjection `phi` between trivial quandles onto the
/// component quandle of `b`, the reflection of the pullback of the unit
/// along `phi` compares bijectively with the original cospan's pullback.
pub fn check_admissibility_instance(b: &Quandle, phi: &Hom) -> Result<bool> {
    let pb0 = pi0(b)?;
    if !phi.dom().is_trivial() {
        return Err(Error::PhiNotTrivialDomain);
    }
    if phi.cod() != &pb0.quotient {
        return Err(Error::CodomainMismatch);
    }
    if !phi.is_surjective() {
        return Err(Error::PhiNotSurjective);
    }
    let pb = pullback(&pb0.unit, phi)?;
    let p0p1 = pi0_map(&pb.p1)?;
    let p0p2 = pi0_map(&pb.p2)?;
    let p0eta = pi0_map(&pb0.unit)?;
    let p0phi = pi0_map(phi)?;
    let cmp = comparison_to_pullback(&p0p2, &p0p1, &p0eta, &p0phi)?;
    Ok(cmp.is_bijective())
}

/// Whether the component reflection preserves the kernel pair of `f`:
/// compares the reflection of `Eq(f)` (as a quandle) with the kernel pair of
/// the component map, via the canonical comparison.
pub fn pi0_preserves_kernel_pair(f: &Hom) -> Result<bool> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let kp = pullback(f, f)?;
    let p0p1 = pi0_map(&kp.p1)?;
    let p0p2 = pi0_map(&kp.p2)?;
    let p0f = pi0_map(f)?;
    let cmp = comparison_to_pullback(&p0p2, &p0p1, &p0f, &p0f)?;
    Ok(cmp.is_bijective())
}
