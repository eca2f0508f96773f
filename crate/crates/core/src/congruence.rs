//! Congruences and relations on quandles.
//!
//! A congruence is an equivalence relation whose pair set is a subquandle of
//! the product; it is stored as a partition with minimum-member class ids.
//! Relations keep explicit pair sets and cover the non-transitive
//! intermediates that show up in relational composition and direct images.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{is_normal_subgroup, PermGroup};
use crate::hom::Hom;
use crate::inner::inner_group;
use crate::partition::{set_partitions, Partition, UnionFind};
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    base: Quandle,
    partition: Partition,
}

impl Congruence {
    pub fn new(base: Quandle, partition: Partition) -> Result<Self> {
        if !is_congruence(&base, &partition) {
            return Err(Error::NotACongruence);
        }
        Ok(Congruence { base, partition })
    }

    pub(crate) fn new_unchecked(base: Quandle, partition: Partition) -> Self {
        debug_assert!(is_congruence(&base, &partition));
        Congruence { base, partition }
    }

    pub fn diagonal(base: Quandle) -> Self {
        let n = base.order();
        Congruence {
            base,
            partition: Partition::discrete(n),
        }
    }

    pub fn base(&self) -> &Quandle {
        &self.base
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn is_diagonal(&self) -> bool {
        self.partition.is_discrete()
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.partition.same_class(i, j)
    }

    pub fn refines(&self, other: &Congruence) -> bool {
        self.base == other.base && self.partition.refines(&other.partition)
    }

    pub fn to_relation(&self) -> Relation {
        Relation {
            base: self.base.clone(),
            pairs: self.partition.pairs(),
        }
    }
}

impl std::fmt::Display for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.partition.fmt(f)
    }
}

/// A set of ordered pairs over a quandle carrier, with no further laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    base: Quandle,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new(base: Quandle, pairs: BTreeSet<(usize, usize)>) -> Self {
        let n = base.order();
        assert!(pairs.iter().all(|&(a, b)| a < n && b < n));
        Relation { base, pairs }
    }

    pub fn diagonal(base: Quandle) -> Self {
        let pairs = (0..base.order()).map(|i| (i, i)).collect();
        Relation { base, pairs }
    }

    pub fn base(&self) -> &Quandle {
        &self.base
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.base.order()).all(|i| self.pairs.contains(&(i, i)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| self.pairs.contains(&(b, a)))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs
                .iter()
                .filter(|&&(b2, _)| b2 == b)
                .all(|&(_, c)| self.pairs.contains(&(a, c)))
        })
    }

    /// Reinterprets an equivalence relation as a partition; `None` when the
    /// pair set is not an equivalence.
    pub fn to_partition(&self) -> Option<Partition> {
        if !(self.is_reflexive() && self.is_symmetric() && self.is_transitive()) {
            return None;
        }
        let n = self.base.order();
        let mut uf = UnionFind::new(n);
        for &(a, b) in &self.pairs {
            uf.union(a, b);
        }
        Some(uf.into_partition())
    }
}

/// True iff the partition is compatible with `◁` componentwise. Right
/// invertibility then gives `◁⁻¹`-compatibility for free; it is re-checked
/// in debug builds.
pub fn is_congruence(q: &Quandle, p: &Partition) -> bool {
    assert_eq!(p.size(), q.order());
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            if !p.same_class(a, b) {
                continue;
            }
            for c in 0..n {
                if !p.same_class(q.op(a, c), q.op(b, c)) || !p.same_class(q.op(c, a), q.op(c, b)) {
                    return false;
                }
            }
        }
    }
    debug_assert!(compatible_inv(q, p));
    true
}

fn compatible_inv(q: &Quandle, p: &Partition) -> bool {
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            if !p.same_class(a, b) {
                continue;
            }
            for c in 0..n {
                if !p.same_class(q.inv_op(a, c), q.inv_op(b, c))
                    || !p.same_class(q.inv_op(c, a), q.inv_op(c, b))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The fibers of a homomorphism; always a congruence.
pub fn kernel_congruence(f: &Hom) -> Congruence {
    Congruence::new_unchecked(f.dom().clone(), Partition::from_class_of(f.map()))
}

/// The orbit congruence of the whole inner group (the kernel of the unit of
/// the component reflection).
pub fn inn_orbit_congruence(q: &Quandle) -> Result<Congruence> {
    let group = inner_group(q)?;
    Ok(Congruence::new_unchecked(
        q.clone(),
        group.orbit_partition(),
    ))
}

/// Orbit equivalence of a subgroup of the inner group. A congruence exactly
/// when the subgroup is normal; the non-congruence case is returned as a
/// flagged relation.
#[derive(Debug, Clone)]
pub enum OrbitRelation {
    Congruence(Congruence),
    /// The orbit equivalence failed operation compatibility (the subgroup is
    /// not normal).
    NotACongruence(Relation),
}

impl OrbitRelation {
    pub fn partition(&self) -> Partition {
        match self {
            OrbitRelation::Congruence(c) => c.partition().clone(),
            OrbitRelation::NotACongruence(r) => {
                r.to_partition().expect("orbit relations are equivalences")
            }
        }
    }

    pub fn to_relation(&self) -> Relation {
        match self {
            OrbitRelation::Congruence(c) => c.to_relation(),
            OrbitRelation::NotACongruence(r) => r.clone(),
        }
    }

    pub fn is_congruence(&self) -> bool {
        matches!(self, OrbitRelation::Congruence(_))
    }
}

pub fn orbit_congruence(q: &Quandle, n: &PermGroup) -> Result<OrbitRelation> {
    let inn = inner_group(q)?;
    if !n.is_subgroup_of(&inn) {
        return Err(Error::NotASubgroupOfInn);
    }
    let partition = n.orbit_partition();
    let result = if is_congruence(q, &partition) {
        OrbitRelation::Congruence(Congruence::new_unchecked(q.clone(), partition))
    } else {
        let pairs = partition.pairs();
        OrbitRelation::NotACongruence(Relation::new(q.clone(), pairs))
    };
    // congruence ⟺ normal subgroup; check the advertised criterion
    assert_eq!(
        result.is_congruence(),
        is_normal_subgroup(n, &inn)?,
        "orbit equivalence must be a congruence exactly for normal subgroups"
    );
    Ok(result)
}

pub(crate) fn compose_pair_sets(
    s: &BTreeSet<(usize, usize)>,
    r: &BTreeSet<(usize, usize)>,
) -> BTreeSet<(usize, usize)> {
    // (a, b) ∈ s ∘ r ⟺ ∃c with (a, c) ∈ r and (c, b) ∈ s
    let mut by_first: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for &(c, b) in s {
        by_first.entry(c).or_default().push(b);
    }
    let mut out = BTreeSet::new();
    for &(a, c) in r {
        if let Some(bs) = by_first.get(&c) {
            for &b in bs {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Relational composite `s ∘ r = {(a, b) : ∃c, (a, c) ∈ r, (c, b) ∈ s}`.
pub fn compose_relations(s: &Relation, r: &Relation) -> Result<Relation> {
    if s.base != r.base {
        return Err(Error::BaseMismatch);
    }
    Ok(Relation {
        base: s.base.clone(),
        pairs: compose_pair_sets(&s.pairs, &r.pairs),
    })
}

/// True iff `s ∘ r = r ∘ s` as pair sets.
pub fn relations_permute(r: &Relation, s: &Relation) -> Result<bool> {
    Ok(compose_relations(s, r)?.pairs == compose_relations(r, s)?.pairs)
}

/// Blockwise intersection; always a congruence.
pub fn meet(r: &Congruence, s: &Congruence) -> Result<Congruence> {
    if r.base != s.base {
        return Err(Error::BaseMismatch);
    }
    let n = r.base.order();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if r.same_class(i, j) && s.same_class(i, j) {
                uf.union(i, j);
            }
        }
    }
    Ok(Congruence::new_unchecked(
        r.base.clone(),
        uf.into_partition(),
    ))
}

/// Smallest congruence containing both, computed as the equivalence closure
/// of the union of blocks. The closure of a union of congruences is already
/// operation-compatible; the check documents it.
pub fn join(r: &Congruence, s: &Congruence) -> Result<Congruence> {
    if r.base != s.base {
        return Err(Error::BaseMismatch);
    }
    let n = r.base.order();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        uf.union(i, r.partition.class_of()[i]);
        uf.union(i, s.partition.class_of()[i]);
    }
    let partition = uf.into_partition();
    assert!(
        is_congruence(&r.base, &partition),
        "join of congruences must be a congruence"
    );
    Ok(Congruence {
        base: r.base.clone(),
        partition,
    })
}

/// Quotient quandle on the classes, `[a] ◁ [b] = [a ◁ b]`, together with the
/// canonical projection. The projection's kernel is the given congruence.
pub fn quotient(r: &Congruence) -> (Quandle, Hom) {
    let q = r.base();
    let index = r.partition().index_map();
    let reps = r.partition().representatives();
    let k = reps.len();
    let mut table = vec![vec![0usize; k]; k];
    for ci in 0..k {
        for cj in 0..k {
            table[ci][cj] = index[q.op(reps[ci], reps[cj])];
        }
    }
    let quot = Quandle::from_table(table).expect("quotient by a congruence is a quandle");
    let proj = Hom::new_unchecked(q.clone(), quot.clone(), index);
    debug_assert!(proj.is_surjective());
    debug_assert_eq!(kernel_congruence(&proj).partition(), r.partition());
    (quot, proj)
}

/// `f(R) = {(f(a), f(a′)) : (a, a′) ∈ R}` on the codomain. Also computed as
/// the relational composite of the graph, the relation and the opposite
/// graph, and the two routes are compared.
pub fn direct_image(f: &Hom, r: &Relation) -> Result<Relation> {
    if r.base() != f.dom() {
        return Err(Error::BaseMismatch);
    }
    let pairs: BTreeSet<(usize, usize)> = r
        .pairs()
        .iter()
        .map(|&(a, b)| (f.apply(a), f.apply(b)))
        .collect();

    let graph: BTreeSet<(usize, usize)> = f.map().iter().enumerate().map(|(a, &b)| (a, b)).collect();
    let opposite: BTreeSet<(usize, usize)> = graph.iter().map(|&(a, b)| (b, a)).collect();
    let composite = compose_pair_sets(&graph, &compose_pair_sets(r.pairs(), &opposite));
    assert_eq!(
        pairs, composite,
        "direct image must agree with the relational composite"
    );

    Ok(Relation::new(f.cod().clone(), pairs))
}

/// Every congruence on `q`, by filtering all set partitions of the carrier.
pub fn congruences_of(q: &Quandle) -> Vec<Congruence> {
    set_partitions(q.order())
        .filter(|p| is_congruence(q, p))
        .map(|p| Congruence::new_unchecked(q.clone(), p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::Generator;
    use crate::group::DEFAULT_GROUP_CAP;

    fn part(raw: &[usize]) -> Partition {
        Partition::from_class_of(raw)
    }

    #[test]
    fn congruence_checks() {
        let a4 = fixtures::a4();
        assert!(is_congruence(&a4, &part(&[0, 0, 2, 3])));
        assert!(!is_congruence(&a4, &part(&[0, 1, 0, 3])));
        for p in set_partitions(4) {
            assert!(is_congruence(&Quandle::trivial(4), &p));
        }
    }

    #[test]
    fn kernels() {
        let k = kernel_congruence(&fixtures::f4());
        assert_eq!(k.partition(), &part(&[0, 0, 0, 3]));
        let k = kernel_congruence(&fixtures::g5());
        assert_eq!(k.partition(), &part(&[0, 0, 2, 3, 4]));
        let k = kernel_congruence(&Hom::identity(&fixtures::r3()));
        assert!(k.is_diagonal());
    }

    #[test]
    fn orbit_relations() {
        let a4 = fixtures::a4();
        let inn = inner_group(&a4).unwrap();
        match orbit_congruence(&a4, &inn).unwrap() {
            OrbitRelation::Congruence(c) => assert_eq!(c.partition(), &part(&[0, 0, 2, 3])),
            other => panic!("expected congruence, got {other:?}"),
        }

        let a5 = fixtures::a5();
        match orbit_congruence(&a5, &PermGroup::trivial(5)).unwrap() {
            OrbitRelation::Congruence(c) => assert!(c.is_diagonal()),
            other => panic!("expected diagonal congruence, got {other:?}"),
        }

        // a non-normal subgroup of the dihedral inner group is flagged
        let r3 = fixtures::r3();
        let flip = PermGroup::generated(
            3,
            vec![Generator {
                label: None,
                perm: crate::perm::Permutation::from_images(vec![1, 0, 2]).unwrap(),
            }],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        match orbit_congruence(&r3, &flip).unwrap() {
            OrbitRelation::NotACongruence(rel) => {
                assert_eq!(rel.to_partition().unwrap(), part(&[0, 0, 2]));
            }
            other => panic!("expected flagged relation, got {other:?}"),
        }

        // membership check
        let s4_sub = PermGroup::generated(
            4,
            vec![Generator {
                label: None,
                perm: crate::perm::Permutation::from_images(vec![0, 2, 1, 3]).unwrap(),
            }],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        assert!(matches!(
            orbit_congruence(&a4, &s4_sub),
            Err(Error::NotASubgroupOfInn)
        ));
    }

    #[test]
    fn composition_exhibits_non_permuting_congruences() {
        let t3 = Quandle::trivial(3);
        let r = Congruence::new(t3.clone(), part(&[0, 0, 2])).unwrap().to_relation();
        let s = Congruence::new(t3.clone(), part(&[0, 1, 1])).unwrap().to_relation();
        let sr = compose_relations(&s, &r).unwrap();
        let rs = compose_relations(&r, &s).unwrap();
        assert!(sr.contains(0, 2));
        assert!(!rs.contains(0, 2));
        assert!(!relations_permute(&r, &s).unwrap());

        let d = Relation::diagonal(t3);
        assert_eq!(compose_relations(&r, &d).unwrap(), r);
        assert!(relations_permute(&r, &d).unwrap());
    }

    #[test]
    fn kernel_and_inner_orbit_congruences_permute() {
        let a4 = fixtures::a4();
        let eq = kernel_congruence(&fixtures::f4()).to_relation();
        let inn = inn_orbit_congruence(&a4).unwrap().to_relation();
        assert_eq!(
            compose_relations(&inn, &eq).unwrap(),
            compose_relations(&eq, &inn).unwrap()
        );
        assert!(relations_permute(&eq, &inn).unwrap());
    }

    #[test]
    fn base_mismatch_is_reported() {
        let r = Congruence::diagonal(fixtures::a4()).to_relation();
        let s = Congruence::diagonal(fixtures::x4()).to_relation();
        assert!(matches!(
            compose_relations(&r, &s),
            Err(Error::BaseMismatch)
        ));
    }

    #[test]
    fn meet_and_join() {
        let a4 = fixtures::a4();
        let eq = kernel_congruence(&fixtures::f4());
        let inn = inn_orbit_congruence(&a4).unwrap();
        assert_eq!(meet(&eq, &inn).unwrap().partition(), &part(&[0, 0, 2, 3]));
        assert_eq!(join(&eq, &inn).unwrap().partition(), &part(&[0, 0, 0, 3]));

        let d = Congruence::diagonal(a4);
        assert_eq!(meet(&eq, &d).unwrap(), d);
        assert_eq!(join(&eq, &d).unwrap(), eq);

        let a5 = fixtures::a5();
        let eq5 = kernel_congruence(&fixtures::g5());
        let inn5 = inn_orbit_congruence(&a5).unwrap();
        assert_eq!(meet(&eq5, &inn5).unwrap(), eq5);
        let eta = kernel_congruence(&crate::inner::pi0(&a5).unwrap().unit);
        assert_eq!(join(&eq5, &eta).unwrap(), eta);
    }

    #[test]
    fn quotients() {
        let a4 = fixtures::a4();
        let c = Congruence::new(a4.clone(), part(&[0, 0, 2, 3])).unwrap();
        let (quot, proj) = quotient(&c);
        assert_eq!(quot, Quandle::trivial(3));
        assert_eq!(proj.map(), &[0, 0, 1, 2]);
        assert_eq!(proj, crate::inner::pi0(&a4).unwrap().unit);

        let (quot, proj) = quotient(&Congruence::diagonal(a4.clone()));
        assert_eq!(quot, a4);
        assert_eq!(proj, Hom::identity(&a4));

        let a5 = fixtures::a5();
        let c = Congruence::new(a5, part(&[0, 0, 2, 3, 3])).unwrap();
        let (quot, _) = quotient(&c);
        assert_eq!(quot, fixtures::m3());
    }

    #[test]
    fn direct_images() {
        let f4 = fixtures::f4();
        let a4 = fixtures::a4();
        let d = Relation::diagonal(a4.clone());
        assert_eq!(
            direct_image(&f4, &d).unwrap(),
            Relation::diagonal(fixtures::b2())
        );

        let idr = Hom::identity(&a4);
        let inn = inn_orbit_congruence(&a4).unwrap().to_relation();
        assert_eq!(direct_image(&idr, &inn).unwrap(), inn);

        // image of the inner orbit congruence along the kernel quotient of
        // the five-element fixture map
        let a5 = fixtures::a5();
        let eq5 = kernel_congruence(&fixtures::g5());
        let inn5 = inn_orbit_congruence(&a5).unwrap();
        let (quot, proj) = quotient(&meet(&eq5, &inn5).unwrap());
        let image = direct_image(&proj, &inn5.to_relation()).unwrap();
        let target = inn_orbit_congruence(&quot).unwrap().to_relation();
        assert_eq!(image, target);
    }

    #[test]
    fn congruence_enumeration() {
        // the trivial quandle admits every partition
        assert_eq!(congruences_of(&Quandle::trivial(4)).len(), 15);
        // dihedral: diagonal and full only
        let congs = congruences_of(&fixtures::r3());
        assert_eq!(congs.len(), 2);
    }
}
