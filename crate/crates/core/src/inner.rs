//! The inner automorphism group of a quandle, its orbit decomposition, and
//! the reflection onto trivial quandles.
//!
//! Right translations generate `Inn(A)`; orbits of its action are the
//! connected components. The component set carries exactly one quandle
//! structure, the trivial one, and projecting onto it is the unit of the
//! reflection. Surjections additionally induce a group homomorphism between
//! the inner groups, constructed here along recorded generator words and
//! verified exhaustively.

use crate::error::{Error, Result};
use crate::group::{Generator, GroupHom, PermGroup, DEFAULT_GROUP_CAP};
use crate::hom::Hom;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::quandle::Quandle;

impl Quandle {
    /// The right translation `ρ_b : a ↦ a ◁ b`, always an automorphism.
    pub fn right_translation(&self, b: usize) -> Permutation {
        assert!(b < self.order());
        Permutation::from_images((0..self.order()).map(|a| self.op(a, b)).collect())
            .expect("columns of a validated table are bijections")
    }
}

pub fn inner_group(q: &Quandle) -> Result<PermGroup> {
    inner_group_with_cap(q, DEFAULT_GROUP_CAP)
}

/// `Inn(A)`, generated by all right translations, each labeled by the
/// element inducing it.
pub fn inner_group_with_cap(q: &Quandle, cap: usize) -> Result<PermGroup> {
    let generators = (0..q.order())
        .map(|b| Generator {
            label: Some(b),
            perm: q.right_translation(b),
        })
        .collect();
    PermGroup::generated(q.order(), generators, cap)
}

/// The component reflection of a quandle: its orbit partition, the trivial
/// quandle on the component set, and the canonical projection onto it.
#[derive(Debug, Clone)]
pub struct Pi0Result {
    pub components: Partition,
    pub quotient: Quandle,
    pub unit: Hom,
}

/// Components are indexed in increasing order of their minimum element, so
/// the unit map is deterministic.
pub fn pi0(q: &Quandle) -> Result<Pi0Result> {
    let group = inner_group(q)?;
    let components = group.orbit_partition();
    let quotient = Quandle::trivial(components.num_classes());
    let unit = Hom::new(q.clone(), quotient.clone(), components.index_map())
        .expect("projection onto a trivial quandle is a homomorphism");
    debug_assert!(unit.is_surjective());
    Ok(Pi0Result {
        components,
        quotient,
        unit,
    })
}

/// True when the inner group acts transitively.
pub fn is_connected(q: &Quandle) -> Result<bool> {
    Ok(pi0(q)?.components.num_classes() == 1)
}

/// The map induced on component sets by a homomorphism. Well-definedness
/// (connected sets have connected images) is asserted.
pub fn pi0_map(f: &Hom) -> Result<Hom> {
    let pd = pi0(f.dom())?;
    let pc = pi0(f.cod())?;
    let dom_index = pd.components.index_map();
    let cod_index = pc.components.index_map();
    let mut map = vec![usize::MAX; pd.components.num_classes()];
    for i in 0..f.dom().order() {
        let c = dom_index[i];
        let target = cod_index[f.apply(i)];
        if map[c] == usize::MAX {
            map[c] = target;
        } else {
            assert_eq!(
                map[c], target,
                "image of a connected component must be connected"
            );
        }
    }
    let induced = Hom::new(pd.quotient.clone(), pc.quotient.clone(), map)
        .expect("maps of trivial quandles are homomorphisms");
    // naturality square: induced ∘ unit_dom = unit_cod ∘ f
    assert_eq!(
        induced.compose(&pd.unit).expect("composable"),
        pc.unit.compose(f).expect("composable"),
        "unit square must commute"
    );
    Ok(induced)
}

/// The group homomorphism `Inn(dom f) → Inn(cod f)` induced by a surjection,
/// sending the translation by `b` to the translation by `f(b)` and extending
/// along recorded generator words.
///
/// Whenever the closure walk reaches an element by a second word, the two
/// images are compared; together with the exhaustive multiplicativity check
/// in [`GroupHom::new`] this turns well-definedness into a verified runtime
/// invariant instead of an assumption. `WordInconsistency` is unreachable
/// for surjective `f`.
pub fn inn_hom(f: &Hom) -> Result<GroupHom> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let dom_group = inner_group(f.dom())?;
    let cod_group = inner_group(f.cod())?;

    // image of each labeled generator
    let mapped: Vec<Permutation> = dom_group
        .generators()
        .iter()
        .map(|g| {
            let b = g.label.expect("inner group generators are labeled");
            f.cod().right_translation(f.apply(b))
        })
        .collect();

    let mut images: Vec<Option<usize>> = vec![None; dom_group.order()];
    images[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        let img_e = images[e].expect("queued elements have images");
        for (gi, gen) in dom_group.generators().iter().enumerate() {
            let next = gen.perm.compose(&dom_group.elements()[e]);
            let ni = dom_group.element_index(&next).expect("closure");
            let candidate = mapped[gi].compose(&cod_group.elements()[img_e]);
            let ci = cod_group
                .element_index(&candidate)
                .ok_or(Error::WordInconsistency)?;
            match images[ni] {
                None => {
                    images[ni] = Some(ci);
                    queue.push_back(ni);
                }
                Some(existing) => {
                    if existing != ci {
                        return Err(Error::WordInconsistency);
                    }
                }
            }
        }
    }

    let images: Vec<usize> = images
        .into_iter()
        .map(|i| i.expect("closure walk visits every element"))
        .collect();
    GroupHom::new(dom_group, cod_group, images)
}
