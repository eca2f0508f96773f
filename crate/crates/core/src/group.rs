//! Permutation groups materialized as full element sets.
//!
//! Groups here are tiny (degrees up to ~12), so closure is a plain BFS over
//! generator multiplication and every element is stored, along with one
//! generator word witnessing it. That makes kernels, normality and
//! isomorphism checks exact set computations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};
use crate::perm::Permutation;

/// Guard for the closure loop. Not derived from any theory; it simply keeps
/// pathological inputs from materializing astronomically many permutations.
pub const DEFAULT_GROUP_CAP: usize = 3_628_800; // 10!

/// A generator together with an optional label; right translations are
/// labeled by the quandle element that induces them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: Option<usize>,
    pub perm: Permutation,
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Generator>,
    elements: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup::generated(degree, Vec::new(), DEFAULT_GROUP_CAP)
            .expect("trivial group is below any cap")
    }

    /// BFS closure of the generators under composition. Finite order makes
    /// the result closed under inverses as well. `words[e]` is one sequence
    /// of generator indices whose left-to-right application yields element
    /// `e`; the identity sits at index 0 with the empty word.
    pub fn generated(degree: usize, generators: Vec<Generator>, cap: usize) -> Result<Self> {
        for g in &generators {
            assert_eq!(g.perm.degree(), degree, "generator degree mismatch");
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);

        let mut head = 0;
        while head < elements.len() {
            for (gi, gen) in generators.iter().enumerate() {
                let next = gen.perm.compose(&elements[head]);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    index.insert(next.clone(), elements.len());
                    let mut word = words[head].clone();
                    word.push(gi);
                    words.push(word);
                    elements.push(next);
                }
            }
            head += 1;
        }

        Ok(PermGroup {
            degree,
            generators,
            elements,
            words,
            index,
        })
    }

    /// Wraps a set of permutations already known to be closed. The elements
    /// become the generators; closure is re-run and must add nothing.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let gens = elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| Generator {
                label: None,
                perm: p.clone(),
            })
            .collect();
        let group = PermGroup::generated(degree, gens, DEFAULT_GROUP_CAP)
            .expect("closed set cannot outgrow itself");
        assert_eq!(
            group.order(),
            elements.len().max(1),
            "element set was not closed"
        );
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of group elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn word(&self, element: usize) -> &[usize] {
        &self.words[element]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Equality as subgroups of the symmetric group, ignoring generator and
    /// discovery order.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|p| other.contains(p))
    }

    pub fn sorted_elements(&self) -> Vec<Permutation> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }

    /// Orbit partition of the natural action on `{0, …, degree−1}`.
    pub fn orbit_partition(&self) -> Partition {
        let mut uf = UnionFind::new(self.degree);
        for p in &self.elements {
            for i in 0..self.degree {
                uf.union(i, p.apply(i));
            }
        }
        uf.into_partition()
    }
}

/// `true` iff `n` is a normal subgroup of `g`. Errors when `n` is not even
/// a subgroup of `g`.
pub fn is_normal_subgroup(n: &PermGroup, g: &PermGroup) -> Result<bool> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    for s in g.elements() {
        let s_inv = s.inverse();
        for t in n.elements() {
            if !n.contains(&s.compose(t).compose(&s_inv)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A group homomorphism recorded on every element of its domain.
/// `images[e]` is the index in `cod` of the image of `dom` element `e`.
#[derive(Debug, Clone)]
pub struct GroupHom {
    dom: PermGroup,
    cod: PermGroup,
    images: Vec<usize>,
}

impl GroupHom {
    /// Validates that `images` sends the identity to the identity and is
    /// multiplicative on **all** pairs of domain elements; the exhaustive
    /// check is what turns word-based constructions into verified
    /// homomorphisms.
    pub fn new(dom: PermGroup, cod: PermGroup, images: Vec<usize>) -> Result<Self> {
        assert_eq!(images.len(), dom.order());
        assert!(images.iter().all(|&v| v < cod.order()));
        if images[0] != 0 {
            return Err(Error::WordInconsistency);
        }
        for i in 0..dom.order() {
            for j in 0..dom.order() {
                let product = dom.elements()[i].compose(&dom.elements()[j]);
                let pi = dom.element_index(&product).expect("closure");
                let image_product =
                    cod.elements()[images[i]].compose(&cod.elements()[images[j]]);
                if cod.elements()[images[pi]] != image_product {
                    return Err(Error::WordInconsistency);
                }
            }
        }
        Ok(GroupHom { dom, cod, images })
    }

    pub fn identity(g: &PermGroup) -> Self {
        GroupHom {
            dom: g.clone(),
            cod: g.clone(),
            images: (0..g.order()).collect(),
        }
    }

    pub fn dom(&self) -> &PermGroup {
        &self.dom
    }

    pub fn cod(&self) -> &PermGroup {
        &self.cod
    }

    pub fn image_index(&self, element: usize) -> usize {
        self.images[element]
    }

    pub fn apply(&self, p: &Permutation) -> Option<&Permutation> {
        self.dom
            .element_index(p)
            .map(|i| &self.cod.elements()[self.images[i]])
    }

    /// The subgroup of the domain sent to the identity.
    pub fn kernel(&self) -> PermGroup {
        let elements: Vec<Permutation> = self
            .dom
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.images[*i] == 0)
            .map(|(_, p)| p.clone())
            .collect();
        PermGroup::from_elements(self.dom.degree(), elements)
    }

    pub fn is_isomorphism(&self) -> bool {
        if self.dom.order() != self.cod.order() {
            return false;
        }
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.images {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Permutation::from_images(v).unwrap()
    }

    fn gen(p: Permutation) -> Generator {
        Generator {
            label: None,
            perm: p,
        }
    }

    #[test]
    fn closure_of_two_transpositions_is_symmetric_group() {
        let g = PermGroup::generated(
            3,
            vec![gen(transposition(3, 0, 1)), gen(transposition(3, 1, 2))],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        // closed under inverse and every word evaluates to its element
        for (i, p) in g.elements().iter().enumerate() {
            assert!(g.contains(&p.inverse()));
            let mut eval = Permutation::identity(3);
            for &gi in g.word(i) {
                eval = g.generators()[gi].perm.compose(&eval);
            }
            assert_eq!(&eval, p);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let r = PermGroup::generated(
            4,
            vec![gen(transposition(4, 0, 1)), gen(transposition(4, 1, 2)), gen(transposition(4, 2, 3))],
            5,
        );
        assert!(matches!(r, Err(Error::GroupTooLarge(5))));
    }

    #[test]
    fn transpositions_are_not_normal_in_s3() {
        let s3 = PermGroup::generated(
            3,
            vec![gen(transposition(3, 0, 1)), gen(transposition(3, 1, 2))],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        let sub = PermGroup::generated(3, vec![gen(transposition(3, 0, 1))], DEFAULT_GROUP_CAP)
            .unwrap();
        assert_eq!(is_normal_subgroup(&sub, &s3), Ok(false));
        assert_eq!(is_normal_subgroup(&PermGroup::trivial(3), &s3), Ok(true));
        assert_eq!(is_normal_subgroup(&s3, &s3), Ok(true));

        let not_sub = PermGroup::generated(3, vec![gen(transposition(3, 0, 2))], DEFAULT_GROUP_CAP)
            .unwrap();
        // a group is always a subgroup of itself but {id,(0 2)} vs {id,(0 1)}:
        assert!(matches!(
            is_normal_subgroup(&s3, &not_sub),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn orbit_partition_of_a_double_transposition() {
        let g = PermGroup::generated(
            5,
            vec![gen(Permutation::from_images(vec![1, 0, 2, 4, 3]).unwrap())],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        assert_eq!(g.orbit_partition().class_of(), &[0, 0, 2, 3, 3]);
        assert_eq!(PermGroup::trivial(4).orbit_partition(), Partition::discrete(4));
    }

    #[test]
    fn group_hom_validation_and_kernel() {
        let s3 = PermGroup::generated(
            3,
            vec![gen(transposition(3, 0, 1)), gen(transposition(3, 1, 2))],
            DEFAULT_GROUP_CAP,
        )
        .unwrap();
        let id = GroupHom::identity(&s3);
        assert!(id.is_isomorphism());
        assert!(id.kernel().is_trivial());

        // collapse everything to the trivial group
        let t = PermGroup::trivial(1);
        let collapse = GroupHom::new(s3.clone(), t, vec![0; 6]).unwrap();
        assert!(!collapse.is_isomorphism());
        assert_eq!(collapse.kernel().order(), 6);

        // sign map to {id, (0 1)} must fail if an even element maps to the flip
        let c2 = PermGroup::generated(3, vec![gen(transposition(3, 0, 1))], DEFAULT_GROUP_CAP)
            .unwrap();
        let mut bogus = vec![0; 6];
        bogus[1] = 0; // a transposition mapped to id while another maps to the flip
        for (i, p) in s3.elements().iter().enumerate() {
            if p.to_string() == "(1 2)" {
                bogus[i] = 1;
            }
        }
        assert!(GroupHom::new(s3, c2, bogus).is_err());
    }
}
