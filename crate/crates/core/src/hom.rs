//! Quandle homomorphisms, validated at construction.

use crate::error::{Error, Result};
use crate::quandle::Quandle;

/// A map between quandle carriers that preserves `◁` (and therefore `◁⁻¹`,
/// which is re-checked anyway).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    dom: Quandle,
    cod: Quandle,
    map: Vec<usize>,
}

impl Hom {
    pub fn new(dom: Quandle, cod: Quandle, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.order() {
            return Err(Error::Shape("map length must equal the domain order"));
        }
        if map.iter().any(|&v| v >= cod.order()) {
            return Err(Error::Shape("map value out of codomain range"));
        }
        for i in 0..dom.order() {
            for j in 0..dom.order() {
                if map[dom.op(i, j)] != cod.op(map[i], map[j]) {
                    return Err(Error::NotAHomomorphism(i, j));
                }
                // redundant given right invertibility, kept as a check
                if map[dom.inv_op(i, j)] != cod.inv_op(map[i], map[j]) {
                    return Err(Error::NotAHomomorphism(i, j));
                }
            }
        }
        Ok(Hom { dom, cod, map })
    }

    /// Construction bypass for maps that are homomorphisms by construction
    /// (composites, restrictions of validated maps). Checked in debug builds.
    pub(crate) fn new_unchecked(dom: Quandle, cod: Quandle, map: Vec<usize>) -> Self {
        debug_assert!(
            Hom::new(dom.clone(), cod.clone(), map.clone()).is_ok(),
            "new_unchecked received a non-homomorphism"
        );
        Hom { dom, cod, map }
    }

    pub fn identity(q: &Quandle) -> Self {
        Hom {
            dom: q.clone(),
            cod: q.clone(),
            map: (0..q.order()).collect(),
        }
    }

    pub fn dom(&self) -> &Quandle {
        &self.dom
    }

    pub fn cod(&self) -> &Quandle {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.map {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective()
    }

    /// `self ∘ inner`: apply `inner` first. Fails with `DomainMismatch`
    /// unless `inner`'s codomain is `self`'s domain.
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if inner.cod != self.dom {
            return Err(Error::DomainMismatch);
        }
        let map = inner.map.iter().map(|&v| self.map[v]).collect();
        Ok(Hom::new_unchecked(
            inner.dom.clone(),
            self.cod.clone(),
            map,
        ))
    }
}
