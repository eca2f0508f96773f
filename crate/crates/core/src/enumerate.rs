//! Exhaustive generation of small quandles, homomorphisms and subgroups.
//!
//! Candidate tables are assembled column by column: right invertibility and
//! idempotency force each column to be a permutation fixing its own index,
//! self-distributivity prunes partial assignments. Isomorphism reduction
//! uses the lexicographically minimal relabeling as a canonical form.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{is_normal_subgroup, Generator, PermGroup};
use crate::hom::Hom;
use crate::perm::Permutation;
use crate::quandle::Quandle;

/// Hard bound for raw enumeration; the search space at 6 is only reachable
/// through the sharded visitor below.
pub const RAW_ORDER_BOUND: usize = 6;
/// Hard bound when reducing up to isomorphism.
pub const ISO_ORDER_BOUND: usize = 5;
/// Bound on the group order for subgroup enumeration.
pub const SUBGROUP_ENUM_CAP: usize = 1_000;

/// Sweep parameters: exhaustive instance spaces up to each claim's cutoff,
/// seeded sampling for orders above it.
#[derive(Debug, Clone)]
pub struct EnumConfig {
    pub max_order: usize,
    pub up_to_iso: bool,
    /// Quandles sampled per order above the exhaustive cutoff.
    pub sample_budget: usize,
    pub seed: u64,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_order: 4,
            up_to_iso: true,
            sample_budget: 1000,
            seed: 0,
        }
    }
}

/// All permutations of `{0, …, n−1}` fixing `j`, in lexicographic order of
/// their image arrays.
fn columns_fixing(n: usize, j: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..n).filter(|&x| x != j).collect();
    let mut out = Vec::new();
    let mut values = others.clone();
    loop {
        let mut col = vec![0usize; n];
        col[j] = j;
        for (pos, &v) in others.iter().zip(values.iter()) {
            col[*pos] = v;
        }
        out.push(col);
        if !next_permutation(&mut values) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Partial self-distributivity check for columns `0..=m`, restricted to the
/// constraints that mention column `m`. In column form the axiom says the
/// translation by `j ◁ k` equals the conjugate of the translation by `j`
/// under the translation by `k`.
fn columns_consistent(cols: &[Vec<usize>], n: usize) -> bool {
    let m = cols.len() - 1;
    for j in 0..=m {
        for k in 0..=m {
            let t = cols[k][j];
            if t > m {
                continue;
            }
            if j != m && k != m && t != m {
                continue;
            }
            for i in 0..n {
                if cols[t][cols[k][i]] != cols[k][cols[j][i]] {
                    return false;
                }
            }
        }
    }
    true
}

fn table_from_columns(cols: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| cols[j][i]).collect())
        .collect()
}

fn search(
    n: usize,
    candidates: &[Vec<Vec<usize>>],
    cols: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&Quandle),
) {
    let depth = cols.len();
    if depth == n {
        let table = table_from_columns(cols, n);
        let q = Quandle::from_table(table).expect("pruned candidates satisfy all axioms");
        visit(&q);
        return;
    }
    for cand in &candidates[depth] {
        cols.push(cand.clone());
        if columns_consistent(cols, n) {
            search(n, candidates, cols, visit);
        }
        cols.pop();
    }
}

/// Visits every quandle table of order `n`, with the candidate list for the
/// first column restricted to the residue class `shard_index` modulo
/// `shard_count`. The unsharded call is `(0, 1)`. No order bound is applied;
/// the caller owns the cost.
pub fn for_each_quandle_sharded(
    n: usize,
    shard_index: usize,
    shard_count: usize,
    visit: &mut dyn FnMut(&Quandle),
) {
    assert!(n >= 1 && shard_count >= 1 && shard_index < shard_count);
    let mut candidates: Vec<Vec<Vec<usize>>> = (0..n).map(|j| columns_fixing(n, j)).collect();
    candidates[0] = candidates[0]
        .iter()
        .enumerate()
        .filter(|(i, _)| i % shard_count == shard_index)
        .map(|(_, c)| c.clone())
        .collect();
    let mut cols = Vec::with_capacity(n);
    search(n, &candidates, &mut cols, visit);
}

/// Test hook: enumeration with caller-supplied column candidate lists. The
/// accepted set must not depend on candidate order.
pub fn for_each_quandle_with_candidates(
    n: usize,
    candidates: &[Vec<Vec<usize>>],
    visit: &mut dyn FnMut(&Quandle),
) {
    assert_eq!(candidates.len(), n);
    let mut cols = Vec::with_capacity(n);
    search(n, candidates, &mut cols, visit);
}

/// Every quandle of order `n`, either all labeled tables or one
/// representative (the canonical form) per isomorphism class.
pub fn enumerate_quandles(n: usize, up_to_iso: bool) -> Result<Vec<Quandle>> {
    let bound = if up_to_iso {
        ISO_ORDER_BOUND
    } else {
        RAW_ORDER_BOUND
    };
    if n > bound {
        return Err(Error::OrderTooLarge(n, bound));
    }
    if up_to_iso {
        let mut classes: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        for_each_quandle_sharded(n, 0, 1, &mut |q| {
            classes.insert(canonical_form(q).table().to_vec());
        });
        Ok(classes
            .into_iter()
            .map(|t| Quandle::from_table(t).expect("canonical forms are quandles"))
            .collect())
    } else {
        let mut out = Vec::new();
        for_each_quandle_sharded(n, 0, 1, &mut |q| out.push(q.clone()));
        Ok(out)
    }
}

fn relabel(q: &Quandle, p: &Permutation) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[p.apply(i)][p.apply(j)] = p.apply(q.op(i, j));
        }
    }
    table
}

/// Lexicographically minimal table over all relabelings; two quandles are
/// isomorphic exactly when their canonical forms coincide.
pub fn canonical_form(q: &Quandle) -> Quandle {
    let n = q.order();
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation::from_images(images.clone()).expect("image array is a permutation");
        let t = relabel(q, &p);
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Quandle::from_table(best.expect("at least the identity relabeling"))
        .expect("relabelings of quandles are quandles")
}

fn hom_prefix_consistent(a: &Quandle, b: &Quandle, map: &[usize]) -> bool {
    let m = map.len() - 1;
    for i in 0..=m {
        for j in 0..=m {
            let t = a.op(i, j);
            if t <= m && map[t] != b.op(map[i], map[j]) {
                return false;
            }
            let t = a.inv_op(i, j);
            if t <= m && map[t] != b.inv_op(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

fn homs_between(a: &Quandle, b: &Quandle, surjective_only: bool) -> Vec<Hom> {
    let n = a.order();
    let k = b.order();
    if surjective_only && k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![0usize; k];
    fn rec(
        a: &Quandle,
        b: &Quandle,
        map: &mut Vec<usize>,
        used: &mut Vec<usize>,
        surjective_only: bool,
        out: &mut Vec<Hom>,
    ) {
        let n = a.order();
        let k = b.order();
        if map.len() == n {
            if !surjective_only || used.iter().all(|&u| u > 0) {
                out.push(Hom::new_unchecked(a.clone(), b.clone(), map.clone()));
            }
            return;
        }
        if surjective_only {
            let missing = used.iter().filter(|&&u| u == 0).count();
            if missing > n - map.len() {
                return;
            }
        }
        for v in 0..k {
            map.push(v);
            used[v] += 1;
            if hom_prefix_consistent(a, b, map) {
                rec(a, b, map, used, surjective_only, out);
            }
            used[v] -= 1;
            map.pop();
        }
    }
    rec(a, b, &mut map, &mut used, surjective_only, &mut out);
    out
}

/// All homomorphisms `a → b`, by backtracking over images in lexicographic
/// order.
pub fn enumerate_homs(a: &Quandle, b: &Quandle) -> Vec<Hom> {
    homs_between(a, b, false)
}

/// All surjective homomorphisms `a → b`.
pub fn enumerate_surjective_homs(a: &Quandle, b: &Quandle) -> Vec<Hom> {
    homs_between(a, b, true)
}

/// All subgroups of `g` (normal ones only, on request), found by repeatedly
/// extending known subgroups by one generator until closure stabilizes.
/// Deterministically ordered by (order, element list).
pub fn subgroups(g: &PermGroup, normal_only: bool) -> Result<Vec<PermGroup>> {
    if g.order() > SUBGROUP_ENUM_CAP {
        return Err(Error::GroupTooLarge(SUBGROUP_ENUM_CAP));
    }
    let mut found: BTreeMap<Vec<Permutation>, PermGroup> = BTreeMap::new();
    let trivial = PermGroup::trivial(g.degree());
    found.insert(trivial.sorted_elements(), trivial);
    loop {
        let mut added = false;
        let snapshot: Vec<PermGroup> = found.values().cloned().collect();
        for h in &snapshot {
            for p in g.elements() {
                if h.contains(p) {
                    continue;
                }
                let mut gens: Vec<Generator> = h
                    .elements()
                    .iter()
                    .filter(|e| !e.is_identity())
                    .map(|e| Generator {
                        label: None,
                        perm: e.clone(),
                    })
                    .collect();
                gens.push(Generator {
                    label: None,
                    perm: p.clone(),
                });
                let extended = PermGroup::generated(g.degree(), gens, g.order())
                    .expect("subgroups cannot outgrow the ambient group");
                let key = extended.sorted_elements();
                if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(key) {
                    slot.insert(extended);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<PermGroup> = found.into_values().collect();
    if normal_only {
        let mut kept = Vec::new();
        for h in out {
            if is_normal_subgroup(&h, g)? {
                kept.push(h);
            }
        }
        out = kept;
    }
    out.sort_by_key(|h| (h.order(), h.sorted_elements()));
    Ok(out)
}

/// Draws `count` quandles of order `n` by uniform choice of diagonal-fixing
/// columns with rejection on self-distributivity. Reproducible for a fixed
/// seed.
///
/// The drawn columns satisfy the first two axiom families by construction,
/// so rejection only needs the column form of self-distributivity; tables
/// are materialized for accepted draws only.
pub fn sample_quandles(n: usize, count: usize, seed: u64) -> Vec<Quandle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut cols: Vec<Vec<usize>> = vec![vec![0usize; n]; n];
    let mut pool: Vec<usize> = Vec::with_capacity(n);
    while out.len() < count {
        for j in 0..n {
            pool.clear();
            pool.extend((0..n).filter(|&x| x != j));
            pool.shuffle(&mut rng);
            let col = &mut cols[j];
            col[j] = j;
            let mut values = pool.iter();
            for pos in 0..n {
                if pos != j {
                    col[pos] = *values.next().expect("one value per non-fixed slot");
                }
            }
        }
        if columns_self_distributive(&cols, n) {
            let table = table_from_columns(&cols, n);
            out.push(Quandle::from_table(table).expect("columns passed every axiom"));
        }
    }
    out
}

/// `ρ_{j ◁ k} ∘ ρ_k = ρ_k ∘ ρ_j` for all columns, the column form of
/// self-distributivity.
fn columns_self_distributive(cols: &[Vec<usize>], n: usize) -> bool {
    for k in 0..n {
        for j in 0..n {
            let t = cols[k][j];
            for i in 0..n {
                if cols[t][cols[k][i]] != cols[k][cols[j][i]] {
                    return false;
                }
            }
        }
    }
    true
}
