//! Built-in worked examples: the small quandles and maps that exercise every
//! corner of the factorisation machinery. Letters in the usual presentations
//! map to indices in table order (a, b, c, … ↦ 0, 1, 2, …).

use crate::hom::Hom;
use crate::quandle::Quandle;

/// Four-element involutive quandle in which only the last column acts:
/// `a ◁ d = b`, `b ◁ d = a`, everything else is fixed.
pub fn a4() -> Quandle {
    Quandle::from_table(vec![
        vec![0, 0, 0, 1],
        vec![1, 1, 1, 0],
        vec![2, 2, 2, 2],
        vec![3, 3, 3, 3],
    ])
    .expect("a4 fixture")
}

/// Trivial quandle on `{x, y}`.
pub fn b2() -> Quandle {
    Quandle::trivial(2)
}

/// Dihedral quandle on three elements: `i ◁ j = (2j − i) mod 3`.
pub fn r3() -> Quandle {
    Quandle::from_table(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).expect("r3 fixture")
}

/// Five-element involutive quandle whose only acting translation is
/// `ρ_c = (a b)(d e)`.
pub fn a5() -> Quandle {
    Quandle::from_table(vec![
        vec![0, 0, 1, 0, 0],
        vec![1, 1, 0, 1, 1],
        vec![2, 2, 2, 2, 2],
        vec![3, 3, 4, 3, 3],
        vec![4, 4, 3, 4, 4],
    ])
    .expect("a5 fixture")
}

/// Four-element involutive quandle whose only acting translation is
/// `ρ_y = (z w)`.
pub fn x4() -> Quandle {
    Quandle::from_table(vec![
        vec![0, 0, 0, 0],
        vec![1, 1, 1, 1],
        vec![2, 3, 2, 2],
        vec![3, 2, 3, 3],
    ])
    .expect("x4 fixture")
}

/// Trivial quandle on three elements.
pub fn m3() -> Quandle {
    Quandle::trivial(3)
}

/// Surjection `a4 → b2` collapsing `{a, b, c}`.
pub fn f4() -> Hom {
    Hom::new(a4(), b2(), vec![0, 0, 0, 1]).expect("f4 fixture")
}

/// Section of `f4` picking `c` and `d`.
pub fn s4() -> Hom {
    Hom::new(b2(), a4(), vec![2, 3]).expect("s4 fixture")
}

/// Surjection `a5 → x4` collapsing only `{a, b}`.
pub fn g5() -> Hom {
    Hom::new(a5(), x4(), vec![0, 0, 1, 2, 3]).expect("g5 fixture")
}

/// Surjection `x4 → m3` collapsing only `{z, w}`.
pub fn f5() -> Hom {
    Hom::new(x4(), m3(), vec![0, 1, 2, 2]).expect("f5 fixture")
}
