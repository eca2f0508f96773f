//! Name registry for the built-in fixtures. CLI arguments that do not name
//! an existing file fall back to this registry (with or without the
//! extension), so `qnd classify --dom A5.qnd …` works anywhere.

use qnd_core::{fixtures as core_fixtures, Hom, Quandle};

pub const QUANDLE_NAMES: &[&str] = &["A4", "B2", "R3", "A5", "X4", "M3"];
pub const HOM_NAMES: &[&str] = &["f4", "s4", "g5", "f5"];

/// Looks up a built-in quandle. `T<k>` resolves to the trivial quandle of
/// order `k`.
pub fn builtin_quandle(name: &str) -> Option<Quandle> {
    match name {
        "A4" => Some(core_fixtures::a4()),
        "B2" => Some(core_fixtures::b2()),
        "R3" => Some(core_fixtures::r3()),
        "A5" => Some(core_fixtures::a5()),
        "X4" => Some(core_fixtures::x4()),
        "M3" => Some(core_fixtures::m3()),
        _ => {
            let k: usize = name.strip_prefix('T')?.parse().ok()?;
            (1..=24).contains(&k).then(|| Quandle::trivial(k))
        }
    }
}

pub fn builtin_hom(name: &str) -> Option<Hom> {
    match name {
        "f4" => Some(core_fixtures::f4()),
        "s4" => Some(core_fixtures::s4()),
        "g5" => Some(core_fixtures::g5()),
        "f5" => Some(core_fixtures::f5()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_resolves_names() {
        for name in QUANDLE_NAMES {
            assert!(builtin_quandle(name).is_some(), "{name}");
        }
        for name in HOM_NAMES {
            assert!(builtin_hom(name).is_some(), "{name}");
        }
        assert_eq!(builtin_quandle("T5"), Some(Quandle::trivial(5)));
        assert!(builtin_quandle("T0").is_none());
        assert!(builtin_quandle("nope").is_none());
    }
}
