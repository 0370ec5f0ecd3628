//! Hand-built machines shared by unit tests across modules.

use crate::machine::Mealy;

pub fn adding_machine() -> Mealy {
    Mealy::from_rules(
        &["a", "e"],
        &["0", "1"],
        &[
            ("a", "0", "e", "1"),
            ("a", "1", "a", "0"),
            ("e", "0", "e", "0"),
            ("e", "1", "e", "1"),
        ],
    )
    .unwrap()
}

/// Five-state Grigorchuk machine. The generator labeling is the variant with
/// b = (a, c), c = (1, d), d = (a, b); it generates the same group as any
/// other labeling of the non-rooted generators.
pub fn grigorchuk_machine() -> Mealy {
    Mealy::from_rules(
        &["a", "b", "c", "d", "id"],
        &["0", "1"],
        &[
            ("a", "0", "id", "1"),
            ("a", "1", "id", "0"),
            ("b", "0", "a", "0"),
            ("b", "1", "c", "1"),
            ("c", "0", "id", "0"),
            ("c", "1", "d", "1"),
            ("d", "0", "a", "0"),
            ("d", "1", "b", "1"),
            ("id", "0", "id", "0"),
            ("id", "1", "id", "1"),
        ],
    )
    .unwrap()
}

pub fn aleshin_machine() -> Mealy {
    Mealy::from_rules(
        &["a", "b", "c"],
        &["0", "1"],
        &[
            ("a", "0", "b", "1"),
            ("a", "1", "c", "0"),
            ("b", "0", "c", "1"),
            ("b", "1", "b", "0"),
            ("c", "0", "a", "0"),
            ("c", "1", "a", "1"),
        ],
    )
    .unwrap()
}

pub fn bellaterra_machine() -> Mealy {
    Mealy::from_rules(
        &["a", "b", "c"],
        &["0", "1"],
        &[
            ("a", "0", "c", "1"),
            ("a", "1", "c", "0"),
            ("b", "0", "a", "0"),
            ("b", "1", "b", "1"),
            ("c", "0", "b", "0"),
            ("c", "1", "a", "1"),
        ],
    )
    .unwrap()
}

/// Single identity sink on a binary alphabet.
pub fn sink_on_01() -> Mealy {
    Mealy::from_rules(
        &["e"],
        &["0", "1"],
        &[("e", "0", "e", "0"), ("e", "1", "e", "1")],
    )
    .unwrap()
}
