//! Best known distances of `[[n, k−c, d]]` codes for `3 ≤ n ≤ 10`, indexed
//! by `n` and `k − c ≥ 0`. Starred entries improve on the stabilizer-only
//! table.

use serde::Serialize;

const ROWS: [&[(u8, bool)]; 8] = [
    &[(2, false), (2, true), (1, false), (1, false)],
    &[(3, true), (2, false), (2, false), (1, false), (1, false)],
    &[(3, false), (3, false), (2, false), (2, true), (1, false), (1, false)],
    &[
        (4, false),
        (3, false),
        (2, false),
        (2, false),
        (2, false),
        (1, false),
        (1, false),
    ],
    &[
        (3, false),
        (3, false),
        (2, false),
        (2, false),
        (2, false),
        (2, true),
        (1, false),
        (1, false),
    ],
    &[
        (4, false),
        (3, false),
        (3, false),
        (3, false),
        (2, false),
        (2, false),
        (2, false),
        (1, false),
        (1, false),
    ],
    &[
        (4, false),
        (4, true),
        (3, false),
        (3, false),
        (2, false),
        (2, false),
        (2, false),
        (2, true),
        (1, false),
        (1, false),
    ],
    &[
        (5, true),
        (4, false),
        (4, false),
        (3, false),
        (3, false),
        (2, false),
        (2, false),
        (2, false),
        (2, false),
        (1, false),
        (1, false),
    ],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceEntry {
    pub d: usize,
    pub improved: bool,
}

pub fn reference_distance(n: usize, k_minus_c: i64) -> Option<ReferenceEntry> {
    let row = ROWS.get(n.checked_sub(3)?)?;
    let &(d, improved) = row.get(usize::try_from(k_minus_c).ok()?)?;
    Some(ReferenceEntry {
        d: d as usize,
        improved,
    })
}
