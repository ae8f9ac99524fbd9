//! Fixed workloads for the benchmarks in `benches/`.

use hsft_core::{
    normal_forms, substitute_ideal, GradedIdeal, HsSequence, LinearChange, TableRow, TypeLabel,
};

/// Every catalog ideal of `row`.
pub fn catalog_ideals(row: TableRow) -> Vec<GradedIdeal> {
    normal_forms(&TypeLabel::from(row))
        .expect("finite rows have catalogs")
        .into_iter()
        .map(|e| e.ideal)
        .collect()
}

/// A catalog ideal together with its image under a dense change of variables.
pub fn moved_pair(row: TableRow, index: usize) -> (GradedIdeal, GradedIdeal) {
    let ideal = catalog_ideals(row).swap_remove(index);
    let change = LinearChange::from_integers(2, -1, 3, 1).expect("invertible");
    let image = substitute_ideal(&ideal, &change).expect("invertible");
    (ideal, image)
}

pub fn sequence(entries: &[usize]) -> HsSequence {
    HsSequence::validate(entries).expect("valid sequence")
}
