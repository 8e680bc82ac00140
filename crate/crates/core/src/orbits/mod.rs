//! Catalogs of Borel orbits in the spherical nilpotent varieties handled
//! by this crate, one submodule per matrix family.

pub mod type_a;
pub mod type_bd;
pub mod type_c;

use crate::weyl::WeylFamily;

/// Strictly-lower matrix positions spanning the negative simple root
/// space adjoined by the k-th minimal parabolic, in the ambient
/// permutation realization of each Weyl family.
pub(crate) fn simple_relax(family: WeylFamily, ambient: usize, k: usize) -> Vec<(usize, usize)> {
    match family {
        WeylFamily::Symmetric => vec![(k + 1, k)],
        WeylFamily::TypeC => {
            let n = ambient / 2;
            if k < n {
                vec![(k + 1, k), (ambient + 1 - k, ambient - k)]
            } else {
                vec![(n + 1, n)]
            }
        }
        WeylFamily::TypeB => {
            let r = (ambient - 1) / 2;
            if k < r {
                vec![(k + 1, k), (ambient - k + 1, ambient - k)]
            } else {
                vec![(r + 1, r), (r + 2, r + 1)]
            }
        }
        WeylFamily::TypeD => {
            let r = ambient / 2;
            if k < r {
                vec![(k + 1, k), (ambient - k + 1, ambient - k)]
            } else {
                vec![(r + 1, r - 1), (r + 2, r)]
            }
        }
    }
}

/// Render a reduced word with a generator prefix: [2, 1] with "c" gives
/// "c2c1"; the empty word renders as "1".
pub(crate) fn word_label(prefix: &str, word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|i| format!("{prefix}{i}")).collect()
    }
}
