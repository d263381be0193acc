use super::{ReesMatrixSemigroup0, Triple};
use crate::error::{Error, Result};

/// Whether the idempotents generate every nonzero element, by closing the
/// idempotents under the product. Independent of the normal form.
pub fn rms_brute_idempotent_generated(rms: &ReesMatrixSemigroup0, cap: usize) -> Result<bool> {
    let total = rms.nonzero_count();
    if total > cap {
        return Err(Error::CapExceeded(cap));
    }
    let (m, rows) = (rms.group().order(), rms.row_count());
    let code = |x: Triple| (x.i * m + x.g) * rows + x.lambda;
    let mut idempotents = Vec::new();
    for i in 0..rms.column_count() {
        for lambda in 0..rows {
            for g in 0..m {
                let x = Triple { i, g, lambda };
                if rms.is_idempotent(x) {
                    idempotents.push(x);
                }
            }
        }
    }
    let mut seen = vec![false; total];
    let mut reached = Vec::with_capacity(total);
    for &e in &idempotents {
        if !seen[code(e)] {
            seen[code(e)] = true;
            reached.push(e);
        }
    }
    let mut head = 0;
    while head < reached.len() {
        let x = reached[head];
        head += 1;
        for &e in &idempotents {
            if let Some(y) = rms.multiply(Some(x), Some(e)) {
                if !seen[code(y)] {
                    seen[code(y)] = true;
                    reached.push(y);
                }
            }
        }
    }
    Ok(reached.len() == total)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{rms, s2, trivial};
    use super::*;

    #[test]
    fn small_cases() {
        assert!(rms_brute_idempotent_generated(&rms(trivial(), vec![vec![Some(0)]]), 100).unwrap());
        let diag = rms(trivial(), vec![vec![Some(0), None], vec![None, Some(0)]]);
        assert!(!rms_brute_idempotent_generated(&diag, 100).unwrap());
        let twisted = rms(s2(), vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]]);
        assert!(rms_brute_idempotent_generated(&twisted, 100).unwrap());
        let flat = rms(s2(), vec![vec![Some(1), Some(1)], vec![Some(1), Some(1)]]);
        assert!(!rms_brute_idempotent_generated(&flat, 100).unwrap());
        assert_eq!(rms_brute_idempotent_generated(&flat, 7), Err(Error::CapExceeded(7)));
    }
}
