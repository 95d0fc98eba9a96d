use serde::{Deserialize, Serialize};

use crate::poly::Dir;
use crate::poly::StepWord;

/// A factorization of a rotated boundary word as `A·B·C·Â·B̂·Ĉ`, where `X̂`
/// reverses `X` and replaces each step by its opposite.
///
/// Factor ranges index the word rotated left by `rotation_offset`. `u` and
/// `v` are the displacements of `A·B` and `B·C`; they generate the lattice of
/// translations of the tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnFactorization {
    pub rotation_offset: usize,
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub c: (usize, usize),
    pub u: (i32, i32),
    pub v: (i32, i32),
}

impl BnFactorization {
    fn lengths(&self) -> Option<(usize, usize, usize)> {
        let (a, b, c) = (self.a, self.b, self.c);
        let contiguous = a.0 == 0 && a.1 == b.0 && b.1 == c.0;
        let ordered = a.0 <= a.1 && b.0 <= b.1 && c.0 <= c.1;
        (contiguous && ordered).then(|| (a.1 - a.0, b.1 - b.0, c.1 - c.0))
    }
}

fn matches_at(word: &[Dir], offset: usize, a: usize, b: usize, c: usize) -> bool {
    let n = word.len();
    let half = a + b + c;
    let at = |i: usize| word[(offset + i) % n];
    // each factor X at [s, s+len) pairs with X̂ at [s+half, s+half+len) reversed
    [(0, a), (a, b), (a + b, c)].iter().all(|&(start, len)| {
        (0..len).all(|j| at(start + j).opposite() == at(start + half + len - 1 - j))
    })
}

fn build(word: &[Dir], offset: usize, a: usize, b: usize, c: usize) -> BnFactorization {
    let n = word.len();
    let rotated: Vec<Dir> = (0..n).map(|i| word[(offset + i) % n]).collect();
    let disp = |from: usize, to: usize| StepWord::new(rotated[from..to].to_vec()).displacement();
    BnFactorization {
        rotation_offset: offset,
        a: (0, a),
        b: (a, a + b),
        c: (a + b, a + b + c),
        u: disp(0, a + b),
        v: disp(a, a + b + c),
    }
}

/// Searches every rotation and split point for a factorization. Scan order
/// is rotation, then `|A|` ascending, then `|B|` descending (so a pseudo-square
/// with empty `C` is preferred); the first hit is returned.
pub fn bn_factorize(boundary: &StepWord) -> Option<BnFactorization> {
    let word = boundary.steps();
    let n = word.len();
    if n == 0 || n % 2 != 0 {
        return None;
    }
    let half = n / 2;
    for offset in 0..n {
        for a in 1..=half {
            for b in (0..=(half - a)).rev() {
                let c = half - a - b;
                if b == 0 && c == 0 {
                    continue;
                }
                if matches_at(word, offset, a, b, c) {
                    return Some(build(word, offset, a, b, c));
                }
            }
        }
    }
    None
}

/// Checks the factor bookkeeping, the concatenation identity and the stated
/// translation vectors.
pub fn verify_bn(boundary: &StepWord, cert: &BnFactorization) -> bool {
    let word = boundary.steps();
    let n = word.len();
    let Some((a, b, c)) = cert.lengths() else {
        return false;
    };
    let empties = [a, b, c].iter().filter(|&&len| len == 0).count();
    if n == 0 || 2 * (a + b + c) != n || empties > 1 || cert.rotation_offset >= n {
        return false;
    }
    matches_at(word, cert.rotation_offset, a, b, c)
        && build(word, cert.rotation_offset, a, b, c) == *cert
}
