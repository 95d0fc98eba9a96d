use super::word::TurnWord;

/// Representative of a polygon's congruence class: the least turn word over
/// every starting corner of the polygon and of its mirror image.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub TurnWord);

impl CanonicalForm {
    pub fn word(&self) -> &TurnWord {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Clockwise words are first reversed and complemented, which walks the same
/// boundary counterclockwise.
fn counterclockwise(turns: &TurnWord) -> TurnWord {
    if turns.winding() < 0 {
        turns.reverse_complement()
    } else {
        turns.clone()
    }
}

fn least_rotation(word: &TurnWord) -> TurnWord {
    (0..word.len().max(1))
        .map(|k| word.rotated(k))
        .min()
        .unwrap_or_default()
}

/// Canonical form under translation, rotation, reflection, traversal
/// direction and starting corner.
///
/// A mirror image traversed counterclockwise reads the original corners in
/// reverse order with convexity preserved, so the reflected candidates are
/// the rotations of the reversed word.
pub fn canonical(turns: &TurnWord) -> CanonicalForm {
    let ccw = counterclockwise(turns);
    let direct = least_rotation(&ccw);
    let mirrored = least_rotation(&ccw.reversed());
    CanonicalForm(direct.min(mirrored))
}

/// Canonical form under orientation-preserving motions only; mirror images
/// stay distinct.
pub fn canonical_chiral(turns: &TurnWord) -> CanonicalForm {
    CanonicalForm(least_rotation(&counterclockwise(turns)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tw(s: &str) -> TurnWord {
        s.parse().unwrap()
    }

    #[test]
    fn fixed_point_and_invariances() {
        assert_eq!(canonical(&tw("LLLL")).to_string(), "LLLL");
        let plus = tw("LLRLLRLLRLLR");
        for k in 0..12 {
            assert_eq!(canonical(&plus.rotated(k)), canonical(&plus));
        }
        let w = tw("LLRLLRLRLLRLRLRLLRLLRLRR");
        assert_eq!(canonical(&w), canonical(&w.reverse_complement()));
        assert_eq!(canonical(&w), canonical(&w.reversed()));
        assert_eq!(
            canonical_chiral(&w),
            canonical_chiral(&w.reverse_complement())
        );
    }

    #[test]
    fn chiral_form_separates_mirror_images() {
        // L-shaped hexomino-like word with no mirror symmetry
        let w = tw("LLRLLRLRLLRLRLRLLRLLRLRR");
        let m = w.reversed();
        assert_eq!(canonical(&w), canonical(&m));
        assert_ne!(canonical_chiral(&w), canonical_chiral(&m));
    }
}
