use serde::{Deserialize, Serialize};

/// Largest number of cells a single move removes from a free row (the placed
/// counter and its two neighbours).
pub const MAX_REMOVAL: usize = 3;

/// Evidence that a Grundy sequence is eventually periodic.
///
/// For octal games whose moves remove at most `t` cells, `g[k + p] = g[k]` for
/// all `q <= k < 2q + p + t` implies periodicity forever (Guy and Smith). With
/// `t = 3` the checked window is `q..=2q + p + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodCertificate {
    pub preperiod: usize,
    pub period: usize,
    /// Inclusive range of `k` over which `g[k + period] == g[k]` was checked.
    pub verified_window: (usize, usize),
}

impl PeriodCertificate {
    /// Re-checks the certificate against a tabulated prefix.
    pub fn holds_for(&self, sequence: &[u32]) -> bool {
        let (start, end) = self.verified_window;
        self.period >= 1
            && start == self.preperiod
            && end == window_end(self.preperiod, self.period)
            && end + self.period < sequence.len()
            && (start..=end).all(|k| sequence[k + self.period] == sequence[k])
    }

    /// Value of `g[k]` for any `k`, using the certified period beyond the prefix.
    pub fn extrapolate(&self, sequence: &[u32], k: usize) -> Option<u32> {
        if k < sequence.len() {
            return Some(sequence[k]);
        }
        if self.period == 0 || k < self.preperiod {
            return None;
        }
        let offset = (k - self.preperiod) % self.period;
        sequence.get(self.preperiod + offset).copied()
    }
}

fn window_end(preperiod: usize, period: usize) -> usize {
    2 * preperiod + period + MAX_REMOVAL - 1
}

/// Smallest `(preperiod, period)` pair, ordered by preperiod then period,
/// whose sufficiency window fits inside the tabulated prefix.
pub fn detect_period(sequence: &[u32]) -> Option<PeriodCertificate> {
    let len = sequence.len();
    let mut preperiod = 0;
    // the window for (q, 1) needs index 2q + 4
    while window_end(preperiod, 1) + 1 < len {
        let mut period = 1;
        while window_end(preperiod, period) + period < len {
            let end = window_end(preperiod, period);
            if (preperiod..=end).all(|k| sequence[k + period] == sequence[k]) {
                return Some(PeriodCertificate {
                    preperiod,
                    period,
                    verified_window: (preperiod, end),
                });
            }
            period += 1;
        }
        preperiod += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_sequence() {
        let cert = detect_period(&[0; 100]).unwrap();
        assert_eq!((cert.preperiod, cert.period), (0, 1));
        assert_eq!(cert.verified_window, (0, 3));
        assert!(cert.holds_for(&[0; 100]));
    }

    #[test]
    fn too_short() {
        assert_eq!(detect_period(&[0, 1]), None);
        assert_eq!(detect_period(&[]), None);
        assert_eq!(detect_period(&[0, 0, 0, 0]), None);
        assert!(detect_period(&[0, 0, 0, 0, 0]).is_some());
    }

    #[test]
    fn pure_period_two() {
        let seq: Vec<u32> = (0..50).map(|k| (k % 2) as u32).collect();
        let cert = detect_period(&seq).unwrap();
        assert_eq!((cert.preperiod, cert.period), (0, 2));
    }

    #[test]
    fn preperiod_is_found() {
        let mut seq = vec![5, 7];
        seq.extend((0..60).map(|k| (k % 3) as u32));
        let cert = detect_period(&seq).unwrap();
        assert_eq!((cert.preperiod, cert.period), (2, 3));
        assert!(cert.holds_for(&seq));
        assert_eq!(cert.extrapolate(&seq, 1000), Some(((1000 - 2) % 3) as u32));
    }
}
