use serde::Serialize;

use super::exact::BigCount;
use super::formulas::splitters_two_set;
use crate::error::{ensure_at_most, Result};
use crate::setcore::Arrangement2;

/// Largest `k` accepted by [`verify_point_moving_lemmas`].
pub const MAX_LEMMA_K: u64 = 15;

/// The two-set point-moving statements checked by
/// [`verify_point_moving_lemmas`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointMovingLemma {
    /// Even members: permuting `(a1, b, a2)` keeps the count.
    Swap,
    /// Even members, `d = 0`: moving a point across one boundary never
    /// lowers the count.
    NoOdd,
    /// `b, d > 0`: `(a1+1, b-1, a2+1, d-1)` has no more splitters.
    ExtZeroStep,
    /// Some arrangement with `d = 0` has no more splitters.
    ExtZeroExists,
    /// Even members, `d = 0`, `2 <= a1 <= a2`: moving two points from
    /// `a1` to `a2` never lowers the count.
    TwoPoint,
}

/// A failed instance: `lhs <= rhs` (or `lhs == rhs` for swap) was expected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: PointMovingLemma,
    pub lhs: Arrangement2,
    pub rhs: Arrangement2,
    #[serde(serialize_with = "crate::counting::serialize_decimal")]
    pub lhs_count: BigCount,
    #[serde(serialize_with = "crate::counting::serialize_decimal")]
    pub rhs_count: BigCount,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub k: u64,
    /// Instances checked per lemma.
    pub checked: Vec<(PointMovingLemma, u64)>,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Checker {
    report: LemmaReport,
}

impl Checker {
    fn expect(
        &mut self,
        lemma: PointMovingLemma,
        lhs: Arrangement2,
        rhs: Arrangement2,
        equal: bool,
    ) {
        let (l, r) = (splitters_two_set(lhs), splitters_two_set(rhs));
        let ok = if equal { l == r } else { l <= r };
        self.bump(lemma);
        if !ok {
            self.report.violations.push(LemmaViolation {
                lemma,
                lhs,
                rhs,
                lhs_count: l,
                rhs_count: r,
            });
        }
    }

    fn bump(&mut self, lemma: PointMovingLemma) {
        match self.report.checked.iter_mut().find(|(l, _)| *l == lemma) {
            Some((_, n)) => *n += 1,
            None => self.report.checked.push((lemma, 1)),
        }
    }
}

fn shift(v: u64, by: i64) -> Option<u64> {
    v.checked_add_signed(by)
}

/// Checks every point-moving statement on every arrangement of total `k`
/// meeting its hypotheses, with exact counts.
pub fn verify_point_moving_lemmas(k: u64) -> Result<LemmaReport> {
    use PointMovingLemma::*;
    ensure_at_most("ground set size", k, MAX_LEMMA_K)?;
    let mut c = Checker {
        report: LemmaReport {
            k,
            ..LemmaReport::default()
        },
    };
    let best_zero_d = Arrangement2::all_with_total(k)
        .filter(|a| a.d == 0)
        .min_by_key(|&a| splitters_two_set(a));

    for a in Arrangement2::all_with_total(k) {
        let even = a.is_even();
        if even {
            let v = [a.a1, a.b, a.a2];
            for p in [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ] {
                c.expect(
                    Swap,
                    a,
                    Arrangement2::new(v[p[0]], v[p[1]], v[p[2]], a.d),
                    true,
                );
            }
        }
        if even && a.d == 0 {
            for e1 in -1i64..=1 {
                for e2 in -1i64..=1 {
                    let moved = (|| {
                        Some(Arrangement2::new(
                            shift(a.a1, e1)?,
                            shift(a.b, -e1 - e2)?,
                            shift(a.a2, e2)?,
                            0,
                        ))
                    })();
                    if let Some(m) = moved {
                        c.expect(NoOdd, a, m, false);
                    }
                }
            }
            if 2 <= a.a1 && a.a1 <= a.a2 {
                c.expect(
                    TwoPoint,
                    a,
                    Arrangement2::new(a.a1 - 2, a.b, a.a2 + 2, 0),
                    false,
                );
            }
        }
        if a.b > 0 && a.d > 0 {
            c.expect(
                ExtZeroStep,
                Arrangement2::new(a.a1 + 1, a.b - 1, a.a2 + 1, a.d - 1),
                a,
                false,
            );
        }
        if let Some(z) = best_zero_d {
            c.expect(ExtZeroExists, z, a, false);
        }
    }
    c.report.checked.sort();
    Ok(c.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_up_to_nine() {
        for k in 0..=9 {
            let r = verify_point_moving_lemmas(k).unwrap();
            assert!(r.is_clean(), "k={k}: {:?}", r.violations);
        }
    }

    #[test]
    fn instances() {
        assert_eq!(
            splitters_two_set(Arrangement2::new(2, 4, 2, 0)),
            splitters_two_set(Arrangement2::new(4, 2, 2, 0))
        );
        assert!(
            splitters_two_set(Arrangement2::new(2, 2, 2, 0))
                <= splitters_two_set(Arrangement2::new(0, 2, 4, 0))
        );
    }

    #[test]
    fn every_lemma_is_exercised() {
        let r = verify_point_moving_lemmas(8).unwrap();
        assert_eq!(r.checked.len(), 5);
        assert!(r.checked.iter().all(|&(_, n)| n > 0));
        assert!(verify_point_moving_lemmas(16).is_err());
    }
}
