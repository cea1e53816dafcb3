//! Sharp embeddings of the two weighted sequence scales. These are the
//! discrete skeletons the grid constructions reduce to: lattice-indexed
//! sequences with polynomial weight `<k>^s`, and natural-indexed
//! sequences with geometric weight `2^{js}`.

use super::*;
use crate::indices::D1;

/// Lattice-indexed scale: `l^{s1,0}_{q1} -> l^{s2,0}_{q2}` holds iff
/// (1) `q1 <= q2, s1 >= s2`; or (2) `q1 > q2, s1 + d/q1 > s2 + d/q2`.
pub fn decide_sequence_l0(
    q1: ReciprocalIndex,
    s1: Rational,
    q2: ReciprocalIndex,
    s2: Rational,
    d: Dimension,
) -> Verdict {
    let query = EmbeddingQuery::new(
        SpaceSpec::SeqWeighted0 { q: q1, s: s1 },
        SpaceSpec::SeqWeighted0 { q: q2, s: s2 },
        d,
    );
    let b = VerdictBuilder::new(TheoremId::SeqWeightedL0, &query);
    let dd = d.as_rational();
    if q1.exp_le(q2) {
        b.with_condition(
            "(1) q1 <= q2, s1 >= s2",
            SCondition::lower(s2, false),
            s1,
            ProbeFamily::SpreadTranslates,
        )
    } else {
        // s1 > s2 + d/q2 - d/q1 on the q1 > q2 side.
        let thr = s2 + dd * q2.recip() - dd * q1.recip();
        b.with_condition(
            "(2) q1 > q2, s1 + d/q1 > s2 + d/q2",
            SCondition::lower(thr, true),
            s1,
            ProbeFamily::SpreadTranslates,
        )
    }
}

/// Natural-indexed scale: `l^{s1,1}_{q1} -> l^{s2,1}_{q2}` holds iff
/// (1) `q1 <= q2, s1 >= s2`; or (2) `s1 > s2`.
pub fn decide_sequence_l1(
    q1: ReciprocalIndex,
    s1: Rational,
    q2: ReciprocalIndex,
    s2: Rational,
) -> Verdict {
    let query = EmbeddingQuery::new(
        SpaceSpec::SeqWeighted1 { q: q1, s: s1 },
        SpaceSpec::SeqWeighted1 { q: q2, s: s2 },
        D1,
    );
    let b = VerdictBuilder::new(TheoremId::SeqWeightedL1, &query);
    if q1.exp_le(q2) {
        b.with_condition(
            "(1) q1 <= q2, s1 >= s2",
            SCondition::lower(s2, false),
            s1,
            ProbeFamily::DyadicShellSum,
        )
    } else {
        b.with_condition(
            "(2) s1 > s2",
            SCondition::lower(s2, true),
            s1,
            ProbeFamily::DyadicShellSum,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::rat;

    fn exp(s: &str) -> ReciprocalIndex {
        s.parse().unwrap()
    }

    #[test]
    fn l0_examples() {
        // q1 <= q2 with nonincreasing weight
        let v = decide_sequence_l0(exp("2"), rat(1, 1), exp("4"), rat(0, 1), D1);
        assert_eq!(v.status, Status::Holds);
        assert!(v.clause.as_deref().unwrap().starts_with("(1)"));
        // identity embedding
        let v = decide_sequence_l0(exp("3"), rat(1, 2), exp("3"), rat(1, 2), D1);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.boundary, Boundary::NonStrictBoundary);
        // q1 > q2 needs 0 + 1/4 > 0 + 1/2, which fails
        let v = decide_sequence_l0(exp("4"), rat(0, 1), exp("2"), rat(0, 1), D1);
        assert_eq!(v.status, Status::Fails);
        assert!(v.clause.as_deref().unwrap().starts_with("(2)"));
    }

    #[test]
    fn l1_examples() {
        // strict weight gain wins regardless of exponents
        let v = decide_sequence_l1(ReciprocalIndex::infinity(), rat(1, 1), exp("1"), rat(0, 1));
        assert_eq!(v.status, Status::Holds);
        assert!(v.clause.as_deref().unwrap().starts_with("(2)"));
        // monotone in q at equal weight
        let v = decide_sequence_l1(exp("1"), rat(0, 1), ReciprocalIndex::infinity(), rat(0, 1));
        assert_eq!(v.status, Status::Holds);
        assert!(v.clause.as_deref().unwrap().starts_with("(1)"));
        // q1 > q2 at equal weight is not strict
        let v = decide_sequence_l1(exp("2"), rat(0, 1), exp("1"), rat(0, 1));
        assert_eq!(v.status, Status::Fails);
        assert_eq!(v.boundary, Boundary::StrictBoundaryExcluded);
    }
}
