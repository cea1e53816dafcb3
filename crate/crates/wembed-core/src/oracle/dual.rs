//! Query dualization. Inside the reflexive range (every exponent
//! strictly between 1 and infinity) each space in the catalogue has a
//! dual of the same family with conjugate exponents and negated weight,
//! and an embedding holds iff the reversed embedding of the duals holds.
//! Used as a meta-test on the catalogue, never as a decision path.

use super::*;
use crate::indices::dual_index;

/// Swap source and target, replacing each space by its dual.
///
/// Errors with `OutOfDualityRange` unless every exponent of both spaces
/// lies strictly between 1 and infinity.
pub fn dualize_query(query: &EmbeddingQuery) -> Result<EmbeddingQuery, OracleError> {
    let src = dualize_space(&query.src)?;
    let dst = dualize_space(&query.dst)?;
    Ok(EmbeddingQuery { src: dst, dst: src, d: query.d, options: query.options })
}

fn dualize_space(space: &SpaceSpec) -> Result<SpaceSpec, OracleError> {
    use SpaceSpec::*;
    let check = |e: ReciprocalIndex, name: &str| -> Result<ReciprocalIndex, OracleError> {
        if e.exp_gt_int(1) && e.is_finite() {
            Ok(dual_index(e))
        } else {
            Err(OracleError::OutOfDualityRange(format!("{name} = {e} in {space}")))
        }
    };
    Ok(match *space {
        Sobolev { r, s } => Sobolev { r: check(r, "r")?, s: -s },
        LocalHardy { r, s } => LocalHardy { r: check(r, "r")?, s: -s },
        Besov { p, q, s } => Besov { p: check(p, "p")?, q: check(q, "q")?, s: -s },
        Triebel { p, q, s } => Triebel { p: check(p, "p")?, q: check(q, "q")?, s: -s },
        Modulation { p, q, s } => Modulation { p: check(p, "p")?, q: check(q, "q")?, s: -s },
        Wiener { p, q, s } => Wiener { p: check(p, "p")?, q: check(q, "q")?, s: -s },
        AlphaModulation { p, q, s, alpha } => AlphaModulation {
            p: check(p, "p")?,
            q: check(q, "q")?,
            s: -s,
            alpha,
        },
        SeqWeighted0 { q, s } => SeqWeighted0 { q: check(q, "q")?, s: -s },
        SeqWeighted1 { q, s } => SeqWeighted1 { q: check(q, "q")?, s: -s },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{rat, D1};

    fn exp(s: &str) -> ReciprocalIndex {
        s.parse().unwrap()
    }

    #[test]
    fn modulation_into_wiener_dualizes_to_the_reverse_pair() {
        let q = EmbeddingQuery::new(
            SpaceSpec::Modulation { p: exp("3/2"), q: exp("4"), s: rat(1, 2) },
            SpaceSpec::Wiener { p: exp("2"), q: exp("3"), s: rat(0, 1) },
            D1,
        );
        let dual = dualize_query(&q).unwrap();
        assert_eq!(
            dual.src,
            SpaceSpec::Wiener { p: exp("2"), q: exp("3/2"), s: rat(0, 1) }
        );
        assert_eq!(
            dual.dst,
            SpaceSpec::Modulation { p: exp("3"), q: exp("4/3"), s: rat(-1, 2) }
        );
    }

    #[test]
    fn self_dual_point_is_fixed_up_to_swap() {
        let q = EmbeddingQuery::new(
            SpaceSpec::Modulation { p: exp("2"), q: exp("2"), s: rat(0, 1) },
            SpaceSpec::Wiener { p: exp("2"), q: exp("2"), s: rat(0, 1) },
            D1,
        );
        let dual = dualize_query(&q).unwrap();
        assert_eq!(dual.src, q.dst);
        assert_eq!(dual.dst, q.src);
    }

    #[test]
    fn endpoint_exponents_are_rejected() {
        for p in ["1", "inf", "1/2"] {
            let q = EmbeddingQuery::new(
                SpaceSpec::Modulation { p: exp(p), q: exp("2"), s: rat(0, 1) },
                SpaceSpec::Wiener { p: exp("2"), q: exp("2"), s: rat(0, 1) },
                D1,
            );
            assert!(
                matches!(dualize_query(&q), Err(OracleError::OutOfDualityRange(_))),
                "p = {p} should be out of range"
            );
        }
    }
}
