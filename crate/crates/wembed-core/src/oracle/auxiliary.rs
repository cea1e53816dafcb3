//! Sharp embedding predicates imported from prior work, exposed under
//! `external-sharp:` ids. The primary catalogue's proofs lean on these,
//! and the consistency tests cross-check the primary entries against
//! them on shared index patterns.
//!
//! The scale-internal entries (same family on both sides) restate
//! one-directional monotonicity facts: they answer `Holds` when a known
//! sufficient clause applies and `OutsideHypothesis` otherwise, never
//! `Fails`.

use super::*;
use crate::indices::{index_a, rat, sigma, sigma1, tau, tau1};

/// `L^{s,p} -> W_{p,q}` (diagonal `r = p`): holds iff one of
/// (1) `p > q, q < 2, s > tau1(p,q)`;
/// (2) `1 < p, (p <= q or 2 <= q), s >= tau1(p,q)`;
/// (3) `p = 1, q = inf, s >= tau1(p,q)`;
/// (4) `p = 1, q < inf, s > tau1(p,q)`.
pub fn sobolev_into_wiener_diagonal(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Sobolev { r, s: ss }, SpaceSpec::Wiener { p, q, s: sw }) =
        (&query.src, &query.dst)
    else {
        return Err(unsupported(query));
    };
    if r != p {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxSobolevIntoWienerDiagonal, query);
    if p.exp_lt_int(1) {
        return Ok(b.outside("stated for 1 <= p <= inf"));
    }
    let s = *ss - *sw;
    let thr = tau1(p, q, query.d);
    let hint = dyadic_piece_hint(tau1_piece(p, q));
    if p.exp_eq_int(1) {
        if q.is_infinite() {
            Ok(b.with_condition(
                "(3) p=1, q=inf, s >= tau1(p,q)",
                SCondition::lower(thr, false),
                s,
                hint,
            ))
        } else {
            Ok(b.with_condition(
                "(4) p=1, q<inf, s > tau1(p,q)",
                SCondition::lower(thr, true),
                s,
                ProbeFamily::ApproxIdentity,
            ))
        }
    } else if p.exp_gt(q) && q.exp_lt_int(2) {
        Ok(b.with_condition(
            "(1) p>q, q<2, s > tau1(p,q)",
            SCondition::lower(thr, true),
            s,
            hint,
        ))
    } else {
        Ok(b.with_condition(
            "(2) 1<p, (p<=q or 2<=q), s >= tau1(p,q)",
            SCondition::lower(thr, false),
            s,
            hint,
        ))
    }
}

/// `h_p -> W^{-s}_{p,q}` (diagonal `r = p`): holds iff `s >= tau1(p,q)`,
/// strictly when `1/q < min(1/p, 1/2)`.
pub fn hardy_into_wiener_diagonal(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::LocalHardy { r, s: sh }, SpaceSpec::Wiener { p, q, s: sw }) =
        (&query.src, &query.dst)
    else {
        return Err(unsupported(query));
    };
    if r != p {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxHardyIntoWienerDiagonal, query);
    let s = *sh - *sw;
    let thr = tau1(p, q, query.d);
    let strict = q.recip() < p.recip().min(rat(1, 2));
    let hint = dyadic_piece_hint(tau1_piece(p, q));
    Ok(b.with_condition(
        "s >= tau1(p,q), strict when 1/q < min(1/p,1/2)",
        SCondition::lower(thr, strict),
        s,
        hint,
    ))
}

/// `W^{-s}_{p,q} -> h_p` (diagonal): holds iff `s <= sigma1(p,q)`,
/// strictly when `1/q > max(1/p, 1/2)`.
pub fn wiener_into_hardy_diagonal(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Wiener { p, q, s: sw }, SpaceSpec::LocalHardy { r, s: sh }) =
        (&query.src, &query.dst)
    else {
        return Err(unsupported(query));
    };
    if r != p {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxWienerIntoHardyDiagonal, query);
    let s = *sh - *sw;
    let thr = sigma1(p, q, query.d);
    let strict = q.recip() > p.recip().max(rat(1, 2));
    let hint = dyadic_piece_hint(sigma1_piece(p, q));
    Ok(b.with_condition(
        "s <= sigma1(p,q), strict when 1/q > max(1/p,1/2)",
        SCondition::upper(thr, strict),
        s,
        hint,
    ))
}

/// `B^s_{p,q} -> W_{p,q}` (full diagonal): holds iff `s >= tau1(p,q)`,
/// strictly when `p < q`.
pub fn besov_into_wiener_diagonal(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Besov { p: pb, q: qb, s: sb }, SpaceSpec::Wiener { p, q, s: sw }) =
        (&query.src, &query.dst)
    else {
        return Err(unsupported(query));
    };
    if pb != p || qb != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxBesovIntoWienerDiagonal, query);
    let s = *sb - *sw;
    let thr = tau1(p, q, query.d);
    let hint = dyadic_piece_hint(tau1_piece(p, q));
    Ok(b.with_condition(
        "s >= tau1(p,q), strict when p < q",
        SCondition::lower(thr, p.exp_lt(q)),
        s,
        hint,
    ))
}

/// `W_{p,q} -> B^s_{p,q}` (full diagonal): holds iff `s <= sigma1(p,q)`,
/// strictly when `p > q`.
pub fn wiener_into_besov_diagonal(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Wiener { p, q, s: sw }, SpaceSpec::Besov { p: pb, q: qb, s: sb }) =
        (&query.src, &query.dst)
    else {
        return Err(unsupported(query));
    };
    if pb != p || qb != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxWienerIntoBesovDiagonal, query);
    let s = *sb - *sw;
    let thr = sigma1(p, q, query.d);
    let hint = dyadic_piece_hint(sigma1_piece(p, q));
    Ok(b.with_condition(
        "s <= sigma1(p,q), strict when p > q",
        SCondition::upper(thr, p.exp_gt(q)),
        s,
        hint,
    ))
}

/// `B^s_{p,q} -> M_{p,q}`: holds iff `s >= tau(p,q)`.
pub(super) fn besov_into_modulation(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Besov { p: pb, q: qb, s: sb }, SpaceSpec::Modulation { p, q, s: sm }) =
        (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pb != p || qb != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxBesovIntoModulation, query);
    let s = *sb - *sm;
    let thr = tau(p, q, query.d);
    Ok(b.with_condition(
        "s >= tau(p,q)",
        SCondition::lower(thr, false),
        s,
        ProbeFamily::DyadicShellSum,
    ))
}

/// `M^{s,a}_{p,q} -> M_{p,q}`: holds iff `s >= a*tau(p,q)`.
pub(super) fn alpha_modulation_into_modulation(
    query: &EmbeddingQuery,
) -> Result<Verdict, OracleError> {
    let (
        SpaceSpec::AlphaModulation { p: pa, q: qa, s: sa, alpha },
        SpaceSpec::Modulation { p, q, s: sm },
    ) = (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pa != p || qa != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxAlphaModulationIntoModulation, query);
    let s = *sa - *sm;
    let thr = alpha.get() * tau(p, q, query.d);
    Ok(b.with_condition(
        "s >= alpha*tau(p,q)",
        SCondition::lower(thr, false),
        s,
        ProbeFamily::AlphaBlockTranslates,
    ))
}

/// `M_{p,q} -> M^{s,a}_{p,q}`: holds iff `s <= a*sigma(p,q)`.
pub(super) fn modulation_into_alpha_modulation(
    query: &EmbeddingQuery,
) -> Result<Verdict, OracleError> {
    let (
        SpaceSpec::Modulation { p, q, s: sm },
        SpaceSpec::AlphaModulation { p: pa, q: qa, s: sa, alpha },
    ) = (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pa != p || qa != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxModulationIntoAlphaModulation, query);
    let s = *sa - *sm;
    let thr = alpha.get() * sigma(p, q, query.d);
    Ok(b.with_condition(
        "s <= alpha*sigma(p,q)",
        SCondition::upper(thr, false),
        s,
        ProbeFamily::AlphaBlockTranslates,
    ))
}

/// `B^s_{p,q} -> M^{0,a}_{p,q}`: holds iff `s >= (1-a)*tau(p,q)`.
pub(super) fn besov_into_alpha_modulation(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (
        SpaceSpec::Besov { p: pb, q: qb, s: sb },
        SpaceSpec::AlphaModulation { p, q, s: sa, alpha },
    ) = (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pb != p || qb != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxBesovIntoAlphaModulation, query);
    let s = *sb - *sa;
    let thr = alpha.one_minus() * tau(p, q, query.d);
    Ok(b.with_condition(
        "s >= (1-alpha)*tau(p,q)",
        SCondition::lower(thr, false),
        s,
        ProbeFamily::DyadicShellSum,
    ))
}

/// `M^{0,a}_{p,q} -> B^s_{p,q}`: holds iff `s <= (1-a)*sigma(p,q)`.
pub(super) fn alpha_modulation_into_besov(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (
        SpaceSpec::AlphaModulation { p, q, s: sa, alpha },
        SpaceSpec::Besov { p: pb, q: qb, s: sb },
    ) = (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pb != p || qb != q {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxAlphaModulationIntoBesov, query);
    let s = *sb - *sa;
    let thr = alpha.one_minus() * sigma(p, q, query.d);
    Ok(b.with_condition(
        "s <= (1-alpha)*sigma(p,q)",
        SCondition::upper(thr, false),
        s,
        ProbeFamily::DyadicShellSum,
    ))
}

/// `F^s_{p,r} -> M_{p,q}` for `0 < p <= 1`: holds iff
/// (1) `p <= q, s >= d(1/p+1/q-1)`; or (2) `p > q, s > d(1/p+1/q-1)`.
pub(super) fn triebel_into_modulation(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Triebel { p: pf, s: sf, .. }, SpaceSpec::Modulation { p, q, s: sm }) =
        (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pf != p {
        return Err(unsupported(query));
    }
    let (p, q) = (*p, *q);
    let b = VerdictBuilder::new(TheoremId::AuxTriebelIntoModulation, query);
    if !p.exp_le_int(1) {
        return Ok(b.outside("stated for 0 < p <= 1"));
    }
    let s = *sf - *sm;
    let thr = index_a(p, q, query.d);
    let strict = p.exp_gt(q);
    let clause = if strict {
        "(2) p>q, s > d(1/p+1/q-1)"
    } else {
        "(1) p<=q, s >= d(1/p+1/q-1)"
    };
    Ok(b.with_condition(clause, SCondition::lower(thr, strict), s, ProbeFamily::DyadicShellSum))
}

/// `M_{p,q} -> F^s_{p,r}` for `0 < p <= 1`: holds iff one of
/// (1) `p >= q, r >= q, s <= 0`;
/// (2) `p >= q, r < q, s < 0`;
/// (3) `p < q, s < d(1/q - 1/p)`.
pub(super) fn modulation_into_triebel(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (SpaceSpec::Modulation { p, q, s: sm }, SpaceSpec::Triebel { p: pf, q: rf, s: sf }) =
        (&query.src, &query.dst)
    else {
        unreachable!()
    };
    if pf != p {
        return Err(unsupported(query));
    }
    let (p, q, r) = (*p, *q, *rf);
    let b = VerdictBuilder::new(TheoremId::AuxModulationIntoTriebel, query);
    if !p.exp_le_int(1) {
        return Ok(b.outside("stated for 0 < p <= 1"));
    }
    let s = *sf - *sm;
    let d = query.d.as_rational();
    let hint = ProbeFamily::UniformLacunary;
    if p.exp_ge(q) {
        if r.exp_ge(q) {
            Ok(b.with_condition(
                "(1) p>=q, r>=q, s <= 0",
                SCondition::upper(rat(0, 1), false),
                s,
                hint,
            ))
        } else {
            Ok(b.with_condition(
                "(2) p>=q, r<q, s < 0",
                SCondition::upper(rat(0, 1), true),
                s,
                hint,
            ))
        }
    } else {
        let thr = d * (q.recip() - p.recip());
        Ok(b.with_condition(
            "(3) p<q, s < d(1/q-1/p)",
            SCondition::upper(thr, true),
            s,
            hint,
        ))
    }
}

/// Scale-internal embedding on the uniform-decomposition scale (both
/// sides modulation, or both sides amalgam). Sufficient clauses only:
/// (m) `s_dst <= s_src, p_src <= p_dst, q_src <= q_dst`;
/// (t) same `p`, `q_dst < q_src, s_src + d/q_src > s_dst + d/q_dst`.
pub(super) fn uniform_scale_embedding(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let (p1, q1, s1) = uniform_parts(&query.src);
    let (p0, q0, s0) = uniform_parts(&query.dst);
    let b = VerdictBuilder::new(TheoremId::AuxUniformScaleEmbedding, query);
    let d = query.d.as_rational();
    if s0 <= s1 && p1.exp_le(p0) && q1.exp_le(q0) {
        let boundary = if s0 == s1 && (p1 == p0 || q1 == q0) {
            Boundary::NonStrictBoundary
        } else {
            Boundary::Interior
        };
        return Ok(b.holds("(m) monotone in s, p, q", boundary));
    }
    if p1 == p0 && q0.exp_lt(q1) && s1 + d * q1.recip() > s0 + d * q0.recip() {
        return Ok(b.holds("(t) trade summation for weight: s + d/q decreases", Boundary::Interior));
    }
    Ok(b.outside("no sufficient monotonicity clause applies; sharpness not catalogued"))
}

/// Scale-internal embedding on the dyadic scale (Besov-Besov or
/// Triebel-Triebel). Sufficient clauses only:
/// (1) same `p`, same `s`, `q_src <= q_dst`;
/// (2) same `p`, `s_src > s_dst` (any summation exponents);
/// (4) Besov: `p_src <= p_dst` on the same Sobolev line
///     `s - d/p = const`, same `q`;
/// (5) Triebel: `p_src < p_dst` on the same Sobolev line (any `q`).
pub(super) fn dyadic_scale_embedding(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let b = VerdictBuilder::new(TheoremId::AuxDyadicScaleEmbedding, query);
    let d = query.d.as_rational();
    let (p1, q1, s1, triebel) = dyadic_parts(&query.src);
    let (p0, q0, s0, _) = dyadic_parts(&query.dst);
    if p1 == p0 && s1 == s0 && q1.exp_le(q0) {
        return Ok(b.holds("(1) same p and s, q nondecreasing", Boundary::NonStrictBoundary));
    }
    if p1 == p0 && s1 > s0 {
        return Ok(b.holds("(2) strictly more smoothness at the same p", Boundary::Interior));
    }
    let same_sobolev_line = s1 - d * p1.recip() == s0 - d * p0.recip();
    if !triebel && p1.exp_le(p0) && same_sobolev_line && q1 == q0 {
        return Ok(b.holds("(4) Sobolev-line shift at fixed q", Boundary::Interior));
    }
    if triebel && p1.exp_lt(p0) && same_sobolev_line {
        return Ok(b.holds("(5) Sobolev-line shift, any summation exponents", Boundary::Interior));
    }
    Ok(b.outside("no sufficient monotonicity clause applies; sharpness not catalogued"))
}

/// Cross embedding between the Besov and Triebel scales at the same `p`,
/// through the sandwich `B_{p,min(p,q)} -> F_{p,q} -> B_{p,max(p,q)}`
/// combined with summation monotonicity. Sufficient clauses only.
pub(super) fn besov_triebel_sandwich(query: &EmbeddingQuery) -> Result<Verdict, OracleError> {
    let b = VerdictBuilder::new(TheoremId::AuxBesovTriebelSandwich, query);
    match (&query.src, &query.dst) {
        (SpaceSpec::Besov { p, q: qb, s: sb }, SpaceSpec::Triebel { p: pf, q: qf, s: sf }) => {
            if p != pf {
                return Err(unsupported(query));
            }
            if sb > sf {
                return Ok(b.holds("strictly more smoothness", Boundary::Interior));
            }
            if sb == sf && qb.exp_le(p.exp_min(*qf)) {
                return Ok(b.holds("q_src <= min(p, q_dst) at equal smoothness", Boundary::NonStrictBoundary));
            }
            Ok(b.outside("no sufficient sandwich clause applies"))
        }
        (SpaceSpec::Triebel { p, q: qf, s: sf }, SpaceSpec::Besov { p: pb, q: qb, s: sb }) => {
            if p != pb {
                return Err(unsupported(query));
            }
            if sf > sb {
                return Ok(b.holds("strictly more smoothness", Boundary::Interior));
            }
            if sf == sb && qb.exp_ge(p.exp_max(*qf)) {
                return Ok(b.holds("q_dst >= max(p, q_src) at equal smoothness", Boundary::NonStrictBoundary));
            }
            Ok(b.outside("no sufficient sandwich clause applies"))
        }
        _ => unreachable!(),
    }
}

fn uniform_parts(space: &SpaceSpec) -> (ReciprocalIndex, ReciprocalIndex, Rational) {
    match *space {
        SpaceSpec::Modulation { p, q, s } | SpaceSpec::Wiener { p, q, s } => (p, q, s),
        _ => unreachable!("dispatch guarantees a uniform-scale space"),
    }
}

fn dyadic_parts(space: &SpaceSpec) -> (ReciprocalIndex, ReciprocalIndex, Rational, bool) {
    match *space {
        SpaceSpec::Besov { p, q, s } => (p, q, s, false),
        SpaceSpec::Triebel { p, q, s } => (p, q, s, true),
        _ => unreachable!("dispatch guarantees a dyadic-scale space"),
    }
}

fn unsupported(query: &EmbeddingQuery) -> OracleError {
    OracleError::UnsupportedPair {
        src: query.src.to_string(),
        dst: query.dst.to_string(),
    }
}
