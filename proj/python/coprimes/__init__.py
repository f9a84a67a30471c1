"""Coprime pairs of binary polynomials with nonzero constant term.

Thin wrapper over the compiled extension: GF(2) polynomial arithmetic,
Euclid traces and the reversed-replay (dilcuE) reconstruction, the
constant-term word language, compositions, the streaming pair enumerator,
and the brute-force verifier.
"""

from coprimes._core import (
    Composition,
    EuclidTrace,
    Gf2Poly,
    PairCursor,
    PolyFormat,
    VerifyReport,
    __version__,
    accepts,
    assemble,
    bijection_flip,
    brute_force_an,
    build_pair,
    compositions,
    count_compositions,
    count_pairs,
    count_pairs_by_k,
    count_words,
    count_words_dfa,
    dilcue_apply,
    divmod,
    enumerate_pairs,
    enumerate_sn,
    euclid_trace,
    first_word,
    from_boxes,
    gcd,
    in_sn,
    next_word,
    parse,
    render_trace,
    to_boxes,
    to_text,
    unrank_word,
    verify,
    words,
)

__all__ = [
    "Composition",
    "EuclidTrace",
    "Gf2Poly",
    "PairCursor",
    "PolyFormat",
    "VerifyReport",
    "__version__",
    "accepts",
    "assemble",
    "bijection_flip",
    "brute_force_an",
    "build_pair",
    "compositions",
    "count_compositions",
    "count_pairs",
    "count_pairs_by_k",
    "count_words",
    "count_words_dfa",
    "dilcue_apply",
    "divmod",
    "enumerate_pairs",
    "enumerate_sn",
    "euclid_trace",
    "first_word",
    "from_boxes",
    "gcd",
    "in_sn",
    "next_word",
    "parse",
    "render_trace",
    "to_boxes",
    "to_text",
    "unrank_word",
    "verify",
    "words",
]
