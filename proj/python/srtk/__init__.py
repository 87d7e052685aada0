"""Segment representation toolkit: span<->tag codecs for IO/IOB/IOE/IOBE/
IOBES/FROBES schemes, conversion, validation, a perceptron tagger, entity
evaluation and majority-vote ensembling."""

from ._core import (
    Error,
    InvalidSequence,
    Tagger,
    convert,
    corpus_stats,
    decode,
    encode,
    evaluate,
    frobes_counts,
    generate_conll,
    majority_vote,
    schemes,
    validate,
)

__all__ = [
    "Error",
    "InvalidSequence",
    "Tagger",
    "convert",
    "corpus_stats",
    "decode",
    "encode",
    "evaluate",
    "frobes_counts",
    "generate_conll",
    "majority_vote",
    "schemes",
    "validate",
]
