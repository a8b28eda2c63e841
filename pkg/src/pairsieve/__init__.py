"""Prime-pair sieve over the 6x+c candidate sequence.

Pairs (p, p + 2k) are read off the complement of a union of closed-form
arithmetic progressions ("exclusion families") over candidate indices x.
"""

from pairsieve.core import (
    Branch,
    Case,
    InvalidPairClass,
    PairClass,
    PairRecord,
    index_to_pair,
    index_to_sequence,
    sequence_to_odd,
)
from pairsieve.families import FamilySpec, derive_families, derive_offset
from pairsieve.sieve import (
    ExclusionSet,
    build_exclusions,
    complement,
    enumerate_pairs,
    eratosthenes_pairs,
)

__all__ = [
    "Branch",
    "Case",
    "ExclusionSet",
    "FamilySpec",
    "InvalidPairClass",
    "PairClass",
    "PairRecord",
    "build_exclusions",
    "complement",
    "derive_families",
    "derive_offset",
    "enumerate_pairs",
    "eratosthenes_pairs",
    "index_to_pair",
    "index_to_sequence",
    "sequence_to_odd",
]
__version__ = "0.1.0"
