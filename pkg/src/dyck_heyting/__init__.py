"""Heyting algebras of Dyck paths (types A and B) and monotone lattice paths."""

from .birkhoff import (
    OrderIdeal,
    TrianglePoset,
    order_ideals,
    path_for_prime,
    prime_index,
    triangle_poset,
    verify_birkhoff,
)
from .export import ExportDocument, export_document, to_dot
from .heyting import (
    impl,
    impl_a,
    impl_b,
    impl_mono,
    is_join_irreducible,
    is_regular,
    pseudo,
    pseudo_a,
    pseudo_b,
    pseudo_mono,
    regulars,
)
from .lattice import (
    GuardError,
    LatticeSnapshot,
    bottom,
    covers,
    enumerate_family,
    join,
    leq,
    meet,
    top,
)
from .oracle import Report, oracle_impl, oracle_join_irreducible, verify_family
from .paths import (
    DomainError,
    DyckWord,
    HeightSeqA,
    HeightSeqB,
    MonotonePath,
    ValidationError,
    embed_b_to_a,
    heights_to_word_a,
    heights_to_word_b,
    psi,
    restrict_a_to_b,
    word_to_heights_a,
    word_to_heights_b,
)

__version__ = "0.1.0"
