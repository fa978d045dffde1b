"""
Exact computations in the A-type Hecke algebra ``H_n(q)``.

Primitive idempotents from Jucys-Murphy elements, Ocneanu traces and
q-dimensions, and seminormal representation matrices, all over ``Q(q)``.

>>> from qhecke import generator, Q
>>> s = generator(1, 2)
>>> s * s == 1 + (Q - 1 / Q) * s
True
"""

from .scalar import Q, RatFunc, LaurentPoly, quantum_int, markov_weight
from .permutations import Permutation, from_word, length, canonical_reduced_word
from .hecke import (
    HeckeElement, basis, generator, inverse_generator, jucys_murphy, intertwiner,
)
from .tableaux import YoungDiagram, StandardTableau, content_string, enumerate_standard
from .idempotents import IdempotentRecord, resolution, extend_idempotent
from .trace import TraceContext, ocneanu_trace, conditional_expectation, qdim_closed
from .seminormal import SeminormalRep, build_rep

__version__ = "0.1.0"
