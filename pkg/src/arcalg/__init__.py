"""Exact-arithmetic arc algebras and the characteristic-2 splitting map."""

__version__ = "0.1.0"

from .diagrams import (CircleDiagram, CobordismComponentStats, Matching,
                       SurgerySite, cobordism_components, enumerate_matchings,
                       glue, surgery_sequence)
from .rings import (FrobeniusConfig, LABEL_ONE, LABEL_X, frob_comultiply,
                    frob_multiply, ring_ops)
from .algebra import (AlgebraElement, Generator, basis, center,
                      center_in_degree, commutator, multiply, multiply_oracle,
                      q_degree, reduce_element, stack_embed, unit)

__all__ = [name for name in dir() if not name.startswith("_")]
