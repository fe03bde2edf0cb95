"""Edge-isoperimetric optimum, proofs checks and nested ordering for the 12-neighbour triangular lattice."""

from .lattice import CayleyGraphSpec, edge_boundary, induced_edge_count, neighbors
from .trilattice import TRI_SPEC, e_of_n, max_edges, special_k_of_n

__version__ = "0.1.0"
