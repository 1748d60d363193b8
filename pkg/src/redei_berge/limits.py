"""Size caps for the exhaustive routines.

Everything in this package is exact and enumerative, so every entry point
that scales like n!, 2^|A| or 2^(n^2) refuses inputs beyond a cap instead
of silently running forever.  The caps are generous for desk-scale work.
"""

from __future__ import annotations

# Listing / permutation sweeps (n! instances).
FACTORIAL_CAP = 9

# Bitmask DP over (subset, last vertex) states.  Above ~18 vertices the
# flat DP table dominates memory; 22 is the hard refusal point.
DP_VERTEX_CAP = 22

# Simple-cycle enumeration by DFS from each minimal vertex.
CYCLE_ENUM_CAP = 12

# Signed sums over subsets of a finite set.
SUBSET_CAP = 24

# Digraph / tournament enumeration streams.
ENUMERATION_CAP = 2**24

# Dense exponent vectors in monomial expansions.
MAX_VARIABLES = 16


class CapExceededError(ValueError):
    """Raised when an exhaustive routine is asked for an instance above its cap."""
