"""jol: congruence orbits of Jordan nets and webs.

Library + CLI for classifying, comparing and relating congruence orbits of
Jordan subspaces (nets: dim 3, webs: dim 4) of complex symmetric matrices:
canonical orbit catalog, exact degeneration obstructions, symbolic witness
verification over Laurent polynomials, and numerical degeneration search.
"""

__version__ = "0.1.0"
