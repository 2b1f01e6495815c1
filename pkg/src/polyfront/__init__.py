"""Exact computations for Delzant polytopes, partial smoothings of toric
divisors, and Weinstein handlebody front diagrams.

The package is organized as:

- ``lattice``: exact integer/rational linear algebra (Bezout, Smith normal
  form, lattice point enumeration, finitely generated abelian groups).
- ``polytope``: Delzant polytopes as half-space data, validation, SL(2,Z)
  action, translations, blow-ups.
- ``fan``: complete regular fans, fan completion, blow-up chains, and
  polytope realization of slope sets.
- ``centering``: vertex slopes and rays, the partially-centered predicate,
  monotonicity, and constructors for centered families.
- ``smoothing``: invariants of divisor complements (homology, pi_1, tb,
  SL(2,Z) equivalence of slope sets, concavity obstructions).
- ``diagram``: Legendrian front diagrams in Gompf standard form, the
  satellite construction, diagram invariants, and JSON/SVG emission.
- ``cli``: the ``polyfront`` command line tool.
"""

__version__ = "0.1.0"
