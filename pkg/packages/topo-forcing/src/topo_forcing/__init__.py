"""
topo-forcing: topological forcing semantics at desk scale.

Two forcing interpretations over exact rational open sets:
- the standard semantics, where every truth value is the maximal open forcing a sentence
- the settling-down semantics, where terms collapse to ground sets at every real
- witness terms for the set-theoretic axioms, the generic Dedekind cut and the
  power-set-failure term
- bounded checks on fundamental sequences and left cuts
- property suites for the forcing lemmas, driven from the `topo-force` CLI
"""

__version__ = "0.1.0"
__author__ = "MichaelPrinc"
