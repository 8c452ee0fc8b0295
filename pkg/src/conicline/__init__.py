"""conicline: exact analyzer for conic-line arrangements in the complex
projective plane.

The package computes incidence data of arrangements of lines and smooth
conics with ordinary singularities, the logarithmic Chern numbers and the
characteristic number gamma of the associated log surface, the abelian-cover
invariants behind the Hirzebruch-type inequalities, and runs searches over
both geometric arrangements and bare combinatorial profiles.
"""

__version__ = "0.1.0"
