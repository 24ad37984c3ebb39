"""Surgery calculus on mixed framed-link diagrams.

Subpackages cover: planar diagram encoding and validation (`diagram`), the
four moves as deterministic rewrites (`moves`), free-group/Magnus arithmetic
(`freegroup`), Milnor triple invariants and the obstruction subgroup
(`milnor`), the integer matrix group preserved by move sequences (`matgroup`),
and a bounded equivalence search (`search`).
"""

from .errors import CalcError, ParseError

__all__ = ["CalcError", "ParseError"]
__version__ = "0.1.0"
