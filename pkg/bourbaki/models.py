"""
Result types for Bourbaki computations
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from algebra.polynomial import Polynomial
from core.exceptions import RangeError
from core.fingerprint import create_fingerprint
from koszul.complex import GradedTwists
from linalg.matrix import PolyMatrix


def _canonical_order(polys: Iterable[Polynomial]) -> List[Polynomial]:
    return sorted(polys, key=lambda p: p.canonical_key(), reverse=True)


@dataclass
class IdealGens:
    """Generators of a graded ideal; canonical, nonzero and duplicate-free"""

    gens: List[Polynomial]
    twist: Optional[int] = None
    generated_degree: Optional[int] = None

    def __post_init__(self):
        unique = {p.normalized() for p in self.gens if not p.is_zero}
        self.gens = _canonical_order(unique)

    @property
    def n(self) -> Optional[int]:
        return self.gens[0].n if self.gens else None

    def __len__(self) -> int:
        return len(self.gens)

    def same_ideal_generators(self, other: "IdealGens") -> bool:
        """Equal generator sets after normalization; twists are not compared"""
        return self.gens == other.gens

    def degrees(self) -> List[int]:
        return [p.total_degree() for p in self.gens]

    def is_monomial(self) -> bool:
        return all(p.is_monomial() for p in self.gens)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gens": [p.to_dict() for p in self.gens],
            "text": [str(p) for p in self.gens],
            "twist": self.twist,
            "generated_degree": self.generated_degree
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IdealGens":
        return cls(
            gens=[Polynomial.from_dict(p, f"$.gens[{k}]") for k, p in enumerate(data.get("gens", []))],
            twist=data.get("twist"),
            generated_degree=data.get("generated_degree")
        )

    @classmethod
    def parse(cls, texts: Iterable[str], n: int, **kwargs) -> "IdealGens":
        return cls([Polynomial.parse(t, n) for t in texts], **kwargs)


@dataclass
class BourbakiCertificate:
    """Outcome of a height-two test on the ideal of s x s minors"""

    matrix_used: PolyMatrix
    minor_size: int
    gcd_witness: Polynomial
    verdict: bool
    reason: Optional[str] = None

    @property
    def has_nonzero_minor(self) -> bool:
        return not self.gcd_witness.is_zero

    def fingerprint(self) -> str:
        return self.matrix_used.fingerprint()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "minor_size": self.minor_size,
            "gcd_witness": self.gcd_witness.to_dict(),
            "gcd_witness_text": str(self.gcd_witness),
            "reason": self.reason,
            "matrix_shape": [self.matrix_used.rows, self.matrix_used.cols],
            "matrix_fingerprint": self.fingerprint()
        }


@dataclass
class GradedModuleData:
    """A graded module M by its numerical data"""

    n: int
    k: int
    r: int
    e1: int
    resolution: GradedTwists = field(default_factory=GradedTwists)

    def __post_init__(self):
        if self.r < 1:
            raise RangeError(f"rank must be at least 1, got {self.r}")

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "r": self.r, "e1": self.e1, "resolution": self.resolution.to_dict()}


@dataclass
class Extraction:
    ideal: IdealGens
    divisor: Polynomial
    submatrix: PolyMatrix
    minors: List[Polynomial]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ideal": self.ideal.to_dict(),
            "divisor": self.divisor.to_dict(),
            "divisor_text": str(self.divisor),
            "submatrix_fingerprint": self.submatrix.fingerprint(),
            "fingerprint": create_fingerprint(self.ideal.to_dict())
        }
