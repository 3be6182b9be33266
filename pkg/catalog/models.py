"""
Catalog result bundles
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

from algebra.polynomial import Polynomial
from bourbaki.models import BourbakiCertificate, IdealGens
from core.fingerprint import create_fingerprint
from koszul.wedge import WedgeIndex, wedge_name
from linalg.matrix import PolyMatrix


def combination_to_dict(combo: Mapping[WedgeIndex, Fraction]) -> Dict[str, str]:
    return {wedge_name(label): str(Fraction(coeff)) for label, coeff in combo.items()}


@dataclass
class CatalogBundle:
    """A Bourbaki sequence 0 -> F -> Z_i -> Z_i/d_i(F) -> 0 and its ideal"""

    name: str
    n: int
    i: int
    F_generators: List[Dict[WedgeIndex, Fraction]]
    map_matrix: PolyMatrix
    certificate: BourbakiCertificate
    ideal: IdealGens
    expected_ideal: Optional[IdealGens] = None
    presentation: Optional[PolyMatrix] = None
    divisor: Optional[Polynomial] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def matches_expected(self) -> Optional[bool]:
        if self.expected_ideal is None:
            return None
        return self.ideal.same_ideal_generators(self.expected_ideal)

    @property
    def all_checks_pass(self) -> bool:
        return self.certificate.verdict and all(self.checks.values()) and self.matches_expected is not False

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "name": self.name,
            "n": self.n,
            "i": self.i,
            "F_generators": [combination_to_dict(c) for c in self.F_generators],
            "certificate": self.certificate.to_dict(),
            "ideal": self.ideal.to_dict(),
            "expected_ideal": self.expected_ideal.to_dict() if self.expected_ideal else None,
            "matches_expected": self.matches_expected,
            "divisor": str(self.divisor) if self.divisor is not None else None,
            "presentation_shape": list(self.presentation.shape) if self.presentation is not None else None,
            "checks": dict(sorted(self.checks.items())),
            "extras": self.extras,
            "all_checks_pass": self.all_checks_pass
        }
        payload["fingerprint"] = create_fingerprint(payload)
        return payload
