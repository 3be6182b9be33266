"""
Randomized search for Bourbaki sequences

Generic free submodules of rank r-1 give Bourbaki sequences, so random
small integer combinations of the generators almost always work. The
attempt order is fixed by the seed.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from config import settings
from core.exceptions import ShapeError
from linalg.matrix import PolyMatrix

from .criteria import check_bourbaki_map
from .models import BourbakiCertificate

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    success: bool
    lam: List[List[int]]
    certificate: Optional[BourbakiCertificate]
    attempts: int
    log: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "success": self.success,
            "lambda": self.lam,
            "attempts": self.attempts,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "log": self.log
        }


def generic_bourbaki_search(
    A: PolyMatrix,
    alpha: int,
    r: int,
    seed: Optional[int] = None,
    max_attempts: Optional[int] = None
) -> SearchResult:
    """Try random integer alpha x (r-1) matrices lam until I_{r-1}(A lam) has height >= 2"""
    if A.cols != alpha:
        raise ShapeError(f"generator matrix has {A.cols} columns, expected alpha = {alpha}")
    seed = settings.DEFAULT_SEED if seed is None else seed
    max_attempts = settings.GENERIC_MAX_ATTEMPTS if max_attempts is None else max_attempts
    bound = settings.GENERIC_SEARCH_BOUND

    if r <= 1:
        lam: List[List[int]] = [[] for _ in range(alpha)]
        certificate = check_bourbaki_map(A.times_integer_matrix(lam) if alpha else A, 0)
        return SearchResult(True, lam, certificate, 0, [])

    rng = np.random.default_rng(seed)
    log: List[Dict[str, Any]] = []
    logger.info(f"Searching {alpha}x{r - 1} integer combinations, seed {seed}, up to {max_attempts} attempts")
    for attempt in range(1, max_attempts + 1):
        lam = rng.integers(-bound, bound + 1, size=(alpha, r - 1)).tolist()
        certificate = check_bourbaki_map(A.times_integer_matrix(lam), r - 1)
        log.append({"attempt": attempt, "verdict": certificate.verdict, "witness": str(certificate.gcd_witness)})
        if certificate.verdict:
            logger.info(f"✅ Bourbaki sequence found on attempt {attempt}")
            return SearchResult(True, lam, certificate, attempt, log)

    logger.info(f"❌ No Bourbaki sequence in {max_attempts} attempts")
    return SearchResult(False, [], None, max_attempts, log)
