"""
Rees router: semigroup membership and canonical-module generators
"""
import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query, status
from pydantic import BaseModel

from rees import canonical_generators, cone_membership, semigroup_membership

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/rees", tags=["rees"])


class MembershipResponse(BaseModel):
    n: int
    vector: List[int]
    cone_status: str
    in_semigroup: bool
    r: Optional[List[int]] = None
    s: Optional[List[int]] = None


class CanonicalResponse(BaseModel):
    n: int
    t_max: int
    box: int
    generators: List[List[int]]
    classification: str
    interior_points: int
    reason: str


def _parse_vector(text: str, n: int) -> List[int]:
    try:
        vector = [int(part) for part in text.split(",")]
    except ValueError:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail="vector must be comma-separated integers")
    if len(vector) != n + 1:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"vector has {len(vector)} coordinates, expected {n + 1}"
        )
    return vector


@router.get("/membership", response_model=MembershipResponse)
async def get_membership(n: int = Query(..., ge=3, le=12), a: str = Query(...)) -> MembershipResponse:
    """Cone status and semigroup decomposition of a lattice vector"""
    vector = _parse_vector(a, n)
    decomposition = semigroup_membership(vector, n)
    return MembershipResponse(
        n=n,
        vector=vector,
        cone_status=cone_membership(vector, n).value,
        in_semigroup=decomposition is not None,
        r=list(decomposition.r) if decomposition else None,
        s=list(decomposition.s) if decomposition else None
    )


@router.get("/canonical", response_model=CanonicalResponse)
async def get_canonical(
    n: int = Query(..., ge=3, le=6),
    t_max: Optional[int] = Query(None, ge=1, le=4),
    box: Optional[int] = Query(None, ge=1)
) -> CanonicalResponse:
    """Minimal interior points of a bounded window"""
    logger.info(f"Canonical generators request n={n} t_max={t_max} box={box}")
    report = canonical_generators(n, t_max, box)
    return CanonicalResponse(**report.to_dict())
