"""
Catalog router: explicit Bourbaki sequences and the multigraded obstruction
"""
import logging
from typing import Any, Dict, Optional

from fastapi import APIRouter, HTTPException, Query, status

from api.utils import report_response
from catalog import (
    multigraded_obstruction,
    n6_z3_bad_configuration,
    n6_z3_explicit,
    z2,
    z_nminus2,
    z_top
)

logger = logging.getLogger(__name__)

router = APIRouter(tags=["catalog"])

CATALOG_NAMES = ("ztop", "zn2", "z2", "n6z3", "n6z3-bad")


@router.get("/catalog/{name}")
async def get_catalog_item(
    name: str,
    n: Optional[int] = Query(None, ge=3, le=7),
    i: Optional[int] = Query(None, ge=1),
    j: Optional[int] = Query(None, ge=1)
) -> Dict[str, Any]:
    """Build and certify one catalog sequence"""
    if name not in CATALOG_NAMES:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=f"unknown catalog item {name}")
    if name in ("ztop", "zn2", "z2") and n is None:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=f"{name} needs the query parameter n")

    logger.info(f"Catalog request {name} n={n} i={i} j={j}")
    if name == "n6z3-bad":
        certificate = n6_z3_bad_configuration()
        return report_response(name, certificate.to_dict(), verdict=not certificate.verdict)
    if name == "ztop":
        if i is None or j is None:
            raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail="ztop needs i and j")
        bundle = z_top(n, i, j)
    elif name == "zn2":
        bundle = z_nminus2(n)
    elif name == "z2":
        bundle = z2(n)
    else:
        bundle = n6_z3_explicit()
    return report_response(name, bundle.to_dict(), verdict=bundle.all_checks_pass)


@router.get("/obstruction")
async def get_obstruction(n: int = Query(..., ge=3), i: int = Query(..., ge=2)) -> Dict[str, Any]:
    """Numerical condition for a multigraded sequence of Z_i"""
    holds = multigraded_obstruction(n, i)
    return report_response("obstruction", {
        "n": n,
        "i": i,
        "holds": holds,
        "verdict": "allowed" if holds else "excluded"
    })
