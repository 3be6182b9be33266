"""
Health check router
"""
import logging
from datetime import datetime
from typing import Any, Dict

from fastapi import APIRouter, HTTPException, status

from api import __version__
from config import settings

logger = logging.getLogger(__name__)

router = APIRouter(tags=["health"])


@router.get("/health")
async def health_check() -> Dict[str, Any]:
    """Simple health check endpoint for polling"""
    return {
        "status": "healthy",
        "service": "bourbakikit",
        "version": __version__,
        "timestamp": datetime.now().isoformat()
    }


@router.get("/status")
async def detailed_status() -> Dict[str, Any]:
    """Detailed status with the active settings"""
    try:
        settings.validate_config()
        return {
            "status": "healthy",
            "service": "bourbakikit",
            "version": __version__,
            "settings": settings.get_config()
        }
    except ValueError as e:
        logger.error(f"Status check failed: {e}")
        raise HTTPException(
            status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
            detail={
                "status": "error",
                "message": f"Invalid configuration: {e}"
            }
        )
