"""
API Utilities for bourbakikit

Every computed result goes out as a report: the payload under "data", and
under "metadata" the kind of computation, its verdict and a fingerprint
of the payload so that a CLI run and an API call can be compared.
"""

import logging
from datetime import datetime
from typing import Any, Dict, Optional

from fastapi import Request

from api import __version__
from core.exceptions import BourbakiKitError
from core.fingerprint import create_fingerprint

logger = logging.getLogger(__name__)


def report_response(kind: str, data: Dict[str, Any], verdict: Optional[bool] = None) -> Dict[str, Any]:
    """Wrap a computed payload with its verdict and fingerprint"""
    metadata: Dict[str, Any] = {
        "kind": kind,
        "fingerprint": data.get("fingerprint") or create_fingerprint(data),
        "version": __version__,
        "computed_at": datetime.now().isoformat()
    }
    if verdict is not None:
        metadata["all_checks_pass"] = verdict
    return {"data": data, "metadata": metadata}


def error_response(exc: BourbakiKitError) -> Dict[str, Any]:
    """Body for a rejected computation; code and details come from the exception"""
    body: Dict[str, Any] = {
        "error_code": exc.code,
        "message": exc.message,
        "version": __version__
    }
    if exc.details:
        body["details"] = exc.details
    return body


async def log_request(request: Request):
    """Log incoming API requests"""
    client = request.client.host if request.client else "unknown"
    logger.info(f"{request.method} {request.url} from {client}")
