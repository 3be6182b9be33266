"""
Content fingerprints for certificates and reports
"""
import hashlib
import json
from typing import Any, Dict


def create_fingerprint(payload: Dict[str, Any]) -> str:
    """sha256 over the canonical JSON form of a payload"""
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()
