"""
Run configuration for the bourbakikit command line
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, field_validator, model_validator

Command = Literal[
    "koszul-diff",
    "catalog-ztop",
    "catalog-zn2",
    "catalog-z2",
    "catalog-n6z3",
    "catalog-n6z3-bad",
    "check-map",
    "check-presentation",
    "extract-ideal",
    "bourbaki-number",
    "obstruction",
    "search-generic",
    "search-multigraded",
    "rees-normality",
    "rees-canonical",
    "rees-reduction",
]

REQUIRED = {
    "koszul-diff": ("n", "k"),
    "catalog-ztop": ("n", "i", "j"),
    "catalog-zn2": ("n",),
    "catalog-z2": ("n",),
    "check-map": ("matrix",),
    "check-presentation": ("matrix", "beta0", "r"),
    "obstruction": ("n", "i"),
    "search-generic": ("n", "i"),
    "search-multigraded": ("n", "i"),
    "rees-normality": ("n",),
    "rees-canonical": ("n",),
    "rees-reduction": ("n",),
}


class RunConfig(BaseModel):
    command: Command
    n: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    e1: Optional[int] = None
    beta0: Optional[int] = None
    size: Optional[int] = None
    seed: Optional[int] = None
    attempts: Optional[int] = None
    t_max: Optional[int] = None
    box: Optional[int] = None
    budget: Optional[int] = None
    matrix: Optional[Path] = None
    gens: Optional[Path] = None
    output_format: Literal["json", "text"] = "json"
    output_path: Optional[Path] = None

    @field_validator("t_max", "box", "budget", "attempts")
    @classmethod
    def bounds_positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value <= 0:
            raise ValueError("bounds must be positive")
        return value

    @model_validator(mode="after")
    def required_present(self) -> "RunConfig":
        missing = [name for name in REQUIRED.get(self.command, ()) if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name.replace('_', '')}" for name in missing)
            raise ValueError(f"{self.command} needs {flags}")
        if self.command == "extract-ideal" and (self.matrix is None) == (self.gens is None):
            raise ValueError("extract-ideal needs exactly one of --matrix, --gens")
        if self.command == "bourbaki-number":
            by_cycle = self.n is not None and self.i is not None
            by_data = self.k is not None and self.r is not None and self.e1 is not None
            if not (by_cycle or by_data):
                raise ValueError("bourbaki-number needs --n and --i, or --k, --r and --e1")
        return self
