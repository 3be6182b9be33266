"""
Configuration settings for bourbakikit
"""
import os
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from dotenv import load_dotenv

load_dotenv()

# Base directories
BASE_DIR = Path(__file__).parent.parent

# API Configuration
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))
DEBUG = os.getenv("DEBUG", "False").lower() == "true"

# Parallelism
BOURBAKIKIT_THREADS = int(os.getenv("BOURBAKIKIT_THREADS", "1"))

# Random evaluation
EVALUATION_SEED = int(os.getenv("BOURBAKIKIT_EVALUATION_SEED", "20240611"))
RANK_EVAL_BOUND = int(os.getenv("BOURBAKIKIT_RANK_EVAL_BOUND", str(10**6)))
RANK_RETRIES = int(os.getenv("BOURBAKIKIT_RANK_RETRIES", "5"))
MODULAR_PRIME = 2147483647  # 2**31 - 1, keeps products inside int64

# Determinants
LAPLACE_DENSITY_THRESHOLD = float(os.getenv("BOURBAKIKIT_LAPLACE_DENSITY", "0.35"))

# Generic search
GENERIC_SEARCH_BOUND = int(os.getenv("BOURBAKIKIT_GENERIC_BOUND", "100"))
GENERIC_MAX_ATTEMPTS = int(os.getenv("BOURBAKIKIT_GENERIC_ATTEMPTS", "20"))
DEFAULT_SEED = int(os.getenv("BOURBAKIKIT_SEED", "0"))

# Multigraded search
MULTIGRADED_BUDGET = int(os.getenv("BOURBAKIKIT_MULTIGRADED_BUDGET", "2000000"))
MULTIGRADED_BATCH = int(os.getenv("BOURBAKIKIT_MULTIGRADED_BATCH", "4096"))
PASSING_SUBSETS_KEPT = 100

# Rees windows
REES_T_MAX = int(os.getenv("BOURBAKIKIT_REES_T_MAX", "3"))


@contextmanager
def evaluation_seed(seed: Optional[int]) -> Iterator[int]:
    """Temporarily replace EVALUATION_SEED; worker processes read it from the environment"""
    global EVALUATION_SEED
    if seed is None:
        yield EVALUATION_SEED
        return
    previous, previous_env = EVALUATION_SEED, os.environ.get("BOURBAKIKIT_EVALUATION_SEED")
    EVALUATION_SEED = seed
    os.environ["BOURBAKIKIT_EVALUATION_SEED"] = str(seed)
    try:
        yield seed
    finally:
        EVALUATION_SEED = previous
        if previous_env is None:
            os.environ.pop("BOURBAKIKIT_EVALUATION_SEED", None)
        else:
            os.environ["BOURBAKIKIT_EVALUATION_SEED"] = previous_env


# Logging Configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_config():
    """Get configuration dictionary"""
    return {
        "base_dir": str(BASE_DIR),
        "api_host": API_HOST,
        "api_port": API_PORT,
        "debug": DEBUG,
        "threads": BOURBAKIKIT_THREADS,
        "evaluation_seed": EVALUATION_SEED,
        "rank_eval_bound": RANK_EVAL_BOUND,
        "rank_retries": RANK_RETRIES,
        "laplace_density_threshold": LAPLACE_DENSITY_THRESHOLD,
        "generic_search_bound": GENERIC_SEARCH_BOUND,
        "generic_max_attempts": GENERIC_MAX_ATTEMPTS,
        "multigraded_budget": MULTIGRADED_BUDGET,
        "rees_t_max": REES_T_MAX,
        "log_level": LOG_LEVEL
    }


def validate_config() -> bool:
    """Validate numeric bounds"""
    problems = []
    if BOURBAKIKIT_THREADS < 1:
        problems.append("BOURBAKIKIT_THREADS must be at least 1")
    for name, value in (
        ("RANK_EVAL_BOUND", RANK_EVAL_BOUND),
        ("RANK_RETRIES", RANK_RETRIES),
        ("GENERIC_SEARCH_BOUND", GENERIC_SEARCH_BOUND),
        ("GENERIC_MAX_ATTEMPTS", GENERIC_MAX_ATTEMPTS),
        ("MULTIGRADED_BUDGET", MULTIGRADED_BUDGET),
        ("REES_T_MAX", REES_T_MAX),
    ):
        if value <= 0:
            problems.append(f"{name} must be positive")
    if not 0.0 <= LAPLACE_DENSITY_THRESHOLD <= 1.0:
        problems.append("LAPLACE_DENSITY_THRESHOLD must lie in [0, 1]")

    if problems:
        raise ValueError(f"Invalid configuration: {', '.join(problems)}")

    return True
