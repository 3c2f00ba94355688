import os

from src.utils.errors import InputError

# --- Configuration ---
DEFAULT_SIZE_CAP = 10**6        # safety cap on mutation-class members for the cli
EQUIVALENCE_SIZE_CAP = 10**5    # per-side cap of the bidirectional equivalence search
DEFAULT_SEED_CAP = 10**5        # seeds explored by the engine before giving up
MAX_CANONICAL_RANK = 10         # ranks the canonical form is tuned for
GEOMETRIC_MAX_POLYGON = 8       # largest polygon in the Plücker identity suite
PROGRESS_EVERY = 1000           # verbose progress interval for long searches
CLASS_CACHE_LIMIT = 10**5       # remembered diagram forms before the recognition cache is reset

THREADS_ENV = "MUTANT_THREADS"


def threads_from_env() -> int:
    """Number of joblib workers, read from MUTANT_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got '{raw}'")
    if value < 1:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got '{raw}'")
    return value
