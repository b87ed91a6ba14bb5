import os
from pathlib import Path
from dotenv import load_dotenv

# Load .env variables
load_dotenv()

# Base Directory
BASE_DIR = Path(__file__).resolve().parent.parent

# Enumeration
# Full face enumeration (census, homology, Morse posets) is refused above this universe size.
MAX_UNIVERSE = int(os.getenv("GRIDTOP_MAX_UNIVERSE", "22"))
# Hard limit: one face is one machine word.
WORD_BITS = 64

# Coefficients
DEFAULT_PRIME = int(os.getenv("GRIDTOP_DEFAULT_PRIME", "2"))
CHECK_PRIMES = tuple(
    int(p) for p in os.getenv("GRIDTOP_CHECK_PRIMES", "2,3").split(",") if p.strip()
)

# Shelling search
SEARCH_BUDGET = int(os.getenv("GRIDTOP_SEARCH_BUDGET", "14"))

# Verification sweeps
N_MAX_2XN = int(os.getenv("GRIDTOP_N_MAX_2XN", "6"))
N_MAX_3XN = int(os.getenv("GRIDTOP_N_MAX_3XN", "5"))
M_MAX_3XN_PRIME = int(os.getenv("GRIDTOP_M_MAX_3XN_PRIME", "4"))
M_MAX_APPENDIX = int(os.getenv("GRIDTOP_M_MAX_APPENDIX", "5"))
N_MAX_SHELLING = int(os.getenv("GRIDTOP_N_MAX_SHELLING", "5"))
WORKERS = int(os.getenv("GRIDTOP_WORKERS", "1"))

# Logging
LOG_LEVEL = os.getenv("GRIDTOP_LOG_LEVEL", "WARNING").upper()
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "core": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
        "gridtop": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
    },
}
