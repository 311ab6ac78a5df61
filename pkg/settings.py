# settings.py
import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()  # reads .env if present

PROJECT_ROOT = Path(__file__).parent.resolve()
DATA_DIR = Path(os.getenv("DATA_DIR", PROJECT_ROOT / "data"))
OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", DATA_DIR / "output"))
DB_PATH = Path(os.getenv("DB_PATH", DATA_DIR / "rooks.db"))

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# default bounds of the sweep command
SWEEP_MAX_CELLS = int(os.getenv("SWEEP_MAX_CELLS", "8"))
SWEEP_M_MAX = int(os.getenv("SWEEP_M_MAX", "3"))
SWEEP_N_MAX = int(os.getenv("SWEEP_N_MAX", "4"))
SWEEP_WORKERS = int(os.getenv("SWEEP_WORKERS", "1"))

DEFAULT_EXPORT_FORMAT = os.getenv("DEFAULT_EXPORT_FORMAT", "json").lower()

# ensure dirs exist
DATA_DIR.mkdir(parents=True, exist_ok=True)
OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
