import os
from pathlib import Path

from dotenv import load_dotenv

# Project Root
ROOT_DIR = Path(__file__).parent.parent

# Optional overrides live in a .env file next to requirements.txt
load_dotenv(ROOT_DIR / ".env")

# Enumeration limits
MAX_EDGES = int(os.environ.get("CARTOMAT_MAX_EDGES", 20))  # 2^n partial duals per map
MAX_ISO_EDGES = int(os.environ.get("CARTOMAT_MAX_ISO_EDGES", 8))  # n! bijections per matroid pair
EXCHANGE_ASSERT_LIMIT = int(os.environ.get("CARTOMAT_EXCHANGE_ASSERT_LIMIT", 256))

# Polytope limits
MAX_HULL_POINTS = int(os.environ.get("CARTOMAT_MAX_HULL_POINTS", 256))
MAX_HULL_DIM = int(os.environ.get("CARTOMAT_MAX_HULL_DIM", 10))

# Logging
LOG_LEVEL = os.environ.get("CARTOMAT_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s [%(name)s] %(levelname)s: %(message)s"
