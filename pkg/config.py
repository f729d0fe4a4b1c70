"""Configuration settings for the Lefschetz engine."""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent / '.env'
load_dotenv(dotenv_path=env_path)

# Logging Configuration
# Reports go to stdout, logs to stderr; keep logs quiet unless asked
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

# Relations data file (the eight solved relations for order 60)
DEFAULT_RELATIONS_PATH = Path(__file__).parent / 'data' / 'relations_60_1.txt'
RELATIONS_PATH = Path(os.getenv('LEFSCHETZ_RELATIONS_PATH', str(DEFAULT_RELATIONS_PATH)))

# Sweep Configuration
# Maximum number of orders analysed at the same time by `orders --analyze-all`
SWEEP_CONCURRENCY = int(os.getenv('SWEEP_CONCURRENCY', '4'))
if SWEEP_CONCURRENCY < 1:
    raise ValueError(f"SWEEP_CONCURRENCY must be at least 1, got: {SWEEP_CONCURRENCY}")

# Order table Configuration
# rk(T_X) <= 21 bounds the totient of an admissible order
DEFAULT_MAX_PHI = int(os.getenv('DEFAULT_MAX_PHI', '21'))
