import os
from dotenv import load_dotenv

load_dotenv()

class Settings:
    OUTPUT_DIR_OVERRIDE: str = os.getenv("ADDICTION_OUTPUT_DIR", "")
    DEFAULT_OUTPUT_DIR: str = os.getenv("ADDICTION_DEFAULT_OUTPUT_DIR", "output")
    LOG_LEVEL: str = os.getenv("ADDICTION_LOG_LEVEL", "INFO")
    SWEEP_WORKERS: int = int(os.getenv("ADDICTION_SWEEP_WORKERS", "1"))

    # float comparison defaults
    ABS_TOL: float = float(os.getenv("ADDICTION_ABS_TOL", "1e-9"))
    REL_TOL: float = float(os.getenv("ADDICTION_REL_TOL", "1e-9"))
    HYPERBOLIC_TOL: float = float(os.getenv("ADDICTION_HYPERBOLIC_TOL", "1e-9"))

settings = Settings()
