"""Configuration management for AT-Lab"""

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Application configuration"""

    # Circulation engine budgets
    ENUMERATION_ARC_LIMIT = int(os.getenv("AT_LAB_ENUM_ARC_LIMIT", "28"))
    DP_MAX_STATES = int(os.getenv("AT_LAB_DP_MAX_STATES", "2000000"))
    COEFF_MAX_STATES = int(os.getenv("AT_LAB_COEFF_MAX_STATES", "1500000"))

    # Solver size limits (vertices)
    CHOOSABLE_MAX_VERTICES_K2 = int(os.getenv("AT_LAB_CHOOSABLE_MAX_VERTICES_K2", "6"))
    CHOOSABLE_MAX_VERTICES_K3 = int(os.getenv("AT_LAB_CHOOSABLE_MAX_VERTICES_K3", "4"))
    CHOOSABLE_MAX_VERTICES_KN = int(os.getenv("AT_LAB_CHOOSABLE_MAX_VERTICES_KN", "4"))
    PAINT_MAX_VERTICES = int(os.getenv("AT_LAB_PAINT_MAX_VERTICES", "8"))

    # Parallelism
    THREADS = int(os.getenv("AT_LAB_THREADS", "1"))

    # Reports
    REPORTS_OUTPUT_DIR = Path(os.getenv("AT_LAB_REPORTS_DIR", "./reports"))
    LOG_LEVEL = os.getenv("AT_LAB_LOG_LEVEL", "INFO").upper()
    DEFAULT_SEED = int(os.getenv("AT_LAB_SEED", "0"))

    _POSITIVE_SETTINGS = (
        "ENUMERATION_ARC_LIMIT",
        "DP_MAX_STATES",
        "COEFF_MAX_STATES",
        "CHOOSABLE_MAX_VERTICES_K2",
        "CHOOSABLE_MAX_VERTICES_K3",
        "CHOOSABLE_MAX_VERTICES_KN",
        "PAINT_MAX_VERTICES",
        "THREADS",
    )

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        errors = []

        for name in cls._POSITIVE_SETTINGS:
            if getattr(cls, name) < 1:
                errors.append(f"{name} must be positive (got {getattr(cls, name)})")
        # logging.getLevelNamesMapping() is Python 3.11+; it returns a copy of _nameToLevel
        level_names = (
            logging.getLevelNamesMapping()
            if hasattr(logging, "getLevelNamesMapping")
            else dict(logging._nameToLevel)
        )
        if cls.LOG_LEVEL not in level_names:
            errors.append(f"LOG_LEVEL '{cls.LOG_LEVEL}' is not a logging level")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")

    @classmethod
    def choosable_vertex_limit(cls, k: int) -> int:
        """Vertex limit for exhaustive k-choosability checks"""
        if k <= 2:
            return cls.CHOOSABLE_MAX_VERTICES_K2
        if k == 3:
            return cls.CHOOSABLE_MAX_VERTICES_K3
        return cls.CHOOSABLE_MAX_VERTICES_KN

    @classmethod
    def ensure_reports_dir(cls) -> Path:
        """Ensure reports output directory exists"""
        cls.REPORTS_OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
        return cls.REPORTS_OUTPUT_DIR
