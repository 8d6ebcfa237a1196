# Utils package
from src.utils.performance import measure_performance

__all__ = ['measure_performance']
