"""
Configuration settings for the dualcheeger library.
"""
import logging
from fractions import Fraction
from typing import Dict, Any

from dualcheeger.exceptions import ConfigError

# Float backend
FLOAT_TOLERANCE = 1e-9

# Symmetric eigensolver
JACOBI_THRESHOLD = 1e-12
JACOBI_MAX_SWEEPS = 100

# Standard-part roots closer than this are treated as one cluster
ROOT_CLUSTER_TOLERANCE = 1e-6

# Float Levi-Civita coefficients at or below this magnitude are dropped
FLOAT_COEFFICIENT_EPSILON = 1e-12

# Levi-Civita truncation: budget = multiplier * smallest positive exponent
TRUNCATION_MULTIPLIER = 8
DEFAULT_TRUNCATION_ORDER = Fraction(TRUNCATION_MULTIPLIER)

# Newton lifting
NEWTON_EXTRA_ITERATIONS = 8

# Graph limits
MAX_VERTICES = 64
MAX_BRUTEFORCE_VERTICES = 14

# Largest denominator tried when recognising a rational standard-part root
RATIONALIZE_MAX_DENOMINATOR = 10 ** 6

# Deepest parenthesised exponent accepted in a weight expression
MAX_EXPONENT_NESTING = 32

DEFAULT_REPORT_FORMAT = 'json'
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = logging.WARNING

_POSITIVE_COUNTS = ('max_bruteforce', 'workers')

class ConfigManager:
    """Manages configuration settings for an analysis run."""
    
    def __init__(self, overrides: Dict[str, Any] = None, log_level: int = None):
        """
        Initialize the configuration manager.
        
        Args:
            overrides: Values replacing the defaults
            log_level: Logging level to use
        """
        self.log_level = log_level or DEFAULT_LOG_LEVEL
        
        self._config = {
            'truncation_order': None,
            'max_bruteforce': MAX_BRUTEFORCE_VERTICES,
            'workers': DEFAULT_WORKERS,
            'backend': None,
            'format': DEFAULT_REPORT_FORMAT,
        }
        if overrides:
            self.update(overrides)
        
    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value."""
        return self._config.get(key, default)
    
    def set(self, key: str, value: Any) -> None:
        """Set a configuration value."""
        self._config[key] = value
        
    def update(self, config_dict: Dict[str, Any]) -> None:
        """
        Update multiple configuration values at once, ignoring None values.

        Raises:
            ConfigError: If a count setting is not a positive integer
        """
        values = {k: v for k, v in config_dict.items() if v is not None}
        for key in _POSITIVE_COUNTS:
            value = values.get(key)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int) or value < 1):
                raise ConfigError(f"{key} must be a positive integer, got {value!r}")
        self._config.update(values)
        
    @property
    def config_dict(self) -> Dict[str, Any]:
        """Get the entire configuration dictionary."""
        return self._config.copy()
