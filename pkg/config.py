"""
Central configuration module for workbench limits and defaults
Loads configuration from environment variables with safe fallback handling
"""

import os
import sys
from pathlib import Path

from dotenv import load_dotenv

# Get the directory of this config file
config_dir = Path(__file__).parent
env_file = config_dir / '.env'

# Load environment variables from .env file with explicit path
if env_file.exists():
    load_dotenv(env_file)
    print(f"✅ Loaded environment variables from {env_file}", file=sys.stderr)
else:
    load_dotenv()  # Try to load from current directory anyway


# name -> (environment variable, default)
SETTINGS = {
    'ORACLE_MAX_N': ('RAINBOW_ORACLE_MAX_N', 2 ** 20),
    'EXHAUSTIVE_MAX_N': ('RAINBOW_EXHAUSTIVE_MAX_N', 16),
    'ERROR_BUDGET_K': ('RAINBOW_ERROR_BUDGET_K', 10),
    'THREADS': ('RAINBOW_THREADS', 1),
    'DEFAULT_SEED': ('RAINBOW_SEED', 0),
    'DEFAULT_BUDGET': ('RAINBOW_BUDGET', 10000),
    'DEFAULT_RESTARTS': ('RAINBOW_RESTARTS', 8),
    'FFT_MIN_N': ('RAINBOW_FFT_MIN_N', 256),
}

# Settings allowed to be zero
NON_NEGATIVE = {'DEFAULT_SEED', 'DEFAULT_BUDGET', 'DEFAULT_RESTARTS'}


class Config:
    """Configuration class for search guards, error budgets and run defaults"""

    def __init__(self):
        """Initialize configuration from environment variables"""
        self.load_from_env()

    def load_from_env(self):
        """Load configuration from environment variables"""
        self.problems = []
        for name, (env_name, default) in SETTINGS.items():
            setattr(self, name, self._read_int(name, env_name, default))

        # Validate ranges
        self._validate_config()

    def _read_int(self, name: str, env_name: str, default: int) -> int:
        raw = os.getenv(env_name)
        if raw is None or raw.strip() == '':
            return default
        try:
            return int(raw)
        except ValueError:
            self.problems.append(f"{env_name}={raw!r} is not an integer, using {default}")
            return default

    def _validate_config(self):
        """Reset out-of-range settings to their defaults and report them"""
        for name, (env_name, default) in SETTINGS.items():
            value = getattr(self, name)
            floor = 0 if name in NON_NEGATIVE else 1
            if value < floor:
                self.problems.append(f"{env_name}={value} must be >= {floor}, using {default}")
                setattr(self, name, default)

        if self.problems:
            print("⚠️  Invalid workbench settings in environment:", file=sys.stderr)
            for problem in self.problems:
                print(f"   - {problem}", file=sys.stderr)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in SETTINGS}

    def display_config_status(self):
        """Display current configuration status"""
        print("📊 Current Configuration Status:", file=sys.stderr)
        for name, (env_name, default) in SETTINGS.items():
            value = getattr(self, name)
            source = 'default' if value == default else 'environment'
            print(f"   {env_name}: {value} ({source})", file=sys.stderr)

        if self.problems:
            print("\n🔧 Some settings were rejected, see warnings above", file=sys.stderr)


# Global configuration instance
config = Config()
