"""
Configuration Reader Utility for loading YAML defaults and key=value run files
"""
import os
import logging
from pathlib import Path
from typing import Dict, Any, List, Optional, Union

import yaml

from core.constants.error_messages import ErrorMessages
from core.enums.environment import Environment

logger = logging.getLogger(__name__)


class ConfigReader:
    """Utility class to read configuration from YAML files"""

    def __init__(self, config_file: Optional[Union[str, Path]] = None, environment: Optional[str] = None):
        self.config = {}
        self.base_path = Path(__file__).parent.parent.parent

        if config_file is None:
            config_file = self.base_path / "config" / "config.yaml"

        self.config_file = Path(config_file)
        self.environment = environment
        self._load_config()
        self._load_environment_config()

    def _load_config(self):
        """Load main configuration from YAML file"""
        if self.config_file.exists():
            with open(self.config_file, 'r', encoding='utf-8') as f:
                self.config = yaml.safe_load(f) or {}
            logger.debug(f"Loaded config from: {self.config_file}")
        else:
            logger.warning(f"Configuration file not found: {self.config_file}")
            self.config = {}

    def _load_environment_config(self):
        """Load environment specific configuration and merge it over the defaults"""
        environment = (self.environment
                       or os.getenv("POSTSPEC_ENV")
                       or self.get_property("app.environment", "default"))
        if environment not in {e.value for e in Environment}:
            logger.warning(f"Unknown environment '{environment}', expected one of {[e.value for e in Environment]}")
        env_config_file = self.config_file.parent / "environments" / f"{environment}.yaml"

        if env_config_file.exists():
            with open(env_config_file, 'r', encoding='utf-8') as f:
                env_config = yaml.safe_load(f) or {}
            self._deep_merge(self.config, env_config)
            logger.debug(f"Loaded environment config from: {env_config_file}")
        elif environment != "default":
            logger.warning(f"Environment config not found for '{environment}': {env_config_file}")

    def _deep_merge(self, base_dict: dict, update_dict: dict) -> dict:
        """Deep merge update_dict into base_dict"""
        for key, value in update_dict.items():
            if key in base_dict and isinstance(base_dict[key], dict) and isinstance(value, dict):
                self._deep_merge(base_dict[key], value)
            else:
                base_dict[key] = value
        return base_dict

    def get_property(self, key: str, default_value: Any = None) -> Any:
        """
        Get property value from config using dot notation

        Args:
            key: Property key in dot notation (e.g., 'attract_repel.delta_att')
            default_value: Default value if key not found

        Returns:
            Property value or default
        """
        value = self.config
        for k in key.split('.'):
            if not isinstance(value, dict):
                return default_value
            value = value.get(k)
            if value is None:
                return default_value
        return value

    def get_int_property(self, key: str, default_value: int = 0) -> int:
        """Get integer property value"""
        value = self.get_property(key, default_value)
        try:
            return int(value) if value is not None else default_value
        except (ValueError, TypeError):
            return default_value

    def get_float_property(self, key: str, default_value: float = 0.0) -> float:
        """Get float property value"""
        value = self.get_property(key, default_value)
        try:
            return float(value) if value is not None else default_value
        except (ValueError, TypeError):
            return default_value

    def get_bool_property(self, key: str, default_value: bool = False) -> bool:
        """Get boolean property value"""
        value = self.get_property(key, default_value)
        if isinstance(value, bool):
            return value
        if isinstance(value, str):
            return value.lower() in ['true', 'yes', '1', 'on']
        return default_value

    def get_list_property(self, key: str, default_value: list = None) -> List:
        """Get list property value"""
        value = self.get_property(key, default_value or [])
        if isinstance(value, list):
            return value
        if isinstance(value, str):
            return [item.strip() for item in value.split(',') if item.strip()]
        return default_value or []

    @staticmethod
    def read_key_value_file(file_path: Union[str, Path]) -> Dict[str, str]:
        """
        Read a plain key=value run configuration file

        Blank lines and lines starting with '#' are ignored. Keys are normalised
        so that 'delta-att' and 'delta_att' name the same setting.

        Args:
            file_path: Path to the key=value file

        Returns:
            Dictionary of raw string values

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: On a line without '=' or an empty key
        """
        path = Path(file_path)
        if not path.is_file():
            raise FileNotFoundError(ErrorMessages.FILE_NOT_FOUND.format(file_path=path))

        values: Dict[str, str] = {}
        with open(path, 'r', encoding='utf-8') as f:
            for line_no, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith('#'):
                    continue
                key, sep, value = line.partition('=')
                key = key.strip().replace('-', '_')
                if not sep or not key:
                    raise ValueError(ErrorMessages.MALFORMED_CONFIG_LINE.format(
                        file_path=path, line_no=line_no, line=line))
                values[key] = value.strip()

        logger.info(f"Read {len(values)} settings from run config: {path}")
        return values
