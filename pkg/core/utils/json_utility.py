"""
JSON Utility Module
Reading, writing and schema validation of the JSON reports emitted by the toolkit
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union, Tuple

from jsonschema import validate, ValidationError

from core.constants.application_constants import ApplicationConstants
from core.utils.file_utility import FileUtility

logger = logging.getLogger(__name__)


class JSONUtility:
    """
    Utility class for JSON operations
    Schemas are looked up under core/models/schemas/ unless an explicit path is given
    """

    def __init__(self, schema_path: Optional[Union[str, Path]] = None):
        self.schema_path = Path(schema_path) if schema_path else ApplicationConstants.SCHEMAS_PATH
        self.file_utility = FileUtility()

    # ==================== File Operations ====================

    def read_json(self, file_path: Union[str, Path], encoding: str = 'utf-8') -> Union[Dict, List]:
        """
        Read JSON file

        Args:
            file_path: Path to the JSON file
            encoding: File encoding (default: utf-8)

        Returns:
            Parsed JSON data (dict or list)
        """
        path = self.file_utility.require_file(file_path)
        try:
            with open(path, 'r', encoding=encoding) as f:
                data = json.load(f)
            logger.debug(f"Successfully read JSON file: {path}")
            return data
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in file {path}: {str(e)}")
            raise

    def to_json_string(self, data: Union[Dict, List], indent: int = 2) -> str:
        """Convert data to a JSON string (non-finite floats are rejected)"""
        return json.dumps(data, indent=indent, allow_nan=False, sort_keys=False)

    # ==================== Schema Validation ====================

    def load_schema(self, schema_name: str) -> Dict:
        """Load a schema file by name from the schema directory"""
        return self.read_json(self.schema_path / schema_name)

    def validate_schema(self, data: Union[Dict, List], schema: Dict) -> Tuple[bool, Optional[str]]:
        """
        Validate JSON data against schema

        Args:
            data: JSON data to validate
            schema: JSON schema

        Returns:
            Tuple of (is_valid, error_message)
        """
        try:
            validate(instance=data, schema=schema)
            logger.debug("JSON schema validation passed")
            return True, None
        except ValidationError as e:
            error_msg = f"Validation error: {e.message}"
            logger.error(error_msg)
            return False, error_msg

    def validate_schema_file(self, data: Union[Dict, List], schema_name: str) -> Tuple[bool, Optional[str]]:
        """Validate JSON data against a named schema file"""
        return self.validate_schema(data, self.load_schema(schema_name))
