"""
Data Provider base class
"""
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Iterator, Tuple, Union

from core.utils.file_utility import FileUtility


class DataProvider(ABC):
    """Abstract base class for the text-format loaders (vectors, constraints, eval sets)"""

    def __init__(self, encoding: str = 'utf-8'):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.encoding = encoding
        self.file_utility = FileUtility()

    @abstractmethod
    def load_data(self, source: Union[str, Path], **kwargs) -> Any:
        """Load data from source"""

    def iter_lines(self, file_path: Union[str, Path]) -> Iterator[Tuple[int, str]]:
        """Yield (1-based line number, stripped line) for every non-blank line"""
        path = self.file_utility.require_file(file_path)
        with open(path, 'r', encoding=self.encoding) as f:
            for line_no, raw in enumerate(f, start=1):
                line = raw.strip()
                if line:
                    yield line_no, line
