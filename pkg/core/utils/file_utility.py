"""
File Utility Module
Atomic writes and small path helpers used by every artifact writer
"""

import os
import tempfile
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, IO, Union

from core.constants.error_messages import ErrorMessages

logger = logging.getLogger(__name__)


class FileUtility:
    """
    Utility class for file operations
    Every write goes to a temporary file in the target directory and is renamed into
    place, so an interrupted run never leaves a partial output behind.
    """

    @staticmethod
    def require_file(file_path: Union[str, Path]) -> Path:
        """
        Check that a file exists and is readable

        Args:
            file_path: Path to the file

        Returns:
            The path as a Path object

        Raises:
            FileNotFoundError: If the file doesn't exist
        """
        path = Path(file_path)
        if not path.is_file():
            raise FileNotFoundError(ErrorMessages.FILE_NOT_FOUND.format(file_path=path))
        return path

    @staticmethod
    @contextmanager
    def atomic_open(file_path: Union[str, Path], mode: str = 'w',
                    encoding: str = 'utf-8') -> Iterator[IO]:
        """
        Open a temporary sibling of file_path; rename it over file_path on success

        Args:
            file_path: Final destination
            mode: 'w' for text or 'wb' for binary
            encoding: Text encoding (ignored for binary mode)

        Yields:
            Writable file object
        """
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=str(path.parent))
        try:
            if 'b' in mode:
                handle = os.fdopen(fd, mode)
            else:
                handle = os.fdopen(fd, mode, encoding=encoding, newline='\n')
            with handle:
                yield handle
            os.replace(tmp_name, path)
            logger.debug(f"Atomically wrote: {path}")
        except BaseException:
            logger.error(ErrorMessages.FILE_WRITE_ERROR.format(file_path=path))
            if os.path.exists(tmp_name):
                os.remove(tmp_name)
            raise

    def write_file(self, file_path: Union[str, Path], content: str, encoding: str = 'utf-8') -> Path:
        """
        Write text content atomically

        Args:
            file_path: Path to the file
            content: Content to write
            encoding: File encoding

        Returns:
            Path written
        """
        with self.atomic_open(file_path, 'w', encoding=encoding) as handle:
            handle.write(content)
        logger.info(f"Successfully wrote file: {file_path}")
        return Path(file_path)
