"""
Vector Data Provider
Reads and writes word-vector spaces in the word2vec/GloVe text format
"""
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from core.constants.error_messages import ErrorMessages
from core.dataproviders.data_provider import DataProvider
from core.models.pojo.embedding_space_pojo import EmbeddingSpace


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


class VectorDataProvider(DataProvider):
    """
    Text vector files: one word per line followed by dim floats, with an optional
    "count dim" header line that is detected automatically.
    """

    def load_data(self, source: Union[str, Path], limit: Optional[int] = None) -> EmbeddingSpace:
        """
        Load a vector space

        Args:
            source: Path to the vector file
            limit: Maximum number of data rows to read (None reads all)

        Returns:
            EmbeddingSpace with tokens in file order; duplicates keep their first row

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: On a column-count mismatch, a non-numeric value or dim < 1
        """
        path = Path(source)
        words: List[str] = []
        rows: List[np.ndarray] = []
        seen = set()
        dim: Optional[int] = None
        data_rows = 0
        duplicates = 0
        first = True

        try:
            for line_no, line in self.iter_lines(path):
                parts = line.split()
                if first:
                    first = False
                    if len(parts) == 2 and _is_int(parts[0]) and _is_int(parts[1]):
                        dim = int(parts[1])
                        if dim < 1:
                            raise ValueError(ErrorMessages.INVALID_DIMENSION.format(file_path=path, dim=dim))
                        self.logger.debug(f"Header in {path}: {parts[0]} words, dim {dim}")
                        continue

                if limit is not None and data_rows >= limit:
                    break
                data_rows += 1

                word = parts[0]
                if word in seen:
                    duplicates += 1
                    continue

                if dim is None:
                    dim = len(parts) - 1
                    if dim < 1:
                        raise ValueError(ErrorMessages.INVALID_DIMENSION.format(file_path=path, dim=dim))
                if len(parts) - 1 != dim:
                    raise ValueError(ErrorMessages.INCONSISTENT_COLUMNS.format(
                        file_path=path, line_no=line_no, expected=dim, actual=len(parts) - 1))
                try:
                    rows.append(np.array(parts[1:], dtype=np.float64))
                except ValueError:
                    raise ValueError(ErrorMessages.INVALID_FLOAT.format(file_path=path, line_no=line_no))
                seen.add(word)
                words.append(word)
        except (OSError, ValueError) as e:
            self.logger.error(f"Error loading vectors from {path}: {e}")
            raise

        if dim is None:
            raise ValueError(ErrorMessages.INVALID_DIMENSION.format(file_path=path, dim=0))
        if duplicates:
            self.logger.warning(f"{path}: {duplicates} duplicate tokens ignored (first occurrence kept)")

        matrix = np.vstack(rows) if rows else np.zeros((0, dim))
        space = EmbeddingSpace(words=tuple(words), vectors=matrix)
        self.logger.info(f"Loaded {len(space)} vectors of dim {space.dim} from {path}")
        return space

    def save_data(self, space: EmbeddingSpace, destination: Union[str, Path]) -> Path:
        """
        Save a vector space with a "count dim" header, atomically

        Args:
            space: Space to write
            destination: Output path

        Returns:
            Path written
        """
        path = Path(destination)
        with self.file_utility.atomic_open(path, 'w', encoding=self.encoding) as handle:
            handle.write(f"{len(space)} {space.dim}\n")
            for word, row in zip(space.words, space.vectors):
                handle.write(word + " " + " ".join(f"{value:.9g}" for value in row) + "\n")
        self.logger.info(f"Saved {len(space)} vectors of dim {space.dim} to {path}")
        return path
