"""
Constraint Data Provider
Reads attract/repel pair files: one pair per line, two tokens separated by spaces or tabs
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

from core.constants.error_messages import ErrorMessages
from core.dataproviders.data_provider import DataProvider
from core.models.pojo.constraint_pojo import ConstraintSet


class ConstraintDataProvider(DataProvider):
    """Loads constraint pair files into a canonical ConstraintSet"""

    def __init__(self, strip_prefix: Optional[str] = None, encoding: str = 'utf-8'):
        super().__init__(encoding=encoding)
        self.strip_prefix = strip_prefix or None

    def _strip(self, token: str) -> str:
        if self.strip_prefix and token.startswith(self.strip_prefix):
            return token[len(self.strip_prefix):]
        return token

    def load_data(self, source: Union[str, Path], **kwargs) -> List[Tuple[str, str]]:
        """
        Read raw pairs from one file

        Args:
            source: Path to a constraint file

        Returns:
            Pairs in file order (not yet deduplicated)

        Raises:
            ValueError: If a line does not hold exactly two tokens
        """
        path = Path(source)
        pairs = []
        try:
            for line_no, line in self.iter_lines(path):
                parts = line.split()
                if len(parts) != 2:
                    raise ValueError(ErrorMessages.MALFORMED_PAIR.format(
                        file_path=path, line_no=line_no, count=len(parts)))
                pairs.append((self._strip(parts[0]), self._strip(parts[1])))
        except (OSError, ValueError) as e:
            self.logger.error(f"Error reading constraints from {path}: {e}")
            raise
        self.logger.info(f"Read {len(pairs)} pairs from {path}")
        return pairs

    def load_constraints(self, attract_path: Optional[Union[str, Path]],
                         repel_path: Optional[Union[str, Path]]) -> ConstraintSet:
        """
        Load attract and repel files into a ConstraintSet

        Either path may be None, which contributes no pairs.
        """
        attract = self.load_data(attract_path) if attract_path else []
        repel = self.load_data(repel_path) if repel_path else []
        constraints = ConstraintSet.from_pairs(attract, repel)

        stats = constraints.stats
        if stats.self_pairs:
            self.logger.warning(f"Dropped {stats.self_pairs} self pairs")
        if stats.conflicting_pairs:
            self.logger.warning(f"Dropped {stats.conflicting_pairs} pairs present in both attract and repel")
        self.logger.info(
            f"Constraints: {len(constraints.attract)} attract, {len(constraints.repel)} repel "
            f"({stats.duplicate_pairs} duplicates merged)")
        return constraints
