"""
Evaluation Data Provider
Reads scored word-pair files (SimLex-999, SimVerb-3500 and friends)
"""
import math
from pathlib import Path
from typing import Optional, Union

from core.constants.error_messages import ErrorMessages
from core.dataproviders.data_provider import DataProvider
from core.models.pojo.eval_pojo import EvalDataset


def _parse_score(token: str) -> Optional[float]:
    try:
        value = float(token)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


class EvalDataProvider(DataProvider):
    """
    Lines hold "word1 word2 score" separated by tabs or spaces. A first line whose
    third column is not numeric is treated as a header and skipped.
    """

    def load_data(self, source: Union[str, Path], name: Optional[str] = None) -> EvalDataset:
        """
        Load an evaluation dataset

        Args:
            source: Path to the dataset file
            name: Dataset label; defaults to the file stem

        Returns:
            EvalDataset

        Raises:
            ValueError: On a malformed line, a non-numeric score or a duplicate pair
        """
        path = Path(source)
        pairs = []
        seen = set()
        first = True
        try:
            for line_no, line in self.iter_lines(path):
                parts = line.split('\t') if '\t' in line else line.split()
                parts = [p.strip() for p in parts if p.strip()]
                if len(parts) < 3:
                    raise ValueError(ErrorMessages.MALFORMED_EVAL_LINE.format(
                        file_path=path, line_no=line_no, line=line))
                word1, word2, score_token = parts[0], parts[1], parts[2]
                score = _parse_score(score_token)
                if score is None:
                    if first:
                        first = False
                        self.logger.debug(f"Skipping header in {path}: {line}")
                        continue
                    raise ValueError(ErrorMessages.NON_NUMERIC_SCORE.format(
                        file_path=path, line_no=line_no, score=score_token))
                first = False
                key = frozenset((word1, word2))
                if key in seen:
                    raise ValueError(ErrorMessages.DUPLICATE_EVAL_PAIR.format(
                        file_path=path, line_no=line_no, word1=word1, word2=word2))
                seen.add(key)
                pairs.append((word1, word2, score))
        except (OSError, ValueError) as e:
            self.logger.error(f"Error loading evaluation data from {path}: {e}")
            raise

        dataset = EvalDataset(name=name or path.stem, pairs=tuple(pairs))
        self.logger.info(f"Loaded {len(dataset)} scored pairs from {path}")
        return dataset
