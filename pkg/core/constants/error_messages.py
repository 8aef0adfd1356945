"""
Error Messages Constants
"""


class ErrorMessages:
    """Error message templates shared by loaders, trainers and the CLI"""

    # File Errors
    FILE_NOT_FOUND = "File not found: {file_path}"
    FILE_READ_ERROR = "Error reading file: {file_path}"
    FILE_WRITE_ERROR = "Error writing file: {file_path}"
    MALFORMED_CONFIG_LINE = "{file_path}:{line_no}: expected key=value, got '{line}'"

    # Vector File Errors
    INCONSISTENT_COLUMNS = "{file_path}:{line_no}: expected {expected} values after the token, got {actual}"
    INVALID_FLOAT = "{file_path}:{line_no}: non-numeric vector value"
    INVALID_DIMENSION = "{file_path}: vector dimensionality must be >= 1, got {dim}"
    NON_FINITE_VECTOR = "Vector for '{word}' contains NaN or infinite values"
    DUPLICATE_WORDS = "Vocabulary must not contain duplicate tokens ({count} duplicates)"
    SHAPE_MISMATCH = "Matrix shape {shape} does not match {rows} words x dim {dim}"

    # Constraint Errors
    MALFORMED_PAIR = "{file_path}:{line_no}: expected two tokens, got {count}"

    # Evaluation Errors
    MALFORMED_EVAL_LINE = "{file_path}:{line_no}: expected 'word1 word2 score', got '{line}'"
    NON_NUMERIC_SCORE = "{file_path}:{line_no}: score '{score}' is not a number"
    DUPLICATE_EVAL_PAIR = "{file_path}:{line_no}: duplicate pair ({word1}, {word2})"
    LENGTH_MISMATCH = "Length mismatch: {left} vs {right}"
    TOO_FEW_VALUES = "Spearman's rho needs at least 2 values, got {count}"
    ZERO_RANK_VARIANCE = "Spearman's rho is undefined: {which} ranks have zero variance"
    TOO_FEW_COVERED = "Dataset '{name}': only {covered} of {total} pairs covered, need at least 2"

    # Mapping Errors
    DIMENSION_MISMATCH = "Dimension mismatch: model expects {expected}, got {actual}"
    TOO_FEW_PAIRS = "Mapping needs at least {minimum} training pairs, got {count}"
    DEGENERATE_INPUT = "Least-squares input matrix is all zeros"
    NAN_LOSS = "Loss became NaN at epoch {epoch}, batch {batch} ({objective})"
    UNSUPPORTED_MODEL_VERSION = "Unsupported model file version {version} in {file_path}"

    # Pipeline Errors
    EMPTY_CONSTRAINTS = "No constraints left after vocabulary filtering"
    EMPTY_SPACE = "Embedding space is empty"
