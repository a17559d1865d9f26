import csv
import io
import logging
import math
import typing

import numpy as np

from scorecluster.exceptions import CsvFormatException, InvalidInputException
from scorecluster.lang import lang
from scorecluster.models import ScoreMatrix
from scorecluster.models.matrix import MAX_SCORE, MIN_SCORE, generate_course_names, generate_ids

_log = logging.getLogger(__name__)


def load_csv(source: typing.Union[typing.BinaryIO, bytes], has_header: bool = True, id_column: bool = True) -> ScoreMatrix:
    """
    Reads a score matrix from comma separated UTF-8 text.

    With id_column the first field of every row is the student id, otherwise ids S0001, S0002, ... are
    generated. With has_header the first row names the courses. Row and column numbers in errors are
    1-based positions in the file; blank lines are skipped.
    Args:
        source (typing.Union[typing.BinaryIO, bytes]): A binary stream or raw bytes
        has_header (bool): The first row holds course names
        id_column (bool): The first column holds student ids

    Returns:
        ScoreMatrix
    """
    raw = source if isinstance(source, (bytes, bytearray)) else source.read()
    try:
        text = bytes(raw).decode('utf-8-sig')
    except UnicodeDecodeError as e:
        raise CsvFormatException(lang('Ingest', 'bad_encoding')) from e

    # Only truly empty lines are skipped; a row of empty fields is missing data
    lines = [(number, fields) for number, fields in enumerate(csv.reader(io.StringIO(text, newline='')), start=1)
             if fields]
    if not lines:
        raise CsvFormatException(lang('Ingest', 'empty_file'))

    course_names = None
    offset = 1 if id_column else 0
    expected = None
    if has_header:
        header_row, header = lines.pop(0)
        expected = len(header)
        course_names = [name.strip() for name in header[offset:]]
        if not course_names:
            raise CsvFormatException(lang('Ingest', 'no_scores', {'row': header_row}), row=header_row)
        for column, name in enumerate(course_names, start=offset + 1):
            if not name:
                raise CsvFormatException(lang('Ingest', 'missing_course', {'row': header_row, 'column': column}),
                                         row=header_row, column=column)
        if not lines:
            raise CsvFormatException(lang('Ingest', 'empty_file'))

    student_ids = []
    seen = set()
    rows = []
    for number, fields in lines:
        if expected is None:
            expected = len(fields)
            if expected - offset < 1:
                raise CsvFormatException(lang('Ingest', 'no_scores', {'row': number}), row=number)
        if len(fields) != expected:
            _log.info(f"Rejecting ragged row {number}: {len(fields)} fields, expected {expected}")
            raise CsvFormatException(
                lang('Ingest', 'ragged_row', {'row': number, 'found': len(fields), 'expected': expected}), row=number
            )

        scores = [_parse_score(cell, number, column) for column, cell in enumerate(fields[offset:], start=offset + 1)]

        if id_column:
            student_id = fields[0].strip()
            if not student_id:
                raise CsvFormatException(lang('Ingest', 'missing_id', {'row': number}), row=number, column=1)
            if student_id in seen:
                raise CsvFormatException(
                    lang('Ingest', 'duplicate_id', {'student_id': student_id, 'row': number}), row=number, column=1
                )
            seen.add(student_id)
            student_ids.append(student_id)

        rows.append(scores)

    if not id_column:
        student_ids = generate_ids(len(rows))

    _log.info(f"Loaded {len(rows)} student(s) with {expected - offset} score column(s)")
    return ScoreMatrix(student_ids=student_ids, rows=rows, course_names=course_names)


def _parse_score(cell: str, row: int, column: int) -> float:
    cell = cell.strip()
    replacements = {'value': cell, 'row': row, 'column': column}
    if not cell:
        raise CsvFormatException(lang('Ingest', 'missing_value', replacements), row=row, column=column)

    try:
        value = float(cell)
    except ValueError:
        raise CsvFormatException(lang('Ingest', 'bad_number', replacements), row=row, column=column) from None

    if not math.isfinite(value):
        raise CsvFormatException(lang('Ingest', 'bad_number', replacements), row=row, column=column)
    if not MIN_SCORE <= value <= MAX_SCORE:
        raise CsvFormatException(lang('Ingest', 'out_of_range', replacements), row=row, column=column)

    return value


def generate_synthetic(n: int, m: int, k_true: int, band_centers: typing.Sequence[float], spread: float,
                       seed: int) -> ScoreMatrix:
    """
    Generates a reproducible score matrix made of k_true groups of students.

    Row i belongs to group i mod k_true, so group sizes differ by at most one. Each score is the group
    centre plus normal noise with standard deviation `spread`, clamped to [0, 100]. The noise comes from
    numpy's PCG64 generator seeded with `seed`.
    Returns:
        ScoreMatrix
    """
    for name, value in (('n', n), ('m', m), ('k_true', k_true)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
            raise InvalidInputException(f"{name} must be a positive integer, got {value!r}")
    if k_true > n:
        raise InvalidInputException(f"k_true={k_true} exceeds n={n}")

    centers = np.asarray(band_centers, dtype=np.float64)
    if centers.shape != (k_true,):
        raise InvalidInputException(f"Expected {k_true} band centres, got {centers.size}")
    if not np.all(np.isfinite(centers)) or np.any(centers < MIN_SCORE) or np.any(centers > MAX_SCORE):
        raise InvalidInputException(f"Band centres must lie within [{MIN_SCORE:g}, {MAX_SCORE:g}]")
    if not math.isfinite(spread) or spread < 0:
        raise InvalidInputException(f"spread must be a finite, non-negative number, got {spread!r}")
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2 ** 64:
        raise InvalidInputException(f"seed must be an unsigned 64-bit integer, got {seed!r}")

    rng = np.random.default_rng(seed)
    groups = np.arange(n) % k_true
    noise = rng.normal(0.0, 1.0, size=(n, m)) * spread
    rows = np.clip(centers[groups][:, np.newaxis] + noise, MIN_SCORE, MAX_SCORE)

    _log.debug(f"Generated a synthetic {n}x{m} matrix with {k_true} group(s), seed {seed}")
    return ScoreMatrix(
        student_ids=generate_ids(n),
        rows=rows,
        course_names=generate_course_names(m),
    )
