import typing

import attrs
import numpy as np
from attrs import field, frozen

from scorecluster.exceptions import DimensionMismatchException, InvalidInputException
from scorecluster.models._arrays import array_eq, readonly_array

MIN_SCORE = 0.0
MAX_SCORE = 100.0


@frozen
class ScoreMatrix:
    """
    N students by M courses. Every score is a finite percentage in [0, 100].

    Ids and course names are non-empty, carry no surrounding whitespace and contain no commas or line
    breaks, so they survive a CSV round trip. Courses without names are named C1, C2, ...
    """
    student_ids: typing.Tuple[str, ...] = field(converter=tuple)
    rows: np.ndarray = field(converter=readonly_array(np.float64), eq=array_eq)
    course_names: typing.Optional[typing.Tuple[str, ...]] = field(
        default=None, converter=attrs.converters.optional(tuple)
    )

    def __attrs_post_init__(self):
        if self.rows.ndim != 2:
            raise InvalidInputException(f"Scores must form a two dimensional matrix, got {self.rows.ndim} dimension(s)")

        n, m = self.rows.shape
        if n < 1:
            raise InvalidInputException("A score matrix needs at least one student")
        if m < 1:
            raise InvalidInputException("A score matrix needs at least one course")

        if not np.all(np.isfinite(self.rows)):
            raise InvalidInputException("Scores must be finite numbers")
        if np.any(self.rows < MIN_SCORE) or np.any(self.rows > MAX_SCORE):
            raise InvalidInputException(f"Scores must lie within [{MIN_SCORE:g}, {MAX_SCORE:g}]")

        if len(self.student_ids) != n:
            raise DimensionMismatchException(len(self.student_ids), n, f"Got {len(self.student_ids)} student ids for {n} rows")
        if len(set(self.student_ids)) != n:
            raise InvalidInputException("Student ids must be unique")

        for student_id in self.student_ids:
            _check_label(student_id, 'Student id')

        if self.course_names is None:
            object.__setattr__(self, 'course_names', tuple(generate_course_names(m)))
        elif len(self.course_names) != m:
            raise DimensionMismatchException(len(self.course_names), m, f"Got {len(self.course_names)} course names for {m} columns")
        for name in self.course_names:
            _check_label(name, 'Course name')

    @classmethod
    def from_rows(cls, rows, student_ids: typing.Optional[typing.Sequence[str]] = None,
                  course_names: typing.Optional[typing.Sequence[str]] = None) -> 'ScoreMatrix':
        """
        Builds a matrix, generating ids S0001, S0002, ... when none are supplied
        """
        if student_ids is None:
            student_ids = generate_ids(len(rows))

        return cls(student_ids=student_ids, rows=rows, course_names=course_names)

    @property
    def n_students(self) -> int:
        return self.rows.shape[0]

    @property
    def n_courses(self) -> int:
        return self.rows.shape[1]

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return self.n_students, self.n_courses


def generate_ids(count: int) -> typing.List[str]:
    return [f"S{i:04d}" for i in range(1, count + 1)]


def generate_course_names(count: int) -> typing.List[str]:
    return [f"C{j}" for j in range(1, count + 1)]


def _check_label(value, kind: str) -> None:
    if not isinstance(value, str) or not value:
        raise InvalidInputException(f"{kind} must be a non-empty string, got {value!r}")
    if value != value.strip() or any(c in value for c in ',\r\n'):
        raise InvalidInputException(f"{kind} {value!r} has surrounding whitespace, a comma or a line break")
