import typing

import attrs
import numpy as np

from scorecluster.exceptions import InvalidInputException


def readonly_array(dtype) -> typing.Callable[[typing.Any], np.ndarray]:
    """
    attrs converter producing a private, read-only copy of the given array-like
    """
    def _convert(value) -> np.ndarray:
        try:
            array = np.array(value, dtype=dtype)
        except (TypeError, ValueError) as e:
            raise InvalidInputException(f"Not a rectangular numeric array: {e}") from e

        array.setflags(write=False)
        return array

    return _convert


array_eq = attrs.cmp_using(eq=np.array_equal)
