import typing
from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, places: int = 2) -> str:
    """
    Formats a value for display with exactly `places` decimals, rounding halves away from zero.

    The shortest repr of the float is rounded rather than its binary expansion, so 62.225 displays
    as 62.23 even though the nearest double sits slightly below it.
    Args:
        value (float): The value to format
        places (int): Number of decimals

    Returns:
        str
    """
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def full_precision(value: typing.Optional[float]) -> str:
    """
    Shortest string that parses back to the identical float; empty for absent values
    """
    if value is None:
        return ''

    return repr(float(value))


def parse_optional_float(value: str) -> typing.Optional[float]:
    value = value.strip()
    if not value or value.lower() in ('none', 'null'):
        return None

    return float(value)


def parse_int_list(value: str) -> typing.List[int]:
    """
    Parses a comma separated list of integers such as "3,4,5"
    Raises:
        ValueError: If any element is not an integer
    """
    items = [v.strip() for v in str(value).split(',')]
    if not items or any(not v for v in items):
        raise ValueError(f"Empty element in list: {value!r}")

    return [int(v) for v in items]


def parse_float_list(value: str) -> typing.List[float]:
    """
    Parses a comma separated list of numbers such as "62,53,46"
    """
    items = [v.strip() for v in str(value).split(',')]
    if not items or any(not v for v in items):
        raise ValueError(f"Empty element in list: {value!r}")

    return [float(v) for v in items]


def strictly_increasing(values: typing.Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))
