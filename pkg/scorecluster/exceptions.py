import typing


class ScoreClusterException(Exception):
    """
    Base exception for every error raised by scorecluster
    """
    pass


class InvalidInputException(ScoreClusterException):
    pass


class DimensionMismatchException(InvalidInputException):
    def __init__(self, left: int, right: int, message: typing.Optional[str] = None):
        self.left = left
        self.right = right
        super().__init__(message or f"Dimension mismatch: {left} != {right}")


class CsvFormatException(InvalidInputException):
    def __init__(self, message: str, row: typing.Optional[int] = None, column: typing.Optional[int] = None):
        self.row = row
        self.column = column
        super().__init__(message)


class InvalidConfigurationException(ScoreClusterException):
    pass


class InternalConsistencyException(ScoreClusterException):
    pass


class ReportException(ScoreClusterException):
    pass


class UsageException(ScoreClusterException):
    """
    Raised for bad command line usage; maps to exit code 2
    """
    pass
