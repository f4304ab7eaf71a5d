from errors import DomainError

__all__ = ["ConfigurationParseError", "DatasetError", "ElementNotFoundError"]


class ConfigurationParseError(DomainError):
    """Exception raised when configuration text cannot be read.

    :param message: What went wrong
    :type message: str
    :param position: Zero-based character offset of the offending token
    :type position: int
    """

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DatasetError(DomainError):
    """Exception raised when a row of the element dataset is invalid.

    :param message: What went wrong
    :type message: str
    :param row: One-based line number in the dataset file
    :type row: int
    """

    def __init__(self, message: str, row: int = 0):
        self.row = row
        super().__init__(f"dataset row {row}: {message}")


class ElementNotFoundError(LookupError):
    """Exception raised when the dataset holds no record for an atomic number.

    :param z: The atomic number looked up
    :type z: int
    """

    def __init__(self, z: int):
        self.z = z
        super().__init__(f"no element record for Z={z}")
