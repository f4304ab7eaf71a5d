from errors import SolverError

__all__ = ["ContinuationError", "BracketError"]


class ContinuationError(SolverError):
    """Exception raised when coupling continuation stalls.

    :param message: What went wrong
    :type message: str
    :param last_good_g: Largest coupling at which a solution was accepted
    :type last_good_g: float
    """

    def __init__(self, message: str, last_good_g: float):
        self.last_good_g = last_good_g
        super().__init__(f"{message} (last good g = {last_good_g:.15g})")


class BracketError(SolverError):
    """Exception raised when a scalar root is not bracketed.

    :param args: Variable length argument list
    :type args: tuple
    """

    def __init__(self, *args):
        super().__init__(*args)
