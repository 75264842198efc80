""" Exceptions raised by the dephasing package """


class DephasingError(Exception):
    """ Base class of all errors raised on purpose by dephasing """


class InvalidArgument(DephasingError, ValueError):
    """ An argument is outside of its admissible range """


class InvalidTime(InvalidArgument):
    """ Time is negative or not finite """


class NotHermitian(InvalidArgument):
    """ Matrix deviates from its adjoint by more than the tolerance """


class NotPositive(InvalidArgument):
    """ Matrix has an eigenvalue below the clamping threshold """


class InvalidState(InvalidArgument):
    """ Matrix is not a valid two-qubit density matrix """


class NoConvergence(DephasingError, ArithmeticError):
    """ Iterative solver did not reach its tolerance """


class ConfigError(DephasingError, ValueError):
    """ Invalid configuration file or configuration field

    Parameters
    ----------
    message : str
        Description of the problem
    path : str
        Config file (if any)
    field : str
        Dotted path of the offending field, e.g. 'qubit1.bath.beta'
    line : int
        Line number in the file (for syntax errors)
    column : int
        Column number in the file (for syntax errors)

    """
    def __init__(self, message, path=None, field=None, line=None, column=None):
        self.message = message
        self.path = path
        self.field = field
        self.line = line
        self.column = column
        super().__init__(self._format())

    def _format(self):
        location = ''
        if self.path is not None:
            location = str(self.path)
            if self.line is not None:
                location += f':{self.line}'
                if self.column is not None:
                    location += f':{self.column}'
            location += ': '
        if self.field is not None:
            return f"{location}field '{self.field}': {self.message}"
        return f'{location}{self.message}'
