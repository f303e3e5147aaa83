"""Exception types raised by bottforge.

Everything derives from ValueError so existing ``except ValueError`` handlers keep working.
"""


class BottforgeError(ValueError):
    pass


class UnsupportedTypeError(BottforgeError):
    pass


class InvalidRootError(BottforgeError):
    pass


class SimpleIndexError(BottforgeError):
    pass


class WeightShapeError(BottforgeError):
    pass


class NotDominantError(BottforgeError):
    pass


class RootSystemMismatchError(BottforgeError):
    pass


class CaseError(BottforgeError):
    pass


class ConfigurationError(BottforgeError):
    pass


class OracleMismatchError(BottforgeError):
    """Checked-mode failure: computed cohomology disagrees with the Euler sum."""
