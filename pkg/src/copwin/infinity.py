"""The infinite rank / capture-time value."""

from functools import total_ordering


@total_ordering
class _Infinity:
    """Larger than every integer. Comparison is the only supported operation."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, (int, float)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, float)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("copwin.infinity")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "infinity"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_finite(value) -> bool:
    return value is not INFINITY


def format_value(value) -> str:
    return str(value)
