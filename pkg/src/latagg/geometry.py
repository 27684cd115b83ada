"""Boxes on the integer lattice and the parameter set of their attachments.

A box is a tuple of positive side lengths.  Placing ``y`` against ``x`` is
parametrized by the position ``s`` of a marked vertex of ``y``; the valid
positions are exactly the integer points on the boundary of the box
``[0, x_1+y_1] x ... x [0, x_l+y_l]``.
"""
from itertools import product
from math import prod

__all__ = [
    "IncompatibleBoxes",
    "InvalidParameter",
    "box",
    "check_pair",
    "attachment_count",
    "parameter_set",
    "side_result",
    "aggregate_at",
]


class IncompatibleBoxes(ValueError):
    """Raised when two boxes do not live in the same dimension."""


class InvalidParameter(ValueError):
    """Raised for an attachment parameter that is not a boundary point."""


def box(dims):
    """Validate ``dims`` and return it as a tuple of ints."""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("a box needs at least one side")
    if any(d < 1 for d in dims):
        raise ValueError(f"box sides must be positive, got {dims}")
    return dims


def check_pair(x, y):
    x, y = box(x), box(y)
    if len(x) != len(y):
        raise IncompatibleBoxes(
            f"boxes {x} and {y} have different dimensions ({len(x)} != {len(y)})")
    return x, y


def attachment_count(x, y) -> int:
    """Number of attachments of ``x`` and ``y``, i.e. boundary points of R_{x+y}."""
    x, y = check_pair(x, y)
    return (prod(a + b + 1 for a, b in zip(x, y))
            - prod(a + b - 1 for a, b in zip(x, y)))


def _extents(x, y):
    return [a + b for a, b in zip(x, y)]


def parameter_set(x, y):
    """Yield every integer boundary point of R_{x+y} exactly once.

    Each point is owned by the face of its first extreme coordinate: for
    face ``(i, e)`` coordinates before ``i`` are interior, coordinate ``i``
    equals ``e`` (0 or its extent) and later coordinates are free.
    """
    x, y = check_pair(x, y)
    ext = _extents(x, y)
    l = len(ext)
    for i in range(l):
        head = [range(1, n) for n in ext[:i]]
        tail = [range(0, n + 1) for n in ext[i + 1:]]
        for e in (0, ext[i]):
            yield from product(*head, (e,), *tail)


def side_result(a: int, b: int, s: int) -> int:
    """Combined length of two strips of lengths a, b at offset s."""
    return max(a, b, a + b - s, s)


def aggregate_at(x, y, s):
    """Bounding box of the attachment of ``y`` to ``x`` at parameter ``s``."""
    x, y = check_pair(x, y)
    s = tuple(s)
    if len(s) != len(x):
        raise InvalidParameter(f"parameter {s} has wrong dimension for {x}, {y}")
    ext = _extents(x, y)
    if any(not 0 <= si <= n for si, n in zip(s, ext)):
        raise InvalidParameter(f"parameter {s} outside R_{{x+y}} of extents {tuple(ext)}")
    if not any(si == 0 or si == n for si, n in zip(s, ext)):
        raise InvalidParameter(f"parameter {s} is interior; boxes would overlap")
    return tuple(side_result(a, b, si) for a, b, si in zip(x, y, s))
