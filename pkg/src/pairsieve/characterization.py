"""Odd composites as the set z = 2xy + x + y (x, y >= 1).

2z + 1 = (2x + 1)(2y + 1), so z is representable iff 2z + 1 is an odd
composite.  This is the slow, literal reference; the sieve never uses it.
"""

from __future__ import annotations


def is_representable(z: int, *, full_range: bool = False) -> bool:
    """True iff z = 2xy + x + y for some x, y >= 1.

    Searches y with (z - y) divisible by 2y + 1.  By default stops once
    y > x is forced (2y^2 + 2y > z), which is enough because the form is
    symmetric in x and y; ``full_range`` scans every y with 3y + 1 <= z.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    y = 1
    while 3 * y + 1 <= z:
        if not full_range and 2 * y * y + 2 * y > z:
            break
        if (z - y) % (2 * y + 1) == 0:
            return True
        y += 1
    return False


def representable_set(limit: int) -> list[int]:
    """Sorted distinct z <= limit of the form 2xy + x + y."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    hits = bytearray(limit + 1)
    y = 1
    while 2 * y * y + 2 * y <= limit:
        step = 2 * y + 1
        # x runs from y upward: z = x*step + y
        for z in range(y * step + y, limit + 1, step):
            hits[z] = 1
        y += 1
    return [z for z in range(1, limit + 1) if hits[z]]
