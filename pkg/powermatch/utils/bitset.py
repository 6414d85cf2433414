from collections.abc import Iterable, Iterator

import numpy as np


def iter_bits(mask: int) -> Iterator[int]:
    """Yields indices of the set bits in ascending order."""

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Builds a bit mask from element indices."""

    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def lowest_bit(mask: int) -> int:
    """Returns the index of the lowest set bit, -1 for an empty mask."""

    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_from_row(row: np.ndarray) -> int:
    """Packs a boolean numpy row into an int mask (bit i = row[i])."""

    packed = np.packbits(np.asarray(row, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")
