"""
Utility functions for the dualcheeger library.

Vertex subsets are stored as integer bitmasks: bit i set means vertex i is in the subset.
"""
from typing import Iterable, Iterator, List

def mask_from_indices(indices: Iterable[int]) -> int:
    """Build a bitmask from vertex indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask

def indices_from_mask(mask: int) -> List[int]:
    """List the vertex indices of a bitmask in increasing order."""
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return indices

def iter_submasks(mask: int, ascending: bool = False) -> Iterator[int]:
    """
    Iterate over the nonempty submasks of a bitmask.
    
    Args:
        mask: Bitmask to enumerate
        ascending: Increasing numeric order instead of decreasing
        
    Yields:
        Every nonempty submask
    """
    if ascending:
        sub = (-mask) & mask
        while sub:
            yield sub
            sub = (sub - mask) & mask
        return
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask

def popcount(mask: int) -> int:
    """Number of set bits."""
    return bin(mask).count('1')

def lowest_bit_index(mask: int) -> int:
    """Index of the lowest set bit of a nonzero mask."""
    return (mask & -mask).bit_length() - 1

def format_seconds(seconds: float) -> float:
    """Round a duration for reports."""
    return round(seconds, 6)
