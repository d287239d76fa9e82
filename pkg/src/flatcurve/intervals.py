"""Finite unions of closed intervals on the real line.

Used for the polynomial exceptional sets E_k, quadrature domains, and
root-avoidance regions.  Values are immutable after normalization; all set
operations return new normalized unions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = ["IntervalUnion"]


class IntervalUnion:
    """Sorted, pairwise-disjoint union of closed intervals [lo, hi]."""

    __slots__ = ("intervals",)

    def __init__(self, pairs: Iterable[Sequence[float]] = ()):
        cleaned = []
        for lo, hi in pairs:
            lo, hi = float(lo), float(hi)
            if not (np.isfinite(lo) and np.isfinite(hi)):
                raise ValueError(f"non-finite interval endpoint ({lo}, {hi})")
            if hi < lo:
                raise ValueError(f"interval with hi < lo: ({lo}, {hi})")
            cleaned.append((lo, hi))
        cleaned.sort()
        merged: list[tuple[float, float]] = []
        for lo, hi in cleaned:
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        self.intervals: tuple[tuple[float, float], ...] = tuple(merged)

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls(())

    @property
    def measure(self) -> float:
        return float(sum(hi - lo for lo, hi in self.intervals))

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        parts = ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in self.intervals)
        return f"IntervalUnion({parts})"

    def contains(self, x) -> np.ndarray:
        """Vectorized closed-interval membership."""
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=bool)
        for lo, hi in self.intervals:
            out |= (x >= lo) & (x <= hi)
        return out

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(list(self.intervals) + list(other.intervals))

    def intersect(self, other: "IntervalUnion") -> "IntervalUnion":
        out = []
        for a_lo, a_hi in self.intervals:
            for b_lo, b_hi in other.intervals:
                lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
                if hi >= lo:
                    out.append((lo, hi))
        return IntervalUnion(out)

    def subtract(self, other: "IntervalUnion") -> "IntervalUnion":
        """Set difference; removal of a closed set from closed intervals is
        represented by the closure of the open remainder."""
        out = []
        for lo, hi in self.intervals:
            pieces = [(lo, hi)]
            for b_lo, b_hi in other.intervals:
                nxt = []
                for p_lo, p_hi in pieces:
                    if b_hi < p_lo or b_lo > p_hi:
                        nxt.append((p_lo, p_hi))
                        continue
                    if b_lo > p_lo:
                        nxt.append((p_lo, min(b_lo, p_hi)))
                    if b_hi < p_hi:
                        nxt.append((max(b_hi, p_lo), p_hi))
                pieces = nxt
            out += [(a, b) for a, b in pieces if b > a]
        return IntervalUnion(out)

    def to_json(self) -> list[list[float]]:
        return [[lo, hi] for lo, hi in self.intervals]
