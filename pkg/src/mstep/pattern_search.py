"""Exhaustive search for window-sum identities of the shape

    sum_{k in K} sum_{j=0}^{p-1} F^(m)_{n+j+k}  ==  N * F^(m)_{n+l}   (all n >= 0)

with K a finite set of offsets (canonically min K = 0), window length p,
and rational N.  Candidates are enumerated within the given bounds; for
each (K, p) the scalar N is solved from one deep probe index and the
identity is then decided exactly by the recurrence kernel check, so every
returned solution is proven, not sampled.  Solutions are canonical under
translation (shifting K by t shifts l by t), and for a fixed (K, p) at
most one (N, l) can exist, so the output is free of duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .identity_catalog import kernel_check
from .sequences import handle, make_mstep


@dataclass(frozen=True)
class PatternSolution:
    m: int
    K: tuple
    p: int
    N: Fraction
    l: int

    @property
    def integer_n(self) -> bool:
        return self.N.denominator == 1

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "K": list(self.K),
            "p": self.p,
            "N": str(self.N),
            "l": self.l,
            "integerN": self.integer_n,
        }


def window_combo(K, p: int) -> dict:
    """Shift multiset of the double sum: shift -> multiplicity."""
    combo: dict = {}
    for k in K:
        for j in range(p):
            combo[k + j] = combo.get(k + j, 0) + 1
    return combo


def search(m: int, p_max: int, k_card_max: int, k_span_max: int,
           l_window: int | None = None) -> list:
    """All solutions within the bounds, in deterministic ascending order.

    K runs over canonical sets: 0 in K, |K| <= k_card_max, max K <= k_span_max.
    The scan range for l defaults to 0 .. max(K)+p+m, which bounds the
    dominant shift of any window combination.
    """
    if m < 2 or p_max < 1 or k_card_max < 1 or k_span_max < 0:
        raise ValueError("bounds must be positive (m >= 2)")
    spec = make_mstep(m)
    h = handle(spec)
    solutions = []
    k_sets = []
    for extra in range(min(k_card_max - 1, k_span_max) + 1):
        for rest in combinations(range(1, k_span_max + 1), extra):
            k_sets.append((0,) + rest)
    for K in sorted(k_sets):
        for p in range(1, p_max + 1):
            combo = window_combo(K, p)
            top = l_window if l_window is not None else max(K) + p + m
            probe = m + max(K) + p + top + 2
            value = sum(c * h.term(probe + s) for s, c in combo.items())
            for l in range(top + 1):
                denom = h.term(probe + l)
                if denom == 0:
                    continue
                N = Fraction(value, denom)
                if N == 0:
                    continue
                test = dict(combo)
                test[l] = test.get(l, 0) - N
                if kernel_check(spec, test, None, 0):
                    solutions.append(PatternSolution(m, K, p, N, l))
                    break  # at most one l can match a fixed (K, p)
    solutions.sort(key=lambda s: (s.p, s.K, s.l))
    return solutions


def verify_solution(sol: PatternSolution, n_count: int = 50) -> bool:
    """Independent numeric confirmation over n = 0 .. n_count, straight from
    the memoized sequence (no kernel reasoning)."""
    h = handle(make_mstep(sol.m))
    for n in range(n_count + 1):
        lhs = sum(h.term(n + j + k) for k in sol.K for j in range(sol.p))
        if lhs != sol.N * h.term(n + sol.l):
            return False
    return True
