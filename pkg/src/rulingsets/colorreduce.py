"""Palette-reduction schedules for fast deterministic coloring.

One reduction step maps a proper m-coloring to a proper q^2-coloring in a
single communication round: each color c < m is identified with the
polynomial over F_q whose coefficients are the base-q digits of c (degree
<= k, which needs q^(k+1) >= m), and a node picks the smallest evaluation
point s where its polynomial differs from every neighbor's. Distinct
polynomials of degree <= k agree on at most k points, so q > k * degree
guarantees a free point. Iterating shrinks the palette to a fixpoint of
at most COLOR_BOUND_FACTOR * degree^2 colors within O(log* m) steps.

The whole schedule is a pure function of (initial palette, degree bound),
so every node computes the identical schedule locally and the rounds stay
in lockstep without coordination.
"""

from __future__ import annotations

from functools import lru_cache

COLOR_BOUND_FACTOR = 16


def color_bound(degree: int) -> int:
    """Exported palette bound for the reduction fixpoint."""
    return COLOR_BOUND_FACTOR * max(degree, 1) ** 2


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def next_prime(x: int) -> int:
    """Smallest prime strictly greater than x."""
    p = max(x + 1, 2)
    while not _is_prime(p):
        p += 1
    return p


def _best_step(m: int, degree: int) -> tuple[int, int] | None:
    """Cheapest (q, k) reduction from an m-palette, or None at the fixpoint."""
    best: tuple[int, int] | None = None
    for k in range(1, max(m.bit_length(), 1) + 1):
        q = next_prime(k * degree)
        while q ** (k + 1) < m:
            q = next_prime(q)
        if best is None or q * q < best[0] ** 2:
            best = (q, k)
    if best is not None and best[0] ** 2 < m:
        return best
    return None


@lru_cache(maxsize=4096)
def reduction_schedule(num_colors: int, degree: int) -> tuple[tuple[tuple[int, int], ...], int]:
    """Greedy shrinking schedule: ((q, k) per step, final palette size)."""
    if num_colors < 1:
        raise ValueError("num_colors must be >= 1")
    degree = max(degree, 1)
    m = num_colors
    steps = []
    while True:
        step = _best_step(m, degree)
        if step is None:
            break
        steps.append(step)
        m = step[0] ** 2
    return tuple(steps), m


@lru_cache(maxsize=64)
def _power_table(q: int, k: int) -> tuple[tuple[int, ...], ...]:
    # table[s][i] = s^i mod q for s in F_q, i <= k
    return tuple(
        tuple(pow(s, i, q) for i in range(k + 1))
        for s in range(q)
    )


@lru_cache(maxsize=1 << 18)
def poly_values(q: int, k: int, color: int) -> tuple[int, ...]:
    """Evaluations over all of F_q of the degree-<=k polynomial whose
    coefficients are the base-q digits of `color`."""
    digits = []
    c = color
    for _ in range(k + 1):
        digits.append(c % q)
        c //= q
    if c:
        raise ValueError(f"color {color} needs more than {k + 1} base-{q} digits")
    table = _power_table(q, k)
    out = []
    for s in range(q):
        row = table[s]
        acc = 0
        for i, d in enumerate(digits):
            if d:
                acc += d * row[i]
        out.append(acc % q)
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def collision_mask(q: int, k: int, color: int, other: int) -> int:
    """Bitmask over F_q of evaluation points where the two color
    polynomials collide. Both colors must be distinct."""
    if color == other:
        raise ValueError("collision mask of a color with itself is everything")
    a = poly_values(q, k, color)
    b = poly_values(q, k, other)
    mask = 0
    for s in range(q):
        if a[s] == b[s]:
            mask |= 1 << s
    return mask


def refine_color(q: int, k: int, color: int, neighbor_colors, bad_mask: int = 0) -> int:
    """New color after one reduction step: smallest collision-free
    evaluation point s, encoded as s*q + p_color(s) < q^2."""
    mask = bad_mask
    for c in neighbor_colors:
        if c == color:
            raise ValueError("improper coloring: neighbor shares color")
        mask |= collision_mask(q, k, color, c)
    s = 0
    while mask & 1:
        mask >>= 1
        s += 1
    if s >= q:
        raise ValueError("no collision-free point; degree bound violated")
    return s * q + poly_values(q, k, color)[s]
