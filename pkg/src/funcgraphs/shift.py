"""Finite truncations of increasing sequences under the shift map.

A strictly increasing sequence of naturals stands in for an infinite
subset; dropping the first element is the shift.  Against a fixed
reference sequence x, the half-open windows

    [x(2rn - r), x(2rn + r))      n = 0, 1, 2, ...   (x(j) = 0 for j < 0)

partition the naturals, and a sequence y is a window member when the
count of y inside the first window meeting y is divisible by 2r.  The
countdown index of y is the number of shifts until window membership
holds.  With finite data all three queries are three-valued: None means
the truncation cannot certify an answer, and certified answers never
change when the sequences are extended.
"""

from __future__ import annotations

from bisect import bisect_left
import random

Seq = tuple[int, ...]


def validate_seq(xs) -> Seq:
    """Coerce to a tuple, requiring strictly increasing naturals."""
    out = tuple(xs)
    if not out:
        raise ValueError("sequence must be nonempty")
    if out[0] < 0:
        raise ValueError("sequence values must be >= 0")
    for a, b in zip(out, out[1:]):
        if b <= a:
            raise ValueError("sequence must be strictly increasing")
    return out


def shift_seq(y) -> Seq | None:
    """Drop the first element; None once nothing is left."""
    y = validate_seq(y)
    return y[1:] if len(y) > 1 else None


def _window(x: Seq, r: int, n: int) -> tuple[int, int] | None:
    """Endpoints [left, right) of window n, None when x is too short."""
    right_idx = 2 * r * n + r
    if right_idx >= len(x):
        return None
    left = 0 if n == 0 else x[2 * r * n - r]
    return left, x[right_idx]


def window_member(x, y, r: int) -> bool | None:
    """Is the count of y in its first window divisible by 2r?

    The first window is the one containing y's least element.  The
    answer needs that window's right endpoint (an entry of x) and the
    window's full contents (y known through right - 1); otherwise None.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    x = validate_seq(x)
    y = validate_seq(y)
    n = 0
    while True:
        win = _window(x, r, n)
        if win is None:
            return None
        left, right = win
        if y[0] >= right:
            n += 1
            continue
        if y[-1] < right - 1:
            return None
        count = bisect_left(y, right) - bisect_left(y, left)
        return count % (2 * r) == 0


def countdown_index(x, y, r: int) -> int | None:
    """Shifts until window membership; None when data runs out first."""
    x = validate_seq(x)
    cur: Seq | None = validate_seq(y)
    k = 0
    while cur is not None:
        verdict = window_member(x, cur, r)
        if verdict is None:
            return None
        if verdict:
            return k
        cur = shift_seq(cur)
        k += 1
    return None


def dense_window_index(x, y, r: int) -> int | None:
    """Least n whose window certifiably holds at least 2r points of y.

    A window certifies the bound as soon as 2r known points land in it;
    certifying that an earlier window fails needs its full contents.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    x = validate_seq(x)
    y = validate_seq(y)
    n = 0
    while True:
        win = _window(x, r, n)
        if win is None:
            return None
        left, right = win
        count = bisect_left(y, right) - bisect_left(y, left)
        if count >= 2 * r:
            return n
        if y[-1] < right - 1:
            return None
        n += 1


def check_countdown_pairs(x, ys, r: int) -> dict:
    """Edge invariant of the countdown over a batch of sequences.

    For each y the pair (countdown(y), countdown(shift y)) must step
    down by one, or reset to at least r after a zero.  Pairs with an
    uncertified side are skipped, never failed.
    """
    x = validate_seq(x)
    report: dict = {"checked": 0, "skipped": 0, "violations": [],
                    "resets": 0, "min_reset": None}
    for y in ys:
        y = validate_seq(y)
        tail = shift_seq(y)
        if tail is None:
            report["skipped"] += 1
            continue
        a = countdown_index(x, y, r)
        b = countdown_index(x, tail, r)
        if a is None or b is None:
            report["skipped"] += 1
            continue
        report["checked"] += 1
        if a > 0:
            if b != a - 1:
                report["violations"].append((y[0], a, b))
        else:
            report["resets"] += 1
            if report["min_reset"] is None or b < report["min_reset"]:
                report["min_reset"] = b
            if b < r:
                report["violations"].append((y[0], a, b))
    report["ok"] = not report["violations"]
    return report


def gen_increasing_seq(length: int, seed: int, max_gap: int = 3,
                       start_max: int = 2) -> Seq:
    """Random strictly increasing sequence with bounded gaps."""
    if length < 1 or max_gap < 1:
        raise ValueError("length and max_gap must be >= 1")
    rng = random.Random(seed)
    vals = [rng.randint(0, start_max)]
    for _ in range(length - 1):
        vals.append(vals[-1] + rng.randint(1, max_gap))
    return tuple(vals)


def sample_dominated(x, count: int, seed: int) -> list[Seq]:
    """Sequences pointwise at most x, same length, mixed densities.

    Each output y satisfies y(i) <= x(i) with y(i) chosen in
    [y(i-1) + 1, x(i)]: either always minimal (packed), always uniform,
    or switching between the two, so both dense and straggling
    sequences appear.
    """
    x = validate_seq(x)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        mode = rng.choice(("min", "uniform", "mixed"))
        vals = []
        lo = 0
        for i, cap in enumerate(x):
            hi = cap
            if hi < lo:
                raise AssertionError("domination is always satisfiable")
            if mode == "min" or (mode == "mixed" and rng.random() < 0.5):
                v = lo
            else:
                v = rng.randint(lo, hi)
            vals.append(v)
            lo = v + 1
        out.append(tuple(vals))
    return out
