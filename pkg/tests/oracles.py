"""Independent reference implementations used to cross-check the grader."""

from __future__ import annotations

import random


def render(v) -> str:
    """Canonical text of a scalar, written independently of the grader."""
    if v is None:
        return "NULL\x00"
    if isinstance(v, bool):
        v = int(v)
    if isinstance(v, int):
        return "N" + str(v)
    if isinstance(v, float):
        return "N" + ("%.9g" % v)
    return "T" + str(v)


def brute_force_equal(gold_rows, pred_rows, ordered: bool) -> bool:
    """Sort-and-compare: each row becomes its sorted canonical values; unordered results are sorted too."""
    a = [sorted(render(v) for v in row) for row in gold_rows]
    b = [sorted(render(v) for v in row) for row in pred_rows]
    if not ordered:
        a, b = sorted(a), sorted(b)
    return a == b


_POOL = [None, 0, 1, 2, -3, 1.0, 2.5, 0.1 + 0.2, 0.3, "a", "b", "A", "1", "", "NULL"]


def random_result_pair(rng: random.Random) -> tuple[list[list], list[list]]:
    """Two small results that are equal, permuted, or slightly different."""
    width = rng.randint(1, 3)
    rows = [[rng.choice(_POOL) for _ in range(width)] for _ in range(rng.randint(0, 4))]
    other = [list(r) for r in rows]
    op = rng.choice(["same", "shuffle_rows", "shuffle_cols", "change", "drop", "dup"])
    if op == "shuffle_rows":
        rng.shuffle(other)
    elif op == "shuffle_cols":
        perm = rng.sample(range(width), width)
        other = [[r[i] for i in perm] for r in other]
    elif op == "change" and other:
        r = rng.randrange(len(other))
        other[r][rng.randrange(width)] = rng.choice(_POOL)
    elif op == "drop" and other:
        other.pop(rng.randrange(len(other)))
    elif op == "dup" and other:
        other.append(list(rng.choice(other)))
    return rows, other
