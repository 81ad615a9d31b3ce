"""Seeded random SBEs for property checks and demos."""

from __future__ import annotations

import numpy as np

from .expr import And, Expr, Not, Or, Var, make_group


def random_sbe(rng: np.random.Generator, n: int, p_not: float = 0.3, max_fanout: int = 4) -> Expr:
    """A random singular expression over ``n`` distinct conditions.

    Names are ``c0 .. c{n-1}`` in shuffled order; negations are sprinkled over
    leaves and whole sub-expressions, occasionally doubled.
    """
    if n < 1:
        raise ValueError("n must be positive")
    names = [f"c{i}" for i in rng.permutation(n)]

    def build(chunk: list[str]) -> Expr:
        if len(chunk) == 1:
            node: Expr = Var(chunk[0])
        else:
            k = int(rng.integers(2, min(len(chunk), max_fanout) + 1))
            cuts = np.sort(rng.choice(np.arange(1, len(chunk)), size=k - 1, replace=False))
            pieces = np.split(np.array(chunk, dtype=object), cuts)
            kind = And if rng.random() < 0.5 else Or
            node = make_group(kind, [build(list(p)) for p in pieces])
        while rng.random() < p_not:
            node = Not(node)
        return node

    return build(names)


def random_corpus(count: int, n_min: int, n_max: int, seed: int = 0) -> list[Expr]:
    """``count`` random SBEs with ``n_min <= N <= n_max``, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    sizes = rng.integers(n_min, n_max + 1, size=count)
    return [random_sbe(rng, int(n)) for n in sizes]
