"""Transformations turning one exact algorithm into another.

Each transform returns a new algorithm; none of them adds a query, so
complexity is preserved.  Inputs are validated against the precondition each
transform needs for the output to stay exact.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Sequence

import numpy as np

from .simulator import QQA, QueryGate, StructuralProperty, check_property, computed_function, verify


def _check_permutation(sigma: Sequence[int], size: int, what: str) -> tuple:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(size)):
        raise ValueError(f"{what} must be a permutation of 0..{size - 1}, got {sigma}")
    return sigma


def invert_outputs(a: QQA) -> QQA:
    """Flip every output's assigned value; the result computes the complement.

    Only valid for exact algorithms: inverting a bounded-error algorithm
    would silently turn success probability p into 1 - p.
    """
    f = computed_function(a)
    if not verify(a, f).exact:
        raise ValueError("output inversion requires an exact algorithm")
    return replace(a, measurement=tuple(1 - v for v in a.measurement))


def permute_outputs(a: QQA, sigma: Sequence[int]) -> QQA:
    """Move the value assigned to output ``i`` to output ``sigma[i]``.

    Requires the certain-outcome discipline: the state before measurement is
    always a single signed basis vector, so any relabeling of output values
    yields an exact algorithm for some (re-derivable) function.
    """
    sigma = _check_permutation(sigma, a.amplitudes, "output permutation")
    if not check_property(a, StructuralProperty.CERTAIN_OUTCOME):
        raise ValueError(
            "output permutation requires all probability on one basis state for every input"
        )
    values = list(a.measurement)
    for i, j in enumerate(sigma):
        values[j] = a.measurement[i]
    return replace(a, measurement=tuple(values))


def permute_variables(a: QQA, sigma: Sequence[int]) -> QQA:
    """Relabel queried variables: every assignment ``k`` becomes ``sigma[k]``.

    The result computes g with g(x_0, ..) = f(x_{sigma[0]}, x_{sigma[1]}, ..).
    """
    sigma = _check_permutation(sigma, a.arity, "variable permutation")
    steps = tuple(
        QueryGate(tuple(None if v is None else sigma[v] for v in step.assignments))
        if isinstance(step, QueryGate)
        else step
        for step in a.steps
    )
    return replace(a, steps=steps)


def permuted_input(input_bits: str, sigma: Sequence[int]) -> str:
    """The input the original algorithm sees when the permuted one reads ``input_bits``."""
    return "".join(input_bits[s] for s in sigma)


def normalize_accepting_sign(a: QQA) -> QQA:
    """Append a sign flip at the accepting output, turning {0, -1} into {0, +1}.

    Requires the accepting amplitude to be 0 or -1 on every input.  The added
    gate is diagonal ±1, so the computed function and query count are
    untouched while the stricter {0, +1} discipline now holds.
    """
    if not check_property(a, StructuralProperty.ACCEPT_MINUS_ONE):
        raise ValueError("sign normalization requires an accepting amplitude in {0, -1}")
    acc = a.accepting_outputs()[0]
    gate = np.eye(a.amplitudes, dtype=complex)
    gate[acc, acc] = -1.0
    return replace(a, steps=a.steps + (gate,))
