"""Catalog generation: every function reachable from the built-in algorithms.

The two base algorithms are run through the full closure of transformations
(every variable permutation x every single-accepting output placement x
optional inversion) and deduplicated by truth table; the resulting exact
sets feed the and/or/majority combiners.

Eligibility for a combiner is decided by the structural property checks, not
hard-coded lists: the accept-plus pool (equality3 family) has 4 algorithms
and the signed-unit pool has 4 + 12, which is what makes the constructed set
sizes 16, 256, 256 and 64.  Per-set sizes count distinct functions after
deduplication; a summary's grand total counts method applications, i.e.
generated algorithm instances before deduplication.
"""
from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algorithms import equality3_algorithm, pair_equality4_algorithm
from .boolfun import TruthTable
from .constructors import (
    and_construct,
    majority3_construct,
    majority_even4_construct,
    or_construct,
)
from .simulator import QQA, StructuralProperty, check_property, computed_function, verify
from .transforms import invert_outputs, permute_outputs, permute_variables

SET_NAMES = ("qfunc3", "qfunc4", "and", "or", "maj_even4", "majority3")

_PROBABILITY = {
    "qfunc3": 1.0,
    "qfunc4": 1.0,
    "and": 3 / 4,
    "or": 5 / 8,
    "maj_even4": 9 / 16,
    "majority3": 9 / 16,
}


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """One catalogued function with an algorithm computing it."""

    function: TruthTable
    algorithm: QQA
    provenance: str


@dataclass(frozen=True, eq=False)
class FunctionSet:
    """A deduplicated family of functions sharing query count and probability floor.

    ``candidates`` counts the method applications that produced the family,
    i.e. the number of generated algorithms before deduplication.
    """

    name: str
    entries: tuple
    arities: tuple
    queries: int
    guaranteed_p: float
    candidates: int


@dataclass(frozen=True)
class SetSummary:
    name: str
    size: int
    arities: tuple
    queries: int
    probability: float
    candidates: int

    @property
    def probability_label(self) -> str:
        return str(Fraction(self.probability).limit_denominator(64))


@dataclass(frozen=True)
class CatalogSummary:
    """Per-set sizes plus the two grand totals (distinct functions, applications)."""

    rows: tuple
    distinct_functions: int
    total_applications: int


def _transposition(size: int, i: int, j: int) -> list:
    sigma = list(range(size))
    sigma[i], sigma[j] = sigma[j], sigma[i]
    return sigma


def _transform_variants(base_name: str, base: QQA) -> list:
    """Closure of a base algorithm under the three transformations.

    One candidate per (variable permutation, accepting placement, inversion)
    triple, in that nesting order, so regeneration is deterministic.
    """
    variants = []
    for sigma in itertools.permutations(range(base.arity)):
        permuted = permute_variables(base, sigma)
        for acc in range(base.amplitudes):
            placed = permute_outputs(permuted, _transposition(base.amplitudes, 0, acc))
            for inverted in (False, True):
                algorithm = invert_outputs(placed) if inverted else placed
                tag = "{}[acc={},vars={}{}]".format(
                    base_name,
                    acc + 1,
                    "".join(str(v + 1) for v in sigma),
                    ",inv" if inverted else "",
                )
                variants.append(CatalogEntry(computed_function(algorithm), algorithm, tag))
    return variants


def _dedup(entries: Iterable[CatalogEntry]) -> tuple:
    seen = {}
    for entry in entries:
        key = (entry.function.arity, entry.function.bits)
        if key not in seen:
            seen[key] = entry
    return tuple(seen.values())


def _verified_set(name: str, candidates: Sequence[CatalogEntry]) -> FunctionSet:
    entries = _dedup(candidates)
    floor = _PROBABILITY[name]
    queries = {entry.algorithm.query_count for entry in entries}
    if len(queries) != 1:
        raise RuntimeError(f"{name}: inconsistent query counts {queries}")
    for entry in entries:
        report = verify(entry.algorithm, entry.function)
        if report.worst_case_p < floor - 1e-9:
            raise RuntimeError(
                f"{name}: entry {entry.provenance} verified at {report.worst_case_p}, "
                f"below the {floor} floor"
            )
    arities = tuple(sorted({entry.function.arity for entry in entries}))
    return FunctionSet(name, entries, arities, queries.pop(), floor, len(candidates))


def _mixing_pool(entries: Iterable[CatalogEntry]) -> list:
    """Entries whose accepting amplitude stays in {0, +1} or {0, -1}."""
    return [
        e
        for e in entries
        if check_property(e.algorithm, StructuralProperty.ACCEPT_PLUS_ONE)
        or check_property(e.algorithm, StructuralProperty.ACCEPT_MINUS_ONE)
    ]


def _routing_pool(entries: Iterable[CatalogEntry]) -> list:
    """Entries with a certain outcome and one accepting amplitude in {-1, 0, +1}."""
    return [
        e
        for e in entries
        if check_property(e.algorithm, StructuralProperty.ACCEPT_SIGNED_UNIT)
    ]


def generate_set(kind: str) -> FunctionSet:
    """Generate one of the six catalogued families; see ``SET_NAMES``."""
    if kind == "qfunc3":
        return _verified_set(kind, _transform_variants("equality3", equality3_algorithm()))
    if kind == "qfunc4":
        return _verified_set(
            kind, _transform_variants("pair_equality4", pair_equality4_algorithm())
        )

    if kind == "and":
        pool = _mixing_pool(generate_set("qfunc3").entries)
        candidates = [
            CatalogEntry(r.target, r.algorithm, f"and({e1.provenance},{e2.provenance})")
            for e1 in pool
            for e2 in pool
            for r in (and_construct(e1.algorithm, e2.algorithm),)
        ]
        return _verified_set(kind, candidates)

    if kind == "or":
        pool = _routing_pool(generate_set("qfunc3").entries) + _routing_pool(
            generate_set("qfunc4").entries
        )
        candidates = [
            CatalogEntry(r.target, r.algorithm, f"or({e1.provenance},{e2.provenance})")
            for e1 in pool
            for e2 in pool
            for r in (or_construct(e1.algorithm, e2.algorithm),)
        ]
        return _verified_set(kind, candidates)

    if kind == "maj_even4":
        pool = _mixing_pool(generate_set("qfunc3").entries)
        candidates = [
            CatalogEntry(
                r.target,
                r.algorithm,
                "maj_even4({})".format(",".join(e.provenance for e in picks)),
            )
            for picks in itertools.product(pool, repeat=4)
            for r in (majority_even4_construct(*(e.algorithm for e in picks)),)
        ]
        return _verified_set(kind, candidates)

    if kind == "majority3":
        pool = _mixing_pool(generate_set("qfunc3").entries)
        candidates = [
            CatalogEntry(
                r.target,
                r.algorithm,
                "majority3({})".format(",".join(e.provenance for e in picks)),
            )
            for picks in itertools.product(pool, repeat=3)
            for r in (majority3_construct(*(e.algorithm for e in picks)),)
        ]
        return _verified_set(kind, candidates)

    raise ValueError(f"unknown set {kind!r} (expected one of {SET_NAMES})")


def generate_all() -> dict:
    """All six families, keyed by name, in ``SET_NAMES`` order."""
    return {name: generate_set(name) for name in SET_NAMES}


def catalog_summary(sets: dict | None = None) -> CatalogSummary:
    """Size/arity/query/probability rows for the given families (default: all)."""
    if sets is None:
        sets = generate_all()
    rows = tuple(
        SetSummary(
            s.name, len(s.entries), s.arities, s.queries, s.guaranteed_p, s.candidates
        )
        for s in sets.values()
    )
    return CatalogSummary(
        rows,
        distinct_functions=sum(r.size for r in rows),
        total_applications=sum(r.candidates for r in rows),
    )


def export_csv(sets: dict, destination) -> None:
    """Write ``set,arity,queries,probability,truth_table_hex,provenance`` rows."""
    if hasattr(destination, "write"):
        _write_csv(sets, destination)
    else:
        with open(destination, "w", newline="") as handle:
            _write_csv(sets, handle)


def _write_csv(sets: dict, handle) -> None:
    writer = csv.writer(handle)
    writer.writerow(["set", "arity", "queries", "probability", "truth_table_hex", "provenance"])
    for function_set in sets.values():
        label = str(Fraction(function_set.guaranteed_p).limit_denominator(64))
        for entry in function_set.entries:
            writer.writerow(
                [
                    function_set.name,
                    entry.function.arity,
                    function_set.queries,
                    label,
                    entry.function.as_hex(),
                    entry.provenance,
                ]
            )
