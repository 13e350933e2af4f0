"""Command-line front end: verify, trace, transform, construct, catalog, sensitivity.

Output is deterministic for a given invocation: no timestamps, fixed
iteration order, and amplitudes rendered as exact fractions over sqrt(2)
whenever they are within tolerance of one (0, ±1/2, ±1/sqrt2, ±1/(2 sqrt2),
±1), else as 6-decimal floats.  Exit status is 0 only if every requested
check passed.
"""
from __future__ import annotations

import json
import math
import sys

import click

from . import catalog as catalog_module
from . import constructors
from .algorithms import constant_one_algorithm, equality3_algorithm, pair_equality4_algorithm
from .boolfun import TruthTable, all_inputs, named_function, sensitivity, table_from_csv
from .serialize import load, save
from .simulator import QQA, QueryGate, SimulationTrace, run, trace as run_trace, verify
from .transforms import invert_outputs, permute_outputs, permute_variables

_SQRT2 = math.sqrt(2.0)
_NAMED_AMPLITUDES = (
    (0.0, "0"),
    (1.0, "1"),
    (0.5, "1/2"),
    (1.0 / _SQRT2, "1/√2"),
    (1.0 / (2.0 * _SQRT2), "1/(2√2)"),
)


def format_amplitude(value: complex, tol: float = 1e-9) -> str:
    """Exact-looking rendering for the small closed set of amplitudes seen here."""
    if abs(value.imag) > tol:
        return f"{value.real:.6f}{value.imag:+.6f}i"
    x = value.real
    for magnitude, label in _NAMED_AMPLITUDES:
        if abs(x - magnitude) <= tol:
            return label
        if magnitude and abs(x + magnitude) <= tol:
            return "-" + label
    return f"{x:.6f}"


def format_state(state, tol: float = 1e-9) -> str:
    return "(" + ", ".join(format_amplitude(z, tol) for z in state) + ")"


def _step_labels(a: QQA) -> list:
    labels = []
    unitaries = queries = 0
    for step in a.steps:
        if isinstance(step, QueryGate):
            queries += 1
            labels.append(f"after Q{queries}")
        else:
            unitaries += 1
            labels.append(f"after U{unitaries}")
    if labels:
        labels[-1] = "final"
    return labels


def render_trace(t: SimulationTrace, measurement, tol: float = 1e-9) -> str:
    """One table row: input, state after each step, and the outcome."""
    probs = {0: 0.0, 1: 0.0}
    for amplitude, value in zip(t.states[-1], measurement):
        probs[value] += abs(amplitude) ** 2
    if probs[1] >= 1.0 - tol:
        outcome = "1"
    elif probs[0] >= 1.0 - tol:
        outcome = "0"
    else:
        outcome = f"P(0)={probs[0]:.6f} P(1)={probs[1]:.6f}"
    cells = [t.input or "(empty)"]
    cells.extend(format_state(s, tol) for s in t.states[1:])
    cells.append(outcome)
    return " | ".join(cells)


def _load_algorithm(spec: str) -> QQA:
    if spec.startswith("builtin:"):
        name, _, param = spec[len("builtin:"):].partition(":")
        if name == "equality3":
            return equality3_algorithm()
        if name == "pair_equality4":
            return pair_equality4_algorithm()
        if name == "constant1":
            try:
                arity = int(param) if param else 1
                return constant_one_algorithm(num_amplitudes=1, arity=arity, queries=0)
            except ValueError as error:
                raise click.ClickException(f"{spec}: {error}")
        raise click.ClickException(
            f"unknown builtin {name!r} (use equality3, pair_equality4 or constant1[:n])"
        )
    try:
        return load(spec)
    except FileNotFoundError:
        raise click.ClickException(f"no such algorithm file: {spec}")
    except (ValueError, json.JSONDecodeError) as error:
        raise click.ClickException(f"{spec}: {error}")


def _load_function(spec: str) -> TruthTable:
    name, _, param = spec.partition(":")
    if name in ("equality3", "pair_equality4"):
        return named_function(name)
    if name in ("constant0", "constant1", "majority", "majority_even"):
        if not param:
            raise click.ClickException(f"{name} needs an arity, e.g. {name}:3")
        try:
            return named_function(name, int(param))
        except ValueError as error:
            raise click.ClickException(f"{spec}: {error}")
    try:
        return table_from_csv(spec)
    except FileNotFoundError:
        raise click.ClickException(f"no such function (not a known name or CSV file): {spec}")
    except ValueError as error:
        raise click.ClickException(f"{spec}: {error}")


def _parse_sigma(text: str, size: int, what: str) -> list:
    try:
        sigma = [int(part) - 1 for part in text.split(",")]
    except ValueError:
        raise click.ClickException(f"--sigma must be comma-separated integers, got {text!r}")
    if sorted(sigma) != list(range(size)):
        raise click.ClickException(f"--sigma must be a permutation of 1..{size} ({what})")
    return sigma


@click.group()
@click.option("--tolerance", type=float, default=1e-9, show_default=True,
              help="Numerical tolerance for probability and exactness checks.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True, help="Output format.")
@click.pass_context
def main(ctx, tolerance, fmt):
    """Simulate, verify, transform, and compose quantum query algorithms."""
    if tolerance <= 0:
        raise click.ClickException("--tolerance must be positive")
    ctx.obj = {"tol": tolerance, "fmt": fmt}


@main.command("verify")
@click.option("--algorithm", "algorithm_spec", required=True,
              help="Algorithm file or builtin:<name>.")
@click.option("--function", "function_spec", required=True,
              help="Function name (e.g. equality3, constant1:3) or CSV file.")
@click.option("--expect-p", type=float, default=None,
              help="Fail unless the worst-case success probability matches.")
@click.option("--expect-exact", is_flag=True, help="Fail unless the algorithm is exact.")
@click.pass_obj
def verify_command(obj, algorithm_spec, function_spec, expect_p, expect_exact):
    """Exhaustively verify an algorithm against a Boolean function."""
    a = _load_algorithm(algorithm_spec)
    f = _load_function(function_spec)
    if a.arity != f.arity:
        raise click.ClickException(
            f"arity mismatch: algorithm reads {a.arity} variables, function has {f.arity}"
        )
    report = verify(a, f, tol=obj["tol"])
    failures = []
    if report.worst_case_p <= 0.5 + obj["tol"]:
        failures.append(
            f"worst-case success probability {report.worst_case_p:.6f} is not above 1/2"
        )
    if expect_exact and not report.exact:
        failures.append(f"expected exact, got worst-case p = {report.worst_case_p:.6f}")
    if expect_p is not None and abs(report.worst_case_p - expect_p) > obj["tol"]:
        failures.append(f"expected p = {expect_p:.6f}, got {report.worst_case_p:.6f}")

    if obj["fmt"] == "json":
        click.echo(json.dumps({
            "exact": report.exact,
            "worst_case_p": report.worst_case_p,
            "queries": report.queries,
            "per_input": report.per_input,
            "failures": failures,
        }, indent=1))
    else:
        kind = "exact" if report.exact else "bounded-error"
        click.echo(f"{kind}, p = {report.worst_case_p:.6f}, queries = {report.queries}")
        for failure in failures:
            click.echo(f"FAIL: {failure}")
    if failures:
        sys.exit(1)


@main.command("trace")
@click.option("--algorithm", "algorithm_spec", required=True)
@click.option("--input", "input_bits", default=None, help="Input bit string, e.g. 110.")
@click.option("--all-inputs", "every_input", is_flag=True, help="Trace every input.")
@click.pass_obj
def trace_command(obj, algorithm_spec, input_bits, every_input):
    """Print the state after every step for one input (or all of them)."""
    a = _load_algorithm(algorithm_spec)
    if every_input:
        inputs = list(all_inputs(a.arity))
    elif input_bits is not None:
        inputs = [input_bits]
    else:
        raise click.ClickException("give --input BITS or --all-inputs")

    if obj["fmt"] == "json":
        rows = []
        for bits in inputs:
            t = _traced(a, bits)
            _, probs = run(a, bits)
            rows.append({
                "input": bits,
                "states": [[[z.real, z.imag] for z in state] for state in t.states],
                "probabilities": {str(k): v for k, v in probs.items()},
            })
        click.echo(json.dumps(rows, indent=1))
        return
    header = " | ".join(["input", *_step_labels(a), "result"])
    click.echo(header)
    for bits in inputs:
        click.echo(render_trace(_traced(a, bits), a.measurement, obj["tol"]))


def _traced(a: QQA, bits: str) -> SimulationTrace:
    try:
        return run_trace(a, bits)
    except ValueError as error:
        raise click.ClickException(str(error))


@main.command("transform")
@click.option("--algorithm", "algorithm_spec", required=True)
@click.option("--method", required=True,
              type=click.Choice(["invert", "permute-outputs", "permute-vars"]))
@click.option("--sigma", default=None, help="1-based permutation, comma separated.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.pass_obj
def transform_command(obj, algorithm_spec, method, sigma, out_path):
    """Apply one transformation and write the resulting algorithm."""
    a = _load_algorithm(algorithm_spec)
    try:
        if method == "invert":
            result = invert_outputs(a)
        elif method == "permute-outputs":
            if sigma is None:
                raise click.ClickException("permute-outputs needs --sigma")
            result = permute_outputs(a, _parse_sigma(sigma, a.amplitudes, "outputs"))
        else:
            if sigma is None:
                raise click.ClickException("permute-vars needs --sigma")
            result = permute_variables(a, _parse_sigma(sigma, a.arity, "variables"))
    except ValueError as error:
        raise click.ClickException(str(error))
    save(result, out_path, provenance=f"{method}({algorithm_spec})")
    if obj["fmt"] == "json":
        click.echo(json.dumps({"method": method, "out": out_path}))
    else:
        click.echo(f"{method} applied; algorithm written to {out_path}")


_CONSTRUCT_METHODS = {
    "and": (2, "and_construct"),
    "or": (2, "or_construct"),
    "maj-even4": (4, "majority_even4_construct"),
    "maj3": (3, "majority3_construct"),
}


@main.command("construct")
@click.option("--method", required=True, type=click.Choice(sorted(_CONSTRUCT_METHODS)))
@click.option("--inputs", "inputs_spec", required=True,
              help="Comma-separated algorithm files or builtin:<name> entries.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.pass_obj
def construct_command(obj, method, inputs_spec, out_path):
    """Combine exact algorithms into a bounded-error one and write it."""
    count, function_name = _CONSTRUCT_METHODS[method]
    specs = [part.strip() for part in inputs_spec.split(",") if part.strip()]
    if len(specs) != count:
        raise click.ClickException(f"{method} needs exactly {count} inputs, got {len(specs)}")
    algorithms = [_load_algorithm(spec) for spec in specs]
    try:
        result = getattr(constructors, function_name)(*algorithms)
    except ValueError as error:
        raise click.ClickException(str(error))
    report = verify(result.algorithm, result.target, tol=obj["tol"])
    save(result.algorithm, out_path, provenance=f"{method}({inputs_spec})")
    ok = report.worst_case_p >= result.guaranteed_p - obj["tol"]
    if obj["fmt"] == "json":
        click.echo(json.dumps({
            "method": method,
            "out": out_path,
            "guaranteed_p": result.guaranteed_p,
            "worst_case_p": report.worst_case_p,
            "queries": report.queries,
            "target_hex": result.target.as_hex(),
        }, indent=1))
    else:
        click.echo(
            f"{method}: guaranteed p = {result.guaranteed_p:.6f}, "
            f"verified worst-case p = {report.worst_case_p:.6f}, "
            f"queries = {report.queries}; written to {out_path}"
        )
    if not ok:
        click.echo("FAIL: verified probability fell below the guarantee")
        sys.exit(1)


@main.command("catalog")
@click.option("--set", "set_name", default="all",
              type=click.Choice([*catalog_module.SET_NAMES, "all"]), show_default=True)
@click.option("--export", "export_path", default=None, type=click.Path(dir_okay=False),
              help="Also write every entry to this CSV file.")
@click.pass_obj
def catalog_command(obj, set_name, export_path):
    """Regenerate the catalogued function families and print their summary."""
    if set_name == "all":
        sets = catalog_module.generate_all()
    else:
        sets = {set_name: catalog_module.generate_set(set_name)}
    summary = catalog_module.catalog_summary(sets)
    if export_path is not None:
        catalog_module.export_csv(sets, export_path)
    if obj["fmt"] == "json":
        click.echo(json.dumps({
            "sets": [{
                "name": row.name,
                "size": row.size,
                "arities": list(row.arities),
                "queries": row.queries,
                "probability": row.probability,
                "applications": row.candidates,
            } for row in summary.rows],
            "distinct_functions": summary.distinct_functions,
            "total_applications": summary.total_applications,
        }, indent=1))
        return
    click.echo(f"{'set':<12}{'size':>6}  {'arguments':<10}{'queries':>8}  probability")
    for row in summary.rows:
        arities = ",".join(str(n) for n in row.arities)
        click.echo(
            f"{row.name:<12}{row.size:>6}  {arities:<10}{row.queries:>8}  {row.probability_label}"
        )
    click.echo(f"distinct functions: {summary.distinct_functions}")
    click.echo(f"Total {summary.total_applications}")


@main.command("sensitivity")
@click.option("--function", "function_spec", required=True)
@click.pass_obj
def sensitivity_command(obj, function_spec):
    """Exhaustive-scan sensitivity of a Boolean function."""
    f = _load_function(function_spec)
    result = sensitivity(f)
    if obj["fmt"] == "json":
        click.echo(json.dumps({
            "sensitivity": result.value,
            "witness": result.witness_input,
            "arity": f.arity,
        }))
    else:
        click.echo(f"sensitivity = {result.value} (witness input {result.witness_input})")


if __name__ == "__main__":
    main()
