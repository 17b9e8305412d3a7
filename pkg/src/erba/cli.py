import functools
import random
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, NoReturn, Optional

import typer
from rich.console import Console

from .algebra.free_erba import FreeErba
from .algebra.lift import Lift
from .algebra.sampling import random_elements
from .algebra.weight import Weight
from .bootstrap import build_app
from .checks.runner import run_suite
from .companion.solver import companion as solve_companion
from .companion.solver import sweep, verify_relations
from .companion.space import Mode
from .config_loader import ConfigError
from .core.errors import ErbaError
from .core.rational import parse_rational
from .findim.carrier import (
    CAYLEY_OPS,
    AlgebraKind,
    FinDimCarrier,
    cayley_table,
    check_erbo,
    check_erbo_sampled,
    check_extended_postlie,
    check_structure,
    format_vector,
)
from .findim.examples import sl2_example
from .findim.loader import load_carrier, load_lift_target
from .ui.report import (
    carrier_check_lines,
    cayley_lines,
    cayley_rich_table,
    companion_lines,
    suite_lines,
    sweep_table,
)

app = typer.Typer(add_completion=False, help="Free extended Rota-Baxter algebras on bracketed words.")
lie_app = typer.Typer(add_completion=False, help="Finite-dimensional carriers given by structure constants.")
app.add_typer(lie_app, name="lie")

LAMBDA_HELP = "Weight lambda: integer or p/q"
KAPPA_HELP = "Weight kappa: integer or p/q"


def _fail(message: str) -> NoReturn:
    typer.echo(f"[error] {message}", err=True)
    raise typer.Exit(code=2)


@contextmanager
def _errors() -> Iterator[None]:
    """Input, structure, config and file problems exit with code 2."""
    try:
        yield
    except (ErbaError, ConfigError, FileNotFoundError) as e:
        _fail(str(e))


def _boot(ctx: typer.Context, **overrides: Any) -> Dict[str, Any]:
    opts = ctx.obj or {}
    try:
        return build_app(opts.get("config"), log_level=opts.get("log_level"), **overrides)
    except (ErbaError, ConfigError, FileNotFoundError) as e:
        _fail(str(e))


def _weight(lam: str, kappa: str) -> Weight:
    try:
        return Weight(parse_rational(lam), parse_rational(kappa))
    except ErbaError as e:
        _fail(str(e))


def _emit(lines: List[str]) -> None:
    for line in lines:
        typer.echo(line)


def _finish(ok: bool) -> None:
    if not ok:
        raise typer.Exit(code=1)


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", envvar="ERBA_CONFIG", help="YAML config (default: config/default.yaml)"
    ),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="debug | info | warning | error"),
) -> None:
    """
    Exit codes: 0 ok, 1 a mathematical check failed, 2 bad input or files.
    """
    ctx.obj = {"config": config, "log_level": log_level}


@app.command()
def mul(
    ctx: typer.Context,
    expressions: List[str] = typer.Argument(..., help="Two or more expressions, multiplied left to right"),
    lam: str = typer.Option(..., "--lambda", help=LAMBDA_HELP),
    kappa: str = typer.Option(..., "--kappa", help=KAPPA_HELP),
    alphabet: Optional[str] = typer.Option(None, "--alphabet", help="Letters to parse over"),
) -> None:
    """
    Multiply elements of the free algebra.
    """
    if len(expressions) < 2:
        _fail("mul needs at least two expressions")
    weight = _weight(lam, kappa)
    boot = _boot(ctx, alphabet=alphabet)
    with _errors():
        algebra = FreeErba(boot["alphabet"], weight)
        product = functools.reduce(algebra.mul, (algebra.element(e) for e in expressions))
    typer.echo(str(product))


@app.command()
def bracket(
    ctx: typer.Context,
    expression: str = typer.Argument(..., help="Element to apply the operator to"),
    lam: str = typer.Option("0", "--lambda", help=LAMBDA_HELP),
    kappa: str = typer.Option("0", "--kappa", help=KAPPA_HELP),
    alphabet: Optional[str] = typer.Option(None, "--alphabet", help="Letters to parse over"),
) -> None:
    """
    Apply the bracket operator: every word w becomes [w].
    """
    weight = _weight(lam, kappa)
    boot = _boot(ctx, alphabet=alphabet)
    with _errors():
        algebra = FreeErba(boot["alphabet"], weight)
        typer.echo(str(algebra.apply_p(algebra.element(expression))))


@app.command()
def check(
    ctx: typer.Context,
    suite: str = typer.Argument(..., help="assoc, erb, erbal, etd, ed, dendriform, post-lie, pre-lie, ..."),
    lam: str = typer.Option(..., "--lambda", help=LAMBDA_HELP),
    kappa: str = typer.Option(..., "--kappa", help=KAPPA_HELP),
    samples: Optional[int] = typer.Option(None, "--samples"),
    max_depth: Optional[int] = typer.Option(None, "--max-depth"),
    max_breadth: Optional[int] = typer.Option(None, "--max-breadth"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    max_terms: Optional[int] = typer.Option(None, "--max-terms", help="Terms per sampled element"),
) -> None:
    """
    Run an axiom suite on seeded random elements of the free algebra.
    """
    weight = _weight(lam, kappa)
    boot = _boot(ctx, samples=samples, max_depth=max_depth, max_breadth=max_breadth, seed=seed, max_terms=max_terms)
    with _errors():
        result = run_suite(suite, weight, boot["sampling"])
    _emit(suite_lines(result))
    _finish(result.holds)


@app.command()
def companion(
    ctx: typer.Context,
    mode: Mode = typer.Argument(..., help="tri or di"),
    lam: Optional[str] = typer.Option(None, "--lambda", help=LAMBDA_HELP),
    kappa: Optional[str] = typer.Option(None, "--kappa", help=KAPPA_HELP),
    do_sweep: bool = typer.Option(False, "--sweep", help="Run over weights.standard instead of one weight"),
    verify: bool = typer.Option(False, "--verify", help="Replay each relation on random elements"),
    samples: Optional[int] = typer.Option(None, "--samples"),
    seed: Optional[int] = typer.Option(None, "--seed"),
) -> None:
    """
    Compute the companion relation space by exact nullspace and compare it with the known generators.
    """
    boot = _boot(ctx, samples=samples, seed=seed)
    if do_sweep:
        with _errors():
            results = sweep(boot["weights"], (mode,))
        Console().print(sweep_table(results))
        _finish(all(r.matches_reference for r in results))
        return

    if lam is None or kappa is None:
        _fail("--lambda and --kappa are required unless --sweep is given")
    weight = _weight(lam, kappa)
    with _errors():
        result = solve_companion(mode, weight)
    _emit(companion_lines(result))
    ok = result.matches_reference
    if verify:
        settings = boot["sampling"]
        verdict = verify_relations(result.basis, settings)
        replayed = all(verdict.values())
        typer.echo(f"relations hold on {settings.samples} random triples: {'yes' if replayed else 'no'}")
        ok = ok and replayed
    _finish(ok)


def _carrier_checks(carrier: FinDimCarrier, seed: int) -> Dict[str, Optional[bool]]:
    lie = carrier.kind is AlgebraKind.LIE
    checks: Dict[str, Optional[bool]] = {
        "structure constants": check_structure(carrier.structure),
        "operator identity on basis pairs": check_erbo(carrier),
        "operator identity on random vectors": check_erbo_sampled(carrier, seed=seed),
    }
    if lie:
        checks["extended post-Lie identities"] = check_extended_postlie(carrier)
    else:
        checks["operator identity on the commutator algebra"] = check_erbo(carrier.commutator_carrier())
    return checks


@lie_app.command("check")
def lie_check(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Carrier JSON document"),
) -> None:
    """
    Check a carrier's structure constants and operator identity.
    """
    boot = _boot(ctx)
    with _errors():
        carrier = load_carrier(file)
        checks = _carrier_checks(carrier, boot["sampling"].seed)
    _emit(carrier_check_lines(carrier, checks))
    _finish(all(v is not False for v in checks.values()))


@lie_app.command("cayley")
def lie_cayley(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Carrier JSON document"),
    op: str = typer.Option("circle", "--op", help=f"One of: {', '.join(CAYLEY_OPS)}"),
    plain: bool = typer.Option(False, "--plain", help="One 'a op b = ...' line per pair"),
) -> None:
    """
    Print the multiplication table of an operation on basis elements.
    """
    boot = _boot(ctx)
    with _errors():
        carrier = load_carrier(file)
        entries = cayley_table(carrier, op)
    if plain or not boot["cfg"]["logging"].get("rich", True):
        _emit(cayley_lines(carrier, entries, op))
    else:
        Console().print(cayley_rich_table(carrier, entries, op))


@app.command()
def lift(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Carrier JSON document with an 'assignment' object"),
    expressions: Optional[List[str]] = typer.Argument(None, help="Elements to map"),
    samples: Optional[int] = typer.Option(None, "--samples"),
    seed: Optional[int] = typer.Option(None, "--seed"),
) -> None:
    """
    Map free-algebra elements into a carrier and check the homomorphism property on sampled pairs.
    """
    boot = _boot(ctx, samples=samples, seed=seed)
    settings = boot["sampling"]
    with _errors():
        carrier, assignment = load_lift_target(file)
        source = FreeErba("".join(sorted(assignment)), carrier.weight)
        images = Lift(source, carrier, assignment)
        for text in expressions or []:
            typer.echo(f"{text} -> {format_vector(images(source.element(text)), carrier.basis_names)}")

    operator_ok = check_erbo(carrier)
    typer.echo(f"operator identity on the target: {'holds' if operator_ok else 'FAILS'}")
    rng = random.Random(settings.seed)
    with _errors():
        hom_ok = all(
            images.homomorphism_holds(*random_elements(rng, source, settings, 2)) for _ in range(settings.samples)
        )
    typer.echo(f"homomorphism on {settings.samples} random pairs: {'holds' if hom_ok else 'FAILS'}")
    _finish(operator_ok and hom_ok)


@app.command()
def sl2(ctx: typer.Context) -> None:
    """
    The built-in sl(2) carrier of weight (1,1): operator identity, post-Lie identities, circle table.
    """
    boot = _boot(ctx)
    carrier = sl2_example()
    checks = _carrier_checks(carrier, boot["sampling"].seed)
    _emit(carrier_check_lines(carrier, checks))
    _emit(cayley_lines(carrier, cayley_table(carrier, "circle"), "circle"))
    _finish(all(v is not False for v in checks.values()))


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv (default: the process arguments) and return its exit code."""
    try:
        app(args=argv)
    except SystemExit as e:
        if e.code is None or isinstance(e.code, int):
            return e.code or 0
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
