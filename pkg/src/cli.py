"""CLI interface for AT-Lab"""

import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click

from src import __version__
from src.circulations.coefficient import census_dp
from src.circulations.enumerator import census_enumerate
from src.config import Config
from src.errors import AtLabError, PreconditionError, ResourceLimitError
from src.expressions.evaluator import eval_expr
from src.expressions.parser import FamilyAtom, Product, parse_expr
from src.graphs.builder import cartesian_product
from src.graphs.models import Graph
from src.graphs.structure import find_hamilton_path
from src.invariants.bounds import bound_borowiecki, bound_delta_sum, bound_list_brooks
from src.invariants.chain import chain_check, compute_invariants
from src.invariants.search import find_bad_assignment
from src.orientations.constructions import orient_thm21, orient_thm24, orient_thm25, orient_thm26
from src.orientations.digraph import orients
from src.orientations.models import Orientation
from src.serialization.graph6 import graph6_encode
from src.serialization.json_codec import census_to_dict, dump_graph, dumps, load_orientation
from src.services.report_manager import REPORT_FORMATS, ReportManager
from src.verification.suites import run_suite

# Setup logging
logging.basicConfig(
    level=Config.LOG_LEVEL,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

INVARIANT_ALIASES = {
    "chi": "chi",
    "col": "col",
    "list": "chi_list",
    "chi_list": "chi_list",
    "paint": "chi_paint",
    "chi_paint": "chi_paint",
    "at": "at",
}


def safe_echo(msg: str, err: bool = False):
    """Echo message with fallback for terminals that cannot encode the status marks"""
    try:
        click.echo(msg, err=err)
    except UnicodeEncodeError:
        click.echo(msg.replace("✓", "[OK]").replace("✗", "[ERR]").replace("□", "x"), err=err)


def _split_product(text: str) -> Tuple[Graph, Graph]:
    expr = parse_expr(text)
    if not isinstance(expr, Product):
        raise PreconditionError(f"'{text}' is not a product G x H")
    return eval_expr(expr.left), eval_expr(expr.right)


def _parse_blocks(blocks: Optional[str]) -> List[List[int]]:
    if not blocks:
        raise PreconditionError("--blocks is required for this orientation, e.g. \"1,2,3;4,5,6\"")
    try:
        return [[int(v) - 1 for v in part.split(",")] for part in blocks.split(";")]
    except ValueError:
        raise PreconditionError(f"malformed --blocks '{blocks}'") from None


def _parse_which(which: str) -> Tuple[List[str], Optional[int]]:
    names, choosable_k = [], None
    for item in (w.strip() for w in which.split(",") if w.strip()):
        if item.startswith("choosable:"):
            try:
                choosable_k = int(item.split(":", 1)[1])
            except ValueError:
                raise click.BadParameter(f"'{item}' needs an integer k", param_hint="--which") from None
        elif item in INVARIANT_ALIASES:
            names.append(INVARIANT_ALIASES[item])
        else:
            raise click.BadParameter(f"unknown invariant '{item}'", param_hint="--which")
    return names, choosable_k


def _parse_value(text: str) -> Any:
    if "," in text:
        return [_parse_value(part) for part in text.split(",")]
    try:
        return int(text)
    except ValueError:
        return text


def _build_orientation(expr: str, orient: str, blocks: Optional[str]) -> Orientation:
    kind, _, argument = orient.partition(":")
    if kind == "thm21":
        try:
            k, n = (int(x) for x in argument.split(","))
        except ValueError:
            raise click.BadParameter("use thm21:k,n", param_hint="--orient") from None
        _, dstar = orient_thm21(k, n)
        if not orients(dstar, eval_expr(parse_expr(expr)), [dstar.annotations.special_arc]):
            raise PreconditionError(f"'{expr}' is not C({2 * k + 1}) x P({n})")
        return dstar
    if kind == "file":
        D = load_orientation(argument)
        G = eval_expr(parse_expr(expr))
        if D.vertex_count != G.vertex_count:
            raise PreconditionError(f"orientation has {D.vertex_count} vertices, graph has {G.vertex_count}")
        return D

    G, H = _split_product(expr)
    if kind == "thm24":
        return orient_thm24(G, H, _hamilton_path(H))
    if kind == "thm25":
        right = parse_expr(expr).right
        if not (isinstance(right, FamilyAtom) and right.family == "P"):
            raise PreconditionError("thm25 needs a product G x P(k)")
        return orient_thm25(G, _parse_blocks(blocks), right.params[0])
    if kind == "thm26":
        return orient_thm26(G, _parse_blocks(blocks), H, _hamilton_path(H))
    raise click.BadParameter(f"unknown orientation '{orient}'", param_hint="--orient")


def _hamilton_path(H: Graph) -> Sequence[int]:
    path = find_hamilton_path(H)
    if path is None:
        raise PreconditionError("second factor has no Hamilton path")
    return path


@click.group()
@click.version_option(version=__version__)
def cli():
    """AT-Lab: Alon-Tarsi numbers and list coloring of Cartesian products"""
    pass


@cli.command()
@click.argument("expr")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the graph to a file")
@click.option("--format", "fmt", type=click.Choice(["json", "graph6"]), default="json", help="Output format")
def graph(expr, out, fmt):
    """Evaluate a graph expression"""
    G = eval_expr(parse_expr(expr))
    if out is None:
        click.echo(graph6_encode(G).decode("ascii") if fmt == "graph6" else dumps(G))
    elif fmt == "graph6":
        with open(out, "wb") as f:
            f.write(graph6_encode(G) + b"\n")
    else:
        dump_graph(G, out)
    if out:
        safe_echo(f"✓ Wrote {G.vertex_count} vertices, {G.edge_count} edges to {out}", err=True)
    return EXIT_OK


@cli.command()
@click.argument("expr")
@click.option("--which", default="chi,col,at", show_default=True,
              help="Comma-separated: chi,col,list,paint,at,choosable:k")
@click.option("--chain", is_flag=True, help="Compute all four chain invariants and check the chain")
@click.option("--seed", type=int, default=None, help="Recorded in the report")
@click.option("--report", "fmt", type=click.Choice(REPORT_FORMATS), default="json", help="Report format")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report to a file")
def invariant(expr, which, chain, seed, fmt, out):
    """Compute coloring invariants of a graph"""
    G = eval_expr(parse_expr(expr))
    if chain:
        result = chain_check(G)
    else:
        names, choosable_k = _parse_which(which)
        result = compute_invariants(G, names, choosable_k)
    report = ReportManager.build("invariant", {"expr": expr, "which": which, "chain": chain}, result, seed)
    ReportManager.write(report, fmt, out)
    return EXIT_OK


@cli.command()
@click.argument("expr")
@click.option("--orient", required=True, help="thm21:k,n | thm24 | thm25 | thm26 | file:PATH")
@click.option("--blocks", help="1-based vertex blocks for thm25/thm26, e.g. \"1,2,3;4,5,6\"")
@click.option("--method", type=click.Choice(["auto", "enumerate", "dp"]), default="auto",
              help="Census engine; auto enumerates when the arc count allows")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report to a file")
def census(expr, orient, blocks, method, out):
    """Circulation census of a constructed orientation"""
    D = _build_orientation(expr, orient, blocks)
    if method == "enumerate" or (method == "auto" and D.arc_count <= Config.ENUMERATION_ARC_LIMIT):
        outputs: Dict[str, Any] = census_to_dict(census_enumerate(D))
    else:
        outputs = {"diff": census_dp(D)}
    report = ReportManager.build("census", {"expr": expr, "orient": orient, "blocks": blocks, "method": method}, outputs)
    ReportManager.write(report, "json", out)
    return EXIT_OK


@cli.command()
@click.argument("suite")
@click.option("--k-max", type=int, help="Largest k in the grid")
@click.option("--n-max", type=int, help="Largest n in the grid")
@click.option("--trials", type=int, help="Random trials (remark suite)")
@click.option("--seed", type=int, help="Seed for randomized suites")
@click.option("--param", "params", multiple=True, help="Extra suite parameter KEY=VALUE (repeatable)")
@click.option("--report", "fmt", type=click.Choice(REPORT_FORMATS), default="json", help="Report format")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report to a file")
def verify(suite, k_max, n_max, trials, seed, params, fmt, out):
    """Run a named verification suite"""
    suite_params: Dict[str, Any] = {}
    for name, value in (("k_max", k_max), ("n_max", n_max), ("trials", trials), ("seed", seed)):
        if value is not None:
            suite_params[name] = value
    for item in params:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"'{item}' is not KEY=VALUE", param_hint="--param")
        suite_params[key.strip().replace("-", "_")] = _parse_value(value.strip())

    result = run_suite(suite, suite_params)
    report = ReportManager.build("verify", {"suite": suite, **suite_params}, result, seed)
    ReportManager.write(report, fmt, out)

    if result.passed:
        safe_echo(f"✓ {suite}: {len(result.cases)} cases, {len(result.skipped)} skipped", err=True)
        return EXIT_OK
    safe_echo(f"✗ {suite}: {len(result.failures)} of {len(result.cases)} cases failed", err=True)
    return EXIT_SUITE_FAILED


@cli.command()
@click.argument("expr_g")
@click.argument("expr_h")
def bounds(expr_g, expr_h):
    """Known list-coloring upper bounds for G□H"""
    G = eval_expr(parse_expr(expr_g))
    H = eval_expr(parse_expr(expr_h))
    outputs: Dict[str, Any] = {
        "delta_sum": bound_delta_sum(G, H),
        "list_brooks": bound_list_brooks(cartesian_product(G, H)),
    }
    try:
        outputs["borowiecki"] = bound_borowiecki(G, H)
    except ResourceLimitError as e:
        logger.warning(f"Borowiecki bound skipped: {e}")
        outputs["borowiecki"] = None
    report = ReportManager.build("bounds", {"g": expr_g, "h": expr_h}, outputs)
    ReportManager.write(report, "json")
    return EXIT_OK


@cli.command("search-bad")
@click.argument("expr")
@click.option("--k", "k", type=int, required=True, help="List size")
@click.option("--budget", type=int, default=2000, show_default=True, help="Local moves over all restarts")
@click.option("--seed", type=int, default=None, help="Search seed (default AT_LAB_SEED)")
@click.option("--threads", type=int, default=None, help="Worker threads (default AT_LAB_THREADS)")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report to a file")
def search_bad(expr, k, budget, seed, threads, out):
    """Look for a k-list assignment with no proper coloring"""
    G = eval_expr(parse_expr(expr))
    seed = Config.DEFAULT_SEED if seed is None else seed
    witness = find_bad_assignment(G, k, budget, seed, threads)
    outputs = {
        "found": witness is not None,
        "verdict": f"not {k}-choosable" if witness is not None else "inconclusive",
        "assignment": None if witness is None else witness.to_dict(),
    }
    report = ReportManager.build("search-bad", {"expr": expr, "k": k, "budget": budget}, outputs, seed)
    ReportManager.write(report, "json", out)
    return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and map the outcome to an exit code"""
    try:
        Config.validate()
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="at-lab", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        safe_echo("✗ Aborted", err=True)
        return EXIT_SUITE_FAILED
    except ResourceLimitError as e:
        safe_echo(f"✗ Resource limit: {e}", err=True)
        return EXIT_RESOURCE
    except (AtLabError, ValueError) as e:
        safe_echo(f"✗ {e}", err=True)
        return EXIT_USAGE
    except OSError as e:
        safe_echo(f"✗ {e}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
