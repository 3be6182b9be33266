"""
bourbakikit command line

Exit codes: 0 when the computation ran and every asserted check passed,
1 when a verification failed (the report is still written), 2 on usage or
input errors.
"""

import argparse
import json
import logging
import sys
from math import comb
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from algebra.polynomial import Polynomial
from bourbaki import (
    IdealGens,
    check_bourbaki_map,
    check_presentation_criterion,
    bourbaki_number,
    cycle_module_data,
    extraction_details,
    height_ge_two,
    taylor_presentation,
    verify_certificate
)
from bourbaki.search import generic_bourbaki_search
from catalog import (
    multigraded_exhaustive_search,
    multigraded_obstruction,
    n6_z3_bad_configuration,
    n6_z3_explicit,
    z2,
    z_nminus2,
    z_top
)
from catalog.multigraded import CONCLUSION_CONFIRMS
from config import settings
from core.exceptions import BourbakiKitError, InputFormatError
from koszul.complex import cycle_rank, differential
from linalg.matrix import PolyMatrix
from rees import INCONCLUSIVE, canonical_generators, interior_reduction_check, normality_check

from .config import RunConfig

logger = logging.getLogger(__name__)

Outcome = Tuple[Dict[str, Any], bool]


def _read(path: Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e.strerror}")


def _load_matrix(path: Path) -> PolyMatrix:
    return PolyMatrix.from_json(_read(path))


def _load_gens(path: Path, n: Optional[int]) -> IdealGens:
    """A JSON list of polynomial objects, or of strings when --n is given"""
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise InputFormatError(f"malformed JSON: {e.msg}", position=f"line {e.lineno} column {e.colno}")
    if isinstance(data, dict) and "gens" in data:
        data = data["gens"]
    if not isinstance(data, list):
        raise InputFormatError("generator file must hold a list", position="$")
    gens = []
    for k, item in enumerate(data):
        if isinstance(item, str):
            if n is None:
                raise InputFormatError("string generators need --n", position=f"$[{k}]")
            gens.append(Polynomial.parse(item, n))
        else:
            gens.append(Polynomial.from_dict(item, f"$[{k}]"))
    return IdealGens(gens)


def run_koszul_diff(config: RunConfig) -> Outcome:
    d = differential(config.n, config.k)
    payload = d.to_dict()
    ok = True
    if config.k < config.n:
        composes = (d.matrix @ differential(config.n, config.k + 1).matrix).is_zero()
        payload["composes_to_zero"] = composes
        ok = composes
    return payload, ok


def run_catalog(config: RunConfig) -> Outcome:
    name = config.command.split("-", 1)[1]
    if name == "n6z3-bad":
        certificate = n6_z3_bad_configuration()
        x2x4x6 = Polynomial.monomial(6, [0, 1, 0, 1, 0, 1])
        ok = not certificate.verdict and x2x4x6.divides(certificate.gcd_witness)
        return {"name": name, "certificate": certificate.to_dict()}, ok
    if name == "ztop":
        bundle = z_top(config.n, config.i, config.j)
    elif name == "zn2":
        bundle = z_nminus2(config.n)
    elif name == "z2":
        bundle = z2(config.n)
    else:
        bundle = n6_z3_explicit()
    return bundle.to_dict(), bundle.all_checks_pass


def run_check_map(config: RunConfig) -> Outcome:
    matrix = _load_matrix(config.matrix)
    size = matrix.cols if config.size is None else config.size
    certificate = check_bourbaki_map(matrix, size)
    return certificate.to_dict(), certificate.verdict


def run_check_presentation(config: RunConfig) -> Outcome:
    certificate = check_presentation_criterion(_load_matrix(config.matrix), config.beta0, config.r)
    return certificate.to_dict(), certificate.verdict


def run_extract_ideal(config: RunConfig) -> Outcome:
    if config.gens is not None:
        given = _load_gens(config.gens, config.n)
        extraction = extraction_details(taylor_presentation(given))
        payload = extraction.to_dict()
        payload["matches_input"] = extraction.ideal.same_ideal_generators(given)
        return payload, payload["matches_input"]
    extraction = extraction_details(_load_matrix(config.matrix))
    payload = extraction.to_dict()
    payload["height_ge_two"] = height_ge_two(extraction.ideal)
    return payload, payload["height_ge_two"]


def run_bourbaki_number(config: RunConfig) -> Outcome:
    if config.n is not None and config.i is not None:
        n, i = config.n, config.i
        data = cycle_module_data(n, i)
        m = bourbaki_number(data.k, data.r, data.e1)
        closed_form = i * comb(n - 1, i - 1) - n * comb(n - 2, i - 2) - i
        payload = {"module": data.to_dict(), "bourbaki_number": m, "closed_form": closed_form}
        return payload, m == closed_form
    m = bourbaki_number(config.k, config.r, config.e1)
    return {"k": config.k, "r": config.r, "e1": config.e1, "bourbaki_number": m}, True


def run_obstruction(config: RunConfig) -> Outcome:
    holds = multigraded_obstruction(config.n, config.i)
    payload = {"n": config.n, "i": config.i, "holds": holds, "verdict": "allowed" if holds else "excluded"}
    return payload, True


def run_search_generic(config: RunConfig) -> Outcome:
    n, i = config.n, config.i
    A = differential(n, i).matrix
    result = generic_bourbaki_search(A, A.cols, cycle_rank(n, i), seed=config.seed, max_attempts=config.attempts)
    payload = result.to_dict()
    ok = result.success and verify_certificate(result.certificate)
    payload["reverified"] = ok
    return payload, ok


def run_search_multigraded(config: RunConfig) -> Outcome:
    report = multigraded_exhaustive_search(config.n, config.i, budget=config.budget)
    contradicted = report.complete and report.known_answer is not None and report.conclusion != CONCLUSION_CONFIRMS
    return report.to_dict(), not contradicted and all(report.verified)


def run_rees(config: RunConfig) -> Outcome:
    kind = config.command.split("-", 1)[1]
    if kind == "normality":
        report = normality_check(config.n, config.t_max, config.box)
        return report.to_dict(), report.verdict
    if kind == "canonical":
        report = canonical_generators(config.n, config.t_max, config.box)
        return report.to_dict(), report.classification != INCONCLUSIVE
    report = interior_reduction_check(config.n, config.t_max, config.box)
    return report.to_dict(), report.verdict


HANDLERS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "koszul-diff": run_koszul_diff,
    "catalog-ztop": run_catalog,
    "catalog-zn2": run_catalog,
    "catalog-z2": run_catalog,
    "catalog-n6z3": run_catalog,
    "catalog-n6z3-bad": run_catalog,
    "check-map": run_check_map,
    "check-presentation": run_check_presentation,
    "extract-ideal": run_extract_ideal,
    "bourbaki-number": run_bourbaki_number,
    "obstruction": run_obstruction,
    "search-generic": run_search_generic,
    "search-multigraded": run_search_multigraded,
    "rees-normality": run_rees,
    "rees-canonical": run_rees,
    "rees-reduction": run_rees,
}


def render_text(payload: Dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def render(payload: Dict[str, Any], output_format: str) -> str:
    if output_format == "text":
        return render_text(payload)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def run(config: RunConfig) -> int:
    try:
        with settings.evaluation_seed(config.seed):
            payload, ok = HANDLERS[config.command](config)
    except BourbakiKitError as e:
        logger.error(f"❌ {config.command}: {e.message}")
        print(f"error: {e.message}", file=sys.stderr)
        return 2

    text = render(payload, config.output_format)
    if config.output_path is not None:
        Path(config.output_path).write_text(text)
        logger.info(f"Wrote {config.command} report to {config.output_path}")
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="Number of variables")
    parser.add_argument("--i", type=int, help="Homological index")
    parser.add_argument("--j", type=int, help="Second index")
    parser.add_argument("--k", type=int, help="Exterior degree or grading shift")
    parser.add_argument("--r", type=int, help="Rank")
    parser.add_argument("--e1", type=int, help="Hilbert coefficient e1")
    parser.add_argument("--beta0", type=int, help="Number of presentation generators")
    parser.add_argument("--size", type=int, help="Minor size")
    parser.add_argument("--seed", type=int, default=None, help="Seed for searches and for the random evaluations behind ranks, minors and gcds (default BOURBAKIKIT_EVALUATION_SEED)")
    parser.add_argument("--attempts", type=int, help="Maximum search attempts")
    parser.add_argument("--tmax", dest="t_max", type=int, help="Largest t-degree of the window")
    parser.add_argument("--box", type=int, help="Coordinate bound of the window")
    parser.add_argument("--budget", type=int, help="Leaf budget of the exhaustive search")
    parser.add_argument("--matrix", type=Path, help="Matrix JSON file")
    parser.add_argument("--gens", type=Path, help="Generator JSON file")
    parser.add_argument("--format", dest="output_format", choices=["json", "text"], default="json")
    parser.add_argument("--out", dest="output_path", type=Path, help="Write the report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bourbakikit", description="Bourbaki sequences of Koszul cycles")
    commands = parser.add_subparsers(dest="group", required=True)

    koszul = commands.add_parser("koszul", help="Koszul complex maps")
    koszul_sub = koszul.add_subparsers(dest="action", required=True)
    _add_common(koszul_sub.add_parser("diff", help="Matrix of d_k"))

    catalog = commands.add_parser("catalog", help="Explicit Bourbaki sequences")
    catalog_sub = catalog.add_subparsers(dest="action", required=True)
    for name in ("ztop", "zn2", "z2", "n6z3", "n6z3-bad"):
        _add_common(catalog_sub.add_parser(name))

    for name in (
        "check-map",
        "check-presentation",
        "extract-ideal",
        "bourbaki-number",
        "obstruction",
        "search-generic",
        "search-multigraded",
    ):
        _add_common(commands.add_parser(name))

    rees = commands.add_parser("rees", help="Rees algebra of the Z_{n-2} ideal")
    rees_sub = rees.add_subparsers(dest="action", required=True)
    for name in ("normality", "canonical", "reduction"):
        _add_common(rees_sub.add_parser(name))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT, stream=sys.stderr)
    args = vars(build_parser().parse_args(argv))
    group = args.pop("group")
    action = args.pop("action", None)
    command = f"{group}-{action}" if action else group

    try:
        config = RunConfig(command=command, **args)
    except ValidationError as e:
        messages: List[str] = [err["msg"] for err in e.errors()]
        print(f"error: {'; '.join(messages)}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
