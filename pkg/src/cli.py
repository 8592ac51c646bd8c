"""
k3-baselocus command line

Each subcommand validates its arguments through a request model, calls one tool
and prints a JSON report (CSV for sweep) on standard output. Exit codes: 0 on
success, 1 on usage errors (message on standard error), 2 on domain errors
(JSON object with an "error" field on standard output).
"""
import argparse
import logging
import sys
from contextlib import redirect_stdout
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from constants import BASES, EXIT_CODES, MODELS, PROGRAM_NAME
from env import K3BL_LOG_FORMAT, K3BL_LOG_LEVEL
from tools.baselocus import classify, fixed_divisor_search, generic_bpf, mayer_search, sweep_verdicts
from tools.cones import cone_report
from tools.flop import line_degree, pullback_from_X, pullback_from_Xprime, restrict_to_E
from tools.lattice import bbf_pair, bbf_square, divisibility, hl_as_general, hl_square, is_primitive
from tools.riemann_roch import euler_characteristic, section_count
from tools.sections import verify_multiplication_kernel
from util.citations import cite
from util.exceptions import K3LatticeError, UsageError
from util.models import (
    ChiRequest,
    ClassRequest,
    GeneralClass,
    HLClass,
    HLRequest,
    MayerRequest,
    ModuliRequest,
    PairRequest,
    SweepRequest,
    Verdict,
)
from util.reports import create_error_response, create_report, dumps, model_fields, write_csv

# Configure logging
logger = logging.getLogger("k3.baselocus")

Report = Tuple[Dict, str]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _general_class(a: int, b: int, d0: int, n: int, basis: str) -> GeneralClass:
    if basis == "hl":
        return hl_as_general(HLClass(a=a, b=b))
    return GeneralClass(a=a, b=b, d0=d0, n=n)


def _square(args) -> Report:
    request = ClassRequest(a=args.a, b=args.b, d0=args.d0, n=args.n, basis=args.basis)
    c = _general_class(request.a, request.b, request.d0, request.n, request.basis)
    result = {"q": bbf_square(c), "class": c}
    return create_report("square", model_fields(request), result, [cite("hilbert_lattice_decomposition")]), ""


def _pair(args) -> Report:
    request = PairRequest(a1=args.a1, b1=args.b1, a2=args.a2, b2=args.b2, d0=args.d0, n=args.n, basis=args.basis)
    c1 = _general_class(request.a1, request.b1, request.d0, request.n, request.basis)
    c2 = _general_class(request.a2, request.b2, request.d0, request.n, request.basis)
    if args.n2 is not None or args.d0_2 is not None:
        c2 = c2.model_copy(update={
            "n": args.n2 if args.n2 is not None else c2.n,
            "d0": args.d0_2 if args.d0_2 is not None else c2.d0,
        })
    inputs = {**model_fields(request), "n2": c2.n, "d0_2": c2.d0}
    return create_report("pair", inputs, {"pairing": bbf_pair(c1, c2)}, [cite("hilbert_lattice_decomposition")]), ""


def _div(args) -> Report:
    request = ClassRequest(a=args.a, b=args.b, d0=args.d0, n=args.n, basis=args.basis)
    c = _general_class(request.a, request.b, request.d0, request.n, request.basis)
    result = {"div": divisibility(c), "primitive": is_primitive(c)}
    return create_report("div", model_fields(request), result, [cite("divisibility_formula")]), ""


def _chi(args) -> Report:
    request = ChiRequest(q=args.q, n=args.n)
    result = {"chi": euler_characteristic(request.q, request.n)}
    return create_report("chi", model_fields(request), result, [cite("riemann_roch_k3n")]), ""


def _cone(args) -> Report:
    request = HLRequest(a=args.a, b=args.b)
    c = HLClass(a=request.a, b=request.b)
    result = {"q": hl_square(c), **model_fields(cone_report(c))}
    inputs = {"a": request.a, "b": request.b, "basis": "hl"}
    return create_report("cone", inputs, result, [cite("nef_cones")]), ""


def _baselocus(args) -> Report:
    request = HLRequest(a=args.a, b=args.b, model=args.model)
    c = HLClass(a=request.a, b=request.b, model=request.model)
    report = classify(c, request.model)
    result = model_fields(report, exclude={"citations"})
    if report.verdict in (Verdict.FREE, Verdict.PLANE_P2_REDUCED):
        result["sections"] = section_count(c, request.model)
    inputs = {**model_fields(request), "basis": "hl"}
    return create_report("baselocus", inputs, result, report.citations), ""


def _flop(args) -> Report:
    request = HLRequest(a=args.a, b=args.b, model=args.source)
    c = HLClass(a=request.a, b=request.b, model=request.model)
    if request.model == "x":
        pulled, statement = pullback_from_X(c), "flop_restriction_x"
    else:
        pulled, statement = pullback_from_Xprime(c), "flop_restriction_xprime"
    result = {
        "blowup_class": pulled,
        "restriction_to_E": restrict_to_E(pulled),
        "line_degree": line_degree(c),
    }
    citations = [cite("flop_pullback_relation"), cite(statement), cite("exceptional_self_restriction"),
                 cite("flop_constant_half"), cite("line_degree_formula")]
    inputs = {"a": request.a, "b": request.b, "from": request.model, "basis": "hl"}
    return create_report("flop", inputs, result, citations), ""


def _mayer(args) -> Report:
    request = MayerRequest(gram=args.gram, h=args.h, bound=args.bound,
                           fixed_divisor=args.fixed_divisor, nonnegative=args.nonnegative)
    lattice = request.lattice()
    search = fixed_divisor_search if request.fixed_divisor else mayer_search
    found = search(lattice, tuple(request.h), request.bound, nonnegative=request.nonnegative)
    if request.fixed_divisor:
        citations = [cite("fixed_divisor_criterion")]
    else:
        citations = [cite("mayer_criterion")]
        if lattice.rank == 1:
            citations.append(cite("picard_rank_one_free"))
    result = {"q_h": lattice.square(request.h), "decompositions": found, "effectivity_checked": False}
    return create_report("mayer", model_fields(request), result, citations), ""


def _moduli(args) -> Report:
    request = ModuliRequest(d=args.d, m=args.m)
    verdict = generic_bpf(request.d, request.m)
    return create_report("moduli", model_fields(request), model_fields(verdict, exclude={"citations"}),
                         verdict.citations), ""


def _verify_mu(args) -> Report:
    report = verify_multiplication_kernel()
    return create_report("verify-mu", {}, model_fields(report, exclude={"citations"}), report.citations), ""


def _sweep(args) -> Report:
    request = SweepRequest(max=args.max, model=args.model)
    rows = [
        (r.a, r.b, r.verdict != Verdict.NOT_NEF, r.big, r.verdict.value)
        for r in sweep_verdicts(request.max, request.model)
    ]
    return {}, write_csv(("a", "b", "nef", "big", "verdict"), rows)


def _add_class_args(parser: argparse.ArgumentParser, hl_only: bool = False):
    parser.add_argument("-a", type=int, required=True)
    parser.add_argument("-b", type=int, required=True)
    if not hl_only:
        parser.add_argument("--d0", type=int, default=1, help="half of q(lambda) (default 1)")
        parser.add_argument("-n", "--n", type=int, default=2, help="Hilbert scheme parameter (default 2)")
        parser.add_argument("--basis", choices=BASES, default="hdelta",
                            help="hdelta: a*lambda + b*delta; hl: a*H + b*L (needs d0=1, n=2)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROGRAM_NAME, description="Exact arithmetic for base loci on K3^[2]-type")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    square = commands.add_parser("square", help="BBF square q(c)")
    _add_class_args(square)
    square.set_defaults(handler=_square)

    pair = commands.add_parser("pair", help="BBF pairing (c1, c2)")
    for name in ("--a1", "--b1", "--a2", "--b2"):
        pair.add_argument(name, type=int, required=True)
    pair.add_argument("--d0", type=int, default=1)
    pair.add_argument("-n", "--n", type=int, default=2)
    pair.add_argument("--basis", choices=BASES, default="hdelta")
    pair.add_argument("--n2", type=int, default=None, help="n of the second class (default: same)")
    pair.add_argument("--d0-2", dest="d0_2", type=int, default=None, help="d0 of the second class (default: same)")
    pair.set_defaults(handler=_pair)

    div = commands.add_parser("div", help="divisibility and primitivity")
    _add_class_args(div)
    div.set_defaults(handler=_div)

    chi = commands.add_parser("chi", help="Riemann-Roch Euler characteristic")
    chi.add_argument("-q", type=int, required=True)
    chi.add_argument("-n", "--n", type=int, required=True)
    chi.set_defaults(handler=_chi)

    cone = commands.add_parser("cone", help="cone membership, (H, L) coordinates")
    _add_class_args(cone, hl_only=True)
    cone.set_defaults(handler=_cone)

    baselocus = commands.add_parser("baselocus", help="base locus verdict, (H, L) coordinates")
    _add_class_args(baselocus, hl_only=True)
    baselocus.add_argument("--model", choices=MODELS, default="x")
    baselocus.set_defaults(handler=_baselocus)

    flop = commands.add_parser("flop", help="pullback to the common blow-up and restriction to E")
    _add_class_args(flop, hl_only=True)
    flop.add_argument("--from", dest="source", choices=MODELS, default="x")
    flop.set_defaults(handler=_flop)

    mayer = commands.add_parser(
        "mayer", help="numerical Mayer decompositions h = mE + C",
        description="Lists every numerical candidate h = mE + C in the search box, sorted by (m, E). "
                    "Effectivity of E and C is not checked, so several candidates can appear: "
                    "--gram 0,1,-2 --h 2,1 gives (2, (1,0), (0,1)) and (2, (1,1), (0,-1)). "
                    "Add --nonnegative to keep only candidates with nonnegative coordinates, "
                    "which leaves (2, (1,0), (0,1)) for that example.")
    mayer.add_argument("--gram", type=_int_list, required=True, help="upper triangle, e.g. 0,1,-2")
    mayer.add_argument("--h", type=_int_list, required=True, help="e.g. 2,1 (use --h=-1,2 for a leading minus)")
    mayer.add_argument("--bound", type=int, default=5)
    mayer.add_argument("--fixed-divisor", action="store_true", help="search h = mE + F with q(F) < 0 instead")
    mayer.add_argument("--nonnegative", action="store_true", help="only nonnegative coordinates for E and C")
    mayer.set_defaults(handler=_mayer)

    moduli = commands.add_parser("moduli", help="nonemptiness and generic base point freeness of M_{d,m}")
    moduli.add_argument("-d", type=int, required=True)
    moduli.add_argument("-m", type=int, required=True)
    moduli.set_defaults(handler=_moduli)

    verify = commands.add_parser("verify-mu", help="exact check of the multiplication map V x W")
    verify.set_defaults(handler=_verify_mu)

    sweep = commands.add_parser("sweep", help="CSV of verdicts for 0 <= a, b <= max")
    sweep.add_argument("--max", type=int, required=True)
    sweep.add_argument("--model", choices=MODELS, default="x")
    sweep.set_defaults(handler=_sweep)

    return parser


def resolve_log_level(name: str) -> Optional[int]:
    """Numeric level for a logging level name, None if logging does not know it"""
    level = logging.getLevelName(str(name).strip().upper())
    return level if isinstance(level, int) else None


def _configure_logging():
    level = resolve_log_level(K3BL_LOG_LEVEL)
    fmt = K3BL_LOG_FORMAT
    try:
        logging.Formatter(fmt, validate=True)
    except ValueError:
        fmt = None
    logging.basicConfig(level=level if level is not None else logging.WARNING,
                        format=fmt or "%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if level is None:
        logger.warning(f"Unknown K3BL_LOG_LEVEL {K3BL_LOG_LEVEL!r}, using WARNING")
    if fmt is None:
        logger.warning(f"Invalid K3BL_LOG_FORMAT {K3BL_LOG_FORMAT!r}, using the default format")


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """Parse argv, dispatch, print; returns the exit code"""
    out = out or sys.stdout
    err = err or sys.stderr
    _configure_logging()
    try:
        with redirect_stdout(out):
            args = build_parser().parse_args(argv)
    except SystemExit as e:
        # -h/--help printed the help text; every other parse failure raises UsageError
        return EXIT_CODES["OK"] if not e.code else EXIT_CODES["USAGE_ERROR"]
    except UsageError as e:
        err.write(e.message + "\n")
        return EXIT_CODES["USAGE_ERROR"]

    try:
        handler: Callable[..., Report] = args.handler
        report, text = handler(args)
    except ValidationError as e:
        logger.warning(f"Validation error: {str(e)}")
        err.write(f"{PROGRAM_NAME}: invalid arguments: {e}\n")
        return EXIT_CODES["USAGE_ERROR"]
    except K3LatticeError as e:
        logger.warning(f"{e.code}: {e.message}")
        out.write(dumps(create_error_response(e.code, e.message, e.details, command=args.command)) + "\n")
        return EXIT_CODES["DOMAIN_ERROR"]

    out.write(text if text else dumps(report) + "\n")
    return EXIT_CODES["OK"]
