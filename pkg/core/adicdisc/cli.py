# -*- coding: utf-8 -*-
"""
Batch front end: one JSON request in, one JSON response out.

A request is ``{"command": ..., "prime": p, "params": {...}}`` with optional
``"seed"`` and ``"schema_version": 1``. The response is
``{"ok": true, "result": ...}`` or ``{"ok": false, "error": {"code", "message"}}``;
the process exits with 0, 1 (domain error) or 2 (unparsable request).
"""
import json
import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from traitlets import Bool, Enum, List as ListTrait, Unicode
from traitlets.config import Application

from adicdisc import codec
from adicdisc.config import AdicConfig, get_config
from adicdisc.errors import AdicError, ParseError, SchemaError
from adicdisc.huber import (
    BoundedVerdict,
    check_continuity,
    default_sample_set,
    is_power_bounded,
    is_topologically_nilpotent,
    localize,
    nullstellensatz_witness,
)
from adicdisc.ordgroup import render
from adicdisc.points import classify
from adicdisc.rings import pair_of_definition
from adicdisc.tate import INFINITE_SLOPE, INFINITE_VALUATION, newton_polygon, root_valuations
from adicdisc.topology import (
    SpvPoint,
    closure_points,
    evaluate_at,
    horizontal_specialize,
    member,
    sampling_specialization_check,
    specializes,
    vertical_generization,
)
from adicdisc.utils import check_prime, print_, print_red, render_fraction
from adicdisc.version import __version__

logger = logging.getLogger(__name__)


SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_PARSE_ERROR = 2

Json = Any
Params = Dict[str, Any]


# kind -> (parse(obj, prime), serialize(value))
PARAM_KINDS: Dict[str, Tuple[Callable[[Json, int], Any], Callable[[Any], Json]]] = {
    "series": (codec.parse_series, codec.series_to_json),
    "series_list": (
        lambda obj, p: codec.parse_series_list(obj, p, "series list"),
        lambda fs: [codec.series_to_json(f) for f in fs],
    ),
    "point": (codec.parse_point, codec.point_to_json),
    "subset": (codec.parse_subset, codec.subset_to_json),
    "ring": (codec.parse_ring, codec.ring_to_json),
    "convex": (lambda obj, p: codec.parse_convex_subgroup(obj), lambda delta: delta.value),
    "int": (lambda obj, p: codec.expect_int(obj, "parameter"), lambda n: n),
}


@dataclass(frozen=True)
class Command:
    name: str
    handler: Callable[[Params, "Request"], Json]
    required: Dict[str, str]
    optional: Dict[str, str] = field(default_factory=dict)

    def parse_params(self, obj: Json, prime: int) -> Params:
        codec.expect_object(obj, f"params of {self.name}", self.required, self.optional)
        kinds = {**self.required, **self.optional}
        return {key: PARAM_KINDS[kinds[key]][0](value, prime) for key, value in obj.items()}

    def serialize_params(self, params: Params) -> Json:
        kinds = {**self.required, **self.optional}
        return {key: PARAM_KINDS[kinds[key]][1](value) for key, value in params.items()}


COMMANDS: Dict[str, Command] = {}


def command(name: str, required: Dict[str, str], optional: Optional[Dict[str, str]] = None):
    def decorator(handler: Callable[[Params, "Request"], Json]):
        COMMANDS[name] = Command(name, handler, required, optional or {})
        return handler

    return decorator


@dataclass(frozen=True)
class Request:
    command: str
    prime: int
    params: Params
    seed: Optional[int] = None
    schema_version: Optional[int] = None


@dataclass(frozen=True)
class Response:
    ok: bool
    result: Json = None
    error: Optional[Exception] = None

    @classmethod
    def success(cls, result: Json) -> "Response":
        return cls(True, result)

    @classmethod
    def failure(cls, error: Exception) -> "Response":
        return cls(False, error=error)

    @property
    def exit_code(self) -> int:
        if self.ok:
            return EXIT_OK
        if isinstance(self.error, (ParseError, SchemaError)):
            return EXIT_PARSE_ERROR
        return EXIT_DOMAIN_ERROR

    def to_dict(self) -> Json:
        if self.ok:
            return {"ok": True, "result": self.result}
        if isinstance(self.error, AdicError):
            error = self.error.to_dict()
        else:
            error = {"code": type(self.error).__name__, "message": str(self.error)}
        return {"ok": False, "error": error}

    def to_json(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_dict(), sort_keys=True, indent=2)
        return canonical_json(self.to_dict())


def canonical_json(obj: Json) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_request(text: str) -> Request:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    codec.expect_object(obj, "request", ["command"], ["prime", "params", "seed", "schema_version"])
    name = obj["command"]
    if name not in COMMANDS:
        raise SchemaError(f"unknown command {name!r}")
    schema_version = obj.get("schema_version")
    if schema_version is not None and codec.expect_int(schema_version, "schema_version") != (
        SCHEMA_VERSION
    ):
        raise SchemaError(f"unsupported schema_version {schema_version}")
    if "prime" in obj:
        prime = check_prime(codec.expect_int(obj["prime"], "prime"))
    else:
        prime = get_config().default_prime
    seed = obj.get("seed")
    if seed is not None:
        codec.expect_int(seed, "seed")
    params = COMMANDS[name].parse_params(obj.get("params", {}), prime)
    return Request(name, prime, params, seed, schema_version)


def serialize_request(request: Request) -> str:
    obj: Json = {
        "command": request.command,
        "prime": request.prime,
        "params": COMMANDS[request.command].serialize_params(request.params),
    }
    if request.seed is not None:
        obj["seed"] = request.seed
    if request.schema_version is not None:
        obj["schema_version"] = request.schema_version
    return canonical_json(obj)


@contextmanager
def _seeded(seed: Optional[int]) -> Iterator[None]:
    config = get_config()
    if seed is None:
        yield
        return
    saved = config.seed
    config.seed = seed
    try:
        yield
    finally:
        config.seed = saved


def run_command(request: Request) -> Response:
    logger.debug("dispatching %s over p=%d", request.command, request.prime)
    try:
        with _seeded(request.seed):
            result = COMMANDS[request.command].handler(request.params, request)
    except (AdicError, ValueError, ArithmeticError) as e:
        return Response.failure(e)
    return Response.success(result)


def handle_text(text: str) -> Response:
    try:
        request = parse_request(text)
    except (AdicError, ValueError, ArithmeticError) as e:
        return Response.failure(e)
    return run_command(request)


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------


def _catalog(x):
    if isinstance(x, SpvPoint):
        raise SchemaError("this command takes a catalog point, not a truncation")
    return x


def _verdict_to_json(verdict: BoundedVerdict) -> Json:
    return {
        "status": verdict.status.value,
        "certificate": codec.value_to_json(verdict.certificate),
        "witness": None if verdict.witness is None else codec.point_to_json(verdict.witness),
    }


def _valuation_to_json(v) -> str:
    return "inf" if v == INFINITE_VALUATION else render_fraction(v)


@command("eval", {"f": "series", "x": "point"})
def _eval(params: Params, request: Request) -> Json:
    return render(evaluate_at(params["f"], params["x"]))


@command("classify", {"x": "point"})
def _classify(params: Params, request: Request) -> Json:
    return codec.report_to_json(classify(_catalog(params["x"])))


@command("member", {"x": "point", "subset": "subset"})
def _member(params: Params, request: Request) -> Json:
    return member(params["x"], params["subset"])


@command("closure", {"x": "point"}, {"k": "int"})
def _closure(params: Params, request: Request) -> Json:
    points = closure_points(_catalog(params["x"]), params.get("k"))
    return [codec.point_to_json(y) for y in points]


@command("specializes", {"x": "point", "y": "point"}, {"trials": "int"})
def _specializes(params: Params, request: Request) -> Json:
    x, y = _catalog(params["x"]), _catalog(params["y"])
    report = sampling_specialization_check(x, y, params.get("trials"))
    counterexample = None
    if report.counterexample is not None:
        g, s = report.counterexample
        counterexample = {"g": codec.series_to_json(g), "s": codec.series_to_json(s)}
    return {
        "specializes": specializes(x, y),
        "sampling": {
            "consistent": report.consistent,
            "trials": report.trials,
            "counterexample": counterexample,
        },
    }


@command("vertical", {"y": "point"})
def _vertical(params: Params, request: Request) -> Json:
    return codec.point_to_json(vertical_generization(_catalog(params["y"])))


@command("horizontal", {"x": "point", "delta": "convex"})
def _horizontal(params: Params, request: Request) -> Json:
    out = horizontal_specialize(params["x"], params["delta"])
    return {
        "point": codec.point_to_json(out.point),
        "is_valuation": out.is_valuation,
        "continuous": out.continuous,
    }


@command("localize", {"ring": "ring", "numerators": "series_list", "denominator": "series"})
def _localize(params: Params, request: Request) -> Json:
    ring = localize(params["ring"], params["numerators"], params["denominator"])
    ring_of_definition, ideal = pair_of_definition(ring)
    return {
        "ring": codec.ring_to_json(ring),
        "ring_of_definition": ring_of_definition,
        "ideal_of_definition": ideal,
        "norm_q": None if ring.norm_q is None else render_fraction(ring.norm_q),
    }


@command("power-bounded", {"f": "series", "ring": "ring"})
def _power_bounded(params: Params, request: Request) -> Json:
    return _verdict_to_json(is_power_bounded(params["f"], params["ring"]))


@command("top-nilpotent", {"f": "series", "ring": "ring"})
def _top_nilpotent(params: Params, request: Request) -> Json:
    return _verdict_to_json(is_topologically_nilpotent(params["f"], params["ring"]))


@command("continuity", {"x": "point"}, {"samples": "series_list", "count": "int"})
def _continuity(params: Params, request: Request) -> Json:
    samples = params.get("samples")
    if samples is None:
        samples = default_sample_set(request.prime, params.get("count", 50))
    report = check_continuity(params["x"], samples)
    return {
        "cofinal": report.cofinal,
        "bound_holds": report.bound_holds,
        "verdict": report.verdict.value,
        "analytic": report.analytic,
    }


@command("nullstellensatz", {"f": "series"})
def _nullstellensatz(params: Params, request: Request) -> Json:
    witness = nullstellensatz_witness(params["f"])
    if witness is None:
        return None
    x, value = witness
    return {"point": codec.point_to_json(x), "value": render(value)}


@command("newton", {"f": "series"})
def _newton(params: Params, request: Request) -> Json:
    f = params["f"]
    return {
        "sides": [
            {"slope": "inf" if slope == INFINITE_SLOPE else render_fraction(slope), "length": n}
            for slope, n in newton_polygon(f)
        ],
        "root_valuations": [
            {"valuation": _valuation_to_json(v), "multiplicity": n}
            for v, n in root_valuations(f)
        ],
    }


# -----------------------------------------------------------------------------
# Application
# -----------------------------------------------------------------------------


class AdicApp(Application):
    name = "adicdisc"
    description = (
        "Exact computations on the adic closed unit disc over a JSON request/response protocol."
    )
    version = __version__

    output_format = Enum(
        ["json", "pretty"], default_value="json", help="Canonical one-line JSON or indented JSON."
    ).tag(config=True)

    batch = Bool(False, help="Read one JSON request per line of stdin.").tag(config=True)

    requests = ListTrait(Unicode(), help="Requests given on the command line.")

    aliases = {
        "prime": "AdicConfig.default_prime",
        "seed": "AdicConfig.seed",
        "trials": "AdicConfig.sampling_trials",
        "depth": "AdicConfig.openness_search_depth",
        "format": "AdicApp.output_format",
        "log-level": "Application.log_level",
    }

    flags = {
        "batch": ({"AdicApp": {"batch": True}}, "Read one JSON request per line of stdin."),
    }

    classes = [AdicConfig]

    def initialize(self, argv: Optional[List[str]] = None) -> None:
        super().initialize(argv)
        self.requests = list(self.extra_args)
        get_config().update_config(self.config)

    def _emit(self, response: Response) -> None:
        pretty = self.output_format == "pretty"
        text = response.to_json(pretty=pretty)
        if pretty and not response.ok:
            print_red(text)
        else:
            print_(text)

    def _inputs(self) -> List[str]:
        if self.requests:
            return self.requests
        if self.batch:
            return [line for line in sys.stdin if line.strip()]
        return [sys.stdin.read()]

    def start(self) -> None:
        exit_code = EXIT_OK
        for text in self._inputs():
            response = handle_text(text)
            self.log.debug("request exited with %d", response.exit_code)
            self._emit(response)
            exit_code = max(exit_code, response.exit_code)
        self.exit(exit_code)


main = AdicApp.launch_instance
