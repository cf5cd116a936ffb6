"""Command-line interface: ``orext <subcommand> [options]``.

Exit codes: 0 success, 1 ``classify`` verdict "not satisfied", 2 input
error, 3 a certificate or invariant failed re-verification.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import __version__
from .checks import run_checks
from .classify import decide_diamond
from .commalg import (
    DerivationSpec,
    MultiDerivation,
    d_ideal_closure,
    d_primitive_witness,
    is_d_simple,
    is_locally_nilpotent_uni,
    lie_datum,
    lnd_check_multi,
)
from .ore import chain_certificate, essentialize, maximality_certificate
from .parse import ParseError, parse_derivation, parse_poly, parse_scalar, parse_skew
from .scalar import scalar_str

SUBCOMMANDS = (
    "classify",
    "analyze-derivation",
    "witness-chain",
    "essentialize",
    "maximality",
    "lie-datum",
    "verify",
)

EXIT_OK, EXIT_NOT_SATISFIED, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class Request:
    subcommand: str
    q: str = "1"
    b: str = "0"
    dx: str = "0"
    derivation: Optional[str] = None
    alpha: Optional[str] = None
    u: Optional[str] = None
    g: Optional[str] = None
    k: int = 5
    degree_bound: int = 8
    iter_bound: int = 32
    seed: int = 0
    format: str = "text"

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise InputError(f"unknown subcommand {self.subcommand!r}")
        for name in ("k", "degree_bound", "iter_bound"):
            if getattr(self, name) < 1:
                raise InputError(f"{name.replace('_', '-')} must be positive")
        if self.format not in ("text", "json"):
            raise InputError("format must be text or json")

    def echo(self) -> dict:
        out = asdict(self)
        out.pop("format")
        return out


@dataclass
class Report:
    command: str
    input: dict
    result: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    tool: str = "orext"
    version: str = __version__

    def to_dict(self) -> dict:
        return asdict(self)


def _spec(req: Request):
    try:
        if req.derivation:
            return parse_derivation(req.derivation)
        return DerivationSpec(parse_scalar(req.q), parse_scalar(req.b), parse_poly(req.dx))
    except ParseError as exc:
        raise InputError(str(exc)) from None
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None


def _uni_spec(req: Request) -> DerivationSpec:
    spec = _spec(req)
    if not isinstance(spec, DerivationSpec):
        raise InputError("this subcommand needs a univariate derivation d(x)=...")
    return spec


def _alpha(req: Request, spec: DerivationSpec):
    if req.alpha is not None:
        return parse_scalar(req.alpha)
    alpha = d_primitive_witness(spec)
    if alpha is None:
        raise InputError("d = 0: no alpha with d(x)(alpha) != 0")
    return alpha


def _certificate(kind: str, spec, data: dict, ok: bool) -> dict:
    return {"type": kind, "spec": str(spec), "data": data, "verification": "pass" if ok else "fail"}


def _chain_entry(spec: DerivationSpec, alpha, k: int) -> dict:
    cert = chain_certificate(spec.dx, alpha, k, spec)
    return _certificate("ChainCertificate", spec, cert.to_dict(), cert.verify())


def _classify(req: Request, rep: Report) -> int:
    spec = _uni_spec(req)
    v = decide_diamond(spec)
    nf = v.normal_form
    rep.result = {
        "q": scalar_str(spec.q),
        "b": scalar_str(spec.b),
        "dx": str(spec.dx),
        "normal_form": nf.kind.value,
        "iso_data": nf.iso.to_dict(),
        "iso_replay": nf.replay(),
        "diamond": v.satisfied,
        "reason": v.reason_text,
        "reason_detail": v.message,
    }
    if not v.satisfied and spec.sigma_is_identity and not spec.dx.is_constant():
        entry = _chain_entry(spec, d_primitive_witness(spec), req.k)
        rep.result["witnesses"] = [entry]
        rep.certificates.append(entry)
    return EXIT_OK if v.satisfied else EXIT_NOT_SATISFIED


def _analyze(req: Request, rep: Report) -> int:
    spec = _spec(req)
    if isinstance(spec, MultiDerivation):
        res = lnd_check_multi(spec, req.iter_bound)
        rep.result = {
            "variables": list(spec.names),
            "images": [str(im) for im in spec.images],
            "lnd": res.kind.value,
            "triangular_order": list(res.order) if res.order else None,
            "max_iterations": res.max_iterations,
            "iter_bound": res.bound,
        }
        return EXIT_OK
    from .classify import sigma_order

    order = sigma_order(spec.q, spec.b)
    out = {"spec": str(spec), "sigma_identity": spec.sigma_is_identity, "sigma_order": order}
    if spec.sigma_is_identity:
        alpha = d_primitive_witness(spec)
        out.update(
            locally_nilpotent=is_locally_nilpotent_uni(spec),
            d_simple=is_d_simple(spec),
            d_primitive_witness=None if alpha is None else scalar_str(alpha),
            dx_ideal_closure=str(d_ideal_closure(spec.dx, spec)) if spec.dx else "0",
        )
    rep.result = out
    return EXIT_OK


def _witness_chain(req: Request, rep: Report) -> int:
    spec = _uni_spec(req)
    entry = _chain_entry(spec, _alpha(req, spec), req.k)
    rep.certificates.append(entry)
    rep.result = {"verified": entry["verification"] == "pass"}
    return EXIT_OK if entry["verification"] == "pass" else EXIT_VERIFY


def _essentialize(req: Request, rep: Report) -> int:
    spec = _uni_spec(req)
    if req.u is None:
        raise InputError("--u is required")
    try:
        u = parse_skew(req.u, spec)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    w = essentialize(u, _alpha(req, spec))
    ok = w.verify()
    rep.certificates.append(_certificate("EssentialWitness", spec, w.to_dict(), ok))
    rep.result = {"verified": ok}
    return EXIT_OK if ok else EXIT_VERIFY


def _maximality(req: Request, rep: Report) -> int:
    spec = _uni_spec(req)
    if req.g is None:
        raise InputError("--g is required")
    try:
        g = parse_skew(req.g, spec)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    cert = maximality_certificate(_alpha(req, spec), g, req.degree_bound)
    if cert is None:
        rep.result = {"found": False, "degree_bound": req.degree_bound}
        return EXIT_OK
    ok = cert.verify()
    rep.certificates.append(_certificate("MaximalityCertificate", spec, cert.to_dict(), ok))
    rep.result = {"found": True, "verified": ok, "degree_bound": req.degree_bound}
    return EXIT_OK if ok else EXIT_VERIFY


def _lie_datum(req: Request, rep: Report) -> int:
    spec = _spec(req)
    ld = lie_datum(spec, req.iter_bound)
    ok = ld.verify()
    data = {
        "v_set": [str(v) for v in ld.v_set],
        "basis_h": [str(v) for v in ld.basis_h],
        "dim_h": ld.dim_h,
        "dim_g": ld.dim_g,
        "nilpotency_class": ld.nilpotency_class,
        "lcs_dims": list(ld.lcs_dims),
        "note": ld.note,
    }
    rep.certificates.append(_certificate("LieDatum", spec, data, ok))
    rep.result = {"dim_h": ld.dim_h, "nilpotency_class": ld.nilpotency_class, "verified": ok}
    return EXIT_OK if ok else EXIT_VERIFY


def _verify(req: Request, rep: Report) -> int:
    results = run_checks(req.seed)
    rep.result = {"seed": req.seed, "checks": results, "all_passed": all(r["passed"] for r in results)}
    return EXIT_OK if rep.result["all_passed"] else EXIT_VERIFY


_DISPATCH = {
    "classify": _classify,
    "analyze-derivation": _analyze,
    "witness-chain": _witness_chain,
    "essentialize": _essentialize,
    "maximality": _maximality,
    "lie-datum": _lie_datum,
    "verify": _verify,
}


def run(req: Request) -> tuple[dict, int]:
    """Execute a request; returns the report dictionary and the exit code."""
    rep = Report(command=req.subcommand, input=req.echo())
    start = time.perf_counter()
    try:
        code = _DISPATCH[req.subcommand](req, rep)
    except InputError as exc:
        rep.result = {"error": str(exc)}
        code = EXIT_INPUT
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        rep.result = {"error": str(exc)}
        code = EXIT_INPUT
    except AssertionError as exc:
        rep.result = {"error": f"internal verification failure: {exc}"}
        code = EXIT_VERIFY
    if any(c["verification"] != "pass" for c in rep.certificates):
        code = EXIT_VERIFY
    rep.timing = {"seconds": round(time.perf_counter() - start, 6)}
    return rep.to_dict(), code


def rerun(report: dict) -> tuple[dict, int]:
    """Re-execute the request echoed in a report."""
    return run(Request(**report["input"]))


def load_schema() -> dict:
    """The JSON schema that every report conforms to."""
    from importlib.resources import files

    return json.loads(files("orext").joinpath("report.schema.json").read_text())


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def _text(report: dict) -> str:
    lines = [f"{report['command']} (orext {report['version']})"]

    def emit(prefix: str, value):
        if isinstance(value, dict):
            for k in value:
                emit(f"{prefix}{k}." if isinstance(value[k], (dict, list)) else f"{prefix}{k}", value[k])
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for i, v in enumerate(value):
                emit(f"{prefix}{i}.", v)
        else:
            lines.append(f"  {prefix.rstrip('.')}: {value}")

    emit("", report["result"])
    for cert in report["certificates"]:
        lines.append(f"certificate {cert['type']}: {cert['verification']}")
        emit("  ", cert["data"])
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", default="1", help="sigma(x) = q*x + b (default 1)")
    common.add_argument("--b", default="0", help="sigma(x) = q*x + b (default 0)")
    common.add_argument("--dx", default="0", help="the value d(x), e.g. 'x^2'")
    common.add_argument("--derivation", help="full derivation, e.g. 'sigma: q=2, b=0; d(x)=x' or 'd(x)=y; d(y)=1'")
    common.add_argument("--alpha", help="point alpha of m = <x - alpha> (default: least integer with d(x)(alpha) != 0)")
    common.add_argument("--k", type=int, default=5, help="chain length")
    common.add_argument("--degree-bound", type=int, default=8, help="cofactor search degree D")
    common.add_argument("--iter-bound", type=int, default=32, help="iteration bound for nilpotency checks")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="orext", description="Exact algebra for Ore extensions K[x][t; sigma, d].")
    parser.add_argument("--version", action="version", version=f"orext {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("classify", parents=[common], help="normal form and diamond verdict")
    sub.add_parser("analyze-derivation", parents=[common], help="local nilpotency, d-simplicity, witnesses")
    sub.add_parser("witness-chain", parents=[common], help="non-Artinian chain certificate")
    p = sub.add_parser("essentialize", parents=[common], help="essential-extension multiplier")
    p.add_argument("--u", required=True, help="skew polynomial in x and t")
    p = sub.add_parser("maximality", parents=[common], help="cofactor modulo S*<x - alpha>")
    p.add_argument("--g", required=True, help="skew polynomial in x and t")
    sub.add_parser("lie-datum", parents=[common], help="nilpotent Lie algebra of a locally nilpotent derivation")
    sub.add_parser("verify", parents=[common], help="run the seeded invariant suite")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    kwargs = {k: v for k, v in vars(ns).items() if k in Request.__dataclass_fields__}
    try:
        req = Request(**kwargs)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report, code = run(req)
    print(dumps(report) if req.format == "json" else _text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
