"""Command-line front end.

One subcommand per library operation, JSON payloads in, deterministic JSON
out (stable key order, no floats), so identical argv and seed give byte
identical output.  Diagnostics go to stderr.  Exit codes: 0 success,
2 precondition violation, 3 mathematical failure (repeated residue roots,
singular matrices, non-image spectra), 64 unknown subcommand, 65 malformed
payload.

The report-style subcommands (``mindist``, ``duality-report``,
``serial-dual``) can also render a figure to a file with ``--figure``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import (
    Code,
    annihilator,
    code_from_generators,
    decompose,
    dual_code,
    duality_report,
    min_distance,
)
from .errors import ComputationError, PreconditionError
from .factor import factor_polynomial, primitive_idempotents, splitting_data
from .isometry import build_isomorphism, classify_isometry, constacyclic_witness
from .poly import Polynomial
from .quotient import AmbientSpace
from .rings import GaloisRing
from .serial import (
    BivariateAmbient,
    BivariateSpectrum,
    bivariate_ms,
    bivariate_ms_inverse,
    serial_isometry,
    tensor_idempotents,
)
from .transform import Spectrum, dft_invertible, ms_inverse, ms_transform
from .zmod import IntegersMod


class PayloadError(Exception):
    """Malformed JSON payload or argument structure (exit 65)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from calling sys.exit(2)
        raise PayloadError(message)


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"invalid JSON payload: {exc}") from exc


def parse_ring(text: str):
    data = _json(text)
    if not isinstance(data, dict):
        raise PayloadError("ring spec must be a JSON object")
    if "modulusZ" in data:
        try:
            return IntegersMod(int(data["modulusZ"]))
        except (TypeError, ValueError) as exc:
            raise PayloadError(f"bad composite modulus: {exc}") from exc
    try:
        return GaloisRing.from_dict(data)
    except KeyError as exc:
        raise PayloadError(f"ring spec is missing {exc}") from exc
    except (TypeError,) as exc:
        raise PayloadError(f"bad ring spec: {exc}") from exc


def parse_element(ring, data):
    if isinstance(ring, IntegersMod):
        if not isinstance(data, int):
            raise PayloadError("composite-ring elements are plain integers")
        return ring.element(data)
    if isinstance(data, int):
        return ring.element(data)
    if isinstance(data, list) and all(isinstance(c, int) for c in data):
        if len(data) > ring.m:
            raise PayloadError("element vector longer than m")
        return ring.element(data)
    raise PayloadError("elements are integers or integer lists")


def parse_poly(ring: GaloisRing, text: str) -> Polynomial:
    data = _json(text)
    if not isinstance(data, list):
        raise PayloadError("polynomial payload must be a coefficient list")
    return Polynomial(ring, [parse_element(ring, c) for c in data])


def parse_vector(ambient, text: str):
    data = _json(text)
    if not isinstance(data, list):
        raise PayloadError("element payload must be a coefficient list")
    if len(data) > ambient.dim:
        raise PayloadError("coefficient vector longer than the ambient dimension")
    return ambient.element([parse_element(ambient.ring, c) for c in data])


def parse_generators(ambient, text: str):
    data = _json(text)
    if not isinstance(data, list) or not all(isinstance(g, list) for g in data):
        raise PayloadError("generators payload must be a list of coefficient lists")
    return [ambient.element([parse_element(ambient.ring, c) for c in g]) for g in data]


def _ambient(args) -> AmbientSpace:
    ring = parse_ring(args.ring)
    if isinstance(ring, IntegersMod):
        raise PayloadError("this subcommand needs a Galois-ring spec")
    f = parse_poly(ring, args.f)
    return AmbientSpace(ring, f)


def _bivariate(args) -> BivariateAmbient:
    ring = parse_ring(args.ring)
    if isinstance(ring, IntegersMod):
        raise PayloadError("this subcommand needs a Galois-ring spec")
    return BivariateAmbient(ring, parse_poly(ring, args.f1), parse_poly(ring, args.f2))


def _code(args) -> Code:
    ambient = _ambient(args)
    return code_from_generators(ambient, parse_generators(ambient, args.gens))


def _serial_code(args) -> Code:
    ambient = _bivariate(args)
    return code_from_generators(ambient, parse_generators(ambient, args.gens))


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the JSON-serializable result dict


def _cmd_factor(args):
    ring = parse_ring(args.ring)
    f = parse_poly(ring, args.poly)
    fact = factor_polynomial(f, seed=args.seed)
    out = {
        "ring": ring.to_dict(),
        "poly": f.serialize(),
        "factors": [g.serialize() for g in fact.factors],
        "residue_factors": [g.serialize() for g in fact.residue_factors],
    }
    if args.pretty:
        out["factors_pretty"] = [g.pretty() for g in fact.factors]
    return out


def _cmd_idempotents(args):
    ring = parse_ring(args.ring)
    f = parse_poly(ring, args.poly)
    idem = primitive_idempotents(f, seed=args.seed)
    out = {
        "idempotents": [e.serialize() for e in idem.idempotents],
        "factors": [g.serialize() for g in idem.factorization.factors],
    }
    if args.pretty:
        out["idempotents_pretty"] = [e.pretty() for e in idem.idempotents]
    return out


def _cmd_split(args):
    ring = parse_ring(args.ring)
    f = parse_poly(ring, args.poly)
    split = splitting_data(f, seed=args.seed)
    return {
        "extension": split.extension.to_dict(),
        "generator_image": split.embedding.generator_image.serialize(),
        "roots": [a.serialize() for a in split.roots],
    }


def _cmd_ms(args):
    ambient = _ambient(args)
    g = parse_vector(ambient, args.g)
    split = ambient.splitting(args.seed)
    spec = ms_transform(g, split)
    return {"extension": split.extension.to_dict(), "spectrum": spec.serialize()}


def _cmd_ms_inv(args):
    ambient = _ambient(args)
    split = ambient.splitting(args.seed)
    data = _json(args.spectrum)
    if not isinstance(data, list) or len(data) != ambient.n:
        raise PayloadError("spectrum must be a list of n extension elements")
    values = tuple(parse_element(split.extension, v) for v in data)
    g = ms_inverse(Spectrum(split, values))
    out = {"element": g.serialize()}
    if args.pretty:
        out["element_pretty"] = g.pretty()
    return out


def _cmd_dft_check(args):
    ring = parse_ring(args.ring)
    xi = parse_element(ring, _json(args.xi))
    report = dft_invertible(xi, args.n)
    return {
        "invertible": report.invertible,
        "witness_exponent": report.witness_exponent,
        "witness_value": None if report.witness_value is None else report.witness_value.serialize(),
    }


def _cmd_code(args):
    C = _code(args)
    return {"howell_basis": C.serialize(), "size": C.size}


def _cmd_ann(args):
    A = annihilator(_code(args))
    return {"howell_basis": A.serialize(), "size": A.size}


def _cmd_dual(args):
    D = dual_code(_code(args), args.form, seed=args.seed)
    return {"form": args.form, "howell_basis": D.serialize(), "size": D.size}


def _report_payload(rep):
    names = sorted(rep.duals)
    out = {
        "duals": {name: rep.duals[name].serialize() for name in names},
        "all_equal": rep.all_equal,
        "skipped": list(rep.skipped),
        "pairwise": {f"{a}|{b}": eq for (a, b), eq in sorted(rep.pairwise().items())},
    }
    return out, names


def _render_report_figure(rep, names, path):
    from .plots import duality_grid_figure

    grid = [[rep.duals[a] == rep.duals[b] for b in names] for a in names]
    duality_grid_figure(names, grid, path)


def _cmd_duality_report(args):
    rep = duality_report(_code(args), seed=args.seed)
    out, names = _report_payload(rep)
    if args.figure:
        _render_report_figure(rep, names, args.figure)
        out["figure"] = args.figure
    return out


def _cmd_decompose(args):
    d = decompose(_code(args), seed=args.seed)
    return {
        "components": [{"component": list(c) if isinstance(c, tuple) else c, "conductor": k} for c, k in d.components],
        "free": d.free,
    }


def _cmd_mindist(args):
    C = _code(args)
    report = min_distance(C)
    out = report.serialize()
    out["size"] = C.size
    if args.figure:
        from .plots import weight_distribution_figure

        weight_distribution_figure(report.weight_distribution, args.figure)
        out["figure"] = args.figure
    return out


def _cmd_theta(args):
    ambient = _ambient(args)
    omega = parse_vector(ambient, args.omega)
    witness = build_isomorphism(ambient.f, omega)
    verdict = classify_isometry(ambient.f, omega) if ambient.n >= 2 else None
    out = {
        "h": witness.h.serialize(),
        "det_w": witness.det_W.serialize(),
        "w_matrix": witness.W.serialize(),
        "isometric": verdict.kind == "isometric-with-target" if verdict else True,
    }
    if args.apply is not None:
        image = witness.apply(parse_vector(witness.domain(), args.apply))
        out["image"] = image.serialize()
        if args.pretty:
            out["image_pretty"] = image.pretty()
    if args.pretty:
        out["h_pretty"] = witness.h.pretty()
    return out


def _cmd_isometry_classify(args):
    ambient = _ambient(args)
    omega = parse_vector(ambient, args.omega)
    v = classify_isometry(ambient.f, omega)
    out = {
        "kind": v.kind,
        "target_h": v.target.serialize() if v.target is not None else None,
        "prediction_agrees": v.prediction_agrees,
        "counterexample": v.counterexample.serialize() if v.counterexample is not None else None,
    }
    if v.monomial_witness is not None:
        out["monomial_permutation"] = list(v.monomial_witness[0])
        out["monomial_units"] = [u.serialize() for u in v.monomial_witness[1]]
    return out


def _cmd_constacyclic_equiv(args):
    ring = parse_ring(args.ring)
    lam = parse_element(ring, _json(getattr(args, "lambda")))
    eq = constacyclic_witness(ring, lam, args.n)
    if eq is None:
        return {"found": False}
    return {
        "found": True,
        "root": eq.root.serialize(),
        "exponent": eq.exponent,
        "target": eq.target.serialize(),
        "h": eq.witness.h.serialize(),
    }


def _cmd_serial_ms(args):
    ambient = _bivariate(args)
    if (args.k is None) == (args.spectrum is None):
        raise PayloadError("give exactly one of --k (forward) or --spectrum (inverse)")
    if args.k is not None:
        k = parse_vector(ambient, args.k)
        spec = bivariate_ms(k, seed=args.seed)
        return {"spectrum": spec.serialize()}
    s1, _ = ambient.splittings(args.seed)
    data = _json(args.spectrum)
    if not isinstance(data, list) or len(data) != ambient.dim:
        raise PayloadError("spectrum must be a list of n1*n2 extension elements")
    values = tuple(parse_element(s1.extension, v) for v in data)
    k = bivariate_ms_inverse(BivariateSpectrum(ambient, args.seed, values))
    return {"element": k.serialize()}


def _cmd_serial_idem(args):
    ambient = _bivariate(args)
    grid = tensor_idempotents(ambient, seed=args.seed)
    return {
        "idempotents": [
            {"component": list(label), "element": e.serialize(), "primitive": prim} for label, e, prim in grid
        ]
    }


def _cmd_serial_dual(args):
    rep = duality_report(_serial_code(args), seed=args.seed)
    out, names = _report_payload(rep)
    if args.figure:
        _render_report_figure(rep, names, args.figure)
        out["figure"] = args.figure
    return out


def _cmd_serial_iso(args):
    ring = parse_ring(args.ring)
    if isinstance(ring, IntegersMod):
        raise PayloadError("serial isometries need a Galois-ring spec")
    f1 = parse_poly(ring, args.f1)
    f2 = parse_poly(ring, args.f2)

    def omega(text):
        data = _json(text)
        if not isinstance(data, dict) or "coeff" not in data or "exp" not in data:
            raise PayloadError('omega payload must be {"coeff": ..., "exp": ...}')
        return parse_element(ring, data["coeff"]), int(data["exp"])

    w = serial_isometry(f1, f2, omega(args.omega1), omega(args.omega2))
    out = {
        "case": w.case,
        "target1": w.target1.serialize(),
        "target2": w.target2.serialize(),
        "isometric": True,
    }
    if args.pretty:
        out["target1_pretty"] = w.target1.pretty("x1")
        out["target2_pretty"] = w.target2.pretty("x2")
    return out


HANDLERS = {
    "factor": _cmd_factor,
    "idempotents": _cmd_idempotents,
    "split": _cmd_split,
    "ms": _cmd_ms,
    "ms-inv": _cmd_ms_inv,
    "dft-check": _cmd_dft_check,
    "code": _cmd_code,
    "ann": _cmd_ann,
    "dual": _cmd_dual,
    "duality-report": _cmd_duality_report,
    "decompose": _cmd_decompose,
    "mindist": _cmd_mindist,
    "theta": _cmd_theta,
    "isometry-classify": _cmd_isometry_classify,
    "constacyclic-equiv": _cmd_constacyclic_equiv,
    "serial-ms": _cmd_serial_ms,
    "serial-idem": _cmd_serial_idem,
    "serial-dual": _cmd_serial_dual,
    "serial-iso": _cmd_serial_iso,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="polycodes", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command")

    def add(name, **flags):
        p = sub.add_parser(name)
        p.add_argument("--ring", required=True, help="JSON ring spec")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--pretty", action="store_true")
        p.add_argument("--output", default=None, help="write JSON here instead of stdout")
        for flag, kwargs in flags.items():
            p.add_argument(flag, **kwargs)
        return p

    add("factor", **{"--poly": dict(required=True)})
    add("idempotents", **{"--poly": dict(required=True)})
    add("split", **{"--poly": dict(required=True)})
    add("ms", **{"--f": dict(required=True), "--g": dict(required=True)})
    add("ms-inv", **{"--f": dict(required=True), "--spectrum": dict(required=True)})
    add("dft-check", **{"--xi": dict(required=True), "--n": dict(required=True, type=int)})
    add("code", **{"--f": dict(required=True), "--gens": dict(required=True)})
    add("ann", **{"--f": dict(required=True), "--gens": dict(required=True)})
    add(
        "dual",
        **{
            "--f": dict(required=True),
            "--gens": dict(required=True),
            "--form": dict(required=True, choices=["star", "trace", "zero"]),
        },
    )
    add(
        "duality-report",
        **{"--f": dict(required=True), "--gens": dict(required=True), "--figure": dict(default=None)},
    )
    add("decompose", **{"--f": dict(required=True), "--gens": dict(required=True)})
    add("mindist", **{"--f": dict(required=True), "--gens": dict(required=True), "--figure": dict(default=None)})
    add("theta", **{"--f": dict(required=True), "--omega": dict(required=True), "--apply": dict(default=None)})
    add("isometry-classify", **{"--f": dict(required=True), "--omega": dict(required=True)})
    add("constacyclic-equiv", **{"--lambda": dict(required=True), "--n": dict(required=True, type=int)})
    add(
        "serial-ms",
        **{
            "--f1": dict(required=True),
            "--f2": dict(required=True),
            "--k": dict(default=None),
            "--spectrum": dict(default=None),
        },
    )
    add("serial-idem", **{"--f1": dict(required=True), "--f2": dict(required=True)})
    add(
        "serial-dual",
        **{"--f1": dict(required=True), "--f2": dict(required=True), "--gens": dict(required=True), "--figure": dict(default=None)},
    )
    add(
        "serial-iso",
        **{
            "--f1": dict(required=True),
            "--f2": dict(required=True),
            "--omega1": dict(required=True),
            "--omega2": dict(required=True),
        },
    )
    return parser


def run(argv: list[str]) -> int:
    """Execute one subcommand; returns the process exit status."""
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return 0
    if argv[0] not in HANDLERS:
        print(f"unknown subcommand: {argv[0]}", file=sys.stderr)
        return 64
    try:
        args = build_parser().parse_args(argv)
    except PayloadError as exc:
        print(f"malformed invocation: {exc}", file=sys.stderr)
        return 65
    try:
        result = HANDLERS[args.command](args)
    except PayloadError as exc:
        print(f"malformed payload: {exc}", file=sys.stderr)
        return 65
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(result, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
