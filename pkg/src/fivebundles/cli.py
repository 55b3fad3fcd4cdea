"""Command-line frontend.

Every verb builds a report dictionary ``{command, inputs, results,
citations, timing}``.  ``--json`` prints it as JSON; otherwise the same
results are rendered as ``key: value`` lines.  Exit codes: 0 success,
2 validation failure, 3 computation error, 64 usage error, 65 malformed
input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .bundles import (
    RULES,
    BundleTriple,
    check_condition_A,
    classification_applicability,
    classify_rank5_spinnable,
    enumerate_quaternionic,
    gamma_image_check,
    parallelizability_verdict,
    pi4_group,
)
from .cohomology import (
    Cochain,
    Ring,
    as_ring,
    betti_numbers,
    class_from_json,
    cohomology_basis,
    cohomology_group,
    coordinates,
    homology,
    zero_cochain,
)
from .complex_store import SimplicialComplex, fixture, fixture_names, parse_complex, serialize_complex
from .errors import ComputationError, FiveBundlesError, ParseError, ValidationError
from .framed_loops import FramedLoop, example_s5_divisor, framed_loop_class, loop_to_so5
from .manifold import is_orientable, is_spin, kervaire_semichar, wu_classes
from .steenrod import cup

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION, EXIT_USAGE, EXIT_DATA = 0, 2, 3, 64, 65

VERBS = (
    "fixtures",
    "homology",
    "cohomology",
    "wu",
    "sw",
    "spin-check",
    "kervaire",
    "conditions",
    "gamma-check",
    "pi4",
    "enumerate-bundles",
    "classify",
    "verdict",
    "kappa-loop",
)


class UsageError(Exception):
    """Unknown verb or bad command-line syntax."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- inputs


def complex_hash(K: SimplicialComplex) -> str:
    """SHA-256 of the canonical facet list (names and comments excluded)."""
    body = "\n".join(line for line in serialize_complex(K).splitlines() if not line.startswith("#"))
    return hashlib.sha256(body.encode()).hexdigest()


def load_complex(source: str) -> SimplicialComplex:
    """``fixtures:<name>`` or a path to an ``.scx`` file."""
    if source.startswith("fixtures:"):
        try:
            return fixture(source.split(":", 1)[1])
        except KeyError as exc:
            raise ValidationError(str(exc.args[0])) from None
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_complex(text)


_TERM = re.compile(r"^([+-]?\d*)\*?(g\d+|x\^?2?|x)$")


def parse_class(token: str, K: SimplicialComplex, ring, degree: int) -> Cochain:
    """Parse a class flag.

    Accepted forms: a linear combination of basis generators ``g1``, ``g2``
    (1-based, e.g. ``3*g1+g2``); ``0``; the aliases ``x`` for the first
    degree-2 generator and ``x2``/``x^2`` for its cup square; or ``@file``
    holding a JSON cochain.
    """
    ring = as_ring(ring)
    token = token.strip()
    if token.startswith("@"):
        try:
            doc = Path(token[1:]).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {token[1:]}: {exc.strerror}") from None
        c = class_from_json(K, doc)
        if c.ring is not ring or c.degree != degree:
            raise ValidationError(f"class file holds degree {c.degree} over {c.ring}, expected {degree} over {ring}")
        return c
    total = zero_cochain(K, degree, ring)
    if token in ("0", ""):
        return total
    for raw in re.findall(r"[+-]?[^+-]+", token.replace(" ", "")):
        m = _TERM.match(raw)
        if not m:
            raise ParseError(f"cannot parse class term {raw!r}")
        coef_text, name = m.groups()
        coef = int(coef_text) if coef_text not in ("", "+", "-") else (-1 if coef_text == "-" else 1)
        total = total + coef * _named_class(name, K, ring, degree)
    return total.as_class()


def _named_class(name: str, K: SimplicialComplex, ring: Ring, degree: int) -> Cochain:
    if name.startswith("g"):
        gens = cohomology_basis(K, ring, degree).generators
        i = int(name[1:])
        if not 1 <= i <= len(gens):
            raise ValidationError(f"generator {name} out of range; H^{degree} over {ring} has {len(gens)}")
        return gens[i - 1]
    x_gens = cohomology_basis(K, ring, 2).generators
    if not x_gens:
        raise ValidationError(f"alias x needs a nonzero H^2 over {ring}")
    x = x_gens[0]
    value = x if name == "x" else cup(x, x)
    if value.degree != degree:
        raise ValidationError(f"alias {name} has degree {value.degree}, expected {degree}")
    return value


# ---------------------------------------------------------------- verbs


def _coords(c: Cochain) -> list[int]:
    return [int(v) for v in coordinates(c)]


def _group_text(g) -> str:
    return str(g)


def cmd_fixtures(args) -> tuple[dict, dict, list[str]]:
    if args.name:
        K = fixture(args.name)
        text = serialize_complex(K)
        if args.out:
            Path(args.out).write_text(text)
        return {"fixture": args.name}, {"scx": text if not args.out else None, "written": args.out, "f_vector": list(K.f_vector())}, []
    rows = {}
    for name in fixture_names():
        if "(" in name:
            rows[name] = "parametrised"
            continue
        rows[name] = "available"
    return {}, {"fixtures": rows}, []


def cmd_homology(args):
    K = load_complex(args.complex)
    degrees = [args.degree] if args.degree is not None else list(range(K.dim + 1))
    ring = as_ring(args.ring)
    groups = {str(k): homology(K, ring, k).to_dict() for k in degrees}
    res = {"ring": str(ring), "groups": groups, "table": [groups[str(k)]["text"] for k in degrees]}
    return _inputs(args, K), res, []


def cmd_cohomology(args):
    K = load_complex(args.complex)
    ring = as_ring(args.ring)
    degrees = [args.degree] if args.degree is not None else list(range(K.dim + 1))
    groups, bases = {}, {}
    for k in degrees:
        groups[str(k)] = cohomology_group(K, ring, k).to_dict()
        if ring is not Ring.Q and (ring is Ring.Z2 or args.basis):
            B = cohomology_basis(K, ring, k)
            bases[str(k)] = [
                {"name": f"g{i + 1}", "order": o, "support": len(g.support())}
                for i, (g, o) in enumerate(zip(B.generators, B.orders))
            ]
    res = {"ring": str(ring), "groups": groups, "table": [groups[str(k)]["text"] for k in degrees]}
    if bases:
        res["basis"] = bases
    return _inputs(args, K), res, []


def cmd_wu(args):
    K = load_complex(args.complex)
    wu = wu_classes(K)
    return _inputs(args, K), {"v1": _coords(wu.v1), "v2": _coords(wu.v2)}, ["Wu classes solve <v_k x, [M]> = <Sq^k x, [M]> mod 2"]


def cmd_sw(args):
    K = load_complex(args.complex)
    w = wu_classes(K).w
    return _inputs(args, K), {f"w{i + 1}": _coords(c) for i, c in enumerate(w)}, ["w = Sq(v) (Wu's formula)"]


def cmd_spin(args):
    K = load_complex(args.complex)
    return _inputs(args, K), {"orientable": is_orientable(K), "spin": is_spin(K)}, ["spin iff w1 = w2 = 0"]


def cmd_kervaire(args):
    K = load_complex(args.complex)
    return (
        _inputs(args, K),
        {"k": kervaire_semichar(K), "betti_Z2": list(betti_numbers(K, Ring.Z2)), "betti_Q": list(betti_numbers(K, Ring.Q))},
        ["k(M) = sum of even-degree Betti numbers mod 2, over Z2 and over Q"],
    )


def cmd_conditions(args):
    if args.torsion is not None:
        torsion = [int(t) for t in args.torsion.split(",") if t.strip()]
        return {"torsion": torsion}, {"condition_A": check_condition_A(torsion)}, [RULES["condition_A"]]
    if not args.complex:
        raise UsageError("conditions needs a complex or --torsion")
    K = load_complex(args.complex)
    res = classification_applicability(K).to_dict()
    return _inputs(args, K), res, [RULES["condition_A"], RULES["condition_B_integral"], RULES["condition_B_mod2"], RULES["injectivity"]]


def cmd_gamma(args):
    K = load_complex(args.complex)
    t = BundleTriple(
        parse_class(args.a, K, Ring.Z2, 2),
        parse_class(args.b, K, Ring.Z2, 4),
        parse_class(args.c, K, Ring.Z, 4),
    )
    ok = gamma_image_check(K, t)
    inputs = _inputs(args, K) | {"a": args.a, "b": args.b, "c": args.c}
    return inputs, {"realizable": ok}, [RULES["gamma_image"]]


def cmd_pi4(args):
    K = load_complex(args.complex)
    p = pi4_group(K)
    cite = [RULES["pi4_sequence"]]
    cite.append({"spin": RULES["pi4_split_spin"], "trivial_kernel": RULES["pi4_split_trivial"]}.get(p.split_reason.value, RULES["pi4_split_image"]))
    return _inputs(args, K), p.to_dict(), cite


def cmd_enumerate(args):
    K = load_complex(args.complex)
    return _inputs(args, K), enumerate_quaternionic(K).to_dict(), [RULES["quaternionic"]]


def cmd_classify(args):
    K = load_complex(args.complex)
    return _inputs(args, K), classify_rank5_spinnable(K).to_dict(), [RULES["rank5_W1"], RULES["rank5_W2"]]


def cmd_verdict(args):
    K = load_complex(args.complex)
    v = parallelizability_verdict(K, args.stably_parallelizable)
    inputs = _inputs(args, K) | {"stably_parallelizable": args.stably_parallelizable}
    return inputs, v.to_dict(), [v.rule]


def cmd_kappa_loop(args):
    if args.example:
        fl = example_s5_divisor(args.samples, framing=args.framing)
        inputs = {"example": args.example, "samples": args.samples, "framing": args.framing}
    elif args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.file}: {exc.strerror}") from None
        fl = FramedLoop.from_json(text)
        inputs = {"file": args.file, "sha256": hashlib.sha256(text.encode()).hexdigest()}
    else:
        raise UsageError("kappa-loop needs a file or --example s5")
    loop = loop_to_so5(fl)
    return inputs, {"kappa": int(framed_loop_class(fl)), "samples": len(fl), "lift_steps": len(loop)}, [
        "the class of a loop in SO(5) is read off from the endpoint of its lift to Sp(2)"
    ]


def _inputs(args, K: SimplicialComplex) -> dict:
    return {"complex": args.complex, "sha256": complex_hash(K)}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fivebundles", description="Vector bundle invariants of triangulated 5-manifolds.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def verb(name: str, fn: Callable, help: str, complex_arg: bool = True):
        p = sub.add_parser(name, help=help)
        if complex_arg:
            p.add_argument("complex", help="fixtures:<name> or a path to a .scx file")
        p.add_argument("--json", action="store_true", help="emit the machine-readable report")
        p.set_defaults(func=fn)
        return p

    p = verb("fixtures", cmd_fixtures, "list fixtures or export one as .scx", complex_arg=False)
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    for name, fn, ring in (("homology", cmd_homology, "Z"), ("cohomology", cmd_cohomology, "Z2")):
        p = verb(name, fn, f"{name} groups")
        p.add_argument("--ring", default=ring, choices=["Z", "Z2", "Z4", "Q"])
        p.add_argument("--degree", type=int)
        if name == "cohomology":
            p.add_argument("--basis", action="store_true", help="also print the basis for Z and Z4")
    verb("wu", cmd_wu, "Wu classes")
    verb("sw", cmd_sw, "Stiefel-Whitney classes")
    verb("spin-check", cmd_spin, "orientability and spin")
    verb("kervaire", cmd_kervaire, "Kervaire semi-characteristic")
    p = sub.add_parser("conditions", help="realizability/injectivity conditions A and B")
    p.add_argument("complex", nargs="?")
    p.add_argument("--torsion", help="comma-separated torsion coefficients of H^4(X;Z)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_conditions)
    p = verb("gamma-check", cmd_gamma, "is (w2, w4, p1) realized by a bundle")
    for flag in ("--a", "--b", "--c"):
        p.add_argument(flag, default="0")
    verb("pi4", cmd_pi4, "cohomotopy group pi^4(M)")
    verb("enumerate-bundles", cmd_enumerate, "quaternionic line bundles")
    verb("classify", cmd_classify, "spinnable rank-5 bundles")
    p = verb("verdict", cmd_verdict, "parallelizability verdict")
    p.add_argument("--stably-parallelizable", action="store_true", default=None,
                   help="assert p1/2(M) = 0 (user metadata)")
    p = verb("kappa-loop", cmd_kappa_loop, "framing class of a framed loop", complex_arg=False)
    p.add_argument("file", nargs="?")
    p.add_argument("--example", choices=["s5"])
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--framing", choices=["tau", "bounding"], default="tau")
    return parser


# ---------------------------------------------------------------- output


def _flatten(prefix: str, value, out: list[str]):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value) if not isinstance(value, str) else value}")


def render_text(report: dict) -> str:
    lines: list[str] = []
    _flatten("", report["results"], lines)
    for c in report["citations"]:
        lines.append(f"citation: {c}")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> tuple[int, dict | None]:
    """Run one verb; returns the exit code and the report (None on failure)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if not args.verb:
            raise UsageError(f"missing verb; choose one of {', '.join(VERBS)}")
        start = time.perf_counter()
        inputs, results, citations = args.func(args)
        report = {
            "command": args.verb,
            "inputs": inputs,
            "results": results,
            "citations": list(citations),
            "timing": {"seconds": round(time.perf_counter() - start, 6)},
        }
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE, None
    except ParseError as exc:
        print(f"malformed input: {exc}", file=stderr)
        return EXIT_DATA, None
    except ValidationError as exc:
        print(f"validation failed: {exc}", file=stderr)
        return EXIT_VALIDATION, None
    except (ComputationError, FiveBundlesError) as exc:
        print(f"computation error: {exc}", file=stderr)
        return EXIT_COMPUTATION, None
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True), file=stdout)
    else:
        print(render_text(report), file=stdout)
    return EXIT_OK, report


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(argv)
    return code
