"""Command line interface.

JSON reports go to stdout, diagnostics to stderr.  Exit status is 0 on
success, 2 when a requested check fails and 1 on bad input.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
import warnings
from dataclasses import dataclass, field

from . import io
from .cobordism import run_schedule, verify_stack_lemma
from .complex import make_face
from .errors import PLStackError
from .fvectors import face_vectors, f_vector, g3_boundary_check, is_k_stacked
from .homology import homology, is_homology_sphere
from .presentations import (
    PermutationGroupTable,
    abelianization,
    count_homomorphisms,
    is_balanced,
    is_perfect,
    power_presentation,
    presentation_cellular_homology,
    presentation_complex_simplicial,
)

log = logging.getLogger("plstack")

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    exit_status: int = EXIT_OK
    elapsed: float = 0.0


def _face_arg(text: str):
    try:
        return make_face(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad face {text!r}: {exc}") from exc


def cmd_fvec(args) -> RunReport:
    X = io.load_complex(args.path)
    return RunReport("fvec", {"path": args.path}, {"dim": X.dim, "f": list(f_vector(X))})


def cmd_gvec(args) -> RunReport:
    X = io.load_complex(args.path)
    return RunReport("gvec", {"path": args.path}, face_vectors(X).as_dict())


def cmd_stacked(args) -> RunReport:
    rep = is_k_stacked(io.load_complex(args.path), args.k)
    return RunReport("stacked", {"path": args.path, "k": args.k}, rep.as_dict(),
                     EXIT_OK if rep.stacked else EXIT_CHECK)


def cmd_g3(args) -> RunReport:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = g3_boundary_check(io.load_complex(args.path))
    for w in caught:
        log.warning("%s", w.message)
    ok = rep.stacked2 and rep.g3 in (0, None)
    return RunReport("g3", {"path": args.path}, rep.as_dict(), EXIT_OK if ok else EXIT_CHECK)


def cmd_homology(args) -> RunReport:
    return RunReport("homology", {"path": args.path}, homology(io.load_complex(args.path)).as_dict())


def cmd_sphere_check(args) -> RunReport:
    check = is_homology_sphere(io.load_complex(args.path), args.n)
    out = {"n": args.n, "profile": check.profile.as_dict(), "sphere": check.is_sphere}
    return RunReport("sphere-check", {"path": args.path, "n": args.n}, out,
                     EXIT_OK if check else EXIT_CHECK)


def cmd_subdivide(args) -> RunReport:
    S = io.load_complex(args.path)
    result = run_schedule(S, io.load_schedule(args.schedule))
    if args.out:
        io.save_complex(result.complex, args.out)
    return RunReport("subdivide", {"path": args.path, "schedule": args.schedule}, result.as_dict())


def cmd_verify_stack(args) -> RunReport:
    rep = verify_stack_lemma(io.load_complex(args.path), args.face, args.apex)
    return RunReport("verify-stack", {"path": args.path, "face": list(args.face), "apex": args.apex},
                     rep.as_dict(), EXIT_OK if rep.match else EXIT_CHECK)


def cmd_theorem_b(args) -> RunReport:
    P = io.load_presentation(args.path)
    if args.power > 1:
        P = power_presentation(P, args.power)
    cellular = presentation_cellular_homology(P)
    simplicial = homology(presentation_complex_simplicial(P))
    perfect = is_perfect(P)
    out = {
        "abelianization": abelianization(P).as_dict(),
        "balanced": is_balanced(P),
        "cellular_homology": cellular.as_dict(),
        "homology_agrees": simplicial == cellular.as_profile(),
        "perfect": perfect,
        "power": args.power,
        "presentation": P.as_dict(),
        "simplicial_homology": simplicial.as_dict(),
    }
    return RunReport("theorem-b", {"path": args.path, "power": args.power}, out,
                     EXIT_OK if perfect and out["homology_agrees"] else EXIT_CHECK)


def cmd_homcount(args) -> RunReport:
    P = io.load_presentation(args.path)
    if args.power > 1:
        P = power_presentation(P, args.power)
    T = PermutationGroupTable.from_name(args.target)
    n = count_homomorphisms(P, T, args.budget)
    return RunReport("homcount", {"path": args.path, "target": args.target},
                     {"count": n, "target": args.target, "target_order": len(T)})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plstack", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log timing to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in [
        ("fvec", cmd_fvec, "f-vector of a complex"),
        ("gvec", cmd_gvec, "f-, h- and g-vectors of a complex"),
        ("homology", cmd_homology, "integral homology"),
        ("g3", cmd_g3, "g-vector of the boundary and 2-stackedness"),
    ]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("path")
        s.set_defaults(func=fn)

    s = sub.add_parser("stacked", help="is every (d-k-1)-face on the boundary?")
    s.add_argument("path")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_stacked)

    s = sub.add_parser("sphere-check", help="compare homology with the n-sphere")
    s.add_argument("path")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_sphere_check)

    s = sub.add_parser("subdivide", help="run a pyramid schedule, print the ledger")
    s.add_argument("path")
    s.add_argument("schedule")
    s.add_argument("--out", help="write the resulting complex here")
    s.set_defaults(func=cmd_subdivide)

    s = sub.add_parser("verify-stack", help="check the interior-face ledger of one attachment")
    s.add_argument("path")
    s.add_argument("--face", type=_face_arg, required=True, help="comma separated vertices")
    s.add_argument("--apex", type=int, default=None)
    s.set_defaults(func=cmd_verify_stack)

    s = sub.add_parser("theorem-b", help="perfectness and presentation-complex homology")
    s.add_argument("path")
    s.add_argument("--power", type=int, default=1, help="use the n-fold direct product")
    s.set_defaults(func=cmd_theorem_b)

    s = sub.add_parser("homcount", help="count homomorphisms into a permutation group")
    s.add_argument("path")
    s.add_argument("--target", default="A5", help="A<n>, S<n>, C<n> or trivial")
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--budget", type=int, default=None,
                   help="max relator evaluations (default: $PLSTACK_BUDGET or 1e8)")
    s.set_defaults(func=cmd_homcount)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (PLStackError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report.elapsed = time.perf_counter() - start
    log.info("%s finished in %.3fs with status %d", report.command, report.elapsed, report.exit_status)
    sys.stdout.write(io.dumps(report.outputs))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
