"""Command-line driver.

Exit codes: 0 success, 1 failed verification, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field

from . import bicomp, dqsym, quotient, verify
from .bicomp import BicompositionError
from .poly import format_monomial, format_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DQ_GUARD = 5
DEGREE_GUARD = 6


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    parameters: dict
    status: str = "computed"
    payload: object = None
    text: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "payload": self.payload,
            "wall_time": round(self.wall_time, 6),
        }


def _bicomp_arg(text: str):
    try:
        return bicomp.parse(text)
    except BicompositionError as exc:
        raise UsageError(f"cannot parse bicomposition {text!r}: {exc}") from None


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected a pair 'd1,d2', got {text!r}") from None
    if a < 0 or b < 0:
        raise UsageError("bidegree entries must be nonnegative")
    return a, b


def _guard(ok: bool, args, what: str):
    if not ok and not args.force:
        raise UsageError(f"{what} exceeds the default resource guard; rerun with --force")


def _element_payload(u) -> list:
    return [[bicomp.fmt(c), str(v)] for c, v in u.items()]


def cmd_shuffle(args) -> RunReport:
    a, b = _bicomp_arg(args.a), _bicomp_arg(args.b)
    rep = RunReport("shuffle", {"a": bicomp.fmt(a), "b": bicomp.fmt(b)})
    if args.multiset:
        ms = bicomp.quasi_shuffle_multiset(a, b)
        items = sorted(ms.items(), key=lambda kv: bicomp.sort_key(kv[0]))
        rep.payload = [[bicomp.fmt(c), m] for c, m in items]
        rep.text = [f"{m} {bicomp.fmt(c)}" for c, m in items]
    else:
        shuffles = bicomp.quasi_shuffle(a, b)
        rep.payload = [bicomp.fmt(c) for c in shuffles]
        rep.text = list(rep.payload) + [f"# {len(shuffles)} bicompositions"]
    return rep


def cmd_mult(args) -> RunReport:
    a, b = _bicomp_arg(args.a), _bicomp_arg(args.b)
    u = dqsym.M(a) * dqsym.M(b)
    rep = RunReport("mult", {"a": bicomp.fmt(a), "b": bicomp.fmt(b)}, payload=_element_payload(u))
    rep.text = [repr(u)]
    return rep


def cmd_fbasis(args) -> RunReport:
    b = _bicomp_arg(args.b)
    u = dqsym.f_basis(b)
    rep = RunReport("fbasis", {"b": bicomp.fmt(b)}, payload=_element_payload(u))
    rep.text = [f"F[{bicomp.fmt(b)}] = {u!r}"]
    return rep


def cmd_expand(args) -> RunReport:
    a = _bicomp_arg(args.a)
    p = dqsym.m_expand(a, args.n)
    rep = RunReport("expand", {"a": bicomp.fmt(a), "n": args.n})
    rep.payload = [[format_monomial(m), str(c)] for m, c in p.items()]
    rep.text = [format_polynomial(p)]
    return rep


def cmd_hilbert(args) -> RunReport:
    n = args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    params = {"space": args.space, "n": n}
    rep = RunReport("hilbert", params)
    if args.space == "dq":
        _guard(n <= DQ_GUARD, args, f"dq with n={n}")
        H = quotient.hilbert_dq(n)
        P = quotient.predicted_dq(n)
        match = H.rows() == P.rows() and H.band_vanishes()
        rep.payload = H.to_dict()
        rep.payload["prediction"] = "MATCH" if match else "MISMATCH"
        rep.status = "pass" if match else "fail"
        rep.text = [H.render(), "MATCH predicted" if match else "MISMATCH predicted"]
        if not match:
            rep.payload["predicted_rows"] = P.rows()
    elif args.space == "rdiag":
        maxdeg = args.maxdeg if args.maxdeg is not None else quotient.r_display_degree(n)
        params["maxdeg"] = maxdeg
        _guard(maxdeg + 1 <= DEGREE_GUARD, args, f"rdiag up to total degree {maxdeg + 1}")
        H = quotient.hilbert_r_diag(n, maxdeg)
        rep.payload = H.to_dict()
        rep.payload["band"] = [[a, b, v] for (a, b), v in sorted(H.band.items())]
        rep.text = [H.render(), f"extra band (total degree {maxdeg + 1}) vanishes: {H.band_vanishes()}"]
    elif args.space == "runi":
        trunc = quotient.r_display_degree(n) + 1
        _guard(trunc <= 2 * DEGREE_GUARD, args, f"runi with n={n}")
        series = quotient.hilbert_r_univariate(n, trunc)
        psi = quotient.psi(n, trunc)
        match = series == psi
        rep.payload = {"n": n, "coefficients": [int(c) for c in series.to_list()], "psi": "MATCH" if match else "MISMATCH"}
        rep.status = "pass" if match else "fail"
        rep.text = [repr(series), "MATCH Psi_n" if match else "MISMATCH Psi_n"]
    elif args.space == "guess":
        trunc = args.trunc or (4, 4)
        params["trunc"] = list(trunc)
        s = quotient.plethystic_guess(n, trunc)
        rep.payload = {"n": n, "trunc": list(trunc),
                       "coefficients": [[i, j, str(c)] for (i, j), c in sorted(s.coeffs.items())]}
        rep.text = [repr(s)]
    return rep


def cmd_harmonics(args) -> RunReport:
    d = _pair_arg(args.bidegree)
    _guard(args.n <= DQ_GUARD and sum(d) <= DEGREE_GUARD, args, "harmonics")
    basis = quotient.harmonics_basis(args.n, d)
    rep = RunReport("harmonics", {"n": args.n, "bidegree": list(d)})
    rep.payload = [format_polynomial(p) for p in basis]
    rep.text = [f"# dimension {len(basis)}"] + rep.payload
    return rep


def _fmt_basis(B) -> dict:
    return {f"{a},{b}": [format_monomial(m) for m in ms] for (a, b), ms in sorted(B.items())}


def cmd_basis(args) -> RunReport:
    n = args.n
    _guard(n <= DQ_GUARD, args, f"basis with n={n}")
    report = quotient.basis_report(n)
    rep = RunReport("basis", {"n": n}, status="pass" if report.ok else "fail")
    rep.payload = {"basis": _fmt_basis(quotient.conjectured_basis(n)),
                   "failures": [repr(f) for f in report.failures]}
    rep.text = [f"B_{n}({k}): {', '.join(v)}" for k, v in rep.payload["basis"].items()]
    rep.text.append("basis check: " + ("PASS" if report.ok else "FAIL " + repr(report.failures)))
    return rep


def cmd_verify(args) -> RunReport:
    bound = args.bound
    suite = args.suite
    limits = {"kernel": 6, "duality": 4, "frobenius": 4, "lyndon": DEGREE_GUARD,
              "basis": DQ_GUARD, "hopf": DEGREE_GUARD}
    _guard(bound <= limits[suite], args, f"verify {suite} {bound}")
    res = verify.SUITES[suite](bound)
    rep = RunReport("verify", {"suite": suite, "bound": bound}, status="pass" if res.ok else "fail")
    rep.payload = {"checked": res.checked, "failures": [repr(f) for f in res.failures]}
    if suite == "basis":
        rep.payload["basis"] = _fmt_basis(res.details["basis"])
        rep.text = [f"B_{bound}({k}): {', '.join(v)}" for k, v in rep.payload["basis"].items()]
    rep.text.append(f"{suite}: {'PASS' if res.ok else 'FAIL'} ({res.checked} checks)")
    rep.text += [f"counterexample: {f}" for f in rep.payload["failures"]]
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--force", action="store_true", help="lift the default resource guards")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="dqsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", parents=[common], help="quasi-shuffle of two bicompositions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--multiset", action="store_true", help="show multiplicities")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("mult", parents=[common], help="product M_a M_b in the M basis")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("fbasis", parents=[common], help="F_b in the M basis")
    p.add_argument("b")
    p.set_defaults(func=cmd_fbasis)

    p = sub.add_parser("expand", parents=[common], help="M_a as a polynomial in n variables per set")
    p.add_argument("a")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert matrices and series")
    p.add_argument("space", choices=["dq", "rdiag", "runi", "guess"])
    p.add_argument("n", type=int)
    p.add_argument("--maxdeg", type=int, default=None, help="rdiag: largest total degree shown")
    p.add_argument("--trunc", type=_trunc_type, default=None, help="guess: truncation box d1,d2")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("harmonics", parents=[common], help="basis of the harmonics in one bidegree")
    p.add_argument("n", type=int)
    p.add_argument("bidegree", help="d1,d2")
    p.set_defaults(func=cmd_harmonics)

    p = sub.add_parser("basis", parents=[common], help="conjectured monomial basis B_n and its check")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("bound", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def _trunc_type(text: str):
    try:
        return _pair_arg(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if os.environ.get("DQSYM_THREADS"):
        logging.getLogger(__name__).debug("DQSYM_THREADS=%s (computation is single-threaded)",
                                          os.environ["DQSYM_THREADS"])
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except UsageError as exc:
        print(f"dqsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep.wall_time = time.perf_counter() - start
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    else:
        for line in rep.text:
            print(line)
    return EXIT_FAIL if rep.status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
