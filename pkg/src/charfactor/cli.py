"""Command-line front end: verification, enumeration, scanning, self-test.

Every command is deterministic for fixed flags; ``--json`` switches from the
human-readable tables to the machine-readable certificate/report schemas.
Exit codes: 0 = verified / no violations, 1 = mismatch or violation found
(output still emitted), 2 = invalid parameters or flags.

Sweeps (``verify --sweep``, ``scan --sweep``) iterate every valid instance
below a size bound; CHARFACTOR_THREADS caps their process parallelism, and
results are always emitted in canonical instance order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import scanner, verifier
from .minimal_model import InvalidLabel, InvalidModel
from .pairs import contributing_pairs
from .params import (
    FactorizationParams,
    ParameterError,
    ProductParams,
    Scheme,
    find_realizations,
)
from .series import SeriesError

_KINDS = {k.value: k for k in verifier.IdentityKind}
_SCHEMES = {"triple": Scheme.TRIPLE, "quintuple": Scheme.QUINTUPLE, "quint": Scheme.QUINTUPLE}


def _thread_count() -> int:
    raw = os.environ.get("CHARFACTOR_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(os.cpu_count() or 1, 8)


def _emit(payload, as_json: bool, human_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _add_tuple_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, help="first minimal-model index")
    sp.add_argument("--pp", type=int, help="second minimal-model index p'")
    sp.add_argument("--ap", type=int, help="modulus a'")
    sp.add_argument("--b", type=int, default=1, help="scaling factor b (default 1)")
    sp.add_argument("--bp", type=int, default=1, help="scaling factor b' (default 1)")
    sp.add_argument("--c", type=int, help="common residue c")


def _add_quadruple_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--ap", type=int, required=True, help="modulus a'")
    sp.add_argument("--B", type=int, default=1, help="scaling product B (default 1)")
    sp.add_argument("--c", type=int, required=True, help="common residue c")
    sp.add_argument("--n", type=int, required=True, help="character count n")


def _tuple_from_args(scheme: Scheme, args) -> FactorizationParams:
    missing = [f for f in ("p", "pp", "ap", "c") if getattr(args, f) is None]
    if missing:
        raise ParameterError("missing flags: " + ", ".join("--" + f for f in missing))
    return FactorizationParams(scheme, args.p, args.pp, args.ap, args.b, args.bp, args.c)


def _cert_lines(cert: verifier.IdentityCertificate):
    fp = cert.params
    yield (f"kind={cert.kind.value} p={fp.p} p'={fp.p_prime} a={fp.a} a'={fp.a_prime} "
           f"b={fp.b} b'={fp.b_prime} c={fp.c} B={fp.B} n={fp.n} order={cert.order}")
    yield "pairs: " + "; ".join(
        f"(r={p.r}, s={p.s}) type={p.ptype} weight={p.weight}" for p in cert.pairs
    )
    yield f"match={cert.match} sign_variant={cert.sign_variant} first_mismatch={cert.first_mismatch}"
    yield "lhs prefix: " + " ".join(map(str, cert.lhs_prefix))
    yield "rhs prefix: " + " ".join(map(str, cert.rhs_prefix))


def _report_lines(rep: scanner.SignReport):
    pp = rep.params
    yield (f"scheme={pp.scheme.value} a'={pp.a_prime} B={pp.B} c={pp.c} n={pp.n} "
           f"order={rep.order} covered={rep.covered.value}")
    yield "support residues mod n: " + " ".join(map(str, rep.support))
    if rep.violations:
        for v in rep.violations[:20]:
            yield f"violation at j={v.j}: coeff[j]={v.lo} coeff[j+n]={v.hi}"
        if len(rep.violations) > 20:
            yield f"... {len(rep.violations) - 20} more"
    else:
        yield "no sign violations"


def _verify_task(job: tuple) -> dict:
    kind_value, scheme_value, p, pp_, ap, b, bp, c, order = job
    fp = FactorizationParams(_SCHEMES[scheme_value], p, pp_, ap, b, bp, c)
    return verifier.verify(_KINDS[kind_value], fp, order).to_json_dict()


def _scan_task(job: tuple) -> dict:
    scheme_value, ap, B, c, n, order = job
    pp = ProductParams(_SCHEMES[scheme_value], ap, B, c, n)
    return scanner.scan(pp, order).to_json_dict()


def _run_pool(task, jobs: list[tuple]) -> list[dict]:
    threads = _thread_count()
    if threads <= 1 or len(jobs) <= 1:
        return [task(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(task, jobs, chunksize=8))


def _cmd_verify(args) -> int:
    kind = _KINDS[args.kind]
    if args.sweep:
        jobs = [
            (kind.value, fp.scheme.value, fp.p, fp.p_prime, fp.a_prime, fp.b, fp.b_prime, fp.c, args.order)
            for fp in verifier.iter_applicable_params(kind, args.max_pp)
        ]
        certs = _run_pool(_verify_task, jobs)
        failures = sum(not c["match"] for c in certs)
        if args.json:
            print(json.dumps({"kind": kind.value, "order": args.order, "instances": len(certs),
                              "failures": failures, "certificates": certs}, indent=2))
        else:
            for c in certs:
                print(f"p={c['p']} p'={c['pp']} a'={c['ap']} b={c['b']} b'={c['bp']} c={c['c']} "
                      f"n={c['n']}: match={c['match']} variant={c['sign_variant']}")
            print(f"{len(certs)} instances, {failures} failures")
        return 1 if failures else 0
    fp = _tuple_from_args(kind.scheme, args)
    cert = verifier.verify(kind, fp, args.order)
    _emit(cert.to_json_dict(), args.json, _cert_lines(cert))
    return 0 if cert.match else 1


def _cmd_pairs(args) -> int:
    scheme = _SCHEMES[args.scheme]
    fp = _tuple_from_args(scheme, args)
    prs = contributing_pairs(fp)
    payload = [{"r": p.r, "s": p.s, "type": p.ptype, "weight": p.weight} for p in prs]
    _emit(payload, args.json,
          [f"(r={p.r}, s={p.s}) type={p.ptype} weight={p.weight}" for p in prs]
          + [f"count={len(prs)} (n={fp.n})"])
    return 0


def _series_payload(pp: ProductParams, coeffs: list[int], order: int) -> dict:
    return {
        "scheme": pp.scheme.value,
        "ap": pp.a_prime,
        "B": pp.B,
        "c": pp.c,
        "n": pp.n,
        "order": order,
        "coeffs": [str(c) for c in coeffs],
    }


def _cmd_phi(args) -> int:
    pp = ProductParams(Scheme.TRIPLE, args.ap, args.B, args.c, args.n)
    coeffs = list(scanner.phi_series(pp, args.order).coeffs)
    _emit(_series_payload(pp, coeffs, args.order), args.json,
          ["coefficients 0..%d:" % args.order, " ".join(map(str, coeffs))])
    return 0


def _cmd_psi(args) -> int:
    pp = ProductParams(Scheme.QUINTUPLE, args.ap, args.B, args.c, args.n)
    coeffs = list(scanner.psi_series(pp, args.order).coeffs)
    _emit(_series_payload(pp, coeffs, args.order), args.json,
          ["coefficients 0..%d:" % args.order, " ".join(map(str, coeffs))])
    return 0


def _cmd_scan(args) -> int:
    if args.sweep:
        schemes = [_SCHEMES[args.scheme]] if args.scheme else [Scheme.TRIPLE, Scheme.QUINTUPLE]
        jobs = [
            (pp.scheme.value, pp.a_prime, pp.B, pp.c, pp.n, args.order)
            for scheme in schemes
            for pp in scanner.iter_canonical_quadruples(scheme, args.max_size)
        ]
        reports = _run_pool(_scan_task, jobs)
        bad = sum(bool(r["violations"]) for r in reports)
        if args.json:
            print(json.dumps({"order": args.order, "instances": len(reports),
                              "with_violations": bad, "reports": reports}, indent=2))
        else:
            for r in reports:
                print(f"{r['scheme']} a'={r['ap']} B={r['B']} c={r['c']} n={r['n']} "
                      f"covered={r['covered']}: {len(r['violations'])} violations")
            print(f"{len(reports)} quadruples, {bad} with violations")
        return 1 if bad else 0
    if not args.scheme:
        raise ParameterError("missing flag: --scheme")
    pp = ProductParams(_SCHEMES[args.scheme], args.ap, args.B, args.c, args.n)
    rep = scanner.scan(pp, args.order)
    _emit(rep.to_json_dict(), args.json, _report_lines(rep))
    return 0 if rep.ok else 1


def _cmd_realize(args) -> int:
    pp = ProductParams(_SCHEMES[args.scheme], args.ap, args.B, args.c, args.n)
    found = find_realizations(pp, args.limit)
    payload = [
        {"p": fp.p, "pp": fp.p_prime, "a": fp.a, "ap": fp.a_prime,
         "b": fp.b, "bp": fp.b_prime, "c": fp.c, "B": fp.B, "n": fp.n}
        for fp in found
    ]
    _emit(payload, args.json,
          [f"p={fp.p} p'={fp.p_prime} b={fp.b} b'={fp.b_prime}" for fp in found]
          + [f"{len(found)} realizations"])
    return 0


def _cmd_remark(args) -> int:
    ok = verifier.verify_remark_products(args.ap, args.c, args.order)
    _emit({"ap": args.ap, "c": args.c, "order": args.order, "holds": ok},
          args.json, [f"product telescopes to 1: {ok}"])
    return 0 if ok else 1


def _selftest_checks():
    from .series import SignedMonomial, pochhammer, quintuple_product, triple_product

    def theta_oracles():
        for eu in range(0, 5):
            for ev in range(max(eu, 1), 5):
                for su in (1, -1):
                    for sv in (1, -1):
                        u = SignedMonomial(su, eu)
                        v = SignedMonomial(sv, ev)
                        lhs = triple_product(u, v, 60)
                        rhs = pochhammer((v, u, SignedMonomial(su * sv, ev - eu)), v, 60)
                        if lhs != rhs:
                            return f"triple product mismatch at u={u}, v={v}"
        for eu in range(0, 3):
            for ev in range(2 * eu + 1, 7):
                for su in (1, -1):
                    for sv in (1, -1):
                        u = SignedMonomial(su, eu)
                        v = SignedMonomial(sv, ev)
                        lhs = quintuple_product(u, v, 60)
                        rhs = pochhammer((v, u, SignedMonomial(su * sv, ev - eu)), v, 60) * pochhammer(
                            (SignedMonomial(sv, 2 * eu + ev), SignedMonomial(sv, ev - 2 * eu)),
                            SignedMonomial(1, 2 * ev), 60)
                        if lhs != rhs:
                            return f"quintuple product mismatch at u={u}, v={v}"
        return None

    def identity_sweeps():
        for kind in (verifier.IdentityKind.MAIN, verifier.IdentityKind.QUINT):
            for fp in verifier.iter_applicable_params(kind, 60):
                cert = verifier.verify(kind, fp, 80)
                if not cert.match:
                    return f"{kind.value} failed at {fp}"
        return None

    def pair_counts():
        for scheme in (Scheme.TRIPLE, Scheme.QUINTUPLE):
            for fp in verifier.iter_scheme_params(scheme, 120):
                contributing_pairs(fp)  # raises LemmaViolation on any miscount
        return None

    def sign_scan():
        rep = scanner.scan(ProductParams(Scheme.TRIPLE, 3, 1, 1, 3), 200)
        return None if rep.ok else "violations found for the (3,1,1,3) stream"

    def remark_products():
        for ap in (3, 5):
            for c in range(1, ap, 2):
                if not verifier.verify_remark_products(ap, c, 60):
                    return f"remark product failed at a'={ap}, c={c}"
        return None

    return [
        ("theta sums match product expansions", theta_oracles),
        ("plain identities hold on the small sweep", identity_sweeps),
        ("pair counts equal n", pair_counts),
        ("sign scan is clean on (3,1,1,3)", sign_scan),
        ("remark products telescope to 1", remark_products),
    ]


def _cmd_selftest(args) -> int:
    failures = 0
    results = []
    for name, check in _selftest_checks():
        problem = check()
        status = "ok" if problem is None else "FAIL"
        if problem is not None:
            failures += 1
        results.append({"check": name, "status": status, "detail": problem})
        if not args.json:
            print(f"{status:4s} {name}" + (f" ({problem})" if problem else ""))
    if args.json:
        print(json.dumps(results, indent=2))
    elif not failures:
        print("all self-tests passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charfactor",
        description="Exact verification of product factorizations of alternating "
                    "Virasoro character sums, plus coefficient sign scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="certify one identity instance or sweep a family")
    sp.add_argument("--kind", choices=sorted(_KINDS), default="main")
    _add_tuple_flags(sp)
    sp.add_argument("--order", type=int, default=200, help="truncation order (default 200)")
    sp.add_argument("--sweep", action="store_true", help="iterate all applicable tuples")
    sp.add_argument("--max-pp", type=int, default=200, help="sweep bound on p*p' (default 200)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("pairs", help="list the contributing pairs of a tuple")
    sp.add_argument("--scheme", choices=sorted(_SCHEMES), required=True)
    _add_tuple_flags(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_pairs)

    sp = sub.add_parser("phi", help="coefficients of the triple-scheme product series")
    _add_quadruple_flags(sp)
    sp.add_argument("--order", type=int, default=50)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_phi)

    sp = sub.add_parser("psi", help="coefficients of the quintuple-scheme product series")
    _add_quadruple_flags(sp)
    sp.add_argument("--order", type=int, default=50)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_psi)

    sp = sub.add_parser("scan", help="scan sign agreement at distance n")
    sp.add_argument("--scheme", choices=sorted(_SCHEMES))
    sp.add_argument("--ap", type=int)
    sp.add_argument("--B", type=int, default=1)
    sp.add_argument("--c", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--order", type=int, default=1000)
    sp.add_argument("--sweep", action="store_true", help="iterate canonical quadruples")
    sp.add_argument("--max-size", type=int, default=60, help="sweep bound on a'*B*n (default 60)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_scan)

    sp = sub.add_parser("realize", help="find full tuples realizing a quadruple")
    sp.add_argument("--scheme", choices=sorted(_SCHEMES), required=True)
    _add_quadruple_flags(sp)
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_realize)

    sp = sub.add_parser("remark", help="check the telescoping product relation")
    sp.add_argument("--ap", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--order", type=int, default=100)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_remark)

    sp = sub.add_parser("selftest", help="run the reduced invariant sweeps")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParameterError, InvalidModel, InvalidLabel, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
