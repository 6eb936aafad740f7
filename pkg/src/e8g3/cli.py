"""Batch front-end: verification suites, bounded enumeration, cache
management.  Exit codes: 0 pass, 1 verification failure, 2 usage error."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .report import dump_report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="e8g3",
        description="exact checks for the graded E8 construction and its "
                    "genus-2 side")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=["rootsys", "heis", "gradedlie",
                                            "cusp", "sections", "all"])
    p_verify.add_argument("--json", metavar="PATH",
                          help="write the machine-readable report here")
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--fixture", metavar="PATH",
                          help="sections fixture file (overrides "
                               "E8G3_FIXTURES and the packaged default)")

    p_enum = sub.add_parser("enumerate",
                            help="minimal quintics below a height bound")
    p_enum.add_argument("bound", type=int)
    p_enum.add_argument("--csv", metavar="PATH")

    p_cache = sub.add_parser("cache", help="structure-constant cache")
    p_cache.add_argument("action", choices=["rebuild", "check"])
    p_cache.add_argument("--dir", default="e8g3_cache")

    args = parser.parse_args(argv)

    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    return cmd_cache(args)


def cmd_verify(args) -> int:
    from .suites import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    ok = True
    for name in names:
        rep = run_suite(name, threads=args.threads, seed=args.seed,
                        fixture_path=args.fixture)
        reports.append(rep)
        for check in rep["checks"]:
            status = check["status"].upper()
            line = f"[{status:4s}] {name}/{check['name']}"
            if check.get("detail"):
                line += f" -- {check['detail']}"
            if "slack" in check:
                line += f" (slack {check['slack']})"
            print(line)
            if check["status"] == "fail":
                ok = False
    payload = reports[0] if len(reports) == 1 else reports
    text = dump_report(payload)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    print(f"suite{'s' if len(reports) > 1 else ''} "
          f"{'passed' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    from .genus2 import Quintic, coeff_bound, discriminant, is_minimal

    if args.bound < 1:
        print("bound must be a positive integer", file=sys.stderr)
        return 2
    a = args.bound
    rows = []
    count = 0
    b12, b18, b24, b30 = (coeff_bound(a, i) for i in (12, 18, 24, 30))
    for c12 in range(-b12, b12 + 1):
        for c18 in range(-b18, b18 + 1):
            for c24 in range(-b24, b24 + 1):
                for c30 in range(-b30, b30 + 1):
                    q = Quintic(c12, c18, c24, c30)
                    d = discriminant(q)
                    if d == 0:
                        continue
                    minimal = is_minimal(q)
                    if minimal:
                        count += 1
                    rows.append((c12, c18, c24, c30, d, int(minimal)))
    print(count)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("c12,c18,c24,c30,disc,minimal\n")
            for row in rows:
                fh.write(",".join(str(x) for x in row) + "\n")
    return 0


def _cache_payload():
    from .gradedlie import get_algebra
    from .rootsys import build_root_system

    rs = build_root_system()
    alg = get_algebra()
    root_text = json.dumps(rs.to_json_dict(), sort_keys=True,
                           separators=(",", ":")) + "\n"
    const_text = "\n".join(alg.dump_lines()) + "\n"
    return root_text, const_text


def cmd_cache(args) -> int:
    root_text, const_text = _cache_payload()
    root_path = os.path.join(args.dir, "rootsys.json")
    const_path = os.path.join(args.dir, "structure_constants.txt")
    digests = {
        "rootsys": hashlib.sha256(root_text.encode()).hexdigest(),
        "structure_constants":
            hashlib.sha256(const_text.encode()).hexdigest(),
    }
    if args.action == "rebuild":
        os.makedirs(args.dir, exist_ok=True)
        with open(root_path, "w") as fh:
            fh.write(root_text)
        with open(const_path, "w") as fh:
            fh.write(const_text)
        for k, v in digests.items():
            print(f"{k} {v}")
        return 0
    ok = True
    for path, text in ((root_path, root_text), (const_path, const_text)):
        if not os.path.exists(path):
            print(f"missing {path}")
            ok = False
            continue
        with open(path) as fh:
            if fh.read() != text:
                print(f"digest mismatch: {path}")
                ok = False
    for k, v in digests.items():
        print(f"{k} {v}")
    print("cache ok" if ok else "cache MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
