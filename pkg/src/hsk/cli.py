"""Command-line front end: ``hsk <command> ...``.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import gf2
from .certify import (
    cycle_certificate,
    exhaustive_bipancyclicity,
    resolve_jobs,
    sampled_bipancyclicity,
    validate_certificate,
    validate_pid,
    validate_strongly_independent,
    validate_total_pd,
)
from .connectivity import sample_pairs, verify_connectivity_at_least, vertex_connectivity
from .domination import Shell, VertexSet, construct_hamming_pid, construct_total_pd, lift_pid
from .errors import HskError
from .hypercube import check_dim

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, sort_keys=True) + "\n"
    _write(text, out)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"{path} must hold a JSON object")
    return data


def _read_set(path: str) -> VertexSet:
    data = _read_json(path)
    try:
        return VertexSet(int(data["n"]), [int(v) for v in data["members"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: expected {{\"n\": int, \"members\": [int]}}") from exc


def hamming_level(n: int) -> int:
    if n < 3 or (n + 1) & n:
        raise UsageError(f"n = {n} is not a Hamming length 2^m - 1")
    m = (n + 1).bit_length() - 1
    if m > 4:
        raise UsageError("Hamming shells are supported up to n = 15")
    return m


def hamming_shell(n: int, coset: int = 0) -> Shell:
    """Q_n minus the Hamming code translated by e_coset (coset 0 is the code)."""
    m = hamming_level(n)
    if not 0 <= coset <= n:
        raise UsageError(f"coset index must be in 0..{n}")
    code = construct_hamming_pid(m).base
    return Shell(n, code.translate(0 if coset == 0 else 1 << (coset - 1)))


def _shell_for(n: int, faults: str | None) -> Shell:
    if faults:
        F = _read_set(faults)
        if F.n != n:
            raise UsageError(f"fault set lives in Q_{F.n}, not Q_{n}")
        return Shell(n, F)
    if (n + 1) & n == 0 and n >= 3:
        return hamming_shell(n)
    return Shell(n, construct_total_pd(n))


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"edge must be U,V with decimal labels, got {text!r}") from exc
    return u, v


# -- commands ------------------------------------------------------------------


def cmd_code_gen(a) -> int:
    if not 2 <= a.m <= 4:
        raise UsageError("--m must be in 2..4")
    _emit(gf2.kernel(gf2.hamming_parity_check(a.m)).to_json(), a.out)
    return OK


def cmd_pid_lift(a) -> int:
    if not 2 <= a.m <= 3:
        raise UsageError("--m must be 2 or 3")
    _emit(lift_pid(construct_hamming_pid(a.m)).base.to_json(), a.out)
    return OK


def cmd_shell_export(a) -> int:
    shell = hamming_shell(a.n, a.coset)
    if a.format == "json":
        _emit(shell.to_json(), a.out)
    elif a.format == "edgelist":
        _write("".join(f"{u} {v}\n" for u, v in shell.edges()), a.out)
    else:
        w = shell.n
        lines = [f"graph hamming_shell_{w} {{"]
        lines += [f'  "{v:0{w}b}";' for v in shell.survivors().tolist()]
        lines += [f'  "{u:0{w}b}" -- "{v:0{w}b}";' for u, v in shell.edges()]
        lines.append("}")
        _write("\n".join(lines) + "\n", a.out)
    return OK


def cmd_cycle_embed(a) -> int:
    from .cycles.engine import shell_cycle

    shell = hamming_shell(a.n, a.coset)
    edge = _parse_edge(a.edge)
    cyc = shell_cycle(shell, edge, a.length)
    _emit(cycle_certificate(shell, edge, a.length, cyc), a.out)
    return OK


def cmd_verify_cert(a) -> int:
    verdict = validate_certificate(_read_json(a.file))
    _emit(verdict.to_json())
    return OK if verdict else FAILED


def cmd_verify_bipancyclic(a) -> int:
    shell = hamming_shell(a.n, a.coset)
    if a.sample is not None:
        report = sampled_bipancyclicity(shell, a.sample, a.seed, jobs=a.jobs)
    else:
        report = exhaustive_bipancyclicity(shell, jobs=a.jobs)
    _emit(report, a.out)
    return FAILED if report["failures"] else OK


def cmd_verify_set(a) -> int:
    check = {"pid": validate_pid, "strongind": validate_strongly_independent,
             "totalpd": validate_total_pd}[a.kind]
    verdict = check(_read_set(a.file))
    _emit(verdict.to_json())
    return OK if verdict else FAILED


def cmd_connectivity(a) -> int:
    shell = _shell_for(a.n, a.faults)
    if a.exact:
        kappa = vertex_connectivity(shell, exhaustive=a.exhaustive)
        _emit({"n": shell.n, "survivors": shell.survivor_count, "kappa": kappa})
        return OK
    k = a.threshold if a.threshold is not None else shell.n - 1
    pairs = sample_pairs(shell, a.sample, a.seed) if a.sample else None
    res = verify_connectivity_at_least(shell, k, exhaustive=a.exhaustive, pairs=pairs)
    _emit({"n": shell.n, "k": k, "ok": res.ok, "pairs_checked": res.pairs_checked,
           "witness": res.witness})
    return OK if res.ok else FAILED


def cmd_bench_sweep(a) -> int:
    shell = hamming_shell(a.n)
    start = time.perf_counter()
    report = exhaustive_bipancyclicity(shell, jobs=a.jobs)
    seconds = time.perf_counter() - start
    _emit({
        "n": a.n,
        "requests": report["edges"] * report["lengths_per_edge"],
        "failures": len(report["failures"]),
        "jobs": resolve_jobs(a.jobs),
        "seconds": round(seconds, 3),
    })
    return FAILED if report["failures"] else OK


# -- parser ------------------------------------------------------------------------


def _dim(text: str) -> int:
    try:
        return check_dim(int(text))
    except (ValueError, HskError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $HSK_JOBS or 1)")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="hsk", description="Hamming shells of hypercubes.")
    sub = p.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code").add_subparsers(dest="action", required=True)
    g = code.add_parser("gen", parents=[common], help="Hamming code of length 2^m - 1")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_code_gen)

    pid = sub.add_parser("pid").add_subparsers(dest="action", required=True)
    g = pid.add_parser("lift", parents=[common], help="lift the length 2^m - 1 code to length 2^(m+1) - 1")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_pid_lift)

    shell = sub.add_parser("shell").add_subparsers(dest="action", required=True)
    g = shell.add_parser("export", parents=[common])
    g.add_argument("--n", type=_dim, required=True)
    g.add_argument("--coset", type=int, default=0)
    g.add_argument("--format", choices=("json", "dot", "edgelist"), default="json")
    g.add_argument("--out")
    g.set_defaults(func=cmd_shell_export)

    cyc = sub.add_parser("cycle").add_subparsers(dest="action", required=True)
    g = cyc.add_parser("embed", parents=[common])
    g.add_argument("--n", type=_dim, required=True)
    g.add_argument("--coset", type=int, default=0)
    g.add_argument("--edge", required=True, help="U,V")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_cycle_embed)

    ver = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    g = ver.add_parser("cert", parents=[common])
    g.add_argument("file")
    g.set_defaults(func=cmd_verify_cert)
    g = ver.add_parser("bipancyclic", parents=[common])
    g.add_argument("--n", type=_dim, required=True)
    g.add_argument("--coset", type=int, default=0)
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sample", type=int, metavar="K")
    g.add_argument("--out")
    g.set_defaults(func=cmd_verify_bipancyclic)
    for kind in ("pid", "strongind", "totalpd"):
        g = ver.add_parser(kind, parents=[common])
        g.add_argument("--file", required=True)
        g.set_defaults(func=cmd_verify_set, kind=kind)

    g = sub.add_parser("connectivity", parents=[common])
    g.add_argument("--n", type=_dim, required=True)
    g.add_argument("--faults")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--threshold", type=int)
    mode.add_argument("--exact", action="store_true")
    g.add_argument("--exhaustive", action="store_true", help="check every non-adjacent pair")
    g.add_argument("--sample", type=int, metavar="K", help="check K seeded random pairs")
    g.set_defaults(func=cmd_connectivity)

    bench = sub.add_parser("bench").add_subparsers(dest="action", required=True)
    g = bench.add_parser("sweep", parents=[common])
    g.add_argument("--n", type=_dim, required=True)
    g.set_defaults(func=cmd_bench_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, HskError) as exc:
        print(f"hsk: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
