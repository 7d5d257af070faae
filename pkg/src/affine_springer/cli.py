"""Command line entry point.

Usage examples::

    affine-springer euler sl 3 2 0,1,2 --oracle
    affine-springer springer sp 1:1 full
    affine-springer verify all
    affine-springer table --family sp --n-max 3 --s-max 5 --oracle --format json --out sp.json
    affine-springer rep sl 3 2 --lattice lat.json

Exit codes: 0 success, 1 verification failure, 2 bad parameters, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from . import type_a as A
from . import type_c as C
from .laurent import homogeneity_index
from .lattice import (
    DiagonalLattice,
    as_lattice,
    induced_endomorphism,
    is_fixed,
    is_symplectic,
    jordan_type,
    lattice_from_json,
    matrix_to_json,
    stabilizes,
    symplectic_gram,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_IO = 0, 1, 2, 3
HEADER = ["family", "n", "s", "type", "chi_formula", "chi_oracle", "match"]


class ParamError(ValueError):
    pass


@dataclass
class TableRow:
    family: str
    n: int
    s: int
    type: tuple[int, ...]
    chi_formula: int
    chi_oracle: int | None = None

    @property
    def match(self) -> bool | None:
        return None if self.chi_oracle is None else self.chi_formula == self.chi_oracle

    def sort_key(self):
        return (self.family, self.n, self.s, self.type)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "s": self.s,
            "type": list(self.type),
            "chi_formula": self.chi_formula,
            "chi_oracle": self.chi_oracle,
            "match": self.match,
        }

    def as_csv(self) -> list[str]:
        return [
            self.family,
            str(self.n),
            str(self.s),
            ";".join(map(str, self.type)),
            str(self.chi_formula),
            "" if self.chi_oracle is None else str(self.chi_oracle),
            "" if self.match is None else str(self.match).lower(),
        ]


def render_rows(rows: list[dict] | list[TableRow], fmt: str, header=HEADER) -> str:
    dicts = [r.as_dict() if isinstance(r, TableRow) else r for r in rows]
    if fmt == "json":
        return json.dumps(dicts, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for d in dicts:
        w.writerow([_csv_cell(d.get(k)) for k in header])
    return buf.getvalue()


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return ";".join(map(str, v))
    return str(v)


def write_output(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# parsing


def parse_type(text: str, lo: int, hi: int) -> tuple[int, ...]:
    """Comma separated integers, ``full`` for ``[lo, hi]``, or ``max:i`` for ``{i}``."""
    text = text.strip()
    if text == "full":
        vals = tuple(range(lo, hi + 1))
    elif text.startswith("max:"):
        vals = (_int(text[4:]),)
    else:
        vals = tuple(sorted({_int(x) for x in text.split(",") if x.strip()}))
    if not vals:
        raise ParamError("type set must be nonempty")
    if vals[0] < lo or vals[-1] > hi:
        raise ParamError(f"type set must lie in [{lo}, {hi}]")
    return vals


def _int(x: str) -> int:
    try:
        return int(x)
    except ValueError:
        raise ParamError(f"not an integer: {x!r}") from None


def parse_partition(text: str) -> tuple[int, ...]:
    parts = tuple(_int(x) for x in text.split(",") if x.strip())
    if not parts or any(p <= 0 for p in parts):
        raise ParamError("partition parts must be positive integers")
    return parts


def parse_sp_partition(text: str) -> C.SymplecticPartition:
    """``n0:part,part,...``; the part list may be empty."""
    if ":" not in text:
        raise ParamError("symplectic partition must look like n0:part,part")
    head, tail = text.split(":", 1)
    n0 = _int(head)
    parts = tuple(_int(x) for x in tail.split(",") if x.strip())
    if n0 < 0 or any(p <= 0 for p in parts):
        raise ParamError("n0 must be >= 0 and parts positive")
    if n0 + sum(parts) == 0:
        raise ParamError("partition must be nonempty")
    return C.SymplecticPartition(n0, parts)


# computations


def euler_row(family: str, n: int, s: int, J: tuple[int, ...], oracle: bool) -> TableRow:
    if family == "sl":
        chi = A.euler_sl(n, s, J)
        orc = A.euler_sl_oracle(n, s, J) if oracle else None
    else:
        chi = C.euler_sp(n, s, J)
        orc = C.euler_sp_oracle(n, s, J) if oracle else None
    return TableRow(family, n, s, J, chi, orc)


def _euler_row_args(args):
    return euler_row(*args)


def check_admissible(family: str, n: int, s: int):
    bad = A.admissible_sl(n, s) if family == "sl" else C.admissible_sp_params(n, s)
    if bad:
        raise ParamError("; ".join(bad))


def cmd_euler(args) -> int:
    n, s = args.n, args.s
    check_admissible(args.family, n, s)
    hi = n - 1 if args.family == "sl" else n
    J = parse_type(args.type, 0, hi)
    row = euler_row(args.family, n, s, J, args.oracle)
    write_output(render_rows([row], args.format), args.out)
    return EXIT_OK if row.match in (None, True) else EXIT_FAIL


SPRINGER_HEADER = ["family", "n", "s", "partition", "type", "chi_formula", "chi_closed_form", "chi_oracle", "match"]


def cmd_springer(args) -> int:
    if args.family == "sl":
        parts = parse_partition(args.partition)
        n = sum(parts)
        s = args.s if args.s is not None else A.default_springer_s(n, len(parts))
        full = args.type == "full"
        I = None if full else (parse_type(args.type, 1, n - 1) if args.type not in ("", "none") else ())
        chi = A.springer_euler_sl(parts, I, s)
        closed = A.multinomial(parts) if full else None
        orc = A.springer_euler_sl_by_chains(parts, I, s) if args.oracle else None
        label = list(A.validate_partition(parts))
        typ = list(range(1, n)) if full else list(I)
    else:
        sp = parse_sp_partition(args.partition)
        n = sp.n
        s = args.s if args.s is not None else C.default_springer_sp_s(sp)
        full = args.type == "full"
        J = None if full else parse_type(args.type, 1, n)
        chi = C.springer_euler_sp(sp, J, s)
        closed = C.springer_full_flag_sp(sp) if full else None
        orc = C.springer_euler_sp_paths(sp, J, s) if args.oracle else None
        label = f"{sp.n0}:{','.join(map(str, sp.parts))}"
        typ = list(range(1, n + 1)) if full else list(J)
    checks = [x for x in (closed, orc) if x is not None]
    match = None if not checks else all(x == chi for x in checks)
    row = {
        "family": args.family,
        "n": n,
        "s": s,
        "partition": label,
        "type": typ,
        "chi_formula": chi,
        "chi_closed_form": closed,
        "chi_oracle": orc,
        "match": match,
    }
    write_output(render_rows([row], args.format, SPRINGER_HEADER), args.out)
    return EXIT_OK if match in (None, True) else EXIT_FAIL


def table_rows(families, n_min, n_max, s_min, s_max, oracle, jobs=1) -> list[TableRow]:
    tasks = []
    for family in families:
        for n in range(n_min, n_max + 1):
            for s in range(s_min, s_max + 1):
                if family == "sl" and (s < 1 or gcd(n, s) != 1):
                    continue
                if family == "sp" and (s < 1 or s % 2 == 0 or gcd(n, s) != 1):
                    continue
                hi = n - 1 if family == "sl" else n
                for k in range(1, hi + 2):
                    for J in combinations(range(hi + 1), k):
                        tasks.append((family, n, s, J, oracle))
    tasks.sort(key=lambda t: (t[0], t[1], t[2], t[3]))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_euler_row_args, tasks, chunksize=8))
    else:
        rows = [euler_row(*t) for t in tasks]
    return rows


def cmd_table(args) -> int:
    families = ["sl", "sp"] if args.family == "all" else [args.family]
    if args.n_min < 1 or args.s_min < 1:
        raise ParamError("n-min and s-min must be >= 1")
    if args.jobs < 1:
        raise ParamError("jobs must be >= 1")
    rows = table_rows(families, args.n_min, args.n_max, args.s_min, args.s_max, args.oracle, args.jobs)
    write_output(render_rows(rows, args.format), args.out)
    return EXIT_OK if all(r.match in (None, True) for r in rows) else EXIT_FAIL


def load_lattice(path: str):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        return lattice_from_json(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParamError(f"bad lattice file: {exc}") from None


def cmd_verify(args) -> int:
    lattice = load_lattice(args.lattice) if args.lattice else None
    checks = run_suite(args.suite, args.n_max, args.s_max, lattice)
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        text = json.dumps([c.as_dict() for c in checks], indent=2) + "\n"
    else:
        lines = []
        for c in checks:
            status = "PASS" if c.ok else "FAIL"
            lines.append(f"{status} {c.name} [{c.anchor}] cases={c.cases}")
            if not c.ok:
                lines.append(f"  counterexample: {c.failure}")
        lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        text = "\n".join(lines) + "\n"
    write_output(text, args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_rep(args) -> int:
    n, s = args.n, args.s
    check_admissible(args.family, n, s)
    if args.b == 0:
        raise ParamError("b != 0")
    if args.family == "sl":
        N = A.standard_rep_sl(n, s, args.b)
        f = A.nu_sl(n, s)
    else:
        N = C.standard_rep_sp(n, s, args.b)
        f = C.nu_sp(n, s)
    p = N.char_poly()
    h = homogeneity_index(p)
    out = matrix_to_json(N)
    out["family"] = args.family
    out["s"] = s
    out["char_poly"] = [c.to_text() for c in p.coefficients]
    out["homogeneity_index"] = None if h.q is None else str(h.q)
    out["action"] = {"slope": f.slope, "offsets": list(f.offsets)}
    if args.lattice:
        L = load_lattice(args.lattice)
        Lb = as_lattice(L)
        if Lb.n != N.dim:
            raise ParamError(f"lattice dimension {Lb.n} does not match {N.dim}")
        canon = Lb.canonical()
        info = {
            "canonical_diagonal": list(canon.r),
            "is_diagonal": canon.is_diagonal(),
            "stabilized": stabilizes(N, Lb),
            "fixed_by_action": is_fixed(f, Lb),
        }
        if info["stabilized"]:
            info["jordan_type"] = list(jordan_type(induced_endomorphism(N, Lb)))
        if args.family == "sp":
            info["symplectic"] = is_symplectic(Lb, symplectic_gram(n))
        out["lattice"] = info
    write_output(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAMS, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    p = _Parser(prog="affine-springer", description="Euler characteristics of affine Springer fibers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("euler", parents=[common], help="closed-form Euler characteristic")
    e.add_argument("family", choices=["sl", "sp"])
    e.add_argument("n", type=int)
    e.add_argument("s", type=int)
    e.add_argument("type", help="comma separated integers, 'full' or 'max:i'")
    e.add_argument("--oracle", action="store_true", help="also count chains directly")
    e.set_defaults(func=cmd_euler)

    sp = sub.add_parser("springer", parents=[common], help="classical Springer fiber count")
    sp.add_argument("family", choices=["sl", "sp"])
    sp.add_argument("partition", help="sl: 2,1  sp: n0:part,part")
    sp.add_argument("type", nargs="?", default="full")
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_springer)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", nargs="?", default="all", choices=list(SUITES) + ["all"])
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--s-max", type=int, default=None)
    v.add_argument("--lattice", default=None, help="JSON lattice file to check as well")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="table of Euler characteristics")
    t.add_argument("--family", choices=["sl", "sp", "all"], default="all")
    t.add_argument("--n-min", type=int, default=1)
    t.add_argument("--n-max", type=int, default=4)
    t.add_argument("--s-min", type=int, default=1)
    t.add_argument("--s-max", type=int, default=5)
    t.add_argument("--oracle", action="store_true")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("rep", help="standard representative and lattice diagnostics")
    r.add_argument("family", choices=["sl", "sp"])
    r.add_argument("n", type=int)
    r.add_argument("s", type=int)
    r.add_argument("--b", type=int, default=1)
    r.add_argument("--lattice", default=None)
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_rep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParamError, A.InadmissibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
