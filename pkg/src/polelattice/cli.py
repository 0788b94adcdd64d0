"""Command line entry point: ``polelattice {check-pole,decompose,rank,verify}``.

Input files are JSON objects ``{"name", "size", "leq": ["0101", ...], "labels"?}``
where row ``i`` column ``j`` is ``1`` iff ``i <= j``.
Exit codes: 0 affirmative, 1 negative answer, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .decompose import SUITES, CheckResult, decomposition_report, verify_suite
from .errors import PoleLatticeError
from .functors import rank_SQ, z_basis
from .lattices import Lattice, lattice_from_poset, pole_signature
from .posets import Poset, TwinPair, enumerate_posets, is_pole_by_permutation, pole_decomposition
from .relations import GroundSet, Relation

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2
POSET_COUNTS = (1, 1, 2, 5, 16, 63, 318)


class InputError(Exception):
    pass


def parse_lattice_file(data: dict) -> tuple[str, Poset]:
    """Validate a LatticeFile object and return ``(name, poset)``."""
    if not isinstance(data, dict):
        raise InputError("top level must be a JSON object")
    try:
        n = int(data["size"])
        rows = data["leq"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"missing or bad field: {exc}") from None
    name = str(data.get("name", f"n={n}"))
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f"leq must be a list of {n} rows")
    ups = []
    for i, row in enumerate(rows):
        if not isinstance(row, str) or len(row) != n or set(row) - {"0", "1"}:
            raise InputError(f"leq row {i} must be a 0/1 string of length {n}")
        ups.append(sum(1 << j for j, ch in enumerate(row) if ch == "1"))
    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise InputError("labels must be a list with one entry per element")
    try:
        g = GroundSet(n, tuple(str(x) for x in labels) if labels else None)
        poset = Poset(g, Relation(g, g, tuple(ups)))
    except (PoleLatticeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    return name, poset


def lattice_to_file(t: Lattice) -> dict:
    return {"name": t.name or f"n={t.size}", "size": t.size, "leq": t.poset.matrix_strings()}


def _load(path: str) -> tuple[str, Poset]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    return parse_lattice_file(data)


def _load_lattice(path: str) -> Lattice:
    name, p = _load(path)
    t = lattice_from_poset(p, name=name)
    if t is None:
        raise InputError(f"{name}: the order is not a lattice")
    return t


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


# -- subcommands ------------------------------------------------------------

def cmd_check_pole(args) -> int:
    name, p = _load(args.path)
    dec = pole_decomposition(p)
    witness = is_pole_by_permutation(p)
    if (dec is None) != (witness is None):
        print(f"{name}: recognisers disagree", file=sys.stderr)
        return EXIT_USAGE
    label = p.ground.label
    if dec is None:
        report = {"name": name, "pole": False,
                  "failed": "no block stacking and no admissible permutation"}
        if args.json:
            _emit(report)
        else:
            print(f"{name}: not a pole poset")
            print(f"failed: {report['failed']}")
        return EXIT_NO
    blocks = [[label(x) for x in b.members] for b in dec.blocks]
    tau = [label(dec.tau()(x)) for x in range(p.size)]
    if args.json:
        _emit({"name": name, "pole": True, "signature": list(dec.signature),
               "blocks": blocks, "tau": tau})
    else:
        print(f"{name}: pole poset")
        print("blocks " + ",".join(str(k) for k in dec.signature))
        for i, b in enumerate(dec.blocks):
            kind = "twin" if isinstance(b, TwinPair) else "single"
            print(f"  level {i}: {kind} {' '.join(blocks[i])}")
        print("tau " + " ".join(tau))
    return EXIT_OK


def cmd_decompose(args) -> int:
    t = _load_lattice(args.path)
    rep = decomposition_report(t)
    if args.json:
        _emit(rep.to_dict())
        return EXIT_OK
    print(f"{rep.name} (|T| = {rep.size}, pole: {'yes' if rep.is_pole else 'no'})")
    print(f"{'signature':<16}{'n':>4}{'|Aut|':>7}{'|Inj|':>7}{'|Sur|':>7}{'dim':>6}")
    for e in rep.entries:
        sig = "[" + ",".join(map(str, e.signature)) + "]"
        print(f"{sig:<16}{e.n:>4}{e.aut_order:>7}{e.injections:>7}{e.surjections:>7}{e.dim:>6}")
    print(rep.summary())
    print(f"pole-image endomorphisms {rep.dim_check_direct}, all endomorphisms {rep.endomorphisms}")
    return EXIT_OK


def cmd_rank(args) -> int:
    t = _load_lattice(args.path)
    if pole_signature(t) is None:
        print(f"{t.name}: not a pole lattice, rank formula does not apply", file=sys.stderr)
        return EXIT_NO
    m_max = args.set_size
    if m_max < 0:
        raise InputError("--set-size must be non-negative")
    rows = [(m, rank_SQ(t, m), len(z_basis(t, m))) for m in range(m_max + 1)]
    if args.json:
        _emit({"name": t.name, "rows": [{"m": m, "rank": r, "z_basis": z} for m, r, z in rows]})
    else:
        print(f"{'m':>3}{'rank':>10}{'|Z|':>10}")
        for m, r, z in rows:
            print(f"{m:>3}{r:>10}{z:>10}")
    return EXIT_OK if all(r == z for _, r, z in rows) else EXIT_NO


def _corpus_case(n: int) -> list[CheckResult]:
    """Poset-level checks for all posets of size ``n`` up to isomorphism."""
    from .relalg import delta_square_identity, nonzero_condition

    posets = enumerate_posets(n)
    out = [CheckResult("corpus", "poset count", f"n={n}", len(posets) == POSET_COUNTS[n], len(posets),
                       f"{len(posets)} posets")]
    agree = sum((pole_decomposition(p) is None) == (is_pole_by_permutation(p) is None) for p in posets)
    out.append(CheckResult("corpus", "block peel agrees with permutation criterion", f"n={n}",
                           agree == len(posets), len(posets)))
    poles = [p for p in posets if pole_decomposition(p) is not None]
    good = sum(delta_square_identity(p).ok for p in poles)
    out.append(CheckResult("corpus", "delta^2 = (-1)^|E1| Delta_tau delta, idempotent", f"n={n}",
                           good == len(poles), len(poles)))
    if n <= 4:
        hits = sum(nonzero_condition(p) == (pole_decomposition(p) is not None) for p in posets)
        out.append(CheckResult("corpus", "delta S delta != 0 iff pole", f"n={n}",
                               hits == len(posets), len(posets)))
    return out


def _lattice_case(payload: tuple[dict, str]) -> list[CheckResult]:
    data, suite = payload
    name, p = parse_lattice_file(data)
    return verify_suite(lattice_from_poset(p, name=name), suite)


def _run(fn, payloads: list, jobs: int) -> list[CheckResult]:
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, payloads))
    else:
        parts = [fn(x) for x in payloads]
    return [r for part in parts for r in part]


def cmd_verify(args) -> int:
    suite = args.suite
    if suite != "corpus" and suite != "all" and suite not in SUITES:
        print(f"unknown suite {suite!r}; choose from all, corpus, {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    if suite == "corpus":
        if not 1 <= args.max_size <= 6:
            raise InputError("--max-size must lie in 1..6 for the corpus suite")
        results = _run(_corpus_case, list(range(1, args.max_size + 1)), args.jobs)
    else:
        if args.path is None:
            raise InputError(f"suite {suite!r} needs a lattice file")
        t = _load_lattice(args.path)
        names = list(SUITES) if suite == "all" else [suite]
        results = _run(_lattice_case, [(lattice_to_file(t), s) for s in names], args.jobs)
    ok = all(r.passed for r in results)
    if args.json:
        _emit({"suite": suite, "passed": ok, "checks": [r.to_dict() for r in results]})
    else:
        for r in results:
            flag = "PASS" if r.passed else "FAIL"
            extra = f" ({r.detail})" if r.detail else ""
            print(f"{flag} [{r.suite}] {r.lattice}: {r.identity} [{r.checked}]{extra}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polelattice", description="Exact finite-lattice calculus.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-pole", help="decide whether a poset is a pole poset")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_pole)

    p = sub.add_parser("decompose", help="block decomposition of the endomorphism algebra")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rank", help="rank of S_Q(X) for |X| = 0..m")
    p.add_argument("path")
    p.add_argument("--set-size", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("path", nargs="?")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
