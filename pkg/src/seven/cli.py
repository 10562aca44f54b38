"""Command-line front end.

Examples::

    seven validate --theta 1,4,1,0
    seven classify --cat diff --theta 1,28,0,0
    seven admits --cat diff --core 0,1,0 --exotic 1
    seven count --cat top --core 12,0,0
    seven list-spheres
    seven sweep --cat top --kmax 4 --pmax 100 --threads 4 --json

Theta literals are ``k,p,eps,delta``; cores are ``l,k,c``.  Output is text
unless ``--json`` is given or ``SEVEN_OUTPUT=json`` is set.  Exit status is
0 on success, 1 when the input is rejected mathematically, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from .actions import admits_action, count_actions, sphere_action_set, tangent_bundle_action_set
from .classify import classify_diffeo, classify_homeo
from .errors import DomainError
from .invariants import (
    Category,
    CoreManifold,
    ManifoldDescriptor,
    circle_bundle_invariants,
    descriptor_invariants,
)
from .theta import ThetaClass, enumerate_theta


def _theta_arg(text: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"--theta expects k,p,eps,delta, got {text!r}")
    try:
        return tuple(int(s) for s in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--theta expects integers, got {text!r}") from None


def _core_arg(text: str) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--core expects l,k,c, got {text!r}")
    try:
        return tuple(int(s) for s in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--core expects integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seven",
        description="Invariants, classification and regular circle actions for 2-connected 7-manifolds.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name: str, help_: str, *, cat=False, theta=False, core=False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit JSON")
        if cat:
            p.add_argument("--cat", choices=("top", "diff"), default="top", help="category (default: top)")
        if theta:
            p.add_argument("--theta", type=_theta_arg, required=True, metavar="K,P,EPS,DELTA")
        if core:
            p.add_argument("--core", type=_core_arg, required=True, metavar="L,K,C")
            p.add_argument("--rank", type=int, default=0, help="number of S^3 x S^4 summands")
            p.add_argument("--exotic", type=int, default=0, help="index of the homotopy-sphere summand")
        return p

    add("validate", "check a quadruple (k,p,eps,delta)", theta=True)
    add("bundle-invariants", "invariants of the circle-bundle total space", cat=True, theta=True)
    add("core-invariants", "invariants of a normal form", cat=True, core=True)
    p = add("classify", "normal form of the circle-bundle total space", cat=True, theta=True)
    p.add_argument("--no-absorb", action="store_true", help="keep the raw sphere summand when k = 0 (diff only)")
    add("admits", "does the manifold admit a regular circle action?", cat=True, core=True)
    add("count", "number of regular circle actions", cat=True, core=True)
    add("list-spheres", "homotopy spheres with smooth regular circle actions")
    add("list-tangent", "exotic unit tangent bundles of S^4 with smooth regular circle actions")
    p = add("sweep", "classify every orbit space in a box", cat=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    return parser


def _theta(args) -> ThetaClass:
    k, p, eps, delta = args.theta
    return ThetaClass(k, p, eps, delta)


def _descriptor(args) -> ManifoldDescriptor:
    l, k, c = args.core
    return ManifoldDescriptor(args.rank, CoreManifold(l, k, c), args.exotic, Category.parse(args.cat))


def _invariants_text(inv) -> str:
    rows = inv.to_json()
    rows["ph"] = str(inv.ph)
    return "\n".join(f"{key}: {val}" for key, val in rows.items())


def _sweep_rows(k: int, pmax: int, category: Category) -> list[dict]:
    rows = []
    for theta in enumerate_theta((k, k), (-pmax, pmax)):
        if category is Category.DIFF and theta.delta:
            continue
        res = classify_homeo(theta) if category is Category.TOP else classify_diffeo(theta)
        row = {"theta": theta.to_json(), "descriptor": res.descriptor.to_json()}
        if k:
            row["consistent"] = circle_bundle_invariants(theta, category) == descriptor_invariants(res.descriptor)
        rows.append(row)
    return rows


def sweep(kmax: int, pmax: int, category: Category, threads: int = 1) -> list[dict]:
    """Classification of every valid quadruple with ``|k| <= kmax``, ``|p| <= pmax``.

    Work is split by ``k``; results are concatenated in ``k`` order, so the
    output does not depend on ``threads``.
    """
    ks = range(-kmax, kmax + 1)
    if threads <= 1:
        parts = [_sweep_rows(k, pmax, category) for k in ks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda k: _sweep_rows(k, pmax, category), ks))
    return [row for part in parts for row in part]


def _dispatch(args) -> tuple[object, str]:
    """Run the verb; return (json payload, text rendering)."""
    verb = args.verb
    if verb == "validate":
        theta = _theta(args)
        return {"valid": True, "theta": theta.to_json(), "m": theta.m}, f"valid (m = {theta.m})"
    if verb == "bundle-invariants":
        inv = circle_bundle_invariants(_theta(args), Category.parse(args.cat))
        return inv.to_json(), _invariants_text(inv)
    if verb == "core-invariants":
        inv = descriptor_invariants(_descriptor(args))
        return inv.to_json(), _invariants_text(inv)
    if verb == "classify":
        theta = _theta(args)
        if args.cat == "top":
            res = classify_homeo(theta)
        else:
            res = classify_diffeo(theta, absorb=not args.no_absorb)
        return res.to_json(), str(res.descriptor)
    if verb == "admits":
        w = admits_action(_descriptor(args))
        if w is None:
            return {"admits": False}, "none"
        return {"admits": True, "witness": w.to_json()}, f"witness theta {w.theta} (rank {w.rank})"
    if verb == "count":
        cnt = count_actions(_descriptor(args))
        if cnt.infinite:
            text = f"infinite (witness {cnt.witness.theta}, period {cnt.certificate.period})"
        else:
            text = str(cnt.finite)
        return cnt.to_json(), text
    if verb in ("list-spheres", "list-tangent"):
        rs = sorted(sphere_action_set() if verb == "list-spheres" else tangent_bundle_action_set())
        return rs, " ".join(map(str, rs))
    if verb == "sweep":
        if args.kmax < 0 or args.pmax < 0:
            raise DomainError("--kmax and --pmax must be nonnegative")
        rows = sweep(args.kmax, args.pmax, Category.parse(args.cat), args.threads)
        lines = []
        for row in rows:
            t, d = row["theta"], ManifoldDescriptor.from_json(row["descriptor"])
            lines.append(f"{t['k']},{t['p']},{t['eps']},{t['delta']}\t{d}")
        return rows, "\n".join(lines)
    raise AssertionError(verb)


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--core -1,2,0`` as ``--core=-1,2,0`` so argparse does not
    mistake a negative literal for an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--theta", "--core", "--rank", "--exotic", "--kmax", "--pmax"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False) or os.environ.get("SEVEN_OUTPUT", "text").lower() == "json"
    try:
        payload, text = _dispatch(args)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if as_json:
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
