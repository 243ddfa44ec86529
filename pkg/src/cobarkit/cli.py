"""Command line interface: ``cobarkit <command> ...``.

Inputs are JSON files or short specs:

    spaces       sphere:N  point  circle  laurent  nerve:G[:TRUNC]
    coalgebras   any space spec, corpus:NAME, or a coalgebra / simplicial JSON file
    maps         nerve-map:G:H:I0,I1,...[:TRUNC]  identity:SPACE  collapse:SPACE
                 laurent-map  or a map JSON file
    groups       z<n>, klein, z2xz2, s3, d4, q8, trivial, or a group table JSON file

Exit codes: 0 success, 1 a checked property fails, 2 bad input,
3 indeterminate verdict under --strict.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Callable

from . import __version__
from . import coalgebra as C
from . import lie
from . import ncgroebner as nc
from . import simplicial as S
from .cobar import check_d_squared, cobar, h0_presentation
from .homology import DEFAULT_MAX_BASIS, antipode_on_grouplikes, cobar_homology, omega_qis_check

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3

KAN_CAVEAT = (
    "caveat: group-like elements of H0 give the fundamental group only for Kan models "
    "such as nerves of groups; a minimal non-Kan model like this one can yield a monoid "
    "(here: no inverses), so read pi1 off a Kan model instead"
)


class Outcome:
    def __init__(self, data: dict, text: str, code: int = EXIT_OK):
        self.data, self.text, self.code = data, text, code


# -- input resolution ------------------------------------------------------------

def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, default=_json_default)


def resolve_group(spec: str) -> S.GroupTable:
    if os.path.exists(spec):
        return S.GroupTable.from_json(S.load_json(spec))
    return S.group_by_name(spec).check()


def resolve_space(spec: str, trunc: int = 3) -> S.SimplicialSet:
    if os.path.exists(spec):
        data = S.load_json(spec)
        if "simplices" not in data:
            raise S.InputError(f"{spec}: not a simplicial set (no 'simplices')")
        return S.from_json(data)
    parts = spec.split(":")
    kind = parts[0].lower()
    try:
        if kind == "point":
            return S.point()
        if kind == "circle":
            return S.minimal_sphere(1)
        if kind == "laurent":
            return S.laurent_circle()
        if kind == "sphere" and len(parts) == 2:
            return S.minimal_sphere(int(parts[1]))
        if kind == "nerve" and len(parts) in (2, 3):
            t = int(parts[2]) if len(parts) == 3 else trunc
            return S.nerve(resolve_group(parts[1]), t)
    except ValueError as exc:
        raise S.InputError(f"bad space spec {spec!r}: {exc}") from exc
    raise S.InputError(f"unknown space {spec!r} (no such file, and not a known spec)")


def resolve_coalgebra(spec: str, trunc: int = 3) -> C.DgCoalgebra:
    if spec.startswith("corpus:"):
        corpus = lie.cocommutative_corpus()
        name = spec.split(":", 1)[1]
        if name not in corpus:
            raise S.InputError(f"unknown corpus coalgebra {name!r}; known: {', '.join(corpus)}")
        return corpus[name]
    if os.path.exists(spec):
        data = S.load_json(spec)
        if "basis" in data:
            return C.from_json(data)
    return C.normalized_chains(resolve_space(spec, trunc))


def resolve_map(spec: str, trunc: int = 3) -> S.SimplicialMap:
    if os.path.exists(spec):
        return S.map_from_json(S.load_json(spec))
    parts = spec.split(":")
    kind = parts[0].lower()
    if kind == "nerve-map" and len(parts) in (4, 5):
        try:
            images = [int(x) for x in parts[3].split(",")]
            t = int(parts[4]) if len(parts) == 5 else trunc
        except ValueError as exc:
            raise S.InputError(f"bad map spec {spec!r}: {exc}") from exc
        return S.nerve_map(resolve_group(parts[1]), resolve_group(parts[2]), images, t)
    if kind == "identity" and len(parts) >= 2:
        return S.identity_map(resolve_space(":".join(parts[1:]), trunc))
    if kind == "collapse" and len(parts) >= 2:
        return S.collapse_map(resolve_space(":".join(parts[1:]), trunc))
    if kind == "laurent-map":
        return S.SimplicialMap(S.minimal_sphere(1), S.laurent_circle(), {"sigma": "a"})
    raise S.InputError(f"unknown map {spec!r} (no such file, and not a known spec)")


def _check_bounds(args) -> None:
    for flag in ("deg_bound", "word_bound", "groebner_bound"):
        v = getattr(args, flag, None)
        if v is not None and v < (0 if flag == "deg_bound" else 1):
            raise S.InputError(f"--{flag.replace('_', '-')} must be positive")


# -- build -------------------------------------------------------------------------

def cmd_build(args) -> Outcome:
    kind = args.kind
    p = args.params
    if kind == "sphere":
        if len(p) != 1:
            raise S.InputError("usage: build sphere N")
        obj = S.minimal_sphere(int(p[0]))
    elif kind == "nerve":
        if len(p) != 1:
            raise S.InputError("usage: build nerve GROUP [--trunc K]")
        obj = S.nerve(resolve_group(p[0]), args.trunc)
    elif kind == "laurent":
        obj = S.laurent_circle()
    elif kind == "json":
        if len(p) != 1:
            raise S.InputError("usage: build json FILE")
        data = S.load_json(p[0])
        obj = S.map_from_json(data) if "assignment" in data else S.from_json(data)
    elif kind == "nerve-map":
        if len(p) != 2 or not args.images:
            raise S.InputError("usage: build nerve-map G H --images I0,I1,...")
        images = [int(x) for x in args.images.split(",")]
        obj = S.nerve_map(resolve_group(p[0]), resolve_group(p[1]), images, args.trunc)
    elif kind in ("identity", "collapse"):
        if len(p) != 1:
            raise S.InputError(f"usage: build {kind} SPACE")
        s = resolve_space(p[0], args.trunc)
        obj = S.identity_map(s) if kind == "identity" else S.collapse_map(s)
    else:
        raise S.InputError(f"unknown build kind {kind!r}")

    if isinstance(obj, S.SimplicialMap):
        doc = {"source": obj.source.to_json(), "target": obj.target.to_json(),
               "assignment": dict(sorted(obj.assignment.items()))}
        counts = {"source": _counts(obj.source), "target": _counts(obj.target)}
        summary = f"map: source counts {counts['source']}, target counts {counts['target']}"
    else:
        doc = obj.to_json()
        counts = _counts(obj)
        summary = "simplices per degree: " + ", ".join(f"{n}: {k}" for n, k in counts.items())
        if obj.truncated:
            summary += f" (truncated above degree {obj.dimension_cap})"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(doc) + "\n")
        return Outcome({"written": args.output, "counts": counts}, f"wrote {args.output}\n{summary}")
    return Outcome(doc, dumps(doc))


def _counts(s: S.SimplicialSet) -> dict[str, int]:
    return {str(n): k for n, k in s.counts().items()}


# -- pi1 ------------------------------------------------------------------------------

def pi1_report(c: C.DgCoalgebra, groebner_bound: int, expect: S.GroupTable | None = None,
               step_bound: int = 64) -> tuple[dict, list[str], int]:
    p = h0_presentation(c)
    a = p.algebra(groebner_bound)
    dim = nc.dimension(a)
    closure = nc.grouplike_closure(a, step_bound=step_bound)
    candidates = closure.elements if closure.table is not None else closure.elements[1:1 + len(a.generators)]
    anti = antipode_on_grouplikes(a, candidates)
    free = a.complete_flag and not a.groebner_basis

    if dim.finite:
        dim_text = f"dim {dim.total}"
    elif free:
        k = len(a.generators)
        dim_text = f"free on {k} generator{'s' if k != 1 else ''}"
    else:
        dim_text = f"infinite-dimensional (at least {dim.total} through degree {groebner_bound})" \
            if dim.verdict.startswith("at-least") else f"dim {dim.verdict}"
    if closure.kind == "group":
        group_text = "trivial group" if closure.size == 1 else f"group of order {closure.size}"
    elif closure.kind == "monoid" or anti.missing:
        group_text = "group-like closure: monoid (no inverses found)"
    else:
        group_text = f"group-like closure exceeds {step_bound} elements; every generator is invertible"
    is_group = closure.kind == "group" or (closure.kind == "unbounded" and not anti.missing)

    data = {
        "result": "fundamental group as the group-like elements of H0 of the cobar construction",
        "presentation": p.to_json(),
        "groebner": {"bound": groebner_bound, "complete": a.complete_flag, "basis": len(a.groebner_basis),
                     "tips": [a.format({t: 1}) for t in sorted(a.tips, key=a.order_key)]},
        "dimension": {"verdict": dim.verdict, "counts": dim.counts, "finite": dim.finite, "free": free},
        "grouplikes": {"verdict": closure.verdict, "kind": closure.kind, "size": closure.size,
                       "verified": closure.verified, "is_group": is_group,
                       "elements": [a.format(g) for g in closure.elements] if closure.table is not None else None,
                       "table": closure.table},
        "antipode": {"all_invertible": anti.all_invertible, "certain": anti.exact,
                     "missing": [a.format(candidates[k]) for k in anti.missing]},
        "summary": f"{dim_text}, {group_text}" if closure.kind == "group" else f"{dim_text}; {group_text}",
    }
    if not is_group:
        data["caveat"] = KAN_CAVEAT
    code = EXIT_OK
    if expect is not None:
        phi = S.find_isomorphism(closure.table, expect.mult) if closure.table is not None else None
        data["expected_group"] = {"order": expect.order, "isomorphic": phi is not None, "isomorphism": phi}
        if phi is None:
            code = EXIT_FAIL

    lines = [
        "fundamental group from group-like elements of H0(cobar)",
        f"presentation: {p.to_text()}",
        f"groebner basis ({'complete' if a.complete_flag else 'incomplete'} below degree {groebner_bound}): "
        + (", ".join(a.format(g) for g in a.groebner_basis) or "(empty)"),
        f"dimension: {dim.verdict}",
        f"group-likes: {closure.verdict}{'' if closure.verified else ' (NOT verified)'}",
    ]
    if closure.table is not None and closure.size <= 12:
        names = [a.format(g) for g in closure.elements]
        lines.append("elements: " + "; ".join(f"g{i} = {x}" for i, x in enumerate(names)))
        lines.append("table:")
        lines.extend("  " + " ".join(f"g{j:<2}" for j in row) for row in closure.table)
    if anti.missing:
        qual = "" if anti.exact else f" (searched through degree {groebner_bound})"
        lines.append("antipode: no inverse for " + ", ".join(data["antipode"]["missing"]) + qual)
    else:
        lines.append("antipode: every group-like checked is invertible")
    lines.append("summary: " + data["summary"])
    if "caveat" in data:
        lines.append(KAN_CAVEAT)
    if expect is not None:
        lines.append(f"isomorphic to the expected group of order {expect.order}: "
                     f"{'yes' if data['expected_group']['isomorphic'] else 'no'}")
    return data, lines, code


def cmd_pi1(args) -> Outcome:
    c = resolve_coalgebra(args.space, args.trunc)
    expect = resolve_group(args.expect) if args.expect else None
    data, lines, code = pi1_report(c, args.groebner_bound, expect, args.step_bound)
    data["input"] = c.name or args.space
    return Outcome(data, "\n".join(lines), code)


# -- loop homology --------------------------------------------------------------------

def cmd_loop_homology(args) -> Outcome:
    c = resolve_coalgebra(args.space, args.trunc)
    t = cobar(c, args.deg_bound, args.word_bound, max_basis=args.max_basis)
    rep = cobar_homology(t, args.groebner_bound, max_basis=args.max_basis)
    data = {"result": "rational homology of the loop space via the cobar construction",
            "input": c.name or args.space, **rep.to_json()}
    lines = [f"loop space homology via the cobar construction ({c.name or args.space})",
             f"bounds: N={args.deg_bound} L={args.word_bound} Dg={args.groebner_bound}",
             f"{'n':>3} {'dim':>6}  status"]
    for e in rep.entries:
        status = "exact" if e.exact else "filtered" + (" (stable)" if e.stable else "")
        dim = "?" if e.dimension is None else str(e.dimension)
        lines.append(f"{e.n:>3} {dim:>6}  {status}" + (f"  {e.note}" if e.note and not e.exact else ""))
    lines.append("dims: " + ", ".join("?" if d is None else str(d) for d in rep.dims))
    code = EXIT_OK
    if args.strict and not rep.all_exact:
        code = EXIT_INDETERMINATE
    return Outcome(data, "\n".join(lines), code)


# -- compare ----------------------------------------------------------------------------

def cmd_compare(args) -> Outcome:
    smap = resolve_map(args.map, args.trunc)
    f = C.chains_map(smap)
    N = args.deg_bound
    notes = []
    caps = [c.degree_cap for c in (f.source, f.target) if c.truncated]
    if caps and N + 1 > min(caps):
        N = max(0, min(caps) - 1)
        notes.append(f"N lowered to {N}: an input is truncated above degree {min(caps)}")
    qi = C.is_quasi_isomorphism(f, N)
    om = omega_qis_check(f, N, args.word_bound, args.groebner_bound, args.max_basis)
    qi_json = {"degrees": [{"n": d.n, "dim_src": d.dim_src, "dim_dst": d.dim_dst, "iso": d.iso, "exact": d.exact}
                           for d in qi.degrees], "overall": qi.overall}
    data = {
        "result": "quasi-isomorphism of chains versus quasi-isomorphism after the cobar construction",
        "quasi_isomorphism": qi_json,
        "omega_quasi_isomorphism": om.to_json(),
        "notes": notes,
    }
    lines = ["plain quasi-isomorphism (homology of chains):"]
    for d in qi.degrees:
        lines.append(f"  H{d.n}: {d.dim_src} -> {d.dim_dst}  {'iso' if d.iso else 'NOT iso'}"
                     f"{'' if d.exact else ' (past truncation)'}")
    lines.append(f"  verdict: {qi.overall}")
    j = om.to_json()["h0"]
    lines.append("quasi-isomorphism after the cobar construction:")
    lines.append(f"  H0: dims {j['dim_src']} -> {j['dim_dst']}"
                 f"{'' if j['dims_exact'] else ' (at least, within Dg)'}; injective {j['injective']}, "
                 f"surjective {j['surjective']}; iso {j['iso']}")
    lines.append(f"  group-likes: {j['grouplikes_src']} -> {j['grouplikes_dst']}")
    if j["refutation"]:
        lines.append(f"  invertibility: {j['refutation']}")
    for d in om.degrees:
        iso = "?" if d.iso is None else ("iso" if d.iso else "NOT iso")
        lines.append(f"  H{d.n}: {d.dim_src} -> {d.dim_dst}  {iso}{'' if d.exact else ' (filtered)'}")
    lines.append(f"  verdict: {om.overall}")
    lines.extend(f"note: {n}" for n in notes)
    verdicts = (qi.overall, om.overall)
    code = EXIT_OK
    if "fail" in verdicts:
        code = EXIT_FAIL
    elif "indeterminate" in verdicts and args.strict:
        code = EXIT_INDETERMINATE
    return Outcome(data, "\n".join(lines), code)


# -- nogo --------------------------------------------------------------------------------

def cmd_nogo(args) -> Outcome:
    c = resolve_coalgebra(args.coalgebra, args.trunc)
    g = resolve_group(args.group)
    v = lie.nogo_witness(c, g, args.bound)
    data = {"result": "no functor from cocommutative coalgebras recovering the group ring of pi1",
            "input": c.name or args.coalgebra, **v.to_json()}
    lines = [
        "does S(H0 of the Lie model) have the dimension of Q[G]?",
        f"|G| = {v.group_order}; dim H0(Lie model) {'=' if v.h0_exact else '>='} {v.h0_dim}",
        "dim S^k(H0), k = 0, 1, ...: " + ", ".join(map(str, v.signature)),
        "running total: " + ", ".join(map(str, v.cumulative)),
        v.explanation,
        f"verdict: {v.verdict}",
    ]
    code = EXIT_OK
    if v.verdict == "undetermined" and args.strict:
        code = EXIT_INDETERMINATE
    return Outcome(data, "\n".join(lines), code)


# -- Lie tools -----------------------------------------------------------------------------

def _degrees(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise S.InputError(f"bad degree list {text!r}") from exc
    if not out:
        raise S.InputError("need at least one generator degree")
    return out


def cmd_lie_dims(args) -> Outcome:
    degs = _degrees(args.degrees)
    dims = lie.free_lie_dims(degs, args.through, by=args.by)
    data = {"result": "dimensions of the free graded Lie algebra", "generator_degrees": degs, **dims.to_json()}
    text = f"free graded Lie algebra on generators of degrees {degs}\n{dims.to_text()}"
    if args.by == "length" and len(set(d % 2 for d in degs)) == 1 and degs[0] % 2 == 0:
        witt = [lie.witt_dimension(len(degs), n) for n in range(1, args.through + 1)]
        data["witt"] = witt
        text += f"\n{'witt':>8}: " + " ".join(f"{d:>4}" for d in witt)
    return Outcome(data, text)


def cmd_pbw(args) -> Outcome:
    degs = _degrees(args.degrees)
    la = lie.free_lie_algebra(degs, args.through)
    rep = lie.pbw_check(la, args.through)
    data = {"result": "symmetric versus enveloping algebra dimensions", "generator_degrees": degs, **rep.to_json()}
    lines = [f"free graded Lie algebra on degrees {degs}, through degree {args.through}",
             "S: " + " ".join(map(str, rep.s_dims)),
             "U: " + " ".join(map(str, rep.u_dims)),
             f"verdict: {'pass' if rep.ok else 'fail at degree %s' % rep.first_mismatch}"]
    return Outcome(data, "\n".join(lines), EXIT_OK if rep.ok else EXIT_FAIL)


def cmd_lie_compare(args) -> Outcome:
    c = resolve_coalgebra(args.coalgebra, args.trunc)
    rep = lie.cobar_vs_UL(c, args.deg_bound, args.weight_bound)
    data = {"result": "cobar homology versus U of the homology of the Lie model",
            "input": c.name or args.coalgebra, **rep.to_json()}
    lines = [f"cobar homology vs U(H(Lie model)) for {c.name or args.coalgebra} ({rep.grading} grading)"]
    for k in rep.exact_keys:
        a, b = rep.cobar.get(k), rep.ul.get(k)
        if a or b:
            lines.append(f"  {k}: cobar {a}  UH {b}{'' if a == b else '  MISMATCH'}")
    lines.append(f"verdict: {'pass' if rep.ok else 'fail'} ({len(rep.exact_keys)} pieces compared)")
    return Outcome(data, "\n".join(lines), EXIT_OK if rep.ok else EXIT_FAIL)


# -- checks ---------------------------------------------------------------------------------

def cmd_check(args) -> Outcome:
    c = resolve_coalgebra(args.coalgebra, args.trunc)
    ax = C.check_axioms(c)
    witness = C.cocommutativity_witness(c)
    t = cobar(c, args.deg_bound, args.word_bound, max_basis=args.max_basis)
    d2 = check_d_squared(t) if ax.ok else None
    data = {"input": c.name or args.coalgebra, "axioms": {"ok": ax.ok, "failures": ax.failures},
            "cocommutative": witness is None, "cocommutativity_witness": witness,
            "d_squared": None if d2 is None else {"ok": d2.ok, "checked": d2.checked, "failure": d2.failure}}
    lines = [f"coalgebra axioms: {'ok' if ax.ok else 'FAIL: ' + '; '.join(ax.failures[:3])}",
             f"cocommutative: {'yes' if witness is None else 'no (witness ' + witness + ')'}"]
    if d2 is not None:
        lines.append(f"cobar D^2 = 0 on {d2.checked} words: {'ok' if d2.ok else 'FAIL: ' + str(d2.failure)}")
    ok = ax.ok and d2 is not None and d2.ok
    return Outcome(data, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL)


def cmd_selftest(args) -> Outcome:
    """Random valid coalgebras must pass both checks; every sign flip is classified."""
    rng = random.Random(args.seed)
    good, flips, rejected, still_valid = 0, 0, 0, 0
    failures = []
    for _ in range(args.count):
        c = C.random_coalgebra(rng)
        if C.check_axioms(c).ok and check_d_squared(cobar(c, 3, 3, max_basis=2000)).ok:
            good += 1
        else:
            failures.append(f"{c.name}: valid input rejected")
        try:
            bad, what = C.corrupt_sign(c, rng)
        except ValueError:
            continue
        flips += 1
        ax_ok = C.check_axioms(bad).ok
        d2_ok = check_d_squared(cobar(bad, 3, 3, max_basis=2000)).ok
        if not ax_ok or not d2_ok:
            rejected += 1
        else:
            still_valid += 1
        if ax_ok and not d2_ok:
            failures.append(f"{bad.name}: axioms hold but D^2 != 0 ({what})")
    data = {"seed": args.seed, "count": args.count, "random_coalgebras_ok": good,
            "sign_flips": flips, "rejected": rejected, "flips_still_valid": still_valid,
            "failures": failures}
    text = (f"seed {args.seed}: {good}/{args.count} random coalgebras pass axioms and D^2 = 0\n"
            f"{flips} sign flips: {rejected} rejected, {still_valid} gave another valid coalgebra")
    text += "".join(f"\nFAIL {f}" for f in failures)
    return Outcome(data, text, EXIT_OK if not failures else EXIT_FAIL)


# -- parser -----------------------------------------------------------------------------------

def _add_bounds(p: argparse.ArgumentParser, n: bool = True, l: bool = True, g: bool = True) -> None:
    if n:
        p.add_argument("-N", "--deg-bound", type=int, default=4, help="cobar degree bound (default 4)")
    if l:
        p.add_argument("-L", "--word-bound", type=int, default=8, help="word-length bound (default 8)")
    if g:
        p.add_argument("-G", "--groebner-bound", type=int, default=8, help="Groebner degree bound (default 8)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--strict", action="store_true", help="exit 3 on indeterminate verdicts")
    common.add_argument("--trunc", type=int, default=3, help="truncation for nerves (default 3)")
    common.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS,
                        help="skip cobar degrees with more words than this")

    parser = argparse.ArgumentParser(prog="cobarkit", description=__doc__.split("\n")[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build a simplicial set or map as JSON")
    p.add_argument("kind", choices=("sphere", "nerve", "json", "laurent", "nerve-map", "identity", "collapse"))
    p.add_argument("params", nargs="*")
    p.add_argument("--images", help="homomorphism images for nerve-map, e.g. 0,2")
    p.add_argument("-o", "--output", help="write the JSON here and print a summary")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("pi1", parents=[common], help="fundamental group from H0 of the cobar construction")
    p.add_argument("space")
    _add_bounds(p, n=False, l=False)
    p.add_argument("--expect", help="check the group-likes against this group")
    p.add_argument("--step-bound", type=int, default=64, help="cap on the group-like closure size")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("loop-homology", parents=[common], help="homology of the cobar construction")
    p.add_argument("space")
    _add_bounds(p)
    p.set_defaults(func=cmd_loop_homology)

    p = sub.add_parser("compare", parents=[common], help="quasi-iso versus quasi-iso after cobar")
    p.add_argument("map")
    _add_bounds(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("nogo", parents=[common], help="symmetric-algebra dimension obstruction")
    p.add_argument("coalgebra")
    p.add_argument("group")
    p.add_argument("--bound", type=int, default=4, help="weight bound for H0 of the Lie model")
    p.set_defaults(func=cmd_nogo)

    p = sub.add_parser("lie-dims", parents=[common], help="free graded Lie algebra dimensions")
    p.add_argument("--degrees", required=True, help="generator degrees, e.g. 2,2")
    p.add_argument("--through", type=int, default=5)
    p.add_argument("--by", choices=("degree", "length"), default="degree")
    p.set_defaults(func=cmd_lie_dims)

    p = sub.add_parser("pbw", parents=[common], help="compare S(L) and U(L) for a free Lie algebra")
    p.add_argument("--degrees", required=True)
    p.add_argument("--through", type=int, default=6)
    p.set_defaults(func=cmd_pbw)

    p = sub.add_parser("lie-compare", parents=[common], help="cobar homology versus U(H(Lie model))")
    p.add_argument("coalgebra")
    _add_bounds(p, l=False, g=False)
    p.add_argument("-W", "--weight-bound", type=int, default=6)
    p.set_defaults(func=cmd_lie_compare)

    p = sub.add_parser("check", parents=[common], help="coalgebra axioms, cocommutativity, D^2 = 0")
    p.add_argument("coalgebra")
    _add_bounds(p, g=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", parents=[common], help="randomized D^2 and corruption checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None, out: Callable[[str], None] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    write = out or (lambda s: print(s))
    try:
        _check_bounds(args)
        outcome = args.func(args)
    except lie.NotCocommutative as exc:
        msg = str(exc)
        if args.format == "json":
            write(dumps({"error": msg, "witness": exc.witness}))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except (S.InputError, ValueError, nc.PolySyntaxError) as exc:
        if args.format == "json":
            write(dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    write(dumps(outcome.data) if args.format == "json" else outcome.text)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
