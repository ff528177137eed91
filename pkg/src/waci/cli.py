"""Command-line front end: ``waci <command> ...``.

Presentation files look like::

    [ring]
    variables = x1, x2, x3
    weights = 2, 2, 2
    label = EL(3)

    [relations]
    x1^2 - x3^2
    x2^2 - x3^2
    x1*x2*x3

Exit codes: 0 computed, 1 negative verdict on a yes/no gate, 2 input error.
"""

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .derivations import derivation_space, negative_derivations_vanish, oracle_agrees
from .duality import NotPDAError, formal_dimension, is_pda, middle_form, orientation
from .families import (
    FamilyError,
    SplitParams,
    eisenbud_levine,
    el_orientation,
    el_size,
    flag_presentation,
    nonhomogeneity_check,
    split_family,
    truncated,
)
from .geodesic import geodesic_report, unimodular_search
from .homotopy import is_simple, pseudo_homotopy
from .poly import ParseError, Presentation, PresentationError, WeightedRing, format_polynomial, parse
from .quadform import DegenerateFormError, brute_force_signed_squares, integrality, signature
from .quotient import QuotientAlgebra, ci_series, NotCompleteIntersectionError
from .smoothing import smoothability_report


class InputError(ValueError):
    """Malformed input file or arguments (exit code 2)."""


# -- input files ---------------------------------------------------------------

@dataclass(frozen=True)
class InputFile:
    path: str
    text: str
    presentation: Presentation

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.text.encode()).hexdigest()


def parse_presentation_text(text: str, path: str = "<input>") -> Presentation:
    section = None
    ring_fields: Dict[str, str] = {}
    relations = []  # (line number, text)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("ring", "relations"):
                raise InputError(f"{path}:{lineno}: unknown section [{section}]")
            continue
        if section == "ring":
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            ring_fields[key.lower()] = value
        elif section == "relations":
            relations.append((lineno, line))
        else:
            raise InputError(f"{path}:{lineno}: content outside a section")
    for key in ("variables", "weights"):
        if key not in ring_fields:
            raise InputError(f"{path}: [ring] is missing '{key}'")
    names = tuple(v.strip() for v in ring_fields["variables"].split(",") if v.strip())
    try:
        weights = tuple(int(w) for w in ring_fields["weights"].split(",") if w.strip())
        ring = WeightedRing(names, weights)
    except ValueError as e:
        raise InputError(f"{path}: bad ring: {e}") from None
    rels = []
    for lineno, line in relations:
        try:
            rels.append(parse(line, ring))
        except ParseError as e:
            raise InputError(f"{path}:{lineno}: {e}") from None
    try:
        return Presentation(ring, tuple(rels), ring_fields.get("label", ""))
    except PresentationError as e:
        raise InputError(f"{path}: {e}") from None


def read_input(path: str) -> InputFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    return InputFile(path, text, parse_presentation_text(text, path))


def format_presentation(p: Presentation) -> str:
    lines = ["[ring]",
             "variables = " + ", ".join(p.ring.variables),
             "weights = " + ", ".join(str(w) for w in p.ring.weights)]
    if p.label:
        lines.append(f"label = {p.label}")
    lines += ["", "[relations]"] + [format_polynomial(f) for f in p.relations]
    return "\n".join(lines) + "\n"


# -- reports -------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def render_text(report: dict) -> str:
    out = []

    def walk(prefix, v):
        if isinstance(v, dict) and v:
            for k in sorted(v, key=str):
                walk(f"{prefix}.{k}" if prefix else str(k), v[k])
        else:
            out.append(f"{prefix}: {json.dumps(_jsonable(v), sort_keys=True)}")

    walk("", report)
    return "\n".join(out) + "\n"


def _fraction_matrix(m):
    return [[str(x) for x in row] for row in m]


# -- pipelines -----------------------------------------------------------------

def analyze_presentation(p: Presentation) -> dict:
    A = QuotientAlgebra(p)
    res: dict = {"label": p.label, "is_waci": False}
    if len(p.relations) != p.ring.nvars:
        res["error"] = f"{len(p.relations)} relations for {p.ring.nvars} variables"
        return res
    if not A.artinian:
        res["error"] = "quotient is not finite-dimensional"
        return res
    res["is_waci"] = True
    res["hilbert"] = list(A.hilbert())
    res["total_dim"] = A.total_dim()
    try:
        res["hilbert_matches_ci_series"] = list(ci_series(p)) == list(A.hilbert())
    except NotCompleteIntersectionError:
        res["hilbert_matches_ci_series"] = False
    m = formal_dimension(A)
    res["formal_dimension"] = m
    rep = is_simple(p, A)
    res["simple"] = rep.simple
    res["simplicity"] = {"negative_derivations_vanish": rep.der_neg_zero, "der0_dim": rep.der0_dim,
                         "verdict": rep.verdict}
    ph = pseudo_homotopy(p, A)
    res["pi1"] = ph.pi1
    res["pi0"] = ph.pi0
    res["kA"] = ph.kA
    res["pda"] = is_pda(A)
    if res["pda"] and m % 4 == 0:
        n = el_size(p)
        omega = el_orientation(A, n) if n else orientation(A)
        G = middle_form(A, omega)
        res["orientation"] = str(omega.omega)
        res["signature"] = signature(G)
        try:
            res["integrality"] = integrality(G, certify=False).integral
        except DegenerateFormError:
            res["integrality"] = False
    if res["pda"]:
        sm = smoothability_report(A)
        res["smoothability"] = smoothability_summary(sm)
    res["homogeneity"] = nonhomogeneity_check(p, A).__dict__
    return res


def smoothability_summary(sm) -> dict:
    return {
        "m": sm.m,
        "branch": sm.branch,
        "verdict": sm.verdict,
        "certificate": sm.certificate,
        "notes": list(sm.notes),
        "candidates": [
            {"name": c.name, "q": c.q, "pontrjagin_numbers": c.numbers,
             "numbers_verdict": c.numbers_verdict, "integrality": c.integrality,
             "signature": c.signature, "L_value": c.l_value, "passes": c.passes}
            for c in sm.candidates
        ],
    }


def _int_list(text: Optional[str], what: str) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"--{what} must be a comma-separated list of integers") from None


def _family(args) -> Presentation:
    try:
        if args.family == "el":
            return eisenbud_levine(args.n if args.n is not None else 3)
        if args.family == "truncated":
            return truncated(args.n if args.n is not None else 3, 2 * (args.k if args.k is not None else 1))
        if args.family == "flag":
            return flag_presentation(args.n if args.n is not None else 2)
        weights = _int_list(args.weights, "weights")
        exps = _int_list(args.exponents, "exponents")
        n = args.n if args.n is not None else (len(weights) if weights else 2)
        k = args.k if args.k is not None else 1
        if weights is None:
            weights = [2] * n
        if exps is None:
            params = SplitParams.from_weights(n, k, weights)
        else:
            params = SplitParams(n, k, tuple(weights), tuple(exps))
        return split_family(params)
    except FamilyError as e:
        raise InputError(str(e)) from None


def run(argv: Sequence[str]):
    """Execute one command; returns (report dict or text, exit code, json flag)."""
    args = build_parser().parse_args(argv)
    inputs = [read_input(f) for f in getattr(args, "files", []) or []]
    digest = hashlib.sha256("\0".join(i.digest for i in inputs).encode()).hexdigest() if inputs else None
    cmd = args.command
    code = 0
    results: dict

    if cmd == "family":
        p = _family(args)
        text = format_presentation(p)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
            results = {"written": args.out, "label": p.label}
        else:
            return text, 0, False
    elif cmd == "analyze":
        results = analyze_presentation(inputs[0].presentation)
        code = 0 if results.get("is_waci") else 1
    elif cmd == "simple":
        p = inputs[0].presentation
        rep = is_simple(p)
        results = {"is_waci": rep.is_waci, "simple": rep.simple, "verdict": rep.verdict,
                   "negative_derivations_vanish": rep.der_neg_zero, "der0_dim": rep.der0_dim,
                   "kA": rep.kA, "top_pi1_dim": rep.top_pi1_dim}
        code = 0 if rep.simple else 1
    elif cmd == "derive":
        A = QuotientAlgebra(inputs[0].presentation)
        sp = derivation_space(A, args.degree)
        results = {"degree": args.degree, "dim": sp.dim, "basis": [str(b) for b in sp.basis]}
        if args.degree == 0 or args.degree < 0:
            results["negative_derivations_vanish"] = negative_derivations_vanish(A)
    elif cmd == "homotopy":
        p = inputs[0].presentation
        A = QuotientAlgebra(p)
        if not A.artinian or len(p.relations) != p.ring.nvars:
            results = {"error": "not a WACI"}
            code = 1
        else:
            ph = pseudo_homotopy(p, A)
            results = {"pi1": ph.pi1, "pi0": ph.pi0, "kA": ph.kA, "rank_L": ph.rank_L}
    elif cmd == "pda":
        A = QuotientAlgebra(inputs[0].presentation)
        ok = is_pda(A)
        results = {"pda": ok}
        if ok:
            results["formal_dimension"] = A.top_degree
            results["orientation"] = str(orientation(A).omega)
        code = 0 if ok else 1
    elif cmd == "signature":
        p = inputs[0].presentation
        A = QuotientAlgebra(p)
        if not is_pda(A):
            results = {"error": "not a Poincare duality algebra"}
            code = 1
        elif A.top_degree % 4:
            results = {"error": f"formal dimension {A.top_degree} is not a multiple of 4"}
            code = 1
        else:
            n = el_size(p)
            omega = el_orientation(A, n) if n else orientation(A)
            G = middle_form(A, omega)
            integ = integrality(G)
            results = {"orientation": str(omega.omega), "middle_form": _fraction_matrix(G.matrix),
                       "signature": signature(G), "integrality": integ.integral,
                       "diagonal": list(integ.entries),
                       "certificate": _fraction_matrix(integ.certificate) if integ.certificate else None}
    elif cmd == "smooth":
        A = QuotientAlgebra(inputs[0].presentation)
        try:
            sm = smoothability_report(A)
        except NotPDAError as e:
            results = {"error": str(e)}
            code = 1
        else:
            results = smoothability_summary(sm)
            code = 0 if sm.smoothable else 1
    elif cmd == "geodesic":
        rep = geodesic_report([i.presentation for i in inputs])
        results = {"factors": [v.__dict__ for v in rep.factors], "k": rep.k,
                   "critical_factors": [rep.factors[j].label for j in rep.critical],
                   "critical_dim": len(rep.critical), "conclusion": rep.conclusion,
                   "obstruction_applies": rep.obstruction_applies}
        code = 0 if rep.obstruction_applies else 1
    elif cmd == "oracle":
        results, code = _oracle(args, inputs)
    else:  # pragma: no cover - argparse guards this
        raise InputError(f"unknown command {cmd}")

    report = {"command": cmd, "input_digest": digest, "results": results}
    return report, code, args.json


def _oracle(args, inputs):
    if args.oracle == "monomial-search":
        cycles = args.cycles if args.cycles is not None else 4
        bound = args.bound if args.bound is not None else 10
        res = unimodular_search(cycles, bound, prune=False)
        found = res.found
        return {"cycles": cycles, "bound": bound, "examined": res.examined,
                "verdict": "unimodular pair found" if found else "no unimodular pair found",
                "datum": None if found is None else {"lengths": found.cycle_lengths,
                                                     "gammas": found.gammas}}, (1 if found else 0)
    if not inputs:
        raise InputError("this oracle needs a presentation file")
    A = QuotientAlgebra(inputs[0].presentation)
    if args.oracle == "derivation":
        deg = args.degree if args.degree is not None else 0
        ok = oracle_agrees(A, deg)
        return {"degree": deg, "dim": derivation_space(A, deg).dim, "agrees": ok}, (0 if ok else 1)
    # congruence
    if not is_pda(A) or A.top_degree % 4:
        return {"error": "middle form unavailable"}, 1
    G = middle_form(A)
    fast = integrality(G, certify=False).integral
    slow = brute_force_signed_squares(G, bound=args.bound if args.bound is not None else 24)
    return {"rank": G.size, "residue_test": fast, "brute_force": slow, "agrees": fast == slow}, (
        0 if fast == slow else 1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="waci", description="Weighted artinian complete intersections.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="append wall-clock timing to the report")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in [("analyze", "full report"), ("simple", "simplicity gate"),
                        ("homotopy", "pseudo-homotopy groups"), ("pda", "Poincare duality gate"),
                        ("signature", "middle form, signature, integrality"),
                        ("smooth", "rational smoothability")]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("files", nargs=1, metavar="FILE")
    sp = sub.add_parser("derive", parents=[common], help="derivations of one degree")
    sp.add_argument("files", nargs=1, metavar="FILE")
    sp.add_argument("--degree", type=int, required=True)
    sp = sub.add_parser("geodesic", parents=[common], help="invariant geodesic obstruction")
    sp.add_argument("files", nargs="+", metavar="FILE")
    sp = sub.add_parser("family", parents=[common], help="write a family presentation")
    sp.add_argument("family", choices=["split", "el", "truncated", "flag"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--weights")
    sp.add_argument("--exponents")
    sp.add_argument("--out")
    sp = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    sp.add_argument("oracle", choices=["monomial-search", "derivation", "congruence"])
    sp.add_argument("files", nargs="*", metavar="FILE")
    sp.add_argument("--cycles", type=int)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--degree", type=int)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        report, code, as_json = run(argv)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # argparse
        return 2 if e.code else 0
    if isinstance(report, str):
        sys.stdout.write(report)
        return code
    if "--timing" in argv:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(render_json(report) if as_json else render_text(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
