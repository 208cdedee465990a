"""Command-line interface.

One structured JSON document per invocation on stdout, diagnostics on
stderr. Exit codes: 0 success, 2 usage errors (argparse), 3 malformed
or out-of-domain input, 4 internal invariant violations (including
golden-corpus mismatches).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .errors import PairlabError
from .ops import dispatch

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3
EXIT_INVARIANT = 4


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _read_doc(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _csv_list(text: str) -> list:
    items = [part.strip() for part in text.split(",")]
    if any(not part for part in items):
        raise PairlabError(f"malformed comma-separated list: {text!r}")
    return items


def _csv_ints(text: str) -> list:
    try:
        return [int(part) for part in _csv_list(text)]
    except ValueError:
        raise PairlabError(f"expected comma-separated integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairlab",
        description="Exact invariants of boundary pairs and hypersurface germs.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    p_lct = top.add_parser("lct", help="log canonical thresholds")
    lct_sub = p_lct.add_subparsers(dest="lct_command", required=True)

    p_newton = lct_sub.add_parser("newton", help="support LP bound with certificate")
    p_newton.add_argument("poly")
    p_newton.add_argument("--nvars", type=int, default=None)

    p_formula = lct_sub.add_parser("formula", help="closed forms")
    formula_sub = p_formula.add_subparsers(dest="formula_command", required=True)

    p_ms = formula_sub.add_parser("monomial-sum")
    p_ms.add_argument("--exponents", required=True)

    p_pf = formula_sub.add_parser("product-form")
    p_pf.add_argument("--a", required=True)
    p_pf.add_argument("--b", required=True)

    p_wh = formula_sub.add_parser("weighted")
    p_wh.add_argument("poly")
    p_wh.add_argument("--weights", required=True)
    p_wh.add_argument("--nvars", type=int, default=None)
    p_wh.add_argument("--nondegenerate", action="store_true")

    p_br = formula_sub.add_parser("branch")
    p_br.add_argument("--mult", type=int, required=True)
    p_br.add_argument("--puiseux", type=int, required=True)

    p_res = lct_sub.add_parser("resolution", help="minimum over resolution entries")
    p_res.add_argument("file")

    p_classify = top.add_parser("classify", help="singularity class of a configuration")
    p_classify.add_argument("file")

    p_discrep = top.add_parser("discrep", help="discrepancy infima of a configuration")
    p_discrep.add_argument("file")

    p_cover = top.add_parser("cover", help="cyclic cover coefficient transform")
    p_cover.add_argument("file")
    p_cover.add_argument("--component", type=int, required=True)
    p_cover.add_argument("--degree", type=int, required=True)

    p_bfun = top.add_parser("bfun", help="spectra and b-polynomial roots")
    bfun_sub = p_bfun.add_subparsers(dest="bfun_command", required=True)

    p_yano = bfun_sub.add_parser("yano")
    p_yano.add_argument("--weights", required=True)

    p_chk = bfun_sub.add_parser("check-lct")
    p_chk.add_argument("--exponents", required=True)

    p_acc = top.add_parser("acc", help="threshold-set exploration")
    acc_sub = p_acc.add_subparsers(dest="acc_command", required=True)

    p_enum = acc_sub.add_parser("enum-f")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--theta", required=True)

    p_chain = acc_sub.add_parser("chain-g")
    p_chain.add_argument("--a", required=True)
    p_chain.add_argument("--b-prefix", required=True)
    p_chain.add_argument("--count", type=int, default=10)
    p_chain.add_argument("--b-start", type=int, default=1)

    p_syl = acc_sub.add_parser("sylvester")
    p_syl.add_argument("--k", type=int, required=True)

    p_bounds = top.add_parser("bounds", help="effective base-point-freeness bounds")
    p_bounds.add_argument("--dim", type=int, required=True)

    p_corpus = top.add_parser("corpus", help="golden example corpus")
    corpus_sub = p_corpus.add_subparsers(dest="corpus_command", required=True)
    corpus_sub.add_parser("verify")

    return parser


def _run(ns: argparse.Namespace) -> int:
    if ns.command == "lct":
        if ns.lct_command == "newton":
            _emit(dispatch("lct-newton", {"poly": ns.poly, "nvars": ns.nvars}))
        elif ns.lct_command == "formula":
            if ns.formula_command == "monomial-sum":
                _emit(dispatch("lct-monomial-sum", {"exponents": _csv_ints(ns.exponents)}))
            elif ns.formula_command == "product-form":
                _emit(dispatch("lct-product-form", {"a": _csv_ints(ns.a), "b": _csv_ints(ns.b)}))
            elif ns.formula_command == "weighted":
                _emit(
                    dispatch(
                        "lct-weighted",
                        {
                            "poly": ns.poly,
                            "nvars": ns.nvars,
                            "weights": _csv_list(ns.weights),
                            "nondegenerate": ns.nondegenerate,
                        },
                    )
                )
            else:
                _emit(dispatch("lct-branch", {"mult": ns.mult, "puiseux": ns.puiseux}))
        else:
            _emit(dispatch("lct-resolution", {"resolution": _read_doc(ns.file)}))
    elif ns.command == "classify":
        _emit(dispatch("classify", {"config": _read_doc(ns.file)}))
    elif ns.command == "discrep":
        _emit(dispatch("discrep", {"config": _read_doc(ns.file)}))
    elif ns.command == "cover":
        _emit(
            dispatch(
                "cover",
                {"config": _read_doc(ns.file), "component": ns.component, "degree": ns.degree},
            )
        )
    elif ns.command == "bfun":
        if ns.bfun_command == "yano":
            _emit(dispatch("bfun-yano", {"weights": _csv_list(ns.weights)}))
        else:
            _emit(dispatch("bfun-check-lct", {"exponents": _csv_ints(ns.exponents)}))
    elif ns.command == "acc":
        if ns.acc_command == "enum-f":
            _emit(dispatch("acc-enum-f", {"n": ns.n, "theta": ns.theta}))
        elif ns.acc_command == "chain-g":
            _emit(
                dispatch(
                    "acc-chain-g",
                    {
                        "a": _csv_ints(ns.a),
                        "b_prefix": _csv_ints(ns.b_prefix),
                        "count": ns.count,
                        "b_start": ns.b_start,
                    },
                )
            )
        else:
            _emit(dispatch("acc-sylvester", {"k": ns.k}))
    elif ns.command == "bounds":
        _emit(dispatch("bounds", {"dim": ns.dim}))
    elif ns.command == "corpus":
        results = corpus.verify()
        failed = [r for r in results if not r.ok]
        for r in results:
            if r.ok:
                sys.stderr.write(f"ok {r.name}\n")
            else:
                sys.stderr.write(
                    f"FAIL {r.name}: expected {json.dumps(r.expect, sort_keys=True)} "
                    f"got {json.dumps(r.got, sort_keys=True)}\n"
                )
        _emit({"total": len(results), "passed": len(results) - len(failed), "failed": len(failed)})
        if failed:
            return EXIT_INVARIANT
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return _run(ns)
    except PairlabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: malformed input: {exc}\n")
        return EXIT_BAD_INPUT
    except AssertionError as exc:
        sys.stderr.write(f"internal invariant violation: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
