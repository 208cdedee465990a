"""Document-level operation registry.

Each op takes a plain JSON-style dict and returns one (strings for
rationals, ints, bools, lists). The CLI subcommands and the golden
corpus rows both dispatch through this table so there is exactly one
serialization of every computation.
"""

from __future__ import annotations

from . import acc, bfun, bounds, lct, newton, pairs
from .errors import DomainError
from .poly import parse_poly
from .rational import fmt, fmt_extended, rat


def _poly(args, key="poly"):
    try:
        text = args[key]
    except KeyError:
        raise DomainError(f"missing field {key!r}") from None
    return parse_poly(text, args.get("nvars"))


def _rats(values):
    return [rat(v) for v in values]


def _threshold_doc(res: lct.ThresholdResult) -> dict:
    return {
        "value": fmt_extended(res.value),
        "method": res.method.value,
        "certificate": None if res.certificate is None else [fmt(c) for c in res.certificate],
        "exact": res.exact,
    }


def op_parse(args):
    f = _poly(args)
    return {"canonical": str(f), "nvars": f.n, "zero": f.is_zero}


def op_weighted_multiplicity(args):
    f = _poly(args)
    return {"value": fmt(f.weighted_multiplicity(_rats(args["weights"])))}


def op_multiplicity(args):
    return {"value": _poly(args).multiplicity()}


def op_truncate(args):
    return {"canonical": str(_poly(args).truncate(int(args["degree"])))}


def op_classify(args):
    cls = pairs.classify(pairs.config_from_doc(args["config"]))
    return {
        "is_terminal": cls.is_terminal,
        "is_canonical": cls.is_canonical,
        "is_klt": cls.is_klt,
        "is_plt": cls.is_plt,
        "is_lc": cls.is_lc,
        "label": cls.label,
    }


def op_discrep(args):
    config = pairs.config_from_doc(args["config"])
    return {
        "discrep": fmt_extended(pairs.discrep_snc(config)),
        "totaldiscrep": fmt_extended(pairs.totaldiscrep_snc(config)),
    }


def op_valuation_discrepancy(args):
    config = None
    if args.get("coeffs") is not None:
        config = pairs.SncPairConfig(args["coeffs"])
    f = _poly(args) if args.get("poly") is not None else None
    value = pairs.monomial_valuation_discrepancy(
        tuple(int(w) for w in args["weights"]),
        config=config,
        c=rat(args.get("c", 0)),
        f=f,
    )
    return {"value": fmt(value)}


def op_lct_resolution(args):
    res = pairs.resolution_from_doc(args["resolution"])
    return _threshold_doc(lct.lct_resolution(res))


def op_cover(args):
    config = pairs.config_from_doc(args["config"])
    out = pairs.cyclic_cover_transform(config, int(args["component"]), int(args["degree"]))
    return pairs.config_to_doc(out)


def _lp(args) -> newton.WeightLP:
    if "support" in args:
        support = [tuple(int(e) for e in m) for m in args["support"]]
        if not support:
            raise DomainError("empty support")
        return newton.WeightLP(len(support[0]), tuple(support))
    return newton.weight_lp_from_poly(_poly(args))


def _lp_doc(res: newton.LPResult) -> dict:
    return {
        "value": fmt(res.value),
        "w": [fmt(w) for w in res.w],
        "active": sorted(res.active),
    }


def op_lp_minimize(args):
    return _lp_doc(newton.lp_minimize(_lp(args)))


def op_lp_oracle(args):
    return _lp_doc(newton.vertex_enum_oracle(_lp(args)))


def op_lct_newton(args):
    nb = newton.lct_newton_bound(_poly(args))
    return {
        "bound": fmt(nb.bound),
        "certificate": [fmt(w) for w in nb.certificate],
        "exactness": nb.exactness,
    }


def op_lct_monomial_sum(args):
    return _threshold_doc(lct.lct_monomial_sum([int(b) for b in args["exponents"]]))


def op_lct_product_form(args):
    return _threshold_doc(
        lct.lct_product_form([int(x) for x in args["a"]], [int(x) for x in args["b"]])
    )


def op_lct_weighted(args):
    return _threshold_doc(
        lct.lct_weighted_homogeneous(
            _poly(args), _rats(args["weights"]), bool(args.get("nondegenerate", False))
        )
    )


def op_lct_branch(args):
    return _threshold_doc(lct.lct_plane_branch(int(args["mult"]), int(args["puiseux"])))


def op_lct_tangent_cone(args):
    out = lct.lct_tangent_cone_bounds(_poly(args), bool(args.get("tc_lc", False)))
    if isinstance(out, lct.BoundInterval):
        return {"lower": fmt(out.lower), "upper": fmt(out.upper)}
    return _threshold_doc(out)


def op_lct_direct_sum(args):
    return _threshold_doc(lct.lct_direct_sum(rat(args["c1"]), rat(args["c2"])))


def op_lct_power(args):
    return {"value": fmt(lct.lct_power(rat(args["c0"]), int(args["k"])))}


def op_check_combination(args):
    holds = lct.check_combination_inequalities(
        rat(args["cf"]), rat(args["cg"]), rat(args["sum"]), rat(args["prod"])
    )
    return {"holds": holds}


def op_truncation_bound(args):
    return {"value": fmt(lct.truncation_bound(int(args["nvars"]), int(args["degree"])))}


def op_quasiadjunction(args):
    return {"value": lct.quasiadjunction_psi(rat(args["c0"]), int(args["m"]))}


def op_bfun_yano(args):
    spectrum = bfun.yano_spectrum(_rats(args["weights"]))
    roots = bfun.reduced_bpoly(spectrum)
    return {
        "spectrum": [[e, q] for e, q in spectrum.to_pairs()],
        "reduced_roots": [fmt(r) for r in roots.roots],
        "largest_root_full": fmt(bfun.largest_root_full(roots)),
    }


def op_bfun_check_lct(args):
    ms = [int(m) for m in args["exponents"]]
    spectrum = bfun.yano_spectrum([rat(1) / m for m in ms])
    largest = bfun.largest_root_full(bfun.reduced_bpoly(spectrum))
    threshold = lct.lct_monomial_sum(ms).value
    return {
        "holds": bfun.check_lct_relation(ms),
        "largest_root": fmt(largest),
        "lct": fmt(threshold),
    }


def op_bfun_candidates(args):
    res = pairs.resolution_from_doc(args["resolution"])
    roots = bfun.candidate_roots(res, int(args["e_max"]))
    return {"roots": [fmt(r) for r in sorted(roots)]}


def op_acc_sylvester(args):
    return {"sequence": list(acc.sylvester_sequence(int(args["k"])))}


def op_acc_delta_prime(args):
    return {"value": fmt(acc.delta_prime_candidate(int(args["n"])))}


def op_acc_enum_f(args):
    elements = acc.enumerate_Fn_above(int(args["n"]), rat(args["theta"]))
    return {
        "elements": [{"value": fmt(e.value), "witness": list(e.witness)} for e in elements]
    }


def op_acc_max_f(args):
    return {"value": fmt(acc.max_Fn_below_one(int(args["n"])))}


def op_acc_chain_g(args):
    chain = acc.gn_increasing_chain(
        [int(x) for x in args["a"]],
        [int(x) for x in args["b_prefix"]],
        int(args["count"]),
        int(args.get("b_start", 1)),
    )
    return {
        "limit": fmt(chain.limit),
        "values": [fmt(e.value) for e in chain.elements],
        "b_last": [e.b[-1] for e in chain.elements],
    }


def op_acc_accumulation(args):
    target = acc.FnElement(rat(args["target_value"]), args["target_witness"])
    chain = acc.accumulation_witness(int(args["n"]), target)
    count = int(args.get("count", 5))
    return {
        "b0": chain.b0,
        "limit": fmt(chain.limit),
        "values": [fmt(e.value) for e in chain.elements(count)],
    }


def op_bounds(args):
    report = bounds.fujita_type_bounds(int(args["dim"]))
    return {"m_free": report.m_free, "m_separate": report.m_separate}


def op_verify_58(args):
    return {"holds": bounds.verify_condition_58(_rats(args["c"]))}


def op_verify_59(args):
    check = bounds.verify_condition_59(_rats(args["c"]))
    return {"holds": check.holds, "majorant": fmt(check.majorant_sum)}


OPS = {
    "parse": op_parse,
    "weighted-multiplicity": op_weighted_multiplicity,
    "multiplicity": op_multiplicity,
    "truncate": op_truncate,
    "classify": op_classify,
    "discrep": op_discrep,
    "valuation-discrepancy": op_valuation_discrepancy,
    "lct-resolution": op_lct_resolution,
    "cover": op_cover,
    "lp-minimize": op_lp_minimize,
    "lp-oracle": op_lp_oracle,
    "lct-newton": op_lct_newton,
    "lct-monomial-sum": op_lct_monomial_sum,
    "lct-product-form": op_lct_product_form,
    "lct-weighted": op_lct_weighted,
    "lct-branch": op_lct_branch,
    "lct-tangent-cone": op_lct_tangent_cone,
    "lct-direct-sum": op_lct_direct_sum,
    "lct-power": op_lct_power,
    "check-combination": op_check_combination,
    "truncation-bound": op_truncation_bound,
    "quasiadjunction": op_quasiadjunction,
    "bfun-yano": op_bfun_yano,
    "bfun-check-lct": op_bfun_check_lct,
    "bfun-candidates": op_bfun_candidates,
    "acc-sylvester": op_acc_sylvester,
    "acc-delta-prime": op_acc_delta_prime,
    "acc-enum-f": op_acc_enum_f,
    "acc-max-f": op_acc_max_f,
    "acc-chain-g": op_acc_chain_g,
    "acc-accumulation": op_acc_accumulation,
    "bounds": op_bounds,
    "verify-58": op_verify_58,
    "verify-59": op_verify_59,
}


def dispatch(op: str, args: dict) -> dict:
    try:
        fn = OPS[op]
    except KeyError:
        raise DomainError(f"unknown operation {op!r}") from None
    return fn(args)
