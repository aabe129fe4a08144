"""Command-line front end: ``qhopf <subcommand>``.

Subcommands
-----------
classify        Hermiticity/family classification of a parameter point.
verify-hopf     Symbolic Hopf-axiom suite plus the coefficient and G chains.
verify-rmatrix  Quasitriangularity and Yang-Baxter checks per sector.
tabulate        CSV table of G(n), F(n) and the coproduct coefficients.
convert-params  Dictionary between (kappa1, kappa2, gamma, G0) and
                (eps | q, alpha, beta, k).

Parameters are accepted either in oscillator form (--kappa1 --kappa2
--gamma1 [--gamma2 | --k] --g0) or in q-oscillator form (--eps | --q
--alpha --beta --k); mixing the two styles is a usage error.  ``classify``
additionally accepts the real-decomposition form (--xi --eta --gamma1
--gamma2).  A JSON --config file may supply the same keys; explicit flags
win.  Exit codes: 0 all checks passed, 1 some check failed or a numeric
overflow was reported, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .constraints import (HermiticityInput, OhSinghParams, classify_family,
                          classify_hermiticity, param_map_inverse, param_map_oh_singh,
                          pointwise_reality, verify_ci_conditions, verify_g_recursion)
from .expalg import EvaluationOverflow
from .fock import (build_rmatrix, build_rmatrix_oh_singh, check_quasitriangularity,
                   check_yang_baxter, check_yang_baxter_oh_singh,
                   compare_sector_operators)
from .hopf import (HopfOscillator, build_params, coproduct_weights, g_function,
                   structure_function)
from .report import CheckReport

DEFAULT_SECTOR_CAP = 8

_OSC_KEYS = ("kappa1", "kappa2", "gamma1", "gamma2", "g0")
_OHS_KEYS = ("eps", "q", "alpha", "beta")
_HERM_KEYS = ("xi", "eta")


class UsageError(Exception):
    pass


def _to_complex(value):
    if value is None:
        return None
    if isinstance(value, complex):
        return value
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        try:
            return complex(value.replace("i", "j").replace(" ", ""))
        except ValueError as exc:
            raise UsageError(f"cannot parse complex value {value!r}") from exc
    raise UsageError(f"cannot parse complex value {value!r}")


def _to_real(value):
    z = _to_complex(value)
    if z is None:
        return None
    if z.imag != 0:
        raise UsageError(f"expected a real value, got {value!r}")
    return z.real


def _to_int(value):
    if value is None:
        return None
    return int(value)


class _Values:
    """Merged view of CLI flags over the optional JSON config."""

    def __init__(self, ns, config):
        self.ns = vars(ns)
        self.config = config

    def get(self, key):
        v = self.ns.get(key)
        if v is not None:
            return v
        return self.config.get(key)

    def has(self, key):
        return self.get(key) is not None


def _detect_style(vals):
    # gamma1/gamma2 belong to the oscillator and hermiticity styles; in the
    # q-oscillator style gamma is derived, so giving both is also mixing
    osc = [k for k in _OSC_KEYS if vals.has(k)]
    ohs = [k for k in _OHS_KEYS if vals.has(k)]
    herm = [k for k in _HERM_KEYS if vals.has(k)]
    if ohs and (osc or herm):
        raise UsageError("oscillator-style and q-oscillator-style parameters mixed")
    if ohs:
        return "ohsingh"
    if herm:
        return "hermiticity"
    if osc:
        return "oscillator"
    raise UsageError("no parameters given (try --kappa1/... or --eps/... )")


def _resolve_ohsingh(vals):
    eps = _to_real(vals.get("eps"))
    q = _to_real(vals.get("q"))
    if eps is not None and q is not None:
        raise UsageError("give either --eps or --q, not both")
    if q is not None:
        if q <= 0:
            raise UsageError("q must be positive")
        eps = math.log(q)
    if eps is None or vals.get("alpha") is None:
        raise UsageError("q-oscillator form needs --eps (or --q) and --alpha")
    try:
        return OhSinghParams(eps, _to_real(vals.get("alpha")),
                             _to_real(vals.get("beta")) or 0.0,
                             _to_int(vals.get("k")) or 0)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _resolve_oscillator(vals):
    kappa1 = _to_complex(vals.get("kappa1"))
    kappa2 = _to_complex(vals.get("kappa2"))
    if kappa1 is None or kappa2 is None:
        raise UsageError("oscillator form needs --kappa1 and --kappa2")
    gamma1 = _to_real(vals.get("gamma1"))
    gamma1 = 0.0 if gamma1 is None else gamma1
    gamma2 = _to_real(vals.get("gamma2"))
    k = _to_int(vals.get("k"))
    if gamma2 is not None and k is not None:
        raise UsageError("give either --gamma2 or --k, not both")
    if gamma2 is None:
        if k is not None:
            xi = (kappa1 - kappa2).real
            if xi == 0:
                raise UsageError("--k needs a nonzero real part of kappa1 - kappa2")
            gamma2 = (2 * k + 1) * math.pi / (2 * xi)
        else:
            gamma2 = 0.0
    g0 = _to_complex(vals.get("g0"))
    g0 = 1.0 + 0j if g0 is None else g0
    try:
        return build_params(kappa1, kappa2, complex(gamma1, gamma2), g0)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _resolve_params(vals):
    style = _detect_style(vals)
    if style == "ohsingh":
        o = _resolve_ohsingh(vals)
        return param_map_oh_singh(o), o
    if style == "oscillator":
        return _resolve_oscillator(vals), None
    raise UsageError("this subcommand needs oscillator or q-oscillator parameters")


def _sector_limit(requested):
    cap = int(os.environ.get("QHOPF_MAX_SECTOR", str(DEFAULT_SECTOR_CAP)))
    return min(requested, cap), cap


# ------------------------------------------------------------------ commands
def _cmd_classify(vals):
    style = _detect_style(vals)
    if style == "hermiticity":
        h = HermiticityInput(_to_real(vals.get("xi")) or 0.0,
                             _to_real(vals.get("eta")) or 0.0,
                             _to_real(vals.get("gamma1")) or 0.0,
                             _to_real(vals.get("gamma2")) or 0.0)
        g0 = _to_real(vals.get("g0"))
        g0 = 1.0 if g0 is None else g0
        try:
            verdict = classify_hermiticity(h, g_slope=g0)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rep = CheckReport(params={"xi": h.xi, "eta": h.eta, "gamma1": h.gamma1,
                                  "gamma2": h.gamma2, "g0": g0})
        rep.params["verdict"] = verdict.to_dict()
        rep.add("hermiticity-classification", True, 0.0,
                f"family={verdict.family} hermitian={verdict.hermitian}")
        worst, witness = pointwise_reality(h, g0)
        agree = verdict.hermitian == (worst <= 1e-10)
        rep.add("classification-pointwise-agreement", agree, worst,
                f"max |Im G(n)| / max |G(n)| at n={witness}")
        return rep
    params, _ = _resolve_params(vals)
    verdict = classify_family(params)
    rep = CheckReport(params=params.to_dict())
    rep.params["verdict"] = verdict.to_dict()
    rep.add("family-classification", True, 0.0,
            f"family={verdict.family} hermitian={verdict.hermitian}")
    return rep


def _cmd_verify_hopf(vals):
    params, _ = _resolve_params(vals)
    max_order = _to_int(vals.get("max_order")) or 6
    if not 0 <= max_order <= 12:
        raise UsageError("--max-order must lie in 0..12")
    algebra = HopfOscillator(params)
    rep = CheckReport(params=params.to_dict())
    rep.extend(algebra.check_axioms(), prefix="hopf/")
    rep.extend(verify_ci_conditions(params, max_order=max_order), prefix="coeff/")
    rep.extend(verify_g_recursion(params, max_order=min(max_order + 2, 10)),
               prefix="g/")
    return rep


def _cmd_verify_rmatrix(vals, oh_singh_mode, dump_path):
    requested = _to_int(vals.get("max_sector")) or 6
    m_max, cap = _sector_limit(requested)
    rep = CheckReport()
    if oh_singh_mode:
        o = _resolve_ohsingh(vals)
        params = param_map_oh_singh(o)
        rep.params = {"oh_singh": o.to_dict(), "mapped": params.to_dict(),
                      "max_sector": m_max}
        r_os = build_rmatrix_oh_singh(o, m_max)
        r_gen = build_rmatrix(params, m_max)
        worst, per = compare_sector_operators(r_os, r_gen)
        for m, r in per.items():
            rep.add(f"realform-equivalence[M={m}]", r <= 1e-10, r)
        rep.extend(check_quasitriangularity(params, m_max), prefix="qt/")
        rep.extend(check_yang_baxter_oh_singh(o, m_max), prefix="ybe/")
        dump_op = r_os
    else:
        params, _ = _resolve_params(vals)
        if params.branch != "generic":
            raise UsageError(f"the R-matrix needs the generic branch, got {params.branch}")
        rep.params = params.to_dict()
        rep.params["max_sector"] = m_max
        rep.extend(check_quasitriangularity(params, m_max), prefix="qt/")
        rep.extend(check_yang_baxter(params, m_max), prefix="ybe/")
        dump_op = build_rmatrix(params, m_max)
    if requested > cap:
        rep.params["max_sector_capped_at"] = cap
    if dump_path:
        payload = dump_op.to_payload(rep.params)
        with open(dump_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
    return rep


def _cmd_tabulate(vals, out):
    params, _ = _resolve_params(vals)
    n_max = _to_int(vals.get("n_max")) or 10
    g = g_function(params)
    f = structure_function(params)
    w = coproduct_weights(params)
    cols = [("g", g), ("f", f)] + w.named()
    rep = CheckReport(params=params.to_dict())
    header = ["n"]
    for name, _ in cols:
        header += [f"{name}_re", f"{name}_im"]
    lines = [",".join(header)]
    try:
        for n in range(n_max + 1):
            row = [str(n)]
            for _, fn in cols:
                z = fn(n)
                row += [f"{z.real:.17g}", f"{z.imag:.17g}"]
            lines.append(",".join(row))
    except EvaluationOverflow as exc:
        rep.add("tabulate", False, float("inf"), f"numeric overflow: {exc}")
        return rep
    print("\n".join(lines), file=out)
    rep.add("tabulate", True, 0.0, f"{n_max + 1} rows")
    return rep


def _cmd_convert(vals):
    style = _detect_style(vals)
    rep = CheckReport()
    if style == "ohsingh":
        o = _resolve_ohsingh(vals)
        params = param_map_oh_singh(o)
        rep.params = {"from": o.to_dict(), "to": params.to_dict()}
        back = param_map_inverse(params)
        r = max(abs(back.eps - o.eps), abs(back.alpha - o.alpha),
                abs(back.beta - o.beta), abs(back.k - o.k))
        rep.add("round-trip", r <= 1e-9, r)
    else:
        params = _resolve_oscillator(vals)
        try:
            o = param_map_inverse(params)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rep.params = {"from": params.to_dict(), "to": o.to_dict()}
        again = param_map_oh_singh(o)
        r = max(abs(again.kappa - params.kappa), abs(again.gamma - params.gamma),
                abs(again.g0 - params.g0))
        rep.add("round-trip", r <= 1e-9, r)
    return rep


# -------------------------------------------------------------------- parser
def _add_param_flags(sp):
    for key in ("kappa1", "kappa2", "g0"):
        sp.add_argument(f"--{key}", type=str, default=None)
    for key in ("gamma1", "gamma2", "xi", "eta", "eps", "q", "alpha", "beta"):
        sp.add_argument(f"--{key}", type=float, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--config", type=str, default=None,
                    help="JSON file providing the same keys; flags override it")
    sp.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhopf",
        description="verification toolkit for deformed oscillator Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="hermiticity / family classification")
    _add_param_flags(sp)

    sp = sub.add_parser("verify-hopf", help="symbolic Hopf-axiom and chain checks")
    _add_param_flags(sp)
    sp.add_argument("--max-order", dest="max_order", type=int, default=None)

    sp = sub.add_parser("verify-rmatrix",
                        help="quasitriangularity and Yang-Baxter checks")
    _add_param_flags(sp)
    sp.add_argument("--max-sector", dest="max_sector", type=int, default=None)
    sp.add_argument("--oh-singh", dest="oh_singh", action="store_true",
                    help="build the R-matrix from the q-oscillator form")
    sp.add_argument("--dump-blocks", dest="dump_blocks", type=str, default=None,
                    help="write the R-matrix sector blocks to a JSON file")

    sp = sub.add_parser("tabulate", help="CSV table of G, F and the coefficients")
    _add_param_flags(sp)
    sp.add_argument("--n-max", dest="n_max", type=int, default=None)

    sp = sub.add_parser("convert-params", help="parameter dictionary, both ways")
    _add_param_flags(sp)
    return parser


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise UsageError("config must be a JSON object")
    return config


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    try:
        vals = _Values(ns, _load_config(ns.config))
        if ns.command == "classify":
            rep = _cmd_classify(vals)
        elif ns.command == "verify-hopf":
            rep = _cmd_verify_hopf(vals)
        elif ns.command == "verify-rmatrix":
            rep = _cmd_verify_rmatrix(vals, ns.oh_singh, ns.dump_blocks)
        elif ns.command == "tabulate":
            rep = _cmd_tabulate(vals, sys.stdout)
        else:
            rep = _cmd_convert(vals)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # parameter-level failures surfaced by the library (vanishing
        # series normalization, out-of-image inversions, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EvaluationOverflow as exc:
        rep = CheckReport()
        rep.add("numeric-overflow", False, float("inf"), str(exc))
        if ns.format == "json":
            print(rep.to_json())
        else:
            print("\n".join(rep.summary_lines()))
        return 1
    if ns.format == "json":
        print(rep.to_json())
    else:
        print("\n".join(rep.summary_lines()))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
