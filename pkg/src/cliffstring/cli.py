"""Batch front end: seeded property sweeps and JSON/CSV reports.

Exit codes: 0 all checks pass, 2 bad input (unreadable file, malformed
flags or data), 3 at least one check failed.  Reports are plain JSON with
sorted keys and no timestamps, so identical configuration and seed give
byte-identical output.
"""

import argparse
import csv
import json
import os
import sys

import numpy as np

from .fixtures import (
    random_degenerate_hermitian,
    random_hermitian,
    random_octonion,
    random_spectrum,
    random_spinor,
)
from .lorentz import (
    LorentzFactor,
    NestedTransform,
    act_vector,
    boost_generator,
    compatibility_residual,
    compatibility_residual_raw,
    contraction_residual,
    make_factor,
    phase_generator,
    reflection_factor,
    rotation_generator,
)
from .matrices import OctHermitian, omat_mul
from .minkowski import det2
from .octonion import Octonion, alternativity_check
from .quantum_rep import (
    build_canonical,
    canonical_residual,
    integrality_residual,
    jz_spectrum,
    lorentz_closure_residual,
    m0_matrices,
    mixed_algebra_residual,
    quaternion_pairs,
    spinor_tensor_roundtrip_residual,
    su2_closure_residual,
    tensor_algebra_residual,
    tensor_form,
    three_vector_form,
)
from .resolve import reconstruction_residual, resolve_hermitian, vectors
from .string_modes import (
    charge_density_coefficients,
    charge_quadrature,
    divergence_residual,
    emission_bound,
    endpoint_flux,
    eom_residual,
    redshift,
    spectrum_from_json,
    spectrum_to_json,
)
from .string_modes import _current_raw, _coordinates_raw

SEED_ENV = "CLIFFSTRING_SEED"

# Default tolerance per named check, overridable with --tol.<name>.
DEFAULT_TOLS = {
    "octonion-check": {
        "norm_composition": 1e-12,
        "alternativity": 1e-12,
        "conj_antiautomorphism": 1e-12,
        "nonassociativity_witness": 1e-12,
    },
    "lorentz-check": {
        "det": 1e-10,
        "compatibility": 1e-10,
        "contraction": 1e-10,
        "mixed_control": 0.1,  # pass when the residual EXCEEDS this
    },
    "string-modes": {
        "divergence": 1e-6,
        "divergence_ratio": 0.5,
        "endpoint_flux": 1e-12,
        "charge_quadrature": 1e-8,
        "eom": 1e-4,
        "eom_ratio": 0.5,
        "hermiticity": 1e-10,
        "evenness": 1e-8,
    },
    "quantum-check": {
        "canonical": 1e-10,
        "mixed": 1e-10,
        "closure": 1e-10,
        "su2": 1e-10,
        "tensor": 1e-10,
        "roundtrip": 1e-10,
        "jz_integrality": 1e-9,
    },
}


class InputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""


# -- plumbing ------------------------------------------------------------------


def _resolve_seed(flag_value) -> int:
    if flag_value is not None:
        return int(flag_value)
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{SEED_ENV} must be an integer, got {env!r}")
    return 0


def _extract_dotted_tols(argv):
    """Pull --tol.<name> VALUE (or --tol.<name>=VALUE) pairs out of argv.

    Done before argparse so the plain --tol flag of `resolve` is untouched.
    """
    tols = {}
    rest = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--tol."):
            name, sep, val = tok[len("--tol."):].partition("=")
            if not sep:
                i += 1
                if i >= len(argv):
                    raise InputError(f"--tol.{name} needs a value")
                val = argv[i]
            try:
                parsed = float(val)
            except ValueError:
                raise InputError(f"--tol.{name} needs a number, got {val!r}")
            if not parsed > 0:
                raise InputError(f"--tol.{name} must be positive")
            if not name:
                raise InputError("--tol. needs a check name")
            tols[name] = parsed
        else:
            rest.append(tok)
        i += 1
    return tols, rest


def _merge_tols(command: str, overrides: dict) -> dict:
    merged = dict(DEFAULT_TOLS[command])
    for name, val in overrides.items():
        if name not in merged:
            known = ", ".join(sorted(merged))
            raise InputError(f"unknown tolerance {name!r} for {command}; known: {known}")
        merged[name] = val
    return merged


def _plain(x):
    """Recursively convert numpy scalars/arrays so json.dumps accepts them."""
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    return x


def _dump_json(obj, path) -> None:
    text = json.dumps(_plain(obj), indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _check(max_residual: float, tol: float, trials: int, above: bool = False) -> dict:
    ok = max_residual > tol if above else max_residual <= tol
    entry = {
        "max_residual": float(max_residual),
        "tolerance": float(tol),
        "trials": int(trials),
        "pass": bool(ok),
    }
    if above:
        entry["pass_when"] = "above"
    return entry


def _report(command: str, config: dict, checks: dict, extra: dict = None) -> dict:
    rep = {
        "command": command,
        "config": config,
        "checks": checks,
        "overall_pass": all(c["pass"] for c in checks.values()),
    }
    if extra:
        rep.update(extra)
    return rep


def _finish(report: dict, path) -> int:
    _dump_json(report, path)
    return 0 if report["overall_pass"] else 3


# -- octonion-check ------------------------------------------------------------


def cmd_octonion_check(args, overrides) -> int:
    seed = _resolve_seed(args.seed)
    tols = _merge_tols("octonion-check", overrides)
    rng = np.random.default_rng(seed)
    worst = {"norm_composition": 0.0, "alternativity": 0.0, "conj_antiautomorphism": 0.0}
    for _ in range(args.trials):
        a = random_octonion(rng)
        b = random_octonion(rng)
        na, nb = a.norm(), b.norm()
        ab = a * b
        worst["norm_composition"] = max(
            worst["norm_composition"], abs(ab.norm() - na * nb) / (na * nb)
        )
        worst["alternativity"] = max(
            worst["alternativity"], alternativity_check(a, b) / (max(na, nb) ** 2 * min(na, nb))
        )
        worst["conj_antiautomorphism"] = max(
            worst["conj_antiautomorphism"],
            (ab.conj() - b.conj() * a.conj()).norm() / (na * nb),
        )
    e1, e2, e4 = Octonion.unit(1), Octonion.unit(2), Octonion.unit(4)
    witness_gap = ((e1 * e2) * e4 - e1 * (e2 * e4)).norm()
    checks = {name: _check(worst[name], tols[name], args.trials) for name in worst}
    checks["nonassociativity_witness"] = _check(
        abs(witness_gap - 2.0), tols["nonassociativity_witness"], 1
    )
    config = {"seed": seed, "trials": args.trials, "tolerances": tols}
    return _finish(_report("octonion-check", config, checks), args.report)


# -- resolve ---------------------------------------------------------------


def cmd_resolve(args, overrides) -> int:
    if overrides:
        raise InputError("resolve takes a single --tol flag, not --tol.<name>")
    obj = _load_json(args.input)
    try:
        h = OctHermitian.from_json(obj, tol=max(args.tol, 1e-12))
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad Hermitian matrix in {args.input}: {exc}")
    res = resolve_hermitian(h, tol=args.tol)
    residual = reconstruction_residual(res, h)
    ok = residual <= args.tol
    out = {
        "command": "resolve",
        "n": res.n,
        "a": res.a.tolist(),
        "b": res.b.tolist(),
        "vectors": [v.to_json() for v in vectors(res)],
        "max_residual": float(residual),
        "tolerance": float(args.tol),
        "pass": bool(ok),
    }
    _dump_json(out, args.output)
    return 0 if ok else 3


# -- lorentz-check -----------------------------------------------------------


def _random_factor(rng: np.random.Generator) -> LorentzFactor:
    kind = int(rng.integers(4))
    if kind == 3:
        return reflection_factor()
    t = float(rng.uniform(-1.0, 1.0))
    if kind == 0:
        return make_factor(boost_generator(), t)
    if kind == 1:
        return make_factor(rotation_generator(int(rng.integers(8))), t)
    return make_factor(phase_generator(1 + int(rng.integers(7))), t)


def _mixed_control_residual(rng: np.random.Generator) -> float:
    """Compatibility residual of an invalid two-subspace 'factor'.

    The octonionic product of an e_1 rotation and an e_2 phase is not a
    single-subspace matrix; applying it in one sandwich must fail visibly.
    """
    f1 = make_factor(rotation_generator(1), 0.8)
    f2 = make_factor(phase_generator(2), 0.9)
    mixed = omat_mul(f1.s, f2.s)
    return compatibility_residual_raw(mixed, random_spinor(rng))


def cmd_lorentz_check(args, overrides) -> int:
    seed = _resolve_seed(args.seed)
    tols = _merge_tols("lorentz-check", overrides)
    rng = np.random.default_rng(seed)
    worst = {"det": 0.0, "compatibility": 0.0, "contraction": 0.0}
    for _ in range(args.trials):
        depth = 1 + int(rng.integers(args.nest_depth))
        factors = [_random_factor(rng) for _ in range(depth)]
        transform = NestedTransform(factors)
        x = random_hermitian(rng, 2)
        d0 = det2(x)
        scale = 1.0
        for f in factors:
            scale *= f.det**2  # vector action picks up |det S|^2, so +-1 both preserve
        d1 = det2(act_vector(transform, x), tol=1e-6)
        worst["det"] = max(worst["det"], abs(d1 - scale * d0) / max(1.0, abs(d0)))
        v = random_spinor(rng)
        chi, psi = random_spinor(rng), random_spinor(rng)
        for f in factors:
            worst["compatibility"] = max(
                worst["compatibility"], compatibility_residual(f, v)
            )
            worst["contraction"] = max(
                worst["contraction"], contraction_residual(f, chi, psi)
            )
    mixed = _mixed_control_residual(rng)
    checks = {
        "det": _check(worst["det"], tols["det"], args.trials),
        "compatibility": _check(worst["compatibility"], tols["compatibility"], args.trials),
        "contraction": _check(worst["contraction"], tols["contraction"], args.trials),
        "mixed_control": _check(mixed, tols["mixed_control"], 1, above=True),
    }
    config = {
        "seed": seed,
        "trials": args.trials,
        "nest_depth": args.nest_depth,
        "tolerances": tols,
    }
    extra = {
        "max_det_residual": float(worst["det"]),
        "max_compat_residual": float(worst["compatibility"]),
        "max_contraction_residual": float(worst["contraction"]),
    }
    return _finish(_report("lorentz-check", config, checks, extra), args.report)


# -- string-modes ----------------------------------------------------------


_TAUS = (0.3, 0.9, 1.7)
_SIGMAS = (0.35, 1.1, 2.2, 2.9)


def _write_grid_csv(ms, path, n_sigma: int) -> None:
    taus = [0.0, 0.5 * np.pi, np.pi, 1.5 * np.pi]
    sigmas = np.linspace(0.0, np.pi, n_sigma + 1)
    header = ["tau", "sigma"]
    for name in ("X", "Jtau", "Jsigma"):
        for a in range(2):
            for b in range(2):
                header += [f"{name}_{a}{b}_re", f"{name}_{a}{b}_im"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for tau in taus:
            for sigma in sigmas:
                x = _coordinates_raw(ms, tau, sigma)
                jt, js = _current_raw(ms, tau, sigma)
                row = [f"{tau:.17g}", f"{sigma:.17g}"]
                for m in (x, jt, js):
                    for a in range(2):
                        for b in range(2):
                            row += [f"{m[a, b].real:.17g}", f"{m[a, b].imag:.17g}"]
                writer.writerow(row)


def cmd_string_modes(args, overrides) -> int:
    tols = _merge_tols("string-modes", overrides)
    obj = _load_json(args.spectrum)
    try:
        ms = spectrum_from_json(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad spectrum in {args.spectrum}: {exc}")

    points = [(t, s) for t in _TAUS for s in _SIGMAS]
    currents = [_current_raw(ms, t, s) for t, s in points]
    jscale = max(1.0, max(float(np.max(np.abs(c))) for pair in currents for c in pair))
    coords = [_coordinates_raw(ms, t, s) for t, s in points]
    xscale = max(1.0, max(float(np.max(np.abs(x))) for x in coords))

    div_h = divergence_residual(ms, points, h=1e-3)
    div_2h = divergence_residual(ms, points, h=2e-3)
    div_ratio = div_2h / div_h if div_h > 0 else 4.0
    flux = endpoint_flux(ms, _TAUS)
    coeffs = charge_density_coefficients(ms)
    m0 = coeffs[0]
    mscale = max(1.0, float(np.max(np.abs(m0))))
    quad_gap = max(
        float(np.max(np.abs(charge_quadrature(ms, t, args.grid) - m0))) for t in _TAUS
    )
    eom_h = eom_residual(ms, points, h=1e-3)
    eom_2h = eom_residual(ms, points, h=2e-3)
    eom_ratio = eom_2h / eom_h if eom_h > 0 else 4.0
    herm = max(float(np.max(np.abs(x - x.conj().T))) for x in coords)
    even = max(
        float(np.max(np.abs(_coordinates_raw(ms, t, s) - _coordinates_raw(ms, t, -s))))
        for t, s in points
    )

    n_pts = len(points)
    checks = {
        "divergence": _check(div_h / jscale, tols["divergence"], n_pts),
        "divergence_ratio": _check(abs(div_ratio - 4.0), tols["divergence_ratio"], n_pts),
        "endpoint_flux": _check(flux / jscale, tols["endpoint_flux"], len(_TAUS)),
        "charge_quadrature": _check(quad_gap / mscale, tols["charge_quadrature"], len(_TAUS)),
        "eom": _check(eom_h / jscale, tols["eom"], n_pts),
        "eom_ratio": _check(abs(eom_ratio - 4.0), tols["eom_ratio"], n_pts),
        "hermiticity": _check(herm / xscale, tols["hermiticity"], n_pts),
        "evenness": _check(even / xscale, tols["evenness"], n_pts),
    }
    config = {
        "spectrum": args.spectrum,
        "grid": args.grid,
        "tolerances": tols,
        "modes": sorted(ms.modes),
    }
    if args.output:
        _write_grid_csv(ms, args.output, args.grid)
    return _finish(_report("string-modes", config, checks), args.report)


# -- quantum-check -----------------------------------------------------------


def cmd_quantum_check(args, overrides) -> int:
    tols = _merge_tols("quantum-check", overrides)
    pairs = build_canonical(args.degree, args.hbar)
    space = pairs.space
    safe = space.safe_columns()
    a_ops, k_ops = quaternion_pairs(pairs)
    m0, m0d = m0_matrices(a_ops, k_ops)
    n, nd = three_vector_form(m0, m0d)
    mt = tensor_form(m0, m0d)
    vals = jz_spectrum(args.degree, args.hbar)

    residuals = {
        "canonical": canonical_residual(pairs),
        "mixed": mixed_algebra_residual(a_ops, k_ops, space, args.hbar),
        "closure": lorentz_closure_residual(m0, m0d, safe, args.hbar),
        "su2": su2_closure_residual(n, nd, safe, args.hbar),
        "tensor": tensor_algebra_residual(mt, safe, args.hbar),
        "roundtrip": spinor_tensor_roundtrip_residual(m0, mt),
        "jz_integrality": integrality_residual(vals, args.hbar),
    }
    checks = {name: _check(residuals[name], tols[name], 1) for name in residuals}
    config = {"degree": args.degree, "hbar": args.hbar, "tolerances": tols}
    extra = {
        "dimension": space.dim,
        "jz_spectrum": [float(v.real) for v in vals],
    }
    return _finish(_report("quantum-check", config, checks, extra), args.report)


# -- redshift ----------------------------------------------------------------


def cmd_redshift(args) -> int:
    try:
        z = redshift(args.t_emit, args.t_obsv)
    except ValueError as exc:
        raise InputError(str(exc))
    out = {"z": float(z)}
    if args.dt is not None or args.p is not None:
        if args.dt is None or args.p is None:
            raise InputError("emission bound needs both --dt and --p")
        try:
            out["emission_bound"] = float(emission_bound(args.dt, args.p, z))
        except ValueError as exc:
            raise InputError(str(exc))
    _dump_json(out, args.report)
    return 0


# -- gen-fixture -------------------------------------------------------------


def cmd_gen_fixture(args) -> int:
    seed = _resolve_seed(args.seed)
    rng = np.random.default_rng(seed)
    if args.kind == "hermitian":
        obj = random_hermitian(rng, args.n).to_json()
    elif args.kind == "spectrum":
        obj = spectrum_to_json(random_spectrum(rng))
    else:
        chi = random_spinor(rng)
        obj = {"components": [chi[0].c.tolist(), chi[1].c.tolist()]}
    _dump_json(obj, args.output)
    return 0


# -- argument parsing ---------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffstring",
        description="Property sweeps and reports for the cliffstring library.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("octonion-check", help="octonion algebra identities")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=_positive_int, default=10000)
    p.add_argument("--report", default=None, help="report path (default stdout)")

    p = sub.add_parser("resolve", help="factor a Hermitian matrix into vectors")
    p.add_argument("--input", required=True, help="Hermitian matrix JSON")
    p.add_argument("--tol", type=_positive_float, default=1e-12)
    p.add_argument("--output", default=None, help="result path (default stdout)")

    p = sub.add_parser("lorentz-check", help="nested transform invariants")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--nest-depth", type=_positive_int, default=5)
    p.add_argument("--report", default=None)

    p = sub.add_parser("string-modes", help="mode-spectrum diagnostics")
    p.add_argument("--spectrum", "--input", dest="spectrum", required=True)
    p.add_argument("--grid", type=_positive_int, default=512)
    p.add_argument("--output", default=None, help="CSV grid scan of X and J")
    p.add_argument("--report", default=None)

    p = sub.add_parser("quantum-check", help="polynomial-space operator algebra")
    p.add_argument("--degree", type=_positive_int, default=6)
    p.add_argument("--hbar", type=_positive_float, default=1.0)
    p.add_argument("--report", default=None)

    p = sub.add_parser("redshift", help="evaluate the redshift formula")
    p.add_argument("--t-emit", type=float, required=True)
    p.add_argument("--t-obsv", type=float, required=True)
    p.add_argument("--dt", type=float, default=None, help="observed period")
    p.add_argument("--p", type=float, default=None, help="momentum component")
    p.add_argument("--report", default=None)

    p = sub.add_parser("gen-fixture", help="write a reproducible random input file")
    p.add_argument("--kind", required=True, choices=("hermitian", "spectrum", "spinor"))
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--n", type=_positive_int, default=2, help="matrix size (hermitian)")
    p.add_argument("--output", default=None, help="fixture path (default stdout)")

    return parser


_HANDLERS = {
    "octonion-check": cmd_octonion_check,
    "resolve": cmd_resolve,
    "lorentz-check": cmd_lorentz_check,
    "string-modes": cmd_string_modes,
    "quantum-check": cmd_quantum_check,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        overrides, argv = _extract_dotted_tols(argv)
        args = _build_parser().parse_args(argv)
        if args.command == "redshift":
            if overrides:
                raise InputError("redshift has no named tolerances")
            return cmd_redshift(args)
        if args.command == "gen-fixture":
            if overrides:
                raise InputError("gen-fixture has no named tolerances")
            return cmd_gen_fixture(args)
        return _HANDLERS[args.command](args, overrides)
    except InputError as exc:
        print(f"cliffstring: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
