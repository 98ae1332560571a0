"""Command-line front end.

Subcommands map one-to-one onto the library: profile and convex emit
profiles of a symbol, multiphase / verify-finite-gap / conserve drive the
multi-phase machinery, sweep and sinusoidal drive the small-dispersion
checks.  All grids and truncation policies are fixed, so identical
invocations produce byte-identical artifacts.

Exit status: 0 on success or a passing check, 1 on a failing check, 2 on
input errors (malformed JSON, invariant violations, truncation cap
exceeded).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import lax, multiphase, profiles, smalldisp, symbol

DEFAULT_N_CAP = 4096


class InputError(ValueError):
    """Anything wrong with flags, files, or schemas."""


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _load_symbol(spec: str) -> symbol.FourierSymbol:
    """cosine:A, constant:A, or a path to a symbol JSON file."""
    if spec.startswith("cosine:"):
        return symbol.cosine(float(spec.split(":", 1)[1]))
    if spec.startswith("constant:"):
        return symbol.constant(float(spec.split(":", 1)[1]))
    return symbol.symbol_from_json_dict(_load_json(spec))


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse float list {text!r}") from exc


def _parse_complexes(text: str) -> list[complex]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(complex(tok.replace("i", "j")))
        except ValueError as exc:
            raise InputError(f"cannot parse complex number {tok!r}") from exc
    return out


def _n_cap(default: int = DEFAULT_N_CAP) -> int:
    raw = os.environ.get("BO_SPECTRA_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"BO_SPECTRA_MAX_N={raw!r} is not an integer") from exc


def _dispersive_profile(v, eps, n, tol, top, n_cap):
    if n is not None:
        pair = lax.build_lax_pair(v, eps, n)
        sp = lax.spectra(pair)
        used = n
    else:
        tr = lax.adaptive_truncation(v, eps, tol, m=top, n_cap=n_cap)
        if not tr.converged:
            raise InputError(
                f"truncation cap {n_cap} exceeded (movement {tr.movement:g})"
            )
        sp, used = tr.spectra, tr.n
    prof = profiles.profile_from_spectra(sp, symbol.mean(v),
                                         lax.gap_threshold(v))
    return prof, used


def _sample_rows(prof, samples: int):
    nodes = np.concatenate([prof.minima, prof.maxima, [prof.center]])
    lo = float(nodes.min()) - 1.0
    hi = float(nodes.max()) + 1.0
    cs = np.linspace(lo, hi, samples)
    fs = prof.heights(cs)
    return zip(cs, fs)


def _cmd_profile(args) -> int:
    v = _load_symbol(args.symbol)
    prof, used = _dispersive_profile(v, args.eps, args.n, args.tol,
                                     args.top, _n_cap())
    _write_json(args.out, profiles.profile_to_json_dict(prof))
    if args.csv:
        _write_csv(args.csv, "c,f", _sample_rows(prof, args.samples))
    print(f"profile: center {_fmt(prof.center)}, {prof.gap_count} gaps, "
          f"N = {used} -> {args.out}")
    return 0


def _cmd_convex(args) -> int:
    v = _load_symbol(args.symbol)
    conv = profiles.convex_profile_from_symbol(v, args.grid)
    lo, hi = conv.support
    cs = np.linspace(lo - 1.0, hi + 1.0, args.samples)
    _write_csv(args.out, "c,f", zip(cs, conv.heights(cs)))
    print(f"convex profile: center {_fmt(conv.center)}, "
          f"support [{_fmt(lo)}, {_fmt(hi)}] -> {args.out}")
    return 0


def _cmd_multiphase(args) -> int:
    params = multiphase.params_from_json_dict(_load_json(args.params))
    xs = np.linspace(0.0, 2.0 * np.pi, args.samples, endpoint=False)
    vals = multiphase.evaluate_wave(params, xs, args.time)
    _write_csv(args.out, "x,v", zip(xs, vals))
    if args.profile_out:
        prof = multiphase.dk_profile(params)
        _write_json(args.profile_out, profiles.profile_to_json_dict(prof))
    print(f"wave with {params.n} phases at t = {_fmt(args.time)} "
          f"-> {args.out}")
    return 0


def _cmd_verify_finite_gap(args) -> int:
    params = multiphase.params_from_json_dict(_load_json(args.params))
    report = multiphase.verify_finite_gap(params, tol=args.tol,
                                          n_cap=_n_cap(2048))
    if args.out:
        _write_json(args.out, report.to_json_dict())
    status = "pass" if report.passes else "FAIL"
    print(f"finite gap {status}: endpoint error {report.endpoint_error:.3e}, "
          f"spurious {report.spurious_gap_width:.3e}, N = {report.n_used}")
    return 0 if report.passes else 1


def _cmd_conserve(args) -> int:
    params = multiphase.params_from_json_dict(_load_json(args.params))
    report = multiphase.conservation_check(
        params, _parse_floats(args.times), m_top=args.top, tol=args.tol,
        n_cap=_n_cap(2048),
    )
    if args.out:
        _write_json(args.out, report.to_json_dict())
    status = "pass" if report.passes else "FAIL"
    print(f"conservation {status}: drift {report.drift:.3e} over "
          f"{len(report.times)} times at N = {report.n_used}")
    return 0 if report.passes else 1


def _cmd_sweep(args) -> int:
    v = _load_symbol(args.symbol)
    sweep = smalldisp.DispersionSweep(
        symbol=v, eps_list=tuple(_parse_floats(args.eps)),
        u_grid=tuple(_parse_complexes(args.u)),
    )
    result = smalldisp.dispersion_sweep(sweep, trunc_tol=args.tol,
                                        n_cap=_n_cap())
    rows = [
        (r.eps, r.u.real, r.u.imag, r.phi.real, r.phi.imag,
         r.target.real, r.target.imag, r.abs_err)
        for r in result.rows
    ]
    _write_csv(args.out, "eps,u_re,u_im,phi_re,phi_im,target_re,target_im,"
               "abs_err", rows)
    mono = all(result.monotone.values())
    print(f"sweep over {len(sweep.eps_list)} eps values -> {args.out} "
          f"(monotone: {mono})")
    return 0


def _cmd_sinusoidal(args) -> int:
    rows = smalldisp.sinusoidal_functional_equation(
        args.eps, trunc_tol=args.tol, u_grid=_parse_complexes(args.u),
        n_cap=_n_cap(),
    )
    _write_csv(args.out, "eps,u_re,u_im,t_re,t_im,resid,resid_flipped",
               [(r.eps, r.u.real, r.u.imag, r.t_value.real, r.t_value.imag,
                 r.residual, r.residual_flipped) for r in rows])
    worst = max(r.residual for r in rows)
    print(f"sinusoidal recurrence residual <= {worst:.3e} -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bo-spectra",
        description="Conserved spectra and action profiles of the periodic "
                    "Benjamin-Ono equation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="dispersive action profile of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", help="also write sampled f as c,f CSV")
    p.add_argument("--n", type=int, help="fixed truncation (default adaptive)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--top", type=int, default=32)
    p.add_argument("--samples", type=int, default=513)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("convex", help="convex action profile of a symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grid", type=int, default=1 << 16)
    p.add_argument("--samples", type=int, default=513)
    p.set_defaults(func=_cmd_convex)

    p = sub.add_parser("multiphase", help="sample a multi-phase wave")
    p.add_argument("--params", required=True)
    p.add_argument("--time", type=float, default=0.0)
    p.add_argument("--out", required=True)
    p.add_argument("--profile-out", help="also write the predicted profile")
    p.add_argument("--samples", type=int, default=1024)
    p.set_defaults(func=_cmd_multiphase)

    p = sub.add_parser("verify-finite-gap",
                       help="check the finite-gap property of a wave")
    p.add_argument("--params", required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify_finite_gap)

    p = sub.add_parser("conserve", help="eigenvalue drift across times")
    p.add_argument("--params", required=True)
    p.add_argument("--times", required=True)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_conserve)

    p = sub.add_parser("sweep", help="small-dispersion convergence table")
    p.add_argument("--symbol", required=True)
    p.add_argument("--eps", required=True, help="comma list, decreasing")
    p.add_argument("--u", required=True, help="comma list, e.g. 0+2i,3i")
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("sinusoidal",
                       help="Jacobi recurrence residuals for 2 cos x")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_sinusoidal)

    return parser


INPUT_ERRORS = (
    InputError,
    symbol.SymbolError,
    profiles.ProfileError,
    multiphase.MultiPhaseError,
    lax.ResolventDomainError,
    ValueError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
