"""Command-line front end.

Subcommands: ``diffset``, ``weight``, ``bias``, ``spectrum``,
``preset <name>``, ``map-freq``. Flags mirror the JSON config-file keys;
flags override file values, and a preset pins everything except the
output directory. On failure a single machine-readable JSON line goes to
stderr and the exit code is nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bias import bias_closed, bias_from_weights
from .diffsets import verify_structure, weight_closed, weight_enumerated
from .errors import CoprimeSpecError, InvalidConfigError
from .estimator import correlogram_psd, find_peaks
from .experiments import (
    BIAS_GRID,
    ExperimentConfig,
    UNREPRESENTABLE,
    config_from_sources,
    emit_bias,
    emit_difference_sets,
    emit_peaks,
    emit_psd,
    emit_structure,
    emit_weight,
    format_tones,
    load_config_file,
    map_frequency,
    parse_levels,
    run_preset,
)
from .schemes import SchemeKind, make_scheme, sample_instants


def _add_scheme_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scheme", choices=[k.value for k in SchemeKind], help="sampling scheme kind"
    )
    parser.add_argument("--m", type=int, help="first co-prime undersampling factor")
    parser.add_argument("--n", type=int, help="second co-prime undersampling factor")
    parser.add_argument("--levels", help="comma-separated multi-level factors, e.g. 2,3,5")
    parser.add_argument("--periods", type=int, help="periods per snapshot (default 1)")
    parser.add_argument("--out", help="output directory (default 'results')")
    parser.add_argument("--config", help="JSON config file; flags override its values")


def _add_grid_flag(parser: argparse.ArgumentParser, default_note: str) -> None:
    parser.add_argument("--grid", type=int, help=f"frequency-grid size (default {default_note})")


def _add_signal_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, help="number of snapshots averaged (default 10)")
    parser.add_argument("--seed", type=int, help="random seed (default 0)")
    parser.add_argument("--tones", help="tones as nu[@amplitude], comma separated")
    parser.add_argument("--noise-std", type=float, dest="noise_std", help="noise std dev")


_FLAG_KEYS = (
    "scheme",
    "m",
    "n",
    "levels",
    "periods",
    "k",
    "grid",
    "seed",
    "tones",
    "noise_std",
    "out",
)


def _merged_config(args: argparse.Namespace, grid_default: int | None = None) -> ExperimentConfig:
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    if file_values.get("preset"):
        raise InvalidConfigError("preset configs run via the 'preset' subcommand")
    flags = {key: getattr(args, key, None) for key in _FLAG_KEYS}
    if grid_default is not None and flags.get("grid") is None and "grid" not in file_values:
        flags["grid"] = grid_default
    return config_from_sources(file_values, flags)


def _print_files(files) -> None:
    for path in files:
        print(path)


def _cmd_diffset(args: argparse.Namespace) -> int:
    config = _merged_config(args)
    scheme = config.scheme_config()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    files = emit_difference_sets(out, f"diffset_{scheme.slug()}", scheme)
    files += emit_structure(out, f"structure_{scheme.slug()}", verify_structure(scheme))
    _print_files(files)
    return 0


def _cmd_weight(args: argparse.Namespace) -> int:
    config = _merged_config(args)
    scheme = config.scheme_config()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    files = emit_weight(out, f"weight_{scheme.slug()}_enumerated", weight_enumerated(sample_instants(scheme)))
    if scheme.kind is SchemeKind.SUPER_NYQUIST:
        files += emit_weight(out, f"weight_{scheme.slug()}_closed", weight_closed(scheme))
    _print_files(files)
    return 0


def _cmd_bias(args: argparse.Namespace) -> int:
    config = _merged_config(args, grid_default=BIAS_GRID)
    scheme = config.scheme_config()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    if scheme.kind is SchemeKind.SUPER_NYQUIST:
        window = bias_closed(scheme, config.grid)
    else:
        window = bias_from_weights(weight_enumerated(sample_instants(scheme)), config.grid)
    _print_files(emit_bias(out, f"bias_{scheme.slug()}", window))
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    config = _merged_config(args)
    if not config.tones:
        raise InvalidConfigError("spectrum needs at least one tone (--tones or config file)")
    scheme = config.scheme_config()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    estimate = correlogram_psd(scheme, config.signal_spec(), config.k, config.grid)
    extra = {
        "tones": format_tones(config.tones),
        "seed": config.seed,
        "noise_std": config.noise_std,
    }
    files = emit_psd(out, f"psd_{scheme.slug()}_k{config.k}", estimate, **extra)
    peaks = find_peaks(estimate, max(5, len(config.tones) + 2))
    files += emit_peaks(out, f"peaks_{scheme.slug()}_k{config.k}", peaks, scheme, k=config.k, **extra)
    _print_files(files)
    return 0


def _cmd_preset(args: argparse.Namespace) -> int:
    _print_files(run_preset(args.name, args.out or "results"))
    return 0


def _cmd_map_freq(args: argparse.Namespace) -> int:
    if args.scheme == SchemeKind.MULTI_LEVEL.value:
        scheme = make_scheme(SchemeKind.MULTI_LEVEL, levels=parse_levels(args.levels))
        label = scheme.kind.value
        nu = map_frequency(args.hz, args.fs, scheme)
    else:
        label = args.scheme
        nu = map_frequency(args.hz, args.fs, args.scheme)
    print(
        json.dumps(
            {
                "hz": args.hz,
                "sample_rate_hz": args.fs,
                "scheme": label,
                "normalized": None if nu is UNREPRESENTABLE else nu,
            }
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprimespec",
        description="Sparse co-prime sampling schemes and correlogram spectral estimation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diffset", help="emit difference sets and the structure report")
    _add_scheme_flags(p)
    p.set_defaults(handler=_cmd_diffset)

    p = sub.add_parser("weight", help="emit weight tables (enumerated, plus closed form)")
    _add_scheme_flags(p)
    p.set_defaults(handler=_cmd_weight)

    p = sub.add_parser("bias", help="emit the correlogram bias window")
    _add_scheme_flags(p)
    _add_grid_flag(p, "4096")
    p.set_defaults(handler=_cmd_bias)

    p = sub.add_parser("spectrum", help="estimate a PSD from sub-Nyquist snapshots")
    _add_scheme_flags(p)
    _add_grid_flag(p, "1024")
    _add_signal_flags(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("preset", help="run a canned figure or table scenario")
    p.add_argument("name", help="fig3 | fig4 | fig5 | fig6 | fig7 | fig8 | fig10 | table1")
    p.add_argument("--out", help="output directory (default 'results')")
    p.set_defaults(handler=_cmd_preset)

    p = sub.add_parser("map-freq", help="map a physical frequency to a scheme's normalized one")
    p.add_argument("hz", type=float, help="physical frequency in Hz")
    p.add_argument("fs", type=float, help="Nyquist-reference sampling rate in Hz")
    p.add_argument(
        "--scheme",
        choices=[k.value for k in SchemeKind],
        default=SchemeKind.SUPER_NYQUIST.value,
    )
    p.add_argument("--levels", help="multi-level factors (needed for --scheme multi-level)")
    p.set_defaults(handler=_cmd_map_freq)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CoprimeSpecError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except OSError as exc:
        print(json.dumps({"error": "IoFailure", "message": str(exc)}), file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
