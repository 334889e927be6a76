"""
Command line entry point.

```
python -m quancontext verify
python -m quancontext beta --epsilon 1.0
python -m quancontext nchv
python -m quancontext dqc1 --epsilon 0.5 --t 1.5 --t2 30
python -m quancontext sweep --t 1.5 --ratios 0.01:2:50log --gates 3 --out sweep.csv
python -m quancontext spectrum --params malonic_acid.txt --out spectrum.csv
```
Exit code 0 on success, 1 for invalid input (or a failed square check),
2 when a result breaks a numerical contract.
"""
import argparse
import logging
import os
import sys
from typing import List, NamedTuple, Optional, Sequence

from . import json_utils
from .contextuality import PMSquare, format_square, nchv_max, parse_square, pm_square, verify_square
from .dqc1 import EpsilonCorrectionError, ProbeSpec, SUITE_CSV_HEADER, SuiteResult, run_experiment_suite
from .linalg import NumericalIntegrityError, tolerances
from .nmr import (DEFAULT_DWELL, DEFAULT_SAMPLES, DEFAULT_T2_STAR, SPECTRUM_CSV_HEADER, cluster_centers,
                  merge_clusters, molecule_spectrum, read_params_file)
from .noise import SWEEP_CSV_HEADER, NoiseModel, beta_sweep
from .pauli import format_pauli
from .storage import save_dict
from .utils import GridSpecError, parse_grid, write_csv

logger = logging.getLogger(__name__)

COMMANDS = ('verify', 'beta', 'nchv', 'dqc1', 'sweep', 'spectrum')
JSON_COMMANDS = ('verify', 'nchv', 'beta')
DEFAULT_RATIOS_SPEC = '0.01:2:50log'
REFERENCE_BETAS = ((0.05, 5.3), (0.75, 1.1))  # expected beta at t/T2 = 0.05 and 0.75


class ConfigError(ValueError):
    """Invalid command line value. `flag` names the offending option."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class RunConfig(NamedTuple):
    command: str
    epsilon: float = 1.
    t_ms: float = 1.5
    t2_ms: Optional[float] = None
    gates: int = 3
    ratios: str = DEFAULT_RATIOS_SPEC
    params_file: Optional[str] = None
    output: Optional[str] = None
    tolerance: Optional[float] = None
    correction: bool = True
    square_file: Optional[str] = None
    dwell: float = DEFAULT_DWELL
    samples: int = DEFAULT_SAMPLES
    t2_star: float = DEFAULT_T2_STAR

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> 'RunConfig':
        return cls(**{field: getattr(args, field) for field in cls._fields if hasattr(args, field)})

    @property
    def output_kind(self) -> str:
        if self.output is None:
            return 'stdout'
        extension = os.path.splitext(self.output)[1].lower()
        return {'.h5': 'h5', '.hdf5': 'h5', '.json': 'json'}.get(extension, 'csv')

    def noise_model(self) -> Optional[NoiseModel]:
        if self.t2_ms is None:
            return None
        return NoiseModel(self.t_ms, self.t2_ms, self.gates)

    def ratio_grid(self) -> List[float]:
        try:
            return parse_grid(self.ratios)
        except GridSpecError as error:
            raise ConfigError('--ratios', str(error)) from None


def validate(cfg: RunConfig) -> RunConfig:
    """Check every numeric field against the domain of the command it feeds."""
    if cfg.command not in COMMANDS:
        raise ConfigError('command', f"should be one of {', '.join(COMMANDS)}. Got '{cfg.command}'")
    if not 0 <= cfg.epsilon <= 1:
        raise ConfigError('--epsilon', f"should be in [0, 1]. Got {cfg.epsilon}")
    if cfg.epsilon == 0 and cfg.correction and cfg.command in ('beta', 'dqc1', 'sweep'):
        raise ConfigError('--epsilon', "epsilon = 0 cannot be corrected, add --no-epsilon-correction")
    if not cfg.t_ms >= 0:
        raise ConfigError('--t', f"pulse length should not be negative. Got {cfg.t_ms}")
    if cfg.t2_ms is not None and not cfg.t2_ms > 0:
        raise ConfigError('--t2', f"should be positive. Got {cfg.t2_ms}")
    if cfg.gates < 1:
        raise ConfigError('--gates', f"should be a positive integer. Got {cfg.gates}")
    if cfg.tolerance is not None and not cfg.tolerance > 0:
        raise ConfigError('--tolerance', f"should be positive. Got {cfg.tolerance}")
    if not cfg.dwell > 0:
        raise ConfigError('--dwell', f"should be positive. Got {cfg.dwell}")
    if cfg.samples < 2:
        raise ConfigError('--samples', f"should be at least 2. Got {cfg.samples}")
    if not cfg.t2_star > 0:
        raise ConfigError('--t2-star', f"should be positive. Got {cfg.t2_star}")
    if cfg.command == 'sweep':
        ratios = cfg.ratio_grid()
        if any(r <= 0 for r in ratios):
            raise ConfigError('--ratios', "ratios t/T2 should be positive")
        if any(b <= a for a, b in zip(ratios, ratios[1:])):
            raise ConfigError('--ratios', "ratios should be strictly increasing")
        if not cfg.t_ms > 0:
            raise ConfigError('--t', "pulse length should be positive for a sweep")
    if cfg.output_kind == 'json' and cfg.command not in JSON_COMMANDS:
        raise ConfigError('--out', f"JSON output is available for {', '.join(JSON_COMMANDS)} only")
    if cfg.output_kind == 'csv' and cfg.command in ('verify', 'nchv'):
        raise ConfigError('--out', f"'{cfg.command}' writes .json or .h5 files")
    return cfg


def _load_square(cfg: RunConfig) -> PMSquare:
    if cfg.square_file is None:
        return pm_square()
    with open(cfg.square_file, 'r', encoding='utf-8') as file:
        text = file.read()
    try:
        return parse_square(text)
    except ValueError as error:
        raise ConfigError('--square', f"{cfg.square_file}: {error}") from None


def _save(cfg: RunConfig, key: str, result, header: Sequence[str] = (), rows=None):
    kind = cfg.output_kind
    if kind == 'h5':
        save_dict(cfg.output, {key: result})
    elif kind == 'json':
        json_utils.json_write(cfg.output, result)
    elif kind == 'csv':
        write_csv(header, rows, cfg.output)
    elif rows is not None:
        write_csv(header, rows)
    if cfg.output is not None:
        logger.info("Result written to %s", cfg.output)


def run_verify_command(cfg: RunConfig) -> int:
    sq = _load_square(cfg)
    report = verify_square(sq)
    print(format_square(sq), end='')
    for check in report.checks:
        print(f"{check.line}: commuting={'yes' if check.commuting else 'no'} "
              f"product={format_pauli(check.product)} expected={'+' if check.expected_sign == 1 else '-'}1 "
              f"{'ok' if check.passed else 'FAILED'}")
    print("PASS" if report.passed else "FAIL")
    if cfg.output is not None:
        _save(cfg, 'verify', report)
    return 0 if report.passed else 1


def _suite(cfg: RunConfig) -> SuiteResult:
    return run_experiment_suite(ProbeSpec(cfg.epsilon), noise=cfg.noise_model(),
                                correction=cfg.correction, sq=_load_square(cfg))


def run_beta_command(cfg: RunConfig) -> int:
    result = _suite(cfg)
    for term in result.terms:
        print(f"{term.line}: {term.sign:+d} x {term.value:.6f}")
    print(f"beta = {result.beta:.6f}")
    if cfg.output is not None:
        _save(cfg, 'beta', result, SUITE_CSV_HEADER, result.csv_rows())
    return 0


def run_nchv_command(cfg: RunConfig) -> int:
    bound = nchv_max(_load_square(cfg))
    print(f"nchv_max = {bound.value:.0f}")
    for row in bound.assignment.as_grid():
        print(' '.join(f"{value:+d}" for value in row))
    if cfg.output is not None:
        _save(cfg, 'nchv', {'nchv_max': bound.value, 'assignment': bound.assignment.as_grid(),
                            'index': bound.assignment.index})
    return 0


def run_dqc1_command(cfg: RunConfig) -> int:
    result = _suite(cfg)
    _save(cfg, 'dqc1', result, SUITE_CSV_HEADER, result.csv_rows())
    summary = [f"reference = {result.reference:.6f}"]
    if result.scaled_to_reference is not None:
        summary.append(f"scaled sum / reference = {result.scaled_to_reference:.6f}")
    summary.append(f"beta = {result.beta:.6f}")
    prefix = '# ' if cfg.output is None else ''
    for line in summary:
        print(prefix + line)
    return 0


def run_sweep_command(cfg: RunConfig) -> int:
    series = beta_sweep(cfg.t_ms, cfg.ratio_grid(), ProbeSpec(cfg.epsilon), cfg.gates)
    _save(cfg, 'sweep', series, SWEEP_CSV_HEADER, series.csv_rows())
    prefix = '# ' if cfg.output is None else ''
    for ratio, expected in REFERENCE_BETAS:
        beta = series.beta_at(ratio)
        if beta is not None:
            print(f"{prefix}beta(t/T2={ratio:g}) = {beta:.6f} (expected ~{expected})")
    print(f"{prefix}{len(series.points)} ratios, beta from {series.betas[0]:.6f} to {series.betas[-1]:.6f}")
    return 0


def run_spectrum_command(cfg: RunConfig) -> int:
    params = read_params_file(cfg.params_file)
    spec = molecule_spectrum(params, cfg.dwell, cfg.samples, cfg.t2_star)
    _save(cfg, 'spectrum', spec, SPECTRUM_CSV_HEADER, spec.csv_rows())
    prefix = '# ' if cfg.output is None else ''
    centers = cluster_centers(params, cfg.dwell, cfg.samples, cfg.t2_star)
    for center in merge_clusters(centers, spec.bin_width):
        print(f"{prefix}{center.label}: cluster center = {center.center:.6f} kHz "
              f"(shift {center.shift:.6f} kHz, {center.n_lines} lines)")
    print(f"{prefix}bin width = {spec.bin_width:.6f} kHz")
    return 0


RUNNERS = {
    'verify': run_verify_command,
    'beta': run_beta_command,
    'nchv': run_nchv_command,
    'dqc1': run_dqc1_command,
    'sweep': run_sweep_command,
    'spectrum': run_spectrum_command,
}


class ArgumentParser(argparse.ArgumentParser):
    """Raises ConfigError instead of exiting with status 2."""

    def error(self, message):
        raise ConfigError(self.prog, message)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='quancontext',
                            description="Contextuality test with one clean qubit: square, bounds, "
                                        "noisy suites and spectra")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="Increase logging verbosity (use -vv for debug output).")
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    def add(name: str, help_text: str) -> ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument('--out', dest='output', help="Output file (.csv, .h5, .json). Default: stdout")
        sub.add_argument('--tolerance', type=float, help="Algebraic tolerance of the numerical checks")
        sub.add_argument('-v', '--verbose', action='count', default=0, dest='sub_verbose',
                         help=argparse.SUPPRESS)
        return sub

    def add_square(sub: ArgumentParser):
        sub.add_argument('--square', dest='square_file', help="Square file (3 rows of Paulis, 6 signs)")

    def add_suite(sub: ArgumentParser):
        add_square(sub)
        sub.add_argument('--epsilon', type=float, default=1., help="Probe polarization in [0, 1]")
        sub.add_argument('--no-epsilon-correction', dest='correction', action='store_false',
                         help="Report raw signals, without dividing by epsilon")
        sub.add_argument('--t', dest='t_ms', type=float, default=1.5, help="Pulse length per gate (ms)")
        sub.add_argument('--t2', dest='t2_ms', type=float, help="Dephasing time (ms); no noise if omitted")
        sub.add_argument('--gates', type=int, default=3, help="Noise applications per experiment")

    add_square(add('verify', "Check commutation and products of the square"))
    add_suite(add('beta', "beta of the six-experiment suite"))
    add_square(add('nchv', "Largest beta over all noncontextual assignments"))
    add_suite(add('dqc1', "Suite details as CSV"))

    sweep = add('sweep', "beta as a function of t/T2")
    sweep.add_argument('--t', dest='t_ms', type=float, default=1.5, help="Pulse length per gate (ms)")
    sweep.add_argument('--ratios', default=DEFAULT_RATIOS_SPEC,
                       help="start:stop:count[log] or comma separated list of t/T2")
    sweep.add_argument('--gates', type=int, default=3, help="Noise applications per experiment")
    sweep.add_argument('--epsilon', type=float, default=1., help="Probe polarization in (0, 1]")

    spectrum = add('spectrum', "Spectrum of the spin system")
    spectrum.add_argument('--params', dest='params_file', help="Parameter file. Default: malonic acid")
    spectrum.add_argument('--dwell', type=float, default=DEFAULT_DWELL, help="Dwell time (ms)")
    spectrum.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help="Number of FID samples")
    spectrum.add_argument('--t2-star', dest='t2_star', type=float, default=DEFAULT_T2_STAR,
                          help="Line broadening time constant (ms)")
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(args: Optional[Sequence[str]] = None) -> int:
    try:
        namespace = build_parser().parse_args(args)
    except ConfigError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except SystemExit as exit_:  # --help
        return int(exit_.code or 0)
    configure_logging(namespace.verbose + getattr(namespace, 'sub_verbose', 0))

    try:
        cfg = validate(RunConfig.from_namespace(namespace))
        logger.info("Running '%s'", cfg.command)
        with tolerances(algebraic=cfg.tolerance):
            return RUNNERS[cfg.command](cfg)
    except EpsilonCorrectionError as error:
        print(f"error: --epsilon: {error}", file=sys.stderr)
        return 1
    except NumericalIntegrityError as error:
        print(f"numerical error: {error}", file=sys.stderr)
        return 2
    except OSError as error:
        print(f"error: {error.filename or ''}: {error.strerror or error}", file=sys.stderr)
        return 1
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())
