"""Command-line front end: scans to CSV with a JSON metadata sidecar.

Subcommands
    spectrum    photon-energy sweep at fixed amplitude
    intensity   amplitude sweep at fixed photon energy
    ionization  amplitude sweep of photoionization observables
    point       single (A, omega) transition table

Inputs are in I/O units (energies in eV, amplitudes in V*s/m); presets
fig1..fig4 encode the published figure parameters.  Exit codes: 0 success,
1 at least one scan point failed, 2 configuration error, 3 I/O error.
"""

import argparse
import configparser
import csv
import dataclasses
import json
import os
import sys
import time
import warnings
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .basis import QuantumNumbers, enumerate_basis
from .eigensolver import DEGENERACY_GAP, diagonalize, track_state
from .errors import ConfigurationError
from .hamiltonian import LaserField, assemble
from .ionization import ionization_records
from .transitions import transition_table
from .units import UnitSystem

THREADS_ENV_VAR = "LASERHYDROGEN_THREADS"

SPECTRUM_HEADER = (
    "axis_value,initial_n,initial_l,initial_mu,"
    "final_n,final_l,final_mu,W,degenerate_flag"
)
IONIZATION_HEADER = (
    "A_vspm,omega_eV,dressed_index,overlap,E_i_hartree,"
    "mu_branch,E_f0_eV,eta,sigma_pia02"
)

PRESETS = {
    "fig1": {
        "mode": "spectrum",
        "n0": 18,
        "amplitude_vspm": 5e-6,
        "omega_ev_start": 0.1,
        "omega_ev_stop": 1.0,
        "count": 10,
    },
    "fig2": {
        "mode": "intensity",
        "n0": 18,
        "omega_ev": 0.296,
        "a_vspm_start": 0.0,
        "a_vspm_stop": 5e-6,
        "count": 11,
    },
    "fig3": {
        "mode": "ionization",
        "n0": 10,
        "omega_ev": 2.37,
        "a_vspm_start": 5e-7,
        "a_vspm_stop": 5e-6,
        "count": 10,
    },
}
PRESETS["fig4"] = PRESETS["fig3"]  # same sweep; sigma lives in the same CSV


@dataclasses.dataclass
class RunConfig:
    mode: str
    n0: int = 6
    initial_n: int = 1
    initial_l: int = 0
    initial_mu: int = 0
    amplitude_vspm: float = None   # fixed A (spectrum / point)
    omega_ev: float = None         # fixed omega (intensity / ionization / point)
    omega_ev_start: float = None
    omega_ev_stop: float = None
    a_vspm_start: float = None
    a_vspm_stop: float = None
    count: int = 1
    reduced_mass: bool = False
    drop_a2: bool = False
    output_path: str = "scan.csv"
    w_min: float = 1e-12
    degeneracy_gap: float = DEGENERACY_GAP
    threads: int = 1

    @property
    def initial_state(self) -> QuantumNumbers:
        return QuantumNumbers(self.initial_n, self.initial_l, self.initial_mu)

    def validate(self):
        if self.mode not in ("spectrum", "intensity", "ionization", "point"):
            raise ConfigurationError(f"unknown mode {self.mode!r}")
        if self.n0 < 1:
            raise ConfigurationError(f"n0 must be >= 1, got {self.n0}")
        if self.count < 1:
            raise ConfigurationError("count must be >= 1")
        if self.threads < 1:
            raise ConfigurationError("threads must be >= 1")
        self.initial_state  # raises ConfigurationError if invalid
        need = {
            "spectrum": ("amplitude_vspm", "omega_ev_start", "omega_ev_stop"),
            "intensity": ("omega_ev", "a_vspm_start", "a_vspm_stop"),
            "ionization": ("omega_ev", "a_vspm_start", "a_vspm_stop"),
            "point": ("amplitude_vspm", "omega_ev"),
        }[self.mode]
        for key in need:
            if getattr(self, key) is None:
                raise ConfigurationError(f"mode {self.mode!r} requires key {key!r}")
        if self.mode == "spectrum" and not 0 < self.omega_ev_start <= self.omega_ev_stop:
            raise ConfigurationError("omega range must be positive and increasing")
        if self.mode in ("intensity", "ionization"):
            if self.a_vspm_start < 0 or self.a_vspm_stop < self.a_vspm_start:
                raise ConfigurationError("A range must be non-negative and increasing")
            if self.omega_ev <= 0:
                raise ConfigurationError("omega_ev must be positive")


_CONFIG_KEYS = {f.name: f.type for f in dataclasses.fields(RunConfig)}
_BOOL_KEYS = {"reduced_mass", "drop_a2"}
_INT_KEYS = {"n0", "initial_n", "initial_l", "initial_mu", "count", "threads"}
_STR_KEYS = {"mode", "output_path"}


def parse_config(path=None, overrides=None, preset=None) -> RunConfig:
    """Merge preset < config file < flag overrides into a RunConfig."""
    values = {}
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigurationError(
                f"unknown preset {preset!r}; available: {sorted(PRESETS)}"
            )
        values.update(PRESETS[preset])
    if path is not None:
        parser = configparser.ConfigParser()
        read = parser.read(path)
        if not read:
            raise ConfigurationError(f"config file {path!r} not readable")
        for section in parser.sections():
            for key, raw in parser.items(section):
                if key not in _CONFIG_KEYS:
                    raise ConfigurationError(f"unknown config key {key!r}")
                values[key] = _coerce(key, raw)
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = val
    if "mode" not in values:
        raise ConfigurationError("missing required key 'mode'")
    try:
        config = RunConfig(**values)
    except TypeError as exc:
        raise ConfigurationError(str(exc)) from exc
    config.validate()
    return config


def _coerce(key, raw):
    if key in _STR_KEYS:
        return raw
    if key in _BOOL_KEYS:
        low = raw.strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigurationError(f"key {key!r}: expected boolean, got {raw!r}")
    try:
        return int(raw) if key in _INT_KEYS else float(raw)
    except ValueError:
        raise ConfigurationError(f"key {key!r}: cannot parse {raw!r}") from None


def _axis_grid(start, stop, count):
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


# --- per-point computations (module level so tests can fault-inject) ----

def _compute_spectrum_point(config, units, axis_value, amp_au, omega_au):
    basis = enumerate_basis(config.n0)
    laser = LaserField(amp_au, omega_au)
    decomp = diagonalize(assemble(basis, laser, include_a2=not config.drop_a2))
    table = transition_table(decomp, config.initial_state, laser)
    degenerate = len(decomp.near_degenerate_pairs(config.degeneracy_gap)) > 0
    rows = []
    ini = config.initial_state
    for state, w in zip(basis.states, table.probabilities):
        if w < config.w_min:
            continue
        rows.append(
            [axis_value, ini.n, ini.l, ini.mu, state.n, state.l, state.mu,
             repr(float(w)), int(degenerate)]
        )
    return rows, degenerate


def _compute_ionization_point(config, units, axis_value, amp_au, omega_au):
    basis = enumerate_basis(config.n0)
    laser = LaserField(amp_au, omega_au)
    decomp = diagonalize(assemble(basis, laser, include_a2=not config.drop_a2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        tracked = track_state(decomp, config.initial_state)
    records = ionization_records(decomp, tracked.index, laser)
    omega_ev = units.internal_to_ev(omega_au)
    rows = []
    for rec in records:
        rows.append(
            [axis_value, omega_ev, tracked.index, repr(float(tracked.overlap)),
             repr(float(rec.E_i * units.mass_factor)), rec.mu_branch,
             repr(float(units.internal_to_ev(rec.E_f0))), repr(float(rec.eta)),
             repr(float(units.cross_section_to_pi_a0sq(rec.sigma)))]
        )
    return rows, False


def run(config: RunConfig) -> int:
    """Execute a validated RunConfig; returns the process exit code."""
    t_start = time.time()
    units = UnitSystem(reduced_mass=config.reduced_mass)

    if config.mode == "spectrum":
        axis = _axis_grid(config.omega_ev_start, config.omega_ev_stop, config.count)
        amp_au = units.vector_potential_to_internal(config.amplitude_vspm)
        tasks = [(a, amp_au, units.ev_to_internal(a)) for a in axis]
        compute, header = _compute_spectrum_point, SPECTRUM_HEADER
    elif config.mode == "intensity":
        axis = _axis_grid(config.a_vspm_start, config.a_vspm_stop, config.count)
        omega_au = units.ev_to_internal(config.omega_ev)
        tasks = [
            (a, units.vector_potential_to_internal(a), omega_au) for a in axis
        ]
        compute, header = _compute_spectrum_point, SPECTRUM_HEADER
    elif config.mode == "ionization":
        axis = _axis_grid(config.a_vspm_start, config.a_vspm_stop, config.count)
        omega_au = units.ev_to_internal(config.omega_ev)
        tasks = [
            (a, units.vector_potential_to_internal(a), omega_au) for a in axis
        ]
        compute, header = _compute_ionization_point, IONIZATION_HEADER
    else:  # point
        axis = [config.omega_ev]
        tasks = [
            (config.omega_ev,
             units.vector_potential_to_internal(config.amplitude_vspm),
             units.ev_to_internal(config.omega_ev))
        ]
        compute, header = _compute_spectrum_point, SPECTRUM_HEADER

    def worker(task):
        axis_value, amp_au, omega_au = task
        try:
            rows, degenerate = compute(config, units, axis_value, amp_au, omega_au)
            return rows, degenerate, None
        except Exception as exc:
            return None, False, str(exc)

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(worker, tasks))
    else:
        results = [worker(t) for t in tasks]

    failed_points = []
    degenerate_points = []
    ini = config.initial_state
    try:
        with open(config.output_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header.split(","))
            for axis_value, (rows, degenerate, error) in zip(axis, results):
                if error is not None:
                    failed_points.append({"axis_value": axis_value, "error": error})
                    if header is SPECTRUM_HEADER:
                        writer.writerow(
                            [axis_value, ini.n, ini.l, ini.mu, -1, -1, 0,
                             "nan", "failed"]
                        )
                    else:
                        writer.writerow(
                            [axis_value, config.omega_ev, -1, "nan", "nan", 0,
                             "nan", "nan", "failed"]
                        )
                    continue
                if degenerate:
                    degenerate_points.append(axis_value)
                writer.writerows(rows)
        metadata = {
            "package_version": __version__,
            "config": dataclasses.asdict(config),
            "constants": "CODATA 2018",
            "units": {
                "axis": "eV" if config.mode == "spectrum" else "V*s/m",
                "hartree_eV": units.internal_to_ev(1.0),
                "vector_potential_au_vspm": units.vector_potential_to_si(1.0),
            },
            "tolerances": {
                "w_min": config.w_min,
                "degeneracy_gap": config.degeneracy_gap,
            },
            "near_degenerate_axis_values": degenerate_points,
            "failed_points": failed_points,
            "wall_time_s": time.time() - t_start,
        }
        with open(config.output_path + ".meta.json", "w") as fh:
            json.dump(metadata, fh, indent=2)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    return 1 if failed_points else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laserhydrogen",
        description="Dressed-state transitions and photoionization of "
        "hydrogen in a circularly polarized laser",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in ("spectrum", "intensity", "ionization", "point"):
        p = sub.add_parser(mode)
        p.add_argument("--config", dest="config_path")
        p.add_argument("--preset", choices=sorted(PRESETS))
        p.add_argument("--n0", type=int)
        p.add_argument("--out", dest="output_path")
        p.add_argument("--threads", type=int)
        p.add_argument("--initial", nargs=3, type=int, metavar=("N", "L", "MU"))
        p.add_argument("--amplitude-vspm", type=float, dest="amplitude_vspm")
        p.add_argument("--omega-ev", type=float, dest="omega_ev")
        p.add_argument("--omega-ev-start", type=float, dest="omega_ev_start")
        p.add_argument("--omega-ev-stop", type=float, dest="omega_ev_stop")
        p.add_argument("--a-vspm-start", type=float, dest="a_vspm_start")
        p.add_argument("--a-vspm-stop", type=float, dest="a_vspm_stop")
        p.add_argument("--count", type=int)
        p.add_argument("--w-min", type=float, dest="w_min")
        p.add_argument("--reduced-mass", action="store_const", const=True,
                       dest="reduced_mass")
        p.add_argument("--drop-a2", action="store_const", const=True,
                       dest="drop_a2")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {
        key: getattr(args, key)
        for key in _CONFIG_KEYS
        if hasattr(args, key) and getattr(args, key) is not None
    }
    overrides["mode"] = args.mode
    if args.initial is not None:
        overrides["initial_n"], overrides["initial_l"], overrides["initial_mu"] = (
            args.initial
        )
    if overrides.get("threads") is None:
        env = os.environ.get(THREADS_ENV_VAR)
        if env is not None:
            try:
                overrides["threads"] = int(env)
            except ValueError:
                print(f"invalid {THREADS_ENV_VAR}={env!r}", file=sys.stderr)
                return 2
    try:
        config = parse_config(
            path=args.config_path, overrides=overrides, preset=args.preset
        )
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
