import os
import glob
import click
import importlib
import pandas as pd
from time import perf_counter_ns
from typing import Optional
from dataclasses import dataclass, field
from fdhull._cli import constants
from fdhull.errors import TimeLimitExceeded
from fdhull.geometry import Point, score
from fdhull.utilities import get_logger, read_yaml
from fdhull.workload import Workload


logger = get_logger("fdhull.cli")


def structure_name_from_module_name(name: str):
    return "".join([s.capitalize() for s in name.split("_")])


def config_directory() -> str:
    file_dir = os.path.dirname(os.path.abspath(__file__))
    return os.path.normpath(os.path.join(file_dir, "..", constants.CONFIG_DIRECTORY))


def load_configs(config_dir: Optional[str] = None) -> dict[str, dict]:
    """Implementation configs keyed by module name."""
    config_dir = config_dir or config_directory()
    configs = [read_yaml(f) for f in sorted(glob.glob(os.path.join(config_dir, "*.yaml")))]
    return {c["MODULE"]: c for c in configs}


def list_implementations(configs: dict[str, dict], msg: Optional[str] = None):
    mapper = {}
    if msg is None:
        msg = "Available implementations:\n"
    for i, (mod, config) in enumerate(configs.items()):
        params = ", ".join(
            f"{k}={v}" for k, v in config.get("PARAMETERS", {}).items()
        )
        msg += f"  [{i+1}] {mod}: {config['NAME']}"
        msg += f" ({params})\n" if params else "\n"
        mapper[i + 1] = mod
    return mapper, msg


def get_structure_object(module_name: str):
    module = importlib.import_module(f"{constants.STRUCTURE_PACKAGE}.{module_name}")
    structure_obj_name = structure_name_from_module_name(module_name)
    return structure_obj_name, getattr(module, structure_obj_name)


def build_structure(impl: str, configs: Optional[dict[str, dict]] = None):
    """Instantiate an implementation from a name such as 'fdh:1024'.

    The optional suffix overrides the base parameter of the config.
    """
    configs = configs if configs is not None else load_configs()
    module_name, _, base = impl.partition(":")
    if module_name not in configs:
        raise click.UsageError(
            f"Unknown implementation '{module_name}'. "
            + f"Choose from: {', '.join(configs)}."
        )
    config = configs[module_name]
    parameters = dict(config.get("PARAMETERS") or {})
    if base:
        try:
            parameters["base"] = int(base)
        except ValueError:
            raise click.UsageError(f"Invalid base in '{impl}'.")

    _, structure_object = get_structure_object(config["MODULE"])
    try:
        return structure_object(parameters)
    except ValueError as e:
        raise click.UsageError(str(e))


def time_limit_from_env() -> Optional[float]:
    value = os.environ.get(constants.TIME_LIMIT_ENV)
    if not value:
        return None
    try:
        return float(value)
    except ValueError:
        raise click.UsageError(f"{constants.TIME_LIMIT_ENV} must be a number.")


def apply_op(structure, kind: str, x: int, y: int):
    """Apply one workload op and return its answer.

    Containment answers are 1 or 0, extreme answers are the best score (None
    on an empty structure), updates answer None.
    """
    match kind:
        case "i":
            structure.insert(Point(x, y))
        case "d":
            structure.delete(Point(x, y))
        case "q":
            return int(structure.contains(Point(x, y)))
        case "e":
            best = structure.extreme((x, y))
            return None if best is None else score(best, (x, y))
    return None


@dataclass
class RunReport:
    """Answers, timings and hull sizes of one replay."""

    label: str
    kinds: list[str] = field(default_factory=list)
    ns: list[float] = field(default_factory=list)
    answers: list = field(default_factory=list)
    hull_sizes: dict[int, int] = field(default_factory=dict)
    counters: dict[str, int] = field(default_factory=dict)

    @property
    def final_hull_size(self) -> Optional[int]:
        if not self.hull_sizes:
            return None
        return self.hull_sizes[max(self.hull_sizes)]

    @property
    def yes(self) -> int:
        return sum(1 for k, a in zip(self.kinds, self.answers) if k == "q" and a)

    @property
    def no(self) -> int:
        return sum(1 for k, a in zip(self.kinds, self.answers) if k == "q" and not a)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "op_index": range(len(self.kinds)),
                "kind": self.kinds,
                "ns": self.ns,
                "answer": ["" if a is None else a for a in self.answers],
            },
            columns=constants.CSV_COLUMNS,
        )

    def labels(self) -> list[str]:
        """Op kind names, with containment queries split by their answer."""
        return [
            constants.QUERY_ANSWER_NAMES[a]
            if k == "q"
            else constants.KIND_NAMES.get(k, k)
            for k, a in zip(self.kinds, self.answers)
        ]

    def summary(self) -> pd.DataFrame:
        """Mean and median nanoseconds per op kind.

        Yes and no answers to containment queries are summarised separately.
        """
        if not self.kinds:
            return pd.DataFrame(columns=["count", "mean_ns", "median_ns"])
        df = pd.DataFrame({"label": self.labels(), "ns": self.ns})
        return df.groupby("label", sort=False)["ns"].agg(
            count="count", mean_ns="mean", median_ns="median"
        )


def replay(
    structure,
    workload: Workload,
    label: str = "",
    time_limit: Optional[float] = None,
) -> RunReport:
    """Replay a workload, timing batches of ops with a monotonic clock.

    Each op in a batch is charged the batch mean. Batches never span a
    checkpoint, and hull sizes at checkpoints are measured outside the timed
    region.
    """
    report = RunReport(label=label)
    ops = workload.ops
    marks = sorted(set(workload.checkpoints) | {len(ops)})
    limit_ns = None if time_limit is None else int(time_limit * 1e9)
    elapsed = 0

    start = 0
    for mark in marks:
        while start < mark:
            stop = min(start + constants.BATCH_SIZE, mark)
            batch = ops[start:stop]
            answers = []
            t0 = perf_counter_ns()
            for op in batch:
                answers.append(apply_op(structure, op.kind, op.x, op.y))
            t1 = perf_counter_ns()
            per_op = (t1 - t0) / len(batch)
            report.kinds.extend(op.kind for op in batch)
            report.ns.extend([per_op] * len(batch))
            report.answers.extend(answers)
            elapsed += t1 - t0
            if limit_ns is not None and elapsed > limit_ns:
                raise TimeLimitExceeded(
                    f"{label} exceeded {time_limit}s after {stop} ops"
                )
            start = stop
        report.hull_sizes[mark] = structure.hull_size()

    report.counters = structure.counters()
    return report


def first_divergence(reports: list[RunReport]) -> Optional[str]:
    """Describe the first disagreement between reports, or None."""
    if len(reports) < 2:
        return None
    reference = reports[0]
    for other in reports[1:]:
        for i, (a, b) in enumerate(zip(reference.answers, other.answers)):
            if a != b:
                return (
                    f"op {i} ({constants.KIND_NAMES[reference.kinds[i]]}): "
                    + f"{reference.label}={a} {other.label}={b}"
                )
        for mark, size in reference.hull_sizes.items():
            if other.hull_sizes.get(mark) != size:
                return (
                    f"checkpoint at op {mark}: hull size "
                    + f"{reference.label}={size} "
                    + f"{other.label}={other.hull_sizes.get(mark)}"
                )
    return None


def write_run_csv(report: RunReport, filepath: str):
    """Write per-op rows followed by a commented summary footer."""
    report.to_frame().to_csv(filepath, index=False)
    with open(filepath, "a") as f:
        for kind, row in report.summary().iterrows():
            f.write(
                f"# summary kind={kind} count={int(row['count'])} "
                + f"mean_ns={row['mean_ns']:.1f} median_ns={row['median_ns']:.1f}\n"
            )
        f.write(f"# queries yes={report.yes} no={report.no}\n")
        f.write(f"# hull_size={report.final_hull_size}\n")
        for key, value in report.counters.items():
            f.write(f"# counter {key}={value}\n")


def counter_rows(structure, workload: Workload) -> pd.DataFrame:
    """Counters after every power-of-two prefix and at checkpoints."""
    ops = workload.ops
    marks = {len(ops)} | set(workload.checkpoints)
    marks |= {1 << k for k in range(len(ops).bit_length()) if 1 << k <= len(ops)}

    rows = []
    updates = 0
    for i, op in enumerate(ops, start=1):
        apply_op(structure, op.kind, op.x, op.y)
        updates += op.kind in ("i", "d")
        if i in marks:
            rows.append({"prefix": i, "updates": updates, **structure.counters()})
    return pd.DataFrame(rows)
