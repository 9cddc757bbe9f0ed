"""Experiment rows: build, break symmetry, enumerate, classify, compare."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources

from .breaking import SymBreak, SymBreakConfig, apply_config
from .canonical import DEFAULT_ROW_LIMIT, Classifier
from .models import build, format_params, parse_problem
from .search import SearchConfig, VarOrder, solve_all

DEFAULT_TIME_BUDGET = 600.0
DEFAULT_MAX_SOLUTIONS = 10**7
CSV_HEADER = ("problem", "params", "sb", "solutions", "classes", "failures",
              "elapsed_ms", "complete")

# branch in the order of the linearization each method is derived from
_VAR_ORDERS = {
    SymBreak.SNAKELEX_R: VarOrder.SNAKE_ROW_WISE,
    SymBreak.SNAKELEX_C: VarOrder.SNAKE_COL_WISE,
}


def default_var_order(kind: SymBreak) -> VarOrder:
    return _VAR_ORDERS.get(kind, VarOrder.ROW_WISE)


@dataclass
class ExperimentRow:
    problem: str
    params: str
    sb: str
    n_solutions: int
    n_classes: int | None
    n_failures: int
    elapsed_ms: float
    complete: bool
    expected: dict | None = field(default=None, compare=False)

    def csv_values(self) -> list:
        return [self.problem, self.params, self.sb, self.n_solutions,
                "" if self.n_classes is None else self.n_classes, self.n_failures,
                f"{self.elapsed_ms:.1f}", str(self.complete).lower()]

    @property
    def verdict(self) -> str:
        """PASS/FAIL against the expected counts, SKIP when incomplete or unknown."""
        if self.expected is None or not self.complete:
            return "SKIP"
        if self.n_solutions != self.expected["solutions"]:
            return "FAIL"
        want = self.expected.get("classes")
        if want is not None and self.n_classes != want:
            return "FAIL"
        return "PASS"


def run_experiment(problem: str, sb: str = "nosb", value_sb: str | None = None,
                   classify: bool = False, var_order: VarOrder | None = None,
                   time_budget: float | None = DEFAULT_TIME_BUDGET,
                   max_solutions: int | None = DEFAULT_MAX_SOLUTIONS,
                   row_limit: int = DEFAULT_ROW_LIMIT) -> ExperimentRow:
    """Run one (instance, symmetry breaking) pair.

    With ``classify`` every solution is canonicalized as it is found and the
    number of distinct classes is reported.
    """
    name, params = parse_problem(problem)
    config = SymBreakConfig.parse(sb, value_sb)
    model = apply_config(build(name, params), config)
    search = SearchConfig(var_order or default_var_order(config.kind),
                          max_solutions=max_solutions, time_budget=time_budget)
    classifier = Classifier(row_limit, keep_members=False) if classify else None
    if classifier is not None:
        probe = model.n_rows if model.n_rows <= row_limit else model.n_cols
        if probe > row_limit:
            raise ValueError(
                f"{model.n_rows}x{model.n_cols} exceeds the canonicalization limit of "
                f"{row_limit} rows; transpose the instance or raise the limit")
    stats = solve_all(model, search, None if classifier is None else classifier.add)
    n_classes = None if classifier is None else classifier.report.n_classes
    return ExperimentRow(name, format_params(params), config.name, stats.n_solutions,
                         n_classes, stats.n_failures, stats.elapsed * 1000, stats.complete)


def load_expected() -> list[dict]:
    text = resources.files("symbreak").joinpath("data/expected.json").read_text()
    return json.loads(text)


def expected_for(table: int, scale: int = 0) -> list[dict]:
    if table not in (1, 2, 3, 4):
        raise ValueError(f"unknown table {table}; choose 1, 2, 3 or 4")
    return [e for e in load_expected() if e["table"] == table and e["tier"] <= scale]


def run_suite(table: int, scale: int = 0, time_budget: float | None = DEFAULT_TIME_BUDGET,
              progress=None) -> list[ExperimentRow]:
    """Run every expected row of ``table`` whose cost tier is at most ``scale``.

    Tier 0 rows take seconds, tier 1 rows fit the default ten minute budget,
    tier 2 rows usually exceed it.
    """
    rows = []
    for e in expected_for(table, scale):
        row = run_experiment(f"{e['problem']}:{e['params']}", e["sb"],
                             classify=e.get("classes") is not None, time_budget=time_budget)
        row.expected = e
        rows.append(row)
        if progress is not None:
            progress(row)
    return rows


def to_csv(rows: list[ExperimentRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_values())
    return buf.getvalue()


def to_markdown(rows: list[ExperimentRow]) -> str:
    head = list(CSV_HEADER) + ["expected", "source", "verdict"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in rows:
        e = r.expected or {}
        want = "" if not e else str(e["solutions"]) + (
            f" / {e['classes']}" if e.get("classes") is not None else "")
        cells = [str(v) for v in r.csv_values()] + [want, e.get("source", ""), r.verdict]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
