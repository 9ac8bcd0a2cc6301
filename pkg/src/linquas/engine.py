"""Verdict machinery: exhaustive and symbolic identity checks, condition
cross-checks over coefficient space, classification, witness search, and the
known-discrepancy ledger for the catalog's cited examples.

The exhaustive checker works purely from scanned operation tables
(groupoid.op_tables), the symbolic checker from closed-form affine expansion
(termlang.expand_affine); the two paths share no algebra, which is what makes
their agreement a meaningful cross-check.
"""

from __future__ import annotations

import enum
import json
import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import catalog as cat
from . import termlang as tl
from .catalog import (ExampleStatus, IdentityEntry, ModulusKind, StructureKind,
                      TableRow, catalog_entries, get_entry, hypothesis_holds,
                      row_sweep_admits)
from .groupoid import LinearGroupoid, is_quasigroup, op_tables
from .modring import is_prime
from .termlang import (ELam, ERho, Identity, Lam, LDiv, NotApplicable, Prod,
                       RDiv, Rho, Var)

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """An exhaustive check would exceed the evaluation cap."""


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


class Method(enum.Enum):
    BRUTE_FORCE = "brute_force"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class CheckOutcome:
    verdict: Verdict
    method: Method
    counterexample: dict[str, int] | None = None
    na_reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "method": self.method.value}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.na_reason is not None:
            out["na_reason"] = self.na_reason
        return out


# --- exhaustive checking ----------------------------------------------------


@lru_cache(maxsize=64)
def _env_grids(n: int, k: int) -> tuple[np.ndarray, ...]:
    """Flat coordinate arrays for all n**k assignments, lexicographic order."""
    grids = np.indices((n,) * k).reshape(k, -1)
    grids.setflags(write=False)
    return tuple(grids)


def _eval_table(term: tl.Term, env: dict[str, np.ndarray], tables) -> np.ndarray:
    """Evaluate over all assignments at once; -1 marks an undefined value."""
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, (Prod, LDiv, RDiv)):
        left = _eval_table(term.left, env, tables)
        right = _eval_table(term.right, env, tables)
        bad = (left < 0) | (right < 0)
        ls = np.where(bad, 0, left)
        rs = np.where(bad, 0, right)
        if isinstance(term, Prod):
            out = tables.mul[ls, rs]
        elif isinstance(term, LDiv):
            out = tables.ldiv[ls, rs]
        else:
            out = tables.rdiv[rs, ls]  # z / x solves w*x = z: divisor indexes first
        return np.where(bad, -1, out)
    child = _eval_table(term.child, env, tables)
    bad = child < 0
    cs = np.where(bad, 0, child)
    if isinstance(term, Rho):
        out = tables.rho[cs]
    elif isinstance(term, Lam):
        out = tables.lam[cs]
    elif isinstance(term, ERho):
        out = tables.e_rho[cs]
    else:
        out = tables.e_lam[cs]
    return np.where(bad, -1, out)


def _env_at(ident: Identity, grids: tuple[np.ndarray, ...], flat_index: int) -> dict[str, int]:
    return {name: int(grids[i][flat_index]) for i, name in enumerate(ident.variables)}


def holds_bruteforce(g: LinearGroupoid, ident: Identity,
                     cap: int = DEFAULT_CAP) -> CheckOutcome:
    """Check the identity over every assignment of values to its variables.

    Fails carries the lexicographically first counterexample.  If any
    assignment makes either side undefined the whole check is NotApplicable:
    skipping such tuples would silently weaken the universal quantifier.
    """
    k = len(ident.variables)
    if g.n ** k > cap:
        raise CapExceeded(f"{g.n}**{k} assignments exceed the cap of {cap}")
    tables = op_tables(g.triple())
    grids = _env_grids(g.n, max(k, 1))
    env = {name: grids[i] for i, name in enumerate(ident.variables)}
    lhs = _eval_table(ident.lhs, env, tables)
    rhs = _eval_table(ident.rhs, env, tables)
    undefined = (lhs < 0) | (rhs < 0)
    if undefined.any():
        first = int(np.argmax(undefined))
        scalar_env = _env_at(ident, grids, first)
        reason = _na_reason(ident, scalar_env, g)
        return CheckOutcome(Verdict.NOT_APPLICABLE, Method.BRUTE_FORCE, na_reason=reason)
    diff = lhs != rhs
    if diff.any():
        first = int(np.argmax(diff))
        return CheckOutcome(Verdict.FAILS, Method.BRUTE_FORCE,
                            counterexample=_env_at(ident, grids, first))
    return CheckOutcome(Verdict.HOLDS, Method.BRUTE_FORCE)


def _na_reason(ident: Identity, env: dict[str, int], g: LinearGroupoid) -> str:
    for side in (ident.lhs, ident.rhs):
        value = tl.evaluate(side, env, g)
        if isinstance(value, NotApplicable):
            return value.reason
    return "undefined subterm"


def holds_symbolic(g: LinearGroupoid, ident: Identity) -> CheckOutcome:
    """Compare the affine expansions of both sides coefficient-wise.

    Exact for this family: the difference is an affine form, and an affine
    form vanishes on all of Z_n^k iff its constant and every coefficient are
    0 mod n (set all variables to 0, then one variable to 1 at a time).
    """
    lhs = tl.expand_affine(ident.lhs, g)
    if isinstance(lhs, NotApplicable):
        return CheckOutcome(Verdict.NOT_APPLICABLE, Method.SYMBOLIC, na_reason=lhs.reason)
    rhs = tl.expand_affine(ident.rhs, g)
    if isinstance(rhs, NotApplicable):
        return CheckOutcome(Verdict.NOT_APPLICABLE, Method.SYMBOLIC, na_reason=rhs.reason)
    if lhs.constant != rhs.constant:
        return CheckOutcome(Verdict.FAILS, Method.SYMBOLIC)
    for name in ident.variables:
        if lhs.coeffs.get(name, 0) != rhs.coeffs.get(name, 0):
            return CheckOutcome(Verdict.FAILS, Method.SYMBOLIC)
    return CheckOutcome(Verdict.HOLDS, Method.SYMBOLIC)


# --- classification -----------------------------------------------------------


def classify(g: LinearGroupoid, cap: int = DEFAULT_CAP) -> list[tuple[str, CheckOutcome]]:
    """Verdict for every catalog entry with a defined identity, ordered by id.

    The symbolic checker is preferred for speed; on NotApplicable the
    exhaustive checker gets the final word (it reports the concrete reason).
    """
    results = []
    for entry in sorted(catalog_entries(), key=lambda e: e.id):
        if entry.identity is None:
            continue
        outcome = holds_symbolic(g, entry.identity)
        if outcome.verdict is Verdict.NOT_APPLICABLE:
            outcome = holds_bruteforce(g, entry.identity, cap)
        results.append((entry.id, outcome))
    return results


# --- condition cross-checks ----------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    n: int
    a: int
    b: int
    c: int
    condition_verdict: bool
    oracle_verdict: str

    def to_list(self) -> list:
        return [self.n, self.a, self.b, self.c,
                self.condition_verdict, self.oracle_verdict]


@dataclass
class CrosscheckReport:
    entry_id: str
    table_number: int
    variant: int
    row_label: str
    n_values: list[int]
    checked: int = 0
    na_excluded: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "entry": self.entry_id,
            "table": self.table_number,
            "variant": self.variant,
            "row": self.row_label,
            "n_values": self.n_values,
            "checked": self.checked,
            "na_excluded": self.na_excluded,
            "mismatch_count": len(self.mismatches),
            "mismatches": [m.to_list() for m in self.mismatches],
        }


def _sweep_moduli(row: TableRow, n_values: list[int]) -> list[int]:
    if row.modulus_kind is ModulusKind.PRIME_P:
        return [n for n in n_values if is_prime(n)]
    return list(n_values)


def _crosscheck_cell(args: tuple) -> tuple[int, int, list[list]]:
    """Worker task: one (entry row, modulus) cell of a cross-check sweep."""
    entry_id, table_number, variant, n, cap = args
    entry = get_entry(entry_id)
    row = next(r for r in entry.rows
               if r.table_number == table_number and r.variant == variant)
    checked = 0
    na = 0
    mismatches: list[list] = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                g = LinearGroupoid(n, a, b, c)
                if not row_sweep_admits(row, g):
                    continue
                outcome = holds_bruteforce(g, entry.identity, cap)
                if outcome.verdict is Verdict.NOT_APPLICABLE:
                    na += 1
                    continue
                checked += 1
                cond = row.condition.holds(g)
                oracle = outcome.verdict is Verdict.HOLDS
                if cond != oracle:
                    mismatches.append([n, a, b, c, cond, outcome.verdict.value])
    return checked, na, mismatches


def _run_tasks(func, tasks: list[tuple], workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        return pool.map(func, tasks, chunksize=1)


def crosscheck(entry: IdentityEntry, row: TableRow, n_values: list[int],
               cap: int = DEFAULT_CAP, workers: int = 1) -> CrosscheckReport:
    """Compare the row's condition with the exhaustive oracle over the sweep."""
    if entry.identity is None:
        raise ValueError(f"entry {entry.id!r} has no defining identity")
    moduli = _sweep_moduli(row, n_values)
    report = CrosscheckReport(entry.id, row.table_number, row.variant,
                              row.label(), moduli)
    tasks = [(entry.id, row.table_number, row.variant, n, cap) for n in moduli]
    for checked, na, mismatches in _run_tasks(_crosscheck_cell, tasks, workers):
        report.checked += checked
        report.na_excluded += na
        report.mismatches.extend(Mismatch(*m[:4], m[4], m[5]) for m in mismatches)
    return report


def crosscheck_all(n_values: list[int], entry_ids: list[str] | None = None,
                   cap: int = DEFAULT_CAP, workers: int = 1) -> list[CrosscheckReport]:
    """Cross-check every row of the selected entries; deterministic order."""
    entries = ([get_entry(i) for i in entry_ids] if entry_ids is not None
               else list(catalog_entries()))
    plan: list[tuple[IdentityEntry, TableRow, list[int]]] = []
    tasks: list[tuple] = []
    for entry in entries:
        if entry.identity is None:
            continue
        for row in entry.rows:
            moduli = _sweep_moduli(row, n_values)
            plan.append((entry, row, moduli))
            tasks.extend((entry.id, row.table_number, row.variant, n, cap)
                         for n in moduli)
    results = _run_tasks(_crosscheck_cell, tasks, workers)
    reports = []
    pos = 0
    for entry, row, moduli in plan:
        report = CrosscheckReport(entry.id, row.table_number, row.variant,
                                  row.label(), moduli)
        for checked, na, mismatches in results[pos:pos + len(moduli)]:
            report.checked += checked
            report.na_excluded += na
            report.mismatches.extend(Mismatch(*m[:4], m[4], m[5]) for m in mismatches)
        pos += len(moduli)
        reports.append(report)
    return reports


# --- witness search -------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    n: int
    a: int
    b: int
    c: int
    entry_id: str
    row_label: str
    structure_kind: str
    confirmed_by: str = "brute_force"

    def to_dict(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b, "c": self.c,
                "entry": self.entry_id, "row": self.row_label,
                "structure": self.structure_kind, "confirmed_by": self.confirmed_by}


def search_witnesses(entry: IdentityEntry, row: TableRow, n_values: list[int],
                     limit: int = 1, cap: int = DEFAULT_CAP) -> list[Witness]:
    """Smallest triples (lexicographic in (n, a, b, c)) satisfying the row's
    hypothesis and structure whose groupoid satisfies the identity outright.

    Witnesses are confirmed by the exhaustive oracle only, never by the
    condition column; an empty result is itself a finding.
    """
    if entry.identity is None:
        raise ValueError(f"entry {entry.id!r} has no defining identity")
    found: list[Witness] = []
    for n in sorted(_sweep_moduli(row, n_values)):
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    g = LinearGroupoid(n, a, b, c)
                    if not row_sweep_admits(row, g):
                        continue
                    outcome = holds_bruteforce(g, entry.identity, cap)
                    if outcome.verdict is Verdict.HOLDS:
                        found.append(Witness(n, a, b, c, entry.id, row.label(),
                                             row.structure_kind.value))
                        if len(found) >= limit:
                            return found
    return found


def _scan_failures(args: tuple) -> list[tuple[int, int, int, int]]:
    """Worker task: triples of one modulus whose oracle verdict is Fails."""
    entry_id, n, cap = args
    ident = get_entry(entry_id).identity
    failures = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                out = holds_bruteforce(LinearGroupoid(n, a, b, c), ident, cap)
                if out.verdict is Verdict.FAILS:
                    failures.append((n, a, b, c))
    return failures


def universality_scan(entry_ids: list[str], n_values: list[int],
                      cap: int = DEFAULT_CAP, workers: int = 1) -> list[tuple]:
    """Triples on which a supposedly universal law fails outright.

    NotApplicable triples are not violations: the law is only claimed where
    its local elements exist.
    """
    tasks = [(entry_id, n, cap) for entry_id in entry_ids for n in n_values]
    violations: list[tuple] = []
    for (entry_id, _, _), failures in zip(tasks, _run_tasks(_scan_failures, tasks, workers)):
        violations.extend((entry_id, *t) for t in failures)
    return violations


# --- cited-example verification ---------------------------------------------------


@dataclass(frozen=True)
class Finding:
    """One disagreement between a cited example cell and the oracle."""

    source: str
    entry_id: str
    n: int
    a: int
    b: int
    c: int
    expected: str
    observed: str

    def sort_key(self) -> tuple:
        return (self.source, self.n, self.a, self.b, self.c)

    def to_dict(self) -> dict:
        return {"source": self.source, "entry": self.entry_id,
                "n": self.n, "a": self.a, "b": self.b, "c": self.c,
                "expected": self.expected, "observed": self.observed}


@dataclass
class DiscrepancyLedger:
    findings: list[Finding] = field(default_factory=list)

    def add(self, finding: Finding) -> None:
        self.findings.append(finding)

    def finalize(self) -> None:
        self.findings.sort(key=Finding.sort_key)

    def to_json(self) -> str:
        return json.dumps([f.to_dict() for f in self.findings], indent=2) + "\n"


# Worked examples cited in the prose next to the proved characterizations,
# with the catalog row whose claim they instantiate (None: law check only).
CITED_EXAMPLES: tuple[tuple[str, str, StructureKind, tuple[int, int, int, int],
                            tuple[int, int] | None], ...] = (
    ("text:unipotent:groupoid", "unipotent", StructureKind.GROUPOID, (6, 0, 5, 1), (2, 0)),
    ("text:unipotent:quasigroup", "unipotent", StructureKind.QUASIGROUP, (6, 1, 5, 1), (2, 1)),
    ("text:stein_third:groupoid", "stein_third", StructureKind.GROUPOID, (5, 0, 2, 3), (14, 0)),
    ("text:stein_third:quasigroup", "stein_third", StructureKind.QUASIGROUP, (5, 0, 2, 3), (14, 1)),
    ("text:abel_grassman:groupoid", "abel_grassman", StructureKind.GROUPOID, (6, 2, 4, 2), (20, 0)),
    ("text:abel_grassman:quasigroup", "abel_grassman", StructureKind.QUASIGROUP, (5, 2, 4, 2), (20, 1)),
    ("text:external_medial:groupoid", "external_medial", StructureKind.GROUPOID, (6, 4, 2, 2), None),
    ("text:external_medial:quasigroup", "external_medial", StructureKind.QUASIGROUP, (9, 2, 8, 1), None),
    ("text:r_cip_1:groupoid", "r_cip_1", StructureKind.GROUPOID, (5, 2, 4, 4), (45, 2)),
    ("text:r_cip_1:quasigroup", "r_cip_1", StructureKind.QUASIGROUP, (5, 3, 4, 4), (45, 3)),
)


def check_example(source: str, entry: IdentityEntry, kind: StructureKind,
                 triple: tuple[int, int, int, int], row: TableRow | None,
                 cap: int) -> Finding | None:
    g = LinearGroupoid(*triple)
    problems: list[str] = []
    if kind is StructureKind.QUASIGROUP and not is_quasigroup(g):
        problems.append("claimed quasigroup is not one (b or c shares a factor with n)")
    if row is not None:
        if not hypothesis_holds(row.hypothesis, g):
            failed = [atom.value for atom in row.hypothesis
                      if not cat.atom_holds(atom, g)]
            problems.append(f"hypothesis fails: {', '.join(failed)}")
        if not row.condition.holds(g):
            problems.append(f"stated condition fails: {row.condition.text}")
    outcome = holds_bruteforce(g, entry.identity, cap)
    if outcome.verdict is Verdict.FAILS:
        problems.append(f"identity fails, first counterexample {outcome.counterexample}")
    elif outcome.verdict is Verdict.NOT_APPLICABLE:
        problems.append(f"identity not applicable: {outcome.na_reason}")
    if not problems:
        return None
    return Finding(source, entry.id, *triple,
                   expected="example satisfies the cited claim",
                   observed="; ".join(problems))


def verify_examples(cap: int = DEFAULT_CAP) -> DiscrepancyLedger:
    """Check every concrete example cell and every cited worked example.

    Each cell must satisfy its row's hypothesis and condition, have the
    claimed structure, and satisfy the identity by exhaustive check.
    Disagreements are ledger findings, not errors: the ledger itself is the
    regression-tested output.
    """
    ledger = DiscrepancyLedger()
    for entry in catalog_entries():
        for row in entry.rows:
            if row.example_status is not ExampleStatus.GIVEN:
                continue
            source = f"table:{row.table_number:02d}.{row.variant}:{entry.id}"
            finding = check_example(source, entry, row.structure_kind,
                                   row.example, row, cap)
            if finding:
                ledger.add(finding)
    for source, entry_id, kind, triple, link in CITED_EXAMPLES:
        entry = get_entry(entry_id)
        row = None
        if link is not None:
            table_number, variant = link
            row = next(r for r in entry.rows
                       if r.table_number == table_number and r.variant == variant)
        finding = check_example(source, entry, kind, triple, row, cap)
        if finding:
            ledger.add(finding)
    ledger.finalize()
    return ledger
