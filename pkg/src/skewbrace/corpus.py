"""Brace documents on disk, full analysis reports, and the open-problem scan.

Document format (one brace per file; ``#`` at the start of a line or after
whitespace starts a comment, so names like ``S3#3`` survive)::

    name B4
    order 4
    meta source bilinear
    add
    0 1 2 3
    ...
    circ
    0 1 2 3
    ...

Group documents use the same layout with a single ``table`` section.
"""

from __future__ import annotations

import json
import re
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .brace import SkewBrace, fix_ker_meet, make_brace, verify_identities
from .commutator import conjecture_commutator_equality, is_abelian_brace, largest_central_ideal
from .errors import InternalInconsistency, ParseError, SkewBraceError, ValidationError
from .groups import ElementSet, FiniteGroup, make_group
from .series import (
    lower_central_series,
    mixed_star_series,
    left_star_series,
    nilpotency_report,
    right_star_series,
    upper_central_series,
)
from .substructures import all_ideals, distinguished_sets, is_ideal, is_left_ideal
from .ybe import canonical_solution, check_nondegenerate_involutive, check_ybe

SUFFIX = ".brace"


@dataclass
class BraceDoc:
    name: str
    order: int
    add: list[list[int]]
    circ: list[list[int]]
    metadata: dict[str, str] = field(default_factory=dict)

    def to_brace(self) -> SkewBrace:
        try:
            return make_brace(self.add, self.circ, name=self.name)
        except SkewBraceError as exc:
            raise ValidationError(f"{self.name}: {exc}", witness=exc.witness) from exc

    @classmethod
    def from_brace(cls, B: SkewBrace, name: str | None = None,
                   metadata: dict[str, str] | None = None) -> BraceDoc:
        return cls(name or B.name or "brace", B.order, B.add.op.tolist(), B.circ.op.tolist(),
                   dict(metadata or {}))


_COMMENT = re.compile(r"(^|\s)#.*$")


def _strip_comment(raw: str) -> str:
    return _COMMENT.sub("", raw).strip()


def _parse_sections(text: str, sections: tuple[str, ...]):
    header: dict[str, Any] = {"metadata": {}}
    tables: dict[str, list[list[int]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word in sections and not rest:
            if word in tables:
                raise ParseError("duplicate section", lineno, word)
            current = word
            tables[word] = []
        elif word == "name":
            header["name"] = rest
            current = None
        elif word == "order":
            try:
                header["order"] = int(rest)
            except ValueError:
                raise ParseError(f"order must be an integer, got {rest!r}", lineno, "order") from None
            current = None
        elif word == "meta":
            key, _, value = rest.partition(" ")
            if not key:
                raise ParseError("meta needs a key", lineno, "meta")
            header["metadata"][key] = value.strip()
            current = None
        elif current is not None:
            try:
                row = [int(v) for v in line.split()]
            except ValueError:
                raise ParseError(f"non-integer entry in {line!r}", lineno, current) from None
            tables[current].append(row)
        else:
            raise ParseError(f"unexpected line {line!r}", lineno)
    if "order" not in header:
        raise ParseError("missing order", field="order")
    n = header["order"]
    if n < 1:
        raise ParseError("order must be positive", field="order")
    for s in sections:
        if s not in tables:
            raise ParseError("missing section", field=s)
        rows = tables[s]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"table is not {n}x{n}", field=s)
    return header, tables


def parse_brace_doc(text: str) -> BraceDoc:
    header, tables = _parse_sections(text, ("add", "circ"))
    return BraceDoc(header.get("name", "brace"), header["order"], tables["add"], tables["circ"],
                    header["metadata"])


def format_table(t) -> list[str]:
    t = np.asarray(t)
    width = len(str(t.shape[0] - 1))
    return [" ".join(str(int(v)).rjust(width) for v in row) for row in t]


def dump_brace_doc(doc: BraceDoc) -> str:
    lines = [f"name {doc.name}", f"order {doc.order}"]
    for k in sorted(doc.metadata):
        lines.append(f"meta {k} {doc.metadata[k]}")
    lines.append("add")
    lines += format_table(doc.add)
    lines.append("circ")
    lines += format_table(doc.circ)
    return "\n".join(lines) + "\n"


def read_doc(path) -> BraceDoc:
    return parse_brace_doc(Path(path).read_text())


def load_brace(path) -> SkewBrace:
    return read_doc(path).to_brace()


def save_brace(B: SkewBrace, path, *, name: str | None = None,
               metadata: dict[str, str] | None = None) -> Path:
    path = Path(path)
    path.write_text(dump_brace_doc(BraceDoc.from_brace(B, name, metadata)))
    return path


def load_group(path) -> FiniteGroup:
    header, tables = _parse_sections(Path(path).read_text(), ("table",))
    try:
        return make_group(tables["table"])
    except SkewBraceError as exc:
        raise ValidationError(f"{path}: {exc}", witness=exc.witness) from exc


def save_group(G: FiniteGroup, path, name: str = "group") -> Path:
    path = Path(path)
    path.write_text("\n".join([f"name {name}", f"order {G.order}", "table"]
                              + format_table(G.op)) + "\n")
    return path


def load_table(path) -> np.ndarray:
    """Bare whitespace-separated integer matrix (for cocycle and form tables)."""
    rows = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = _strip_comment(raw)
        if line:
            try:
                rows.append([int(v) for v in line.split()])
            except ValueError:
                raise ParseError(f"non-integer entry in {line!r}", lineno) from None
    if not rows or len({len(r) for r in rows}) != 1:
        raise ParseError(f"{path}: ragged or empty table")
    return np.array(rows, dtype=np.int64)


# ------------------------------------------------------------------ analysis


def _members(S: ElementSet) -> list[int]:
    return list(S.members)


@dataclass
class AnalysisReport:
    name: str
    order: int
    identities: dict[str, bool]
    distinguished: dict[str, list[int]]
    ideals: list[list[int]]
    series: dict[str, dict[str, Any]]
    nilpotency: dict[str, Any]
    abelian: bool
    largest_central_ideal: list[int]
    commutators: list[dict[str, Any]]
    conjectures: dict[str, Any]
    ybe: dict[str, bool]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "identities": self.identities,
            "distinguished": self.distinguished,
            "ideals": self.ideals,
            "series": self.series,
            "nilpotency": self.nilpotency,
            "abelian": self.abelian,
            "largest_central_ideal": self.largest_central_ideal,
            "commutators": self.commutators,
            "conjectures": self.conjectures,
            "ybe": self.ybe,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        nil = self.nilpotency
        out = [f"brace {self.name} (order {self.order})"]
        bad = [k for k, v in self.identities.items() if not v]
        out.append("identities: " + ("all pass" if not bad else "FAIL " + ", ".join(bad)))
        for k, v in self.distinguished.items():
            out.append(f"{k}: {v}")
        out.append(f"ideals ({len(self.ideals)}): " + "; ".join(map(str, self.ideals)))
        for kind, s in self.series.items():
            sizes = " ".join(str(len(st)) for st in s["stages"])
            out.append(f"series {kind}: sizes {sizes}; class {s['class_index']}")
        cn = nil["centrally_nilpotent_class"]
        out.append("centrally nilpotent: " + (f"yes, class {cn}" if cn is not None else "no"))
        out.append(f"nilpotent type: {nil['nilpotent_type']}; (A,o) nilpotent: {nil['circ_nilpotent']}")
        out.append(f"finite-case conditions (i, ii, iii): {tuple(nil['finite_case'])}")
        out.append(f"abelian (commutator sense): {self.abelian}")
        out.append(f"largest central ideal: {self.largest_central_ideal}")
        out.append("commutators [I,J]:")
        for c in self.commutators:
            out.append(f"  {c['I']} , {c['J']} -> {c['commutator']}")
        out.append("open problems:")
        for k, v in self.conjectures.items():
            out.append(f"  {k}: {v}")
        y = self.ybe
        out.append(f"YBE: holds={y['ybe']} nondegenerate={y['nondegenerate']} involutive={y['involutive']}")
        return "\n".join(out) + "\n"


def series_dict(s) -> dict[str, Any]:
    return {"stages": [_members(x) for x in s.stages], "class_index": s.class_index,
            "stabilized": s.stabilized}


def conjecture_verdicts(B: SkewBrace, ideals=None, gamma=None, comm=None) -> dict[str, Any]:
    """Per-brace answers to the three open questions (observations, never assumptions)."""
    gamma = gamma or lower_central_series(B)
    comm = comm or conjecture_commutator_equality(B, ideals)
    fk = fix_ker_meet(B)
    return {
        "fix_ker_is_ideal": is_ideal(B, fk),
        "gamma_are_left_ideals": all(is_left_ideal(B, g) for g in gamma.stages),
        "gamma_are_ideals": all(is_ideal(B, g) for g in gamma.stages),
        "commutator_is_generated_ideal": comm.equality_holds,
        "commutator_equals_sum": comm.raw_equality_holds,
        "sum_is_ideal": all(p.raw_is_ideal for p in comm.pairs),
    }


def analyze(B: SkewBrace) -> AnalysisReport:
    """Everything the library computes about one brace.

    Any violated theorem surfaces as :class:`InternalInconsistency`.
    """
    ident = verify_identities(B)
    if not ident.all_passed:
        raise InternalInconsistency(f"identity failures: {ident.witnesses}")
    ds = distinguished_sets(B)
    ideals = all_ideals(B)
    upper = upper_central_series(B)
    gamma = lower_central_series(B)
    nil = nilpotency_report(B, upper=upper, gamma=gamma)
    comm = conjecture_commutator_equality(B, ideals)
    lci = largest_central_ideal(B, ideals)
    sol = canonical_solution(B)
    nondeg, invol = check_nondegenerate_involutive(sol)
    return AnalysisReport(
        name=B.name or "brace",
        order=B.order,
        identities=dict(ident.checks),
        distinguished={"fix": _members(ds.fix), "ker_lambda": _members(ds.ker_lambda),
                       "soc": _members(ds.soc), "zeta": _members(ds.zeta)},
        ideals=[_members(I) for I in ideals],
        series={
            "upper_zeta": series_dict(upper),
            "lower_gamma": series_dict(gamma),
            "left_star": series_dict(left_star_series(B)),
            "right_star": series_dict(right_star_series(B)),
            "mixed_star": series_dict(mixed_star_series(B)),
        },
        nilpotency={
            "centrally_nilpotent_class": nil.centrally_nilpotent_class,
            "left_star_class": nil.left_star_class,
            "right_star_class": nil.right_star_class,
            "mixed_star_class": nil.mixed_star_class,
            "add_group_class": nil.add_group_class,
            "circ_group_class": nil.circ_group_class,
            "nilpotent_type": nil.nilpotent_type,
            "circ_nilpotent": nil.circ_nilpotent,
            "finite_case": list(nil.finite_case),
        },
        abelian=is_abelian_brace(B),
        largest_central_ideal=_members(lci),
        commutators=[{"I": _members(p.I), "J": _members(p.J), "commutator": _members(p.upper),
                      "generated_ideal": _members(p.lower)} for p in comm.pairs],
        conjectures=conjecture_verdicts(B, ideals, gamma, comm),
        ybe={"ybe": bool(check_ybe(sol)), "nondegenerate": nondeg, "involutive": invol},
    )


# ------------------------------------------------------------- corpus scans


@dataclass
class ConjectureSummary:
    entries: list[dict[str, Any]] = field(default_factory=list)

    @property
    def errors(self) -> list[dict[str, Any]]:
        return [e for e in self.entries if "error" in e]

    @property
    def inconsistent(self) -> bool:
        return any(e.get("kind") == "inconsistency" for e in self.errors)

    def aggregate(self) -> dict[str, dict[str, int]]:
        agg: dict[str, dict[str, int]] = {}
        for e in self.entries:
            for k, v in e.get("verdicts", {}).items():
                slot = agg.setdefault(k, {"holds": 0, "fails": 0})
                slot["holds" if v else "fails"] += 1
        return agg

    def exit_code(self) -> int:
        if self.inconsistent:
            return 3
        if self.errors:
            return 2
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {"files": self.entries, "aggregate": self.aggregate(),
                "errors": len(self.errors)}

    def to_text(self) -> str:
        out = []
        for e in self.entries:
            if "error" in e:
                out.append(f"{e['file']}: ERROR ({e['kind']}) {e['error']}")
            else:
                v = ", ".join(f"{k}={'yes' if b else 'NO'}" for k, b in e["verdicts"].items())
                out.append(f"{e['file']}: {v}")
        out.append("aggregate:")
        for k, c in self.aggregate().items():
            out.append(f"  {k}: holds on {c['holds']}, fails on {c['fails']}")
        out.append(f"errors: {len(self.errors)}")
        return "\n".join(out) + "\n"


def _scan_one(path: str) -> dict[str, Any]:
    entry: dict[str, Any] = {"file": os.path.basename(path)}
    try:
        B = load_brace(path)
        entry["name"] = B.name
        entry["order"] = B.order
        entry["verdicts"] = conjecture_verdicts(B)
    except InternalInconsistency as exc:
        entry.update(error=str(exc), kind="inconsistency")
    except (SkewBraceError, OSError) as exc:
        entry.update(error=str(exc), kind="invalid")
    return entry


def run_conjecture_suite(directory, jobs: int = 1) -> ConjectureSummary:
    """Scan every ``*.brace`` file; one bad file only adds an error entry."""
    files = sorted(str(p) for p in Path(directory).glob(f"*{SUFFIX}"))
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_scan_one, files))
    else:
        entries = [_scan_one(f) for f in files]
    return ConjectureSummary(entries)


def write_corpus(braces, directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, B in enumerate(braces):
        stem = (B.name or f"brace{i}").replace("/", "_").replace(" ", "_")
        paths.append(save_brace(B, directory / f"{i:03d}_{stem}{SUFFIX}"))
    return paths
