"""Command-line front end: ``jorvar <verb> ...``.

Exit codes: 0 when the requested check passes, 1 when it fails, 2 for
unreadable input or unknown ids, 3 for internal consistency failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from . import catalog, cohomology, deformation
from .algebra import (
    Algebra,
    InternalCheckFailure,
    NotJordan,
    is_jordan,
    orbit_dimension,
)
from .exactla import PolyMatrix, SingularMatrix
from .formats import FormatError, parse_jalg, parse_witness

OK, FAILED, PARSE, INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


class Output:
    """Collects records; renders as aligned text or one JSON object per line."""

    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def text(self, line: str = "") -> None:
        if self.fmt == "text":
            print(line, file=self.stream)

    def record(self, **fields) -> None:
        if self.fmt == "json-lines":
            print(json.dumps(fields, default=_jsonable, sort_keys=False), file=self.stream)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def load_algebra(ref: str) -> Algebra:
    """A catalog id, a two-dimensional node name, or a path to a ``.jalg`` file."""
    p = Path(ref)
    if p.suffix == ".jalg" or p.exists():
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {ref}: {exc}") from None
        return parse_jalg(text, label=p.stem)
    try:
        return deformation.resolve(ref)
    except catalog.UnknownId:
        raise InputError(f"unknown catalog id {ref!r}") from None


def _name(a: Algebra, ref: str) -> str:
    return a.label or ref


# ---------------------------------------------------------------------------
# verbs


def cmd_show(args, out: Output) -> int:
    a = load_algebra(args.ref)
    out.text(f"{_name(a, args.ref)}  dim {a.dim}  basis {' '.join(a.basis_names)}")
    out.text(a.format_table())
    out.record(id=_name(a, args.ref), dim=a.dim, basis=a.basis_names, table=a.format_table().splitlines())
    return OK


def _fingerprint_record(a: Algebra) -> dict:
    fp = catalog.fingerprint(a)
    rec = fp.fields()
    rec["trace_form_signature"] = tuple(fp.trace_form_signature)
    return rec


def cmd_invariants(args, out: Output) -> int:
    a = load_algebra(args.ref)
    name = _name(a, args.ref)
    rec = _fingerprint_record(a)
    rec["orbit_dim"] = orbit_dimension(a)
    status = OK
    diffs = {}
    if args.ref in catalog.ids():
        diffs = catalog.table_check(args.ref)
        status = FAILED if diffs else OK
    for k, v in rec.items():
        out.text(f"{k:<24} {v if v is not None else '-'}")
    for k, (exp, got) in diffs.items():
        out.text(f"mismatch {k}: table {exp}, computed {got}")
    out.record(id=name, **rec, mismatches={k: list(v) for k, v in diffs.items()})
    return status


def cmd_check_jordan(args, out: Output) -> int:
    a = load_algebra(args.ref)
    v = is_jordan(a)
    name = _name(a, args.ref)
    if v:
        out.text(f"{name}: Jordan")
    else:
        out.text(f"{name}: not Jordan; violated tuple (i,j,k,l,p) = {v.witness}, residual {v.residual}")
    out.record(id=name, jordan=v.ok, witness=v.witness, residual=v.residual)
    return OK if v else FAILED


def cmd_fingerprint(args, out: Output) -> int:
    algs = [(ref, load_algebra(ref)) for ref in args.refs]
    recs = []
    for ref, a in algs:
        rec = _fingerprint_record(a)
        recs.append(rec)
        out.text(f"{_name(a, ref)}: " + ", ".join(f"{k}={v}" for k, v in rec.items()))
        out.record(id=_name(a, ref), **rec)
    for i in range(len(algs)):
        for j in range(i + 1, len(algs)):
            same = recs[i] == recs[j]
            differ = [k for k in recs[i] if recs[i][k] != recs[j][k]]
            x, y = _name(algs[i][1], algs[i][0]), _name(algs[j][1], algs[j][0])
            out.text(f"{x} vs {y}: " + ("equal fingerprints" if same else "differ in " + ", ".join(differ)))
            out.record(pair=[x, y], equal=same, differ=differ)
    return OK


def cmd_iso_verify(args, out: Output) -> int:
    if args.nilpotent21:
        try:
            vals = [Fraction(x) for x in args.nilpotent21]
        except ValueError:
            raise InputError("--nilpotent21 takes three rationals") from None
        try:
            cl = catalog.classify_nilpotent_21(*vals)
        except catalog.AllZero as exc:
            raise InputError(str(exc)) from None
        ok = cl.witness is not None and catalog.verify_iso(cl.witness)
        out.text(f"N({', '.join(map(str, vals))}): delta {cl.delta}, case {cl.case}, class {cl.target_id}")
        if cl.witness is None:
            out.text("witness needs an irrational square root; class reported without certificate")
        else:
            out.text(f"witness {cl.witness.matrix} verifies: {ok}")
        out.record(
            alpha=vals[0], beta=vals[1], gamma=vals[2], delta=cl.delta, case=cl.case,
            target=cl.target_id, certified=ok,
        )
        return OK if ok else FAILED
    if not (args.source and args.target and args.matrix):
        raise InputError("iso-verify needs SOURCE TARGET --matrix FILE, or --nilpotent21 A B C")
    src, dst = load_algebra(args.source), load_algebra(args.target)
    g = _read_witness(args.matrix)
    if any(p.degree > 0 for r in g.entries for p in r):
        raise InputError("isomorphism matrix must be constant")
    m = g.at(0)
    w = catalog.IsoWitness(args.source, args.target, m, src, dst)
    try:
        ok = catalog.verify_iso(w)
    except SingularMatrix:
        out.text("matrix is singular")
        out.record(source=args.source, target=args.target, verified=False, reason="singular")
        return FAILED
    out.text(f"{args.source} -> {args.target}: {'verified' if ok else 'constants differ'}")
    out.record(source=args.source, target=args.target, verified=ok)
    return OK if ok else FAILED


def _read_witness(path: str) -> PolyMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_witness(text)


def cmd_deform_verify(args, out: Output) -> int:
    for ref in (args.source, args.target):
        deformation.resolve(ref)
    if args.witness:
        g = _read_witness(args.witness)
        try:
            w = deformation.Witness(args.source, args.target, g, deformation.Provenance.DERIVED, args.witness)
        except deformation.IdenticallySingular as exc:
            out.text(str(exc))
            out.record(source=args.source, target=args.target, verified=False, reason=str(exc))
            return FAILED
    else:
        w = deformation.registered_witness(args.source, args.target)
        if w is None:
            msg = "no registered witness; pass --witness FILE"
            out.text(f"{args.source} -> {args.target}: {msg}")
            out.record(source=args.source, target=args.target, verified=False, reason=msg)
            return FAILED
    res = deformation.verify_arrow(w)
    out.text(f"{args.source} -> {args.target} [{w.provenance.value}]: {'verified' if res else 'rejected'} ({res.reason})")
    if not res and res.limit is not None:
        out.text("limit algebra:")
        out.text(res.limit.format_table())
    out.record(
        source=args.source, target=args.target, provenance=w.provenance.value,
        verified=res.ok, reason=res.reason,
    )
    return OK if res else FAILED


def cmd_audit(args, out: Output) -> int:
    rep = deformation.necessary_conditions_audit(args.source, args.target)
    for line in rep.lines():
        out.text(line)
    for c in rep.checks:
        out.record(
            source=rep.source, target=rep.target, item=c.item, quantity=c.quantity,
            relation=c.relation, source_value=c.source_value, target_value=c.target_value, passed=c.passed,
        )
    return OK if rep.ok else FAILED


def cmd_graph(args, out: Output) -> int:
    g = deformation.build_dim2_graph() if args.dim2 else deformation.build_closure_graph()
    for e in g.edges:
        prov = e.witness.provenance.value if e.witness else "-"
        out.text(f"{e.source:>6} -> {e.target:<6} {e.status.value:<20} {prov}")
        out.record(source=e.source, target=e.target, status=e.status.value, provenance=prov)
    maximal = g.maximal_nodes()
    out.text(f"nodes {len(g.nodes)}, edges {len(g.edges)}")
    out.text(f"maximal nodes: {' '.join(maximal)}")
    ok = set(maximal) == set(g.rigid_set)
    try:
        rep = deformation.rigid_coverage_check(g)
    except deformation.CoverageGap as exc:
        out.text(str(exc))
        out.record(coverage=False, uncovered=exc.node)
        ok = False
    else:
        for line in rep.lines():
            out.text(line)
        out.record(
            nodes=len(g.nodes), edges=len(g.edges), maximal=maximal, coverage=True,
            rigidity_consistent=rep.rigidity_consistent,
        )
        ok = ok and rep.rigidity_consistent
    if args.dot:
        Path(args.dot).write_text(deformation.to_dot(g), encoding="utf-8")
        out.text(f"wrote {args.dot}")
    return OK if ok else FAILED


def _nt(x) -> str:
    return "-" if x is None else "(" + ",".join(map(str, x)) + ")"


def cmd_catalog_audit(args, out: Output) -> int:
    cids = catalog.ids() if args.all else catalog.jordan3_ids()
    out.text(f"{'id':<4} {'Der':>3} {'Ann':>3} {'Rad':>3} {'niltype':<8} {'assoc':<5} {'unital':<6} match")
    bad = 0
    for cid in cids:
        inv = catalog.invariants(catalog.algebra(cid))
        diffs = catalog.table_check(cid)
        bad += bool(diffs)
        jordan = is_jordan(catalog.algebra(cid)).ok
        bad += not jordan
        out.text(
            f"{cid:<4} {inv.dim_der:>3} {inv.dim_ann:>3} {inv.dim_rad:>3} {_nt(inv.niltype):<8} "
            f"{'yes' if inv.associative else 'no':<5} {'yes' if inv.unital else 'no':<6} "
            f"{'ok' if not diffs and jordan else 'MISMATCH ' + ','.join(diffs)}"
        )
        out.record(id=cid, jordan=jordan, **asdict(inv), mismatches=sorted(diffs))
    rep = catalog.pairwise_distinct_audit()
    out.text(f"distinct fingerprints among J1..J26: {rep.distinct} of {len(rep.labels)}")
    for x, y in rep.collisions:
        out.text(f"collision {x} {y}")
    out.record(distinct=rep.distinct, total=len(rep.labels), collisions=[list(c) for c in rep.collisions])
    if args.export:
        written = catalog.export_catalog(args.export)
        out.text(f"exported {len(written)} files to {args.export}")
    return OK if not bad and rep.ok else FAILED


def cmd_cocycle(args, out: Output) -> int:
    a = load_algebra(args.ref)
    s = cohomology.cocycle_system(a)
    z2, b2 = cohomology.z2_dim(a), cohomology.b2_dim(a)
    cert = cohomology.rigidity_certificate(a)
    rows, cols = s.shape
    out.text(f"{_name(a, args.ref)}: system {rows}x{cols}, z2={z2} b2={b2} h2={z2 - b2} {cert.value}")
    out.record(id=_name(a, args.ref), rows=rows, cols=cols, z2=z2, b2=b2, h2=z2 - b2, certificate=cert.value)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jorvar", description="Exact tools for low-dimensional Jordan algebras.")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    s = sub.add_parser("show", help="print the multiplication table")
    s.add_argument("ref")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("invariants", help="print the fingerprint of an algebra")
    s.add_argument("ref")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("check-jordan", help="verify the Jordan identity")
    s.add_argument("ref")
    s.set_defaults(func=cmd_check_jordan)

    s = sub.add_parser("fingerprint", help="compare fingerprints of several algebras")
    s.add_argument("refs", nargs="+")
    s.set_defaults(func=cmd_fingerprint)

    s = sub.add_parser("iso-verify", help="check an isomorphism witness")
    s.add_argument("source", nargs="?")
    s.add_argument("target", nargs="?")
    s.add_argument("--matrix", help="witness file with constant entries")
    s.add_argument("--nilpotent21", nargs=3, metavar=("ALPHA", "BETA", "GAMMA"))
    s.set_defaults(func=cmd_iso_verify)

    s = sub.add_parser("deform-verify", help="verify a degeneration witness g(t)")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--witness", help="witness file; defaults to the registered witness")
    s.set_defaults(func=cmd_deform_verify)

    s = sub.add_parser("audit", help="necessary conditions for a degeneration")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("graph", help="build the orbit-closure graph")
    s.add_argument("--dot", help="write the graph in DOT format")
    s.add_argument("--dim2", action="store_true", help="two-dimensional graph instead")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("catalog-audit", help="recompute catalog invariants and the distinctness audit")
    s.add_argument("--all", action="store_true", help="include dimensions 1 and 2")
    s.add_argument("--export", metavar="DIR", help="write .jalg files and a manifest")
    s.set_defaults(func=cmd_catalog_audit)

    s = sub.add_parser("cocycle", help="Z2, B2 and H2 dimensions")
    s.add_argument("ref")
    s.set_defaults(func=cmd_cocycle)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return PARSE if exc.code else OK
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except (InputError, FormatError, catalog.UnknownId, KeyError) as exc:
        print(f"jorvar: {exc}", file=stderr)
        return PARSE
    except NotJordan as exc:
        print(f"jorvar: {exc}", file=stderr)
        return FAILED
    except deformation.AuditFailure as exc:
        print(f"jorvar: {exc}", file=stderr)
        return FAILED
    except (InternalCheckFailure, deformation.NotJordanAtLimit) as exc:
        print(f"jorvar: internal check failed: {exc}", file=stderr)
        return INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
