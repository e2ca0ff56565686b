"""Batch command-line front end.

Every subcommand prints one report (JSON by default, CSV on request) and
exits 0 when all checks pass, 1 when a mathematical check fails and 2 on
usage or parameter-domain errors.
"""

from __future__ import annotations

import os

_threads = os.environ.get("HECKELAB_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import argparse  # noqa: E402
import csv  # noqa: E402
import io  # noqa: E402
import json  # noqa: E402
import sys  # noqa: E402
from typing import Any, Callable, Sequence  # noqa: E402

from . import __version__  # noqa: E402

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# -- report assembly -------------------------------------------------------------


def _jsonable(x: Any) -> Any:
    if isinstance(x, complex):
        return [_num(x.real), _num(x.imag)]
    if isinstance(x, float):
        return _num(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item") and callable(x.item):  # numpy scalars
        return _jsonable(x.item())
    return x


def _num(x: float) -> float:
    if x == 0:
        return 0.0
    return float(f"{x:.15g}")


class Report:
    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params
        self.checks: list[dict] = []

    def add(self, check_id: str, ref: str, passed: bool, **data):
        self.checks.append({"id": check_id, "paper_ref": ref, "pass": bool(passed), "data": data})

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def as_dict(self) -> dict:
        checks = sorted(self.checks, key=lambda c: c["id"])
        n_pass = sum(c["pass"] for c in checks)
        return _jsonable(
            {
                "tool_version": __version__,
                "command": self.command,
                "params": self.params,
                "checks": checks,
                "summary": {"total": len(checks), "passed": n_pass, "failed": len(checks) - n_pass, "pass": self.passed},
            }
        )

    def render(self, fmt: str) -> str:
        d = self.as_dict()
        if fmt == "json":
            return json.dumps(d, sort_keys=True, indent=2) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["command", "id", "pass", "paper_ref", "data"])
        for c in d["checks"]:
            w.writerow([d["command"], c["id"], str(c["pass"]).lower(), c["paper_ref"], json.dumps(c["data"], sort_keys=True)])
        return buf.getvalue()


# -- parameter helpers -----------------------------------------------------------


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"expected integers, got {text!r}") from exc


def _q_from(args, default: float | None = None) -> complex | None:
    if getattr(args, "v", None) is not None:
        if args.v == 0:
            raise UsageError("v must be nonzero")
        return args.v**-2
    if getattr(args, "q", None) is not None:
        return args.q
    return default


def _v_from(args) -> float:
    if getattr(args, "v", None) is not None:
        return args.v
    if getattr(args, "q", None) is not None:
        if args.q <= 1:
            raise UsageError("q must exceed 1 so that v = q^(-1/2) lies in (0, 1)")
        return args.q**-0.5
    raise UsageError("one of --v or --q is required")


def _turns(x: float) -> complex:
    from .fqsl2 import turns_to_unit

    return turns_to_unit(x)


def _add_vq(p: argparse.ArgumentParser, required: bool = False):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--v", type=float, help="deformation parameter v")
    g.add_argument("--q", type=float, help="q = v^-2")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized choices")


# -- coxeter ---------------------------------------------------------------------


def cmd_coxeter_word(args) -> Report:
    from .coxeter import from_word, length, parse_window, reduced_decomposition

    w = parse_window(args.window, args.type)
    letters, k = reduced_decomposition(w)
    back = from_word(args.type, w.rank, letters, k)
    rep = Report("coxeter word", {"type": args.type, "window": list(w.window)})
    rep.add(
        "reduced-word",
        "reduced decomposition of a Weyl group element",
        back == w and len(letters) == length(w),
        letters=letters,
        rotation_power=k,
        length=length(w),
    )
    return rep


def cmd_coxeter_enumerate(args) -> Report:
    from .coxeter import bfs_lengths, enumerate_up_to_length, format_word, reduced_decomposition

    elems = enumerate_up_to_length(args.type, args.rank, args.L)
    lens = bfs_lengths(args.type, args.rank, args.L)
    rep = Report("coxeter enumerate", {"type": args.type, "rank": args.rank, "L": args.L})
    by_len: dict[int, int] = {}
    for w in elems:
        by_len[lens[w]] = by_len.get(lens[w], 0) + 1
    rep.add(
        "enumeration",
        "elements of the (affine) Weyl group up to a length bound",
        len(elems) == len(lens),
        count=len(elems),
        by_length={str(k): by_len[k] for k in sorted(by_len)},
        elements=[format_word(*reduced_decomposition(w)) for w in elems] if args.list else None,
    )
    return rep


# -- hecke -----------------------------------------------------------------------


def cmd_hecke_mul(args) -> Report:
    from .hecke import format_hecke, mul, parse_hecke

    a = parse_hecke(args.a, args.type, args.rank)
    b = parse_hecke(args.b, args.type, args.rank)
    prod = mul(a, b, args.cutoff)
    rep = Report("hecke mul", {"type": args.type, "rank": args.rank, "a": args.a, "b": args.b, "cutoff": args.cutoff})
    data: dict = {"product": format_hecke(prod)}
    v = args.v if args.v is not None else (args.q**-0.5 if args.q is not None else None)
    if v is not None:
        data["evaluated"] = {_basis_label(w): c(v) for w, c in sorted(prod.terms.items(), key=lambda kv: kv[0].window)}
    rep.add("product", "multiplication in the Coxeter presentation", True, **data)
    return rep


def _basis_label(w) -> str:
    from .coxeter import format_word, reduced_decomposition

    return f"T[{format_word(*reduced_decomposition(w))}]"


def cmd_hecke_verify(args) -> Report:
    from .hecke import verify_presentation

    res = verify_presentation(args.type, args.rank, args.cutoff)
    rep = Report("hecke verify", {"type": args.type, "rank": args.rank, "cutoff": args.cutoff})
    for fam, count in res.counts.items():
        bad = [v for v in res.violations if v["relation"] == fam]
        rep.add(f"relation:{fam}", "Coxeter presentation of the Hecke algebra", not bad, checked=count, violations=bad[:5])
    return rep


# -- bernstein -------------------------------------------------------------------


def cmd_bernstein_check(args) -> Report:
    from .bernstein import check_bernstein_relations, check_lattice_homomorphism

    rep = Report("bernstein check", {"rank": args.rank, "cutoff": args.cutoff, "radius": args.radius})
    for k, r in enumerate(check_bernstein_relations(args.rank, args.cutoff)):
        rep.add(f"relation:{k:03d}", "Bernstein presentation relations", r.equal, **r.as_dict())
    if args.radius is not None:
        lattice = check_lattice_homomorphism(args.rank, args.radius, None)
        bad = [r.as_dict() for r in lattice if not r.equal]
        rep.add("lattice", "X^lam X^mu = X^(lam+mu) on a box", not bad, checked=len(lattice), violations=bad[:5])
    return rep


# -- specht ----------------------------------------------------------------------


def _specht_q(args) -> tuple[complex, str]:
    from .specht import GENERIC_Q, root_of_unity

    if args.q_root:
        if args.l is None:
            raise UsageError("--q-root needs --l")
        return root_of_unity(args.l), f"primitive {args.l}-th root of unity"
    q = _q_from(args)
    if q is None:
        return GENERIC_Q, "generic"
    return q, "numeric"


def cmd_specht_table(args) -> Report:
    from .specht import d_dimension, is_l_regular, partitions, specht_dimension, standard_tableaux_count

    if args.n < 1:
        raise UsageError("n must be positive")
    q, qkind = _specht_q(args)
    rep = Report("specht table", {"n": args.n, "l": args.l, "q": q, "q_kind": qkind})
    for lam in partitions(args.n):
        s = specht_dimension(lam, q)
        syt = standard_tableaux_count(lam)
        row: dict = {"partition": list(lam), "dim_S": s, "syt": syt}
        ok = s == syt
        if args.l is not None:
            dd = d_dimension(lam, args.l, q)
            reg = is_l_regular(lam, args.l)
            row.update({"dim_D": dd, "l_regular": reg})
            if args.q_root:
                ok = ok and ((dd > 0) == reg)
        rep.add(
            "partition:" + ",".join(map(str, lam)),
            "Specht module dimension; D nonzero exactly for l-regular partitions",
            ok,
            **row,
        )
    return rep


def cmd_specht_dim(args) -> Report:
    from .specht import Partition, d_dimension, hook_length_count, specht_dimension, standard_tableaux_count

    lam = Partition(_parse_ints(args.partition))
    q, qkind = _specht_q(args)
    s = specht_dimension(lam, q)
    rep = Report("specht dim", {"partition": list(lam), "q": q, "q_kind": qkind, "l": args.l})
    rep.add("dim_S", "Specht module dimension", s == standard_tableaux_count(lam), dim_S=s, syt=standard_tableaux_count(lam), hook=hook_length_count(lam))
    if args.l is not None:
        rep.add("dim_D", "dimension of the simple quotient D", True, dim_D=d_dimension(lam, args.l, q))
    return rep


# -- schur -----------------------------------------------------------------------


def cmd_schur_basis(args) -> Report:
    from .schur import schur_basis, schur_dimension_formula

    basis = schur_basis(args.n, args.r)
    formula = schur_dimension_formula(args.n, args.r)
    rep = Report("schur basis", {"n": args.n, "r": args.r})
    data: dict = {"count": len(basis), "formula": formula}
    if args.check_blocks:
        data["blocks_ok"] = all(x.check_blocks() for _, _, x in basis)
    rep.add("basis-count", "double-coset basis of the v-Schur algebra", len(basis) == formula and data.get("blocks_ok", True), **data)
    return rep


def cmd_schur_duality(args) -> Report:
    from .schur import duality_check

    q = _q_from(args, 3.0)
    res = duality_check(args.n, args.r, q, args.mode, args.cutoff)
    rep = Report("schur duality", {"n": args.n, "r": args.r, "q": q, "mode": args.mode})
    d = res.as_dict()
    ok = res.match if res.conclusive else True
    rep.add("duality", "Schur-Weyl duality on the tensor space", ok, **d)
    return rep


def cmd_schur_dg(args) -> Report:
    from .schur import COPRODUCT_CONVENTION, doty_giaquinto_check

    v = args.v
    if v is None and args.q is not None:
        v = args.q**-0.5
    res = doty_giaquinto_check(args.d, v)
    rep = Report("schur dg-check", {"d": args.d, "v": v, "coproduct": COPRODUCT_CONVENTION})
    for key in sorted(res):
        rep.add(f"relation:{key}", "Doty-Giaquinto relations for S(2, d)", res[key]["pass"], **res[key])
    return rep


# -- fq --------------------------------------------------------------------------


def cmd_fq_normal_form(args) -> Report:
    from .fqsl2 import normal_form, parse_ncpoly, relation_set

    R = relation_set(args.mode)
    p = parse_ncpoly(args.expr)
    nf = normal_form(p, R, args.budget)
    rep = Report("fq normal-form", {"expr": args.expr, "mode": args.mode, "budget": args.budget})
    rep.add("normal-form", "rewriting modulo the F_v(SL_2) relations", normal_form(nf, R, args.budget) == nf, input=str(p), normal_form=str(nf))
    return rep


def _fq_rep(args, t: complex):
    from .fqsl2 import rep_pi, rep_tau

    if args.kind == "tau":
        return rep_tau(t)
    return rep_pi(t, _v_from(args), args.N, args.variant)


def cmd_fq_rep_check(args) -> Report:
    from .fqsl2 import relation_residual

    t = _turns(args.t)
    rep_obj = _fq_rep(args, t)
    res = relation_residual(rep_obj, args.relations)
    rep = Report(
        "fq rep-check",
        {"kind": args.kind, "variant": args.variant, "N": args.N, "v": rep_obj.v, "t": t, "relations": args.relations, "tol": args.tol},
    )
    for row in res.rows():
        rep.add(
            "residual:" + row["relation_id"],
            "relations of F_v(SL_2) on the classified representations",
            row["residual"] < args.tol,
            **row,
        )
    return rep


def cmd_fq_commutant(args) -> Report:
    from .fqsl2 import commutant_dim, tensor_rep

    t = _turns(args.t)
    if args.word:
        rep_obj = tensor_rep(_parse_ints(args.word), t, _v_from(args), args.N, args.m, args.variant)
    else:
        rep_obj = _fq_rep(args, t)
    dim = commutant_dim(rep_obj)
    rep = Report("fq commutant", {"kind": args.kind, "variant": args.variant, "N": args.N, "v": rep_obj.v, "t": t, "word": args.word})
    rep.add("commutant", "irreducibility proxy: commutant dimension 1", dim == 1, commutant_dim=dim, dim=rep_obj.dim)
    return rep


def cmd_fq_equiv(args) -> Report:
    from .fqsl2 import equivalence_check

    t1, t2 = _turns(args.t1), _turns(args.t2)
    r1, r2 = _fq_rep(args, t1), _fq_rep(args, t2)
    res = equivalence_check(r1, r2, seed=args.seed)
    expected = abs(t1 - t2) < 1e-12
    rep = Report("fq equiv", {"kind": args.kind, "variant": args.variant, "N": args.N, "t1": t1, "t2": t2})
    rep.add(
        "equivalence",
        "representations with distinct t are unitarily inequivalent",
        res["equivalent"] == expected,
        expected_equivalent=expected,
        **res,
    )
    return rep


def cmd_fq_tensor(args) -> Report:
    from .fqsl2 import COPRODUCT_CONVENTION, relation_residual, tensor_rep

    t = _turns(args.t)
    word = _parse_ints(args.word) if args.word else []
    rep_obj = tensor_rep(word, t, _v_from(args), args.N, args.m, args.variant)
    res = relation_residual(rep_obj)
    rep = Report(
        "fq tensor",
        {"word": word, "m": rep_obj.m, "N": args.N, "v": rep_obj.v, "t": t, "coproduct": COPRODUCT_CONVENTION, "tol": args.tol},
    )
    for row in res.rows():
        rep.add("residual:" + row["relation_id"], "tensor representations along a reduced word", row["residual"] < args.tol, **row)
    return rep


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heckelab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"heckelab {__version__}")
    top = p.add_subparsers(dest="group", required=True)

    def sub(group, name, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = group.add_parser(name, help=help_)
        _common(sp)
        sp.set_defaults(func=fn)
        return sp

    g = top.add_parser("coxeter", help="Weyl group words").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "word", cmd_coxeter_word, "reduced word of a window")
    sp.add_argument("--type", choices=("finite", "affine"), default="finite")
    sp.add_argument("--window", required=True, help="window, e.g. '3,1,2'")
    sp = sub(g, "enumerate", cmd_coxeter_enumerate, "elements up to a length")
    sp.add_argument("--type", choices=("finite", "affine"), default="finite")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--list", action="store_true", help="include reduced words")

    g = top.add_parser("hecke", help="Hecke algebra arithmetic").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "mul", cmd_hecke_mul, "multiply two elements")
    sp.add_argument("--type", choices=("finite", "affine"), default="finite")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--a", required=True, help="e.g. 'T[s1] + v^-2*T[]'")
    sp.add_argument("--b", required=True)
    sp.add_argument("--cutoff", type=int, default=None)
    _add_vq(sp)
    sp = sub(g, "verify", cmd_hecke_verify, "check the Coxeter presentation")
    sp.add_argument("--type", choices=("finite", "affine"), default="finite")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--cutoff", type=int, required=True, help="length bound")

    g = top.add_parser("bernstein", help="Bernstein presentation").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "check", cmd_bernstein_check, "verify Bernstein relations")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--cutoff", type=int, default=8)
    sp.add_argument("--radius", type=int, default=None, help="also check the lattice on a box")

    g = top.add_parser("specht", help="Specht modules").add_subparsers(dest="cmd", required=True)
    for name, fn in (("table", cmd_specht_table), ("dim", cmd_specht_dim)):
        sp = sub(g, name, fn, "Specht/D dimensions")
        if name == "table":
            sp.add_argument("--n", type=int, required=True)
        else:
            sp.add_argument("--partition", required=True, help="e.g. '3,1'")
        sp.add_argument("--l", type=int, default=None)
        grp = sp.add_mutually_exclusive_group()
        grp.add_argument("--q-root", action="store_true", help="q = primitive l-th root of unity")
        grp.add_argument("--v", type=float)
        grp.add_argument("--q", type=float)

    g = top.add_parser("schur", help="v-Schur algebras").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "basis", cmd_schur_basis, "double-coset basis count")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--check-blocks", action="store_true")
    sp = sub(g, "duality", cmd_schur_duality, "Schur-Weyl duality dimensions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--mode", choices=("finite", "affine"), default="finite")
    sp.add_argument("--cutoff", type=int, default=4)
    _add_vq(sp)
    sp = sub(g, "dg-check", cmd_schur_dg, "Doty-Giaquinto relations")
    sp.add_argument("--d", type=int, required=True)
    _add_vq(sp)

    g = top.add_parser("fq", help="F_v(SL_2)").add_subparsers(dest="cmd", required=True)
    sp = sub(g, "normal-form", cmd_fq_normal_form, "rewrite to normal form")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--mode", choices=("corrected", "paper-literal", "bialgebra"), default="corrected")
    sp.add_argument("--budget", type=int, default=200_000)

    def rep_args(sp, t_names=("--t",)):
        sp.add_argument("--kind", choices=("pi", "tau"), default="pi")
        sp.add_argument("--variant", choices=("corrected", "paper-literal"), default="corrected")
        sp.add_argument("--N", type=int, default=16)
        for name in t_names:
            sp.add_argument(name, type=float, default=0.0, help="angle in turns")
        _add_vq(sp)

    sp = sub(g, "rep-check", cmd_fq_rep_check, "relation residuals")
    rep_args(sp)
    sp.add_argument("--relations", choices=("corrected", "paper-literal", "bialgebra"), default="corrected")
    sp.add_argument("--tol", type=float, default=1e-10)
    sp = sub(g, "commutant", cmd_fq_commutant, "commutant dimension")
    rep_args(sp)
    sp.add_argument("--word", default="", help="optional reduced word for a tensor representation")
    sp.add_argument("--m", type=int, default=None)
    sp = sub(g, "equiv", cmd_fq_equiv, "equivalence of two representations")
    rep_args(sp, ("--t1", "--t2"))
    sp = sub(g, "tensor", cmd_fq_tensor, "tensor representation residuals")
    sp.add_argument("--word", default="")
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--t", type=float, default=0.0, help="angle in turns")
    sp.add_argument("--N", type=int, default=6)
    sp.add_argument("--variant", choices=("corrected", "paper-literal"), default="corrected")
    sp.add_argument("--tol", type=float, default=1e-8)
    _add_vq(sp)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        report = args.func(args)
    except (UsageError, ValueError, TypeError, ArithmeticError, RuntimeError) as exc:
        print(f"heckelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render(args.format))
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
