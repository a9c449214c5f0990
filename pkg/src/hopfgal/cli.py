"""Command-line front end.

Subcommands: `check` (axiom suites), `principal` (bundle conditions),
`descent` (descent data and the comparison functor), `qcat` (the quantum
category), `eval` (assertion files).  Exit code 0 means every check
passed, 1 means some check failed, 2 means the input could not be read.
Reports are canonical: sorted by check name, byte-identical across runs;
`HGL_SEED` fixes the sampling seed of module sweeps.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bundle import (AlgebraBundle, canonical_map_linearity,
                     check_comodule_algebra, check_module_coalgebra)
from .descent import (check_bmodule, comparison_K, counit_Psi, descend,
                      sweep_phi_psi, unit_Phi, verify_descent_datum)
from .dsl import ParseError, run_assertions
from .hopf import check_hopf
from .instances import InstanceError, parse_instance
from .morphism import cokernel, is_isomorphism
from .quantum import build_quantum_category, cotensor_monoid
from .report import Report, matrix_triples


def _seed():
    return int(os.environ.get("HGL_SEED", "0"))


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except OSError as exc:
        raise InstanceError(0, "%s: %s" % (path, exc.strerror or exc))


def _bundle(inst, side=None, name=None):
    pool = inst.bundles
    if name is not None:
        if name not in pool:
            raise InstanceError(0, "no bundle named %r" % name)
        return pool[name]
    for key in sorted(pool):
        b = pool[key]
        if side is None or b.side == side:
            return b
    raise InstanceError(0, "no %s bundle block in instance"
                        % (side or "matching"))


def _emit(rep, machine, extra_lines=()):
    print(rep.render(machine))
    for line in extra_lines:
        print(line)
    print("result=%s" % ("pass" if rep.ok else "fail"))
    return 0 if rep.ok else 1


def cmd_check(args):
    inst = _load(args.file)
    rep = Report()
    what = args.what
    if what in ("hopf", "all"):
        for name in sorted(inst.hopfs):
            rep.extend(check_hopf(inst.hopfs[name]), prefix="hopf.%s." % name)
    if what in ("comodule", "all"):
        for name in sorted(inst.comodules):
            rep.extend(check_comodule_algebra(inst.comodules[name]),
                       prefix="comodule.%s." % name)
    if what in ("module-coalgebra", "all"):
        for name in sorted(inst.modules):
            rep.extend(check_module_coalgebra(inst.modules[name]),
                       prefix="module_coalgebra.%s." % name)
    if not rep.items:
        raise InstanceError(0, "nothing to check for --what %s" % what)
    return _emit(rep, args.machine)


def cmd_principal(args):
    inst = _load(args.file)
    b = _bundle(inst, side=args.side)
    if args.dualize:
        b = b.dualize()
    rep = Report()
    rep.extend(b.check_principal())
    rep.extend(canonical_map_linearity(b))
    if args.sweep_dim:
        alg = b if isinstance(b, AlgebraBundle) else b.dualize()
        rep.extend(sweep_phi_psi(alg, max_dim=args.sweep_dim, seed=_seed()))
    can = b.canonical_map()
    extra = ["can=[%s]" % matrix_triples(can)]
    inv = b.can_inverse()
    if inv is not None:
        extra.append("can_inverse=[%s]" % matrix_triples(inv))
    else:
        verdict = is_isomorphism(can)
        if verdict.kernel_dim:
            extra.append("can_defect_kernel=[%s]"
                         % matrix_triples(verdict.kernel_inclusion))
        if verdict.corank:
            _, proj = cokernel(can)
            extra.append("can_defect_cokernel=[%s]" % matrix_triples(proj))
    return _emit(rep, args.machine, extra)


def cmd_descent(args):
    inst = _load(args.file)
    b = _bundle(inst, side="algebra")
    rep = Report()
    if args.module is not None:
        if args.module not in inst.bmodules:
            raise InstanceError(0, "no bmodule named %r" % args.module)
        v = inst.bmodules[args.module]
        rep.extend(check_bmodule(v, b.base), prefix="module.")
        d = comparison_K(v, b)
        rep.extend(verify_descent_datum(d), prefix="datum.")
        w, incl = descend(d)
        rep.add("descended_dim", True, details={"dim": w.carrier.dim})
        for label, builder in (("phi_iso", lambda: unit_Phi(d)),
                               ("psi_iso", lambda: counit_Psi(v, b))):
            _, verdict = builder()
            rep.add(label, verdict.is_iso,
                    details={"rank": verdict.rank,
                             "kernel_dim": verdict.kernel_dim,
                             "cokernel_dim": verdict.cokernel_dim},
                    witness=None if verdict.is_iso else verdict.kernel_inclusion)
    else:
        rep.extend(sweep_phi_psi(b, max_dim=args.sweep_dim, seed=_seed()))
    return _emit(rep, args.machine)


def cmd_qcat(args):
    inst = _load(args.file)
    b = _bundle(inst)
    if isinstance(b, AlgebraBundle):
        b = b.dualize()
    rep = Report()
    rep.add("dim_base", True, details={"dim": b.base.space.dim})
    mon, mon_rep = cotensor_monoid(b)
    rep.extend(mon_rep)
    qc, qc_rep = build_quantum_category(b)
    rep.extend(qc_rep)
    return _emit(rep, args.machine)


def cmd_eval(args):
    inst = _load(args.file)
    try:
        with open(args.exprfile, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceError(0, "%s: %s" % (args.exprfile, exc.strerror or exc))
    try:
        rep = run_assertions(text, inst.environment())
    except (ParseError, TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return _emit(rep, args.machine)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hopfgal",
        description="Exact checks for noncommutative principal bundles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="instance file")
        p.add_argument("--machine", action="store_true",
                       help="tab-separated records")

    p = sub.add_parser("check", help="run axiom suites")
    common(p)
    p.add_argument("--what", default="all",
                   choices=["hopf", "comodule", "module-coalgebra", "all"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("principal", help="bundle conditions A, B, C")
    common(p)
    p.add_argument("--side", choices=["algebra", "comonoid"])
    p.add_argument("--dualize", action="store_true",
                   help="run the transposed pipeline")
    p.add_argument("--sweep-dim", type=int, default=0,
                   help="also sweep base modules up to this dimension")
    p.set_defaults(func=cmd_principal)

    p = sub.add_parser("descent", help="descent data and comparison functor")
    common(p)
    p.add_argument("--module", help="bmodule name from the instance")
    p.add_argument("--sweep-dim", type=int, default=3)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("qcat", help="build and verify the quantum category")
    common(p)
    p.set_defaults(func=cmd_qcat)

    p = sub.add_parser("eval", help="run an EXPECT assertion file")
    common(p)
    p.add_argument("exprfile", help="assertion file")
    p.set_defaults(func=cmd_eval)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
