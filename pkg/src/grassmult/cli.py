"""Command-line front end.

    grassmult mult    --n 4 --d 2 --w 2,4 --tau 1,2 --method determinant
    grassmult hilbert --n 4 --d 2 --w 2,4 --tau 1,2 --expand 5
    grassmult paths   --n 4 --d 2 --w 2,4 --tau 1,2
    grassmult verify  --max-n 5

JSON documents go to stdout (every integer written as a decimal string);
diagnostics go to stderr.  Exit codes: 0 ok, 1 verification mismatch,
2 parse error, 3 tau not below w, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, fields

from .grassmannian import GrassmannianError, Instance, NotOnVariety, instance_from_entries
from .hilbert import hilbert_function, hilbert_series
from .paths import en_turns_family, iter_families, lgv_multiplicity, count_families
from .reflections import enumerate_s1s2_sets

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NOT_ON_VARIETY, EXIT_BUDGET = 0, 1, 2, 3, 4
METHODS = ("determinant", "paths", "reflections")
DEFAULT_BUDGET = 2**20
VERIFY_CEILING = 7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    d: int
    w: tuple[int, ...]
    tau: tuple[int, ...]

    @classmethod
    def parse(cls, n, d, w: str, tau: str) -> InstanceSpec:
        def vec(s):
            s = s.strip()
            return tuple(int(t) for t in s.split(",")) if s else ()

        try:
            return cls(int(n), int(d), vec(w), vec(tau))
        except ValueError as exc:
            raise GrassmannianError(f"cannot parse instance: {exc}") from None

    def build(self) -> Instance:
        return instance_from_entries(self.n, self.d, self.w, self.tau)


@dataclass
class ResultDocument:
    command: str
    n: int
    d: int
    w: tuple[int, ...]
    tau: tuple[int, ...]
    kappa: tuple[int, ...]
    sigma: tuple[int, ...]
    method: str | None = None
    multiplicity: int | None = None
    numerator: tuple[int, ...] | None = None
    pole_order: int | None = None
    expansion: tuple[int, ...] | None = None
    conjectural: bool | None = None
    families: tuple[tuple[tuple[str, ...], int], ...] | None = None
    elapsed_seconds: float | None = None

    def to_dict(self) -> dict:
        out: dict = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if f.name == "families":
                v = [{"steps": list(steps), "en_turns": str(t)} for steps, t in v]
            elif isinstance(v, tuple):
                v = [str(x) for x in v]
            elif isinstance(v, int) and not isinstance(v, bool):
                v = str(v)
            out[f.name] = v
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ResultDocument:
        kw = {}
        for f in fields(cls):
            if f.name not in data:
                continue
            v = data[f.name]
            if f.name == "families":
                v = tuple((tuple(fam["steps"]), int(fam["en_turns"])) for fam in v)
            elif f.name in ("w", "tau", "kappa", "sigma", "numerator", "expansion"):
                v = tuple(int(x) for x in v)
            elif f.name in ("n", "d", "multiplicity", "pole_order"):
                v = int(v)
            kw[f.name] = v
        return cls(**kw)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ResultDocument:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"instance: n={self.n} d={self.d} w=({_csv(self.w)}) tau=({_csv(self.tau)})"]
        lines.append(f"kappa: ({_csv(self.kappa)})  sigma: {''.join(map(str, self.sigma)) or '-'}")
        if self.multiplicity is not None:
            lines.append(f"multiplicity [{self.method}]: {self.multiplicity}")
        if self.numerator is not None:
            lines.append(f"hilbert series (conjectural): numerator {list(self.numerator)}, pole order {self.pole_order}")
        if self.expansion is not None:
            lines.append(f"hilbert function m=0..{len(self.expansion) - 1}: {_csv(self.expansion)}")
        if self.families is not None:
            for k, (steps, t) in enumerate(self.families, start=1):
                lines.append(f"family {k}: {' '.join(s or '-' for s in steps)}  EN={t}")
        return "\n".join(lines)


def _csv(v):
    return ",".join(map(str, v))


def _base(command: str, inst: Instance, **kw) -> ResultDocument:
    return ResultDocument(
        command=command,
        n=inst.n,
        d=inst.d,
        w=inst.w.entries,
        tau=inst.tau.entries,
        kappa=inst.kappa,
        sigma=inst.sigma,
        **kw,
    )


def _families(inst: Instance):
    return tuple((tuple(f.step_strings()), en_turns_family(f)) for f in iter_families(inst))


def cmd_mult(spec: InstanceSpec, method: str = "determinant", budget: int = DEFAULT_BUDGET,
             list_families: bool = False) -> ResultDocument:
    t0 = time.perf_counter()
    inst = spec.build()
    if method == "determinant":
        mult = lgv_multiplicity(inst)
    elif method == "paths":
        mult = count_families(inst)
    elif method == "reflections":
        size = len(inst.rectangle())
        if 2**size > budget:
            raise BudgetExceeded(
                f"reflection search over {size} points needs 2^{size} subsets, budget is {budget}"
            )
        mult = len(enumerate_s1s2_sets(inst))
    else:
        raise GrassmannianError(f"unknown method {method!r}")
    doc = _base("mult", inst, method=method, multiplicity=mult)
    if list_families:
        doc.families = _families(inst)
    doc.elapsed_seconds = time.perf_counter() - t0
    return doc


def cmd_hilbert(spec: InstanceSpec, expand: int | None = None, list_families: bool = False,
                workers: int | None = None) -> ResultDocument:
    t0 = time.perf_counter()
    inst = spec.build()
    hs = hilbert_series(inst, workers=workers)
    doc = _base(
        "hilbert",
        inst,
        numerator=hs.numerator.coefficients,
        pole_order=hs.pole_order,
        conjectural=True,
    )
    if expand is not None:
        doc.expansion = tuple(hilbert_function(hs, m) for m in range(expand + 1))
    if list_families:
        doc.families = _families(inst)
    doc.elapsed_seconds = time.perf_counter() - t0
    return doc


def cmd_paths(spec: InstanceSpec) -> ResultDocument:
    t0 = time.perf_counter()
    inst = spec.build()
    fams = _families(inst)
    doc = _base("paths", inst, method="paths", multiplicity=len(fams), families=fams)
    doc.elapsed_seconds = time.perf_counter() - t0
    return doc


def cmd_verify(max_n: int, ceiling: int = VERIFY_CEILING) -> dict:
    from .verify import VerifyConfig, run_verification

    if max_n > ceiling:
        raise BudgetExceeded(f"verify is capped at n <= {ceiling}, got {max_n}")
    report = run_verification(VerifyConfig(max_n=max_n))
    out = {"command": "verify", "max_n": str(max_n), "instances": str(report.instances), "ok": report.ok}
    if not report.ok:
        inst, msg = report.failures[0]
        out["failure"] = {
            "n": str(inst.n),
            "d": str(inst.d),
            "w": [str(x) for x in inst.w.entries],
            "tau": [str(x) for x in inst.tau.entries],
            "message": msg,
        }
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grassmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def instance_args(p):
        p.add_argument("--n", required=True)
        p.add_argument("--d", required=True)
        p.add_argument("--w", required=True, help="increasing entries, e.g. 2,4")
        p.add_argument("--tau", required=True, help="increasing entries, e.g. 1,2")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("mult", help="multiplicity of tau on X(w)")
    instance_args(p)
    p.add_argument("--method", choices=METHODS, default="determinant")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max subsets the reflections engine may search")
    p.add_argument("--list-families", action="store_true")

    p = sub.add_parser("hilbert", help="conjectural Hilbert series of the tangent cone")
    instance_args(p)
    p.add_argument("--expand", type=int, default=None, metavar="M")
    p.add_argument("--list-families", action="store_true")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("paths", help="list the nonintersecting path families")
    instance_args(p)

    p = sub.add_parser("verify", help="exhaustive cross-engine checks")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _fail(exc, code: int) -> int:
    print(f"grassmult: error: {exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    try:
        if args.verb == "verify":
            out = cmd_verify(args.max_n)
            if args.format == "json":
                print(json.dumps(out, indent=2))
            else:
                print(f"verified {out['instances']} instances with n <= {args.max_n}: "
                      f"{'ok' if out['ok'] else 'MISMATCH'}")
                if not out["ok"]:
                    fl = out["failure"]
                    print(f"first failure: n={fl['n']} d={fl['d']} w={','.join(fl['w'])} "
                          f"tau={','.join(fl['tau'])}: {fl['message']}")
            return EXIT_OK if out["ok"] else EXIT_MISMATCH

        spec = InstanceSpec.parse(args.n, args.d, args.w, args.tau)
        if args.verb == "mult":
            doc = cmd_mult(spec, args.method, args.budget, args.list_families)
        elif args.verb == "hilbert":
            doc = cmd_hilbert(spec, args.expand, args.list_families, args.workers)
        else:
            doc = cmd_paths(spec)
    except NotOnVariety as exc:
        return _fail(exc, EXIT_NOT_ON_VARIETY)
    except GrassmannianError as exc:
        return _fail(exc, EXIT_PARSE)
    except BudgetExceeded as exc:
        return _fail(exc, EXIT_BUDGET)

    print(doc.to_json() if args.format == "json" else doc.to_text())
    return EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
