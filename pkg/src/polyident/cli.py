"""Command-line front end.

Every subcommand builds a plain dict report; ``--format`` decides whether it
is printed as aligned text or as JSON.  Exit codes: 0 success, 1 failed
verification, 2 bad input, 3 refused by a resource guard.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactla, freealg, ops, pipeline, symrep, varieties
from .ops import OpPolynomial

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3
LARGE_DEGREE = 6


class UsageError(Exception):
    code = EXIT_PARSE


class GuardError(Exception):
    code = EXIT_GUARD


@dataclass
class RunConfig:
    subcommand: str
    signature: str = "btq"
    degree: int = 4
    variety: str = "free"
    pattern: str = "aaaab"
    lll_delta: Fraction = Fraction(3, 4)
    fmt: str = "text"
    dump_matrix: str | None = None
    threads: int = 1
    allow_large: bool = False
    file: str | None = None
    method: str | None = None
    with_special: bool = False
    terms: list = field(default_factory=list)

    def validate(self) -> None:
        if self.signature not in ops.SIGNATURES:
            raise UsageError(f"unknown signature {self.signature!r}; choose from {', '.join(ops.SIGNATURES)}")
        if self.variety not in varieties.VARIETIES:
            raise UsageError(f"unknown variety {self.variety!r}; choose from {', '.join(varieties.VARIETIES)}")
        if not 1 <= self.degree <= pipeline.MAX_DEGREE:
            raise UsageError(f"degree must be between 1 and {pipeline.MAX_DEGREE}")
        if not Fraction(1, 4) < self.lll_delta <= 1:
            raise UsageError("--lll-delta must lie in (1/4, 1]")
        if self.threads < 1:
            raise UsageError("--threads must be positive")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _rat(x) -> str:
    return freealg.render_rational(Fraction(x))


def _word(w) -> str:
    return "".join(freealg.letter(i) for i in w)


def _read_text(cfg: RunConfig) -> str:
    if cfg.file:
        try:
            with open(cfg.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.file}: {exc.strerror}")
        text = " ".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    else:
        text = " ".join(cfg.terms).strip()
    if not text:
        raise UsageError("no input; pass a term or --file")
    return text


def _parse_op(text: str, power_rules: bool = False) -> OpPolynomial:
    try:
        return ops.parse_op_polynomial(text, power_rules=power_rules)
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(cfg: RunConfig) -> tuple:
    p = _parse_op(_read_text(cfg))
    e = ops.expand(p)
    return EXIT_OK, {
        "input": ops.render_op_polynomial(p),
        "expansion": freealg.render_polynomial(e),
        "terms": len(e),
    }


def cmd_primitive(cfg: RunConfig) -> tuple:
    text = _read_text(cfg)
    try:
        poly = ops.expand(ops.parse_op_polynomial(text))
    except ValueError:
        try:
            poly = freealg.parse_polynomial(text)
        except ValueError as exc:
            raise UsageError(f"cannot parse {text!r}: {exc}")
    return EXIT_OK, {"input": text, "primitive": freealg.is_primitive(poly)}


def _known_space(signature: str, n: int, variety: str):
    """Consequences of lower-degree identities, where the package knows them."""
    if signature in ("btqq", "akivis") and variety == "free" and n in (3, 4):
        return "Akivis identity and its liftings", pipeline.akivis_consequences(n, signature)
    if signature == "btq" and n == 4 and variety in ("tpa", "power-assoc"):
        return "degree-3 identities and their liftings", pipeline.btq_degree3_consequences(4)
    return None, None


def cmd_identities(cfg: RunConfig) -> tuple:
    if cfg.degree >= LARGE_DEGREE and not cfg.allow_large:
        raise GuardError(f"degree {cfg.degree} identity search needs --allow-large")
    method = cfg.method or ("hnf" if cfg.variety != "free" and cfg.degree >= 4 else "rcf")
    ib = pipeline.find_identities(cfg.signature, cfg.degree, cfg.variety, method)
    report = {
        "signature": cfg.signature,
        "degree": cfg.degree,
        "variety": cfg.variety,
        "method": method,
        "operation_monomials": len(ib.basis),
        "type_counts": ops.type_counts(cfg.signature, cfg.degree),
        "matrix_shape": list(ib.shape),
        "left_rank": ib.left_rank,
        "identities": len(ib),
    }
    if cfg.dump_matrix:
        width = len(ib.basis)
        with open(cfg.dump_matrix, "w") as fh:
            exactla.write_matrix([[r.get(j, 0) for j in range(width)] for r in ib.rows], fh)
        report["matrix_file"] = cfg.dump_matrix
    label, known = _known_space(cfg.signature, cfg.degree, cfg.variety)
    if known is not None:
        gs = pipeline.new_generators(ib.polynomials(), known)
        report["known"] = label
        report["consequence_rank"] = known.rank
        report["quotient_dimension"] = gs.quotient_dimension
        report["generators"] = [ops.render_op_polynomial(pipeline.normalize(g)) for g in gs.generators]
    return EXIT_OK, report


def _analyse(args):
    degree, signature, variety, extra, lam = args
    return symrep.partition_rank_analysis(degree, signature, variety, extra, [lam])[0]


def cmd_ranks(cfg: RunConfig) -> tuple:
    if cfg.degree not in (5, 6):
        raise UsageError("rank tables are available for degrees 5 and 6")
    if cfg.signature != "btq":
        raise UsageError("rank tables are available for the btq signature")
    if cfg.degree >= LARGE_DEGREE and not cfg.allow_large:
        raise GuardError("the degree-6 rank table takes hours; pass --allow-large to run it")
    extra = pipeline.lower_degree_extras(cfg.degree)
    if cfg.with_special:
        if cfg.degree != 5:
            raise UsageError("--with-special applies to degree 5")
        extra = [varieties.linearize(pipeline.special_identity())]
    jobs = [(cfg.degree, cfg.signature, cfg.variety, extra, lam) for lam in symrep.partitions(cfg.degree)]
    if cfg.threads > 1:
        with ProcessPoolExecutor(cfg.threads) as pool:
            reports = list(pool.map(_analyse, jobs))
    else:
        reports = [_analyse(j) for j in jobs]
    return EXIT_OK, {
        "signature": cfg.signature,
        "degree": cfg.degree,
        "variety": cfg.variety,
        "with_special": cfg.with_special,
        "table": symrep.render_table(reports),
        "rows": [r.as_dict() for r in reports],
    }


def cmd_verify(cfg: RunConfig) -> tuple:
    text = _read_text(cfg)
    try:
        raw = ops.parse_raw(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}")
    family = None
    if cfg.variety == "power-assoc":
        words = {tuple(sorted(ops.word(t))) for t in raw}
        if words == {(0, 0, 0, 0, 1)}:
            family = pipeline.special_certificate_family()
    v = pipeline.verify_identity(raw, cfg.variety, family)
    cert = [{"coefficient": _rat(c), "consequence": _label(lab)} for c, lab in v.certificate]
    report = {
        "input": text,
        "variety": cfg.variety,
        "holds": v.holds,
        "expansion_terms": len(v.expansion),
        "certificate": cert,
    }
    if cert:
        report["common_denominator"] = math.lcm(*(c.denominator for c, _ in v.certificate))
    return (EXIT_OK if v.holds else EXIT_FAIL), report


def _label(lab) -> str:
    if isinstance(lab, str):
        return lab
    gi, arr = lab
    return f"generator {gi + 1} at {_word(arr)}"


def cmd_special(cfg: RunConfig) -> tuple:
    pat = ops.parse_pattern(cfg.pattern)
    if len(pat) >= LARGE_DEGREE and not cfg.allow_large:
        raise GuardError("degree-6 special search needs --allow-large")
    if len(pat) > pipeline.MAX_DEGREE:
        raise UsageError(f"pattern degree must be at most {pipeline.MAX_DEGREE}")
    res = pipeline.special_identity_search(cfg.pattern, cfg.signature, cfg.variety, cfg.lll_delta)
    return EXIT_OK, {
        "pattern": res.pattern,
        "signature": cfg.signature,
        "variety": cfg.variety,
        "lll_delta": _rat(cfg.lll_delta),
        "substitutions": res.substitutions,
        "nonzero_substitutions": res.counts["nonzero"],
        "nonzero_after_power_rules": res.counts["power_nonzero"],
        "operation_monomials": len(res.operation_monomials),
        "free_monomials": res.free_monomials,
        "matrix_shape": list(res.matrix_shape),
        "lattice_rank": res.lattice_rank,
        "reduced": [ops.render_op_polynomial(p) for p in res.reduced],
        "new_identities": [ops.render_op_polynomial(p) for p in res.survivors],
    }


def _default_express():
    target = OpPolynomial.term(ops.quaternator(2))
    gens = [OpPolynomial.term(ops.quaternator(1))]
    gens += [OpPolynomial.term(ops.akivis_element(i)) for i in range(1, 7)]
    gens += list(varieties.T_liftings())
    names = ["Q1"] + [f"A{i}" for i in range(1, 7)] + ["T1", "T2", "T3"]
    return target, gens, names


def cmd_express(cfg: RunConfig) -> tuple:
    if cfg.terms or cfg.file:
        texts = [t.strip() for t in _read_text(cfg).split(";") if t.strip()]
        if len(texts) < 2:
            raise UsageError("give 'TARGET; GEN1; GEN2; ...'")
        polys = [_parse_op(t) for t in texts]
        target, gens = polys[0], polys[1:]
        names = [f"G{i}" for i in range(1, len(gens) + 1)]
        n = max(ops.degree(t) for t in target)
    else:
        target, gens, names = _default_express()
        n = 4
    expr = pipeline.express_over_module(target, gens, n)
    report = {"degree": n, "generators": names, "member": expr is not None}
    if expr is not None:
        report["terms"] = len(expr)
        report["combination"] = [
            {"coefficient": _rat(c), "generator": names[g], "arguments": _word(w)} for c, g, w in expr.terms
        ]
        report["verified"] = pipeline.evaluate_expression(expr, gens) == pipeline._as_free(target)
    return EXIT_OK, report


def cmd_sabinin_check(cfg: RunConfig) -> tuple:
    checks = pipeline.sabinin_btqq_checks()
    ok = all(checks.values())
    return (EXIT_OK if ok else EXIT_FAIL), {"passed": sum(checks.values()), "total": len(checks), "checks": checks}


COMMANDS = {
    "expand": cmd_expand,
    "primitive": cmd_primitive,
    "identities": cmd_identities,
    "ranks": cmd_ranks,
    "verify": cmd_verify,
    "special": cmd_special,
    "express": cmd_express,
    "sabinin-check": cmd_sabinin_check,
}


# ---------------------------------------------------------------------------
# rendering


def render_text(sub: str, report: dict) -> str:
    if sub == "ranks":
        lines = [report["table"]]
        same = [r["partition"] for r in report["rows"] if r["identical"]]
        if same:
            lines.append("identical RCFs: " + " ".join(same))
        return "\n".join(lines)
    if sub == "verify":
        lines = [f"holds: {report['holds']}"]
        if report["certificate"]:
            den = report["common_denominator"]
            lines.append(f"certificate (x{den}):")
            for item in report["certificate"]:
                c = Fraction(item["coefficient"]) * den
                lines.append(f"  {_rat(c):>6}  {item['consequence']}")
        return "\n".join(lines)
    if sub == "express" and report.get("member"):
        lines = [f"terms: {report['terms']}", f"verified: {report['verified']}"]
        lines += [f"  {x['coefficient']:>6}  {x['generator']}({x['arguments']})" for x in report["combination"]]
        return "\n".join(lines)
    if sub == "sabinin-check":
        lines = [f"{'ok  ' if v else 'FAIL'}  {k}" for k, v in report["checks"].items()]
        lines.append(f"{report['passed']}/{report['total']} checks passed")
        return "\n".join(lines)
    lines = []
    for k, v in report.items():
        if isinstance(v, list) and v and isinstance(v[0], str):
            lines.append(f"{k}:")
            lines += [f"  {x}" for x in v]
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sig", dest="signature", default="btq")
    common.add_argument("--degree", type=int, default=4)
    common.add_argument("--variety", default="free")
    common.add_argument("--pattern", default="aaaab")
    common.add_argument("--lll-delta", type=_fraction, default=Fraction(3, 4))
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--dump-matrix", metavar="PATH")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--allow-large", action="store_true")
    common.add_argument("--file")
    parser = argparse.ArgumentParser(prog="polyident", description="Polynomial identities of nonassociative operations.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("expand", "primitive", "verify", "express"):
            p.add_argument("terms", nargs="*")
        if name == "identities":
            p.add_argument("--method", choices=("rcf", "hnf"))
        if name == "ranks":
            p.add_argument("--with-special", action="store_true")
    return parser


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg.validate()
        code, report = COMMANDS[cfg.subcommand](cfg)
    except (UsageError, GuardError) as exc:
        print(f"polyident {cfg.subcommand}: {exc}", file=sys.stderr)
        return exc.code
    if cfg.fmt == "json":
        out.write(json.dumps({"subcommand": cfg.subcommand, "exit": code, **report}, indent=2) + "\n")
    else:
        out.write(render_text(cfg.subcommand, report) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    ns = vars(build_parser().parse_args(argv))
    return run(RunConfig(**ns))


if __name__ == "__main__":
    sys.exit(main())
