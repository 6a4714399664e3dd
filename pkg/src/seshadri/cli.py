"""Command-line frontend.

Single job:   seshadri pell D=10
              seshadri toric --params '{"dim": 2, "vertices": [[0,0],[1,0],[0,1]]}'
              seshadri symbolic --input ideal.json m=3 r=2
Batch:        seshadri batch --input jobs.jsonl --parallel 4

Every job produces one line of JSON.  Exact values are encoded as
{"num", "den"} or {"radicand_num", "radicand_den", "index"} with decimal
renderings added for display only.  Exit status: 0 success, 2 domain or
schema error, 3 inconsistent inputs; a batch exits with the largest status.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Optional

from . import exactnum, linsys, p2cert, surfcalc, symbpow, toric, zarislope
from .exactnum import DomainError, InconsistencyError, SeshadriValue

EXIT_OK, EXIT_DOMAIN, EXIT_INCONSISTENT = 0, 2, 3
ENV_SEED = "SESHADRI_SEED"
ENV_PARALLEL = "SESHADRI_PARALLEL"
DEFAULT_DIGITS = 10


class SchemaError(DomainError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------------------
# value encoding
# ---------------------------------------------------------------------------

def encode_rational(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def encode_value(v: SeshadriValue, digits: int = DEFAULT_DIGITS) -> dict:
    if v.is_interval:
        out = {"kind": "interval", "lower": encode_value(v.lower, digits),
               "upper": encode_value(v.upper, digits)}
    elif v.is_exact:
        out = {"kind": "exact", **encode_rational(v.exact)}
    else:
        out = {"kind": "root", "radicand_num": str(v.root.radicand.numerator),
               "radicand_den": str(v.root.radicand.denominator), "index": v.root.index}
    if not v.is_interval:
        out["decimal"] = v.decimal(digits)
        out["digits"] = digits
    if v.provenance:
        out["citation"] = v.provenance
    return out


def decode_value(data) -> SeshadriValue:
    """Inverse of :func:`encode_value`; also accepts plain rationals."""
    if isinstance(data, dict):
        kind = data.get("kind")
        if kind == "interval" or "lower" in data:
            return SeshadriValue.interval(decode_value(data["lower"]), decode_value(data["upper"]),
                                          data.get("citation", ""))
        if "radicand_num" in data:
            q = Fraction(int(data["radicand_num"]), int(data["radicand_den"]))
            return SeshadriValue.nth_root(q, int(data["index"]), data.get("citation", ""))
        if "num" in data:
            return SeshadriValue.of(Fraction(int(data["num"]), int(data["den"])),
                                    data.get("citation", ""))
        raise ValueError("unrecognized value encoding")
    return SeshadriValue.of(parse_rational(data))


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, dict) and "num" in x:
        return Fraction(int(x["num"]), int(x["den"]))
    raise ValueError(f"not an exact rational: {x!r}")


def to_jsonable(obj, digits: int = DEFAULT_DIGITS):
    if isinstance(obj, SeshadriValue):
        return encode_value(obj, digits)
    if isinstance(obj, Fraction):
        return encode_rational(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, (frozenset, set)):
        return sorted(to_jsonable(x, digits) for x in obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name), digits) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x, digits) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _citations(obj, acc: list[str]) -> list[str]:
    if isinstance(obj, SeshadriValue):
        for c in obj.provenance.split("; ") if obj.provenance else ():
            if c not in acc:
                acc.append(c)
        if obj.is_interval:
            _citations(obj.lower, acc)
            _citations(obj.upper, acc)
    elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        for f in dataclasses.fields(obj):
            _citations(getattr(obj, f.name), acc)
    elif isinstance(obj, dict):
        for v in obj.values():
            _citations(v, acc)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _citations(v, acc)
    return acc


# ---------------------------------------------------------------------------
# parameter schemas
# ---------------------------------------------------------------------------

def _int(path, x):
    if isinstance(x, bool) or not isinstance(x, int):
        if isinstance(x, str) and x.strip().lstrip("-").isdigit():
            return int(x)
        raise SchemaError(path, "expected an integer")
    return x


def _bool(path, x):
    if not isinstance(x, bool):
        raise SchemaError(path, "expected true or false")
    return x


def _rational(path, x):
    try:
        return parse_rational(x)
    except (ValueError, ZeroDivisionError, KeyError, TypeError):
        raise SchemaError(path, "expected an exact rational (integer, \"p/q\" or {num, den})")


def _value(path, x):
    try:
        return decode_value(x)
    except InconsistencyError:
        raise
    except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        raise SchemaError(path, f"expected an exact value ({exc})")


def _str(path, x):
    if not isinstance(x, str):
        raise SchemaError(path, "expected a string")
    return x


def _list_of(conv):
    def check(path, x):
        if not isinstance(x, list):
            raise SchemaError(path, "expected a list")
        return [conv(f"{path}[{i}]", v) for i, v in enumerate(x)]
    return check


def _any(path, x):
    return x


INT_LIST = _list_of(_int)
INT_MATRIX = _list_of(INT_LIST)
RAT_LIST = _list_of(_rational)
POINTS = _list_of(_list_of(_rational))

Schema = dict[str, tuple[Callable, bool, Any]]  # name -> (converter, required, default)


def validate(params: dict, schema: Schema, path: str = "params") -> dict:
    if not isinstance(params, dict):
        raise SchemaError(path, "expected an object")
    unknown = set(params) - set(schema)
    if unknown:
        raise SchemaError(f"{path}.{sorted(unknown)[0]}", "unknown field")
    out = {}
    for name, (conv, required, default) in schema.items():
        if name in params and params[name] is not None:
            out[name] = conv(f"{path}.{name}", params[name])
        elif required:
            raise SchemaError(f"{path}.{name}", "missing required field")
        else:
            out[name] = default
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

@dataclasses.dataclass
class Context:
    seed: int = 0
    trials: int = 5
    digits: int = DEFAULT_DIGITS
    m_max: Optional[int] = None
    size_budget: int = 2000
    workers: int = 1


def cmd_pell(p, ctx):
    sol = exactnum.pell_fundamental(p["D"])
    return {"D": sol.D, "ell0": str(sol.ell0), "k0": str(sol.k0)}


def _polytope(p):
    return toric.LatticePolytope(p["dim"], tuple(tuple(v) for v in p["vertices"]))


def cmd_toric(p, ctx):
    P = _polytope(p)
    per_vertex = [{"vertex": list(v), "eps": toric.seshadri_at_fixed_point(P, v)} for v in P.vertices]
    return {"per_vertex": per_vertex, "global": toric.seshadri_global_toric(P)}


def cmd_delzant(p, ctx):
    P = _polytope(p)
    rep = toric.is_delzant(P)
    edges = [{"edge": [list(u), list(v)], "length": toric.edge_lattice_length(P, (u, v))}
             for u, v in P.edges]
    return {"is_delzant": rep.is_delzant,
            "failures": [{"vertex": list(v), "reason": why} for v, why in rep.failures],
            "edges": edges}


def cmd_abelian(p, ctx):
    if p["points"] is not None:
        return {"value": surfcalc.abelian_halfperiod_multipoint(p["d"], p["points"])}
    spec = surfcalc.AbelianSurfaceSpec(p["d"], p["simple"], p["rank_one"], p["elliptic_min_degree"])
    rep = surfcalc.abelian_bounds(spec)
    return {"value": rep.value}


def cmd_ruled(p, ctx):
    spec = surfcalc.RuledSurfaceSpec(p["e"], p["a"], p["b"], p["point_on_sigma"])
    fn = surfcalc.ruled_e_positive if spec.e > 0 else surfcalc.ruled_e_nonpositive
    return {"value": fn(spec), "self_intersection": spec.self_intersection}


def cmd_delpezzo(p, ctx):
    try:
        pos = surfcalc.Position(p["position"])
    except ValueError:
        raise SchemaError("params.position", "expected general, special or special12")
    return {"value": surfcalc.delpezzo_anticanonical(p["r"], pos)}


def cmd_k3(p, ctx):
    rep = surfcalc.k3_rank1(p["L2"])
    return {"value": rep.value, "lower": rep.lower, "upper": rep.upper,
            "exceptions": [{"L2": a, "eps": e} for a, e in rep.exceptions]}


def cmd_gentype(p, ctx):
    v = surfcalc.gentype_small_values(p["K2"])
    return {"members": list(v.members), "infinite": v.infinite, "description": v.description}


def cmd_enriques(p, ctx):
    if p["special"]:
        return {"value": surfcalc.enriques_lower_bound(None, None, 1, special=True)}
    for name in ("eps0", "eps1", "L2"):
        if p[name] is None:
            raise SchemaError(f"params.{name}", "missing required field")
    return {"value": surfcalc.enriques_lower_bound(p["eps0"], p["eps1"], p["L2"])}


def cmd_slope(p, ctx):
    kind = p["kind"]
    if kind == "mu":
        return {"mu": zarislope.slope_mu(p["n"], _need(p, "KL"), _need(p, "Ln"))}
    if kind == "mu_c":
        return {"mu_c": zarislope.slope_mu_c(_need(p, "LZ"), _need(p, "KZ"), _need(p, "Z2"), _need(p, "c"))}
    if kind == "genus":
        return {"p_a": zarislope.arithmetic_genus(_need(p, "KZ"), _need(p, "Z2"))}
    if kind == "canonical":
        return {"lower_bound": surfcalc.canonical_slope_lower_bound(_need(p, "sigma"))}
    raise SchemaError("params.kind", "expected mu, mu_c, genus or canonical")


def _need(p, name):
    if p.get(name) is None:
        raise SchemaError(f"params.{name}", "missing required field")
    return p[name]


def cmd_zariski(p, ctx):
    labels = p["labels"] or [f"C{i + 1}" for i in range(len(p["gram"]))]
    data = zarislope.IntersectionData(labels, p["gram"])
    dec = zarislope.zariski_decompose(data, p["D"])
    return {"P": list(dec.P), "N": list(dec.N), "support": [labels[i] for i in dec.support]}


def cmd_destab(p, ctx):
    v = zarislope.destabilizes(p["LZ"], p["KZ"], p["Z2"], p["mu"], p["c_max"])
    return {"destabilizes": v.destabilizes, "witness": v.witness, "mu_c": v.mu_c}


def cmd_linsys(p, ctx):
    sys_ = linsys.LinearSystem2D(p["d"], p["mults"], p["points"])
    res = linsys.interpolation_rank(sys_, ctx.trials, ctx.seed, ctx.workers)
    vdim = linsys.virtual_dim(sys_)
    return {"system": str(sys_), "verdict": res.verdict, "rank": res.rank, "ncols": res.ncols,
            "kernel_dim": res.kernel_dim, "virtual_dim": vdim,
            "speciality": res.kernel_dim - max(0, vdim + 1),
            "trials": res.trials, "trials_run": res.trials_run, "seed": str(res.seed),
            "kernel_dims": res.kernel_dims,
            "kernel_vector": [str(c) for c in res.kernel_vector] if res.kernel_vector else None,
            "points": [[x, y] for x, y in res.points] if res.points else None}


def cmd_certify(p, ctx):
    m_max = p["m_max"] if p["m_max"] is not None else ctx.m_max
    budget = p["size_budget"] if p["size_budget"] is not None else ctx.size_budget
    rep = p2cert.certify_lower_bound(p["r"], p["alpha"], m_max, ctx.trials, ctx.seed, budget, ctx.workers)
    checks = []
    for ch in rep.checks:
        entry = {"triple": list(ch.candidate.as_tuple()), "ratio": p2cert.ratio(ch.candidate),
                 "system": str(ch.candidate.system())}
        if ch.probe is None:
            entry["probe"] = "over-budget"
        else:
            entry["probe"] = ch.probe.verdict
            entry["kernel_dim"] = ch.probe.kernel_dim
        checks.append(entry)
    out = {"r": rep.r, "alpha": rep.alpha, "verdict": rep.verdict, "complete": rep.complete,
           "candidates": checks, "unchecked": [list(c.as_tuple()) for c in rep.unchecked]}
    if rep.witness is not None:
        out["witness"] = {"triple": list(rep.witness.candidate.as_tuple()),
                          "kernel_vector": [str(c) for c in rep.witness.probe.kernel_vector],
                          "points": [[x, y] for x, y in rep.witness.probe.points]}
    return out


def cmd_table(p, ctx):
    rows = []
    for rr in p2cert.verify_table():
        row = rr.row
        rows.append({"r": row.r, "lower_estimate": f"{row.num}/{row.den}", "approximate": row.approx,
                     "conjectured": row.conjectured, "non_checked_system": rr.non_checked_system,
                     "fraction_ok": rr.fraction_ok, "decimal_ok": rr.decimal_ok,
                     "conjectured_ok": rr.conjectured_ok, "restrictions_ok": rr.restrictions_ok})
    return {"rows": rows, "all_ok": all(r["fraction_ok"] and r["decimal_ok"] and r["conjectured_ok"]
                                        and r["restrictions_ok"] for r in rows)}


def cmd_symbolic(p, ctx):
    try:
        I = symbpow.MonomialIdeal.from_json(p["ideal"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("params.ideal", f"expected {{\"vars\": n, \"gens\": [[...]]}} ({exc})")
    m = p["m"]
    sym = symbpow.symbolic_power_squarefree(I, m)
    out = {"ideal": I.to_json(),
           "minimal_primes": [sorted(P) for P in symbpow.minimal_primes_squarefree(I)],
           "alpha": symbpow.alpha(I), "m": m, "symbolic_power": sym.to_json(),
           "alpha_symbolic": symbpow.alpha(sym)}
    if p["r"] is not None:
        out["r"] = p["r"]
        out["contained_in_power"] = symbpow.check_symbolic_in_power(I, m, p["r"])
    return out


def cmd_star(p, ctx):
    cfg = symbpow.StarConfig(p["N"], p["s"], p["e"])
    inv = symbpow.star_invariants(cfg)
    out = {"invariants": inv}
    if p["m"] is not None:
        a_m = symbpow.star_alpha(cfg, p["m"])
        out["alpha_symbolic"] = a_m
        if p["r"] is not None and a_m is not None:
            out["containment"] = symbpow.containment_criteria(
                a_m, symbpow.star_alpha(cfg, 1), p["r"], inv.reg, cfg.e == cfg.N)
    return out


def cmd_generic_points(p, ctx):
    return {"certificate": symbpow.generic_points_check(p["N"], p["j"], p["r"])}


def cmd_eps_rl(p, ctx):
    return {"eps_rl": surfcalc.eps_rl(p["r"], p["l"])}


def cmd_sslope(p, ctx):
    return {"classification": surfcalc.sslope_classify(p["sigma"], p["r"])}


R, O = True, False
COMMANDS: dict[str, tuple[Callable, Schema]] = {
    "pell": (cmd_pell, {"D": (_int, R, None)}),
    "toric": (cmd_toric, {"dim": (_int, R, None), "vertices": (INT_MATRIX, R, None)}),
    "delzant": (cmd_delzant, {"dim": (_int, R, None), "vertices": (INT_MATRIX, R, None)}),
    "abelian": (cmd_abelian, {"d": (_int, R, None), "simple": (_bool, O, False),
                              "rank_one": (_bool, O, False), "elliptic_min_degree": (_int, O, None),
                              "points": (_int, O, None)}),
    "ruled": (cmd_ruled, {"e": (_int, R, None), "a": (_int, R, None), "b": (_int, R, None),
                          "point_on_sigma": (_bool, O, False)}),
    "delpezzo": (cmd_delpezzo, {"r": (_int, R, None), "position": (_str, O, "general")}),
    "k3": (cmd_k3, {"L2": (_int, R, None)}),
    "gentype": (cmd_gentype, {"K2": (_int, R, None)}),
    "enriques": (cmd_enriques, {"eps0": (_value, O, None), "eps1": (_value, O, None),
                                "L2": (_int, O, None), "special": (_bool, O, False)}),
    "slope": (cmd_slope, {"kind": (_str, O, "mu"), "n": (_int, O, 2), "KL": (_rational, O, None),
                          "Ln": (_rational, O, None), "LZ": (_rational, O, None),
                          "KZ": (_rational, O, None), "Z2": (_rational, O, None),
                          "c": (_rational, O, None), "sigma": (_rational, O, None)}),
    "zariski": (cmd_zariski, {"labels": (_list_of(_str), O, None), "gram": (INT_MATRIX, R, None),
                              "D": (RAT_LIST, R, None)}),
    "destab": (cmd_destab, {"LZ": (_rational, R, None), "KZ": (_rational, R, None),
                            "Z2": (_rational, R, None), "mu": (_rational, R, None),
                            "c_max": (_rational, R, None)}),
    "linsys": (cmd_linsys, {"d": (_int, R, None), "mults": (INT_LIST, R, None),
                            "points": (POINTS, O, None)}),
    "certify-p2": (cmd_certify, {"r": (_int, R, None), "alpha": (_rational, R, None),
                                 "m_max": (_int, O, None), "size_budget": (_int, O, None)}),
    "table-verify": (cmd_table, {}),
    "symbolic": (cmd_symbolic, {"ideal": (_any, R, None), "m": (_int, R, None), "r": (_int, O, None)}),
    "star": (cmd_star, {"N": (_int, R, None), "s": (_int, R, None), "e": (_int, R, None),
                        "m": (_int, O, None), "r": (_int, O, None)}),
    "generic-points": (cmd_generic_points, {"N": (_int, R, None), "j": (_int, R, None),
                                            "r": (_int, R, None)}),
    "eps-rl": (cmd_eps_rl, {"r": (_int, R, None), "l": (_int, R, None)}),
    "sslope": (cmd_sslope, {"sigma": (_value, R, None), "r": (_int, O, None)}),
}


def run(job: dict, ctx: Optional[Context] = None) -> tuple[dict, int]:
    """Execute one job; returns (envelope, exit status)."""
    ctx = ctx or Context()
    envelope: dict = {"job": job}
    try:
        if not isinstance(job, dict):
            raise SchemaError("job", "expected an object")
        unknown = set(job) - {"command", "params", "seed", "trials"}
        if unknown:
            raise SchemaError(f"job.{sorted(unknown)[0]}", "unknown field")
        command = job.get("command")
        if command not in COMMANDS:
            raise SchemaError("job.command", f"unknown command {command!r}")
        local = dataclasses.replace(ctx)
        if job.get("seed") is not None:
            local.seed = _int("job.seed", job["seed"])
        if job.get("trials") is not None:
            local.trials = _int("job.trials", job["trials"])
        fn, schema = COMMANDS[command]
        params = validate(job.get("params") or {}, schema)
        result = fn(params, local)
        envelope["status"] = "ok"
        envelope["result"] = to_jsonable(result, local.digits)
        envelope["citations"] = _citations(result, [])
        return envelope, EXIT_OK
    except InconsistencyError as exc:
        envelope["status"] = "error"
        envelope["error"] = {"type": "inconsistency", "message": str(exc)}
        return envelope, EXIT_INCONSISTENT
    except SchemaError as exc:
        envelope["status"] = "error"
        envelope["error"] = {"type": "schema", "path": exc.path, "message": str(exc)}
        return envelope, EXIT_DOMAIN
    except (DomainError, ValueError) as exc:
        envelope["status"] = "error"
        envelope["error"] = {"type": "domain", "message": str(exc)}
        return envelope, EXIT_DOMAIN


def sub_seed(seed: int, index: int) -> int:
    """Deterministic 64-bit seed for line ``index`` of a batch run with ``seed``."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _batch_job(args) -> tuple[str, int]:
    index, line, ctx = args
    try:
        job = json.loads(line)
    except json.JSONDecodeError as exc:
        env = {"job": {"line": index + 1}, "status": "error",
               "error": {"type": "schema", "path": f"line {index + 1}", "message": str(exc)}}
        return dump(env), EXIT_DOMAIN
    local = dataclasses.replace(ctx, seed=sub_seed(ctx.seed, index), workers=1)
    env, code = run(job, local)
    return dump(env), code


def dump(env: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(env, indent=2)
    return json.dumps(env, separators=(",", ":"))


def run_batch(lines: list[str], ctx: Context, parallel: int = 1) -> tuple[list[str], int]:
    """Run one job per nonblank line; output order follows input order."""
    jobs = [(i, line, ctx) for i, line in enumerate(lines) if line.strip()]
    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(parallel) as pool:
            results = list(pool.map(_batch_job, jobs))
    else:
        results = [_batch_job(j) for j in jobs]
    status = max((code for _, code in results), default=EXIT_OK)
    return [out for out, _ in results], status


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _parse_kv(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise SchemaError("params", f"expected key=value, got {item!r}")
        key, raw = item.split("=", 1)
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError:
            out[key] = raw
    return out


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(name, "environment override must be an integer")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help=f"random seed (env {ENV_SEED})")
    common.add_argument("--trials", type=int, default=5, help="random trials for rank probes")
    common.add_argument("--parallel", type=int, help=f"worker processes (env {ENV_PARALLEL})")
    common.add_argument("--pretty", action="store_true", help="indented output")
    common.add_argument("--m-max", type=int, help="largest m enumerated by certify-p2")
    common.add_argument("--size-budget", type=int, default=2000,
                        help="largest conditions matrix certify-p2 will probe")
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="decimal display digits")

    parser = argparse.ArgumentParser(prog="seshadri", description="Exact Seshadri constant toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    batch = sub.add_parser("batch", parents=[common], help="run a file of JSON jobs, one per line")
    batch.add_argument("--input", required=True, help="job file ('-' for stdin)")
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--params", help="parameters as a JSON object")
        sp.add_argument("--input", help="file holding a JSON parameter object")
        sp.add_argument("kv", nargs="*", metavar="key=value", help="individual parameters")
    return parser


def _context(args) -> Context:
    seed = args.seed if args.seed is not None else _env_int(ENV_SEED)
    workers = args.parallel if args.parallel is not None else _env_int(ENV_PARALLEL)
    return Context(seed=seed or 0, trials=args.trials, digits=args.digits, m_max=args.m_max,
                   size_budget=args.size_budget, workers=max(1, workers or 1))


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ctx = _context(args)
    except SchemaError as exc:
        print(dump({"status": "error", "error": {"type": "schema", "path": exc.path,
                                                 "message": str(exc)}}))
        return EXIT_DOMAIN
    if args.command == "batch":
        stream = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
        with stream:
            lines = stream.read().splitlines()
        outputs, status = run_batch(lines, ctx, ctx.workers)
        for out in outputs:
            if args.pretty:
                out = dump(json.loads(out), pretty=True)
            print(out)
        return status
    try:
        params: dict = {}
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                data = _load_json(fh.read(), "input")
            if args.command == "symbolic" and "vars" in data:
                data = {"ideal": data}
            params.update(data)
        if args.params:
            params.update(_load_json(args.params, "params"))
        params.update(_parse_kv(args.kv))
    except SchemaError as exc:
        env = {"status": "error", "error": {"type": "schema", "path": exc.path, "message": str(exc)}}
        print(dump(env, args.pretty))
        return EXIT_DOMAIN
    env, status = run({"command": args.command, "params": params}, ctx)
    print(dump(env, args.pretty))
    return status


def _load_json(text: str, path: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(path, f"invalid JSON ({exc})")
    if not isinstance(data, dict):
        raise SchemaError(path, "expected a JSON object")
    return data


if __name__ == "__main__":
    sys.exit(main())
