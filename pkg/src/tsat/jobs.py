"""Job documents: a ring header, named objects and one command.

Example::

    # the t^2 example
    ring n=2 weights=1,1 domain=dvr
    ideal I = x1, x1 + t^2*x2
    command sat I d=1

Statements:

* ``ring n=N [weights=w1,...,wN] [domain=q|qt|dvr]``
* ``ideal NAME = f1, f2, ...`` (empty right-hand side for the zero ideal)
* ``poly NAME = f``
* ``decomp NAME = (g1, h1); (g2, h2); ...``
* ``chain NAME = (0) < (x1) < (x1, x2)``
* ``command CMD [ARG ...] [key=value ...]``
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from . import __version__
from .errors import InvariantError, NotApplicable
from .ring import DVR, Q, QT, Ideal, RingSpec, eval_t0, format_poly
from .syntax import ParseError, _split_top, parse_poly, parse_poly_list

COMMANDS = ("gb", "height", "sat", "strength-bound", "tame", "syzygy", "ebar", "contract", "chains", "selftest")

# command -> (argument kinds, allowed domains, options)
_SIGNATURES = {
    "gb": (("ideal",), (Q, QT), ()),
    "height": (("ideal",), (Q, QT, DVR), ()),
    "sat": (("ideal",), (DVR,), ("d",)),
    "strength-bound": (("poly",), (Q, QT, DVR), ()),
    "tame": (("poly", "decomp"), (QT, DVR), ()),
    "syzygy": (("ideal",), (Q,), ("d",)),
    "ebar": (("ideal",), (Q, DVR), ("d",)),
    "contract": (("ideal",), (QT,), ("d",)),
    "chains": (("chain", "chain?"), (Q, QT, DVR), ()),
    "selftest": ((), (Q, QT, DVR), ("scale",)),
}

_DOMAINS = {"q": Q, "qt": QT, "dvr": DVR}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class Job:
    ring: RingSpec
    objects: dict
    kinds: dict
    command: str
    args: list
    options: dict = field(default_factory=dict)


def _err(msg, line, col=None):
    return ParseError(msg, col, line)


def _parse_ring(rest: str, lineno: int, col0: int) -> RingSpec:
    opts = {}
    for m in re.finditer(r"(\S+)", rest):
        tok = m.group(1)
        if "=" not in tok:
            raise _err(f"expected key=value in ring header, found {tok!r}", lineno, col0 + m.start() + 1)
        k, v = tok.split("=", 1)
        if k not in ("n", "weights", "domain"):
            raise _err(f"unknown ring option {k!r}", lineno, col0 + m.start() + 1)
        opts[k] = (v, col0 + m.start() + 1)
    if "n" not in opts:
        raise _err("ring header needs n=<number of variables>", lineno, col0)
    try:
        n = int(opts["n"][0])
    except ValueError:
        raise _err("n must be an integer", lineno, opts["n"][1]) from None
    weights = ()
    if "weights" in opts:
        try:
            weights = tuple(int(w) for w in opts["weights"][0].split(","))
        except ValueError:
            raise _err("weights must be comma-separated integers", lineno, opts["weights"][1]) from None
    domain = Q
    if "domain" in opts:
        key = opts["domain"][0].lower()
        if key not in _DOMAINS:
            raise _err(f"domain must be one of q, qt, dvr; found {opts['domain'][0]!r}", lineno, opts["domain"][1])
        domain = _DOMAINS[key]
    try:
        return RingSpec(n, weights, domain)
    except ValueError as exc:
        raise _err(str(exc), lineno, col0) from None


def _shift(exc: ParseError, lineno: int, offset: int) -> ParseError:
    return exc.at_line(lineno, offset)


def _parse_chain(text: str, ring: RingSpec, lineno: int, offset: int) -> list:
    links = []
    pos = 0
    for part in _split_top(text, "<"):
        body = part.strip()
        lead = len(part) - len(part.lstrip())
        col = offset + pos + lead
        if not (body.startswith("(") and body.endswith(")")):
            raise _err("chain links are written (g1, g2, ...)", lineno, col + 1)
        inner = body[1:-1]
        try:
            gens = [] if inner.strip() == "0" else parse_poly_list(inner, ring)
        except ParseError as exc:
            raise _shift(exc, lineno, col + 1) from None
        links.append(Ideal(ring, gens))
        pos += len(part) + 1
    return links


def _parse_decomp(text: str, ring: RingSpec, lineno: int, offset: int) -> list:
    pairs = []
    pos = 0
    for part in _split_top(text, ";"):
        body = part.strip()
        lead = len(part) - len(part.lstrip())
        col = offset + pos + lead
        if body:
            if not (body.startswith("(") and body.endswith(")")):
                raise _err("decomposition pairs are written (g, h)", lineno, col + 1)
            try:
                gh = parse_poly_list(body[1:-1], ring)
            except ParseError as exc:
                raise _shift(exc, lineno, col + 1) from None
            if len(gh) != 2:
                raise _err(f"a pair needs exactly two polynomials, found {len(gh)}", lineno, col + 1)
            pairs.append(tuple(gh))
        pos += len(part) + 1
    return pairs


def parse_job(text: str) -> Job:
    """Parse and validate a job document; every failure is a ParseError with a line number."""
    ring = None
    objects, kinds = {}, {}
    command = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        line = line.strip()
        head, _, rest = line.partition(" ")
        rest_col = indent + len(head) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if head == "ring":
            if ring is not None:
                raise _err("ring declared twice", lineno, indent + 1)
            ring = _parse_ring(rest, lineno, rest_col + 1)
            continue
        if head in ("ideal", "poly", "decomp", "chain"):
            if ring is None:
                raise _err("declare the ring before any object", lineno, indent + 1)
            name, eq, body = rest.partition("=")
            name = name.strip()
            if not eq or not _NAME.match(name):
                raise _err(f"expected '{head} NAME = ...'", lineno, rest_col + 1)
            if name in objects:
                raise _err(f"{name} is already defined", lineno, rest_col + 1)
            offset = rest_col + len(rest) - len(body) + (len(body) - len(body.lstrip()))
            body = body.strip()
            try:
                if head == "ideal":
                    obj = Ideal(ring, parse_poly_list(body, ring)) if body else Ideal(ring, [])
                elif head == "poly":
                    obj = parse_poly(body, ring)
                elif head == "decomp":
                    obj = _parse_decomp(body, ring, lineno, offset)
                else:
                    obj = _parse_chain(body, ring, lineno, offset)
            except ParseError as exc:
                raise (exc if exc.line is not None else _shift(exc, lineno, offset)) from None
            objects[name] = obj
            kinds[name] = head
            continue
        if head == "command":
            if command is not None:
                raise _err("only one command per job", lineno, indent + 1)
            command = (rest, lineno, rest_col + 1)
            continue
        raise _err(f"unknown statement {head!r}", lineno, indent + 1)
    if command is None:
        raise _err("no command given", len(text.splitlines()) or 1)
    if ring is None:
        ring = RingSpec(0, (), Q)
        if not command[0].startswith("selftest"):
            raise _err("no ring declared", command[1])
    return _parse_command(ring, objects, kinds, *command)


def _parse_command(ring, objects, kinds, rest, lineno, col0) -> Job:
    toks = [(m.group(0), col0 + m.start()) for m in re.finditer(r"\S+", rest)]
    if not toks:
        raise _err("command needs a name", lineno, col0)
    cmd, ccol = toks[0]
    if cmd not in _SIGNATURES:
        raise _err(f"unknown command {cmd!r}; expected one of {', '.join(COMMANDS)}", lineno, ccol)
    want, domains, allowed = _SIGNATURES[cmd]
    if ring.domain not in domains:
        names = {Q: "q", QT: "qt", DVR: "dvr"}
        raise _err(f"{cmd} needs domain {' or '.join(names[d] for d in domains)}, "
                   f"the ring is declared over {names[ring.domain]}", lineno, ccol)
    args, options = [], {}
    for tok, col in toks[1:]:
        if "=" in tok:
            k, v = tok.split("=", 1)
            if k not in allowed:
                raise _err(f"{cmd} takes no option {k!r}", lineno, col)
            try:
                options[k] = float(v) if k == "scale" else int(v)
            except ValueError:
                raise _err(f"option {k} needs a number, found {v!r}", lineno, col) from None
        else:
            if tok not in objects:
                raise _err(f"undefined name {tok!r}", lineno, col)
            args.append((tok, col))
    required = [w for w in want if not w.endswith("?")]
    if not len(required) <= len(args) <= len(want):
        raise _err(f"{cmd} takes {len(required)} argument(s) ({', '.join(want)}), got {len(args)}", lineno, ccol)
    for (name, col), kind in zip(args, want):
        if kinds[name] != kind.rstrip("?"):
            raise _err(f"{name} is a {kinds[name]}, {cmd} expects a {kind.rstrip('?')}", lineno, col)
    return Job(ring, objects, kinds, cmd, [objects[n] for n, _ in args], options)


def format_job(job: Job) -> str:
    """Canonical text of a job: objects sorted by name, polynomials in canonical form."""
    names = {Q: "q", QT: "qt", DVR: "dvr"}
    ring = job.ring
    head = f"ring n={ring.nvars}"
    if ring.nvars:
        head += " weights=" + ",".join(str(w) for w in ring.weights)
    lines = [head + f" domain={names[ring.domain]}"]
    for name in sorted(job.objects):
        obj, kind = job.objects[name], job.kinds[name]
        if kind == "ideal":
            body = ", ".join(format_poly(g) for g in obj.gens)
        elif kind == "poly":
            body = format_poly(obj)
        elif kind == "decomp":
            body = "; ".join(f"({format_poly(g)}, {format_poly(h)})" for g, h in obj)
        else:
            body = " < ".join("(" + (", ".join(format_poly(g) for g in P.gens) or "0") + ")" for P in obj)
        lines.append(f"{kind} {name} = {body}".rstrip())
    argnames = []
    for a in job.args:
        argnames.append(next(n for n in sorted(job.objects) if job.objects[n] is a))
    opts = [f"{k}={v}" for k, v in sorted(job.options.items())]
    lines.append(" ".join(["command", job.command] + argnames + opts))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# running


def _enc(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def canonical_gens(gens) -> list:
    """Nonzero generators without duplicates, sorted by their canonical text."""
    seen = {}
    for g in gens:
        if g:
            seen.setdefault(format_poly(g), g)
    return [seen[k] for k in sorted(seen)]


def _ring_dict(ring: RingSpec) -> dict:
    return {"nvars": ring.nvars, "weights": list(ring.weights), "domain": ring.domain}


def _need_degree(job: Job, default):
    d = job.options.get("d", default)
    if d is None:
        raise ValueError(f"{job.command} needs a degree bound (d=N or --degree-bound)")
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    return d


def _run_gb(job, I):
    from .groebner import reduced_gb
    G = reduced_gb(Ideal(job.ring, canonical_gens(I.gens)))
    return {"basis": [format_poly(g) for g in G], "unit_ideal": G.is_unit()}


def _run_height(job, I):
    from .heights import height_dvr
    from .groebner import dim_and_height
    gens = canonical_gens(I.gens)
    if job.ring.domain == DVR:
        out = height_dvr(Ideal(job.ring, gens)).to_dict()
    else:
        dim, ht = dim_and_height(Ideal(job.ring, gens))
        out = {"height": _enc(ht), "dimension": dim}
    if out["height"] == "inf":
        raise NotApplicable("the ideal is the unit ideal", out)
    return out


def _run_sat(job, I, degree_bound):
    from .saturation import GradedIdealPlus, sat_leq_d
    d = _need_degree(job, degree_bound)
    res = sat_leq_d(GradedIdealPlus(job.ring, tuple(canonical_gens(I.gens))), d)
    out = res.to_dict()
    if res.unit:
        raise NotApplicable("the saturation is the unit ideal", out)
    return out


def _run_strength_bound(job, f):
    from .strength import strength_lower_bound
    return {"f": format_poly(f), "lower_bound": strength_lower_bound(f)}


def _run_tame(job, f, pairs):
    from .strength import StrengthDecomposition, tame_strength
    return tame_strength(f, StrengthDecomposition(list(pairs))).to_dict()


def _run_syzygy(job, I, degree_bound):
    from .syzygy import syzygy_space
    d = _need_degree(job, degree_bound)
    gens = canonical_gens(I.gens)
    if not gens:
        raise NotApplicable("the zero ideal has no syzygies to list", {"generators": []})
    S = syzygy_space(gens, d)
    return {"generators": [format_poly(g) for g in gens], "degree": d, "dim": S.dim,
            "syzygies": [[format_poly(c) for c in tup] for tup in S.basis]}


def _run_ebar(job, I, degree_bound):
    from .syzygy import ebar_basis
    d = _need_degree(job, degree_bound)
    gens = canonical_gens(I.gens)
    red = [eval_t0(g) if g.ring.domain != Q else g for g in gens]
    pairs = [(g, r) for g, r in zip(gens, red) if r]
    if not pairs:
        raise NotApplicable("every generator vanishes mod t", {"generators": [format_poly(g) for g in gens]})
    # keep the original degrees: a generator divisible by t still has one
    flist = [r for _, r in pairs]
    B = ebar_basis(flist, d, [g.degree for g, _ in pairs])
    return {"generators_mod_t": [format_poly(r) for r in flist], "degree": d, "dim": B.dim,
            "representatives": [[format_poly(c) for c in tup] for tup in B.representatives()]}


def _run_contract(job, I, degree_bound):
    from .heights import contraction_degreewise
    d = _need_degree(job, degree_bound)
    return contraction_degreewise(Ideal(job.ring, canonical_gens(I.gens)), d).to_dict()


def _chain_dict(C):
    from .heights import PrimeChain, chain_verify, is_maximal
    chain = PrimeChain([Ideal(P.ring, canonical_gens(P.gens)) for P in C])
    length = chain_verify(chain)
    return chain, {"links": [[format_poly(g) for g in P.gens] for P in chain.links], "length": length,
                   "maximal": is_maximal(chain)}


def _run_chains(job, *chains):
    from .heights import catenary_compare
    built = [_chain_dict(C) for C in chains]
    out = {"chains": [d for _, d in built]}
    if len(built) == 2:
        out["catenary"] = catenary_compare(built[0][0], built[1][0]).to_dict()
    return out


def _run_selftest(job, seed):
    from .suites import run_all
    results = run_all(seed=seed, scale=job.options.get("scale", 1.0))
    out = {"seed": seed, "suites": [r.to_dict() for r in results],
           "passed": sum(r.passed for r in results), "total": sum(r.total for r in results)}
    if not all(r.ok for r in results):
        raise InvariantError("self-test failures", out)
    return out


def run_job(job: Job, seed: int | None = None, degree_bound: int | None = None) -> dict:
    """Deterministic output document; raises NotApplicable / InvariantError carrying partial output."""
    from .suites import DEFAULT_SEED
    seed = DEFAULT_SEED if seed is None else seed
    args = job.args
    if job.command == "gb":
        result = _run_gb(job, *args)
    elif job.command == "height":
        result = _run_height(job, *args)
    elif job.command == "sat":
        result = _run_sat(job, *args, degree_bound)
    elif job.command == "strength-bound":
        result = _run_strength_bound(job, *args)
    elif job.command == "tame":
        result = _run_tame(job, *args)
    elif job.command == "syzygy":
        result = _run_syzygy(job, *args, degree_bound)
    elif job.command == "ebar":
        result = _run_ebar(job, *args, degree_bound)
    elif job.command == "contract":
        result = _run_contract(job, *args, degree_bound)
    elif job.command == "chains":
        result = _run_chains(job, *args)
    else:
        result = _run_selftest(job, seed)
    return envelope(job, result, "ok")


def envelope(job: Job, result, status: str) -> dict:
    return {"tool": "tsat", "version": __version__, "command": job.command, "ring": _ring_dict(job.ring),
            "status": status, "result": result}
