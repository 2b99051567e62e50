"""Line-oriented analysis scripts: parsing, execution and reports.

Grammar (one statement per line, ``#`` starts a comment)::

    ring semigroup 4 9 10
    ring quotient x y mod x^2*y, y^3
    ideal I = t^8, t^9, t^10
    check gorenstein-G I J
    check quasi-gorenstein I J
    analyze filtration I [J]
    present G|F I
    corpus [filter]
"""

import json
import math
import re
from dataclasses import dataclass, field

from .errors import (AlgebraError, CriteriaDisagree, ConductorMismatch, ParseError,
                     PrecisionExhausted, UnknownName)
from .filtration import (analyze_filtration, cm_check_G, principal_reduction, socle_table)
from .gorenstein import (artinian_gorenstein, blowup_conductor, lift_gorenstein_check,
                         quasi_gorenstein_check, rr_slices_check, quotient_gorenstein_check, colon_gorenstein_check)
from .ideals import SemigroupRing
from .monomial import MonomialQuotientRing, parse_monomial
from .presentation import ci_assess, present_F, present_G, presentation_summary
from .semigroup import build_semigroup
from .series import QQ, parse_series

_NAME = re.compile(r"[A-Za-z_][\w']*$")


@dataclass
class RingDecl:
    kind: str
    generators: tuple = ()
    variables: tuple = ()
    relations: tuple = ()
    line: int = 0


@dataclass
class Command:
    verb: str
    args: tuple
    line: int


@dataclass
class AnalysisScript:
    ring: RingDecl = None
    ideals: dict = field(default_factory=dict)
    commands: list = field(default_factory=list)

    def __len__(self):
        return (self.ring is not None) + len(self.ideals) + len(self.commands)


def _err(msg, line, col, expected=()):
    return ParseError(msg, line=line, column=col, expected=expected)


def _words(text):
    """(word, 1-based column) pairs separated by whitespace."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def parse_script(text):
    script = AnalysisScript()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        words = _words(line)
        if not words:
            continue
        head, col = words[0]
        if head == "ring":
            if script.ring is not None:
                raise _err("ring declared twice", lineno, col)
            script.ring = _parse_ring(line, words, lineno)
        elif head == "ideal":
            if script.ring is None:
                raise _err("ideal declared before any ring", lineno, col, ("ring",))
            name, elems = _parse_ideal(line, lineno, script.ring)
            if name in script.ideals:
                raise _err(f"ideal {name!r} declared twice", lineno, col)
            script.ideals[name] = elems
        elif head in ("check", "analyze", "present", "corpus"):
            cmd = _parse_command(words, lineno)
            if cmd.verb != "corpus" and script.ring is None:
                raise _err("command before any ring declaration", lineno, col, ("ring",))
            for name in cmd.args[_name_offset(cmd.verb):]:
                if name not in script.ideals:
                    raise UnknownName(f"line {lineno}: ideal {name!r} is not declared")
            script.commands.append(cmd)
        else:
            raise _err(f"unknown statement {head!r}", lineno, col,
                       ("ring", "ideal", "check", "analyze", "present", "corpus"))
    return script


def _name_offset(verb):
    return {"present": 1, "corpus": 99}.get(verb, 0)


def _parse_ring(line, words, lineno):
    if len(words) < 2:
        raise _err("missing ring kind", lineno, len(line) + 1, ("semigroup", "quotient"))
    kind, col = words[1]
    if kind == "semigroup":
        gens = []
        for w, c in words[2:]:
            if not w.isdigit():
                raise _err(f"expected a positive integer, got {w!r}", lineno, c, ("<integer>",))
            gens.append(int(w))
        if not gens:
            raise _err("semigroup needs generators", lineno, len(line) + 1, ("<integer>",))
        return RingDecl("semigroup", generators=tuple(gens), line=lineno)
    if kind == "quotient":
        names = [w for w, _ in words[2:]]
        if "mod" not in names:
            raise _err("expected 'mod' in quotient ring", lineno, len(line) + 1, ("mod",))
        k = names.index("mod")
        variables = tuple(names[:k])
        for w, c in words[2:2 + k]:
            if not _NAME.match(w):
                raise _err(f"bad variable name {w!r}", lineno, c, ("<name>",))
        if not variables:
            raise _err("quotient ring needs variables", lineno, words[2][1], ("<name>",))
        mod_col = words[2 + k][1]
        rest_start = mod_col - 1 + 3
        rels = []
        for piece, c in _split_commas(line, rest_start):
            try:
                rels.append(parse_monomial(piece, variables))
            except ParseError as e:
                raise _err(e.message, lineno, c + (e.column or 1) - 1, e.expected)
        return RingDecl("quotient", variables=variables, relations=tuple(rels), line=lineno)
    raise _err(f"unknown ring kind {kind!r}", lineno, col, ("semigroup", "quotient"))


def _split_commas(line, start):
    """Comma-separated pieces of line[start:] with their 1-based columns."""
    out = []
    pos = start
    for piece in line[start:].split(","):
        stripped = piece.strip()
        lead = len(piece) - len(piece.lstrip())
        out.append((stripped, pos + lead + 1))
        pos += len(piece) + 1
    return out


def _parse_ideal(line, lineno, ring):
    m = re.match(r"\s*ideal\s+(\S+)\s*(=)?", line)
    name = m.group(1)
    if not _NAME.match(name):
        raise _err(f"bad ideal name {name!r}", lineno, m.start(1) + 1, ("<name>",))
    if not m.group(2):
        raise _err("expected '='", lineno, m.end() + 1, ("=",))
    elems = []
    for piece, col in _split_commas(line, m.end()):
        if not piece:
            raise _err("empty generator", lineno, col, ("<element>",))
        try:
            if ring.kind == "semigroup":
                parse_series(piece, QQ)
            else:
                parse_monomial(piece, ring.variables)
        except ParseError as e:
            raise _err(e.message, lineno, col + (e.column or 1) - 1, e.expected)
        elems.append(piece)
    return name, tuple(elems)


def _parse_command(words, lineno):
    verb, col = words[0]
    args = [w for w, _ in words[1:]]
    end = words[-1][1] + len(words[-1][0])
    if verb == "check":
        if not args or args[0] not in ("gorenstein-G", "quasi-gorenstein"):
            c = words[1][1] if len(words) > 1 else end
            raise _err("unknown check", lineno, c, ("gorenstein-G", "quasi-gorenstein"))
        if len(args) != 3:
            raise _err("check needs two ideal names", lineno, end, ("<I> <J>",))
        return Command(args[0], tuple(args[1:]), lineno)
    if verb == "analyze":
        if not args or args[0] != "filtration":
            raise _err("unknown analysis", lineno, words[1][1] if len(words) > 1 else end,
                       ("filtration",))
        if len(args) not in (2, 3):
            raise _err("analyze filtration needs <I> [<J>]", lineno, end, ("<I>",))
        return Command("filtration", tuple(args[1:]), lineno)
    if verb == "present":
        if len(args) != 2 or args[0] not in ("G", "F"):
            raise _err("expected present G|F <I>", lineno, words[1][1] if len(words) > 1 else end,
                       ("G", "F"))
        return Command("present", tuple(args), lineno)
    if len(args) > 1:
        raise _err("corpus takes at most one filter", lineno, words[2][1], ())
    return Command("corpus", tuple(args), lineno)


# -- execution ---------------------------------------------------------------

@dataclass
class Options:
    field: object = QQ
    precision: int = None
    degree_bound: int = 6
    window: int = None
    seed: int = 0


def build_ring(decl, options):
    if decl.kind == "semigroup":
        return SemigroupRing(build_semigroup(decl.generators), options.field,
                             precision=options.precision)
    return MonomialQuotientRing(decl.variables, decl.relations, options.field)


def jsonable(x):
    """Plain JSON data for reports (ideals become echelon summaries)."""
    if hasattr(x, "summary") and hasattr(x, "ring"):
        return x.summary()
    if hasattr(x, "as_dict"):
        return x.as_dict()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _result(command, **parts):
    out = {"command": command, "verdicts": [], "tables": {}, "invariants": {},
           "witnesses": [], "certified_flags": {}}
    for k, v in parts.items():
        out[k] = v
    return out


def _verdict(name, v):
    holds = v.holds if hasattr(v, "holds") else v
    entry = {"name": name, "holds": holds}
    if getattr(v, "witness", None) is not None:
        entry["witness"] = v.witness
    return entry


def run_filtration(I, J, ring):
    auto = False
    if J is None and isinstance(ring, SemigroupRing):
        J, auto = principal_reduction(I), True
    if J is not None and not isinstance(ring, SemigroupRing):
        J = None
    rep = analyze_filtration(I, J)
    res = _result("analyze filtration")
    res["tables"] = {"hilb_G": rep.hilb_G, "hilb_F": rep.hilb_F,
                     "free_degrees": rep.free_degrees}
    if rep.quotient_hilbert is not None:
        res["tables"]["quotient_hilbert"] = rep.quotient_hilbert
    res["invariants"] = {"r": rep.r, "s": rep.s, "e_I": rep.e_I, "e_F": rep.e_F,
                         "lengths": rep.colengths}
    res["verdicts"].append(_verdict("normally flat", rep.normally_flat))
    if J is not None:
        res["reduction"] = {"ideal": J.summary(), "chosen_automatically": auto}
        res["verdicts"].append(_verdict("G(I) Cohen-Macaulay", rep.G_CM))
        res["verdicts"].append(_verdict("F(I) Cohen-Macaulay", rep.F_CM_dim1))
        res["verdicts"].append(_verdict("all powers Ratliff-Rush", rep.rr_all_powers))
        res["ratliff_rush_closure"] = rep.rr_closure.summary()
        res["certified_flags"]["ratliff_rush"] = rep.rr_certified
        res["certified_flags"]["normal_flatness_total"] = rep.normal_flatness_total
        if not J.is_unit():
            res["tables"]["socle"] = socle_table(J, I)
        for v in (rep.G_CM, rep.F_CM_dim1):
            if v.witness:
                res["witnesses"].append(v.witness)
    return res


def run_gorenstein(I, J):
    res = _result("check gorenstein-G")
    full = colon_gorenstein_check(J, I)
    res["verdicts"] += [_verdict(k, v) for k, v in full.conditions.items()]
    res["verdicts"].append(_verdict("G(I) Gorenstein", full.verdict))
    res["invariants"]["r"] = full.details["r"]
    res["verdicts"].append(_verdict("G(I) Cohen-Macaulay", cm_check_G(I, J)))
    if artinian_gorenstein(J):
        quot = quotient_gorenstein_check(J, I)
        res["verdicts"] += [_verdict("quotient " + k, v) for k, v in quot.conditions.items()]
        res["verdicts"].append(_verdict("G(I mod J) Gorenstein", quot.verdict))
        res["invariants"]["s"] = quot.details["r"]
        res["invariants"]["type_of_G"] = quot.type_of_G
        res["tables"]["socle"] = quot.details["socle"]
        res["tables"]["quotient_hilbert"] = quot.details["hilbert"]
        res["implication"] = lift_gorenstein_check(J, I)
    for rep in (full,):
        f = rep.first_failure()
        if f:
            res["witnesses"].append(f[1])
    return res


def run_quasi(I, J, window):
    res = _result("check quasi-gorenstein")
    cs = quasi_gorenstein_check(J, I, window)
    res["verdicts"] += [_verdict(k, v) for k, v in cs.conditions.items()]
    res["verdicts"].append(_verdict("quasi-Gorenstein", cs.quasi_gorenstein))
    res["invariants"] = {"r": cs.r, "s": cs.s, "u": cs.u, "w": cs.w, "a": cs.a}
    res["slices"] = {str(i): c.summary() for i, c in cs.slices.items()}
    res["window"] = list(cs.window)
    res["certified_flags"] = {"label": cs.label, "propagation": cs.propagation_ok}
    res["equal_power_colon"] = cs.details["power_colon"]
    res["conductor"] = blowup_conductor(I, [J])
    try:
        rr = rr_slices_check(J, I, window)
        res["ratliff_rush_slices"] = {"k": rr["k"], "b": rr["b"], "u": rr["u"]}
    except AlgebraError as e:
        res["ratliff_rush_slices"] = {"error": type(e).__name__, "message": str(e)}
    for v in cs.conditions.values():
        if v.witness:
            res["witnesses"].append(v.witness)
    return res


def run_present(kind, I, ring, degree_bound):
    from .filtration import hilbert_functions
    res = _result(f"present {kind}")
    p = (present_G if kind == "G" else present_F)(I, D=degree_bound)
    res["presentation"] = presentation_summary(ring, p)
    hd = hilbert_functions(I, N=degree_bound + 1)
    hilb = (hd.hilb_G if kind == "G" else hd.hilb_F)[:degree_bound + 2]
    try:
        res["ci"] = ci_assess(p, 1, hilb)
    except AlgebraError as e:
        res["ci"] = {"verdict": "inconclusive", "error": type(e).__name__, "message": str(e)}
    res["tables"]["hilb_" + kind] = hilb
    res["invariants"]["relation_type_lower_bound"] = p.relation_type_lower_bound
    res["certified_flags"]["representatives_verified"] = p.verified
    return res


def run_script(script, options=None, corpus_runner=None):
    """Execute every command; returns (report dict, exit code)."""
    options = options or Options()
    report = {"ring": None, "ideals": {}, "results": [], "precision": None}
    code = 0
    ring = build_ring(script.ring, options) if script.ring else None
    ideals = {}
    if ring is not None:
        report["ring"] = ring.describe()
        for name, elems in script.ideals.items():
            ideals[name] = ring.ideal(*elems)
            report["ideals"][name] = {"input": list(elems), "echelon": ideals[name].summary()}
    for cmd in script.commands:
        try:
            if cmd.verb == "corpus":
                run = corpus_runner or _default_corpus
                res, sub = run(cmd.args[0] if cmd.args else None)
                code = max(code, sub)
            elif cmd.verb == "filtration":
                J = ideals[cmd.args[1]] if len(cmd.args) > 1 else None
                res = run_filtration(ideals[cmd.args[0]], J, ring)
            elif cmd.verb == "gorenstein-G":
                res = run_gorenstein(ideals[cmd.args[0]], ideals[cmd.args[1]])
            elif cmd.verb == "quasi-gorenstein":
                res = run_quasi(ideals[cmd.args[0]], ideals[cmd.args[1]], options.window)
            else:
                res = run_present(cmd.args[0], ideals[cmd.args[1]], ring, options.degree_bound)
        except PrecisionExhausted:
            raise
        except AlgebraError as e:
            res = _result(cmd.verb, error={"type": type(e).__name__, "message": str(e)})
            code = max(code, 1)
            if isinstance(e, (CriteriaDisagree, ConductorMismatch)):
                res["error"]["internal"] = True
        res["line"] = cmd.line
        report["results"].append(jsonable(res))
    if ring is not None and hasattr(ring, "precision"):
        report["precision"] = ring.precision
    return jsonable(report), code


def _default_corpus(filter_text):
    from .corpus import corpus_result
    return corpus_result(filter_text)


# -- rendering ---------------------------------------------------------------

def render_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


_PLAIN = re.compile(r"[A-Za-z_]\w*$")


def _segment(key, first):
    if isinstance(key, int):
        return f"[{key}]"
    if _PLAIN.match(key):
        return key if first else "." + key
    return "[" + json.dumps(key, ensure_ascii=False) + "]"


def render_text(report):
    """One ``path = value`` line per leaf; values are JSON literals.

    Path segments are ``.name`` for identifier keys, ``[i]`` for list
    positions and ``["key"]`` for any other key.
    """
    lines = []

    def walk(prefix, x):
        if isinstance(x, dict) and x:
            for k in sorted(x):
                walk(prefix + _segment(k, not prefix), x[k])
        elif isinstance(x, list) and x:
            for i, v in enumerate(x):
                walk(prefix + _segment(i, False), v)
        else:
            lines.append(f"{prefix} = {json.dumps(x, ensure_ascii=False)}")

    walk("", report)
    return "\n".join(lines)


def _path_tokens(line):
    """Split a rendered line into (list of keys, value text)."""
    keys, pos = [], 0
    decoder = json.JSONDecoder()
    while True:
        if line.startswith(" = ", pos):
            return keys, line[pos + 3:]
        if line[pos] == "[":
            if line[pos + 1] == '"':
                key, end = decoder.raw_decode(line, pos + 1)
            else:
                end = line.index("]", pos)
                key = int(line[pos + 1:end])
            keys.append(key)
            pos = end + 1 if line[end] == "]" else end
            continue
        if line[pos] == ".":
            pos += 1
        m = re.compile(r"[A-Za-z_]\w*").match(line, pos)
        keys.append(m.group())
        pos = m.end()


def parse_text(text):
    """Inverse of ``render_text``."""
    root = {}
    for line in text.splitlines():
        keys, value = _path_tokens(line)
        node = root
        for i, key in enumerate(keys):
            if i == len(keys) - 1:
                _set(node, key, json.loads(value))
            else:
                node = _child(node, key, [] if isinstance(keys[i + 1], int) else {})
    return root
def _set(node, key, value):
    if isinstance(node, list):
        while len(node) <= key:
            node.append(None)
    node[key] = value


def _child(node, key, default):
    if isinstance(node, list):
        while len(node) <= key:
            node.append(None)
        if node[key] is None:
            node[key] = default
        return node[key]
    return node.setdefault(key, default)
