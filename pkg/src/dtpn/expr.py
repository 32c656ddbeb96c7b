"""Expression language for interval end-points, guards, updates and fickle
functions.

Expressions are plain nested tuples: ('const', Rat), ('var', name),
('mark', place), ('theta',), arithmetic ('add' 'sub' 'mul' 'div' 'neg'
'abs' 'min' 'max'), comparisons ('cmp', op, a, b) and boolean connectives
('and' 'or' 'not').  Guards are the only place booleans are legal; theta is
legal only inside fickle expressions.

The module also houses the fickle-function machinery: classification into
identity / translation / affine / general-monotone, exact piecewise-linear
analysis at a given configuration, and the bounded maximization of
B_i(theta) - A_j(theta - mu) used when rebuilding difference bounds after a
firing.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ClassificationError, EvalError, UnboundedMaximizationError
from .rational import INF, Rat, grid_ceil, is_inf

THETA = ("theta",)

IDENTITY = "identity"
TRANSLATION = "translation"
AFFINE = "affine"
GENERAL_MONOTONE = "general-monotone"
FICKLE_CLASSES = (IDENTITY, TRANSLATION, AFFINE, GENERAL_MONOTONE)

_CMP = {
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def const(value) -> tuple:
    return ("const", Rat(value))


ZERO = const(0)
ONE = const(1)


class Env:
    """Name bindings for one configuration: place counts and variable
    values, both exact."""

    __slots__ = ("marks", "vars")

    def __init__(self, marks=None, vars=None):
        self.marks = marks or {}
        self.vars = vars or {}


EMPTY_ENV = Env()


def evaluate(expr, env: Env, theta=None):
    """Exact evaluation; returns a Rat or a bool."""
    tag = expr[0]
    if tag == "const":
        return expr[1]
    if tag == "var":
        try:
            return env.vars[expr[1]]
        except KeyError:
            raise EvalError(f"unbound variable {expr[1]!r}") from None
    if tag == "mark":
        try:
            return Rat(env.marks[expr[1]])
        except KeyError:
            raise EvalError(f"unknown place {expr[1]!r}") from None
    if tag == "theta":
        if theta is None:
            raise EvalError("theta used outside a fickle expression")
        return theta
    if tag == "add":
        return evaluate(expr[1], env, theta) + evaluate(expr[2], env, theta)
    if tag == "sub":
        return evaluate(expr[1], env, theta) - evaluate(expr[2], env, theta)
    if tag == "mul":
        return evaluate(expr[1], env, theta) * evaluate(expr[2], env, theta)
    if tag == "div":
        den = evaluate(expr[2], env, theta)
        if den == 0:
            raise EvalError("division by zero")
        return evaluate(expr[1], env, theta) / den
    if tag == "neg":
        return -evaluate(expr[1], env, theta)
    if tag == "abs":
        return abs(evaluate(expr[1], env, theta))
    if tag == "min":
        return min(evaluate(expr[1], env, theta), evaluate(expr[2], env, theta))
    if tag == "max":
        return max(evaluate(expr[1], env, theta), evaluate(expr[2], env, theta))
    if tag == "cmp":
        a = evaluate(expr[2], env, theta)
        b = evaluate(expr[3], env, theta)
        if isinstance(a, bool) or isinstance(b, bool):
            raise EvalError("comparison of boolean operands")
        return _CMP[expr[1]](a, b)
    if tag == "and":
        return bool(evaluate(expr[1], env, theta)) and bool(evaluate(expr[2], env, theta))
    if tag == "or":
        return bool(evaluate(expr[1], env, theta)) or bool(evaluate(expr[2], env, theta))
    if tag == "not":
        return not evaluate(expr[1], env, theta)
    raise EvalError(f"bad expression node {tag!r}")


def evaluate_float(expr, env: Env, theta=None):
    """Float evaluation, used only to locate numeric maxima and for plots."""
    tag = expr[0]
    if tag == "const":
        return float(expr[1])
    if tag == "var":
        return float(env.vars[expr[1]])
    if tag == "mark":
        return float(env.marks[expr[1]])
    if tag == "theta":
        return theta
    if tag == "add":
        return evaluate_float(expr[1], env, theta) + evaluate_float(expr[2], env, theta)
    if tag == "sub":
        return evaluate_float(expr[1], env, theta) - evaluate_float(expr[2], env, theta)
    if tag == "mul":
        return evaluate_float(expr[1], env, theta) * evaluate_float(expr[2], env, theta)
    if tag == "div":
        return evaluate_float(expr[1], env, theta) / evaluate_float(expr[2], env, theta)
    if tag == "neg":
        return -evaluate_float(expr[1], env, theta)
    if tag == "abs":
        return abs(evaluate_float(expr[1], env, theta))
    if tag == "min":
        return min(evaluate_float(expr[1], env, theta), evaluate_float(expr[2], env, theta))
    if tag == "max":
        return max(evaluate_float(expr[1], env, theta), evaluate_float(expr[2], env, theta))
    raise EvalError(f"float evaluation unsupported for {tag!r}")


def has_theta(expr) -> bool:
    tag = expr[0]
    if tag == "theta":
        return True
    if tag in ("const", "var", "mark"):
        return False
    if tag == "cmp":
        return has_theta(expr[2]) or has_theta(expr[3])
    return any(has_theta(sub) for sub in expr[1:] if isinstance(sub, tuple))


def free_symbols(expr, vars_out: set, marks_out: set) -> None:
    tag = expr[0]
    if tag == "var":
        vars_out.add(expr[1])
    elif tag == "mark":
        marks_out.add(expr[1])
    elif tag == "cmp":
        free_symbols(expr[2], vars_out, marks_out)
        free_symbols(expr[3], vars_out, marks_out)
    elif tag not in ("const", "theta"):
        for sub in expr[1:]:
            if isinstance(sub, tuple):
                free_symbols(sub, vars_out, marks_out)


def substitute_var(expr, name: str, replacement) -> tuple:
    """Replace every reference to variable `name` by `replacement`."""
    tag = expr[0]
    if tag == "var" and expr[1] == name:
        return replacement
    if tag in ("const", "var", "mark", "theta"):
        return expr
    if tag == "cmp":
        return ("cmp", expr[1], substitute_var(expr[2], name, replacement),
                substitute_var(expr[3], name, replacement))
    return (tag,) + tuple(
        substitute_var(sub, name, replacement) if isinstance(sub, tuple) else sub
        for sub in expr[1:]
    )


# -- pretty printing ---------------------------------------------------------

_PREC = {
    "or": 1, "and": 2, "not": 3, "cmp": 4,
    "add": 5, "sub": 5, "mul": 6, "div": 6, "neg": 7,
}


def format_expr(expr, parent_prec: int = 0) -> str:
    tag = expr[0]
    if tag == "const":
        return str(expr[1])
    if tag == "var":
        return expr[1]
    if tag == "mark":
        return "#" + expr[1]
    if tag == "theta":
        return "theta"
    if tag in ("abs",):
        return f"abs({format_expr(expr[1])})"
    if tag in ("min", "max"):
        return f"{tag}({format_expr(expr[1])}, {format_expr(expr[2])})"
    if tag == "neg":
        body = f"-{format_expr(expr[1], _PREC['neg'])}"
        return f"({body})" if parent_prec > _PREC["neg"] else body
    if tag == "not":
        body = f"not {format_expr(expr[1], _PREC['not'])}"
        return f"({body})" if parent_prec > _PREC["not"] else body
    if tag == "cmp":
        body = f"{format_expr(expr[2], _PREC['cmp'])} {expr[1]} {format_expr(expr[3], _PREC['cmp'])}"
        return f"({body})" if parent_prec > _PREC["cmp"] else body
    ops = {"add": "+", "sub": "-", "mul": "*", "div": "/", "and": "and", "or": "or"}
    prec = _PREC[tag]
    left = format_expr(expr[1], prec)
    right = format_expr(expr[2], prec + 1)
    body = f"{left} {ops[tag]} {right}"
    return f"({body})" if parent_prec > prec else body


# -- piecewise-linear functions of theta -------------------------------------


class PLUnboundedError(Exception):
    """A piecewise-linear extremum query diverges on an infinite range."""


class PL:
    """Continuous piecewise-linear function on [start, +inf).

    `starts[i]` opens piece i with value coefs[i][0]*theta + coefs[i][1];
    the last piece extends to +inf.
    """

    __slots__ = ("starts", "coefs")

    def __init__(self, starts, coefs):
        self.starts = starts
        self.coefs = coefs

    @classmethod
    def affine(cls, a, b, start=None):
        return cls([Rat(0) if start is None else start], [(Rat(a), Rat(b))])

    @classmethod
    def constant(cls, c, start=None):
        return cls.affine(0, c, start)

    def eval(self, x):
        if x < self.starts[0]:
            raise ValueError("evaluation below the function's domain")
        i = bisect.bisect_right(self.starts, x) - 1
        a, b = self.coefs[i]
        return a * x + b

    def shift(self, mu):
        """The function theta -> self(theta - mu), defined on start + mu."""
        return PL([s + mu for s in self.starts],
                  [(a, b - a * mu) for a, b in self.coefs])

    def scale(self, c):
        return PL(list(self.starts), [(a * c, b * c) for a, b in self.coefs])

    def add_const(self, c):
        return PL(list(self.starts), [(a, b + c) for a, b in self.coefs])

    def neg(self):
        return self.scale(Rat(-1))

    def _segments(self, other):
        # combined domain starts where both functions are defined
        lo = max(self.starts[0], other.starts[0])
        points = sorted({lo} | {s for s in self.starts if s > lo}
                        | {s for s in other.starts if s > lo})
        for s in points:
            i = bisect.bisect_right(self.starts, s) - 1
            j = bisect.bisect_right(other.starts, s) - 1
            yield s, self.coefs[i], other.coefs[j]

    def add(self, other):
        starts, coefs = [], []
        for s, (a1, b1), (a2, b2) in self._segments(other):
            starts.append(s)
            coefs.append((a1 + a2, b1 + b2))
        return PL(starts, coefs)._coalesce()

    def sub(self, other):
        return self.add(other.neg())

    def _extreme(self, other, want_max: bool):
        starts, coefs = [], []
        segs = list(self._segments(other))
        for idx, (s, (a1, b1), (a2, b2)) in enumerate(segs):
            end = segs[idx + 1][0] if idx + 1 < len(segs) else None
            v1, v2 = a1 * s + b1, a2 * s + b2
            first = (a1, b1) if (v1 >= v2 if want_max else v1 <= v2) else (a2, b2)
            if v1 == v2 and ((a1 >= a2) == want_max or a1 == a2):
                first = (a1, b1) if ((a1 >= a2) == want_max) else (a2, b2)
            starts.append(s)
            coefs.append(first)
            if a1 != a2:
                cross = (b2 - b1) / (a1 - a2)
                if s < cross and (end is None or cross < end):
                    second = (a2, b2) if first == (a1, b1) else (a1, b1)
                    starts.append(cross)
                    coefs.append(second)
        return PL(starts, coefs)._coalesce()

    def max(self, other):
        return self._extreme(other, True)

    def min(self, other):
        return self._extreme(other, False)

    def abs(self):
        return self.max(self.neg())

    def _coalesce(self):
        starts, coefs = [self.starts[0]], [self.coefs[0]]
        for s, c in zip(self.starts[1:], self.coefs[1:]):
            if c == coefs[-1]:
                continue
            starts.append(s)
            coefs.append(c)
        return PL(starts, coefs)

    def _candidates(self, lo, hi):
        yield lo
        i = bisect.bisect_right(self.starts, lo)
        while i < len(self.starts) and (is_inf(hi) or self.starts[i] < hi):
            yield self.starts[i]
            i += 1
        if not is_inf(hi) and hi > lo:
            yield hi

    def max_on(self, lo, hi):
        """sup over [lo, hi]; hi may be INF (returns INF on a rising tail)."""
        if is_inf(hi) and self.coefs[-1][0] > 0:
            return INF
        return max(self.eval(x) for x in self._candidates(lo, hi))

    def min_on(self, lo, hi):
        if is_inf(hi) and self.coefs[-1][0] < 0:
            raise PLUnboundedError("piecewise-linear function unbounded below")
        return min(self.eval(x) for x in self._candidates(lo, hi))

    def tail_slope(self):
        return self.coefs[-1][0]

    def is_nonnegative_from(self, lo):
        try:
            return self.min_on(lo, INF) >= 0
        except PLUnboundedError:
            return False


def linearize(expr, env: Env):
    """Piecewise-linear view of a fickle expression at one configuration;
    returns None when the expression is genuinely nonlinear in theta."""
    tag = expr[0]
    if not has_theta(expr):
        return PL.constant(evaluate(expr, env))
    if tag == "theta":
        return PL.affine(1, 0)
    if tag in ("add", "sub", "min", "max"):
        left = linearize(expr[1], env)
        right = linearize(expr[2], env)
        if left is None or right is None:
            return None
        return getattr(left, tag)(right)
    if tag == "neg":
        inner = linearize(expr[1], env)
        return None if inner is None else inner.neg()
    if tag == "abs":
        inner = linearize(expr[1], env)
        return None if inner is None else inner.abs()
    if tag == "mul":
        if not has_theta(expr[1]):
            factor, body = evaluate(expr[1], env), expr[2]
        elif not has_theta(expr[2]):
            factor, body = evaluate(expr[2], env), expr[1]
        else:
            return None
        inner = linearize(body, env)
        return None if inner is None else inner.scale(factor)
    if tag == "div":
        if has_theta(expr[2]):
            return None
        den = evaluate(expr[2], env)
        if den == 0:
            raise EvalError("division by zero")
        inner = linearize(expr[1], env)
        return None if inner is None else inner.scale(1 / den)
    return None


# -- regional suprema ---------------------------------------------------------


def _badd(a, b):
    if is_inf(a) or is_inf(b):
        return INF
    return a + b


def _bsub(a, b):
    # a - b with b finite; a may be INF
    return INF if is_inf(a) else a - b


def _bmin(a, b):
    return b if is_inf(a) else (a if is_inf(b) else min(a, b))


def pl_pair_sup(f: PL, g: PL, ki, li, kj, lj, mu_ij, mu_ji):
    """Exact sup of f(x) - g(y) over the difference-bound region
    { ki<=x<=li, kj<=y<=lj, x-y<=mu_ij, y-x<=mu_ji }.

    Returns INF for divergent regions and None for empty ones.  Neither
    function needs to be monotone.
    """
    li = _bmin(li, _badd(lj, mu_ij))
    lj = _bmin(lj, _badd(li, mu_ji))
    if not is_inf(mu_ji):
        ki = max(ki, _bsub(kj - mu_ji, 0) if False else kj - mu_ji)
    if not is_inf(mu_ij):
        kj = max(kj, ki - mu_ij)
    ki = max(ki, f.starts[0])
    kj = max(kj, g.starts[0])
    if ki > li or kj > lj:
        return None

    best = None

    def consider(v):
        nonlocal best
        if v is None:
            return
        if is_inf(v):
            best = INF
        elif best is not INF and (best is None or v > best):
            best = v

    if is_inf(li):
        # x and y diverge together; the gap x - y stays within the mu band.
        sf, sg = f.tail_slope(), g.tail_slope()
        if sf > sg:
            return INF
        if sf == sg:
            bf = f.coefs[-1][1]
            bg = g.coefs[-1][1]
            if sf > 0 and is_inf(mu_ij):
                return INF
            if sf == 0:
                consider(bf - bg)
            else:
                gap = mu_ij if sf > 0 else (None if is_inf(mu_ji) else -mu_ji)
                if gap is None:
                    raise PLUnboundedError("divergent piecewise-linear tail")
                consider(sf * gap + bf - bg)

    for cx in f._candidates(ki, li):
        jlo = max(kj, cx - mu_ij) if not is_inf(mu_ij) else kj
        jhi = _bmin(lj, _badd(cx, mu_ji))
        if jlo > jhi:
            continue
        consider(f.eval(cx) - g.min_on(jlo, jhi))
        if best is INF:
            return INF
    for cy in g._candidates(kj, lj):
        ilo = max(ki, cy - mu_ji) if not is_inf(mu_ji) else ki
        ihi = _bmin(li, _badd(cy, mu_ij))
        if ilo > ihi:
            continue
        hi_val = f.max_on(ilo, ihi)
        if is_inf(hi_val):
            return INF
        consider(hi_val - g.eval(cy))
    return best


def _snap_candidates(x: float):
    """Rational candidates near a float argmax."""
    out = []
    try:
        frac = Fraction(x).limit_denominator(10**6)
        out.append(Rat(frac.numerator, frac.denominator))
    except (OverflowError, ValueError):
        pass
    out.append(Rat(round(x * 10**9), 10**9))
    return out


def _golden(fun, lo: float, hi: float, iters: int = 80):
    inv_phi = 0.6180339887498949
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if b - a < 1e-13:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fun(d)
    return (a + b) / 2


def maximize_diff(b_expr, a_expr, mu, lo, hi, env: Env,
                  samples: int = 1024, grid: int = 10**9):
    """sup of B(theta) - A(theta - mu) over lo <= theta <= hi.

    Piecewise-linear inputs are solved exactly; anything else falls back to
    a sampled search (uniform grid, golden-section refinement of the best
    brackets) whose result is evaluated exactly at snapped rational
    arguments and rounded up to the 1/grid lattice so the returned bound
    stays on the safe side.
    """
    if not is_inf(hi) and lo > hi:
        raise ValueError("empty maximization range")
    if lo - mu < 0:
        raise ValueError("range reaches below the shifted function's domain")

    b_pl = linearize(b_expr, env)
    a_pl = linearize(a_expr, env)
    if b_pl is not None and a_pl is not None:
        diff = b_pl.sub(a_pl.shift(mu))
        return diff.max_on(lo, hi)

    if is_inf(hi):
        raise UnboundedMaximizationError(
            "cannot maximize a nonlinear fickle difference on an unbounded range")

    def exact(theta):
        return (evaluate(b_expr, env, theta)
                - evaluate(a_expr, env, theta - mu))

    best = max(exact(lo), exact(hi))
    if hi == lo:
        return best

    def approx(theta_f):
        return (evaluate_float(b_expr, env, theta_f)
                - evaluate_float(a_expr, env, theta_f - float(mu)))

    flo, fhi = float(lo), float(hi)
    step = (fhi - flo) / samples
    xs = [flo + k * step for k in range(samples + 1)]
    vals = [approx(x) for x in xs]
    order = sorted(range(len(xs)), key=lambda k: vals[k], reverse=True)[:3]

    width = hi - lo
    for k in order:
        a_f = max(flo, xs[k] - step)
        b_f = min(fhi, xs[k] + step)
        peak = _golden(approx, a_f, b_f)
        for cand in _snap_candidates(peak) + _snap_candidates(xs[k]):
            if lo <= cand <= hi:
                best = max(best, exact(cand))
        # exact evaluation at the rational grid point itself
        grid_pt = lo + Rat(k) * width / samples
        best = max(best, exact(grid_pt))
    return grid_ceil(best, grid)


# -- fickle specifications ----------------------------------------------------


@dataclass(frozen=True)
class FickleEntry:
    """One dynamic-interval rule: end-point expressions over theta."""

    a: tuple
    b: tuple
    monotone: bool = False


IDENTITY_ENTRY = FickleEntry(THETA, THETA)


@dataclass(frozen=True)
class FickleSpec:
    """Per-transition dynamic interval rules, keyed by the identity of the
    firing transition; key None is the default rule (identity if absent)."""

    entries: tuple = ()  # tuple of (trigger or None, FickleEntry)

    @classmethod
    def build(cls, mapping):
        return cls(tuple(sorted(mapping.items(),
                                key=lambda kv: (kv[0] is not None, kv[0] or ""))))

    def entry_for(self, trigger) -> FickleEntry:
        default = IDENTITY_ENTRY
        for key, entry in self.entries:
            if key == trigger:
                return entry
            if key is None:
                default = entry
        return default

    @property
    def is_trivial(self) -> bool:
        return all(e == IDENTITY_ENTRY for _, e in self.entries)

    def items(self):
        return self.entries


TRIVIAL_FICKLE = FickleSpec()


def _shift_kappa(expr):
    """If expr is a pure date shift (theta + k, possibly clamped at zero or
    combined with max), return the shift expression, else None."""
    if expr == THETA:
        return ZERO
    tag = expr[0]
    if tag == "add":
        if expr[1] == THETA and not has_theta(expr[2]):
            return expr[2]
        if expr[2] == THETA and not has_theta(expr[1]):
            return expr[1]
    if tag == "sub" and expr[1] == THETA and not has_theta(expr[2]):
        return ("neg", expr[2])
    if tag == "max":
        left, right = expr[1], expr[2]
        for zero, other in ((left, right), (right, left)):
            if zero == ZERO or (zero[0] == "const" and zero[1] == 0):
                return _shift_kappa(other)
        k1 = _shift_kappa(left)
        k2 = _shift_kappa(right)
        if k1 is not None and k2 is not None:
            return ("max", k1, k2)
    return None


def _affine_form(expr):
    """(P, Q) expression pair with expr == P*theta + Q, or None."""
    tag = expr[0]
    if not has_theta(expr):
        return ZERO, expr
    if tag == "theta":
        return ONE, ZERO
    if tag == "add":
        l = _affine_form(expr[1])
        r = _affine_form(expr[2])
        if l and r:
            return ("add", l[0], r[0]), ("add", l[1], r[1])
    if tag == "sub":
        l = _affine_form(expr[1])
        r = _affine_form(expr[2])
        if l and r:
            return ("sub", l[0], r[0]), ("sub", l[1], r[1])
    if tag == "neg":
        inner = _affine_form(expr[1])
        if inner:
            return ("neg", inner[0]), ("neg", inner[1])
    if tag == "mul":
        if not has_theta(expr[1]):
            inner = _affine_form(expr[2])
            if inner:
                return ("mul", expr[1], inner[0]), ("mul", expr[1], inner[1])
        elif not has_theta(expr[2]):
            inner = _affine_form(expr[1])
            if inner:
                return ("mul", inner[0], expr[2]), ("mul", inner[1], expr[2])
    if tag == "div" and not has_theta(expr[2]):
        inner = _affine_form(expr[1])
        if inner:
            return ("div", inner[0], expr[2]), ("div", inner[1], expr[2])
    return None


def _clamped_affine(expr) -> bool:
    if _affine_form(expr) is not None:
        return True
    if expr[0] == "max":
        return all(_affine_form(sub) is not None or _clamped_affine(sub)
                   for sub in expr[1:])
    if expr[0] == "min":
        return all(_clamped_affine(sub) for sub in expr[1:])
    return False


def classify_entry(entry: FickleEntry) -> str:
    """Most specific syntactic class of one fickle rule."""
    if entry.a == THETA and entry.b == THETA:
        return IDENTITY
    ka = _shift_kappa(entry.a)
    kb = _shift_kappa(entry.b)
    if ka is not None and kb is not None:
        return TRANSLATION
    if _clamped_affine(entry.a) and _clamped_affine(entry.b):
        return AFFINE
    if not entry.monotone:
        raise ClassificationError(
            "fickle expression is not recognisably affine in theta; "
            "annotate it 'monotone' to assert monotonicity")
    return GENERAL_MONOTONE


def classify(spec: FickleSpec, env: Env | None = None,
             spot_samples: int = 64) -> str:
    """Most specific class covering every rule of the spec.

    With an environment, general rules get a best-effort sampling check of
    the claimed monotonicity and of 0 <= A <= B.
    """
    worst = IDENTITY
    for _, entry in spec.items():
        tag = classify_entry(entry)
        if FICKLE_CLASSES.index(tag) > FICKLE_CLASSES.index(worst):
            worst = tag
        if tag == GENERAL_MONOTONE and env is not None:
            _spot_check(entry, env, spot_samples)
    return worst


def _spot_check(entry: FickleEntry, env: Env, samples: int):
    prev_a = prev_b = None
    for k in range(samples):
        theta = Rat(k, 4)
        try:
            a = evaluate(entry.a, env, theta)
            b = evaluate(entry.b, env, theta)
        except EvalError:
            return
        if a < 0 or b < a:
            raise ClassificationError(
                f"fickle end-points violate 0 <= A <= B at theta={theta}")
        if prev_a is not None and (a < prev_a or b < prev_b):
            raise ClassificationError(
                f"monotonicity annotation falsified at theta={theta}")
        prev_a, prev_b = a, b
