"""Identity terms over a linear groupoid: AST, parser, evaluator, affine expansion.

Grammar (one precedence level, left associative, juxtaposition forbidden):

    identity := term "=" term
    term     := factor (("*" | "\\" | "/") factor)*
    factor   := var | "(" term ")" | fn "(" term ")"
    fn       := "rho" | "lam" | "er" | "el"
    var      := single letter a-z
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groupoid as gp
from .modring import inverse_mod, is_unit
from .groupoid import LinearGroupoid


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Prod:
    left: Term
    right: Term


@dataclass(frozen=True)
class LDiv:
    left: Term
    right: Term


@dataclass(frozen=True)
class RDiv:
    left: Term
    right: Term


@dataclass(frozen=True)
class Rho:
    child: Term


@dataclass(frozen=True)
class Lam:
    child: Term


@dataclass(frozen=True)
class ERho:
    child: Term


@dataclass(frozen=True)
class ELam:
    child: Term


Term = Var | Prod | LDiv | RDiv | Rho | Lam | ERho | ELam

_UNARY = {"rho": Rho, "lam": Lam, "er": ERho, "el": ELam}
_UNARY_NAMES = {Rho: "rho", Lam: "lam", ERho: "er", ELam: "el"}
_BINARY_OPS = {"*": Prod, "\\": LDiv, "/": RDiv}
_BINARY_SYMBOL = {Prod: "*", LDiv: "\\", RDiv: "/"}


@dataclass(frozen=True)
class Identity:
    """An equation lhs = rhs; variables listed in first-appearance order."""

    lhs: Term
    rhs: Term
    variables: tuple[str, ...] = field(init=False)

    def __post_init__(self) -> None:
        seen: dict[str, None] = {}
        for term in (self.lhs, self.rhs):
            for name in _term_variables(term):
                seen.setdefault(name)
        object.__setattr__(self, "variables", tuple(seen))


def _term_variables(term: Term) -> list[str]:
    if isinstance(term, Var):
        return [term.name]
    if isinstance(term, (Prod, LDiv, RDiv)):
        return _term_variables(term.left) + _term_variables(term.right)
    return _term_variables(term.child)


class TermSyntaxError(ValueError):
    """Malformed identity text; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnboundVariableError(KeyError):
    """The evaluation environment is missing a variable of the term."""


@dataclass(frozen=True)
class NotApplicable:
    """A term is not well-posed on this groupoid (some local element or
    division has no unique value)."""

    reason: str


# --- parsing ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _take_word(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def parse_term(self) -> Term:
        node = self._factor()
        while self._peek() in _BINARY_OPS:
            op = self.text[self.pos]
            self.pos += 1
            node = _BINARY_OPS[op](node, self._factor())
        return node

    def _factor(self) -> Term:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_term()
            if self._peek() != ")":
                raise TermSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if ch.isalpha():
            start = self.pos
            word = self._take_word()
            if len(word) == 1:
                if not word.islower():
                    raise TermSyntaxError(f"variables are lowercase a-z, got {word!r}", start)
                return Var(word)
            if word in _UNARY:
                if self._peek() != "(":
                    raise TermSyntaxError(f"{word} must be applied as {word}(...)", self.pos)
                self.pos += 1
                inner = self.parse_term()
                if self._peek() != ")":
                    raise TermSyntaxError("expected ')'", self.pos)
                self.pos += 1
                return _UNARY[word](inner)
            raise TermSyntaxError(
                f"{word!r} is not a variable or operator; juxtaposition is"
                " not allowed, write an explicit '*'", start)
        raise TermSyntaxError(f"expected a factor, got {ch!r}", self.pos)

    def expect_end(self) -> None:
        if self._peek():
            raise TermSyntaxError(f"unexpected {self._peek()!r}", self.pos)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    node = p.parse_term()
    p.expect_end()
    return node


def parse(text: str) -> Identity:
    """Parse an identity `lhs = rhs` into its AST."""
    p = _Parser(text)
    lhs = p.parse_term()
    if p._peek() != "=":
        raise TermSyntaxError("expected '=' between the two sides", p.pos)
    p.pos += 1
    rhs = p.parse_term()
    p.expect_end()
    return Identity(lhs, rhs)


def canonical_print(term: Term) -> str:
    """Deterministic fully parenthesized rendering; parse round-trips it."""
    if isinstance(term, Var):
        return term.name
    if isinstance(term, (Prod, LDiv, RDiv)):
        sym = _BINARY_SYMBOL[type(term)]
        return f"({canonical_print(term.left)}{sym}{canonical_print(term.right)})"
    return f"{_UNARY_NAMES[type(term)]}({canonical_print(term.child)})"


def identity_text(ident: Identity) -> str:
    return f"{canonical_print(ident.lhs)} = {canonical_print(ident.rhs)}"


# --- evaluation ------------------------------------------------------------


def _local(value: gp.LocalElement, what: str, g: LinearGroupoid) -> int | NotApplicable:
    if value.defined:
        return value.value
    return NotApplicable(f"{what} undefined ({value.reason}) on {g.triple()}")


def evaluate(term: Term, env: dict[str, int], g: LinearGroupoid) -> int | NotApplicable:
    """Bottom-up evaluation; a NotApplicable from any subterm propagates."""
    if isinstance(term, Var):
        if term.name not in env:
            raise UnboundVariableError(term.name)
        return int(env[term.name]) % g.n
    if isinstance(term, (Prod, LDiv, RDiv)):
        left = evaluate(term.left, env, g)
        if isinstance(left, NotApplicable):
            return left
        right = evaluate(term.right, env, g)
        if isinstance(right, NotApplicable):
            return right
        if isinstance(term, Prod):
            return gp.apply(g, left, right)
        if isinstance(term, LDiv):
            return _local(gp.left_divide(g, left, right), "left division", g)
        return _local(gp.right_divide(g, left, right), "right division", g)
    child = evaluate(term.child, env, g)
    if isinstance(child, NotApplicable):
        return child
    if isinstance(term, Rho):
        return _local(gp.right_inverse(g, child), "right inverse", g)
    if isinstance(term, Lam):
        return _local(gp.left_inverse(g, child), "left inverse", g)
    if isinstance(term, ERho):
        return _local(gp.local_right_identity(g, child), "local right identity", g)
    return _local(gp.local_left_identity(g, child), "local left identity", g)


# --- symbolic affine expansion ---------------------------------------------


@dataclass
class AffineForm:
    """constant + sum(coeff * variable) over Z_n, one coefficient per variable."""

    n: int
    constant: int
    coeffs: dict[str, int]

    def evaluate(self, env: dict[str, int]) -> int:
        total = self.constant
        for name, coef in self.coeffs.items():
            total += coef * env[name]
        return total % self.n


def _affine_map(form: AffineForm, scale: int, shift: int) -> AffineForm:
    n = form.n
    return AffineForm(
        n,
        (scale * form.constant + shift) % n,
        {v: (scale * k) % n for v, k in form.coeffs.items()},
    )


def _affine_combine(a_: int, kl: int, left: AffineForm, kr: int, right: AffineForm) -> AffineForm:
    n = left.n
    coeffs: dict[str, int] = {}
    for v, k in left.coeffs.items():
        coeffs[v] = (kl * k) % n
    for v, k in right.coeffs.items():
        coeffs[v] = (coeffs.get(v, 0) + kr * k) % n
    return AffineForm(n, (a_ + kl * left.constant + kr * right.constant) % n, coeffs)


def expand_affine(term: Term, g: LinearGroupoid) -> AffineForm | NotApplicable:
    """Closed-form expansion of a term as constant + coefficient vector.

    Divisions and rho/lam/er/el need the relevant coefficient of the groupoid
    to be a unit; otherwise the expansion is NotApplicable.
    """
    n, a, b, c = g.n, g.a, g.b, g.c
    if isinstance(term, Var):
        return AffineForm(n, 0, {term.name: 1})
    if isinstance(term, (Prod, LDiv, RDiv)):
        left = expand_affine(term.left, g)
        if isinstance(left, NotApplicable):
            return left
        right = expand_affine(term.right, g)
        if isinstance(right, NotApplicable):
            return right
        if isinstance(term, Prod):
            return _affine_combine(a, b, left, c, right)
        if isinstance(term, LDiv):
            # x \ z = c^-1 (z - a - b x)
            if not is_unit(c, n):
                return NotApplicable(f"c = {c} is not a unit mod {n}")
            ci = inverse_mod(c, n)
            return _affine_combine(-ci * a % n, -ci * b % n, left, ci, right)
        # z / x = b^-1 (z - a - c x)
        if not is_unit(b, n):
            return NotApplicable(f"b = {b} is not a unit mod {n}")
        bi = inverse_mod(b, n)
        return _affine_combine(-bi * a % n, bi, left, -bi * c % n, right)

    child = expand_affine(term.child, g)
    if isinstance(child, NotApplicable):
        return child
    if isinstance(term, (Rho, ERho)):
        if not is_unit(c, n):
            return NotApplicable(f"c = {c} is not a unit mod {n}")
        ci = inverse_mod(c, n)
        if isinstance(term, ERho):
            # e_rho(v) = c^-1 ((1 - b) v - a)
            return _affine_map(child, ci * (1 - b) % n, -ci * a % n)
        # v^rho = c^-1 (e_rho(v) - a - b v)
        scale = (ci * ci * (1 - b) - ci * b) % n
        shift = (-a * (ci * ci + ci)) % n
        return _affine_map(child, scale, shift)
    if not is_unit(b, n):
        return NotApplicable(f"b = {b} is not a unit mod {n}")
    bi = inverse_mod(b, n)
    if isinstance(term, ELam):
        # e_lambda(v) = b^-1 ((1 - c) v - a)
        return _affine_map(child, bi * (1 - c) % n, -bi * a % n)
    # v^lambda = b^-1 (e_lambda(v) - a - c v)
    scale = (bi * bi * (1 - c) - bi * c) % n
    shift = (-a * (bi * bi + bi)) % n
    return _affine_map(child, scale, shift)
