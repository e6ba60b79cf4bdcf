"""Reduction of polynomials modulo the ideal closure of a generator set.

partial_reduce removes every variable of g lying in an extreme-leader
set L+(l+(f)) or L-(l-(f)) of some generator f, using the separant-based
substitution: for a witness tuple t, D_t(f) = alpha * s * T + h with T
absent from s and h, so s*T can be rewritten as (D_t(f) - h)/alpha at
the price of a separant power on the left.  full_reduce then clears high
leader powers by classical pseudo-division with the initials.

Every run carries an exact certificate

    (prod_f i_f^m * s+_f^p * s-_f^q) * g = remainder + sum coeff * D_t(f)

which verify_certificate recomputes from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import order_key
from .leaders import DEFAULT_MAX_GAP, is_member, iter_witnesses
from .poly import DTuple, MINUS, PLUS, Polynomial, d_bracket, d_op

DEFAULT_MAX_STEPS = 10**6


class NotReducedSequence(ValueError):
    """full_reduce requires a reduced generator sequence."""


class NonTermination(RuntimeError):
    """Step budget exhausted or a monotone measure failed to move."""


@dataclass(frozen=True)
class MultiplierExp:
    """Exponents of one generator's initial and separants on the left."""

    initial: int = 0
    sep_plus: int = 0
    sep_minus: int = 0


@dataclass(frozen=True, eq=False)
class CertTerm:
    """One right-hand-side term: coeff * D_tuple(generator).

    dtuple None means the plain generator (no bracket applied).
    """

    coeff: Polynomial
    gen: int
    dtuple: DTuple | None


@dataclass(frozen=True, eq=False)
class ReductionCertificate:
    alg: object
    input: Polynomial
    remainder: Polynomial
    generators: tuple
    multipliers: tuple
    terms: tuple


def _check_generators(alg, lam):
    lam = tuple(lam)
    if not lam:
        raise ValueError("empty generator sequence")
    for f in lam:
        if f.alg != alg:
            raise ValueError("generator over a different algebra")
        if f.is_constant():
            raise ValueError("constant generator")
    return lam


def is_partially_reduced(alg, g, lam, max_gap=DEFAULT_MAX_GAP):
    """No variable of g lies in L+(l+(f)) or L-(l-(f)) for f in lam."""
    lam = _check_generators(alg, lam)
    for v in g.variables():
        for f in lam:
            if is_member(alg, f.leader(PLUS), v, PLUS, max_gap):
                return False
            if is_member(alg, f.leader(MINUS), v, MINUS, max_gap):
                return False
    return True


def is_reduced(alg, g, lam, max_gap=DEFAULT_MAX_GAP):
    """Partially reduced, and each upper leader of a generator appears in
    g only below that generator's leader degree."""
    lam = _check_generators(alg, lam)
    if not is_partially_reduced(alg, g, lam, max_gap):
        return False
    for f in lam:
        if g.degree_in(f.leader(PLUS)) >= f.leader_degree(PLUS):
            return False
    return True


def is_reduced_sequence(alg, lam, max_gap=DEFAULT_MAX_GAP):
    """Each generator is reduced with respect to all the others."""
    lam = _check_generators(alg, lam)
    for i, g in enumerate(lam):
        rest = lam[:i] + lam[i + 1 :]
        if rest and not is_reduced(alg, g, rest, max_gap):
            return False
    return True


class _Reducer:
    """Mutable reduction state preserving the certificate identity

    (prod multipliers) * input = g + sum(term coeffs * D-terms).
    """

    def __init__(self, alg, g, lam, max_gap, max_steps):
        self.alg = alg
        self.input = g
        self.g = g
        self.lam = lam
        self.max_gap = max_gap
        self.max_steps = max_steps
        self.steps = 0
        self.exps = [[0, 0, 0] for _ in lam]  # initial, sep+, sep-
        self.terms = []  # [coeff, gen index, DTuple | None]

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise NonTermination("step limit %d exceeded" % self.max_steps)

    def _mul_terms(self, p):
        self.terms = [[t[0] * p, t[1], t[2]] for t in self.terms]

    def _find_offender(self, sign):
        """Largest (sign "+") / smallest offending variable with the
        smallest-upper-rank matching generator and a verified witness."""
        variables = sorted(
            self.g.variables(),
            key=lambda b: order_key(self.alg, b),
            reverse=sign == PLUS,
        )
        order = sorted(range(len(self.lam)), key=lambda i: self.lam[i].rank(PLUS))
        for v in variables:
            for fi in order:
                f = self.lam[fi]
                lf = f.leader(sign)
                if not is_member(self.alg, lf, v, sign, self.max_gap):
                    continue
                for t in iter_witnesses(self.alg, lf, v, sign, self.max_gap):
                    step = self._prepare(fi, v, t, sign)
                    if step is not None:
                        return step
                raise NonTermination(
                    "no witness tuple admits the separant decomposition"
                )
        return None

    def _prepare(self, fi, v, t, sign):
        """Validate D_t(f) = alpha * s * v + h for this witness tuple."""
        f = self.lam[fi]
        s = f.separant(sign)
        alpha = d_bracket(self.alg, f.leader(sign), t)[v]
        dtf = d_op(f, t)
        parts = dtf.expand_in(v)
        if set(parts) - {0, 1} or parts.get(1, Polynomial.zero(self.alg)) != alpha * s:
            return None
        h = parts.get(0, Polynomial.zero(self.alg))
        if v in s.variables() or v in h.variables():
            return None
        return fi, v, t, sign, s, alpha, h

    def _eliminate(self, step):
        fi, v, t, sign, s, alpha, h = step
        alg = self.alg
        parts = self.g.expand_in(v)
        r = max(parts)
        vpoly = Polynomial.var(alg, v)
        b = h * (Fraction(-1) / alpha)
        sv = s * vpoly
        new_g = Polynomial.zero(alg)
        coeff = Polynomial.zero(alg)
        for j, hj in parts.items():
            new_g = new_g + hj * s ** (r - j) * b**j
            if j >= 1:
                inner = Polynomial.zero(alg)
                for u in range(j):
                    inner = inner + sv**u * b ** (j - 1 - u)
                coeff = coeff + hj * s ** (r - j) * inner * (Fraction(1) / alpha)
        self._mul_terms(s**r)
        self.exps[fi][1 if sign == PLUS else 2] += r
        self.terms.append([coeff, fi, t])
        self.g = new_g

    def run_pass(self, sign):
        """Eliminate offenders of one sign until none remain."""
        acted = False
        last_key = None
        while True:
            if self.g.is_constant():
                return acted
            step = self._find_offender(sign)
            if step is None:
                return acted
            self._tick()
            key = order_key(self.alg, step[1])
            if last_key is not None:
                moved = key < last_key if sign == PLUS else key > last_key
                if not moved:
                    raise NonTermination("offending variable failed to move")
            last_key = key
            self._eliminate(step)
            acted = True

    def partial_fixpoint(self):
        while True:
            acted = self.run_pass(PLUS)
            acted = self.run_pass(MINUS) or acted
            if not acted:
                return

    def pseudo_divide(self, fi):
        """Clear powers of the generator's upper leader down below its
        leader degree, multiplying by the initial as needed."""
        f = self.lam[fi]
        L = f.leader(PLUS)
        d = f.leader_degree(PLUS)
        init = f.initial(PLUS)
        lpoly = Polynomial.var(self.alg, L)
        while self.g.degree_in(L) >= d:
            self._tick()
            r = self.g.degree_in(L)
            hr = self.g.coefficient_of(L, r)
            self._mul_terms(init)
            self.exps[fi][0] += 1
            c = hr * lpoly ** (r - d)
            self.terms.append([c, fi, None])
            self.g = init * self.g - c * f
            if self.g.degree_in(L) >= r and not self.g.is_zero():
                raise NonTermination("pseudo-division failed to lower degree")

    def certificate(self):
        return ReductionCertificate(
            alg=self.alg,
            input=self.input,
            remainder=self.g,
            generators=tuple(self.lam),
            multipliers=tuple(MultiplierExp(*ex) for ex in self.exps),
            terms=tuple(CertTerm(t[0], t[1], t[2]) for t in self.terms),
        )


def partial_reduce(alg, g, lam, max_gap=DEFAULT_MAX_GAP, max_steps=DEFAULT_MAX_STEPS):
    """Partially reduce g modulo lam; returns (remainder, certificate)."""
    lam = _check_generators(alg, lam)
    red = _Reducer(alg, g, lam, max_gap, max_steps)
    red.partial_fixpoint()
    cert = red.certificate()
    return red.g, cert


def full_reduce(alg, g, lam, max_gap=DEFAULT_MAX_GAP, max_steps=DEFAULT_MAX_STEPS):
    """Fully reduce g modulo a reduced sequence lam."""
    lam = _check_generators(alg, lam)
    if not is_reduced_sequence(alg, lam, max_gap):
        raise NotReducedSequence("generators do not form a reduced sequence")
    red = _Reducer(alg, g, lam, max_gap, max_steps)
    order = sorted(range(len(lam)), key=lambda i: lam[i].rank(PLUS), reverse=True)
    for _ in range(len(lam) + 2):
        red.partial_fixpoint()
        for fi in order:
            red.pseudo_divide(fi)
            red.partial_fixpoint()
        if is_reduced(alg, red.g, lam, max_gap):
            return red.g, red.certificate()
    raise NonTermination("reduction did not reach a reduced remainder")


def verify_certificate(alg, cert):
    """Recompute both sides of the certificate identity from scratch."""
    if cert.alg != alg:
        return False
    lhs = cert.input
    for f, ex in zip(cert.generators, cert.multipliers):
        if ex.initial:
            lhs = lhs * f.initial(PLUS) ** ex.initial
        if ex.sep_plus:
            lhs = lhs * f.separant(PLUS) ** ex.sep_plus
        if ex.sep_minus:
            lhs = lhs * f.separant(MINUS) ** ex.sep_minus
    rhs = cert.remainder
    for term in cert.terms:
        f = cert.generators[term.gen]
        body = d_op(f, term.dtuple) if term.dtuple is not None else f
        rhs = rhs + term.coeff * body
    return lhs == rhs
