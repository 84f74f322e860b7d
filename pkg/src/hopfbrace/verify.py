"""Machine verification of every identity and proposition in scope.

Each identity is checked two ways:

* exhaustively on all basis tuples, via vectorized Cayley-table index
  arithmetic (sound and complete for multilinear identities, since the
  comultiplication is diagonal on the basis);
* on random sparse rational combinations, evaluated through the element
  arithmetic with Sweedler legs expanded over supports, as a regression
  check on the linear-extension code itself.

Identities that collapse to tautologies on group-likes (the coalgebra
compatibilities) only run at the element level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import CrossCheckError
from .hopf import HopfBrace, Tensor2, random_element
from .series import (gamma_series, hopf_center, left_series,
                     relative_commutator, right_series, socle_annihilator,
                     star_closure_subbrace)
from .subobjects import generated_subbrace

DEFAULT_SEED = 7349
DEFAULT_SAMPLES = 32


@dataclass
class Violation:
    identity: str
    layer: str                     # "basis" | "random" | "proposition"
    witness: object

    def __str__(self):
        return f"{self.identity} [{self.layer}] witness={self.witness}"


@dataclass
class CheckReport:
    suite: str
    label: str
    basis_checks: int = 0
    random_checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def extend(self, other: "CheckReport") -> None:
        self.basis_checks += other.basis_checks
        self.random_checks += other.random_checks
        self.violations.extend(other.violations)


# ------------------------------------------------------- identity registry

class Identity:
    """One named identity: a basis-level evaluator on index arrays and an
    element-level evaluator on full elements."""

    __slots__ = ("name", "arity", "set_eval", "elem_eval")

    def __init__(self, name, arity, set_eval, elem_eval):
        self.name = name
        self.arity = arity
        self.set_eval = set_eval      # None for element-only identities
        self.elem_eval = elem_eval


def _one(H, scalar):
    return H.one().scale(scalar)


def _sum(H, parts):
    out = H.zero()
    for coeff, element in parts:
        out = out + element.scale(coeff)
    return out


def _tensor(H, parts):
    f = H.field
    entries = {}
    for coeff, key in parts:
        entries[key] = f.add(entries.get(key, f.zero), coeff)
    return Tensor2({k: v for k, v in entries.items() if v != f.zero},
                   f, _clean=True)


def _identities(base):
    """Build the registry for one skew brace (closes over its tables)."""
    d, o = base.dot.table, base.circ.table
    si, ti = base.dot.inverses, base.circ.inverses
    lam, st = base.lambda_table, base.star_table
    e = base.identity

    def compat_set(a, b, c):
        return o[a, d[b, c]], d[d[o[a, b], si[a]], o[a, c]]

    def compat_elem(H, a, b, c):
        lhs = H.circ(a, H.dot(b, c))
        rhs = _sum(H, ((cg, H.dot(H.dot(H.circ(H.basis(g), b),
                                        H.basis(int(si[g]))),
                                  H.circ(H.basis(g), c)))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def lemma1_set(a, x, y):
        return st[a, d[x, y]], d[d[d[st[a, x], x], st[a, y]], si[x]]

    def lemma1_elem(H, a, x, y):
        lhs = H.star(a, H.dot(x, y))
        parts = []
        for g, cg in a.coeffs.items():
            dg = H.basis(g)
            for h, ch in x.coeffs.items():
                dh = H.basis(h)
                val = H.dot(H.dot(H.dot(H.star(dg, dh), dh), H.star(dg, y)),
                            H.antipode_dot(dh))
                parts.append((H.field.mul(cg, ch), val))
        return lhs, _sum(H, parts)

    def lemma2_set(x, y, a):
        return st[o[x, y], a], d[d[st[x, st[y, a]], st[y, a]], st[x, a]]

    def lemma2_elem(H, x, y, a):
        lhs = H.star(H.circ(x, y), a)
        f = H.field
        parts = []
        for g, cg in x.coeffs.items():
            dg = H.basis(g)
            for h, ch in y.coeffs.items():
                dh = H.basis(h)
                for k, ck in a.coeffs.items():
                    dk = H.basis(k)
                    inner = H.star(dh, dk)
                    val = H.dot(H.dot(H.star(dg, inner), inner),
                                H.star(dg, dk))
                    parts.append((f.mul(f.mul(cg, ch), ck), val))
        return lhs, _sum(H, parts)

    def lemma3_set(a, x, y):
        return lam[a, st[x, y]], st[o[o[a, x], ti[a]], lam[a, y]]

    def lemma3_elem(H, a, x, y):
        lhs = H.act(a, H.star(x, y))
        rhs = _sum(H, ((cg, H.star(H.circ(H.circ(H.basis(g), x),
                                          H.basis(int(ti[g]))),
                                   H.act(H.basis(g), y)))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def lemma4_set(a, x):
        return o[o[a, x], ti[a]], d[d[a, lam[a, d[x, st[x, ti[a]]]]], si[a]]

    def lemma4_elem(H, a, x):
        f = H.field
        lhs = _sum(H, ((cg, H.circ(H.circ(H.basis(g), x),
                                   H.basis(int(ti[g]))))
                       for g, cg in a.coeffs.items()))
        parts = []
        for g, cg in a.coeffs.items():
            dg, tg, sg = H.basis(g), H.basis(int(ti[g])), H.basis(int(si[g]))
            for h, ch in x.coeffs.items():
                dh = H.basis(h)
                val = H.dot(H.dot(dg, H.act(dg, H.dot(dh, H.star(dh, tg)))),
                            sg)
                parts.append((f.mul(cg, ch), val))
        return lhs, _sum(H, parts)

    def circ_via_act_elem(H, a, b):
        lhs = H.circ(a, b)
        rhs = _sum(H, ((cg, H.dot(H.basis(g), H.act(H.basis(g), b)))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def dot_via_act_elem(H, a, b):
        lhs = H.dot(a, b)
        rhs = _sum(H, ((cg, H.circ(H.basis(g),
                                   H.act(H.basis(int(ti[g])), b)))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def antipode_via_act_elem(H, a):
        lhs = H.antipode_dot(a)
        rhs = _sum(H, ((cg, H.act(H.basis(g), H.basis(int(ti[g]))))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def t_via_act_elem(H, b):
        lhs = H.antipode_circ(b)
        rhs = _sum(H, ((cg, H.antipode_dot(H.act(H.basis(int(ti[g])),
                                                 H.basis(g))))
                       for g, cg in b.coeffs.items()))
        return lhs, rhs

    def act_unit_elem(H, a):
        return H.act(a, H.one()), _one(H, H.counit(a))

    def act_mult_elem(H, a, b, c):
        lhs = H.act(a, H.dot(b, c))
        rhs = _sum(H, ((cg, H.dot(H.act(H.basis(g), b),
                                  H.act(H.basis(g), c)))
                       for g, cg in a.coeffs.items()))
        return lhs, rhs

    def act_module_elem(H, a, b, c):
        return H.act(H.circ(a, b), c), H.act(a, H.act(b, c))

    def act_antipode_elem(H, a, b):
        return H.antipode_dot(H.act(a, b)), H.act(a, H.antipode_dot(b))

    def act_comult_elem(H, a, b):
        f = H.field
        lhs = H.comultiply(H.act(a, b))
        parts = []
        for g, cg in a.coeffs.items():
            for h, ch in b.coeffs.items():
                k = int(lam[g, h])
                parts.append((f.mul(cg, ch), (k, k)))
        return lhs, _tensor(H, parts)

    def act_counit_elem(H, a, b):
        return H.counit(H.act(a, b)), H.field.mul(H.counit(a), H.counit(b))

    def star_comult_elem(H, a, b):
        f = H.field
        lhs = H.comultiply(H.star(a, b))
        parts = []
        for g, cg in a.coeffs.items():
            for h, ch in b.coeffs.items():
                k = int(st[g, h])
                parts.append((f.mul(cg, ch), (k, k)))
        return lhs, _tensor(H, parts)

    def star_counit_elem(H, a, b):
        return H.counit(H.star(a, b)), H.field.mul(H.counit(a), H.counit(b))

    def star_via_act_elem(H, a, b):
        lhs = H.star(a, b)
        rhs = _sum(H, ((ch, H.dot(H.act(a, H.basis(h)),
                                  H.basis(int(si[h]))))
                       for h, ch in b.coeffs.items()))
        return lhs, rhs

    def star_full_elem(H, a, b):
        f = H.field
        lhs = H.star(a, b)
        parts = []
        for g, cg in a.coeffs.items():
            sg, dg = H.basis(int(si[g])), H.basis(g)
            for h, ch in b.coeffs.items():
                val = H.dot(H.dot(sg, H.circ(dg, H.basis(h))),
                            H.basis(int(si[h])))
                parts.append((f.mul(cg, ch), val))
        return lhs, _sum(H, parts)

    axiom = [Identity("compatibility", 3, compat_set, compat_elem)]
    lemma = {
        1: Identity("star-lemma-1", 3, lemma1_set, lemma1_elem),
        2: Identity("star-lemma-2", 3, lemma2_set, lemma2_elem),
        3: Identity("star-lemma-3", 3, lemma3_set, lemma3_elem),
        4: Identity("star-lemma-4", 2, lemma4_set, lemma4_elem),
    }
    structure = [
        Identity("circ-via-action", 2,
                 lambda a, b: (o[a, b], d[a, lam[a, b]]), circ_via_act_elem),
        Identity("dot-via-action", 2,
                 lambda a, b: (d[a, b], o[a, lam[ti[a], b]]), dot_via_act_elem),
        Identity("antipode-via-action", 1,
                 lambda a: (si[a], lam[a, ti[a]]), antipode_via_act_elem),
        Identity("t-via-action", 1,
                 lambda b: (ti[b], si[lam[ti[b], b]]), t_via_act_elem),
        Identity("action-fixes-unit", 1,
                 lambda a: (lam[a, np.full_like(a, e)], np.full_like(a, e)),
                 act_unit_elem),
        Identity("action-multiplicative", 3,
                 lambda a, b, c: (lam[a, d[b, c]], d[lam[a, b], lam[a, c]]),
                 act_mult_elem),
        Identity("action-module", 3,
                 lambda a, b, c: (lam[o[a, b], c], lam[a, lam[b, c]]),
                 act_module_elem),
        Identity("action-antipode-compat", 2,
                 lambda a, b: (si[lam[a, b]], lam[a, si[b]]),
                 act_antipode_elem),
        Identity("action-comultiplicative", 2, None, act_comult_elem),
        Identity("action-counit", 2, None, act_counit_elem),
        Identity("star-comultiplicative", 2, None, star_comult_elem),
        Identity("star-counit", 2, None, star_counit_elem),
        Identity("star-via-action", 2,
                 lambda a, b: (st[a, b], d[lam[a, b], si[b]]),
                 star_via_act_elem),
        Identity("star-via-antipodes", 2,
                 lambda a, b: (st[a, b], d[d[si[a], o[a, b]], si[b]]),
                 star_full_elem),
    ]
    return axiom, lemma, structure


# ------------------------------------------------------------ check driver

def _index_grids(n, arity):
    grids = []
    for pos in range(arity):
        shape = [1] * arity
        shape[pos] = n
        grids.append(np.arange(n).reshape(shape))
    return grids


def _check_identity(H: HopfBrace, ident: Identity, rng, samples: int,
                    report: CheckReport) -> None:
    n = H.dim
    if ident.set_eval is not None:
        grids = _index_grids(n, ident.arity)
        lhs, rhs = ident.set_eval(*grids)
        full = (n,) * ident.arity
        lhs = np.broadcast_to(lhs, full)
        rhs = np.broadcast_to(rhs, full)
        report.basis_checks += lhs.size
        mism = lhs != rhs
        if mism.any():
            witness = tuple(int(v) for v in np.argwhere(mism)[0])
            report.violations.append(
                Violation(ident.name, "basis", witness))
    for _ in range(samples):
        args = [random_element(H, rng) for _ in range(ident.arity)]
        lhs, rhs = ident.elem_eval(H, *args)
        report.random_checks += 1
        if lhs != rhs:
            report.violations.append(
                Violation(ident.name, "random",
                          tuple(repr(a) for a in args)))


def _rng(seed):
    return random.Random(DEFAULT_SEED if seed is None else seed)


def verify_hopf_brace_axiom(H: HopfBrace, samples: int = DEFAULT_SAMPLES,
                            seed: int | None = None,
                            label: str = "") -> CheckReport:
    """The two-products compatibility law, on all basis triples and on
    random rational combinations."""
    report = CheckReport("axioms", label or repr(H))
    axiom, _, _ = _identities(H.base)
    rng = _rng(seed)
    for ident in axiom:
        _check_identity(H, ident, rng, samples, report)
    return report


def verify_star_lemma(H: HopfBrace, clause: int,
                      samples: int = DEFAULT_SAMPLES,
                      seed: int | None = None, label: str = "") -> CheckReport:
    """One clause (1..4) of the star-product lemma."""
    if clause not in (1, 2, 3, 4):
        raise ValueError("clause must be 1, 2, 3 or 4")
    report = CheckReport("lemma", label or repr(H))
    _, lemma, _ = _identities(H.base)
    _check_identity(H, lemma[clause], _rng(seed), samples, report)
    return report


def verify_structure_identities(H: HopfBrace, samples: int = DEFAULT_SAMPLES,
                                seed: int | None = None,
                                label: str = "") -> CheckReport:
    """The derived structural equalities: both products through the
    action, both antipodes through the action, module-algebra laws and
    the coalgebra compatibility of action and star product."""
    report = CheckReport("structure", label or repr(H))
    _, _, structure = _identities(H.base)
    rng = _rng(seed)
    for ident in structure:
        _check_identity(H, ident, rng, samples, report)
    return report


# ------------------------------------------------------ proposition checks

def _prop(report, name, ok, witness=None):
    report.basis_checks += 1
    if not ok:
        report.violations.append(Violation(name, "proposition", witness))


def verify_propositions(H: HopfBrace, max_n: int = 10,
                        label: str = "") -> CheckReport:
    """Every proved structural statement, checked on one brace: series
    normality/strongness, descending chains, the gamma/Huq equality, the
    normality and inclusion facts for socle and annihilator, and the
    relative-commutator facts."""
    report = CheckReport("propositions", label or repr(H))
    base = H.base

    left = left_series(H, max_n)
    for k, term in enumerate(left.terms):
        _prop(report, f"left-term-{k + 1}-strong", term.is_strong(),
              term.carrier)

    right = right_series(H, max_n)
    for k, term in enumerate(right.terms):
        direct, via = term.is_normal(), term.is_normal_via_star()
        _prop(report, f"right-term-{k + 1}-normal", direct, term.carrier)
        _prop(report, f"right-term-{k + 1}-normality-agreement",
              direct == via, term.carrier)
        if k:
            _prop(report, f"right-chain-{k + 1}-descending",
                  right.terms[k - 1].contains(term), term.carrier)

    try:
        gamma = gamma_series(H, max_n)
    except CrossCheckError as exc:
        report.violations.append(Violation("gamma-huq-equality",
                                           "proposition", str(exc)))
        gamma = None
    if gamma is not None:
        for k, term in enumerate(gamma.terms):
            _prop(report, f"gamma-term-{k + 1}-normal", term.is_normal(),
                  term.carrier)
            if k:
                _prop(report, f"gamma-chain-{k + 1}-descending",
                      gamma.terms[k - 1].contains(term), term.carrier)

    hz = hopf_center(H)
    _prop(report, "hopf-center-strong", hz.is_strong(), hz.carrier)
    _prop(report, "hopf-center-commutes",
          all(base.dot.mul(g, x) == base.dot.mul(x, g)
              for g in hz.carrier for x in range(H.dim)), hz.carrier)

    if H.field.characteristic == 0:
        soc = socle_annihilator(H)
        _prop(report, "socle-normal", soc.socle.is_normal(),
              soc.socle.carrier)
        _prop(report, "annihilator-normal", soc.annihilator.is_normal(),
              soc.annihilator.carrier)
        _prop(report, "annihilator-inside-socle",
              soc.socle.contains(soc.annihilator))
        _prop(report, "socle-span-inside-space",
              soc.socle_space.contains_space(soc.socle_span))
        _prop(report, "annihilator-span-inside-space",
              soc.annihilator_space.contains_space(soc.annihilator_span))
        _prop(report, "antipodes-agree-on-socle",
              all(base.dot.inv(g) == base.circ.inverses[g]
                  for g in soc.socle.carrier), soc.socle.carrier)
        _prop(report, "socle-circ-closed",
              all(base.circ.mul(g, h) in set(soc.socle.carrier)
                  for g in soc.socle.carrier for h in soc.socle.carrier))
        e = base.identity
        _prop(report, "annihilator-star-absorbs-products",
              all(base.star_set(a, base.dot.mul(g, h)) == e
                  for g in soc.annihilator.carrier
                  for h in soc.annihilator.carrier
                  for a in range(H.dim)))

    for k, term in enumerate(right.terms):
        rel = relative_commutator(term, H)
        _prop(report, f"relative-commutator-{k + 1}-normal",
              rel.is_normal(), rel.carrier)
        _prop(report, f"relative-commutator-{k + 1}-inside-argument",
              term.contains(rel), rel.carrier)

    star_sub = star_closure_subbrace(H)
    _prop(report, "star-closure-normal", star_sub.is_normal(),
          star_sub.carrier)
    whole = generated_subbrace(H, range(H.dim))
    _prop(report, "star-closure-equals-relative-commutator",
          relative_commutator(whole, H).carrier == star_sub.carrier)
    _prop(report, "star-closure-equals-second-right-term",
          len(right.terms) < 2
          or right.terms[1].carrier == star_sub.carrier)
    _prop(report, "left-and-right-second-terms-agree",
          len(left.terms) < 2 or len(right.terms) < 2
          or left.terms[1].carrier == right.terms[1].carrier)
    return report


SUITES = ("axioms", "lemma", "structure", "propositions")


def verify_suite(H: HopfBrace, suite: str, samples: int = DEFAULT_SAMPLES,
                 seed: int | None = None, label: str = "",
                 max_n: int = 10) -> CheckReport:
    if suite == "axioms":
        return verify_hopf_brace_axiom(H, samples, seed, label)
    if suite == "lemma":
        report = CheckReport("lemma", label or repr(H))
        for clause in (1, 2, 3, 4):
            report.extend(verify_star_lemma(H, clause, samples, seed, label))
        return report
    if suite == "structure":
        return verify_structure_identities(H, samples, seed, label)
    if suite == "propositions":
        return verify_propositions(H, max_n, label)
    raise ValueError(f"unknown suite {suite!r}; pick one of {SUITES}")
