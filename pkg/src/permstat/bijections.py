"""Sign-reversing involutions and bijections behind the cancellation identities.

Each map comes with a checker that runs it over its whole domain and reports
whether the claimed properties hold: involution, stays in the domain,
weights cancel (or obey the stated relation).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Tuple

from .families import FamilySpec, WEIGHTS, family
from .perm import Permutation, apply_transposition, flip, statistics
from .poly import MultiPoly, S, T, const, var, x, y
from .signed import (SignedPermutation, anexc_b_set, exc_b_set, insert, negate_all, restrict,
                     swap_positions)


@dataclass
class MatchReport:
    """Outcome of running an involution (or a bijection) over its domain."""

    name: str
    domain_size: int
    pairs: List[tuple] = field(default_factory=list)
    fixed_points: List[object] = field(default_factory=list)
    escaped: List[object] = field(default_factory=list)
    cancels: bool = True
    same_image: bool = True

    @property
    def ok(self) -> bool:
        covered = 2 * len(self.pairs) + len(self.fixed_points)
        return (self.cancels and self.same_image and not self.fixed_points
                and not self.escaped and covered == self.domain_size)

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return (f"{self.name}: {status} (domain {self.domain_size}, pairs {len(self.pairs)}, "
                f"fixed {len(self.fixed_points)}, escaped {len(self.escaped)})")


@dataclass
class MapReport:
    """Outcome of checking a map domain -> codomain with a weight relation."""

    name: str
    domain_size: int
    codomain_size: int
    injective: bool
    onto: bool
    relation_holds: bool
    failures: List[object] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.injective and self.onto and self.relation_holds and not self.failures

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return (f"{self.name}: {status} (domain {self.domain_size}, "
                f"codomain {self.codomain_size})")


def check_involution(name: str, domain: Iterable, phi: Callable, weight: Callable,
                     image_key: Callable = None) -> MatchReport:
    elements = list(domain)
    members = set(elements)
    report = MatchReport(name, len(elements))
    done = set()
    for sigma in elements:
        if sigma in done:
            continue
        tau = phi(sigma)
        if tau == sigma:
            report.fixed_points.append(sigma)
            done.add(sigma)
            continue
        if tau not in members or phi(tau) != sigma:
            report.escaped.append(sigma)
            done.add(sigma)
            continue
        done.update((sigma, tau))
        report.pairs.append((sigma, tau))
        if not (weight(sigma) + weight(tau)).is_zero():
            report.cancels = False
        if image_key is not None and image_key(sigma) != image_key(tau):
            report.same_image = False
    return report


def check_map(name: str, domain: Iterable, codomain: Iterable, fn: Callable,
              relation: Callable[[object, object], bool]) -> MapReport:
    elements = list(domain)
    target = set(codomain)
    images = {}
    failures = []
    for sigma in elements:
        tau = fn(sigma)
        if tau not in target or not relation(sigma, tau):
            failures.append(sigma)
        images.setdefault(tau, []).append(sigma)
    injective = all(len(v) == 1 for v in images.values())
    onto = set(images) == target
    return MapReport(name, len(elements), len(target), injective, onto,
                     not failures, failures)


# -- type A ------------------------------------------------------------------

def _is_u(sigma: Permutation, j: int) -> bool:
    w = sigma.word
    n = len(w)
    if j == 1:
        return w == tuple(range(2, n + 1)) + (1,)
    return w[1] == 1 and w[0] != 2


def _check_e(sigma: Permutation) -> int:
    n = sigma.n
    if n < 3:
        raise ValueError("the involution is defined for n >= 3")
    j = sigma(n)
    if not sigma.is_derangement() or not 1 <= j <= n - 1 or _is_u(sigma, j):
        raise ValueError(f"{sigma} is not in E_(n,j)")
    return j


def i_sigma(sigma: Permutation) -> int:
    """Smallest i with sigma(i) != i + 1."""
    _check_e(sigma)
    for i, v in enumerate(sigma.word, 1):
        if v != i + 1:
            return i
    raise AssertionError("unreachable for a derangement")


def wpsr_phi(sigma: Permutation) -> Permutation:
    i = i_sigma(sigma)
    return apply_transposition(sigma(i), sigma(i + 1), sigma)


def psi_reduce(sigma: Permutation) -> Permutation:
    """U_(n,j) -> D_(n-1,j-1) for j >= 2: drop the leading 1 at position 2, shift down."""
    n = sigma.n
    j = sigma(n) if n else 0
    if j < 2 or not sigma.is_derangement() or not _is_u(sigma, j):
        raise ValueError(f"{sigma} is not in U_(n,j) with j >= 2")
    w = sigma.word
    return Permutation([w[0] - 1] + [v - 1 for v in w[2:]], check=False)


def shifted_weight(sigma: Permutation, my: int, mx: int = 0) -> MultiPoly:
    """(-1)^cyc * prod_{RLMv} x_(i+mx) * prod_{EXCv} y_(i+my)."""
    st = statistics(sigma)
    out = const(-1 if st.cyc % 2 else 1)
    for i in st.rlm_v:
        out = out * x(i + mx)
    for i in st.exc_v:
        out = out * y(i + my)
    return out


def _weight(name: str) -> Callable:
    return WEIGHTS[name]


def wpsr_report(n: int, j: int) -> MatchReport:
    w = _weight("sign_rlmv_excv")
    domain = family("Enj", n, j)

    def preserved(sigma):
        a, b = statistics(sigma), statistics(wpsr_phi(sigma))
        return a.rlm_v == b.rlm_v and a.exc_v == b.exc_v

    report = check_involution(f"wpsr_phi E({n},{j})", domain, wpsr_phi, w)
    if not all(preserved(s) for s in domain):
        report.cancels = False
    return report


def psi_report(n: int, j: int) -> MapReport:
    """Bijection U_(n,j) -> D_(n-1,j-1) with the element-wise law
    w_sigma(x, y) = x_1 * w_sigma'(shift(x), shift(y)).

    psi deletes the letter 1 and lowers every other value by one, so both the
    RLM and the excedance value sets move up by one index; the x_j form of the
    law only survives after summing over the family (see :func:`psi_sum_law`).
    """
    def law(sigma, tau):
        return shifted_weight(sigma, 0) == x(1) * shifted_weight(tau, 1, 1)

    return check_map(f"psi_reduce U({n},{j})->D({n - 1},{j - 1})",
                     family("Unj", n, j), family("Dnj", n - 1, j - 1), psi_reduce, law)


def psi_sum_law(n: int, j: int) -> bool:
    """w(U_(n,j))(x, y) == x_j * w(D_(n-1,j-1))(x, shift(y))."""
    lhs = sum((shifted_weight(s, 0) for s in family("Unj", n, j)), MultiPoly())
    rhs = sum((shifted_weight(t, 1) for t in family("Dnj", n - 1, j - 1)), MultiPoly())
    return lhs == x(j) * rhs


def psi_xj_pointwise_failures(n: int, j: int) -> List[Permutation]:
    """Elements of U_(n,j) where w_sigma != x_j * w_sigma'(x, shift(y))."""
    return [s for s in family("Unj", n, j)
            if shifted_weight(s, 0) != x(j) * shifted_weight(psi_reduce(s), 1)]


def _relabel_r(p: MultiPoly, n: int) -> MultiPoly:
    binding = {}
    for v in p.variables():
        if v.family in ("x", "y") and v.index:
            binding[v] = MultiPoly.from_var(var(v.family, n + 1 - v.index))
    return p.substitute(binding) if binding else p


def flip_report(n: int, j: int) -> MapReport:
    wi = _weight("sign_rlmi_exci")
    wv = _weight("sign_rlmv_excv")

    def law(sigma, tau):
        return wi(sigma) == _relabel_r(wv(tau), n)

    return check_map(f"flip Dtilde({n},{j})->D({n},{j})", family("Dtilde_nj", n, j),
                     family("Dnj", n, j), flip, law)


# -- type B, excedance side --------------------------------------------------

def _bw(name: str) -> Callable:
    return WEIGHTS[name]


def _swap_last_two(sigma: SignedPermutation) -> SignedPermutation:
    return swap_positions(sigma, sigma.n - 1, sigma.n)


def bplus_reports(n: int) -> List[object]:
    """Recursion maps on the all-positive part (n >= 2)."""
    w = _bw("b_exc")
    plus = family("Bn_plus", n)
    b1 = [s for s in plus if s(n - 1) != n and s(n) != n]
    b2 = [s for s in plus if s(n) == n]
    b3 = [s for s in plus if s(n - 1) == n]
    smaller = family("Bn_plus", n - 1)
    xn1 = x(n - 1)

    def drop_last(s):
        return restrict(s, n)

    return [
        check_involution(f"B+ swap on B'_{n}", b1, _swap_last_two, w),
        check_map(f"B+ drop-last B''_{n}->B+_{n - 1}", b2, smaller, drop_last,
                  lambda s, t: w(s) == -w(t)),
        check_map(f"B+ swap-then-drop B'''_{n}->B+_{n - 1}", b3, smaller,
                  lambda s: drop_last(_swap_last_two(s)),
                  lambda s, t: w(s) == xn1 * w(t)),
    ]


def bminus_report(n: int) -> MapReport:
    """negate_all: B+ -> B-, anti-excedances become excedances."""
    return check_map(f"negate_all B+_{n}->B-_{n}", family("Bn_plus", n), family("Bn_minus", n),
                     negate_all,
                     lambda s, t: anexc_b_set(s.window) == exc_b_set(t.window))


def mixed_matching(n: int) -> Dict[str, List[Tuple[SignedPermutation, SignedPermutation]]]:
    """Perfect matching of the mixed-sign part of B_n, split by insertion case.

    Cases 1 and 1' pair by swapping the last two window entries; cases 2 and 2'
    insert the same letter at the same position into both members of each pair
    of the matching one size down.
    """
    cases: Dict[str, List[Tuple[SignedPermutation, SignedPermutation]]] = {
        "1": [], "1prime": [], "2": [], "2prime": []}
    if n < 2:
        return cases
    for key, kind in (("1", "Cn_1"), ("1prime", "Cn_1prime")):
        seen = set()
        for sigma in family(kind, n):
            if sigma in seen:
                continue
            tau = _swap_last_two(sigma)
            seen.update((sigma, tau))
            cases[key].append((sigma, tau))
    lower = [p for ps in mixed_matching(n - 1).values() for p in ps]
    for key, a in (("2", -n), ("2prime", n)):
        for tau, tau2 in lower:
            for k in range(1, n + 1):
                cases[key].append((insert(a, k, tau), insert(a, k, tau2)))
    return cases


def _pairs_report(name: str, domain: List, pairs: List[tuple], weight: Callable) -> MatchReport:
    report = MatchReport(name, len(domain))
    members = set(domain)
    covered = set()
    for s, t in pairs:
        if s == t:
            report.fixed_points.append(s)
            continue
        if s not in members or t not in members or s in covered or t in covered:
            report.escaped.append((s, t))
            continue
        covered.update((s, t))
        report.pairs.append((s, t))
        if not (weight(s) + weight(t)).is_zero():
            report.cancels = False
        if s.image() != t.image():
            report.same_image = False
    return report


def typeb_matchings(n: int) -> Dict[str, object]:
    """All type-B excedance-side reports for size n."""
    w = _bw("b_exc")
    out: Dict[str, object] = {}
    if n >= 2:
        for r in bplus_reports(n):
            out[r.name] = r
    r = bminus_report(n)
    out[r.name] = r
    cases = mixed_matching(n)
    kinds = {"1": "Cn_1", "1prime": "Cn_1prime", "2": "Cn_2", "2prime": "Cn_2prime"}
    all_pairs = []
    for key, kind in kinds.items():
        dom = family(kind, n) if n >= 2 else []
        rep = _pairs_report(f"B+- case ({key}) n={n}", dom, cases[key], w)
        out[rep.name] = rep
        all_pairs.extend(cases[key])
    rep = _pairs_report(f"B+- matching n={n}", family("Bn_mixed", n), all_pairs, w)
    out[rep.name] = rep
    return out


# -- type B, right-to-left minima side ---------------------------------------

def rlmb_reports(n: int) -> List[object]:
    """Maps behind the recursion for the RLM_B polynomial (n >= 2)."""
    w = _bw("b_rlm")
    yn = y(n)
    stn = MultiPoly.from_var(S) * MultiPoly.from_var(T, n)
    full = family("Bn", n)
    smaller = family("Bn", n - 1)
    reports: List[object] = []

    b_last = [s for s in full if abs(s(n)) == n]
    for sign, factor in ((1, -yn), (-1, -stn)):
        dom = [s for s in b_last if s(n) == sign * n]
        reports.append(check_map(
            f"phi1 sigma(n)={'' if sign > 0 else '-'}{n}", dom, smaller,
            lambda s: restrict(s, n),
            lambda s, t, f=factor: w(s) == f * w(t)))

    rest = [s for s in full if abs(s(n)) != n]
    for k in range(1, (n - 1) // 2 + 1):
        dom = family("Cnk", n, k)
        reports.append(check_involution(
            f"C_{n}^{k} swap", dom, lambda s, k=k: swap_positions(s, 2 * k - 1, 2 * k), w))

    tail = [s for s in rest if abs(s(n - 1)) == n]
    if n % 2 == 0:
        for sign, factor in ((1, const(1)), (-1, stn)):
            dom = [s for s in tail if s(n - 1) == sign * n]
            reports.append(check_map(
                f"phi2 sigma(n-1)={'' if sign > 0 else '-'}{n}", dom, smaller,
                lambda s: restrict(s, n - 1),
                lambda s, t, f=factor: w(s) == f * w(t)))
    return reports


def rlmb_leftover(n: int) -> MultiPoly:
    """Sum of b_rlm weights over sigma with |sigma(n)| != n that are not cancelled
    by the C_n^k involutions (zero when n is odd)."""
    w = _bw("b_rlm")
    covered = set()
    for k in range(1, (n - 1) // 2 + 1):
        covered.update(family("Cnk", n, k))
    out = MultiPoly()
    for s in family("Bn", n):
        if abs(s(n)) != n and s not in covered:
            out = out + w(s)
    return out


def all_reports(n: int, typeb: bool = True) -> List[object]:
    """Every bijection report at size n, type A first."""
    out: List[object] = []
    for j in range(1, n):
        out.append(wpsr_report(n, j))
        if j >= 2:
            out.append(psi_report(n, j))
        out.append(flip_report(n, j))
    if typeb and n >= 1:
        out.extend(typeb_matchings(n).values())
        if n >= 2:
            out.extend(rlmb_reports(n))
    return out
