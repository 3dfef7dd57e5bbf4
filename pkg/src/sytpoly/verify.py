"""Exhaustive identity checks over all partitions up to a size bound.

Every check re-proves one statement by brute force and returns a report with
the number of cases run and any counterexamples.  Check names follow the
statements they verify so a failure points straight at the broken identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .binomial import (
    a_coefficients,
    binomial,
    eval_f_large,
    evaluate,
    dimension_via_mu_identity,
    fit_binomial_coefficients,
)
from .bijections import compute_p, compute_q, down_map, up_map
from .partitions import Partition, partitions_of
from .tableaux import (
    count_restricted,
    dimension_hook,
    enumerate_restricted,
    enumerate_syt,
    satisfies_condition,
)


@dataclass
class VerificationReport:
    check_name: str
    k_range: tuple[int, int]
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases_run > 0

    def case(self, ok: bool, **context) -> None:
        self.cases_run += 1
        if not ok:
            self.failures.append(context)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check_name,
            "k_range": list(self.k_range),
            "cases_run": self.cases_run,
            "status": "passed" if self.passed else "failed",
            "failures": self.failures[:20],
        }


Check = Callable[[int], VerificationReport]
REGISTRY: dict[str, Check] = {}


def check(name: str) -> Callable[[Check], Check]:
    def register(fn: Check) -> Check:
        REGISTRY[name] = fn
        return fn

    return register


def _all_partitions(max_k: int, min_k: int = 0):
    for k in range(min_k, max_k + 1):
        yield from partitions_of(k)


@check("transpose_involution")
def check_transpose(max_k: int) -> VerificationReport:
    rep = VerificationReport("transpose_involution", (0, max_k))
    for lam in _all_partitions(max_k):
        t = lam.transpose()
        ok = t.transpose() == lam
        if lam.parts:
            ok = ok and t.length == lam.parts[0] and t.parts[0] == lam.length
        rep.case(ok, partition=lam.parts)
    return rep


@check("corner_removal")
def check_corners(max_k: int) -> VerificationReport:
    rep = VerificationReport("corner_removal", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        corners = lam.inner_corners()
        removed = {lam.remove_corner(v) for v in corners}
        ok = len(corners) == len(set(lam.parts))
        ok = ok and all(mu.weight == lam.weight - 1 for mu in removed)
        below = {
            mu for mu in partitions_of(lam.weight - 1)
            if len(mu.parts) <= lam.length
            and all(mu.parts[i] <= lam.parts[i] for i in range(len(mu.parts)))
        }
        ok = ok and removed == below
        rep.case(ok, partition=lam.parts)
    return rep


@check("thm_hookform")
def check_hook_formula(max_k: int) -> VerificationReport:
    rep = VerificationReport("thm_hookform", (0, max_k))
    for lam in _all_partitions(max_k):
        rep.case(
            len(enumerate_syt(lam)) == dimension_hook(lam),
            partition=lam.parts,
            expected=dimension_hook(lam),
            actual=len(enumerate_syt(lam)),
        )
    return rep


@check("thm_branching")
def check_branching(max_k: int) -> VerificationReport:
    rep = VerificationReport("thm_branching", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        total = sum(dimension_hook(lam.remove_corner(v)) for v in lam.inner_corners())
        rep.case(total == dimension_hook(lam), partition=lam.parts,
                 expected=dimension_hook(lam), actual=total)
    return rep


@check("sum_squares_factorial")
def check_sum_squares(max_k: int) -> VerificationReport:
    # external sanity: dimensions of the regular representation
    top = min(max_k, 7)
    rep = VerificationReport("sum_squares_factorial", (0, top))
    for k in range(top + 1):
        total = sum(dimension_hook(lam) ** 2 for lam in partitions_of(k))
        rep.case(total == factorial(k), k=k, expected=factorial(k), actual=total)
    return rep


@check("lemma_intval")
def check_reflection(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_intval", (0, max_k))
    for n in range(-20, 21):
        for h in range(11):
            rep.case(binomial(n, h) == (-1) ** h * binomial(h - 1 - n, h), n=n, h=h)
    return rep


@check("eq_expoff")
def check_expansion(max_k: int) -> VerificationReport:
    rep = VerificationReport("eq_expoff", (0, max_k))
    for lam in _all_partitions(max_k):
        k = lam.weight
        first = lam.parts[0] if lam.parts else 0
        a = a_coefficients(lam).a
        poly = fit_binomial_coefficients(lam)
        for n in range(k + first, k + first + 11):
            want = eval_f_large(lam, n)
            alt = sum((-1) ** h * a[h] * binomial(n, k - h) for h in range(len(a)))
            rep.case(alt == want and evaluate(poly, n) == want,
                     partition=lam.parts, n=n, expected=want, actual=alt)
    return rep


@check("prop_bdonindex")
def check_vanishing(max_k: int) -> VerificationReport:
    rep = VerificationReport("prop_bdonindex", (0, max_k))
    for lam in _all_partitions(max_k):
        k = lam.weight
        b = fit_binomial_coefficients(lam).coeffs
        ok = all(b[h] == 0 for h in range(k - lam.length))
        ok = ok and all(b[h] != 0 for h in (k - lam.length,))  # lowest survivor
        rep.case(ok, partition=lam.parts, b=list(b))
    return rep


@check("lemma_vancoeffs")
def check_vanishing_values(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_vancoeffs", (0, max_k))
    for lam in _all_partitions(max_k):
        k = lam.weight
        poly = fit_binomial_coefficients(lam)
        t = k - lam.length - 1
        ok = all(evaluate(poly, m) == 0 for m in range(t + 1))
        # converse: values vanish up to t, so coefficients do too (checked above);
        # also the value at t+1 must be nonzero or the coefficient bound would grow
        if t + 1 <= k:
            ok = ok and evaluate(poly, t + 1) == poly.coeffs[t + 1]
        rep.case(ok, partition=lam.parts)
    return rep


@check("prop_poscoeff")
def check_positive(max_k: int) -> VerificationReport:
    rep = VerificationReport("prop_poscoeff", (0, max_k))
    for lam in _all_partitions(max_k):
        a = a_coefficients(lam).a
        rep.case(all(x > 0 for x in a), partition=lam.parts, a=list(a))
    return rep


@check("prop_01coeffs")
def check_first_two(max_k: int) -> VerificationReport:
    rep = VerificationReport("prop_01coeffs", (0, max_k))
    for lam in _all_partitions(max_k):
        a = a_coefficients(lam).a
        f = dimension_hook(lam)
        ok = a[0] == f and (lam.length < 1 or a[1] == f)
        rep.case(ok, partition=lam.parts, a=list(a), f=f)
    return rep


@check("lemma_onecol")
def check_column(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_onecol", (1, max_k))
    for k in range(1, max_k + 1):
        a = a_coefficients(Partition((1,) * k)).a
        rep.case(a == (1,) * (k + 1), k=k, a=list(a))
    return rep


@check("lemma_brcoeffs")
def check_coeff_branching(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_brcoeffs", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        k = lam.weight
        if lam.parts == (1,) * k:
            continue
        a = a_coefficients(lam).a

        def padded(mu: Partition, h: int) -> int:
            vec = a_coefficients(mu).a
            return vec[h] if h < len(vec) else 0

        for h in range(k):
            total = sum(padded(lam.remove_corner(v), h) for v in lam.inner_corners())
            want = a[h] if h < len(a) else 0
            rep.case(total == want, partition=lam.parts, h=h, expected=want, actual=total)
    return rep


@check("thm_coeffSYT")
def check_coeff_equals_count(max_k: int) -> VerificationReport:
    rep = VerificationReport("thm_coeffSYT", (0, max_k))
    for lam in _all_partitions(max_k):
        a = a_coefficients(lam).a
        for h in range(lam.weight + 1):
            count = count_restricted(lam, h, 0)
            want = a[h] if h <= lam.length else 0
            rep.case(count == want, partition=lam.parts, h=h, expected=want, actual=count)
    return rep


@check("lemma_halphabr")
def check_restricted_branching(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_halphabr", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        k = lam.weight
        for h in range(lam.length + 1):
            for alpha in range(k - h):
                total = sum(
                    count_restricted(lam.remove_corner(v), h, alpha)
                    for v in lam.inner_corners()
                )
                want = count_restricted(lam, h, alpha)
                rep.case(total == want, partition=lam.parts, h=h, alpha=alpha,
                         expected=want, actual=total)
    return rep


@check("prop_SYT2")
def check_transpose_split(max_k: int) -> VerificationReport:
    rep = VerificationReport("prop_SYT2", (2, max_k))
    for lam in _all_partitions(max_k, min_k=2):
        k = lam.weight
        f = dimension_hook(lam)
        for alpha in range(k - 1):
            total = count_restricted(lam, 2, alpha) + count_restricted(lam.transpose(), 2, alpha)
            rep.case(total == f, partition=lam.parts, alpha=alpha, expected=f, actual=total)
    return rep


@check("cor_symev")
def check_self_conjugate(max_k: int) -> VerificationReport:
    rep = VerificationReport("cor_symev", (2, max_k))
    for lam in _all_partitions(max_k, min_k=2):
        if lam.transpose() != lam:
            continue
        k = lam.weight
        f = dimension_hook(lam)
        for alpha in range(k - 1):
            members = set(enumerate_restricted(lam, 2, alpha))
            complement = set(enumerate_syt(lam)) - members
            paired = {t.transpose() for t in complement}
            rep.case(f % 2 == 0 and paired == members, partition=lam.parts, alpha=alpha)
    return rep


@check("thm_indepofalpha")
def check_alpha_independence(max_k: int) -> VerificationReport:
    rep = VerificationReport("thm_indepofalpha", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        k = lam.weight
        for h in range(1, lam.length + 1):
            counts = {count_restricted(lam, h, alpha) for alpha in range(k - h + 1)}
            rep.case(len(counts) == 1, partition=lam.parts, h=h, counts=sorted(counts))
    return rep


@check("last_entry_corner")
def check_last_entry(max_k: int) -> VerificationReport:
    rep = VerificationReport("last_entry_corner", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        corners = lam.inner_corners()
        for tab in enumerate_syt(lam):
            ok = tab.cell_of(lam.weight) in corners
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "tableau": tab.to_text()})
    return rep


def _window_cases(max_k: int):
    for lam in _all_partitions(max_k, min_k=1):
        k = lam.weight
        for h in range(1, lam.length + 1):
            for alpha in range(1, k - h + 1):
                yield lam, k, h, alpha


@check("props_decalpha_enlalpha")
def check_map_targets(max_k: int) -> VerificationReport:
    rep = VerificationReport("props_decalpha_enlalpha", (1, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        for tab in enumerate_restricted(lam, h, alpha):
            ok = satisfies_condition(down_map(tab, h, alpha), h, alpha - 1)
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
        for tab in enumerate_restricted(lam, h, alpha - 1):
            ok = satisfies_condition(up_map(tab, h, alpha), h, alpha)
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
    return rep


@check("prop_invmaps")
def check_inverse_maps(max_k: int) -> VerificationReport:
    rep = VerificationReport("prop_invmaps", (1, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        for tab in enumerate_restricted(lam, h, alpha):
            ok = up_map(down_map(tab, h, alpha), h, alpha) == tab
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
        for tab in enumerate_restricted(lam, h, alpha - 1):
            ok = down_map(up_map(tab, h, alpha), h, alpha) == tab
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
    return rep


@check("lemma_relspq")
def check_pivot_duality(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_relspq", (2, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        if k != h + alpha:
            continue
        for tab in enumerate_restricted(lam, h, alpha):
            if satisfies_condition(tab, h, alpha - 1):
                continue
            q = compute_q(tab, h, alpha).value
            p = compute_p(down_map(tab, h, alpha), h, alpha).value
            rep.case(p == q - 1, partition=lam.parts, h=h, alpha=alpha, q=q, p=p)
        for tab in enumerate_restricted(lam, h, alpha - 1):
            if satisfies_condition(tab, h, alpha):
                continue
            p = compute_p(tab, h, alpha).value
            q = compute_q(up_map(tab, h, alpha), h, alpha).value
            rep.case(q == p + 1, partition=lam.parts, h=h, alpha=alpha, q=q, p=p)
    return rep


@check("lemma_qalphaIC")
def check_pivot_corner(max_k: int) -> VerificationReport:
    rep = VerificationReport("lemma_qalphaIC", (2, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        if k != h + alpha:
            continue
        for tab in enumerate_restricted(lam, h, alpha):
            if satisfies_condition(tab, h, alpha - 1):
                continue
            q = compute_q(tab, h, alpha).value
            ok = tab.cell_of(q + alpha) in lam.inner_corners()
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "q": q, "tableau": tab.to_text()})
    return rep


def _delete_last(tab):
    cell_of = {m: tab.cell_of(m) for m in range(1, tab.size)}
    shape = tab.shape.remove_corner(tab.cell_of(tab.size))
    from .tableaux import StandardTableau

    return StandardTableau.from_cells(shape, cell_of)


@check("genmaps_equivariance")
def check_branching_equivariance(max_k: int) -> VerificationReport:
    rep = VerificationReport("genmaps_equivariance", (2, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        if k <= h + alpha:
            continue
        for tab in enumerate_restricted(lam, h, alpha):
            ok = _delete_last(down_map(tab, h, alpha)) == down_map(_delete_last(tab), h, alpha)
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
        for tab in enumerate_restricted(lam, h, alpha - 1):
            ok = _delete_last(up_map(tab, h, alpha)) == up_map(_delete_last(tab), h, alpha)
            rep.cases_run += 1
            if not ok:
                rep.failures.append({"partition": lam.parts, "h": h, "alpha": alpha,
                                     "tableau": tab.to_text()})
    return rep


@check("cor_samesize")
def check_consecutive_counts(max_k: int) -> VerificationReport:
    rep = VerificationReport("cor_samesize", (1, max_k))
    for lam, k, h, alpha in _window_cases(max_k):
        rep.case(count_restricted(lam, h, alpha) == count_restricted(lam, h, alpha - 1),
                 partition=lam.parts, h=h, alpha=alpha)
    return rep


@check("mu_identity")
def check_mu_identity(max_k: int) -> VerificationReport:
    rep = VerificationReport("mu_identity", (1, max_k))
    for lam in _all_partitions(max_k, min_k=1):
        rep.case(dimension_via_mu_identity(lam) == dimension_hook(lam),
                 partition=lam.parts,
                 expected=dimension_hook(lam),
                 actual=dimension_via_mu_identity(lam))
    return rep


def run_checks(max_k: int, names: list[str] | None = None) -> list[VerificationReport]:
    """Run the selected checks (all by default) in registry order."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    selected = names if names is not None else list(REGISTRY)
    unknown = [n for n in selected if n not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown checks: {unknown}; available: {sorted(REGISTRY)}")
    return [REGISTRY[name](max_k) for name in selected]
