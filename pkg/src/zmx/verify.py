"""Seeded verification campaigns behind the `verify` CLI subcommand.

Each campaign replays a documented theorem on randomly drawn instances and
counts violations; a nonempty failure list is a counterexample report, never
a reason to loosen the check. Draws are reproducible: every trial reseeds
from (seed, campaign, n, trial), so campaigns can be rerun or subdivided
without changing outcomes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from zmx.construct import bdsw_matrix, circulant_conditions, circulant_pz, from_cyclic_params, type_d, type_d_verify
from zmx.cyclic import (
    Verdict,
    bdsw_sign_classify,
    cyclic_det,
    cyclic_inverse,
    cyclic_products,
    is_bdsw,
    is_full,
    is_inverse_cyclic,
    roundtrip_check,
)
from zmx.digraph import digraph_of, is_irreducible, is_unipathic, maybee_entry
from zmx.matrix import det, inverse
from zmx.sampling import (
    forced_singular_cyclic_params,
    rand_rational,
    random_bdsw,
    random_circulant_alpha,
    random_cyclic_params,
    random_inverse_cyclic,
    random_nonsingular,
    random_shifted_z,
    random_type_d_params,
    random_z,
)
from zmx.zclass import _minor_signs, is_f0, is_n, is_n0, is_nonsingular_m


@dataclass
class VerifySummary:
    theorem: str
    n_lo: int
    n_hi: int
    trials: int
    seed: int
    checks: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _rng(seed, *key) -> random.Random:
    return random.Random(f"{seed}|" + "|".join(map(str, key)))


def _det_formula(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    for n in range(max(2, n_lo), n_hi + 1):
        for t in range(trials):
            rng = _rng(seed, "det-formula", n, t)
            if t % 8 == 7:
                diag, sup, corner = forced_singular_cyclic_params(rng, n)
            else:
                diag, sup, corner = random_cyclic_params(rng, n)
            a = from_cyclic_params(diag, sup, corner)
            d, c = cyclic_products(a)
            oracle = det(a)
            checks += 1
            if cyclic_det(a) != oracle or (d == c) != (oracle == 0):
                failures.append(f"det-formula n={n} trial={t}")
    return checks, failures


def _cycle_matrix(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    for n in range(max(2, n_lo), n_hi + 1):
        for t in range(trials):
            rng = _rng(seed, "cycle-matrix", n, t)
            while True:
                a = random_inverse_cyclic(rng, n, zeros=False)
                d, c = cyclic_products(a)
                if d != c:
                    break
            inv = inverse(a)
            ratio = d / (d - c)
            checks += 1
            if not (
                is_bdsw(inv)
                and cyclic_inverse(a) == inv
                and roundtrip_check(a)
                and all(a.entry(i, i) * inv.entry(i, i) == ratio for i in range(1, n + 1))
            ):
                failures.append(f"cycle-matrix forward n={n} trial={t}")
            b = random_bdsw(rng, n)
            binv = inverse(b)
            checks += 1
            if not (is_full(binv) and is_inverse_cyclic(binv) and roundtrip_check(b)):
                failures.append(f"cycle-matrix backward n={n} trial={t}")
    return checks, failures


def _draw_cyclic_signed(rng, n, sign, e_positive):
    # rejection keeps drawing until d - c lands on the requested side
    while True:
        a = random_inverse_cyclic(rng, n, sign=sign)
        d, c = cyclic_products(a)
        if d != c and ((d - c > 0) == e_positive):
            return a


def _draw_cyclic_mixed(rng, n):
    while True:
        diag, sup, corner = random_cyclic_params(rng, n, zeros=False)
        if any(x > 0 for x in diag) and any(x < 0 for x in diag):
            return from_cyclic_params(diag, sup, corner)


def _bdsw_z(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    orders = list(range(max(2, n_lo), n_hi + 1))
    evens = [n for n in orders if n % 2 == 0]
    odds = [n for n in orders if n % 2 == 1]
    for t in range(trials):
        n = orders[t % len(orders)]
        rng = _rng(seed, "bdsw-z", "pos", n, t)
        a = _draw_cyclic_signed(rng, n, "pos", True)
        inv = inverse(a)
        checks += 1
        if not (
            bdsw_sign_classify(a) is Verdict.INVERSE_M
            and is_bdsw(inv)
            and is_nonsingular_m(inv)
        ):
            failures.append(f"bdsw-z pos n={n} trial={t}")
        if evens:
            n = evens[t % len(evens)]
            rng = _rng(seed, "bdsw-z", "neg-even", n, t)
            a = _draw_cyclic_signed(rng, n, "neg", False)
            inv = inverse(a)
            checks += 1
            if not (
                bdsw_sign_classify(a) is Verdict.INVERSE_N
                and is_bdsw(inv)
                and is_n(inv)
            ):
                failures.append(f"bdsw-z neg-even n={n} trial={t}")
        if odds:
            n = odds[t % len(odds)]
            rng = _rng(seed, "bdsw-z", "neg-odd", n, t)
            a = _draw_cyclic_signed(rng, n, "neg", True)
            inv = inverse(a)
            checks += 1
            if not (
                bdsw_sign_classify(a) is Verdict.INVERSE_N
                and is_bdsw(inv)
                and is_n(inv)
            ):
                failures.append(f"bdsw-z neg-odd n={n} trial={t}")
        # violating parameters must land on Neither
        n = orders[t % len(orders)]
        rng = _rng(seed, "bdsw-z", "violate", n, t)
        kind = t % 3
        if kind == 0:
            a = _draw_cyclic_signed(rng, n, "pos", False)
            inv = inverse(a)
            ok = (
                bdsw_sign_classify(a) is Verdict.NEITHER
                and is_bdsw(inv)
                and not is_nonsingular_m(inv)
            )
        elif kind == 1:
            a = _draw_cyclic_signed(rng, n, "neg", n % 2 == 0)
            inv = inverse(a)
            ok = (
                bdsw_sign_classify(a) is Verdict.NEITHER
                and is_bdsw(inv)
                and not is_n(inv)
            )
        else:
            a = _draw_cyclic_mixed(rng, n)
            ok = bdsw_sign_classify(a) is Verdict.NEITHER
        checks += 1
        if not ok:
            failures.append(f"bdsw-z violate kind={kind} n={n} trial={t}")
    return checks, failures


def _draw_z_matrix(rng, n, t, *, nonsingular=False):
    """Coverage mix for the oracle equivalences: plain random Z, shifted
    t*I - B, Z-signed bdsw patterns, and inverses of type-D matrices (which
    land in M, N, N0 and F0 depending on the parameter signs)."""
    kind = t % 4
    while True:
        if kind == 1:
            a = random_shifted_z(rng, n)
        elif kind == 2 and n >= 2:
            diag = [rand_rational(rng, -3, 3, nonzero=True) for _ in range(n)]
            sup = [rand_rational(rng, -3, -1, nonzero=True) for _ in range(n - 1)]
            corner = rand_rational(rng, -3, -1, nonzero=True)
            a = bdsw_matrix(diag, sup, corner)
        elif kind == 3 and n >= 2:
            pattern = [None, "all_negative", "top_zero", "second_zero"][(t // 4) % (4 if n >= 3 else 3)]
            a = inverse(type_d(random_type_d_params(rng, n, pattern)))
        else:
            a = random_z(rng, n)
        if not nonsingular or det(a) != 0:
            return a


def _zclass_oracles(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    base = list(range(max(1, n_lo), n_hi + 1))
    at_least2 = [n for n in base if n >= 2]
    at_least3 = [n for n in base if n >= 3]
    plans = (
        ("m", base),
        ("m-irr", base),
        ("n", at_least2),
        ("n0", base),
        ("f0", at_least3),
    )
    for t in range(trials):
        for eq, orders in plans:
            if not orders:
                continue
            n = orders[t % len(orders)]
            rng = _rng(seed, "zclass", eq, n, t)
            a = _draw_z_matrix(rng, n, t, nonsingular=(eq == "f0"))
            dd = det(a)
            inv = inverse(a) if dd != 0 else None
            if eq == "m":
                lhs = is_nonsingular_m(a)
                rhs = inv is not None and all(x >= 0 for row in inv.rows for x in row)
            elif eq == "m-irr":
                lhs = is_nonsingular_m(a) and is_irreducible(digraph_of(a))
                rhs = inv is not None and all(x > 0 for row in inv.rows for x in row)
            elif eq == "n":
                lhs = is_n(a)
                rhs = inv is not None and all(x < 0 for row in inv.rows for x in row)
            elif eq == "n0":
                lhs = is_n0(a)
                rhs = (
                    inv is not None
                    and all(x <= 0 for row in inv.rows for x in row)
                    and is_irreducible(digraph_of(a))
                )
            else:
                lhs = is_f0(a)
                rhs = (
                    dd < 0
                    and all(s <= 0 for order, s in _minor_signs(inv) if order >= 2)
                    and any(inv.entry(i, i) > 0 for i in range(1, n + 1))
                )
            checks += 1
            if lhs != rhs:
                failures.append(f"zclass-oracles {eq} n={n} trial={t}")
    return checks, failures


def _type_d(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    for n in range(max(2, n_lo), n_hi + 1):
        patterns = [None, None, "all_negative", "top_zero"]
        if n >= 3:
            patterns.append("second_zero")
        for t in range(trials):
            rng = _rng(seed, "type-d", n, t)
            pattern = patterns[t % len(patterns)]
            params = random_type_d_params(rng, n, pattern)
            s = sum(1 for x in params if x <= 0)
            rep = type_d_verify(params)
            expected = n if s == 0 else s - 1
            ok = rep.tridiagonal and rep.z and rep.l_index_of_inverse == expected
            if ok and pattern is not None:
                inv = inverse(type_d(params))
                if pattern == "all_negative":
                    ok = is_n(inv)
                elif pattern == "top_zero":
                    ok = is_n0(inv) and not is_n(inv)
                else:
                    ok = is_f0(inv)
            checks += 1
            if not ok:
                failures.append(f"type-d n={n} trial={t} pattern={pattern}")
    return checks, failures


def _circulant_inverse_conforms(a, mode):
    if det(a) == 0:
        return False
    inv = inverse(a)
    if not is_bdsw(inv):
        return False
    return is_nonsingular_m(inv) if mode == "nonneg" else is_n(inv)


def _polyn(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    orders = list(range(max(3, n_lo), n_hi + 1))
    for mode in ("nonneg", "nonpos"):
        for t in range(trials):
            n = orders[t % len(orders)]
            rng = _rng(seed, "polyn", mode, n, t)
            alpha = random_circulant_alpha(rng, n, mode, conforming=True)
            checks += 1
            if not (
                circulant_conditions(alpha, mode)
                and _circulant_inverse_conforms(circulant_pz(alpha), mode)
            ):
                failures.append(f"polyn {mode} conforming n={n} trial={t}")
            alpha = random_circulant_alpha(rng, n, mode, conforming=False)
            checks += 1
            if circulant_conditions(alpha, mode) or _circulant_inverse_conforms(
                circulant_pz(alpha), mode
            ):
                failures.append(f"polyn {mode} broken n={n} trial={t}")
    return checks, failures


def _maybee(n_lo, n_hi, trials, seed):
    checks, failures = 0, []
    dense = list(range(max(2, n_lo), min(n_hi, 5) + 1))
    uni = list(range(max(2, n_lo), n_hi + 1))
    for t in range(trials):
        n = dense[t % len(dense)]
        rng = _rng(seed, "maybee-dense", n, t)
        a = random_nonsingular(rng, n)
        inv = inverse(a)
        checks += 1
        if not all(
            maybee_entry(a, i, j) == inv.entry(i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        ):
            failures.append(f"maybee dense n={n} trial={t}")
        n = uni[t % len(uni)]
        rng = _rng(seed, "maybee-bdsw", n, t)
        b = random_bdsw(rng, n)
        binv = inverse(b)
        checks += 1
        if not (
            is_unipathic(digraph_of(b))
            and all(
                maybee_entry(b, i, j) == binv.entry(i, j)
                for i in range(1, n + 1)
                for j in range(1, n + 1)
            )
        ):
            failures.append(f"maybee bdsw n={n} trial={t}")
    return checks, failures


CAMPAIGNS = {
    "cycle-matrix": _cycle_matrix,
    "det-formula": _det_formula,
    "bdsw-z": _bdsw_z,
    "type-d": _type_d,
    "polyn": _polyn,
    "maybee": _maybee,
    "zclass-oracles": _zclass_oracles,
}


def run_verify(theorem: str, n_lo: int, n_hi: int, trials: int, seed: int) -> VerifySummary:
    if theorem not in CAMPAIGNS:
        known = ", ".join(sorted(CAMPAIGNS))
        raise ValueError(f"unknown theorem {theorem!r}; known ids: {known}")
    if n_lo < 1 or n_hi < n_lo:
        raise ValueError(f"bad order range {n_lo}..{n_hi}")
    if trials < 1:
        raise ValueError("trials must be positive")
    checks, failures = CAMPAIGNS[theorem](n_lo, n_hi, trials, seed)
    return VerifySummary(theorem, n_lo, n_hi, trials, seed, checks, failures)
