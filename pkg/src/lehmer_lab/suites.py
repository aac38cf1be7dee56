"""Named verification suites.

Each suite is a plain function ``suite(bounds) -> list[CheckOutcome]`` so it
can be shipped to a worker process.  Default bounds reproduce every check in
the acceptance list.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import central_factorial as cf
from . import congruence as cg
from . import higher_order as ho
from . import incomplete as inc
from . import lehmer_euler as le

EXPLICIT_BUDGET = 2**17  # compositions per explicit evaluation; n = 18 for plain W

DEFAULTS = {
    "methods": {"upto": 61, "explicit_upto": 19},
    "mod9": {"upto": 301},
    "mod27": {"upto": 301},
    "mod81": {"upto": 301},
    "cycles": {"k": None},
    "stern": {"k": 6, "upto": 101},
    "conjecture": {"k": 5},
    "incomplete": {"upto": 31, "m": 6},
    "higher": {"upto": 25, "alpha": 4},
    "cfn": {"upto": 15, "k": 5},
    "thm5": {"upto": 11},
    "thm6": {"upto": 11},
}

SUITE_NAMES = tuple(DEFAULTS)


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        out = {"name": self.name, "ok": self.ok, "detail": self.detail}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(name: str, fn) -> CheckOutcome:
    start = time.perf_counter()
    ok, detail = fn()
    return CheckOutcome(name, bool(ok), detail, time.perf_counter() - start)


def _report(rep: cg.CongruenceReport):
    return rep.ok, rep.as_dict()


def suite_methods(upto: int, explicit_upto: int) -> list[CheckOutcome]:
    def poly_methods():
        _, mismatches = le.compare_methods(upto)
        return not mismatches, {"range": f"n < {upto}", "mismatches": [list(map(str, m)) for m in mismatches[:5]]}

    def explicit():
        n_max = min(upto, explicit_upto)
        ref = le.w_recurrence(n_max)
        bad = [n for n in range(1, n_max) if le.w_explicit(n) != ref[n]]
        return not bad, {"range": f"1 <= n < {n_max}", "mismatches": bad[:5]}

    def sign_law():
        w = le.w_recurrence(upto)
        bad = [n for n, v in enumerate(w) if (-1) ** n * v <= 0]
        return not bad, {"range": f"n < {upto}", "violations": bad[:5]}

    def inversion():
        n_max = min(upto, 16)
        bad = [n for n in range(1, n_max) if not le.inversion_det_check(n)]
        return not bad, {"range": f"1 <= n < {n_max}", "failures": bad}

    return [
        _timed("methods.recurrence_series_determinant_trudi", poly_methods),
        _timed("methods.explicit", explicit),
        _timed("methods.sign_law", sign_law),
        _timed("methods.inversion_determinant", inversion),
    ]


def suite_mod9(upto: int) -> list[CheckOutcome]:
    return [_timed("mod9", lambda: _report(cg.verify_mod9(upto)))]


def suite_mod27(upto: int) -> list[CheckOutcome]:
    return [_timed("mod27", lambda: _report(cg.verify_mod27(upto)))]


def suite_mod81(upto: int) -> list[CheckOutcome]:
    return [_timed("mod81", lambda: _report(cg.verify_mod81_cases(upto)))]


def suite_cycles(k: int | None) -> list[CheckOutcome]:
    powers = [k] if k else [2, 3, 4, 5, 6]
    out = []
    for p in powers:
        def check(p=p):
            scan = 3 * 2 * 3 ** max(p - 2, 0) + 10
            cyc = cg.residue_cycle(p, scan)
            pal = cg.palindrome_check(cyc)
            detail = {
                "modulus": cyc.modulus,
                "status": cyc.status,
                "pre_period": list(cyc.pre_period),
                "period_length": len(cyc.period),
                "period": list(cyc.period),
                "palindromic": pal,
            }
            ok = cyc.confirmed
            if p in cg.KNOWN_CYCLES:
                ok = ok and cyc.period == cg.KNOWN_CYCLES[p] and cyc.pre_period == (1,) and pal
            elif p >= 6:
                ok = ok and not pal
            return ok, detail

        out.append(_timed(f"cycles.mod3^{p}", check))
    return out


def suite_stern(k: int, upto: int) -> list[CheckOutcome]:
    return [
        _timed(f"stern.k{j}", lambda j=j: _report(cg.stern_check(j, upto))) for j in range(1, k + 1)
    ]


def suite_conjecture(k: int) -> list[CheckOutcome]:
    return [
        _timed(f"conjecture.k{j}", lambda j=j: _report(cg.scan_conjecture(j, 3 * 2 * 3 ** (j - 1) + 1)))
        for j in range(1, k + 1)
    ]


def suite_incomplete(upto: int, m: int) -> list[CheckOutcome]:
    def agree():
        bad = []
        for mm in range(1, m + 1):
            le_tab = inc.w_le_recurrence(upto, mm)
            ge_tab = inc.w_ge_recurrence(upto, mm)
            for n in range(1, upto):
                if not (inc.w_le_determinant(n, mm) == le_tab[n] == inc.w_le_trudi(n, mm)):
                    bad.append(("le", n, mm))
                if not (inc.w_ge_determinant(n, mm) == ge_tab[n] == inc.w_ge_trudi(n, mm)):
                    bad.append(("ge", n, mm))
        return not bad, {"range": f"n < {upto}, m <= {m}", "mismatches": bad[:5]}

    def explicit():
        bad, done, skipped = [], 0, 0
        for mm in range(1, m + 1):
            le_tab = inc.w_le_recurrence(upto, mm)
            ge_tab = inc.w_ge_recurrence(upto, mm)
            for n in range(1, upto):
                for kind, lo, hi, fn, tab in (
                    ("le", 1, mm, inc.w_le_explicit, le_tab),
                    ("ge", mm, None, inc.w_ge_explicit, ge_tab),
                ):
                    if inc.composition_count(n, lo, hi) > EXPLICIT_BUDGET:
                        skipped += 1
                        continue
                    done += 1
                    if fn(n, mm) != tab[n]:
                        bad.append((kind, n, mm))
        return not bad, {"evaluated": done, "over_budget": skipped, "mismatches": bad[:5]}

    def reductions():
        base = le.w_recurrence(upto)
        ok = tuple(inc.w_ge_recurrence(upto, 1)) == tuple(base)
        for mm in range(1, m + 1):
            le_tab = inc.w_le_recurrence(upto, mm)
            ok &= all(le_tab[n] == base[n] for n in range(min(mm + 1, upto)))
            ge_tab = inc.w_ge_recurrence(upto, mm)
            ok &= all(ge_tab[n] == 0 for n in range(1, min(mm, upto)))
        return ok, {"range": f"n < {upto}, m <= {m}"}

    return [
        _timed("incomplete.recurrence_determinant_trudi", agree),
        _timed("incomplete.explicit", explicit),
        _timed("incomplete.reductions_zero_block", reductions),
    ]


def suite_higher(upto: int, alpha: int) -> list[CheckOutcome]:
    def reductions():
        w = le.w_recurrence((upto - 1) // 3 + 1)
        e = le.euler_numbers((upto - 1) // 2 + 1)
        ok = ho.w_higher_series(3, 1, upto).values == tuple(w.at(n) for n in range(upto))
        ok &= ho.w_higher_series(2, 1, upto).values == tuple(e.at(n) for n in range(upto))
        return ok, {"range": f"n < {upto}"}

    def explicit():
        bad = []
        for r in (2, 3):
            for a in range(1, alpha + 1):
                s = ho.w_higher_series(r, a, upto)
                bad += [(r, a, n) for n in range(upto) if ho.w_higher_explicit(r, a, n) != s[n]]
                if r == 2:
                    bad += [("luo", a, n) for n in range(upto) if ho.euler_higher_luo(a, n) != s[n]]
        return not bad, {"range": f"r in (2,3), alpha <= {alpha}, n < {upto}", "mismatches": bad[:5]}

    return [_timed("higher.reductions", reductions), _timed("higher.explicit_luo", explicit)]


def suite_cfn(upto: int, k: int) -> list[CheckOutcome]:
    def delta():
        want = {
            1: [1, 3, 1],
            2: [5, 20, 25, 10, 1],
            3: [61, 287, 490, 385, 140, 21, 1],
        }
        ok = all(list(cf.delta_poly(j).coeffs) == c for j, c in want.items())
        ok &= all(cf.delta_poly(j)(0) == (-1) ** j * le.euler_e(2 * j) for j in range(13))
        return ok, {"delta_1": str(cf.delta_poly(1)), "delta_2": str(cf.delta_poly(2)), "delta_3": str(cf.delta_poly(3))}

    def tables():
        ok = True
        for n in range(1, upto):
            cf.t_first_via_product(n)  # raises on mismatch
            ok &= cf.T_second_via_basis(n) == [cf.T_second(n, j) for j in range(n + 1)]
            ok &= cf.basis_check_second(n)
        return ok, {"range": f"1 <= n < {upto}"}

    def gfs():
        bad = [j for j in range(1, k + 1) if not (cf.gf_check_first(j, upto - 1) and cf.gf_check_second(j, upto - 1))]
        return not bad, {"k_max": k, "order": upto - 1, "failures": bad}

    return [_timed("cfn.delta", delta), _timed("cfn.tables", tables), _timed("cfn.generating_functions", gfs)]


def suite_thm5(upto: int) -> list[CheckOutcome]:
    def run():
        bad = [(n, k) for n in range(upto) for k in range(upto) if not cf.thm5_check(n, k)]
        return not bad, {"range": f"n, k < {upto}", "failures": bad[:5]}

    return [_timed("thm5", run)]


def suite_thm6(upto: int) -> list[CheckOutcome]:
    def run():
        bad = [n for n in range(upto) if not cf.thm6_check(n)]
        return not bad, {"range": f"n < {upto}", "failures": bad}

    def remark():
        bad = [n for n in range(upto) if not cf.thm6_remark_check(n)]
        return not bad, {"range": f"n < {upto}", "failures": bad}

    return [_timed("thm6", run), _timed("thm6.remark", remark)]


SUITES = {
    "methods": suite_methods,
    "mod9": suite_mod9,
    "mod27": suite_mod27,
    "mod81": suite_mod81,
    "cycles": suite_cycles,
    "stern": suite_stern,
    "conjecture": suite_conjecture,
    "incomplete": suite_incomplete,
    "higher": suite_higher,
    "cfn": suite_cfn,
    "thm5": suite_thm5,
    "thm6": suite_thm6,
}


def run_suite(name: str, overrides: dict | None = None) -> list[CheckOutcome]:
    """Run one suite with its defaults, replacing any bound given in ``overrides``."""
    params = dict(DEFAULTS[name])
    for key, value in (overrides or {}).items():
        if key in params and value is not None:
            params[key] = value
    return SUITES[name](**params)
