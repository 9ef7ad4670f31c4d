"""Reproduction suites shared by the ``verify`` CLI command and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import series_expand
from .analysis import mu
from .cluster import cluster_genfun
from .oracle import count_streak_free, counts_by_automaton, default_budget
from .streaks import soft_streak_genfun, streak_genfun, streak_set

# Published 60-decimal values of mu_k for k = 2..30.
MU_TABLE = {
    2: "2.718281828459045235360287471352662497757247093699959574966968",
    3: "7.924372434513184628799810694208415749584787751007803272302703",
    4: "29.980170111893315322399955239983927299141905015329020581286930",
    5: "143.994805367336197413565390684410970568671218564664180561091334",
    6: "839.998640250736936484708350540147060715630641050163631672497854",
    7: "5759.999644799666083821542490440199192540829862157792061849437504",
    8: "45359.999907445495866458458747887235726727998085580263917214428834",
    9: "403199.999975944248391489643004925481397778149807848098524214919893",
    10: "3991679.999993762687261148961681589183499555116134021765003499924135",
    11: "43545599.999998386322252253123523422442886632124901510775067769335874",
    12: "518918399.999999583357370408117814222274969576150520059702617407517123",
    13: "6706022399.999999892620702958568083451300164881681275187541538503077141",
    14: "93405311999.999999972371178409026358124994762865268191373551870561927755",
    15: "1394852659199.999999992901670495910427777148139210921443892403824212534308",
    16: "22230464255999.999999998178784422334973035853644616759173438447029466326330",
    17: "376610217983999.999999999533307881630474553527658533401701129555158955094942",
    18: "6758061133823999.999999999880543479711637568193161366429059063487770379745148",
    19: "128047474114559999.999999999969454970307684867213252426425625170841619171498343",
    20: "2554547108585471999.999999999992197048664880838487190307346342867240167220649762",
    21: "53523844179886079999.999999999998008422482625283883246379136011471180505449109885",
    22: "1175091669949317119999.999999999999492092868675029353971166800320262160032013123068",
    23: "26976017466662584319999.999999999999870566722275066805564948431276562750692499255348",
    24: "646300418472124415999999.999999999999967038630823130763357357810721382325899452430946",
    25: "16131658445064225423359999.999999999999991611525434893702034663107782646382044952491906",
    26: "418802671169936621567999999.999999999999997866473861936721552720430101299686177977844790",
    27: "11292160911544957796351999999.999999999999999457665584258861854728186147710347961739620511",
    28: "315777214062132212662271999999.999999999999999862213708621620749813293533566716693152765422",
    29: "9146650338351415815045119999999.999999999999999965011240223148822984088726555162948340854195",
    30: "274094621805930760590852095999999.999999999999999991119291928769895698939605832111440868044313",
}

SUITES = ("soft-conjecture", "streak-closed-form", "mu-table")


@dataclass
class Case:
    params: dict
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    conjectural: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)


def _first_mismatch(a, b) -> str:
    for s, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return f"s={s}: formula {x} vs count {y}"
    return ""


def soft_conjecture(n_max: int = 4, k_max: int = 4, s_max: int = 12, budget: int | None = None) -> SuiteReport:
    """Series of the conjectured soft-streak function against brute-force counts."""
    budget = default_budget() if budget is None else budget
    report = SuiteReport("soft-conjecture", conjectural=True)
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            top = s_max
            while n**top > budget:
                top -= 1
            series = series_expand(soft_streak_genfun(n, k), top).as_ints()
            counts = [count_streak_free(n, k, s, soft=True, budget=budget).count for s in range(top + 1)]
            ok = series == counts
            report.cases.append(Case({"n": n, "k": k, "s_max": top}, ok, "" if ok else _first_mismatch(series, counts)))
    return report


def streak_closed_form(n_max: int = 6, k_max: int = 5, s_max: int = 30) -> SuiteReport:
    """Closed-form streak function against the cluster method and automaton counts."""
    report = SuiteReport("streak-closed-form")
    for n in range(1, n_max + 1):
        for k in range(2, min(n, k_max) + 1):
            closed = streak_genfun(n, k)
            F = streak_set(n, k)
            via_cluster = cluster_genfun(F)
            series = series_expand(closed, s_max).as_ints()
            details = []
            if closed != via_cluster:
                details.append(f"cluster gives {via_cluster}")
            if series != series_expand(via_cluster, s_max).as_ints():
                details.append("cluster series differ")
            auto = counts_by_automaton(F, s_max)
            if series != auto:
                details.append("automaton " + _first_mismatch(series, auto))
            report.cases.append(Case({"n": n, "k": k, "s_max": s_max}, not details, "; ".join(details)))
    return report


def mu_table(k_max: int = 30) -> SuiteReport:
    report = SuiteReport("mu-table")
    for k in range(2, min(k_max, 30) + 1):
        got = mu(k, 60).value
        ok = got == MU_TABLE[k]
        report.cases.append(Case({"k": k, "digits": 60}, ok, "" if ok else f"got {got}"))
    return report


def run_suite(name: str, n_max: int | None = None, k_max: int | None = None, s_max: int | None = None) -> SuiteReport:
    if name == "soft-conjecture":
        return soft_conjecture(n_max or 4, k_max or 4, 12 if s_max is None else s_max)
    if name == "streak-closed-form":
        return streak_closed_form(n_max or 6, k_max or 5, 30 if s_max is None else s_max)
    if name == "mu-table":
        return mu_table(k_max or 30)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
