"""Mechanical checks of the structural results against enumerated paths.

Each ``check_*`` function inspects one walk and returns ``None`` when the
property holds or a short counterexample description when it does not.
The ``suite_*`` functions sweep board ranges and collect labelled results
for the ``verify`` command and the acceptance tests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional

from .board import Board, E, N, board as get_board
from .characterization import (
    admissible_pairs,
    initial_squares,
    n1_pairs,
    n2_pairs,
    tau_plus_e_form,
    terminal_squares,
)
from .constructions import (
    all_north_terminals,
    construction_sweep,
    exceptional_endpoints,
    predicted_all_north_terminals,
)
from .decoder import (
    EnumerationReport,
    decode,
    enumerate_dfs,
    enumerate_diagonal,
    is_cycle,
    outer_diagonals,
    reroute_outer,
    spec_of,
)
from .reductions import (
    can_go_east_holds,
    contract_rowful_east,
    expand_rowful_east,
    insertion_sites,
    inner_outer,
    rowful_diagonals,
    stretch_cases,
    verify_stretch,
)
from .walk import MixedDiagonal, Walk, east_set, invert, realize, transpose, travel_map

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"


@dataclass
class Check:
    label: str
    status: str
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{self.status:4}  {self.label}{tail}"


@dataclass
class SuiteReport:
    suite: str
    checks: List[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.checks)

    def add(self, label: str, failures: List[str], total: Optional[int] = None) -> None:
        if failures:
            self.checks.append(Check(label, FAIL, f"{len(failures)} failure(s), first: {failures[0]}"))
        else:
            self.checks.append(Check(label, PASS, "" if total is None else f"{total} case(s)"))

    def warn(self, label: str, detail: str) -> None:
        self.checks.append(Check(label, WARN, detail))

    def lines(self) -> List[str]:
        return [f"[{self.suite}]"] + [c.line() for c in self.checks]


# --- cached enumerations -------------------------------------------------------------


@lru_cache(maxsize=128)
def dfs_report(m: int, n: int) -> EnumerationReport:
    return enumerate_dfs(get_board(m, n))


@lru_cache(maxsize=128)
def diagonal_report(m: int, n: int, walks: bool = True) -> EnumerationReport:
    return enumerate_diagonal(get_board(m, n), walks=walks)


def boards(max_m: int, max_n: int, min_n: int = 3):
    for m in range(min_n, max_m + 1):
        for n in range(min_n, min(m, max_n) + 1):
            yield get_board(m, n)


# --- per-path checks ----------------------------------------------------------------


def check_uniform(w: Walk) -> Optional[str]:
    try:
        east_set(w)
    except MixedDiagonal as exc:
        return f"{_w(w)}: {exc}"
    return None


def check_terminal_follows(w: Walk) -> Optional[str]:
    b = w.board
    d = b.diagonal_of(w.end)
    if b.diagonal_of(b.east_inv(w.start)) != d or b.diagonal_of(b.north_inv(w.start)) != d:
        return f"{_w(w)}: start predecessors are off the terminal diagonal {d.label}"
    return None


def check_u_order(w: Walk) -> Optional[str]:
    b = w.board
    tmap = travel_map(w)
    d = b.diagonal_of(w.end)
    if d.singleton:
        return None
    tau, base = w.end, b.east_inv(w.start)
    cut_u = b.u_index(d, tau, base)
    cut_v = b.v_index(d, base, tau)
    for s in d.members:
        if s == tau:
            continue
        east = tmap[s] == E
        if east != (b.u_index(d, tau, s) < cut_u):
            return f"{_w(w)}: {s} breaks the u-order"
        if east != (b.v_index(d, base, s) < cut_v):
            return f"{_w(w)}: {s} breaks the v-order"
    return None


def check_local_rules(w: Walk) -> Optional[str]:
    b = w.board
    tmap = travel_map(w)
    iota, tau = w.start, w.end
    d = b.diagonal_of(tau)
    nw, se = b.nw_step, b.se_step

    def goes(s, x):
        return tmap.get(s) == x

    if b.north(tau) != iota and not goes(nw(tau), E):
        return f"{_w(w)}: tau N E^-1 does not travel east"
    if b.east(tau) != iota and not goes(se(tau), N):
        return f"{_w(w)}: tau E N^-1 does not travel north"
    for s in d.members:
        if goes(s, E):
            if b.north(s) != iota and not goes(nw(s), E):
                return f"{_w(w)}: {s} east but {nw(s)} not east"
            if goes(se(s), N):
                return f"{_w(w)}: {s} east but {se(s)} north"
        if goes(s, N):
            if b.east(s) != iota and not goes(se(s), N):
                return f"{_w(w)}: {s} north but {se(s)} not north"
            if goes(nw(s), E):
                return f"{_w(w)}: {s} north but {nw(s)} east"
    return None


def check_inverse_subpaths(w: Walk) -> Optional[str]:
    b = w.board
    d = b.diagonal_of(w.end)
    if d.singleton or d.hi + 1 > b.top:
        return None
    trace = realize(w)
    where = {s: k for k, s in enumerate(trace)}
    for s in b.subdiagonal(d.hi + 1):
        k = where[s]
        while k < len(trace) and sum(trace[k]) != d.lo:
            k += 1
        if k == len(trace):
            return f"{_w(w)}: path from {s} never reaches S{d.lo}"
        if trace[k] != b.inverse(s):
            return f"{_w(w)}: path from {s} reaches S{d.lo} at {trace[k]}"
    return None


def check_reroute(w: Walk) -> Optional[str]:
    b = w.board
    east_route = reroute_outer(w, E)
    if east_route is None or (east_route.start, east_route.end) != (w.start, w.end):
        return f"{_w(w)}: rerouting outer diagonals east failed"
    critical = b.diagonal(min(b.n - 1, b.m - 2))
    is_outer = critical.lo in outer_diagonals(b, w.end)
    north_route = reroute_outer(w, N)
    if (north_route is not None) == is_outer:
        return f"{_w(w)}: north rerouting {'succeeded' if north_route else 'failed'} with S{b.n - 1}|S{b.m - 2} {'outer' if is_outer else 'not outer'}"
    return None


def check_all_north_start(w: Walk) -> Optional[str]:
    """With an empty east-set the path (or a symmetric image) starts at tau_+ E."""
    b = w.board
    if east_set(w):
        return None
    d = b.diagonal_of(w.end)
    a, bb = d.lo, d.hi
    if not a <= b.m - 2 <= bb:
        return f"{_w(w)}: all-north path with a={a}, b={bb} outside a <= m-2 <= b"
    target = b.east(b.tau_plus(bb))
    candidates = [w, invert(w)]
    if b.m == b.n == a + 2 == bb + 1:
        candidates += [transpose(w), transpose(invert(w))]
    if any(c.start == target for c in candidates):
        return None
    if a + 1 == bb == b.n == b.m - 2 and (b.n, 0) in (w.start, invert(w).start):
        return None
    return f"{_w(w)}: all-north path does not start at tau_+E={target}"


def check_start_form(w: Walk) -> Optional[str]:
    """The start of the path or of its inverse is tau_+ E, or (p, 0) with p small when all inner go east."""
    b = w.board
    small = {(p, 0) for p in range(1, (b.m + b.n) // 2)}
    inner, _ = inner_outer(w)
    east = east_set(w)
    all_inner_east = all(d.lo in east for d in inner)
    target = b.east(b.tau_plus(b.diagonal_of(w.end).hi))
    starts = (w.start, invert(w).start)
    if target in starts:
        return None
    if all_inner_east and any(s in small for s in starts):
        return None
    return f"{_w(w)}: neither start in {{tau_+E={target}}} (all inner east: {all_inner_east})"


def _w(w: Walk) -> str:
    return f"[{w.start}]({w.moves}) on {w.board}"


PATH_CHECKS: Dict[str, Callable[[Walk], Optional[str]]] = {
    "uniform non-terminal diagonals": check_uniform,
    "terminal diagonal holds start predecessors": check_terminal_follows,
    "terminal diagonal u/v order": check_u_order,
    "terminal diagonal local rules": check_local_rules,
    "S_(b+1) subpaths end at inverse squares": check_inverse_subpaths,
    "all-north paths start at tau_+E": check_all_north_start,
    "start is tau_+E or small (p,0)": check_start_form,
}


def run_path_checks(paths: List[Walk], checks=PATH_CHECKS) -> Dict[str, List[str]]:
    out = {label: [] for label in checks}
    for w in paths:
        for label, fn in checks.items():
            msg = fn(w)
            if msg:
                out[label].append(msg)
    return out


# --- suites ------------------------------------------------------------------------------


def suite_theorems(max_m: int = 6, max_n: int = 6, diag_max: Optional[int] = None) -> SuiteReport:
    """Endpoint theorems against DFS (and the diagonal enumerator up to diag_max)."""
    t0 = time.perf_counter()
    rep = SuiteReport("theorems")
    init_f, term_f, pair_f, same_f = [], [], [], []
    total = 0
    for b in boards(max_m, max_n):
        total += 1
        if b.size <= 36:
            dfs = dfs_report(b.m, b.n)
            diag = diagonal_report(b.m, b.n)
            if dfs.canonical() != diag.canonical():
                same_f.append(f"{b}: {dfs.count} DFS paths vs {diag.count} decoded")
            oracle = dfs
        else:
            oracle = diagonal_report(b.m, b.n, walks=False)
        if oracle.initials != initial_squares(b):
            init_f.append(f"{b}: diff {sorted(oracle.initials ^ initial_squares(b))}")
        if oracle.terminals != terminal_squares(b):
            term_f.append(f"{b}: diff {sorted(oracle.terminals ^ terminal_squares(b))}")
        if oracle.pairs != admissible_pairs(b):
            pair_f.append(f"{b}: diff {sorted(oracle.pairs ^ admissible_pairs(b))[:4]}")
    rep.add("initial squares = predicate", init_f, total)
    rep.add("terminal squares = predicate", term_f, total)
    rep.add("endpoint pairs = admissible pairs", pair_f, total)
    rep.add("DFS and diagonal path sets identical", same_f)
    if diag_max:
        f = []
        count = 0
        for b in boards(diag_max, diag_max):
            if b.m <= max_m and b.n <= max_n:
                continue
            count += 1
            r = diagonal_report(b.m, b.n, walks=False)
            if r.initials != initial_squares(b) or r.terminals != terminal_squares(b):
                f.append(f"{b}")
            if r.pairs != admissible_pairs(b):
                f.append(f"{b} pairs")
        rep.add(f"decoded endpoints = predicates up to {diag_max}", f, count)
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_props(max_m: int = 6, max_n: int = 6) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport("props")
    failures = {label: [] for label in PATH_CHECKS}
    inj_f, corner_f, cycle_f, reroute_f = [], [], [], []
    npaths = 0
    for b in boards(max_m, max_n):
        paths = diagonal_report(b.m, b.n).paths
        npaths += len(paths)
        for label, msgs in run_path_checks(paths).items():
            failures[label].extend(msgs)
        specs = {spec_of(w) for w in paths}
        if len(specs) != len(paths):
            inj_f.append(f"{b}: {len(paths)} paths but {len(specs)} coordinate triples")
        for w in paths:
            if decode(b, spec_of(w)) != w:
                inj_f.append(f"{_w(w)} does not decode back to itself")
                break
        if any(w.start == (0, 0) for w in paths):
            corner_f.append(f"{b}: a path starts at (0,0)")
        cyc = [w for w in paths if is_cycle(w)]
        if cyc:
            cycle_f.append(f"{b}: hamiltonian cycle {_w(cyc[0])}")
        for w in paths:
            msg = check_reroute(w)
            if msg:
                reroute_f.append(msg)
    for label, msgs in failures.items():
        rep.add(label, msgs, npaths)
    rep.add("coordinates determine the path", inj_f, npaths)
    rep.add("no path starts at (0,0)", corner_f)
    rep.add("no hamiltonian cycle", cycle_f)
    rep.add("outer-diagonal rerouting", reroute_f, npaths)
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_constructions(max_m: int = 12, sweep_max: int = 8) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport("constructions")
    sweep = construction_sweep(max_m)
    rep.add(f"H_a / H_b / m x (m-2) constructions up to m={max_m}", sweep.failures, sweep.checked)
    for entry in sweep.log:
        if entry.literal_attempt == "fail":
            rep.warn(f"literal {entry.kind} on {entry.board} {entry.params}", entry.note)
    f = []
    count = 0
    for b in boards(sweep_max, sweep_max):
        for d in b.diagonals:
            if d.singleton:
                continue
            count += 1
            start = b.east(b.tau_plus(d.hi))
            got = all_north_terminals(b, start)
            want = predicted_all_north_terminals(b, d.lo)
            if got != want:
                f.append(f"{b} a={d.lo}: decoded {sorted(got)} predicted {sorted(want)}")
    rep.add(f"all-north terminals from tau_+E up to {sweep_max}", f, count)
    f = []
    for m in range(5, max(sweep_max, 10) + 1):
        b = get_board(m, m - 2)
        start, end = exceptional_endpoints(m)
        got = all_north_terminals(b, start)
        if got != {end}:
            f.append(f"{b}: decoded {sorted(got)} expected {end}")
    rep.add("all-north terminals from (m-2,0) on m x (m-2)", f)
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_reductions(max_m: int = 6, max_n: int = 6, max_squares: int = 36) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport("reductions")
    trip_f, onto_f = [], []
    ncontract = 0
    for m in range(3, max_squares + 1):
        for n in range(3, m + 1):
            if m * n > max_squares:
                continue
            b = get_board(m, n)
            rowful = rowful_diagonals(b)
            if not rowful:
                continue
            images: Dict[tuple, set] = {}
            for w in diagonal_report(m, n).paths:
                east = east_set(w)
                term = b.diagonal_of(w.end)
                for d in rowful:
                    if d == term or d.lo not in east:
                        continue
                    ncontract += 1
                    small = contract_rowful_east(w, d)
                    if expand_rowful_east(small, d.lo, d.hi) != w:
                        trip_f.append(f"{_w(w)} at {d.label}")
                    images.setdefault((d.lo, d.hi), set()).add(small.key())
            for (i, j), got in images.items():
                small_b = get_board(m - len({i, j}), n)
                want = {w.key() for w in diagonal_report(small_b.m, small_b.n).paths}
                if got != want:
                    onto_f.append(f"{b} at S{i}|S{j}: {len(got)} images of {len(want)} paths")
                    continue
                for w in diagonal_report(small_b.m, small_b.n).paths[:50]:
                    if contract_rowful_east(expand_rowful_east(w, i, j), b.diagonal(i)) != w:
                        onto_f.append(f"{_w(w)} at S{i}|S{j}")
                        break
    rep.add(f"contract/expand round trip (m*n <= {max_squares})", trip_f, ncontract)
    rep.add("contraction is a bijection", onto_f)
    cge_f, st_f = [], []
    npaths = ncases = 0
    for b in boards(max_m, max_n):
        for w in diagonal_report(b.m, b.n).paths:
            npaths += 1
            if not can_go_east_holds(w):
                cge_f.append(_w(w))
        for iota, tau, e in stretch_cases(b):
            ncases += 1
            chk = verify_stretch(b, iota, tau, e)
            if not chk.holds:
                st_f.append(f"{b} {iota}->{tau} e={e}: {chk}")
    rep.add("east inner diagonals rowful unless all inner east", cge_f, npaths)
    rep.add("stretch equivalence", st_f, ncases)
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_n12(max_m: int = 10, max_m1: int = 12) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport("n12")
    f = []
    for m in range(1, max_m1 + 1):
        got = dfs_report(m, 1).pairs
        if got != n1_pairs(m):
            f.append(f"{m}x1: diff {sorted(got ^ n1_pairs(m))}")
    rep.add(f"m x 1 pairs (m <= {max_m1})", f, max_m1)
    f = []
    for m in range(2, max_m + 1):
        got = dfs_report(m, 2).pairs
        if got != n2_pairs(m):
            f.append(f"{m}x2: diff {sorted(got ^ n2_pairs(m))}")
    rep.add(f"m x 2 pairs (m <= {max_m})", f, max_m - 1)
    f = [f"{m}x2 has no hamiltonian cycle" for m in range(2, max_m + 1)
         if not any(is_cycle(w) for w in dfs_report(m, 2).paths)]
    rep.add("thin boards have a hamiltonian cycle", f)
    rep.elapsed = time.perf_counter() - t0
    return rep


SUITES = {
    "theorems": suite_theorems,
    "props": suite_props,
    "constructions": suite_constructions,
    "reductions": suite_reductions,
    "n12": suite_n12,
}
