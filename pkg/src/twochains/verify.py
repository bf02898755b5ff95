"""Executable checks of every structural claim, grouped into suites.

Each check returns :class:`CheckResult` values; the CLI prints them and the
acceptance tests assert on them.  ``max_n`` lowers the size bound of every
check in a suite (never raises it).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import bichain, binseq, counting, coxeter, graphs, rchain, splice
from .poset import (
    Poset,
    all_labelled_posets,
    are_isomorphic,
    automorphism_count,
    comparable_pair_count,
    count_linear_extensions,
    covers,
    dual,
    ideals_of_size,
    incomparable_pair_count,
    is_isomorphism,
    maximal_elements,
    random_poset,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    experimental: bool = False


def _bound(default: int, max_n: int | None) -> int:
    return default if max_n is None else min(default, max_n)


def _result(name: str, failures: list, checked: int, experimental: bool = False) -> CheckResult:
    if failures:
        shown = "; ".join(map(str, failures[:3]))
        return CheckResult(name, False, f"{len(failures)} of {checked} failed, e.g. {shown}", experimental)
    return CheckResult(name, True, f"{checked} cases", experimental)


def same_two_chain(p: Poset, q: Poset) -> bool:
    """Isomorphism of 2-chains via certified maps onto sequence posets.

    Each side gets a word and an explicit isomorphism onto that word's poset
    (checked, not trusted); the words must agree up to complement.
    """
    a, img_p = binseq.sequence_isomorphism(p)
    b, img_q = binseq.sequence_isomorphism(q)
    if not is_isomorphism(p, binseq.seq_poset(a).order, img_p):
        raise AssertionError(f"bad sequence isomorphism for word {a!r}")
    if not is_isomorphism(q, binseq.seq_poset(b).order, img_q):
        raise AssertionError(f"bad sequence isomorphism for word {b!r}")
    return a in (b, binseq.complement(b))


def all_words(max_len: int, min_len: int = 0) -> Iterable[str]:
    for n in range(min_len, max_len + 1):
        for t in itertools.product("01", repeat=n):
            yield "".join(t)


# -- 1. enumeration -------------------------------------------------------------


def check_enumeration_counts(max_n: int | None = None) -> CheckResult:
    top = _bound(14, max_n)
    bad = []
    for n in range(3, top + 1):
        got = len(bichain.enumerate_two_chains(n))
        if got != 2 ** (n - 3):
            bad.append(f"n={n}: {got}")
    return _result(f"enumeration count 2^(n-3), 3<=n<={top}", bad, top - 2)


def two_chain_classes_by_filtering(n: int) -> list[Poset]:
    """Isomorphism classes of 2-chains among all labelled posets, by definition."""
    reps: dict[tuple, list[Poset]] = {}
    for p in all_labelled_posets(n):
        if not bichain.is_two_chain_by_definition(p):
            continue
        key = tuple(sorted(zip(map(int.bit_count, p.down), map(int.bit_count, p.up), p.heights)))
        bucket = reps.setdefault(key, [])
        if not any(are_isomorphic(p, q) for q in bucket):
            bucket.append(p)
    return [q for bucket in reps.values() for q in bucket]


def check_enumeration_by_filtering(max_n: int | None = None) -> CheckResult:
    top = _bound(6, max_n)
    bad = []
    for n in range(2, top + 1):
        found = two_chain_classes_by_filtering(n)
        listed = bichain.enumerate_two_chains(n)
        if len(found) != len(listed):
            bad.append(f"n={n}: {len(found)} classes by filtering, {len(listed)} enumerated")
            continue
        unmatched = [p for p in listed if not any(are_isomorphic(p, q) for q in found)]
        if unmatched:
            bad.append(f"n={n}: {len(unmatched)} enumerated classes not found")
    return _result(f"enumeration matches definitional filtering, n<={top}", bad, top - 1)


# -- 2. recognizers ---------------------------------------------------------------


def _verdicts(p: Poset, definition: bool) -> tuple:
    fast = bichain.is_two_chain_fast(p)
    ideals = bichain.has_two_ideals_each_size(p)
    if definition:
        return bichain.is_two_chain_by_definition(p), fast, ideals
    return fast, ideals


def check_recognizers_exhaustive(max_n: int | None = None) -> CheckResult:
    top = _bound(5, max_n)
    bad, count = [], 0
    for n in range(top + 1):
        for p in all_labelled_posets(n):
            count += 1
            v = _verdicts(p, True)
            if len(set(v)) != 1:
                bad.append(f"covers={covers(p)} n={n} verdicts={v}")
    return _result(f"three recognizers agree on all labelled posets, n<={top}", bad, count)


def check_recognizers_random(max_n: int | None = None, samples: int = 10_000, seed: int = 1) -> CheckResult:
    top = _bound(9, max_n)
    if top < 6:
        return CheckResult("recognizers agree on random posets", True, "skipped: max-n below 6")
    rng = random.Random(seed)
    bad, positives = [], 0
    for k in range(samples):
        n = rng.randint(6, top)
        p = random_poset(n, rng.choice((0.1, 0.2, 0.3, 0.4, 0.5)), rng)
        # the definitional recognizer is slow, so it runs on a subsample
        v = _verdicts(p, k % 20 == 0)
        positives += v[-1]
        if len(set(v)) != 1:
            bad.append(f"covers={covers(p)} n={n} verdicts={v}")
    r = _result(f"recognizers agree on {samples} random posets, 6<=n<={top}", bad, samples)
    return CheckResult(r.name, r.passed, f"{r.detail}, {positives} 2-chains", r.experimental)


# -- 3. structure -----------------------------------------------------------------


def check_two_maximal(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            tops = maximal_elements(p)
            supers = [
                t for t in tops
                if all(p.less(x, t) for x in range(p.n) if x not in tops)
            ]
            if len(tops) != 2 or len(supers) != 1:
                bad.append(f"{binseq.canonical_sequence(p)}: {len(tops)} maximal, {len(supers)} supermaximal")
    return _result(f"two maximal elements, one supermaximal, 3<=n<={top}", bad, count)


def check_round_trips(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            a = binseq.canonical_sequence(p)
            cert = bichain.certificate(p)
            smaller = bichain.remove_supermaximal(p)
            if not bichain.is_two_chain_fast(smaller):
                bad.append(f"{a}: removal is not a 2-chain")
                continue
            # labels above the removed element shift down by one
            kept = cert.other_maximal - (cert.other_maximal > cert.supermaximal)
            if not same_two_chain(bichain.extend_with_supermaximal(smaller, kept), p):
                bad.append(f"{a}: extend(remove(P)) differs")
            for k in sorted(maximal_elements(p)):
                if not same_two_chain(bichain.remove_supermaximal(bichain.extend_with_supermaximal(p, k)), p):
                    bad.append(f"{a}: remove(extend(P, {k})) differs")
    return _result(f"remove/extend round trips, 3<=n<={top}", bad, count)


def check_trivial_automorphisms(max_n: int | None = None) -> CheckResult:
    top = _bound(8, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            k = automorphism_count(p)
            if k != 1:
                bad.append(f"{binseq.canonical_sequence(p)}: {k} automorphisms")
    return _result(f"only the identity automorphism, 3<=n<={top}", bad, count)


def check_top_ideals(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            s = bichain.supermaximal_element(p)
            ideals = ideals_of_size(p, n - 1)
            good = [i for i in ideals if bichain.is_two_chain_fast(p.induced(sorted(i)))]
            if len(ideals) != 2 or len(good) != 1 or s in good[0]:
                bad.append(binseq.canonical_sequence(p))
    return _result(f"exactly one (n-1)-ideal is a 2-chain, 3<=n<={top}", bad, count)


# -- 4. pairs -----------------------------------------------------------------------


def check_pair_counts(max_n: int | None = None) -> CheckResult:
    top = _bound(14, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            c, i = comparable_pair_count(p), incomparable_pair_count(p)
            if c != math.comb(n, 2) + 1 or i != n - 1:
                bad.append(f"{binseq.canonical_sequence(p)}: {c} comparable, {i} incomparable")
    return _result(f"C(n,2)+1 comparable and n-1 incomparable pairs, n<={top}", bad, count)


# -- 5. sequences -------------------------------------------------------------------


def single_insertions(a: str) -> set[str]:
    return {a[:k] + x + a[k:] for k in range(len(a) + 1) for x in "01"}


def check_insertion_rules(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for a in all_words(top):
        count += 1
        lower, upper = binseq.lower_insertions(a), binseq.upper_insertions(a)
        if len(set(lower)) != len(a) + 2:
            bad.append(f"{a!r}: repeated insertion")
        if set(lower) != single_insertions(a):
            bad.append(f"{a!r}: not all single insertions")
        if set(upper) != set(lower):
            bad.append(f"{a!r}: upper and lower lists differ")
        if binseq.w_of(a) != binseq.w_by_matching(a):
            bad.append(f"{a!r}: w rule differs from matching")
    return _result(f"distinct insertions, insertion sets, w rule, |a|<={top}", bad, count)


def check_opposedness_order(max_n: int | None = None) -> CheckResult:
    top = _bound(10, max_n)
    bad, count = [], 0
    for a in all_words(top):
        count += 1
        down = binseq.opposedness_order(a)
        m = len(down)
        closed = all(down[j] & down[i] == down[i] for j in range(m) for i in range(m) if down[j] >> i & 1)
        if not closed:
            bad.append(f"{a!r}: opposedness relation not transitive")
        if tuple(down) != binseq.seq_poset(a).order.down:
            bad.append(f"{a!r}: opposedness differs from index intersection")
    return _result(f"opposedness order is transitive and equals the two-order intersection, |a|<={top}", bad, count)


def complement_map(a: str) -> tuple[int, ...]:
    """Image of each ``a(i)`` under symbolwise complement, as an index of ``ā``'s lower list."""
    target = {s: k for k, s in enumerate(binseq.lower_insertions(binseq.complement(a)))}
    return tuple(target[binseq.complement(s)] for s in binseq.lower_insertions(a))


def reversal_map(a: str) -> tuple[int, ...]:
    target = {s: k for k, s in enumerate(binseq.lower_insertions(binseq.reverse(a)))}
    return tuple(target[s[::-1]] for s in binseq.lower_insertions(a))


def check_symmetries(max_n: int | None = None) -> CheckResult:
    top = _bound(10, max_n)
    bad, count = [], 0
    for a in all_words(top):
        count += 1
        p = binseq.seq_poset(a).order
        if not is_isomorphism(p, binseq.seq_poset(binseq.complement(a)).order, complement_map(a)):
            bad.append(f"{a!r}: complement map is not an isomorphism")
        if not is_isomorphism(dual(p), binseq.seq_poset(binseq.reverse(a)).order, reversal_map(a)):
            bad.append(f"{a!r}: reversal map is not an anti-isomorphism")
    return _result(f"complement isomorphism and reversal duality, |a|<={top}", bad, count)


def check_sequence_classification(max_n: int | None = None) -> CheckResult:
    top = _bound(10, max_n)
    bad, count = [], 0
    for n in range(top + 1):
        words = [a for a in all_words(n, n) if a <= binseq.complement(a)]
        images = []
        for a in words:
            count += 1
            p = binseq.seq_poset(a).order
            if not bichain.is_two_chain_fast(p):
                bad.append(f"{a!r}: not a 2-chain")
            b, img = binseq.sequence_isomorphism(p)
            if not is_isomorphism(p, binseq.seq_poset(b).order, img):
                bad.append(f"{a!r}: recovered map is not an isomorphism")
            images.append(min(b, binseq.complement(b)))
        if images != words:
            bad.append(f"|a|={n}: word recovery is not the identity")
        listed = sorted(binseq.canonical_sequence(p) for p in bichain.enumerate_two_chains(n + 2))
        if listed != words:
            bad.append(f"|a|={n}: enumerated classes differ from words a<=complement(a)")
    return _result(f"words a<=complement(a) biject with 2-chain classes, |a|<={top}", bad, count)


# -- 6. splice ----------------------------------------------------------------------


def check_sequence_splice(max_n: int | None = None) -> CheckResult:
    top = _bound(5, max_n)
    bad, count = [], 0
    for a in all_words(top):
        for b in all_words(top):
            count += 1
            glued = splice.splice(binseq.seq_poset(a).order, binseq.seq_poset(b).order)
            target = binseq.seq_poset(splice.splice_sequences(a, b)).order
            same = are_isomorphic(glued, target) if glued.n <= 10 else same_two_chain(glued, target)
            if not same:
                bad.append(f"({a!r}, {b!r})")
    return _result(f"splice of sequence posets matches spliced word, |a|,|b|<={top}", bad, count)


def alternating_index_map(n: int) -> tuple[int, ...]:
    """0-indexed image in Q(n+2) of each element of the poset of ``1010...`` (length ``n``)."""
    out = []
    for i in range(n + 2):
        if i == n + 1 and i % 2 == 0:
            q = i + 1
        elif i % 2:
            q = i
        else:
            q = i + 2
        out.append(q - 1)
    return tuple(out)


def check_alternating(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad = []
    for n in range(top + 1):
        p = binseq.seq_poset(binseq.alternating(n)).order
        q = splice.make_qn(n + 2)
        if not is_isomorphism(p, q, alternating_index_map(n)):
            bad.append(f"n={n}: explicit map fails")
        if n + 2 <= 8 and not are_isomorphic(p, q):
            bad.append(f"n={n}: oracle disagrees")
    return _result(f"alternating word gives Q(n+2), n<={top}", bad, top + 1)


def check_shape_round_trip(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            shape = splice.splice_decomposition(p)
            rebuilt = splice.reconstruct(shape)
            if sum(shape) != n + 2 * len(shape) - 2 or rebuilt.n != n:
                bad.append(f"{shape}: size identity fails")
            elif splice.splice_decomposition(rebuilt) != shape or not same_two_chain(rebuilt, p):
                bad.append(f"{shape}: reconstruction differs")
    return _result(f"splice shape round trip, 3<=n<={top}", bad, count)


# -- 7. graphs ----------------------------------------------------------------------


def check_caterpillars(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            if not graphs.is_caterpillar(graphs.incomparability_graph(p)):
                bad.append(binseq.canonical_sequence(p))
    return _result(f"incomparability graphs are caterpillars, n<={top}", bad, count)


def check_caterpillar_classes(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad = []
    for n in range(4, top + 1):
        codes = {graphs.caterpillar_code(graphs.incomparability_graph(p)) for p in bichain.enumerate_two_chains(n)}
        if len(codes) != graphs.caterpillar_class_count(n):
            bad.append(f"n={n}: {len(codes)} classes, formula {graphs.caterpillar_class_count(n)}")
    return _result(f"caterpillar classes 2^(n-4)+2^floor((n-4)/2), 4<=n<={top}", bad, max(top - 3, 0))


def check_caterpillar_round_trip(max_n: int | None = None) -> CheckResult:
    top = _bound(9, max_n)
    bad, count = [], 0
    for n in range(2, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            q = graphs.two_chain_from_caterpillar(graphs.incomparability_graph(p))
            if not (are_isomorphic(q, p) or are_isomorphic(q, dual(p))):
                bad.append(binseq.canonical_sequence(p))
    return _result(f"caterpillar to 2-chain lands in {{P, dual P}}, n<={top}", bad, count)


# -- 8. coxeter ---------------------------------------------------------------------


def check_coxeter_counts(max_n: int | None = None) -> CheckResult:
    top = _bound(10, max_n)
    bad, count = [], 0
    for n in range(2, top + 1):
        elems = coxeter.enumerate_coxeter(n)
        if len(elems) != 2 ** (n - 2) or len(set(elems)) != len(elems):
            bad.append(f"n={n}: {len(elems)} elements")
        for w in elems:
            count += 1
            if not coxeter.is_coxeter(w):
                bad.append(f"{coxeter.format_permutation(w)} fails the criterion")
            if coxeter.inversion_length(w) != n - 1 or coxeter.order(w) != n:
                bad.append(f"{coxeter.format_permutation(w)}: length or order wrong")
            if n >= 3 and w == coxeter.inverse(w):
                bad.append(f"{coxeter.format_permutation(w)} is an involution")
        if n <= 8:
            by_filter = sorted(w for w in itertools.permutations(range(n)) if coxeter.is_coxeter(w))
            if by_filter != elems:
                bad.append(f"n={n}: filtering S_n disagrees")
        if n <= 7 and set(elems) != coxeter.coxeter_elements_by_generators(n):
            bad.append(f"n={n}: generator products disagree")
    return _result(f"2^(n-2) Coxeter elements of length n-1 and order n, n<={top}", bad, count)


def check_coxeter_two_chains(max_n: int | None = None) -> CheckResult:
    top = _bound(6, max_n)
    bad, count = [], 0
    for n in range(2, top + 1):
        for w in itertools.permutations(range(n)):
            count += 1
            if bichain.is_two_chain_fast(coxeter.perm_poset(w)) != coxeter.is_coxeter(w):
                bad.append(coxeter.format_permutation(w))
    return _result(f"perm poset is a 2-chain iff Coxeter, all of S_n, n<={top}", bad, count)


def check_coxeter_classes(max_n: int | None = None) -> CheckResult:
    top = _bound(8, max_n)
    bad, count = [], 0
    for n in range(2, top + 1):
        elems = coxeter.enumerate_coxeter(n)
        keys = {w: coxeter.coxeter_key(w) for w in elems}
        for v, w in itertools.combinations_with_replacement(elems, 2):
            count += 1
            if (keys[v] == keys[w]) != (v in (w, coxeter.inverse(w))):
                bad.append(f"{coxeter.format_permutation(v)} vs {coxeter.format_permutation(w)}")
        for p in bichain.enumerate_two_chains(n):
            w = coxeter.coxeter_from_two_chain(p)
            if not coxeter.is_coxeter(w) or not same_two_chain(coxeter.perm_poset(w), p):
                bad.append(f"{binseq.canonical_sequence(p)}: realizing element wrong")
    return _result(f"perm posets of v, w isomorphic iff v in {{w, w^-1}}, n<={top}", bad, count)


# -- 9. counting --------------------------------------------------------------------


def check_count_formulas(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            shape = splice.splice_decomposition(p)
            c, l = len(covers(p)), count_linear_extensions(p)
            if c != counting.cover_count_formula(shape):
                bad.append(f"{shape}: {c} covers")
            if l != counting.linear_extension_recurrence(shape) or l != counting.count_linear_extensions_narrow(p):
                bad.append(f"{shape}: {l} linear extensions")
    return _result(f"cover formula and extension recurrence, 3<=n<={top}", bad, count)


def check_extremal_bounds(max_n: int | None = None) -> CheckResult:
    top = _bound(12, max_n)
    bad = []
    for n in range(3, top + 1):
        c_min, c_max, l_min, l_max = counting.extremal_bounds(n)
        rows = []
        for p in bichain.enumerate_two_chains(n):
            rows.append((splice.splice_decomposition(p), len(covers(p)), count_linear_extensions(p)))
        low, high = (3,) * (n - 2), (n,)
        if min(r[1] for r in rows) != c_min or max(r[1] for r in rows) != c_max:
            bad.append(f"n={n}: cover range wrong")
        if min(r[2] for r in rows) != l_min or max(r[2] for r in rows) != l_max:
            bad.append(f"n={n}: extension range wrong")
        for shape, c, l in rows:
            if (c == c_min or l == l_min) != (shape == low) or (c == c_min) != (l == l_min):
                bad.append(f"n={n}: lower equality at {shape}")
            if (c == c_max or l == l_max) != (shape == high) or (c == c_max) != (l == l_max):
                bad.append(f"n={n}: upper equality at {shape}")
    return _result(f"cover and extension bounds attained only at extremal shapes, n<={top}", bad, max(top - 2, 0))


def check_remove_max(max_n: int | None = None) -> CheckResult:
    top = _bound(10, max_n)
    bad, count = [], 0
    for n in range(3, top + 1):
        for p in bichain.enumerate_two_chains(n):
            count += 1
            shape = splice.splice_decomposition(p)
            q = splice.reconstruct(shape)
            sup, other = bichain.top_pair(q)
            first, second = counting.remove_max_shapes(shape)
            minus_super = q.induced([x for x in range(n) if x != sup])
            minus_other = q.induced([x for x in range(n) if x != other])
            if not same_two_chain(splice.reconstruct(first), minus_super):
                bad.append(f"{shape}: supermaximal removal")
            if not are_isomorphic(second, minus_other):
                bad.append(f"{shape}: other maximal removal")
    return _result(f"shapes after removing each maximal element, n<={top}", bad, count)


# -- 10. r-chains (experimental) ----------------------------------------------------


def check_rchain(max_n: int | None = None) -> list[CheckResult]:
    top = _bound(7, max_n)
    out = []
    fixture = rchain.three_chain_fixture()
    ok = rchain.is_r_chain_by_definition(fixture, 3)
    out.append(CheckResult("7-element fixture is a 3-chain", ok, f"is_r_chain_by_definition = {ok}", True))
    d = rchain.dimension_of(fixture)
    out.append(CheckResult("7-element fixture has dimension 3", d == 3, f"computed dimension {d}", True))
    dq = rchain.dimension_of(rchain.make_qnr(7, 3))
    out.append(CheckResult("Q(7)^3 has dimension 3", dq == 3, f"computed dimension {dq}", True))
    if top >= 7:
        classes = {k: rchain.r_chain_classes(k, 3) for k in range(4, 7)}
        found = rchain.splice_witnesses(fixture, 3, classes)
        sizes = {k: len(v) for k, v in classes.items()}
        out.append(CheckResult(
            "fixture is not a splice of smaller 3-chains", not found,
            f"{len(found)} splice witnesses; 3-chain classes by size {sizes}", True,
        ))
    for n in range(3, top + 1):
        rep = rchain.labelled_rchain_census(n, 3)
        out.append(CheckResult(
            f"labelled 3-chains of size {n} number 3^{n - 3}",
            rep.agree and bool(rep.exhaustive_agree) and rep.generated_all_valid,
            f"construction {rep.labelled_count_observed}, exhaustive {rep.exhaustive_count}, "
            f"conjectured {rep.labelled_count_conjectured}",
            True,
        ))
    return out


# -- registry -----------------------------------------------------------------------

Check = Callable[[int | None], "CheckResult | list[CheckResult]"]

SUITES: dict[str, list[Check]] = {
    "enumeration": [check_enumeration_counts, check_enumeration_by_filtering],
    "recognizers": [check_recognizers_exhaustive, check_recognizers_random],
    "structure": [check_two_maximal, check_round_trips, check_trivial_automorphisms, check_top_ideals],
    "pairs": [check_pair_counts],
    "sequences": [check_insertion_rules, check_opposedness_order, check_symmetries, check_sequence_classification],
    "splice": [check_sequence_splice, check_alternating, check_shape_round_trip],
    "graphs": [check_caterpillars, check_caterpillar_classes, check_caterpillar_round_trip],
    "coxeter": [check_coxeter_counts, check_coxeter_two_chains, check_coxeter_classes],
    "counting": [check_count_formulas, check_extremal_bounds, check_remove_max],
    "rchain": [check_rchain],
}


def run_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    out: list[CheckResult] = []
    for suite in names:
        if suite not in SUITES:
            raise KeyError(suite)
        for check in SUITES[suite]:
            res = check(max_n)
            out.extend(res if isinstance(res, list) else [res])
    return out
