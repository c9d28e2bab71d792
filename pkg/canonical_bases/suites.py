"""Theorem-verification suites.

Each suite takes a RunConfig and returns a Report. Cases are enumerated in a
fixed order (exhaustively at rank <= 2, by seeded sampling above), evaluated
with joblib and gathered in enumeration order.
"""

import itertools

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from canonical_bases import tropical, weyl
from canonical_bases.algebra.canonical import canonical_coordinates, dual_canonical, is_dual_canonical, lusztig_parameter
from canonical_bases.algebra.elements import equal_in_algebra
from canonical_bases.algebra.minors import (
    d_form,
    flag_minor,
    flag_minors,
    is_multiplicative,
    is_real,
    n_vector,
    order_generators,
    q_commutation,
)
from canonical_bases.algebra.pbw import dual_pbw_coordinates, dual_pbw_monomial, exponents_of_weight
from canonical_bases.algebra.strings import delta_max, pbw_string
from canonical_bases.coeff import proportionality
from canonical_bases.utils.misc_utils import PreconditionError
from canonical_bases.utils.report_utils import Report

# rank-2 samedomain scan and fan box stay small enough to be exhaustive
FAN_BOX = 4
TRIPLE_BOX = 2
SAMPLED_TRIPLE_BOX = 3


# enumeration helpers

def weights_up_to(rank, bound):
    # Input: rank - rank n
    #        bound - max tr
    # Output: nonzero weights with tr <= bound, sorted by (tr, weight)
    out = [w for w in itertools.product(range(bound + 1), repeat=rank) if 0 < sum(w) <= bound]
    return sorted(out, key=lambda w: (sum(w), w))


def parameters_up_to(word, bound):
    rank = weyl.rank_from_length(len(word))
    return [m for weight in weights_up_to(rank, bound) for m in exponents_of_weight(tuple(word), weight)]


def tr_of(word, m):
    return sum(tropical.weight_of_parameter(word, m))


def sample(items, size, rng):
    items = list(items)
    if len(items) <= size:
        return items
    idx = sorted(rng.choice(len(items), size=size, replace=False))
    return [items[i] for i in idx]


def run_cases(fn, cases, n_jobs, desc):
    results = Parallel(n_jobs=n_jobs)(delayed(fn)(*case) for case in tqdm(cases, desc=desc))
    return [record for records in results for record in records]


def is_exhaustive(config):
    return config.rank <= 2


def adapted_suite_words(config):
    if isinstance(config.word, tuple) and weyl.is_adapted(config.word):
        return [config.word]
    if is_exhaustive(config):
        return sorted(weyl.adapted_words(config.rank))
    # one representative per commutation class
    return sorted({weyl.adapted_word(quiver) for quiver in weyl.all_quivers(config.rank)})


def base_word(config):
    if isinstance(config.word, tuple):
        return config.word
    return weyl.seed_word(config.rank)


def _exps(m):
    return [list(x) for x in m]


def _leading_check(coords, target):
    # coords[target] == 1 and every other coefficient in qZ[q]
    bad = []
    for n, c in sorted(coords.items()):
        if n == tuple(target):
            if proportionality(c, 1) != (1, 0):
                bad.append(list(n))
        elif not c.is_laurent() or not c.as_laurent().in_q_zq():
            bad.append(list(n))
    if tuple(target) not in coords:
        bad.append(list(target))
    return bad


# analogue

def _real_parameter(base, m):
    return is_real(dual_canonical(base, m, verify=False), base)


def _analogue_case(base, m, m2, bound):
    b, b2 = dual_canonical(base, m, verify=False), dual_canonical(base, m2, verify=False)
    inputs = {"word": list(base), "pair": _exps([m, m2])}
    qc = q_commutation(b, b2, base)
    same = tropical.same_linearity_domain(base, m, m2)
    witness = tropical.separating_wall(base, m, m2)
    domain = {
        "verdict": same,
        "witness_word": list(witness[0]) if witness else None,
        "witness_wall": witness[1] if witness else None,
    }
    records = []
    if qc is not None:
        records.append({"case": "analogue", "verdict": same, "inputs": inputs, "q_exponent": qc, "domain": domain})
    else:
        records.append({"case": "converse", "verdict": None, "inputs": inputs, "domain": domain})
    mult = is_multiplicative(b, b2, base)
    if mult is not None:
        records.append({"case": "reineke", "verdict": qc is not None, "inputs": inputs,
                        "product": {"parameter": list(mult[0]), "q_power": mult[1]}})
    if 2 * max(tr_of(base, m), tr_of(base, m2)) <= bound and _real_parameter(base, m) and _real_parameter(base, m2):
        records.append({"case": "question", "verdict": None, "inputs": inputs,
                        "multiplicative": mult is not None, "q_commute": qc is not None})
    return records


def _remark_case(base, m, m2, m3):
    # q-commutation analogue of the samedomain statement, recorded only
    total = tuple(a + b for a, b in zip(m, m2))
    b3 = dual_canonical(base, m3, verify=False)
    inputs = {"word": list(base), "parts": _exps([m, m2]), "q": list(m3)}
    if q_commutation(dual_canonical(base, total, verify=False), b3, base) is None:
        return []
    holds = all(q_commutation(dual_canonical(base, p, verify=False), b3, base) is not None for p in (m, m2))
    return [{"case": "remark_qcommute", "verdict": None, "inputs": inputs, "holds": holds}]


def run_analogue(config):
    base = base_word(config)
    rng = np.random.default_rng(config.seed)
    params = parameters_up_to(base, config.weight_bound)
    pairs = [(m, m2) for m, m2 in itertools.combinations_with_replacement(params, 2)
             if tr_of(base, m) + tr_of(base, m2) <= config.weight_bound]
    if not is_exhaustive(config):
        pairs = sample(pairs, config.sample_size, rng)
    report = Report("analogue", config.to_json(), notes=[
        "analogue: q-commuting pairs must share a linearity domain",
        "reineke: multiplicative pairs must q-commute",
        "converse, question and remark_qcommute cases are recorded data",
    ])
    records = run_cases(_analogue_case, [(base, m, m2, config.weight_bound) for m, m2 in pairs],
                        config.n_jobs, "analogue pairs")
    report.extend(records)

    remark_cases = []
    for record in records:
        if record["case"] != "analogue":
            continue
        m, m2 = (tuple(x) for x in record["inputs"]["pair"])
        total_tr = tr_of(base, m) + tr_of(base, m2)
        for m3 in params:
            if total_tr + tr_of(base, m3) <= config.weight_bound:
                remark_cases.append((base, m, m2, m3))
    remark_cases = sample(remark_cases, config.sample_size, rng)
    report.extend(run_cases(_remark_case, remark_cases, config.n_jobs, "remark q-commute"))
    return report


# pbwstring

def _pbwstring_case(word, m, targets):
    b = dual_canonical(word, m)
    inputs = {"word": list(word), "m": list(m)}
    records = []
    found = pbw_string(b, word)
    records.append({"case": "pbw_string", "verdict": found == tuple(m), "inputs": inputs, "found": list(found)})
    leading = lusztig_parameter(b, word)
    records.append({"case": "lusztig_parameter", "verdict": leading == tuple(m), "inputs": inputs,
                    "found": list(leading)})
    residue, r = delta_max(word[0], dual_pbw_monomial(word, m))
    expected = dual_pbw_monomial(word, (0,) + tuple(m[1:]))
    records.append({"case": "delta_pbw", "verdict": r == m[0] and equal_in_algebra(residue, expected),
                    "inputs": inputs, "phi": r})
    for target in targets:
        tropical_image = tropical.reparametrize(word, target, m)
        algebraic_image = lusztig_parameter(b, target)
        records.append({"case": "oracle", "verdict": tropical_image == algebraic_image,
                        "inputs": dict(inputs, target=list(target)),
                        "tropical": list(tropical_image), "algebraic": list(algebraic_image)})
    return records


def run_pbwstring(config):
    rng = np.random.default_rng(config.seed)
    words = weyl.sorted_reduced_words(config.rank, config.max_rank)
    if isinstance(config.word, tuple):
        words = (config.word,)
    cases = []
    for word in words:
        for m in parameters_up_to(word, config.weight_bound):
            if is_exhaustive(config):
                cases.append((word, m, tuple(w for w in weyl.sorted_reduced_words(config.rank) if w != word)))
            else:
                others = [w for w in weyl.sorted_reduced_words(config.rank) if w != word]
                cases.append((word, m, (others[int(rng.integers(len(others)))],)))
    if not is_exhaustive(config):
        cases = sample(cases, config.sample_size, rng)
    report = Report("pbwstring", config.to_json(), notes=[
        "pbw_string and lusztig_parameter must return the parameter of B*(m)",
        "oracle: tropical reparametrization equals the algebraic Lusztig parameter over the target word",
    ])
    report.extend(run_cases(_pbwstring_case, cases, config.n_jobs, "pbw strings"))
    return report


# fan

def _triple_case(base, parts, q):
    inputs = {"word": list(base), "parts": _exps(parts), "q": list(q)}
    try:
        verdict = tropical.samedomain_triple_check(base, parts, q)
    except PreconditionError:
        return []
    return [{"case": "samedomain", "verdict": verdict, "inputs": inputs}]


def run_fan(config):
    rng = np.random.default_rng(config.seed)
    report = Report("fan", config.to_json(), notes=[
        "fan: rank-2 linearity domains are two closed half-space cones meeting in a common face",
        "samedomain: parts, their sum and q share a linearity domain whenever the hypotheses hold",
    ])
    for word in weyl.sorted_reduced_words(2):
        result = tropical.check_fan(word, FAN_BOX)
        verdict = result["is_fan"] and result["domain_count"] == 2
        report.add_case("fan", verdict, {"word": list(word), "box": FAN_BOX}, result=result)

    rank = max(config.rank, 2)
    base = base_word(config) if config.rank >= 2 else weyl.seed_word(2)
    cases = []
    if rank == 2:
        points = [tuple(int(x) for x in row) for row in tropical.lattice_box(3, TRIPLE_BOX)]
        for parts in itertools.combinations_with_replacement(points, 2):
            for q in points:
                cases.append((base, parts, q))
        # rank 2 runs also sample the seed word of rank 3
        if config.max_rank >= 3:
            rank, base = 3, weyl.seed_word(3)
    if rank >= 3:
        length = weyl.longest_length(rank)
        for _ in range(config.sample_size):
            draw = rng.integers(0, SAMPLED_TRIPLE_BOX + 1, size=(3, length))
            parts = (tuple(int(x) for x in draw[0]), tuple(int(x) for x in draw[1]))
            q = tuple(int(x) for x in draw[2])
            cases.append((base, parts, q))
    records = run_cases(_triple_case, cases, config.n_jobs, "samedomain triples")
    report.extend(records)
    report.record_data("samedomain", {"candidates": len(cases), "tested": len(records)})
    return report


# graded

def _graded_minor_case(word, k, m, bound):
    nk = n_vector(word, k)
    target = tuple(a + b for a, b in zip(nk, m))
    inputs = {"word": list(word), "k": k, "m": list(m)}
    minor = flag_minor(word, k)
    shift = d_form(word, nk, m)
    records = []
    product = (minor * dual_pbw_monomial(word, m)).shift(shift)
    bad = _leading_check(dual_pbw_coordinates(product, word), target)
    records.append({"case": "graded_ii", "verdict": not bad, "inputs": inputs, "offending": bad})
    if tr_of(word, target) <= bound:
        product = (minor * dual_canonical(word, m, verify=False)).shift(shift)
        coords = canonical_coordinates(product, word)
        bad = _leading_check(coords, target) + [list(n) for n in coords if n > target]
        records.append({"case": "increasing_ii", "verdict": not bad, "inputs": inputs, "offending": bad})
    return records


def _graded_pair_case(word, m, n):
    target = tuple(a + b for a, b in zip(m, n))
    inputs = {"word": list(word), "pair": _exps([m, n])}
    product = (dual_canonical(word, m, verify=False) * dual_canonical(word, n, verify=False)).shift(d_form(word, m, n))
    coords = canonical_coordinates(product, word)
    bad = [list(l) for l in coords if l > target]
    if proportionality(coords.get(target, 0), 1) != (1, 0):
        bad.append(list(target))
    return [{"case": "graded_i", "verdict": not bad, "inputs": inputs, "offending": bad}]


def _minor_pair_case(word, k, l):
    nk, nl = n_vector(word, k), n_vector(word, l)
    inputs = {"word": list(word), "k": k, "l": l}
    qc = q_commutation(flag_minor(word, k), flag_minor(word, l), word)
    expected = d_form(word, nk, nl) - d_form(word, nl, nk)
    return [{"case": "A_i", "verdict": qc == expected, "inputs": inputs, "q_exponent": qc, "expected": expected}]


def _order_cases(word):
    records = []
    generators = order_generators(word)
    for top, support in generators:
        inputs = {"word": list(word), "generator": list(top)}
        lower = [list(n) for n in support if not n < top]
        records.append({"case": "ordering_i", "verdict": not lower, "inputs": inputs, "offending": lower})
        for k in range(1, len(word) + 1):
            nk = n_vector(word, k)
            ceiling = d_form(word, nk, top)
            above = [list(n) for n in support if d_form(word, nk, n) > ceiling]
            records.append({"case": "increasing_i", "verdict": not above, "inputs": dict(inputs, k=k),
                            "offending": above})
    return records


def run_graded(config):
    rng = np.random.default_rng(config.seed)
    bound = config.weight_bound
    report = Report("graded", config.to_json(), notes=[
        "graded_i: q^d(m,n) B*(m) B*(n) has leading term B*(m+n) with lex-lower corrections",
        "graded_ii and increasing_ii: minor times a dual PBW / dual canonical element",
        "A_i: minors of one word q-commute with exponent d(n_k,n_l) - d(n_l,n_k)",
    ])
    words = adapted_suite_words(config)
    minor_cases, pair_cases, commute_cases = [], [], []
    for word in words:
        params = parameters_up_to(word, bound)
        for k in range(1, len(word) + 1):
            nk_tr = tr_of(word, n_vector(word, k))
            minor_cases.extend((word, k, m, bound) for m in params if nk_tr + tr_of(word, m) <= bound)
        pair_cases.extend((word, m, n) for m, n in itertools.product(params, repeat=2)
                          if tr_of(word, m) + tr_of(word, n) <= bound)
        commute_cases.extend((word, k, l) for k, l in itertools.combinations(range(1, len(word) + 1), 2)
                             if tr_of(word, n_vector(word, k)) + tr_of(word, n_vector(word, l)) <= bound)
    if not is_exhaustive(config):
        minor_cases = sample(minor_cases, config.sample_size, rng)
        pair_cases = sample(pair_cases, config.sample_size, rng)
    report.extend(run_cases(_graded_minor_case, minor_cases, config.n_jobs, "graded minors"))
    report.extend(run_cases(_graded_pair_case, pair_cases, config.n_jobs, "graded pairs"))
    report.extend(run_cases(_minor_pair_case, commute_cases, config.n_jobs, "minor q-commutation"))
    report.extend(run_cases(_order_cases, [(w,) for w in words], config.n_jobs, "order generators"))
    return report


# main

def _product(elements):
    out = elements[0]
    for x in elements[1:]:
        out = out * x
    return out


def _minor_commutations(base, minors, trs, bound):
    # only pairs that fit under the bound together
    elements = [dual_canonical(base, fm.parameter, verify=False) for fm in minors]
    pairs = {}
    for a, b in itertools.combinations(range(len(minors)), 2):
        if trs[a] + trs[b] <= bound:
            pairs[(a, b)] = q_commutation(elements[a], elements[b], base) is not None
    return pairs


def _expected_q_power(base, parameters):
    # B*(m_1) ... B*(m_s) = q^(-sum_{a<b} d(m_a, m_b)) B*(m_1 + ... + m_s)
    return -sum(d_form(base, parameters[a], parameters[b])
                for a, b in itertools.combinations(range(len(parameters)), 2))


def _main_case(base, chosen, params, bound):
    parameters = [fm.parameter for fm in chosen]
    c = _product([dual_canonical(base, p, verify=False) for p in parameters])
    c_tr = sum(c.weight)
    total = tuple(sum(col) for col in zip(*parameters))
    inputs = {"word": list(base), "minors": [fm.to_json() for fm in chosen]}
    records = []
    found = is_dual_canonical(c, base)
    expected = (total, _expected_q_power(base, parameters))
    records.append({"case": "cross_word", "verdict": found == expected, "inputs": inputs,
                    "expected": {"parameter": list(expected[0]), "q_power": expected[1]},
                    "product": None if found is None else {"parameter": list(found[0]), "q_power": found[1]}})
    if 2 * c_tr <= bound:
        records.append({"case": "real_product", "verdict": is_real(c, base), "inputs": inputs})
    for m in params:
        if c_tr + tr_of(base, m) > bound:
            continue
        b = dual_canonical(base, m, verify=False)
        qc = q_commutation(c, b, base)
        if qc is None:
            continue
        found = is_dual_canonical(c * b, base)
        records.append({"case": "main", "verdict": found is not None, "inputs": dict(inputs, b=list(m)),
                        "q_exponent": qc,
                        "product": None if found is None else {"parameter": list(found[0]), "q_power": found[1]}})
    return records


def minor_subsets(base, minors, max_size, bound):
    # Input: base - word the minor parameters are expressed over
    #        minors - FlagMinor list, possibly from different adapted words
    #        max_size - largest subset size
    #        bound - max tr of the product
    # Output: index tuples of pairwise q-commuting minors with tr <= bound
    trs = [tr_of(base, fm.parameter) for fm in minors]
    commute = _minor_commutations(base, minors, trs, bound)
    subsets = []
    for size in range(1, max_size + 1):
        for idx in itertools.combinations(range(len(minors)), size):
            if sum(trs[a] for a in idx) > bound:
                continue
            if all(commute[pair] for pair in itertools.combinations(idx, 2)):
                subsets.append(idx)
    return subsets


def run_main(config):
    rng = np.random.default_rng(config.seed)
    bound = config.weight_bound
    base = base_word(config)
    report = Report("main", config.to_json(), notes=[
        "minors are the flag minors of every adapted word, reparametrized to the base word",
        "cross_word: a product of pairwise q-commuting minors is q^(-sum d(m_a, m_b)) B*(sum m_a)",
        "main: c * b is dual canonical up to a power of q for every such product c and every "
        "dual canonical b q-commuting with c",
        "minor subsets are capped at max_minor_subset = {}".format(config.max_minor_subset),
        "real_product: products of q-commuting minors are real",
    ])
    minors = [fm for fm in flag_minors(config.rank, base=base, max_rank=config.max_rank)
              if tr_of(base, fm.parameter) <= bound]
    report.record_data("flag_minors", [fm.to_json() for fm in minors])
    params = parameters_up_to(base, bound)
    cases = [(base, [minors[a] for a in idx], params, bound)
             for idx in minor_subsets(base, minors, config.max_minor_subset, bound)]
    if not is_exhaustive(config):
        cases = sample(cases, config.sample_size, rng)
    report.extend(run_cases(_main_case, cases, config.n_jobs, "minor products"))
    return report


def get_suite_function(name):
    if name == "analogue":
        return run_analogue
    elif name == "pbwstring":
        return run_pbwstring
    elif name == "fan":
        return run_fan
    elif name == "graded":
        return run_graded
    elif name == "main":
        return run_main
    else:
        raise PreconditionError("Unknown suite {}".format(name))


def get_all_suite_names():
    return ["analogue", "pbwstring", "fan", "graded", "main"]
