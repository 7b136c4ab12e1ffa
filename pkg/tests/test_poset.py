import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperforman import (
    ChainCapExceeded,
    NotRanked,
    NotRankedError,
    Poset,
    RankFunction,
    SimplicialComplex,
    face_poset,
    poset_from_hypernetwork,
)

from helpers import brute_chains, brute_covers, brute_rank_candidates

F = frozenset


def chain_poset(*sets):
    return Poset.from_sets([F(s) for s in sets])


@st.composite
def set_families(draw, max_universe=6, max_sets=8):
    universe = list(range(draw(st.integers(1, max_universe))))
    fam = draw(
        st.lists(
            st.frozensets(st.sampled_from(universe), min_size=1),
            min_size=1,
            max_size=max_sets,
        )
    )
    return [F(s) for s in fam]


class TestConstruction:
    def test_example_network_poset(self, example_net):
        p = poset_from_hypernetwork(example_net)
        labels = [p.element_label(i) for i in range(len(p))]
        assert labels == ["{a}", "{b}", "{c}", "{a,b}", "{b,c}", "{a,b,c}"]
        assert set(p.covers) == brute_covers(p.elements)
        assert len(p.covers) == 6

    def test_without_singletons(self, example_net):
        p = poset_from_hypernetwork(example_net, include_singletons=False)
        assert [p.element_label(i) for i in range(len(p))] == [
            "{a,b}",
            "{b,c}",
            "{a,b,c}",
        ]
        assert len(p.covers) == 2

    def test_duplicate_sets_are_merged(self):
        p = Poset.from_sets([F("a"), F("a")])
        assert len(p) == 1

    def test_bad_cover_pair_rejected(self):
        with pytest.raises(ValueError):
            Poset((F("a"), F("b")), frozenset({(0, 1)}))

    @given(set_families())
    def test_covers_match_brute_force(self, fam):
        p = Poset.from_sets(fam)
        assert set(p.covers) == brute_covers(p.elements)

    @given(set_families())
    def test_reachability_equals_comparability(self, fam):
        p = Poset.from_sets(fam)
        above = {i: set(p._above[i]) for i in range(len(p))}
        for i in range(len(p)):
            for j in range(len(p)):
                assert (j in above[i]) == (p.elements[i] < p.elements[j])


class TestRankFunction:
    def test_example_ranks(self, example_net):
        p = poset_from_hypernetwork(example_net)
        rf = p.rank_function()
        assert isinstance(rf, RankFunction)
        assert rf.ranks == (0, 0, 0, 1, 1, 2)
        assert rf.max_rank == 2
        assert rf.level_counts() == (3, 2, 1)

    def test_conflict_witness(self):
        # a < b < d and c < d with a, c minimal: d needs rank 1 and 2
        p = chain_poset("a", "ab", "cd", "abcd")
        rf = p.rank_function()
        assert isinstance(rf, NotRanked)
        assert rf.element == F("abcd")
        assert rf.ranks == (1, 2)

    def test_antichain_all_rank_zero(self):
        p = Poset.from_sets([F("a"), F("b"), F("c")])
        rf = p.rank_function()
        assert rf.ranks == (0, 0, 0)
        assert rf.max_rank == 0

    @given(set_families())
    def test_propagation_matches_exhaustive_oracle(self, fam):
        # the oracle unions over all cover paths, so it is order blind
        p = Poset.from_sets(fam)
        cand = brute_rank_candidates(p.elements, p.covers)
        rf = p.rank_function()
        if all(len(c) == 1 for c in cand):
            assert isinstance(rf, RankFunction)
            assert rf.ranks == tuple(next(iter(c)) for c in cand)
        else:
            assert isinstance(rf, NotRanked)
            assert len(cand[rf.element_index]) > 1
            assert set(rf.ranks) <= cand[rf.element_index]


class TestRankedEuler:
    def test_example_value(self, example_net):
        p = poset_from_hypernetwork(example_net)
        assert p.ranked_euler_characteristic() == 3 - 2 + 1 == 2

    def test_boolean_lattice_with_bottom(self):
        p = Poset.from_sets([F(""), F("a"), F("b"), F("ab")])
        assert len(p) == 4
        assert p.rank_function().level_counts() == (1, 2, 1)
        assert p.ranked_euler_characteristic() == 0

    def test_single_element(self):
        p = Poset.from_sets([F("a")])
        assert p.ranked_euler_characteristic() == 1

    def test_empty_poset(self):
        p = Poset.from_sets([])
        assert p.ranked_euler_characteristic() == 0

    def test_unranked_raises_with_witness(self):
        p = chain_poset("a", "ab", "cd", "abcd")
        with pytest.raises(NotRankedError, match="rank 1 and rank 2"):
            p.ranked_euler_characteristic()


class TestFacePoset:
    def test_single_triangle(self):
        k = SimplicialComplex.from_faces(["a", "b", "c"], [(0, 1, 2)])
        p = face_poset(k)
        assert len(p) == 7
        rf = p.rank_function()
        assert rf.level_counts() == (3, 3, 1)
        assert p.ranked_euler_characteristic() == 1

    def test_single_edge(self):
        k = SimplicialComplex.from_faces(["a", "b"], [(0, 1)])
        p = face_poset(k)
        assert len(p) == 3
        assert p.ranked_euler_characteristic() == 1

    def test_empty_complex(self):
        k = SimplicialComplex.from_faces([], [])
        p = face_poset(k)
        assert len(p) == 0
        assert p.ranked_euler_characteristic() == 0

    def test_rank_equals_dimension(self, corpus):
        for name, k in corpus.items():
            p = face_poset(k)
            rf = p.rank_function()
            assert isinstance(rf, RankFunction), name
            for i, e in enumerate(p.elements):
                assert rf.ranks[i] == len(e) - 1, name

    def test_covers_agree_with_generic_reduction(self, corpus):
        # the codimension-1 fast path must match the subset-test route
        for name in ("triangle", "tetrahedron", "example_order"):
            k = corpus[name]
            p = face_poset(k)
            q = Poset.from_sets(p.elements)
            assert p == q, name


class TestChains:
    def test_chain_poset_powerset(self):
        p = chain_poset("a", "ab", "abc")
        chains = list(p.chains())
        assert len(chains) == 7  # 2^3 - 1
        assert set(chains) == brute_chains(p.elements)

    def test_antichain_only_singletons(self):
        p = Poset.from_sets([F("a"), F("b"), F("c")])
        assert list(p.chains()) == [(0,), (1,), (2,)]

    def test_example_bounded_count(self, example_net):
        p = poset_from_hypernetwork(example_net)
        chains = list(p.chains(max_length=3))
        assert len(chains) == 19  # 6 + 9 + 4
        assert set(chains) == brute_chains(p.elements, 3)

    def test_lexicographic_emission(self, example_net):
        p = poset_from_hypernetwork(example_net)
        chains = list(p.chains(max_length=3))
        assert chains == sorted(chains)
        assert len(set(chains)) == len(chains)

    def test_cap_is_an_error_not_truncation(self, example_net):
        p = poset_from_hypernetwork(example_net)
        with pytest.raises(ChainCapExceeded, match="10"):
            list(p.chains(cap=10))
        assert len(list(p.chains(cap=19))) == 19

    def test_cap_not_hit_when_consumer_stops_early(self, example_net):
        p = poset_from_hypernetwork(example_net)
        gen = p.chains(cap=3)
        assert [next(gen) for _ in range(3)] == [(0,), (0, 3), (0, 3, 5)]

    @given(set_families())
    def test_pair_chains_count_comparable_pairs(self, fam):
        p = Poset.from_sets(fam)
        pairs = [c for c in p.chains(max_length=2) if len(c) == 2]
        assert len(pairs) == p.comparable_pair_count()

    @given(set_families(max_universe=5, max_sets=6))
    @settings(max_examples=50)
    def test_bounded_chains_match_brute_force(self, fam):
        p = Poset.from_sets(fam)
        assert set(p.chains(max_length=3)) == brute_chains(p.elements, 3)


class TestSerialization:
    def test_json_obj_shape(self, example_net):
        p = poset_from_hypernetwork(example_net)
        obj = p.to_json_obj()
        assert obj["elements"][0] == ["a"]
        assert obj["elements"][5] == ["a", "b", "c"]
        assert [0, 3] in obj["covers"]
        assert len(obj["covers"]) == 6
