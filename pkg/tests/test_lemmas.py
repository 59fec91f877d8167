import pytest

from vtchroma.algorithms.generators import blow_up, cycle
from vtchroma.controllers.lemmas import LemmaController
from vtchroma.enums import LemmaSuite


@pytest.fixture(scope="module")
def lemmas() -> LemmaController:
    return LemmaController(seed=41)


class TestCorpora:
    def test_random_corpus_is_seeded(self, lemmas):
        assert lemmas.random_corpus(10, 8) == LemmaController(seed=41).random_corpus(10, 8)
        assert all(1 <= g.n <= 8 for g in lemmas.random_corpus(20, 8))

    def test_circulant_corpus_is_connected(self, lemmas):
        assert all(g.is_connected() for g in lemmas.circulant_corpus(9))


class TestSuites:
    def test_single_cases(self, lemmas, prism, petersen):
        assert lemmas.cluster_dichotomy(blow_up(cycle(5), 2)) is True
        assert lemmas.cluster_dichotomy(petersen) is None
        assert lemmas.lemma7(prism) is True
        assert lemmas.kostochka(blow_up(cycle(5), 2)) is None
        assert lemmas.fajtlowicz(petersen) is True

    def test_all_suites_pass(self, lemmas):
        corpus = lemmas.random_corpus(150, 10) + lemmas.circulant_corpus(10)
        results = lemmas.run(list(LemmaSuite), corpus, haxell_instances=100)
        assert [r.suite for r in results] == list(LemmaSuite)
        for result in results:
            assert result.passed, (result.suite, result.witnesses)
            assert result.cases > 0
