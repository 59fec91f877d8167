from enum import Enum


class ClusterKind(str, Enum):
    EDGELESS = "edgeless"
    CYCLE_BLOWUP = "cycle_blowup"
    STAR_COMPONENTS = "star_components"
    OTHER = "other"
    NOT_APPLICABLE = "not_applicable"


class CheckName(str, Enum):
    MAIN_CONJECTURE = "main_conjecture"
    BORODIN_KOSTOCHKA = "borodin_kostochka"
    BORODIN_KOSTOCHKA_CONJECTURE = "borodin_kostochka_conjecture"
    BIG_CLIQUES = "big_cliques"
    DENSE_NEIGHBORHOODS = "dense_neighborhoods"
    REED = "reed"
    FRACTIONAL_THEOREM = "fractional_theorem"
    FRACTIONAL_CONSISTENCY = "fractional_consistency"
    FAJTLOWICZ = "fajtlowicz"
    LEMMA7 = "lemma7"
    HAJNAL = "hajnal"
    KOSTOCHKA = "kostochka"
    CLUSTER_DICHOTOMY = "cluster_dichotomy"
    STRONG_CONJECTURE = "strong_conjecture"
    REDUCTION_PIPELINE = "reduction_pipeline"
    CATLIN_FORMULA = "catlin_formula"
    LINE_GRAPH_BOUND = "line_graph_bound"


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    OUT_OF_HYPOTHESIS = "out_of_hypothesis"
    UNDECIDED = "undecided"


class FamilyKind(str, Enum):
    CIRCULANT = "circulant"
    CATLIN = "catlin"
    KNESER = "kneser"
    BLOWUP = "blowup"
    HAJOS = "hajos"
    FILE = "file"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class LemmaSuite(str, Enum):
    HAJNAL = "hajnal"
    KOSTOCHKA = "kostochka"
    CEK = "cek"
    CLUSTER_DICHOTOMY = "cluster_dichotomy"
    LEMMA7 = "lemma7"
    FAJTLOWICZ = "fajtlowicz"
    HAXELL = "haxell"
