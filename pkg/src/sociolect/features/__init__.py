from sociolect.features.bleach import bleach_token, token_frequencies
from sociolect.features.conllu import read_conllu
from sociolect.features.featurize import FeatureSet, featurize
from sociolect.features.ngrams import extract_ngrams
from sociolect.features.syntax import dep_triplets, pos_sequence
from sociolect.features.tokenize import tokenize
from sociolect.features.vocabulary import Vocabulary, build_vocabulary, vectorize

__all__ = [
    "FeatureSet",
    "Vocabulary",
    "bleach_token",
    "build_vocabulary",
    "dep_triplets",
    "extract_ngrams",
    "featurize",
    "pos_sequence",
    "read_conllu",
    "token_frequencies",
    "tokenize",
    "vectorize",
]
