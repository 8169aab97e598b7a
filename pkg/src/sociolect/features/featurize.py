import pydantic as pyd

from collections import Counter
from typing import Optional
from sociolect.exc import ConsistencyError
from sociolect.features.bleach import bleach_tokens, token_frequencies
from sociolect.features.ngrams import extract_ngrams
from sociolect.features.syntax import dep_triplets, pos_sequence
from sociolect.features.tokenize import tokenize
from sociolect.features.vocabulary import Vocabulary, build_vocabulary, vectorize
from sociolect.logger import logger
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.features import ParsedSentence
from sociolect.schemas.labeling import LabeledDocument
from sociolect.schemas.pipeline import FeatureRecord


class FeatureSet(pyd.BaseModel):
    representation: Representation
    records: list[FeatureRecord]
    sparse_vocab: Optional[Vocabulary] = None
    sequence_vocab: Optional[Vocabulary] = None

    class Config:
        arbitrary_types_allowed = True

    def split(self, name: str) -> list[FeatureRecord]:
        return [record for record in self.records if record.split == name]


class SymbolStream:
    "Turns labeled documents into one representation's symbol sequence"

    def __init__(
        self,
        representation: Representation,
        train_docs: list[LabeledDocument],
        parses: Optional[dict[str, list[ParsedSentence]]] = None,
        freq_buckets: bool = False,
    ) -> None:
        self.representation = representation
        self._parses = parses or {}
        self._freq_buckets = freq_buckets
        self._frequencies: Counter = Counter()
        if representation is Representation.BLEACH:
            self._frequencies = token_frequencies(tokenize(doc.text) for doc in train_docs)
        if representation.needs_parse and parses is None:
            raise ConsistencyError(f"'{representation.value}' needs parsed documents")

    def symbols(self, document: LabeledDocument) -> list[str]:
        match self.representation:
            case Representation.LEXICAL:
                return tokenize(document.text)
            case Representation.BLEACH:
                return bleach_tokens(
                    tokenize(document.text), self._frequencies, self._freq_buckets
                )
            case Representation.POS:
                return pos_sequence(self._parse_of(document))
            case Representation.DEPTRIPLE:
                return dep_triplets(self._parse_of(document))

    def _parse_of(self, document: LabeledDocument) -> list[ParsedSentence]:
        sentences = self._parses.get(document.user_id)
        if not sentences:
            raise ConsistencyError(f"No dependency parse for document '{document.user_id}'")
        return sentences


def sparse_features(
    symbols: list[str],
    representation: Representation,
    text: str,
    word_ns: list[int],
    char_ns: list[int],
) -> Counter:
    "Character n-grams only make sense over raw text, so only the lexical view gets them"
    if representation is Representation.LEXICAL:
        return extract_ngrams(symbols, word_ns, char_ns, text=text)
    return extract_ngrams(symbols, word_ns)


def featurize(
    train_docs: list[LabeledDocument],
    test_docs: list[LabeledDocument],
    representation: Representation,
    parses: Optional[dict[str, list[ParsedSentence]]] = None,
    word_ns: Optional[list[int]] = None,
    char_ns: Optional[list[int]] = None,
    freq_buckets: bool = False,
    max_seq_len: int = 5000,
    sparse: bool = True,
    sequence: bool = True,
) -> FeatureSet:
    """
    Build the sparse (n-gram counts) and/or sequence (symbol ids) views of a representation.
    Vocabularies and bleaching frequencies come from the training split only.
    """
    word_ns = [1, 3, 4, 5, 6] if word_ns is None else word_ns
    char_ns = [3, 4, 5, 6] if char_ns is None else char_ns
    stream = SymbolStream(representation, train_docs, parses, freq_buckets)

    documents = [("train", doc) for doc in train_docs] + [("test", doc) for doc in test_docs]
    symbols = {doc.user_id: stream.symbols(doc) for _, doc in documents}
    grams = (
        {
            doc.user_id: sparse_features(
                symbols[doc.user_id], representation, doc.text, word_ns, char_ns
            )
            for _, doc in documents
        }
        if sparse
        else {}
    )

    sparse_vocab = build_vocabulary(grams[doc.user_id] for doc in train_docs) if sparse else None
    sequence_vocab = (
        build_vocabulary(symbols[doc.user_id] for doc in train_docs) if sequence else None
    )

    records = []
    for split, doc in documents:
        record = FeatureRecord(doc_id=doc.user_id, label=doc.class_id, split=split)
        if sparse_vocab is not None:
            record.sparse_counts = vectorize(
                grams[doc.user_id], sparse_vocab, representation
            ).sparse_counts
        if sequence_vocab is not None:
            record.sequence = vectorize(
                symbols[doc.user_id][:max_seq_len], sequence_vocab, representation
            ).sequence
        records.append(record)

    logger.bind(stage="featurize", representation=representation.value).info(
        f"sparse vocabulary: {len(sparse_vocab) if sparse_vocab else 0}, "
        f"sequence vocabulary: {len(sequence_vocab) if sequence_vocab else 0}"
    )
    return FeatureSet(
        representation=representation,
        records=records,
        sparse_vocab=sparse_vocab,
        sequence_vocab=sequence_vocab,
    )
