import pytest

from sociolect.exc import ConllUFormatError, ConsistencyError, HeadIndexError, UnknownDocumentError
from sociolect.features import (
    Vocabulary,
    bleach_token,
    build_vocabulary,
    dep_triplets,
    extract_ngrams,
    featurize,
    pos_sequence,
    read_conllu,
    token_frequencies,
    tokenize,
    vectorize,
)
from sociolect.features.bleach import frequency_bucket
from sociolect.features.ngrams import is_word_unigram
from sociolect.features.vocabulary import UNK, UNK_ID
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.features import ParsedSentence, ParsedToken
from sociolect.schemas.labeling import LabeledDocument, SilverLabel


CONLLU = """\
# doc_id = alice
# text = I loved it!
1\tI\tI\tPRON\tPRP\t_\t2\tnsubj\t_\t_
2\tloved\tlove\tVERB\tVBD\t_\t0\troot\t_\t_
3\tit\tit\tPRON\tPRP\t_\t2\tobj\t_\t_
4\t!\t!\tPUNCT\t.\t_\t2\tpunct\t_\t_

1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_
1\tdo\tdo\tAUX\tVBP\t_\t3\taux\t_\t_
2\tn't\tnot\tPART\tRB\t_\t3\tadvmod\t_\t_
3\tgo\tgo\tVERB\tVB\t_\t0\troot\t_\t_
3.1\tgone\tgo\tVERB\t_\t_\t_\t_\t_\t_

# newdoc id = bob
1\tNice\tnice\tADJ\tJJ\t_\t0\troot\t_\t_
"""


def write(tmp_path, text: str, name: str = "parses.conllu") -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def document(user_id: str, class_id: int, text: str) -> LabeledDocument:
    return LabeledDocument(user_id=user_id, label=SilverLabel(class_id=class_id), text=text)


def sentence(*tokens: tuple[str, str, int, str], doc_id: str = "d") -> ParsedSentence:
    return ParsedSentence(
        doc_id=doc_id,
        tokens=[ParsedToken(form=f, upos=u, head=h, deprel=r) for f, u, h, r in tokens],
    )


def test_tokenize_splits_punctuation_and_keeps_case():
    assert tokenize("Great food!! Don't miss the well-known crème brûlée.") == [
        "Great",
        "food",
        "!",
        "!",
        "Don't",
        "miss",
        "the",
        "well-known",
        "crème",
        "brûlée",
        ".",
    ]


@pytest.mark.parametrize(
    "text, tokens",
    [
        ("So good!", ["So", "good", "!"]),
        ("dee-lish,Super", ["dee-lish", ",", "Super"]),
        ("$10.50", ["$", "10.50"]),
        ("(e.g. fries)", ["(", "e.g", ".", "fries", ")"]),
        ("beer and/or wine", ["beer", "and/or", "wine"]),
        ("Open 7:30, 10,000 served", ["Open", "7:30", ",", "10,000", "served"]),
        ("", []),
    ],
)
def test_tokenize_keeps_inner_punctuation(text, tokens):
    assert tokenize(text) == tokens


@pytest.mark.parametrize(
    "token, freq, expected",
    [
        ("I", 2117, "X_01_True_V_2117"),
        ("!", 21, "!_01_False_!_21"),
        ("Pizza", 3, "Xxxxx_05_True_CVCCV_3"),
        ("don't", 0, "xxx'x_05_False_CVC'C_0"),
    ],
)
def test_bleach_token(token, freq, expected):
    assert bleach_token(token, freq) == expected


def test_bleach_token_frequency_buckets():
    assert bleach_token("I", 2117, buckets=True) == "X_01_True_V_4"
    assert [frequency_bucket(f) for f in (0, 1, 9, 10, 99, 100)] == [0, 1, 1, 2, 2, 3]


@pytest.mark.parametrize("token", ["restaurant", "Absolutely", "ÉCLAIR", "tacos"])
def test_bleached_letters_do_not_leak(token):
    shape, length, alnum, pattern, freq = bleach_token(token, 12).split("_")
    assert set(shape) <= {"X", "x"}
    assert set(pattern) <= {"C", "V"}
    assert (length, alnum, freq) == (f"{len(token):02d}", "True", "12")


def test_bleach_empty_token():
    with pytest.raises(ValueError):
        bleach_token("", 1)


def test_token_frequencies():
    counts = token_frequencies([["a", "b"], ["a"]])
    assert counts == {"a": 2, "b": 1}


def test_read_conllu(tmp_path):
    documents = read_conllu(write(tmp_path, CONLLU))

    assert sorted(documents) == ["alice", "bob"]
    assert [len(s) for s in documents["alice"]] == [4, 3]
    assert pos_sequence(documents["alice"]) == [
        "PRON",
        "VERB",
        "PRON",
        "PUNCT",
        "AUX",
        "PART",
        "VERB",
    ]
    assert dep_triplets(documents["bob"]) == ["ADJ→root→ROOT"]


def test_dep_triplets(tmp_path):
    documents = read_conllu(write(tmp_path, CONLLU))
    assert dep_triplets(documents["alice"])[:4] == [
        "PRON→nsubj→VERB",
        "VERB→root→ROOT",
        "PRON→obj→VERB",
        "PUNCT→punct→VERB",
    ]


def test_dep_triplets_head_out_of_range():
    bad = sentence(("a", "DET", 0, "root"), ("b", "NOUN", 5, "dep"))
    with pytest.raises(HeadIndexError):
        dep_triplets([bad])


def test_read_conllu_unknown_doc(tmp_path):
    with pytest.raises(UnknownDocumentError):
        read_conllu(write(tmp_path, CONLLU), known_doc_ids=["alice"])


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("# doc_id = a\n1\tI\tI\tPRON\t_\t_\t0\troot\t_\n", 2),
        ("# doc_id = a\nx\tI\tI\tPRON\t_\t_\t0\troot\t_\t_\n", 2),
        ("# doc_id = a\n1\tI\tI\tPRONOUN\t_\t_\t0\troot\t_\t_\n", 2),
        ("# doc_id = a\n1\tI\tI\tPRON\t_\t_\tzero\troot\t_\t_\n", 2),
        ("1\tI\tI\tPRON\t_\t_\t0\troot\t_\t_\n", 1),
    ],
)
def test_read_conllu_format_errors(tmp_path, text, line_number):
    with pytest.raises(ConllUFormatError) as e:
        read_conllu(write(tmp_path, text))
    assert e.value.line_number == line_number
    assert e.value.message.startswith(f"line {line_number}:")


def test_extract_ngrams():
    grams = extract_ngrams(["a", "b", "a"], word_ns=[1, 2], char_ns=[3], text="aba")
    assert grams == {"w:a": 2, "w:b": 1, "w:a b": 1, "w:b a": 1, "c:aba": 1}
    assert is_word_unigram("w:a")
    assert not is_word_unigram("w:a b")
    assert not is_word_unigram("c:aba")


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 9])
def test_extract_ngrams_count_per_order(n):
    tokens = ["the", "the", "food", "was", "the", "best"]
    grams = extract_ngrams(tokens, word_ns=[n])
    assert sum(grams.values()) == max(0, len(tokens) - n + 1)
    assert sum(extract_ngrams([], word_ns=[n]).values()) == 0


def test_extract_ngrams_chars_over_joined_tokens():
    assert extract_ngrams(["ab", "c"], char_ns=[3]) == {"c:ab ": 1, "c:b c": 1}


def test_build_vocabulary_orders_by_frequency_then_symbol():
    vocab = build_vocabulary([["b", "a", "c"], ["c", "a"], ["c"]])
    assert vocab.symbols == [UNK, "c", "a", "b"]
    assert vocab.frequency("c") == 3
    assert "b" in vocab
    assert UNK not in vocab


def test_build_vocabulary_min_df():
    vocab = build_vocabulary([{"x": 5, "y": 1}, {"y": 1}], min_df=2)
    assert vocab.symbols == [UNK, "y"]


def test_vocabulary_tsv_and_digest(tmp_path):
    vocab = Vocabulary([UNK, "tab\there", "new\nline", "back\\slash"], [0, 3, 2, 1])
    path = str(tmp_path / "vocab.tsv")
    vocab.to_tsv(path)
    loaded = Vocabulary.from_tsv(path)
    assert loaded.symbols == vocab.symbols
    assert loaded.digest() == vocab.digest()
    assert Vocabulary([UNK, "a"], [0, 1]).digest() != Vocabulary([UNK, "b"], [0, 1]).digest()


def test_vocabulary_requires_unk_first():
    with pytest.raises(ValueError):
        Vocabulary(["a", UNK], [1, 0])


def test_vectorize_sparse_drops_oov_and_sequence_maps_to_unk():
    vocab = build_vocabulary([["a", "b"]])
    sparse = vectorize({"a": 2, "zzz": 4}, vocab, Representation.LEXICAL)
    assert sparse.sparse_counts == {vocab.id_of("a"): 2}
    sequence = vectorize(["b", "zzz", "a"], vocab, Representation.LEXICAL)
    assert sequence.sequence == [vocab.id_of("b"), UNK_ID, vocab.id_of("a")]


def test_vectorized_sequence_decodes_to_known_symbols():
    vocab = build_vocabulary([["the", "pho", "was", "hot"], ["the", "broth", "was", "rich"]])
    symbols = ["the", "ramen", "was", "hot", "and", "rich"]
    ids = vectorize(symbols, vocab, Representation.POS).sequence
    decoded = [vocab.symbol_of(idx) for idx in ids]

    assert decoded == ["the", UNK, "was", "hot", UNK, "rich"]
    for symbol, back in zip(symbols, decoded):
        assert back == (symbol if symbol in vocab else UNK)


def test_featurize_lexical_uses_training_vocabulary_only():
    train = [document("a", 1, "cheap eats"), document("b", 2, "fine dining")]
    test = [document("c", 1, "cheap wine")]
    features = featurize(train, test, Representation.LEXICAL, word_ns=[1], char_ns=[])

    assert "w:wine" not in features.sparse_vocab
    assert "wine" not in features.sequence_vocab
    record = features.split("test")[0]
    assert record.doc_id == "c"
    assert record.label == 1
    assert record.sparse_counts == {features.sparse_vocab.id_of("w:cheap"): 1}
    assert record.sequence == [features.sequence_vocab.id_of("cheap"), UNK_ID]
    assert [r.doc_id for r in features.split("train")] == ["a", "b"]


def test_featurize_bleach_frequencies_come_from_train():
    train = [document("a", 1, "Good good"), document("b", 2, "Good")]
    test = [document("c", 1, "Good")]
    features = featurize(train, test, Representation.BLEACH, word_ns=[1], char_ns=[3])

    assert features.sequence_vocab.symbols[1] == "Xxxx_04_True_CVVC_2"
    assert not any(symbol.startswith("c:") for symbol in features.sparse_vocab.symbols)


def test_featurize_truncates_sequences():
    train = [document("a", 1, "one two three four"), document("b", 2, "five")]
    features = featurize(train, [], Representation.LEXICAL, max_seq_len=2, sparse=False)
    assert features.sparse_vocab is None
    assert len(features.split("train")[0].sequence) == 2


def test_featurize_syntactic_views_need_parses():
    train = [document("a", 1, "x"), document("b", 2, "y")]
    with pytest.raises(ConsistencyError):
        featurize(train, [], Representation.POS)

    parses = {
        "a": [sentence(("x", "NOUN", 0, "root"), doc_id="a")],
        "b": [sentence(("y", "VERB", 0, "root"), ("z", "ADV", 1, "advmod"), doc_id="b")],
    }
    features = featurize(train, [], Representation.DEPTRIPLE, parses=parses, word_ns=[1])
    assert "w:ADV→advmod→VERB" in features.sparse_vocab
    assert features.split("train")[1].sequence == [
        features.sequence_vocab.id_of("VERB→root→ROOT"),
        features.sequence_vocab.id_of("ADV→advmod→VERB"),
    ]
