from sociolect.exc import HeadIndexError
from sociolect.schemas.constants.ud import ROOT_HEAD, TRIPLET_SEPARATOR
from sociolect.schemas.features import ParsedSentence


def pos_sequence(sentences: list[ParsedSentence]) -> list[str]:
    "UPOS tags in token order across sentences; word forms are discarded"
    return [token.upos for sentence in sentences for token in sentence.tokens]


def dep_triplets(sentences: list[ParsedSentence]) -> list[str]:
    "One 'UPOS→deprel→HEAD_UPOS' symbol per token; the root's head is 'ROOT'"
    triplets = []
    for sentence in sentences:
        for position, token in enumerate(sentence.tokens, start=1):
            if token.head > len(sentence.tokens):
                raise HeadIndexError(
                    f"doc '{sentence.doc_id}': token {position} points to head {token.head} "
                    f"in a sentence of {len(sentence.tokens)} tokens"
                )
            head_upos = ROOT_HEAD if token.head == 0 else sentence.tokens[token.head - 1].upos
            triplets.append(TRIPLET_SEPARATOR.join((token.upos, token.deprel, head_upos)))
    return triplets
