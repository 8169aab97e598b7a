import json
import pytest

from dataclasses import dataclass
from sociolect.features.tokenize import tokenize


CLASS_MARKERS = {1: "cheap", 2: "casual", 3: "elegant", 4: "exquisite"}

FILLERS = (
    "The food was good and the staff were friendly to us the whole evening.",
    "We waited a little for our table but the service was quick after that.",
    "My friend ordered the chicken and I had the fish, both were fresh and warm.",
    "The room was busy on a Friday night and the music was not too loud.",
    "I would come back here with my family because the people are nice.",
)

# tiny tagger for the synthetic parses
TAGS = {
    "the": "DET",
    "a": "DET",
    "and": "CCONJ",
    "but": "CCONJ",
    "was": "AUX",
    "were": "AUX",
    "are": "AUX",
    "we": "PRON",
    "i": "PRON",
    "my": "PRON",
    "our": "PRON",
    "us": "PRON",
    "to": "ADP",
    "for": "ADP",
    "on": "ADP",
    "of": "ADP",
    "with": "ADP",
    "after": "ADP",
    "not": "PART",
    "good": "ADJ",
    "friendly": "ADJ",
    "fresh": "ADJ",
    "warm": "ADJ",
    "busy": "ADJ",
    "nice": "ADJ",
    "loud": "ADJ",
    "quick": "ADJ",
    "cheap": "ADJ",
    "casual": "ADJ",
    "elegant": "ADJ",
    "exquisite": "ADJ",
    "had": "VERB",
    "ordered": "VERB",
    "waited": "VERB",
    "come": "VERB",
    "made": "VERB",
}

# each class ends its reviews with a differently built sentence
CLASS_CLOSERS = {
    1: "Really {marker} place.",
    2: "It felt {marker} and easy.",
    3: "The whole evening was {marker}, quiet and slow.",
    4: "Truly, the {marker} dishes made our night.",
}


def upos_of(token: str) -> str:
    if not any(char.isalnum() for char in token):
        return "PUNCT"
    return TAGS.get(token.lower(), "NOUN")


def review_text(class_id: int, author: int, review: int) -> str:
    first = FILLERS[(author + review) % len(FILLERS)]
    second = FILLERS[(author + 2 * review + 1) % len(FILLERS)]
    closer = CLASS_CLOSERS[class_id].format(marker=CLASS_MARKERS[class_id])
    return f"{first} {second} {closer}"


def conllu_sentence(text: str) -> list[str]:
    "Every token attaches to the first one, which is the root"
    rows = []
    for position, token in enumerate(tokenize(text), start=1):
        head, deprel = (0, "root") if position == 1 else (1, "dep")
        columns = (position, token, token.lower(), upos_of(token), "_", "_", head, deprel, "_", "_")
        rows.append("\t".join(map(str, columns)))
    return rows


@dataclass
class SyntheticCorpus:
    reviews: str
    businesses: str
    conllu: str
    user_ids: dict[int, list[str]]


def write_corpus(
    folder, authors_per_class: int = 10, reviews_per_author: int = 10
) -> SyntheticCorpus:
    """
    Authors who only review restaurants of one price range, so each gets that class with zero
    entropy. Businesses carry the price as a quoted string, as the public dataset does.
    """
    folder.mkdir(parents=True, exist_ok=True)
    businesses, reviews, parses = [], [], []
    user_ids: dict[int, list[str]] = {}
    for class_id in CLASS_MARKERS:
        for j in range(3):
            businesses.append(
                {
                    "business_id": f"b{class_id}{j}",
                    "attributes": {"RestaurantsPriceRange2": f"'{class_id}'"},
                }
            )
        user_ids[class_id] = []
        for author in range(authors_per_class):
            user_id = f"u{class_id}{author:02d}"
            user_ids[class_id].append(user_id)
            parses.append(f"# doc_id = {user_id}")
            for review in range(reviews_per_author):
                text = review_text(class_id, author, review)
                reviews.append(
                    {
                        "review_id": f"r{class_id}{author:02d}{review:02d}",
                        "user_id": user_id,
                        "business_id": f"b{class_id}{review % 3}",
                        "text": text,
                    }
                )
                parses.extend(conllu_sentence(text))
                parses.append("")

    # interleave authors the way a real dump would
    reviews.sort(key=lambda row: (row["review_id"][-2:], row["review_id"]))

    paths = SyntheticCorpus(
        reviews=str(folder / "reviews.jsonl"),
        businesses=str(folder / "businesses.jsonl"),
        conllu=str(folder / "parses.conllu"),
        user_ids=user_ids,
    )
    with open(paths.reviews, "w", encoding="utf-8") as handle:
        handle.writelines(json.dumps(row) + "\n" for row in reviews)
    with open(paths.businesses, "w", encoding="utf-8") as handle:
        handle.writelines(json.dumps(row) + "\n" for row in businesses)
    with open(paths.conllu, "w", encoding="utf-8") as handle:
        handle.write("\n".join(parses) + "\n")
    return paths


@pytest.fixture
def corpus(tmp_path) -> SyntheticCorpus:
    return write_corpus(tmp_path / "corpus")


@pytest.fixture
def write_jsonl(tmp_path):
    "Write rows (dicts, or raw strings for malformed lines) to a JSON-lines file"

    def write(name: str, rows: list) -> str:
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as handle:
            for row in rows:
                handle.write((row if isinstance(row, str) else json.dumps(row)) + "\n")
        return str(path)

    return write
