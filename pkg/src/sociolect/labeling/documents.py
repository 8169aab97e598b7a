from sociolect.corpus.authors import review_sort_key
from sociolect.exc import ConsistencyError
from sociolect.features.tokenize import tokenize
from sociolect.schemas.corpus import AuthorProfile
from sociolect.schemas.evaluation import CLASS_IDS
from sociolect.schemas.labeling import ClassOverview, LabeledAuthor, LabeledDocument


REVIEW_SEPARATOR = "\n"


def build_documents(
    authors: list[LabeledAuthor], profiles: dict[str, AuthorProfile]
) -> list[LabeledDocument]:
    "One document per author: their reviews in order_key order, newline-joined"
    documents = []
    for author in authors:
        profile = profiles.get(author.user_id)
        if profile is None:
            raise ConsistencyError(f"No profile for labeled author '{author.user_id}'")
        reviews = sorted(profile.reviews, key=review_sort_key)
        documents.append(
            LabeledDocument(
                user_id=author.user_id,
                label=author.label,
                text=REVIEW_SEPARATOR.join(review.text for review in reviews),
            )
        )
    return documents


def dataset_overview(documents: list[LabeledDocument]) -> dict[int, ClassOverview]:
    "Authors and tokens per class"
    overview = {class_id: ClassOverview() for class_id in CLASS_IDS}
    for document in documents:
        entry = overview[document.class_id]
        entry.authors += 1
        entry.tokens += len(tokenize(document.text))
    return overview
