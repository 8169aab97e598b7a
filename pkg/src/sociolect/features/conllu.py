import pydantic as pyd

from collections import defaultdict
from typing import Iterable, Optional
from sociolect.exc import ConllUFormatError, CorpusReadError, UnknownDocumentError
from sociolect.logger import logger
from sociolect.schemas.features import ParsedSentence, ParsedToken


N_COLUMNS = 10
DOC_ID_COMMENTS = ("# doc_id =", "# newdoc id =")


def _doc_id_from_comment(line: str) -> Optional[str]:
    for prefix in DOC_ID_COMMENTS:
        if line.startswith(prefix):
            return line[len(prefix) :].strip()
    return None


def _parse_token(columns: list[str], line_number: int) -> ParsedToken:
    try:
        return ParsedToken(
            form=columns[1], upos=columns[3], head=int(columns[6]), deprel=columns[7]
        )
    except (ValueError, pyd.ValidationError) as e:
        raise ConllUFormatError(f"invalid token row: {e}", line_number=line_number)


def read_conllu(
    path: str, known_doc_ids: Optional[Iterable[str]] = None
) -> dict[str, list[ParsedSentence]]:
    """
    Read a CoNLL-U file into sentences grouped by the `# doc_id = ...` comment preceding
    them. Multiword-token ranges (3-4) and empty nodes (5.1) are skipped.
    """
    known = set(known_doc_ids) if known_doc_ids is not None else None
    documents: dict[str, list[ParsedSentence]] = defaultdict(list)
    doc_id: Optional[str] = None
    tokens: list[ParsedToken] = []
    sentence_start = 0

    def close_sentence() -> None:
        nonlocal tokens
        if not tokens:
            return
        if doc_id is None:
            raise ConllUFormatError("sentence without a preceding doc_id", sentence_start)
        documents[doc_id].append(ParsedSentence(doc_id=doc_id, tokens=tokens))
        tokens = []

    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line_number, raw in enumerate(handle, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip():
                    close_sentence()
                    continue
                if line.startswith("#"):
                    new_doc_id = _doc_id_from_comment(line)
                    if new_doc_id is not None:
                        close_sentence()
                        if known is not None and new_doc_id not in known:
                            raise UnknownDocumentError(
                                f"line {line_number}: unknown doc_id '{new_doc_id}'"
                            )
                        doc_id = new_doc_id
                    continue

                columns = line.split("\t")
                if len(columns) != N_COLUMNS:
                    raise ConllUFormatError(
                        f"expected {N_COLUMNS} tab-separated columns, got {len(columns)}",
                        line_number=line_number,
                    )
                token_id = columns[0]
                if "-" in token_id or "." in token_id:
                    continue
                if not token_id.isdigit():
                    raise ConllUFormatError(f"invalid token id '{token_id}'", line_number)
                if not tokens:
                    sentence_start = line_number
                tokens.append(_parse_token(columns, line_number))
            close_sentence()
    except OSError as e:
        raise CorpusReadError(f"Unable to read '{path}': {e}")

    logger.debug(f"Read {sum(map(len, documents.values()))} sentences from '{path}'")
    return dict(documents)
