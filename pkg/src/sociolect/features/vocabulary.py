from collections import Counter
from typing import Iterable, Mapping, Optional, Sequence, Union
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.features import FeatureDoc
from sociolect.utils.io import sha256_text


UNK = "<unk>"
UNK_ID = 0

DocFeatures = Union[Mapping[str, int], Sequence[str]]


class Vocabulary:
    "Symbol <-> id bijection with training-corpus frequencies; id 0 is reserved for UNK"

    def __init__(self, symbols: list[str], frequencies: list[int]) -> None:
        if not symbols or symbols[0] != UNK:
            raise ValueError(f"Vocabulary must start with '{UNK}'")
        if len(symbols) != len(frequencies):
            raise ValueError("symbols and frequencies must align")
        self._symbols = list(symbols)
        self._frequencies = list(frequencies)
        self._ids = {symbol: idx for idx, symbol in enumerate(self._symbols)}
        if len(self._ids) != len(self._symbols):
            raise ValueError("Vocabulary symbols must be unique")

    def __len__(self) -> int:
        return len(self._symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._ids and symbol != UNK

    def __repr__(self) -> str:
        return f"Vocabulary(size={len(self)}, digest={self.digest()[:12]})"

    @property
    def symbols(self) -> list[str]:
        return list(self._symbols)

    def id_of(self, symbol: str) -> int:
        return self._ids.get(symbol, UNK_ID)

    def symbol_of(self, idx: int) -> str:
        return self._symbols[idx]

    def frequency(self, symbol: str) -> int:
        idx = self._ids.get(symbol)
        return 0 if idx is None else self._frequencies[idx]

    def digest(self) -> str:
        return sha256_text("\n".join(self._symbols))

    def to_tsv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            for idx, (symbol, freq) in enumerate(zip(self._symbols, self._frequencies)):
                handle.write(f"{idx}\t{_escape(symbol)}\t{freq}\n")

    @classmethod
    def from_tsv(cls, path: str) -> "Vocabulary":
        symbols, frequencies = [], []
        with open(path, "r", encoding="utf-8") as handle:
            for expected, line in enumerate(handle):
                idx, symbol, freq = line.rstrip("\n").split("\t")
                if int(idx) != expected:
                    raise ValueError(f"'{path}': ids are not dense at line {expected + 1}")
                symbols.append(_unescape(symbol))
                frequencies.append(int(freq))
        return cls(symbols, frequencies)


def _escape(symbol: str) -> str:
    return symbol.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape(symbol: str) -> str:
    out, chars = [], iter(symbol)
    for char in chars:
        if char == "\\":
            nxt = next(chars, "")
            out.append({"t": "\t", "n": "\n"}.get(nxt, nxt))
        else:
            out.append(char)
    return "".join(out)


def _as_counter(features: DocFeatures) -> Counter:
    return Counter(features) if not isinstance(features, Mapping) else Counter(dict(features))


def build_vocabulary(train_docs: Iterable[DocFeatures], min_df: int = 1) -> Vocabulary:
    """
    Ids by descending corpus frequency, ties broken by symbol; symbols occurring in fewer
    than `min_df` documents are left out. Build from the training split only.
    """
    frequency: Counter = Counter()
    document_frequency: Counter = Counter()
    for doc in train_docs:
        counts = _as_counter(doc)
        frequency.update(counts)
        document_frequency.update(symbol for symbol, count in counts.items() if count > 0)

    kept = sorted(
        (symbol for symbol in frequency if document_frequency[symbol] >= min_df and symbol != UNK),
        key=lambda symbol: (-frequency[symbol], symbol),
    )
    return Vocabulary([UNK] + kept, [0] + [frequency[symbol] for symbol in kept])


def vectorize(
    features: DocFeatures,
    vocab: Vocabulary,
    representation: Representation,
    doc_id: str = "",
    label: Optional[int] = None,
) -> FeatureDoc:
    """
    A mapping becomes sparse counts over in-vocabulary symbols (OOV dropped); a sequence
    becomes ids with unseen symbols mapped to UNK.
    """
    if isinstance(features, Mapping):
        sparse: dict[int, int] = {}
        for symbol, count in features.items():
            idx = vocab.id_of(symbol)
            if idx != UNK_ID and count > 0:
                sparse[idx] = sparse.get(idx, 0) + count
        return FeatureDoc(
            doc_id=doc_id,
            label=label,
            representation=representation,
            sparse_counts=dict(sorted(sparse.items())),
        )
    return FeatureDoc(
        doc_id=doc_id,
        label=label,
        representation=representation,
        sequence=[vocab.id_of(symbol) for symbol in features],
    )
