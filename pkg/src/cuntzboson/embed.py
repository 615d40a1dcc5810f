"""Embedding of the infinitely generated algebra into O_N, plus the odometer model.

The generators s_m (m >= 1) embed into O_N (finite N >= 2) as

    s_{(N-1)(k-1)+i} = t_N^{k-1} t_i        (k >= 1, 1 <= i <= N-1),

i.e. index m maps to the word N^{k-1}.i with m-1 = (N-1)(k-1) + (i-1).  Under
this map the standard cycle-(1) representation of O_N restricts to the
standard representation of the infinite algebra, and labels translate by a
block code: d leading copies of N followed by a letter b < N decode to the
single letter (N-1)d + b.  The ladder operators act on O_N labels through
that code.

The odometer model realizes the standard representation on basis indices
e_1, e_2, ... via s_n e_m = e_{2^{n-1}(2m-1)}; ``odometer_isomorphism`` is the
label bijection onto word labels and ``odometer_index`` its inverse.
"""

from __future__ import annotations

from typing import Mapping, Optional

from .boson import apply_annihilate, apply_create, fock_word
from .common import AlphabetError, DomainError
from .cuntz import RepSpec
from .scalar import RadicalScalar, ZERO
from .states import Ket
from .words import EPWord, Word


class EmbeddingSpec:
    """Target algebra O_N of the embedding; N finite and >= 2."""

    __slots__ = ("N",)

    def __init__(self, N: int):
        if N < 2:
            raise ValueError(f"embedding target needs N >= 2, got {N}")
        self.N = N

    def rep(self) -> RepSpec:
        return RepSpec((1,), alphabet=self.N)

    def __repr__(self) -> str:
        return f"EmbeddingSpec(N={self.N})"


def embed_generator(spec: EmbeddingSpec, m: int) -> Word:
    """Word over {1..N} representing generator index m."""
    if m < 1:
        raise ValueError(f"generator indices are 1-based, got {m}")
    k1, i1 = divmod(m - 1, spec.N - 1)  # m-1 = (N-1)(k-1) + (i-1)
    return (spec.N,) * k1 + (i1 + 1,)


def translate_word(spec: EmbeddingSpec, J: Word) -> Word:
    out: tuple[int, ...] = ()
    for m in J:
        out += embed_generator(spec, m)
    return out


def fock_word_in_ON(spec: EmbeddingSpec, occupations: Mapping[int, int]) -> Word:
    """O_N word whose action on the GP vector carries the occupation list.

    Built directly from the digit decomposition k = (N-1)(c-1) + (b-1) of each
    occupation count; agrees letter for letter with translating the word from
    ``fock_word`` generator by generator.
    """
    word: tuple[int, ...] = ()
    previous = 0
    for mode, count in sorted(occupations.items()):
        if count < 1:
            continue
        if mode <= previous:
            raise ValueError("occupation modes must be distinct")
        c1, b1 = divmod(count, spec.N - 1)  # count = (N-1)(c-1) + (b-1)
        word += (1,) * (mode - previous - 1) + (spec.N,) * c1 + (b1 + 1,)
        previous = mode
    return word


def decode_label(spec: EmbeddingSpec, label: EPWord) -> EPWord:
    """O_N label with tail 1^inf -> label of the infinite-alphabet standard rep."""
    if label.cycle != (1,):
        raise DomainError(f"only labels with tail 1^inf decode, got {label}")
    out = []
    run = 0
    for letter in label.prefix:
        if letter > spec.N:
            raise AlphabetError(f"letter {letter} exceeds alphabet bound {spec.N}")
        if letter == spec.N:
            run += 1
        else:
            out.append((spec.N - 1) * run + letter)
            run = 0
    if run:
        # trailing run of Ns closes with a 1 read from the periodic tail
        out.append((spec.N - 1) * run + 1)
    return EPWord(tuple(out), (1,))


def encode_label(spec: EmbeddingSpec, label: EPWord) -> EPWord:
    """Inverse of ``decode_label``."""
    if label.cycle != (1,):
        raise DomainError(f"only labels with tail 1^inf encode, got {label}")
    return EPWord(translate_word(spec, label.prefix), (1,))


def _embedded(spec: EmbeddingSpec, n: int, v: Ket, create: bool) -> Ket:
    out = Ket()
    op = apply_create if create else apply_annihilate
    for word, coeff in v.items():
        image = op(n, Ket.basis(decode_label(spec, word)))
        encoded = Ket(
            (encode_label(spec, label), amp) for label, amp in image.items())
        out = out + coeff * encoded
    return out


def embedded_create(spec: EmbeddingSpec, n: int, v: Ket) -> Ket:
    """Mode-n creator acting on O_N labels through the embedding block code."""
    return _embedded(spec, n, v, create=True)


def embedded_annihilate(spec: EmbeddingSpec, n: int, v: Ket) -> Ket:
    return _embedded(spec, n, v, create=False)


def embedded_fock_state(spec: EmbeddingSpec, occupations: Mapping[int, int]) -> Ket:
    """coeff * |word . 1^inf> for the occupation list, computed via the digits."""
    coeff, _ = fock_word(occupations)
    word = fock_word_in_ON(spec, occupations)
    return coeff * Ket.basis(EPWord(word, (1,)))


# --- odometer model on basis indices -------------------------------------

def odometer_action(n: int, star: bool, index: int) -> Optional[int]:
    """s_n e_m = e_{2^{n-1}(2m-1)}; the starred action inverts or returns None."""
    if n < 1 or index < 1:
        raise ValueError("generator index and basis index are 1-based")
    if not star:
        return 2 ** (n - 1) * (2 * index - 1)
    quotient, remainder = divmod(index, 2 ** (n - 1))
    if remainder or quotient % 2 == 0:
        return None
    return (quotient + 1) // 2


def odometer_isomorphism(index: int) -> EPWord:
    """Basis index -> word label, peeling one generator per step.

    The leading generator index is the 2-adic valuation plus one; e_1 is the
    GP vector and maps to 1^inf.
    """
    if index < 1:
        raise ValueError("basis indices are 1-based")
    letters = []
    while index != 1:
        n = 1
        while index % 2 == 0:
            index //= 2
            n += 1
        letters.append(n)
        index = (index + 1) // 2
    return EPWord(tuple(letters), (1,))


def odometer_index(label: EPWord) -> int:
    """Inverse of ``odometer_isomorphism``; defined on labels with tail 1^inf."""
    if label.cycle != (1,):
        raise DomainError(f"odometer labels end in 1^inf, got {label}")
    index = 1
    for n in reversed(label.prefix):
        index = 2 ** (n - 1) * (2 * index - 1)
    return index


def ladder_action(N: int, i: int, star: bool, index: int) -> Optional[int]:
    """The standard O_N action on basis indices: t_i e_n = e_{N(n-1)+i}."""
    if N < 2 or not 1 <= i <= N or index < 1:
        raise ValueError("need N >= 2, 1 <= i <= N, index >= 1")
    if not star:
        return N * (index - 1) + i
    if index < i or (index - i) % N:
        return None
    return (index - i) // N + 1


def odometer_boson(n: int, create: bool, v: Mapping[int, RadicalScalar]) -> dict[int, RadicalScalar]:
    """Ladder action on a combination of odometer basis indices, via the label bijection."""
    ket = Ket((odometer_isomorphism(idx), coeff) for idx, coeff in v.items())
    image = apply_create(n, ket) if create else apply_annihilate(n, ket)
    out: dict[int, RadicalScalar] = {}
    for label, coeff in image.items():
        idx = odometer_index(label)
        total = out.get(idx, ZERO) + coeff
        if total:
            out[idx] = total
    return out
