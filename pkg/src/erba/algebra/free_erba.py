from __future__ import annotations
import logging
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..core.errors import AlphabetError, TableError
from ..core.rational import RationalLike, as_rational
from ..words.bracketed import Alphabet, Bracket, BracketedWord, Factor, Letter
from .term_sum import Coefficient, TermSum, accumulate
from .weight import Weight

log = logging.getLogger(__name__)

WordProduct = Tuple[Tuple[BracketedWord, Coefficient], ...]
Factors = Tuple[Factor, ...]


def _exact(value: Fraction) -> Coefficient:
    return value.numerator if value.denominator == 1 else value


class MultiplicationTable:
    """
    An associative base algebra whose basis is the alphabet.
    products[(a, b)] is a * b as {letter: coefficient}; missing pairs multiply to 0.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        products: Mapping[Tuple[str, str], Mapping[str, RationalLike]],
    ) -> None:
        self.alphabet = alphabet
        self._table: Dict[Tuple[str, str], Tuple[Tuple[str, Fraction], ...]] = {}
        for (a, b), image in products.items():
            for s in (a, b, *image.keys()):
                if s not in alphabet:
                    raise TableError(f"Table mentions {s!r}, which is not in the alphabet {{{alphabet}}}")
            self._table[(a, b)] = tuple(
                (c, as_rational(k)) for c, k in sorted(image.items()) if as_rational(k)
            )
        self._check_associative()

    def product(self, a: str, b: str) -> Tuple[Tuple[str, Fraction], ...]:
        return self._table.get((a, b), ())

    def _times(self, vec: Dict[str, Fraction], right: str, left_side: bool) -> Dict[str, Fraction]:
        out: Dict[str, Fraction] = {}
        for s, c in vec.items():
            pairs = self.product(s, right) if left_side else self.product(right, s)
            for t, k in pairs:
                out[t] = out.get(t, Fraction(0)) + c * k
        return {t: c for t, c in out.items() if c}

    def _check_associative(self) -> None:
        for a, b, c in cartesian(self.alphabet, repeat=3):
            ab = dict(self.product(a, b))
            bc = dict(self.product(b, c))
            left = self._times(ab, c, left_side=True)
            right = self._times(bc, a, left_side=False)
            if left != right:
                raise TableError(f"Multiplication table is not associative on ({a}{b}){c} vs {a}({b}{c})")


class FreeErba:
    """
    The free extended Rota-Baxter algebra of weight (lambda, kappa) on an alphabet.

    Elements are TermSums over Rota-Baxter bracketed words. The product is the
    recursive one: two words meeting bracket-to-bracket expand as

        [u][v] = [u[v]] + [[u]v] + lambda [uv] + kappa uv

    spliced into the surrounding factors; every other junction concatenates.
    With a MultiplicationTable, adjacent letters are reduced through the table.
    Word products are cached per instance and kept until clear_cache(); a
    long-lived instance fed unrelated words keeps growing.
    """

    def __init__(
        self,
        alphabet: Union[Alphabet, str],
        weight: Weight,
        table: Optional[MultiplicationTable] = None,
    ) -> None:
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
        self.weight = weight
        if table is not None and table.alphabet != self.alphabet:
            raise TableError("Multiplication table and algebra use different alphabets")
        self.table = table
        self._products: Dict[Tuple[BracketedWord, BracketedWord], WordProduct] = {}
        # integral weights stay ints inside word products
        self._lam = _exact(weight.lambda_)
        self._kap = _exact(weight.kappa)

    def __repr__(self) -> str:
        mode = "table" if self.table else "free"
        return f"FreeErba(alphabet={str(self.alphabet)!r}, weight={self.weight}, mode={mode})"

    # ----- elements -----
    def element(self, text: str) -> TermSum:
        """Parse an expression such as "2*x[y] - [z]" into a normalized element."""
        parsed = TermSum.parse(text, self.alphabet)
        return parsed if self.table is None else parsed.map_words(self.normal_form)

    def letter(self, symbol: str) -> TermSum:
        return self.from_word(BracketedWord.letter(symbol))

    def from_word(self, word: BracketedWord) -> TermSum:
        self.alphabet.check_word(word)
        if self.table is None:
            return TermSum.of_word(self.alphabet, word)
        return TermSum(self.alphabet, dict(self.normal_form(word)))

    def zero(self) -> TermSum:
        return TermSum.zero(self.alphabet)

    # ----- linear structure -----
    def add(self, a: TermSum, b: TermSum) -> TermSum:
        return a + b

    def sub(self, a: TermSum, b: TermSum) -> TermSum:
        return a - b

    def negate(self, a: TermSum) -> TermSum:
        return -a

    def scale(self, c: Fraction, a: TermSum) -> TermSum:
        return a.scale(c)

    def is_zero(self, a: TermSum) -> bool:
        return a.is_zero()

    # ----- product and operator -----
    def _own(self, u: TermSum) -> None:
        if u.alphabet != self.alphabet:
            raise AlphabetError(
                f"Element over {{{u.alphabet}}} used in the algebra over {{{self.alphabet}}}"
            )

    def mul(self, u: TermSum, v: TermSum) -> TermSum:
        self._own(u)
        self._own(v)
        acc: Dict[BracketedWord, Coefficient] = {}
        for wu, cu in u.unordered_items():
            for wv, cv in v.unordered_items():
                c = cu * cv
                product = self.word_product(wu, wv)
                accumulate(acc, product if c == 1 else ((w, c * k) for w, k in product))
        return TermSum._trusted(self.alphabet, acc)

    def apply_p(self, u: TermSum) -> TermSum:
        self._own(u)
        # distinct words stay distinct under the bracket
        return TermSum._trusted(self.alphabet, {w.bracketed(): c for w, c in u.unordered_items()})

    def word_product(self, u: BracketedWord, v: BracketedWord) -> WordProduct:
        key = (u, v)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        acc: Dict[BracketedWord, Coefficient] = {}
        if u.tail and v.head:
            ubar = u.factors[-1].inner  # type: ignore[union-attr]
            vbar = v.factors[0].inner  # type: ignore[union-attr]
            prefix, suffix = u.factors[:-1], v.factors[1:]
            for middle, c in self._bracket_product(ubar, vbar).items():
                for factors, k in self._splice(prefix, middle.factors, suffix):
                    accumulate(acc, ((BracketedWord(factors), c * k),))
        else:
            for factors, k in self._join(u.factors, v.factors):
                accumulate(acc, ((BracketedWord(factors), k),))
        result = tuple(acc.items())
        self._products[key] = result
        return result

    def _bracket_product(self, ubar: BracketedWord, vbar: BracketedWord) -> Dict[BracketedWord, Coefficient]:
        lam, kap = self._lam, self._kap
        acc: Dict[BracketedWord, Coefficient] = {}
        accumulate(acc, ((w.bracketed(), c) for w, c in self.word_product(ubar, vbar.bracketed())))
        accumulate(acc, ((w.bracketed(), c) for w, c in self.word_product(ubar.bracketed(), vbar)))
        if lam or kap:
            inner = self.word_product(ubar, vbar)
            if lam:
                accumulate(acc, ((w.bracketed(), lam * c) for w, c in inner))
            if kap:
                accumulate(acc, ((w, kap * c) for w, c in inner))
        return acc

    def _join(self, left: Factors, right: Factors) -> List[Tuple[Factors, Coefficient]]:
        if not left:
            return [(right, 1)]
        if not right:
            return [(left, 1)]
        a, b = left[-1], right[0]
        if self.table is not None and isinstance(a, Letter) and isinstance(b, Letter):
            return [
                (left[:-1] + (Letter(c),) + right[1:], k)
                for c, k in self.table.product(a.symbol, b.symbol)
            ]
        return [(left + right, 1)]

    def _splice(self, prefix: Factors, middle: Factors, suffix: Factors) -> Iterable[Tuple[Factors, Coefficient]]:
        for head, c in self._join(prefix, middle):
            for factors, k in self._join(head, suffix):
                yield factors, c * k

    def normal_form(self, word: BracketedWord) -> Iterable[Tuple[BracketedWord, Fraction]]:
        """Reduce adjacent letters through the table, inside brackets too."""
        if self.table is None:
            return ((word, Fraction(1)),)
        partial: Dict[Factors, Fraction] = {(): Fraction(1)}
        for factor in word.factors:
            if isinstance(factor, Letter):
                options = [((factor,), Fraction(1))]
            else:
                options = [((Bracket(w),), c) for w, c in self.normal_form(factor.inner)]
            nxt: Dict[Factors, Fraction] = {}
            for pf, pc in partial.items():
                for of, oc in options:
                    for jf, jc in self._join(pf, of):
                        nxt[jf] = nxt.get(jf, Fraction(0)) + pc * oc * jc
            partial = {f: c for f, c in nxt.items() if c}
        return tuple((BracketedWord(f), c) for f, c in partial.items())

    def cache_size(self) -> int:
        return len(self._products)

    def clear_cache(self) -> None:
        self._products.clear()

    # ----- identities -----
    def commutator_bracket(self, u: TermSum, v: TermSum) -> TermSum:
        """[u, v] = u*v - v*u."""
        return self.mul(u, v) - self.mul(v, u)

    def assoc_defect(self, u: TermSum, v: TermSum, w: TermSum) -> TermSum:
        return self.mul(self.mul(u, v), w) - self.mul(u, self.mul(v, w))

    def check_assoc(self, u: TermSum, v: TermSum, w: TermSum) -> bool:
        return self.assoc_defect(u, v, w).is_zero()

    def erb_defect(self, u: TermSum, v: TermSum) -> TermSum:
        """P(u)P(v) - P(uP(v)) - P(P(u)v) - lambda P(uv) - kappa uv."""
        pu, pv = self.apply_p(u), self.apply_p(v)
        uv = self.mul(u, v)
        return (
            self.mul(pu, pv)
            - self.apply_p(self.mul(u, pv))
            - self.apply_p(self.mul(pu, v))
            - self.apply_p(uv).scale(self.weight.lambda_)
            - uv.scale(self.weight.kappa)
        )

    def check_erb_identity(self, u: TermSum, v: TermSum) -> bool:
        return self.erb_defect(u, v).is_zero()

    def erbal_defect(self, u: TermSum, v: TermSum) -> TermSum:
        """[Pu, Pv] - P([Pu, v] + [u, Pv] + lambda [u, v]) - kappa [u, v]."""
        br = self.commutator_bracket
        pu, pv = self.apply_p(u), self.apply_p(v)
        uv = br(u, v)
        inner = br(pu, v) + br(u, pv) + uv.scale(self.weight.lambda_)
        return br(pu, pv) - self.apply_p(inner) - uv.scale(self.weight.kappa)

    def check_erbal(self, u: TermSum, v: TermSum) -> bool:
        return self.erbal_defect(u, v).is_zero()
