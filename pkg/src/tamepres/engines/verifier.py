"""Desk-scale oracles: exact certificate checks and finite-quotient relator evaluation."""

import itertools
import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from ..exceptions import InvalidSpecError, ModelParameterError, NonLinearTailsError
from ..group_ring import RingElement
from ..models.module import ModuleSpec
from ..models.presentation import Presentation, RelatorOrigin
from ..models.reports import RelatorFailure, SelfExpression, VerificationReport
from ..nilpotent import GroupElement, NilpotentGroup
from ..words import Word
from .base import BaseEngine

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 1
    return True


def row_reduce_mod(
    matrix: NDArray[np.int64], modulus: int
) -> tuple[NDArray[np.int64], list[int]]:
    """
    Reduced row echelon form over ℤ/p.

    Args:
        matrix: Integer matrix
        modulus: Prime p

    Returns:
        Nonzero rows of the RREF and their pivot columns
    """
    mat = np.array(matrix, dtype=np.int64) % modulus
    rows, cols = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        mat[row] = (mat[row] * pow(int(mat[row, col]), -1, modulus)) % modulus
        factors = mat[:, col].copy()
        factors[row] = 0
        mat = (mat - np.outer(factors, mat[row])) % modulus
        pivots.append(col)
        row += 1
    return mat[:row], pivots


class FiniteModel:
    """
    Finite semidirect product Q̄ ⋉ Ā.

    Q̄ reduces every exponent mod N. Ā is the free (ℤ/m)Q̄-module on the module
    generators modulo the images of all annihilators and global relators; its
    vectors are indexed by (generator position, element index of Q̄).
    """

    def __init__(
        self,
        group: NilpotentGroup,
        module: ModuleSpec,
        modulus: int,
        quotient: int,
    ):
        self.group = group
        self.module = module
        self.modulus = modulus
        self.quotient = quotient
        self._count = group.spec.generator_count
        self.elements = [
            GroupElement(exponents)
            for exponents in itertools.product(range(quotient), repeat=self._count)
        ]
        self.group_order = len(self.elements)
        self._module_position = {name: i for i, name in enumerate(module.generators)}
        self._right = [self._right_table(index) for index in range(self._count)]
        self._right_inverse = [np.argsort(table) for table in self._right]

        relations = [(ann.generator, ann.element) for ann in module.annihilators]
        relations += [(rel.generator, rel.element) for rel in module.relators]
        self._rref, self._pivots = self._relation_space(relations)
        pivot_set = set(self._pivots)
        self._free_columns = [c for c in range(self.vector_length) if c not in pivot_set]
        self.module_dimension = len(self._free_columns)
        logger.info(
            "finite model m=%d N=%d: |Q| = %d, dim A = %d",
            modulus,
            quotient,
            self.group_order,
            self.module_dimension,
        )

    @property
    def vector_length(self) -> int:
        """Dimension of the free module before the quotient."""
        return len(self.module.generators) * self.group_order

    def index(self, g: GroupElement) -> int:
        """Position of the image of g in ``elements``."""
        position = 0
        for exponent in g.exponents:
            position = position * self.quotient + exponent % self.quotient
        return position

    def _right_table(self, generator: int) -> NDArray[np.int64]:
        t = self.group.generator(generator)
        return np.array(
            [self.index(self.group.multiply(g, t)) for g in self.elements], dtype=np.int64
        )

    def _relation_space(
        self, relations: Sequence[tuple[str, RingElement]]
    ) -> tuple[NDArray[np.int64], list[int]]:
        rows = []
        for generator, element in relations:
            offset = self._module_position[generator] * self.group_order
            for q in self.elements:
                row = np.zeros(self.vector_length, dtype=np.int64)
                for g, coefficient in element.terms.items():
                    row[offset + self.index(self.group.multiply(g, q))] += coefficient
                rows.append(row % self.modulus)
        if not rows:
            return np.zeros((0, self.vector_length), dtype=np.int64), []
        return row_reduce_mod(np.vstack(rows), self.modulus)

    def reduce(self, vector: NDArray[np.int64]) -> NDArray[np.int64]:
        """Normal form of a vector modulo the relation space."""
        v = np.asarray(vector, dtype=np.int64) % self.modulus
        if not self._pivots:
            return v
        coefficients = v[self._pivots]
        return (v - coefficients @ self._rref) % self.modulus

    def coordinates(self, vector: NDArray[np.int64]) -> tuple[int, ...]:
        """Coordinates of a vector in the basis of Ā."""
        reduced = self.reduce(vector)
        return tuple(int(reduced[c]) for c in self._free_columns)

    def evaluate(self, word: Word) -> tuple[GroupElement, tuple[int, ...]]:
        """
        Evaluate a word over module and group generators in Q̄ ⋉ Ā.

        The running value is q · a_f; a group letter t maps it to
        q t · a_{f·t}, a module letter a^c adds c to the identity coordinate of a.

        Returns:
            The group part and the Ā-coordinates of the module part

        Raises:
            InvalidSpecError: On a symbol of neither generating set
        """
        q = 0
        f = np.zeros((len(self.module.generators), self.group_order), dtype=np.int64)
        for symbol, exponent in word:
            if symbol in self._module_position:
                row = self._module_position[symbol]
                f[row, 0] = (f[row, 0] + exponent) % self.modulus
                continue
            index = self.group.index_of(symbol)
            table = self._right[index] if exponent > 0 else self._right_inverse[index]
            for _ in range(abs(exponent)):
                q = int(table[q])
                moved = np.zeros_like(f)
                moved[:, table] = f
                f = moved
        return self.elements[q], self.coordinates(f.reshape(-1))


class VerifierEngine(BaseEngine):
    """Engine running the exact and finite-model oracles."""

    # === Exact checks ===

    def ring_identity_check(
        self, expression: SelfExpression, annihilator: RingElement | None = None
    ) -> bool:
        """
        Check ``(1 − λ) · q₀ = ε · μ`` exactly.

        Args:
            expression: Self-expression with pivot q₀ and sign ε
            annihilator: μ; defaults to the expression's recorded source

        Returns:
            True iff the identity holds in ℤQ
        """
        mu = expression.annihilator if annihilator is None else annihilator
        left = self._ring.scale_right(self._ring.one - expression.lam, expression.pivot)
        return left == self._ring.scale(mu, expression.pivot_sign)

    def evaluate_word(
        self, word: Word, module_generators: Sequence[str]
    ) -> tuple[GroupElement, dict[str, RingElement]]:
        """
        Evaluate a word exactly in Q ⋉ (ℤQ)^𝒜.

        Args:
            word: Word over module and group generators
            module_generators: The symbols acting as module elements

        Returns:
            Group part and module part, one ring element per module generator

        Raises:
            InvalidSpecError: On an unknown symbol
        """
        q = self._group.identity
        parts = {name: self._ring.zero for name in module_generators}
        for symbol, exponent in word:
            if symbol in parts:
                parts[symbol] = parts[symbol] + self._ring.monomial(self._group.identity, exponent)
                continue
            step = self._group.power(self._group.generator(symbol), exponent)
            q = self._group.multiply(q, step)
            parts = {name: self._ring.scale_right(value, step) for name, value in parts.items()}
        return q, parts

    def check_c_relator(self, word: Word, expression: SelfExpression) -> bool:
        """
        Bookkeeping check of a 𝒞-relator.

        True iff the relator evaluates to the identity of Q with module part
        ``λ − 1`` on its generator and zero elsewhere.
        """
        q, parts = self.evaluate_word(word, [expression.generator])
        return q.is_identity() and parts[expression.generator] == expression.lam - self._ring.one

    # === Finite model ===

    def build_finite_model(
        self,
        module: ModuleSpec,
        modulus: int | None = None,
        quotient: int | None = None,
    ) -> FiniteModel:
        """
        Build the finite model Q̄ ⋉ Ā.

        Args:
            module: Module spec
            modulus: Prime coefficient modulus m; config default when omitted
            quotient: Exponent modulus N; config default when omitted

        Returns:
            FiniteModel

        Raises:
            ModelParameterError: If m is not prime or N < 2
            NonLinearTailsError: If exponent reduction is not a homomorphism
        """
        m = self._config.model_modulus if modulus is None else modulus
        n = self._config.model_quotient if quotient is None else quotient
        if not is_prime(m):
            raise ModelParameterError(f"Model modulus must be prime, got {m}")
        if n < 2:
            raise ModelParameterError(f"Model quotient must be at least 2, got {n}")
        if not self._group.has_linear_tails():
            raise NonLinearTailsError("Collection tails are not linear in the exponents")
        module.validate_against(self._group)
        return FiniteModel(self._group, module, m, n)

    def verify_presentation(
        self, presentation: Presentation, model: FiniteModel
    ) -> VerificationReport:
        """
        Evaluate every relator in the finite model.

        Args:
            presentation: Presentation over the model's module and group generators
            model: Finite model

        Returns:
            VerificationReport; ``raise_for_failures`` turns failures into errors

        Raises:
            InvalidSpecError: If the presentation's generators do not match the specs
        """
        expected = (*model.module.generators, *self._group.generators)
        if set(presentation.generators) != set(expected):
            raise InvalidSpecError(
                f"Presentation generators {list(presentation.generators)} "
                f"do not match specs {list(expected)}"
            )

        totals = presentation.counts()
        failures = []
        positions = dict.fromkeys(RelatorOrigin, 0)
        for relator in presentation.relators:
            positions[relator.origin] += 1
            q, residue = model.evaluate(relator.word)
            if q.is_identity() and not any(residue):
                continue
            failures.append(
                RelatorFailure(
                    origin=relator.origin,
                    position=positions[relator.origin],
                    relator=relator.word.render(),
                    group_residue=q.exponents,
                    module_residue=residue,
                )
            )
        report = VerificationReport(
            modulus=model.modulus,
            quotient=model.quotient,
            group_order=model.group_order,
            module_dimension=model.module_dimension,
            totals=totals,
            failures=tuple(failures),
        )
        logger.info("verification: %d failures", len(failures))
        return report
