"""
Rewrite System Module

Relation rewriting over a SymbolicRing. Each rule replaces a power
X^t of a relation variable by a polynomial whose degree in the relation
variables is below t, so every round strictly lowers the largest
relation degree among reducible terms and reduction terminates.
Leading terms are pure powers of distinct variables, hence the rule set
is a Groebner basis and normal forms are unique.
"""

import logging
from dataclasses import dataclass

from sympy.ntheory import multiplicity

from tools.utils.error_utils import RewriteBudgetExceeded, RewriteError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    """var^threshold -> replacement."""

    var: str
    threshold: int
    replacement: object

    def describe(self):
        return f"{self.var}^{self.threshold} -> {self.replacement}"


class RewriteSystem:
    """
    Rules keyed by relation variable over one SymbolicRing.

    Args:
        R (SymbolicRing): Ring holding every rule and every reduced polynomial
        rules (iterable, optional): Initial (var, threshold, replacement) triples
    """

    def __init__(self, R, rules=()):
        self.R = R
        self.rules = {}
        self._positions = {}
        self._powers = {}
        for var, threshold, replacement in rules:
            self.add_rule(var, threshold, replacement)

    def relation_degree(self, x, positions=None):
        """Largest total degree of x in the relation variables."""
        positions = list(self._positions.values()) if positions is None else positions
        return max((sum(monom[i] for i in positions) for monom in x.monoms()), default=0)

    def add_rule(self, var, threshold, replacement):
        """
        Register var^threshold -> replacement.

        Raises:
            RewriteError: For a second rule on var, a threshold that is not a
                positive power of p, or a replacement that does not lower the
                relation degree of its rule
        """
        p = self.R.p
        if var in self.rules:
            raise RewriteError(f"{var} already has a rule")
        if threshold < p or threshold != p ** multiplicity(p, threshold):
            raise RewriteError(f"threshold {threshold} is not a positive power of {p}")
        positions = list(self._positions.values()) + [self.R.ring.gens.index(self.R.var(var))]
        candidates = list(self.rules.values()) + [Rule(var, threshold, replacement)]
        for rule in candidates:
            if self.relation_degree(rule.replacement, positions) >= rule.threshold:
                raise RewriteError(f"replacement for {rule.var}^{rule.threshold} does not lower the relation degree")
        self._positions[var] = positions[-1]
        self.rules[var] = candidates[-1]
        self._powers.clear()

    def add_equation(self, F, solved, values=None, var=None):
        """
        Rule from a p-polynomial equation solved for its top Frobenius term.

        For F = c X^(p^d) + rest with d the largest degree of X in F, the rule
        is X^(p^d) -> -rest / c. The coefficient c must be a nonzero constant.

        Args:
            F (PPolynomial): Equation F = 0
            solved (str): Variable of F to solve for
            values (dict, optional): F's variables -> ring elements, default the generic point
            var (str, optional): Ring variable standing for ``solved``, default ``solved``

        Raises:
            RewriteError: When the top coefficient is not a nonzero constant
        """
        R = self.R
        top = max(t.d for t in F.terms_of(solved))
        coeff = R.from_element(F.coefficient(solved, top))
        if not coeff or not coeff.is_ground:
            raise RewriteError(f"leading coefficient of {solved} in {F.to_expr()} is not a nonzero constant")
        point = values if values is not None else R.generic_point(F.variables)
        rest = R.evaluate(F, point) - coeff * R.frobenius(point[solved], top)
        inverse = pow(int(coeff.LC) % R.p, -1, R.p)
        self.add_rule(var or solved, R.p ** top, -rest * inverse)

    @classmethod
    def from_equations(cls, R, equations, solved):
        """
        Rules from equations over R's coordinates, one solved variable each.

        Args:
            R (SymbolicRing): Ring whose coordinates include every equation variable
            equations (list): PPolynomials
            solved (list): Relation variable of each equation

        Returns:
            RewriteSystem: The system
        """
        system = cls(R)
        for F, var in zip(equations, solved):
            system.add_equation(F, var)
        return system

    def _replacement_power(self, var, q):
        """replacement^q through base-p digits and Frobenius."""
        key = (var, q)
        if key not in self._powers:
            rule, p = self.rules[var], self.R.p
            value, j = self.R.one(), 0
            while q:
                q, digit = divmod(q, p)
                if digit:
                    value = value * self.R.frobenius(rule.replacement, j) ** digit
                j += 1
            self._powers[key] = value
        return self._powers[key]

    def _rewrite_term(self, monom, coeff):
        exponents = list(monom)
        factor = None
        for var, rule in self.rules.items():
            position = self._positions[var]
            q, rem = divmod(exponents[position], rule.threshold)
            if q:
                exponents[position] = rem
                power = self._replacement_power(var, q)
                factor = power if factor is None else factor * power
        if factor is None:
            return None
        return self.R.ring.from_dict({tuple(exponents): coeff}) * factor

    def is_normal(self, x):
        return all(monom[self._positions[var]] < rule.threshold
                   for var, rule in self.rules.items() for monom in x.monoms())

    def normal_form(self, x, budget=None):
        """
        Reduce x until no rule applies.

        Args:
            x (PolyElement): Element of the system's ring
            budget (int, optional): Maximum number of rounds, default the
                relation degree of x plus one

        Returns:
            PolyElement: The normal form

        Raises:
            RewriteBudgetExceeded: When the rounds run past the budget
        """
        if budget is None:
            budget = self.relation_degree(x) + 1
        rounds = 0
        while not self.is_normal(x):
            rounds += 1
            if rounds > budget:
                raise RewriteBudgetExceeded(f"no normal form within {budget} rounds")
            collected = {}
            for monom, coeff in x.terms():
                replaced = self._rewrite_term(monom, coeff)
                pieces = [(monom, coeff)] if replaced is None else replaced.terms()
                for key, value in pieces:
                    total = collected.pop(key, self.R.ring.domain.zero) + value
                    if total:
                        collected[key] = total
            x = self.R.ring.from_dict(collected) if collected else self.R.zero()
        logger.debug(f"normal form after {rounds} rounds, {len(x.terms())} terms")
        return x

    def reduces_to_zero(self, x):
        return not self.normal_form(x)

    def describe(self):
        return [rule.describe() for rule in self.rules.values()]
