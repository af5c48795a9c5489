"""
Equation Systems Module

Forced-zero propagation for systems of p-polynomial equations over
separable extensions of K. A coordinate is forced to 0 when some equation,
after removing coordinates already forced, either is a reduced principal
form on its own or isolates that coordinate in its own lambda-exponent
class at the equation's lowest level.
"""

import logging
from collections import defaultdict

from tools.ppoly.certify import Certified, Unknown, monomial_split, certify_reduced, is_certified
from tools.ppoly.forms import principal_part

logger = logging.getLogger(__name__)


def _isolated_variables(F):
    used = F.used_variables()
    if len(F.terms) == len(used) and is_certified(certify_reduced(principal_part(F))):
        return used
    L = min(t.d for t in F.terms)
    classes = defaultdict(list)
    for term in F.terms:
        split = monomial_split(term.coeff, L)
        if split is None:
            return []
        classes[split[0]].append(term)
    return [terms[0].var for terms in classes.values() if len(terms) == 1]


def forced_zero_variables(equations):
    """
    Coordinates that vanish at every point of the system over K_s.

    Args:
        equations (list): PPolynomials over one coordinate list

    Returns:
        list: Forced coordinates in the order they were found
    """
    forced = []
    changed = True
    while changed:
        changed = False
        for F in equations:
            live = F.restrict(v for v in F.variables if v not in forced)
            if live.is_zero():
                continue
            for var in _isolated_variables(live):
                if var not in forced:
                    forced.append(var)
                    changed = True
                    logger.debug(f"{var} forced to 0")
    return forced


def certify_totally_nonsmooth(equations):
    """
    Certified(True) when the only point of the system over K_s is 0.

    Returns:
        Certified | Unknown: Unknown lists the coordinates left free
    """
    variables = []
    for F in equations:
        variables.extend(v for v in F.variables if v not in variables)
    forced = forced_zero_variables(equations)
    free = [v for v in variables if v not in forced]
    if free:
        return Unknown(f"not forced: {', '.join(free)}")
    return Certified(True, detail=f"forced order: {', '.join(forced)}")
