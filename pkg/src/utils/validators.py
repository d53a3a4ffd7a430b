from typing import List, Dict, Any

from src.models.context import JacobianContext
from src.models.response_models import ElementDocument
from src.utils.exceptions import ElementParseError
from src.utils.exact_kernel import parse_rational


class ElementDocumentValidator:
    """Validator for element documents read from files or request bodies"""

    @staticmethod
    def validate_monomial(side: str, monomial: List[int], context: JacobianContext) -> Dict[str, Any]:
        """Check entry ranges; in-range monomials the kill rules remove only warn."""
        errors = []
        warnings = []
        g = context.genus

        if side == "newton":
            bad = [i for i in monomial if i < 1 or i > g]
            if bad:
                errors.append(f"Newton indices must lie in 1..{g}, got {monomial}")
            elif context.kills_newton(monomial):
                warnings.append(f"Newton monomial {monomial} is killed in {context.describe()}")
        else:
            bad = [s for s in monomial if s < 0 or s > g - 1]
            if bad:
                errors.append(f"Pontryagin parts must lie in 0..{g - 1}, got {monomial}")
            elif context.kills_pontryagin(monomial):
                warnings.append(f"Pontryagin monomial {monomial} is killed in {context.describe()}")

        return {
            'valid': len(errors) == 0,
            'errors': errors,
            'warnings': warnings,
        }

    @staticmethod
    def validate_coefficient(text: str) -> Dict[str, Any]:
        errors = []
        try:
            parse_rational(text)
        except ElementParseError as e:
            errors.append(str(e))
        return {'valid': len(errors) == 0, 'errors': errors}

    @staticmethod
    def validate_document(document: ElementDocument, context: JacobianContext) -> Dict[str, Any]:
        """Validate every term of a document against its context"""
        errors = []
        warnings = []

        for n, term in enumerate(document.terms):
            coeff_check = ElementDocumentValidator.validate_coefficient(term.coeff)
            errors.extend(f"term {n}: {e}" for e in coeff_check['errors'])

            monomial_check = ElementDocumentValidator.validate_monomial(document.side, term.monomial, context)
            errors.extend(f"term {n}: {e}" for e in monomial_check['errors'])
            warnings.extend(f"term {n}: {w}" for w in monomial_check['warnings'])

        return {
            'valid': len(errors) == 0,
            'errors': errors,
            'warnings': warnings,
        }
