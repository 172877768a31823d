class IntervalContainsZero(ZeroDivisionError):
    '''
    Raised when an interval operation needs a divisor or pivot that excludes zero
    and the enclosure at hand does not. Callers escalate precision on it.
    '''
    pass

class IdentityViolation(ArithmeticError):
    '''
    Raised when an enclosure that must contain zero (or two enclosures that must
    overlap) do not. This is never a precision problem: it signals a defect.
    '''
    pass

class TermBudgetExceeded(RuntimeError):
    '''
    Raised by the symbolic determinant when an intermediate polynomial grows past
    the configured term budget.
    '''
    pass
