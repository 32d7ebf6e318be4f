from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=150, deadline=None, derandomize=True)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7)


def rationals(max_num=10**4, max_den=10**4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def nonzero_rationals(max_num=10**4, max_den=10**4):
    return rationals(max_num, max_den).filter(bool)


primes = st.sampled_from(PRIMES)
