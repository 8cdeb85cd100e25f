from hypothesis import strategies as st

def permutations_upto(n_max: int):
    return st.integers(1, n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(tuple)
