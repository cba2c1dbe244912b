import pytest

from leecodes import build_defining_set, make_field

# enumeration-verified Lee spectra (frozen from definition-level brute force;
# DefiningSet instances memoize their spectra, so sharing them session-wide
# makes the expensive enumerations run once)
BRUTE_LEE = {
    (3, 2): {0: 1, 20: 8, 28: 16, 32: 16, 36: 32, 40: 8},
    (3, 3): {0: 1, 72: 24, 96: 180, 108: 368, 120: 144, 144: 12},
    (3, 4): {0: 1, 504: 120, 540: 400, 576: 3600, 612: 2400, 756: 40},
    (3, 5): {0: 1, 7776: 180, 8640: 13284, 8748: 32480, 8856: 12960, 9720: 144},
    (5, 2): {0: 625},
    (5, 3): {0: 1, 800: 120, 960: 5200, 1000: 5424, 1040: 4800, 1200: 80},
}

DEFINING_SET_SIZES = {
    (3, 2): 24,
    (3, 3): 80,
    (3, 4): 440,
    (3, 5): 6560,
    (5, 2): 0,
    (5, 3): 624,
}


@pytest.fixture(scope="session")
def defining_sets():
    cache = {}

    def get(q, m):
        if (q, m) not in cache:
            cache[(q, m)] = build_defining_set(make_field(q, m))
        return cache[(q, m)]

    return get
