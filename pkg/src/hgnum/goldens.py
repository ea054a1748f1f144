"""Golden copy of the published table of hypergeometric Euler numbers
E_{N,n} for 0 <= N <= 6 and even 0 <= n <= 14, transcribed verbatim."""

from __future__ import annotations

from fractions import Fraction

_ROWS = {
    0: ["1", "-1", "5", "-61", "1385", "-50521", "2702765", "-199360981"],
    1: ["1", "-1/6", "1/10", "-5/42", "7/30", "-15/22", "7601/2730", "-91/6"],
    2: ["1", "-1/15", "13/1050", "-1/350", "-31/173250", "1343/750750",
        "-6137/2388750", "3499/6693750"],
    3: ["1", "-1/28", "17/5880", "-29/362208", "-863/6420960", "6499/131843712",
        "6997213/156894017280", "-68936107/917226562560"],
    4: ["1", "-1/45", "7/7425", "53/2027025", "-443/22052250", "-10157/4873547250",
        "558599021/126395447928750", "39045649/62503243481250"],
    5: ["1", "-1/66", "25/66066", "47/2906904", "-16945/5300012718",
        "-475767/492312292472", "71844089/268802511689712",
        "1162911301/4483980359834976"],
    6: ["1", "-1/91", "29/165620", "1205/153728484", "-2279/4467168888",
        "-6430761/25339270989032", "-17675104079/4917799642149532320",
        "837165624457/24588998210747661600"],
}

# (N, n) -> exact value, even n only
TABLE1: dict[tuple[int, int], Fraction] = {
    (N, 2 * j): Fraction(v) for N, row in _ROWS.items() for j, v in enumerate(row)
}

TABLE1_N_MAX = 6
TABLE1_NMAX = 14
