"""Published reference values for the cyclotomic EK and B constants.

Table rows are stored as printed: truncated decimals, strings kept verbatim so
that digit-level comparisons are exact.
"""

from __future__ import annotations

from typing import NamedTuple

EK_3 = "0.945497280871680703239749994158189073"
B_3 = "0.24718078879811624702914196"
ANALYTIC_BOUND_419 = "-0.50143"


class EkRow(NamedTuple):
    q: int
    cyc_1e5: str
    cyc_1e6: str
    low: str
    upp: str
    x: int
    true: str


class BfqRow(NamedTuple):
    q: int
    j_1e5: str
    j_1e6: str
    j_1e7: str
    true: str
    v: str


_EK = """
3 0.9372 0.9431 0.945 0.946 300000 0.94549
5 1.7148 1.7181 1.719 1.722 300000 1.72062
7 2.0799 2.0865 2.086 2.090 1000000 2.08759
11 2.4216 2.4116 2.411 2.420 1000000 2.41542
13 2.6022 2.6050 2.601 2.615 1000000 2.61075
17 3.5662 3.5832 3.565 3.592 1000000 3.58197
19 4.7659 4.7876 4.765 4.802 1000000 4.79040
23 2.6185 2.6090 2.594 2.635 1000000 2.61128
29 3.0870 3.0932 3.068 3.132 1000000 3.09373
31 4.2759 4.3078 4.264 4.340 1000000 4.31444
37 4.3149 4.3155 4.262 4.363 1000000 4.30493
41 3.9661 3.9649 3.902 4.020 1000000 3.97152
43 4.3408 4.3802 4.318 4.446 1000000 4.37862
47 4.8142 4.7925 4.717 4.865 1000000 4.79939
53 4.3029 4.3370 4.267 4.392 2000000 4.33773
59 5.4275 5.4285 5.351 5.501 2000000 5.43351
61 5.0024 5.0618 4.971 5.127 2000000 5.07108
67 5.3340 5.2876 5.204 5.384 2000000 5.29213
71 5.2392 5.2336 5.148 5.343 2000000 5.25525
73 3.9935 4.0650 3.957 4.157 2000000 4.06694
79 5.0581 5.0004 4.905 5.132 2000000 4.99827
83 2.9654 3.0295 2.900 3.139 2000000 3.03313
89 4.1811 4.1574 3.963 4.341 1000000 4.16409
97 4.8455 4.8793 4.660 5.090 1000000 4.89124
101 5.2782 5.2883 5.073 5.530 1000000 5.29701
103 5.1005 5.1326 4.899 5.368 1000000 5.14433
107 5.4382 5.5044 5.232 5.728 1000000 5.45827
109 6.9373 6.9267 6.664 7.179 1000000 6.90663
113 3.9793 4.0425 3.759 4.288 1000000 4.02173
127 5.0040 5.0705 4.763 5.390 1000000 5.08859
131 2.8372 2.8495 2.550 3.917 1000000 2.83682
137 4.9312 4.9205 4.607 5.303 1000000 4.93700
139 5.8719 5.8953 5.546 6.260 1000000 5.88916
149 6.0227 5.9895 5.611 6.396 1000000 5.98342
151 5.1040 5.0604 4.679 5.474 1000000 5.04201
157 7.4201 7.4053 7.007 7.855 1000000 7.40802
163 5.9314 5.9475 5.522 6.409 1000000 5.92966
167 8.1704 8.0129 7.596 8.520 1000000 8.03300
173 3.4172 3.3853 2.924 3.874 1000000 3.38434
"""

_BFQ = """
3 +0.2430 +0.2460 +0.2469 +0.24718 0.35164
5 -0.1042 -0.1034 -0.1029 -0.10281 0.07777
7 -0.1347 -0.1336 -0.1334 -0.13348 0.12282
11 -0.3419 -0.3429 -0.3425 -0.34255 0.00910
13 -0.3268 -0.3266 -0.3262 -0.32617 0.04620
17 -0.3584 -0.3574 -0.3576 -0.35751 0.00443
19 -0.3087 -0.3074 -0.3074 -0.30734 0.01100
23 -0.4627 -0.4631 -0.4630 -0.46308 0.00082
29 -0.4703 -0.4701 -0.4701 -0.47009 0.00034
31 -0.4014 -0.4003 -0.4002 -0.40015 0.03658
37 -0.4589 -0.4589 -0.4591 -0.45919 0.00092
41 -0.4797 -0.4797 -0.4794 -0.47957 0.00044
43 -0.4755 -0.4746 -0.4747 -0.47468 0.00021
47 -0.4740 -0.4745 -0.4744 -0.47441 0.00012
53 -0.4956 -0.4949 -0.4949 -0.49494 0.00021
59 -0.4847 -0.4846 -0.4845 -0.48460 0.00006
61 -0.4934 -0.4924 -0.4922 -0.49232 0.00143
67 -0.4970 -0.4977 -0.4976 -0.49767 0.00026
71 -0.5025 -0.5026 -0.5023 -0.50234 0.00061
73 -0.5211 -0.5201 -0.5200 -0.52013 0.00137
79 -0.5125 -0.5132 -0.5132 -0.51332 0.00049
83 -0.5416 -0.5408 -0.5408 -0.54077 0.00007
89 -0.5299 -0.5301 -0.5301 -0.53010 0.00034
97 -0.5270 -0.5266 -0.5265 -0.52657 0.00017
101 -0.5248 -0.5247 -0.5247 -0.52467 0.00001
103 -0.5276 -0.5272 -0.5272 -0.52717 0.00003
107 -0.5262 -0.5256 -0.5260 -0.52609 0.00003
109 -0.5133 -0.5134 -0.5135 -0.51362 0.00002
113 -0.5420 -0.5414 -0.5416 -0.54164 0.00002
127 -0.5318 -0.5313 -0.5311 -0.53121 0.00591
131 -0.5556 -0.5555 -0.5556 -0.55564 0.00002
137 -0.5411 -0.5412 -0.5411 -0.54113 0.00003
139 -0.5348 -0.5346 -0.5346 -0.53471 0.00079
149 -0.5367 -0.5369 -0.5370 -0.53700 0.00000
151 -0.5433 -0.5436 -0.5438 -0.54378 0.00002
157 -0.5297 -0.5298 -0.5298 -0.52986 0.00006
163 -0.5407 -0.5406 -0.5407 -0.54078 0.00001
167 -0.5281 -0.5291 -0.5289 -0.52899 0.00000
173 -0.5575 -0.5576 -0.5576 -0.55769 0.00001
"""


def _rows(block, cls, int_fields):
    out = []
    for line in block.strip().splitlines():
        parts = line.split()
        vals = [int(v) if i in int_fields else v for i, v in enumerate(parts)]
        out.append(cls(*vals))
    return tuple(out)


EK_TABLE: tuple[EkRow, ...] = _rows(_EK, EkRow, {0, 5})
BFQ_TABLE: tuple[BfqRow, ...] = _rows(_BFQ, BfqRow, {0})
TABLE_PRIMES = tuple(r.q for r in EK_TABLE)
