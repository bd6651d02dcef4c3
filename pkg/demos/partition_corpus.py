"""The small-case partition corpus.

Each partition lists the piece sizes of a graph the herder can reach from K_n
by cutting until the graph stops being 2-edge-connected. The checker scores
each one and confirms the herder never beats c_n that way.
"""

from collections import Counter

from catherding import generators as gen
from catherding.partitions import (generate_corpus, partition_of, test_partition,
                                   verify_corpus, witness_score)

corpus = generate_corpus()
print("corpus size:", len(corpus))
print("entries per generating case:", dict(sorted(Counter(e.family for e in corpus).items())))

report = verify_corpus()
print(report.summary())

for parts in [(3, 3, 1), (6, 1), (1, 1, 1, 1), (4, 3)]:
    print(f"{parts}: lower bound {test_partition(parts)}, exact from the witness graph "
          f"{witness_score(parts)}")

g = gen.chained_cliques((5, 3, 1))
print("chained cliques (5,3,1) decompose back to", partition_of(g))
