"""
Reading k-mers out of a parenthesis string
==========================================

Decodes a hand-written open necklace and retrieves single k-mers by
scanning backwards, without decoding the whole record.
"""

from necktig import decode_necklace, kmer_at

record = "ACGT(T(C(G)C)A)A(CT)TA(A(CC)(G)T)G"
k = 3

pairs = decode_necklace(record, k, closed=False)
print(len(pairs), "k-mers")
for pos, km in pairs:
    # the backward scan must agree with the forward decoder at every symbol
    assert kmer_at(record, pos, k) == km
    print(f"{pos:2d} {record[pos]} -> {km}")

# closed records wrap around: position 1 of AATC ends the 3-mer CAA
print(kmer_at("AATC", 1, 3, closed=True))
