"""Game rules: heap colors, legal positions, move generation.

Tokens are colored before play: token height m is black when m is in S.
A heap shows black when its top token is black or the heap is empty, and a
position is legal while at least one heap shows black.  Moves are plain Nim
lowerings onto legal positions.
"""

from bwnim import (
    Explicit,
    Player,
    black_white_spec,
    heap_is_black,
    is_legal,
    legal_moves,
    partizan_legal_moves,
    Modular,
)

# three heaps of 0, 2, 3 tokens with S = {2}: the empty heap is black, the
# 2-heap shows the black token, the 3-heap has it buried
s = Explicit((2,))
for size in (0, 2, 3):
    print(f"heap of {size}: {'black' if heap_is_black(s, size) else 'white'}")

spec = black_white_spec(s, 2)
print("legal (1,2):", is_legal(spec, (1, 2)))
print("moves from (1,2):", [m.target for m in legal_moves(spec, (1, 2))])
# only the removal of exactly one token from the 2-heap is barred: (1,1)
# would leave every heap white

# an empty heap keeps everything open: all lowerings stay legal
spec3 = black_white_spec(s, 3)
print("moves from (0,1,3):", [m.target for m in legal_moves(spec3, (0, 1, 3))])

# the partizan variation constrains the players differently: Left must
# leave a white heap, Right a black one
evens = Modular(2)
left = partizan_legal_moves(evens, (1, 2), Player.LEFT)
right = partizan_legal_moves(evens, (1, 2), Player.RIGHT)
print("Left  from (1,2):", [m.target for m in left])
print("Right from (1,2):", [m.target for m in right])
