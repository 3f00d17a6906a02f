"""Regenerates trials_14_of_20.log: two users, five images, 20 recorded
trials of which 14 match the frozen prediction (7 per user)."""
import json
from itertools import combinations

COLORS = ["red", "orange", "yellow", "green", "blue", "purple",
          "pink", "brown", "beige", "gray", "black", "white"]
images = ["1", "2", "3", "4", "5"]
users = ["u1", "u2"]
pairs = list(combinations(images, 2))

lines = []
def emit(kind, payload):
    seq = len(lines) + 1
    ts = "2024-01-01T00:00:%02d.000Z" % (seq % 60)
    lines.append("%d\t%s\t%s\t%s" % (seq, ts, kind, json.dumps(payload, separators=(",", ":"))))

for i, u in enumerate(users):
    emit("user-created", {"userId": u, "name": "participant %d" % (i + 1)})
    emit("color-rating-submitted", {"userId": u, "ratings": {c: 0.5 for c in COLORS}})

plan = {}
for u in users:
    plan[u] = []
    for k, (a, b) in enumerate(pairs):
        predicted = a if k % 2 == 0 else b
        plan[u].append({"pair": [a, b], "left": a, "right": b, "predicted": predicted,
                        "tie": False, "totals": [50.0, 40.0] if predicted == a else [40.0, 50.0]})
emit("study-created", {"studyId": "s1", "imageIds": images, "userIds": users, "seed": 7, "plan": plan})

for u in users:
    for k, t in enumerate(plan[u]):
        a, b = t["pair"]
        other = b if t["predicted"] == a else a
        choice = t["predicted"] if k < 7 else other  # 7 hits, 3 misses per user
        emit("trial-recorded", {"studyId": "s1", "userId": u, "pair": [a, b], "choice": choice,
                                "predicted": t["predicted"], "hit": choice == t["predicted"], "tie": False})

with open("trials_14_of_20.log", "w") as f:
    f.write("\n".join(lines) + "\n")
