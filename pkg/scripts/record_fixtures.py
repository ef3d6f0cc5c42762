"""Regenerate the bundled tweet set and its recorded NLU fixture file.

The two politics case-study tweets carry the service output shown for them;
the others are synthetic and their NLU results are hand-written.
"""

from __future__ import annotations

import json
from pathlib import Path

from semdisco.nlu import FixtureProvider, NluResult

DATA = Path(__file__).resolve().parents[1] / "src" / "semdisco" / "data"

TWEETS = [
    ("t01", "userA", "Launched Jennifer Kanis for Melbourne Campaign today. Outcomes instead of ineffective self indulgent "
     "commentary. Vote Labor in Melbourne.",
     NluResult((("Jennifer Kanis", "Person"), ("Melbourne Campaign", "Organization"), ("Melbourne", "City")),
               ("/travel/tourist destinations/australia and new zealand",))),
    ("t02", "userB", "Thoughts and prayers with Karen Overington's family today. Karen was true Labor, a true friend and "
     "will be truly missed by all of us.",
     NluResult((("Karen Overington", "Politician"),), ("/society/work/unions", "/family and parenting"),
               ("true friends", "prayers", "thoughts", "family", "labour"))),
    ("t03", "userA", "Jennifer Kanis took the early train to Bendigo this morning to meet local families.",
     NluResult((("Jennifer Kanis", "Person"), ("Bendigo", "City")), ("/travel/rail travel",), ("early train", "families"))),
    ("t04", "userA", "Driving the Great Ocean Road with Labor volunteers this weekend.",
     NluResult((("Great Ocean Road", "GeographicFeature"),), ("/travel/road travel",), ("volunteers", "weekend"))),
    ("t05", "userA", "The Liberal Party of Australia promises new hospitals in the outer suburbs.",
     NluResult((("Liberal Party of Australia", "Organization"),), ("/health and fitness/disease",), ("hospitals", "suburbs"))),
    ("t06", "userA", "Vote Labor on Saturday for better schools.",
     NluResult((), ("/education/school",), ("better schools", "saturday"))),
    ("t07", "userA", "Sunset over the Yarra River after a long week.",
     NluResult((("Yarra River", "GeographicFeature"),), ("/travel/tourist destinations/australia and new zealand",),
               ("sunset", "long week"))),
    ("t08", "userB", "Joanne Ryan cheering on the local footy club at the grand final.",
     NluResult((("Joanne Ryan", "Person"),), ("/sports/australian rules football",), ("footy club", "grand final"))),
    ("t09", "userB", "Heading to the Gold Coast to campaign with the Australian Greens.",
     NluResult((("Gold Coast", "City"), ("Australian Greens", "Organization")),
               ("/travel/tourist destinations/australia and new zealand",), ("campaign",))),
    ("t10", "userB", "Daniel Andrews announces a rail link to Melbourne Airport.",
     NluResult((("Daniel Andrews", "Person"), ("Melbourne Airport", "Facility")), ("/travel/air travel/airports",),
               ("rail link",))),
    ("t11", "userB", "Proud to stand with Labor and our nurses for fair pay.",
     NluResult((), ("/health and fitness/nursing",), ("nurses", "fair pay"))),
    ("t12", "userB", "Family picnic at the beach, perfect weather.",
     NluResult((), ("/family and parenting",), ("family picnic", "beach", "weather"))),
]


def main() -> None:
    lines = [
        json.dumps({"id": tid, "user": user, "text": text, "created_at": f"2014-11-{n:02d}T09:00:00Z"}, ensure_ascii=False)
        for n, (tid, user, text, _) in enumerate(TWEETS, 1)
    ]
    (DATA / "tweets.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    (DATA / "case_study_tweets.jsonl").write_text("\n".join(lines[:2]) + "\n", encoding="utf-8")
    path = DATA / "nlu_fixtures.json"
    if path.exists():
        path.unlink()
    provider = FixtureProvider.load(path)
    for _, _, text, result in TWEETS:
        provider.record(text, result)


if __name__ == "__main__":
    main()
