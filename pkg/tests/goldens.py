"""Golden CLI transcripts: argv, expected exit code, expected stdout payload."""

GOLDENS = [
    (
        ["solve", "z^2", "z^3 + z"],
        0,
        {"case": "Power", "C": "z^3 + 2z^2 + z", "D": "z^2", "W": "z", "a": 2, "b": 3, "w": 1, "d1": 2, "d2": 3, "c": 1, "R": "z + 1", "verified": True},
    ),
    (
        ["solve", "z^2", "z^3 + z^2"],
        2,
        {"case": "NoSolution", "W": "z", "a": 2, "b": 3, "w": 1, "d1": 2, "d2": 3},
    ),
    (
        ["solve", "2z^2 - 1", "4z^3 - 3z"],
        0,
        {"case": "Chebyshev", "C": "4z^3 - 3z", "D": "2z^2 - 1", "W": "z", "a": 2, "b": 3, "w": 1, "d1": 2, "d2": 3, "verified": True},
    ),
    (["cheb", "6"], 0, "32z^6 - 48z^4 + 18z^2 - 1"),
    (["cheb", "3", "--format", "json"], 0, {"T": "4z^3 - 3z", "n": 3, "verified": True}),
    (["divide", "z^6 + 1", "z^3"], 0, {"H": "z^2 + 1", "verified": True}),
    (["divide", "z^4 + z", "z^2"], 2, {"case": "NotComposable"}),
    (["decompose", "z^4"], 0, {"factors": ["z^2", "z^2"], "degrees": [2, 2], "verified": True}),
    (["crf", "z^4", "z^6"], 0, {"W": "z^2", "A_tilde": "z^2", "B_tilde": "z^3", "w": 2, "verified": True}),
    (["verify", "z(z+1)^2", "z^2", "z^2", "z^3 + z"], 0, {"verified": True}),
    (["verify", "z", "z^2", "z", "z^3"], 2, {"verified": False}),
    (["factor-h", "z^4 + 1", "z^6 + 1", "z^2", "z^3"], 0, {"H": "z^2 + 1", "verified": True}),
    (["factor-h", "z^4 + z", "z^6", "z^2", "z^3"], 2, {"case": "NotComposable"}),
    (
        ["lemma-h", "--case", "power", "--d1", "2", "--d2", "3", "--c", "1", "--R", "z + 1", "z(z+1)^2", "z^2"],
        0,
        {"H": "z", "d1": 2, "d2": 3, "c": 1, "R": "z + 1", "verified": True},
    ),
    (
        ["lemma-h", "--case", "chebyshev", "--d1", "2", "--d2", "3", "(4z^3 - 3z)^2 + 1", "(2z^2 - 1)^2 + 1"],
        0,
        {"H": "z^2 + 1", "d1": 2, "d2": 3, "verified": True},
    ),
    (
        ["rational-relation", "z^3 / (z^3 + 1)", "z^2 / (z^2 + 1)", "z^2", "z^3"],
        0,
        {"C": "z^3", "D": "z^2", "scale": "1", "verified": True},
    ),
    (
        ["rational-relation", "z^3 / (z^3 + 1)", "z^2 / (z^2 + 1)", "z^2", "z^3 + 1"],
        2,
        {"case": "NotARelation"},
    ),
    (["oracle", "z^2", "z^3 + z", "3", "2"], 0, {"C": "z^3 + 2z^2 + z", "D": "z^2", "verified": True}),
    (["oracle", "z^2", "z^3 + z^2", "3", "2"], 2, {"case": "NoSolution"}),
]

VERBS_COVERED = {argv[0] for argv, _, _ in GOLDENS}
