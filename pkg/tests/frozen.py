# Generated by tests/oracles.py -- brute-force direct sums.

TAIL = {
    (1.1, 1): 10.584448464950801,
    (1.1, 2): 9.584448464950801,
    (1.1, 5): 8.601641508411445,
    (1.1, 10): 7.983726107059944,
    (1.1, 100): 6.312734015237232,
    (1.1, 1000): 5.012122975831688,
    (1.5, 1): 2.612375348685488,
    (1.5, 2): 1.6123753486854884,
    (1.5, 5): 0.9413718683623393,
    (1.5, 10): 0.6486616319415703,
    (1.5, 100): 0.20050124998177193,
    (1.5, 1000): 0.06326136854451493,
    (2.0, 1): 1.6449340668482262,
    (2.0, 2): 0.6449340668482265,
    (2.0, 5): 0.2213229557371153,
    (2.0, 10): 0.10516633568168575,
    (2.0, 100): 0.010050166663333571,
    (2.0, 1000): 0.0010005001666666335,
    (2.5, 1): 1.3414872572509173,
    (2.5, 2): 0.3414872572509172,
    (2.5, 5): 0.06931053204432187,
    (2.5, 10): 0.022728699194534536,
    (2.5, 100): 0.0006716874994531716,
    (2.5, 1000): 2.109766904416677e-05,
    (3.0, 1): 1.2020569031595945,
    (3.0, 2): 0.20205690315959426,
    (3.0, 5): 0.024394866122557247,
    (3.0, 10): 0.005524917485401034,
    (3.0, 100): 5.0502499916675e-05,
    (3.0, 1000): 5.005002499999166e-07,
    (4.0, 1): 1.0823232337111386,
    (4.0, 2): 0.0823232337111382,
    (4.0, 5): 0.003571304698792513,
    (4.0, 10): 0.0003866502173816447,
    (4.0, 100): 3.383666650002222e-07,
    (4.0, 1000): 3.3383366666649996e-10,
    (1.775, 1): 1.9209341001528661,
    (1.5, 10): 0.6486616319415703,
    (2.0, 2): 0.6449340668482265,
    (1.8, 2): 0.8822296181028219,
    (3.5, 1): 1.1267338673170566,
    (2.5, 1): 1.3414872572509173,
    (1.5, 1): 2.612375348685488,
}

# sum_{x <= 1e7} x * pmf(x)
TRUNCATED_MEAN = {
    (3.0, 0.5): 1.1934878210641393,
    (3.0, 2.0): 1.6769247834551662,
    (4.0, 100.0): 3.756829066250696,
    (2.5, 0.5): 1.499403895643658,
}
