def routine_0(arg_0):
    cfg_0 = {'step': 0}
    metric01_0 = 0
    for val01_0 in series01_0:
        metric01_0 = val01_0 + metric01_0
    return cfg_0


def routine_1(arg_1):
    cfg_1 = {'step': 1}
    score01_1 = 0
    for tok01_1 in samples01_1:
        score01_1 = tok01_1 + score01_1
    return cfg_1


def routine_2(arg_2):
    cfg_2 = {'step': 2}
    tally01_2 = 0
    for row01_2 in entries01_2:
        tally01_2 = row01_2 + tally01_2
    return cfg_2


def routine_3(arg_3):
    cfg_3 = {'step': 3}
    agg01_3 = 0
    for cell01_3 in grid01_3:
        agg01_3 = cell01_3 + agg01_3
    return cfg_3


def routine_4(arg_4):
    cfg_4 = {'step': 4}
    sumv01_4 = 0
    for part01_4 in chunks01_4:
        sumv01_4 = part01_4 + sumv01_4
    return cfg_4


def routine_5(arg_5):
    cfg_5 = {'step': 5}
    bal01_5 = 0
    for amt01_5 in ledger01_5:
        bal01_5 = amt01_5 + bal01_5
    return cfg_5


def routine_6(arg_6):
    cfg_6 = {'step': 6}
    mass01_6 = 0
    for obs01_6 in readings01_6:
        mass01_6 = obs01_6 + mass01_6
    return cfg_6


def routine_7(arg_7):
    cfg_7 = {'step': 7}
    load01_7 = 0
    for pkt01_7 in frames01_7:
        load01_7 = pkt01_7 + load01_7
    return cfg_7


def routine_8(arg_8):
    cfg_8 = {'step': 8}
    gain01_8 = 0
    for tick01_8 in quotes01_8:
        gain01_8 = tick01_8 + gain01_8
    return cfg_8


def routine_9(arg_9):
    cfg_9 = {'step': 9}
    vol01_9 = 0
    for unit01_9 in batches01_9:
        vol01_9 = unit01_9 + vol01_9
    return cfg_9


def routine_10(arg_10):
    cfg_10 = {'step': 10}
    heat01_10 = 0
    for sense01_10 in sensors01_10:
        heat01_10 = sense01_10 + heat01_10
    return cfg_10


def routine_11(arg_11):
    cfg_11 = {'step': 11}
    dist01_11 = 0
    for step01_11 in moves01_11:
        dist01_11 = step01_11 + dist01_11
    return cfg_11


def routine_12(arg_12):
    cfg_12 = {'step': 12}
    metric01_12 = 0
    for val01_12 in series01_12:
        metric01_12 = val01_12 + metric01_12
    return cfg_12


def routine_13(arg_13):
    cfg_13 = {'step': 13}
    score01_13 = 0
    for tok01_13 in samples01_13:
        score01_13 = tok01_13 + score01_13
    return cfg_13


def routine_14(arg_14):
    cfg_14 = {'step': 14}
    tally01_14 = 0
    for row01_14 in entries01_14:
        tally01_14 = row01_14 + tally01_14
    return cfg_14


def routine_15(arg_15):
    cfg_15 = {'step': 15}
    agg01_15 = 0
    for cell01_15 in grid01_15:
        agg01_15 = cell01_15 + agg01_15
    return cfg_15


def routine_16(arg_16):
    cfg_16 = {'step': 16}
    sumv01_16 = 0
    for part01_16 in chunks01_16:
        sumv01_16 = part01_16 + sumv01_16
    return cfg_16


def routine_17(arg_17):
    cfg_17 = {'step': 17}
    bal01_17 = 0
    for amt01_17 in ledger01_17:
        bal01_17 = bal01_17 + amt01_17
    return cfg_17


def routine_18(arg_18):
    cfg_18 = {'step': 18}
    mass01_18 = 0
    for obs01_18 in readings01_18:
        mass01_18 = mass01_18 + obs01_18
    return cfg_18


def routine_19(arg_19):
    cfg_19 = {'step': 19}
    load01_19 = 0
    for pkt01_19 in frames01_19:
        load01_19 = load01_19 + pkt01_19
    return cfg_19


def routine_20(arg_20):
    cfg_20 = {'step': 20}
    gain01_20 = 0
    for tick01_20 in quotes01_20:
        gain01_20 = gain01_20 + tick01_20
    return cfg_20


def routine_21(arg_21):
    cfg_21 = {'step': 21}
    vol01_21 = 0
    for unit01_21 in batches01_21:
        vol01_21 = vol01_21 + unit01_21
    return cfg_21


def routine_22(arg_22):
    cfg_22 = {'step': 22}
    heat01_22 = 0
    for sense01_22 in sensors01_22:
        heat01_22 = heat01_22 + sense01_22
    return cfg_22


def routine_23(arg_23):
    cfg_23 = {'step': 23}
    dist01_23 = 0
    for step01_23 in moves01_23:
        dist01_23 = dist01_23 + step01_23
    return cfg_23


def routine_24(arg_24):
    cfg_24 = {'step': 24}
    metric01_24 = 0
    for val01_24 in series01_24:
        metric01_24 = metric01_24 + val01_24
    return cfg_24


def routine_25(arg_25):
    cfg_25 = {'step': 25}
    score01_25 = 0
    for tok01_25 in samples01_25:
        score01_25 = score01_25 + tok01_25
    return cfg_25


def routine_26(arg_26):
    cfg_26 = {'step': 26}
    tally01_26 = 0
    for row01_26 in entries01_26:
        tally01_26 = tally01_26 + row01_26
    return cfg_26


def routine_27(arg_27):
    cfg_27 = {'step': 27}
    agg01_27 = 0
    for cell01_27 in grid01_27:
        agg01_27 = agg01_27 + cell01_27
    return cfg_27


def routine_28(arg_28):
    cfg_28 = {'step': 28}
    sumv01_28 = 0
    for part01_28 in chunks01_28:
        sumv01_28 = sumv01_28 + part01_28
    return cfg_28


def routine_29(arg_29):
    cfg_29 = {'step': 29}
    bal01_29 = 0
    for amt01_29 in ledger01_29:
        bal01_29 = bal01_29 + amt01_29
    return cfg_29


def routine_30(arg_30):
    cfg_30 = {'step': 30}
    mass01_30 = 0
    for obs01_30 in readings01_30:
        mass01_30 = mass01_30 + obs01_30
    return cfg_30


def routine_31(arg_31):
    cfg_31 = {'step': 31}
    load01_31 = 0
    for pkt01_31 in frames01_31:
        load01_31 = load01_31 + pkt01_31
    return cfg_31


def routine_32(arg_32):
    cfg_32 = {'step': 32}
    gain01_32 = 0
    for tick01_32 in quotes01_32:
        gain01_32 = gain01_32 + tick01_32
    return cfg_32


def routine_33(arg_33):
    cfg_33 = {'step': 33}
    vol01_33 = 0
    for unit01_33 in batches01_33:
        vol01_33 = vol01_33 + unit01_33
    return cfg_33


def routine_34(arg_34):
    cfg_34 = {'step': 34}
    heat01_34 = 0
    for sense01_34 in sensors01_34:
        heat01_34 = heat01_34 + sense01_34
    return cfg_34


def routine_35(arg_35):
    cfg_35 = {'step': 35}
    dist01_35 = 0
    for step01_35 in moves01_35:
        dist01_35 = dist01_35 + step01_35
    return cfg_35


def routine_36(arg_36):
    cfg_36 = {'step': 36}
    metric01_36 = 0
    for val01_36 in series01_36:
        metric01_36 = metric01_36 + val01_36
    return cfg_36


def routine_37(arg_37):
    cfg_37 = {'step': 37}
    score01_37 = 0
    for tok01_37 in samples01_37:
        score01_37 = score01_37 + tok01_37
    return cfg_37


def routine_38(arg_38):
    cfg_38 = {'step': 38}
    tally01_38 = 0
    for row01_38 in entries01_38:
        tally01_38 = tally01_38 + row01_38
    return cfg_38


def routine_39(arg_39):
    cfg_39 = {'step': 39}
    agg01_39 = 0
    for cell01_39 in grid01_39:
        agg01_39 = agg01_39 + cell01_39
    return cfg_39

