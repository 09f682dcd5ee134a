def routine_0(arg_0):
    cfg_0 = {'step': 0}
    for metric02_0, val02_0 in series02_0.items():
        bucket02_0[metric02_0] = val02_0
    return cfg_0


def routine_1(arg_1):
    cfg_1 = {'step': 1}
    for score02_1, tok02_1 in samples02_1.items():
        slot02_1[score02_1] = tok02_1
    return cfg_1


def routine_2(arg_2):
    cfg_2 = {'step': 2}
    for tally02_2, row02_2 in entries02_2.items():
        cellv02_2[tally02_2] = row02_2
    return cfg_2


def routine_3(arg_3):
    cfg_3 = {'step': 3}
    for agg02_3, cell02_3 in grid02_3.items():
        lane02_3[agg02_3] = cell02_3
    return cfg_3


def routine_4(arg_4):
    cfg_4 = {'step': 4}
    for sumv02_4, part02_4 in chunks02_4.items():
        block02_4[sumv02_4] = part02_4
    return cfg_4


def routine_5(arg_5):
    cfg_5 = {'step': 5}
    for bal02_5, amt02_5 in ledger02_5.items():
        page02_5[bal02_5] = amt02_5
    return cfg_5


def routine_6(arg_6):
    cfg_6 = {'step': 6}
    for mass02_6, obs02_6 in readings02_6.items():
        frame02_6[mass02_6] = obs02_6
    return cfg_6


def routine_7(arg_7):
    cfg_7 = {'step': 7}
    for load02_7, pkt02_7 in frames02_7.items():
        wire02_7[load02_7] = pkt02_7
    return cfg_7


def routine_8(arg_8):
    cfg_8 = {'step': 8}
    for gain02_8, tick02_8 in quotes02_8.items():
        book02_8[gain02_8] = tick02_8
    return cfg_8


def routine_9(arg_9):
    cfg_9 = {'step': 9}
    for vol02_9, unit02_9 in batches02_9.items():
        lot02_9[vol02_9] = unit02_9
    return cfg_9


def routine_10(arg_10):
    cfg_10 = {'step': 10}
    for heat02_10, sense02_10 in sensors02_10.items():
        node02_10[heat02_10] = sense02_10
    return cfg_10


def routine_11(arg_11):
    cfg_11 = {'step': 11}
    for dist02_11, step02_11 in moves02_11.items():
        path02_11[dist02_11] = step02_11
    return cfg_11


def routine_12(arg_12):
    cfg_12 = {'step': 12}
    for metric02_12, val02_12 in series02_12.items():
        bucket02_12[metric02_12] = val02_12
    return cfg_12


def routine_13(arg_13):
    cfg_13 = {'step': 13}
    for score02_13, tok02_13 in samples02_13.items():
        slot02_13[score02_13] = tok02_13
    return cfg_13


def routine_14(arg_14):
    cfg_14 = {'step': 14}
    for tally02_14, row02_14 in entries02_14.items():
        cellv02_14[tally02_14] = row02_14
    return cfg_14


def routine_15(arg_15):
    cfg_15 = {'step': 15}
    for agg02_15, cell02_15 in grid02_15.items():
        lane02_15[agg02_15] = cell02_15
    return cfg_15


def routine_16(arg_16):
    cfg_16 = {'step': 16}
    for sumv02_16, part02_16 in chunks02_16.items():
        block02_16[sumv02_16] = part02_16
    return cfg_16


def routine_17(arg_17):
    cfg_17 = {'step': 17}
    for bal02_17, amt02_17 in ledger02_17.items():
        page02_17[bal02_17] = amt02_17
    return cfg_17


def routine_18(arg_18):
    cfg_18 = {'step': 18}
    for mass02_18, obs02_18 in readings02_18.items():
        frame02_18[mass02_18] = obs02_18
    return cfg_18


def routine_19(arg_19):
    cfg_19 = {'step': 19}
    for load02_19, pkt02_19 in frames02_19.items():
        wire02_19[load02_19] = pkt02_19
    return cfg_19


def routine_20(arg_20):
    cfg_20 = {'step': 20}
    for gain02_20, tick02_20 in quotes02_20.items():
        book02_20[gain02_20] = tick02_20
    return cfg_20


def routine_21(arg_21):
    cfg_21 = {'step': 21}
    for vol02_21, unit02_21 in batches02_21.items():
        lot02_21[vol02_21] = unit02_21
    return cfg_21


def routine_22(arg_22):
    cfg_22 = {'step': 22}
    for heat02_22, sense02_22 in sensors02_22.items():
        node02_22[heat02_22] = sense02_22
    return cfg_22


def routine_23(arg_23):
    cfg_23 = {'step': 23}
    for dist02_23, step02_23 in moves02_23.items():
        path02_23[dist02_23] = step02_23
    return cfg_23


def routine_24(arg_24):
    cfg_24 = {'step': 24}
    for metric02_24, val02_24 in series02_24.items():
        bucket02_24[metric02_24] = val02_24
    return cfg_24


def routine_25(arg_25):
    cfg_25 = {'step': 25}
    for score02_25, tok02_25 in samples02_25.items():
        slot02_25[score02_25] = tok02_25
    return cfg_25


def routine_26(arg_26):
    cfg_26 = {'step': 26}
    for tally02_26, row02_26 in entries02_26.items():
        cellv02_26[tally02_26] = row02_26
    return cfg_26


def routine_27(arg_27):
    cfg_27 = {'step': 27}
    for agg02_27, cell02_27 in grid02_27.items():
        lane02_27[agg02_27] = cell02_27
    return cfg_27


def routine_28(arg_28):
    cfg_28 = {'step': 28}
    for sumv02_28, part02_28 in chunks02_28.items():
        block02_28[sumv02_28] = part02_28
    return cfg_28


def routine_29(arg_29):
    cfg_29 = {'step': 29}
    for bal02_29, amt02_29 in ledger02_29.items():
        page02_29[bal02_29] = amt02_29
    return cfg_29


def routine_30(arg_30):
    cfg_30 = {'step': 30}
    for mass02_30, obs02_30 in readings02_30.items():
        frame02_30[mass02_30] = obs02_30
    return cfg_30


def routine_31(arg_31):
    cfg_31 = {'step': 31}
    for load02_31, pkt02_31 in frames02_31.items():
        wire02_31[load02_31] = pkt02_31
    return cfg_31


def routine_32(arg_32):
    cfg_32 = {'step': 32}
    for gain02_32, tick02_32 in quotes02_32.items():
        book02_32[gain02_32] = tick02_32
    return cfg_32


def routine_33(arg_33):
    cfg_33 = {'step': 33}
    for vol02_33, unit02_33 in batches02_33.items():
        lot02_33[vol02_33] = unit02_33
    return cfg_33


def routine_34(arg_34):
    cfg_34 = {'step': 34}
    for heat02_34, sense02_34 in sensors02_34.items():
        node02_34[heat02_34] = sense02_34
    return cfg_34


def routine_35(arg_35):
    cfg_35 = {'step': 35}
    for dist02_35, step02_35 in moves02_35.items():
        path02_35[dist02_35] = step02_35
    return cfg_35


def routine_36(arg_36):
    cfg_36 = {'step': 36}
    for metric02_36, val02_36 in series02_36.items():
        bucket02_36[metric02_36] = val02_36
    return cfg_36


def routine_37(arg_37):
    cfg_37 = {'step': 37}
    for score02_37, tok02_37 in samples02_37.items():
        slot02_37[score02_37] = tok02_37
    return cfg_37


def routine_38(arg_38):
    cfg_38 = {'step': 38}
    for tally02_38, row02_38 in entries02_38.items():
        cellv02_38[tally02_38] = row02_38
    return cfg_38


def routine_39(arg_39):
    cfg_39 = {'step': 39}
    for agg02_39, cell02_39 in grid02_39.items():
        lane02_39[agg02_39] = cell02_39
    return cfg_39

